use alliance_core::alliances::{
    is_dominating, k_range, meets_global_condition, meets_offensive_condition, AllianceQuery,
};
use alliance_core::edgelist;
use alliance_core::graph::product_set;
use alliance_core::solvers::{BranchAndBound, Greedy, Oracle};
use alliance_core::theory::{complement_alliance_check, dominates_in_complement};
use alliance_core::{Graph, Solver, VertexSet};
use proptest::prelude::*;

fn graph_from(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from(n, &bits))
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), 1u64..1 << n).prop_map(move |(g, mask)| (g, VertexSet::from_mask(n, mask)))
    })
}

/// Neighbours of v in S, counted straight from the adjacency relation.
fn count_in(g: &Graph, v: usize, s: &VertexSet) -> i64 {
    (0..g.n()).filter(|&u| s.contains(u) && g.has_edge(u, v)).count() as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn inside_plus_outside_is_degree((g, s) in graph_and_set(10)) {
        for v in 0..g.n() {
            prop_assert_eq!(g.degree_in(v, &s) + g.degree_outside(v, &s), g.degree(v));
            prop_assert_eq!(g.degree_in(v, &s) as i64, count_in(&g, v, &s));
        }
    }

    #[test]
    fn both_forms_of_the_alliance_condition_agree((g, s) in graph_and_set(8), k in -8i64..=8) {
        let outside = s.complement();
        let boundary: Vec<usize> = outside.iter().filter(|&v| count_in(&g, v, &s) > 0).collect();
        let first = boundary.iter().all(|&v| count_in(&g, v, &s) >= count_in(&g, v, &outside) + k);
        let second = boundary.iter().all(|&v| g.degree(v) as i64 >= 2 * count_in(&g, v, &outside) + k);
        prop_assert_eq!(first, second);
        prop_assert_eq!(meets_offensive_condition(&g, &s, k), first);
    }

    #[test]
    fn boundary_and_domination((g, s) in graph_and_set(10)) {
        let boundary = g.boundary(&s).unwrap();
        prop_assert!(boundary.is_subset(&s.complement()));
        prop_assert_eq!(is_dominating(&g, &s).unwrap(), s.union(&boundary).is_full());
        for k in 1..=3 {
            if boundary == s.complement() {
                prop_assert_eq!(meets_offensive_condition(&g, &s, k), meets_global_condition(&g, &s, k));
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let comp = g.complement();
        prop_assert_eq!(comp.complement(), g.clone());
        prop_assert_eq!(g.m() + comp.m(), g.n() * (g.n() - 1) / 2);
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    prop_assert_ne!(g.has_edge(u, v), comp.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn product_degrees_add(g1 in graph(5), g2 in graph(5)) {
        let p = g1.cartesian_product(&g2);
        let n2 = g2.n();
        prop_assert_eq!(p.n(), g1.n() * n2);
        prop_assert_eq!(p.m(), g1.m() * n2 + g2.m() * g1.n());
        for i in 0..g1.n() {
            for j in 0..n2 {
                prop_assert_eq!(p.degree(i * n2 + j), g1.degree(i) + g2.degree(j));
            }
        }
        let s1 = VertexSet::from_members(g1.n(), [0]);
        let s2 = VertexSet::full(n2);
        prop_assert_eq!(product_set(&s1, &s2).to_vec(), (0..n2).collect::<Vec<_>>());
    }

    #[test]
    fn edge_list_round_trip(g in graph(14)) {
        let text = edgelist::write(&g);
        let back = edgelist::parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(edgelist::write(&back), text);
    }

    #[test]
    fn complement_inequality_matches_direct_check((g, s) in graph_and_set(8), k in -8i64..=8) {
        if dominates_in_complement(&g, &s) {
            prop_assert_eq!(
                complement_alliance_check(&g, &s, k).unwrap(),
                meets_global_condition(&g.complement(), &s, k)
            );
        } else {
            prop_assert!(complement_alliance_check(&g, &s, k).is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn branch_and_bound_matches_oracle(g in graph(11), global in any::<bool>()) {
        prop_assume!(g.max_degree() > 0);
        let (lo, hi) = k_range(&g).unwrap();
        let oracle = Oracle::default();
        for k in lo..=hi {
            let q = AllianceQuery::new(&g, k, global).unwrap();
            let exact = oracle.solve(&q).unwrap();
            let bnb = BranchAndBound::new().solve(&q).unwrap();
            prop_assert_eq!(bnb.value, exact.value);
            prop_assert_eq!(&bnb.witness, &exact.witness);
            let greedy = Greedy.solve(&q).unwrap();
            prop_assert!(greedy.value >= exact.value);
            prop_assert!(q.accepts(&greedy.witness).unwrap());
        }
    }

    #[test]
    fn minimum_alliances_are_monotone_in_k(g in graph(9)) {
        prop_assume!(g.max_degree() > 0);
        let oracle = Oracle::default();
        let (lo, hi) = k_range(&g).unwrap();
        let gamma = oracle.domination(&g).unwrap().value;
        let mut prev = gamma;
        for k in lo..=hi {
            let gk = oracle.gamma_k(&g, k).unwrap().value;
            prop_assert!(gk >= prev);
            prop_assert!(gk >= oracle.a_k(&g, k).unwrap().value);
            prev = gk;
        }
    }
}
