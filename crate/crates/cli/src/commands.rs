use std::fs;
use std::path::{Path, PathBuf};

use alliance_core::alliances::{AllianceQuery, Predicate};
use alliance_core::edgelist;
use alliance_core::families::{bipartite_case, gamma_complete, gamma_cycle, gamma_path};
use alliance_core::generators::{complete, complete_bipartite, cycle, path, GenSpec};
use alliance_core::solvers::Oracle;
use alliance_core::theory::{
    bounds_product_complete_cycle_path, product_global_construct, product_offensive_construct, BoundRegistry,
};
use alliance_core::verify::cases::{run_case, run_family, FamilySpec};
use alliance_core::verify::{CheckRegistry, CorpusSpec, Status, VerifyReport};
use alliance_core::{Error, Graph, Rational, SolverRegistry, VertexSet};
use anyhow::Context;
use serde_json::{json, Value};

use crate::report::{sha256_hex, RunReport};
use crate::{FamilyName, GraphInput, MethodName, PredicateName};

/// A finished command: the report and the process exit code.
pub struct Finished {
    pub report: RunReport,
    pub code: u8,
}

impl Finished {
    fn ok(report: RunReport) -> Self {
        Self { report, code: 0 }
    }
}

pub struct Loaded {
    pub graph: Graph,
    pub seed: Option<u64>,
}

fn spec_seed(spec: &GenSpec) -> Option<u64> {
    match spec {
        GenSpec::Gnp { seed, .. } => Some(*seed),
        GenSpec::Product(a, b) => spec_seed(a).or_else(|| spec_seed(b)),
        GenSpec::LineGraph(a) | GenSpec::Complement(a) => spec_seed(a),
        _ => None,
    }
}

pub fn load(input: &GraphInput) -> anyhow::Result<Loaded> {
    if let Some(file) = &input.graph {
        let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
        let graph = edgelist::parse(&text).with_context(|| format!("parsing {}", file.display()))?;
        return Ok(Loaded { graph, seed: None });
    }
    let text = input.generator.as_deref().expect("clap requires one input");
    let spec: GenSpec = text.parse()?;
    Ok(Loaded { graph: spec.build()?, seed: spec_seed(&spec) })
}

fn graph_digest(g: &Graph) -> String {
    sha256_hex(edgelist::write(g).as_bytes())
}

/// One registered solver whose results come back as JSON.
struct Runner {
    registry: SolverRegistry,
    name: &'static str,
}

impl Runner {
    fn new(method: MethodName, cap: usize) -> anyhow::Result<Self> {
        let registry = SolverRegistry::builtin(cap)?;
        let name = method.registry_name();
        anyhow::ensure!(registry.get(name).is_some(), "solver `{name}` is not registered");
        Ok(Self { registry, name })
    }

    fn run(&self, q: &AllianceQuery<'_>) -> alliance_core::Result<Value> {
        let s = self.registry.get(self.name).expect("checked in new");
        let r = s.solve(q)?;
        let mut v = serde_json::to_value(&r).expect("plain data");
        v["exact"] = json!(s.is_exact());
        Ok(v)
    }
}

/// Solver output, or the reason it was not computed when the graph is over
/// the oracle cap.
fn solved_or_skipped(r: alliance_core::Result<Value>) -> anyhow::Result<Value> {
    match r {
        Ok(v) => Ok(v),
        Err(e @ Error::OracleCap { .. }) => Ok(json!({ "skipped": e.to_string() })),
        Err(e) => Err(e.into()),
    }
}

pub fn solve(
    argv: Vec<String>,
    input: &GraphInput,
    k: i64,
    global: bool,
    method: MethodName,
    cap: usize,
) -> anyhow::Result<Finished> {
    let Loaded { graph, seed } = load(input)?;
    let query = AllianceQuery::new(&graph, k, global)?;
    let runner = Runner::new(method, cap)?;
    let mut results = runner.run(&query)?;
    results["k"] = json!(k);
    results["global"] = json!(global);
    results["n"] = json!(graph.n());
    results["m"] = json!(graph.m());
    let mut report = RunReport::new(argv, graph_digest(&graph), results)?;
    report.seed = seed;
    Ok(Finished::ok(report))
}

pub fn read_set_file(path: &Path) -> anyhow::Result<Vec<usize>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut members = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v =
                tok.parse().map_err(|_| Error::Parse { line: i + 1, msg: format!("`{tok}` is not a vertex index") })?;
            members.push(v);
        }
    }
    Ok(members)
}

fn predicate(name: PredicateName, k: Option<i64>, r: Option<i64>, tau: Option<&str>) -> anyhow::Result<Predicate> {
    let need_k = || k.ok_or_else(|| Error::InvalidParameter("this predicate needs -k".into()));
    Ok(match name {
        PredicateName::Dominating => Predicate::Dominating,
        PredicateName::Offensive => Predicate::Offensive { k: need_k()? },
        PredicateName::GlobalOffensive => Predicate::GlobalOffensive { k: need_k()? },
        PredicateName::RDependent => {
            Predicate::RDependent { r: r.ok_or_else(|| Error::InvalidParameter("r-dependent needs -r".into()))? }
        }
        PredicateName::TauDominating => {
            let text = tau.ok_or_else(|| Error::InvalidParameter("tau-dominating needs --tau".into()))?;
            let tau: Rational =
                text.parse().map_err(|_| Error::InvalidParameter(format!("`{text}` is not a fraction like 1/2")))?;
            Predicate::TauDominating { tau }
        }
    })
}

pub struct CheckArgs<'a> {
    pub input: &'a GraphInput,
    pub members: Vec<usize>,
    pub name: PredicateName,
    pub k: Option<i64>,
    pub r: Option<i64>,
    pub tau: Option<&'a str>,
}

pub fn check(argv: Vec<String>, args: CheckArgs<'_>) -> anyhow::Result<Finished> {
    let Loaded { graph, seed } = load(args.input)?;
    let set = VertexSet::try_from_members(graph.n(), args.members)?;
    let pred = predicate(args.name, args.k, args.r, args.tau)?;
    let holds = pred.check(&graph, &set)?;
    let violations = pred.violations(&graph, &set)?;
    let results = json!({
        "predicate": args.name.as_str(),
        "k": args.k,
        "r": args.r,
        "tau": args.tau,
        "set": set,
        "holds": holds,
        "violations": violations,
    });
    let mut report = RunReport::new(argv, graph_digest(&graph), results)?;
    report.seed = seed;
    Ok(Finished::ok(report))
}

pub fn bounds(argv: Vec<String>, input: &GraphInput, k: i64, cap: usize) -> anyhow::Result<Finished> {
    let Loaded { graph, seed } = load(input)?;
    let oracle = Oracle::with_cap(cap)?;
    let report = BoundRegistry::builtin().report(&graph, k, &oracle)?;
    report.check_consistency()?;
    let mut results = serde_json::to_value(&report)?;
    results["best_lower"] = json!(report.best_lower());
    results["best_upper"] = json!(report.best_upper());
    results["n"] = json!(graph.n());
    results["m"] = json!(graph.m());
    let mut run = RunReport::new(argv, graph_digest(&graph), results)?;
    run.seed = seed;
    Ok(Finished::ok(run))
}

pub fn family(argv: Vec<String>, name: FamilyName, sizes: &[usize], k: i64, cap: usize) -> anyhow::Result<Finished> {
    let want = if name == FamilyName::Bipartite { 2 } else { 1 };
    if sizes.len() != want {
        return Err(
            Error::InvalidParameter(format!("{} takes {want} size(s), got {}", name.as_str(), sizes.len())).into()
        );
    }
    let (value, case, graph) = match name {
        FamilyName::Complete => (gamma_complete(sizes[0], k)?, None, complete(sizes[0])?),
        FamilyName::Cycle => (gamma_cycle(sizes[0], k)?, None, cycle(sizes[0])?),
        FamilyName::Path => (gamma_path(sizes[0], k)?, None, path(sizes[0])?),
        FamilyName::Bipartite => {
            let (case, value) = bipartite_case(sizes[0], sizes[1], k)?;
            (value, Some(case.label().to_string()), complete_bipartite(sizes[0], sizes[1])?)
        }
    };
    let oracle = Oracle::with_cap(cap)?;
    let exact = solved_or_skipped(oracle.gamma_k(&graph, k).map(|r| json!(r.value)))?;
    let agrees = exact.as_u64().map(|x| x as usize == value);
    let results = json!({
        "family": name.as_str(),
        "sizes": sizes,
        "k": k,
        "value": value,
        "case": case,
        "oracle": exact,
        "agrees": agrees,
    });
    Ok(Finished::ok(RunReport::new(argv, graph_digest(&graph), results)?))
}

pub struct ProductArgs<'a> {
    pub left: &'a str,
    pub right: &'a str,
    pub k: i64,
    pub k2: Option<i64>,
    pub method: MethodName,
    pub cap: usize,
}

fn factor_summary(spec: &GenSpec, g: &Graph) -> Value {
    json!({
        "spec": spec.to_string(),
        "n": g.n(),
        "m": g.m(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
    })
}

pub fn product(argv: Vec<String>, args: ProductArgs<'_>) -> anyhow::Result<Finished> {
    let (ls, rs): (GenSpec, GenSpec) = (args.left.parse()?, args.right.parse()?);
    let (g1, g2) = (ls.build()?, rs.build()?);
    let prod = g1.cartesian_product(&g2);
    let runner = Runner::new(args.method, args.cap)?;
    let k = args.k;

    // global: S × V₂ from a γₖ set of the left factor
    let factor = runner.run(&AllianceQuery::global(&g1, k)?)?;
    let members: Vec<usize> = serde_json::from_value(factor["witness"].clone())?;
    let s = VertexSet::from_members(g1.n(), members);
    let (x, k_prod) = product_global_construct(&g1, &s, k, &g2)?;
    let exact = solved_or_skipped(runner.run(&AllianceQuery::global(&prod, k_prod)?))?;
    let global = json!({
        "factor": factor,
        "construction": { "set": x, "k": k_prod },
        "upper_bound": g2.n() * s.len(),
        "product": exact,
    });

    let offensive = match args.k2 {
        None => Value::Null,
        Some(k2) => {
            let left = runner.run(&AllianceQuery::offensive(&g1, k)?)?;
            let right = runner.run(&AllianceQuery::offensive(&g2, k2)?)?;
            let s1: Vec<usize> = serde_json::from_value(left["witness"].clone())?;
            let s2: Vec<usize> = serde_json::from_value(right["witness"].clone())?;
            let (s1, s2) = (VertexSet::from_members(g1.n(), s1), VertexSet::from_members(g2.n(), s2));
            let (x, k_prod) = product_offensive_construct(&g1, &s1, k, &g2, &s2, k2)?;
            let exact = match AllianceQuery::offensive(&prod, k_prod) {
                Ok(q) => solved_or_skipped(runner.run(&q))?,
                Err(e) => json!({ "skipped": e.to_string() }),
            };
            json!({
                "left": left,
                "right": right,
                "construction": { "set": x, "k": k_prod },
                "upper_bound": s1.len() * s2.len(),
                "product": exact,
            })
        }
    };

    let complete_bounds = match (&ls, &rs) {
        (GenSpec::Complete(n), GenSpec::Cycle(t) | GenSpec::Path(t)) => {
            match bounds_product_complete_cycle_path(*n as i64, *t as i64, k) {
                Ok(b) => {
                    let (lo, hi) =
                        if matches!(rs, GenSpec::Cycle(_)) { b.cycle.expect("cycles have t ≥ 3") } else { b.path };
                    let exact = solved_or_skipped(runner.run(&AllianceQuery::global(&prod, k)?))?;
                    json!({ "k": k, "lower": lo, "upper": hi, "product": exact })
                }
                Err(e) => json!({ "skipped": e.to_string() }),
            }
        }
        _ => Value::Null,
    };

    let results = json!({
        "left": factor_summary(&ls, &g1),
        "right": factor_summary(&rs, &g2),
        "product_order": prod.n(),
        "k": k,
        "global": global,
        "offensive": offensive,
        "complete_bounds": complete_bounds,
    });
    let mut report = RunReport::new(argv, graph_digest(&prod), results)?;
    report.seed = spec_seed(&ls).or_else(|| spec_seed(&rs));
    Ok(Finished::ok(report))
}

pub struct VerifyArgs<'a> {
    pub corpora: &'a [String],
    pub families: &'a [String],
    pub cases: &'a [String],
    pub checks: Option<&'a [String]>,
    pub cap: usize,
}

pub fn verify(argv: Vec<String>, args: VerifyArgs<'_>) -> anyhow::Result<Finished> {
    let oracle = Oracle::with_cap(args.cap)?;
    let mut registry = CheckRegistry::builtin();
    if let Some(names) = args.checks {
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        registry = registry.select(&names)?;
    }
    let mut descriptors = Vec::new();
    let mut seed = None;
    let mut verdicts = Vec::new();
    let mut instances = Vec::new();
    for text in args.corpora {
        let corpus: CorpusSpec = text.parse()?;
        if let CorpusSpec::Random { seed: s, .. } = corpus {
            seed = seed.or(Some(s));
        }
        descriptors.push(format!("corpus {corpus}"));
        let built = corpus.instances(&oracle)?;
        verdicts.extend(registry.run(&built, &oracle));
        instances.extend(built.into_iter().map(|i| json!({ "id": i.id, "spec": i.spec })));
    }
    for text in args.families {
        let spec: FamilySpec = text.parse()?;
        descriptors.push(format!("family {spec}"));
        verdicts.extend(run_family(spec, &oracle)?);
    }
    for name in args.cases {
        descriptors.push(format!("case {name}"));
        verdicts.extend(run_case(name, &oracle)?);
    }
    let report = VerifyReport::new(verdicts);
    for v in report.verdicts.iter().filter(|v| matches!(v.status, Status::Fail | Status::Discrepancy)) {
        eprintln!("{v}");
    }
    let count = |s: Status| report.verdicts.iter().filter(|v| v.status == s).count();
    eprintln!(
        "verify: {} verdicts, {} pass, {} discrepancy-check, {} skipped, {} fail",
        report.verdicts.len(),
        count(Status::Pass),
        count(Status::Discrepancy),
        count(Status::Skipped),
        count(Status::Fail)
    );
    let code = if report.failed() { 1 } else { 0 };
    let results = json!({
        "instances": instances,
        "verdicts": report.verdicts,
        "summary": report.summary,
        "failed": report.failed(),
    });
    let mut run = RunReport::new(argv, sha256_hex(descriptors.join("\n").as_bytes()), results)?;
    run.seed = seed;
    Ok(Finished { report: run, code })
}

pub enum Generated {
    /// No `--out`: the edge list goes to standard output.
    EdgeList(String),
    Written(Finished),
}

pub fn generate(argv: Vec<String>, text: &str, out: Option<&PathBuf>) -> anyhow::Result<Generated> {
    let spec: GenSpec = text.parse()?;
    let graph = spec.build()?;
    let body = edgelist::write(&graph);
    let Some(out) = out else {
        return Ok(Generated::EdgeList(body));
    };
    fs::write(out, &body).with_context(|| format!("writing {}", out.display()))?;
    let results = json!({
        "spec": spec.to_string(),
        "n": graph.n(),
        "m": graph.m(),
        "out": out.display().to_string(),
        "edge_list_sha256": sha256_hex(body.as_bytes()),
    });
    let mut report = RunReport::new(argv, graph_digest(&graph), results)?;
    report.seed = spec_seed(&spec);
    Ok(Generated::Written(Finished::ok(report)))
}
