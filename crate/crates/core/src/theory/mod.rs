//! Bounds, dualities and constructions relating offensive alliances to
//! dependent sets, τ-domination, the complement graph and Cartesian products.

pub mod bounds;
pub mod dependent;
pub mod domination;
pub mod product;
pub mod report;
pub mod tau;

pub use bounds::{
    bound_line_graph, bound_p_induced, bound_quadratic, bounds_degree, bounds_dependent_sandwich,
    bounds_product_complete_cycle_path, CompleteProductBounds, DependentSandwich,
};
pub use dependent::{alliance_to_dependent, dependent_complement_transfer, regular_dependence_equivalence};
pub use domination::{
    check_dominating_thresholds, complement_alliance_check, dominates_in_complement, dominating_size_thresholds,
    minimal_implies_complement_dominating,
};
pub use product::{
    product_global_construct, product_global_project, product_offensive_construct, product_offensive_project,
    regular_product_equivalence,
};
pub use report::{bound_report, Bound, BoundContext, BoundEntry, BoundKind, BoundRegistry, BoundReport};
pub use tau::{sum_bound_holds, tau_thresholds, TauThresholds};
