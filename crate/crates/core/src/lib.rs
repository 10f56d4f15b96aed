//! Exact computation, closed-form bounds, and constructive upper bounds for
//! `(k, k', k'')`-dominating sets in finite simple graphs.

pub mod bounds;
pub mod construction;
pub mod edgelist;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod params;
pub mod solver;
pub mod sweep;

pub use bounds::{
    bound_report, delta_star, lower_bound_general, lower_bound_kp_zero, prior_bounds, BoundReport,
    BoundValue, GeneralBound, PriorBound, Rational,
};
pub use construction::{
    construct_best, construct_part1, construct_part2, upper_bound, Construction, ConstructionError,
    Part,
};
pub use edgelist::{parse_edgelist, write_edgelist, ParseError};
pub use generate::{generate, Family, GenerateError};
pub use graph::{Graph, GraphError, VertexSet};
pub use oracle::{brute_force_oracle, OracleTooLarge, ORACLE_MAX_VERTICES};
pub use params::{
    is_dominating, named, trivial_feasible, violation_report, Condition, NamedParameter,
    ParamError, ParamTriple, Violation,
};
pub use solver::{solve_exact, Budget, SolveOptions, SolveResult, SolveStatus};
pub use sweep::{run_sweep, CorpusSpec, FamilyTemplate, Sweep, SweepRow, SweepSummary};
