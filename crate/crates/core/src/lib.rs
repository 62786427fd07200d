//! Multi-factor approximation of multiobjective minimization problems from
//! exact or `sigma`-approximate weighted-sum solvers.
//!
//! All arithmetic is exact over [`Rational`]. The main entry points are
//! [`approximate_grid`] (any number of objectives), [`approximate_biobjective`]
//! (two objectives, exact solver) and [`approximate_with_ptas`]; the
//! [`oracles`] module verifies their guarantees by brute force.

pub mod algorithms;
pub mod dominance;
pub mod error;
pub mod guarantee;
pub mod instances;
pub mod oracles;
pub mod rational;
pub mod solvers;
pub mod types;

pub use algorithms::{
    approximate_biobjective, approximate_biobjective_with_order, approximate_grid,
    approximate_with_ptas, expected_grid_calls, grid_weights, ptas_guarantee, BiobjectiveRun,
    GridCell, GridRun, QueueOrder,
};
pub use dominance::{approximates, dominates, factor_vector};
pub use error::{Error, Result};
pub use guarantee::{covers, GuaranteeFamily, Variant};
pub use instances::{
    gen_max_counterexample, gen_random_explicit, gen_random_graph, gen_tightness_min,
};
pub use oracles::{
    enumerate_graph, pareto_front, supported_set, verify_approximation, verify_max_impossibility,
    VerificationReport,
};
pub use rational::Rational;
pub use solvers::{
    compute_bounds, optimal_set, solve_explicit_adversarial, solve_explicit_exact,
    solve_shortest_path, solve_spanning_tree, Arc, ExplicitInstance, ExplicitSolution,
    GraphInstance, GraphKind, Instance, Solution, SolverHandle,
};
pub use types::{Bounds, Direction, FactorVector, ObjectiveVector, WeightVector};
