//! Weighted-sum approximation algorithms for minimization problems.

pub mod bisect;
pub mod grid;
pub mod ptas;

pub use bisect::{
    approximate_biobjective, approximate_biobjective_with_order, gamma, gamma_exponents, BiobjectiveRun,
    QueueOrder,
};
pub use grid::{
    approximate_grid, cell_of, expected_grid_calls, grid_cells, grid_exponents, grid_ladders, grid_points,
    grid_weights, refined_step, step_counts, GridCell, GridPoint, GridRun,
};
pub use ptas::{approximate_with_ptas, ptas_guarantee};
