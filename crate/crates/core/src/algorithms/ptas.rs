//! Grid approximation on top of a `(1 + tau)`-approximate weighted-sum
//! solver, such as a PTAS for the scalarized problem.

use crate::algorithms::grid::{approximate_grid, GridRun};
use crate::error::{Error, Result};
use crate::guarantee::GuaranteeFamily;
use crate::rational::Rational;
use crate::solvers::SolverHandle;
use crate::types::Bounds;

fn check_tau(epsilon: &Rational, tau: &Rational, p: usize) -> Result<()> {
    if !tau.is_positive() || *tau >= epsilon / Rational::from(p) {
        return Err(Error::ContractViolation(format!(
            "tau must satisfy 0 < tau < epsilon / p = {}, got {tau}",
            epsilon / Rational::from(p)
        )));
    }
    Ok(())
}

/// `MultiFactor(1 + tau, epsilon - tau p, p)`, whose sum bound is `p + epsilon`.
pub fn ptas_guarantee(epsilon: &Rational, tau: &Rational, p: usize) -> Result<GuaranteeFamily> {
    check_tau(epsilon, tau, p)?;
    GuaranteeFamily::multi_factor(
        Rational::one() + tau,
        epsilon - tau * Rational::from(p),
        p,
    )
}

/// Runs the grid with `epsilon - tau p` and the supplied `(1 + tau)`-solver.
pub fn approximate_with_ptas(
    solver: &SolverHandle<'_>,
    bounds: &Bounds,
    epsilon: &Rational,
    tau: &Rational,
) -> Result<GridRun> {
    let p = solver.p();
    check_tau(epsilon, tau, p)?;
    let sigma = Rational::one() + tau;
    if *solver.sigma() != sigma {
        return Err(Error::ContractViolation(format!(
            "expected a solver with sigma = {sigma}, got {}",
            solver.sigma()
        )));
    }
    approximate_grid(solver, bounds, &(epsilon - tau * Rational::from(p)))
}
