//! Weighted-sum solvers.
//!
//! A [`SolverHandle`] wraps one backend and a sigma. Its contract: for every
//! weight vector `w` the returned solution has weighted value at most
//! `sigma` times the optimal one. Every call to [`SolverHandle::solve`] bumps
//! an atomic counter, which the algorithms report as their call count.

mod explicit;
mod graph;
mod instance;

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

pub use explicit::{optimal_set, solve_explicit_adversarial, solve_explicit_exact};
pub use graph::{solve_shortest_path, solve_spanning_tree, PathSolution, TreeSolution, UnionFind};
pub(crate) use graph::{path_id, total_cost, tree_id};
pub use instance::{
    compute_bounds, Arc, ExplicitInstance, ExplicitSolution, GraphInstance, GraphKind, Instance,
};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::types::{Bounds, Direction, ObjectiveVector, WeightVector};

/// A solver answer: a solution id and its image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Solution {
    pub id: String,
    #[serde(rename = "f")]
    pub image: ObjectiveVector,
}

impl From<&ExplicitSolution> for Solution {
    fn from(s: &ExplicitSolution) -> Self {
        Solution { id: s.id.clone(), image: s.f.clone() }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Backend<'a> {
    ExplicitExact(&'a ExplicitInstance),
    ExplicitAdversarial(&'a ExplicitInstance),
    ShortestPath(&'a GraphInstance),
    SpanningTree(&'a GraphInstance),
}

#[derive(Debug)]
pub struct SolverHandle<'a> {
    sigma: Rational,
    backend: Backend<'a>,
    calls: AtomicU64,
}

impl<'a> SolverHandle<'a> {
    pub fn exact(inst: &'a ExplicitInstance) -> Self {
        Self::with_backend(Rational::one(), Backend::ExplicitExact(inst))
    }

    pub fn adversarial(inst: &'a ExplicitInstance, sigma: Rational) -> Result<Self> {
        if sigma < Rational::one() {
            return Err(Error::ContractViolation(format!("sigma must be >= 1, got {sigma}")));
        }
        Ok(Self::with_backend(sigma, Backend::ExplicitAdversarial(inst)))
    }

    /// Exact shortest-path or spanning-tree backend, by instance kind.
    pub fn graph(inst: &'a GraphInstance) -> Self {
        let backend = match inst.kind() {
            GraphKind::ShortestPath => Backend::ShortestPath(inst),
            GraphKind::SpanningTree => Backend::SpanningTree(inst),
        };
        Self::with_backend(Rational::one(), backend)
    }

    /// The same backend under a looser contract. A `sigma`-approximation is
    /// also a `sigma'`-approximation for every `sigma' >= sigma`.
    pub fn relaxed(self, sigma: Rational) -> Result<Self> {
        if sigma < self.sigma {
            return Err(Error::ContractViolation(format!(
                "cannot tighten sigma from {} to {sigma}",
                self.sigma
            )));
        }
        Ok(Self::with_backend(sigma, self.backend))
    }

    fn with_backend(sigma: Rational, backend: Backend<'a>) -> Self {
        SolverHandle { sigma, backend, calls: AtomicU64::new(0) }
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    pub fn backend(&self) -> Backend<'a> {
        self.backend
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::SeqCst)
    }

    pub fn direction(&self) -> Direction {
        match self.backend {
            Backend::ExplicitExact(e) | Backend::ExplicitAdversarial(e) => e.direction(),
            Backend::ShortestPath(g) | Backend::SpanningTree(g) => g.direction(),
        }
    }

    pub fn p(&self) -> usize {
        match self.backend {
            Backend::ExplicitExact(e) | Backend::ExplicitAdversarial(e) => e.p(),
            Backend::ShortestPath(g) | Backend::SpanningTree(g) => g.p(),
        }
    }

    pub fn bounds(&self) -> Bounds {
        match self.backend {
            Backend::ExplicitExact(e) | Backend::ExplicitAdversarial(e) => e.bounds(),
            Backend::ShortestPath(g) | Backend::SpanningTree(g) => g.bounds(),
        }
    }

    pub fn solve(&self, w: &WeightVector) -> Result<Solution> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        match self.backend {
            Backend::ExplicitExact(e) => solve_explicit_exact(e, w),
            Backend::ExplicitAdversarial(e) => solve_explicit_adversarial(e, w, &self.sigma),
            Backend::ShortestPath(g) => {
                let p = solve_shortest_path(g, w)?;
                Ok(Solution { id: p.id(), image: p.cost })
            }
            Backend::SpanningTree(g) => {
                let t = solve_spanning_tree(g, w)?;
                Ok(Solution { id: t.id(), image: t.cost })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_solve_counts_once() {
        let inst = ExplicitInstance::from_images(
            Direction::Min,
            vec![
                ObjectiveVector::from_integers(&[1, 2]).unwrap(),
                ObjectiveVector::from_integers(&[2, 1]).unwrap(),
            ],
        )
        .unwrap();
        let solver = SolverHandle::exact(&inst);
        let w = WeightVector::from_ratios(&[(1, 1), (1, 1)]).unwrap();
        for k in 1..=3 {
            solver.solve(&w).unwrap();
            assert_eq!(solver.calls(), k);
        }
        // failing calls count too
        let bad = WeightVector::from_ratios(&[(1, 1)]).unwrap();
        assert!(solver.solve(&bad).is_err());
        assert_eq!(solver.calls(), 4);
    }

    #[test]
    fn adversarial_rejects_small_sigma() {
        let inst = ExplicitInstance::from_images(
            Direction::Min,
            vec![ObjectiveVector::from_integers(&[1, 2]).unwrap()],
        )
        .unwrap();
        assert!(SolverHandle::adversarial(&inst, Rational::new(1, 2)).is_err());
        let relaxed = SolverHandle::exact(&inst).relaxed(Rational::new(3, 2)).unwrap();
        assert_eq!(relaxed.sigma(), &Rational::new(3, 2));
        assert!(relaxed.relaxed(Rational::one()).is_err());
    }

    #[test]
    fn explicit_bounds() {
        let inst = ExplicitInstance::from_images(
            Direction::Min,
            vec![
                ObjectiveVector::from_integers(&[1, 8]).unwrap(),
                ObjectiveVector::from_integers(&[2, 2]).unwrap(),
                ObjectiveVector::from_integers(&[8, 1]).unwrap(),
            ],
        )
        .unwrap();
        let b = compute_bounds(&Instance::Explicit(inst));
        assert_eq!(b.lower(), &[Rational::one(), Rational::one()]);
        assert_eq!(b.upper(), &[Rational::from_integer(8), Rational::from_integer(8)]);

        let single = ExplicitInstance::from_images(
            Direction::Min,
            vec![ObjectiveVector::from_ratios(&[(3, 2), (7, 1)]).unwrap()],
        )
        .unwrap();
        let b = single.bounds();
        assert_eq!(b.lower(), b.upper());
    }
}
