//! Adaptive binary search over the biobjective weight grid.
//!
//! The `u1 + u2 + 1` grid weights of the biobjective case are equivalent to
//! `(gamma_t, 1)` with `gamma_t = LB(2)/LB(1) * (1 + eps')^(u2 - t + 1)`,
//! `eps' = epsilon / 2`. Instead of solving all of them, the search solves the
//! two extremes and then bisects index ranges `(l, r)`, skipping a range when
//! one endpoint `(1, 2 + epsilon)`- or `(2 + epsilon, 1)`-approximates the
//! other. Only exact solvers are accepted.
//!
//! The pruning tests compare solver answers with each other, not with the
//! points those answers cover, so an answer that is skipped may have been the
//! only one covering some feasible point. `oracles::verify_approximation`
//! reports such points; see `tests/algorithm_properties.rs` for an instance.
//!
//! The search develops a binary tree: the root is the initialization (two
//! solves) and every processed range is one node (one solve).

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::algorithms::grid::{dedup_sorted, grid_cells, step_counts, GridCell};
use crate::dominance::approximates;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::solvers::{Solution, SolverHandle};
use crate::types::{Bounds, Direction, FactorVector, WeightVector};

/// Which pending range is processed next. The output set does not depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QueueOrder {
    #[default]
    Fifo,
    Lifo,
}

#[derive(Debug, Clone, Serialize)]
pub struct BiobjectiveRun {
    pub epsilon: Rational,
    pub eps_prime: Rational,
    pub u1: u32,
    pub u2: u32,
    pub gamma_count: usize,
    /// `(t, (gamma_t, 1))` in the order solved.
    pub issued: Vec<(usize, WeightVector)>,
    pub answers: Vec<Solution>,
    /// Distinct members of the output set, sorted by id.
    pub result: Vec<Solution>,
    pub ws_calls: u64,
    /// Processed ranges, i.e. tree nodes below the initialization root.
    pub tree_nodes: usize,
    /// Nodes that spawned both sub-ranges.
    pub two_child_nodes: usize,
    /// Depth of the deepest node, the root being at depth zero.
    pub tree_height: usize,
}

impl BiobjectiveRun {
    pub fn result_ids(&self) -> Vec<String> {
        self.result.iter().map(|s| s.id.clone()).collect()
    }

    /// Boxes represented by the solved weights, see [`grid_cells`].
    pub fn cells(&self, bounds: &Bounds) -> Vec<GridCell> {
        let exps: Vec<[u32; 2]> = self.issued.iter().map(|(t, _)| gamma_exponents(self.u2, *t)).collect();
        let entries: Vec<(&[u32], &str)> =
            exps.iter().zip(&self.answers).map(|(e, a)| (e.as_slice(), a.id.as_str())).collect();
        grid_cells(bounds, &self.eps_prime, &entries)
    }

    /// Node bound for a binary tree of height `h` with `k` two-child nodes:
    /// `k + (k + 1) + 2 (k + 1) h`.
    pub fn tree_size_bound(&self) -> usize {
        let k = self.two_child_nodes;
        2 * k + 1 + 2 * (k + 1) * self.tree_height
    }
}

/// `gamma_t = LB(2)/LB(1) * (1 + eps')^(u2 - t + 1)` for `t = 1..=u1+u2+1`.
pub fn gamma(bounds: &Bounds, eps_prime: &Rational, u2: u32, t: usize) -> Rational {
    let ratio = &bounds.lower()[1] / &bounds.lower()[0];
    let exp = u2 as i64 - t as i64 + 1;
    ratio * (Rational::one() + eps_prime).pow(exp as i32)
}

/// Grid exponents `(i_1, i_2)` whose weight is a multiple of `(gamma_t, 1)`.
pub fn gamma_exponents(u2: u32, t: usize) -> [u32; 2] {
    let t = t as u32;
    if t <= u2 + 1 {
        [0, u2 + 1 - t]
    } else {
        [t - u2 - 1, 0]
    }
}

pub fn approximate_biobjective(
    solver: &SolverHandle<'_>,
    bounds: &Bounds,
    epsilon: &Rational,
) -> Result<BiobjectiveRun> {
    approximate_biobjective_with_order(solver, bounds, epsilon, QueueOrder::Fifo)
}

pub fn approximate_biobjective_with_order(
    solver: &SolverHandle<'_>,
    bounds: &Bounds,
    epsilon: &Rational,
    order: QueueOrder,
) -> Result<BiobjectiveRun> {
    if solver.direction() == Direction::Max {
        return Err(Error::MaximizationUnsupported);
    }
    if solver.p() != 2 || bounds.p() != 2 {
        return Err(Error::ContractViolation(format!(
            "binary search needs exactly two objectives, got {}",
            solver.p()
        )));
    }
    if *solver.sigma() != Rational::one() {
        return Err(Error::ContractViolation(format!(
            "binary search needs an exact weighted-sum solver, got sigma = {}",
            solver.sigma()
        )));
    }
    if !epsilon.is_positive() {
        return Err(Error::ContractViolation(format!("epsilon must be > 0, got {epsilon}")));
    }

    let eps_prime = epsilon / Rational::from_integer(2);
    let u = step_counts(bounds, &eps_prime);
    let (u1, u2) = (u[0], u[1]);
    let n = (u1 + u2 + 1) as usize;

    let big = Rational::from_integer(2) + epsilon;
    let one = Rational::one();
    let f12 = FactorVector::new(vec![one.clone(), big.clone()])?;
    let f21 = FactorVector::new(vec![big, one])?;
    let a12 = |a: &Solution, b: &Solution| approximates(&a.image, &b.image, &f12, Direction::Min);
    let a21 = |a: &Solution, b: &Solution| approximates(&a.image, &b.image, &f21, Direction::Min);

    let before = solver.calls();
    let mut issued = Vec::new();
    let mut answers = Vec::new();
    let mut solved: BTreeMap<usize, Solution> = BTreeMap::new();
    let mut solve_at = |t: usize, solved: &mut BTreeMap<usize, Solution>| -> Result<Solution> {
        let w = WeightVector::new(vec![gamma(bounds, &eps_prime, u2, t), Rational::one()])?;
        let x = solver.solve(&w)?;
        issued.push((t, w));
        answers.push(x.clone());
        solved.insert(t, x.clone());
        Ok(x)
    };

    let mut output: Vec<Solution> = Vec::new();
    let mut queue: VecDeque<(usize, usize, usize)> = VecDeque::new();

    let first = solve_at(1, &mut solved)?;
    if n == 1 {
        // both extremes coincide: a single weight
        output.push(first);
    } else {
        let last = solve_at(n, &mut solved)?;
        if a12(&first, &last)? {
            output.push(first);
        } else if a21(&last, &first)? {
            output.push(last);
        } else {
            output.push(first);
            output.push(last);
            if n >= 3 {
                queue.push_back((1, n, 1));
            }
        }
    }

    let (mut tree_nodes, mut two_child_nodes, mut tree_height) = (0, 0, 0);
    loop {
        let next = match order {
            QueueOrder::Fifo => queue.pop_front(),
            QueueOrder::Lifo => queue.pop_back(),
        };
        let Some((l, r, depth)) = next else { break };
        tree_nodes += 1;
        tree_height = tree_height.max(depth);

        let t = (l + r) / 2;
        let xt = solve_at(t, &mut solved)?;
        let xl = solved[&l].clone();
        let xr = solved[&r].clone();
        if !a12(&xl, &xt)? || !a21(&xr, &xt)? {
            output.push(xt.clone());
            let mut children = 0;
            if t >= l + 2 && !a12(&xl, &xt)? && !a21(&xt, &xl)? {
                queue.push_back((l, t, depth + 1));
                children += 1;
            }
            if t + 2 <= r && !a12(&xt, &xr)? && !a21(&xr, &xt)? {
                queue.push_back((t, r, depth + 1));
                children += 1;
            }
            if children == 2 {
                two_child_nodes += 1;
            }
        }
    }

    let ws_calls = solver.calls() - before;
    Ok(BiobjectiveRun {
        epsilon: epsilon.clone(),
        eps_prime,
        u1,
        u2,
        gamma_count: n,
        issued,
        answers,
        result: dedup_sorted(&output),
        ws_calls,
        tree_nodes,
        two_child_nodes,
        tree_height,
    })
}
