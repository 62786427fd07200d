//! Approximation from a geometric grid of weight vectors, any number of
//! objectives.
//!
//! With `eps' = epsilon / (sigma * p)` each objective range `[LB(j), UB(j)]`
//! is cut at `LB(j) * (1 + eps')^i` for `i = 0..=u_j`. Solving the weighted
//! sum with `w = 1/b` for a grid point `b` approximates every solution whose
//! image lies in the box `[b, (1 + eps') b]`. Shifting all exponents of a grid
//! point by their minimum only rescales `w`, so it suffices to issue the
//! points with at least one exponent zero.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guarantee::GuaranteeFamily;
use crate::rational::Rational;
use crate::solvers::{Solution, SolverHandle};
use crate::types::{Bounds, Direction, ObjectiveVector, WeightVector};

/// One issued weight vector together with its grid exponents `i_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridPoint {
    pub exponents: Vec<u32>,
    pub weight: WeightVector,
}

/// `epsilon / (sigma * p)`.
pub fn refined_step(epsilon: &Rational, sigma: &Rational, p: usize) -> Rational {
    epsilon / (sigma * Rational::from(p))
}

/// Exact powers `LB(j) * (1 + step)^i` for `i = 0..=u_j`, one ladder per
/// objective; `u_j` is the largest exponent that stays within `UB(j)`.
pub fn grid_ladders(bounds: &Bounds, step: &Rational) -> Vec<Vec<Rational>> {
    assert!(step.is_positive(), "grid step must be positive");
    let factor = Rational::one() + step;
    bounds
        .lower()
        .iter()
        .zip(bounds.upper())
        .map(|(lb, ub)| {
            let mut ladder = vec![lb.clone()];
            loop {
                let next = ladder.last().expect("nonempty") * &factor;
                if next > *ub {
                    break ladder;
                }
                ladder.push(next);
            }
        })
        .collect()
}

/// The `u_j` of every objective.
pub fn step_counts(bounds: &Bounds, step: &Rational) -> Vec<u32> {
    grid_ladders(bounds, step).iter().map(|l| (l.len() - 1) as u32).collect()
}

/// `sum_k prod_{l<k} u_l * prod_{l>k} (u_l + 1)`: the number of grid points
/// with at least one zero exponent, counted by the position of the first zero.
pub fn expected_grid_calls(u: &[u32]) -> u64 {
    (0..u.len())
        .map(|k| {
            let before: u64 = u[..k].iter().map(|&x| x as u64).product();
            let after: u64 = u[k + 1..].iter().map(|&x| x as u64 + 1).product();
            before * after
        })
        .sum()
}

/// Exponent tuples in issue order: `k` ascending, then mixed-radix order with
/// the last objective varying fastest. For a given `k`, objectives before `k`
/// range over `1..=u_l`, objective `k` is zero, objectives after `k` range
/// over `0..=u_l`.
pub fn grid_exponents(u: &[u32]) -> Vec<Vec<u32>> {
    let p = u.len();
    let mut out = Vec::with_capacity(expected_grid_calls(u) as usize);
    for k in 0..p {
        let ranges: Vec<(u32, u32)> = (0..p)
            .map(|l| match l.cmp(&k) {
                std::cmp::Ordering::Less => (1, u[l]),
                std::cmp::Ordering::Equal => (0, 0),
                std::cmp::Ordering::Greater => (0, u[l]),
            })
            .collect();
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            continue;
        }
        let mut idx: Vec<u32> = ranges.iter().map(|r| r.0).collect();
        'odometer: loop {
            out.push(idx.clone());
            for l in (0..p).rev() {
                if idx[l] < ranges[l].1 {
                    idx[l] += 1;
                    for m in l + 1..p {
                        idx[m] = ranges[m].0;
                    }
                    continue 'odometer;
                }
            }
            break;
        }
    }
    out
}

fn check_inputs(bounds: &Bounds, epsilon: &Rational, sigma: &Rational, p: usize) -> Result<()> {
    if !epsilon.is_positive() {
        return Err(Error::ContractViolation(format!("epsilon must be > 0, got {epsilon}")));
    }
    if *sigma < Rational::one() {
        return Err(Error::ContractViolation(format!("sigma must be >= 1, got {sigma}")));
    }
    if bounds.p() != p {
        return Err(Error::DimensionMismatch { expected: p, found: bounds.p() });
    }
    Ok(())
}

/// Grid points (exponents and weights) for the given bounds.
pub fn grid_points(
    bounds: &Bounds,
    epsilon: &Rational,
    sigma: &Rational,
    p: usize,
) -> Result<Vec<GridPoint>> {
    check_inputs(bounds, epsilon, sigma, p)?;
    let step = refined_step(epsilon, sigma, p);
    let ladders = grid_ladders(bounds, &step);
    let u: Vec<u32> = ladders.iter().map(|l| (l.len() - 1) as u32).collect();
    grid_exponents(&u)
        .into_iter()
        .map(|exponents| {
            let weight = WeightVector::new(
                exponents
                    .iter()
                    .zip(&ladders)
                    .map(|(&i, ladder)| ladder[i as usize].recip())
                    .collect(),
            )?;
            Ok(GridPoint { exponents, weight })
        })
        .collect()
}

/// The weight vectors issued by [`approximate_grid`], in issue order.
pub fn grid_weights(
    bounds: &Bounds,
    epsilon: &Rational,
    sigma: &Rational,
    p: usize,
) -> Result<Vec<WeightVector>> {
    Ok(grid_points(bounds, epsilon, sigma, p)?.into_iter().map(|g| g.weight).collect())
}

/// Largest exponents `t` with `LB(j) * (1 + step)^t_j <= y_j`: the grid box
/// containing `y`.
pub fn cell_of(y: &ObjectiveVector, bounds: &Bounds, step: &Rational) -> Vec<u32> {
    let factor = Rational::one() + step;
    y.iter()
        .zip(bounds.lower())
        .map(|(v, lb)| {
            let mut t = 0;
            let mut b = lb.clone();
            loop {
                let next = &b * &factor;
                if next > *v {
                    break t;
                }
                b = next;
                t += 1;
            }
        })
        .collect()
}

/// A box of the objective-space subdivision and the solution that
/// approximates everything inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub weight_index: usize,
    pub level: u32,
    pub lower: Vec<Rational>,
    pub upper: Vec<Rational>,
    pub representative: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridRun {
    pub epsilon: Rational,
    pub sigma: Rational,
    pub eps_prime: Rational,
    pub u: Vec<u32>,
    /// Issued weights in order, with their exponents.
    pub points: Vec<GridPoint>,
    /// Solver answer for each entry of `points`.
    pub answers: Vec<Solution>,
    /// Distinct answers, sorted by id.
    pub result: Vec<Solution>,
    pub ws_calls: u64,
}

impl GridRun {
    pub fn weights_issued(&self) -> impl Iterator<Item = &WeightVector> {
        self.points.iter().map(|g| &g.weight)
    }

    pub fn result_ids(&self) -> Vec<String> {
        self.result.iter().map(|s| s.id.clone()).collect()
    }

    /// The multi-factor family `(sigma, epsilon, p)` this run guarantees.
    pub fn guarantee(&self) -> GuaranteeFamily {
        GuaranteeFamily::multi_factor(self.sigma.clone(), self.epsilon.clone(), self.u.len())
            .expect("validated when the run started")
    }

    /// Subdivision of `[LB, UB]` into boxes, see [`grid_cells`].
    pub fn cells(&self, bounds: &Bounds) -> Vec<GridCell> {
        let entries: Vec<(&[u32], &str)> = self
            .points
            .iter()
            .zip(&self.answers)
            .map(|(g, a)| (g.exponents.as_slice(), a.id.as_str()))
            .collect();
        grid_cells(bounds, &self.eps_prime, &entries)
    }
}

/// Boxes represented by solved grid points: the point with exponents `i` and
/// answer `id` represents the diagonal chain
/// `[b (1+eps')^l, b (1+eps')^(l+1)]`, `b_j = LB(j) (1+eps')^(i_j)`,
/// `l = 0, 1, ...` while every `i_j + l <= u_j`.
pub fn grid_cells(bounds: &Bounds, eps_prime: &Rational, entries: &[(&[u32], &str)]) -> Vec<GridCell> {
    let ladders = grid_ladders(bounds, eps_prime);
    let factor = Rational::one() + eps_prime;
    let mut cells = Vec::new();
    for (index, (exponents, id)) in entries.iter().enumerate() {
        let headroom = exponents
            .iter()
            .zip(&ladders)
            .map(|(&i, ladder)| (ladder.len() as u32 - 1).saturating_sub(i))
            .min()
            .unwrap_or(0);
        for level in 0..=headroom {
            let lower: Vec<Rational> = exponents
                .iter()
                .zip(&ladders)
                .map(|(&i, ladder)| ladder[(i + level) as usize].clone())
                .collect();
            let upper = lower.iter().map(|b| b * &factor).collect();
            cells.push(GridCell {
                weight_index: index,
                level,
                lower,
                upper,
                representative: id.to_string(),
            });
        }
    }
    cells
}

pub(crate) fn dedup_sorted(answers: &[Solution]) -> Vec<Solution> {
    let mut result: Vec<Solution> = answers.to_vec();
    result.sort_by(|a, b| a.id.cmp(&b.id));
    result.dedup_by(|a, b| a.id == b.id);
    result
}

/// Solves the weighted sum for every grid point. Weight vectors are solved in
/// parallel on the rayon pool; the output does not depend on the schedule.
pub fn approximate_grid(
    solver: &SolverHandle<'_>,
    bounds: &Bounds,
    epsilon: &Rational,
) -> Result<GridRun> {
    if solver.direction() == Direction::Max {
        return Err(Error::MaximizationUnsupported);
    }
    let sigma = solver.sigma().clone();
    let p = solver.p();
    let points = grid_points(bounds, epsilon, &sigma, p)?;
    let eps_prime = refined_step(epsilon, &sigma, p);
    let u = step_counts(bounds, &eps_prime);

    let before = solver.calls();
    let answers: Vec<Solution> = points
        .par_iter()
        .map(|g| solver.solve(&g.weight))
        .collect::<Result<_>>()?;
    let ws_calls = solver.calls() - before;
    let result = dedup_sorted(&answers);

    Ok(GridRun { epsilon: epsilon.clone(), sigma, eps_prime, u, points, answers, result, ws_calls })
}
