//! Weighted-sum backends over an explicit list of solutions.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::solvers::instance::{ExplicitInstance, ExplicitSolution};
use crate::solvers::Solution;
use crate::types::{check_dim, Direction, WeightVector};

fn scored<'a>(
    inst: &'a ExplicitInstance,
    w: &WeightVector,
) -> Result<Vec<(Rational, &'a ExplicitSolution)>> {
    check_dim(inst.p(), w.len())?;
    inst.solutions()
        .iter()
        .map(|s| Ok((s.f.weighted_sum(w)?, s)))
        .collect()
}

/// Deterministic tie-break: lexicographically smallest image, then smallest id.
fn tie_break(a: &ExplicitSolution, b: &ExplicitSolution) -> Ordering {
    a.f.cmp(&b.f).then_with(|| a.id.cmp(&b.id))
}

/// Optimal solution of the weighted-sum problem (minimizing for `Min`
/// instances, maximizing for `Max`).
pub fn solve_explicit_exact(inst: &ExplicitInstance, w: &WeightVector) -> Result<Solution> {
    let scores = scored(inst, w)?;
    let best = scores
        .iter()
        .min_by(|(va, a), (vb, b)| {
            let by_value = match inst.direction() {
                Direction::Min => va.cmp(vb),
                Direction::Max => vb.cmp(va),
            };
            by_value.then_with(|| tie_break(a, b))
        })
        .ok_or_else(|| Error::ContractViolation("empty instance".into()))?;
    Ok(Solution::from(best.1))
}

/// Worst answer that still honours the sigma contract: among solutions with
/// weighted value at most `sigma * opt`, the one with the largest value.
pub fn solve_explicit_adversarial(
    inst: &ExplicitInstance,
    w: &WeightVector,
    sigma: &Rational,
) -> Result<Solution> {
    if inst.direction() != Direction::Min {
        return Err(Error::MaximizationUnsupported);
    }
    if *sigma < Rational::one() {
        return Err(Error::ContractViolation(format!("sigma must be >= 1, got {sigma}")));
    }
    let scores = scored(inst, w)?;
    let opt = scores
        .iter()
        .map(|(v, _)| v)
        .min()
        .cloned()
        .ok_or_else(|| Error::ContractViolation("empty instance".into()))?;
    let limit = sigma * &opt;
    let worst = scores
        .iter()
        .filter(|(v, _)| *v <= limit)
        .min_by(|(va, a), (vb, b)| vb.cmp(va).then_with(|| tie_break(a, b)))
        .expect("the optimum is always admissible");
    Ok(Solution::from(worst.1))
}

/// Ids of every optimal solution of the weighted-sum problem.
pub fn optimal_set(inst: &ExplicitInstance, w: &WeightVector) -> Result<BTreeSet<String>> {
    let scores = scored(inst, w)?;
    let best = match inst.direction() {
        Direction::Min => scores.iter().map(|(v, _)| v).min(),
        Direction::Max => scores.iter().map(|(v, _)| v).max(),
    }
    .cloned()
    .ok_or_else(|| Error::ContractViolation("empty instance".into()))?;
    Ok(scores
        .into_iter()
        .filter(|(v, _)| *v == best)
        .map(|(_, s)| s.id.clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::ObjectiveVector;

    fn three_points() -> ExplicitInstance {
        ExplicitInstance::from_images(
            Direction::Min,
            vec![
                ObjectiveVector::from_integers(&[1, 8]).unwrap(),
                ObjectiveVector::from_integers(&[2, 2]).unwrap(),
                ObjectiveVector::from_integers(&[8, 1]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn w(xs: &[(i64, i64)]) -> WeightVector {
        WeightVector::from_ratios(xs).unwrap()
    }

    #[test]
    fn exact_examples() {
        let inst = three_points();
        // scalar values 9, 4, 9
        let s = solve_explicit_exact(&inst, &w(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(s.image, ObjectiveVector::from_integers(&[2, 2]).unwrap());
        // scalar values 2, 9/4, 65/8
        let s = solve_explicit_exact(&inst, &w(&[(1, 1), (1, 8)])).unwrap();
        assert_eq!(s.image, ObjectiveVector::from_integers(&[1, 8]).unwrap());
        assert_eq!(s.image.weighted_sum(&w(&[(1, 1), (1, 8)])).unwrap(), Rational::from_integer(2));

        let single = ExplicitInstance::from_images(
            Direction::Min,
            vec![ObjectiveVector::from_integers(&[3, 5]).unwrap()],
        )
        .unwrap();
        assert_eq!(solve_explicit_exact(&single, &w(&[(7, 3), (1, 9)])).unwrap().id, "x0");
    }

    #[test]
    fn exact_breaks_ties_lexicographically() {
        // (1,8) and (8,1) tie at 9 under w = (1,1) when (2,2) is absent
        let inst = ExplicitInstance::from_images(
            Direction::Min,
            vec![
                ObjectiveVector::from_integers(&[8, 1]).unwrap(),
                ObjectiveVector::from_integers(&[1, 8]).unwrap(),
            ],
        )
        .unwrap();
        let s = solve_explicit_exact(&inst, &w(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(s.id, "x1");
    }

    #[test]
    fn adversarial_examples() {
        let inst = three_points();
        let ones = w(&[(1, 1), (1, 1)]);
        let s = solve_explicit_adversarial(&inst, &ones, &Rational::one()).unwrap();
        assert_eq!(s.id, "x1");
        // 9 <= (9/4) * 4; (1,8) wins the tie against (8,1)
        let s = solve_explicit_adversarial(&inst, &ones, &Rational::new(9, 4)).unwrap();
        assert_eq!(s.id, "x0");
        // 9 > 2 * 4
        let s = solve_explicit_adversarial(&inst, &ones, &Rational::from_integer(2)).unwrap();
        assert_eq!(s.id, "x1");
        assert!(solve_explicit_adversarial(&inst, &ones, &Rational::new(1, 2)).is_err());
    }

    #[test]
    fn maximization_exact_and_optimal_set() {
        let inst = ExplicitInstance::from_images(
            Direction::Max,
            vec![
                ObjectiveVector::from_integers(&[1, 8]).unwrap(),
                ObjectiveVector::from_integers(&[8, 1]).unwrap(),
                ObjectiveVector::from_integers(&[2, 2]).unwrap(),
            ],
        )
        .unwrap();
        let ones = w(&[(1, 1), (1, 1)]);
        assert_eq!(solve_explicit_exact(&inst, &ones).unwrap().id, "x0");
        assert_eq!(
            optimal_set(&inst, &ones).unwrap(),
            BTreeSet::from(["x0".to_string(), "x1".to_string()])
        );
        assert_eq!(
            solve_explicit_adversarial(&inst, &ones, &Rational::one()),
            Err(Error::MaximizationUnsupported)
        );
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let inst = three_points();
        assert!(solve_explicit_exact(&inst, &w(&[(1, 1), (1, 1), (1, 1)])).is_err());
    }
}
