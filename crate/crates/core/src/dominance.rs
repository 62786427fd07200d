//! Dominance and componentwise approximation factors.

use crate::error::Result;
use crate::rational::Rational;
use crate::types::{check_dim, Direction, FactorVector, ObjectiveVector};

/// `a` dominates `b`: `a != b` and `a` is at least as good in every objective.
pub fn dominates(a: &ObjectiveVector, b: &ObjectiveVector, d: Direction) -> Result<bool> {
    check_dim(a.len(), b.len())?;
    let weakly = a.iter().zip(b.iter()).all(|(x, y)| match d {
        Direction::Min => x <= y,
        Direction::Max => x >= y,
    });
    Ok(weakly && a != b)
}

/// Smallest factor vector with which `candidate` approximates `target`.
///
/// Components are clipped at one: a candidate that is better than the target
/// in some objective still gets factor one there.
pub fn factor_vector(
    candidate: &ObjectiveVector,
    target: &ObjectiveVector,
    d: Direction,
) -> Result<FactorVector> {
    check_dim(candidate.len(), target.len())?;
    let one = Rational::one();
    let factors = candidate
        .iter()
        .zip(target.iter())
        .map(|(c, t)| {
            let ratio = match d {
                Direction::Min => c / t,
                Direction::Max => t / c,
            };
            ratio.max(one.clone())
        })
        .collect();
    Ok(FactorVector::from_vec_unchecked(factors))
}

/// `candidate` `alpha`-approximates `target`.
pub fn approximates(
    candidate: &ObjectiveVector,
    target: &ObjectiveVector,
    alpha: &FactorVector,
    d: Direction,
) -> Result<bool> {
    factor_vector(candidate, target, d)?.le(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> ObjectiveVector {
        ObjectiveVector::from_integers(xs).unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&v(&[1, 1]), &v(&[1, 2]), Direction::Min).unwrap());
        assert!(!dominates(&v(&[1, 2]), &v(&[2, 1]), Direction::Min).unwrap());
        assert!(dominates(&v(&[2, 2]), &v(&[1, 1]), Direction::Max).unwrap());
        assert!(!dominates(&v(&[1, 1]), &v(&[1, 1]), Direction::Min).unwrap());
    }

    #[test]
    fn dominance_rejects_mixed_dimensions() {
        assert_eq!(
            dominates(&v(&[1, 1]), &v(&[1, 1, 1]), Direction::Min),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn factor_vector_examples() {
        assert_eq!(
            factor_vector(&v(&[3, 4]), &v(&[1, 4]), Direction::Min).unwrap(),
            FactorVector::from_ratios(&[(3, 1), (1, 1)]).unwrap()
        );
        // tightness construction at p = 2, M = 4: ratio p*M/(M+1) = 8/5
        let candidate = ObjectiveVector::from_ratios(&[(4, 1), (1, 2)]).unwrap();
        let target = ObjectiveVector::from_ratios(&[(5, 2), (5, 2)]).unwrap();
        assert_eq!(
            factor_vector(&candidate, &target, Direction::Min).unwrap(),
            FactorVector::from_ratios(&[(8, 5), (1, 1)]).unwrap()
        );
        let y = v(&[7, 3, 5]);
        assert_eq!(factor_vector(&y, &y, Direction::Max).unwrap(), FactorVector::ones(3));
    }

    #[test]
    fn approximates_examples() {
        let a14 = FactorVector::from_ratios(&[(1, 1), (4, 1)]).unwrap();
        let a41 = FactorVector::from_ratios(&[(4, 1), (1, 1)]).unwrap();
        assert!(approximates(&v(&[1, 8]), &v(&[2, 2]), &a14, Direction::Min).unwrap());
        assert!(!approximates(&v(&[8, 1]), &v(&[1, 8]), &a41, Direction::Min).unwrap());
        let y = v(&[5, 6]);
        assert!(approximates(&y, &y, &FactorVector::ones(2), Direction::Min).unwrap());
    }

    fn point(p: usize) -> impl Strategy<Value = ObjectiveVector> {
        proptest::collection::vec(1i64..6, p).prop_map(|xs| v(&xs))
    }

    fn direction() -> impl Strategy<Value = Direction> {
        prop_oneof![Just(Direction::Min), Just(Direction::Max)]
    }

    proptest! {
        #[test]
        fn dominance_is_a_strict_partial_order(
            a in point(3), b in point(3), c in point(3), d in direction()
        ) {
            prop_assert!(!dominates(&a, &a, d).unwrap());
            if dominates(&a, &b, d).unwrap() {
                prop_assert!(!dominates(&b, &a, d).unwrap());
                if dominates(&b, &c, d).unwrap() {
                    prop_assert!(dominates(&a, &c, d).unwrap());
                }
            }
        }

        #[test]
        fn factor_vector_is_the_tightest_alpha(a in point(3), b in point(3), d in direction()) {
            let beta = factor_vector(&a, &b, d).unwrap();
            prop_assert!(beta.iter().all(|x| *x >= Rational::one()));
            prop_assert!(approximates(&a, &b, &beta, d).unwrap());
            // shrinking any component that is above one breaks the relation
            for j in 0..beta.len() {
                if beta[j] > Rational::one() {
                    let mut smaller = beta.clone().into_inner();
                    smaller[j] = (&smaller[j] + Rational::one()) / Rational::from_integer(2);
                    let smaller = FactorVector::new(smaller).unwrap();
                    prop_assert!(!approximates(&a, &b, &smaller, d).unwrap());
                }
            }
            prop_assert_eq!(factor_vector(&a, &a, d).unwrap(), FactorVector::ones(3));
        }
    }
}
