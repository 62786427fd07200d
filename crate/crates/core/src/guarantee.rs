//! Families of admissible factor vectors and the coverage predicate.
//!
//! A family describes a set `A` of factor vectors. A factor vector `beta`
//! (the tightest factors of one solution against a target) is *covered* when
//! some `alpha` in `A` dominates it componentwise, i.e. the solution
//! `alpha`-approximates the target.
//!
//! * `MultiFactor`: `A = { alpha >= 1 : alpha_i <= sigma for some i,
//!   sum_{j : alpha_j > 1} alpha_j = S }` with `S = sigma * p + epsilon`
//!   (or a raw `S` for tightness experiments).
//! * `Uniform`: the single vector `(B, ..., B)` with `B = sigma * p + epsilon`
//!   (or a raw `B`).
//! * `DisjunctiveBiobjective`: `{(1, 2 + epsilon), (2 + epsilon, 1)}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::types::{check_dim, FactorVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    MultiFactor,
    Uniform,
    DisjunctiveBiobjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuaranteeFamily {
    variant: Variant,
    p: usize,
    sigma: Rational,
    /// `None` when the family was built from a raw bound.
    epsilon: Option<Rational>,
    /// Sum bound `S` (multi-factor), per-objective bound `B` (uniform), or
    /// the larger factor `2 + epsilon` (disjunctive).
    bound: Rational,
}

fn check_p(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::ContractViolation(format!("need p >= 2 objectives, got {p}")));
    }
    Ok(())
}

fn check_sigma(sigma: &Rational) -> Result<()> {
    if *sigma < Rational::one() {
        return Err(Error::ContractViolation(format!("sigma must be >= 1, got {sigma}")));
    }
    Ok(())
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if !epsilon.is_positive() {
        return Err(Error::ContractViolation(format!("epsilon must be > 0, got {epsilon}")));
    }
    Ok(())
}

impl GuaranteeFamily {
    /// The main multi-factor family with sum bound `sigma * p + epsilon`.
    pub fn multi_factor(sigma: Rational, epsilon: Rational, p: usize) -> Result<Self> {
        check_p(p)?;
        check_sigma(&sigma)?;
        check_epsilon(&epsilon)?;
        let bound = &sigma * Rational::from(p) + &epsilon;
        Ok(GuaranteeFamily { variant: Variant::MultiFactor, p, sigma, epsilon: Some(epsilon), bound })
    }

    /// Multi-factor family with an arbitrary positive sum bound, e.g. `p - epsilon`.
    pub fn multi_factor_with_sum_bound(sigma: Rational, sum_bound: Rational, p: usize) -> Result<Self> {
        check_p(p)?;
        check_sigma(&sigma)?;
        if !sum_bound.is_positive() {
            return Err(Error::ContractViolation(format!("sum bound must be > 0, got {sum_bound}")));
        }
        Ok(GuaranteeFamily { variant: Variant::MultiFactor, p, sigma, epsilon: None, bound: sum_bound })
    }

    /// The classical single-vector guarantee `(sigma*p + epsilon, ...)`.
    pub fn uniform(sigma: Rational, epsilon: Rational, p: usize) -> Result<Self> {
        check_p(p)?;
        check_sigma(&sigma)?;
        check_epsilon(&epsilon)?;
        let bound = &sigma * Rational::from(p) + &epsilon;
        Ok(GuaranteeFamily { variant: Variant::Uniform, p, sigma, epsilon: Some(epsilon), bound })
    }

    pub fn uniform_with_bound(bound: Rational, p: usize) -> Result<Self> {
        check_p(p)?;
        if !bound.is_positive() {
            return Err(Error::ContractViolation(format!("bound must be > 0, got {bound}")));
        }
        Ok(GuaranteeFamily { variant: Variant::Uniform, p, sigma: Rational::one(), epsilon: None, bound })
    }

    /// `{(1, 2 + epsilon), (2 + epsilon, 1)}` for biobjective problems.
    pub fn disjunctive(epsilon: Rational) -> Result<Self> {
        check_epsilon(&epsilon)?;
        let bound = Rational::from_integer(2) + &epsilon;
        Ok(GuaranteeFamily {
            variant: Variant::DisjunctiveBiobjective,
            p: 2,
            sigma: Rational::one(),
            epsilon: Some(epsilon),
            bound,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    pub fn epsilon(&self) -> Option<&Rational> {
        self.epsilon.as_ref()
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    /// Exact membership of `alpha` in the family's set.
    pub fn contains(&self, alpha: &FactorVector) -> Result<bool> {
        check_dim(self.p, alpha.len())?;
        let one = Rational::one();
        Ok(match self.variant {
            Variant::MultiFactor => {
                alpha.iter().any(|a| *a <= self.sigma) && alpha.excess_sum() == self.bound
            }
            Variant::Uniform => alpha.iter().all(|a| *a == self.bound),
            Variant::DisjunctiveBiobjective => {
                (alpha[0] == one && alpha[1] == self.bound)
                    || (alpha[1] == one && alpha[0] == self.bound)
            }
        })
    }

    /// An `alpha` in the family with `beta <= alpha`, if one exists.
    ///
    /// For the multi-factor family, with `T = sum_{beta_j > 1} beta_j` and
    /// `D = S - T >= 0`, the construction keeps an index `i` with
    /// `beta_i <= sigma` untouched and pours the slack `D` into another
    /// coordinate:
    ///
    /// * some `k != i` has `beta_k > 1`: raise it to `beta_k + D`;
    /// * only `beta_i` exceeds one: raise `beta_i` instead; every other
    ///   coordinate is `1 <= sigma` and takes over the role of `i`;
    /// * `beta = (1, ..., 1)`: set one coordinate `k != i` to `S`, which
    ///   needs `S > 1` since an entry above one contributes more than one.
    pub fn witness(&self, beta: &FactorVector) -> Result<Option<FactorVector>> {
        check_dim(self.p, beta.len())?;
        let one = Rational::one();
        let found = match self.variant {
            Variant::Uniform => {
                let alpha = FactorVector::from_vec_unchecked(vec![self.bound.clone(); self.p]);
                if beta.le(&alpha)? && self.bound >= one {
                    Some(alpha)
                } else {
                    None
                }
            }
            Variant::DisjunctiveBiobjective => {
                let a = FactorVector::from_vec_unchecked(vec![one.clone(), self.bound.clone()]);
                let b = FactorVector::from_vec_unchecked(vec![self.bound.clone(), one.clone()]);
                if beta.le(&a)? {
                    Some(a)
                } else if beta.le(&b)? {
                    Some(b)
                } else {
                    None
                }
            }
            Variant::MultiFactor => self.multi_factor_witness(beta),
        };
        Ok(found)
    }

    fn multi_factor_witness(&self, beta: &FactorVector) -> Option<FactorVector> {
        let one = Rational::one();
        let i = beta.iter().position(|b| *b <= self.sigma)?;
        let total = beta.excess_sum();
        if total > self.bound {
            return None;
        }
        let slack = &self.bound - &total;
        let mut alpha = beta.clone().into_inner();
        if slack.is_zero() {
            return Some(FactorVector::from_vec_unchecked(alpha));
        }
        if let Some(k) = (0..self.p).find(|&k| k != i && beta[k] > one) {
            alpha[k] = &alpha[k] + &slack;
        } else if beta[i] > one {
            alpha[i] = &alpha[i] + &slack;
        } else if self.bound > one {
            let k = if i == 0 { 1 } else { 0 };
            alpha[k] = self.bound.clone();
        } else {
            return None;
        }
        Some(FactorVector::from_vec_unchecked(alpha))
    }
}

impl fmt::Display for GuaranteeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::MultiFactor => write!(
                f,
                "multi-factor(p={}, some alpha_i <= {}, sum of factors > 1 = {})",
                self.p, self.sigma, self.bound
            ),
            Variant::Uniform => write!(f, "uniform(p={}, every alpha_j <= {})", self.p, self.bound),
            Variant::DisjunctiveBiobjective => {
                write!(f, "disjunctive{{(1, {b}), ({b}, 1)}}", b = self.bound)
            }
        }
    }
}

/// `beta` is dominated componentwise by some member of `fam`.
///
/// Closed forms, each matched by [`GuaranteeFamily::witness`]:
///
/// * multi-factor: `beta_i <= sigma` for some `i`, `sum_{beta_j > 1} beta_j <= S`,
///   and not (`beta = 1` with `S <= 1`), because no factor vector can have an
///   excess sum in `(0, 1]`;
/// * uniform: every `beta_j <= B`;
/// * disjunctive: `beta_1 = 1` and `beta_2 <= 2 + epsilon`, or the mirror image.
pub fn covers(beta: &FactorVector, fam: &GuaranteeFamily) -> Result<bool> {
    check_dim(fam.p, beta.len())?;
    let one = Rational::one();
    Ok(match fam.variant {
        Variant::MultiFactor => {
            let total = beta.excess_sum();
            beta.iter().any(|b| *b <= fam.sigma)
                && total <= fam.bound
                && !(total.is_zero() && fam.bound <= one)
        }
        Variant::Uniform => beta.iter().all(|b| *b <= fam.bound),
        Variant::DisjunctiveBiobjective => {
            (beta[0] == one && beta[1] <= fam.bound) || (beta[1] == one && beta[0] <= fam.bound)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn beta(xs: &[(i64, i64)]) -> FactorVector {
        FactorVector::from_ratios(xs).unwrap()
    }

    #[test]
    fn multi_factor_examples() {
        let fam = GuaranteeFamily::multi_factor(r(1, 1), r(1, 2), 2).unwrap();
        assert_eq!(fam.bound(), &r(5, 2));
        assert!(covers(&beta(&[(1, 1), (1, 1)]), &fam).unwrap());
        assert_eq!(
            fam.witness(&beta(&[(1, 1), (1, 1)])).unwrap(),
            Some(beta(&[(1, 1), (5, 2)]))
        );
        assert!(covers(&beta(&[(1, 1), (12, 5)]), &fam).unwrap());
        assert!(!covers(&beta(&[(6, 5), (6, 5)]), &fam).unwrap());

        let wider = GuaranteeFamily::multi_factor(r(3, 2), r(1, 2), 2).unwrap();
        assert_eq!(wider.bound(), &r(7, 2));
        assert!(covers(&beta(&[(6, 5), (6, 5)]), &wider).unwrap());
    }

    #[test]
    fn raw_sum_bound_at_or_below_one_covers_nothing_exact() {
        let fam = GuaranteeFamily::multi_factor_with_sum_bound(r(1, 1), r(1, 1), 2).unwrap();
        assert!(!covers(&FactorVector::ones(2), &fam).unwrap());
        assert_eq!(fam.witness(&FactorVector::ones(2)).unwrap(), None);
        assert!(GuaranteeFamily::multi_factor_with_sum_bound(r(1, 1), r(0, 1), 2).is_err());
    }

    #[test]
    fn uniform_and_disjunctive() {
        let uni = GuaranteeFamily::uniform(r(1, 1), r(1, 1), 3).unwrap();
        assert_eq!(uni.bound(), &r(4, 1));
        assert!(covers(&beta(&[(4, 1), (4, 1), (1, 1)]), &uni).unwrap());
        assert!(!covers(&beta(&[(9, 2), (1, 1), (1, 1)]), &uni).unwrap());

        let dis = GuaranteeFamily::disjunctive(r(1, 2)).unwrap();
        assert!(covers(&beta(&[(1, 1), (5, 2)]), &dis).unwrap());
        assert!(covers(&beta(&[(5, 2), (1, 1)]), &dis).unwrap());
        assert!(!covers(&beta(&[(11, 10), (11, 10)]), &dis).unwrap());
        assert!(!covers(&beta(&[(1, 1), (13, 5)]), &dis).unwrap());
    }

    #[test]
    fn constructors_validate() {
        assert!(GuaranteeFamily::multi_factor(r(1, 2), r(1, 1), 2).is_err());
        assert!(GuaranteeFamily::multi_factor(r(1, 1), r(0, 1), 2).is_err());
        assert!(GuaranteeFamily::multi_factor(r(1, 1), r(1, 1), 1).is_err());
        assert!(covers(&FactorVector::ones(3), &GuaranteeFamily::disjunctive(r(1, 1)).unwrap()).is_err());
    }

    /// On a rational grid of factor vectors, multi-factor with sigma = 1 and
    /// p = 2 coincides with the disjunctive biobjective family.
    #[test]
    fn multi_factor_sigma_one_matches_disjunctive_on_grid() {
        for eps in [r(1, 4), r(1, 2), r(1, 1), r(2, 1)] {
            let multi = GuaranteeFamily::multi_factor(r(1, 1), eps.clone(), 2).unwrap();
            let dis = GuaranteeFamily::disjunctive(eps).unwrap();
            for a in 0..=24 {
                for b in 0..=24 {
                    let bv = beta(&[(8 + a, 8), (8 + b, 8)]);
                    assert_eq!(covers(&bv, &multi).unwrap(), covers(&bv, &dis).unwrap(), "{bv}");
                }
            }
        }
    }

    fn factor(p: usize) -> impl Strategy<Value = FactorVector> {
        proptest::collection::vec((0i64..24, 1i64..5), p).prop_map(|xs| {
            FactorVector::new(xs.into_iter().map(|(n, d)| Rational::one() + r(n, d)).collect()).unwrap()
        })
    }

    fn family(p: usize) -> impl Strategy<Value = GuaranteeFamily> {
        (0i64..3, 1i64..9, 0usize..4).prop_map(move |(s, e, raw)| {
            let sigma = r(2 + s, 2);
            let eps = r(e, 4);
            match raw {
                0 => GuaranteeFamily::multi_factor(sigma, eps, p).unwrap(),
                1 => GuaranteeFamily::multi_factor_with_sum_bound(sigma, eps, p).unwrap(),
                2 => GuaranteeFamily::uniform(sigma, eps, p).unwrap(),
                _ => GuaranteeFamily::uniform_with_bound(eps + Rational::one(), p).unwrap(),
            }
        })
    }

    proptest! {
        #[test]
        fn covers_agrees_with_witness(b in factor(3), fam in family(3)) {
            let c = covers(&b, &fam).unwrap();
            let w = fam.witness(&b).unwrap();
            prop_assert_eq!(c, w.is_some());
            if let Some(alpha) = w {
                prop_assert!(fam.contains(&alpha).unwrap());
                prop_assert!(b.le(&alpha).unwrap());
            }
        }

        #[test]
        fn covers_is_monotone(b in factor(3), shrink in proptest::collection::vec(0i64..4, 3), fam in family(3)) {
            // b' <= b componentwise
            let smaller: Vec<Rational> = b
                .iter()
                .zip(&shrink)
                .map(|(x, s)| (x - Rational::one()) * r(*s, 4) + Rational::one())
                .collect();
            let smaller = FactorVector::new(smaller).unwrap();
            if covers(&b, &fam).unwrap() {
                prop_assert!(covers(&smaller, &fam).unwrap());
            }
        }
    }
}
