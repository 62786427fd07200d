//! Supported solutions: optimal for the weighted sum under some positive weights.
//!
//! Weights are normalized to `w >= 1`, so `x` is supported iff some `w >= 1`
//! satisfies `w . d <= 0` for all `x'`, with `d = f(x) - f(x')` when minimizing
//! and `d = f(x') - f(x)` when maximizing. Points that fail this test but are
//! optimal for a nonnegative weight vector with zero components are reported
//! as weakly supported.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracles::lp::find_feasible;
use crate::rational::Rational;
use crate::solvers::{ExplicitInstance, ExplicitSolution};
use crate::types::{Direction, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupportClass {
    Supported,
    /// Optimal only for weights with some zero component.
    WeaklySupportedOnly,
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportInfo {
    pub id: String,
    pub class: SupportClass,
    /// A certificate `w >= 1` (minimum component one) for supported points.
    pub witness: Option<WeightVector>,
}

fn differences(inst: &ExplicitInstance, x: &ExplicitSolution) -> Vec<Vec<Rational>> {
    inst.solutions()
        .iter()
        .map(|other| {
            x.f.iter()
                .zip(other.f.iter())
                .map(|(a, b)| match inst.direction() {
                    Direction::Min => a - b,
                    Direction::Max => b - a,
                })
                .collect::<Vec<_>>()
        })
        .filter(|d| d.iter().any(|v| !v.is_zero()))
        .collect()
}

fn classify_lp(inst: &ExplicitInstance, x: &ExplicitSolution) -> SupportInfo {
    let p = inst.p();
    let ds = differences(inst, x);

    // w = 1 + v, v >= 0:  d . v <= -sum(d)
    let rhs: Vec<Rational> = ds.iter().map(|d| -d.iter().sum::<Rational>()).collect();
    if let Some(v) = find_feasible(p, &ds, &rhs) {
        let w = WeightVector::new(v.into_iter().map(|vj| vj + Rational::one()).collect())
            .expect("positive by construction")
            .normalized();
        return SupportInfo { id: x.id.clone(), class: SupportClass::Supported, witness: Some(w) };
    }

    // w >= 0, sum w = 1, d . w <= 0
    let mut a = ds.clone();
    let mut b = vec![Rational::zero(); ds.len()];
    a.push(vec![Rational::one(); p]);
    b.push(Rational::one());
    a.push(vec![-Rational::one(); p]);
    b.push(-Rational::one());
    let class = if find_feasible(p, &a, &b).is_some() {
        SupportClass::WeaklySupportedOnly
    } else {
        SupportClass::Unsupported
    };
    SupportInfo { id: x.id.clone(), class, witness: None }
}

/// Per-solution support classification by exact linear feasibility, any `p`.
pub fn support_analysis(inst: &ExplicitInstance) -> Vec<SupportInfo> {
    inst.solutions().iter().map(|x| classify_lp(inst, x)).collect()
}

fn classify_slopes(inst: &ExplicitInstance, x: &ExplicitSolution) -> SupportInfo {
    // w = (lambda, 1) with lambda > 0:  lambda d1 + d2 <= 0
    let ds = differences(inst, x);
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    let mut blocked = false;
    for d in &ds {
        let (d1, d2) = (&d[0], &d[1]);
        if d1.is_zero() {
            blocked |= d2.is_positive();
        } else {
            let cut = -d2 / d1;
            if d1.is_positive() {
                hi = Some(match hi {
                    Some(h) => h.min(cut),
                    None => cut,
                });
            } else {
                lo = Some(match lo {
                    Some(l) => l.max(cut),
                    None => cut,
                });
            }
        }
    }

    let lambda = if blocked {
        None
    } else {
        match (&lo, &hi) {
            (_, Some(h)) if !h.is_positive() => None,
            (Some(l), Some(h)) if l > h => None,
            (Some(l), _) if l.is_positive() => Some(l.clone()),
            (_, Some(h)) => Some(h.clone()),
            (_, None) => Some(Rational::one()),
        }
    };
    if let Some(lambda) = lambda {
        let w = WeightVector::new(vec![lambda, Rational::one()])
            .expect("positive")
            .normalized();
        return SupportInfo { id: x.id.clone(), class: SupportClass::Supported, witness: Some(w) };
    }

    // boundary weights (0, 1) and (1, 0)
    let second_only = ds.iter().all(|d| !d[1].is_positive());
    let first_only = ds.iter().all(|d| !d[0].is_positive());
    let class = if second_only || first_only {
        SupportClass::WeaklySupportedOnly
    } else {
        SupportClass::Unsupported
    };
    SupportInfo { id: x.id.clone(), class, witness: None }
}

/// Biobjective classification by intersecting the admissible slope intervals.
pub fn support_analysis_biobjective(inst: &ExplicitInstance) -> Result<Vec<SupportInfo>> {
    if inst.p() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: inst.p() });
    }
    Ok(inst.solutions().iter().map(|x| classify_slopes(inst, x)).collect())
}

/// Ids of all supported solutions.
pub fn supported_set(inst: &ExplicitInstance) -> BTreeSet<String> {
    let infos = if inst.p() == 2 {
        support_analysis_biobjective(inst).expect("p = 2")
    } else {
        support_analysis(inst)
    };
    infos
        .into_iter()
        .filter(|i| i.class == SupportClass::Supported)
        .map(|i| i.id)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{optimal_set, solve_explicit_exact};
    use crate::types::ObjectiveVector;
    use proptest::prelude::*;

    fn inst(d: Direction, points: &[&[(i64, i64)]]) -> ExplicitInstance {
        ExplicitInstance::from_images(
            d,
            points.iter().map(|p| ObjectiveVector::from_ratios(p).unwrap()).collect(),
        )
        .unwrap()
    }

    fn ids(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn three_points_all_supported() {
        let e = inst(Direction::Min, &[&[(1, 1), (8, 1)], &[(2, 1), (2, 1)], &[(8, 1), (1, 1)]]);
        assert_eq!(supported_set(&e), ids(&["x0", "x1", "x2"]));
        let lp: Vec<_> = support_analysis(&e).into_iter().map(|i| i.class).collect();
        assert!(lp.iter().all(|c| *c == SupportClass::Supported));
    }

    #[test]
    fn tightness_middle_point_is_unsupported() {
        let e = inst(Direction::Min, &[&[(4, 1), (1, 2)], &[(1, 2), (4, 1)], &[(5, 2), (5, 2)]]);
        assert_eq!(supported_set(&e), ids(&["x0", "x1"]));
        let lp = support_analysis(&e);
        assert_eq!(lp[2].class, SupportClass::Unsupported);
    }

    #[test]
    fn maximization_axis_points() {
        let e = inst(Direction::Max, &[&[(100, 1), (1, 2)], &[(1, 2), (100, 1)], &[(50, 1), (50, 1)]]);
        assert_eq!(supported_set(&e), ids(&["x0", "x1"]));
        assert_eq!(support_analysis(&e)[2].class, SupportClass::Unsupported);
    }

    #[test]
    fn weakly_supported_corner() {
        // (1,3) is optimal only for w = (1, 0): (1,1) dominates it
        let e = inst(Direction::Min, &[&[(1, 1), (1, 1)], &[(1, 1), (3, 1)], &[(3, 1), (1, 1)]]);
        let lp = support_analysis(&e);
        let slopes = support_analysis_biobjective(&e).unwrap();
        assert_eq!(lp[0].class, SupportClass::Supported);
        assert_eq!(lp[1].class, SupportClass::WeaklySupportedOnly);
        assert_eq!(lp[2].class, SupportClass::WeaklySupportedOnly);
        let classes: Vec<_> = slopes.iter().map(|i| i.class).collect();
        assert_eq!(classes, lp.iter().map(|i| i.class).collect::<Vec<_>>());
    }

    #[test]
    fn duplicates_and_singletons() {
        let e = inst(Direction::Min, &[&[(2, 1), (3, 1)]]);
        assert_eq!(supported_set(&e), ids(&["x0"]));
        let e = inst(Direction::Min, &[&[(2, 1), (3, 1)], &[(2, 1), (3, 1)]]);
        assert_eq!(supported_set(&e), ids(&["x0", "x1"]));
    }

    fn small_instance(p: usize) -> impl Strategy<Value = ExplicitInstance> {
        prop::collection::vec(prop::collection::vec(1i64..12, p), 1..9).prop_map(move |pts| {
            ExplicitInstance::from_images(
                Direction::Min,
                pts.iter().map(|v| ObjectiveVector::from_integers(v).unwrap()).collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn slope_route_matches_lp_route(e in small_instance(2)) {
            let lp: Vec<_> = support_analysis(&e).into_iter().map(|i| i.class).collect();
            let sl: Vec<_> = support_analysis_biobjective(&e).unwrap().into_iter().map(|i| i.class).collect();
            prop_assert_eq!(lp, sl);
        }

        #[test]
        fn witnesses_reproduce_the_optimum(e in small_instance(3)) {
            for info in support_analysis(&e) {
                if let Some(w) = info.witness {
                    prop_assert!(w.iter().all(|c| *c >= Rational::one()));
                    prop_assert!(optimal_set(&e, &w).unwrap().contains(&info.id));
                    let own = e.get(&info.id).unwrap().f.weighted_sum(&w).unwrap();
                    let best = solve_explicit_exact(&e, &w).unwrap().image.weighted_sum(&w).unwrap();
                    prop_assert_eq!(own, best);
                }
            }
        }
    }
}
