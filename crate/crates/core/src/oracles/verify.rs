//! Brute-force verification of approximation guarantees on explicit instances.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::dominance::factor_vector;
use crate::error::{Error, Result};
use crate::guarantee::{covers, GuaranteeFamily};
use crate::oracles::supported::{support_analysis, SupportClass};
use crate::rational::Rational;
use crate::solvers::{ExplicitInstance, ExplicitSolution};
use crate::types::{Direction, FactorVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub target: String,
    pub by: String,
    pub factors: FactorVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub target: String,
    /// Closest member of the candidate set, if any.
    pub closest: Option<String>,
    pub factors: Option<FactorVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub family: GuaranteeFamily,
    pub ok: bool,
    pub witnesses: Vec<Witness>,
    pub violations: Vec<Violation>,
}

enum Outcome {
    Covered(Witness),
    Violated(Violation),
}

/// Checks that every solution of `inst` is covered by some member of
/// `candidates` under `fam`. Among covering (or, failing that, all) members
/// the one with the smallest excess sum is reported, ties broken by id.
pub fn verify_approximation(
    candidates: &BTreeSet<String>,
    inst: &ExplicitInstance,
    fam: &GuaranteeFamily,
) -> Result<VerificationReport> {
    if fam.p() != inst.p() {
        return Err(Error::DimensionMismatch { expected: inst.p(), found: fam.p() });
    }
    let members: Vec<&ExplicitSolution> = candidates
        .iter()
        .map(|id| {
            inst.get(id).ok_or_else(|| {
                Error::ContractViolation(format!("candidate {id:?} is not a solution of the instance"))
            })
        })
        .collect::<Result<_>>()?;
    let d = inst.direction();

    let outcomes: Vec<Outcome> = inst
        .solutions()
        .par_iter()
        .map(|target| -> Result<Outcome> {
            let mut best_cover: Option<(Rational, &str, FactorVector)> = None;
            let mut best_any: Option<(Rational, &str, FactorVector)> = None;
            for x in &members {
                let beta = factor_vector(&x.f, &target.f, d)?;
                let key = (beta.excess_sum(), x.id.as_str(), beta);
                let is_cover = covers(&key.2, fam)?;
                if is_cover && best_cover.as_ref().is_none_or(|b| key < *b) {
                    best_cover = Some(key.clone());
                }
                if best_any.as_ref().is_none_or(|b| key < *b) {
                    best_any = Some(key);
                }
            }
            Ok(match best_cover {
                Some((_, by, factors)) => Outcome::Covered(Witness {
                    target: target.id.clone(),
                    by: by.to_string(),
                    factors,
                }),
                None => Outcome::Violated(Violation {
                    target: target.id.clone(),
                    closest: best_any.as_ref().map(|b| b.1.to_string()),
                    factors: best_any.map(|b| b.2),
                }),
            })
        })
        .collect::<Result<_>>()?;

    let mut witnesses = Vec::new();
    let mut violations = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Covered(w) => witnesses.push(w),
            Outcome::Violated(v) => violations.push(v),
        }
    }
    Ok(VerificationReport { family: fam.clone(), ok: violations.is_empty(), witnesses, violations })
}

/// Checks an instance of the maximization construction: the middle point is
/// unsupported, every axis point is supported, and each supported point
/// misses the middle point by a factor of at least `M` in every objective but
/// its own axis, hence by more than `M - 1`.
pub fn verify_max_impossibility(inst: &ExplicitInstance) -> Result<bool> {
    let (m, axes, middle) = max_construction_parts(inst)?;
    let analysis = support_analysis(inst);
    let class_of = |id: &str| {
        analysis.iter().find(|i| i.id == id).map(|i| i.class).expect("every solution analysed")
    };
    if class_of(&middle.id) == SupportClass::Supported {
        return Ok(false);
    }
    if axes.iter().any(|a| class_of(&a.id) != SupportClass::Supported) {
        return Ok(false);
    }
    let limit = &m - Rational::one();
    for (l, axis) in axes.iter().enumerate() {
        let beta = factor_vector(&axis.f, &middle.f, Direction::Max)?;
        let fails_everywhere = beta.iter().enumerate().filter(|&(j, _)| j != l).all(|(_, b)| *b > limit);
        if !fails_everywhere {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits a maximization construction into `(M, [x1..xp], xtilde)`.
fn max_construction_parts(
    inst: &ExplicitInstance,
) -> Result<(Rational, Vec<&ExplicitSolution>, &ExplicitSolution)> {
    let bad = |why: &str| Error::ContractViolation(format!("not a maximization construction: {why}"));
    let p = inst.p();
    if inst.direction() != Direction::Max {
        return Err(bad("direction must be max"));
    }
    if inst.len() != p + 1 {
        return Err(bad("expected p + 1 solutions"));
    }
    let axes: Vec<&ExplicitSolution> = (1..=p)
        .map(|j| inst.get(&format!("x{j}")).ok_or_else(|| bad(&format!("missing x{j}"))))
        .collect::<Result<_>>()?;
    let middle = inst.get("xtilde").ok_or_else(|| bad("missing xtilde"))?;
    let m = axes[0].f[0].clone();
    if m <= Rational::one() {
        return Err(bad("M must exceed 1"));
    }
    let small = Rational::one() / Rational::from(p);
    for (l, axis) in axes.iter().enumerate() {
        for (j, v) in axis.f.iter().enumerate() {
            let expected = if j == l { &m } else { &small };
            if v != expected {
                return Err(bad(&format!("x{} has the wrong image", l + 1)));
            }
        }
    }
    let mid = &m / Rational::from(p);
    if middle.f.iter().any(|v| *v != mid) {
        return Err(bad("xtilde must be (M/p, ..., M/p)"));
    }
    Ok((m, axes, middle))
}
