//! Ground-truth oracles over explicit instances.

mod enumerate;
pub mod lp;
mod supported;
mod verify;

use std::collections::BTreeSet;

pub use enumerate::enumerate_graph;
pub use supported::{
    support_analysis, support_analysis_biobjective, supported_set, SupportClass, SupportInfo,
};
pub use verify::{verify_approximation, verify_max_impossibility, VerificationReport, Violation, Witness};

use crate::dominance::dominates;
use crate::solvers::ExplicitInstance;

/// Ids of all solutions with a nondominated image. Solutions sharing an
/// image are kept together.
pub fn pareto_front(inst: &ExplicitInstance) -> BTreeSet<String> {
    let d = inst.direction();
    inst.solutions()
        .iter()
        .filter(|x| {
            !inst
                .solutions()
                .iter()
                .any(|y| dominates(&y.f, &x.f, d).expect("same dimension"))
        })
        .map(|x| x.id.clone())
        .collect()
}
