//! Instance generators and the JSON instance format.

pub mod json;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{floor_i64, Rational};
use crate::solvers::{Arc, ExplicitInstance, ExplicitSolution, GraphInstance, GraphKind};
use crate::types::{Direction, ObjectiveVector};

pub use json::{canonicalize, instance_to_json, parse_instance};

/// Denominator of the lattice random values are drawn from.
pub const LATTICE_DENOMINATOR: i64 = 1000;

fn check_construction(p: usize, m: &Rational) -> Result<()> {
    if p < 2 {
        return Err(Error::ContractViolation(format!("need p >= 2, got {p}")));
    }
    if *m <= Rational::one() {
        return Err(Error::ContractViolation(format!("M must exceed 1, got {m}")));
    }
    Ok(())
}

/// Axis points with `axis` in coordinate `j` and `1/p` elsewhere, plus one
/// balanced point.
fn axis_construction(
    direction: Direction,
    p: usize,
    axis: &Rational,
    middle: Rational,
    prefix: &str,
) -> Result<ExplicitInstance> {
    let small = Rational::one() / Rational::from(p);
    let mut sols: Vec<ExplicitSolution> = (0..p)
        .map(|l| {
            let f = (0..p).map(|j| if j == l { axis.clone() } else { small.clone() }).collect();
            Ok(ExplicitSolution { id: format!("{prefix}{}", l + 1), f: ObjectiveVector::new(f)? })
        })
        .collect::<Result<_>>()?;
    sols.push(ExplicitSolution {
        id: format!("{prefix}tilde"),
        f: ObjectiveVector::new(vec![middle; p])?,
    });
    ExplicitInstance::new(direction, p, sols)
}

/// Minimization instance `y1..yp` (`M` on the axis, `1/p` elsewhere) and
/// `ytilde = ((M+1)/p, ..., (M+1)/p)`, which is nondominated but unsupported.
pub fn gen_tightness_min(p: usize, m: &Rational) -> Result<ExplicitInstance> {
    check_construction(p, m)?;
    let middle = (m + Rational::one()) / Rational::from(p);
    axis_construction(Direction::Min, p, m, middle, "y")
}

/// Maximization instance `x1..xp` (`M` on the axis, `1/p` elsewhere) and
/// `xtilde = (M/p, ..., M/p)`.
pub fn gen_max_counterexample(p: usize, m: &Rational) -> Result<ExplicitInstance> {
    check_construction(p, m)?;
    axis_construction(Direction::Max, p, m, m / Rational::from(p), "x")
}

fn ceil_i64(r: &Rational) -> i64 {
    -floor_i64(&-r)
}

/// Uniform sampler on `{k / 1000 : low <= k / 1000 <= high}`.
struct LatticeSampler {
    lo: i64,
    hi: i64,
    fixed: Option<Rational>,
}

impl LatticeSampler {
    fn new(low: &Rational, high: &Rational) -> Result<Self> {
        if !low.is_positive() || low > high {
            return Err(Error::ContractViolation(format!(
                "need 0 < low <= high, got low = {low}, high = {high}"
            )));
        }
        if low == high {
            return Ok(LatticeSampler { lo: 0, hi: 0, fixed: Some(low.clone()) });
        }
        let scale = Rational::from_integer(LATTICE_DENOMINATOR);
        let lo = ceil_i64(&(low * &scale)).max(1);
        let hi = floor_i64(&(high * &scale));
        if lo > hi {
            return Err(Error::ContractViolation(format!(
                "no multiple of 1/{LATTICE_DENOMINATOR} lies in [{low}, {high}]"
            )));
        }
        Ok(LatticeSampler { lo, hi, fixed: None })
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Rational {
        match &self.fixed {
            Some(v) => v.clone(),
            None => Rational::new(rng.random_range(self.lo..=self.hi), LATTICE_DENOMINATOR),
        }
    }

    fn vector(&self, p: usize, rng: &mut ChaCha8Rng) -> Result<ObjectiveVector> {
        ObjectiveVector::new((0..p).map(|_| self.sample(rng)).collect())
    }
}

/// `n` minimization solutions `x0..` with components drawn uniformly from the
/// lattice of multiples of `1/1000` in `[low, high]`.
pub fn gen_random_explicit(
    p: usize,
    n: usize,
    low: &Rational,
    high: &Rational,
    seed: u64,
) -> Result<ExplicitInstance> {
    if n == 0 {
        return Err(Error::ContractViolation("need at least one solution".into()));
    }
    let sampler = LatticeSampler::new(low, high)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let images = (0..n).map(|_| sampler.vector(p, &mut rng)).collect::<Result<_>>()?;
    ExplicitInstance::from_images(Direction::Min, images)
}

/// Random graph on `n` nodes with `m` arcs: a random tree (arcs pointing away
/// from node 0 for shortest paths, source 0 and target `n - 1`) plus `m - n + 1`
/// random extra arcs.
pub fn gen_random_graph(
    n: usize,
    m: usize,
    p: usize,
    cost_low: &Rational,
    cost_high: &Rational,
    seed: u64,
    kind: GraphKind,
) -> Result<GraphInstance> {
    if n < 2 {
        return Err(Error::ContractViolation(format!("need at least two nodes, got {n}")));
    }
    if m + 1 < n {
        return Err(Error::ContractViolation(format!(
            "{m} arcs cannot connect {n} nodes"
        )));
    }
    let sampler = LatticeSampler::new(cost_low, cost_high)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = Vec::with_capacity(m);
    for v in 1..n {
        let parent = rng.random_range(0..v);
        arcs.push(Arc { from: parent, to: v, cost: sampler.vector(p, &mut rng)? });
    }
    while arcs.len() < m {
        let from = rng.random_range(0..n);
        let to = rng.random_range(0..n);
        if from != to {
            arcs.push(Arc { from, to, cost: sampler.vector(p, &mut rng)? });
        }
    }
    let (source, target) = match kind {
        GraphKind::ShortestPath => (0, n - 1),
        GraphKind::SpanningTree => (0, 0),
    };
    let g = GraphInstance::new(Direction::Min, p, kind, n, arcs, source, target)?;
    g.check_feasible()?;
    Ok(g)
}
