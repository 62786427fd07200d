//! Fixed, seeded instances shared by the benchmarks.

use wsapprox::{gen_random_explicit, gen_random_graph, ExplicitInstance, GraphInstance, GraphKind, Rational};

/// Biobjective explicit instance with values in `[1, 1000]`.
pub fn biobjective(n: usize, seed: u64) -> ExplicitInstance {
    gen_random_explicit(2, n, &Rational::one(), &Rational::from_integer(1000), seed).expect("valid parameters")
}

pub fn explicit(p: usize, n: usize, seed: u64) -> ExplicitInstance {
    gen_random_explicit(p, n, &Rational::one(), &Rational::from_integer(20), seed).expect("valid parameters")
}

pub fn graph(kind: GraphKind, nodes: usize, arcs: usize, seed: u64) -> GraphInstance {
    gen_random_graph(nodes, arcs, 2, &Rational::one(), &Rational::from_integer(50), seed, kind).expect("valid parameters")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(biobjective(10, 1), biobjective(10, 1));
        assert_eq!(explicit(3, 5, 2).p(), 3);
        assert_eq!(graph(GraphKind::ShortestPath, 6, 10, 0).arcs().len(), 10);
    }
}
