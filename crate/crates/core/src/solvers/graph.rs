//! Single-objective shortest path and minimum spanning tree on scalarized costs.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::solvers::instance::{GraphInstance, GraphKind};
use crate::types::{check_dim, Direction, ObjectiveVector, WeightVector};

/// A source-target path as arc indices in travel order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSolution {
    pub arcs: Vec<usize>,
    pub cost: ObjectiveVector,
}

impl PathSolution {
    pub fn id(&self) -> String {
        path_id(&self.arcs)
    }
}

/// A spanning tree as sorted edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSolution {
    pub edges: Vec<usize>,
    pub cost: ObjectiveVector,
}

impl TreeSolution {
    pub fn id(&self) -> String {
        tree_id(&self.edges)
    }
}

pub(crate) fn path_id(arcs: &[usize]) -> String {
    arcs.iter().map(|a| format!("a{a}")).collect::<Vec<_>>().join("-")
}

pub(crate) fn tree_id(edges: &[usize]) -> String {
    edges.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join("-")
}

/// Sum of the cost vectors of the given arcs.
pub(crate) fn total_cost(inst: &GraphInstance, arcs: &[usize]) -> ObjectiveVector {
    let mut it = arcs.iter();
    let first = inst.arcs()[*it.next().expect("at least one arc")].cost.clone();
    it.fold(first, |acc, &a| acc.add(&inst.arcs()[a].cost).expect("same dimension"))
}

fn check_graph(inst: &GraphInstance, kind: GraphKind, w: &WeightVector) -> Result<()> {
    if inst.direction() != Direction::Min {
        return Err(Error::MaximizationUnsupported);
    }
    if inst.kind() != kind {
        return Err(Error::ContractViolation(format!(
            "expected a {kind:?} instance, got {:?}",
            inst.kind()
        )));
    }
    check_dim(inst.p(), w.len())
}

/// Label-setting search on `sum_j w_j c_j(a)`. A node's predecessor changes
/// only on a strictly smaller label, and arcs are relaxed in input order.
pub fn solve_shortest_path(inst: &GraphInstance, w: &WeightVector) -> Result<PathSolution> {
    check_graph(inst, GraphKind::ShortestPath, w)?;
    let n = inst.node_count();
    let scalar: Vec<Rational> = inst
        .arcs()
        .iter()
        .map(|a| a.cost.weighted_sum(w))
        .collect::<Result<_>>()?;
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, a) in inst.arcs().iter().enumerate() {
        out[a.from].push(i);
    }

    let mut dist: Vec<Option<Rational>> = vec![None; n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[inst.source()] = Some(Rational::zero());
    heap.push(Reverse((Rational::zero(), inst.source())));

    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        if u == inst.target() {
            break;
        }
        for &ai in &out[u] {
            let v = inst.arcs()[ai].to;
            if done[v] {
                continue;
            }
            let cand = &d + &scalar[ai];
            if dist[v].as_ref().is_none_or(|cur| cand < *cur) {
                dist[v] = Some(cand.clone());
                pred[v] = Some(ai);
                heap.push(Reverse((cand, v)));
            }
        }
    }

    if !done[inst.target()] {
        return Err(Error::Unreachable { origin: inst.source(), target: inst.target() });
    }
    let mut arcs = Vec::new();
    let mut node = inst.target();
    while node != inst.source() {
        let a = pred[node].expect("settled nodes have predecessors");
        arcs.push(a);
        node = inst.arcs()[a].from;
    }
    arcs.reverse();
    let cost = total_cost(inst, &arcs);
    Ok(PathSolution { arcs, cost })
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Greedy edge insertion in order of scalarized weight; the stable sort keeps
/// input order among equal weights.
pub fn solve_spanning_tree(inst: &GraphInstance, w: &WeightVector) -> Result<TreeSolution> {
    check_graph(inst, GraphKind::SpanningTree, w)?;
    let scalar: Vec<Rational> = inst
        .arcs()
        .iter()
        .map(|a| a.cost.weighted_sum(w))
        .collect::<Result<_>>()?;
    let mut order: Vec<usize> = (0..inst.arcs().len()).collect();
    order.sort_by(|&a, &b| scalar[a].cmp(&scalar[b]));

    let mut uf = UnionFind::new(inst.node_count());
    let mut edges = Vec::with_capacity(inst.node_count() - 1);
    for e in order {
        let arc = &inst.arcs()[e];
        if uf.union(arc.from, arc.to) {
            edges.push(e);
            if edges.len() + 1 == inst.node_count() {
                break;
            }
        }
    }
    if edges.len() + 1 != inst.node_count() {
        return Err(Error::Disconnected);
    }
    edges.sort_unstable();
    let cost = total_cost(inst, &edges);
    Ok(TreeSolution { edges, cost })
}
