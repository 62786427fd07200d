use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::types::{Bounds, Direction, ObjectiveVector};

/// One feasible solution of an explicit instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitSolution {
    pub id: String,
    pub f: ObjectiveVector,
}

/// An instance given by listing every feasible solution with its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitInstance {
    direction: Direction,
    p: usize,
    solutions: Vec<ExplicitSolution>,
}

impl ExplicitInstance {
    pub fn new(direction: Direction, p: usize, solutions: Vec<ExplicitSolution>) -> Result<Self> {
        if solutions.is_empty() {
            return Err(Error::InvalidInstance("explicit instance has no solutions".into()));
        }
        if p < 2 {
            return Err(Error::InvalidInstance(format!("need p >= 2 objectives, got {p}")));
        }
        let mut seen = BTreeSet::new();
        for s in &solutions {
            if s.f.len() != p {
                return Err(Error::InvalidInstance(format!(
                    "solution {:?} has {} objectives, expected {p}",
                    s.id,
                    s.f.len()
                )));
            }
            if !seen.insert(s.id.as_str()) {
                return Err(Error::InvalidInstance(format!("duplicate solution id {:?}", s.id)));
            }
        }
        Ok(ExplicitInstance { direction, p, solutions })
    }

    /// Ids `x0, x1, ...` in the order given.
    pub fn from_images(direction: Direction, images: Vec<ObjectiveVector>) -> Result<Self> {
        let p = images.first().map_or(0, ObjectiveVector::len);
        let solutions = images
            .into_iter()
            .enumerate()
            .map(|(i, f)| ExplicitSolution { id: format!("x{i}"), f })
            .collect();
        Self::new(direction, p, solutions)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn solutions(&self) -> &[ExplicitSolution] {
        &self.solutions
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&ExplicitSolution> {
        self.solutions.iter().find(|s| s.id == id)
    }

    /// Componentwise min and max over all feasible images.
    pub fn bounds(&self) -> Bounds {
        let mut lower = self.solutions[0].f.clone().into_inner();
        let mut upper = lower.clone();
        for s in &self.solutions[1..] {
            for (j, v) in s.f.iter().enumerate() {
                if *v < lower[j] {
                    lower[j] = v.clone();
                }
                if *v > upper[j] {
                    upper[j] = v.clone();
                }
            }
        }
        Bounds::new(lower, upper).expect("images are strictly positive")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    ShortestPath,
    SpanningTree,
}

/// A directed arc (shortest path) or an undirected edge (spanning tree).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub cost: ObjectiveVector,
}

/// A multiobjective shortest-path or spanning-tree instance.
///
/// [`GraphInstance::new`] checks structure only. Reachability and
/// connectivity are checked by [`GraphInstance::check_feasible`], which the
/// JSON reader and the generators call; the solvers report the same failures
/// as errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInstance {
    direction: Direction,
    p: usize,
    kind: GraphKind,
    node_count: usize,
    arcs: Vec<Arc>,
    source: usize,
    target: usize,
}

impl GraphInstance {
    pub fn new(
        direction: Direction,
        p: usize,
        kind: GraphKind,
        node_count: usize,
        arcs: Vec<Arc>,
        source: usize,
        target: usize,
    ) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidInstance(format!("need p >= 2 objectives, got {p}")));
        }
        if node_count < 2 {
            return Err(Error::InvalidInstance("a graph instance needs at least two nodes".into()));
        }
        if arcs.is_empty() {
            return Err(Error::InvalidInstance("graph has no arcs".into()));
        }
        for (i, a) in arcs.iter().enumerate() {
            if a.from >= node_count || a.to >= node_count {
                return Err(Error::InvalidInstance(format!(
                    "arc {i} references a node outside 0..{node_count}"
                )));
            }
            if a.cost.len() != p {
                return Err(Error::InvalidInstance(format!(
                    "arc {i} has {} objectives, expected {p}",
                    a.cost.len()
                )));
            }
        }
        if kind == GraphKind::ShortestPath {
            if source >= node_count || target >= node_count {
                return Err(Error::InvalidInstance("source or target outside the node range".into()));
            }
            if source == target {
                return Err(Error::InvalidInstance("source and target coincide".into()));
            }
        }
        Ok(GraphInstance { direction, p, kind, node_count, arcs, source, target })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Target reachable (shortest path) or graph connected (spanning tree).
    pub fn check_feasible(&self) -> Result<()> {
        match self.kind {
            GraphKind::ShortestPath => {
                let reach = self.reachable_from(self.source, true);
                if reach[self.target] {
                    Ok(())
                } else {
                    Err(Error::Unreachable { origin: self.source, target: self.target })
                }
            }
            GraphKind::SpanningTree => {
                if self.reachable_from(0, false).iter().all(|&r| r) {
                    Ok(())
                } else {
                    Err(Error::Disconnected)
                }
            }
        }
    }

    fn reachable_from(&self, start: usize, directed: bool) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.node_count];
        for a in &self.arcs {
            adj[a.from].push(a.to);
            if !directed {
                adj[a.to].push(a.from);
            }
        }
        let mut seen = vec![false; self.node_count];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// `LB(j)` = cheapest arc in objective `j`, `UB(j)` = sum over all arcs.
    pub fn bounds(&self) -> Bounds {
        let mut lower = self.arcs[0].cost.clone().into_inner();
        let mut upper = vec![Rational::zero(); self.p];
        for a in &self.arcs {
            for (j, v) in a.cost.iter().enumerate() {
                if *v < lower[j] {
                    lower[j] = v.clone();
                }
                upper[j] += v;
            }
        }
        Bounds::new(lower, upper).expect("arc costs are strictly positive")
    }
}

/// Either kind of instance, as read from JSON.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Explicit(ExplicitInstance),
    Graph(GraphInstance),
}

impl Instance {
    pub fn direction(&self) -> Direction {
        match self {
            Instance::Explicit(e) => e.direction(),
            Instance::Graph(g) => g.direction(),
        }
    }

    pub fn p(&self) -> usize {
        match self {
            Instance::Explicit(e) => e.p(),
            Instance::Graph(g) => g.p(),
        }
    }
}

impl From<ExplicitInstance> for Instance {
    fn from(e: ExplicitInstance) -> Self {
        Instance::Explicit(e)
    }
}

impl From<GraphInstance> for Instance {
    fn from(g: GraphInstance) -> Self {
        Instance::Graph(g)
    }
}

/// Per-objective bounds sandwiching every feasible image.
pub fn compute_bounds(inst: &Instance) -> Bounds {
    match inst {
        Instance::Explicit(e) => e.bounds(),
        Instance::Graph(g) => g.bounds(),
    }
}
