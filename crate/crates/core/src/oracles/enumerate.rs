//! Exhaustive enumeration of the feasible set of a graph instance.

use crate::error::{Error, Result};
use crate::solvers::{
    path_id, total_cost, tree_id, ExplicitInstance, ExplicitSolution, GraphInstance, GraphKind,
    UnionFind,
};

/// Every simple source-target path (or every spanning tree) as an explicit
/// instance with ids `a<i>-a<j>-...` (travel order) or `e<i>-e<j>-...`
/// (sorted). Fails with [`Error::EnumerationLimit`] beyond `limit` solutions.
pub fn enumerate_graph(g: &GraphInstance, limit: usize) -> Result<ExplicitInstance> {
    let sets = match g.kind() {
        GraphKind::ShortestPath => simple_paths(g, limit)?,
        GraphKind::SpanningTree => spanning_trees(g, limit)?,
    };
    if sets.is_empty() {
        return Err(match g.kind() {
            GraphKind::ShortestPath => Error::Unreachable { origin: g.source(), target: g.target() },
            GraphKind::SpanningTree => Error::Disconnected,
        });
    }
    let solutions = sets
        .into_iter()
        .map(|arcs| {
            let id = match g.kind() {
                GraphKind::ShortestPath => path_id(&arcs),
                GraphKind::SpanningTree => tree_id(&arcs),
            };
            ExplicitSolution { id, f: total_cost(g, &arcs) }
        })
        .collect();
    ExplicitInstance::new(g.direction(), g.p(), solutions)
}

fn simple_paths(g: &GraphInstance, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
    for (i, a) in g.arcs().iter().enumerate() {
        out_arcs[a.from].push(i);
    }
    let mut found = Vec::new();
    let mut visited = vec![false; g.node_count()];
    let mut path = Vec::new();
    visited[g.source()] = true;
    dfs(g, &out_arcs, g.source(), &mut visited, &mut path, &mut found, limit)?;
    Ok(found)
}

fn dfs(
    g: &GraphInstance,
    out_arcs: &[Vec<usize>],
    node: usize,
    visited: &mut [bool],
    path: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    if node == g.target() {
        if found.len() == limit {
            return Err(Error::EnumerationLimit { limit });
        }
        found.push(path.clone());
        return Ok(());
    }
    for &a in &out_arcs[node] {
        let next = g.arcs()[a].to;
        if visited[next] {
            continue;
        }
        visited[next] = true;
        path.push(a);
        dfs(g, out_arcs, next, visited, path, found, limit)?;
        path.pop();
        visited[next] = false;
    }
    Ok(())
}

fn spanning_trees(g: &GraphInstance, limit: usize) -> Result<Vec<Vec<usize>>> {
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    grow(g, 0, UnionFind::new(g.node_count()), &mut chosen, &mut found, limit)?;
    Ok(found)
}

/// Edge subsets in lexicographic order, extended only while they stay acyclic.
fn grow(
    g: &GraphInstance,
    start: usize,
    uf: UnionFind,
    chosen: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    let need = g.node_count() - 1;
    if chosen.len() == need {
        if found.len() == limit {
            return Err(Error::EnumerationLimit { limit });
        }
        found.push(chosen.clone());
        return Ok(());
    }
    let m = g.arcs().len();
    for e in start..m {
        if m - e < need - chosen.len() {
            break;
        }
        let arc = &g.arcs()[e];
        let mut next = uf.clone();
        if next.union(arc.from, arc.to) {
            chosen.push(e);
            grow(g, e + 1, next, chosen, found, limit)?;
            chosen.pop();
        }
    }
    Ok(())
}
