//! Instance JSON:
//!
//! ```json
//! {"direction": "min", "p": 2, "kind": "explicit",
//!  "solutions": [{"id": "a", "f": ["1", "8"]}, {"id": "b", "f": ["5/2", "2"]}]}
//! {"direction": "min", "p": 2, "kind": "shortest-path", "node_count": 3,
//!  "arcs": [{"from": 0, "to": 2, "cost": ["1", "8"]}], "source": 0, "target": 2}
//! ```
//!
//! Rationals are strings. Unknown fields are rejected. `source` and `target`
//! are omitted for spanning-tree instances.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solvers::{Arc, ExplicitInstance, ExplicitSolution, GraphInstance, GraphKind, Instance};
use crate::types::Direction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Kind {
    Explicit,
    ShortestPath,
    SpanningTree,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    direction: Direction,
    p: usize,
    kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    solutions: Option<Vec<ExplicitSolution>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    node_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arcs: Option<Vec<Arc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    target: Option<usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInstance(msg.into())
}

fn forbid<T>(field: &Option<T>, name: &str, kind: &str) -> Result<()> {
    if field.is_some() {
        return Err(invalid(format!("field `{name}` is not allowed for {kind} instances")));
    }
    Ok(())
}

fn into_instance(doc: InstanceDoc) -> Result<Instance> {
    match doc.kind {
        Kind::Explicit => {
            forbid(&doc.node_count, "node_count", "explicit")?;
            forbid(&doc.arcs, "arcs", "explicit")?;
            forbid(&doc.source, "source", "explicit")?;
            forbid(&doc.target, "target", "explicit")?;
            let solutions = doc.solutions.ok_or_else(|| invalid("missing field `solutions`"))?;
            Ok(Instance::Explicit(ExplicitInstance::new(doc.direction, doc.p, solutions)?))
        }
        Kind::ShortestPath | Kind::SpanningTree => {
            let (kind, name) = match doc.kind {
                Kind::ShortestPath => (GraphKind::ShortestPath, "shortest-path"),
                _ => (GraphKind::SpanningTree, "spanning-tree"),
            };
            forbid(&doc.solutions, "solutions", name)?;
            let node_count = doc.node_count.ok_or_else(|| invalid("missing field `node_count`"))?;
            let arcs = doc.arcs.ok_or_else(|| invalid("missing field `arcs`"))?;
            let (source, target) = match kind {
                GraphKind::ShortestPath => (
                    doc.source.ok_or_else(|| invalid("missing field `source`"))?,
                    doc.target.ok_or_else(|| invalid("missing field `target`"))?,
                ),
                GraphKind::SpanningTree => {
                    forbid(&doc.source, "source", name)?;
                    forbid(&doc.target, "target", name)?;
                    (0, 0)
                }
            };
            let g = GraphInstance::new(doc.direction, doc.p, kind, node_count, arcs, source, target)?;
            g.check_feasible()?;
            Ok(Instance::Graph(g))
        }
    }
}

fn to_doc(inst: &Instance) -> InstanceDoc {
    match inst {
        Instance::Explicit(e) => InstanceDoc {
            direction: e.direction(),
            p: e.p(),
            kind: Kind::Explicit,
            solutions: Some(e.solutions().to_vec()),
            node_count: None,
            arcs: None,
            source: None,
            target: None,
        },
        Instance::Graph(g) => {
            let sp = g.kind() == GraphKind::ShortestPath;
            InstanceDoc {
                direction: g.direction(),
                p: g.p(),
                kind: if sp { Kind::ShortestPath } else { Kind::SpanningTree },
                solutions: None,
                node_count: Some(g.node_count()),
                arcs: Some(g.arcs().to_vec()),
                source: sp.then(|| g.source()),
                target: sp.then(|| g.target()),
            }
        }
    }
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: InstanceDoc = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
    into_instance(doc)
}

/// Canonical JSON: sorted keys, reduced rationals, two-space indentation,
/// trailing newline.
pub fn instance_to_json(inst: &Instance) -> String {
    let value = serde_json::to_value(to_doc(inst)).expect("instances always serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("values always serialize");
    text.push('\n');
    text
}

/// Parse followed by canonical serialization.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(instance_to_json(&parse_instance(text)?))
}
