//! JSON file formats.
//!
//! Writers emit one fixed layout (`": "` after keys, `", "` between fields,
//! compact integer arrays, edges as sorted `[u,v]` pairs with `u < v`), so a
//! parse followed by a write reproduces a file byte for byte. Readers accept
//! any whitespace.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphKind, Vertex};
use crate::instance::{ClosedWalk, Instance};
use crate::reductions::RectTspInstance;
use crate::solver::SolveReport;

fn int_array<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::from("[");
    for (i, x) in items.into_iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{x}").expect("writing to a String");
    }
    out.push(']');
    out
}

fn edge_array(edges: &[Edge]) -> String {
    let mut out = String::from("[");
    for (i, e) in edges.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "[{},{}]", e.u, e.v).expect("writing to a String");
    }
    out.push(']');
    out
}

pub fn instance_to_json(inst: &Instance) -> String {
    let g = inst.graph();
    let graph = match g.kind() {
        GraphKind::Grid { rows, cols } => {
            format!(r#"{{"type": "grid", "rows": {rows}, "cols": {cols}}}"#)
        }
        GraphKind::General => format!(
            r#"{{"type": "general", "num_vertices": {}, "edges": {}}}"#,
            g.num_vertices(),
            edge_array(g.edges())
        ),
    };
    format!(
        r#"{{"graph": {graph}, "customers": {}}}"#,
        edge_array(inst.customers())
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    graph: GraphDesc,
    customers: Vec<[Vertex; 2]>,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
enum GraphDesc {
    Grid {
        rows: usize,
        cols: usize,
    },
    General {
        num_vertices: usize,
        edges: Vec<[Vertex; 2]>,
    },
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    let file: InstanceFile = serde_json::from_str(text).map_err(parse_err)?;
    let graph = match file.graph {
        GraphDesc::Grid { rows, cols } => Graph::grid(rows, cols)?,
        GraphDesc::General {
            num_vertices,
            edges,
        } => Graph::new(num_vertices, edges.into_iter().map(|[a, b]| (a, b)))?,
    };
    let customers = file
        .customers
        .into_iter()
        .map(|[a, b]| {
            if a == b {
                Err(Error::SelfLoop(a))
            } else {
                Ok(Edge::new(a, b))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(graph, customers)
}

pub fn walk_to_json(walk: &ClosedWalk) -> String {
    format!(
        r#"{{"walk": {}, "length": {}}}"#,
        int_array(walk.vertices()),
        walk.length()
    )
}

#[derive(Deserialize)]
struct WalkFile {
    walk: Vec<Vertex>,
    length: Option<usize>,
}

/// Reads a walk file. Solve reports are accepted too, since they carry the
/// same `walk` and `length` fields.
pub fn walk_from_json(text: &str) -> Result<ClosedWalk> {
    let file: WalkFile = serde_json::from_str(text).map_err(parse_err)?;
    let walk = ClosedWalk::new(file.walk).map_err(|e| Error::Parse(e.to_string()))?;
    match file.length {
        Some(k) if k != walk.length() => Err(Error::Parse(format!(
            "declared length {k} but the walk has {} edges",
            walk.length()
        ))),
        _ => Ok(walk),
    }
}

pub fn report_to_json(report: &SolveReport) -> String {
    let factor = report
        .guarantee_factor
        .map(|r| format!("\"{r}\""))
        .unwrap_or_else(|| "null".into());
    let mut out = format!(
        r#"{{"algorithm": "{}", "walk": {}, "length": {}, "guarantee_factor": {factor}"#,
        report.algorithm,
        int_array(report.walk.vertices()),
        report.length(),
    );
    if let Some(lb) = report.lower_bound {
        write!(out, r#", "lower_bound": {lb}"#).expect("writing to a String");
    }
    out.push('}');
    out
}

pub fn rect_to_json(r: &RectTspInstance) -> String {
    let points: Vec<String> = r
        .points()
        .iter()
        .map(|(x, y)| format!("[{x},{y}]"))
        .collect();
    format!(
        r#"{{"points": [{}], "bound": {}}}"#,
        points.join(","),
        r.bound()
    )
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RectFile {
    points: Vec<[u64; 2]>,
    bound: u64,
}

pub fn rect_from_json(text: &str) -> Result<RectTspInstance> {
    let file: RectFile = serde_json::from_str(text).map_err(parse_err)?;
    RectTspInstance::new(
        file.points.into_iter().map(|[x, y]| (x, y)).collect(),
        file.bound,
    )
}
