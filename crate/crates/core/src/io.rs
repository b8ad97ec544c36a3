//! Edge-list readers and writers.
//!
//! Static files hold one edge per line, `u v` or `u v w`; temporal files hold
//! `u v t` with an integer timestamp. Fields are whitespace separated, extra
//! trailing columns are ignored, and lines starting with `#` or `%` are
//! comments (SNAP and KONECT headers).
//!
//! Vertex labels are mapped to dense ids. When every label is an integer the
//! ids follow numeric order, otherwise order of first appearance.

use std::collections::HashMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Assigns dense ids to labels given in order of first appearance.
#[derive(Default)]
pub(crate) struct LabelInterner {
    ids: HashMap<String, VertexId>,
    labels: Vec<String>,
}

impl LabelInterner {
    pub(crate) fn intern(&mut self, label: &str) -> VertexId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.ids.insert(label.to_owned(), id);
        self.labels.push(label.to_owned());
        id
    }

    /// Final label table plus a permutation from provisional to final ids.
    pub(crate) fn finish(self) -> (Vec<String>, Vec<VertexId>) {
        let numeric: Option<Vec<i128>> = self.labels.iter().map(|l| l.parse().ok()).collect();
        let Some(numeric) = numeric else {
            let identity = (0..self.labels.len()).collect();
            return (self.labels, identity);
        };
        let mut order: Vec<VertexId> = (0..self.labels.len()).collect();
        order.sort_by_key(|&i| numeric[i]);
        let mut remap = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let mut labels = self.labels;
        let sorted = order.iter().map(|&i| std::mem::take(&mut labels[i])).collect();
        (sorted, remap)
    }
}

pub fn parse_edge_list(text: &str, weighted: bool) -> Result<Graph> {
    let mut interner = LabelInterner::default();
    let mut edges = Vec::new();
    for (line, fields) in data_lines(text) {
        let min_fields = if weighted { 3 } else { 2 };
        if fields.len() < min_fields {
            return Err(parse_error(
                line,
                format!("expected at least {min_fields} fields, found {}", fields.len()),
            ));
        }
        let w = if weighted {
            let w: f64 = fields[2]
                .parse()
                .map_err(|_| parse_error(line, format!("invalid weight {:?}", fields[2])))?;
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::NonPositiveWeight { line, weight: w });
            }
            w
        } else {
            1.0
        };
        if fields[0] == fields[1] {
            continue;
        }
        let u = interner.intern(fields[0]);
        let v = interner.intern(fields[1]);
        edges.push((u, v, w));
    }
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let (labels, remap) = interner.finish();
    let edges = edges.into_iter().map(|(u, v, w)| (remap[u], remap[v], w));
    Ok(Graph::build(labels, edges, weighted))
}

/// Reads a static edge list and returns the simplified graph.
pub fn load_edge_list(path: impl AsRef<Path>, weighted: bool) -> Result<Graph> {
    parse_edge_list(&read_file(path.as_ref())?, weighted)
}

/// Writes `label label [weight]` per edge; reloading yields an equal graph
/// when the graph has no isolated vertices.
pub fn write_edge_list(g: &Graph, mut out: impl Write) -> io::Result<()> {
    for (u, v, w) in g.edges() {
        if g.is_weighted() {
            writeln!(out, "{} {} {}", g.label(u), g.label(v), w)?;
        } else {
            writeln!(out, "{} {}", g.label(u), g.label(v))?;
        }
    }
    Ok(())
}

/// Writes the `dense_id<TAB>original_label` table.
pub fn write_label_map(g: &Graph, mut out: impl Write) -> io::Result<()> {
    for (id, label) in g.labels().iter().enumerate() {
        writeln!(out, "{id}\t{label}")?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalEdge {
    pub u: String,
    pub v: String,
    pub timestamp: i64,
}

/// Timestamped edges in input order. Self-loops are already dropped;
/// duplicates are kept.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TemporalEdgeList {
    pub entries: Vec<TemporalEdge>,
}

impl TemporalEdgeList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, u: impl Into<String>, v: impl Into<String>, timestamp: i64) {
        let (u, v) = (u.into(), v.into());
        if u != v {
            self.entries.push(TemporalEdge { u, v, timestamp });
        }
    }

    /// Entries ordered by timestamp, ties kept in input order.
    pub fn sorted(&self) -> Vec<&TemporalEdge> {
        let mut order: Vec<&TemporalEdge> = self.entries.iter().collect();
        order.sort_by_key(|e| e.timestamp);
        order
    }
}

pub fn parse_temporal_edge_list(text: &str) -> Result<TemporalEdgeList> {
    let mut list = TemporalEdgeList::default();
    for (line, fields) in data_lines(text) {
        if fields.len() < 3 {
            return Err(parse_error(line, format!("expected 3 fields, found {}", fields.len())));
        }
        let t: i64 = fields[2]
            .parse()
            .map_err(|_| parse_error(line, format!("invalid timestamp {:?}", fields[2])))?;
        list.push(fields[0], fields[1], t);
    }
    Ok(list)
}

pub fn load_temporal_edge_list(path: impl AsRef<Path>) -> Result<TemporalEdgeList> {
    parse_temporal_edge_list(&read_file(path.as_ref())?)
}
