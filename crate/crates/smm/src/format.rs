//! Line-oriented text format for labeled multigraphs.
//!
//! ```text
//! multigraph undirected
//! # comments start with '#'
//! v 0 red,green
//! v 1
//! e 0 1 brown
//! ```
//!
//! The header declares directedness. Vertex lines must appear with ids
//! `0..n-1` in order; the comma-separated label list may be empty. Edge lines
//! carry one label each, so a node pair with multiplicity `m` appears on `m`
//! lines. The serializer emits one canonical form: vertices ascending with
//! label names sorted, then edges sorted by `(src, dst, label name)`,
//! undirected edges once with `src <= dst`.

use crate::error::{Error, Result};
use crate::graph::LabeledMultigraph;

pub fn parse(text: &str) -> Result<LabeledMultigraph> {
    let mut graph: Option<LabeledMultigraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap();
        match (tag, &mut graph) {
            ("multigraph", g @ None) => {
                let directed = match fields.next() {
                    Some("directed") => true,
                    Some("undirected") => false,
                    other => {
                        return Err(Error::parse(
                            lineno,
                            format!("expected 'directed' or 'undirected', got {:?}", other.unwrap_or("")),
                        ))
                    }
                };
                if fields.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after header"));
                }
                *g = Some(LabeledMultigraph::new(directed));
            }
            ("multigraph", Some(_)) => {
                return Err(Error::parse(lineno, "duplicate header line"));
            }
            (_, None) => {
                return Err(Error::parse(lineno, "missing 'multigraph' header line"));
            }
            ("v", Some(g)) => {
                let id: usize = fields
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "vertex line without id"))?
                    .parse()
                    .map_err(|_| Error::parse(lineno, "vertex id is not a non-negative integer"))?;
                if id != g.node_count() {
                    return Err(Error::parse(
                        lineno,
                        format!("vertex ids must appear in order; expected {}, got {}", g.node_count(), id),
                    ));
                }
                let mut labels = Vec::new();
                if let Some(list) = fields.next() {
                    for name in list.split(',') {
                        if name.is_empty() {
                            return Err(Error::parse(lineno, "empty label name in label list"));
                        }
                        labels.push(g.intern_node_label(name));
                    }
                }
                if fields.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after vertex line"));
                }
                g.add_node(&labels);
            }
            ("e", Some(g)) => {
                let mut next_id = |what: &str| -> Result<usize> {
                    fields
                        .next()
                        .ok_or_else(|| Error::parse(lineno, format!("edge line without {what}")))?
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("edge {what} is not a non-negative integer")))
                };
                let src = next_id("source")?;
                let dst = next_id("destination")?;
                let label = fields
                    .next()
                    .ok_or_else(|| Error::parse(lineno, "edge line without label"))?;
                if fields.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after edge line"));
                }
                let l = g.intern_edge_label(label);
                g.add_edge(src, dst, l)
                    .map_err(|_| Error::parse(lineno, format!("edge references undeclared node ({src} or {dst})")))?;
            }
            (tag, Some(_)) => {
                return Err(Error::parse(lineno, format!("unknown line tag '{tag}'")));
            }
        }
    }
    graph.ok_or_else(|| Error::parse(0, "empty input"))
}

pub fn serialize(g: &LabeledMultigraph) -> String {
    let mut out = String::new();
    out.push_str(if g.is_directed() {
        "multigraph directed\n"
    } else {
        "multigraph undirected\n"
    });
    for u in 0..g.node_count() {
        let mut names: Vec<&str> = g
            .node_labels(u)
            .iter()
            .map(|&l| g.node_dictionary().name(l))
            .collect();
        names.sort_unstable();
        if names.is_empty() {
            out.push_str(&format!("v {u}\n"));
        } else {
            out.push_str(&format!("v {u} {}\n", names.join(",")));
        }
    }
    let mut edges: Vec<(usize, usize, &str)> = g
        .edges()
        .into_iter()
        .map(|(u, v, l)| (u, v, g.edge_dictionary().name(l)))
        .collect();
    edges.sort_unstable();
    for (u, v, l) in edges {
        out.push_str(&format!("e {u} {v} {l}\n"));
    }
    out
}
