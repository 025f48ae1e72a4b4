//! Graph ingestion and egress.
//!
//! Two formats: DOT (undirected, one edge per line, vertex labels preserved)
//! and a plain adjacency list — first line the vertex count, then one
//! 0-indexed `u v` pair per line.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("adjacency list is missing the vertex-count header")]
    MissingHeader,
    #[error("graph construction failed: {0}")]
    Graph(#[from] crate::graph::GraphError),
}

fn malformed(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        message: message.into(),
    }
}

/// Renders a graph in DOT. Labels, when present, ride along as node attributes.
pub fn to_dot(graph: &Graph, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {name} {{\n"));
    for v in 0..graph.vertex_count() {
        match graph.label(v) {
            Some(label) => out.push_str(&format!("  {v} [label=\"{label}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in graph.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Parses the DOT dialect written by [`to_dot`] (plus insignificant
/// whitespace variation). Node ids must be nonnegative integers.
pub fn from_dot(text: &str) -> Result<Graph, FormatError> {
    let mut nodes: Vec<(usize, Option<String>)> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_vertex: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty()
            || line.starts_with("graph")
            || line.starts_with("strict graph")
            || line == "{"
            || line == "}"
            || line.starts_with("//")
        {
            continue;
        }
        let line = line.trim_end_matches(';').trim();
        if let Some((left, right)) = line.split_once("--") {
            let u: usize = left
                .trim()
                .parse()
                .map_err(|_| malformed(idx + 1, format!("bad vertex id {left:?}")))?;
            let v: usize = right
                .trim()
                .parse()
                .map_err(|_| malformed(idx + 1, format!("bad vertex id {right:?}")))?;
            edges.push((u, v));
            max_vertex = max_vertex.max(Some(u.max(v)));
        } else {
            let (id_part, label) = match line.split_once('[') {
                Some((id_part, attrs)) => {
                    let attrs = attrs.trim_end_matches(']');
                    let label = attrs
                        .split_once("label=")
                        .map(|(_, rest)| rest.trim().trim_matches('"').to_string());
                    (id_part.trim(), label)
                }
                None => (line, None),
            };
            let v: usize = id_part
                .parse()
                .map_err(|_| malformed(idx + 1, format!("bad node declaration {line:?}")))?;
            nodes.push((v, label));
            max_vertex = max_vertex.max(Some(v));
        }
    }

    let count = max_vertex.map_or(0, |m| m + 1);
    let mut graph = Graph::from_edges(count, edges)?;
    if nodes.iter().any(|(_, l)| l.is_some()) {
        let mut labels = vec![String::new(); count];
        for (v, label) in nodes {
            if let Some(l) = label {
                labels[v] = l;
            }
        }
        graph.set_labels(labels);
    }
    Ok(graph)
}

pub fn to_adjacency_list(graph: &Graph) -> String {
    let mut out = format!("{}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_adjacency_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let count: usize = header
        .trim()
        .parse()
        .map_err(|_| FormatError::MissingHeader)?;
    let mut edges = Vec::new();
    for (idx, line) in lines {
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed(idx + 1, "expected exactly two vertex ids"));
        };
        let u: usize = a
            .parse()
            .map_err(|_| malformed(idx + 1, format!("bad vertex id {a:?}")))?;
        let v: usize = b
            .parse()
            .map_err(|_| malformed(idx + 1, format!("bad vertex id {b:?}")))?;
        edges.push((u, v));
    }
    Ok(Graph::from_edges(count, edges)?)
}

/// Content sniffing for CLI file input: DOT starts with a `graph` header.
pub fn parse_auto(text: &str) -> Result<Graph, FormatError> {
    let head = text.trim_start();
    if head.starts_with("graph") || head.starts_with("strict graph") {
        from_dot(text)
    } else {
        from_adjacency_list(text)
    }
}
