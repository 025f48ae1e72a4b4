//! Undirected simple graphs with exact BFS distance machinery.
//!
//! Distances are small integers; a vertex pair in different components is an
//! explicit `None`, never a sentinel value, because Cayley graphs of
//! non-generating connection sets are legitimately disconnected.

use std::collections::VecDeque;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),
    #[error("no path between vertices {0} and {1}")]
    UnreachablePair(usize, usize),
    #[error("graph has {0} vertices, beyond the {1}-vertex cap for isomorphism testing")]
    IsomorphismSizeCap(usize, usize),
}

/// An undirected simple graph with sorted neighbor lists and optional
/// per-vertex labels carried along for reports and DOT export.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); vertex_count],
            labels: None,
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut graph = Self::new(vertex_count);
        for (u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    /// Inserts the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, count: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if let Err(pos) = self.adjacency[u].binary_search(&v) {
            self.adjacency[u].insert(pos, v);
            let pos = self.adjacency[v].binary_search(&u).unwrap_err();
            self.adjacency[v].insert(pos, u);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = Some(labels);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.set_labels(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }
}

/// Exact geodesic distances from one source; unreachable vertices are `None`.
pub fn bfs_distances(graph: &Graph, source: usize) -> Result<Vec<Option<u32>>, GraphError> {
    let n = graph.vertex_count();
    if source >= n {
        return Err(GraphError::VertexOutOfRange { vertex: source, count: n });
    }
    let mut dist = vec![None; n];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect("queued vertices have distances");
        for &v in graph.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// All-pairs BFS distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    dist: Vec<Vec<Option<u32>>>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[u][v]
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    /// Largest finite entry; `None` on the empty graph.
    pub fn diameter(&self) -> Option<u32> {
        self.dist.iter().flatten().flatten().copied().max()
    }

    pub fn all_finite(&self) -> bool {
        self.dist.iter().flatten().all(Option::is_some)
    }

    /// Row-major finite distances, available only when every pair is reachable.
    pub fn dense_finite(&self) -> Option<Vec<u32>> {
        let n = self.vertex_count();
        let mut flat = Vec::with_capacity(n * n);
        for row in &self.dist {
            for &d in row {
                flat.push(d?);
            }
        }
        Some(flat)
    }

    /// Test-only fault injection hook: overwrite one entry (symmetrically not
    /// applied, by design, so a corrupted matrix is detectable).
    pub fn set_entry(&mut self, u: usize, v: usize, d: Option<u32>) {
        self.dist[u][v] = d;
    }
}

pub fn all_pairs_distances(graph: &Graph) -> DistanceMatrix {
    let dist = (0..graph.vertex_count())
        .map(|s| bfs_distances(graph, s).expect("source in range"))
        .collect();
    DistanceMatrix { dist }
}

pub fn is_connected(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    if n == 0 {
        return true;
    }
    bfs_distances(graph, 0)
        .expect("vertex 0 exists")
        .iter()
        .all(Option::is_some)
}

/// BFS 2-coloring over every component.
pub fn is_bipartite(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    let mut color = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &v in graph.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn is_regular(graph: &Graph, k: usize) -> bool {
    (0..graph.vertex_count()).all(|v| graph.degree(v) == k)
}

/// Number of distinct geodesics between `u` and `v`, by dynamic programming
/// over the BFS layer DAG from `u`. Counts grow combinatorially, hence the
/// unbounded integer result.
pub fn count_shortest_paths(
    graph: &Graph,
    u: usize,
    v: usize,
    dist: &DistanceMatrix,
) -> Result<BigUint, GraphError> {
    let n = graph.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, count: n });
        }
    }
    if u == v {
        return Ok(BigUint::from(1u32));
    }
    let target = dist.get(u, v).ok_or(GraphError::UnreachablePair(u, v))?;
    // Vertices on some u-v geodesic, processed in increasing distance from u.
    let mut by_layer: Vec<Vec<usize>> = vec![Vec::new(); target as usize + 1];
    for w in 0..n {
        if let (Some(dw), Some(dwv)) = (dist.get(u, w), dist.get(w, v)) {
            if dw + dwv == target {
                by_layer[dw as usize].push(w);
            }
        }
    }
    let mut count = vec![BigUint::from(0u32); n];
    count[u] = BigUint::from(1u32);
    for layer in 1..by_layer.len() {
        for &w in &by_layer[layer] {
            let mut total = BigUint::from(0u32);
            for &p in graph.neighbors(w) {
                if dist.get(u, p) == Some(layer as u32 - 1) {
                    total += &count[p];
                }
            }
            count[w] = total;
        }
    }
    Ok(count[v].clone())
}

/// Checks the stepping property of geodesic distances: across any edge
/// `u ~ v`, the distances to every other vertex differ by at most one.
/// Used as a self-test of the BFS layer; a corrupted matrix fails it.
pub fn distance_step_check(graph: &Graph, dist: &DistanceMatrix) -> bool {
    let n = graph.vertex_count();
    for (u, v) in graph.edges() {
        for w in 0..n {
            match (dist.get(u, w), dist.get(v, w)) {
                (Some(a), Some(b)) => {
                    if a.abs_diff(b) > 1 {
                        return false;
                    }
                }
                (None, None) => {}
                _ => return false,
            }
        }
    }
    true
}

#[cfg(test)]
pub(crate) fn cycle_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

#[cfg(test)]
pub(crate) fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
}

#[cfg(test)]
pub(crate) fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

#[cfg(test)]
pub(crate) fn hypercube_graph(d: u32) -> Graph {
    let n = 1usize << d;
    Graph::from_edges(
        n,
        (0..n).flat_map(move |u| (0..d).map(move |b| (u, u ^ (1 << b)))),
    )
    .unwrap()
}
