//! Resolving sets and exact metric dimension.
//!
//! The solver is an incremental exhaustive search over landmark subsets in
//! lexicographic order, with three sound prunings: a path test answers
//! dimension one, twin classes raise the search floor, and the two-landmark
//! stage only examines pairs that a dimension-two witness could possibly be
//! (both degrees at most three, unique geodesic between the landmarks).
//! Reported witnesses are the lexicographically first ones, so runs are
//! reproducible and diffable.

use itertools::Itertools;
use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{count_shortest_paths, DistanceMatrix, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("metric dimension is undefined on a disconnected graph")]
    Disconnected,
    #[error("landmark list must be nonempty")]
    EmptyLandmarks,
    #[error("landmark {0} is listed twice")]
    DuplicateLandmark(usize),
    #[error("vertex {vertex} is out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("search cap must be at least 1")]
    CapTooSmall,
}

/// Verdict of checking one landmark set: either every vertex got a distinct
/// metric representation, or here is the smallest pair that collides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ResolutionVerdict {
    Resolving,
    Collision { a: usize, b: usize },
}

/// A landmark set together with the evidence for (or against) resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolvingWitness {
    pub landmarks: Vec<usize>,
    pub verdict: ResolutionVerdict,
}

impl ResolvingWitness {
    pub fn is_resolving(&self) -> bool {
        matches!(self.verdict, ResolutionVerdict::Resolving)
    }
}

/// Outcome of the bounded dimension search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DimensionOutcome {
    Exact { dim: usize, witness: Vec<usize> },
    /// No resolving set with at most `cap` landmarks; the dimension is at
    /// least `cap + 1`.
    ExceedsCap { cap: usize },
}

impl DimensionOutcome {
    pub fn dim(&self) -> Option<usize> {
        match self {
            DimensionOutcome::Exact { dim, .. } => Some(*dim),
            DimensionOutcome::ExceedsCap { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            DimensionOutcome::Exact { witness, .. } => Some(witness),
            DimensionOutcome::ExceedsCap { .. } => None,
        }
    }
}

/// Metric representation of one vertex: its distance to each landmark, in
/// landmark order.
pub fn representation(dist: &DistanceMatrix, vertex: usize, landmarks: &[usize]) -> Vec<u32> {
    landmarks
        .iter()
        .map(|&w| dist.get(vertex, w).expect("connected graph"))
        .collect()
}

fn validate_landmarks(graph: &Graph, landmarks: &[usize]) -> Result<(), MetricError> {
    if landmarks.is_empty() {
        return Err(MetricError::EmptyLandmarks);
    }
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    for &w in landmarks {
        if w >= n {
            return Err(MetricError::VertexOutOfRange { vertex: w, count: n });
        }
        if seen[w] {
            return Err(MetricError::DuplicateLandmark(w));
        }
        seen[w] = true;
    }
    Ok(())
}

/// Checks whether `landmarks` resolves the graph. On failure the verdict
/// carries the lexicographically smallest colliding vertex pair.
pub fn is_resolving(
    graph: &Graph,
    dist: &DistanceMatrix,
    landmarks: &[usize],
) -> Result<ResolvingWitness, MetricError> {
    if graph.vertex_count() == 0 || !dist.all_finite() {
        return Err(MetricError::Disconnected);
    }
    validate_landmarks(graph, landmarks)?;

    let n = graph.vertex_count();
    let mut keyed: Vec<(Vec<u32>, usize)> = (0..n)
        .map(|v| (representation(dist, v, landmarks), v))
        .collect();
    keyed.sort();
    let mut collision: Option<(usize, usize)> = None;
    for pair in keyed.windows(2) {
        if pair[0].0 == pair[1].0 {
            let (a, b) = (pair[0].1.min(pair[1].1), pair[0].1.max(pair[1].1));
            collision = match collision {
                Some(best) if best <= (a, b) => Some(best),
                _ => Some((a, b)),
            };
        }
    }
    Ok(ResolvingWitness {
        landmarks: landmarks.to_vec(),
        verdict: match collision {
            None => ResolutionVerdict::Resolving,
            Some((a, b)) => ResolutionVerdict::Collision { a, b },
        },
    })
}

/// Fast injectivity check used inside the search loops. Distances are packed
/// eight bits per landmark when they fit, which they always do at desk scale.
struct RepChecker {
    flat: Vec<u32>,
    n: usize,
    packed: bool,
    buf_u64: Vec<u64>,
    buf_wide: Vec<Vec<u32>>,
}

impl RepChecker {
    fn new(dist: &DistanceMatrix) -> Option<Self> {
        let flat = dist.dense_finite()?;
        let n = dist.vertex_count();
        let packed = flat.iter().all(|&d| d < 256);
        Some(Self {
            flat,
            n,
            packed,
            buf_u64: Vec::with_capacity(n),
            buf_wide: Vec::new(),
        })
    }

    fn resolves(&mut self, landmarks: &[usize]) -> bool {
        if self.packed && landmarks.len() <= 8 {
            self.buf_u64.clear();
            for v in 0..self.n {
                let mut key = 0u64;
                for &w in landmarks {
                    key = (key << 8) | u64::from(self.flat[w * self.n + v]);
                }
                self.buf_u64.push(key);
            }
            self.buf_u64.sort_unstable();
            self.buf_u64.windows(2).all(|w| w[0] != w[1])
        } else {
            self.buf_wide.clear();
            for v in 0..self.n {
                self.buf_wide.push(
                    landmarks
                        .iter()
                        .map(|&w| self.flat[w * self.n + v])
                        .collect(),
                );
            }
            self.buf_wide.sort_unstable();
            self.buf_wide.windows(2).all(|w| w[0] != w[1])
        }
    }
}

fn is_path_graph(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    match n {
        0 => false,
        1 => true,
        _ => {
            let mut ends = 0usize;
            for v in 0..n {
                match graph.degree(v) {
                    1 => ends += 1,
                    2 => {}
                    _ => return false,
                }
            }
            // degree profile of a path plus connectivity
            ends == 2 && crate::graph::is_connected(graph)
        }
    }
}

/// Partition of the vertices into twin classes: vertices whose distances to
/// every third vertex agree. Any resolving set must contain all but one
/// member of each class, which yields a sound search floor.
pub fn twin_classes(graph: &Graph) -> Vec<Vec<usize>> {
    let dist = crate::graph::all_pairs_distances(graph);
    let n = graph.vertex_count();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[v] = Some(id);
        classes.push(vec![v]);
        for u in v + 1..n {
            if class_of[u].is_some() {
                continue;
            }
            let twins = (0..n)
                .filter(|&w| w != u && w != v)
                .all(|w| dist.get(v, w) == dist.get(u, w));
            if twins {
                class_of[u] = Some(id);
                classes[id].push(u);
            }
        }
    }
    classes
}

/// Lower bound on the metric dimension from twin classes.
pub fn twin_floor(graph: &Graph) -> usize {
    twin_classes(graph)
        .iter()
        .map(|class| class.len() - 1)
        .sum()
}

/// Searches for a resolving pair. Candidate pairs are pre-filtered to the
/// shape a two-landmark witness must have — both degrees at most three and a
/// unique geodesic between the landmarks — before the full injectivity check
/// runs. The filter cannot lose witnesses: whenever some pair resolves, every
/// resolving pair satisfies those conditions.
pub fn dim2_search(
    graph: &Graph,
    dist: &DistanceMatrix,
) -> Result<Option<(usize, usize)>, MetricError> {
    if !dist.all_finite() || graph.vertex_count() == 0 {
        return Err(MetricError::Disconnected);
    }
    let n = graph.vertex_count();
    let mut checker = RepChecker::new(dist).expect("connected graph");
    let one = BigUint::from(1u32);
    for u in 0..n {
        if graph.degree(u) > 3 {
            continue;
        }
        for v in u + 1..n {
            if graph.degree(v) > 3 {
                continue;
            }
            let geodesics =
                count_shortest_paths(graph, u, v, dist).expect("connected graph");
            if geodesics != one {
                continue;
            }
            if checker.resolves(&[u, v]) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Exact metric dimension up to `cap` landmarks, with the lexicographically
/// first witness. A graph that needs more than `cap` landmarks reports
/// `ExceedsCap` instead of a wrong number.
pub fn metric_dimension(
    graph: &Graph,
    dist: &DistanceMatrix,
    cap: usize,
) -> Result<DimensionOutcome, MetricError> {
    if cap < 1 {
        return Err(MetricError::CapTooSmall);
    }
    if graph.vertex_count() == 0 || !dist.all_finite() {
        return Err(MetricError::Disconnected);
    }
    let n = graph.vertex_count();

    // dimension one <=> path; the witness is the smallest endpoint
    if is_path_graph(graph) {
        let endpoint = (0..n)
            .find(|&v| graph.degree(v) <= 1)
            .expect("a path has an endpoint");
        return Ok(DimensionOutcome::Exact {
            dim: 1,
            witness: vec![endpoint],
        });
    }

    let floor = twin_floor(graph).max(2);
    if floor > cap {
        return Ok(DimensionOutcome::ExceedsCap { cap });
    }

    if floor <= 2 {
        if let Some((u, v)) = dim2_search(graph, dist)? {
            return Ok(DimensionOutcome::Exact {
                dim: 2,
                witness: vec![u, v],
            });
        }
    }

    let mut checker = RepChecker::new(dist).expect("connected graph");
    for k in floor.max(3)..=cap.min(n) {
        for combo in (0..n).combinations(k) {
            if checker.resolves(&combo) {
                return Ok(DimensionOutcome::Exact {
                    dim: k,
                    witness: combo,
                });
            }
        }
    }
    Ok(DimensionOutcome::ExceedsCap { cap })
}

/// Unfiltered search over all vertex pairs, used to cross-check the pruned
/// [`dim2_search`] and by the landmark-structure verification, which must not
/// inherit the solver's assumptions.
pub fn all_resolving_pairs(
    graph: &Graph,
    dist: &DistanceMatrix,
) -> Result<Vec<(usize, usize)>, MetricError> {
    if !dist.all_finite() || graph.vertex_count() == 0 {
        return Err(MetricError::Disconnected);
    }
    let n = graph.vertex_count();
    let mut checker = RepChecker::new(dist).expect("connected graph");
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if checker.resolves(&[u, v]) {
                pairs.push((u, v));
            }
        }
    }
    Ok(pairs)
}
