//! Exact isomorphism testing for desk-scale graphs.
//!
//! Backtracking over vertex signatures (degree plus sorted distance multiset)
//! rather than canonical labeling: at 64 vertices or fewer this is fast and
//! easy to audit.

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, GraphError};

/// Hard size cap; larger inputs are refused rather than answered wrongly.
pub const ISO_VERTEX_CAP: usize = 64;

/// Per-vertex invariant preserved by every isomorphism.
fn signatures(graph: &Graph, dist: &DistanceMatrix) -> Vec<(usize, Vec<Option<u32>>)> {
    (0..graph.vertex_count())
        .map(|v| {
            let mut profile: Vec<Option<u32>> =
                (0..graph.vertex_count()).map(|w| dist.get(v, w)).collect();
            profile.sort_unstable();
            (graph.degree(v), profile)
        })
        .collect()
}

/// Decides whether two graphs are isomorphic, exactly.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > ISO_VERTEX_CAP {
            return Err(GraphError::IsomorphismSizeCap(g.vertex_count(), ISO_VERTEX_CAP));
        }
    }
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    if n == 0 {
        return Ok(true);
    }

    let d1 = all_pairs_distances(g1);
    let d2 = all_pairs_distances(g2);
    let sig1 = signatures(g1, &d1);
    let sig2 = signatures(g2, &d2);
    {
        let mut m1 = sig1.clone();
        let mut m2 = sig2.clone();
        m1.sort();
        m2.sort();
        if m1 != m2 {
            return Ok(false);
        }
    }

    // Candidates in g2 for each vertex of g1, by signature equality.
    let candidates: Vec<Vec<usize>> = sig1
        .iter()
        .map(|s| (0..n).filter(|&v| &sig2[v] == s).collect())
        .collect();

    // Most-constrained vertices first shrinks the search tree.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (candidates[u].len(), u));

    let mut mapping: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];

    fn assign(
        depth: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        d1: &DistanceMatrix,
        d2: &DistanceMatrix,
        mapping: &mut [Option<usize>],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let u = order[depth];
        'next: for &v in &candidates[u] {
            if used[v] {
                continue;
            }
            // Distance preservation against everything mapped so far subsumes
            // the adjacency check (distance one <=> edge).
            for &p in &order[..depth] {
                let q = mapping[p].expect("earlier vertices are mapped");
                if d1.get(u, p) != d2.get(v, q) {
                    continue 'next;
                }
            }
            mapping[u] = Some(v);
            used[v] = true;
            if assign(depth + 1, order, candidates, d1, d2, mapping, used) {
                return true;
            }
            mapping[u] = None;
            used[v] = false;
        }
        false
    }

    Ok(assign(0, &order, &candidates, &d1, &d2, &mut mapping, &mut used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, hypercube_graph, path_graph};

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        let mut out = Graph::new(g.vertex_count());
        for (u, v) in g.edges() {
            out.add_edge(perm[u], perm[v]).unwrap();
        }
        out
    }

    /// Brute force over all vertex bijections; only viable for n <= 7.
    fn isomorphic_by_permutations(g1: &Graph, g2: &Graph) -> bool {
        let n = g1.vertex_count();
        if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if g1
                .edges()
                .all(|(u, v)| g2.has_edge(perm[u], perm[v]))
            {
                return true;
            }
            // next_permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                return false;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn detects_relabelings() {
        let q3 = hypercube_graph(3);
        let shuffled = permuted(&q3, &[5, 2, 7, 0, 3, 6, 1, 4]);
        assert!(is_isomorphic(&q3, &shuffled).unwrap());
    }

    #[test]
    fn distinguishes_same_degree_sequence() {
        // C6 vs two disjoint triangles: both 2-regular on 6 vertices.
        let c6 = cycle_graph(6);
        let triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &triangles).unwrap());

        let k33 =
            Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert!(!is_isomorphic(&c6, &k33).unwrap());
    }

    #[test]
    fn agrees_with_permutation_brute_force_up_to_seven_vertices() {
        let corpus: Vec<Graph> = vec![
            cycle_graph(5),
            cycle_graph(6),
            path_graph(6),
            complete_graph(4),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap(),
            Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap(),
            Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6)]).unwrap(),
            permuted(&cycle_graph(6), &[3, 1, 4, 0, 5, 2]),
            Graph::new(5),
        ];
        for a in &corpus {
            for b in &corpus {
                assert_eq!(
                    is_isomorphic(a, b).unwrap(),
                    isomorphic_by_permutations(a, b),
                    "disagreement on pair"
                );
            }
        }
    }

    #[test]
    fn refuses_oversized_inputs() {
        let big = Graph::new(65);
        assert!(matches!(
            is_isomorphic(&big, &big),
            Err(GraphError::IsomorphismSizeCap(65, 64))
        ));
    }

    #[test]
    fn empty_graphs_are_isomorphic() {
        assert!(is_isomorphic(&Graph::new(0), &Graph::new(0)).unwrap());
        assert!(!is_isomorphic(&Graph::new(0), &Graph::new(1)).unwrap());
    }
}
