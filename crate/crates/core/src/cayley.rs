//! Cayley graphs of finite Abelian groups.
//!
//! A connection set is an inverse-closed subset that omits the identity; the
//! graph joins `u ~ v` whenever `v - u` lies in the set. Construction is pure
//! and vertices are indexed by the canonical enumeration order of the group,
//! so witnesses and reports are reproducible.

use std::fmt;

use crate::graph::Graph;
use crate::group::{AbelianGroup, GroupElement, GroupError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CayleyError {
    #[error("connection set contains the identity element")]
    IdentityInSet,
    #[error("connection set is not inverse-closed: missing inverse of {0}")]
    NotInverseClosed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A validated connection set: canonical (sorted, deduplicated), identity-free
/// and inverse-closed within its group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConnectionSet {
    elements: Vec<GroupElement>,
}

impl ConnectionSet {
    pub fn new(
        group: &AbelianGroup,
        elements: impl IntoIterator<Item = GroupElement>,
    ) -> Result<Self, CayleyError> {
        let mut elements: Vec<GroupElement> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        for e in &elements {
            if e.residues().len() != group.rank() {
                return Err(GroupError::ShapeMismatch {
                    expected: group.rank(),
                    got: e.residues().len(),
                }
                .into());
            }
            if e.is_identity() {
                return Err(CayleyError::IdentityInSet);
            }
            if !elements.contains(&group.inverse(e)) {
                return Err(CayleyError::NotInverseClosed(group.format_element(e)));
            }
        }
        Ok(Self { elements })
    }

    /// Parses the CLI literal: `"1,5,3"` over a cyclic group, or
    /// `"(1,0);(0,2);(1,2)"` over a product.
    pub fn parse(group: &AbelianGroup, literal: &str) -> Result<Self, CayleyError> {
        let parts: Vec<&str> = if literal.contains(';') || literal.contains('(') {
            literal.split(';').collect()
        } else {
            literal.split(',').collect()
        };
        let elements: Result<Vec<GroupElement>, GroupError> = parts
            .iter()
            .filter(|p| !p.trim().is_empty())
            .map(|p| group.parse_element(p))
            .collect();
        Self::new(group, elements?)
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_generating(&self, group: &AbelianGroup) -> bool {
        group.is_generating(&self.elements)
    }

    /// Renders in the same literal syntax [`ConnectionSet::parse`] accepts.
    pub fn format(&self, group: &AbelianGroup) -> String {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|e| group.format_element(e))
            .collect();
        if group.rank() == 1 {
            parts.join(",")
        } else {
            parts.join(";")
        }
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .elements
            .iter()
            .map(|e| {
                if e.residues().len() == 1 {
                    e.residues()[0].to_string()
                } else {
                    let inner: Vec<String> =
                        e.residues().iter().map(u64::to_string).collect();
                    format!("({})", inner.join(","))
                }
            })
            .collect();
        write!(f, "{}", parts.join(if self.elements.first().map_or(1, |e| e.residues().len()) == 1 { "," } else { ";" }))
    }
}

/// Builds the Cayley graph: `|S|`-regular on `|G|` vertices, labeled by group
/// elements, connected exactly when the set generates.
pub fn build_cayley(group: &AbelianGroup, set: &ConnectionSet) -> Graph {
    let n = group.order() as usize;
    let mut graph = Graph::new(n);
    let elements: Vec<GroupElement> = group.elements().collect();
    for (u, g) in elements.iter().enumerate() {
        for s in set.elements() {
            let h = group.add(g, s).expect("validated set shares the group shape");
            let v = group.index_of(&h);
            if u < v {
                graph.add_edge(u, v).expect("indices in range, s != identity");
            }
        }
    }
    let labels = elements.iter().map(|e| group.format_element(e)).collect();
    graph.with_labels(labels)
}

/// Every inverse-closed identity-free subset of the group with at most
/// `max_size` elements, each exactly once, in lexicographic order of the
/// canonical element sequence. `generating_only` keeps just the sets whose
/// Cayley graph is connected.
pub fn enumerate_connection_sets(
    group: &AbelianGroup,
    max_size: usize,
    generating_only: bool,
) -> Vec<ConnectionSet> {
    // Atoms {g, -g}: singletons for involutions, pairs otherwise. Every
    // inverse-closed set is a disjoint union of atoms, so subsets of atoms
    // enumerate the candidates without duplicates.
    let mut seen = vec![false; group.order() as usize];
    seen[group.index_of(&group.identity())] = true;
    let mut atoms: Vec<Vec<GroupElement>> = Vec::new();
    for g in group.elements() {
        let idx = group.index_of(&g);
        if seen[idx] {
            continue;
        }
        seen[idx] = true;
        let inv = group.inverse(&g);
        if inv == g {
            atoms.push(vec![g]);
        } else {
            seen[group.index_of(&inv)] = true;
            atoms.push(vec![g, inv]);
        }
    }

    let mut sets = Vec::new();
    let mut stack: Vec<(usize, Vec<GroupElement>)> = vec![(0, Vec::new())];
    while let Some((next_atom, current)) = stack.pop() {
        for (i, atom) in atoms.iter().enumerate().skip(next_atom) {
            if current.len() + atom.len() > max_size {
                continue;
            }
            let mut extended = current.clone();
            extended.extend(atom.iter().cloned());
            if !extended.is_empty() {
                sets.push(extended.clone());
            }
            stack.push((i + 1, extended));
        }
    }

    let mut sets: Vec<ConnectionSet> = sets
        .into_iter()
        .map(|mut elements| {
            elements.sort();
            ConnectionSet { elements }
        })
        .collect();
    sets.sort();
    if generating_only {
        sets.retain(|s| s.is_generating(group));
    }
    sets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, cycle_graph, is_bipartite, is_connected, is_regular};
    use crate::iso::is_isomorphic;

    fn group(literal: &str) -> AbelianGroup {
        literal.parse().unwrap()
    }

    fn set(g: &AbelianGroup, literal: &str) -> ConnectionSet {
        ConnectionSet::parse(g, literal).unwrap()
    }

    #[test]
    fn validation_catches_identity_and_missing_inverses() {
        let z6 = group("Z6");
        assert_eq!(
            ConnectionSet::parse(&z6, "0,1,5").unwrap_err(),
            CayleyError::IdentityInSet
        );
        assert_eq!(
            ConnectionSet::parse(&z6, "1,2,5").unwrap_err(),
            CayleyError::NotInverseClosed("2".into())
        );
        assert!(ConnectionSet::parse(&z6, "1,5,3").is_ok());
    }

    #[test]
    fn literals_round_trip() {
        let z6 = group("Z6");
        let s = set(&z6, "5,3,1");
        assert_eq!(s.format(&z6), "1,3,5");
        let g24 = group("Z2xZ4");
        let t = ConnectionSet::parse(&g24, "(1,0);(0,2);(1,2)").unwrap();
        assert_eq!(t.format(&g24), "(0,2);(1,0);(1,2)");
        assert_eq!(ConnectionSet::parse(&g24, &t.format(&g24)).unwrap(), t);
    }

    #[test]
    fn step_one_circulant_is_a_cycle() {
        let z6 = group("Z6");
        let g = build_cayley(&z6, &set(&z6, "1,5"));
        assert!(is_isomorphic(&g, &cycle_graph(6)).unwrap());
        assert_eq!(g.label(3), Some("3"));
    }

    #[test]
    fn antipodal_circulant_on_six_is_the_triangular_prism() {
        let z6 = group("Z6");
        let g = build_cayley(&z6, &set(&z6, "2,4,3"));
        // two triangles {0,2,4}, {1,3,5} joined by a perfect matching
        let prism = Graph::from_edges(
            6,
            [(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (5, 1), (0, 3), (2, 5), (4, 1)],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!(is_isomorphic(&g, &prism).unwrap());
    }

    #[test]
    fn full_connection_set_on_z4_is_complete() {
        let z4 = group("Z4");
        let g = build_cayley(&z4, &set(&z4, "1,3,2"));
        assert!(is_isomorphic(&g, &crate::graph::complete_graph(4)).unwrap());
    }

    #[test]
    fn product_group_prism_and_cube() {
        let g24 = group("Z2xZ4");
        let prism_like = build_cayley(&g24, &ConnectionSet::parse(&g24, "(1,0);(0,1);(0,3)").unwrap());
        let cube = crate::graph::hypercube_graph(3); // Q3 = P2 x C4
        assert!(is_isomorphic(&prism_like, &cube).unwrap());

        let z2cubed = group("Z2xZ2xZ2");
        let s = ConnectionSet::parse(&z2cubed, "(1,0,0);(0,1,0);(0,0,1)").unwrap();
        assert!(is_isomorphic(&build_cayley(&z2cubed, &s), &cube).unwrap());
    }

    #[test]
    fn output_is_set_size_regular() {
        for literal in ["Z6", "Z8", "Z2xZ4", "Z2xZ2xZ2", "Z12"] {
            let g = group(literal);
            for s in enumerate_connection_sets(&g, 3, false) {
                let graph = build_cayley(&g, &s);
                assert!(is_regular(&graph, s.len()), "{literal} {s}");
            }
        }
    }

    #[test]
    fn connectivity_equals_generation_exhaustively() {
        // every Abelian group presentation of order <= 24, every S with |S| <= 3
        let mut presentations: Vec<AbelianGroup> = Vec::new();
        for order in 2u64..=24 {
            presentations.extend(crate::sweep::abelian_groups_of_order(order));
        }
        for g in presentations {
            for s in enumerate_connection_sets(&g, 3, false) {
                let graph = build_cayley(&g, &s);
                assert_eq!(
                    is_connected(&graph),
                    s.is_generating(&g),
                    "group {g} set {s}"
                );
            }
        }
    }

    #[test]
    fn translations_are_automorphisms() {
        for literal in ["Z8", "Z2xZ4"] {
            let grp = group(literal);
            for s in enumerate_connection_sets(&grp, 3, false) {
                let graph = build_cayley(&grp, &s);
                for t in grp.elements() {
                    for (u, v) in graph.edges() {
                        let tu = grp.index_of(&grp.add(&grp.element_at(u), &t).unwrap());
                        let tv = grp.index_of(&grp.add(&grp.element_at(v), &t).unwrap());
                        assert!(graph.has_edge(tu, tv), "{literal} {s} translation broke an edge");
                    }
                }
            }
        }
    }

    /// Parity BFS over (element, word length mod 2): independent of the graph
    /// two-coloring it cross-checks.
    fn has_odd_identity_word(group: &AbelianGroup, s: &ConnectionSet) -> bool {
        let n = group.order() as usize;
        let mut seen = vec![[false; 2]; n];
        let e = group.index_of(&group.identity());
        seen[e][0] = true;
        let mut frontier = vec![(e, 0usize)];
        while let Some((at, parity)) = frontier.pop() {
            for step in s.elements() {
                let next = group.index_of(
                    &group.add(&group.element_at(at), step).expect("same shape"),
                );
                let next_parity = (parity + 1) % 2;
                if !seen[next][next_parity] {
                    seen[next][next_parity] = true;
                    frontier.push((next, next_parity));
                }
            }
        }
        seen[e][1]
    }

    #[test]
    fn bipartiteness_matches_odd_word_reachability() {
        for order in 2u64..=16 {
            for grp in crate::sweep::abelian_groups_of_order(order) {
                for s in enumerate_connection_sets(&grp, 3, true) {
                    let graph = build_cayley(&grp, &s);
                    assert_eq!(
                        is_bipartite(&graph),
                        !has_odd_identity_word(&grp, &s),
                        "group {grp} set {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let z4 = group("Z4");
        let all: Vec<String> = enumerate_connection_sets(&z4, 3, false)
            .iter()
            .map(|s| s.format(&z4))
            .collect();
        assert_eq!(all, vec!["1,2,3", "1,3", "2"]);

        let klein = group("Z2xZ2");
        let sets = enumerate_connection_sets(&klein, 3, false);
        let singles = sets.iter().filter(|s| s.len() == 1).count();
        let pairs = sets.iter().filter(|s| s.len() == 2).count();
        let triples = sets.iter().filter(|s| s.len() == 3).count();
        assert_eq!((singles, pairs, triples), (3, 3, 1));

        let z6 = group("Z6");
        let generating: Vec<String> = enumerate_connection_sets(&z6, 3, true)
            .iter()
            .map(|s| s.format(&z6))
            .collect();
        assert_eq!(generating, vec!["1,3,5", "1,5", "2,3,4"]);
    }

    #[test]
    fn degenerate_distances_on_disconnected_cayley_graphs() {
        let z6 = group("Z6");
        let not_generating = set(&z6, "2,4");
        let graph = build_cayley(&z6, &not_generating);
        let dist = all_pairs_distances(&graph);
        assert!(!dist.all_finite());
        assert_eq!(dist.get(0, 1), None);
        assert_eq!(dist.get(0, 2), Some(1));
    }
}
