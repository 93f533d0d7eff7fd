//! Centralizer and co-centralizer graphs and their clique-union structure.
//!
//! Vertices of the centralizer graph are the distinct proper centralizers,
//! ordered by (cardinality descending, member list ascending); two vertices
//! are adjacent exactly when their cardinalities agree. Equal-cardinality is
//! an equivalence relation, so the graph is always a disjoint union of
//! cliques and its complement is complete multipartite.

use crate::group::{FiniteGroup, GroupError, GroupSpec};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("graph is not a disjoint union of cliques: {0}")]
    NotCliqueUnion(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphVariant {
    Centralizer,
    CoCentralizer,
}

impl GraphVariant {
    pub const ALL: [GraphVariant; 2] = [GraphVariant::Centralizer, GraphVariant::CoCentralizer];

    pub fn as_str(&self) -> &'static str {
        match self {
            GraphVariant::Centralizer => "centralizer",
            GraphVariant::CoCentralizer => "cocentralizer",
        }
    }
}

/// Simple undirected graph with a fixed vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    /// Centralizer cardinality per vertex, when the graph came from a group.
    pub annotations: Option<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            annotations: None,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n)
            .map(|v| self.degree(v))
            .sum::<usize>()
            / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.annotations = self.annotations.clone();
        g
    }

    /// Disjoint union of cliques with the given sizes, blocks laid out in
    /// the given order.
    pub fn union_of_cliques(parts: &[u64]) -> Graph {
        let n: u64 = parts.iter().sum();
        let mut g = Graph::new(n as usize);
        let mut base = 0usize;
        for &p in parts {
            let p = p as usize;
            for u in 0..p {
                for v in u + 1..p {
                    g.add_edge(base + u, base + v);
                }
            }
            base += p;
        }
        g
    }

    /// Complete multipartite graph with the given part sizes, blocks laid
    /// out in the given order.
    pub fn complete_multipartite(parts: &[u64]) -> Graph {
        Graph::union_of_cliques(parts).complement()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in 0..self.n {
                    if !seen[u] && self.has_edge(v, u) {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Multiset of clique sizes, sorted descending. Read as complete-multipartite
/// part sizes for the complement graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliqueDecomposition {
    parts: Vec<u64>,
}

impl CliqueDecomposition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "part sizes are positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CliqueDecomposition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
}

impl std::fmt::Display for CliqueDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Builds the centralizer graph of a non-abelian group: one vertex per
/// distinct proper centralizer, edges between equal cardinalities.
pub fn centralizer_graph(g: &FiniteGroup) -> Result<Graph, GraphError> {
    let cents = g.proper_centralizers()?;
    let cards: Vec<usize> = cents.iter().map(|c| c.cardinality()).collect();
    let mut graph = Graph::new(cents.len());
    for i in 0..cents.len() {
        for j in i + 1..cents.len() {
            if cards[i] == cards[j] {
                graph.add_edge(i, j);
            }
        }
    }
    graph.annotations = Some(cards);
    Ok(graph)
}

/// Complement of the centralizer graph.
pub fn cocentralizer_graph(g: &FiniteGroup) -> Result<Graph, GraphError> {
    Ok(centralizer_graph(g)?.complement())
}

/// Recognizes a disjoint union of complete graphs and returns the sorted
/// multiset of component sizes.
pub fn clique_decomposition(graph: &Graph) -> Result<CliqueDecomposition, GraphError> {
    let comps = graph.components();
    let mut sizes = Vec::with_capacity(comps.len());
    for comp in &comps {
        for (a, &u) in comp.iter().enumerate() {
            for &v in comp.iter().skip(a + 1) {
                if !graph.has_edge(u, v) {
                    return Err(GraphError::NotCliqueUnion(format!(
                        "component {:?} misses edge ({u},{v})",
                        comp
                    )));
                }
            }
        }
        sizes.push(comp.len() as u64);
    }
    Ok(CliqueDecomposition::new(sizes))
}

/// The claimed clique structure of the centralizer graph for each family
/// (equally, the multipartite part sizes of the co-centralizer graph).
pub fn claimed_structure(
    spec: GroupSpec,
    _variant: GraphVariant,
) -> Result<CliqueDecomposition, GroupError> {
    spec.validate()?;
    let parts = match spec {
        GroupSpec::GeneralizedQuaternion { n } => vec![n, 1],
        GroupSpec::Dihedral { n } => dihedral_rule(n),
        GroupSpec::Quasidihedral { n } => vec![1u64 << (n - 2), 1],
        GroupSpec::Metacyclic { p, .. } => dihedral_rule(p),
        GroupSpec::ProjectiveSpecialLinear { k } => psl_parts(k).to_vec(),
    };
    Ok(CliqueDecomposition::new(parts))
}

fn dihedral_rule(n: u64) -> Vec<u64> {
    if n % 2 == 1 {
        vec![n, 1]
    } else {
        vec![n / 2, 1]
    }
}

/// PSL(2,2^k) clique sizes in the conventional block order:
/// (2^k + 1, 2^{k-1}(2^k + 1), 2^{k-1}(2^k - 1)).
pub fn psl_parts(k: u32) -> [u64; 3] {
    let q = 1u64 << k;
    let h = q / 2;
    [q + 1, h * (q + 1), h * (q - 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn graph_of(spec: GroupSpec) -> Graph {
        centralizer_graph(&build_group(spec).unwrap()).unwrap()
    }

    #[test]
    fn quaternion_n3_is_triangle_plus_isolated() {
        let g = graph_of(GroupSpec::GeneralizedQuaternion { n: 3 });
        assert_eq!(g.order(), 4);
        let d = clique_decomposition(&g).unwrap();
        assert_eq!(d.parts(), &[3, 1]);
    }

    #[test]
    fn quaternion_n2_collapses_to_k3() {
        // all centralizers of Q_8 have cardinality 4
        let g = graph_of(GroupSpec::GeneralizedQuaternion { n: 2 });
        let d = clique_decomposition(&g).unwrap();
        assert_eq!(d.parts(), &[3]);
        assert_ne!(
            d,
            claimed_structure(
                GroupSpec::GeneralizedQuaternion { n: 2 },
                GraphVariant::Centralizer
            )
            .unwrap()
        );
    }

    #[test]
    fn dihedral_n5() {
        let g = graph_of(GroupSpec::Dihedral { n: 5 });
        assert_eq!(clique_decomposition(&g).unwrap().parts(), &[5, 1]);
    }

    #[test]
    fn cocentralizer_is_complement() {
        let grp = build_group(GroupSpec::GeneralizedQuaternion { n: 4 }).unwrap();
        let cent = centralizer_graph(&grp).unwrap();
        let cocent = cocentralizer_graph(&grp).unwrap();
        assert_eq!(cocent, cent.complement());
        assert_eq!(cocent.complement(), cent);
        // star K_{1,4}: the big centralizer vertex touches all others
        assert_eq!(cocent.edge_count(), 4);
        let degrees: Vec<usize> = (0..cocent.order()).map(|v| cocent.degree(v)).collect();
        assert_eq!(degrees, vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn q8_cocentralizer_is_empty_graph() {
        let grp = build_group(GroupSpec::GeneralizedQuaternion { n: 2 }).unwrap();
        let cocent = cocentralizer_graph(&grp).unwrap();
        assert_eq!(cocent.order(), 3);
        assert_eq!(cocent.edge_count(), 0);
    }

    #[test]
    fn psl_k2_structure() {
        let g = graph_of(GroupSpec::ProjectiveSpecialLinear { k: 2 });
        assert_eq!(g.order(), 21);
        let d = clique_decomposition(&g).unwrap();
        assert_eq!(d.parts(), &[10, 6, 5]);
        // complement is the complete tripartite K_{5,10,6}
        let grp = build_group(GroupSpec::ProjectiveSpecialLinear { k: 2 }).unwrap();
        let co = cocentralizer_graph(&grp).unwrap();
        assert_eq!(co.edge_count(), 5 * 10 + 5 * 6 + 10 * 6);
    }

    #[test]
    fn path_graph_is_not_clique_union() {
        let mut p3 = Graph::new(3);
        p3.add_edge(0, 1);
        p3.add_edge(1, 2);
        assert!(matches!(
            clique_decomposition(&p3),
            Err(GraphError::NotCliqueUnion(_))
        ));
    }

    #[test]
    fn explicit_clique_union_decomposes() {
        let g = Graph::union_of_cliques(&[5, 1]);
        assert_eq!(clique_decomposition(&g).unwrap().parts(), &[5, 1]);
    }

    #[test]
    fn claimed_structure_examples() {
        let cent = GraphVariant::Centralizer;
        assert_eq!(
            claimed_structure(GroupSpec::Quasidihedral { n: 4 }, cent)
                .unwrap()
                .parts(),
            &[4, 1]
        );
        assert_eq!(
            claimed_structure(GroupSpec::Metacyclic { p: 5, q: 3 }, cent)
                .unwrap()
                .parts(),
            &[5, 1]
        );
        assert_eq!(
            claimed_structure(GroupSpec::ProjectiveSpecialLinear { k: 2 }, cent)
                .unwrap()
                .parts(),
            &[10, 6, 5]
        );
        assert_eq!(
            claimed_structure(GroupSpec::Dihedral { n: 8 }, cent)
                .unwrap()
                .parts(),
            &[4, 1]
        );
    }

    #[test]
    fn metacyclic_matches_dihedral_structure_independent_of_q() {
        for q in 1..=3 {
            let g = graph_of(GroupSpec::Metacyclic { p: 5, q });
            assert_eq!(clique_decomposition(&g).unwrap().parts(), &[5, 1]);
        }
    }

    #[test]
    fn centralizer_graph_is_always_clique_union() {
        for spec in [
            GroupSpec::GeneralizedQuaternion { n: 6 },
            GroupSpec::Dihedral { n: 4 },
            GroupSpec::Quasidihedral { n: 5 },
            GroupSpec::Metacyclic { p: 7, q: 2 },
            GroupSpec::ProjectiveSpecialLinear { k: 1 },
        ] {
            let g = graph_of(spec);
            assert!(clique_decomposition(&g).is_ok(), "{:?}", spec);
        }
    }
}
