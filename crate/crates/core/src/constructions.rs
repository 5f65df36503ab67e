//! Graph constructors and decompositions: middle graphs, split joins and
//! their inverse, suns, co-suns, and the exact-cover reduction to split
//! graphs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, SplitPartition};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    SunOrder { t: usize },
    NotUniform { k: usize, edge: usize, size: usize },
    IsolatedVertex { vertex: usize },
    InvalidPartition(alloc::string::String),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::SunOrder { t } => {
                write!(f, "suns are defined for t >= 3 (got t = {t})")
            }
            ConstructionError::NotUniform { k, edge, size } => {
                write!(f, "hyperedge {edge} has {size} vertices, expected {k}")
            }
            ConstructionError::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} belongs to no hyperedge")
            }
            ConstructionError::InvalidPartition(msg) => {
                write!(f, "invalid split partition: {msg}")
            }
        }
    }
}

impl core::error::Error for ConstructionError {}

/// A split graph carried together with a chosen split partition.
///
/// Split graphs can admit several partitions; the split join and its
/// decomposition are relative to the chosen one, so it travels with the
/// graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SplitLabeledGraph {
    graph: Graph,
    partition: SplitPartition,
}

impl SplitLabeledGraph {
    pub fn new(graph: Graph, partition: SplitPartition) -> Result<Self, ConstructionError> {
        if let Err(e) =
            SplitPartition::new(&graph, partition.clique.clone(), partition.independent.clone())
        {
            return Err(ConstructionError::InvalidPartition(alloc::format!("{e}")));
        }
        Ok(SplitLabeledGraph { graph, partition })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn partition(&self) -> &SplitPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

/// The middle graph M(G): subdivide every edge, then join two subdivision
/// vertices whenever their edges share an endpoint.
///
/// Vertices `0..n` are the original vertices; vertex `n + j` subdivides the
/// `j`-th edge in the lexicographic edge order. Under this labeling M(G)
/// equals the minimal strongly compatible graph of G viewed as a 2-uniform
/// hypergraph.
pub fn middle_graph(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let mut m = Graph::empty(n + edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        m.insert_edge(u, n + j);
        m.insert_edge(v, n + j);
    }
    for (j, &(a, b)) in edges.iter().enumerate() {
        for (j2, &(c, d)) in edges.iter().enumerate().skip(j + 1) {
            if a == c || a == d || b == c || b == d {
                m.insert_edge(n + j, n + j2);
            }
        }
    }
    m
}

/// The split join S(G1, G2): disjoint union plus every edge between the two
/// cliques. G2's vertices are shifted up by G1's vertex count; the result
/// carries the partition `(K1 ∪ K2, I1 ∪ I2)`.
pub fn split_join(a: &SplitLabeledGraph, b: &SplitLabeledGraph) -> SplitLabeledGraph {
    let na = a.n();
    let n = na + b.n();
    let mut edges: Vec<(usize, usize)> = a.graph.edges();
    for (u, v) in b.graph.edges() {
        edges.push((u + na, v + na));
    }
    for &u in &a.partition.clique {
        for &v in &b.partition.clique {
            edges.push((u, v + na));
        }
    }
    let graph = Graph::from_edges(n, &edges).expect("join of valid graphs is valid");
    let clique: BTreeSet<usize> = a
        .partition
        .clique
        .iter()
        .copied()
        .chain(b.partition.clique.iter().map(|&v| v + na))
        .collect();
    let independent: BTreeSet<usize> = a
        .partition
        .independent
        .iter()
        .copied()
        .chain(b.partition.independent.iter().map(|&v| v + na))
        .collect();
    let partition =
        SplitPartition::new(&graph, clique, independent).expect("join preserves the partition");
    SplitLabeledGraph { graph, partition }
}

/// Result of [`split_join_decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// Not a split join of two smaller split graphs (w.r.t. this partition).
    Prime,
    /// All factors, one per component left after deleting the intra-clique
    /// edges; folding them back with [`split_join`] recovers the graph.
    Factors(Vec<SplitLabeledGraph>),
}

impl Decomposition {
    pub fn is_prime(&self) -> bool {
        matches!(self, Decomposition::Prime)
    }
}

/// Inverts the split join: delete all edges inside the clique and split
/// into connected components. With `c >= 2` components the factors are the
/// induced subgraphs (original intra-clique edges restored) with the
/// inherited partitions; otherwise the graph is prime for this partition.
pub fn split_join_decompose(a: &SplitLabeledGraph) -> Decomposition {
    let g = &a.graph;
    let mut reduced = Graph::empty(g.n());
    for (u, v) in g.edges() {
        if !(a.partition.clique.contains(&u) && a.partition.clique.contains(&v)) {
            reduced.insert_edge(u, v);
        }
    }
    let components = reduced.components();
    if components.len() < 2 {
        return Decomposition::Prime;
    }
    let mut factors = Vec::with_capacity(components.len());
    for comp in components {
        let graph = g.induced(&comp);
        let position = |v: usize| comp.binary_search(&v).expect("component vertex");
        let clique: BTreeSet<usize> = comp
            .iter()
            .filter(|v| a.partition.clique.contains(v))
            .map(|&v| position(v))
            .collect();
        let independent: BTreeSet<usize> = comp
            .iter()
            .filter(|v| a.partition.independent.contains(v))
            .map(|&v| position(v))
            .collect();
        let partition = SplitPartition::new(&graph, clique, independent)
            .expect("induced partition stays valid");
        factors.push(SplitLabeledGraph { graph, partition });
    }
    Decomposition::Factors(factors)
}

/// The t-sun: clique `u_1..u_t` on vertices `0..t`, independent set
/// `w_1..w_t` on vertices `t..2t`, with `u_i` adjacent to `w_j` iff `i = j`
/// or `i = j+1 (mod t)`.
pub fn sun(t: usize) -> Result<SplitLabeledGraph, ConstructionError> {
    if t < 3 {
        return Err(ConstructionError::SunOrder { t });
    }
    let mut g = Graph::empty(2 * t);
    for a in 0..t {
        for b in (a + 1)..t {
            g.insert_edge(a, b);
        }
    }
    for b in 0..t {
        // w_{b+1} is adjacent to u_{b+1} and u_{b+2 mod t}
        g.insert_edge(t + b, b);
        g.insert_edge(t + b, (b + 1) % t);
    }
    let clique: BTreeSet<usize> = (0..t).collect();
    let independent: BTreeSet<usize> = (t..2 * t).collect();
    let partition =
        SplitPartition::new(&g, clique, independent).expect("sun partition is valid");
    Ok(SplitLabeledGraph { graph: g, partition })
}

/// The complement of the t-sun. Complementing swaps the roles of the two
/// sides, so the partition is `(old I, old K)`.
pub fn co_sun(t: usize) -> Result<SplitLabeledGraph, ConstructionError> {
    let s = sun(t)?;
    let graph = s.graph.complement();
    let clique = s.partition.independent;
    let independent = s.partition.clique;
    let partition =
        SplitPartition::new(&graph, clique, independent).expect("co-sun partition is valid");
    Ok(SplitLabeledGraph { graph, partition })
}

/// The `(t-2)`-uniform hypergraph the co-sun is strongly compatible with:
/// vertex set `{0..t}` (the sun's clique), one hyperedge per independent
/// vertex `w_j` holding the clique vertices `w_j` is *not* adjacent to in
/// the sun.
pub fn co_sun_hypergraph(t: usize) -> Result<Hypergraph, ConstructionError> {
    if t < 3 {
        return Err(ConstructionError::SunOrder { t });
    }
    let s = sun(t)?;
    let mut edges = Vec::with_capacity(t);
    for b in 0..t {
        let e: BTreeSet<usize> =
            (0..t).filter(|&a| !s.graph.has_edge(a, t + b)).collect();
        edges.push(e);
    }
    Ok(Hypergraph::new(t, edges).expect("co-sun hyperedges are distinct and nonempty"))
}

/// The reduction behind the hardness of recognizing `{k}`-Roman graphs:
/// a `k`-uniform hypergraph without isolated vertices maps to its maximal
/// compatible split graph, which is `{k}`-Roman iff the hypergraph has a
/// perfect matching.
pub fn exact_cover_reduction(
    h: &Hypergraph,
    k: usize,
) -> Result<SplitLabeledGraph, ConstructionError> {
    for (edge, e) in h.edges().iter().enumerate() {
        if e.len() != k {
            return Err(ConstructionError::NotUniform { k, edge, size: e.len() });
        }
    }
    let mut seen = alloc::vec![false; h.n()];
    for e in h.edges() {
        for &v in e {
            seen[v] = true;
        }
    }
    if let Some(vertex) = seen.iter().position(|covered| !covered) {
        return Err(ConstructionError::IsolatedVertex { vertex });
    }
    let (graph, partition) = h.compatible_split();
    Ok(SplitLabeledGraph { graph, partition })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::gamma;
    use crate::graph::{cycle, is_isomorphic, path, Graph};

    fn labeled(g: Graph, clique: &[usize], independent: &[usize]) -> SplitLabeledGraph {
        let p = SplitPartition::new(
            &g,
            clique.iter().copied().collect(),
            independent.iter().copied().collect(),
        )
        .unwrap();
        SplitLabeledGraph::new(g, p).unwrap()
    }

    #[test]
    fn middle_graph_of_p2_is_p3() {
        assert!(is_isomorphic(&middle_graph(&path(2)), &path(3)).unwrap());
    }

    #[test]
    fn middle_graph_of_p3_joins_the_subdividers() {
        let m = middle_graph(&path(3));
        assert_eq!(m.n(), 5);
        // Edges (0,1) and (1,2) share vertex 1, so their subdivision
        // vertices 3 and 4 are adjacent.
        assert!(m.has_edge(3, 4));
        assert!(!m.has_edge(0, 1));
    }

    #[test]
    fn middle_graph_matches_the_hypergraph_route() {
        for g in [path(4), cycle(5), crate::graph::star(3), Graph::complete(4)] {
            let h = Hypergraph::from_graph(&g);
            assert_eq!(middle_graph(&g), h.strongly_compatible_minimal());
        }
    }

    #[test]
    fn join_of_two_p2s_is_p4() {
        let a = labeled(path(2), &[0], &[1]);
        let b = labeled(path(2), &[0], &[1]);
        let joined = split_join(&a, &b);
        assert!(is_isomorphic(joined.graph(), &path(4)).unwrap());
    }

    #[test]
    fn join_of_two_single_cliques_is_k2() {
        let a = labeled(Graph::empty(1), &[0], &[]);
        let b = labeled(Graph::empty(1), &[0], &[]);
        let joined = split_join(&a, &b);
        assert_eq!(joined.graph(), &Graph::complete(2));
    }

    #[test]
    fn join_counterexample_with_isolated_vertices() {
        // G1 = ({x},{y},∅), G2 = ({u},{v},∅): the join has domination
        // number 3 while the factors sum to 4.
        let a = labeled(Graph::empty(2), &[0], &[1]);
        let b = labeled(Graph::empty(2), &[0], &[1]);
        let joined = split_join(&a, &b);
        assert_eq!(gamma(joined.graph()).gamma, 3);
        assert_eq!(gamma(a.graph()).gamma + gamma(b.graph()).gamma, 4);
    }

    #[test]
    fn join_counterexample_with_empty_independent_side() {
        let a = labeled(Graph::complete(2), &[0, 1], &[]);
        let b = labeled(path(2), &[0], &[1]);
        let joined = split_join(&a, &b);
        assert_eq!(gamma(joined.graph()).gamma, 1);
        assert_eq!(gamma(a.graph()).gamma + gamma(b.graph()).gamma, 2);
    }

    #[test]
    fn decompose_p4_into_two_p2s() {
        let p = crate::graph::find_split_partition(&path(4)).unwrap();
        let labeled = SplitLabeledGraph::new(path(4), p).unwrap();
        match split_join_decompose(&labeled) {
            Decomposition::Factors(factors) => {
                assert_eq!(factors.len(), 2);
                for f in &factors {
                    assert!(is_isomorphic(f.graph(), &path(2)).unwrap());
                    assert_eq!(f.partition().clique.len(), 1);
                }
            }
            Decomposition::Prime => panic!("P4 decomposes"),
        }
    }

    #[test]
    fn complete_graph_shatters_into_single_vertices() {
        let g = Graph::complete(4);
        let p = crate::graph::find_split_partition(&g).unwrap();
        let labeled = SplitLabeledGraph::new(g, p).unwrap();
        match split_join_decompose(&labeled) {
            Decomposition::Factors(factors) => {
                assert_eq!(factors.len(), 4);
                assert!(factors.iter().all(|f| f.n() == 1));
            }
            Decomposition::Prime => panic!("K4 decomposes"),
        }
    }

    #[test]
    fn suns_are_prime() {
        for t in 3..=8 {
            let s = sun(t).unwrap();
            assert!(split_join_decompose(&s).is_prime(), "S_{t} should be prime");
        }
    }

    #[test]
    fn sun_degrees_follow_the_adjacency_rule() {
        for t in 3..=8 {
            let s = sun(t).unwrap();
            for a in 0..t {
                assert_eq!(s.graph().degree(a), t + 1, "clique vertex of S_{t}");
            }
            for b in t..2 * t {
                assert_eq!(s.graph().degree(b), 2, "independent vertex of S_{t}");
            }
        }
    }

    #[test]
    fn sun_4_is_self_complementary() {
        let s4 = sun(4).unwrap();
        assert!(is_isomorphic(&s4.graph().complement(), s4.graph()).unwrap());
        let c4 = co_sun(4).unwrap();
        assert!(is_isomorphic(c4.graph(), s4.graph()).unwrap());
    }

    #[test]
    fn sun_rejects_small_t() {
        assert!(matches!(sun(2), Err(ConstructionError::SunOrder { t: 2 })));
        assert!(matches!(co_sun(0), Err(ConstructionError::SunOrder { t: 0 })));
    }

    #[test]
    fn co_sun_hypergraph_is_uniform_and_strongly_compatible() {
        for t in 3..=7 {
            let h = co_sun_hypergraph(t).unwrap();
            assert!(h.is_k_uniform(t - 2), "co-sun hypergraph for t = {t}");
            let c = co_sun(t).unwrap();
            let lab = h.canonical_labeling();
            assert_eq!(
                crate::hypergraph::is_strongly_compatible(c.graph(), &h, &lab),
                Ok(true),
                "t = {t}"
            );
        }
    }

    #[test]
    fn reduction_validates_input() {
        let h = Hypergraph::new(3, alloc::vec![BTreeSet::from([0, 1])]).unwrap();
        assert!(matches!(
            exact_cover_reduction(&h, 3),
            Err(ConstructionError::NotUniform { .. })
        ));
        assert!(matches!(
            exact_cover_reduction(&h, 2),
            Err(ConstructionError::IsolatedVertex { vertex: 2 })
        ));
    }

    #[test]
    fn reduction_produces_the_split_construction() {
        let h = Hypergraph::new(
            6,
            alloc::vec![BTreeSet::from([0, 1, 2]), BTreeSet::from([3, 4, 5])],
        )
        .unwrap();
        let r = exact_cover_reduction(&h, 3).unwrap();
        let (expected, _) = h.compatible_split();
        assert_eq!(r.graph(), &expected);
        assert_eq!(r.partition().clique, BTreeSet::from([6, 7]));
    }
}
