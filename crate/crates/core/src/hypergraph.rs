//! Hypergraphs, exact perfect-matching and edge-cover solvers, and the
//! compatible / strongly compatible graph constructions.
//!
//! Constructed graphs follow one global labeling convention: hypergraph
//! vertex `i` occupies graph vertex `i`, and hyperedge `j` occupies graph
//! vertex `n + j`. [`Hypergraph::canonical_labeling`] spells this out for
//! the compatibility checkers.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, SplitPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypergraphError {
    EmptyEdge { index: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    DuplicateEdge { first: usize, second: usize },
    EdgeIndexOutOfRange { index: usize, m: usize },
    IsolatedVertex { vertex: usize },
    NotUniform { k: usize, edge: usize, size: usize },
    BadLabeling(String),
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergraphError::EmptyEdge { index } => write!(f, "hyperedge {index} is empty"),
            HypergraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for hypergraph on {n} vertices")
            }
            HypergraphError::DuplicateEdge { first, second } => {
                write!(f, "hyperedges {first} and {second} are equal as sets")
            }
            HypergraphError::EdgeIndexOutOfRange { index, m } => {
                write!(f, "hyperedge index {index} out of range ({m} edges)")
            }
            HypergraphError::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} belongs to no hyperedge")
            }
            HypergraphError::NotUniform { k, edge, size } => {
                write!(f, "hyperedge {edge} has {size} vertices, expected {k}")
            }
            HypergraphError::BadLabeling(msg) => write!(f, "labeling is not a bijection: {msg}"),
        }
    }
}

impl core::error::Error for HypergraphError {}

/// A hypergraph: a vertex set `0..n` and an ordered family of distinct,
/// nonempty hyperedges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<BTreeSet<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<BTreeSet<usize>>) -> Result<Self, HypergraphError> {
        for (j, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { index: j });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                if edges[i] == edges[j] {
                    return Err(HypergraphError::DuplicateEdge { first: i, second: j });
                }
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// A graph seen as a 2-uniform hypergraph; hyperedge order is the
    /// lexicographic edge order of [`Graph::edges`].
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g
            .edges()
            .into_iter()
            .map(|(u, v)| BTreeSet::from([u, v]))
            .collect();
        Hypergraph { n: g.n(), edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[BTreeSet<usize>] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> &BTreeSet<usize> {
        &self.edges[j]
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        let mut seen = alloc::vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                seen[v] = true;
            }
        }
        seen.iter().any(|covered| !covered)
    }

    fn edge_masks(&self) -> Vec<u128> {
        assert!(self.n <= 128, "hypergraph solvers support at most 128 vertices");
        self.edges
            .iter()
            .map(|e| e.iter().fold(0u128, |m, &v| m | (1u128 << v)))
            .collect()
    }

    fn full_mask(&self) -> u128 {
        if self.n == 0 {
            0
        } else if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    /// Does a set of pairwise disjoint hyperedges cover the vertex set?
    pub fn pm_exists(&self) -> bool {
        let masks = self.edge_masks();
        pm_completes(&masks, 0, self.full_mask(), 0)
    }

    /// The lexicographically least perfect matching as a sorted list of
    /// hyperedge indices, or `None` if no perfect matching exists.
    ///
    /// Existence is decided by most-constrained-vertex-first backtracking;
    /// the witness is then rebuilt index by index so that ties resolve to
    /// the least index list.
    pub fn perfect_matching(&self) -> Option<Vec<usize>> {
        let masks = self.edge_masks();
        let full = self.full_mask();
        if !pm_completes(&masks, 0, full, 0) {
            return None;
        }
        let mut chosen = Vec::new();
        let mut covered = 0u128;
        let mut j = 0;
        while covered != full {
            debug_assert!(j < masks.len(), "matching reconstruction ran out of edges");
            if masks[j] & covered == 0 && pm_completes(&masks, covered | masks[j], full, j + 1) {
                chosen.push(j);
                covered |= masks[j];
            }
            j += 1;
        }
        Some(chosen)
    }

    /// The minimum number of hyperedges covering every vertex. Errors if
    /// some vertex belongs to no hyperedge.
    pub fn edge_cover_number(&self) -> Result<usize, HypergraphError> {
        let mut seen = alloc::vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|covered| !covered) {
            return Err(HypergraphError::IsolatedVertex { vertex: v });
        }
        if self.n == 0 {
            return Ok(0);
        }
        let masks = self.edge_masks();
        let full = self.full_mask();
        // Greedy upper bound, then branch and bound on the least uncovered
        // vertex.
        let mut covered = 0u128;
        let mut ub = 0usize;
        while covered != full {
            let best = (0..masks.len())
                .max_by_key(|&j| ((masks[j] & !covered).count_ones(), core::cmp::Reverse(j)))
                .expect("no isolated vertices, so some edge makes progress");
            covered |= masks[best];
            ub += 1;
        }
        let mut best = ub;
        cover_minimize(&masks, full, 0, 0, &mut best);
        Ok(best)
    }

    /// The bipartite incidence graph: graph vertex `i < n` is hypergraph
    /// vertex `i`, graph vertex `n + j` is hyperedge `j`, and `{i, n+j}` is
    /// an edge iff `i ∈ e_j`. This is the compatible graph with the fewest
    /// edges.
    pub fn incidence_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n + self.m());
        for (j, e) in self.edges.iter().enumerate() {
            for &v in e {
                g.insert_edge(v, self.n + j);
            }
        }
        g
    }

    /// The minimal strongly compatible graph: the incidence graph plus an
    /// edge between every pair of intersecting hyperedges. For a 2-uniform
    /// hypergraph this is the middle graph.
    pub fn strongly_compatible_minimal(&self) -> Graph {
        let mut g = self.incidence_graph();
        for i in 0..self.m() {
            for j in (i + 1)..self.m() {
                if !self.edges[i].is_disjoint(&self.edges[j]) {
                    g.insert_edge(self.n + i, self.n + j);
                }
            }
        }
        g
    }

    /// The maximal compatible graph: the incidence graph with the hyperedge
    /// side turned into a clique. The result is a split graph, strongly
    /// compatible with the hypergraph.
    pub fn compatible_split(&self) -> (Graph, SplitPartition) {
        let mut g = self.incidence_graph();
        for i in 0..self.m() {
            for j in (i + 1)..self.m() {
                g.insert_edge(self.n + i, self.n + j);
            }
        }
        let clique: BTreeSet<usize> = (self.n..self.n + self.m()).collect();
        let independent: BTreeSet<usize> = (0..self.n).collect();
        let partition = SplitPartition::new(&g, clique, independent)
            .expect("construction yields a split partition");
        (g, partition)
    }

    /// The incidence graph plus the given extra edges between hyperedge
    /// vertices (`(i, j)` joins hyperedges `i` and `j`). Every graph built
    /// this way is compatible with the hypergraph.
    pub fn compatible_with_extra_edges(
        &self,
        extra: &[(usize, usize)],
    ) -> Result<Graph, HypergraphError> {
        let m = self.m();
        let mut g = self.incidence_graph();
        for &(i, j) in extra {
            if i >= m {
                return Err(HypergraphError::EdgeIndexOutOfRange { index: i, m });
            }
            if j >= m {
                return Err(HypergraphError::EdgeIndexOutOfRange { index: j, m });
            }
            if i == j {
                return Err(HypergraphError::DuplicateEdge { first: i, second: j });
            }
            g.insert_edge(self.n + i, self.n + j);
        }
        Ok(g)
    }

    /// The labeling used by every construction in this module: graph vertex
    /// `i < n` is `Vertex(i)`, graph vertex `n + j` is `Edge(j)`.
    pub fn canonical_labeling(&self) -> Vec<HyperItem> {
        (0..self.n)
            .map(HyperItem::Vertex)
            .chain((0..self.m()).map(HyperItem::Edge))
            .collect()
    }
}

/// What a graph vertex stands for under a hypergraph labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperItem {
    Vertex(usize),
    Edge(usize),
}

fn check_bijection(g: &Graph, h: &Hypergraph, labeling: &[HyperItem]) -> Result<(), HypergraphError> {
    if labeling.len() != g.n() {
        return Err(HypergraphError::BadLabeling(alloc::format!(
            "labeling covers {} graph vertices, graph has {}",
            labeling.len(),
            g.n()
        )));
    }
    if g.n() != h.n() + h.m() {
        return Err(HypergraphError::BadLabeling(alloc::format!(
            "graph has {} vertices, hypergraph has {} vertices + {} edges",
            g.n(),
            h.n(),
            h.m()
        )));
    }
    let mut vertex_seen = alloc::vec![false; h.n()];
    let mut edge_seen = alloc::vec![false; h.m()];
    for item in labeling {
        match *item {
            HyperItem::Vertex(i) => {
                if i >= h.n() || vertex_seen[i] {
                    return Err(HypergraphError::BadLabeling(alloc::format!(
                        "vertex {i} repeated or out of range"
                    )));
                }
                vertex_seen[i] = true;
            }
            HyperItem::Edge(j) => {
                if j >= h.m() || edge_seen[j] {
                    return Err(HypergraphError::BadLabeling(alloc::format!(
                        "edge {j} repeated or out of range"
                    )));
                }
                edge_seen[j] = true;
            }
        }
    }
    Ok(())
}

fn compatibility(
    g: &Graph,
    h: &Hypergraph,
    labeling: &[HyperItem],
    strong: bool,
) -> Result<bool, HypergraphError> {
    check_bijection(g, h, labeling)?;
    for a in 0..g.n() {
        for b in (a + 1)..g.n() {
            let adjacent = g.has_edge(a, b);
            match (labeling[a], labeling[b]) {
                (HyperItem::Vertex(_), HyperItem::Vertex(_)) => {
                    if adjacent {
                        return Ok(false);
                    }
                }
                (HyperItem::Vertex(i), HyperItem::Edge(j))
                | (HyperItem::Edge(j), HyperItem::Vertex(i)) => {
                    if adjacent != h.edge(j).contains(&i) {
                        return Ok(false);
                    }
                }
                (HyperItem::Edge(i), HyperItem::Edge(j)) => {
                    if strong && !h.edge(i).is_disjoint(h.edge(j)) && !adjacent {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Does `g`, read through `labeling`, satisfy the definition of a graph
/// compatible with `h`? (Hypergraph vertices independent; vertex–edge
/// adjacency iff containment.)
pub fn is_compatible(
    g: &Graph,
    h: &Hypergraph,
    labeling: &[HyperItem],
) -> Result<bool, HypergraphError> {
    compatibility(g, h, labeling, false)
}

/// Compatibility plus: any two intersecting hyperedges are adjacent.
pub fn is_strongly_compatible(
    g: &Graph,
    h: &Hypergraph,
    labeling: &[HyperItem],
) -> Result<bool, HypergraphError> {
    compatibility(g, h, labeling, true)
}

/// Is there a set of pairwise disjoint edges (with indices `>= min_idx`,
/// all disjoint from `covered`) whose union fills `full`?
fn pm_completes(masks: &[u128], covered: u128, full: u128, min_idx: usize) -> bool {
    if covered == full {
        return true;
    }
    // Most-constrained vertex first.
    let uncovered = full & !covered;
    let mut pick = usize::MAX;
    let mut pick_count = usize::MAX;
    let mut bits = uncovered;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let count = (min_idx..masks.len())
            .filter(|&j| masks[j] & covered == 0 && (masks[j] >> v) & 1 == 1)
            .count();
        if count < pick_count {
            pick_count = count;
            pick = v;
            if count == 0 {
                return false;
            }
        }
    }
    for j in min_idx..masks.len() {
        if masks[j] & covered == 0
            && (masks[j] >> pick) & 1 == 1
            && pm_completes(masks, covered | masks[j], full, min_idx)
        {
            return true;
        }
    }
    false
}

fn cover_minimize(masks: &[u128], full: u128, covered: u128, count: usize, best: &mut usize) {
    if covered == full {
        if count < *best {
            *best = count;
        }
        return;
    }
    let uncovered = full & !covered;
    let max_cover = masks
        .iter()
        .map(|&m| (m & uncovered).count_ones() as usize)
        .max()
        .unwrap_or(0);
    if max_cover == 0 {
        return;
    }
    let undone = uncovered.count_ones() as usize;
    if count + undone.div_ceil(max_cover) >= *best {
        return;
    }
    let target = uncovered.trailing_zeros() as usize;
    for &mask in masks {
        if (mask >> target) & 1 == 1 {
            cover_minimize(masks, full, covered | mask, count + 1, best);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    fn hyper(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.iter().copied().collect()).collect()).unwrap()
    }

    #[test]
    fn graphs_are_2_uniform_hypergraphs() {
        let h = Hypergraph::from_graph(&cycle(5));
        assert!(h.is_k_uniform(2));
        assert!(!h.is_k_uniform(3));
    }

    #[test]
    fn empty_edge_list_is_vacuously_uniform() {
        let h = hyper(3, &[]);
        assert!(h.is_k_uniform(7));
    }

    #[test]
    fn mixed_sizes_are_not_uniform() {
        let h = hyper(5, &[&[0, 1, 2], &[3, 4]]);
        assert!(!h.is_k_uniform(3));
    }

    #[test]
    fn isolated_vertex_detection() {
        assert!(hyper(3, &[&[0, 1]]).has_isolated_vertex());
        assert!(!hyper(2, &[&[0, 1]]).has_isolated_vertex());
        assert!(!Hypergraph::from_graph(&cycle(4)).has_isolated_vertex());
    }

    #[test]
    fn duplicate_edges_are_rejected() {
        let e: BTreeSet<usize> = [0, 1].into();
        assert!(matches!(
            Hypergraph::new(2, alloc::vec![e.clone(), e]),
            Err(HypergraphError::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn cycles_have_perfect_matchings_iff_even() {
        for t in 3..=10 {
            let h = Hypergraph::from_graph(&cycle(t));
            assert_eq!(h.pm_exists(), t % 2 == 0, "C_{t}");
        }
    }

    #[test]
    fn disjoint_triples_match_perfectly() {
        let h = hyper(6, &[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(h.perfect_matching(), Some(alloc::vec![0, 1]));
    }

    #[test]
    fn matching_witness_is_lex_least() {
        // Both {0,3} and {1,2} are perfect matchings; [0,3] is the smaller
        // index list.
        let h = hyper(4, &[&[0, 1], &[0, 2], &[1, 3], &[2, 3]]);
        assert_eq!(h.perfect_matching(), Some(alloc::vec![0, 3]));
    }

    #[test]
    fn matching_witness_is_valid() {
        let h = Hypergraph::from_graph(&cycle(8));
        let pm = h.perfect_matching().unwrap();
        let mut covered = BTreeSet::new();
        for &j in &pm {
            assert!(h.edge(j).iter().all(|v| covered.insert(*v)), "edges overlap");
        }
        assert_eq!(covered.len(), 8);
    }

    #[test]
    fn edge_cover_of_cycles() {
        for t in 3..=8 {
            let h = Hypergraph::from_graph(&cycle(t));
            assert_eq!(h.edge_cover_number().unwrap(), t.div_ceil(2), "C_{t}");
        }
    }

    #[test]
    fn single_edge_covers_everything() {
        let h = hyper(3, &[&[0, 1, 2]]);
        assert_eq!(h.edge_cover_number().unwrap(), 1);
    }

    #[test]
    fn edge_cover_rejects_isolated_vertices() {
        let h = hyper(3, &[&[0, 1]]);
        assert!(matches!(
            h.edge_cover_number(),
            Err(HypergraphError::IsolatedVertex { vertex: 2 })
        ));
    }

    #[test]
    fn incidence_graph_of_single_edge_is_p3() {
        let h = hyper(2, &[&[0, 1]]);
        let g = h.incidence_graph();
        assert!(crate::graph::is_isomorphic(&g, &path(3)).unwrap());
    }

    #[test]
    fn incidence_graph_of_triangle() {
        let h = Hypergraph::from_graph(&cycle(3));
        let g = h.incidence_graph();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn incidence_graph_of_edgeless_hypergraph() {
        let h = hyper(4, &[]);
        let g = h.incidence_graph();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn strongly_minimal_joins_intersecting_edges_only() {
        let h = hyper(4, &[&[0, 1], &[2, 3]]);
        let g = h.strongly_compatible_minimal();
        assert!(!g.has_edge(4, 5));
        let h2 = Hypergraph::from_graph(&path(3));
        let g2 = h2.strongly_compatible_minimal();
        assert!(g2.has_edge(3, 4));
        assert_eq!(g2.n(), 5);
    }

    #[test]
    fn compatible_split_of_single_edge_is_p3() {
        let h = hyper(2, &[&[0, 1]]);
        let (g, p) = h.compatible_split();
        assert!(crate::graph::is_isomorphic(&g, &path(3)).unwrap());
        assert_eq!(p.clique, BTreeSet::from([2]));
    }

    #[test]
    fn compatibility_of_the_three_constructions() {
        let h = Hypergraph::from_graph(&path(3));
        let lab = h.canonical_labeling();

        let inc = h.incidence_graph();
        assert_eq!(is_compatible(&inc, &h, &lab), Ok(true));
        // P3's two edges share a vertex, so the incidence graph is not
        // strongly compatible.
        assert_eq!(is_strongly_compatible(&inc, &h, &lab), Ok(false));

        let (split, _) = h.compatible_split();
        assert_eq!(is_compatible(&split, &h, &lab), Ok(true));
        assert_eq!(is_strongly_compatible(&split, &h, &lab), Ok(true));

        let mid = h.strongly_compatible_minimal();
        assert_eq!(is_strongly_compatible(&mid, &h, &lab), Ok(true));
    }

    #[test]
    fn bad_labeling_is_rejected() {
        let h = hyper(2, &[&[0, 1]]);
        let g = h.incidence_graph();
        let lab = alloc::vec![HyperItem::Vertex(0), HyperItem::Vertex(0), HyperItem::Edge(0)];
        assert!(matches!(
            is_compatible(&g, &h, &lab),
            Err(HypergraphError::BadLabeling(_))
        ));
    }

    #[test]
    fn extra_edges_stay_compatible() {
        let h = hyper(4, &[&[0, 1], &[2, 3], &[1, 2]]);
        let g = h.compatible_with_extra_edges(&[(0, 1)]).unwrap();
        let lab = h.canonical_labeling();
        assert_eq!(is_compatible(&g, &h, &lab), Ok(true));
        assert!(matches!(
            h.compatible_with_extra_edges(&[(0, 5)]),
            Err(HypergraphError::EdgeIndexOutOfRange { .. })
        ));
    }
}
