//! Simple undirected graphs on vertex indices `0..n-1`.
//!
//! Graphs are immutable after construction and store adjacency as ordered
//! sets, so iteration order (and everything derived from it) is
//! deterministic.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Exact solvers convert adjacency to fixed-width bitsets; this is the
/// resulting hard cap on the number of vertices they accept.
pub const SOLVER_VERTEX_LIMIT: usize = 128;

/// Largest vertex count accepted by [`is_isomorphic`] (exhaustive
/// permutation search).
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    SizeLimit { n: usize, limit: usize },
    InvalidPartition(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::SizeLimit { n, limit } => {
                write!(f, "graph has {n} vertices; this operation supports at most {limit}")
            }
            GraphError::InvalidPartition(msg) => write!(f, "invalid split partition: {msg}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph: no self-loops, no parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: alloc::vec![BTreeSet::new(); n] }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate edges are allowed and
    /// collapse; out-of-range endpoints and self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in self.adj[u].range((u + 1)..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(BTreeSet::is_empty)
    }

    /// The closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<BTreeSet<usize>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut set = self.adj[v].clone();
        set.insert(v);
        Ok(set)
    }

    /// The complement graph: same vertices, `{u,v}` is an edge iff it is not
    /// an edge here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = alloc::vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `vertices` (which must be sorted and in range);
    /// vertex `vertices[i]` becomes vertex `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        g
    }

    /// Adjacency as one bitmask per vertex, for the solver cores.
    /// Panics beyond [`SOLVER_VERTEX_LIMIT`] vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u128> {
        assert!(
            self.n <= SOLVER_VERTEX_LIMIT,
            "exact solvers support at most {SOLVER_VERTEX_LIMIT} vertices (got {})",
            self.n
        );
        let mut masks = alloc::vec![0u128; self.n];
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                masks[u] |= 1u128 << v;
            }
        }
        masks
    }
}

/// A `(clique, independent set)` bipartition witnessing that a graph is
/// split.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SplitPartition {
    pub clique: BTreeSet<usize>,
    pub independent: BTreeSet<usize>,
}

impl SplitPartition {
    /// Validates that `(clique, independent)` partitions the vertex set of
    /// `g`, the clique side is complete and the independent side edgeless.
    pub fn new(
        g: &Graph,
        clique: BTreeSet<usize>,
        independent: BTreeSet<usize>,
    ) -> Result<Self, GraphError> {
        let p = SplitPartition { clique, independent };
        p.check(g)?;
        Ok(p)
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }

    fn check(&self, g: &Graph) -> Result<(), GraphError> {
        if self.clique.len() + self.independent.len() != g.n() {
            return Err(GraphError::InvalidPartition(String::from(
                "parts do not cover the vertex set",
            )));
        }
        for &v in self.clique.iter().chain(self.independent.iter()) {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
            }
        }
        if self.clique.intersection(&self.independent).next().is_some() {
            return Err(GraphError::InvalidPartition(String::from("parts overlap")));
        }
        let clique: Vec<usize> = self.clique.iter().copied().collect();
        for (i, &u) in clique.iter().enumerate() {
            for &v in clique.iter().skip(i + 1) {
                if !g.has_edge(u, v) {
                    return Err(GraphError::InvalidPartition(alloc::format!(
                        "clique side misses edge {{{u},{v}}}"
                    )));
                }
            }
        }
        let ind: Vec<usize> = self.independent.iter().copied().collect();
        for (i, &u) in ind.iter().enumerate() {
            for &v in ind.iter().skip(i + 1) {
                if g.has_edge(u, v) {
                    return Err(GraphError::InvalidPartition(alloc::format!(
                        "independent side contains edge {{{u},{v}}}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Split-graph detection via the degree-sequence characterization.
///
/// Sort degrees `d_1 ≥ … ≥ d_n` and let `m = max {i : d_i ≥ i-1}`; the graph
/// is split iff `Σ_{i≤m} d_i = m(m-1) + Σ_{i>m} d_i`, in which case the `m`
/// vertices of largest degree form a clique and the rest an independent set.
/// Ties are broken towards smaller vertex indices, which yields the
/// lexicographically least clique among the maximum-cardinality split
/// partitions. Returns `None` iff `g` is not a split graph; the empty graph
/// yields the empty partition.
pub fn find_split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    if n == 0 {
        return Some(SplitPartition { clique: BTreeSet::new(), independent: BTreeSet::new() });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let mut m = 0;
    for i in 1..=n {
        if degs[i - 1] >= i - 1 {
            m = i;
        }
    }
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let clique: BTreeSet<usize> = order[..m].iter().copied().collect();
    let independent: BTreeSet<usize> = order[m..].iter().copied().collect();
    let partition = SplitPartition::new(g, clique, independent)
        .expect("degree characterization produced an invalid partition");
    Some(partition)
}

/// Exhaustive isomorphism test (adjacency-preserving bijection), intended
/// for graphs with at most [`ISOMORPHISM_VERTEX_LIMIT`] vertices.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    let n = g1.n();
    if n > ISOMORPHISM_VERTEX_LIMIT || g2.n() > ISOMORPHISM_VERTEX_LIMIT {
        return Err(GraphError::SizeLimit {
            n: n.max(g2.n()),
            limit: ISOMORPHISM_VERTEX_LIMIT,
        });
    }
    if n != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    let mut mapping = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    Ok(extend_mapping(g1, g2, 0, &mut mapping, &mut used))
}

fn extend_mapping(
    g1: &Graph,
    g2: &Graph,
    v: usize,
    mapping: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = g1.n();
    if v == n {
        return true;
    }
    'candidates: for w in 0..n {
        if used[w] || g1.degree(v) != g2.degree(w) {
            continue;
        }
        for (u, &mapped) in mapping.iter().enumerate().take(v) {
            if g1.has_edge(v, u) != g2.has_edge(w, mapped) {
                continue 'candidates;
            }
        }
        mapping[v] = w;
        used[w] = true;
        if extend_mapping(g1, g2, v + 1, mapping, used) {
            return true;
        }
        used[w] = false;
        mapping[v] = usize::MAX;
    }
    false
}

/// Path on `n` vertices, `0 - 1 - … - n-1`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

/// Cycle on `n ≥ 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    let mut g = path(n);
    g.insert_edge(n - 1, 0);
    g
}

/// Star `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.insert_edge(0, v);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let g = Graph::complete(4).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn complement_is_involution_on_c5() {
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn closed_neighborhood_of_isolated_vertex() {
        let g = Graph::empty(3);
        let nb = g.closed_neighborhood(1).unwrap();
        assert_eq!(nb.into_iter().collect::<Vec<_>>(), alloc::vec![1]);
    }

    #[test]
    fn closed_neighborhood_of_star_center() {
        let g = star(3);
        let nb = g.closed_neighborhood(0).unwrap();
        assert_eq!(nb.len(), 4);
    }

    #[test]
    fn closed_neighborhood_rejects_out_of_range() {
        let g = Graph::empty(2);
        assert!(matches!(
            g.closed_neighborhood(2),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn p4_has_unique_split_partition() {
        let p = find_split_partition(&path(4)).unwrap();
        assert_eq!(p.clique.iter().copied().collect::<Vec<_>>(), alloc::vec![1, 2]);
        assert_eq!(p.independent.iter().copied().collect::<Vec<_>>(), alloc::vec![0, 3]);
    }

    #[test]
    fn c5_is_not_split() {
        assert!(find_split_partition(&cycle(5)).is_none());
    }

    #[test]
    fn complete_graph_split_partition_is_all_clique() {
        let g = Graph::complete(5);
        let p = find_split_partition(&g).unwrap();
        assert_eq!(p.clique.len(), 5);
        assert!(p.independent.is_empty());
    }

    #[test]
    fn empty_graph_split_partition() {
        let p = find_split_partition(&Graph::empty(0)).unwrap();
        assert!(p.clique.is_empty() && p.independent.is_empty());
    }

    #[test]
    fn p3_split_partition_prefers_smaller_leaf() {
        // Both {1,0} and {1,2} are valid maximum cliques of the path 0-1-2;
        // the tie must resolve to the lexicographically smaller set.
        let p = find_split_partition(&path(3)).unwrap();
        assert_eq!(p.clique.iter().copied().collect::<Vec<_>>(), alloc::vec![0, 1]);
    }

    #[test]
    fn isomorphism_detects_relabeled_c4() {
        let c4 = cycle(4);
        let relabeled = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c4, &relabeled).unwrap());
    }

    #[test]
    fn isomorphism_rejects_p4_vs_star() {
        assert!(!is_isomorphic(&path(4), &star(3)).unwrap());
    }

    #[test]
    fn isomorphism_size_limit() {
        let g = Graph::empty(11);
        assert!(matches!(is_isomorphic(&g, &g), Err(GraphError::SizeLimit { .. })));
    }

    #[test]
    fn invalid_partition_is_rejected() {
        let g = path(3);
        let err = SplitPartition::new(
            &g,
            BTreeSet::from([0, 2]),
            BTreeSet::from([1]),
        )
        .unwrap_err();
        assert!(matches!(err, GraphError::InvalidPartition(_)));
    }

    #[test]
    fn components_of_disjoint_union() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components(), alloc::vec![alloc::vec![0, 1], alloc::vec![2, 3], alloc::vec![4]]);
        assert!(!g.is_connected());
    }
}
