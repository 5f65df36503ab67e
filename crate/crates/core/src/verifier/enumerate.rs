//! Exhaustive enumeration of small graphs, optionally one representative
//! per isomorphism class.
//!
//! Deduplication works by iterated vertex extension: the canonical
//! representatives on `m` vertices are extended by one vertex with every
//! possible neighborhood, and each extension is canonicalized by a
//! branch-and-bound search for the permutation maximizing the packed
//! upper-triangle bit string. Keys are compared as integers, so the output
//! order is stable regardless of discovery order.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::Graph;

use super::VerifierError;

/// Largest `n` for isomorphism-deduplicated enumeration.
pub const DEDUP_LIMIT: usize = 8;
/// Largest `n` for labeled enumeration.
pub const LABELED_LIMIT: usize = 9;

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

struct CanonSearch<'a> {
    n: usize,
    adj: &'a [u32],
    /// Vertices by decreasing degree; trying dense vertices first makes the
    /// first leaf near-maximal, which powers the prefix pruning.
    candidates: &'a [usize],
    total_bits: usize,
    best: u64,
    perm: Vec<usize>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, slot: usize, used: u32, partial: u64, bits: usize) {
        if slot == self.n {
            if partial > self.best {
                self.best = partial;
            }
            return;
        }
        // Appending slot `slot` adds the column of bits (0,slot)…(slot-1,slot).
        for &v in self.candidates {
            if (used >> v) & 1 == 1 {
                continue;
            }
            let mut column = 0u64;
            for prev in 0..slot {
                column <<= 1;
                if (self.adj[self.perm[prev]] >> v) & 1 == 1 {
                    column |= 1;
                }
            }
            let new_bits = bits + slot;
            let partial = (partial << slot) | column;
            // A branch whose prefix already falls below the best key's
            // prefix can never recover.
            let best_prefix = self.best >> (self.total_bits - new_bits);
            if partial < best_prefix {
                continue;
            }
            self.perm[slot] = v;
            self.descend(slot + 1, used | (1 << v), partial, new_bits);
        }
    }
}

/// The canonical key of `g`: the maximum, over all vertex orderings, of the
/// packed upper-triangle adjacency bits. Equal keys iff isomorphic.
/// Supports up to 11 vertices (55 bits).
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical_key supports at most 11 vertices");
    if n < 2 {
        return 0;
    }
    let mut adj = alloc::vec![0u32; n];
    for (u, row) in adj.iter_mut().enumerate() {
        for &v in g.neighbors(u) {
            *row |= 1 << v;
        }
    }
    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut search = CanonSearch {
        n,
        adj: &adj,
        candidates: &candidates,
        total_bits: pair_count(n),
        best: 0,
        perm: alloc::vec![0; n],
    };
    search.descend(0, 0, 0, 0);
    search.best
}

/// Rebuilds the graph encoded by a canonical key.
fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut g = Graph::empty(n);
    let total = pair_count(n);
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if (key >> (total - 1 - pos)) & 1 == 1 {
                g.insert_edge(i, j);
            }
            pos += 1;
        }
    }
    g
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_key(g.n(), canonical_key(g))
}

fn deduped_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return alloc::vec![Graph::empty(0)];
    }
    let mut reps = alloc::vec![Graph::empty(1)];
    for m in 1..n {
        let mut keys: BTreeSet<u64> = BTreeSet::new();
        for g in &reps {
            for nbrs in 0u32..(1 << m) {
                let mut extended = Graph::empty(m + 1);
                for (u, v) in g.edges() {
                    extended.insert_edge(u, v);
                }
                for v in 0..m {
                    if (nbrs >> v) & 1 == 1 {
                        extended.insert_edge(v, m);
                    }
                }
                keys.insert(canonical_key(&extended));
            }
        }
        reps = keys.into_iter().map(|key| graph_from_key(m + 1, key)).collect();
    }
    reps
}

/// Streams all graphs on `n` vertices: every labeled graph, or one
/// representative per isomorphism class when `dedup` is set.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<GraphStream, VerifierError> {
    if dedup {
        if n > DEDUP_LIMIT {
            return Err(VerifierError::BudgetExceeded {
                what: "deduplicated enumeration",
                requested: n,
                limit: DEDUP_LIMIT,
            });
        }
        Ok(GraphStream::Deduped(deduped_graphs(n).into_iter()))
    } else {
        if n > LABELED_LIMIT {
            return Err(VerifierError::BudgetExceeded {
                what: "labeled enumeration",
                requested: n,
                limit: LABELED_LIMIT,
            });
        }
        Ok(GraphStream::Labeled { n, next: 0, total: 1u64 << pair_count(n) })
    }
}

pub enum GraphStream {
    Labeled { n: usize, next: u64, total: u64 },
    Deduped(alloc::vec::IntoIter<Graph>),
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            GraphStream::Labeled { n, next, total } => {
                if next == total {
                    return None;
                }
                let g = graph_from_key(*n, *next);
                *next += 1;
                Some(g)
            }
            GraphStream::Deduped(iter) => iter.next(),
        }
    }
}
