//! Naive reference implementations used as independent oracles.
//!
//! Everything here enumerates exhaustively and shares no code with the
//! solver paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use romankit_core::graph::Graph;
use romankit_core::hypergraph::Hypergraph;

fn subset_from_mask(mask: u32, n: usize) -> BTreeSet<usize> {
    (0..n).filter(|&v| (mask >> v) & 1 == 1).collect()
}

fn dominates(g: &Graph, d: &BTreeSet<usize>) -> bool {
    (0..g.n()).all(|v| d.contains(&v) || g.neighbors(v).iter().any(|u| d.contains(u)))
}

/// Minimum dominating set by full subset enumeration; ties resolved to the
/// lexicographically least vertex set.
pub fn brute_gamma(g: &Graph) -> (usize, BTreeSet<usize>) {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential");
    let mut best: Option<BTreeSet<usize>> = None;
    for mask in 0..(1u32 << n) {
        let d = subset_from_mask(mask, n);
        if !dominates(g, &d) {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => {
                let dv: Vec<usize> = d.iter().copied().collect();
                let bv: Vec<usize> = b.iter().copied().collect();
                (d.len(), dv) < (b.len(), bv)
            }
        };
        if better {
            best = Some(d);
        }
    }
    let witness = best.expect("the full vertex set dominates");
    (witness.len(), witness)
}

fn krdf_valid(g: &Graph, k: usize, weights: &[usize]) -> bool {
    (0..g.n()).all(|v| {
        weights[v] != 0 || g.neighbors(v).iter().map(|&u| weights[u]).sum::<usize>() >= k
    })
}

/// Minimum-weight `{k}`-Roman dominating function by enumerating all
/// `(k+1)^n` weight vectors in lexicographic order.
pub fn brute_gamma_rk(g: &Graph, k: usize) -> (usize, Vec<usize>) {
    let n = g.n();
    assert!((k + 1usize).pow(n as u32) <= 200_000_000, "oracle is exponential");
    let mut weights = vec![0usize; n];
    let mut best: Option<(usize, Vec<usize>)> = None;
    loop {
        if krdf_valid(g, k, &weights) {
            let total: usize = weights.iter().sum();
            if best.as_ref().is_none_or(|(w, _)| total < *w) {
                best = Some((total, weights.clone()));
            }
        }
        // odometer, most significant digit first: visits vectors in
        // lexicographic order
        let mut pos = n;
        loop {
            if pos == 0 {
                let (w, f) = best.expect("weight 1 everywhere is always valid");
                return (w, f);
            }
            pos -= 1;
            if weights[pos] < k {
                weights[pos] += 1;
                break;
            }
            weights[pos] = 0;
        }
    }
}

/// All split partitions by brute force over bipartitions; returns the one
/// with the largest clique, ties to the lexicographically least clique.
pub fn brute_split_partition(g: &Graph) -> Option<(BTreeSet<usize>, BTreeSet<usize>)> {
    let n = g.n();
    assert!(n <= 16);
    let mut best: Option<(BTreeSet<usize>, BTreeSet<usize>)> = None;
    for mask in 0..(1u32 << n) {
        let clique = subset_from_mask(mask, n);
        let independent: BTreeSet<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
        let cv: Vec<usize> = clique.iter().copied().collect();
        let is_clique = cv.iter().enumerate().all(|(i, &u)| {
            cv.iter().skip(i + 1).all(|&v| g.has_edge(u, v))
        });
        let iv: Vec<usize> = independent.iter().copied().collect();
        let is_independent = iv.iter().enumerate().all(|(i, &u)| {
            iv.iter().skip(i + 1).all(|&v| !g.has_edge(u, v))
        });
        if !(is_clique && is_independent) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bc, _)) => {
                let bv: Vec<usize> = bc.iter().copied().collect();
                (std::cmp::Reverse(clique.len()), cv.clone())
                    < (std::cmp::Reverse(bc.len()), bv)
            }
        };
        if better {
            best = Some((clique, independent));
        }
    }
    best
}

/// Minimum edge cover by enumerating all hyperedge subsets.
pub fn brute_edge_cover(h: &Hypergraph) -> Option<usize> {
    let m = h.m();
    assert!(m <= 20);
    let mut best: Option<usize> = None;
    for mask in 0u32..(1 << m) {
        let mut covered = BTreeSet::new();
        for j in 0..m {
            if (mask >> j) & 1 == 1 {
                covered.extend(h.edge(j).iter().copied());
            }
        }
        if covered.len() == h.n() {
            let size = mask.count_ones() as usize;
            if best.is_none_or(|b| size < b) {
                best = Some(size);
            }
        }
    }
    best
}

/// Lexicographically least perfect matching by enumerating all hyperedge
/// subsets.
pub fn brute_perfect_matching(h: &Hypergraph) -> Option<Vec<usize>> {
    let m = h.m();
    assert!(m <= 20);
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1 << m) {
        let indices: Vec<usize> = (0..m).filter(|&j| (mask >> j) & 1 == 1).collect();
        let mut covered = BTreeSet::new();
        let mut disjoint = true;
        for &j in &indices {
            for &v in h.edge(j) {
                if !covered.insert(v) {
                    disjoint = false;
                }
            }
        }
        if disjoint && covered.len() == h.n() && best.as_ref().is_none_or(|b| &indices < b) {
            best = Some(indices);
        }
    }
    best
}
