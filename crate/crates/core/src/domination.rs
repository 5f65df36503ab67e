//! Exact solvers for domination and `{k}`-Roman domination.
//!
//! Both solvers are exponential-time searches over bitset-encoded
//! adjacency, exact by exhaustion, with pruning tuned for the desk-scale
//! instances this crate constructs (a few dozen vertices). Witnesses are
//! deterministic: among all optima the lexicographically least one is
//! returned (vertex sets compared as sorted sequences, weight functions as
//! vectors indexed by vertex).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, SplitPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominationError {
    VertexOutOfRange { vertex: usize, n: usize },
    DomainMismatch { expected: usize, got: usize },
    WeightExceedsCap { vertex: usize, weight: usize, k: usize },
    KTooSmall { k: usize, min: usize },
    IsolatedVertex { vertex: usize },
    EmptyGraph,
    InvalidPartition(String),
}

impl fmt::Display for DominationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominationError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            DominationError::DomainMismatch { expected, got } => {
                write!(f, "weight function defined on {got} vertices, graph has {expected}")
            }
            DominationError::WeightExceedsCap { vertex, weight, k } => {
                write!(f, "weight {weight} at vertex {vertex} exceeds cap {k}")
            }
            DominationError::KTooSmall { k, min } => {
                write!(f, "k = {k} rejected; this operation requires k >= {min}")
            }
            DominationError::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} is isolated")
            }
            DominationError::EmptyGraph => write!(f, "operation undefined on the empty graph"),
            DominationError::InvalidPartition(msg) => write!(f, "invalid split partition: {msg}"),
        }
    }
}

impl core::error::Error for DominationError {}

/// A candidate `{k}`-Roman dominating function: weights in `{0, …, k}`
/// indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeightFunction {
    k: usize,
    weights: Vec<usize>,
}

impl WeightFunction {
    pub fn new(k: usize, weights: Vec<usize>) -> Result<Self, DominationError> {
        if k == 0 {
            return Err(DominationError::KTooSmall { k, min: 1 });
        }
        for (vertex, &weight) in weights.iter().enumerate() {
            if weight > k {
                return Err(DominationError::WeightExceedsCap { vertex, weight, k });
            }
        }
        Ok(WeightFunction { k, weights })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value(&self, v: usize) -> usize {
        self.weights[v]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Total weight `f(V)`.
    pub fn weight(&self) -> usize {
        self.weights.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// The domination number together with a lexicographically least witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationCertificate {
    pub gamma: usize,
    pub witness: BTreeSet<usize>,
}

/// The `{k}`-Roman domination number together with a lexicographically
/// least witness function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RomanCertificate {
    pub k: usize,
    pub gamma_rk: usize,
    pub witness: WeightFunction,
}

fn full_mask(n: usize) -> u128 {
    if n == 0 {
        0
    } else if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn closed_masks(g: &Graph) -> Vec<u128> {
    let adj = g.adjacency_masks();
    (0..g.n()).map(|v| adj[v] | (1u128 << v)).collect()
}

/// Checks whether `d` intersects every closed neighborhood.
pub fn is_dominating_set(g: &Graph, d: &BTreeSet<usize>) -> Result<bool, DominationError> {
    let n = g.n();
    for &v in d {
        if v >= n {
            return Err(DominationError::VertexOutOfRange { vertex: v, n });
        }
    }
    for v in 0..n {
        if !d.contains(&v) && !g.neighbors(v).iter().any(|u| d.contains(u)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the `{k}`-Roman condition: every vertex of weight 0 sees total
/// weight at least `k` on its open neighborhood.
pub fn is_krdf(g: &Graph, f: &WeightFunction) -> Result<bool, DominationError> {
    if f.len() != g.n() {
        return Err(DominationError::DomainMismatch { expected: g.n(), got: f.len() });
    }
    for v in 0..g.n() {
        if f.value(v) == 0 {
            let around: usize = g.neighbors(v).iter().map(|&u| f.value(u)).sum();
            if around < f.k() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Minimum dominating set
// ---------------------------------------------------------------------------

struct DomSearch<'a> {
    closed: &'a [u128],
    full: u128,
    candidates: u128,
    best: usize,
}

impl DomSearch<'_> {
    fn bound_ok(&self, dominated: u128, count: usize) -> bool {
        let undominated = self.full & !dominated;
        if undominated == 0 {
            return true;
        }
        let mut max_cover = 0usize;
        let mut cands = self.candidates;
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let cover = (self.closed[v] & undominated).count_ones() as usize;
            if cover > max_cover {
                max_cover = cover;
            }
        }
        if max_cover == 0 {
            return false;
        }
        let undom = undominated.count_ones() as usize;
        count + undom.div_ceil(max_cover) < self.best
    }

    fn minimize(&mut self, dominated: u128, count: usize) {
        if dominated == self.full {
            if count < self.best {
                self.best = count;
            }
            return;
        }
        if !self.bound_ok(dominated, count) {
            return;
        }
        // Branch on an undominated vertex with the fewest candidate
        // dominators; every dominating set must pick one of them.
        let undominated = self.full & !dominated;
        let mut pick = usize::MAX;
        let mut pick_count = usize::MAX;
        let mut bits = undominated;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let c = (self.closed[u] & self.candidates).count_ones() as usize;
            if c < pick_count {
                pick_count = c;
                pick = u;
            }
        }
        if pick_count == 0 {
            return; // cannot be dominated from the candidate pool
        }
        // Try candidates covering the most new vertices first.
        let mut options: Vec<(usize, usize)> = Vec::with_capacity(pick_count);
        let mut bits = self.closed[pick] & self.candidates;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            options.push(((self.closed[v] & undominated).count_ones() as usize, v));
        }
        options.sort_by_key(|&(cover, v)| (core::cmp::Reverse(cover), v));
        for (_, v) in options {
            self.minimize(dominated | self.closed[v], count + 1);
        }
    }

    /// Is there a dominating completion of size `remaining` using only
    /// candidates `>= min_vertex`?
    fn completes(&self, dominated: u128, remaining: usize, min_vertex: usize) -> bool {
        if dominated == self.full {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        let undominated = self.full & !dominated;
        let allowed = self.candidates & !(full_mask(min_vertex));
        let mut pick = usize::MAX;
        let mut pick_count = usize::MAX;
        let mut max_cover = 0usize;
        let mut bits = undominated;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let c = (self.closed[u] & allowed).count_ones() as usize;
            if c < pick_count {
                pick_count = c;
                pick = u;
            }
        }
        if pick_count == 0 {
            return false;
        }
        let mut bits = allowed;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let cover = (self.closed[v] & undominated).count_ones() as usize;
            if cover > max_cover {
                max_cover = cover;
            }
        }
        if (undominated.count_ones() as usize) > remaining * max_cover {
            return false;
        }
        let mut bits = self.closed[pick] & allowed;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            // min_vertex keeps restricting the pool; picks need not ascend.
            if self.completes(dominated | self.closed[v], remaining - 1, min_vertex) {
                return true;
            }
        }
        false
    }
}

fn min_dominating_size(closed: &[u128], full: u128, candidates: u128, greedy_ub: usize) -> usize {
    let mut search = DomSearch { closed, full, candidates, best: greedy_ub };
    search.minimize(0, 0);
    search.best
}

fn greedy_dominating(closed: &[u128], full: u128, candidates: u128) -> Option<usize> {
    let mut dominated = 0u128;
    let mut size = 0usize;
    while dominated != full {
        let mut best = usize::MAX;
        let mut best_cover = 0usize;
        let mut bits = candidates;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let cover = (closed[v] & !dominated).count_ones() as usize;
            if cover > best_cover {
                best_cover = cover;
                best = v;
            }
        }
        if best == usize::MAX {
            return None;
        }
        dominated |= closed[best];
        size += 1;
    }
    Some(size)
}

fn lex_min_dominating(closed: &[u128], full: u128, candidates: u128, size: usize) -> BTreeSet<usize> {
    let search = DomSearch { closed, full, candidates, best: 0 };
    let mut chosen = BTreeSet::new();
    let mut dominated = 0u128;
    let mut next = 0usize;
    for slot in 0..size {
        let remaining = size - slot - 1;
        let mut bits = candidates & !full_mask(next);
        let mut placed = false;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if search.completes(dominated | closed[v], remaining, v + 1) {
                chosen.insert(v);
                dominated |= closed[v];
                next = v + 1;
                placed = true;
                break;
            }
        }
        assert!(placed, "witness reconstruction lost feasibility");
    }
    chosen
}

/// The domination number of `g`, without a witness.
pub fn gamma_value(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let closed = closed_masks(g);
    let full = full_mask(n);
    let ub = greedy_dominating(&closed, full, full).expect("full candidate pool dominates");
    min_dominating_size(&closed, full, full, ub)
}

/// The domination number with the lexicographically least minimum
/// dominating set.
pub fn gamma(g: &Graph) -> DominationCertificate {
    let n = g.n();
    if n == 0 {
        return DominationCertificate { gamma: 0, witness: BTreeSet::new() };
    }
    let closed = closed_masks(g);
    let full = full_mask(n);
    let ub = greedy_dominating(&closed, full, full).expect("full candidate pool dominates");
    let value = min_dominating_size(&closed, full, full, ub);
    let witness = lex_min_dominating(&closed, full, full, value);
    DominationCertificate { gamma: value, witness }
}

/// A minimum dominating set contained in the clique side of a split
/// partition. For split graphs without isolated vertices its size equals
/// the domination number.
pub fn bertossi_dominating_set(
    g: &Graph,
    p: &SplitPartition,
) -> Result<BTreeSet<usize>, DominationError> {
    if let Err(e) = SplitPartition::new(g, p.clique.clone(), p.independent.clone()) {
        return Err(DominationError::InvalidPartition(alloc::format!("{e}")));
    }
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            return Err(DominationError::IsolatedVertex { vertex: v });
        }
    }
    if g.n() == 0 {
        return Ok(BTreeSet::new());
    }
    let closed = closed_masks(g);
    let full = full_mask(g.n());
    let mut candidates = 0u128;
    for &v in &p.clique {
        candidates |= 1u128 << v;
    }
    let ub = greedy_dominating(&closed, full, candidates)
        .expect("clique dominates a split graph without isolated vertices");
    let value = min_dominating_size(&closed, full, candidates, ub);
    Ok(lex_min_dominating(&closed, full, candidates, value))
}

// ---------------------------------------------------------------------------
// {k}-Roman domination
// ---------------------------------------------------------------------------

struct KrdfSearch<'a> {
    k: usize,
    adj: &'a [u128],
    order: &'a [usize],
    // incremental state, indexed by vertex
    assigned_nbr_weight: Vec<usize>,
    unassigned_nbrs: Vec<usize>,
    deficit: Vec<usize>,
    total_deficit: usize,
    demanding: u128,
    zero_assigned: u128,
    unassigned: u128,
    record: Option<Vec<usize>>,
}

impl<'a> KrdfSearch<'a> {
    fn new(k: usize, adj: &'a [u128], order: &'a [usize], record: bool) -> Self {
        let n = adj.len();
        KrdfSearch {
            k,
            adj,
            order,
            assigned_nbr_weight: alloc::vec![0; n],
            unassigned_nbrs: adj.iter().map(|m| m.count_ones() as usize).collect(),
            deficit: alloc::vec![0; n],
            total_deficit: 0,
            demanding: 0,
            zero_assigned: 0,
            unassigned: full_mask(n),
            record: record.then(|| alloc::vec![0; n]),
        }
    }

    /// Every future unit of weight placed on an unassigned vertex lowers the
    /// outstanding deficits by at most its number of demanding neighbors.
    fn deficit_bound_ok(&self, budget: usize) -> bool {
        if self.total_deficit == 0 {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let mut max_cover = 0usize;
        let mut bits = self.unassigned;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let c = (self.adj[u] & self.demanding).count_ones() as usize;
            if c > max_cover {
                max_cover = c;
            }
        }
        max_cover > 0 && self.total_deficit <= budget * max_cover
    }

    fn search(&mut self, pos: usize, budget: usize) -> bool {
        if pos == self.order.len() {
            return self.total_deficit == 0;
        }
        if budget == 0 {
            // All remaining vertices are forced to weight 0.
            if self.total_deficit != 0 {
                return false;
            }
            let mut bits = self.unassigned;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.assigned_nbr_weight[u] < self.k {
                    return false;
                }
            }
            if let Some(rec) = &mut self.record {
                let mut bits = self.unassigned;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    rec[u] = 0;
                }
            }
            return true;
        }
        let v = self.order[pos];
        for value in 0..=self.k.min(budget) {
            if self.assign_and_descend(pos, v, value, budget) {
                return true;
            }
        }
        false
    }

    fn assign_and_descend(&mut self, pos: usize, v: usize, value: usize, budget: usize) -> bool {
        let bit = 1u128 << v;
        self.unassigned &= !bit;
        let mut feasible = true;
        if value == 0 {
            self.zero_assigned |= bit;
            let d = self.k.saturating_sub(self.assigned_nbr_weight[v]);
            if d > 0 {
                self.deficit[v] = d;
                self.total_deficit += d;
                self.demanding |= bit;
                if d > self.k * self.unassigned_nbrs[v] {
                    feasible = false;
                }
            }
        }
        let mut bits = self.adj[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.unassigned_nbrs[w] -= 1;
            if value > 0 {
                self.assigned_nbr_weight[w] += value;
                if self.deficit[w] > 0 {
                    let cut = self.deficit[w].min(value);
                    self.deficit[w] -= cut;
                    self.total_deficit -= cut;
                    if self.deficit[w] == 0 {
                        self.demanding &= !(1u128 << w);
                    }
                }
            }
            if self.deficit[w] > self.k * self.unassigned_nbrs[w] {
                feasible = false;
            }
        }
        let remaining = budget - value;
        let found = feasible
            && self.deficit_bound_ok(remaining)
            && self.search(pos + 1, remaining);
        if found {
            if let Some(rec) = &mut self.record {
                rec[v] = value;
            }
            return true;
        }
        // undo
        let mut bits = self.adj[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.unassigned_nbrs[w] += 1;
            if value > 0 {
                self.assigned_nbr_weight[w] -= value;
                if (self.zero_assigned >> w) & 1 == 1 {
                    let d = self.k.saturating_sub(self.assigned_nbr_weight[w]);
                    let old = self.deficit[w];
                    if d > old {
                        self.total_deficit += d - old;
                        self.deficit[w] = d;
                        self.demanding |= 1u128 << w;
                    }
                }
            }
        }
        if value == 0 {
            self.zero_assigned &= !bit;
            if self.deficit[v] > 0 {
                self.total_deficit -= self.deficit[v];
                self.deficit[v] = 0;
                self.demanding &= !bit;
            }
        }
        self.unassigned |= bit;
        false
    }
}

fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    order
}

/// Does `g` admit a `{k}`-Roman dominating function of total weight at most
/// `budget`? Requires `k ≥ 1`.
pub fn krdf_feasible(g: &Graph, k: usize, budget: usize) -> bool {
    assert!(k >= 1, "krdf_feasible requires k >= 1");
    if g.n() == 0 {
        return true;
    }
    let adj = g.adjacency_masks();
    let order = degree_order(g);
    let mut search = KrdfSearch::new(k, &adj, &order, false);
    search.search(0, budget)
}

fn krdf_witness(g: &Graph, k: usize, budget: usize) -> Vec<usize> {
    // Identity order with ascending values: the first full assignment found
    // is the lexicographically least weight vector of weight <= budget.
    let adj = g.adjacency_masks();
    let order: Vec<usize> = (0..g.n()).collect();
    let mut search = KrdfSearch::new(k, &adj, &order, true);
    let found = search.search(0, budget);
    assert!(found, "witness requested at an infeasible budget");
    search.record.expect("recording was enabled")
}

/// The `{k}`-Roman domination number with a lexicographically least witness
/// function. Requires `k ≥ 1`; for `k = 1` the value equals the domination
/// number.
pub fn gamma_rk(g: &Graph, k: usize) -> RomanCertificate {
    assert!(k >= 1, "gamma_rk requires k >= 1");
    if g.n() == 0 {
        return RomanCertificate {
            k,
            gamma_rk: 0,
            witness: WeightFunction::new(k, Vec::new()).expect("empty function is valid"),
        };
    }
    // Iterative deepening on the total weight. The window is tight:
    // gamma(g) <= gamma_rk(g) <= min(k * gamma(g), n).
    let lo = gamma_value(g);
    let hi = (k * lo).min(g.n());
    let mut value = lo;
    while value < hi && !krdf_feasible(g, k, value) {
        value += 1;
    }
    let weights = krdf_witness(g, k, value);
    let witness = WeightFunction::new(k, weights).expect("search respects the weight cap");
    debug_assert_eq!(witness.weight(), value);
    RomanCertificate { k, gamma_rk: value, witness }
}

/// The `{k}`-Roman domination number, without a witness.
pub fn gamma_rk_value(g: &Graph, k: usize) -> usize {
    assert!(k >= 1, "gamma_rk_value requires k >= 1");
    if g.n() == 0 {
        return 0;
    }
    let lo = gamma_value(g);
    let hi = (k * lo).min(g.n());
    let mut value = lo;
    while value < hi && !krdf_feasible(g, k, value) {
        value += 1;
    }
    value
}

/// Is `g` a `{k}`-Roman graph, i.e. does γ_{Rk}(g) equal `k`·γ(g)?
/// Defined for `k ≥ 2`; smaller `k` is rejected.
pub fn is_k_roman(g: &Graph, k: usize) -> Result<bool, DominationError> {
    if k < 2 {
        return Err(DominationError::KTooSmall { k, min: 2 });
    }
    let gamma = gamma_value(g);
    if gamma == 0 {
        return Ok(true);
    }
    // gamma_rk <= k*gamma always holds, so equality fails exactly when some
    // function beats the product by one.
    Ok(!krdf_feasible(g, k, k * gamma - 1))
}

// ---------------------------------------------------------------------------
// Weight normalization on split graphs
// ---------------------------------------------------------------------------

/// A γ_{R2}-function of a split graph `g` that puts weight at most 1 on the
/// independent neighbors of every clique vertex and weight at least 2 on
/// the clique overall.
///
/// Starts from the exact solver's witness and applies the two
/// weight-shifting transformations until both properties hold. Requires a
/// valid partition and no isolated vertices (in particular a nonempty
/// graph).
pub fn normalized_gamma_r2(
    g: &Graph,
    p: &SplitPartition,
) -> Result<WeightFunction, DominationError> {
    if let Err(e) = SplitPartition::new(g, p.clique.clone(), p.independent.clone()) {
        return Err(DominationError::InvalidPartition(alloc::format!("{e}")));
    }
    if g.n() == 0 {
        return Err(DominationError::EmptyGraph);
    }
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            return Err(DominationError::IsolatedVertex { vertex: v });
        }
    }
    let cert = gamma_rk(g, 2);
    let mut f: Vec<usize> = cert.witness.weights().to_vec();

    // First property: no clique vertex sees weight >= 2 on its independent
    // neighbors. Shifting that weight onto the clique vertex keeps the
    // function optimal and strictly reduces the weight carried by I, so the
    // loop terminates.
    loop {
        let mut moved = false;
        for &u in &p.clique {
            let i_nbrs: Vec<usize> =
                g.neighbors(u).iter().copied().filter(|w| p.independent.contains(w)).collect();
            let i_weight: usize = i_nbrs.iter().map(|&w| f[w]).sum();
            if i_weight >= 2 {
                debug_assert_eq!(
                    f[u] + i_weight,
                    2,
                    "optimal witness would admit a cheaper reassignment"
                );
                f[u] = 2;
                for &w in &i_nbrs {
                    f[w] = 0;
                }
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }

    // Second property: total clique weight at least 2. When it fails the
    // function is forced into a rigid shape (weight 1 everywhere on I and on
    // a single clique vertex) that the following swap repairs.
    let clique_weight: usize = p.clique.iter().map(|&u| f[u]).sum();
    if clique_weight <= 1 {
        let u = *p
            .clique
            .iter()
            .find(|&&u| f[u] == 1)
            .expect("a valid optimal function places weight exactly 1 on the clique");
        let v = *p.independent.iter().next().expect("independent side is nonempty here");
        debug_assert_eq!(f[v], 1);
        let u_prime = *g.neighbors(v).iter().next().expect("no isolated vertices");
        f[u_prime] = 2;
        if u != u_prime {
            f[u] = 0;
        }
        f[v] = 0;
    }

    let result = WeightFunction::new(2, f).expect("normalization keeps weights in range");
    debug_assert_eq!(result.weight(), cert.gamma_rk);
    debug_assert_eq!(is_krdf(g, &result), Ok(true));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, star, Graph};

    #[test]
    fn whole_vertex_set_dominates() {
        let g = path(5);
        let all: BTreeSet<usize> = (0..5).collect();
        assert_eq!(is_dominating_set(&g, &all), Ok(true));
    }

    #[test]
    fn star_center_dominates() {
        let g = star(3);
        assert_eq!(is_dominating_set(&g, &BTreeSet::from([0])), Ok(true));
    }

    #[test]
    fn single_vertex_does_not_dominate_c4() {
        let g = cycle(4);
        assert_eq!(is_dominating_set(&g, &BTreeSet::from([0])), Ok(false));
    }

    #[test]
    fn dominating_set_rejects_out_of_range() {
        let g = path(2);
        assert!(is_dominating_set(&g, &BTreeSet::from([5])).is_err());
    }

    #[test]
    fn gamma_of_complete_graph_is_one() {
        for n in 1..6 {
            assert_eq!(gamma(&Graph::complete(n)).gamma, 1);
        }
    }

    #[test]
    fn gamma_witness_is_lex_least() {
        // P4 has minimum dominating sets {0,2}, {0,3}, {1,2}, {1,3}.
        let cert = gamma(&path(4));
        assert_eq!(cert.gamma, 2);
        assert_eq!(cert.witness, BTreeSet::from([0, 2]));
    }

    #[test]
    fn gamma_of_empty_graph() {
        let cert = gamma(&Graph::empty(0));
        assert_eq!(cert.gamma, 0);
        assert!(cert.witness.is_empty());
    }

    #[test]
    fn all_ones_is_always_a_krdf() {
        let g = cycle(5);
        let f = WeightFunction::new(3, alloc::vec![1; 5]).unwrap();
        assert_eq!(is_krdf(&g, &f), Ok(true));
    }

    #[test]
    fn isolated_zero_vertex_fails_krdf() {
        let g = Graph::empty(1);
        let f = WeightFunction::new(2, alloc::vec![0]).unwrap();
        assert_eq!(is_krdf(&g, &f), Ok(false));
    }

    #[test]
    fn krdf_domain_mismatch_is_an_error() {
        let g = path(3);
        let f = WeightFunction::new(2, alloc::vec![1, 1]).unwrap();
        assert!(matches!(is_krdf(&g, &f), Err(DominationError::DomainMismatch { .. })));
    }

    #[test]
    fn weight_cap_is_enforced() {
        assert!(matches!(
            WeightFunction::new(2, alloc::vec![3]),
            Err(DominationError::WeightExceedsCap { .. })
        ));
    }

    #[test]
    fn gamma_rk_of_p4_with_k2() {
        let cert = gamma_rk(&path(4), 2);
        assert_eq!(cert.gamma_rk, 3);
        // Lexicographically least optimal weight vector.
        assert_eq!(cert.witness.weights(), &[0, 2, 0, 1]);
        assert_eq!(is_krdf(&path(4), &cert.witness), Ok(true));
    }

    #[test]
    fn gamma_r1_collapses_to_gamma() {
        for g in [path(4), cycle(5), star(4), Graph::complete(4)] {
            assert_eq!(gamma_rk(&g, 1).gamma_rk, gamma(&g).gamma);
        }
    }

    #[test]
    fn complete_graphs_are_k_roman_up_to_n() {
        for n in 2..=6 {
            let g = Graph::complete(n);
            for k in 2..=n {
                assert_eq!(gamma_rk(&g, k).gamma_rk, k);
                assert_eq!(is_k_roman(&g, k), Ok(true));
            }
        }
    }

    #[test]
    fn p2_is_2_roman_but_p4_is_not() {
        assert_eq!(is_k_roman(&path(2), 2), Ok(true));
        assert_eq!(is_k_roman(&path(4), 2), Ok(false));
    }

    #[test]
    fn is_k_roman_rejects_k1() {
        assert!(matches!(
            is_k_roman(&path(2), 1),
            Err(DominationError::KTooSmall { k: 1, min: 2 })
        ));
    }

    #[test]
    fn bertossi_on_star_picks_center() {
        let g = star(3);
        let p = SplitPartition::new(&g, BTreeSet::from([0]), BTreeSet::from([1, 2, 3])).unwrap();
        let d = bertossi_dominating_set(&g, &p).unwrap();
        assert_eq!(d, BTreeSet::from([0]));
    }

    #[test]
    fn bertossi_on_p4_takes_both_inner_vertices() {
        let g = path(4);
        let p = crate::graph::find_split_partition(&g).unwrap();
        let d = bertossi_dominating_set(&g, &p).unwrap();
        assert_eq!(d, BTreeSet::from([1, 2]));
        assert_eq!(d.len(), gamma(&g).gamma);
    }

    #[test]
    fn bertossi_rejects_isolated_vertices() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let p = crate::graph::find_split_partition(&g).unwrap();
        assert!(matches!(
            bertossi_dominating_set(&g, &p),
            Err(DominationError::IsolatedVertex { .. })
        ));
    }

    #[test]
    fn normalized_function_on_k2() {
        let g = Graph::complete(2);
        let p = crate::graph::find_split_partition(&g).unwrap();
        let f = normalized_gamma_r2(&g, &p).unwrap();
        assert_eq!(f.weight(), 2);
        let clique_weight: usize = p.clique.iter().map(|&u| f.value(u)).sum();
        assert!(clique_weight >= 2);
    }

    #[test]
    fn normalized_function_on_star() {
        let g = star(3);
        let p = crate::graph::find_split_partition(&g).unwrap();
        let f = normalized_gamma_r2(&g, &p).unwrap();
        assert_eq!(f.weight(), 2);
        assert_eq!(f.value(0), 2);
        assert_eq!(is_krdf(&g, &f), Ok(true));
    }

    #[test]
    fn normalized_function_rejects_empty_graph() {
        let g = Graph::empty(0);
        let p = crate::graph::find_split_partition(&g).unwrap();
        assert!(matches!(normalized_gamma_r2(&g, &p), Err(DominationError::EmptyGraph)));
    }
}
