//! Instance families and per-suite checks.
//!
//! An instance is fully described by a one-line string (graphs in graph6,
//! hypergraphs in the one-line format, partitions and extra edges spelled
//! out), so checks never depend on the budget that produced them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::codec;
use crate::constructions::{
    co_sun, co_sun_hypergraph, exact_cover_reduction, middle_graph, split_join, sun,
    SplitLabeledGraph,
};
use crate::domination::{bertossi_dominating_set, is_dominating_set, is_krdf, normalized_gamma_r2};
use crate::graph::{is_isomorphic, Graph, SplitPartition};
use crate::hypergraph::{is_strongly_compatible, HyperItem, Hypergraph};

use super::enumerate::{enumerate_graphs, DEDUP_LIMIT};
use super::{Budget, Failure, SolverHooks, SuiteId, VerifierError};

// ---------------------------------------------------------------------------
// Deterministic randomness
// ---------------------------------------------------------------------------

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next() % bound
    }

    fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u64) as usize
    }

    fn coin(&mut self) -> bool {
        self.next() & 1 == 1
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01B3);
    }
    hash
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

/// How to build a compatible graph from a hypergraph for the hypergraph
/// suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Incidence,
    StronglyMinimal,
    Split,
    /// Incidence graph plus the listed hyperedge pairs.
    Extra(Vec<(usize, usize)>),
    /// Minimal strongly compatible graph plus the listed (disjoint)
    /// hyperedge pairs.
    StrongExtra(Vec<(usize, usize)>),
}

impl Mode {
    fn to_token(&self) -> String {
        match self {
            Mode::Incidence => String::from("incidence"),
            Mode::StronglyMinimal => String::from("strongmin"),
            Mode::Split => String::from("split"),
            Mode::Extra(pairs) => format!("extra:{}", pairs_token(pairs)),
            Mode::StrongExtra(pairs) => format!("strongextra:{}", pairs_token(pairs)),
        }
    }

    fn parse(token: &str) -> Result<Mode, VerifierError> {
        if token == "incidence" {
            return Ok(Mode::Incidence);
        }
        if token == "strongmin" {
            return Ok(Mode::StronglyMinimal);
        }
        if token == "split" {
            return Ok(Mode::Split);
        }
        if let Some(rest) = token.strip_prefix("extra:") {
            return Ok(Mode::Extra(parse_pairs(rest)?));
        }
        if let Some(rest) = token.strip_prefix("strongextra:") {
            return Ok(Mode::StrongExtra(parse_pairs(rest)?));
        }
        Err(VerifierError::BadInstance(format!("unknown construction mode {token:?}")))
    }
}

fn pairs_token(pairs: &[(usize, usize)]) -> String {
    if pairs.is_empty() {
        return String::from("none");
    }
    let parts: Vec<String> = pairs.iter().map(|(i, j)| format!("{i}-{j}")).collect();
    parts.join(",")
}

fn parse_pairs(token: &str) -> Result<Vec<(usize, usize)>, VerifierError> {
    if token == "none" {
        return Ok(Vec::new());
    }
    token
        .split(',')
        .map(|part| {
            let (a, b) = part
                .split_once('-')
                .ok_or_else(|| VerifierError::BadInstance(format!("bad pair {part:?}")))?;
            let i = a
                .parse()
                .map_err(|_| VerifierError::BadInstance(format!("bad pair {part:?}")))?;
            let j = b
                .parse()
                .map_err(|_| VerifierError::BadInstance(format!("bad pair {part:?}")))?;
            Ok((i, j))
        })
        .collect()
}

fn set_token(set: &BTreeSet<usize>) -> String {
    if set.is_empty() {
        return String::from("-");
    }
    let parts: Vec<String> = set.iter().map(ToString::to_string).collect();
    parts.join(",")
}

fn parse_set(token: &str) -> Result<BTreeSet<usize>, VerifierError> {
    if token == "-" {
        return Ok(BTreeSet::new());
    }
    token
        .split(',')
        .map(|part| {
            part.parse()
                .map_err(|_| VerifierError::BadInstance(format!("bad vertex {part:?}")))
        })
        .collect()
}

/// The two domination-additivity counterexamples from the split-join
/// analysis: factors with isolated vertices, and a factor with an empty
/// independent side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum JoinCx {
    IsolatedFactors,
    EmptyIndependentSide,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Instance {
    KGraph { k: usize, g: Graph },
    Hyper { k: usize, mode: Mode, h: Hypergraph },
    BaseGraph { g: Graph },
    SplitOne { g: Graph, clique: BTreeSet<usize> },
    SplitPair { g1: Graph, k1: BTreeSet<usize>, g2: Graph, k2: BTreeSet<usize> },
    JoinCx(JoinCx),
    Sun { t: usize },
    Reduction { k: usize, h: Hypergraph },
}

impl Instance {
    pub(crate) fn to_line(&self) -> String {
        match self {
            Instance::KGraph { k, g } => format!("k={k} g={}", codec::graph6_encode(g)),
            Instance::Hyper { k, mode, h } => {
                format!("k={k} mode={} h={}", mode.to_token(), codec::hypergraph_line_encode(h))
            }
            Instance::BaseGraph { g } => format!("g={}", codec::graph6_encode(g)),
            Instance::SplitOne { g, clique } => {
                format!("g={} K={}", codec::graph6_encode(g), set_token(clique))
            }
            Instance::SplitPair { g1, k1, g2, k2 } => format!(
                "g1={} K1={} g2={} K2={}",
                codec::graph6_encode(g1),
                set_token(k1),
                codec::graph6_encode(g2),
                set_token(k2)
            ),
            Instance::JoinCx(JoinCx::IsolatedFactors) => {
                String::from("counterexample=isolated-factors")
            }
            Instance::JoinCx(JoinCx::EmptyIndependentSide) => {
                String::from("counterexample=empty-independent-side")
            }
            Instance::Sun { t } => format!("t={t}"),
            Instance::Reduction { k, h } => {
                format!("k={k} h={}", codec::hypergraph_line_encode(h))
            }
        }
    }
}

fn take_kv<'a>(token: &'a str, key: &str) -> Result<&'a str, VerifierError> {
    token
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| VerifierError::BadInstance(format!("expected `{key}=…`, found {token:?}")))
}

fn decode_graph(token: &str) -> Result<Graph, VerifierError> {
    codec::graph6_decode(token).map_err(|e| VerifierError::BadInstance(e.to_string()))
}

fn decode_hyper(rest: &str) -> Result<Hypergraph, VerifierError> {
    codec::hypergraph_line_decode(rest).map_err(|e| VerifierError::BadInstance(e.to_string()))
}

/// Splits off the trailing `h=…` payload (which contains spaces).
fn split_hyper_payload(line: &str) -> Result<(&str, &str), VerifierError> {
    if let Some(idx) = line.find(" h=") {
        Ok((&line[..idx], &line[idx + 3..]))
    } else {
        Err(VerifierError::BadInstance(String::from("missing `h=…` payload")))
    }
}

pub(crate) fn parse_instance(suite: SuiteId, line: &str) -> Result<Instance, VerifierError> {
    let line = line.trim();
    match suite {
        SuiteId::Sandwich | SuiteId::Monotonicity => {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(VerifierError::BadInstance(String::from("expected `k=… g=…`")));
            }
            let k = take_kv(tokens[0], "k")?
                .parse()
                .map_err(|_| VerifierError::BadInstance(String::from("bad k")))?;
            let g = decode_graph(take_kv(tokens[1], "g")?)?;
            Ok(Instance::KGraph { k, g })
        }
        SuiteId::CompatibleGammaRk
        | SuiteId::EdgeCover
        | SuiteId::PmEquivalence
        | SuiteId::KRomanIffPm => {
            let (head, payload) = split_hyper_payload(line)?;
            let tokens: Vec<&str> = head.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(VerifierError::BadInstance(String::from("expected `k=… mode=… h=…`")));
            }
            let k = take_kv(tokens[0], "k")?
                .parse()
                .map_err(|_| VerifierError::BadInstance(String::from("bad k")))?;
            let mode = Mode::parse(take_kv(tokens[1], "mode")?)?;
            let h = decode_hyper(payload)?;
            Ok(Instance::Hyper { k, mode, h })
        }
        SuiteId::MiddleItalian => {
            let g = decode_graph(take_kv(line, "g")?)?;
            Ok(Instance::BaseGraph { g })
        }
        SuiteId::WeightToClique | SuiteId::OneINeighbor | SuiteId::Bertossi => {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(VerifierError::BadInstance(String::from("expected `g=… K=…`")));
            }
            let g = decode_graph(take_kv(tokens[0], "g")?)?;
            let clique = parse_set(take_kv(tokens[1], "K")?)?;
            Ok(Instance::SplitOne { g, clique })
        }
        SuiteId::JoinAdditivity
        | SuiteId::JoinForward
        | SuiteId::SingleVertexJoin
        | SuiteId::CliqueJoin
        | SuiteId::JoinCharacterization => {
            if let Ok(which) = take_kv(line, "counterexample") {
                return match which {
                    "isolated-factors" => Ok(Instance::JoinCx(JoinCx::IsolatedFactors)),
                    "empty-independent-side" => Ok(Instance::JoinCx(JoinCx::EmptyIndependentSide)),
                    other => {
                        Err(VerifierError::BadInstance(format!("unknown counterexample {other:?}")))
                    }
                };
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 4 {
                return Err(VerifierError::BadInstance(String::from(
                    "expected `g1=… K1=… g2=… K2=…`",
                )));
            }
            Ok(Instance::SplitPair {
                g1: decode_graph(take_kv(tokens[0], "g1")?)?,
                k1: parse_set(take_kv(tokens[1], "K1")?)?,
                g2: decode_graph(take_kv(tokens[2], "g2")?)?,
                k2: parse_set(take_kv(tokens[3], "K2")?)?,
            })
        }
        SuiteId::Suns | SuiteId::CoSuns | SuiteId::CosunGamma => {
            let t = take_kv(line, "t")?
                .parse()
                .map_err(|_| VerifierError::BadInstance(String::from("bad t")))?;
            Ok(Instance::Sun { t })
        }
        SuiteId::ReductionSoundness => {
            let (head, payload) = split_hyper_payload(line)?;
            let k = take_kv(head.trim(), "k")?
                .parse()
                .map_err(|_| VerifierError::BadInstance(String::from("bad k")))?;
            Ok(Instance::Reduction { k, h: decode_hyper(payload)? })
        }
    }
}

// ---------------------------------------------------------------------------
// Budget validation
// ---------------------------------------------------------------------------

pub(crate) fn validate_budget(suite: SuiteId, budget: &Budget) -> Result<(), VerifierError> {
    let check = |what: &'static str, requested: usize, limit: usize| {
        if requested > limit {
            Err(VerifierError::BudgetExceeded { what, requested, limit })
        } else {
            Ok(())
        }
    };
    match suite {
        SuiteId::Sandwich | SuiteId::Monotonicity => {
            check("max_n", budget.max_n, DEDUP_LIMIT)?;
            check("max_k", budget.max_k, 4)?;
        }
        SuiteId::CompatibleGammaRk
        | SuiteId::EdgeCover
        | SuiteId::PmEquivalence
        | SuiteId::KRomanIffPm => {
            check("hyper_v", budget.hyper_v, 6)?;
            check("hyper_e", budget.hyper_e, 10)?;
            check("rand_v", budget.rand_v, 12)?;
            check("rand_e", budget.rand_e, 12)?;
            check("rand_count", budget.rand_count, 1000)?;
            check("max_k", budget.max_k, 4)?;
        }
        SuiteId::MiddleItalian
        | SuiteId::WeightToClique
        | SuiteId::OneINeighbor
        | SuiteId::Bertossi => {
            check("max_n", budget.max_n, DEDUP_LIMIT)?;
        }
        SuiteId::JoinAdditivity
        | SuiteId::JoinForward
        | SuiteId::SingleVertexJoin
        | SuiteId::CliqueJoin
        | SuiteId::JoinCharacterization => {
            check("factor_n", budget.factor_n, 6)?;
        }
        SuiteId::Suns | SuiteId::CoSuns | SuiteId::CosunGamma => {
            check("max_t", budget.max_t, 10)?;
        }
        SuiteId::ReductionSoundness => {
            check("reduction_count", budget.reduction_count, 10_000)?;
            check("rand_v", budget.rand_v, 12)?;
            check("rand_e", budget.rand_e, 12)?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out: usize = 1;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// All k-subsets of `0..n` in lexicographic order.
fn k_subsets(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(BTreeSet::new());
        return out;
    }
    loop {
        out.push(current.iter().copied().collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in (i + 1)..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn random_uniform_hypergraph(
    rng: &mut SplitMix,
    nv: usize,
    k: usize,
    m: usize,
    require_covered: bool,
) -> Hypergraph {
    let m = m.min(binomial(nv, k)).max(1);
    for _attempt in 0..10_000 {
        let mut edges: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        while edges.len() < m {
            let mut edge = BTreeSet::new();
            while edge.len() < k {
                edge.insert(rng.below(nv as u64) as usize);
            }
            edges.insert(edge);
        }
        let h = Hypergraph::new(nv, edges.into_iter().collect())
            .expect("sampled hyperedges are distinct and nonempty");
        if !require_covered || !h.has_isolated_vertex() {
            return h;
        }
    }
    panic!("random hypergraph generation failed to cover all vertices");
}

fn random_pairs(rng: &mut SplitMix, candidates: &[(usize, usize)]) -> Vec<(usize, usize)> {
    candidates.iter().copied().filter(|_| rng.coin()).collect()
}

fn all_index_pairs(m: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            out.push((i, j));
        }
    }
    out
}

fn disjoint_index_pairs(h: &Hypergraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..h.m() {
        for j in (i + 1)..h.m() {
            if h.edge(i).is_disjoint(h.edge(j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// The three construction modes sampled for a hypergraph suite: both
/// extremes plus one seeded intermediate.
fn modes_for(suite: SuiteId, budget: &Budget, k: usize, h: &Hypergraph) -> Vec<Mode> {
    let line = codec::hypergraph_line_encode(h);
    let mut rng = SplitMix(
        budget.seed ^ fnv1a(line.as_bytes()) ^ fnv1a(suite.name().as_bytes()) ^ (k as u64),
    );
    if suite == SuiteId::CompatibleGammaRk {
        let extra = random_pairs(&mut rng, &all_index_pairs(h.m()));
        alloc::vec![Mode::Incidence, Mode::Split, Mode::Extra(extra)]
    } else {
        let extra = random_pairs(&mut rng, &disjoint_index_pairs(h));
        alloc::vec![Mode::StronglyMinimal, Mode::Split, Mode::StrongExtra(extra)]
    }
}

fn visit_hyper_suite(
    suite: SuiteId,
    budget: &Budget,
    f: &mut dyn FnMut(Instance),
) -> Result<(), VerifierError> {
    let k_lo = if suite == SuiteId::KRomanIffPm { 2 } else { 1 };
    let require_covered = suite != SuiteId::CompatibleGammaRk;
    for k in k_lo..=budget.max_k {
        // Exhaustive sweep.
        for n in 1..=budget.hyper_v {
            let candidates = k_subsets(n, k);
            if candidates.len() > 25 {
                return Err(VerifierError::BudgetExceeded {
                    what: "hyperedge candidates",
                    requested: candidates.len(),
                    limit: 25,
                });
            }
            for mask in 0u32..(1 << candidates.len()) {
                if (mask.count_ones() as usize) > budget.hyper_e {
                    continue;
                }
                let edges: Vec<BTreeSet<usize>> = (0..candidates.len())
                    .filter(|&i| (mask >> i) & 1 == 1)
                    .map(|i| candidates[i].clone())
                    .collect();
                let h = Hypergraph::new(n, edges).expect("distinct subsets");
                if require_covered && h.has_isolated_vertex() {
                    continue;
                }
                for mode in modes_for(suite, budget, k, &h) {
                    f(Instance::Hyper { k, mode, h: h.clone() });
                }
            }
        }
        // Seeded random sweep above the exhaustive range.
        if budget.rand_v > budget.hyper_v {
            for idx in 0..budget.rand_count {
                let mut rng = SplitMix(
                    budget.seed
                        ^ fnv1a(suite.name().as_bytes())
                        ^ ((k as u64) << 32)
                        ^ (idx as u64).wrapping_mul(0x9E37),
                );
                let nv = rng.range(budget.hyper_v + 1, budget.rand_v);
                if k > nv {
                    continue;
                }
                let m_lo = if require_covered { nv.div_ceil(k) } else { 1 };
                let m_hi = budget.rand_e.max(m_lo);
                let m = rng.range(m_lo, m_hi);
                let h = random_uniform_hypergraph(&mut rng, nv, k, m, require_covered);
                for mode in modes_for(suite, budget, k, &h) {
                    f(Instance::Hyper { k, mode, h: h.clone() });
                }
            }
        }
    }
    Ok(())
}

/// All `(graph, clique)` split factors on up to `max_n` vertices:
/// isomorphism-deduped graphs paired with every valid split partition.
fn split_factors(max_n: usize) -> Result<Vec<(Graph, BTreeSet<usize>)>, VerifierError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in enumerate_graphs(n, true)? {
            for mask in 0u32..(1 << n) {
                let clique: BTreeSet<usize> = (0..n).filter(|&v| (mask >> v) & 1 == 1).collect();
                let independent: BTreeSet<usize> = (0..n).filter(|v| !clique.contains(v)).collect();
                if SplitPartition::new(&g, clique.clone(), independent).is_ok() {
                    out.push((g.clone(), clique));
                }
            }
        }
    }
    Ok(out)
}

fn has_isolated(g: &Graph) -> bool {
    g.has_isolated_vertex()
}

fn visit_pairs(
    factors: &[(Graph, BTreeSet<usize>)],
    f: &mut dyn FnMut(Instance),
) {
    for (i, (g1, k1)) in factors.iter().enumerate() {
        for (g2, k2) in factors.iter().skip(i) {
            f(Instance::SplitPair {
                g1: g1.clone(),
                k1: k1.clone(),
                g2: g2.clone(),
                k2: k2.clone(),
            });
        }
    }
}

pub(crate) fn visit_instances(
    suite: SuiteId,
    budget: &Budget,
    f: &mut dyn FnMut(Instance),
) -> Result<(), VerifierError> {
    match suite {
        SuiteId::Sandwich => {
            for k in 1..=budget.max_k {
                for n in 0..=budget.max_n {
                    for g in enumerate_graphs(n, true)? {
                        f(Instance::KGraph { k, g });
                    }
                }
            }
        }
        SuiteId::Monotonicity => {
            // Instance (k, g) checks the step k+1 → k.
            for k in 2..budget.max_k {
                for n in 0..=budget.max_n {
                    for g in enumerate_graphs(n, true)? {
                        f(Instance::KGraph { k, g });
                    }
                }
            }
        }
        SuiteId::CompatibleGammaRk
        | SuiteId::EdgeCover
        | SuiteId::PmEquivalence
        | SuiteId::KRomanIffPm => visit_hyper_suite(suite, budget, f)?,
        SuiteId::MiddleItalian => {
            for n in 2..=budget.max_n {
                for g in enumerate_graphs(n, true)? {
                    if g.is_connected() {
                        f(Instance::BaseGraph { g });
                    }
                }
            }
        }
        SuiteId::WeightToClique | SuiteId::Bertossi | SuiteId::OneINeighbor => {
            for (g, clique) in split_factors(budget.max_n)? {
                if has_isolated(&g) {
                    continue;
                }
                if suite == SuiteId::OneINeighbor {
                    let ok = clique.iter().all(|&u| {
                        g.neighbors(u).iter().filter(|v| !clique.contains(v)).count() <= 1
                    });
                    if !ok {
                        continue;
                    }
                }
                f(Instance::SplitOne { g, clique });
            }
        }
        SuiteId::JoinAdditivity => {
            f(Instance::JoinCx(JoinCx::IsolatedFactors));
            f(Instance::JoinCx(JoinCx::EmptyIndependentSide));
            let factors: Vec<_> = split_factors(budget.factor_n)?
                .into_iter()
                .filter(|(g, k)| !has_isolated(g) && k.len() < g.n())
                .collect();
            visit_pairs(&factors, f);
        }
        SuiteId::JoinForward => {
            let factors: Vec<_> = split_factors(budget.factor_n)?
                .into_iter()
                .filter(|(g, _)| !has_isolated(g))
                .collect();
            visit_pairs(&factors, f);
        }
        SuiteId::JoinCharacterization => {
            let factors: Vec<_> = split_factors(budget.factor_n)?
                .into_iter()
                .filter(|(g, _)| {
                    !has_isolated(g)
                        && crate::domination::is_k_roman(g, 2).expect("k = 2 is accepted")
                })
                .collect();
            visit_pairs(&factors, f);
        }
        SuiteId::SingleVertexJoin => {
            let single = Graph::empty(1);
            let g1s = [
                (single.clone(), BTreeSet::from([0usize])),
                (single.clone(), BTreeSet::new()),
            ];
            let mut g2s: Vec<(Graph, BTreeSet<usize>)> = g1s.to_vec();
            g2s.extend(
                split_factors(budget.factor_n)?
                    .into_iter()
                    .filter(|(g, _)| !has_isolated(g)),
            );
            for (g1, k1) in &g1s {
                for (g2, k2) in &g2s {
                    f(Instance::SplitPair {
                        g1: g1.clone(),
                        k1: k1.clone(),
                        g2: g2.clone(),
                        k2: k2.clone(),
                    });
                }
            }
        }
        SuiteId::CliqueJoin => {
            let factors: Vec<_> = split_factors(budget.factor_n)?
                .into_iter()
                .filter(|(g, _)| !has_isolated(g))
                .collect();
            for m in 1..=budget.factor_n {
                let g1 = Graph::complete(m);
                let k1: BTreeSet<usize> = (0..m).collect();
                for (g2, k2) in &factors {
                    f(Instance::SplitPair {
                        g1: g1.clone(),
                        k1: k1.clone(),
                        g2: g2.clone(),
                        k2: k2.clone(),
                    });
                }
            }
        }
        SuiteId::Suns | SuiteId::CoSuns => {
            for t in 3..=budget.max_t {
                f(Instance::Sun { t });
            }
        }
        SuiteId::CosunGamma => {
            for t in 5..=budget.max_t {
                f(Instance::Sun { t });
            }
        }
        SuiteId::ReductionSoundness => {
            for idx in 0..budget.reduction_count {
                let mut rng =
                    SplitMix(budget.seed ^ 0x5245_4455_4354 ^ (idx as u64).wrapping_mul(0x9E37));
                let hi_v = budget.rand_v.clamp(3, 9);
                let nv = rng.range(3, hi_v);
                let m_lo = nv.div_ceil(3);
                let m_hi = budget.rand_e.max(m_lo);
                let m = rng.range(m_lo, m_hi);
                let h = random_uniform_hypergraph(&mut rng, nv, 3, m, true);
                f(Instance::Reduction { k: 3, h });
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

fn fail(observed: impl Into<String>, expected: impl Into<String>) -> Option<Failure> {
    Some(Failure { observed: observed.into(), expected: expected.into() })
}

fn build_construction(h: &Hypergraph, mode: &Mode) -> Result<Graph, VerifierError> {
    match mode {
        Mode::Incidence => Ok(h.incidence_graph()),
        Mode::StronglyMinimal => Ok(h.strongly_compatible_minimal()),
        Mode::Split => Ok(h.compatible_split().0),
        Mode::Extra(pairs) => h
            .compatible_with_extra_edges(pairs)
            .map_err(|e| VerifierError::BadInstance(e.to_string())),
        Mode::StrongExtra(pairs) => {
            let mut g = h.strongly_compatible_minimal();
            for &(i, j) in pairs {
                if i >= h.m() || j >= h.m() || i == j {
                    return Err(VerifierError::BadInstance(format!(
                        "extra pair ({i},{j}) out of range"
                    )));
                }
                g.insert_edge(h.n() + i, h.n() + j);
            }
            Ok(g)
        }
    }
}

fn split_partition_of(
    g: &Graph,
    clique: &BTreeSet<usize>,
) -> Result<SplitPartition, VerifierError> {
    let independent: BTreeSet<usize> = (0..g.n()).filter(|v| !clique.contains(v)).collect();
    SplitPartition::new(g, clique.clone(), independent)
        .map_err(|e| VerifierError::BadInstance(e.to_string()))
}

fn labeled(g: &Graph, clique: &BTreeSet<usize>) -> Result<SplitLabeledGraph, VerifierError> {
    let p = split_partition_of(g, clique)?;
    SplitLabeledGraph::new(g.clone(), p).map_err(|e| VerifierError::BadInstance(e.to_string()))
}

/// The cycle C_t as a hypergraph with edges in cyclic order, plus the
/// labeling under which the t-sun is strongly compatible with it: sun
/// clique vertex `a` plays hyperedge `{a-1, a}` and independent vertex
/// `t + b` plays cycle vertex `b`.
fn sun_cycle_certificate(t: usize) -> (Hypergraph, Vec<HyperItem>) {
    let edges: Vec<BTreeSet<usize>> =
        (0..t).map(|j| BTreeSet::from([j, (j + 1) % t])).collect();
    let h = Hypergraph::new(t, edges).expect("cycle edges are distinct");
    let mut labeling = Vec::with_capacity(2 * t);
    for a in 0..t {
        labeling.push(HyperItem::Edge((a + t - 1) % t));
    }
    for b in 0..t {
        labeling.push(HyperItem::Vertex(b));
    }
    (h, labeling)
}

pub(crate) fn check(
    suite: SuiteId,
    instance: &Instance,
    hooks: &SolverHooks,
) -> Result<Option<Failure>, VerifierError> {
    let wrong_shape =
        || VerifierError::BadInstance(format!("instance does not belong to suite {suite}"));
    match suite {
        SuiteId::Sandwich => {
            let Instance::KGraph { k, g } = instance else { return Err(wrong_shape()) };
            let (k, n) = (*k, g.n());
            let gamma = (hooks.gamma_value)(g);
            let rk = hooks.gamma_rk_value(g, k);
            let expected = format!("gamma <= gamma_rk <= min(k*gamma, n) = min({}, {n})", k * gamma);
            if rk < gamma || rk > k * gamma || rk > n {
                return Ok(fail(format!("gamma = {gamma}, gamma_r{k} = {rk}"), expected));
            }
            if k == 1 && rk != gamma {
                return Ok(fail(
                    format!("gamma_r1 = {rk}, gamma = {gamma}"),
                    "gamma_r1 = gamma",
                ));
            }
            Ok(None)
        }
        SuiteId::Monotonicity => {
            let Instance::KGraph { k, g } = instance else { return Err(wrong_shape()) };
            let up = hooks.is_k_roman(g, k + 1);
            let down = hooks.is_k_roman(g, *k);
            if up && !down {
                return Ok(fail(
                    format!("{{{}}}-Roman but not {{{k}}}-Roman", k + 1),
                    format!("every {{{}}}-Roman graph is {{{k}}}-Roman", k + 1),
                ));
            }
            Ok(None)
        }
        SuiteId::CompatibleGammaRk => {
            let Instance::Hyper { k, mode, h } = instance else { return Err(wrong_shape()) };
            let g = build_construction(h, mode)?;
            let target = h.n();
            let feasible_at_target = (hooks.krdf_feasible)(&g, *k, target);
            let tight = target == 0 || !(hooks.krdf_feasible)(&g, *k, target - 1);
            if !(feasible_at_target && tight) {
                let rk = hooks.gamma_rk_value(&g, *k);
                return Ok(fail(format!("gamma_rk = {rk}"), format!("gamma_rk = |V| = {target}")));
            }
            Ok(None)
        }
        SuiteId::EdgeCover => {
            let Instance::Hyper { mode, h, .. } = instance else { return Err(wrong_shape()) };
            let g = build_construction(h, mode)?;
            let gamma = (hooks.gamma_value)(&g);
            let rho = (hooks.edge_cover_number)(h);
            if gamma != rho {
                return Ok(fail(format!("gamma = {gamma}"), format!("gamma = rho = {rho}")));
            }
            Ok(None)
        }
        SuiteId::PmEquivalence => {
            let Instance::Hyper { k, mode, h } = instance else { return Err(wrong_shape()) };
            let g = build_construction(h, mode)?;
            let pm = (hooks.pm_exists)(h);
            let gamma = (hooks.gamma_value)(&g);
            let eq = k * gamma == h.n();
            let le = k * gamma <= h.n();
            if pm != eq || eq != le {
                return Ok(fail(
                    format!("pm = {pm}, gamma = {gamma}, |V| = {}, k = {k}", h.n()),
                    "pm ⟺ gamma = |V|/k ⟺ gamma <= |V|/k",
                ));
            }
            Ok(None)
        }
        SuiteId::KRomanIffPm => {
            let Instance::Hyper { k, mode, h } = instance else { return Err(wrong_shape()) };
            let g = build_construction(h, mode)?;
            let roman = hooks.is_k_roman(&g, *k);
            let pm = (hooks.pm_exists)(h);
            if roman != pm {
                return Ok(fail(
                    format!("{{{k}}}-Roman = {roman}, pm = {pm}"),
                    "{k}-Roman ⟺ perfect matching",
                ));
            }
            Ok(None)
        }
        SuiteId::MiddleItalian => {
            let Instance::BaseGraph { g } = instance else { return Err(wrong_shape()) };
            let n = g.n();
            let m = middle_graph(g);
            let hg = Hypergraph::from_graph(g);
            let rk_ok =
                (hooks.krdf_feasible)(&m, 2, n) && (n == 0 || !(hooks.krdf_feasible)(&m, 2, n - 1));
            if !rk_ok {
                let rk = hooks.gamma_rk_value(&m, 2);
                return Ok(fail(
                    format!("gamma_r2(M(G)) = {rk}"),
                    format!("gamma_r2(M(G)) = n = {n}"),
                ));
            }
            let gamma_m = (hooks.gamma_value)(&m);
            let rho = (hooks.edge_cover_number)(&hg);
            if gamma_m != rho {
                return Ok(fail(
                    format!("gamma(M(G)) = {gamma_m}"),
                    format!("gamma(M(G)) = rho(G) = {rho}"),
                ));
            }
            let roman = hooks.is_k_roman(&m, 2);
            let pm = (hooks.pm_exists)(&hg);
            if roman != pm {
                return Ok(fail(
                    format!("M(G) {{2}}-Roman = {roman}, pm = {pm}"),
                    "M(G) {2}-Roman ⟺ G has a perfect matching",
                ));
            }
            Ok(None)
        }
        SuiteId::WeightToClique => {
            let Instance::SplitOne { g, clique } = instance else { return Err(wrong_shape()) };
            let p = split_partition_of(g, clique)?;
            let f = normalized_gamma_r2(g, &p)
                .map_err(|e| VerifierError::BadInstance(e.to_string()))?;
            let optimum = hooks.gamma_rk_value(g, 2);
            if f.weight() != optimum {
                return Ok(fail(
                    format!("normalized weight = {}", f.weight()),
                    format!("weight = gamma_r2 = {optimum}"),
                ));
            }
            if is_krdf(g, &f) != Ok(true) {
                return Ok(fail("normalized function is not a {2}-RDF", "a valid {2}-RDF"));
            }
            for &u in &p.clique {
                let iw: usize = g
                    .neighbors(u)
                    .iter()
                    .filter(|v| p.independent.contains(v))
                    .map(|&v| f.value(v))
                    .sum();
                if iw > 1 {
                    return Ok(fail(
                        format!("f(N({u}) ∩ I) = {iw}"),
                        "at most 1 on every clique vertex's independent neighbors",
                    ));
                }
            }
            let kw: usize = p.clique.iter().map(|&u| f.value(u)).sum();
            if kw < 2 {
                return Ok(fail(format!("f(K) = {kw}"), "f(K) >= 2"));
            }
            Ok(None)
        }
        SuiteId::OneINeighbor => {
            let Instance::SplitOne { g, clique } = instance else { return Err(wrong_shape()) };
            let p = split_partition_of(g, clique)?;
            let roman = hooks.is_k_roman(g, 2);
            let expected = p.independent.len() <= 1;
            if roman != expected {
                return Ok(fail(
                    format!("{{2}}-Roman = {roman}, |I| = {}", p.independent.len()),
                    "{2}-Roman ⟺ |I| <= 1",
                ));
            }
            Ok(None)
        }
        SuiteId::Bertossi => {
            let Instance::SplitOne { g, clique } = instance else { return Err(wrong_shape()) };
            let p = split_partition_of(g, clique)?;
            let d = bertossi_dominating_set(g, &p)
                .map_err(|e| VerifierError::BadInstance(e.to_string()))?;
            if !d.is_subset(&p.clique) {
                return Ok(fail("witness leaves the clique", "D ⊆ K"));
            }
            if is_dominating_set(g, &d) != Ok(true) {
                return Ok(fail("witness does not dominate", "a dominating set"));
            }
            let gamma = (hooks.gamma_value)(g);
            if d.len() != gamma {
                return Ok(fail(format!("|D| = {}", d.len()), format!("|D| = gamma = {gamma}")));
            }
            Ok(None)
        }
        SuiteId::JoinAdditivity => match instance {
            Instance::JoinCx(JoinCx::IsolatedFactors) => {
                let a = labeled(&Graph::empty(2), &BTreeSet::from([0]))?;
                let joined = split_join(&a, &a);
                let got = (hooks.gamma_value)(joined.graph());
                let sum = 2 * (hooks.gamma_value)(a.graph());
                if got != 3 || sum != 4 {
                    return Ok(fail(
                        format!("gamma(S) = {got}, gamma sum = {sum}"),
                        "gamma(S) = 3 while the factors sum to 4",
                    ));
                }
                Ok(None)
            }
            Instance::JoinCx(JoinCx::EmptyIndependentSide) => {
                let a = labeled(&Graph::complete(2), &BTreeSet::from([0, 1]))?;
                let b = labeled(&crate::graph::path(2), &BTreeSet::from([0]))?;
                let joined = split_join(&a, &b);
                let got = (hooks.gamma_value)(joined.graph());
                let sum = (hooks.gamma_value)(a.graph()) + (hooks.gamma_value)(b.graph());
                if got != 1 || sum != 2 {
                    return Ok(fail(
                        format!("gamma(S) = {got}, gamma sum = {sum}"),
                        "gamma(S) = 1 while the factors sum to 2",
                    ));
                }
                Ok(None)
            }
            Instance::SplitPair { g1, k1, g2, k2 } => {
                let a = labeled(g1, k1)?;
                let b = labeled(g2, k2)?;
                let joined = split_join(&a, &b);
                let got = (hooks.gamma_value)(joined.graph());
                let sum = (hooks.gamma_value)(g1) + (hooks.gamma_value)(g2);
                if got != sum {
                    return Ok(fail(
                        format!("gamma(S) = {got}"),
                        format!("gamma(G1) + gamma(G2) = {sum}"),
                    ));
                }
                Ok(None)
            }
            _ => Err(wrong_shape()),
        },
        SuiteId::JoinForward => {
            let Instance::SplitPair { g1, k1, g2, k2 } = instance else {
                return Err(wrong_shape());
            };
            let joined = split_join(&labeled(g1, k1)?, &labeled(g2, k2)?);
            if hooks.is_k_roman(joined.graph(), 2)
                && !(hooks.is_k_roman(g1, 2) && hooks.is_k_roman(g2, 2))
            {
                return Ok(fail(
                    "join is {2}-Roman but a factor is not",
                    "{2}-Roman join forces {2}-Roman factors",
                ));
            }
            Ok(None)
        }
        SuiteId::SingleVertexJoin => {
            let Instance::SplitPair { g1, k1, g2, k2 } = instance else {
                return Err(wrong_shape());
            };
            let joined = split_join(&labeled(g1, k1)?, &labeled(g2, k2)?);
            let roman = hooks.is_k_roman(joined.graph(), 2);
            let i1_empty = k1.len() == g1.n();
            let g2_single_clique = g2.n() == 1 && k2.len() == 1;
            let expected = i1_empty && (g2_single_clique || hooks.is_k_roman(g2, 2));
            if roman != expected {
                return Ok(fail(
                    format!("{{2}}-Roman = {roman}"),
                    format!("I1 empty and (G2 = K1 in the clique or G2 {{2}}-Roman) = {expected}"),
                ));
            }
            Ok(None)
        }
        SuiteId::CliqueJoin => {
            let Instance::SplitPair { g1, k1, g2, k2 } = instance else {
                return Err(wrong_shape());
            };
            let joined = split_join(&labeled(g1, k1)?, &labeled(g2, k2)?);
            let roman = hooks.is_k_roman(joined.graph(), 2);
            let expected = hooks.is_k_roman(g2, 2);
            if roman != expected {
                return Ok(fail(
                    format!("join {{2}}-Roman = {roman}"),
                    format!("G2 {{2}}-Roman = {expected}"),
                ));
            }
            Ok(None)
        }
        SuiteId::JoinCharacterization => {
            let Instance::SplitPair { g1, k1, g2, k2 } = instance else {
                return Err(wrong_shape());
            };
            let joined = split_join(&labeled(g1, k1)?, &labeled(g2, k2)?);
            let roman = hooks.is_k_roman(joined.graph(), 2);
            let i1 = g1.n() - k1.len();
            let i2 = g2.n() - k2.len();
            let expected = i1 == 0 || i2 == 0 || (i1 >= 2 && i2 >= 2);
            if roman != expected {
                return Ok(fail(
                    format!("{{2}}-Roman = {roman}, |I1| = {i1}, |I2| = {i2}"),
                    "{2}-Roman ⟺ some I empty, or both of size >= 2",
                ));
            }
            Ok(None)
        }
        SuiteId::Suns => {
            let Instance::Sun { t } = instance else { return Err(wrong_shape()) };
            let t = *t;
            let s = sun(t).map_err(|e| VerifierError::BadInstance(e.to_string()))?;
            let gamma = (hooks.gamma_value)(s.graph());
            if gamma != t.div_ceil(2) {
                return Ok(fail(
                    format!("gamma(S_{t}) = {gamma}"),
                    format!("gamma(S_{t}) = ceil(t/2) = {}", t.div_ceil(2)),
                ));
            }
            let two = hooks.is_k_roman(s.graph(), 2);
            if two != (t % 2 == 0) {
                return Ok(fail(
                    format!("{{2}}-Roman = {two}"),
                    "S_t is {2}-Roman iff t is even",
                ));
            }
            if hooks.is_k_roman(s.graph(), 3) {
                return Ok(fail("{3}-Roman = true", "S_t is never {3}-Roman"));
            }
            let (ct, labeling) = sun_cycle_certificate(t);
            if is_strongly_compatible(s.graph(), &ct, &labeling) != Ok(true) {
                return Ok(fail(
                    "sun is not strongly compatible with its cycle",
                    "strong compatibility with C_t",
                ));
            }
            Ok(None)
        }
        SuiteId::CoSuns => {
            let Instance::Sun { t } = instance else { return Err(wrong_shape()) };
            let t = *t;
            let c = co_sun(t).map_err(|e| VerifierError::BadInstance(e.to_string()))?;
            let two = hooks.is_k_roman(c.graph(), 2);
            if two != (t == 4 || t == 5) {
                return Ok(fail(
                    format!("{{2}}-Roman = {two}"),
                    "co-sun is {2}-Roman iff t ∈ {4, 5}",
                ));
            }
            if hooks.is_k_roman(c.graph(), 3) {
                return Ok(fail("{3}-Roman = true", "co-suns are never {3}-Roman"));
            }
            if t == 3 {
                let gamma = (hooks.gamma_value)(c.graph());
                let rk = hooks.gamma_rk_value(c.graph(), 2);
                if gamma != 3 || rk != 4 {
                    return Ok(fail(
                        format!("gamma = {gamma}, gamma_r2 = {rk}"),
                        "gamma = 3 and gamma_r2 = 4 for the co-3-sun",
                    ));
                }
            }
            if t == 4 {
                let s4 = sun(4).expect("t = 4 is valid");
                if is_isomorphic(c.graph(), s4.graph()) != Ok(true) {
                    return Ok(fail("co-4-sun not isomorphic to S_4", "isomorphic to S_4"));
                }
            }
            let h = co_sun_hypergraph(t).expect("t >= 3 here");
            if is_strongly_compatible(c.graph(), &h, &h.canonical_labeling()) != Ok(true) {
                return Ok(fail(
                    "co-sun is not strongly compatible with its hypergraph",
                    "strong compatibility with the (t-2)-uniform hypergraph",
                ));
            }
            Ok(None)
        }
        SuiteId::CosunGamma => {
            let Instance::Sun { t } = instance else { return Err(wrong_shape()) };
            let c = co_sun(*t).map_err(|e| VerifierError::BadInstance(e.to_string()))?;
            let gamma = (hooks.gamma_value)(c.graph());
            if gamma != 2 {
                return Ok(fail(format!("gamma = {gamma}"), "gamma = 2 for t >= 5"));
            }
            Ok(None)
        }
        SuiteId::ReductionSoundness => {
            let Instance::Reduction { k, h } = instance else { return Err(wrong_shape()) };
            let reduced = exact_cover_reduction(h, *k)
                .map_err(|e| VerifierError::BadInstance(e.to_string()))?;
            let roman = hooks.is_k_roman(reduced.graph(), *k);
            let pm = (hooks.pm_exists)(h);
            if roman != pm {
                return Ok(fail(
                    format!("{{{k}}}-Roman = {roman}, pm = {pm}"),
                    "reduction is {k}-Roman ⟺ exact cover exists",
                ));
            }
            Ok(None)
        }
    }
}
