//! Exhaustive small-instance verification harness.
//!
//! Every suite turns one statement about `{k}`-Roman domination into a
//! deterministic sweep over an instance family bounded by a [`Budget`].
//! Instances are self-contained strings, so any reported counterexample can
//! be re-checked in isolation with [`recheck`]. Reports aggregate
//! order-independently: the instance count plus the lexicographically least
//! failing instance.
//!
//! Solvers are injected through [`SolverHooks`]; the default hooks call the
//! real solvers, and tests can inject corrupted ones to exercise the
//! harness itself.

mod enumerate;
mod suites;

pub use enumerate::{canonical_form, canonical_key, enumerate_graphs, GraphStream};
pub use enumerate::{DEDUP_LIMIT, LABELED_LIMIT};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifierError {
    UnknownSuite(String),
    BudgetExceeded { what: &'static str, requested: usize, limit: usize },
    BadInstance(String),
}

impl fmt::Display for VerifierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifierError::UnknownSuite(name) => write!(f, "unknown suite {name:?}"),
            VerifierError::BudgetExceeded { what, requested, limit } => {
                write!(f, "budget exceeded: {what} = {requested} (limit {limit})")
            }
            VerifierError::BadInstance(msg) => write!(f, "bad instance: {msg}"),
        }
    }
}

impl core::error::Error for VerifierError {}

/// Size parameters for the suites. The defaults keep a full sweep of every
/// suite in the minutes range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Deduped graph enumeration cap (sandwich, monotonicity,
    /// middle-italian, split-graph suites).
    pub max_n: usize,
    /// Largest `k` for the k-ranged suites.
    pub max_k: usize,
    /// Largest sun / co-sun order.
    pub max_t: usize,
    /// Vertex cap for split-join factors.
    pub factor_n: usize,
    /// Exhaustive hypergraph enumeration: vertex and hyperedge caps.
    pub hyper_v: usize,
    pub hyper_e: usize,
    /// Seeded random hypergraphs on top of the exhaustive sweep: vertex and
    /// hyperedge caps and the number of instances per uniformity.
    pub rand_v: usize,
    pub rand_e: usize,
    pub rand_count: usize,
    /// Seeded instances for the reduction-soundness suite.
    pub reduction_count: usize,
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n: 6,
            max_k: 3,
            max_t: 8,
            factor_n: 5,
            hyper_v: 6,
            hyper_e: 8,
            rand_v: 9,
            rand_e: 10,
            rand_count: 25,
            reduction_count: 50,
            seed: 1,
        }
    }
}

/// The verification suites, one per statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteId {
    Sandwich,
    Monotonicity,
    CompatibleGammaRk,
    EdgeCover,
    PmEquivalence,
    KRomanIffPm,
    MiddleItalian,
    WeightToClique,
    OneINeighbor,
    Bertossi,
    JoinAdditivity,
    JoinForward,
    SingleVertexJoin,
    CliqueJoin,
    JoinCharacterization,
    Suns,
    CoSuns,
    CosunGamma,
    ReductionSoundness,
}

impl SuiteId {
    pub const ALL: [SuiteId; 19] = [
        SuiteId::Sandwich,
        SuiteId::Monotonicity,
        SuiteId::CompatibleGammaRk,
        SuiteId::EdgeCover,
        SuiteId::PmEquivalence,
        SuiteId::KRomanIffPm,
        SuiteId::MiddleItalian,
        SuiteId::WeightToClique,
        SuiteId::OneINeighbor,
        SuiteId::Bertossi,
        SuiteId::JoinAdditivity,
        SuiteId::JoinForward,
        SuiteId::SingleVertexJoin,
        SuiteId::CliqueJoin,
        SuiteId::JoinCharacterization,
        SuiteId::Suns,
        SuiteId::CoSuns,
        SuiteId::CosunGamma,
        SuiteId::ReductionSoundness,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteId::Sandwich => "sandwich",
            SuiteId::Monotonicity => "monotonicity",
            SuiteId::CompatibleGammaRk => "compatible-gammark",
            SuiteId::EdgeCover => "edge-cover",
            SuiteId::PmEquivalence => "pm-equivalence",
            SuiteId::KRomanIffPm => "k-roman-iff-pm",
            SuiteId::MiddleItalian => "middle-italian",
            SuiteId::WeightToClique => "weight-to-clique",
            SuiteId::OneINeighbor => "one-I-neighbor",
            SuiteId::Bertossi => "bertossi",
            SuiteId::JoinAdditivity => "join-additivity",
            SuiteId::JoinForward => "join-forward",
            SuiteId::SingleVertexJoin => "single-vertex-join",
            SuiteId::CliqueJoin => "clique-join",
            SuiteId::JoinCharacterization => "join-characterization",
            SuiteId::Suns => "suns",
            SuiteId::CoSuns => "co-suns",
            SuiteId::CosunGamma => "cosun-gamma",
            SuiteId::ReductionSoundness => "reduction-soundness",
        }
    }

    pub fn parse(name: &str) -> Result<SuiteId, VerifierError> {
        SuiteId::ALL
            .iter()
            .copied()
            .find(|s| s.name() == name)
            .ok_or_else(|| VerifierError::UnknownSuite(String::from(name)))
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The solver entry points a suite is allowed to consult. Swapping these
/// out (e.g. with deliberately wrong answers) exercises the harness's
/// counterexample reporting.
#[derive(Clone, Copy)]
pub struct SolverHooks {
    pub gamma_value: fn(&Graph) -> usize,
    pub krdf_feasible: fn(&Graph, usize, usize) -> bool,
    pub pm_exists: fn(&Hypergraph) -> bool,
    pub edge_cover_number: fn(&Hypergraph) -> usize,
}

impl Default for SolverHooks {
    fn default() -> Self {
        SolverHooks {
            gamma_value: crate::domination::gamma_value,
            krdf_feasible: crate::domination::krdf_feasible,
            pm_exists: Hypergraph::pm_exists,
            edge_cover_number: |h| {
                h.edge_cover_number().expect("suites feed hypergraphs without isolated vertices")
            },
        }
    }
}

impl SolverHooks {
    /// γ_{Rk} by iterative deepening on the feasibility hook; capped at `n`
    /// since weight 1 everywhere is always feasible.
    fn gamma_rk_value(&self, g: &Graph, k: usize) -> usize {
        let n = g.n();
        let mut w = 0;
        while w < n && !(self.krdf_feasible)(g, k, w) {
            w += 1;
        }
        w
    }

    fn is_k_roman(&self, g: &Graph, k: usize) -> bool {
        let gamma = (self.gamma_value)(g);
        if gamma == 0 {
            return true;
        }
        !(self.krdf_feasible)(g, k, k * gamma - 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Self-contained instance encoding; feed back into [`recheck`].
    #[serde(rename = "instance_graph6_or_hypergraph")]
    pub instance: String,
    pub observed: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub budget: Budget,
    pub checked: u64,
    pub status: SuiteStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
}

pub(crate) struct Failure {
    pub observed: String,
    pub expected: String,
}

/// Runs a suite with the real solvers.
pub fn run_suite(suite: SuiteId, budget: &Budget) -> Result<VerificationReport, VerifierError> {
    run_suite_with(suite, budget, &SolverHooks::default())
}

/// Runs a suite with injected solver hooks. Instance enumeration does not
/// depend on the hooks, and the report does not depend on evaluation order.
pub fn run_suite_with(
    suite: SuiteId,
    budget: &Budget,
    hooks: &SolverHooks,
) -> Result<VerificationReport, VerifierError> {
    suites::validate_budget(suite, budget)?;
    let mut checked = 0u64;
    let mut worst: Option<Counterexample> = None;
    suites::visit_instances(suite, budget, &mut |instance| {
        checked += 1;
        let verdict = suites::check(suite, &instance, hooks)
            .expect("generated instances are well-formed");
        if let Some(failure) = verdict {
            let cx = Counterexample {
                instance: instance.to_line(),
                observed: failure.observed,
                expected: failure.expected,
            };
            let replace = worst.as_ref().is_none_or(|w| cx.instance < w.instance);
            if replace {
                worst = Some(cx);
            }
        }
    })?;
    Ok(VerificationReport {
        suite: String::from(suite.name()),
        budget: budget.clone(),
        checked,
        status: if worst.is_none() { SuiteStatus::Pass } else { SuiteStatus::Fail },
        counterexample: worst,
    })
}

/// The instance strings a suite would check under this budget, in
/// enumeration order. Lets external drivers distribute [`check_instance`]
/// calls over workers.
pub fn suite_instances(suite: SuiteId, budget: &Budget) -> Result<Vec<String>, VerifierError> {
    suites::validate_budget(suite, budget)?;
    let mut out = Vec::new();
    suites::visit_instances(suite, budget, &mut |instance| out.push(instance.to_line()))?;
    Ok(out)
}

/// Checks one instance string; `None` means pass.
pub fn check_instance(
    suite: SuiteId,
    instance: &str,
    hooks: &SolverHooks,
) -> Result<Option<Counterexample>, VerifierError> {
    let parsed = suites::parse_instance(suite, instance)?;
    Ok(suites::check(suite, &parsed, hooks)?.map(|failure| Counterexample {
        instance: String::from(instance),
        observed: failure.observed,
        expected: failure.expected,
    }))
}

/// Re-checks a reported counterexample in isolation with the real solvers;
/// `true` means the property holds on it.
pub fn recheck(suite: SuiteId, instance: &str) -> Result<bool, VerifierError> {
    recheck_with(suite, instance, &SolverHooks::default())
}

pub fn recheck_with(
    suite: SuiteId,
    instance: &str,
    hooks: &SolverHooks,
) -> Result<bool, VerifierError> {
    Ok(check_instance(suite, instance, hooks)?.is_none())
}
