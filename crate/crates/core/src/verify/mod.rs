//! Property checks over graph universes, each producing a JSON-serializable
//! [`CheckResult`], plus the table of family values and the conjecture search.
//!
//! Every check evaluates its statement with the bit-mask predicates and solver,
//! then re-evaluates any violation with the set-based predicates (and the
//! brute-force oracle where the prism is small enough) before reporting it.

mod checks;
mod conjecture;
mod table;
pub mod universe;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::permutation::Permutation;

pub use checks::find_violating_permutation;
pub use conjecture::{search_wcon_fixer_conjecture, ConjectureHit, ConjectureReport};
pub use table::{counterexample_table, RowStatus, Table, TableOptions, TableRow};
pub use universe::UniverseSpec;

/// A concrete instance violating a checked statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub graph6: String,
    pub perm: Option<String>,
    pub sets: BTreeMap<String, Vec<usize>>,
    pub detail: String,
    /// Whether the independent re-evaluation confirmed the violation.
    pub revalidated: bool,
}

impl Counterexample {
    pub fn new(g: &Graph, perm: Option<&Permutation>, detail: impl Into<String>) -> Counterexample {
        Counterexample {
            n: g.n(),
            edges: g.edges().collect(),
            graph6: write_graph6(g),
            perm: perm.map(|p| p.to_cycle_string(None)),
            sets: BTreeMap::new(),
            detail: detail.into(),
            revalidated: false,
        }
    }

    pub fn with_set(
        mut self,
        name: &str,
        members: impl IntoIterator<Item = usize>,
    ) -> Counterexample {
        self.sets
            .insert(name.to_string(), members.into_iter().collect());
        self
    }

    pub fn revalidated(mut self, confirmed: bool) -> Counterexample {
        self.revalidated = confirmed;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub universe: String,
    pub seed: u64,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
    pub stats: BTreeMap<String, u64>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("check results serialize")
    }
}

/// Sweep parameters shared by all checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Orders up to this are enumerated exhaustively.
    pub exhaustive_max: usize,
    /// Orders above `exhaustive_max` up to this are sampled.
    pub random_max: usize,
    /// Random graphs drawn per sampled order.
    pub random_graphs: usize,
    /// Random permutations per graph (the identity is always added).
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            exhaustive_max: 5,
            random_max: 7,
            random_graphs: 12,
            trials: 8,
            seed: 0x5eed,
        }
    }
}

impl VerifyConfig {
    pub(crate) fn universe(&self, n_min: usize) -> UniverseSpec {
        UniverseSpec {
            n_min,
            exhaustive_max: self.exhaustive_max,
            random_max: self.random_max,
            random_graphs: self.random_graphs,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    LemmaPlus1,
    DominationSandwich,
    DiamVSets,
    D1D2Structure,
    ProjectionLemmas,
    IdPrismLemmas,
    Tidg,
    WconIdBoundPartition,
    Prop3,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::LemmaPlus1,
        CheckId::DominationSandwich,
        CheckId::DiamVSets,
        CheckId::D1D2Structure,
        CheckId::ProjectionLemmas,
        CheckId::IdPrismLemmas,
        CheckId::Tidg,
        CheckId::WconIdBoundPartition,
        CheckId::Prop3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::LemmaPlus1 => "lemma-plus1",
            CheckId::DominationSandwich => "domination-sandwich",
            CheckId::DiamVSets => "diam-v-sets",
            CheckId::D1D2Structure => "d1d2-structure",
            CheckId::ProjectionLemmas => "projection-lemmas",
            CheckId::IdPrismLemmas => "id-prism-lemmas",
            CheckId::Tidg => "tidg",
            CheckId::WconIdBoundPartition => "wcon-id-bound-partition",
            CheckId::Prop3 => "prop3",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<CheckId> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

pub fn run_check(id: CheckId, config: &VerifyConfig) -> Result<CheckResult> {
    let start = Instant::now();
    let mut result = match id {
        CheckId::LemmaPlus1 => checks::lemma_plus1(config),
        CheckId::DominationSandwich => checks::domination_sandwich(config),
        CheckId::DiamVSets => checks::diam_v_sets(config),
        CheckId::D1D2Structure => checks::d1d2_structure(config),
        CheckId::ProjectionLemmas => checks::projection_lemmas(config),
        CheckId::IdPrismLemmas => checks::id_prism_lemmas(config),
        CheckId::Tidg => checks::tidg(config),
        CheckId::WconIdBoundPartition => checks::wcon_id_bound_partition(config),
        CheckId::Prop3 => checks::prop3(config),
    }?;
    result.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(result)
}

/// Per-graph outcome of a sweep.
#[derive(Default)]
pub(crate) struct Finding {
    pub stats: BTreeMap<&'static str, u64>,
    pub violation: Option<Counterexample>,
    /// Noteworthy instances that are not failures, first one per kind.
    pub witnesses: BTreeMap<&'static str, Counterexample>,
}

impl Finding {
    pub fn count(&mut self, key: &'static str) {
        self.add(key, 1);
    }

    pub fn add(&mut self, key: &'static str, k: u64) {
        *self.stats.entry(key).or_default() += k;
    }

    pub fn violate(&mut self, c: Counterexample) {
        self.violation.get_or_insert(c);
    }

    pub fn witness(&mut self, kind: &'static str, c: Counterexample) {
        self.witnesses.entry(kind).or_insert(c);
    }
}

/// Aggregated sweep: summed statistics, the first violation and the first witness
/// of each kind, in universe order.
pub(crate) struct Sweep {
    pub stats: BTreeMap<String, u64>,
    pub violation: Option<Counterexample>,
    pub witnesses: BTreeMap<&'static str, Counterexample>,
}

pub(crate) fn sweep<F>(graphs: &[Graph], seed: u64, f: F) -> Result<Sweep>
where
    F: Fn(&Graph, &mut ChaCha8Rng, &mut Finding) -> Result<()> + Sync,
{
    let findings: Vec<Result<Finding>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut rng = universe::graph_rng(seed, i);
            let mut finding = Finding::default();
            f(g, &mut rng, &mut finding)?;
            Ok(finding)
        })
        .collect();
    let mut out = Sweep {
        stats: BTreeMap::new(),
        violation: None,
        witnesses: BTreeMap::new(),
    };
    out.stats.insert("graphs".into(), graphs.len() as u64);
    for finding in findings {
        let finding = finding?;
        for (k, v) in finding.stats {
            *out.stats.entry(k.to_string()).or_default() += v;
        }
        if out.violation.is_none() {
            out.violation = finding.violation;
        }
        for (kind, c) in finding.witnesses {
            out.witnesses.entry(kind).or_insert(c);
        }
    }
    Ok(out)
}

impl Sweep {
    pub fn into_result(
        self,
        id: CheckId,
        universe: String,
        seed: u64,
        mut notes: Vec<String>,
    ) -> CheckResult {
        for (kind, w) in &self.witnesses {
            notes.push(format!(
                "{kind}: graph6 {} perm {} sets {:?}: {}",
                w.graph6,
                w.perm.as_deref().unwrap_or("()"),
                w.sets,
                w.detail
            ));
        }
        CheckResult {
            check_id: id.name().to_string(),
            universe,
            seed,
            pass: self.violation.is_none(),
            counterexample: self.violation,
            stats: self.stats,
            notes,
            elapsed_ms: 0,
        }
    }
}
