//! Exact domination numbers: plain, connected, weakly convex and convex.
//!
//! Plain domination uses iterative-deepening branch and bound. The three connected
//! variants enumerate connected vertex sets by increasing cardinality, each set
//! generated once from its smallest vertex, and test the variant predicate on
//! complete candidates. Witnesses are the lexicographically least optimum.

mod certificate;
mod connected;
mod dominating;
mod oracle;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bits::MaskGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use certificate::{
    build_connected_dom_from_partition, min_connected_dominating_plus_one_certificate,
    PlusOneCertificate,
};
pub use oracle::{oracle_gamma_variant, ORACLE_LIMIT};

/// Hard cap on the order of graphs handed to the solvers.
pub const SOLVER_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GammaVariant {
    Plain,
    Connected,
    WeaklyConvex,
    Convex,
}

impl GammaVariant {
    pub const ALL: [GammaVariant; 4] = [
        GammaVariant::Plain,
        GammaVariant::Connected,
        GammaVariant::WeaklyConvex,
        GammaVariant::Convex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GammaVariant::Plain => "plain",
            GammaVariant::Connected => "connected",
            GammaVariant::WeaklyConvex => "weakly_convex",
            GammaVariant::Convex => "convex",
        }
    }

    /// Whether `set` satisfies this variant's predicate (domination included).
    pub fn accepts(self, mg: &MaskGraph, set: u64) -> bool {
        if !mg.dominates(set) {
            return false;
        }
        match self {
            GammaVariant::Plain => true,
            GammaVariant::Connected => mg.is_connected_set(set),
            GammaVariant::WeaklyConvex => mg.is_weakly_convex(set),
            GammaVariant::Convex => mg.is_convex(set),
        }
    }
}

impl fmt::Display for GammaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GammaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<GammaVariant> {
        match s {
            "dom" | "plain" | "gamma" => Ok(GammaVariant::Plain),
            "connected" | "c" => Ok(GammaVariant::Connected),
            "wcon" | "weakly_convex" | "weakly-convex" => Ok(GammaVariant::WeaklyConvex),
            "con" | "convex" => Ok(GammaVariant::Convex),
            other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
        }
    }
}

/// An exact optimum with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub variant: GammaVariant,
    pub value: usize,
    pub witness: VertexSet,
    pub explored: u64,
    pub elapsed: Duration,
}

impl GammaReport {
    /// The JSON report; `labels` (one per vertex) fills `witness_labels`.
    pub fn to_json(&self, labels: Option<&[String]>) -> serde_json::Value {
        let witness = self.witness.to_vec();
        let witness_labels: Vec<String> = witness
            .iter()
            .map(|&v| match labels {
                Some(l) => l[v].clone(),
                None => v.to_string(),
            })
            .collect();
        serde_json::json!({
            "variant": self.variant,
            "value": self.value,
            "witness": witness,
            "witness_labels": witness_labels,
            "explored": self.explored,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

/// What a budgeted search established before running out of time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconclusive {
    pub variant: GammaVariant,
    /// No valid set has fewer vertices than this.
    pub lower_bound: usize,
    pub explored: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Solved(GammaReport),
    Inconclusive(Inconclusive),
}

impl Outcome {
    pub fn solved(self) -> Option<GammaReport> {
        match self {
            Outcome::Solved(r) => Some(r),
            Outcome::Inconclusive(_) => None,
        }
    }

    pub fn value(&self) -> Option<usize> {
        match self {
            Outcome::Solved(r) => Some(r.value),
            Outcome::Inconclusive(_) => None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Wall-clock limit; `None` runs to completion.
    pub budget: Option<Duration>,
    /// Worker threads for the enumeration; 0 or 1 runs on the calling thread.
    pub threads: usize,
}

impl SolveOptions {
    pub fn with_budget(budget: Duration) -> SolveOptions {
        SolveOptions {
            budget: Some(budget),
            threads: 1,
        }
    }
}

/// Shared stop signal for budgeted searches.
pub(crate) struct Clock {
    start: Instant,
    deadline: Option<Instant>,
    expired: AtomicBool,
}

impl Clock {
    pub(crate) fn new(budget: Option<Duration>) -> Clock {
        let start = Instant::now();
        Clock {
            start,
            deadline: budget.map(|b| start + b),
            expired: AtomicBool::new(false),
        }
    }

    /// Polls the deadline; once expired, stays expired.
    pub(crate) fn expired(&self) -> bool {
        if self.expired.load(Ordering::Relaxed) {
            return true;
        }
        match self.deadline {
            Some(d) if Instant::now() >= d => {
                self.expired.store(true, Ordering::Relaxed);
                true
            }
            _ => false,
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

pub(crate) fn mask_graph(g: &Graph) -> Result<MaskGraph> {
    if g.n() > SOLVER_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            max: SOLVER_LIMIT,
        });
    }
    MaskGraph::new(g)
}

/// Domination number `γ(G)` with its lexicographically least witness.
pub fn gamma(g: &Graph) -> Result<GammaReport> {
    let mg = mask_graph(g)?;
    let clock = Clock::new(None);
    let out = dominating::solve(&mg, &clock);
    Ok(out.expect("unbudgeted search always finishes"))
}

/// Exact optimum for any variant, without a time budget.
pub fn gamma_variant(g: &Graph, variant: GammaVariant) -> Result<GammaReport> {
    match solve(g, variant, &SolveOptions::default())? {
        Outcome::Solved(r) => Ok(r),
        Outcome::Inconclusive(_) => unreachable!("no budget was set"),
    }
}

/// Budgeted exact search.
pub fn solve(g: &Graph, variant: GammaVariant, opts: &SolveOptions) -> Result<Outcome> {
    let mg = mask_graph(g)?;
    solve_masked(&mg, variant, opts)
}

/// Unbudgeted exact search on a prepared bit-mask graph.
pub fn gamma_variant_masked(mg: &MaskGraph, variant: GammaVariant) -> Result<GammaReport> {
    match solve_masked(mg, variant, &SolveOptions::default())? {
        Outcome::Solved(r) => Ok(r),
        Outcome::Inconclusive(_) => unreachable!("no budget was set"),
    }
}

pub(crate) fn solve_masked(
    mg: &MaskGraph,
    variant: GammaVariant,
    opts: &SolveOptions,
) -> Result<Outcome> {
    let clock = Clock::new(opts.budget);
    if variant != GammaVariant::Plain && !mg.is_connected() {
        return Err(Error::Disconnected);
    }
    let plain = match dominating::solve(mg, &clock) {
        Ok(r) => r,
        Err(explored) => {
            return Ok(Outcome::Inconclusive(Inconclusive {
                variant,
                lower_bound: 0,
                explored,
                elapsed: clock.elapsed(),
            }))
        }
    };
    if variant == GammaVariant::Plain {
        return Ok(Outcome::Solved(plain));
    }
    Ok(connected::solve(
        mg,
        variant,
        plain.value,
        plain.explored,
        &clock,
        opts.threads,
    ))
}
