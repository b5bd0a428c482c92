//! Search for a prism that lowers the weakly convex domination number of a
//! diameter-2 graph whose only weakly convex dominating set is the whole vertex set.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::MaskGraph;
use crate::error::{Error, Result};
use crate::geodesic;
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::permutation::Permutation;
use crate::prism::PrismGraph;
use crate::solver::{gamma_variant_masked, oracle_gamma_variant, GammaVariant, ORACLE_LIMIT};
use crate::vertex_set::VertexSet;

use super::universe::{connected_graphs_iter, random_connected_graph};

const SEED: u64 = 0x5eed;
/// Orders up to this have every labeled graph and every permutation examined.
const EXHAUSTIVE_MAX: usize = 7;
const MAX_N: usize = 10;
/// Sampling sizes beyond the exhaustive range (used when no budget is given).
const SAMPLED_GRAPHS: usize = 200;
const SAMPLED_PERMS: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureHit {
    pub graph6: String,
    pub edges: Vec<(usize, usize)>,
    pub perm: String,
    pub base_value: usize,
    pub prism_value: usize,
    pub witness: Vec<usize>,
    /// Confirmed by the geodesic predicates and, where small enough, the oracle.
    pub revalidated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub seed: u64,
    pub exhaustive: bool,
    /// False when the budget ran out before the sweep finished.
    pub complete: bool,
    pub graphs_examined: u64,
    pub qualifying_graphs: u64,
    pub permutations_tried: u64,
    pub hits: Vec<ConjectureHit>,
    pub elapsed_ms: u64,
}

impl ConjectureReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn qualifies(g: &Graph) -> Result<bool> {
    let mg = MaskGraph::new(g)?;
    if mg.diameter() != Some(2) {
        return Ok(false);
    }
    Ok(gamma_variant_masked(&mg, GammaVariant::WeaklyConvex)?.value == g.n())
}

fn revalidate(g: &Graph, perm: &Permutation, witness: &VertexSet, value: usize) -> Result<bool> {
    let prism = PrismGraph::build(g, perm)?;
    let pg = prism.graph();
    let dist = pg.all_pairs_distances();
    let mut ok =
        geodesic::is_weakly_convex_dominating(pg, &dist, witness) && witness.len() == value;
    if pg.n() <= ORACLE_LIMIT {
        ok &= oracle_gamma_variant(pg, GammaVariant::WeaklyConvex)?.value == value;
    }
    Ok(ok)
}

/// Sweeps diameter-2 graphs of order `n` with `γ_wcon(G) = n` and reports every
/// permutation π with `γ_wcon(πG) < n`. Orders up to 7 are exhaustive (all labeled
/// graphs, all permutations); larger orders are sampled. Stops early at the budget.
pub fn search_wcon_fixer_conjecture(
    n: usize,
    budget: Option<Duration>,
) -> Result<ConjectureReport> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "conjecture search needs 2 <= n <= {MAX_N}, got {n}"
        )));
    }
    let start = Instant::now();
    let out_of_time = || budget.is_some_and(|b| start.elapsed() >= b);
    let exhaustive = n <= EXHAUSTIVE_MAX;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    let mut report = ConjectureReport {
        n,
        seed: SEED,
        exhaustive,
        complete: true,
        graphs_examined: 0,
        qualifying_graphs: 0,
        permutations_tried: 0,
        hits: Vec::new(),
        elapsed_ms: 0,
    };

    let graphs: Box<dyn Iterator<Item = Graph>> = if exhaustive {
        Box::new(connected_graphs_iter(n))
    } else {
        let sampled: Vec<Graph> = (0..SAMPLED_GRAPHS)
            .map(|_| random_connected_graph(n, &mut rng))
            .collect();
        Box::new(sampled.into_iter())
    };
    let perms: Vec<Permutation> = if exhaustive {
        (0..n)
            .permutations(n)
            .map(|image| Permutation::from_image(image).expect("valid image"))
            .collect()
    } else {
        (0..SAMPLED_PERMS)
            .map(|_| Permutation::random(n, &mut rng))
            .collect()
    };

    for g in graphs {
        if out_of_time() {
            report.complete = false;
            break;
        }
        report.graphs_examined += 1;
        if !qualifies(&g)? {
            continue;
        }
        report.qualifying_graphs += 1;
        let found: Vec<Result<Option<(usize, usize, VertexSet)>>> = perms
            .par_iter()
            .enumerate()
            .map(|(i, perm)| {
                if out_of_time() {
                    return Ok(None);
                }
                let prism = PrismGraph::build(&g, perm)?;
                let mg = MaskGraph::new(prism.graph())?;
                let r = gamma_variant_masked(&mg, GammaVariant::WeaklyConvex)?;
                Ok((r.value < n).then_some((i, r.value, r.witness)))
            })
            .collect();
        report.permutations_tried += perms.len() as u64;
        for f in found {
            if let Some((i, value, witness)) = f? {
                let revalidated = revalidate(&g, &perms[i], &witness, value)?;
                report.hits.push(ConjectureHit {
                    graph6: write_graph6(&g),
                    edges: g.edges().collect(),
                    perm: perms[i].to_cycle_string(None),
                    base_value: n,
                    prism_value: value,
                    witness: witness.to_vec(),
                    revalidated,
                });
            }
        }
    }
    if out_of_time() {
        report.complete = false;
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four_is_exhaustive() {
        let r = search_wcon_fixer_conjecture(4, None).unwrap();
        assert!(r.exhaustive && r.complete);
        assert_eq!(r.graphs_examined, 38);
        assert_eq!(r.permutations_tried, 24 * r.qualifying_graphs);
        assert!(r.hits.iter().all(|h| h.revalidated));
    }

    #[test]
    fn zero_budget_is_partial() {
        let r = search_wcon_fixer_conjecture(5, Some(Duration::ZERO)).unwrap();
        assert!(!r.complete);
        assert_eq!(r.graphs_examined, 0);
    }

    #[test]
    fn order_bounds() {
        assert!(search_wcon_fixer_conjecture(11, None).is_err());
        assert!(search_wcon_fixer_conjecture(1, None).is_err());
    }
}
