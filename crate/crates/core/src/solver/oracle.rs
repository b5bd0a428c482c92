//! Brute-force reference solver: every subset, by cardinality and then
//! lexicographically, checked with the set-based geodesic predicates.

use std::time::Instant;

use itertools::Itertools;

use super::{GammaReport, GammaVariant};
use crate::error::{Error, Result};
use crate::geodesic;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const ORACLE_LIMIT: usize = 16;

pub fn oracle_gamma_variant(g: &Graph, variant: GammaVariant) -> Result<GammaReport> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            n,
            max: ORACLE_LIMIT,
        });
    }
    if variant != GammaVariant::Plain && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = Instant::now();
    let dist = g.all_pairs_distances();
    let accepts = |s: &VertexSet| {
        g.is_dominating(s)
            && match variant {
                GammaVariant::Plain => true,
                GammaVariant::Connected => geodesic::is_connected_set(g, s),
                GammaVariant::WeaklyConvex => geodesic::is_weakly_convex(g, &dist, s),
                GammaVariant::Convex => geodesic::is_convex(&dist, s),
            }
    };
    let mut explored = 0u64;
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            explored += 1;
            let set = VertexSet::from_vertices(n, combo)?;
            if accepts(&set) {
                return Ok(GammaReport {
                    variant,
                    value: size,
                    witness: set,
                    explored,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("the full vertex set satisfies every variant on a connected graph")
}
