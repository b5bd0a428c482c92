//! Iterative-deepening branch and bound for the domination number.

use super::{Clock, GammaReport, GammaVariant};
use crate::bits::{bit, low_mask, ones, MaskGraph};
use crate::vertex_set::VertexSet;

const POLL_INTERVAL: u64 = 1 << 12;

struct Search<'a> {
    mg: &'a MaskGraph,
    clock: &'a Clock,
    max_closed: u32,
    explored: u64,
    timed_out: bool,
}

impl Search<'_> {
    /// Given the vertices `dominated` by the current choice, is there an extension `X` with `|X| ≤ budget` and `X ∩ forbidden = ∅`?
    fn feasible(&mut self, dominated: u64, forbidden: u64, budget: u32) -> bool {
        let full = self.mg.full();
        if dominated == full {
            return true;
        }
        if budget == 0 || self.timed_out {
            return false;
        }
        self.explored += 1;
        if self.explored.is_multiple_of(POLL_INTERVAL) && self.clock.expired() {
            self.timed_out = true;
            return false;
        }
        let missing = full & !dominated;
        if missing.count_ones() > budget * self.max_closed {
            return false;
        }
        // branch on the undominated vertex with the fewest usable dominators
        let mut pivot_candidates = 0;
        let mut fewest = u32::MAX;
        for w in ones(missing) {
            let cands = self.mg.closed(w) & !forbidden;
            let c = cands.count_ones();
            if c < fewest {
                fewest = c;
                pivot_candidates = cands;
                if c <= 1 {
                    break;
                }
            }
        }
        let mut forbidden = forbidden;
        for x in ones(pivot_candidates) {
            if self.feasible(dominated | self.mg.closed(x), forbidden, budget - 1) {
                return true;
            }
            // every solution through x has been ruled out
            forbidden |= bit(x);
        }
        false
    }

    fn feasible_with(&mut self, prefix: u64, forbidden: u64, size: u32) -> bool {
        let used = prefix.count_ones();
        if used > size {
            return false;
        }
        let dominated = self.mg.closed_neighborhood(prefix);
        self.feasible(dominated, forbidden | prefix, size - used)
    }
}

/// Exact `γ` with the lexicographically least minimum dominating set.
/// On timeout returns the number of explored nodes.
pub(super) fn solve(mg: &MaskGraph, clock: &Clock) -> Result<GammaReport, u64> {
    let n = mg.n();
    let mut s = Search {
        mg,
        clock,
        max_closed: (0..n).map(|v| mg.closed(v).count_ones()).max().unwrap_or(1),
        explored: 0,
        timed_out: clock.expired(),
    };
    if s.timed_out {
        return Err(0);
    }
    let mut size = 0u32;
    while !s.feasible_with(0, 0, size) {
        if s.timed_out {
            return Err(s.explored);
        }
        size += 1;
    }

    // lexicographically least set of that size: extend a prefix one vertex at a time
    let mut prefix = 0u64;
    let mut next = 0usize;
    while prefix.count_ones() < size {
        let mut placed = None;
        for x in next..n {
            let forbidden = low_mask(x) & !prefix;
            if s.feasible_with(prefix | bit(x), forbidden, size) {
                placed = Some(x);
                break;
            }
            if s.timed_out {
                return Err(s.explored);
            }
        }
        let x = placed.expect("a minimum dominating set exists by construction");
        prefix |= bit(x);
        next = x + 1;
    }
    debug_assert!(mg.dominates(prefix));
    Ok(GammaReport {
        variant: GammaVariant::Plain,
        value: size as usize,
        witness: VertexSet::from_mask(n, prefix),
        explored: s.explored,
        elapsed: clock.elapsed(),
    })
}
