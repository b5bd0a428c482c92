//! Connected-set enumeration for the connected, weakly convex and convex variants.
//!
//! Every connected set is produced exactly once: rooted at its smallest vertex and
//! grown by exclusive-neighborhood extension (each new candidate is adjacent to the
//! newest vertex but to nothing chosen or seen before it).

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{Clock, GammaReport, GammaVariant, Inconclusive, Outcome};
use crate::bits::{bit, lex_less, low_mask, MaskGraph};
use crate::vertex_set::VertexSet;

const POLL_INTERVAL: u64 = 1 << 14;

enum SizeResult {
    Found(u64),
    Empty,
    TimedOut,
}

struct RootSearch<'a> {
    mg: &'a MaskGraph,
    variant: GammaVariant,
    clock: &'a Clock,
    target: u32,
    above_root: u64,
    max_gain: u32,
    explored: u64,
    best: Option<u64>,
    timed_out: bool,
}

impl RootSearch<'_> {
    fn extend(&mut self, set: u64, size: u32, ext: u64, seen: u64) {
        if self.timed_out {
            return;
        }
        self.explored += 1;
        if self.explored.is_multiple_of(POLL_INTERVAL) && self.clock.expired() {
            self.timed_out = true;
            return;
        }
        // `seen` is N[set]: the dominated vertices
        if size == self.target {
            if seen == self.mg.full() && self.accepts(set) {
                match self.best {
                    Some(b) if !lex_less(set, b) => {}
                    _ => self.best = Some(set),
                }
            }
            return;
        }
        let missing = self.mg.n() as u32 - seen.count_ones();
        if missing > (self.target - size) * self.max_gain {
            return;
        }
        let mut ext = ext;
        while ext != 0 {
            let w = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = self.mg.adj(w) & !seen & self.above_root;
            self.extend(
                set | bit(w),
                size + 1,
                ext | exclusive,
                seen | self.mg.closed(w),
            );
        }
    }

    fn accepts(&self, set: u64) -> bool {
        match self.variant {
            GammaVariant::Plain | GammaVariant::Connected => true,
            GammaVariant::WeaklyConvex => self.mg.is_weakly_convex(set),
            GammaVariant::Convex => self.mg.is_convex(set),
        }
    }
}

/// Lexicographically least accepted set of size `target` whose smallest vertex is `root`.
fn search_root(
    mg: &MaskGraph,
    variant: GammaVariant,
    clock: &Clock,
    target: u32,
    root: usize,
    max_gain_above: &[u32],
) -> (SizeResult, u64) {
    let above_root = mg.full() & !low_mask(root + 1);
    let mut s = RootSearch {
        mg,
        variant,
        clock,
        target,
        above_root,
        max_gain: max_gain_above[root],
        explored: 0,
        best: None,
        timed_out: false,
    };
    s.extend(bit(root), 1, mg.adj(root) & above_root, mg.closed(root));
    let result = match (s.timed_out, s.best) {
        (true, _) => SizeResult::TimedOut,
        (false, Some(b)) => SizeResult::Found(b),
        (false, None) => SizeResult::Empty,
    };
    (result, s.explored)
}

fn search_size(
    mg: &MaskGraph,
    variant: GammaVariant,
    clock: &Clock,
    target: u32,
    threads: usize,
    max_gain_above: &[u32],
) -> (SizeResult, u64) {
    let n = mg.n();
    if threads <= 1 {
        let mut explored = 0;
        for root in 0..n {
            let (res, e) = search_root(mg, variant, clock, target, root, max_gain_above);
            explored += e;
            if !matches!(res, SizeResult::Empty) {
                return (res, explored);
            }
        }
        return (SizeResult::Empty, explored);
    }

    // roots are independent; the answer is the smallest root with a hit, so roots
    // above a known hit can be skipped without changing the result
    let first_hit = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let per_root: Vec<(SizeResult, u64)> = pool.install(|| {
        (0..n)
            .into_par_iter()
            .map(|root| {
                if root > first_hit.load(Ordering::Relaxed) {
                    return (SizeResult::Empty, 0);
                }
                let out = search_root(mg, variant, clock, target, root, max_gain_above);
                if matches!(out.0, SizeResult::Found(_)) {
                    first_hit.fetch_min(root, Ordering::Relaxed);
                }
                out
            })
            .collect()
    });
    let explored = per_root.iter().map(|(_, e)| e).sum();
    for (res, _) in per_root {
        if !matches!(res, SizeResult::Empty) {
            return (res, explored);
        }
    }
    (SizeResult::Empty, explored)
}

pub(super) fn solve(
    mg: &MaskGraph,
    variant: GammaVariant,
    lower: usize,
    explored_before: u64,
    clock: &Clock,
    threads: usize,
) -> Outcome {
    let n = mg.n();
    // largest closed neighborhood among vertices above each root
    let mut max_gain_above = vec![0u32; n];
    let mut running = 0;
    for v in (0..n).rev() {
        max_gain_above[v] = running;
        running = running.max(mg.closed(v).count_ones());
    }

    let mut explored = explored_before;
    let finish = |size: usize, set: u64, explored: u64| {
        Outcome::Solved(GammaReport {
            variant,
            value: size,
            witness: VertexSet::from_mask(n, set),
            explored,
            elapsed: clock.elapsed(),
        })
    };
    for size in lower.max(1)..=n {
        if size == n {
            return finish(n, mg.full(), explored);
        }
        if clock.expired() {
            return Outcome::Inconclusive(Inconclusive {
                variant,
                lower_bound: size,
                explored,
                elapsed: clock.elapsed(),
            });
        }
        let (res, e) = search_size(mg, variant, clock, size as u32, threads, &max_gain_above);
        explored += e;
        match res {
            SizeResult::Found(set) => return finish(size, set, explored),
            SizeResult::Empty => {}
            SizeResult::TimedOut => {
                return Outcome::Inconclusive(Inconclusive {
                    variant,
                    lower_bound: size,
                    explored,
                    elapsed: clock.elapsed(),
                })
            }
        }
    }
    // n = 0
    finish(0, 0, explored)
}
