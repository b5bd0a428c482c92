//! Bit-mask view of a graph with at most 64 vertices, used by the solvers and
//! the exhaustive sweeps. Sets are `u64` masks; bit `v` stands for vertex `v`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MASK_LIMIT: usize = 64;

/// Bit of vertex `v`.
#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask of the vertices `0..n`.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the members of a mask in ascending order.
pub fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// For two sets of equal cardinality: true iff `a` precedes `b` when both are
/// listed in ascending order and compared lexicographically.
#[inline]
pub fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & diff & diff.wrapping_neg() != 0
}

const UNREACHABLE: u8 = u8::MAX;

#[derive(Clone, Debug)]
pub struct MaskGraph {
    n: usize,
    full: u64,
    adj: Vec<u64>,
    closed: Vec<u64>,
    dist: Vec<u8>,
    /// `spheres[u][d]`: vertices at distance exactly `d` from `u`.
    spheres: Vec<Vec<u64>>,
    /// `intervals[u * n + v]`: vertices on some shortest `u`–`v` path.
    intervals: Vec<u64>,
    connected: bool,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Result<MaskGraph> {
        let n = g.n();
        if n > MASK_LIMIT {
            return Err(Error::TooLarge { n, max: MASK_LIMIT });
        }
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
            .collect();
        let closed: Vec<u64> = (0..n).map(|v| adj[v] | bit(v)).collect();

        let mut dist = vec![UNREACHABLE; n * n];
        let mut spheres = Vec::with_capacity(n);
        let mut connected = true;
        for u in 0..n {
            let mut layers = vec![bit(u)];
            let mut seen = bit(u);
            let mut frontier = bit(u);
            dist[u * n + u] = 0;
            while frontier != 0 {
                let next = ones(frontier).fold(0, |m, w| m | adj[w]) & !seen;
                if next == 0 {
                    break;
                }
                let d = layers.len() as u8;
                for w in ones(next) {
                    dist[u * n + w] = d;
                }
                layers.push(next);
                seen |= next;
                frontier = next;
            }
            if seen != low_mask(n) {
                connected = false;
            }
            spheres.push(layers);
        }

        let mut intervals = vec![0u64; n * n];
        for u in 0..n {
            for v in 0..n {
                let duv = dist[u * n + v];
                if duv == UNREACHABLE {
                    continue;
                }
                let mut m = 0;
                for w in 0..n {
                    let (a, b) = (dist[u * n + w], dist[w * n + v]);
                    if a != UNREACHABLE && b != UNREACHABLE && a as u32 + b as u32 == duv as u32 {
                        m |= bit(w);
                    }
                }
                intervals[u * n + v] = m;
            }
        }

        Ok(MaskGraph {
            n,
            full: low_mask(n),
            adj,
            closed,
            dist,
            spheres,
            intervals,
            connected,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u64 {
        self.full
    }

    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn closed(&self, v: usize) -> u64 {
        self.closed[v]
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn dist(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as u32),
        }
    }

    pub fn interval(&self, u: usize, v: usize) -> u64 {
        self.intervals[u * self.n + v]
    }

    pub fn diameter(&self) -> Option<u32> {
        if !self.connected {
            return None;
        }
        Some(
            self.spheres
                .iter()
                .map(|l| l.len() as u32 - 1)
                .max()
                .unwrap_or(0),
        )
    }

    pub fn closed_neighborhood(&self, set: u64) -> u64 {
        ones(set).fold(set, |m, v| m | self.adj[v])
    }

    pub fn dominates(&self, set: u64) -> bool {
        self.closed_neighborhood(set) == self.full
    }

    /// Induced connectivity of `set`; the empty set counts as connected.
    pub fn is_connected_set(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let start = set & set.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let next = ones(frontier).fold(0, |m, w| m | self.adj[w]) & set & !seen;
            seen |= next;
            frontier = next;
        }
        seen == set
    }

    /// Induced distances within `set` equal the graph distances.
    pub fn is_weakly_convex(&self, set: u64) -> bool {
        for u in ones(set) {
            let layers = &self.spheres[u];
            let mut seen = bit(u);
            let mut frontier = bit(u);
            let mut d = 0;
            while frontier != 0 {
                d += 1;
                let next = ones(frontier).fold(0, |m, w| m | self.adj[w]) & set & !seen;
                if next == 0 {
                    break;
                }
                if d >= layers.len() || next & !layers[d] != 0 {
                    return false;
                }
                seen |= next;
                frontier = next;
            }
            if seen != set {
                // members unreachable inside the set must also be unreachable in G
                if ones(set & !seen).any(|v| self.dist(u, v).is_some()) {
                    return false;
                }
            }
        }
        true
    }

    /// Every shortest path between two members stays inside `set`.
    pub fn is_convex(&self, set: u64) -> bool {
        let outside = !set;
        for u in ones(set) {
            let row = &self.intervals[u * self.n..(u + 1) * self.n];
            let later = set & !low_mask(u + 1);
            for v in ones(later) {
                if row[v] & outside != 0 {
                    return false;
                }
            }
        }
        true
    }
}
