//! Graph universes swept by the checks: every connected labeled graph up to a small
//! order, plus seeded uniform random connected graphs beyond it.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::permutation::Permutation;

/// Stream id reserved for drawing the random graphs (per-graph streams use indices).
const GRAPH_STREAM: u64 = u64::MAX;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).expect("pairs are valid edges")
}

/// All connected graphs on vertex set `0..n`, in edge-mask order.
/// `n` must be at most 8 (28 possible edges).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_iter(n).collect()
}

/// Lazy form of [`connected_graphs`].
pub fn connected_graphs_iter(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to n <= 8");
    let pairs = pairs(n);
    let min_edges = n.saturating_sub(1) as u32;
    (0..1u64 << pairs.len())
        .filter(move |m| m.count_ones() >= min_edges)
        .map(move |m| from_mask(n, &pairs, m))
        .filter(Graph::is_connected)
}

/// A uniform random connected graph on `0..n` (uniform edge subset, rejecting
/// disconnected draws).
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let pairs = pairs(n);
    loop {
        let edges: Vec<_> = pairs
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::new(n, edges).expect("pairs are valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Which graphs a check sweeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniverseSpec {
    /// Smallest order considered.
    pub n_min: usize,
    /// Orders `n_min..=exhaustive_max` are enumerated exhaustively.
    pub exhaustive_max: usize,
    /// Orders `exhaustive_max+1..=random_max` are sampled.
    pub random_max: usize,
    /// Samples per sampled order.
    pub random_graphs: usize,
    pub seed: u64,
}

impl UniverseSpec {
    pub fn build(&self) -> Vec<Graph> {
        let mut out = Vec::new();
        for n in self.n_min..=self.exhaustive_max {
            out.extend(connected_graphs(n));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(GRAPH_STREAM);
        for n in (self.exhaustive_max + 1).max(self.n_min)..=self.random_max {
            for _ in 0..self.random_graphs {
                out.push(random_connected_graph(n, &mut rng));
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.exhaustive_max >= self.n_min {
            parts.push(format!(
                "all connected labeled graphs n={}..={}",
                self.n_min, self.exhaustive_max
            ));
        }
        let lo = (self.exhaustive_max + 1).max(self.n_min);
        if self.random_max >= lo && self.random_graphs > 0 {
            parts.push(format!(
                "{} seeded random connected graphs per n={}..={}",
                self.random_graphs, lo, self.random_max
            ));
        }
        parts.join("; ")
    }
}

/// Deterministic generator for the `index`-th graph of a sweep.
pub fn graph_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// The identity followed by `trials` random permutations.
pub fn permutations<R: Rng + ?Sized>(n: usize, trials: usize, rng: &mut R) -> Vec<Permutation> {
    std::iter::once(Permutation::identity(n))
        .chain((0..trials).map(|_| Permutation::random(n, rng)))
        .collect()
}
