//! Undirected simple graphs on dense vertex ids, with neighborhoods,
//! connectivity and breadth-first distances.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest graph accepted anywhere in the crate (an `n × n` distance matrix must fit).
pub const MAX_VERTICES: usize = 4096;

/// An immutable undirected simple graph on the vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either orientation)
    /// collapse; self-loops and out-of-range ids are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges: set })
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// True iff every vertex is reachable from vertex 0 (vacuously true for `n ≤ 1`).
    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.bfs(0).iter().all(|d| d.is_finite())
    }

    /// `S` together with every neighbor of a member of `S`.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set.iter() {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out
    }

    pub fn is_dominating(&self, set: &VertexSet) -> bool {
        self.closed_neighborhood(set).is_full()
    }

    /// Hop distances from `source` by breadth-first layers.
    pub fn bfs(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Distance::Finite(0);
        queue.push_back((source, 0u32));
        while let Some((v, d)) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(d + 1);
                    queue.push_back((w, d + 1));
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut entries = Vec::with_capacity(n * n);
        for s in 0..n {
            entries.extend(self.bfs(s));
        }
        DistanceMatrix { n, entries }
    }

    pub fn diameter(&self) -> Distance {
        self.all_pairs_distances().diameter()
    }

    /// The subgraph induced by `set`, relabelled to `0..|set|`. The returned map
    /// sends each new id to the original vertex.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map = set.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .map(|(u, v)| (index[u], index[v]));
        let sub = Graph::new(map.len(), edges).expect("induced edges are valid");
        (sub, map)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

/// A hop distance, or the marker for an unreachable pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// All-pairs hop distances of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.entries[u * self.n + v]
    }

    /// The distance when finite; `None` for pairs in different components.
    pub fn finite(&self, u: usize, v: usize) -> Option<u32> {
        self.get(u, v).finite()
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance, or `Infinite` when some pair is unreachable.
    pub fn diameter(&self) -> Distance {
        self.entries
            .iter()
            .copied()
            .max()
            .unwrap_or(Distance::Finite(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn star(k: usize) -> Graph {
        Graph::new(k + 1, (1..=k).map(|i| (0, i))).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn construction() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degree_sequence(), vec![1, 2, 1]);

        let k1 = Graph::new(1, []).unwrap();
        assert!(k1.is_connected());
        assert_eq!(k1.diameter(), Distance::Finite(0));

        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 1)]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        let p4b = Graph::new(4, [(1, 0), (2, 1), (3, 2)]).unwrap();
        assert_eq!(p4, p4b);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { id: 3, n: 3 })
        );
        assert!(matches!(
            Graph::empty(MAX_VERTICES + 1),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(path(3).is_connected());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(cycle(7).is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn neighborhoods_and_domination() {
        let c7 = cycle(7);
        assert_eq!(
            c7.closed_neighborhood(&set(7, &[0])).to_vec(),
            vec![0, 1, 6]
        );
        assert!(star(3).is_dominating(&set(4, &[0])));
        assert_eq!(
            path(6).closed_neighborhood(&set(6, &[2, 3])).to_vec(),
            vec![1, 2, 3, 4]
        );

        let p3 = path(3);
        assert!(p3.is_dominating(&set(3, &[1])));
        assert!(!p3.is_dominating(&set(3, &[0])));
        let missing = c7.closed_neighborhood(&set(7, &[0, 3])).complement();
        assert_eq!(missing.to_vec(), vec![5]);
        assert!(!c7.is_dominating(&set(7, &[0, 3])));
    }

    #[test]
    fn distances() {
        let c7 = cycle(7).all_pairs_distances();
        assert_eq!(c7.get(0, 3), Distance::Finite(3));
        assert_eq!(c7.get(0, 4), Distance::Finite(3));
        assert_eq!(star(4).all_pairs_distances().get(1, 3), Distance::Finite(2));
        assert_eq!(path(6).all_pairs_distances().get(0, 5), Distance::Finite(5));

        assert_eq!(cycle(7).diameter(), Distance::Finite(3));
        assert_eq!(path(6).diameter(), Distance::Finite(5));
        for k in 2..6 {
            assert_eq!(star(k).diameter(), Distance::Finite(2));
        }
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.diameter(), Distance::Infinite);
        assert_eq!(split.all_pairs_distances().finite(0, 2), None);
    }

    #[test]
    fn induced_subgraphs() {
        let c7 = cycle(7);
        let (sub, map) = c7.induced_subgraph(&set(7, &[0, 1, 2]));
        assert_eq!(sub, path(3));
        assert_eq!(map, vec![0, 1, 2]);

        let (sub, _) = c7.induced_subgraph(&set(7, &[0, 2, 4]));
        assert_eq!(sub.edge_count(), 0);

        let (sub, map) = path(6).induced_subgraph(&set(6, &[0, 1, 3, 4]));
        assert_eq!(sub, Graph::new(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(map, vec![0, 1, 3, 4]);
    }
}
