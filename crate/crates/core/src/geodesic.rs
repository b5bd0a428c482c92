//! Geodesic intervals and the connected / weakly convex / convex set predicates.
//!
//! A set is *weakly convex* when every pair of its members is joined by at least one
//! shortest path lying inside the set, and *convex* when every shortest path between
//! members lies inside it. Empty sets and singletons satisfy all three predicates.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Distance, DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;

/// Longest geodesic `enumerate_geodesics` will walk.
pub const MAX_GEODESIC_LENGTH: u32 = 15;
/// Most geodesics `enumerate_geodesics` will return.
pub const MAX_GEODESIC_COUNT: usize = 1_000_000;

/// The vertices on at least one shortest `u`–`v` path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub u: usize,
    pub v: usize,
    pub members: VertexSet,
}

pub fn interval(dist: &DistanceMatrix, u: usize, v: usize) -> Result<Interval> {
    let duv = dist.finite(u, v).ok_or(Error::Unreachable(u, v))?;
    let members = (0..dist.n()).filter(|&w| match (dist.finite(u, w), dist.finite(w, v)) {
        (Some(a), Some(b)) => a + b == duv,
        _ => false,
    });
    Ok(Interval {
        u,
        v,
        members: VertexSet::from_vertices(dist.n(), members)?,
    })
}

/// Hop distances from `source` inside the subgraph induced by `set`.
fn bfs_within(g: &Graph, set: &VertexSet, source: usize) -> Vec<Distance> {
    let mut dist = vec![Distance::Infinite; g.n()];
    dist[source] = Distance::Finite(0);
    let mut queue = VecDeque::from([(source, 0u32)]);
    while let Some((x, d)) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if set.contains(y) && dist[y] == Distance::Infinite {
                dist[y] = Distance::Finite(d + 1);
                queue.push_back((y, d + 1));
            }
        }
    }
    dist
}

pub fn is_connected_set(g: &Graph, set: &VertexSet) -> bool {
    match set.first() {
        None => true,
        Some(root) => {
            let dist = bfs_within(g, set, root);
            set.iter().all(|v| dist[v].is_finite())
        }
    }
}

/// Distance-preservation criterion: `d_{G[S]}(u,v) = d_G(u,v)` for all `u, v ∈ S`.
pub fn is_weakly_convex(g: &Graph, dist: &DistanceMatrix, set: &VertexSet) -> bool {
    set.iter().all(|u| {
        let inner = bfs_within(g, set, u);
        set.iter().all(|v| inner[v] == dist.get(u, v))
    })
}

/// Interval criterion: no vertex outside `S` lies on a shortest path between members.
pub fn is_convex(dist: &DistanceMatrix, set: &VertexSet) -> bool {
    let members = set.to_vec();
    let outside = set.complement().to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let Some(duv) = dist.finite(u, v) else {
                continue;
            };
            for &w in &outside {
                if let (Some(a), Some(b)) = (dist.finite(u, w), dist.finite(w, v)) {
                    if a + b == duv {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_connected_dominating(g: &Graph, set: &VertexSet) -> bool {
    g.is_dominating(set) && is_connected_set(g, set)
}

pub fn is_weakly_convex_dominating(g: &Graph, dist: &DistanceMatrix, set: &VertexSet) -> bool {
    g.is_dominating(set) && is_weakly_convex(g, dist, set)
}

pub fn is_convex_dominating(g: &Graph, dist: &DistanceMatrix, set: &VertexSet) -> bool {
    g.is_dominating(set) && is_convex(dist, set)
}

/// Every shortest `u`–`v` path, as vertex sequences starting at `u`.
///
/// Guarded: the distance must be at most [`MAX_GEODESIC_LENGTH`] and the number
/// of paths at most [`MAX_GEODESIC_COUNT`].
pub fn enumerate_geodesics(g: &Graph, u: usize, v: usize) -> Result<Vec<Vec<usize>>> {
    let to_v = g.bfs(v);
    let len = to_v[u].finite().ok_or(Error::Unreachable(u, v))?;
    if len > MAX_GEODESIC_LENGTH {
        return Err(Error::GuardExceeded(format!(
            "distance {len} exceeds {MAX_GEODESIC_LENGTH}"
        )));
    }
    let mut out = Vec::new();
    let mut path = vec![u];
    extend_geodesics(g, &to_v, &mut path, &mut out)?;
    Ok(out)
}

fn extend_geodesics(
    g: &Graph,
    to_v: &[Distance],
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    let x = *path.last().expect("nonempty");
    let dx = to_v[x].finite().expect("on a geodesic");
    if dx == 0 {
        if out.len() == MAX_GEODESIC_COUNT {
            return Err(Error::GuardExceeded(format!(
                "more than {MAX_GEODESIC_COUNT} geodesics"
            )));
        }
        out.push(path.clone());
        return Ok(());
    }
    for &y in g.neighbors(x) {
        if to_v[y] == Distance::Finite(dx - 1) {
            path.push(y);
            extend_geodesics(g, to_v, path, out)?;
            path.pop();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::Permutation;
    use crate::prism::PrismGraph;

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
    fn intervals() {
        let c7 = cycle(7).all_pairs_distances();
        assert_eq!(
            interval(&c7, 0, 3).unwrap().members.to_vec(),
            vec![0, 1, 2, 3]
        );
        assert_eq!(interval(&c7, 4, 4).unwrap().members.to_vec(), vec![4]);
        let c4 = cycle(4).all_pairs_distances();
        assert!(interval(&c4, 0, 2).unwrap().members.is_full());
        let split = Graph::new(4, [(0, 1), (2, 3)])
            .unwrap()
            .all_pairs_distances();
        assert_eq!(interval(&split, 0, 3), Err(Error::Unreachable(0, 3)));
    }

    #[test]
    fn connected_sets() {
        let p6 = path(6);
        assert!(is_connected_set(&p6, &set(6, &[0, 1, 2])));
        assert!(!is_connected_set(&p6, &set(6, &[0, 2])));
        assert!(is_connected_set(&p6, &VertexSet::empty(6)));

        let pi = Permutation::parse(7, "(1 3)(4 6)").unwrap();
        let prism = PrismGraph::build(&cycle(7), &pi).unwrap();
        let base = set(7, &[0, 1, 6]);
        let w = prism.lift_set(&base, &base);
        assert!(is_connected_set(prism.graph(), &w));
    }

    #[test]
    fn weak_convexity() {
        let c7 = cycle(7);
        let d = c7.all_pairs_distances();
        assert!(is_weakly_convex(&c7, &d, &c7.vertices()));
        assert!(!is_weakly_convex(&c7, &d, &set(7, &[0, 1, 2, 3, 4, 5])));

        // P4 = 1-2-3-4 with π = (12)(34); D = {1', 2, 3, 4'} in 0-based ids.
        let p4 = path(4);
        let pi = Permutation::parse(4, "(0 1)(2 3)").unwrap();
        let prism = PrismGraph::build(&p4, &pi).unwrap();
        let dm = prism.graph().all_pairs_distances();
        let d = prism.lift_set(&set(4, &[1, 2]), &set(4, &[0, 3]));
        assert!(is_weakly_convex_dominating(prism.graph(), &dm, &d));
        assert!(!is_weakly_convex(
            &p4,
            &p4.all_pairs_distances(),
            &set(4, &[0, 3])
        ));
    }

    #[test]
    fn convexity() {
        let c4 = cycle(4);
        let d = c4.all_pairs_distances();
        assert!(is_convex(&d, &c4.vertices()));
        assert!(!is_convex(&d, &set(4, &[0, 2])));

        let p3 = path(3);
        let d3 = p3.all_pairs_distances();
        assert!(is_convex(&d3, &set(3, &[1])));
        assert!(is_convex_dominating(&p3, &d3, &set(3, &[1])));
        let prism = PrismGraph::build(&p3, &Permutation::parse(3, "(0 1)").unwrap()).unwrap();
        assert!(!prism.graph().is_dominating(&set(6, &[1])));
    }

    #[test]
    fn dominating_combinations() {
        let pi = Permutation::parse(7, "(1 3)(4 6)").unwrap();
        let prism = PrismGraph::build(&cycle(7), &pi).unwrap();
        let dm = prism.graph().all_pairs_distances();
        let base = set(7, &[0, 1, 6]);
        let w = prism.lift_set(&base, &base);
        assert!(is_weakly_convex_dominating(prism.graph(), &dm, &w));

        let p6 = path(6);
        let d6 = p6.all_pairs_distances();
        assert!(is_weakly_convex_dominating(
            &p6,
            &d6,
            &set(6, &[1, 2, 3, 4])
        ));
        assert!(is_connected_dominating(&p6, &set(6, &[1, 2, 3, 4])));
        assert!(!is_connected_dominating(&p6, &set(6, &[1, 4])));
    }

    #[test]
    fn geodesic_enumeration() {
        assert_eq!(
            enumerate_geodesics(&cycle(7), 0, 3).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
        assert_eq!(enumerate_geodesics(&cycle(4), 0, 2).unwrap().len(), 2);
        assert_eq!(
            enumerate_geodesics(&star(3), 1, 3).unwrap(),
            vec![vec![1, 0, 3]]
        );
        assert_eq!(enumerate_geodesics(&path(3), 1, 1).unwrap(), vec![vec![1]]);
        assert!(matches!(
            enumerate_geodesics(&path(17), 0, 16),
            Err(Error::GuardExceeded(_))
        ));
    }
}
