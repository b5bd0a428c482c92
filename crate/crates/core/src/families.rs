//! Generators for the graph families used as examples and counterexamples,
//! each with its vertex labels and (where one is attached) a canonical permutation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labels::{Label, LabelMap};
use crate::permutation::Permutation;
use crate::prism::PrismGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: LabelMap,
    pub canonical_perm: Option<Permutation>,
}

impl LabeledGraph {
    fn new(labels: Vec<Label>, edges: Vec<(Label, Label)>, perm: Option<&str>) -> LabeledGraph {
        let labels = LabelMap::new(labels).expect("generator labels are distinct");
        let id = |l: &Label| labels.id(l).unwrap_or_else(|| panic!("unknown label {l}"));
        let edges: Vec<_> = edges.iter().map(|(a, b)| (id(a), id(b))).collect();
        let graph = Graph::new(labels.len(), edges).expect("generator edges are valid");
        let canonical_perm =
            perm.map(|p| Permutation::parse_labeled(&labels, p).expect("generator permutation"));
        LabeledGraph {
            graph,
            labels,
            canonical_perm,
        }
    }

    pub fn id(&self, label: &Label) -> Option<usize> {
        self.labels.id(label)
    }

    /// Parses cycle notation written on this graph's labels.
    pub fn parse_perm(&self, text: &str) -> Result<Permutation> {
        Permutation::parse_labeled(&self.labels, text)
    }

    /// The prism under the canonical permutation.
    pub fn canonical_prism(&self) -> Result<PrismGraph> {
        let perm = self
            .canonical_perm
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("family has no canonical permutation".into()))?;
        PrismGraph::build(&self.graph, perm)
    }

    pub fn label_strings(&self) -> Vec<String> {
        self.labels
            .labels()
            .iter()
            .map(ToString::to_string)
            .collect()
    }
}

fn int(v: usize) -> Label {
    Label::Int(v as i64)
}

fn pair(a: usize, b: usize) -> Label {
    Label::Pair(a as i64, b as i64)
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(what.to_string()))
    }
}

/// `P_n` on `0..n`. `P₃`, `P₄` and `P₆` carry the permutations `(0 1)`,
/// `(0 1)(2 3)` and `(1 4)(2 3)`.
pub fn path(n: usize) -> Result<LabeledGraph> {
    require(n >= 1, "path needs n >= 1")?;
    let perm = match n {
        3 => Some("(0 1)"),
        4 => Some("(0 1)(2 3)"),
        6 => Some("(1 4)(2 3)"),
        _ => None,
    };
    Ok(LabeledGraph::new(
        (0..n).map(int).collect(),
        (1..n).map(|i| (int(i - 1), int(i))).collect(),
        perm,
    ))
}

/// `C_n` on `0..n`. `C₇` carries `(1 3)(4 6)`.
pub fn cycle(n: usize) -> Result<LabeledGraph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let perm = (n == 7).then_some("(1 3)(4 6)");
    Ok(LabeledGraph::new(
        (0..n).map(int).collect(),
        (0..n).map(|i| (int(i), int((i + 1) % n))).collect(),
        perm,
    ))
}

/// `K_{1,k}` with center `0` and leaves `1..=k`, carrying `(0 1)`.
pub fn star(k: usize) -> Result<LabeledGraph> {
    require(k >= 1, "star needs k >= 1")?;
    Ok(LabeledGraph::new(
        (0..=k).map(int).collect(),
        (1..=k).map(|i| (int(0), int(i))).collect(),
        Some("(0 1)"),
    ))
}

pub fn complete(n: usize) -> Result<LabeledGraph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (int(u), int(v))))
        .collect();
    Ok(LabeledGraph::new((0..n).map(int).collect(), edges, None))
}

fn per_copy_cycles(k: usize, cycles: &[&[usize]]) -> String {
    let mut s = String::new();
    for i in 1..=k {
        for cycle in cycles {
            s.push('(');
            let parts: Vec<String> = cycle.iter().map(|&j| pair(i, j).to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push(')');
        }
    }
    s
}

/// `k` copies of `C₇` glued at vertex 0: hub `(0,0)` and arcs `(i,1)…(i,6)`.
/// Permutation `(i,j) ↦ (i,π(j))` with `π = (1 3)(4 6)`.
pub fn cycle_gadget(k: usize) -> Result<LabeledGraph> {
    require(k >= 1, "cycle gadget needs k >= 1")?;
    let hub = pair(0, 0);
    let mut labels = vec![hub.clone()];
    let mut edges = Vec::new();
    for i in 1..=k {
        labels.extend((1..=6).map(|j| pair(i, j)));
        edges.push((hub.clone(), pair(i, 1)));
        edges.extend((1..6).map(|j| (pair(i, j), pair(i, j + 1))));
        edges.push((pair(i, 6), hub.clone()));
    }
    let perm = per_copy_cycles(k, &[&[1, 3], &[4, 6]]);
    Ok(LabeledGraph::new(labels, edges, Some(&perm)))
}

/// `k` copies of `P₆` glued at vertex 0: hub `(0,0)` and pendant paths
/// `(i,1)…(i,5)`. Permutation `(i,j) ↦ (i,σ(j))` with `σ = (1 4)(2 3)`.
pub fn path_gadget(k: usize) -> Result<LabeledGraph> {
    require(k >= 1, "path gadget needs k >= 1")?;
    let hub = pair(0, 0);
    let mut labels = vec![hub.clone()];
    let mut edges = Vec::new();
    for i in 1..=k {
        labels.extend((1..=5).map(|j| pair(i, j)));
        edges.push((hub.clone(), pair(i, 1)));
        edges.extend((1..5).map(|j| (pair(i, j), pair(i, j + 1))));
    }
    let perm = per_copy_cycles(k, &[&[1, 4], &[2, 3]]);
    Ok(LabeledGraph::new(labels, edges, Some(&perm)))
}

/// The tree `T_{k,l}`: center `0`, middles `1..=k`, and leaves `(i,1)…(i,l)` under
/// each middle `i`. Permutation `(1 2 … k)`.
pub fn spider_tree(k: usize, l: usize) -> Result<LabeledGraph> {
    require(k >= 2, "spider tree needs k >= 2")?;
    require(l >= 1, "spider tree needs l >= 1")?;
    let mut labels: Vec<Label> = (0..=k).map(int).collect();
    let mut edges: Vec<_> = (1..=k).map(|i| (int(0), int(i))).collect();
    for i in 1..=k {
        for j in 1..=l {
            labels.push(pair(i, j));
            edges.push((int(i), pair(i, j)));
        }
    }
    let cycle: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    let perm = format!("({})", cycle.join(" "));
    Ok(LabeledGraph::new(labels, edges, Some(&perm)))
}

/// `k` copies of `P₇` sharing the end pairs `1, 2` and `6, 7`: spine
/// `1–2–(3,i)–(4,i)–(5,i)–6–7` per copy, plus cross edges `(4,1)–(4,i)` for `i ≥ 2`.
/// Permutation `(2 6 (5,1) (3,1))`.
pub fn sept_path_gadget(k: usize) -> Result<LabeledGraph> {
    require(k >= 3, "sept path gadget needs k >= 3")?;
    let mut labels = vec![int(1), int(2)];
    let mut edges = vec![(int(1), int(2)), (int(6), int(7))];
    for i in 1..=k {
        labels.extend((3..=5).map(|j| pair(j, i)));
        edges.push((int(2), pair(3, i)));
        edges.push((pair(3, i), pair(4, i)));
        edges.push((pair(4, i), pair(5, i)));
        edges.push((pair(5, i), int(6)));
        if i >= 2 {
            edges.push((pair(4, 1), pair(4, i)));
        }
    }
    labels.extend([int(6), int(7)]);
    Ok(LabeledGraph::new(labels, edges, Some("(2 6 (5,1) (3,1))")))
}

/// Family names accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    CycleGadget,
    PathGadget,
    SpiderTree,
    SeptPathGadget,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::CycleGadget,
        Family::PathGadget,
        Family::SpiderTree,
        Family::SeptPathGadget,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::CycleGadget => "cycle-gadget",
            Family::PathGadget => "path-gadget",
            Family::SpiderTree => "spider-tree",
            Family::SeptPathGadget => "sept-path-gadget",
        }
    }

    /// Builds a member. `k` is the size parameter (`n` for path, cycle and complete);
    /// `l` is used only by the spider tree.
    pub fn build(self, k: usize, l: Option<usize>) -> Result<LabeledGraph> {
        match self {
            Family::Path => path(k),
            Family::Cycle => cycle(k),
            Family::Star => star(k),
            Family::Complete => complete(k),
            Family::CycleGadget => cycle_gadget(k),
            Family::PathGadget => path_gadget(k),
            Family::SpiderTree => {
                let l = l.ok_or_else(|| Error::InvalidArgument("spider-tree needs l".into()))?;
                spider_tree(k, l)
            }
            Family::SeptPathGadget => sept_path_gadget(k),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label_isomorphic(a: &Graph, b: &Graph, map: impl Fn(usize) -> usize) -> bool {
        a.n() == b.n()
            && a.edge_count() == b.edge_count()
            && a.edges().all(|(u, v)| b.has_edge(map(u), map(v)))
    }

    #[test]
    fn small_families() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.canonical_perm.as_ref().unwrap().image(), &[1, 0, 2]);
        let c7 = cycle(7).unwrap();
        assert_eq!(
            c7.canonical_perm.as_ref().unwrap().image(),
            &[0, 3, 2, 1, 6, 5, 4]
        );
        assert_eq!(star(2).unwrap().graph.degree_sequence(), vec![2, 1, 1]);
        assert!(label_isomorphic(&star(2).unwrap().graph, &p3.graph, |v| [
            1, 0, 2
        ][v]));
        assert_eq!(complete(5).unwrap().graph.edge_count(), 10);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn cycle_gadget_shape() {
        for k in 1..5 {
            let g = cycle_gadget(k).unwrap();
            assert_eq!(g.graph.n(), 6 * k + 1);
            assert_eq!(g.graph.edge_count(), 7 * k);
            assert!(g.graph.is_connected());
        }
        let g1 = cycle_gadget(1).unwrap();
        let c7 = cycle(7).unwrap();
        assert!(label_isomorphic(&g1.graph, &c7.graph, |v| v));
        assert_eq!(g1.canonical_perm, c7.canonical_perm);
        let g2 = cycle_gadget(2).unwrap();
        let pi = g2.canonical_perm.as_ref().unwrap();
        let id = |i, j| g2.id(&pair(i, j)).unwrap();
        assert_eq!(pi.apply(id(2, 1)), id(2, 3));
        assert_eq!(pi.apply(id(2, 6)), id(2, 4));
        assert_eq!(pi.apply(0), 0);
    }

    #[test]
    fn path_gadget_shape() {
        let h1 = path_gadget(1).unwrap();
        let p6 = path(6).unwrap();
        assert!(label_isomorphic(&h1.graph, &p6.graph, |v| v));
        assert_eq!(h1.canonical_perm, p6.canonical_perm);
        let h3 = path_gadget(3).unwrap();
        assert_eq!(h3.graph.n(), 16);
        assert_eq!(h3.graph.degree(0), 3);
    }

    #[test]
    fn spider_shape() {
        // T_{2,1} is the path leaf-1-0-2-leaf
        let t = spider_tree(2, 1).unwrap();
        assert_eq!(t.graph.n(), 5);
        let mut degrees = t.graph.degree_sequence();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);
        assert_eq!(t.graph.diameter(), crate::graph::Distance::Finite(4));
        assert_eq!(t.canonical_perm.as_ref().unwrap().image(), &[0, 2, 1, 3, 4]);
        assert!(spider_tree(1, 3).is_err());
        assert_eq!(spider_tree(3, 2).unwrap().graph.n(), 10);
    }

    #[test]
    fn sept_shape() {
        for k in 3..6 {
            let g = sept_path_gadget(k).unwrap();
            assert_eq!(g.graph.n(), 4 + 3 * k);
            assert!(g.graph.is_connected());
        }
        let g = sept_path_gadget(3).unwrap();
        let id = |l: Label| g.id(&l).unwrap();
        let pi = g.canonical_perm.as_ref().unwrap();
        assert_eq!(pi.apply(id(int(2))), id(int(6)));
        assert_eq!(pi.apply(id(int(6))), id(pair(5, 1)));
        assert_eq!(pi.apply(id(pair(5, 1))), id(pair(3, 1)));
        assert_eq!(pi.apply(id(pair(3, 1))), id(int(2)));
        assert!(g.graph.has_edge(id(pair(4, 1)), id(pair(4, 3))));
        assert!(!g.graph.has_edge(id(pair(4, 2)), id(pair(4, 3))));
        assert!(sept_path_gadget(2).is_err());
    }

    #[test]
    fn labels_round_trip() {
        for f in Family::ALL {
            let g = f.build(4, Some(2)).unwrap();
            assert!(g.graph.is_connected(), "{f}");
            for v in 0..g.graph.n() {
                assert_eq!(g.id(g.labels.label(v)), Some(v));
            }
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
    }
}
