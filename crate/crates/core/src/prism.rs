//! The prism `πG`: two copies of `G` joined by the perfect matching `{u, π(u)'}`.
//!
//! Base vertex `v` keeps id `v`; its copy `v'` gets id `n + v`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labels::LabelMap;
use crate::permutation::Permutation;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrismGraph {
    graph: Graph,
    base_n: usize,
    perm: Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    Base,
    Copy,
}

impl PrismGraph {
    pub fn build(base: &Graph, perm: &Permutation) -> Result<PrismGraph> {
        let n = base.n();
        if perm.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: perm.n(),
            });
        }
        let edges = base
            .edges()
            .chain(base.edges().map(|(u, v)| (n + u, n + v)))
            .chain((0..n).map(|u| (u, n + perm.apply(u))));
        Ok(PrismGraph {
            graph: Graph::new(2 * n, edges)?,
            base_n: n,
            perm: perm.clone(),
        })
    }

    /// The prism under the identity permutation (`G □ K₂`).
    pub fn identity(base: &Graph) -> PrismGraph {
        PrismGraph::build(base, &Permutation::identity(base.n())).expect("sizes agree")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// Order of the base graph.
    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn base_vertex(&self, v: usize) -> usize {
        v
    }

    pub fn copy_vertex(&self, v: usize) -> usize {
        self.base_n + v
    }

    /// Which layer a prism vertex lies in, with its base-graph id.
    pub fn locate(&self, id: usize) -> (Layer, usize) {
        if id < self.base_n {
            (Layer::Base, id)
        } else {
            (Layer::Copy, id - self.base_n)
        }
    }

    /// `base ∪ copy'` as a set of prism vertices.
    pub fn lift_set(&self, base: &VertexSet, copy: &VertexSet) -> VertexSet {
        assert_eq!(base.universe(), self.base_n);
        assert_eq!(copy.universe(), self.base_n);
        let mut out = VertexSet::empty(2 * self.base_n);
        for v in base.iter() {
            out.insert(v);
        }
        for v in copy.iter() {
            out.insert(self.base_n + v);
        }
        out
    }

    /// Splits a prism set `D` into `(D₁, D₂)` with `D₁ = D ∩ V` and `D₂' = D ∩ V'`,
    /// both returned as subsets of the base vertex ids.
    pub fn split_set(&self, set: &VertexSet) -> (VertexSet, VertexSet) {
        let n = self.base_n;
        let mut base = VertexSet::empty(n);
        let mut copy = VertexSet::empty(n);
        for id in set.iter() {
            match self.locate(id) {
                (Layer::Base, v) => base.insert(v),
                (Layer::Copy, v) => copy.insert(v),
            };
        }
        (base, copy)
    }

    /// `V` (all base vertices) as a prism set.
    pub fn base_layer(&self) -> VertexSet {
        self.lift_set(
            &VertexSet::full(self.base_n),
            &VertexSet::empty(self.base_n),
        )
    }

    /// `V'` (all copy vertices) as a prism set.
    pub fn copy_layer(&self) -> VertexSet {
        self.lift_set(
            &VertexSet::empty(self.base_n),
            &VertexSet::full(self.base_n),
        )
    }

    /// Display labels: base labels unchanged, copies primed (`v'`).
    pub fn vertex_labels(&self, base_labels: Option<&LabelMap>) -> Vec<String> {
        let name = |v: usize| match base_labels {
            Some(map) => map.label(v).to_string(),
            None => v.to_string(),
        };
        (0..self.base_n)
            .map(name)
            .chain((0..self.base_n).map(|v| format!("{}'", name(v))))
            .collect()
    }
}

/// Image of a base set under a permutation.
pub fn map_set(perm: &Permutation, set: &VertexSet) -> VertexSet {
    VertexSet::from_vertices(set.universe(), set.iter().map(|v| perm.apply(v)))
        .expect("permutation stays in range")
}
