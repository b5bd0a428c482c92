//! Constructive connected dominating sets of `πG` built from dominating sets of `G`.

use super::{gamma, mask_graph};
use crate::bits::{bit, ones, MaskGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutation::Permutation;
use crate::prism::{map_set, PrismGraph};
use crate::vertex_set::VertexSet;

fn map_mask(perm: &Permutation, set: u64) -> u64 {
    ones(set).fold(0, |m, v| m | bit(perm.apply(v)))
}

/// A γ-set `A = A₁ ∪ A₂` of `G` and a vertex `v ∈ A₁` such that
/// `A₁ ∪ (π(A₂ ∪ {v}))'` is a connected dominating set of `πG` of size `γ(G) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlusOneCertificate {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub v: usize,
}

impl PlusOneCertificate {
    /// The connected dominating set of the prism this certificate describes.
    pub fn prism_set(&self, prism: &PrismGraph) -> VertexSet {
        let mut copy_side = self.a2.clone();
        copy_side.insert(self.v);
        prism.lift_set(&self.a1, &map_set(prism.perm(), &copy_side))
    }
}

/// Searches every γ-set `A` of `G`, every split `A = A₁ ∪ A₂` and every `v ∈ A₁` for:
/// 1. `A₁` dominates `V − A₂`;
/// 2. `A₁` is connected;
/// 3. `π(A₂ ∪ {v})` dominates `V − π(A₁)`;
/// 4. `π(A₂ ∪ {v})` is connected.
///
/// The first hit in canonical order (lexicographic `A`, then `A₁` by bit mask, then `v`)
/// is returned. The search is performed for any connected `G`; the equivalence with
/// `γ_c(πG) = γ(G) + 1` is claimed only under `γ_con(G) ≠ |V_G|`.
pub fn min_connected_dominating_plus_one_certificate(
    g: &Graph,
    perm: &Permutation,
) -> Result<Option<PlusOneCertificate>> {
    if perm.n() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: perm.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mg = mask_graph(g)?;
    let size = gamma(g)?.value;
    let mut found = None;
    for_each_gamma_set(&mg, size, &mut |a| {
        found = split_certificate(&mg, perm, a);
        found.is_some()
    });
    let n = g.n();
    Ok(found.map(|(a1, a2, v)| PlusOneCertificate {
        a1: VertexSet::from_mask(n, a1),
        a2: VertexSet::from_mask(n, a2),
        v,
    }))
}

fn split_certificate(mg: &MaskGraph, perm: &Permutation, a: u64) -> Option<(u64, u64, usize)> {
    let full = mg.full();
    // enumerate nonempty submasks A₁ of A in increasing mask order
    let mut a1 = 0u64;
    loop {
        a1 = a1.wrapping_sub(a) & a;
        if a1 == 0 {
            return None;
        }
        let a2 = a & !a1;
        if mg.closed_neighborhood(a1) | a2 != full || !mg.is_connected_set(a1) {
            continue;
        }
        let pa1 = map_mask(perm, a1);
        for v in ones(a1) {
            let side = map_mask(perm, a2 | bit(v));
            if mg.closed_neighborhood(side) | pa1 == full && mg.is_connected_set(side) {
                return Some((a1, a2, v));
            }
        }
    }
}

/// Calls `visit` on every dominating set of exactly `size` vertices, in lexicographic
/// order, until it returns `true`.
fn for_each_gamma_set(mg: &MaskGraph, size: usize, visit: &mut dyn FnMut(u64) -> bool) {
    fn rec(
        mg: &MaskGraph,
        start: usize,
        left: usize,
        set: u64,
        visit: &mut dyn FnMut(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return mg.dominates(set) && visit(set);
        }
        for v in start..=mg.n() - left {
            if rec(mg, v + 1, left - 1, set | bit(v), visit) {
                return true;
            }
        }
        false
    }
    if size <= mg.n() {
        rec(mg, 0, size, 0, visit);
    }
}

/// Given a dominating set `A = A₁ ∪ A₂ ∪ A₃` of `G` (parts pairwise disjoint) with
/// 1. `A₁ ∪ A₂` dominates `V − A₃`,
/// 2. `A₁ ∪ A₂` connected,
/// 3. `π(A₂ ∪ A₃)` connected,
/// 4. `π(A₂ ∪ A₃)` dominates `V − π(A₁)`,
///
/// returns `A₁ ∪ A₂ ∪ (π(A₂ ∪ A₃))'`, a connected dominating set of `πG` of size
/// `|A| + |A₂|`.
///
/// Condition 0 covers the partition itself (disjoint parts, `A` dominating). Condition 5
/// rejects `A₂ = ∅` while `A₁` and `A₃` are both nonempty: the two layers of the
/// output then share no matching edge and the set is disconnected.
pub fn build_connected_dom_from_partition(
    g: &Graph,
    perm: &Permutation,
    a1: &VertexSet,
    a2: &VertexSet,
    a3: &VertexSet,
) -> Result<VertexSet> {
    let n = g.n();
    if perm.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: perm.n(),
        });
    }
    for part in [a1, a2, a3] {
        if part.universe() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: part.universe(),
            });
        }
    }
    let fail = |condition: u8, message: &str| {
        Err(Error::Precondition {
            condition,
            message: message.to_string(),
        })
    };
    if !a1.is_disjoint(a2) || !a1.is_disjoint(a3) || !a2.is_disjoint(a3) {
        return fail(0, "A1, A2, A3 must be pairwise disjoint");
    }
    let a = a1.union(a2).union(a3);
    if !g.is_dominating(&a) {
        return fail(0, "A must dominate G");
    }
    let left = a1.union(a2);
    let right = map_set(perm, &a2.union(a3));
    let full = VertexSet::full(n);
    if !full.difference(a3).is_subset(&g.closed_neighborhood(&left)) {
        return fail(1, "A1 ∪ A2 must dominate V − A3");
    }
    if !crate::geodesic::is_connected_set(g, &left) {
        return fail(2, "A1 ∪ A2 must be connected");
    }
    if !crate::geodesic::is_connected_set(g, &right) {
        return fail(3, "π(A2 ∪ A3) must be connected");
    }
    let pa1 = map_set(perm, a1);
    if !full
        .difference(&pa1)
        .is_subset(&g.closed_neighborhood(&right))
    {
        return fail(4, "π(A2 ∪ A3) must dominate V − π(A1)");
    }
    if a2.is_empty() && !a1.is_empty() && !a3.is_empty() {
        return fail(5, "A2 must be nonempty when A1 and A3 both are");
    }
    let prism = PrismGraph::build(g, perm)?;
    Ok(prism.lift_set(&left, &right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::is_connected_dominating;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn builder_on_c7() {
        let g = cycle(7);
        let id = Permutation::identity(7);
        let err = build_connected_dom_from_partition(
            &g,
            &id,
            &set(7, &[0, 1]),
            &VertexSet::empty(7),
            &set(7, &[4]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition { condition: 1, .. }));

        let a1 = set(7, &[0, 1, 2, 3]);
        let a2 = set(7, &[4]);
        let a3 = set(7, &[5]);
        let d = build_connected_dom_from_partition(&g, &id, &a1, &a2, &a3).unwrap();
        assert_eq!(d.len(), 6 + 1);
        let prism = PrismGraph::identity(&g);
        assert!(is_connected_dominating(prism.graph(), &d));
    }

    #[test]
    fn empty_middle_part_rejected() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let id = Permutation::identity(2);
        let err = build_connected_dom_from_partition(
            &k2,
            &id,
            &set(2, &[0]),
            &VertexSet::empty(2),
            &set(2, &[1]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition { condition: 5, .. }));
    }

    #[test]
    fn certificate_on_c4() {
        let c4 = cycle(4);
        let id = Permutation::identity(4);
        let prism = PrismGraph::identity(&c4);
        let cert = min_connected_dominating_plus_one_certificate(&c4, &id).unwrap();
        let gamma_c =
            super::super::gamma_variant(prism.graph(), super::super::GammaVariant::Connected)
                .unwrap()
                .value;
        let gamma_g = gamma(&c4).unwrap().value;
        assert_eq!(cert.is_some(), gamma_c == gamma_g + 1);
        if let Some(cert) = cert {
            let d = cert.prism_set(&prism);
            assert_eq!(d.len(), gamma_g + 1);
            assert!(is_connected_dominating(prism.graph(), &d));
        }
    }
}
