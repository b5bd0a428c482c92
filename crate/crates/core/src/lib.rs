//! Exact domination numbers of graphs and their permutation prisms: plain, connected,
//! weakly convex and convex variants, with the property checks built on top of them.

pub mod bits;
pub mod error;
pub mod families;
pub mod geodesic;
pub mod graph;
pub mod io;
pub mod labels;
pub mod permutation;
pub mod prism;
pub mod solver;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use families::{Family, LabeledGraph};
pub use graph::{Distance, DistanceMatrix, Graph};
pub use labels::{Label, LabelMap};
pub use permutation::Permutation;
pub use prism::{Layer, PrismGraph};
pub use solver::{
    gamma, gamma_variant, oracle_gamma_variant, solve, GammaReport, GammaVariant, Outcome,
    SolveOptions,
};
pub use vertex_set::VertexSet;
