//! infgon: an exact-arithmetic engine for the completed ∞-gon.
//!
//! Arcs of a disc with marked points `Z ∪ {-inf}` name the indecomposable
//! graded MCM modules over `C[x,y]/(x²)` (`deg x = 1`, `deg y = -1`). The
//! crate computes Hom/Ext¹/stable-Hom dimensions and explicit morphisms in
//! closed form, cross-validates them against an independent graded-module
//! oracle, classifies triangulations, decides the rigidity hierarchy, and
//! mutates triangulations with exchange sequences.

// errors carry witness arcs for machine-readable reports; size is accepted
#![allow(clippy::result_large_err)]

pub mod arc;
pub mod error;
pub mod hom;
pub mod json;
pub mod mutation;
pub mod oracle;
pub mod render;
pub mod triangulation;
pub mod verify;

pub use arc::{Arc, ArcKind, Endpoint, Int, ModuleLabel, SyzygyOutcome};
pub use error::{Error, Result};
pub use hom::{
    compose, exchange_sequences, ext1_dim, hom_basis, hom_dim, stable_hom_dim, ExchangeSequence,
    MorphBasis, MorphKind, Morphism,
};
pub use oracle::linalg::Rat;
pub use mutation::{
    apply_schedule, approximations, exchange_graph, flip, is_mutable, mutate_subcategory,
    quadrilateral, ApproxSide, Approximations, Direction, FlipGraph, MutationResult, Schedule,
    ScheduleOutcome, Selector,
};
pub use triangulation::{
    classify, is_almost_rigid, is_cluster_tilting, is_maximal_almost_rigid, is_maximal_rigid,
    is_rigid, precover, preenvelope, Ambient, ApproximationOutcome, ArcSetDescriptor,
    Configuration, Interval, MaximalRigidCase, SideTail, TailSpec, TriangulationDescriptor,
    Violation, ZigStep,
};
