use thiserror::Error;

use crate::arc::Arc;

/// Errors surfaced by the library. The CLI maps `MalformedInput` to exit
/// code 2 and everything else to exit code 1.
///
/// Several variants carry witness arcs for the machine-readable error
/// objects; the enum is not size-optimized.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arc ({0}, {1}): left endpoint must be strictly smaller")]
    InvalidArc(String, String),

    #[error("invalid module label: {0}")]
    InvalidLabel(String),

    #[error("composition mismatch: inner target {inner_tgt} differs from outer source {outer_src}")]
    CompositionMismatch { inner_tgt: Arc, outer_src: Arc },

    #[error("invalid descriptor: {0}")]
    Descriptor(String),

    #[error("arc {0} is not in the arc set")]
    NotInTriangulation(Arc),

    #[error("arc {0} is a boundary arc; boundary arcs are ambient projectives")]
    BoundaryArc(Arc),

    #[error("arc {arc} is not mutable")]
    NotMutable { arc: Arc, witness: Vec<Arc> },

    #[error("subcategory is not maximal rigid; (pre)covers are only constructed for maximal rigid arc sets")]
    NotMaximalRigid,

    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    #[error("polygon with {0} vertices exceeds the enumeration budget (max 12)")]
    PolygonTooLarge(u32),

    #[error("malformed exchange sequence: {0}")]
    MalformedSequence(String),

    #[error("malformed input: {0}")]
    MalformedInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
