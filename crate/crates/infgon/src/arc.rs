//! Arcs of the completed ∞-gon and their dictionary with graded modules.
//!
//! Marked points are the integers together with a single accumulation point
//! `-inf`. An arc is a pair `(a, b)` with `a < b`; the right endpoint is a
//! finite vertex by construction, so the degenerate pair `(-inf, -inf)` is
//! unrepresentable. Vertex coordinates are arbitrary-precision integers so
//! long shift/mutation experiments cannot overflow silently.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Vertex coordinate type used throughout the crate.
pub type Int = BigInt;

/// Convenience constructor for [`Int`] values.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// A marked point of the completed disc: either the accumulation point or an
/// integer vertex. The derived order puts `MinusInfinity` below every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    MinusInfinity,
    Vertex(Int),
}

impl Endpoint {
    pub fn vertex(n: i64) -> Self {
        Endpoint::Vertex(int(n))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Endpoint::MinusInfinity)
    }

    /// `self < n` under the endpoint order.
    pub fn lt_vertex(&self, n: &Int) -> bool {
        match self {
            Endpoint::MinusInfinity => true,
            Endpoint::Vertex(m) => m < n,
        }
    }

    /// `self <= n` under the endpoint order.
    pub fn le_vertex(&self, n: &Int) -> bool {
        match self {
            Endpoint::MinusInfinity => true,
            Endpoint::Vertex(m) => m <= n,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::MinusInfinity => write!(f, "-inf"),
            Endpoint::Vertex(n) => write!(f, "{n}"),
        }
    }
}

/// The three shapes an arc can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcKind {
    /// `(a, a+1)`; corresponds to a projective-injective module `R(j)`.
    Boundary,
    /// Finite with `b >= a + 2`.
    FiniteInternal,
    /// Source is the accumulation point.
    Infinite,
}

/// An arc `(src, tgt)` of the completed ∞-gon with `src < tgt`.
///
/// Fields are private so the ordering invariant is established once, in
/// [`Arc::new`]. The derived `Ord` is lexicographic with `-inf` first, which
/// is the canonical order used by `materialize` and JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    src: Endpoint,
    tgt: Int,
}

impl Arc {
    pub fn new(src: Endpoint, tgt: Int) -> Result<Self> {
        if !src.lt_vertex(&tgt) {
            return Err(Error::InvalidArc(src.to_string(), tgt.to_string()));
        }
        Ok(Arc { src, tgt })
    }

    /// Finite arc `(a, b)`. Panics when `a >= b`; intended for literals.
    pub fn fin(a: i64, b: i64) -> Self {
        Arc::new(Endpoint::vertex(a), int(b)).expect("finite arc literal")
    }

    /// Infinite arc `(-inf, b)`.
    pub fn inf(b: i64) -> Self {
        Arc {
            src: Endpoint::MinusInfinity,
            tgt: int(b),
        }
    }

    pub fn inf_at(b: Int) -> Self {
        Arc {
            src: Endpoint::MinusInfinity,
            tgt: b,
        }
    }

    pub fn src(&self) -> &Endpoint {
        &self.src
    }

    pub fn tgt(&self) -> &Int {
        &self.tgt
    }

    /// Left endpoint as an integer, when finite.
    pub fn src_vertex(&self) -> Option<&Int> {
        match &self.src {
            Endpoint::MinusInfinity => None,
            Endpoint::Vertex(n) => Some(n),
        }
    }

    pub fn kind(&self) -> ArcKind {
        match &self.src {
            Endpoint::MinusInfinity => ArcKind::Infinite,
            Endpoint::Vertex(a) => {
                if self.tgt == a + 1u8 {
                    ArcKind::Boundary
                } else {
                    ArcKind::FiniteInternal
                }
            }
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.src.is_infinite()
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn is_boundary(&self) -> bool {
        self.kind() == ArcKind::Boundary
    }

    /// Grading shift by `+t`: every finite endpoint moves down by `t`, the
    /// accumulation point stays put.
    pub fn shift(&self, t: &Int) -> Arc {
        let src = match &self.src {
            Endpoint::MinusInfinity => Endpoint::MinusInfinity,
            Endpoint::Vertex(a) => Endpoint::Vertex(a - t),
        };
        Arc {
            src,
            tgt: &self.tgt - t,
        }
    }

    pub fn shift_i(&self, t: i64) -> Arc {
        self.shift(&int(t))
    }

    /// Strict interleaving test: `a < c < b < d` or `c < a < d < b`.
    ///
    /// Symmetric and irreflexive; boundary arcs cross nothing because no
    /// vertex lies strictly between `a` and `a + 1`.
    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b) = (&self.src, &self.tgt);
        let (c, d) = (&other.src, &other.tgt);
        let first = a < c && c.lt_vertex(b) && b < d;
        let second = c < a && a.lt_vertex(d) && d < b;
        first || second
    }

    /// Syzygy: `Omega(M) = M(-1)` for non-projectives, zero for boundary arcs.
    pub fn syzygy(&self) -> SyzygyOutcome {
        if self.is_boundary() {
            SyzygyOutcome::Projective
        } else {
            SyzygyOutcome::Arc(self.shift(&Int::from(-1)))
        }
    }

    /// The indecomposable graded module this arc names.
    pub fn module(&self) -> ModuleLabel {
        match &self.src {
            Endpoint::MinusInfinity => ModuleLabel::PolyQuot { j: -&self.tgt },
            Endpoint::Vertex(a) => ModuleLabel::Ideal {
                k: &self.tgt - a - 1u8,
                j: Int::one() - &self.tgt,
            },
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.src, self.tgt)
    }
}

/// Result of taking a syzygy: either the shifted arc or the zero object of
/// the stable category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SyzygyOutcome {
    Arc(Arc),
    Projective,
}

/// Symbolic name of an indecomposable graded MCM module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleLabel {
    /// `(x, y^k)(j)` for `k >= 0`; `k = 0` is the free module `R(j)`.
    Ideal { k: Int, j: Int },
    /// `C[y](j)`.
    PolyQuot { j: Int },
}

impl ModuleLabel {
    pub fn ideal(k: i64, j: i64) -> Self {
        assert!(k >= 0, "ideal exponent must be non-negative");
        ModuleLabel::Ideal { k: int(k), j: int(j) }
    }

    pub fn free(j: i64) -> Self {
        ModuleLabel::Ideal {
            k: Int::zero(),
            j: int(j),
        }
    }

    pub fn poly_quot(j: i64) -> Self {
        ModuleLabel::PolyQuot { j: int(j) }
    }

    pub fn checked(self) -> Result<Self> {
        if let ModuleLabel::Ideal { k, .. } = &self {
            if k < &Int::zero() {
                return Err(Error::InvalidLabel(format!("negative exponent k = {k}")));
            }
        }
        Ok(self)
    }

    /// `R(j)` is the projective-injective family.
    pub fn is_projective_injective(&self) -> bool {
        matches!(self, ModuleLabel::Ideal { k, .. } if k.is_zero())
    }

    /// Grading shift `M -> M(t)`.
    pub fn shifted(&self, t: &Int) -> ModuleLabel {
        match self {
            ModuleLabel::Ideal { k, j } => ModuleLabel::Ideal {
                k: k.clone(),
                j: j + t,
            },
            ModuleLabel::PolyQuot { j } => ModuleLabel::PolyQuot { j: j + t },
        }
    }

    pub fn shifted_i(&self, t: i64) -> ModuleLabel {
        self.shifted(&int(t))
    }

    /// The arc naming this module; inverse of [`Arc::module`].
    pub fn arc(&self) -> Arc {
        match self {
            ModuleLabel::Ideal { k, j } => Arc {
                src: Endpoint::Vertex(-j - k),
                tgt: Int::one() - j,
            },
            ModuleLabel::PolyQuot { j } => Arc {
                src: Endpoint::MinusInfinity,
                tgt: -j,
            },
        }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::Ideal { k, j } if k.is_zero() => write!(f, "R({j})"),
            ModuleLabel::Ideal { k, j } => write!(f, "(x,y^{k})({j})"),
            ModuleLabel::PolyQuot { j } => write!(f, "C[y]({j})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dictionary_matches_stated_values() {
        assert_eq!(Arc::fin(-2, 1).module(), ModuleLabel::ideal(2, 0));
        assert_eq!(Arc::fin(0, 1).module(), ModuleLabel::free(0));
        assert!(Arc::fin(0, 1).module().is_projective_injective());
        assert_eq!(Arc::inf(3).module(), ModuleLabel::poly_quot(-3));

        assert_eq!(ModuleLabel::ideal(2, 0).arc(), Arc::fin(-2, 1));
        assert_eq!(ModuleLabel::poly_quot(0).arc(), Arc::inf(0));
        assert_eq!(ModuleLabel::ideal(0, -1).arc(), Arc::fin(1, 2));
    }

    #[test]
    fn crossing_examples() {
        assert!(Arc::fin(-3, 0).crosses(&Arc::fin(-1, 2)));
        assert!(Arc::inf(0).crosses(&Arc::fin(-1, 2)));
        assert!(!Arc::inf(0).crosses(&Arc::inf(2)));
        // boundary arcs never cross anything
        for other in [Arc::fin(-3, 2), Arc::fin(0, 2), Arc::inf(1)] {
            assert!(!Arc::fin(0, 1).crosses(&other));
            assert!(!other.crosses(&Arc::fin(0, 1)));
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(Arc::inf(0).shift_i(1), Arc::inf(-1));
        assert_eq!(Arc::fin(-2, 1).shift_i(1), Arc::fin(-3, 0));
        assert_eq!(Arc::fin(-2, 1).shift_i(0), Arc::fin(-2, 1));
    }

    #[test]
    fn syzygy_examples() {
        assert_eq!(Arc::inf(0).syzygy(), SyzygyOutcome::Arc(Arc::inf(1)));
        assert_eq!(Arc::fin(-2, 1).syzygy(), SyzygyOutcome::Arc(Arc::fin(-1, 2)));
        assert_eq!(Arc::fin(0, 1).syzygy(), SyzygyOutcome::Projective);
    }

    #[test]
    fn invalid_arcs_rejected() {
        assert!(Arc::new(Endpoint::vertex(3), int(3)).is_err());
        assert!(Arc::new(Endpoint::vertex(4), int(3)).is_err());
    }

    fn arb_arc() -> impl Strategy<Value = Arc> {
        (-40i64..40, 1i64..20, any::<bool>()).prop_map(|(a, span, infinite)| {
            if infinite {
                Arc::inf(a)
            } else {
                Arc::fin(a, a + span)
            }
        })
    }

    proptest! {
        #[test]
        fn dictionary_round_trip(x in arb_arc()) {
            prop_assert_eq!(x.module().arc(), x);
        }

        #[test]
        fn cross_symmetric_irreflexive(x in arb_arc(), y in arb_arc()) {
            prop_assert_eq!(x.crosses(&y), y.crosses(&x));
            prop_assert!(!x.crosses(&x));
        }

        #[test]
        fn cross_shift_invariant(x in arb_arc(), y in arb_arc(), t in -30i64..30) {
            prop_assert_eq!(x.crosses(&y), x.shift_i(t).crosses(&y.shift_i(t)));
        }

        #[test]
        fn shift_group_law(x in arb_arc(), s in -30i64..30, t in -30i64..30) {
            prop_assert_eq!(x.shift_i(s).shift_i(t), x.shift_i(s + t));
            prop_assert_eq!(x.shift_i(0), x);
        }

        #[test]
        fn boundary_iff_k_zero(x in arb_arc()) {
            let k_zero = match x.module() {
                ModuleLabel::Ideal { k, .. } => k.is_zero(),
                ModuleLabel::PolyQuot { .. } => false,
            };
            prop_assert_eq!(x.is_boundary(), k_zero);
        }
    }
}
