//! Closed-form Hom and Ext¹ dimensions, explicit morphism bases in
//! generator-image form, composition, and the exchange short exact sequences.
//!
//! A finite arc `(a,b)` names the module `(x, y^{b-a-1})(1-b)` with generators
//! `x` and `y^{b-a-1}`; an infinite arc `(-inf,b)` names `C[y](-b)` with
//! generator `1`. Every morphism space is spanned by the normalized basis
//! maps below (all free scalars set to 1):
//!
//! * `V`  (finite→finite):  `x ↦ x·y^{d-b}`, `y^{b-a-1} ↦ y^{d-a-1}`
//! * `U`  (finite→finite):  `x ↦ 0`, `y^{b-a-1} ↦ x·y^{d-a}`
//! * `FI` (finite→infinite): `x ↦ 0`, `y^{b-a-1} ↦ y^{d-a}`
//! * `IF` (infinite→finite): `1 ↦ x·y^{d-b}`
//! * `II` (infinite→infinite): `1 ↦ y^{d-b}`

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::arc::{Arc, Endpoint};
use crate::error::{Error, Result};
use crate::oracle::linalg::Rat;

/// The five families of basis morphisms between indecomposables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MorphKind {
    V,
    U,
    FinToInf,
    InfToFin,
    InfToInf,
}

impl MorphKind {
    pub fn wire_name(self) -> &'static str {
        match self {
            MorphKind::V => "V",
            MorphKind::U => "U",
            MorphKind::FinToInf => "FI",
            MorphKind::InfToFin => "IF",
            MorphKind::InfToInf => "II",
        }
    }

    pub fn from_wire(s: &str) -> Option<Self> {
        Some(match s {
            "V" => MorphKind::V,
            "U" => MorphKind::U,
            "FI" => MorphKind::FinToInf,
            "IF" => MorphKind::InfToFin,
            "II" => MorphKind::InfToInf,
            _ => return None,
        })
    }
}

impl fmt::Display for MorphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.wire_name())
    }
}

/// Is `kind` an admissible basis map from `src` to `tgt`?
///
/// The inequalities are exactly the ones making every exponent in the
/// generator images non-negative.
pub fn admissible(kind: MorphKind, src: &Arc, tgt: &Arc) -> bool {
    match kind {
        MorphKind::V => match (src.src(), tgt.src()) {
            (Endpoint::Vertex(a), Endpoint::Vertex(c)) => a <= c && src.tgt() <= tgt.tgt(),
            _ => false,
        },
        MorphKind::U => match (src.src(), tgt.src()) {
            (Endpoint::Vertex(a), Endpoint::Vertex(_)) => a <= tgt.tgt(),
            _ => false,
        },
        MorphKind::FinToInf => match (src.src(), tgt.src()) {
            (Endpoint::Vertex(a), Endpoint::MinusInfinity) => a <= tgt.tgt(),
            _ => false,
        },
        MorphKind::InfToFin => match (src.src(), tgt.src()) {
            (Endpoint::MinusInfinity, Endpoint::Vertex(_)) => src.tgt() <= tgt.tgt(),
            _ => false,
        },
        MorphKind::InfToInf => match (src.src(), tgt.src()) {
            (Endpoint::MinusInfinity, Endpoint::MinusInfinity) => src.tgt() <= tgt.tgt(),
            _ => false,
        },
    }
}

/// A single admissible basis morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphBasis {
    src: Arc,
    tgt: Arc,
    kind: MorphKind,
}

impl MorphBasis {
    pub fn new(kind: MorphKind, src: Arc, tgt: Arc) -> Result<Self> {
        if !admissible(kind, &src, &tgt) {
            return Err(Error::MalformedInput(format!(
                "{kind} is not admissible from {src} to {tgt}"
            )));
        }
        Ok(MorphBasis { src, tgt, kind })
    }

    pub fn src(&self) -> &Arc {
        &self.src
    }

    pub fn tgt(&self) -> &Arc {
        &self.tgt
    }

    pub fn kind(&self) -> MorphKind {
        self.kind
    }
}

/// `dim Hom((a,b), (c,d))` in `{0, 1, 2}`.
///
/// Two-dimensional iff `-inf < a <= c` and `b <= d`; zero iff `d < a` or the
/// source is infinite while `d < b`; one-dimensional otherwise.
pub fn hom_dim(x: &Arc, y: &Arc) -> usize {
    hom_kinds(x, y).len()
}

fn hom_kinds(x: &Arc, y: &Arc) -> Vec<MorphKind> {
    use MorphKind::*;
    let all = match (x.is_infinite(), y.is_infinite()) {
        (false, false) => [V, U].as_slice(),
        (false, true) => &[FinToInf],
        (true, false) => &[InfToFin],
        (true, true) => &[InfToInf],
    };
    all.iter()
        .copied()
        .filter(|&k| admissible(k, x, y))
        .collect()
}

/// The admissible basis maps from `x` to `y`, `V` before `U`.
pub fn hom_basis(x: &Arc, y: &Arc) -> Vec<MorphBasis> {
    hom_kinds(x, y)
        .into_iter()
        .map(|kind| MorphBasis {
            src: x.clone(),
            tgt: y.clone(),
            kind,
        })
        .collect()
}

/// `dim Ext¹(x, y)`: one iff the arcs cross, or both are infinite with
/// `x.tgt < y.tgt`; zero otherwise.
pub fn ext1_dim(x: &Arc, y: &Arc) -> usize {
    let nested_infinite = x.is_infinite() && y.is_infinite() && x.tgt() < y.tgt();
    usize::from(x.crosses(y) || nested_infinite)
}

/// Stable Hom dimension via `underline-Hom(X, Y) = Ext¹(X, Y(-1))`.
///
/// The shift direction is certified against the module oracle rather than
/// trusted; see the convention tests.
pub fn stable_hom_dim(x: &Arc, y: &Arc) -> usize {
    ext1_dim(x, &y.shift_i(-1))
}

/// A rational linear combination of basis morphisms between two fixed arcs.
/// The zero morphism has an empty coefficient map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    src: Arc,
    tgt: Arc,
    coeffs: BTreeMap<MorphKind, Rat>,
}

impl Morphism {
    pub fn zero(src: Arc, tgt: Arc) -> Self {
        Morphism {
            src,
            tgt,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(kind: MorphKind, src: Arc, tgt: Arc) -> Result<Self> {
        let b = MorphBasis::new(kind, src, tgt)?;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(b.kind, Rat::from_integer(1.into()));
        Ok(Morphism {
            src: b.src,
            tgt: b.tgt,
            coeffs,
        })
    }

    /// The identity morphism on an arc (`V` or `II` with coefficient 1).
    pub fn identity(arc: &Arc) -> Self {
        let kind = if arc.is_infinite() {
            MorphKind::InfToInf
        } else {
            MorphKind::V
        };
        Morphism::basis(kind, arc.clone(), arc.clone()).expect("identity is admissible")
    }

    pub fn from_coeffs(src: Arc, tgt: Arc, coeffs: BTreeMap<MorphKind, Rat>) -> Result<Self> {
        for (&k, c) in &coeffs {
            if !c.is_zero() && !admissible(k, &src, &tgt) {
                return Err(Error::MalformedInput(format!(
                    "coefficient on {k} which is not admissible from {src} to {tgt}"
                )));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Morphism { src, tgt, coeffs })
    }

    pub fn src(&self) -> &Arc {
        &self.src
    }

    pub fn tgt(&self) -> &Arc {
        &self.tgt
    }

    pub fn coeffs(&self) -> &BTreeMap<MorphKind, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, kind: MorphKind) -> Rat {
        self.coeffs.get(&kind).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, s: &Rat) -> Morphism {
        if s.is_zero() {
            return Morphism::zero(self.src.clone(), self.tgt.clone());
        }
        Morphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * s)).collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::MalformedInput(
                "cannot add morphisms with different endpoints".into(),
            ));
        }
        let mut coeffs = self.coeffs.clone();
        for (&k, c) in &other.coeffs {
            let entry = coeffs.entry(k).or_insert_with(Rat::zero);
            *entry = &*entry + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(Morphism {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            coeffs,
        })
    }
}

/// Structure constants of basis-map composition, `g∘f` for `f: X -> Y` and
/// `g: Y -> Z`. Each entry is the substitution of generator images; the
/// coefficient is always 1 or 0. `None` means the composite is zero.
///
/// The zero entries come from `x ↦ 0`: `U∘U` substitutes `x·y^s` into a map
/// killing `x`, and likewise for `FI∘U`, `U∘IF`, `FI∘IF`.
fn compose_kinds(f: MorphKind, g: MorphKind) -> Option<MorphKind> {
    use MorphKind::*;
    match (f, g) {
        (V, V) => Some(V),
        (V, U) => Some(U),
        (V, FinToInf) => Some(FinToInf),
        (U, V) => Some(U),
        (U, U) => None,
        (U, FinToInf) => None,
        (FinToInf, InfToFin) => Some(U),
        (FinToInf, InfToInf) => Some(FinToInf),
        (InfToFin, V) => Some(InfToFin),
        (InfToFin, U) => None,
        (InfToFin, FinToInf) => None,
        (InfToInf, InfToFin) => Some(InfToFin),
        (InfToInf, InfToInf) => Some(InfToInf),
        pair => unreachable!("kinds not composable: {pair:?}"),
    }
}

/// Bilinear composition `g ∘ f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if f.tgt != g.src {
        return Err(Error::CompositionMismatch {
            inner_tgt: f.tgt.clone(),
            outer_src: g.src.clone(),
        });
    }
    let mut out = Morphism::zero(f.src.clone(), g.tgt.clone());
    for (&fk, fc) in &f.coeffs {
        for (&gk, gc) in &g.coeffs {
            if let Some(rk) = compose_kinds(fk, gk) {
                debug_assert!(admissible(rk, &out.src, &out.tgt));
                let entry = out.coeffs.entry(rk).or_insert_with(Rat::zero);
                *entry = &*entry + fc * gc;
            }
        }
    }
    out.coeffs.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// A non-split short exact sequence `0 -> left -> ⊕ middle -> right -> 0`
/// with its explicit maps. `incl[i]` is the component `left -> middle[i]`,
/// `proj[i]` the component `middle[i] -> right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeSequence {
    pub left: Arc,
    pub middle: Vec<Arc>,
    pub right: Arc,
    pub incl: Vec<Morphism>,
    pub proj: Vec<Morphism>,
}

impl ExchangeSequence {
    /// Structural sanity of the stored maps.
    pub fn check_shape(&self) -> Result<()> {
        if self.incl.len() != self.middle.len() || self.proj.len() != self.middle.len() {
            return Err(Error::MalformedSequence(
                "component count differs from middle term count".into(),
            ));
        }
        for (i, m) in self.middle.iter().enumerate() {
            if self.incl[i].src() != &self.left || self.incl[i].tgt() != m {
                return Err(Error::MalformedSequence(format!(
                    "inclusion component {i} has wrong endpoints"
                )));
            }
            if self.proj[i].src() != m || self.proj[i].tgt() != &self.right {
                return Err(Error::MalformedSequence(format!(
                    "projection component {i} has wrong endpoints"
                )));
            }
        }
        Ok(())
    }
}

fn basis1(kind: MorphKind, src: &Arc, tgt: &Arc) -> Morphism {
    Morphism::basis(kind, src.clone(), tgt.clone()).expect("exchange map admissible")
}

fn neg(m: Morphism) -> Morphism {
    let minus_one = -Rat::from_integer(1.into());
    m.scaled(&minus_one)
}

/// The short exact sequences `0 -> x -> E -> y -> 0` representing the
/// (at most one-dimensional) extension of `y` by `x`.
///
/// Returns one sequence when `Ext¹(y, x) = 1` and none otherwise. Middle
/// terms follow the quadrilateral reading of the crossing, or the single
/// spanning arc for a pair of infinite arcs.
pub fn exchange_sequences(x: &Arc, y: &Arc) -> Vec<ExchangeSequence> {
    use MorphKind::*;
    if ext1_dim(y, x) == 0 {
        return vec![];
    }
    match (x.src(), y.src()) {
        // 0 -> (-inf,B) -> (A,B) -> (-inf,A) -> 0 with A < B.
        (Endpoint::MinusInfinity, Endpoint::MinusInfinity) => {
            let (big, small) = (x.tgt().clone(), y.tgt().clone());
            debug_assert!(small < big);
            let mid = Arc::new(Endpoint::Vertex(small), big).expect("A < B");
            let seq = ExchangeSequence {
                incl: vec![basis1(InfToFin, x, &mid)],
                proj: vec![basis1(FinToInf, &mid, y)],
                left: x.clone(),
                middle: vec![mid],
                right: y.clone(),
            };
            vec![seq]
        }
        // 0 -> (-inf,b) -> (a,b) ⊕ (-inf,c) -> (a,c) -> 0 with a < b < c.
        (Endpoint::MinusInfinity, Endpoint::Vertex(a)) => {
            let b = x.tgt().clone();
            let (a, c) = (a.clone(), y.tgt().clone());
            let m1 = Arc::new(Endpoint::Vertex(a), b.clone()).expect("a < b");
            let m2 = Arc::inf_at(c);
            let seq = ExchangeSequence {
                incl: vec![basis1(InfToFin, x, &m1), basis1(InfToInf, x, &m2)],
                proj: vec![basis1(V, &m1, y), neg(basis1(InfToFin, &m2, y))],
                left: x.clone(),
                middle: vec![m1, m2],
                right: y.clone(),
            };
            vec![seq]
        }
        // 0 -> (a,c) -> (b,c) ⊕ (-inf,a) -> (-inf,b) -> 0 with a < b < c.
        (Endpoint::Vertex(a), Endpoint::MinusInfinity) => {
            let (a, c) = (a.clone(), x.tgt().clone());
            let b = y.tgt().clone();
            let m1 = Arc::new(Endpoint::Vertex(b), c).expect("b < c");
            let m2 = Arc::inf_at(a);
            let seq = ExchangeSequence {
                incl: vec![basis1(V, x, &m1), basis1(FinToInf, x, &m2)],
                proj: vec![basis1(FinToInf, &m1, y), neg(basis1(InfToInf, &m2, y))],
                left: x.clone(),
                middle: vec![m1, m2],
                right: y.clone(),
            };
            vec![seq]
        }
        // Crossing finite arcs.
        (Endpoint::Vertex(xa), Endpoint::Vertex(ya)) => {
            let (xb, yb) = (x.tgt(), y.tgt());
            let seq = if xa < ya {
                // x = (a,b), y = (c,d) with a < c < b < d:
                // 0 -> (a,b) -> (c,b) ⊕ (a,d) -> (c,d) -> 0
                let m1 = Arc::new(Endpoint::Vertex(ya.clone()), xb.clone()).expect("c < b");
                let m2 = Arc::new(Endpoint::Vertex(xa.clone()), yb.clone()).expect("a < d");
                ExchangeSequence {
                    incl: vec![basis1(V, x, &m1), basis1(V, x, &m2)],
                    proj: vec![basis1(V, &m1, y), neg(basis1(V, &m2, y))],
                    left: x.clone(),
                    middle: vec![m1, m2],
                    right: y.clone(),
                }
            } else {
                // x = (c,d), y = (a,b) with a < c < b < d:
                // 0 -> (c,d) -> (a,c) ⊕ (b,d) -> (a,b) -> 0
                let m1 = Arc::new(Endpoint::Vertex(ya.clone()), xa.clone()).expect("a < c");
                let m2 = Arc::new(Endpoint::Vertex(yb.clone()), xb.clone()).expect("b < d");
                ExchangeSequence {
                    incl: vec![basis1(U, x, &m1), basis1(V, x, &m2)],
                    proj: vec![basis1(V, &m1, y), neg(basis1(U, &m2, y))],
                    left: x.clone(),
                    middle: vec![m1, m2],
                    right: y.clone(),
                }
            };
            vec![seq]
        }
    }
}
