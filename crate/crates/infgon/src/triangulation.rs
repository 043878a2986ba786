//! Finitely-described infinite arc collections, triangulation validation, the
//! five-configuration classifier, the rigidity hierarchy, and approximation
//! (precover/preenvelope) construction.
//!
//! An [`ArcSetDescriptor`] stores a finite window of arcs plus a tail
//! specification for the behaviour outside the window: a repeating zig-zag
//! word, or a fan/fountain on each side. Boundary arcs are implicit; they are
//! ambient projectives and are never stored.

use std::collections::BTreeSet;

use crate::arc::{int, Arc, Endpoint, Int};
use crate::error::{Error, Result};
use crate::hom::{stable_hom_dim, Morphism};

/// Closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Int,
    pub hi: Int,
}

impl Interval {
    pub fn new(lo: Int, hi: Int) -> Result<Self> {
        if lo > hi {
            return Err(Error::MalformedInput(format!(
                "interval [{lo}, {hi}] is empty"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn of(lo: i64, hi: i64) -> Self {
        Interval::new(int(lo), int(hi)).expect("interval literal")
    }

    pub fn contains(&self, n: &Int) -> bool {
        self.lo <= *n && *n <= self.hi
    }

    pub fn contains_arc(&self, arc: &Arc) -> bool {
        let tgt_in = self.contains(arc.tgt());
        match arc.src_vertex() {
            Some(a) => tgt_in && self.contains(a),
            None => tgt_in,
        }
    }

    pub fn padded(&self, by: i64) -> Interval {
        Interval {
            lo: &self.lo - int(by),
            hi: &self.hi + int(by),
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn vertices(&self) -> Vec<Int> {
        let mut out = Vec::new();
        let mut n = self.lo.clone();
        while n <= self.hi {
            out.push(n.clone());
            n += 1;
        }
        out
    }
}

/// One letter of a zig-zag word: extend the current arc by one vertex on the
/// left or on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZigStep {
    Left,
    Right,
}

/// Tail of one side of a `Sided` specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SideTail {
    /// Infinite arcs `(-inf, n)` for every `n` beyond the window on this side.
    Fan,
    /// On the left: arcs `(n, a)` for every `n` below the window.
    /// On the right: arcs `(a, n)` for every `n` above the window.
    Fountain(Int),
}

/// Finite encoding of the arcs outside the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TailSpec {
    /// Nested arcs obtained from `base` by repeating `pattern` forever. The
    /// word must contain both letters so the result is locally finite on both
    /// sides.
    ZigZag { base: Arc, pattern: Vec<ZigStep> },
    Sided { left: SideTail, right: SideTail },
}

const MAX_PATTERN: usize = 32;

/// A finite window of arcs plus an optional tail. Pairwise non-crossing is
/// not required here; the rigidity predicates test it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSetDescriptor {
    window: Interval,
    core: BTreeSet<Arc>,
    tail: Option<TailSpec>,
}

fn step_arc(arc: &Arc, step: ZigStep) -> Arc {
    let a = arc.src_vertex().expect("zig-zag arcs are finite");
    match step {
        ZigStep::Left => Arc::new(Endpoint::Vertex(a - 1), arc.tgt().clone()),
        ZigStep::Right => Arc::new(Endpoint::Vertex(a.clone()), arc.tgt() + 1),
    }
    .expect("extension preserves ordering")
}

impl ArcSetDescriptor {
    pub fn new(window: Interval, core: Vec<Arc>, tail: Option<TailSpec>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for arc in core {
            if arc.is_boundary() {
                return Err(Error::Descriptor(format!(
                    "boundary arc {arc} must not be stored; boundary arcs are implicit"
                )));
            }
            if !window.contains_arc(&arc) {
                return Err(Error::Descriptor(format!(
                    "core arc {arc} has an endpoint outside the window [{}, {}]",
                    window.lo, window.hi
                )));
            }
            set.insert(arc);
        }
        match &tail {
            Some(TailSpec::ZigZag { base, pattern }) => {
                if base.is_infinite() {
                    return Err(Error::Descriptor("zig-zag base must be finite".into()));
                }
                if !window.contains_arc(base) {
                    return Err(Error::Descriptor(
                        "zig-zag base must lie in the window".into(),
                    ));
                }
                if pattern.is_empty() || pattern.len() > MAX_PATTERN {
                    return Err(Error::Descriptor(format!(
                        "zig-zag pattern length must be in 1..={MAX_PATTERN}"
                    )));
                }
                let has_l = pattern.contains(&ZigStep::Left);
                let has_r = pattern.contains(&ZigStep::Right);
                if !has_l || !has_r {
                    return Err(Error::Descriptor(
                        "zig-zag pattern must contain both L and R".into(),
                    ));
                }
                if !base.is_boundary() && !set.contains(base) {
                    return Err(Error::Descriptor(
                        "zig-zag base must be a core arc (or a boundary arc)".into(),
                    ));
                }
            }
            Some(TailSpec::Sided { left, right }) => {
                for side in [left, right] {
                    if let SideTail::Fountain(a) = side {
                        if !window.contains(a) {
                            return Err(Error::Descriptor(format!(
                                "fountain vertex {a} lies outside the window"
                            )));
                        }
                    }
                }
            }
            None => {}
        }
        Ok(ArcSetDescriptor {
            window,
            core: set,
            tail,
        })
    }

    pub fn window(&self) -> &Interval {
        &self.window
    }

    pub fn core(&self) -> &BTreeSet<Arc> {
        &self.core
    }

    pub fn tail(&self) -> Option<&TailSpec> {
        self.tail.as_ref()
    }

    pub fn shift(&self, t: &Int) -> ArcSetDescriptor {
        let tail = self.tail.as_ref().map(|tail| match tail {
            TailSpec::ZigZag { base, pattern } => TailSpec::ZigZag {
                base: base.shift(t),
                pattern: pattern.clone(),
            },
            TailSpec::Sided { left, right } => TailSpec::Sided {
                left: match left {
                    SideTail::Fan => SideTail::Fan,
                    SideTail::Fountain(a) => SideTail::Fountain(a - t),
                },
                right: match right {
                    SideTail::Fan => SideTail::Fan,
                    SideTail::Fountain(b) => SideTail::Fountain(b - t),
                },
            },
        });
        ArcSetDescriptor {
            window: Interval {
                lo: &self.window.lo - t,
                hi: &self.window.hi - t,
            },
            core: self.core.iter().map(|a| a.shift(t)).collect(),
            tail,
        }
    }

    /// The zig-zag tail arcs (beyond the base) that still have an endpoint
    /// strictly inside the window, plus the first arc enclosing the whole
    /// window. These are the only tail arcs window candidates can interact
    /// with.
    fn zigzag_window_arcs(&self) -> Vec<Arc> {
        let Some(TailSpec::ZigZag { base, pattern }) = &self.tail else {
            return vec![];
        };
        let mut out = Vec::new();
        let mut current = base.clone();
        let mut i = 0usize;
        loop {
            current = step_arc(&current, pattern[i % pattern.len()]);
            i += 1;
            out.push(current.clone());
            let a = current.src_vertex().unwrap();
            if *a < self.window.lo && *current.tgt() > self.window.hi {
                break;
            }
        }
        out
    }

    /// Core arcs plus all tail arcs with finite endpoints inside `region`,
    /// in lexicographic order with `-inf` first.
    pub fn materialize(&self, region: &Interval) -> Vec<Arc> {
        let mut set: BTreeSet<Arc> = self.core.clone();
        match &self.tail {
            None => {}
            Some(TailSpec::ZigZag { base, pattern }) => {
                let mut current = base.clone();
                let mut i = 0usize;
                loop {
                    current = step_arc(&current, pattern[i % pattern.len()]);
                    i += 1;
                    if !region.contains_arc(&current) {
                        break;
                    }
                    set.insert(current.clone());
                }
            }
            Some(TailSpec::Sided { left, right }) => {
                let mut n = region.lo.clone();
                while n < self.window.lo {
                    match left {
                        SideTail::Fan => {
                            set.insert(Arc::inf_at(n.clone()));
                        }
                        SideTail::Fountain(a) => {
                            if region.contains(a) {
                                set.insert(
                                    Arc::new(Endpoint::Vertex(n.clone()), a.clone()).unwrap(),
                                );
                            }
                        }
                    }
                    n += 1;
                }
                let mut n: Int = &self.window.hi + 1;
                while n <= region.hi {
                    match right {
                        SideTail::Fan => {
                            set.insert(Arc::inf_at(n.clone()));
                        }
                        SideTail::Fountain(b) => {
                            if region.contains(b) {
                                set.insert(
                                    Arc::new(Endpoint::Vertex(b.clone()), n.clone()).unwrap(),
                                );
                            }
                        }
                    }
                    n += 1;
                }
            }
        }
        set.into_iter().collect()
    }

    /// Is `arc` one of the (possibly infinitely many) tail arcs?
    pub fn is_tail_arc(&self, arc: &Arc) -> bool {
        match &self.tail {
            None => false,
            Some(TailSpec::ZigZag { base, pattern }) => {
                if arc.is_infinite() {
                    return false;
                }
                let arc_src = arc.src_vertex().unwrap();
                let mut current = base.clone();
                let mut i = 0usize;
                loop {
                    current = step_arc(&current, pattern[i % pattern.len()]);
                    i += 1;
                    if &current == arc {
                        return true;
                    }
                    // endpoints move monotonically outward, so once either
                    // side passes the query arc it can never appear
                    if current.src_vertex().unwrap() < arc_src || current.tgt() > arc.tgt() {
                        return false;
                    }
                }
            }
            Some(TailSpec::Sided { left, right }) => match arc.src_vertex() {
                None => {
                    let q = arc.tgt();
                    (matches!(left, SideTail::Fan) && *q < self.window.lo)
                        || (matches!(right, SideTail::Fan) && *q > self.window.hi)
                }
                Some(n) => {
                    let left_hit = matches!(left, SideTail::Fountain(a) if arc.tgt() == a)
                        && *n < self.window.lo;
                    let right_hit = matches!(right, SideTail::Fountain(b) if n == b)
                        && *arc.tgt() > self.window.hi;
                    left_hit || right_hit
                }
            },
        }
    }

    /// Membership in the arc set (core or tail; boundary arcs are implicit
    /// and not members).
    pub fn contains(&self, arc: &Arc) -> bool {
        self.core.contains(arc) || self.is_tail_arc(arc)
    }

    /// Does `candidate` (an arc with endpoints in the window) cross any arc
    /// of the set? Tail families are decided in closed form: a window arc
    /// never crosses a fan tail, and crosses a fountain tail exactly when it
    /// straddles the fountain vertex.
    pub fn crosses_set(&self, candidate: &Arc) -> Option<Arc> {
        for arc in &self.core {
            if candidate.crosses(arc) {
                return Some(arc.clone());
            }
        }
        match &self.tail {
            None => None,
            Some(TailSpec::ZigZag { .. }) => self
                .zigzag_window_arcs()
                .into_iter()
                .find(|t| candidate.crosses(t)),
            Some(TailSpec::Sided { left, right }) => {
                if let SideTail::Fountain(a) = left {
                    let hit = match candidate.src_vertex() {
                        // (p,q) crosses some (n,a) iff p < a < q
                        Some(p) => p < a && a < candidate.tgt(),
                        // (-inf,q) crosses some (n,a) iff q < a
                        None => candidate.tgt() < a,
                    };
                    if hit {
                        return Arc::new(Endpoint::Vertex(&self.window.lo - 1), a.clone()).ok();
                    }
                }
                if let SideTail::Fountain(b) = right {
                    let hit = match candidate.src_vertex() {
                        // (p,q) crosses some (b,m) iff p < b < q
                        Some(p) => p < b && b < candidate.tgt(),
                        // (-inf,q) crosses some (b,m) iff b < q
                        None => b < candidate.tgt(),
                    };
                    if hit {
                        return Arc::new(Endpoint::Vertex(b.clone()), &self.window.hi + 1).ok();
                    }
                }
                None
            }
        }
    }

    /// First crossing pair inside the set, if any. Tail against tail is
    /// decided in closed form: the only possible conflict is a left fountain
    /// at `a` against a right fountain at `b` with `b < a`.
    pub fn crossing_violation(&self) -> Option<(Arc, Arc)> {
        let core: Vec<&Arc> = self.core.iter().collect();
        for (i, x) in core.iter().enumerate() {
            for y in &core[i + 1..] {
                if x.crosses(y) {
                    return Some(((*x).clone(), (*y).clone()));
                }
            }
        }
        if let Some(TailSpec::Sided {
            left: SideTail::Fountain(a),
            right: SideTail::Fountain(b),
        }) = &self.tail
        {
            if b < a {
                let x = Arc::new(Endpoint::Vertex(&self.window.lo - 1), a.clone()).unwrap();
                let y = Arc::new(Endpoint::Vertex(b.clone()), &self.window.hi + 1).unwrap();
                return Some((x, y));
            }
        }
        for x in &self.core {
            if let Some(t) = probe_tail_crossing(self, x) {
                return Some((x.clone(), t));
            }
        }
        // zig-zag tails never cross themselves: the arcs are nested
        None
    }

    /// Candidate arcs with endpoints in the window that are absent and cross
    /// nothing. Boundary arcs are implicit and never candidates.
    pub fn addable_candidates(&self) -> Vec<Arc> {
        let mut out = Vec::new();
        let verts = self.window.vertices();
        for q in &verts {
            let cand = Arc::inf_at(q.clone());
            if !self.contains(&cand) && self.crosses_set(&cand).is_none() {
                out.push(cand);
            }
        }
        for (i, p) in verts.iter().enumerate() {
            for q in verts.get(i + 2..).unwrap_or(&[]) {
                let cand = Arc::new(Endpoint::Vertex(p.clone()), q.clone()).unwrap();
                if !self.contains(&cand) && self.crosses_set(&cand).is_none() {
                    out.push(cand);
                }
            }
        }
        out.sort();
        out
    }

    /// Pairwise non-crossing plus window-completeness.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        if let Some((x, y)) = self.crossing_violation() {
            return Err(Violation::Crossing(x, y));
        }
        if let Some(arc) = self.addable_candidates().into_iter().next() {
            return Err(Violation::Addable(arc));
        }
        Ok(())
    }

    /// Add addable candidates (first in arc order each round) until the
    /// window is complete. Terminates: the candidate pool is finite and
    /// shrinks.
    pub fn completed_greedily(&self) -> ArcSetDescriptor {
        let mut d = self.clone();
        loop {
            match d.addable_candidates().into_iter().next() {
                None => return d,
                Some(c) => {
                    d.core.insert(c);
                }
            }
        }
    }

    pub fn with_arc(&self, arc: Arc) -> Result<ArcSetDescriptor> {
        let mut core: Vec<Arc> = self.core.iter().cloned().collect();
        core.push(arc);
        ArcSetDescriptor::new(self.window.clone(), core, self.tail.clone())
    }

    /// Widen the window to cover `target`, absorbing tail arcs inside the
    /// new window into the core so mutation can edit them. Zig-zag tails can
    /// have arcs inside the window even when it does not grow.
    pub fn widened(&self, target: &Interval) -> ArcSetDescriptor {
        let new_window = self.window.hull(target);
        let mut core = self.core.clone();
        let mut tail = self.tail.clone();
        match &mut tail {
            None => {}
            Some(TailSpec::Sided { .. }) => {
                for arc in self.materialize(&new_window) {
                    if !arc.is_boundary() {
                        core.insert(arc);
                    }
                }
            }
            Some(TailSpec::ZigZag { base, pattern }) => {
                // absorb unfolded steps and rotate the pattern so the tail
                // resumes where the absorbed prefix ended
                let mut current = base.clone();
                let mut i = 0usize;
                loop {
                    let next = step_arc(&current, pattern[i % pattern.len()]);
                    if !new_window.contains_arc(&next) {
                        break;
                    }
                    core.insert(next.clone());
                    current = next;
                    i += 1;
                }
                let by = i % pattern.len();
                pattern.rotate_left(by);
                *base = current;
            }
        }
        ArcSetDescriptor {
            window: new_window,
            core,
            tail,
        }
    }

    /// Replace `removed` with `added` in the core. Callers widen first so
    /// that `removed` is a core arc.
    pub(crate) fn replace_core_arc(&self, removed: &Arc, added: Arc) -> Result<ArcSetDescriptor> {
        let mut core = self.core.clone();
        if !core.remove(removed) {
            return Err(Error::NotInTriangulation(removed.clone()));
        }
        if !added.is_boundary() {
            core.insert(added);
        }
        Ok(ArcSetDescriptor {
            window: self.window.clone(),
            core,
            tail: self.tail.clone(),
        })
    }

    /// Semantic equality: same arcs on a region extending far enough past
    /// both windows that the periodic tails are distinguished.
    pub fn same_arc_set(&self, other: &ArcSetDescriptor) -> bool {
        let pat = |d: &ArcSetDescriptor| match &d.tail {
            Some(TailSpec::ZigZag { pattern, .. }) => pattern.len(),
            _ => 1,
        };
        let pad = (pat(self) * pat(other) + 4) as i64;
        let region = self.window.hull(&other.window).padded(pad);
        if self.materialize(&region) != other.materialize(&region) {
            return false;
        }
        match (&self.tail, &other.tail) {
            (None, None) => true,
            (Some(TailSpec::ZigZag { .. }), Some(TailSpec::ZigZag { .. })) => true,
            (
                Some(TailSpec::Sided { left: l1, right: r1 }),
                Some(TailSpec::Sided { left: l2, right: r2 }),
            ) => l1 == l2 && r1 == r2,
            _ => false,
        }
    }

    /// Count of infinite arcs; `None` means infinitely many (a fan tail).
    pub fn infinite_arc_count(&self) -> Option<usize> {
        if let Some(TailSpec::Sided { left, right }) = &self.tail {
            if matches!(left, SideTail::Fan) || matches!(right, SideTail::Fan) {
                return None;
            }
        }
        Some(self.core.iter().filter(|a| a.is_infinite()).count())
    }

    /// The infinite arcs stored in the core, sorted.
    pub fn core_wraps(&self) -> Vec<Arc> {
        self.core
            .iter()
            .filter(|a| a.is_infinite())
            .cloned()
            .collect()
    }
}

/// Closed-form crossing of a single core arc against the tail families.
fn probe_tail_crossing(d: &ArcSetDescriptor, x: &Arc) -> Option<Arc> {
    match d.tail() {
        None => None,
        Some(TailSpec::ZigZag { .. }) => {
            d.zigzag_window_arcs().into_iter().find(|t| x.crosses(t))
        }
        Some(TailSpec::Sided { left, right }) => {
            if let SideTail::Fountain(a) = left {
                let hit = match x.src_vertex() {
                    Some(p) => p < a && a < x.tgt(),
                    None => x.tgt() < a,
                };
                if hit {
                    return Arc::new(Endpoint::Vertex(&d.window().lo - 1), a.clone()).ok();
                }
            }
            if let SideTail::Fountain(b) = right {
                let hit = match x.src_vertex() {
                    Some(p) => p < b && b < x.tgt(),
                    None => b < x.tgt(),
                };
                if hit {
                    return Arc::new(Endpoint::Vertex(b.clone()), &d.window().hi + 1).ok();
                }
            }
            None
        }
    }
}

/// Outcome of a failed validation, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two arcs of the set cross.
    Crossing(Arc, Arc),
    /// This absent arc could be added without crossing.
    Addable(Arc),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Crossing(x, y) => write!(f, "arcs {x} and {y} cross"),
            Violation::Addable(a) => write!(f, "arc {a} can be added without crossing"),
        }
    }
}

/// A descriptor that passed [`ArcSetDescriptor::validate`] and carries a
/// tail, so the arc collection really is a triangulation of the completed
/// ∞-gon (window-complete inside, canonical behaviour outside).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationDescriptor(ArcSetDescriptor);

impl TriangulationDescriptor {
    pub fn new(d: ArcSetDescriptor) -> Result<Self> {
        if d.tail().is_none() {
            return Err(Error::Descriptor(
                "a triangulation of the completed ∞-gon needs a tail specification".into(),
            ));
        }
        d.validate()
            .map_err(|v| Error::Descriptor(v.to_string()))?;
        Ok(TriangulationDescriptor(d))
    }

    pub fn descriptor(&self) -> &ArcSetDescriptor {
        &self.0
    }

    pub fn into_descriptor(self) -> ArcSetDescriptor {
        self.0
    }

    pub fn shift(&self, t: &Int) -> TriangulationDescriptor {
        TriangulationDescriptor(self.0.shift(t))
    }

    pub fn materialize(&self, region: &Interval) -> Vec<Arc> {
        self.0.materialize(region)
    }

    pub fn same_arc_set(&self, other: &TriangulationDescriptor) -> bool {
        self.0.same_arc_set(&other.0)
    }
}

/// The five mutually exclusive configurations of a completed-∞-gon
/// triangulation. For a split fountain bridged by wrapping arcs the left
/// fountain vertex is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Configuration {
    LocallyFinite,
    FountainAt(Int),
    LeftFanRightFountain(Int),
    RightFanLeftFountain(Int),
    DoubleFan,
}

/// The unique configuration of a valid triangulation, read from the tail.
pub fn classify(t: &TriangulationDescriptor) -> Configuration {
    match t.descriptor().tail() {
        Some(TailSpec::ZigZag { .. }) | None => Configuration::LocallyFinite,
        Some(TailSpec::Sided { left, right }) => match (left, right) {
            (SideTail::Fan, SideTail::Fan) => Configuration::DoubleFan,
            (SideTail::Fan, SideTail::Fountain(b)) => {
                Configuration::LeftFanRightFountain(b.clone())
            }
            (SideTail::Fountain(a), SideTail::Fan) => {
                Configuration::RightFanLeftFountain(a.clone())
            }
            (SideTail::Fountain(a), SideTail::Fountain(_)) => Configuration::FountainAt(a.clone()),
        },
    }
}

impl Configuration {
    pub fn shift(&self, t: &Int) -> Configuration {
        match self {
            Configuration::LocallyFinite => Configuration::LocallyFinite,
            Configuration::DoubleFan => Configuration::DoubleFan,
            Configuration::FountainAt(a) => Configuration::FountainAt(a - t),
            Configuration::LeftFanRightFountain(b) => Configuration::LeftFanRightFountain(b - t),
            Configuration::RightFanLeftFountain(a) => Configuration::RightFanLeftFountain(a - t),
        }
    }
}

/// Rigid: pairwise non-crossing and at most one infinite arc (any two
/// distinct infinite arcs carry an Ext¹ in one direction).
pub fn is_rigid(d: &ArcSetDescriptor) -> bool {
    if d.crossing_violation().is_some() {
        return false;
    }
    matches!(d.infinite_arc_count(), Some(n) if n <= 1)
}

/// Almost rigid: pairwise non-crossing (all extensions between non-crossing
/// arcs have indecomposable middle terms).
pub fn is_almost_rigid(d: &ArcSetDescriptor) -> bool {
    d.crossing_violation().is_none()
}

/// Maximal almost rigid: exactly the validated triangulations.
pub fn is_maximal_almost_rigid(d: &ArcSetDescriptor) -> bool {
    d.validate().is_ok()
}

/// The three shapes a maximal rigid subcategory can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximalRigidCase {
    /// A locally finite triangulation; only finite arcs.
    LocallyFinite,
    /// A split fountain plus a unique wrapping arc at one of its vertices.
    SplitFountainOneWrap,
    /// A fountain triangulation with its wrapping arc.
    Fountain,
}

/// Maximal rigid test with a case tag: rigid, no addable finite arc, and any
/// addable infinite arc would break rigidity (which requires a wrapping arc
/// to be present already).
pub fn is_maximal_rigid(d: &ArcSetDescriptor) -> Option<MaximalRigidCase> {
    if !is_rigid(d) {
        return None;
    }
    let addable = d.addable_candidates();
    if addable.iter().any(|a| a.is_finite()) {
        return None;
    }
    let wraps = d.core_wraps().len();
    if !addable.is_empty() && wraps == 0 {
        return None;
    }
    Some(if wraps == 0 {
        MaximalRigidCase::LocallyFinite
    } else if addable.is_empty() {
        MaximalRigidCase::Fountain
    } else {
        MaximalRigidCase::SplitFountainOneWrap
    })
}

/// Which ambient category a cluster-tilting question is asked in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// All graded MCM modules.
    Full,
    /// The subcategory of generically free modules; only finite arcs exist.
    GenericallyFree,
}

/// Cluster tilting test.
///
/// In the full category these are exactly the fountain triangulations with
/// their wrapping arc. In the generically free subcategory they are the
/// locally finite or single-fountain triangulations of the plain ∞-gon;
/// split fountains fail to be functorially finite.
pub fn is_cluster_tilting(d: &ArcSetDescriptor, ambient: Ambient) -> Result<bool> {
    match ambient {
        Ambient::Full => Ok(matches!(
            is_maximal_rigid(d),
            Some(MaximalRigidCase::Fountain)
        )),
        Ambient::GenericallyFree => {
            if d.infinite_arc_count() != Some(0) {
                return Err(Error::AmbientMismatch(
                    "generically free modules have only finite arcs".into(),
                ));
            }
            if d.crossing_violation().is_some() {
                return Ok(false);
            }
            // completeness against finite candidates only
            if d.addable_candidates().iter().any(|a| a.is_finite()) {
                return Ok(false);
            }
            Ok(match d.tail() {
                Some(TailSpec::ZigZag { .. }) => true,
                Some(TailSpec::Sided {
                    left: SideTail::Fountain(a),
                    right: SideTail::Fountain(b),
                }) => a == b,
                _ => false,
            })
        }
    }
}

/// Result of a precover or preenvelope request.
#[derive(Debug, Clone)]
pub enum ApproximationOutcome {
    /// The finite sum of arcs with the morphisms assembling the map.
    Found(Vec<(Arc, Morphism)>),
    /// No finite approximation exists; the witness family (truncated to the
    /// materialization region) forces the failure.
    Absent { family: Vec<Arc> },
}

fn truncated_family<F: Fn(&Int) -> Option<Arc>>(lo: &Int, hi: &Int, mk: F) -> Vec<Arc> {
    let mut out = Vec::new();
    let mut n = lo.clone();
    while n <= *hi {
        if let Some(a) = mk(&n) {
            out.push(a);
        }
        n += 1;
    }
    out
}

fn right_fountain_vertex(d: &ArcSetDescriptor) -> Option<Int> {
    match d.tail() {
        Some(TailSpec::Sided {
            right: SideTail::Fountain(b),
            ..
        }) => Some(b.clone()),
        _ => None,
    }
}

fn left_fountain_vertex(d: &ArcSetDescriptor) -> Option<Int> {
    match d.tail() {
        Some(TailSpec::Sided {
            left: SideTail::Fountain(a),
            ..
        }) => Some(a.clone()),
        _ => None,
    }
}

/// Every basis map from `summand` onto `target`, one entry per map.
fn maps_onto(summand: &Arc, target: &Arc) -> Vec<(Arc, Morphism)> {
    crate::hom::hom_basis(summand, target)
        .into_iter()
        .map(|b| {
            (
                summand.clone(),
                Morphism::basis(b.kind(), summand.clone(), target.clone()).unwrap(),
            )
        })
        .collect()
}

fn maps_from(source: &Arc, summand: &Arc) -> Vec<(Arc, Morphism)> {
    crate::hom::hom_basis(source, summand)
        .into_iter()
        .map(|b| {
            (
                summand.clone(),
                Morphism::basis(b.kind(), source.clone(), summand.clone()).unwrap(),
            )
        })
        .collect()
}

fn region_for(d: &ArcSetDescriptor, target: &Arc) -> Interval {
    let mut r = d.window().clone();
    r = r.hull(&Interval {
        lo: target.tgt().clone(),
        hi: target.tgt().clone(),
    });
    if let Some(a) = target.src_vertex() {
        r = r.hull(&Interval {
            lo: a.clone(),
            hi: a.clone(),
        });
    }
    r.padded(2)
}

/// Arcs of the set that can interact with `target` through morphisms: the
/// materialized region, plus — for zig-zag tails — the tail walked until
/// both endpoints are strictly clear of the region. A lopsided pattern keeps
/// one endpoint near the target for many steps, so those arcs can lie far
/// outside any fixed-width region.
fn interaction_arcs(d: &ArcSetDescriptor, region: &Interval, target: &Arc) -> Vec<Arc> {
    let mut arcs = d.materialize(region);
    if let Some(TailSpec::ZigZag { base, pattern }) = d.tail() {
        let mut bound = region.clone();
        bound = bound.hull(&region_for(d, target));
        let mut current = base.clone();
        let mut i = 0usize;
        loop {
            current = step_arc(&current, pattern[i % pattern.len()]);
            i += 1;
            let s = current.src_vertex().unwrap();
            let t = current.tgt();
            if *s < bound.lo && *t > bound.hi {
                break;
            }
            arcs.push(current.clone());
        }
        arcs.sort();
        arcs.dedup();
    }
    arcs
}

/// Boundary arcs of the projective cover of the module named by `arc`: one
/// free summand per generator.
pub fn projective_cover_arcs(arc: &Arc) -> Vec<Arc> {
    match arc.src_vertex() {
        Some(a) if !arc.is_boundary() => vec![
            Arc::new(Endpoint::Vertex(arc.tgt().clone()), arc.tgt() + 1).unwrap(),
            Arc::new(Endpoint::Vertex(a.clone()), a + 1).unwrap(),
        ],
        Some(_) => vec![arc.clone()],
        None => vec![Arc::new(Endpoint::Vertex(arc.tgt().clone()), arc.tgt() + 1).unwrap()],
    }
}

/// Boundary arcs of the injective envelope (projectives are injective here).
pub fn injective_envelope_arcs(arc: &Arc) -> Vec<Arc> {
    match arc.src_vertex() {
        Some(a) if !arc.is_boundary() => vec![
            Arc::new(Endpoint::Vertex(a - 1), a.clone()).unwrap(),
            Arc::new(Endpoint::Vertex(arc.tgt() - 1), arc.tgt().clone()).unwrap(),
        ],
        Some(_) => vec![arc.clone()],
        None => vec![Arc::new(Endpoint::Vertex(arc.tgt() - 1), arc.tgt().clone()).unwrap()],
    }
}

/// A precover of `target` by the maximal rigid set `d`: a finite sum mapping
/// onto every morphism into `target`, or the witness family when none exists.
///
/// The only obstructions are deep families of stably nonzero maps that no
/// single arc absorbs: every finite arc of a locally finite triangulation
/// maps onto an infinite target, and an unwrapped right fountain keeps
/// mapping onto targets reaching past its vertex.
pub fn precover(d: &ArcSetDescriptor, target: &Arc) -> Result<ApproximationOutcome> {
    if is_maximal_rigid(d).is_none() {
        return Err(Error::NotMaximalRigid);
    }
    if target.is_boundary() || d.contains(target) {
        return Ok(ApproximationOutcome::Found(vec![(
            target.clone(),
            Morphism::identity(target),
        )]));
    }
    let region = region_for(d, target);
    let wraps = d.core_wraps();

    if target.is_infinite() {
        let l = target.tgt();
        if matches!(d.tail(), Some(TailSpec::ZigZag { .. }) | None) {
            let family: Vec<Arc> = interaction_arcs(d, &region.padded(4), target)
                .into_iter()
                .filter(|a| a.is_finite() && a.src_vertex().unwrap() <= l)
                .collect();
            return Ok(ApproximationOutcome::Absent { family });
        }
        if let Some(v) = right_fountain_vertex(d) {
            if v <= *l && !wraps.iter().any(|w| v <= *w.tgt() && w.tgt() <= l) {
                let family = truncated_family(&region.lo, &(&region.hi + 4), |n| {
                    (*n > v).then(|| Arc::new(Endpoint::Vertex(v.clone()), n.clone()).unwrap())
                });
                return Ok(ApproximationOutcome::Absent { family });
            }
        }
    } else if let Some(v) = right_fountain_vertex(d) {
        // deep arcs (v, n) keep stably nonzero maps onto (p,q) when
        // p + 1 < v <= q; a wrap in [v, q] or a set arc (s, t) with
        // s <= p and v <= t <= q absorbs them
        let p = target.src_vertex().unwrap();
        let q = target.tgt();
        if p + 1 < v && v <= *q {
            let wrapped = wraps.iter().any(|w| v <= *w.tgt() && w.tgt() <= q);
            let absorbed = d.materialize(&region).into_iter().any(|s| {
                s.is_finite() && s.src_vertex().unwrap() <= p && v <= *s.tgt() && s.tgt() <= q
            });
            if !wrapped && !absorbed {
                let family = truncated_family(&region.lo, &(&region.hi + 4), |n| {
                    (*n > v).then(|| Arc::new(Endpoint::Vertex(v.clone()), n.clone()).unwrap())
                });
                return Ok(ApproximationOutcome::Absent { family });
            }
        }
    }

    // assemble: near arcs with stably nonzero maps, the left-fountain
    // absorber, and the projective cover of the target
    let mut summands: Vec<(Arc, Morphism)> = Vec::new();
    for arc in interaction_arcs(d, &region, target) {
        if stable_hom_dim(&arc, target) > 0 {
            summands.extend(maps_onto(&arc, target));
        }
    }
    if let Some(u) = left_fountain_vertex(d) {
        let bound = match target.src_vertex() {
            Some(p) => p.clone().min(target.tgt().clone()),
            None => target.tgt().clone(),
        };
        let s = bound.min(&d.window().lo - 1) - 1;
        if let Ok(absorber) = Arc::new(Endpoint::Vertex(s), u.clone()) {
            summands.extend(maps_onto(&absorber, target));
        }
    }
    for cover_arc in projective_cover_arcs(target) {
        summands.extend(maps_onto(&cover_arc, target));
    }
    summands.sort_by(|a, b| (a.0.clone(), format!("{:?}", a.1)).cmp(&(b.0.clone(), format!("{:?}", b.1))));
    summands.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    Ok(ApproximationOutcome::Found(summands))
}

/// Dual of [`precover`]: a finite sum receiving every morphism out of
/// `target`, or the witness family. The obstructions mirror the precover
/// ones with left and right exchanged.
pub fn preenvelope(d: &ArcSetDescriptor, target: &Arc) -> Result<ApproximationOutcome> {
    if is_maximal_rigid(d).is_none() {
        return Err(Error::NotMaximalRigid);
    }
    if target.is_boundary() || d.contains(target) {
        return Ok(ApproximationOutcome::Found(vec![(
            target.clone(),
            Morphism::identity(target),
        )]));
    }
    let region = region_for(d, target);
    let wraps = d.core_wraps();

    if target.is_infinite() {
        let l = target.tgt();
        if matches!(d.tail(), Some(TailSpec::ZigZag { .. }) | None) {
            let family: Vec<Arc> = interaction_arcs(d, &region.padded(4), target)
                .into_iter()
                .filter(|a| a.is_finite() && l <= a.tgt())
                .collect();
            return Ok(ApproximationOutcome::Absent { family });
        }
        if let Some(u) = left_fountain_vertex(d) {
            if *l <= u && !wraps.iter().any(|w| l <= w.tgt() && *w.tgt() <= u) {
                let family = truncated_family(&(&region.lo - 4), &region.hi, |n| {
                    (*n < u).then(|| Arc::new(Endpoint::Vertex(n.clone()), u.clone()).unwrap())
                });
                return Ok(ApproximationOutcome::Absent { family });
            }
        }
    } else if let Some(u) = left_fountain_vertex(d) {
        // deep arcs (m, u) keep receiving stably nonzero maps from (p,q)
        // when p <= u < q - 1; a wrap in [p, u] or a set arc (s, t) with
        // p <= s <= u and q <= t absorbs them
        let p = target.src_vertex().unwrap();
        let q = target.tgt();
        if p <= &u && &u + 1 < *q {
            let wrapped = wraps.iter().any(|w| p <= w.tgt() && *w.tgt() <= u);
            let absorbed = d.materialize(&region).into_iter().any(|s| {
                s.is_finite()
                    && p <= s.src_vertex().unwrap()
                    && *s.src_vertex().unwrap() <= u
                    && q <= s.tgt()
            });
            if !wrapped && !absorbed {
                let family = truncated_family(&(&region.lo - 4), &region.hi, |n| {
                    (*n < u).then(|| Arc::new(Endpoint::Vertex(n.clone()), u.clone()).unwrap())
                });
                return Ok(ApproximationOutcome::Absent { family });
            }
        }
    }

    let mut summands: Vec<(Arc, Morphism)> = Vec::new();
    for arc in interaction_arcs(d, &region, target) {
        if stable_hom_dim(target, &arc) > 0 {
            summands.extend(maps_from(target, &arc));
        }
    }
    if let Some(v) = right_fountain_vertex(d) {
        let bound = target.tgt().clone().max(&v + 1);
        let t = bound.max(&d.window().hi + 1) + 1;
        if let Ok(absorber) = Arc::new(Endpoint::Vertex(v.clone()), t) {
            summands.extend(maps_from(target, &absorber));
        }
    }
    for env_arc in injective_envelope_arcs(target) {
        summands.extend(maps_from(target, &env_arc));
    }
    summands.sort_by(|a, b| (a.0.clone(), format!("{:?}", a.1)).cmp(&(b.0.clone(), format!("{:?}", b.1))));
    summands.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
    Ok(ApproximationOutcome::Found(summands))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fountain_at_zero() -> ArcSetDescriptor {
        ArcSetDescriptor::new(
            Interval::of(-2, 2),
            vec![Arc::inf(0), Arc::fin(-2, 0), Arc::fin(0, 2)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(0)),
                right: SideTail::Fountain(int(0)),
            }),
        )
        .unwrap()
    }

    pub(crate) fn zigzag() -> ArcSetDescriptor {
        ArcSetDescriptor::new(
            Interval::of(-3, 3),
            vec![Arc::fin(-1, 1)],
            Some(TailSpec::ZigZag {
                base: Arc::fin(-1, 1),
                pattern: vec![ZigStep::Left, ZigStep::Right],
            }),
        )
        .unwrap()
    }

    pub(crate) fn double_fan() -> ArcSetDescriptor {
        ArcSetDescriptor::new(
            Interval::of(-1, 1),
            vec![Arc::inf(-1), Arc::inf(0), Arc::inf(1)],
            Some(TailSpec::Sided {
                left: SideTail::Fan,
                right: SideTail::Fan,
            }),
        )
        .unwrap()
    }

    /// Split fountain: left at -1, right at 1, single wrap at -1, and the
    /// bridging arc (-1, 1).
    pub(crate) fn split_fountain_one_wrap() -> ArcSetDescriptor {
        ArcSetDescriptor::new(
            Interval::of(-1, 1),
            vec![Arc::inf(-1), Arc::fin(-1, 1)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(-1)),
                right: SideTail::Fountain(int(1)),
            }),
        )
        .unwrap()
    }

    #[test]
    fn materialize_examples() {
        let arcs = double_fan().materialize(&Interval::of(-3, 3));
        let expected: Vec<Arc> = (-3..=3).map(Arc::inf).collect();
        assert_eq!(arcs, expected);

        let d = ArcSetDescriptor::new(
            Interval::of(-1, 1),
            vec![Arc::inf(0), Arc::fin(-1, 1)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(0)),
                right: SideTail::Fountain(int(0)),
            }),
        )
        .unwrap();
        let arcs = d.materialize(&Interval::of(0, 3));
        assert!(arcs.contains(&Arc::fin(0, 2)));
        assert!(arcs.contains(&Arc::fin(0, 3)));

        let arcs = zigzag().materialize(&Interval::of(-3, 3));
        for expected in [
            Arc::fin(-1, 1),
            Arc::fin(-2, 1),
            Arc::fin(-2, 2),
            Arc::fin(-3, 2),
            Arc::fin(-3, 3),
        ] {
            assert!(arcs.contains(&expected), "missing {expected}");
        }
        assert_eq!(arcs.len(), 5);
    }

    #[test]
    fn validate_examples() {
        assert!(fountain_at_zero().validate().is_ok());
        assert!(zigzag().validate().is_ok());
        assert!(double_fan().validate().is_ok());

        let crossing = ArcSetDescriptor::new(
            Interval::of(-3, 2),
            vec![Arc::fin(-3, 0), Arc::fin(-1, 2)],
            None,
        )
        .unwrap();
        assert!(matches!(
            crossing.validate(),
            Err(Violation::Crossing(_, _))
        ));

        // left fountain missing its wrapping arc: the wrap is addable
        let missing_wrap = ArcSetDescriptor::new(
            Interval::of(-1, 1),
            vec![Arc::inf(1), Arc::fin(-1, 1)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(-1)),
                right: SideTail::Fountain(int(1)),
            }),
        )
        .unwrap();
        assert_eq!(
            missing_wrap.validate(),
            Err(Violation::Addable(Arc::inf(-1)))
        );
    }

    #[test]
    fn classify_examples() {
        let t = TriangulationDescriptor::new(zigzag()).unwrap();
        assert_eq!(classify(&t), Configuration::LocallyFinite);

        let t = TriangulationDescriptor::new(fountain_at_zero()).unwrap();
        assert_eq!(classify(&t), Configuration::FountainAt(int(0)));

        let t = TriangulationDescriptor::new(double_fan()).unwrap();
        assert_eq!(classify(&t), Configuration::DoubleFan);
    }

    #[test]
    fn classify_shift_equivariant() {
        for d in [zigzag(), fountain_at_zero(), double_fan()] {
            let t = TriangulationDescriptor::new(d).unwrap();
            for s in [-3i64, 1, 7] {
                let shifted = t.shift(&int(s));
                assert_eq!(classify(&shifted), classify(&t).shift(&int(s)));
            }
        }
    }

    #[test]
    fn rigidity_hierarchy_examples() {
        let fountain = fountain_at_zero();
        assert!(is_rigid(&fountain));
        assert!(is_almost_rigid(&fountain));
        assert!(is_maximal_almost_rigid(&fountain));
        assert_eq!(
            is_maximal_rigid(&fountain),
            Some(MaximalRigidCase::Fountain)
        );

        let fan = double_fan();
        assert!(!is_rigid(&fan));
        assert!(is_maximal_almost_rigid(&fan));
        assert_eq!(is_maximal_rigid(&fan), None);

        let empty = ArcSetDescriptor::new(Interval::of(0, 1), vec![], None).unwrap();
        assert!(is_rigid(&empty));

        let crossing = ArcSetDescriptor::new(
            Interval::of(-3, 2),
            vec![Arc::fin(-3, 0), Arc::fin(-1, 2)],
            None,
        )
        .unwrap();
        assert!(!is_almost_rigid(&crossing));

        let zig = zigzag();
        assert_eq!(
            is_maximal_rigid(&zig),
            Some(MaximalRigidCase::LocallyFinite)
        );

        let split = split_fountain_one_wrap();
        assert!(is_almost_rigid(&split));
        assert!(!is_maximal_almost_rigid(&split));
        assert_eq!(
            is_maximal_rigid(&split),
            Some(MaximalRigidCase::SplitFountainOneWrap)
        );
    }

    #[test]
    fn split_fountain_with_interior_wrap_is_maximal_rigid() {
        // the wrap between the fountain vertices replaces the bridging arc:
        // it blocks every finite candidate spanning it, and adding either
        // missing wrap would break rigidity
        let d = ArcSetDescriptor::new(
            Interval::of(0, 2),
            vec![Arc::inf(1)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(0)),
                right: SideTail::Fountain(int(2)),
            }),
        )
        .unwrap();
        assert!(is_rigid(&d));
        assert_eq!(
            is_maximal_rigid(&d),
            Some(MaximalRigidCase::SplitFountainOneWrap)
        );
        assert!(!is_maximal_almost_rigid(&d));
        let addable = d.addable_candidates();
        assert_eq!(addable, vec![Arc::inf(0), Arc::inf(2)]);
        assert!(!is_cluster_tilting(&d, Ambient::Full).unwrap());
        // the unwrapped right fountain still blocks far precovers
        match precover(&d, &Arc::inf(5)).unwrap() {
            ApproximationOutcome::Absent { family } => {
                assert!(family.iter().all(|a| a.src_vertex() == Some(&int(2))));
            }
            _ => panic!("interior wrap cannot absorb the right fountain"),
        }
    }

    #[test]
    fn cluster_tilting_examples() {
        assert!(is_cluster_tilting(&fountain_at_zero(), Ambient::Full).unwrap());
        let fountain_free = ArcSetDescriptor::new(
            Interval::of(-2, 2),
            vec![Arc::fin(-2, 0), Arc::fin(0, 2)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(0)),
                right: SideTail::Fountain(int(0)),
            }),
        )
        .unwrap();
        assert!(is_cluster_tilting(&fountain_free, Ambient::GenericallyFree).unwrap());

        assert!(!is_cluster_tilting(&zigzag(), Ambient::Full).unwrap());
        assert!(is_cluster_tilting(&zigzag(), Ambient::GenericallyFree).unwrap());

        let split = split_fountain_one_wrap();
        assert!(!is_cluster_tilting(&split, Ambient::Full).unwrap());
        let split_free = ArcSetDescriptor::new(
            Interval::of(-1, 1),
            vec![Arc::fin(-1, 1)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(-1)),
                right: SideTail::Fountain(int(1)),
            }),
        )
        .unwrap();
        assert!(!is_cluster_tilting(&split_free, Ambient::GenericallyFree).unwrap());

        assert!(is_cluster_tilting(&split, Ambient::GenericallyFree).is_err());
    }

    #[test]
    fn greedy_completion_reaches_validity() {
        let d = ArcSetDescriptor::new(
            Interval::of(-2, 2),
            vec![Arc::inf(0)],
            Some(TailSpec::Sided {
                left: SideTail::Fountain(int(0)),
                right: SideTail::Fountain(int(0)),
            }),
        )
        .unwrap();
        let completed = d.completed_greedily();
        assert!(completed.validate().is_ok());
    }

    #[test]
    fn precover_examples() {
        // fountain at 0, target (-inf, 3): the wrap plus near arcs
        let d = fountain_at_zero();
        match precover(&d, &Arc::inf(3)).unwrap() {
            ApproximationOutcome::Found(parts) => {
                assert!(parts.iter().any(|(a, _)| a == &Arc::inf(0)));
                assert!(!parts.is_empty());
            }
            ApproximationOutcome::Absent { .. } => panic!("fountain precover must exist"),
        }

        // zig-zag, infinite target: no precover, nested witness family
        match precover(&zigzag(), &Arc::inf(0)).unwrap() {
            ApproximationOutcome::Absent { family } => {
                assert!(family.len() >= 2);
                assert!(family.iter().all(|a| a.is_finite()));
            }
            ApproximationOutcome::Found(_) => panic!("leapfrog cannot precover an infinite arc"),
        }

        // boundary target: trivial precover
        match precover(&d, &Arc::fin(0, 1)).unwrap() {
            ApproximationOutcome::Found(parts) => {
                assert_eq!(parts.len(), 1);
                assert_eq!(parts[0].0, Arc::fin(0, 1));
            }
            _ => panic!("boundary precover is the identity"),
        }

        // split fountain: the unwrapped right fountain blocks precovers of
        // far infinite arcs
        let split = split_fountain_one_wrap();
        match precover(&split, &Arc::inf(4)).unwrap() {
            ApproximationOutcome::Absent { family } => {
                assert!(!family.is_empty());
                assert!(family.iter().all(|a| a.src_vertex() == Some(&int(1))));
            }
            _ => panic!("unwrapped right fountain must block the precover"),
        }
    }

    #[test]
    fn preenvelope_examples() {
        let d = fountain_at_zero();
        match preenvelope(&d, &Arc::inf(3)).unwrap() {
            ApproximationOutcome::Found(parts) => assert!(!parts.is_empty()),
            _ => panic!("fountain preenvelope must exist"),
        }
        match preenvelope(&zigzag(), &Arc::inf(0)).unwrap() {
            ApproximationOutcome::Absent { family } => assert!(family.len() >= 2),
            _ => panic!("leapfrog cannot preenvelope an infinite arc"),
        }
    }

    #[test]
    fn zigzag_from_a_boundary_base() {
        // boundary arcs are implicit, so the base need not be stored
        let d = ArcSetDescriptor::new(
            Interval::of(-3, 3),
            vec![],
            Some(TailSpec::ZigZag {
                base: Arc::fin(0, 1),
                pattern: vec![ZigStep::Left, ZigStep::Right],
            }),
        )
        .unwrap();
        assert!(d.validate().is_ok());
        let t = TriangulationDescriptor::new(d).unwrap();
        assert_eq!(classify(&t), Configuration::LocallyFinite);
        let res = crate::mutation::flip(&t, &Arc::fin(-1, 1)).unwrap();
        assert!(res.new_triangulation.descriptor().validate().is_ok());
        let back = crate::mutation::flip(&res.new_triangulation, &res.added).unwrap();
        assert!(back.new_triangulation.same_arc_set(&t));
    }

    #[test]
    fn widen_absorbs_tails() {
        let d = fountain_at_zero();
        let w = d.widened(&Interval::of(-4, 4));
        assert!(w.core().contains(&Arc::fin(0, 3)));
        assert!(w.core().contains(&Arc::fin(-3, 0)));
        assert!(w.validate().is_ok());
        assert!(w.same_arc_set(&d));

        let z = zigzag();
        let w = z.widened(&Interval::of(-5, 5));
        assert!(w.core().contains(&Arc::fin(-2, 2)));
        assert!(w.validate().is_ok());
        assert!(w.same_arc_set(&z));
    }
}
