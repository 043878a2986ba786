//! Mutation of triangulations: mutability testing, quadrilateral flips,
//! left/right mutation with exchange data, scheduled mutation sequences with
//! window stabilization, and flip-graph enumeration for finite polygons.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Signed;

use crate::arc::{Arc, Endpoint, Int};
use crate::error::{Error, Result};
use crate::hom::{exchange_sequences, ExchangeSequence, MorphKind, Morphism};
use crate::triangulation::{
    injective_envelope_arcs, projective_cover_arcs, Interval, SideTail, TailSpec,
    TriangulationDescriptor,
};

/// Outcome of one flip.
#[derive(Debug, Clone)]
pub struct MutationResult {
    pub new_triangulation: TriangulationDescriptor,
    pub removed: Arc,
    pub added: Arc,
    /// Exchange sequences between `removed` and `added`: first with the
    /// removed arc on the left, then with the added arc on the left. One of
    /// the two is absent when only one direction carries an extension.
    pub exchange: Vec<ExchangeSequence>,
}

/// Does the triangulation have a left or right fountain at `n`? Fountains
/// only arise from tail specifications.
fn fountain_at(t: &TriangulationDescriptor, n: &Int) -> bool {
    match t.descriptor().tail() {
        Some(TailSpec::Sided { left, right }) => {
            matches!(left, SideTail::Fountain(a) if a == n)
                || matches!(right, SideTail::Fountain(b) if b == n)
        }
        _ => false,
    }
}

fn require_member(t: &TriangulationDescriptor, g: &Arc) -> Result<()> {
    if g.is_boundary() {
        return Err(Error::BoundaryArc(g.clone()));
    }
    if !t.descriptor().contains(g) {
        return Err(Error::NotInTriangulation(g.clone()));
    }
    Ok(())
}

/// An arc of a triangulation is mutable unless it is a wrapping arc: an
/// infinite arc whose endpoint carries a fountain.
pub fn is_mutable(t: &TriangulationDescriptor, g: &Arc) -> Result<bool> {
    require_member(t, g)?;
    Ok(!(g.is_infinite() && fountain_at(t, g.tgt())))
}

/// Materialized arcs around `g` wide enough to see both adjacent triangles.
fn local_arcs(t: &TriangulationDescriptor, g: &Arc, pad: i64) -> (Interval, Vec<Arc>) {
    let mut region = t.descriptor().window().clone();
    region = region.hull(&Interval {
        lo: g.tgt().clone(),
        hi: g.tgt().clone(),
    });
    if let Some(a) = g.src_vertex() {
        region = region.hull(&Interval {
            lo: a.clone(),
            hi: a.clone(),
        });
    }
    let region = region.padded(pad);
    let arcs = t.descriptor().materialize(&region);
    (region, arcs)
}

fn present(arcs: &[Arc], src: &Endpoint, tgt: &Int) -> bool {
    match src {
        Endpoint::Vertex(a) => {
            if tgt == &(a + 1) {
                return true; // boundary arcs are implicit
            }
            arcs.binary_search(&Arc::new(src.clone(), tgt.clone()).unwrap())
                .is_ok()
        }
        Endpoint::MinusInfinity => arcs.binary_search(&Arc::inf_at(tgt.clone())).is_ok(),
    }
}

/// The four vertices of the quadrilateral whose diagonal is `g`, in
/// increasing endpoint order.
pub fn quadrilateral(t: &TriangulationDescriptor, g: &Arc) -> Result<[Endpoint; 4]> {
    if !is_mutable(t, g)? {
        return Err(Error::NotMutable {
            arc: g.clone(),
            witness: vec![],
        });
    }
    // grow the search region until both triangles appear
    for pad in [4i64, 8, 16, 64] {
        let (region, arcs) = local_arcs(t, g, pad);
        if let Some(q) = find_quadrilateral(&arcs, &region, g) {
            return Ok(q);
        }
    }
    Err(Error::Descriptor(format!(
        "no quadrilateral found around {g}; descriptor is not a triangulation near it"
    )))
}

fn find_quadrilateral(arcs: &[Arc], region: &Interval, g: &Arc) -> Option<[Endpoint; 4]> {
    let b = g.tgt();
    match g.src_vertex() {
        // infinite diagonal (-inf, b): both triangles have -inf as a vertex
        None => {
            let mut left = None;
            let mut p = b - 1;
            while p >= region.lo {
                if present(arcs, &Endpoint::MinusInfinity, &p)
                    && present(arcs, &Endpoint::Vertex(p.clone()), b)
                {
                    left = Some(p);
                    break;
                }
                p -= 1;
            }
            let mut right = None;
            let mut q = b + 1;
            while q <= region.hi {
                if present(arcs, &Endpoint::MinusInfinity, &q)
                    && present(arcs, &Endpoint::Vertex(b.clone()), &q)
                {
                    right = Some(q);
                    break;
                }
                q += 1;
            }
            let (p, q) = (left?, right?);
            Some([
                Endpoint::MinusInfinity,
                Endpoint::Vertex(p),
                Endpoint::Vertex(b.clone()),
                Endpoint::Vertex(q),
            ])
        }
        Some(a) => {
            // inner apex: the unique vertex c in (a, b) with both sides present
            let mut inner = None;
            let mut c = a + 1;
            while c < *b {
                if present(arcs, &Endpoint::Vertex(a.clone()), &c)
                    && present(arcs, &Endpoint::Vertex(c.clone()), b)
                {
                    inner = Some(c);
                    break;
                }
                c += 1;
            }
            let inner = inner?;
            // outer apex: -inf, or a vertex left of a, or right of b
            if present(arcs, &Endpoint::MinusInfinity, a)
                && present(arcs, &Endpoint::MinusInfinity, b)
            {
                return Some([
                    Endpoint::MinusInfinity,
                    Endpoint::Vertex(a.clone()),
                    Endpoint::Vertex(inner),
                    Endpoint::Vertex(b.clone()),
                ]);
            }
            let mut d: Int = a - 1;
            while d >= region.lo {
                if present(arcs, &Endpoint::Vertex(d.clone()), a)
                    && present(arcs, &Endpoint::Vertex(d.clone()), b)
                {
                    return Some([
                        Endpoint::Vertex(d),
                        Endpoint::Vertex(a.clone()),
                        Endpoint::Vertex(inner),
                        Endpoint::Vertex(b.clone()),
                    ]);
                }
                d -= 1;
            }
            let mut d = b + 1;
            while d <= region.hi {
                if present(arcs, &Endpoint::Vertex(a.clone()), &d)
                    && present(arcs, &Endpoint::Vertex(b.clone()), &d)
                {
                    return Some([
                        Endpoint::Vertex(a.clone()),
                        Endpoint::Vertex(inner),
                        Endpoint::Vertex(b.clone()),
                        Endpoint::Vertex(d),
                    ]);
                }
                d += 1;
            }
            None
        }
    }
}

/// The other diagonal of the quadrilateral: its two vertices not on `g`.
fn other_diagonal(quad: &[Endpoint; 4], g: &Arc) -> Arc {
    let on_g = |e: &Endpoint| match (e, g.src_vertex()) {
        (Endpoint::MinusInfinity, None) => true,
        (Endpoint::Vertex(v), None) => v == g.tgt(),
        (Endpoint::MinusInfinity, Some(_)) => false,
        (Endpoint::Vertex(v), Some(a)) => v == a || v == g.tgt(),
    };
    let others: Vec<&Endpoint> = quad.iter().filter(|e| !on_g(e)).collect();
    debug_assert_eq!(others.len(), 2);
    match (others[0], others[1]) {
        (Endpoint::MinusInfinity, Endpoint::Vertex(v)) => Arc::inf_at(v.clone()),
        (Endpoint::Vertex(v), Endpoint::MinusInfinity) => Arc::inf_at(v.clone()),
        (Endpoint::Vertex(v), Endpoint::Vertex(w)) => {
            let (lo, hi) = if v < w { (v, w) } else { (w, v) };
            Arc::new(Endpoint::Vertex(lo.clone()), hi.clone()).unwrap()
        }
        _ => unreachable!("a quadrilateral has at most one accumulation vertex"),
    }
}

/// Replace the mutable arc `g` by the other diagonal of its quadrilateral.
/// An involution: flipping the added arc restores the original set.
pub fn flip(t: &TriangulationDescriptor, g: &Arc) -> Result<MutationResult> {
    if !is_mutable(t, g)? {
        return Err(Error::NotMutable {
            arc: g.clone(),
            witness: wrap_witness(t, g),
        });
    }
    let quad = quadrilateral(t, g)?;
    let added = other_diagonal(&quad, g);

    // widen so that g and the quadrilateral live in the core
    let mut cover = Interval {
        lo: added.tgt().clone(),
        hi: added.tgt().clone(),
    };
    for e in &quad {
        if let Endpoint::Vertex(v) = e {
            cover = cover.hull(&Interval {
                lo: v.clone(),
                hi: v.clone(),
            });
        }
    }
    let wide = t.descriptor().widened(&cover.padded(1));
    let new_desc = wide.replace_core_arc(g, added.clone())?;
    let new_triangulation = TriangulationDescriptor::new(new_desc)?;

    let mut exchange = Vec::new();
    exchange.extend(exchange_sequences(g, &added));
    exchange.extend(exchange_sequences(&added, g));
    Ok(MutationResult {
        new_triangulation,
        removed: g.clone(),
        added,
        exchange,
    })
}

/// Fountain arcs witnessing that a wrapping arc has no approximation on the
/// fountain side, truncated near the window.
fn wrap_witness(t: &TriangulationDescriptor, g: &Arc) -> Vec<Arc> {
    let d = t.descriptor();
    let region = d.window().padded(3);
    d.materialize(&region)
        .into_iter()
        .filter(|a| {
            a.is_finite()
                && (a.tgt() == g.tgt() || a.src_vertex() == Some(g.tgt()))
        })
        .take(6)
        .collect()
}

/// One side of the approximation pair for an arc.
#[derive(Debug, Clone)]
pub enum ApproxSide {
    Found {
        /// Arcs the approximation factors through, with the map components.
        through: Vec<(Arc, Morphism)>,
        /// The exchange object: cokernel of a left approximation, kernel of
        /// a right one.
        completion: Arc,
    },
    Absent {
        witness: Vec<Arc>,
    },
}

impl ApproxSide {
    pub fn is_found(&self) -> bool {
        matches!(self, ApproxSide::Found { .. })
    }
}

/// Left and right `add(A \ X)`-approximations of `X = g`.
#[derive(Debug, Clone)]
pub struct Approximations {
    pub left: ApproxSide,
    pub right: ApproxSide,
}

/// Approximations of `g` inside its triangulation.
///
/// For a mutable arc both sides are read off the exchange sequences. A
/// wrapping arc at a left fountain has no left approximation (the fountain
/// arcs witness it) while its right approximation is the projective cover
/// epimorphism, whose kernel is the neighbouring wrap; dually at a right
/// fountain.
pub fn approximations(t: &TriangulationDescriptor, g: &Arc) -> Result<Approximations> {
    require_member(t, g)?;
    if is_mutable(t, g)? {
        let quad = quadrilateral(t, g)?;
        let partner = other_diagonal(&quad, g);
        // g on the left: 0 -> g -> E -> partner -> 0 gives the left approximation
        let left_seq = exchange_sequences(g, &partner);
        // g on the right: 0 -> partner -> E' -> g -> 0 gives the right approximation
        let right_seq = exchange_sequences(&partner, g);
        let left = left_seq
            .first()
            .map(|s| ApproxSide::Found {
                through: s.middle.iter().cloned().zip(s.incl.iter().cloned()).collect(),
                completion: partner.clone(),
            })
            .unwrap_or(ApproxSide::Absent { witness: vec![] });
        let right = right_seq
            .first()
            .map(|s| ApproxSide::Found {
                through: s.middle.iter().cloned().zip(s.proj.iter().cloned()).collect(),
                completion: partner.clone(),
            })
            .unwrap_or(ApproxSide::Absent { witness: vec![] });
        return Ok(Approximations { left, right });
    }

    // g is a wrapping arc (-inf, n) with a fountain at n
    let n = g.tgt();
    let (left_fountain, right_fountain) = match t.descriptor().tail() {
        Some(TailSpec::Sided { left, right }) => (
            matches!(left, SideTail::Fountain(a) if a == n),
            matches!(right, SideTail::Fountain(b) if b == n),
        ),
        _ => (false, false),
    };
    let witness_left: Vec<Arc> = wrap_witness(t, g)
        .into_iter()
        .filter(|a| a.tgt() == n)
        .collect();
    let witness_right: Vec<Arc> = wrap_witness(t, g)
        .into_iter()
        .filter(|a| a.src_vertex() == Some(n))
        .collect();

    let left = if left_fountain {
        ApproxSide::Absent {
            witness: witness_left,
        }
    } else {
        // injective envelope: 0 -> g -> (n-1, n) -> (-inf, n-1) -> 0
        let env = injective_envelope_arcs(g).remove(0);
        let map = Morphism::basis(MorphKind::InfToFin, g.clone(), env.clone())?;
        ApproxSide::Found {
            through: vec![(env, map)],
            completion: Arc::inf_at(n - 1),
        }
    };
    let right = if right_fountain {
        ApproxSide::Absent {
            witness: witness_right,
        }
    } else {
        // projective cover: 0 -> (-inf, n+1) -> (n, n+1) -> g -> 0
        let cover = projective_cover_arcs(g).remove(0);
        let map = Morphism::basis(MorphKind::FinToInf, cover.clone(), g.clone())?;
        ApproxSide::Found {
            through: vec![(cover, map)],
            completion: Arc::inf_at(n + 1),
        }
    };
    Ok(Approximations { left, right })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Left,
    Right,
}

/// Categorical mutation: defined only when both approximations exist, in
/// which case either direction equals the quadrilateral flip.
pub fn mutate_subcategory(
    t: &TriangulationDescriptor,
    g: &Arc,
    _direction: Direction,
) -> Result<MutationResult> {
    let approx = approximations(t, g)?;
    match (&approx.left, &approx.right) {
        (ApproxSide::Found { .. }, ApproxSide::Found { .. }) => {
            let result = flip(t, g)?;
            if let ApproxSide::Found { completion, .. } = &approx.left {
                debug_assert_eq!(completion, &result.added);
            }
            Ok(result)
        }
        (ApproxSide::Absent { witness }, _) | (_, ApproxSide::Absent { witness }) => {
            Err(Error::NotMutable {
                arc: g.clone(),
                witness: witness.clone(),
            })
        }
    }
}

/// One step of a mutation schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    /// Flip this exact arc.
    Arc(Arc),
    /// Flip the mutable wrap nearest to `vertex` (excluding `(-inf, vertex)`
    /// itself, ties broken towards the right); drives a fan towards a
    /// fountain at `vertex`.
    TowardFountain(Int),
}

/// An ordered list of selectors, repeated `repeat` times, with a hard step
/// budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    pub steps: Vec<Selector>,
    pub repeat: u32,
    pub budget: u32,
}

impl Schedule {
    pub fn once(steps: Vec<Selector>) -> Self {
        Schedule {
            steps,
            repeat: 1,
            budget: 256,
        }
    }
}

/// Why a schedule stopped early.
#[derive(Debug, Clone)]
pub struct HaltReport {
    pub step: usize,
    pub arc: Option<Arc>,
    pub reason: String,
}

/// Trajectory of a schedule run with a stabilization report for `region`.
#[derive(Debug, Clone)]
pub struct ScheduleOutcome {
    pub trajectory: Vec<TriangulationDescriptor>,
    /// Index of the first step after which the restriction to the region
    /// never changed again; `None` when the final step still changed it.
    pub stabilized_after: Option<usize>,
    pub halted: Option<HaltReport>,
}

fn resolve_selector(
    t: &TriangulationDescriptor,
    sel: &Selector,
    region: &Interval,
) -> std::result::Result<Arc, String> {
    match sel {
        Selector::Arc(a) => Ok(a.clone()),
        Selector::TowardFountain(v) => {
            // wraps visible a little beyond the stabilization region
            let search = region.padded(2).hull(&t.descriptor().window().clone());
            let mut best: Option<Arc> = None;
            for arc in t.materialize(&search) {
                if !arc.is_infinite() || arc.tgt() == v {
                    continue;
                }
                if !is_mutable(t, &arc).unwrap_or(false) {
                    continue;
                }
                let dist = (arc.tgt() - v).abs();
                let better = match &best {
                    None => true,
                    Some(b) => {
                        let bd = (b.tgt() - v).abs();
                        dist < bd || (dist == bd && arc.tgt() > b.tgt())
                    }
                };
                if better {
                    best = Some(arc);
                }
            }
            best.ok_or_else(|| "no mutable wrap available".to_string())
        }
    }
}

/// Arcs of the triangulation with every endpoint inside the region.
fn restriction(t: &TriangulationDescriptor, region: &Interval) -> Vec<Arc> {
    t.materialize(region)
        .into_iter()
        .filter(|a| region.contains_arc(a))
        .collect()
}

/// Apply the schedule lazily, reporting when the restriction of the
/// triangulation to `region` stops changing.
pub fn apply_schedule(
    t: &TriangulationDescriptor,
    schedule: &Schedule,
    region: &Interval,
) -> ScheduleOutcome {
    let mut trajectory = vec![t.clone()];
    let mut snapshots = vec![restriction(t, region)];
    let mut halted = None;
    let mut step = 0usize;

    'outer: for _round in 0..schedule.repeat {
        for sel in &schedule.steps {
            if step as u32 >= schedule.budget {
                break 'outer;
            }
            let current = trajectory.last().unwrap().clone();
            let arc = match resolve_selector(&current, sel, region) {
                Ok(a) => a,
                Err(reason) => {
                    halted = Some(HaltReport {
                        step,
                        arc: None,
                        reason,
                    });
                    break 'outer;
                }
            };
            match flip(&current, &arc) {
                Ok(res) => {
                    snapshots.push(restriction(&res.new_triangulation, region));
                    trajectory.push(res.new_triangulation);
                    step += 1;
                }
                Err(e) => {
                    halted = Some(HaltReport {
                        step,
                        arc: Some(arc),
                        reason: e.to_string(),
                    });
                    break 'outer;
                }
            }
        }
    }

    let mut last_change = 0usize;
    for i in 1..snapshots.len() {
        if snapshots[i] != snapshots[i - 1] {
            last_change = i;
        }
    }
    let stabilized_after = if snapshots.len() > 1 && last_change == snapshots.len() - 1 {
        None
    } else {
        Some(last_change)
    };
    ScheduleOutcome {
        trajectory,
        stabilized_after,
        halted,
    }
}

/// Flip graph of triangulations of a convex polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipGraph {
    pub polygon: u32,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
}

type Diag = (u8, u8);
type PolyTri = BTreeSet<Diag>;

/// All triangulations of the convex polygon on vertices `lo..=hi`, by the
/// classic recursion on the triangle over the edge `(lo, hi)`.
fn enumerate_triangulations(lo: u8, hi: u8) -> Vec<PolyTri> {
    if hi - lo < 2 {
        return vec![PolyTri::new()];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        for left in enumerate_triangulations(lo, apex) {
            for right in enumerate_triangulations(apex, hi) {
                let mut t = PolyTri::new();
                t.extend(left.iter().cloned());
                t.extend(right.iter().cloned());
                if apex - lo >= 2 {
                    t.insert((lo, apex));
                }
                if hi - apex >= 2 {
                    t.insert((apex, hi));
                }
                out.push(t);
            }
        }
    }
    out
}

/// Flip one diagonal inside a polygon triangulation.
fn flip_diagonal(t: &PolyTri, d: Diag, m: u8) -> Diag {
    let has_edge = |a: u8, b: u8| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b == a + 1 || (a == 0 && b == m - 1) || t.contains(&(a, b))
    };
    let (a, b) = d;
    let mut apexes = Vec::new();
    for c in 0..m {
        if c != a && c != b && has_edge(a, c) && has_edge(c, b) {
            apexes.push(c);
        }
    }
    debug_assert_eq!(apexes.len(), 2, "diagonal must bound two triangles");
    let (p, q) = (apexes[0].min(apexes[1]), apexes[0].max(apexes[1]));
    (p, q)
}

/// Enumerate all triangulations of an `m`-gon, build the flip graph, and
/// report its size and connectivity.
pub fn exchange_graph(polygon: u32) -> Result<FlipGraph> {
    if polygon < 3 {
        return Err(Error::MalformedInput(
            "a polygon needs at least 3 vertices".into(),
        ));
    }
    if polygon > 12 {
        return Err(Error::PolygonTooLarge(polygon));
    }
    let m = polygon as u8;
    let tris = enumerate_triangulations(0, m - 1);
    let index: BTreeMap<PolyTri, usize> = tris
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); tris.len()];
    for (i, t) in tris.iter().enumerate() {
        for &d in t.iter() {
            let new_d = flip_diagonal(t, d, m);
            let mut t2 = t.clone();
            t2.remove(&d);
            t2.insert(new_d);
            let j = *index.get(&t2).expect("flip stays a triangulation");
            let key = (i.min(j), i.max(j));
            if edges.insert(key) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    // BFS connectivity
    let mut seen = vec![false; tris.len()];
    let mut queue = VecDeque::new();
    if !tris.is_empty() {
        seen[0] = true;
        queue.push_back(0usize);
    }
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(FlipGraph {
        polygon,
        vertices: tris.len(),
        edges: edges.len(),
        connected: seen.iter().all(|&s| s),
    })
}
