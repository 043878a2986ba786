//! JSON wire formats.
//!
//! Arcs are two-element arrays `[a, b]` where `a` is an integer or the
//! string `"-inf"`. Rational scalars are `"p/q"` strings (`"p"` when the
//! denominator is 1). Triangulation descriptors are
//! `{"window": [lo, hi], "core": [arc, ...], "tail": {...}}` with tail kinds
//! `"zigzag"`, `"sided"` and `"none"`.
//!
//! Vertex coordinates are arbitrary precision internally; on the wire they
//! must fit in an `i64` and anything larger is a loud serialization error.

use std::str::FromStr;

use serde::de::Error as DeError;
use serde::ser::Error as SerError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::arc::{Arc, Endpoint, Int};
use crate::error::{Error, Result};
use crate::hom::{ExchangeSequence, MorphKind, Morphism};
use crate::mutation::{
    ApproxSide, Approximations, FlipGraph, HaltReport, MutationResult, Schedule, ScheduleOutcome,
    Selector,
};
use crate::oracle::linalg::Rat;
use crate::triangulation::{
    ApproximationOutcome, ArcSetDescriptor, Configuration, Interval, MaximalRigidCase, SideTail,
    TailSpec, TriangulationDescriptor, Violation, ZigStep,
};

fn int_value(n: &Int) -> Result<Value> {
    let small: i64 = n
        .try_into()
        .map_err(|_| Error::MalformedInput(format!("{n} does not fit in the JSON integer range")))?;
    Ok(json!(small))
}

fn int_from_value(v: &Value) -> Result<Int> {
    v.as_i64()
        .map(Int::from)
        .ok_or_else(|| Error::MalformedInput(format!("expected an integer, found {v}")))
}

pub fn arc_value(a: &Arc) -> Result<Value> {
    let src = match a.src() {
        Endpoint::MinusInfinity => json!("-inf"),
        Endpoint::Vertex(n) => int_value(n)?,
    };
    Ok(Value::Array(vec![src, int_value(a.tgt())?]))
}

pub fn arc_from_value(v: &Value) -> Result<Arc> {
    let items = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::MalformedInput(format!("an arc is a two-element array, found {v}")))?;
    let src = match &items[0] {
        Value::String(s) if s == "-inf" => Endpoint::MinusInfinity,
        other => Endpoint::Vertex(int_from_value(other)?),
    };
    Arc::new(src, int_from_value(&items[1])?)
}

fn rat_value(r: &Rat) -> Value {
    json!(r.to_string())
}

fn rat_from_value(v: &Value) -> Result<Rat> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::MalformedInput(format!("a rational is a \"p/q\" string, found {v}")))?;
    Rat::from_str(s).map_err(|e| Error::MalformedInput(format!("bad rational {s}: {e}")))
}

pub fn morphism_value(m: &Morphism) -> Result<Value> {
    let mut coeffs = Map::new();
    for (&k, c) in m.coeffs() {
        coeffs.insert(k.wire_name().to_string(), rat_value(c));
    }
    Ok(json!({
        "src": arc_value(m.src())?,
        "tgt": arc_value(m.tgt())?,
        "coeffs": Value::Object(coeffs),
    }))
}

pub fn morphism_from_value(v: &Value) -> Result<Morphism> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("a morphism is an object".into()))?;
    let src = arc_from_value(obj.get("src").ok_or_else(missing("src"))?)?;
    let tgt = arc_from_value(obj.get("tgt").ok_or_else(missing("tgt"))?)?;
    let mut coeffs = std::collections::BTreeMap::new();
    if let Some(cs) = obj.get("coeffs") {
        let cs = cs
            .as_object()
            .ok_or_else(|| Error::MalformedInput("coeffs must be an object".into()))?;
        for (k, cv) in cs {
            let kind = MorphKind::from_wire(k)
                .ok_or_else(|| Error::MalformedInput(format!("unknown morphism kind {k}")))?;
            coeffs.insert(kind, rat_from_value(cv)?);
        }
    }
    Morphism::from_coeffs(src, tgt, coeffs)
}

fn missing(field: &'static str) -> impl Fn() -> Error {
    move || Error::MalformedInput(format!("missing field \"{field}\""))
}

pub fn sequence_value(s: &ExchangeSequence) -> Result<Value> {
    Ok(json!({
        "left": arc_value(&s.left)?,
        "middle": s.middle.iter().map(arc_value).collect::<Result<Vec<_>>>()?,
        "right": arc_value(&s.right)?,
        "incl": s.incl.iter().map(morphism_value).collect::<Result<Vec<_>>>()?,
        "proj": s.proj.iter().map(morphism_value).collect::<Result<Vec<_>>>()?,
    }))
}

pub fn sequence_from_value(v: &Value) -> Result<ExchangeSequence> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("an exchange sequence is an object".into()))?;
    let arcs = |key: &'static str| -> Result<Vec<Arc>> {
        obj.get(key)
            .and_then(Value::as_array)
            .ok_or_else(missing(key))?
            .iter()
            .map(arc_from_value)
            .collect()
    };
    let morphisms = |key: &'static str| -> Result<Vec<Morphism>> {
        obj.get(key)
            .and_then(Value::as_array)
            .ok_or_else(missing(key))?
            .iter()
            .map(morphism_from_value)
            .collect()
    };
    let seq = ExchangeSequence {
        left: arc_from_value(obj.get("left").ok_or_else(missing("left"))?)?,
        middle: arcs("middle")?,
        right: arc_from_value(obj.get("right").ok_or_else(missing("right"))?)?,
        incl: morphisms("incl")?,
        proj: morphisms("proj")?,
    };
    seq.check_shape()?;
    Ok(seq)
}

pub fn interval_value(i: &Interval) -> Result<Value> {
    Ok(Value::Array(vec![int_value(&i.lo)?, int_value(&i.hi)?]))
}

pub fn interval_from_value(v: &Value) -> Result<Interval> {
    let items = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::MalformedInput("an interval is a two-element array".into()))?;
    Interval::new(int_from_value(&items[0])?, int_from_value(&items[1])?)
}

fn pattern_string(pattern: &[ZigStep]) -> String {
    pattern
        .iter()
        .map(|s| match s {
            ZigStep::Left => 'L',
            ZigStep::Right => 'R',
        })
        .collect()
}

fn pattern_from_str(s: &str) -> Result<Vec<ZigStep>> {
    s.chars()
        .map(|c| match c {
            'L' => Ok(ZigStep::Left),
            'R' => Ok(ZigStep::Right),
            other => Err(Error::MalformedInput(format!(
                "zig-zag pattern letters are L and R, found {other}"
            ))),
        })
        .collect()
}

fn side_value(side: &SideTail) -> Result<Value> {
    Ok(match side {
        SideTail::Fan => json!({"kind": "fan"}),
        SideTail::Fountain(a) => json!({"kind": "fountain", "vertex": int_value(a)?}),
    })
}

fn side_from_value(v: &Value) -> Result<SideTail> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("a tail side is an object".into()))?;
    match obj.get("kind").and_then(Value::as_str) {
        Some("fan") => Ok(SideTail::Fan),
        Some("fountain") => Ok(SideTail::Fountain(int_from_value(
            obj.get("vertex").ok_or_else(missing("vertex"))?,
        )?)),
        other => Err(Error::MalformedInput(format!(
            "unknown tail side kind {other:?}"
        ))),
    }
}

pub fn tail_value(tail: Option<&TailSpec>) -> Result<Value> {
    Ok(match tail {
        None => json!({"kind": "none"}),
        Some(TailSpec::ZigZag { base, pattern }) => json!({
            "kind": "zigzag",
            "base": arc_value(base)?,
            "pattern": pattern_string(pattern),
        }),
        Some(TailSpec::Sided { left, right }) => json!({
            "kind": "sided",
            "left": side_value(left)?,
            "right": side_value(right)?,
        }),
    })
}

pub fn tail_from_value(v: &Value) -> Result<Option<TailSpec>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("a tail is an object".into()))?;
    match obj.get("kind").and_then(Value::as_str) {
        Some("none") => Ok(None),
        Some("zigzag") => Ok(Some(TailSpec::ZigZag {
            base: arc_from_value(obj.get("base").ok_or_else(missing("base"))?)?,
            pattern: pattern_from_str(
                obj.get("pattern")
                    .and_then(Value::as_str)
                    .ok_or_else(missing("pattern"))?,
            )?,
        })),
        Some("sided") => Ok(Some(TailSpec::Sided {
            left: side_from_value(obj.get("left").ok_or_else(missing("left"))?)?,
            right: side_from_value(obj.get("right").ok_or_else(missing("right"))?)?,
        })),
        other => Err(Error::MalformedInput(format!("unknown tail kind {other:?}"))),
    }
}

pub fn descriptor_value(d: &ArcSetDescriptor) -> Result<Value> {
    Ok(json!({
        "window": interval_value(d.window())?,
        "core": d.core().iter().map(arc_value).collect::<Result<Vec<_>>>()?,
        "tail": tail_value(d.tail())?,
    }))
}

pub fn descriptor_from_value(v: &Value) -> Result<ArcSetDescriptor> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("a descriptor is an object".into()))?;
    let window = interval_from_value(obj.get("window").ok_or_else(missing("window"))?)?;
    let core = obj
        .get("core")
        .and_then(Value::as_array)
        .ok_or_else(missing("core"))?
        .iter()
        .map(arc_from_value)
        .collect::<Result<Vec<_>>>()?;
    let tail = match obj.get("tail") {
        None => None,
        Some(t) => tail_from_value(t)?,
    };
    ArcSetDescriptor::new(window, core, tail)
}

pub fn configuration_value(c: &Configuration) -> Result<Value> {
    Ok(match c {
        Configuration::LocallyFinite => json!({"kind": "locally-finite"}),
        Configuration::FountainAt(a) => json!({"kind": "fountain", "at": int_value(a)?}),
        Configuration::LeftFanRightFountain(b) => {
            json!({"kind": "left-fan-right-fountain", "at": int_value(b)?})
        }
        Configuration::RightFanLeftFountain(a) => {
            json!({"kind": "right-fan-left-fountain", "at": int_value(a)?})
        }
        Configuration::DoubleFan => json!({"kind": "double-fan"}),
    })
}

pub fn violation_value(v: &Violation) -> Result<Value> {
    Ok(match v {
        Violation::Crossing(x, y) => json!({
            "kind": "crossing",
            "witness": [arc_value(x)?, arc_value(y)?],
        }),
        Violation::Addable(a) => json!({"kind": "addable", "witness": arc_value(a)?}),
    })
}

pub fn rigid_case_value(c: MaximalRigidCase) -> Value {
    match c {
        MaximalRigidCase::LocallyFinite => json!("locally-finite"),
        MaximalRigidCase::SplitFountainOneWrap => json!("split-fountain-one-wrap"),
        MaximalRigidCase::Fountain => json!("fountain"),
    }
}

pub fn approximation_outcome_value(o: &ApproximationOutcome) -> Result<Value> {
    Ok(match o {
        ApproximationOutcome::Found(parts) => json!({
            "found": true,
            "summands": parts
                .iter()
                .map(|(a, m)| Ok(json!({"arc": arc_value(a)?, "map": morphism_value(m)?})))
                .collect::<Result<Vec<_>>>()?,
        }),
        ApproximationOutcome::Absent { family } => json!({
            "found": false,
            "witness": family.iter().map(arc_value).collect::<Result<Vec<_>>>()?,
        }),
    })
}

pub fn approx_side_value(s: &ApproxSide) -> Result<Value> {
    Ok(match s {
        ApproxSide::Found {
            through,
            completion,
        } => json!({
            "found": true,
            "through": through
                .iter()
                .map(|(a, m)| Ok(json!({"arc": arc_value(a)?, "map": morphism_value(m)?})))
                .collect::<Result<Vec<_>>>()?,
            "completion": arc_value(completion)?,
        }),
        ApproxSide::Absent { witness } => json!({
            "found": false,
            "witness": witness.iter().map(arc_value).collect::<Result<Vec<_>>>()?,
        }),
    })
}

pub fn approximations_value(a: &Approximations) -> Result<Value> {
    Ok(json!({
        "left": approx_side_value(&a.left)?,
        "right": approx_side_value(&a.right)?,
    }))
}

pub fn mutation_result_value(m: &MutationResult) -> Result<Value> {
    Ok(json!({
        "removed": arc_value(&m.removed)?,
        "added": arc_value(&m.added)?,
        "exchange": m
            .exchange
            .iter()
            .map(sequence_value)
            .collect::<Result<Vec<_>>>()?,
        "triangulation": descriptor_value(m.new_triangulation.descriptor())?,
    }))
}

pub fn selector_value(s: &Selector) -> Result<Value> {
    Ok(match s {
        Selector::Arc(a) => json!({"arc": arc_value(a)?}),
        Selector::TowardFountain(v) => {
            json!({"rule": "toward-fountain", "vertex": int_value(v)?})
        }
    })
}

pub fn selector_from_value(v: &Value) -> Result<Selector> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("a selector is an object".into()))?;
    if let Some(a) = obj.get("arc") {
        return Ok(Selector::Arc(arc_from_value(a)?));
    }
    match obj.get("rule").and_then(Value::as_str) {
        Some("toward-fountain") => Ok(Selector::TowardFountain(int_from_value(
            obj.get("vertex").ok_or_else(missing("vertex"))?,
        )?)),
        other => Err(Error::MalformedInput(format!(
            "unknown schedule rule {other:?}"
        ))),
    }
}

pub fn schedule_value(s: &Schedule) -> Result<Value> {
    Ok(json!({
        "steps": s.steps.iter().map(selector_value).collect::<Result<Vec<_>>>()?,
        "repeat": s.repeat,
        "budget": s.budget,
    }))
}

pub fn schedule_from_value(v: &Value) -> Result<Schedule> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::MalformedInput("a schedule is an object".into()))?;
    let steps = obj
        .get("steps")
        .and_then(Value::as_array)
        .ok_or_else(missing("steps"))?
        .iter()
        .map(selector_from_value)
        .collect::<Result<Vec<_>>>()?;
    let repeat = obj.get("repeat").and_then(Value::as_u64).unwrap_or(1) as u32;
    let budget = obj.get("budget").and_then(Value::as_u64).unwrap_or(256) as u32;
    Ok(Schedule {
        steps,
        repeat,
        budget,
    })
}

pub fn halt_value(h: &HaltReport) -> Result<Value> {
    Ok(json!({
        "step": h.step,
        "arc": match &h.arc { Some(a) => arc_value(a)?, None => Value::Null },
        "reason": h.reason,
    }))
}

pub fn schedule_outcome_value(o: &ScheduleOutcome) -> Result<Value> {
    Ok(json!({
        "trajectory": o
            .trajectory
            .iter()
            .map(|t| descriptor_value(t.descriptor()))
            .collect::<Result<Vec<_>>>()?,
        "stabilized_after": o.stabilized_after,
        "halted": match &o.halted { Some(h) => halt_value(h)?, None => Value::Null },
    }))
}

pub fn flip_graph_value(g: &FlipGraph) -> Value {
    json!({
        "polygon": g.polygon,
        "vertices": g.vertices,
        "edges": g.edges,
        "connected": g.connected,
    })
}

// serde hooks for the core wire types

macro_rules! via_value {
    ($ty:ty, $to:path, $from:path) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                $to(self).map_err(S::Error::custom)?.serialize(s)
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let v = Value::deserialize(d)?;
                $from(&v).map_err(D::Error::custom)
            }
        }
    };
}

via_value!(Arc, arc_value, arc_from_value);
via_value!(Morphism, morphism_value, morphism_from_value);
via_value!(ExchangeSequence, sequence_value, sequence_from_value);
via_value!(Interval, interval_value, interval_from_value);
via_value!(ArcSetDescriptor, descriptor_value, descriptor_from_value);
via_value!(Schedule, schedule_value, schedule_from_value);

impl Serialize for TriangulationDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.descriptor().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriangulationDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let desc = ArcSetDescriptor::deserialize(d)?;
        TriangulationDescriptor::new(desc).map_err(D::Error::custom)
    }
}
