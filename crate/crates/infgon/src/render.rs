//! Deterministic SVG diagrams in the horizontal-line model: integer marked
//! points on a baseline, finite arcs as semicircles above it, infinite arcs
//! as segments to a marked accumulation point.
//!
//! Fixed constants (documented for byte-stable goldens): 40 px per integer,
//! the accumulation point 120 px above the baseline, 40 px margins, all
//! coordinates printed with one decimal. Output carries no timestamps, so
//! identical input gives byte-identical output.

use std::fmt::Write as _;

use crate::arc::{Arc, Endpoint};
use crate::error::{Error, Result};
use crate::triangulation::Interval;

const UNIT: f64 = 40.0;
const INF_HEIGHT: f64 = 120.0;
const MARGIN: f64 = 40.0;
const LABEL_DROP: f64 = 18.0;

fn px(v: f64) -> String {
    format!("{v:.1}")
}

/// Render `arcs` over the integer points of `region`. Arcs listed in
/// `highlights` are drawn dashed.
pub fn render(region: &Interval, arcs: &[Arc], highlights: &[Arc]) -> Result<String> {
    let lo: i64 = (&region.lo)
        .try_into()
        .map_err(|_| Error::MalformedInput("render region too large".into()))?;
    let hi: i64 = (&region.hi)
        .try_into()
        .map_err(|_| Error::MalformedInput("render region too large".into()))?;
    let span = (hi - lo) as f64;
    let width = 2.0 * MARGIN + span * UNIT;
    let baseline = MARGIN + INF_HEIGHT;
    let height = baseline + MARGIN;
    let x = |v: i64| MARGIN + (v - lo) as f64 * UNIT;
    let inf_x = MARGIN + span * UNIT / 2.0;
    let inf_y = baseline - INF_HEIGHT;

    let mut sorted: Vec<&Arc> = arcs.iter().collect();
    sorted.sort();
    sorted.dedup();

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        px(width),
        px(height),
        px(width),
        px(height)
    )
    .unwrap();
    writeln!(
        out,
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>",
        px(MARGIN - 10.0),
        px(baseline),
        px(width - MARGIN + 10.0),
        px(baseline)
    )
    .unwrap();

    let needs_inf = sorted.iter().any(|a| a.is_infinite());
    if needs_inf {
        writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3.0\" fill=\"black\"/>",
            px(inf_x),
            px(inf_y)
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">-inf</text>",
            px(inf_x),
            px(inf_y - 8.0)
        )
        .unwrap();
    }

    for v in lo..=hi {
        writeln!(
            out,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"black\"/>",
            px(x(v)),
            px(baseline)
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
            px(x(v)),
            px(baseline + LABEL_DROP),
            v
        )
        .unwrap();
    }

    for arc in sorted {
        let dashed = highlights.contains(arc);
        let dash = if dashed {
            " stroke-dasharray=\"6,4\""
        } else {
            ""
        };
        let b: i64 = arc
            .tgt()
            .try_into()
            .map_err(|_| Error::MalformedInput(format!("arc {arc} outside render range")))?;
        match arc.src() {
            Endpoint::MinusInfinity => {
                writeln!(
                    out,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\"{}/>",
                    px(inf_x),
                    px(inf_y),
                    px(x(b)),
                    px(baseline),
                    dash
                )
                .unwrap();
            }
            Endpoint::Vertex(a) => {
                let a: i64 = a
                    .try_into()
                    .map_err(|_| Error::MalformedInput(format!("arc {arc} outside render range")))?;
                let r = (b - a) as f64 * UNIT / 2.0;
                writeln!(
                    out,
                    "  <path d=\"M {} {} A {} {} 0 0 1 {} {}\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\"{}/>",
                    px(x(a)),
                    px(baseline),
                    px(r),
                    px(r),
                    px(x(b)),
                    px(baseline),
                    dash
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
