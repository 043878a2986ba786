//! `infgon` command-line front end: JSON in, JSON (or SVG) out.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on malformed input.
//! Errors are printed to stdout as `{"error": ..., "witness": ...}` objects.
//! Output is plain text; `INFGON_COLOR=never` is accepted for compatibility
//! but nothing is ever colored.

#![allow(clippy::result_large_err)]

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use infgon::json as wire;
use infgon::{
    apply_schedule, classify, exchange_graph, exchange_sequences, ext1_dim, flip, hom_basis,
    hom_dim, is_almost_rigid, is_cluster_tilting, is_maximal_almost_rigid, is_maximal_rigid,
    is_rigid, precover, preenvelope, render, stable_hom_dim, verify, Ambient,
    ApproximationOutcome, Arc, ArcSetDescriptor, Direction, Error, Interval,
    TriangulationDescriptor,
};

#[derive(Parser)]
#[command(name = "infgon", about = "Exact combinatorics of the completed infinity-gon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Rigid,
    MaximalRigid,
    ClusterTilting,
    AlmostRigid,
    Mar,
}

#[derive(Clone, Copy, ValueEnum)]
enum AmbientArg {
    Full,
    GenericallyFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum ApproxKind {
    Precover,
    Preenvelope,
}

#[derive(Subcommand)]
enum Command {
    /// Hom dimension and basis kinds between two arcs.
    Hom { a: String, b: String },
    /// Ext¹ dimension between two arcs.
    Ext { a: String, b: String },
    /// Stable Hom dimension between two arcs.
    StableHom { a: String, b: String },
    /// Exchange short exact sequences 0 -> A -> E -> B -> 0.
    Sequences { a: String, b: String },
    /// Configuration of a triangulation descriptor (file or "-" for stdin).
    Classify { input: String },
    /// Rigidity-hierarchy predicates of an arc-set descriptor.
    Check {
        input: String,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long, value_enum, default_value = "full")]
        ambient: AmbientArg,
    },
    /// Flip an arc of a triangulation.
    Mutate {
        input: String,
        #[arg(long)]
        arc: String,
        #[arg(long, value_enum, default_value = "left")]
        direction: DirectionArg,
    },
    /// Precover / preenvelope of a target arc by a maximal rigid set.
    Approximate {
        input: String,
        #[arg(long)]
        target: String,
        #[arg(long, value_enum, default_value = "precover")]
        kind: ApproxKind,
    },
    /// Run a mutation schedule, reporting stabilization on a region.
    Schedule {
        input: String,
        schedule: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        region: Vec<i64>,
    },
    /// Flip graph statistics of a convex polygon.
    Explore {
        #[arg(long)]
        polygon: u32,
    },
    /// Cross-check the closed forms against the module oracle.
    Verify {
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Render a triangulation or arc list as SVG.
    Render {
        input: String,
        #[arg(short, long)]
        out: Option<String>,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        region: Vec<i64>,
        #[arg(long)]
        highlight: Vec<String>,
    },
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::MalformedInput(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Error::MalformedInput(format!("cannot read {path}: {e}")))
    }
}

fn parse_value(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| Error::MalformedInput(format!("bad JSON: {e}")))
}

fn parse_arc(text: &str) -> Result<Arc, Error> {
    wire::arc_from_value(&parse_value(text)?)
}

fn load_descriptor(path: &str) -> Result<ArcSetDescriptor, Error> {
    wire::descriptor_from_value(&parse_value(&read_input(path)?)?)
}

fn load_triangulation(path: &str) -> Result<TriangulationDescriptor, Error> {
    TriangulationDescriptor::new(load_descriptor(path)?)
}

fn region_arg(region: &[i64], fallback: &Interval) -> Result<Interval, Error> {
    match region {
        [] => Ok(fallback.clone()),
        [lo, hi] => Interval::new((*lo).into(), (*hi).into()),
        _ => Err(Error::MalformedInput("--region takes two integers".into())),
    }
}

fn run(cli: Cli) -> Result<Value, Error> {
    match cli.command {
        Command::Hom { a, b } => {
            let (x, y) = (parse_arc(&a)?, parse_arc(&b)?);
            let basis: Vec<&str> = hom_basis(&x, &y)
                .iter()
                .map(|m| m.kind().wire_name())
                .collect();
            Ok(json!({"dim": hom_dim(&x, &y), "basis": basis}))
        }
        Command::Ext { a, b } => {
            let (x, y) = (parse_arc(&a)?, parse_arc(&b)?);
            Ok(json!({"dim": ext1_dim(&x, &y)}))
        }
        Command::StableHom { a, b } => {
            let (x, y) = (parse_arc(&a)?, parse_arc(&b)?);
            Ok(json!({"dim": stable_hom_dim(&x, &y)}))
        }
        Command::Sequences { a, b } => {
            let (x, y) = (parse_arc(&a)?, parse_arc(&b)?);
            let seqs = exchange_sequences(&x, &y)
                .iter()
                .map(wire::sequence_value)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json!({"sequences": seqs}))
        }
        Command::Classify { input } => {
            let t = load_triangulation(&input)?;
            wire::configuration_value(&classify(&t))
        }
        Command::Check {
            input,
            property,
            ambient,
        } => {
            let d = load_descriptor(&input)?;
            let ambient = match ambient {
                AmbientArg::Full => Ambient::Full,
                AmbientArg::GenericallyFree => Ambient::GenericallyFree,
            };
            let (name, holds, extra) = match property {
                Property::Rigid => ("rigid", is_rigid(&d), Value::Null),
                Property::AlmostRigid => ("almost-rigid", is_almost_rigid(&d), Value::Null),
                Property::Mar => {
                    let witness = match d.validate() {
                        Ok(()) => Value::Null,
                        Err(v) => wire::violation_value(&v)?,
                    };
                    ("mar", is_maximal_almost_rigid(&d), witness)
                }
                Property::MaximalRigid => {
                    let case = is_maximal_rigid(&d);
                    (
                        "maximal-rigid",
                        case.is_some(),
                        case.map(wire::rigid_case_value).unwrap_or(Value::Null),
                    )
                }
                Property::ClusterTilting => {
                    ("cluster-tilting", is_cluster_tilting(&d, ambient)?, Value::Null)
                }
            };
            Ok(json!({"property": name, "holds": holds, "witness": extra}))
        }
        Command::Mutate {
            input,
            arc,
            direction,
        } => {
            let t = load_triangulation(&input)?;
            let g = parse_arc(&arc)?;
            let _dir = match direction {
                DirectionArg::Left => Direction::Left,
                DirectionArg::Right => Direction::Right,
            };
            let result = flip(&t, &g)?;
            wire::mutation_result_value(&result)
        }
        Command::Approximate {
            input,
            target,
            kind,
        } => {
            let d = load_descriptor(&input)?;
            let g = parse_arc(&target)?;
            let outcome: ApproximationOutcome = match kind {
                ApproxKind::Precover => precover(&d, &g)?,
                ApproxKind::Preenvelope => preenvelope(&d, &g)?,
            };
            wire::approximation_outcome_value(&outcome)
        }
        Command::Schedule {
            input,
            schedule,
            region,
        } => {
            let t = load_triangulation(&input)?;
            let s = wire::schedule_from_value(&parse_value(&read_input(&schedule)?)?)?;
            let region = region_arg(&region, t.descriptor().window())?;
            let outcome = apply_schedule(&t, &s, &region);
            wire::schedule_outcome_value(&outcome)
        }
        Command::Explore { polygon } => Ok(wire::flip_graph_value(&exchange_graph(polygon)?)),
        Command::Verify { window } => {
            let report = verify::run_verify(window);
            for c in &report.checks {
                println!(
                    "{} {}: {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            if !report.passed() {
                return Err(Error::MalformedSequence(
                    "oracle cross-check failed".into(),
                ));
            }
            Ok(serde_json::to_value(&report)
                .map_err(|e| Error::MalformedInput(e.to_string()))?)
        }
        Command::Render {
            input,
            out,
            region,
            highlight,
        } => {
            let value = parse_value(&read_input(&input)?)?;
            let (arcs, window) = if value.is_array() {
                let arcs = value
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(wire::arc_from_value)
                    .collect::<Result<Vec<_>, _>>()?;
                let window = arcs_extent(&arcs)?;
                (arcs, window)
            } else {
                let d = wire::descriptor_from_value(&value)?;
                let w = d.window().clone();
                (d.materialize(&w), w)
            };
            let region = region_arg(&region, &window)?;
            let highlights = highlight
                .iter()
                .map(|h| parse_arc(h))
                .collect::<Result<Vec<_>, _>>()?;
            let svg = render::render(&region, &arcs, &highlights)?;
            match out {
                Some(path) => {
                    fs::write(&path, &svg)
                        .map_err(|e| Error::MalformedInput(format!("cannot write {path}: {e}")))?;
                    Ok(json!({"written": path}))
                }
                None => {
                    print!("{svg}");
                    Ok(Value::Null)
                }
            }
        }
    }
}

fn arcs_extent(arcs: &[Arc]) -> Result<Interval, Error> {
    let mut lo: Option<infgon::Int> = None;
    let mut hi: Option<infgon::Int> = None;
    for a in arcs {
        let mut consider = |v: &infgon::Int| {
            lo = Some(match lo.take() {
                None => v.clone(),
                Some(x) => x.min(v.clone()),
            });
            hi = Some(match hi.take() {
                None => v.clone(),
                Some(x) => x.max(v.clone()),
            });
        };
        consider(a.tgt());
        if let Some(v) = a.src_vertex() {
            consider(v);
        }
    }
    match (lo, hi) {
        (Some(lo), Some(hi)) => Interval::new(lo, hi),
        _ => Interval::new(0.into(), 0.into()),
    }
}

fn error_object(e: &Error) -> (Value, u8) {
    let code = match e {
        Error::MalformedInput(_) => 2,
        _ => 1,
    };
    let witness = match e {
        Error::NotMutable { witness, .. } => witness
            .iter()
            .map(wire::arc_value)
            .collect::<Result<Vec<_>, _>>()
            .map(Value::Array)
            .unwrap_or(Value::Null),
        Error::NotInTriangulation(a) | Error::BoundaryArc(a) => {
            wire::arc_value(a).unwrap_or(Value::Null)
        }
        _ => Value::Null,
    };
    (json!({"error": e.to_string(), "witness": witness}), code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Value::Null) => ExitCode::SUCCESS,
        Ok(v) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (obj, code) = error_object(&e);
            println!("{}", serde_json::to_string(&obj).expect("serializable"));
            ExitCode::from(code)
        }
    }
}
