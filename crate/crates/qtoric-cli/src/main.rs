//! Batch front end: analyze fans, test system membership, print dimension
//! tables and spectral grids, compute homology, sample the discriminant
//! complement, stabilize divisor systems, and run the homogeneous-coordinate
//! checks.
//!
//! Exit codes: 0 success (and membership holds for `member`), 1 membership
//! fails, 2 input or usage error. Output is written in one piece after a
//! command finishes, so failed runs emit no partial output.

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;

use qtoric::complex::{
    moment_angle_homology, power_complex, reduced_homology, underlying_complex, GradedRanks,
    SimplicialComplex,
};
use qtoric::configs::{scan_at, stabilize, DivisorSystem};
use qtoric::cox::{degree_criterion, evaluate_system, group_rank, in_complement};
use qtoric::fan::{find_positive_relation, verify_relation, Fan};
use qtoric::num::{parse_rational, GaussianRational};
use qtoric::polysys::{
    bounded_closure_multiplicity, closure_stability_dimension, condition_flags, connectivity_bound,
    real_violation, sample_systems, stability_dimension, Field, PolySystem, StabilityParams,
};
use qtoric::ssrange::{connectivity_by_enumeration, stable_range_by_enumeration, E1Grid};

#[derive(Parser)]
#[command(
    name = "qtoric",
    version,
    about = "Exact toolkit for toric fans and bounded-multiplicity polynomial systems"
)]
struct Cli {
    /// Master seed for every randomized subcommand
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker count for the sampler
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    R,
    C,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::R => Field::Real,
            FieldArg::C => Field::Complex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a fan and report its invariants
    Analyze { fan: String },
    /// Test a polynomial system against the fan's complex
    Member { fan: String, system: String },
    /// Dimension table for given degrees over a fan
    Dims {
        fan: String,
        /// Comma-separated degree vector, one entry per ray
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::C)]
        field: FieldArg,
    },
    /// Truncated vanishing grid for given parameters
    Spectral {
        fan: String,
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::C)]
        field: FieldArg,
    },
    /// Minimal non-faces and homology of a complex file
    Homology {
        complex: String,
        /// Also compute the ball/sphere polyhedral product in this ball dimension
        #[arg(long)]
        ball_dim: Option<usize>,
        /// Multiplicity parameter for the product model (ball_dim must be n or 2n)
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Replace the complex by its power on [r] x [power]
        #[arg(long)]
        power: Option<usize>,
    },
    /// Draw random systems and report membership statistics
    Sample {
        fan: String,
        #[arg(long)]
        degrees: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FieldArg::R)]
        field: FieldArg,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Bound on coefficient numerators and denominators
        #[arg(long, default_value_t = 5)]
        box_bound: u32,
    },
    /// Stabilize a divisor system by a degree increment
    Stabilize {
        system: String,
        /// Comma-separated nonnegative increments, one per divisor
        #[arg(long)]
        increment: String,
        /// Also clip the result to a strip around this rational point
        #[arg(long)]
        scan: Option<String>,
        /// Strip half-width for --scan
        #[arg(long, default_value = "1/10")]
        eps: String,
    },
    /// Degree-relation criterion over a fan
    CoxCheck {
        fan: String,
        #[arg(long)]
        degrees: String,
    },
    /// Evaluate a member system on a rational grid and verify the image
    EvalCheck {
        fan: String,
        system: String,
        /// Number of grid points
        #[arg(long, default_value_t = 200)]
        grid: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let written = match &cli.output {
                Some(path) => fs::write(path, &text).map_err(|e| e.to_string()),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, ExitCode), String> {
    match &cli.command {
        Command::Analyze { fan } => cmd_analyze(fan, cli.format),
        Command::Member { fan, system } => cmd_member(fan, system, cli.format),
        Command::Dims {
            fan,
            degrees,
            n,
            field,
        } => cmd_dims(fan, degrees, *n, (*field).into(), cli.format),
        Command::Spectral {
            fan,
            degrees,
            n,
            field,
        } => cmd_spectral(fan, degrees, *n, (*field).into(), cli.format),
        Command::Homology {
            complex,
            ball_dim,
            n,
            power,
        } => cmd_homology(complex, *ball_dim, *n, *power, cli.format),
        Command::Sample {
            fan,
            degrees,
            n,
            field,
            count,
            box_bound,
        } => cmd_sample(
            fan,
            degrees,
            *n,
            (*field).into(),
            *count,
            *box_bound,
            cli.seed,
            cli.workers,
            cli.format,
        ),
        Command::Stabilize {
            system,
            increment,
            scan,
            eps,
        } => cmd_stabilize(system, increment, scan.as_deref(), eps),
        Command::CoxCheck { fan, degrees } => cmd_cox_check(fan, degrees, cli.format),
        Command::EvalCheck { fan, system, grid } => cmd_eval_check(fan, system, *grid),
    }
}

fn load_fan(path: &str) -> Result<(Fan, bool), String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    Fan::from_json(&text).map_err(|e| format!("{path}: {e}"))
}

fn load_system(path: &str) -> Result<PolySystem, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    PolySystem::from_json(&text).map_err(|e| format!("{path}: {e}"))
}

fn parse_degrees(s: &str, expected: usize) -> Result<Vec<usize>, String> {
    let degrees: Vec<usize> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad degree {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    if degrees.len() != expected {
        return Err(format!(
            "expected {expected} degrees (one per ray), got {}",
            degrees.len()
        ));
    }
    if degrees.contains(&0) {
        return Err("degrees must be positive".into());
    }
    Ok(degrees)
}

fn fan_params(
    fan: &Fan,
    degrees: &[usize],
    n: usize,
    field: Field,
) -> Result<StabilityParams, String> {
    let k = underlying_complex(fan).map_err(|e| e.to_string())?;
    let r_min = k.min_non_face_size().map_err(|_| {
        "the underlying complex is a full simplex; the stability parameters are undefined"
            .to_string()
    })?;
    StabilityParams::new(degrees.to_vec(), n, r_min, field).map_err(|e| e.to_string())
}

fn cmd_analyze(path: &str, format: Format) -> Result<(String, ExitCode), String> {
    let (fan, rescaled) = load_fan(path)?;
    let report = fan.validate().map_err(|e| e.to_string())?;
    let k = underlying_complex(&fan).map_err(|e| e.to_string())?;
    let min_non_faces = k.min_non_faces();
    let r_min = k.min_non_face_size().ok();
    let smooth = fan.is_smooth();
    let completeness = fan.completeness();
    let spans = qtoric::fan::spans_lattice(fan.rays());
    let relation = find_positive_relation(fan.rays()).map_err(|e| e.to_string())?;
    let rank = group_rank(fan.rays()).ok();

    let mut out = String::new();
    match format {
        Format::Json => {
            let relation_json: Option<Vec<String>> = relation
                .as_ref()
                .map(|d| d.iter().map(|x| x.to_string()).collect());
            let value = serde_json::json!({
                "rays": fan.num_rays(),
                "dim": fan.dim(),
                "rescaled_rays": rescaled,
                "valid": report.is_valid(),
                "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "smooth": smooth,
                "complete": completeness.complete,
                "sampled_directions_covered": completeness.sampled_directions_covered,
                "spans_lattice": spans,
                "min_non_faces": min_non_faces,
                "min_non_face_size": r_min,
                "group_rank": rank,
                "positive_relation": relation_json,
                "relation_verified": relation.as_ref().map(|d| verify_relation(fan.rays(), d)),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        Format::Text | Format::Csv => {
            writeln!(
                out,
                "fan: {} rays in dimension {}",
                fan.num_rays(),
                fan.dim()
            )
            .unwrap();
            if rescaled {
                writeln!(out, "note: input rays were rescaled to primitive vectors").unwrap();
            }
            writeln!(out, "valid: {}", report.is_valid()).unwrap();
            for v in &report.violations {
                writeln!(out, "  violation: {v}").unwrap();
            }
            writeln!(out, "smooth: {smooth}").unwrap();
            match &completeness.diagnostic {
                None => writeln!(out, "complete: {}", completeness.complete).unwrap(),
                Some(d) => writeln!(out, "complete: {} ({d})", completeness.complete).unwrap(),
            }
            if let Some(covered) = completeness.sampled_directions_covered {
                writeln!(out, "sampled directions covered: {covered}").unwrap();
            }
            writeln!(out, "spans lattice: {spans}").unwrap();
            let mnf: Vec<String> = min_non_faces
                .iter()
                .map(|s| {
                    format!(
                        "{{{}}}",
                        s.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect();
            writeln!(
                out,
                "minimal non-faces: {}",
                if mnf.is_empty() {
                    "none (full simplex)".to_string()
                } else {
                    mnf.join(" ")
                }
            )
            .unwrap();
            match r_min {
                Some(r) => writeln!(out, "minimal non-face size: {r}").unwrap(),
                None => writeln!(out, "minimal non-face size: undefined").unwrap(),
            }
            match rank {
                Some(r) => writeln!(out, "torus group rank: {r}").unwrap(),
                None => writeln!(out, "torus group rank: undefined (rays do not span)").unwrap(),
            }
            match &relation {
                Some(d) => {
                    let ds: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                    writeln!(
                        out,
                        "positive degree relation: ({}) verified: {}",
                        ds.join(","),
                        verify_relation(fan.rays(), d)
                    )
                    .unwrap();
                }
                None => writeln!(out, "positive degree relation: none").unwrap(),
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_member(
    fan_path: &str,
    sys_path: &str,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let (fan, _) = load_fan(fan_path)?;
    let sys = load_system(sys_path)?;
    let k = underlying_complex(&fan).map_err(|e| e.to_string())?;
    let violation = real_violation(&sys, &k).map_err(|e| e.to_string())?;
    let closure = bounded_closure_multiplicity(&sys, &k).map_err(|e| e.to_string())?;
    let member = violation.is_none();

    let mut out = String::new();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "real_bounded_member": member,
                "closure_bounded_member": closure,
                "violation": violation.as_ref().map(|v| serde_json::json!({
                    "non_face": v.sigma,
                    "interval": [v.interval.0.to_string(), v.interval.1.to_string()],
                })),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        Format::Text | Format::Csv => {
            writeln!(out, "real-bounded membership: {member}").unwrap();
            writeln!(out, "closure-bounded membership: {closure}").unwrap();
            if let Some(v) = &violation {
                let sigma: Vec<String> = v.sigma.iter().map(|i| i.to_string()).collect();
                writeln!(
                    out,
                    "witness: non-face {{{}}} with a common real root in ({}, {}]",
                    sigma.join(","),
                    v.interval.0,
                    v.interval.1
                )
                .unwrap();
            }
        }
    }
    let code = if member {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok((out, code))
}

fn cmd_dims(
    fan_path: &str,
    degrees: &str,
    n: usize,
    field: Field,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let (fan, _) = load_fan(fan_path)?;
    let degrees = parse_degrees(degrees, fan.num_rays())?;
    let params = fan_params(&fan, &degrees, n, field)?;
    let stability = stability_dimension(&params);
    let closure = closure_stability_dimension(&params);
    let flags = condition_flags(&params);
    let connectivity = connectivity_bound(&params);
    let oracle = stable_range_by_enumeration(&params).ok();
    let agree = oracle.map(|o| o == stability.value);

    let mut out = String::new();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "field": params.field.to_string(),
                "n": params.n,
                "min_degree": params.d_min(),
                "min_non_face_size": params.r_min,
                "stability_dimension": stability.value,
                "stability_degenerate": stability.degenerate,
                "closure_stability_dimension": closure.value,
                "connectivity": connectivity.to_string(),
                "degree_condition": flags.complex_simply_connected,
                "strict_degree_condition": flags.real_simply_connected,
                "frontier_enumeration": oracle,
                "frontier_agrees": agree,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        Format::Csv => {
            writeln!(out, "quantity,value").unwrap();
            writeln!(out, "field,{}", params.field).unwrap();
            writeln!(out, "n,{}", params.n).unwrap();
            writeln!(out, "min_degree,{}", params.d_min()).unwrap();
            writeln!(out, "min_non_face_size,{}", params.r_min).unwrap();
            writeln!(out, "stability_dimension,{}", stability.value).unwrap();
            writeln!(out, "closure_stability_dimension,{}", closure.value).unwrap();
            writeln!(out, "connectivity,{connectivity}").unwrap();
            if let Some(o) = oracle {
                writeln!(out, "frontier_enumeration,{o}").unwrap();
            }
        }
        Format::Text => {
            writeln!(out, "field: {}", params.field).unwrap();
            writeln!(out, "multiplicity bound n: {}", params.n).unwrap();
            writeln!(out, "minimal degree: {}", params.d_min()).unwrap();
            writeln!(out, "minimal non-face size: {}", params.r_min).unwrap();
            writeln!(out, "stability dimension: {stability}").unwrap();
            writeln!(out, "closure-bounded stability dimension: {closure}").unwrap();
            writeln!(out, "connectivity: {connectivity}").unwrap();
            writeln!(
                out,
                "degree condition (d_min >= n >= 1): {}",
                flags.complex_simply_connected
            )
            .unwrap();
            writeln!(
                out,
                "strict degree condition ((n, r_min) != (1, 2) too): {}",
                flags.real_simply_connected
            )
            .unwrap();
            match (oracle, agree) {
                (Some(o), Some(a)) => writeln!(
                    out,
                    "frontier enumeration: {o} ({})",
                    if a {
                        "agrees with the closed form"
                    } else {
                        "MISMATCH"
                    }
                )
                .unwrap(),
                _ => writeln!(out, "frontier enumeration: unavailable (d_min < n)").unwrap(),
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_spectral(
    fan_path: &str,
    degrees: &str,
    n: usize,
    field: Field,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let (fan, _) = load_fan(fan_path)?;
    let degrees = parse_degrees(degrees, fan.num_rays())?;
    let params = fan_params(&fan, &degrees, n, field)?;
    let grid = E1Grid::new(params.clone());
    let mut out = String::new();
    match format {
        Format::Csv => {
            let depth = grid.depth();
            let header: Vec<String> = (0..=depth + 1).map(|k| format!("k{k}")).collect();
            writeln!(out, "s,{}", header.join(",")).unwrap();
            for (s, row) in grid.rows() {
                let cells: Vec<String> = row.chars().map(|c| c.to_string()).collect();
                writeln!(out, "{s},{}", cells.join(",")).unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = grid
                .rows()
                .iter()
                .map(|(s, row)| serde_json::json!({ "s": s, "cells": row }))
                .collect();
            let value = serde_json::json!({
                "depth": grid.depth(),
                "s_max": grid.s_max,
                "rows": rows,
                "connectivity_floor": connectivity_by_enumeration(&params).ok(),
                "stable_range": stable_range_by_enumeration(&params).ok(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        Format::Text => {
            writeln!(
                out,
                "truncated grid (columns k, rows s): Z integers, \u{b7} zero, ? unconstrained"
            )
            .unwrap();
            writeln!(out, "{grid}").unwrap();
            if let Ok(m0) = connectivity_by_enumeration(&params) {
                writeln!(out, "connectivity floor from the grid: {m0}").unwrap();
            }
            if let Ok(d) = stable_range_by_enumeration(&params) {
                writeln!(out, "stable range from the frontier enumeration: {d}").unwrap();
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_homology(
    complex_path: &str,
    ball_dim: Option<usize>,
    n: usize,
    power: Option<usize>,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let text = fs::read_to_string(complex_path).map_err(|e| format!("{complex_path}: {e}"))?;
    let mut k = SimplicialComplex::from_json(&text).map_err(|e| format!("{complex_path}: {e}"))?;
    if let Some(p) = power {
        k = power_complex(&k, p).map_err(|e| e.to_string())?;
    }
    let h = reduced_homology(&k).map_err(|e| e.to_string())?;
    let product = match ball_dim {
        Some(b) => Some(moment_angle_homology(&k, n, b).map_err(|e| e.to_string())?),
        None => None,
    };

    let ranks_json = |g: &GradedRanks| -> serde_json::Value {
        serde_json::json!(g
            .entries()
            .iter()
            .map(|e| {
                serde_json::json!({
                    "degree": e.degree,
                    "rank": e.rank,
                    "torsion": e.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>())
    };

    let mut out = String::new();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "vertices": k.num_vertices(),
                "min_non_faces": k.min_non_faces(),
                "min_non_face_size": k.min_non_face_size().ok(),
                "reduced_homology": ranks_json(&h),
                "product_homology": product.as_ref().map(&ranks_json),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        Format::Text | Format::Csv => {
            writeln!(out, "{k}").unwrap();
            match k.min_non_face_size() {
                Ok(r) => writeln!(out, "minimal non-face size: {r}").unwrap(),
                Err(_) => writeln!(out, "minimal non-face size: undefined").unwrap(),
            }
            writeln!(out, "reduced homology: {h}").unwrap();
            if let Some(p) = &product {
                writeln!(
                    out,
                    "ball/sphere product homology (ball dimension {}): {p}",
                    ball_dim.unwrap()
                )
                .unwrap();
            }
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sample(
    fan_path: &str,
    degrees: &str,
    n: usize,
    field: Field,
    count: usize,
    box_bound: u32,
    seed: u64,
    workers: usize,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let (fan, _) = load_fan(fan_path)?;
    let degrees = parse_degrees(degrees, fan.num_rays())?;
    let k = underlying_complex(&fan).map_err(|e| e.to_string())?;
    let stats = sample_systems(&k, &degrees, n, field, box_bound, count, seed, workers)
        .map_err(|e| e.to_string())?;
    let mut out = String::new();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "count": stats.count,
                "real_bounded_members": stats.real_bounded_members,
                "closure_bounded_members": stats.closure_bounded_members,
                "discriminant_hits": stats.discriminant_hits,
                "seed": seed,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        Format::Csv => {
            writeln!(out, "count,real_bounded,closure_bounded,discriminant").unwrap();
            writeln!(
                out,
                "{},{},{},{}",
                stats.count,
                stats.real_bounded_members,
                stats.closure_bounded_members,
                stats.discriminant_hits
            )
            .unwrap();
        }
        Format::Text => {
            writeln!(out, "sampled systems: {}", stats.count).unwrap();
            writeln!(out, "real-bounded members: {}", stats.real_bounded_members).unwrap();
            writeln!(
                out,
                "closure-bounded members: {}",
                stats.closure_bounded_members
            )
            .unwrap();
            writeln!(out, "discriminant hits: {}", stats.discriminant_hits).unwrap();
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_stabilize(
    sys_path: &str,
    increment: &str,
    scan: Option<&str>,
    eps: &str,
) -> Result<(String, ExitCode), String> {
    let text = fs::read_to_string(sys_path).map_err(|e| format!("{sys_path}: {e}"))?;
    let sys = DivisorSystem::from_json(&text).map_err(|e| format!("{sys_path}: {e}"))?;
    let a: Vec<usize> = increment
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad increment {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    let mut result = stabilize(&sys, &a).map_err(|e| e.to_string())?;
    if let Some(x) = scan {
        let x = parse_rational(x).map_err(|e| e.to_string())?;
        let eps = parse_rational(eps).map_err(|e| e.to_string())?;
        result = scan_at(&result, &x, &eps).map_err(|e| e.to_string())?;
    }
    Ok((format!("{}\n", result.to_json()), ExitCode::SUCCESS))
}

fn cmd_cox_check(
    fan_path: &str,
    degrees: &str,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let (fan, _) = load_fan(fan_path)?;
    let degrees = parse_degrees(degrees, fan.num_rays())?;
    let c = degree_criterion(fan.rays(), &degrees).map_err(|e| e.to_string())?;
    let mut out = String::new();
    match format {
        Format::Json => {
            let value = serde_json::json!({
                "symbolic": c.symbolic,
                "sampled": c.sampled,
                "agree": c.symbolic == c.sampled,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap()).unwrap();
        }
        Format::Text | Format::Csv => {
            writeln!(out, "symbolic degree relation: {}", c.symbolic).unwrap();
            writeln!(out, "sampled one-parameter subgroup: {}", c.sampled).unwrap();
            writeln!(out, "verdicts agree: {}", c.symbolic == c.sampled).unwrap();
        }
    }
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_eval_check(
    fan_path: &str,
    sys_path: &str,
    grid: usize,
) -> Result<(String, ExitCode), String> {
    let (fan, _) = load_fan(fan_path)?;
    let sys = load_system(sys_path)?;
    let k = underlying_complex(&fan).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    for j in 0..grid {
        let x = GaussianRational::real(BigRational::new(
            BigInt::from(j as i64 - grid as i64 / 2),
            BigInt::from(7),
        ));
        let p = evaluate_system(&sys, &x).map_err(|e| e.to_string())?;
        if !in_complement(&p, &k).map_err(|e| e.to_string())? {
            failures.push(x.to_string());
        }
    }
    let mut out = String::new();
    writeln!(out, "grid points checked: {grid}").unwrap();
    if failures.is_empty() {
        writeln!(out, "image stays in the arrangement complement: true").unwrap();
        Ok((out, ExitCode::SUCCESS))
    } else {
        writeln!(out, "image stays in the arrangement complement: false").unwrap();
        writeln!(out, "failing points: {}", failures.join(", ")).unwrap();
        Ok((out, ExitCode::from(1)))
    }
}
