//! Command-line front end: channel file ingestion, measure evaluation,
//! Lorenz curves, order tests, calibration, and the verification suite.
//!
//! Exit codes: 0 on success, 1 when a verification or comparison check
//! fails, 2 on usage or validation errors.

use biso_order::{
    alpha_capacity, arimoto_mi, calibrate, extremality_report, regime, shannon_mi, sibson_mi,
    sufficient_condition, suite, AlphaParam, BisoChannel, ComparisonReport, Error, Family,
    LorenzCurve, Verdict,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::f64::consts::LN_2;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "biso-order",
    version,
    about = "Rényi mutual information, α-capacity and α-Lorenz orders for BISO channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mutual information of a channel at a given input probability.
    Mi {
        /// Channel JSON file ({"pairs": [[p, m], …]} or {"matrix": [row0, row1]}).
        #[arg(long)]
        channel: PathBuf,
        /// Rényi order α > 0 (repeatable).
        #[arg(long, required = true)]
        alpha: Vec<f64>,
        /// Input probability x = P(X = 0).
        #[arg(long, default_value_t = 0.5)]
        x: f64,
        #[arg(long, value_enum, default_value_t = VariantArg::Sibson)]
        variant: VariantArg,
        /// Also report values converted to bits.
        #[arg(long)]
        bits: bool,
    },
    /// α-capacity and the pair-mass statistic d_C.
    Capacity {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long, required = true)]
        alpha: Vec<f64>,
        #[arg(long)]
        bits: bool,
    },
    /// The α-Lorenz curve, as JSON or `t,F` CSV.
    Lorenz {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        /// Add this many evenly spaced sample rows to the CSV.
        #[arg(long)]
        dense: Option<usize>,
    },
    /// Decide the α-more-capable order between two channels.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        alpha: f64,
        /// Input grid size for the exhaustive check.
        #[arg(long, default_value_t = 1001)]
        grid: usize,
        /// Gap tolerance for grid verdicts, in nats.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Find the BSC or BEC with a prescribed α-capacity.
    Calibrate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Target capacity in nats (at most ln 2).
        #[arg(long)]
        capacity: f64,
        #[arg(long)]
        alpha: f64,
    },
    /// Check the BSC/BEC extremality sandwich around a channel.
    Extremal {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 1001)]
        grid: usize,
    },
    /// Sweep mutual information over α and the input grid into a CSV file.
    Sweep {
        #[arg(long)]
        channel: PathBuf,
        #[arg(long, required = true)]
        alpha: Vec<f64>,
        /// Number of input grid points on [0, 1].
        #[arg(long, default_value_t = 101)]
        x_grid: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        bits: bool,
    },
    /// Run the verification suite and report per-check pass/fail.
    Verify {
        /// "all" or one of the named sub-suites.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Sibson,
    Arimoto,
    Shannon,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Bsc,
    Bec,
}

#[derive(Serialize)]
struct Report {
    command: String,
    version: String,
    inputs: Value,
    results: Value,
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    worst: f64,
}

/// Rounds to 12 significant digits so reports are stable across platforms.
fn sig12(v: f64) -> f64 {
    if v.is_finite() {
        format!("{v:.11e}").parse().unwrap_or(v)
    } else {
        v
    }
}

fn num(v: f64) -> Value {
    if v.is_finite() {
        json!(sig12(v))
    } else {
        json!(v.to_string())
    }
}

fn fmt_csv(v: f64) -> String {
    format!("{}", sig12(v))
}

fn regime_name(a: &AlphaParam) -> String {
    format!("{:?}", regime(a).direction)
}

fn comparison_json(r: &ComparisonReport) -> Value {
    json!({
        "verdict": format!("{:?}", r.verdict),
        "method": format!("{:?}", r.method),
        "worst_gap": r.worst_gap.map(num),
        "witness_x": r.witness_x.map(num),
        "capacity_gap": num(r.capacity_gap),
    })
}

fn emit(report: &Report) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serialization")
    );
}

fn channel_inputs(path: &PathBuf, ch: &BisoChannel) -> Value {
    json!({
        "path": path.display().to_string(),
        "label": ch.label(),
        "n_pairs": ch.n_pairs(),
    })
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Mi {
            channel,
            alpha,
            x,
            variant,
            bits,
        } => {
            let ch = BisoChannel::load(&channel)?;
            let mut entries = Vec::new();
            for &a in &alpha {
                let ap = AlphaParam::new(a)?;
                let mi = match variant {
                    VariantArg::Sibson => sibson_mi(&ch, x, &ap)?,
                    VariantArg::Arimoto => arimoto_mi(&ch, x, &ap)?,
                    VariantArg::Shannon => shannon_mi(&ch, x)?,
                };
                let mut entry = json!({
                    "alpha": num(a),
                    "regime": regime_name(&ap),
                    "variant": format!("{:?}", mi.variant),
                    "value_nats": num(mi.value),
                });
                if bits {
                    entry["value_bits"] = num(mi.value / LN_2);
                }
                entries.push(entry);
            }
            emit(&Report {
                command: "mi".into(),
                version: biso_order::VERSION.into(),
                inputs: json!({
                    "channel": channel_inputs(&channel, &ch),
                    "x": num(x),
                    "units": if bits { "nats+bits" } else { "nats" },
                }),
                results: json!({ "entries": entries }),
                checks: vec![],
            });
            Ok(0)
        }
        Command::Capacity {
            channel,
            alpha,
            bits,
        } => {
            let ch = BisoChannel::load(&channel)?;
            let mut entries = Vec::new();
            for &a in &alpha {
                let ap = AlphaParam::new(a)?;
                let cap = alpha_capacity(&ch, &ap)?;
                let mut entry = json!({
                    "alpha": num(a),
                    "regime": regime_name(&ap),
                    "c_alpha_nats": num(cap.c_alpha),
                    "d_c": cap.d_c.map(num),
                });
                if bits {
                    entry["c_alpha_bits"] = num(cap.c_alpha / LN_2);
                }
                entries.push(entry);
            }
            emit(&Report {
                command: "capacity".into(),
                version: biso_order::VERSION.into(),
                inputs: json!({ "channel": channel_inputs(&channel, &ch) }),
                results: json!({ "entries": entries }),
                checks: vec![],
            });
            Ok(0)
        }
        Command::Lorenz {
            channel,
            alpha,
            format,
            dense,
        } => {
            let ch = BisoChannel::load(&channel)?;
            let ap = AlphaParam::new(alpha)?;
            let curve = LorenzCurve::new(&ch, &ap)?;
            match format {
                FormatArg::Csv => {
                    let mut ts: Vec<f64> = curve.breakpoints().to_vec();
                    if let Some(n) = dense {
                        for i in 0..n {
                            ts.push(curve.d_c() * i as f64 / (n.max(2) - 1) as f64);
                        }
                        ts.sort_unstable_by(f64::total_cmp);
                        ts.dedup();
                    }
                    println!("t,F");
                    for t in ts {
                        println!("{},{}", fmt_csv(t), fmt_csv(curve.evaluate(t)?));
                    }
                }
                FormatArg::Json => {
                    emit(&Report {
                        command: "lorenz".into(),
                        version: biso_order::VERSION.into(),
                        inputs: json!({
                            "channel": channel_inputs(&channel, &ch),
                            "alpha": num(alpha),
                        }),
                        results: json!({
                            "regime": regime_name(&ap),
                            "d_c": num(curve.d_c()),
                            "breakpoints": curve.breakpoints().iter().map(|&t| num(t)).collect::<Vec<_>>(),
                            "step_values": curve.step_values().iter().map(|&f| num(f)).collect::<Vec<_>>(),
                            "masses": curve.masses().iter().map(|&m| num(m)).collect::<Vec<_>>(),
                            "total_integral": num(curve.total_integral()),
                        }),
                        checks: vec![],
                    });
                }
            }
            Ok(0)
        }
        Command::Compare {
            a,
            b,
            alpha,
            grid,
            tol,
        } => {
            let ch_a = BisoChannel::load(&a)?;
            let ch_b = BisoChannel::load(&b)?;
            let ap = AlphaParam::new(alpha)?;
            let grid_report =
                biso_order::ordering::more_capable_grid_with_tol(&ch_a, &ch_b, &ap, grid, tol)?;
            let sufficient = if ap.is_unit() {
                None
            } else {
                Some(sufficient_condition(&ch_a, &ch_b, &ap)?)
            };
            // a directed Lorenz verdict that the grid contradicts would be
            // a soundness failure
            let consistent = match sufficient.as_ref().map(|s| s.verdict) {
                Some(Verdict::FirstMoreCapable) => matches!(
                    grid_report.verdict,
                    Verdict::FirstMoreCapable | Verdict::Equivalent
                ),
                Some(Verdict::SecondMoreCapable) => matches!(
                    grid_report.verdict,
                    Verdict::SecondMoreCapable | Verdict::Equivalent
                ),
                Some(Verdict::Equivalent) => grid_report.verdict == Verdict::Equivalent,
                _ => true,
            };
            emit(&Report {
                command: "compare".into(),
                version: biso_order::VERSION.into(),
                inputs: json!({
                    "a": channel_inputs(&a, &ch_a),
                    "b": channel_inputs(&b, &ch_b),
                    "alpha": num(alpha),
                    "regime": regime_name(&ap),
                    "grid": grid,
                    "tol": num(tol),
                }),
                results: json!({
                    "sufficient": sufficient.as_ref().map(comparison_json),
                    "grid": comparison_json(&grid_report),
                }),
                checks: vec![Check {
                    name: "methods_consistent".into(),
                    passed: consistent,
                    worst: sig12(grid_report.worst_gap.unwrap_or(0.0)),
                }],
            });
            Ok(if consistent { 0 } else { 1 })
        }
        Command::Calibrate {
            family,
            capacity,
            alpha,
        } => {
            let ap = AlphaParam::new(alpha)?;
            let fam = match family {
                FamilyArg::Bsc => Family::Bsc,
                FamilyArg::Bec => Family::Bec,
            };
            let parameter = calibrate(fam, capacity, &ap)?;
            let ch = match fam {
                Family::Bsc => BisoChannel::bsc(parameter)?,
                Family::Bec => BisoChannel::bec(parameter)?,
            };
            let achieved = alpha_capacity(&ch, &ap)?.c_alpha;
            let worst = (achieved - capacity).abs();
            let passed = worst <= 1e-9;
            emit(&Report {
                command: "calibrate".into(),
                version: biso_order::VERSION.into(),
                inputs: json!({
                    "family": format!("{fam:?}"),
                    "target_capacity_nats": num(capacity),
                    "alpha": num(alpha),
                }),
                results: json!({
                    "parameter": num(parameter),
                    "achieved_capacity_nats": num(achieved),
                }),
                checks: vec![Check {
                    name: "round_trip".into(),
                    passed,
                    worst: sig12(worst),
                }],
            });
            Ok(if passed { 0 } else { 1 })
        }
        Command::Extremal {
            channel,
            alpha,
            grid,
        } => {
            let ch = BisoChannel::load(&channel)?;
            let ap = AlphaParam::new(alpha)?;
            let report = extremality_report(&ch, &ap, grid)?;
            let worst = report
                .bec_vs_channel
                .grid
                .worst_gap
                .unwrap_or(0.0)
                .min(report.channel_vs_bsc.grid.worst_gap.unwrap_or(0.0));
            let holds = report.sandwich_holds;
            emit(&Report {
                command: "extremal".into(),
                version: biso_order::VERSION.into(),
                inputs: json!({
                    "channel": channel_inputs(&channel, &ch),
                    "alpha": num(alpha),
                    "grid": grid,
                }),
                results: json!({
                    "regime": format!("{:?}", report.direction),
                    "capacity_nats": num(report.capacity),
                    "bsc_crossover": num(report.bsc_crossover),
                    "bec_erasure": num(report.bec_erasure),
                    "bec_vs_channel": {
                        "sufficient": comparison_json(&report.bec_vs_channel.sufficient),
                        "grid": comparison_json(&report.bec_vs_channel.grid),
                    },
                    "channel_vs_bsc": {
                        "sufficient": comparison_json(&report.channel_vs_bsc.sufficient),
                        "grid": comparison_json(&report.channel_vs_bsc.grid),
                    },
                }),
                checks: vec![Check {
                    name: "sandwich".into(),
                    passed: holds,
                    worst: sig12(worst),
                }],
            });
            Ok(if holds { 0 } else { 1 })
        }
        Command::Sweep {
            channel,
            alpha,
            x_grid,
            out,
            bits,
        } => {
            if x_grid < 2 {
                return Err(Error::Usage("x-grid needs at least 2 points".into()));
            }
            let ch = BisoChannel::load(&channel)?;
            let scale = if bits { LN_2 } else { 1.0 };
            let mut csv = String::from("alpha,x,sibson_mi,arimoto_mi\n");
            for &a in &alpha {
                let ap = AlphaParam::new(a)?;
                for i in 0..x_grid {
                    let x = i as f64 / (x_grid - 1) as f64;
                    let s = sibson_mi(&ch, x, &ap)?.value / scale;
                    let ar = arimoto_mi(&ch, x, &ap)?.value / scale;
                    csv.push_str(&format!(
                        "{},{},{},{}\n",
                        fmt_csv(a),
                        fmt_csv(x),
                        fmt_csv(s),
                        fmt_csv(ar)
                    ));
                }
            }
            std::fs::write(&out, csv)
                .map_err(|e| Error::Usage(format!("cannot write {}: {e}", out.display())))?;
            emit(&Report {
                command: "sweep".into(),
                version: biso_order::VERSION.into(),
                inputs: json!({
                    "channel": channel_inputs(&channel, &ch),
                    "alpha": alpha.iter().map(|&a| num(a)).collect::<Vec<_>>(),
                    "x_grid": x_grid,
                    "units": if bits { "bits" } else { "nats" },
                }),
                results: json!({
                    "out": out.display().to_string(),
                    "rows": alpha.len() * x_grid,
                }),
                checks: vec![],
            });
            Ok(0)
        }
        Command::Verify { suite: name, seed } => {
            let checks = suite::run_suite(&name, seed)?;
            let all_passed = checks.iter().all(|c| c.passed);
            emit(&Report {
                command: "verify".into(),
                version: biso_order::VERSION.into(),
                inputs: json!({ "suite": name, "seed": seed }),
                results: json!({
                    "details": checks
                        .iter()
                        .map(|c| json!({ "name": c.name, "detail": c.detail }))
                        .collect::<Vec<_>>(),
                }),
                checks: checks
                    .iter()
                    .map(|c| Check {
                        name: c.name.clone(),
                        passed: c.passed,
                        worst: sig12(c.worst),
                    })
                    .collect(),
            });
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
