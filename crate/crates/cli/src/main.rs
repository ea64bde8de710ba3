//! `maxcurve`: audits plane curves over F_{q²} — point counts, maximality,
//! the genus dichotomy, order sequences, Frobenius orders, the ramification
//! and Frobenius divisors with per-point valuations, numerical-semigroup
//! data, and recognition of curves projectively equivalent (by scalings and
//! translations) to y^q + y = x^{q+1}.
//!
//! Exit codes: 0 = all applicable checks pass; 1 = input or usage error
//! (unreadable file, singular curve, non-prime-power q); 2 = at least one
//! check failed, including any theorem violation.

mod catalog;
mod format;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use maxcurve_core::{
    assemble_report, dichotomy, hermitian_curve, recognize_hermitian, AuditReport, Branch,
    PlaneCurve, Recognition,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "maxcurve", version, about = "Audit smooth plane curves over F_{q^2}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full audit on a curve file
    Analyze {
        /// Path to a curve file (see `catalog --show LABEL` for the format)
        path: PathBuf,
        /// Emit the report as canonical JSON instead of text
        #[arg(long)]
        json: bool,
        /// Include every rational point in the report, not just the first five
        #[arg(long)]
        points: bool,
        /// Refuse curves whose estimated expansion workload q^2 (d+1) + 1 exceeds N
        #[arg(long, value_name = "N")]
        precision_cap: Option<u64>,
    },
    /// Audit y^q + y = x^{q+1}, emit its curve file, or recognize one
    Hermitian {
        /// Prime power q; builds the standard model over F_{q^2}
        #[arg(required_unless_present = "recognize")]
        q: Option<u64>,
        /// Print the curve file for q instead of auditing
        #[arg(long, conflicts_with_all = ["json", "points", "recognize"])]
        emit_curve_file: bool,
        /// Emit the report as canonical JSON instead of text
        #[arg(long)]
        json: bool,
        /// Include every rational point in the report
        #[arg(long)]
        points: bool,
        /// Decide whether the curve in FILE normalizes to y^q + y = x^{q+1}
        #[arg(long, value_name = "FILE", conflicts_with = "q")]
        recognize: Option<PathBuf>,
    },
    /// List the built-in curves, or print one as a curve file
    Catalog {
        /// Print the curve file for this label
        #[arg(long, value_name = "LABEL")]
        show: Option<String>,
    },
    /// Classify a (q, genus, maximal) triple under the genus dichotomy
    Dichotomy {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        g: u64,
        /// Treat the triple as coming from a maximal curve
        #[arg(long)]
        maximal: bool,
        /// Emit the verdict as JSON
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land here too; only real usage
            // errors take the input-error exit code.
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Analyze { path, json, points, precision_cap } => {
            cmd_analyze(&path, json, points, precision_cap)
        }
        Command::Hermitian { q, emit_curve_file, json, points, recognize } => match recognize {
            Some(path) => cmd_recognize(&path, json),
            None => cmd_hermitian(q.expect("clap guarantees q"), emit_curve_file, json, points),
        },
        Command::Catalog { show } => cmd_catalog(show.as_deref()),
        Command::Dichotomy { q, g, maximal, json } => cmd_dichotomy(q, g, maximal, json),
    }
}

fn load_curve(path: &Path) -> Result<PlaneCurve> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let file = format::CurveFile::parse(&text)
        .with_context(|| format!("parsing {}", path.display()))?;
    file.to_curve()
}

fn print_report(rep: &AuditReport, json: bool, points: bool) -> u8 {
    if json {
        let v = report::json_report(rep, points);
        println!("{}", serde_json::to_string_pretty(&v).expect("report serializes"));
    } else {
        print!("{}", report::human_report(rep, points));
    }
    report::exit_code(rep)
}

fn cmd_analyze(path: &Path, json: bool, points: bool, cap: Option<u64>) -> Result<u8> {
    let curve = load_curve(path)?;
    if let Some(cap) = cap {
        let q = curve.spec().q();
        let d = curve.degree() as u64;
        let needed = q * q * (d + 1) + 1;
        if needed > cap {
            bail!(
                "estimated expansion workload {needed} (q = {q}, degree {d}) exceeds \
                 --precision-cap {cap}"
            );
        }
    }
    let rep = assemble_report(&curve)?;
    Ok(print_report(&rep, json, points))
}

fn cmd_hermitian(q: u64, emit: bool, json: bool, points: bool) -> Result<u8> {
    let curve = hermitian_curve(q)?;
    if emit {
        print!("{}", format::CurveFile::render(&curve));
        return Ok(0);
    }
    let rep = assemble_report(&curve)?;
    Ok(print_report(&rep, json, points))
}

fn cmd_recognize(path: &Path, json: bool) -> Result<u8> {
    let curve = load_curve(path)?;
    let q = curve.spec().q();
    match recognize_hermitian(&curve) {
        Recognition::Hermitian(trace) => {
            if json {
                let steps: Vec<String> = trace.steps.iter().map(|s| s.to_string()).collect();
                let v = json!({
                    "recognized": true,
                    "q": q,
                    "steps": steps,
                    "normalForm": trace.final_poly.to_string_vars("x", "y"),
                });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
            } else {
                println!("recognized: equivalent to y^{q} + y = x^{} over F_{}", q + 1, q * q);
                if trace.steps.is_empty() {
                    println!("normalization steps: none (already in normal form)");
                } else {
                    println!("normalization steps ({}):", trace.steps.len());
                    for (i, s) in trace.steps.iter().enumerate() {
                        println!("  {}. {s}", i + 1);
                    }
                }
                println!("normal form: {} = 0", trace.final_poly.to_string_vars("x", "y"));
            }
            Ok(0)
        }
        Recognition::NotHermitian { reason } => {
            if json {
                let v = json!({ "recognized": false, "reason": reason });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
            } else {
                println!("not recognized: {reason}");
            }
            Ok(2)
        }
    }
}

fn cmd_catalog(show: Option<&str>) -> Result<u8> {
    match show {
        None => {
            for (label, _) in catalog::ENTRIES {
                println!("{label}");
            }
            Ok(0)
        }
        Some(label) => match catalog::get(label) {
            Some(text) => {
                print!("{text}");
                Ok(0)
            }
            None => bail!("unknown catalog label '{label}'; run `maxcurve catalog` for the list"),
        },
    }
}

fn cmd_dichotomy(q: u64, g: u64, maximal: bool, json: bool) -> Result<u8> {
    if q < 2 {
        bail!("q must be at least 2");
    }
    let branch = dichotomy(q, g, maximal);
    let (a_lhs, a_rhs) = (4 * g, (q - 1) * (q - 1));
    let (b_lhs, b_rhs) = (2 * g, (q - 1) * q);
    let violation = branch == Branch::Neither;
    if json {
        let v = json!({
            "q": q,
            "g": g,
            "maximal": maximal,
            "branch": report::branch_name(branch),
            "checkA": { "lhs": a_lhs, "rhs": a_rhs, "holds": a_lhs <= a_rhs },
            "checkB": { "lhs": b_lhs, "rhs": b_rhs, "holds": b_lhs == b_rhs },
            "violation": violation,
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
    } else {
        println!("q = {q}, g = {g}, maximal = {maximal}");
        println!("branch A test: 4g = {a_lhs} <= (q-1)^2 = {a_rhs}: {}", a_lhs <= a_rhs);
        println!("branch B test: 2g = {b_lhs} == (q-1)q = {b_rhs}: {}", b_lhs == b_rhs);
        println!("branch: {}", report::branch_name(branch));
        if violation {
            println!("THEOREM-VIOLATION: a maximal curve matches neither branch");
        }
    }
    Ok(if violation { 2 } else { 0 })
}
