//! `demazure`: atoms, keys, basis expansions, positivity sweeps and polytope
//! pictures from the command line.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 usage or input error,
//! 3 filling budget exceeded.

mod expr;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use demazure::basis;
use demazure::exec::Exec;
use demazure::polytope::{self, Format};
use demazure::products::{self, SweepReport};
use demazure::shape;
use demazure::ssaf;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "demazure", version, about = "Demazure atoms, key polynomials and their products")]
struct Cli {
    /// Largest number of cells the filling enumeration may visit
    /// (default: $DEMAZURE_BUDGET_CELLS, else 24).
    #[arg(long, global = true)]
    budget_cells: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the atom A_α, computed by operators and by fillings.
    Atom {
        alpha: String,
        /// Pad α with zeros to this many variables.
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Print the key polynomial κ_γ, computed by operators and by fillings.
    Key {
        gamma: String,
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Expand an expression or polynomial in the atom or key basis.
    Expand {
        expr: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Atom)]
        basis: BasisArg,
        /// Number of variables (default: the smallest that fits the input).
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Run a positivity sweep and write <out>/<kind>.csv and <out>/<kind>.json.
    Sweep {
        #[arg(value_enum)]
        kind: SweepKind,
        /// Size bound for thm413, thm415, thm418 and the closed-form grid.
        #[arg(long, default_value_t = 4)]
        max: u32,
        /// Size bound on λ for thm418.
        #[arg(long, default_value_t = 3)]
        max_lambda: u32,
        /// Part bound for the key-product sweep.
        #[arg(long, default_value_t = 3)]
        max_part: u32,
        /// Only 3 is supported.
        #[arg(long, default_value_t = 3)]
        nvars: usize,
        /// Worker threads (1 runs sequentially).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Write the lattice cloud of a three-variable expression as CSV or SVG.
    Polytope { expr: String, out: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Atom,
    Key,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepKind {
    Thm413,
    Thm415,
    Thm418,
    Conjecture,
    Closedforms,
}

/// A failure with a chosen exit code.
struct Exit(u8, anyhow::Error);

fn usage(e: anyhow::Error) -> Exit {
    Exit(2, e)
}

fn budget(cli: Option<usize>) -> usize {
    cli.unwrap_or_else(ssaf::default_budget)
}

fn parse_shape(text: &str, nvars: Option<usize>) -> Result<Vec<u32>> {
    let a = shape::parse_comp(text).with_context(|| format!("bad composition {text:?}"))?;
    match nvars {
        Some(n) if n < a.len() => bail!("{text} has {} parts, more than --nvars {n}", a.len()),
        Some(n) => Ok(shape::padded(&a, n)),
        None => Ok(a),
    }
}

fn cmd_polynomial(is_key: bool, text: &str, nvars: Option<usize>, budget_cells: usize) -> Result<(), Exit> {
    let a = parse_shape(text, nvars).map_err(usage)?;
    let (name, by_ops) = if is_key { ("K", basis::key(&a)) } else { ("A", basis::atom(&a)) };
    println!("{name}{} = {by_ops}", shape::fmt_comp(&a));
    let by_fillings =
        if is_key { ssaf::key_by_fillings(&a, budget_cells) } else { ssaf::atom_by_fillings(&a, budget_cells) };
    match by_fillings {
        Ok(p) if p == *by_ops => {
            println!("operators and fillings agree");
            Ok(())
        }
        Ok(p) => Err(Exit(1, anyhow::anyhow!("routes disagree: fillings give {p}"))),
        Err(e @ demazure::Error::BudgetExceeded { .. }) => {
            Err(Exit(3, anyhow::anyhow!("{e}; only the operator route was computed")))
        }
        Err(e) => Err(usage(e.into())),
    }
}

fn cmd_expand(text: &str, b: BasisArg, nvars: Option<usize>) -> Result<(), Exit> {
    let ev = expr::evaluate(text).map_err(usage)?;
    let n = match nvars {
        Some(n) if n < ev.poly.used_vars() => {
            return Err(usage(anyhow::anyhow!("input uses {} variables, more than --nvars {n}", ev.poly.used_vars())))
        }
        Some(n) => n,
        None => ev.nvars,
    };
    let e = match b {
        BasisArg::Atom => basis::expand_atoms(&ev.poly, n),
        BasisArg::Key => basis::expand_keys(&ev.poly, n),
    };
    println!("{e}");
    Ok(())
}

#[derive(Serialize)]
struct CsvRow<'a> {
    params: &'a str,
    basis: &'a str,
    min_coeff: i64,
    verdict: &'a str,
}

fn write_report(report: &SweepReport, dir: &Path) -> Result<(PathBuf, PathBuf)> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let csv_path = dir.join(format!("{}.csv", report.kind));
    let mut w = csv::Writer::from_path(&csv_path).with_context(|| format!("writing {}", csv_path.display()))?;
    for c in &report.cases {
        w.serialize(CsvRow {
            params: &c.params,
            basis: &c.basis,
            min_coeff: c.min_coeff,
            verdict: if c.ok { "pass" } else { "fail" },
        })?;
    }
    w.flush()?;
    let json_path = dir.join(format!("{}.json", report.kind));
    fs::write(&json_path, serde_json::to_string_pretty(report)? + "\n")
        .with_context(|| format!("writing {}", json_path.display()))?;
    Ok((csv_path, json_path))
}

fn run_sweep(kind: SweepKind, max: u32, max_lambda: u32, max_part: u32, exec: Exec) -> SweepReport {
    match kind {
        SweepKind::Thm413 => products::sweep_thm413(max, exec),
        SweepKind::Thm415 => products::sweep_thm415(max, exec),
        SweepKind::Thm418 => products::sweep_thm418(max, max_lambda, exec),
        SweepKind::Conjecture => products::sweep_conjecture(max_part, exec),
        SweepKind::Closedforms => products::sweep_closed_forms(max, exec),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    kind: SweepKind,
    max: u32,
    max_lambda: u32,
    max_part: u32,
    nvars: usize,
    jobs: Option<usize>,
    out: &Path,
) -> Result<(), Exit> {
    if nvars != 3 {
        return Err(usage(anyhow::anyhow!("sweeps run in 3 variables, got --nvars {nvars}")));
    }
    let report = match jobs {
        Some(0) => return Err(usage(anyhow::anyhow!("--jobs must be at least 1"))),
        Some(1) => run_sweep(kind, max, max_lambda, max_part, Exec::Sequential),
        #[cfg(feature = "parallel")]
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| Exit(2, e.into()))?;
            pool.install(|| run_sweep(kind, max, max_lambda, max_part, Exec::Parallel))
        }
        _ => run_sweep(kind, max, max_lambda, max_part, Exec::default()),
    };
    let (csv_path, json_path) = write_report(&report, out).map_err(usage)?;
    println!(
        "{}: {} cases, {} counterexamples (run record {}, summary {})",
        report.kind,
        report.total_cases,
        report.counterexamples.len(),
        csv_path.display(),
        json_path.display()
    );
    if report.passed() {
        Ok(())
    } else {
        for c in &report.counterexamples {
            println!("counterexample: {c}");
        }
        Err(Exit(1, anyhow::anyhow!("{} counterexamples", report.counterexamples.len())))
    }
}

fn cmd_polytope(text: &str, out: &Path) -> Result<(), Exit> {
    let format = Format::from_path(out).map_err(|e| usage(e.into()))?;
    let ev = expr::evaluate(text).map_err(usage)?;
    let cloud = polytope::cloud_of(&ev.poly).map_err(|e| usage(e.into()))?;
    polytope::emit(&cloud, format, out).map_err(|e| usage(e.into()))?;
    println!("{} points, max multiplicity {}, written to {}", cloud.len(), cloud.max_multiplicity(), out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cells = budget(cli.budget_cells);
    let result = match &cli.command {
        Command::Atom { alpha, nvars } => cmd_polynomial(false, alpha, *nvars, cells),
        Command::Key { gamma, nvars } => cmd_polynomial(true, gamma, *nvars, cells),
        Command::Expand { expr, basis, nvars } => cmd_expand(expr, *basis, *nvars),
        Command::Sweep { kind, max, max_lambda, max_part, nvars, jobs, out } => {
            cmd_sweep(*kind, *max, *max_lambda, *max_part, *nvars, *jobs, out)
        }
        Command::Polytope { expr, out } => cmd_polytope(expr, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, e)) => {
            eprintln!("demazure: {e:#}");
            ExitCode::from(code)
        }
    }
}
