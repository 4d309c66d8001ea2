//! `multiseg` — JSON command-line front end for the multisegment calculus.
//!
//! Subcommands:
//! - `speh`        build a Speh multisegment;
//! - `dual`        apply the involution (either side, optionally traced);
//! - `derive`      derivative operators on a multisegment;
//! - `compose`     composition series report of a frame product;
//! - `lattice`     its chain of subrepresentation factor sets;
//! - `oracle`      the independent factor re-derivation;
//! - `check`       sweep comparing oracle and closed form;
//! - `render`      ASCII diagram of a multisegment;
//! - `conjecture`  conjectural factor list for Speh × Speh, flagged as such.
//!
//! Results go to standard output as JSON (or text where noted). Errors exit
//! with code 1 and print `{"error":{"kind":…,"message":…}}` on standard
//! error; flag errors exit with code 2.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use multiseg::{
    agreement_sweep, compose_langlands, compose_zelevinsky, conjecture_jh, derivative_ladder,
    derivative_ladder_dual, lattice_chain, mw_dual, mw_dual_left, mw_dual_left_with_trace,
    mw_dual_with_trace, oracle_composition, render_multisegment, render_pair, speh, Error,
    HalfExp, Line, Multisegment, OracleCache, OracleOptions, Result, SideCondition, Sign,
    SpehPairParams,
};

#[derive(Parser)]
#[command(name = "multiseg", version, about = "Exact multisegment calculus for Speh products")]
struct Cli {
    /// Cuspidal line label every constructed object lives on.
    #[arg(long, global = true, default_value = "rho")]
    line: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    /// Zelevinsky parametrization.
    Z,
    /// Langlands parametrization.
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideConditionArg {
    /// The side condition exactly as stated.
    Verbatim,
    /// Linking only.
    None,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Speh multisegment with `n` rows of width `d`.
    Speh {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        /// Central exponent, e.g. "0", "-2", "3/2".
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        shift: String,
    },
    /// Apply the involution to the multisegment in FILE.
    Dual {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        /// Emit the full round-by-round trace instead of the bare result.
        #[arg(long)]
        trace: bool,
    },
    /// Derivative operators on the multisegment in FILE.
    Derive {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        /// Use the beginning-side operator instead of the end-side one.
        #[arg(long)]
        dual: bool,
        /// Print only the highest derivative (a multisegment).
        #[arg(long)]
        highest: bool,
    },
    /// Composition series report for the (n, d, k) frame product.
    Compose {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long)]
        k: u32,
        /// "+"/"plus" or "-"/"minus".
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long, value_enum, default_value = "z")]
        basis: BasisArg,
        /// Print the frame's ASCII diagram instead of the JSON report.
        #[arg(long)]
        ascii: bool,
    },
    /// Chain of subrepresentation factor sets for the (n, d, k) product.
    Lattice {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "+", allow_hyphen_values = true, value_parser = parse_sign)]
        sign: Sign,
    },
    /// Re-derive the factor set independently of the closed form.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long)]
        k: u32,
        /// Node cap for each ordering closure.
        #[arg(long, value_name = "M")]
        max_nodes: Option<usize>,
    },
    /// Compare oracle and closed form over a parameter sweep.
    Check {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        nmax: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dmax: u32,
        /// Upper bound for k (default: n+d+1 per cell).
        #[arg(long)]
        kmax: Option<u32>,
        /// Worker threads.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(usize))]
        jobs: usize,
    },
    /// ASCII diagram of the multisegment in FILE.
    Render {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
    },
    /// Conjectural factor list for the product of the two Speh
    /// multisegments in FILE1 and FILE2. Output is flagged conjectural.
    Conjecture {
        #[arg(long, value_name = "FILE1")]
        pi1: PathBuf,
        #[arg(long, value_name = "FILE2")]
        pi2: PathBuf,
        #[arg(long, value_enum, default_value = "verbatim")]
        side_condition: SideConditionArg,
    },
}

fn parse_sign(s: &str) -> std::result::Result<Sign, String> {
    Sign::from_str(s).map_err(|e| e.to_string())
}

fn read_multisegment(path: &Path) -> Result<Multisegment> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Write to standard output, exiting quietly when the reader went away
/// (e.g. piping into `head`).
fn write_stdout(text: &str) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Error::Io(format!("stdout: {e}"))),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::InternalInconsistency(format!("serialization failed: {e}")))?;
    text.push('\n');
    write_stdout(&text)
}

fn run(cli: Cli) -> Result<()> {
    let line = Line::new(&cli.line);
    match cli.command {
        Command::Speh { n, d, shift } => {
            let center: HalfExp = shift.parse()?;
            print_json(&speh(n, d, center, &line))
        }
        Command::Dual { r#in, side, trace } => {
            let a = read_multisegment(&r#in)?;
            match (side, trace) {
                (SideArg::Right, false) => print_json(&mw_dual(&a)),
                (SideArg::Left, false) => print_json(&mw_dual_left(&a)),
                (SideArg::Right, true) => print_json(&mw_dual_with_trace(&a)),
                (SideArg::Left, true) => print_json(&mw_dual_left_with_trace(&a)),
            }
        }
        Command::Derive { r#in, dual, highest } => {
            let a = read_multisegment(&r#in)?;
            match (highest, dual) {
                (true, false) => print_json(&a.minus_ends()),
                (true, true) => print_json(&a.minus_begins()),
                (false, false) => print_json(&derivative_ladder(&a)?),
                (false, true) => print_json(&derivative_ladder_dual(&a)?),
            }
        }
        Command::Compose { n, d, k, sign, basis, ascii } => {
            if ascii {
                return write_stdout(&render_pair(&SpehPairParams::new(n, d, k, &line)));
            }
            match basis {
                BasisArg::Z => print_json(&compose_zelevinsky(n, d, k, sign, &line)),
                BasisArg::L => print_json(&compose_langlands(n, d, k, sign, &line)?),
            }
        }
        Command::Lattice { n, d, k, sign } => print_json(&lattice_chain(n, d, k, sign, &line)?),
        Command::Oracle { n, d, k, max_nodes } => {
            let mut opts = OracleOptions::default();
            if let Some(m) = max_nodes {
                opts.max_closure_nodes = m;
            }
            print_json(&oracle_composition(n, d, k, &line, &opts, &OracleCache::new())?)
        }
        Command::Check { nmax, dmax, kmax, jobs } => {
            let opts = OracleOptions::default();
            let cells = agreement_sweep(nmax, dmax, kmax, jobs, &line, &opts)?;
            let disagreements: Vec<(u32, u32, u32)> = cells
                .iter()
                .filter(|c| !c.agree)
                .map(|c| (c.n, c.d, c.k))
                .collect();
            print_json(&serde_json::json!({
                "nmax": nmax,
                "dmax": dmax,
                "kmax": kmax,
                "cells": cells,
                "all_agree": disagreements.is_empty(),
            }))?;
            if let Some(&(n, d, k)) = disagreements.first() {
                return Err(Error::AgreementFailure(format!(
                    "{} of {} cells disagree, first at (n,d,k)=({n},{d},{k})",
                    disagreements.len(),
                    cells.len()
                )));
            }
            Ok(())
        }
        Command::Render { r#in } => {
            let a = read_multisegment(&r#in)?;
            write_stdout(&render_multisegment(&a))
        }
        Command::Conjecture { pi1, pi2, side_condition } => {
            let pi1 = read_multisegment(&pi1)?;
            let pi2 = read_multisegment(&pi2)?;
            let side = match side_condition {
                SideConditionArg::Verbatim => SideCondition::Verbatim,
                SideConditionArg::None => SideCondition::None,
            };
            print_json(&conjecture_jh(&pi1, &pi2, side)?)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        let envelope =
            serde_json::json!({"error": {"kind": err.kind(), "message": err.to_string()}});
        eprintln!("{envelope}");
        std::process::exit(1);
    }
}
