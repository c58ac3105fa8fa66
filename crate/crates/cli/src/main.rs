//! Command-line front end: symbolic evaluation, table export, the full
//! verification suites, and both brute-force oracles.
//!
//! Exit codes: 0 all requested checks passed (or nothing to check),
//! 1 a verification or oracle comparison failed, 2 usage or configuration
//! error.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use steinberg_whittaker::finite_oracle::{
    enumerate_cell_census, flag_count, verify_coset_representatives, Permutation,
};
use steinberg_whittaker::padic_oracle::{agreement_suite, delta_flip_control};
use steinberg_whittaker::root_system::{CartanType, Coweight, RootSystem};
use steinberg_whittaker::verify::all_suites;
use steinberg_whittaker::whittaker::{eval_whittaker, whittaker_table, Rat};
use steinberg_whittaker::{Error, Result};

#[derive(Parser)]
#[command(
    name = "whittaker",
    version,
    about = "Exact Whittaker function values on split adjoint p-adic groups, \
             with finite-field and p-adic cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one cell value, symbolically or at numeric parameters
    Eval {
        /// Cartan type, e.g. A1, B2, D4
        #[arg(long = "type")]
        cartan_type: String,
        /// Coweight coordinates, comma-separated integers of rank length
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
        /// Weyl word as comma-separated 1-based generator indices; empty = identity
        #[arg(long, default_value = "")]
        weyl: String,
        /// Satake parameters as comma-separated rationals (requires --p)
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Residue field size to substitute for q (requires --z)
        #[arg(long)]
        p: Option<i64>,
    },
    /// Export every value on a coordinate box of coweights
    Table {
        #[arg(long = "type")]
        cartan_type: String,
        /// Box radius: coordinates range over [-radius, radius]
        #[arg(long)]
        radius: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run all verification suites for one Cartan type
    Verify {
        #[arg(long = "type")]
        cartan_type: String,
    },
    /// Compare the p-adic integral oracle against the closed formula
    OraclePadic {
        #[arg(long)]
        p: i64,
        /// Satake parameter as a rational a/b
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Sweep m over -1..=mmax on both cells
        #[arg(long, default_value_t = 3)]
        mmax: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census of Bruhat cells of GL_n over a prime field
    OracleFinite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn root_system(name: &str) -> Result<RootSystem> {
    RootSystem::new(CartanType::parse(name)?)
}

fn parse_rationals(s: &str, rank: usize) -> Result<Vec<Rat>> {
    let values: Vec<Rat> = s
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<Rat>()
                .map_err(|_| Error::Usage(format!("invalid rational {tok:?}")))
        })
        .collect::<Result<_>>()?;
    if values.len() != rank {
        return Err(Error::Usage(format!(
            "expected {rank} z values, got {}",
            values.len()
        )));
    }
    Ok(values)
}

fn run(command: Command) -> Result<bool> {
    match command {
        Command::Eval {
            cartan_type,
            coweight,
            weyl,
            z,
            p,
        } => {
            let rs = root_system(&cartan_type)?;
            let lambda = Coweight::parse(&coweight, rs.rank())?;
            let w = rs.parse_weyl_word(&weyl)?;
            let value = eval_whittaker(&rs, &lambda, &w);
            match (z, p) {
                (None, None) => println!("{value}"),
                (Some(zs), Some(p)) => {
                    if p < 2 {
                        return Err(Error::Usage(format!("p must be at least 2, got {p}")));
                    }
                    let z_values = parse_rationals(&zs, rs.rank())?;
                    let number = value.specialize(Rat::from_integer(p as i128), &z_values)?;
                    println!("{number}");
                }
                _ => {
                    return Err(Error::Usage(
                        "--z and --p must be given together".into(),
                    ))
                }
            }
            Ok(true)
        }
        Command::Table {
            cartan_type,
            radius,
            format,
            out,
        } => {
            let rs = root_system(&cartan_type)?;
            let rows = whittaker_table(&rs, radius)?;
            let mut content = String::new();
            match format {
                Format::Json => {
                    for row in &rows {
                        content.push_str(&serde_json::to_string(row).expect("row serializes"));
                        content.push('\n');
                    }
                }
                Format::Csv => {
                    content.push_str("coweight,weyl_word,value\n");
                    for row in &rows {
                        content.push_str(&row.csv_line());
                        content.push('\n');
                    }
                }
            }
            emit(out.as_ref(), &content)?;
            Ok(true)
        }
        Command::Verify { cartan_type } => {
            let rs = root_system(&cartan_type)?;
            let reports = all_suites(&rs);
            let pass = reports.iter().all(|r| r.pass());
            let suites: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "checked": r.checked,
                        "pass": r.pass(),
                        "failures_total": r.failures.len(),
                        "failures": r.failures.iter().take(5).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let report = json!({
                "type": cartan_type,
                "suites": suites,
                "pass": pass,
            });
            println!("{report}");
            Ok(pass)
        }
        Command::OraclePadic { p, z, mmax, out } => {
            let z: Rat = z
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("invalid rational {z:?}")))?;
            let rows = agreement_suite(z, p, mmax, 1e-6)?;
            let flip_detected = delta_flip_control(z, p, mmax, 1e-6)?;
            let all_rows_pass = rows.iter().all(|r| r.pass);
            let mut content = String::new();
            for row in &rows {
                let line = json!({
                    "p": row.p,
                    "z": row.z.to_string(),
                    "m": row.m,
                    "w": row.w.to_string(),
                    "oracle": [row.oracle.re, row.oracle.im],
                    "formula": row.formula.to_string(),
                    "abs_err": row.abs_err,
                    "pass": row.pass,
                });
                content.push_str(&line.to_string());
                content.push('\n');
            }
            let pass = all_rows_pass && flip_detected;
            let summary = json!({
                "rows": rows.len(),
                "flip_control": flip_detected,
                "pass": pass,
            });
            content.push_str(&summary.to_string());
            content.push('\n');
            emit(out.as_ref(), &content)?;
            Ok(pass)
        }
        Command::OracleFinite { n, p, out } => {
            let census = enumerate_cell_census(n, p)?;
            let mut reps_verified = true;
            for sigma in Permutation::all(n) {
                reps_verified &= verify_coset_representatives(&sigma, p)?;
            }
            let expected: BTreeMap<String, u64> = census
                .expected_counts()
                .iter()
                .map(|(s, &c)| (s.word_string(), c))
                .collect();
            let pass = census.matches_expected() && reps_verified;
            let report = json!({
                "n": n,
                "p": p,
                "census": census.counts_by_word(),
                "expected": expected,
                "total": census.total(),
                "flag_count": flag_count(n, p),
                "reps_verified": reps_verified,
                "pass": pass,
            });
            let mut content = report.to_string();
            content.push('\n');
            emit(out.as_ref(), &content)?;
            Ok(pass)
        }
    }
}
