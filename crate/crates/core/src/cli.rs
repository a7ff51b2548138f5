//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for bad invocations (clap usage errors and rejected arguments). Output
//! is byte-identical across runs for a fixed configuration, whatever the
//! thread count.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::delta::{
    verify_generation, verify_pairing, verify_q_image, verify_stability, Side, ValuationReport,
};
use crate::error::{Error, Result};
use crate::experiments::{
    chess_table, cross_model_check, exhaustive_bound_check, factorial_report, general_e_scan,
    pair_sum_row, rows_to_csv, rows_to_json_lines, FactorizationRow, ScanConfig,
};
use crate::fock::apply_word;
use crate::polyrep::apply_word_poly;
use crate::tableaux::ResidueWord;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunStatus {
    AllPassed,
    CheckFailed,
}

impl RunStatus {
    pub fn code(self) -> u8 {
        match self {
            RunStatus::AllPassed => EXIT_OK,
            RunStatus::CheckFailed => EXIT_FAILED,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    QImage,
    Stability,
    Generation,
    Pairing,
    Bound,
    Factorial,
    CrossModel,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "chesstab",
    version,
    about = "Chess tableaux, residue words and 2-adic divisibility checks"
)]
pub struct RunConfig {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "CHESSTAB_THREADS", default_value_t = 0)]
    pub threads: usize,

    /// Seed for the randomized adjointness checks.
    #[arg(long, global = true, default_value_t = 20211)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum of squared chess-tableau counts for n = 1..=n-max.
    ChessTable {
        #[arg(long, default_value_t = 18, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
    /// sum_lambda C_e(v, lambda) C_e(w, lambda) for explicit words.
    PairSum(PairArgs),
    /// Pair sums of the cyclic word at residue modulus e, or of explicit words.
    Scan {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        e: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..))]
        p: u64,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        w: Option<String>,
    },
    /// Run one verifier suite (or all of them).
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Degree bound; for the word-based suites, the largest word length.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        /// Largest n for the q-image suite.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Largest word length for the exhaustive pair scans.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        scan_bound: u64,
        /// Random adjointness samples in the cross-model suite.
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Dump the Fock image (and, for e = 2, the polynomial image) of a word.
    Word {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        e: u64,
        #[arg(long)]
        v: String,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub e: u64,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..))]
    pub p: u64,
    #[arg(long)]
    pub v: String,
    #[arg(long)]
    pub w: String,
}

/// Runs `config` on a dedicated pool of `config.threads` workers.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<RunStatus> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let mut buf = Vec::new();
    let status = pool.install(|| dispatch(config, &mut buf));
    out.write_all(&buf).map_err(io_err)?;
    status
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("write failed: {e}"))
}

fn write_rows(rows: &[FactorizationRow], format: Format, out: &mut dyn Write) -> Result<RunStatus> {
    let text = match format {
        Format::Csv => rows_to_csv(rows),
        Format::Json => rows_to_json_lines(rows),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    let failed = rows
        .iter()
        .any(|r| r.verdict == crate::experiments::RowVerdict::Fail);
    Ok(if failed {
        RunStatus::CheckFailed
    } else {
        RunStatus::AllPassed
    })
}

fn write_reports(
    reports: &[ValuationReport],
    format: Format,
    out: &mut dyn Write,
) -> Result<RunStatus> {
    let mut ok = true;
    for r in reports {
        let line = match format {
            Format::Json => r.to_json(),
            Format::Csv if r.passed() => r.summary(),
            Format::Csv => format!("{}\n{}", r.summary(), r.to_json()),
        };
        writeln!(out, "{line}").map_err(io_err)?;
        ok &= r.passed();
    }
    Ok(if ok {
        RunStatus::AllPassed
    } else {
        RunStatus::CheckFailed
    })
}

fn dispatch(config: &RunConfig, out: &mut dyn Write) -> Result<RunStatus> {
    match &config.command {
        Command::ChessTable { n_max } => {
            write_rows(&chess_table(*n_max as usize)?, config.format, out)
        }
        Command::PairSum(args) => {
            let v = ResidueWord::parse(args.e as usize, &args.v)?;
            let w = ResidueWord::parse(args.e as usize, &args.w)?;
            let row = pair_sum_row(&v, &w, args.p)?;
            match config.format {
                Format::Csv => {
                    writeln!(out, "{}", row.value).map_err(io_err)?;
                    Ok(if row.verdict == crate::experiments::RowVerdict::Fail {
                        RunStatus::CheckFailed
                    } else {
                        RunStatus::AllPassed
                    })
                }
                Format::Json => write_rows(&[row], config.format, out),
            }
        }
        Command::Scan { e, p, n_max, v, w } => {
            let rows = match (v, w) {
                (Some(v), Some(w)) => {
                    let v = ResidueWord::parse(*e as usize, v)?;
                    let w = ResidueWord::parse(*e as usize, w)?;
                    vec![pair_sum_row(&v, &w, *p)?]
                }
                (None, None) => general_e_scan(*n_max as usize, *e as usize, *p)?,
                _ => return Err(Error::InvalidArgument("--v and --w go together".into())),
            };
            write_rows(&rows, config.format, out)
        }
        Command::Verify {
            suite,
            degree,
            n_max,
            scan_bound,
            samples,
        } => {
            let scan = ScanConfig {
                max_n: *scan_bound as usize,
            };
            let reports = run_suite(
                *suite,
                *degree as usize,
                *n_max as usize,
                &scan,
                *samples,
                config.seed,
            )?;
            write_reports(&reports, config.format, out)
        }
        Command::Word { e, v } => {
            let word = ResidueWord::parse(*e as usize, v)?;
            write_word(&word, config.format, out)?;
            Ok(RunStatus::AllPassed)
        }
    }
}

/// Reports for `suite`. Word-based suites run every length `1..=degree`;
/// under `All` their lengths are capped at the scan bound.
pub fn run_suite(
    suite: Suite,
    degree: usize,
    n_max: usize,
    scan: &ScanConfig,
    samples: usize,
    seed: u64,
) -> Result<Vec<ValuationReport>> {
    let mut reports = Vec::new();
    let capped = degree.min(scan.max_n);
    match suite {
        Suite::QImage => {
            for n in 1..=n_max {
                reports.push(verify_q_image(n, degree, Side::Multiply)?);
                reports.push(verify_q_image(n, degree, Side::Adjoint)?);
            }
        }
        Suite::Stability => reports.push(verify_stability(degree)?),
        Suite::Generation => {
            for n in 1..=degree {
                reports.push(verify_generation(n)?);
            }
        }
        Suite::Pairing => {
            for n in 1..=degree {
                reports.push(verify_pairing(n)?);
            }
        }
        Suite::Bound => {
            for n in 1..=degree {
                reports.push(exhaustive_bound_check(n, scan)?);
            }
        }
        Suite::Factorial => {
            for n in 1..=degree {
                reports.push(factorial_report(n)?);
            }
        }
        Suite::CrossModel => {
            for n in 1..=degree {
                reports.push(cross_model_check(n, samples, seed, scan)?);
            }
        }
        Suite::All => {
            reports.extend(run_suite(
                Suite::QImage,
                degree,
                n_max,
                scan,
                samples,
                seed,
            )?);
            reports.extend(run_suite(
                Suite::Stability,
                degree,
                n_max,
                scan,
                samples,
                seed,
            )?);
            reports.extend(run_suite(
                Suite::Generation,
                capped,
                n_max,
                scan,
                samples,
                seed,
            )?);
            reports.extend(run_suite(
                Suite::Pairing,
                degree,
                n_max,
                scan,
                samples,
                seed,
            )?);
            reports.extend(run_suite(Suite::Bound, capped, n_max, scan, samples, seed)?);
            reports.extend(run_suite(
                Suite::Factorial,
                degree,
                n_max,
                scan,
                samples,
                seed,
            )?);
            reports.extend(run_suite(
                Suite::CrossModel,
                capped,
                n_max,
                scan,
                samples,
                seed,
            )?);
        }
    }
    Ok(reports)
}

fn write_word(word: &ResidueWord, format: Format, out: &mut dyn Write) -> Result<()> {
    let fock = apply_word(word);
    let poly = if word.e() == 2 {
        Some(apply_word_poly(word)?)
    } else {
        None
    };
    match format {
        Format::Csv => {
            writeln!(out, "model,key,coefficient").map_err(io_err)?;
            for (lambda, c) in fock.iter() {
                writeln!(out, "fock,\"{lambda}\",{c}").map_err(io_err)?;
            }
            if let Some(poly) = &poly {
                for (mu, c) in poly.iter() {
                    writeln!(out, "poly,\"{mu}\",{c}").map_err(io_err)?;
                }
            }
        }
        Format::Json => {
            let fock: Vec<_> = fock
                .iter()
                .map(|(l, c)| (l.to_string(), c.to_string()))
                .collect();
            let poly: Option<Vec<_>> = poly.map(|p| {
                p.iter()
                    .map(|(m, c)| (m.to_string(), c.to_string()))
                    .collect()
            });
            let value = serde_json::json!({ "word": word.to_string(), "e": word.e(), "fock": fock, "poly": poly });
            writeln!(out, "{value}").map_err(io_err)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<RunStatus>, String) {
        let config =
            RunConfig::try_parse_from(std::iter::once("chesstab").chain(args.iter().copied()))
                .unwrap();
        let mut buf = Vec::new();
        let status = run(&config, &mut buf);
        (status, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn pair_sum_command() {
        let (status, out) = run_args(&["pair-sum", "--e", "2", "--v", "0,1,0,1", "--w", "0,1,0,1"]);
        assert_eq!(status.unwrap(), RunStatus::AllPassed);
        assert_eq!(out, "4\n");
        let (status, _) = run_args(&["pair-sum", "--v", "0,1", "--w", "0,1,0"]);
        assert!(matches!(status, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn usage_errors_are_rejected_by_the_parser() {
        assert!(RunConfig::try_parse_from(["chesstab", "chess-table", "--n-max", "0"]).is_err());
        assert!(RunConfig::try_parse_from(["chesstab", "verify", "--suite", "nope"]).is_err());
    }

    #[test]
    fn word_dump() {
        let (_, out) = run_args(&["word", "--v", "0,1"]);
        assert_eq!(
            out,
            "model,key,coefficient\nfock,\"[1,1]\",1\nfock,\"[2]\",1\npoly,\"[1,1]\",1\n"
        );
    }

    #[test]
    fn suite_all_small() {
        let (status, out) = run_args(&[
            "verify",
            "--suite",
            "all",
            "--degree",
            "4",
            "--n-max",
            "3",
            "--samples",
            "4",
        ]);
        assert_eq!(status.unwrap(), RunStatus::AllPassed, "{out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")));
    }
}
