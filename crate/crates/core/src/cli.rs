//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure,
//! 2 on usage or data errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use crate::codes24::{decomposition, CodeDatabase, CLASSIFICATION};
use crate::enumerator::{weight_enumerator, weight_enumerator_decomposed};
use crate::gf2::{build_d, build_e7, build_e8, build_golay, BinaryCode};
use crate::poly::{int, MultiPoly};
use crate::theorems::{Suite, VerificationReport, Verifier, TABLE_M};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming a default code data file.
pub const DATA_ENV: &str = "TYPEII24_DATA";

#[derive(Parser, Debug)]
#[command(name = "typeii24", version, about = "Weight enumerators of the Type II codes of length 24")]
struct Cli {
    /// Code data file overriding the embedded database.
    #[arg(long, global = true)]
    data: Option<PathBuf>,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the genus-g weight enumerator of a code.
    Enumerate {
        /// C1..C9, d4..d24, e7, e8, golay or d16plus.
        code: String,
        genus: usize,
        /// Output format (positional form of --format).
        #[arg(value_enum)]
        format: Option<Format>,
        #[arg(long = "format", value_enum, conflicts_with = "format")]
        format_flag: Option<Format>,
    },
    /// Run a group of checks.
    Verify {
        /// all, thm1, thm2, prop1, congruences, lagrange or genus3.
        selector: String,
        /// Restrict a congruence suite to one pair of codes.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regenerate the h table and the m table from the data.
    Tables,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Normal output goes to `out`, errors to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        // ignored if a pool already exists in this process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    match execute(&cli, out) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load_db(cli: &Cli) -> Result<CodeDatabase, String> {
    let path = cli
        .data
        .clone()
        .or_else(|| std::env::var_os(DATA_ENV).map(PathBuf::from));
    match path {
        Some(p) => CodeDatabase::load(&p).map_err(|e| e.to_string()),
        None => CodeDatabase::embedded().map_err(|e| e.to_string()),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    match &cli.command {
        Command::Enumerate {
            code,
            genus,
            format,
            format_flag,
        } => {
            let format = format.or(*format_flag).unwrap_or(Format::Text);
            let poly = enumerate(cli, code, *genus)?;
            let text = match format {
                Format::Text => poly.to_text(),
                Format::Latex => poly.to_latex(),
                Format::Json => serde_json::to_string_pretty(&poly.to_json()).map_err(|e| e.to_string())?,
            };
            writeln!(out, "{text}").map_err(|e| e.to_string())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            selector,
            pair,
            format,
        } => {
            let suite: Suite = selector.parse().map_err(|e: crate::theorems::TheoremError| e.to_string())?;
            let verifier = Verifier::new(load_db(cli)?).map_err(|e| e.to_string())?;
            let reports = match pair {
                Some(p) => pair_reports(&verifier, suite, p[0], p[1])?,
                None => verifier.run(suite).map_err(|e| e.to_string())?,
            };
            print_reports(&reports, *format, out)?;
            Ok(if reports.iter().all(VerificationReport::passed) {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Tables => tables(cli, out),
    }
}

fn pair_reports(
    verifier: &Verifier,
    suite: Suite,
    i: usize,
    j: usize,
) -> Result<Vec<VerificationReport>, String> {
    let err = |e: crate::theorems::TheoremError| e.to_string();
    Ok(match suite {
        Suite::Thm1 => vec![verifier.verify_thm1_congruence(i, j).map_err(err)?],
        Suite::Thm2 => vec![verifier.verify_cor_congruence_g2(i, j).map_err(err)?],
        Suite::Congruences => vec![
            verifier.verify_thm1_congruence(i, j).map_err(err)?,
            verifier.verify_cor_congruence_g2(i, j).map_err(err)?,
        ],
        _ => return Err("--pair applies to thm1, thm2 and congruences".into()),
    })
}

fn named_code(cli: &Cli, name: &str) -> Result<BinaryCode, String> {
    if let Some(idx) = name.strip_prefix('C') {
        let i: usize = idx.parse().map_err(|_| format!("unknown code {name:?}"))?;
        let db = load_db(cli)?;
        return db
            .get(i)
            .map(|r| r.code.clone())
            .ok_or_else(|| format!("unknown code {name:?}"));
    }
    match name {
        "e7" => Ok(build_e7()),
        "e8" => Ok(build_e8()),
        "golay" | "g24" => Ok(build_golay()),
        "d16plus" => crate::codes24::d16_plus().map_err(|e| e.to_string()),
        _ => {
            let n: usize = name
                .strip_prefix('d')
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| format!("unknown code {name:?}"))?;
            if n > 24 {
                return Err(format!("unknown code {name:?}"));
            }
            build_d(n).map_err(|e| e.to_string())
        }
    }
}

fn enumerate(cli: &Cli, name: &str, genus: usize) -> Result<MultiPoly, String> {
    let code = named_code(cli, name)?;
    match weight_enumerator(&code, genus) {
        Ok(p) => Ok(p),
        Err(e @ crate::enumerator::EnumError::BudgetExceeded { .. }) => {
            // C8 and C9 have a direct-sum form the product rule can use
            let parts = match name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
                Some(i) => decomposition(i).map_err(|e| e.to_string())?,
                None => None,
            };
            match parts {
                Some(parts) => weight_enumerator_decomposed(&parts, genus).map_err(|e| e.to_string()),
                None => Err(e.to_string()),
            }
        }
        Err(e) => Err(e.to_string()),
    }
}

fn print_reports(reports: &[VerificationReport], format: Format, out: &mut dyn Write) -> Result<(), String> {
    let io = |e: std::io::Error| e.to_string();
    match format {
        Format::Json => {
            let s = serde_json::to_string_pretty(reports).map_err(|e| e.to_string())?;
            writeln!(out, "{s}").map_err(io)?;
        }
        Format::Text | Format::Latex => {
            for r in reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                let detail = match &r.witness {
                    Some(crate::theorems::Witness::Detail { text }) => format!("  {text}"),
                    Some(crate::theorems::Witness::Mismatch {
                        exponents,
                        expected,
                        actual,
                    }) => format!("  first mismatch at {exponents:?}: expected {expected}, got {actual}"),
                    _ => String::new(),
                };
                writeln!(out, "{status} {}{detail}", r.claim).map_err(io)?;
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} checks passed", reports.len()).map_err(io)?;
        }
    }
    Ok(())
}

fn tables(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    let db = load_db(cli)?;
    let mut ok = true;
    writeln!(out, "h_i: weight-4 count per coordinate").map_err(io)?;
    writeln!(out, "{:>2}  {:<10} {:>6} {:>6}", "i", "components", "h", "table").map_err(io)?;
    let mut hs = Vec::new();
    for (r, &(_, comps, (n, d))) in db.records().iter().zip(&CLASSIFICATION) {
        let h = crate::codes24::compute_h(&r.code).map_err(|e| e.to_string())?;
        let table = crate::poly::rat(n, d);
        let mark = if h == table { "" } else { "  MISMATCH" };
        ok &= h == table;
        writeln!(out, "{:>2}  {:<10} {:>6} {:>6}{mark}", r.index, comps, h.to_string(), table.to_string())
            .map_err(io)?;
        hs.push(h);
    }
    writeln!(out).map_err(io)?;
    writeln!(out, "m = |4h_i - 4h_j|").map_err(io)?;
    write!(out, "    ").map_err(io)?;
    for j in 2..=8 {
        write!(out, "{:>4}", format!("h{j}")).map_err(io)?;
    }
    writeln!(out).map_err(io)?;
    for i in 1..=7 {
        write!(out, "{:<4}", format!("h{i}")).map_err(io)?;
        for j in 2..=8 {
            if j <= i {
                write!(out, "{:>4}", "").map_err(io)?;
                continue;
            }
            let m = ((&hs[i - 1] - &hs[j - 1]) * int(4)).abs();
            let table = int(TABLE_M[i - 1][j - 1] as i64);
            if m == table {
                write!(out, "{:>4}", m.to_string()).map_err(io)?;
            } else {
                ok = false;
                write!(out, "{:>4}", format!("{m}!")).map_err(io)?;
            }
        }
        writeln!(out).map_err(io)?;
    }
    writeln!(out, "{}", if ok { "all entries match" } else { "mismatches marked" }).map_err(io)?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}
