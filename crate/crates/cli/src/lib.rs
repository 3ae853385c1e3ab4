//! Command-line front end: every operation of the core library as a
//! subcommand that prints a report and emits JSON certificates.

pub mod commands;
pub mod criteria;
pub mod report;
pub mod reverify;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use holonomy_core::algebra::rational::parse_rational;
use holonomy_core::algebra::Rational;
use holonomy_core::certificate::Certificate;
use holonomy_core::error::Error;

use crate::commands::Outcome;

/// Exit status of a verified success.
pub const EXIT_OK: i32 = 0;
/// Exit status of a failed check or internal identity.
pub const EXIT_FAILED: i32 = 1;
/// Exit status of bad input (flags, numbers, polynomials, domains).
pub const EXIT_BAD_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "holonomy-cert", version, about = "Exact certificates for the m137 character variety and its Dehn fillings")]
pub struct Cli {
    /// Rendering written to stdout (and to --output, if given).
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the certificates (JSON, or CSV with --format csv) to this file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Tolerance override `name=value`; `bound` sets the interval-bound tolerance.
    #[arg(long = "tol", value_name = "NAME=VALUE", global = true)]
    pub tolerances: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derive the character curve P(s,t) = 0.
    DeriveCurve {
        /// Skip the direct elimination and use the membership route.
        #[arg(long)]
        fallback: bool,
    },
    /// Certify that P is irreducible over Q(s)[t].
    Irreducibility,
    /// Compute the real domains U (traces) and V (longitude eigenvalues).
    Domains,
    /// Classify the real characters above s (or the point (s, t)).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Decide whether the n-filling has a real solution in V.
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Certify every nonzero slope in [from, to].
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
    /// Derive the negative-slope threshold N0 and its constants.
    Threshold,
    /// Exhibit the real root of G for a positive slope n.
    Witness {
        #[arg(long)]
        n: i64,
    },
    /// Check the A-polynomial identities and numeric boundary characters.
    ApolyValidate,
    /// Check whether every nonzero coefficient of an Alexander polynomial is ±1.
    Alexander {
        #[arg(long)]
        poly: String,
    },
    /// Run the full invariant suite.
    Selftest {
        /// Smaller sample sizes.
        #[arg(long)]
        quick: bool,
    },
    /// Re-run the operation named by each certificate in a JSON file and compare.
    Verify { file: PathBuf },
}

/// Parsed `--tol` overrides.
#[derive(Debug, Default)]
pub struct Tolerances {
    pub bound: Option<Rational>,
}

fn bad_input(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub fn parse_tolerances(items: &[String]) -> Result<Tolerances, Error> {
    let mut map = BTreeMap::new();
    for item in items {
        let (k, v) = item.split_once('=').ok_or_else(|| bad_input(format!("tolerance `{item}` is not name=value")))?;
        map.insert(k.trim().to_string(), parse_rational(v)?);
    }
    let mut t = Tolerances::default();
    for (k, v) in map {
        match k.as_str() {
            "bound" => {
                if v <= Rational::from_integer(0.into()) {
                    return Err(Error::Domain("the bound tolerance must be positive".into()));
                }
                t.bound = Some(v)
            }
            other => return Err(bad_input(format!("unknown tolerance `{other}` (known: bound)"))),
        }
    }
    Ok(t)
}

/// Exit status for an error: bad input is 2, a failed computation is 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Domain(_) | Error::Inconsistent(_) => EXIT_BAD_INPUT,
        Error::Groebner(_) | Error::Verification(_) | Error::MissingGenerator(_) => EXIT_FAILED,
    }
}

fn certificates_json(certs: &[Certificate]) -> String {
    let v = if certs.len() == 1 {
        serde_json::to_value(&certs[0])
    } else {
        serde_json::to_value(certs)
    };
    serde_json::to_string_pretty(&v.expect("certificates serialize")).expect("json renders") + "\n"
}

fn execute(command: &Command, tol: &Tolerances, out: &mut dyn Write) -> Result<Outcome, Error> {
    match command {
        Command::DeriveCurve { fallback } => commands::derive_curve(*fallback),
        Command::Irreducibility => commands::irreducibility(),
        Command::Domains => commands::domains(),
        Command::Classify { s, t } => {
            let s = parse_rational(s)?;
            let t = t.as_deref().map(parse_rational).transpose()?;
            commands::classify(&s, t.as_ref())
        }
        Command::Certify { n } => commands::certify(*n),
        Command::Scan { from, to, jobs } => commands::scan(*from, *to, *jobs as usize),
        Command::Threshold => commands::threshold(tol.bound.as_ref()),
        Command::Witness { n } => commands::witness(*n),
        Command::ApolyValidate => commands::apoly_validate(),
        Command::Alexander { poly } => commands::alexander(poly),
        Command::Selftest { quick } => {
            let size = if *quick { criteria::SuiteSize::quick() } else { criteria::SuiteSize::full() };
            let mut ok = true;
            for r in criteria::run_all(size) {
                // progress as it happens; the suite takes a while
                let _ = writeln!(out, "{}", r.line());
                ok &= r.passed;
            }
            Ok(Outcome { certificates: Vec::new(), text: String::new(), csv: None, ok })
        }
        Command::Verify { file } => {
            let body = std::fs::read_to_string(file).map_err(|e| bad_input(format!("{}: {e}", file.display())))?;
            let certs = reverify::parse_certificates(&body)?;
            let mut text = String::new();
            let mut ok = true;
            for c in &certs {
                let r = reverify::reverify(c)?;
                text.push_str(&format!(
                    "{}: facts {}, verdict {}\n",
                    r.kind,
                    if r.same_facts { "reproduced" } else { "DIFFER" },
                    if r.same_verdict { "reproduced" } else { "DIFFERS" }
                ));
                ok &= r.passed();
            }
            Ok(Outcome { certificates: certs, text, csv: None, ok })
        }
    }
}

/// Runs a command line; returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(stdout, "{rendered}") } else { write!(stderr, "{rendered}") };
            return code;
        }
    };
    let result = parse_tolerances(&cli.tolerances).and_then(|tol| {
        if cli.format == Format::Csv && !matches!(cli.command, Command::Scan { .. }) {
            return Err(bad_input("--format csv is only available for scan"));
        }
        execute(&cli.command, &tol, stdout)
    });
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let rendered = match cli.format {
        Format::Text => outcome.text.clone(),
        Format::Json => certificates_json(&outcome.certificates),
        Format::Csv => outcome.csv.clone().unwrap_or_default(),
    };
    let _ = write!(stdout, "{rendered}");
    if let Some(path) = &cli.output {
        let artifact = match cli.format {
            Format::Csv => outcome.csv.clone().unwrap_or_default(),
            _ => certificates_json(&outcome.certificates),
        };
        if let Err(e) = std::fs::write(path, artifact) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return EXIT_BAD_INPUT;
        }
    }
    if outcome.ok {
        EXIT_OK
    } else {
        let _ = writeln!(stderr, "a check failed; see the report above");
        EXIT_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("holonomy-cert").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unknown_flag_is_bad_input_with_usage() {
        let (code, _, err) = run_args(&["certify", "--n", "3", "--frobnicate"]);
        assert_eq!(code, EXIT_BAD_INPUT);
        assert!(err.contains("Usage"), "{err}");
    }

    #[test]
    fn tolerance_keys() {
        assert!(parse_tolerances(&["bound=1/1000".into()]).unwrap().bound.is_some());
        assert!(parse_tolerances(&["speed=1".into()]).is_err());
        assert!(parse_tolerances(&["bound".into()]).is_err());
        assert!(matches!(parse_tolerances(&["bound=-1".into()]), Err(Error::Domain(_))));
    }

    #[test]
    fn csv_only_for_scan() {
        let (code, _, _) = run_args(&["--format", "csv", "certify", "--n", "2"]);
        assert_eq!(code, EXIT_BAD_INPUT);
    }

    #[test]
    fn zero_slope_is_bad_input() {
        assert_eq!(run_args(&["certify", "--n", "0"]).0, EXIT_BAD_INPUT);
    }
}
