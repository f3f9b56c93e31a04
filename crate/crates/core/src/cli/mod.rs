//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 counterexample or invalid certificate, 2 usage
//! error or invalid input, 3 factoring budget exhausted.

pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::arith::FactorConfig;
use crate::contribution::{classify, linked_prime, ClassTag};
use crate::lemma_lab::{find_shared_largest, reconstruct_from_d, verify, LemmaId, SweepOptions};
use crate::lp::{build_system, check_certificate, optimize, Certificate, Variant};
use crate::polynomial::proposition_report;
use crate::{Error, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "opn-bounds", version, about = "Lemma sweeps, prime classification and exact LP certificates for odd perfect number bounds")]
pub struct RunConfig {
    /// Write JSON to this file instead of printing a table.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Work budget for each factorisation.
    #[arg(long, global = true, default_value_t = 100_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relation system and certificates.
    #[command(subcommand)]
    Lp(LpCommand),
    /// Exhaustively sweep one lemma up to a bound.
    Verify(VerifyArgs),
    /// Contributed primes and class of p with p² exactly dividing N.
    Classify { p: u64 },
    /// Linked prime of p.
    Link { p: u64 },
    /// Primes of one class sharing their largest contributed prime.
    Collide(CollideArgs),
    /// Whether Φ_{2t} divides Φ_t(Ψ_r).
    Cyclo {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        r: u64,
    },
    /// Recover (a, b, c) from the smaller contributed prime d.
    Reconstruct {
        #[arg(long)]
        d: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum LpCommand {
    /// Optimal certificate for a variant.
    Solve {
        #[arg(long, default_value = "standard")]
        variant: Variant,
    },
    /// Validate a certificate JSON file.
    Check { file: PathBuf },
    /// Print the relation system.
    System {
        #[arg(long, default_value = "standard")]
        variant: Variant,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub lemma: LemmaId,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub jobs: u64,
}

#[derive(Debug, Args)]
pub struct CollideArgs {
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    #[arg(long, default_value_t = 2)]
    pub min_share: usize,
    #[arg(long, default_value = "S32")]
    pub class: ClassTag,
}

impl clap::ValueEnum for Variant {
    fn value_variants<'a>() -> &'a [Self] {
        &[Variant::Standard, Variant::No3]
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(match self {
            Variant::Standard => "standard",
            Variant::No3 => "no3",
        }))
    }
}

impl clap::ValueEnum for LemmaId {
    fn value_variants<'a>() -> &'a [Self] {
        &LemmaId::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.as_str()))
    }
}

/// What a subcommand produced: human text, its JSON form, and the verdict.
struct Outcome {
    text: String,
    json: serde_json::Value,
    passed: bool,
}

impl Outcome {
    fn new<T: Serialize>(value: &T, text: String, passed: bool) -> Result<Self> {
        let json = serde_json::to_value(value).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Ok(Outcome { text, json, passed })
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&config).and_then(|o| emit(&o, config.out.as_deref(), out).map(|()| o.passed)) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvalidInput(_) | Error::Parse(_) | Error::UnknownRelation(_) => EXIT_USAGE,
        Error::InvalidCertificate(_) | Error::Unbounded | Error::Infeasible => EXIT_FAIL,
    }
}

fn emit(o: &Outcome, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidInput(e.to_string());
    match path {
        Some(p) => {
            let mut text = serde_json::to_string_pretty(&o.json).map_err(|e| Error::InvalidInput(e.to_string()))?;
            text.push('\n');
            std::fs::write(p, text).map_err(io)?;
            writeln!(out, "wrote {}", p.display()).map_err(io)
        }
        None => write!(out, "{}", o.text).map_err(io),
    }
}

fn execute(config: &RunConfig) -> Result<Outcome> {
    let factor = FactorConfig { budget: config.budget, ..FactorConfig::default() };
    match &config.command {
        Command::Lp(LpCommand::Solve { variant }) => {
            let best = optimize(&build_system(*variant))?;
            Outcome::new(&best, render::render_optimum(&best), true)
        }
        Command::Lp(LpCommand::Check { file }) => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", file.display())))?;
            let cert = Certificate::from_json(&text)?;
            match check_certificate(&build_system(cert.variant), &cert) {
                Ok(result) => Outcome::new(&result, render::render_check(&result), true),
                Err(Error::InvalidCertificate(v)) => {
                    let json = serde_json::json!({ "valid": false, "violations": v });
                    Ok(Outcome { text: render::render_violations(&v), json, passed: false })
                }
                Err(e) => Err(e),
            }
        }
        Command::Lp(LpCommand::System { variant }) => {
            let sys = build_system(*variant);
            Outcome::new(&sys, render::render_system(&sys), true)
        }
        Command::Verify(args) => {
            let opts = SweepOptions { jobs: args.jobs as usize, factor, ..SweepOptions::default() };
            let report = verify(args.lemma, args.bound, &opts)?;
            let passed = report.passed();
            Outcome::new(&report, render::render_report(&report), passed)
        }
        Command::Classify { p } => {
            let prof = classify(*p, &factor)?;
            Outcome::new(&prof, render::render_profile(&prof), true)
        }
        Command::Link { p } => {
            let link = linked_prime(*p, &factor)?;
            Outcome::new(&link, render::render_link(&link), true)
        }
        Command::Collide(args) => {
            let opts = SweepOptions { factor, ..SweepOptions::default() };
            let fibers = find_shared_largest(args.class, args.min_share, args.bound, &opts)?;
            Outcome::new(&fibers, render::render_fibers(&fibers), true)
        }
        Command::Cyclo { t, r } => {
            let rep = proposition_report(*t, *r)?;
            let passed = rep.consistent();
            Outcome::new(&rep, render::render_proposition(&rep), passed)
        }
        Command::Reconstruct { d } => {
            let triple = reconstruct_from_d(*d)?;
            let json = serde_json::json!({ "d": d.to_string(), "triple": triple });
            Ok(Outcome { text: render::render_reconstruction(*d, triple.as_ref()), json, passed: true })
        }
    }
}
