//! Command-line front end. Exit codes: 0 for a completed run, 1 for usage
//! or configuration errors, 2 for incomplete or inconclusive runs.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::cidecide::{classify_table, decide_ci_spec, u6_witness_spec, CIReport, Verdict};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::groebner::{buchberger, Limits, DEFAULT_DEGREE_CAP};
use crate::groupmat::{commutator_word_in, group_ring, GroupKind};
use crate::koszul::{KoszulComplex, KoszulSliceReport, SliceStatus, DEFAULT_SLICE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "commuting-ci", version, about = "Complete-intersection tests for commuting varieties of U_n and B_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether the genus-g commuting variety is a complete intersection.
    Decide(DecideArgs),
    /// Check the membership witness ruling out U_6 (or U_n, n ≥ 6).
    #[command(name = "witness-u6")]
    WitnessU6(WitnessArgs),
    /// Dimensions of graded slices of Koszul homology.
    Koszul(KoszulArgs),
    /// Print the commutator-word generators, or a Gröbner basis of them.
    Dump(DumpArgs),
    /// Classify a whole family up to a given size.
    Table(TableArgs),
}

#[derive(Args, Debug, Clone)]
pub struct LimitArgs {
    /// Largest S-pair degree processed before giving up.
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP, value_parser = clap::value_parser!(u32).range(1..))]
    pub degree_cap: u32,
    /// Wall-clock limit per basis, in seconds.
    #[arg(long, env = "COMMUTING_CI_TIMEOUT", default_value_t = 3600, value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { degree_cap: self.degree_cap, timeout: Duration::from_secs(self.timeout) }
    }
}

#[derive(Args, Debug, Clone)]
pub struct SystemArgs {
    #[arg(long)]
    pub group: GroupKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub genus: usize,
    /// Seed for a random variable permutation of grevlex; 0 keeps the
    /// registration order.
    #[arg(long, default_value_t = 0)]
    pub order_seed: u64,
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// `q` or `gf:p`. Defaults to q for U_n (n ≤ 4) and B_2, gf:32003 otherwise.
    #[arg(long)]
    pub field: Option<FieldSpec>,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    #[arg(long, default_value = "q")]
    pub field: FieldSpec,
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub order_seed: u64,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KoszulArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, default_value = "q")]
    pub field: FieldSpec,
    /// Homological degree.
    #[arg(long, default_value_t = 1)]
    pub degree: usize,
    #[arg(long, default_value_t = 8)]
    pub max_weight: u32,
    /// Largest chain slice dimension handled before reporting incomplete.
    #[arg(long, default_value_t = DEFAULT_SLICE_CAP, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
    pub slice_cap: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DumpArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long, default_value = "q")]
    pub field: FieldSpec,
    /// Print a reduced Gröbner basis (ascending) followed by its stats.
    #[arg(long)]
    pub basis: bool,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub family: GroupKind,
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, default_value_t = 1)]
    pub genus: usize,
    /// Force one field for every row instead of the per-size default.
    #[arg(long)]
    pub field: Option<FieldSpec>,
    #[arg(long, default_value_t = 0)]
    pub order_seed: u64,
    /// Worker threads; 0 uses one per core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[command(flatten)]
    pub limits: LimitArgs,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Incomplete(_) => EXIT_INCOMPLETE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Decide(a) => cmd_decide(a),
        Command::WitnessU6(a) => cmd_witness(a),
        Command::Koszul(a) => cmd_koszul(a),
        Command::Dump(a) => cmd_dump(a),
        Command::Table(a) => cmd_table(a),
    }
}

fn emit_json<T: Serialize>(value: &T, output: Option<&PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    emit_text(&(text + "\n"), output)
}

fn emit_text(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn verdict_code(v: Verdict) -> i32 {
    if v.is_definite() { EXIT_OK } else { EXIT_INCOMPLETE }
}

fn summary(r: &CIReport) -> String {
    let fmt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    format!(
        "{}{} g={} field={} N={} r={} u={} dim={} codim={} verdict={} ({})",
        r.group,
        r.n,
        r.genus,
        r.field,
        r.nvars,
        r.generators,
        r.unit_relations,
        fmt(r.dim),
        fmt(r.codim),
        r.verdict,
        serde_json::to_value(r.source).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
    )
}

pub fn cmd_decide(a: DecideArgs) -> Result<i32> {
    let s = &a.system;
    let field = a.field.unwrap_or_else(|| crate::cidecide::default_table_field(s.group, s.n));
    let report = decide_ci_spec(field, s.group, s.n, s.genus, s.order_seed, &a.limits.limits())?;
    eprintln!("{}", summary(&report));
    emit_json(&report, a.output.as_ref())?;
    Ok(verdict_code(report.verdict))
}

pub fn cmd_witness(a: WitnessArgs) -> Result<i32> {
    let report = u6_witness_spec(a.field, a.n, a.order_seed, &a.limits.limits())?;
    match &report.failure {
        Some(f) => eprintln!("inconclusive: {f}"),
        None => eprintln!("U{}: {} (codim of {} entries ≤ {})", a.n, report.conclusion, report.subsequence_length, report.codim_bound),
    }
    emit_json(&report, a.output.as_ref())?;
    Ok(verdict_code(report.conclusion))
}

pub fn cmd_koszul(a: KoszulArgs) -> Result<i32> {
    fn go<F: Field>(field: F, a: &KoszulArgs) -> Result<Vec<KoszulSliceReport>> {
        let s = &a.system;
        let ring = group_ring(field, s.group, s.n, s.genus)?.reordered(s.order_seed);
        let sys = commutator_word_in(&ring, s.group, s.n, s.genus)?;
        let k = KoszulComplex::from_system(&sys)?;
        Ok(k.scan(a.degree, a.max_weight, a.slice_cap))
    }
    let rows = match a.field {
        FieldSpec::Rationals => go(Rationals, &a)?,
        FieldSpec::Prime(p) => go(PrimeField::new(p)?, &a)?,
    };
    for r in &rows {
        eprintln!(
            "H_{} weight {}: {}",
            r.i,
            r.w,
            r.h_dim.map_or("incomplete".to_string(), |h| h.to_string())
        );
    }
    emit_json(&rows, a.output.as_ref())?;
    Ok(if rows.iter().all(|r| r.status == SliceStatus::Complete) { EXIT_OK } else { EXIT_INCOMPLETE })
}

pub fn cmd_dump(a: DumpArgs) -> Result<i32> {
    fn go<F: Field>(field: F, a: &DumpArgs) -> Result<(String, bool)> {
        let s = &a.system;
        let ring = group_ring(field, s.group, s.n, s.genus)?.reordered(s.order_seed);
        let sys = commutator_word_in(&ring, s.group, s.n, s.genus)?;
        if !a.basis {
            let mut text = sys.dump_lines().join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            return Ok((text, true));
        }
        let mut gens = sys.generator_polys();
        gens.extend(sys.unit_relations.iter().cloned());
        match buchberger(&sys.ring, &gens, &a.limits.limits()) {
            Ok(gb) => Ok((format!("{}{}\n", gb.dump(), serde_json::to_string(&gb.stats)?), true)),
            Err(inc) => {
                eprintln!("incomplete: {inc}");
                Ok((format!("{}\n", serde_json::to_string(&inc.stats)?), false))
            }
        }
    }
    let (text, complete) = match a.field {
        FieldSpec::Rationals => go(Rationals, &a)?,
        FieldSpec::Prime(p) => go(PrimeField::new(p)?, &a)?,
    };
    emit_text(&text, a.output.as_ref())?;
    Ok(if complete { EXIT_OK } else { EXIT_INCOMPLETE })
}

pub fn cmd_table(a: TableArgs) -> Result<i32> {
    let rows = classify_table(a.family, a.max_n, a.genus, a.field, a.order_seed, &a.limits.limits(), a.jobs)?;
    for r in &rows {
        eprintln!("{}", summary(r));
    }
    emit_json(&rows, a.output.as_ref())?;
    Ok(if rows.iter().all(|r| r.verdict.is_definite()) { EXIT_OK } else { EXIT_INCOMPLETE })
}
