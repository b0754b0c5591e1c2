//! Command-line surface: argument parsing, validation, the four commands and exit codes.

mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

pub use report::{
    CandidateReport, ClosedFormReport, ComputeReport, Fraction, PartitionSizes, Report, SpaceInfo, SpacesReport,
    SpinHighestWeightReport, TableReport, TableRow, VerifyOutput, VerifySection,
};

use crate::dirac_solver::{closed_form_reference, first_eigenvalue_with, spin_condition_check};
use crate::error::{Error, Result};
use crate::spin_module::{decompose_table, enumerate_spin_weights};
use crate::symmetric_space::{
    build_space, k_cartan_matrix, verify_root_partition, Family, SymmetricSpace, SymmetricSpaceSpec, VerifyReport,
};
use crate::Caps;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_REFUSAL: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Exit code for an engine error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Validation(_) => EXIT_INVALID,
        Error::Refusal(_) | Error::CapExceeded { .. } => EXIT_REFUSAL,
        _ => EXIT_MISMATCH,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "outer-dirac",
    version,
    about = "First Dirac eigenvalue on compact outer spin symmetric spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Subcommand, Debug)]
pub enum CommandArgs {
    /// Full pipeline report for one space.
    Compute(Options),
    /// Pipeline value against the closed form over parameter ranges.
    Table(Options),
    /// Structural and spin-module checks.
    Verify(Options),
    /// List the supported spaces.
    Spaces(Options),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Options {
    /// Space identifier: su2m-so2m, su2m-sp-m, so-grassmann, e6-f4, e6-sp4.
    #[arg(long)]
    pub space: Option<String>,
    /// Alias of --space, customary for `table`.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub q: Option<u32>,
    /// Inclusive range `A..B` of m.
    #[arg(long = "range-m")]
    pub range_m: Option<String>,
    /// Inclusive range `A..B` of p.
    #[arg(long = "range-p")]
    pub range_p: Option<String>,
    /// Inclusive range `A..B` of q.
    #[arg(long = "range-q")]
    pub range_q: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long = "verify-level", default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub verify_level: u8,
    /// Cap on enumerated states, table entries and lattice points.
    #[arg(long = "max-enum")]
    pub max_enum: Option<u64>,
    /// Cap on the dimension of a module expanded weight by weight.
    #[arg(long = "max-dim")]
    pub max_dim: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Compute,
    Table,
    Verify,
    Spaces,
}

/// Validated configuration; parameters are checked before any engine call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    /// Spaces to run, in emission order.
    pub specs: Vec<SymmetricSpaceSpec>,
    pub format: Format,
    pub caps: Caps,
    pub out_path: Option<PathBuf>,
    pub verify_level: u8,
}

const DEFAULT_M: (u32, u32) = (2, 6);
const DEFAULT_P: (u32, u32) = (0, 4);
const DEFAULT_Q: (u32, u32) = (1, 4);

/// Parses an inclusive range `A..B`.
pub fn parse_range(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::Validation(format!("range `{s}` is not of the form A..B with A ≤ B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn family_of(opts: &Options) -> Result<Option<Family>> {
    match (&opts.space, &opts.family) {
        (Some(a), Some(b)) if a != b => Err(Error::Validation(format!("--space {a} conflicts with --family {b}"))),
        (Some(s), _) | (None, Some(s)) => Ok(Some(s.parse()?)),
        (None, None) => Ok(None),
    }
}

fn range_or(opt: &Option<String>, fixed: Option<u32>, default: (u32, u32)) -> Result<(u32, u32)> {
    match (opt, fixed) {
        (Some(_), Some(_)) => Err(Error::Validation("a parameter and its range are both given".into())),
        (Some(r), None) => parse_range(r),
        (None, Some(v)) => Ok((v, v)),
        (None, None) => Ok(default),
    }
}

/// Every valid space of `family` within the ranges; invalid tuples are skipped.
fn grid_for(family: Family, opts: &Options) -> Result<Vec<SymmetricSpaceSpec>> {
    let mut out = Vec::new();
    match family {
        Family::SuSo | Family::SuSp => {
            if opts.p.is_some() || opts.q.is_some() || opts.range_p.is_some() || opts.range_q.is_some() {
                return Err(Error::Validation(format!("{family} takes only m")));
            }
            let (a, b) = range_or(&opts.range_m, opts.m, DEFAULT_M)?;
            for m in a..=b {
                out.push(SymmetricSpaceSpec::from_parts(family, Some(m), None, None)?);
            }
        }
        Family::SoGrassmann => {
            if opts.m.is_some() || opts.range_m.is_some() {
                return Err(Error::Validation("so-grassmann takes p and q".into()));
            }
            let (pa, pb) = range_or(&opts.range_p, opts.p, DEFAULT_P)?;
            let (qa, qb) = range_or(&opts.range_q, opts.q, DEFAULT_Q)?;
            for q in qa..=qb {
                for p in pa..=pb.min(q) {
                    if p + q >= 1 {
                        out.push(SymmetricSpaceSpec::so_grassmann(p, q)?);
                    }
                }
            }
        }
        Family::E6F4 | Family::E6Sp4 => out.push(SymmetricSpaceSpec::from_parts(family, opts.m, opts.p, opts.q)?),
    }
    if out.is_empty() {
        return Err(Error::Validation(format!("the ranges select no valid {family} space")));
    }
    Ok(out)
}

impl RunConfig {
    pub fn from_options(command: Command, opts: &Options) -> Result<Self> {
        let mut caps = Caps::default();
        if let Some(n) = opts.max_enum {
            if n == 0 {
                return Err(Error::Validation("--max-enum must be positive".into()));
            }
            caps.enumeration = n;
        }
        if let Some(n) = opts.max_dim {
            if n == 0 {
                return Err(Error::Validation("--max-dim must be positive".into()));
            }
            caps.dimension = n;
        }
        let ranged = opts.range_m.is_some() || opts.range_p.is_some() || opts.range_q.is_some();
        let family = family_of(opts)?;
        let specs = match command {
            Command::Spaces => vec![],
            Command::Compute => {
                if ranged {
                    return Err(Error::Validation(
                        "compute takes single parameters; use table for ranges".into(),
                    ));
                }
                let f = family.ok_or_else(|| Error::Validation("compute needs --space".into()))?;
                vec![SymmetricSpaceSpec::from_parts(f, opts.m, opts.p, opts.q)?]
            }
            Command::Table | Command::Verify => match family {
                Some(f) if !ranged && command == Command::Verify => {
                    vec![SymmetricSpaceSpec::from_parts(f, opts.m, opts.p, opts.q)?]
                }
                Some(f) => grid_for(f, opts)?,
                None => {
                    if ranged || opts.m.is_some() || opts.p.is_some() || opts.q.is_some() {
                        return Err(Error::Validation("parameters need --family".into()));
                    }
                    let mut all = Vec::new();
                    for f in Family::ALL {
                        all.extend(grid_for(f, opts)?);
                    }
                    all
                }
            },
        };
        Ok(RunConfig {
            command,
            specs,
            format: opts.format,
            caps,
            out_path: opts.out.clone(),
            verify_level: opts.verify_level,
        })
    }
}

/// Structural checks, spin dimension identities and, at level 2, the witness's spin
/// condition by exact branching.
fn verify_space(space: &SymmetricSpace, level: u8) -> Result<VerifySection> {
    let mut rep: VerifyReport = verify_root_partition(space);
    let table = enumerate_spin_weights(space)?;
    let shw = decompose_table(space, &table)?;
    let expected = num_bigint::BigInt::from(2).pow((space.dims().p / 2) as u32);
    rep.push(
        "spin_table_total",
        table.total() == expected,
        format!(
            "Σ orbit sizes × multiplicities = {} = 2^{}",
            table.total(),
            space.dims().p / 2
        ),
    );
    rep.push(
        "spin_dimension_identity",
        shw.total_dim() == expected,
        format!(
            "Σ mult × dim = {} over {} highest weights",
            shw.total_dim(),
            shw.entries.len()
        ),
    );
    if space.spec().family() == Family::SuSo {
        let m = space.spec().m();
        let want = 1u128 << ((m - 1) / 2);
        rep.push(
            "spin_multiplicity",
            shw.entries.iter().all(|e| e.multiplicity == want),
            format!("every spin highest weight has multiplicity 2^{} = {want}", (m - 1) / 2),
        );
    }
    if space.spec().family() == Family::E6F4 {
        let (a, _) = k_cartan_matrix(space.k())?;
        let shown = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]];
        let t: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| shown[j][i]).collect()).collect();
        rep.push(
            "k_cartan_matrix_display",
            a == t,
            "F4 Cartan matrix equals the transposed display",
        );
    }
    let mut evidence = None;
    if level >= 2 {
        let r = first_eigenvalue_with(space, &shw)?;
        let ev = spin_condition_check(space, &r.witness, &shw, 2)?;
        let ok = ev.certified_level() >= 1 || ev.notice.is_some();
        rep.push(
            "witness_spin_condition",
            ok,
            match &ev.notice {
                Some(n) => n.clone(),
                None => format!("{} certified at level {}", r.witness.mu, ev.certified_level()),
            },
        );
        evidence = Some(ev);
    }
    Ok(VerifySection {
        level,
        passed: rep.all_passed(),
        checks: rep.checks,
        spin_evidence: evidence,
    })
}

/// Full pipeline for one space.
pub fn run_compute(spec: &SymmetricSpaceSpec, caps: &Caps, verify_level: u8) -> Result<ComputeReport> {
    let start = Instant::now();
    let space = build_space(spec, caps)?;
    let table = enumerate_spin_weights(&space)?;
    let shw = decompose_table(&space, &table)?;
    let result = first_eigenvalue_with(&space, &shw)?;
    let shw_level = spin_condition_check(&space, &result.witness, &shw, verify_level)?;
    let mut verify = verify_space(&space, 1)?;
    verify.level = verify_level;
    verify.spin_evidence = Some(shw_level);
    Ok(ComputeReport::new(
        &space,
        &shw,
        &result,
        closed_form_reference(spec),
        verify,
        start.elapsed(),
    ))
}

/// One row per space; errors are kept in the row.
pub fn run_table(specs: &[SymmetricSpaceSpec], caps: &Caps) -> TableReport {
    let rows: Vec<TableRow> = specs
        .par_iter()
        .map(|spec| {
            let closed = closed_form_reference(spec);
            let value = build_space(spec, caps).and_then(|s| {
                let table = enumerate_spin_weights(&s)?;
                let shw = decompose_table(&s, &table)?;
                first_eigenvalue_with(&s, &shw)
            });
            TableRow::new(spec, value, closed)
        })
        .collect();
    TableReport { rows }
}

pub fn run_verify(specs: &[SymmetricSpaceSpec], caps: &Caps, level: u8) -> Result<Vec<VerifyOutput>> {
    specs
        .par_iter()
        .map(|spec| {
            let space = build_space(spec, caps)?;
            Ok(VerifyOutput {
                space: spec.to_string(),
                verify: verify_space(&space, level)?,
            })
        })
        .collect()
}

pub fn run_spaces() -> SpacesReport {
    SpacesReport::all()
}

/// Runs a validated configuration, returning the report and its exit code.
pub fn run(config: &RunConfig) -> Result<(Report, i32)> {
    Ok(match config.command {
        Command::Compute => {
            let r = run_compute(&config.specs[0], &config.caps, config.verify_level)?;
            let code = if r.verify.passed { EXIT_OK } else { EXIT_MISMATCH };
            (Report::Compute(Box::new(r)), code)
        }
        Command::Table => {
            let t = run_table(&config.specs, &config.caps);
            let code = t.exit_code();
            (Report::Table(t), code)
        }
        Command::Verify => {
            let v = run_verify(&config.specs, &config.caps, config.verify_level)?;
            let code = if v.iter().all(|x| x.verify.passed) {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            (Report::Verify(v), code)
        }
        Command::Spaces => (Report::Spaces(run_spaces()), EXIT_OK),
    })
}

/// Parses arguments, runs, writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let (command, opts) = match &cli.command {
        CommandArgs::Compute(o) => (Command::Compute, o),
        CommandArgs::Table(o) => (Command::Table, o),
        CommandArgs::Verify(o) => (Command::Verify, o),
        CommandArgs::Spaces(o) => (Command::Spaces, o),
    };
    let outcome = RunConfig::from_options(command, opts).and_then(|config| {
        let (report, code) = run(&config)?;
        let text = report.render(config.format)?;
        match &config.out_path {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::Validation(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
