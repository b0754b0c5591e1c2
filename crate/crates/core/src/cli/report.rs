//! Report types and their text, JSON and CSV renderings.

use std::fmt::Write as _;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::{exit_code, Format, EXIT_MISMATCH, EXIT_OK};
use crate::dirac_solver::{Candidate, EigenvalueResult, SpinEvidence};
use crate::error::{Error, Result};
use crate::lie_core::rational::to_decimal;
use crate::lie_core::Rational;
use crate::spin_module::SpinHighestWeights;
use crate::symmetric_space::{Check, Dims, Family, SymmetricSpace, SymmetricSpaceSpec};

const DECIMAL_DIGITS: usize = 12;

/// An exact fraction with a decimal rendering for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
    pub decimal: String,
}

impl Fraction {
    pub fn new(r: &Rational) -> Self {
        Fraction {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            decimal: to_decimal(r, DECIMAL_DIGITS),
        }
    }

    /// `num/den`, or just `num` for integers.
    pub fn exact(&self) -> String {
        if self.den == "1" {
            self.num.clone()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSizes {
    pub phi1: usize,
    pub phi2: usize,
    pub phi3prime: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinHighestWeightReport {
    pub coords: Vec<String>,
    pub mult: String,
    pub dim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    /// `witness`, `optimal` or `fiber_minimizer`.
    pub role: String,
    pub coords: Vec<String>,
    pub dominant_coords: Vec<String>,
    pub shifted_norm: String,
    pub casimir: String,
    pub restriction: Vec<String>,
}

impl CandidateReport {
    fn new(role: &str, c: &Candidate) -> Self {
        CandidateReport {
            role: role.to_string(),
            coords: c.mu.coord_strings(),
            dominant_coords: c.mu_dominant.coord_strings(),
            shifted_norm: c.shifted_norm.to_string(),
            casimir: c.casimir_value.to_string(),
            restriction: c.restriction.coord_strings(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub num: String,
    pub den: String,
    pub decimal: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySection {
    pub level: u8,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub spin_evidence: Option<SpinEvidence>,
}

/// Everything `compute` reports for one space. Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub space: String,
    pub family: String,
    pub params: String,
    pub title: String,
    pub dims: Dims,
    pub partition: PartitionSizes,
    pub k_type: String,
    pub spinor_dim: String,
    pub spin_highest_weights: Vec<SpinHighestWeightReport>,
    pub candidates: Vec<CandidateReport>,
    pub spin_highest_weight: Vec<String>,
    pub normalization_s: String,
    pub lambda_squared: Fraction,
    pub closed_form: ClosedFormReport,
    pub verify: VerifySection,
    pub timing_ms: u64,
}

impl ComputeReport {
    pub fn new(
        space: &SymmetricSpace,
        shw: &SpinHighestWeights,
        result: &EigenvalueResult,
        closed_form: Rational,
        verify: VerifySection,
        elapsed: Duration,
    ) -> Self {
        let spec = space.spec();
        let part = space.partition();
        let mut candidates = vec![CandidateReport::new("witness", &result.witness)];
        candidates.extend(
            result
                .optimal
                .iter()
                .filter(|c| c.mu != result.witness.mu)
                .map(|c| CandidateReport::new("optimal", c)),
        );
        candidates.extend(
            result
                .minimizers
                .iter()
                .map(|c| CandidateReport::new("fiber_minimizer", c)),
        );
        let cf = Fraction::new(&closed_form);
        ComputeReport {
            space: spec.to_string(),
            family: spec.family().name().to_string(),
            params: spec.params(),
            title: spec.title(),
            dims: space.dims(),
            partition: PartitionSizes {
                phi1: part.phi1_plus.len(),
                phi2: part.phi2_plus.len(),
                phi3prime: part.phi3_prime_plus.len(),
            },
            k_type: space.k_type().to_string(),
            spinor_dim: shw.spinor_dim.to_string(),
            spin_highest_weights: shw
                .entries
                .iter()
                .map(|e| SpinHighestWeightReport {
                    coords: e.weight.coord_strings(),
                    mult: e.multiplicity.to_string(),
                    dim: e.dim.to_string(),
                })
                .collect(),
            candidates,
            spin_highest_weight: result.spin_highest_weight.coord_strings(),
            normalization_s: result.normalization_s.to_string(),
            lambda_squared: Fraction::new(&result.lambda_squared),
            closed_form: ClosedFormReport {
                matches: closed_form == result.lambda_squared,
                num: cf.num,
                den: cf.den,
                decimal: cf.decimal,
            },
            verify,
            timing_ms: elapsed.as_millis() as u64,
        }
    }
}

/// One parameter tuple of `table`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub space: String,
    pub family: String,
    pub params: String,
    pub lambda_squared: Option<Fraction>,
    pub closed_form: Fraction,
    pub matches: bool,
    pub error: Option<String>,
    pub error_code: Option<i32>,
}

impl TableRow {
    pub fn new(spec: &SymmetricSpaceSpec, value: Result<EigenvalueResult>, closed_form: Rational) -> Self {
        let (lambda_squared, matches, error, error_code) = match value {
            Ok(r) => (
                Some(Fraction::new(&r.lambda_squared)),
                r.lambda_squared == closed_form,
                None,
                None,
            ),
            Err(e) => (None, false, Some(e.to_string()), Some(exit_code(&e))),
        };
        TableRow {
            space: spec.to_string(),
            family: spec.family().name().to_string(),
            params: spec.params(),
            lambda_squared,
            closed_form: Fraction::new(&closed_form),
            matches,
            error,
            error_code,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
}

impl TableReport {
    /// 4 on any mismatch, else the code of the first failed row, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().any(|r| r.error.is_none() && !r.matches) {
            return EXIT_MISMATCH;
        }
        self.rows.iter().find_map(|r| r.error_code).unwrap_or(EXIT_OK)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub space: String,
    pub verify: VerifySection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceInfo {
    pub id: String,
    pub title: String,
    pub parameters: String,
    pub constraints: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpacesReport {
    pub spaces: Vec<SpaceInfo>,
}

impl SpacesReport {
    pub fn all() -> Self {
        let spaces = Family::ALL
            .iter()
            .map(|&f| {
                let (parameters, constraints) = match f {
                    Family::SuSo | Family::SuSp => ("m", "m >= 2"),
                    Family::SoGrassmann => ("p,q", "0 <= p <= q, p + q >= 1"),
                    Family::E6F4 | Family::E6Sp4 => ("", ""),
                };
                SpaceInfo {
                    id: f.name().to_string(),
                    title: f.title().to_string(),
                    parameters: parameters.to_string(),
                    constraints: constraints.to_string(),
                }
            })
            .collect();
        SpacesReport { spaces }
    }
}

/// Output of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Report {
    Compute(Box<ComputeReport>),
    Table(TableReport),
    Verify(Vec<VerifyOutput>),
    Spaces(SpacesReport),
}

fn json_error(e: serde_json::Error) -> Error {
    Error::inconsistent("report", e.to_string())
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::inconsistent("report", e.to_string())
}

fn csv_string<F>(header: &[&str], fill: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).map_err(csv_error)?;
    fill(&mut w).map_err(csv_error)?;
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

const TABLE_HEADER: [&str; 7] = [
    "family",
    "params",
    "lambda_sq_num",
    "lambda_sq_den",
    "closed_form_num",
    "closed_form_den",
    "match",
];

fn table_record(
    w: &mut csv::Writer<Vec<u8>>,
    family: &str,
    params: &str,
    value: Option<&Fraction>,
    closed: &Fraction,
    matches: bool,
) -> csv::Result<()> {
    let (num, den) = value.map_or((String::new(), String::new()), |f| (f.num.clone(), f.den.clone()));
    w.write_record([
        family,
        params,
        &num,
        &den,
        &closed.num,
        &closed.den,
        if matches { "true" } else { "false" },
    ])
}

fn coords(c: &[String]) -> String {
    format!("({})", c.join(", "))
}

fn text_checks(out: &mut String, v: &VerifySection) {
    let _ = writeln!(
        out,
        "verify        level {}: {} ({} checks)",
        v.level,
        if v.passed { "passed" } else { "FAILED" },
        v.checks.len()
    );
    for c in &v.checks {
        let _ = writeln!(
            out,
            "  [{}] {}: {}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    if let Some(ev) = &v.spin_evidence {
        let level2 = match ev.level2 {
            Some(true) => "yes",
            Some(false) => "no",
            None => "not run",
        };
        let _ = writeln!(
            out,
            "  spin condition: level 1 {}, level 2 {}{}",
            if ev.level1 { "yes" } else { "no" },
            level2,
            ev.matched
                .as_ref()
                .map(|m| format!(", matched {m}"))
                .unwrap_or_default()
        );
        if let Some(n) = &ev.notice {
            let _ = writeln!(out, "  notice: {n}");
        }
    }
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(json_error)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    /// Parses a JSON rendering back; the variant is recovered from the shape.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(json_error)
    }

    fn render_csv(&self) -> Result<String> {
        match self {
            Report::Compute(r) => csv_string(&TABLE_HEADER, |w| {
                let cf = Fraction {
                    num: r.closed_form.num.clone(),
                    den: r.closed_form.den.clone(),
                    decimal: r.closed_form.decimal.clone(),
                };
                table_record(
                    w,
                    &r.family,
                    &r.params,
                    Some(&r.lambda_squared),
                    &cf,
                    r.closed_form.matches,
                )
            }),
            Report::Table(t) => csv_string(&TABLE_HEADER, |w| {
                for r in &t.rows {
                    table_record(
                        w,
                        &r.family,
                        &r.params,
                        r.lambda_squared.as_ref(),
                        &r.closed_form,
                        r.matches,
                    )?;
                }
                Ok(())
            }),
            Report::Verify(v) => csv_string(&["space", "check", "passed", "detail"], |w| {
                for o in v {
                    for c in &o.verify.checks {
                        w.write_record([
                            o.space.as_str(),
                            &c.name,
                            if c.passed { "true" } else { "false" },
                            &c.detail,
                        ])?;
                    }
                }
                Ok(())
            }),
            Report::Spaces(s) => csv_string(&["id", "title", "parameters", "constraints"], |w| {
                for x in &s.spaces {
                    w.write_record([&x.id, &x.title, &x.parameters, &x.constraints])?;
                }
                Ok(())
            }),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Compute(r) => {
                let d = &r.dims;
                let _ = writeln!(out, "space         {}  {}", r.space, r.title);
                let _ = writeln!(
                    out,
                    "dims          g={} k={} p={} t={} tK={} t0={}",
                    d.g, d.k, d.p, d.t, d.t_k, d.t0
                );
                let _ = writeln!(
                    out,
                    "partition     |Φ1+|={} |Φ2+|={} |Φ3'+|={}",
                    r.partition.phi1, r.partition.phi2, r.partition.phi3prime
                );
                let _ = writeln!(out, "K type        {}", r.k_type);
                let _ = writeln!(
                    out,
                    "spin module   dim {}, {} highest weights",
                    r.spinor_dim,
                    r.spin_highest_weights.len()
                );
                for h in &r.spin_highest_weights {
                    let _ = writeln!(out, "  {}  mult {}  dim {}", coords(&h.coords), h.mult, h.dim);
                }
                let _ = writeln!(out, "candidates");
                for c in &r.candidates {
                    let _ = writeln!(
                        out,
                        "  {:<16} {}  dominant {}  |mu+delta|^2 = {}  casimir = {}",
                        c.role,
                        coords(&c.coords),
                        coords(&c.dominant_coords),
                        c.shifted_norm,
                        c.casimir
                    );
                }
                let _ = writeln!(out, "K-type match  {}", coords(&r.spin_highest_weight));
                let _ = writeln!(out, "normalization {}", r.normalization_s);
                let _ = writeln!(
                    out,
                    "lambda^2      {} ≈ {}",
                    r.lambda_squared.exact(),
                    r.lambda_squared.decimal
                );
                let cf = Fraction {
                    num: r.closed_form.num.clone(),
                    den: r.closed_form.den.clone(),
                    decimal: r.closed_form.decimal.clone(),
                };
                let _ = writeln!(
                    out,
                    "closed form   {} ({})",
                    cf.exact(),
                    if r.closed_form.matches { "match" } else { "differs" }
                );
                text_checks(&mut out, &r.verify);
                let _ = writeln!(out, "timing        {} ms", r.timing_ms);
            }
            Report::Table(t) => {
                let _ = writeln!(out, "{:<32} {:>16} {:>16}  match", "space", "lambda^2", "closed form");
                for r in &t.rows {
                    let value = match (&r.lambda_squared, &r.error) {
                        (Some(v), _) => v.exact(),
                        (None, Some(_)) => "error".to_string(),
                        (None, None) => String::new(),
                    };
                    let _ = writeln!(
                        out,
                        "{:<32} {:>16} {:>16}  {}",
                        r.space,
                        value,
                        r.closed_form.exact(),
                        if r.matches { "yes" } else { "no" }
                    );
                    if let Some(e) = &r.error {
                        let _ = writeln!(out, "  error: {e}");
                    }
                }
            }
            Report::Verify(v) => {
                for o in v {
                    let _ = writeln!(out, "space         {}", o.space);
                    text_checks(&mut out, &o.verify);
                }
            }
            Report::Spaces(s) => {
                for x in &s.spaces {
                    let line = format!("{:<14} {:<32} {}", x.id, x.title, x.constraints);
                    let _ = writeln!(out, "{}", line.trim_end());
                }
            }
        }
        out
    }
}
