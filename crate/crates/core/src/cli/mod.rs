//! Command-line front end.
//!
//! Every command reads one ideal, writes one JSON document to standard output
//! and exits with:
//!
//! * `0` success, or the verification held
//! * `1` a verification found an inequality, or the star condition fails
//! * `2` input, parse or validation error
//! * `3` a resource guard tripped (generator count, vertex count, overflow)

pub mod parse;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hilbert::{
    froeberg_check, k_polynomial_ie, k_polynomial_sr, series_coefficients, topological_regrade,
    HilbertSeries, IntPolynomial,
};
use crate::ideal::MonomialIdeal;
use crate::polarize::{polarize, verify_depolarization_quotient};
use crate::polyhedral::{check_star, classify_variables, verify_realization};
use crate::simplicial::sr_complex;

pub use parse::{parse_ideal, IdealDocument, InputFormat};

/// Largest series degree accepted by `hilbert --coeffs`.
pub const MAX_SERIES_DEGREE: usize = 100_000;
/// Largest number of monomials `oracle` will enumerate.
pub const MAX_ORACLE_MONOMIALS: usize = 5_000_000;

#[derive(Debug, Parser)]
#[command(name = "monring", version, about = "Monomial ideal rings: polarization, Stanley-Reisner complexes, Hilbert series, polyhedral products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input when omitted or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: InputFormat,
    /// Number of variables, overriding the input.
    #[arg(long)]
    pub vars: Option<usize>,
    /// Indented JSON output.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical minimal generating set.
    Minimalize(InputArgs),
    /// Polarized variables, square-free generators and linear forms.
    Polarize(InputArgs),
    /// Check that depolarizing the polarization returns the input.
    DepolarizeCheck(InputArgs),
    /// K-polynomial and Hilbert series.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        /// Emit series coefficients up to this (algebraic) degree.
        #[arg(long)]
        coeffs: Option<usize>,
        /// Report in cohomological grading (generators in degree 2).
        #[arg(long)]
        topological: bool,
    },
    /// Stanley-Reisner complex of the polarized ideal.
    SrComplex(InputArgs),
    /// Compare K-polynomials of the ideal and its polarization.
    FroebergCheck(InputArgs),
    /// Star condition and per-variable CW pairs.
    Classify(InputArgs),
    /// Rebuild the ideal from its polyhedral-product presentation.
    Realize(InputArgs),
    /// Compare Hilbert function values against standard-monomial counts.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        max_degree: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Minimalize(_) => "minimalize",
            Command::Polarize(_) => "polarize",
            Command::DepolarizeCheck(_) => "depolarize-check",
            Command::Hilbert { .. } => "hilbert",
            Command::SrComplex(_) => "sr-complex",
            Command::FroebergCheck(_) => "froeberg-check",
            Command::Classify(_) => "classify",
            Command::Realize(_) => "realize",
            Command::Oracle { .. } => "oracle",
        }
    }

    fn input(&self) -> &InputArgs {
        match self {
            Command::Minimalize(i)
            | Command::Polarize(i)
            | Command::DepolarizeCheck(i)
            | Command::SrComplex(i)
            | Command::FroebergCheck(i)
            | Command::Classify(i)
            | Command::Realize(i) => i,
            Command::Hilbert { input, .. } | Command::Oracle { input, .. } => input,
        }
    }
}

/// Output of one command: the JSON text and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

/// Runs a parsed command line. `stdin` is consulted only when no input path
/// is given.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let name = cli.command.name();
    let pretty = cli.command.input().pretty;
    let (mut value, exit_code) = match execute(&cli.command, stdin) {
        Ok((value, code)) => (value, code),
        Err(e) => (
            json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } }),
            e.exit_code(),
        ),
    };
    if let Value::Object(map) = &mut value {
        map.insert("command".into(), Value::String(name.into()));
        map.insert("exit_code".into(), Value::from(exit_code));
    }
    let mut output = if pretty {
        serde_json::to_string_pretty(&value)
    } else {
        serde_json::to_string(&value)
    }
    .expect("reports serialize");
    output.push('\n');
    Outcome { output, exit_code }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Resource { .. } | Error::Overflow { .. } => "resource",
        _ => "validation",
    }
}

fn read_ideal(args: &InputArgs, stdin: &mut dyn Read) -> Result<MonomialIdeal> {
    let mut text = String::new();
    let io_error = |e: std::io::Error| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read input: {e}"),
    };
    match &args.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path).map_err(io_error)?;
        }
        _ => {
            stdin.read_to_string(&mut text).map_err(io_error)?;
        }
    }
    parse_ideal(&text, args.format, args.vars)?.to_ideal()
}

#[derive(Serialize)]
struct IdealView {
    n: usize,
    generators: Vec<String>,
    exponents: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealView {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealView {
            n: ideal.n(),
            generators: ideal.generators().iter().map(ToString::to_string).collect(),
            exponents: ideal
                .generators()
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct PolynomialView {
    grading: &'static str,
    coefficients: Vec<i64>,
    display: String,
}

impl PolynomialView {
    fn new(p: &IntPolynomial, topological: bool) -> Self {
        let p = if topological {
            topological_regrade(p)
        } else {
            p.clone()
        };
        PolynomialView {
            grading: grading(topological),
            coefficients: p.coefficients().to_vec(),
            display: p.to_string(),
        }
    }
}

fn grading(topological: bool) -> &'static str {
    if topological {
        "topological"
    } else {
        "algebraic"
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn verdict(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<(Value, i32)> {
    let ideal = read_ideal(command.input(), stdin)?;
    let view = to_value(IdealView::from(&ideal));
    match command {
        Command::Minimalize(_) => Ok((json!({ "ideal": view }), 0)),

        Command::Polarize(_) => {
            let p = polarize(&ideal);
            let polarized = p.ideal()?;
            Ok((
                json!({
                    "ideal": view,
                    "row_maxima": p.row_maxima,
                    "polarized_n": p.polarized_n(),
                    "variables": p.variables.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "generators": p.generators.iter().map(|g| p.render_generator(g)).collect::<Vec<_>>(),
                    "generator_exponents": p.generators.iter().map(|g| g.exponents().to_vec()).collect::<Vec<_>>(),
                    "thetas": p.thetas.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "polarized_ideal": IdealView::from(&polarized),
                }),
                0,
            ))
        }

        Command::DepolarizeCheck(_) => {
            let r = verify_depolarization_quotient(&ideal)?;
            Ok((
                json!({
                    "equal": r.equal,
                    "original": IdealView::from(&r.original),
                    "depolarized": IdealView::from(&r.depolarized),
                }),
                verdict(r.equal),
            ))
        }

        Command::Hilbert {
            coeffs, topological, ..
        } => {
            let series = HilbertSeries::of_ideal(&ideal)?;
            let mut report = json!({
                "ideal": view,
                "grading": grading(*topological),
                "k_polynomial": PolynomialView::new(&series.numerator, *topological),
                "denominator": {
                    "power": series.denominator_power,
                    "display": if *topological {
                        format!("(1 - t^2)^{}", series.denominator_power)
                    } else {
                        format!("(1 - t)^{}", series.denominator_power)
                    },
                },
            });
            if let Some(d) = *coeffs {
                if d > MAX_SERIES_DEGREE {
                    return Err(Error::Resource {
                        what: "series degree",
                        value: d,
                        limit: MAX_SERIES_DEGREE,
                    });
                }
                let c = series_coefficients(&series, d)?;
                let c = if *topological {
                    topological_regrade(&IntPolynomial::new(c.clone()))
                        .coefficients()
                        .iter()
                        .copied()
                        .chain(std::iter::repeat(0))
                        .take(2 * d + 1)
                        .collect()
                } else {
                    c
                };
                report["series_coefficients"] = to_value(c);
            }
            Ok((report, 0))
        }

        Command::SrComplex(_) => {
            let p = polarize(&ideal);
            let polarized = p.ideal()?;
            let complex = sr_complex(&polarized)?;
            let f = complex.f_vector()?;
            let k_sr = k_polynomial_sr(&complex)?;
            let k_ie = k_polynomial_ie(&polarized)?;
            let names: Vec<String> = p.variables.iter().map(ToString::to_string).collect();
            let labelled: Vec<Vec<&str>> = complex
                .minimal_nonfaces()
                .iter()
                .map(|nf| nf.iter().map(|&v| names[v - 1].as_str()).collect())
                .collect();
            let equal = k_sr == k_ie;
            Ok((
                json!({
                    "ideal": view,
                    "vertex_count": complex.vertex_count(),
                    "vertices": names,
                    "minimal_nonfaces": complex.minimal_nonfaces(),
                    "minimal_nonfaces_labelled": labelled,
                    "f_vector": f,
                    "k_polynomial_sr": PolynomialView::new(&k_sr, false),
                    "k_polynomial_ie": PolynomialView::new(&k_ie, false),
                    "consistent": equal,
                }),
                verdict(equal),
            ))
        }

        Command::FroebergCheck(_) => {
            let r = froeberg_check(&ideal)?;
            Ok((
                json!({
                    "ideal": view,
                    "equal": r.equal,
                    "sequence_length": r.sequence_length,
                    "k_polynomial_source": PolynomialView::new(&r.source, false),
                    "k_polynomial_polarized": PolynomialView::new(&r.polarized, false),
                }),
                verdict(r.equal),
            ))
        }

        Command::Classify(_) => {
            let star = check_star(&ideal);
            let mut report = json!({ "ideal": view, "star": star });
            if !star.satisfied {
                return Ok((report, 1));
            }
            report["pairs"] = to_value(classify_variables(&ideal)?.pairs);
            Ok((report, 0))
        }

        Command::Realize(_) => {
            let r = verify_realization(&ideal)?;
            let code = verdict(r.is_verified());
            let mut report = json!({
                "ideal": view,
                "status": r.status,
                "star": r.star,
            });
            if let Some(p) = &r.presentation {
                report["presentation"] = to_value(IdealView::from(p));
            }
            if let Some(k) = &r.complex {
                report["complex"] = json!({
                    "vertex_count": k.vertex_count(),
                    "minimal_nonfaces": k.minimal_nonfaces(),
                });
            }
            if let Some(f) = &r.f_vector {
                report["f_vector"] = to_value(f);
            }
            if let Some(pairs) = &r.pairs {
                report["pairs"] = to_value(&pairs.pairs);
            }
            Ok((report, code))
        }

        Command::Oracle { max_degree, .. } => {
            let total = monomial_count_up_to(ideal.n(), *max_degree);
            if total > MAX_ORACLE_MONOMIALS {
                return Err(Error::Resource {
                    what: "monomials to enumerate",
                    value: total,
                    limit: MAX_ORACLE_MONOMIALS,
                });
            }
            let series = HilbertSeries::of_ideal(&ideal)?;
            let from_series = series_coefficients(&series, *max_degree)?;
            let counted: Vec<i64> = (0..=*max_degree)
                .map(|d| ideal.standard_monomials(d as u32).len() as i64)
                .collect();
            let equal = from_series == counted;
            Ok((
                json!({
                    "ideal": view,
                    "max_degree": max_degree,
                    "series_coefficients": from_series,
                    "standard_monomial_counts": counted,
                    "equal": equal,
                }),
                verdict(equal),
            ))
        }
    }
}

/// `C(d + n, n)`, saturating at `usize::MAX`.
fn monomial_count_up_to(n: usize, d: usize) -> usize {
    let mut c: u128 = 1;
    for k in 1..=n as u128 {
        c = c * (d as u128 + k) / k;
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        assert_eq!(monomial_count_up_to(3, 4), 35);
        assert_eq!(monomial_count_up_to(0, 7), 1);
        assert_eq!(monomial_count_up_to(200, 200), usize::MAX);
    }
}
