//! Monomial ideals realizable by polyhedral products of projective spaces.
//!
//! The realizable class is cut out by the star condition: for every
//! variable, its exponent is the same (`q_i`) in every generator where it
//! appears alongside some other variable. Pure powers `x_i^{s_i}` are left
//! unconstrained apart from `q_i < s_i`. For such ideals the simplicial
//! complex has one minimal non-face per multi-variable generator, each
//! variable gets a pair of projective spaces according to which of four
//! cases it falls in, and the resulting cohomology presentation is
//!
//! ```text
//! < x_{i_1}^{q_{i_1}} ... x_{i_k}^{q_{i_k}} : {i_1..i_k} a minimal non-face >
//!   + < x_i^{s_i} : x_i has a pure power >
//! ```
//!
//! which must coincide with the ideal we started from.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::simplicial::SimplicialComplex;

/// What the star check learned about one variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarVariable {
    pub variable: usize,
    /// Common exponent among multi-variable generators, if any contain it.
    pub q: Option<u32>,
    /// Exponent of the pure power `x_i^s`, if present.
    pub s: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StarViolation {
    /// The variable carries different exponents in different
    /// multi-variable generators. Exponents are distinct and ascending.
    ExponentConflict { variable: usize, exponents: Vec<u32> },
    /// `q_i >= s_i`.
    PurePowerNotAbove { variable: usize, q: u32, s: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarReport {
    pub satisfied: bool,
    pub variables: Vec<StarVariable>,
    pub violations: Vec<StarViolation>,
}

pub fn check_star(ideal: &MonomialIdeal) -> StarReport {
    check_star_generators(ideal.n(), ideal.generators())
}

pub(crate) fn check_star_generators(n: usize, gens: &[Monomial]) -> StarReport {
    let mut variables = Vec::with_capacity(n);
    let mut violations = Vec::new();
    for i in 1..=n {
        let mut mixed: Vec<u32> = gens
            .iter()
            .filter(|g| g.exponent(i) > 0 && g.support().len() >= 2)
            .map(|g| g.exponent(i))
            .collect();
        mixed.sort_unstable();
        mixed.dedup();
        let s = gens
            .iter()
            .find(|g| g.exponent(i) > 0 && g.support().len() == 1)
            .map(|g| g.exponent(i));
        let q = match mixed.as_slice() {
            [] => None,
            [q] => Some(*q),
            _ => {
                violations.push(StarViolation::ExponentConflict {
                    variable: i,
                    exponents: mixed.clone(),
                });
                None
            }
        };
        if let (Some(q), Some(s)) = (q, s) {
            if q >= s {
                violations.push(StarViolation::PurePowerNotAbove { variable: i, q, s });
            }
        }
        variables.push(StarVariable { variable: i, q, s });
    }
    StarReport {
        satisfied: violations.is_empty(),
        variables,
        violations,
    }
}

fn require_star(ideal: &MonomialIdeal) -> Result<StarReport> {
    let report = check_star(ideal);
    if report.satisfied {
        Ok(report)
    } else {
        Err(Error::StarViolated(Box::new(report)))
    }
}

/// Supports of the generators involving at least two variables.
fn mixed_supports(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    ideal
        .generators()
        .iter()
        .map(Monomial::support)
        .filter(|s| s.len() >= 2)
        .collect()
}

/// The complex on `n` vertices whose minimal non-faces are the supports of
/// the multi-variable generators.
pub fn construction_k(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    require_star(ideal)?;
    SimplicialComplex::new(ideal.n(), mixed_supports(ideal))
}

/// A space appearing in a CW pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "space", content = "dim", rename_all = "snake_case")]
pub enum PairSpace {
    /// `CP^∞`
    InfiniteProjective,
    /// `CP^k`
    Projective(u32),
    /// A point.
    Point,
}

impl fmt::Display for PairSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairSpace::InfiniteProjective => f.write_str("CP^∞"),
            PairSpace::Projective(k) => write!(f, "CP^{k}"),
            PairSpace::Point => f.write_str("∗"),
        }
    }
}

/// Which of the four realizable shapes a variable takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VariableCase {
    /// Only in multi-variable generators, exponent 1.
    Linear = 1,
    /// Only in multi-variable generators, exponent `q > 1`.
    Power = 2,
    /// Only as a pure power `x^s`.
    Truncated = 3,
    /// Pure power `x^s` and exponent `q < s` elsewhere.
    TruncatedPower = 4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariablePair {
    pub variable: usize,
    pub case: u8,
    pub kind: VariableCase,
    pub q: Option<u32>,
    pub s: Option<u32>,
    pub x: PairSpace,
    pub a: PairSpace,
    pub rendered: String,
    /// Set for case 4 with `q = 1`, whose pair has the case-3 shape.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairAssignment {
    pub pairs: Vec<VariablePair>,
}

pub fn classify_variables(ideal: &MonomialIdeal) -> Result<PairAssignment> {
    let report = require_star(ideal)?;
    report
        .variables
        .iter()
        .map(|v| classify_one(v.variable, v.q, v.s))
        .collect::<Result<Vec<_>>>()
        .map(|pairs| PairAssignment { pairs })
}

fn classify_one(variable: usize, q: Option<u32>, s: Option<u32>) -> Result<VariablePair> {
    let (kind, x, a) = match (q, s) {
        (Some(1), None) => (VariableCase::Linear, PairSpace::InfiniteProjective, PairSpace::Point),
        (Some(q), None) => (
            VariableCase::Power,
            PairSpace::InfiniteProjective,
            PairSpace::Projective(q - 1),
        ),
        (None, Some(s)) => (VariableCase::Truncated, PairSpace::Projective(s - 1), PairSpace::Point),
        (Some(q), Some(s)) => {
            if q >= s {
                return Err(Error::PurePowerOrder { variable, q, s });
            }
            (
                VariableCase::TruncatedPower,
                PairSpace::Projective(s - 1),
                PairSpace::Projective(q - 1),
            )
        }
        (None, None) => return Err(Error::MissingVariable(variable)),
    };
    let note = (kind == VariableCase::TruncatedPower && q == Some(1))
        .then(|| "q = 1: CP^0 is a point, so the pair has the same shape as case 3".to_string());
    Ok(VariablePair {
        variable,
        case: kind as u8,
        kind,
        q,
        s,
        x,
        a,
        rendered: format!("({x}, {a})"),
        note,
    })
}

/// The cohomology presentation of the polyhedral product, as an ideal.
pub fn polyhedral_presentation(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let report = require_star(ideal)?;
    let complex = construction_k(ideal)?;
    let n = ideal.n();
    let mut gens = Vec::new();
    for nonface in complex.minimal_nonfaces() {
        let mut exps = vec![0u32; n];
        for &v in nonface {
            exps[v - 1] = report.variables[v - 1].q.expect("non-face vertices carry q");
        }
        gens.push(Monomial::new(exps)?);
    }
    for v in &report.variables {
        if let Some(s) = v.s {
            gens.push(Monomial::power(n, v.variable, s)?);
        }
    }
    MonomialIdeal::new_unchecked(n, gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealizationStatus {
    Verified,
    Unequal,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationReport {
    pub status: RealizationStatus,
    pub star: StarReport,
    pub ideal: MonomialIdeal,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<MonomialIdeal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<SimplicialComplex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<PairAssignment>,
}

impl RealizationReport {
    pub fn is_verified(&self) -> bool {
        self.status == RealizationStatus::Verified
    }
}

/// Rebuilds the ideal from the polyhedral-product data and compares.
///
/// Ideals outside the star class are reported as not applicable rather than
/// as errors. The f-vector is omitted when the complex is too large to
/// enumerate.
pub fn verify_realization(ideal: &MonomialIdeal) -> Result<RealizationReport> {
    let star = check_star(ideal);
    if !star.satisfied {
        return Ok(RealizationReport {
            status: RealizationStatus::NotApplicable,
            star,
            ideal: ideal.clone(),
            presentation: None,
            complex: None,
            f_vector: None,
            pairs: None,
        });
    }
    let complex = construction_k(ideal)?;
    let pairs = classify_variables(ideal)?;
    let presentation = polyhedral_presentation(ideal)?;
    let f_vector = match complex.f_vector() {
        Ok(f) => Some(f),
        Err(Error::Resource { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(RealizationReport {
        status: if &presentation == ideal {
            RealizationStatus::Verified
        } else {
            RealizationStatus::Unequal
        },
        star,
        ideal: ideal.clone(),
        presentation: Some(presentation),
        complex: Some(complex),
        f_vector,
        pairs: Some(pairs),
    })
}
