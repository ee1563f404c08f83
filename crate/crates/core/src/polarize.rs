//! Polarization of a monomial ideal into a square-free ideal, the linear
//! forms `y_{i1} - y_{ik}` cutting it back down, and depolarization.
//!
//! A generator `x_1^{t_1} ... x_n^{t_n}` polarizes to the product of the
//! first `t_i` copies `y_{i1} ... y_{it_i}` of every variable. Copies are
//! laid out row-major by (source variable, copy index), so `y_{ik}` lives at
//! position `t_1 + ... + t_{i-1} + k` of the polarized ring.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The variable `y_{source,copy}` of the polarized ring (both 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PolarizedVariable {
    pub source: usize,
    pub copy: u32,
}

impl fmt::Display for PolarizedVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}_{}", self.source, self.copy)
    }
}

/// The linear form `y_{i1} - y_{ik}`, `k >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    pub minuend: PolarizedVariable,
    pub subtrahend: PolarizedVariable,
}

impl LinearForm {
    fn new(source: usize, copy: u32) -> Self {
        debug_assert!(copy >= 2);
        LinearForm {
            minuend: PolarizedVariable { source, copy: 1 },
            subtrahend: PolarizedVariable { source, copy },
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.minuend, self.subtrahend)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarizationResult {
    pub source_n: usize,
    pub row_maxima: Vec<u32>,
    pub variables: Vec<PolarizedVariable>,
    /// Square-free generators in the polarized variables, one per source
    /// generator and in the same order.
    pub generators: Vec<Monomial>,
    pub thetas: Vec<LinearForm>,
}

impl PolarizationResult {
    /// Number of polarized variables, `t_1 + ... + t_n`.
    pub fn polarized_n(&self) -> usize {
        self.variables.len()
    }

    /// The polarized generators as an ideal of the polarized ring.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.polarized_n(), self.generators.clone())
    }

    /// Renders a polarized generator as `y1_1*y1_2*y2_1`.
    pub fn render_generator(&self, m: &Monomial) -> String {
        let names: Vec<String> = m
            .support()
            .into_iter()
            .map(|pos| self.variables[pos - 1].to_string())
            .collect();
        names.join("*")
    }
}

/// `t_i`: the largest exponent of `x_i` over the generators.
pub fn row_maxima(ideal: &MonomialIdeal) -> Vec<u32> {
    (1..=ideal.n())
        .map(|i| {
            ideal
                .generators()
                .iter()
                .map(|g| g.exponent(i))
                .max()
                .unwrap_or(0)
        })
        .collect()
}

pub fn polarize(ideal: &MonomialIdeal) -> PolarizationResult {
    let maxima = row_maxima(ideal);
    let mut offsets = Vec::with_capacity(maxima.len());
    let mut variables = Vec::new();
    let mut thetas = Vec::new();
    for (i, &t) in maxima.iter().enumerate() {
        offsets.push(variables.len());
        for k in 1..=t {
            variables.push(PolarizedVariable {
                source: i + 1,
                copy: k,
            });
            if k >= 2 {
                thetas.push(LinearForm::new(i + 1, k));
            }
        }
    }
    let generators = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; variables.len()];
            for (i, &e) in g.exponents().iter().enumerate() {
                for k in 0..e as usize {
                    exps[offsets[i] + k] = 1;
                }
            }
            Monomial::new(exps).expect("square-free exponents")
        })
        .collect();
    PolarizationResult {
        source_n: ideal.n(),
        row_maxima: maxima,
        variables,
        generators,
        thetas,
    }
}

/// Identifies every `y_{ik}` with `x_i`, the quotient by the linear forms,
/// and minimalizes the result.
pub fn depolarize(p: &PolarizationResult) -> Result<MonomialIdeal> {
    let gens = p
        .generators
        .iter()
        .map(|g| {
            let mut exps = vec![0u32; p.source_n];
            for pos in g.support() {
                exps[p.variables[pos - 1].source - 1] += g.exponent(pos);
            }
            Monomial::new(exps)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(p.source_n, gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepolarizationReport {
    pub equal: bool,
    pub original: MonomialIdeal,
    pub depolarized: MonomialIdeal,
}

/// Checks that the polarized ring modulo the linear forms has exactly the
/// presentation of the original ring.
pub fn verify_depolarization_quotient(ideal: &MonomialIdeal) -> Result<DepolarizationReport> {
    let depolarized = depolarize(&polarize(ideal))?;
    Ok(DepolarizationReport {
        equal: &depolarized == ideal,
        original: ideal.clone(),
        depolarized,
    })
}
