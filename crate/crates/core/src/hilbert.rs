//! Hilbert series of monomial quotient rings.
//!
//! The numerator `K(t)` of `HS(t) = K(t) / (1 - t)^n` is computed two ways:
//! inclusion-exclusion over subsets of generators (any monomial ideal) and
//! the face expansion of the Stanley-Reisner complex (square-free ideals).
//! Internally every variable has degree one; [`topological_regrade`]
//! doubles degrees for reporting in cohomological grading.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polarize::polarize;
use crate::simplicial::SimplicialComplex;

/// Inclusion-exclusion visits `2^r` subsets; `r` is capped here.
pub const MAX_IE_GENERATORS: usize = 20;

fn overflow() -> Error {
    Error::Overflow {
        context: "polynomial coefficient",
    }
}

/// Dense integer polynomial in `t`, coefficient `i` at degree `i`, with no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coefficients: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![1])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Coefficient of `t^d` (zero beyond the degree).
    pub fn coefficient(&self, d: usize) -> i64 {
        self.coefficients.get(d).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn checked_add(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        let len = self.coefficients.len().max(other.coefficients.len());
        let coefficients = (0..len)
            .map(|i| {
                self.coefficient(i)
                    .checked_add(other.coefficient(i))
                    .ok_or_else(overflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coefficients))
    }

    pub fn checked_mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::default());
        }
        let mut out = vec![0i64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                let term = a.checked_mul(b).ok_or_else(overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or_else(overflow)?;
            }
        }
        Ok(IntPolynomial::new(out))
    }

    /// `(1 - t)^power`.
    pub fn one_minus_t_pow(power: usize) -> Result<IntPolynomial> {
        let mut out = Vec::with_capacity(power + 1);
        let mut c: i128 = 1;
        for k in 0..=power {
            let signed = if k % 2 == 0 { c } else { -c };
            out.push(i64::try_from(signed).map_err(|_| overflow())?);
            c = c * (power - k) as i128 / (k + 1) as i128;
        }
        Ok(IntPolynomial::new(out))
    }

    /// Evaluates at an integer point with checked arithmetic.
    pub fn eval(&self, t: i64) -> Result<i64> {
        self.coefficients.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(t)
                .and_then(|v| v.checked_add(c))
                .ok_or_else(overflow)
        })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (d, abs) {
                (0, _) => write!(f, "{abs}")?,
                (_, 1) => {}
                _ => write!(f, "{abs}")?,
            }
            match d {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// `numerator / (1 - t)^denominator_power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub numerator: IntPolynomial,
    pub denominator_power: usize,
}

impl HilbertSeries {
    /// The Hilbert series of `Z[x_1..x_n] / I`.
    pub fn of_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        Ok(HilbertSeries {
            numerator: k_polynomial_ie(ideal)?,
            denominator_power: ideal.n(),
        })
    }

    /// Coefficients of `t^0..=t^max_degree`.
    pub fn coefficients(&self, max_degree: usize) -> Result<Vec<i64>> {
        series_coefficients(self, max_degree)
    }
}

/// `K(t) = sum over generator subsets S of (-1)^|S| t^deg lcm(S)`.
pub fn k_polynomial_ie(ideal: &MonomialIdeal) -> Result<IntPolynomial> {
    let gens = ideal.generators();
    if gens.len() > MAX_IE_GENERATORS {
        return Err(Error::Resource {
            what: "generator count for inclusion-exclusion",
            value: gens.len(),
            limit: MAX_IE_GENERATORS,
        });
    }
    // Depth-first over subsets, carrying the running lcm.
    fn visit(
        gens: &[Monomial],
        next: usize,
        lcm: &Monomial,
        odd: bool,
        terms: &mut BTreeMap<u64, i64>,
    ) {
        for (k, g) in gens.iter().enumerate().skip(next) {
            let l = lcm.lcm(g).expect("generators share the ambient dimension");
            *terms.entry(l.degree()).or_insert(0) += if odd { 1 } else { -1 };
            visit(gens, k + 1, &l, !odd, terms);
        }
    }
    let mut terms = BTreeMap::new();
    terms.insert(0u64, 1i64);
    visit(gens, 0, &Monomial::one(ideal.n()), false, &mut terms);

    let top = *terms.keys().next_back().unwrap_or(&0);
    let top = usize::try_from(top).map_err(|_| overflow())?;
    let mut coefficients = vec![0i64; top + 1];
    for (d, c) in terms {
        coefficients[d as usize] = c;
    }
    Ok(IntPolynomial::new(coefficients))
}

/// `K(t) = sum over faces F of t^|F| (1 - t)^(n - |F|)`, from the f-vector.
pub fn k_polynomial_sr(complex: &SimplicialComplex) -> Result<IntPolynomial> {
    let n = complex.vertex_count();
    let f = complex.f_vector()?;
    let mut total = IntPolynomial::default();
    for (k, &count) in f.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let mut monomial = vec![0i64; k + 1];
        monomial[k] = i64::try_from(count).map_err(|_| overflow())?;
        let term = IntPolynomial::new(monomial).checked_mul(&IntPolynomial::one_minus_t_pow(n - k)?)?;
        total = total.checked_add(&term)?;
    }
    Ok(total)
}

/// First `max_degree + 1` coefficients of `H`, expanding
/// `1 / (1 - t)^p = sum_d C(d + p - 1, p - 1) t^d`.
pub fn series_coefficients(series: &HilbertSeries, max_degree: usize) -> Result<Vec<i64>> {
    let p = series.denominator_power;
    let mut binomials = Vec::with_capacity(max_degree + 1);
    let mut b: i128 = 1;
    for d in 0..=max_degree {
        if d > 0 {
            b = if p == 0 {
                0
            } else {
                b.checked_mul((d + p - 1) as i128).ok_or_else(overflow)? / d as i128
            };
        }
        binomials.push(i64::try_from(b).map_err(|_| overflow())?);
    }
    (0..=max_degree)
        .map(|d| {
            let top = d.min(series.numerator.coefficients().len().saturating_sub(1));
            (0..=top).try_fold(0i64, |acc, j| {
                series
                    .numerator
                    .coefficient(j)
                    .checked_mul(binomials[d - j])
                    .and_then(|term| acc.checked_add(term))
                    .ok_or_else(overflow)
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FroebergReport {
    pub equal: bool,
    pub source: IntPolynomial,
    pub polarized: IntPolynomial,
    /// Length of the linear-form sequence, `t_1 + ... + t_n - n`.
    pub sequence_length: usize,
}

/// Compares the K-polynomials of an ideal and of its polarization.
///
/// Both rings then have Hilbert series differing by exactly the factor
/// `(1 - t)^(d - n)`, which is what regularity of the linear forms requires.
pub fn froeberg_check(ideal: &MonomialIdeal) -> Result<FroebergReport> {
    let source = k_polynomial_ie(ideal)?;
    let p = polarize(ideal);
    let polarized = k_polynomial_ie(&p.ideal()?)?;
    Ok(FroebergReport {
        equal: source == polarized,
        sequence_length: p.thetas.len(),
        source,
        polarized,
    })
}

/// `t -> t^2`.
pub fn topological_regrade(p: &IntPolynomial) -> IntPolynomial {
    let mut out = vec![0i64; p.coefficients().len() * 2];
    for (d, &c) in p.coefficients().iter().enumerate() {
        out[2 * d] = c;
    }
    IntPolynomial::new(out)
}
