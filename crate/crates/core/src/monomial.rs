//! Exponent-vector monomials over a fixed set of variables `x_1..x_n`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest exponent accepted from input.
pub const MAX_EXPONENT: u32 = 1_000_000;

/// A monomial `x_1^{e_1} ... x_n^{e_n}`.
///
/// The total degree is cached; every variable has algebraic degree one.
/// Monomials order by total degree first and then lexicographically on the
/// exponent vector, which is the canonical generator order of an ideal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u64,
}

impl Monomial {
    /// Builds a monomial, rejecting exponents above [`MAX_EXPONENT`].
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if let Some(&e) = exponents.iter().find(|&&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentRange {
                value: e as u64,
                max: MAX_EXPONENT,
            });
        }
        Ok(Self::from_exponents(exponents))
    }

    fn from_exponents(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().map(|&e| e as u64).sum();
        Monomial { exponents, degree }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
            degree: 0,
        }
    }

    /// The monomial `x_index^power`, 1-based.
    pub fn power(n: usize, index: usize, power: u32) -> Result<Self> {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, n });
        }
        let mut exponents = vec![0; n];
        exponents[index - 1] = power;
        Self::new(exponents)
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of `x_index` (1-based).
    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index - 1]
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// 1-based indices of the variables with a nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    fn check_dimension(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dimension(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// Exponentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dimension(other)?;
        Ok(Self::from_exponents(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }

    /// Exponentwise sum; fails if an exponent leaves the 32-bit range.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dimension(other)?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| {
                a.checked_add(b).ok_or(Error::Overflow {
                    context: "monomial product",
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_exponents(exponents))
    }

    /// Renders with a custom variable name, e.g. `x1^2*x3`.
    pub fn render(&self, var: &str) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => format!("{var}{}", i + 1),
                _ => format!("{var}{}^{e}", i + 1),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl TryFrom<Vec<u32>> for Monomial {
    type Error = Error;

    fn try_from(exponents: Vec<u32>) -> Result<Self> {
        Monomial::new(exponents)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exponents
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shorthand for tests and examples; panics on out-of-range exponents.
#[macro_export]
macro_rules! mono {
    ($($e:expr),* $(,)?) => {
        $crate::Monomial::new(vec![$($e),*]).expect("valid monomial")
    };
}
