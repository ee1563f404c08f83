//! Monomial ideals held by their minimal generating set, and arithmetic in
//! the quotient ring `Z[x_1..x_n] / I`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal given by its canonical minimal generators.
///
/// Generators form a divisibility antichain sorted by (degree, exponent
/// vector). Two ideals are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` and requires every variable to occur in some
    /// generator.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        let ideal = Self::new_unchecked(n, gens)?;
        if let Some(i) = ideal.missing_variables().first() {
            return Err(Error::MissingVariable(*i));
        }
        Ok(ideal)
    }

    /// Like [`MonomialIdeal::new`] but allows variables that occur in no
    /// generator. Used for intermediate states such as ideals read off a
    /// simplicial complex with cone points.
    pub fn new_unchecked(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            if g.n() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: g.n(),
                });
            }
            if g.is_one() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal {
            n,
            generators: minimal_antichain(gens),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Variables (1-based) that occur in no generator.
    pub fn missing_variables(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.generators.iter().all(|g| g.exponent(i) == 0))
            .collect()
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().all(Monomial::is_square_free)
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: m.n(),
            });
        }
        Ok(self.generators.iter().any(|g| g.divides_unchecked(m)))
    }

    /// All degree-`d` monomials outside the ideal, in canonical order.
    ///
    /// Brute force over all `C(d+n-1, n-1)` monomials of degree `d`; callers
    /// bound `d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for_each_monomial_of_degree(self.n, d, |exps| {
            let m = Monomial::new(exps.to_vec()).expect("degree-bounded exponents");
            if !self.generators.iter().any(|g| g.divides_unchecked(&m)) {
                out.push(m);
            }
        });
        out
    }

    /// Product of two residues in the quotient ring. `None` is zero.
    pub fn multiply_mod(&self, a: &Monomial, b: &Monomial) -> Result<Option<Monomial>> {
        let product = a.mul(b)?;
        Ok(if self.contains(&product)? {
            None
        } else {
            Some(product)
        })
    }
}

/// The minimal generating set of the ideal spanned by `gens`.
pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    MonomialIdeal::new(n, gens)
}

fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    // A divisor has degree no larger than its multiple, so after sorting
    // only earlier entries can divide later ones.
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Visits every exponent vector of length `n` and total degree `d` in
/// increasing lexicographic order.
pub(crate) fn for_each_monomial_of_degree(n: usize, d: u32, mut visit: impl FnMut(&[u32])) {
    fn rec(pos: usize, remaining: u32, exps: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
        if pos + 1 == exps.len() {
            exps[pos] = remaining;
            visit(exps);
            return;
        }
        // Lexicographic ascending: small leading exponents first.
        for e in 0..=remaining {
            exps[pos] = e;
            rec(pos + 1, remaining - e, exps, visit);
        }
        exps[pos] = 0;
    }
    if n == 0 {
        if d == 0 {
            visit(&[]);
        }
        return;
    }
    let mut exps = vec![0u32; n];
    rec(0, d, &mut exps, &mut visit);
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(n={}, {self})", self.n)
    }
}
