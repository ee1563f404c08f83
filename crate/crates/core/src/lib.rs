//! Computations with monomial ideal rings `Z[x_1..x_n] / I`.
//!
//! * [`ideal`] and [`monomial`]: minimal generating sets, membership,
//!   standard monomials and quotient-ring products.
//! * [`polarize`]: polarization to a square-free ideal and back.
//! * [`simplicial`]: Stanley-Reisner complexes and face enumeration.
//! * [`hilbert`]: K-polynomials by inclusion-exclusion and by f-vectors.
//! * [`polyhedral`]: the star condition, the associated complex and CW
//!   pairs, and the polyhedral-product presentation.
//! * [`cli`]: the `monring` command-line front end.

pub mod cli;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod monomial;
pub mod polarize;
pub mod polyhedral;
pub mod simplicial;

pub use error::{Error, Result};
pub use hilbert::{HilbertSeries, IntPolynomial};
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::Monomial;
pub use polarize::{PolarizationResult, PolarizedVariable};
pub use polyhedral::{PairAssignment, StarReport};
pub use simplicial::SimplicialComplex;
