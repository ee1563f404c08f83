use thiserror::Error;

use crate::polyhedral::StarReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("exponent {value} exceeds the supported maximum {max}")]
    ExponentRange { value: u64, max: u32 },

    #[error("arithmetic overflow in {context}")]
    Overflow { context: &'static str },

    #[error("the unit ideal is not supported (constant monomial among generators)")]
    UnitIdeal,

    #[error("the zero ideal is not supported (no generators)")]
    ZeroIdeal,

    #[error("variable x{0} does not appear in any generator")]
    MissingVariable(usize),

    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("generator {0} is not square-free")]
    NotSquareFree(String),

    #[error("singleton non-face {{{0}}}: every variable of the ideal must be a vertex of the complex")]
    SingletonNonFace(usize),

    #[error("empty set listed as a non-face")]
    EmptyNonFace,

    #[error("non-faces are not an antichain: {0:?} is contained in {1:?}")]
    NotAntichain(Vec<usize>, Vec<usize>),

    #[error("resource guard: {what} is {value}, limit is {limit}")]
    Resource {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("condition (star) does not hold")]
    StarViolated(Box<StarReport>),

    #[error("variable x{variable}: constant exponent {q} is not below pure power exponent {s}")]
    PurePowerOrder { variable: usize, q: u32, s: u32 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Resource { .. } | Error::Overflow { .. } => 3,
            _ => 2,
        }
    }
}
