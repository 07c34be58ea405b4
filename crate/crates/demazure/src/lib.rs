//! Demazure atoms and key polynomials.
//!
//! Atoms and keys are computed two ways: by divided-difference operators
//! (`poly`) and by semi-standard augmented fillings (`ssaf`). On top of that sit
//! Mason's insertion (`insertion`), expansions in the atom and key bases
//! (`basis`), the product sweeps and closed forms (`products`) and the lattice
//! point picture in three variables (`polytope`).
//!
//! Sweeps run through [`exec`], which uses rayon when the `parallel` feature is
//! on and a plain loop otherwise.

pub mod basis;
pub mod exec;
pub mod insertion;
pub mod perm;
pub mod poly;
pub mod polytope;
pub mod products;
pub mod shape;
pub mod ssaf;

pub use perm::Permutation;
pub use poly::{OperatorKind, Polynomial};
pub use ssaf::Ssaf;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{what}: n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("compositions {0} and {1} are not rearrangements of one partition")]
    IncomparableShapes(String, String),
    #[error("enumeration needs {needed} cells, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("letter {letter} outside basement 1..={max}")]
    LetterOutOfRange { letter: u32, max: usize },
    #[error("no twisted Knuth move of variant {variant} at position {position}")]
    PatternMismatch { position: usize, variant: u8 },
    #[error("not a column word: {0}")]
    NotColumnWord(String),
    #[error("expected a polynomial in {expected} variables, got {got}")]
    WrongVariableCount { expected: usize, got: usize },
    #[error("negative coefficient {coeff} at {at}")]
    NegativeCoefficient { coeff: i64, at: String },
    #[error("closed form parameters need m >= n and k >= l, got ({m},{n},{k},{l})")]
    BadParams { m: u32, n: u32, k: u32, l: u32 },
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
