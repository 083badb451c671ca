use thiserror::Error;

/// Errors raised by the library.
///
/// `Violated` marks an internal guarantee of the insertion algorithms that
/// did not hold; it is a bug signal rather than a user error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("invalid transposition ({0},{0})")]
    DegenerateTransposition(usize),
    #[error("permutation {perm} does not lie in S_{n}")]
    OutsideGroup { perm: String, n: usize },
    #[error("coefficient overflow in polynomial arithmetic")]
    Overflow,
    #[error("polynomial parse error at byte {pos}: {msg}")]
    PolyParse { pos: usize, msg: String },
    #[error("graph parse error: {0}")]
    GraphParse(String),
    #[error("graph is not reduced: {crossings} crossings but permutation length {length}")]
    NotReduced { crossings: usize, length: usize },
    #[error("invalid composition: {0}")]
    Composition(String),
    #[error("invalid ledger: {0}")]
    Ledger(String),
    #[error("no insertable position in row {row}")]
    Infeasible { row: usize },
    #[error("violated guarantee: {0}")]
    Violated(String),
    #[error("ambiguous expansion: {perm} admits ledgers {first} and {second}")]
    Ambiguous {
        perm: String,
        first: String,
        second: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
