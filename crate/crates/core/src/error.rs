use crate::polyring::Var;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable {0} may not carry a negative exponent")]
    NegativeExponent(Var),
    #[error("no value assigned to {0}")]
    MissingAssignment(Var),
    #[error("division by zero: {0} evaluated at 0 under a negative power")]
    DivisionByZero(Var),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("sector {sector:?} is infeasible for n = {n}, k = {k}")]
    InfeasibleSector { n: usize, k: usize, sector: Vec<usize> },
    #[error("invalid rate: {0}")]
    InvalidRate(String),
    #[error("chain is not irreducible")]
    Reducible,
    #[error("tiles do not form a hexagon")]
    NotAHexagon,
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("locus is not present in this state")]
    NotALocus,
    #[error("unsupported: {0}")]
    Unsupported(String),
}
