use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("row index {index} out of range for {rows} rows")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("index set is not a prebasis: {0}")]
    InvalidPrebasis(String),
    #[error("rows {0:?} do not form an invertible submatrix")]
    NotInvertible(Vec<usize>),
    #[error("basis {0:?} is not feasible")]
    NotFeasible(Vec<usize>),
    #[error("constraint matrix has rank {rank} < {cols}; the polyhedron is not pointed")]
    NotPointed { rank: usize, cols: usize },
    #[error("pivot budget of {budget} exceeded")]
    IterationBudgetExceeded { budget: u128 },
    #[error("division by zero: (A d)_{0} = 0")]
    ZeroSlope(usize),
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("empty sequence")]
    EmptySequence,
    #[error("polyhedron is unbounded along coordinate {coordinate}")]
    NotBounded { coordinate: usize },
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}
