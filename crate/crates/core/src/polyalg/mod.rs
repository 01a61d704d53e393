//! Exact integer polynomials in several variables, polynomial matrices and
//! rational series.

mod matrix;
mod monomial;
mod poly;
mod rational;

pub use matrix::{det_poly_matrix, det_with_bound, minor, PolyMatrix, DEFAULT_DET_BOUND};
pub use monomial::{compositions, Monomial};
pub use poly::{poly_arith, ArithOp, MultiPoly};
pub use rational::RationalSeries;

pub(crate) use poly::big_to_f64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("exponent vector of length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("index ({row}, {col}) out of range for a {size}x{size} matrix")]
    IndexOutOfRange { row: usize, col: usize, size: usize },
    #[error("matrix of size {size} exceeds the determinant bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("denominator vanishes at the origin")]
    SingularAtOrigin,
}
