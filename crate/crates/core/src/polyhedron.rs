//! Membership predicates for `P(A, b) = {x | A x >= b}` and the dual
//! polyhedron `Q(A, c) = {u | A^T u = c, u >= 0}`, plus the two recession
//! cone predicates.

use num_traits::Zero;

use crate::ratlin::{check_len, inner, is_nonneg, Matrix, Rational};
use crate::Result;

/// `minimize <c, x> subject to A x >= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub a: Matrix,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(a: Matrix, b: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        check_len("right-hand side", a.rows(), b.len())?;
        check_len("objective", a.cols(), c.len())?;
        Ok(Self { a, b, c })
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }
}

/// `A x >= b`.
pub fn contains(a: &Matrix, b: &[Rational], x: &[Rational]) -> Result<bool> {
    check_len("polyhedron: b", a.rows(), b.len())?;
    check_len("polyhedron: x", a.cols(), x.len())?;
    Ok(a.row_iter().zip(b).all(|(row, bi)| &inner(row, x) >= bi))
}

/// `A^T u = c` and `u >= 0`.
pub fn dual_contains(a: &Matrix, c: &[Rational], u: &[Rational]) -> Result<bool> {
    check_len("dual polyhedron: c", a.cols(), c.len())?;
    check_len("dual polyhedron: u", a.rows(), u.len())?;
    Ok(is_nonneg(u) && a.tr_mul_vec(u) == c)
}

/// `A d >= 0`.
pub fn is_feasible_dir(a: &Matrix, d: &[Rational]) -> Result<bool> {
    check_len("feasible direction", a.cols(), d.len())?;
    Ok(a.row_iter().all(|row| inner(row, d) >= Rational::zero()))
}

/// `A^T d = 0` and `d >= 0`.
pub fn is_dual_feasible_dir(a: &Matrix, d: &[Rational]) -> Result<bool> {
    check_len("dual feasible direction", a.rows(), d.len())?;
    Ok(is_nonneg(d) && a.tr_mul_vec(d).iter().all(Zero::is_zero))
}
