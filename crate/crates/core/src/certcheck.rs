//! Certificate verification.
//!
//! These checks use only the matrix primitives of [`crate::ratlin`] and the
//! predicates of [`crate::polyhedron`]; nothing here calls into the solver.

use num_traits::Signed;

use crate::polyhedron::{contains, dual_contains, is_dual_feasible_dir, is_feasible_dir};
use crate::ratlin::{check_len, dot, inner, Matrix, Rational};
use crate::simplex::SimplexResult;
use crate::Result;

/// `d >= 0`, `A^T d = 0`, `<b, d> > 0`.
pub fn check_infeasible(a: &Matrix, b: &[Rational], d: &[Rational]) -> Result<bool> {
    Ok(is_dual_feasible_dir(a, d)? && dot(b, d)?.is_positive())
}

/// `A x >= b`, `A d >= 0`, `<c, d> < 0`.
pub fn check_unbounded(a: &Matrix, b: &[Rational], c: &[Rational], x: &[Rational], d: &[Rational]) -> Result<bool> {
    Ok(contains(a, b, x)? && is_feasible_dir(a, d)? && dot(c, d)?.is_negative())
}

/// `A x >= b`, `A^T u = c`, `u >= 0`, and `<c, x> = <b, u>`.
pub fn check_optimal(a: &Matrix, b: &[Rational], c: &[Rational], x: &[Rational], u: &[Rational]) -> Result<bool> {
    Ok(contains(a, b, x)? && dual_contains(a, c, u)? && dot(c, x)? == dot(b, u)?)
}

/// `A r >= 0` and `<c, r> < 0`: no `u >= 0` satisfies `A^T u = c`.
pub fn check_dual_infeasible(a: &Matrix, c: &[Rational], r: &[Rational]) -> Result<bool> {
    Ok(is_feasible_dir(a, r)? && dot(c, r)?.is_negative())
}

/// Every column `v` of `points` satisfies `<cvec, v> > <cvec, x>`.
pub fn check_separation(points: &Matrix, x: &[Rational], cvec: &[Rational]) -> Result<bool> {
    check_len("separation: point", points.rows(), x.len())?;
    check_len("separation: normal", points.rows(), cvec.len())?;
    let level = inner(cvec, x);
    let values = points.tr_mul_vec(cvec);
    Ok(values.iter().all(|v| v > &level))
}

/// Dispatches on the verdict.
pub fn check_result(a: &Matrix, b: &[Rational], c: &[Rational], result: &SimplexResult) -> Result<bool> {
    match result {
        SimplexResult::Infeasible { d } => check_infeasible(a, b, d),
        SimplexResult::Unbounded { x, d } => check_unbounded(a, b, c, x, d),
        SimplexResult::Optimal { x, u } => check_optimal(a, b, c, x, u),
    }
}

/// `<c, x>` for an optimal certificate, for display.
pub fn certified_value(c: &[Rational], result: &SimplexResult) -> Option<Rational> {
    match result {
        SimplexResult::Optimal { x, .. } => Some(inner(c, x)),
        _ => None,
    }
}
