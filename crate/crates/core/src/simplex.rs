//! The general solver and the polyhedron predicates built on it.
//!
//! Arbitrary programs are reduced to pointed ones by writing `x = v - w`
//! with `v, w >= 0`; the certificates of the pointed program are mapped back
//! and remain valid for the original `(A, b, c)`.

use num_traits::{One, Signed, Zero};

use crate::basis::{basis_from_rows, direction, ext_reduced_cost, point_below_bound, FeasibleBasis};
use crate::phase1::pointed_simplex;
use crate::phase2::{phase2, Phase2Result};
use crate::ratlin::{add, check_len, inner, scale, sub, unit, zeros, Matrix, Rational};
use crate::{Error, Result};

/// A verdict on `minimize <c, x> s.t. A x >= b` with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplexResult {
    /// `d >= 0`, `A^T d = 0`, `<b, d> > 0`.
    Infeasible { d: Vec<Rational> },
    /// `A x >= b`, `A d >= 0`, `<c, d> < 0`.
    Unbounded { x: Vec<Rational>, d: Vec<Rational> },
    /// `A x >= b`, `u >= 0`, `A^T u = c`, `<c, x> = <b, u>`.
    Optimal { x: Vec<Rational>, u: Vec<Rational> },
}

impl SimplexResult {
    pub fn status(&self) -> &'static str {
        match self {
            SimplexResult::Infeasible { .. } => "infeasible",
            SimplexResult::Unbounded { .. } => "unbounded",
            SimplexResult::Optimal { .. } => "optimal",
        }
    }
}

fn check_dims(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<()> {
    check_len("right-hand side", a.rows(), b.len())?;
    check_len("objective", a.cols(), c.len())
}

/// `[[A, -A], [I, 0], [0, I]] (v, w) >= (b, 0, 0)`, objective `(c, -c)`.
pub fn pointed_program(a: &Matrix, b: &[Rational], c: &[Rational]) -> (Matrix, Vec<Rational>, Vec<Rational>) {
    let n = a.cols();
    let top = a.hstack(&a.neg());
    let id = Matrix::identity(2 * n);
    let a2 = top.vstack(&id);
    let mut b2 = b.to_vec();
    b2.extend(zeros(2 * n));
    let mut c2 = c.to_vec();
    c2.extend(c.iter().map(|v| -v));
    (a2, b2, c2)
}

pub fn simplex(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<SimplexResult> {
    check_dims(a, b, c)?;
    let (m, n) = (a.rows(), a.cols());
    let (a2, b2, c2) = pointed_program(a, b, c);
    let fold = |z: &[Rational]| sub(&z[..n], &z[n..]);
    Ok(match pointed_simplex(&a2, &b2, &c2)? {
        SimplexResult::Infeasible { d } => SimplexResult::Infeasible { d: d[..m].to_vec() },
        SimplexResult::Unbounded { x, d } => SimplexResult::Unbounded {
            x: fold(&x),
            d: fold(&d),
        },
        SimplexResult::Optimal { x, u } => SimplexResult::Optimal {
            x: fold(&x),
            u: u[..m].to_vec(),
        },
    })
}

/// Outcome of the dual-based feasibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible { x: Vec<Rational> },
    Infeasible { d: Vec<Rational> },
}

/// `[A^T; -A^T; I_m]`, the constraint matrix of the dual polyhedron.
pub fn dual_system(a: &Matrix) -> Matrix {
    let at = a.transpose();
    at.vstack(&at.neg()).vstack(&Matrix::identity(a.rows()))
}

/// Decides `A x >= b` by minimizing `<-b, u>` over `A^T u = 0, u >= 0` from
/// the basis of the identity rows (basic point `u = 0`).
///
/// An optimal basis yields a point `x` through its extended reduced costs; an
/// unbounded direction is a Farkas certificate.
pub fn feasibility(a: &Matrix, b: &[Rational]) -> Result<Feasibility> {
    check_len("right-hand side", a.rows(), b.len())?;
    let (m, n) = (a.rows(), a.cols());
    let dual = dual_system(a);
    let rhs = zeros(2 * n + m);
    let objective: Vec<Rational> = b.iter().map(|v| -v).collect();
    let start_rows: Vec<usize> = (2 * n..2 * n + m).collect();
    let start = FeasibleBasis::new(&dual, &rhs, basis_from_rows(&dual, &start_rows)?)?;
    Ok(match phase2(&dual, &rhs, &objective, &start)? {
        Phase2Result::Optimal(basis) => {
            let w = ext_reduced_cost(2 * n + m, &objective, basis.basis());
            Feasibility::Feasible {
                x: sub(&w[n..2 * n], &w[..n]),
            }
        }
        Phase2Result::Unbounded { basis, k } => Feasibility::Infeasible {
            d: direction(basis.basis(), k),
        },
    })
}

pub fn feasible(a: &Matrix, b: &[Rational]) -> Result<bool> {
    Ok(matches!(feasibility(a, b)?, Feasibility::Feasible { .. }))
}

pub fn infeasibility_certificate(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    Ok(match feasibility(a, b)? {
        Feasibility::Feasible { .. } => None,
        Feasibility::Infeasible { d } => Some(d),
    })
}

pub fn unbounded(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<bool> {
    Ok(matches!(simplex(a, b, c)?, SimplexResult::Unbounded { .. }))
}

pub fn bounded(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<bool> {
    Ok(matches!(simplex(a, b, c)?, SimplexResult::Optimal { .. }))
}

pub fn opt_value(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<Option<Rational>> {
    Ok(match simplex(a, b, c)? {
        SimplexResult::Optimal { x, .. } => Some(inner(c, &x)),
        _ => None,
    })
}

/// A feasible point with objective strictly below `bound`, when unbounded.
pub fn point_below(a: &Matrix, b: &[Rational], c: &[Rational], bound: &Rational) -> Result<Option<Vec<Rational>>> {
    Ok(match simplex(a, b, c)? {
        SimplexResult::Unbounded { x, d } => Some(point_below_bound(&x, &d, c, bound)),
        _ => None,
    })
}

/// Either an optimal primal-dual pair, or certificates for whichever of the
/// two programs is infeasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityOutcome {
    Optimal {
        x: Vec<Rational>,
        u: Vec<Rational>,
    },
    NotBothFeasible {
        /// Farkas certificate for `A x >= b`.
        primal_infeasible: Option<Vec<Rational>>,
        /// A ray `r` with `A r >= 0` and `<c, r> < 0`, which rules out any
        /// `u >= 0` with `A^T u = c`.
        dual_infeasible: Option<Vec<Rational>>,
    },
}

/// Feasibility of `A^T u = c, u >= 0`. On infeasibility returns the ray
/// `r = d_2 - d_1` from the Farkas certificate `(d_1, d_2, d_3)` of the dual
/// block system.
pub fn dual_feasibility(a: &Matrix, c: &[Rational]) -> Result<std::result::Result<Vec<Rational>, Vec<Rational>>> {
    check_len("objective", a.cols(), c.len())?;
    let n = a.cols();
    let dual = dual_system(a);
    let mut rhs = c.to_vec();
    rhs.extend(c.iter().map(|v| -v));
    rhs.extend(zeros(a.rows()));
    Ok(match feasibility(&dual, &rhs)? {
        Feasibility::Feasible { x } => Ok(x),
        Feasibility::Infeasible { d } => Err(sub(&d[n..2 * n], &d[..n])),
    })
}

pub fn strong_duality_pair(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<DualityOutcome> {
    check_dims(a, b, c)?;
    let primal_infeasible = infeasibility_certificate(a, b)?;
    let dual_infeasible = dual_feasibility(a, c)?.err();
    if primal_infeasible.is_some() || dual_infeasible.is_some() {
        return Ok(DualityOutcome::NotBothFeasible {
            primal_infeasible,
            dual_infeasible,
        });
    }
    match simplex(a, b, c)? {
        SimplexResult::Optimal { x, u } => Ok(DualityOutcome::Optimal { x, u }),
        _ => Err(Error::Internal("both programs feasible but no optimum found")),
    }
}

/// Whether `A x >= b` implies `<c, x> >= d0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Implication {
    /// `u >= 0`, `A^T u = c`, `<b, u> >= d0`.
    Witness(Vec<Rational>),
    /// `A x >= b` and `<c, x> < d0`.
    Countermodel(Vec<Rational>),
    /// `A x >= b` is empty, so the implication holds vacuously, but no `u`
    /// with `A^T u = c, u >= 0` exists. Carries the Farkas certificate.
    Vacuous(Vec<Rational>),
}

pub fn farkas_implication(a: &Matrix, b: &[Rational], c: &[Rational], d0: &Rational) -> Result<Implication> {
    check_dims(a, b, c)?;
    match simplex(a, b, c)? {
        SimplexResult::Optimal { x, u } => Ok(if &inner(c, &x) >= d0 {
            Implication::Witness(u)
        } else {
            Implication::Countermodel(x)
        }),
        SimplexResult::Unbounded { x, d } => Ok(Implication::Countermodel(point_below_bound(&x, &d, c, d0))),
        SimplexResult::Infeasible { d } => match dual_feasibility(a, c)? {
            // u0 + t d stays dual feasible and raises <b, .> by t <b, d> > 0.
            Ok(u0) => {
                let missing = d0 - inner(b, &u0);
                let t = if missing.is_positive() {
                    missing / inner(b, &d)
                } else {
                    Rational::zero()
                };
                Ok(Implication::Witness(add(&u0, &scale(&t, &d))))
            }
            Err(_) => Ok(Implication::Vacuous(d)),
        },
    }
}

/// The standard unit vectors `e_j` and `-e_j` used to probe boundedness.
pub(crate) fn coordinate_probes(n: usize) -> impl Iterator<Item = (usize, Vec<Rational>)> {
    (0..n).flat_map(move |j| {
        let e = unit(n, j);
        let neg = scale(&-Rational::one(), &e);
        [(j, e), (j, neg)]
    })
}
