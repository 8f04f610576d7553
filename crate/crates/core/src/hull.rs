//! Convex hulls of finite point sets, separation, vertex enumeration and the
//! Minkowski check `P(A, b) = conv(vertices)` for bounded polyhedra.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::basis::{basis_from_rows, point_of_basis};
use crate::polyhedron::contains;
use crate::ratlin::{check_len, sub, Matrix, Rational};
use crate::simplex::{bounded, coordinate_probes, feasibility, feasible, Feasibility};
use crate::{Error, Result};

/// Polyhedron over `lambda in R^p`:
/// `[V; -V; e^T; -e^T; I_p] lambda >= (x, -x, 1, -1, 0)`.
pub fn membership_system(points: &Matrix, x: &[Rational]) -> Result<(Matrix, Vec<Rational>)> {
    check_len("hull membership: point", points.rows(), x.len())?;
    let p = points.cols();
    let ones = Matrix::from_rows(p, vec![vec![Rational::one(); p]])?;
    let a = points
        .vstack(&points.neg())
        .vstack(&ones)
        .vstack(&ones.neg())
        .vstack(&Matrix::identity(p));
    let mut rhs = x.to_vec();
    rhs.extend(x.iter().map(|v| -v));
    rhs.push(Rational::one());
    rhs.push(-Rational::one());
    rhs.extend(std::iter::repeat_n(Rational::zero(), p));
    Ok((a, rhs))
}

/// Whether `x` is a convex combination of the columns of `points`.
pub fn is_in_convex_hull(points: &Matrix, x: &[Rational]) -> Result<bool> {
    check_len("hull membership: point", points.rows(), x.len())?;
    if points.cols() == 0 {
        return Ok(false);
    }
    let (a, rhs) = membership_system(points, x)?;
    feasible(&a, &rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separation {
    InHull,
    /// `cvec` with `<cvec, v> > <cvec, x>` for every column `v`.
    Separated(Vec<Rational>),
}

/// Reads a separating normal off the Farkas certificate
/// `(u+, u-, s+, s-, w)` of the membership system: `cvec = u- - u+`.
pub fn separation_hyperplane(points: &Matrix, x: &[Rational]) -> Result<Separation> {
    let n = points.rows();
    let (a, rhs) = membership_system(points, x)?;
    Ok(match feasibility(&a, &rhs)? {
        Feasibility::Feasible { .. } => Separation::InHull,
        Feasibility::Infeasible { d } => Separation::Separated(sub(&d[n..2 * n], &d[..n])),
    })
}

/// Basic points of the feasible bases, in lexicographic order of the index
/// sets. Degenerate vertices appear once per basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertices {
    pub bases: Vec<Vec<usize>>,
    /// `n x q`, one column per feasible basis.
    pub points: Matrix,
}

pub fn enumerate_vertices(a: &Matrix, b: &[Rational]) -> Result<Vertices> {
    check_len("right-hand side", a.rows(), b.len())?;
    let n = a.cols();
    let mut bases = Vec::new();
    let mut columns = Vec::new();
    for rows in (0..a.rows()).combinations(n) {
        let Ok(basis) = basis_from_rows(a, &rows) else { continue };
        let x = point_of_basis(b, &basis);
        if contains(a, b, &x)? {
            bases.push(rows);
            columns.push(x);
        }
    }
    let points = Matrix::from_rows(n, columns)?.transpose();
    Ok(Vertices { bases, points })
}

/// Boundedness by coordinate probes: `min` and `max` of every coordinate are
/// finite. An empty polyhedron counts as bounded.
pub fn check_bounded(a: &Matrix, b: &[Rational]) -> Result<()> {
    if !feasible(a, b)? {
        return Ok(());
    }
    for (coordinate, probe) in coordinate_probes(a.cols()) {
        if !bounded(a, b, &probe)? {
            return Err(Error::NotBounded { coordinate });
        }
    }
    Ok(())
}

/// For each sample `x`, `A x >= b` holds iff `x` lies in the hull of the
/// enumerated vertices. Fails with [`Error::NotBounded`] on unbounded input.
pub fn minkowski_check(a: &Matrix, b: &[Rational], samples: &[Vec<Rational>]) -> Result<bool> {
    check_bounded(a, b)?;
    let vertices = enumerate_vertices(a, b)?;
    for x in samples {
        if contains(a, b, x)? != is_in_convex_hull(&vertices.points, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}
