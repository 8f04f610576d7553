//! Prebases, bases and feasible bases, together with the quantities the
//! simplex method reads off a basis: basic point, reduced costs, extended
//! reduced costs and direction vectors.
//!
//! Row indices of a basis are kept sorted; "position `k`" always refers to the
//! `k`-th smallest index.

use num_traits::{One, Signed, Zero};

use crate::polyhedron::contains;
use crate::ratlin::{add, inner, is_nonneg, scale, zeros, Matrix, Rational};
use crate::{Error, Result};

/// `n` distinct row indices out of `0..m`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreBasis(Vec<usize>);

impl PreBasis {
    pub fn new(mut indices: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPrebasis(format!("duplicate index in {indices:?}")));
        }
        if indices.len() != n {
            return Err(Error::InvalidPrebasis(format!(
                "{} indices given, {n} required",
                indices.len()
            )));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= m) {
            return Err(Error::IndexOutOfRange { index: bad, rows: m });
        }
        Ok(Self(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

/// A prebasis whose submatrix `A_I` is invertible; the inverse is cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    indices: Vec<usize>,
    inverse: Matrix,
}

impl Basis {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// `(A_I)^{-1}`.
    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn position(&self, row: usize) -> Option<usize> {
        self.indices.binary_search(&row).ok()
    }

    pub fn contains_row(&self, row: usize) -> bool {
        self.position(row).is_some()
    }
}

pub fn make_basis(a: &Matrix, pre: &PreBasis) -> Result<Basis> {
    let sub = a.select_rows(pre.indices());
    match sub.inverse() {
        Ok(inverse) => Ok(Basis {
            indices: pre.indices().to_vec(),
            inverse,
        }),
        Err(Error::Singular) => Err(Error::NotInvertible(pre.indices().to_vec())),
        Err(e) => Err(e),
    }
}

/// Shorthand for `make_basis(a, &PreBasis::new(indices, m, n)?)`.
pub fn basis_from_rows(a: &Matrix, indices: &[usize]) -> Result<Basis> {
    let pre = PreBasis::new(indices.to_vec(), a.rows(), a.cols())?;
    make_basis(a, &pre)
}

/// `x^I = (A_I)^{-1} b_I`.
pub fn point_of_basis(b: &[Rational], basis: &Basis) -> Vec<Rational> {
    let b_sub: Vec<Rational> = basis.indices.iter().map(|&i| b[i].clone()).collect();
    basis.inverse.mul_vec(&b_sub)
}

/// `u = (A_I)^{-T} c`, indexed by basis position.
pub fn reduced_cost(c: &[Rational], basis: &Basis) -> Vec<Rational> {
    basis.inverse.tr_mul_vec(c)
}

/// The reduced cost scattered into `R^m`, zero off the basis.
pub fn ext_reduced_cost(m: usize, c: &[Rational], basis: &Basis) -> Vec<Rational> {
    scatter(m, basis, &reduced_cost(c, basis))
}

pub fn scatter(m: usize, basis: &Basis, values: &[Rational]) -> Vec<Rational> {
    let mut out = zeros(m);
    for (&i, v) in basis.indices.iter().zip(values) {
        out[i] = v.clone();
    }
    out
}

pub fn gather(basis: &Basis, values: &[Rational]) -> Vec<Rational> {
    basis.indices.iter().map(|&i| values[i].clone()).collect()
}

/// `d = (A_I)^{-1} e_k`: moving along `d` keeps every basis row but the
/// `k`-th tight and increases the `k`-th slack at unit rate.
pub fn direction(basis: &Basis, k: usize) -> Vec<Rational> {
    basis.inverse.col(k)
}

/// A basis whose basic point satisfies `A x >= b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleBasis(Basis);

impl FeasibleBasis {
    pub fn new(a: &Matrix, b: &[Rational], basis: Basis) -> Result<Self> {
        if contains(a, b, &point_of_basis(b, &basis))? {
            Ok(Self(basis))
        } else {
            Err(Error::NotFeasible(basis.indices))
        }
    }

    pub(crate) fn new_unchecked(basis: Basis) -> Self {
        Self(basis)
    }

    pub fn basis(&self) -> &Basis {
        &self.0
    }

    pub fn into_basis(self) -> Basis {
        self.0
    }

    pub fn indices(&self) -> &[usize] {
        self.0.indices()
    }
}

/// Nonnegative reduced costs certify that the basic point is optimal.
pub fn check_optimal_basis(c: &[Rational], basis: &FeasibleBasis) -> bool {
    is_nonneg(&reduced_cost(c, basis.basis()))
}

/// Given a feasible `x` and a feasible direction `d` with `<c, d> < 0`,
/// returns `x + lambda d` whose objective is strictly below `bound`, with
/// `lambda = max(0, (<c,x> - bound) / -<c,d>) + 1`.
pub fn point_below_bound(x: &[Rational], d: &[Rational], c: &[Rational], bound: &Rational) -> Vec<Rational> {
    let slope = inner(c, d);
    assert!(slope.is_negative(), "ray does not decrease the objective");
    let gap = (inner(c, x) - bound) / -slope;
    let lambda = if gap.is_positive() { gap } else { Rational::zero() } + Rational::one();
    add(x, &scale(&lambda, d))
}
