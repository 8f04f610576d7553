//! Symbolic perturbation and the lexicographic pivoting rule.
//!
//! The right-hand side `b` is replaced by `b_i - eps^(1 + s(i))` for a
//! permutation `s` and an infinitesimal `eps > 0`. A perturbed scalar
//! `v_0 + sum_t v_t eps^t` is stored as the row `(v_0, v_1, ..., v_m)` and
//! compared lexicographically. Under this perturbation no two bases share a
//! basic point, so every pivot strictly decreases the perturbed objective.

use std::cmp::Ordering;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::basis::{direction, make_basis, point_of_basis, reduced_cost, Basis, PreBasis};
use crate::ratlin::{check_len, inner, Matrix, Rational};
use crate::{Error, Result};

/// The `m x (1+m)` matrix `[b | -P_s]`, stored as `b` and `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerturbedRhs {
    base: Vec<Rational>,
    perm: Vec<usize>,
}

impl PerturbedRhs {
    /// `perm[i]` is `s(i)`; row `i` then encodes `b_i - eps^(1 + perm[i])`.
    pub fn new(base: Vec<Rational>, perm: Vec<usize>) -> Result<Self> {
        let m = base.len();
        check_len("perturbation permutation", m, perm.len())?;
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(m));
            }
        }
        Ok(Self { base, perm })
    }

    pub fn identity(base: Vec<Rational>) -> Self {
        let perm = (0..base.len()).collect();
        Self { base, perm }
    }

    pub fn m(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn row(&self, i: usize) -> LexValue {
        let mut v = vec![Rational::zero(); 1 + self.m()];
        v[0] = self.base[i].clone();
        v[1 + self.perm[i]] = -Rational::one();
        LexValue(v)
    }

    pub fn rows_of(&self, indices: &[usize]) -> Matrix {
        let width = 1 + self.m();
        let rows = indices.iter().map(|&i| self.row(i).0).collect();
        Matrix::from_rows(width, rows).expect("perturbed rows have uniform width")
    }

    pub fn matrix(&self) -> Matrix {
        self.rows_of(&(0..self.m()).collect::<Vec<_>>())
    }
}

/// A perturbed scalar `v_0 + sum_t v_t eps^t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexValue(pub Vec<Rational>);

impl LexValue {
    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// Lexicographic order; values of different lengths are incomparable.
impl PartialOrd for LexValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.0.len() == other.0.len()).then(|| self.0.cmp(&other.0))
    }
}

pub fn lex_compare(x: &LexValue, y: &LexValue) -> Result<Ordering> {
    check_len("lex compare", x.0.len(), y.0.len())?;
    Ok(x.0.cmp(&y.0))
}

pub fn lex_min_seq(values: &[LexValue]) -> Result<LexValue> {
    let first = values.first().ok_or(Error::EmptySequence)?;
    let mut best = first;
    for v in &values[1..] {
        if lex_compare(v, best)? == Ordering::Less {
            best = v;
        }
    }
    Ok(best.clone())
}

/// `X = (A_I)^{-1} [b | -P_s]_I`, an `n x (1+m)` matrix whose column 0 is
/// the ordinary basic point.
pub fn point_of_basis_pert(bp: &PerturbedRhs, basis: &Basis) -> Matrix {
    basis.inverse().mul(&bp.rows_of(basis.indices()))
}

fn row_times(row: &[Rational], x: &Matrix) -> LexValue {
    LexValue(Matrix::new(1, row.len(), row.to_vec()).expect("row").mul(x).into_vec())
}

pub fn is_lex_feasible(a: &Matrix, bp: &PerturbedRhs, basis: &Basis) -> bool {
    let x = point_of_basis_pert(bp, basis);
    (0..a.rows()).all(|i| row_times(a.row(i), &x) >= bp.row(i))
}

/// `((A d)_j)^{-1} (b_pert_j - A_j X)`.
pub fn lex_gap(a: &Matrix, bp: &PerturbedRhs, basis: &Basis, d: &[Rational], j: usize) -> Result<LexValue> {
    check_len("lex gap direction", a.cols(), d.len())?;
    let slope = inner(a.row(j), d);
    if slope.is_zero() {
        return Err(Error::ZeroSlope(j));
    }
    let scale = slope.recip();
    let x = point_of_basis_pert(bp, basis);
    let ax = row_times(a.row(j), &x);
    let rhs = bp.row(j);
    Ok(LexValue(
        rhs.0.iter().zip(&ax.0).map(|(r, v)| (r - v) * &scale).collect(),
    ))
}

/// `c^T X`, computed from the reduced costs: column 0 is `<c, x^I>` and the
/// column of each basis row `I[p]` holds `-u_p`.
pub fn perturbed_objective(bp: &PerturbedRhs, c: &[Rational], basis: &Basis) -> LexValue {
    let u = reduced_cost(c, basis);
    let mut v = vec![Rational::zero(); 1 + bp.m()];
    v[0] = inner(c, &point_of_basis(bp.base(), basis));
    for (p, &row) in basis.indices().iter().enumerate() {
        v[1 + bp.perm()[row]] = -&u[p];
    }
    LexValue(v)
}

/// A basis that stays feasible for the perturbed right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexFeasibleBasis(Basis);

impl LexFeasibleBasis {
    pub fn new(a: &Matrix, bp: &PerturbedRhs, basis: Basis) -> Result<Self> {
        if is_lex_feasible(a, bp, &basis) {
            Ok(Self(basis))
        } else {
            Err(Error::NotFeasible(basis.indices().to_vec()))
        }
    }

    pub fn basis(&self) -> &Basis {
        &self.0
    }

    pub fn into_basis(self) -> Basis {
        self.0
    }
}

/// The entering row for leaving direction `d`: the smallest row index among
/// the rows with `(A d)_j < 0` whose lex gap is lexicographically minimal.
///
/// Gaps are refined one perturbation order at a time, using
/// `W = A (A_I)^{-1}` so that only the candidates still tied at the current
/// order are ever evaluated. The result equals the definition in terms of
/// [`lex_gap`] and [`lex_min_seq`].
pub fn entering_row(a: &Matrix, bp: &PerturbedRhs, basis: &Basis, d: &[Rational]) -> Option<usize> {
    let slopes = a.mul_vec(d);
    let mut tied: Vec<usize> = (0..a.rows()).filter(|&j| slopes[j].is_negative()).collect();
    if tied.is_empty() {
        return None;
    }
    let x = point_of_basis(bp.base(), basis);
    let w = a.mul(basis.inverse());
    // Row whose perturbation sits in column `1 + t`.
    let mut owner = vec![0; bp.m()];
    for (row, &t) in bp.perm().iter().enumerate() {
        owner[t] = row;
    }
    let gap = |j: usize, col: usize| -> Rational {
        let numer = if col == 0 {
            &bp.base()[j] - inner(a.row(j), &x)
        } else {
            let r = owner[col - 1];
            let rhs = if r == j { -Rational::one() } else { Rational::zero() };
            let ax = match basis.position(r) {
                Some(p) => -w.get(j, p).clone(),
                None => Rational::zero(),
            };
            rhs - ax
        };
        numer / &slopes[j]
    };
    for col in 0..=bp.m() {
        if tied.len() == 1 {
            break;
        }
        let values: Vec<Rational> = tied.iter().map(|&j| gap(j, col)).collect();
        let min = values.iter().min().expect("nonempty").clone();
        tied = tied
            .into_iter()
            .zip(values)
            .filter_map(|(j, v)| (v == min).then_some(j))
            .collect();
    }
    debug_assert_eq!(tied.len(), 1, "perturbed gaps must be distinct");
    tied.first().copied()
}

/// One pivot of the lexicographic rule, leaving basis position `k`.
///
/// Requires `u_k < 0` and that `direction(I, k)` is not a feasible direction.
pub fn lex_pivot(
    a: &Matrix,
    bp: &PerturbedRhs,
    c: &[Rational],
    current: &LexFeasibleBasis,
    k: usize,
) -> Result<LexFeasibleBasis> {
    let basis = current.basis();
    assert!(
        reduced_cost(c, basis)[k].is_negative(),
        "leaving position must have a negative reduced cost"
    );
    let d = direction(basis, k);
    let entering = entering_row(a, bp, basis, &d).expect("leaving direction must not be a feasible direction");
    let leaving = basis.indices()[k];
    let next: Vec<usize> = basis
        .indices()
        .iter()
        .copied()
        .filter(|&i| i != leaving)
        .chain(std::iter::once(entering))
        .sorted_unstable()
        .collect();
    let pre = PreBasis::new(next, a.rows(), a.cols())?;
    let next = make_basis(a, &pre).map_err(|_| Error::Internal("lex pivot produced a singular basis"))?;
    debug_assert!(is_lex_feasible(a, bp, &next));
    debug_assert!(perturbed_objective(bp, c, &next) < perturbed_objective(bp, c, basis));
    Ok(LexFeasibleBasis(next))
}
