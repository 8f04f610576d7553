//! Exact rational scalars and the dense linear algebra the simplex method
//! needs: products, row selection, Gauss-Jordan solves, rank and kernels.
//!
//! Vectors are plain `Vec<Rational>` / `&[Rational]`. Matrix methods panic on
//! shape mismatches (like slice indexing); the free functions at the bottom of
//! the module validate shapes and return [`Error::DimensionMismatch`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::{Error, Result};

/// Arbitrary-precision rational, always kept in canonical form.
pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().copied().map(int).collect()
}

pub fn zeros(len: usize) -> Vec<Rational> {
    vec![Rational::zero(); len]
}

pub fn unit(len: usize, k: usize) -> Vec<Rational> {
    let mut e = zeros(len);
    e[k] = Rational::one();
    e
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("floating-point literal `{0}` is not allowed; write it as a fraction")]
    Float(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit())
}

/// Parses the text syntax `[+-]digits[/digits]`, e.g. `-23` or `1/3`.
pub fn parse_rational(token: &str) -> Result<Rational, RationalParseError> {
    if token.is_empty() {
        return Err(RationalParseError::Empty);
    }
    if token.contains(['.', 'e', 'E']) && !token.contains('/') {
        let looks_float = token
            .trim_start_matches(['+', '-'])
            .bytes()
            .all(|c| c.is_ascii_digit() || matches!(c, b'.' | b'e' | b'E' | b'+' | b'-'));
        if looks_float {
            return Err(RationalParseError::Float(token.to_string()));
        }
    }
    let (sign, body) = match token.as_bytes()[0] {
        b'-' => (-1, &token[1..]),
        b'+' => (1, &token[1..]),
        _ => (1, token),
    };
    let (numer, denom) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    if !all_digits(numer) || !all_digits(denom) {
        return Err(RationalParseError::Invalid(token.to_string()));
    }
    let numer = BigInt::from_str(numer).map_err(|_| RationalParseError::Invalid(token.to_string()))?;
    let denom = BigInt::from_str(denom).map_err(|_| RationalParseError::Invalid(token.to_string()))?;
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(token.to_string()));
    }
    Ok(Rational::new(numer * sign, denom))
}

/// Dense row-major matrix over [`Rational`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let count = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row",
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: count,
            cols,
            data,
        })
    }

    /// Convenience constructor for integer matrices; panics on ragged input.
    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(cols, rows.iter().map(|r| ints(r)).collect()).expect("ragged integer matrix")
    }

    pub fn column(values: Vec<Rational>) -> Self {
        Self {
            rows: values.len(),
            cols: 1,
            data: values,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, x.len(), "matrix-vector shape mismatch");
        self.row_iter().map(|row| inner(row, x)).collect()
    }

    /// `A^T y` without materializing the transpose.
    pub fn tr_mul_vec(&self, y: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.rows, y.len(), "transposed product shape mismatch");
        let mut out = zeros(self.cols);
        for (row, yi) in self.row_iter().zip(y) {
            if yi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(row) {
                if !a.is_zero() {
                    *o += a * yi;
                }
            }
        }
        out
    }

    /// Rows `indices` in the order given (callers pass sorted sets).
    pub fn select_rows(&self, indices: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &i in indices {
            data.extend_from_slice(self.row(i));
        }
        Matrix {
            rows: indices.len(),
            cols: self.cols,
            data,
        }
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(rhs.row(i));
        }
        Matrix {
            rows: self.rows,
            cols,
            data,
        }
    }

    /// `[self; rhs]`.
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }

    /// Solves `self * X = rhs` by Gauss-Jordan elimination, pivoting on the
    /// first nonzero entry of each column.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "solve: square matrix",
                expected: self.rows,
                found: self.cols,
            });
        }
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve: right-hand side rows",
                expected: self.rows,
                found: rhs.rows,
            });
        }
        let n = self.rows;
        let mut aug = self.hstack(rhs);
        let width = aug.cols;
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !aug.get(r, col).is_zero()).ok_or(Error::Singular)?;
            if pivot_row != col {
                for j in 0..width {
                    aug.data.swap(pivot_row * width + j, col * width + j);
                }
            }
            let pivot = aug.get(col, col).recip();
            for j in col..width {
                let v = &aug.data[col * width + j] * &pivot;
                aug.data[col * width + j] = v;
            }
            let pivot_row: Vec<Rational> = aug.row(col).to_vec();
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = aug.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, pj) in pivot_row.iter().enumerate().skip(col) {
                    if !pj.is_zero() {
                        aug.data[r * width + j] -= &factor * pj;
                    }
                }
            }
        }
        let mut out = Matrix::zeros(n, rhs.cols);
        for i in 0..n {
            for j in 0..rhs.cols {
                out.data[i * rhs.cols + j] = aug.get(i, n + j).clone();
            }
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.solve(&Matrix::identity(self.rows))
    }

    pub fn rank(&self) -> usize {
        independent_rows(self).len()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let parts: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Unchecked scalar product; callers guarantee equal lengths.
pub(crate) fn inner(x: &[Rational], y: &[Rational]) -> Rational {
    debug_assert_eq!(x.len(), y.len());
    let mut acc = Rational::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += a * b;
        }
    }
    acc
}

pub(crate) fn check_len(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Result<Rational> {
    check_len("dot", x.len(), y.len())?;
    Ok(inner(x, y))
}

pub fn add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale(lambda: &Rational, x: &[Rational]) -> Vec<Rational> {
    x.iter().map(|v| lambda * v).collect()
}

pub fn is_nonneg(x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
}

/// Rows of `a` indexed by the set `indices`, taken in increasing order.
pub fn row_submx(a: &Matrix, indices: &[usize]) -> Result<Matrix> {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&i| i >= a.rows()) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            rows: a.rows(),
        });
    }
    Ok(a.select_rows(&sorted))
}

pub fn solve(m: &Matrix, rhs: &Matrix) -> Result<Matrix> {
    m.solve(rhs)
}

/// Greedy scan by increasing row index, keeping a row iff it raises the rank.
pub fn independent_rows(a: &Matrix) -> Vec<usize> {
    // Each kept row is stored reduced against the earlier ones, with its pivot column.
    let mut reduced: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut kept = Vec::new();
    for i in 0..a.rows() {
        let mut row = a.row(i).to_vec();
        for (pc, r) in &reduced {
            if row[*pc].is_zero() {
                continue;
            }
            let factor = &row[*pc] / &r[*pc];
            for (x, y) in row.iter_mut().zip(r) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        if let Some(pc) = row.iter().position(|v| !v.is_zero()) {
            reduced.push((pc, row));
            kept.push(i);
        }
    }
    kept
}

/// Reduced row echelon form; returns the matrix and its pivot columns.
fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, col).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = m.get(r, col).recip();
        for j in col..cols {
            let v = &m.data[r * cols + j] * &inv;
            m.data[r * cols + j] = v;
        }
        let prow = m.row(r).to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, col).clone();
            if factor.is_zero() {
                continue;
            }
            for (j, pj) in prow.iter().enumerate().skip(col) {
                if !pj.is_zero() {
                    m.data[i * cols + j] -= &factor * pj;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (m, pivots)
}

/// A nonzero `d` with `a * d = 0`, or `None` when `a` has full column rank.
///
/// The vector sets the first free column to 1 and solves for the pivot
/// variables, so the answer is deterministic.
pub fn kernel_vector(a: &Matrix) -> Option<Vec<Rational>> {
    let (r, pivots) = rref(a);
    let free = (0..a.cols()).find(|j| !pivots.contains(j))?;
    let mut d = zeros(a.cols());
    d[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        d[pc] = -r.get(row, free).clone();
    }
    Some(d)
}
