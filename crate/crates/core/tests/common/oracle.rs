//! Brute-force reference implementations. Nothing here calls the solver or
//! the certificate checkers; linear algebra is redone on plain vectors.

use itertools::Itertools;
use lexsimplex::{Matrix, Rational};
use num_traits::{Signed, Zero};

type Row = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForce {
    Optimum(Rational),
    NoFeasibleBasis,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExceeded(pub u128);

pub const BUDGET: u128 = 1_000_000;

pub fn binomial(m: usize, n: usize) -> u128 {
    if n > m {
        return 0;
    }
    (0..n.min(m - n) as u128).fold(1u128, |acc, i| acc * (m as u128 - i) / (i + 1))
}

fn rows_of(a: &Matrix) -> Vec<Row> {
    (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| a.get(i, j).clone()).collect())
        .collect()
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(p, q)| p * q).sum()
}

/// Solves the square system `M X = R` for every column of `R`, or `None`
/// when `M` is singular.
pub fn solve_square(m: &[Row], rhs: &[Row]) -> Option<Vec<Row>> {
    let n = m.len();
    let mut aug: Vec<Row> = m
        .iter()
        .zip(rhs)
        .map(|(r, s)| r.iter().chain(s).cloned().collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col].clone();
        for v in aug[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (target, p) in aug[r].iter_mut().zip(&pivot_row).skip(col) {
                    *target -= &f * p;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn basic_point(a: &[Row], b: &[Rational], rows: &[usize]) -> Option<Row> {
    let m: Vec<Row> = rows.iter().map(|&i| a[i].clone()).collect();
    let rhs: Vec<Row> = rows.iter().map(|&i| vec![b[i].clone()]).collect();
    solve_square(&m, &rhs).map(|x| x.into_iter().map(|mut r| r.remove(0)).collect())
}

pub fn satisfies(a: &Matrix, b: &[Rational], x: &[Rational]) -> bool {
    rows_of(a).iter().zip(b).all(|(row, bi)| &dot(row, x) >= bi)
}

/// Basic points of all feasible bases, in lexicographic order of the bases.
pub fn feasible_basic_points(a: &Matrix, b: &[Rational]) -> Result<Vec<(Vec<usize>, Row)>, BudgetExceeded> {
    let budget = binomial(a.rows(), a.cols());
    if budget > BUDGET {
        return Err(BudgetExceeded(budget));
    }
    let rows = rows_of(a);
    Ok((0..a.rows())
        .combinations(a.cols())
        .filter_map(|set| basic_point(&rows, b, &set).map(|x| (set, x)))
        .filter(|(_, x)| satisfies(a, b, x))
        .collect())
}

/// Minimum of `<c, x>` over the basic points of all feasible bases.
pub fn brute_force_optimum(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<BruteForce, BudgetExceeded> {
    Ok(feasible_basic_points(a, b)?
        .iter()
        .map(|(_, x)| dot(c, x))
        .min()
        .map_or(BruteForce::NoFeasibleBasis, BruteForce::Optimum))
}

/// Perturbed basic points `A_I^{-1} [b | -I]_I` are pairwise distinct over
/// all bases.
pub fn all_bases_distinct_pert_points(a: &Matrix, b: &[Rational]) -> bool {
    let rows = rows_of(a);
    let m = a.rows();
    let mut seen: Vec<Vec<Row>> = Vec::new();
    for set in (0..m).combinations(a.cols()) {
        let basis: Vec<Row> = set.iter().map(|&i| rows[i].clone()).collect();
        let rhs: Vec<Row> = set
            .iter()
            .map(|&i| {
                let mut r = vec![b[i].clone()];
                r.extend((0..m).map(|t| {
                    if t == i {
                        -Rational::from_integer(1.into())
                    } else {
                        Rational::zero()
                    }
                }));
                r
            })
            .collect();
        if let Some(x) = solve_square(&basis, &rhs) {
            if seen.contains(&x) {
                return false;
            }
            seen.push(x);
        }
    }
    true
}

/// `A^T u`, computed directly.
pub fn transpose_apply(a: &Matrix, u: &[Rational]) -> Row {
    (0..a.cols())
        .map(|j| (0..a.rows()).map(|i| a.get(i, j) * &u[i]).sum())
        .collect()
}

pub fn farkas_holds(a: &Matrix, b: &[Rational], d: &[Rational]) -> bool {
    d.len() == a.rows()
        && d.iter().all(|v| !v.is_negative())
        && transpose_apply(a, d).iter().all(Zero::is_zero)
        && dot(b, d).is_positive()
}

pub fn ray_holds(a: &Matrix, c: &[Rational], x: &[Rational], b: &[Rational], d: &[Rational]) -> bool {
    x.len() == a.cols()
        && d.len() == a.cols()
        && satisfies(a, b, x)
        && satisfies(a, &vec![Rational::zero(); a.rows()], d)
        && dot(c, d).is_negative()
}

pub fn optimality_holds(a: &Matrix, b: &[Rational], c: &[Rational], x: &[Rational], u: &[Rational]) -> bool {
    x.len() == a.cols()
        && u.len() == a.rows()
        && satisfies(a, b, x)
        && u.iter().all(|v| !v.is_negative())
        && transpose_apply(a, u) == c
        && dot(c, x) == dot(b, u)
}

/// The `x = v - w` reformulation `[[A, -A], [I, 0], [0, I]]`, built here
/// rather than taken from the library.
pub fn split_program(a: &Matrix, b: &[Rational], c: &[Rational]) -> (Matrix, Row, Row) {
    let (m, n) = (a.rows(), a.cols());
    let mut rows = Vec::with_capacity(m + 2 * n);
    for i in 0..m {
        let row: Row = (0..n).map(|j| a.get(i, j).clone()).collect();
        rows.push(row.iter().cloned().chain(row.iter().map(|v| -v)).collect());
    }
    for k in 0..2 * n {
        rows.push(
            (0..2 * n)
                .map(|j| Rational::from_integer(((j == k) as i64).into()))
                .collect(),
        );
    }
    let mut b2 = b.to_vec();
    b2.extend(std::iter::repeat_n(Rational::zero(), 2 * n));
    let c2 = c.iter().cloned().chain(c.iter().map(|v| -v)).collect();
    (Matrix::from_rows(2 * n, rows).unwrap(), b2, c2)
}

/// `{u >= 0 : A^T u = c}` as `[A^T; -A^T; I] u >= (c, -c, 0)`.
pub fn dual_program(a: &Matrix, c: &[Rational]) -> (Matrix, Row) {
    let (m, n) = (a.rows(), a.cols());
    let mut rows = Vec::with_capacity(2 * n + m);
    for sign in [1i64, -1] {
        for j in 0..n {
            rows.push(
                (0..m)
                    .map(|i| a.get(i, j) * Rational::from_integer(sign.into()))
                    .collect(),
            );
        }
    }
    for k in 0..m {
        rows.push(
            (0..m)
                .map(|i| Rational::from_integer(((i == k) as i64).into()))
                .collect(),
        );
    }
    let mut rhs = c.to_vec();
    rhs.extend(c.iter().map(|v| -v));
    rhs.extend(std::iter::repeat_n(Rational::zero(), m));
    (Matrix::from_rows(m, rows).unwrap(), rhs)
}

/// Primal nonemptiness through the split program, whose polyhedron is
/// pointed and hence has a basic feasible point whenever it is nonempty.
pub fn primal_nonempty(a: &Matrix, b: &[Rational]) -> bool {
    let c = vec![Rational::zero(); a.cols()];
    let (a2, b2, _) = split_program(a, b, &c);
    !feasible_basic_points(&a2, &b2).unwrap().is_empty()
}

pub fn dual_nonempty(a: &Matrix, c: &[Rational]) -> bool {
    let (d, rhs) = dual_program(a, c);
    !feasible_basic_points(&d, &rhs).unwrap().is_empty()
}
