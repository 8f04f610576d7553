//! Phase I for pointed polyhedra and the resulting complete solver.
//!
//! An arbitrary basis `bas0` of `A` is made feasible for an extended program
//! over `(x, y)`: every row `i in K` violated at `x^{bas0}` is relaxed to
//! `A_i x <= b_i + y_k` with `y >= 0`, and `<e, y - A_K x>` is minimized.
//! The extended optimum equals `-<e, b_K>` exactly when `A x >= b` is
//! feasible; otherwise its dual solution folds into a Farkas certificate.

use num_traits::{One, Signed, Zero};

use crate::basis::{basis_from_rows, direction, ext_reduced_cost, point_of_basis, Basis, FeasibleBasis};
use crate::phase2::{phase2, Phase2Result};
use crate::polyhedron::contains;
use crate::ratlin::{add, independent_rows, inner, kernel_vector, scale, Matrix, Rational};
use crate::simplex::SimplexResult;
use crate::{Error, Result};

/// The extended program solved by Phase I.
#[derive(Debug, Clone)]
pub struct Phase1Problem {
    /// Rows violated by the start basic point, in increasing order.
    pub violated: Vec<usize>,
    pub a_ext: Matrix,
    pub b_ext: Vec<Rational>,
    pub c_ext: Vec<Rational>,
    /// Lower bound `<e, -b_K>` on the extended objective.
    pub m_ext: Rational,
    pub bas0_ext: FeasibleBasis,
    m: usize,
    n: usize,
}

impl Phase1Problem {
    pub fn p(&self) -> usize {
        self.violated.len()
    }

    /// `<c_ext, z> >= M_ext`, which holds for every feasible `z`.
    pub fn cext_lower_bound_check(&self, z: &[Rational]) -> bool {
        inner(&self.c_ext, z) >= self.m_ext
    }

    pub fn dual_from_ext(&self, u: &[Rational]) -> Vec<Rational> {
        dual_from_ext(&self.violated, self.m, u)
    }

    /// The `x` part of an extended point.
    pub fn upper<'a>(&self, z: &'a [Rational]) -> &'a [Rational] {
        &z[..self.n]
    }
}

pub fn build_phase1(a: &Matrix, b: &[Rational], bas0: &Basis) -> Result<Phase1Problem> {
    let (m, n) = (a.rows(), a.cols());
    let x0 = point_of_basis(b, bas0);
    let slack = a.mul_vec(&x0);
    let violated: Vec<usize> = (0..m).filter(|&i| slack[i] < b[i]).collect();
    let p = violated.len();

    let mut slot = vec![None; m];
    for (k, &i) in violated.iter().enumerate() {
        slot[i] = Some(k);
    }
    let mut rows = Vec::with_capacity(m + p);
    let mut b_ext = Vec::with_capacity(m + p);
    for i in 0..m {
        let mut row = vec![Rational::zero(); n + p];
        match slot[i] {
            Some(k) => {
                for (r, v) in row.iter_mut().zip(a.row(i)) {
                    *r = -v;
                }
                row[n + k] = Rational::one();
                b_ext.push(-&b[i]);
            }
            None => {
                row[..n].clone_from_slice(a.row(i));
                b_ext.push(b[i].clone());
            }
        }
        rows.push(row);
    }
    for k in 0..p {
        let mut row = vec![Rational::zero(); n + p];
        row[n + k] = Rational::one();
        rows.push(row);
        b_ext.push(Rational::zero());
    }
    let a_ext = Matrix::from_rows(n + p, rows)?;

    let mut c_ext = vec![Rational::zero(); n + p];
    for &i in &violated {
        for (cj, v) in c_ext.iter_mut().zip(a.row(i)) {
            *cj -= v;
        }
    }
    for cj in &mut c_ext[n..] {
        *cj = Rational::one();
    }
    let m_ext = violated.iter().map(|&i| -&b[i]).sum();

    let ext_rows: Vec<usize> = bas0.indices().iter().copied().chain(m..m + p).collect();
    let bas0_ext = FeasibleBasis::new(&a_ext, &b_ext, basis_from_rows(&a_ext, &ext_rows)?)
        .map_err(|_| Error::Internal("extended start basis is not feasible"))?;

    Ok(Phase1Problem {
        violated,
        a_ext,
        b_ext,
        c_ext,
        m_ext,
        bas0_ext,
        m,
        n,
    })
}

/// Entry `i` is `1 - u_i` for violated rows and `u_i` otherwise.
pub fn dual_from_ext(violated: &[usize], m: usize, u: &[Rational]) -> Vec<Rational> {
    (0..m)
        .map(|i| {
            if violated.binary_search(&i).is_ok() {
                Rational::one() - &u[i]
            } else {
                u[i].clone()
            }
        })
        .collect()
}

/// Result of moving a feasible point to a basic point.
#[derive(Debug, Clone)]
pub struct Purification {
    pub basis: FeasibleBasis,
    pub moves: usize,
    /// Rank of the active row set before each move and at the end.
    pub active_ranks: Vec<usize>,
}

/// Moves `x` along kernel directions of its active rows, never leaving the
/// polyhedron, until `n` independent rows are tight.
pub fn purify(a: &Matrix, b: &[Rational], x: &[Rational]) -> Result<Purification> {
    let n = a.cols();
    let rank = a.rank();
    if rank < n {
        return Err(Error::NotPointed { rank, cols: n });
    }
    if !contains(a, b, x)? {
        return Err(Error::Internal("purification needs a feasible point"));
    }
    let mut x = x.to_vec();
    let mut moves = 0;
    let mut active_ranks = Vec::new();
    loop {
        let ax = a.mul_vec(&x);
        let active: Vec<usize> = (0..a.rows()).filter(|&j| ax[j] == b[j]).collect();
        let sub = a.select_rows(&active);
        let independent = independent_rows(&sub);
        active_ranks.push(independent.len());
        if independent.len() == n {
            let rows: Vec<usize> = independent.iter().map(|&k| active[k]).collect();
            let basis = FeasibleBasis::new(a, b, basis_from_rows(a, &rows)?)?;
            return Ok(Purification {
                basis,
                moves,
                active_ranks,
            });
        }
        let mut d = kernel_vector(&sub).ok_or(Error::Internal("active rows have full rank"))?;
        let mut slopes = a.mul_vec(&d);
        if slopes.iter().all(|s| !s.is_negative()) {
            d = scale(&-Rational::one(), &d);
            slopes = slopes.iter().map(|s| -s).collect();
        }
        let step = (0..a.rows())
            .filter(|&j| slopes[j].is_negative())
            .map(|j| (&b[j] - &ax[j]) / &slopes[j])
            .min()
            .ok_or(Error::Internal("kernel direction annihilated by a pointed matrix"))?;
        x = add(&x, &scale(&step, &d));
        moves += 1;
    }
}

pub fn extract_feasible_basis(a: &Matrix, b: &[Rational], x: &[Rational]) -> Result<FeasibleBasis> {
    purify(a, b, x).map(|p| p.basis)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Phase1Outcome {
    Feasible(FeasibleBasis),
    /// Farkas certificate: `d >= 0`, `A^T d = 0`, `<b, d> > 0`.
    Infeasible(Vec<Rational>),
}

/// Optimal basis of the extended program.
pub fn solve_extended(problem: &Phase1Problem) -> Result<FeasibleBasis> {
    match phase2(&problem.a_ext, &problem.b_ext, &problem.c_ext, &problem.bas0_ext)? {
        Phase2Result::Optimal(basis) => Ok(basis),
        // The extended objective is bounded below by M_ext.
        Phase2Result::Unbounded { .. } => Err(Error::Internal("phase I program reported unbounded")),
    }
}

/// Finds a feasible basis of a pointed polyhedron or a Farkas certificate.
pub fn phase1(a: &Matrix, b: &[Rational]) -> Result<Phase1Outcome> {
    let n = a.cols();
    let rows = independent_rows(a);
    if rows.len() < n {
        return Err(Error::NotPointed {
            rank: rows.len(),
            cols: n,
        });
    }
    let bas0 = basis_from_rows(a, &rows)?;
    let problem = build_phase1(a, b, &bas0)?;
    if problem.violated.is_empty() {
        return Ok(Phase1Outcome::Feasible(FeasibleBasis::new_unchecked(bas0)));
    }
    let opt = solve_extended(&problem)?;
    let z = point_of_basis(&problem.b_ext, opt.basis());
    if inner(&problem.c_ext, &z) > problem.m_ext {
        let u = ext_reduced_cost(problem.a_ext.rows(), &problem.c_ext, opt.basis());
        Ok(Phase1Outcome::Infeasible(problem.dual_from_ext(&u)))
    } else {
        extract_feasible_basis(a, b, problem.upper(&z)).map(Phase1Outcome::Feasible)
    }
}

/// Solves `minimize <c, x> s.t. A x >= b` when `rank(A) = n`.
pub fn pointed_simplex(a: &Matrix, b: &[Rational], c: &[Rational]) -> Result<SimplexResult> {
    let start = match phase1(a, b)? {
        Phase1Outcome::Infeasible(d) => return Ok(SimplexResult::Infeasible { d }),
        Phase1Outcome::Feasible(basis) => basis,
    };
    Ok(match phase2(a, b, c, &start)? {
        Phase2Result::Optimal(basis) => SimplexResult::Optimal {
            x: point_of_basis(b, basis.basis()),
            u: ext_reduced_cost(a.rows(), c, basis.basis()),
        },
        Phase2Result::Unbounded { basis, k } => SimplexResult::Unbounded {
            x: point_of_basis(b, basis.basis()),
            d: direction(basis.basis(), k),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{dual_contains, is_dual_feasible_dir, is_feasible_dir};
    use crate::ratlin::{frac, int, ints};
    use itertools::Itertools;

    fn pentagon() -> (Matrix, Vec<Rational>, Vec<Rational>) {
        (
            Matrix::from_i64(2, &[&[1, 1], &[-1, -3], &[4, -1], &[-2, 1], &[0, 1]]),
            ints(&[4, -23, 1, -11, 1]),
            ints(&[3, 1]),
        )
    }

    fn e2() -> (Matrix, Vec<Rational>) {
        (Matrix::from_i64(1, &[&[1], &[-1]]), ints(&[1, 0]))
    }

    #[test]
    fn phase1_for_feasible_start() {
        let (a, b, _) = pentagon();
        let bas0 = basis_from_rows(&a, &[1, 2]).unwrap();
        assert_eq!(point_of_basis(&b, &bas0), ints(&[2, 7]));
        let problem = build_phase1(&a, &b, &bas0).unwrap();
        assert_eq!(problem.p(), 0);
        assert_eq!(problem.a_ext, a);
        assert_eq!(problem.b_ext, b);
        assert_eq!(problem.m_ext, int(0));
        assert!(problem.cext_lower_bound_check(&ints(&[100, -3])));
    }

    #[test]
    fn phase1_for_infeasible_start() {
        let (a, b, _) = pentagon();
        let bas0 = basis_from_rows(&a, &[0, 1]).unwrap();
        let x0 = point_of_basis(&b, &bas0);
        assert_eq!(x0, vec![frac(-11, 2), frac(19, 2)]);
        let problem = build_phase1(&a, &b, &bas0).unwrap();
        // Row 2: -22 - 19/2 < 1; row 3: 11 + 19/2 >= -11; row 4: 19/2 >= 1.
        assert_eq!(problem.violated, vec![2]);
        assert_eq!(problem.a_ext.row(2), &[int(-4), int(1), int(1)][..]);
        assert_eq!(problem.a_ext.row(5), &[int(0), int(0), int(1)][..]);
        assert_eq!(problem.b_ext[2], int(-1));
        assert_eq!(problem.c_ext, ints(&[-4, 1, 1]));
        assert_eq!(problem.m_ext, int(-1));
        let z0 = point_of_basis(&problem.b_ext, problem.bas0_ext.basis());
        assert_eq!(z0, vec![frac(-11, 2), frac(19, 2), int(0)]);
        assert!(inner(&problem.c_ext, &z0) > problem.m_ext);

        let (a, b) = e2();
        let bas0 = basis_from_rows(&a, &[0]).unwrap();
        let problem = build_phase1(&a, &b, &bas0).unwrap();
        assert_eq!(problem.violated, vec![1]);
        assert_eq!(problem.p(), 1);
    }

    #[test]
    fn dual_from_ext_examples() {
        let u = ints(&[4, -2, 9]);
        assert_eq!(dual_from_ext(&[], 2, &u), ints(&[4, -2]));
        assert_eq!(dual_from_ext(&[1], 2, &u), ints(&[4, 3]));
    }

    #[test]
    fn extended_dual_gives_certificate() {
        let (a, b) = e2();
        let bas0 = basis_from_rows(&a, &[0]).unwrap();
        let problem = build_phase1(&a, &b, &bas0).unwrap();
        let opt = solve_extended(&problem).unwrap();
        let z = point_of_basis(&problem.b_ext, opt.basis());
        assert!(inner(&problem.c_ext, &z) > problem.m_ext);
        let u = ext_reduced_cost(problem.a_ext.rows(), &problem.c_ext, opt.basis());
        assert!(dual_contains(&problem.a_ext, &problem.c_ext, &u).unwrap());
        assert!(inner(&problem.b_ext, &u) > problem.m_ext);
        let d = problem.dual_from_ext(&u);
        assert!(is_dual_feasible_dir(&a, &d).unwrap());
        assert!(inner(&b, &d) > int(0));
    }

    #[test]
    fn purification_examples() {
        let (a, b, _) = pentagon();
        let vertex = purify(&a, &b, &ints(&[1, 3])).unwrap();
        assert_eq!(vertex.moves, 0);
        assert_eq!(vertex.basis.indices(), &[0, 2]);

        let pentagon_bases = [[0, 4], [3, 4], [1, 3], [1, 2], [0, 2]];
        let interior = purify(&a, &b, &ints(&[4, 3])).unwrap();
        assert!(interior.moves <= 2);
        assert!(pentagon_bases.iter().any(|s| s == interior.basis.indices()));
        assert!(interior.active_ranks.windows(2).all(|w| w[0] < w[1]));

        let half_line = Matrix::from_i64(1, &[&[1]]);
        let p = purify(&half_line, &ints(&[0]), &ints(&[5])).unwrap();
        assert_eq!(p.moves, 1);
        assert_eq!(p.basis.indices(), &[0]);
        assert_eq!(point_of_basis(&ints(&[0]), p.basis.basis()), ints(&[0]));

        let cylinder = Matrix::from_i64(2, &[&[0, 1], &[0, -1]]);
        assert!(matches!(
            purify(&cylinder, &ints(&[-1, -1]), &ints(&[0, 0])),
            Err(Error::NotPointed { rank: 1, cols: 2 })
        ));
    }

    #[test]
    fn pointed_simplex_examples() {
        let (a, b, c) = pentagon();
        let SimplexResult::Optimal { x, u } = pointed_simplex(&a, &b, &c).unwrap() else {
            panic!("expected an optimum")
        };
        assert_eq!(x, ints(&[1, 3]));
        assert_eq!(inner(&c, &x), int(6));
        assert_eq!(inner(&b, &u), int(6));
        assert!(dual_contains(&a, &c, &u).unwrap());

        let (a, b) = e2();
        let SimplexResult::Infeasible { d } = pointed_simplex(&a, &b, &ints(&[0])).unwrap() else {
            panic!("expected infeasibility")
        };
        assert_eq!(d[0], d[1]);
        assert!(is_dual_feasible_dir(&a, &d).unwrap());
        assert!(inner(&b, &d) > int(0));

        let a = Matrix::from_i64(1, &[&[1]]);
        let result = pointed_simplex(&a, &ints(&[0]), &ints(&[-1])).unwrap();
        assert_eq!(
            result,
            SimplexResult::Unbounded {
                x: ints(&[0]),
                d: ints(&[1])
            }
        );
        let SimplexResult::Unbounded { d, .. } = result else {
            unreachable!()
        };
        assert!(is_feasible_dir(&a, &d).unwrap());
    }

    #[test]
    fn extended_optimum_meets_lower_bound_iff_feasible() {
        let (a, b, _) = pentagon();
        for shift in [-30i64, -5, 0, 3, 10] {
            let b: Vec<Rational> = b.iter().map(|v| v + int(shift)).collect();
            for rows in (0..5).combinations(2) {
                let Ok(bas0) = basis_from_rows(&a, &rows) else { continue };
                let problem = build_phase1(&a, &b, &bas0).unwrap();
                let z0 = point_of_basis(&problem.b_ext, problem.bas0_ext.basis());
                assert!(problem.cext_lower_bound_check(&z0));
                let opt = solve_extended(&problem).unwrap();
                let z = point_of_basis(&problem.b_ext, opt.basis());
                assert!(problem.cext_lower_bound_check(&z));
                let reaches = inner(&problem.c_ext, &z) == problem.m_ext;
                let feasible = matches!(phase1(&a, &b).unwrap(), Phase1Outcome::Feasible(_));
                assert_eq!(reaches, feasible);
                if reaches {
                    assert!(contains(&a, &b, problem.upper(&z)).unwrap());
                }
            }
        }
    }
}
