//! Phase II: starting from a feasible basis, pivot with the lexicographic
//! rule until the reduced costs are nonnegative or an improving feasible
//! direction shows the program is unbounded.

use num_traits::Signed;

use crate::basis::{direction, reduced_cost, FeasibleBasis};
use crate::lexrule::{is_lex_feasible, lex_pivot, perturbed_objective, LexFeasibleBasis, LexValue, PerturbedRhs};
use crate::polyhedron::is_feasible_dir;
use crate::ratlin::{Matrix, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Phase2Result {
    /// Reduced costs are nonnegative.
    Optimal(FeasibleBasis),
    /// `u_k < 0` and `direction(basis, k)` is a feasible direction.
    Unbounded { basis: FeasibleBasis, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Next(LexFeasibleBasis),
    Final(Phase2Result),
}

/// A complete Phase II run with the visited bases, for inspection.
#[derive(Debug, Clone)]
pub struct Phase2Run {
    pub result: Phase2Result,
    pub perturbation: PerturbedRhs,
    /// Index sets of every basis visited, starting with the initial one.
    pub path: Vec<Vec<usize>>,
    /// `c^T X` at every visited basis.
    pub objectives: Vec<LexValue>,
}

impl Phase2Run {
    pub fn pivots(&self) -> usize {
        self.path.len() - 1
    }
}

/// `C(m, n)`, saturating at `u128::MAX`.
pub fn binomial(m: usize, n: usize) -> u128 {
    if n > m {
        return 0;
    }
    let k = n.min(m - n) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(m as u128 - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// A permutation making `bas0` lex-feasible: non-basis rows take the
/// perturbation orders `1..=m-n` in increasing row order, basis rows take the
/// remaining higher orders.
///
/// A tight non-basis row then has slack whose first nonzero perturbation
/// coefficient is `+1` at its own order, which precedes every basis order.
pub fn feasible_to_lex_feasible(a: &Matrix, b: &[Rational], bas0: &FeasibleBasis) -> PerturbedRhs {
    let m = a.rows();
    let basis = bas0.basis();
    let mut perm = vec![0; m];
    let mut next = 0;
    for (i, slot) in perm.iter_mut().enumerate() {
        if !basis.contains_row(i) {
            *slot = next;
            next += 1;
        }
    }
    for &i in basis.indices() {
        perm[i] = next;
        next += 1;
    }
    let bp = PerturbedRhs::new(b.to_vec(), perm).expect("construction yields a permutation");
    debug_assert!(is_lex_feasible(a, &bp, basis));
    bp
}

pub fn basic_step(a: &Matrix, bp: &PerturbedRhs, c: &[Rational], current: LexFeasibleBasis) -> Result<Step> {
    let u = reduced_cost(c, current.basis());
    let Some(k) = u.iter().position(Signed::is_negative) else {
        return Ok(Step::Final(Phase2Result::Optimal(FeasibleBasis::new_unchecked(
            current.into_basis(),
        ))));
    };
    let d = direction(current.basis(), k);
    if is_feasible_dir(a, &d)? {
        return Ok(Step::Final(Phase2Result::Unbounded {
            basis: FeasibleBasis::new_unchecked(current.into_basis()),
            k,
        }));
    }
    Ok(Step::Next(lex_pivot(a, bp, c, &current, k)?))
}

pub fn phase2_run(a: &Matrix, b: &[Rational], c: &[Rational], bas0: &FeasibleBasis) -> Result<Phase2Run> {
    let bp = feasible_to_lex_feasible(a, b, bas0);
    let budget = binomial(a.rows(), a.cols());
    let mut current = LexFeasibleBasis::new(a, &bp, bas0.basis().clone())
        .map_err(|_| Error::Internal("start basis is not lex-feasible"))?;
    let mut path = vec![current.basis().indices().to_vec()];
    let mut objectives = vec![perturbed_objective(&bp, c, current.basis())];
    loop {
        match basic_step(a, &bp, c, current)? {
            Step::Final(result) => {
                return Ok(Phase2Run {
                    result,
                    perturbation: bp,
                    path,
                    objectives,
                })
            }
            Step::Next(next) => {
                if path.len() as u128 >= budget {
                    return Err(Error::IterationBudgetExceeded { budget });
                }
                path.push(next.basis().indices().to_vec());
                objectives.push(perturbed_objective(&bp, c, next.basis()));
                current = next;
            }
        }
    }
}

pub fn phase2(a: &Matrix, b: &[Rational], c: &[Rational], bas0: &FeasibleBasis) -> Result<Phase2Result> {
    phase2_run(a, b, c, bas0).map(|run| run.result)
}
