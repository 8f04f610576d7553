//! Exact rational linear programming with the lexicographic simplex method.
//!
//! Every verdict returned by the solver carries a certificate that can be
//! re-checked with nothing but matrix products and sign tests:
//!
//! * infeasible: `d >= 0`, `A^T d = 0`, `<b, d> > 0`;
//! * unbounded: a feasible `x` and a ray `d` with `A d >= 0`, `<c, d> < 0`;
//! * optimal: a feasible `x` and a dual point `u >= 0`, `A^T u = c`, with
//!   `<c, x> = <b, u>`.
//!
//! The polyhedron predicates in [`simplex`] and [`hull`] (feasibility,
//! boundedness, convex hull membership, separation, vertex enumeration) are
//! all defined in terms of the solver.

pub mod basis;
pub mod certcheck;
pub mod cli;
mod error;
pub mod hull;
pub mod lexrule;
pub mod phase1;
pub mod phase2;
pub mod polyhedron;
pub mod ratlin;
pub mod simplex;

pub use error::{Error, Result};
pub use polyhedron::LinearProgram;
pub use ratlin::{Matrix, Rational};
pub use simplex::{simplex, SimplexResult};
