//! Seeded random instances.

use lexsimplex::ratlin::{frac, int};
use lexsimplex::{Matrix, Rational};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct Instance {
    pub a: Matrix,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ints(rng: &mut ChaCha8Rng, len: usize, range: i64) -> Vec<Rational> {
    (0..len).map(|_| int(rng.gen_range(-range..=range))).collect()
}

pub fn pentagon() -> Instance {
    Instance {
        a: Matrix::from_i64(2, &[&[1, 1], &[-1, -3], &[4, -1], &[-2, 1], &[0, 1]]),
        b: lexsimplex::ratlin::ints(&[4, -23, 1, -11, 1]),
        c: lexsimplex::ratlin::ints(&[3, 1]),
    }
}

/// `n <= 3`, `m <= 6`, integer entries in `[-5, 5]`.
pub fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=6);
    Instance {
        a: Matrix::new(m, n, ints(rng, m * n, 5)).unwrap(),
        b: ints(rng, m, 5),
        c: ints(rng, n, 5),
    }
}

pub fn corpus(count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_instance(&mut rng)).collect()
}

/// Rows drawn from a small pool with positive rescaling, all tight at an
/// integer point, so that many bases share one basic point. Returns the
/// program and that point.
pub fn degenerate_instance(rng: &mut ChaCha8Rng) -> (Instance, Vec<Rational>) {
    let n = rng.gen_range(2..=3);
    let pool: Vec<Vec<Rational>> = (0..n + 2).map(|_| ints(rng, n, 3)).collect();
    let m = rng.gen_range(n + 2..=n + 4);
    let x0 = ints(rng, n, 2);
    let mut rows = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for i in 0..m {
        let base = if i < pool.len() {
            &pool[i]
        } else {
            pool.choose(rng).unwrap()
        };
        let scale = int(rng.gen_range(1..=3));
        let row: Vec<Rational> = base.iter().map(|v| v * &scale).collect();
        let level: Rational = row.iter().zip(&x0).map(|(p, q)| p * q).sum();
        let slack = if rng.gen_bool(0.2) {
            int(rng.gen_range(1..=2))
        } else {
            int(0)
        };
        b.push(level - slack);
        rows.push(row);
    }
    let a = Matrix::from_rows(n, rows).unwrap();
    let c = ints(rng, n, 4);
    (Instance { a, b, c }, x0)
}

/// A polyhedron containing `x0` in its interior; may be unbounded.
pub fn instance_around_point(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Instance {
    let x0 = ints(rng, n, 2);
    let a = Matrix::new(m, n, ints(rng, m * n, 5)).unwrap();
    let b = (0..m)
        .map(|i| {
            let level: Rational = a.row(i).iter().zip(&x0).map(|(p, q)| p * q).sum();
            level - int(rng.gen_range(1..=4))
        })
        .collect();
    Instance {
        a,
        b,
        c: vec![int(0); n],
    }
}

pub fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rational {
    frac(rng.gen_range(lo * den..=hi * den), den)
}

/// Random convex weights with denominator `den`, summing to one.
pub fn convex_weights(rng: &mut ChaCha8Rng, p: usize) -> Vec<Rational> {
    let raw: Vec<i64> = (0..p).map(|_| rng.gen_range(0..=6)).collect();
    let total: i64 = raw.iter().sum();
    if total == 0 {
        let mut w = vec![int(0); p];
        w[rng.gen_range(0..p)] = int(1);
        return w;
    }
    raw.iter().map(|&r| frac(r, total)).collect()
}

/// `sum_j w_j V_j` for the columns of `points`.
pub fn combine(points: &Matrix, weights: &[Rational]) -> Vec<Rational> {
    (0..points.rows())
        .map(|i| (0..points.cols()).map(|j| points.get(i, j) * &weights[j]).sum())
        .collect()
}
