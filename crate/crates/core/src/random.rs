//! Seeded generators for property suites.
//!
//! Entries are drawn uniformly from `{-2,...,2} / {1,2}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tensor::{inverse, ratio, Matrix, Rational, Tensor3, Vector};

pub type Seeded = ChaCha8Rng;

pub fn seeded(seed: u64) -> Seeded {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.gen_range(-2..=2);
    let den: i64 = rng.gen_range(1..=2);
    ratio(num, den)
}

pub fn small_vector(rng: &mut impl Rng, dim: usize) -> Vector {
    Vector::new((0..dim).map(|_| small_rational(rng)).collect())
}

pub fn small_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small_rational(rng))
}

pub fn small_tensor(rng: &mut impl Rng, dims: (usize, usize, usize)) -> Tensor3 {
    Tensor3::from_fn(dims, |_, _, _| small_rational(rng))
}

/// An invertible matrix, redrawn until the determinant is nonzero.
pub fn invertible_matrix(rng: &mut impl Rng, n: usize) -> (Matrix, Matrix) {
    loop {
        let m = small_matrix(rng, n, n);
        if let Some(inv) = inverse(&m) {
            return (m, inv);
        }
    }
}

/// A random combination `Σ c_i b_i` of the given basis with small coefficients.
pub fn combination(rng: &mut impl Rng, basis: &[Matrix], rows: usize, cols: usize) -> Matrix {
    basis.iter().fold(Matrix::zeros(rows, cols), |acc, b| &acc + &b.scale(&small_rational(rng)))
}
