use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::rational::{format_coefficient, Rational};
use super::vector::Vector;

/// Dense order-3 tensor; entry `(i, j, k)` is the coefficient of `e_i ⊗ e_j ⊗ e_k`.
///
/// The same box also stores structure constants (`c[i][j][k]` with
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`) and cobracket coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(dims: (usize, usize, usize)) -> Self {
        Tensor3 { dims, data: vec![Rational::zero(); dims.0 * dims.1 * dims.2] }
    }

    pub fn cube(n: usize) -> Self {
        Self::zeros((n, n, n))
    }

    pub fn from_fn(dims: (usize, usize, usize), mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(dims.0 * dims.1 * dims.2);
        for i in 0..dims.0 {
            for j in 0..dims.1 {
                for k in 0..dims.2 {
                    data.push(f(i, j, k));
                }
            }
        }
        Tensor3 { dims, data }
    }

    /// The pure tensor `a ⊗ b ⊗ c`.
    pub fn outer(a: &Vector, b: &Vector, c: &Vector) -> Self {
        Self::from_fn((a.dim(), b.dim(), c.dim()), |i, j, k| &(&a[i] * &b[j]) * &c[k])
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims.0 && j < self.dims.1 && k < self.dims.2);
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        let o = self.offset(i, j, k);
        self.data[o] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, value: &Rational) {
        let o = self.offset(i, j, k);
        self.data[o] += value;
    }

    /// The vector `t[i][j][·]`.
    pub fn fiber(&self, i: usize, j: usize) -> Vector {
        Vector::new((0..self.dims.2).map(|k| self.get(i, j, k).clone()).collect())
    }

    /// The matrix `t[i][·][·]`.
    pub fn slice(&self, i: usize) -> super::Matrix {
        super::Matrix::from_fn(self.dims.1, self.dims.2, |j, k| self.get(i, j, k).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Tensor3 {
        Tensor3 { dims: self.dims, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Nonzero entries as `((i, j, k), value)`, 0-based.
    pub fn support(&self) -> impl Iterator<Item = ((usize, usize, usize), &Rational)> {
        let (_, d2, d3) = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(o, v)| ((o / (d2 * d3), (o / d3) % d2, o % d3), v))
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, rhs.dims, "tensor shape mismatch");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims, rhs.dims, "tensor shape mismatch");
        Tensor3 { dims: self.dims, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        Tensor3 { dims: self.dims, data: self.data.iter().map(|a| -a).collect() }
    }
}

/// Prints as a sum of `ei⊗ej⊗ek` terms.
impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j, k), c) in self.support() {
            write!(f, "{}e{}⊗e{}⊗e{}", format_coefficient(c, first), i + 1, j + 1, k + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
