//! Exact rational scalars and dense order-1/2/3 tensors.
//!
//! Everything downstream is expressed through the handful of operations
//! here: `(A ⊗ B) t`, `(A ⊗ B ⊗ C) t`, slot permutations, and contraction
//! against dual vectors. The dual basis is biorthogonal to the primal one,
//! so the matrix of a dual map `φ*` is the transpose of the matrix of `φ`.

mod linalg;
mod matrix;
mod rational;
mod tensor3;
mod vector;

pub use linalg::{determinant, inverse, nullspace, rank, rref};
pub use matrix::Matrix;
pub use rational::{format_rational, one, parse_rational, rat, ratio, zero, Rational};
pub use tensor3::Tensor3;
pub use vector::Vector;

use num_traits::Zero;

use crate::error::{Error, Result};

/// `(A ⊗ B) t` for `t ∈ V ⊗ W` stored as a matrix: entries `Σ_{p,q} A_ip B_jq t^pq`.
pub fn apply_pair(a: &Matrix, b: &Matrix, t: &Matrix) -> Result<Matrix> {
    if a.cols() != t.rows() || b.cols() != t.cols() {
        return Err(Error::dimension(
            "apply_pair",
            format!("A is {:?}, B is {:?}, t is {:?}", a.shape(), b.shape(), t.shape()),
        ));
    }
    Ok(&(a * t) * &b.transpose())
}

/// `(A ⊗ B ⊗ C) t`, one slot at a time.
pub fn apply_triple(a: &Matrix, b: &Matrix, c: &Matrix, t: &Tensor3) -> Result<Tensor3> {
    let (d1, d2, d3) = t.dims();
    if a.cols() != d1 || b.cols() != d2 || c.cols() != d3 {
        return Err(Error::dimension(
            "apply_triple",
            format!("A is {:?}, B is {:?}, C is {:?}, t is {:?}", a.shape(), b.shape(), c.shape(), t.dims()),
        ));
    }
    let mut first = Tensor3::zeros((a.rows(), d2, d3));
    for ((i, j, k), v) in t.support() {
        for p in 0..a.rows() {
            let coeff = a.get(p, i);
            if !coeff.is_zero() {
                first.add_at(p, j, k, &(coeff * v));
            }
        }
    }
    let mut second = Tensor3::zeros((a.rows(), b.rows(), d3));
    for ((p, j, k), v) in first.support() {
        for q in 0..b.rows() {
            let coeff = b.get(q, j);
            if !coeff.is_zero() {
                second.add_at(p, q, k, &(coeff * v));
            }
        }
    }
    let mut out = Tensor3::zeros((a.rows(), b.rows(), c.rows()));
    for ((p, q, k), v) in second.support() {
        for s in 0..c.rows() {
            let coeff = c.get(s, k);
            if !coeff.is_zero() {
                out.add_at(p, q, s, &(coeff * v));
            }
        }
    }
    Ok(out)
}

/// The flip `x ⊗ y ↦ y ⊗ x`.
pub fn sigma2(t: &Matrix) -> Matrix {
    t.transpose()
}

/// Rotates slots `times` times; one rotation sends `e_i ⊗ e_j ⊗ e_k` to `e_k ⊗ e_i ⊗ e_j`.
pub fn cyclic3(t: &Tensor3, times: usize) -> Tensor3 {
    let mut out = t.clone();
    for _ in 0..times % 3 {
        let (d1, d2, d3) = out.dims();
        let src = out;
        out = Tensor3::from_fn((d3, d1, d2), |k, i, j| src.get(i, j, k).clone());
    }
    out
}

/// Sum of the three cyclic images of `t`.
pub fn cyclic_sum(t: &Tensor3) -> Tensor3 {
    &(t + &cyclic3(t, 1)) + &cyclic3(t, 2)
}

/// The pairing `⟨ξ, v⟩ = Σ ξ_i v_i`.
pub fn pair_dual(xi: &Vector, v: &Vector) -> Result<Rational> {
    if xi.dim() != v.dim() {
        return Err(Error::dimension(
            "pair_dual",
            format!("covector has dim {}, vector has dim {}", xi.dim(), v.dim()),
        ));
    }
    Ok(xi.entries().iter().zip(v.entries()).map(|(a, b)| a * b).sum())
}

/// `⟨t, a ⊗ b⟩` for `t` in a twofold tensor product.
pub fn pair_matrix(t: &Matrix, a: &Vector, b: &Vector) -> Result<Rational> {
    if t.rows() != a.dim() || t.cols() != b.dim() {
        return Err(Error::dimension(
            "pair_matrix",
            format!("t is {:?}, covectors have dims {}, {}", t.shape(), a.dim(), b.dim()),
        ));
    }
    pair_dual(a, &t.mul_vec(b))
}

/// Contracts slots 1 and 2 of `t` against `a` and `b`, leaving a vector in slot 3.
pub fn contract_first_two(t: &Tensor3, a: &Vector, b: &Vector) -> Result<Vector> {
    let (d1, d2, d3) = t.dims();
    if a.dim() != d1 || b.dim() != d2 {
        return Err(Error::dimension(
            "contract_first_two",
            format!("t is {:?}, covectors have dims {}, {}", t.dims(), a.dim(), b.dim()),
        ));
    }
    let mut out = Vector::zeros(d3).into_entries();
    for ((i, j, k), v) in t.support() {
        let w = &a[i] * &b[j];
        if !w.is_zero() {
            out[k] += w * v;
        }
    }
    Ok(Vector::new(out))
}

/// The pure tensor `a ⊗ b` as a matrix.
pub fn outer2(a: &Vector, b: &Vector) -> Matrix {
    Matrix::from_fn(a.dim(), b.dim(), |i, j| &a[i] * &b[j])
}

/// `e_i ∧ e_j = e_i ⊗ e_j − e_j ⊗ e_i` in an `n`-dimensional space (0-based indices).
pub fn wedge_basis(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.add_at(i, j, &one());
    m.add_at(j, i, &-one());
    m
}
