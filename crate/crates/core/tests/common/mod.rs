//! Brute-force reference computations over plain nested `Vec`s. Nothing here
//! calls the library's tensor algebra, so agreement is independent evidence.
#![allow(dead_code, clippy::needless_range_loop)]

use homlie::hom_lie::HomLieAlgebra;
use homlie::tensor::{Matrix, Rational, Tensor3};
use num_traits::Zero;

pub type M = Vec<Vec<Rational>>;
pub type T = Vec<Vec<Vec<Rational>>>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn zeros2(n: usize) -> M {
    vec![vec![Rational::zero(); n]; n]
}

pub fn zeros3(n: usize) -> T {
    vec![vec![vec![Rational::zero(); n]; n]; n]
}

/// Structure constants `c[i][j][k]` and twist columns `phi[row][col]`.
pub fn raw(a: &HomLieAlgebra) -> (T, M) {
    let n = a.dim();
    let mut c = zeros3(n);
    for (i, ci) in c.iter_mut().enumerate() {
        for (j, cij) in ci.iter_mut().enumerate() {
            for (k, v) in cij.iter_mut().enumerate() {
                *v = a.bracket().get(i, j, k).clone();
            }
        }
    }
    let phi = (0..n).map(|i| (0..n).map(|j| a.twist().get(i, j).clone()).collect()).collect();
    (c, phi)
}

pub fn m_raw(m: &Matrix) -> M {
    m.to_rows()
}

pub fn t_raw(t: &Tensor3) -> T {
    let (a, b, c) = t.dims();
    (0..a).map(|i| (0..b).map(|j| (0..c).map(|k| t.get(i, j, k).clone()).collect()).collect()).collect()
}

/// `[e_a, e_b]` as a coefficient list.
pub fn br(c: &T, a: usize, b: usize) -> Vec<Rational> {
    c[a][b].clone()
}

/// Cyclic sum `[φe_i,[e_j,e_k]] + [φe_j,[e_k,e_i]] + [φe_k,[e_i,e_j]]`.
pub fn hom_jacobiator(c: &T, phi: &M, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let n = c.len();
    let mut out = vec![Rational::zero(); n];
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        for p in 0..n {
            for s in 0..n {
                let coeff = &phi[p][x] * &c[y][z][s];
                if coeff.is_zero() {
                    continue;
                }
                for t in 0..n {
                    out[t] += &coeff * &c[p][s][t];
                }
            }
        }
    }
    out
}

/// `δ(e_k) = (φ ⊗ ad_k + ad_k ⊗ φ) r`, returned as `d[k][i][j]`.
pub fn delta(c: &T, phi: &M, r: &M) -> T {
    let n = c.len();
    let mut d = zeros3(n);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for p in 0..n {
                    for s in 0..n {
                        // ad_k e_s = Σ_j c[k][s][j] e_j
                        acc += &phi[i][p] * &c[k][s][j] * &r[p][s];
                        acc += &c[k][p][i] * &phi[j][s] * &r[p][s];
                    }
                }
                d[k][i][j] = acc;
            }
        }
    }
    d
}

/// `[r,r]` summed term by term over `r = Σ r_ab e_a ⊗ e_b`.
pub fn r_square(c: &T, phi: &M, r: &M) -> T {
    let n = c.len();
    let mut out = zeros3(n);
    for a in 0..n {
        for b in 0..n {
            if r[a][b].is_zero() {
                continue;
            }
            for cc in 0..n {
                for d in 0..n {
                    let w = &r[a][b] * &r[cc][d];
                    if w.is_zero() {
                        continue;
                    }
                    for x in 0..n {
                        for y in 0..n {
                            for z in 0..n {
                                // [x_i, x_j] ⊗ φ y_i ⊗ φ y_j
                                out[x][y][z] += &w * &c[a][cc][x] * &phi[y][b] * &phi[z][d];
                                // φ x_i ⊗ [y_i, x_j] ⊗ φ y_j
                                out[x][y][z] += &w * &phi[x][a] * &c[b][cc][y] * &phi[z][d];
                                // φ x_i ⊗ φ x_j ⊗ [y_i, y_j]
                                out[x][y][z] += &w * &phi[x][a] * &phi[y][cc] * &c[b][d][z];
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `Σ_cyc (φ ⊗ δ) δ(e_k)` from cobracket coefficients.
pub fn jacobiator_of_delta(d: &T, phi: &M, k: usize) -> T {
    let n = d.len();
    let mut once = zeros3(n);
    for i in 0..n {
        for j in 0..n {
            if d[k][i][j].is_zero() {
                continue;
            }
            for a in 0..n {
                for b in 0..n {
                    for cc in 0..n {
                        once[a][b][cc] += &d[k][i][j] * &phi[a][i] * &d[j][b][cc];
                    }
                }
            }
        }
    }
    let mut out = zeros3(n);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                out[a][b][cc] = &once[a][b][cc] + &once[cc][a][b] + &once[b][cc][a];
            }
        }
    }
    out
}

/// `[φx, φ²y] − [φx, y]`-style weak involutivity residual `[φ²e_i, e_j] − [e_i, e_j]`.
pub fn weak_involutivity_residual(c: &T, phi: &M, i: usize, j: usize) -> Vec<Rational> {
    let n = c.len();
    let mut out: Vec<Rational> = c[i][j].iter().map(|v| -v.clone()).collect();
    for p in 0..n {
        for s in 0..n {
            let w = &phi[p][s] * &phi[s][i];
            if w.is_zero() {
                continue;
            }
            for t in 0..n {
                out[t] += &w * &c[p][j][t];
            }
        }
    }
    out
}

/// O-operator defect `[Tu, Tv] − T(ρ(Tu)v − ρ(Tv)u)` on basis vectors `u = v_i`, `v = v_j`.
pub fn o_defect(c: &T, action: &[M], t: &M, i: usize, j: usize) -> Vec<Rational> {
    let n = c.len();
    let m = t[0].len();
    let col = |k: usize| -> Vec<Rational> { (0..n).map(|a| t[a][k].clone()).collect() };
    let (tu, tv) = (col(i), col(j));
    let mut out = vec![Rational::zero(); n];
    for a in 0..n {
        for b in 0..n {
            let w = &tu[a] * &tv[b];
            for s in 0..n {
                out[s] += &w * &c[a][b][s];
            }
        }
    }
    // inner = ρ(Tu) v_j − ρ(Tv) v_i
    let mut inner = vec![Rational::zero(); m];
    for a in 0..n {
        for s in 0..m {
            inner[s] += &tu[a] * &action[a][s][j];
            inner[s] -= &tv[a] * &action[a][s][i];
        }
    }
    for s in 0..n {
        for k in 0..m {
            out[s] -= &t[s][k] * &inner[k];
        }
    }
    out
}
