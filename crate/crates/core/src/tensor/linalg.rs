//! Gaussian elimination over ℚ: rank, kernels, determinants, inverses.

use num_traits::{One, Zero};

use super::{Matrix, Rational, Vector};

/// Reduced row echelon form together with the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut rows = m.to_rows();
    let (nrows, ncols) = m.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..ncols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix::from_fn(nrows, ncols, |i, j| rows[i][j].clone()), pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// A basis of `{x : m x = 0}`, one vector per free column.
pub fn nullspace(m: &Matrix) -> Vec<Vector> {
    let (reduced, pivots) = rref(m);
    let ncols = m.cols();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(row, f).clone();
            }
            Vector::new(v)
        })
        .collect()
}

pub fn determinant(m: &Matrix) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut rows = m.to_rows();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            rows.swap(p, c);
            det = -det;
        }
        det *= &rows[c][c];
        for i in c + 1..n {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &rows[c][c];
            for j in c..n {
                let delta = &factor * &rows[c][j];
                rows[i][j] -= delta;
            }
        }
    }
    det
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, &Matrix::identity(n));
    let (reduced, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(reduced.block(0, n, n, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::rat;

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&m), rat(1));
        let inv = inverse(&m).unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        let singular = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&singular), rat(0));
        assert!(inverse(&singular).is_none());
    }

    #[test]
    fn nullspace_spans_kernel() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let kernel = nullspace(&m);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(m.mul_vec(v).is_zero());
        }
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn determinant_swap_sign() {
        let m = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(determinant(&m), rat(-3));
    }
}
