//! Hom-Lie algebras given by structure constants.
//!
//! The bracket is stored as `c` with `[e_i, e_j] = Σ_k c[i][j][k] e_k` and the
//! twist as a matrix whose column `j` is `φ(e_j)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::random::{combination, seeded};
use crate::report::{CheckReport, Condition};
use crate::tensor::{determinant, inverse, nullspace, one, rat, Matrix, Rational, Tensor3, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    label: String,
    bracket: Tensor3,
    twist: Matrix,
}

impl HomLieAlgebra {
    /// Checks shapes only; the algebraic axioms are left to [`validate_hom_lie`].
    pub fn new(label: impl Into<String>, bracket: Tensor3, twist: Matrix) -> Result<Self> {
        let (a, b, c) = bracket.dims();
        if a != b || b != c {
            return Err(Error::dimension("HomLieAlgebra::new", format!("bracket has dims {:?}", bracket.dims())));
        }
        if twist.shape() != (a, a) {
            return Err(Error::dimension(
                "HomLieAlgebra::new",
                format!("bracket has dim {a} but twist is {:?}", twist.shape()),
            ));
        }
        Ok(HomLieAlgebra { label: label.into(), bracket, twist })
    }

    /// Builds a skew bracket from the listed values of `[e_i, e_j]` (0-based, `i < j` typical).
    pub fn from_table(label: impl Into<String>, twist: Matrix, table: &[(usize, usize, Vector)]) -> Result<Self> {
        let n = twist.rows();
        let mut c = Tensor3::cube(n);
        for (i, j, v) in table {
            if v.dim() != n || *i >= n || *j >= n {
                return Err(Error::dimension(
                    "HomLieAlgebra::from_table",
                    format!("entry ({i},{j}) does not fit dim {n}"),
                ));
            }
            for (k, val) in v.support() {
                c.set(*i, *j, k, val.clone());
                c.set(*j, *i, k, -val.clone());
            }
        }
        Self::new(label, c, twist)
    }

    pub fn abelian(label: impl Into<String>, twist: Matrix) -> Self {
        let n = twist.rows();
        HomLieAlgebra { label: label.into(), bracket: Tensor3::cube(n), twist }
    }

    pub fn dim(&self) -> usize {
        self.twist.rows()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn bracket(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn basis(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket.fiber(i, j)
    }

    /// `[x, y]` by bilinear extension.
    pub fn bracket_of(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let w = xi * yj;
                for k in 0..n {
                    let c = self.bracket.get(i, j, k);
                    if !c.is_zero() {
                        out[k] += &w * c;
                    }
                }
            }
        }
        Vector::new(out)
    }

    /// Matrix of `ad_{e_i}`: entry `(k, j)` is `c[i][j][k]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, j| self.bracket.get(i, j, k).clone())
    }

    /// Matrix of `ad_x`.
    pub fn ad_of(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        x.support().fold(Matrix::zeros(n, n), |acc, (i, xi)| &acc + &self.ad(i).scale(xi))
    }

    pub fn phi(&self, x: &Vector) -> Vector {
        self.twist.mul_vec(x)
    }

    /// The same algebra written in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<HomLieAlgebra> {
        let n = self.dim();
        if p.shape() != (n, n) {
            return Err(Error::dimension(
                "change_basis",
                format!("basis matrix is {:?}, algebra has dim {n}", p.shape()),
            ));
        }
        let p_inv = inverse(p).ok_or_else(|| Error::Singular("change of basis matrix".into()))?;
        let cols: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
        let mut c = Tensor3::cube(n);
        for i in 0..n {
            for j in 0..n {
                let v = p_inv.mul_vec(&self.bracket_of(&cols[i], &cols[j]));
                for (k, val) in v.support() {
                    c.set(i, j, k, val.clone());
                }
            }
        }
        let twist = &(&p_inv * &self.twist) * p;
        HomLieAlgebra::new(self.label.clone(), c, twist)
    }
}

/// Skew-symmetry, multiplicativity of the twist, and the Hom-Jacobi identity.
pub fn validate_hom_lie(a: &HomLieAlgebra) -> CheckReport {
    let n = a.dim();
    let mut skew = CheckReport::new(Condition::Skew);
    for i in 0..n {
        for j in i..n {
            skew.expect_zero_vector(Condition::Skew, &[i, j], &a.bracket_basis(i, j) + &a.bracket_basis(j, i));
        }
    }
    let is_skew = skew.passed;

    let mut mult = CheckReport::new(Condition::TwistMultiplicative);
    let phi_e: Vec<Vector> = (0..n).map(|i| a.twist.column(i)).collect();
    for i in 0..n {
        for j in if is_skew { i + 1 } else { 0 }..n {
            let lhs = a.phi(&a.bracket_basis(i, j));
            let rhs = a.bracket_of(&phi_e[i], &phi_e[j]);
            mult.expect_zero_vector(Condition::TwistMultiplicative, &[i, j], &lhs - &rhs);
        }
    }

    let mut jacobi = CheckReport::new(Condition::HomJacobi);
    for i in 0..n {
        for j in if is_skew { i + 1 } else { 0 }..n {
            for k in if is_skew { j + 1 } else { 0 }..n {
                let t1 = a.bracket_of(&phi_e[i], &a.bracket_basis(j, k));
                let t2 = a.bracket_of(&phi_e[j], &a.bracket_basis(k, i));
                let t3 = a.bracket_of(&phi_e[k], &a.bracket_basis(i, j));
                jacobi.expect_zero_vector(Condition::HomJacobi, &[i, j, k], &(&t1 + &t2) + &t3);
            }
        }
    }

    CheckReport::all_of(Condition::HomLie, vec![skew, mult, jacobi]).with_label(a.label.clone())
}

/// `[φ²(e_i), e_j] = [e_i, e_j]` for all `i, j`.
pub fn is_weakly_involutive(a: &HomLieAlgebra) -> CheckReport {
    let n = a.dim();
    let phi2 = a.twist.pow(2);
    let mut report = CheckReport::labelled(Condition::WeaklyInvolutive, a.label.clone());
    for i in 0..n {
        let x = phi2.column(i);
        for j in 0..n {
            let lhs = a.bracket_of(&x, &a.basis(j));
            report.expect_zero_vector(Condition::WeaklyInvolutive, &[i, j], &lhs - &a.bracket_basis(i, j));
        }
    }
    report
}

/// `f[x,y] = [fx, fy]` and `f φ = φ' f`.
pub fn check_homomorphism(f: &Matrix, a: &HomLieAlgebra, b: &HomLieAlgebra) -> Result<CheckReport> {
    if f.shape() != (b.dim(), a.dim()) {
        return Err(Error::dimension(
            "check_homomorphism",
            format!("map is {:?}, expected {:?}", f.shape(), (b.dim(), a.dim())),
        ));
    }
    let n = a.dim();
    let mut bracket = CheckReport::new(Condition::BracketHomomorphism);
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(&a.bracket_basis(i, j));
            let rhs = b.bracket_of(&images[i], &images[j]);
            bracket.expect_zero_vector(Condition::BracketHomomorphism, &[i, j], &lhs - &rhs);
        }
    }
    let mut twist = CheckReport::new(Condition::TwistIntertwining);
    twist.expect_zero_matrix(Condition::TwistIntertwining, &[], &(f * &a.twist) - &(&b.twist * f));
    Ok(CheckReport::all_of(Condition::BracketHomomorphism, vec![bracket, twist]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::dimension("BilinearForm::new", format!("gram matrix is {:?}", gram.shape())));
        }
        Ok(BilinearForm { gram })
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Rational {
        let gy = self.gram.mul_vec(y);
        x.entries().iter().zip(gy.entries()).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram.is_symmetric()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !determinant(&self.gram).is_zero()
    }
}

/// `B([x,y],z) = B(x,[φy,z])` and `B(φx,y) = B(x,φy)`; symmetry and
/// nondegeneracy are reported as flags.
pub fn check_invariant_form(a: &HomLieAlgebra, b: &BilinearForm) -> Result<CheckReport> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::dimension("check_invariant_form", format!("form has dim {}, algebra has dim {n}", b.dim())));
    }
    let phi_e: Vec<Vector> = (0..n).map(|i| a.twist.column(i)).collect();
    let mut bracket = CheckReport::new(Condition::FormBracketInvariance);
    for i in 0..n {
        for j in 0..n {
            let xy = a.bracket_basis(i, j);
            for k in 0..n {
                let lhs = b.eval(&xy, &a.basis(k));
                let rhs = b.eval(&a.basis(i), &a.bracket_of(&phi_e[j], &a.basis(k)));
                bracket.expect_zero_scalar(Condition::FormBracketInvariance, &[i, j, k], lhs - rhs);
            }
        }
    }
    let mut twist = CheckReport::new(Condition::FormTwistSymmetry);
    for i in 0..n {
        for j in 0..n {
            let lhs = b.eval(&phi_e[i], &a.basis(j));
            let rhs = b.eval(&a.basis(i), &phi_e[j]);
            twist.expect_zero_scalar(Condition::FormTwistSymmetry, &[i, j], lhs - rhs);
        }
    }
    let mut report = CheckReport::all_of(Condition::InvariantForm, vec![bracket, twist]);
    report.flag("symmetric", b.is_symmetric());
    report.flag("nondegenerate", b.is_nondegenerate());
    Ok(report)
}

/// The map `x ↦ B(x, ·)` from `g` to `g*`, checked to intertwine the adjoint
/// representation with its Hom-dual.
pub fn form_to_equivalence(a: &HomLieAlgebra, b: &BilinearForm) -> Result<(Matrix, CheckReport)> {
    if b.dim() != a.dim() {
        return Err(Error::dimension(
            "form_to_equivalence",
            format!("form has dim {}, algebra has dim {}", b.dim(), a.dim()),
        ));
    }
    if !b.is_nondegenerate() {
        return Err(Error::Singular("bilinear form".into()));
    }
    let map = b.gram.transpose();
    let adjoint = crate::representation::adjoint_rep(a);
    let coadjoint = crate::representation::hom_dual_representation(&adjoint)?;
    let report = crate::representation::check_rep_equivalence(&adjoint, &coadjoint, &map)?;
    Ok((map, report))
}

/// The form `B(x, y) = ⟨ψ(x), y⟩` for an intertwiner `ψ: g → g*`, with its
/// invariance report (symmetry is only flagged).
pub fn equivalence_to_form(a: &HomLieAlgebra, psi: &Matrix) -> Result<(BilinearForm, CheckReport)> {
    if psi.shape() != (a.dim(), a.dim()) {
        return Err(Error::dimension(
            "equivalence_to_form",
            format!("map is {:?}, algebra has dim {}", psi.shape(), a.dim()),
        ));
    }
    if determinant(psi).is_zero() {
        return Err(Error::Singular("equivalence map".into()));
    }
    let form = BilinearForm::new(psi.transpose())?;
    let report = check_invariant_form(a, &form)?;
    Ok((form, report))
}

/// Basis of the space of gram matrices satisfying both invariance identities
/// (and symmetry when requested).
pub fn invariant_form_space(a: &HomLieAlgebra, symmetric: bool) -> Vec<Matrix> {
    let n = a.dim();
    let var = |p: usize, q: usize| p * n + q;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let phi_e: Vec<Vector> = (0..n).map(|i| a.twist.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let xy = a.bracket_basis(i, j);
            for k in 0..n {
                let w = a.bracket_of(&phi_e[j], &a.basis(k));
                let mut row = vec![Rational::zero(); n * n];
                for (m, c) in xy.support() {
                    row[var(m, k)] += c;
                }
                for (m, c) in w.support() {
                    row[var(i, m)] -= c;
                }
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![Rational::zero(); n * n];
            for (m, c) in phi_e[i].support() {
                row[var(m, j)] += c;
            }
            for (m, c) in phi_e[j].support() {
                row[var(i, m)] -= c;
            }
            rows.push(row);
            if symmetric && i < j {
                let mut row = vec![Rational::zero(); n * n];
                row[var(i, j)] = one();
                row[var(j, i)] = -one();
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Rational::zero(); n * n]);
    }
    nullspace(&Matrix::from_rows(rows))
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |p, q| v[var(p, q)].clone()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormSearch {
    Found(BilinearForm),
    /// The invariant forms were enumerated exhaustively enough to rule out a nondegenerate one.
    OnlyDegenerate {
        dimension: usize,
    },
    Inconclusive {
        dimension: usize,
    },
}

const RANDOM_TRIES: usize = 64;
const GRID_LIMIT: usize = 20_000;

/// Looks for a nondegenerate invariant form (symmetric if requested).
///
/// The determinant of a generic element of the solution space is a
/// polynomial of degree `n` in the coordinates; it vanishes identically iff
/// it vanishes on the grid `{0..n}^d`, so a complete grid scan is decisive.
pub fn search_nondegenerate_form(a: &HomLieAlgebra, symmetric: bool, seed: u64) -> FormSearch {
    let n = a.dim();
    let basis = invariant_form_space(a, symmetric);
    let d = basis.len();
    if d == 0 {
        return FormSearch::OnlyDegenerate { dimension: 0 };
    }
    let found = |g: Matrix| {
        let form = BilinearForm { gram: g };
        form.is_nondegenerate().then_some(form)
    };
    for b in &basis {
        if let Some(f) = found(b.clone()) {
            return FormSearch::Found(f);
        }
    }
    let mut rng = seeded(seed);
    for _ in 0..RANDOM_TRIES {
        if let Some(f) = found(combination(&mut rng, &basis, n, n)) {
            return FormSearch::Found(f);
        }
    }
    let side = n + 1;
    let grid_size = (0..d).try_fold(1usize, |acc, _| acc.checked_mul(side).filter(|s| *s <= GRID_LIMIT));
    let Some(total) = grid_size else {
        return FormSearch::Inconclusive { dimension: d };
    };
    for index in 0..total {
        let mut rest = index;
        let mut g = Matrix::zeros(n, n);
        for b in &basis {
            let c = (rest % side) as i64;
            rest /= side;
            if c != 0 {
                g = &g + &b.scale(&rat(c));
            }
        }
        if let Some(f) = found(g) {
            return FormSearch::Found(f);
        }
    }
    FormSearch::OnlyDegenerate { dimension: d }
}
