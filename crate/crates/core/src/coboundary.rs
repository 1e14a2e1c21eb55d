//! r-matrices: the cobracket `δ(x) = [x, r]`, the tensor `[r, r]`, the classical
//! Hom-Yang-Baxter equation and the `r♯` calculus.
//!
//! `r = Σ r^{ij} e_i ⊗ e_j` is stored as the matrix `r^{ij}`; the map
//! `r♯: g* → g` then has matrix `rᵀ`.

use num_traits::Zero;
use serde::Serialize;

use crate::bialgebra::{
    ad_on_pair, check_bialgebra_homomorphism, check_compatibility, dual_algebra, manin_double, validate_bialgebra,
    Cobracket, HomLieBialgebra,
};
use crate::error::{Error, Result};
use crate::hom_lie::{check_homomorphism, is_weakly_involutive, validate_hom_lie, BilinearForm, HomLieAlgebra};
use crate::report::{CheckReport, Condition, Residual, Witness};
use crate::tensor::{
    apply_pair, apply_triple, contract_first_two, cyclic_sum, inverse, nullspace, one, sigma2, Matrix, Tensor3, Vector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    base: HomLieAlgebra,
    coeffs: Matrix,
}

impl RMatrix {
    pub fn new(base: HomLieAlgebra, coeffs: Matrix) -> Result<Self> {
        let n = base.dim();
        if coeffs.shape() != (n, n) {
            return Err(Error::dimension("RMatrix::new", format!("r is {:?}, algebra has dim {n}", coeffs.shape())));
        }
        Ok(RMatrix { base, coeffs })
    }

    pub fn base(&self) -> &HomLieAlgebra {
        &self.base
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn is_skew(&self) -> bool {
        (&self.coeffs + &self.coeffs.transpose()).is_zero()
    }

    /// `σ(r) = r₂₁`.
    pub fn sigma(&self) -> RMatrix {
        RMatrix { base: self.base.clone(), coeffs: sigma2(&self.coeffs) }
    }
}

/// `(φ ⊗ id) r = (id ⊗ φ) r`, also checked in the form `φ r♯ = r♯ φ*`.
pub fn check_twist_compat(r: &RMatrix) -> CheckReport {
    let n = r.base.dim();
    let phi = r.base.twist();
    let id = Matrix::identity(n);
    let mut tensor = CheckReport::labelled(Condition::TwistCompatibility, "(φ⊗id)r = (id⊗φ)r");
    let lhs = apply_pair(phi, &id, &r.coeffs).expect("square");
    let rhs = apply_pair(&id, phi, &r.coeffs).expect("square");
    tensor.expect_zero_matrix(Condition::TwistCompatibility, &[], &lhs - &rhs);
    let sharp = r_sharp(r);
    let mut map = CheckReport::labelled(Condition::TwistCompatibility, "φ r♯ = r♯ φ*");
    map.expect_zero_matrix(Condition::TwistCompatibility, &[], &(phi * &sharp) - &(&sharp * &phi.transpose()));
    let agree = CheckReport::agreement("tensor form vs map form", tensor.passed, map.passed);
    CheckReport::all_of(Condition::TwistCompatibility, vec![tensor, map, agree])
}

/// Basis of `{r : (φ ⊗ id) r = (id ⊗ φ) r}`, optionally restricted to skew `r`.
pub fn twist_compatible_space(a: &HomLieAlgebra, skew: bool) -> Vec<Matrix> {
    let n = a.dim();
    let phi = a.twist();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![crate::tensor::zero(); n * n];
            for k in 0..n {
                row[k * n + j] += phi.get(i, k);
                row[i * n + k] -= phi.get(j, k);
            }
            rows.push(row);
            if skew && i <= j {
                let mut row = vec![crate::tensor::zero(); n * n];
                row[i * n + j] += one();
                row[j * n + i] += one();
                rows.push(row);
            }
        }
    }
    nullspace(&Matrix::from_rows(rows))
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

/// `δ(e_k) = (φ ⊗ ad_{e_k} + ad_{e_k} ⊗ φ) r`.
pub fn cobracket_from_r(r: &RMatrix) -> Cobracket {
    let a = &r.base;
    let n = a.dim();
    let deltas: Vec<Matrix> = (0..n).map(|k| ad_on_pair(a, &a.basis(k), &r.coeffs)).collect();
    let coeffs = Tensor3::from_fn((n, n, n), |k, i, j| deltas[k].get(i, j).clone());
    Cobracket::new(a.clone(), coeffs).expect("cube")
}

/// `[r,r] = Σ [x_i,x_j]⊗φy_i⊗φy_j + φx_i⊗[y_i,x_j]⊗φy_j + φx_i⊗φx_j⊗[y_i,y_j]`.
pub fn r_square_bracket(r: &RMatrix) -> Tensor3 {
    let a = &r.base;
    let n = a.dim();
    let id = Matrix::identity(n);
    let phi = a.twist();
    // s = (id ⊗ φ) r, t = (φ ⊗ id) r
    let s = apply_pair(&id, phi, &r.coeffs).expect("square");
    let t = apply_pair(phi, &id, &r.coeffs).expect("square");
    let c = a.bracket();
    let mut out = Tensor3::cube(n);
    for ((u, v, w), cval) in c.support() {
        // term 1: [e_u, e_v] ⊗ s(u,·) ⊗ s(v,·)
        for q in 0..n {
            let s_uq = s.get(u, q);
            if s_uq.is_zero() {
                continue;
            }
            for p in 0..n {
                let val = cval * s_uq * s.get(v, p);
                out.add_at(w, q, p, &val);
            }
        }
        // term 2: t(·,u) ⊗ [e_u, e_v] ⊗ s(v,·)
        for p in 0..n {
            let t_pu = t.get(p, u);
            if t_pu.is_zero() {
                continue;
            }
            for q in 0..n {
                let val = cval * t_pu * s.get(v, q);
                out.add_at(p, w, q, &val);
            }
        }
        // term 3: t(·,u) ⊗ t(·,v) ⊗ [e_u, e_v]
        for p in 0..n {
            let t_pu = t.get(p, u);
            if t_pu.is_zero() {
                continue;
            }
            for q in 0..n {
                let val = cval * t_pu * t.get(q, v);
                out.add_at(p, q, w, &val);
            }
        }
    }
    out
}

/// `Jac_δ(e_x) = Σ_{c.p.} (φ ⊗ δ) δ(e_x)`.
pub fn jac_delta(cb: &Cobracket, x: usize) -> Tensor3 {
    let a = cb.base();
    let n = a.dim();
    let phi = a.twist();
    let d = cb.delta(x);
    let mut t = Tensor3::cube(n);
    for p in 0..n {
        for q in 0..n {
            let dpq = d.get(p, q);
            if dpq.is_zero() {
                continue;
            }
            let inner = cb.delta(q);
            for i in 0..n {
                let w = dpq * phi.get(i, p);
                if w.is_zero() {
                    continue;
                }
                for j in 0..n {
                    for k in 0..n {
                        t.add_at(i, j, k, &(&w * inner.get(j, k)));
                    }
                }
            }
        }
    }
    cyclic_sum(&t)
}

/// `(ad_{φx} ⊗ φ ⊗ φ + φ ⊗ ad_{φx} ⊗ φ + φ ⊗ φ ⊗ ad_{φx}) t`.
pub fn ad_phi_on_tensor3(a: &HomLieAlgebra, x: &Vector, t: &Tensor3) -> Result<Tensor3> {
    let ad = a.ad_of(&a.phi(x));
    let phi = a.twist();
    let t1 = apply_triple(&ad, phi, phi, t)?;
    let t2 = apply_triple(phi, &ad, phi, t)?;
    let t3 = apply_triple(phi, phi, &ad, t)?;
    Ok(&(&t1 + &t2) + &t3)
}

/// `[x, r + σ(r)] = 0` for every basis `x`.
pub fn symmetric_part_invariance(r: &RMatrix) -> CheckReport {
    let a = &r.base;
    let sym = &r.coeffs + &r.coeffs.transpose();
    let mut report = CheckReport::new(Condition::SymmetricPartInvariance);
    for k in 0..a.dim() {
        report.expect_zero_matrix(Condition::SymmetricPartInvariance, &[k], ad_on_pair(a, &a.basis(k), &sym));
    }
    report
}

/// `[r, r] = 0`.
pub fn check_chybe(r: &RMatrix) -> CheckReport {
    let rr = r_square_bracket(r);
    let mut report = CheckReport::new(Condition::Chybe);
    if !rr.is_zero() {
        report.fail(Witness { condition: Condition::Chybe, basis: Vec::new(), residual: Residual::Tensor(rr) });
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Triangular,
    Quasitriangular,
    /// Coboundary but `[r, r] ≠ 0`.
    Coboundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoboundaryReport {
    pub report: CheckReport,
    pub classification: Option<Classification>,
}

fn algebra_preconditions(a: &HomLieAlgebra) -> CheckReport {
    CheckReport::all_of(Condition::Hypothesis, vec![validate_hom_lie(a), is_weakly_involutive(a)])
        .with_label("weakly involutive Hom-Lie algebra")
}

fn require(op: &'static str, parts: Vec<CheckReport>) -> Result<()> {
    let pre = CheckReport::all_of(Condition::Hypothesis, parts);
    if pre.passed {
        Ok(())
    } else {
        Err(Error::precondition(op, pre))
    }
}

/// Conditions (i) `[x, r + σ(r)] = 0` and (ii) `ad_{φx}[r,r] = 0`, cross-checked
/// against direct validation of the induced bracket on `g*`.
pub fn validate_coboundary(r: &RMatrix) -> Result<CoboundaryReport> {
    require("validate_coboundary", vec![algebra_preconditions(&r.base), check_twist_compat(r)])?;
    let a = &r.base;
    let rr = r_square_bracket(r);
    let first = symmetric_part_invariance(r).with_label("condition (i)");
    let mut second = CheckReport::labelled(Condition::AdPhiRSquare, "condition (ii)");
    for k in 0..a.dim() {
        second.expect_zero_tensor(Condition::AdPhiRSquare, &[k], ad_phi_on_tensor3(a, &a.basis(k), &rr)?);
    }
    let cb = cobracket_from_r(r);
    let dual = dual_algebra(&cb);
    let direct = algebra_preconditions(&dual).with_label("g* is a weakly involutive Hom-Lie algebra");
    let conditions = first.passed && second.passed;

    let mut report = CheckReport::new(Condition::Coboundary);
    report.flag("conditions", conditions);
    report.flag("dual-weakly-involutive", direct.passed);
    report.absorb(first);
    report.absorb(second);
    report.absorb(check_compatibility(&cb));
    report.absorb(CheckReport::agreement("conditions vs induced dual", conditions, direct.passed));
    report.attach(direct);
    let classification = conditions.then(|| match (rr.is_zero(), r.is_skew()) {
        (true, true) => Classification::Triangular,
        (true, false) => Classification::Quasitriangular,
        (false, _) => Classification::Coboundary,
    });
    Ok(CoboundaryReport { report, classification })
}

/// The three identities with common factor `(φ ⊗ id − id ⊗ φ) r`, each side
/// computed separately.
pub fn lemma44_residuals(r: &RMatrix) -> Result<CheckReport> {
    require("lemma44_residuals", vec![algebra_preconditions(&r.base)])?;
    common_factor_residuals(r)
}

/// [`lemma44_residuals`] without the weak-involutivity requirement, for
/// probing algebras outside it.
pub fn common_factor_residuals(r: &RMatrix) -> Result<CheckReport> {
    let a = &r.base;
    let n = a.dim();
    let phi = a.twist();
    let id = Matrix::identity(n);
    let cb = cobracket_from_r(r);
    let factor = &apply_pair(phi, &id, &r.coeffs)? - &apply_pair(&id, phi, &r.coeffs)?;
    let two_sided = &apply_pair(phi, &id, &factor)? + &apply_pair(&id, phi, &factor)?;
    let phi2 = phi.pow(2);

    let mut first = CheckReport::labelled(Condition::CoboundaryHomomorphism, "(a)");
    let mut second = CheckReport::labelled(Condition::CoboundaryInvolutivity, "(b)");
    for k in 0..n {
        let x = a.basis(k);
        let ad_phix_phi = &a.ad_of(&a.phi(&x)) * phi;
        let lhs = &cb.delta_of(&a.phi(&x)) - &apply_pair(phi, phi, &cb.delta(k))?;
        let rhs = &apply_pair(&ad_phix_phi, phi, &factor)? - &apply_pair(phi, &ad_phix_phi, &factor)?;
        first.expect_zero_matrix(Condition::CoboundaryHomomorphism, &[k], &lhs - &rhs);

        let lhs = &apply_pair(&phi2, &id, &cb.delta(k))? - &cb.delta(k);
        let rhs = apply_pair(phi, &a.ad(k), &two_sided)?;
        second.expect_zero_matrix(Condition::CoboundaryInvolutivity, &[k], &lhs - &rhs);
    }

    let mut third = CheckReport::labelled(Condition::CoboundaryCompatibility, "(c)");
    for i in 0..n {
        for j in 0..n {
            let xy = a.bracket_basis(i, j);
            let lhs = &cb.delta_of(&xy)
                - &(&ad_on_pair(a, &phi.column(i), &cb.delta(j)) - &ad_on_pair(a, &phi.column(j), &cb.delta(i)));
            let ad_xy_phi = &a.ad_of(&xy) * phi;
            let rhs = &apply_pair(&ad_xy_phi, phi, &factor)? - &apply_pair(phi, &ad_xy_phi, &factor)?;
            third.expect_zero_matrix(Condition::CoboundaryCompatibility, &[i, j], &lhs - &rhs);
        }
    }
    Ok(CheckReport::all_of(Condition::Agreement, vec![first, second, third]).with_label("common factor identities"))
}

/// `Jac_δ(x) = ad_{φx}[r, r]` for every basis `x`, under twist compatibility and
/// condition (i).
pub fn lemma46_check(r: &RMatrix) -> Result<CheckReport> {
    require(
        "lemma46_check",
        vec![algebra_preconditions(&r.base), check_twist_compat(r), symmetric_part_invariance(r)],
    )?;
    let a = &r.base;
    let cb = cobracket_from_r(r);
    let rr = r_square_bracket(r);
    let mut report = CheckReport::new(Condition::JacobiatorIdentity);
    for k in 0..a.dim() {
        let res = &jac_delta(&cb, k) - &ad_phi_on_tensor3(a, &a.basis(k), &rr)?;
        report.expect_zero_tensor(Condition::JacobiatorIdentity, &[k], res);
    }
    Ok(report)
}

/// Matrix of `r♯: g* → g`, `⟨r♯(a), b⟩ = ⟨r, a ⊗ b⟩`.
pub fn r_sharp(r: &RMatrix) -> Matrix {
    r.coeffs.transpose()
}

fn sharp_preconditions(op: &'static str, r: &RMatrix) -> Result<()> {
    require(op, vec![algebra_preconditions(&r.base), check_twist_compat(r)])
}

/// `[a, b] = ad°_{r♯a} b + ad°_{r₂₁♯b} a` with `ad°_x = −(ad_{φx})ᵀ`.
pub fn dual_bracket_from_r(r: &RMatrix) -> Result<HomLieAlgebra> {
    sharp_preconditions("dual_bracket_from_r", r)?;
    let a = &r.base;
    let n = a.dim();
    let sharp = r_sharp(r);
    let sharp21 = r.coeffs.clone();
    let coad = |x: &Vector| -&a.ad_of(&a.phi(x)).transpose();
    let mut c = Tensor3::cube(n);
    for i in 0..n {
        let left = coad(&sharp.column(i));
        for j in 0..n {
            let v = &left.column(j) + &coad(&sharp21.column(j)).column(i);
            for (k, val) in v.support() {
                c.set(i, j, k, val.clone());
            }
        }
    }
    HomLieAlgebra::new(format!("{}* from r", a.label()), c, a.twist().transpose())
}

/// The two constructions of the bracket on `g*` agree entrywise.
pub fn check_dual_bracket_routes(r: &RMatrix) -> Result<CheckReport> {
    let via_sharp = dual_bracket_from_r(r)?;
    let via_cobracket = dual_algebra(&cobracket_from_r(r));
    let n = r.base.dim();
    let mut report = CheckReport::new(Condition::DualBracketRoutes);
    for i in 0..n {
        for j in 0..n {
            let res = &via_sharp.bracket_basis(i, j) - &via_cobracket.bracket_basis(i, j);
            report.expect_zero_vector(Condition::DualBracketRoutes, &[i, j], res);
        }
    }
    Ok(report)
}

/// `[r♯φ*a, r♯φ*b] − r♯φ*[a,b] = [r,r](a,b)` on dual basis pairs.
pub fn lemma_4_13_identity(r: &RMatrix) -> Result<CheckReport> {
    sharp_preconditions("lemma_4_13_identity", r)?;
    let a = &r.base;
    let n = a.dim();
    let map = &r_sharp(r) * &a.twist().transpose();
    let dual = dual_algebra(&cobracket_from_r(r));
    let rr = r_square_bracket(r);
    let mut report = CheckReport::new(Condition::SharpIdentity);
    for i in 0..n {
        for j in 0..n {
            let lhs = &a.bracket_of(&map.column(i), &map.column(j)) - &map.mul_vec(&dual.bracket_basis(i, j));
            let rhs = contract_first_two(&rr, &a.basis(i), &a.basis(j))?;
            report.expect_zero_vector(Condition::SharpIdentity, &[i, j], &lhs - &rhs);
        }
    }
    Ok(report)
}

/// `r♯φ*: g* → g` as a map of Hom-Lie algebras.
pub fn sharp_homomorphism(r: &RMatrix) -> Result<CheckReport> {
    sharp_preconditions("sharp_homomorphism", r)?;
    let map = &r_sharp(r) * &r.base.twist().transpose();
    let dual = dual_algebra(&cobracket_from_r(r));
    check_homomorphism(&map, &dual, &r.base)
}

/// `B(x, y) = ⟨(r♯)⁻¹x, y⟩`, with the cyclic cocycle identity and `φ`-symmetry.
/// The attached agreement child compares that verdict with `[r, r] = 0`.
pub fn form_from_invertible_r(r: &RMatrix) -> Result<(BilinearForm, CheckReport)> {
    let mut skew = CheckReport::labelled(Condition::Skew, "r is skew-symmetric");
    skew.expect_zero_matrix(Condition::Skew, &[], &r.coeffs + &r.coeffs.transpose());
    require("form_from_invertible_r", vec![algebra_preconditions(&r.base), skew, check_twist_compat(r)])?;
    let gram = inverse(&r.coeffs).ok_or_else(|| Error::Singular("r♯".into()))?;
    let form = BilinearForm::new(gram)?;
    let a = &r.base;
    let n = a.dim();
    let phi_e: Vec<Vector> = (0..n).map(|i| a.twist().column(i)).collect();
    let mut cocycle = CheckReport::new(Condition::CyclicCocycle);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = form.eval(&phi_e[i], &a.bracket_basis(j, k))
                    + form.eval(&phi_e[j], &a.bracket_basis(k, i))
                    + form.eval(&phi_e[k], &a.bracket_basis(i, j));
                cocycle.expect_zero_scalar(Condition::CyclicCocycle, &[i, j, k], v);
            }
        }
    }
    let mut sym = CheckReport::new(Condition::FormTwistSymmetry);
    for i in 0..n {
        for j in 0..n {
            let v = form.eval(&phi_e[i], &a.basis(j)) - form.eval(&a.basis(i), &phi_e[j]);
            sym.expect_zero_scalar(Condition::FormTwistSymmetry, &[i, j], v);
        }
    }
    let mut report = CheckReport::all_of(Condition::CyclicCocycle, vec![cocycle, sym]);
    let chybe = r_square_bracket(r).is_zero();
    report.flag("chybe", chybe);
    report.attach(CheckReport::agreement("form identities vs [r,r] = 0", report.passed, chybe));
    Ok((form, report))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDouble {
    pub algebra: HomLieAlgebra,
    pub r: RMatrix,
    pub report: CheckReport,
}

/// `HD(g)` on `g ⊕ g*` with `r = Σ e_i ⊗ f_i` and all the structural assertions.
pub fn hom_double(bi: &HomLieBialgebra) -> Result<HomDouble> {
    require("hom_double", vec![validate_bialgebra(bi)])?;
    let g = bi.algebra();
    let n = g.dim();
    let big = manin_double(bi).with_label(format!("HD({})", g.label()));
    let mut coeffs = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        coeffs.set(i, n + i, one());
    }
    let r = RMatrix::new(big.clone(), coeffs)?;
    let hd_bi = HomLieBialgebra::new(cobracket_from_r(&r));

    let mut left = Matrix::zeros(2 * n, n);
    left.set_block(0, 0, g.twist());
    let mut right = Matrix::zeros(2 * n, n);
    right.set_block(n, 0, &g.twist().transpose());

    let dual = bi.dual();
    let c = g.bracket();
    let minus_dual_cobracket = Tensor3::from_fn((n, n, n), |k, i, j| -c.get(i, j, k).clone());
    let dual_bi = HomLieBialgebra::new(Cobracket::new(dual, minus_dual_cobracket)?);

    let mut report = CheckReport::new(Condition::HomDouble);
    report.absorb(check_twist_compat(&r));
    report.absorb(check_chybe(&r));
    report.absorb(symmetric_part_invariance(&r));
    report.absorb(check_bialgebra_homomorphism(&left, bi, &hd_bi)?.with_label("φ: g → HD(g)"));
    report.absorb(check_bialgebra_homomorphism(&right, &dual_bi, &hd_bi)?.with_label("φ*: g* → HD(g)"));
    Ok(HomDouble { algebra: big, r, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::wedge_basis;

    fn aff2() -> HomLieAlgebra {
        HomLieAlgebra::from_table("aff2", Matrix::identity(2), &[(0, 1, Vector::from_i64(&[1, 0]))]).unwrap()
    }

    #[test]
    fn triangular_aff2() {
        let r = RMatrix::new(aff2(), wedge_basis(2, 0, 1)).unwrap();
        assert!(r_square_bracket(&r).is_zero());
        let cb = cobracket_from_r(&r);
        assert!(cb.delta(0).is_zero());
        assert_eq!(cb.delta(1), -&wedge_basis(2, 0, 1));
        let out = validate_coboundary(&r).unwrap();
        assert!(out.report.passed);
        assert_eq!(out.classification, Some(Classification::Triangular));
    }

    #[test]
    fn symmetric_r_fails_condition_one() {
        let r = RMatrix::new(aff2(), Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        let out = validate_coboundary(&r).unwrap();
        assert!(!out.report.passed);
        assert_eq!(out.classification, None);
        assert_eq!(out.report.get_flag("conditions"), out.report.get_flag("dual-weakly-involutive"));
        let sym = symmetric_part_invariance(&r);
        let ks: Vec<_> = sym.witnesses.iter().map(|w| w.basis.clone()).collect();
        assert_eq!(ks, vec![vec![1], vec![2]]);
    }

    #[test]
    fn non_skew_form_rejected() {
        let r = RMatrix::new(aff2(), Matrix::from_i64(&[&[1, 1], &[-1, 0]])).unwrap();
        assert!(matches!(form_from_invertible_r(&r), Err(Error::Precondition { .. })));
    }
}
