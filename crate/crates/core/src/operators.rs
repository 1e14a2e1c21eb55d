//! O-operators, Hom-left-symmetric algebras and the solutions `r = T̄ − σ(T̄)`.
//!
//! In `g ⋉_{ρ°} V*` the basis is `(e_1..e_n, v^1..v^m)`.

use num_traits::Zero;
use rand::Rng;

use crate::bialgebra::{check_triple_equivalence, validate_bialgebra, HomLieBialgebra};
use crate::coboundary::{check_twist_compat, cobracket_from_r, r_square_bracket, validate_coboundary, RMatrix};
use crate::error::{Error, Result};
use crate::hom_lie::{is_weakly_involutive, validate_hom_lie, HomLieAlgebra};
use crate::random::{combination, seeded, small_matrix};
use crate::report::{CheckReport, Condition, Residual, Witness};
use crate::representation::{
    hom_dual_representation, is_weakly_involutive_rep, semidirect_product, validate_representation, Representation,
};
use crate::tensor::{determinant, nullspace, sigma2, Matrix, Rational, Tensor3, Vector};

/// A map `T: V → g` together with the representation it is tested against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperatorCandidate {
    rep: Representation,
    t: Matrix,
}

impl OOperatorCandidate {
    pub fn new(rep: Representation, t: Matrix) -> Result<Self> {
        let shape = (rep.base().dim(), rep.carrier_dim());
        if t.shape() != shape {
            return Err(Error::dimension(
                "OOperatorCandidate::new",
                format!("T is {:?}, expected {shape:?}", t.shape()),
            ));
        }
        Ok(OOperatorCandidate { rep, t })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        self.rep.base()
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    /// `OT(u, v) = [Tu, Tv] − T(ρ(Tu)v − ρ(Tv)u)`.
    pub fn defect(&self, u: &Vector, v: &Vector) -> Vector {
        let (tu, tv) = (self.t.mul_vec(u), self.t.mul_vec(v));
        let inner = &self.rep.action_of(&tu).mul_vec(v) - &self.rep.action_of(&tv).mul_vec(u);
        &self.algebra().bracket_of(&tu, &tv) - &self.t.mul_vec(&inner)
    }

    fn twist_report(&self) -> CheckReport {
        let mut r = CheckReport::labelled(Condition::OOperatorTwist, "Tβ = φT");
        let res = &(&self.t * self.rep.beta()) - &(self.algebra().twist() * &self.t);
        r.expect_zero_matrix(Condition::OOperatorTwist, &[], res);
        r
    }
}

pub fn validate_o_operator(c: &OOperatorCandidate) -> CheckReport {
    let m = c.rep.carrier_dim();
    let mut defect = CheckReport::new(Condition::OOperatorDefect);
    for i in 0..m {
        for j in 0..m {
            let ot = c.defect(&Vector::basis(m, i), &Vector::basis(m, j));
            defect.expect_zero_vector(Condition::OOperatorDefect, &[i, j], ot);
        }
    }
    CheckReport::all_of(Condition::OOperator, vec![c.twist_report(), defect])
}

/// Basis of `{T : Tβ = φT}`.
pub fn twist_compatible_maps(rep: &Representation) -> Vec<Matrix> {
    let (n, m) = (rep.base().dim(), rep.carrier_dim());
    let phi = rep.base().twist();
    let beta = rep.beta();
    let var = |a: usize, b: usize| a * m + b;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..m {
            // (Tβ − φT)_{ij} = Σ_b T_ib β_bj − Σ_a φ_ia T_aj
            let mut row = vec![Rational::zero(); n * m];
            for b in 0..m {
                row[var(i, b)] += beta.get(b, j);
            }
            for a in 0..n {
                row[var(a, j)] -= phi.get(i, a);
            }
            rows.push(row);
        }
    }
    nullspace(&Matrix::from_rows(rows))
        .into_iter()
        .map(|v| Matrix::from_fn(n, m, |a, b| v[var(a, b)].clone()))
        .collect()
}

/// `(V, ·, ψ)` with `e_i · e_j = Σ_k product[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLeftSymmetric {
    label: String,
    product: Tensor3,
    psi: Matrix,
}

impl HomLeftSymmetric {
    pub fn new(label: impl Into<String>, product: Tensor3, psi: Matrix) -> Result<Self> {
        let m = psi.rows();
        if !psi.is_square() || product.dims() != (m, m, m) {
            return Err(Error::dimension(
                "HomLeftSymmetric::new",
                format!("product is {:?}, psi is {:?}", product.dims(), psi.shape()),
            ));
        }
        Ok(HomLeftSymmetric { label: label.into(), product, psi })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.psi.rows()
    }

    pub fn product(&self) -> &Tensor3 {
        &self.product
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn mul(&self, u: &Vector, v: &Vector) -> Vector {
        let m = self.dim();
        let mut out = vec![Rational::zero(); m];
        for (i, ui) in u.support() {
            for (j, vj) in v.support() {
                let w = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let p = self.product.get(i, j, k);
                    if !p.is_zero() {
                        *o += &w * p;
                    }
                }
            }
        }
        Vector::new(out)
    }

    /// Matrix of `L_{e_i}`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let m = self.dim();
        Matrix::from_fn(m, m, |k, j| self.product.get(i, j, k).clone())
    }

    fn associator(&self, u: &Vector, v: &Vector, w: &Vector) -> Vector {
        &self.mul(&self.mul(u, v), &self.psi.mul_vec(w)) - &self.mul(&self.psi.mul_vec(u), &self.mul(v, w))
    }
}

/// `ψ` multiplicative and `(u·v)·ψw − ψu·(v·w)` symmetric in `u, v`.
pub fn validate_hlsa(l: &HomLeftSymmetric) -> CheckReport {
    let m = l.dim();
    let e = |i| Vector::basis(m, i);
    let mut mult = CheckReport::new(Condition::PsiMultiplicative);
    for i in 0..m {
        for j in 0..m {
            let lhs = l.psi.mul_vec(&l.mul(&e(i), &e(j)));
            let rhs = l.mul(&l.psi.column(i), &l.psi.column(j));
            mult.expect_zero_vector(Condition::PsiMultiplicative, &[i, j], &lhs - &rhs);
        }
    }
    let mut assoc = CheckReport::new(Condition::AssociatorSymmetry);
    for i in 0..m {
        for j in i + 1..m {
            for k in 0..m {
                let res = &l.associator(&e(i), &e(j), &e(k)) - &l.associator(&e(j), &e(i), &e(k));
                assoc.expect_zero_vector(Condition::AssociatorSymmetry, &[i, j, k], res);
            }
        }
    }
    CheckReport::all_of(Condition::HomLeftSymmetric, vec![mult, assoc]).with_label(l.label.clone())
}

/// `(V, u·v − v·u, ψ)` with its Hom-Lie validation.
pub fn commutator_hom_lie(l: &HomLeftSymmetric) -> (HomLieAlgebra, CheckReport) {
    let m = l.dim();
    let c = Tensor3::from_fn((m, m, m), |i, j, k| l.product.get(i, j, k) - l.product.get(j, i, k));
    let g = HomLieAlgebra::new(format!("g({})", l.label), c, l.psi.clone()).expect("cube");
    let report = validate_hom_lie(&g);
    (g, report)
}

/// `(V, ψ, L)` over the commutator algebra, with its representation check.
pub fn left_mult_rep(l: &HomLeftSymmetric) -> (Representation, CheckReport) {
    let (g, _) = commutator_hom_lie(l);
    let action = (0..l.dim()).map(|i| l.left_mult(i)).collect();
    let rep = Representation::new(g, l.psi.clone(), action).expect("shapes agree");
    let report = validate_representation(&rep);
    (rep, report)
}

fn require(op: &'static str, parts: Vec<CheckReport>) -> Result<()> {
    let pre = CheckReport::all_of(Condition::Hypothesis, parts);
    if pre.passed {
        Ok(())
    } else {
        Err(Error::precondition(op, pre))
    }
}

/// `u·v = ψ²(u)·v` evaluated on the product directly.
pub fn psi_squared_condition(l: &HomLeftSymmetric) -> CheckReport {
    let m = l.dim();
    let psi2 = l.psi.pow(2);
    let mut r = CheckReport::labelled(Condition::PsiSquaredLeftInvariance, "u·v = ψ²(u)·v");
    for i in 0..m {
        for j in 0..m {
            let e_j = Vector::basis(m, j);
            let res = &l.mul(&Vector::basis(m, i), &e_j) - &l.mul(&psi2.column(i), &e_j);
            r.expect_zero_vector(Condition::PsiSquaredLeftInvariance, &[i, j], res);
        }
    }
    r
}

/// Weak involutivity of `(V, ψ, L)` against `u·v = ψ²(u)·v`, each implication
/// reported separately; when the condition holds, `ψ²` must be an O-operator.
pub fn cor56_checks(l: &HomLeftSymmetric) -> Result<CheckReport> {
    require("cor56_checks", vec![validate_hlsa(l)])?;
    let (rep, _) = left_mult_rep(l);
    let wi = is_weakly_involutive_rep(&rep).with_label("(V, ψ, L) weakly involutive");
    let cond = psi_squared_condition(l);
    let (a, b) = (wi.passed, cond.passed);
    let mut report = CheckReport::new(Condition::LeftMultWeaklyInvolutive);
    report.flag("weakly-involutive", a);
    report.flag("condition", b);
    report.absorb(CheckReport::verdict(Condition::Agreement, "weakly involutive ⇒ condition", !a || b));
    report.absorb(CheckReport::verdict(Condition::Agreement, "condition ⇒ weakly involutive", !b || a));
    report.attach(wi);
    report.attach(cond);
    if b {
        let cand = OOperatorCandidate::new(rep, l.psi.pow(2))?;
        report.absorb(validate_o_operator(&cand).with_label("ψ² is an O-operator"));
    }
    Ok(report)
}

/// Looks for a Hom-left-symmetric algebra of the given dimension where
/// `u·v = ψ²(u)·v` fails: draw `ψ`, solve the linear multiplicativity
/// constraint for the product, then test the quadratic identity.
pub fn search_condition_failure(dim: usize, seed: u64, attempts: usize) -> Option<HomLeftSymmetric> {
    let mut rng = seeded(seed);
    let m = dim;
    let var = |i: usize, j: usize, k: usize| (i * m + j) * m + k;
    for _ in 0..attempts {
        let psi = if rng.gen_bool(0.5) {
            Matrix::from_fn(m, m, |i, j| {
                if i == j {
                    Rational::from_integer(rng.gen_range(-1..=1).into())
                } else {
                    Rational::zero()
                }
            })
        } else {
            small_matrix(&mut rng, m, m)
        };
        // ψ(e_i · e_j) − ψe_i · ψe_j = 0, linear in the product coefficients.
        let mut rows = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for l in 0..m {
                    let mut row = vec![Rational::zero(); m * m * m];
                    for k in 0..m {
                        row[var(i, j, k)] += psi.get(l, k);
                    }
                    for a in 0..m {
                        for b in 0..m {
                            row[var(a, b, l)] -= psi.get(a, i) * psi.get(b, j);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let space: Vec<Matrix> = nullspace(&Matrix::from_rows(rows))
            .into_iter()
            .map(|v| Matrix::from_rows(vec![v.into_entries()]))
            .collect();
        if space.is_empty() {
            continue;
        }
        let flat = combination(&mut rng, &space, 1, m * m * m);
        let product = Tensor3::from_fn((m, m, m), |i, j, k| flat.get(0, var(i, j, k)).clone());
        let l = HomLeftSymmetric::new(format!("search-{seed}"), product, psi).expect("shapes");
        if validate_hlsa(&l).passed && !psi_squared_condition(&l).passed {
            return Some(l);
        }
    }
    None
}

/// `T̄ = Σ_i v^i ⊗ T(v_i)` in `(g ⊕ V*) ⊗ (g ⊕ V*)`.
pub fn lift_t_bar(c: &OOperatorCandidate) -> Matrix {
    let (n, m) = (c.algebra().dim(), c.rep.carrier_dim());
    let mut out = Matrix::zeros(n + m, n + m);
    out.set_block(n, 0, &c.t.transpose());
    out
}

/// `g ⋉_{ρ°} V*`; requires `ρ` weakly involutive.
pub fn dual_semidirect(rep: &Representation) -> Result<HomLieAlgebra> {
    let dual = hom_dual_representation(rep)?;
    Ok(semidirect_product(&dual)?.with_label(format!("{}⋉V*", rep.base().label())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperatorSolution {
    pub algebra: HomLieAlgebra,
    pub r: RMatrix,
    pub report: CheckReport,
}

/// `Σ_{i,j} φ(OT(v_i,v_j)) ⊗ v^i ⊗ v^j − v^i ⊗ φ(OT) ⊗ v^j + v^i ⊗ v^j ⊗ φ(OT)`.
pub fn defect_expansion(c: &OOperatorCandidate) -> Tensor3 {
    let (n, m) = (c.algebra().dim(), c.rep.carrier_dim());
    let mut out = Tensor3::cube(n + m);
    for i in 0..m {
        for j in 0..m {
            let ot = c.algebra().phi(&c.defect(&Vector::basis(m, i), &Vector::basis(m, j)));
            for (k, val) in ot.support() {
                out.add_at(k, n + i, n + j, val);
                out.add_at(n + i, k, n + j, &-val.clone());
                out.add_at(n + i, n + j, k, val);
            }
        }
    }
    out
}

/// `r = T̄ − σ(T̄)` in `g ⋉_{ρ°} V*`, with twist compatibility, the defect
/// expansion of `[r, r]`, and `[r, r] = 0` whenever `T` is an O-operator.
pub fn r_from_o_operator(c: &OOperatorCandidate) -> Result<OOperatorSolution> {
    require("r_from_o_operator", vec![c.twist_report(), is_weakly_involutive_rep(&c.rep)])?;
    let algebra = dual_semidirect(&c.rep)?;
    let tbar = lift_t_bar(c);
    let r = RMatrix::new(algebra.clone(), &tbar - &sigma2(&tbar))?;
    let rr = r_square_bracket(&r);

    let mut expansion = CheckReport::new(Condition::DefectExpansion);
    expansion.expect_zero_tensor(Condition::DefectExpansion, &[], &rr - &defect_expansion(c));

    let is_o = validate_o_operator(c).passed;
    let chybe = rr.is_zero();
    let mut report = CheckReport::new(Condition::Chybe).with_label("r = T̄ − σ(T̄)");
    report.flag("o-operator", is_o);
    report.flag("chybe", chybe);
    report.absorb(check_twist_compat(&r));
    report.absorb(expansion);
    let mut implication = CheckReport::labelled(Condition::Chybe, "O-operator ⇒ [r,r] = 0");
    if is_o && !chybe {
        implication.fail(Witness { condition: Condition::Chybe, basis: Vec::new(), residual: Residual::Tensor(rr) });
    }
    report.absorb(implication);
    if !determinant(c.algebra().twist()).is_zero() {
        report.attach(CheckReport::agreement("invertible twist: [r,r] = 0 ⇔ O-operator", chybe, is_o));
    }
    Ok(OOperatorSolution { algebra, r, report })
}

/// `ρ(φx)β² = ρ(φx)` on every basis vector.
pub fn beta_squared_hypothesis(rep: &Representation) -> CheckReport {
    let g = rep.base();
    let beta2 = rep.beta().pow(2);
    let mut hyp = CheckReport::labelled(Condition::BetaSquaredAction, "ρ(φx)β² = ρ(φx)");
    for i in 0..g.dim() {
        let act = rep.action_of(&g.twist().column(i));
        hyp.expect_zero_matrix(Condition::BetaSquaredAction, &[i], &(&act * &beta2) - &act);
    }
    hyp
}

/// The coboundary bialgebra on `g ⋉_{ρ°} V*` induced by an O-operator.
pub fn cor511_bialgebra(c: &OOperatorCandidate) -> Result<(HomLieBialgebra, CheckReport)> {
    let rep = &c.rep;
    let g = rep.base();
    let hyp = beta_squared_hypothesis(rep);
    require(
        "cor511_bialgebra",
        vec![
            validate_hom_lie(g),
            is_weakly_involutive(g),
            validate_representation(rep),
            is_weakly_involutive_rep(rep),
            hyp,
            validate_o_operator(c),
        ],
    )?;
    let sol = r_from_o_operator(c)?;
    let bi = HomLieBialgebra::new(cobracket_from_r(&sol.r));
    let cob = validate_coboundary(&sol.r)?;
    let report = CheckReport::all_of(
        Condition::Bialgebra,
        vec![sol.report, cob.report, validate_bialgebra(&bi), check_triple_equivalence(&bi)],
    );
    Ok((bi, report))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedSolutions {
    pub algebra: HomLieAlgebra,
    pub r1: RMatrix,
    pub r2: RMatrix,
    pub report: CheckReport,
}

/// `r₁ = v^i ∧ v_i` and `r₂ = v^i ∧ ψ²(v_i)`; both solve the equation, and when the
/// commutator algebra is weakly involutive their cobrackets coincide.
pub fn cor512_solutions(l: &HomLeftSymmetric) -> Result<PairedSolutions> {
    let pre = cor56_checks(l)?;
    require("cor512_solutions", vec![pre, psi_squared_condition(l)])?;
    let (rep, _) = left_mult_rep(l);
    let m = l.dim();
    let s1 = r_from_o_operator(&OOperatorCandidate::new(rep.clone(), Matrix::identity(m))?)?;
    let s2 = r_from_o_operator(&OOperatorCandidate::new(rep.clone(), l.psi.pow(2))?)?;
    let mut report = CheckReport::new(Condition::CobracketsCoincide);
    for (s, label) in [(&s1, "r1"), (&s2, "r2")] {
        let mut c = CheckReport::labelled(Condition::Chybe, label);
        let rr = r_square_bracket(&s.r);
        if !rr.is_zero() {
            c.fail(Witness { condition: Condition::Chybe, basis: Vec::new(), residual: Residual::Tensor(rr) });
        }
        report.absorb(c);
        report.absorb(s.report.clone().with_label(label));
    }
    let (g, _) = commutator_hom_lie(l);
    let wi = is_weakly_involutive(&g).passed;
    let beta2 = beta_squared_hypothesis(&rep).passed;
    report.flag("commutator-weakly-involutive", wi);
    report.flag("beta-squared", beta2);
    let part_b = wi && beta2;
    if part_b {
        let d1 = cobracket_from_r(&s1.r);
        let d2 = cobracket_from_r(&s2.r);
        let mut same = CheckReport::labelled(Condition::CobracketsCoincide, "δ1 = δ2");
        same.expect_zero_tensor(Condition::CobracketsCoincide, &[], d1.coeffs() - d2.coeffs());
        report.absorb(same);
        report.absorb(validate_coboundary(&s1.r)?.report.with_label("coboundary r1"));
        report.absorb(validate_coboundary(&s2.r)?.report.with_label("coboundary r2"));
    } else {
        report.note("hypotheses for δ1 = δ2 fail; not asserted");
    }
    Ok(PairedSolutions { algebra: s1.algebra, r1: s1.r, r2: s2.r, report })
}

/// `⟨T̄, (a+u) ⊗ (b+v)⟩` for `a ∈ g*, u ∈ V, b ∈ g, v ∈ V*`.
pub fn pair_t_bar(tbar: &Matrix, a: &Vector, u: &Vector, b: &Vector, v: &Vector) -> Rational {
    let left = a.concat(u);
    let right = tbar.mul_vec(&b.concat(v));
    left.entries().iter().zip(right.entries()).map(|(x, y)| x * y).sum()
}
