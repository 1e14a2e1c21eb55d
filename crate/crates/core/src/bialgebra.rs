//! Cobrackets, matched pairs, Manin triples and Hom-Lie bialgebras.
//!
//! On `g ⊕ g*` the basis order is always `(e_1..e_n, f_1..f_n)`.

use crate::error::{Error, Result};
use crate::hom_lie::{
    check_homomorphism, check_invariant_form, is_weakly_involutive, validate_hom_lie, BilinearForm, HomLieAlgebra,
};
use crate::report::{CheckReport, Condition};
use crate::representation::{
    adjoint_rep, compare_criteria, hom_dual_representation, is_weakly_involutive_rep, validate_representation,
    Representation,
};
use crate::tensor::{apply_pair, Matrix, Tensor3, Vector};

/// `Δ(e_k) = Σ_{i,j} coeffs[k][i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    base: HomLieAlgebra,
    coeffs: Tensor3,
}

impl Cobracket {
    pub fn new(base: HomLieAlgebra, coeffs: Tensor3) -> Result<Self> {
        let n = base.dim();
        if coeffs.dims() != (n, n, n) {
            return Err(Error::dimension(
                "Cobracket::new",
                format!("coefficients are {:?}, algebra has dim {n}", coeffs.dims()),
            ));
        }
        Ok(Cobracket { base, coeffs })
    }

    pub fn zero(base: HomLieAlgebra) -> Self {
        let n = base.dim();
        Cobracket { base, coeffs: Tensor3::cube(n) }
    }

    /// Reads `Δ` off a bracket on `g*`: `⟨Δ(x), a ⊗ b⟩ = ⟨x, [a, b]⟩`.
    pub fn from_dual(base: HomLieAlgebra, dual: &HomLieAlgebra) -> Result<Self> {
        let n = base.dim();
        if dual.dim() != n {
            return Err(Error::dimension(
                "Cobracket::from_dual",
                format!("dual has dim {}, algebra has dim {n}", dual.dim()),
            ));
        }
        let c = dual.bracket();
        let coeffs = Tensor3::from_fn((n, n, n), |k, i, j| c.get(i, j, k).clone());
        Ok(Cobracket { base, coeffs })
    }

    pub fn base(&self) -> &HomLieAlgebra {
        &self.base
    }

    pub fn coeffs(&self) -> &Tensor3 {
        &self.coeffs
    }

    /// `Δ(e_k)` as an element of `g ⊗ g`.
    pub fn delta(&self, k: usize) -> Matrix {
        self.coeffs.slice(k)
    }

    pub fn delta_of(&self, x: &Vector) -> Matrix {
        let n = self.base.dim();
        x.support().fold(Matrix::zeros(n, n), |acc, (k, c)| &acc + &self.delta(k).scale(c))
    }

    pub fn negated(&self) -> Cobracket {
        Cobracket { base: self.base.clone(), coeffs: -&self.coeffs }
    }
}

/// `[f_i, f_j] = Σ_k Δ_k^{ij} f_k` with twist `φᵀ`. Not validated.
pub fn dual_algebra(cb: &Cobracket) -> HomLieAlgebra {
    let n = cb.base.dim();
    let c = Tensor3::from_fn((n, n, n), |i, j, k| cb.coeffs.get(k, i, j).clone());
    HomLieAlgebra::new(format!("{}*", cb.base.label()), c, cb.base.twist().transpose()).expect("square shapes")
}

/// `ad_z` acting on `g ⊗ g` as `φ ⊗ ad_z + ad_z ⊗ φ`.
pub fn ad_on_pair(a: &HomLieAlgebra, z: &Vector, t: &Matrix) -> Matrix {
    let ad = a.ad_of(z);
    let phi = a.twist();
    &apply_pair(phi, &ad, t).expect("square") + &apply_pair(&ad, phi, t).expect("square")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieBialgebra {
    cobracket: Cobracket,
}

impl HomLieBialgebra {
    pub fn new(cobracket: Cobracket) -> Self {
        HomLieBialgebra { cobracket }
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.cobracket.base
    }

    pub fn cobracket(&self) -> &Cobracket {
        &self.cobracket
    }

    pub fn dual(&self) -> HomLieAlgebra {
        dual_algebra(&self.cobracket)
    }
}

/// Hom-Lie validity plus weak involutivity, under one label.
fn weakly_involutive_hom_lie(a: &HomLieAlgebra, label: &str) -> CheckReport {
    CheckReport::all_of(Condition::HomLie, vec![validate_hom_lie(a), is_weakly_involutive(a)]).with_label(label)
}

/// `Δ[x,y] = ad_{φx}Δ(y) − ad_{φy}Δ(x)` on basis pairs.
pub fn check_compatibility(cb: &Cobracket) -> CheckReport {
    let a = &cb.base;
    let n = a.dim();
    let mut report = CheckReport::new(Condition::Compatibility);
    for i in 0..n {
        for j in 0..n {
            let lhs = cb.delta_of(&a.bracket_basis(i, j));
            let rhs =
                &ad_on_pair(a, &a.twist().column(i), &cb.delta(j)) - &ad_on_pair(a, &a.twist().column(j), &cb.delta(i));
            report.expect_zero_matrix(Condition::Compatibility, &[i, j], &lhs - &rhs);
        }
    }
    report
}

pub fn validate_bialgebra(bi: &HomLieBialgebra) -> CheckReport {
    let g = bi.algebra();
    let dual = bi.dual();
    CheckReport::all_of(
        Condition::Bialgebra,
        vec![
            weakly_involutive_hom_lie(g, "g"),
            weakly_involutive_hom_lie(&dual, "g*"),
            check_compatibility(&bi.cobracket),
        ],
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    /// `ρ`: the first algebra acting on the second's space.
    pub rho: Representation,
    /// `ρ'`: the second algebra acting on the first's space.
    pub rho2: Representation,
}

impl MatchedPair {
    pub fn new(rho: Representation, rho2: Representation) -> Result<Self> {
        if rho.carrier_dim() != rho2.base().dim() || rho2.carrier_dim() != rho.base().dim() {
            return Err(Error::dimension(
                "MatchedPair::new",
                format!(
                    "algebras have dims {} and {}, carriers have dims {} and {}",
                    rho.base().dim(),
                    rho2.base().dim(),
                    rho.carrier_dim(),
                    rho2.carrier_dim()
                ),
            ));
        }
        Ok(MatchedPair { rho, rho2 })
    }

    pub fn first(&self) -> &HomLieAlgebra {
        self.rho.base()
    }

    pub fn second(&self) -> &HomLieAlgebra {
        self.rho2.base()
    }
}

fn twist_match(beta: &Matrix, phi: &Matrix, label: &str) -> CheckReport {
    let mut r = CheckReport::labelled(Condition::TwistIntertwining, label);
    r.expect_zero_matrix(Condition::TwistIntertwining, &[], beta - phi);
    r
}

/// Both algebras, both representations (with twists `φ'` and `φ`), and the two
/// compatibility equations on all basis tuples.
pub fn validate_matched_pair(mp: &MatchedPair) -> CheckReport {
    let (g, h) = (mp.first(), mp.second());
    let (n, m) = (g.dim(), h.dim());
    let (rho, rho2) = (&mp.rho, &mp.rho2);

    let mut left = CheckReport::new(Condition::MatchedPairCompatLeft);
    for p in 0..m {
        let phi_xp = h.twist().column(p);
        let act_phi = rho2.action_of(&phi_xp);
        let act = rho2.action(p);
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (g.basis(i), g.basis(j));
                let (px, py) = (g.phi(&x), g.phi(&y));
                let lhs = act_phi.mul_vec(&g.bracket_basis(i, j));
                let t1 = g.bracket_of(&act.mul_vec(&x), &py);
                let t2 = g.bracket_of(&px, &act.mul_vec(&y));
                let t3 = rho2.action_of(&rho.action(j).mul_vec(&h.basis(p))).mul_vec(&px);
                let t4 = rho2.action_of(&rho.action(i).mul_vec(&h.basis(p))).mul_vec(&py);
                let rhs = &(&(&t1 + &t2) + &t3) - &t4;
                left.expect_zero_vector(Condition::MatchedPairCompatLeft, &[i, j, p], &lhs - &rhs);
            }
        }
    }

    let mut right = CheckReport::new(Condition::MatchedPairCompatRight);
    for i in 0..n {
        let act_phi = rho.action_of(&g.twist().column(i));
        let act = rho.action(i);
        for p in 0..m {
            for q in 0..m {
                let (x, y) = (h.basis(p), h.basis(q));
                let (px, py) = (h.phi(&x), h.phi(&y));
                let lhs = act_phi.mul_vec(&h.bracket_basis(p, q));
                let t1 = h.bracket_of(&act.mul_vec(&x), &py);
                let t2 = h.bracket_of(&px, &act.mul_vec(&y));
                let t3 = rho.action_of(&rho2.action(q).mul_vec(&g.basis(i))).mul_vec(&px);
                let t4 = rho.action_of(&rho2.action(p).mul_vec(&g.basis(i))).mul_vec(&py);
                let rhs = &(&(&t1 + &t2) + &t3) - &t4;
                right.expect_zero_vector(Condition::MatchedPairCompatRight, &[i, p, q], &lhs - &rhs);
            }
        }
    }

    CheckReport::all_of(
        Condition::MatchedPair,
        vec![
            validate_hom_lie(g).with_label("first algebra"),
            validate_hom_lie(h).with_label("second algebra"),
            validate_representation(rho).with_label("ρ"),
            validate_representation(rho2).with_label("ρ'"),
            twist_match(rho.beta(), h.twist(), "twist of ρ is φ'"),
            twist_match(rho2.beta(), g.twist(), "twist of ρ' is φ"),
            left,
            right,
        ],
    )
}

/// `[(x,x'),(y,y')] = ([x,y] − ρ'(y')x + ρ'(x')y, [x',y'] + ρ(x)y' − ρ(y)x')` with
/// twist `φ ⊕ φ'`, built without any validation.
pub(crate) fn double_bracket(
    g: &HomLieAlgebra,
    h: &HomLieAlgebra,
    rho: &[Matrix],
    rho2: &[Matrix],
    label: String,
) -> HomLieAlgebra {
    let (n, m) = (g.dim(), h.dim());
    let mut c = Tensor3::cube(n + m);
    for ((i, j, k), v) in g.bracket().support() {
        c.set(i, j, k, v.clone());
    }
    for ((p, q, k), v) in h.bracket().support() {
        c.set(n + p, n + q, n + k, v.clone());
    }
    for i in 0..n {
        for p in 0..m {
            // [e_i, e'_p] = (−ρ'(e'_p) e_i, ρ(e_i) e'_p)
            let g_part = -&rho2[p].column(i);
            let h_part = rho[i].column(p);
            let v = g_part.concat(&h_part);
            for (k, val) in v.support() {
                c.set(i, n + p, k, val.clone());
                c.set(n + p, i, k, -val.clone());
            }
        }
    }
    let twist = g.twist().direct_sum(h.twist());
    HomLieAlgebra::new(label, c, twist).expect("block shapes agree")
}

pub fn double_from_matched_pair(mp: &MatchedPair) -> Result<HomLieAlgebra> {
    let report = validate_matched_pair(mp);
    if !report.passed {
        return Err(Error::precondition("double_from_matched_pair", report));
    }
    Ok(double_bracket(
        mp.first(),
        mp.second(),
        mp.rho.actions(),
        mp.rho2.actions(),
        format!("{}⋈{}", mp.first().label(), mp.second().label()),
    ))
}

/// Four criteria for weak involutivity of the double, compared with a direct check.
pub fn double_weak_involutivity_criteria(mp: &MatchedPair) -> Result<CheckReport> {
    let double = double_from_matched_pair(mp)?;
    let beta_sq = |r: &Representation, label: &str| {
        let t2 = r.beta().pow(2);
        let mut c = CheckReport::labelled(Condition::BetaSquaredAction, label);
        for (i, a) in r.actions().iter().enumerate() {
            c.expect_zero_matrix(Condition::BetaSquaredAction, &[i], &(a * &t2) - a);
        }
        c
    };
    let criteria = vec![
        CheckReport::all_of(
            Condition::WeaklyInvolutive,
            vec![is_weakly_involutive(mp.first()), is_weakly_involutive_rep(&mp.rho)],
        )
        .with_label("criterion (i)"),
        CheckReport::all_of(
            Condition::WeaklyInvolutive,
            vec![is_weakly_involutive(mp.second()), is_weakly_involutive_rep(&mp.rho2)],
        )
        .with_label("criterion (ii)"),
        beta_sq(&mp.rho, "criterion (iii)"),
        beta_sq(&mp.rho2, "criterion (iv)"),
    ];
    let mut report = compare_criteria("double", criteria, is_weakly_involutive(&double));
    report.condition = Condition::DoubleCriteria;
    Ok(report)
}

/// `B(x + a, y + b) = ⟨x, b⟩ + ⟨y, a⟩`, gram `[[0, I], [I, 0]]`.
pub fn standard_form(n: usize) -> BilinearForm {
    let mut g = Matrix::zeros(2 * n, 2 * n);
    g.set_block(0, n, &Matrix::identity(n));
    g.set_block(n, 0, &Matrix::identity(n));
    BilinearForm::new(g).expect("square")
}

fn block_subalgebra(big: &HomLieAlgebra, start: usize, n: usize, label: &str) -> CheckReport {
    let outside: Vec<usize> = (0..2 * n).filter(|k| *k < start || *k >= start + n).collect();
    let mut r = CheckReport::labelled(Condition::Subalgebra, label);
    for i in start..start + n {
        for j in start..start + n {
            let v = big.bracket_basis(i, j);
            let stray = Vector::new(outside.iter().map(|k| v[*k].clone()).collect());
            r.expect_zero_vector(Condition::Subalgebra, &[i, j], stray);
        }
        let v = big.twist().column(i);
        let stray = Vector::new(outside.iter().map(|k| v[*k].clone()).collect());
        r.expect_zero_vector(Condition::TwistIntertwining, &[i], stray);
    }
    r
}

fn block_isotropic(form: &BilinearForm, start: usize, n: usize, label: &str) -> CheckReport {
    let mut r = CheckReport::labelled(Condition::Isotropic, label);
    for i in start..start + n {
        for j in start..start + n {
            r.expect_zero_scalar(Condition::Isotropic, &[i, j], form.gram().get(i, j).clone());
        }
    }
    r
}

/// `(g ⊕ g*; g, g*)` with the standard form: Hom-Lie, both blocks isotropic
/// subalgebras, and the form invariant.
pub fn validate_manin_triple(big: &HomLieAlgebra, n: usize) -> Result<CheckReport> {
    if big.dim() != 2 * n {
        return Err(Error::dimension(
            "validate_manin_triple",
            format!("algebra has dim {}, expected {}", big.dim(), 2 * n),
        ));
    }
    let form = standard_form(n);
    let invariance = check_invariant_form(big, &form)?;
    Ok(CheckReport::all_of(
        Condition::ManinTriple,
        vec![
            validate_hom_lie(big),
            block_subalgebra(big, 0, n, "g"),
            block_subalgebra(big, n, n, "g*"),
            block_isotropic(&form, 0, n, "g"),
            block_isotropic(&form, n, n, "g*"),
            invariance,
        ],
    ))
}

/// `ρ°(x) = −ρ(φx)ᵀ` for the adjoint, without the weak-involutivity gate.
fn formal_coadjoint(a: &HomLieAlgebra) -> Vec<Matrix> {
    (0..a.dim()).map(|i| -&a.ad_of(&a.twist().column(i)).transpose()).collect()
}

/// The `d`-bracket on `g ⊕ g*` with actions `ad°` and `𝔞𝔡°`, twist `φ ⊕ φᵀ`.
pub fn manin_double(bi: &HomLieBialgebra) -> HomLieAlgebra {
    let g = bi.algebra();
    let dual = bi.dual();
    double_bracket(g, &dual, &formal_coadjoint(g), &formal_coadjoint(&dual), format!("{}⊕{}*", g.label(), g.label()))
}

/// The matched pair `(g, g*; ad°, 𝔞𝔡°)`; fails with the refusal report when either
/// Hom-dual cannot be formed.
pub fn coadjoint_matched_pair(bi: &HomLieBialgebra) -> std::result::Result<MatchedPair, Box<CheckReport>> {
    let refusal = |e: Error| {
        Box::new(e.report().cloned().unwrap_or_else(|| {
            let mut r = CheckReport::verdict(Condition::MatchedPair, "construction", false);
            r.note(e.to_string());
            r
        }))
    };
    let g = bi.algebra();
    let dual = bi.dual();
    let rho = hom_dual_representation(&adjoint_rep(g)).map_err(refusal)?;
    let rho2 = hom_dual_representation(&adjoint_rep(&dual)).map_err(refusal)?;
    MatchedPair::new(rho, rho2).map_err(refusal)
}

/// Bialgebra, matched pair and Manin triple verdicts, computed independently.
/// Passes iff all three agree.
pub fn check_triple_equivalence(bi: &HomLieBialgebra) -> CheckReport {
    let n = bi.algebra().dim();
    let bialgebra = validate_bialgebra(bi);
    let matched = match coadjoint_matched_pair(bi) {
        Ok(mp) => validate_matched_pair(&mp),
        Err(refusal) => {
            let mut r = CheckReport::verdict(Condition::MatchedPair, "hom-dual refused", false);
            r.attach(*refusal);
            r
        }
    };
    let manin = validate_manin_triple(&manin_double(bi), n).expect("double has dim 2n");
    let verdicts = [bialgebra.passed, matched.passed, manin.passed];
    let mut report = CheckReport::new(Condition::TripleEquivalence);
    report.flag("bialgebra", verdicts[0]);
    report.flag("matched-pair", verdicts[1]);
    report.flag("manin-triple", verdicts[2]);
    report.absorb(CheckReport::agreement("bialgebra vs matched pair", verdicts[0], verdicts[1]));
    report.absorb(CheckReport::agreement("bialgebra vs Manin triple", verdicts[0], verdicts[2]));
    report.attach(bialgebra);
    report.attach(matched);
    report.attach(manin);
    report
}

/// Algebra homomorphism plus `(f ⊗ f)Δ₁ = Δ₂ f`.
pub fn check_bialgebra_homomorphism(f: &Matrix, bi1: &HomLieBialgebra, bi2: &HomLieBialgebra) -> Result<CheckReport> {
    let alg = check_homomorphism(f, bi1.algebra(), bi2.algebra())?;
    let mut co = CheckReport::new(Condition::CobracketIntertwining);
    for k in 0..bi1.algebra().dim() {
        let lhs = apply_pair(f, f, &bi1.cobracket.delta(k))?;
        let rhs = bi2.cobracket.delta_of(&f.column(k));
        co.expect_zero_matrix(Condition::CobracketIntertwining, &[k], &lhs - &rhs);
    }
    Ok(CheckReport::all_of(Condition::BialgebraHomomorphism, vec![alg, co]))
}
