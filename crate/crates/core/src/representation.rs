//! Representations `(V, β, ρ)` of Hom-Lie algebras, Hom-duals and semidirect products.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hom_lie::{is_weakly_involutive, validate_hom_lie, HomLieAlgebra};
use crate::report::{CheckReport, Condition};
use crate::tensor::{inverse, Matrix, Tensor3, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    base: HomLieAlgebra,
    beta: Matrix,
    action: Vec<Matrix>,
}

impl Representation {
    /// `action[i]` is the matrix of `ρ(e_i)` on the carrier.
    pub fn new(base: HomLieAlgebra, beta: Matrix, action: Vec<Matrix>) -> Result<Self> {
        let m = beta.rows();
        if !beta.is_square() {
            return Err(Error::dimension("Representation::new", format!("beta is {:?}", beta.shape())));
        }
        if action.len() != base.dim() {
            return Err(Error::dimension(
                "Representation::new",
                format!("{} action matrices for an algebra of dim {}", action.len(), base.dim()),
            ));
        }
        if let Some((i, a)) = action.iter().enumerate().find(|(_, a)| a.shape() != (m, m)) {
            return Err(Error::dimension(
                "Representation::new",
                format!("action of e{} is {:?}, carrier has dim {m}", i + 1, a.shape()),
            ));
        }
        Ok(Representation { base, beta, action })
    }

    pub fn zero(base: HomLieAlgebra, beta: Matrix) -> Self {
        let m = beta.rows();
        let action = vec![Matrix::zeros(m, m); base.dim()];
        Representation { base, beta, action }
    }

    pub fn base(&self) -> &HomLieAlgebra {
        &self.base
    }

    pub fn carrier_dim(&self) -> usize {
        self.beta.rows()
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x)` by linearity.
    pub fn action_of(&self, x: &Vector) -> Matrix {
        let m = self.carrier_dim();
        x.support().fold(Matrix::zeros(m, m), |acc, (i, c)| &acc + &self.action[i].scale(c))
    }

    /// `ρ(φ^k e_i)` for each `i`.
    fn twisted_actions(&self, k: u32) -> Vec<Matrix> {
        let phik = self.base.twist().pow(k);
        (0..self.base.dim()).map(|i| self.action_of(&phik.column(i))).collect()
    }
}

/// `ρ(φx)β = βρ(x)` and `ρ([x,y])β = ρ(φx)ρ(y) − ρ(φy)ρ(x)` on basis elements.
pub fn validate_representation(r: &Representation) -> CheckReport {
    let n = r.base.dim();
    let phi_act = r.twisted_actions(1);
    let mut twist = CheckReport::new(Condition::RepTwistAxiom);
    for i in 0..n {
        let res = &(&phi_act[i] * &r.beta) - &(&r.beta * &r.action[i]);
        twist.expect_zero_matrix(Condition::RepTwistAxiom, &[i], res);
    }
    let mut bracket = CheckReport::new(Condition::RepBracketAxiom);
    for i in 0..n {
        for j in 0..n {
            let lhs = &r.action_of(&r.base.bracket_basis(i, j)) * &r.beta;
            let rhs = &(&phi_act[i] * &r.action[j]) - &(&phi_act[j] * &r.action[i]);
            bracket.expect_zero_matrix(Condition::RepBracketAxiom, &[i, j], &lhs - &rhs);
        }
    }
    CheckReport::all_of(Condition::Representation, vec![twist, bracket])
}

/// The adjoint representation `(g, φ, ad)`.
pub fn adjoint_rep(a: &HomLieAlgebra) -> Representation {
    let action = (0..a.dim()).map(|i| a.ad(i)).collect();
    Representation { base: a.clone(), beta: a.twist().clone(), action }
}

/// `ρ(φ²(e_i)) = ρ(e_i)` for all `i`.
pub fn is_weakly_involutive_rep(r: &Representation) -> CheckReport {
    let mut report = CheckReport::new(Condition::WeaklyInvolutiveRep);
    for (i, m) in r.twisted_actions(2).iter().enumerate() {
        report.expect_zero_matrix(Condition::WeaklyInvolutiveRep, &[i], m - &r.action[i]);
    }
    report
}

/// The two conditions under which `(V*, β*, ρ°)` is a representation:
/// `βρ(x) = βρ(φ²x)` and `ρ(φ²[x,y])β = ρ(φx)ρ(φ²y) − ρ(φy)ρ(φ²x)`.
pub fn hom_dual_conditions(r: &Representation) -> CheckReport {
    let n = r.base.dim();
    let phi_act = r.twisted_actions(1);
    let phi2_act = r.twisted_actions(2);
    let phi2 = r.base.twist().pow(2);
    let mut first = CheckReport::new(Condition::HomDualTwistCondition);
    for i in 0..n {
        let res = &(&r.beta * &r.action[i]) - &(&r.beta * &phi2_act[i]);
        first.expect_zero_matrix(Condition::HomDualTwistCondition, &[i], res);
    }
    let mut second = CheckReport::new(Condition::HomDualBracketCondition);
    for i in 0..n {
        for j in 0..n {
            let lhs = &r.action_of(&phi2.mul_vec(&r.base.bracket_basis(i, j))) * &r.beta;
            let rhs = &(&phi_act[i] * &phi2_act[j]) - &(&phi_act[j] * &phi2_act[i]);
            second.expect_zero_matrix(Condition::HomDualBracketCondition, &[i, j], &lhs - &rhs);
        }
    }
    CheckReport::all_of(Condition::Representation, vec![first, second]).with_label("hom-dual conditions")
}

/// `(V*, β*, ρ°)` with `ρ°(x) = −ρ(φx)ᵀ`; refused unless `ρ` is weakly involutive.
pub fn hom_dual_representation(r: &Representation) -> Result<Representation> {
    let wi = is_weakly_involutive_rep(r);
    if !wi.passed {
        let mut report = CheckReport::new(Condition::WeaklyInvolutiveRep).with_label("hom-dual precondition");
        report.absorb(wi);
        report.attach(hom_dual_conditions(r));
        return Err(Error::precondition("hom_dual_representation", report));
    }
    let action = r.twisted_actions(1).iter().map(|m| -&m.transpose()).collect();
    Ok(Representation { base: r.base.clone(), beta: r.beta.transpose(), action })
}

/// `(ρ°)° = ρ`, including the twist.
pub fn rep_double_dual_is_identity(r: &Representation) -> CheckReport {
    let mut report = CheckReport::new(Condition::DoubleDual);
    let twice = hom_dual_representation(r).and_then(|d| hom_dual_representation(&d));
    match twice {
        Ok(dd) => {
            for i in 0..r.base.dim() {
                report.expect_zero_matrix(Condition::DoubleDual, &[i], &dd.action[i] - &r.action[i]);
            }
            report.expect_zero_matrix(Condition::TwistIntertwining, &[], &dd.beta - &r.beta);
        }
        Err(e) => {
            report.passed = false;
            match e.report() {
                Some(inner) => report.attach(inner.clone()),
                None => report.note(e.to_string()),
            }
        }
    }
    report
}

/// `g ⋉_ρ V` on the basis `(e_1..e_n, v_1..v_m)` with twist `φ ⊕ β`.
pub fn semidirect_product(r: &Representation) -> Result<HomLieAlgebra> {
    let mut pre = CheckReport::new(Condition::Hypothesis).with_label("semidirect inputs");
    pre.absorb(validate_hom_lie(&r.base));
    pre.absorb(validate_representation(r));
    if !pre.passed {
        return Err(Error::precondition("semidirect_product", pre));
    }
    Ok(semidirect_unchecked(r))
}

pub(crate) fn semidirect_unchecked(r: &Representation) -> HomLieAlgebra {
    let n = r.base.dim();
    let m = r.carrier_dim();
    let mut c = Tensor3::cube(n + m);
    for ((i, j, k), v) in r.base.bracket().support() {
        c.set(i, j, k, v.clone());
    }
    for (i, act) in r.action.iter().enumerate() {
        for a in 0..m {
            for b in 0..m {
                let v = act.get(a, b);
                if !v.is_zero() {
                    c.set(i, n + b, n + a, v.clone());
                    c.set(n + b, i, n + a, -v.clone());
                }
            }
        }
    }
    let twist = r.base.twist().direct_sum(&r.beta);
    HomLieAlgebra::new(format!("{}⋉V", r.base.label()), c, twist).expect("block shapes agree")
}

/// Compares the criteria for weak involutivity of `g ⋉_ρ V` with a direct check.
/// The report passes when the two verdicts agree; flags carry both verdicts.
pub fn semidirect_weak_involutivity_criteria(r: &Representation) -> Result<CheckReport> {
    let product = semidirect_product(r)?;
    let beta2 = r.beta.pow(2);
    let mut third = CheckReport::labelled(Condition::BetaSquaredAction, "ρ(x)β² = ρ(x)");
    for (i, act) in r.action.iter().enumerate() {
        third.expect_zero_matrix(Condition::BetaSquaredAction, &[i], &(act * &beta2) - act);
    }
    let criteria = vec![
        is_weakly_involutive(&r.base).with_label("criterion (i)"),
        is_weakly_involutive_rep(r).with_label("criterion (ii)"),
        third.with_label("criterion (iii)"),
    ];
    Ok(compare_criteria("semidirect product", criteria, is_weakly_involutive(&product)))
}

/// The dual variant for `g ⋉_{ρ°} V*`: `g` weakly involutive and `ρ(φx)β² = ρ(φx)`.
pub fn dual_semidirect_weak_involutivity_criteria(r: &Representation) -> Result<CheckReport> {
    let dual = hom_dual_representation(r)?;
    let product = semidirect_product(&dual)?;
    let beta2 = r.beta.pow(2);
    let mut second = CheckReport::labelled(Condition::BetaSquaredAction, "ρ(φx)β² = ρ(φx)");
    for (i, act) in r.twisted_actions(1).iter().enumerate() {
        second.expect_zero_matrix(Condition::BetaSquaredAction, &[i], &(act * &beta2) - act);
    }
    let criteria = vec![is_weakly_involutive(&r.base).with_label("criterion (i)"), second.with_label("criterion (ii)")];
    Ok(compare_criteria("dual semidirect product", criteria, is_weakly_involutive(&product)))
}

pub(crate) fn compare_criteria(what: &str, criteria: Vec<CheckReport>, direct: CheckReport) -> CheckReport {
    let combined = criteria.iter().all(|c| c.passed);
    let mut report = CheckReport::labelled(Condition::SemidirectCriteria, what);
    report.flag("criteria", combined);
    report.flag("direct", direct.passed);
    report.absorb(CheckReport::agreement("criteria vs direct check", combined, direct.passed));
    for c in criteria {
        report.attach(c);
    }
    report.attach(direct.with_label("direct check"));
    report
}

/// `φρ(x) = ρ'(x)φ` and `β'φ = φβ` for a given isomorphism `φ: V → V'`.
pub fn check_rep_equivalence(r: &Representation, r2: &Representation, map: &Matrix) -> Result<CheckReport> {
    if r.base.dim() != r2.base.dim() {
        return Err(Error::dimension(
            "check_rep_equivalence",
            format!("base algebras have dims {} and {}", r.base.dim(), r2.base.dim()),
        ));
    }
    if map.shape() != (r2.carrier_dim(), r.carrier_dim()) || !map.is_square() {
        return Err(Error::dimension(
            "check_rep_equivalence",
            format!("map is {:?}, carriers have dims {} and {}", map.shape(), r.carrier_dim(), r2.carrier_dim()),
        ));
    }
    if inverse(map).is_none() {
        return Err(Error::Singular("equivalence map".into()));
    }
    let mut action = CheckReport::new(Condition::ActionIntertwining);
    for i in 0..r.base.dim() {
        let res = &(map * &r.action[i]) - &(&r2.action[i] * map);
        action.expect_zero_matrix(Condition::ActionIntertwining, &[i], res);
    }
    let mut twist = CheckReport::new(Condition::TwistIntertwining);
    twist.expect_zero_matrix(Condition::TwistIntertwining, &[], &(&r2.beta * map) - &(map * &r.beta));
    Ok(CheckReport::all_of(Condition::RepEquivalence, vec![action, twist]))
}
