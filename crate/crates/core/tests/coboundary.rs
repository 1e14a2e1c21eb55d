#![allow(clippy::needless_range_loop)]

mod common;

use common::{delta, m_raw, q, raw, zeros2};
use homlie::bialgebra::{dual_algebra, Cobracket, HomLieBialgebra};
use homlie::coboundary::*;
use homlie::corpus::{self, builtin};
use homlie::hom_lie::{is_weakly_involutive, validate_hom_lie, HomLieAlgebra};
use homlie::random::{combination, seeded, small_matrix};
use homlie::tensor::{wedge_basis, Matrix, Vector};
use homlie::{Condition, Error, Residual};

fn algebra(name: &str) -> HomLieAlgebra {
    builtin(name).unwrap().algebra.unwrap()
}

fn r(name: &str, m: &[&[i64]]) -> RMatrix {
    RMatrix::new(algebra(name), Matrix::from_i64(m)).unwrap()
}

fn weakly_involutive_algebras() -> Vec<HomLieAlgebra> {
    corpus::all()
        .into_iter()
        .filter_map(|s| s.algebra)
        .filter(|a| validate_hom_lie(a).passed && is_weakly_involutive(a).passed)
        .collect()
}

const SYMMETRIC: &[&[i64]] = &[&[0, 1], &[1, 0]];
const TRIANGULAR: &[&[i64]] = &[&[0, 1], &[-1, 0]];

#[test]
fn twist_compatibility_on_aff2phi() {
    assert!(check_twist_compat(&r("aff2phi", &[&[1, 0], &[0, 0]])).passed);
    let report = check_twist_compat(&r("aff2phi", &[&[0, 0], &[1, 0]]));
    assert!(!report.passed);
    // (φ⊗id)(e2⊗e1) − (id⊗φ)(e2⊗e1) = e1⊗e1
    assert_eq!(report.first_witness().unwrap().residual, Residual::Matrix(Matrix::from_i64(&[&[1, 0], &[0, 0]])));
    let mut rng = seeded(3);
    assert!(check_twist_compat(&RMatrix::new(algebra("sl2"), small_matrix(&mut rng, 3, 3)).unwrap()).passed);
}

#[test]
fn twist_compatible_space_solves_the_constraint() {
    let mut rng = seeded(4);
    for a in corpus::all().into_iter().filter_map(|s| s.algebra) {
        let n = a.dim();
        for skew in [false, true] {
            let space = twist_compatible_space(&a, skew);
            for _ in 0..5 {
                let m = combination(&mut rng, &space, n, n);
                assert!(check_twist_compat(&RMatrix::new(a.clone(), m.clone()).unwrap()).passed, "{}", a.label());
                if skew {
                    assert_eq!(m, -&m.transpose());
                }
            }
        }
    }
}

#[test]
fn cobracket_examples() {
    let mut rng = seeded(5);
    let ab = RMatrix::new(algebra("abelian2"), small_matrix(&mut rng, 2, 2)).unwrap();
    assert!(cobracket_from_r(&ab).coeffs().is_zero());
    assert!(r_square_bracket(&ab).is_zero());

    let cb = cobracket_from_r(&r("aff2", TRIANGULAR));
    assert!(cb.delta(0).is_zero());
    assert_eq!(cb.delta(1), -&wedge_basis(2, 0, 1));

    let cb = cobracket_from_r(&r("aff2", &[&[1, 0], &[0, 0]]));
    assert!(cb.delta(0).is_zero());
    assert_eq!(cb.delta(1), Matrix::from_i64(&[&[-2, 0], &[0, 0]]));
}

#[test]
fn jacobiators_of_cobrackets() {
    let a = algebra("aff2");
    let zero = Cobracket::zero(a.clone());
    let tri = cobracket_from_r(&r("aff2", TRIANGULAR));
    for k in 0..2 {
        assert!(jac_delta(&zero, k).is_zero());
        assert!(jac_delta(&tri, k).is_zero());
    }
    // Outside condition (i) the identity is not asserted; the computation still runs.
    let sym = r("aff2", SYMMETRIC);
    assert!(matches!(lemma46_check(&sym), Err(Error::Precondition { .. })));
    let cb = cobracket_from_r(&sym);
    let rr = r_square_bracket(&sym);
    let differs = (0..2).any(|k| jac_delta(&cb, k) != ad_phi_on_tensor3(&a, &a.basis(k), &rr).unwrap());
    assert!(differs);
}

#[test]
fn symmetric_part_invariance_examples() {
    let mut rng = seeded(6);
    for a in weakly_involutive_algebras() {
        let n = a.dim();
        let m = small_matrix(&mut rng, n, n);
        let skew = RMatrix::new(a.clone(), &m - &m.transpose()).unwrap();
        assert!(symmetric_part_invariance(&skew).passed, "{}", a.label());
    }
    let ab = RMatrix::new(algebra("abelian2"), small_matrix(&mut rng, 2, 2)).unwrap();
    assert!(symmetric_part_invariance(&ab).passed);
    let report = symmetric_part_invariance(&r("aff2", SYMMETRIC));
    let ks: Vec<_> = report.witnesses.iter().map(|w| w.basis.clone()).collect();
    assert!(ks.contains(&vec![2]));
}

#[test]
fn coboundary_classification() {
    let out = validate_coboundary(&r("aff2", TRIANGULAR)).unwrap();
    assert!(out.report.passed);
    assert_eq!(out.classification, Some(Classification::Triangular));

    let out = validate_coboundary(&r("abelian2", &[&[1, 2], &[-2, 0]])).unwrap();
    assert!(out.report.passed);
    assert_eq!(out.classification, Some(Classification::Quasitriangular));
    let out = validate_coboundary(&r("abelian2", TRIANGULAR)).unwrap();
    assert_eq!(out.classification, Some(Classification::Triangular));

    let sym = r("aff2", SYMMETRIC);
    let out = validate_coboundary(&sym).unwrap();
    assert!(!out.report.passed);
    assert_eq!(out.report.get_flag("conditions"), Some(false));
    assert_eq!(out.report.get_flag("dual-weakly-involutive"), Some(false));
    assert!(out.report.find_labelled("conditions vs induced dual").unwrap().passed);
    let dual = dual_algebra(&cobracket_from_r(&sym));
    assert!(!validate_hom_lie(&dual).find(Condition::Skew).unwrap().passed);

    assert!(matches!(validate_coboundary(&r("aff2phi", &[&[1, 0], &[0, 0]])), Err(Error::Precondition { .. })));
}

#[test]
fn common_factor_identities_with_identity_twist() {
    let mut rng = seeded(7);
    for name in ["aff2", "heis3", "sl2"] {
        let a = algebra(name);
        let m = small_matrix(&mut rng, a.dim(), a.dim());
        let report = lemma44_residuals(&RMatrix::new(a, m).unwrap()).unwrap();
        assert!(report.passed, "{name}");
    }
}

#[test]
fn common_factor_identities_on_aff2phi() {
    let a = algebra("aff2phi");
    assert!(matches!(lemma44_residuals(&r("aff2phi", &[&[1, 0], &[0, 0]])), Err(Error::Precondition { .. })));
    assert!(common_factor_residuals(&r("aff2phi", &[&[1, 0], &[0, 0]])).unwrap().passed);

    let report = common_factor_residuals(&r("aff2phi", &[&[0, 0], &[1, 0]])).unwrap();
    let first = report.find(Condition::CoboundaryHomomorphism).unwrap();
    let w = first.first_witness().unwrap();
    assert_eq!(w.basis, vec![2]);
    assert_eq!(w.residual, Residual::Matrix(Matrix::from_i64(&[&[2, 0], &[0, 0]])));
    assert!(report.find(Condition::CoboundaryInvolutivity).unwrap().passed);

    // LHS of (a) at x = e2 from the nested-loop cobracket: δ(φe2) − (φ⊗φ)δ(e2)
    let (c, phi) = raw(&a);
    let rr = vec![vec![q(0), q(0)], vec![q(1), q(0)]];
    let d = delta(&c, &phi, &rr);
    let mut lhs = zeros2(2);
    for i in 0..2 {
        for j in 0..2 {
            for p in 0..2 {
                lhs[i][j] += &phi[p][1] * &d[p][i][j];
                for s in 0..2 {
                    lhs[i][j] -= &phi[i][p] * &phi[j][s] * &d[1][p][s];
                }
            }
        }
    }
    assert_eq!(lhs, m_raw(&Matrix::from_i64(&[&[2, 0], &[0, 0]])));
}

#[test]
fn dual_bracket_routes() {
    let tri = r("aff2", TRIANGULAR);
    let via_sharp = dual_bracket_from_r(&tri).unwrap();
    assert_eq!(via_sharp.bracket_basis(0, 1), Vector::from_i64(&[0, -1]));
    assert!(check_dual_bracket_routes(&tri).unwrap().passed);
    let zero = r("aff2", &[&[0, 0], &[0, 0]]);
    assert!(dual_bracket_from_r(&zero).unwrap().bracket().is_zero());
    assert_eq!(r_sharp(&r("aff2", &[&[1, 0], &[0, 1]])), Matrix::identity(2));

    let mut rng = seeded(9);
    for a in weakly_involutive_algebras() {
        let n = a.dim();
        let space = twist_compatible_space(&a, false);
        for _ in 0..10 {
            let rm = RMatrix::new(a.clone(), combination(&mut rng, &space, n, n)).unwrap();
            assert!(check_dual_bracket_routes(&rm).unwrap().passed, "{}", a.label());
            assert!(lemma_4_13_identity(&rm).unwrap().passed, "{}", a.label());
        }
    }
}

#[test]
fn sharp_identity_examples() {
    let tri = r("aff2", TRIANGULAR);
    assert!(lemma_4_13_identity(&tri).unwrap().passed);
    assert!(sharp_homomorphism(&tri).unwrap().passed);
    assert!(lemma_4_13_identity(&r("aff2", &[&[0, 0], &[0, 0]])).unwrap().passed);
    let sym = r("aff2", SYMMETRIC);
    assert!(!r_square_bracket(&sym).is_zero());
    assert!(lemma_4_13_identity(&sym).unwrap().passed);
    assert!(!sharp_homomorphism(&sym).unwrap().passed);
}

#[test]
fn forms_from_invertible_r() {
    let (form, report) = form_from_invertible_r(&r("aff2", TRIANGULAR)).unwrap();
    assert!(report.passed, "{report}");
    assert_eq!(report.get_flag("chybe"), Some(true));
    assert_eq!(form.gram(), &Matrix::from_i64(&[&[0, -1], &[1, 0]]));
    assert!(form_from_invertible_r(&r("abelian2", TRIANGULAR)).unwrap().1.passed);
    assert!(matches!(form_from_invertible_r(&r("aff2", &[&[1, 1], &[-1, 0]])), Err(Error::Precondition { .. })));
    assert!(matches!(form_from_invertible_r(&r("aff2", &[&[0, 0], &[0, 0]])), Err(Error::Singular(_))));
}

#[test]
fn hom_doubles() {
    let cases = [
        HomLieBialgebra::new(builtin("aff2-zero").unwrap().cobracket.unwrap()),
        HomLieBialgebra::new(builtin("aff2-triangular").unwrap().cobracket.unwrap()),
        HomLieBialgebra::new(Cobracket::zero(algebra("abelian2"))),
    ];
    for bi in cases {
        let d = hom_double(&bi).unwrap();
        assert_eq!(d.algebra.dim(), 4);
        assert!(d.report.passed, "{}", d.report);
        assert!(validate_hom_lie(&d.algebra).passed);
        assert!(r_square_bracket(&d.r).is_zero());
    }
    let d = hom_double(&HomLieBialgebra::new(Cobracket::zero(algebra("abelian2")))).unwrap();
    assert!(d.algebra.bracket().is_zero());
}
