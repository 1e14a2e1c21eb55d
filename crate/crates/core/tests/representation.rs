use homlie::corpus::{self, builtin};
use homlie::hom_lie::{validate_hom_lie, HomLieAlgebra};
use homlie::random::{seeded, small_matrix};
use homlie::representation::*;
use homlie::tensor::Matrix;
use homlie::{Condition, Error};

fn algebra(name: &str) -> HomLieAlgebra {
    builtin(name).unwrap().algebra.unwrap()
}

fn rep(base: HomLieAlgebra, actions: [&[&[i64]]; 2]) -> Representation {
    Representation::new(base, Matrix::identity(2), actions.iter().map(|m| Matrix::from_i64(m)).collect()).unwrap()
}

/// Every representation the corpus offers: adjoints, Hom-duals where defined, L-representations.
fn corpus_reps() -> Vec<Representation> {
    let mut out = Vec::new();
    for s in corpus::all() {
        if let Some(r) = s.representation {
            out.push(r);
        }
        let Some(a) = s.algebra else { continue };
        if !validate_hom_lie(&a).passed {
            continue;
        }
        let ad = adjoint_rep(&a);
        if let Ok(co) = hom_dual_representation(&ad) {
            out.push(co);
        }
        out.push(ad);
    }
    out
}

#[test]
fn adjoints_of_valid_algebras_are_representations() {
    for s in corpus::all() {
        let Some(a) = s.algebra else { continue };
        if validate_hom_lie(&a).passed {
            assert!(validate_representation(&adjoint_rep(&a)).passed, "{}", a.label());
        }
    }
    let ad = adjoint_rep(&algebra("abelian2"));
    assert!(ad.actions().iter().all(Matrix::is_zero));
}

#[test]
fn hand_built_aff2_representations() {
    let good = rep(algebra("aff2"), [&[&[0, 0], &[0, 0]], &[&[1, 0], &[0, 1]]]);
    assert!(validate_representation(&good).passed);
    let bad = rep(algebra("aff2"), [&[&[1, 0], &[0, 1]], &[&[0, 0], &[0, 0]]]);
    let report = validate_representation(&bad);
    assert!(!report.passed);
    let w = report.find(Condition::RepBracketAxiom).unwrap().first_witness().unwrap();
    assert_eq!(w.basis, vec![1, 2]);
}

#[test]
fn coadjoint_of_aff2_is_minus_transpose() {
    let a = algebra("aff2");
    let ad = adjoint_rep(&a);
    let co = hom_dual_representation(&ad).unwrap();
    for i in 0..2 {
        assert_eq!(co.action(i), &-&a.ad(i).transpose());
    }
    assert!(validate_representation(&co).passed);
    assert!(rep_double_dual_is_identity(&co).passed);
}

#[test]
fn zero_representation_dualizes_to_zero() {
    let z = Representation::zero(algebra("abelian2"), Matrix::identity(3));
    let d = hom_dual_representation(&z).unwrap();
    assert!(d.actions().iter().all(Matrix::is_zero));
    assert!(rep_double_dual_is_identity(&z).passed);
}

#[test]
fn hom_dual_of_weakly_involutive_reps_is_weakly_involutive() {
    let mut count = 0;
    for r in corpus_reps() {
        if !is_weakly_involutive_rep(&r).passed {
            continue;
        }
        let d = hom_dual_representation(&r).unwrap();
        assert!(validate_representation(&d).passed, "{}", r.base().label());
        assert!(is_weakly_involutive_rep(&d).passed, "{}", r.base().label());
        assert!(rep_double_dual_is_identity(&r).passed, "{}", r.base().label());
        count += 1;
    }
    assert!(count >= 10);
}

#[test]
fn hom_dual_refuses_non_weakly_involutive_reps() {
    for name in ["aff2phi", "aff2bad"] {
        let ad = adjoint_rep(&algebra(name));
        assert!(!is_weakly_involutive_rep(&ad).passed, "{name}");
        let err = hom_dual_representation(&ad).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }), "{name}");
        assert!(!rep_double_dual_is_identity(&ad).passed, "{name}");
    }
}

#[test]
fn semidirect_products() {
    let a = algebra("aff2");
    let big = semidirect_product(&adjoint_rep(&a)).unwrap();
    assert_eq!(big.dim(), 4);
    assert!(validate_hom_lie(&big).passed);
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(big.bracket_basis(i, j).entries()[..2], a.bracket_basis(i, j).entries()[..]);
            assert!(big.bracket_basis(2 + i, 2 + j).is_zero());
        }
    }
    let co = hom_dual_representation(&adjoint_rep(&a)).unwrap();
    assert!(validate_hom_lie(&semidirect_product(&co).unwrap()).passed);

    let z = Representation::zero(algebra("abelian2"), Matrix::identity(1));
    let abelian = semidirect_product(&z).unwrap();
    assert_eq!(abelian.dim(), 3);
    assert!(abelian.bracket().is_zero());
}

#[test]
fn semidirect_criteria_agree_with_direct_checks() {
    let report = semidirect_weak_involutivity_criteria(&adjoint_rep(&algebra("aff2"))).unwrap();
    assert!(report.passed);
    assert_eq!(report.get_flag("criteria"), Some(true));
    assert_eq!(report.get_flag("direct"), Some(true));

    let report = semidirect_weak_involutivity_criteria(&adjoint_rep(&algebra("aff2bad"))).unwrap();
    assert!(report.passed);
    assert_eq!(report.get_flag("criteria"), Some(false));
    assert_eq!(report.get_flag("direct"), Some(false));

    let mut rng = seeded(31);
    let mut reps = corpus_reps();
    for s in corpus::all() {
        let Some(a) = s.algebra else { continue };
        if validate_hom_lie(&a).passed {
            for _ in 0..3 {
                reps.push(Representation::zero(a.clone(), small_matrix(&mut rng, 2, 2)));
            }
        }
    }
    for r in &reps {
        let report = semidirect_weak_involutivity_criteria(r).unwrap();
        assert!(report.passed, "{}: {report}", r.base().label());
        if is_weakly_involutive_rep(r).passed {
            let report = dual_semidirect_weak_involutivity_criteria(r).unwrap();
            assert!(report.passed, "{}: {report}", r.base().label());
        }
    }
}

#[test]
fn beta_squared_identity_holds_trivially_over_abelian() {
    let a = algebra("abelian2");
    let z = Representation::zero(a, Matrix::from_i64(&[&[0, 1], &[1, 0]]));
    let report = semidirect_weak_involutivity_criteria(&z).unwrap();
    assert!(report.find(Condition::BetaSquaredAction).unwrap().passed);
}

#[test]
fn equivalences() {
    let ad = adjoint_rep(&algebra("aff2"));
    assert!(check_rep_equivalence(&ad, &ad, &Matrix::identity(2)).unwrap().passed);
    let two = Matrix::identity(2).scale(&homlie::tensor::rat(2));
    assert!(check_rep_equivalence(&ad, &ad, &two).unwrap().passed);
    assert!(matches!(check_rep_equivalence(&ad, &ad, &Matrix::zeros(2, 2)), Err(Error::Singular(_))));

    let sl2 = algebra("sl2");
    let ad = adjoint_rep(&sl2);
    let co = hom_dual_representation(&ad).unwrap();
    let killing = Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    assert!(check_rep_equivalence(&ad, &co, &killing).unwrap().passed);
    assert!(!check_rep_equivalence(&ad, &co, &Matrix::identity(3)).unwrap().passed);
}
