//! Named example structures, addressable as `builtin:NAME`.

use serde::Serialize;

use crate::bialgebra::Cobracket;
use crate::coboundary::{cobracket_from_r, RMatrix};
use crate::error::{Error, Result};
use crate::format::Structure;
use crate::hom_lie::HomLieAlgebra;
use crate::operators::{commutator_hom_lie, left_mult_rep, HomLeftSymmetric};
use crate::tensor::{Matrix, Tensor3, Vector};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Builtin {
    pub name: &'static str,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    pub aliases: &'static [&'static str],
    pub description: &'static str,
    /// Whether the structure is expected to pass its own validators.
    pub valid: bool,
}

pub const BUILTINS: &[Builtin] = &[
    Builtin { name: "abelian2", aliases: &[], description: "2-dim abelian, φ = Id", valid: true },
    Builtin { name: "aff2", aliases: &[], description: "[e1,e2] = e1, φ = Id", valid: true },
    Builtin {
        name: "aff2phi",
        aliases: &["aff2φ"],
        description: "[e1,e2] = e1, φ(e2) = e1 + e2: Hom-Lie, not weakly involutive",
        valid: true,
    },
    Builtin {
        name: "aff2bad",
        aliases: &[],
        description: "[e1,e2] = e1, φ = diag(2,1): Hom-Lie but not weakly involutive",
        valid: false,
    },
    Builtin { name: "heis3", aliases: &[], description: "Heisenberg [e1,e2] = e3, φ = Id", valid: true },
    Builtin {
        name: "heis3phi",
        aliases: &["heis3φ"],
        description: "[e1,e2] = e3, φ(e1) = e1 + e3: weakly involutive with φ² ≠ Id",
        valid: true,
    },
    Builtin {
        name: "sl2",
        aliases: &[],
        description: "[e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1, φ = Id",
        valid: true,
    },
    Builtin {
        name: "notjac3",
        aliases: &[],
        description: "[e1,e2] = e1, [e1,e3] = e3: fails Hom-Jacobi",
        valid: false,
    },
    Builtin {
        name: "sl2alpha",
        aliases: &["sl2α"],
        description: "[h,e] = -2e, [h,f] = 2f, [e,f] = h, φ = diag(1,-1,-1)",
        valid: true,
    },
    Builtin {
        name: "lsa2",
        aliases: &[],
        description: "e2·e2 = e1, ψ = Id, with its commutator algebra, L and T = Id",
        valid: true,
    },
    Builtin {
        name: "lsa2psi",
        aliases: &["lsa2ψ"],
        description: "e2·e2 = e1, ψ(e2) = e1 + e2, with its commutator algebra, L and T = ψ²",
        valid: true,
    },
    Builtin { name: "lsa1idem", aliases: &[], description: "e·e = e, ψ = 0: u·v = ψ²(u)·v fails", valid: true },
    Builtin { name: "aff2-zero", aliases: &[], description: "aff2 with Δ = 0", valid: true },
    Builtin { name: "aff2-triangular", aliases: &[], description: "aff2 with r = e1∧e2 and Δ = δ_r", valid: true },
];

fn table(label: &str, twist: Matrix, entries: &[(usize, usize, &[i64])]) -> HomLieAlgebra {
    let t: Vec<_> = entries.iter().map(|(i, j, v)| (*i, *j, Vector::from_i64(v))).collect();
    HomLieAlgebra::from_table(label, twist, &t).expect("builtin shapes")
}

fn aff2(label: &str, twist: Matrix) -> HomLieAlgebra {
    table(label, twist, &[(0, 1, &[1, 0])])
}

fn lsa(name: &str, square: &[i64], psi: Matrix) -> HomLeftSymmetric {
    let m = psi.rows();
    let last = m - 1;
    let product = Tensor3::from_fn((m, m, m), |i, j, k| {
        if i == last && j == last {
            crate::tensor::rat(square[k])
        } else {
            crate::tensor::zero()
        }
    });
    HomLeftSymmetric::new(name, product, psi).expect("builtin shapes")
}

fn with_lsa(name: &str, l: HomLeftSymmetric, t: Option<Matrix>) -> Structure {
    let (g, _) = commutator_hom_lie(&l);
    let (rep, _) = left_mult_rep(&l);
    let s = Structure::new(name).with_algebra(g).with_representation(rep).with_lsa(l);
    match t {
        Some(t) => s.with_ooperator(t),
        None => s,
    }
}

/// Canonical name for a builtin, accepting aliases and an optional `builtin:` prefix.
pub fn canonical(name: &str) -> Option<&'static str> {
    let bare = name.strip_prefix("builtin:").unwrap_or(name);
    BUILTINS.iter().find(|b| b.name == bare || b.aliases.contains(&bare)).map(|b| b.name)
}

pub fn builtin(name: &str) -> Result<Structure> {
    let canon = canonical(name).ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
    let id = Matrix::identity;
    let s = Structure::new(canon);
    let s = match canon {
        "abelian2" => s.with_algebra(HomLieAlgebra::abelian(canon, id(2))),
        "aff2" => s.with_algebra(aff2(canon, id(2))),
        "aff2phi" => s.with_algebra(aff2(canon, Matrix::from_i64(&[&[1, 1], &[0, 1]]))),
        "aff2bad" => s.with_algebra(aff2(canon, Matrix::from_i64(&[&[2, 0], &[0, 1]]))),
        "heis3" => s.with_algebra(table(canon, id(3), &[(0, 1, &[0, 0, 1])])),
        "heis3phi" => {
            s.with_algebra(table(canon, Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]), &[(0, 1, &[0, 0, 1])]))
        }
        "sl2" => s.with_algebra(table(canon, id(3), &[(0, 1, &[0, 2, 0]), (0, 2, &[0, 0, -2]), (1, 2, &[1, 0, 0])])),
        "notjac3" => s.with_algebra(table(canon, id(3), &[(0, 1, &[1, 0, 0]), (0, 2, &[0, 0, 1])])),
        "sl2alpha" => s.with_algebra(table(
            canon,
            Matrix::from_i64(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]),
            &[(0, 1, &[0, -2, 0]), (0, 2, &[0, 0, 2]), (1, 2, &[1, 0, 0])],
        )),
        "lsa2" => with_lsa(canon, lsa(canon, &[1, 0], id(2)), Some(id(2))),
        "lsa2psi" => {
            let psi = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
            let t = psi.pow(2);
            with_lsa(canon, lsa(canon, &[1, 0], psi), Some(t))
        }
        "lsa1idem" => with_lsa(canon, lsa(canon, &[1], Matrix::zeros(1, 1)), None),
        "aff2-zero" => {
            let a = aff2(canon, id(2));
            s.with_algebra(a.clone()).with_cobracket(Cobracket::zero(a))
        }
        "aff2-triangular" => {
            let a = aff2(canon, id(2));
            let r = RMatrix::new(a.clone(), Matrix::from_i64(&[&[0, 1], &[-1, 0]]))?;
            let cb = cobracket_from_r(&r);
            s.with_algebra(a).with_rmatrix(r).with_cobracket(cb)
        }
        _ => unreachable!("every canonical name is matched"),
    };
    Ok(s.with_reference(format!("builtin:{canon}")))
}

pub fn all() -> Vec<Structure> {
    BUILTINS.iter().map(|b| builtin(b.name).expect("builtins construct")).collect()
}
