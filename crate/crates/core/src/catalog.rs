//! Built-in example spaces with their expected invariants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{zero_vec, Vector};
use crate::rational::{q, qf, QStr, Q};
use crate::spherical::{RootTerm, WordEntry};

/// Invariants a space is expected to reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub adapted: bool,
    /// `S_z` in simple-root coordinates, sorted.
    pub s_z: Vec<Vec<i64>>,
    /// Primitive facet functionals of `C̄ = {γ ≤ 0}` in simple-root coordinates, sorted.
    pub cone_facets: Vec<Vec<i64>>,
    pub a_h_dim: usize,
    pub a_e_dim: usize,
    pub w_order: usize,
    pub coxeter_type: String,
    /// `Σ_Z` in simple-root coordinates, sorted.
    pub sigma_z: Vec<Vec<i64>>,
    /// Whether the base point itself is admissible.
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub cartan_type: &'static str,
    pub center_dim: usize,
    /// Basis of the reference subalgebra in ambient coordinates.
    pub rows: Vec<Vector>,
    pub base_point_word: Vec<WordEntry>,
    pub quasi_affine_note: &'static str,
    pub description: &'static str,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn lie_algebra(&self) -> LieAlgebra {
        LieAlgebra::from_type(self.cartan_type, self.center_dim).expect("catalog types are valid")
    }
}

enum Term<'a> {
    /// Root vector `X_β` for `β` in simple-root coordinates.
    R(&'a [i64], Q),
    /// Basis vector of `a` (coroots, then the center).
    H(usize, Q),
}

fn element(g: &LieAlgebra, terms: &[Term]) -> Vector {
    let mut v = zero_vec(g.dim());
    for t in terms {
        match t {
            Term::R(root, c) => v[g.root_vector(g.root_id(root).expect("catalog root"))] += c,
            Term::H(i, c) => v[g.a_indices()[*i]] += c,
        }
    }
    v
}

/// `span{X_α − X_{−α} : α > 0}`, the fixed points of the Cartan involution.
fn compact_part(g: &LieAlgebra) -> Vec<Vector> {
    g.positive_roots()
        .map(|r| {
            let c = g.root(r);
            let neg: Vec<i64> = c.iter().map(|x| -x).collect();
            element(g, &[Term::R(&c, q(1)), Term::R(&neg, q(-1))])
        })
        .collect()
}

fn roots(v: &[&[i64]]) -> Vec<Vec<i64>> {
    v.iter().map(|r| r.to_vec()).collect()
}

fn with_negatives(pos: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = pos.iter().flat_map(|r| [r.to_vec(), r.iter().map(|x| -x).collect()]).collect();
    out.sort();
    out
}

const REDUCTIVE_NOTE: &str = "reductive H gives an affine quotient";

pub fn list_entries() -> Vec<CatalogEntry> {
    vec![
        a1_nbar(),
        a2_nbar(),
        a1_so2(),
        a1_so11(),
        a1xa1_diag_w0(),
        a2_so3(),
        a2_levi_horo(),
        a1t1_torus_twist(),
        b2_k(),
        g2_k(),
    ]
}

pub fn names() -> Vec<&'static str> {
    list_entries().iter().map(|e| e.name).collect()
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    list_entries().into_iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

pub fn expected_results(name: &str) -> Result<Expected> {
    entry(name).map(|e| e.expected)
}

fn trivial(a_h_dim: usize, a_e_dim: usize) -> Expected {
    Expected {
        adapted: true,
        s_z: vec![],
        cone_facets: vec![],
        a_h_dim,
        a_e_dim,
        w_order: 1,
        coxeter_type: "trivial".into(),
        sigma_z: vec![],
        admissible: true,
    }
}

fn a1_nbar() -> CatalogEntry {
    let g = LieAlgebra::from_type("A1", 0).unwrap();
    CatalogEntry {
        name: "A1_nbar",
        cartan_type: "A1",
        center_dim: 0,
        rows: vec![element(&g, &[Term::R(&[-1], q(1))])],
        base_point_word: vec![],
        quasi_affine_note: "G/N̄ is quasi-affine (N̄ unipotent)",
        description: "SL(2,R)/N̄, the horospherical space",
        expected: trivial(0, 1),
    }
}

fn a2_nbar() -> CatalogEntry {
    let g = LieAlgebra::from_type("A2", 0).unwrap();
    CatalogEntry {
        name: "A2_nbar",
        cartan_type: "A2",
        center_dim: 0,
        rows: vec![
            element(&g, &[Term::R(&[-1, 0], q(1))]),
            element(&g, &[Term::R(&[0, -1], q(1))]),
            element(&g, &[Term::R(&[-1, -1], q(1))]),
        ],
        base_point_word: vec![],
        quasi_affine_note: "G/N̄ is quasi-affine (N̄ unipotent)",
        description: "SL(3,R)/N̄",
        expected: trivial(0, 2),
    }
}

fn rank_one_symmetric(name: &'static str, sign: i64, description: &'static str) -> CatalogEntry {
    let g = LieAlgebra::from_type("A1", 0).unwrap();
    CatalogEntry {
        name,
        cartan_type: "A1",
        center_dim: 0,
        rows: vec![element(&g, &[Term::R(&[1], q(1)), Term::R(&[-1], q(sign))])],
        base_point_word: vec![],
        quasi_affine_note: REDUCTIVE_NOTE,
        description,
        expected: Expected {
            adapted: true,
            s_z: roots(&[&[2]]),
            cone_facets: roots(&[&[1]]),
            a_h_dim: 0,
            a_e_dim: 0,
            w_order: 2,
            coxeter_type: "A1".into(),
            sigma_z: with_negatives(&[&[1]]),
            admissible: true,
        },
    }
}

fn a1_so2() -> CatalogEntry {
    rank_one_symmetric("A1_so2", -1, "SL(2,R)/SO(2), the Riemannian symmetric space")
}

fn a1_so11() -> CatalogEntry {
    rank_one_symmetric("A1_so11", 1, "SL(2,R)/SO(1,1), realized by the line through e + f")
}

fn a1xa1_diag_w0() -> CatalogEntry {
    let g = LieAlgebra::from_type("A1xA1", 0).unwrap();
    CatalogEntry {
        name: "A1xA1_diag_w0",
        cartan_type: "A1xA1",
        center_dim: 0,
        rows: vec![
            element(&g, &[Term::R(&[1, 0], q(1)), Term::R(&[0, -1], q(-1))]),
            element(&g, &[Term::H(0, q(1)), Term::H(1, q(-1))]),
            element(&g, &[Term::R(&[-1, 0], q(1)), Term::R(&[0, 1], q(-1))]),
        ],
        base_point_word: vec![],
        quasi_affine_note: REDUCTIVE_NOTE,
        description: "group case SL(2,R) × SL(2,R)/diag, diagonal twisted by the longest Weyl element of the second factor",
        expected: Expected {
            adapted: true,
            s_z: roots(&[&[1, 1]]),
            cone_facets: roots(&[&[1, 1]]),
            a_h_dim: 1,
            a_e_dim: 1,
            w_order: 2,
            coxeter_type: "A1".into(),
            sigma_z: with_negatives(&[&[1, 1]]),
            admissible: true,
        },
    }
}

fn a2_so3() -> CatalogEntry {
    let g = LieAlgebra::from_type("A2", 0).unwrap();
    CatalogEntry {
        name: "A2_so3",
        cartan_type: "A2",
        center_dim: 0,
        rows: compact_part(&g),
        base_point_word: vec![],
        quasi_affine_note: REDUCTIVE_NOTE,
        description: "SL(3,R)/SO(3)",
        expected: Expected {
            adapted: true,
            s_z: roots(&[&[0, 2], &[2, 0], &[2, 2]]),
            cone_facets: roots(&[&[0, 1], &[1, 0]]),
            a_h_dim: 0,
            a_e_dim: 0,
            w_order: 6,
            coxeter_type: "A2".into(),
            sigma_z: with_negatives(&[&[1, 0], &[0, 1], &[1, 1]]),
            admissible: true,
        },
    }
}

fn a2_levi_horo() -> CatalogEntry {
    let g = LieAlgebra::from_type("A2", 0).unwrap();
    CatalogEntry {
        name: "A2_levi_horo",
        cartan_type: "A2",
        center_dim: 0,
        rows: vec![
            element(&g, &[Term::R(&[1, 0], q(1))]),
            element(&g, &[Term::R(&[-1, 0], q(1))]),
            element(&g, &[Term::H(0, q(1))]),
            element(&g, &[Term::R(&[0, -1], q(1))]),
            element(&g, &[Term::R(&[-1, -1], q(1))]),
        ],
        base_point_word: vec![],
        quasi_affine_note: "H = SL(2,R) ⋉ N̄_Q has no characters; quasi-affine by Chevalley's theorem",
        description: "SL(3,R)/(SL(2,R) ⋉ N̄_Q), horospherical with a nontrivial Levi",
        expected: trivial(1, 2),
    }
}

fn a1t1_torus_twist() -> CatalogEntry {
    let g = LieAlgebra::from_type("A1", 1).unwrap();
    CatalogEntry {
        name: "A1T1_torus_twist",
        cartan_type: "A1",
        center_dim: 1,
        rows: vec![element(&g, &[Term::H(0, q(1)), Term::H(1, q(1))])],
        base_point_word: vec![WordEntry::Nilpotent(vec![RootTerm { root: vec![-1], coeff: QStr(qf(1, 2)) }])],
        quasi_affine_note: REDUCTIVE_NOTE,
        description: "(SL(2,R) × R)/exp R(h + z) at the point exp(f/2)·z0; adapted but not admissible, half-space cone",
        expected: Expected {
            adapted: true,
            s_z: roots(&[&[1]]),
            cone_facets: roots(&[&[1]]),
            a_h_dim: 0,
            a_e_dim: 1,
            w_order: 2,
            coxeter_type: "A1".into(),
            sigma_z: with_negatives(&[&[1]]),
            admissible: false,
        },
    }
}

fn b2_k() -> CatalogEntry {
    let g = LieAlgebra::from_type("B2", 0).unwrap();
    let pos: Vec<Vec<i64>> = g.positive_roots().map(|r| g.root(r)).collect();
    let mut s_z: Vec<Vec<i64>> = pos.iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
    s_z.sort();
    let mut sigma_z: Vec<Vec<i64>> = g.all_roots().map(|r| g.root(r)).collect();
    sigma_z.sort();
    CatalogEntry {
        name: "B2_k",
        cartan_type: "B2",
        center_dim: 0,
        rows: compact_part(&g),
        base_point_word: vec![],
        quasi_affine_note: REDUCTIVE_NOTE,
        description: "split B2 modulo its maximal compact subalgebra",
        expected: Expected {
            adapted: true,
            s_z,
            cone_facets: roots(&[&[0, 1], &[1, 0]]),
            a_h_dim: 0,
            a_e_dim: 0,
            w_order: 8,
            coxeter_type: "B2".into(),
            sigma_z,
            admissible: true,
        },
    }
}

fn g2_k() -> CatalogEntry {
    let g = LieAlgebra::from_type("G2", 0).unwrap();
    let pos: Vec<Vec<i64>> = g.positive_roots().map(|r| g.root(r)).collect();
    let mut s_z: Vec<Vec<i64>> = pos.iter().map(|r| r.iter().map(|x| 2 * x).collect()).collect();
    s_z.sort();
    let mut sigma_z: Vec<Vec<i64>> = g.all_roots().map(|r| g.root(r)).collect();
    sigma_z.sort();
    CatalogEntry {
        name: "G2_k",
        cartan_type: "G2",
        center_dim: 0,
        rows: compact_part(&g),
        base_point_word: vec![],
        quasi_affine_note: REDUCTIVE_NOTE,
        description: "split G2 modulo its maximal compact subalgebra",
        expected: Expected {
            adapted: true,
            s_z,
            cone_facets: roots(&[&[0, 1], &[1, 0]]),
            a_h_dim: 0,
            a_e_dim: 0,
            w_order: 12,
            coxeter_type: "G2".into(),
            sigma_z,
            admissible: true,
        },
    }
}
