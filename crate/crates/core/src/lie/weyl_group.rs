//! The Weyl group `W(Σ)` and its lifts to `Ad(N_G(a))`.

use std::collections::HashMap;

use super::algebra::{LieAlgebra, RootId};
use crate::linalg::{dot, Matrix, Vector};
use crate::rational::Q;

/// An element of `W(Σ)` with its canonical lift `Ad(n_w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    /// Matrix on `a`-coordinates.
    pub action_on_a: Matrix,
    /// `Ad(n_w)` on `g`, with `n_{s_i} = exp(e_i) exp(−f_i) exp(e_i)`.
    pub adjoint_lift: Matrix,
}

/// Matrix of the simple reflection `s_i` on `a`-coordinates.
pub fn simple_reflection(g: &LieAlgebra, i: usize) -> Matrix {
    let n = g.a_dim();
    let alpha = g.root_functional(g.simple_root(i));
    let mut m = Matrix::identity(n);
    // s_i(X) = X − α_i(X) h_i
    for c in 0..n {
        let v = m.get(i, c) - &alpha[c];
        m.set(i, c, v);
    }
    m
}

/// `Ad(n_{s_i})`.
pub fn simple_lift(g: &LieAlgebra, i: usize) -> Matrix {
    let r = g.simple_root(i);
    let e = g.basis_vector(g.root_vector(r));
    let f = g.basis_vector(g.root_vector(g.negate(r)));
    let exp_e = g.ad(&e).exp_nilpotent().expect("ad e is nilpotent");
    let exp_mf = g.ad(&f).neg().exp_nilpotent().expect("ad f is nilpotent");
    exp_e.mul(&exp_mf).mul(&exp_e)
}

pub fn weyl_lift(g: &LieAlgebra, word: &[usize]) -> WeylElement {
    let mut a = Matrix::identity(g.a_dim());
    let mut lift = Matrix::identity(g.dim());
    for &i in word {
        a = a.mul(&simple_reflection(g, i));
        lift = lift.mul(&simple_lift(g, i));
    }
    WeylElement { word: word.to_vec(), action_on_a: a, adjoint_lift: lift }
}

/// `W(Σ)` enumerated breadth-first, so each stored word is shortlex-minimal.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylGroupElement>,
    by_perm: HashMap<Vec<RootId>, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylGroupElement {
    pub word: Vec<usize>,
    pub matrix: Matrix,
    /// `perm[r]` is the root `w(r)`.
    pub perm: Vec<RootId>,
}

impl WeylGroup {
    pub fn new(g: &LieAlgebra) -> Self {
        let id_perm: Vec<RootId> = g.all_roots().collect();
        let gens: Vec<(Matrix, Vec<RootId>)> = (0..g.rank())
            .map(|i| {
                let m = simple_reflection(g, i);
                let perm = g.all_roots().map(|r| reflect_root(g, i, r)).collect();
                (m, perm)
            })
            .collect();
        let mut elements = vec![WeylGroupElement { word: vec![], matrix: Matrix::identity(g.a_dim()), perm: id_perm.clone() }];
        let mut by_perm = HashMap::from([(id_perm, 0)]);
        let mut head = 0;
        while head < elements.len() {
            let cur = elements[head].clone();
            head += 1;
            for (i, (m, p)) in gens.iter().enumerate() {
                // cur · s_i
                let perm: Vec<RootId> = p.iter().map(|&r| cur.perm[r]).collect();
                if by_perm.contains_key(&perm) {
                    continue;
                }
                let mut word = cur.word.clone();
                word.push(i);
                by_perm.insert(perm.clone(), elements.len());
                elements.push(WeylGroupElement { word, matrix: cur.matrix.mul(m), perm });
            }
        }
        WeylGroup { elements, by_perm }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of_perm(&self, perm: &[RootId]) -> Option<usize> {
        self.by_perm.get(perm).copied()
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        let pa = &self.elements[a].perm;
        let perm: Vec<RootId> = self.elements[b].perm.iter().map(|&r| pa[r]).collect();
        self.by_perm[&perm]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let p = &self.elements[a].perm;
        let mut inv = vec![0; p.len()];
        for (r, &s) in p.iter().enumerate() {
            inv[s] = r;
        }
        self.by_perm[&inv]
    }

    /// The element acting on `a` by this matrix, if any.
    pub fn index_of_matrix(&self, m: &Matrix) -> Option<usize> {
        self.elements.iter().position(|e| &e.matrix == m)
    }
}

fn reflect_root(g: &LieAlgebra, i: usize, r: RootId) -> RootId {
    let mut c = g.root(r);
    let k = g.cartan().pairing(&c, i);
    c[i] -= k;
    g.root_id(&c).expect("Weyl group permutes roots")
}

/// Transform of a functional on `a` under `w`: `(w·λ)(X) = λ(w⁻¹X)`.
pub fn act_on_functional(w: &Matrix, lambda: &[Q]) -> Vector {
    let inv = w.inverse().expect("invertible");
    (0..lambda.len()).map(|c| dot(lambda, &inv.col(c))).collect()
}

pub fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join("")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scale_vec;
    use crate::rational::q;

    #[test]
    fn orders() {
        for (t, o) in [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("A1xA1", 4)] {
            assert_eq!(WeylGroup::new(&LieAlgebra::from_type(t, 0).unwrap()).order(), o, "{t}");
        }
    }

    #[test]
    fn sl2_lift() {
        let g = LieAlgebra::from_type("A1", 0).unwrap();
        let n = weyl_lift(&g, &[0]).adjoint_lift;
        let h = g.basis_vector(1);
        let e = g.basis_vector(2);
        let f = g.basis_vector(0);
        assert_eq!(n.apply(&h), scale_vec(&q(-1), &h));
        assert_eq!(n.apply(&e), scale_vec(&q(-1), &f));
        assert!(weyl_lift(&g, &[]).adjoint_lift.is_identity());
    }
}
