//! Split reductive Lie algebras in a Chevalley basis.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive, Zero};

use super::cartan::CartanMatrix;
use crate::error::{Error, Result};
use crate::linalg::{dot, zero_vec, Matrix, Vector};
use crate::rational::{q, Q};
use crate::subspace::Subspace;

/// What a basis vector is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// `f_α = e_{−α}` for the positive root with this index.
    Neg(usize),
    /// The simple coroot `h_i`.
    Cartan(usize),
    /// The `k`-th vector of the abelian center.
    Center(usize),
    /// `e_α` for the positive root with this index.
    Pos(usize),
}

/// A root as an index into `roots()`: positive roots first, then their negatives in the same order.
pub type RootId = usize;

/// `g = g_ss ⊕ z` with `g_ss` split semisimple in a Chevalley basis and `z` abelian.
///
/// Basis order: all `f_α`, then `h_1..h_r`, then the center, then all `e_α`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    cartan: CartanMatrix,
    center_dim: usize,
    positive: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, RootId>,
    basis: Vec<BasisElement>,
    /// `table[i][j]` lists `(k, c)` with `[b_i, b_j] = Σ c b_k`.
    table: Vec<Vec<Vec<(usize, Q)>>>,
    form: Matrix,
    theta: Matrix,
}

impl LieAlgebra {
    pub fn from_type(name: &str, center_dim: usize) -> Result<Self> {
        Self::build(CartanMatrix::from_type(name)?, center_dim)
    }

    pub fn from_cartan(entries: Vec<Vec<i64>>, center_dim: usize) -> Result<Self> {
        Self::build(CartanMatrix::new(entries)?, center_dim)
    }

    pub fn build(cartan: CartanMatrix, center_dim: usize) -> Result<Self> {
        let positive = cartan.positive_roots();
        let np = positive.len();
        let r = cartan.rank();
        let mut root_index = HashMap::new();
        for (i, v) in positive.iter().enumerate() {
            root_index.insert(v.clone(), i);
            root_index.insert(v.iter().map(|x| -x).collect(), np + i);
        }
        let mut basis: Vec<BasisElement> = (0..np).map(BasisElement::Neg).collect();
        basis.extend((0..r).map(BasisElement::Cartan));
        basis.extend((0..center_dim).map(BasisElement::Center));
        basis.extend((0..np).map(BasisElement::Pos));

        let consts = StructureConstants::compute(&cartan, &positive, &root_index)?.all_pairs();
        let mut alg = LieAlgebra {
            cartan,
            center_dim,
            positive,
            root_index,
            basis,
            table: Vec::new(),
            form: Matrix::zeros(0, 0),
            theta: Matrix::zeros(0, 0),
        };
        alg.table = alg.bracket_table(&consts);
        alg.form = alg.killing_plus_center();
        alg.theta = alg.cartan_involution();
        Ok(alg)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn center_dim(&self) -> usize {
        self.center_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the split Cartan subalgebra `a` (including the center).
    pub fn a_dim(&self) -> usize {
        self.rank() + self.center_dim
    }

    pub fn basis_elements(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> {
        0..self.positive.len()
    }

    pub fn all_roots(&self) -> impl Iterator<Item = RootId> {
        0..self.num_roots()
    }

    pub fn is_positive(&self, r: RootId) -> bool {
        r < self.positive.len()
    }

    pub fn negate(&self, r: RootId) -> RootId {
        let np = self.positive.len();
        if r < np { r + np } else { r - np }
    }

    /// Simple-root coordinates.
    pub fn root(&self, r: RootId) -> Vec<i64> {
        let np = self.positive.len();
        if r < np { self.positive[r].clone() } else { self.positive[r - np].iter().map(|x| -x).collect() }
    }

    pub fn root_id(&self, coords: &[i64]) -> Option<RootId> {
        self.root_index.get(coords).copied()
    }

    pub fn simple_root(&self, i: usize) -> RootId {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        self.root_id(&v).expect("simple root present")
    }

    pub fn height(coords: &[i64]) -> i64 {
        coords.iter().sum()
    }

    /// Index of the basis vector spanning `g_r`.
    pub fn root_vector(&self, r: RootId) -> usize {
        let np = self.positive.len();
        if r < np { np + self.a_dim() + r } else { r - np }
    }

    /// Index of the basis vector `h_i`.
    pub fn cartan_index(&self, i: usize) -> usize {
        self.positive.len() + i
    }

    /// Basis indices of `a` (coroots, then center), in `a`-coordinate order.
    pub fn a_indices(&self) -> Vec<usize> {
        let np = self.positive.len();
        (np..np + self.a_dim()).collect()
    }

    /// The root of a basis vector, if it is a root vector.
    pub fn root_of_basis(&self, k: usize) -> Option<RootId> {
        match self.basis[k] {
            BasisElement::Pos(i) => Some(i),
            BasisElement::Neg(i) => Some(i + self.positive.len()),
            _ => None,
        }
    }

    /// Weight of a basis vector in simple-root coordinates (zero for `a`).
    pub fn basis_weight(&self, k: usize) -> Vec<i64> {
        self.root_of_basis(k).map_or_else(|| vec![0; self.rank()], |r| self.root(r))
    }

    /// A lattice vector as a functional on `a` (values on `h_1..h_r`, then on the center).
    pub fn functional(&self, coords: &[i64]) -> Vector {
        let mut f: Vector = (0..self.rank()).map(|i| q(self.cartan.pairing(coords, i))).collect();
        f.extend((0..self.center_dim).map(|_| Q::zero()));
        f
    }

    pub fn root_functional(&self, r: RootId) -> Vector {
        self.functional(&self.root(r))
    }

    /// `a`-coordinates to ambient coordinates.
    pub fn a_to_g(&self, x: &[Q]) -> Vector {
        assert_eq!(x.len(), self.a_dim());
        let mut v = zero_vec(self.dim());
        for (k, idx) in self.a_indices().into_iter().enumerate() {
            v[idx] = x[k].clone();
        }
        v
    }

    /// Ambient coordinates of an element of `a` to `a`-coordinates.
    pub fn g_to_a(&self, v: &[Q]) -> Result<Vector> {
        let idx = self.a_indices();
        for (k, x) in v.iter().enumerate() {
            if !x.is_zero() && !idx.contains(&k) {
                return Err(Error::Invalid("vector does not lie in a".into()));
            }
        }
        Ok(idx.iter().map(|&k| v[k].clone()).collect())
    }

    /// The coroot `h_r` of a root, in `a`-coordinates.
    pub fn coroot(&self, r: RootId) -> Vector {
        let c = self.root(r);
        let len = self.cartan.inner(&c, &c);
        let d = self.cartan.symmetrizer();
        let mut v: Vector = (0..self.rank()).map(|i| q(c[i]) * &d[i] * q(2) / &len).collect();
        v.extend((0..self.center_dim).map(|_| Q::zero()));
        v
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        assert_eq!(x.len(), self.dim(), "bracket: dimension mismatch");
        assert_eq!(y.len(), self.dim(), "bracket: dimension mismatch");
        let mut out = zero_vec(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.table[i][j] {
                    out[*k] += &c * s;
                }
            }
        }
        out
    }

    pub fn try_bracket(&self, x: &[Q], y: &[Q]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(Error::Dimension { expected: self.dim(), got: v.len() });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// Matrix of `ad(x)` acting on column vectors.
    pub fn ad(&self, x: &[Q]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, s) in &self.table[i][j] {
                    let v = m.get(*k, j) + xi * s;
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    pub fn basis_vector(&self, k: usize) -> Vector {
        crate::linalg::unit_vec(self.dim(), k)
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<(usize, Q)>>] {
        &self.table
    }

    pub fn form_matrix(&self) -> &Matrix {
        &self.form
    }

    pub fn theta_matrix(&self) -> &Matrix {
        &self.theta
    }

    pub fn form(&self, x: &[Q], y: &[Q]) -> Q {
        dot(x, &self.form.apply(y))
    }

    /// `B` restricted to `a`, in `a`-coordinates.
    pub fn form_on_a(&self) -> Matrix {
        let idx = self.a_indices();
        self.form.submatrix(&idx, &idx)
    }

    // ----- standard subspaces -----

    pub fn a(&self) -> Subspace {
        Subspace::coordinate(self.dim(), &self.a_indices())
    }

    pub fn root_space(&self, r: RootId) -> Subspace {
        Subspace::coordinate(self.dim(), &[self.root_vector(r)])
    }

    pub fn span_of_roots(&self, roots: &[RootId]) -> Subspace {
        let idx: Vec<usize> = roots.iter().map(|&r| self.root_vector(r)).collect();
        Subspace::coordinate(self.dim(), &idx)
    }

    pub fn n(&self) -> Subspace {
        self.span_of_roots(&self.positive_roots().collect::<Vec<_>>())
    }

    pub fn nbar(&self) -> Subspace {
        self.span_of_roots(&self.positive_roots().map(|r| self.negate(r)).collect::<Vec<_>>())
    }

    /// Minimal parabolic `p = m ⊕ a ⊕ n` (`m = 0` for split forms).
    pub fn p(&self) -> Subspace {
        self.a().sum(&self.n())
    }

    pub fn orthocomplement(&self, e: &Subspace) -> Subspace {
        e.orthogonal(&self.form)
    }

    /// `m ⊕ a ⊕ Σ{g_α : α|_V = 0}` for `V ⊆ a` given in ambient coordinates.
    pub fn centralizer_in_g(&self, v: &Subspace) -> Result<Subspace> {
        if !self.a().contains(v) {
            return Err(Error::Invalid("centralizer_in_g: V is not contained in a".into()));
        }
        let vs: Vec<Vector> = v.basis().iter().map(|b| self.g_to_a(b)).collect::<Result<_>>()?;
        let roots: Vec<RootId> = self
            .all_roots()
            .filter(|&r| {
                let f = self.root_functional(r);
                vs.iter().all(|x| dot(&f, x).is_zero())
            })
            .collect();
        Ok(self.a().sum(&self.span_of_roots(&roots)))
    }

    /// `{X ∈ a : [X, E] ⊆ E}` in `a`-coordinates.
    pub fn normalizer_in_a(&self, e: &Subspace) -> Subspace {
        let ann = e.annihilator();
        let basis = e.basis();
        let mut constraints: Vec<Vector> = Vec::new();
        for b in &basis {
            for c in &ann {
                // c · [X, b] = Σ_k X_k c·[h_k, b] must vanish.
                let row: Vector = self
                    .a_indices()
                    .iter()
                    .map(|&k| dot(c, &self.bracket(&self.basis_vector(k), b)))
                    .collect();
                constraints.push(row);
            }
        }
        Subspace::solutions(self.a_dim(), &constraints)
    }

    // ----- construction helpers -----

    fn bracket_table(&self, n: &HashMap<(Vec<i64>, Vec<i64>), i64>) -> Vec<Vec<Vec<(usize, Q)>>> {
        let dim = self.dim();
        let mut t = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                t[i][j] = self.bracket_basis(n, i, j);
            }
        }
        t
    }

    fn bracket_basis(&self, n: &HashMap<(Vec<i64>, Vec<i64>), i64>, i: usize, j: usize) -> Vec<(usize, Q)> {
        use BasisElement::*;
        let rid = |b: BasisElement| match b {
            Pos(k) => Some(k),
            Neg(k) => Some(k + self.positive.len()),
            _ => None,
        };
        match (self.basis[i], self.basis[j]) {
            (Center(_), _) | (_, Center(_)) => vec![],
            (Cartan(_), Cartan(_)) => vec![],
            (Cartan(a), b) => {
                let r = rid(b).expect("root vector");
                let c = self.cartan.pairing(&self.root(r), a);
                if c == 0 { vec![] } else { vec![(j, q(c))] }
            }
            (_, Cartan(_)) => {
                self.bracket_basis(n, j, i).into_iter().map(|(k, c)| (k, -c)).collect()
            }
            (a, b) => {
                let (x, y) = (rid(a).expect("root"), rid(b).expect("root"));
                let cx = self.root(x);
                let cy = self.root(y);
                let sum: Vec<i64> = cx.iter().zip(&cy).map(|(u, v)| u + v).collect();
                if sum.iter().all(|&s| s == 0) {
                    // [e_x, e_{−x}] = h_x
                    let h = self.coroot(x);
                    return h
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (self.a_indices()[k], c.clone()))
                        .collect();
                }
                match self.root_id(&sum) {
                    Some(s) => vec![(self.root_vector(s), q(n[&(cx, cy)]))],
                    None => vec![],
                }
            }
        }
    }

    fn killing_plus_center(&self) -> Matrix {
        let dim = self.dim();
        let ads: Vec<Matrix> = (0..dim).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut b = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in i..dim {
                let v = match (self.basis[i], self.basis[j]) {
                    (BasisElement::Center(a), BasisElement::Center(c)) => {
                        if a == c { Q::one() } else { Q::zero() }
                    }
                    (BasisElement::Center(_), _) | (_, BasisElement::Center(_)) => Q::zero(),
                    _ => ads[i].mul(&ads[j]).trace(),
                };
                b.set(i, j, v.clone());
                b.set(j, i, v);
            }
        }
        b
    }

    fn cartan_involution(&self) -> Matrix {
        let dim = self.dim();
        let mut t = Matrix::zeros(dim, dim);
        for k in 0..dim {
            match self.basis[k] {
                BasisElement::Cartan(_) | BasisElement::Center(_) => t.set(k, k, -Q::one()),
                BasisElement::Pos(_) | BasisElement::Neg(_) => {
                    let r = self.root_of_basis(k).expect("root");
                    let image = self.root_vector(self.negate(r));
                    t.set(image, k, -Q::one());
                }
            }
        }
        t
    }
}

/// `N_{α,β}` with `[e_α, e_β] = N_{α,β} e_{α+β}`, fixed by declaring every extraspecial pair positive.
struct StructureConstants<'a> {
    cartan: &'a CartanMatrix,
    index: &'a HashMap<Vec<i64>, RootId>,
    /// Values for pairs of positive roots.
    positive: HashMap<(Vec<i64>, Vec<i64>), i64>,
}

impl<'a> StructureConstants<'a> {
    fn compute(cartan: &'a CartanMatrix, roots: &[Vec<i64>], index: &'a HashMap<Vec<i64>, RootId>) -> Result<Self> {
        let mut sc = StructureConstants { cartan, index, positive: HashMap::new() };
        let r = cartan.rank();
        for xi in roots.iter().filter(|v| LieAlgebra::height(v) >= 2) {
            // Extraspecial pair: smallest simple α with ξ − α a root.
            let (alpha, beta) = (0..r)
                .find_map(|i| {
                    let mut a = vec![0; r];
                    a[i] = 1;
                    let b: Vec<i64> = xi.iter().zip(&a).map(|(x, y)| x - y).collect();
                    sc.is_root(&b).then_some((a, b))
                })
                .ok_or_else(|| Error::Contract("positive root without a simple predecessor".into()))?;
            let p = sc.string_down(&beta, &alpha);
            sc.positive.insert((alpha.clone(), beta.clone()), p + 1);
            sc.positive.insert((beta.clone(), alpha.clone()), -(p + 1));
            let n_malpha_xi = sc.get(&neg(&alpha), xi);
            for s_root in roots {
                let r_root: Vec<i64> = xi.iter().zip(s_root).map(|(x, y)| x - y).collect();
                if !sc.is_positive_root(&r_root) || r_root == alpha || *s_root == alpha {
                    continue;
                }
                if sc.positive.contains_key(&(r_root.clone(), s_root.clone())) {
                    continue;
                }
                // Jacobi on (e_r, e_s, e_{−α}).
                let s_minus = sub(s_root, &alpha);
                let r_minus = sub(&r_root, &alpha);
                let mut acc = Q::zero();
                if sc.is_root(&s_minus) {
                    acc += q(sc.get(s_root, &neg(&alpha)) * sc.get(&r_root, &s_minus));
                }
                if sc.is_root(&r_minus) {
                    acc += q(sc.get(&neg(&alpha), &r_root) * sc.get(s_root, &r_minus));
                }
                let val = -acc / q(n_malpha_xi);
                let v = val
                    .to_integer()
                    .to_i64()
                    .filter(|_| val.is_integer())
                    .ok_or_else(|| Error::Contract("non-integral structure constant".into()))?;
                let expected = sc.string_down(s_root, &r_root) + 1;
                if v.abs() != expected {
                    return Err(Error::Contract(format!("structure constant magnitude {v} != {expected}")));
                }
                sc.positive.insert((r_root.clone(), s_root.clone()), v);
                sc.positive.insert((s_root.clone(), r_root), -v);
            }
        }
        Ok(sc)
    }

    fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// `N_{x,y}` for every pair of roots whose sum is a root.
    fn all_pairs(&self) -> HashMap<(Vec<i64>, Vec<i64>), i64> {
        let roots: Vec<&Vec<i64>> = self.index.keys().collect();
        let mut out = HashMap::new();
        for x in &roots {
            for y in &roots {
                let s: Vec<i64> = x.iter().zip(y.iter()).map(|(a, b)| a + b).collect();
                if self.is_root(&s) {
                    out.insert(((*x).clone(), (*y).clone()), self.get(x, y));
                }
            }
        }
        out
    }

    fn is_positive_root(&self, v: &[i64]) -> bool {
        self.is_root(v) && v.iter().all(|&x| x >= 0)
    }

    /// Largest `p` with `β − pα` a root.
    fn string_down(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let mut p = 0;
        let mut cur = beta.to_vec();
        loop {
            cur = sub(&cur, alpha);
            if self.is_root(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn len2(&self, v: &[i64]) -> Q {
        self.cartan.inner(v, v)
    }

    /// `N_{x,y}` for arbitrary roots, reduced to positive pairs.
    fn get(&self, x: &[i64], y: &[i64]) -> i64 {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        if !self.is_root(&s) {
            return 0;
        }
        let px = is_pos(x);
        let py = is_pos(y);
        if px && py {
            return *self.positive.get(&(x.to_vec(), y.to_vec())).expect("positive pair computed in height order");
        }
        if !px && !py {
            return -self.get(&neg(x), &neg(y));
        }
        // x + y + w = 0 gives N_{x,y}/(w,w) = N_{y,w}/(x,x) = N_{w,x}/(y,y).
        let w = neg(&s);
        let val = if is_pos(&w) == py {
            self.len2(&w) / self.len2(x) * q(self.get(y, &w))
        } else {
            self.len2(&w) / self.len2(y) * q(self.get(&w, x))
        };
        val.to_integer().to_i64().expect("small structure constant")
    }
}

fn is_pos(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0)
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(g: &LieAlgebra, coords: &[i64]) -> Vector {
        g.basis_vector(g.root_vector(g.root_id(coords).unwrap()))
    }

    fn h(g: &LieAlgebra, i: usize) -> Vector {
        g.basis_vector(g.cartan_index(i))
    }

    #[test]
    fn sl2_relations() {
        let g = LieAlgebra::from_type("A1", 0).unwrap();
        assert_eq!(g.dim(), 3);
        let (ee, ff, hh) = (e(&g, &[1]), e(&g, &[-1]), h(&g, 0));
        assert_eq!(g.bracket(&hh, &ee), crate::linalg::scale_vec(&q(2), &ee));
        assert_eq!(g.bracket(&ee, &ff), hh);
        assert!(crate::linalg::is_zero_vec(&g.bracket(&ee, &ee)));
        assert_eq!(g.form(&hh, &hh), q(8));
        assert_eq!(g.form(&ee, &ff), q(4));
        assert_eq!(g.form(&ee, &ee), q(0));
    }

    #[test]
    fn dimensions() {
        for (t, d) in [("A1", 3), ("A2", 8), ("B2", 10), ("G2", 14), ("A3", 15), ("B3", 21), ("C3", 21)] {
            assert_eq!(LieAlgebra::from_type(t, 0).unwrap().dim(), d, "{t}");
        }
        assert_eq!(LieAlgebra::from_type("A1", 2).unwrap().dim(), 5);
    }

    #[test]
    fn orthocomplement_examples() {
        let g = LieAlgebra::from_type("A1", 0).unwrap();
        let f = Subspace::span(3, &[e(&g, &[-1])]);
        assert_eq!(g.orthocomplement(&f), Subspace::span(3, &[e(&g, &[-1]), h(&g, 0)]));
        assert!(g.orthocomplement(&Subspace::full(3)).is_zero());
        assert_eq!(g.orthocomplement(&g.a()), Subspace::span(3, &[e(&g, &[1]), e(&g, &[-1])]));
    }

    #[test]
    fn centralizer_examples() {
        let g = LieAlgebra::from_type("A1", 0).unwrap();
        assert_eq!(g.centralizer_in_g(&g.a()).unwrap(), g.a());
        assert_eq!(g.centralizer_in_g(&Subspace::zero(3)).unwrap(), Subspace::full(3));
        assert!(g.centralizer_in_g(&g.n()).is_err());
        let a2 = LieAlgebra::from_type("A2", 0).unwrap();
        // No root of A2 vanishes on h_1: α1, α2, α1+α2 take 2, −1, 1.
        let v = Subspace::span(8, &[h(&a2, 0)]);
        assert_eq!(a2.centralizer_in_g(&v).unwrap(), a2.a());
        // On the fundamental coweight ω1^∨ = (2h_1 + h_2)/3 exactly ±α2 vanish.
        let w1 = crate::linalg::add_vec(&crate::linalg::scale_vec(&q(2), &h(&a2, 0)), &h(&a2, 1));
        let expected = a2.a().sum(&a2.span_of_roots(&[a2.root_id(&[0, 1]).unwrap(), a2.root_id(&[0, -1]).unwrap()]));
        assert_eq!(a2.centralizer_in_g(&Subspace::span(8, &[w1])).unwrap(), expected);
    }
}
