use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::adapted::{a_part, check_adapted, LeviData};
use crate::cones::Cone;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, RootId};
use crate::linalg::{add_vec, axpy, dot, is_zero_vec, sub_vec, unit_vec, zero_vec, Matrix, Vector};
use crate::rational::Q;
use crate::subspace::Subspace;

/// An element of `supp_z(Y)`; `m` is zero for split forms so only roots and `a` occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportItem {
    Root(RootId),
    A,
}

/// Everything computed from an adapted point.
#[derive(Clone, Debug)]
pub struct SphericalAnalysis {
    pub h_z: Subspace,
    pub levi: LeviData,
    /// `a_h = a ∩ h_z`, in `a`-coordinates.
    pub a_h: Subspace,
    /// `a° = a ∩ a_h^⊥`, in `a`-coordinates.
    pub a_circ: Subspace,
    pub l_cap_h: Subspace,
    /// `T_z(X_{−α})` for each `α ∈ Σ(Q)`.
    pub t_map: BTreeMap<RootId, Vector>,
    /// `T_z^⊥` on the echelon basis of `a°` (input in `a`-coordinates).
    pub tperp: Vec<(Vector, Vector)>,
    pub supports: BTreeMap<RootId, Vec<SupportItem>>,
    /// `S_z` in simple-root coordinates.
    pub s_z: Vec<Vec<i64>>,
    /// Indecomposable elements of the monoid `N S_z`.
    pub indecomposables: Vec<Vec<i64>>,
    pub h_empty: Subspace,
}

impl SphericalAnalysis {
    pub fn new(g: &LieAlgebra, h_z: &Subspace) -> Result<Self> {
        let levi = check_adapted(g, h_z)?;
        let a_h = a_part(g, h_z);
        let a_circ = a_h.orthogonal(&g.form_on_a());
        let l_cap_h = levi.l_q.intersect(h_z);
        let t_map = solve_t(g, h_z, &levi, &a_h)?;
        if l_cap_h.dim() + t_map.len() != h_z.dim() {
            return Err(Error::Contract("h_z is not (l_Q ∩ h_z) ⊕ graph(T)".into()));
        }
        let tperp = solve_tperp(g, h_z, &levi, &a_circ)?;
        let mut supports = BTreeMap::new();
        let mut s_z: Vec<Vec<i64>> = Vec::new();
        for (&alpha, t) in &t_map {
            let mut supp = Vec::new();
            for &beta in &levi.sigma_q {
                if !t[g.root_vector(beta)].is_zero() {
                    supp.push(SupportItem::Root(beta));
                    s_z.push(add_roots(&g.root(alpha), &g.root(beta)));
                }
            }
            if g.a_indices().iter().any(|&k| !t[k].is_zero()) {
                supp.push(SupportItem::A);
                s_z.push(g.root(alpha));
            }
            supports.insert(alpha, supp);
        }
        s_z.sort();
        s_z.dedup();
        let indecomposables = indecomposable_elements(&s_z);
        let h_empty = l_cap_h.sum(&levi.nbar_q);
        Ok(SphericalAnalysis { h_z: h_z.clone(), levi, a_h, a_circ, l_cap_h, t_map, tperp, supports, s_z, indecomposables, h_empty })
    }

    pub fn sigma_q(&self) -> &[RootId] {
        &self.levi.sigma_q
    }

    /// `T_z` extended linearly to `n̄_Q`.
    pub fn t(&self, g: &LieAlgebra, y: &[Q]) -> Vector {
        let mut out = zero_vec(g.dim());
        for (&alpha, t) in &self.t_map {
            let c = &y[g.root_vector(g.negate(alpha))];
            if !c.is_zero() {
                axpy(&mut out, c, t);
            }
        }
        out
    }

    /// `T_z^⊥(X)` for `X ∈ a°` in `a`-coordinates.
    pub fn tperp_of(&self, g: &LieAlgebra, x: &[Q]) -> Result<Vector> {
        let coords = self
            .a_circ
            .coordinates(x)
            .ok_or_else(|| Error::Invalid("X is not in a°".into()))?;
        let mut out = zero_vec(g.dim());
        for (c, (_, img)) in coords.iter().zip(&self.tperp) {
            axpy(&mut out, c, img);
        }
        Ok(out)
    }

    pub fn s_z_functionals(&self, g: &LieAlgebra) -> Vec<Vector> {
        self.s_z.iter().map(|s| g.functional(s)).collect()
    }

    /// Closure of `C_z = {X : γ(X) < 0 for γ ∈ S_z}`.
    pub fn compression_cone(&self, g: &LieAlgebra) -> Cone {
        Cone::from_inequalities(g.a_dim(), &self.s_z_functionals(g))
    }

    /// `X ∈ a°` with `α(X) ≠ 0` for all `α ∈ Σ(Q)`.
    pub fn is_regular(&self, g: &LieAlgebra, x: &[Q]) -> bool {
        self.a_circ.contains_vector(x) && self.levi.sigma_q.iter().all(|&r| !dot(&g.root_functional(r), x).is_zero())
    }

    /// `Φ_z(X)`, the unique element of `n_Q` with `Ad(exp(−Φ))X = X + T^⊥(X)`, solved by root height.
    pub fn phi(&self, g: &LieAlgebra, x: &[Q]) -> Result<Vector> {
        if !self.is_regular(g, x) {
            return Err(Error::Invalid("Φ needs X in a°_reg".into()));
        }
        let xg = g.a_to_g(x);
        let target = add_vec(&xg, &self.tperp_of(g, x)?);
        let mut by_height: BTreeMap<i64, Vec<RootId>> = BTreeMap::new();
        for &r in &self.levi.sigma_q {
            by_height.entry(LieAlgebra::height(&g.root(r))).or_default().push(r);
        }
        let mut phi = zero_vec(g.dim());
        let flow = |phi: &Vector| -> Vector {
            let m = g.ad(phi).neg().exp_nilpotent().expect("n_Q is nilpotent");
            m.apply(&xg)
        };
        for roots in by_height.values() {
            let residual = sub_vec(&flow(&phi), &target);
            for &r in roots {
                let k = g.root_vector(r);
                // Adding δ·X_r moves the height-h part by δ·r(X).
                let step = -residual[k].clone() / dot(&g.root_functional(r), x);
                phi[k] += step;
            }
        }
        if flow(&phi) != target {
            return Err(Error::Contract("Φ does not satisfy its defining identity".into()));
        }
        Ok(phi)
    }
}

fn add_roots(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Solves `X_{−α} + T(X_{−α}) ∈ h_z` with `T(X_{−α}) ∈ a° ⊕ n_Q`.
fn solve_t(g: &LieAlgebra, h_z: &Subspace, levi: &LeviData, a_h: &Subspace) -> Result<BTreeMap<RootId, Vector>> {
    let hb = h_z.basis();
    let n = g.dim();
    // Linear conditions on an ambient vector v, then pulled back to coefficients on h_z.
    let mut conds: Vec<Vector> = Vec::new();
    for &beta in &levi.sigma_q {
        conds.push(unit_vec(n, g.root_vector(g.negate(beta))));
    }
    let nbar_conds = conds.len();
    for &gamma in &levi.sigma_0 {
        conds.push(unit_vec(n, g.root_vector(gamma)));
    }
    for u in a_h.basis() {
        conds.push(g.form_matrix().apply(&g.a_to_g(&u)));
    }
    let rows: Vec<Vector> = conds.iter().map(|c| hb.iter().map(|b| dot(c, b)).collect()).collect();
    let a = Matrix::from_rows(&rows, hb.len());
    if !a.kernel().is_empty() {
        return Err(Error::Contract("graph decomposition of h_z is not unique".into()));
    }
    let mut out = BTreeMap::new();
    for (i, &alpha) in levi.sigma_q.iter().enumerate() {
        let mut rhs = zero_vec(conds.len());
        rhs[i] = Q::from_integer(1.into());
        let c = a
            .solve(&rhs)
            .ok_or_else(|| Error::Contract("no graph decomposition for a root space of n̄_Q".into()))?;
        let mut v = zero_vec(n);
        for (ci, b) in c.iter().zip(&hb) {
            axpy(&mut v, ci, b);
        }
        let f = unit_vec(n, g.root_vector(g.negate(alpha)));
        let t = sub_vec(&v, &f);
        debug_assert!(conds[..nbar_conds].iter().all(|c| dot(c, &t).is_zero()));
        out.insert(alpha, t);
    }
    Ok(out)
}

/// Solves `X + T^⊥(X) ∈ h_z^⊥` with `T^⊥(X) ∈ n_Q`, for each basis `X` of `a°`.
fn solve_tperp(g: &LieAlgebra, h_z: &Subspace, levi: &LeviData, a_circ: &Subspace) -> Result<Vec<(Vector, Vector)>> {
    let hb = h_z.basis();
    let pos: Vec<usize> = levi.sigma_q.iter().map(|&r| g.root_vector(r)).collect();
    let rows: Vec<Vector> = hb
        .iter()
        .map(|b| {
            let fb = g.form_matrix().apply(b);
            pos.iter().map(|&k| fb[k].clone()).collect()
        })
        .collect();
    let a = Matrix::from_rows(&rows, pos.len());
    if !pos.is_empty() && !a.kernel().is_empty() {
        return Err(Error::Contract("T^⊥ is not unique".into()));
    }
    a_circ
        .basis()
        .into_iter()
        .map(|x| {
            let xg = g.a_to_g(&x);
            let rhs: Vector = hb.iter().map(|b| -g.form(&xg, b)).collect();
            let y = if pos.is_empty() {
                if !is_zero_vec(&rhs) {
                    return Err(Error::Contract("a° is not orthogonal to h_z".into()));
                }
                vec![]
            } else {
                a.solve(&rhs).ok_or_else(|| Error::Contract("T^⊥ has no solution".into()))?
            };
            let mut img = zero_vec(g.dim());
            for (c, &k) in y.iter().zip(&pos) {
                img[k] = c.clone();
            }
            Ok((x, img))
        })
        .collect()
}

/// Whether `target` is a sum of elements of `gens` (all with nonnegative coordinates).
pub fn in_monoid(target: &[i64], gens: &[Vec<i64>]) -> bool {
    let mut memo = HashMap::new();
    representable(target, gens, &mut memo)
}

fn representable(v: &[i64], gens: &[Vec<i64>], memo: &mut HashMap<Vec<i64>, bool>) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    if v.iter().any(|&x| x < 0) {
        return false;
    }
    if let Some(&b) = memo.get(v) {
        return b;
    }
    let ok = gens.iter().any(|s| {
        let rest: Vec<i64> = v.iter().zip(s).map(|(a, b)| a - b).collect();
        rest != v && representable(&rest, gens, memo)
    });
    memo.insert(v.to_vec(), ok);
    ok
}

fn indecomposable_elements(s: &[Vec<i64>]) -> Vec<Vec<i64>> {
    s.iter()
        .filter(|sigma| {
            !s.iter().any(|t| {
                let rest: Vec<i64> = sigma.iter().zip(t).map(|(a, b)| a - b).collect();
                rest.iter().any(|&x| x != 0) && in_monoid(&rest, s)
            })
        })
        .cloned()
        .collect()
}
