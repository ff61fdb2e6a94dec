//! Rational polyhedral cones by exact double description, and chambers of central arrangements.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{add_vec, axpy, dot, is_zero_vec, zero_vec, Matrix, Vector};
use crate::rational::{primitive_integer, primitive_line, q, Q};
use crate::subspace::Subspace;

/// A closed cone `{x : γ(x) ≤ 0 for all γ}` together with its generators.
///
/// Rays are stored modulo the lineality space: projected onto its Euclidean complement,
/// scaled to primitive integer vectors and sorted. Equality compares the generators only.
#[derive(Clone, Debug)]
pub struct Cone {
    dim: usize,
    inequalities: Vec<Vector>,
    rays: Vec<Vector>,
    lineality: Subspace,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.lineality == other.lineality && self.rays == other.rays
    }
}

impl Eq for Cone {}

impl Cone {
    pub fn from_inequalities(dim: usize, gammas: &[Vector]) -> Cone {
        let mut ineqs: Vec<Vector> = Vec::new();
        for g in gammas {
            assert_eq!(g.len(), dim, "inequality has wrong length");
            if is_zero_vec(g) {
                continue;
            }
            let p = normalize_ray(g);
            if !ineqs.contains(&p) {
                ineqs.push(p);
            }
        }
        let (rays, lineality) = double_description(dim, &ineqs);
        Cone { dim, inequalities: ineqs, rays, lineality }
    }

    /// The cone generated by `rays` plus the linear span of `lines`.
    pub fn from_generators(dim: usize, rays: &[Vector], lines: &[Vector]) -> Cone {
        // The dual {λ : λ·r ≥ 0, λ·l = 0} has generators ρ, m; then C = {x : ρ·x ≥ 0, m·x = 0}.
        let mut dual_ineqs: Vec<Vector> = rays.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        for l in lines {
            dual_ineqs.push(l.clone());
            dual_ineqs.push(l.iter().map(|x| -x).collect());
        }
        let dual = Cone::from_inequalities(dim, &dual_ineqs);
        Cone::from_inequalities(dim, &dual.as_dual_inequalities())
    }

    pub fn whole_space(dim: usize) -> Cone {
        Cone::from_inequalities(dim, &[])
    }

    /// `{λ : λ(x) ≥ 0 for all x ∈ C}`.
    pub fn dual(&self) -> Cone {
        let mut ineqs: Vec<Vector> = self.rays.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        for l in self.lineality.basis() {
            ineqs.push(l.iter().map(|x| -x).collect());
            ineqs.push(l);
        }
        Cone::from_inequalities(self.dim, &ineqs)
    }

    /// Inequalities `γ ≤ 0` describing the set of functionals that are `≥ 0` on this cone's dual.
    fn as_dual_inequalities(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = self.rays.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        for l in self.lineality.basis() {
            out.push(l.iter().map(|x| -x).collect());
            out.push(l);
        }
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Vector] {
        &self.inequalities
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    pub fn lineality(&self) -> &Subspace {
        &self.lineality
    }

    /// `C̄ ∩ −C̄`.
    pub fn edge(&self) -> Subspace {
        self.lineality.clone()
    }

    pub fn span(&self) -> Subspace {
        self.lineality.sum(&Subspace::span(self.dim, &self.rays))
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        self.span().dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dimension() == self.dim
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.inequalities.iter().all(|g| !dot(g, x).is_positive())
    }

    /// Membership in the open cone `{γ < 0}` for the stored inequalities.
    pub fn contains_strictly(&self, x: &[Q]) -> bool {
        self.inequalities.iter().all(|g| dot(g, x).is_negative())
    }

    pub fn contains_relative_interior(&self, x: &[Q]) -> bool {
        self.contains(x) && self.span().contains_vector(x) && self.facets().iter().all(|g| dot(g, x).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
            && other.lineality.basis().iter().all(|l| self.contains(l) && self.contains(&neg(l)))
    }

    /// Sum of the rays: a rational point of the relative interior.
    pub fn interior_point(&self) -> Vector {
        self.rays.iter().fold(zero_vec(self.dim), |acc, r| add_vec(&acc, r))
    }

    /// Inequalities (primitive, from the stored list) defining facets.
    pub fn facets(&self) -> Vec<Vector> {
        let d = self.dimension();
        if d == 0 {
            return vec![];
        }
        self.inequalities
            .iter()
            .filter(|g| {
                let tight: Vec<Vector> = self.rays.iter().filter(|r| dot(g, r).is_zero()).cloned().collect();
                let face = self.lineality.sum(&Subspace::span(self.dim, &tight));
                face.dim() + 1 == d && self.rays.iter().any(|r| !dot(g, r).is_zero())
            })
            .cloned()
            .collect()
    }

    /// Stored inequalities vanishing on the whole cone.
    pub fn implicit_equalities(&self) -> Vec<Vector> {
        self.inequalities.iter().filter(|g| self.rays.iter().all(|r| dot(g, r).is_zero())).cloned().collect()
    }

    /// The face `{x ∈ C : γ(x) = 0 for γ in gammas}`.
    pub fn face_where(&self, gammas: &[Vector]) -> Cone {
        let mut ineqs = self.inequalities.clone();
        for g in gammas {
            ineqs.push(neg(g));
        }
        Cone::from_inequalities(self.dim, &ineqs)
    }

    /// All faces (including the cone itself), ordered by dimension then rays.
    pub fn faces(&self) -> Vec<Cone> {
        let facets = self.facets();
        let mut seen: BTreeMap<Vec<usize>, Cone> = BTreeMap::new();
        let key = |c: &Cone| -> Vec<usize> {
            let mut k: Vec<usize> = self.rays.iter().enumerate().filter(|(_, r)| c.contains(r)).map(|(i, _)| i).collect();
            k.insert(0, c.dimension());
            k
        };
        let mut queue = VecDeque::from([self.clone()]);
        while let Some(f) = queue.pop_front() {
            let k = key(&f);
            if seen.contains_key(&k) {
                continue;
            }
            for g in &facets {
                let sub = f.face_where(std::slice::from_ref(g));
                if sub.dimension() < f.dimension() {
                    queue.push_back(sub);
                }
            }
            seen.insert(k, f);
        }
        let mut faces: Vec<Cone> = seen.into_values().collect();
        faces.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| cmp_vecs(&a.rays, &b.rays)));
        faces
    }

    /// Faces whose span has codimension one in the ambient space.
    pub fn walls(&self) -> Vec<Cone> {
        self.faces().into_iter().filter(|f| f.dimension() + 1 == self.dim).collect()
    }

    /// Image of the cone under an invertible linear map `x ↦ M x`.
    pub fn transform(&self, m: &Matrix) -> Cone {
        let inv = m.inverse().expect("invertible map");
        // γ ∘ M⁻¹
        let ineqs: Vec<Vector> = self.inequalities.iter().map(|g| inv.transpose().apply(g)).collect();
        Cone::from_inequalities(self.dim, &ineqs)
    }

    /// Whether the open set `{γ < 0 for all stored γ}` is nonempty.
    pub fn is_strictly_feasible(&self) -> bool {
        self.implicit_equalities().is_empty()
    }
}

fn neg(v: &[Q]) -> Vector {
    v.iter().map(|x| -x).collect()
}

fn cmp_vecs(a: &[Vector], b: &[Vector]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Scales to the primitive integer vector on the same ray.
pub fn normalize_ray(v: &[Q]) -> Vector {
    primitive_integer(v).into_iter().map(Q::from_integer).collect()
}

/// Orthogonal projection onto the Euclidean complement of `l`.
fn project_off(l: &Subspace, v: &[Q]) -> Vector {
    if l.is_zero() {
        return v.to_vec();
    }
    let b = l.basis_matrix();
    let gram = b.mul(&b.transpose());
    let coeffs = gram.solve(&b.apply(v)).expect("gram matrix invertible");
    let mut out = v.to_vec();
    for (c, row) in coeffs.iter().zip(b.rows()) {
        axpy(&mut out, &-c.clone(), &row);
    }
    out
}

fn double_description(dim: usize, ineqs: &[Vector]) -> (Vec<Vector>, Subspace) {
    let mut lin: Vec<Vector> = (0..dim).map(|i| crate::linalg::unit_vec(dim, i)).collect();
    let mut rays: Vec<Vector> = Vec::new();
    let mut processed: Vec<Vector> = Vec::new();
    for g in ineqs {
        if let Some(idx) = lin.iter().position(|l| !dot(g, l).is_zero()) {
            let l0 = lin.remove(idx);
            let c0 = dot(g, &l0);
            for l in lin.iter_mut() {
                let c = dot(g, l) / &c0;
                axpy(l, &-c, &l0);
            }
            for r in rays.iter_mut() {
                let c = dot(g, r) / &c0;
                axpy(r, &-c, &l0);
            }
            rays.push(if c0.is_positive() { neg(&l0) } else { l0 });
        } else {
            let mut next = Vec::new();
            let vals: Vec<Q> = rays.iter().map(|r| dot(g, r)).collect();
            for (r, v) in rays.iter().zip(&vals) {
                if !v.is_positive() {
                    next.push(r.clone());
                }
            }
            for (p, vp) in rays.iter().zip(&vals) {
                if !vp.is_positive() {
                    continue;
                }
                for (n, vn) in rays.iter().zip(&vals) {
                    if !vn.is_negative() {
                        continue;
                    }
                    // (γ·p) n − (γ·n) p lies on γ = 0.
                    let mut c = crate::linalg::scale_vec(vp, n);
                    axpy(&mut c, &-vn.clone(), p);
                    next.push(c);
                }
            }
            rays = next;
        }
        processed.push(g.clone());
        let l_space = Subspace::span(dim, &lin);
        rays = prune(dim, &processed, &l_space, rays);
    }
    let l_space = Subspace::span(dim, &lin);
    let rays = prune(dim, &processed, &l_space, rays);
    (rays, l_space)
}

/// Canonicalizes rays modulo `l` and keeps the extreme ones.
fn prune(dim: usize, ineqs: &[Vector], l: &Subspace, rays: Vec<Vector>) -> Vec<Vector> {
    let target = dim - l.dim();
    let mut set: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for r in rays {
        let p = project_off(l, &r);
        if is_zero_vec(&p) {
            continue;
        }
        set.insert(primitive_integer(&p));
    }
    set.into_iter()
        .map(|p| p.into_iter().map(Q::from_integer).collect::<Vector>())
        .filter(|r| {
            let active: Vec<Vector> = ineqs.iter().filter(|g| dot(g, r).is_zero()).cloned().collect();
            let rank = if active.is_empty() { 0 } else { Matrix::from_rows(&active, dim).rank() };
            rank + 1 == target
        })
        .collect()
}

/// A chamber of a central arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    /// Sign of each hyperplane functional on the chamber.
    pub signs: Vec<i8>,
    /// Rational interior point (sum of the closed chamber's rays).
    pub representative: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSet {
    pub hyperplanes: Vec<Vector>,
    pub chambers: Vec<Chamber>,
}

impl Chamber {
    pub fn closure(&self, hyperplanes: &[Vector]) -> Cone {
        let dim = self.representative.len();
        let ineqs: Vec<Vector> =
            hyperplanes.iter().zip(&self.signs).map(|(h, &s)| crate::linalg::scale_vec(&q(-i64::from(s)), h)).collect();
        Cone::from_inequalities(dim, &ineqs)
    }
}

/// Chambers by wall-flipping traversal from a seed chamber, in sorted sign-vector order.
pub fn enumerate_chambers(dim: usize, hyperplanes: &[Vector]) -> Result<ChamberSet> {
    let mut hs: Vec<Vec<BigInt>> = Vec::new();
    for h in hyperplanes {
        if h.len() != dim {
            return Err(Error::Dimension { expected: dim, got: h.len() });
        }
        if is_zero_vec(h) {
            return Err(Error::Invalid("zero functional in arrangement".into()));
        }
        let p = primitive_line(h);
        if !hs.contains(&p) {
            hs.push(p);
        }
    }
    hs.sort();
    let hyperplanes: Vec<Vector> = hs.into_iter().map(|p| p.into_iter().map(Q::from_integer).collect()).collect();
    let seed = generic_point(dim, &hyperplanes);
    let sign_of = |x: &[Q]| -> Vec<i8> { hyperplanes.iter().map(|h| if dot(h, x).is_positive() { 1 } else { -1 }).collect() };
    let mut visited: BTreeMap<Vec<i8>, Vector> = BTreeMap::new();
    let mut frontier: BTreeSet<Vec<i8>> = BTreeSet::from([sign_of(&seed)]);
    while let Some(signs) = frontier.pop_first() {
        if visited.contains_key(&signs) {
            continue;
        }
        let ch = Chamber { signs: signs.clone(), representative: vec![] };
        let cone = Chamber { representative: zero_vec(dim), ..ch }.closure(&hyperplanes);
        let rep = cone.interior_point();
        if sign_of(&rep) != signs || hyperplanes.iter().any(|h| dot(h, &rep).is_zero()) {
            return Err(Error::Contract("chamber representative is not interior".into()));
        }
        for f in cone.facets() {
            let idx = (0..hyperplanes.len())
                .find(|&i| primitive_line(&hyperplanes[i]) == primitive_line(&f))
                .ok_or_else(|| Error::Contract("facet not in arrangement".into()))?;
            let mut flipped = signs.clone();
            flipped[idx] = -flipped[idx];
            if !visited.contains_key(&flipped) {
                frontier.insert(flipped);
            }
        }
        visited.insert(signs, rep);
    }
    let chambers = visited.into_iter().map(|(signs, representative)| Chamber { signs, representative }).collect();
    Ok(ChamberSet { hyperplanes, chambers })
}

/// A point off every hyperplane, taken on the moment curve `(1, N, N², …)`.
fn generic_point(dim: usize, hyperplanes: &[Vector]) -> Vector {
    for n in 2i64.. {
        let x: Vector = (0..dim).map(|i| q(n.pow(i as u32))).collect();
        if hyperplanes.iter().all(|h| !dot(h, &x).is_zero()) {
            return x;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_one_half_line() {
        let c = Cone::from_inequalities(1, &[v(&[2])]);
        assert_eq!(c.rays(), &[v(&[-1])]);
        assert!(c.lineality().is_zero());
        let faces = c.faces();
        assert_eq!(faces.len(), 2);
        assert_eq!(c.walls().len(), 1);
        assert!(c.walls()[0].dimension() == 0);
        assert!(c.edge().is_zero());
    }

    #[test]
    fn whole_space_and_its_dual() {
        let c = Cone::whole_space(2);
        assert_eq!(c.lineality().dim(), 2);
        assert!(c.walls().is_empty());
        assert_eq!(c.faces().len(), 1);
        let d = c.dual();
        assert_eq!(d.dimension(), 0);
    }

    #[test]
    fn quadrant_and_dual() {
        let c = Cone::from_inequalities(2, &[v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(c.rays(), &[v(&[-1, 0]), v(&[0, -1])]);
        let d = c.dual();
        assert_eq!(d.rays(), &[v(&[-1, 0]), v(&[0, -1])]);
        assert_eq!(d.dual(), c);
        assert_eq!(c.faces().len(), 4);
        assert_eq!(c.walls().len(), 2);
    }

    #[test]
    fn half_plane() {
        let c = Cone::from_inequalities(2, &[v(&[1, 1])]);
        assert_eq!(c.lineality(), &Subspace::span(2, &[v(&[1, -1])]));
        assert_eq!(c.walls().len(), 1);
        assert_eq!(c.walls()[0].span(), Subspace::span(2, &[v(&[1, -1])]));
        assert_eq!(c.edge(), Subspace::span(2, &[v(&[1, -1])]));
    }

    #[test]
    fn redundant_inequalities_and_generators() {
        let c = Cone::from_inequalities(2, &[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
        assert_eq!(c.facets().len(), 2);
        let g = Cone::from_generators(2, &[v(&[-1, 0]), v(&[0, -1]), v(&[-1, -1])], &[]);
        assert_eq!(g, c);
    }

    #[test]
    fn chambers_small() {
        let one = enumerate_chambers(1, &[v(&[2])]).unwrap();
        assert_eq!(one.chambers.len(), 2);
        let two = enumerate_chambers(2, &[v(&[1, 0]), v(&[0, 1]), v(&[1, 1]), v(&[2, 2])]).unwrap();
        assert_eq!(two.hyperplanes.len(), 3);
        assert_eq!(two.chambers.len(), 6);
        assert!(enumerate_chambers(2, &[v(&[0, 0])]).is_err());
        let none = enumerate_chambers(2, &[]).unwrap();
        assert_eq!(none.chambers.len(), 1);
    }
}
