use num_traits::Zero;

use super::analysis::{in_monoid, SphericalAnalysis};
use crate::cones::{enumerate_chambers, Cone};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, MLattice, SignCharacterGroup};
use crate::limits::{limit_along, order_regular_hyperplanes};
use crate::linalg::{dot, unit_vec, Vector};
use crate::subspace::Subspace;

/// `h_{z,F}` together with the data that produced it.
#[derive(Clone, Debug)]
pub struct DegenerationData {
    pub face: Cone,
    /// Indecomposables of `M_z` vanishing on the face; they generate `M_{z,F}`.
    pub monoid_generators: Vec<Vec<i64>>,
    /// Rational point of the relative interior of the face.
    pub interior_point: Vector,
    pub h_zf: Subspace,
}

/// `h_{z,F} = (l_Q ∩ h_z) ⊕ ⊕_α graph(Σ_{σ ∈ −α + M_{z,F}} p_σ ∘ T|g_{−α})`.
pub fn boundary_degeneration(g: &LieAlgebra, an: &SphericalAnalysis, face: &Cone) -> Result<DegenerationData> {
    let cone = an.compression_cone(g);
    if !cone.faces().contains(face) {
        return Err(Error::Invalid("not a face of the compression cone".into()));
    }
    let x = face.interior_point();
    let monoid_generators: Vec<Vec<i64>> =
        an.indecomposables.iter().filter(|s| dot(&g.functional(s), &x).is_zero()).cloned().collect();
    let mut parts: Vec<Vector> = an.l_cap_h.basis();
    for (&alpha, t) in &an.t_map {
        let a_root = g.root(alpha);
        let mut v = unit_vec(g.dim(), g.root_vector(g.negate(alpha)));
        for k in 0..g.dim() {
            if t[k].is_zero() {
                continue;
            }
            // The weight-σ component survives iff σ ∈ −α + M_{z,F}.
            let shifted: Vec<i64> = g.basis_weight(k).iter().zip(&a_root).map(|(b, a)| b + a).collect();
            if in_monoid(&shifted, &monoid_generators) {
                v[k] += &t[k];
            }
        }
        parts.push(v);
    }
    let h_zf = Subspace::span(g.dim(), &parts);
    Ok(DegenerationData { face: face.clone(), monoid_generators, interior_point: x, h_zf })
}

/// Whether `l = χ · h` for some sign character `χ`.
pub fn m_conjugate(g: &LieAlgebra, l: &Subspace, h: &Subspace, lattice: MLattice) -> bool {
    SignCharacterGroup::new(g, lattice).elements.iter().any(|chi| &h.map(&SignCharacterGroup::matrix(g, chi)) == l)
}

/// Closure of `{X : h_{z,X} = Ad(m) h_∅}` assembled from the order-regular chambers.
///
/// Works for any point with an open `P`-orbit; `h_empty` must come from an adapted point.
pub fn compression_cone_from_limits(g: &LieAlgebra, h_z: &Subspace, h_empty: &Subspace, lattice: MLattice) -> Result<Cone> {
    let chambers = enumerate_chambers(g.a_dim(), &order_regular_hyperplanes(g))?;
    let mut rays: Vec<Vector> = Vec::new();
    let mut lines: Vec<Vector> = Vec::new();
    let mut matched = Vec::new();
    for ch in &chambers.chambers {
        let hit = m_conjugate(g, &limit_along(g, h_z, &ch.representative), h_empty, lattice);
        matched.push(hit);
        if hit {
            let closure = ch.closure(&chambers.hyperplanes);
            rays.extend(closure.rays().iter().cloned());
            lines.extend(closure.lineality().basis());
        }
    }
    let cone = Cone::from_generators(g.a_dim(), &rays, &lines);
    for (ch, hit) in chambers.chambers.iter().zip(matched) {
        if cone.contains_relative_interior(&ch.representative) != hit {
            return Err(Error::Contract("chambers with h_∅ limits do not form a convex cone".into()));
        }
    }
    Ok(cone)
}
