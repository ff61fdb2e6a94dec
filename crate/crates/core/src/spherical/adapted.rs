use num_traits::{Signed, Zero};

use crate::cones::Cone;
use crate::error::{Error, NotAdaptedReason, Result};
use crate::lie::{LieAlgebra, RootId};
use crate::linalg::{dot, zero_vec, Vector};
use crate::subspace::Subspace;

/// The parabolic `Q ⊇ P` read off from `a ∩ h_z^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviData {
    /// `V = a ∩ h_z^⊥` in `a`-coordinates.
    pub v: Subspace,
    /// `Σ(Q)`: positive roots not vanishing on `V`.
    pub sigma_q: Vec<RootId>,
    /// Roots of `l_Q`, both signs.
    pub sigma_0: Vec<RootId>,
    pub l_q: Subspace,
    pub l_q_nc: Subspace,
    pub n_q: Subspace,
    pub nbar_q: Subspace,
    /// An element of `V` positive on `Σ(Q)`, in `a`-coordinates.
    pub witness: Vector,
}

impl LeviData {
    pub fn q(&self) -> Subspace {
        self.l_q.sum(&self.n_q)
    }
}

pub fn has_open_p_orbit(g: &LieAlgebra, h_z: &Subspace) -> bool {
    h_z.sum(&g.p()).dim() == g.dim()
}

/// `a ∩ E^⊥` in `a`-coordinates.
pub fn a_perp(g: &LieAlgebra, e: &Subspace) -> Subspace {
    let idx = g.a_indices();
    let rows: Vec<Vector> = e
        .basis()
        .iter()
        .map(|b| {
            let fb = g.form_matrix().apply(b);
            idx.iter().map(|&k| fb[k].clone()).collect()
        })
        .collect();
    Subspace::solutions(g.a_dim(), &rows)
}

/// `a ∩ E` in `a`-coordinates.
pub fn a_part(g: &LieAlgebra, e: &Subspace) -> Subspace {
    let vs: Vec<Vector> = e.intersect(&g.a()).basis().iter().map(|b| g.g_to_a(b).expect("inside a")).collect();
    Subspace::span(g.a_dim(), &vs)
}

pub fn recover_q(g: &LieAlgebra, h_z: &Subspace) -> Result<LeviData> {
    let v = a_perp(g, h_z);
    let vb = v.basis();
    let vanishes = |r: RootId| {
        let f = g.root_functional(r);
        vb.iter().all(|x| dot(&f, x).is_zero())
    };
    let sigma_0: Vec<RootId> = g.all_roots().filter(|&r| vanishes(r)).collect();
    let sigma_q: Vec<RootId> = g.positive_roots().filter(|&r| !vanishes(r)).collect();
    let l_q = g.a().sum(&g.span_of_roots(&sigma_0));
    let coroots: Vec<Vector> = sigma_0.iter().map(|&r| g.a_to_g(&g.coroot(r))).collect();
    let l_q_nc = g.span_of_roots(&sigma_0).sum(&Subspace::span(g.dim(), &coroots));
    let n_q = g.span_of_roots(&sigma_q);
    let nbar_q = g.span_of_roots(&sigma_q.iter().map(|&r| g.negate(r)).collect::<Vec<_>>());

    // Strict positivity of Σ(Q) on V, in coordinates of V's basis.
    let ineqs: Vec<Vector> = sigma_q
        .iter()
        .map(|&r| {
            let f = g.root_functional(r);
            vb.iter().map(|x| -dot(&f, x)).collect()
        })
        .collect();
    let cone = Cone::from_inequalities(vb.len(), &ineqs);
    if !cone.is_strictly_feasible() {
        return Err(Error::NotAdapted(NotAdaptedReason::NoRegularElement));
    }
    let c = cone.interior_point();
    let mut witness = zero_vec(g.a_dim());
    for (ci, x) in c.iter().zip(&vb) {
        crate::linalg::axpy(&mut witness, ci, x);
    }
    debug_assert!(sigma_q.iter().all(|&r| dot(&g.root_functional(r), &witness).is_positive()));
    Ok(LeviData { v, sigma_q, sigma_0, l_q, l_q_nc, n_q, nbar_q, witness })
}

/// Full adaptedness test with its two consistency checks.
pub fn check_adapted(g: &LieAlgebra, h_z: &Subspace) -> Result<LeviData> {
    if !has_open_p_orbit(g, h_z) {
        return Err(Error::NotAdapted(NotAdaptedReason::NoOpenOrbit));
    }
    let levi = recover_q(g, h_z)?;
    if !h_z.contains(&levi.l_q_nc) {
        return Err(Error::NotAdapted(NotAdaptedReason::LeviNotContained));
    }
    let l_cap_h = levi.l_q.intersect(h_z);
    if levi.q().intersect(h_z) != l_cap_h {
        return Err(Error::Contract("q ∩ h_z differs from l_Q ∩ h_z".into()));
    }
    let perp = g.orthocomplement(h_z).dim();
    if perp != levi.n_q.dim() + levi.l_q.dim() - l_cap_h.dim() {
        return Err(Error::Contract("dim h_z^⊥ ≠ dim n_Q + dim l_Q − dim(l_Q ∩ h_z)".into()));
    }
    Ok(levi)
}

pub fn is_adapted(g: &LieAlgebra, h_z: &Subspace) -> bool {
    check_adapted(g, h_z).is_ok()
}

/// Why `h_z` is not adapted, if it is not; contract diagnostics are passed through.
pub fn adaptedness(g: &LieAlgebra, h_z: &Subspace) -> Result<Option<NotAdaptedReason>> {
    match check_adapted(g, h_z) {
        Ok(_) => Ok(None),
        Err(Error::NotAdapted(r)) => Ok(Some(r)),
        Err(e) => Err(e),
    }
}
