use littleweyl::catalog;
use littleweyl::lie::MLattice;
use littleweyl::linalg::{add_vec, scale_vec, sub_vec, Vector};
use littleweyl::rational::{q, qf, QStr};
use littleweyl::spherical::{
    adaptedness, boundary_degeneration, compression_cone_from_limits, find_admissible, has_open_p_orbit,
    is_adapted, is_admissible, m_conjugate, nt_fallback, recover_q, translate, AdmissibleMethod, NtFamily,
    RootTerm, WordEntry,
};
use littleweyl::{Error, LieAlgebra, NotAdaptedReason, Space, SphericalAnalysis, Subspace};
use num_traits::Zero;
use proptest::prelude::*;

fn sl2() -> (LieAlgebra, Vector, Vector, Vector) {
    let g = LieAlgebra::from_type("A1", 0).unwrap();
    let (f, h, e) = (g.basis_vector(0), g.basis_vector(1), g.basis_vector(2));
    (g, f, h, e)
}

fn span(g: &LieAlgebra, vs: &[Vector]) -> Subspace {
    Subspace::span(g.dim(), vs)
}

fn exp_e(coeff: i64) -> WordEntry {
    WordEntry::Nilpotent(vec![RootTerm { root: vec![1], coeff: q(coeff).into() }])
}

/// `(e,−f), (h,−h), (f,−e)` in `sl2 ⊕ sl2`; basis order f1 f2 h1 h2 e1 e2.
fn twisted_diagonal() -> (LieAlgebra, Subspace) {
    let g = LieAlgebra::from_type("A1xA1", 0).unwrap();
    let b = |k: usize| g.basis_vector(k);
    let rows = vec![sub_vec(&b(4), &b(1)), sub_vec(&b(2), &b(3)), sub_vec(&b(0), &b(5))];
    let h = span(&g, &rows);
    (g, h)
}

#[test]
fn translate_examples() {
    let (g, f, h, e) = sl2();
    let nbar = span(&g, std::slice::from_ref(&f));
    assert_eq!(translate(&g, &nbar, &[]).unwrap().h_z, nbar);
    // Ad(exp e) f = f + [e,f] + ½[e,[e,f]] = f + h − e.
    let moved = translate(&g, &nbar, &[exp_e(1)]).unwrap();
    assert_eq!(moved.h_z, span(&g, &[sub_vec(&add_vec(&f, &h), &e)]));
    let torus = translate(&g, &nbar, &[WordEntry::Torus(vec![q(5).into()])]).unwrap();
    assert_eq!(torus.h_z, nbar);
}

#[test]
fn open_orbit_examples() {
    let (g, f, h, e) = sl2();
    assert!(has_open_p_orbit(&g, &span(&g, &[f])));
    assert!(!has_open_p_orbit(&g, &span(&g, &[h])));
    assert!(!has_open_p_orbit(&g, &span(&g, &[e])));
}

#[test]
fn levi_recovery_examples() {
    let (g, f, h, e) = sl2();
    let levi = recover_q(&g, &span(&g, std::slice::from_ref(&f))).unwrap();
    assert_eq!(levi.v, Subspace::full(1));
    assert_eq!(levi.sigma_q.len(), 1);
    assert_eq!(levi.l_q, g.a());
    let moved = span(&g, &[sub_vec(&add_vec(&f, &h), &e)]);
    // B(h, f + h − e) ≠ 0 leaves V = 0: the candidate Levi is all of g, which h_z does not contain.
    let levi = recover_q(&g, &moved).unwrap();
    assert!(levi.v.is_zero() && levi.sigma_q.is_empty());
    assert_eq!(adaptedness(&g, &moved).unwrap(), Some(NotAdaptedReason::LeviNotContained));

    let (g2, diag) = twisted_diagonal();
    let levi = recover_q(&g2, &diag).unwrap();
    assert_eq!(levi.v, Subspace::span(2, &[vec![q(1), q(1)]]));
    assert_eq!(levi.sigma_q.len(), 2);
}

#[test]
fn adaptedness_examples() {
    let (g, f, h, e) = sl2();
    assert!(is_adapted(&g, &span(&g, std::slice::from_ref(&f))));
    assert!(!is_adapted(&g, &span(&g, &[sub_vec(&add_vec(&f, &h), &e)])));
    assert!(is_adapted(&g, &span(&g, &[sub_vec(&e, &f)])));
    assert_eq!(adaptedness(&g, &g.a()).unwrap(), Some(NotAdaptedReason::NoOpenOrbit));
    assert_eq!(adaptedness(&g, &span(&g, std::slice::from_ref(&f))).unwrap(), None);
}

#[test]
fn t_and_s_z_examples() {
    let (g, f, _, e) = sl2();
    let an = SphericalAnalysis::new(&g, &span(&g, std::slice::from_ref(&f))).unwrap();
    assert!(an.t_map.values().all(|t| t.iter().all(Zero::is_zero)));
    assert!(an.supports.values().all(Vec::is_empty));
    assert!(an.s_z.is_empty());

    // e − f = Y + T(Y) with Y = −f, so T(f) = −e and supp(g_{−α}) = {α}.
    let so2 = SphericalAnalysis::new(&g, &span(&g, &[sub_vec(&e, &f)])).unwrap();
    let alpha = g.simple_root(0);
    assert_eq!(so2.t_map[&alpha], scale_vec(&q(-1), &e));
    assert_eq!(so2.s_z, vec![vec![2]]);

    let (g2, diag) = twisted_diagonal();
    let an = SphericalAnalysis::new(&g2, &diag).unwrap();
    assert_eq!(an.s_z, vec![vec![1, 1]]);
    assert_eq!(an.a_h, Subspace::span(2, &[vec![q(1), q(-1)]]));
}

#[test]
fn compression_cone_examples() {
    let (g, f, _, e) = sl2();
    let nbar = SphericalAnalysis::new(&g, &span(&g, std::slice::from_ref(&f))).unwrap();
    assert_eq!(nbar.compression_cone(&g).dimension(), 1);
    assert!(nbar.compression_cone(&g).lineality().dim() == 1);
    let so2 = SphericalAnalysis::new(&g, &span(&g, &[sub_vec(&e, &f)])).unwrap();
    let c = so2.compression_cone(&g);
    assert!(c.contains_strictly(&[q(-1)]));
    assert!(!c.contains(&[q(1)]));

    let (g2, diag) = twisted_diagonal();
    let c = SphericalAnalysis::new(&g2, &diag).unwrap().compression_cone(&g2);
    // α(X1) + α(X2) = 2x1 + 2x2 in coroot coordinates.
    assert!(c.contains_strictly(&[q(-1), q(0)]));
    assert!(c.contains(&[q(3), q(-3)]));
    assert!(!c.contains(&[q(1), q(0)]));
    assert_eq!(c.lineality().dim(), 1);
}

#[test]
fn phi_examples() {
    let (g, f, _, e) = sl2();
    let so2 = SphericalAnalysis::new(&g, &span(&g, &[sub_vec(&e, &f)])).unwrap();
    // B(h, e − f) = 0, so T^⊥(−h) = 0 and Φ vanishes.
    assert!(so2.tperp_of(&g, &[q(-1)]).unwrap().iter().all(Zero::is_zero));
    assert!(so2.phi(&g, &[q(-1)]).unwrap().iter().all(Zero::is_zero));
    assert!(so2.phi(&g, &[q(0)]).is_err());
}

#[test]
fn degeneration_examples() {
    let (g, f, _, e) = sl2();
    let h = span(&g, &[sub_vec(&e, &f)]);
    let an = SphericalAnalysis::new(&g, &h).unwrap();
    let cone = an.compression_cone(&g);
    let whole = boundary_degeneration(&g, &an, &cone).unwrap();
    assert!(m_conjugate(&g, &whole.h_zf, &an.h_empty, MLattice::Coroot));
    let origin = cone.faces().into_iter().find(|c| c.dimension() == 0).unwrap();
    let at_origin = boundary_degeneration(&g, &an, &origin).unwrap();
    assert_eq!(at_origin.h_zf, h);
}

#[test]
fn admissibility_examples() {
    let (g, f, _, e) = sl2();
    let nbar = SphericalAnalysis::new(&g, &span(&g, std::slice::from_ref(&f))).unwrap();
    let rep = is_admissible(&g, &nbar).unwrap();
    assert!(rep.admissible && rep.a_h_dim == 0 && rep.chambers.len() == 2);
    let so2 = SphericalAnalysis::new(&g, &span(&g, &[sub_vec(&e, &f)])).unwrap();
    assert!(is_admissible(&g, &so2).unwrap().admissible);
}

#[test]
fn find_admissible_on_the_catalog() {
    for entry in catalog::list_entries() {
        let space = Space::from_catalog(&entry).unwrap();
        let search = find_admissible(&space.g, &space.point, 0, 10).unwrap();
        assert!(search.report.admissible, "{}", entry.name);
        if entry.expected.admissible {
            assert_eq!(search.method, AdmissibleMethod::Input, "{}", entry.name);
            assert_eq!(search.point.h_z, space.point.h_z);
        } else {
            assert!(search.attempts <= 10, "{}", entry.name);
        }
    }
}

#[test]
fn nt_family_on_the_half_space_entry() {
    let space = Space::resolve("A1T1_torus_twist").unwrap();
    let (t, point, report) = nt_fallback(&space.g, &space.point, 8).unwrap();
    assert!(report.admissible && (1..=8).contains(&t));
    assert!(is_adapted(&space.g, &point.h_z));
    // The group case has T^⊥ = 0 and no a in any support, so the family does not apply there.
    let group = Space::resolve("A1xA1_diag_w0").unwrap();
    let an = SphericalAnalysis::new(&group.g, &group.point.h_z).unwrap();
    assert!(matches!(NtFamily::new(&group.g, &an), Err(Error::Invalid(_))));
}

#[test]
fn non_adapted_translate_has_a_smaller_cone() {
    let (g, f, _, _) = sl2();
    let nbar = span(&g, std::slice::from_ref(&f));
    let moved = translate(&g, &nbar, &[exp_e(1)]).unwrap();
    let c = compression_cone_from_limits(&g, &moved.h_z, &nbar, MLattice::Coroot).unwrap();
    assert!(c.contains_strictly(&[q(-1)]));
    assert!(!c.contains(&[q(1)]));
    let full = compression_cone_from_limits(&g, &nbar, &nbar, MLattice::Coroot).unwrap();
    assert!(full.contains_cone(&c) && !c.contains_cone(&full));
}

#[test]
fn degenerate_inputs() {
    // h_z = g and horospherical h_z: S_z is empty and the cone is everything.
    let g = LieAlgebra::from_type("A2", 0).unwrap();
    let an = SphericalAnalysis::new(&g, &Subspace::full(g.dim())).unwrap();
    assert!(an.s_z.is_empty());
    assert_eq!(an.compression_cone(&g).lineality().dim(), 2);
    let nbar = SphericalAnalysis::new(&g, &g.nbar()).unwrap();
    assert!(nbar.s_z.is_empty());
}

const ENTRIES: &[&str] =
    &["A1_so2", "A1_so11", "A1xA1_diag_w0", "A2_so3", "A2_levi_horo", "A1T1_torus_twist", "B2_k"];

fn torus(vals: &[(i64, i64)], rank: usize) -> WordEntry {
    WordEntry::Torus(vals.iter().take(rank).map(|&(n, d)| QStr(qf(n, d))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn torus_translates_keep_a_h_and_s_z(idx in 0..ENTRIES.len(), vals in prop::collection::vec((1i64..6, 1i64..6), 2)) {
        let space = Space::resolve(ENTRIES[idx]).unwrap();
        let g = &space.g;
        let base = SphericalAnalysis::new(g, &space.point.h_z).unwrap();
        let moved = space.point.act(g, torus(&vals, g.rank())).unwrap();
        let an = SphericalAnalysis::new(g, &moved.h_z).unwrap();
        prop_assert_eq!(&an.a_h, &base.a_h);
        prop_assert_eq!(&an.s_z, &base.s_z);
    }

    #[test]
    fn brion_symmetry_after_torus_translates(idx in 0..ENTRIES.len(), vals in prop::collection::vec((1i64..6, 1i64..6), 2)) {
        let space = Space::resolve(ENTRIES[idx]).unwrap();
        let g = &space.g;
        let moved = space.point.act(g, torus(&vals, g.rank())).unwrap();
        let an = SphericalAnalysis::new(g, &moved.h_z).unwrap();
        prop_assert!(littleweyl::verify::brion_symmetry(g, &an).is_ok());
        prop_assert!(littleweyl::verify::tperp_property(g, &an).is_ok());
    }

    #[test]
    fn phi_satisfies_its_defining_identity(idx in 0..ENTRIES.len(), y in prop::collection::vec(-5i64..=5, 3)) {
        let space = Space::resolve(ENTRIES[idx]).unwrap();
        let g = &space.g;
        let an = SphericalAnalysis::new(g, &space.point.h_z).unwrap();
        // A point of a° with integer coordinates on its echelon basis.
        let x = an.a_circ.basis().iter().zip(&y).fold(vec![q(0); g.a_dim()], |acc, (b, c)| add_vec(&acc, &scale_vec(&q(*c), b)));
        prop_assume!(an.is_regular(g, &x));
        let phi = an.phi(g, &x).unwrap();
        let neg: Vector = phi.iter().map(|c| -c).collect();
        let ad = WordEntry::nilpotent_from_vector(g, &neg).adjoint(g).unwrap();
        let lhs = ad.apply(&g.a_to_g(&x));
        let rhs = add_vec(&g.a_to_g(&x), &an.tperp_of(g, &x).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
