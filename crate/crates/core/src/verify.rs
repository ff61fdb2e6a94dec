//! Invariant suites run against a space, plus the seeded random limit suite.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cones::{enumerate_chambers, Cone};
use crate::error::Result;
use crate::lie::{LieAlgebra, MLattice};
use crate::limits::{float_flow_oracle, is_order_regular, limit_along, order_regular_hyperplanes};
use crate::linalg::{add_vec, dot, unit_vec, zero_vec, Vector};
use crate::rational::{q, QStr};
use crate::report::{diff_expected, CheckResult, Pipeline, Report};
use crate::spherical::adapted::{a_part, check_adapted};
use crate::spherical::admissible::sample_regular;
use crate::spherical::analysis::in_monoid;
use crate::spherical::word::is_subalgebra;
use crate::spherical::{boundary_degeneration, compression_cone_from_limits, SphericalAnalysis, WordEntry};
use crate::subspace::Subspace;
use crate::weyl::wall_degeneration_checks;

fn check(suite: &str, result: std::result::Result<(), String>) -> CheckResult {
    match result {
        Ok(()) => CheckResult { suite: suite.into(), passed: true, detail: String::new() },
        Err(detail) => CheckResult { suite: suite.into(), passed: false, detail },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err_str<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `q ∩ h_z = l_Q ∩ h_z` and the dimension identity.
pub fn adapted_cross_checks(g: &LieAlgebra, an: &SphericalAnalysis) -> std::result::Result<(), String> {
    let levi = err_str(check_adapted(g, &an.h_z))?;
    ensure(levi.q().intersect(&an.h_z) == levi.l_q.intersect(&an.h_z), || "q ∩ h_z ≠ l_Q ∩ h_z".into())?;
    ensure(an.h_z.contains(&levi.l_q_nc), || "l_Q,nc ⊄ h_z".into())
}

/// `B([X,Y1], T(Y2)) = B([X,Y2], T(Y1))` on `a ∩ h_z^⊥ × n̄_Q × n̄_Q`.
pub fn brion_symmetry(g: &LieAlgebra, an: &SphericalAnalysis) -> std::result::Result<(), String> {
    let ys: Vec<Vector> = an.sigma_q().iter().map(|&r| unit_vec(g.dim(), g.root_vector(g.negate(r)))).collect();
    for x in an.levi.v.basis() {
        let xg = g.a_to_g(&x);
        for y1 in &ys {
            for y2 in &ys {
                let lhs = g.form(&g.bracket(&xg, y1), &an.t(g, y2));
                let rhs = g.form(&g.bracket(&xg, y2), &an.t(g, y1));
                ensure(lhs == rhs, || format!("asymmetric at X = {x:?}: {lhs} ≠ {rhs}"))?;
            }
        }
    }
    Ok(())
}

/// `X + T^⊥(X) ⊥ h_z` and `[T^⊥(X), l_Q ∩ h_z] = 0`.
pub fn tperp_property(g: &LieAlgebra, an: &SphericalAnalysis) -> std::result::Result<(), String> {
    let perp = g.orthocomplement(&an.h_z);
    for (x, img) in &an.tperp {
        ensure(perp.contains_vector(&add_vec(&g.a_to_g(x), img)), || format!("X + T^⊥(X) ∉ h_z^⊥ for {x:?}"))?;
        for l in an.l_cap_h.basis() {
            ensure(g.bracket(img, &l).iter().all(Zero::is_zero), || "T^⊥(X) does not centralize l_Q ∩ h_z".into())?;
        }
    }
    Ok(())
}

/// `a⁻ ⊆ C̄` and `C̄ + a_h = C̄`.
pub fn cone_shape(g: &LieAlgebra, an: &SphericalAnalysis, cone: &Cone) -> std::result::Result<(), String> {
    let simple: Vec<Vector> = (0..g.rank()).map(|i| g.root_functional(g.simple_root(i))).collect();
    let neg_chamber = Cone::from_inequalities(g.a_dim(), &simple);
    ensure(cone.contains_cone(&neg_chamber), || "closed negative chamber not contained in C̄".into())?;
    ensure(cone.lineality().contains(&an.a_h), || "a_h not in the edge".into())
}

/// Edge of `C̄` equals `N_a(h_z)` computed from brackets.
pub fn edge_normalizer(g: &LieAlgebra, an: &SphericalAnalysis, cone: &Cone) -> std::result::Result<(), String> {
    let n = g.normalizer_in_a(&an.h_z);
    ensure(cone.edge() == n, || format!("edge {:?} ≠ N_a(h_z) {:?}", cone.edge().basis(), n.basis()))
}

/// Per-face checks: normalizers, limit cross-check, monoid cross-check.
pub fn face_suite(g: &LieAlgebra, an: &SphericalAnalysis, cone: &Cone) -> std::result::Result<(), String> {
    for face in cone.faces() {
        let deg = err_str(boundary_degeneration(g, an, &face))?;
        let rays = face.rays().len();
        ensure(a_part(g, &deg.h_zf) == an.a_h, || format!("a ∩ h_z,F ≠ a_h on a face with {rays} rays"))?;
        ensure(g.normalizer_in_a(&deg.h_zf) == face.span(), || format!("N_a(h_z,F) ≠ a_F on a face with {rays} rays"))?;
        ensure(limit_along(g, &an.h_z, &deg.interior_point) == deg.h_zf, || {
            format!("h_z,F ≠ limit at {:?}", deg.interior_point)
        })?;
        for (&alpha, t) in &an.t_map {
            let a_root = g.root(alpha);
            for k in (0..g.dim()).filter(|&k| !t[k].is_zero()) {
                let shifted: Vec<i64> = g.basis_weight(k).iter().zip(&a_root).map(|(b, a)| b + a).collect();
                let direct = dot(&g.functional(&shifted), &deg.interior_point).is_zero();
                ensure(in_monoid(&shifted, &deg.monoid_generators) == direct, || {
                    format!("monoid search and σ(X_F) = 0 disagree on {shifted:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn regular_samples(g: &LieAlgebra, an: &SphericalAnalysis, seed: u64, n: usize) -> Vec<Vector> {
    if an.a_circ.is_zero() {
        return vec![];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| sample_regular(g, an, &mut rng)).collect()
}

/// `Φ` satisfies its identity and lands in `⊕{g_α : α ≤ 0 on C̄}`.
pub fn phi_suite(g: &LieAlgebra, an: &SphericalAnalysis, cone: &Cone, seed: u64) -> std::result::Result<(), String> {
    for y in regular_samples(g, an, seed, 4) {
        let phi = err_str(an.phi(g, &y))?;
        for r in g.all_roots() {
            if phi[g.root_vector(r)].is_zero() {
                continue;
            }
            let f = g.root_functional(r);
            let nonpositive = cone.rays().iter().all(|x| !dot(&f, x).is_positive())
                && cone.lineality().basis().iter().all(|x| dot(&f, x).is_zero());
            ensure(nonpositive, || format!("Φ({y:?}) has a component on {:?}", g.root(r)))?;
        }
    }
    Ok(())
}

/// Truncating `Φ_z` to roots vanishing on a face equals `Φ` of the degeneration.
pub fn phi_degeneration(g: &LieAlgebra, an: &SphericalAnalysis, cone: &Cone, seed: u64) -> std::result::Result<(), String> {
    let samples = regular_samples(g, an, seed, 3);
    for face in cone.faces() {
        let deg = err_str(boundary_degeneration(g, an, &face))?;
        let an_f = err_str(SphericalAnalysis::new(g, &deg.h_zf))?;
        for y in samples.iter().filter(|y| an_f.is_regular(g, y)) {
            let phi = err_str(an.phi(g, y))?;
            let mut truncated = zero_vec(g.dim());
            for r in g.all_roots() {
                let k = g.root_vector(r);
                if dot(&g.root_functional(r), &deg.interior_point).is_zero() {
                    truncated[k] = phi[k].clone();
                }
            }
            let phi_f = err_str(an_f.phi(g, y))?;
            ensure(truncated == phi_f, || format!("truncated Φ ≠ Φ_F at {y:?}"))?;
        }
    }
    Ok(())
}

/// `a ∩ h` is unchanged by torus translates and by `exp Φ(Y)` translates, which stay adapted.
pub fn translate_suite(g: &LieAlgebra, an: &SphericalAnalysis, seed: u64) -> std::result::Result<(), String> {
    let torus = WordEntry::Torus((0..g.rank()).map(|i| QStr(q(i as i64 + 2))).collect());
    let mut translates = vec![an.h_z.map(&err_str(torus.adjoint(g))?)];
    for y in regular_samples(g, an, seed, 2) {
        let phi = err_str(an.phi(g, &y))?;
        let m = err_str(WordEntry::nilpotent_from_vector(g, &phi).adjoint(g))?;
        translates.push(an.h_z.map(&m));
    }
    for h in translates {
        let other = err_str(SphericalAnalysis::new(g, &h))?;
        ensure(other.a_h == an.a_h, || "a ∩ h changed under an MA·exp Φ translate".into())?;
    }
    Ok(())
}

pub fn cone_from_limits_suite(g: &LieAlgebra, an: &SphericalAnalysis, cone: &Cone, lattice: MLattice) -> std::result::Result<(), String> {
    let from_limits = err_str(compression_cone_from_limits(g, &an.h_z, &an.h_empty, lattice))?;
    ensure(&from_limits == cone, || "cone assembled from limits differs from the S_z cone".into())
}

/// All per-space suites on a computed pipeline and its report.
pub fn space_suites(p: &Pipeline, report: &Report, seed: u64, lattice: MLattice) -> Vec<CheckResult> {
    let g = &p.space.g;
    let an = &p.analysis;
    let cone = &p.cone;
    let mut out = vec![
        check("adapted_cross_checks", adapted_cross_checks(g, an)),
        check("brion_symmetry", brion_symmetry(g, an)),
        check("t_perp_property", tperp_property(g, an)),
        check("cone_contains_negative_chamber_and_a_h", cone_shape(g, an, cone)),
        check("edge_equals_normalizer", edge_normalizer(g, an, cone)),
        check("faces_normalizers_limits_monoid", face_suite(g, an, cone)),
        check("phi_identity_and_image", phi_suite(g, an, cone, seed)),
        check("phi_degeneration", phi_degeneration(g, an, cone, seed)),
        check("ma_translates", translate_suite(g, an, seed)),
        check("cone_from_limits", cone_from_limits_suite(g, an, cone, lattice)),
        check(
            "orbit_independence",
            ensure(p.admissible_analysis.a_h == an.a_h, || "a ∩ h differs at the admissible point".into()),
        ),
        check("tiling", ensure(report.weyl.tiling.passes(), || format!("{:?}", report.weyl.tiling))),
        check(
            "weyl_agreement",
            ensure(report.weyl.agreement, || {
                format!("walls give {:?}, limits give {:?}", report.weyl.labels, report.weyl.limit_labels)
            }),
        ),
    ];
    let walls = wall_degeneration_checks(g, an, &p.weyl).map_err(|e| e.to_string()).and_then(|checks| {
        match checks.iter().find(|c| c.order != 2 || !c.matches_generator) {
            Some(c) => Err(format!("wall {:?}: degeneration group of order {}", c.functional, c.order)),
            None => Ok(()),
        }
    });
    out.push(check("wall_degeneration_subgroups", walls));
    let orders_ok = p.weyl.coxeter_orders.iter().flatten().all(|m| [1, 2, 3, 4, 6].contains(m));
    out.push(check("crystallographic_orders", ensure(orders_ok, || format!("{:?}", p.weyl.coxeter_orders))));
    if let Some(claims) = &p.space.claims {
        let diffs = diff_expected(claims, &report.summary());
        out.push(check("claims", ensure(diffs.is_empty(), || diffs.join("; "))));
    }
    out
}

/// Outcome of the seeded random limit suite.
#[derive(Clone, Debug, Default)]
pub struct LimitSuiteReport {
    pub instances: usize,
    pub max_distance: f64,
    pub failures: Vec<String>,
}

const RANK_TWO: &[(&str, usize)] = &[("A1", 0), ("A1", 1), ("A1xA1", 0), ("A2", 0), ("B2", 0), ("G2", 0)];

fn random_nilpotent(g: &LieAlgebra, rng: &mut ChaCha8Rng, positive: bool) -> Vector {
    let mut v = zero_vec(g.dim());
    for r in g.all_roots().filter(|&r| g.is_positive(r) == positive) {
        v[g.root_vector(r)] = q(rng.random_range(-2..=2));
    }
    v
}

/// A random subspace: half the time a conjugated standard subalgebra, otherwise a random span.
fn random_subspace(g: &LieAlgebra, rng: &mut ChaCha8Rng) -> Subspace {
    let n = g.dim();
    if rng.random_bool(0.5) {
        let standard = [g.nbar(), g.a(), g.n(), g.p(), Subspace::span(n, &[g.basis_vector(rng.random_range(0..n))])];
        let s = standard[rng.random_range(0..standard.len())].clone();
        let up = g.ad(&random_nilpotent(g, rng, true)).exp_nilpotent().expect("nilpotent");
        let down = g.ad(&random_nilpotent(g, rng, false)).exp_nilpotent().expect("nilpotent");
        s.map(&up.mul(&down))
    } else {
        let k = rng.random_range(1..n);
        let rows: Vec<Vector> = (0..k).map(|_| (0..n).map(|_| q(rng.random_range(-3..=3))).collect()).collect();
        Subspace::span(n, &rows)
    }
}

fn random_regular(g: &LieAlgebra, rng: &mut ChaCha8Rng) -> Vector {
    loop {
        let x: Vector = (0..g.a_dim()).map(|_| q(rng.random_range(-4..=4))).collect();
        if is_order_regular(g, &x) {
            return x;
        }
    }
}

/// Dimension, subalgebra closure, `a`-stability, chamber constancy and float agreement on random instances.
pub fn limit_suite(seed: u64, instances: usize, t_max: f64, tol: f64) -> LimitSuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebras: Vec<LieAlgebra> = RANK_TWO.iter().map(|&(t, c)| LieAlgebra::from_type(t, c).expect("valid")).collect();
    let chamber_sets: Vec<_> = algebras
        .iter()
        .map(|g| enumerate_chambers(g.a_dim(), &order_regular_hyperplanes(g)).expect("arrangement"))
        .collect();
    let mut report = LimitSuiteReport::default();
    for i in 0..instances {
        let which = i % algebras.len();
        let g = &algebras[which];
        let e = random_subspace(g, &mut rng);
        let x = random_regular(g, &mut rng);
        let lim = limit_along(g, &e, &x);
        let tag = format!("#{i} {} dim E = {} X = {:?}", RANK_TWO[which].0, e.dim(), x);
        report.instances += 1;
        if lim.dim() != e.dim() {
            report.failures.push(format!("{tag}: dimension changed"));
        }
        if is_subalgebra(g, &e) && !is_subalgebra(g, &lim) {
            report.failures.push(format!("{tag}: limit of a subalgebra is not a subalgebra"));
        }
        for h in g.a().basis() {
            if !lim.contains(&lim.map(&g.ad(&h)).sum(&lim)) {
                report.failures.push(format!("{tag}: limit is not a-stable"));
            }
        }
        // Chamber constancy: same limit at the chamber representative, and (E_W)_Y = E_Y from a closure ray.
        let set = &chamber_sets[which];
        let signs: Vec<i8> = set.hyperplanes.iter().map(|h| if dot(h, &x).is_positive() { 1 } else { -1 }).collect();
        let ch = set.chambers.iter().find(|c| c.signs == signs).expect("chamber of a regular point");
        if limit_along(g, &e, &ch.representative) != lim {
            report.failures.push(format!("{tag}: limit differs inside one chamber"));
        }
        let closure = ch.closure(&set.hyperplanes);
        if let Some(w) = closure.rays().first() {
            if limit_along(g, &limit_along(g, &e, w), &x) != lim {
                report.failures.push(format!("{tag}: (E_W)_Y ≠ E_Y"));
            }
        }
        match float_flow_oracle(g, &e, &x, t_max, tol) {
            Ok(f) => {
                report.max_distance = report.max_distance.max(f.distance);
                // NaN distances count as failures.
                if f.distance.is_nan() || f.distance >= tol {
                    report.failures.push(format!("{tag}: float distance {}", f.distance));
                }
            }
            Err(err) => report.failures.push(format!("{tag}: {err}")),
        }
    }
    report
}
