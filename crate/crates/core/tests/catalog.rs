//! Catalog expectations against an oracle that never touches S_z, cones or wall reflections:
//! float-flow limits on an integer grid, grouped into classes under sign characters.

use std::collections::BTreeSet;

use littleweyl::catalog::{self, CatalogEntry, Expected};
use littleweyl::limits::{float_flow_oracle, is_order_regular};
use littleweyl::linalg::{dot, Vector};
use littleweyl::rational::q;
use littleweyl::report::analyze;
use littleweyl::spherical::{find_admissible, is_adapted, translate, RootTerm, WordEntry};
use littleweyl::{LieAlgebra, Options, Space, Subspace};
use nalgebra::DMatrix;
use num_traits::{Signed, ToPrimitive, Zero};

const T: f64 = 40.0;
const TOL: f64 = 1e-6;

fn frame(g: &LieAlgebra, e: &Subspace, x: &[littleweyl::Q]) -> DMatrix<f64> {
    let rep = float_flow_oracle(g, e, x, T, TOL).expect("gap ≥ 1 on integer order-regular points");
    let k = rep.frame.len();
    DMatrix::from_fn(k, g.dim(), |r, c| rep.frame[r][c])
}

/// Sine of the largest principal angle between two orthonormal row frames.
fn distance(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    if a.nrows() != b.nrows() {
        return 1.0;
    }
    if a.nrows() == 0 {
        return 0.0;
    }
    let residual = a - (a * b.transpose()) * b;
    residual.svd(false, false).singular_values.max()
}

/// All `(−1)^{β(t)}` sign patterns for `t` in the coroot lattice mod 2, as diagonal matrices on `g`.
fn sign_characters(g: &LieAlgebra) -> Vec<DMatrix<f64>> {
    let r = g.rank();
    let mut out: Vec<DMatrix<f64>> = Vec::new();
    for mask in 0u32..(1 << r) {
        let mut t: Vector = (0..r).map(|i| q(((mask >> i) & 1) as i64)).collect();
        t.extend((0..g.center_dim()).map(|_| q(0)));
        let mut d = DMatrix::identity(g.dim(), g.dim());
        for root in g.all_roots() {
            let v = dot(&g.root_functional(root), &t).to_integer();
            if v.to_i64().unwrap().rem_euclid(2) == 1 {
                let k = g.root_vector(root);
                d[(k, k)] = -1.0;
            }
        }
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

fn grid(g: &LieAlgebra, radius: i64) -> Vec<Vector> {
    let r = g.rank();
    let side = (2 * radius + 1) as usize;
    let mut out = Vec::new();
    for idx in 0..side.pow(r as u32) {
        let mut rest = idx;
        let mut x: Vector = (0..r)
            .map(|_| {
                let c = (rest % side) as i64 - radius;
                rest /= side;
                q(c)
            })
            .collect();
        x.extend((0..g.center_dim()).map(|_| q(0)));
        if is_order_regular(g, &x) {
            out.push(x);
        }
    }
    out
}

/// Grid points grouped by the sign-character class of their flowed limit.
struct LimitClasses {
    points: Vec<Vector>,
    class_of: Vec<usize>,
    count: usize,
    /// `dim(L ∩ a)` per point.
    a_dims: Vec<usize>,
}

fn limit_classes(g: &LieAlgebra, h: &Subspace, radius: i64) -> LimitClasses {
    let chars = sign_characters(g);
    let a_idx = g.a_indices();
    let points = grid(g, radius);
    let mut reps: Vec<DMatrix<f64>> = Vec::new();
    let mut class_of = Vec::new();
    let mut a_dims = Vec::new();
    for x in &points {
        let f = frame(g, h, x);
        let class = reps.iter().position(|r| chars.iter().any(|chi| distance(&(&f * chi), r) < TOL));
        class_of.push(class.unwrap_or_else(|| {
            reps.push(f.clone());
            reps.len() - 1
        }));
        let mut off_a = f.clone();
        for &k in &a_idx {
            off_a.column_mut(k).fill(0.0);
        }
        let rank = off_a.svd(false, false).singular_values.iter().filter(|s| **s > 1e-8).count();
        a_dims.push(f.nrows() - rank);
    }
    LimitClasses { points, class_of, count: reps.len(), a_dims }
}

fn functional(g: &LieAlgebra, coords: &[i64]) -> Vector {
    g.functional(coords)
}

/// Reflection closure of `±facets` under the form on root coordinates.
fn root_closure(g: &LieAlgebra, simple: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let inner = |a: &[i64], b: &[i64]| g.cartan().inner(a, b);
    let mut set: BTreeSet<Vec<i64>> = simple.iter().flat_map(|s| [s.clone(), s.iter().map(|c| -c).collect()]).collect();
    loop {
        let mut next = set.clone();
        for s in simple {
            for l in &set {
                let c = inner(l, s) * q(2) / inner(s, s);
                assert!(c.is_integer(), "non-crystallographic pairing");
                let c = c.to_integer().to_i64().unwrap();
                next.insert(l.iter().zip(s).map(|(a, b)| a - c * b).collect());
            }
        }
        if next == set {
            return set;
        }
        set = next;
    }
}

fn normalizer_dim(g: &LieAlgebra, h: &Subspace) -> usize {
    // X = Σ x_i H_i normalizes h iff every ann(h)·[H_i-combination, b] vanishes.
    let ann = h.annihilator();
    let a_idx = g.a_indices();
    let mut constraints = Vec::new();
    for b in h.basis() {
        let images: Vec<Vector> = a_idx.iter().map(|&i| g.bracket(&g.basis_vector(i), &b)).collect();
        for f in &ann {
            constraints.push(images.iter().map(|img| dot(f, img)).collect::<Vector>());
        }
    }
    Subspace::solutions(a_idx.len(), &constraints).dim()
}

fn check_entry(entry: &CatalogEntry, radius: i64) {
    let space = Space::from_catalog(entry).unwrap();
    let g = &space.g;
    let h = &space.point.h_z;
    let exp: &Expected = &entry.expected;
    assert_eq!(is_adapted(g, h), exp.adapted, "{}", entry.name);
    assert_eq!(h.intersect(&g.a()).dim(), exp.a_h_dim, "{}", entry.name);
    assert_eq!(normalizer_dim(g, h), exp.a_e_dim, "{}", entry.name);

    // Admissibility at the base point: every limit meets a in dimension dim a_h.
    let base = limit_classes(g, h, radius);
    let base_ok = base.a_dims.iter().all(|&d| d == exp.a_h_dim);
    assert_eq!(base_ok, exp.admissible, "{}: admissible flag", entry.name);

    // The compression cone is the class containing the antidominant direction.
    let facets: Vec<Vector> = exp.cone_facets.iter().map(|f| functional(g, f)).collect();
    let s_z: Vec<Vector> = exp.s_z.iter().map(|f| functional(g, f)).collect();
    let simple: Vec<Vector> = (0..g.rank()).map(|i| g.root_functional(g.simple_root(i))).collect();
    let anti = base
        .points
        .iter()
        .position(|x| simple.iter().all(|a| dot(a, x).is_negative()))
        .unwrap_or_else(|| panic!("{}: grid misses the antidominant chamber", entry.name));
    let cone_class = base.class_of[anti];
    for (x, &c) in base.points.iter().zip(&base.class_of) {
        let vals: Vec<_> = facets.iter().map(|f| dot(f, x)).collect();
        if vals.iter().any(Zero::is_zero) {
            continue;
        }
        let inside = vals.iter().all(Signed::is_negative);
        assert_eq!(inside, c == cone_class, "{}: cone membership of {x:?}", entry.name);
        if inside {
            assert!(s_z.iter().all(|s| dot(s, x).is_negative()), "{}: S_z not negative at {x:?}", entry.name);
        }
    }

    // At an admissible point the limit classes are the cosets of W.
    let search = find_admissible(g, &space.point, 0, 10).unwrap();
    let adm = limit_classes(g, &search.point.h_z, radius);
    assert!(adm.a_dims.iter().all(|&d| d == exp.a_h_dim), "{}: found point not admissible", entry.name);
    assert_eq!(adm.count, exp.w_order, "{}: W order", entry.name);

    // Σ_Z is generated by the facet normals, which are primitive in Λ; W(Σ_Z) has the same order.
    let closure = root_closure(g, &exp.cone_facets);
    let expected_roots: BTreeSet<Vec<i64>> = exp.sigma_z.iter().cloned().collect();
    assert_eq!(closure, expected_roots, "{}: Σ_Z", entry.name);
    let group = reflection_group_order(g, &exp.cone_facets);
    assert_eq!(group, exp.w_order, "{}: |W(Σ_Z)|", entry.name);
}

/// Order of the group generated by the reflections in `simple`, acting on root coordinates.
fn reflection_group_order(g: &LieAlgebra, simple: &[Vec<i64>]) -> usize {
    let r = g.rank();
    let reflect = |s: &[i64], l: &[i64]| -> Vec<i64> {
        let c = (g.cartan().inner(l, s) * q(2) / g.cartan().inner(s, s)).to_integer().to_i64().unwrap();
        l.iter().zip(s).map(|(a, b)| a - c * b).collect()
    };
    // Track the images of the simple roots of Σ, which determine the linear map.
    let start: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut frontier = vec![start];
    while let Some(m) = frontier.pop() {
        for s in simple {
            let next: Vec<Vec<i64>> = m.iter().map(|v| reflect(s, v)).collect();
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen.len()
}

#[test]
fn rank_one_entries_match_the_flow_oracle() {
    for name in ["A1_nbar", "A1_so2", "A1_so11", "A1T1_torus_twist"] {
        check_entry(&catalog::entry(name).unwrap(), 4);
    }
}

#[test]
fn rank_two_entries_match_the_flow_oracle() {
    for (name, radius) in [("A2_nbar", 4), ("A1xA1_diag_w0", 4), ("A2_so3", 4), ("A2_levi_horo", 4), ("B2_k", 5), ("G2_k", 7)] {
        check_entry(&catalog::entry(name).unwrap(), radius);
    }
}

#[test]
fn pipeline_reproduces_every_expected_record() {
    for entry in catalog::list_entries() {
        let space = Space::from_catalog(&entry).unwrap();
        let report = analyze(&space, &Options::default()).unwrap();
        assert_eq!(report.summary(), entry.expected, "{}", entry.name);
    }
}

#[test]
fn listing() {
    let names = catalog::names();
    assert!(names.len() >= 6);
    for n in ["A1_nbar", "A1_so2", "A1_so11", "A1xA1_diag_w0", "A2_so3", "A2_nbar"] {
        assert!(names.contains(&n), "{n}");
    }
    assert!(catalog::expected_results("nope").is_err());
    let nbar = catalog::expected_results("A1_nbar").unwrap();
    assert!(nbar.cone_facets.is_empty());
    assert_eq!(nbar.w_order, 1);
    assert!(nbar.sigma_z.is_empty());
    let so2 = catalog::expected_results("A1_so2").unwrap();
    assert_eq!((so2.w_order, so2.sigma_z.clone()), (2, vec![vec![-1], vec![1]]));
    let diag = catalog::expected_results("A1xA1_diag_w0").unwrap();
    assert_eq!((diag.a_h_dim, diag.w_order), (1, 2));
    assert_eq!(diag.sigma_z, vec![vec![-1, -1], vec![1, 1]]);
}

#[test]
fn translate_of_the_horospherical_point_is_not_adapted() {
    let entry = catalog::entry("A1_nbar").unwrap();
    let g = entry.lie_algebra();
    let space = Space::from_catalog(&entry).unwrap();
    let moved = space
        .point
        .act(&g, WordEntry::Nilpotent(vec![RootTerm { root: vec![1], coeff: q(1).into() }]))
        .unwrap();
    assert!(!is_adapted(&g, &moved.h_z));
    // Flow oracle: only α < 0 recovers span(f) up to sign.
    let nbar = space.point.h_z.clone();
    let chars = sign_characters(&g);
    let target = frame(&g, &nbar, &[q(-1)]);
    let hits: Vec<bool> = [q(-1), q(1)]
        .iter()
        .map(|x| {
            let f = frame(&g, &moved.h_z, std::slice::from_ref(x));
            chars.iter().any(|chi| distance(&(&f * chi), &target) < TOL)
        })
        .collect();
    assert_eq!(hits, vec![true, false]);
    let via_translate = translate(&g, &nbar, &[WordEntry::Nilpotent(vec![RootTerm { root: vec![1], coeff: q(1).into() }])]).unwrap();
    assert_eq!(via_translate.h_z, moved.h_z);
}

#[test]
fn catalog_entries_export_and_reload() {
    for entry in catalog::list_entries() {
        let file = littleweyl::schema::export_entry(&entry);
        let text = serde_json::to_string_pretty(&file).unwrap();
        let space = Space::from_file_contents(&text, None).unwrap();
        let direct = Space::from_catalog(&entry).unwrap();
        assert_eq!(space.point.h_z, direct.point.h_z, "{}", entry.name);
        assert_eq!(space.claims.as_ref(), Some(&entry.expected));
    }
}
