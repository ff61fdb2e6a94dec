use std::collections::BTreeSet;

use littleweyl::cones::{enumerate_chambers, Cone};
use littleweyl::limits::order_regular_hyperplanes;
use littleweyl::linalg::{dot, Vector};
use littleweyl::rational::q;
use littleweyl::LieAlgebra;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

/// Distinct sign vectors met by integer grid points off every hyperplane.
fn grid_chamber_count(dim: usize, hs: &[Vector], radius: i64) -> usize {
    let mut seen = BTreeSet::new();
    let side = (2 * radius + 1) as usize;
    let total = side.pow(dim as u32);
    for idx in 0..total {
        let mut rest = idx;
        let x: Vector = (0..dim)
            .map(|_| {
                let c = (rest % side) as i64 - radius;
                rest /= side;
                q(c)
            })
            .collect();
        let vals: Vec<_> = hs.iter().map(|h| dot(h, &x)).collect();
        if vals.iter().any(Zero::is_zero) {
            continue;
        }
        seen.insert(vals.iter().map(|s| s.is_positive()).collect::<Vec<_>>());
    }
    seen.len()
}

#[test]
fn a2_order_regular_chambers_match_grid_oracle() {
    let g = LieAlgebra::from_type("A2", 0).unwrap();
    let hs = order_regular_hyperplanes(&g);
    let set = enumerate_chambers(2, &hs).unwrap();
    let oracle = grid_chamber_count(2, &set.hyperplanes, 40);
    assert_eq!(set.chambers.len(), oracle);
    // Frozen from the grid oracle: 6 lines through the origin.
    assert_eq!(set.chambers.len(), 12);
    for ch in &set.chambers {
        for (h, &s) in set.hyperplanes.iter().zip(&ch.signs) {
            let val = dot(h, &ch.representative);
            assert!(if s > 0 { val.is_positive() } else { val.is_negative() });
        }
    }
}

#[test]
fn catalog_root_systems_match_grid_oracle() {
    // Center directions lie in every hyperplane, so the grid runs over the semisimple part.
    for (t, radius) in [("A1", 3), ("A1xA1", 10), ("B2", 60), ("G2", 80), ("A3", 12)] {
        let g = LieAlgebra::from_type(t, 0).unwrap();
        let hs = order_regular_hyperplanes(&g);
        let set = enumerate_chambers(g.a_dim(), &hs).unwrap();
        let oracle = grid_chamber_count(g.a_dim(), &set.hyperplanes, radius);
        assert_eq!(set.chambers.len(), oracle, "{t}");
    }
}

#[test]
fn center_adds_lineality_only() {
    let g = LieAlgebra::from_type("A1", 1).unwrap();
    let set = enumerate_chambers(2, &order_regular_hyperplanes(&g)).unwrap();
    assert_eq!(set.chambers.len(), 2);
}

#[test]
fn walls_lie_in_one_facet_hyperplane() {
    let c = Cone::from_inequalities(3, &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 1]), v(&[2, 2, 2])]);
    let facets = c.facets();
    for w in c.walls() {
        let hits = facets.iter().filter(|f| w.rays().iter().all(|r| dot(f, r).is_zero())).count();
        assert_eq!(hits, 1);
    }
    for f in c.faces() {
        assert!(f.lineality().contains(&c.edge()));
    }
}

fn small_vec(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(-3i64..4, dim).prop_map(|xs| v(&xs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_dual_is_identity(gs in proptest::collection::vec(small_vec(3), 0..6)) {
        let c = Cone::from_inequalities(3, &gs);
        prop_assert_eq!(c.dual().dual(), c.clone());
        prop_assert_eq!(c.lineality().clone(), c.edge());
    }

    #[test]
    fn rays_and_inequalities_describe_the_same_set(gs in proptest::collection::vec(small_vec(3), 0..6), x in small_vec(3)) {
        let c = Cone::from_inequalities(3, &gs);
        for r in c.rays() {
            prop_assert!(c.contains(r));
        }
        for l in c.lineality().basis() {
            prop_assert!(c.contains(&l));
        }
        // x ∈ C iff every generator of C^∨ is nonnegative on x.
        let d = c.dual();
        let via_dual = d.rays().iter().all(|r| !dot(r, &x).is_negative())
            && d.lineality().basis().iter().all(|l| dot(l, &x).is_zero());
        prop_assert_eq!(c.contains(&x), via_dual);
    }

    #[test]
    fn edge_is_in_every_maximal_face(gs in proptest::collection::vec(small_vec(2), 0..5)) {
        let c = Cone::from_inequalities(2, &gs);
        let top = c.dimension();
        for f in c.faces().iter().filter(|f| f.dimension() == top) {
            prop_assert!(f.span().contains(&c.edge()));
        }
        for w in c.walls() {
            prop_assert_eq!(w.dimension() + 1, 2);
        }
    }
}
