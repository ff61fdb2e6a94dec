use littleweyl::lie::{weyl_lift, LieAlgebra, MLattice, SignCharacterGroup, WeylGroup};
use littleweyl::linalg::is_zero_vec;
use littleweyl::rational::q;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const TYPES: &[(&str, usize)] = &[("A1", 0), ("A1", 1), ("A2", 0), ("B2", 0), ("G2", 0), ("A1xA1", 0), ("A3", 0), ("B3", 0), ("C3", 0)];

fn jacobi_and_invariance(g: &LieAlgebra) {
    let n = g.dim();
    let b: Vec<_> = (0..n).map(|i| g.basis_vector(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let bij = g.bracket(&b[i], &b[j]);
            let bji = g.bracket(&b[j], &b[i]);
            assert!(is_zero_vec(&littleweyl::linalg::add_vec(&bij, &bji)), "antisymmetry");
            for k in 0..n {
                let t1 = g.bracket(&b[i], &g.bracket(&b[j], &b[k]));
                let t2 = g.bracket(&b[j], &g.bracket(&b[k], &b[i]));
                let t3 = g.bracket(&b[k], &bij);
                let s = littleweyl::linalg::add_vec(&littleweyl::linalg::add_vec(&t1, &t2), &t3);
                assert!(is_zero_vec(&s), "Jacobi fails on ({i},{j},{k})");
                assert_eq!(g.form(&bij, &b[k]), g.form(&b[i], &g.bracket(&b[j], &b[k])), "invariance");
            }
        }
    }
}

#[test]
fn jacobi_and_invariance_all_types() {
    for &(t, c) in TYPES {
        jacobi_and_invariance(&LieAlgebra::from_type(t, c).unwrap());
    }
}

#[test]
fn structure_constants_are_integers() {
    for &(t, c) in TYPES {
        let g = LieAlgebra::from_type(t, c).unwrap();
        for row in g.structure_constants() {
            for entry in row {
                for (_, v) in entry {
                    assert!(v.is_integer(), "{t}");
                }
            }
        }
    }
}

#[test]
fn theta_is_an_involutive_automorphism() {
    for &(t, c) in TYPES {
        let g = LieAlgebra::from_type(t, c).unwrap();
        let th = g.theta_matrix();
        assert!(th.mul(th).is_identity());
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (g.basis_vector(i), g.basis_vector(j));
                assert_eq!(th.apply(&g.bracket(&x, &y)), g.bracket(&th.apply(&x), &th.apply(&y)));
            }
            // −B(x, θx) > 0 on the semisimple part.
            let x = g.basis_vector(i);
            let v = -g.form(&x, &th.apply(&x));
            assert!(v.is_positive(), "{t}: basis {i}");
        }
        for r in g.all_roots() {
            let k = g.root_vector(r);
            let image = th.apply(&g.basis_vector(k));
            assert_eq!(image, littleweyl::linalg::scale_vec(&q(-1), &g.basis_vector(g.root_vector(g.negate(r)))));
        }
    }
}

#[test]
fn root_spaces_are_joint_eigenspaces() {
    for &(t, c) in TYPES {
        let g = LieAlgebra::from_type(t, c).unwrap();
        for r in g.all_roots() {
            let v = g.basis_vector(g.root_vector(r));
            let f = g.root_functional(r);
            for (k, &idx) in g.a_indices().iter().enumerate() {
                let hv = g.bracket(&g.basis_vector(idx), &v);
                assert_eq!(hv, littleweyl::linalg::scale_vec(&f[k], &v));
            }
        }
    }
}

#[test]
fn orthocomplement_is_an_involution() {
    let g = LieAlgebra::from_type("A2", 1).unwrap();
    for e in [g.n(), g.a(), g.p(), g.nbar().sum(&g.a())] {
        let perp = g.orthocomplement(&e);
        assert_eq!(perp.dim() + e.dim(), g.dim());
        assert_eq!(g.orthocomplement(&perp), e);
    }
}

#[test]
fn weyl_lifts_preserve_form_and_permute_root_spaces() {
    for &(t, c) in TYPES {
        let g = LieAlgebra::from_type(t, c).unwrap();
        let w = WeylGroup::new(&g);
        for el in &w.elements {
            let lift = weyl_lift(&g, &el.word);
            assert_eq!(lift.action_on_a, el.matrix);
            let ad = &lift.adjoint_lift;
            let bm = g.form_matrix();
            assert_eq!(&ad.transpose().mul(bm).mul(ad), bm, "{t}: Ad(n_w) preserves B");
            let a_idx = g.a_indices();
            assert_eq!(ad.submatrix(&a_idx, &a_idx), el.matrix);
            for r in g.all_roots() {
                let img = ad.apply(&g.basis_vector(g.root_vector(r)));
                assert!(g.root_space(el.perm[r]).contains_vector(&img));
                assert!(!is_zero_vec(&img));
            }
        }
    }
}

#[test]
fn sign_characters_are_multiplicative() {
    for &(t, c) in TYPES {
        let g = LieAlgebra::from_type(t, c).unwrap();
        for lat in [MLattice::Coroot, MLattice::Coweight] {
            let grp = SignCharacterGroup::new(&g, lat);
            assert!(grp.order().is_power_of_two());
            for chi in &grp.elements {
                let m = SignCharacterGroup::matrix(&g, chi);
                for i in 0..g.dim() {
                    for j in 0..g.dim() {
                        let (x, y) = (g.basis_vector(i), g.basis_vector(j));
                        assert_eq!(m.apply(&g.bracket(&x, &y)), g.bracket(&m.apply(&x), &m.apply(&y)));
                    }
                }
            }
        }
    }
}

#[test]
fn rejects_non_finite_type() {
    assert!(LieAlgebra::from_cartan(vec![vec![2, -2], vec![-2, 2]], 0).is_err());
    assert!(LieAlgebra::from_cartan(vec![vec![2, -3], vec![-2, 2]], 0).is_err());
}

fn any_root_pair() -> impl Strategy<Value = (usize, usize, i64, i64)> {
    (0usize..TYPES.len(), 0usize..64, 1i64..6, 1i64..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    // ad(U)^2 V ≠ 0 for U ∈ g_α, V ∈ g_{−α} nonzero (reduced root systems have no 2α).
    #[test]
    fn sl2_nonvanishing((ti, ri, cu, cv) in any_root_pair()) {
        let (t, c) = TYPES[ti];
        let g = LieAlgebra::from_type(t, c).unwrap();
        let r = ri % g.num_roots();
        let u = littleweyl::linalg::scale_vec(&q(cu), &g.basis_vector(g.root_vector(r)));
        let v = littleweyl::linalg::scale_vec(&q(-cv), &g.basis_vector(g.root_vector(g.negate(r))));
        let w = g.bracket(&u, &g.bracket(&u, &v));
        prop_assert!(!is_zero_vec(&w));
    }

    #[test]
    fn form_is_symmetric_and_theta_positive(ti in 0usize..TYPES.len(), xs in proptest::collection::vec(-3i64..4, 21), ys in proptest::collection::vec(-3i64..4, 21)) {
        let (t, c) = TYPES[ti];
        let g = LieAlgebra::from_type(t, c).unwrap();
        let n = g.dim();
        let x: Vec<_> = xs.iter().cycle().take(n).map(|&v| q(v)).collect();
        let y: Vec<_> = ys.iter().cycle().take(n).map(|&v| q(v)).collect();
        prop_assert_eq!(g.form(&x, &y), g.form(&y, &x));
        // −B(·, θ·) is positive definite.
        let v = -g.form(&x, &g.theta_matrix().apply(&x));
        prop_assert_eq!(v.is_positive(), !x.iter().all(Zero::is_zero));
    }
}
