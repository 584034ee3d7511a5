use proptest::prelude::*;

use projrep::char_identity::{
    adjoint_matrices, check_characteristic_identity, diagonal_tensor_action,
    predicted_adjoint_roots, predicted_dual_adjoint_roots, predicted_sigma2_multiplicities,
    predicted_sigma2_roots, sigma2_tilde, tensor_projector,
};
use projrep::gl_modules::{build_irreducible, DominantLabels, GlModule, Representation};
use projrep::linalg::{int, rat, rational_spectrum, Matrix, Rational};

fn build(a: &[u32], b: Rational) -> GlModule {
    build_irreducible(&DominantLabels::new(a.to_vec(), b)).unwrap()
}

#[test]
fn projectors_commute_with_the_diagonal_action() {
    for (a, b) in [(vec![1], int(1)), (vec![1, 1], rat(1, 2)), (vec![0, 2], int(-2))] {
        let v = build(&a, b);
        for dual in [false, true] {
            let action = diagonal_tensor_action(&v, dual);
            for r in 1..=v.n() {
                let p = tensor_projector(&v, r, dual).unwrap();
                for row in &action {
                    for e in row {
                        assert_eq!(p.mul(e), e.mul(&p), "r={r} dual={dual}");
                    }
                }
            }
        }
    }
}

#[test]
fn spectrum_oracle_agrees_with_realized_multiplicities() {
    for (a, b) in [
        (vec![0], int(0)),
        (vec![1], int(1)),
        (vec![2], rat(1, 2)),
        (vec![1, 0], int(-1)),
        (vec![0, 1], rat(-3, 2)),
    ] {
        let v = build(&a, b);
        let s = sigma2_tilde(&v);
        let roots = predicted_sigma2_roots(v.highest_weight());
        let report = check_characteristic_identity(&s, &roots).unwrap();
        let spectrum = rational_spectrum(&s.flattened).unwrap();
        assert_eq!(spectrum.unresolved_degree, 0);
        for (root, m) in roots.iter().zip(&report.multiplicities) {
            assert_eq!(spectrum.multiplicity(root), *m, "root {root} of {a:?}");
        }
    }
}

#[test]
fn trivial_module_of_gl3() {
    let v = build(&[0, 0], int(0));
    let s = sigma2_tilde(&v);
    assert!(s.flattened.is_zero());
    let report = check_characteristic_identity(&s, &predicted_sigma2_roots(v.highest_weight())).unwrap();
    assert_eq!(report.multiplicities, vec![3, 0, 0]);
    let v = build(&[0, 0], int(4));
    let s = sigma2_tilde(&v);
    assert_eq!(s.flattened, Matrix::scalar(3, &rat(16, 3)));
}

fn labels() -> impl Strategy<Value = (Vec<u32>, Rational)> {
    (2usize..=3)
        .prop_flat_map(|n| (prop::collection::vec(0u32..=2, n - 1), -6i64..=6, 1i64..=4))
        .prop_map(|(a, p, q)| (a, rat(p, q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn identities_hold((a, b) in labels()) {
        let v = build(&a, b);
        let mu = v.highest_weight();
        let report = check_characteristic_identity(&sigma2_tilde(&v), &predicted_sigma2_roots(mu)).unwrap();
        prop_assert!(report.residual_zero);
        prop_assert_eq!(report.total_multiplicity(), v.n() * v.dim());
        prop_assert_eq!(&report.multiplicities, &predicted_sigma2_multiplicities(mu).unwrap());
        let (m, m_tilde) = adjoint_matrices(&v);
        prop_assert!(check_characteristic_identity(&m, &predicted_adjoint_roots(mu)).unwrap().residual_zero);
        prop_assert!(check_characteristic_identity(&m_tilde, &predicted_dual_adjoint_roots(mu)).unwrap().residual_zero);
    }

    #[test]
    fn projectors_resolve_the_identity((a, b) in labels()) {
        let v = build(&a, b);
        let size = v.n() * v.dim();
        for dual in [false, true] {
            let mut sum = Matrix::zeros(size, size);
            for r in 1..=v.n() {
                let p = tensor_projector(&v, r, dual).unwrap();
                prop_assert_eq!(p.mul(&p), p.clone());
                sum = sum.add(&p);
            }
            prop_assert_eq!(sum, Matrix::identity(size));
        }
    }
}
