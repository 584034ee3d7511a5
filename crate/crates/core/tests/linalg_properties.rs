use proptest::prelude::*;

use projrep::linalg::{
    eval_operator_polynomial, idempotent_from_spectrum, int, kernel_basis, rank, rat, Matrix,
    Rational,
};

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |vals| {
            let dense: Vec<Vec<Rational>> = vals
                .chunks(c)
                .map(|row| {
                    row.iter()
                        .map(|&(n, d)| if n.abs() == 3 { int(0) } else { rat(n, d) })
                        .collect()
                })
                .collect();
            Matrix::from_dense(&dense)
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Diagonalizable operator `S·diag(values)·S⁻¹` with a unipotent triangular `S`.
fn conjugated_diagonal(values: &[i64], mix: &[i64]) -> Matrix {
    let n = values.len();
    let mut s = Matrix::identity(n);
    let mut s_inv = Matrix::identity(n);
    for (k, &m) in mix.iter().enumerate() {
        let (i, j) = (k % n, (k + 1) % n);
        if i >= j || m == 0 {
            continue;
        }
        let step = Matrix::identity(n).add(&Matrix::from_triplets(n, n, [(i, j, int(m))]));
        let step_inv = Matrix::identity(n).add(&Matrix::from_triplets(n, n, [(i, j, int(-m))]));
        s = s.mul(&step);
        s_inv = step_inv.mul(&s_inv);
    }
    let d = Matrix::diagonal(&values.iter().map(|&v| int(v)).collect::<Vec<_>>());
    s.mul(&d).mul(&s_inv)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_column_count(m in small_matrix(6, 6)) {
        let kernel = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == int(0)));
            let lead = v.iter().find(|x| **x != int(0)).unwrap();
            prop_assert_eq!(lead, &int(1));
        }
    }

    #[test]
    fn rank_is_permutation_invariant(
        (m, rp, cp) in small_matrix(6, 6).prop_flat_map(|m| {
            let (r, c) = (m.rows(), m.cols());
            (Just(m), permutation(r), permutation(c))
        })
    ) {
        let permuted = m.submatrix(&rp, &cp);
        prop_assert_eq!(rank(&permuted), rank(&m));
        prop_assert_eq!(rank(&m.transpose()), rank(&m));
    }

    #[test]
    fn spectral_projectors_resolve_identity(
        values in proptest::collection::vec(-4i64..=4, 2..6),
        mix in proptest::collection::vec(-2i64..=2, 8),
    ) {
        let op = conjugated_diagonal(&values, &mix);
        let mut spectrum: Vec<Rational> = values.iter().map(|&v| int(v)).collect();
        spectrum.sort();
        spectrum.dedup();
        prop_assert!(eval_operator_polynomial(&op, &spectrum).unwrap().is_zero());

        let n = values.len();
        let mut total = Matrix::zeros(n, n);
        let projectors: Vec<Matrix> = spectrum
            .iter()
            .map(|t| {
                let others: Vec<Rational> = spectrum.iter().filter(|l| *l != t).cloned().collect();
                idempotent_from_spectrum(&op, t, &others).unwrap()
            })
            .collect();
        for (a, p) in projectors.iter().enumerate() {
            prop_assert_eq!(&p.mul(p), p);
            for (b, q) in projectors.iter().enumerate() {
                if a != b {
                    prop_assert!(p.mul(q).is_zero());
                }
            }
            total = total.add(p);
        }
        prop_assert_eq!(total, Matrix::identity(n));
    }
}
