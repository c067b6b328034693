//! Property tests for the exact elimination kernels. The rational path runs
//! through fraction-free Bareiss elimination; the classic field
//! Gauss-Jordan routine is the independent second route it is checked
//! against.

use cb_core::field::{gauss_jordan_rows, Fp, PrimeField, RationalField, Scalar};
use cb_core::linalg::Matrix;
use cb_core::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

fn q_matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(
        proptest::collection::vec((-9i64..=9, 1i64..=4), cols),
        rows,
    )
    .prop_map(move |rws| {
        let rws: Vec<Vec<Rational>> = rws
            .into_iter()
            .map(|r| r.into_iter().map(|(n, d)| rational(n, d)).collect())
            .collect();
        Matrix::from_rows(RationalField, rws).unwrap()
    })
}

fn fp_matrix_strategy(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Fp>> {
    let field = PrimeField::new(p).unwrap();
    proptest::collection::vec(proptest::collection::vec(0..p, cols), rows).prop_map(move |rws| {
        let rws: Vec<Vec<Fp>> = rws
            .into_iter()
            .map(|r| r.into_iter().map(|v| field.element(v as i64)).collect())
            .collect();
        Matrix::from_rows(field, rws).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity_is_cols_q(m in q_matrix_strategy(4, 6)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn rank_plus_nullity_is_cols_fp(m in fp_matrix_strategy(11, 4, 6)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
    }

    #[test]
    fn kernel_vectors_annihilate(m in fp_matrix_strategy(11, 4, 6)) {
        for v in m.kernel_basis() {
            let image = m.mul_vec(&v).unwrap();
            prop_assert!(image.iter().all(Fp::is_zero));
        }
        prop_assert_eq!(m.kernel_basis().len(), m.cols() - m.rank());
    }

    #[test]
    fn rref_is_idempotent(m in q_matrix_strategy(4, 5)) {
        let once = m.rref().matrix;
        let twice = once.rref().matrix;
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn bareiss_agrees_with_classic_gauss(m in q_matrix_strategy(4, 6)) {
        // Route 1: the production path (fraction-free).
        let rref = m.rref();
        // Route 2: plain rational Gauss-Jordan, independent code path.
        let mut rows = m.row_vecs();
        let pivots = gauss_jordan_rows(&mut rows);
        let reference = Matrix::from_rows(RationalField, rows).unwrap();
        prop_assert_eq!(rref.matrix, reference);
        prop_assert_eq!(rref.pivots, pivots);
    }

    #[test]
    fn rank_invariant_under_row_permutation(m in fp_matrix_strategy(11, 4, 5), swap in (0usize..4, 0usize..4)) {
        let mut rows = m.row_vecs();
        rows.swap(swap.0, swap.1);
        let permuted = Matrix::from_rows(*m.field(), rows).unwrap();
        prop_assert_eq!(m.rank(), permuted.rank());
    }

    #[test]
    fn rank_invariant_under_invertible_multiplication(
        m in fp_matrix_strategy(11, 4, 5),
        factor in fp_matrix_strategy(11, 4, 4),
    ) {
        prop_assume!(factor.is_invertible());
        let product = factor.mul(&m).unwrap();
        prop_assert_eq!(product.rank(), m.rank());
    }

    #[test]
    fn solve_satisfies_system(m in fp_matrix_strategy(7, 4, 4), xs in proptest::collection::vec(0i64..7, 4)) {
        // Build a consistent right-hand side from a known solution.
        let field = PrimeField::new(7).unwrap();
        let x: Vec<Fp> = xs.into_iter().map(|v| field.element(v)).collect();
        let b = m.mul_vec(&x).unwrap();
        let solved = m.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&solved).unwrap(), b);
    }

    #[test]
    fn rational_addition_two_routes(an in -20i64..20, ad in 1i64..9, cn in -20i64..20, cd in 1i64..9) {
        let direct = rational(an, ad) + rational(cn, cd);
        let common = rational(an * cd + cn * ad, ad * cd);
        prop_assert_eq!(direct, common);
    }
}

#[test]
fn random_kernel_count_over_f11() {
    // A fixed pseudo-random 4x6 matrix over F_11: every kernel vector
    // multiplies to zero and the count matches 6 - rank.
    let field = PrimeField::new(11).unwrap();
    let entries: Vec<i64> = vec![3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3, 2, 3, 8, 4, 6, 2, 6, 4];
    let rows: Vec<Vec<Fp>> = entries
        .chunks(6)
        .map(|r| r.iter().map(|&v| field.element(v)).collect())
        .collect();
    let m = Matrix::from_rows(field, rows).unwrap();
    let kernel = m.kernel_basis();
    assert_eq!(kernel.len(), 6 - m.rank());
    for v in &kernel {
        assert!(m.mul_vec(v).unwrap().iter().all(Fp::is_zero));
    }
}
