use j2coh_core::invariants::{fixed_space, projector_laws_hold};
use j2coh_core::linalg::{kernel_basis, left_kernel, Solver};
use j2coh_core::series::RationalSeriesSpec;
use j2coh_core::{Bidegree, Element, Gca, Matrix, Subspace, F3};
use proptest::prelude::*;

fn matrix_with_cols(max_rows: usize, c: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows).prop_flat_map(move |r| {
        prop::collection::vec(0i64..3, r * c).prop_map(move |e| Matrix::from_i64(r, c, &e))
    })
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_cols).prop_flat_map(move |c| matrix_with_cols(max_rows, c))
}

fn combos(rows: &[Vec<F3>], len: usize) -> Vec<Vec<F3>> {
    let mut out = vec![vec![F3::ZERO; len]];
    for row in rows {
        let mut next = Vec::with_capacity(out.len() * 3);
        for v in &out {
            for c in [F3::ZERO, F3::ONE, F3::TWO] {
                next.push(v.iter().zip(row).map(|(&a, &b)| a + c * b).collect());
            }
        }
        out = next;
    }
    out
}

fn all_vectors(len: usize) -> Vec<Vec<F3>> {
    let unit: Vec<Vec<F3>> = (0..len)
        .map(|i| (0..len).map(|j| if i == j { F3::ONE } else { F3::ZERO }).collect())
        .collect();
    combos(&unit, len)
}

/// Signed permutation whose cycles have length 1, 2 or 4, so `A^8 = 1`.
fn order_eight() -> impl Strategy<Value = Matrix> {
    prop::collection::vec((prop::sample::select(vec![1usize, 2, 4]), any::<bool>()), 1..4).prop_map(|cycles| {
        let n: usize = cycles.iter().map(|c| c.0).sum();
        let mut a = Matrix::zeros(n, n);
        let mut start = 0;
        for (len, flip) in cycles {
            for i in 0..len {
                let s = if flip && i == 0 { F3::TWO } else { F3::ONE };
                a.set(start + i, start + (i + 1) % len, s);
            }
            start += len;
        }
        a
    })
}

fn homogeneous(gca: &'static Gca) -> impl Strategy<Value = (Bidegree, Element)> {
    (0i32..5, 0i32..5).prop_flat_map(move |(n, m)| {
        let b = Bidegree::new(n, m);
        let basis = gca.monomial_basis(b);
        prop::collection::vec(0i64..3, basis.len())
            .prop_map(move |c| (b, basis.element(&c.iter().map(|&x| F3::new(x)).collect::<Vec<_>>())))
    })
}

fn e2() -> &'static Gca {
    static E2: std::sync::OnceLock<Gca> = std::sync::OnceLock::new();
    E2.get_or_init(Gca::e2)
}

#[test]
fn rank_nullity_for_every_2x2_matrix() {
    for code in 0..81i64 {
        let e: Vec<i64> = (0..4).map(|i| code / 3i64.pow(i) % 3).collect();
        let m = Matrix::from_i64(2, 2, &e);
        let nullity = all_vectors(2).into_iter().filter(|v| m.mul_vec(v).iter().all(|x| x.is_zero())).count();
        assert_eq!(3usize.pow(2 - m.rank() as u32), nullity, "{e:?}");
        assert_eq!(m.rank() + kernel_basis(&m).dim(), 2);
        assert_eq!(m.inverse().is_some(), m.rank() == 2);
    }
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix(6, 6)) {
        prop_assert_eq!(m.rank() + kernel_basis(&m).dim(), m.cols());
        prop_assert_eq!(m.rank() + left_kernel(&m).dim(), m.rows());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in kernel_basis(&m).rows() {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn subspace_membership_matches_enumeration(m in matrix(3, 4)) {
        let rows = m.to_rows();
        let space = Subspace::span(m.cols(), &rows);
        let members = combos(&rows, m.cols());
        for v in all_vectors(m.cols()) {
            prop_assert_eq!(space.contains(&v).unwrap(), members.contains(&v));
        }
        prop_assert_eq!(3usize.pow(space.dim() as u32), {
            let mut d = members.clone();
            d.sort_by_key(|v| v.iter().map(|x| x.value()).collect::<Vec<_>>());
            d.dedup();
            d.len()
        });
    }

    #[test]
    fn lattice_dimensions((a, b) in (1usize..=5).prop_flat_map(|c| (matrix_with_cols(4, c), matrix_with_cols(4, c)))) {
        let (x, y) = (Subspace::from_matrix(&a), Subspace::from_matrix(&b));
        let sum = x.sum(&y).unwrap();
        let meet = x.intersection(&y).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), x.dim() + y.dim());
        prop_assert!(meet.is_subspace_of(&x).unwrap() && x.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn solver_recovers_combinations(m in matrix(5, 6), c in prop::collection::vec(0i64..3, 5)) {
        let coeffs: Vec<F3> = c[..m.rows()].iter().map(|&x| F3::new(x)).collect();
        let v = m.vec_mul(&coeffs);
        let found = Solver::new(&m).solve(&v).expect("v is in the row space");
        prop_assert_eq!(m.vec_mul(&found), v);
    }

    #[test]
    fn averaging_projector_is_idempotent(a in order_eight()) {
        prop_assert!(a.pow(8) == Matrix::identity(a.rows()));
        let f = fixed_space(&a, 8).unwrap();
        prop_assert!(projector_laws_hold(&a, &f.projector));
        prop_assert!(f.methods_agree());
    }

    #[test]
    fn product_is_associative(x in homogeneous(e2()), y in homogeneous(e2()), z in homogeneous(e2())) {
        let g = e2();
        prop_assert_eq!(g.mul(&g.mul(&x.1, &y.1), &z.1), g.mul(&x.1, &g.mul(&y.1, &z.1)));
    }

    #[test]
    fn product_is_graded_commutative(x in homogeneous(e2()), y in homogeneous(e2())) {
        let g = e2();
        let sign = if x.0.total() % 2 == 1 && y.0.total() % 2 == 1 { F3::TWO } else { F3::ONE };
        prop_assert_eq!(g.mul(&x.1, &y.1), g.mul(&y.1, &x.1).scale(sign));
    }

    #[test]
    fn format_then_parse_round_trips(x in homogeneous(e2())) {
        let g = e2();
        prop_assert_eq!(g.parse(&g.format(&x.1)).unwrap(), x.1);
    }

    #[test]
    fn poincare_coefficients_are_nonnegative_and_stable(n in 0usize..300, extra in 0usize..50) {
        let spec = RationalSeriesSpec::poincare();
        let short = spec.expand(n);
        let long = spec.expand(n + extra);
        prop_assert!(long.coeffs().iter().all(|&c| c >= 0));
        prop_assert_eq!(short.coeffs(), &long.coeffs()[..=n]);
    }
}
