use std::sync::Arc;

use lrc_ghw::bounds::{certify_optimal, mu_rho, CertifyOptions};
use lrc_ghw::cli::{parse_code_file, serialize_code};
use lrc_ghw::ghw::{gk_dual, wei_duality};
use lrc_ghw::{
    dual_weight_hierarchy, ghw_oracle, locality, random_code, weight_hierarchy, Elem, Field,
    HierarchyOptions, Limits, LinearCode, Matrix,
};
use proptest::prelude::*;

fn small_code() -> impl Strategy<Value = LinearCode> {
    (
        prop::sample::select(vec![2u32, 3, 4, 5]),
        2usize..=9,
        any::<u64>(),
    )
        .prop_flat_map(|(q, n, seed)| {
            (1..=n).prop_map(move |k| random_code(q, n, k, seed).unwrap())
        })
}

fn oracle_code() -> impl Strategy<Value = LinearCode> {
    (
        prop::sample::select(vec![2u32, 3]),
        1usize..=7,
        any::<u64>(),
    )
        .prop_flat_map(|(q, n, seed)| {
            let max_k = if q == 2 { n } else { n.min(4) };
            (1..=max_k).prop_map(move |k| random_code(q, n, k, seed).unwrap())
        })
}

fn hierarchy(code: &LinearCode) -> Vec<usize> {
    weight_hierarchy(code, &HierarchyOptions::default())
        .unwrap()
        .values
}

/// A random invertible `k × k` matrix from the seeded generator.
fn invertible(field: &Arc<Field>, k: usize, seed: u64) -> Matrix {
    let mut s = seed;
    loop {
        let rows: Vec<Vec<Elem>> = (0..k)
            .map(|_| {
                (0..k)
                    .map(|_| {
                        s = s
                            .wrapping_mul(6364136223846793005)
                            .wrapping_add(1442695040888963407);
                        ((s >> 33) % field.order() as u64) as Elem
                    })
                    .collect()
            })
            .collect();
        let m = Matrix::from_elems(field, &rows, k).unwrap();
        if m.rank() == k {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hierarchy_is_strictly_increasing_and_ends_at_n(code in small_code()) {
        let h = hierarchy(&code);
        prop_assert_eq!(h.len(), code.k());
        prop_assert!(h.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(*h.last().unwrap(), code.n());
        // generalized Singleton bound
        for (i, &d) in h.iter().enumerate() {
            prop_assert!(d <= code.n() - code.k() + i + 1);
        }
    }

    #[test]
    fn invariant_under_row_operations(code in small_code(), seed in any::<u64>()) {
        let a = invertible(code.field(), code.k(), seed);
        let g = a.mul(code.generator()).unwrap();
        let other = LinearCode::from_generator(code.field(), &g).unwrap();
        prop_assert!(other.same_code(&code));
        prop_assert_eq!(hierarchy(&other), hierarchy(&code));
    }

    #[test]
    fn invariant_under_coordinate_permutation(code in small_code(), shift in 0usize..9) {
        let n = code.n();
        let perm: Vec<usize> = (0..n).map(|c| (c * 5 + shift) % n).collect();
        let mut order = perm.clone();
        order.sort_unstable();
        order.dedup();
        prop_assume!(order.len() == n);
        let g = code.generator().select_columns(&perm).unwrap();
        let other = LinearCode::from_generator(code.field(), &g).unwrap();
        prop_assert_eq!(hierarchy(&other), hierarchy(&code));
        let opts = HierarchyOptions::default();
        prop_assert_eq!(
            dual_weight_hierarchy(&other, &opts).unwrap().values,
            dual_weight_hierarchy(&code, &opts).unwrap().values
        );
        match (locality(&code, &Limits::default()), locality(&other, &Limits::default())) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.r, b.r),
            (Err(a), Err(b)) => prop_assert_eq!(std::mem::discriminant(&a), std::mem::discriminant(&b)),
            _ => prop_assert!(false, "locality defined for only one of two equivalent codes"),
        }
    }

    #[test]
    fn sweep_matches_oracle(code in oracle_code()) {
        let h = hierarchy(&code);
        for i in 1..=code.k() {
            prop_assert_eq!(h[i - 1], ghw_oracle(&code, i, &Limits::default()).unwrap());
        }
    }

    #[test]
    fn duality_and_dual_identities(code in small_code()) {
        let opts = HierarchyOptions::default();
        let p = weight_hierarchy(&code, &opts).unwrap();
        let d = dual_weight_hierarchy(&code, &opts).unwrap();
        prop_assert!(wei_duality(&p, &d).holds());
        let (n, k) = (code.n(), code.k());
        let gk = gk_dual(n, k, &d.values);
        prop_assert!(gk.agree());
        prop_assert_eq!(gk.distance(n), p.values[0]);
        let m = mu_rho(&d.values, n, k);
        prop_assert_eq!(m.mu, m.rho + 1);
        prop_assert_eq!(m.distance_from_mu(n, k), p.values[0] as i64);
    }

    #[test]
    fn certification_never_violates(code in small_code()) {
        let b = certify_optimal(&code, &CertifyOptions::default()).unwrap();
        prop_assert!(!b.has_violation(), "{:?}", b.verdicts);
        if let Some(r) = b.r {
            prop_assert!(r <= code.k());
        }
    }

    #[test]
    fn code_file_round_trip(code in small_code()) {
        let text = serialize_code(&code);
        let back = parse_code_file(&text).unwrap();
        prop_assert_eq!(back.generator(), code.generator());
        prop_assert_eq!(serialize_code(&back), text);
    }
}
