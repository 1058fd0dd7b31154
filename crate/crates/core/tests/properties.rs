use std::collections::BTreeSet;

use lpm_core::lattice_path::all_paths;
use lpm_core::{ehrhart, matroid, polytope, triangulate, volume, PathWord, Region};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// A region from two lattice paths to `(m, r)`, ordered so the lower one
/// stays below.
fn region() -> impl Strategy<Value = Region> {
    (1usize..=8)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, r)| {
            let count = all_paths(n - r, r).len();
            (Just(n - r), Just(r), 0..count, 0..count)
        })
        .prop_filter_map("paths cross", |(m, r, a, b)| {
            let paths = all_paths(m, r);
            Region::new(paths[a].clone(), paths[b].clone())
                .or_else(|_| Region::new(paths[b].clone(), paths[a].clone()))
                .ok()
        })
}

proptest! {
    #[test]
    fn descent_counts_are_reversal_symmetric(n in 1usize..=8, d in proptest::collection::btree_set(1usize..8, 0..8)) {
        let d: BTreeSet<usize> = d.into_iter().filter(|&i| i < n).collect();
        let complement: BTreeSet<usize> = (1..n).filter(|i| !d.contains(i)).collect();
        prop_assert_eq!(
            volume::exact_descent_count(n, &d).unwrap(),
            volume::exact_descent_count(n, &complement).unwrap()
        );
    }

    #[test]
    fn psi_inverts_on_its_chamber(num in proptest::collection::vec(0i64..12, 1..6)) {
        let x: Vec<BigRational> = num.iter().map(|&a| BigRational::new(a.into(), 12.into())).collect();
        let y = triangulate::psi(&x);
        if let Some(w) = triangulate::chamber_of(&y) {
            prop_assert_eq!(triangulate::psi_inverse_on(&w, &y).unwrap(), x);
        }
    }

    #[test]
    fn bases_satisfy_the_inequality_description(reg in region()) {
        let h = polytope::h_representation(&reg);
        for b in matroid::bases(&reg) {
            prop_assert!(h.contains(b.coords()), "{} {}", reg, b);
            prop_assert!(reg.contains_path(&b.to_path()));
        }
    }

    #[test]
    fn region_spec_round_trips(reg in region()) {
        prop_assert_eq!(Region::from_spec(&reg.to_spec()).unwrap(), reg.clone());
        let lower: PathWord = reg.lower().to_string().parse().unwrap();
        prop_assert_eq!(&lower, reg.lower());
    }

    #[test]
    fn dimension_counts_components(reg in region()) {
        let c = matroid::components(&reg).count();
        prop_assert_eq!(polytope::dimension(&reg) + c, reg.len());
    }

    #[test]
    fn ehrhart_constant_term_and_bases(reg in region()) {
        prop_assume!(reg.len() <= 6);
        let poly = ehrhart::ehrhart_polynomial(&reg).unwrap();
        prop_assert_eq!(poly.evaluate(0), BigRational::from_integer(BigInt::from(1)));
        prop_assert_eq!(poly.evaluate(1), BigRational::from_integer(BigInt::from(matroid::bases(&reg).len())));
    }
}

#[test]
fn descent_classes_of_size_k_sum_to_eulerian() {
    for n in 1..=8 {
        let mut by_size = vec![BigInt::from(0); n + 1];
        for mask in 0u32..1 << (n - 1) {
            let d: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            by_size[d.len() + 1] += volume::exact_descent_count(n, &d).unwrap();
        }
        for k in 1..=n {
            assert_eq!(by_size[k], volume::eulerian(k, n), "n = {n}, k = {k}");
        }
    }
}
