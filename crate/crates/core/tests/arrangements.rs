mod oracle;

use lefkit::arrangements::{
    free_search, generic_splitting, slp2_bridge, LineArrangement, SplittingType,
};
use lefkit::catalog::{entries, Check, NMSLP_K2_D4};
use lefkit::exactlin::{Field, PrimeField, Rationals};
use lefkit::fatpoints::perp_fat_dim;
use lefkit::lefschetz::{MultMap, TrialPolicy};
use lefkit::polyring::{dim_forms, HPoly};
use lefkit::Caveat;

fn policy(seed: u64) -> TrialPolicy {
    TrialPolicy {
        seed,
        ..TrialPolicy::default()
    }
}

#[test]
fn free_arrangements_have_split_h0_tables() {
    for (arr, exps) in [
        (LineArrangement::b3(), (3, 5)),
        (LineArrangement::braid(), (2, 3)),
        (LineArrangement::triangle(), (1, 1)),
    ] {
        let cert = free_search(&Rationals, &arr, &policy(1)).unwrap();
        assert_eq!(cert.exponents(), Some(exps));
        for &(e, h) in &cert.h0_table {
            let split =
                dim_forms(3, e as i64 - exps.0 as i64) + dim_forms(3, e as i64 - exps.1 as i64);
            assert_eq!(h, split, "e = {e}");
        }
    }
}

#[test]
fn b3_splitting_is_seed_independent() {
    for seed in 0..5 {
        let s = generic_splitting(&LineArrangement::b3(), &policy(seed))
            .unwrap()
            .splitting;
        assert_eq!(s, SplittingType { a: 3, b: 5 });
    }
}

#[test]
fn b3_bridge_agrees() {
    let r = slp2_bridge(&LineArrangement::b3(), &policy(7)).unwrap();
    assert!(r.fails_slp2 && r.unstable && r.agree);
}

#[test]
fn dependent_powers_break_the_bridge() {
    let arr = LineArrangement::new(NMSLP_K2_D4.to_vec()).unwrap();
    let r = slp2_bridge(&arr, &policy(3)).unwrap();
    assert_eq!(r.splitting, SplittingType { a: 3, b: 5 });
    assert!(r.unstable);
    assert!(!r.fails_slp2);
    assert!(r.report.caveats.contains(&Caveat::TheoremHypothesisUnmet));
    assert_eq!(r.report.delta(), None);
}

#[test]
fn catalog_cokernels_match_fat_point_perps() {
    let f = PrimeField::default();
    let mut checked = 0;
    for e in entries() {
        let Check::FailsAt { ideal, i, k, .. } = &e.check else {
            continue;
        };
        let n = ideal.nvars();
        if dim_forms(n, (i + k) as i64) > 220 {
            continue;
        }
        let coeffs: Vec<i64> = (0..n as i64).map(|j| 3 + 7 * j * j + j).collect();
        let point: Vec<u64> = coeffs.iter().map(|c| f.from_i64(*c)).collect();
        let g = ideal.instantiate(&f).unwrap();
        let coker = MultMap::new(&g).cokernel(&HPoly::linear(&f, &point), *i, *k);
        assert_eq!(
            coker,
            perp_fat_dim(&g, i + k, &point, i + 1).unwrap(),
            "{}",
            e.name
        );
        let gens: Vec<oracle::Poly> = ideal.generators.iter().map(oracle::from_hpoly).collect();
        let opoint: Vec<u64> = coeffs.iter().map(|c| *c as u64).collect();
        assert_eq!(
            coker,
            oracle::perp_fat_dim(&gens, n, i + k, &opoint, i + 1),
            "{}",
            e.name
        );
        checked += 1;
    }
    assert!(checked >= 20);
}
