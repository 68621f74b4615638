use crossfam::constructions::section3_families;
use crossfam::regimes::{bounds, classify, Regime};
use crossfam::{
    choose, half_star_split, prop22_pair, prop55_pair, section3_pair, verify_pair, Check,
    FamilyPair,
};
use num_traits::ToPrimitive;

/// Pairs small enough for a full cross-intersection check.
const CROSS_BUDGET: u64 = 2_000_000;

fn assert_pair(name: &str, n: u32, k: u32, p: &FamilyPair, star_free: bool) {
    let mut checks = vec![Check::Disjoint];
    let (a, b) = p.sizes();
    if a * b <= CROSS_BUDGET {
        checks.extend([Check::Cross, Check::Pyber]);
    } else {
        let x = choose(n - 1, k - 1) as u128;
        assert!(a as u128 * b as u128 <= x * x);
    }
    if star_free {
        checks.push(Check::StarFree);
    }
    let rep = verify_pair(p, &checks);
    assert!(rep.all_passed(), "{name} ({n},{k}): {:?}", rep.outcomes);
}

#[test]
fn every_generator_up_to_30() {
    for n in 3..=30u32 {
        for k in 1..=(n - 1) / 2 {
            if choose(n, k) > 1 << 22 {
                continue;
            }
            let x = choose(n - 1, k - 1);
            let b = bounds(n as u64, k as u64).unwrap();
            let small = |v: &num_bigint::BigUint| v.to_u64().unwrap();

            let hs = half_star_split(n, k).unwrap();
            assert_eq!(hs.min_size(), x / 2);
            assert_pair("half-star", n, k, &hs, false);

            if k >= 2 {
                let p = prop22_pair(n, k).unwrap();
                assert_eq!(p.min_size(), small(&b.fstar_value), "prop22 ({n},{k})");
                assert_pair("prop22", n, k, &p, true);
            }

            if k >= 3 {
                let (f, g) = section3_families(n, k).unwrap();
                assert_eq!(f.len() + g.len(), x + (n - k) as u64, "({n},{k})");
                let p = section3_pair(n, k).unwrap();
                assert_eq!(p.sizes().0 + p.sizes().1, x + (n - k) as u64);
                assert_pair("section3", n, k, &p, false);
                if classify(n as u64, k as u64).unwrap().regime == Regime::ConstructionBeats {
                    assert!(p.min_size() > x / 2, "section3 ({n},{k})");
                }
            }

            if k >= 5 && n > 2 * k + 1 {
                let p = prop55_pair(n, k).unwrap();
                assert_eq!(p.min_size(), small(&b.prop55_value), "prop55 ({n},{k})");
                assert_pair("prop55", n, k, &p, true);
            }
        }
    }
}
