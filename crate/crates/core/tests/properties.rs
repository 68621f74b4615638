mod common;

use common::*;
use crossfam::{
    cross_intersecting, hilton_equivalent_check, is_intersecting, kk_compress_check, lex_segment,
    shadow, verify_pair, Check, Family, FamilyPair, KSet,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Greedy intersecting subfamily in colex order.
fn greedy_intersecting(f: &Family) -> Family {
    let mut kept: Vec<u64> = Vec::new();
    for m in f.masks() {
        if kept.iter().all(|&x| x & m != 0) {
            kept.push(m);
        }
    }
    Family::from_predicate(f.ground(), |s| kept.contains(&s)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn intersecting_families_obey_ekr(seed in any::<u64>(), n in 4u32..=11, k in 1u32..=5, count in 1usize..60) {
        prop_assume!(n >= 2 * k);
        let mut r = rng(seed);
        let f = greedy_intersecting(&random_family(&mut r, ground(n, k), count));
        prop_assert!(is_intersecting(&f));
        prop_assert!(f.len() <= star_size(n, k));
    }

    #[test]
    fn cross_pairs_obey_pyber(seed in any::<u64>(), n in 4u32..=11, k in 1u32..=5) {
        prop_assume!(n >= 2 * k);
        let mut r = rng(seed);
        let (a, b) = random_cross_pair(&mut r, n, k, k);
        let x = star_size(n, k) as u128;
        prop_assert!((a.len() as u128) * (b.len() as u128) <= x * x);
        let rep = verify_pair(&FamilyPair::new(a, b).unwrap(), &[Check::Cross, Check::Pyber]);
        prop_assert!(rep.all_passed());
    }

    #[test]
    fn colex_segments_minimise_shadow(seed in any::<u64>(), n in 3u32..=10, k in 2u32..=5, count in 1usize..40, l in 1u32..5) {
        prop_assume!(k < n && l < k);
        let mut r = rng(seed);
        let g = ground(n, k);
        let f = random_family(&mut r, g, count);
        let seg = Family::from_sets(g, g.ksets().take(f.len() as usize).map(|b| KSet::from_bits(g, b).unwrap())).unwrap();
        prop_assert!(shadow(&seg, l).unwrap().len() <= shadow(&f, l).unwrap().len());
    }

    #[test]
    fn hilton_matches_cross_intersection(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, a, b) = random_params(&mut r, 3, 10, 1);
        let (fa, fb) = if seed % 2 == 0 {
            random_cross_pair(&mut r, n, a, b)
        } else {
            (random_family(&mut r, ground(n, a), 3), random_family(&mut r, ground(n, b), 3))
        };
        prop_assert_eq!(
            hilton_equivalent_check(&fa, &fb).unwrap(),
            cross_intersecting(&fa, &fb).unwrap()
        );
    }

    #[test]
    fn kk_compression_keeps_cross_intersection(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, a, b) = random_params(&mut r, 3, 9, 1);
        let (fa, fb) = random_cross_pair(&mut r, n, a, b);
        prop_assert!(kk_compress_check(&fa, &fb).unwrap());
    }
}

#[test]
fn lex_segments_do_not_minimise_shadow() {
    // 𝓛(5,2,4) is the star at 1 and touches all five points; {12,13,23,14} touches four
    let seg = lex_segment(5, 2, 4).unwrap();
    assert_eq!(shadow(&seg, 1).unwrap().len(), 5);
    let g = ground(5, 2);
    let colex = Family::from_lists(g, [[1u32, 2], [1, 3], [2, 3], [1, 4]]).unwrap();
    assert_eq!(shadow(&colex, 1).unwrap().len(), 4);
}
