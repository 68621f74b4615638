#![allow(dead_code)]

use crossfam::{choose, colex_unrank, Family, GroundSet};
use rand::Rng;

pub fn ground(n: u32, k: u32) -> GroundSet {
    GroundSet::new(n, k).unwrap()
}

/// `count` members drawn with replacement (duplicates collapse).
pub fn random_family(rng: &mut impl Rng, g: GroundSet, count: usize) -> Family {
    let total = g.size();
    let sets = (0..count).map(|_| colex_unrank(g, rng.gen_range(0..total)).unwrap());
    Family::from_sets(g, sets).unwrap()
}

/// Every kb-subset of `[n]` meeting all members of `a`.
pub fn partners(a: &Family, kb: u32) -> Family {
    let masks = a.masks();
    Family::from_predicate(ground(a.n(), kb), |y| masks.iter().all(|&x| x & y != 0)).unwrap()
}

pub fn random_subfamily(rng: &mut impl Rng, f: &Family, p: f64) -> Family {
    Family::from_sets(f.ground(), f.iter().filter(|_| rng.gen_bool(p))).unwrap()
}

/// A cross-intersecting pair: a few random a-sets, then a random part of
/// their partners.
pub fn random_cross_pair(rng: &mut impl Rng, n: u32, ka: u32, kb: u32) -> (Family, Family) {
    let count = rng.gen_range(1..=4);
    let a = random_family(rng, ground(n, ka), count);
    let p = rng.gen_range(0.2..1.0);
    let b = random_subfamily(rng, &partners(&a, kb), p);
    (a, b)
}

/// Random n <= n_max with two uniformities a, b >= 1 satisfying the slack
/// `a + b + slack <= n`.
pub fn random_params(rng: &mut impl Rng, n_min: u32, n_max: u32, slack: u32) -> (u32, u32, u32) {
    loop {
        let n = rng.gen_range(n_min..=n_max);
        let a = rng.gen_range(1..n);
        let b = rng.gen_range(1..n);
        if a + b + slack <= n {
            return (n, a, b);
        }
    }
}

pub fn star_size(n: u32, k: u32) -> u64 {
    choose(n - 1, k - 1)
}
