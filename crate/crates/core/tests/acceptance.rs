//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use crossfam::constructions::section3_families;
use crossfam::regimes::{eq_5_13_holds, ineq_holds, Crossover};
use crossfam::search::{exact_maxmin, exhaustive_labelings, Mode, SearchConfig};
use crossfam::{
    bounds, choose, classify, cross_intersecting, cross_partners, half_star_split,
    hilton_equivalent_check, ineq_crossover, kk_compress_check, max_cross_partner, prop22_pair,
    prop55_pair, section3_pair, theorem14_check, verify_pair, Check, Family, FamilyPair,
    Inequality, KSet,
};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Verdict = (bool, String);
type Criterion = (&'static str, fn() -> Verdict);

const SEED: u64 = 0x5eed_cafe;

fn regime_trichotomy() -> Verdict {
    let start = Instant::now();
    let mut exceptions = Vec::new();
    let mut points = 0u64;
    for k in 3..=12u64 {
        for n in 2 * k + 1..=4 * k * k * k {
            let r = classify(n, k).unwrap();
            points += 1;
            if [r.eq_3_2, r.eq_3_4, r.eq_4_2]
                .iter()
                .filter(|&&b| b)
                .count()
                != 1
            {
                exceptions.push((n, k));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = exceptions.is_empty() && elapsed < Duration::from_secs(60);
    (
        ok,
        format!(
            "{points} points, exceptions (n,k) = {exceptions:?}, {:.1}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn threshold_clauses() -> Verdict {
    let mut bad = Vec::new();
    let mut k4 = Vec::new();
    for k in 3..=12u64 {
        let rep = theorem14_check(k, 4 * k * k * k).unwrap();
        if !rep.is_clean() {
            bad.push((
                k,
                rep.violations_holds.clone(),
                rep.violations_fails.clone(),
            ));
        }
        if k == 4 {
            k4 = rep.grey.clone();
        }
    }
    let grey_ok = k4 == (17..=21).collect::<Vec<u64>>();
    (
        bad.is_empty() && grey_ok,
        format!("violations {bad:?}, k=4 grey zone {k4:?}"),
    )
}

fn construction_goldens() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;

    let s3 = section3_pair(7, 3).unwrap();
    let s3_ok = s3.sizes() == (10, 9) && s3.min_size() == 9 && 9 > choose(6, 2) / 2;
    ok &= s3_ok;
    notes.push(format!("section3(7,3) sizes {:?}", s3.sizes()));

    let mut sum_bad = Vec::new();
    for n in 7..=30u32 {
        for k in 3..=(n - 1) / 2 {
            if choose(n, k) > 1 << 24 {
                continue;
            }
            let (f, g) = section3_families(n, k).unwrap();
            if f.len() + g.len() != choose(n - 1, k - 1) + (n - k) as u64 {
                sum_bad.push((n, k));
            }
        }
    }
    ok &= sum_bad.is_empty();
    notes.push(format!("|F|+|G| identity failures {sum_bad:?}"));

    let p22 = prop22_pair(11, 4).unwrap();
    let rep = verify_pair(
        &p22,
        &[
            Check::StarFree,
            Check::Cross,
            Check::Disjoint,
            Check::Sizes(60, 61),
        ],
    );
    ok &= rep.all_passed();
    notes.push(format!(
        "prop22(11,4) sizes {:?} checks {}",
        p22.sizes(),
        rep.all_passed()
    ));

    for (n, k) in [(55u32, 5u32), (60, 6)] {
        let p = prop55_pair(n, k).unwrap();
        let want = bounds(n as u64, k as u64)
            .unwrap()
            .prop55_value
            .to_u64()
            .unwrap();
        let disjoint = p.is_disjoint();
        ok &= p.min_size() == want && disjoint;
        notes.push(format!("prop55({n},{k}) min {} vs {want}", p.min_size()));
    }
    (ok, notes.join("; "))
}

const GOLDEN: [((u32, u32), [u64; 4]); 2] = [((5, 2), [2, 4, 2, 3]), ((6, 2), [2, 5, 2, 3])];

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for ((n, k), golden) in GOLDEN {
        let mut row = Vec::new();
        for (mode, want) in Mode::ALL.into_iter().zip(golden) {
            // the oracle pins the value before the search is consulted
            let oracle = exhaustive_labelings(n, k, mode).unwrap().value;
            let pinned = oracle == Some(want);
            let mut agree = true;
            for theorem_bounds in [true, false] {
                let cfg = SearchConfig {
                    theorem_bounds,
                    ..SearchConfig::default()
                };
                let out = exact_maxmin(n, k, mode, &cfg).unwrap();
                agree &= out.value == oracle
                    && verify_pair(&out.certificate, &mode.checks()).all_passed();
            }
            ok &= pinned && agree;
            row.push(format!("{}", oracle.unwrap_or(0)));
        }
        notes.push(format!("({n},{k}) [{}]", row.join(",")));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(300);
    (
        ok,
        format!(
            "{} in mode order plain/overlap/star-free/star-free+overlap, {:.1}s",
            notes.join(" "),
            elapsed.as_secs_f64()
        ),
    )
}

fn search_soundness() -> Verdict {
    let mode = Mode::new(false, false);
    let out = exact_maxmin(7, 3, mode, &SearchConfig::default()).unwrap();
    let verified = verify_pair(&out.certificate, &mode.checks()).all_passed();
    let ok = out.lo >= 9 && verified && out.certificate.min_size() >= 9;
    let what = match out.value {
        Some(v) => format!("exact value {v}"),
        None => format!("interval [{}, {}]", out.lo, out.hi),
    };
    (
        ok,
        format!(
            "(7,3): {what}, certificate sizes {:?} verified {verified}",
            out.certificate.sizes()
        ),
    )
}

fn hilton_suite() -> Verdict {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let mut mismatches = 0;
    let mut cross = 0;
    for i in 0..1000 {
        let (n, a, b) = random_params(&mut r, 3, 10, 1);
        let (fa, fb) = if i % 2 == 0 {
            random_cross_pair(&mut r, n, a, b)
        } else {
            (
                random_family(&mut r, ground(n, a), 3),
                random_family(&mut r, ground(n, b), 3),
            )
        };
        let truth = cross_intersecting(&fa, &fb).unwrap();
        cross += truth as u32;
        if hilton_equivalent_check(&fa, &fb).unwrap() != truth {
            mismatches += 1;
        }
    }
    (
        mismatches == 0,
        format!("1000 pairs ({cross} cross-intersecting), {mismatches} mismatches"),
    )
}

fn kk_suite() -> Verdict {
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut failures = 0;
    for _ in 0..1000 {
        let (n, a, b) = random_params(&mut r, 3, 9, 1);
        let (fa, fb) = random_cross_pair(&mut r, n, a, b);
        if !kk_compress_check(&fa, &fb).unwrap() {
            failures += 1;
        }
    }
    (
        failures == 0,
        format!("1000 cross-intersecting pairs, {failures} failures"),
    )
}

fn cross_partner_bound() -> Verdict {
    let mut ok = true;
    let mut notes = Vec::new();
    for (n, k) in [(8u32, 3u32), (9, 3), (10, 4)] {
        let m = choose(n - 1, k - 1) - choose(n - k, k - 1) + 1;
        let value = max_cross_partner(n - 1, k - 1, k, m).unwrap();
        let partners = cross_partners(n - 1, k - 1, k, m).unwrap();
        let g = ground(n - 1, k);
        let prefix = KSet::interval_bits(1, k - 1);
        let expected = Family::from_sets(
            g,
            (k..=2 * k - 2).map(|j| KSet::from_bits(g, prefix | 1 << (j - 1)).unwrap()),
        )
        .unwrap();
        ok &= value == (k - 1) as u64 && partners == expected;
        notes.push(format!("({n},{k}) -> {value}"));
    }
    (ok, notes.join(", "))
}

fn inequality_ledger() -> Verdict {
    let mut ok = true;
    let mut notes = Vec::new();
    let fails_at_50 = !ineq_holds(Inequality::Eq5_7, 50, 5);
    ok &= fails_at_50;
    notes.push(format!("k=5 n=50 first inequality fails: {fails_at_50}"));
    let held = (125..=500).all(|n| ineq_holds(Inequality::Eq5_12, n, 5));
    let consistent =
        (125..=500).all(|n| eq_5_13_holds(n, 5) == ineq_holds(Inequality::Eq5_12, n, 5));
    ok &= held && consistent;
    notes.push(format!("second holds on 125..=500: {held}"));
    for k in 5..=7u64 {
        match ineq_crossover(k, Inequality::Eq5_12, None).unwrap() {
            Crossover::Found {
                first, stable_from, ..
            } => {
                let ratio = stable_from as f64 / (k * k * k) as f64;
                ok &= (0.3..=1.1).contains(&ratio) && first == stable_from;
                if k == 5 {
                    ok &= stable_from < 125;
                }
                notes.push(format!("k={k} crossover {stable_from} ({ratio:.3} k³)"));
            }
            Crossover::CapExhausted { cap } => {
                ok = false;
                notes.push(format!("k={k} no crossover up to {cap}"));
            }
        }
    }
    (ok, notes.join(", "))
}

fn pyber_and_mors() -> Verdict {
    let mut pairs: Vec<FamilyPair> = Vec::new();
    for n in 5..=16u32 {
        for k in 2..=(n - 1) / 2 {
            pairs.push(half_star_split(n, k).unwrap());
            pairs.push(prop22_pair(n, k).unwrap());
            if k >= 3 {
                pairs.push(section3_pair(n, k).unwrap());
            }
            if k >= 5 && n > 2 * k + 1 {
                pairs.push(prop55_pair(n, k).unwrap());
            }
        }
    }
    let mut r = ChaCha8Rng::seed_from_u64(SEED + 2);
    for _ in 0..500 {
        let (n, a, _) = random_params(&mut r, 4, 12, 0);
        if n < 2 * a {
            continue;
        }
        let (fa, fb) = random_cross_pair(&mut r, n, a, a);
        pairs.push(FamilyPair::new(fa, fb).unwrap());
    }
    let mut violations = 0;
    for p in &pairs {
        let x = choose(p.ground().n() - 1, p.ground().k() - 1) as u128;
        let (a, b) = p.sizes();
        if !p.is_cross_intersecting() || a as u128 * b as u128 > x * x {
            violations += 1;
        }
    }
    let mors = exhaustive_labelings(5, 2, Mode::new(true, true))
        .unwrap()
        .value
        .unwrap();
    (
        violations == 0 && mors <= 3,
        format!(
            "{} pairs, {violations} product violations; (5,2) star-free overlap value {mors} <= 3",
            pairs.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "regime trichotomy, 3 <= k <= 12, 2k < n <= 4k³",
            regime_trichotomy,
        ),
        ("threshold clauses and the k=4 grey zone", threshold_clauses),
        ("construction golden values", construction_goldens),
        (
            "search equals the exhaustive oracle at (5,2), (6,2)",
            oracle_equivalence,
        ),
        ("search soundness at (7,3)", search_soundness),
        (
            "Hilton equivalence, 1000 random pairs, n <= 10",
            hilton_suite,
        ),
        ("KK compression, 1000 random pairs, n <= 9", kk_suite),
        ("cross-partner bound k-1", cross_partner_bound),
        ("inequality ledger at k = 5, 6, 7", inequality_ledger),
        (
            "Pyber products and the (5,2) star-free overlap value",
            pyber_and_mors,
        ),
    ];
    let mut failed = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        let mark = if ok { "PASS" } else { "FAIL" };
        println!(
            "[{mark}] {:>2}. {title}: {detail} ({:.2}s)",
            i + 1,
            start.elapsed().as_secs_f64()
        );
        if !ok {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
    } else {
        println!("acceptance: criteria {failed:?} fail");
        std::process::exit(1);
    }
}
