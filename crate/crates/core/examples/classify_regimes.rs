//! Regime of a few (n, k) with the exact binomials behind each verdict.
//!
//!     cargo run --example classify_regimes -- 7 3

use crossfam::{bounds, classify, Regime};

fn main() -> crossfam::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let points = match args[..] {
        [n, k] => vec![(n, k)],
        _ => vec![(6, 3), (7, 3), (12, 3), (13, 3), (17, 4), (22, 4), (124, 4)],
    };
    for (n, k) in points {
        let r = classify(n, k)?;
        println!("({n},{k}) {:?}", r.regime);
        if r.regime == Regime::Degenerate {
            continue;
        }
        let w = &r.witnesses;
        println!(
            "    C(n-1,k-1) = {}, C(n-k,k-1) = {}, C(n-k-1,k-1) = {}",
            w.star, w.avoid_k, w.avoid_k_plus_1
        );
        let b = bounds(n, k)?;
        println!(
            "    half star {}, grey-zone upper {}, Hilton-Milner {}",
            b.conjecture_value, b.prop41_upper, b.hm
        );
        if r.regime == Regime::GreyZone && !r.eq_4_2 {
            println!("    boundary point: the strict grey-zone inequality fails too");
        }
    }
    Ok(())
}
