//! Where the half-star value stops being optimal, per k, against the ck²
//! approximations.
//!
//!     cargo run --release --example theorem_table -- 3 12

use crossfam::theorem14_check;

fn main() -> crossfam::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (lo, hi) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 12),
    };
    println!("  k  beats<=  grey zone        holds>=  ck²+(2-c)k  ck²-2ck+1");
    for k in lo..=hi {
        let r = theorem14_check(k, 4 * k * k * k)?;
        let grey = match (r.grey.first(), r.grey.last()) {
            (Some(a), Some(b)) => format!("{a}..{b}"),
            _ => "-".into(),
        };
        println!(
            "{k:>3}  {:>7}  {grey:<15}  {:>7}  {:>10.2}  {:>9.2}{}",
            r.max_beats.map_or("-".into(), |v| v.to_string()),
            r.min_holds.map_or("-".into(), |v| v.to_string()),
            r.approx.holds_from,
            r.approx.fails_until,
            if r.boundary_points.is_empty() {
                String::new()
            } else {
                format!("  boundary {:?}", r.boundary_points)
            },
        );
        assert!(r.is_clean(), "approximation clause violated at k = {k}");
    }
    Ok(())
}
