//! Exact max-min on small Kneser graphs, checked against the brute-force
//! oracle where it fits.
//!
//!     cargo run --release --example exact_search -- 7 3 60

use std::time::Duration;

use crossfam::search::{exact_maxmin, exhaustive_labelings, Budget, Mode, SearchConfig};

fn main() -> crossfam::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (n, k) = match args[..] {
        [n, k, ..] => (n as u32, k as u32),
        _ => (7, 3),
    };
    let secs = args.get(2).copied().unwrap_or(60);

    for (sn, sk) in [(5, 2), (6, 2)] {
        for mode in Mode::ALL {
            let oracle = exhaustive_labelings(sn, sk, mode)?.value;
            let bnb = exact_maxmin(sn, sk, mode, &SearchConfig::default())?.value;
            println!("({sn},{sk}) {mode:?}: oracle {oracle:?}, search {bnb:?}");
        }
    }

    let config = SearchConfig {
        budget: Budget {
            max_nodes: None,
            time_limit: Some(Duration::from_secs(secs)),
        },
        ..SearchConfig::default()
    };
    for mode in Mode::ALL {
        let out = exact_maxmin(n, k, mode, &config)?;
        match out.value {
            Some(v) => print!("({n},{k}) {mode:?}: exact {v}"),
            None => print!("({n},{k}) {mode:?}: in [{}, {}]", out.lo, out.hi),
        }
        println!(
            "  ({} nodes, {} ms, {} decisions)",
            out.stats.nodes, out.stats.elapsed_ms, out.stats.decisions
        );
        let (a, b) = out.certificate.sizes();
        println!("  certificate |A| = {a}, |B| = {b}");
    }
    Ok(())
}
