//! Build each named pair, verify it and write it to a family file.
//!
//!     cargo run --release --example constructions -- 11 4 /tmp

use std::path::PathBuf;

use crossfam::io::{read_pair, write_pair};
use crossfam::{half_star_split, prop22_pair, prop55_pair, section3_pair, verify_pair, Check};

fn main() -> crossfam::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().and_then(|a| a.parse().ok()).unwrap_or(11);
    let k: u32 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let dir = PathBuf::from(
        args.get(2)
            .cloned()
            .unwrap_or_else(|| std::env::temp_dir().display().to_string()),
    );

    let basic = [Check::Disjoint, Check::Cross, Check::Pyber];
    let star_free = [Check::Disjoint, Check::Cross, Check::Pyber, Check::StarFree];
    let built = [
        ("half-star", half_star_split(n, k), &basic[..]),
        ("section3", section3_pair(n, k), &basic[..]),
        ("prop22", prop22_pair(n, k), &star_free[..]),
        ("prop55", prop55_pair(n, k), &star_free[..]),
    ];
    for (name, pair, checks) in built {
        let pair = match pair {
            Ok(p) => p,
            Err(e) => {
                println!("{name:>9}: skipped ({e})");
                continue;
            }
        };
        let report = verify_pair(&pair, checks);
        let (a, b) = pair.sizes();
        println!(
            "{name:>9}: |A| = {a}, |B| = {b}, all checks {}",
            report.all_passed()
        );
        for o in report.outcomes.iter().filter(|o| !o.passed) {
            println!("           {} failed: {}", o.check, o.detail);
        }
        let file = dir.join(format!("{name}-{n}-{k}.json"));
        write_pair(&file, &pair)?;
        assert_eq!(read_pair(&file)?, pair);
        println!("           written to {}", file.display());
    }
    Ok(())
}
