//! The auxiliary inequalities for k >= 5: where each starts holding for good.

use crossfam::regimes::{default_scan_cap, ineq_holds, Crossover};
use crossfam::{ineq_crossover, Inequality};

fn main() -> crossfam::Result<()> {
    for k in 5..=8u64 {
        println!(
            "k = {k} (k³ = {}, scan cap {})",
            k * k * k,
            default_scan_cap(k)
        );
        for which in Inequality::ALL {
            let c = ineq_crossover(k, which, None)?;
            let line = match c {
                Crossover::Found {
                    first, stable_from, ..
                } if which.seeks_failure() => {
                    format!("first failure {first}, fails throughout from {stable_from}")
                }
                Crossover::Found {
                    first, stable_from, ..
                } => format!(
                    "first holds at {first}, holds throughout from {stable_from} ({:.3} k³)",
                    stable_from as f64 / (k * k * k) as f64
                ),
                Crossover::CapExhausted { cap } => format!("no change up to {cap}"),
            };
            println!("    {:<7} {line}", which.name());
        }
        println!(
            "    at n = k(k+5) = {}: eq_5_7 holds {}",
            k * (k + 5),
            ineq_holds(Inequality::Eq5_7, k * (k + 5), k)
        );
    }
    Ok(())
}
