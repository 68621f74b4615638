//! Lex segments, their shadows, and the colex segments that actually
//! minimise shadows.

use crossfam::lex::lex_unrank;
use crossfam::{lex_segment, shadow, Family, GroundSet, KSet};

fn colex_segment(n: u32, k: u32, m: u64) -> crossfam::Result<Family> {
    let g = GroundSet::new(n, k)?;
    let sets: Vec<KSet> = g
        .ksets()
        .take(m as usize)
        .map(|b| KSet::from_bits(g, b))
        .collect::<Result<_, _>>()?;
    Family::from_sets(g, sets)
}

fn main() -> crossfam::Result<()> {
    let seg = lex_segment(7, 3, 15)?;
    let last = seg
        .iter()
        .max_by(|a, b| crossfam::lex_compare(*a, *b))
        .unwrap();
    println!(
        "L(7,3,15): {} sets, last {last}, next {}",
        seg.len(),
        lex_unrank(7, 3, 15)?
    );

    for (n, k, m, l) in [(5, 2, 4, 1), (8, 3, 21, 2), (9, 4, 50, 3)] {
        let lex = shadow(&lex_segment(n, k, m)?, l)?.len();
        let colex = shadow(&colex_segment(n, k, m)?, l)?.len();
        println!("({n},{k}) m = {m}: {l}-shadow of lex segment {lex}, of colex segment {colex}");
    }

    let f = Family::from_lists(GroundSet::new(5, 3)?, [[1u32, 2, 3], [2, 3, 4]])?;
    let sh = shadow(&f, 2)?;
    let members: Vec<String> = sh.iter().map(|s| s.to_string()).collect();
    println!("shadow of {{123, 234}}: {}", members.join(" "));
    Ok(())
}
