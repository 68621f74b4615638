//! Cross-intersection three ways: pairwise, through the complement shadow,
//! and after compressing both families to lex segments.

use crossfam::constructions::section3_families;
use crossfam::{
    choose, cross_intersecting, cross_partners, hilton_equivalent_check, kk_compress_check,
    max_cross_partner, Family, GroundSet,
};

fn main() -> crossfam::Result<()> {
    let (f, g) = section3_families(7, 3)?;
    println!(
        "(7,3) pair |F| = {}, |G| = {}: pairwise {}, via shadow {}, lex segments {}",
        f.len(),
        g.len(),
        cross_intersecting(&f, &g)?,
        hilton_equivalent_check(&f, &g)?,
        kk_compress_check(&f, &g)?
    );

    let a = Family::from_lists(GroundSet::new(7, 3)?, [[1u32, 2, 3]])?;
    let b = Family::from_lists(GroundSet::new(7, 3)?, [[4u32, 5, 6]])?;
    println!(
        "{{123}} vs {{456}}: pairwise {}, via shadow {}",
        cross_intersecting(&a, &b)?,
        hilton_equivalent_check(&a, &b)?
    );

    // one set past the (k-1)-sets meeting [k-1] leaves only k-1 partners
    for (n, k) in [(8u32, 3u32), (9, 3), (10, 4)] {
        let m = choose(n - 1, k - 1) - choose(n - k, k - 1) + 1;
        let count = max_cross_partner(n - 1, k - 1, k, m)?;
        let partners: Vec<String> = cross_partners(n - 1, k - 1, k, m)?
            .iter()
            .map(|s| s.to_string())
            .collect();
        println!("({n},{k}) m = {m}: {count} partners {}", partners.join(" "));
    }
    Ok(())
}
