//! Disjoint cross-intersecting families of k-subsets.
//!
//! The crate computes the regime of `(n, k)` for the max-min problem
//! `f(n, k) = max min{|A|, |B|}` over disjoint cross-intersecting k-uniform
//! families, builds and verifies the explicit extremal pairs, provides lex
//! segments, shadows and the Hilton/Kruskal–Katona checks, and solves small
//! instances exactly by branch and bound over the Kneser graph.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod family;
pub mod io;
pub mod kset;
pub mod lex;
pub mod regimes;
pub mod search;

pub use constructions::{
    half_star_split, prop22_pair, prop55_pair, section3_pair, verify_pair, Check, VerifyReport,
};
pub use error::{Error, Result};
pub use family::{
    complement_family, cross_intersecting, cross_witness, diversity, full_star, is_intersecting,
    is_star, restriction, Family, FamilyPair, Restriction,
};
pub use kset::{choose, colex_rank, colex_unrank, lex_compare, GroundSet, KSet};
pub use lex::{
    cross_partners, hilton_equivalent_check, kk_compress_check, lex_segment, max_cross_partner,
    shadow, LexSegment,
};
pub use regimes::{
    binomial, bounds, classify, ineq_crossover, theorem14_check, thm43_threshold, BoundSet,
    Inequality, Regime, RegimeReport,
};
pub use search::{
    exact_maxmin, exhaustive_labelings, symmetry_fix, Budget, KneserGraph, Mode, SearchConfig,
    SearchOutcome,
};
