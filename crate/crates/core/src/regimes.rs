//! Exact integer arithmetic for the bounds and thresholds around `f(n, k)`.
//!
//! Every regime and bound decision is made on big integers, halving
//! comparisons by doubling the other side. `c = log2(e)` only shows up in
//! fields explicitly marked approximate.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};

/// `log2(e)`, for reporting only.
pub const C_LOG2E: f64 = std::f64::consts::LOG2_E;

/// Exact `C(n, r)`; zero when `r < 0`, `n < 0` or `r > n`.
pub fn binomial(n: i64, r: i64) -> BigUint {
    if n < 0 || r < 0 || r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=r {
        acc *= n - r + i;
        acc /= i;
    }
    acc
}

fn b(n: u64, r: u64) -> BigUint {
    binomial(n as i64, r as i64)
}

fn bi(n: i64, r: i64) -> BigUint {
    binomial(n, r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    /// `2 C(n-k-1, k-1) >= C(n-1, k-1) + 2`: the half-star value is optimal.
    ConjectureHolds,
    /// `2 C(n-k, k-1) < C(n-1, k-1)`: the two-family construction beats it.
    ConstructionBeats,
    /// Neither of the two inequalities above.
    GreyZone,
    /// `n <= 2k`.
    Degenerate,
}

/// Exact binomials the classification rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witnesses {
    /// `C(n-k-1, k-1)`
    #[serde(with = "decimal")]
    pub avoid_k_plus_1: BigUint,
    /// `C(n-k, k-1)`
    #[serde(with = "decimal")]
    pub avoid_k: BigUint,
    /// `C(n-1, k-1)`
    #[serde(with = "decimal")]
    pub star: BigUint,
}

/// `ck² + (2-c)k`, `ck² - 2ck + 1` and `c(k-1)² + 1`; floating point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxThresholds {
    pub holds_from: f64,
    pub fails_until: f64,
    pub fails_until_alt: f64,
}

impl ApproxThresholds {
    pub fn for_k(k: u64) -> Self {
        let k = k as f64;
        let c = C_LOG2E;
        ApproxThresholds {
            holds_from: c * k * k + (2.0 - c) * k,
            fails_until: c * k * k - 2.0 * c * k + 1.0,
            fails_until_alt: c * (k - 1.0) * (k - 1.0) + 1.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub n: u64,
    pub k: u64,
    pub regime: Regime,
    /// `2 C(n-k-1,k-1) >= C(n-1,k-1) + 2`
    pub eq_3_2: bool,
    /// `2 C(n-k,k-1) < C(n-1,k-1)`
    pub eq_3_4: bool,
    /// `2 C(n-k-1,k-1) < C(n-1,k-1) < 2 C(n-k,k-1)`, strict on both sides.
    pub eq_4_2: bool,
    pub witnesses: Witnesses,
    pub approx_thresholds: ApproxThresholds,
}

pub fn classify(n: u64, k: u64) -> Result<RegimeReport> {
    if k == 0 {
        return precondition("k must be positive");
    }
    let star = if n >= 1 {
        b(n - 1, k - 1)
    } else {
        BigUint::zero()
    };
    let witnesses = Witnesses {
        avoid_k_plus_1: bi(n as i64 - k as i64 - 1, k as i64 - 1),
        avoid_k: bi(n as i64 - k as i64, k as i64 - 1),
        star,
    };
    let approx_thresholds = ApproxThresholds::for_k(k);
    if n <= 2 * k {
        return Ok(RegimeReport {
            n,
            k,
            regime: Regime::Degenerate,
            eq_3_2: false,
            eq_3_4: false,
            eq_4_2: false,
            witnesses,
            approx_thresholds,
        });
    }
    let lo2 = &witnesses.avoid_k_plus_1 * 2u32;
    let hi2 = &witnesses.avoid_k * 2u32;
    let x = &witnesses.star;
    let eq_3_2 = lo2 >= x + 2u32;
    let eq_3_4 = &hi2 < x;
    let eq_4_2 = &lo2 < x && x < &hi2;
    // the two one-sided regimes exclude each other since C(n-k-1,k-1) <= C(n-k,k-1)
    assert!(
        !(eq_3_2 && eq_3_4),
        "regime inequalities overlap at ({n},{k})"
    );
    let regime = if eq_3_2 {
        Regime::ConjectureHolds
    } else if eq_3_4 {
        Regime::ConstructionBeats
    } else {
        Regime::GreyZone
    };
    Ok(RegimeReport {
        n,
        k,
        regime,
        eq_3_2,
        eq_3_4,
        eq_4_2,
        witnesses,
        approx_thresholds,
    })
}

/// Result of scanning `2k < n <= n_max` against both clauses of the
/// threshold theorem.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Theorem14Report {
    pub k: u64,
    pub n_max: u64,
    /// Largest n classified `ConstructionBeats`.
    pub max_beats: Option<u64>,
    /// Smallest n classified `ConjectureHolds`.
    pub min_holds: Option<u64>,
    /// Every n in the grey zone.
    pub grey: Vec<u64>,
    /// n values where the regimes are not ordered beats < grey < holds.
    pub non_monotone: Vec<u64>,
    /// Grey-zone points where the strict two-sided inequality fails too.
    pub boundary_points: Vec<u64>,
    pub approx: ApproxThresholds,
    /// n >= ck² + (2-c)k but not `ConjectureHolds`.
    pub violations_holds: Vec<u64>,
    /// n <= ck² - 2ck + 1 but not `ConstructionBeats`.
    pub violations_fails: Vec<u64>,
    /// n <= c(k-1)² + 1 but not `ConstructionBeats`.
    pub violations_fails_alt: Vec<u64>,
    /// No n > 2k lies at or below ck² - 2ck + 1.
    pub failure_clause_vacuous: bool,
}

impl Theorem14Report {
    pub fn is_clean(&self) -> bool {
        self.violations_holds.is_empty() && self.violations_fails.is_empty()
    }
}

pub fn theorem14_check(k: u64, n_max: u64) -> Result<Theorem14Report> {
    if k < 3 {
        return precondition(format!("k = {k}: need k >= 3"));
    }
    if n_max <= 2 * k {
        return precondition(format!("n_max = {n_max} must exceed 2k = {}", 2 * k));
    }
    let approx = ApproxThresholds::for_k(k);
    let mut rep = Theorem14Report {
        k,
        n_max,
        max_beats: None,
        min_holds: None,
        grey: Vec::new(),
        non_monotone: Vec::new(),
        boundary_points: Vec::new(),
        approx,
        violations_holds: Vec::new(),
        violations_fails: Vec::new(),
        violations_fails_alt: Vec::new(),
        failure_clause_vacuous: approx.fails_until < (2 * k + 1) as f64,
    };
    let mut stage = 0u8;
    for n in 2 * k + 1..=n_max {
        let r = classify(n, k)?;
        let s = match r.regime {
            Regime::ConstructionBeats => {
                rep.max_beats = Some(n);
                0
            }
            Regime::GreyZone => {
                rep.grey.push(n);
                if !r.eq_4_2 {
                    rep.boundary_points.push(n);
                }
                1
            }
            Regime::ConjectureHolds => {
                rep.min_holds.get_or_insert(n);
                2
            }
            Regime::Degenerate => unreachable!(),
        };
        if s < stage {
            rep.non_monotone.push(n);
        }
        stage = stage.max(s);
        let nf = n as f64;
        if nf >= approx.holds_from && r.regime != Regime::ConjectureHolds {
            rep.violations_holds.push(n);
        }
        if nf <= approx.fails_until && r.regime != Regime::ConstructionBeats {
            rep.violations_fails.push(n);
        }
        if nf <= approx.fails_until_alt && r.regime != Regime::ConstructionBeats {
            rep.violations_fails_alt.push(n);
        }
    }
    Ok(rep)
}

/// Right side of the diversity threshold:
/// `C(n-1,k-1) - C(n-u-1,k-1) + C(n-u-1,n-k-1)`.
pub fn thm43_threshold(n: u64, k: u64, u: u64) -> Result<BigUint> {
    if k <= 3 {
        return precondition(format!("k = {k}: need k > 3"));
    }
    if n <= 2 * k {
        return precondition(format!("n = {n} must exceed 2k = {}", 2 * k));
    }
    if !(3..=k).contains(&u) {
        return precondition(format!("u = {u} outside [3, {k}]"));
    }
    Ok(threshold_unchecked(n, k, u))
}

fn threshold_unchecked(n: u64, k: u64, u: u64) -> BigUint {
    let (n, k, u) = (n as i64, k as i64, u as i64);
    bi(n - 1, k - 1) - bi(n - u - 1, k - 1) + bi(n - u - 1, n - k - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    /// Sufficient condition for the u = 3 threshold to be exceeded.
    Eq5_2,
    /// `C(n-2,k-2) + ... + C(n-10,k-2) > 6 C(n-2,k-2)`.
    Eq5_3,
    /// `2 C(n-4,k-4) > C(n-2k,k-2)`; the interesting event is its failure.
    Eq5_7,
    /// The final comparison behind the `n >= k³` value of `f*`.
    Eq5_12,
    /// `C(n-k-j,k-2) / C(n-j,k-2) > (k+1)/(k+2)` for all `2 <= j <= k`.
    Eq5_14,
}

impl Inequality {
    pub const ALL: [Inequality; 5] = [
        Inequality::Eq5_2,
        Inequality::Eq5_3,
        Inequality::Eq5_7,
        Inequality::Eq5_12,
        Inequality::Eq5_14,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Inequality::Eq5_2 => "eq_5_2",
            Inequality::Eq5_3 => "eq_5_3",
            Inequality::Eq5_7 => "eq_5_7",
            Inequality::Eq5_12 => "eq_5_12",
            Inequality::Eq5_14 => "eq_5_14",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|i| i.name() == s)
    }

    /// Whether the crossover looks for the first n where the inequality fails
    /// rather than holds.
    pub fn seeks_failure(self) -> bool {
        self == Inequality::Eq5_7
    }
}

/// Exact truth value of an inequality at `(n, k)`.
pub fn ineq_holds(which: Inequality, n: u64, k: u64) -> bool {
    let (n, k) = (n as i64, k as i64);
    match which {
        Inequality::Eq5_2 => {
            let lhs = bi(n - 1, k - 1) - bi(n - 2 * k, k - 1);
            let t = bi(n - 1, k - 1) - bi(n - 4, k - 1) + bi(n - 4, n - k - 1);
            lhs >= t * 2u32
        }
        Inequality::Eq5_3 => {
            let sum: BigUint = (2..=10).map(|i| bi(n - i, k - 2)).sum();
            sum > bi(n - 2, k - 2) * 6u32
        }
        Inequality::Eq5_7 => bi(n - 4, k - 4) * 2u32 > bi(n - 2 * k, k - 2),
        Inequality::Eq5_12 => {
            let x = bi(n - 1, k - 1);
            let lhs = (&x - bi(n - k, k - 1) + bi(n - k - 2, k - 3)) * 2u32;
            let rhs = &x - bi(n - 2 * k, k - 1);
            // lhs < rhs - 1, with rhs possibly 0
            lhs + 1u32 < rhs
        }
        Inequality::Eq5_14 => (2..=k)
            .all(|j| bi(n - k - j, k - 2) * (k as u64 + 2) > bi(n - j, k - 2) * (k as u64 + 1)),
    }
}

/// The summed form of `Eq5_12`, including the bracketed lower-order term.
pub fn eq_5_13_holds(n: u64, k: u64) -> bool {
    let (n, k) = (n as i64, k as i64);
    let lhs: BigUint = (2..=k).map(|i| bi(n - i, k - 2)).sum();
    let rhs: BigUint = (k + 1..=2 * k).map(|i| bi(n - i, k - 2)).sum();
    let extra = bi(n - k - 2, k - 3) * 2u32 + 1u32;
    lhs + extra < rhs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Crossover {
    /// `first` is the smallest n > 2k showing the sought behaviour; from
    /// `stable_from` on it persists up to the cap.
    Found {
        first: u64,
        stable_from: u64,
        cap: u64,
    },
    /// The behaviour never showed up for `2k < n <= cap`.
    CapExhausted { cap: u64 },
}

pub fn default_scan_cap(k: u64) -> u64 {
    (4 * k * k * k).max(1000)
}

pub fn ineq_crossover(k: u64, which: Inequality, cap: Option<u64>) -> Result<Crossover> {
    if k < 5 {
        return precondition(format!("k = {k}: these inequalities assume k >= 5"));
    }
    let cap = cap.unwrap_or_else(|| default_scan_cap(k));
    let wanted = |n| ineq_holds(which, n, k) != which.seeks_failure();
    let mut first = None;
    let mut stable_from = None;
    for n in 2 * k + 1..=cap {
        if wanted(n) {
            first.get_or_insert(n);
            stable_from.get_or_insert(n);
        } else {
            stable_from = None;
        }
    }
    Ok(match (first, stable_from) {
        (Some(first), Some(stable_from)) => Crossover::Found {
            first,
            stable_from,
            cap,
        },
        _ => Crossover::CapExhausted { cap },
    })
}

/// The named bounds at `(n, k)`, exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSet {
    pub n: u64,
    pub k: u64,
    /// `C(n-1,k-1)`
    #[serde(with = "decimal")]
    pub ekr: BigUint,
    /// `C(n-1,k-1) - C(n-k-1,k-1) + 1`
    #[serde(with = "decimal")]
    pub hm: BigUint,
    /// `⌊C(n-1,k-1)/2⌋`
    #[serde(with = "decimal")]
    pub conjecture_value: BigUint,
    /// `⌊(C(n-1,k-1) + n - k - 1)/2⌋`
    #[serde(with = "decimal")]
    pub prop41_upper: BigUint,
    /// `⌊(C(n-1,k-1) - C(n-2k,k-1))/2⌋ + 1`
    #[serde(with = "decimal")]
    pub fstar_value: BigUint,
    /// `⌊(C(n-1,k-1) - C(n-2k,k-1) + k + 1)/2⌋`
    #[serde(with = "decimal")]
    pub prop55_value: BigUint,
}

pub fn bounds(n: u64, k: u64) -> Result<BoundSet> {
    if k == 0 || n <= 2 * k {
        return precondition(format!("bounds need n > 2k >= 2, got n = {n}, k = {k}"));
    }
    let x = b(n - 1, k - 1);
    let d = &x - b(n - 2 * k, k - 1);
    Ok(BoundSet {
        n,
        k,
        hm: &x - b(n - k - 1, k - 1) + 1u32,
        conjecture_value: &x / 2u32,
        prop41_upper: (&x + (n - k - 1)) / 2u32,
        fstar_value: &d / 2u32 + 1u32,
        prop55_value: (&d + (k + 1)) / 2u32,
        ekr: x,
    })
}

/// Serializes big integers as decimal strings.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| D::Error::custom(format!("not a decimal integer: {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(6, 2), u(15));
        assert_eq!(binomial(17, 0), u(1));
        assert_eq!(binomial(5, 7), u(0));
        assert_eq!(binomial(5, -1), u(0));
        assert_eq!(binomial(-3, 1), u(0));
        // 124·123·122·121 / 24
        assert_eq!(binomial(124, 4), u(124 * 123 * 122 * 121 / 24));
        assert_eq!(binomial(124, 4), u(9_381_251));
    }

    #[test]
    fn binomial_matches_pascal_table() {
        for n in 0..=64u32 {
            for r in 0..=n {
                assert_eq!(binomial(n as i64, r as i64), u(crate::kset::choose(n, r)));
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(7, 3).unwrap().regime, Regime::ConstructionBeats);
        assert_eq!(classify(22, 4).unwrap().regime, Regime::ConjectureHolds);
        let grey = classify(17, 4).unwrap();
        assert_eq!(grey.regime, Regime::GreyZone);
        assert!(grey.eq_4_2);
        assert_eq!(grey.witnesses.star, u(560));
        assert_eq!(classify(6, 3).unwrap().regime, Regime::Degenerate);
        assert!(classify(5, 0).is_err());
    }

    #[test]
    fn boundary_point_12_3() {
        // 2·C(8,2) = 56 = C(11,2) + 1: no inequality holds, not even the strict grey one
        let r = classify(12, 3).unwrap();
        assert_eq!(r.regime, Regime::GreyZone);
        assert!(!r.eq_3_2 && !r.eq_3_4 && !r.eq_4_2);
    }

    #[test]
    fn threshold_scan_k4() {
        let rep = theorem14_check(4, 200).unwrap();
        assert_eq!(rep.max_beats, Some(16));
        assert_eq!(rep.min_holds, Some(22));
        assert_eq!(rep.grey, (17..=21).collect::<Vec<_>>());
        assert!(rep.is_clean());
        assert!(rep.non_monotone.is_empty());
    }

    #[test]
    fn threshold_scan_k3_failure_clause_vacuous() {
        let rep = theorem14_check(3, 100).unwrap();
        assert!(rep.failure_clause_vacuous);
        assert!(rep.approx.fails_until < 7.0);
        assert!(theorem14_check(3, 6).is_err());
        assert!(theorem14_check(2, 100).is_err());
    }

    #[test]
    fn diversity_threshold_examples() {
        for k in 4..=9u64 {
            for n in 2 * k + 1..=2 * k + 40 {
                let hm = bounds(n, k).unwrap().hm;
                assert_eq!(thm43_threshold(n, k, k).unwrap(), hm);
            }
        }
        assert_eq!(
            thm43_threshold(30, 5, 3).unwrap(),
            binomial(29, 4) - binomial(26, 4) + binomial(26, 2)
        );
        // u = k - 1: the last term is n - k
        assert_eq!(
            thm43_threshold(30, 6, 5).unwrap(),
            binomial(29, 5) - binomial(24, 5) + u(24)
        );
        assert!(thm43_threshold(30, 5, 2).is_err());
        assert!(thm43_threshold(30, 5, 6).is_err());
        assert!(thm43_threshold(30, 3, 3).is_err());
    }

    #[test]
    fn bounds_examples() {
        let b73 = bounds(7, 3).unwrap();
        assert_eq!(
            (
                b73.ekr.clone(),
                b73.hm.clone(),
                b73.conjecture_value.clone(),
                b73.prop41_upper.clone()
            ),
            (u(15), u(13), u(7), u(9))
        );
        assert_eq!(bounds(11, 4).unwrap().fstar_value, u(60));
        let b = bounds(125, 5).unwrap();
        assert_eq!(
            b.fstar_value,
            (binomial(124, 4) - binomial(115, 4)) / 2u32 + 1u32
        );
        assert!(bounds(6, 3).is_err());
    }

    #[test]
    fn inequality_spot_values() {
        // 2·C(46,1) = 92 vs C(40,3) = 9880
        assert!(!ineq_holds(Inequality::Eq5_7, 50, 5));
        assert!(ineq_holds(Inequality::Eq5_3, 50, 5));
        for n in 125..=500 {
            assert!(ineq_holds(Inequality::Eq5_12, n, 5), "n = {n}");
        }
    }

    #[test]
    fn eq_5_12_matches_summed_form() {
        for k in 5..=8 {
            for n in 2 * k + 1..=4 * k * k * k {
                assert_eq!(
                    ineq_holds(Inequality::Eq5_12, n, k),
                    eq_5_13_holds(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn crossover_rejects_small_k() {
        assert!(ineq_crossover(4, Inequality::Eq5_3, None).is_err());
    }

    #[test]
    fn crossover_cap_exhaustion() {
        let r = ineq_crossover(5, Inequality::Eq5_12, Some(40)).unwrap();
        assert_eq!(r, Crossover::CapExhausted { cap: 40 });
    }

    #[test]
    fn bounds_serialize_as_decimal_strings() {
        let v = serde_json::to_value(bounds(125, 5).unwrap()).unwrap();
        assert!(v["fstar_value"].is_string());
        let back: BoundSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, bounds(125, 5).unwrap());
    }
}
