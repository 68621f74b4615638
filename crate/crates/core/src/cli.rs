//! Command-line front end. `run` parses arguments, writes to the given
//! streams and returns the process exit code.
//!
//! Exit codes: 0 ok, 1 a verified check failed, 2 usage, 3 precondition or
//! bad input, 4 search stopped with an interval, 5 internal invariant.

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{
    half_star_split, prop22_pair, prop55_pair, section3_pair, verify_pair, Check,
};
use crate::error::{Error, Result};
use crate::family::FamilyPair;
use crate::io::{
    read_family, read_pair, write_outcome, write_pair, FamilyDoc, OutcomeDoc, PairDoc,
};
use crate::kset::{GroundSet, KSet};
use crate::lex::{lex_segment, shadow, LexSets};
use crate::regimes::{classify, theorem14_check};
use crate::search::{exact_maxmin, Budget, Mode, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INEXACT: i32 = 4;
pub const EXIT_INVARIANT: i32 = 5;

/// Default worker count for `search`.
pub const WORKERS_ENV: &str = "CROSSFAM_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "crossfam",
    version,
    about = "Disjoint cross-intersecting families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regime of (n, k) with the exact binomials behind it.
    Classify {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        json: bool,
    },
    /// Per-k regime boundaries against the ck² approximations.
    Table {
        k_min: u64,
        k_max: u64,
        /// Scan 2k < n <= n_max (default 4k³).
        #[arg(long)]
        n_max: Option<u64>,
        /// Allow k above 12.
        #[arg(long)]
        no_cap: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a named pair, verify it and write it as a family file.
    Construct {
        name: Construction,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run checks on a pair file.
    Verify {
        #[arg(long)]
        file: PathBuf,
        /// Comma-separated: disjoint, cross, star-free, pyber, sizes=A:B.
        #[arg(long, value_delimiter = ',', default_value = "disjoint,cross")]
        check: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Exact max-min by branch and bound.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        star_free: bool,
        #[arg(long)]
        allow_overlap: bool,
        /// Seconds.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long, env = WORKERS_ENV)]
        workers: Option<usize>,
        #[arg(long)]
        no_symmetry: bool,
        /// Start from counting bounds only.
        #[arg(long)]
        plain_bounds: bool,
        /// Write the certificate pair here.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Write the outcome document here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Lex segment L(n, t, m).
    Lex {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        json: bool,
    },
    /// l-shadow of a family file, or of L(n, k, m).
    Shadow {
        #[arg(long)]
        level: u32,
        #[arg(long, conflicts_with_all = ["n", "k", "m"])]
        file: Option<PathBuf>,
        #[arg(long, requires_all = ["k", "m"])]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        m: Option<u64>,
        /// Print the members too.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Construction {
    HalfStar,
    Section3,
    Prop22,
    Prop55,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant(_) => EXIT_INVARIANT,
        _ => EXIT_PRECONDITION,
    }
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Classify { n, k, json } => cmd_classify(n, k, json, out),
        Command::Table {
            k_min,
            k_max,
            n_max,
            no_cap,
            json,
        } => cmd_table(k_min, k_max, n_max, no_cap, json, out),
        Command::Construct {
            name,
            n,
            k,
            out: path,
        } => cmd_construct(name, n, k, path, out),
        Command::Verify { file, check, json } => cmd_verify(file, &check, json, out),
        Command::Search {
            n,
            k,
            star_free,
            allow_overlap,
            timeout,
            max_nodes,
            workers,
            no_symmetry,
            plain_bounds,
            cert,
            out: path,
            json,
        } => {
            let mut config = SearchConfig {
                budget: Budget {
                    max_nodes,
                    time_limit: timeout.map(Duration::from_secs_f64),
                },
                symmetry: !no_symmetry,
                theorem_bounds: !plain_bounds,
                ..SearchConfig::default()
            };
            if let Some(w) = workers {
                config.workers = w.max(1);
            }
            let mode = Mode::new(star_free, allow_overlap);
            cmd_search(n, k, mode, &config, cert, path, json, out)
        }
        Command::Lex { n, t, m, json } => cmd_lex(n, t, m, json, out),
        Command::Shadow {
            level,
            file,
            n,
            k,
            m,
            list,
            json,
        } => cmd_shadow(level, file, n.zip(k).zip(m), list, json, out),
    }
}

fn cmd_classify(n: u64, k: u64, json: bool, out: &mut dyn Write) -> Result<i32> {
    let r = classify(n, k)?;
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
    } else {
        writeln!(out, "n = {n}, k = {k}: {:?}", r.regime)?;
        writeln!(out, "  C(n-1,k-1)   = {}", r.witnesses.star)?;
        writeln!(out, "  C(n-k,k-1)   = {}", r.witnesses.avoid_k)?;
        writeln!(out, "  C(n-k-1,k-1) = {}", r.witnesses.avoid_k_plus_1)?;
        writeln!(
            out,
            "  half star optimal: {}, construction beats: {}, strict grey: {}",
            r.eq_3_2, r.eq_3_4, r.eq_4_2
        )?;
    }
    Ok(EXIT_OK)
}

fn cmd_table(
    k_min: u64,
    k_max: u64,
    n_max: Option<u64>,
    no_cap: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    if k_min < 3 || k_min > k_max || (!no_cap && k_max > 12) {
        return Err(Error::Precondition(format!(
            "need 3 <= k_min <= k_max <= 12 (or --no-cap), got {k_min}..{k_max}"
        )));
    }
    let mut reports = Vec::new();
    for k in k_min..=k_max {
        reports.push(theorem14_check(k, n_max.unwrap_or(4 * k * k * k))?);
    }
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "{:>3} {:>8} {:>14} {:>9} {:>10} {:>10} {:>6} {:>8}",
        "k", "beats<=", "grey", "holds>=", "ck²+(2-c)k", "ck²-2ck+1", "clean", "vacuous"
    )?;
    for r in &reports {
        let grey = match (r.grey.first(), r.grey.last()) {
            (Some(a), Some(b)) => format!("{a}..{b} ({})", r.grey.len()),
            _ => "-".into(),
        };
        let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{:>3} {:>8} {:>14} {:>9} {:>10.2} {:>10.2} {:>6} {:>8}",
            r.k,
            opt(r.max_beats),
            grey,
            opt(r.min_holds),
            r.approx.holds_from,
            r.approx.fails_until,
            r.is_clean(),
            r.failure_clause_vacuous
        )?;
    }
    Ok(EXIT_OK)
}

fn build(name: Construction, n: u32, k: u32) -> Result<(FamilyPair, Vec<Check>)> {
    let mut checks = vec![Check::Disjoint, Check::Cross, Check::Pyber];
    let pair = match name {
        Construction::HalfStar => half_star_split(n, k)?,
        Construction::Section3 => section3_pair(n, k)?,
        Construction::Prop22 => {
            checks.push(Check::StarFree);
            prop22_pair(n, k)?
        }
        Construction::Prop55 => {
            checks.push(Check::StarFree);
            prop55_pair(n, k)?
        }
    };
    Ok((pair, checks))
}

fn cmd_construct(
    name: Construction,
    n: u32,
    k: u32,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32> {
    let (pair, checks) = build(name, n, k)?;
    let report = verify_pair(&pair, &checks);
    if !report.all_passed() {
        return Err(Error::Invariant(format!(
            "{name:?} at ({n},{k}) failed its own checks: {:?}",
            report.outcomes
        )));
    }
    let (a, b) = pair.sizes();
    match path {
        Some(p) => {
            write_pair(&p, &pair)?;
            writeln!(
                out,
                "{name:?} ({n},{k}): |A| = {a}, |B| = {b}, min = {}",
                a.min(b)
            )?;
            writeln!(out, "verified and written to {}", p.display())?;
        }
        None => writeln!(
            out,
            "{}",
            serde_json::to_string(&PairDoc::from_pair(&pair))?
        )?,
    }
    Ok(EXIT_OK)
}

fn parse_check(s: &str) -> Result<Check> {
    let s = s.trim();
    Ok(match s {
        "disjoint" => Check::Disjoint,
        "cross" => Check::Cross,
        "star-free" | "star_free" => Check::StarFree,
        "pyber" => Check::Pyber,
        _ => {
            let sizes = s.strip_prefix("sizes=").and_then(|v| {
                let (a, b) = v.split_once(':')?;
                Some(Check::Sizes(a.parse().ok()?, b.parse().ok()?))
            });
            sizes.ok_or_else(|| Error::Precondition(format!("unknown check {s:?}")))?
        }
    })
}

fn cmd_verify(file: PathBuf, checks: &[String], json: bool, out: &mut dyn Write) -> Result<i32> {
    let checks = checks
        .iter()
        .map(|c| parse_check(c))
        .collect::<Result<Vec<_>>>()?;
    let pair = read_pair(&file)?;
    let report = verify_pair(&pair, &checks);
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        writeln!(
            out,
            "n = {}, k = {}, |A| = {}, |B| = {}",
            report.n, report.k, report.sizes.0, report.sizes.1
        )?;
        for o in &report.outcomes {
            let mark = if o.passed { "pass" } else { "FAIL" };
            writeln!(out, "  {mark} {}: {}", o.check, o.detail)?;
            if let Some((x, y)) = &o.witness {
                writeln!(out, "       witness {x:?} {y:?}")?;
            }
        }
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    n: u32,
    k: u32,
    mode: Mode,
    config: &SearchConfig,
    cert: Option<PathBuf>,
    path: Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let o = exact_maxmin(n, k, mode, config)?;
    if let Some(p) = &cert {
        write_pair(p, &o.certificate)?;
    }
    if let Some(p) = &path {
        write_outcome(p, &o)?;
    }
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&OutcomeDoc::from_outcome(&o))?
        )?;
    } else {
        let label = match (mode.star_free, mode.allow_overlap) {
            (false, false) => "f",
            (true, false) => "f*",
            (false, true) => "max-min (overlap allowed)",
            (true, true) => "max-min star-free (overlap allowed)",
        };
        match o.value {
            Some(v) => writeln!(out, "{label}({n},{k}) = {v}")?,
            None => writeln!(out, "{label}({n},{k}) in [{}, {}]", o.lo, o.hi)?,
        }
        let (a, b) = o.certificate.sizes();
        writeln!(out, "certificate |A| = {a}, |B| = {b}")?;
        writeln!(
            out,
            "{} nodes, {} ms, {} decisions, {} workers, symmetry fixed: {}",
            o.stats.nodes,
            o.stats.elapsed_ms,
            o.stats.decisions,
            o.stats.workers,
            o.stats.symmetry_fixed
        )?;
    }
    Ok(if o.is_exact() { EXIT_OK } else { EXIT_INEXACT })
}

fn cmd_lex(n: u32, t: u32, m: u64, json: bool, out: &mut dyn Write) -> Result<i32> {
    let seg = lex_segment(n, t, m)?;
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&FamilyDoc::from_family(&seg))?
        )?;
        return Ok(EXIT_OK);
    }
    let ground = GroundSet::new(n, t)?;
    let mut sets = LexSets::new(n, t);
    for _ in 0..m {
        if let Some(bits) = sets.next() {
            writeln!(out, "{}", KSet::from_bits(ground, bits)?)?;
        }
    }
    match sets.next() {
        Some(bits) => writeln!(out, "next {}", KSet::from_bits(ground, bits)?)?,
        None => writeln!(out, "next: none, the segment is complete")?,
    }
    Ok(EXIT_OK)
}

fn cmd_shadow(
    level: u32,
    file: Option<PathBuf>,
    segment: Option<((u32, u32), u64)>,
    list: bool,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let family = match (file, segment) {
        (Some(f), _) => read_family(f)?,
        (None, Some(((n, k), m))) => lex_segment(n, k, m)?,
        (None, None) => {
            return Err(Error::Precondition(
                "give --file or all of --n --k --m".into(),
            ));
        }
    };
    let sh = shadow(&family, level)?;
    if json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&FamilyDoc::from_family(&sh))?
        )?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "|F| = {}, |{level}-shadow| = {}",
        family.len(),
        sh.len()
    )?;
    if list {
        for s in sh.iter() {
            writeln!(out, "{s}")?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("crossfam").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn classify_examples() {
        assert!(run_str(&["classify", "--n", "7", "--k", "3"])
            .1
            .contains("ConstructionBeats"));
        assert!(run_str(&["classify", "--n", "22", "--k", "4"])
            .1
            .contains("ConjectureHolds"));
        assert!(run_str(&["classify", "--n", "6", "--k", "3"])
            .1
            .contains("Degenerate"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["classify", "--n", "x", "--k", "3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn preconditions_exit_3() {
        assert_eq!(
            run_str(&["construct", "section3", "--n", "7", "--k", "2"]).0,
            EXIT_PRECONDITION
        );
        assert_eq!(run_str(&["table", "2", "4"]).0, EXIT_PRECONDITION);
        assert_eq!(
            run_str(&["search", "--n", "12", "--k", "4"]).0,
            EXIT_PRECONDITION
        );
    }

    #[test]
    fn check_parsing() {
        assert_eq!(parse_check("sizes=10:9").unwrap(), Check::Sizes(10, 9));
        assert_eq!(parse_check("star-free").unwrap(), Check::StarFree);
        assert!(parse_check("sizes=10").is_err());
        assert!(parse_check("bogus").is_err());
    }

    #[test]
    fn lex_example() {
        let (code, out, _) = run_str(&["lex", "--n", "7", "--t", "3", "--m", "15"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 16);
        assert_eq!(lines[14], "{1,6,7}");
        assert_eq!(lines[15], "next {2,3,4}");
    }
}
