//! JSON documents: family pairs, single families and search outcomes.
//!
//! Members are 1-based sorted element lists written in colex order. Big
//! counts are decimal strings.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Family, FamilyPair};
use crate::kset::GroundSet;
use crate::search::{Mode, SearchOutcome, SearchStats};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDoc {
    pub n: u32,
    pub k: u32,
    #[serde(rename = "A")]
    pub a: Vec<Vec<u32>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub n: u32,
    pub k: u32,
    pub members: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeDoc {
    pub n: u32,
    pub k: u32,
    pub star_free: bool,
    pub allow_overlap: bool,
    pub exact: bool,
    pub value: Option<String>,
    pub lo: String,
    pub hi: String,
    pub stats: SearchStats,
    pub certificate: PairDoc,
}

fn lists(f: &Family) -> Vec<Vec<u32>> {
    f.iter().map(|s| s.elements()).collect()
}

impl PairDoc {
    pub fn from_pair(p: &FamilyPair) -> Self {
        PairDoc {
            n: p.a.n(),
            k: p.a.k(),
            a: lists(&p.a),
            b: lists(&p.b),
        }
    }

    /// Validates every member and rejects duplicates.
    pub fn to_pair(&self) -> Result<FamilyPair> {
        let ground = GroundSet::new(self.n, self.k)?;
        FamilyPair::new(
            Family::from_lists(ground, &self.a)?,
            Family::from_lists(ground, &self.b)?,
        )
    }
}

impl FamilyDoc {
    pub fn from_family(f: &Family) -> Self {
        FamilyDoc {
            n: f.n(),
            k: f.k(),
            members: lists(f),
        }
    }

    pub fn to_family(&self) -> Result<Family> {
        Family::from_lists(GroundSet::new(self.n, self.k)?, &self.members)
    }
}

impl OutcomeDoc {
    pub fn from_outcome(o: &SearchOutcome) -> Self {
        OutcomeDoc {
            n: o.n,
            k: o.k,
            star_free: o.mode.star_free,
            allow_overlap: o.mode.allow_overlap,
            exact: o.is_exact(),
            value: o.value.map(|v| v.to_string()),
            lo: o.lo.to_string(),
            hi: o.hi.to_string(),
            stats: o.stats,
            certificate: PairDoc::from_pair(&o.certificate),
        }
    }

    pub fn to_outcome(&self) -> Result<SearchOutcome> {
        let num = |s: &str| {
            s.parse::<u64>()
                .map_err(|e| Error::Document(format!("bad count {s:?}: {e}")))
        };
        let lo = num(&self.lo)?;
        let hi = num(&self.hi)?;
        let value = self.value.as_deref().map(num).transpose()?;
        if lo > hi || value.is_some() != (lo == hi) || value.is_some_and(|v| v != lo) {
            return Err(Error::Document(format!(
                "inconsistent bounds: value {value:?}, lo {lo}, hi {hi}"
            )));
        }
        Ok(SearchOutcome {
            n: self.n,
            k: self.k,
            mode: Mode::new(self.star_free, self.allow_overlap),
            value,
            lo,
            hi,
            certificate: self.certificate.to_pair()?,
            stats: self.stats,
        })
    }
}

fn write_json<T: Serialize>(path: &Path, doc: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_pair(path: impl AsRef<Path>, p: &FamilyPair) -> Result<()> {
    write_json(path.as_ref(), &PairDoc::from_pair(p))
}

pub fn read_pair(path: impl AsRef<Path>) -> Result<FamilyPair> {
    read_json::<PairDoc>(path.as_ref())?.to_pair()
}

pub fn write_family(path: impl AsRef<Path>, f: &Family) -> Result<()> {
    write_json(path.as_ref(), &FamilyDoc::from_family(f))
}

pub fn read_family(path: impl AsRef<Path>) -> Result<Family> {
    read_json::<FamilyDoc>(path.as_ref())?.to_family()
}

pub fn write_outcome(path: impl AsRef<Path>, o: &SearchOutcome) -> Result<()> {
    write_json(path.as_ref(), &OutcomeDoc::from_outcome(o))
}

pub fn read_outcome(path: impl AsRef<Path>) -> Result<SearchOutcome> {
    read_json::<OutcomeDoc>(path.as_ref())?.to_outcome()
}
