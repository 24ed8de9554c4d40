//! Explicit partitions: free-group cells as intensional predicates with
//! designed witnesses, and the meet of a finite-group partition with its
//! inverse.

mod adversary;
mod direct_sum;
mod free;
mod meet;
mod partition;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

pub use adversary::{escapes, two_sided_covered, Adversary, DesignedWitness, WitnessCheck};
pub use direct_sum::{comment2_bset, comment2_construction};
pub use free::{
    rank1_cell, rank1_construction, rank1_partition, rank1_witness, rank2_construction, rank2_partition, s_set,
    s_set_construction, s_set_multipliers, s_set_sandwich_gap, split3_construction, split3_partition,
    thm3_construction, thm3_partition,
};
pub use meet::meet_partition;
pub use partition::{BallCheck, Partition, PredicatePartition, WordPartition};

use crate::error::Error;
use crate::words::{Ball, DsAlphabet, DsWord, FreeElement, ReducedWord, DEFAULT_SUMMANDS};

/// Construction names accepted by [`BuiltConstruction::build`].
pub const CONSTRUCTIONS: [&str; 6] = ["s-set", "thm3", "c1-split3", "c1-rank2", "c1-rank1", "c2-ds"];

/// Cells of an infinite group with the witnesses designed against them.
#[derive(Clone, Debug)]
pub struct Construction<W> {
    pub name: &'static str,
    pub params: String,
    pub partition: PredicatePartition<W>,
    pub witnesses: Vec<DesignedWitness<W>>,
    /// Ball radius used for the partition sweep when none is given.
    pub default_radius: u32,
}

impl<W: FreeElement> Construction<W> {
    pub fn check_witnesses(&self) -> Vec<WitnessCheck> {
        self.witnesses.iter().map(|w| w.check(&self.partition.cells)).collect()
    }
}

/// A construction over a free group or over a direct sum of free groups.
#[derive(Clone, Debug)]
pub enum BuiltConstruction {
    Free { rank: u32, construction: Construction<ReducedWord> },
    DirectSum { alphabet: DsAlphabet, construction: Construction<DsWord> },
}

/// Sweep and witness results for one construction.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    pub construction: String,
    pub params: String,
    pub cells: Vec<String>,
    pub radius: u32,
    pub ball: BallCheck,
    pub witnesses: Vec<WitnessCheck>,
}

impl ConstructionReport {
    pub fn all_escape(&self) -> bool {
        self.witnesses.iter().all(|w| w.escapes)
    }
}

struct Params<'a> {
    name: &'a str,
    map: &'a BTreeMap<String, String>,
}

impl Params<'_> {
    fn allow(&self, keys: &[&str]) -> Result<(), Error> {
        match self.map.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(Error::InvalidParameters(format!("{} takes no parameter `{k}` (allowed: {keys:?})", self.name))),
            None => Ok(()),
        }
    }

    fn number(&self, key: &str, default: u32) -> Result<u32, Error> {
        match self.map.get(key) {
            Some(v) => v.parse().map_err(|_| Error::InvalidParameters(format!("{key}={v} is not a number"))),
            None => Ok(default),
        }
    }

    fn letters(&self, text: &str) -> Result<BTreeSet<u32>, Error> {
        let w: ReducedWord = text.parse()?;
        let set = w.alph();
        if set.len() != w.len() || w.letters().iter().any(|l| l.inverse) {
            return Err(Error::InvalidParameters(format!("`{text}` is not a list of distinct letters")));
        }
        Ok(set)
    }
}

fn fixed_rank(p: &Params, rank: u32) -> Result<(), Error> {
    p.allow(&["m"])?;
    match p.number("m", rank)? {
        m if m == rank => Ok(()),
        m => Err(Error::InvalidParameters(format!("{} needs m={rank}, got m={m}", p.name))),
    }
}

impl BuiltConstruction {
    /// Builds a named construction from `key=value` parameters:
    /// `s-set` (m=2, letter=a), `thm3` (m=4, a1=first half), `c1-split3`
    /// (m=3, split=thirds such as a/b/c), `c1-rank2`, `c1-rank1`, `c2-ds`
    /// (summands=2, sizes=2,..., marks=first letter of each summand).
    pub fn build(name: &str, params: &BTreeMap<String, String>, adversary: Option<&Adversary>) -> Result<Self, Error> {
        let p = Params { name, map: params };
        let free = |rank, construction| Ok(BuiltConstruction::Free { rank, construction });
        match name {
            "s-set" => {
                p.allow(&["m", "letter"])?;
                let m = p.number("m", 2)?;
                let letter = match params.get("letter") {
                    Some(l) => {
                        let set = p.letters(l)?;
                        if set.len() != 1 {
                            return Err(Error::InvalidParameters("letter must be a single generator".into()));
                        }
                        *set.iter().next().unwrap()
                    }
                    None => 0,
                };
                free(m, s_set_construction(m, letter, adversary)?)
            }
            "thm3" => {
                p.allow(&["m", "a1"])?;
                let m = p.number("m", 4)?;
                let a1 = match params.get("a1") {
                    Some(t) => p.letters(t)?,
                    None => (0..m / 2).collect(),
                };
                free(m, thm3_construction(m, &a1, adversary)?)
            }
            "c1-split3" => {
                p.allow(&["m", "split"])?;
                let m = p.number("m", 3)?;
                let parts: Vec<BTreeSet<u32>> = match params.get("split") {
                    Some(t) => t.split('/').map(|s| p.letters(s)).collect::<Result<_, _>>()?,
                    None => (0..3).map(|i| (i * m / 3..(i + 1) * m / 3).collect()).collect(),
                };
                let parts: [BTreeSet<u32>; 3] = parts
                    .try_into()
                    .map_err(|_| Error::InvalidParameters("split needs exactly three letter groups".into()))?;
                free(m, split3_construction(m, &parts, adversary)?)
            }
            "c1-rank2" => {
                fixed_rank(&p, 2)?;
                free(2, rank2_construction(adversary)?)
            }
            "c1-rank1" => {
                fixed_rank(&p, 1)?;
                free(1, rank1_construction(adversary)?)
            }
            "c2-ds" => {
                p.allow(&["summands", "sizes", "marks"])?;
                let t = p.number("summands", DEFAULT_SUMMANDS as u32)? as usize;
                let sizes: Vec<u32> = match params.get("sizes") {
                    Some(s) => s
                        .split(',')
                        .map(|x| x.trim().parse().map_err(|_| Error::InvalidParameters(format!("sizes `{s}`"))))
                        .collect::<Result<_, _>>()?,
                    None => vec![2; t],
                };
                if params.contains_key("summands") && sizes.len() != t {
                    return Err(Error::InvalidParameters(format!("{} sizes for {t} summands", sizes.len())));
                }
                let alphabet = DsAlphabet::new(&sizes)?;
                let marks: Vec<u32> = match params.get("marks") {
                    Some(s) => s
                        .split(',')
                        .map(|x| {
                            let set = p.letters(x.trim())?;
                            match set.len() {
                                1 => Ok(*set.iter().next().unwrap()),
                                _ => Err(Error::InvalidParameters(format!("mark `{x}`"))),
                            }
                        })
                        .collect::<Result<_, _>>()?,
                    None => (0..alphabet.summands()).map(|a| alphabet.generators(a).start).collect(),
                };
                let construction = comment2_construction(&alphabet, &marks, adversary)?;
                Ok(BuiltConstruction::DirectSum { alphabet, construction })
            }
            other => Err(Error::InvalidParameters(format!("unknown construction `{other}` (one of {CONSTRUCTIONS:?})"))),
        }
    }

    pub fn default_radius(&self) -> u32 {
        match self {
            BuiltConstruction::Free { construction, .. } => construction.default_radius,
            BuiltConstruction::DirectSum { construction, .. } => construction.default_radius,
        }
    }

    /// Verifies the partition over the ball of `radius` (default per
    /// construction) and checks every designed witness exactly.
    pub fn report(&self, radius: Option<u32>) -> Result<ConstructionReport, Error> {
        let radius = radius.unwrap_or(self.default_radius());
        match self {
            BuiltConstruction::Free { rank, construction } => {
                let ball = Ball::new(*rank, radius)?;
                Ok(report_of(construction, radius, construction.partition.verify_on(ball.iter())?))
            }
            BuiltConstruction::DirectSum { alphabet, construction } => {
                let ball = alphabet.ball(radius)?;
                Ok(report_of(construction, radius, construction.partition.verify_on(ball.iter())?))
            }
        }
    }
}

fn report_of<W: FreeElement>(c: &Construction<W>, radius: u32, ball: BallCheck) -> ConstructionReport {
    ConstructionReport {
        construction: c.name.to_string(),
        params: c.params.clone(),
        cells: c.partition.cells.iter().map(|p| p.description().to_string()).collect(),
        radius,
        ball,
        witnesses: c.check_witnesses(),
    }
}

/// Parses `k=v` pairs.
pub fn parse_params<'a, I: IntoIterator<Item = &'a str>>(items: I) -> Result<BTreeMap<String, String>, Error> {
    let mut map = BTreeMap::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameters(format!("parameter `{item}` is not key=value")))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Error::InvalidParameters(format!("parameter `{k}` given twice")));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(name: &str, params: &[&str]) -> Result<BuiltConstruction, Error> {
        BuiltConstruction::build(name, &parse_params(params.iter().copied())?, None)
    }

    #[test]
    fn every_default_construction_verifies() {
        for name in CONSTRUCTIONS {
            let b = build(name, &[]).unwrap();
            let radius = match name {
                "c1-rank1" => None,
                _ => Some(3),
            };
            let r = b.report(radius).unwrap();
            assert!(r.all_escape(), "{name}: {:?}", r.witnesses);
            assert_eq!(r.ball.cell_sizes.iter().sum::<usize>(), r.ball.words);
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(build("c1-rank2", &["m=3"]).is_err());
        assert!(build("s-set", &["k=1"]).is_err());
        assert!(build("c1-split3", &["split=a/b"]).is_err());
        assert!(build("thm3", &["a1=aa"]).is_err());
        assert!(build("nope", &[]).is_err());
        assert!(parse_params(["m"]).is_err());
        assert!(parse_params(["m=1", "m=2"]).is_err());
    }

    #[test]
    fn explicit_parameters() {
        let b = build("c1-split3", &["m=6", "split=ab/cd/ef"]).unwrap();
        assert_eq!(b.report(Some(2)).unwrap().ball.words, 1 + 12 + 12 * 11);
        let b = build("c2-ds", &["summands=3", "sizes=2,1,2", "marks=a,c,d"]).unwrap();
        assert!(b.report(Some(1)).unwrap().all_escape());
    }
}
