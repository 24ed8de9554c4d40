use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::words::{left_covered, right_covered, words_over, FreeElement, ReducedWord, SetPredicate, DEFAULT_BALL_BOUND};
use crate::group::Side;

/// A finite adversary set `H` of free-group words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Adversary {
    /// Every reduced word of length at most `radius` over the whole alphabet.
    Ball { radius: u32 },
    /// Every reduced word of length at most `radius` over the given generators.
    Letters { generators: Vec<u32>, radius: u32 },
    /// An explicit list.
    Words(Vec<ReducedWord>),
}

impl Adversary {
    /// Materialises `H` for an alphabet of `m` generators.
    pub fn words(&self, m: u32) -> Result<Vec<ReducedWord>, Error> {
        match self {
            Adversary::Ball { radius } => words_over(&(0..m).collect::<Vec<_>>(), *radius, DEFAULT_BALL_BOUND),
            Adversary::Letters { generators, radius } => {
                if let Some(&g) = generators.iter().find(|&&g| g >= m) {
                    return Err(Error::LetterOutOfRange { letter: g, size: m });
                }
                words_over(generators, *radius, DEFAULT_BALL_BOUND)
            }
            Adversary::Words(ws) => {
                for w in ws {
                    w.check_alphabet(m)?;
                }
                Ok(ws.clone())
            }
        }
    }

    /// Longest word length in `H`.
    pub fn radius(&self) -> u32 {
        match self {
            Adversary::Ball { radius } | Adversary::Letters { radius, .. } => *radius,
            Adversary::Words(ws) => ws.iter().map(ReducedWord::len).max().unwrap_or(0) as u32,
        }
    }

    /// Generators that can occur in words of `H`.
    pub fn generators(&self, m: u32) -> BTreeSet<u32> {
        match self {
            Adversary::Ball { radius: 0 } => BTreeSet::new(),
            Adversary::Ball { .. } => (0..m).collect(),
            Adversary::Letters { generators, radius } => {
                if *radius == 0 {
                    BTreeSet::new()
                } else {
                    generators.iter().copied().collect()
                }
            }
            Adversary::Words(ws) => ws.iter().flat_map(|w| w.alph()).collect(),
        }
    }
}

impl fmt::Display for Adversary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Adversary::Ball { radius } => write!(f, "radius:{radius}"),
            Adversary::Letters { generators, radius } => {
                let names: String = generators.iter().map(|&g| crate::words::Letter::name(g)).collect();
                write!(f, "letters:{names}:{radius}")
            }
            Adversary::Words(ws) => {
                f.write_str("words:")?;
                for (i, w) in ws.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{w}")?;
                }
                Ok(())
            }
        }
    }
}

/// `radius:R`, `letters:abc:R` or `words:w1,w2,...`.
impl FromStr for Adversary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameters(format!("adversary `{s}` (radius:R | letters:abc:R | words:w1,w2)"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "radius" => Ok(Adversary::Ball { radius: rest.parse().map_err(|_| bad())? }),
            "letters" => {
                let (letters, radius) = rest.rsplit_once(':').ok_or_else(bad)?;
                let w: ReducedWord = letters.parse()?;
                let generators: BTreeSet<u32> = w.alph();
                if generators.len() != w.len() {
                    return Err(bad());
                }
                Ok(Adversary::Letters { generators: generators.into_iter().collect(), radius: radius.parse().map_err(|_| bad())? })
            }
            "words" => Ok(Adversary::Words(rest.split(',').map(str::parse).collect::<Result<_, _>>()?)),
            _ => Err(bad()),
        }
    }
}

/// `g ∈ H·A·H`: some `h1⁻¹·g·h2⁻¹` lies in `A`.
pub fn two_sided_covered<W: FreeElement>(g: &W, adversary: &[W], set: &SetPredicate<W>) -> bool {
    adversary.iter().any(|h1| {
        let left = h1.inverse().mul(g);
        adversary.iter().any(|h2| set.contains(&left.mul(&h2.inverse())))
    })
}

/// Whether `g` escapes `H·A` (left), `A·H` (right) or `H·A·H` (two-sided).
pub fn escapes<W: FreeElement>(g: &W, side: Side, adversary: &[W], set: &SetPredicate<W>) -> bool {
    match side {
        Side::Left => !left_covered(g, adversary, set),
        Side::Right => !right_covered(g, adversary, set),
        Side::TwoSided => !two_sided_covered(g, adversary, set),
    }
}

/// A designed non-largeness witness: `word` should escape the product of
/// cell `cell` with the adversary on `side`.
#[derive(Clone, Debug, Serialize)]
pub struct DesignedWitness<W> {
    pub cell: usize,
    pub side: Side,
    pub adversary: String,
    #[serde(skip)]
    pub adversary_words: Vec<W>,
    pub word: W,
}

/// A designed witness after the exact check.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessCheck {
    pub cell: usize,
    pub side: Side,
    pub adversary: String,
    pub adversary_size: usize,
    pub word: String,
    pub escapes: bool,
}

impl<W: FreeElement> DesignedWitness<W> {
    pub fn check(&self, cells: &[SetPredicate<W>]) -> WitnessCheck {
        WitnessCheck {
            cell: self.cell,
            side: self.side,
            adversary: self.adversary.clone(),
            adversary_size: self.adversary_words.len(),
            word: self.word.to_string(),
            escapes: escapes(&self.word, self.side, &self.adversary_words, &cells[self.cell]),
        }
    }
}
