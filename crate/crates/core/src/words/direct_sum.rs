//! Finite direct sums `F_{A_0} ⊕ ... ⊕ F_{A_{t-1}}` of free groups.
//!
//! The summand alphabets are consecutive, disjoint ranges of generator
//! indices, so summand 0 over two letters and summand 1 over two letters
//! use `a, b` and `c, d` respectively.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use super::ball::{words_over, DEFAULT_BALL_BOUND};
use super::word::{Letter, ReducedWord};
use crate::error::Error;

/// Default number of summands.
pub const DEFAULT_SUMMANDS: usize = 2;

/// Summand alphabets of a direct sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsAlphabet {
    ranges: Vec<Range<u32>>,
}

impl DsAlphabet {
    /// One summand per entry of `sizes`; every size must be positive.
    pub fn new(sizes: &[u32]) -> Result<Self, Error> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidParameters("direct sum needs t >= 1 nonempty alphabets".into()));
        }
        let mut start = 0;
        let ranges = sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect();
        Ok(DsAlphabet { ranges })
    }

    pub fn summands(&self) -> usize {
        self.ranges.len()
    }

    pub fn generators(&self, alpha: usize) -> Range<u32> {
        self.ranges[alpha].clone()
    }

    pub fn identity(&self) -> DsWord {
        DsWord { components: vec![ReducedWord::identity(); self.summands()] }
    }

    /// Builds a tuple, checking each component against its own alphabet.
    pub fn word(&self, components: Vec<ReducedWord>) -> Result<DsWord, Error> {
        if components.len() != self.summands() {
            return Err(Error::InvalidParameters(format!(
                "expected {} components, got {}",
                self.summands(),
                components.len()
            )));
        }
        for (c, r) in components.iter().zip(&self.ranges) {
            if let Some(l) = c.letters().iter().find(|l| !r.contains(&l.index)) {
                return Err(Error::LetterOutOfRange { letter: l.index, size: r.end });
            }
        }
        Ok(DsWord { components })
    }

    /// Parses `(w0, w1, ...)` with each component in word-literal syntax.
    pub fn parse(&self, s: &str) -> Result<DsWord, Error> {
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(|| Error::MalformedWord(s.to_string()))?;
        let components = inner.split(',').map(|c| c.parse::<ReducedWord>()).collect::<Result<Vec<_>, _>>()?;
        self.word(components)
    }

    /// Total number of generators over all summands.
    pub fn letters(&self) -> u32 {
        self.ranges.last().map_or(0, |r| r.end)
    }

    /// Summand owning generator `g`.
    pub fn summand_of(&self, g: u32) -> Option<usize> {
        self.ranges.iter().position(|r| r.contains(&g))
    }

    /// Image of a free word under the natural map onto the direct sum: each
    /// letter goes to its own summand.
    pub fn project(&self, w: &ReducedWord) -> Result<DsWord, Error> {
        let mut components = vec![Vec::new(); self.summands()];
        for &l in w.letters() {
            let alpha = self.summand_of(l.index).ok_or(Error::LetterOutOfRange { letter: l.index, size: self.letters() })?;
            components[alpha].push(l);
        }
        Ok(DsWord { components: components.into_iter().map(ReducedWord::from_letters).collect() })
    }

    /// Every tuple whose components all have length at most `radius`,
    /// ordered by total length, then component-wise word order.
    pub fn ball(&self, radius: u32) -> Result<Vec<DsWord>, Error> {
        let per: Vec<Vec<ReducedWord>> = self
            .ranges
            .iter()
            .map(|r| words_over(&r.clone().collect::<Vec<_>>(), radius, DEFAULT_BALL_BOUND))
            .collect::<Result<_, _>>()?;
        let total: u128 = per.iter().map(|p| p.len() as u128).product();
        if total > DEFAULT_BALL_BOUND as u128 {
            return Err(Error::BallTooLarge { requested: total, bound: DEFAULT_BALL_BOUND });
        }
        let mut out = vec![DsWord { components: Vec::new() }];
        for comp in &per {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    comp.iter().map(move |w| {
                        let mut c = prefix.components.clone();
                        c.push(w.clone());
                        DsWord { components: c }
                    })
                })
                .collect();
        }
        out.sort_by(|x, y| x.total_len().cmp(&y.total_len()).then_with(|| x.components.cmp(&y.components)));
        Ok(out)
    }
}

/// An element of a direct sum: one reduced word per summand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DsWord {
    components: Vec<ReducedWord>,
}

impl DsWord {
    pub fn components(&self) -> &[ReducedWord] {
        &self.components
    }

    pub fn total_len(&self) -> usize {
        self.components.iter().map(ReducedWord::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(ReducedWord::is_identity)
    }

    /// Componentwise product. Panics if the tuples have different lengths.
    pub fn mul(&self, other: &DsWord) -> DsWord {
        assert_eq!(self.components.len(), other.components.len(), "direct sum arity mismatch");
        DsWord { components: self.components.iter().zip(&other.components).map(|(a, b)| a.concat(b)).collect() }
    }

    pub fn inverse(&self) -> DsWord {
        DsWord { components: self.components.iter().map(ReducedWord::inverse).collect() }
    }

    /// `g⁻¹·self·g`
    pub fn conjugate_by(&self, g: &DsWord) -> DsWord {
        g.inverse().mul(self).mul(g)
    }

    /// Indices of the non-identity components.
    pub fn support(&self) -> BTreeSet<usize> {
        self.components.iter().enumerate().filter(|(_, c)| !c.is_identity()).map(|(i, _)| i).collect()
    }

    /// Highest index with a non-identity component.
    pub fn top(&self) -> Option<usize> {
        self.components.iter().rposition(|c| !c.is_identity())
    }

    /// Last signed letter of the highest non-identity component.
    pub fn rho(&self) -> Result<Letter, Error> {
        match self.top() {
            Some(alpha) => Ok(self.components[alpha].first_last()?.1),
            None => Err(Error::Undefined { op: "ds_rho", word: self.to_string() }),
        }
    }
}

/// Support of a direct-sum element.
pub fn ds_support(g: &DsWord) -> BTreeSet<usize> {
    g.support()
}

/// Last letter of the top non-identity component.
pub fn ds_rho(g: &DsWord) -> Result<Letter, Error> {
    g.rho()
}

impl fmt::Display for DsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for DsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for DsWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
