use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::Error;

/// A signed generator. Letters order as `a < a' < b < b' < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u32,
    pub inverse: bool,
}

impl Letter {
    pub const fn pos(index: u32) -> Self {
        Letter { index, inverse: false }
    }

    pub const fn neg(index: u32) -> Self {
        Letter { index, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.inverse != other.inverse
    }

    /// Name of the generator without the inverse mark.
    pub fn name(index: u32) -> String {
        if index < 26 {
            char::from(b'a' + index as u8).to_string()
        } else {
            format!("x{}", index + 1)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Letter::name(self.index))?;
        if self.inverse {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A freely reduced word; the empty word is the identity.
///
/// Words compare by length first, then lexicographically by letters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedWord {
    letters: SmallVec<[Letter; 12]>,
}

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord::default()
    }

    pub fn letter(l: Letter) -> Self {
        let mut w = ReducedWord::default();
        w.letters.push(l);
        w
    }

    /// Generator `index` raised to `exp` (negative for inverse powers).
    pub fn generator_power(index: u32, exp: i64) -> Self {
        let l = if exp < 0 { Letter::neg(index) } else { Letter::pos(index) };
        ReducedWord { letters: std::iter::repeat_n(l, exp.unsigned_abs() as usize).collect() }
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = ReducedWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.cancels(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same as [`ReducedWord::is_identity`].
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced form of `self·other`. Never truncates.
    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        let mut k = 0;
        let (u, v) = (&self.letters, &other.letters);
        while k < u.len() && k < v.len() && u[u.len() - 1 - k].cancels(v[k]) {
            k += 1;
        }
        let mut letters = SmallVec::with_capacity(u.len() + v.len() - 2 * k);
        letters.extend_from_slice(&u[..u.len() - k]);
        letters.extend_from_slice(&v[k..]);
        ReducedWord { letters }
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn pow(&self, k: usize) -> ReducedWord {
        (0..k).fold(ReducedWord::identity(), |acc, _| acc.concat(self))
    }

    /// First and last signed letters.
    pub fn first_last(&self) -> Result<(Letter, Letter), Error> {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => Ok((f, l)),
            _ => Err(Error::Undefined { op: "first_last", word: self.to_string() }),
        }
    }

    /// Length-2 prefix and suffix.
    pub fn first_last2(&self) -> Result<(ReducedWord, ReducedWord), Error> {
        let n = self.len();
        if n < 2 {
            return Err(Error::Undefined { op: "first_last2", word: self.to_string() });
        }
        Ok((
            ReducedWord { letters: self.letters[..2].iter().copied().collect() },
            ReducedWord { letters: self.letters[n - 2..].iter().copied().collect() },
        ))
    }

    /// Generators occurring with either sign.
    pub fn alph(&self) -> BTreeSet<u32> {
        self.letters.iter().map(|l| l.index).collect()
    }

    /// Rejects letters outside an alphabet of `size` generators.
    pub fn check_alphabet(&self, size: u32) -> Result<(), Error> {
        match self.letters.iter().find(|l| l.index >= size) {
            Some(l) => Err(Error::LetterOutOfRange { letter: l.index, size }),
            None => Ok(()),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Word literals: letters `a`..`z` or `x1`, `x2`, ... (where `xk` is the
/// `k`-th generator, so `x1` = `a`), an apostrophe marks an inverse, and
/// juxtaposition concatenates. `1` or the empty string is the identity.
impl FromStr for ReducedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedWord(s.to_string());
        let t = s.trim();
        if t.is_empty() || t == "1" {
            return Ok(ReducedWord::identity());
        }
        let chars: Vec<char> = t.chars().collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if !c.is_ascii_lowercase() {
                return Err(bad());
            }
            i += 1;
            let index = if c == 'x' && i < chars.len() && chars[i].is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let k: u32 = chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                k - 1
            } else {
                (c as u8 - b'a') as u32
            };
            let mut inverse = false;
            while i < chars.len() && chars[i] == '\'' {
                inverse = !inverse;
                i += 1;
            }
            letters.push(Letter { index, inverse });
        }
        Ok(ReducedWord::from_letters(letters))
    }
}
