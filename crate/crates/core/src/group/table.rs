use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::subset::Subset;
use crate::error::Error;

/// Orders up to this bound get a full `O(n^3)` associativity check.
pub const DEFAULT_MAX_ORDER: usize = 64;

const SAMPLED_TRIPLES: usize = 200_000;
const SAMPLE_SEED: u64 = 0x006b_6170_7061;

/// A finite group given by its Cayley table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates `mul` (row-major, `mul[g * n + h] = g·h`) against the group
    /// axioms and derives the inverse table.
    ///
    /// Associativity is checked on every triple when `n <= full_check_limit`
    /// and on a fixed-seed sample of triples otherwise.
    pub fn from_table(order: usize, mul: Vec<u32>, labels: Vec<String>, full_check_limit: usize) -> Result<Self, Error> {
        let n = order;
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if mul.len() != n * n || labels.len() != n {
            return Err(Error::NotAGroup(format!("expected {n}x{n} table with {n} labels")));
        }
        if mul.iter().any(|&x| x as usize >= n) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        let mut seen = vec![0usize; n];
        for (pass, stamp) in (0..2 * n).zip(1..) {
            let (line, is_row) = (pass % n, pass < n);
            for k in 0..n {
                let x = if is_row { mul[line * n + k] } else { mul[k * n + line] } as usize;
                if seen[x] == stamp {
                    let what = if is_row { "row" } else { "column" };
                    return Err(Error::NotAGroup(format!("{what} {line} is not a permutation")));
                }
                seen[x] = stamp;
            }
        }
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(Error::NotAGroup("element 0 is not the identity".into()));
            }
        }
        let mut inv = vec![0u32; n];
        for x in 0..n {
            // Latin rows guarantee exactly one solution of x·y = 0.
            inv[x] = (0..n).find(|&y| mul[x * n + y] == 0).unwrap() as u32;
        }
        let g = GroupTable { order: n, mul, inv, labels };
        if n <= full_check_limit {
            for a in 0..n {
                for b in 0..n {
                    let ab = g.mul(a, b);
                    for c in 0..n {
                        if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                            return Err(Error::NotAGroup(format!("({a}·{b})·{c} != {a}·({b}·{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                    return Err(Error::NotAGroup(format!("({a}·{b})·{c} != {a}·({b}·{c})")));
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Resolves an element token: a numeric index or a label.
    pub fn element(&self, token: &str) -> Result<usize, Error> {
        let token = token.trim();
        if let Ok(i) = token.parse::<usize>() {
            if i < self.order {
                return Ok(i);
            }
            return Err(Error::ElementOutOfRange { element: i, order: self.order });
        }
        self.labels.iter().position(|l| l == token).ok_or_else(|| Error::UnknownLabel(token.to_string()))
    }

    /// Parses a comma-separated list of indices or labels.
    pub fn parse_subset(&self, list: &str) -> Result<Subset, Error> {
        let mut s = self.empty();
        let list = list.trim().trim_start_matches('{').trim_end_matches('}');
        for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            s.insert(self.element(tok)?);
        }
        Ok(s)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.order)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.order)
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, items: I) -> Result<Subset, Error> {
        Subset::from_indices(self.order, items)
    }

    pub(crate) fn check_carrier(&self, s: &Subset) -> Result<(), Error> {
        if s.order() != self.order {
            return Err(Error::CarrierMismatch(self.order, s.order()));
        }
        Ok(())
    }

    /// `g·A`
    pub fn left_translate(&self, g: usize, a: &Subset) -> Subset {
        let mut out = self.empty();
        for x in a.iter() {
            out.insert(self.mul(g, x));
        }
        out
    }

    /// `A·g`
    pub fn right_translate(&self, a: &Subset, g: usize) -> Subset {
        let mut out = self.empty();
        for x in a.iter() {
            out.insert(self.mul(x, g));
        }
        out
    }

    /// `A^{-1}`
    pub fn inverse_set(&self, a: &Subset) -> Subset {
        let mut out = self.empty();
        for x in a.iter() {
            out.insert(self.inv(x));
        }
        out
    }

    /// Pointwise product `{x·y : x ∈ X, y ∈ Y}`.
    pub fn product(&self, x: &Subset, y: &Subset) -> Subset {
        let mut out = self.empty();
        for a in x.iter() {
            out.union_with(&self.left_translate(a, y));
        }
        out
    }
}
