//! Bit-indexed subsets of a finite carrier `0..n`.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::Error;

type Words = SmallVec<[u64; 2]>;

/// An extensional subset of a finite group, stored as a bitset over element
/// indices.
///
/// The total order on subsets is the canonical tie-break used everywhere in
/// the crate: first by cardinality, then lexicographically on the sorted
/// element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    order: usize,
    bits: Words,
}

fn word_count(order: usize) -> usize {
    order.div_ceil(64)
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        Subset { order, bits: SmallVec::from_elem(0, word_count(order)) }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Subset::empty(order);
        for (i, w) in s.bits.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(order);
            *w = if hi - lo == 64 { u64::MAX } else { (1u64 << (hi - lo)) - 1 };
        }
        s
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Subset::empty(order);
        s.insert(x);
        s
    }

    /// Builds a subset from element indices, rejecting out-of-range members.
    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, items: I) -> Result<Self, Error> {
        let mut s = Subset::empty(order);
        for x in items {
            if x >= order {
                return Err(Error::ElementOutOfRange { element: x, order });
            }
            s.insert(x);
        }
        Ok(s)
    }

    /// Subset of a carrier of at most 64 elements, from a raw mask.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        assert!(order <= 64, "from_mask needs order <= 64");
        let mut s = Subset::empty(order);
        if order > 0 {
            s.bits[0] = mask & Subset::full(order).bits[0];
        }
        s
    }

    /// Raw mask for carriers of at most 64 elements.
    pub fn mask(&self) -> u64 {
        assert!(self.order <= 64, "mask needs order <= 64");
        self.bits.first().copied().unwrap_or(0)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order && self.bits[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.order, "element {x} outside carrier of order {}", self.order);
        self.bits[x / 64] |= 1 << (x % 64);
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.order {
            self.bits[x / 64] &= !(1 << (x % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Smallest member that is `>= from`.
    pub fn next_from(&self, from: usize) -> Option<usize> {
        if from >= self.order {
            return None;
        }
        let mut i = from / 64;
        let mut w = self.bits[i] & (u64::MAX << (from % 64));
        loop {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
            i += 1;
            if i >= self.bits.len() {
                return None;
            }
            w = self.bits[i];
        }
    }

    /// Smallest element of the carrier that is not a member.
    pub fn first_missing(&self) -> Option<usize> {
        for (i, &w) in self.bits.iter().enumerate() {
            if w != u64::MAX {
                let x = i * 64 + (!w).trailing_zeros() as usize;
                return (x < self.order).then_some(x);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same(&self, other: &Subset) {
        assert_eq!(self.order, other.order, "subsets over different carriers");
    }

    pub fn union_with(&mut self, other: &Subset) {
        self.check_same(other);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        self.check_same(other);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Subset) {
        self.check_same(other);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Subset {
        Subset::full(self.order).difference(self)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.check_same(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.check_same(other);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    /// Number of members strictly greater than or equal to `from`.
    pub fn count_from(&self, from: usize) -> usize {
        self.iter().filter(|&x| x >= from).count()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.order)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Visits every `k`-element subset of `0..n` whose members are drawn from
/// `pool`, in lexicographic order of sorted indices.
///
/// The visitor returns `false` to stop early; `combinations` then returns
/// `false` as well.
pub fn combinations<V>(pool: &[usize], k: usize, mut visit: V) -> bool
where
    V: FnMut(&[usize]) -> bool,
{
    fn rec<V: FnMut(&[usize]) -> bool>(pool: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, visit: &mut V) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        let need = k - cur.len();
        for i in start..pool.len() {
            if pool.len() - i < need {
                break;
            }
            cur.push(pool[i]);
            let keep = rec(pool, i + 1, k, cur, visit);
            cur.pop();
            if !keep {
                return false;
            }
        }
        true
    }
    let mut cur = Vec::with_capacity(k);
    rec(pool, 0, k, &mut cur, &mut visit)
}
