//! Brute-force oracles. They read only the multiplication table and never
//! call the library's classifiers or word arithmetic.

use kappa_core::{GroupTable, ReducedWord, Side};

pub struct Finite {
    pub n: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Finite {
    pub fn new(g: &GroupTable) -> Self {
        let n = g.order();
        let mul: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| g.mul(x, y)).collect()).collect();
        let inv = (0..n).map(|x| (0..n).find(|&y| mul[x][y] == 0).unwrap()).collect();
        Finite { n, mul, inv }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    fn image(&self, a: u64, f: impl Fn(usize) -> usize) -> u64 {
        (0..self.n).filter(|&x| a >> x & 1 == 1).fold(0, |acc, x| acc | 1 << f(x))
    }

    pub fn inverse(&self, a: u64) -> u64 {
        self.image(a, |x| self.inv[x])
    }

    pub fn product(&self, x: u64, y: u64) -> u64 {
        let mut out = 0;
        for i in (0..self.n).filter(|&i| x >> i & 1 == 1) {
            for j in (0..self.n).filter(|&j| y >> j & 1 == 1) {
                out |= 1 << self.mul[i][j];
            }
        }
        out
    }

    /// `FA`, `AF` or `FAF`, straight from the table.
    pub fn cover(&self, f: u64, a: u64, side: Side) -> u64 {
        match side {
            Side::Left => self.product(f, a),
            Side::Right => self.product(a, f),
            Side::TwoSided => self.product(self.product(f, a), f),
        }
    }

    /// Least `|F|` with `F·A·…` equal to the group, over every `F`.
    pub fn min_cover(&self, a: u64, side: Side) -> Option<usize> {
        (1..=self.full()).filter(|&f| self.cover(f, a, side) == self.full()).map(|f| f.count_ones() as usize).min()
    }

    /// First covering `F` of least size, lexicographic on sorted indices.
    pub fn first_cover(&self, a: u64, side: Side) -> Option<u64> {
        let size = self.min_cover(a, side)?;
        lex_masks(self.n, size).into_iter().find(|&f| self.cover(f, a, side) == self.full())
    }

    /// Elements `x` (restricted to `A` when `in_a`) with `Fx`, `xF` or
    /// `FxF` inside `A`.
    pub fn translators(&self, f: u64, a: u64, side: Side, in_a: bool) -> u64 {
        (0..self.n)
            .filter(|&x| !in_a || a >> x & 1 == 1)
            .filter(|&x| {
                let xs = 1u64 << x;
                let t = match side {
                    Side::Left => self.product(f, xs),
                    Side::Right => self.product(xs, f),
                    Side::TwoSided => self.product(self.product(f, xs), f),
                };
                t & !a == 0
            })
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// Least size of an `F` (the empty set included) with no translator.
    pub fn min_failing(&self, a: u64, side: Side, in_a: bool) -> Option<usize> {
        (0..=self.full()).filter(|&f| self.translators(f, a, side, in_a) == 0).map(|f| f.count_ones() as usize).min()
    }

    pub fn large(&self, a: u64, k: usize, side: Side) -> bool {
        self.min_cover(a, side).is_some_and(|s| s < k)
    }

    pub fn thick(&self, a: u64, k: usize, side: Side, in_a: bool) -> bool {
        self.min_failing(a, side, in_a).is_none_or(|s| s >= k)
    }
}

/// Masks of exactly `size` elements of `0..n`, lexicographic on sorted
/// indices.
pub fn lex_masks(n: usize, size: usize) -> Vec<u64> {
    let mut v: Vec<u64> = (0..1u64 << n).filter(|m| m.count_ones() as usize == size).collect();
    let key = |m: &u64| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>();
    v.sort_by_key(key);
    v
}

/// All set partitions of `0..n`, as cell masks.
pub fn set_partitions(n: usize) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![vec![]];
    for x in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for j in 0..p.len() {
                let mut q = p.clone();
                q[j] |= 1 << x;
                next.push(q);
            }
            let mut q = p.clone();
            q.push(1 << x);
            next.push(q);
        }
        out = next;
    }
    out
}

/// Free-group words as signed generator numbers: `g + 1` or `-(g + 1)`.
pub type Word = Vec<i32>;

pub fn mul(u: &[i32], v: &[i32]) -> Word {
    let mut out = u.to_vec();
    for &x in v {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn inv(u: &[i32]) -> Word {
    u.iter().rev().map(|x| -x).collect()
}

pub fn power(g: u32, n: usize) -> Word {
    vec![g as i32 + 1; n]
}

/// Every reduced word of length at most `r` over the given generators.
pub fn ball(gens: &[u32], r: usize) -> Vec<Word> {
    let letters: Vec<i32> = gens.iter().flat_map(|&g| [g as i32 + 1, -(g as i32 + 1)]).collect();
    let mut out = vec![vec![]];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..r {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() != Some(&-l) {
                    let mut x = w.clone();
                    x.push(l);
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Renders a word in the library's literal syntax and parses it.
pub fn to_lib(w: &[i32]) -> ReducedWord {
    if w.is_empty() {
        return "1".parse().unwrap();
    }
    let text: String = w
        .iter()
        .map(|&x| {
            let c = (b'a' + (x.unsigned_abs() - 1) as u8) as char;
            if x < 0 {
                format!("{c}'")
            } else {
                c.to_string()
            }
        })
        .collect();
    text.parse().unwrap()
}

pub fn gen(x: i32) -> u32 {
    x.unsigned_abs() - 1
}
