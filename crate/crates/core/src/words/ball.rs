use std::collections::HashMap;

use super::word::{Letter, ReducedWord};
use crate::error::Error;

/// Default cap on the number of words a ball may hold.
pub const DEFAULT_BALL_BOUND: usize = 20_000_000;

/// Number of reduced words of length at most `radius` over `m` generators.
pub fn ball_size(m: u32, radius: u32) -> u128 {
    match m {
        0 => 1,
        1 => 2 * radius as u128 + 1,
        _ => {
            let m = m as u128;
            1 + 2 * m * ((2 * m - 1).pow(radius) - 1) / (2 * m - 2)
        }
    }
}

/// All reduced words of length at most `radius` over `m` generators, indexed
/// in (length, lexicographic) order. Index 0 is the identity.
#[derive(Clone, Debug)]
pub struct Ball {
    alphabet: u32,
    radius: u32,
    words: Vec<ReducedWord>,
    index: HashMap<ReducedWord, usize>,
}

impl Ball {
    pub fn new(m: u32, radius: u32) -> Result<Self, Error> {
        Ball::with_bound(m, radius, DEFAULT_BALL_BOUND)
    }

    pub fn with_bound(m: u32, radius: u32, bound: usize) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidParameters("a ball needs at least one generator".into()));
        }
        let letters: Vec<u32> = (0..m).collect();
        let words = words_over(&letters, radius, bound)?;
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(Ball { alphabet: m, radius, words, index })
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, i: usize) -> &ReducedWord {
        &self.words[i]
    }

    pub fn index_of(&self, w: &ReducedWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn words(&self) -> &[ReducedWord] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = &ReducedWord> {
        self.words.iter()
    }
}

/// Reduced words of length at most `radius` using only the given generators
/// (with either sign), in (length, lexicographic) order.
pub fn words_over(generators: &[u32], radius: u32, bound: usize) -> Result<Vec<ReducedWord>, Error> {
    let mut gens: Vec<u32> = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let requested = ball_size(gens.len() as u32, radius);
    if requested > bound as u128 {
        return Err(Error::BallTooLarge { requested, bound });
    }
    let signed: Vec<Letter> = gens.iter().flat_map(|&g| [Letter::pos(g), Letter::neg(g)]).collect();
    let mut out = Vec::with_capacity(requested as usize);
    out.push(ReducedWord::identity());
    let mut level_start = 0;
    for _ in 0..radius {
        let level_end = out.len();
        for i in level_start..level_end {
            let last = out[i].letters().last().copied();
            for &l in &signed {
                if last == Some(l.inv()) {
                    continue;
                }
                let mut ls = out[i].letters().to_vec();
                ls.push(l);
                out.push(ReducedWord::from_letters(ls));
            }
        }
        level_start = level_end;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_balls() {
        let b = Ball::new(2, 1).unwrap();
        let shown: Vec<String> = b.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["1", "a", "a'", "b", "b'"]);
        let b = Ball::new(1, 3).unwrap();
        let shown: Vec<String> = b.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["1", "a", "a'", "aa", "a'a'", "aaa", "a'a'a'"]);
    }

    #[test]
    fn rank_two_radius_eight_count() {
        // 1 + 4·(3^8 − 1)/2
        assert_eq!(ball_size(2, 8), 13_121);
        assert_eq!(Ball::new(2, 8).unwrap().len(), 13_121);
    }

    #[test]
    fn size_formula_matches_enumeration() {
        for m in 1..=4 {
            for l in 0..=8 {
                if ball_size(m, l) > 2_000_000 {
                    continue;
                }
                let b = Ball::new(m, l).unwrap();
                assert_eq!(b.len() as u128, ball_size(m, l), "m={m} L={l}");
            }
        }
    }

    #[test]
    fn order_is_length_then_lex_and_index_round_trips() {
        let b = Ball::new(3, 4).unwrap();
        assert!(b.words().windows(2).all(|w| w[0] < w[1]));
        assert!(b.iter().all(|w| w.is_reduced()));
        for (i, w) in b.iter().enumerate() {
            assert_eq!(b.index_of(w), Some(i));
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(Ball::with_bound(4, 10, 1000), Err(Error::BallTooLarge { .. })));
    }

    #[test]
    fn words_over_subset_of_generators() {
        let ws = words_over(&[0, 2], 2, 1000).unwrap();
        assert_eq!(ws.len() as u128, ball_size(2, 2));
        assert!(ws.iter().all(|w| !w.alph().contains(&1)));
    }
}
