//! Free-group words, balls, intensional word sets and direct sums of free
//! groups.

mod ball;
mod direct_sum;
mod predicate;
mod word;

pub use ball::{ball_size, words_over, Ball, DEFAULT_BALL_BOUND};
pub use direct_sum::{ds_rho, ds_support, DsAlphabet, DsWord, DEFAULT_SUMMANDS};
pub use predicate::{
    first_uncovered, left_covered, right_covered, DsSetPredicate, FreeElement, SetPredicate, WordSetPredicate,
};
pub use word::{Letter, ReducedWord};

use crate::error::Error;

/// `u·v`, freely reduced.
pub fn concat(u: &ReducedWord, v: &ReducedWord) -> ReducedWord {
    u.concat(v)
}

/// First and last signed letters of a nonidentity word.
pub fn first_last(w: &ReducedWord) -> Result<(Letter, Letter), Error> {
    w.first_last()
}

/// Length-2 prefix and suffix of a word of length at least 2.
pub fn first_last2(w: &ReducedWord) -> Result<(ReducedWord, ReducedWord), Error> {
    w.first_last2()
}

/// Generators occurring in `w`.
pub fn alph(w: &ReducedWord) -> std::collections::BTreeSet<u32> {
    w.alph()
}

/// Enumerates the ball of radius `radius` in the free group on `m` generators.
pub fn enumerate_ball(m: u32, radius: u32) -> Result<Ball, Error> {
    Ball::new(m, radius)
}
