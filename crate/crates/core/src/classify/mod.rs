//! Exact size classifiers on finite groups, and witness-relative checks on
//! free groups.
//!
//! Every verdict carries evidence that is re-checked against the raw
//! definition before it is returned: a covering `F` for largeness, a
//! translating element per maximal `F` (or a failing `F`) for thickness, and
//! a large `L` with non-large `L \ A` for failed smallness.

mod cover;
mod large;
mod small;
mod thick;
mod verdict;

pub use cover::{find_large_cell, thick_to_large_witness, CellSearch, CoverDecomposition, LargeWitness};
pub use large::{is_large, is_large_with};
pub(crate) use large::large_decision;
pub use small::{is_small, is_small_with, MAX_SMALL_ORDER};
pub use thick::{is_thick, is_thick_with};
pub(crate) use thick::thick_decision;
pub use verdict::{Method, Notion, SizeVerdict, ThickVariant, Verdict, Witness};

use crate::words::{first_uncovered, Ball, ReducedWord, WordSetPredicate};

/// First ball word (in ball order) outside `H·A`. Membership of each
/// `h⁻¹·g` is decided exactly by the predicate, so adversary words may be
/// longer than the ball radius.
pub fn ball_uncovered_witness(ball: &Ball, adversary: &[ReducedWord], set: &WordSetPredicate) -> Option<ReducedWord> {
    first_uncovered(ball.iter(), adversary, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::left_covered;

    #[test]
    fn everything_covers_everything() {
        let ball = Ball::new(2, 3).unwrap();
        let all = WordSetPredicate::new("all", |_| true);
        assert_eq!(ball_uncovered_witness(&ball, &[ReducedWord::identity()], &all), None);
    }

    #[test]
    fn long_adversary_words_are_multiplied_exactly() {
        // A = words ending in b; H = {a^20}. a^20·(a^-20 b) = ... the
        // product h⁻¹g is far outside the radius-2 ball.
        let ball = Ball::new(2, 2).unwrap();
        let ends_in_b = WordSetPredicate::new("ends in b", |w: &ReducedWord| {
            w.letters().last().is_some_and(|l| l.index == 1 && !l.inverse)
        });
        let h = vec![ReducedWord::generator_power(0, 20)];
        let w = ball_uncovered_witness(&ball, &h, &ends_in_b).unwrap();
        assert!(w.is_identity());
        assert!(left_covered(&"b".parse().unwrap(), &h, &ends_in_b));
    }
}
