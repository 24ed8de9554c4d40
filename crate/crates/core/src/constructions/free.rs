//! Subsets and partitions of free groups, each with designed non-largeness
//! witnesses against finite adversaries.

use std::collections::BTreeSet;

use super::adversary::{Adversary, DesignedWitness};
use super::partition::WordPartition;
use super::Construction;
use crate::error::Error;
use crate::group::Side;
use crate::words::{Letter, ReducedWord, WordSetPredicate};

const BOTH: &[Side] = &[Side::Left, Side::Right];

pub(crate) fn names(gens: &BTreeSet<u32>) -> String {
    gens.iter().map(|&g| Letter::name(g)).collect()
}

fn check_letters(m: u32, gens: &BTreeSet<u32>) -> Result<(), Error> {
    match gens.iter().find(|&&g| g >= m) {
        Some(&g) => Err(Error::LetterOutOfRange { letter: g, size: m }),
        None => Ok(()),
    }
}

/// A word escaping every cell whose membership needs the end letters to
/// avoid `target`: a target letter the adversary never uses, or else a
/// target power longer than any adversary word.
pub(crate) fn escaping_word(target: &BTreeSet<u32>, adversary: &Adversary, m: u32) -> ReducedWord {
    let used = adversary.generators(m);
    match target.iter().find(|g| !used.contains(g)) {
        Some(&g) => ReducedWord::generator_power(g, 1),
        None => {
            let g = *target.iter().next().expect("nonempty target");
            ReducedWord::generator_power(g, adversary.radius() as i64 + 1)
        }
    }
}

pub(crate) fn designed<W: Clone>(
    cell: usize,
    sides: &[Side],
    adversary: &Adversary,
    adversary_words: &[W],
    word: W,
) -> Vec<DesignedWitness<W>> {
    sides
        .iter()
        .map(|&side| DesignedWitness {
            cell,
            side,
            adversary: adversary.to_string(),
            adversary_words: adversary_words.to_vec(),
            word: word.clone(),
        })
        .collect()
}

/// Words whose first and last letters both lie in `{a, a⁻¹}`.
pub fn s_set(m: u32, a: u32) -> Result<WordSetPredicate, Error> {
    if m < 2 || a >= m {
        return Err(Error::InvalidParameters(format!("s-set needs m >= 2 and a letter below m (m={m})")));
    }
    Ok(WordSetPredicate::new(format!("first and last letter in {{{0},{0}'}}", Letter::name(a)), move |w: &ReducedWord| {
        w.first_last().is_ok_and(|(f, l)| f.index == a && l.index == a)
    }))
}

/// `{e, a, a⁻¹}`.
pub fn s_set_multipliers(a: u32) -> [ReducedWord; 3] {
    [ReducedWord::identity(), ReducedWord::generator_power(a, 1), ReducedWord::generator_power(a, -1)]
}

/// First word `g` with no `k1·g·k2` in `s` for `k1, k2 ∈ {e, a, a⁻¹}`.
pub fn s_set_sandwich_gap<'a, I>(words: I, a: u32, s: &WordSetPredicate) -> Option<ReducedWord>
where
    I: IntoIterator<Item = &'a ReducedWord>,
{
    let k = s_set_multipliers(a);
    words
        .into_iter()
        .find(|g| !k.iter().any(|k1| k.iter().any(|k2| s.contains(&k1.concat(g).concat(k2)))))
        .cloned()
}

/// The S-set and its complement; the witness shows S is neither left nor
/// right large against the adversary (default: the radius-3 ball).
pub fn s_set_construction(m: u32, a: u32, adversary: Option<&Adversary>) -> Result<Construction<ReducedWord>, Error> {
    let s = s_set(m, a)?;
    let adv = adversary.cloned().unwrap_or(Adversary::Ball { radius: 3 });
    let others: BTreeSet<u32> = (0..m).filter(|&x| x != a).collect();
    let word = escaping_word(&others, &adv, m);
    let params = format!("m={m} letter={}", Letter::name(a));
    Ok(Construction {
        name: "s-set",
        partition: WordPartition { cells: vec![s.clone(), s.complement()], origin: format!("s-set {params}") },
        witnesses: designed(0, BOTH, &adv, &adv.words(m)?, word),
        params,
        default_radius: 8,
    })
}

/// `B1`: last letter in `A1^{±1}`; `B2`: the rest, including `e`.
pub fn thm3_partition(m: u32, a1: &BTreeSet<u32>) -> Result<WordPartition, Error> {
    check_letters(m, a1)?;
    if a1.is_empty() || a1.len() >= m as usize {
        return Err(Error::InvalidParameters("A1 must be a nonempty proper subset of the alphabet".into()));
    }
    let set = a1.clone();
    let b1 = WordSetPredicate::new(format!("last letter in {{{}}}^±1", names(a1)), move |w: &ReducedWord| {
        w.first_last().is_ok_and(|(_, l)| set.contains(&l.index))
    });
    Ok(WordPartition { cells: vec![b1.clone(), b1.complement()], origin: format!("thm3 m={m} A1={}", names(a1)) })
}

/// Last-letter cells with left witnesses. Default adversaries: every letter but
/// the last of `A2` for `B1`, every letter but the last of `A1` for `B2`,
/// radius 2.
pub fn thm3_construction(m: u32, a1: &BTreeSet<u32>, adversary: Option<&Adversary>) -> Result<Construction<ReducedWord>, Error> {
    let partition = thm3_partition(m, a1)?;
    let a2: BTreeSet<u32> = (0..m).filter(|g| !a1.contains(g)).collect();
    let mut witnesses = Vec::new();
    for (cell, target) in [(0, &a2), (1, a1)] {
        let adv = adversary.cloned().unwrap_or_else(|| {
            let dropped = *target.iter().next_back().unwrap();
            Adversary::Letters { generators: (0..m).filter(|&g| g != dropped).collect(), radius: 2 }
        });
        let word = escaping_word(target, &adv, m);
        witnesses.extend(designed(cell, &[Side::Left], &adv, &adv.words(m)?, word));
    }
    Ok(Construction { name: "thm3", params: format!("m={m} a1={}", names(a1)), partition, witnesses, default_radius: 5 })
}

fn ends_in(set: BTreeSet<u32>) -> impl Fn(&ReducedWord) -> bool + Clone + Send + Sync + 'static {
    move |w: &ReducedWord| w.first_last().is_ok_and(|(f, l)| set.contains(&f.index) && set.contains(&l.index))
}

/// Three-way split `A = A1 ∪ A2 ∪ A3`. `B1`: both end letters in
/// `(A2 ∪ A3)^{±1}`; `B2`: both in `(A1 ∪ A3)^{±1}`, minus `B1`; `B3`: the
/// rest, including `e`.
pub fn split3_partition(m: u32, parts: &[BTreeSet<u32>; 3]) -> Result<WordPartition, Error> {
    let mut all = BTreeSet::new();
    for p in parts {
        check_letters(m, p)?;
        if p.is_empty() || !p.is_disjoint(&all) {
            return Err(Error::InvalidParameters("split3 needs three nonempty disjoint letter sets".into()));
        }
        all.extend(p.iter().copied());
    }
    if all.len() != m as usize {
        return Err(Error::InvalidParameters("split3 letter sets must cover the alphabet".into()));
    }
    let u23: BTreeSet<u32> = parts[1].union(&parts[2]).copied().collect();
    let u13: BTreeSet<u32> = parts[0].union(&parts[2]).copied().collect();
    let (in1, in2) = (ends_in(u23.clone()), ends_in(u13.clone()));
    let b1 = WordSetPredicate::new(format!("ends in {{{}}}^±1", names(&u23)), in1.clone());
    let not1 = in1.clone();
    let b2 = WordSetPredicate::new(format!("ends in {{{}}}^±1, not B1", names(&u13)), {
        let in2 = in2.clone();
        move |w: &ReducedWord| in2(w) && !not1(w)
    });
    let b3 = WordSetPredicate::new("neither B1 nor B2", move |w: &ReducedWord| !in1(w) && !in2(w));
    let split = parts.iter().map(names).collect::<Vec<_>>().join("/");
    Ok(WordPartition { cells: vec![b1, b2, b3], origin: format!("c1-split3 m={m} split={split}") })
}

/// Cell `i` is escaped by a word built from `A_i`, on both sides. Default
/// adversary for cell `i`: every letter but the first of `A_i`, radius 2.
pub fn split3_construction(m: u32, parts: &[BTreeSet<u32>; 3], adversary: Option<&Adversary>) -> Result<Construction<ReducedWord>, Error> {
    let partition = split3_partition(m, parts)?;
    let mut witnesses = Vec::new();
    for (cell, target) in parts.iter().enumerate() {
        let adv = adversary.cloned().unwrap_or_else(|| {
            let dropped = *target.iter().next().unwrap();
            Adversary::Letters { generators: (0..m).filter(|&g| g != dropped).collect(), radius: 2 }
        });
        let word = escaping_word(target, &adv, m);
        witnesses.extend(designed(cell, BOTH, &adv, &adv.words(m)?, word));
    }
    let split = parts.iter().map(names).collect::<Vec<_>>().join("/");
    Ok(Construction { name: "c1-split3", params: format!("m={m} split={split}"), partition, witnesses, default_radius: 6 })
}

/// Length-2 reduced words other than `b^{±2}` (`skip = 1`) or `a^{±2}`
/// (`skip = 0`).
fn factor_allowed(x: &ReducedWord, skip: u32) -> bool {
    !x.letters().iter().all(|l| l.index == skip)
}

/// Rank 2: `B1` has `λ₂, ρ₂` outside `b^{±2}`, `B2` has them outside
/// `a^{±2}` (minus `B1`), `B3` is the rest, including every word shorter
/// than 2.
pub fn rank2_partition() -> WordPartition {
    let in_s = |skip: u32| {
        move |w: &ReducedWord| w.first_last2().is_ok_and(|(p, s)| factor_allowed(&p, skip) && factor_allowed(&s, skip))
    };
    let (in1, in2) = (in_s(1), in_s(0));
    let b1 = WordSetPredicate::new("λ₂, ρ₂ ∉ {b², b'²}", in1);
    let b2 = WordSetPredicate::new("λ₂, ρ₂ ∉ {a², a'²}, not B1", move |w: &ReducedWord| in2(w) && !in1(w));
    let b3 = WordSetPredicate::new("neither B1 nor B2", move |w: &ReducedWord| !in1(w) && !in2(w));
    WordPartition { cells: vec![b1, b2, b3], origin: "c1-rank2".into() }
}

/// Witnesses `bⁿ`, `aⁿ`, `(ab)ⁿ` with `n = R + 4` against the radius-`R`
/// ball (default `R = 2`), on both sides.
pub fn rank2_construction(adversary: Option<&Adversary>) -> Result<Construction<ReducedWord>, Error> {
    let adv = adversary.cloned().unwrap_or(Adversary::Ball { radius: 2 });
    let h = adv.words(2)?;
    let n = adv.radius() as usize + 4;
    let ab: ReducedWord = "ab".parse()?;
    let mut witnesses = Vec::new();
    for (cell, word) in [ReducedWord::generator_power(1, n as i64), ReducedWord::generator_power(0, n as i64), ab.pow(n)]
        .into_iter()
        .enumerate()
    {
        witnesses.extend(designed(cell, BOTH, &adv, &h, word));
    }
    Ok(Construction { name: "c1-rank2", params: "m=2".into(), partition: rank2_partition(), witnesses, default_radius: 8 })
}

/// Cell of `n ∈ ℤ` in the doubling-block partition: `|n| ∈ [2^k, 2^{k+1})`
/// goes to cell `k mod 2`, and `0` to cell 1.
pub fn rank1_cell(n: i64) -> usize {
    match n.unsigned_abs() {
        0 => 1,
        a => (a.ilog2() % 2) as usize,
    }
}

fn exponent(w: &ReducedWord) -> i64 {
    w.letters().iter().map(|l| if l.inverse { -1 } else { 1 }).sum()
}

/// Rank 1 (`F = ℤ`): alternate doubling blocks.
pub fn rank1_partition() -> WordPartition {
    let cell = |i: usize| move |w: &ReducedWord| rank1_cell(exponent(w)) == i;
    WordPartition {
        cells: vec![
            WordSetPredicate::new("|n| in [2^k, 2^(k+1)), k even", cell(0)),
            WordSetPredicate::new("0, or |n| in [2^k, 2^(k+1)), k odd", cell(1)),
        ],
        origin: "c1-rank1".into(),
    }
}

/// `aⁿ` with `n = 2^k + R + 1`, `k` the least of the other cell's parity with
/// `2^k > 2R + 1`: the whole window `[n - R, n + R]` lies in that block.
pub fn rank1_witness(cell: usize, radius: u32) -> ReducedWord {
    let r = radius as i64;
    let k = (0u32..).find(|&k| (k % 2) as usize != cell && (1i64 << k) > 2 * r + 1).unwrap();
    ReducedWord::generator_power(0, (1i64 << k) + r + 1)
}

pub fn rank1_construction(adversary: Option<&Adversary>) -> Result<Construction<ReducedWord>, Error> {
    let adv = adversary.cloned().unwrap_or(Adversary::Ball { radius: 8 });
    let h = adv.words(1)?;
    let mut witnesses = Vec::new();
    for cell in 0..2 {
        witnesses.extend(designed(cell, BOTH, &adv, &h, rank1_witness(cell, adv.radius())));
    }
    Ok(Construction { name: "c1-rank1", params: "m=1".into(), partition: rank1_partition(), witnesses, default_radius: 64 })
}
