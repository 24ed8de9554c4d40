//! The mark-letter set of a direct sum of free groups.

use super::adversary::Adversary;
use super::free::designed;
use super::partition::PredicatePartition;
use super::Construction;
use crate::error::Error;
use crate::group::Side;
use crate::words::{DsAlphabet, DsSetPredicate, DsWord, Letter, ReducedWord};

/// Non-identity elements whose top component ends in that summand's mark
/// letter or its inverse.
pub fn comment2_bset(alphabet: &DsAlphabet, marks: &[u32]) -> Result<DsSetPredicate, Error> {
    if marks.len() != alphabet.summands() {
        return Err(Error::InvalidParameters(format!("expected {} marks, got {}", alphabet.summands(), marks.len())));
    }
    for (alpha, &m) in marks.iter().enumerate() {
        if !alphabet.generators(alpha).contains(&m) {
            return Err(Error::InvalidParameters(format!("mark {} is not in summand {alpha}", Letter::name(m))));
        }
    }
    let marks = marks.to_vec();
    let names: String = marks.iter().map(|&m| Letter::name(m)).collect::<Vec<_>>().join(",");
    Ok(DsSetPredicate::new(format!("top component ends in a mark ({names})^±1"), move |g: &DsWord| match g.top() {
        Some(alpha) => g.rho().is_ok_and(|l| l.index == marks[alpha]),
        None => false,
    }))
}

/// `B` and its complement. Witnesses live in the top summand: a letter the
/// adversary never touches escapes on all three sides; otherwise a power
/// longer than any adversary word escapes on the left. Default adversary:
/// summand 0 only, radius 2.
pub fn comment2_construction(alphabet: &DsAlphabet, marks: &[u32], adversary: Option<&Adversary>) -> Result<Construction<DsWord>, Error> {
    let b = comment2_bset(alphabet, marks)?;
    let top = alphabet.summands() - 1;
    let top_range = alphabet.generators(top);
    let other = top_range.clone().find(|&g| g != marks[top]).ok_or_else(|| {
        Error::InvalidParameters("the top summand needs a letter besides its mark".into())
    })?;
    let adv = adversary.cloned().unwrap_or(Adversary::Letters { generators: alphabet.generators(0).collect(), radius: 2 });
    let mut h: Vec<DsWord> = adv
        .words(alphabet.letters())?
        .iter()
        .map(|w| alphabet.project(w))
        .collect::<Result<_, _>>()?;
    h.sort_by(|x, y| x.total_len().cmp(&y.total_len()).then_with(|| x.components().cmp(y.components())));
    h.dedup();
    let touches_top = adv.generators(alphabet.letters()).iter().any(|g| top_range.contains(g));
    let (exp, sides): (i64, &[Side]) = if touches_top {
        (adv.radius() as i64 + 1, &[Side::Left])
    } else {
        (1, &Side::ALL)
    };
    let in_top = |g: u32| {
        let mut c = vec![ReducedWord::identity(); alphabet.summands()];
        c[top] = ReducedWord::generator_power(g, exp);
        alphabet.word(c)
    };
    let mut witnesses = designed(0, sides, &adv, &h, in_top(other)?);
    witnesses.extend(designed(1, sides, &adv, &h, in_top(marks[top])?));
    let marks_text: String = marks.iter().map(|&m| Letter::name(m)).collect();
    let sizes: Vec<String> = (0..alphabet.summands()).map(|a| alphabet.generators(a).len().to_string()).collect();
    let params = format!("t={} sizes={} marks={marks_text}", alphabet.summands(), sizes.join(","));
    Ok(Construction {
        name: "c2-ds",
        partition: PredicatePartition { cells: vec![b.clone(), b.complement()], origin: format!("c2-ds {params}") },
        witnesses,
        params,
        default_radius: 3,
    })
}
