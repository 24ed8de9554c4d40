use super::large::is_large_with;
use super::verdict::{Method, Notion, SizeVerdict, Verdict, Witness};
use crate::budget::Budget;
use crate::group::{combinations, GroupTable, Kappa, Side, Subset};

/// Enumerating every candidate `L` is only attempted up to this order.
pub const MAX_SMALL_ORDER: usize = 24;

/// Smallness: `L \ A` stays large for every large `L` on the given side.
/// `Side::TwoSided` means small on the left and on the right.
pub fn is_small(g: &GroupTable, a: &Subset, kappa: Kappa, side: Side) -> SizeVerdict {
    is_small_with(g, a, kappa, side, &mut Budget::default())
}

pub fn is_small_with(g: &GroupTable, a: &Subset, kappa: Kappa, side: Side, budget: &mut Budget) -> SizeVerdict {
    let start = budget.used();
    let sides: &[Side] = match side {
        Side::TwoSided => &[Side::Left, Side::Right],
        Side::Left => &[Side::Left],
        Side::Right => &[Side::Right],
    };
    let mut verdict = Verdict::Holds;
    let mut witness = Witness::None;
    for &s in sides {
        match failing_large(g, a, kappa, s, budget) {
            Probe::Fails(w) => {
                verdict = Verdict::Fails;
                witness = w;
                break;
            }
            Probe::Stopped => verdict = Verdict::Inconclusive,
            Probe::Small => {}
        }
    }
    if let Witness::LargeRemainder { side: s, large, cover } = &witness {
        // Both halves of the witness are re-derived from scratch.
        let l = is_large_with(g, large, kappa, *s, &mut Budget::unlimited());
        assert!(l.holds() && l.cover() == Some(cover), "witness L is not large");
        let rest = is_large_with(g, &large.difference(a), kappa, *s, &mut Budget::unlimited());
        assert!(!rest.holds(), "witness L \\ A is large");
    }
    SizeVerdict {
        notion: Notion::Small,
        side,
        kappa,
        variant: None,
        verdict,
        witness,
        method: Method::Exhaustive,
        nodes: budget.used() - start,
    }
}

enum Probe {
    Small,
    Fails(Witness),
    /// Budget or order bound reached.
    Stopped,
}

fn failing_large(g: &GroupTable, a: &Subset, kappa: Kappa, side: Side, budget: &mut Budget) -> Probe {
    // A itself is the natural first candidate: A \ A is empty, never large.
    let own = is_large_with(g, a, kappa, side, budget);
    match own.decided() {
        Some(true) => {
            let cover = own.cover().unwrap().clone();
            return Probe::Fails(Witness::LargeRemainder { side, large: a.clone(), cover });
        }
        None => return Probe::Stopped,
        Some(false) => {}
    }
    let n = g.order();
    if n > MAX_SMALL_ORDER {
        return Probe::Stopped;
    }
    let all: Vec<usize> = (0..n).collect();
    let mut result = Probe::Small;
    for k in 1..=n {
        combinations(&all, k, |c| {
            if !budget.tick() {
                result = Probe::Stopped;
                return false;
            }
            let l = Subset::from_indices(n, c.iter().copied()).unwrap();
            if l.is_disjoint(a) {
                return true;
            }
            let lv = is_large_with(g, &l, kappa, side, budget);
            match lv.decided() {
                None => {
                    result = Probe::Stopped;
                    return false;
                }
                Some(false) => return true,
                Some(true) => {}
            }
            match is_large_with(g, &l.difference(a), kappa, side, budget).decided() {
                Some(true) => true,
                Some(false) => {
                    result = Probe::Fails(Witness::LargeRemainder { side, large: l, cover: lv.cover().unwrap().clone() });
                    false
                }
                None => {
                    result = Probe::Stopped;
                    false
                }
            }
        });
        if !matches!(result, Probe::Small) {
            break;
        }
    }
    result
}
