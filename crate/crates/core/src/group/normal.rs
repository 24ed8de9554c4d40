use serde::Serialize;

use super::subset::{combinations, Subset};
use super::table::GroupTable;
use super::Kappa;
use crate::error::Error;

/// `x^G = {g⁻¹·x·g : g ∈ G}`
pub fn conjugacy_class(g: &GroupTable, x: usize) -> Subset {
    let mut out = g.empty();
    for h in 0..g.order() {
        out.insert(g.mul(g.mul(g.inv(h), x), h));
    }
    out
}

/// Smallest normal subgroup containing `f`: the subgroup generated by all
/// conjugates of members of `f`.
pub fn normal_closure(g: &GroupTable, f: &Subset) -> Result<Subset, Error> {
    g.check_carrier(f)?;
    let mut gens = g.empty();
    for x in f.iter() {
        gens.union_with(&conjugacy_class(g, x));
    }
    Ok(generated_subgroup(g, &gens))
}

fn generated_subgroup(g: &GroupTable, gens: &Subset) -> Subset {
    let gens = gens.to_vec();
    let mut out = g.empty();
    out.insert(g.identity());
    let mut queue = vec![g.identity()];
    // In a finite group the monoid generated by a set is already a subgroup.
    while let Some(h) = queue.pop() {
        for &s in &gens {
            let hs = g.mul(h, s);
            if !out.contains(hs) {
                out.insert(hs);
                queue.push(hs);
            }
        }
    }
    out
}

/// Outcome of a κ-normality check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityVerdict {
    pub is_normal: bool,
    /// Canonically smallest `F` with `|F| < κ` whose normal closure has at
    /// least κ elements.
    pub counterexample: Option<Subset>,
    pub closure_size: Option<usize>,
}

/// Decides whether every `F` with `|F| <= κ-1` lies in a normal subgroup of
/// fewer than κ elements.
///
/// Normal closure is monotone in `F`, so the verdict is settled on the
/// inclusion-maximal candidates; the counterexample is then searched for
/// level by level so that it is minimal in (size, lexicographic) order.
pub fn is_kappa_normal(g: &GroupTable, kappa: Kappa) -> NormalityVerdict {
    let n = g.order();
    let bound = kappa.bound();
    let top = bound.min(n);
    let all: Vec<usize> = (0..n).collect();
    let fails = |c: &[usize]| {
        let f = Subset::from_indices(n, c.iter().copied()).unwrap();
        let cl = normal_closure(g, &f).unwrap();
        (cl.len() > bound).then_some((f, cl.len()))
    };
    let mut any = false;
    combinations(&all, top, |c| {
        any = fails(c).is_some();
        !any
    });
    if !any {
        return NormalityVerdict { is_normal: true, counterexample: None, closure_size: None };
    }
    for k in 1..=top {
        let mut found = None;
        combinations(&all, k, |c| {
            found = fails(c);
            found.is_none()
        });
        if let Some((f, size)) = found {
            return NormalityVerdict { is_normal: false, counterexample: Some(f), closure_size: Some(size) };
        }
    }
    unreachable!("a failing maximal set implies a failing set at some level")
}
