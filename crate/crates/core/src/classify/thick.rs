//! Exact thickness: for every admissible `F`, does some translate `Fx`,
//! `xF` or `FxF` land inside `A`?
//!
//! The translating elements for a fixed `F` form an intersection of
//! translates of `A`, and that intersection only shrinks as `F` grows, so
//! the verdict is decided on the inclusion-maximal `F` (size `κ - 1`, or the
//! whole group when `κ - 1 >= |G|`).

use super::large::is_large_with;
use super::verdict::{Method, Notion, SizeVerdict, ThickVariant, Verdict, Witness};
use crate::budget::Budget;
use crate::group::{GroupTable, Kappa, Side, Subset};

pub fn is_thick(g: &GroupTable, a: &Subset, kappa: Kappa, side: Side, variant: ThickVariant) -> SizeVerdict {
    is_thick_with(g, a, kappa, side, variant, &mut Budget::default())
}

pub fn is_thick_with(
    g: &GroupTable,
    a: &Subset,
    kappa: Kappa,
    side: Side,
    variant: ThickVariant,
    budget: &mut Budget,
) -> SizeVerdict {
    let start = budget.used();
    let n = g.order();
    let problem = TranslateProblem::new(g, a, side, variant);
    let top = kappa.bound().min(n);
    let verdict = |verdict, witness, budget: &Budget| SizeVerdict {
        notion: Notion::Thick,
        side,
        kappa,
        variant: Some(variant),
        verdict,
        witness,
        method: Method::Exhaustive,
        nodes: budget.used() - start,
    };

    let mut entries = Vec::new();
    let out = match problem.scan(top, budget, &mut entries) {
        Scan::Exhausted => verdict(Verdict::Inconclusive, Witness::None, budget),
        Scan::AllTranslate => verdict(Verdict::Holds, Witness::Translations { entries }, budget),
        Scan::Failing(prefix) => {
            // Canonical failing F: least size first, then lexicographic.
            let mut failing = None;
            for k in 0..=prefix.len() {
                match problem.first_failing(k, budget) {
                    Scan::Failing(f) => {
                        failing = Some(f);
                        break;
                    }
                    Scan::Exhausted => return verdict(Verdict::Inconclusive, Witness::None, budget),
                    Scan::AllTranslate => {}
                }
            }
            let f = g.subset(failing.expect("failing set at or below the prefix size")).unwrap();
            verdict(Verdict::Fails, Witness::Untranslatable { f }, budget)
        }
    };

    verify(g, a, &out);
    if variant == ThickVariant::WitnessInG {
        if let Some(thick) = out.decided() {
            let dual = is_large_with(g, &a.complement(), kappa, side, budget);
            if let Some(large) = dual.decided() {
                assert_eq!(thick, !large, "thick/large duality violated for A={a} side={side:?} kappa={kappa}");
            }
        }
    }
    SizeVerdict { nodes: budget.used() - start, ..out }
}

/// Thickness without witnesses. `None` when the budget runs out.
pub(crate) fn thick_decision(
    g: &GroupTable,
    a: &Subset,
    kappa: Kappa,
    side: Side,
    variant: ThickVariant,
    budget: &mut Budget,
) -> Option<bool> {
    let problem = TranslateProblem::new(g, a, side, variant);
    match problem.first_failing(kappa.bound().min(g.order()), budget) {
        Scan::AllTranslate => Some(true),
        Scan::Failing(_) => Some(false),
        Scan::Exhausted => None,
    }
}

/// Re-checks the evidence against the raw definition.
fn verify(g: &GroupTable, a: &Subset, v: &SizeVerdict) {
    let variant = v.variant.unwrap();
    let fits = |f: &Subset, x: usize| {
        let ok = match v.side {
            Side::Left => g.right_translate(f, x).is_subset(a),
            Side::Right => g.left_translate(x, f).is_subset(a),
            Side::TwoSided => g.product(&g.right_translate(f, x), f).is_subset(a),
        };
        ok && (variant == ThickVariant::WitnessInG || a.contains(x))
    };
    match &v.witness {
        Witness::Translations { entries } => {
            for (f, x) in entries {
                assert!(f.len() <= v.kappa.bound(), "translated set too large");
                assert!(fits(f, *x), "translation witness {x} fails for F={f}");
            }
        }
        Witness::Untranslatable { f } => {
            assert!(f.len() <= v.kappa.bound(), "failing set too large");
            assert!((0..g.order()).all(|x| !fits(f, x)), "failing set F={f} does translate");
        }
        _ => {}
    }
}

enum Scan {
    AllTranslate,
    /// An admissible set with no translating element.
    Failing(Vec<usize>),
    Exhausted,
}

struct TranslateProblem {
    n: usize,
    side: Side,
    /// Admissible translating elements before any constraint.
    base: Subset,
    /// One-sided: `slots[f]` holds the `x` with `fx ∈ A` (left) or
    /// `xf ∈ A` (right). Two-sided: `slots[f1 * n + f2]` holds the `x` with
    /// `f1·x·f2 ∈ A`.
    slots: Vec<Subset>,
}

impl TranslateProblem {
    fn new(g: &GroupTable, a: &Subset, side: Side, variant: ThickVariant) -> Self {
        let n = g.order();
        let slots = match side {
            Side::Left => (0..n).map(|f| g.left_translate(g.inv(f), a)).collect(),
            Side::Right => (0..n).map(|f| g.right_translate(a, g.inv(f))).collect(),
            Side::TwoSided => (0..n * n)
                .map(|i| g.right_translate(&g.left_translate(g.inv(i / n), a), g.inv(i % n)))
                .collect(),
        };
        let base = match variant {
            ThickVariant::WitnessInA => a.clone(),
            ThickVariant::WitnessInG => g.full(),
        };
        TranslateProblem { n, side, base, slots }
    }

    fn restrict(&self, cands: &Subset, chosen: &[usize], f: usize) -> Subset {
        let mut c = cands.clone();
        match self.side {
            Side::Left | Side::Right => c.intersect_with(&self.slots[f]),
            Side::TwoSided => {
                c.intersect_with(&self.slots[f * self.n + f]);
                for &h in chosen {
                    c.intersect_with(&self.slots[f * self.n + h]);
                    c.intersect_with(&self.slots[h * self.n + f]);
                }
            }
        }
        c
    }

    /// Walks every `k`-set in lexicographic order. Records the least
    /// translating element of each; stops at the first prefix with none.
    fn scan(&self, k: usize, budget: &mut Budget, entries: &mut Vec<(Subset, usize)>) -> Scan {
        let mut chosen = Vec::with_capacity(k);
        self.walk(0, k, &mut chosen, self.base.clone(), budget, &mut Some(entries))
    }

    fn first_failing(&self, k: usize, budget: &mut Budget) -> Scan {
        let mut chosen = Vec::with_capacity(k);
        self.walk(0, k, &mut chosen, self.base.clone(), budget, &mut None)
    }

    fn walk(
        &self,
        start: usize,
        k: usize,
        chosen: &mut Vec<usize>,
        cands: Subset,
        budget: &mut Budget,
        entries: &mut Option<&mut Vec<(Subset, usize)>>,
    ) -> Scan {
        if cands.is_empty() {
            return Scan::Failing(chosen.clone());
        }
        if chosen.len() == k {
            if let Some(e) = entries {
                e.push((Subset::from_indices(self.n, chosen.iter().copied()).unwrap(), cands.first().unwrap()));
            }
            return Scan::AllTranslate;
        }
        let r = k - chosen.len();
        for f in start..=self.n - r {
            if !budget.tick() {
                return Scan::Exhausted;
            }
            let next = self.restrict(&cands, chosen, f);
            chosen.push(f);
            let res = self.walk(f + 1, k, chosen, next, budget, entries);
            chosen.pop();
            if !matches!(res, Scan::AllTranslate) {
                return res;
            }
        }
        Scan::AllTranslate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn kappa(k: usize, g: &GroupTable) -> Kappa {
        Kappa::new(k, g.order()).unwrap()
    }

    /// Oracle straight from the definition over every admissible F.
    fn brute_thick(g: &GroupTable, a: &Subset, k: usize, side: Side, variant: ThickVariant) -> Option<Subset> {
        let n = g.order();
        let fits = |f: &Subset, x: usize| {
            if variant == ThickVariant::WitnessInA && !a.contains(x) {
                return false;
            }
            f.iter().all(|p| match side {
                Side::Left => a.contains(g.mul(p, x)),
                Side::Right => a.contains(g.mul(x, p)),
                Side::TwoSided => f.iter().all(|q| a.contains(g.mul(g.mul(p, x), q))),
            })
        };
        (0u64..(1 << n))
            .map(|m| Subset::from_mask(n, m))
            .filter(|f| f.len() < k)
            .filter(|f| !(0..n).any(|x| fits(f, x)))
            .min()
    }

    #[test]
    fn divergence_between_variants_on_cyclic_two() {
        let g = build_group("cyclic:2").unwrap();
        let a = g.subset([1]).unwrap();
        let in_g = is_thick(&g, &a, kappa(2, &g), Side::Left, ThickVariant::WitnessInG);
        assert!(in_g.holds());
        let in_a = is_thick(&g, &a, kappa(2, &g), Side::Left, ThickVariant::WitnessInA);
        assert!(!in_a.holds());
        assert_eq!(in_a.witness, Witness::Untranslatable { f: g.subset([1]).unwrap() });
    }

    #[test]
    fn cyclic_six_half_is_not_thick() {
        let g = build_group("cyclic:6").unwrap();
        let a = g.subset([0, 1, 2]).unwrap();
        let v = is_thick(&g, &a, kappa(3, &g), Side::Left, ThickVariant::WitnessInG);
        assert!(!v.holds());
        assert_eq!(v.witness, Witness::Untranslatable { f: g.subset([0, 3]).unwrap() });
    }

    #[test]
    fn whole_group_is_thick_in_both_variants() {
        let g = build_group("dihedral:3").unwrap();
        for k in 2..=6 {
            for side in Side::ALL {
                for variant in ThickVariant::ALL {
                    assert!(is_thick(&g, &g.full(), kappa(k, &g), side, variant).holds());
                }
            }
        }
    }

    #[test]
    fn translations_cover_every_maximal_set() {
        let g = build_group("cyclic:5").unwrap();
        let a = g.subset([0, 1, 2, 3]).unwrap();
        let v = is_thick(&g, &a, kappa(3, &g), Side::Left, ThickVariant::WitnessInG);
        match v.witness {
            Witness::Translations { entries } => assert_eq!(entries.len(), 10),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn agrees_with_brute_force_on_small_groups() {
        for spec in ["cyclic:5", "symmetric:3", "product:cyclic:2+cyclic:2"] {
            let g = build_group(spec).unwrap();
            let n = g.order();
            for mask in 0u64..(1 << n) {
                let a = Subset::from_mask(n, mask);
                for k in 2..=n {
                    for side in Side::ALL {
                        for variant in ThickVariant::ALL {
                            let v = is_thick(&g, &a, kappa(k, &g), side, variant);
                            let expect = brute_thick(&g, &a, k, side, variant);
                            let got = match v.witness {
                                Witness::Untranslatable { f } => Some(f),
                                _ => None,
                            };
                            assert_eq!(got, expect, "{spec} A={a} k={k} {side:?} {variant:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let g = build_group("cyclic:8").unwrap();
        let a = g.subset([0, 1, 2, 3, 4, 5]).unwrap();
        let v = is_thick_with(&g, &a, kappa(4, &g), Side::Left, ThickVariant::WitnessInA, &mut Budget::new(5));
        assert_eq!(v.verdict, Verdict::Inconclusive);
    }
}
