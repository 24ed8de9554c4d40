//! Exact largeness: is there an admissible `F` with `FA`, `AF` or `FAF`
//! equal to the whole group?

use super::verdict::{Method, Notion, SizeVerdict, Verdict, Witness};
use crate::budget::Budget;
use crate::group::{product_set, GroupTable, Kappa, Side, Subset};

/// Largeness test with the default node budget.
pub fn is_large(g: &GroupTable, a: &Subset, kappa: Kappa, side: Side) -> SizeVerdict {
    is_large_with(g, a, kappa, side, &mut Budget::default())
}

pub fn is_large_with(g: &GroupTable, a: &Subset, kappa: Kappa, side: Side, budget: &mut Budget) -> SizeVerdict {
    let start = budget.used();
    let problem = CoverProblem::new(g, a, side);
    let kmax = kappa.bound().min(g.order());
    let done = |verdict, witness, method, budget: &Budget| SizeVerdict {
        notion: Notion::Large,
        side,
        kappa,
        variant: None,
        verdict,
        witness,
        method,
        nodes: budget.used() - start,
    };

    if a.is_empty() {
        return done(Verdict::Fails, Witness::None, Method::Exhaustive, budget);
    }
    let greedy = problem.greedy().filter(|f| f.len() <= kmax);
    let search_to = greedy.as_ref().map_or(kmax, Vec::len);
    let verdict = match problem.minimum_cover(search_to, budget) {
        Search::Found(f) => {
            let method = if greedy.is_some() { Method::GreedyThenExact } else { Method::Exhaustive };
            done(Verdict::Holds, Witness::Cover { f: to_subset(g, &f) }, method, budget)
        }
        Search::Exhausted => match greedy {
            Some(f) => done(Verdict::Holds, Witness::Cover { f: to_subset(g, &f) }, Method::Greedy, budget),
            None => done(Verdict::Inconclusive, Witness::None, Method::Exhaustive, budget),
        },
        Search::NotFound => {
            assert!(greedy.is_none(), "exact search missed the greedy cover");
            done(Verdict::Fails, Witness::None, Method::Exhaustive, budget)
        }
    };
    if let Witness::Cover { f } = &verdict.witness {
        assert!(f.len() <= kappa.bound(), "cover witness too large");
        assert!(product_set(g, f, a, side).unwrap().is_full(), "cover witness does not cover G");
    }
    verdict
}

/// Largeness without a minimal witness: a greedy cover settles the
/// positive case at once. `None` when the budget runs out.
pub(crate) fn large_decision(g: &GroupTable, a: &Subset, kappa: Kappa, side: Side, budget: &mut Budget) -> Option<bool> {
    if a.is_empty() {
        return Some(false);
    }
    let problem = CoverProblem::new(g, a, side);
    let kmax = kappa.bound().min(g.order());
    if problem.greedy().is_some_and(|f| f.len() <= kmax) {
        return Some(true);
    }
    // dfs accepts covers with fewer than kmax elements.
    match problem.dfs(0, kmax, &mut Vec::with_capacity(kmax), Subset::empty(g.order()), budget) {
        Search::Found(_) => Some(true),
        Search::NotFound => Some(false),
        Search::Exhausted => None,
    }
}

fn to_subset(g: &GroupTable, f: &[usize]) -> Subset {
    g.subset(f.iter().copied()).unwrap()
}

pub(crate) enum Search {
    Found(Vec<usize>),
    NotFound,
    Exhausted,
}

/// Set-cover instance: the pieces whose unions over admissible `F` must
/// cover the group.
struct CoverProblem {
    n: usize,
    side: Side,
    a_len: usize,
    /// `pieces[f]` is `fA` (left) or `Af` (right); for two-sided,
    /// `pieces[f1 * n + f2]` is `f1·A·f2`.
    pieces: Vec<Subset>,
    /// One-sided only: `coverers[u]` lists every `f` whose piece holds `u`.
    coverers: Vec<Subset>,
}

impl CoverProblem {
    fn new(g: &GroupTable, a: &Subset, side: Side) -> Self {
        let n = g.order();
        let pieces: Vec<Subset> = match side {
            Side::Left => (0..n).map(|f| g.left_translate(f, a)).collect(),
            Side::Right => (0..n).map(|f| g.right_translate(a, f)).collect(),
            Side::TwoSided => {
                let lefts: Vec<Subset> = (0..n).map(|f| g.left_translate(f, a)).collect();
                (0..n * n).map(|i| g.right_translate(&lefts[i / n], i % n)).collect()
            }
        };
        let mut coverers = Vec::new();
        if side != Side::TwoSided {
            coverers = vec![g.empty(); n];
            for (f, p) in pieces.iter().enumerate() {
                for u in p.iter() {
                    coverers[u].insert(f);
                }
            }
        }
        CoverProblem { n, side, a_len: a.len(), pieces, coverers }
    }

    /// Coverage gained by adding `f` to `chosen`.
    fn extend(&self, covered: &Subset, chosen: &[usize], f: usize) -> Subset {
        let mut c = covered.clone();
        match self.side {
            Side::Left | Side::Right => c.union_with(&self.pieces[f]),
            Side::TwoSided => {
                c.union_with(&self.pieces[f * self.n + f]);
                for &h in chosen {
                    c.union_with(&self.pieces[f * self.n + h]);
                    c.union_with(&self.pieces[h * self.n + f]);
                }
            }
        }
        c
    }

    fn greedy(&self) -> Option<Vec<usize>> {
        let mut chosen = Vec::new();
        let mut covered = Subset::empty(self.n);
        while !covered.is_full() {
            let (best, cov) = (0..self.n)
                .filter(|f| !chosen.contains(f))
                .map(|f| (f, self.extend(&covered, &chosen, f)))
                .max_by(|(f1, c1), (f2, c2)| c1.len().cmp(&c2.len()).then(f2.cmp(f1)))?;
            if cov.len() == covered.len() {
                return None;
            }
            chosen.push(best);
            covered = cov;
        }
        chosen.sort_unstable();
        Some(chosen)
    }

    /// Lexicographically first cover of least size `<= kmax`.
    fn minimum_cover(&self, kmax: usize, budget: &mut Budget) -> Search {
        for k in 1..=kmax {
            let mut chosen = Vec::with_capacity(k);
            match self.dfs(0, k, &mut chosen, Subset::empty(self.n), budget) {
                Search::NotFound => continue,
                other => return other,
            }
        }
        Search::NotFound
    }

    fn dfs(&self, start: usize, k: usize, chosen: &mut Vec<usize>, covered: Subset, budget: &mut Budget) -> Search {
        if covered.is_full() {
            return Search::Found(chosen.clone());
        }
        let s = chosen.len();
        if s == k {
            return Search::NotFound;
        }
        let r = k - s;
        let missing = self.n - covered.len();
        let reach = match self.side {
            Side::TwoSided => self.a_len * (k * k - s * s),
            _ => self.a_len * r,
        };
        if missing > reach {
            return Search::NotFound;
        }
        if self.side != Side::TwoSided {
            let u = covered.first_missing().unwrap();
            if self.coverers[u].next_from(start).is_none() {
                return Search::NotFound;
            }
        }
        for f in start..=self.n - r {
            if !budget.tick() {
                return Search::Exhausted;
            }
            let next = self.extend(&covered, chosen, f);
            chosen.push(f);
            let res = self.dfs(f + 1, k, chosen, next, budget);
            chosen.pop();
            if !matches!(res, Search::NotFound) {
                return res;
            }
        }
        Search::NotFound
    }
}
