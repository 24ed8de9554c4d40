//! Exact partition searches on finite groups: the largest partition into
//! large cells, and partitions into a fixed number of thick or non-large
//! cells.
//!
//! Both searches assign elements in index order to cells in restricted
//! growth order (element 0 always opens cell 0), so the first partition found
//! is the canonical one.

use std::collections::HashMap;

use serde::Serialize;

use crate::budget::Budget;
use crate::classify::{is_large_with, is_thick_with, large_decision, thick_decision, ThickVariant};
use crate::constructions::Partition;
use crate::error::Error;
use crate::group::{GroupTable, Kappa, Side, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResMode {
    /// Every cell left large.
    Left,
    /// Every cell left large and right large.
    LeftRight,
}

impl ResMode {
    fn sides(self) -> &'static [Side] {
        match self {
            ResMode::Left => &[Side::Left],
            ResMode::LeftRight => &[Side::Left, Side::Right],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    AllLeftLarge,
    AllLeftAndRightLarge,
    AllThick,
    AllNonLarge,
}

/// Result of a resolvability search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub constraint: Constraint,
    pub best: Partition,
    pub cells: usize,
    /// `cells + 1` cells were refuted exhaustively.
    pub optimal: bool,
    pub nodes: u64,
}

/// Cell requirement for [`partition_search`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "target", rename_all = "kebab-case")]
pub enum Target {
    AllThick { side: Side, variant: ThickVariant },
    AllNonLarge { side: Side },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum PartitionSearch {
    Found { partition: Partition, nodes: u64 },
    NoneExists { nodes: u64 },
    Inconclusive { nodes: u64 },
}

enum Rgs {
    Found(Vec<Subset>),
    None,
    Stopped,
}

type CellTest<'a> = Box<dyn FnMut(&Subset, &mut Budget) -> Option<bool> + 'a>;

/// Memoised monotone cell test; `None` means the budget ran out.
struct Memo<'a> {
    map: HashMap<Subset, bool>,
    test: CellTest<'a>,
}

impl Memo<'_> {
    fn get(&mut self, a: &Subset, budget: &mut Budget) -> Option<bool> {
        if let Some(&v) = self.map.get(a) {
            return Some(v);
        }
        let v = (self.test)(a, budget)?;
        self.map.insert(a.clone(), v);
        Some(v)
    }
}

/// How a cell test behaves under inclusion.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Closure {
    /// Supersets of passing cells pass: prune once `cell ∪ unassigned` fails.
    Up,
    /// Subsets of passing cells pass: prune once a partial cell fails.
    Down,
}

struct RgsSearch<'a, 'b> {
    n: usize,
    cells: usize,
    /// Least size a passing cell can have.
    min_size: usize,
    closure: Closure,
    memo: &'b mut Memo<'a>,
    budget: &'b mut Budget,
}

impl RgsSearch<'_, '_> {
    fn run(&mut self) -> Rgs {
        let mut parts = Vec::with_capacity(self.cells);
        self.place(0, &mut parts)
    }

    fn place(&mut self, i: usize, parts: &mut Vec<Subset>) -> Rgs {
        if i == self.n {
            if parts.len() < self.cells {
                return Rgs::None;
            }
            for c in parts.iter() {
                match self.memo.get(c, self.budget) {
                    None => return Rgs::Stopped,
                    Some(false) => return Rgs::None,
                    Some(true) => {}
                }
            }
            return Rgs::Found(parts.clone());
        }
        let open = parts.len();
        for j in 0..(open + 1).min(self.cells) {
            if !self.budget.tick() {
                return Rgs::Stopped;
            }
            if j == open {
                parts.push(Subset::empty(self.n));
            }
            parts[j].insert(i);
            let res = match self.feasible(i + 1, parts) {
                None => Rgs::Stopped,
                Some(false) => Rgs::None,
                Some(true) => self.place(i + 1, parts),
            };
            parts[j].remove(i);
            if j == open {
                parts.pop();
            }
            if !matches!(res, Rgs::None) {
                return res;
            }
        }
        Rgs::None
    }

    /// Whether elements `next..n` can still complete `parts`.
    fn feasible(&mut self, next: usize, parts: &[Subset]) -> Option<bool> {
        let remaining = self.n - next;
        let unopened = self.cells - parts.len();
        let deficit: usize = parts.iter().map(|c| self.min_size.saturating_sub(c.len())).sum::<usize>()
            + unopened * self.min_size.max(1);
        if deficit > remaining {
            return Some(false);
        }
        match self.closure {
            Closure::Down => {
                for c in parts {
                    if !self.memo.get(c, self.budget)? {
                        return Some(false);
                    }
                }
            }
            Closure::Up => {
                if remaining == 0 {
                    return Some(true);
                }
                let mut rest = Subset::empty(self.n);
                for x in next..self.n {
                    rest.insert(x);
                }
                for c in parts {
                    if !self.memo.get(&c.union(&rest), self.budget)? {
                        return Some(false);
                    }
                }
            }
        }
        Some(true)
    }
}

fn large_memo<'a>(g: &'a GroupTable, kappa: Kappa, sides: &'a [Side]) -> Memo<'a> {
    Memo {
        map: HashMap::new(),
        test: Box::new(move |a, budget| {
            for &s in sides {
                if !large_decision(g, a, kappa, s, budget)? {
                    return Some(false);
                }
            }
            Some(true)
        }),
    }
}

/// Largest number of cells in a partition of `G` whose cells are all left
/// (or left and right) κ-large, with the canonical best partition.
///
/// Merging two large cells keeps a large cell, so cell counts are tried in
/// increasing order until one is refuted. A large cell has at least
/// `⌈|G| / (κ - 1)⌉` elements, which bounds both the count and the search.
pub fn res_search(g: &GroupTable, kappa: Kappa, mode: ResMode, budget: &mut Budget) -> SearchOutcome {
    let start = budget.used();
    let n = g.order();
    let min_size = n.div_ceil(kappa.bound());
    let mut memo = large_memo(g, kappa, mode.sides());
    let mut best = vec![g.full()];
    let mut optimal = false;
    for c in 2..=n / min_size + 1 {
        if c > n / min_size {
            optimal = true;
            break;
        }
        let mut search =
            RgsSearch { n, cells: c, min_size, closure: Closure::Up, memo: &mut memo, budget: &mut *budget };
        match search.run() {
            Rgs::Found(parts) => best = parts,
            Rgs::None => {
                optimal = true;
                break;
            }
            Rgs::Stopped => break,
        }
    }
    for cell in &best {
        for &s in mode.sides() {
            assert!(is_large_with(g, cell, kappa, s, &mut Budget::unlimited()).holds(), "cell {cell} is not large");
        }
    }
    let constraint = match mode {
        ResMode::Left => Constraint::AllLeftLarge,
        ResMode::LeftRight => Constraint::AllLeftAndRightLarge,
    };
    let cells = best.len();
    let origin = format!("res-search kappa={kappa} {constraint:?}");
    SearchOutcome {
        constraint,
        best: Partition::new(n, best, origin).expect("search emits partitions"),
        cells,
        optimal,
        nodes: budget.used() - start,
    }
}

/// A partition into exactly `cells` cells that are all thick or all not
/// large, first in canonical order, or a proof that none exists.
pub fn partition_search(
    g: &GroupTable,
    kappa: Kappa,
    cells: usize,
    target: Target,
    budget: &mut Budget,
) -> Result<PartitionSearch, Error> {
    let n = g.order();
    if cells < 2 || cells > n {
        return Err(Error::InvalidParameters(format!("cell count must lie in 2..={n}, got {cells}")));
    }
    let start = budget.used();
    let (mut memo, min_size, closure) = match target {
        Target::AllThick { side, variant } => (
            Memo { map: HashMap::new(), test: Box::new(move |a: &Subset, b: &mut Budget| thick_decision(g, a, kappa, side, variant, b)) },
            kappa.bound().min(n),
            Closure::Up,
        ),
        Target::AllNonLarge { side } => (
            Memo { map: HashMap::new(), test: Box::new(move |a: &Subset, b: &mut Budget| large_decision(g, a, kappa, side, b).map(|l| !l)) },
            1,
            Closure::Down,
        ),
    };
    let mut search = RgsSearch { n, cells, min_size, closure, memo: &mut memo, budget: &mut *budget };
    let outcome = search.run();
    let nodes = budget.used() - start;
    Ok(match outcome {
        Rgs::Found(parts) => {
            for c in &parts {
                let ok = match target {
                    Target::AllThick { side, variant } => is_thick_with(g, c, kappa, side, variant, &mut Budget::unlimited()).holds(),
                    Target::AllNonLarge { side } => !is_large_with(g, c, kappa, side, &mut Budget::unlimited()).holds(),
                };
                assert!(ok, "cell {c} misses the target");
            }
            let partition = Partition::new(n, parts, format!("partition-search kappa={kappa} {target:?}"))?;
            PartitionSearch::Found { partition, nodes }
        }
        Rgs::None => PartitionSearch::NoneExists { nodes },
        Rgs::Stopped => PartitionSearch::Inconclusive { nodes },
    })
}
