//! Thick-to-large conversion along a finite cover, and the search for a
//! large cell in a finite partition.

use serde::Serialize;

use super::large::is_large;
use super::verdict::Verdict;
use crate::constructions::Partition;
use crate::error::Error;
use crate::group::{product_set, GroupTable, Kappa, Side, Subset};

/// Disjoint cells `H_0, ..., H_{t-1}` covering the group, each with at most
/// `κ - 1` elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverDecomposition {
    cells: Vec<Subset>,
}

impl CoverDecomposition {
    pub fn new(g: &GroupTable, cells: Vec<Subset>, kappa: Kappa) -> Result<Self, Error> {
        for (i, c) in cells.iter().enumerate() {
            if c.len() > kappa.bound() {
                return Err(Error::CoverCellTooLarge { cell: i, size: c.len(), bound: kappa.bound() });
            }
        }
        let p = Partition::new(g.order(), cells, "cover")?;
        Ok(CoverDecomposition { cells: p.cells().to_vec() })
    }

    /// Consecutive index blocks `{0..b-1}, {b..2b-1}, ...`; the last block may
    /// be shorter.
    pub fn blocks(g: &GroupTable, block: usize, kappa: Kappa) -> Result<Self, Error> {
        if block == 0 {
            return Err(Error::InvalidParameters("block size must be positive".into()));
        }
        let n = g.order();
        let cells = (0..n).step_by(block).map(|s| g.subset(s..(s + block).min(n)).unwrap()).collect();
        CoverDecomposition::new(g, cells, kappa)
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }
}

/// Result of converting left thickness into right largeness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargeWitness {
    /// Least `g_α` with `H_α·g_α ⊆ A`, one per cell.
    pub translations: Vec<usize>,
    /// `{g_α⁻¹}`, deduplicated; `A·F = G`.
    pub f: Subset,
}

/// For each cover cell `H_α` picks the least `g_α` with `H_α·g_α ⊆ A`; then
/// `F = {g_α⁻¹}` satisfies `A·F = G`, since `H_α ⊆ A·g_α⁻¹` for every cell.
pub fn thick_to_large_witness(g: &GroupTable, a: &Subset, cover: &CoverDecomposition) -> Result<LargeWitness, Error> {
    g.check_carrier(a)?;
    let mut translations = Vec::with_capacity(cover.cells.len());
    let mut f = g.empty();
    for (i, h) in cover.cells.iter().enumerate() {
        let x = (0..g.order())
            .find(|&x| g.right_translate(h, x).is_subset(a))
            .ok_or_else(|| Error::UntranslatableCell { cell: i, members: h.to_string() })?;
        translations.push(x);
        f.insert(g.inv(x));
    }
    assert!(product_set(g, &f, a, Side::Right)?.is_full(), "A·F does not cover G");
    Ok(LargeWitness { translations, f })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CellSearch {
    Found { cell: usize, witness: Subset },
    NoneLarge,
    Inconclusive { cell: usize },
}

/// Smallest-index cell that is κ-large on `side`, with its minimal witness.
pub fn find_large_cell(g: &GroupTable, p: &Partition, kappa: Kappa, side: Side) -> Result<CellSearch, Error> {
    if p.order() != g.order() {
        return Err(Error::CarrierMismatch(g.order(), p.order()));
    }
    for (i, cell) in p.cells().iter().enumerate() {
        let v = is_large(g, cell, kappa, side);
        match v.verdict {
            Verdict::Holds => return Ok(CellSearch::Found { cell: i, witness: v.cover().unwrap().clone() }),
            Verdict::Inconclusive => return Ok(CellSearch::Inconclusive { cell: i }),
            Verdict::Fails => {}
        }
    }
    Ok(CellSearch::NoneLarge)
}
