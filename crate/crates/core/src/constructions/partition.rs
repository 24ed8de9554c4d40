use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::group::{GroupTable, Subset};
use crate::words::{ReducedWord, SetPredicate};

/// A partition of a finite group into nonempty cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    order: usize,
    cells: Vec<Subset>,
    origin: String,
}

impl Partition {
    /// Checks that the cells are nonempty, pairwise disjoint and cover
    /// `0..order`.
    pub fn new(order: usize, cells: Vec<Subset>, origin: impl Into<String>) -> Result<Self, Error> {
        let mut seen = Subset::empty(order);
        for (i, c) in cells.iter().enumerate() {
            if c.order() != order {
                return Err(Error::CarrierMismatch(order, c.order()));
            }
            if c.is_empty() {
                return Err(Error::NotAPartition(format!("cell {i} is empty")));
            }
            if !c.is_disjoint(&seen) {
                return Err(Error::NotAPartition(format!("cell {i} overlaps an earlier cell")));
            }
            seen.union_with(c);
        }
        if !seen.is_full() {
            let x = seen.first_missing().unwrap();
            return Err(Error::NotAPartition(format!("element {x} is in no cell")));
        }
        Ok(Partition { order, cells, origin: origin.into() })
    }

    /// Parses `0,1,3/2,4,5`: cells separated by `/`, members by `,`.
    pub fn parse(g: &GroupTable, text: &str) -> Result<Self, Error> {
        let cells = text.split('/').map(|c| g.parse_subset(c)).collect::<Result<Vec<_>, _>>()?;
        Partition::new(g.order(), cells, format!("given {text}"))
    }

    /// The one-cell partition `{G}`.
    pub fn trivial(order: usize) -> Self {
        Partition { order, cells: vec![Subset::full(order)], origin: "trivial".into() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Subset] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn origin(&self) -> &str {
        &self.origin
    }

    /// Cells ordered by their least element.
    pub fn canonical(mut self) -> Self {
        self.cells.sort_by_key(|c| c.first());
        self
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A partition of an infinite group into intensional cells.
#[derive(Clone, Debug)]
pub struct PredicatePartition<W> {
    pub cells: Vec<SetPredicate<W>>,
    pub origin: String,
}

pub type WordPartition = PredicatePartition<ReducedWord>;

/// Outcome of checking a predicate partition over a ball.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BallCheck {
    pub words: usize,
    pub cell_sizes: Vec<usize>,
}

impl<W: fmt::Display> PredicatePartition<W> {
    /// Index of the unique cell holding `w`, or an error naming the word when
    /// it is in no cell or in several.
    pub fn cell_of(&self, w: &W) -> Result<usize, Error> {
        let hits: Vec<usize> = (0..self.cells.len()).filter(|&i| self.cells[i].contains(w)).collect();
        match hits.as_slice() {
            [i] => Ok(*i),
            _ => Err(Error::NotAPartition(format!("{w} lies in cells {hits:?}"))),
        }
    }

    /// Checks that every given word lies in exactly one cell.
    pub fn verify_on<'a, I>(&self, words: I) -> Result<BallCheck, Error>
    where
        W: 'a,
        I: IntoIterator<Item = &'a W>,
    {
        let mut cell_sizes = vec![0; self.cells.len()];
        let mut count = 0;
        for w in words {
            cell_sizes[self.cell_of(w)?] += 1;
            count += 1;
        }
        Ok(BallCheck { words: count, cell_sizes })
    }
}
