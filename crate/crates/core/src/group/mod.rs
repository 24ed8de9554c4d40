//! Finite groups as Cayley tables, and the subset algebra on them.

mod build;
mod normal;
mod subset;
mod table;

use serde::Serialize;

pub use build::{build_group, build_group_with, parse_table_text, BuildOptions};
pub use normal::{conjugacy_class, is_kappa_normal, normal_closure, NormalityVerdict};
pub use subset::{combinations, Subset};
pub use table::{GroupTable, DEFAULT_MAX_ORDER};

use crate::error::Error;

/// The size threshold κ. Sets of fewer than κ elements, that is of at most
/// `κ - 1` elements, are the admissible translating sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Kappa(usize);

impl Kappa {
    /// Accepts `2 <= k <= order`.
    pub fn new(k: usize, order: usize) -> Result<Self, Error> {
        if k < 2 || k > order {
            return Err(Error::InvalidKappa { kappa: k, order });
        }
        Ok(Kappa(k))
    }

    pub fn value(self) -> usize {
        self.0
    }

    /// Largest admissible `|F|`.
    pub fn bound(self) -> usize {
        self.0 - 1
    }
}

impl std::fmt::Display for Kappa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which pointwise product a largeness or thickness test uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// `F·A`
    Left,
    /// `A·F`
    Right,
    /// `F·A·F`
    TwoSided,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }

    /// The side obtained by inverting every set involved.
    pub fn mirror(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::TwoSided => Side::TwoSided,
        }
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two-sided" | "both" => Ok(Side::TwoSided),
            other => Err(format!("unknown side `{other}` (left, right, two-sided)")),
        }
    }
}

/// Exact product set `FA`, `AF` or `FAF` (the last computed as `(FA)F`).
pub fn product_set(g: &GroupTable, f: &Subset, a: &Subset, shape: Side) -> Result<Subset, Error> {
    g.check_carrier(f)?;
    g.check_carrier(a)?;
    Ok(match shape {
        Side::Left => g.product(f, a),
        Side::Right => g.product(a, f),
        Side::TwoSided => g.product(&g.product(f, a), f),
    })
}
