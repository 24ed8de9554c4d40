//! Thick, large and small subsets of groups.
//!
//! Finite groups are handled extensionally: [`group::GroupTable`] holds a
//! Cayley table and [`group::Subset`] a bitset over it. The classifiers in
//! [`classify`] decide largeness, thickness and smallness exactly and attach
//! re-verified witnesses. Free groups are handled intensionally through
//! [`words::SetPredicate`], so membership of exact products is decidable for
//! words of any length; [`constructions`] builds the standard partitions of
//! free groups with their witness checks, and [`resolvability`] runs exact
//! partition searches on finite groups.

pub mod budget;
pub mod claims;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod group;
pub mod resolvability;
pub mod words;

pub use budget::Budget;
pub use error::Error;
pub use group::{build_group, GroupTable, Kappa, Side, Subset};
pub use words::{Ball, ReducedWord};
