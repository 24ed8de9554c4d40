use std::fmt;
use std::sync::Arc;

use super::direct_sum::DsWord;
use super::word::ReducedWord;

/// Elements of an infinite group we can multiply exactly.
pub trait FreeElement: Clone + fmt::Display {
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

impl FreeElement for ReducedWord {
    fn mul(&self, other: &Self) -> Self {
        self.concat(other)
    }

    fn inverse(&self) -> Self {
        ReducedWord::inverse(self)
    }
}

impl FreeElement for DsWord {
    fn mul(&self, other: &Self) -> Self {
        DsWord::mul(self, other)
    }

    fn inverse(&self) -> Self {
        DsWord::inverse(self)
    }
}

/// An intensional subset: membership is decided by a total function, so it
/// applies to words of any length.
#[derive(Clone)]
pub struct SetPredicate<W> {
    description: String,
    membership: Arc<dyn Fn(&W) -> bool + Send + Sync>,
}

pub type WordSetPredicate = SetPredicate<ReducedWord>;
pub type DsSetPredicate = SetPredicate<DsWord>;

impl<W> SetPredicate<W> {
    pub fn new<F>(description: impl Into<String>, membership: F) -> Self
    where
        F: Fn(&W) -> bool + Send + Sync + 'static,
    {
        SetPredicate { description: description.into(), membership: Arc::new(membership) }
    }

    pub fn contains(&self, w: &W) -> bool {
        (self.membership)(w)
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

impl<W: 'static> SetPredicate<W> {
    pub fn complement(&self) -> Self {
        let inner = self.membership.clone();
        SetPredicate::new(format!("not ({})", self.description), move |w| !inner(w))
    }
}

impl<W> fmt::Debug for SetPredicate<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetPredicate").field("description", &self.description).finish()
    }
}

/// Whether `g ∈ H·A`, decided by testing `h⁻¹·g ∈ A` exactly for each `h`.
pub fn left_covered<W: FreeElement>(g: &W, adversary: &[W], set: &SetPredicate<W>) -> bool {
    adversary.iter().any(|h| set.contains(&h.inverse().mul(g)))
}

/// Whether `g ∈ A·H`, via `g·h⁻¹ ∈ A`.
pub fn right_covered<W: FreeElement>(g: &W, adversary: &[W], set: &SetPredicate<W>) -> bool {
    adversary.iter().any(|h| set.contains(&g.mul(&h.inverse())))
}

/// First candidate (in iteration order) outside `H·A`, or `None` when `H·A`
/// covers every candidate. Products are exact, whatever their length.
pub fn first_uncovered<'a, W, I>(candidates: I, adversary: &[W], set: &SetPredicate<W>) -> Option<W>
where
    W: FreeElement + 'a,
    I: IntoIterator<Item = &'a W>,
{
    candidates.into_iter().find(|g| !left_covered(*g, adversary, set)).cloned()
}
