use super::partition::Partition;
use crate::error::Error;
use crate::group::GroupTable;

/// `P ∧ P⁻¹`: every nonempty `A ∩ B⁻¹` with `A, B ∈ P`, cells ordered by
/// least element.
pub fn meet_partition(g: &GroupTable, p: &Partition) -> Result<Partition, Error> {
    if p.order() != g.order() {
        return Err(Error::CarrierMismatch(g.order(), p.order()));
    }
    let inverses: Vec<_> = p.cells().iter().map(|b| g.inverse_set(b)).collect();
    let cells = p
        .cells()
        .iter()
        .flat_map(|a| inverses.iter().map(move |bi| a.intersection(bi)))
        .filter(|c| !c.is_empty())
        .collect();
    Ok(Partition::new(g.order(), cells, format!("meet of {p}"))?.canonical())
}
