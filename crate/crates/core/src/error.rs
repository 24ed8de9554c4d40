use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group spec `{0}`")]
    MalformedSpec(String),
    #[error("group order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("group table rejected: {0}")]
    NotAGroup(String),
    #[error("cannot read group table file: {0}")]
    Io(String),
    #[error("element {element} is outside the carrier of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("subsets live on carriers of different orders ({0} vs {1})")]
    CarrierMismatch(usize, usize),
    #[error("kappa must satisfy 2 <= kappa <= {order}, got {kappa}")]
    InvalidKappa { kappa: usize, order: usize },
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("cover cell {cell} has {size} elements, above the bound {bound}")]
    CoverCellTooLarge { cell: usize, size: usize, bound: usize },
    #[error("no right translate of cover cell {cell} {members} lies inside the subset")]
    UntranslatableCell { cell: usize, members: String },
    #[error("malformed word `{0}`")]
    MalformedWord(String),
    #[error("letter {letter} is outside an alphabet of {size} letters")]
    LetterOutOfRange { letter: u32, size: u32 },
    #[error("{op} is undefined for {word}")]
    Undefined { op: &'static str, word: String },
    #[error("ball of {requested} words exceeds the bound of {bound}")]
    BallTooLarge { requested: u128, bound: usize },
    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),
}
