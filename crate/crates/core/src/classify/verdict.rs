use std::fmt;

use serde::Serialize;

use crate::group::{Kappa, Side, Subset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Notion {
    Large,
    Thick,
    Small,
}

/// Where the translating element of a thickness test may come from.
///
/// `WitnessInA` asks for `a ∈ A` with `Fa ⊆ A`; `WitnessInG` allows any
/// `x ∈ G`. Only the latter is exactly dual to non-largeness of the
/// complement when `|F|` may reach `κ - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThickVariant {
    WitnessInA,
    WitnessInG,
}

impl ThickVariant {
    pub const ALL: [ThickVariant; 2] = [ThickVariant::WitnessInA, ThickVariant::WitnessInG];

    pub fn name(self) -> &'static str {
        match self {
            ThickVariant::WitnessInA => "witness-in-A",
            ThickVariant::WitnessInG => "witness-in-G",
        }
    }
}

impl std::str::FromStr for ThickVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "in-a" | "witness-in-A" | "witness-in-a" | "a" => Ok(ThickVariant::WitnessInA),
            "in-g" | "witness-in-G" | "witness-in-g" | "g" => Ok(ThickVariant::WitnessInG),
            other => Err(format!("unknown thickness variant `{other}` (in-a, in-g)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every admissible candidate was examined.
    Exhaustive,
    /// A greedy cover bounded the search, then an exact search minimised it.
    GreedyThenExact,
    /// Greedy cover only: the budget ran out before the witness was minimised.
    Greedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    /// The node budget ran out before a decision.
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn decided(self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            Verdict::Inconclusive => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    None,
    /// `F` with `|F| < κ` whose product with `A` covers `G`.
    Cover { f: Subset },
    /// For every maximal admissible `F`, the least translating element.
    Translations { entries: Vec<(Subset, usize)> },
    /// An admissible `F` with no translating element.
    Untranslatable { f: Subset },
    /// A large `L` (covered by `cover`) for which `L \ A` is not large.
    LargeRemainder { side: Side, large: Subset, cover: Subset },
}

/// Outcome of a size test, with the evidence that backs it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeVerdict {
    pub notion: Notion,
    pub side: Side,
    pub kappa: Kappa,
    pub variant: Option<ThickVariant>,
    pub verdict: Verdict,
    pub witness: Witness,
    pub method: Method,
    pub nodes: u64,
}

impl SizeVerdict {
    pub fn decided(&self) -> Option<bool> {
        self.verdict.decided()
    }

    /// The verdict as a boolean. Panics on an inconclusive verdict.
    pub fn holds(&self) -> bool {
        self.decided().expect("inconclusive verdict")
    }

    pub fn cover(&self) -> Option<&Subset> {
        match &self.witness {
            Witness::Cover { f } => Some(f),
            _ => None,
        }
    }
}

impl fmt::Display for SizeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let notion = match self.notion {
            Notion::Large => "large",
            Notion::Thick => "thick",
            Notion::Small => "small",
        };
        write!(f, "{} {notion} (kappa={})", self.side.name(), self.kappa)?;
        if let Some(v) = self.variant {
            write!(f, " [{}]", v.name())?;
        }
        match self.verdict {
            Verdict::Holds => f.write_str(": true")?,
            Verdict::Fails => f.write_str(": false")?,
            Verdict::Inconclusive => f.write_str(": inconclusive")?,
        }
        match &self.witness {
            Witness::None => Ok(()),
            Witness::Cover { f: set } => write!(f, "; F={set}"),
            Witness::Translations { entries } => write!(f, "; {} maximal F translated", entries.len()),
            Witness::Untranslatable { f: set } => write!(f, "; failing F={set}"),
            Witness::LargeRemainder { side, large, cover } => {
                write!(f, "; failing L={large} ({} large via F={cover})", side.name())
            }
        }
    }
}
