//! Steps, paths and path families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One step of a lattice path; `MarkedUp`/`MarkedDown` carry a mark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Unmarked up step, `U`.
    Up,
    /// Unmarked down step, `D`.
    Down,
    /// Horizontal step of length two, `H`.
    Flat,
    /// Marked up step, `u`.
    MarkedUp,
    /// Marked down step, `d`.
    MarkedDown,
}

impl Step {
    /// Steps in the order of their one-letter encodings `D < H < U < d < u`.
    pub const ENCODING_ORDER: [Step; 5] = [
        Step::Down,
        Step::Flat,
        Step::Up,
        Step::MarkedDown,
        Step::MarkedUp,
    ];

    /// Height change.
    pub fn delta(self) -> i64 {
        match self {
            Step::Up | Step::MarkedUp => 1,
            Step::Down | Step::MarkedDown => -1,
            Step::Flat => 0,
        }
    }

    /// Horizontal extent.
    pub fn width(self) -> usize {
        if self == Step::Flat {
            2
        } else {
            1
        }
    }

    /// True for marked steps.
    pub fn is_marked(self) -> bool {
        matches!(self, Step::MarkedUp | Step::MarkedDown)
    }

    /// True for up steps of either mark.
    pub fn is_up(self) -> bool {
        matches!(self, Step::Up | Step::MarkedUp)
    }

    /// True for down steps of either mark.
    pub fn is_down(self) -> bool {
        matches!(self, Step::Down | Step::MarkedDown)
    }

    /// One-letter encoding.
    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Flat => 'H',
            Step::MarkedUp => 'u',
            Step::MarkedDown => 'd',
        }
    }

    /// Parses a one-letter encoding.
    pub fn from_char(c: char) -> Result<Step> {
        Ok(match c {
            'U' => Step::Up,
            'D' => Step::Down,
            'H' => Step::Flat,
            'u' => Step::MarkedUp,
            'd' => Step::MarkedDown,
            _ => return Err(Error::Parse(format!("unknown step {c:?}"))),
        })
    }
}

/// A sequence of steps starting at height zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePath {
    /// The steps in order.
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// Wraps a step sequence.
    pub fn new(steps: Vec<Step>) -> LatticePath {
        LatticePath { steps }
    }

    /// Total horizontal extent.
    pub fn width(&self) -> usize {
        self.steps.iter().map(|s| s.width()).sum()
    }

    /// Height after the last step.
    pub fn final_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    /// Heights before each step, followed by the final height.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = vec![0];
        for s in &self.steps {
            h.push(h[h.len() - 1] + s.delta());
        }
        h
    }

    /// True when the path never goes below zero.
    pub fn stays_nonnegative(&self) -> bool {
        self.heights().iter().all(|&h| h >= 0)
    }

    /// True when some marked up step is immediately followed by a marked down step.
    pub fn has_marked_peak(&self) -> bool {
        self.steps
            .windows(2)
            .any(|w| w[0] == Step::MarkedUp && w[1] == Step::MarkedDown)
    }

    /// True when the path belongs to `kind` with half-length `n`.
    pub fn is_of_kind(&self, kind: PathKind, n: usize) -> bool {
        let alphabet_ok = self.steps.iter().all(|&s| kind.allows(s));
        alphabet_ok
            && self.width() == 2 * n
            && self.final_height() == 0
            && self.stays_nonnegative()
            && !(kind == PathKind::MdStar && self.has_marked_peak())
    }

    /// The same path with every mark removed.
    pub fn unmarked(&self) -> LatticePath {
        LatticePath::new(
            self.steps
                .iter()
                .map(|s| match s {
                    Step::MarkedUp => Step::Up,
                    Step::MarkedDown => Step::Down,
                    other => *other,
                })
                .collect(),
        )
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(LatticePath::new(
            s.chars().map(Step::from_char).collect::<Result<_>>()?,
        ))
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The path families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathKind {
    /// Unmarked up and down steps.
    Dyck,
    /// Unmarked up, down and horizontal steps.
    Schroder,
    /// Up, down and horizontal steps; up and down steps may be marked.
    MarkedSchroder,
    /// Up and down steps, possibly marked.
    MarkedDyck,
    /// Marked Dyck paths with no marked up step directly followed by a marked down step.
    MdStar,
}

impl PathKind {
    /// All kinds.
    pub const ALL: [PathKind; 5] = [
        PathKind::Dyck,
        PathKind::Schroder,
        PathKind::MarkedSchroder,
        PathKind::MarkedDyck,
        PathKind::MdStar,
    ];

    /// True when `s` may occur in a path of this kind.
    pub fn allows(self, s: Step) -> bool {
        match s {
            Step::Up | Step::Down => true,
            Step::Flat => matches!(self, PathKind::Schroder | PathKind::MarkedSchroder),
            Step::MarkedUp | Step::MarkedDown => {
                matches!(
                    self,
                    PathKind::MarkedSchroder | PathKind::MarkedDyck | PathKind::MdStar
                )
            }
        }
    }

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            PathKind::Dyck => "dyck",
            PathKind::Schroder => "schroder",
            PathKind::MarkedSchroder => "marked-schroder",
            PathKind::MarkedDyck => "marked-dyck",
            PathKind::MdStar => "md-star",
        }
    }
}

impl FromStr for PathKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PathKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('-', "_") == s)
            .ok_or_else(|| Error::Parse(format!("unknown path kind {s:?}")))
    }
}
