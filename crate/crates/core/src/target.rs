//! Target tournaments and injectivity modes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::OrientedGraph;
use crate::named;

/// The tournaments on at most three vertices, irreflexive and reflexive.
///
/// `T_n` has vertices t0..t(n-1) with arcs ti→tj for i<j; `C3` has vertices
/// c1, c2, c3 (ids 0, 1, 2) with arcs c1→c2→c3→c1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tournament {
    T1,
    T2,
    T3,
    C3,
    T1r,
    T2r,
}

/// Which neighbourhoods the homomorphism must be injective on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// In- and out-neighbourhoods separately.
    Ios,
    /// The union of in- and out-neighbourhood.
    Iot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Target {
    pub id: Tournament,
    pub mode: Mode,
}

impl Tournament {
    pub const ALL: [Tournament; 6] = [
        Tournament::T1,
        Tournament::T2,
        Tournament::T3,
        Tournament::C3,
        Tournament::T1r,
        Tournament::T2r,
    ];

    pub fn is_reflexive(self) -> bool {
        matches!(self, Tournament::T1r | Tournament::T2r)
    }

    pub fn order(self) -> usize {
        match self {
            Tournament::T1 | Tournament::T1r => 1,
            Tournament::T2 | Tournament::T2r => 2,
            Tournament::T3 | Tournament::C3 => 3,
        }
    }

    pub fn graph(self) -> OrientedGraph {
        let g = match self {
            Tournament::C3 => named::directed_cycle(3),
            other => named::transitive_tournament(other.order()),
        };
        if self.is_reflexive() {
            g.into_reflexive()
        } else {
            g
        }
    }

    /// Printable name of vertex `v` of this tournament.
    pub fn vertex_label(self, v: usize) -> String {
        match self {
            Tournament::C3 => format!("c{}", v + 1),
            _ => format!("t{v}"),
        }
    }
}

impl Target {
    pub const fn new(id: Tournament, mode: Mode) -> Self {
        Target { id, mode }
    }

    /// The eight problems with a polynomial decider in this crate.
    pub const SUPPORTED: [Target; 8] = [
        Target::new(Tournament::T1, Mode::Ios),
        Target::new(Tournament::T2, Mode::Ios),
        Target::new(Tournament::T3, Mode::Ios),
        Target::new(Tournament::C3, Mode::Ios),
        Target::new(Tournament::T1r, Mode::Ios),
        Target::new(Tournament::T2r, Mode::Ios),
        Target::new(Tournament::T1r, Mode::Iot),
        Target::new(Tournament::T2r, Mode::Iot),
    ];

    pub fn is_supported(self) -> bool {
        Self::SUPPORTED.contains(&self)
    }

    pub fn graph(self) -> OrientedGraph {
        self.id.graph()
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tournament::T1 => "t1",
            Tournament::T2 => "t2",
            Tournament::T3 => "t3",
            Tournament::C3 => "c3",
            Tournament::T1r => "t1r",
            Tournament::T2r => "t2r",
        };
        f.write_str(s)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Ios => "ios",
            Mode::Iot => "iot",
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.mode, self.id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unrecognised {what} `{value}`")]
pub struct ParseTargetError {
    what: &'static str,
    value: String,
}

impl FromStr for Tournament {
    type Err = ParseTargetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s.to_ascii_lowercase().as_str() {
            "t1" => Tournament::T1,
            "t2" => Tournament::T2,
            "t3" => Tournament::T3,
            "c3" => Tournament::C3,
            "t1r" | "t1^r" => Tournament::T1r,
            "t2r" | "t2^r" => Tournament::T2r,
            _ => {
                return Err(ParseTargetError {
                    what: "target",
                    value: s.to_string(),
                })
            }
        };
        Ok(id)
    }
}

impl FromStr for Mode {
    type Err = ParseTargetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ios" => Ok(Mode::Ios),
            "iot" => Ok(Mode::Iot),
            _ => Err(ParseTargetError {
                what: "mode",
                value: s.to_string(),
            }),
        }
    }
}

/// Parses `ios-t2r` style problem names.
impl FromStr for Target {
    type Err = ParseTargetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (mode, id) = s.split_once(['-', ':']).ok_or_else(|| ParseTargetError {
            what: "problem",
            value: s.to_string(),
        })?;
        Ok(Target::new(id.parse()?, mode.parse()?))
    }
}
