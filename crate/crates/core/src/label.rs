use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Coxeter matrix entry `m(s, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    /// Odd finite labels are the edges kept in the odd Coxeter graph.
    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 1)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }
}

impl From<u32> for Label {
    fn from(m: u32) -> Self {
        Label::Finite(m)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "oo"),
        }
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oo" | "inf" | "∞" => Ok(Label::Infinite),
            _ => s
                .parse::<u32>()
                .map(Label::Finite)
                .map_err(|_| format!("invalid label `{s}`")),
        }
    }
}
