//! The three-valued truth domain.
//!
//! Statements are mapped to true, false or unknown. The two classical
//! values carry more information than unknown, which induces the partial
//! information ordering used by all semantics: `u < t` and `u < f`, with
//! `t` and `f` incomparable.

use std::fmt;

/// A truth value of the three-valued logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    /// Meet of two truth values: agreement on a classical value is kept,
    /// everything else collapses to unknown.
    pub fn consensus(self, other: Truth) -> Truth {
        if self == other {
            self
        } else {
            Truth::Unknown
        }
    }

    /// Information ordering on single values: `self` is below `other`
    /// when it is unknown or equal to it.
    pub fn leq_info(self, other: Truth) -> bool {
        self == Truth::Unknown || self == other
    }

    pub fn is_classical(self) -> bool {
        self != Truth::Unknown
    }

    pub fn from_bool(value: bool) -> Truth {
        if value {
            Truth::True
        } else {
            Truth::False
        }
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truth::True => write!(f, "t"),
            Truth::False => write!(f, "f"),
            Truth::Unknown => write!(f, "u"),
        }
    }
}
