use serde::{Serialize, Serializer};
use std::fmt;

/// A round count that may be unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameValue {
    Finite(u32),
    Infinite,
}

impl GameValue {
    pub fn is_finite(self) -> bool {
        matches!(self, GameValue::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            GameValue::Finite(v) => Some(v),
            GameValue::Infinite => None,
        }
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameValue::Finite(v) => write!(f, "{v}"),
            GameValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for GameValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GameValue::Finite(v) => s.serialize_u32(*v),
            GameValue::Infinite => s.serialize_str("inf"),
        }
    }
}
