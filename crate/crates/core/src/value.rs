use std::fmt;
use std::str::FromStr;

/// Game length under optimal play: a finite number of rounds, or escape.
///
/// `Escape` orders above every finite value. It is a sentinel, not a large
/// number, and [`Value::delayed`] refuses to do arithmetic on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Capture(u32),
    Escape,
}

impl Value {
    pub fn is_finite(self) -> bool {
        matches!(self, Value::Capture(_))
    }

    pub fn rounds(self) -> Option<u32> {
        match self {
            Value::Capture(t) => Some(t),
            Value::Escape => None,
        }
    }

    /// `self + rounds`.
    ///
    /// # Panics
    /// On `Escape`; callers must branch on escape explicitly.
    pub fn delayed(self, rounds: u32) -> Value {
        match self {
            Value::Capture(t) => Value::Capture(t + rounds),
            Value::Escape => panic!("arithmetic on the escape value"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Capture(t) => write!(f, "{t}"),
            Value::Escape => f.write_str("ESC"),
        }
    }
}

impl FromStr for Value {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ESC" {
            Ok(Value::Escape)
        } else {
            s.parse().map(Value::Capture)
        }
    }
}
