//! Variables of the universal ring and of the specialization targets.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial variable.
///
/// The derived order (kind first, then component index) is the canonical
/// variable order used for printing and for monomial comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// The quantum variable `d`, with `q = d^-2`.
    D,
    /// The variable `y` attached to the cut strand.
    Y,
    /// Colour variable `x_i` of component `i` (1-based).
    X(u16),
    /// Framing variable `u_i` of component `i` (1-based).
    U(u16),
    /// Half power of the generic target parameter, `q = S^2`.
    S,
    /// Generator of a cyclotomic coefficient ring.
    T,
    /// Any other single-letter variable, such as `t` or `A` in the oracles.
    Aux(char),
}

impl Var {
    /// Component index of an `X` or `U` variable.
    pub fn component(self) -> Option<u16> {
        match self {
            Var::X(i) | Var::U(i) => Some(i),
            _ => None,
        }
    }

    /// Parses the textual name produced by `Display`.
    pub fn parse(s: &str) -> Result<Var> {
        let bad = || Error::Parse(format!("unknown variable `{s}`"));
        match s {
            "d" => return Ok(Var::D),
            "y" => return Ok(Var::Y),
            "S" => return Ok(Var::S),
            "T" => return Ok(Var::T),
            _ => {}
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        if rest.is_empty() {
            return if head.is_ascii_alphabetic() {
                Ok(Var::Aux(head))
            } else {
                Err(bad())
            };
        }
        let idx: u16 = rest.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match head {
            'x' => Ok(Var::X(idx)),
            'u' => Ok(Var::U(idx)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::D => write!(f, "d"),
            Var::Y => write!(f, "y"),
            Var::X(i) => write!(f, "x{i}"),
            Var::U(i) => write!(f, "u{i}"),
            Var::S => write!(f, "S"),
            Var::T => write!(f, "T"),
            Var::Aux(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Var::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for v in [Var::D, Var::Y, Var::X(3), Var::U(12), Var::S, Var::T, Var::Aux('t')] {
            assert_eq!(Var::parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn equality_is_kind_and_index() {
        assert_eq!(Var::X(1), Var::X(1));
        assert_ne!(Var::X(1), Var::U(1));
        assert_ne!(Var::X(1), Var::X(2));
        assert!(Var::parse("x0").is_err());
        assert!(Var::parse("q7").is_err());
    }
}
