use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An integer extended by `-inf` and `+inf`.
///
/// Used for sup/inf of graded modules and for regularities; the zero module
/// has regularity [`ExtendedInt::NegInfinity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedInt {
    NegInfinity,
    Finite(i64),
    PosInfinity,
}

pub use ExtendedInt::{Finite, NegInfinity, PosInfinity};

impl ExtendedInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Finite(_))
    }

    /// `-inf` absorbs; mixing `-inf` and `+inf` yields `-inf`.
    pub fn add_int(self, k: i64) -> ExtendedInt {
        match self {
            Finite(v) => Finite(v + k),
            other => other,
        }
    }
}

impl From<i64> for ExtendedInt {
    fn from(v: i64) -> Self {
        Finite(v)
    }
}

impl Add for ExtendedInt {
    type Output = ExtendedInt;

    fn add(self, rhs: ExtendedInt) -> ExtendedInt {
        match (self, rhs) {
            (NegInfinity, _) | (_, NegInfinity) => NegInfinity,
            (PosInfinity, _) | (_, PosInfinity) => PosInfinity,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInfinity => f.write_str("-inf"),
            PosInfinity => f.write_str("inf"),
            Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ExtendedInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(v) => s.serialize_i64(*v),
            NegInfinity => s.serialize_str("-inf"),
            PosInfinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(Finite(v)),
            Raw::Str(s) if s == "-inf" => Ok(NegInfinity),
            Raw::Str(s) if s == "inf" => Ok(PosInfinity),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad extended integer {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_places_infinities_at_the_ends() {
        assert!(NegInfinity < Finite(i64::MIN));
        assert!(Finite(i64::MAX) < PosInfinity);
        assert_eq!(Finite(3).max(NegInfinity), Finite(3));
    }

    #[test]
    fn arithmetic_absorbs_neg_infinity() {
        assert_eq!(NegInfinity + Finite(4), NegInfinity);
        assert_eq!(Finite(2) + Finite(4), Finite(6));
        assert_eq!(NegInfinity.add_int(7), NegInfinity);
    }

    #[test]
    fn json_round_trip() {
        for v in [NegInfinity, Finite(-3), PosInfinity] {
            let s = serde_json::to_string(&v).unwrap();
            let back: ExtendedInt = serde_json::from_str(&s).unwrap();
            assert_eq!(back, v);
        }
    }
}
