use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A non-negative integer or infinity.
///
/// Serializes as a JSON number, or as the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dim {
    Finite(u64),
    Infinite,
}

impl Dim {
    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Dim::Finite(v) => Some(v),
            Dim::Infinite => None,
        }
    }

    /// Saturating addition; infinity absorbs.
    pub fn plus(self, k: u64) -> Dim {
        match self {
            Dim::Finite(v) => Dim::Finite(v + k),
            Dim::Infinite => Dim::Infinite,
        }
    }
}

impl From<u64> for Dim {
    fn from(v: u64) -> Self {
        Dim::Finite(v)
    }
}

impl PartialOrd for Dim {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dim {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Dim::Finite(a), Dim::Finite(b)) => a.cmp(b),
            (Dim::Finite(_), Dim::Infinite) => Ordering::Less,
            (Dim::Infinite, Dim::Finite(_)) => Ordering::Greater,
            (Dim::Infinite, Dim::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(v) => write!(f, "{v}"),
            Dim::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Dim {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Dim::Finite(v) => serializer.serialize_u64(*v),
            Dim::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Dim {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct DimVisitor;

        impl Visitor<'_> for DimVisitor {
            type Value = Dim;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or the string \"inf\"")
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Dim, E> {
                Ok(Dim::Finite(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Dim, E> {
                u64::try_from(v)
                    .map(Dim::Finite)
                    .map_err(|_| E::custom("negative dimension"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Dim, E> {
                if v == "inf" {
                    Ok(Dim::Infinite)
                } else {
                    Err(E::custom(format!("unexpected string {v:?}")))
                }
            }
        }

        deserializer.deserialize_any(DimVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_infinity_last() {
        assert!(Dim::Finite(1_000) < Dim::Infinite);
        assert_eq!(Dim::Finite(3).max(Dim::Finite(7)), Dim::Finite(7));
        assert_eq!(Dim::Infinite.plus(2), Dim::Infinite);
    }

    #[test]
    fn json_uses_inf_string() {
        assert_eq!(serde_json::to_string(&Dim::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Dim::Finite(4)).unwrap(), "4");
        let back: Dim = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(back, Dim::Infinite);
        assert!(serde_json::from_str::<Dim>("\"oo\"").is_err());
    }
}
