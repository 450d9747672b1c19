//! Half-integer parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A number in `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Half(i64);

impl Half {
    /// Zero.
    pub const ZERO: Half = Half(0);

    /// The integer `n`.
    pub const fn int(n: i64) -> Half {
        Half(2 * n)
    }

    /// The value `h / 2`.
    pub const fn halves(h: i64) -> Half {
        Half(h)
    }

    /// Twice the value.
    pub const fn twice(self) -> i64 {
        self.0
    }

    /// True when the value is an integer.
    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value when it is an integer.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// `self * n`.
    pub const fn times(self, n: i64) -> Half {
        Half(self.0 * n)
    }
}

impl std::ops::Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl std::ops::Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Half {
    type Err = Error;

    /// Accepts `"3"`, `"-1"`, `"3/2"`, `"4/2"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected an integer or half-integer, got {s:?}"));
        let t = s.trim();
        match t.split_once('/') {
            None => t.parse::<i64>().map(Half::int).map_err(|_| bad()),
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                match d.trim() {
                    "1" => Ok(Half::int(n)),
                    "2" => Ok(Half::halves(n)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

impl Serialize for Half {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("3/2".parse::<Half>().unwrap(), Half::halves(3));
        assert_eq!("4/2".parse::<Half>().unwrap(), Half::int(2));
        assert_eq!("-1".parse::<Half>().unwrap().to_string(), "-1");
        assert_eq!(Half::halves(-1).to_string(), "-1/2");
        assert!("1/3".parse::<Half>().is_err());
    }
}
