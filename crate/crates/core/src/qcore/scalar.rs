//! Exact rational scalars.
//!
//! [`Scalar`] is an exact rational number.  Machine-sized integers are kept in
//! an `i64` and only promoted to a [`BigRational`] on overflow or when a
//! proper fraction appears, which keeps the integer-heavy q-series arithmetic
//! fast without giving up exactness.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number.
///
/// The representation is canonical: a value that is an integer fitting in an
/// `i64` is always stored as [`Scalar::Int`], so derived equality and hashing
/// are value-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Integer value in machine range.
    Int(i64),
    /// Any other rational.
    Rat(BigRational),
}

impl Scalar {
    /// The additive identity.
    pub const ZERO: Scalar = Scalar::Int(0);
    /// The multiplicative identity.
    pub const ONE: Scalar = Scalar::Int(1);

    /// Canonicalises a big rational.
    pub fn from_big(r: BigRational) -> Scalar {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Scalar::Int(v);
            }
        }
        Scalar::Rat(r)
    }

    /// Builds `numer / denom`; panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Scalar {
        assert!(denom != 0, "zero denominator");
        Scalar::from_big(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// The value as a big rational.
    pub fn to_big(&self) -> BigRational {
        match self {
            Scalar::Int(v) => BigRational::from_integer(BigInt::from(*v)),
            Scalar::Rat(r) => r.clone(),
        }
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Int(0))
    }

    /// True for one.
    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Int(1))
    }

    /// True when the value is an integer.
    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Int(_) => true,
            Scalar::Rat(r) => r.is_integer(),
        }
    }

    /// True when the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(v) => *v < 0,
            Scalar::Rat(r) => r.is_negative(),
        }
    }

    /// The integer value, if this is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(v) => Some(BigInt::from(*v)),
            Scalar::Rat(r) if r.is_integer() => Some(r.numer().clone()),
            Scalar::Rat(_) => None,
        }
    }

    /// The multiplicative inverse, or `None` for zero.
    pub fn recip(&self) -> Option<Scalar> {
        match self {
            Scalar::Int(0) => None,
            Scalar::Int(1) => Some(Scalar::ONE),
            Scalar::Int(-1) => Some(Scalar::Int(-1)),
            _ => Some(Scalar::from_big(self.to_big().recip())),
        }
    }

    /// Exact quotient, or `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            return None;
        }
        if let (Scalar::Int(a), Scalar::Int(b)) = (self, rhs) {
            if a % b == 0 {
                if let Some(v) = a.checked_div(*b) {
                    return Some(Scalar::Int(v));
                }
            }
        }
        Some(Scalar::from_big(self.to_big() / rhs.to_big()))
    }

    /// Integer power.
    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn add_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if let (Scalar::Int(x), Scalar::Int(y)) = (a, b) {
        if let Some(v) = x.checked_add(*y) {
            return Scalar::Int(v);
        }
    }
    Scalar::from_big(a.to_big() + b.to_big())
}

fn sub_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if let (Scalar::Int(x), Scalar::Int(y)) = (a, b) {
        if let Some(v) = x.checked_sub(*y) {
            return Scalar::Int(v);
        }
    }
    Scalar::from_big(a.to_big() - b.to_big())
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if let (Scalar::Int(x), Scalar::Int(y)) = (a, b) {
        if let Some(v) = x.checked_mul(*y) {
            return Scalar::Int(v);
        }
    }
    Scalar::from_big(a.to_big() * b.to_big())
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $imp(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $imp(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                $imp(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $imp(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = sub_impl(self, rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(v) => match v.checked_neg() {
                Some(n) => Scalar::Int(n),
                None => Scalar::from_big(-self.to_big()),
            },
            Scalar::Rat(r) => Scalar::from_big(-r.clone()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Int(v)
    }
}

impl From<i32> for Scalar {
    fn from(v: i32) -> Self {
        Scalar::Int(v as i64)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::from_big(BigRational::from_integer(v))
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::from_big(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(v) => write!(f, "{v}"),
            Scalar::Rat(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `"-12"` or `"3/4"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.split_once('/') {
            None => t
                .parse::<BigInt>()
                .map(Scalar::from)
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}"))),
            Some((n, d)) => {
                let n: BigInt = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
                let d: BigInt = d
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Scalar::from_big(BigRational::new(n, d)))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Binomial coefficient `C(n, k)` as a big integer; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Scalar::Int(i64::MAX);
        let s = &big + &Scalar::ONE;
        assert!(matches!(s, Scalar::Rat(_)));
        let back = &s - &Scalar::ONE;
        assert_eq!(back, Scalar::Int(i64::MAX));
        let p = &big * &big;
        assert_eq!(p.checked_div(&big).unwrap(), big);
    }

    #[test]
    fn fractions_parse_and_print() {
        let h: Scalar = "6/4".parse().unwrap();
        assert_eq!(h.to_string(), "3/2");
        assert_eq!("-4/2".parse::<Scalar>().unwrap(), Scalar::Int(-2));
        assert!("1/0".parse::<Scalar>().is_err());
        assert_eq!((&h + &h), Scalar::Int(3));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
