//! Truncated power series and polynomials in `z` with Laurent coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::half::Half;
use super::laurent::Laurent;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A power series in `z` known modulo `z^(order+1)`.
///
/// Coefficients are [`Laurent`] values; binary operations truncate to the
/// smaller of the two orders.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZSeries {
    order: usize,
    coeffs: Vec<Laurent>,
}

impl ZSeries {
    /// The zero series to the given order.
    pub fn zero(order: usize) -> ZSeries {
        ZSeries {
            order,
            coeffs: vec![Laurent::zero(); order + 1],
        }
    }

    /// The constant series `c`.
    pub fn constant(c: Laurent, order: usize) -> ZSeries {
        let mut s = ZSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `1`.
    pub fn one(order: usize) -> ZSeries {
        ZSeries::constant(Laurent::one(), order)
    }

    /// `c z^k`.
    pub fn monomial(c: Laurent, k: usize, order: usize) -> ZSeries {
        let mut s = ZSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series from its first coefficients, padded with zeros or cut to `order`.
    pub fn from_coeffs(mut coeffs: Vec<Laurent>, order: usize) -> ZSeries {
        coeffs.resize(order + 1, Laurent::zero());
        ZSeries { order, coeffs }
    }

    /// Series whose `n`-th coefficient is `f(n)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Laurent) -> ZSeries {
        ZSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// The truncation order `N` (coefficients `0..=N` are known).
    pub fn order(&self) -> usize {
        self.order
    }

    /// All known coefficients.
    pub fn coeffs(&self) -> &[Laurent] {
        &self.coeffs
    }

    /// Coefficient of `z^n`; panics beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &Laurent {
        &self.coeffs[n]
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Laurent::is_zero)
    }

    /// Cuts to a smaller order.
    pub fn truncate(&self, order: usize) -> ZSeries {
        let order = order.min(self.order);
        ZSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Sum, failing on incompatible granularities.
    pub fn try_add(&self, other: &ZSeries) -> Result<ZSeries> {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].try_add(&other.coeffs[i]))
            .collect::<Result<_>>()?;
        Ok(ZSeries { order, coeffs })
    }

    /// Difference, failing on incompatible granularities.
    pub fn try_sub(&self, other: &ZSeries) -> Result<ZSeries> {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].try_sub(&other.coeffs[i]))
            .collect::<Result<_>>()?;
        Ok(ZSeries { order, coeffs })
    }

    /// Cauchy product, failing on incompatible granularities.
    pub fn try_mul(&self, other: &ZSeries) -> Result<ZSeries> {
        let order = self.order.min(other.order);
        let mut coeffs = vec![Laurent::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] =
                    coeffs[i + j].try_add(&self.coeffs[i].try_mul(&other.coeffs[j])?)?;
            }
        }
        Ok(ZSeries { order, coeffs })
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Laurent) -> ZSeries {
        ZSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> ZSeries {
        ZSeries::from_fn(self.order, |n| {
            if n >= k {
                self.coeffs[n - k].clone()
            } else {
                Laurent::zero()
            }
        })
    }

    /// Integer power.
    pub fn pow(&self, e: u32) -> ZSeries {
        (0..e).fold(ZSeries::one(self.order), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; the constant term must be a unit monomial.
    pub fn inverse(&self) -> Result<ZSeries> {
        let c0 = &self.coeffs[0];
        let (m, c) = c0.as_monomial().ok_or_else(|| {
            Error::NotInvertible(if c0.is_zero() {
                "constant term is zero".into()
            } else {
                format!("constant term {c0} is not a monomial")
            })
        })?;
        let inv0 = Laurent::from_terms(
            c0.granularity(),
            [(
                super::laurent::Mono::new(-m.q, -m.y),
                c.recip().expect("nonzero"),
            )],
        );
        let mut out = vec![Laurent::zero(); self.order + 1];
        out[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = Laurent::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !out[n - i].is_zero() {
                    acc = acc.try_add(&self.coeffs[i].try_mul(&out[n - i])?)?;
                }
            }
            out[n] = -(acc.try_mul(&inv0)?);
        }
        Ok(ZSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// The series `f(c z)`: the `n`-th coefficient is multiplied by `c^n`.
    pub fn scale_argument(&self, c: &Laurent) -> ZSeries {
        let mut pw = Laurent::one();
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for x in &self.coeffs {
            coeffs.push(x * &pw);
            pw = &pw * c;
        }
        ZSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Applies a coefficientwise map.
    pub fn map(&self, f: impl FnMut(&Laurent) -> Laurent) -> ZSeries {
        ZSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies a fallible coefficientwise map.
    pub fn try_map(&self, f: impl FnMut(&Laurent) -> Result<Laurent>) -> Result<ZSeries> {
        Ok(ZSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Renders as `c0 + (c1)*z + ...` with a chosen name for `y`.
    pub fn display_with(&self, yname: &str) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| match n {
                0 => format!("({})", c.display_with(yname)),
                1 => format!("({})*z", c.display_with(yname)),
                _ => format!("({})*z^{n}", c.display_with(yname)),
            })
            .collect();
        let body = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        };
        format!("{body} + O(z^{})", self.order + 1)
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("y"))
    }
}

impl fmt::Debug for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZSeries({self})")
    }
}

macro_rules! series_binop {
    ($ty:ty, $tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.$imp(rhs).expect("incompatible granularities")
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$imp(&rhs).expect("incompatible granularities")
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$imp(rhs).expect("incompatible granularities")
            }
        }
    };
}

series_binop!(ZSeries, Add, add, try_add);
series_binop!(ZSeries, Sub, sub, try_sub);
series_binop!(ZSeries, Mul, mul, try_mul);

impl Neg for &ZSeries {
    type Output = ZSeries;
    fn neg(self) -> ZSeries {
        self.map(|c| -c)
    }
}

/// `f(c z)` with `c = scalar * q^qexp`.
pub fn series_scale_substitute(f: &ZSeries, qexp: Half, scalar: &Scalar) -> ZSeries {
    let c = Laurent::q_pow(qexp).scale(scalar);
    f.scale_argument(&c)
}

/// A polynomial in `z` with Laurent coefficients, used for matrix entries.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ZPoly {
    coeffs: Vec<Laurent>,
}

impl ZPoly {
    /// Builds from coefficients of `z^0, z^1, ...`.
    pub fn new(coeffs: Vec<Laurent>) -> ZPoly {
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    /// The zero polynomial.
    pub fn zero() -> ZPoly {
        ZPoly { coeffs: Vec::new() }
    }

    /// A polynomial constant in `z`.
    pub fn constant(c: Laurent) -> ZPoly {
        ZPoly::new(vec![c])
    }

    /// `c z^k`.
    pub fn monomial(c: Laurent, k: usize) -> ZPoly {
        let mut v = vec![Laurent::zero(); k + 1];
        v[k] = c;
        ZPoly::new(v)
    }

    /// The variable `z`.
    pub fn z() -> ZPoly {
        ZPoly::monomial(Laurent::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Laurent::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients from `z^0` up to the degree.
    pub fn coeffs(&self) -> &[Laurent] {
        &self.coeffs
    }

    /// Coefficient of `z^n` (zero beyond the degree).
    pub fn coeff(&self, n: usize) -> Laurent {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by a Laurent constant.
    pub fn scale(&self, c: &Laurent) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// The polynomial `p(c z)`.
    pub fn scale_argument(&self, c: &Laurent) -> ZPoly {
        let mut pw = Laurent::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x * &pw);
            pw = &pw * c;
        }
        ZPoly::new(out)
    }

    /// Truncates to a series of the given order.
    pub fn to_series(&self, order: usize) -> ZSeries {
        ZSeries::from_fn(order, |n| self.coeff(n))
    }

    fn try_add(&self, other: &ZPoly) -> Result<ZPoly> {
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(ZPoly::new(
            (0..n)
                .map(|i| self.coeff(i).try_add(&other.coeff(i)))
                .collect::<Result<_>>()?,
        ))
    }

    fn try_sub(&self, other: &ZPoly) -> Result<ZPoly> {
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(ZPoly::new(
            (0..n)
                .map(|i| self.coeff(i).try_sub(&other.coeff(i)))
                .collect::<Result<_>>()?,
        ))
    }

    fn try_mul(&self, other: &ZPoly) -> Result<ZPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(ZPoly::zero());
        }
        let mut out = vec![Laurent::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(ZPoly::new(out))
    }
}

series_binop!(ZPoly, Add, add, try_add);
series_binop!(ZPoly, Sub, sub, try_sub);
series_binop!(ZPoly, Mul, mul, try_mul);

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| match n {
                0 => format!("({c})"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{n}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn inverse_of_one_minus_z() {
        let f = ZSeries::from_coeffs(vec![p("1"), p("-1")], 5);
        let g = f.inverse().unwrap();
        assert!(g.coeffs().iter().all(Laurent::is_one));
        assert_eq!(
            ZSeries::zero(3).inverse().unwrap_err(),
            Error::NotInvertible("constant term is zero".into())
        );
        let bad = ZSeries::constant(p("1 + q"), 3);
        assert!(matches!(bad.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn unit_monomial_constant_is_invertible() {
        let f = ZSeries::from_coeffs(vec![p("-2*q^3*y"), p("q")], 4);
        let g = f.inverse().unwrap();
        assert!((&f * &g)
            .coeffs()
            .iter()
            .enumerate()
            .all(|(i, c)| (i == 0) == c.is_one() && (i == 0 || c.is_zero())));
    }

    #[test]
    fn orders_and_scaling() {
        let a = ZSeries::from_coeffs(vec![p("1"), p("1"), p("1")], 4);
        let b = ZSeries::from_coeffs(vec![p("1")], 2);
        assert_eq!((&a + &b).order(), 2);
        let s = series_scale_substitute(&a, Half::int(1), &Scalar::Int(-1));
        assert_eq!(s.coeff(2), &p("q^2"));
        assert_eq!(s.coeff(1), &p("-q"));
    }

    #[test]
    fn zpoly_products() {
        let one_plus_z = ZPoly::new(vec![p("1"), p("1")]);
        let sq = &one_plus_z * &one_plus_z;
        assert_eq!(sq.coeffs(), &[p("1"), p("2"), p("1")]);
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.scale_argument(&p("q")).coeff(2), p("q^2"));
    }
}
