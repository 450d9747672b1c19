//! Laurent polynomials in `q^(1/g)` and `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::half::Half;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Exponent pair of a monomial `q^(q/g) y^y`; ordered lexicographically by `(q, y)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono {
    /// Exponent of `q`, in units of `1/g`.
    pub q: i64,
    /// Exponent of `y`.
    pub y: i64,
}

impl Mono {
    /// Builds an exponent pair.
    pub const fn new(q: i64, y: i64) -> Mono {
        Mono { q, y }
    }
}

impl Add for Mono {
    type Output = Mono;
    fn add(self, rhs: Mono) -> Mono {
        Mono::new(self.q + rhs.q, self.y + rhs.y)
    }
}

impl Sub for Mono {
    type Output = Mono;
    fn sub(self, rhs: Mono) -> Mono {
        Mono::new(self.q - rhs.q, self.y - rhs.y)
    }
}

/// A Laurent polynomial in `q^(1/g)` and `y` with exact rational coefficients.
///
/// Terms are kept sorted by `(q, y)` without zero coefficients, and the
/// granularity `g` is always the smallest one that expresses every exponent,
/// so two equal values have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    g: u32,
    terms: Vec<(Mono, Scalar)>,
}

const DENSE_LIMIT: i64 = 1 << 21;

impl Laurent {
    /// The zero polynomial.
    pub fn zero() -> Laurent {
        Laurent {
            g: 1,
            terms: Vec::new(),
        }
    }

    /// The constant one.
    pub fn one() -> Laurent {
        Laurent::constant(Scalar::ONE)
    }

    /// A constant.
    pub fn constant(c: impl Into<Scalar>) -> Laurent {
        Laurent::monomial(c, 0, 0)
    }

    /// `c q^qe y^ye` with integer exponents.
    pub fn monomial(c: impl Into<Scalar>, qe: i64, ye: i64) -> Laurent {
        Laurent::from_terms(1, [(Mono::new(qe, ye), c.into())])
    }

    /// `q^e` for a half-integer `e`.
    pub fn q_pow(e: Half) -> Laurent {
        Laurent::from_terms(2, [(Mono::new(e.twice(), 0), Scalar::ONE)])
    }

    /// `q^e` for an integer `e`.
    pub fn q(e: i64) -> Laurent {
        Laurent::monomial(1, e, 0)
    }

    /// `y^e`.
    pub fn y(e: i64) -> Laurent {
        Laurent::monomial(1, 0, e)
    }

    /// `1 - c q^e y^f`, a frequent factor.
    pub fn one_minus(c: impl Into<Scalar>, qe: i64, ye: i64) -> Laurent {
        Laurent::from_terms(
            1,
            [
                (Mono::new(0, 0), Scalar::ONE),
                (Mono::new(qe, ye), -c.into()),
            ],
        )
    }

    /// Collects terms at granularity `g`, summing duplicates.
    pub fn from_terms(g: u32, terms: impl IntoIterator<Item = (Mono, Scalar)>) -> Laurent {
        assert!(g >= 1, "granularity must be positive");
        let mut map: BTreeMap<Mono, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        Laurent::from_sorted(g, map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn from_sorted(g: u32, terms: Vec<(Mono, Scalar)>) -> Laurent {
        let mut out = Laurent { g, terms };
        out.reduce_granularity();
        out
    }

    fn reduce_granularity(&mut self) {
        if self.terms.is_empty() {
            self.g = 1;
            return;
        }
        let mut d = self.g as i64;
        for (m, _) in &self.terms {
            d = d.gcd(&m.q);
            if d == 1 {
                return;
            }
        }
        if d > 1 {
            self.g /= d as u32;
            for (m, _) in &mut self.terms {
                m.q /= d;
            }
        }
    }

    /// The `q`-exponent granularity.
    pub fn granularity(&self) -> u32 {
        self.g
    }

    /// Terms as `(exponents, coefficient)` with `q` exponents in units of `1/g`.
    pub fn terms(&self) -> &[(Mono, Scalar)] {
        &self.terms
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant one.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::new(0, 0) && self.terms[0].1.is_one()
    }

    /// The single term, when the value is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(Mono, &Scalar)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((*m, c)),
            _ => None,
        }
    }

    /// The constant, when the value has no `q` or `y` dependence.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::ZERO),
            [(m, c)] if *m == Mono::new(0, 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of `q^qe y^ye` for an integer `qe`.
    pub fn coeff(&self, qe: i64, ye: i64) -> Scalar {
        self.coeff_half(Half::int(qe), ye)
    }

    /// Coefficient of `q^qe y^ye` for a half-integer `qe`.
    pub fn coeff_half(&self, qe: Half, ye: i64) -> Scalar {
        let num = qe.twice() * self.g as i64;
        if num % 2 != 0 {
            return Scalar::ZERO;
        }
        let key = Mono::new(num / 2, ye);
        match self.terms.binary_search_by(|(m, _)| m.cmp(&key)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    /// Smallest and largest `q` exponent in units of `1/g`.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.first()?.0.q;
        let hi = self.terms.last()?.0.q;
        Some((lo, hi))
    }

    /// Smallest and largest `y` exponent.
    pub fn y_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.iter().map(|(m, _)| m.y).min()?;
        let hi = self.terms.iter().map(|(m, _)| m.y).max()?;
        Some((lo, hi))
    }

    /// True when no `y` appears.
    pub fn is_y_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.y == 0)
    }

    /// True when every exponent is a nonnegative integer.
    pub fn is_polynomial(&self) -> bool {
        self.g == 1 && self.terms.iter().all(|(m, _)| m.q >= 0 && m.y >= 0)
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms
            .iter()
            .all(|(_, c)| c.is_integer() && !c.is_negative())
    }

    /// Rewrites the exponents at granularity `g2`; `g2` must be a multiple of the current one.
    pub fn rescaled_terms(&self, g2: u32) -> Result<Vec<(Mono, Scalar)>> {
        if g2 == 0 || g2 % self.g != 0 {
            return Err(Error::Granularity(self.g, g2));
        }
        let f = (g2 / self.g) as i64;
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| (Mono::new(m.q * f, m.y), c.clone()))
            .collect())
    }

    fn common_granularity(&self, other: &Laurent) -> Result<u32> {
        if other.g % self.g == 0 {
            Ok(other.g)
        } else if self.g % other.g == 0 {
            Ok(self.g)
        } else {
            Err(Error::Granularity(self.g, other.g))
        }
    }

    /// Sum, failing on incompatible granularities.
    pub fn try_add(&self, other: &Laurent) -> Result<Laurent> {
        self.combine(other, false)
    }

    /// Difference, failing on incompatible granularities.
    pub fn try_sub(&self, other: &Laurent) -> Result<Laurent> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Laurent, negate: bool) -> Result<Laurent> {
        let g = self.common_granularity(other)?;
        let a = self.rescaled_terms(g)?;
        let b = other.rescaled_terms(g)?;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i].clone());
                i += 1;
            } else if take_b {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(Laurent::from_sorted(g, out))
    }

    /// Product, failing on incompatible granularities.
    pub fn try_mul(&self, other: &Laurent) -> Result<Laurent> {
        let g = self.common_granularity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Laurent::zero());
        }
        let a = self.rescaled_terms(g)?;
        let b = other.rescaled_terms(g)?;
        if a.len() == 1 || b.len() == 1 {
            let (single, many) = if a.len() == 1 {
                (&a[0], &b)
            } else {
                (&b[0], &a)
            };
            let out = many
                .iter()
                .map(|(m, c)| (*m + single.0, c * &single.1))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            return Ok(Laurent::from_sorted(g, out));
        }
        let (aq0, aq1) = (a[0].0.q, a[a.len() - 1].0.q);
        let (bq0, bq1) = (b[0].0.q, b[b.len() - 1].0.q);
        let ay0 = a.iter().map(|t| t.0.y).min().unwrap_or(0);
        let ay1 = a.iter().map(|t| t.0.y).max().unwrap_or(0);
        let by0 = b.iter().map(|t| t.0.y).min().unwrap_or(0);
        let by1 = b.iter().map(|t| t.0.y).max().unwrap_or(0);
        let (q0, y0) = (aq0 + bq0, ay0 + by0);
        let qw = aq1 + bq1 - q0 + 1;
        let yw = ay1 + by1 - y0 + 1;
        if qw.saturating_mul(yw) <= DENSE_LIMIT {
            let mut acc = vec![Scalar::ZERO; (qw * yw) as usize];
            for (ma, ca) in &a {
                for (mb, cb) in &b {
                    let idx = ((ma.q + mb.q - q0) * yw + (ma.y + mb.y - y0)) as usize;
                    acc[idx] += &(ca * cb);
                }
            }
            let mut out = Vec::new();
            for (idx, c) in acc.into_iter().enumerate() {
                if !c.is_zero() {
                    let idx = idx as i64;
                    out.push((Mono::new(q0 + idx / yw, y0 + idx % yw), c));
                }
            }
            Ok(Laurent::from_sorted(g, out))
        } else {
            let mut map: BTreeMap<Mono, Scalar> = BTreeMap::new();
            for (ma, ca) in &a {
                for (mb, cb) in &b {
                    *map.entry(*ma + *mb).or_default() += &(ca * cb);
                }
            }
            Ok(Laurent::from_sorted(
                g,
                map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            ))
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Scalar) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            g: self.g,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by `q^qe y^ye` (integer `qe`).
    pub fn shift(&self, qe: i64, ye: i64) -> Laurent {
        let f = self.g as i64;
        Laurent::from_sorted(
            self.g,
            self.terms
                .iter()
                .map(|(m, c)| (Mono::new(m.q + qe * f, m.y + ye), c.clone()))
                .collect(),
        )
    }

    /// Integer power.
    pub fn pow(&self, e: u32) -> Laurent {
        let mut acc = Laurent::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, failing with [`Error::NotDivisible`] when a remainder is left.
    pub fn divide_exact(&self, d: &Laurent) -> Result<Laurent> {
        if d.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Laurent::zero());
        }
        let g = self.common_granularity(d)?;
        let f = self.rescaled_terms(g)?;
        let dv = d.rescaled_terms(g)?;
        if let [(m, c)] = dv.as_slice() {
            let inv = c.recip().expect("nonzero coefficient");
            let out = f.iter().map(|(mf, cf)| (*mf - *m, cf * &inv)).collect();
            return Ok(Laurent::from_sorted(g, out));
        }
        let fy = (
            f.iter().map(|t| t.0.y).min().unwrap(),
            f.iter().map(|t| t.0.y).max().unwrap(),
        );
        let dy = (
            dv.iter().map(|t| t.0.y).min().unwrap(),
            dv.iter().map(|t| t.0.y).max().unwrap(),
        );
        let qbox = (
            f[0].0.q - dv[0].0.q,
            f[f.len() - 1].0.q - dv[dv.len() - 1].0.q,
        );
        let ybox = (fy.0 - dy.0, fy.1 - dy.1);
        let (lead_m, lead_c) = dv[dv.len() - 1].clone();
        let lead_inv = lead_c.recip().expect("nonzero coefficient");
        let mut rem: BTreeMap<Mono, Scalar> = f.into_iter().collect();
        let mut quot = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            let tm = m - lead_m;
            if tm.q < qbox.0 || tm.q > qbox.1 || tm.y < ybox.0 || tm.y > ybox.1 {
                return Err(Error::NotDivisible);
            }
            let tc = c * &lead_inv;
            for (md, cd) in &dv {
                let key = *md + tm;
                let delta = cd * &tc;
                let e = rem.entry(key).or_default();
                *e -= &delta;
                if e.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((tm, tc));
        }
        quot.reverse();
        Ok(Laurent::from_sorted(g, quot))
    }

    /// Applies `q -> q^-1`.
    pub fn q_inverse(&self) -> Laurent {
        Laurent::from_terms(
            self.g,
            self.terms
                .iter()
                .map(|(m, c)| (Mono::new(-m.q, m.y), c.clone())),
        )
    }

    /// Applies `q -> q^m` for a positive integer `m`.
    pub fn q_power(&self, m: u32) -> Laurent {
        Laurent::from_sorted(
            self.g,
            self.terms
                .iter()
                .map(|(mo, c)| (Mono::new(mo.q * m as i64, mo.y), c.clone()))
                .collect(),
        )
    }

    /// Applies `y -> y^-1`.
    pub fn y_inverse(&self) -> Laurent {
        Laurent::from_terms(
            self.g,
            self.terms
                .iter()
                .map(|(m, c)| (Mono::new(m.q, -m.y), c.clone())),
        )
    }

    /// Sets `q = 1`, leaving a Laurent polynomial in `y`.
    pub fn eval_q_one(&self) -> Laurent {
        Laurent::from_terms(
            1,
            self.terms
                .iter()
                .map(|(m, c)| (Mono::new(0, m.y), c.clone())),
        )
    }

    /// Sets `y = s` for a nonzero scalar `s`.
    pub fn eval_y(&self, s: &Scalar) -> Result<Laurent> {
        let inv = s
            .recip()
            .ok_or_else(|| Error::Domain("y = 0 in a Laurent value".into()))?;
        Ok(Laurent::from_terms(
            self.g,
            self.terms.iter().map(|(m, c)| {
                let f = if m.y >= 0 {
                    s.pow(m.y as u32)
                } else {
                    inv.pow((-m.y) as u32)
                };
                (Mono::new(m.q, 0), c * &f)
            }),
        ))
    }

    /// Sets `q = 1` and `y = 1`.
    pub fn eval_one(&self) -> Scalar {
        self.terms.iter().fold(Scalar::ZERO, |acc, (_, c)| acc + c)
    }

    /// Applies `y -> sign * q^a` together with `q -> q^b`.
    pub fn substitute_y_q(&self, sign: i64, a: Half, b: Half) -> Laurent {
        let g2 = 2 * self.g;
        Laurent::from_terms(
            g2,
            self.terms.iter().map(|(m, c)| {
                let qe = m.q * b.twice() + m.y * a.twice() * self.g as i64;
                let c = if sign < 0 && m.y.rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                };
                (Mono::new(qe, 0), c)
            }),
        )
    }

    /// Drops every term whose `q` exponent is at least `k`.
    pub fn truncate_q(&self, k: i64) -> Laurent {
        let bound = k * self.g as i64;
        Laurent::from_sorted(
            self.g,
            self.terms
                .iter()
                .filter(|(m, _)| m.q < bound)
                .cloned()
                .collect(),
        )
    }

    /// Renders with a caller-chosen name for the `y` variable.
    pub fn display_with(&self, yname: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            let has_vars = m.q != 0 || m.y != 0;
            if !abs.is_one() || !has_vars {
                factors.push(abs.to_string());
            }
            if m.q != 0 {
                let g = self.g as i64;
                let d = m.q.gcd(&g);
                factors.push(if d == g {
                    power("q", &(m.q / g).to_string())
                } else {
                    format!("q^({}/{})", m.q / d, g / d)
                });
            }
            if m.y != 0 {
                factors.push(power(yname, &m.y.to_string()));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parses the text form produced by `Display`, e.g. `"1 - 2*q^3*y^-1 + q^(1/2)"`.
    pub fn parse(s: &str) -> Result<Laurent> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        let mut acc = Laurent::zero();
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad("empty input"));
        }
        let mut i = 0;
        while i < chars.len() {
            let mut sign = Scalar::ONE;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = Scalar::Int(-1);
                }
                i += 1;
            }
            let start = i;
            let mut depth = 0;
            while i < chars.len() {
                match chars[i] {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    '+' | '-' if depth == 0 && i > start && chars[i - 1] != '^' => break,
                    _ => {}
                }
                i += 1;
            }
            let term: String = chars[start..i].iter().collect();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut value = Laurent::constant(sign);
            for factor in term.split('*') {
                let f = parse_factor(factor).ok_or_else(|| bad("bad factor"))?;
                value = value.try_mul(&f)?;
            }
            acc = acc.try_add(&value)?;
        }
        Ok(acc)
    }
}

fn power(var: &str, e: &str) -> String {
    if e == "1" {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

fn parse_factor(f: &str) -> Option<Laurent> {
    let (var, exp) = match f.split_once('^') {
        Some((v, e)) => (v, Some(e.trim_start_matches('(').trim_end_matches(')'))),
        None => (f, None),
    };
    match var {
        "q" => {
            let e: Half = exp.unwrap_or("1").parse().ok()?;
            Some(Laurent::q_pow(e))
        }
        "y" | "a" => {
            let e: i64 = exp.unwrap_or("1").parse().ok()?;
            Some(Laurent::y(e))
        }
        _ if exp.is_none() => f.parse::<Scalar>().ok().map(Laurent::constant),
        _ => None,
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("y"))
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl Default for Laurent {
    fn default() -> Self {
        Laurent::zero()
    }
}

impl From<Scalar> for Laurent {
    fn from(c: Scalar) -> Self {
        Laurent::constant(c)
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::constant(c)
    }
}

macro_rules! laurent_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&Laurent> for &Laurent {
            type Output = Laurent;
            /// Panics when the granularities are incompatible; use the `try_` form to recover.
            fn $method(self, rhs: &Laurent) -> Laurent {
                self.$imp(rhs).expect("incompatible granularities")
            }
        }
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                (&self).$imp(&rhs).expect("incompatible granularities")
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $method(self, rhs: &Laurent) -> Laurent {
                (&self).$imp(rhs).expect("incompatible granularities")
            }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $method(self, rhs: Laurent) -> Laurent {
                self.$imp(&rhs).expect("incompatible granularities")
            }
        }
    };
}

laurent_binop!(Add, add, try_add);
laurent_binop!(Sub, sub, try_sub);
laurent_binop!(Mul, mul, try_mul);

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            g: self.g,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

/// `[x]_q = (1 - q^x) / (1 - q)` for a nonnegative integer `x`.
///
/// A genuinely half-integral `x` has no Laurent-polynomial value and yields
/// [`Error::NotDivisible`]; negative `x` yields [`Error::Domain`].
pub fn qint(x: Half) -> Result<Laurent> {
    if x < Half::ZERO {
        return Err(Error::Domain(format!("q-integer of negative argument {x}")));
    }
    match x.as_integer() {
        Some(n) => Ok(qint_n(n as u64)),
        None => Err(Error::NotDivisible),
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn qint_n(n: u64) -> Laurent {
    Laurent::from_sorted(
        1,
        (0..n as i64)
            .map(|i| (Mono::new(i, 0), Scalar::ONE))
            .collect(),
    )
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: i64,
    y: i64,
    c: Scalar,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    g: u32,
    terms: Vec<TermJson>,
}

impl Laurent {
    fn to_json_struct(&self, g: u32) -> Result<LaurentJson> {
        Ok(LaurentJson {
            g,
            terms: self
                .rescaled_terms(g)?
                .into_iter()
                .map(|(m, c)| TermJson { q: m.q, y: m.y, c })
                .collect(),
        })
    }

    /// Canonical JSON, optionally at a coarser-than-minimal granularity.
    pub fn to_json_value(&self, g: Option<u32>) -> Result<serde_json::Value> {
        let s = self.to_json_struct(g.unwrap_or(self.g))?;
        Ok(serde_json::to_value(s).expect("serialisable"))
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_struct(self.g)
            .expect("own granularity")
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = LaurentJson::deserialize(deserializer)?;
        if raw.g == 0 {
            return Err(serde::de::Error::custom("granularity must be positive"));
        }
        Ok(Laurent::from_terms(
            raw.g,
            raw.terms.into_iter().map(|t| (Mono::new(t.q, t.y), t.c)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn canonical_text() {
        let x = Laurent::monomial(-2, 3, -1);
        assert_eq!(x.to_string(), "-2*q^3*y^-1");
        assert_eq!(Laurent::one().to_string(), "1");
        assert_eq!(p("q + 2 - y").to_string(), "2 - y + q");
        assert_eq!(p("q^(1/2) + 1").to_string(), "1 + q^(1/2)");
        assert_eq!(Laurent::zero().to_string(), "0");
    }

    #[test]
    fn canonical_json() {
        let x = p("3/2*q^2*y - q^-1");
        let v = serde_json::to_string(&x).unwrap();
        assert_eq!(
            v,
            r#"{"g":1,"terms":[{"q":-1,"y":0,"c":"-1"},{"q":2,"y":1,"c":"3/2"}]}"#
        );
        let back: Laurent = serde_json::from_str(&v).unwrap();
        assert_eq!(back, x);
        let at2 = x.to_json_value(Some(2)).unwrap();
        assert_eq!(at2["terms"][0]["q"], -2);
        let reparsed: Laurent = serde_json::from_value(at2).unwrap();
        assert_eq!(reparsed, x);
    }

    #[test]
    fn granularity_is_minimal_and_mixes_by_divisibility() {
        let s = Laurent::q_pow(Half::halves(1));
        assert_eq!(s.granularity(), 2);
        assert_eq!((&s * &s).granularity(), 1);
        assert_eq!(&s * &s, Laurent::q(1));
        let third = Laurent::from_terms(3, [(Mono::new(1, 0), Scalar::ONE)]);
        assert_eq!(s.try_add(&third), Err(Error::Granularity(2, 3)));
        assert_eq!((&s + &Laurent::q(1)).granularity(), 2);
    }

    #[test]
    fn qint_values() {
        assert_eq!(qint(Half::int(3)).unwrap(), p("1 + q + q^2"));
        assert_eq!(qint(Half::int(0)).unwrap(), Laurent::zero());
        assert!(matches!(qint(Half::int(-1)), Err(Error::Domain(_))));
        assert_eq!(qint(Half::halves(3)), Err(Error::NotDivisible));
    }

    #[test]
    fn exact_division() {
        let a = p("1 - q^3");
        assert_eq!(a.divide_exact(&p("1 - q")).unwrap(), p("1 + q + q^2"));
        assert_eq!(
            p("1 + q").divide_exact(&p("1 - q")),
            Err(Error::NotDivisible)
        );
        let s3 = p("1 - q^(3/2)");
        assert_eq!(
            s3.divide_exact(&p("1 - q^(1/2)")).unwrap(),
            p("1 + q^(1/2) + q")
        );
        let yy = &p("1 + q*y") * &p("1 + q*y^-1");
        assert_eq!(yy.divide_exact(&p("1 + q*y^-1")).unwrap(), p("1 + q*y"));
        assert_eq!(
            p("y + 1").divide_exact(&p("y - 1")),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn substitutions() {
        let j = &p("1 + q*y") * &p("1 + q*y^-1");
        assert_eq!(
            j.substitute_y_q(-1, Half::int(0), Half::int(1)),
            p("1 - 2*q + q^2")
        );
        let h = j.substitute_y_q(-1, Half::halves(1), Half::halves(3));
        assert_eq!(h, &p("1 - q^2") * &p("1 - q"));
        assert_eq!(p("q^2 - q^-1").q_inverse(), p("q^-2 - q"));
        assert_eq!(p("2*y*q + y^-1").eval_q_one(), p("2*y + y^-1"));
        assert_eq!(p("y^-1").eval_y(&Scalar::Int(-1)).unwrap(), p("-1"));
        assert_eq!(p("3*q + q^2*y").eval_one(), Scalar::Int(4));
        assert_eq!(p("1 + q + q^5").truncate_q(2), p("1 + q"));
    }
}
