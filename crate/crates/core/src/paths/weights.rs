//! Height-dependent step weights.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::enumerate::enumerate;
use super::path::{LatticePath, PathKind, Step};
use crate::error::{Error, Result};
use crate::qcore::{qint_n, Laurent};

/// Default maximum number of paths a weight sum may visit.
pub const DEFAULT_SIZE_LIMIT: u64 = 10_000_000;

/// A sequence `A(1), A(2), ...` of step weights indexed by height.
#[derive(Clone)]
pub enum WeightSeq {
    /// Constant one.
    One,
    /// Constant zero.
    Zero,
    /// `[h + shift]_q`.
    U(u32),
    /// `1 - q^(h + shift)`.
    V(u32),
    /// `1 + y q^h` for odd `h`, `1 - q^h` for even `h`.
    J,
    /// `1 + y^-1 q^h` for odd `h`, `1 - q^h` for even `h`.
    JPrime,
    /// `-q^(floor(h/2) + 1)`.
    G1,
    /// `-q^(ceil(h/2))`.
    G2,
    /// The sequence minus one.
    MinusOne(Box<WeightSeq>),
    /// An arbitrary sequence.
    Custom(Arc<dyn Fn(u64) -> Laurent + Send + Sync>),
}

impl WeightSeq {
    /// The weight at height `h >= 1`.
    pub fn at(&self, h: u64) -> Laurent {
        let hi = h as i64;
        match self {
            WeightSeq::One => Laurent::one(),
            WeightSeq::Zero => Laurent::zero(),
            WeightSeq::U(a) => qint_n(h + *a as u64),
            WeightSeq::V(a) => Laurent::one_minus(1, hi + *a as i64, 0),
            WeightSeq::J | WeightSeq::JPrime => {
                if h % 2 == 1 {
                    let ye = if matches!(self, WeightSeq::J) { 1 } else { -1 };
                    &Laurent::one() + &Laurent::monomial(1, hi, ye)
                } else {
                    Laurent::one_minus(1, hi, 0)
                }
            }
            WeightSeq::G1 => Laurent::monomial(-1, hi / 2 + 1, 0),
            WeightSeq::G2 => Laurent::monomial(-1, (hi + 1) / 2, 0),
            WeightSeq::MinusOne(base) => &base.at(h) - &Laurent::one(),
            WeightSeq::Custom(f) => f(h),
        }
    }

    /// The sequence `A - 1`.
    pub fn minus_one(self) -> WeightSeq {
        WeightSeq::MinusOne(Box::new(self))
    }
}

impl fmt::Debug for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSeq::One => write!(f, "one"),
            WeightSeq::Zero => write!(f, "zero"),
            WeightSeq::U(0) => write!(f, "u"),
            WeightSeq::U(a) => write!(f, "u+{a}"),
            WeightSeq::V(0) => write!(f, "v"),
            WeightSeq::V(a) => write!(f, "v+{a}"),
            WeightSeq::J => write!(f, "j"),
            WeightSeq::JPrime => write!(f, "j'"),
            WeightSeq::G1 => write!(f, "g1"),
            WeightSeq::G2 => write!(f, "g2"),
            WeightSeq::MinusOne(b) => write!(f, "{b}-1"),
            WeightSeq::Custom(_) => write!(f, "custom"),
        }
    }
}

impl FromStr for WeightSeq {
    type Err = Error;

    /// Accepts `one`, `zero`, `u`, `v`, `u+a`, `v+a`, `j`, `j'`, `g1`, `g2`, each optionally followed by `-1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(base) = t.strip_suffix("-1") {
            return Ok(base.parse::<WeightSeq>()?.minus_one());
        }
        let shifted = |prefix: &str| -> Option<Result<u32>> {
            t.strip_prefix(prefix).map(|r| {
                r.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad shift in {s:?}")))
            })
        };
        if let Some(a) = shifted("u+") {
            return Ok(WeightSeq::U(a?));
        }
        if let Some(a) = shifted("v+") {
            return Ok(WeightSeq::V(a?));
        }
        Ok(match t {
            "one" => WeightSeq::One,
            "zero" => WeightSeq::Zero,
            "u" => WeightSeq::U(0),
            "v" => WeightSeq::V(0),
            "j" => WeightSeq::J,
            "j'" | "jprime" => WeightSeq::JPrime,
            "g1" => WeightSeq::G1,
            "g2" => WeightSeq::G2,
            _ => return Err(Error::Parse(format!("unknown weight sequence {s:?}"))),
        })
    }
}

/// Weights for unmarked up steps (`a`) and unmarked down steps (`b`).
#[derive(Clone, Debug)]
pub struct WeightPair {
    /// Weight of an unmarked up step ending at height `h`.
    pub a: WeightSeq,
    /// Weight of an unmarked down step starting at height `h`.
    pub b: WeightSeq,
}

impl WeightPair {
    /// Pairs two sequences.
    pub fn new(a: WeightSeq, b: WeightSeq) -> WeightPair {
        WeightPair { a, b }
    }

    /// Both sequences minus one.
    pub fn minus_one(self) -> WeightPair {
        WeightPair {
            a: self.a.minus_one(),
            b: self.b.minus_one(),
        }
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl FromStr for WeightPair {
    type Err = Error;

    /// Parses `"A,B"`, e.g. `"v-1,v-1"`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected \"A,B\", got {s:?}")))?;
        Ok(WeightPair::new(a.parse()?, b.parse()?))
    }
}

/// Product of step weights: unmarked up steps into height `h` get `A(h)`,
/// unmarked down steps out of height `h` get `B(h)`, marked steps get 1 and
/// horizontal steps get -1.
pub fn path_weight(p: &LatticePath, w: &WeightPair) -> Laurent {
    let mut acc = Laurent::one();
    let mut h: i64 = 0;
    for s in &p.steps {
        match s {
            Step::Up => acc = &acc * &w.a.at((h + 1) as u64),
            Step::Down => acc = &acc * &w.b.at(h as u64),
            Step::Flat => acc = -acc,
            Step::MarkedUp | Step::MarkedDown => {}
        }
        h += s.delta();
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Sum of [`path_weight`] over a whole family, visiting at most `limit` paths.
pub fn weight_sum(kind: PathKind, n: usize, w: &WeightPair, limit: u64) -> Result<Laurent> {
    let mut acc = Laurent::zero();
    for (count, p) in enumerate(kind, n).enumerate() {
        if count as u64 >= limit {
            return Err(Error::SizeLimit(limit));
        }
        acc = &acc + &path_weight(&p, w);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn preset_values() {
        assert_eq!(WeightSeq::G1.at(1), p("-q"));
        assert_eq!(WeightSeq::G1.at(3), p("-q^2"));
        assert_eq!(WeightSeq::G2.at(2), p("-q"));
        assert_eq!(WeightSeq::G2.at(3), p("-q^2"));
        assert_eq!(WeightSeq::J.at(3), p("1 + y*q^3"));
        assert_eq!(WeightSeq::JPrime.at(1), p("1 + y^-1*q"));
        assert_eq!(WeightSeq::V(2).at(1), p("1 - q^3"));
        assert_eq!("v-1".parse::<WeightSeq>().unwrap().at(2), p("-q^2"));
        assert_eq!("u+1".parse::<WeightSeq>().unwrap().at(1), p("1 + q"));
    }

    #[test]
    fn weight_of_a_small_path() {
        let path: LatticePath = "UuDHd".parse().unwrap();
        let w: WeightPair = "u,v".parse().unwrap();
        assert_eq!(path_weight(&path, &w), -&(&p("1") * &p("1 - q^2")));
    }

    #[test]
    fn size_limit_is_enforced() {
        let w: WeightPair = "one,one".parse().unwrap();
        assert_eq!(
            weight_sum(PathKind::Dyck, 4, &w, 10),
            Err(Error::SizeLimit(10))
        );
        assert_eq!(weight_sum(PathKind::Dyck, 4, &w, 14).unwrap(), p("14"));
    }
}
