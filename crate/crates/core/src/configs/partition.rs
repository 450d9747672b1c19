//! Partitions inside staircases, and overpartitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::Laurent;

/// All partitions whose `i`-th part is at most `m + 1 - i`, i.e. contained in the staircase
/// with rows `m, m-1, ..., 1`, as part vectors of length `m + 1` padded with zeros.
///
/// Listed in reverse lexicographic order of the padded vectors, starting with the empty partition.
pub fn partitions_in_staircase(m: usize) -> Vec<Vec<u32>> {
    let rows = m + 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; rows];
    fn rec(i: usize, rows: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == rows {
            out.push(cur.clone());
            return;
        }
        let limit = cap.min((rows - 1 - i) as u32);
        for v in 0..=limit {
            cur[i] = v;
            rec(i + 1, rows, v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, rows, u32::MAX, &mut cur, &mut out);
    out
}

/// Column lengths of a padded part vector.
pub fn transpose(parts: &[u32], len: usize) -> Vec<u32> {
    (1..=len as u32)
        .map(|j| parts.iter().filter(|&&p| p >= j).count() as u32)
        .collect()
}

/// An overpartition: parts in weakly decreasing order, where the last occurrence
/// of each value may be overlined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Overpartition {
    parts: Vec<(u32, bool)>,
}

impl Overpartition {
    /// Builds from `(value, overlined)` pairs in any order; zero parts are dropped.
    pub fn new(parts: impl IntoIterator<Item = (u32, bool)>) -> Result<Overpartition> {
        let mut v: Vec<(u32, bool)> = parts.into_iter().filter(|&(p, _)| p > 0).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for w in v.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 {
                return Err(Error::Domain(format!("part {} is overlined twice", w[0].0)));
            }
        }
        Ok(Overpartition { parts: v })
    }

    /// Parts from largest to smallest.
    pub fn parts(&self) -> &[(u32, bool)] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&(p, _)| p as u64).sum()
    }

    /// Number of overlined parts.
    pub fn overlined(&self) -> usize {
        self.parts.iter().filter(|p| p.1).count()
    }

    /// True when the underlying partition fits in the staircase with rows `k-1, ..., 1`.
    pub fn fits_staircase(&self, k: usize) -> bool {
        self.parts.len() < k.max(1)
            && self
                .parts
                .iter()
                .enumerate()
                .all(|(i, &(p, _))| p as usize + i < k)
    }

    /// `(-1)^(overlined parts) q^(size)`.
    pub fn weight(&self) -> Laurent {
        let sign = if self.overlined() % 2 == 0 { 1 } else { -1 };
        Laurent::monomial(sign, self.size() as i64, 0)
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .parts
            .iter()
            .map(|&(p, o)| if o { format!("{p}'") } else { p.to_string() })
            .collect();
        write!(f, "({})", items.join(","))
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    /// Parses the display form, e.g. `(6',4',3,3',1)`; `()` is the empty overpartition.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Ok(Overpartition::default());
        }
        let parts = body
            .split(',')
            .map(|t| {
                let t = t.trim();
                let (v, over) = match t.strip_suffix('\'') {
                    Some(v) => (v, true),
                    None => (t, false),
                };
                v.parse::<u32>()
                    .map(|v| (v, over))
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Overpartition::new(parts)
    }
}

#[derive(Serialize, Deserialize)]
struct OverpartitionJson {
    parts: Vec<u32>,
    overlined: Vec<bool>,
}

impl Serialize for Overpartition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        OverpartitionJson {
            parts: self.parts.iter().map(|p| p.0).collect(),
            overlined: self.parts.iter().map(|p| p.1).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Overpartition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = OverpartitionJson::deserialize(deserializer)?;
        if raw.parts.len() != raw.overlined.len() {
            return Err(serde::de::Error::custom(
                "parts and overlined differ in length",
            ));
        }
        Overpartition::new(raw.parts.into_iter().zip(raw.overlined))
            .map_err(serde::de::Error::custom)
    }
}

/// All overpartitions whose underlying partition fits in the staircase with rows `k-1, ..., 1`.
pub fn overpartitions_in_staircase(k: usize) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for lam in partitions_in_staircase(k.saturating_sub(1)) {
        let parts: Vec<u32> = lam.into_iter().filter(|&p| p > 0).collect();
        let mut distinct: Vec<u32> = parts.clone();
        distinct.dedup();
        for mask in 0u64..(1u64 << distinct.len()) {
            let over: Vec<u32> = distinct
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let mut marked = Vec::with_capacity(parts.len());
            for (idx, &p) in parts.iter().enumerate() {
                let last = parts.get(idx + 1) != Some(&p);
                marked.push((p, last && over.contains(&p)));
            }
            out.push(Overpartition::new(marked).expect("valid by construction"));
        }
    }
    out
}

/// Toggles the overline of the smallest (last) part; the empty overpartition is the fixed point.
pub fn overpartition_involution(mu: &Overpartition) -> Result<Overpartition> {
    let mut parts = mu.parts.clone();
    let last = parts.last_mut().ok_or(Error::FixedPoint)?;
    last.1 = !last.1;
    Overpartition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircase_partitions_are_catalan() {
        let counts: Vec<usize> = (0..6).map(|m| partitions_in_staircase(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132]);
        assert_eq!(partitions_in_staircase(1), vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn transpose_small() {
        assert_eq!(transpose(&[3, 1, 1, 0], 4), vec![3, 1, 1, 0]);
        assert_eq!(transpose(&[2, 2, 0], 3), vec![2, 2, 0]);
        assert_eq!(transpose(&[3, 0, 0], 3), vec![1, 1, 1]);
    }

    #[test]
    fn small_overpartition_family_and_involution() {
        let op2 = overpartitions_in_staircase(2);
        assert_eq!(op2.len(), 3);
        let total = op2
            .iter()
            .fold(Laurent::zero(), |acc, m| &acc + &m.weight());
        assert!(total.is_one());
        for mu in &op2 {
            match overpartition_involution(mu) {
                Ok(img) => {
                    assert_eq!(overpartition_involution(&img).unwrap(), *mu);
                    assert_eq!(img.weight(), -mu.weight());
                }
                Err(e) => {
                    assert_eq!(e, Error::FixedPoint);
                    assert!(mu.parts().is_empty());
                }
            }
        }
    }

    #[test]
    fn overline_rules() {
        assert!(Overpartition::new([(3, true), (3, true)]).is_err());
        let m = Overpartition::new([(1, true), (3, false), (3, true)]).unwrap();
        assert_eq!(m.to_string(), "(3,3',1')");
        assert!(m.fits_staircase(5));
        assert!(!m.fits_staircase(3));
        assert_eq!("(3,3',1')".parse::<Overpartition>().unwrap(), m);
        assert_eq!(
            "()".parse::<Overpartition>().unwrap(),
            Overpartition::default()
        );
        assert!("(2,x)".parse::<Overpartition>().is_err());
    }
}
