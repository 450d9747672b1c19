//! Configurations of arrows in the staircase `delta_k`.
//!
//! Rows and columns are numbered from 1; row `i` of `delta_k` has `k + 1 - i`
//! cells.  A configuration is a partition `lambda` inside `delta_(k-1)` plus at
//! most one arrow per row (horizontal) and per column (vertical).  A `k`-arrow
//! fills the rest of its row or column in `delta_k`, a `(k-1)`-arrow the rest
//! in `delta_(k-1)`; lengths are therefore derived, never stored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::transpose;
use crate::error::{Error, Result};
use crate::paths::{LatticePath, Step};
use crate::qcore::Laurent;

/// Which staircase an arrow runs to the end of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArrowKind {
    /// Ends on the boundary of `delta_k`.
    #[serde(rename = "k")]
    K,
    /// Ends on the boundary of `delta_(k-1)`.
    #[serde(rename = "k-1")]
    KMinusOne,
}

/// Arrow direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// Lies in a row.
    #[serde(rename = "h")]
    Horizontal,
    /// Lies in a column.
    #[serde(rename = "v")]
    Vertical,
}

/// An arrow: orientation, kind and the row or column it lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    /// Direction.
    pub o: Orientation,
    /// Which staircase boundary it reaches.
    pub kind: ArrowKind,
    /// Row (horizontal) or column (vertical) index, from 1.
    pub i: usize,
}

/// A configuration in `delta_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaConfig {
    k: usize,
    lam: Vec<u32>,
    rows: Vec<Option<ArrowKind>>,
    cols: Vec<Option<ArrowKind>>,
}

/// Weight functions on configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightScheme {
    /// `(-1)^|A| q^(2|lambda| + ||A||)`.
    Q,
    /// The previous weight times `(-y)^(odd horizontal - odd vertical)`, counting arrows of odd length.
    YQ,
    /// `(-1)^|A| q^(2|lambda| + ||A|| + a h(A) + b v(A))` with `h`, `v` the numbers of horizontal and vertical arrows.
    AB {
        /// Extra exponent per horizontal arrow.
        a: u32,
        /// Extra exponent per vertical arrow.
        b: u32,
    },
    /// `q^|lambda|` times `-q^(1 + floor(len/2))` per horizontal and `-q^(ceil(len/2))` per vertical arrow.
    Prime,
}

impl DeltaConfig {
    /// Validates and builds a configuration from a partition and arrows.
    pub fn new(k: usize, partition: &[u32], arrows: &[Arrow]) -> Result<DeltaConfig> {
        let bad = |m: String| Err(Error::Domain(m));
        if partition.len() > k.saturating_sub(1)
            && partition.iter().skip(k.saturating_sub(1)).any(|&p| p > 0)
        {
            return bad(format!(
                "partition {partition:?} does not fit in delta_{}",
                k.saturating_sub(1)
            ));
        }
        let mut lam = vec![0u32; k];
        for (i, &p) in partition.iter().enumerate().take(k) {
            lam[i] = p;
        }
        for i in 0..k {
            if lam[i] as usize + i + 1 > k || (i > 0 && lam[i] > lam[i - 1]) {
                return bad(format!(
                    "partition {partition:?} does not fit in delta_{}",
                    k.saturating_sub(1)
                ));
            }
        }
        let mut rows = vec![None; k];
        let mut cols = vec![None; k];
        for a in arrows {
            if a.i == 0 || a.i > k {
                return bad(format!("arrow index {} out of range", a.i));
            }
            let slot = match a.o {
                Orientation::Horizontal => &mut rows[a.i - 1],
                Orientation::Vertical => &mut cols[a.i - 1],
            };
            if slot.is_some() {
                return bad(format!("two arrows share index {} ({:?})", a.i, a.o));
            }
            *slot = Some(a.kind);
        }
        Ok(DeltaConfig { k, lam, rows, cols })
    }

    pub(crate) fn from_parts(
        k: usize,
        lam: Vec<u32>,
        rows: Vec<Option<ArrowKind>>,
        cols: Vec<Option<ArrowKind>>,
    ) -> Self {
        DeltaConfig { k, lam, rows, cols }
    }

    /// Staircase size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Parts of `lambda`, padded with zeros to length `k`.
    pub fn lambda(&self) -> &[u32] {
        &self.lam
    }

    /// Nonzero parts of `lambda`.
    pub fn partition(&self) -> Vec<u32> {
        self.lam.iter().copied().filter(|&p| p > 0).collect()
    }

    /// Horizontal arrow kinds by row (index 0 is row 1).
    pub fn row_arrows(&self) -> &[Option<ArrowKind>] {
        &self.rows
    }

    /// Vertical arrow kinds by column (index 0 is column 1).
    pub fn col_arrows(&self) -> &[Option<ArrowKind>] {
        &self.cols
    }

    pub(crate) fn lam_mut(&mut self) -> &mut Vec<u32> {
        &mut self.lam
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Option<ArrowKind>> {
        &mut self.rows
    }

    pub(crate) fn cols_mut(&mut self) -> &mut Vec<Option<ArrowKind>> {
        &mut self.cols
    }

    /// All arrows, horizontal ones first, each group by index.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(kind) = r {
                out.push(Arrow {
                    o: Orientation::Horizontal,
                    kind: *kind,
                    i: i + 1,
                });
            }
        }
        for (j, c) in self.cols.iter().enumerate() {
            if let Some(kind) = c {
                out.push(Arrow {
                    o: Orientation::Vertical,
                    kind: *kind,
                    i: j + 1,
                });
            }
        }
        out
    }

    /// `lambda_i` for a row `i` from 1; zero outside `1..=k`.
    pub fn lam_at(&self, i: usize) -> u32 {
        if i == 0 || i > self.k {
            0
        } else {
            self.lam[i - 1]
        }
    }

    /// Column lengths of `lambda`.
    pub fn lambda_transpose(&self) -> Vec<u32> {
        transpose(&self.lam, self.k)
    }

    /// The mirror image across the diagonal.
    pub fn transpose(&self) -> DeltaConfig {
        DeltaConfig {
            k: self.k,
            lam: self.lambda_transpose(),
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    fn length_in(k: usize, line: usize, filled: u32, kind: ArrowKind) -> i64 {
        let cells = match kind {
            ArrowKind::K => k + 1 - line,
            ArrowKind::KMinusOne => k - line,
        };
        cells as i64 - filled as i64
    }

    /// Length of the horizontal arrow in row `i`, if any.
    pub fn row_length(&self, i: usize) -> Option<i64> {
        self.rows[i - 1].map(|kind| Self::length_in(self.k, i, self.lam[i - 1], kind))
    }

    /// Length of the vertical arrow in column `j`, if any.
    pub fn col_length(&self, j: usize) -> Option<i64> {
        let lt = self.lambda_transpose();
        self.cols[j - 1].map(|kind| Self::length_in(self.k, j, lt[j - 1], kind))
    }

    /// Lengths of all arrows in the order of [`DeltaConfig::arrows`].
    pub fn arrow_lengths(&self) -> Vec<(Arrow, i64)> {
        let lt = self.lambda_transpose();
        self.arrows()
            .into_iter()
            .map(|a| {
                let filled = match a.o {
                    Orientation::Horizontal => self.lam[a.i - 1],
                    Orientation::Vertical => lt[a.i - 1],
                };
                (a, Self::length_in(self.k, a.i, filled, a.kind))
            })
            .collect()
    }

    /// `|lambda|`.
    pub fn size(&self) -> u64 {
        self.lam.iter().map(|&p| p as u64).sum()
    }

    /// Cells `(i, j)` that can be added to `lambda` keeping a partition.
    pub fn outer_corners(&self) -> Vec<(usize, usize)> {
        (1..=self.k)
            .filter(|&i| i == 1 || self.lam[i - 2] > self.lam[i - 1])
            .map(|i| (i, self.lam[i - 1] as usize + 1))
            .collect()
    }

    /// Cells `(i, j)` of `lambda` whose removal keeps a partition.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        (1..=self.k)
            .filter(|&i| self.lam[i - 1] > 0 && (i == self.k || self.lam[i] < self.lam[i - 1]))
            .map(|i| (i, self.lam[i - 1] as usize))
            .collect()
    }

    /// True when `(i, j)` is an outer corner carrying two `k`-arrows.
    pub fn is_forbidden_corner(&self, i: usize, j: usize) -> bool {
        j <= self.k
            && self.rows[i - 1] == Some(ArrowKind::K)
            && self.cols[j - 1] == Some(ArrowKind::K)
    }

    /// Only `k`-arrows and no forbidden corner.
    pub fn is_delta_plus(&self) -> bool {
        self.rows
            .iter()
            .chain(&self.cols)
            .all(|a| *a != Some(ArrowKind::KMinusOne))
            && self
                .outer_corners()
                .into_iter()
                .all(|(i, j)| !self.is_forbidden_corner(i, j))
    }

    /// Signed `q`-weight under a scheme.
    pub fn weight(&self, scheme: WeightScheme) -> Laurent {
        let lens = self.arrow_lengths();
        let total: i64 = lens.iter().map(|(_, l)| l).sum();
        let sign = if lens.len() % 2 == 0 { 1 } else { -1 };
        let size = self.size() as i64;
        match scheme {
            WeightScheme::Q => Laurent::monomial(sign, 2 * size + total, 0),
            WeightScheme::YQ => {
                let odd = |o: Orientation| {
                    lens.iter().filter(|(a, l)| a.o == o && l % 2 != 0).count() as i64
                };
                let e = odd(Orientation::Horizontal) - odd(Orientation::Vertical);
                let s = if (lens.len() as i64 + e) % 2 == 0 {
                    1
                } else {
                    -1
                };
                Laurent::monomial(s, 2 * size + total, e)
            }
            WeightScheme::AB { a, b } => {
                let h = lens
                    .iter()
                    .filter(|(x, _)| x.o == Orientation::Horizontal)
                    .count() as i64;
                let v = lens.len() as i64 - h;
                Laurent::monomial(sign, 2 * size + total + a as i64 * h + b as i64 * v, 0)
            }
            WeightScheme::Prime => {
                let g: i64 = lens
                    .iter()
                    .map(|(x, l)| match x.o {
                        Orientation::Horizontal => 1 + l.div_euclid(2),
                        Orientation::Vertical => (l + 1).div_euclid(2),
                    })
                    .sum();
                Laurent::monomial(sign, size + g, 0)
            }
        }
    }

    /// The north-west border of `delta_k / lambda` read from the bottom left,
    /// as a marked Dyck path: row `i` gives an up step, column `j` a down step,
    /// marked exactly when that row or column carries an arrow.
    pub fn to_marked_dyck(&self) -> Result<LatticePath> {
        if self
            .rows
            .iter()
            .chain(&self.cols)
            .any(|a| *a == Some(ArrowKind::KMinusOne))
        {
            return Err(Error::Domain(
                "only configurations of k-arrows correspond to paths".into(),
            ));
        }
        let mut steps = Vec::with_capacity(2 * self.k);
        let mut x = 0usize;
        let down = |j: usize| {
            if self.cols[j - 1].is_some() {
                Step::MarkedDown
            } else {
                Step::Down
            }
        };
        for i in (1..=self.k).rev() {
            while x < self.lam[i - 1] as usize {
                x += 1;
                steps.push(down(x));
            }
            steps.push(if self.rows[i - 1].is_some() {
                Step::MarkedUp
            } else {
                Step::Up
            });
        }
        while x < self.k {
            x += 1;
            steps.push(down(x));
        }
        Ok(LatticePath::new(steps))
    }

    /// Inverse of [`DeltaConfig::to_marked_dyck`].
    pub fn from_marked_dyck(p: &LatticePath) -> Result<DeltaConfig> {
        let k = p.steps.len() / 2;
        let dyck = p.steps.iter().all(|s| s.is_up() || s.is_down())
            && p.stays_nonnegative()
            && p.final_height() == 0;
        if !dyck || p.steps.len() % 2 != 0 {
            return Err(Error::Domain(format!("{p} is not a marked Dyck path")));
        }
        let mut lam = vec![0u32; k];
        let mut rows = vec![None; k];
        let mut cols = vec![None; k];
        let (mut ups, mut x) = (0usize, 0usize);
        for s in &p.steps {
            if s.is_up() {
                let i = k - ups;
                lam[i - 1] = x as u32;
                if s.is_marked() {
                    rows[i - 1] = Some(ArrowKind::K);
                }
                ups += 1;
            } else {
                x += 1;
                if s.is_marked() {
                    cols[x - 1] = Some(ArrowKind::K);
                }
            }
        }
        Ok(DeltaConfig { k, lam, rows, cols })
    }

    /// Multi-line picture: `#` cells of `lambda`, `>` and `v` arrow cells, `+` both,
    /// `.` empty; a trailing `o` marks a horizontal arrow of length zero and a
    /// bottom line lists columns holding vertical arrows of length zero.
    pub fn render(&self) -> String {
        let k = self.k;
        let lt = self.lambda_transpose();
        let mut lines = Vec::new();
        for i in 1..=k {
            let mut line = String::new();
            for j in 1..=(k + 1 - i) {
                let in_lam = j as u32 <= self.lam[i - 1];
                let h = self.row_length(i).is_some_and(|l| {
                    j as i64 > self.lam[i - 1] as i64 && (j as i64) <= self.lam[i - 1] as i64 + l
                });
                let v = self.col_length(j).is_some_and(|l| {
                    i as i64 > lt[j - 1] as i64 && (i as i64) <= lt[j - 1] as i64 + l
                });
                line.push(match (in_lam, h, v) {
                    (true, _, _) => '#',
                    (false, true, true) => '+',
                    (false, true, false) => '>',
                    (false, false, true) => 'v',
                    _ => '.',
                });
            }
            if self.row_length(i) == Some(0) {
                line.push_str(" o");
            }
            lines.push(line);
        }
        let zero_cols: Vec<String> = (1..=k)
            .filter(|&j| self.col_length(j) == Some(0))
            .map(|j| j.to_string())
            .collect();
        if !zero_cols.is_empty() {
            lines.push(format!(
                "zero-length vertical arrows in columns {}",
                zero_cols.join(",")
            ));
        }
        lines.join("\n")
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigJson {
    k: usize,
    partition: Vec<u32>,
    arrows: Vec<Arrow>,
}

impl Serialize for DeltaConfig {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ConfigJson {
            k: self.k,
            partition: self.partition(),
            arrows: self.arrows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DeltaConfig {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = ConfigJson::deserialize(deserializer)?;
        DeltaConfig::new(raw.k, &raw.partition, &raw.arrows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for DeltaConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows()
            .iter()
            .map(|a| {
                let o = if a.o == Orientation::Horizontal {
                    'h'
                } else {
                    'v'
                };
                let kind = if a.kind == ArrowKind::K { "" } else { "'" };
                format!("{o}{}{kind}", a.i)
            })
            .collect();
        write!(
            f,
            "k={} lambda={:?} arrows=[{}]",
            self.k,
            self.partition(),
            arrows.join(" ")
        )
    }
}

impl FromStr for Arrow {
    type Err = Error;

    /// Parses `h3` (horizontal `k`-arrow in row 3) or `v2'` (vertical `(k-1)`-arrow in column 2).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad arrow {s:?}, expected e.g. h3 or v2'"));
        let t = s.trim();
        let (t, kind) = match t.strip_suffix('\'') {
            Some(rest) => (rest, ArrowKind::KMinusOne),
            None => (t, ArrowKind::K),
        };
        let o = match t.chars().next() {
            Some('h') => Orientation::Horizontal,
            Some('v') => Orientation::Vertical,
            _ => return Err(bad()),
        };
        let i = t[1..].parse().map_err(|_| bad())?;
        Ok(Arrow { o, kind, i })
    }
}

impl FromStr for DeltaConfig {
    type Err = Error;

    /// Parses the display form `k=7 lambda=[4, 2, 2] arrows=[h3 v2']`, or the JSON form.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()));
        }
        let bad = || {
            Error::Parse(format!(
                "bad configuration {s:?}, expected k=.. lambda=[..] arrows=[..]"
            ))
        };
        let rest = t.strip_prefix("k=").ok_or_else(bad)?;
        let (k, rest) = rest.split_once("lambda=").ok_or_else(bad)?;
        let (lam, arrows) = rest.split_once("arrows=").ok_or_else(bad)?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        let inner = |x: &str| {
            x.trim()
                .strip_prefix('[')
                .and_then(|x| x.strip_suffix(']'))
                .map(str::to_string)
        };
        let lam = inner(lam).ok_or_else(bad)?;
        let parts = lam
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let arrows = inner(arrows)
            .ok_or_else(bad)?
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|x| !x.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Arrow>>>()?;
        DeltaConfig::new(k, &parts, &arrows)
    }
}

impl fmt::Debug for DeltaConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeltaConfig({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn h(i: usize) -> Arrow {
        Arrow {
            o: Orientation::Horizontal,
            kind: ArrowKind::K,
            i,
        }
    }

    pub(crate) fn v(i: usize) -> Arrow {
        Arrow {
            o: Orientation::Vertical,
            kind: ArrowKind::K,
            i,
        }
    }

    fn sample() -> DeltaConfig {
        DeltaConfig::new(7, &[4, 2, 2], &[h(3), h(4), h(5), h(7), v(2), v(4), v(6)]).unwrap()
    }

    #[test]
    fn sample_weights_and_lengths() {
        let c = sample();
        assert!(c.is_delta_plus());
        assert_eq!(c.row_length(4), Some(4));
        assert_eq!(c.row_length(3), Some(3));
        assert_eq!(c.col_length(2), Some(3));
        assert_eq!(c.col_length(6), Some(2));
        assert_eq!(c.weight(WeightScheme::Q), Laurent::monomial(-1, 35, 0));
        assert_eq!(c.weight(WeightScheme::YQ), Laurent::monomial(1, 35, 1));
    }

    #[test]
    fn parses_display_and_json() {
        let c = sample();
        assert_eq!(c.to_string().parse::<DeltaConfig>().unwrap(), c);
        assert_eq!(
            serde_json::to_string(&c)
                .unwrap()
                .parse::<DeltaConfig>()
                .unwrap(),
            c
        );
        assert!("k=2 lambda=[] arrows=[x1]".parse::<DeltaConfig>().is_err());
        assert_eq!(
            "v2'".parse::<Arrow>().unwrap(),
            Arrow {
                o: Orientation::Vertical,
                kind: ArrowKind::KMinusOne,
                i: 2
            }
        );
    }

    #[test]
    fn border_path_of_the_sample() {
        let c = sample();
        let p = c.to_marked_dyck().unwrap();
        assert_eq!(p.to_string(), "uUuuDduUDdUDdD");
        assert_eq!(DeltaConfig::from_marked_dyck(&p).unwrap(), c);
    }

    #[test]
    fn json_shape() {
        let c = DeltaConfig::new(2, &[1], &[h(2)]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"k":2,"partition":[1],"arrows":[{"o":"h","kind":"k","i":2}]}"#
        );
        assert_eq!(serde_json::from_str::<DeltaConfig>(&s).unwrap(), c);
        assert!(DeltaConfig::new(2, &[2], &[]).is_err());
        assert!(DeltaConfig::new(3, &[1, 2], &[]).is_err());
        assert!(DeltaConfig::new(3, &[], &[h(1), h(1)]).is_err());
    }

    #[test]
    fn forbidden_corner_detected() {
        let c = DeltaConfig::new(1, &[], &[h(1), v(1)]).unwrap();
        assert!(!c.is_delta_plus());
        let ok = DeltaConfig::new(1, &[], &[h(1)]).unwrap();
        assert!(ok.is_delta_plus());
    }
}
