//! Half configurations (horizontal arrows only) and their bijection with overpartitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::config::{Arrow, ArrowKind, DeltaConfig, Orientation};
use super::partition::Overpartition;
use crate::error::{Error, Result};
use crate::paths::{LatticePath, Step};
use crate::qcore::Laurent;

/// A partition inside `delta_(k-1)` with horizontal arrows filling whole rows of
/// `delta_k / lambda`, none of them starting at an outer corner.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfConfig {
    k: usize,
    lam: Vec<u32>,
    arrows: Vec<bool>,
}

impl HalfConfig {
    /// Validates and builds a half configuration; `rows` lists the arrow rows (from 1).
    pub fn new(k: usize, partition: &[u32], rows: &[usize]) -> Result<HalfConfig> {
        let arrows: Vec<Arrow> = rows
            .iter()
            .map(|&i| Arrow {
                o: Orientation::Horizontal,
                kind: ArrowKind::K,
                i,
            })
            .collect();
        let c = DeltaConfig::new(k, partition, &arrows)?;
        let mut flags = vec![false; k];
        for &i in rows {
            if i < 2 || c.lam_at(i - 1) != c.lam_at(i) {
                return Err(Error::Domain(format!(
                    "the arrow in row {i} starts at an outer corner"
                )));
            }
            flags[i - 1] = true;
        }
        Ok(HalfConfig {
            k,
            lam: c.lambda().to_vec(),
            arrows: flags,
        })
    }

    /// Staircase size.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Parts of `lambda`, padded to length `k`.
    pub fn lambda(&self) -> &[u32] {
        &self.lam
    }

    /// Rows (from 1) holding an arrow.
    pub fn arrow_rows(&self) -> Vec<usize> {
        (1..=self.k).filter(|&i| self.arrows[i - 1]).collect()
    }

    /// Length of the arrow in row `i`, which fills the row of `delta_k / lambda`.
    pub fn arrow_length(&self, i: usize) -> Option<u64> {
        self.arrows[i - 1].then(|| (self.k + 1 - i) as u64 - self.lam[i - 1] as u64)
    }

    /// `(-1)^|A| q^(|lambda| + ||A||)`.
    pub fn weight(&self) -> Laurent {
        let rows = self.arrow_rows();
        let size: u64 = self.lam.iter().map(|&p| p as u64).sum();
        let total: u64 = rows
            .iter()
            .map(|&i| self.arrow_length(i).expect("arrow row"))
            .sum();
        let sign = if rows.len() % 2 == 0 { 1 } else { -1 };
        Laurent::monomial(sign, (size + total) as i64, 0)
    }

    /// The same data as a general configuration with `k`-arrows.
    pub fn to_config(&self) -> DeltaConfig {
        let arrows: Vec<Arrow> = self
            .arrow_rows()
            .into_iter()
            .map(|i| Arrow {
                o: Orientation::Horizontal,
                kind: ArrowKind::K,
                i,
            })
            .collect();
        DeltaConfig::new(self.k, &self.lam, &arrows).expect("valid by construction")
    }

    /// The border path with every down step marked and marked up steps at arrow rows.
    pub fn to_path(&self) -> LatticePath {
        let mut steps = Vec::with_capacity(2 * self.k);
        let mut x = 0;
        for i in (1..=self.k).rev() {
            while x < self.lam[i - 1] {
                x += 1;
                steps.push(Step::MarkedDown);
            }
            steps.push(if self.arrows[i - 1] {
                Step::MarkedUp
            } else {
                Step::Up
            });
        }
        while (x as usize) < self.k {
            x += 1;
            steps.push(Step::MarkedDown);
        }
        LatticePath::new(steps)
    }

    /// Inverse of [`HalfConfig::to_path`].
    pub fn from_path(p: &LatticePath) -> Result<HalfConfig> {
        if p.steps.contains(&Step::Down) {
            return Err(Error::Domain(format!("{p} has an unmarked down step")));
        }
        let c = DeltaConfig::from_marked_dyck(p)?;
        let rows: Vec<usize> = (1..=c.k())
            .filter(|&i| c.row_arrows()[i - 1].is_some())
            .collect();
        HalfConfig::new(c.k(), c.lambda(), &rows)
    }
}

impl fmt::Display for HalfConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<u32> = self.lam.iter().copied().filter(|&p| p > 0).collect();
        write!(
            f,
            "k={} lambda={parts:?} arrow rows={:?}",
            self.k,
            self.arrow_rows()
        )
    }
}

impl fmt::Debug for HalfConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HalfConfig({self})")
    }
}

impl Serialize for HalfConfig {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_config().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HalfConfig {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let c = DeltaConfig::deserialize(deserializer)?;
        let mut rows = Vec::new();
        for a in c.arrows() {
            if a.o != Orientation::Horizontal || a.kind != ArrowKind::K {
                return Err(serde::de::Error::custom(
                    "half configurations hold horizontal k-arrows only",
                ));
            }
            rows.push(a.i);
        }
        HalfConfig::new(c.k(), c.lambda(), &rows).map_err(serde::de::Error::custom)
    }
}

/// Replaces each arrow row by an overlined part equal to the full row length and
/// sorts the rows into an overpartition.
pub fn psi1(h: &HalfConfig) -> Overpartition {
    let parts = (1..=h.k).map(|i| {
        if h.arrows[i - 1] {
            ((h.k + 1 - i) as u32, true)
        } else {
            (h.lam[i - 1], false)
        }
    });
    Overpartition::new(parts).expect("arrow lengths are distinct")
}

/// Inverse of [`psi1`]: pushes overlined rows down while they still fit in `delta_k`.
pub fn phi1(mu: &Overpartition, k: usize) -> Result<HalfConfig> {
    if !mu.fits_staircase(k) {
        return Err(Error::Domain(format!(
            "{mu} does not fit in delta_{}",
            k.saturating_sub(1)
        )));
    }
    let mut slots: Vec<(u32, bool)> = mu.parts().to_vec();
    slots.resize(k, (0, false));
    loop {
        let mut changed = false;
        for r in 0..k.saturating_sub(1) {
            let (v, over) = slots[r];
            if over && !slots[r + 1].1 && (v as usize) + r < k {
                slots.swap(r, r + 1);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut lam = vec![0u32; k];
    let mut rows = Vec::new();
    for (idx, &(v, over)) in slots.iter().enumerate() {
        if over {
            if idx == 0 || v as usize != k - idx {
                return Err(Error::Domain(format!(
                    "{mu} has an overlined part that cannot fill a row"
                )));
            }
            lam[idx] = lam[idx - 1];
            rows.push(idx + 1);
        } else {
            lam[idx] = v;
        }
    }
    HalfConfig::new(k, &lam, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k7_example() {
        let h = HalfConfig::new(7, &[3, 3, 1, 1, 1], &[2, 4, 5, 7]).unwrap();
        let mu = psi1(&h);
        assert_eq!(mu.to_string(), "(6',4',3,3',1,1')");
        assert_eq!(mu.weight(), h.weight());
        assert_eq!(phi1(&mu, 7).unwrap(), h);
    }

    #[test]
    fn first_row_arrow_rejected() {
        assert!(HalfConfig::new(1, &[], &[1]).is_err());
        assert!(HalfConfig::new(3, &[1], &[2]).is_err());
        assert!(HalfConfig::new(3, &[1, 1], &[2]).is_ok());
    }

    #[test]
    fn path_round_trip() {
        let h = HalfConfig::new(7, &[3, 3, 1, 1, 1], &[2, 4, 5, 7]).unwrap();
        let p = h.to_path();
        assert_eq!(HalfConfig::from_path(&p).unwrap(), h);
        assert!(!p.has_marked_peak());
    }
}
