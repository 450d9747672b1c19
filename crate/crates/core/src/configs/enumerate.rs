//! Exhaustive and weight-truncated enumeration of configurations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::config::{ArrowKind, DeltaConfig, WeightScheme};
use super::half::HalfConfig;
use super::miniature::is_delta_minus;
use super::partition::{overpartitions_in_staircase, Overpartition};
use crate::error::{Error, Result};
use crate::qcore::{Laurent, Mono, Scalar};

/// Families of configurations that can be listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConfigFamily {
    /// Half configurations.
    Half,
    /// Only `k`-arrows, no forbidden corner.
    DeltaPlus,
    /// The local-condition family.
    DeltaMinus,
    /// Overpartitions fitting in `delta_(k-1)`.
    Overpartition,
}

impl ConfigFamily {
    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            ConfigFamily::Half => "half",
            ConfigFamily::DeltaPlus => "delta-plus",
            ConfigFamily::DeltaMinus => "delta-minus",
            ConfigFamily::Overpartition => "overpartition",
        }
    }
}

impl fmt::Display for ConfigFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConfigFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConfigFamily> {
        [
            ConfigFamily::Half,
            ConfigFamily::DeltaPlus,
            ConfigFamily::DeltaMinus,
            ConfigFamily::Overpartition,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown configuration family {s:?}")))
    }
}

/// Sums monomials by exponent before building a Laurent value.
#[derive(Default)]
pub(crate) struct MonomialSum {
    acc: BTreeMap<(i64, i64), BigInt>,
}

impl MonomialSum {
    pub(crate) fn add(&mut self, w: &Laurent) {
        for (m, c) in w.terms() {
            *self.acc.entry((m.q, m.y)).or_default() += c.to_integer().expect("integral weight");
        }
    }

    pub(crate) fn finish(self) -> Laurent {
        Laurent::from_terms(
            1,
            self.acc.into_iter().map(|((q, y), c)| {
                (
                    Mono::new(q, y),
                    Scalar::from_big(BigRational::from_integer(c)),
                )
            }),
        )
    }
}

/// Partitions inside `delta_m`, padded to `m + 1` parts, with `|lambda| <= max_size`.
fn bounded_partitions(m: usize, max_size: u64, visit: &mut dyn FnMut(&[u32])) {
    fn rec(
        i: usize,
        rows: usize,
        cap: u32,
        left: u64,
        cur: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if i == rows {
            visit(cur);
            return;
        }
        let limit = (cap as u64).min((rows - 1 - i) as u64).min(left) as u32;
        for v in 0..=limit {
            cur[i] = v;
            rec(i + 1, rows, v, left - v as u64, cur, visit);
        }
        cur[i] = 0;
    }
    let mut cur = vec![0u32; m + 1];
    rec(0, m + 1, u32::MAX, max_size, &mut cur, visit);
}

fn arrow_len(k: usize, line: usize, filled: u32, kind: ArrowKind) -> i64 {
    let cells = if kind == ArrowKind::K {
        k + 1 - line
    } else {
        k - line
    };
    cells as i64 - filled as i64
}

/// Depth-first search over arrow assignments for a fixed partition, keeping
/// `2|lambda| + ||A||` below `budget`.
struct ArrowSearch<'a> {
    k: usize,
    lam: Vec<u32>,
    lt: Vec<u32>,
    kinds: &'a [ArrowKind],
    k_length_one: bool,
    budget: i64,
    rows: Vec<Option<ArrowKind>>,
    cols: Vec<Option<ArrowKind>>,
}

impl ArrowSearch<'_> {
    fn run(&mut self, pos: usize, used: i64, visit: &mut dyn FnMut(DeltaConfig)) {
        let k = self.k;
        if pos == 2 * k {
            let c =
                DeltaConfig::from_parts(k, self.lam.clone(), self.rows.clone(), self.cols.clone());
            visit(c);
            return;
        }
        let (line, filled) = if pos < k {
            (pos + 1, self.lam[pos])
        } else {
            (pos - k + 1, self.lt[pos - k])
        };
        self.set(pos, None);
        self.run(pos + 1, used, visit);
        for &kind in self.kinds {
            let len = arrow_len(k, line, filled, kind);
            if self.k_length_one && kind == ArrowKind::K && len != 1 {
                continue;
            }
            if used + len >= self.budget {
                continue;
            }
            self.set(pos, Some(kind));
            self.run(pos + 1, used + len, visit);
        }
        self.set(pos, None);
    }

    fn set(&mut self, pos: usize, v: Option<ArrowKind>) {
        if pos < self.k {
            self.rows[pos] = v;
        } else {
            self.cols[pos - self.k] = v;
        }
    }
}

fn search(
    k: usize,
    kinds: &[ArrowKind],
    k_length_one: bool,
    budget: i64,
    visit: &mut dyn FnMut(DeltaConfig),
) {
    if k == 0 {
        visit(DeltaConfig::from_parts(0, vec![], vec![], vec![]));
        return;
    }
    let max_size = if budget == i64::MAX {
        u64::MAX
    } else {
        ((budget - 1).max(0) / 2) as u64
    };
    bounded_partitions(k - 1, max_size, &mut |lam: &[u32]| {
        let size: i64 = lam.iter().map(|&p| p as i64).sum();
        if 2 * size >= budget {
            return;
        }
        let mut s = ArrowSearch {
            k,
            lam: lam.to_vec(),
            lt: super::partition::transpose(lam, k),
            kinds,
            k_length_one,
            budget,
            rows: vec![None; k],
            cols: vec![None; k],
        };
        s.run(0, 2 * size, visit);
    });
}

fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c.saturating_mul(2 * (2 * i + 1)) / (i + 2);
    }
    c
}

fn guard(k: usize, choices: u64, limit: u64) -> Result<()> {
    let estimate = catalan(k).saturating_mul(choices.saturating_pow(2 * k as u32));
    if estimate > limit {
        return Err(Error::SizeLimit(estimate));
    }
    Ok(())
}

/// Calls `visit` on every configuration with only `k`-arrows and no forbidden corner.
pub fn for_each_delta_plus(k: usize, limit: u64, visit: &mut dyn FnMut(DeltaConfig)) -> Result<()> {
    guard(k, 2, limit)?;
    search(k, &[ArrowKind::K], false, i64::MAX, &mut |c| {
        if c.is_delta_plus() {
            visit(c)
        }
    });
    Ok(())
}

/// All configurations with only `k`-arrows and no forbidden corner.
pub fn delta_plus(k: usize, limit: u64) -> Result<Vec<DeltaConfig>> {
    let mut out = Vec::new();
    for_each_delta_plus(k, limit, &mut |c| out.push(c))?;
    Ok(out)
}

/// All configurations satisfying the local conditions.
pub fn delta_minus(k: usize, limit: u64) -> Result<Vec<DeltaConfig>> {
    guard(k, 3, limit)?;
    let mut out = Vec::new();
    search(
        k,
        &[ArrowKind::KMinusOne, ArrowKind::K],
        true,
        i64::MAX,
        &mut |c| {
            if is_delta_minus(&c) {
                out.push(c)
            }
        },
    );
    Ok(out)
}

/// All general configurations (any arrows of either kind).
pub fn general_configs(k: usize, limit: u64) -> Result<Vec<DeltaConfig>> {
    guard(k, 3, limit)?;
    let mut out = Vec::new();
    search(
        k,
        &[ArrowKind::KMinusOne, ArrowKind::K],
        false,
        i64::MAX,
        &mut |c| out.push(c),
    );
    Ok(out)
}

/// All half configurations of size `k`.
pub fn half_configs(k: usize, limit: u64) -> Result<Vec<HalfConfig>> {
    guard(k, 1, limit.saturating_mul(1u64 << k.min(60)))?;
    let mut out = Vec::new();
    if k == 0 {
        out.push(HalfConfig::new(0, &[], &[])?);
        return Ok(out);
    }
    bounded_partitions(k - 1, u64::MAX, &mut |lam: &[u32]| {
        let eligible: Vec<usize> = (2..=k).filter(|&i| lam[i - 2] == lam[i - 1]).collect();
        for mask in 0u64..(1u64 << eligible.len()) {
            let rows: Vec<usize> = eligible
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            out.push(HalfConfig::new(k, lam, &rows).expect("eligible rows"));
        }
    });
    Ok(out)
}

/// All overpartitions fitting in `delta_(k-1)`.
pub fn overpartitions(k: usize, limit: u64) -> Result<Vec<Overpartition>> {
    guard(k, 1, limit.saturating_mul(1u64 << k.min(60)))?;
    Ok(overpartitions_in_staircase(k))
}

/// Sum of a weight over the `k`-arrow family.
pub fn delta_plus_sum(k: usize, scheme: WeightScheme, limit: u64) -> Result<Laurent> {
    let mut acc = MonomialSum::default();
    for_each_delta_plus(k, limit, &mut |c| acc.add(&c.weight(scheme)))?;
    Ok(acc.finish())
}

/// Sum of a weight over the local-condition family.
pub fn delta_minus_sum(k: usize, scheme: WeightScheme, limit: u64) -> Result<Laurent> {
    let mut acc = MonomialSum::default();
    for c in delta_minus(k, limit)? {
        acc.add(&c.weight(scheme));
    }
    Ok(acc.finish())
}

/// Sum over half configurations of their weight.
pub fn half_sum(k: usize, limit: u64) -> Result<Laurent> {
    let mut acc = MonomialSum::default();
    for h in half_configs(k, limit)? {
        acc.add(&h.weight());
    }
    Ok(acc.finish())
}

/// The `k`-arrow family sum with every `q` exponent at least `below` discarded.
///
/// Only configurations with `2|lambda| + ||A|| < below` are visited, so this is
/// usable for large `k`.  Schemes whose exponent can be smaller than
/// `2|lambda| + ||A||` are rejected.
pub fn delta_plus_sum_truncated(k: usize, scheme: WeightScheme, below: i64) -> Result<Laurent> {
    if scheme == WeightScheme::Prime {
        return Err(Error::Domain(
            "truncated sums need an exponent bounded below by 2|lambda| + ||A||".into(),
        ));
    }
    let mut acc = MonomialSum::default();
    search(k, &[ArrowKind::K], false, below, &mut |c| {
        if c.is_delta_plus() {
            acc.add(&c.weight(scheme).truncate_q(below));
        }
    });
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::miniature::{involution_f, is_embedded_previous};
    use crate::configs::moves::{closure_in_order, phi, psi, Move, ScanOrder};
    use crate::configs::partition::overpartition_involution;
    use crate::configs::{phi1, psi1};
    use crate::paths::DEFAULT_SIZE_LIMIT as LIMIT;
    use std::collections::BTreeSet;

    fn gauss_sum(k: i64) -> Laurent {
        (-k..=k).fold(Laurent::zero(), |acc, i| {
            &acc + &Laurent::monomial(if i % 2 == 0 { 1 } else { -1 }, i * i, 0)
        })
    }

    #[test]
    fn small_counts() {
        assert_eq!(delta_plus(1, LIMIT).unwrap().len(), 3);
        assert_eq!(half_configs(1, LIMIT).unwrap().len(), 1);
        assert_eq!(overpartitions(2, LIMIT).unwrap().len(), 3);
        assert_eq!(delta_plus(0, LIMIT).unwrap().len(), 1);
    }

    #[test]
    fn delta_plus_sums_match_theta_values() {
        for k in 0..=4 {
            assert_eq!(
                delta_plus_sum(k, WeightScheme::Q, LIMIT).unwrap(),
                gauss_sum(k as i64),
                "k={k}"
            );
        }
        let yq = delta_plus_sum(1, WeightScheme::YQ, LIMIT).unwrap();
        assert_eq!(yq, Laurent::parse("1 + y*q + y^-1*q").unwrap());
    }

    #[test]
    fn half_sums_are_one() {
        for k in 0..=6 {
            assert!(half_sum(k, LIMIT).unwrap().is_one(), "k={k}");
        }
    }

    #[test]
    fn psi_phi_are_inverse_bijections() {
        for k in 0..=4 {
            let plus = delta_plus(k, LIMIT).unwrap();
            let minus: BTreeSet<DeltaConfig> = delta_minus(k, LIMIT).unwrap().into_iter().collect();
            let image: BTreeSet<DeltaConfig> = plus
                .iter()
                .map(|c| {
                    let d = psi(c).unwrap();
                    assert_eq!(&phi(&d).unwrap(), c);
                    d
                })
                .collect();
            assert_eq!(image.len(), plus.len());
            assert_eq!(image, minus, "k={k}");
        }
    }

    #[test]
    fn involution_f_on_small_families() {
        for k in 1..=4 {
            let mut fixed = Vec::new();
            let mut rest = MonomialSum::default();
            for c in delta_minus(k, LIMIT).unwrap() {
                if is_embedded_previous(&c) {
                    continue;
                }
                match involution_f(&c) {
                    Ok(d) => {
                        assert_eq!(involution_f(&d).unwrap(), c);
                        assert_eq!(d.weight(WeightScheme::Q), -c.weight(WeightScheme::Q));
                        rest.add(&c.weight(WeightScheme::Q));
                    }
                    Err(Error::FixedPoint) => fixed.push(c),
                    Err(e) => panic!("{e}"),
                }
            }
            assert!(rest.finish().is_zero());
            assert_eq!(fixed.len(), 2, "k={k}");
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for c in fixed {
                assert_eq!(
                    c.weight(WeightScheme::Q),
                    Laurent::monomial(sign, (k * k) as i64, 0)
                );
            }
        }
    }

    #[test]
    fn half_bijection_round_trips() {
        for k in 0..=5 {
            let mut seen = BTreeSet::new();
            for h in half_configs(k, LIMIT).unwrap() {
                let mu = psi1(&h);
                assert!(mu.fits_staircase(k) || k == 0);
                assert_eq!(mu.weight(), h.weight());
                assert_eq!(phi1(&mu, k).unwrap(), h);
                seen.insert(mu);
            }
            assert_eq!(seen.len(), overpartitions(k, LIMIT).unwrap().len());
        }
    }

    #[test]
    fn overpartition_sums_are_one() {
        for k in 1..=6 {
            let mut acc = MonomialSum::default();
            for mu in overpartitions(k, LIMIT).unwrap() {
                if let Ok(img) = overpartition_involution(&mu) {
                    assert_eq!(img.weight(), -mu.weight());
                }
                acc.add(&mu.weight());
            }
            assert!(acc.finish().is_one());
        }
    }

    #[test]
    fn closures_do_not_depend_on_scan_order() {
        for c in general_configs(3, LIMIT).unwrap() {
            for m in Move::ALL {
                assert_eq!(
                    closure_in_order(&c, m, ScanOrder::Forward),
                    closure_in_order(&c, m, ScanOrder::Reverse),
                    "{m} on {c}"
                );
            }
        }
    }

    #[test]
    fn truncated_sum_agrees_with_full_sum() {
        for k in 0..=4 {
            let full = delta_plus_sum(k, WeightScheme::YQ, LIMIT).unwrap();
            assert_eq!(
                delta_plus_sum_truncated(k, WeightScheme::YQ, 9).unwrap(),
                full.truncate_q(9)
            );
        }
    }

    #[test]
    fn guard_trips() {
        assert!(matches!(delta_plus(12, 1000), Err(Error::SizeLimit(_))));
    }
}
