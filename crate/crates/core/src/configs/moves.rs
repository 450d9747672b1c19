//! Local moves on configurations, their closures, and the bijections built from them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::config::{ArrowKind, DeltaConfig, Orientation, WeightScheme};
use super::miniature::is_delta_minus;
use crate::error::{Error, Result};

/// One of the six local moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    /// Moves a `k`-arrow one row up (or one column left), turning it into a `(k-1)`-arrow.
    Ascend,
    /// Inverse of [`Move::Ascend`].
    Descend,
    /// Adds the outer corner where a lone `k`-arrow starts and shortens it by two.
    Shrink,
    /// Inverse of [`Move::Shrink`].
    Stretch,
    /// Adds an outer corner shared by two arrows, shortening both by one.
    Fill,
    /// Inverse of [`Move::Fill`].
    Remove,
}

impl Move {
    /// All moves.
    pub const ALL: [Move; 6] = [
        Move::Ascend,
        Move::Descend,
        Move::Shrink,
        Move::Stretch,
        Move::Fill,
        Move::Remove,
    ];

    /// The inverse move.
    pub fn inverse(self) -> Move {
        match self {
            Move::Ascend => Move::Descend,
            Move::Descend => Move::Ascend,
            Move::Shrink => Move::Stretch,
            Move::Stretch => Move::Shrink,
            Move::Fill => Move::Remove,
            Move::Remove => Move::Fill,
        }
    }

    /// Lowercase name.
    pub fn name(self) -> &'static str {
        match self {
            Move::Ascend => "ascend",
            Move::Descend => "descend",
            Move::Shrink => "shrink",
            Move::Stretch => "stretch",
            Move::Fill => "fill",
            Move::Remove => "remove",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Move> {
        Move::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown move {s:?}")))
    }
}

/// Order in which closure passes look for an applicable site.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ScanOrder {
    /// Top to bottom, then left to right.
    #[default]
    Forward,
    /// Bottom to top, then right to left.
    Reverse,
}

/// A place where a move may apply: an arrow (for the four arrow moves) or a corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Site {
    Arrow {
        cell: (usize, usize),
        o: Orientation,
        index: usize,
    },
    Corner {
        cell: (usize, usize),
    },
}

fn arrow_sites(c: &DeltaConfig) -> Vec<Site> {
    let lt = c.lambda_transpose();
    let mut sites: Vec<Site> = c
        .arrows()
        .into_iter()
        .map(|a| {
            let cell = match a.o {
                Orientation::Horizontal => (a.i, c.lam_at(a.i) as usize + 1),
                Orientation::Vertical => (lt[a.i - 1] as usize + 1, a.i),
            };
            Site::Arrow {
                cell,
                o: a.o,
                index: a.i,
            }
        })
        .collect();
    sites.sort();
    sites
}

fn sites(c: &DeltaConfig, m: Move, order: ScanOrder) -> Vec<Site> {
    let mut s = match m {
        Move::Fill => c
            .outer_corners()
            .into_iter()
            .map(|cell| Site::Corner { cell })
            .collect(),
        Move::Remove => c
            .inner_corners()
            .into_iter()
            .map(|cell| Site::Corner { cell })
            .collect(),
        _ => arrow_sites(c),
    };
    if order == ScanOrder::Reverse {
        s.reverse();
    }
    s
}

fn row_len(c: &DeltaConfig, i: usize) -> Option<i64> {
    c.row_length(i)
}

/// Applies a move to the horizontal arrow in row `i`, if it applies.
fn apply_row(c: &DeltaConfig, m: Move, i: usize) -> Option<DeltaConfig> {
    let k = c.k();
    let rows = c.row_arrows();
    let lam = |r: usize| c.lam_at(r);
    let kind = rows[i - 1]?;
    let mut out = c.clone();
    match m {
        Move::Ascend => {
            if kind != ArrowKind::K || i < 2 || lam(i - 1) != lam(i) || rows[i - 2].is_some() {
                return None;
            }
            out.rows_mut()[i - 2] = Some(ArrowKind::KMinusOne);
            out.rows_mut()[i - 1] = None;
        }
        Move::Descend => {
            if kind != ArrowKind::KMinusOne
                || i + 1 > k
                || lam(i) != lam(i + 1)
                || rows[i].is_some()
            {
                return None;
            }
            out.rows_mut()[i] = Some(ArrowKind::K);
            out.rows_mut()[i - 1] = None;
        }
        Move::Shrink => {
            let j = lam(i) as usize + 1;
            let outer = i == 1 || lam(i - 1) > lam(i);
            if kind != ArrowKind::K
                || row_len(c, i)? < 2
                || !outer
                || c.col_arrows()[j - 1].is_some()
            {
                return None;
            }
            out.lam_mut()[i - 1] += 1;
            out.rows_mut()[i - 1] = Some(ArrowKind::KMinusOne);
        }
        Move::Stretch => {
            let j = lam(i) as usize;
            let inner = j >= 1 && (i == k || lam(i + 1) < lam(i));
            if kind != ArrowKind::KMinusOne || !inner || c.col_arrows()[j - 1].is_some() {
                return None;
            }
            out.lam_mut()[i - 1] -= 1;
            out.rows_mut()[i - 1] = Some(ArrowKind::K);
        }
        Move::Fill | Move::Remove => return None,
    }
    Some(out)
}

fn apply_corner(c: &DeltaConfig, m: Move, (i, j): (usize, usize)) -> Option<DeltaConfig> {
    if j > c.k() {
        return None;
    }
    let h = c.row_arrows()[i - 1]?;
    let v = c.col_arrows()[j - 1]?;
    if h != ArrowKind::KMinusOne && v != ArrowKind::KMinusOne {
        return None;
    }
    let mut out = c.clone();
    match m {
        Move::Fill => {
            if c.row_length(i)? < 1 || c.col_length(j)? < 1 {
                return None;
            }
            out.lam_mut()[i - 1] += 1;
        }
        Move::Remove => out.lam_mut()[i - 1] -= 1,
        _ => return None,
    }
    Some(out)
}

fn apply_site(c: &DeltaConfig, m: Move, site: Site) -> Option<DeltaConfig> {
    match site {
        Site::Corner { cell } => apply_corner(c, m, cell),
        Site::Arrow {
            o: Orientation::Horizontal,
            index,
            ..
        } => apply_row(c, m, index),
        Site::Arrow {
            o: Orientation::Vertical,
            index,
            ..
        } => apply_row(&c.transpose(), m, index).map(|t| t.transpose()),
    }
}

/// Applies `m` once at the first applicable site in scan order.
pub fn apply_once(c: &DeltaConfig, m: Move, order: ScanOrder) -> Option<DeltaConfig> {
    sites(c, m, order)
        .into_iter()
        .find_map(|s| apply_site(c, m, s))
}

/// Applies `m` repeatedly until no site is applicable.
pub fn closure(c: &DeltaConfig, m: Move) -> DeltaConfig {
    closure_in_order(c, m, ScanOrder::Forward)
}

/// [`closure`] with an explicit scan order.
pub fn closure_in_order(c: &DeltaConfig, m: Move, order: ScanOrder) -> DeltaConfig {
    let mut cur = c.clone();
    while let Some(next) = apply_once(&cur, m, order) {
        cur = next;
    }
    cur
}

/// Applies a sequence of closures, returning every intermediate configuration
/// (the input first).
pub fn closure_chain(c: &DeltaConfig, moves: &[Move], order: ScanOrder) -> Vec<DeltaConfig> {
    let mut out = vec![c.clone()];
    for &m in moves {
        let next = closure_in_order(out.last().expect("nonempty"), m, order);
        out.push(next);
    }
    out
}

/// Closures applied by [`psi`], in order.
pub const PSI_STEPS: [Move; 4] = [Move::Ascend, Move::Fill, Move::Shrink, Move::Fill];

/// Closures applied by [`phi`], in order.
pub const PHI_STEPS: [Move; 4] = [Move::Remove, Move::Stretch, Move::Remove, Move::Descend];

/// The bijection from configurations with only `k`-arrows and no forbidden corner
/// to the local-condition family, with all intermediate stages.
pub fn psi_trace(c: &DeltaConfig) -> Result<Vec<DeltaConfig>> {
    if !c.is_delta_plus() {
        return Err(Error::Domain(format!(
            "{c} has a (k-1)-arrow or a forbidden corner"
        )));
    }
    let trace = closure_chain(c, &PSI_STEPS, ScanOrder::Forward);
    let out = trace.last().expect("nonempty");
    if !is_delta_minus(out) {
        return Err(Error::BijectionViolation(format!(
            "psi({c}) = {out} fails the local conditions"
        )));
    }
    check_weight(c, out)?;
    Ok(trace)
}

/// Final stage of [`psi_trace`].
pub fn psi(c: &DeltaConfig) -> Result<DeltaConfig> {
    Ok(psi_trace(c)?.pop().expect("nonempty"))
}

/// The inverse of [`psi`], with all intermediate stages.
pub fn phi_trace(c: &DeltaConfig) -> Result<Vec<DeltaConfig>> {
    if !is_delta_minus(c) {
        return Err(Error::Domain(format!("{c} fails the local conditions")));
    }
    let trace = closure_chain(c, &PHI_STEPS, ScanOrder::Forward);
    let out = trace.last().expect("nonempty");
    if !out.is_delta_plus() {
        return Err(Error::BijectionViolation(format!(
            "phi({c}) = {out} is not in the k-arrow family"
        )));
    }
    check_weight(c, out)?;
    Ok(trace)
}

/// Final stage of [`phi_trace`].
pub fn phi(c: &DeltaConfig) -> Result<DeltaConfig> {
    Ok(phi_trace(c)?.pop().expect("nonempty"))
}

fn check_weight(a: &DeltaConfig, b: &DeltaConfig) -> Result<()> {
    if a.weight(WeightScheme::Q) != b.weight(WeightScheme::Q) {
        return Err(Error::BijectionViolation(format!(
            "weight changed from {a} to {b}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::config::Arrow;

    fn arrow(o: Orientation, kind: ArrowKind, i: usize) -> Arrow {
        Arrow { o, kind, i }
    }

    fn hk(i: usize) -> Arrow {
        arrow(Orientation::Horizontal, ArrowKind::K, i)
    }
    fn vk(i: usize) -> Arrow {
        arrow(Orientation::Vertical, ArrowKind::K, i)
    }
    fn hm(i: usize) -> Arrow {
        arrow(Orientation::Horizontal, ArrowKind::KMinusOne, i)
    }
    fn vm(i: usize) -> Arrow {
        arrow(Orientation::Vertical, ArrowKind::KMinusOne, i)
    }

    fn start() -> DeltaConfig {
        DeltaConfig::new(
            8,
            &[2, 2, 2, 2, 1, 1],
            &[
                hk(8),
                hk(7),
                hk(5),
                hk(4),
                hk(2),
                vk(3),
                vk(4),
                vk(5),
                vk(7),
            ],
        )
        .unwrap()
    }

    #[test]
    fn k8_example_stage_by_stage() {
        let trace = psi_trace(&start()).unwrap();
        let ascended = DeltaConfig::new(
            8,
            &[2, 2, 2, 2, 1, 1],
            &[
                hk(8),
                hk(7),
                hk(5),
                hm(3),
                hm(1),
                vk(3),
                vk(4),
                vk(5),
                vm(6),
            ],
        )
        .unwrap();
        assert_eq!(trace[1], ascended);
        let filled = DeltaConfig::new(
            8,
            &[6, 2, 2, 2, 1, 1],
            &[
                hk(8),
                hk(7),
                hk(5),
                hm(3),
                hm(1),
                vk(3),
                vk(4),
                vk(5),
                vm(6),
            ],
        )
        .unwrap();
        assert_eq!(trace[2], filled);
        let end = DeltaConfig::new(
            8,
            &[6, 5, 5, 2, 2, 1, 1],
            &[
                hk(8),
                hm(7),
                hm(5),
                hm(3),
                hm(1),
                vm(3),
                vm(4),
                vm(5),
                vm(6),
            ],
        )
        .unwrap();
        assert_eq!(trace[4], end);
        let back = phi_trace(&end).unwrap();
        assert_eq!(back[4], start());
        assert_eq!(back[1].partition(), vec![5, 5, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn empty_config_is_fixed() {
        let e = DeltaConfig::new(3, &[], &[]).unwrap();
        assert_eq!(psi(&e).unwrap(), e);
        assert_eq!(phi(&e).unwrap(), e);
    }

    #[test]
    fn shrink_then_stretch_restores() {
        let c = DeltaConfig::new(4, &[], &[hk(1)]).unwrap();
        let s = closure(&c, Move::Shrink);
        assert_eq!(s.partition(), vec![1]);
        assert_eq!(s.row_arrows()[0], Some(ArrowKind::KMinusOne));
        assert_eq!(closure(&s, Move::Stretch), c);
    }

    #[test]
    fn move_names_round_trip() {
        for m in Move::ALL {
            assert_eq!(m.name().parse::<Move>().unwrap(), m);
            assert_eq!(m.inverse().inverse(), m);
        }
    }
}
