//! Three-cell miniatures along the diagonal, the local-condition family, and the
//! sign-reversing involution on it.
//!
//! The miniature at position `i` (`1 <= i <= k-1`) consists of the middle cell
//! `(k-i, i)`, the cell to its right and the cell below.  It records the arrow
//! of the top row, the arrow of the left column, and whether the bottom row or
//! the right column carries a `k`-arrow.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::config::{ArrowKind, DeltaConfig};
use crate::error::{Error, Result};

/// The local picture around one diagonal cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Miniature {
    /// Position `i`; the middle cell is `(k-i, i)`.
    pub i: usize,
    /// Whether the middle cell lies in `lambda`.
    pub middle: bool,
    /// Arrow of the top row.
    pub top: Option<ArrowKind>,
    /// Arrow of the left column.
    pub left: Option<ArrowKind>,
    /// The bottom row carries a `k`-arrow.
    pub bottom_k: bool,
    /// The right column carries a `k`-arrow.
    pub right_k: bool,
}

/// Named exceptional miniatures; the digit distinguishes the two members of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MiniatureClass {
    A0,
    A1,
    B0,
    B1,
    C0,
    C1,
    D0,
    D1,
    E0,
    E1,
    F0,
    F1,
    G0,
    G1,
    H0,
    H1,
    I0,
    I1,
}

/// Which arrow slot the involution toggles.
enum Toggle {
    Top,
    Left,
}

impl MiniatureClass {
    fn toggle(self) -> Option<Toggle> {
        use MiniatureClass::*;
        match self {
            A0 | A1 | B0 | B1 | C0 | C1 | D0 | D1 | H0 | H1 => Some(Toggle::Top),
            E0 | E1 | F0 | F1 | G0 | G1 => Some(Toggle::Left),
            I0 | I1 => None,
        }
    }
}

impl fmt::Display for MiniatureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Miniature {
    /// Reads the miniature at position `i` of `c`.
    pub fn at(c: &DeltaConfig, i: usize) -> Miniature {
        let k = c.k();
        let r = k - i;
        Miniature {
            i,
            middle: c.lam_at(r) as usize >= i,
            top: c.row_arrows()[r - 1],
            left: c.col_arrows()[i - 1],
            bottom_k: c.row_arrows()[r] == Some(ArrowKind::K),
            right_k: c.col_arrows()[i] == Some(ArrowKind::K),
        }
    }

    /// Position in the list of exceptions, if any.
    pub fn class(&self) -> Option<MiniatureClass> {
        use ArrowKind::{KMinusOne as Z, K};
        use MiniatureClass::*;
        if !self.middle {
            return None;
        }
        Some(match (self.top, self.left, self.bottom_k, self.right_k) {
            (None, None, false, false) => A0,
            (Some(Z), None, false, false) => A1,
            (None, Some(Z), false, false) => B0,
            (Some(Z), Some(Z), false, false) => B1,
            (None, None, true, false) => C0,
            (Some(Z), None, true, false) => C1,
            (None, Some(K), false, false) => D0,
            (Some(Z), Some(K), false, false) => D1,
            (None, None, false, true) => E0,
            (None, Some(Z), false, true) => E1,
            (Some(K), None, false, false) => F0,
            (Some(K), Some(Z), false, false) => F1,
            (Some(K), None, true, false) => G0,
            (Some(K), Some(Z), true, false) => G1,
            (None, Some(K), false, true) => H0,
            (Some(Z), Some(K), false, true) => H1,
            (None, None, true, true) => I0,
            (Some(K), Some(K), false, false) => I1,
            _ => return None,
        })
    }

    /// The two implications every miniature of the local-condition family satisfies.
    fn implications_hold(&self) -> bool {
        use ArrowKind::{KMinusOne as Z, K};
        let bottom_ok =
            !self.bottom_k || (self.middle && (self.left != Some(Z) || self.top == Some(K)));
        let right_ok =
            !self.right_k || (self.middle && (self.top != Some(Z) || self.left == Some(K)));
        bottom_ok && right_ok
    }
}

/// All miniatures of `c`, from the bottom one (`i = 1`) up.
pub fn miniatures(c: &DeltaConfig) -> Vec<Miniature> {
    (1..c.k()).map(|i| Miniature::at(c, i)).collect()
}

fn has_fillable_corner(c: &DeltaConfig) -> bool {
    c.outer_corners().into_iter().any(|(i, j)| {
        j <= c.k()
            && match (c.row_arrows()[i - 1], c.col_arrows()[j - 1]) {
                (Some(h), Some(v)) => {
                    (h == ArrowKind::KMinusOne || v == ArrowKind::KMinusOne)
                        && c.row_length(i).is_some_and(|l| l >= 1)
                        && c.col_length(j).is_some_and(|l| l >= 1)
                }
                _ => false,
            }
    })
}

/// Membership in the local-condition family: no fillable or forbidden corner,
/// no zero-length arrow in row or column `k`, every `k`-arrow of length one,
/// and the miniature implications.
pub fn is_delta_minus(c: &DeltaConfig) -> bool {
    let k = c.k();
    if has_fillable_corner(c)
        || c.outer_corners()
            .into_iter()
            .any(|(i, j)| c.is_forbidden_corner(i, j))
    {
        return false;
    }
    if k >= 1 && (c.row_length(k) == Some(0) || c.col_length(k) == Some(0)) {
        return false;
    }
    if c.arrow_lengths()
        .iter()
        .any(|(a, l)| a.kind == ArrowKind::K && *l != 1)
    {
        return false;
    }
    miniatures(c).iter().all(Miniature::implications_hold)
}

/// True when `c` is a configuration of size `k-1` without `(k-1)`-arrows and
/// forbidden corners, read as a size-`k` configuration whose arrows are all `(k-1)`-arrows.
pub fn is_embedded_previous(c: &DeltaConfig) -> bool {
    let k = c.k();
    if k == 0 {
        return false;
    }
    if c.lambda()[k - 1] != 0 || c.row_arrows()[k - 1].is_some() || c.col_arrows()[k - 1].is_some()
    {
        return false;
    }
    if c.lambda()
        .iter()
        .enumerate()
        .any(|(i, &p)| p as usize + i + 2 > k && p > 0)
    {
        return false;
    }
    if c.row_arrows()
        .iter()
        .chain(c.col_arrows())
        .any(|a| *a == Some(ArrowKind::K))
    {
        return false;
    }
    !c.outer_corners().into_iter().any(|(i, j)| {
        i + j <= k && j <= k && c.row_arrows()[i - 1].is_some() && c.col_arrows()[j - 1].is_some()
    })
}

/// The uppermost exceptional miniature other than the `I` pair.
pub fn toggle_site(c: &DeltaConfig) -> Option<(Miniature, MiniatureClass)> {
    miniatures(c).into_iter().rev().find_map(|m| {
        m.class()
            .filter(|cl| cl.toggle().is_some())
            .map(|cl| (m, cl))
    })
}

/// The sign-reversing involution on the local-condition family minus the embedded
/// smaller family; [`Error::FixedPoint`] on its two fixed points.
pub fn involution_f(c: &DeltaConfig) -> Result<DeltaConfig> {
    if !is_delta_minus(c) {
        return Err(Error::Domain(format!("{c} fails the local conditions")));
    }
    if is_embedded_previous(c) {
        return Err(Error::Domain(format!(
            "{c} belongs to the embedded smaller family"
        )));
    }
    let (m, class) = toggle_site(c).ok_or(Error::FixedPoint)?;
    let mut out = c.clone();
    let flip = |a: Option<ArrowKind>| match a {
        None => Some(ArrowKind::KMinusOne),
        _ => None,
    };
    match class.toggle().expect("filtered") {
        Toggle::Top => {
            let r = c.k() - m.i;
            out.rows_mut()[r - 1] = flip(m.top);
        }
        Toggle::Left => out.cols_mut()[m.i - 1] = flip(m.left),
    }
    Ok(out)
}

/// The two fixed points of [`involution_f`]: `lambda` the staircase of size `k-1`
/// and alternating length-one `k`-arrows, starting horizontal (then vertical) in row `k`.
pub fn fixed_points(k: usize) -> Vec<DeltaConfig> {
    use super::config::{Arrow, Orientation};
    if k == 0 {
        return Vec::new();
    }
    let lam: Vec<u32> = (1..k).rev().map(|p| p as u32).collect();
    [Orientation::Horizontal, Orientation::Vertical]
        .into_iter()
        .map(|first| {
            let arrows: Vec<Arrow> = (1..=k)
                .map(|t| {
                    let row = k + 1 - t;
                    let horizontal = (first == Orientation::Horizontal) == (t % 2 == 1);
                    if horizontal {
                        Arrow {
                            o: Orientation::Horizontal,
                            kind: ArrowKind::K,
                            i: row,
                        }
                    } else {
                        Arrow {
                            o: Orientation::Vertical,
                            kind: ArrowKind::K,
                            i: t,
                        }
                    }
                })
                .collect();
            DeltaConfig::new(k, &lam, &arrows).expect("valid by construction")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::config::{Arrow, Orientation, WeightScheme};
    use crate::qcore::Laurent;

    fn a(o: char, kind: ArrowKind, i: usize) -> Arrow {
        let o = if o == 'h' {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        };
        Arrow { o, kind, i }
    }

    #[test]
    fn fixed_points_for_five() {
        let fp = fixed_points(5);
        assert_eq!(fp.len(), 2);
        for c in &fp {
            assert!(is_delta_minus(c), "{c}");
            assert!(!is_embedded_previous(c));
            assert_eq!(involution_f(c), Err(Error::FixedPoint));
            assert_eq!(c.weight(WeightScheme::Q), Laurent::monomial(-1, 25, 0));
        }
        assert_eq!(fp[0].row_length(5), Some(1));
        assert_eq!(fp[0].col_length(2), Some(1));
        assert_eq!(fp[1].transpose(), fp[0]);
    }

    #[test]
    fn k8_toggle_example() {
        use ArrowKind::{KMinusOne as Z, K};
        let left = DeltaConfig::new(
            8,
            &[7, 6, 5, 2, 2, 2],
            &[
                a('h', K, 1),
                a('v', K, 7),
                a('h', K, 3),
                a('v', Z, 5),
                a('v', Z, 4),
                a('v', Z, 3),
                a('h', Z, 5),
                a('h', Z, 6),
                a('v', Z, 1),
            ],
        )
        .unwrap();
        let right = DeltaConfig::new(
            8,
            &[7, 6, 5, 2, 2, 2],
            &[
                a('h', K, 1),
                a('v', K, 7),
                a('h', K, 3),
                a('v', Z, 4),
                a('v', Z, 3),
                a('h', Z, 5),
                a('h', Z, 6),
                a('v', Z, 1),
            ],
        )
        .unwrap();
        assert!(is_delta_minus(&left) && is_delta_minus(&right));
        let (m, class) = toggle_site(&left).unwrap();
        assert_eq!((m.i, class), (5, MiniatureClass::F1));
        assert_eq!(involution_f(&left).unwrap(), right);
        assert_eq!(involution_f(&right).unwrap(), left);
    }
}
