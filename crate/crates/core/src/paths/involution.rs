//! The marked-peak involution and the prefix/core decomposition of marked Dyck paths.

use serde::{Deserialize, Serialize};

use super::path::{LatticePath, Step};
use crate::error::{Error, Result};

/// Exchanges the leftmost horizontal step or marked peak `ud` with the other.
///
/// Paths with neither (the marked Dyck paths without marked peaks) are fixed
/// points and yield [`Error::FixedPoint`].
pub fn marked_peak_involution(p: &LatticePath) -> Result<LatticePath> {
    let s = &p.steps;
    for i in 0..s.len() {
        if s[i] == Step::Flat {
            let mut out = s[..i].to_vec();
            out.extend([Step::MarkedUp, Step::MarkedDown]);
            out.extend_from_slice(&s[i + 1..]);
            return Ok(LatticePath::new(out));
        }
        if s[i] == Step::MarkedUp && s.get(i + 1) == Some(&Step::MarkedDown) {
            let mut out = s[..i].to_vec();
            out.push(Step::Flat);
            out.extend_from_slice(&s[i + 2..]);
            return Ok(LatticePath::new(out));
        }
    }
    Err(Error::FixedPoint)
}

/// A marked Dyck path split into a Dyck prefix and a core without marked peaks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrefixCore {
    /// Unmarked path of the same length, never below zero, ending at height twice the core's half-length.
    pub prefix: LatticePath,
    /// What is left after deleting every maximal factor that is a Dyck path of marked steps.
    pub core: LatticePath,
}

/// Deletes all Dyck factors made of marked steps to get the core; the prefix
/// is the original path with the core's down steps turned into up steps.
pub fn penaud_decompose(p: &LatticePath) -> Result<PrefixCore> {
    if p.steps.contains(&Step::Flat) {
        return Err(Error::Domain("expected a marked Dyck path".into()));
    }
    let mut kept: Vec<usize> = Vec::with_capacity(p.steps.len());
    for (i, &s) in p.steps.iter().enumerate() {
        if s == Step::MarkedDown && kept.last().is_some_and(|&j| p.steps[j] == Step::MarkedUp) {
            kept.pop();
        } else {
            kept.push(i);
        }
    }
    let core = LatticePath::new(kept.iter().map(|&i| p.steps[i]).collect());
    let mut flip = vec![false; p.steps.len()];
    for &i in &kept {
        flip[i] = p.steps[i].is_down();
    }
    let prefix = LatticePath::new(
        p.steps
            .iter()
            .zip(flip)
            .map(|(s, f)| if f || s.is_up() { Step::Up } else { Step::Down })
            .collect(),
    );
    Ok(PrefixCore { prefix, core })
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use super::*;
    use crate::contfrac::ballot;
    use crate::paths::{enumerate, path_weight, PathKind, WeightPair};

    #[test]
    fn involution_pairs_and_fixed_points() {
        for n in 0..=4 {
            for p in enumerate(PathKind::MarkedSchroder, n) {
                match marked_peak_involution(&p) {
                    Ok(img) => {
                        assert!(img.is_of_kind(PathKind::MarkedSchroder, n));
                        assert_eq!(marked_peak_involution(&img).unwrap(), p);
                        let w: WeightPair = "u-1,v-1".parse().unwrap();
                        assert_eq!(path_weight(&img, &w), -path_weight(&p, &w));
                    }
                    Err(e) => {
                        assert_eq!(e, Error::FixedPoint);
                        assert!(p.is_of_kind(PathKind::MdStar, n));
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_example() {
        let p: LatticePath = "uUuddD".parse().unwrap();
        let d = penaud_decompose(&p).unwrap();
        assert_eq!(d.core.to_string(), "uUdD");
        assert_eq!(d.prefix.to_string(), "UUUDUU");
    }

    #[test]
    fn fibres_have_ballot_sizes_and_the_map_is_injective() {
        let n = 3;
        let mut seen = BTreeSet::new();
        let mut fibres: BTreeMap<LatticePath, usize> = BTreeMap::new();
        for p in enumerate(PathKind::MarkedDyck, n) {
            let d = penaud_decompose(&p).unwrap();
            let k = d.core.width() / 2;
            assert!(d.core.is_of_kind(PathKind::MdStar, k));
            assert!(d.prefix.stays_nonnegative());
            assert_eq!(d.prefix.final_height(), 2 * k as i64);
            assert!(seen.insert(d.clone()));
            *fibres.entry(d.core).or_default() += 1;
        }
        for (core, size) in fibres {
            let k = core.width() / 2;
            assert_eq!(size as u64, u64::try_from(ballot(n, k).unwrap()).unwrap());
        }
    }
}
