//! Hankel determinants of moment sequences and their product formulas.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::genocchi::{genocchi_rhs, GenocchiForm};
use super::sums::rhs_jtp;
use crate::contfrac::{Family, LambdaSequence};
use crate::error::{Error, Result};
use crate::qcore::Laurent;

/// The moment sequences whose Hankel determinants are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HankelFamily {
    /// `m_n` from the triple-product closed form.
    JtpMoments,
    /// `m_n = G_(2n+2)` from the `Y_k` closed form.
    GenocchiMoments,
}

impl fmt::Display for HankelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HankelFamily::JtpMoments => "jtp_moments",
            HankelFamily::GenocchiMoments => "genocchi_moments",
        })
    }
}

impl FromStr for HankelFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "jtp_moments" | "jtp" => Ok(HankelFamily::JtpMoments),
            "genocchi_moments" | "genocchi" => Ok(HankelFamily::GenocchiMoments),
            _ => Err(Error::Parse(format!("unknown moment family {s:?}"))),
        }
    }
}

/// The moments `m_0..=m_len-1` of a family.
pub fn moments(family: HankelFamily, len: usize) -> Result<Vec<Laurent>> {
    match family {
        HankelFamily::JtpMoments => Ok((0..len).map(rhs_jtp).collect()),
        HankelFamily::GenocchiMoments => (0..len)
            .map(|n| genocchi_rhs(n + 1, GenocchiForm::GY))
            .collect(),
    }
}

/// `det(m_(i+j+shift))_(0 <= i, j < n)` by expansion over column subsets, without division.
pub fn hankel_det(m: &[Laurent], shift: usize, n: usize) -> Result<Laurent> {
    if n == 0 {
        return Ok(Laurent::one());
    }
    if n > 16 {
        return Err(Error::Domain(format!(
            "Hankel determinant of size {n} is too large"
        )));
    }
    if m.len() < 2 * n - 1 + shift {
        return Err(Error::Domain(format!(
            "{} moments do not fill a {n}x{n} matrix",
            m.len()
        )));
    }
    let full = (1usize << n) - 1;
    let mut minors = vec![Laurent::zero(); full + 1];
    minors[full] = Laurent::one();
    for mask in (0..full).rev() {
        let row = mask.count_ones() as usize;
        let mut acc = Laurent::zero();
        let mut free_before = 0;
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            let rest = &minors[mask | (1 << c)];
            if !rest.is_zero() {
                let term = &m[row + c + shift] * rest;
                acc = if free_before % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            free_before += 1;
        }
        minors[mask] = acc;
    }
    Ok(minors.swap_remove(0))
}

fn lambda_terms(family: Family, len: usize) -> Result<Vec<Laurent>> {
    let mut out = vec![Laurent::one()];
    for i in 1..=len {
        out.push(family.term(i)?);
    }
    Ok(out)
}

/// `prod_(i=1)^(n-1) (lambda_(2i-1) lambda_(2i))^(n-i)`.
pub fn hankel_product(l: &[Laurent], n: usize) -> Laurent {
    (1..n).fold(Laurent::one(), |acc, i| {
        &acc * &(&l[2 * i - 1] * &l[2 * i]).pow((n - i) as u32)
    })
}

/// `prod_(i=1)^(n) lambda_(2i-1)^(n+1-i) lambda_(2i)^(n-i)`.
pub fn shifted_hankel_product(l: &[Laurent], n: usize) -> Laurent {
    (1..=n).fold(Laurent::one(), |acc, i| {
        &(&acc * &l[2 * i - 1].pow((n + 1 - i) as u32)) * &l[2 * i].pow((n - i) as u32)
    })
}

/// Checks the product formulas for the Hankel determinants of sizes `1..=n`
/// (triple product), or that the determinant ratios recover
/// `lambda_1..=lambda_(2n)` (Genocchi).
pub fn hankel_check(family: HankelFamily, n: usize) -> Result<bool> {
    match family {
        HankelFamily::JtpMoments => {
            let m = moments(family, 2 * n + 1)?;
            let l = lambda_terms(Family::Jtp, 2 * n)?;
            for size in 1..=n {
                if hankel_det(&m, 0, size)? != hankel_product(&l, size)
                    || hankel_det(&m, 1, size)? != shifted_hankel_product(&l, size)
                {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        HankelFamily::GenocchiMoments => {
            Ok(recover_lambdas(family, n)? == lambda_terms(Family::Genocchi, 2 * n)?[1..])
        }
    }
}

/// `lambda_1..=lambda_(2n)` from the determinant ratios
/// `det(M'_k) det(M_(k-1)) / (det(M_k) det(M'_(k-1)))` and
/// `det(M'_(k-1)) det(M_(k+1)) / (det(M_k) det(M'_k))`.
pub fn recover_lambdas(family: HankelFamily, n: usize) -> Result<Vec<Laurent>> {
    let m = moments(family, 2 * n + 1)?;
    let d: Vec<Laurent> = (0..=n + 1)
        .map(|k| hankel_det(&m, 0, k))
        .collect::<Result<_>>()?;
    let dp: Vec<Laurent> = (0..=n)
        .map(|k| hankel_det(&m, 1, k))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(2 * n);
    for k in 1..=n {
        out.push((&dp[k] * &d[k - 1]).divide_exact(&(&d[k] * &dp[k - 1]))?);
        out.push((&dp[k - 1] * &d[k + 1]).divide_exact(&(&d[k] * &dp[k]))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn small_determinants() {
        let m = [p("1"), p("2"), p("5"), p("14")];
        assert_eq!(hankel_det(&m, 0, 1).unwrap(), p("1"));
        assert_eq!(hankel_det(&m, 0, 2).unwrap(), p("1"));
        assert_eq!(hankel_det(&m, 1, 2).unwrap(), p("2*14 - 25"));
        assert!(hankel_det(&m, 0, 3).is_err());
    }

    #[test]
    fn triple_product_moments() {
        assert!(hankel_check(HankelFamily::JtpMoments, 4).unwrap());
    }

    #[test]
    fn genocchi_lambdas() {
        let l = recover_lambdas(HankelFamily::GenocchiMoments, 2).unwrap();
        assert_eq!(
            l,
            vec![
                p("1"),
                p("1 + q"),
                p("1 + 2*q + q^2"),
                p("1 + 2*q + 2*q^2 + q^3")
            ]
        );
        assert!(hankel_check(HankelFamily::GenocchiMoments, 4).unwrap());
    }
}
