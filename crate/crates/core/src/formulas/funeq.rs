//! Functional equations `f(z) = head(z) + c z f(q^m z)` and their residuals.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::genocchi::p_k;
use super::sums::h_series;
use crate::contfrac::{eval_t_fraction, Family};
use crate::error::{Error, Result};
use crate::qcore::{Laurent, Scalar, ZSeries};

/// The series whose functional equation is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FunEq {
    /// The theta double sum `sum_k z^k theta_sum(k)`.
    #[serde(rename = "H")]
    H,
    /// The T-fraction of the triple-product sequence.
    #[serde(rename = "T_JTP")]
    TJtp,
    /// `(1 + z)^-2 (1 + z sum_k (P_(k-1) + 2P_k + P_(k+1)) z^k)`.
    #[serde(rename = "F_GEN")]
    FGen,
    /// `(1 + z)^-2 (1 + (q - 1) z T(z))` for the scaled Genocchi T-fraction `T`.
    #[serde(rename = "G_GEN")]
    GGen,
}

impl FunEq {
    /// All four equations.
    pub const ALL: [FunEq; 4] = [FunEq::H, FunEq::TJtp, FunEq::FGen, FunEq::GGen];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            FunEq::H => "H",
            FunEq::TJtp => "T_JTP",
            FunEq::FGen => "F_GEN",
            FunEq::GGen => "G_GEN",
        }
    }
}

impl fmt::Display for FunEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunEq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_uppercase().replace('-', "_");
        FunEq::ALL
            .into_iter()
            .find(|e| e.name() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown functional equation {s:?}")))
    }
}

/// `1/(1 - yqz) + 1/(1 - y^-1 qz) - 1 + q^2 z f(q^2 z)`.
fn theta_rhs(f: &ZSeries) -> ZSeries {
    let n = f.order();
    let head = ZSeries::from_fn(n, |k| {
        if k == 0 {
            Laurent::one()
        } else {
            let k = k as i64;
            &Laurent::monomial(1, k, k) + &Laurent::monomial(1, k, -k)
        }
    });
    &head
        + &f.scale_argument(&Laurent::q(2))
            .shift(1)
            .scale(&Laurent::q(2))
}

/// `(1 - z)/(1 + z)^2 + q z f(q z)`.
fn genocchi_rhs_series(f: &ZSeries) -> Result<ZSeries> {
    let n = f.order();
    let head = &ZSeries::from_coeffs(vec![Laurent::one(), Laurent::constant(-1)], n)
        * &one_plus_z_inv_sq(n)?;
    Ok(&head
        + &f.scale_argument(&Laurent::q(1))
            .shift(1)
            .scale(&Laurent::q(1)))
}

fn one_plus_z_inv_sq(n: usize) -> Result<ZSeries> {
    let one_plus_z = ZSeries::from_coeffs(vec![Laurent::one(), Laurent::one()], n);
    (&one_plus_z * &one_plus_z).inverse()
}

/// `(1 + z)^-2 (1 + z sum_k (P_(k-1) + 2P_k + P_(k+1)) z^k)` to order `n` for an arbitrary `P`.
pub fn f_series_with(p: &dyn Fn(i64) -> Laurent, n: usize) -> Result<ZSeries> {
    let two = Scalar::from(2);
    let inner = ZSeries::from_fn(n, |m| {
        if m == 0 {
            return Laurent::one();
        }
        let k = m as i64 - 1;
        &(&p(k - 1) + &p(k).scale(&two)) + &p(k + 1)
    });
    Ok(&inner * &one_plus_z_inv_sq(n)?)
}

/// The series named by `id`, to order `n`.
pub fn funeq_series(id: FunEq, n: usize) -> Result<ZSeries> {
    match id {
        FunEq::H => Ok(h_series(n)),
        FunEq::TJtp => eval_t_fraction(&Family::Jtp, n),
        FunEq::FGen => f_series_with(&p_k, n),
        FunEq::GGen => {
            let t = eval_t_fraction(&Family::GenocchiScaled, n)?;
            let q_minus_one = -Laurent::one_minus(1, 1, 0);
            let inner = &ZSeries::one(n) + &t.scale(&q_minus_one).shift(1);
            Ok(&inner * &one_plus_z_inv_sq(n)?)
        }
    }
}

/// `f - rhs(f)` to order `n - 1` for a series `f` known to order `n`.
fn residual(id: FunEq, f: &ZSeries) -> Result<ZSeries> {
    let rhs = match id {
        FunEq::H | FunEq::TJtp => theta_rhs(f),
        FunEq::FGen | FunEq::GGen => genocchi_rhs_series(f)?,
    };
    Ok((f - &rhs).truncate(f.order().saturating_sub(1)))
}

/// The residual `LHS - RHS` of the functional equation of `id`, modulo `z^n`.
pub fn verify_functional_equation(id: FunEq, n: usize) -> Result<ZSeries> {
    if n == 0 {
        return Err(Error::Domain(
            "functional equations are checked to order at least 1".into(),
        ));
    }
    residual(id, &funeq_series(id, n)?)
}

/// The residual of the `F` equation when `P_k` is replaced by `p(k)`.
pub fn verify_f_equation_with(p: &dyn Fn(i64) -> Laurent, n: usize) -> Result<ZSeries> {
    if n == 0 {
        return Err(Error::Domain(
            "functional equations are checked to order at least 1".into(),
        ));
    }
    residual(FunEq::FGen, &f_series_with(p, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residuals_vanish() {
        for id in FunEq::ALL {
            let r = verify_functional_equation(id, 10).unwrap();
            assert!(r.is_zero(), "{id}: {r}");
            assert_eq!(r.order(), 9);
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let bad = |k: i64| {
            if k == 1 {
                &p_k(1) + &Laurent::one()
            } else {
                p_k(k)
            }
        };
        let r = verify_f_equation_with(&bad, 8).unwrap();
        assert_eq!(r.coeff(0), &Laurent::zero());
        assert_eq!(r.coeff(1), &Laurent::one());
        assert_eq!(r.coeff(2), &Laurent::monomial(-1, 2, 0));
        assert!(r.coeffs()[3..].iter().all(Laurent::is_zero));
    }

    #[test]
    fn names_round_trip() {
        for id in FunEq::ALL {
            assert_eq!(id.name().parse::<FunEq>().unwrap(), id);
        }
        assert_eq!("t-jtp".parse::<FunEq>().unwrap(), FunEq::TJtp);
    }
}
