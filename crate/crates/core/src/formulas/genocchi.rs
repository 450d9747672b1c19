//! q-Genocchi numbers and the polynomials `P_k`, `Y_k` behind their closed forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::sums::one_minus_q_pow;
use crate::contfrac::{ballot, eval_s_fraction, eval_t_fraction, Family};
use crate::error::{Error, Result};
use crate::qcore::{Laurent, Mono, Scalar};

/// `P_k = sum_{i=0}^{k} (-1)^i (2i+1) q^(C(k+1,2) - C(i+1,2))`, with `P_-1 = 0`.
pub fn p_k(k: i64) -> Laurent {
    if k < 0 {
        return Laurent::zero();
    }
    let top = k * (k + 1) / 2;
    Laurent::from_terms(
        1,
        (0..=k).map(|i| {
            let c = if i % 2 == 0 { 2 * i + 1 } else { -(2 * i + 1) };
            (Mono::new(top - i * (i + 1) / 2, 0), Scalar::from(c))
        }),
    )
}

/// `q - 1`.
fn q_minus_one() -> Laurent {
    -Laurent::one_minus(1, 1, 0)
}

/// `(P_(k-1) + 2 P_k + P_(k+1)) / (q - 1)` for an arbitrary `P`.
pub fn y_k_with(p: &dyn Fn(i64) -> Laurent, k: i64) -> Result<Laurent> {
    let num = &(&p(k - 1) + &p(k).scale(&Scalar::from(2))) + &p(k + 1);
    num.divide_exact(&q_minus_one())
}

/// `Y_k = (P_(k-1) + 2 P_k + P_(k+1)) / (q - 1)`; a remainder means the division failed.
pub fn y_k(k: usize) -> Result<Laurent> {
    y_k_with(&p_k, k as i64)
}

/// The polynomials `P_0..=P_(k+1)` and `Y_0..=Y_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenocchiPair {
    /// `P_0, P_1, ...`.
    pub p: Vec<Laurent>,
    /// `Y_0, Y_1, ...`.
    pub y: Vec<Laurent>,
}

impl GenocchiPair {
    /// Computes both sequences up to `Y_k`.
    pub fn new(k: usize) -> Result<GenocchiPair> {
        let p = (0..=k as i64 + 1).map(p_k).collect();
        let y = (0..=k).map(y_k).collect::<Result<_>>()?;
        Ok(GenocchiPair { p, y })
    }
}

/// `G_(2n)`, the coefficient of `z^(n-1)` in the S-fraction with
/// `[(m+1)/2]^2` at odd and `[m/2][m/2+1]` at even places.
pub fn genocchi(n: usize) -> Result<Laurent> {
    Ok(genocchi_sequence(n)?.pop().expect("n >= 1"))
}

/// `G_2, G_4, ..., G_(2n)`.
pub fn genocchi_sequence(n: usize) -> Result<Vec<Laurent>> {
    if n == 0 {
        return Err(Error::Domain("Genocchi numbers start at n = 1".into()));
    }
    Ok(eval_s_fraction(&Family::Genocchi, n - 1)?.coeffs().to_vec())
}

/// The two closed forms of `G_(2n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenocchiForm {
    /// `(1 - q)^-(2n-2) sum_k ballot(n-1, k) Y_k`.
    GY,
    /// `(q - 1)^-(2n-1) (C_(n-1) + sum_k ballot(n, k) P_k)`.
    PK,
}

impl fmt::Display for GenocchiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenocchiForm::GY => "gy",
            GenocchiForm::PK => "pk",
        })
    }
}

impl FromStr for GenocchiForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gy" => Ok(GenocchiForm::GY),
            "pk" => Ok(GenocchiForm::PK),
            _ => Err(Error::Parse(format!("unknown Genocchi form {s:?}"))),
        }
    }
}

/// `G_(2n)` from one of its closed forms.
pub fn genocchi_rhs(n: usize, form: GenocchiForm) -> Result<Laurent> {
    if n == 0 {
        return Err(Error::Domain("Genocchi numbers start at n = 1".into()));
    }
    let b = |n: usize, k: usize| Scalar::from(ballot(n, k).expect("k <= n"));
    match form {
        GenocchiForm::GY => {
            let m = n - 1;
            let mut num = Laurent::zero();
            for k in 0..=m {
                num = &num + &y_k(k)?.scale(&b(m, k));
            }
            num.divide_exact(&one_minus_q_pow(2 * m as u32))
        }
        GenocchiForm::PK => {
            let mut num = Laurent::constant(b(n - 1, 0));
            for k in 0..=n {
                num = &num + &p_k(k as i64).scale(&b(n, k));
            }
            num.divide_exact(&q_minus_one().pow(2 * n as u32 - 1))
        }
    }
}

/// `W_k`, the coefficient of `z^k` in the T-fraction of `(1 - q)^2` times the Genocchi sequence.
pub fn w_k(k: usize) -> Result<Laurent> {
    Ok(eval_t_fraction(&Family::GenocchiScaled, k)?
        .coeff(k)
        .clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{weight_sum, PathKind, WeightPair, WeightSeq, DEFAULT_SIZE_LIMIT};

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn first_polynomials() {
        assert_eq!(p_k(-1), Laurent::zero());
        assert_eq!(p_k(0), Laurent::one());
        assert_eq!(p_k(1), p("q - 3"));
        assert_eq!(p_k(2), p("q^3 - 3*q^2 + 5"));
        assert_eq!(y_k(0).unwrap(), Laurent::one());
        assert_eq!(y_k(1).unwrap(), p("q^2 - 2*q"));
    }

    #[test]
    fn first_genocchi_numbers() {
        assert_eq!(
            genocchi_sequence(3).unwrap(),
            vec![Laurent::one(), Laurent::one(), p("2 + q")]
        );
        assert!(genocchi(0).is_err());
    }

    #[test]
    fn three_forms_agree() {
        let lhs = genocchi_sequence(8).unwrap();
        for n in 1..=8 {
            assert_eq!(
                genocchi_rhs(n, GenocchiForm::GY).unwrap(),
                lhs[n - 1],
                "n = {n}"
            );
            assert_eq!(
                genocchi_rhs(n, GenocchiForm::PK).unwrap(),
                lhs[n - 1],
                "n = {n}"
            );
        }
    }

    #[test]
    fn y_matches_w_and_paths() {
        let pair = GenocchiPair::new(8).unwrap();
        for k in 0..=8 {
            assert_eq!(pair.y[k], w_k(k).unwrap(), "k = {k}");
            assert!(pair.y[k].is_polynomial());
        }
        for k in 0..=4 {
            let paths = weight_sum(
                PathKind::MdStar,
                k,
                &WeightPair::new(WeightSeq::G1, WeightSeq::G2),
                DEFAULT_SIZE_LIMIT,
            );
            assert_eq!(pair.y[k], paths.unwrap(), "k = {k}");
        }
    }

    #[test]
    fn perturbed_p_breaks_divisibility() {
        let bad = |k: i64| {
            if k == 1 {
                &p_k(1) + &Laurent::one()
            } else {
                p_k(k)
            }
        };
        assert_eq!(y_k_with(&bad, 0), Err(Error::NotDivisible));
    }
}
