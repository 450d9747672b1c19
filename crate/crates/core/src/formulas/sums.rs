//! Closed-form double sums: Touchard–Riordan, q-secant, the finite triple
//! product, theta and Gauss sums, the two-parameter moments `mu_n(a, b)` and
//! the generalized secant numbers `E_n^{a,b}`.

use serde::{Deserialize, Serialize};

use crate::contfrac::{ballot, eval_s_fraction, t_coeffs_from_s, Family};
use crate::error::{Error, Result};
use crate::qcore::{Half, Laurent, Mono, Scalar, ZSeries};

/// The finite sum `sum_{j=-k}^{k} y^j q^(k(k+1) - j^2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSum {
    /// Truncation index.
    pub k: usize,
    /// The exact value.
    pub value: Laurent,
}

impl ThetaSum {
    /// The single term `z^k y^j q^(k(k+1) - j^2)` as a coefficient of `z^k`.
    pub fn term(k: usize, j: i64) -> Laurent {
        let k = k as i64;
        Laurent::monomial(1, k * (k + 1) - j * j, j)
    }
}

/// `sum_{j=-k}^{k} y^j q^(k(k+1) - j^2)`.
pub fn theta_sum(k: usize) -> ThetaSum {
    let ki = k as i64;
    let value = Laurent::from_terms(
        1,
        (-ki..=ki).map(|j| (Mono::new(ki * (ki + 1) - j * j, j), Scalar::ONE)),
    );
    ThetaSum { k, value }
}

/// `sum_{i=-k}^{k} (-q)^(i^2)`.
pub fn gauss_sum(k: usize) -> Laurent {
    let ki = k as i64;
    Laurent::from_terms(
        1,
        (-ki..=ki).map(|i| {
            (
                Mono::new(i * i, 0),
                Scalar::from(if i % 2 == 0 { 1 } else { -1 }),
            )
        }),
    )
}

/// `(1 - q)^e`.
pub(crate) fn one_minus_q_pow(e: u32) -> Laurent {
    Laurent::one_minus(1, 1, 0).pow(e)
}

fn ballot_scalar(n: usize, k: usize) -> Scalar {
    Scalar::from(ballot(n, k).expect("k <= n"))
}

/// `sum_k ballot(n, k) term(k)`.
fn ballot_sum(n: usize, term: impl Fn(usize) -> Laurent) -> Laurent {
    (0..=n).fold(Laurent::zero(), |acc, k| {
        &acc + &term(k).scale(&ballot_scalar(n, k))
    })
}

/// `(1 - q)^-n sum_k ballot(n, k) (-1)^k q^(k(k+1)/2)`.
pub fn rhs_touchard(n: usize) -> Result<Laurent> {
    let num = ballot_sum(n, |k| {
        let k = k as i64;
        Laurent::monomial(if k % 2 == 0 { 1 } else { -1 }, k * (k + 1) / 2, 0)
    });
    num.divide_exact(&one_minus_q_pow(n as u32))
}

/// `(1 - q)^-2n sum_k ballot(n, k) sum_j (-1)^j q^(k(k+1) - j^2)`.
pub fn rhs_qsecant(n: usize) -> Result<Laurent> {
    let minus_one = Scalar::from(-1);
    let num = ballot_sum(n, |k| {
        theta_sum(k).value.eval_y(&minus_one).expect("nonzero")
    });
    num.divide_exact(&one_minus_q_pow(2 * n as u32))
}

/// `sum_k ballot(n, k) theta_sum(k)`, a Laurent polynomial in `y`.
///
/// The `y = -1` specialization is `(1 - q)^(2n)` times the q-secant number.
pub fn rhs_jtp(n: usize) -> Laurent {
    ballot_sum(n, |k| theta_sum(k).value)
}

/// `[z^n]` of the S-fraction with `[nb + a][nb - a]` at odd and `[nb]^2` at even places.
pub fn mu(n: usize, a: Half, b: Half) -> Result<Laurent> {
    Ok(mu_sequence(n, a, b)?.swap_remove(n))
}

/// `mu(0, a, b), ..., mu(n, a, b)` from a single expansion.
pub fn mu_sequence(n: usize, a: Half, b: Half) -> Result<Vec<Laurent>> {
    Ok(eval_s_fraction(&Family::Mu { a, b }, n)?.coeffs().to_vec())
}

/// `(1 - q)^-2n sum_k ballot(n, k) sum_j (-1)^j q^(aj + b(k(k+1) - j^2))`.
pub fn mu_rhs(n: usize, a: Half, b: Half) -> Result<Laurent> {
    if a < Half::ZERO {
        return Err(Error::Domain(format!("mu needs a >= 0, got a = {a}")));
    }
    let num = ballot_sum(n, |k| {
        let ki = k as i64;
        Laurent::from_terms(
            2,
            (-ki..=ki).map(|j| {
                let twice = a.twice() * j + b.twice() * (ki * (ki + 1) - j * j);
                (
                    Mono::new(twice, 0),
                    Scalar::from(if j % 2 == 0 { 1 } else { -1 }),
                )
            }),
        )
    });
    num.divide_exact(&one_minus_q_pow(2 * n as u32))
}

/// True for the parameters where `mu(n, a, b)` is a polynomial with nonnegative
/// integer coefficients: `0 <= a < b`, both integers or both half-integers.
pub fn mu_is_positive_regime(a: Half, b: Half) -> bool {
    Half::ZERO <= a && a < b && a.is_integer() == b.is_integer()
}

/// `E_n^{a,b}`: `[z^n]` of the S-fraction with `lambda_n = [a + n][b + n]`.
pub fn e_ab(n: usize, a: u32, b: u32) -> Result<Laurent> {
    Ok(e_ab_sequence(n, a, b)?.swap_remove(n))
}

/// `E_0^{a,b}, ..., E_n^{a,b}`.
pub fn e_ab_sequence(n: usize, a: u32, b: u32) -> Result<Vec<Laurent>> {
    let fam = Family::Eab {
        a: Half::int(a as i64),
        b: Half::int(b as i64),
    };
    Ok(eval_s_fraction(&fam, n)?.coeffs().to_vec())
}

/// `T_0^{a,b}, ..., T_k^{a,b}`, the unique solution of
/// `E_n = (1 - q)^-2n sum_k ballot(n, k) q^(k(k+1+a+b)) T_k(q^-1)`.
pub fn t_ab_sequence(k: usize, a: u32, b: u32) -> Result<Vec<Laurent>> {
    let scaled: Vec<Laurent> = e_ab_sequence(k, a, b)?
        .iter()
        .enumerate()
        .map(|(n, e)| e * &one_minus_q_pow(2 * n as u32))
        .collect();
    Ok(t_coeffs_from_s(&scaled)
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let i = i as i64;
            x.q_inverse().shift(i * (i + 1 + a as i64 + b as i64), 0)
        })
        .collect())
}

/// `T_k^{a,b}`.
pub fn t_ab(k: usize, a: u32, b: u32) -> Result<Laurent> {
    Ok(t_ab_sequence(k, a, b)?.swap_remove(k))
}

/// `sum_k z^k theta_sum(k)` to order `n`.
pub fn h_series(n: usize) -> ZSeries {
    ZSeries::from_fn(n, |k| theta_sum(k).value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{eval_t_fraction, Family};
    use crate::paths::{weight_sum, PathKind, WeightPair, WeightSeq, DEFAULT_SIZE_LIMIT};

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(rhs_touchard(2).unwrap(), p("2 + q"));
        assert_eq!(rhs_qsecant(2).unwrap(), p("2 + 2*q + q^2"));
        assert_eq!(theta_sum(0).value, Laurent::one());
        assert_eq!(theta_sum(1).value, p("q*y^-1 + q^2 + q*y"));
        assert_eq!(gauss_sum(0), Laurent::one());
        assert_eq!(gauss_sum(2), p("1 - 2*q + 2*q^4"));
        assert_eq!(ThetaSum::term(3, 2), p("q^8*y^2"));
    }

    #[test]
    fn closed_forms_match_dyck_sums() {
        for n in 0..=5 {
            let touchard = weight_sum(
                PathKind::Dyck,
                n,
                &WeightPair::new(WeightSeq::U(0), WeightSeq::One),
                DEFAULT_SIZE_LIMIT,
            );
            assert_eq!(rhs_touchard(n).unwrap(), touchard.unwrap());
            let secant = weight_sum(
                PathKind::Dyck,
                n,
                &WeightPair::new(WeightSeq::U(0), WeightSeq::U(0)),
                DEFAULT_SIZE_LIMIT,
            );
            assert_eq!(rhs_qsecant(n).unwrap(), secant.unwrap());
        }
    }

    #[test]
    fn closed_forms_match_fractions() {
        let t = eval_s_fraction(&Family::Touchard, 8).unwrap();
        let s = eval_s_fraction(&Family::QSecant, 8).unwrap();
        let j = eval_s_fraction(&Family::Jtp, 6).unwrap();
        for n in 0..=8 {
            assert_eq!(&rhs_touchard(n).unwrap(), t.coeff(n), "n = {n}");
            assert_eq!(&rhs_qsecant(n).unwrap(), s.coeff(n), "n = {n}");
        }
        for n in 0..=6 {
            assert_eq!(&rhs_jtp(n), j.coeff(n), "n = {n}");
            let at_minus_one = rhs_jtp(n).eval_y(&Scalar::from(-1)).unwrap();
            assert_eq!(
                at_minus_one,
                &rhs_qsecant(n).unwrap() * &one_minus_q_pow(2 * n as u32)
            );
        }
    }

    #[test]
    fn h_series_is_the_t_fraction() {
        assert_eq!(h_series(8), eval_t_fraction(&Family::Jtp, 8).unwrap());
    }

    #[test]
    fn mu_examples() {
        let h = Half::halves;
        assert_eq!(mu(2, h(0), h(2)).unwrap(), p("2 + 2*q + q^2"));
        assert_eq!(mu(1, h(1), h(3)).unwrap(), p("1 + q"));
        assert_eq!(
            mu_sequence(4, h(2), h(2)).unwrap(),
            vec![
                Laurent::one(),
                Laurent::zero(),
                Laurent::zero(),
                Laurent::zero(),
                Laurent::zero()
            ]
        );
    }

    #[test]
    fn mu_matches_rhs() {
        let pairs = [(0, 2), (0, 4), (2, 4), (2, 6), (1, 3), (3, 5)];
        for (a2, b2) in pairs {
            let (a, b) = (Half::halves(a2), Half::halves(b2));
            let lhs = mu_sequence(6, a, b).unwrap();
            for (n, l) in lhs.iter().enumerate() {
                let r = mu_rhs(n, a, b).unwrap();
                assert_eq!(l, &r, "(a, b) = ({a}, {b}), n = {n}");
                assert!(mu_is_positive_regime(a, b));
                assert!(r.has_nonnegative_integer_coefficients() && r.is_polynomial());
            }
        }
        assert!(!mu_is_positive_regime(Half::halves(1), Half::halves(2)));
        assert!(!mu_is_positive_regime(Half::int(1), Half::int(1)));
    }

    #[test]
    fn t_ab_examples() {
        for (k, t) in t_ab_sequence(5, 0, 0).unwrap().iter().enumerate() {
            assert_eq!(t, &gauss_sum(k));
        }
        assert_eq!(e_ab(1, 0, 1).unwrap(), p("1 + q"));
        assert_eq!(t_ab(0, 1, 1).unwrap(), Laurent::one());
        let tangent: Vec<Scalar> = e_ab_sequence(3, 0, 1)
            .unwrap()
            .iter()
            .map(Laurent::eval_one)
            .collect();
        assert_eq!(tangent, [1, 2, 16, 272].map(Scalar::from));
    }
}
