//! The ballot-number transform between S- and T-fraction coefficients.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qcore::{binomial, Laurent, Scalar, ZSeries};

/// `C(2n, n-k) - C(2n, n-k-1)`, the number of Dyck prefixes of length `2n` ending at height `2k`.
pub fn ballot(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::Domain(format!("ballot({n}, {k}) needs k <= n")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(binomial(2 * n, n - k) - binomial(2 * n, n - k - 1))
}

fn ballot_scalar(n: usize, k: usize) -> Scalar {
    Scalar::from(ballot(n, k).expect("k <= n"))
}

/// `mu_n = sum_k ballot(n, k) nu_k`: S-fraction coefficients from T-fraction coefficients.
pub fn s_coeffs_from_t(nu: &[Laurent]) -> Vec<Laurent> {
    (0..nu.len())
        .map(|n| {
            (0..=n).fold(Laurent::zero(), |acc, k| {
                &acc + &nu[k].scale(&ballot_scalar(n, k))
            })
        })
        .collect()
}

/// `nu_n = sum_k (-1)^(n-k) C(n+k, n-k) mu_k`, the inverse transform.
pub fn t_coeffs_from_s(mu: &[Laurent]) -> Vec<Laurent> {
    (0..mu.len())
        .map(|n| {
            (0..=n).fold(Laurent::zero(), |acc, k| {
                let mut c = Scalar::from(binomial((n + k) as i64, (n - k) as i64));
                if (n - k) % 2 == 1 {
                    c = -c;
                }
                &acc + &mu[k].scale(&c)
            })
        })
        .collect()
}

/// Residual of `sum_{n=k}^{N} ballot(n, k) u^n - (1 + z) z^k` with `u = z / (1 + z)^2`, modulo `z^(N+1)`.
pub fn verify_lagrange_identity(k: usize, order: usize) -> Result<ZSeries> {
    let one_plus_z = ZSeries::from_coeffs(vec![Laurent::one(), Laurent::one()], order);
    let u = (&one_plus_z * &one_plus_z).inverse()?.shift(1);
    let mut acc = ZSeries::zero(order);
    let mut upow = u.pow(k as u32);
    for n in k..=order {
        acc = &acc + &upow.scale(&Laurent::constant(ballot_scalar(n, k)));
        upow = &upow * &u;
    }
    Ok(&acc - &one_plus_z.shift(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{eval_s_fraction, eval_t_fraction, Family, LambdaSequence};

    #[test]
    fn ballot_numbers() {
        let row: Vec<i64> = (0..=2)
            .map(|k| ballot(2, k).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(row, vec![2, 3, 1]);
        assert!(matches!(ballot(2, 3), Err(Error::Domain(_))));
        for n in 0..8usize {
            let catalan = binomial(2 * n as i64, n as i64) / BigInt::from(n + 1);
            assert_eq!(ballot(n, 0).unwrap(), catalan);
        }
    }

    #[test]
    fn transform_links_the_two_fractions() {
        let fams: [&dyn LambdaSequence; 3] = [&Family::Touchard, &Family::Jtp, &Family::Genocchi];
        for fam in fams {
            let s = eval_s_fraction(fam, 6).unwrap();
            let t = eval_t_fraction(fam, 6).unwrap();
            assert_eq!(s_coeffs_from_t(t.coeffs()), s.coeffs());
            assert_eq!(t_coeffs_from_s(s.coeffs()), t.coeffs());
        }
    }

    #[test]
    fn lagrange_residuals_vanish() {
        for k in 0..=4 {
            assert!(verify_lagrange_identity(k, 8).unwrap().is_zero());
        }
    }
}
