//! Checks at `q = 1` against exact rational Taylor series.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::genocchi::genocchi_sequence;
use super::sums::mu_sequence;
use crate::contfrac::{eval_s_fraction, FnSequence};
use crate::error::Result;
use crate::qcore::{factorial, Half, Laurent, Scalar, ZSeries};

fn rat(n: i64, d: BigInt) -> Scalar {
    Scalar::from_big(BigRational::new(BigInt::from(n), d))
}

/// `cos(cz)` or `cosh(cz)` for a half-integer `c`, to order `n`.
fn cos_series(c: Half, hyperbolic: bool, n: usize) -> ZSeries {
    ZSeries::from_fn(n, |i| {
        if i % 2 == 1 {
            return Laurent::zero();
        }
        let m = (i / 2) as i64;
        let sign = if !hyperbolic && m % 2 == 1 { -1 } else { 1 };
        let num = sign * c.twice().pow(2 * m as u32);
        Laurent::constant(rat(
            num,
            factorial(i as u64) * BigInt::from(2).pow(2 * m as u32),
        ))
    })
}

/// `sin(cz)` for a half-integer `c`, to order `n`.
fn sin_series(c: Half, n: usize) -> ZSeries {
    ZSeries::from_fn(n, |i| {
        if i % 2 == 0 {
            return Laurent::zero();
        }
        let m = (i / 2) as i64;
        let sign = if m % 2 == 1 { -1 } else { 1 };
        let num = sign * c.twice().pow(i as u32);
        Laurent::constant(rat(
            num,
            factorial(i as u64) * BigInt::from(2).pow(i as u32),
        ))
    })
}

/// `(2n)! [z^(2n)] cos(az)/cos(bz)` for `n = 0..=max_n`.
pub fn cos_ratio_moments(a: Half, b: Half, max_n: usize) -> Result<Vec<Scalar>> {
    let order = 2 * max_n;
    let ratio = &cos_series(a, false, order) * &cos_series(b, false, order).inverse()?;
    Ok((0..=max_n).map(|n| egf_coeff(&ratio, 2 * n)).collect())
}

/// `(2n)! [z^(2n)] z tan(z/2)` for `n = 1..=max_n`.
pub fn genocchi_egf_values(max_n: usize) -> Result<Vec<Scalar>> {
    let order = 2 * max_n;
    let half = Half::halves(1);
    let tan = &sin_series(half, order) * &cos_series(half, false, order).inverse()?;
    let z_tan = tan.shift(1);
    Ok((1..=max_n).map(|n| egf_coeff(&z_tan, 2 * n)).collect())
}

fn egf_coeff(f: &ZSeries, i: usize) -> Scalar {
    let c = f.coeff(i).as_constant().unwrap_or(Scalar::ZERO);
    &c * &Scalar::from(factorial(i as u64))
}

/// Checks `mu_n(a, b)` at `q = 1` against `(2n)! [z^(2n)] cos(az)/cos(bz)` for `n <= max_n`.
pub fn egf_check_cos(a: Half, b: Half, max_n: usize) -> Result<bool> {
    let expected = cos_ratio_moments(a, b, max_n)?;
    let got: Vec<Scalar> = mu_sequence(max_n, a, b)?
        .iter()
        .map(Laurent::eval_one)
        .collect();
    Ok(got == expected)
}

/// Checks `G_(2n)` at `q = 1` against `(2n)! [z^(2n)] z tan(z/2)` for `1 <= n <= max_n`.
pub fn egf_check_genocchi(max_n: usize) -> Result<bool> {
    let expected = genocchi_egf_values(max_n)?;
    let got: Vec<Scalar> = genocchi_sequence(max_n)?
        .iter()
        .map(Laurent::eval_one)
        .collect();
    Ok(got == expected)
}

/// Both sides of the Laplace-transform identity to order `2n + 1`, with the
/// formal parameter `a` carried by the `y` slot.
///
/// The first is `cosh(az)/cosh(z)` with `z^m/m!` sent to `z^(m+1)`; the second
/// is `z K(z^2)` where `K` is the S-fraction with partial numerators
/// `-(m^2 - a^2)` at odd and `-m^2` at even places.
pub fn laplace_sides(n: usize) -> Result<(ZSeries, ZSeries)> {
    let order = 2 * n;
    let cosh_az = ZSeries::from_fn(order, |i| {
        if i % 2 == 1 {
            Laurent::zero()
        } else {
            Laurent::monomial(rat(1, factorial(i as u64)), 0, i as i64)
        }
    });
    let ratio = &cosh_az * &cos_series(Half::int(1), true, order).inverse()?;
    let lhs = ZSeries::from_fn(order + 1, |i| {
        if i == 0 {
            Laurent::zero()
        } else {
            ratio
                .coeff(i - 1)
                .scale(&Scalar::from(factorial(i as u64 - 1)))
        }
    });
    let lambda = FnSequence(|m: usize| {
        let sq = Laurent::constant((m * m) as i64);
        if m % 2 == 1 {
            -(&sq - &Laurent::y(2))
        } else {
            -sq
        }
    });
    let k = eval_s_fraction(&lambda, n)?;
    let rhs = ZSeries::from_fn(order + 1, |i| {
        if i % 2 == 1 {
            k.coeff(i / 2).clone()
        } else {
            Laurent::zero()
        }
    });
    Ok((lhs, rhs))
}

/// Compares the two sides of [`laplace_sides`].
pub fn laplace_check(n: usize) -> Result<bool> {
    let (lhs, rhs) = laplace_sides(n)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn secant_numbers() {
        assert_eq!(
            cos_ratio_moments(Half::ZERO, Half::int(1), 4).unwrap(),
            ints(&[1, 1, 5, 61, 1385])
        );
        assert_eq!(
            cos_ratio_moments(Half::int(1), Half::int(1), 3).unwrap(),
            ints(&[1, 0, 0, 0])
        );
    }

    #[test]
    fn genocchi_numbers() {
        assert_eq!(
            genocchi_egf_values(6).unwrap(),
            ints(&[1, 1, 3, 17, 155, 2073])
        );
        assert!(egf_check_genocchi(6).unwrap());
    }

    #[test]
    fn cosine_ratios() {
        let h = Half::halves;
        for (a, b) in [
            (h(0), h(2)),
            (h(2), h(4)),
            (h(2), h(6)),
            (h(1), h(3)),
            (h(2), h(2)),
        ] {
            assert!(egf_check_cos(a, b, 5).unwrap(), "({a}, {b})");
        }
    }

    #[test]
    fn laplace_identity() {
        let (lhs, rhs) = laplace_sides(6).unwrap();
        assert_eq!(lhs.order(), 13);
        assert_eq!(lhs.coeff(1), &Laurent::one());
        assert_eq!(lhs.coeff(3), &Laurent::parse("y^2 - 1").unwrap());
        assert_eq!(lhs, rhs);
    }
}
