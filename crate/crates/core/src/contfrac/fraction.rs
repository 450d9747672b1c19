//! Bottom-up evaluation of S- and T-fractions as truncated series.

use super::lambda::{FractionKind, LambdaSequence};
use crate::error::Result;
use crate::qcore::{Laurent, ZSeries};

/// `1 / (1 - lambda_1 z / (1 - lambda_2 z / ...))` modulo `z^(order+1)`.
pub fn eval_s_fraction(lambda: &dyn LambdaSequence, order: usize) -> Result<ZSeries> {
    eval_fraction(lambda, order, false)
}

/// `1 / (1 + z - lambda_1 z / (1 + z - lambda_2 z / ...))` modulo `z^(order+1)`.
pub fn eval_t_fraction(lambda: &dyn LambdaSequence, order: usize) -> Result<ZSeries> {
    eval_fraction(lambda, order, true)
}

/// Evaluates the requested kind of fraction.
pub fn eval_fraction_kind(
    lambda: &dyn LambdaSequence,
    kind: FractionKind,
    order: usize,
) -> Result<ZSeries> {
    eval_fraction(lambda, order, kind == FractionKind::T)
}

/// Level `m` of the fraction only matters modulo `z^(order-m+1)`, so the tail
/// is built from the bottom with growing precision.
fn eval_fraction(lambda: &dyn LambdaSequence, order: usize, with_z: bool) -> Result<ZSeries> {
    let mut cur = ZSeries::one(0);
    for m in (1..=order).rev() {
        let lam = lambda.term(m)?;
        let prec = order - m + 1;
        let denom = ZSeries::from_fn(prec, |j| {
            let mut c = if j == 0 {
                Laurent::one()
            } else {
                Laurent::zero()
            };
            if with_z && j == 1 {
                c = &c + &Laurent::one();
            }
            if j >= 1 && !lam.is_zero() {
                c = &c - &(&lam * cur.coeff(j - 1));
            }
            c
        });
        cur = denom.inverse()?;
    }
    Ok(cur)
}

/// The `n`-th coefficient of a fraction of the given kind.
pub fn fraction_coefficient(
    lambda: &dyn LambdaSequence,
    kind: FractionKind,
    n: usize,
) -> Result<Laurent> {
    Ok(eval_fraction_kind(lambda, kind, n)?.coeff(n).clone())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::contfrac::lambda::{Family, FnSequence, Overridden};

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn small_coefficients() {
        let t = eval_s_fraction(&Family::Touchard, 2).unwrap();
        assert_eq!(t.coeffs(), &[p("1"), p("1"), p("2 + q")]);
        let s = eval_s_fraction(&Family::QSecant, 2).unwrap();
        assert_eq!(s.coeffs(), &[p("1"), p("1"), p("2 + 2*q + q^2")]);
        let v = eval_t_fraction(&Family::V, 1).unwrap();
        assert_eq!(v.coeffs(), &[p("1"), p("-q")]);
        let g = eval_t_fraction(&Family::GenocchiScaled, 1).unwrap();
        assert_eq!(g.coeffs(), &[p("1"), p("q^2 - 2*q")]);
    }

    #[test]
    fn degenerate_sequences() {
        let zero = FnSequence(|_| Laurent::zero());
        let t = eval_t_fraction(&zero, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(
                t.coeff(n),
                &Laurent::constant(if n % 2 == 0 { 1 } else { -1 })
            );
        }
        let s = eval_s_fraction(&zero, 4).unwrap();
        assert_eq!(s, ZSeries::one(4));
    }

    #[test]
    fn coefficient_n_ignores_later_terms() {
        let base = eval_s_fraction(&Family::Jtp, 4).unwrap();
        for n in 1..=4 {
            let mut overrides = BTreeMap::new();
            overrides.insert(n + 1, p("7*q^3 - y"));
            overrides.insert(n + 2, p("-5"));
            let alt = Overridden {
                base: &Family::Jtp,
                overrides,
            };
            let s = eval_s_fraction(&alt, n).unwrap();
            assert_eq!(s.coeff(n), base.coeff(n));
        }
    }
}
