//! Even and odd contractions of a fraction with plus signs.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::qcore::{Laurent, ZSeries};

/// Which expansion of `z / (1 + c_1 z / (1 + c_2 z / ...))` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Contraction {
    /// The fraction itself.
    Plain,
    /// `z / (1 + c1 z - c1 c2 z^2 / (1 + (c2 + c3) z - c3 c4 z^2 / ...))`.
    First,
    /// `z - c1 z^2 / (1 + (c1 + c2) z - c2 c3 z^2 / (1 + (c3 + c4) z - ...))`.
    Second,
}

/// `1 / (1 + a z - b z^2 X)` modulo `z^(order+1)`, given `X`.
fn level(a: &Laurent, b: &Laurent, x: &ZSeries, order: usize) -> Result<ZSeries> {
    let d = ZSeries::from_fn(order, |j| match j {
        0 => Laurent::one(),
        1 => a.clone(),
        _ => -&(b * x.coeff(j - 2)),
    });
    d.inverse()
}

/// Evaluates the chosen expansion modulo `z^(order+1)`; `c(i)` is `c_i` for `i >= 1`.
pub fn contract_fraction(
    c: &dyn Fn(usize) -> Laurent,
    which: Contraction,
    order: usize,
) -> Result<ZSeries> {
    match which {
        Contraction::Plain => {
            let mut w = ZSeries::one(order);
            for m in (1..=order).rev() {
                let cm = c(m);
                let d = ZSeries::from_fn(order, |j| match j {
                    0 => Laurent::one(),
                    _ => &cm * w.coeff(j - 1),
                });
                w = d.inverse()?;
            }
            Ok(w.shift(1))
        }
        Contraction::First => {
            let depth = order / 2 + 2;
            let mut x = ZSeries::one(order);
            for j in (1..=depth).rev() {
                x = level(
                    &(&c(2 * j) + &c(2 * j + 1)),
                    &(&c(2 * j + 1) * &c(2 * j + 2)),
                    &x,
                    order,
                )?;
            }
            Ok(level(&c(1), &(&c(1) * &c(2)), &x, order)?.shift(1))
        }
        Contraction::Second => {
            let depth = order / 2 + 2;
            let mut x = ZSeries::one(order);
            for j in (1..=depth).rev() {
                x = level(
                    &(&c(2 * j - 1) + &c(2 * j)),
                    &(&c(2 * j) * &c(2 * j + 1)),
                    &x,
                    order,
                )?;
            }
            let z = ZSeries::monomial(Laurent::one(), 1, order);
            Ok(&z - &x.shift(2).scale(&c(1)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic(i: usize) -> Laurent {
        Laurent::parse(&format!("{} + q^{} - {}*y", i, i % 3, i * i % 5)).unwrap()
    }

    #[test]
    fn contractions_agree_with_the_fraction() {
        let plain = contract_fraction(&generic, Contraction::Plain, 6).unwrap();
        assert_eq!(
            contract_fraction(&generic, Contraction::First, 6).unwrap(),
            plain
        );
        assert_eq!(
            contract_fraction(&generic, Contraction::Second, 6).unwrap(),
            plain
        );
    }

    #[test]
    fn plain_fraction_small_case() {
        let ones = |_| Laurent::one();
        let f = contract_fraction(&ones, Contraction::Plain, 4).unwrap();
        let expect: Vec<i64> = vec![0, 1, -1, 2, -5];
        for (n, e) in expect.into_iter().enumerate() {
            assert_eq!(f.coeff(n), &Laurent::constant(e));
        }
    }
}
