//! Infinite products truncated to a finite `q`-order.
//!
//! Factors of index greater than `K` are dropped and the expansion is cut
//! below `q^K`; no dropped factor can affect the retained terms.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::genocchi::y_k;
use crate::error::{Error, Result};
use crate::qcore::{Laurent, Mono, Scalar};

/// The products available for truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "product", rename_all = "snake_case")]
pub enum Product {
    /// `prod_i (1 - q^i)/(1 + q^i)`.
    Gauss,
    /// `prod_i (1 - q^(2i))(1 + y q^(2i-1))(1 + y^-1 q^(2i-1))`.
    Jtp,
    /// `prod_i (1 - q^i)^3`.
    Cube,
    /// `prod_i 1/(1 - q^(2i)) * prod_(i>a) (1 - q^i) * prod_(i>b) (1 - q^i)`.
    Ab {
        /// First cut-off.
        a: u32,
        /// Second cut-off.
        b: u32,
    },
    /// The finite product `(x; q)_n = (1 - x)(1 - xq)...(1 - xq^(n-1))`.
    Pochhammer {
        /// The base `x`.
        x: Laurent,
        /// Number of factors.
        n: u32,
    },
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Gauss => write!(f, "gauss"),
            Product::Jtp => write!(f, "jtp"),
            Product::Cube => write!(f, "cube"),
            Product::Ab { a, b } => write!(f, "ab(a={a}, b={b})"),
            Product::Pochhammer { x, n } => write!(f, "({x}; q)_{n}"),
        }
    }
}

/// `(1 - q^e)^-1` or `(1 + q^e)^-1` expanded below `q^k`.
fn geometric(e: i64, alternating: bool, k: i64) -> Laurent {
    Laurent::from_terms(
        1,
        (0..).map(|m| m * e).take_while(|&x| x < k).map(|x| {
            let c = if alternating && (x / e) % 2 == 1 {
                -1
            } else {
                1
            };
            (Mono::new(x, 0), Scalar::from(c))
        }),
    )
}

/// Multiplies by each factor, discarding terms of `q`-degree `k` and above.
fn truncated_product(factors: impl IntoIterator<Item = Laurent>, k: i64) -> Laurent {
    factors
        .into_iter()
        .fold(Laurent::one().truncate_q(k), |acc, f| {
            (&acc * &f).truncate_q(k)
        })
}

/// `prod` expanded modulo `q^k`.
pub fn truncated_products(id: &Product, k: i64) -> Laurent {
    let idx = 1..=k.max(0);
    let one_minus = |e: i64| Laurent::one_minus(1, e, 0);
    match id {
        Product::Gauss => {
            truncated_product(idx.flat_map(|i| [one_minus(i), geometric(i, true, k)]), k)
        }
        Product::Jtp => truncated_product(
            idx.flat_map(|i| {
                [
                    one_minus(2 * i),
                    &Laurent::one() + &Laurent::monomial(1, 2 * i - 1, 1),
                    &Laurent::one() + &Laurent::monomial(1, 2 * i - 1, -1),
                ]
            }),
            k,
        ),
        Product::Cube => truncated_product(idx.map(|i| one_minus(i).pow(3)), k),
        Product::Ab { a, b } => {
            let (a, b) = (*a as i64, *b as i64);
            truncated_product(
                idx.flat_map(|i| {
                    let mut f = vec![geometric(2 * i, false, k)];
                    if i > a {
                        f.push(one_minus(i));
                    }
                    if i > b {
                        f.push(one_minus(i));
                    }
                    f
                }),
                k,
            )
        }
        Product::Pochhammer { x, n } => {
            truncated_product((0..*n as i64).map(|i| &Laurent::one() - &x.shift(i, 0)), k)
        }
    }
}

/// Checks `(1 - q) q^(C(k+2,2) - 1) Y_k(q^-1) = prod_i (1 - q^i)^3` modulo `q^big_k`.
pub fn jacobi_cube_limit_check(big_k: i64, k: usize) -> Result<bool> {
    if (k as i64) < big_k {
        return Err(Error::Domain(format!(
            "the congruence mod q^{big_k} needs k >= {big_k}, got {k}"
        )));
    }
    let e = ((k + 2) * (k + 1) / 2) as i64 - 1;
    let lhs = (&Laurent::one_minus(1, 1, 0) * &y_k(k)?.q_inverse().shift(e, 0)).truncate_q(big_k);
    Ok(lhs == truncated_products(&Product::Cube, big_k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::sums::{gauss_sum, t_ab_sequence};

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(truncated_products(&Product::Gauss, 5), p("1 - 2*q + 2*q^4"));
        assert_eq!(truncated_products(&Product::Jtp, 4), p("1 + q*y + q*y^-1"));
        assert_eq!(
            truncated_products(&Product::Cube, 7),
            p("1 - 3*q + 5*q^3 - 7*q^6")
        );
        assert_eq!(truncated_products(&Product::Cube, 0), Laurent::zero());
        let x = Laurent::q(1);
        assert_eq!(
            truncated_products(&Product::Pochhammer { x, n: 2 }, 10),
            p("1 - q - q^2 + q^3")
        );
    }

    #[test]
    fn gauss_identity_mod_q12() {
        assert_eq!(
            truncated_products(&Product::Gauss, 12),
            gauss_sum(4).truncate_q(12)
        );
        assert_eq!(
            truncated_products(&Product::Ab { a: 0, b: 0 }, 12),
            gauss_sum(4).truncate_q(12)
        );
    }

    #[test]
    fn triple_product_mod_q10() {
        let series =
            Laurent::from_terms(1, (-4i64..=4).map(|n| (Mono::new(n * n, n), Scalar::ONE)));
        assert_eq!(truncated_products(&Product::Jtp, 10), series.truncate_q(10));
    }

    #[test]
    fn cube_limit() {
        assert!(jacobi_cube_limit_check(1, 1).unwrap());
        assert!(jacobi_cube_limit_check(5, 6).unwrap());
        assert!(jacobi_cube_limit_check(10, 12).unwrap());
        assert!(jacobi_cube_limit_check(10, 3).is_err());
    }

    #[test]
    fn t_ab_congruences() {
        for (a, b) in [(0, 0), (0, 1), (1, 1), (1, 2)] {
            for (k, t) in t_ab_sequence(10, a, b).unwrap().iter().enumerate() {
                assert!(t.is_polynomial(), "T_{k}^({a},{b}) = {t}");
                let k = k as i64;
                assert_eq!(
                    t.truncate_q(k),
                    truncated_products(&Product::Ab { a, b }, k),
                    "k = {k}, (a, b) = ({a}, {b})"
                );
            }
        }
    }
}
