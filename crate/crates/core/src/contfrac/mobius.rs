//! 2x2 matrices acting as Möbius transformations on series in `z`.
//!
//! Entries are polynomials in `z` with Laurent coefficients.  Matrices that
//! represent the same transformation are proportional, so recurrences are
//! checked projectively: all 2x2 minors of the pair must vanish.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{Laurent, ZPoly, ZSeries};

/// The matrix `[[a, b], [c, d]]`, acting by `f -> (a f + b) / (c f + d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mobius2x2 {
    /// Top left.
    pub a: ZPoly,
    /// Top right.
    pub b: ZPoly,
    /// Bottom left.
    pub c: ZPoly,
    /// Bottom right.
    pub d: ZPoly,
}

/// Outcome of a projective matrix comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Proportionality {
    /// Every 2x2 minor of the pair vanishes and neither matrix is zero.
    pub proportional: bool,
    /// The two matrices are literally equal.
    pub equal: bool,
}

impl Mobius2x2 {
    /// Builds from entries in row-major order.
    pub fn new(a: ZPoly, b: ZPoly, c: ZPoly, d: ZPoly) -> Mobius2x2 {
        Mobius2x2 { a, b, c, d }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [&ZPoly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, o: &Mobius2x2) -> Mobius2x2 {
        Mobius2x2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    /// The matrix with `z` replaced by `c z`.
    pub fn scale_argument(&self, c: &Laurent) -> Mobius2x2 {
        Mobius2x2 {
            a: self.a.scale_argument(c),
            b: self.b.scale_argument(c),
            c: self.c.scale_argument(c),
            d: self.d.scale_argument(c),
        }
    }

    /// Determinant.
    pub fn det(&self) -> ZPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Projective comparison with another matrix.
    pub fn compare(&self, other: &Mobius2x2) -> Proportionality {
        let x = self.entries();
        let y = other.entries();
        let nonzero = x.iter().any(|e| !e.is_zero()) && y.iter().any(|e| !e.is_zero());
        let mut minors_vanish = true;
        'outer: for i in 0..4 {
            for j in (i + 1)..4 {
                if !(&(x[i] * y[j]) - &(x[j] * y[i])).is_zero() {
                    minors_vanish = false;
                    break 'outer;
                }
            }
        }
        Proportionality {
            proportional: nonzero && minors_vanish,
            equal: self == other,
        }
    }
}

/// `(a f + b) / (c f + d)` modulo `z^(order+1)`.
pub fn mobius_apply(m: &Mobius2x2, f: &ZSeries, order: usize) -> Result<ZSeries> {
    let num = &(&m.a.to_series(order) * f) + &m.b.to_series(order);
    let den = &(&m.c.to_series(order) * f) + &m.d.to_series(order);
    if den.coeff(0).is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    Ok(&num * &den.inverse()?)
}

fn p(s: &str) -> Laurent {
    Laurent::parse(s).expect("well-formed constant")
}

fn zp(coeffs: &[Laurent]) -> ZPoly {
    ZPoly::new(coeffs.to_vec())
}

/// The two-level step matrix of the Jacobi-triple-product T-fraction at `w`.
pub fn m_matrix(w: &Laurent) -> Mobius2x2 {
    let zero = Laurent::zero();
    let one = Laurent::one();
    let t = (&one - &(w * &p("q^2"))).pow(2);
    let j = &(&one + &(w * &p("q*y"))) * &(&one + &(w * &p("q*y^-1")));
    Mobius2x2::new(
        zp(&[zero.clone(), t.clone()]),
        zp(&[-&one, -&one]),
        zp(&[zero, t.clone(), t]),
        zp(&[-&one, &j - &p("2"), -&one]),
    )
}

/// The starting matrix, scaled by `(1 - zqy)(1 - zq/y)` so that its entries are polynomial.
pub fn s_matrix() -> Mobius2x2 {
    let d = zp(&[p("1"), p("-q*y - q*y^-1"), p("q^2")]);
    Mobius2x2::new(
        &d * &ZPoly::monomial(p("q^2"), 1),
        zp(&[p("1"), p("0"), p("-q^2")]),
        ZPoly::zero(),
        d,
    )
}

/// Numerator matrix of the `n`-th tail transformation of the Jacobi-triple-product fraction.
pub fn omega_matrix(n: u32) -> Mobius2x2 {
    let n = n as i64;
    let one = Laurent::one();
    let yy = p("y + y^-1");
    let a = zp(&[
        Laurent::zero(),
        (&Laurent::q(2 * n).scale(&2.into()) - &one).shift(2, 0),
        (-&(&yy * &Laurent::q(2 * n + 1))).shift(2, 0),
        p("q^4"),
    ]);
    let b = zp(&[one.clone(), Laurent::zero(), p("-q^2")]);
    let s = Laurent::one_minus(1, 2 * n, 0).pow(2);
    let c = zp(&[
        Laurent::zero(),
        -&(&s * &p("q^2")),
        Laurent::zero(),
        &s * &p("q^4"),
    ]);
    let d = zp(&[
        one,
        -&(&yy * &Laurent::q(2 * n + 1)),
        &Laurent::q(2 * n + 2).scale(&2.into()) - &p("q^2"),
    ]);
    Mobius2x2::new(a, b, c, d)
}

/// The two-level step matrix of the scaled Genocchi T-fraction at `w`.
pub fn n_matrix(w: &Laurent) -> Mobius2x2 {
    let one = Laurent::one();
    let zero = Laurent::zero();
    let f1 = &one - &(w * &p("q"));
    let f2 = &one - &(w * &p("q^2"));
    let t = &f1 * &f2;
    Mobius2x2::new(
        zp(&[zero.clone(), t.clone()]),
        zp(&[-&one, -&one]),
        zp(&[zero, t.clone(), t]),
        zp(&[-&one, &f1.pow(2) - &p("2"), -&one]),
    )
}

/// `[[(q - 1) z, 1], [0, (1 + z)^2]]`.
pub fn p_matrix() -> Mobius2x2 {
    Mobius2x2::new(
        zp(&[p("0"), p("q - 1")]),
        zp(&[p("1")]),
        ZPoly::zero(),
        zp(&[p("1"), p("2"), p("1")]),
    )
}

/// `[[q z (1 + z)^2, 1 - z], [0, (1 + z)^2]]`.
pub fn r_matrix() -> Mobius2x2 {
    Mobius2x2::new(
        zp(&[p("0"), p("q"), p("2*q"), p("q")]),
        zp(&[p("1"), p("-1")]),
        ZPoly::zero(),
        zp(&[p("1"), p("2"), p("1")]),
    )
}

/// Numerator matrix of the `n`-th tail transformation of the scaled Genocchi fraction.
pub fn lambda_matrix(n: u32) -> Mobius2x2 {
    let n = n as i64;
    let qn = Laurent::q(n);
    let qn1 = Laurent::q(n + 1);
    let a = zp(&[
        Laurent::zero(),
        (&(&qn1 + &qn) - &Laurent::one()).shift(1, 0),
        qn1.scale(&2.into()).shift(1, 0),
        p("q^2"),
    ]);
    let b = zp(&[p("1"), p("0"), p("-q")]);
    let s = &Laurent::one_minus(1, n, 0) * &Laurent::one_minus(1, n + 1, 0);
    let c = zp(&[
        Laurent::zero(),
        -&(&s * &p("q")),
        Laurent::zero(),
        &s * &p("q^2"),
    ]);
    let d = zp(&[
        p("1"),
        qn1.scale(&2.into()),
        &(&Laurent::q(n + 2) + &qn1) - &p("q"),
    ]);
    Mobius2x2::new(a, b, c, d)
}

/// Checks `M(q^(2n), z) Omega_(n+1) ~ Omega_n M(q^(2n), z q^2)`.
pub fn verify_omega_recurrence(n: u32) -> Proportionality {
    let m = m_matrix(&Laurent::q(2 * n as i64));
    let lhs = m.mul(&omega_matrix(n + 1));
    let rhs = omega_matrix(n).mul(&m.scale_argument(&p("q^2")));
    lhs.compare(&rhs)
}

/// Checks `N(q^n, z) Lambda_(n+1) ~ Lambda_n N(q^n, q z)`.
pub fn verify_lambda_recurrence(n: u32) -> Proportionality {
    let m = n_matrix(&Laurent::q(n as i64));
    let lhs = m.mul(&lambda_matrix(n + 1));
    let rhs = lambda_matrix(n).mul(&m.scale_argument(&p("q")));
    lhs.compare(&rhs)
}

/// Checks that `Omega_0` is the starting matrix.
pub fn verify_omega_initial() -> Proportionality {
    omega_matrix(0).compare(&s_matrix())
}

/// Checks `P(z) Lambda_0 ~ R P(q z)`.
pub fn verify_lambda_initial() -> Proportionality {
    let lhs = p_matrix().mul(&lambda_matrix(0));
    let rhs = r_matrix().mul(&p_matrix().scale_argument(&p("q")));
    lhs.compare(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_entry() {
        let m = omega_matrix(1);
        let expect = zp(&[
            p("0"),
            &p("1 - q^2").pow(2) * &p("-q^2"),
            p("0"),
            &p("1 - q^2").pow(2) * &p("q^4"),
        ]);
        assert_eq!(m.c, expect);
    }

    #[test]
    fn recurrences_hold_and_break_under_mutation() {
        for n in 0..4 {
            assert!(verify_omega_recurrence(n).proportional);
            assert!(verify_lambda_recurrence(n).proportional);
        }
        assert!(verify_omega_initial().proportional);
        assert!(verify_lambda_initial().proportional);
        let mut bad = omega_matrix(2);
        bad.b = zp(&[p("1"), p("0"), p("q^2")]);
        let m = m_matrix(&Laurent::q(2));
        assert!(
            !m.mul(&bad)
                .compare(&omega_matrix(1).mul(&m.scale_argument(&p("q^2"))))
                .proportional
        );
    }

    #[test]
    fn start_matrix_acts_as_two_geometric_series() {
        let f = mobius_apply(&s_matrix(), &ZSeries::zero(6), 6).unwrap();
        for n in 1..=6 {
            let expect = Laurent::parse(&format!("q^{n}*y^{n} + q^{n}*y^-{n}")).unwrap();
            assert_eq!(f.coeff(n), &expect);
        }
        assert!(f.coeff(0).is_one());
        let pole = Mobius2x2::new(ZPoly::zero(), zp(&[p("1")]), ZPoly::zero(), ZPoly::z());
        assert_eq!(
            mobius_apply(&pole, &ZSeries::zero(3), 3),
            Err(Error::PoleAtOrigin)
        );
    }
}
