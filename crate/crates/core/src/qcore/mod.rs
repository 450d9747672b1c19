//! Exact arithmetic on Laurent polynomials in `q^(1/g)`, `y` and on truncated `z`-series.
//!
//! - [`Scalar`]: exact rationals
//! - [`Laurent`]: Laurent polynomials in `q^(1/g)` and `y`
//! - [`ZSeries`]: power series in `z` modulo `z^(N+1)`
//! - [`ZPoly`]: polynomials in `z`, used as matrix entries
//! - [`Substitution`]: the variable changes used by the identities

mod half;
mod laurent;
mod scalar;
mod series;

pub use half::Half;
pub use laurent::{qint, qint_n, Laurent, Mono};
pub use scalar::{binomial, factorial, Scalar};
pub use series::{series_scale_substitute, ZPoly, ZSeries};

use crate::error::Result;

/// A change of variables applied coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `q -> q^-1`.
    QInverse,
    /// `q -> q^m`.
    QPower(u32),
    /// `q = 1`.
    QOne,
    /// `y -> -q^a` together with `q -> q^b`.
    YNegQPow {
        /// Exponent put on `y`.
        a: Half,
        /// Exponent put on `q`.
        b: Half,
    },
    /// `y = 1`.
    YOne,
    /// `y = c` for a nonzero constant.
    YValue(Scalar),
}

/// Applies a substitution to a Laurent value.
pub fn substitute(x: &Laurent, s: &Substitution) -> Result<Laurent> {
    Ok(match s {
        Substitution::QInverse => x.q_inverse(),
        Substitution::QPower(m) => x.q_power(*m),
        Substitution::QOne => x.eval_q_one(),
        Substitution::YNegQPow { a, b } => x.substitute_y_q(-1, *a, *b),
        Substitution::YOne => x.eval_y(&Scalar::ONE)?,
        Substitution::YValue(c) => x.eval_y(c)?,
    })
}

/// Applies a substitution to every coefficient of a series.
pub fn substitute_series(f: &ZSeries, s: &Substitution) -> Result<ZSeries> {
    f.try_map(|c| substitute(c, s))
}
