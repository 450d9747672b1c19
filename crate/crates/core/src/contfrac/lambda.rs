//! Coefficient sequences of continued fractions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::{qint, qint_n, Half, Laurent};

/// A sequence `lambda_1, lambda_2, ...` of Laurent values (indices start at 1).
pub trait LambdaSequence {
    /// The term `lambda_n` for `n >= 1`.
    fn term(&self, n: usize) -> Result<Laurent>;
}

/// The named coefficient sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `lambda_n = [n]_q`.
    Touchard,
    /// `lambda_n = [n]_q^2`.
    QSecant,
    /// `(1 + y q^n)(1 + y^-1 q^n)` for odd `n`, `(1 - q^n)^2` for even `n`.
    Jtp,
    /// The previous sequence after `y -> -q^a`, `q -> q^b`.
    JtpSubstituted {
        /// Exponent substituted for `y`.
        a: Half,
        /// Exponent substituted for `q`.
        b: Half,
    },
    /// `[nb + a][nb - a]` for odd `n`, `[nb]^2` for even `n`.
    Mu {
        /// Shift parameter.
        a: Half,
        /// Scale parameter.
        b: Half,
    },
    /// `[(n+1)/2]^2` for odd `n`, `[n/2][n/2 + 1]` for even `n`.
    Genocchi,
    /// `(1 - q)^2` times the previous sequence.
    GenocchiScaled,
    /// `lambda_n = [a + n][b + n]`.
    Eab {
        /// First shift.
        a: Half,
        /// Second shift.
        b: Half,
    },
    /// `lambda_n = 1 - q^n`.
    V,
    /// The period-three sequence of cubes and squares of `1 - q^j`.
    Xi,
}

/// Which kind of continued fraction a family is usually expanded as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FractionKind {
    /// `1 / (1 - lambda_1 z / (1 - lambda_2 z / ...))`.
    S,
    /// `1 / (1 + z - lambda_1 z / (1 + z - lambda_2 z / ...))`.
    T,
}

impl FromStr for FractionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" => Ok(FractionKind::S),
            "t" => Ok(FractionKind::T),
            _ => Err(Error::Parse(format!("unknown fraction kind {s:?}"))),
        }
    }
}

fn one_minus_q_pow(e: i64) -> Laurent {
    Laurent::one_minus(1, e, 0)
}

fn qint_half(x: Half) -> Result<Laurent> {
    qint(x).map_err(|e| match e {
        Error::NotDivisible => Error::Domain(format!("[{x}]_q is not a Laurent polynomial")),
        other => other,
    })
}

impl Family {
    /// Builds a family from its command-line name and optional parameters.
    pub fn from_name(name: &str, a: Option<Half>, b: Option<Half>) -> Result<Family> {
        let need = |v: Option<Half>, p: &str| {
            v.ok_or_else(|| Error::Domain(format!("family {name} needs parameter --{p}")))
        };
        Ok(match name {
            "touchard" => Family::Touchard,
            "qsecant" => Family::QSecant,
            "jtp" => Family::Jtp,
            "jtp-sub" => Family::JtpSubstituted {
                a: need(a, "a")?,
                b: need(b, "b")?,
            },
            "mu" => Family::Mu {
                a: need(a, "a")?,
                b: need(b, "b")?,
            },
            "genocchi" => Family::Genocchi,
            "genocchi-scaled" => Family::GenocchiScaled,
            "eab" => Family::Eab {
                a: need(a, "a")?,
                b: need(b, "b")?,
            },
            "v" => Family::V,
            "xi" => Family::Xi,
            _ => return Err(Error::Parse(format!("unknown family {name:?}"))),
        })
    }

    /// The fraction kind under which the family's identities are stated.
    pub fn default_kind(&self) -> FractionKind {
        match self {
            Family::Xi | Family::V | Family::JtpSubstituted { .. } | Family::GenocchiScaled => {
                FractionKind::T
            }
            _ => FractionKind::S,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Touchard => write!(f, "touchard"),
            Family::QSecant => write!(f, "qsecant"),
            Family::Jtp => write!(f, "jtp"),
            Family::JtpSubstituted { a, b } => write!(f, "jtp-sub(a={a}, b={b})"),
            Family::Mu { a, b } => write!(f, "mu(a={a}, b={b})"),
            Family::Genocchi => write!(f, "genocchi"),
            Family::GenocchiScaled => write!(f, "genocchi-scaled"),
            Family::Eab { a, b } => write!(f, "eab(a={a}, b={b})"),
            Family::V => write!(f, "v"),
            Family::Xi => write!(f, "xi"),
        }
    }
}

impl LambdaSequence for Family {
    fn term(&self, n: usize) -> Result<Laurent> {
        if n == 0 {
            return Err(Error::Domain("sequence indices start at 1".into()));
        }
        let ni = n as i64;
        let odd = n % 2 == 1;
        Ok(match *self {
            Family::Touchard => qint_n(n as u64),
            Family::QSecant => qint_n(n as u64).pow(2),
            Family::Jtp => {
                if odd {
                    &Laurent::from_terms(1, [(mono(0, 0), 1.into()), (mono(ni, 1), 1.into())])
                        * &Laurent::from_terms(
                            1,
                            [(mono(0, 0), 1.into()), (mono(ni, -1), 1.into())],
                        )
                } else {
                    one_minus_q_pow(ni).pow(2)
                }
            }
            Family::JtpSubstituted { a, b } => Family::Jtp.term(n)?.substitute_y_q(-1, a, b),
            Family::Mu { a, b } => {
                let nb = b.times(ni);
                if odd {
                    &qint_half(nb + a)? * &qint_half(nb - a)?
                } else {
                    qint_half(nb)?.pow(2)
                }
            }
            Family::Genocchi => {
                if odd {
                    qint_n(n.div_ceil(2) as u64).pow(2)
                } else {
                    &qint_n((n / 2) as u64) * &qint_n((n / 2 + 1) as u64)
                }
            }
            Family::GenocchiScaled => &Family::Genocchi.term(n)? * &one_minus_q_pow(1).pow(2),
            Family::Eab { a, b } => &qint_half(a + Half::int(ni))? * &qint_half(b + Half::int(ni))?,
            Family::V => one_minus_q_pow(ni),
            Family::Xi => {
                let j = ((n - 1) / 3) as i64;
                match (n - 1) % 3 {
                    0 => one_minus_q_pow(2 * j + 1).pow(3),
                    1 => &one_minus_q_pow(2 * j + 1) * &one_minus_q_pow(2 * j + 2).pow(2),
                    _ => &one_minus_q_pow(2 * j + 2).pow(2) * &one_minus_q_pow(2 * j + 3),
                }
            }
        })
    }
}

fn mono(q: i64, y: i64) -> crate::qcore::Mono {
    crate::qcore::Mono::new(q, y)
}

/// A sequence given by a closure.
pub struct FnSequence<F>(pub F);

impl<F: Fn(usize) -> Laurent> LambdaSequence for FnSequence<F> {
    fn term(&self, n: usize) -> Result<Laurent> {
        Ok((self.0)(n))
    }
}

/// An explicit finite sequence; terms past the end are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ListSequence(pub Vec<Laurent>);

impl LambdaSequence for ListSequence {
    fn term(&self, n: usize) -> Result<Laurent> {
        Ok(n.checked_sub(1)
            .and_then(|i| self.0.get(i).cloned())
            .unwrap_or_default())
    }
}

/// A base sequence with some terms replaced.
pub struct Overridden<'a> {
    /// The sequence being modified.
    pub base: &'a dyn LambdaSequence,
    /// Replacement terms by index.
    pub overrides: BTreeMap<usize, Laurent>,
}

impl LambdaSequence for Overridden<'_> {
    fn term(&self, n: usize) -> Result<Laurent> {
        match self.overrides.get(&n) {
            Some(v) => Ok(v.clone()),
            None => self.base.term(n),
        }
    }
}

/// A base sequence multiplied termwise by a constant.
pub struct Scaled<'a> {
    /// The sequence being scaled.
    pub base: &'a dyn LambdaSequence,
    /// The factor.
    pub factor: Laurent,
}

impl LambdaSequence for Scaled<'_> {
    fn term(&self, n: usize) -> Result<Laurent> {
        Ok(&self.base.term(n)? * &self.factor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        Laurent::parse(s).unwrap()
    }

    #[test]
    fn first_terms() {
        assert_eq!(Family::Touchard.term(3).unwrap(), p("1 + q + q^2"));
        assert_eq!(Family::Jtp.term(1).unwrap(), p("1 + q*y + q*y^-1 + q^2"));
        assert_eq!(Family::Jtp.term(2).unwrap(), p("1 - 2*q^2 + q^4"));
        assert_eq!(Family::Genocchi.term(2).unwrap(), p("1 + q"));
        assert_eq!(Family::Genocchi.term(3).unwrap(), p("1 + 2*q + q^2"));
        assert_eq!(
            Family::Xi.term(2).unwrap(),
            &p("1 - q") * &p("1 - q^2").pow(2)
        );
        assert_eq!(
            Family::Xi.term(6).unwrap(),
            &p("1 - q^4").pow(2) * &p("1 - q^5")
        );
        assert_eq!(
            Family::Eab {
                a: Half::int(0),
                b: Half::int(1)
            }
            .term(1)
            .unwrap(),
            p("1 + q")
        );
    }

    #[test]
    fn mu_half_integer_parameters_stay_integral() {
        let mu = Family::Mu {
            a: Half::halves(1),
            b: Half::halves(3),
        };
        assert_eq!(mu.term(1).unwrap(), p("1 + q"));
        assert_eq!(mu.term(1).unwrap().granularity(), 1);
        let bad = Family::Mu {
            a: Half::int(0),
            b: Half::halves(1),
        };
        assert!(matches!(bad.term(1), Err(Error::Domain(_))));
    }

    #[test]
    fn substituted_jtp_is_scaled_mu() {
        let (a, b) = (Half::int(1), Half::int(3));
        for n in 1..6 {
            let lhs = Family::JtpSubstituted { a, b }.term(n).unwrap();
            let rhs = &Family::Mu { a, b }.term(n).unwrap() * &p("1 - q").pow(2);
            assert_eq!(lhs, rhs);
        }
    }
}
