//! Self-contained verification suites.
//!
//! Each suite compares computed values against an independent route to the
//! same quantity and reports one [`CaseResult`] per check, in a fixed order.

mod suites;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::DEFAULT_SIZE_LIMIT;

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    /// Stable identifier, e.g. `n=3` or `psi-phi/k=4`.
    pub id: String,
    /// Whether the check held.
    pub pass: bool,
    /// What was left over when it did not.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
}

/// All cases of one suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    /// Suite name.
    pub suite: String,
    /// Cases in execution order.
    pub cases: Vec<CaseResult>,
    /// True when every case passed.
    pub pass: bool,
    /// Wall-clock time, only recorded on request since it breaks reproducibility.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    fn new(suite: Suite, cases: Vec<CaseResult>) -> RunReport {
        let pass = cases.iter().all(|c| c.pass);
        RunReport {
            suite: suite.name().to_string(),
            cases,
            pass,
            elapsed_ms: None,
        }
    }

    /// Number of passing cases.
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            write!(f, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.id)?;
            if let Some(r) = &c.residual {
                write!(f, "  [{r}]")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{}: {}/{} passed",
            self.suite,
            self.passed(),
            self.cases.len()
        )?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, " in {ms} ms")?;
        }
        Ok(())
    }
}

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Touchard–Riordan closed form against its S-fraction.
    Tourio,
    /// q-secant closed form against its S-fraction and Dyck-path sums.
    Qsec,
    /// Finite triple product: S- and T-fraction forms and Schröder-path sums.
    Jtp,
    /// The two-parameter moments, their positivity, and the checks at `q = 1`.
    #[serde(rename = "theoS")]
    TheoS,
    /// q-Genocchi closed forms, one case per `n`.
    Genocchi,
    /// Functional equations and the Möbius tail recurrences.
    Funeq,
    /// Configuration sums against truncated products.
    Congruence,
    /// Hankel determinant product formulas.
    Hankel,
    /// The cube-of-products limit.
    Cube,
    /// Configuration sums against theta and Gauss sums.
    Dkc,
    /// The configuration bijections and involutions.
    Bijection,
    /// The moment transform, the Lagrange identity and contractions.
    Transform,
    /// Every suite above with its default size.
    All,
}

impl Suite {
    /// Every individual suite, in the order `all` runs them.
    pub const EACH: [Suite; 12] = [
        Suite::Tourio,
        Suite::Qsec,
        Suite::Jtp,
        Suite::TheoS,
        Suite::Genocchi,
        Suite::Funeq,
        Suite::Congruence,
        Suite::Hankel,
        Suite::Cube,
        Suite::Dkc,
        Suite::Bijection,
        Suite::Transform,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Tourio => "tourio",
            Suite::Qsec => "qsec",
            Suite::Jtp => "jtp",
            Suite::TheoS => "theoS",
            Suite::Genocchi => "genocchi",
            Suite::Funeq => "funeq",
            Suite::Congruence => "congruence",
            Suite::Hankel => "hankel",
            Suite::Cube => "cube",
            Suite::Dkc => "dkc",
            Suite::Bijection => "bijection",
            Suite::Transform => "transform",
            Suite::All => "all",
        }
    }

    /// The size parameter used when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Tourio | Suite::Qsec | Suite::Genocchi => 8,
            Suite::Jtp | Suite::TheoS => 6,
            Suite::Funeq | Suite::Cube | Suite::Transform => 10,
            Suite::Congruence => 12,
            Suite::Hankel | Suite::Bijection => 4,
            Suite::Dkc => 5,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parameters of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Size parameter; each suite's default when absent.  For `all` it caps every default.
    pub max_n: Option<usize>,
    /// Seed for the sampled checks.
    pub seed: u64,
    /// Maximum number of objects a single enumeration may visit.
    pub limit: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: None,
            seed: 0,
            limit: DEFAULT_SIZE_LIMIT,
        }
    }
}

/// Runs a suite.  `all` prefixes every case id with its suite name.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> RunReport {
    if suite == Suite::All {
        let mut cases = Vec::new();
        for s in Suite::EACH {
            let n = opts
                .max_n
                .map_or(s.default_max_n(), |m| m.min(s.default_max_n()));
            for mut c in suites::run(s, n, opts) {
                c.id = format!("{}/{}", s.name(), c.id);
                cases.push(c);
            }
        }
        return RunReport::new(Suite::All, cases);
    }
    let n = opts.max_n.unwrap_or(suite.default_max_n());
    RunReport::new(suite, suites::run(suite, n, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("THEOS".parse::<Suite>().unwrap(), Suite::TheoS);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn genocchi_has_one_case_per_n() {
        let r = run_suite(
            Suite::Genocchi,
            &VerifyOptions {
                max_n: Some(6),
                ..Default::default()
            },
        );
        assert_eq!(r.cases.len(), 6);
        assert!(r.pass, "{r}");
    }

    #[test]
    fn report_json_shape() {
        let r = run_suite(
            Suite::Tourio,
            &VerifyOptions {
                max_n: Some(1),
                ..Default::default()
            },
        );
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["suite"], "tourio");
        assert_eq!(v["pass"], true);
        assert_eq!(
            v["cases"][0],
            serde_json::json!({"id": "n=0", "pass": true})
        );
        assert!(v.get("elapsed_ms").is_none());
    }
}
