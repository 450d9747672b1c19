//! The individual suites.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CaseResult, Suite, VerifyOptions};
use crate::configs::{
    delta_minus, delta_plus, delta_plus_sum, delta_plus_sum_truncated, half_configs, involution_f,
    is_delta_minus, is_embedded_previous, overpartition_involution, overpartitions, phi, phi1, psi,
    psi1, DeltaConfig, WeightScheme,
};
use crate::contfrac::{
    contract_fraction, eval_s_fraction, eval_t_fraction, s_coeffs_from_t, t_coeffs_from_s,
    verify_lagrange_identity, verify_lambda_initial, verify_lambda_recurrence,
    verify_omega_initial, verify_omega_recurrence, Contraction, Family, ListSequence,
};
use crate::error::{Error, Result};
use crate::formulas::{
    egf_check_cos, gauss_sum, genocchi_egf_values, genocchi_rhs, genocchi_sequence, h_series,
    hankel_check, jacobi_cube_limit_check, laplace_check, mu_is_positive_regime, mu_rhs,
    mu_sequence, p_k, rhs_jtp, rhs_qsecant, rhs_touchard, t_ab_sequence, theta_sum,
    truncated_products, verify_f_equation_with, verify_functional_equation, w_k, y_k, FunEq,
    GenocchiForm, HankelFamily, Product,
};
use crate::paths::{enumerate, weight_sum, PathKind, WeightPair, WeightSeq};
use crate::qcore::{Half, Laurent, Mono, Scalar};

/// `None` on success, a description of the mismatch otherwise.
type Outcome = Result<Option<String>>;

fn case(id: impl Into<String>, f: impl FnOnce() -> Outcome) -> CaseResult {
    let id = id.into();
    match f() {
        Ok(None) => CaseResult {
            id,
            pass: true,
            residual: None,
        },
        Ok(Some(r)) => CaseResult {
            id,
            pass: false,
            residual: Some(r),
        },
        Err(e) => CaseResult {
            id,
            pass: false,
            residual: Some(format!("error: {e}")),
        },
    }
}

fn eq(lhs: &Laurent, rhs: &Laurent) -> Option<String> {
    (lhs != rhs).then(|| format!("difference {}", lhs - rhs))
}

fn holds(ok: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(msg)
}

/// The first failure among several checks.
fn all(checks: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    checks.into_iter().flatten().next()
}

pub(super) fn run(suite: Suite, n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    match suite {
        Suite::Tourio => tourio(n),
        Suite::Qsec => qsec(n, opts),
        Suite::Jtp => jtp(n, opts),
        Suite::TheoS => theo_s(n),
        Suite::Genocchi => genocchi(n, opts),
        Suite::Funeq => funeq(n),
        Suite::Congruence => congruence(n, opts),
        Suite::Hankel => hankel(n),
        Suite::Cube => cube(n),
        Suite::Dkc => dkc(n, opts),
        Suite::Bijection => bijection(n, opts),
        Suite::Transform => transform(n, opts),
        Suite::All => Vec::new(),
    }
}

fn fraction_cases(
    family: Family,
    n: usize,
    rhs: impl Fn(usize) -> Result<Laurent>,
) -> Vec<CaseResult> {
    match eval_s_fraction(&family, n) {
        Ok(s) => (0..=n)
            .map(|i| case(format!("n={i}"), || Ok(eq(s.coeff(i), &rhs(i)?))))
            .collect(),
        Err(e) => vec![case("fraction", || Err(e))],
    }
}

fn tourio(n: usize) -> Vec<CaseResult> {
    fraction_cases(Family::Touchard, n, rhs_touchard)
}

fn qsec(n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    let mut out = fraction_cases(Family::QSecant, n, rhs_qsecant);
    let w = WeightPair::new(WeightSeq::U(0), WeightSeq::U(0));
    for i in 0..=n.min(5) {
        out.push(case(format!("dyck/n={i}"), || {
            Ok(eq(
                &weight_sum(PathKind::Dyck, i, &w, opts.limit)?,
                &rhs_qsecant(i)?,
            ))
        }));
    }
    out
}

/// Large Schröder numbers by their convolution recurrence.
fn schroder_numbers(n: usize) -> Vec<u64> {
    let mut r = vec![1u64];
    for m in 1..=n {
        let conv: u64 = (0..m).map(|k| r[k] * r[m - 1 - k]).sum();
        r.push(r[m - 1] + conv);
    }
    r
}

fn jtp(n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    let mut out = fraction_cases(Family::Jtp, n, |i| Ok(rhs_jtp(i)));
    let order = n + 2;
    out.push(case(format!("t-form/order={order}"), || {
        let t = eval_t_fraction(&Family::Jtp, order)?;
        Ok(holds(t == h_series(order), || {
            "T-fraction differs from the theta double sum".into()
        }))
    }));
    let counts = schroder_numbers(5);
    let jj = WeightPair::new(WeightSeq::J, WeightSeq::JPrime);
    for (k, &expected) in counts.iter().enumerate().take(n.min(5) + 1) {
        out.push(case(format!("schroder/k={k}"), || {
            let count = enumerate(PathKind::Schroder, k).count() as u64;
            Ok(all([
                holds(count == expected, || {
                    format!("{count} paths, expected {expected}")
                }),
                eq(
                    &weight_sum(PathKind::Schroder, k, &jj, opts.limit)?,
                    &theta_sum(k).value,
                ),
            ]))
        }));
    }
    for k in 0..=n.min(4) {
        out.push(case(format!("md-star/k={k}"), || {
            let w = jj.clone().minus_one();
            Ok(eq(
                &weight_sum(PathKind::MdStar, k, &w, opts.limit)?,
                &theta_sum(k).value,
            ))
        }));
    }
    out
}

/// The six parameter pairs of the two-parameter moments.
const MU_PAIRS: [(i64, i64); 6] = [(0, 2), (0, 4), (2, 4), (2, 6), (1, 3), (3, 5)];
/// The pairs checked against ratios of cosines.
const COS_PAIRS: [(i64, i64); 4] = [(0, 2), (2, 4), (2, 6), (1, 3)];

fn theo_s(n: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for (a2, b2) in MU_PAIRS {
        let (a, b) = (Half::halves(a2), Half::halves(b2));
        let lhs = mu_sequence(n, a, b);
        for i in 0..=n {
            out.push(case(format!("mu({a},{b})/n={i}"), || {
                let l = lhs.as_ref().map_err(Clone::clone)?[i].clone();
                let r = mu_rhs(i, a, b)?;
                let positive = !mu_is_positive_regime(a, b)
                    || (r.is_polynomial() && r.has_nonnegative_integer_coefficients());
                Ok(all([
                    eq(&l, &r),
                    holds(positive, || {
                        format!("{r} has a negative or fractional coefficient")
                    }),
                ]))
            }));
        }
    }
    out.push(case("mu(1,1)/terminates", || {
        let m = mu_sequence(n, Half::int(1), Half::int(1))?;
        Ok(holds(
            m[0].is_one() && m[1..].iter().all(Laurent::is_zero),
            || "nonzero moment past n=0".into(),
        ))
    }));
    for (a2, b2) in COS_PAIRS {
        let (a, b) = (Half::halves(a2), Half::halves(b2));
        let m = n.min(5);
        out.push(case(format!("cos-ratio({a},{b})/n<={m}"), || {
            Ok(holds(egf_check_cos(a, b, m)?, || {
                "values at q=1 differ from the cosine ratio".into()
            }))
        }));
    }
    let order = 2 * n + 1;
    out.push(case(format!("laplace/order={order}"), || {
        Ok(holds(laplace_check(n)?, || "the two sides differ".into()))
    }));
    out
}

fn genocchi(n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    let lhs = genocchi_sequence(n.max(1));
    let at_one = genocchi_egf_values(n);
    let w = WeightPair::new(WeightSeq::G1, WeightSeq::G2);
    (1..=n)
        .map(|i| {
            case(format!("n={i}"), || {
                let g = lhs.as_ref().map_err(Clone::clone)?[i - 1].clone();
                let expected_at_one = at_one.as_ref().map_err(Clone::clone)?[i - 1].clone();
                let y = y_k(i)?;
                let mut checks = vec![
                    eq(&g, &genocchi_rhs(i, GenocchiForm::GY)?),
                    eq(&g, &genocchi_rhs(i, GenocchiForm::PK)?),
                    holds(g.eval_one() == expected_at_one, || {
                        format!("value {} at q=1, expected {expected_at_one}", g.eval_one())
                    }),
                    holds(y.is_polynomial(), || {
                        format!("Y_{i} = {y} is not a polynomial")
                    }),
                    eq(&y, &w_k(i)?),
                ];
                if i <= 5 {
                    checks.push(eq(&y, &weight_sum(PathKind::MdStar, i, &w, opts.limit)?));
                }
                Ok(all(checks))
            })
        })
        .collect()
}

fn funeq(n: usize) -> Vec<CaseResult> {
    let mut out: Vec<CaseResult> = FunEq::ALL
        .into_iter()
        .map(|id| {
            case(format!("{id}/order={n}"), || {
                let r = verify_functional_equation(id, n)?;
                Ok(holds(r.is_zero(), || format!("residual {r}")))
            })
        })
        .collect();
    out.push(case(format!("{}/perturbed-detected", FunEq::FGen), || {
        let bad = |k: i64| {
            if k == 1 {
                &p_k(1) + &Laurent::one()
            } else {
                p_k(k)
            }
        };
        let r = verify_f_equation_with(&bad, n.max(2))?;
        Ok(holds(!r.coeff(1).is_zero(), || {
            "perturbing P_1 left no residual at z^1".into()
        }))
    }));
    out.push(case("omega/initial", || {
        Ok(holds(verify_omega_initial().proportional, || {
            "not proportional".into()
        }))
    }));
    out.push(case("lambda/initial", || {
        Ok(holds(verify_lambda_initial().proportional, || {
            "not proportional".into()
        }))
    }));
    for i in 0..=5 {
        out.push(case(format!("omega/n={i}"), || {
            Ok(holds(verify_omega_recurrence(i).proportional, || {
                "not proportional".into()
            }))
        }));
        out.push(case(format!("lambda/n={i}"), || {
            Ok(holds(verify_lambda_recurrence(i).proportional, || {
                "not proportional".into()
            }))
        }));
    }
    out
}

/// `sum_{i=-k}^{k} y^i q^(i^2)`.
fn theta_series(k: usize) -> Laurent {
    let k = k as i64;
    Laurent::from_terms(1, (-k..=k).map(|i| (Mono::new(i * i, i), Scalar::ONE)))
}

const AB_PAIRS: [(u32, u32); 3] = [(0, 1), (1, 1), (1, 2)];

fn congruence(n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for k in 1..=n {
        let below = k as i64;
        out.push(case(format!("q/k={k}"), || {
            Ok(eq(
                &delta_plus_sum_truncated(k, WeightScheme::Q, below)?,
                &truncated_products(&Product::Gauss, below),
            ))
        }));
        out.push(case(format!("yq/k={k}"), || {
            Ok(eq(
                &delta_plus_sum_truncated(k, WeightScheme::YQ, below)?,
                &truncated_products(&Product::Jtp, below),
            ))
        }));
        for (a, b) in AB_PAIRS {
            out.push(case(format!("ab({a},{b})/k={k}"), || {
                let sum = delta_plus_sum_truncated(k, WeightScheme::AB { a, b }, below)?;
                Ok(eq(&sum, &truncated_products(&Product::Ab { a, b }, below)))
            }));
        }
    }
    let tk = n.min(10);
    for (a, b) in [(0, 0), (0, 1), (1, 1), (1, 2)] {
        out.push(case(format!("t-ab({a},{b})/k<={tk}"), || {
            let ts = t_ab_sequence(tk, a, b)?;
            let mut checks = Vec::new();
            for (k, t) in ts.iter().enumerate() {
                checks.push(holds(t.is_polynomial(), || {
                    format!("T_{k} = {t} is not a polynomial")
                }));
                checks.push(eq(
                    &t.truncate_q(k as i64),
                    &truncated_products(&Product::Ab { a, b }, k as i64),
                ));
                if k <= 4 {
                    checks.push(eq(
                        t,
                        &delta_plus_sum(k, WeightScheme::AB { a, b }, opts.limit)?,
                    ));
                }
            }
            Ok(all(checks))
        }));
    }
    let big = n as i64;
    out.push(case(format!("gauss/mod q^{big}"), || {
        Ok(eq(
            &truncated_products(&Product::Gauss, big),
            &gauss_sum(n).truncate_q(big),
        ))
    }));
    out.push(case(format!("triple-product/mod q^{big}"), || {
        Ok(eq(
            &truncated_products(&Product::Jtp, big),
            &theta_series(n).truncate_q(big),
        ))
    }));
    out
}

fn hankel(n: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for family in [HankelFamily::JtpMoments, HankelFamily::GenocchiMoments] {
        for i in 1..=n {
            out.push(case(format!("{family}/n={i}"), || {
                Ok(holds(hankel_check(family, i)?, || {
                    "determinants do not match the product formulas".into()
                }))
            }));
        }
    }
    out
}

fn cube(n: usize) -> Vec<CaseResult> {
    (1..=n as i64)
        .map(|big| {
            let k = big as usize + 2;
            case(format!("mod q^{big}/k={k}"), || {
                Ok(holds(jacobi_cube_limit_check(big, k)?, || {
                    "congruence fails".into()
                }))
            })
        })
        .collect()
}

fn dkc(n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    let mut out = Vec::new();
    let mut prev: Option<Laurent> = None;
    let v1 = WeightPair::new(WeightSeq::V(0), WeightSeq::V(0)).minus_one();
    for k in 0..=n {
        let q_sum = delta_plus_sum(k, WeightScheme::Q, opts.limit);
        out.push(case(format!("q-sum/k={k}"), || {
            Ok(eq(q_sum.as_ref().map_err(Clone::clone)?, &gauss_sum(k)))
        }));
        out.push(case(format!("yq-sum/k={k}"), || {
            Ok(eq(
                &delta_plus_sum(k, WeightScheme::YQ, opts.limit)?,
                &theta_series(k),
            ))
        }));
        if let (Some(p), Ok(cur)) = (&prev, &q_sum) {
            out.push(case(format!("recurrence/k={k}"), || {
                let sign = if k % 2 == 0 { 2 } else { -2 };
                Ok(eq(cur, &(p + &Laurent::monomial(sign, (k * k) as i64, 0))))
            }));
        }
        out.push(case(format!("md-star/k={k}"), || {
            let paths = weight_sum(PathKind::MdStar, k, &v1, opts.limit)?;
            let ki = k as i64;
            Ok(eq(
                &paths,
                &q_sum
                    .as_ref()
                    .map_err(Clone::clone)?
                    .q_inverse()
                    .shift(ki * (ki + 1), 0),
            ))
        }));
        out.push(case(format!("prime-sum/k={k}"), || {
            let e = ((k + 2) * (k + 1) / 2) as i64 - 1;
            Ok(eq(
                &delta_plus_sum(k, WeightScheme::Prime, opts.limit)?,
                &y_k(k)?.q_inverse().shift(e, 0),
            ))
        }));
        prev = q_sum.ok();
    }
    out
}

fn bijection(n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.push(case(format!("psi-phi/k={k}"), || {
            psi_phi_case(k, opts.limit)
        }));
    }
    for k in 1..=n {
        out.push(case(format!("involution-f/k={k}"), || {
            involution_case(k, opts.limit)
        }));
    }
    for k in 0..=n + 2 {
        out.push(case(format!("half/k={k}"), || {
            let mut seen = BTreeSet::new();
            for h in half_configs(k, opts.limit)? {
                let mu = psi1(&h);
                if mu.weight() != h.weight() || phi1(&mu, k)? != h {
                    return Ok(Some(format!("round trip fails on {h}")));
                }
                seen.insert(mu);
            }
            let total = overpartitions(k, opts.limit)?.len();
            Ok(holds(seen.len() == total, || {
                format!("{} images for {total} overpartitions", seen.len())
            }))
        }));
    }
    for k in 0..=2 * n {
        out.push(case(format!("overpartition/k={k}"), || {
            let mut total = Laurent::zero();
            let mut fixed = 0;
            for mu in overpartitions(k, opts.limit)? {
                match overpartition_involution(&mu) {
                    Ok(img) if img.weight() == -mu.weight() => {}
                    Ok(_) => return Ok(Some(format!("{mu} keeps its sign"))),
                    Err(Error::FixedPoint) => fixed += 1,
                    Err(e) => return Err(e),
                }
                total = &total + &mu.weight();
            }
            Ok(all([
                holds(fixed == 1, || format!("{fixed} fixed points")),
                eq(&total, &Laurent::one()),
            ]))
        }));
    }
    out
}

fn psi_phi_case(k: usize, limit: u64) -> Outcome {
    let plus = delta_plus(k, limit)?;
    let minus: BTreeSet<DeltaConfig> = delta_minus(k, limit)?.into_iter().collect();
    let mut image = BTreeSet::new();
    for c in &plus {
        let d = psi(c)?;
        if !is_delta_minus(&d)
            || d.weight(WeightScheme::Q) != c.weight(WeightScheme::Q)
            || phi(&d)? != *c
        {
            return Ok(Some(format!("psi misbehaves on {c}")));
        }
        image.insert(d);
    }
    Ok(holds(image == minus && image.len() == plus.len(), || {
        format!(
            "{} images, {} local-condition configurations",
            image.len(),
            minus.len()
        )
    }))
}

fn involution_case(k: usize, limit: u64) -> Outcome {
    let mut fixed = Vec::new();
    let mut rest = Laurent::zero();
    for c in delta_minus(k, limit)? {
        if is_embedded_previous(&c) {
            continue;
        }
        match involution_f(&c) {
            Ok(d) => {
                if involution_f(&d)? != c || d.weight(WeightScheme::Q) != -c.weight(WeightScheme::Q)
                {
                    return Ok(Some(format!("f is not a sign-reversing involution at {c}")));
                }
                rest = &rest + &c.weight(WeightScheme::Q);
            }
            Err(Error::FixedPoint) => fixed.push(c),
            Err(e) => return Err(e),
        }
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let expect = Laurent::monomial(sign, (k * k) as i64, 0);
    Ok(all([
        holds(rest.is_zero(), || {
            format!("non-fixed weights sum to {rest}")
        }),
        holds(fixed.len() == 2, || format!("{} fixed points", fixed.len())),
        holds(
            fixed.iter().all(|c| c.weight(WeightScheme::Q) == expect),
            || "fixed point of the wrong weight".into(),
        ),
    ]))
}

/// A small random Laurent polynomial in `q` and `y`.
fn random_laurent(rng: &mut ChaCha8Rng) -> Laurent {
    let terms = rng.gen_range(1..=3);
    Laurent::from_terms(
        1,
        (0..terms).map(|_| {
            let c = rng.gen_range(-3i64..=3);
            (
                Mono::new(rng.gen_range(0..=3), rng.gen_range(-1..=1)),
                Scalar::from(c),
            )
        }),
    )
}

fn transform(n: usize, opts: &VerifyOptions) -> Vec<CaseResult> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for len in 1..=n {
        let lambda = ListSequence((0..len).map(|_| random_laurent(&mut rng)).collect());
        out.push(case(format!("moment-transform/len={len}"), || {
            let s = eval_s_fraction(&lambda, len)?.coeffs().to_vec();
            let t = eval_t_fraction(&lambda, len)?.coeffs().to_vec();
            Ok(all([
                holds(s_coeffs_from_t(&t) == s, || {
                    "S-coefficients differ from the transformed T-coefficients".into()
                }),
                holds(t_coeffs_from_s(&s) == t, || {
                    "inverse transform does not recover the T-coefficients".into()
                }),
            ]))
        }));
    }
    for family in [Family::Touchard, Family::QSecant, Family::Genocchi] {
        out.push(case(format!("moment-transform/{family}"), || {
            let s = eval_s_fraction(&family, n)?.coeffs().to_vec();
            let t = eval_t_fraction(&family, n)?.coeffs().to_vec();
            Ok(holds(s_coeffs_from_t(&t) == s, || {
                "S-coefficients differ from the transformed T-coefficients".into()
            }))
        }));
    }
    for k in 0..=4 {
        out.push(case(format!("lagrange/k={k}"), || {
            let r = verify_lagrange_identity(k, 8)?;
            Ok(holds(r.is_zero(), || format!("residual {r}")))
        }));
    }
    let c: Vec<Laurent> = (0..=12).map(|_| random_laurent(&mut rng)).collect();
    let coeff = |i: usize| c[i].clone();
    out.push(case("contraction/order=6", || {
        let plain = contract_fraction(&coeff, Contraction::Plain, 6)?;
        Ok(all([
            holds(
                contract_fraction(&coeff, Contraction::First, 6)? == plain,
                || "first contraction differs".into(),
            ),
            holds(
                contract_fraction(&coeff, Contraction::Second, 6)? == plain,
                || "second contraction differs".into(),
            ),
        ]))
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schroder_counts() {
        assert_eq!(schroder_numbers(5), vec![1, 2, 6, 22, 90, 394]);
    }

    #[test]
    fn small_suites_pass() {
        let opts = VerifyOptions::default();
        for (suite, n) in [
            (Suite::Tourio, 4),
            (Suite::Jtp, 3),
            (Suite::Dkc, 3),
            (Suite::Bijection, 2),
            (Suite::Transform, 4),
        ] {
            for c in run(suite, n, &opts) {
                assert!(c.pass, "{suite} {}: {:?}", c.id, c.residual);
            }
        }
    }
}
