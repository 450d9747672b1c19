//! Acceptance criteria, one PASS/FAIL line each, with pinned sizes and time bounds.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use qfrac::formulas::{genocchi_sequence, mu, y_k};
use qfrac::qcore::{factorial, Half, Scalar};
use qfrac::verify::{run_suite, RunReport, Suite, VerifyOptions};

fn suite(s: Suite, max_n: usize) -> RunReport {
    run_suite(
        s,
        &VerifyOptions {
            max_n: Some(max_n),
            ..Default::default()
        },
    )
}

fn failures(r: &RunReport) -> Vec<String> {
    r.cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}/{}", r.suite, c.id))
        .collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Power series of `cos(c z)` to `z^len-1`.
fn cos_series(c: &BigRational, len: usize) -> Vec<BigRational> {
    (0..len)
        .map(|i| {
            if i % 2 == 1 {
                return BigRational::zero();
            }
            let sign = if i % 4 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            sign * num_traits::pow(c.clone(), i) / BigRational::from(factorial(i as u64))
        })
        .collect()
}

/// Power series of `sin(c z)` to `z^len-1`.
fn sin_series(c: &BigRational, len: usize) -> Vec<BigRational> {
    (0..len)
        .map(|i| {
            if i % 2 == 0 {
                return BigRational::zero();
            }
            let sign = if i % 4 == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            sign * num_traits::pow(c.clone(), i) / BigRational::from(factorial(i as u64))
        })
        .collect()
}

/// `f / g` as power series, with `g_0 != 0`.
fn divide(f: &[BigRational], g: &[BigRational]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(f.len());
    for i in 0..f.len() {
        let mut acc = f[i].clone();
        for j in 1..=i {
            acc -= &g[j] * &out[i - j];
        }
        out.push(acc / &g[0]);
    }
    out
}

/// `(2n)! [z^(2n)] z tan(z/2)` for `n = 1..=max_n`.
fn genocchi_oracle(max_n: usize) -> Vec<BigRational> {
    let len = 2 * max_n + 1;
    let tan = divide(&sin_series(&rat(1, 2), len), &cos_series(&rat(1, 2), len));
    (1..=max_n)
        .map(|n| &tan[2 * n - 1] * BigRational::from(factorial(2 * n as u64)))
        .collect()
}

/// `(2n)! [z^(2n)] cos(a z) / cos(b z)` for `n = 0..=max_n`.
fn cos_ratio_oracle(a: &BigRational, b: &BigRational, max_n: usize) -> Vec<BigRational> {
    let len = 2 * max_n + 1;
    let r = divide(&cos_series(a, len), &cos_series(b, len));
    (0..=max_n)
        .map(|n| &r[2 * n] * BigRational::from(factorial(2 * n as u64)))
        .collect()
}

struct Criterion {
    name: &'static str,
    bound: Duration,
    run: fn() -> Vec<String>,
}

fn c1() -> Vec<String> {
    failures(&suite(Suite::Tourio, 8))
}

fn c2() -> Vec<String> {
    let r = suite(Suite::Qsec, 8);
    let mut f = failures(&r);
    if r.cases.iter().filter(|c| c.id.starts_with("dyck/")).count() != 6 {
        f.push("expected Dyck checks for n = 0..5".into());
    }
    f
}

fn c3() -> Vec<String> {
    let r = suite(Suite::Jtp, 6);
    let mut f = failures(&r);
    for id in ["t-form/order=8", "schroder/k=4", "schroder/k=5"] {
        if !r.cases.iter().any(|c| c.id == id) {
            f.push(format!("missing case {id}"));
        }
    }
    f
}

fn c4() -> Vec<String> {
    failures(&suite(Suite::Dkc, 5))
}

fn c5() -> Vec<String> {
    let r = suite(Suite::Bijection, 4);
    let mut f = failures(&r);
    for id in [
        "half/k=6",
        "psi-phi/k=4",
        "involution-f/k=4",
        "overpartition/k=8",
    ] {
        if !r.cases.iter().any(|c| c.id == id) {
            f.push(format!("missing case {id}"));
        }
    }
    f
}

fn c6() -> Vec<String> {
    let mut f = failures(&suite(Suite::Genocchi, 8));
    for k in 1..=10 {
        match y_k(k) {
            Ok(y) if y.is_polynomial() => {}
            Ok(y) => f.push(format!("Y_{k} = {y} is not a polynomial")),
            Err(e) => f.push(format!("Y_{k}: {e}")),
        }
    }
    let expected = [1, 1, 3, 17, 155, 2073];
    let oracle = genocchi_oracle(6);
    let values = genocchi_sequence(6).unwrap();
    for (i, g) in values.iter().enumerate() {
        let at_one = g.eval_one();
        if at_one != Scalar::from(expected[i]) || at_one != Scalar::from_big(oracle[i].clone()) {
            f.push(format!("G_{}(1) = {at_one}", 2 * i + 2));
        }
    }
    f
}

fn c7() -> Vec<String> {
    let r = suite(Suite::Funeq, 10);
    let mut f = failures(&r);
    for id in ["omega/n=5", "lambda/n=5", "omega/initial", "lambda/initial"] {
        if !r.cases.iter().any(|c| c.id == id) {
            f.push(format!("missing case {id}"));
        }
    }
    f
}

fn c8() -> Vec<String> {
    let mut f = failures(&suite(Suite::Congruence, 12));
    f.extend(failures(&suite(Suite::Cube, 10)));
    f
}

fn c9() -> Vec<String> {
    let mut f = failures(&suite(Suite::TheoS, 6));
    for (a2, b2) in [(0, 2), (2, 4), (2, 6), (1, 3)] {
        let (a, b) = (Half::halves(a2), Half::halves(b2));
        let oracle = cos_ratio_oracle(&rat(a2, 2), &rat(b2, 2), 5);
        for (n, want) in oracle.iter().enumerate() {
            let got = mu(n, a, b).map(|m| m.eval_one());
            if got != Ok(Scalar::from_big(want.clone())) {
                f.push(format!(
                    "mu_{n}({a},{b}) at q=1 is {got:?}, expected {want}"
                ));
            }
        }
    }
    f
}

fn c10() -> Vec<String> {
    let mut f = failures(&suite(Suite::Transform, 10));
    f.extend(failures(&suite(Suite::Hankel, 4)));
    f
}

fn main() {
    let criteria = [
        Criterion {
            name: "Touchard-Riordan fraction equals closed form, n <= 8",
            bound: Duration::from_secs(5),
            run: c1,
        },
        Criterion {
            name: "q-secant fraction, closed form and Dyck sums",
            bound: Duration::from_secs(10),
            run: c2,
        },
        Criterion {
            name: "finite triple product S/T forms and Schroder sums",
            bound: Duration::from_secs(60),
            run: c3,
        },
        Criterion {
            name: "staircase configuration sums and recurrence, k <= 5",
            bound: Duration::from_secs(60),
            run: c4,
        },
        Criterion {
            name: "bijections and involutions",
            bound: Duration::from_secs(120),
            run: c5,
        },
        Criterion {
            name: "q-Genocchi closed forms, Y_k divisibility, values at q=1",
            bound: Duration::from_secs(30),
            run: c6,
        },
        Criterion {
            name: "functional equations and Mobius tail recurrences",
            bound: Duration::from_secs(60),
            run: c7,
        },
        Criterion {
            name: "limit congruences, cube limit, Gauss identity",
            bound: Duration::from_secs(60),
            run: c8,
        },
        Criterion {
            name: "two-parameter moments, positivity, cosine ratios, Laplace identity",
            bound: Duration::from_secs(60),
            run: c9,
        },
        Criterion {
            name: "moment transform, Lagrange identity, contractions, Hankel products",
            bound: Duration::from_secs(30),
            run: c10,
        },
    ];
    let mut all_ok = true;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let fails = (c.run)();
        let elapsed = start.elapsed();
        let ok = fails.is_empty() && elapsed <= c.bound;
        all_ok &= ok;
        println!(
            "{} {:>2} {} ({} ms, bound {} s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            c.name,
            elapsed.as_millis(),
            c.bound.as_secs()
        );
        for f in fails {
            println!("      {f}");
        }
    }
    let start = Instant::now();
    let full = run_suite(Suite::All, &VerifyOptions::default());
    let elapsed = start.elapsed();
    let ok = full.pass && elapsed <= Duration::from_secs(300);
    all_ok &= ok;
    println!(
        "{} full run of every suite, {} cases ({} ms, bound 300 s)",
        if ok { "PASS" } else { "FAIL" },
        full.cases.len(),
        elapsed.as_millis()
    );
    if !all_ok {
        std::process::exit(1);
    }
}
