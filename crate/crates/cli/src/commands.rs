//! The subcommands.

use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use qfrac::configs::{
    delta_minus, delta_plus, half_configs, involution_f, overpartition_involution, overpartitions,
    phi1, phi_trace, psi1, psi_trace, DeltaConfig, HalfConfig, Overpartition, WeightScheme,
};
use qfrac::contfrac::{
    eval_fraction_kind, lambda_matrix, omega_matrix, verify_lambda_recurrence,
    verify_omega_recurrence, Family, FractionKind, Mobius2x2,
};
use qfrac::formulas::{
    genocchi_rhs, hankel_det, moments, mu_rhs, rhs_jtp, rhs_qsecant, rhs_touchard,
    verify_functional_equation, FunEq, GenocchiForm, HankelFamily,
};
use qfrac::paths::{enumerate, path_weight, PathKind, WeightPair};
use qfrac::qcore::{Half, Laurent, Scalar};
use qfrac::verify::{run_suite, Suite, VerifyOptions};
use qfrac::{Error, Result};

use crate::{Command, Global, Output};

pub fn run(cmd: &Command, g: &Global) -> Result<Output> {
    match cmd {
        Command::Compute(a) => compute(a, g),
        Command::Verify(a) => verify(a, g),
        Command::Enumerate(a) => enumerate_cmd(a, g),
        Command::Bijection(a) => bijection(a, g),
        Command::Funeq(a) => funeq(a),
        Command::Matrix(a) => matrix(a),
    }
}

fn laurent_json(x: &Laurent, g: &Global) -> Result<Value> {
    x.to_json_value(g.granularity)
}

fn parse_half(s: &str) -> std::result::Result<Half, String> {
    s.parse::<Half>().map_err(|e| e.to_string())
}

/// How to produce the value.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    /// Expand the continued fraction.
    Fraction,
    /// Evaluate the closed-form double sum.
    Closed,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Family: touchard, qsecant, jtp, jtp-sub, mu, genocchi, genocchi-scaled, eab, v, xi.
    #[arg(long)]
    pub family: String,
    /// Index of the coefficient.
    #[arg(long)]
    pub n: usize,
    /// First parameter (integer or half-integer such as 3/2).
    #[arg(long, value_parser = parse_half)]
    pub a: Option<Half>,
    /// Second parameter.
    #[arg(long, value_parser = parse_half)]
    pub b: Option<Half>,
    /// Fraction kind (s or t); defaults to the family's usual kind.
    #[arg(long)]
    pub kind: Option<String>,
    /// Continued fraction or closed form.
    #[arg(long, value_enum, default_value_t = Via::Fraction)]
    pub via: Via,
    /// Substitution for y: `keep`, `one`, a rational such as `-1`, or `negq:A,B` for y = -q^A, q -> q^B.
    #[arg(long, default_value = "keep", allow_hyphen_values = true)]
    pub y_spec: String,
}

fn apply_y_spec(x: &Laurent, spec: &str) -> Result<Laurent> {
    match spec {
        "keep" => Ok(x.clone()),
        "one" => x.eval_y(&Scalar::ONE),
        _ => {
            if let Some(rest) = spec.strip_prefix("negq:") {
                let (a, b) = rest
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad y-spec {spec:?}")))?;
                return Ok(x.substitute_y_q(-1, a.parse()?, b.parse()?));
            }
            x.eval_y(&spec.parse::<Scalar>()?)
        }
    }
}

fn compute(a: &ComputeArgs, g: &Global) -> Result<Output> {
    let family = Family::from_name(&a.family, a.a, a.b)?;
    let kind = match &a.kind {
        Some(k) => k.parse::<FractionKind>()?,
        None => family.default_kind(),
    };
    let value = match a.via {
        Via::Fraction => eval_fraction_kind(&family, kind, a.n)?.coeff(a.n).clone(),
        Via::Closed => match family {
            Family::Touchard => rhs_touchard(a.n)?,
            Family::QSecant => rhs_qsecant(a.n)?,
            Family::Jtp => rhs_jtp(a.n),
            Family::Mu { a: pa, b: pb } => mu_rhs(a.n, pa, pb)?,
            Family::Genocchi => genocchi_rhs(a.n + 1, GenocchiForm::GY)?,
            _ => return Err(Error::Domain(format!("no closed form for {family}"))),
        },
    };
    let value = apply_y_spec(&value, &a.y_spec)?;
    let kind_name = if kind == FractionKind::S { "s" } else { "t" };
    Ok(Output {
        json: json!({
            "family": family.to_string(),
            "kind": kind_name,
            "n": a.n,
            "via": if a.via == Via::Fraction { "fraction" } else { "closed" },
            "value": laurent_json(&value, g)?,
            "text": value.to_string(),
        }),
        text: value.to_string(),
        ok: true,
    })
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite: tourio, qsec, jtp, theoS, genocchi, funeq, congruence, hankel, cube, dkc, bijection, transform, all.
    #[arg(long)]
    pub suite: String,
    /// Size parameter; each suite has its own default.
    #[arg(long)]
    pub max_n: Option<usize>,
}

fn verify(a: &VerifyArgs, g: &Global) -> Result<Output> {
    let suite: Suite = a.suite.parse()?;
    let report = run_suite(
        suite,
        &VerifyOptions {
            max_n: a.max_n,
            seed: g.seed,
            limit: g.limit,
        },
    );
    Ok(Output {
        json: serde_json::to_value(&report).expect("serialisable"),
        text: report.to_string(),
        ok: report.pass,
    })
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// half, delta-plus, delta-minus, overpartition, or a path kind (dyck, schroder, marked-schroder, marked-dyck, md-star).
    #[arg(long)]
    pub objects: String,
    /// Staircase size, or half-length for paths.
    #[arg(long)]
    pub k: usize,
    /// Configuration weight (q, yq, ab:A,B, prime) or path weight pair such as `u,one` or `v-1,v-1`.
    #[arg(long)]
    pub weight: Option<String>,
    /// Include every object in the output.
    #[arg(long)]
    pub list: bool,
}

fn parse_scheme(s: &str) -> Result<WeightScheme> {
    match s {
        "q" => Ok(WeightScheme::Q),
        "yq" => Ok(WeightScheme::YQ),
        "prime" => Ok(WeightScheme::Prime),
        _ => {
            let rest = s
                .strip_prefix("ab:")
                .ok_or_else(|| Error::Parse(format!("unknown weight {s:?}")))?;
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad weight {s:?}")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad weight {s:?}")))
            };
            Ok(WeightScheme::AB {
                a: num(a)?,
                b: num(b)?,
            })
        }
    }
}

fn enumerate_cmd(a: &EnumerateArgs, g: &Global) -> Result<Output> {
    let mut items: Vec<(String, Value, Laurent)> = Vec::new();
    match a.objects.as_str() {
        "delta-plus" | "delta-minus" => {
            let scheme = parse_scheme(a.weight.as_deref().unwrap_or("q"))?;
            let list = if a.objects == "delta-plus" {
                delta_plus(a.k, g.limit)?
            } else {
                delta_minus(a.k, g.limit)?
            };
            for c in list {
                items.push((
                    c.to_string(),
                    serde_json::to_value(&c).expect("serialisable"),
                    c.weight(scheme),
                ));
            }
        }
        "half" => {
            for h in half_configs(a.k, g.limit)? {
                items.push((
                    h.to_string(),
                    serde_json::to_value(&h).expect("serialisable"),
                    h.weight(),
                ));
            }
        }
        "overpartition" => {
            for mu in overpartitions(a.k, g.limit)? {
                items.push((mu.to_string(), json!(mu.to_string()), mu.weight()));
            }
        }
        other => {
            let kind: PathKind = other.parse()?;
            let w: WeightPair = a.weight.as_deref().unwrap_or("one,one").parse()?;
            for (count, p) in enumerate(kind, a.k).enumerate() {
                if count as u64 >= g.limit {
                    return Err(Error::SizeLimit(g.limit));
                }
                items.push((p.to_string(), json!(p.to_string()), path_weight(&p, &w)));
            }
        }
    }
    let total = items
        .iter()
        .fold(Laurent::zero(), |acc, (_, _, w)| &acc + w);
    let mut text = format!("{} objects, weight sum {total}", items.len());
    let mut json = json!({
        "objects": a.objects,
        "k": a.k,
        "count": items.len(),
        "weight_sum": laurent_json(&total, g)?,
    });
    if a.list {
        let list: Vec<Value> = items
            .iter()
            .map(|(_, v, w)| Ok(json!({"object": v, "weight": laurent_json(w, g)?})))
            .collect::<Result<_>>()?;
        json["items"] = Value::Array(list);
        for (s, _, w) in &items {
            let _ = write!(text, "\n{s}    {w}");
        }
    }
    Ok(Output {
        json,
        text,
        ok: true,
    })
}

/// The maps accepted by `bijection`.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapName {
    /// k-arrow configurations to the local-condition family.
    Psi,
    /// Inverse of psi.
    Phi,
    /// Half configurations to overpartitions.
    Psi1,
    /// Inverse of psi1 (needs --k).
    Phi1,
    /// Sign-reversing involution on the local-condition family.
    F,
    /// Toggle the overline of the last part.
    OverpartitionInvolution,
}

#[derive(Args, Debug)]
pub struct BijectionArgs {
    /// Which map.
    #[arg(long, value_enum)]
    pub map: MapName,
    /// A configuration (`k=7 lambda=[4,2,2] arrows=[h3 v2']` or JSON) or an overpartition (`(3,3',1')`).
    #[arg(long)]
    pub input: String,
    /// Staircase size, for maps whose input does not carry it.
    #[arg(long)]
    pub k: Option<usize>,
    /// Show every intermediate stage.
    #[arg(long)]
    pub trace: bool,
}

fn config_value(c: &DeltaConfig) -> Value {
    json!({"config": serde_json::to_value(c).expect("serialisable"), "text": c.to_string()})
}

fn half_from_config(c: &DeltaConfig) -> Result<HalfConfig> {
    let mut rows = Vec::new();
    for a in c.arrows() {
        if a.o != qfrac::configs::Orientation::Horizontal || a.kind != qfrac::configs::ArrowKind::K
        {
            return Err(Error::Domain(
                "half configurations hold horizontal k-arrows only".into(),
            ));
        }
        rows.push(a.i);
    }
    HalfConfig::new(c.k(), c.lambda(), &rows)
}

fn bijection(a: &BijectionArgs, g: &Global) -> Result<Output> {
    let map_name = a
        .map
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    let (json, text) = match a.map {
        MapName::Psi | MapName::Phi => {
            let c: DeltaConfig = a.input.parse()?;
            let trace = if a.map == MapName::Psi {
                psi_trace(&c)?
            } else {
                phi_trace(&c)?
            };
            let out = trace.last().expect("nonempty");
            let mut json = json!({
                "map": map_name,
                "input": config_value(&c),
                "output": config_value(out),
                "weight": laurent_json(&out.weight(WeightScheme::Q), g)?,
            });
            let mut text = format!("{out}\n{}", out.render());
            if a.trace {
                json["trace"] = Value::Array(trace.iter().map(config_value).collect());
                text = trace
                    .iter()
                    .map(|t| format!("{t}\n{}", t.render()))
                    .collect::<Vec<_>>()
                    .join("\n\n");
            }
            (json, text)
        }
        MapName::F => {
            let c: DeltaConfig = a.input.parse()?;
            match involution_f(&c) {
                Ok(d) => (
                    json!({"map": map_name, "input": config_value(&c), "output": config_value(&d), "fixed_point": false}),
                    format!("{d}\n{}", d.render()),
                ),
                Err(Error::FixedPoint) => (
                    json!({"map": map_name, "input": config_value(&c), "output": Value::Null, "fixed_point": true}),
                    format!("{c} is a fixed point"),
                ),
                Err(e) => return Err(e),
            }
        }
        MapName::Psi1 => {
            let h = half_from_config(&a.input.parse()?)?;
            let mu = psi1(&h);
            (
                json!({"map": map_name, "input": config_value(&h.to_config()), "output": mu.to_string(), "weight": laurent_json(&mu.weight(), g)?}),
                mu.to_string(),
            )
        }
        MapName::Phi1 => {
            let mu: Overpartition = a.input.parse()?;
            let k = a.k.ok_or_else(|| Error::Domain("phi1 needs --k".into()))?;
            let h = phi1(&mu, k)?;
            (
                json!({"map": map_name, "input": mu.to_string(), "output": config_value(&h.to_config()), "weight": laurent_json(&h.weight(), g)?}),
                format!("{h}\n{}", h.to_config().render()),
            )
        }
        MapName::OverpartitionInvolution => {
            let mu: Overpartition = a.input.parse()?;
            match overpartition_involution(&mu) {
                Ok(img) => (
                    json!({"map": map_name, "input": mu.to_string(), "output": img.to_string(), "fixed_point": false}),
                    img.to_string(),
                ),
                Err(Error::FixedPoint) => (
                    json!({"map": map_name, "input": mu.to_string(), "output": Value::Null, "fixed_point": true}),
                    format!("{mu} is a fixed point"),
                ),
                Err(e) => return Err(e),
            }
        }
    };
    Ok(Output {
        json,
        text,
        ok: true,
    })
}

#[derive(Args, Debug)]
pub struct FuneqArgs {
    /// H, T_JTP, F_GEN or G_GEN.
    #[arg(long)]
    pub id: String,
    /// Order of the series; the residual is reported modulo z^order.
    #[arg(long, default_value_t = 10)]
    pub order: usize,
}

fn funeq(a: &FuneqArgs) -> Result<Output> {
    let id: FunEq = a.id.parse()?;
    let r = verify_functional_equation(id, a.order)?;
    let zero = r.is_zero();
    Ok(Output {
        json: json!({"id": id.name(), "order": a.order, "zero": zero, "residual": serde_json::to_value(&r).expect("serialisable")}),
        text: format!("{id}: residual {r}"),
        ok: zero,
    })
}

/// The matrices accepted by `matrix`.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixName {
    /// Tail matrix of the triple-product fraction.
    Omega,
    /// Tail matrix of the Genocchi fraction.
    Lambda,
    /// Hankel determinants of the triple-product moments.
    HankelJtp,
    /// Hankel determinants of the Genocchi moments.
    HankelGenocchi,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    /// Which matrix.
    #[arg(long, value_enum)]
    pub which: MatrixName,
    /// Index or size.
    #[arg(long)]
    pub n: u32,
}

fn mobius_json(m: &Mobius2x2) -> Value {
    let [a, b, c, d] = m.entries();
    json!({"a": a.to_string(), "b": b.to_string(), "c": c.to_string(), "d": d.to_string()})
}

fn matrix(a: &MatrixArgs) -> Result<Output> {
    let name = a
        .which
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string();
    match a.which {
        MatrixName::Omega | MatrixName::Lambda => {
            let (m, check) = if a.which == MatrixName::Omega {
                (omega_matrix(a.n), verify_omega_recurrence(a.n))
            } else {
                (lambda_matrix(a.n), verify_lambda_recurrence(a.n))
            };
            let [ea, eb, ec, ed] = m.entries();
            Ok(Output {
                json: json!({"which": name, "n": a.n, "matrix": mobius_json(&m), "recurrence": check}),
                text: format!(
                    "[[{ea}, {eb}],\n [{ec}, {ed}]]\nrecurrence holds projectively: {}",
                    check.proportional
                ),
                ok: check.proportional,
            })
        }
        MatrixName::HankelJtp | MatrixName::HankelGenocchi => {
            let family = if a.which == MatrixName::HankelJtp {
                HankelFamily::JtpMoments
            } else {
                HankelFamily::GenocchiMoments
            };
            let n = a.n as usize;
            let m = moments(family, 2 * n + 1)?;
            let det = hankel_det(&m, 0, n)?;
            let shifted = hankel_det(&m, 1, n)?;
            Ok(Output {
                json: json!({"which": name, "n": n, "det": det.to_string(), "shifted_det": shifted.to_string()}),
                text: format!("det M_{n} = {det}\ndet M'_{n} = {shifted}"),
                ok: true,
            })
        }
    }
}
