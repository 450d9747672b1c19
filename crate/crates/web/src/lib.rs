//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON string.
//! The same functions without the `_js` suffix are usable from native code.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use qfrac::configs::{psi_trace, DeltaConfig};
use qfrac::contfrac::{eval_fraction_kind, Family, FractionKind};
use qfrac::paths::{enumerate, path_weight, PathKind, WeightPair};
use qfrac::qcore::Half;

/// Largest order or path length the demo accepts.
pub const MAX_SIZE: usize = 12;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn half(s: &str) -> Result<Option<Half>, String> {
    let s = s.trim();
    if s.is_empty() {
        Ok(None)
    } else {
        s.parse().map(Some).map_err(err)
    }
}

/// Coefficients of `z^0..=z^order` of a named continued fraction.
pub fn fraction_coefficients(
    family: &str,
    kind: &str,
    a: &str,
    b: &str,
    order: usize,
) -> Result<String, String> {
    if order > MAX_SIZE {
        return Err(format!("order is capped at {MAX_SIZE} in the demo"));
    }
    let fam = Family::from_name(family, half(a)?, half(b)?).map_err(err)?;
    let kind = match kind {
        "" => fam.default_kind(),
        k => k.parse::<FractionKind>().map_err(err)?,
    };
    let series = eval_fraction_kind(&fam, kind, order).map_err(err)?;
    let coeffs: Vec<String> = (0..=order).map(|n| series.coeff(n).to_string()).collect();
    Ok(json!({"family": fam.to_string(), "coefficients": coeffs}).to_string())
}

/// Every stage of the configuration map `psi`, with ASCII renderings.
pub fn psi_stages(input: &str) -> Result<String, String> {
    let c: DeltaConfig = input.parse().map_err(err)?;
    let stages: Vec<Value> = psi_trace(&c)
        .map_err(err)?
        .iter()
        .map(|s| json!({"text": s.to_string(), "picture": s.render()}))
        .collect();
    Ok(Value::Array(stages).to_string())
}

/// All paths of a kind and half-length with their weights under a weight pair such as `u,one`.
pub fn list_paths(kind: &str, n: usize, weights: &str) -> Result<String, String> {
    if n > MAX_SIZE / 2 {
        return Err(format!(
            "half-length is capped at {} in the demo",
            MAX_SIZE / 2
        ));
    }
    let kind: PathKind = kind.parse().map_err(err)?;
    let w: WeightPair = weights.parse().map_err(err)?;
    let paths: Vec<Value> = enumerate(kind, n)
        .map(|p| json!({"path": p.to_string(), "weight": path_weight(&p, &w).to_string()}))
        .collect();
    Ok(json!({"count": paths.len(), "paths": paths}).to_string())
}

/// JavaScript entry point for [`fraction_coefficients`].
#[wasm_bindgen]
pub fn fraction_coefficients_js(
    family: &str,
    kind: &str,
    a: &str,
    b: &str,
    order: usize,
) -> Result<String, JsError> {
    fraction_coefficients(family, kind, a, b, order).map_err(|e| JsError::new(&e))
}

/// JavaScript entry point for [`psi_stages`].
#[wasm_bindgen]
pub fn psi_stages_js(input: &str) -> Result<String, JsError> {
    psi_stages(input).map_err(|e| JsError::new(&e))
}

/// JavaScript entry point for [`list_paths`].
#[wasm_bindgen]
pub fn list_paths_js(kind: &str, n: usize, weights: &str) -> Result<String, JsError> {
    list_paths(kind, n, weights).map_err(|e| JsError::new(&e))
}
