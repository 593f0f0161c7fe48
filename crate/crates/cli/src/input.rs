//! Reading and validating command inputs.

use std::fs;

use bsarr::arrangement::{Arrangement, ArrangementJson, Factorization};
use bsarr::bsideals::{BSLocus, CoarseningMap, LocusJson};
use bsarr::Poly;
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::Failure;

fn read(path: &str) -> Result<String, Failure> {
    if path == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::new("io", format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| Failure::new("io", format!("{path}: {e}")))
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| {
        Failure::new("parse", format!("invalid {what}: {e}")).with_detail(json!({ "line": e.line(), "column": e.column() }))
    })
}

pub fn arrangement(path: &str) -> Result<(Arrangement, Option<Factorization>), Failure> {
    let j: ArrangementJson = parse_json(&read(path)?, "arrangement JSON")?;
    Ok(Arrangement::from_json(&j)?)
}

/// A bare locus, or any object carrying one under `"locus"`.
pub fn locus(path: &str) -> Result<BSLocus, Failure> {
    let v: Value = parse_json(&read(path)?, "locus JSON")?;
    let inner = match v.get("locus") {
        Some(l) => l.clone(),
        None => v,
    };
    let j: LocusJson = serde_json::from_value(inner).map_err(|e| Failure::new("parse", format!("invalid locus JSON: {e}")))?;
    Ok(BSLocus::from_json(&j)?)
}

pub fn groups(text: &str) -> Result<Vec<Vec<usize>>, Failure> {
    parse_json(text, "partition")
}

/// `linear`, `trivial`, or explicit groups such as `[[0,1],[2]]`. Without a
/// flag the arrangement file's own factorization is used, else `linear`.
pub fn factorization(flag: Option<&str>, stored: Option<Factorization>, d: usize) -> Result<Factorization, Failure> {
    Ok(match flag {
        Some("linear") => Factorization::linear(d),
        Some("trivial") => Factorization::trivial(d),
        Some(text) => Factorization::new(groups(text)?, d)?,
        None => stored.unwrap_or_else(|| Factorization::linear(d)),
    })
}

pub fn coarsening(text: &str, r: usize) -> Result<CoarseningMap, Failure> {
    Ok(CoarseningMap::new(groups(text)?, r)?)
}

/// Infix text, or JSON `{"vars": [...], "terms": [[coeff, exps], ...]}`; a
/// leading `@` reads either form from a file.
pub fn poly(src: &str, vars: Option<&str>) -> Result<Poly, Failure> {
    let text = match src.strip_prefix('@') {
        Some(path) => read(path)?,
        None => src.to_string(),
    };
    let trimmed = text.trim();
    let names: Option<Vec<String>> = vars.map(|v| v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect());
    if trimmed.starts_with('{') {
        let v: Value = parse_json(trimmed, "polynomial JSON")?;
        let obj = v.as_object().ok_or_else(|| Failure::new("parse", "polynomial JSON must be an object"))?;
        if let Some(k) = obj.keys().find(|k| *k != "vars" && *k != "terms") {
            return Err(Failure::new("parse", format!("unknown field {k:?} in polynomial JSON")));
        }
        let vars: Vec<String> = serde_json::from_value(obj.get("vars").cloned().unwrap_or(Value::Null))
            .map_err(|e| Failure::new("parse", format!("polynomial JSON needs \"vars\": {e}")))?;
        let terms = obj.get("terms").ok_or_else(|| Failure::new("parse", "polynomial JSON needs \"terms\""))?;
        return Ok(Poly::from_json(Poly::make_vars(&vars), terms)?);
    }
    Ok(match names {
        Some(n) => Poly::parse_with_vars(trimmed, &n)?,
        None => Poly::parse(trimmed)?,
    })
}

pub fn poly_json(p: &Poly) -> Value {
    json!({ "vars": p.vars().to_vec(), "terms": p.to_json() })
}
