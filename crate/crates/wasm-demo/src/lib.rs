//! wasm-bindgen bindings behind `www/index.html`. Each export takes and returns
//! JSON strings; the `*_json` functions hold the logic so they can be tested
//! natively.

use bsarr::arrangement::{intersection_lattice, Arrangement, ArrangementJson, Factorization};
use bsarr::bsideals::{lower_locus, saito_interval_check, upper_locus, walther_bfunction, BSLocus};
use bsarr::Rational;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Half-width of the square `[-W, W]^2` used for the s-plane picture.
const VIEW: f64 = 6.0;

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn parse_arrangement(text: &str) -> Result<Arrangement, String> {
    let j: ArrangementJson = serde_json::from_str(text).map_err(err)?;
    Ok(Arrangement::from_json(&j).map_err(err)?.0)
}

fn factorization(groups_arg: &str, d: usize) -> Result<Factorization, String> {
    match groups_arg.trim() {
        "" | "linear" => Ok(Factorization::linear(d)),
        "trivial" => Ok(Factorization::trivial(d)),
        groups => Factorization::new(serde_json::from_str(groups).map_err(err)?, d).map_err(err),
    }
}

pub fn walther_json(n: usize, d: usize) -> Result<String, String> {
    let b = walther_bfunction(n, d).map_err(err)?;
    let roots = b.roots();
    let inside = saito_interval_check(&roots, d).map_err(err)?;
    let lo = Rational::from(-2) + Rational::new(1, d as i64);
    let factors: Vec<Value> = b
        .factors()
        .iter()
        .map(|(h, &m)| json!({ "root": h.root().map(|r| r.to_string()), "value": h.root().map(|r| r.to_f64()), "mult": m }))
        .collect();
    Ok(json!({
        "display": b.to_string(),
        "factors": factors,
        "interval": [lo.to_string(), "0"],
        "interval_values": [lo.to_f64(), 0.0],
        "inside": inside,
    })
    .to_string())
}

/// Segment of `a s1 + b s2 + c = 0` inside the view square, for drawing.
fn segment(a: f64, b: f64, c: f64) -> Option<[f64; 4]> {
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for &x in &[-VIEW, VIEW] {
        if b != 0.0 {
            let y = -(a * x + c) / b;
            if y.abs() <= VIEW {
                pts.push((x, y));
            }
        }
    }
    for &y in &[-VIEW, VIEW] {
        if a != 0.0 {
            let x = -(b * y + c) / a;
            if x.abs() <= VIEW {
                pts.push((x, y));
            }
        }
    }
    pts.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9);
    (pts.len() >= 2).then(|| [pts[0].0, pts[0].1, pts[1].0, pts[1].1])
}

fn locus_value(l: &BSLocus) -> Value {
    let hs: Vec<Value> = l
        .hyperplanes()
        .iter()
        .map(|h| {
            let seg = (l.r() == 2).then(|| segment(h.coeffs()[0].to_f64(), h.coeffs()[1].to_f64(), h.constant().to_f64())).flatten();
            json!({ "equation": format!("{h} = 0"), "segment": seg })
        })
        .collect();
    json!({ "r": l.r(), "hyperplanes": hs })
}

pub fn loci_json(arrangement: &str, fact: &str) -> Result<String, String> {
    let a = parse_arrangement(arrangement)?;
    let f = factorization(fact, a.degree())?;
    let lower = lower_locus(&a, &f).map_err(err)?;
    let upper = upper_locus(&a, &f).map_err(err)?;
    let extra = BSLocus::from_hyperplanes(upper.locus.r(), upper.locus.hyperplanes().difference(lower.locus.hyperplanes()).cloned()).map_err(err)?;
    Ok(json!({
        "r": f.r(),
        "lower": locus_value(&lower.locus),
        "upper_only": locus_value(&extra),
        "view": VIEW,
        "warnings": lower.warnings,
    })
    .to_string())
}

pub fn lattice_json(arrangement: &str) -> Result<String, String> {
    let a = parse_arrangement(arrangement)?;
    let lat = intersection_lattice(&a);
    let mut by_rank: Vec<Vec<Value>> = vec![Vec::new(); lat.n + 1];
    for e in &lat.edges {
        by_rank[e.rank].push(json!({ "forms": e.form_indices, "d_x": e.d_x, "indecomposable": e.indecomposable }));
    }
    Ok(json!({ "n": lat.n, "ranks": by_rank, "edges": lat.edges.len() }).to_string())
}

#[wasm_bindgen]
pub fn walther(n: usize, d: usize) -> Result<String, JsError> {
    walther_json(n, d).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn loci(arrangement: &str, factorization: &str) -> Result<String, JsError> {
    loci_json(arrangement, factorization).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn lattice(arrangement: &str) -> Result<String, JsError> {
    lattice_json(arrangement).map_err(|e| JsError::new(&e))
}
