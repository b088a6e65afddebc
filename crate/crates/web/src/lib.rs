//! Browser bindings: each call takes JSON text and returns a JSON report.

use lefkit::arrangements::{generic_splitting, LineArrangement};
use lefkit::gradedideal::IdealSpec;
use lefkit::lefschetz::{laplace_report, slp_scan, TrialPolicy};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn policy(seed: u64) -> TrialPolicy {
    TrialPolicy {
        seed,
        ..TrialPolicy::default()
    }
}

pub fn wlp_report(ideal_json: &str, seed: u64) -> Result<String, String> {
    let spec = IdealSpec::from_json(ideal_json).map_err(|e| e.to_string())?;
    let p = policy(seed);
    let ideal = spec
        .instantiate(&p.primary_field().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let scan = slp_scan(&ideal, 1, None, p).map_err(|e| e.to_string())?;
    let rows: Vec<_> = scan
        .reports
        .iter()
        .map(|r| {
            json!({
                "i": r.i,
                "source": r.dim_source,
                "target": r.dim_target,
                "rank": r.observed_rank,
                "expected": r.expected_rank,
                "fails": r.fails(),
                "delta": r.delta(),
            })
        })
        .collect();
    Ok(json!({ "hilbert": scan.hilbert, "has_wlp": scan.has_wlp, "maps": rows, "caveats": scan.caveats }).to_string())
}

pub fn laplace_json(ideal_json: &str, i: usize, k: usize, seed: u64) -> Result<String, String> {
    let spec = IdealSpec::from_json(ideal_json).map_err(|e| e.to_string())?;
    let p = policy(seed);
    let ideal = spec
        .instantiate(&p.primary_field().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let rep = laplace_report(&ideal, i, k, p).map_err(|e| e.to_string())?;
    serde_json::to_string(&rep).map_err(|e| e.to_string())
}

pub fn splitting_json(arrangement_json: &str, seed: u64) -> Result<String, String> {
    let arr = LineArrangement::from_json(arrangement_json).map_err(|e| e.to_string())?;
    let rep = generic_splitting(&arr, &policy(seed)).map_err(|e| e.to_string())?;
    Ok(json!({
        "lines": rep.points,
        "a": rep.splitting.a,
        "b": rep.splitting.b,
        "unstable": rep.splitting.is_unstable(),
        "caveats": rep.caveats,
    })
    .to_string())
}

#[wasm_bindgen(js_name = checkWlp)]
pub fn check_wlp(ideal_json: &str, seed: u64) -> Result<String, JsValue> {
    wlp_report(ideal_json, seed).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = laplaceCount)]
pub fn laplace_count(ideal_json: &str, i: usize, k: usize, seed: u64) -> Result<String, JsValue> {
    laplace_json(ideal_json, i, k, seed).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = arrangementSplitting)]
pub fn arrangement_splitting(arrangement_json: &str, seed: u64) -> Result<String, JsValue> {
    splitting_json(arrangement_json, seed).map_err(|e| JsValue::from_str(&e))
}
