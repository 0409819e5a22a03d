//! Browser bindings for the demo page. Each export takes and returns JSON
//! text; the `*_json` functions are plain Rust so they test natively.

use ifn_order::curve::{curve_rows, is_spike, polyline};
use ifn_order::decision::{decimal, run_algorithm, verdict_json, LoadOptions, WeightedInfoSystem};
use ifn_order::literal::{from_json, parse_compact};
use ifn_order::order::{c_prefix, compare, DEFAULT_DEPTH};
use ifn_order::scalar::{parse_rational, to_exact_string, to_f64};
use ifn_order::{DenseSequence, Error, Ifn, Validation};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn literal(text: &str) -> Result<Ifn, Error> {
    let text = text.trim();
    let (ifn, _) = if text.starts_with('<') {
        parse_compact(text, Validation::Strict)?
    } else {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        from_json(&value, Validation::Strict)?
    };
    Ok(ifn)
}

fn failure(e: Error) -> String {
    json!({"error": {"kind": e.kind(), "message": e.to_string()}}).to_string()
}

/// Knot polylines and a sampled table, with plain floats for drawing.
pub fn curve_json(text: &str, step: &str) -> Result<String, String> {
    let run = || -> Result<Value, Error> {
        let ifn = literal(text)?;
        let rows = curve_rows(&ifn, &parse_rational(step)?)?;
        let line = |f| -> Vec<[f64; 2]> { polyline(f).iter().map(|(x, y)| [to_f64(x), to_f64(y)]).collect() };
        Ok(json!({
            "kind": ifn.kind().name(),
            "mu": line(ifn.mu()),
            "nu": line(ifn.nu()),
            "spikes": {"mu": is_spike(ifn.mu()), "nu": is_spike(ifn.nu())},
            "rows": rows.iter().map(|r| json!([to_exact_string(&r.x), to_exact_string(&r.mu), to_exact_string(&r.nu)])).collect::<Vec<_>>(),
        }))
    };
    run().map(|v| v.to_string()).map_err(failure)
}

/// Verdict plus the leading stream values of both sides.
pub fn compare_json(a: &str, b: &str, seq: &str, prec: usize) -> Result<String, String> {
    let run = || -> Result<Value, Error> {
        let seq = DenseSequence::from_name(seq)?;
        let (x, y) = (literal(a)?, literal(b)?);
        let v = compare(&x, &y, &seq, DEFAULT_DEPTH)?;
        let shown = v.index().unwrap_or(4).clamp(4, 16);
        let prefix = |ifn: &Ifn| -> Result<Vec<Value>, Error> {
            Ok(c_prefix(ifn, &seq, shown)?.iter().map(|c| decimal(c, prec)).collect())
        };
        let mut out = verdict_json(&v, prec);
        out["sequence"] = json!(seq.name());
        out["prefix_a"] = Value::Array(prefix(&x)?);
        out["prefix_b"] = Value::Array(prefix(&y)?);
        Ok(out)
    };
    run().map(|v| v.to_string()).map_err(failure)
}

/// Dominance report of a JSON system document.
pub fn decide_json(system: &str, seq: &str, normalize: bool, prec: usize) -> Result<String, String> {
    let run = || -> Result<Value, Error> {
        let seq = DenseSequence::from_name(seq)?;
        let sys = WeightedInfoSystem::from_json_str(system, LoadOptions { normalize, policy: Validation::Strict })?;
        Ok(run_algorithm(&sys, &seq, DEFAULT_DEPTH)?.to_json(prec, false))
    };
    run().map(|v| v.to_string()).map_err(failure)
}

#[wasm_bindgen]
pub fn curve(text: &str, step: &str) -> Result<String, JsValue> {
    curve_json(text, step).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = compare)]
pub fn compare_ifns(a: &str, b: &str, seq: &str, prec: usize) -> Result<String, JsValue> {
    compare_json(a, b, seq, prec).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn decide(system: &str, seq: &str, normalize: bool, prec: usize) -> Result<String, JsValue> {
    decide_json(system, seq, normalize, prec).map_err(|e| JsValue::from_str(&e))
}

/// The bundled ten-alternative system, for the page's default input.
#[wasm_bindgen]
pub fn sample_system() -> String {
    ifn_order::reference::TABLE2_JSON.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_shape() {
        let v: Value = serde_json::from_str(&curve_json("<0.1 0.2 0.3 0.4|0.3 0.4 0.5 0.6>", "1/4").unwrap()).unwrap();
        assert_eq!(v["mu"].as_array().unwrap().len(), 4);
        assert_eq!(v["rows"].as_array().unwrap().len(), 10);
        let spike: Value = serde_json::from_str(&curve_json(r#"{"ifv": ["0.3", "0.5"]}"#, "1/2").unwrap()).unwrap();
        assert_eq!(spike["spikes"]["nu"], true);
    }

    #[test]
    fn compare_example() {
        let v: Value = serde_json::from_str(
            &compare_json("<0.3 0.35 0.4 0.5|0.1 0.2 0.25 0.3>", "<0.35 0.35 0.4 0.55|0 0.2 0.25 0.35>", "distinct", 6)
                .unwrap(),
        )
        .unwrap();
        assert_eq!((v["verdict"].as_str(), v["j"].as_u64()), (Some("Less"), Some(5)));
        assert_eq!(v["prefix_a"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn decide_sample() {
        let v: Value = serde_json::from_str(&decide_json(&sample_system(), "half-first", false, 3).unwrap()).unwrap();
        assert_eq!(v["ranking"][0]["alternative"], "x8");
        assert_eq!(v["degrees"]["x8"].to_string(), "0.668");
    }

    #[test]
    fn errors_are_json() {
        let e = compare_json("<0.1|0.2", "<0.1|0.2>", "distinct", 6).unwrap_err();
        let v: Value = serde_json::from_str(&e).unwrap();
        assert_eq!(v["error"]["kind"], "ParseError");
        assert!(decide_json("{}", "distinct", false, 6).is_err());
        assert!(curve_json("<0.1|0.2>", "2").is_err());
    }
}
