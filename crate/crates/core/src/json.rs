//! JSON persistence.
//!
//! Ideal form:
//! `{"d": 2, "mode": "Q", "boxes": [{"alpha": ["1", "3/2"], "strict": [false, true]}]}`
//! with boxes in canonical order and rationals as reduced strings.
//!
//! Decomposition form:
//! `{"components": [{"1": {"alpha": "1", "strict": false}, ...}, ...]}`
//! where each component is a sparse map from 1-based variable index to its
//! threshold; variables without generators are omitted.

use serde_json::{json, Map, Value};

use crate::decompose::Decomposition;
use crate::error::{Error, Result};
use crate::exponent::{Config, Mode, Rational};
use crate::ideal::Ideal;

pub fn ideal_to_json(ideal: &Ideal) -> Value {
    let boxes: Vec<Value> = ideal
        .corners()
        .iter()
        .map(|c| {
            json!({
                "alpha": c.alpha().iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                "strict": c.strict().to_vec(),
            })
        })
        .collect();
    json!({
        "d": ideal.cfg().dim,
        "mode": ideal.cfg().mode.to_string(),
        "boxes": boxes,
    })
}

pub fn ideal_to_json_string(ideal: &Ideal) -> String {
    ideal_to_json(ideal).to_string()
}

pub fn ideal_from_json(value: &Value) -> Result<Ideal> {
    let bad = |msg: &str| Error::Json(msg.to_string());
    let obj = value.as_object().ok_or_else(|| bad("expected an object"))?;
    let d = obj
        .get("d")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing or invalid \"d\""))? as usize;
    if d == 0 {
        return Err(bad("\"d\" must be at least 1"));
    }
    let mode = match obj.get("mode").and_then(Value::as_str) {
        Some("Q") => Mode::Dense,
        Some("Z") => Mode::Integer,
        _ => return Err(bad("\"mode\" must be \"Q\" or \"Z\"")),
    };
    let cfg = Config { dim: d, mode };
    let boxes = obj
        .get("boxes")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing or invalid \"boxes\""))?;
    let mut parsed = Vec::with_capacity(boxes.len());
    for b in boxes {
        let b = b.as_object().ok_or_else(|| bad("box must be an object"))?;
        let alpha = b
            .get("alpha")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("box missing \"alpha\""))?
            .iter()
            .map(|a| {
                a.as_str()
                    .ok_or_else(|| bad("alpha entries must be strings"))
                    .and_then(Rational::parse)
            })
            .collect::<Result<Vec<_>>>()?;
        let strict = b
            .get("strict")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("box missing \"strict\""))?
            .iter()
            .map(|s| s.as_bool().ok_or_else(|| bad("strict entries must be booleans")))
            .collect::<Result<Vec<_>>>()?;
        parsed.push((alpha, strict));
    }
    Ideal::from_boxes(cfg, parsed)
}

pub fn ideal_from_json_str(text: &str) -> Result<Ideal> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    ideal_from_json(&value)
}

pub fn decomposition_to_json(decomposition: &Decomposition) -> Value {
    let components: Vec<Value> = decomposition
        .components()
        .iter()
        .map(|p| {
            let mut map = Map::new();
            for i in p.support() {
                let alpha = p.thresholds()[i]
                    .as_finite()
                    .expect("supported threshold is finite");
                map.insert(
                    format!("{}", i + 1),
                    json!({ "alpha": alpha.to_string(), "strict": p.strict()[i] }),
                );
            }
            Value::Object(map)
        })
        .collect();
    json!({ "components": components })
}
