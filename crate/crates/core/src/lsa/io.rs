//! JSON exchange format for structure constants.
//!
//! ```json
//! {"name": "h(1)", "field": "Q", "even": 3, "odd": 0, "basis": ["X","Y","Z"],
//!  "brackets": [{"left": 0, "right": 1, "out": [{"k": 2, "c": "1"}]},
//!               {"left": 1, "right": 0, "out": [{"k": 2, "c": "-1"}]}]}
//! ```
//!
//! Every nonzero ordered pair is listed; an omitted pair is a zero bracket.
//! `left`, `right` and `k` may be indices or basis names.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{FieldTag, Scalar};

use super::algebra::{LieSuperalgebra, SparseVec};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn index(v: &Value, names: &[String], what: &str) -> Result<usize> {
    match v {
        Value::Number(n) => {
            let k = n.as_u64().ok_or_else(|| bad(format!("{what}: expected a nonnegative index")))? as usize;
            if k >= names.len() {
                return Err(bad(format!("{what}: index {k} out of range")));
            }
            Ok(k)
        }
        Value::String(s) => names.iter().position(|x| x == s).ok_or_else(|| bad(format!("{what}: unknown basis name `{s}`"))),
        _ => Err(bad(format!("{what}: expected index or name"))),
    }
}

pub fn scalar_from_json(v: &Value, tag: FieldTag) -> Result<Scalar> {
    match v {
        Value::String(s) => Ok(Scalar::parse(s, tag)?),
        Value::Number(n) => Ok(Scalar::parse(&n.to_string(), tag)?),
        _ => Err(bad("scalar must be a string like \"3/4\" or an integer")),
    }
}

pub fn algebra_from_json(v: &Value) -> Result<LieSuperalgebra> {
    let obj = v.as_object().ok_or_else(|| bad("algebra must be a JSON object"))?;
    let name = obj.get("name").and_then(Value::as_str).unwrap_or("g");
    let field = match obj.get("field") {
        Some(Value::String(s)) => FieldTag::parse(s)?,
        None => FieldTag::Q,
        _ => return Err(bad("field must be a string")),
    };
    let names: Vec<String> = obj
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing `basis` array"))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("basis names must be strings")))
        .collect::<Result<_>>()?;
    let even = obj.get("even").and_then(Value::as_u64).ok_or_else(|| bad("missing `even`"))? as usize;
    let odd = obj.get("odd").and_then(Value::as_u64).ok_or_else(|| bad("missing `odd`"))? as usize;
    if even + odd != names.len() {
        return Err(bad(format!("even + odd = {} but basis has {} names", even + odd, names.len())));
    }
    let mut g = LieSuperalgebra::abelian(name, names.clone(), even, field);
    let mut seen = std::collections::BTreeSet::new();
    for (n, b) in obj.get("brackets").and_then(Value::as_array).cloned().unwrap_or_default().iter().enumerate() {
        let what = format!("brackets[{n}]");
        let l = index(b.get("left").ok_or_else(|| bad(format!("{what}: missing left")))?, &names, &what)?;
        let r = index(b.get("right").ok_or_else(|| bad(format!("{what}: missing right")))?, &names, &what)?;
        if !seen.insert((l, r)) {
            return Err(bad(format!("{what}: pair ({l}, {r}) listed twice")));
        }
        let mut out: SparseVec = Vec::new();
        for t in b.get("out").and_then(Value::as_array).cloned().unwrap_or_default() {
            let k = index(t.get("k").ok_or_else(|| bad(format!("{what}: term missing k")))?, &names, &what)?;
            let c = scalar_from_json(t.get("c").ok_or_else(|| bad(format!("{what}: term missing c")))?, field)?;
            match out.iter_mut().find(|e| e.0 == k) {
                Some(e) => e.1 = &e.1 + &c,
                None => out.push((k, c)),
            }
        }
        out.sort_by_key(|e| e.0);
        g.set_bracket(l, r, out);
    }
    Ok(g)
}

pub fn algebra_to_json(g: &LieSuperalgebra) -> Value {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let b = g.bracket_basis(i, j);
            if b.is_empty() {
                continue;
            }
            let out: Vec<Value> = b.iter().map(|(k, c)| json!({"k": k, "c": c.to_string()})).collect();
            brackets.push(json!({"left": i, "right": j, "out": out}));
        }
    }
    json!({
        "name": g.name(),
        "field": g.tag().to_string(),
        "even": g.even_dim(),
        "odd": g.odd_dim(),
        "basis": g.names(),
        "brackets": brackets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"name":"h(1)","field":"Q","even":3,"odd":0,"basis":["X","Y","Z"],
            "brackets":[{"left":"X","right":"Y","out":[{"k":"Z","c":"1"}]},
                        {"left":1,"right":0,"out":[{"k":2,"c":"-1"}]}]}"#;
        let g = algebra_from_json(&serde_json::from_str(text).unwrap()).unwrap();
        assert!(g.check_axioms().ok());
        let back = algebra_from_json(&algebra_to_json(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn rejects_foreign_scalars() {
        let text = r#"{"field":"Q","even":1,"odd":0,"basis":["X"],
            "brackets":[{"left":0,"right":0,"out":[{"k":0,"c":"i"}]}]}"#;
        assert!(algebra_from_json(&serde_json::from_str(text).unwrap()).is_err());
    }
}
