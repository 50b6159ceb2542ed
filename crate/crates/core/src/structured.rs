//! Machine-readable JSON documents for presentations, maps and resolutions.
//!
//! Polynomials are stored as strings in the text grammar, matrices row-major.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::parse::{parse_poly, parse_presentation, parse_ringspec};
use crate::presentation::{ModuleMap, Presentation};
use crate::resolution::{verdict, ResolutionReport};
use crate::ring::RingSpec;
use crate::{Matrix, Poly};

pub fn ring_to_json(ring: &RingSpec) -> Value {
    let mut m = Map::new();
    m.insert("vars".into(), json!(ring.vars()));
    if let Some(w) = ring.declared_weights() {
        m.insert("weights".into(), json!(w));
    }
    let ideal: Vec<String> = ring.ideal().iter().map(|f| f.to_string()).collect();
    m.insert("ideal".into(), json!(ideal));
    m.insert("assume_domain".into(), json!(ring.assume_domain()));
    Value::Object(m)
}

fn rows_to_json(rows: impl IntoIterator<Item = Vec<Poly>>) -> Value {
    Value::Array(
        rows.into_iter()
            .map(|r| Value::Array(r.iter().map(|p| Value::String(p.to_string())).collect()))
            .collect(),
    )
}

pub fn presentation_to_json(p: &Presentation) -> Value {
    let gens: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
    json!({
        "kind": "presentation",
        "ring": ring_to_json(p.ring()),
        "generators": gens,
        "degrees": p.degrees(),
        "relations": rows_to_json(p.relations().iter().map(|r| r.coords().to_vec())),
    })
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<Poly>> {
    (0..m.nrows()).map(|i| m.row(i).into_coords()).collect()
}

pub fn map_to_json(f: &ModuleMap) -> Value {
    json!({
        "kind": "map",
        "source": presentation_to_json(f.source()),
        "target": presentation_to_json(f.target()),
        "matrix": rows_to_json(matrix_rows(f.matrix())),
    })
}

pub fn resolution_to_json(r: &ResolutionReport) -> Value {
    json!({
        "kind": "resolution",
        "module": presentation_to_json(&r.module),
        "steps": r.steps.iter().map(|m| rows_to_json(matrix_rows(m))).collect::<Vec<_>>(),
        "betti": r.betti,
        "shifts": r.shifts,
        "terminated": r.terminated,
        "cutoff": r.cutoff,
        "graded": r.graded,
        "minimal": r.minimal,
        "pd": r.minimal.then(|| verdict(r).to_string()),
        "note": r.growth_note(),
    })
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// A parsed structured document.
#[derive(Clone, Debug)]
pub enum Structured {
    Presentation(Presentation),
    Map(ModuleMap),
    Resolution(ResolutionReport),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn strings(v: &Value, key: &str) -> Result<Vec<String>> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| bad(format!("`{key}` must be an array")))?
        .iter()
        .map(|s| s.as_str().map(str::to_owned).ok_or_else(|| bad(format!("`{key}` must hold strings"))))
        .collect()
}

fn ints(v: &Value, key: &str) -> Result<Vec<i64>> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| bad(format!("`{key}` must be an array")))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| bad(format!("`{key}` must hold integers"))))
        .collect()
}

fn string_rows(v: &Value) -> Result<Vec<Vec<String>>> {
    v.as_array()
        .ok_or_else(|| bad("matrix must be an array of rows"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| bad("matrix row must be an array"))?
                .iter()
                .map(|s| s.as_str().map(str::to_owned).ok_or_else(|| bad("matrix entries must be strings")))
                .collect()
        })
        .collect()
}

fn ring_text(v: &Value) -> Result<String> {
    let mut out = format!("vars = [{}];\n", strings(v, "vars")?.join(", "));
    if let Some(w) = v.get("weights").filter(|w| !w.is_null()) {
        let ws: Vec<String> = w
            .as_array()
            .ok_or_else(|| bad("`weights` must be an array"))?
            .iter()
            .map(|x| x.to_string())
            .collect();
        out.push_str(&format!("weights = [{}];\n", ws.join(", ")));
    }
    out.push_str(&format!("ideal = [{}];\n", strings(v, "ideal")?.join(", ")));
    if v.get("assume_domain").and_then(Value::as_bool).unwrap_or(false) {
        out.push_str("assume_domain = true;\n");
    }
    Ok(out)
}

pub fn ring_from_json(v: &Value) -> Result<RingSpec> {
    Ok(parse_ringspec(&ring_text(v)?)?)
}

pub fn presentation_from_json(v: &Value) -> Result<Presentation> {
    let mut text = ring_text(field(v, "ring")?)?;
    text.push_str(&format!("generators = [{}];\n", strings(v, "generators")?.join(", ")));
    if v.get("degrees").is_some_and(|d| !d.is_null()) {
        let ds: Vec<String> = ints(v, "degrees")?.iter().map(|d| d.to_string()).collect();
        text.push_str(&format!("degrees = [{}];\n", ds.join(", ")));
    }
    let rows: Vec<String> = string_rows(field(v, "relations")?)?
        .iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect();
    text.push_str(&format!("relations = [{}];\n", rows.join(", ")));
    Ok(parse_presentation(&text)?)
}

fn matrix_from_json(v: &Value, ring: &RingSpec, ncols: usize) -> Result<Matrix> {
    let rows = string_rows(v)?
        .iter()
        .map(|r| r.iter().map(|s| Ok(parse_poly(s, ring)?)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(ring.poly_ring(), ncols, rows)
}

pub fn map_from_json(v: &Value) -> Result<ModuleMap> {
    let source = presentation_from_json(field(v, "source")?)?;
    let target = presentation_from_json(field(v, "target")?)?;
    let matrix = matrix_from_json(field(v, "matrix")?, source.ring(), source.ngens())?;
    ModuleMap::new(source, target, matrix)
}

pub fn resolution_from_json(v: &Value) -> Result<ResolutionReport> {
    let module = presentation_from_json(field(v, "module")?)?;
    let betti: Vec<usize> = ints(v, "betti")?.into_iter().map(|b| b as usize).collect();
    let steps_v = field(v, "steps")?.as_array().ok_or_else(|| bad("`steps` must be an array"))?;
    if steps_v.len() >= betti.len().max(1) {
        return Err(bad("more steps than Betti numbers"));
    }
    let steps = steps_v
        .iter()
        .enumerate()
        .map(|(i, s)| matrix_from_json(s, module.ring(), betti[i]))
        .collect::<Result<Vec<_>>>()?;
    let shifts = match v.get("shifts") {
        Some(s) if !s.is_null() => serde_json::from_value(s.clone()).map_err(|e| bad(e.to_string()))?,
        _ => vec![None; betti.len()],
    };
    let flag = |k: &str| field(v, k).and_then(|b| b.as_bool().ok_or_else(|| bad(format!("`{k}` must be a boolean"))));
    Ok(ResolutionReport {
        steps,
        terminated: flag("terminated")?,
        cutoff: field(v, "cutoff")?.as_u64().ok_or_else(|| bad("`cutoff` must be an integer"))? as usize,
        graded: flag("graded")?,
        minimal: v.get("minimal").and_then(Value::as_bool).unwrap_or(false),
        shifts,
        betti,
        module,
    })
}

/// Parses any document produced by this module.
pub fn parse_structured(text: &str) -> Result<Structured> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    from_value(&v)
}

pub fn from_value(v: &Value) -> Result<Structured> {
    match v.get("kind").and_then(Value::as_str) {
        Some("presentation") => presentation_from_json(v).map(Structured::Presentation),
        Some("map") => map_from_json(v).map(Structured::Map),
        Some("resolution") => resolution_from_json(v).map(Structured::Resolution),
        Some(k) => Err(bad(format!("unknown document kind `{k}`"))),
        None => Err(bad("missing field `kind`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffmod::{omega_presentation, theta_second_to_first};
    use crate::parse::parse_ringspec;
    use crate::resolution::{free_resolution, minimalize};

    fn cusp() -> RingSpec {
        parse_ringspec("vars=[x,y]; weights=[2,3]; ideal=[y^2 - x^3]; assume_domain=true;").unwrap()
    }

    #[test]
    fn presentation_round_trip() {
        let p = omega_presentation(&cusp(), 2);
        let v = presentation_to_json(&p);
        assert_eq!(v["generators"][2], "d2(x^2)");
        let text = to_string(&v);
        match parse_structured(&text).unwrap() {
            Structured::Presentation(q) => assert_eq!(p, q),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn map_round_trip() {
        let f = theta_second_to_first(&cusp()).unwrap();
        match parse_structured(&to_string(&map_to_json(&f))).unwrap() {
            Structured::Map(g) => assert!(f.equals(&g)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn resolution_round_trip() {
        let r = minimalize(&free_resolution(&omega_presentation(&cusp(), 1), 4).unwrap()).unwrap();
        let v = resolution_to_json(&r);
        assert_eq!(v["pd"], "Finite(1)");
        match parse_structured(&to_string(&v)).unwrap() {
            Structured::Resolution(s) => {
                assert_eq!(s.betti, r.betti);
                assert_eq!(s.steps.len(), r.steps.len());
                assert_eq!(s.steps[0].row(0), r.steps[0].row(0));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn schema_errors() {
        assert!(parse_structured("{").is_err());
        assert!(parse_structured(r#"{"kind":"presentation"}"#).is_err());
        assert!(parse_structured(r#"{"kind":"banana"}"#).is_err());
    }
}
