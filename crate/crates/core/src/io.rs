//! JSON wire formats and deterministic text formatting.
//!
//! Rationals travel as exact `"p/q"` strings (plain integers allowed as
//! shorthand, both as JSON numbers and strings). Floats print with 12
//! significant digits everywhere, so identical inputs produce byte-identical
//! outputs.

use crate::extremal::WeightedSampleSet;
use crate::polyspace::{MultiIndex, SparsePoly};
use crate::pullback::PolyMap;
use crate::rat::{format_rat, parse_rat, Rat};
use crate::ratgeom::{Body, PolyCone};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct IoError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, IoError> {
    Err(IoError(msg.into()))
}

pub fn fmt_g12(x: f64) -> String {
    format!("{:.11e}", x)
}

fn rat_from_value(v: &Value) -> Result<Rat, IoError> {
    match v {
        Value::String(s) => {
            parse_rat(s).ok_or_else(|| IoError(format!("bad rational literal {s:?}")))
        }
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                err(format!("non-integer number {n} (write rationals as \"p/q\")"))
            }
        }
        other => err(format!("expected rational, got {other}")),
    }
}

fn rat_to_value(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn vector_from_value(v: &Value, what: &str) -> Result<Vec<Rat>, IoError> {
    let arr = v
        .as_array()
        .ok_or_else(|| IoError(format!("{what} must be an array")))?;
    arr.iter().map(rat_from_value).collect()
}

fn f64_from_value(v: &Value, what: &str) -> Result<f64, IoError> {
    let x = v
        .as_f64()
        .ok_or_else(|| IoError(format!("{what} must be a number")))?;
    if !x.is_finite() {
        return err(format!("{what} must be finite"));
    }
    Ok(x)
}

pub fn body_from_json(v: &Value) -> Result<Body, IoError> {
    let obj = v.as_object().ok_or_else(|| IoError("body must be an object".into()))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError("body needs a positive \"dim\"".into()))? as usize;
    let verts = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| IoError("body needs a \"vertices\" array".into()))?;
    let vertices = verts
        .iter()
        .map(|row| vector_from_value(row, "vertex"))
        .collect::<Result<Vec<_>, _>>()?;
    Body::new(dim, vertices).map_err(|e| IoError(format!("invalid body: {e}")))
}

pub fn body_to_json(b: &Body) -> Value {
    json!({
        "dim": b.dim(),
        "vertices": b.vertices().iter()
            .map(|v| Value::Array(v.iter().map(rat_to_value).collect()))
            .collect::<Vec<_>>(),
    })
}

pub fn cone_from_json(v: &Value) -> Result<PolyCone, IoError> {
    let obj = v.as_object().ok_or_else(|| IoError("cone must be an object".into()))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError("cone needs a positive \"dim\"".into()))? as usize;
    let rows = |key: &str| -> Result<Vec<Vec<Rat>>, IoError> {
        match obj.get(key) {
            None | Some(Value::Null) => Ok(Vec::new()),
            Some(Value::Array(a)) => a.iter().map(|r| vector_from_value(r, key)).collect(),
            Some(other) => err(format!("{key} must be an array, got {other}")),
        }
    };
    let generators = rows("generators")?;
    let inequalities = rows("inequalities")?;
    PolyCone::from_both(dim, generators, inequalities)
        .map_err(|e| IoError(format!("invalid cone: {e}")))
}

pub fn cone_to_json(c: &PolyCone) -> Value {
    let mut map = Map::new();
    map.insert("dim".into(), json!(c.dim()));
    if !c.generators().is_empty() {
        map.insert(
            "generators".into(),
            Value::Array(
                c.generators()
                    .iter()
                    .map(|v| Value::Array(v.iter().map(rat_to_value).collect()))
                    .collect(),
            ),
        );
    }
    if !c.inequalities().is_empty() {
        map.insert(
            "inequalities".into(),
            Value::Array(
                c.inequalities()
                    .iter()
                    .map(|v| Value::Array(v.iter().map(rat_to_value).collect()))
                    .collect(),
            ),
        );
    }
    Value::Object(map)
}

pub fn poly_from_json(v: &Value) -> Result<SparsePoly, IoError> {
    let obj = v.as_object().ok_or_else(|| IoError("polynomial must be an object".into()))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError("polynomial needs a positive \"dim\"".into()))? as usize;
    let terms = obj
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| IoError("polynomial needs a \"terms\" array".into()))?;
    let mut p = SparsePoly::new(dim);
    for t in terms {
        let t = t
            .as_object()
            .ok_or_else(|| IoError("term must be an object".into()))?;
        let alpha = t
            .get("alpha")
            .and_then(Value::as_array)
            .ok_or_else(|| IoError("term needs an \"alpha\" array".into()))?;
        let alpha: Vec<u32> = alpha
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| IoError("exponents must be small nonnegative integers".into()))
            })
            .collect::<Result<_, _>>()?;
        if alpha.len() != dim {
            return err("exponent length differs from dim");
        }
        let re = f64_from_value(t.get("re").unwrap_or(&json!(0.0)), "re")?;
        let im = f64_from_value(t.get("im").unwrap_or(&json!(0.0)), "im")?;
        p.add_term(MultiIndex(alpha), Complex64::new(re, im));
    }
    Ok(p)
}

pub fn poly_to_json(p: &SparsePoly) -> Value {
    json!({
        "dim": p.dim(),
        "terms": p.terms().map(|(alpha, c)| json!({
            "alpha": alpha.0,
            "re": c.re,
            "im": c.im,
        })).collect::<Vec<_>>(),
    })
}

/// `{"dim": n, "points": [[re_1, im_1, ..., re_n, im_n], ...],
///   "weights": [...]}`; `dim` may be omitted when points are nonempty
/// (inferred as half the entry length).
pub fn samples_from_json(v: &Value) -> Result<WeightedSampleSet, IoError> {
    let obj = v.as_object().ok_or_else(|| IoError("sample set must be an object".into()))?;
    let pts = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| IoError("sample set needs a \"points\" array".into()))?;
    if pts.is_empty() {
        return err("sample set needs at least one point");
    }
    let first_len = pts[0]
        .as_array()
        .ok_or_else(|| IoError("each point must be a flat [re, im, ...] array".into()))?
        .len();
    let dim = match obj.get("dim").and_then(Value::as_u64) {
        Some(d) => d as usize,
        None => {
            if first_len % 2 != 0 {
                return err("point arrays must have even length (re/im pairs)");
            }
            first_len / 2
        }
    };
    let mut points = Vec::with_capacity(pts.len());
    for p in pts {
        let arr = p
            .as_array()
            .ok_or_else(|| IoError("each point must be an array".into()))?;
        if arr.len() != 2 * dim {
            return err(format!(
                "point has {} entries, expected {} (re/im pairs)",
                arr.len(),
                2 * dim
            ));
        }
        let mut z = Vec::with_capacity(dim);
        for pair in arr.chunks(2) {
            let re = f64_from_value(&pair[0], "re")?;
            let im = f64_from_value(&pair[1], "im")?;
            z.push(Complex64::new(re, im));
        }
        points.push(z);
    }
    let weights = match obj.get("weights") {
        None => vec![0.0; points.len()],
        Some(Value::Array(a)) => a
            .iter()
            .map(|w| f64_from_value(w, "weight"))
            .collect::<Result<Vec<_>, _>>()?,
        Some(other) => return err(format!("weights must be an array, got {other}")),
    };
    WeightedSampleSet::new(points, weights).map_err(|e| IoError(format!("invalid samples: {e}")))
}

pub fn samples_to_json(s: &WeightedSampleSet) -> Value {
    json!({
        "dim": s.dim(),
        "points": s.points().iter()
            .map(|z| Value::Array(z.iter().flat_map(|c| [json!(c.re), json!(c.im)]).collect()))
            .collect::<Vec<_>>(),
        "weights": s.weights(),
    })
}

pub fn polymap_from_json(v: &Value) -> Result<PolyMap, IoError> {
    let obj = v.as_object().ok_or_else(|| IoError("map must be an object".into()))?;
    let source_dim = obj
        .get("source_dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| IoError("map needs a positive \"source_dim\"".into()))? as usize;
    let comps = obj
        .get("components")
        .and_then(Value::as_array)
        .ok_or_else(|| IoError("map needs a \"components\" array".into()))?;
    let components = comps
        .iter()
        .map(poly_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    PolyMap::new(source_dim, components).map_err(|e| IoError(format!("invalid map: {e}")))
}

pub fn polymap_to_json(f: &PolyMap) -> Value {
    json!({
        "source_dim": f.source_dim(),
        "components": f.components().iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}

/// Parse a complex point written as `re,im;re,im;...` (one `re[,im]` pair
/// per coordinate).
pub fn point_from_str(s: &str) -> Result<Vec<Complex64>, IoError> {
    let mut out = Vec::new();
    for part in s.split(';') {
        let mut it = part.split(',');
        let re: f64 = it
            .next()
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| IoError(format!("bad coordinate in {part:?}")))?;
        let im: f64 = match it.next() {
            None => 0.0,
            Some(x) => x
                .trim()
                .parse()
                .map_err(|_| IoError(format!("bad imaginary part in {part:?}")))?,
        };
        if it.next().is_some() {
            return err(format!("too many fields in coordinate {part:?}"));
        }
        out.push(Complex64::new(re, im));
    }
    Ok(out)
}

/// Exact multi-index list for the lattice subcommand.
pub fn lattice_to_json(indices: &[MultiIndex]) -> Value {
    Value::Array(
        indices
            .iter()
            .map(|a| Value::Array(a.0.iter().map(|&e| json!(e)).collect()))
            .collect(),
    )
}

pub fn mass_to_json(rep: &crate::massint::MassReport) -> Value {
    json!({
        "dim": rep.dim,
        "volume": format_rat(&rep.volume),
        "rational_factor": format_rat(&rep.rational_factor),
        "value": rep.value,
        "approximate": rep.approximate,
        "display": format!("(2pi)^{} * {}! * {}", rep.dim, rep.dim, format_rat(&rep.volume)),
    })
}

pub fn l2_report_to_json(rep: &crate::massint::L2Report) -> Value {
    let value = match rep.value {
        crate::massint::L2Value::Finite(v) => json!(v),
        crate::massint::L2Value::Infinite => json!("infinite"),
    };
    let mut params = Map::new();
    if let Some(r) = rep.truncation_radius {
        params.insert("truncation_radius".into(), json!(r));
    }
    params.insert("samples".into(), json!(rep.samples));
    let cone_terms: Vec<Value> = rep
        .cone_terms
        .iter()
        .map(|t| {
            json!({
                "vertex": t.vertex.iter().map(rat_to_value).collect::<Vec<_>>(),
                "value": t.value.as_ref().map(format_rat),
            })
        })
        .collect();
    json!({
        "value": value,
        "method": rep.method,
        "error_bound": rep.error_bound,
        "exact_factor": rep.exact_factor.as_ref().map(format_rat),
        "cone_terms": cone_terms,
        "parameters": Value::Object(params),
    })
}
