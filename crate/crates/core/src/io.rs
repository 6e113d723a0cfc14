//! JSON interchange for complexes, short exact sequences and algebras.
//!
//! Emitted documents have lexicographically sorted keys, a `kind` tag and
//! scalars as strings (`"3"`, `"-2/5"`; cyclotomic scalars as arrays of
//! φ(N) such strings). Degree keys are decimal strings and may be negative.
//! Matrices are row-major arrays of rows. Components whose matrix would
//! have no rows or no columns are omitted.
//!
//! ```text
//! {"N":3,"d":{"0":[["1"]],"1":[["1"]]},"dims":{"0":1,"1":1,"2":1},
//!  "field":{"p":7,"q":"2","type":"Fp"},"kind":"complex"}
//! ```

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::coeff::cyclotomic::{parse_rational, rational_to_string};
use crate::coeff::{Field, FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::homalg::ShortExactSequence;
use crate::ncomplex::{GradedDims, GradedMap, NComplex};
use crate::qdga::{GradedAlgebra, Qdga, Weights};

/// Any top-level document.
#[derive(Clone, Debug)]
pub enum Document {
    Complex(NComplex),
    Ses(ShortExactSequence),
    Algebra(Qdga),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Complex(_) => "complex",
            Document::Ses(_) => "ses",
            Document::Algebra(_) => "algebra",
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            Document::Complex(c) => c.field(),
            Document::Ses(s) => s.field(),
            Document::Algebra(q) => q.field(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Document::Complex(c) => complex_to_json(c),
            Document::Ses(s) => ses_to_json(s),
            Document::Algebra(q) => algebra_to_json(q),
        }
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

/// Canonical text: keys sorted, two-space indentation, arrays of plain
/// values (matrix rows, cyclotomic scalars) on one line, trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| schema(format!("invalid JSON: {e}")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(format!("{what} must be an object")))
}

fn field_of<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("{what} is missing \"{key}\"")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    match v {
        Value::Number(n) => n.as_u64().ok_or_else(|| schema(format!("{what} must be a nonnegative integer"))),
        Value::String(s) => s.trim().parse().map_err(|_| schema(format!("{what} must be a nonnegative integer"))),
        _ => Err(schema(format!("{what} must be a nonnegative integer"))),
    }
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    usize::try_from(as_u64(v, what)?).map_err(|_| schema(format!("{what} is too large")))
}

fn degree_key(k: &str) -> Result<i64> {
    k.trim().parse().map_err(|_| schema(format!("degree key \"{k}\" is not an integer")))
}

// ---------------------------------------------------------------- fields

pub fn field_to_json(field: &Field) -> Value {
    match field.modulus() {
        Some(p) => json!({"type": "Fp", "p": p, "q": scalar_to_json(field.q())}),
        None => match field.q_power() {
            Some(1) => json!({"type": "cyclotomic"}),
            Some(j) => json!({"type": "cyclotomic", "q_power": j}),
            None => json!({"type": "cyclotomic", "q": scalar_to_json(field.q())}),
        },
    }
}

/// Parse a field description; `N` comes from the enclosing document.
pub fn field_from_json(v: &Value, big_n: usize) -> Result<Field> {
    let obj = object(v, "field")?;
    let kind = field_of(obj, "type", "field")?
        .as_str()
        .ok_or_else(|| schema("field type must be a string"))?;
    match kind {
        "Fp" | "fp" | "prime" => {
            let p = as_u64(field_of(obj, "p", "field")?, "p")?;
            let q = as_u64(field_of(obj, "q", "field")?, "q")?;
            Field::prime(p, big_n, q)
        }
        "cyclotomic" => {
            let q_power = match obj.get("q_power") {
                Some(j) => as_usize(j, "q_power")?,
                None => 1,
            };
            let f = Field::cyclotomic_with_power(big_n, q_power)?;
            match obj.get("q") {
                Some(q) => Ok(f.with_q(scalar_from_json(q, &f)?)),
                None => Ok(f),
            }
        }
        other => Err(schema(format!("unknown field type \"{other}\""))),
    }
}

pub fn field_spec_to_json(spec: &FieldSpec) -> Value {
    match *spec {
        FieldSpec::Prime { p, q, .. } => json!({"type": "Fp", "p": p, "q": q.to_string()}),
        FieldSpec::Cyclotomic { q_power: 1, .. } => json!({"type": "cyclotomic"}),
        FieldSpec::Cyclotomic { q_power, .. } => json!({"type": "cyclotomic", "q_power": q_power}),
    }
}

fn big_n_of(obj: &Map<String, Value>) -> Result<usize> {
    as_usize(field_of(obj, "N", "document")?, "N")
}

fn header(kind: &str, field: &Field) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), json!(kind));
    m.insert("N".into(), json!(field.order()));
    m.insert("field".into(), field_to_json(field));
    m
}

// ---------------------------------------------------------------- scalars

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Fp(r) => Value::String(r.to_string()),
        Scalar::Cyc(c) => Value::Array(c.iter().map(|r| Value::String(rational_to_string(r))).collect()),
    }
}

fn rational_from_json(v: &Value) -> Result<num_rational::BigRational> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| schema(format!("\"{s}\" is not a rational number"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            parse_rational(&n.to_string()).ok_or_else(|| schema("bad integer"))
        }
        _ => Err(schema(format!("scalar {v} must be a string such as \"3\" or \"2/5\""))),
    }
}

pub fn scalar_from_json(v: &Value, field: &Field) -> Result<Scalar> {
    match v {
        Value::Array(items) => {
            if !field.is_cyclotomic() {
                return Err(schema("array scalars are only valid over a cyclotomic field"));
            }
            if items.len() != field.degree() {
                return Err(schema(format!(
                    "cyclotomic scalar has {} coordinates, expected {}",
                    items.len(),
                    field.degree()
                )));
            }
            let coeffs = items.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
            field.from_coefficients(coeffs)
        }
        other => {
            let r = rational_from_json(other)?;
            field.from_rational(&r)
        }
    }
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(v: &Value, field: &Field, len: usize, what: &str) -> Result<Vec<Scalar>> {
    let items = v.as_array().ok_or_else(|| schema(format!("{what} must be an array")))?;
    if items.len() != len {
        return Err(Error::Shape(format!("{what} has {} entries, expected {len}", items.len())));
    }
    items.iter().map(|x| scalar_from_json(x, field)).collect()
}

// ---------------------------------------------------------------- matrices

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row(i))).collect())
}

/// Parse a matrix that must have shape `rows x cols`.
pub fn matrix_from_json(v: &Value, field: &Field, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    let items = v.as_array().ok_or_else(|| schema(format!("{what} must be an array of rows")))?;
    if items.len() != rows {
        return Err(Error::Shape(format!("{what} has {} rows, expected {rows}x{cols}", items.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in items.iter().enumerate() {
        data.extend(vector_from_json(row, field, cols, &format!("row {i} of {what}"))?);
    }
    Matrix::new(rows, cols, data)
}

// ---------------------------------------------------------------- complexes

fn dims_to_json(dims: &GradedDims) -> Value {
    Value::Object(dims.iter().map(|(n, d)| (n.to_string(), json!(d))).collect())
}

fn dims_from_json(v: &Value) -> Result<GradedDims> {
    object(v, "dims")?
        .iter()
        .map(|(k, d)| Ok((degree_key(k)?, as_usize(d, "dimension")?)))
        .collect()
}

fn dim_of(dims: &GradedDims, n: i64) -> usize {
    dims.get(&n).copied().unwrap_or(0)
}

fn complex_body(c: &NComplex, out: &mut Map<String, Value>) {
    out.insert("dims".into(), dims_to_json(c.dims()));
    let d: Map<String, Value> = c
        .differentials()
        .iter()
        .filter(|(_, m)| m.rows() > 0 && m.cols() > 0)
        .map(|(n, m)| (n.to_string(), matrix_to_json(m)))
        .collect();
    out.insert("d".into(), Value::Object(d));
}

pub fn complex_to_json(c: &NComplex) -> Value {
    let mut out = header("complex", c.field());
    complex_body(c, &mut out);
    Value::Object(out)
}

fn complex_from_object(obj: &Map<String, Value>, field: &Field, what: &str) -> Result<NComplex> {
    let dims = dims_from_json(field_of(obj, "dims", what)?)?;
    let empty = Map::new();
    let d_obj = match obj.get("d") {
        Some(v) => object(v, "d")?,
        None => &empty,
    };
    let mut d = BTreeMap::new();
    for (k, v) in d_obj {
        let n = degree_key(k)?;
        let (rows, cols) = (dim_of(&dims, n + 1), dim_of(&dims, n));
        d.insert(n, matrix_from_json(v, field, rows, cols, &format!("{what} d at degree {n}"))?);
    }
    for (&n, &dn) in &dims {
        let rows = dim_of(&dims, n + 1);
        if dn > 0 && rows > 0 && !d.contains_key(&n) {
            return Err(schema(format!("{what} is missing d at degree {n} ({rows}x{dn})")));
        }
    }
    NComplex::new(field, dims, d)
}

fn check_kind(obj: &Map<String, Value>, expected: &str) -> Result<()> {
    match obj.get("kind") {
        None => Ok(()),
        Some(Value::String(k)) if k == expected => Ok(()),
        Some(other) => Err(schema(format!("expected kind \"{expected}\", found {other}"))),
    }
}

pub fn complex_from_json(v: &Value) -> Result<NComplex> {
    let obj = object(v, "document")?;
    check_kind(obj, "complex")?;
    let field = field_from_json(field_of(obj, "field", "document")?, big_n_of(obj)?)?;
    complex_from_object(obj, &field, "complex")
}

// ---------------------------------------------------------------- maps and sequences

pub fn map_to_json(f: &GradedMap) -> Value {
    Value::Object(f.components().iter().map(|(n, m)| (n.to_string(), matrix_to_json(m))).collect())
}

/// Components not listed are zero.
pub fn map_from_json(v: &Value, field: &Field, shift: i64, source: &GradedDims, target: &GradedDims, what: &str) -> Result<GradedMap> {
    let mut mats = BTreeMap::new();
    for (k, m) in object(v, what)? {
        let n = degree_key(k)?;
        let (rows, cols) = (dim_of(target, n + shift), dim_of(source, n));
        mats.insert(n, matrix_from_json(m, field, rows, cols, &format!("{what} at degree {n}"))?);
    }
    GradedMap::new(field, shift, source.clone(), target.clone(), mats)
}

pub fn ses_to_json(s: &ShortExactSequence) -> Value {
    let mut out = header("ses", s.field());
    for (key, c) in [("C1", &s.c1), ("C2", &s.c2), ("C3", &s.c3)] {
        let mut body = Map::new();
        complex_body(c, &mut body);
        out.insert(key.into(), Value::Object(body));
    }
    out.insert("alpha".into(), map_to_json(&s.alpha));
    out.insert("beta".into(), map_to_json(&s.beta));
    Value::Object(out)
}

pub fn ses_from_json(v: &Value) -> Result<ShortExactSequence> {
    let obj = object(v, "document")?;
    check_kind(obj, "ses")?;
    let field = field_from_json(field_of(obj, "field", "document")?, big_n_of(obj)?)?;
    let mut cs = Vec::new();
    for key in ["C1", "C2", "C3"] {
        let inner = object(field_of(obj, key, "sequence")?, key)?;
        cs.push(complex_from_object(inner, &field, key)?);
    }
    let c3 = cs.pop().expect("three complexes");
    let c2 = cs.pop().expect("three complexes");
    let c1 = cs.pop().expect("three complexes");
    let alpha = map_from_json(field_of(obj, "alpha", "sequence")?, &field, 0, c1.dims(), c2.dims(), "alpha")?;
    let beta = map_from_json(field_of(obj, "beta", "sequence")?, &field, 0, c2.dims(), c3.dims(), "beta")?;
    Ok(ShortExactSequence { c1, c2, c3, alpha, beta })
}

// ---------------------------------------------------------------- algebras

pub fn algebra_to_json(q: &Qdga) -> Value {
    let a = q.algebra();
    let mut out = header("algebra", q.field());
    out.insert("window".into(), json!(a.window()));
    let per_degree = |f: &dyn Fn(usize) -> Value| -> Value {
        Value::Object((0..=a.window()).map(|n| (n.to_string(), f(n))).collect())
    };
    out.insert("dims".into(), per_degree(&|n| json!(a.dim(n))));
    out.insert("unit".into(), vector_to_json(a.unit()));
    out.insert("labels".into(), per_degree(&|n| json!(a.labels()[n])));
    let mu: Map<String, Value> = a
        .structure_constants()
        .iter()
        .filter(|(_, m)| m.rows() > 0 && m.cols() > 0)
        .map(|((i, j), m)| (format!("{i},{j}"), matrix_to_json(m)))
        .collect();
    out.insert("mu".into(), Value::Object(mu));
    let d: Map<String, Value> = q
        .differentials()
        .iter()
        .enumerate()
        .filter(|(_, m)| m.rows() > 0 && m.cols() > 0)
        .map(|(n, m)| (n.to_string(), matrix_to_json(m)))
        .collect();
    out.insert("d".into(), Value::Object(d));
    if let Some(w) = a.weights() {
        out.insert("weights".into(), per_degree(&|n| json!(w.per_degree[n])));
        out.insert("weight_window".into(), json!(w.window));
    }
    Value::Object(out)
}

fn per_degree_entry(obj: &Map<String, Value>, n: usize) -> Option<&Value> {
    obj.iter().find(|(k, _)| k.trim().parse::<usize>() == Ok(n)).map(|(_, v)| v)
}

pub fn algebra_from_json(v: &Value) -> Result<Qdga> {
    let obj = object(v, "document")?;
    check_kind(obj, "algebra")?;
    let field = field_from_json(field_of(obj, "field", "document")?, big_n_of(obj)?)?;
    let window = as_usize(field_of(obj, "window", "algebra")?, "window")?;
    let dims_obj = object(field_of(obj, "dims", "algebra")?, "dims")?;
    let mut dims = Vec::with_capacity(window + 1);
    for n in 0..=window {
        dims.push(match per_degree_entry(dims_obj, n) {
            Some(d) => as_usize(d, "dimension")?,
            None => 0,
        });
    }
    for k in dims_obj.keys() {
        match k.trim().parse::<usize>() {
            Ok(n) if n <= window => {}
            _ => return Err(schema(format!("dims key \"{k}\" is outside 0..={window}"))),
        }
    }
    let unit = vector_from_json(field_of(obj, "unit", "algebra")?, &field, dims[0], "unit")?;

    let mut mu = BTreeMap::new();
    for (k, m) in object(field_of(obj, "mu", "algebra")?, "mu")? {
        let (i, j) = k
            .split_once(',')
            .and_then(|(i, j)| Some((i.trim().parse::<usize>().ok()?, j.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| schema(format!("mu key \"{k}\" must look like \"i,j\"")))?;
        if i + j > window {
            return Err(schema(format!("mu({i},{j}) lies beyond the window {window}")));
        }
        let shape = (dims[i + j], dims[i] * dims[j]);
        mu.insert((i, j), matrix_from_json(m, &field, shape.0, shape.1, &format!("mu({i},{j})"))?);
    }

    let labels = match obj.get("labels") {
        None => None,
        Some(l) => {
            let l = object(l, "labels")?;
            let mut out = Vec::with_capacity(window + 1);
            for (n, &dn) in dims.iter().enumerate() {
                let names: Vec<String> = match per_degree_entry(l, n) {
                    Some(v) => serde_json::from_value(v.clone()).map_err(|_| schema("labels must be string arrays"))?,
                    None => Vec::new(),
                };
                if names.len() != dn {
                    return Err(schema(format!("labels for degree {n} have {} entries, expected {dn}", names.len())));
                }
                out.push(names);
            }
            Some(out)
        }
    };

    let weights = match obj.get("weights") {
        None => None,
        Some(w) => {
            let w = object(w, "weights")?;
            let window_w = as_u64(field_of(obj, "weight_window", "algebra")?, "weight_window")?;
            let mut per_degree = Vec::with_capacity(window + 1);
            for (n, &dn) in dims.iter().enumerate() {
                let ws: Vec<u32> = match per_degree_entry(w, n) {
                    Some(v) => serde_json::from_value(v.clone()).map_err(|_| schema("weights must be integer arrays"))?,
                    None => Vec::new(),
                };
                if ws.len() != dn {
                    return Err(schema(format!("weights for degree {n} have {} entries, expected {dn}", ws.len())));
                }
                per_degree.push(ws);
            }
            Some(Weights {
                per_degree,
                window: u32::try_from(window_w).map_err(|_| schema("weight_window is too large"))?,
            })
        }
    };

    let empty = Map::new();
    let d_obj = match obj.get("d") {
        Some(v) => object(v, "d")?,
        None => &empty,
    };
    let mut d = Vec::with_capacity(window);
    for n in 0..window {
        let (rows, cols) = (dims[n + 1], dims[n]);
        d.push(match per_degree_entry(d_obj, n) {
            Some(m) => matrix_from_json(m, &field, rows, cols, &format!("d at degree {n}"))?,
            None if rows == 0 || cols == 0 => Matrix::zeros(&field, rows, cols),
            None => return Err(schema(format!("missing d at degree {n} ({rows}x{cols})"))),
        });
    }
    for k in d_obj.keys() {
        match k.trim().parse::<usize>() {
            Ok(n) if n < window => {}
            _ => return Err(schema(format!("d key \"{k}\" is outside 0..{window}"))),
        }
    }
    let algebra = GradedAlgebra::new(&field, dims, unit, mu, labels, weights)?;
    Qdga::new(algebra, d)
}

// ---------------------------------------------------------------- documents

/// Parse any document, using `kind` when present and the keys otherwise.
pub fn parse_document(text: &str) -> Result<Document> {
    let v = parse_json(text)?;
    let obj = object(&v, "document")?;
    let kind = match obj.get("kind") {
        Some(Value::String(k)) => k.clone(),
        Some(other) => return Err(schema(format!("kind must be a string, found {other}"))),
        None if obj.contains_key("C1") => "ses".into(),
        None if obj.contains_key("mu") => "algebra".into(),
        None => "complex".into(),
    };
    match kind.as_str() {
        "complex" => complex_from_json(&v).map(Document::Complex),
        "ses" => ses_from_json(&v).map(Document::Ses),
        "algebra" => algebra_from_json(&v).map(Document::Algebra),
        other => Err(schema(format!("unknown kind \"{other}\""))),
    }
}

pub fn parse_complex(text: &str) -> Result<NComplex> {
    complex_from_json(&parse_json(text)?)
}

pub fn parse_ses(text: &str) -> Result<ShortExactSequence> {
    ses_from_json(&parse_json(text)?)
}

pub fn parse_algebra(text: &str) -> Result<Qdga> {
    algebra_from_json(&parse_json(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdga::qpoly_example;

    fn f7() -> Field {
        Field::prime(7, 3, 2).unwrap()
    }

    #[test]
    fn staircase_document() {
        let c = NComplex::staircase(&f7(), 0, 3);
        let text = to_canonical_string(&complex_to_json(&c));
        let compact = serde_json::to_string(&complex_to_json(&c)).unwrap();
        assert_eq!(
            compact,
            r#"{"N":3,"d":{"0":[["1"]],"1":[["1"]]},"dims":{"0":1,"1":1,"2":1},"field":{"p":7,"q":"2","type":"Fp"},"kind":"complex"}"#
        );
        assert_eq!(parse_complex(&text).unwrap(), c);
    }

    #[test]
    fn canonical_layout() {
        let c = NComplex::staircase(&f7(), 0, 2);
        let expected = r#"{
  "N": 3,
  "d": {
    "0": [
      ["1"]
    ]
  },
  "dims": {
    "0": 1,
    "1": 1
  },
  "field": {
    "p": 7,
    "q": "2",
    "type": "Fp"
  },
  "kind": "complex"
}
"#;
        assert_eq!(to_canonical_string(&complex_to_json(&c)), expected);
        let v: Value = serde_json::from_str(expected).unwrap();
        assert_eq!(v, complex_to_json(&c));
        assert_eq!(to_canonical_string(&json!({"a": [], "b": {}})), "{\n  \"a\": [],\n  \"b\": {}\n}\n");
    }

    #[test]
    fn accepts_hand_written_form() {
        let text = r#"{"N":3,"field":{"type":"Fp","p":7,"q":2},"dims":{"0":1,"1":1,"2":1},"d":{"0":[["1"]],"1":[["1"]]}}"#;
        let c = parse_complex(text).unwrap();
        assert_eq!(c, NComplex::staircase(&f7(), 0, 3));
        assert!(matches!(parse_document(text).unwrap(), Document::Complex(_)));
    }

    #[test]
    fn negative_degrees_and_cyclotomic_scalars() {
        let f = Field::cyclotomic(3).unwrap();
        let dims: GradedDims = [(-2, 1), (-1, 2)].into_iter().collect();
        let d = Matrix::new(2, 1, vec![f.q().clone(), f.from_rational(&"-2/3".parse().unwrap()).unwrap()]).unwrap();
        let c = NComplex::new(&f, dims, [(-2, d)].into_iter().collect()).unwrap();
        let text = to_canonical_string(&complex_to_json(&c));
        assert!(text.contains("\"-2/3\""));
        let back = parse_complex(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(to_canonical_string(&complex_to_json(&back)), text);
        // plain strings are constants
        let loose = text.replace(r#"["-2/3", "0"]"#, r#""-2/3""#);
        assert_ne!(loose, text);
        assert_eq!(parse_complex(&loose).unwrap(), c);
    }

    #[test]
    fn schema_and_shape_errors() {
        let bad_shape = r#"{"N":3,"field":{"type":"Fp","p":7,"q":2},"dims":{"0":1,"1":1},"d":{"0":[["1","2"]]}}"#;
        assert!(matches!(parse_complex(bad_shape), Err(Error::Shape(_))));
        let missing = r#"{"N":3,"field":{"type":"Fp","p":7,"q":2},"dims":{"0":1,"1":1},"d":{}}"#;
        assert!(matches!(parse_complex(missing), Err(Error::Schema(_))));
        assert!(matches!(parse_complex("{"), Err(Error::Schema(_))));
        let float = r#"{"N":3,"field":{"type":"Fp","p":7,"q":2},"dims":{"0":1,"1":1},"d":{"0":[[1.5]]}}"#;
        assert!(matches!(parse_complex(float), Err(Error::Schema(_))));
        let wrong_kind = r#"{"kind":"ses","N":3,"field":{"type":"Fp","p":7,"q":2},"dims":{}}"#;
        assert!(parse_complex(wrong_kind).is_err());
        assert!(matches!(parse_document(r#"{"kind":"other"}"#), Err(Error::Schema(_))));
    }

    #[test]
    fn ses_round_trip() {
        let s = ShortExactSequence::staircase_quotient(&f7(), 3, 1).unwrap();
        let text = to_canonical_string(&ses_to_json(&s));
        let back = parse_ses(&text).unwrap();
        assert_eq!(back.alpha, s.alpha);
        assert_eq!(back.c3, s.c3);
        assert_eq!(to_canonical_string(&ses_to_json(&back)), text);
        assert!(matches!(parse_document(&text).unwrap(), Document::Ses(_)));
    }

    #[test]
    fn algebra_round_trip() {
        for f in [f7(), Field::cyclotomic_with_power(5, 2).unwrap()] {
            let q = qpoly_example(&f, 6).unwrap();
            let text = to_canonical_string(&algebra_to_json(&q));
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, q);
            assert_eq!(to_canonical_string(&algebra_to_json(&back)), text);
        }
    }

    #[test]
    fn weighted_algebra_round_trip() {
        let f = Field::cyclotomic(3).unwrap();
        let q = crate::nhomog::build_a_rn(&f, 1, 3, 3, 2).unwrap().to_qdga().unwrap();
        let text = to_canonical_string(&algebra_to_json(&q));
        assert!(text.contains("weight_window"));
        assert_eq!(parse_algebra(&text).unwrap(), q);
    }

    #[test]
    fn field_variants() {
        let f = Field::cyclotomic_with_power(4, 3).unwrap();
        let v = field_to_json(&f);
        assert_eq!(v, json!({"type": "cyclotomic", "q_power": 3}));
        assert_eq!(field_from_json(&v, 4).unwrap(), f);
        assert!(field_from_json(&json!({"type": "Fp", "p": 8, "q": 2}), 3).is_err());
        assert_eq!(
            field_spec_to_json(&FieldSpec::Prime { p: 7, n: 3, q: 2 }),
            field_to_json(&f7())
        );
    }
}
