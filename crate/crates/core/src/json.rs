//! JSON formats for polytopes, weights and polynomials.
//!
//! ```text
//! polytope:   {"vertices": [[0, 0], [2, 0], [0, 1]]}
//! weight:     {"vars": 2, "terms": [{"coeff": "1/2", "exps": [1, 0]}]}
//! polynomial: {"vars": ["q", "y"], "terms": [{"coeff": "4/3", "exps": [3, 0]}]}
//! ```
//!
//! Coefficients are decimal strings `"p/q"` or `"p"`; bare JSON integers are
//! accepted on input.

use serde_json::{json, Map, Value};

use crate::algebra::poly::MultiPoly;
use crate::algebra::rational::{format_scalar, parse_scalar, Scalar};
use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::wsum::WeightPoly;

pub const MAX_DIM: usize = 6;
pub const MAX_POINTS: usize = 32;
pub const MAX_COORD: i64 = 1 << 20;
pub const MAX_VARS: usize = 64;
pub const MAX_EXPONENT: u64 = 64;
pub const MAX_TERMS: usize = 4096;

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "malformed JSON at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::Parse(format!("{what} must be a JSON object")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("{what} is missing \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))
}

/// Parses `{"vertices": [[int, ...], ...]}` and builds the polytope.
pub fn parse_polytope(text: &str) -> Result<Polytope> {
    let points = parse_vertices(text)?;
    Polytope::new(&points)
}

/// The raw vertex list of a polytope document, validated for shape and size.
pub fn parse_vertices(text: &str) -> Result<Vec<Vec<i64>>> {
    let v = parse_value(text)?;
    let obj = object(&v, "polytope")?;
    let rows = array(field(obj, "vertices", "polytope")?, "\"vertices\"")?;
    if rows.is_empty() {
        return Err(Error::InvalidPolytope("no vertices".into()));
    }
    if rows.len() > MAX_POINTS {
        return Err(Error::InvalidPolytope(format!(
            "{} points exceeds the limit of {MAX_POINTS}",
            rows.len()
        )));
    }
    let mut points = Vec::with_capacity(rows.len());
    for row in rows {
        let coords = array(row, "each vertex")?;
        let mut p = Vec::with_capacity(coords.len());
        for c in coords {
            let Value::Number(num) = c else {
                return Err(Error::Parse("vertex coordinates must be numbers".into()));
            };
            let x = num.as_i64().ok_or(Error::NotLattice)?;
            if x.abs() > MAX_COORD {
                return Err(Error::InvalidPolytope(format!(
                    "coordinate {x} exceeds the limit of {MAX_COORD}"
                )));
            }
            p.push(x);
        }
        points.push(p);
    }
    let dim = points[0].len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::InvalidPolytope("vertices have differing dimensions".into()));
    }
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::InvalidPolytope(format!(
            "dimension {dim} not in 1..={MAX_DIM}"
        )));
    }
    Ok(points)
}

pub fn polytope_to_json(p: &Polytope) -> Value {
    json!({ "vertices": p.vertices() })
}

fn parse_coeff(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_scalar(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_scalar(&n.to_string()),
        _ => Err(Error::Parse(format!("coefficient {v} must be a \"p/q\" string or an integer"))),
    }
}

fn parse_terms(v: &Value, nvars: usize) -> Result<Vec<(Vec<u32>, Scalar)>> {
    let terms = array(v, "\"terms\"")?;
    if terms.len() > MAX_TERMS {
        return Err(Error::Parse(format!("more than {MAX_TERMS} terms")));
    }
    terms
        .iter()
        .map(|t| {
            let obj = object(t, "term")?;
            let coeff = parse_coeff(field(obj, "coeff", "term")?)?;
            let exps = array(field(obj, "exps", "term")?, "\"exps\"")?;
            if exps.len() != nvars {
                return Err(Error::Parse(format!(
                    "term has {} exponents for {nvars} variables",
                    exps.len()
                )));
            }
            let exps = exps
                .iter()
                .map(|e| match e.as_u64() {
                    Some(k) if k <= MAX_EXPONENT => Ok(k as u32),
                    _ => Err(Error::Parse(format!(
                        "exponent {e} must be an integer in 0..={MAX_EXPONENT}"
                    ))),
                })
                .collect::<Result<Vec<u32>>>()?;
            Ok((exps, coeff))
        })
        .collect()
}

/// Parses `{"vars": n, "terms": [...]}` into a homogeneous weight.
pub fn parse_phi(text: &str) -> Result<WeightPoly> {
    let v = parse_value(text)?;
    let obj = object(&v, "weight")?;
    let n = field(obj, "vars", "weight")?
        .as_u64()
        .filter(|&n| (1..=MAX_DIM as u64).contains(&n))
        .ok_or_else(|| Error::Parse(format!("\"vars\" must be an integer in 1..={MAX_DIM}")))?
        as usize;
    let terms = parse_terms(field(obj, "terms", "weight")?, n)?;
    WeightPoly::from_terms(n, terms)
}

pub fn phi_to_json(w: &WeightPoly) -> Value {
    json!({ "vars": w.num_vars(), "terms": terms_json(w.phi()) })
}

/// Parses `{"vars": [names], "terms": [...]}`.
pub fn parse_poly(text: &str) -> Result<MultiPoly> {
    let v = parse_value(text)?;
    let obj = object(&v, "polynomial")?;
    let names = array(field(obj, "vars", "polynomial")?, "\"vars\"")?;
    if names.len() > MAX_VARS {
        return Err(Error::Parse(format!("more than {MAX_VARS} variables")));
    }
    let vars = names
        .iter()
        .map(|n| {
            n.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("variable names must be strings".into()))
        })
        .collect::<Result<Vec<String>>>()?;
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::Parse(format!("duplicate variable {v:?}")));
        }
    }
    let terms = parse_terms(field(obj, "terms", "polynomial")?, vars.len())?;
    Ok(MultiPoly::from_terms(vars, terms))
}

fn terms_json(p: &MultiPoly) -> Vec<Value> {
    p.terms()
        .map(|(e, c)| json!({ "coeff": format_scalar(c), "exps": e }))
        .collect()
}

pub fn poly_to_json(p: &MultiPoly) -> Value {
    json!({ "vars": p.vars(), "terms": terms_json(p) })
}

pub fn parse_rational(text: &str) -> Result<Scalar> {
    parse_scalar(text)
}
