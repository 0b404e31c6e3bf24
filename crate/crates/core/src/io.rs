//! Instance files (JSON) and edge lists.
//!
//! An instance is `{"vertices": [[x, y], ...], "obstacles": [[i, j, k], ...]}`.
//! A coordinate is a JSON number, a decimal string such as `"-0.125"`, or a
//! fraction string such as `"1/3"`. Numbers are read from their source text,
//! so no coordinate passes through floating point.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::ParseError;
use crate::geom::{Point, Rational};
use crate::graph::Graph;
use crate::scene::{validate, Scene};

#[derive(Deserialize, Serialize)]
struct InstanceFile {
    vertices: Vec<[Value; 2]>,
    #[serde(default)]
    obstacles: Vec<Vec<usize>>,
}

/// Largest decimal exponent accepted, to keep hostile input from
/// allocating huge integers.
const MAX_EXPONENT: i64 = 4096;

/// Parses `"12"`, `"-0.5"`, `"3e-2"` or `"7/3"` exactly.
pub fn parse_coordinate(text: &str) -> Option<Rational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        return (!d.is_zero()).then(|| Rational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i64>().ok()?),
        None => (t, 0),
    };
    if exp.abs() > MAX_EXPONENT {
        return None;
    }
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit())
    {
        return None;
    }
    let all = format!("{int_part}{frac_part}");
    let n = BigInt::from_str(&all).ok()? * sign;
    let shift = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Some(if shift >= 0 {
        Rational::from_integer(n * num_traits::pow(ten, shift as usize))
    } else {
        Rational::new(n, num_traits::pow(ten, (-shift) as usize))
    })
}

/// Integers print bare, terminating fractions as decimal strings and the
/// rest as `"p/q"`.
fn coordinate_value(r: &Rational) -> Value {
    if r.is_integer() {
        return Value::Number(
            serde_json::Number::from_str(&r.numer().to_string()).expect("integer literal"),
        );
    }
    let mut d = r.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut places = 0usize;
    let (mut twos, mut fives) = (0usize, 0usize);
    while (&d % &two).is_zero() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return Value::String(format!("{}/{}", r.numer(), r.denom()));
    }
    places = places.max(twos).max(fives);
    let scaled = r * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if r.is_negative() { "-" } else { "" };
    Value::String(format!("{sign}{int}.{frac}"))
}

fn value_coordinate(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => parse_coordinate(&n.to_string()),
        Value::String(s) => parse_coordinate(s),
        _ => None,
    }
}

/// Parses without validating beyond index ranges. For repair tools that
/// take broken scenes as input.
pub fn parse_instance_unchecked(text: &str) -> Result<Scene, ParseError> {
    let file: InstanceFile = serde_json::from_str(text)?;
    let mut vertices = Vec::with_capacity(file.vertices.len());
    for (i, [x, y]) in file.vertices.iter().enumerate() {
        let coord = |v: &Value| {
            value_coordinate(v).ok_or_else(|| ParseError::Coordinate {
                vertex: i,
                text: v.to_string(),
            })
        };
        vertices.push(Point::new(coord(x)?, coord(y)?));
    }
    let n = vertices.len();
    for (oi, ob) in file.obstacles.iter().enumerate() {
        if let Some(&index) = ob.iter().find(|&&i| i >= n) {
            return Err(ParseError::IndexOutOfRange { obstacle: oi, index, n });
        }
    }
    Ok(Scene::new(vertices, file.obstacles))
}

/// Parses and validates a scene. General position is not required here;
/// the constructions check it.
pub fn parse_instance(text: &str) -> Result<Scene, ParseError> {
    let scene = parse_instance_unchecked(text)?;
    let violations = validate(&scene);
    if violations.is_empty() {
        Ok(scene)
    } else {
        Err(ParseError::Invalid(violations))
    }
}

pub fn write_instance(scene: &Scene) -> String {
    let mut out = String::from("{\n  \"vertices\": [");
    for (i, p) in scene.vertices().iter().enumerate() {
        let sep = if i == 0 { "\n" } else { ",\n" };
        out.push_str(&format!(
            "{sep}    [{}, {}]",
            coordinate_value(&p.x),
            coordinate_value(&p.y)
        ));
    }
    if !scene.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("],\n  \"obstacles\": [");
    for (i, ob) in scene.obstacles().iter().enumerate() {
        let sep = if i == 0 { "\n" } else { ",\n" };
        let idx: Vec<String> = ob.iter().map(usize::to_string).collect();
        out.push_str(&format!("{sep}    [{}]", idx.join(", ")));
    }
    if !scene.obstacles().is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

/// `n m` on the first line, then one sorted `u v` pair per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let err = |line: usize, msg: String| ParseError::EdgeList { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let pair = |line: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(line, format!("expected two indices, got {l:?}"))),
        }
    };
    let (hl, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let (n, m) = pair(hl, header)?;
    let mut g = Graph::new(n);
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range in ({u}, {v}), n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        if !g.add_edge(u, v) {
            return Err(err(line, format!("duplicate edge ({u}, {v})")));
        }
    }
    if g.edge_count() != m {
        return Err(err(hl, format!("header says {m} edges, found {}", g.edge_count())));
    }
    Ok(g)
}
