//! Text formats.
//!
//! * family: `{"n":2,"members":[[0],[0,1]]}`, members sorted by encoding
//! * star: `{"primes":[2,3],"family":{...}}`
//! * vector: `{"primes":[2,3],"entries":[1,"inf"]}`, zero as `{"zero":true}`
//! * inline vector: `(0,inf,-3)`
//!
//! Readers also accept bare object keys and bare `inf`/`-inf` tokens, so
//! `{n:2,members:[[0],[0,1]]}` parses.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::extvec::{ExtInt, Spectrum, ValVector};
use crate::moore::MooreFamily;
use crate::semistar::Star;
use crate::subset::Subset;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyRecord {
    pub n: usize,
    pub members: Vec<Vec<usize>>,
}

impl From<&MooreFamily> for FamilyRecord {
    fn from(f: &MooreFamily) -> Self {
        FamilyRecord {
            n: f.n(),
            members: f.members().iter().map(|m| m.iter().collect()).collect(),
        }
    }
}

impl TryFrom<FamilyRecord> for MooreFamily {
    type Error = Error;

    fn try_from(r: FamilyRecord) -> Result<Self> {
        let members = r
            .members
            .iter()
            .map(|m| {
                if let Some(&i) = m.iter().find(|&&i| i >= r.n) {
                    return Err(Error::Malformed(format!(
                        "index {i} outside a {}-element ground set",
                        r.n
                    )));
                }
                Ok(Subset::from_indices(m.iter().copied()))
            })
            .collect::<Result<Vec<_>>>()?;
        MooreFamily::new(r.n, members)
    }
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::Malformed(e.to_string())
}

/// Quote bare object keys and bare `inf` / `-inf` tokens.
pub fn relax(input: &str) -> String {
    let chars: Vec<char> = input.chars().collect();
    let mut out = String::with_capacity(input.len() + 16);
    let mut i = 0;
    let mut in_string = false;
    while i < chars.len() {
        let c = chars[i];
        if in_string {
            out.push(c);
            if c == '\\' && i + 1 < chars.len() {
                out.push(chars[i + 1]);
                i += 1;
            } else if c == '"' {
                in_string = false;
            }
            i += 1;
            continue;
        }
        if c == '"' {
            in_string = true;
            out.push(c);
            i += 1;
            continue;
        }
        let starts_word = c.is_ascii_alphabetic() || c == '_';
        let neg_inf = c == '-' && chars[i + 1..].starts_with(&['i', 'n', 'f']);
        if starts_word || neg_inf {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            match word.as_str() {
                "true" | "false" | "null" => out.push_str(&word),
                _ => {
                    out.push('"');
                    out.push_str(&word);
                    out.push('"');
                }
            }
            continue;
        }
        out.push(c);
        i += 1;
    }
    out
}

fn parse_value(input: &str) -> Result<Value> {
    serde_json::from_str(&relax(input)).map_err(malformed)
}

fn label_value(label: &str) -> Value {
    match label.parse::<u64>() {
        Ok(p) => json!(p),
        Err(_) => json!(label),
    }
}

fn spectrum_value(s: &Spectrum) -> Value {
    Value::Array(s.labels().iter().map(|l| label_value(l)).collect())
}

fn spectrum_from_value(v: &Value) -> Result<Spectrum> {
    let labels = v
        .as_array()
        .ok_or_else(|| malformed("primes must be a list"))?
        .iter()
        .map(|p| match p {
            Value::Number(n) => Ok(n.to_string()),
            Value::String(s) => Ok(s.clone()),
            other => Err(malformed(format!("bad prime label {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Spectrum::new(labels)
}

fn ext_value(e: ExtInt) -> Value {
    match e {
        ExtInt::Finite(v) => json!(v),
        other => json!(other.to_string()),
    }
}

fn ext_from_value(v: &Value) -> Result<ExtInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .filter(|&x| x != i64::MIN)
            .map(ExtInt::Finite)
            .ok_or_else(|| malformed(format!("entry {n} is out of range"))),
        Value::String(s) => s.parse(),
        other => Err(malformed(format!("bad entry {other}"))),
    }
}

pub fn family_to_json(f: &MooreFamily) -> String {
    serde_json::to_string(&FamilyRecord::from(f)).expect("family record serializes")
}

pub fn family_from_value(v: Value) -> Result<MooreFamily> {
    let record: FamilyRecord = serde_json::from_value(v).map_err(malformed)?;
    record.try_into()
}

pub fn family_from_str(input: &str) -> Result<MooreFamily> {
    family_from_value(parse_value(input)?)
}

#[derive(Serialize)]
struct StarRecord {
    primes: Value,
    family: FamilyRecord,
}

#[derive(Serialize)]
struct VectorRecord {
    primes: Value,
    entries: Vec<Value>,
}

pub fn star_to_json(s: &Star) -> String {
    serde_json::to_string(&StarRecord {
        primes: spectrum_value(s.spectrum()),
        family: s.family().into(),
    })
    .expect("star record serializes")
}

/// A star record, or a bare family record over the labels `p0..`.
pub fn star_from_str(input: &str) -> Result<Star> {
    let v = parse_value(input)?;
    match v.get("family") {
        Some(family) => {
            let spectrum = spectrum_from_value(
                v.get("primes").ok_or_else(|| malformed("star record without primes"))?,
            )?;
            Star::from_moore(spectrum, family_from_value(family.clone())?)
        }
        None => Star::indexed(family_from_value(v)?),
    }
}

pub fn vector_to_json(f: &ValVector) -> String {
    match f.entries() {
        None => json!({ "zero": true }).to_string(),
        Some(e) => serde_json::to_string(&VectorRecord {
            primes: spectrum_value(f.spectrum()),
            entries: e.iter().map(|&x| ext_value(x)).collect(),
        })
        .expect("vector record serializes"),
    }
}

/// Inline `(a,b,...)` syntax, tokens integer | `inf` | `-inf`.
pub fn parse_inline_vector(input: &str, spectrum: Option<&Spectrum>) -> Result<ValVector> {
    let body = input
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| malformed(format!("expected (a,b,...), got {input:?}")))?;
    let entries = body
        .split(',')
        .map(str::parse::<ExtInt>)
        .collect::<Result<Vec<_>>>()?;
    let spectrum = match spectrum {
        Some(s) => s.clone(),
        None => Spectrum::indexed(entries.len())?,
    };
    ValVector::new(spectrum, entries)
}

/// Inline tuple, `zero`, or vector record. `spectrum` supplies labels for inline
/// tuples and for `{"zero":true}`, and must match a record's own primes.
pub fn vector_from_str(input: &str, spectrum: Option<&Spectrum>) -> Result<ValVector> {
    if input.trim() == "zero" {
        return spectrum
            .map(|s| ValVector::zero(s.clone()))
            .ok_or_else(|| malformed("zero vector needs a spectrum"));
    }
    if input.trim_start().starts_with('(') {
        return parse_inline_vector(input, spectrum);
    }
    let v = parse_value(input)?;
    if v.get("zero").and_then(Value::as_bool) == Some(true) {
        let spectrum = match (v.get("primes"), spectrum) {
            (Some(p), _) => spectrum_from_value(p)?,
            (None, Some(s)) => s.clone(),
            (None, None) => return Err(malformed("zero vector needs a spectrum")),
        };
        return Ok(ValVector::zero(spectrum));
    }
    let own = spectrum_from_value(
        v.get("primes").ok_or_else(|| malformed("vector record without primes"))?,
    )?;
    if let Some(s) = spectrum {
        s.check(&own)?;
    }
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("vector record without entries"))?
        .iter()
        .map(ext_from_value)
        .collect::<Result<Vec<_>>>()?;
    ValVector::new(own, entries)
}
