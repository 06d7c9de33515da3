//! JSON form of set descriptors:
//! `{"ring": "Z"|"QX"|"weyl", "kind": ..., "gens": [...], "z": "p/q", "parts": [...]}`.

use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::rings::{parse_element, Elem, Rat, RingId};
use crate::saturation::{SatMode, SaturatedSetDesc};

use super::{OreKind, OreSetDesc};

fn ring_json(ring: &RingId, obj: &mut Map<String, Value>) {
    obj.insert("ring".into(), json!(ring.tag()));
    if let RingId::QX(v) = ring {
        if v != "x" {
            obj.insert("var".into(), json!(v));
        }
    }
}

fn elems_json(es: &[Elem]) -> Value {
    Value::Array(es.iter().map(|e| json!(e.to_string())).collect())
}

pub fn saturated_to_json(d: &SaturatedSetDesc) -> Value {
    let mut obj = Map::new();
    ring_json(&d.ring(), &mut obj);
    obj.insert("mode".into(), serde_json::to_value(d.mode()).expect("plain enum"));
    obj.insert("irreducibles".into(), elems_json(d.irreducibles()));
    Value::Object(obj)
}

pub fn ore_set_to_json(set: &OreSetDesc) -> Value {
    let mut obj = Map::new();
    ring_json(&set.ring, &mut obj);
    let kind = match &set.kind {
        OreKind::MonoidGens(gens) => {
            obj.insert("gens".into(), elems_json(gens));
            "monoid"
        }
        OreKind::EulerSet(z) => {
            obj.insert("z".into(), json!(z.to_string()));
            "euler"
        }
        OreKind::Union(parts) => {
            obj.insert("parts".into(), Value::Array(parts.iter().map(ore_set_to_json).collect()));
            "union"
        }
        OreKind::NonzeroAll => "nonzero",
        OreKind::UnitsOnly => "units",
        OreKind::PrimeSet(d) => {
            obj.insert("mode".into(), serde_json::to_value(d.mode()).expect("plain enum"));
            obj.insert("irreducibles".into(), elems_json(d.irreducibles()));
            "primes"
        }
        OreKind::IdealHat(g) => {
            obj.insert("gens".into(), elems_json(std::slice::from_ref(g)));
            "ideal-hat"
        }
    };
    obj.insert("kind".into(), json!(kind));
    Value::Object(obj)
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Invalid(format!("missing field `{key}`")))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?.as_str().ok_or_else(|| Error::Invalid(format!("field `{key}` must be a string")))
}

fn parse_ring(v: &Value) -> Result<RingId> {
    let ring = RingId::from_tag(str_field(v, "ring")?)?;
    Ok(match (ring, v.get("var").and_then(Value::as_str)) {
        (RingId::QX(_), Some(var)) => RingId::QX(var.to_string()),
        (r, _) => r,
    })
}

fn parse_elems(v: &Value, key: &str, ring: &RingId) -> Result<Vec<Elem>> {
    let arr = field(v, key)?.as_array().ok_or_else(|| Error::Invalid(format!("field `{key}` must be an array")))?;
    arr.iter()
        .map(|e| match e {
            Value::String(s) => parse_element(s, ring),
            Value::Number(n) => parse_element(&n.to_string(), ring),
            _ => Err(Error::Invalid(format!("element must be a string: {e}"))),
        })
        .collect()
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|_| Error::Invalid(format!("not a rational number: `{s}`")))
}

fn parse_mode(v: &Value) -> Result<SatMode> {
    serde_json::from_value(field(v, "mode")?.clone()).map_err(|e| Error::Invalid(format!("mode: {e}")))
}

pub fn saturated_from_json(v: &Value) -> Result<SaturatedSetDesc> {
    let ring = parse_ring(v)?;
    let irr = parse_elems(v, "irreducibles", &ring)?;
    SaturatedSetDesc::new(ring, parse_mode(v)?, irr)
}

pub fn ore_set_from_json(v: &Value) -> Result<OreSetDesc> {
    let ring = parse_ring(v)?;
    match str_field(v, "kind")? {
        "monoid" => OreSetDesc::monoid(ring.clone(), parse_elems(v, "gens", &ring)?),
        "euler" => {
            if ring != RingId::Weyl {
                return Err(Error::Invalid("Euler sets need the Weyl ring".into()));
            }
            let z = match field(v, "z")? {
                Value::String(s) => parse_rat(s)?,
                other => parse_rat(&other.to_string())?,
            };
            Ok(OreSetDesc::euler(z))
        }
        "union" => {
            let parts = field(v, "parts")?.as_array().ok_or_else(|| Error::Invalid("`parts` must be an array".into()))?;
            let parts = parts.iter().map(ore_set_from_json).collect::<Result<Vec<_>>>()?;
            let set = OreSetDesc::union(parts)?;
            if set.ring != ring {
                return Err(Error::RingMismatch { expected: ring, found: set.ring });
            }
            Ok(set)
        }
        "nonzero" => Ok(OreSetDesc::nonzero(ring)),
        "units" => Ok(OreSetDesc::units(ring)),
        "primes" => {
            let inner = if ring == RingId::Weyl { RingId::qx() } else { ring.clone() };
            let irr = parse_elems(v, "irreducibles", &inner)?;
            OreSetDesc::primes(ring, SaturatedSetDesc::new(inner, parse_mode(v)?, irr)?)
        }
        "ideal-hat" => {
            let gens = parse_elems(v, "gens", &ring)?;
            let [g] = gens.as_slice() else { return Err(Error::Invalid("ideal-hat takes one generator".into())) };
            OreSetDesc::ideal_hat(g.clone())
        }
        other => Err(Error::Invalid(format!("unknown set kind `{other}`"))),
    }
}
