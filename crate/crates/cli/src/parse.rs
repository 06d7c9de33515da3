//! Command-line shorthands for sets, fractions and element lists.

use std::sync::Arc;

use ore_loc::localization::{Fraction, LocCtx};
use ore_loc::ore::{ore_set_from_json, parse_rat, saturated_from_json, OreSetDesc};
use ore_loc::saturation::SaturatedSetDesc;
use ore_loc::rings::parse_element;
use ore_loc::{Budget, Elem, Error, Result, RingId, WeylOp};
use serde_json::Value;

pub fn ring(tag: &str) -> Result<RingId> {
    RingId::from_tag(tag)
}

fn json_or_file(text: &str) -> Result<Value> {
    let raw = if text.trim_start().starts_with('{') || text.trim_start().starts_with('[') {
        text.to_string()
    } else {
        std::fs::read_to_string(text).map_err(|e| Error::Invalid(format!("cannot read {text}: {e}")))?
    };
    serde_json::from_str(&raw).map_err(|e| Error::Invalid(format!("bad JSON: {e}")))
}

pub fn json_arg(text: &str) -> Result<Value> {
    json_or_file(text)
}

pub fn elem(text: &str, ring: &RingId) -> Result<Elem> {
    parse_element(text, ring)
}

/// Comma-separated elements.
pub fn elems(text: &str, ring: &RingId) -> Result<Vec<Elem>> {
    text.split(',').filter(|s| !s.trim().is_empty()).map(|s| elem(s.trim(), ring)).collect()
}

/// Semicolon-separated Weyl operators.
pub fn weyl_list(text: &str) -> Result<Vec<WeylOp>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Ok(elem(s.trim(), &RingId::Weyl)?.as_weyl().cloned().expect("Weyl ring")))
        .collect()
}

/// `theta0`, `theta:z`, `monoid:g,…`, `primes:p,…`, `coprimes:p,…`, `nonzero`,
/// `units`, `hat:g`, or a JSON descriptor. `ring` applies to the shorthands
/// that do not fix their ring.
pub fn ore_set(text: &str, ring: &RingId) -> Result<OreSetDesc> {
    let t = text.trim();
    if t.starts_with('{') {
        return ore_set_from_json(&json_or_file(t)?);
    }
    let (head, rest) = t.split_once(':').unwrap_or((t, ""));
    match head {
        "theta0" if rest.is_empty() => Ok(OreSetDesc::euler(parse_rat("0")?)),
        "theta" => Ok(OreSetDesc::euler(parse_rat(rest)?)),
        "monoid" => OreSetDesc::monoid(ring.clone(), elems(rest, ring)?),
        "primes" | "coprimes" => OreSetDesc::primes(ring.clone(), saturated(t, ring)?),
        "nonzero" => Ok(OreSetDesc::nonzero(ring.clone())),
        "units" => Ok(OreSetDesc::units(ring.clone())),
        "hat" => OreSetDesc::ideal_hat(elem(rest, ring)?),
        _ => Err(Error::Invalid(format!("unknown set shorthand `{t}`"))),
    }
}

/// `primes:p,…` (finitely many inverted), `coprimes:p,…` (all but these), or JSON.
pub fn saturated(text: &str, ring: &RingId) -> Result<SaturatedSetDesc> {
    let t = text.trim();
    if t.starts_with('{') {
        return saturated_from_json(&json_or_file(t)?);
    }
    match t.split_once(':').unwrap_or((t, "")) {
        ("primes", rest) => SaturatedSetDesc::finite(ring.clone(), elems(rest, ring)?),
        ("coprimes", rest) => SaturatedSetDesc::cofinite(ring.clone(), elems(rest, ring)?),
        _ => Err(Error::Invalid(format!("unknown saturated-set shorthand `{t}`"))),
    }
}

/// `"s | r"` as the left fraction `s⁻¹r`; a bare element `r` means `1 | r`.
pub fn fraction(text: &str, ctx: &Arc<LocCtx>) -> Result<Fraction> {
    let ring = ctx.ring();
    let (s, r) = match text.split_once('|') {
        Some((s, r)) => (elem(s.trim(), &ring)?, elem(r.trim(), &ring)?),
        None => (Elem::one(&ring), elem(text.trim(), &ring)?),
    };
    Fraction::new(ctx, s, r)
}

/// `g=w` pairs of generator and supplied witness.
pub fn witness_pair(text: &str, ring: &RingId) -> Result<(Elem, Elem)> {
    let (g, w) = text.split_once('=').ok_or_else(|| Error::Invalid(format!("expected g=w, got `{text}`")))?;
    Ok((elem(g.trim(), ring)?, elem(w.trim(), ring)?))
}

pub fn primes(text: &str) -> Result<Vec<ore_loc::Int>> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse().map_err(|_| Error::Invalid(format!("bad prime `{s}`"))))
        .collect()
}

pub fn ctx(set: OreSetDesc, budget: Budget) -> Result<Arc<LocCtx>> {
    LocCtx::new(set, budget)
}
