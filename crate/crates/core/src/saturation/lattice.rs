//! Join, meet and order on saturated sets, and DOT drawings of the subset
//! lattice and the binary decision tree over a list of primes.

use std::fmt::Write;

use super::{SatMode, SaturatedSetDesc};
use crate::error::{Error, Result};
use crate::rings::Elem;

fn same_ring(a: &SaturatedSetDesc, b: &SaturatedSetDesc) -> Result<()> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch { expected: a.ring.clone(), found: b.ring.clone() });
    }
    Ok(())
}

fn union(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().chain(b).cloned().collect()
}

fn inter(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().filter(|p| b.contains(p)).cloned().collect()
}

fn minus(a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().filter(|p| !b.contains(p)).cloned().collect()
}

/// Smallest saturated set containing both.
pub fn join(a: &SaturatedSetDesc, b: &SaturatedSetDesc) -> Result<SaturatedSetDesc> {
    same_ring(a, b)?;
    use SatMode::*;
    let (mode, irr) = match (a.mode, b.mode) {
        (Finite, Finite) => (Finite, union(&a.irreducibles, &b.irreducibles)),
        (Cofinite, Cofinite) => (Cofinite, inter(&a.irreducibles, &b.irreducibles)),
        (Finite, Cofinite) => (Cofinite, minus(&b.irreducibles, &a.irreducibles)),
        (Cofinite, Finite) => (Cofinite, minus(&a.irreducibles, &b.irreducibles)),
    };
    Ok(SaturatedSetDesc::from_parts(a.ring.clone(), mode, irr))
}

pub fn meet(a: &SaturatedSetDesc, b: &SaturatedSetDesc) -> Result<SaturatedSetDesc> {
    same_ring(a, b)?;
    use SatMode::*;
    let (mode, irr) = match (a.mode, b.mode) {
        (Finite, Finite) => (Finite, inter(&a.irreducibles, &b.irreducibles)),
        (Cofinite, Cofinite) => (Cofinite, union(&a.irreducibles, &b.irreducibles)),
        (Finite, Cofinite) => (Finite, minus(&a.irreducibles, &b.irreducibles)),
        (Cofinite, Finite) => (Finite, minus(&b.irreducibles, &a.irreducibles)),
    };
    Ok(SaturatedSetDesc::from_parts(a.ring.clone(), mode, irr))
}

/// `a ⊆ b`. There are infinitely many irreducibles, so a cofinite set never
/// fits inside a finite one.
pub fn leq(a: &SaturatedSetDesc, b: &SaturatedSetDesc) -> Result<bool> {
    same_ring(a, b)?;
    use SatMode::*;
    Ok(match (a.mode, b.mode) {
        (Finite, Finite) => a.irreducibles.iter().all(|p| b.irreducibles.contains(p)),
        (Finite, Cofinite) => inter(&a.irreducibles, &b.irreducibles).is_empty(),
        (Cofinite, Finite) => false,
        (Cofinite, Cofinite) => b.irreducibles.iter().all(|p| a.irreducibles.contains(p)),
    })
}

fn checked_primes(primes: &[Elem]) -> Result<Vec<Elem>> {
    let Some(first) = primes.first() else { return Ok(Vec::new()) };
    let d = SaturatedSetDesc::finite(first.ring(), primes.to_vec())?;
    if d.irreducibles.len() != primes.len() {
        return Err(Error::Invalid("repeated prime in the list".into()));
    }
    if primes.len() > 12 {
        return Err(Error::Invalid("at most 12 primes can be drawn".into()));
    }
    Ok(d.irreducibles)
}

fn subset_label(primes: &[Elem], mask: usize) -> Result<String> {
    let ring = primes.first().map(|p| p.ring()).unwrap_or(crate::rings::RingId::Z);
    let chosen = primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect();
    Ok(SaturatedSetDesc::from_parts(ring, SatMode::Finite, chosen).to_string())
}

fn inverse_label(p: &Elem) -> String {
    match p {
        Elem::Int(_) => format!("{p}^-1"),
        _ => format!("({p})^-1"),
    }
}

/// Hasse diagram of all finite sets of invertible primes drawn from `primes`:
/// `2^n` nodes, one edge per added prime.
pub fn dot_lattice(primes: &[Elem]) -> Result<String> {
    let primes = checked_primes(primes)?;
    let n = primes.len();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for mask in 0..1usize << n {
        writeln!(out, "  n{mask} [label=\"{}\"];", subset_label(&primes, mask)?).unwrap();
    }
    for mask in 0..1usize << n {
        for (i, p) in primes.iter().enumerate() {
            if mask >> i & 1 == 0 {
                writeln!(out, "  n{mask} -> n{} [label=\"{}\"];", mask | 1 << i, inverse_label(p)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Binary tree whose level `i` decides whether the `i`-th prime is inverted:
/// `2^(n+1) - 1` nodes.
pub fn dot_tree(primes: &[Elem]) -> Result<String> {
    let primes = checked_primes(primes)?;
    let mut out = String::from("digraph tree {\n");
    // node id = position in breadth-first order; depth i holds masks over the first i primes
    let mut level: Vec<(usize, usize)> = vec![(0, 0)];
    writeln!(out, "  n0 [label=\"{}\"];", subset_label(&primes, 0)?).unwrap();
    let mut next_id = 1;
    for (i, p) in primes.iter().enumerate() {
        let mut next = Vec::with_capacity(level.len() * 2);
        for &(id, mask) in &level {
            for take in [false, true] {
                let m = if take { mask | 1 << i } else { mask };
                writeln!(out, "  n{next_id} [label=\"{}\"];", subset_label(&primes, m)?).unwrap();
                let label = if take { inverse_label(p) } else { String::new() };
                writeln!(out, "  n{id} -> n{next_id} [label=\"{label}\"];").unwrap();
                next.push((next_id, m));
                next_id += 1;
            }
        }
        level = next;
    }
    out.push_str("}\n");
    Ok(out)
}
