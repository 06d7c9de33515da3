//! Factorization of an element into generators of a monoid or union of sets,
//! by repeated exact right division.

use std::collections::HashSet;

use crate::budget::Budget;
use crate::error::Result;
use crate::rings::{exact_right_divide, int, Elem, Tri, WeylOp};

use super::{contains, OreKind, OreSetDesc};

/// Outcome of a factor search. Each factor carries the index of the component it
/// came from (always 0 outside unions); the product of the factors in order is the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Found(Vec<(usize, Elem)>),
    Absent,
    Unknown,
}

struct Search<'a> {
    parts: Vec<&'a OreSetDesc>,
    atoms: Vec<(usize, Elem)>,
    unit_gens: Vec<Elem>,
    all_units: bool,
    budget: &'a Budget,
    failed: HashSet<Elem>,
    /// Set when a branch was cut short, so a miss is not a proof of absence.
    incomplete: bool,
}

impl Search<'_> {
    fn unit_leaf(&mut self, c: &Elem) -> Tri {
        if c.is_one() || self.all_units || self.unit_gens.contains(c) {
            return Tri::Yes;
        }
        let mut seen: HashSet<Elem> = HashSet::from([Elem::one(&c.ring())]);
        let mut frontier: Vec<Elem> = seen.iter().cloned().collect();
        for _ in 0..self.budget.exponent {
            let mut next = Vec::new();
            for f in &frontier {
                for u in &self.unit_gens {
                    let p = f.mul(u).expect("same ring");
                    if &p == c {
                        return Tri::Yes;
                    }
                    if seen.insert(p.clone()) {
                        next.push(p);
                    }
                }
            }
            if next.is_empty() {
                return Tri::No;
            }
            frontier = next;
        }
        Tri::Unknown
    }

    fn run(&mut self, node: &Elem) -> Result<Option<Vec<(usize, Elem)>>> {
        if node.is_one() {
            return Ok(Some(Vec::new()));
        }
        if self.failed.contains(node) {
            return Ok(None);
        }
        if node.is_unit() {
            return Ok(match self.unit_leaf(node) {
                Tri::Yes => Some(vec![(0, node.clone())]),
                Tri::No => None,
                Tri::Unknown => {
                    self.incomplete = true;
                    None
                }
            });
        }
        for i in 0..self.parts.len() {
            let part = self.parts[i];
            if matches!(part.kind, OreKind::MonoidGens(_)) {
                continue;
            }
            match contains(part, node, self.budget)? {
                Tri::Yes => return Ok(Some(vec![(i, node.clone())])),
                Tri::Unknown => self.incomplete = true,
                Tri::No => {}
            }
        }
        for k in 0..self.atoms.len() {
            let (i, a) = self.atoms[k].clone();
            if let Some(q) = exact_right_divide(node, &a)? {
                if let Some(mut word) = self.run(&q)? {
                    word.push((i, a));
                    return Ok(Some(word));
                }
            }
        }
        self.failed.insert(node.clone());
        Ok(None)
    }
}

/// Writes `r` as a product of generators (for monoids) or of component
/// elements (for unions). Euler components contribute the factors `θ+z+k`
/// with `|k|` up to the exponent budget, so misses there are inconclusive.
pub fn factor_word(set: &OreSetDesc, r: &Elem, budget: &Budget) -> Result<Word> {
    let parts: Vec<&OreSetDesc> = match &set.kind {
        OreKind::Union(parts) => parts.iter().collect(),
        _ => vec![set],
    };
    let mut atoms = Vec::new();
    let mut unit_gens = Vec::new();
    let mut incomplete = false;
    for (i, p) in parts.iter().enumerate() {
        match &p.kind {
            OreKind::MonoidGens(gens) => {
                for g in gens {
                    if g.is_unit() {
                        unit_gens.push(g.clone());
                    } else if !atoms.iter().any(|(_, a)| a == g) {
                        atoms.push((i, g.clone()));
                    }
                }
            }
            OreKind::EulerSet(z) => {
                incomplete = true;
                let e = budget.exponent as i64;
                for k in -e..=e {
                    atoms.push((i, Elem::Weyl(WeylOp::theta_shift(&(z + int(k))))));
                }
            }
            _ => {}
        }
    }
    let all_units = parts.iter().any(|p| p.contains_all_units());
    let mut search = Search { parts, atoms, unit_gens, all_units, budget, failed: HashSet::new(), incomplete: false };
    if r.is_zero() {
        return Ok(Word::Absent);
    }
    Ok(match search.run(r)? {
        Some(word) => Word::Found(word),
        None if incomplete || search.incomplete => Word::Unknown,
        None => Word::Absent,
    })
}
