//! Irreducible and standard primary decompositions of monomial ideals.
//!
//! Irreducible components are found by recursive splitting: for a minimal
//! generator `u = x_i^e · v` with `v ≠ 1`,
//! `(J, u) = (J, x_i^e) ∩ (J, v)`. The recursion bottoms out at ideals
//! generated by pure powers; components containing another one are pruned,
//! which leaves the unique irredundant decomposition.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimal_set, MonomialIdeal};
use crate::monomial::Monomial;
use crate::ring::AmbientRing;

/// The ideal `(x_i^{e_i} : i ∈ powers)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(powers: BTreeMap<usize, u32>) -> Result<Self> {
        if powers.is_empty() || powers.values().any(|&e| e == 0) {
            return Err(Error::domain("irreducible component needs positive pure powers"));
        }
        Ok(IrreducibleComponent { powers })
    }

    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    pub fn radical(&self) -> BTreeSet<usize> {
        self.powers.keys().copied().collect()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &IrreducibleComponent) -> bool {
        other.powers.iter().all(|(v, &f)| self.powers.get(v).is_some_and(|&e| e <= f))
    }

    pub fn to_ideal(&self, ring: &AmbientRing) -> MonomialIdeal {
        let n = ring.len();
        let gens = self.powers.iter().map(|(&v, &e)| Monomial::var_pow(n, v, e)).collect();
        MonomialIdeal::new(ring, gens).expect("component indices come from the ring")
    }
}

/// One component of a standard primary decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimaryComponent {
    pub radical: BTreeSet<usize>,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StandardPrimaryDecomposition {
    pub components: Vec<PrimaryComponent>,
}

impl StandardPrimaryDecomposition {
    pub fn associated_primes(&self) -> Vec<&BTreeSet<usize>> {
        self.components.iter().map(|c| &c.radical).collect()
    }

    /// Associated primes that contain no other associated prime.
    pub fn minimal_primes(&self) -> Vec<&BTreeSet<usize>> {
        let all = self.associated_primes();
        all.iter().filter(|p| !all.iter().any(|q| q != *p && q.is_subset(p))).copied().collect()
    }
}

fn guard_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::domain("the zero ideal has no decomposition"))
    } else if ideal.is_unit() {
        Err(Error::domain("the unit ideal has no decomposition"))
    } else {
        Ok(())
    }
}

fn split(gens: Vec<Monomial>, out: &mut Vec<IrreducibleComponent>) {
    let gens = minimal_set(gens);
    let pos = gens.iter().position(|g| g.pure_power_var().is_none());
    match pos {
        None => {
            let powers = gens
                .iter()
                .map(|g| {
                    let v = g.pure_power_var().expect("all generators are pure powers");
                    (v, g.exponent(v))
                })
                .collect();
            out.push(IrreducibleComponent { powers });
        }
        Some(pos) => {
            let u = &gens[pos];
            let v = u.support()[0];
            let n = u.nvars();
            let power = Monomial::var_pow(n, v, u.exponent(v));
            let rest = u.checked_div(&power).expect("power divides u");
            let mut left = gens.clone();
            left[pos] = power;
            let mut right = gens;
            right[pos] = rest;
            split(left, out);
            split(right, out);
        }
    }
}

fn prune(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> =
        (0..comps.len()).map(|i| !(0..comps.len()).any(|j| j != i && comps[i].contains(&comps[j]))).collect();
    comps.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect()
}

/// The irredundant irreducible decomposition, components sorted by
/// `(radical size, variable indices, exponents)`.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    guard_proper_nonzero(ideal)?;
    let mut out = Vec::new();
    split(ideal.gens().to_vec(), &mut out);
    let mut comps = prune(out);
    comps.sort_by(|a, b| {
        a.powers
            .len()
            .cmp(&b.powers.len())
            .then_with(|| a.powers.keys().cmp(b.powers.keys()))
            .then_with(|| a.powers.values().cmp(b.powers.values()))
    });
    Ok(comps)
}

/// Groups irreducible components by radical and intersects each group.
pub fn standard_primary_decomposition(ideal: &MonomialIdeal) -> Result<StandardPrimaryDecomposition> {
    let comps = irreducible_decomposition(ideal)?;
    let mut groups: BTreeMap<(usize, BTreeSet<usize>), MonomialIdeal> = BTreeMap::new();
    for c in comps {
        let rad = c.radical();
        let q = c.to_ideal(ideal.ring());
        let key = (rad.len(), rad);
        let merged = match groups.remove(&key) {
            Some(prev) => prev.intersect(&q)?,
            None => q,
        };
        groups.insert(key, merged);
    }
    let components = groups.into_iter().map(|((_, radical), ideal)| PrimaryComponent { radical, ideal }).collect();
    Ok(StandardPrimaryDecomposition { components })
}

/// Height of a proper nonzero monomial ideal: the least number of variables
/// in an associated prime.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    let comps = irreducible_decomposition(ideal)?;
    Ok(comps.iter().map(|c| c.powers.len()).min().expect("nonempty decomposition"))
}

/// All associated primes have the same height.
pub fn is_height_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let comps = irreducible_decomposition(ideal)?;
    let h = comps[0].powers.len();
    Ok(comps.iter().all(|c| c.powers.len() == h))
}
