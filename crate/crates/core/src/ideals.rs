//! Two-sided ideals, the ideal lattice, prime and maximal spectra, and the
//! radicals J(R), J*(R) and P(R).

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::Analysis;
use crate::constructors;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("ideal lattice of a ring of order {order} exceeds the lattice cap of {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },
    #[error("ideal lattice has more than {cap} members")]
    IdealCountExceeded { cap: usize },
    #[error("the ideal is not proper")]
    NotProperIdeal,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

/// A two-sided ideal stored as a membership bitset over `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    bits: FixedBitSet,
}

impl Ideal {
    /// Wraps `members` after checking the ideal axioms.
    pub fn new(ring: &FiniteRing, members: impl IntoIterator<Item = usize>) -> Option<Ideal> {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        for x in members {
            if x >= ring.order() {
                return None;
            }
            bits.insert(x);
        }
        is_ideal(ring, &bits).then_some(Ideal { bits })
    }

    pub fn zero(ring: &FiniteRing) -> Ideal {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        bits.insert(ring.zero());
        Ideal { bits }
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        bits.insert_range(..);
        Ideal { bits }
    }

    pub fn members(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.bits.len()
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ideal { bits }
    }

    /// Number of cosets `|R| / |I|`.
    pub fn index(&self) -> usize {
        self.bits.len() / self.len()
    }
}

/// Checks zero membership, additive closure, negation and two-sided absorption.
pub fn is_ideal(ring: &FiniteRing, set: &FixedBitSet) -> bool {
    if !set.contains(ring.zero()) {
        return false;
    }
    let members: Vec<usize> = set.ones().collect();
    for &x in &members {
        if !set.contains(ring.neg(x)) {
            return false;
        }
        for &y in &members {
            if !set.contains(ring.add(x, y)) {
                return false;
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, x)) || !set.contains(ring.mul(x, r)) {
                return false;
            }
        }
    }
    true
}

fn additive_closure(ring: &FiniteRing, gens: &FixedBitSet) -> FixedBitSet {
    let gens: Vec<usize> = gens.ones().collect();
    let mut bits = FixedBitSet::with_capacity(ring.order());
    bits.insert(ring.zero());
    let mut stack = vec![ring.zero()];
    while let Some(m) = stack.pop() {
        for &g in &gens {
            let s = ring.add(m, g);
            if !bits.put(s) {
                stack.push(s);
            }
        }
    }
    bits
}

/// Smallest ideal containing `xs`: the additive span of `{r x s}`.
pub fn ideal_generated_by(ring: &FiniteRing, xs: &[usize]) -> Ideal {
    let mut gens = FixedBitSet::with_capacity(ring.order());
    for &x in xs {
        for r in ring.elements() {
            let rx = ring.mul(r, x);
            for s in ring.elements() {
                gens.insert(ring.mul(rx, s));
            }
        }
    }
    Ideal {
        bits: additive_closure(ring, &gens),
    }
}

fn ideal_sum(ring: &FiniteRing, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(ring.order());
    let bm: Vec<usize> = b.ones().collect();
    for x in a.ones() {
        for &y in &bm {
            bits.insert(ring.add(x, y));
        }
    }
    bits
}

/// Proper `P` is prime when for all `a, b` outside `P` some `a r b` is outside `P`.
pub fn is_prime_ideal(ring: &FiniteRing, p: &Ideal) -> bool {
    if !p.is_proper() {
        return false;
    }
    let outside: Vec<usize> = ring.elements().filter(|&x| !p.contains(x)).collect();
    outside.iter().all(|&a| {
        outside.iter().all(|&b| {
            ring.elements()
                .any(|r| !p.contains(ring.mul(ring.mul(a, r), b)))
        })
    })
}

/// Every two-sided ideal together with its prime and maximal flags.
#[derive(Debug, Clone)]
pub struct Lattice {
    pub ideals: Vec<Ideal>,
    pub prime: Vec<bool>,
    pub maximal: Vec<bool>,
}

impl Lattice {
    pub fn maximal_ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals
            .iter()
            .zip(&self.maximal)
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn prime_ideals(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals
            .iter()
            .zip(&self.prime)
            .filter_map(|(i, &p)| p.then_some(i))
    }

    /// Every prime ideal is maximal and every maximal ideal is prime.
    pub fn primes_are_maximal(&self) -> bool {
        self.prime == self.maximal
    }
}

fn enumerate_lattice(ring: &FiniteRing, cap: usize) -> Result<Lattice, StructureError> {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut list: Vec<FixedBitSet> = Vec::new();
    for x in ring.elements() {
        let p = ideal_generated_by(ring, &[x]).bits;
        if seen.insert(p.clone()) {
            list.push(p);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let s = ideal_sum(ring, &list[i], &list[j]);
            if !seen.contains(&s) {
                if list.len() >= cap {
                    return Err(StructureError::IdealCountExceeded { cap });
                }
                seen.insert(s.clone());
                list.push(s);
            }
        }
        i += 1;
    }
    let mut ideals: Vec<Ideal> = list.into_iter().map(|bits| Ideal { bits }).collect();
    ideals.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members().cmp(&b.members()))
    });
    let maximal: Vec<bool> = ideals
        .iter()
        .map(|m| {
            m.is_proper()
                && !ideals
                    .iter()
                    .any(|o| o.is_proper() && o != m && m.is_subset(o))
        })
        .collect();
    let prime = ideals.iter().map(|p| is_prime_ideal(ring, p)).collect();
    Ok(Lattice {
        ideals,
        prime,
        maximal,
    })
}

/// Ideal lattice plus spectra, serialized as sorted member lists with flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub ideals: Vec<SpectrumEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub members: Vec<usize>,
    pub prime: bool,
    pub maximal: bool,
    #[serde(rename = "contains_J")]
    pub contains_j: bool,
}

impl SpectrumReport {
    pub fn all(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.ideals.iter()
    }

    pub fn maximal(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.ideals.iter().filter(|e| e.maximal)
    }

    pub fn prime(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.ideals.iter().filter(|e| e.prime)
    }

    pub fn j_spec(&self) -> impl Iterator<Item = &SpectrumEntry> {
        self.ideals.iter().filter(|e| e.prime && e.contains_j)
    }
}

fn intersect_all<'a>(ring: &FiniteRing, it: impl Iterator<Item = &'a Ideal>) -> Ideal {
    it.fold(Ideal::whole(ring), |acc, i| acc.intersection(i))
}

impl Analysis<'_> {
    /// `{x : 1 - r x is a unit for every r}`, re-verified as a two-sided ideal.
    pub fn try_jacobson_radical(&self) -> Result<&Ideal, StructureError> {
        if let Some(j) = self.jacobson.get() {
            return Ok(j);
        }
        let r = self.ring();
        let bits = self.bits_of(r.elements().filter(|&x| {
            r.elements()
                .all(|s| self.is_unit(r.sub(r.one(), r.mul(s, x))))
        }));
        if !is_ideal(r, &bits) {
            return Err(StructureError::InternalInvariantViolation(format!(
                "quasi-regular set of {} is not a two-sided ideal",
                r.label()
            )));
        }
        Ok(self.jacobson.get_or_init(|| Ideal { bits }))
    }

    pub fn jacobson_radical(&self) -> &Ideal {
        self.try_jacobson_radical()
            .expect("Jacobson radical of a validated finite ring is an ideal")
    }

    pub fn lattice(&self) -> Result<&Lattice, StructureError> {
        self.lattice
            .get_or_init(|| {
                let r = self.ring();
                if r.order() > self.cap().max_order {
                    return Err(StructureError::LatticeCapExceeded {
                        order: r.order(),
                        cap: self.cap().max_order,
                    });
                }
                enumerate_lattice(r, self.cap().max_ideals)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn all_ideals(&self) -> Result<Vec<Ideal>, StructureError> {
        Ok(self.lattice()?.ideals.clone())
    }

    pub fn maximal_ideals(&self) -> Result<Vec<Ideal>, StructureError> {
        Ok(self.lattice()?.maximal_ideals().cloned().collect())
    }

    pub fn prime_ideals(&self) -> Result<Vec<Ideal>, StructureError> {
        Ok(self.lattice()?.prime_ideals().cloned().collect())
    }

    /// Prime ideals containing J(R).
    pub fn j_spec(&self) -> Result<Vec<Ideal>, StructureError> {
        let j = self.jacobson_radical();
        Ok(self
            .lattice()?
            .prime_ideals()
            .filter(|p| j.is_subset(p))
            .cloned()
            .collect())
    }

    pub fn spectrum(&self) -> Result<SpectrumReport, StructureError> {
        let lat = self.lattice()?;
        let j = self.jacobson_radical();
        let ideals = lat
            .ideals
            .iter()
            .zip(lat.prime.iter().zip(&lat.maximal))
            .map(|(i, (&prime, &maximal))| SpectrumEntry {
                members: i.members(),
                prime,
                maximal,
                contains_j: j.is_subset(i),
            })
            .collect();
        Ok(SpectrumReport { ideals })
    }

    /// Intersection of all maximal two-sided ideals.
    pub fn j_star(&self) -> Result<Ideal, StructureError> {
        let lat = self.lattice()?;
        let out = intersect_all(self.ring(), lat.maximal_ideals());
        self.verified(out, "J*")
    }

    /// Intersection of all prime ideals.
    pub fn prime_radical(&self) -> Result<Ideal, StructureError> {
        let lat = self.lattice()?;
        let out = intersect_all(self.ring(), lat.prime_ideals());
        self.verified(out, "P")
    }

    fn verified(&self, i: Ideal, what: &str) -> Result<Ideal, StructureError> {
        if is_ideal(self.ring(), &i.bits) {
            Ok(i)
        } else {
            Err(StructureError::InternalInvariantViolation(format!(
                "{what} of {} is not an ideal",
                self.ring().label()
            )))
        }
    }

    pub fn ideal_generated_by(&self, xs: &[usize]) -> Ideal {
        ideal_generated_by(self.ring(), xs)
    }

    /// Every nonzero element of `R/P` has a power equal to 1.
    pub fn quotient_is_torsion(&self, p: &Ideal) -> Result<bool, StructureError> {
        quotient_is_torsion(self.ring(), p)
    }
}

pub fn jacobson_radical(ring: &FiniteRing) -> Ideal {
    Analysis::new(ring).jacobson_radical().clone()
}

pub fn all_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>, StructureError> {
    Analysis::new(ring).all_ideals()
}

pub fn j_star(ring: &FiniteRing) -> Result<Ideal, StructureError> {
    Analysis::new(ring).j_star()
}

pub fn prime_radical(ring: &FiniteRing) -> Result<Ideal, StructureError> {
    Analysis::new(ring).prime_radical()
}

pub fn quotient_is_torsion(ring: &FiniteRing, p: &Ideal) -> Result<bool, StructureError> {
    if !p.is_proper() {
        return Err(StructureError::NotProperIdeal);
    }
    let q = constructors::quotient(ring, p)
        .map_err(|e| StructureError::InternalInvariantViolation(e.to_string()))?;
    Ok(q.elements()
        .filter(|&x| x != q.zero())
        .all(|x| q.power_trail(x).reaches(q.one())))
}
