//! Finite unital rings stored as dense element-index tables.
//!
//! Every ring in this crate has elements `0..n`. After normalization the
//! additive identity is index 0 and the multiplicative identity is index 1
//! (both are index 0 in the zero ring).

use std::collections::HashSet;
use std::fmt;
use std::ptr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order accepted by validation and the predicate layer.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// Additive group law that failed during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AddLaw {
    Identity,
    Commutativity,
    Associativity,
    Inverse,
}

impl fmt::Display for AddLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AddLaw::Identity => "identity",
            AddLaw::Commutativity => "commutativity",
            AddLaw::Associativity => "associativity",
            AddLaw::Inverse => "inverses",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("malformed tables: {0}")]
    MalformedTables(String),
    #[error("order {order} exceeds the cap of {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("addition is not an abelian group ({law} fails at {witness:?})")]
    NotAbelianGroupUnderAdd { law: AddLaw, witness: Vec<usize> },
    #[error("element {0} is not a two-sided multiplicative identity")]
    NoIdentity(usize),
    #[error("multiplication is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociativeMul { a: usize, b: usize, c: usize },
    #[error("{side} distributivity fails at ({a}, {b}, {c})")]
    NotDistributive {
        side: Side,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("elements belong to different rings")]
    RingMismatch,
}

/// Raw ring tables, exactly as they appear in a ring JSON file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTables {
    pub label: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl RingTables {
    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Compact JSON with one table row per line; stable for a given ring.
    pub fn to_json(&self) -> String {
        let row = |r: &Vec<usize>| serde_json::to_string(r).expect("row serializes");
        let table = |t: &Vec<Vec<usize>>| {
            let rows: Vec<String> = t.iter().map(|r| format!("    {}", row(r))).collect();
            format!("[\n{}\n  ]", rows.join(",\n"))
        };
        format!(
            "{{\n  \"label\": {},\n  \"order\": {},\n  \"add\": {},\n  \"mul\": {},\n  \"zero\": {},\n  \"one\": {}\n}}\n",
            serde_json::to_string(&self.label).expect("label serializes"),
            self.order,
            table(&self.add),
            table(&self.mul),
            self.zero,
            self.one
        )
    }
}

/// A validated finite unital ring. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    label: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

/// Checks every ring axiom by a full scan and returns the normalized ring.
///
/// Witness indices in the error refer to the labeling of `candidate`.
pub fn validate_ring(candidate: &RingTables) -> Result<FiniteRing, RingError> {
    validate_ring_with_cap(candidate, MAX_ORDER)
}

pub fn validate_ring_with_cap(candidate: &RingTables, cap: usize) -> Result<FiniteRing, RingError> {
    let n = candidate.order;
    if n == 0 {
        return Err(RingError::MalformedTables("order must be positive".into()));
    }
    if n > cap {
        return Err(RingError::OrderTooLarge { order: n, cap });
    }
    let add = flatten(&candidate.add, n, "add")?;
    let mul = flatten(&candidate.mul, n, "mul")?;
    if candidate.zero >= n || candidate.one >= n {
        return Err(RingError::MalformedTables(
            "zero/one index out of range".into(),
        ));
    }
    check_axioms(n, &add, &mul, candidate.zero, candidate.one)?;
    Ok(normalize(
        candidate.label.clone(),
        n,
        &add,
        &mul,
        candidate.zero,
        candidate.one,
        None,
    ))
}

fn flatten(t: &[Vec<usize>], n: usize, name: &str) -> Result<Vec<u32>, RingError> {
    if t.len() != n || t.iter().any(|r| r.len() != n) {
        return Err(RingError::MalformedTables(format!(
            "{name} table is not {n}x{n}"
        )));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in t.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(RingError::MalformedTables(format!(
                    "{name}[{i}][{j}] = {v} is out of range"
                )));
            }
            out.push(v as u32);
        }
    }
    Ok(out)
}

fn check_axioms(
    n: usize,
    add: &[u32],
    mul: &[u32],
    zero: usize,
    one: usize,
) -> Result<(), RingError> {
    let a = |x: usize, y: usize| add[x * n + y] as usize;
    let m = |x: usize, y: usize| mul[x * n + y] as usize;

    for x in 0..n {
        if a(zero, x) != x || a(x, zero) != x {
            return Err(RingError::NotAbelianGroupUnderAdd {
                law: AddLaw::Identity,
                witness: vec![x],
            });
        }
    }
    for x in 0..n {
        for y in 0..x {
            if a(x, y) != a(y, x) {
                return Err(RingError::NotAbelianGroupUnderAdd {
                    law: AddLaw::Commutativity,
                    witness: vec![x, y],
                });
            }
        }
    }
    for x in 0..n {
        if !(0..n).any(|y| a(x, y) == zero) {
            return Err(RingError::NotAbelianGroupUnderAdd {
                law: AddLaw::Inverse,
                witness: vec![x],
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = a(x, y);
            for z in 0..n {
                if a(xy, z) != a(x, a(y, z)) {
                    return Err(RingError::NotAbelianGroupUnderAdd {
                        law: AddLaw::Associativity,
                        witness: vec![x, y, z],
                    });
                }
            }
        }
    }
    for x in 0..n {
        if m(one, x) != x || m(x, one) != x {
            return Err(RingError::NoIdentity(one));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = m(x, y);
            for z in 0..n {
                if m(xy, z) != m(x, m(y, z)) {
                    return Err(RingError::NonAssociativeMul { a: x, b: y, c: z });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m(x, a(y, z)) != a(m(x, y), m(x, z)) {
                    return Err(RingError::NotDistributive {
                        side: Side::Left,
                        a: x,
                        b: y,
                        c: z,
                    });
                }
                if m(a(x, y), z) != a(m(x, z), m(y, z)) {
                    return Err(RingError::NotDistributive {
                        side: Side::Right,
                        a: x,
                        b: y,
                        c: z,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Full axiom scan followed by normalization; used by the constructors.
pub(crate) fn build_checked(
    label: String,
    n: usize,
    add: &[u32],
    mul: &[u32],
    zero: usize,
    one: usize,
    names: Option<Vec<String>>,
) -> Result<FiniteRing, RingError> {
    check_axioms(n, add, mul, zero, one)?;
    Ok(normalize(label, n, add, mul, zero, one, names))
}

/// Relabels so that `zero -> 0`, `one -> 1` and every other element keeps
/// its relative order.
pub(crate) fn normalize(
    label: String,
    n: usize,
    add: &[u32],
    mul: &[u32],
    zero: usize,
    one: usize,
    names: Option<Vec<String>>,
) -> FiniteRing {
    let mut order = Vec::with_capacity(n);
    order.push(zero);
    if one != zero {
        order.push(one);
    }
    order.extend((0..n).filter(|&i| i != zero && i != one));
    let mut new_of = vec![0u32; n];
    for (new, &old) in order.iter().enumerate() {
        new_of[old] = new as u32;
    }
    let mut nadd = vec![0u32; n * n];
    let mut nmul = vec![0u32; n * n];
    for (ni, &oi) in order.iter().enumerate() {
        for (nj, &oj) in order.iter().enumerate() {
            nadd[ni * n + nj] = new_of[add[oi * n + oj] as usize];
            nmul[ni * n + nj] = new_of[mul[oi * n + oj] as usize];
        }
    }
    let names = names.map(|v| order.iter().map(|&o| v[o].clone()).collect());
    FiniteRing::from_normalized(label, n, nadd, nmul, names)
}

impl FiniteRing {
    fn from_normalized(
        label: String,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        names: Option<Vec<String>>,
    ) -> Self {
        let mut neg = vec![0u32; order];
        for x in 0..order {
            neg[x] = (0..order)
                .find(|&y| add[x * order + y] == 0)
                .expect("validated additive inverses") as u32;
        }
        FiniteRing {
            label,
            order,
            add,
            mul,
            neg,
            names,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        if self.order == 1 {
            0
        } else {
            1
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order + y] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    /// `x^k` by repeated squaring; `x^0` is the identity.
    pub fn pow(&self, x: usize, mut k: u64) -> usize {
        let mut base = x;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Integer multiple `k·1`.
    pub fn int(&self, k: u64) -> usize {
        (0..k).fold(self.zero(), |acc, _| self.add(acc, self.one()))
    }

    pub fn elem(&self, index: usize) -> Elem<'_> {
        assert!(index < self.order, "element {index} out of range");
        Elem { ring: self, index }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Structured name of an element when the constructor recorded one.
    pub fn element_name(&self, x: usize) -> String {
        match &self.names {
            Some(v) => v[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn has_names(&self) -> bool {
        self.names.is_some()
    }

    pub fn power_trail(&self, x: usize) -> PowerTrail {
        let mut seen = HashSet::new();
        let mut powers = Vec::new();
        let mut cur = x;
        loop {
            if !seen.insert(cur) {
                let cycle_start = powers.iter().position(|&p| p == cur).expect("seen power");
                return PowerTrail {
                    base: x,
                    powers,
                    cycle_start,
                };
            }
            powers.push(cur);
            cur = self.mul(cur, x);
        }
    }

    pub fn to_tables(&self) -> RingTables {
        let n = self.order;
        let rows = |t: &[u32]| -> Vec<Vec<usize>> {
            t.chunks(n)
                .map(|r| r.iter().map(|&v| v as usize).collect())
                .collect()
        };
        RingTables {
            label: self.label.clone(),
            order: n,
            add: rows(&self.add),
            mul: rows(&self.mul),
            zero: self.zero(),
            one: self.one(),
        }
    }

    /// True when both tables agree entry for entry (labels are ignored).
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        self.order == other.order && self.add == other.add && self.mul == other.mul
    }
}

/// An element together with the ring it lives in.
#[derive(Clone, Copy)]
pub struct Elem<'r> {
    ring: &'r FiniteRing,
    index: usize,
}

impl fmt::Debug for Elem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem({} in {})", self.index, self.ring.label)
    }
}

impl PartialEq for Elem<'_> {
    fn eq(&self, other: &Self) -> bool {
        ptr::eq(self.ring, other.ring) && self.index == other.index
    }
}

impl Eq for Elem<'_> {}

impl<'r> Elem<'r> {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    fn same_ring(&self, other: &Elem<'_>) -> Result<(), RingError> {
        if ptr::eq(self.ring, other.ring) {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Elem<'_>) -> Result<Elem<'r>, RingError> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.add(self.index, other.index)))
    }

    pub fn mul(&self, other: &Elem<'_>) -> Result<Elem<'r>, RingError> {
        self.same_ring(other)?;
        Ok(self.ring.elem(self.ring.mul(self.index, other.index)))
    }

    pub fn neg(&self) -> Elem<'r> {
        self.ring.elem(self.ring.neg(self.index))
    }

    pub fn pow(&self, k: u64) -> Elem<'r> {
        self.ring.elem(self.ring.pow(self.index, k))
    }

    pub fn power_trail(&self) -> PowerTrail {
        self.ring.power_trail(self.index)
    }
}

/// The powers `a, a^2, ...` of an element up to the first repetition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerTrail {
    pub base: usize,
    /// `powers[i]` is `a^(i+1)`; all entries are distinct.
    pub powers: Vec<usize>,
    /// The power following the last entry equals `powers[cycle_start]`.
    pub cycle_start: usize,
}

impl PowerTrail {
    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn period(&self) -> usize {
        self.powers.len() - self.cycle_start
    }

    /// Value of `a^m` for any `m >= 1`.
    pub fn power(&self, m: usize) -> usize {
        assert!(m >= 1);
        let i = m - 1;
        if i < self.powers.len() {
            self.powers[i]
        } else {
            let off = (i - self.cycle_start) % self.period();
            self.powers[self.cycle_start + off]
        }
    }

    /// `(exponent, value)` pairs for every distinct power, exponents from 1.
    pub fn exponents(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.powers.iter().enumerate().map(|(i, &p)| (i + 1, p))
    }

    /// Distinct exponents `(m, n)` with `a^m = a^n`.
    pub fn periodic_witness(&self) -> (usize, usize) {
        (self.cycle_start + 1, self.powers.len() + 1)
    }

    pub fn reaches(&self, x: usize) -> bool {
        self.powers.contains(&x)
    }

    /// `a^n = a` for some `n >= 2`.
    pub fn is_potent(&self) -> bool {
        self.cycle_start == 0
    }
}
