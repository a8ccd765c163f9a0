//! Ring constructors: residue rings, small fields, products, matrix and
//! triangular rings, corners, quotients, ideal extensions and the catalog.
//!
//! Every constructor enumerates its elements in a fixed order, builds both
//! tables, runs the full axiom scan and then normalizes so that zero is
//! index 0 and one is index 1. Rebuilding the same expression therefore
//! always yields identical tables.

mod bimodule;
mod catalog;
mod matrix;
mod poly;

use std::collections::HashMap;
use std::hash::Hash;

use thiserror::Error;

pub use bimodule::{
    ideal_extension, idempotent_self_bimodule, split_action_bimodule, square_zero_bimodule,
    strict_upper_bimodule, zero_bimodule, BimoduleSpec, ExtensionConditions,
};
pub use catalog::{
    build_catalog, default_catalog, default_catalog_sources, Basis, Catalog, Expectation,
    RingCatalogEntry, CATALOG_ORDER_CAP,
};
pub use matrix::{equal_diagonal_subring, matrix_ring, paper_gf4_example, upper_triangular};
pub use poly::{gf, zn_alpha};

use crate::ideals::{is_ideal, Ideal};
use crate::ring::{self, FiniteRing, RingError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("no finite field of order {0} is supported (use 2, 3, 4, 5, 7, 8 or 9)")]
    UnsupportedFieldOrder(usize),
    #[error("construction would have order {order}, above the cap of {cap}")]
    OrderCapExceeded { order: u128, cap: usize },
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("the given set is not an ideal of the ring")]
    NotAnIdeal,
    #[error("element set is not closed: {0}")]
    ClosureViolation(String),
    #[error("bimodule law '{law}' fails at {witness:?}")]
    BimoduleLawViolation { law: String, witness: Vec<usize> },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

pub(crate) fn check_order(order: u128, cap: usize) -> Result<usize, ConstructError> {
    if order > cap as u128 {
        Err(ConstructError::OrderCapExceeded { order, cap })
    } else {
        Ok(order as usize)
    }
}

/// Builds a ring from an explicit element list and closed operations.
///
/// Element `elems[i]` becomes index `i` before normalization.
pub(crate) fn from_elements<T, A, M, N>(
    label: String,
    elems: &[T],
    zero: &T,
    one: &T,
    add: A,
    mul: M,
    name: N,
) -> Result<FiniteRing, ConstructError>
where
    T: Clone + Eq + Hash + std::fmt::Debug,
    A: Fn(&T, &T) -> T,
    M: Fn(&T, &T) -> T,
    N: Fn(&T) -> String,
{
    let n = elems.len();
    let index: HashMap<&T, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    if index.len() != n {
        return Err(ConstructError::InvalidArgument("duplicate elements".into()));
    }
    let lookup = |v: &T, what: &str| {
        index
            .get(v)
            .map(|&i| i as u32)
            .ok_or_else(|| ConstructError::ClosureViolation(format!("{what} produced {v:?}")))
    };
    let mut add_t = Vec::with_capacity(n * n);
    let mut mul_t = Vec::with_capacity(n * n);
    for x in elems {
        for y in elems {
            add_t.push(lookup(&add(x, y), "addition")?);
            mul_t.push(lookup(&mul(x, y), "multiplication")?);
        }
    }
    let zero = lookup(zero, "zero")? as usize;
    let one = lookup(one, "one")? as usize;
    let names = elems.iter().map(name).collect();
    Ok(ring::build_checked(
        label,
        n,
        &add_t,
        &mul_t,
        zero,
        one,
        Some(names),
    )?)
}

/// `Z/n` with elements in their natural order.
pub fn zmod(n: usize) -> Result<FiniteRing, ConstructError> {
    if n == 0 {
        return Err(ConstructError::InvalidArgument(
            "zmod(0) is infinite".into(),
        ));
    }
    check_order(n as u128, MAX_ORDER)?;
    let elems: Vec<usize> = (0..n).collect();
    from_elements(
        format!("zmod:{n}"),
        &elems,
        &0,
        &(1 % n),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        |a| a.to_string(),
    )
}

pub fn product(r: &FiniteRing, s: &FiniteRing) -> Result<FiniteRing, ConstructError> {
    check_order(r.order() as u128 * s.order() as u128, MAX_ORDER)?;
    let elems: Vec<(usize, usize)> = r
        .elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .collect();
    from_elements(
        format!("product:({}),({})", r.label(), s.label()),
        &elems,
        &(r.zero(), s.zero()),
        &(r.one(), s.one()),
        |x, y| (r.add(x.0, y.0), s.add(x.1, y.1)),
        |x, y| (r.mul(x.0, y.0), s.mul(x.1, y.1)),
        |x| format!("({},{})", r.element_name(x.0), s.element_name(x.1)),
    )
}

/// The corner ring `eRe`, whose identity is `e`.
pub fn corner(r: &FiniteRing, e: usize) -> Result<FiniteRing, ConstructError> {
    if e >= r.order() {
        return Err(ConstructError::InvalidArgument(format!(
            "element {e} out of range"
        )));
    }
    if r.mul(e, e) != e {
        return Err(ConstructError::NotIdempotent(e));
    }
    let mut elems: Vec<usize> = r.elements().map(|x| r.mul(r.mul(e, x), e)).collect();
    elems.sort_unstable();
    elems.dedup();
    from_elements(
        format!("corner:({}):{e}", r.label()),
        &elems,
        &r.zero(),
        &e,
        |x, y| r.add(*x, *y),
        |x, y| r.mul(*x, *y),
        |x| r.element_name(*x),
    )
}

/// `R/I` with each coset represented by its smallest element index.
pub fn quotient(r: &FiniteRing, ideal: &Ideal) -> Result<FiniteRing, ConstructError> {
    if ideal.bits().len() != r.order() || !is_ideal(r, ideal.bits()) {
        return Err(ConstructError::NotAnIdeal);
    }
    let members = ideal.members();
    let rep = |x: usize| {
        members
            .iter()
            .map(|&i| r.add(x, i))
            .min()
            .expect("ideal contains zero")
    };
    let reps_of: Vec<usize> = r.elements().map(rep).collect();
    let mut elems = reps_of.clone();
    elems.sort_unstable();
    elems.dedup();
    from_elements(
        format!("quotient:({})", r.label()),
        &elems,
        &reps_of[r.zero()],
        &reps_of[r.one()],
        |x, y| reps_of[r.add(*x, *y)],
        |x, y| reps_of[r.mul(*x, *y)],
        |x| format!("{}+I", r.element_name(*x)),
    )
}
