//! WebAssembly bindings for the browser demo in `www/`.
//!
//! The exported functions take a ring source string (the same syntax as the
//! command line) and return JSON. Each wraps a plain Rust function so the
//! logic is testable natively.

use serde::Serialize;
use thiserror::Error;
use wasm_bindgen::prelude::*;

use ringlab_core::predicates::{self as p, CleanWitness};
use ringlab_core::{parse_source, Analysis, FiniteRing, RingReport, SourceError, StructureError};

/// Largest ring the page will build; keeps the main thread responsive.
pub const WEB_ORDER_CAP: usize = 128;

#[derive(Debug, Error)]
pub enum DemoError {
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("unknown operation '{0}', expected 'add' or 'mul'")]
    UnknownOp(String),
    #[error("element {element} is out of range for a ring of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
}

fn build(src: &str) -> Result<FiniteRing, DemoError> {
    Ok(parse_source(src, WEB_ORDER_CAP)?)
}

pub fn analyze_ring(src: &str) -> Result<RingReport, DemoError> {
    let ring = build(src)?;
    let an = Analysis::new(&ring);
    Ok(RingReport::build(&an)?)
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CayleyTable {
    pub label: String,
    pub op: String,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    /// Idempotents, highlighted on the page.
    pub idempotents: Vec<usize>,
    pub units: Vec<usize>,
}

pub fn cayley_table(src: &str, op: &str) -> Result<CayleyTable, DemoError> {
    let ring = build(src)?;
    let f: fn(&FiniteRing, usize, usize) -> usize = match op {
        "add" => FiniteRing::add,
        "mul" => FiniteRing::mul,
        other => return Err(DemoError::UnknownOp(other.to_string())),
    };
    let an = Analysis::new(&ring);
    Ok(CayleyTable {
        label: ring.label().to_string(),
        op: op.to_string(),
        names: ring.elements().map(|x| ring.element_name(x)).collect(),
        table: ring
            .elements()
            .map(|x| ring.elements().map(|y| f(&ring, x, y)).collect())
            .collect(),
        idempotents: an.idempotent_list().to_vec(),
        units: an.units().members,
    })
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Pair {
    pub idempotent: String,
    pub rest: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PowerDecomposition {
    pub exponent: usize,
    pub power: String,
    pub idempotent: String,
    pub rest: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Decomposition {
    pub element: String,
    /// Every way to write the element as idempotent plus unit.
    pub clean: Vec<Pair>,
    pub uniquely_clean: bool,
    /// Smallest power that is uniquely clean, if any.
    pub pi_clean: Option<PowerDecomposition>,
    /// Smallest power that is uniquely idempotent plus nilpotent, if any.
    pub nil_clean: Option<PowerDecomposition>,
    pub power_trail: Vec<String>,
}

fn power_decomposition(r: &FiniteRing, w: CleanWitness) -> PowerDecomposition {
    PowerDecomposition {
        exponent: w.exponent,
        power: r.element_name(r.pow(w.target, w.exponent as u64)),
        idempotent: r.element_name(w.idempotent),
        rest: r.element_name(w.complement),
    }
}

pub fn decompose_element(src: &str, element: usize) -> Result<Decomposition, DemoError> {
    let ring = build(src)?;
    if element >= ring.order() {
        return Err(DemoError::ElementOutOfRange {
            element,
            order: ring.order(),
        });
    }
    let an = Analysis::new(&ring);
    let name = |x| ring.element_name(x);
    let clean: Vec<Pair> = p::clean_decompositions(&an, element)
        .into_iter()
        .map(|(e, u)| Pair {
            idempotent: name(e),
            rest: name(u),
        })
        .collect();
    Ok(Decomposition {
        element: name(element),
        uniquely_clean: clean.len() == 1,
        clean,
        pi_clean: p::pi_clean_witness(&an, element).map(|w| power_decomposition(&ring, w)),
        nil_clean: p::nil_clean_witness(&an, element).map(|w| power_decomposition(&ring, w)),
        power_trail: an.trail(element).powers.iter().map(|&x| name(x)).collect(),
    })
}

fn to_js<T: Serialize>(r: Result<T, DemoError>) -> Result<String, JsError> {
    let v = r.map_err(|e| JsError::new(&e.to_string()))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

/// Full report for a ring source, as JSON.
#[wasm_bindgen]
pub fn analyze(src: &str) -> Result<String, JsError> {
    to_js(analyze_ring(src))
}

/// Addition or multiplication table (`op` is `"add"` or `"mul"`), as JSON.
#[wasm_bindgen]
pub fn cayley(src: &str, op: &str) -> Result<String, JsError> {
    to_js(cayley_table(src, op))
}

/// Clean, π-clean and nil-clean decompositions of one element, as JSON.
#[wasm_bindgen]
pub fn decompose(src: &str, element: usize) -> Result<String, JsError> {
    to_js(decompose_element(src, element))
}
