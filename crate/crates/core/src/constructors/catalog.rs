//! The default catalog of small rings used by the verification suites.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::ring::FiniteRing;
use crate::source::{parse_source, SourceError};

/// Largest order admitted into the default catalog.
pub const CATALOG_ORDER_CAP: usize = 128;

/// How an expected predicate value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// stated in the literature for this ring
    Cited,
    /// obtained by an independent hand computation
    Computed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub value: bool,
    pub basis: Basis,
}

#[derive(Debug, Clone)]
pub struct RingCatalogEntry {
    pub ring: FiniteRing,
    /// Source expression that rebuilds `ring` exactly.
    pub provenance: String,
    /// Known values of named predicates, keyed like the predicate vector.
    pub expected: BTreeMap<String, Expectation>,
}

impl RingCatalogEntry {
    /// Rebuilds the entry from its provenance and compares the tables.
    pub fn rebuilds_identically(&self) -> bool {
        parse_source(&self.provenance, usize::MAX)
            .map(|r| r.same_tables(&self.ring) && r.label() == self.ring.label())
            .unwrap_or(false)
    }
}

/// Catalog entries plus the sources that were left out.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<RingCatalogEntry>,
    pub skipped: Vec<(String, String)>,
}

/// Base source expressions in catalog order.
pub fn default_catalog_sources() -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    v.extend((1..=16).chain([27, 32]).map(|n| format!("zmod:{n}")));
    v.extend([2, 3, 4, 5, 7, 8, 9].map(|q| format!("gf:{q}")));
    v.extend(
        [
            "product:zmod:2,zmod:2",
            "product:zmod:2,zmod:3",
            "product:zmod:2,zmod:4",
            "product:zmod:3,zmod:3",
            "product:zmod:2,gf:4",
            "product:zmod:3,zmod:4",
            "product:zmod:4,zmod:4",
            "product:zmod:2,(tri:zmod:2:2)",
            "product:(matrix:zmod:2:2),zmod:2",
            "product:zmod:6,zmod:6",
            "product:zmod:4,zmod:9",
            "product:gf:4,zmod:9",
            "product:zmod:2,(eqdiag:zmod:2:3)",
            "product:(product:zmod:3,zmod:4),zmod:6",
            "matrix:zmod:2:2",
            "matrix:zmod:3:2",
            "tri:zmod:2:2",
            "tri:zmod:3:2",
            "tri:gf:4:2",
            "eqdiag:zmod:2:2",
            "eqdiag:zmod:2:3",
            "eqdiag:zmod:3:2",
            "eqdiag:gf:4:2",
            "zn-alpha:2",
            "zn-alpha:3",
            "zn-alpha:4",
            "ext:strict-upper:zmod:2:2",
            "ext:strict-upper:zmod:2:3",
            "ext:strict-upper:zmod:3:2",
            "ext:square-zero:zmod:4",
            "ext:split-action",
            "ext:self:zmod:3",
            "paper:gf4-example",
        ]
        .map(String::from),
    );
    v
}

fn expectations(src: &str) -> BTreeMap<String, Expectation> {
    use Basis::*;
    let list: &[(&str, bool, Basis)] = match src {
        "zmod:3" => &[
            ("uniquely_clean", false, Cited),
            ("uniquely_pi_clean", true, Cited),
        ],
        "zmod:4" => &[
            ("uniquely_clean", true, Computed),
            ("potent", false, Computed),
        ],
        "zmod:6" => &[("abelian", true, Computed), ("potent", true, Computed)],
        "matrix:zmod:2:2" => &[
            ("uniquely_pi_clean", false, Computed),
            ("abelian", false, Computed),
            ("clean", true, Computed),
        ],
        "eqdiag:zmod:3:2" => &[("uniquely_pi_clean", true, Cited)],
        "eqdiag:zmod:2:2" => &[("commutative", true, Computed), ("local", true, Computed)],
        "zn-alpha:3" => &[
            ("uniquely_pi_clean", true, Cited),
            ("commutative", true, Cited),
        ],
        "ext:strict-upper:zmod:2:2" => &[("uniquely_pi_clean", true, Cited)],
        "paper:gf4-example" => &[
            ("uniquely_pi_clean", true, Cited),
            ("commutative", false, Cited),
            ("generalized_7_like", true, Cited),
        ],
        _ => &[],
    };
    list.iter()
        .map(|&(k, value, basis)| (k.to_string(), Expectation { value, basis }))
        .collect()
}

fn entry(ring: FiniteRing, provenance: String) -> RingCatalogEntry {
    let expected = expectations(&provenance);
    RingCatalogEntry {
        ring,
        provenance,
        expected,
    }
}

/// Sources derived from one ring: its J-quotient when J is nonzero, and
/// its corners at every nontrivial idempotent.
fn derived_sources(ring: &FiniteRing, src: &str) -> Vec<String> {
    let an = Analysis::new(ring);
    let mut out = Vec::new();
    if ring.order() > 1 && an.jacobson_radical().len() > 1 {
        out.push(format!("jquot:({src})"));
    }
    for &e in an.idempotent_list() {
        if e != ring.zero() && e != ring.one() {
            out.push(format!("corner:({src}):{e}"));
        }
    }
    out
}

fn table_key(r: &FiniteRing) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let t = r.to_tables();
    (t.add, t.mul)
}

/// Builds the catalog with every entry of order at most `cap`.
///
/// Derived entries whose tables coincide with an earlier entry are dropped.
pub fn build_catalog(cap: usize) -> Catalog {
    let build = |srcs: &[String]| -> Vec<(String, Result<FiniteRing, SourceError>)> {
        srcs.par_iter()
            .map(|s| (s.clone(), parse_source(s, cap)))
            .collect()
    };
    let mut skipped = Vec::new();
    let mut entries = Vec::new();
    for (src, res) in build(&default_catalog_sources()) {
        match res {
            Ok(r) => entries.push(entry(r, src)),
            Err(e) => skipped.push((src, e.to_string())),
        }
    }
    let mut seen: HashSet<_> = entries.iter().map(|e| table_key(&e.ring)).collect();
    let derived: Vec<String> = entries
        .par_iter()
        .map(|e| derived_sources(&e.ring, &e.provenance))
        .collect::<Vec<_>>()
        .concat();
    for (src, res) in build(&derived) {
        match res {
            Ok(r) => {
                if seen.insert(table_key(&r)) {
                    entries.push(entry(r, src));
                }
            }
            Err(e) => skipped.push((src, e.to_string())),
        }
    }
    Catalog { entries, skipped }
}

/// The default catalog: every base and derived entry of order at most 128.
pub fn default_catalog() -> Vec<RingCatalogEntry> {
    build_catalog(CATALOG_ORDER_CAP).entries
}
