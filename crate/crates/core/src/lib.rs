//! Finite ring computations around uniquely clean and uniquely π-clean rings.
//!
//! Rings are dense addition and multiplication tables over `0..n`, validated
//! once and immutable afterwards. On top of that sit element classes
//! (units, idempotents, nilpotents, potents), two-sided ideals and the
//! radicals J(R), J*(R) and P(R), the clean-family predicates, a set of ring
//! constructors with a default catalog, and a harness that checks
//! characterization theorems ring by ring.
//!
//! ```
//! use ringlab_core::{parse_source, Analysis};
//! use ringlab_core::predicates::{clean_decompositions, is_uniquely_pi_clean};
//!
//! let z3 = parse_source("zmod:3", 64).unwrap();
//! let an = Analysis::new(&z3);
//! assert_eq!(clean_decompositions(&an, 2), vec![(0, 2), (1, 1)]);
//! assert!(is_uniquely_pi_clean(&an).holds);
//! ```

pub mod analysis;
pub mod constructors;
pub mod ideals;
pub mod predicates;
pub mod report;
pub mod ring;
pub mod source;
pub mod subsets;
pub mod theorems;
pub mod verify;

use thiserror::Error;

pub use analysis::{Analysis, LatticeCap};
pub use constructors::{ConstructError, RingCatalogEntry};
pub use ideals::{Ideal, SpectrumReport, StructureError};
pub use predicates::{CleanWitness, Decision};
pub use report::{PredicateVector, RingReport};
pub use ring::{validate_ring, Elem, FiniteRing, PowerTrail, RingError, RingTables, MAX_ORDER};
pub use source::{parse_source, SourceError};
pub use theorems::TheoremId;
pub use verify::{TheoremVerdict, VerifyConfig, VerifyError};

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Source(#[from] SourceError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
