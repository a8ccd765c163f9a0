//! Per-ring memo cache shared by the radical, spectrum and predicate layers.

use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::ideals::{Ideal, Lattice, StructureError};
use crate::ring::{FiniteRing, PowerTrail};

/// Limits on ideal-lattice enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeCap {
    pub max_order: usize,
    pub max_ideals: usize,
}

impl Default for LatticeCap {
    fn default() -> Self {
        LatticeCap {
            max_order: 256,
            max_ideals: 100_000,
        }
    }
}

/// Lazily computed structure of one ring.
///
/// Every cache cell initializes at most once and may be read from several
/// threads at a time.
pub struct Analysis<'r> {
    ring: &'r FiniteRing,
    cap: LatticeCap,
    pub(crate) trails: OnceLock<Vec<PowerTrail>>,
    pub(crate) inverses: OnceLock<Vec<Option<usize>>>,
    pub(crate) unit_bits: OnceLock<FixedBitSet>,
    pub(crate) idempotents: OnceLock<Vec<usize>>,
    pub(crate) central_bits: OnceLock<FixedBitSet>,
    pub(crate) nilpotent_bits: OnceLock<FixedBitSet>,
    pub(crate) jacobson: OnceLock<Ideal>,
    pub(crate) lattice: OnceLock<Result<Lattice, StructureError>>,
}

impl<'r> Analysis<'r> {
    pub fn new(ring: &'r FiniteRing) -> Self {
        Self::with_cap(ring, LatticeCap::default())
    }

    pub fn with_cap(ring: &'r FiniteRing, cap: LatticeCap) -> Self {
        Analysis {
            ring,
            cap,
            trails: OnceLock::new(),
            inverses: OnceLock::new(),
            unit_bits: OnceLock::new(),
            idempotents: OnceLock::new(),
            central_bits: OnceLock::new(),
            nilpotent_bits: OnceLock::new(),
            jacobson: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &'r FiniteRing {
        self.ring
    }

    pub fn cap(&self) -> LatticeCap {
        self.cap
    }

    pub fn trails(&self) -> &[PowerTrail] {
        self.trails.get_or_init(|| {
            self.ring
                .elements()
                .map(|x| self.ring.power_trail(x))
                .collect()
        })
    }

    pub fn trail(&self, x: usize) -> &PowerTrail {
        &self.trails()[x]
    }

    /// `bits[x]` set when `x` lies in the set.
    pub(crate) fn bits_of(&self, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.ring.order());
        for x in members {
            b.insert(x);
        }
        b
    }
}
