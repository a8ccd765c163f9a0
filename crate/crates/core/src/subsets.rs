//! Distinguished element classes: units, idempotents, nilpotents, potents
//! and the center.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Units,
    Idempotents,
    CentralIdempotents,
    Nilpotents,
    Potents,
    CentralElements,
}

/// A sorted, deduplicated set of elements sharing a defining property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElemClass {
    pub kind: ClassKind,
    pub members: Vec<usize>,
}

impl ElemClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Re-checks the defining equation of every member.
    pub fn recheck(&self, ring: &FiniteRing) -> bool {
        let sorted = self.members.windows(2).all(|w| w[0] < w[1]);
        sorted
            && self.members.iter().all(|&x| match self.kind {
                ClassKind::Units => ring
                    .elements()
                    .any(|y| ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one()),
                ClassKind::Idempotents => ring.mul(x, x) == x,
                ClassKind::CentralIdempotents => {
                    ring.mul(x, x) == x && ring.elements().all(|r| ring.mul(x, r) == ring.mul(r, x))
                }
                ClassKind::Nilpotents => ring.power_trail(x).reaches(ring.zero()),
                ClassKind::Potents => (2..=ring.order() as u64 + 1).any(|k| ring.pow(x, k) == x),
                ClassKind::CentralElements => {
                    ring.elements().all(|r| ring.mul(x, r) == ring.mul(r, x))
                }
            })
    }
}

impl Analysis<'_> {
    /// Two-sided inverses; `None` for non-units.
    pub fn inverses(&self) -> &[Option<usize>] {
        self.inverses.get_or_init(|| {
            let r = self.ring();
            r.elements()
                .map(|x| {
                    r.elements()
                        .find(|&y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
                })
                .collect()
        })
    }

    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.inverses()[x]
    }

    pub fn unit_bits(&self) -> &FixedBitSet {
        self.unit_bits.get_or_init(|| {
            self.bits_of(
                self.inverses()
                    .iter()
                    .enumerate()
                    .filter_map(|(x, inv)| inv.map(|_| x)),
            )
        })
    }

    #[inline]
    pub fn is_unit(&self, x: usize) -> bool {
        self.unit_bits().contains(x)
    }

    pub fn idempotent_list(&self) -> &[usize] {
        self.idempotents.get_or_init(|| {
            let r = self.ring();
            r.elements().filter(|&x| r.mul(x, x) == x).collect()
        })
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.ring().mul(x, x) == x
    }

    pub fn central_bits(&self) -> &FixedBitSet {
        self.central_bits.get_or_init(|| {
            let r = self.ring();
            self.bits_of(
                r.elements()
                    .filter(|&x| r.elements().all(|y| r.mul(x, y) == r.mul(y, x))),
            )
        })
    }

    #[inline]
    pub fn is_central(&self, x: usize) -> bool {
        self.central_bits().contains(x)
    }

    pub fn nilpotent_bits(&self) -> &FixedBitSet {
        self.nilpotent_bits.get_or_init(|| {
            let zero = self.ring().zero();
            self.bits_of(
                self.ring()
                    .elements()
                    .filter(|&x| self.trail(x).reaches(zero)),
            )
        })
    }

    #[inline]
    pub fn is_nilpotent(&self, x: usize) -> bool {
        self.nilpotent_bits().contains(x)
    }

    pub fn is_potent_element(&self, x: usize) -> bool {
        self.trail(x).is_potent()
    }

    pub fn units(&self) -> ElemClass {
        ElemClass {
            kind: ClassKind::Units,
            members: self.unit_bits().ones().collect(),
        }
    }

    pub fn idempotents(&self) -> ElemClass {
        ElemClass {
            kind: ClassKind::Idempotents,
            members: self.idempotent_list().to_vec(),
        }
    }

    pub fn central_idempotents(&self) -> ElemClass {
        ElemClass {
            kind: ClassKind::CentralIdempotents,
            members: self
                .idempotent_list()
                .iter()
                .copied()
                .filter(|&e| self.is_central(e))
                .collect(),
        }
    }

    pub fn nilpotents(&self) -> ElemClass {
        ElemClass {
            kind: ClassKind::Nilpotents,
            members: self.nilpotent_bits().ones().collect(),
        }
    }

    pub fn potents(&self) -> ElemClass {
        ElemClass {
            kind: ClassKind::Potents,
            members: self
                .ring()
                .elements()
                .filter(|&x| self.is_potent_element(x))
                .collect(),
        }
    }

    pub fn central_elements(&self) -> ElemClass {
        ElemClass {
            kind: ClassKind::CentralElements,
            members: self.central_bits().ones().collect(),
        }
    }
}

pub fn units(ring: &FiniteRing) -> ElemClass {
    Analysis::new(ring).units()
}

pub fn idempotents(ring: &FiniteRing) -> ElemClass {
    Analysis::new(ring).idempotents()
}

pub fn central_idempotents(ring: &FiniteRing) -> ElemClass {
    Analysis::new(ring).central_idempotents()
}

pub fn nilpotents(ring: &FiniteRing) -> ElemClass {
    Analysis::new(ring).nilpotents()
}

pub fn potents(ring: &FiniteRing) -> ElemClass {
    Analysis::new(ring).potents()
}

pub fn central_elements(ring: &FiniteRing) -> ElemClass {
    Analysis::new(ring).central_elements()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_ring, zmod};

    #[test]
    fn unit_examples() {
        assert_eq!(units(&zmod(6).unwrap()).members, vec![1, 5]);
        assert_eq!(units(&zmod(4).unwrap()).members, vec![1, 3]);
        let m2 = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
        assert_eq!(units(&m2).len(), 6);
    }

    #[test]
    fn one_sided_inverse_suffices() {
        let m2 = matrix_ring(&zmod(3).unwrap(), 2).unwrap();
        let right: Vec<usize> = m2
            .elements()
            .filter(|&x| m2.elements().any(|y| m2.mul(x, y) == m2.one()))
            .collect();
        assert_eq!(right, units(&m2).members);
    }

    #[test]
    fn idempotent_examples() {
        let z6 = zmod(6).unwrap();
        assert_eq!(idempotents(&z6).members, vec![0, 1, 3, 4]);
        assert_eq!(central_idempotents(&z6).members, vec![0, 1, 3, 4]);
        assert_eq!(idempotents(&zmod(4).unwrap()).members, vec![0, 1]);
        let m2 = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
        let an = Analysis::new(&m2);
        assert!(an.idempotents().len() > an.central_idempotents().len());
        assert_eq!(an.central_idempotents().members, vec![0, 1]);
    }

    #[test]
    fn nilpotent_and_potent_examples() {
        let z4 = zmod(4).unwrap();
        assert_eq!(nilpotents(&z4).members, vec![0, 2]);
        assert_eq!(potents(&z4).members, vec![0, 1, 3]);
        assert_eq!(potents(&zmod(6).unwrap()).members, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(nilpotents(&zmod(3).unwrap()).members, vec![0]);
    }

    #[test]
    fn classes_recheck() {
        let m2 = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
        let an = Analysis::new(&m2);
        for class in [
            an.units(),
            an.idempotents(),
            an.central_idempotents(),
            an.nilpotents(),
            an.potents(),
            an.central_elements(),
        ] {
            assert!(class.recheck(&m2), "{:?}", class.kind);
        }
    }
}
