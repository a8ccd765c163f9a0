//! Element-level and ring-level clean-family predicates.
//!
//! Every predicate is decided by exhaustive search over the tables. Exponent
//! searches range over the distinct powers of an element, which is enough
//! because every power `a^m` equals one of them.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::constructors;
use crate::ideals::{is_ideal, Ideal};
use crate::ring::FiniteRing;

/// Outcome of a ring-level predicate. A false outcome carries the
/// smallest-index element (or pair) that fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl Decision {
    pub fn yes() -> Decision {
        Decision {
            holds: true,
            witness: None,
        }
    }

    pub fn no(witness: Vec<usize>) -> Decision {
        Decision {
            holds: false,
            witness: Some(witness),
        }
    }

    pub fn from_bool(holds: bool) -> Decision {
        Decision {
            holds,
            witness: None,
        }
    }

    /// Holds when `pred` holds for every item; otherwise the first failure.
    pub fn forall(
        items: impl IntoIterator<Item = usize>,
        mut pred: impl FnMut(usize) -> bool,
    ) -> Decision {
        match items.into_iter().find(|&x| !pred(x)) {
            Some(x) => Decision::no(vec![x]),
            None => Decision::yes(),
        }
    }

    /// Like [`Decision::forall`] over ordered pairs.
    pub fn forall_pairs(n: usize, mut pred: impl FnMut(usize, usize) -> bool) -> Decision {
        for a in 0..n {
            for b in 0..n {
                if !pred(a, b) {
                    return Decision::no(vec![a, b]);
                }
            }
        }
        Decision::yes()
    }

    /// Short-circuiting conjunction; the first failing part supplies the witness.
    pub fn and(self, next: impl FnOnce() -> Decision) -> Decision {
        if self.holds {
            next()
        } else {
            self
        }
    }
}

/// Which class the complement of a decomposition lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    /// complement is a unit
    Clean,
    /// complement is nilpotent
    NilClean,
    /// complement lies in J(R)
    JClean,
    /// complement lies in P(R)
    PClean,
}

/// `target^exponent = idempotent + complement`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CleanWitness {
    pub target: usize,
    pub exponent: usize,
    pub idempotent: usize,
    pub complement: usize,
    pub kind: WitnessKind,
}

impl CleanWitness {
    /// Re-checks the decomposition against the tables.
    pub fn check(&self, an: &Analysis) -> bool {
        let r = an.ring();
        let power = r.pow(self.target, self.exponent as u64);
        let in_class = match self.kind {
            WitnessKind::Clean => an.is_unit(self.complement),
            WitnessKind::NilClean => an.is_nilpotent(self.complement),
            WitnessKind::JClean => an.jacobson_radical().contains(self.complement),
            WitnessKind::PClean => an
                .prime_radical()
                .map(|p| p.contains(self.complement))
                .unwrap_or(false),
        };
        self.exponent >= 1
            && an.is_idempotent(self.idempotent)
            && r.add(self.idempotent, self.complement) == power
            && in_class
    }
}

/// `{x r : r in R}` as a bitset.
pub fn right_multiples(r: &FiniteRing, x: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(r.order());
    for s in r.elements() {
        b.insert(r.mul(x, s));
    }
    b
}

/// `{r x : r in R}` as a bitset.
pub fn left_multiples(r: &FiniteRing, x: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(r.order());
    for s in r.elements() {
        b.insert(r.mul(s, x));
    }
    b
}

/// All pairs `(e, u)` with `e` idempotent, `u` a unit and `e + u = a`,
/// ordered by `e`.
pub fn clean_decompositions(an: &Analysis, a: usize) -> Vec<(usize, usize)> {
    let r = an.ring();
    an.idempotent_list()
        .iter()
        .map(|&e| (e, r.sub(a, e)))
        .filter(|&(_, u)| an.is_unit(u))
        .collect()
}

fn decomposition_count(an: &Analysis, a: usize) -> usize {
    let r = an.ring();
    an.idempotent_list()
        .iter()
        .filter(|&&e| an.is_unit(r.sub(a, e)))
        .count()
}

pub fn is_uniquely_clean_element(an: &Analysis, a: usize) -> bool {
    decomposition_count(an, a) == 1
}

/// Smallest `m` for which `a^m` is uniquely clean.
pub fn uniquely_pi_clean_exponent(an: &Analysis, a: usize) -> Option<usize> {
    an.trail(a)
        .exponents()
        .find(|&(_, p)| decomposition_count(an, p) == 1)
        .map(|(m, _)| m)
}

pub fn pi_clean_witness(an: &Analysis, a: usize) -> Option<CleanWitness> {
    let m = uniquely_pi_clean_exponent(an, a)?;
    let p = an.trail(a).power(m);
    let (e, u) = clean_decompositions(an, p)[0];
    Some(CleanWitness {
        target: a,
        exponent: m,
        idempotent: e,
        complement: u,
        kind: WitnessKind::Clean,
    })
}

pub fn is_uniquely_pi_clean(an: &Analysis) -> Decision {
    Decision::forall(an.ring().elements(), |a| {
        uniquely_pi_clean_exponent(an, a).is_some()
    })
}

pub fn is_clean(an: &Analysis) -> Decision {
    Decision::forall(an.ring().elements(), |a| decomposition_count(an, a) >= 1)
}

pub fn is_uniquely_clean(an: &Analysis) -> Decision {
    Decision::forall(an.ring().elements(), |a| decomposition_count(an, a) == 1)
}

/// Every `a` is `e + u` with `ea = ae`.
pub fn is_strongly_clean(an: &Analysis) -> Decision {
    let r = an.ring();
    Decision::forall(r.elements(), |a| {
        clean_decompositions(an, a)
            .iter()
            .any(|&(e, _)| r.mul(e, a) == r.mul(a, e))
    })
}

pub fn is_exchange(an: &Analysis) -> Decision {
    let r = an.ring();
    Decision::forall(r.elements(), |a| {
        let ar = right_multiples(r, a);
        let one_minus = right_multiples(r, r.sub(r.one(), a));
        an.idempotent_list()
            .iter()
            .any(|&e| ar.contains(e) && one_minus.contains(r.sub(r.one(), e)))
    })
}

/// Every idempotent is central; the witness is `(e, r)` with `er != re`.
pub fn is_abelian(an: &Analysis) -> Decision {
    let r = an.ring();
    for &e in an.idempotent_list() {
        if let Some(x) = r.elements().find(|&x| r.mul(e, x) != r.mul(x, e)) {
            return Decision::no(vec![e, x]);
        }
    }
    Decision::yes()
}

pub fn is_commutative(an: &Analysis) -> Decision {
    let r = an.ring();
    Decision::forall_pairs(r.order(), |a, b| a >= b || r.mul(a, b) == r.mul(b, a))
}

pub fn is_potent_ring(an: &Analysis) -> Decision {
    Decision::forall(an.ring().elements(), |a| an.is_potent_element(a))
}

/// Always true on a finite ring.
pub fn is_periodic(an: &Analysis) -> Decision {
    Decision::forall(an.ring().elements(), |a| {
        let (m, n) = an.trail(a).periodic_witness();
        m != n && an.ring().pow(a, m as u64) == an.ring().pow(a, n as u64)
    })
}

/// Distinct exponents `(m, n)` with `a^m = a^n`, one pair per element.
pub fn periodic_witnesses(an: &Analysis) -> Vec<(usize, usize)> {
    an.trails().iter().map(|t| t.periodic_witness()).collect()
}

pub fn is_boolean(an: &Analysis) -> Decision {
    Decision::forall(an.ring().elements(), |a| an.is_idempotent(a))
}

/// A nonzero ring whose non-units form an ideal.
pub fn is_local(an: &Analysis) -> Decision {
    let r = an.ring();
    if r.order() < 2 {
        return Decision::no(vec![]);
    }
    let non_units = an.bits_of(r.elements().filter(|&x| !an.is_unit(x)));
    Decision::from_bool(is_ideal(r, &non_units))
}

/// Every `a` has some `a^n` lying in `a^(n+1) R`.
pub fn is_strongly_pi_regular(an: &Analysis) -> Decision {
    let r = an.ring();
    Decision::forall(r.elements(), |a| {
        let t = an.trail(a);
        (1..=t.len()).any(|n| right_multiples(r, t.power(n + 1)).contains(t.power(n)))
    })
}

fn lifts_count(an: &Analysis, ideal: &Ideal, x: usize) -> usize {
    let r = an.ring();
    an.idempotent_list()
        .iter()
        .filter(|&&e| ideal.contains(r.sub(x, e)))
        .count()
}

fn idempotent_mod(r: &FiniteRing, ideal: &Ideal, x: usize) -> bool {
    ideal.contains(r.sub(r.mul(x, x), x))
}

/// Every `x` with `x^2 - x` in `I` is congruent mod `I` to an idempotent.
pub fn idempotents_lift_mod(an: &Analysis, ideal: &Ideal) -> Decision {
    let r = an.ring();
    Decision::forall(r.elements(), |x| {
        !idempotent_mod(r, ideal, x) || lifts_count(an, ideal, x) >= 1
    })
}

/// As [`idempotents_lift_mod`], with exactly one lifting idempotent.
pub fn idempotents_lift_uniquely_mod(an: &Analysis, ideal: &Ideal) -> Decision {
    let r = an.ring();
    Decision::forall(r.elements(), |x| {
        !idempotent_mod(r, ideal, x) || lifts_count(an, ideal, x) == 1
    })
}

/// `{x : x^m - 1 is a unit for every m}`, with `m` over the distinct powers.
pub fn radical_unit_set(an: &Analysis) -> Vec<usize> {
    let r = an.ring();
    r.elements()
        .filter(|&x| {
            an.trail(x)
                .powers
                .iter()
                .all(|&p| an.is_unit(r.sub(p, r.one())))
        })
        .collect()
}

/// Every `a` differs from some potent element by a member of J(R).
pub fn is_potently_j_clean(an: &Analysis) -> Decision {
    let r = an.ring();
    let j = an.jacobson_radical();
    let potents: Vec<usize> = r.elements().filter(|&p| an.is_potent_element(p)).collect();
    Decision::forall(r.elements(), |a| {
        potents.iter().any(|&p| j.contains(r.sub(a, p)))
    })
}

/// Exactly one idempotent `e` with `a - e` nilpotent.
pub fn is_uniquely_nil_clean_element(an: &Analysis, a: usize) -> bool {
    let r = an.ring();
    an.idempotent_list()
        .iter()
        .filter(|&&e| an.is_nilpotent(r.sub(a, e)))
        .count()
        == 1
}

/// Every `a` has a power that is uniquely nil clean.
pub fn uniquely_nil_clean_powers(an: &Analysis) -> Decision {
    Decision::forall(an.ring().elements(), |a| {
        an.trail(a)
            .powers
            .iter()
            .any(|&p| is_uniquely_nil_clean_element(an, p))
    })
}

pub fn nil_clean_witness(an: &Analysis, a: usize) -> Option<CleanWitness> {
    let r = an.ring();
    let (m, p) = an
        .trail(a)
        .exponents()
        .find(|&(_, p)| is_uniquely_nil_clean_element(an, p))?;
    let e = *an
        .idempotent_list()
        .iter()
        .find(|&&e| an.is_nilpotent(r.sub(p, e)))?;
    Some(CleanWitness {
        target: a,
        exponent: m,
        idempotent: e,
        complement: r.sub(p, e),
        kind: WitnessKind::NilClean,
    })
}

/// `(ab)^n - a b^n - a^n b + ab = 0` for all `a, b`.
pub fn is_generalized_n_like(an: &Analysis, n: usize) -> Decision {
    assert!(n >= 2, "generalized n-like needs n >= 2");
    let r = an.ring();
    let pow_n: Vec<usize> = r.elements().map(|x| an.trail(x).power(n)).collect();
    Decision::forall_pairs(r.order(), |a, b| {
        let ab = r.mul(a, b);
        let lhs = r.add(
            r.sub(r.sub(pow_n[ab], r.mul(a, pow_n[b])), r.mul(pow_n[a], b)),
            ab,
        );
        lhs == r.zero()
    })
}

/// J(R) consists of nilpotent elements.
pub fn j_is_nil(an: &Analysis) -> Decision {
    let j = an.jacobson_radical();
    Decision::forall(j.members(), |x| an.is_nilpotent(x))
}

/// `R/J(R)`.
pub fn j_quotient(an: &Analysis) -> FiniteRing {
    constructors::quotient(an.ring(), an.jacobson_radical())
        .expect("J(R) is an ideal")
        .with_label(format!("jquot:{}", an.ring().label()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_ring, paper_gf4_example, zmod};

    fn z(n: usize) -> FiniteRing {
        zmod(n).unwrap()
    }

    fn m2z2() -> FiniteRing {
        matrix_ring(&z(2), 2).unwrap()
    }

    #[test]
    fn decompositions_in_z3_and_z4() {
        let z3 = z(3);
        let an = Analysis::new(&z3);
        assert_eq!(clean_decompositions(&an, 2), vec![(0, 2), (1, 1)]);
        assert_eq!(clean_decompositions(&an, 1), vec![(0, 1)]);
        let z4 = z(4);
        let an = Analysis::new(&z4);
        assert_eq!(clean_decompositions(&an, 2), vec![(1, 1)]);
    }

    #[test]
    fn pi_clean_classification() {
        let z3 = z(3);
        let an = Analysis::new(&z3);
        assert!(is_uniquely_pi_clean(&an).holds);
        assert_eq!(uniquely_pi_clean_exponent(&an, 2), Some(2));
        assert!(!is_uniquely_clean(&an).holds);
        assert!(is_clean(&an).holds);
        let w = pi_clean_witness(&an, 2).unwrap();
        assert!(w.check(&an));

        let z4 = z(4);
        let an = Analysis::new(&z4);
        assert!(is_uniquely_clean(&an).holds);
        assert!(is_uniquely_pi_clean(&an).holds);

        let m = m2z2();
        let an = Analysis::new(&m);
        assert!(!is_uniquely_pi_clean(&an).holds);
        assert!(is_clean(&an).holds);
    }

    #[test]
    fn z6_basics() {
        let z6 = z(6);
        let an = Analysis::new(&z6);
        assert!(is_clean(&an).holds);
        assert!(is_strongly_clean(&an).holds);
        assert!(is_abelian(&an).holds);
        assert!(is_potent_ring(&an).holds);
        assert!(is_strongly_pi_regular(&an).holds);
        assert!(is_potently_j_clean(&an).holds);
        assert!(!is_uniquely_nil_clean_element(&an, 5));
    }

    #[test]
    fn z4_periodic_not_potent() {
        let z4 = z(4);
        let an = Analysis::new(&z4);
        let d = is_potent_ring(&an);
        assert_eq!(d, Decision::no(vec![2]));
        assert!(is_periodic(&an).holds);
        assert_eq!(periodic_witnesses(&an)[2], (2, 3));
        assert!(is_local(&an).holds);
        assert!(is_exchange(&an).holds);
        assert!(is_strongly_pi_regular(&an).holds);
        assert!(is_potently_j_clean(&an).holds);
        assert!(is_uniquely_nil_clean_element(&an, 2));
        assert_eq!(radical_unit_set(&an), vec![0, 2]);
    }

    #[test]
    fn m2z2_not_abelian() {
        let m = m2z2();
        let an = Analysis::new(&m);
        let d = is_abelian(&an);
        assert!(!d.holds);
        let w = d.witness.unwrap();
        assert!(an.is_idempotent(w[0]));
        assert_ne!(m.mul(w[0], w[1]), m.mul(w[1], w[0]));
        assert!(is_exchange(&an).holds);
        assert!(!is_local(&an).holds);
    }

    #[test]
    fn lifting_in_z4() {
        let z4 = z(4);
        let an = Analysis::new(&z4);
        let j = an.jacobson_radical().clone();
        assert!(idempotents_lift_mod(&an, &j).holds);
        assert!(idempotents_lift_uniquely_mod(&an, &j).holds);
        let zero = Ideal::zero(&z4);
        assert!(idempotents_lift_uniquely_mod(&an, &zero).holds);
    }

    #[test]
    fn radical_unit_sets() {
        for n in [3, 6] {
            let r = z(n);
            let an = Analysis::new(&r);
            assert_eq!(radical_unit_set(&an), vec![0]);
        }
    }

    #[test]
    fn generalized_n_like() {
        let z2 = z(2);
        let an = Analysis::new(&z2);
        for n in 2..=9 {
            assert!(is_generalized_n_like(&an, n).holds);
        }
        let g = paper_gf4_example().unwrap();
        let an = Analysis::new(&g);
        assert!(is_generalized_n_like(&an, 7).holds);
    }

    #[test]
    fn boolean_rings() {
        let z2 = z(2);
        assert!(is_boolean(&Analysis::new(&z2)).holds);
        let z3 = z(3);
        assert!(!is_boolean(&Analysis::new(&z3)).holds);
    }

    #[test]
    fn nil_clean_witness_checks() {
        let z8 = z(8);
        let an = Analysis::new(&z8);
        for a in z8.elements() {
            assert!(nil_clean_witness(&an, a).unwrap().check(&an));
        }
        assert!(j_is_nil(&an).holds);
        assert!(j_quotient(&an).same_tables(&z(2)));
    }
}
