//! Right-hand sides of the characterization theorems, each composed from
//! the primitive predicates without consulting uniquely π-cleanness of `R`
//! itself.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::analysis::Analysis;
use crate::constructors;
use crate::ideals::{Ideal, StructureError};
use crate::predicates::{
    idempotents_lift_mod, idempotents_lift_uniquely_mod, is_abelian, is_exchange, is_periodic,
    is_potent_ring, is_uniquely_pi_clean, j_quotient, left_multiples, radical_unit_set,
    right_multiples, Decision,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T2_2,
    T2_4,
    C2_5,
    T2_8,
    C2_9,
    T2_10,
    C2_11,
    C2_12,
    T3_3,
    C3_4,
    T3_7,
    T3_9,
    C3_10Set,
    T4_7_2,
    T4_7_3,
    C4_8,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::T2_2,
        TheoremId::T2_4,
        TheoremId::C2_5,
        TheoremId::T2_8,
        TheoremId::C2_9,
        TheoremId::T2_10,
        TheoremId::C2_11,
        TheoremId::C2_12,
        TheoremId::T3_3,
        TheoremId::C3_4,
        TheoremId::T3_7,
        TheoremId::T3_9,
        TheoremId::C3_10Set,
        TheoremId::T4_7_2,
        TheoremId::T4_7_3,
        TheoremId::C4_8,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::T2_2 => "T2.2",
            TheoremId::T2_4 => "T2.4",
            TheoremId::C2_5 => "C2.5",
            TheoremId::T2_8 => "T2.8",
            TheoremId::C2_9 => "C2.9",
            TheoremId::T2_10 => "T2.10",
            TheoremId::C2_11 => "C2.11",
            TheoremId::C2_12 => "C2.12",
            TheoremId::T3_3 => "T3.3",
            TheoremId::C3_4 => "C3.4",
            TheoremId::T3_7 => "T3.7",
            TheoremId::T3_9 => "T3.9",
            TheoremId::C3_10Set => "C3.10-set",
            TheoremId::T4_7_2 => "T4.7-2",
            TheoremId::T4_7_3 => "T4.7-3",
            TheoremId::C4_8 => "C4.8",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem id '{0}'")]
pub struct UnknownTheorem(pub String);

/// Canonical spelling of a suite id: upper case, `(k)` written as `-k`.
pub fn canonical_id(s: &str) -> String {
    let mut out = s
        .trim()
        .to_ascii_uppercase()
        .replace('(', "-")
        .replace(')', "");
    if out.ends_with("-SET") {
        out.truncate(out.len() - 4);
        out.push_str("-set");
    }
    out
}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c = canonical_id(s);
        let c = if c == "C3.10" {
            "C3.10-set".to_string()
        } else {
            c
        };
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == c)
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Holds when the two sorted sets agree; otherwise the smallest element of
/// their symmetric difference.
pub fn same_set(a: &[usize], b: &[usize]) -> Decision {
    let mut i = 0;
    let mut j = 0;
    let mut diff = None;
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(&x), Some(&y)) => {
                diff = Some(x.min(y));
                break;
            }
            (Some(&x), None) | (None, Some(&x)) => {
                diff = Some(x);
                break;
            }
            (None, None) => unreachable!(),
        }
    }
    match diff {
        Some(x) => Decision::no(vec![x]),
        None => Decision::yes(),
    }
}

/// Every `a` has a distinct power `p` with exactly one idempotent `e`
/// such that `p - e` lies in `ideal`.
pub fn unique_idempotent_mod(an: &Analysis, ideal: &Ideal) -> Decision {
    let r = an.ring();
    Decision::forall(r.elements(), |a| {
        an.trail(a).powers.iter().any(|&p| {
            an.idempotent_list()
                .iter()
                .filter(|&&e| ideal.contains(r.sub(p, e)))
                .count()
                == 1
        })
    })
}

/// Every `a` has a distinct power `p` and a central idempotent `e` with
/// `p - e` in `ideal`.
pub fn central_idempotent_mod(an: &Analysis, ideal: &Ideal) -> Decision {
    let r = an.ring();
    let central: Vec<usize> = an
        .idempotent_list()
        .iter()
        .copied()
        .filter(|&e| an.is_central(e))
        .collect();
    Decision::forall(r.elements(), |a| {
        an.trail(a)
            .powers
            .iter()
            .any(|&p| central.iter().any(|&e| ideal.contains(r.sub(p, e))))
    })
}

/// For every `a` some distinct power `p` admits exactly one idempotent `e`
/// in `pR` (or `Rp`) with `1 - e` in `(1 - p)R` (or `R(1 - p)`).
fn unique_exchange_idempotent(an: &Analysis, left: bool) -> Decision {
    let r = an.ring();
    let multiples = |x| {
        if left {
            left_multiples(r, x)
        } else {
            right_multiples(r, x)
        }
    };
    Decision::forall(r.elements(), |a| {
        an.trail(a).powers.iter().any(|&p| {
            let pr = multiples(p);
            let qr = multiples(r.sub(r.one(), p));
            an.idempotent_list()
                .iter()
                .filter(|&&e| pr.contains(e) && qr.contains(r.sub(r.one(), e)))
                .count()
                == 1
        })
    })
}

fn members_where(an: &Analysis, f: impl Fn(usize) -> bool) -> Vec<usize> {
    an.ring().elements().filter(|&x| f(x)).collect()
}

/// Evaluates the right-hand condition list of `id` on `R`.
pub fn characterization(an: &Analysis, id: TheoremId) -> Result<Decision, StructureError> {
    let r = an.ring();
    let j = an.jacobson_radical();
    Ok(match id {
        TheoremId::T2_2 => is_abelian(an).and(|| idempotents_lift_mod(an, j)).and(|| {
            let q = j_quotient(an);
            let qa = Analysis::with_cap(&q, an.cap());
            is_uniquely_pi_clean(&qa)
        }),
        TheoremId::T2_4 => is_abelian(an).and(|| unique_exchange_idempotent(an, false)),
        TheoremId::C2_5 => is_abelian(an).and(|| unique_exchange_idempotent(an, true)),
        TheoremId::T2_8 => central_idempotent_mod(an, j),
        TheoremId::C2_9 => is_uniquely_pi_clean(an).and(|| {
            let target = members_where(an, |x| an.is_unit(r.sub(x, r.one())));
            same_set(&j.members(), &target)
        }),
        TheoremId::T2_10 => {
            unique_idempotent_mod(an, j).and(|| same_set(&j.members(), &radical_unit_set(an)))
        }
        TheoremId::C2_11 => unique_idempotent_mod(an, j)
            .and(|| Decision::forall(r.elements(), |x| !an.is_nilpotent(x) || j.contains(x))),
        TheoremId::C2_12 => {
            let target = members_where(an, |x| {
                an.trail(x)
                    .powers
                    .iter()
                    .any(|&p| j.contains(r.sub(p, r.one())))
            });
            same_set(&an.units().members, &target)
        }
        TheoremId::T3_3 => {
            let spec = an.j_spec()?;
            let lifts = is_abelian(an).and(|| idempotents_lift_mod(an, j));
            if !lifts.holds {
                return Ok(lifts);
            }
            for p in &spec {
                if !an.quotient_is_torsion(p)? {
                    return Ok(Decision::no(p.members()));
                }
            }
            Decision::yes()
        }
        TheoremId::C3_4 => {
            let upc = is_uniquely_pi_clean(an);
            if !upc.holds {
                return Ok(upc);
            }
            match an.maximal_ideals()?.into_iter().find(|m| m.index() != 2) {
                Some(m) => Decision::no(m.members()),
                None => Decision::yes(),
            }
        }
        TheoremId::T3_7 => {
            let js = an.j_star()?;
            is_exchange(an)
                .and(|| {
                    let q = constructors::quotient(r, &js).expect("J* is an ideal");
                    is_potent_ring(&Analysis::with_cap(&q, an.cap()))
                })
                .and(|| idempotents_lift_uniquely_mod(an, &js))
        }
        TheoremId::T3_9 => {
            let js = an.j_star()?;
            unique_idempotent_mod(an, &js).and(|| same_set(&js.members(), &radical_unit_set(an)))
        }
        TheoremId::C3_10Set => {
            let p = an.prime_radical()?;
            same_set(&p.members(), &radical_unit_set(an))
        }
        TheoremId::T4_7_2 => is_abelian(an).and(|| is_periodic(an)),
        TheoremId::T4_7_3 => unique_idempotent_mod(an, &an.prime_radical()?),
        TheoremId::C4_8 => central_idempotent_mod(an, &an.prime_radical()?),
    })
}
