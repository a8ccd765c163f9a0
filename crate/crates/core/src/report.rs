//! Per-ring predicate vectors and analysis reports.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::analysis::Analysis;
use crate::ideals::{SpectrumReport, StructureError};
use crate::predicates::{self as p, Decision};
use crate::subsets::ElemClass;

/// Predicate names in report and CSV column order.
pub const PREDICATE_NAMES: [&str; 24] = [
    "clean",
    "uniquely_clean",
    "uniquely_pi_clean",
    "strongly_clean",
    "exchange",
    "abelian",
    "commutative",
    "potent",
    "periodic",
    "boolean",
    "local",
    "strongly_pi_regular",
    "potently_j_clean",
    "uniquely_nil_clean_powers",
    "j_is_nil",
    "idempotents_lift_mod_j",
    "generalized_2_like",
    "generalized_3_like",
    "generalized_4_like",
    "generalized_5_like",
    "generalized_6_like",
    "generalized_7_like",
    "generalized_8_like",
    "generalized_9_like",
];

/// Evaluates one named ring predicate.
pub fn evaluate(an: &Analysis, name: &str) -> Option<Decision> {
    if let Some(n) = name
        .strip_prefix("generalized_")
        .and_then(|s| s.strip_suffix("_like"))
        .and_then(|s| s.parse::<usize>().ok())
    {
        return (n >= 2).then(|| p::is_generalized_n_like(an, n));
    }
    Some(match name {
        "clean" => p::is_clean(an),
        "uniquely_clean" => p::is_uniquely_clean(an),
        "uniquely_pi_clean" => p::is_uniquely_pi_clean(an),
        "strongly_clean" => p::is_strongly_clean(an),
        "exchange" => p::is_exchange(an),
        "abelian" => p::is_abelian(an),
        "commutative" => p::is_commutative(an),
        "potent" => p::is_potent_ring(an),
        "periodic" => p::is_periodic(an),
        "boolean" => p::is_boolean(an),
        "local" => p::is_local(an),
        "strongly_pi_regular" => p::is_strongly_pi_regular(an),
        "potently_j_clean" => p::is_potently_j_clean(an),
        "uniquely_nil_clean_powers" => p::uniquely_nil_clean_powers(an),
        "j_is_nil" => p::j_is_nil(an),
        "idempotents_lift_mod_j" => p::idempotents_lift_mod(an, an.jacobson_radical()),
        _ => return None,
    })
}

/// Every ring predicate of one ring, with failure witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateVector {
    pub ring: String,
    pub values: Vec<(&'static str, Decision)>,
}

impl PredicateVector {
    pub fn compute(an: &Analysis) -> PredicateVector {
        let values = PREDICATE_NAMES
            .iter()
            .map(|&n| (n, evaluate(an, n).expect("known predicate")))
            .collect();
        PredicateVector {
            ring: an.ring().label().to_string(),
            values,
        }
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.decision(name).map(|d| d.holds)
    }

    pub fn decision(&self, name: &str) -> Option<&Decision> {
        self.values.iter().find(|(n, _)| *n == name).map(|(_, d)| d)
    }

    /// Re-evaluates every stored value and compares.
    pub fn recheck(&self, an: &Analysis) -> bool {
        self.values
            .iter()
            .all(|(n, d)| evaluate(an, n).as_ref() == Some(d))
    }

    pub fn csv_header() -> String {
        let mut s = String::from("ring");
        for n in PREDICATE_NAMES {
            s.push(',');
            s.push_str(n);
        }
        s
    }

    pub fn csv_row(&self) -> String {
        let mut s = csv_field(&self.ring);
        for (_, d) in &self.values {
            s.push(',');
            s.push_str(if d.holds { "true" } else { "false" });
        }
        s
    }

    /// Header plus one row per vector, newline terminated.
    pub fn to_csv(vectors: &[PredicateVector]) -> String {
        let mut out = Self::csv_header();
        out.push('\n');
        for v in vectors {
            out.push_str(&v.csv_row());
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Serialize for PredicateVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("ring", &self.ring)?;
        for (n, d) in &self.values {
            m.serialize_entry(n, &d.holds)?;
        }
        let witnesses: std::collections::BTreeMap<&str, &Vec<usize>> = self
            .values
            .iter()
            .filter_map(|(n, d)| d.witness.as_ref().map(|w| (*n, w)))
            .collect();
        m.serialize_entry("witnesses", &witnesses)?;
        m.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassSizes {
    pub units: usize,
    pub idempotents: usize,
    pub central_idempotents: usize,
    pub nilpotents: usize,
    pub potents: usize,
    pub central_elements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Radicals {
    pub jacobson: Vec<usize>,
    pub j_star: Vec<usize>,
    pub prime: Vec<usize>,
    pub radical_unit_set: Vec<usize>,
}

/// Everything `analyze` prints for one ring.
#[derive(Debug, Clone, Serialize)]
pub struct RingReport {
    pub label: String,
    pub order: usize,
    pub classes: ClassSizes,
    pub units: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub nilpotents: Vec<usize>,
    pub radicals: Radicals,
    pub spectrum: SpectrumReport,
    pub predicates: PredicateVector,
    /// `element_names[i]` is the structured form of element `i`.
    pub element_names: Vec<String>,
}

impl RingReport {
    pub fn build(an: &Analysis) -> Result<RingReport, StructureError> {
        let r = an.ring();
        let sizes = |c: ElemClass| c.len();
        Ok(RingReport {
            label: r.label().to_string(),
            order: r.order(),
            classes: ClassSizes {
                units: sizes(an.units()),
                idempotents: sizes(an.idempotents()),
                central_idempotents: sizes(an.central_idempotents()),
                nilpotents: sizes(an.nilpotents()),
                potents: sizes(an.potents()),
                central_elements: sizes(an.central_elements()),
            },
            units: an.units().members,
            idempotents: an.idempotents().members,
            nilpotents: an.nilpotents().members,
            radicals: Radicals {
                jacobson: an.jacobson_radical().members(),
                j_star: an.j_star()?.members(),
                prime: an.prime_radical()?.members(),
                radical_unit_set: p::radical_unit_set(an),
            },
            spectrum: an.spectrum()?,
            predicates: PredicateVector::compute(an),
            element_names: r.elements().map(|x| r.element_name(x)).collect(),
        })
    }

    fn name(&self, x: usize) -> String {
        let n = &self.element_names[x];
        if *n == x.to_string() {
            n.clone()
        } else {
            format!("{x} {n}")
        }
    }

    fn set(&self, xs: &[usize]) -> String {
        let parts: Vec<String> = xs.iter().map(|&x| self.name(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Human-readable rendering; witnesses show index and structured form.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ring {} (order {})", self.label, self.order);
        let c = &self.classes;
        let _ = writeln!(
            s,
            "classes: units {}, idempotents {} ({} central), nilpotents {}, potents {}, center {}",
            c.units,
            c.idempotents,
            c.central_idempotents,
            c.nilpotents,
            c.potents,
            c.central_elements
        );
        let _ = writeln!(s, "J(R)  = {}", self.set(&self.radicals.jacobson));
        let _ = writeln!(s, "J*(R) = {}", self.set(&self.radicals.j_star));
        let _ = writeln!(s, "P(R)  = {}", self.set(&self.radicals.prime));
        let max = self.spectrum.maximal().count();
        let primes = self.spectrum.prime().count();
        let _ = writeln!(
            s,
            "ideals: {} total, {} prime, {} maximal, {} in J-spec",
            self.spectrum.ideals.len(),
            primes,
            max,
            self.spectrum.j_spec().count()
        );
        let _ = writeln!(s, "predicates:");
        for (n, d) in &self.predicates.values {
            let _ = write!(s, "  {n:<26} {}", d.holds);
            if let Some(w) = &d.witness {
                let parts: Vec<String> = w.iter().map(|&x| self.name(x)).collect();
                let _ = write!(s, "  (witness: {})", parts.join("; "));
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{matrix_ring, zmod};

    #[test]
    fn z3_vector() {
        let z3 = zmod(3).unwrap();
        let an = Analysis::new(&z3);
        let v = PredicateVector::compute(&an);
        assert_eq!(v.get("uniquely_clean"), Some(false));
        assert_eq!(v.get("uniquely_pi_clean"), Some(true));
        assert!(v.recheck(&an));
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["uniquely_pi_clean"], true);
        assert_eq!(json["witnesses"]["uniquely_clean"], serde_json::json!([2]));
    }

    #[test]
    fn csv_projection() {
        let z4 = zmod(4).unwrap();
        let v = PredicateVector::compute(&Analysis::new(&z4));
        let csv = PredicateVector::to_csv(&[v]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap().split(',').count(), 25);
        assert!(lines.next().unwrap().starts_with("zmod:4,true,true"));
    }

    #[test]
    fn report_text_shows_structured_witness() {
        let m = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
        let an = Analysis::new(&m);
        let rep = RingReport::build(&an).unwrap();
        assert_eq!(rep.classes.units, 6);
        let text = rep.to_text();
        assert!(text.contains("abelian"));
        assert!(text.contains("[["));
    }
}
