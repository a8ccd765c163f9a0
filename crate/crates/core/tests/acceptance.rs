//! Exit criteria for the library, one line per criterion.
//!
//! Runs as a plain binary so every line is printed on each `cargo test`.
//! The process fails if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ringlab_core::analysis::LatticeCap;
use ringlab_core::constructors::{
    corner, default_catalog, ideal_extension, matrix_ring, paper_gf4_example,
    strict_upper_bimodule, zmod, RingCatalogEntry,
};
use ringlab_core::predicates as p;
use ringlab_core::verify::{extension_specs, verify, TheoremVerdict};
use ringlab_core::{Analysis, FiniteRing, VerifyConfig};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

// Independent oracles: direct table scans, no use of the analysis cache.

fn oracle_is_unit(r: &FiniteRing, x: usize) -> bool {
    r.elements()
        .any(|y| r.mul(x, y) == r.one() && r.mul(y, x) == r.one())
}

fn oracle_idempotents(r: &FiniteRing) -> Vec<usize> {
    r.elements().filter(|&e| r.mul(e, e) == e).collect()
}

fn oracle_abelian(r: &FiniteRing) -> bool {
    oracle_idempotents(r)
        .into_iter()
        .all(|e| r.elements().all(|x| r.mul(e, x) == r.mul(x, e)))
}

/// `x` with `1 - rx` invertible for every `r`.
fn oracle_jacobson(r: &FiniteRing) -> Vec<usize> {
    r.elements()
        .filter(|&x| {
            r.elements()
                .all(|y| oracle_is_unit(r, r.sub(r.one(), r.mul(y, x))))
        })
        .collect()
}

/// `x` with `x^m - 1` invertible for all `m >= 1`; powers repeat within `n + 1` steps.
fn oracle_radical_unit_set(r: &FiniteRing) -> Vec<usize> {
    r.elements()
        .filter(|&x| {
            let mut p = x;
            (1..=r.order() + 1).all(|_| {
                let ok = oracle_is_unit(r, r.sub(p, r.one()));
                p = r.mul(p, x);
                ok
            })
        })
        .collect()
}

fn upc(r: &FiniteRing) -> bool {
    p::is_uniquely_pi_clean(&Analysis::new(r)).holds
}

fn catalog() -> &'static [RingCatalogEntry] {
    use std::sync::OnceLock;
    static CATALOG: OnceLock<Vec<RingCatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(default_catalog)
}

fn run_suites(ids: &[&str]) -> (Vec<TheoremVerdict>, Duration, usize) {
    let cfg = VerifyConfig {
        suites: Some(ids.iter().map(|s| s.to_string()).collect()),
        ..VerifyConfig::default()
    };
    let t = Instant::now();
    let run = verify(&cfg).expect("suite ids are valid");
    (run.verdicts, t.elapsed(), run.catalog_size)
}

fn describe_disagreements(verdicts: &[TheoremVerdict]) -> Vec<String> {
    verdicts
        .iter()
        .flat_map(|v| {
            v.disagreements().map(move |row| {
                format!(
                    "{} on {} (lhs {}, rhs {}, witness {:?})",
                    v.theorem, row.ring, row.lhs, row.rhs, row.witness
                )
            })
        })
        .collect()
}

fn z3_classification() -> Outcome {
    let t = Instant::now();
    let z3 = zmod(3).unwrap();
    let an = Analysis::new(&z3);
    let two = z3.int(2);
    let decomps = p::clean_decompositions(&an, two);
    let uc = p::is_uniquely_clean(&an);
    let upc = p::is_uniquely_pi_clean(&an);
    let m = p::uniquely_pi_clean_exponent(&an, two);
    let elapsed = t.elapsed();

    // idempotents of Z/3 are 0 and 1, units 1 and 2: 2 = 0 + 2 = 1 + 1
    let expected = vec![(z3.int(0), z3.int(2)), (z3.int(1), z3.int(1))];
    let pass = decomps == expected
        && !uc.holds
        && uc.witness == Some(vec![two])
        && upc.holds
        && m == Some(2)
        && elapsed < Duration::from_millis(1);
    outcome(
        pass,
        format!(
            "Z/3: decompositions of 2 {decomps:?}, uniquely clean {}, uniquely pi-clean {} (m = {m:?}), {elapsed:?}",
            uc.holds, upc.holds
        ),
    )
}

fn inclusion_chain() -> Outcome {
    let find = |label: &str| catalog().iter().find(|e| e.ring.label() == label);
    let (Some(z3), Some(m2)) = (find("zmod:3"), find("matrix:zmod:2:2")) else {
        return outcome(false, "zmod:3 or matrix:zmod:2:2 missing from the catalog");
    };
    let a3 = Analysis::new(&z3.ring);
    let am = Analysis::new(&m2.ring);
    let z3_ok = p::is_uniquely_pi_clean(&a3).holds && !p::is_uniquely_clean(&a3).holds;
    let m2_ok = p::is_clean(&am).holds && !p::is_uniquely_pi_clean(&am).holds;
    outcome(
        z3_ok && m2_ok,
        format!("Z/3 uniquely pi-clean but not uniquely clean: {z3_ok}; M2(Z/2) clean but not uniquely pi-clean: {m2_ok}"),
    )
}

fn equivalence_suites() -> Outcome {
    let ids = [
        "T2.2", "T2.4", "C2.5", "T2.8", "T2.10", "T3.7", "T3.9", "T4.7-2", "T4.7-3", "C4.8",
        "T3.3", "C2.9", "C3.4",
    ];
    let (verdicts, elapsed, n) = run_suites(&ids);
    let bad = describe_disagreements(&verdicts);
    let rows: usize = verdicts.iter().map(|v| v.rows.len()).sum();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(120) && rows == ids.len() * n;
    let mut detail = format!("{} suites over {n} rings in {elapsed:.2?}", ids.len());
    if !bad.is_empty() {
        detail.push_str(&format!(
            "; {} disagreement(s): {}",
            bad.len(),
            bad.join("; ")
        ));
    }
    outcome(pass, detail)
}

fn finite_collapse() -> Outcome {
    let bad: Vec<&str> = catalog()
        .iter()
        .filter(|e| upc(&e.ring) != oracle_abelian(&e.ring))
        .map(|e| e.ring.label())
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "uniquely pi-clean = abelian on {} rings; exceptions {bad:?}",
            catalog().len()
        ),
    )
}

fn radical_equality() -> Outcome {
    let mut bad = Vec::new();
    for e in catalog() {
        let an = Analysis::with_cap(&e.ring, LatticeCap::default());
        let j = an.jacobson_radical().members();
        let ok = match (an.j_star(), an.prime_radical()) {
            (Ok(js), Ok(pr)) => {
                j == oracle_jacobson(&e.ring) && j == js.members() && j == pr.members()
            }
            _ => false,
        };
        if !ok {
            bad.push(e.ring.label().to_string());
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "J = J* = P on {} rings; exceptions {bad:?}",
            catalog().len()
        ),
    )
}

fn radical_unit_set_equation() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for e in catalog() {
        let an = Analysis::new(&e.ring);
        if !p::is_uniquely_pi_clean(&an).holds {
            continue;
        }
        checked += 1;
        let rus = p::radical_unit_set(&an);
        if rus != an.jacobson_radical().members() || rus != oracle_radical_unit_set(&e.ring) {
            bad.push(e.ring.label().to_string());
        }
    }
    let z4 = zmod(4).unwrap();
    let z4_set = p::radical_unit_set(&Analysis::new(&z4));
    let z4_ok = z4_set == vec![z4.int(0), z4.int(2)];
    outcome(
        bad.is_empty() && z4_ok,
        format!("{checked} uniquely pi-clean rings, exceptions {bad:?}; Z/4 set {z4_set:?}"),
    )
}

fn gf4_example() -> Outcome {
    let t = Instant::now();
    let r = paper_gf4_example().unwrap();
    let an = Analysis::new(&r);
    let power_law = r.elements().all(|a| {
        let a7 = r.pow(a, 7);
        a7 == a || (a7 == r.zero() && r.mul(a, a) == r.zero())
    });
    let seven_like = p::is_generalized_n_like(&an, 7).holds;
    // direct scan of (ab)^7 - ab^7 - a^7 b + ab over all 64 x 64 pairs
    let scan = r.elements().all(|a| {
        r.elements().all(|b| {
            let ab = r.mul(a, b);
            let t1 = r.sub(r.pow(ab, 7), r.mul(a, r.pow(b, 7)));
            let t2 = r.sub(t1, r.mul(r.pow(a, 7), b));
            r.add(t2, ab) == r.zero()
        })
    });
    let commutative = p::is_commutative(&an).holds;
    let pi_clean = p::is_uniquely_pi_clean(&an).holds;
    let elapsed = t.elapsed();
    let pass = r.order() == 64
        && power_law
        && seven_like
        && scan
        && !commutative
        && pi_clean
        && elapsed < Duration::from_secs(5);
    outcome(
        pass,
        format!(
            "order {}, power law {power_law}, 7-like {seven_like} (scan {scan}), commutative {commutative}, uniquely pi-clean {pi_clean}, {elapsed:.2?}",
            r.order()
        ),
    )
}

fn extension_harness() -> Outcome {
    let mut inconsistent = Vec::new();
    let mut mutations = 0;
    let z2 = zmod(2).unwrap();
    let example = strict_upper_bimodule(&z2, 2).unwrap();
    let example_ok = {
        let ext = ideal_extension(&example).unwrap();
        upc(&ext) && example.s_idempotent_free() && example.conditions().all()
    };
    for (role, spec) in extension_specs() {
        let ext = ideal_extension(&spec).unwrap();
        let lhs = upc(&ext) && spec.s_idempotent_free();
        let c = spec.conditions();
        let flags = [
            c.base_uniquely_pi_clean,
            c.idempotents_commute_with_s,
            c.s_quasi_invertible,
        ];
        let broken = flags.iter().filter(|f| !**f).count();
        let consistent = if role.starts_with("breaks") {
            mutations += 1;
            broken == 1 && !lhs && !c.all()
        } else {
            broken == 0 && lhs
        };
        if !consistent || lhs != c.all() {
            inconsistent.push(format!("{} ({role})", spec.label));
        }
    }
    let (verdicts, _, _) = run_suites(&["T4.1"]);
    let suite_ok = verdicts.iter().all(|v| v.overall);
    outcome(
        example_ok && suite_ok && mutations >= 3 && inconsistent.is_empty(),
        format!(
            "strict-upper example {example_ok}, {mutations} single-condition mutations, inconsistencies {inconsistent:?}"
        ),
    )
}

fn corner_quotient_closure() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for e in catalog() {
        let an = Analysis::new(&e.ring);
        if !p::is_uniquely_pi_clean(&an).holds {
            continue;
        }
        checked += 1;
        for idem in oracle_idempotents(&e.ring) {
            let c = corner(&e.ring, idem).unwrap();
            if !upc(&c) {
                bad.push(format!("{} corner at {idem}", e.ring.label()));
            }
        }
        let q = p::j_quotient(&an);
        let qa = Analysis::new(&q);
        let potent = q.elements().all(|x| {
            let t = q.power_trail(x);
            t.is_potent() && (2..=q.order() + 1).any(|k| q.pow(x, k as u64) == x)
        });
        if !(potent && p::is_potent_ring(&qa).holds && p::is_uniquely_pi_clean(&qa).holds) {
            bad.push(format!("{} quotient by J", e.ring.label()));
        }
    }
    outcome(
        bad.is_empty() && checked > 0,
        format!("{checked} uniquely pi-clean rings, exceptions {bad:?}"),
    )
}

fn implication_battery() -> Outcome {
    let ids = ["L2.1", "L4.3", "T4.4", "C4.9", "L4.6"];
    let (verdicts, _, n) = run_suites(&ids);
    let bad = describe_disagreements(&verdicts);
    let stray_witness = verdicts
        .iter()
        .flat_map(|v| &v.rows)
        .filter(|r| r.agree && r.witness.is_some())
        .count();
    // non-abelian rows fail the antecedents and carry no witness
    let m2 = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
    let m2_row_clean = verdicts
        .iter()
        .flat_map(|v| &v.rows)
        .filter(|r| r.ring == m2.label())
        .all(|r| r.witness.is_none());
    outcome(
        bad.is_empty() && stray_witness == 0 && m2_row_clean,
        format!(
            "{} implications over {n} rings; counterexamples {bad:?}; agreeing rows with witnesses {stray_witness}",
            ids.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Z/3 classification", z3_classification),
        ("inclusion-chain counterexamples", inclusion_chain),
        ("equivalence suites", equivalence_suites),
        ("finite-scale collapse", finite_collapse),
        ("radical triple equality", radical_equality),
        ("radical unit set equation", radical_unit_set_equation),
        ("64-element GF(4) example", gf4_example),
        ("ideal extension harness", extension_harness),
        ("corner and quotient closure", corner_quotient_closure),
        ("implication battery", implication_battery),
    ];
    // warm the shared catalog so per-criterion timings exclude it
    let _ = catalog();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
