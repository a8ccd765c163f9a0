use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use ringlab_core::constructors::{default_catalog, zmod, RingCatalogEntry};
use ringlab_core::ring::{validate_ring, RingError, RingTables, Side};
use ringlab_core::FiniteRing;

/// Full axiom scan with no early exit ordering shared with the validator.
fn satisfies_axioms(t: &RingTables) -> bool {
    let n = t.order;
    let (a, m) = (&t.add, &t.mul);
    let (z, o) = (t.zero, t.one);
    let group = (0..n).all(|x| a[z][x] == x && a[x][z] == x && (0..n).any(|y| a[x][y] == z))
        && (0..n).all(|x| (0..n).all(|y| a[x][y] == a[y][x]));
    let unital = (0..n).all(|x| m[o][x] == x && m[x][o] == x);
    group
        && unital
        && (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|w| {
                    a[a[x][y]][w] == a[x][a[y][w]]
                        && m[m[x][y]][w] == m[x][m[y][w]]
                        && m[x][a[y][w]] == a[m[x][y]][m[x][w]]
                        && m[a[y][w]][x] == a[m[y][x]][m[w][x]]
                })
            })
        })
}

/// The reported witness really breaks the named law in `t`.
fn witness_is_genuine(t: &RingTables, e: &RingError) -> bool {
    let (a, m) = (&t.add, &t.mul);
    match e {
        RingError::NonAssociativeMul { a: x, b: y, c: w } => m[m[*x][*y]][*w] != m[*x][m[*y][*w]],
        RingError::NotDistributive {
            side: Side::Left,
            a: x,
            b: y,
            c: w,
        } => m[*x][a[*y][*w]] != a[m[*x][*y]][m[*x][*w]],
        RingError::NotDistributive {
            side: Side::Right,
            a: x,
            b: y,
            c: w,
        } => m[a[*x][*y]][*w] != a[m[*x][*w]][m[*y][*w]],
        RingError::NoIdentity(o) => (0..t.order).any(|x| m[*o][x] != x || m[x][*o] != x),
        RingError::NotAbelianGroupUnderAdd { .. } => !satisfies_axioms(t),
        _ => false,
    }
}

fn corruption_runs(entry: &RingCatalogEntry, cases: u32) -> Result<(), String> {
    let base = entry.ring.to_tables();
    let n = base.order;
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (any::<bool>(), 0..n, 0..n, 0..n);
    runner
        .run(&strategy, |(in_mul, i, j, v)| {
            let mut t = base.clone();
            let table = if in_mul { &mut t.mul } else { &mut t.add };
            table[i][j] = v;
            match validate_ring(&t) {
                Ok(_) => prop_assert!(satisfies_axioms(&t), "accepted a broken table"),
                Err(e) => prop_assert!(witness_is_genuine(&t, &e), "bogus rejection {e}"),
            }
            Ok(())
        })
        .map_err(|e| format!("{}: {e}", entry.ring.label()))
}

#[test]
fn catalog_rings_validate() {
    for entry in default_catalog() {
        let t = entry.ring.to_tables();
        let again = validate_ring(&t).expect("catalog ring validates");
        assert!(again.same_tables(&entry.ring), "{}", entry.ring.label());
    }
}

#[test]
fn single_entry_corruptions_are_caught() {
    let catalog = default_catalog();
    let failures: Vec<String> = catalog
        .iter()
        .filter_map(|e| corruption_runs(e, 1000).err())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn z6_corruption_names_a_triple() {
    let mut t = zmod(6).unwrap().to_tables();
    let (two, three) = (2, 3);
    assert_eq!(t.mul[two][three], 0);
    t.mul[two][three] = 1;
    let e = validate_ring(&t).unwrap_err();
    assert!(matches!(
        e,
        RingError::NotDistributive { .. } | RingError::NonAssociativeMul { .. }
    ));
    assert!(witness_is_genuine(&t, &e));
}

fn small_rings() -> &'static [FiniteRing] {
    static RINGS: OnceLock<Vec<FiniteRing>> = OnceLock::new();
    RINGS.get_or_init(|| {
        default_catalog()
            .into_iter()
            .map(|e| e.ring)
            .filter(|r| r.order() <= 16)
            .collect()
    })
}

proptest! {
    #[test]
    fn pow_is_additive_in_the_exponent(idx in 0usize..1000, x in 0usize..16, i in 0u64..40, j in 0u64..40) {
        let rings = small_rings();
        let r = &rings[idx % rings.len()];
        let x = x % r.order();
        prop_assert_eq!(r.mul(r.pow(x, i), r.pow(x, j)), r.pow(x, i + j));
    }

    #[test]
    fn power_trails_stay_within_order(idx in 0usize..1000, x in 0usize..16) {
        let rings = small_rings();
        let r = &rings[idx % rings.len()];
        let x = x % r.order();
        let trail = r.power_trail(x);
        prop_assert!(trail.len() <= r.order());
        prop_assert!(trail.cycle_start < trail.len());
        for m in 1..=3 * r.order() {
            prop_assert_eq!(trail.power(m), r.pow(x, m as u64));
        }
    }

    #[test]
    fn json_round_trip(idx in 0usize..1000) {
        let rings = small_rings();
        let r = &rings[idx % rings.len()];
        let json = r.to_tables().to_json();
        let back = RingTables::from_json(&json).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(back.to_json(), json);
        prop_assert!(validate_ring(&back).unwrap().same_tables(r));
    }
}
