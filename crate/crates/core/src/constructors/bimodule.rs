//! Ideal extensions `I(R; S)`: the additive group `R ⊕ S` with
//! `(r1, s1)(r2, s2) = (r1 r2, s1 s2 + r1 s2 + s1 r2)`.

use serde::Serialize;

use super::{check_order, from_elements, product, ConstructError};
use crate::analysis::Analysis;
use crate::ring::{FiniteRing, MAX_ORDER};

/// A unital ring `R` together with a (possibly non-unital) ring `S` that is
/// an `R`-`R`-bimodule compatible with its own multiplication.
#[derive(Debug, Clone)]
pub struct BimoduleSpec {
    pub label: String,
    pub base: FiniteRing,
    pub s_order: usize,
    pub s_zero: usize,
    pub s_add: Vec<Vec<usize>>,
    pub s_mul: Vec<Vec<usize>>,
    /// `left[r][s] = r·s`
    pub left: Vec<Vec<usize>>,
    /// `right[s][r] = s·r`
    pub right: Vec<Vec<usize>>,
    pub s_names: Vec<String>,
}

/// The three side conditions of the ideal-extension criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtensionConditions {
    pub base_uniquely_pi_clean: bool,
    pub idempotents_commute_with_s: bool,
    pub s_quasi_invertible: bool,
}

impl ExtensionConditions {
    pub fn all(&self) -> bool {
        self.base_uniquely_pi_clean && self.idempotents_commute_with_s && self.s_quasi_invertible
    }
}

fn violation(law: &str, witness: Vec<usize>) -> ConstructError {
    ConstructError::BimoduleLawViolation {
        law: law.to_string(),
        witness,
    }
}

impl BimoduleSpec {
    fn sa(&self, x: usize, y: usize) -> usize {
        self.s_add[x][y]
    }

    fn sm(&self, x: usize, y: usize) -> usize {
        self.s_mul[x][y]
    }

    fn shapes_ok(&self) -> bool {
        let (n, m) = (self.base.order(), self.s_order);
        let square = |t: &Vec<Vec<usize>>, rows: usize, cols: usize| {
            t.len() == rows
                && t.iter()
                    .all(|r| r.len() == cols && r.iter().all(|&v| v < m))
        };
        m > 0
            && self.s_zero < m
            && self.s_names.len() == m
            && square(&self.s_add, m, m)
            && square(&self.s_mul, m, m)
            && square(&self.left, n, m)
            && square(&self.right, m, n)
    }

    /// Checks the pseudo-ring axioms for `S`, biadditivity and associativity
    /// of both actions, unitality of the actions, and the three
    /// compatibility laws between the actions and the product of `S`.
    pub fn validate(&self) -> Result<(), ConstructError> {
        if !self.shapes_ok() {
            return Err(violation("table shapes", vec![]));
        }
        let r = &self.base;
        let m = self.s_order;
        let z = self.s_zero;
        let ss = 0..m;
        for x in ss.clone() {
            if self.sa(z, x) != x {
                return Err(violation("additive identity of S", vec![x]));
            }
            if !ss.clone().any(|y| self.sa(x, y) == z) {
                return Err(violation("additive inverse in S", vec![x]));
            }
            for y in ss.clone() {
                if self.sa(x, y) != self.sa(y, x) {
                    return Err(violation("commutativity of S", vec![x, y]));
                }
                for w in ss.clone() {
                    if self.sa(self.sa(x, y), w) != self.sa(x, self.sa(y, w)) {
                        return Err(violation("additive associativity of S", vec![x, y, w]));
                    }
                    if self.sm(self.sm(x, y), w) != self.sm(x, self.sm(y, w)) {
                        return Err(violation("associativity of S", vec![x, y, w]));
                    }
                    if self.sm(x, self.sa(y, w)) != self.sa(self.sm(x, y), self.sm(x, w))
                        || self.sm(self.sa(x, y), w) != self.sa(self.sm(x, w), self.sm(y, w))
                    {
                        return Err(violation("distributivity of S", vec![x, y, w]));
                    }
                }
            }
        }
        for s in ss.clone() {
            if self.left[r.one()][s] != s || self.right[s][r.one()] != s {
                return Err(violation("unital action", vec![s]));
            }
        }
        for a in r.elements() {
            for s in ss.clone() {
                for t in ss.clone() {
                    let st = self.sa(s, t);
                    if self.left[a][st] != self.sa(self.left[a][s], self.left[a][t]) {
                        return Err(violation("left action additive in S", vec![a, s, t]));
                    }
                    if self.right[st][a] != self.sa(self.right[s][a], self.right[t][a]) {
                        return Err(violation("right action additive in S", vec![a, s, t]));
                    }
                    let prod = self.sm(s, t);
                    if self.right[prod][a] != self.sm(s, self.right[t][a]) {
                        return Err(violation("(s1 s2) r = s1 (s2 r)", vec![s, t, a]));
                    }
                    if self.left[a][prod] != self.sm(self.left[a][s], t) {
                        return Err(violation("r (s1 s2) = (r s1) s2", vec![a, s, t]));
                    }
                    if self.sm(self.right[s][a], t) != self.sm(s, self.left[a][t]) {
                        return Err(violation("(s1 r) s2 = s1 (r s2)", vec![s, a, t]));
                    }
                }
                for b in r.elements() {
                    let ab = r.mul(a, b);
                    let apb = r.add(a, b);
                    if self.left[apb][s] != self.sa(self.left[a][s], self.left[b][s]) {
                        return Err(violation("left action additive in R", vec![a, b, s]));
                    }
                    if self.right[s][apb] != self.sa(self.right[s][a], self.right[s][b]) {
                        return Err(violation("right action additive in R", vec![a, b, s]));
                    }
                    if self.left[ab][s] != self.left[a][self.left[b][s]] {
                        return Err(violation("(r1 r2) s = r1 (r2 s)", vec![a, b, s]));
                    }
                    if self.right[s][ab] != self.right[self.right[s][a]][b] {
                        return Err(violation("s (r1 r2) = (s r1) r2", vec![a, b, s]));
                    }
                    if self.right[self.left[a][s]][b] != self.left[a][self.right[s][b]] {
                        return Err(violation("(r s) r' = r (s r')", vec![a, s, b]));
                    }
                }
            }
        }
        Ok(())
    }

    /// `S` has no nonzero idempotent.
    pub fn s_idempotent_free(&self) -> bool {
        (0..self.s_order).all(|s| s == self.s_zero || self.sm(s, s) != s)
    }

    pub fn conditions(&self) -> ExtensionConditions {
        let an = Analysis::new(&self.base);
        let m = self.s_order;
        let idempotents_commute_with_s = an
            .idempotent_list()
            .iter()
            .all(|&e| (0..m).all(|s| self.left[e][s] == self.right[s][e]));
        let s_quasi_invertible = (0..m).all(|s| {
            (0..m).any(|t| {
                self.sm(s, t) == self.sm(t, s)
                    && self.sa(self.sa(s, t), self.sm(s, t)) == self.s_zero
            })
        });
        ExtensionConditions {
            base_uniquely_pi_clean: crate::predicates::is_uniquely_pi_clean(&an).holds,
            idempotents_commute_with_s,
            s_quasi_invertible,
        }
    }
}

/// Materializes `I(R; S)` on pairs `(r, s)` ordered by `r` then `s`.
pub fn ideal_extension(spec: &BimoduleSpec) -> Result<FiniteRing, ConstructError> {
    spec.validate()?;
    let r = &spec.base;
    check_order(r.order() as u128 * spec.s_order as u128, MAX_ORDER)?;
    let elems: Vec<(usize, usize)> = r
        .elements()
        .flat_map(|a| (0..spec.s_order).map(move |s| (a, s)))
        .collect();
    from_elements(
        spec.label.clone(),
        &elems,
        &(r.zero(), spec.s_zero),
        &(r.one(), spec.s_zero),
        |x, y| (r.add(x.0, y.0), spec.sa(x.1, y.1)),
        |x, y| {
            let s = spec.sa(
                spec.sa(spec.sm(x.1, y.1), spec.left[x.0][y.1]),
                spec.right[x.1][y.0],
            );
            (r.mul(x.0, y.0), s)
        },
        |x| format!("({},{})", r.element_name(x.0), spec.s_names[x.1]),
    )
}

fn table(n: usize, m: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..m).map(|j| f(i, j)).collect()).collect()
}

/// `S = {0}`; the extension is `R` itself.
pub fn zero_bimodule(base: &FiniteRing) -> BimoduleSpec {
    let n = base.order();
    BimoduleSpec {
        label: format!("ext:zero:{}", base.label()),
        base: base.clone(),
        s_order: 1,
        s_zero: 0,
        s_add: vec![vec![0]],
        s_mul: vec![vec![0]],
        left: vec![vec![0]; n],
        right: vec![vec![0; n]],
        s_names: vec!["0".into()],
    }
}

/// `S` = strictly upper triangular `k×k` matrices over `R`, acted on by
/// scalar matrices `r·I`.
pub fn strict_upper_bimodule(base: &FiniteRing, k: usize) -> Result<BimoduleSpec, ConstructError> {
    if k < 2 {
        return Err(ConstructError::InvalidArgument(
            "strict upper bimodule needs k >= 2".into(),
        ));
    }
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let q = base.order();
    let m = check_order((q as u128).pow(slots.len() as u32), MAX_ORDER)?;
    // element index = entries read as base-q digits, first slot most significant
    let decode = |mut i: usize| {
        let mut v = vec![0; slots.len()];
        for d in v.iter_mut().rev() {
            *d = i % q;
            i /= q;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().fold(0, |acc, &d| acc * q + d);
    let elems: Vec<Vec<usize>> = (0..m).map(decode).collect();
    let slot_of = |i: usize, j: usize| slots.iter().position(|&s| s == (i, j));
    let smul = |a: &[usize], b: &[usize]| {
        let mut out = vec![base.zero(); slots.len()];
        for (idx, &(i, j)) in slots.iter().enumerate() {
            let mut acc = base.zero();
            for l in i + 1..j {
                let (x, y) = (slot_of(i, l).unwrap(), slot_of(l, j).unwrap());
                acc = base.add(acc, base.mul(a[x], b[y]));
            }
            out[idx] = acc;
        }
        out
    };
    let names = elems
        .iter()
        .map(|v| {
            let entries: Vec<String> = v.iter().map(|&x| base.element_name(x)).collect();
            format!("<{}>", entries.join(","))
        })
        .collect();
    Ok(BimoduleSpec {
        label: format!("ext:strict-upper:{}:{k}", base.label()),
        base: base.clone(),
        s_order: m,
        s_zero: 0,
        s_add: table(m, m, |x, y| {
            let v: Vec<usize> = elems[x]
                .iter()
                .zip(&elems[y])
                .map(|(&a, &b)| base.add(a, b))
                .collect();
            encode(&v)
        }),
        s_mul: table(m, m, |x, y| encode(&smul(&elems[x], &elems[y]))),
        left: table(q, m, |r, s| {
            let v: Vec<usize> = elems[s].iter().map(|&a| base.mul(r, a)).collect();
            encode(&v)
        }),
        right: table(m, q, |s, r| {
            let v: Vec<usize> = elems[s].iter().map(|&a| base.mul(a, r)).collect();
            encode(&v)
        }),
        s_names: names,
    })
}

/// `S = R` as a bimodule over itself with zero multiplication; the
/// extension is the trivial extension `R[x]/(x^2)`.
pub fn square_zero_bimodule(base: &FiniteRing) -> BimoduleSpec {
    let n = base.order();
    BimoduleSpec {
        label: format!("ext:square-zero:{}", base.label()),
        base: base.clone(),
        s_order: n,
        s_zero: base.zero(),
        s_add: table(n, n, |x, y| base.add(x, y)),
        s_mul: table(n, n, |_, _| base.zero()),
        left: table(n, n, |r, s| base.mul(r, s)),
        right: table(n, n, |s, r| base.mul(s, r)),
        s_names: base.elements().map(|x| base.element_name(x)).collect(),
    }
}

/// `S = R` with its own multiplication. `S` then contains the idempotent
/// `1_R`, which has no quasi-inverse.
pub fn idempotent_self_bimodule(base: &FiniteRing) -> BimoduleSpec {
    let n = base.order();
    BimoduleSpec {
        label: format!("ext:self:{}", base.label()),
        s_mul: table(n, n, |x, y| base.mul(x, y)),
        ..square_zero_bimodule(base)
    }
}

/// `R = Z/2 × Z/2` acting on `S = Z/2` (with `S^2 = 0`) through the first
/// coordinate on the left and the second on the right, so the idempotent
/// `(1,0)` does not commute with `S`.
pub fn split_action_bimodule() -> Result<BimoduleSpec, ConstructError> {
    let z2 = super::zmod(2)?;
    let base = product(&z2, &z2)?;
    let n = base.order();
    let coord = |r: usize, i: usize| -> usize {
        let name = base.element_name(r);
        let bytes = name.trim_matches(|c| c == '(' || c == ')');
        bytes.split(',').nth(i).unwrap().parse().unwrap()
    };
    Ok(BimoduleSpec {
        label: "ext:split-action".into(),
        s_order: 2,
        s_zero: 0,
        s_add: table(2, 2, |x, y| (x + y) % 2),
        s_mul: table(2, 2, |_, _| 0),
        left: table(n, 2, |r, s| coord(r, 0) * s),
        right: table(2, n, |s, r| s * coord(r, 1)),
        s_names: vec!["0".into(), "1".into()],
        base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{equal_diagonal_subring, gf, matrix_ring, zmod};
    use crate::predicates::is_uniquely_pi_clean;

    fn upc(r: &FiniteRing) -> bool {
        is_uniquely_pi_clean(&Analysis::new(r)).holds
    }

    #[test]
    fn strict_upper_over_z2() {
        let spec = strict_upper_bimodule(&zmod(2).unwrap(), 2).unwrap();
        spec.validate().unwrap();
        assert!(spec.s_idempotent_free());
        assert!(spec.conditions().all());
        let ext = ideal_extension(&spec).unwrap();
        assert_eq!(ext.order(), 4);
        assert!(upc(&ext));
    }

    #[test]
    fn zero_extension_is_base() {
        let z6 = zmod(6).unwrap();
        let ext = ideal_extension(&zero_bimodule(&z6)).unwrap();
        assert!(ext.same_tables(&z6));
    }

    #[test]
    fn matches_equal_diagonal() {
        for (q, k) in [(2, 2), (2, 3), (3, 2), (4, 2)] {
            let base = gf(q).unwrap();
            let ext = ideal_extension(&strict_upper_bimodule(&base, k).unwrap()).unwrap();
            let eq = equal_diagonal_subring(&base, k).unwrap();
            assert_eq!(ext.order(), eq.order());
            assert_eq!(ext.is_commutative(), eq.is_commutative());
            let (a, b) = (Analysis::new(&ext), Analysis::new(&eq));
            assert_eq!(a.units().len(), b.units().len());
            assert_eq!(a.idempotents().len(), b.idempotents().len());
            assert_eq!(a.nilpotents().len(), b.nilpotents().len());
        }
    }

    #[test]
    fn mutations_break_single_conditions() {
        let split = split_action_bimodule().unwrap();
        split.validate().unwrap();
        let c = split.conditions();
        assert!(c.base_uniquely_pi_clean && !c.idempotents_commute_with_s && c.s_quasi_invertible);
        assert!(!upc(&ideal_extension(&split).unwrap()));

        let selfm = idempotent_self_bimodule(&zmod(2).unwrap());
        selfm.validate().unwrap();
        let c = selfm.conditions();
        assert!(c.base_uniquely_pi_clean && c.idempotents_commute_with_s && !c.s_quasi_invertible);
        assert!(!selfm.s_idempotent_free());

        let m2 = matrix_ring(&zmod(2).unwrap(), 2).unwrap();
        let zero = zero_bimodule(&m2);
        let c = zero.conditions();
        assert!(!c.base_uniquely_pi_clean && c.idempotents_commute_with_s && c.s_quasi_invertible);
    }

    #[test]
    fn broken_law_is_reported() {
        let mut spec = square_zero_bimodule(&zmod(4).unwrap());
        spec.left[1][1] = 2;
        assert!(matches!(
            spec.validate(),
            Err(ConstructError::BimoduleLawViolation { .. })
        ));
        let mut spec = square_zero_bimodule(&zmod(4).unwrap());
        spec.s_mul[1][1] = 1;
        assert!(ideal_extension(&spec).is_err());
    }
}
