//! Rings of the form `Z/m[t]/(f)` for a monic `f`.

use super::{check_order, from_elements, zmod, ConstructError};
use crate::ring::{FiniteRing, MAX_ORDER};

/// `Z/m[t]/(t^d + c_{d-1} t^{d-1} + ... + c_0)` where `tail = [c_0, ..., c_{d-1}]`.
///
/// Element `c_0 + c_1 t + ...` has pre-normalization index `c_0 + c_1 m + ...`,
/// so 0 and 1 already sit at indices 0 and 1.
fn poly_quotient(
    label: String,
    m: usize,
    tail: &[usize],
    var: &str,
) -> Result<FiniteRing, ConstructError> {
    let d = tail.len();
    let order = check_order((m as u128).pow(d as u32), MAX_ORDER)?;
    let elems: Vec<Vec<usize>> = (0..order)
        .map(|mut i| {
            (0..d)
                .map(|_| {
                    let c = i % m;
                    i /= m;
                    c
                })
                .collect()
        })
        .collect();
    let zero = vec![0; d];
    let mut one = vec![0; d];
    one[0] = 1 % m;
    let add = |a: &Vec<usize>, b: &Vec<usize>| a.iter().zip(b).map(|(x, y)| (x + y) % m).collect();
    let mul = |a: &Vec<usize>, b: &Vec<usize>| {
        let mut prod = vec![0usize; 2 * d];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % m;
            }
        }
        // t^d = -(c_0 + ... + c_{d-1} t^{d-1})
        for k in (d..2 * d).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, c) in tail.iter().enumerate() {
                let sub = (top * c) % m;
                prod[k - d + i] = (prod[k - d + i] + m - sub) % m;
            }
        }
        prod.truncate(d);
        prod
    };
    let name = |a: &Vec<usize>| {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}{var}"),
                (i, 1) => format!("{var}^{i}"),
                (i, c) => format!("{c}{var}^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    };
    from_elements(label, &elems, &zero, &one, add, mul, name)
}

/// Finite field of order `q` for `q` in {2, 3, 4, 5, 7, 8, 9}.
///
/// Prime orders are `Z/q`; GF(4) is `Z/2[t]/(t^2+t+1)`, GF(8) is
/// `Z/2[t]/(t^3+t+1)` and GF(9) is `Z/3[t]/(t^2+1)`.
pub fn gf(q: usize) -> Result<FiniteRing, ConstructError> {
    let label = format!("gf:{q}");
    match q {
        2 | 3 | 5 | 7 => Ok(zmod(q)?.with_label(label)),
        4 => poly_quotient(label, 2, &[1, 1], "t"),
        8 => poly_quotient(label, 2, &[1, 1, 0], "t"),
        9 => poly_quotient(label, 3, &[1, 0], "t"),
        _ => Err(ConstructError::UnsupportedFieldOrder(q)),
    }
}

/// `Z/n[x]/(x^2+x+1)`, the ring `Z_n[alpha]` with `alpha` a primitive cube root of unity.
pub fn zn_alpha(n: usize) -> Result<FiniteRing, ConstructError> {
    if n < 2 {
        return Err(ConstructError::InvalidArgument(
            "zn-alpha needs n >= 2".into(),
        ));
    }
    poly_quotient(format!("zn-alpha:{n}"), n, &[1, 1], "a")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::units;

    fn find(r: &FiniteRing, name: &str) -> usize {
        r.elements().find(|&x| r.element_name(x) == name).unwrap()
    }

    #[test]
    fn gf4_structure() {
        let f = gf(4).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(units(&f).len(), 3);
        let t = find(&f, "t");
        let t1 = find(&f, "1+t");
        assert_eq!(f.mul(t, t1), f.one());
        assert_eq!(f.mul(t, t), t1);
    }

    #[test]
    fn fields_have_all_nonzero_units() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = gf(q).unwrap();
            assert_eq!(f.order(), q);
            assert_eq!(units(&f).len(), q - 1, "gf({q})");
            assert!(f.is_commutative());
        }
        assert_eq!(gf(6), Err(ConstructError::UnsupportedFieldOrder(6)));
        assert_eq!(gf(16), Err(ConstructError::UnsupportedFieldOrder(16)));
    }

    #[test]
    fn zn_alpha_examples() {
        assert!(zn_alpha(2).unwrap().same_tables(&gf(4).unwrap()));
        let r = zn_alpha(3).unwrap();
        assert_eq!(r.order(), 9);
        assert!(r.is_commutative());
        let r = zn_alpha(4).unwrap();
        assert_eq!(r.order(), 16);
        assert!(r.is_commutative());
        // a^3 = 1 in every Z_n[alpha]
        let a = find(&r, "a");
        assert_eq!(r.pow(a, 3), r.one());
    }
}
