//! Matrix rings and their subrings over a finite base ring.
//!
//! An element is the row-major tuple of its entry indices; tuples are
//! ordered lexicographically before normalization.

use super::{check_order, from_elements, gf, ConstructError};
use crate::ring::{FiniteRing, MAX_ORDER};

type Matrix = Vec<usize>;

fn mat_add(base: &FiniteRing, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(&x, &y)| base.add(x, y)).collect()
}

fn mat_mul(base: &FiniteRing, k: usize, a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = vec![base.zero(); k * k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = base.zero();
            for l in 0..k {
                acc = base.add(acc, base.mul(a[i * k + l], b[l * k + j]));
            }
            out[i * k + j] = acc;
        }
    }
    out
}

fn identity(base: &FiniteRing, k: usize) -> Matrix {
    let mut m = vec![base.zero(); k * k];
    for i in 0..k {
        m[i * k + i] = base.one();
    }
    m
}

fn mat_name(base: &FiniteRing, k: usize, m: &Matrix) -> String {
    let rows: Vec<String> = m
        .chunks(k)
        .map(|r| {
            let entries: Vec<String> = r.iter().map(|&x| base.element_name(x)).collect();
            format!("[{}]", entries.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Enumerates `base^params` parameter tuples, maps each to a matrix, and
/// builds the ring of the resulting (sorted, deduplicated) matrices.
fn matrix_family(
    label: String,
    base: &FiniteRing,
    k: usize,
    params: usize,
    build: impl Fn(&[usize]) -> Matrix,
) -> Result<FiniteRing, ConstructError> {
    if k == 0 {
        return Err(ConstructError::InvalidArgument(
            "matrix size must be at least 1".into(),
        ));
    }
    let q = base.order();
    let count = check_order((q as u128).pow(params as u32), MAX_ORDER)?;
    let mut elems: Vec<Matrix> = (0..count)
        .map(|mut i| {
            let mut p = vec![0; params];
            for slot in p.iter_mut().rev() {
                *slot = i % q;
                i /= q;
            }
            build(&p)
        })
        .collect();
    elems.sort();
    elems.dedup();
    from_elements(
        label,
        &elems,
        &vec![base.zero(); k * k],
        &identity(base, k),
        |a, b| mat_add(base, a, b),
        |a, b| mat_mul(base, k, a, b),
        |m| mat_name(base, k, m),
    )
}

/// The full matrix ring `M_k(R)`.
pub fn matrix_ring(base: &FiniteRing, k: usize) -> Result<FiniteRing, ConstructError> {
    matrix_family(
        format!("matrix:({}):{k}", base.label()),
        base,
        k,
        k * k,
        |p| p.to_vec(),
    )
}

/// Upper triangular matrices `T_k(R)`.
pub fn upper_triangular(base: &FiniteRing, k: usize) -> Result<FiniteRing, ConstructError> {
    let slots: Vec<usize> = (0..k)
        .flat_map(|i| (i..k).map(move |j| i * k + j))
        .collect();
    matrix_family(
        format!("tri:({}):{k}", base.label()),
        base,
        k,
        slots.len(),
        |p| {
            let mut m = vec![base.zero(); k * k];
            for (&s, &v) in slots.iter().zip(p) {
                m[s] = v;
            }
            m
        },
    )
}

/// Upper triangular matrices whose diagonal entries all coincide.
pub fn equal_diagonal_subring(base: &FiniteRing, k: usize) -> Result<FiniteRing, ConstructError> {
    if k < 2 {
        return Err(ConstructError::InvalidArgument(
            "equal-diagonal subring needs k >= 2".into(),
        ));
    }
    let strict: Vec<usize> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| i * k + j))
        .collect();
    matrix_family(
        format!("eqdiag:({}):{k}", base.label()),
        base,
        k,
        1 + strict.len(),
        |p| {
            let mut m = vec![base.zero(); k * k];
            for i in 0..k {
                m[i * k + i] = p[0];
            }
            for (&s, &v) in strict.iter().zip(&p[1..]) {
                m[s] = v;
            }
            m
        },
    )
}

/// The 64-element ring of matrices `[[x, y, z], [0, x^2, 0], [0, 0, x]]`
/// over GF(4), where `x^2` is the field square.
pub fn paper_gf4_example() -> Result<FiniteRing, ConstructError> {
    let f = gf(4)?;
    let ring = matrix_family("paper:gf4-example".into(), &f, 3, 3, |p| {
        let (x, y, z) = (p[0], p[1], p[2]);
        let zero = f.zero();
        vec![x, y, z, zero, f.mul(x, x), zero, zero, zero, x]
    })?;
    Ok(ring)
}
