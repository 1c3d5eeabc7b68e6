//! Resultants of polynomials whose coefficients are themselves integer
//! polynomials, by fraction-free (Bareiss) elimination on the Sylvester matrix.

use crate::error::Result;
use crate::upoly::IntPoly;

/// Polynomial in an outer variable with coefficients in `Z[z]`, lowest degree
/// first.
pub type PolyOverZz = Vec<IntPoly>;

fn trim(p: &[IntPoly]) -> &[IntPoly] {
    let mut len = p.len();
    while len > 0 && p[len - 1].is_zero() {
        len -= 1;
    }
    &p[..len]
}

pub fn derivative(p: &[IntPoly]) -> PolyOverZz {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&(i as i64).into()))
        .collect()
}

fn sylvester(p: &[IntPoly], q: &[IntPoly]) -> Vec<Vec<IntPoly>> {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (count, src) in [(n, p), (m, q)] {
        for r in 0..count {
            let mut row = vec![IntPoly::zero(); size];
            // Highest coefficient first.
            for (j, c) in src.iter().rev().enumerate() {
                row[r + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant over `Z[z]` by Bareiss elimination; every division is exact.
pub fn determinant(mut a: Vec<Vec<IntPoly>>) -> Result<IntPoly> {
    let size = a.len();
    if size == 0 {
        return Ok(IntPoly::one());
    }
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !a[i][k].is_zero()) else {
                return Ok(IntPoly::zero());
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev)?;
            }
            a[i][k] = IntPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// `Res(p, q)` with respect to the outer variable.
pub fn resultant(p: &[IntPoly], q: &[IntPoly]) -> Result<IntPoly> {
    let (p, q) = (trim(p), trim(q));
    if p.is_empty() || q.is_empty() {
        return Ok(IntPoly::zero());
    }
    if p.len() == 1 && q.len() == 1 {
        return Ok(IntPoly::one());
    }
    determinant(sylvester(p, q))
}

/// `Res(p, dp/dG)`, the discriminant up to a factor of the leading
/// coefficient.
pub fn discriminant(p: &[IntPoly]) -> Result<IntPoly> {
    let p = trim(p);
    resultant(p, &derivative(p))
}
