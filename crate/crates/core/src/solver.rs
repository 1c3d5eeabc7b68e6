//! Order-by-order solution of the functional equations for `L`, `K` and `G`.
//!
//! With `Q = q + q^-1` and the presentation `a^N b = b a^M` the series satisfy
//!
//! ```text
//! L = 1 + zQL + z^2 L [Phi_{M,N} L + Phi_{N,M} K] - z^2 [Phi_{N,M} K][Phi_{M,M} L]
//! K = 1 + zQK + z^2 K [Phi_{N,M} K + Phi_{M,N} L] - z^2 [Phi_{M,N} L][Phi_{N,N} K]
//! G = 1 + zQG + z^2 [Phi_{M,N} L + Phi_{N,M} K] G
//! ```
//!
//! A word `b u b^-1` with `u = a^{jM}` equals `a^{jN}`, which fixes the
//! direction of each `Phi`. Every non-constant term on the right carries a
//! factor of `z`, so Jacobi sweeps starting from `L = K = G = 1` settle one
//! more `z`-degree per sweep.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::laurent::LaurentPoly;
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub spec: GroupSpec,
    pub order: usize,
    pub l: TruncatedSeries,
    pub k: TruncatedSeries,
    pub g: TruncatedSeries,
    /// Sweeps performed, including the final one that confirmed the fixed point.
    pub sweeps: usize,
}

struct Triple {
    l: TruncatedSeries,
    k: TruncatedSeries,
    g: TruncatedSeries,
}

/// `1 + zQ S + z^2 T`.
fn assemble(s: &TruncatedSeries, quadratic: &TruncatedSeries) -> TruncatedSeries {
    let order = s.order();
    let linear = s.mul_laurent(&LaurentPoly::q_plus_q_inv()).shift_z(1);
    TruncatedSeries::one(order)
        .add(&linear)
        .and_then(|x| x.add(&quadratic.shift_z(2)))
        .expect("all series share one order")
}

fn general_rhs(spec: GroupSpec, cur: &Triple) -> Result<Triple> {
    let (n, m) = (spec.n(), spec.m());
    let l_phi = cur.l.phi(m, n);
    let k_phi = cur.k.phi(n, m);
    let both = l_phi.add(&k_phi)?;

    let l_quad = cur.l.mul(&both)?.sub(&k_phi.mul(&cur.l.phi(m, m))?)?;
    let k_quad = cur.k.mul(&both)?.sub(&l_phi.mul(&cur.k.phi(n, n))?)?;
    let g_quad = both.mul(&cur.g)?;
    Ok(Triple {
        l: assemble(&cur.l, &l_quad),
        k: assemble(&cur.k, &k_quad),
        g: assemble(&cur.g, &g_quad),
    })
}

/// With `L = K` and `L0 = Phi_{N,N} L`:
/// `L = 1 + zQL + 2z^2 L L0 - z^2 L0^2` and `G = 1 + zQG + 2z^2 G L0`.
fn symmetric_rhs(n: u64, cur: &Triple) -> Result<Triple> {
    let l0 = cur.l.phi(n, n);
    let two = BigInt::from(2);
    let l_quad = cur.l.mul(&l0)?.scale(&two).sub(&l0.mul(&l0)?)?;
    let g_quad = cur.g.mul(&l0)?.scale(&two);
    let l = assemble(&cur.l, &l_quad);
    Ok(Triple {
        k: l.clone(),
        l,
        g: assemble(&cur.g, &g_quad),
    })
}

fn iterate<F>(spec: GroupSpec, order: usize, rhs: F) -> Result<SolveResult>
where
    F: Fn(&Triple) -> Result<Triple>,
{
    let one = TruncatedSeries::one(order);
    let mut cur = Triple {
        l: one.clone(),
        k: one.clone(),
        g: one,
    };
    // order + 1 sweeps settle every degree; one more must reproduce its input.
    let limit = order + 2;
    for sweep in 1..=limit {
        let next = rhs(&cur)?;
        let fixed = next.l == cur.l && next.k == cur.k && next.g == cur.g;
        cur = next;
        if fixed {
            return Ok(SolveResult {
                spec,
                order,
                l: cur.l,
                k: cur.k,
                g: cur.g,
                sweeps: sweep,
            });
        }
    }
    Err(Error::Inconsistent(format!(
        "{spec}: no fixed point after {limit} sweeps at order {order}"
    )))
}

/// Solves the general system for `BS(N,M)` through `z^order`.
pub fn solve(spec: GroupSpec, order: usize) -> Result<SolveResult> {
    iterate(spec, order, |cur| general_rhs(spec, cur))
}

/// Solves the reduced system for `BS(N,N)`, where `L = K`.
pub fn solve_symmetric(n: u64, order: usize) -> Result<SolveResult> {
    let spec = GroupSpec::symmetric(n)?;
    iterate(spec, order, |cur| symmetric_rhs(n, cur))
}

/// Picks the reduced system when `N = M`.
pub fn solve_auto(spec: GroupSpec, order: usize) -> Result<SolveResult> {
    if spec.is_symmetric() {
        solve_symmetric(spec.n(), order)
    } else {
        solve(spec, order)
    }
}

/// The cogrowth sequence `c(n) = [z^n q^0] G` for `n <= order`.
pub fn cogrowth_coeffs(spec: GroupSpec, order: usize) -> Result<Vec<BigInt>> {
    Ok(solve_auto(spec, order)?.g.diagonal_q0())
}

/// Whether `L(z;1) = K(z;1)` through the truncation order.
pub fn check_lk_q1(spec: GroupSpec, order: usize) -> Result<bool> {
    let r = solve_auto(spec, order)?;
    Ok(r.l.eval_q1() == r.k.eval_q1())
}

/// Left minus right side of each of the three equations, in the order
/// `L`, `K`, `G`. All three vanish for a correct solution.
pub fn residuals(r: &SolveResult) -> Result<[TruncatedSeries; 3]> {
    let cur = Triple {
        l: r.l.clone(),
        k: r.k.clone(),
        g: r.g.clone(),
    };
    let rhs = general_rhs(r.spec, &cur)?;
    Ok([r.l.sub(&rhs.l)?, r.k.sub(&rhs.k)?, r.g.sub(&rhs.g)?])
}
