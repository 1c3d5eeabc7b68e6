//! End-to-end reproduction checks behind the `repro` subcommand.

use cogrowth_core::algebraic::{build_g_poly, verify_series, QValue};
use cogrowth_core::oracle::count_tables;
use cogrowth_core::rates::{bs11_exact, rate_discriminant, rate_ratio, Correction};
use cogrowth_core::solver::{cogrowth_coeffs, solve_auto, solve_symmetric};
use cogrowth_core::{GroupSpec, Result};
use serde::Serialize;

/// Reference rates `(N, mu, lambda)` for `BS(N,N)`.
const REFERENCE_RATES: [(u64, f64, f64); 6] = [
    (1, 4.0, 3.0),
    (2, 3.792765039, 2.668565568),
    (3, 3.647639445, 2.395062561),
    (4, 3.569497357, 2.215245886),
    (5, 3.525816111, 2.091305394),
    (6, 3.500607636, 2.002421757),
];
const MU_TOL: f64 = 5e-9;
const LAMBDA_TOL: f64 = 1e-8;
const RATIO_ORDER: usize = 40;
const RATIO_REL_TOL: f64 = 0.02;

#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Report {
    pub all_passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
        }
        out
    }
}

fn check(name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

pub fn run() -> Report {
    let mut checks = vec![check("bs11-closed-form", || {
        let solved = cogrowth_coeffs(GroupSpec::symmetric(1)?, 20)?;
        let exact = bs11_exact(20)?;
        Ok((solved == exact, "cogrowth of BS(1,1) through n = 20".into()))
    })];

    for (n, m) in [(1, 1), (2, 2), (3, 3), (2, 1), (2, 3)] {
        checks.push(check(format!("oracle-BS({n},{m})"), || {
            let spec = GroupSpec::new(n, m)?;
            let sol = solve_auto(spec, 10)?;
            let table = count_tables(spec, 10)?;
            let same = sol.g == table.g && sol.l == table.l && sol.k == table.k;
            Ok((same, "G, L, K against enumeration for n <= 10".into()))
        }));
    }

    for n in 1..=5 {
        checks.push(check(format!("equation-N{n}"), || {
            let poly = build_g_poly(n)?;
            let sol = solve_symmetric(n, 16)?;
            let v = verify_series(&poly, &sol.g, &QValue::Symbolic, 16)?;
            Ok((v.ok, format!("degree {} equation holds to z^16", n + 1)))
        }));
    }

    for (n, mu_ref, lambda_ref) in REFERENCE_RATES {
        checks.push(check(format!("rate-N{n}"), || {
            let r = rate_discriminant(n)?;
            let (dm, dl) = ((r.mu - mu_ref).abs(), (r.lambda - lambda_ref).abs());
            Ok((
                dm <= MU_TOL && dl <= LAMBDA_TOL,
                format!(
                    "mu = {:.11} ({dm:.1e} from {mu_ref}), lambda = {:.11} ({dl:.1e} from {lambda_ref})",
                    r.mu, r.lambda
                ),
            ))
        }));
    }

    for (n, mu_ref, _) in REFERENCE_RATES.into_iter().skip(1) {
        checks.push(check(format!("ratio-N{n}"), || {
            let coeffs = cogrowth_coeffs(GroupSpec::symmetric(n)?, RATIO_ORDER)?;
            let est = rate_ratio(&coeffs, Correction::N2)?;
            let rel = (est.mu - mu_ref).abs() / mu_ref;
            Ok((
                rel <= RATIO_REL_TOL,
                format!(
                    "order {RATIO_ORDER} estimate {:.6} +- {:.1e}, {:.2}% off",
                    est.mu,
                    est.error,
                    100.0 * rel
                ),
            ))
        }));
    }

    Report {
        all_passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
