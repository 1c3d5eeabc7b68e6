//! Text, CSV and JSON renderings of command results. Counts are always
//! written as decimal strings.

use std::fmt::Write;

use cogrowth_core::oracle::{CountTable, Family};
use cogrowth_core::rates::RateResult;
use cogrowth_core::{GroupSpec, TruncatedSeries};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialise")
}

#[derive(Serialize)]
pub struct Entry {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub count: String,
}

fn entries(series: &TruncatedSeries) -> Vec<Entry> {
    let mut out = Vec::new();
    for (n, poly) in series.coeffs().iter().enumerate() {
        for (k, c) in poly.terms() {
            out.push(Entry {
                n,
                k: Some(k.to_i64().expect("exponent bounded by the order")),
                count: c.to_string(),
            });
        }
    }
    out
}

#[derive(Serialize)]
pub struct SeriesReport {
    #[serde(rename = "N")]
    n: u64,
    #[serde(rename = "M")]
    m: u64,
    order: usize,
    gf: &'static str,
    q_mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<Vec<Entry>>,
    #[serde(skip)]
    series: Option<TruncatedSeries>,
}

impl SeriesReport {
    pub fn sequence(
        spec: GroupSpec,
        order: usize,
        gf: &'static str,
        q_mode: &'static str,
        values: Vec<BigInt>,
    ) -> Self {
        Self {
            n: spec.n(),
            m: spec.m(),
            order,
            gf,
            q_mode,
            coefficients: Some(values.iter().map(BigInt::to_string).collect()),
            terms: None,
            series: None,
        }
    }

    pub fn symbolic(
        spec: GroupSpec,
        order: usize,
        gf: &'static str,
        series: &TruncatedSeries,
    ) -> Self {
        Self {
            n: spec.n(),
            m: spec.m(),
            order,
            gf,
            q_mode: "symbolic",
            coefficients: None,
            terms: Some(entries(series)),
            series: Some(series.clone()),
        }
    }

    pub fn json(&self) -> String {
        to_json(self)
    }

    pub fn csv(&self) -> String {
        let mut out = String::new();
        if let Some(coeffs) = &self.coefficients {
            out.push_str("n,count\n");
            for (n, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{n},{c}");
            }
        } else if let Some(terms) = &self.terms {
            out.push_str("n,k,count\n");
            for e in terms {
                let _ = writeln!(out, "{},{},{}", e.n, e.k.unwrap_or(0), e.count);
            }
        }
        out
    }

    pub fn text(&self) -> String {
        if let Some(coeffs) = &self.coefficients {
            return coeffs.join(",");
        }
        let mut out = String::new();
        if let Some(series) = &self.series {
            for (n, poly) in series.coeffs().iter().enumerate() {
                let _ = writeln!(out, "z^{n}: {poly}");
            }
        }
        out
    }
}

#[derive(Serialize)]
pub struct OracleReport {
    #[serde(rename = "N")]
    n: u64,
    #[serde(rename = "M")]
    m: u64,
    nmax: usize,
    family: &'static str,
    rows: Vec<Entry>,
}

impl OracleReport {
    pub fn table(table: &CountTable, family: Family) -> Self {
        let (name, rows) = match table.family(family) {
            Some(series) => {
                let name = match family {
                    Family::G => "g",
                    Family::L => "l",
                    _ => "k",
                };
                (name, entries(series))
            }
            None => (
                "d",
                table
                    .d
                    .iter()
                    .enumerate()
                    .map(|(n, c)| Entry {
                        n,
                        k: None,
                        count: c.to_string(),
                    })
                    .collect(),
            ),
        };
        Self {
            n: table.spec.n(),
            m: table.spec.m(),
            nmax: table.nmax,
            family: name,
            rows,
        }
    }

    pub fn json(&self) -> String {
        to_json(self)
    }

    pub fn csv(&self) -> String {
        let mut out = String::new();
        if self.family == "d" {
            out.push_str("n,count\n");
            for e in &self.rows {
                let _ = writeln!(out, "{},{}", e.n, e.count);
            }
        } else {
            out.push_str("n,k,count\n");
            for e in &self.rows {
                let _ = writeln!(out, "{},{},{}", e.n, e.k.unwrap_or(0), e.count);
            }
        }
        out
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for e in &self.rows {
            match e.k {
                Some(k) => writeln!(out, "{}({},{}) = {}", self.family, e.n, k, e.count),
                None => writeln!(out, "{}({}) = {}", self.family, e.n, e.count),
            }
            .unwrap();
        }
        out
    }
}

fn decimals(r: &RateResult) -> usize {
    r.digits.saturating_sub(1).max(1) as usize
}

pub fn rate_text(r: &RateResult) -> String {
    let d = decimals(r);
    let mut out = format!(
        "N={} method={} mu={:.d$} lambda={:.d$} digits={}",
        r.n, r.method, r.mu, r.lambda, r.digits
    );
    if let Some(zc) = &r.z_c {
        let _ = write!(out, " z_c=[{}, {}]", zc.lo, zc.hi);
    }
    if let Some(err) = r.error {
        let _ = write!(out, " error={err:.2e}");
    }
    out
}

pub fn rate_csv(r: &RateResult) -> String {
    let d = decimals(r);
    format!(
        "N,method,mu,lambda,digits\n{},{},{:.d$},{:.d$},{}\n",
        r.n, r.method, r.mu, r.lambda, r.digits
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use cogrowth_core::rates::{Method, RateResult};
    use cogrowth_core::solver::solve_symmetric;

    #[test]
    fn sequence_renderings() {
        let spec = GroupSpec::symmetric(1).unwrap();
        let values: Vec<BigInt> = [1, 0, 4].iter().map(|&v| v.into()).collect();
        let r = SeriesReport::sequence(spec, 2, "G", "q0", values);
        assert_eq!(r.text(), "1,0,4");
        assert_eq!(r.csv(), "n,count\n0,1\n1,0\n2,4\n");
    }

    #[test]
    fn symbolic_csv_lists_every_term() {
        let sol = solve_symmetric(1, 2).unwrap();
        let r = SeriesReport::symbolic(GroupSpec::symmetric(1).unwrap(), 2, "G", &sol.g);
        assert_eq!(
            r.csv(),
            "n,k,count\n0,0,1\n1,-1,1\n1,1,1\n2,-2,1\n2,0,4\n2,2,1\n"
        );
    }

    #[test]
    fn rate_text_uses_reported_digits() {
        let r = RateResult {
            n: 1,
            method: Method::Ratio,
            z_c: None,
            mu: 3.98765,
            lambda: 2.9,
            digits: 3,
            error: Some(0.004),
        };
        assert_eq!(
            rate_text(&r),
            "N=1 method=ratio mu=3.99 lambda=2.90 digits=3 error=4.00e-3"
        );
    }
}
