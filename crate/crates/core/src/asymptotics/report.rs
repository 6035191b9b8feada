// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use crate::asymptotics::constant::{constant_c, ConstantEstimate};
use crate::error::{Error, Result};
use crate::hilb::count_nst;
use crate::query::CountQuery;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "N")]
    pub n: u64,
    pub c_low: f64,
    pub c_high: f64,
    pub prediction: f64,
    pub rel_dev: f64,
    pub envelope: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub s: String,
    pub t: String,
    pub regime: &'static str,
    pub constant: ConstantEstimate,
    pub rows: Vec<ReportRow>,
}

/// `(alpha, beta) = (3/t, 0)`
pub fn bm_exponents(s: f64, t: f64) -> Result<(f64, u32)> {
    if !(s > 0.0 && t > 0.0) {
        return Err(Error::NonPositiveExponent);
    }
    Ok((3.0 / t, 0))
}

/// Exact counts against `c B^{3/t}` for each `B`, with `c` bracketed by
/// [`constant_c`] at `m_max`.
pub fn convergence_report(queries: &[CountQuery], m_max: u64) -> Result<ConvergenceReport> {
    let first = queries
        .first()
        .ok_or_else(|| Error::Invalid("at least one B is required".into()))?;
    let (s, t) = (first.s_f64(), first.t_f64());
    if queries.iter().any(|q| q.s() != first.s() || q.t() != first.t()) {
        return Err(Error::Invalid("all rows must share s and t".into()));
    }
    let constant = constant_c(s / t, m_max)?;
    let rows = queries
        .iter()
        .map(|q| {
            let n = count_nst::<i128>(q);
            let b = q.b_f64();
            let prediction = constant.mid() * b.powf(3.0 / t);
            ReportRow {
                b: q.b().to_string(),
                n,
                c_low: constant.low(),
                c_high: constant.high(),
                prediction,
                rel_dev: n as f64 / prediction - 1.0,
                envelope: b.powf(2.0 / t) + b.powf(3.0 / s) * b.ln().max(0.0),
            }
        })
        .collect();
    Ok(ConvergenceReport {
        s: first.s().to_string(),
        t: first.t().to_string(),
        regime: if s > t { "asymptotic" } else { "upper-bound regime" },
        constant,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents() {
        assert_eq!(bm_exponents(2.0, 1.0).unwrap(), (3.0, 0));
        assert_eq!(bm_exponents(4.0, 2.0).unwrap(), (1.5, 0));
        assert_eq!(bm_exponents(3.0, 1.0).unwrap(), (3.0, 0));
        assert!(bm_exponents(0.0, 1.0).is_err());
        assert!(bm_exponents(1.0, -2.0).is_err());
    }

    #[test]
    fn regime_label() {
        let q = [CountQuery::parse("1", "1", "3").unwrap()];
        let r = convergence_report(&q, 5).unwrap();
        assert_eq!(r.regime, "upper-bound regime");
        assert_eq!(r.rows[0].n, count_nst::<i128>(&q[0]));
    }
}
