// SPDX-License-Identifier: Apache-2.0

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::constants::ZETA3;
use crate::error::{Error, Result};
use crate::lattice::sl_polynomial;

/// A certified bracket `[partial, partial + tail_bound]` for `c_{s,t}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstantEstimate {
    pub ratio: f64,
    pub m_max: u64,
    pub partial: f64,
    pub tail_bound: f64,
}

impl ConstantEstimate {
    pub fn low(&self) -> f64 {
        self.partial
    }
    pub fn high(&self) -> f64 {
        self.partial + self.tail_bound
    }
    pub fn mid(&self) -> f64 {
        self.partial + 0.5 * self.tail_bound
    }
}

fn prefactor() -> f64 {
    std::f64::consts::PI / (3.0 * ZETA3)
}

/// Sum over primitive triples with `max(|a|,|b|,|c|) = t`, lexicographic.
fn shell_sum(t: i64, ratio: f64) -> f64 {
    let exponent = 1.5 - 1.5 * ratio;
    let mut acc = 0.0;
    let mut visit = |a: i64, b: i64, c: i64| {
        if a.gcd(&b).gcd(&c) == 1 {
            let n = (a * a + b * b + c * c) as f64;
            let p = sl_polynomial(&(a as i128), &(b as i128), &(c as i128)) as f64;
            acc += n.powf(exponent) / p;
        }
    };
    for a in -t..=t {
        for b in -t..=t {
            if a.abs() == t || b.abs() == t {
                for c in -t..=t {
                    visit(a, b, c);
                }
            } else {
                visit(a, b, -t);
                visit(a, b, t);
            }
        }
    }
    acc
}

/// Bound on the sum over all shells beyond `m`.
///
/// A shell holds `24 t^2 + 2` triples, each with `a^2+b^2+c^2 >= t^2`, and the
/// denominator is at least `(2/3)(a^2+b^2+c^2)^3`.
fn tail(m: u64, ratio: f64) -> f64 {
    let m = m as f64;
    let r3 = 3.0 * ratio;
    prefactor() * (36.0 * m.powf(-r3) / r3 + 3.0 * m.powf(-2.0 - r3) / (2.0 + r3))
}

pub fn constant_c(ratio: f64, m_max: u64) -> Result<ConstantEstimate> {
    if !(ratio > 0.0) || !ratio.is_finite() {
        return Err(Error::Invalid("ratio must be positive".into()));
    }
    if m_max == 0 {
        return Err(Error::Invalid("M_max must be at least 1".into()));
    }
    let shells: Vec<f64> = (1..=m_max as i64)
        .into_par_iter()
        .map(|t| shell_sum(t, ratio))
        .collect();
    let sum: f64 = shells.iter().sum();
    Ok(ConstantEstimate {
        ratio,
        m_max,
        partial: prefactor() * sum,
        tail_bound: tail(m_max, ratio),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_shell() {
        let c = constant_c(2.0, 1).unwrap();
        let direct = prefactor() * (6.0 + 12.0 * 2f64.powf(-1.5) / 6.0 + 8.0 * 3f64.powf(-1.5) / 20.0);
        assert!((c.partial - direct).abs() < 1e-12);
        assert!((c.partial - 5.9101).abs() < 1e-3);
    }

    #[test]
    fn shell_sizes() {
        for t in 1..6i64 {
            let mut n = 0;
            for a in -t..=t {
                for b in -t..=t {
                    for c in -t..=t {
                        if a.abs().max(b.abs()).max(c.abs()) == t {
                            n += 1;
                        }
                    }
                }
            }
            assert_eq!(n, 24 * t * t + 2);
        }
    }

    #[test]
    fn brackets_nest() {
        let c10 = constant_c(2.0, 10).unwrap();
        let c20 = constant_c(2.0, 20).unwrap();
        assert!(c10.low() <= c20.low());
        assert!(c20.high() <= c10.high());
        assert!(constant_c(0.0, 3).is_err());
        assert!(constant_c(1.0, 0).is_err());
    }
}
