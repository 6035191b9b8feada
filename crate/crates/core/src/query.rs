// SPDX-License-Identifier: Apache-2.0

//! Exact height thresholds.
//!
//! With `s - t = p/d` and `t = r/d` (`r > 0`), `H_{s,t} <= B` is equivalent to
//! `covol2(I1)^p * covol2(I2)^r <= B^(2d)`, an inequality between rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_DENOMINATOR: u32 = 1000;

/// Parse `"2"`, `"-1.25"`, `"3/2"` or `"1e3"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(text.to_string());
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut v = if scale >= 0 {
        BigRational::from_integer(digits * ten.pow(scale as u32))
    } else {
        BigRational::new(digits, ten.pow((-scale) as u32))
    };
    if neg {
        v = -v;
    }
    Ok(v)
}

/// Exact rational value of an `f64`, via its shortest decimal representation.
pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    if !x.is_finite() {
        return Err(Error::Parse(x.to_string()));
    }
    parse_rational(&format!("{x:e}"))
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A counting problem `#{x : H_{s,t}(x) <= B}`.
#[derive(Clone, PartialEq, Eq)]
pub struct CountQuery {
    s: BigRational,
    t: BigRational,
    b: BigRational,
    /// common denominator of `s - t` and `t`
    d: u32,
    p: i64,
    r: u64,
    b_num_pow: BigInt,
    b_den_pow: BigInt,
}

impl CountQuery {
    pub fn new(s: BigRational, t: BigRational, b: BigRational) -> Result<Self> {
        if !s.is_positive() || !t.is_positive() {
            return Err(Error::NonPositiveExponent);
        }
        if !b.is_positive() {
            return Err(Error::Invalid("B must be positive".into()));
        }
        let st = s.clone() - t.clone();
        let d = st.denom().lcm(t.denom());
        let d_small = d
            .to_u32()
            .filter(|&d| d <= MAX_DENOMINATOR)
            .ok_or_else(|| Error::Invalid(format!("exponent denominators above {MAX_DENOMINATOR} are not supported")))?;
        let p = (st * BigRational::from_integer(d.clone())).to_integer();
        let r = (t.clone() * BigRational::from_integer(d)).to_integer();
        let p = p.to_i64().ok_or_else(|| Error::Invalid("exponent too large".into()))?;
        let r = r.to_u64().ok_or_else(|| Error::Invalid("exponent too large".into()))?;
        let b_num_pow = b.numer().pow(2 * d_small);
        let b_den_pow = b.denom().pow(2 * d_small);
        Ok(Self { s, t, b, d: d_small, p, r, b_num_pow, b_den_pow })
    }

    pub fn parse(s: &str, t: &str, b: &str) -> Result<Self> {
        Self::new(parse_rational(s)?, parse_rational(t)?, parse_rational(b)?)
    }

    pub fn from_f64(s: f64, t: f64, b: f64) -> Result<Self> {
        Self::new(rational_from_f64(s)?, rational_from_f64(t)?, rational_from_f64(b)?)
    }

    pub fn s(&self) -> &BigRational {
        &self.s
    }
    pub fn t(&self) -> &BigRational {
        &self.t
    }
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn s_f64(&self) -> f64 {
        to_f64(&self.s)
    }
    pub fn t_f64(&self) -> f64 {
        to_f64(&self.t)
    }
    pub fn b_f64(&self) -> f64 {
        to_f64(&self.b)
    }

    /// Same height family rescaled: `(ks, kt, B^k)` for a positive integer `k`.
    pub fn scaled(&self, k: u32) -> Result<Self> {
        let kr = BigRational::from_integer(k.into());
        Self::new(self.s.clone() * kr.clone(), self.t.clone() * kr, self.b.clone().pow(k as i32))
    }

    /// Largest `c2` with `H_{s,t} <= B` for a point with `covol2(I1) = ell2`
    /// and `covol2(I2) = c2`; `None` when no positive value qualifies.
    pub fn max_covol2(&self, ell2: &BigInt) -> Option<BigInt> {
        let e = ell2.pow(u32::try_from(self.p.unsigned_abs()).expect("small exponent"));
        let (num, den) = if self.p >= 0 {
            (self.b_num_pow.clone(), self.b_den_pow.clone() * e)
        } else {
            (self.b_num_pow.clone() * e, self.b_den_pow.clone())
        };
        let bound = num.div_floor(&den);
        if bound < BigInt::one() {
            return None;
        }
        let r = u32::try_from(self.r).expect("small exponent");
        let mut c = bound.nth_root(r);
        while (c.clone() + 1u32).pow(r) <= bound {
            c += 1u32;
        }
        while c.clone().pow(r) > bound {
            c -= 1u32;
        }
        Some(c)
    }

    pub fn accepts(&self, ell2: &BigInt, c2: &BigInt) -> bool {
        self.max_covol2(ell2).is_some_and(|m| *c2 <= m)
    }

    /// Largest `max(|a|,|b|,|c|)` that can carry a point of height `<= B`.
    ///
    /// Every point over `l` has `covol(I2) >= |l| sqrt(2/3) / 7`, so
    /// `H >= |l|^s (sqrt(2/3)/7)^t >= M^s (sqrt(2/3)/7)^t`.
    pub fn m_max(&self) -> u64 {
        let kappa_inv = 7.0 * (1.5f64).sqrt();
        let x = (self.b_f64() * kappa_inv.powf(self.t_f64())).powf(1.0 / self.s_f64());
        (x * (1.0 + 1e-9)).floor() as u64
    }

    /// Floating-point value of the height for the given squared covolumes.
    pub fn height(&self, ell2: f64, c2: f64) -> f64 {
        height_st(ell2, c2, self.s_f64(), self.t_f64())
    }

    /// The height itself when it is rational: `H^{2d} = ell2^p c2^r` is
    /// tested for being an exact `2d`-th power.
    pub fn exact_height(&self, ell2: &BigInt, c2: &BigInt) -> Option<BigRational> {
        let r = u32::try_from(self.r).ok()?;
        let e = ell2.pow(u32::try_from(self.p.unsigned_abs()).ok()?);
        let (num, den) = if self.p >= 0 { (e * c2.pow(r), BigInt::one()) } else { (c2.pow(r), e) };
        let k = 2 * self.d;
        let (rn, rd) = (num.nth_root(k), den.nth_root(k));
        (rn.clone().pow(k) == num && rd.clone().pow(k) == den).then(|| BigRational::new(rn, rd))
    }

    pub fn denominator(&self) -> u32 {
        self.d
    }
}

impl fmt::Debug for CountQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CountQuery(s={}, t={}, B={})", self.s, self.t, self.b)
    }
}

impl FromStr for CountQuery {
    type Err = Error;
    /// `"s,t,B"`
    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        match parts.as_slice() {
            [s, t, b] => Self::parse(s, t, b),
            _ => Err(Error::Parse(text.to_string())),
        }
    }
}

/// `covol(I1)^(s-t) * covol(I2)^t` from squared covolumes.
pub fn height_st(ell2: f64, c2: f64, s: f64, t: f64) -> f64 {
    (0.5 * (s - t) * ell2.ln() + 0.5 * t * c2.ln()).exp()
}
