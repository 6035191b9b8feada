// SPDX-License-Identifier: Apache-2.0

//! Machine-readable output: point tables and JSON reports.

use std::io::{Read, Write};

use num_bigint::BigInt;
use serde::Serialize;

use crate::asymptotics::{constant_c, ConstantEstimate, LeCount};
use crate::error::{Error, Result};
use crate::heights::{classify, disc_ratio, discriminant, height_e, le_height};
use crate::hilb::{canonicalize, count_nst, HilbPoint, QuadraticForm};
use crate::query::CountQuery;
use crate::scalar::Scalar;

pub const SCHEMA_VERSION: u32 = 1;

pub const POINT_HEADER: [&str; 17] = [
    "ell_a", "ell_b", "ell_c", "qbar_1", "qbar_2", "qbar_3", "q_lift_0", "q_lift_1", "q_lift_2", "q_lift_3",
    "q_lift_4", "q_lift_5", "covol2_I1", "covol2_I2", "height", "class", "disc",
];

/// A float with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// `H_{s,t}(z)`, exact when rational and otherwise to 17 significant digits.
pub fn format_height<T: Scalar>(query: &CountQuery, z: &HilbPoint<T>) -> String {
    let ell2 = z.covol2_i1().to_bigint();
    let c2 = z.covol2_i2().to_bigint();
    match query.exact_height(&ell2, &c2) {
        Some(h) => h.to_string(),
        None => format_float(query.height(ell2_f64(&ell2), ell2_f64(&c2))),
    }
}

fn ell2_f64(x: &BigInt) -> f64 {
    x.to_f64_lossy()
}

/// One CSV row per point, in the order given.
pub fn write_points_csv<T: Scalar, W: Write>(out: W, query: &CountQuery, points: &[HilbPoint<T>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(POINT_HEADER).map_err(io_error)?;
    for z in points {
        let mut row: Vec<String> = z.ell().coeffs().iter().map(ToString::to_string).collect();
        row.extend(z.qbar().iter().map(ToString::to_string));
        row.extend(z.q_lift().iter().map(ToString::to_string));
        row.push(z.covol2_i1().to_string());
        row.push(z.covol2_i2().to_string());
        row.push(format_height(query, z));
        row.push(classify(z).name().to_string());
        row.push(discriminant(z).to_string());
        w.write_record(&row).map_err(io_error)?;
    }
    w.flush().map_err(|e| Error::Invalid(e.to_string()))
}

fn io_error(e: csv::Error) -> Error {
    Error::Invalid(e.to_string())
}

/// A parsed point row: the point rebuilt from `ell` and `q_lift`, and the
/// height column as printed.
#[derive(Clone, Debug)]
pub struct PointRecord {
    pub point: HilbPoint<i128>,
    pub height: String,
}

/// Re-ingest a table written by [`write_points_csv`].
pub fn read_points_csv<R: Read>(input: R) -> Result<Vec<PointRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers().map_err(io_error)?;
    if header.iter().ne(POINT_HEADER.iter().copied()) {
        return Err(Error::Parse("unexpected point table header".into()));
    }
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(io_error)?;
        let int = |i: usize| -> Result<i128> {
            rec[i].parse().map_err(|_| Error::Parse(format!("bad integer '{}'", &rec[i])))
        };
        let ell = [int(0)?, int(1)?, int(2)?];
        let q: [i128; 6] = [int(6)?, int(7)?, int(8)?, int(9)?, int(10)?, int(11)?];
        let point = canonicalize(ell, &QuadraticForm::new(q)?)?;
        out.push(PointRecord { point, height: rec[14].to_string() });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct QueryEcho {
    pub s: String,
    pub t: String,
    #[serde(rename = "B")]
    pub b: String,
}

impl From<&CountQuery> for QueryEcho {
    fn from(q: &CountQuery) -> Self {
        Self { s: q.s().to_string(), t: q.t().to_string(), b: q.b().to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub schema_version: u32,
    pub query: QueryEcho,
    #[serde(rename = "N")]
    pub n: u64,
    pub c_bracket: [f64; 2],
    pub constant_m_max: u64,
    pub prediction: f64,
    pub rel_dev: f64,
}

/// Count `N_{s,t}(B)` and compare with `c B^{3/t}`, `c` bracketed at `m_max`.
pub fn count_report(query: &CountQuery, m_max: u64) -> Result<CountReport> {
    let n = count_nst::<i128>(query);
    let c = constant_c(query.s_f64() / query.t_f64(), m_max)?;
    let prediction = c.mid() * query.b_f64().powf(3.0 / query.t_f64());
    Ok(CountReport {
        schema_version: SCHEMA_VERSION,
        query: query.into(),
        n,
        c_bracket: [c.low(), c.high()],
        constant_m_max: m_max,
        prediction,
        rel_dev: n as f64 / prediction - 1.0,
    })
}

impl CountReport {
    pub const CSV_HEADER: [&'static str; 9] = ["s", "t", "B", "N", "c_low", "c_high", "constant_m_max", "prediction", "rel_dev"];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.query.s.clone(),
            self.query.t.clone(),
            self.query.b.clone(),
            self.n.to_string(),
            format_float(self.c_bracket[0]),
            format_float(self.c_bracket[1]),
            self.constant_m_max.to_string(),
            format_float(self.prediction),
            format_float(self.rel_dev),
        ]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstantReport {
    pub schema_version: u32,
    #[serde(flatten)]
    pub estimate: ConstantEstimate,
    pub low: f64,
    pub high: f64,
}

impl From<ConstantEstimate> for ConstantReport {
    fn from(estimate: ConstantEstimate) -> Self {
        Self { schema_version: SCHEMA_VERSION, low: estimate.low(), high: estimate.high(), estimate }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LeReport {
    pub schema_version: u32,
    /// the height bounded by `B`: `H_Le` or `H_Le^3`
    pub height: &'static str,
    #[serde(rename = "B")]
    pub b: f64,
    pub split: u64,
    pub nonsplit: u64,
    pub total: u64,
    /// `total / (c B log B)`
    pub ratio: f64,
}

impl LeReport {
    pub fn new(c: LeCount, anticanonical: bool) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            height: if anticanonical { "H_Le^3" } else { "H_Le" },
            b: c.b,
            split: c.split,
            nonsplit: c.nonsplit,
            total: c.total,
            ratio: c.ratio_to(c.b),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InspectReport {
    pub schema_version: u32,
    pub ell: [String; 3],
    pub qbar: [String; 3],
    pub q_lift: [String; 6],
    #[serde(rename = "covol2_I1")]
    pub covol2_i1: String,
    #[serde(rename = "covol2_I2")]
    pub covol2_i2: String,
    #[serde(rename = "H1")]
    pub h1: f64,
    #[serde(rename = "H2")]
    pub h2: f64,
    pub class: &'static str,
    pub disc: String,
    /// exact when rational, otherwise 17 significant digits
    #[serde(rename = "H_Le")]
    pub h_le: String,
    #[serde(rename = "H_Le_squared")]
    pub h_le_squared: String,
    pub disc_ratio: String,
}

pub fn inspect<T: Scalar>(z: &HilbPoint<T>) -> InspectReport {
    let s = |x: &T| x.to_string();
    let le = le_height(z);
    InspectReport {
        schema_version: SCHEMA_VERSION,
        ell: z.ell().coeffs().map(|x| x.to_string()),
        qbar: std::array::from_fn(|i| s(&z.qbar()[i])),
        q_lift: std::array::from_fn(|i| s(&z.q_lift()[i])),
        covol2_i1: z.covol2_i1().to_string(),
        covol2_i2: z.covol2_i2().to_string(),
        h1: height_e(z, 1),
        h2: height_e(z, 2),
        class: classify(z).name(),
        disc: discriminant(z).to_string(),
        h_le: le.exact().map(|h| h.to_string()).unwrap_or_else(|| format_float(le.value())),
        h_le_squared: le.squared.to_string(),
        disc_ratio: disc_ratio(z).to_string(),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<S: Serialize>(value: &S) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialises");
    s.push('\n');
    s
}
