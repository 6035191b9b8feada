// SPDX-License-Identifier: Apache-2.0

//! Invariant verification suites with deterministic reports.

mod gon;
mod oracle;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use gon::{gon_sample, reduced_count_primitive};
pub use oracle::{naive_count, naive_fiber_count};

/// Failures kept verbatim in a report; the rest are only counted.
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    SlFormula,
    Minkowski,
    Minima,
    Gon,
    DiscAgreement,
    ZaFamily,
    OracleCount,
    DiscBound,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::SlFormula,
        Suite::Minkowski,
        Suite::Minima,
        Suite::Gon,
        Suite::DiscAgreement,
        Suite::ZaFamily,
        Suite::OracleCount,
        Suite::DiscBound,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SlFormula => "sl-formula",
            Suite::Minkowski => "minkowski",
            Suite::Minima => "minima",
            Suite::Gon => "gon",
            Suite::DiscAgreement => "disc-agreement",
            Suite::ZaFamily => "za-family",
            Suite::OracleCount => "oracle-count",
            Suite::DiscBound => "disc-bound",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite '{s}'")))
    }
}

/// Outcome of one suite run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub seed: u64,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    pub metrics: BTreeMap<String, Value>,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64) -> Self {
        Self {
            schema_version: 1,
            suite: suite.name().to_string(),
            seed,
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            metrics: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(what);
        }
    }

    fn metric(&mut self, key: &str, value: impl Into<Value>) {
        self.metrics.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// Run one suite. Randomised suites draw from a generator seeded by `seed`.
pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(suite, seed);
    match suite {
        Suite::SlFormula => suites::sl_formula(&mut report, 30),
        Suite::Minkowski => suites::minkowski(&mut report, 30),
        Suite::Minima => suites::minima(&mut report, 4, 3),
        Suite::Gon => gon::gon(&mut report, seed),
        Suite::DiscAgreement => suites::disc_agreement(&mut report, 15),
        Suite::ZaFamily => suites::za_family(&mut report, 20),
        Suite::OracleCount => suites::oracle_count(&mut report),
        Suite::DiscBound => suites::disc_bound(&mut report, 15, 30),
    }
    report
}
