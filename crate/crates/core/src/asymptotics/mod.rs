// SPDX-License-Identifier: Apache-2.0

//! The asymptotic constant, exact counts against the predicted main term,
//! and Le Rudulier counts.

mod constant;
mod le;
mod report;

pub use constant::{constant_c, ConstantEstimate};
pub use le::{le_count, le_count_anticanonical, le_count_anticanonical_f64, le_count_f64, LeCount};
pub use report::{bm_exponents, convergence_report, ConvergenceReport, ReportRow};

pub use crate::hilb::count_nst;
