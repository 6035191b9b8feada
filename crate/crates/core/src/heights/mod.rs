// SPDX-License-Identifier: Apache-2.0

//! Heights, restriction of `q` to the line `l = 0`, classification and
//! discriminants.

mod binary;
mod height;
mod nonsplit;
mod split;

pub use binary::{
    classify, discriminant, restrict_to_line, restrict_with_basis, BinaryQuadraticForm, PointClass,
};
pub use height::{
    disc_ratio, height_e, height_e_sq, height_st, le_anticanonical_ratio, le_height, ExactHeight,
};
pub use nonsplit::{
    disc_nonsplit, fundamental_decomposition, ideal_norm, maximal_order_norm, nonsplit_params,
    NonsplitParams,
};
pub use split::{disc_split_gcd, split_solutions, SplitSolutions};
