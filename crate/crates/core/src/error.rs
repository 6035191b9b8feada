// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank deficient")]
    RankDeficient,
    #[error("zero matrix")]
    ZeroMatrix,
    #[error("not finite index")]
    NotFiniteIndex,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear form must be nonzero")]
    ZeroLinearForm,
    #[error("linear form ({0}) is not primitive and sign-canonical")]
    NonCanonicalForm(String),
    #[error("q in span")]
    QInSpan,
    #[error("non-primitive Λ₂")]
    NonPrimitiveLambda2,
    #[error("point is not {0}")]
    WrongClass(&'static str),
    #[error("exponents s and t must both be positive")]
    NonPositiveExponent,
    #[error("invalid number '{0}'")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
