use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("degree {degree} out of range (valid: {valid})")]
    DegreeOutOfRange { degree: usize, valid: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("simplex index {index} out of range in degree {degree}")]
    IndexOutOfRange { degree: usize, index: usize },

    #[error("not a cycle: residual boundary has l1 norm {residual}")]
    NotACycle { residual: Rational },

    #[error("not a cocycle: residual coboundary has linf norm {residual}")]
    NotACocycle { residual: Rational },

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("subdivision cap of {cap} rounds exceeded before the simplex became small")]
    XiCapExceeded { cap: usize },

    #[error("cochain is not locally zero: value {value} on a small simplex")]
    NotLocallyZero { value: Rational },

    #[error("complex is not a cone over vertex {apex}")]
    NotACone { apex: usize },

    #[error("not a closed pseudomanifold: {0}")]
    NotPseudomanifold(String),

    #[error("pseudomanifold is not orientable")]
    NonOrientable,

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid covering: {0}")]
    InvalidCovering(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {0}")]
    CapExceeded(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
