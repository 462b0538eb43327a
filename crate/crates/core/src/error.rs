//! Error type shared across the crate.

use std::fmt;

use crate::signature::RingKind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaError {
    /// Algebra dimension 2^n < 4: no square roots of -1 to study.
    DimensionTooSmall { p: u32, q: u32 },
    /// n exceeds the configured limit (default 12).
    DimensionLimit { n: u32, max: u32 },
    /// Operands belong to different algebras.
    SignatureMismatch,
    /// Blade mask references a generator index outside 1..=n.
    BladeOutOfRange { mask: u16, n: u32 },
    /// Spec requested for an algebra whose center is just the scalars (n even).
    CenterTooSmall,
    /// The element does not square to -1.
    NotARoot,
    /// The element is not idempotent.
    NotIdempotent,
    /// Class index k out of range for the algebra.
    InvalidClassIndex { k: i64, d: u32 },
    /// Operation restricted to certain associated rings.
    UnsupportedRing {
        ring: RingKind,
        needed: &'static str,
    },
    /// Operation only defined for specific signatures (d = 1 component labels, n = 2 manifolds).
    UnsupportedSignature(&'static str),
    /// Idempotent search could not assemble a commuting blade family. Indicates
    /// an internal inconsistency; must not happen for valid signatures.
    NoCommutingFamily { p: u32, q: u32 },
    /// Linear system has no solution (e.g. reconstructing a matrix outside the image span).
    SingularSystem,
    /// An exact cross-check failed; carries a diagnostic.
    Inconsistency(String),
    /// Multivector literal or golden-table syntax error.
    Parse(String),
}

impl fmt::Display for GaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaError::DimensionTooSmall { p, q } => {
                write!(
                    f,
                    "Cl({p},{q}) has dimension < 4; only algebras of dimension >= 4 are supported"
                )
            }
            GaError::DimensionLimit { n, max } => {
                write!(f, "n = {n} exceeds the configured limit {max}")
            }
            GaError::SignatureMismatch => write!(f, "operands have different signatures"),
            GaError::BladeOutOfRange { mask, n } => {
                write!(f, "blade mask {mask:#b} uses generators beyond e{n}")
            }
            GaError::CenterTooSmall => {
                write!(f, "Spec is undefined: the center is trivial for even n")
            }
            GaError::NotARoot => write!(f, "element does not square to -1"),
            GaError::NotIdempotent => write!(f, "element is not idempotent"),
            GaError::InvalidClassIndex { k, d } => {
                write!(
                    f,
                    "class index k = {k} invalid (|k| <= {d} required, 0 outside ring C)"
                )
            }
            GaError::UnsupportedRing { ring, needed } => {
                write!(f, "operation requires associated ring {needed}, got {ring}")
            }
            GaError::UnsupportedSignature(what) => write!(f, "unsupported signature: {what}"),
            GaError::NoCommutingFamily { p, q } => {
                write!(
                    f,
                    "no commuting idempotent blade family found for Cl({p},{q})"
                )
            }
            GaError::SingularSystem => write!(f, "linear system has no solution"),
            GaError::Inconsistency(msg) => write!(f, "exact cross-check failed: {msg}"),
            GaError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for GaError {}

pub type Result<T> = std::result::Result<T, GaError>;
