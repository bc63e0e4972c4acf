use alloc::string::String;
use core::fmt;

use crate::exact::Rational;

/// Errors raised by the exact core.
///
/// Mathematical failures that are part of a normal answer (a failed
/// hypothesis, a non-Fano chain member) are reported in the returned
/// values; these variants cover inputs outside an operation's domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `e_l` was requested over fewer than `l` values.
    SymmetricDegree { degree: usize, len: usize },
    /// A coefficient index lies outside `1 <= i`, `1 <= j`, `1 <= k <= bound`.
    CoeffIndex {
        i: usize,
        j: usize,
        k: usize,
        bound: usize,
    },
    /// The coefficient table was built too small for this lookup.
    OutsideTable { i: usize, j: usize },
    /// Generating polynomials exist only for `j` in `{1, 2}`.
    UnsupportedDegree { j: usize },
    /// `r_1 * a` is not an integer, so the model is inconsistent.
    NonIntegralDimension { value: Rational },
    /// The formula for the descended vector needs `r_needed`, but only
    /// `available` scalars are present.
    InsufficientData { needed: usize, available: usize },
    /// A split vector must carry exactly `dim` scalars.
    DimensionMismatch { dim: usize, scalars: usize },
    /// A direct descent ran out of chain before reaching the requested level.
    ChainTerminated { level: usize, family_dim: i64 },
    /// Positive integer argument was zero.
    Zero { what: &'static str },
    /// Catalogue parameters are out of range.
    InvalidParameters(String),
    /// The starting manifold of a chain is not Fano (`r_1 <= 0`).
    NotFano,
    /// A checker was asked for `m` larger than the dimension.
    OrderExceedsDimension { m: usize, dim: usize },
    /// A proof trace was requested for inputs failing the hypothesis.
    HypothesisFailed { first_k: usize, margin: Rational },
    /// A certificate quantity failed its threshold or the two evaluation
    /// routes disagreed.
    CertificateFailure {
        level: usize,
        quantity: &'static str,
        detail: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SymmetricDegree { degree, len } => {
                write!(f, "elementary symmetric degree {degree} exceeds {len} values")
            }
            Error::CoeffIndex { i, j, k, bound } => {
                write!(f, "b({i},{j},{k}) is undefined: need i, j >= 1 and 1 <= k <= {bound}")
            }
            Error::OutsideTable { i, j } => {
                write!(f, "coefficient table does not cover i = {i}, j = {j}")
            }
            Error::UnsupportedDegree { j } => {
                write!(f, "generating polynomial only exists for j in {{1, 2}}, got {j}")
            }
            Error::NonIntegralDimension { value } => {
                write!(f, "family dimension {value} is not an integer; inconsistent model")
            }
            Error::InsufficientData { needed, available } => {
                write!(f, "descent needs ch_{needed} but only {available} scalars are known")
            }
            Error::DimensionMismatch { dim, scalars } => {
                write!(f, "dimension {dim} but {scalars} scalars supplied")
            }
            Error::ChainTerminated { level, family_dim } => write!(
                f,
                "chain ends at level {level} (family dimension {family_dim}) before the requested depth"
            ),
            Error::Zero { what } => write!(f, "{what} must be positive"),
            Error::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
            Error::NotFano => write!(f, "starting manifold is not Fano (r_1 <= 0)"),
            Error::OrderExceedsDimension { m, dim } => write!(
                f,
                "m = {m} exceeds dimension {dim}: ch_k vanishes for k > dim, so no positive threshold can be met"
            ),
            Error::HypothesisFailed { first_k, margin } => {
                write!(f, "hypothesis fails at k = {first_k} with margin {margin}")
            }
            Error::CertificateFailure { level, quantity, detail } => {
                write!(f, "certificate fails at level {level}, {quantity}: {detail}")
            }
        }
    }
}

impl core::error::Error for Error {}
