//! Hypothesis checks for the two positivity theorems and exact replays of
//! the inequality chains in their proofs.
//!
//! Geometric conclusions (coverings by rational varieties or projective
//! spaces, bounds on chain lengths) cannot be verified on scalars; a passed
//! hypothesis is reported with the flags the theorem statement entails.
//! Side conditions about degree-1 curves are facts about the manifold the
//! scalar model cannot see, so the caller asserts them via [`Assumptions`].

mod certificate;
mod hypothesis;

pub use self::certificate::{
    build_certificate, proof_trace_thm4, proof_trace_thm5, Bound, Certificate, CertificateLevel,
    Comparison, Quantity, TraceMode,
};
pub use self::hypothesis::{
    check, check_thm4, check_thm5, max_m, threshold, Assumptions, Conclusion, HypothesisReport,
    KMargin, Theorem,
};
