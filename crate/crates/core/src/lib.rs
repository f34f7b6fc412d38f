//! Exact Cantor series over arbitrary base sequences.
//!
//! A Cantor series writes a number `x` in `[0, 1)` as
//! `ε₁/q₁ + ε₂/(q₁q₂) + ε₃/(q₁q₂q₃) + …` with digits `0 ≤ ε_k < q_k` over a
//! fixed base sequence `Q = (q_k)`, `q_k ≥ 2`.
//!
//! Digits come from the shift operator `σ(x) = q₁x − ε₁` ([`expand`]).
//! A rational `x` has a shift orbit that revisits a value; [`certify_rational`]
//! finds the first repeat and [`reconstruct`] goes back from digits to `x`.
//! The [`structure`] module covers numbers with two expansions, numbers fixed
//! by the shift and regrouping of digit blocks.
//!
//! Everything is exact. The library is generic over the integer scalar
//! ([`Scalar`]); the aliases at the crate root fix it to [`BigInt`], which is
//! what callers normally want. Fixed-width instantiations (`i64`, `i128`)
//! work for small inputs but panic on overflow in debug builds.

pub mod error;
pub mod expansion;
pub mod foundation;
pub mod rationality;
pub mod scalar;
pub mod structure;
pub mod value;

pub use error::{Error, Result};
pub use expansion::{
    enclosure, evaluate_finite, expand, shift_step, DigitWord, Enclosure, Expansion, ShiftOrbit,
    ShiftState,
};
pub use foundation::{parse_qseq, q_at, tail_min, QKind, QSequence, Rule, TailMin};
pub use rationality::{
    certify_rational, reconstruct, tail_identity_sides, tails_equal, verify_certificate,
    BlockDescription, CertificateCheck, RationalityCertificate, RejectReason,
};
pub use scalar::{Rational, Scalar};
pub use structure::{
    convert_dual, dual_representation, fixed_points, fixed_points_from, regroup,
    shift_constant_check, Breakpoints, CofiniteExpansion, Decision, DualForm,
    DualRepresentationReport, FixedPointCandidate, FixedPointDigits, FixedPointReport,
    RegroupOutcome, Regrouping, ShiftConstantReport,
};
pub use value::SeriesValue;

pub use num_bigint::BigInt;

/// Exact fraction over arbitrary-precision integers.
pub type BigRational = Rational<BigInt>;
pub type BigQSequence = QSequence<BigInt>;
pub type BigDigitWord = DigitWord<BigInt>;
pub type BigShiftState = ShiftState<BigInt>;
pub type BigCertificate = RationalityCertificate<BigInt>;
pub type BigBlockDescription = BlockDescription<BigInt>;
pub type BigCofinite = CofiniteExpansion<BigInt>;
pub type BigSeriesValue = SeriesValue<BigInt>;
