//! Finer structure of Cantor expansions: numbers with two representations,
//! eventually constant shift orbits, fixed points of the shift, and
//! regrouping of digit blocks.

mod dual;
mod fixed;
mod regroup;
mod shift;

pub use dual::{
    convert_dual, dual_representation, CofiniteExpansion, Decision, DualForm,
    DualRepresentationReport,
};
pub use fixed::{
    fixed_points, fixed_points_from, FixedPointCandidate, FixedPointDigits, FixedPointReport,
};
pub use regroup::{regroup, Breakpoints, RegroupOutcome, Regrouping};
pub use shift::{shift_constant_check, ShiftConstantReport};
