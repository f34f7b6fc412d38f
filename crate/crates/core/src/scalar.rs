use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Integer type the library computes with.
///
/// Blanket-implemented for every type with the listed capabilities, so
/// `BigInt`, `i64` and `i128` all qualify.
pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_index(k: usize) -> Self {
        Self::from_usize(k).expect("index fits the scalar type")
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Reduced fraction; `Ratio::new` normalises on construction.
pub type Rational<T> = Ratio<T>;

pub(crate) fn in_unit_interval<T: Scalar>(x: &Rational<T>) -> bool {
    !x.is_negative() && x.numer() < x.denom()
}

pub(crate) fn check_unit_interval<T: Scalar>(x: &Rational<T>) -> crate::Result<()> {
    if in_unit_interval(x) {
        Ok(())
    } else {
        Err(crate::Error::OutOfDomain {
            value: x.to_string(),
            domain: "[0, 1)",
        })
    }
}

pub(crate) fn check_open_unit_interval<T: Scalar>(x: &Rational<T>) -> crate::Result<()> {
    if in_unit_interval(x) && !x.numer().is_zero() {
        Ok(())
    } else {
        Err(crate::Error::OutOfDomain {
            value: x.to_string(),
            domain: "(0, 1)",
        })
    }
}

/// Renders a fraction as `num/den`, keeping the `/1` for integers.
pub fn format_rational<T: Scalar>(x: &Rational<T>) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
