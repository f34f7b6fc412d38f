//! The textual number forms accepted across the crate:
//!
//! ```text
//! rat:<num>/<den> | digits:<d1,d2,...> | block:<p1,...|b1,...> | cofinite:<h1,...>
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::expansion::{evaluate_finite, DigitWord};
use crate::foundation::{join, parse_int, parse_list, QSequence};
use crate::rationality::{reconstruct, BlockDescription};
use crate::scalar::{Rational, Scalar};
use crate::structure::CofiniteExpansion;

/// A number in any of the forms the library consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesValue<T: Scalar> {
    Rational(Rational<T>),
    Digits(DigitWord<T>),
    Block(BlockDescription<T>),
    Cofinite(CofiniteExpansion<T>),
}

impl<T: Scalar> SeriesValue<T> {
    /// The exact value under `q`.
    pub fn resolve(&self, q: &QSequence<T>) -> Result<Rational<T>> {
        match self {
            SeriesValue::Rational(x) => Ok(x.clone()),
            SeriesValue::Digits(word) => evaluate_finite(word, q),
            SeriesValue::Block(desc) => reconstruct(desc, q),
            SeriesValue::Cofinite(c) => c.value(q),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (tag, body) = text
            .split_once(':')
            .ok_or_else(|| Error::syntax("number", format!("missing `:` in `{text}`")))?;
        match tag {
            "rat" => {
                let (num, den) = body
                    .split_once('/')
                    .ok_or_else(|| Error::syntax("number", format!("missing `/` in `{body}`")))?;
                let negative = num.starts_with('-');
                let mut num: T = parse_int(num.trim_start_matches('-'))?;
                let den: T = parse_int(den)?;
                if den.is_zero() {
                    return Err(Error::syntax("number", "zero denominator"));
                }
                if negative {
                    num = -num;
                }
                Ok(SeriesValue::Rational(Rational::new(num, den)))
            }
            "digits" => Ok(SeriesValue::Digits(DigitWord::from_digits(parse_list(
                body,
            )?))),
            "block" => {
                let (pre, block) = body
                    .split_once('|')
                    .ok_or_else(|| Error::syntax("number", format!("missing `|` in `{body}`")))?;
                Ok(SeriesValue::Block(BlockDescription::new(
                    parse_list(pre)?,
                    parse_list(block)?,
                )?))
            }
            "cofinite" => Ok(SeriesValue::Cofinite(CofiniteExpansion::new(parse_list(
                body,
            )?)?)),
            other => Err(Error::syntax("number", format!("unknown form `{other}`"))),
        }
    }
}

impl<T: Scalar> FromStr for SeriesValue<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl<T: Scalar> fmt::Display for SeriesValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesValue::Rational(x) => write!(f, "rat:{}/{}", x.numer(), x.denom()),
            SeriesValue::Digits(word) => write!(f, "digits:{word}"),
            SeriesValue::Block(desc) => write!(
                f,
                "block:{}|{}",
                join(desc.preperiod().digits()),
                join(desc.block().digits())
            ),
            SeriesValue::Cofinite(c) => write!(f, "cofinite:{}", c.head()),
        }
    }
}
