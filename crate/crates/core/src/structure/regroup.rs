//! Regrouping digit blocks into a coarser Cantor series.
//!
//! Given breakpoints `n₁ < n₂ < …`, block `k` collects the digits at
//! positions `n_k + 1 ..= n_{k+1}` into one digit
//! `λ_k = ε_{n_k+1} q_{n_k+2}…q_{n_{k+1}} + … + ε_{n_{k+1}}` over the base
//! `μ_k + 1 = q_{n_k+1}…q_{n_{k+1}}`. Then
//! `x = Σ_{j ≤ n₁} ε_j/(q₁…q_j) + x′/(q₁…q_{n₁})` with
//! `x′ = Σ_k λ_k/((μ₁+1)…(μ_k+1))`.

use crate::error::{Error, Result};
use crate::expansion::{evaluate_finite, expand, DigitWord, ShiftState};
use crate::foundation::QSequence;
use crate::scalar::{check_unit_interval, Rational, Scalar};
use crate::value::SeriesValue;

/// The breakpoint sequence `(n_k)`. `n₁ = 0` is allowed and means the first
/// block starts at position 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Breakpoints {
    Explicit(Vec<usize>),
    /// `n_k = start + (k − 1)·step`.
    Stride {
        start: usize,
        step: usize,
    },
}

impl Breakpoints {
    /// `n₁ … n_{count+1}`, the boundaries of `count` blocks.
    pub fn points(&self, count: usize) -> Result<Vec<usize>> {
        let points = match self {
            Breakpoints::Explicit(points) => {
                if points.len() < count + 1 {
                    return Err(Error::InvalidBreakpoints(format!(
                        "{count} blocks need {} breakpoints, got {}",
                        count + 1,
                        points.len()
                    )));
                }
                points[..=count].to_vec()
            }
            Breakpoints::Stride { start, step } => {
                if *step == 0 {
                    return Err(Error::InvalidBreakpoints("stride must be positive".into()));
                }
                (0..=count).map(|k| start + k * step).collect()
            }
        };
        if let Some(w) = points.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidBreakpoints(format!(
                "not strictly increasing at {} → {}",
                w[0], w[1]
            )));
        }
        Ok(points)
    }
}

/// Per-block data and the two conditions characterising constant
/// `σ^{n_k}` along the breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regrouping<T> {
    pub breakpoints: Vec<usize>,
    /// `(λ_k, μ_k)`.
    pub blocks: Vec<(T, T)>,
    /// `min_k μ_k`.
    pub mu: T,
    /// `λ` at the first block attaining `mu`.
    pub lambda: T,
    /// `λ_k / μ_k` is the same for every block.
    pub ratio_constant: bool,
    /// `λ_k = (μ_k / μ) λ` for every block.
    pub proportional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegroupOutcome<T: Scalar> {
    /// Digits at positions `1..=n₁`, kept as they are.
    pub head: DigitWord<T>,
    /// `μ_k + 1` for each block.
    pub qprime: Vec<T>,
    /// `λ_k` for each block.
    pub digits: DigitWord<T>,
    /// `σ^{n_{count+1}}(x)`, the part of `x` past the last block.
    pub carry: ShiftState<T>,
    pub report: Regrouping<T>,
}

impl<T: Scalar> RegroupOutcome<T> {
    /// `x′` truncated after the computed blocks, plus the carried shift value.
    pub fn regrouped_value(&self) -> Rational<T> {
        let mut value = self.carry.value.clone();
        for (lambda, base) in self.digits.digits().iter().zip(&self.qprime).rev() {
            value = (value + Rational::from_integer(lambda.clone()))
                / Rational::from_integer(base.clone());
        }
        value
    }

    /// Reassembles `x` from the head, the regrouped digits and the carry.
    pub fn value(&self, q: &QSequence<T>) -> Result<Rational<T>> {
        let head = evaluate_finite(&self.head, q)?;
        let scale = Rational::from_integer(q.product(1, self.head.len()));
        Ok(head + self.regrouped_value() / scale)
    }
}

pub fn regroup<T: Scalar>(
    x: &SeriesValue<T>,
    q: &QSequence<T>,
    breakpoints: &Breakpoints,
    count: usize,
) -> Result<RegroupOutcome<T>> {
    if count == 0 {
        return Err(Error::InvalidBreakpoints(
            "at least one block is required".into(),
        ));
    }
    let points = breakpoints.points(count)?;
    let x = x.resolve(q)?;
    check_unit_interval(&x)?;
    let expansion = expand(&x, q, points[count])?;
    let eps = expansion.digits.digits();

    let mut blocks = Vec::with_capacity(count);
    for w in points.windows(2) {
        let mut lambda = T::zero();
        let mut base = T::one();
        for k in w[0] + 1..=w[1] {
            let qk = q.q_at(k);
            lambda = lambda * qk.clone() + eps[k - 1].clone();
            base = base * qk;
        }
        blocks.push((lambda, base - T::one()));
    }

    let (lambda, mu) = blocks
        .iter()
        .min_by(|a, b| a.1.cmp(&b.1))
        .cloned()
        .expect("at least one block");
    let (l1, m1) = &blocks[0];
    let ratio_constant = blocks
        .iter()
        .all(|(l, m)| l.clone() * m1.clone() == l1.clone() * m.clone());
    let proportional = blocks
        .iter()
        .all(|(l, m)| l.clone() * mu.clone() == m.clone() * lambda.clone());

    Ok(RegroupOutcome {
        head: DigitWord::from_digits(eps[..points[0]].to_vec()),
        qprime: blocks.iter().map(|(_, m)| m.clone() + T::one()).collect(),
        digits: DigitWord::from_digits(blocks.iter().map(|(l, _)| l.clone()).collect()),
        carry: expansion.state,
        report: Regrouping {
            breakpoints: points,
            blocks,
            mu,
            lambda,
            ratio_constant,
            proportional,
        },
    })
}
