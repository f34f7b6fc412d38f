//! Rationality certificates.
//!
//! `x` is rational exactly when its shift orbit revisits a value:
//! `σⁿ(x) = σⁿ⁺ᵐ(x)` for some `n ≥ 0`, `m ≥ 1`. For `x = u/v` the orbit lives
//! in `{0/v, …, (v-1)/v}`, so a repeat shows up within `v` steps. Conversely
//! a recurring shift value pins `x` down: with `P = q_{n+1}…q_{n+m}` and `S`
//! the value of the block digits `ε_{n+1}…ε_{n+m}` read from position `n+1`,
//!
//! ```text
//! σⁿ(x) = S · P / (P − 1)
//! ```
//!
//! and `x` follows from the preperiod digits. Clearing denominators gives the
//! divisibility witness `v | q₁…q_n (P − 1)`.
//!
//! The recurrence is of values only. Digits past the block depend on the
//! bases as well and need not repeat it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expansion::{evaluate_finite, expand, word_value, DigitWord, ShiftOrbit};
use crate::foundation::QSequence;
use crate::scalar::{check_unit_interval, Rational, Scalar};

/// Witness that `σⁿ(x) = σⁿ⁺ᵐ(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityCertificate<T: Scalar> {
    pub n: usize,
    pub m: usize,
    /// The common value `σⁿ(x) = σⁿ⁺ᵐ(x)`.
    pub sigma_value: Rational<T>,
    /// `P = q_{n+1}…q_{n+m}`.
    pub block_product: T,
}

/// Why [`verify_certificate`] rejected a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    OutOfDomain,
    ZeroPeriod,
    ShiftMismatch,
    SigmaValueMismatch,
    BlockProductMismatch,
    DivisibilityFails,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::OutOfDomain => "out-of-domain",
            RejectReason::ZeroPeriod => "zero-period",
            RejectReason::ShiftMismatch => "shift-mismatch",
            RejectReason::SigmaValueMismatch => "sigma-value-mismatch",
            RejectReason::BlockProductMismatch => "block-product-mismatch",
            RejectReason::DivisibilityFails => "divisibility-fails",
        }
    }
}

/// Outcome of [`verify_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck<T> {
    pub reason: Option<RejectReason>,
    /// `q₁…q_n (P − 1)` recomputed from the base sequence, when `m ≥ 1`.
    pub witness: Option<T>,
}

impl<T> CertificateCheck<T> {
    pub fn is_valid(&self) -> bool {
        self.reason.is_none()
    }
}

/// First shift-value repeat in the orbit of `x`.
///
/// Scans `σ⁰, σ¹, …` recording the step each value is first seen at and stops
/// at the first value seen before; `n` is that earlier step and `m` the gap.
/// This minimises `n + m`.
pub fn certify_rational<T: Scalar>(
    x: &Rational<T>,
    q: &QSequence<T>,
) -> Result<RationalityCertificate<T>> {
    let orbit = ShiftOrbit::new(x.clone(), q)?;
    let mut first_seen: HashMap<Rational<T>, usize> = HashMap::new();
    first_seen.insert(x.clone(), 0);
    for (_, state) in orbit {
        if let Some(&n) = first_seen.get(&state.value) {
            let m = state.step - n;
            return Ok(RationalityCertificate {
                n,
                m,
                block_product: q.product(n + 1, n + m),
                sigma_value: state.value,
            });
        }
        first_seen.insert(state.value, state.step);
    }
    unreachable!("shift orbits are infinite")
}

fn shift_values<T: Scalar>(x: &Rational<T>, q: &QSequence<T>, steps: &[usize]) -> Vec<Rational<T>> {
    let last = steps.iter().copied().max().unwrap_or(0);
    let mut values = vec![x.clone()];
    values.extend(
        ShiftOrbit::new(x.clone(), q)
            .expect("caller checked the domain")
            .take(last)
            .map(|(_, s)| s.value),
    );
    steps.iter().map(|&s| values[s].clone()).collect()
}

/// Re-derives a certificate from scratch. Non-minimal pairs are accepted.
pub fn verify_certificate<T: Scalar>(
    x: &Rational<T>,
    q: &QSequence<T>,
    cert: &RationalityCertificate<T>,
) -> CertificateCheck<T> {
    let reject = |reason, witness| CertificateCheck {
        reason: Some(reason),
        witness,
    };
    if check_unit_interval(x).is_err() {
        return reject(RejectReason::OutOfDomain, None);
    }
    if cert.m == 0 {
        return reject(RejectReason::ZeroPeriod, None);
    }
    let block_product = q.product(cert.n + 1, cert.n + cert.m);
    let witness = q.product(1, cert.n) * (block_product.clone() - T::one());
    let values = shift_values(x, q, &[cert.n, cert.n + cert.m]);
    let reason = if values[0] != values[1] {
        Some(RejectReason::ShiftMismatch)
    } else if values[0] != cert.sigma_value {
        Some(RejectReason::SigmaValueMismatch)
    } else if block_product != cert.block_product {
        Some(RejectReason::BlockProductMismatch)
    } else if !(witness.clone() % x.denom().clone()).is_zero() {
        Some(RejectReason::DivisibilityFails)
    } else {
        None
    };
    CertificateCheck {
        reason,
        witness: Some(witness),
    }
}

/// Preperiod digits `ε₁…ε_n` followed by a block `ε_{n+1}…ε_{n+m}` after
/// which the shift value recurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDescription<T> {
    preperiod: DigitWord<T>,
    block: DigitWord<T>,
}

impl<T: Scalar> BlockDescription<T> {
    pub fn new(preperiod: Vec<T>, block: Vec<T>) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let start = preperiod.len() + 1;
        Ok(Self {
            preperiod: DigitWord::from_digits(preperiod),
            block: DigitWord::new(start, block),
        })
    }

    /// Reads preperiod and block off the greedy expansion of `x`.
    pub fn from_certificate(
        x: &Rational<T>,
        q: &QSequence<T>,
        cert: &RationalityCertificate<T>,
    ) -> Result<Self> {
        let mut digits = expand(x, q, cert.n + cert.m)?.digits.into_digits();
        let block = digits.split_off(cert.n);
        Self::new(digits, block)
    }

    pub fn preperiod(&self) -> &DigitWord<T> {
        &self.preperiod
    }

    pub fn block(&self) -> &DigitWord<T> {
        &self.block
    }

    pub fn n(&self) -> usize {
        self.preperiod.len()
    }

    pub fn m(&self) -> usize {
        self.block.len()
    }

    pub fn validate(&self, q: &QSequence<T>) -> Result<()> {
        self.preperiod.validate(q)?;
        self.block.validate(q)?;
        if self.block.is_all_maximal(q) {
            return Err(Error::MaximalBlock);
        }
        Ok(())
    }

    /// The recurring shift value `σⁿ = S·P/(P − 1)`.
    pub fn recurring_value(&self, q: &QSequence<T>) -> Result<Rational<T>> {
        self.validate(q)?;
        let block_value = word_value(&self.block, q)?;
        let p = q.product(self.block.start(), self.block.end());
        Ok(block_value * Rational::new(p.clone(), p - T::one()))
    }
}

/// Rebuilds `x` from its preperiod and recurring block.
pub fn reconstruct<T: Scalar>(desc: &BlockDescription<T>, q: &QSequence<T>) -> Result<Rational<T>> {
    let sigma = desc.recurring_value(q)?;
    let head = evaluate_finite(desc.preperiod(), q)?;
    Ok(head + sigma / Rational::from_integer(q.product(1, desc.n())))
}

/// `σⁿ(x) = σⁿ⁺ᵐ(x)`, compared exactly.
pub fn tails_equal<T: Scalar>(
    x: &Rational<T>,
    q: &QSequence<T>,
    n: usize,
    m: usize,
) -> Result<bool> {
    check_unit_interval(x)?;
    let values = shift_values(x, q, &[n, n + m]);
    Ok(values[0] == values[1])
}

/// Both sides of the tail identity
///
/// ```text
/// Δ_{0ⁿ ε_{n+1} …} = q_{n+1}…q_{n+m} · Δ_{0ⁿ⁺ᵐ ε_{n+m+1} …}
/// ```
///
/// where `Δ_{0ᵏ ε_{k+1} …}` is `x` with its first `k` digits zeroed, i.e.
/// `x` minus its `k`-digit partial sum. The sides agree iff
/// [`tails_equal`] holds.
pub fn tail_identity_sides<T: Scalar>(
    x: &Rational<T>,
    q: &QSequence<T>,
    n: usize,
    m: usize,
) -> Result<(Rational<T>, Rational<T>)> {
    let digits = expand(x, q, n + m)?.digits.into_digits();
    let zeroed_head = |k: usize| -> Result<Rational<T>> {
        let head = evaluate_finite(&DigitWord::from_digits(digits[..k].to_vec()), q)?;
        Ok(x.clone() - head)
    };
    let lhs = zeroed_head(n)?;
    let rhs = zeroed_head(n + m)? * Rational::from_integer(q.product(n + 1, n + m));
    Ok((lhs, rhs))
}
