//! Eventually constant shift orbits.
//!
//! `σⁿ(x) = c` for every `n ≥ n₀` holds iff `ε_n / (q_n − 1) = c` for every
//! `n > n₀`. The report checks the digit ratios and, independently, the shift
//! values themselves over a finite window.

use crate::error::Result;
use crate::expansion::ShiftOrbit;
use crate::foundation::QSequence;
use crate::scalar::{check_unit_interval, Rational, Scalar};
use crate::value::SeriesValue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftConstantReport<T: Scalar> {
    /// Every digit ratio in the window equals `σ^{from}(x)`.
    pub holds: bool,
    pub from: usize,
    /// `σ^{from}(x)`.
    pub constant: Rational<T>,
    /// `(n, ε_n, q_n)` for `from < n ≤ from + horizon`.
    pub ratio_witnesses: Vec<(usize, T, T)>,
    /// First position whose ratio differs from the constant.
    pub first_violation: Option<usize>,
    /// `σⁿ(x) = σ^{from}(x)` for `from ≤ n ≤ from + horizon`.
    pub shift_values_constant: bool,
    pub horizon: usize,
    /// The verdict extends to every `n > from`: either a violation was found
    /// or the window covers a full recurrence of (shift value, base phase).
    pub conclusive: bool,
}

/// Steps after which the pair (σⁿ, phase of q) must have repeated, for list
/// sequences and denominator `v`.
fn recurrence_horizon<T: Scalar>(q: &QSequence<T>, from: usize, v: &T) -> Option<usize> {
    let len = q.period_len()?;
    let states = v.to_usize()?.checked_mul(len)?;
    from.max(q.preperiod_len())
        .checked_add(states)
        .map(|s| s - from)
}

pub fn shift_constant_check<T: Scalar>(
    x: &SeriesValue<T>,
    q: &QSequence<T>,
    from: usize,
    horizon: usize,
) -> Result<ShiftConstantReport<T>> {
    let x = x.resolve(q)?;
    check_unit_interval(&x)?;
    let mut orbit = ShiftOrbit::new(x.clone(), q)?;
    let constant = if from == 0 {
        x.clone()
    } else {
        orbit
            .by_ref()
            .nth(from - 1)
            .expect("orbit is infinite")
            .1
            .value
    };

    let mut ratio_witnesses = Vec::with_capacity(horizon);
    let mut first_violation = None;
    let mut shift_values_constant = true;
    for (digit, state) in orbit.take(horizon) {
        let n = state.step;
        let base = q.q_at(n);
        let ratio = Rational::new(digit.clone(), base.clone() - T::one());
        if first_violation.is_none() && ratio != constant {
            first_violation = Some(n);
        }
        shift_values_constant &= state.value == constant;
        ratio_witnesses.push((n, digit, base));
    }
    let holds = first_violation.is_none();
    let conclusive =
        !holds || recurrence_horizon(q, from, x.denom()).is_some_and(|needed| horizon >= needed);
    Ok(ShiftConstantReport {
        holds,
        from,
        constant,
        ratio_witnesses,
        first_violation,
        shift_values_constant,
        horizon,
        conclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::parse_qseq;
    use num_bigint::BigInt;

    fn q(text: &str) -> QSequence<BigInt> {
        parse_qseq(text).unwrap()
    }

    fn rat(n: i64, d: i64) -> SeriesValue<BigInt> {
        SeriesValue::Rational(Rational::new(n.into(), d.into()))
    }

    #[test]
    fn odd_rule_half_is_constant() {
        let report = shift_constant_check(&rat(1, 2), &q("rule:odd"), 0, 20).unwrap();
        assert!(report.holds && report.shift_values_constant);
        assert_eq!(report.constant, Rational::new(1.into(), 2.into()));
        assert_eq!(report.ratio_witnesses.len(), 20);
        for (n, digit, base) in &report.ratio_witnesses {
            // ε_n = n, q_n − 1 = 2n
            assert_eq!(*digit, BigInt::from(*n));
            assert_eq!(*base, BigInt::from(2 * n + 1));
        }
        assert!(!report.conclusive);
    }

    #[test]
    fn zero_is_constant_everywhere() {
        for text in ["const:2", "periodic:5,2,7", "rule:odd"] {
            let report = shift_constant_check(&rat(0, 1), &q(text), 0, 10).unwrap();
            assert!(report.holds);
            assert_eq!(report.constant, Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn terminating_tail_is_constant_after_its_end() {
        let qs = q("periodic:2,3");
        let report = shift_constant_check(&rat(5, 6), &qs, 2, 10).unwrap();
        assert!(report.holds && !report.conclusive);
        assert_eq!(report.constant, Rational::from_integer(0.into()));
        // v = 6 over a period of 2 needs 12 steps
        assert!(
            shift_constant_check(&rat(5, 6), &qs, 2, 12)
                .unwrap()
                .conclusive
        );

        let report = shift_constant_check(&rat(5, 6), &qs, 0, 10).unwrap();
        assert!(!report.holds && !report.shift_values_constant);
        assert_eq!(report.first_violation, Some(1));
        assert!(report.conclusive);
    }

    #[test]
    fn block_inputs_resolve() {
        let block: SeriesValue<BigInt> = "block:|1".parse().unwrap();
        let report = shift_constant_check(&block, &q("rule:odd"), 3, 5).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn conclusive_needs_a_full_recurrence() {
        // v = 3, period 1: three steps suffice
        let qs = q("const:10");
        assert!(
            !shift_constant_check(&rat(1, 3), &qs, 0, 2)
                .unwrap()
                .conclusive
        );
        assert!(
            shift_constant_check(&rat(1, 3), &qs, 0, 3)
                .unwrap()
                .conclusive
        );
    }

    #[test]
    fn out_of_domain_is_rejected() {
        assert!(shift_constant_check(&rat(4, 3), &q("const:10"), 0, 3).is_err());
    }
}
