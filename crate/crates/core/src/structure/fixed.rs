//! Numbers fixed by the shift.
//!
//! If `σⁿ(x) = x` for all `n`, then `x = ε/(q − 1)` with `q = min q_n` and
//! `ε < q`, which leaves `q` candidates. A candidate is realised iff every
//! digit `ε_n = ε (q_n − 1)/(q − 1)` is an integer. Starting the orbit at
//! `n₀` instead of 0 uses `q₀ = min_{n > n₀} q_n` in the same way.

use crate::error::{Error, Result};
use crate::foundation::{tail_min, QSequence};
use crate::scalar::{Rational, Scalar};

const RULE_SCAN_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointCandidate<T: Scalar> {
    pub epsilon: T,
    /// `ε / (q − 1)`.
    pub value: Rational<T>,
    pub member: bool,
    /// First position `n` where `(q − 1) ∤ ε (q_n − 1)`.
    pub failing_position: Option<usize>,
    /// `ε = q − 1`, whose value 1 lies outside `[0, 1)`.
    pub endpoint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointReport<T: Scalar> {
    pub from: usize,
    /// `min_{n > from} q_n`.
    pub q: T,
    pub candidates: Vec<FixedPointCandidate<T>>,
}

impl<T: Scalar> FixedPointReport<T> {
    pub fn members(&self) -> impl Iterator<Item = &FixedPointCandidate<T>> {
        self.candidates.iter().filter(|c| c.member)
    }

    /// Digit generator `ε_n = ε (q_n − 1)/(q − 1)` for positions `n > from`.
    ///
    /// `None` for candidates that are not members.
    pub fn digits<'q>(
        &self,
        q: &'q QSequence<T>,
        candidate: &FixedPointCandidate<T>,
    ) -> Option<FixedPointDigits<'q, T>> {
        candidate.member.then(|| FixedPointDigits {
            q,
            position: self.from + 1,
            epsilon: candidate.epsilon.clone(),
            divisor: self.q.clone() - T::one(),
        })
    }
}

/// Iterator over the digits of a fixed point, from position `from + 1`.
#[derive(Debug, Clone)]
pub struct FixedPointDigits<'q, T> {
    q: &'q QSequence<T>,
    position: usize,
    epsilon: T,
    divisor: T,
}

impl<T: Scalar> Iterator for FixedPointDigits<'_, T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let scaled = self.epsilon.clone() * (self.q.q_at(self.position) - T::one());
        self.position += 1;
        Some(scaled / self.divisor.clone())
    }
}

pub fn fixed_points<T: Scalar>(q: &QSequence<T>) -> Result<FixedPointReport<T>> {
    fixed_points_from(q, 0)
}

/// Fixed-point candidates for the orbit from step `from` on.
pub fn fixed_points_from<T: Scalar>(q: &QSequence<T>, from: usize) -> Result<FixedPointReport<T>> {
    let qmin = tail_min(q, from)
        .value
        .ok_or_else(|| Error::UndecidableTailMin(q.to_string()))?;
    let divisor = qmin.clone() - T::one();

    // positions that decide membership; rules are settled by their declared
    // decrement gcd and only scanned to locate a failure
    let (scan_end, decrement_gcd) = match q.period_len() {
        Some(len) => (from.max(q.preperiod_len()) + len, None),
        None => {
            let rule = q.as_rule().expect("non-list sequences are rules");
            let g = T::from_u64(rule.decrement_gcd()).expect("small gcd fits");
            (from + RULE_SCAN_LIMIT, Some(g))
        }
    };
    let fails_at =
        |eps: &T, n: usize| !(eps.clone() * (q.q_at(n) - T::one())).is_multiple_of(&divisor);

    let mut candidates = Vec::new();
    let mut eps = T::zero();
    while eps < qmin {
        let member = match &decrement_gcd {
            Some(g) => (eps.clone() * g.clone()).is_multiple_of(&divisor),
            None => !(from + 1..=scan_end).any(|n| fails_at(&eps, n)),
        };
        let failing_position = if member {
            None
        } else {
            (from + 1..=scan_end).find(|&n| fails_at(&eps, n))
        };
        candidates.push(FixedPointCandidate {
            value: Rational::new(eps.clone(), divisor.clone()),
            endpoint: eps == divisor,
            epsilon: eps.clone(),
            member,
            failing_position,
        });
        eps = eps + T::one();
    }
    Ok(FixedPointReport {
        from,
        q: qmin,
        candidates,
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

    fn summary(report: &FixedPointReport<BigInt>) -> Vec<(String, bool)> {
        report
            .candidates
            .iter()
            .map(|c| (c.value.to_string(), c.member))
            .collect()
    }

    fn owned(items: &[(&str, bool)]) -> Vec<(String, bool)> {
        items.iter().map(|(s, b)| (s.to_string(), *b)).collect()
    }

    #[test]
    fn fixed_point_examples() {
        let r = fixed_points(&q("periodic:3,5")).unwrap();
        assert_eq!(r.q, BigInt::from(3));
        assert_eq!(
            summary(&r),
            owned(&[("0", true), ("1/2", true), ("1", true)])
        );

        let r = fixed_points(&q("const:2")).unwrap();
        assert_eq!(summary(&r), owned(&[("0", true), ("1", true)]));
        assert!(r.candidates[1].endpoint && !r.candidates[0].endpoint);

        let r = fixed_points(&q("periodic:3,4")).unwrap();
        assert_eq!(
            summary(&r),
            owned(&[("0", true), ("1/2", false), ("1", true)])
        );
        // 2 ∤ 1·3 at q₂ = 4
        assert_eq!(r.candidates[1].failing_position, Some(2));
    }

    #[test]
    fn odd_rule_members_generate_the_half() {
        let qs = q("rule:odd");
        let r = fixed_points(&qs).unwrap();
        assert_eq!(
            summary(&r),
            owned(&[("0", true), ("1/2", true), ("1", true)])
        );
        let digits: Vec<_> = r.digits(&qs, &r.candidates[1]).unwrap().take(5).collect();
        let expected: Vec<BigInt> = (1..=5).map(BigInt::from).collect();
        assert_eq!(digits, expected);
    }

    #[test]
    fn non_members_have_no_generator() {
        let qs = q("periodic:3,4");
        let r = fixed_points(&qs).unwrap();
        assert!(r.digits(&qs, &r.candidates[1]).is_none());
    }

    #[test]
    fn tail_start_uses_tail_minimum() {
        // positions after 1 see 7, 9, 7, 9, …
        let r = fixed_points_from(&q("prefix:2;7,9"), 1).unwrap();
        assert_eq!(r.q, BigInt::from(7));
        assert_eq!(r.candidates.len(), 7);
        // 6 | ε·6 and 6 | ε·8 ⇔ 3 | ε
        let members: Vec<_> = r.members().map(|c| c.epsilon.clone()).collect();
        assert_eq!(members, vec![0.into(), 3.into(), 6.into()]);
    }

    #[test]
    fn fixed_width_scalars_work() {
        let qs: QSequence<i64> = parse_qseq("periodic:3,5").unwrap();
        assert_eq!(fixed_points(&qs).unwrap().members().count(), 3);
    }
}
