//! Digit generation by the shift operator.
//!
//! With `σ⁰(x) = x` and `σⁿ(x) = q_n σⁿ⁻¹(x) − ε_n`, the digit `ε_n` is the
//! integer part of `q_n σⁿ⁻¹(x)`, and after `n` steps
//!
//! ```text
//! x = Σ_{i ≤ n} ε_i / (q₁…q_i) + σⁿ(x) / (q₁…q_n)
//! ```
//!
//! holds exactly. For `x = u/v` every shift value has the form `u_n / v` with
//! `0 ≤ u_n < v`, which is what makes the shift orbit of a rational finite.

use crate::error::{Error, Result};
use crate::foundation::{join, QSequence};
use crate::scalar::{check_unit_interval, Rational, Scalar};

/// Finite run of digits occupying positions `start, start+1, …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitWord<T> {
    start: usize,
    digits: Vec<T>,
}

impl<T: Scalar> DigitWord<T> {
    /// Panics when `start == 0`; positions are 1-based.
    pub fn new(start: usize, digits: Vec<T>) -> Self {
        assert!(start >= 1, "digit positions start at 1");
        Self { start, digits }
    }

    /// Word starting at position 1.
    pub fn from_digits(digits: Vec<T>) -> Self {
        Self::new(1, digits)
    }

    pub fn empty() -> Self {
        Self::from_digits(Vec::new())
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn digits(&self) -> &[T] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<T> {
        self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Position of the last digit; `start - 1` for an empty word.
    pub fn end(&self) -> usize {
        self.start + self.digits.len() - 1
    }

    /// `(position, digit)` pairs.
    pub fn positions(&self) -> impl Iterator<Item = (usize, &T)> {
        (self.start..).zip(self.digits.iter())
    }

    /// Checks `0 ≤ ε_k < q_k` at every covered position.
    pub fn validate(&self, q: &QSequence<T>) -> Result<()> {
        for (k, digit) in self.positions() {
            let base = q.q_at(k);
            if digit.is_negative() || *digit >= base {
                return Err(Error::DigitOutOfRange {
                    position: k,
                    digit: digit.to_string(),
                    base: base.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Drops trailing zero digits.
    pub fn trimmed(mut self) -> Self {
        while self.digits.last().is_some_and(|d| d.is_zero()) {
            self.digits.pop();
        }
        self
    }

    /// True when every digit is `q_k - 1`. The empty word is not maximal.
    pub fn is_all_maximal(&self, q: &QSequence<T>) -> bool {
        !self.is_empty()
            && self
                .positions()
                .all(|(k, d)| d.clone() + T::one() == q.q_at(k))
    }
}

impl<T: Scalar> std::fmt::Display for DigitWord<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", join(&self.digits))
    }
}

/// The value `σⁿ(x)` after `step = n` shifts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftState<T: Scalar> {
    pub step: usize,
    pub value: Rational<T>,
}

impl<T: Scalar> ShiftState<T> {
    pub fn initial(x: Rational<T>) -> Self {
        Self { step: 0, value: x }
    }
}

/// Closed interval holding every completion of a digit prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure<T: Scalar> {
    pub low: Rational<T>,
    pub high: Rational<T>,
}

impl<T: Scalar> Enclosure<T> {
    pub fn width(&self) -> Rational<T> {
        self.high.clone() - self.low.clone()
    }

    pub fn contains(&self, x: &Rational<T>) -> bool {
        self.low <= *x && *x <= self.high
    }
}

/// Result of [`expand`]: digits `ε₁…ε_count` and the state `σ^count(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion<T: Scalar> {
    pub digits: DigitWord<T>,
    pub state: ShiftState<T>,
}

/// One application of the shift with base `q`.
pub fn shift_step<T: Scalar>(state: &ShiftState<T>, q: &T) -> Result<(T, ShiftState<T>)> {
    check_unit_interval(&state.value)?;
    let scaled = state.value.clone() * Rational::from_integer(q.clone());
    let digit = scaled.to_integer();
    let next = scaled - Rational::from_integer(digit.clone());
    Ok((
        digit,
        ShiftState {
            step: state.step + 1,
            value: next,
        },
    ))
}

/// Iterator over `(ε_n, σⁿ(x))` for `n = 1, 2, …`.
///
/// Holds its own cursor so an expansion can be resumed where it stopped.
#[derive(Debug, Clone)]
pub struct ShiftOrbit<'q, T: Scalar> {
    q: &'q QSequence<T>,
    state: ShiftState<T>,
}

impl<'q, T: Scalar> ShiftOrbit<'q, T> {
    pub fn new(x: Rational<T>, q: &'q QSequence<T>) -> Result<Self> {
        check_unit_interval(&x)?;
        Ok(Self {
            q,
            state: ShiftState::initial(x),
        })
    }

    pub fn state(&self) -> &ShiftState<T> {
        &self.state
    }
}

impl<T: Scalar> Iterator for ShiftOrbit<'_, T> {
    type Item = (T, ShiftState<T>);

    fn next(&mut self) -> Option<Self::Item> {
        let base = self.q.q_at(self.state.step + 1);
        let (digit, next) =
            shift_step(&self.state, &base).expect("shift values stay inside [0, 1)");
        self.state = next.clone();
        Some((digit, next))
    }
}

/// Greedy expansion of `x` to `count` digits.
pub fn expand<T: Scalar>(x: &Rational<T>, q: &QSequence<T>, count: usize) -> Result<Expansion<T>> {
    let mut orbit = ShiftOrbit::new(x.clone(), q)?;
    let digits = orbit.by_ref().take(count).map(|(d, _)| d).collect();
    Ok(Expansion {
        digits: DigitWord::from_digits(digits),
        state: orbit.state().clone(),
    })
}

/// `Σ ε_i / (q_s…q_i)` for a word starting at position `s`.
///
/// For `s = 1` this is the value of the finite series; for larger `s` it is
/// the value of the word read as the leading digits of `σ^{s-1}`.
pub(crate) fn word_value<T: Scalar>(word: &DigitWord<T>, q: &QSequence<T>) -> Result<Rational<T>> {
    word.validate(q)?;
    let mut numer = T::zero();
    let mut denom = T::one();
    for (k, digit) in word.positions() {
        let base = q.q_at(k);
        numer = numer * base.clone() + digit.clone();
        denom = denom * base;
    }
    Ok(Rational::new(numer, denom))
}

/// Exact value of a finite digit word starting at position 1.
pub fn evaluate_finite<T: Scalar>(word: &DigitWord<T>, q: &QSequence<T>) -> Result<Rational<T>> {
    if word.start() != 1 {
        return Err(Error::WordStart {
            expected: 1,
            found: word.start(),
        });
    }
    word_value(word, q)
}

/// `[value, value + 1/(q₁…q_n)]` for an `n`-digit prefix.
pub fn enclosure<T: Scalar>(word: &DigitWord<T>, q: &QSequence<T>) -> Result<Enclosure<T>> {
    let low = evaluate_finite(word, q)?;
    let width = Rational::new(T::one(), q.product(1, word.len()));
    Ok(Enclosure {
        high: low.clone() + width,
        low,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::parse_qseq;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(text: &str) -> QSequence<BigInt> {
        parse_qseq(text).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational<BigInt> {
        Rational::new(n.into(), d.into())
    }

    fn word(digits: &[i64]) -> DigitWord<BigInt> {
        DigitWord::from_digits(digits.iter().map(|&d| d.into()).collect())
    }

    fn step(value: Rational<BigInt>, base: i64) -> (BigInt, Rational<BigInt>) {
        let (d, s) = shift_step(&ShiftState::initial(value), &base.into()).unwrap();
        assert_eq!(s.step, 1);
        (d, s.value)
    }

    #[test]
    fn shift_step_examples() {
        assert_eq!(step(rat(1, 2), 3), (1.into(), rat(1, 2)));
        assert_eq!(step(rat(0, 1), 7), (0.into(), rat(0, 1)));
        assert_eq!(step(rat(5, 6), 2), (1.into(), rat(2, 3)));
    }

    #[test]
    fn shift_step_rejects_out_of_domain() {
        for bad in [rat(1, 1), rat(-1, 3), rat(7, 5)] {
            let err = shift_step(&ShiftState::initial(bad), &BigInt::from(3)).unwrap_err();
            assert!(matches!(err, Error::OutOfDomain { .. }));
        }
    }

    #[test]
    fn expand_examples() {
        let e = expand(&rat(1, 2), &q("rule:odd"), 4).unwrap();
        assert_eq!(e.digits, word(&[1, 2, 3, 4]));
        assert_eq!(e.state.value, rat(1, 2));
        assert_eq!(e.state.step, 4);

        let e = expand(&rat(0, 1), &q("periodic:2,3"), 5).unwrap();
        assert_eq!(e.digits, word(&[0, 0, 0, 0, 0]));
        assert_eq!(e.state.value, rat(0, 1));

        let e = expand(&rat(5, 6), &q("periodic:2,3"), 4).unwrap();
        assert_eq!(e.digits, word(&[1, 2, 0, 0]));
        assert_eq!(e.state.value, rat(0, 1));
    }

    #[test]
    fn expand_rejects_one() {
        assert!(expand(&rat(1, 1), &q("const:2"), 3).is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            evaluate_finite(&word(&[1, 2]), &q("periodic:2,3")).unwrap(),
            rat(5, 6)
        );
        assert_eq!(
            evaluate_finite(&word(&[]), &q("periodic:2,3")).unwrap(),
            rat(0, 1)
        );
        // 1/3 + 2/15 + 3/105
        let oracle = rat(1, 3) + rat(2, 15) + rat(3, 105);
        assert_eq!(oracle, rat(52, 105));
        assert_eq!(
            evaluate_finite(&word(&[1, 2, 3]), &q("rule:odd")).unwrap(),
            oracle
        );
    }

    #[test]
    fn evaluate_rejects_bad_digits_and_starts() {
        assert!(matches!(
            evaluate_finite(&word(&[1, 3]), &q("periodic:2,3")),
            Err(Error::DigitOutOfRange { position: 2, .. })
        ));
        assert!(matches!(
            evaluate_finite(&word(&[-1]), &q("const:2")),
            Err(Error::DigitOutOfRange { position: 1, .. })
        ));
        let shifted = DigitWord::new(2, vec![BigInt::from(1)]);
        assert!(matches!(
            evaluate_finite(&shifted, &q("const:2")),
            Err(Error::WordStart { found: 2, .. })
        ));
    }

    #[test]
    fn word_value_reads_from_its_start() {
        // digit 2 at position 2 of periodic:2,3 is worth 2/3 relative to σ¹
        let w = DigitWord::new(2, vec![BigInt::from(2)]);
        assert_eq!(word_value(&w, &q("periodic:2,3")).unwrap(), rat(2, 3));
    }

    #[test]
    fn enclosure_examples() {
        let e = enclosure(&word(&[1]), &q("const:10")).unwrap();
        assert_eq!((e.low, e.high), (rat(1, 10), rat(2, 10)));

        let e = enclosure(&word(&[1, 2]), &q("periodic:2,3")).unwrap();
        assert_eq!((e.low.clone(), e.high.clone()), (rat(5, 6), rat(1, 1)));
        assert_eq!(e.width(), rat(1, 6));

        let e = enclosure(&word(&[1, 2, 3]), &q("rule:odd")).unwrap();
        assert_eq!(
            (e.low.clone(), e.high.clone()),
            (rat(52, 105), rat(53, 105))
        );
        assert!(e.contains(&rat(1, 2)));
    }

    #[test]
    fn orbit_resumes() {
        let qs = q("periodic:5,2,7");
        let x = rat(17, 41);
        let mut orbit = ShiftOrbit::new(x.clone(), &qs).unwrap();
        let first: Vec<_> = orbit.by_ref().take(3).map(|(d, _)| d).collect();
        let rest: Vec<_> = orbit.take(4).map(|(d, _)| d).collect();
        let all = expand(&x, &qs, 7).unwrap().digits.into_digits();
        assert_eq!([first, rest].concat(), all);
    }

    #[test]
    fn trimmed_and_maximal() {
        assert_eq!(word(&[1, 0, 2, 0, 0]).trimmed(), word(&[1, 0, 2]));
        assert!(word(&[1, 2]).is_all_maximal(&q("periodic:2,3")));
        assert!(!word(&[]).is_all_maximal(&q("periodic:2,3")));
    }

    fn arb_q() -> impl Strategy<Value = QSequence<BigInt>> {
        prop_oneof![
            Just("const:2"),
            Just("const:10"),
            Just("periodic:2,3"),
            Just("periodic:5,2,7"),
            Just("prefix:4,9;3,2"),
            Just("rule:odd"),
        ]
        .prop_map(q)
    }

    fn arb_x() -> impl Strategy<Value = Rational<BigInt>> {
        (1i64..500)
            .prop_flat_map(|v| (0..v, Just(v)))
            .prop_map(|(u, v)| rat(u, v))
    }

    proptest! {
        #[test]
        fn digits_and_states_stay_in_range(x in arb_x(), qs in arb_q()) {
            let v = x.denom().clone();
            let orbit = ShiftOrbit::new(x, &qs).unwrap();
            for (n, (digit, state)) in orbit.take(40).enumerate() {
                prop_assert!(digit >= BigInt::from(0) && digit < qs.q_at(n + 1));
                prop_assert!(crate::scalar::in_unit_interval(&state.value));
                // σⁿ(x) = u_n / v
                prop_assert!((v.clone() % state.value.denom()).is_zero());
            }
        }

        #[test]
        fn enclosures_nest(x in arb_x(), qs in arb_q()) {
            let digits = expand(&x, &qs, 25).unwrap().digits.into_digits();
            let mut prev: Option<Enclosure<BigInt>> = None;
            for n in 0..=digits.len() {
                let e = enclosure(&DigitWord::from_digits(digits[..n].to_vec()), &qs).unwrap();
                prop_assert_eq!(e.width(), Rational::new(BigInt::from(1), qs.product(1, n)));
                prop_assert!(e.contains(&x));
                if let Some(p) = prev {
                    prop_assert!(p.low <= e.low && e.high <= p.high);
                }
                prev = Some(e);
            }
        }

        #[test]
        fn terminating_expansion_evaluates_back(digits in prop::collection::vec(0i64..2, 0..20)) {
            // const:2 words, so any 0/1 list is valid
            let qs = q("const:2");
            let w = DigitWord::from_digits(digits.iter().map(|&d| d.into()).collect());
            let x = evaluate_finite(&w, &qs).unwrap();
            let e = expand(&x, &qs, w.len()).unwrap();
            prop_assert!(e.state.value.is_zero());
            prop_assert_eq!(evaluate_finite(&e.digits, &qs).unwrap(), x);
            prop_assert_eq!(e.digits, w);
        }
    }
}
