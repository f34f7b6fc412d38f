//! Numbers with two expansions.
//!
//! A terminating expansion `ε₁…ε_m 0 0 …` with `ε_m > 0` has the twin
//! `ε₁…(ε_m − 1) (q_{m+1} − 1) (q_{m+2} − 1) …`. A reduced `p/r` terminates
//! iff `r` divides some prefix product `q₁…q_{n₀}`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expansion::{evaluate_finite, expand, DigitWord};
use crate::foundation::QSequence;
use crate::scalar::{check_open_unit_interval, Rational, Scalar};

/// Expansion whose digits are `head` followed by `q_k − 1` for every
/// `k > head.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofiniteExpansion<T> {
    head: DigitWord<T>,
}

fn value_one() -> Error {
    Error::OutOfDomain {
        value: "1".into(),
        domain: "[0, 1)",
    }
}

impl<T: Scalar> CofiniteExpansion<T> {
    /// An empty head would leave the all-maximal expansion of 1.
    pub fn new(head: Vec<T>) -> Result<Self> {
        if head.is_empty() {
            return Err(value_one());
        }
        Ok(Self {
            head: DigitWord::from_digits(head),
        })
    }

    /// Folds maximal head digits into the tail so the last head digit is at
    /// most `q_m − 2`.
    pub fn canonical(mut head: Vec<T>, q: &QSequence<T>) -> Result<Self> {
        DigitWord::from_digits(head.clone()).validate(q)?;
        while let Some(last) = head.last() {
            if last.clone() + T::one() == q.q_at(head.len()) {
                head.pop();
            } else {
                break;
            }
        }
        Self::new(head)
    }

    pub fn head(&self) -> &DigitWord<T> {
        &self.head
    }

    /// First position of the maximal tail.
    pub fn tail_start(&self) -> usize {
        self.head.len() + 1
    }

    /// The tail digits `q_k − 1` from [`tail_start`](Self::tail_start) on.
    pub fn tail<'q>(&self, q: &'q QSequence<T>) -> impl Iterator<Item = T> + 'q {
        q.iter_from(self.tail_start()).map(|b| b - T::one())
    }

    pub fn validate(&self, q: &QSequence<T>) -> Result<()> {
        self.head.validate(q)?;
        let m = self.head.len();
        if self.head.digits()[m - 1].clone() + T::one() == q.q_at(m) {
            return Err(Error::NonCanonicalCofinite(m));
        }
        Ok(())
    }

    /// `value(head) + 1/(q₁…q_m)`: the maximal tail sums to one unit of the
    /// last head position.
    pub fn value(&self, q: &QSequence<T>) -> Result<Rational<T>> {
        let head = evaluate_finite(&self.head, q)?;
        Ok(head + Rational::new(T::one(), q.product(1, self.head.len())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualForm<T: Scalar> {
    Finite(DigitWord<T>),
    Cofinite(CofiniteExpansion<T>),
}

impl<T: Scalar> DualForm<T> {
    pub fn value(&self, q: &QSequence<T>) -> Result<Rational<T>> {
        match self {
            DualForm::Finite(word) => evaluate_finite(word, q),
            DualForm::Cofinite(c) => c.value(q),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// `n0` is the least index with `r | q₁…q_{n0}`.
    Yes {
        n0: usize,
    },
    No,
    Undecided {
        bound: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualRepresentationReport<T: Scalar> {
    pub decision: Decision,
    pub finite_form: Option<DigitWord<T>>,
    pub cofinite_form: Option<CofiniteExpansion<T>>,
}

/// Decides whether `p/r ∈ (0, 1)` has two expansions.
///
/// Runs `r₀ = r`, `r_k = r_{k−1} / gcd(r_{k−1}, q_k)`, so that `r_k = 1`
/// exactly when `r | q₁…q_k`. For list sequences a full period without any
/// reduction proves `No`. Rules use the catalog's excluded primes and fall
/// back to `Undecided` after `bound` steps.
pub fn dual_representation<T: Scalar>(
    x: &Rational<T>,
    q: &QSequence<T>,
    bound: usize,
) -> Result<DualRepresentationReport<T>> {
    check_open_unit_interval(x)?;
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let decision = residual_decision(x.denom().clone(), q, bound);
    let Decision::Yes { n0 } = decision else {
        return Ok(DualRepresentationReport {
            decision,
            finite_form: None,
            cofinite_form: None,
        });
    };

    let expansion = expand(x, q, n0)?;
    assert!(
        expansion.state.value.is_zero(),
        "greedy expansion terminates at n0"
    );
    let finite = expansion.digits;
    let DualForm::Cofinite(cofinite) = convert_dual(&DualForm::Finite(finite.clone()), q)? else {
        unreachable!("finite input converts to a cofinite form")
    };
    assert_eq!(evaluate_finite(&finite, q)?, *x);
    assert_eq!(cofinite.value(q)?, *x);
    Ok(DualRepresentationReport {
        decision,
        finite_form: Some(finite),
        cofinite_form: Some(cofinite),
    })
}

fn residual_decision<T: Scalar>(mut residual: T, q: &QSequence<T>, bound: usize) -> Decision {
    if let Some(rule) = q.as_rule() {
        // an excluded prime never leaves the residual
        if rule
            .excluded_primes()
            .iter()
            .any(|&p| residual.is_multiple_of(&T::from_u64(p).expect("small prime fits")))
        {
            return Decision::No;
        }
    }
    let period = q.period_len();
    let mut idle = 0;
    for k in 1.. {
        if period.is_none() && k > bound {
            return Decision::Undecided { bound };
        }
        let g = residual.gcd(&q.q_at(k));
        if g.is_one() {
            if k > q.preperiod_len() {
                idle += 1;
            }
        } else {
            residual = residual / g;
            idle = 0;
        }
        if residual.is_one() {
            return Decision::Yes { n0: k };
        }
        if period.is_some_and(|len| idle >= len) {
            return Decision::No;
        }
    }
    unreachable!()
}

/// Converts between the terminating form and its maximal-tail twin.
///
/// Trailing zeros of a finite word are dropped first.
pub fn convert_dual<T: Scalar>(input: &DualForm<T>, q: &QSequence<T>) -> Result<DualForm<T>> {
    match input {
        DualForm::Finite(word) => {
            if word.start() != 1 {
                return Err(Error::WordStart {
                    expected: 1,
                    found: word.start(),
                });
            }
            word.validate(q)?;
            let mut head = word.clone().trimmed().into_digits();
            let last = head.last_mut().ok_or(Error::ZeroHasNoTwin)?;
            *last = last.clone() - T::one();
            Ok(DualForm::Cofinite(CofiniteExpansion::new(head)?))
        }
        DualForm::Cofinite(cofinite) => {
            cofinite.validate(q)?;
            let mut digits = cofinite.head().clone().into_digits();
            let last = digits.last_mut().expect("cofinite heads are nonempty");
            *last = last.clone() + T::one();
            Ok(DualForm::Finite(DigitWord::from_digits(digits)))
        }
    }
}
