//! Command-line front end for `cantor-series`.
//!
//! [`run`] takes the argument vector and returns the exit status together
//! with everything destined for stdout and stderr, so the binary is a thin
//! shell around it and tests can drive it in-process.

mod report;

use clap::{Args, Parser, Subcommand};

use cantor_series::{
    certify_rational, convert_dual, dual_representation, enclosure, expand, fixed_points_from,
    reconstruct, regroup, shift_constant_check, verify_certificate, BigInt, BigQSequence,
    BigRational, BigSeriesValue, BlockDescription, Breakpoints, Decision, DualForm, Error,
    RationalityCertificate,
};

use report::{int, int_list, rat, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cantor", version, about = "Exact Cantor series toolkit")]
struct Cli {
    /// Emit one JSON object instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Args)]
struct Common {
    /// Base sequence: const:<q> | periodic:<q1,...> | prefix:<a1,...;p1,...> | rule:odd
    #[arg(long = "q")]
    q: String,
    /// Number: rat:<n>/<d> | digits:<d1,...> | block:<p1,...|b1,...> | cofinite:<h1,...>
    #[arg(long = "x")]
    x: String,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Greedy digits and the final shift value.
    Expand {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        count: usize,
    },
    /// Exact value of a number in any form.
    Eval {
        #[command(flatten)]
        common: Common,
    },
    /// First recurrence of the shift orbit.
    Certify {
        #[command(flatten)]
        common: Common,
    },
    /// Re-check a recurrence pair (n, m).
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Value of a `block:` description.
    Reconstruct {
        #[command(flatten)]
        common: Common,
    },
    /// Whether the number has a second, maximal-tail expansion.
    Dual {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// Swap a `digits:` word and its `cofinite:` twin.
    Convert {
        #[command(flatten)]
        common: Common,
    },
    /// Check `ε_n / (q_n − 1)` against `σ^from(x)` over a window.
    ShiftConst {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long)]
        horizon: usize,
    },
    /// Candidates `ε/(q − 1)` for numbers fixed by the shift.
    FixedPoints {
        #[arg(long = "q")]
        q: String,
        #[arg(long, default_value_t = 0)]
        from: usize,
    },
    /// Merge digit blocks between breakpoints.
    Regroup {
        #[command(flatten)]
        common: Common,
        /// Explicit breakpoints n₁,n₂,…
        #[arg(long, value_delimiter = ',', conflicts_with = "step")]
        breakpoints: Option<Vec<usize>>,
        /// Breakpoints start, start+step, start+2·step, …
        #[arg(long)]
        step: Option<usize>,
        #[arg(long, default_value_t = 0)]
        start: usize,
        /// Number of blocks; defaults to one fewer than the explicit breakpoints
        #[arg(long, required_unless_present = "breakpoints")]
        count: Option<usize>,
    },
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Step<T> = std::result::Result<T, Failure>;

pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli.verb) {
        Ok((report, code)) => Outcome {
            code,
            stdout: report.render(cli.json),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Library(e)) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parse errors are usage errors; everything else the library raises is a
/// domain error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_parse() {
        EXIT_USAGE
    } else {
        EXIT_DOMAIN
    }
}

fn parse_q(text: &str) -> Step<BigQSequence> {
    Ok(cantor_series::parse_qseq(text)?)
}

fn parse_number(text: &str) -> Step<BigSeriesValue> {
    Ok(BigSeriesValue::parse(text)?)
}

fn inputs(common: &Common) -> Step<(BigQSequence, BigSeriesValue)> {
    Ok((parse_q(&common.q)?, parse_number(&common.x)?))
}

fn resolved(common: &Common) -> Step<(BigQSequence, BigRational, Report)> {
    let (q, number) = inputs(common)?;
    let x = number.resolve(&q)?;
    let mut report = Report::new();
    report.str("q", q.to_string());
    report.put("x", rat(&x));
    Ok((q, x, report))
}

fn dispatch(verb: &Verb) -> Step<(Report, i32)> {
    let report = match verb {
        Verb::Expand { common, count } => {
            let (q, x, mut report) = resolved(common)?;
            let e = expand(&x, &q, *count)?;
            let bounds = enclosure(&e.digits, &q)?;
            report.put("count", (*count).into());
            report.put("digits", int_list(e.digits.digits()));
            report.put("sigma", rat(&e.state.value));
            report.put("partial_sum", rat(&bounds.low));
            report.put("enclosure_high", rat(&bounds.high));
            report
        }
        Verb::Eval { common } => {
            let (_, _, report) = resolved(common)?;
            report
        }
        Verb::Certify { common } => {
            let (q, x, mut report) = resolved(common)?;
            let cert = certify_rational(&x, &q)?;
            let check = verify_certificate(&x, &q, &cert);
            report.put("n", cert.n.into());
            report.put("m", cert.m.into());
            report.put("sigma", rat(&cert.sigma_value));
            report.put("block_product", int(&cert.block_product));
            report.put(
                "witness",
                check.witness.as_ref().map_or(serde_json::Value::Null, int),
            );
            report.put("witness_ok", check.is_valid().into());
            report
        }
        Verb::Verify { common, n, m } => {
            let (q, x, mut report) = resolved(common)?;
            // the certificate claims whatever the orbit says at step n
            let sigma = expand(&x, &q, *n)?.state.value;
            let cert = RationalityCertificate {
                n: *n,
                m: *m,
                sigma_value: sigma,
                block_product: q.product(n + 1, n + m),
            };
            let check = verify_certificate(&x, &q, &cert);
            report.put("n", (*n).into());
            report.put("m", (*m).into());
            report.put("valid", check.is_valid().into());
            report.put(
                "reason",
                check
                    .reason
                    .map_or(serde_json::Value::Null, |r| r.code().into()),
            );
            report.put(
                "witness",
                check.witness.as_ref().map_or(serde_json::Value::Null, int),
            );
            report
        }
        Verb::Reconstruct { common } => {
            let (q, number) = inputs(common)?;
            let BigSeriesValue::Block(desc) = number else {
                return Err(Failure::Usage(
                    "reconstruct expects a `block:` number".into(),
                ));
            };
            reconstruct_report(&q, &desc)?
        }
        Verb::Dual { common, bound } => {
            let (q, x, mut report) = resolved(common)?;
            let dual = dual_representation(&x, &q, *bound)?;
            let code = match dual.decision {
                Decision::Yes { n0 } => {
                    report.str("decision", "Yes");
                    report.put("n0", n0.into());
                    EXIT_OK
                }
                Decision::No => {
                    report.str("decision", "No");
                    EXIT_OK
                }
                Decision::Undecided { bound } => {
                    report.str("decision", "Undecided");
                    report.put("bound", bound.into());
                    EXIT_UNDECIDED
                }
            };
            if let (Some(finite), Some(cofinite)) = (&dual.finite_form, &dual.cofinite_form) {
                report.put("finite", int_list(finite.digits()));
                report.put("cofinite_head", int_list(cofinite.head().digits()));
                report.put("tail_start", cofinite.tail_start().into());
            }
            return Ok((report, code));
        }
        Verb::Convert { common } => {
            let (q, number) = inputs(common)?;
            let input = match number {
                BigSeriesValue::Digits(word) => DualForm::Finite(word),
                BigSeriesValue::Cofinite(c) => DualForm::Cofinite(c),
                _ => {
                    return Err(Failure::Usage(
                        "convert expects a `digits:` or `cofinite:` number".into(),
                    ))
                }
            };
            let output = convert_dual(&input, &q)?;
            let mut report = Report::new();
            report.str("q", q.to_string());
            match &output {
                DualForm::Finite(word) => {
                    report.str("form", "digits");
                    report.put("digits", int_list(word.digits()));
                }
                DualForm::Cofinite(c) => {
                    report.str("form", "cofinite");
                    report.put("head", int_list(c.head().digits()));
                    report.put("tail_start", c.tail_start().into());
                }
            }
            report.put("value", rat(&output.value(&q)?));
            report
        }
        Verb::ShiftConst {
            common,
            from,
            horizon,
        } => {
            let (q, number) = inputs(common)?;
            let check = shift_constant_check(&number, &q, *from, *horizon)?;
            let mut report = Report::new();
            report.str("q", q.to_string());
            report.put("x", rat(&number.resolve(&q)?));
            report.put("from", check.from.into());
            report.put("horizon", check.horizon.into());
            report.put("holds", check.holds.into());
            report.put("constant", rat(&check.constant));
            report.put(
                "first_violation",
                check
                    .first_violation
                    .map_or(serde_json::Value::Null, Into::into),
            );
            report.put("shift_values_constant", check.shift_values_constant.into());
            report.put("conclusive", check.conclusive.into());
            let ratios = check
                .ratio_witnesses
                .iter()
                .map(|(n, digit, base)| {
                    let mut row = Report::new();
                    row.put("n", (*n).into());
                    row.put("digit", int(digit));
                    row.put("base", int(base));
                    row.put(
                        "ratio",
                        rat(&BigRational::new(digit.clone(), base - BigInt::from(1))),
                    );
                    row.into_value()
                })
                .collect();
            report.put("ratios", serde_json::Value::Array(ratios));
            report
        }
        Verb::FixedPoints { q, from } => {
            let q = parse_q(q)?;
            let fp = fixed_points_from(&q, *from)?;
            let mut report = Report::new();
            report.str("q", q.to_string());
            report.put("from", fp.from.into());
            report.put("q_min", int(&fp.q));
            let candidates = fp
                .candidates
                .iter()
                .map(|c| {
                    let mut row = Report::new();
                    row.put("epsilon", int(&c.epsilon));
                    row.put("value", rat(&c.value));
                    row.put("member", c.member.into());
                    row.put("endpoint", c.endpoint.into());
                    row.put(
                        "failing_position",
                        c.failing_position
                            .map_or(serde_json::Value::Null, Into::into),
                    );
                    row.into_value()
                })
                .collect();
            report.put("candidates", serde_json::Value::Array(candidates));
            report
        }
        Verb::Regroup {
            common,
            breakpoints,
            step,
            start,
            count,
        } => {
            let (q, number) = inputs(common)?;
            let (points, count) = match (breakpoints, step, count) {
                (Some(points), _, count) => (
                    Breakpoints::Explicit(points.clone()),
                    count.unwrap_or(points.len().saturating_sub(1)),
                ),
                (None, Some(step), Some(count)) => (
                    Breakpoints::Stride {
                        start: *start,
                        step: *step,
                    },
                    *count,
                ),
                (None, _, _) => {
                    return Err(Failure::Usage(
                        "regroup needs --breakpoints or --step".into(),
                    ))
                }
            };
            let out = regroup(&number, &q, &points, count)?;
            let mut report = Report::new();
            report.str("q", q.to_string());
            report.put("x", rat(&number.resolve(&q)?));
            report.put(
                "breakpoints",
                serde_json::Value::Array(
                    out.report.breakpoints.iter().map(|&n| n.into()).collect(),
                ),
            );
            report.put("head", int_list(out.head.digits()));
            report.put("qprime", int_list(&out.qprime));
            report.put("digits", int_list(out.digits.digits()));
            report.put("carry", rat(&out.carry.value));
            report.put("mu", int(&out.report.mu));
            report.put("lambda", int(&out.report.lambda));
            report.put("ratio_constant", out.report.ratio_constant.into());
            report.put("proportional", out.report.proportional.into());
            report.put("value", rat(&out.value(&q)?));
            report
        }
    };
    Ok((report, EXIT_OK))
}

fn reconstruct_report(q: &BigQSequence, desc: &BlockDescription<BigInt>) -> Step<Report> {
    let value = reconstruct(desc, q)?;
    let mut report = Report::new();
    report.str("q", q.to_string());
    report.put("n", desc.n().into());
    report.put("m", desc.m().into());
    report.put("sigma", rat(&desc.recurring_value(q)?));
    report.put("value", rat(&value));
    Ok(report)
}
