//! Cross-validation and property suites. Per-n checks run in parallel;
//! reports are assembled in order of n.

use clap::{Args, ValueEnum};
use invkl::fan::{
    a_identity_counterexample, all_coefficients_positive, b_coefficients, expand_palindromic_basis,
    q_fan_closed, q_fan_deletion, q_fan_recurrence, weight_sums, y_fan_closed, y_fan_deletion,
    MAX_CPRIME_N,
};
use invkl::graph::{Multigraph, MAX_CHROMATIC_VERTICES};
use invkl::kls::{q_fan_oracle_capped, y_fan_oracle_capped, Q_FAN_ORACLE_MAX_N, Y_FAN_ORACLE_MAX_N};
use invkl::series::{q_fan_from_gf, y_fan_from_gf};
use invkl::{Error, IntPoly};
use num_bigint::BigInt;
use rayon::prelude::*;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    QCross,
    YCross,
    Weights,
    Properties,
    Sturm,
    Chromatic,
    AIdentity,
}

impl Suite {
    const ALL: [Suite; 7] = [
        Suite::QCross,
        Suite::YCross,
        Suite::Weights,
        Suite::Properties,
        Suite::Sturm,
        Suite::Chromatic,
        Suite::AIdentity,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::QCross => "q-cross",
            Suite::YCross => "y-cross",
            Suite::Weights => "weights",
            Suite::Properties => "properties",
            Suite::Sturm => "sturm",
            Suite::Chromatic => "chromatic",
            Suite::AIdentity => "a-identity",
        }
    }

    fn default_max_n(self) -> usize {
        match self {
            Suite::QCross => 200,
            Suite::YCross => 100,
            Suite::Weights => 9,
            Suite::Properties => 500,
            Suite::Sturm => 40,
            Suite::Chromatic => 12,
            Suite::AIdentity => 200,
        }
    }

    fn cap(self) -> Option<usize> {
        match self {
            Suite::Weights => Some(MAX_CPRIME_N),
            Suite::Chromatic => Some(MAX_CHROMATIC_VERTICES - 1),
            _ => None,
        }
    }
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Comma-separated suites; all suites when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    suites: Vec<Suite>,
    /// Upper end of the n range for every selected suite. Defaults:
    /// q-cross 200, y-cross 100, weights 9, properties 500, sturm 40,
    /// chromatic 12, a-identity 200.
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest n compared against the Q composition oracle in q-cross.
    #[arg(long, default_value_t = Q_FAN_ORACLE_MAX_N)]
    q_oracle_max_n: usize,
    /// Largest n compared against the Y composition oracle in y-cross.
    #[arg(long, default_value_t = Y_FAN_ORACLE_MAX_N)]
    y_oracle_max_n: usize,
}

/// `Ok(Ok(()))` pass, `Ok(Err(msg))` counterexample, `Err` evaluation error.
type Outcome = Result<Result<(), String>, Error>;

fn agree(what: &str, n: usize, a: &IntPoly, b: &IntPoly) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("n = {n}: {what} differ: {a} vs {b}"))
    }
}

/// Evaluates `check` on every `n` in `range` in parallel and returns the
/// first failure in order of `n`.
fn per_n<F>(range: std::ops::RangeInclusive<usize>, check: F) -> Outcome
where
    F: Fn(usize) -> Outcome + Sync + Send,
{
    let results: Vec<Outcome> = range.into_par_iter().map(check).collect();
    for r in results {
        match r {
            Ok(Ok(())) => {}
            other => return other,
        }
    }
    Ok(Ok(()))
}

fn q_cross(max_n: usize, oracle_max_n: usize) -> Outcome {
    let rec = q_fan_recurrence(max_n)?;
    let del = q_fan_deletion(max_n);
    let gf = q_fan_from_gf(max_n)?;
    per_n(0..=max_n, |n| {
        let closed = q_fan_closed(n)?;
        let mut r = agree("closed and recurrence", n, &closed, &rec[n])
            .and_then(|()| agree("closed and deletion", n, &closed, &del[n]))
            .and_then(|()| agree("closed and catalan-gf", n, &closed, &gf[n]));
        if r.is_ok() && n <= oracle_max_n {
            r = agree("closed and oracle", n, &closed, &q_fan_oracle_capped(n, oracle_max_n)?);
        }
        Ok(r)
    })
}

fn y_cross(max_n: usize, oracle_max_n: usize) -> Outcome {
    let del = y_fan_deletion(max_n);
    let gf = y_fan_from_gf(max_n)?;
    per_n(0..=max_n, |n| {
        let closed = y_fan_closed(n)?;
        let b = expand_palindromic_basis(n, &b_coefficients(n)?);
        let mut r = agree("closed and deletion", n, &closed, &del[n])
            .and_then(|()| agree("closed and gf", n, &closed, &gf[n]))
            .and_then(|()| agree("closed and b-expansion", n, &closed, &b));
        if r.is_ok() && (closed.degree() != Some(n) || !closed.is_palindromic(n)?) {
            r = Err(format!("n = {n}: {closed} is not palindromic of degree {n}"));
        }
        if r.is_ok() && n <= oracle_max_n {
            r = agree("closed and oracle", n, &closed, &y_fan_oracle_capped(n, oracle_max_n)?);
        }
        Ok(r)
    })
}

fn weights(max_n: usize) -> Outcome {
    per_n(1..=max_n, |n| {
        let (w, wt) = weight_sums(n)?;
        let reversed_q = q_fan_closed(n)?.reverse(n)?;
        let y = y_fan_closed(n)?;
        Ok(agree("sum of w and reversed Q", n, &w, &reversed_q)
            .and_then(|()| agree("sum of w~ and Y", n, &wt, &y)))
    })
}

fn properties(max_n: usize) -> Outcome {
    let q = q_fan_recurrence(max_n)?;
    per_n(1..=max_n, |n| {
        let p = &q[n];
        let r = if !all_coefficients_positive(p) {
            Err(format!("n = {n}: non-positive coefficient in {p}"))
        } else if !p.is_log_concave_no_internal_zeros() {
            Err(format!("n = {n}: {p} is not log-concave"))
        } else if p.degree() != Some((n - 1) / 2) {
            Err(format!("n = {n}: degree {:?}", p.degree()))
        } else if p.coeff(0) != BigInt::from(1) << (n - 1) {
            Err(format!("n = {n}: constant term {}", p.coeff(0)))
        } else {
            Ok(())
        };
        Ok(r)
    })
}

fn sturm(max_n: usize) -> Outcome {
    per_n(1..=max_n, |n| {
        let b = q_fan_closed(n)?.hadamard_normalize()?;
        Ok(if b.sturm_real_rooted()? {
            Ok(())
        } else {
            Err(format!("n = {n}: {b} is not real-rooted"))
        })
    })
}

fn chromatic(max_n: usize) -> Outcome {
    per_n(1..=max_n, |n| {
        let g = Multigraph::fan(n);
        let expect = IntPoly::from_i64s(&[0, -1, 1]) * IntPoly::from_i64s(&[-2, 1]).pow(n - 1);
        let mut r = agree("chromatic polynomial and t(t-1)(t-2)^(n-1)", n, &g.chromatic_polynomial()?, &expect);
        let mu = g.mobius_invariant()?;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expect_mu = BigInt::from(sign) << (n - 1);
        if r.is_ok() && mu != expect_mu {
            r = Err(format!("n = {n}: mobius invariant {mu}, expected {expect_mu}"));
        }
        Ok(r)
    })
}

fn a_identity(max_n: usize) -> Outcome {
    Ok(match a_identity_counterexample(max_n) {
        None => Ok(()),
        Some((n, k)) => Err(format!("n = {n}, k = {k}")),
    })
}

pub fn run(args: &VerifyArgs) -> Result<bool, Error> {
    let suites: Vec<Suite> = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        Suite::ALL.into_iter().filter(|s| args.suites.contains(s)).collect()
    };
    let mut all_pass = true;
    for suite in suites {
        let max_n = args.max_n.unwrap_or(suite.default_max_n());
        if let Some(cap) = suite.cap() {
            if max_n > cap {
                return Err(Error::CapExceeded {
                    what: "max-n for this suite",
                    cap,
                    got: max_n,
                });
            }
        }
        let outcome = match suite {
            Suite::QCross => q_cross(max_n, args.q_oracle_max_n),
            Suite::YCross => y_cross(max_n, args.y_oracle_max_n),
            Suite::Weights => weights(max_n),
            Suite::Properties => properties(max_n),
            Suite::Sturm => sturm(max_n),
            Suite::Chromatic => chromatic(max_n),
            Suite::AIdentity => a_identity(max_n),
        };
        match outcome {
            Ok(Ok(())) => crate::emit(&format!("{}: pass (max-n {max_n})\n", suite.name())),
            Ok(Err(msg)) => {
                all_pass = false;
                crate::emit(&format!("{}: FAIL (max-n {max_n}): {msg}\n", suite.name()));
            }
            Err(e) if e.is_usage() => return Err(e),
            Err(e) => {
                all_pass = false;
                crate::emit(&format!("{}: FAIL (max-n {max_n}): {e}\n", suite.name()));
            }
        }
    }
    Ok(all_pass)
}
