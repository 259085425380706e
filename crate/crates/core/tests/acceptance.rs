//! Acceptance suite: ten exact checks, each with a wall-clock limit.
//! Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use invkl::fan::{
    a_identity_counterexample, all_coefficients_positive, b_coefficients, expand_palindromic_basis,
    q_fan_closed, q_fan_deletion, q_fan_recurrence, weight_sums, y_fan_closed, y_fan_deletion,
};
use invkl::graph::Multigraph;
use invkl::kls::{q_fan_oracle, y_fan_oracle};
use invkl::series::{q_fan_from_gf, y_fan_from_gf};
use invkl::IntPoly;
use num_bigint::BigInt;

type Check = fn() -> Result<(), String>;

fn ip(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn same(what: &str, n: usize, a: &IntPoly, b: &IntPoly) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what} differ at n = {n}: {a} vs {b}"))
    }
}

fn seeds() -> Result<(), String> {
    let q = q_fan_recurrence(2).map_err(|e| e.to_string())?;
    let y = y_fan_deletion(1);
    if q != [ip(&[1]), ip(&[1]), ip(&[2])] {
        return Err(format!("Q seeds {q:?}"));
    }
    if y != [ip(&[1]), ip(&[1, 1])] {
        return Err(format!("Y seeds {y:?}"));
    }
    for (n, expect) in [(0, ip(&[1])), (1, ip(&[1])), (2, ip(&[2]))] {
        same("closed Q seed", n, &q_fan_closed(n).map_err(|e| e.to_string())?, &expect)?;
    }
    Ok(())
}

fn q_four_way() -> Result<(), String> {
    const N: usize = 200;
    let rec = q_fan_recurrence(N).map_err(|e| e.to_string())?;
    let del = q_fan_deletion(N);
    let gf = q_fan_from_gf(N).map_err(|e| e.to_string())?;
    for n in 0..=N {
        let closed = q_fan_closed(n).map_err(|e| e.to_string())?;
        same("closed/recurrence", n, &closed, &rec[n])?;
        same("closed/deletion", n, &closed, &del[n])?;
        same("closed/generating function", n, &closed, &gf[n])?;
    }
    Ok(())
}

fn oracle() -> Result<(), String> {
    for n in 0..=7 {
        let o = q_fan_oracle(n).map_err(|e| e.to_string())?;
        same("Q oracle/closed", n, &o, &q_fan_closed(n).map_err(|e| e.to_string())?)?;
    }
    for n in 0..=6 {
        let o = y_fan_oracle(n).map_err(|e| e.to_string())?;
        same("Y oracle/closed", n, &o, &y_fan_closed(n).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn y_three_way() -> Result<(), String> {
    const N: usize = 100;
    let del = y_fan_deletion(N);
    let gf = y_fan_from_gf(N).map_err(|e| e.to_string())?;
    for n in 0..=N {
        let closed = y_fan_closed(n).map_err(|e| e.to_string())?;
        same("closed/deletion", n, &closed, &del[n])?;
        same("closed/generating function", n, &closed, &gf[n])?;
        if closed.degree() != Some(n) || !closed.is_palindromic(n).map_err(|e| e.to_string())? {
            return Err(format!("Y at n = {n} is not palindromic of degree n: {closed}"));
        }
        let b = b_coefficients(n).map_err(|e| e.to_string())?;
        same("closed/b-expansion", n, &closed, &expand_palindromic_basis(n, &b))?;
    }
    Ok(())
}

fn weights() -> Result<(), String> {
    for n in 1..=9 {
        let (w, wt) = weight_sums(n).map_err(|e| e.to_string())?;
        let q = q_fan_closed(n).map_err(|e| e.to_string())?;
        same("sum w / reversed Q", n, &w, &q.reverse(n).map_err(|e| e.to_string())?)?;
        same("sum w~ / Y", n, &wt, &y_fan_closed(n).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn log_concavity() -> Result<(), String> {
    let q = q_fan_recurrence(500).map_err(|e| e.to_string())?;
    for (n, p) in q.iter().enumerate().skip(1) {
        if !all_coefficients_positive(p) || !p.is_log_concave_no_internal_zeros() {
            return Err(format!("Q at n = {n} fails positivity or log-concavity"));
        }
    }
    Ok(())
}

fn sturm() -> Result<(), String> {
    for n in 1..=40 {
        let q = q_fan_closed(n).map_err(|e| e.to_string())?;
        let b = q.hadamard_normalize().map_err(|e| e.to_string())?;
        if !b.sturm_real_rooted().map_err(|e| e.to_string())? {
            return Err(format!("normalized Q at n = {n} is not real-rooted: {b}"));
        }
    }
    Ok(())
}

fn chromatic() -> Result<(), String> {
    for n in 1..=12 {
        let g = Multigraph::fan(n);
        let expect = ip(&[0, -1, 1]) * ip(&[-2, 1]).pow(n - 1);
        same("chromatic", n, &g.chromatic_polynomial().map_err(|e| e.to_string())?, &expect)?;
        let mu = g.mobius_invariant().map_err(|e| e.to_string())?;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let expect_mu = BigInt::from(sign) * (BigInt::from(1) << (n - 1));
        if mu != expect_mu {
            return Err(format!("mobius at n = {n}: {mu} vs {expect_mu}"));
        }
    }
    Ok(())
}

fn a_identity() -> Result<(), String> {
    match a_identity_counterexample(200) {
        None => Ok(()),
        Some((n, k)) => Err(format!("fails at n = {n}, k = {k}")),
    }
}

fn degree_bound() -> Result<(), String> {
    for n in 1..=500 {
        let q = q_fan_closed(n).map_err(|e| e.to_string())?;
        if q.degree() != Some((n - 1) / 2) || 2 * ((n - 1) / 2) >= n {
            return Err(format!("degree at n = {n} is {:?}", q.degree()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, Check); 10] = [
        ("seed values", Duration::from_secs(1), seeds),
        ("four-way Q agreement, n <= 200", Duration::from_secs(10), q_four_way),
        ("oracle agreement, Q n <= 7, Y n <= 6", Duration::from_secs(120), oracle),
        ("three-way Y agreement, palindromy, b-expansion, n <= 100", Duration::from_secs(30), y_three_way),
        ("weight-sum identities, n <= 9", Duration::from_secs(60), weights),
        ("positivity and log-concavity of Q, n <= 500", Duration::from_secs(10), log_concavity),
        ("real-rootedness of normalized Q, n <= 40", Duration::from_secs(60), sturm),
        ("fan chromatic polynomial and mobius invariant, n <= 12", Duration::from_secs(10), chromatic),
        ("a-coefficient identity, n <= 200", Duration::from_secs(1), a_identity),
        ("degree of Q is (n-1)/2, n <= 500", Duration::from_secs(1), degree_bound),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= limit => Ok(()),
            Ok(()) => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
