//! Fan matroids `M(F_n)`: closed forms, recurrences and weight identities
//! for `Q_{F_n}` and `Y_{F_n}`.
//!
//! Every route here is independent of the composition oracle in
//! [`crate::kls`] and of the generating-function extraction in
//! [`crate::series`], so that agreement between them is meaningful.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial, binomial_row, exact_div, generalized_binomials, IntPoly};
use crate::series::catalan_numbers;

/// Largest `n` accepted by [`cprime_structures`].
pub const MAX_CPRIME_N: usize = 10;

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

fn not_integral(context: String) -> Error {
    Error::NotIntegral { context }
}

/// `Q_{F_n}(t) = sum_k (n-2k) 2^{n-2k-1} binom(n,k) / n * t^k`,
/// `k = 0..=(n-1)/2`; `Q_{F_0} = 1`.
pub fn q_fan_closed(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let row = binomial_row(n);
    let nb = BigInt::from(n);
    let coeffs = (0..=(n - 1) / 2)
        .map(|k| {
            let num = BigInt::from(n - 2 * k) * pow2(n - 2 * k - 1) * &row[k];
            exact_div(&num, &nb)
                .ok_or_else(|| not_integral(format!("closed form of Q_{{F_{n}}} at t^{k}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

/// `Q_{F_0..=F_{n_max}}` from the three-term holonomic recurrence
/// `4nt(t+4)Q_n - 8nt Q_{n+1} - (n+3)(t+4)Q_{n+2} + 2(n+3)Q_{n+3} = 0`
/// seeded with `1, 1, 2`.
pub fn q_fan_recurrence(n_max: usize) -> Result<Vec<IntPoly>> {
    let mut q = vec![IntPoly::one(), IntPoly::one(), IntPoly::from_i64s(&[2])];
    q.truncate(n_max + 1);
    let t_plus_4 = IntPoly::from_i64s(&[4, 1]);
    let t_t_plus_4 = IntPoly::from_i64s(&[0, 4, 1]);
    for m in 3..=n_max {
        let n = m - 3;
        let nb = BigInt::from(n);
        let n3 = BigInt::from(n + 3);
        let rhs = (&t_plus_4 * &q[m - 1]).scale(&n3)
            + q[m - 2].shift(1).scale(&(BigInt::from(8) * &nb))
            - (&t_t_plus_4 * &q[m - 3]).scale(&(BigInt::from(4) * &nb));
        let denom = BigInt::from(2) * &n3;
        let coeffs = rhs
            .coeffs()
            .iter()
            .map(|c| exact_div(c, &denom))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| not_integral(format!("recurrence step for Q_{{F_{m}}}")))?;
        q.push(IntPoly::new(coeffs));
    }
    Ok(q)
}

/// Shared shape of the two deletion recurrences:
/// `X_n = a(t) X_{n-1} - sum_{j=0}^{(n-2)/2} C_j t^{j+1} X_{n-2j-2}`.
fn deletion_sequence(n_max: usize, seeds: [IntPoly; 2], lead: &IntPoly) -> Vec<IntPoly> {
    let cat = catalan_numbers(n_max / 2);
    let mut x: Vec<IntPoly> = seeds.into_iter().take(n_max + 1).collect();
    for n in 2..=n_max {
        let mut next = lead * &x[n - 1];
        for j in 0..=(n - 2) / 2 {
            next = next - x[n - 2 * j - 2].scale(&cat[j]).shift(j + 1);
        }
        x.push(next);
    }
    x
}

/// `Q_n = (t+2) Q_{n-1} - sum_j C_j t^{j+1} Q_{n-2j-2}`, seeds `Q_0 = Q_1 = 1`.
pub fn q_fan_deletion(n_max: usize) -> Vec<IntPoly> {
    deletion_sequence(
        n_max,
        [IntPoly::one(), IntPoly::one()],
        &IntPoly::from_i64s(&[2, 1]),
    )
}

/// `Y_n = 2(t+1) Y_{n-1} - sum_j C_j t^{j+1} Y_{n-2j-2}`, seeds `Y_0 = 1`, `Y_1 = 1+t`.
pub fn y_fan_deletion(n_max: usize) -> Vec<IntPoly> {
    deletion_sequence(
        n_max,
        [IntPoly::one(), IntPoly::from_i64s(&[1, 1])],
        &IntPoly::from_i64s(&[2, 2]),
    )
}

/// `prod_{l<j} (m - 2l)`, i.e. `2^j j! binom(m/2, j)`.
fn half_falling(m: i64, j: usize) -> BigInt {
    (0..j as i64).fold(BigInt::one(), |acc, l| acc * BigInt::from(m - 2 * l))
}

/// The triple-sum closed form for `Y_{F_n}`:
///
/// ```text
/// [t^k] Y = sum_{j<=n/2} sum_{i<n} (-2)^j 3^{n-1-i} / 2^{n+2} binom(n-2j, k-j) binom(n-1, i)
///           * (binom((i-1)/2, j) + 3 binom((i+1)/2, j) + 4 binom(i/2, j))
/// ```
///
/// Evaluated over the integers: the `j`-th summand has denominator
/// dividing `2^{n+2} 2^j j!`, which is divided out once per `(k, j)`.
pub fn y_fan_closed(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let jmax = n / 2;
    let row = binomial_row(n - 1);
    let pow3: Vec<BigInt> = (0..n).map(|e| BigInt::from(3).pow(e as u32)).collect();
    // inner[j] = 2^{n+2} 2^j j! * sum_i (summand without the k-binomial)
    let inner: Vec<BigInt> = (0..=jmax)
        .map(|j| {
            let s: BigInt = (0..n)
                .map(|i| {
                    let m = i as i64;
                    let bracket = half_falling(m - 1, j)
                        + BigInt::from(3) * half_falling(m + 1, j)
                        + BigInt::from(4) * half_falling(m, j);
                    &pow3[n - 1 - i] * &row[i] * bracket
                })
                .sum();
            let sign_pow = if j % 2 == 0 { pow2(j) } else { -pow2(j) };
            s * sign_pow
        })
        .collect();
    let denom: Vec<BigInt> = (0..=jmax)
        .map(|j| pow2(n + 2 + j) * (1..=j).fold(BigInt::one(), |a, x| a * BigInt::from(x)))
        .collect();

    let coeffs = (0..=n)
        .map(|k| {
            let mut acc = BigRational::zero();
            for j in 0..=jmax.min(k) {
                let b = binomial((n - 2 * j) as i64, (k - j) as i64);
                if b.is_zero() {
                    continue;
                }
                acc += BigRational::new(b * &inner[j], denom[j].clone());
            }
            if acc.is_integer() {
                Ok(acc.to_integer())
            } else {
                Err(not_integral(format!("closed form of Y_{{F_{n}}} at t^{k}: {acc}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

/// `b_{n,0..=n/2}` in `Y_{F_n} = sum_j b_{n,j} t^j (1+t)^{n-2j}`, from
///
/// ```text
/// b_{n,j} = (-2)^j / 2^{n+2} sum_{i<n} 3^{n-1-i} binom(n-1, i)
///           * (binom((i-1)/2, j) + 3 binom((i+1)/2, j) + 4 binom(i/2, j))
/// ```
///
/// accumulated over the rationals with generalized binomials. Each
/// `b_{n,j}` must come out integral.
pub fn b_coefficients(n: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Ok(vec![BigInt::one()]);
    }
    let jmax = n / 2;
    let row = binomial_row(n - 1);
    let half = |m: i64| BigRational::new(BigInt::from(m), BigInt::from(2));
    let mut sums = vec![BigRational::zero(); jmax + 1];
    for i in 0..n {
        let m = i as i64;
        let lo = generalized_binomials(&half(m - 1), jmax);
        let hi = generalized_binomials(&half(m + 1), jmax);
        let mid = generalized_binomials(&half(m), jmax);
        let weight = BigRational::from_integer(BigInt::from(3).pow((n - 1 - i) as u32) * &row[i]);
        for j in 0..=jmax {
            let bracket = &lo[j]
                + &hi[j] * BigRational::from_integer(3.into())
                + &mid[j] * BigRational::from_integer(4.into());
            sums[j] += &weight * bracket;
        }
    }
    sums.into_iter()
        .enumerate()
        .map(|(j, s)| {
            let minus_two_j = BigRational::from_integer(BigInt::from(-2).pow(j as u32));
            let b = s * minus_two_j / BigRational::from_integer(pow2(n + 2));
            if b.is_integer() {
                Ok(b.to_integer())
            } else {
                Err(not_integral(format!("b_{{{n},{j}}} = {b}")))
            }
        })
        .collect()
}

/// `sum_j b_j t^j (1+t)^{n-2j}`.
pub fn expand_palindromic_basis(n: usize, b: &[BigInt]) -> IntPoly {
    let one_plus_t = IntPoly::from_i64s(&[1, 1]);
    b.iter().enumerate().fold(IntPoly::zero(), |acc, (j, bj)| {
        acc + one_plus_t.pow(n - 2 * j).shift(j).scale(bj)
    })
}

/// `Y_{F_n}` rebuilt from its `b`-expansion.
pub fn y_fan_from_b_expansion(n: usize) -> Result<IntPoly> {
    Ok(expand_palindromic_basis(n, &b_coefficients(n)?))
}

/// `tau(F_r)`: `C_{(r-1)/2}` for odd `r`, `0` for even `r`.
pub fn tau_fan(r: usize) -> BigInt {
    if r.is_multiple_of(2) {
        BigInt::zero()
    } else {
        catalan_numbers((r - 1) / 2).pop().unwrap()
    }
}

/// `a_{n,k} = (n-2k) 2^{n-2k-1} binom(n,k) / n` as a rational, without
/// any support restriction. `binom(n, k) = 0` for `k < 0` or `k > n`.
pub fn a_formula(n: usize, k: i64) -> BigRational {
    a_from_binomial(n, k, &binomial(n as i64, k))
}

fn a_from_binomial(n: usize, k: i64, b: &BigInt) -> BigRational {
    if b.is_zero() {
        return BigRational::zero();
    }
    let e = n as i64 - 2 * k - 1;
    let p = if e >= 0 {
        BigRational::from_integer(pow2(e as usize))
    } else {
        BigRational::new(BigInt::one(), pow2((-e) as usize))
    };
    BigRational::from_integer(BigInt::from(n as i64 - 2 * k) * b) * p
        / BigRational::from_integer(BigInt::from(n))
}

/// `a_{n,k}` with the convention `a_{n,k} = 0` for `k < 0` or `n < 2k+1`.
pub fn a_extended(n: usize, k: i64) -> BigRational {
    if k < 0 || (n as i64) < 2 * k + 1 {
        BigRational::zero()
    } else {
        a_formula(n, k)
    }
}

/// First `(n, k)` at which `a_{n,k} + 4 a_{n,k+1} = 2 a_{n+1,k+1}` fails,
/// for `1 <= n <= n_max` and `-1 <= k <= n`.
///
/// Rows are checked with the zero-extended array, except the single row
/// `n = 2k+1` where `a_{n,k}` is the top coefficient but `a_{n+1,k+1}` is
/// outside the support; there the zero-extended form reads
/// `a_{n,k} = 0` and is false, so the identity is checked on the
/// unrestricted formula values instead.
pub fn a_identity_counterexample(n_max: usize) -> Option<(usize, i64)> {
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    // rows[n][k] = a_formula(n, k) for 0 <= k <= n
    let rows: Vec<Vec<BigRational>> = (0..=n_max + 1)
        .map(|n| {
            if n == 0 {
                return vec![BigRational::zero()];
            }
            binomial_row(n)
                .iter()
                .enumerate()
                .map(|(k, b)| a_from_binomial(n, k as i64, b))
                .collect()
        })
        .collect();
    let at = |n: usize, k: i64, extended: bool| -> BigRational {
        let out_of_support = k < 0 || (n as i64) < 2 * k + 1;
        if k < 0 || k > n as i64 || (extended && out_of_support) {
            BigRational::zero()
        } else {
            rows[n][k as usize].clone()
        }
    };
    for n in 1..=n_max {
        for k in -1..=n as i64 {
            let extended = n as i64 != 2 * k + 1;
            let lhs = at(n, k, extended) + &four * at(n, k + 1, extended);
            let rhs = &two * at(n + 1, k + 1, extended);
            if lhs != rhs {
                return Some((n, k));
            }
        }
    }
    None
}

pub fn a_identity_check(n_max: usize) -> bool {
    a_identity_counterexample(n_max).is_none()
}

/// One odd/even pair `(A_{2i-1}, A_{2i})`: a single run length and a
/// composition (positive parts) of the following segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub run: usize,
    pub parts: Vec<usize>,
}

/// Element of `C'_n`: `(A_1, A_2, ..., A_{2k})` stored as `k` segments.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CPrimeStructure {
    segments: Vec<Segment>,
}

impl CPrimeStructure {
    /// Validates the interior-positivity rule: every part except the first
    /// run and the last composition must be nonempty.
    pub fn new(segments: Vec<Segment>) -> Result<Self> {
        let k = segments.len();
        if k == 0 {
            return Err(Error::Consistency("structure needs at least one segment".into()));
        }
        for (i, s) in segments.iter().enumerate() {
            if s.parts.contains(&0) {
                return Err(Error::Consistency(format!("zero part in segment {i}")));
            }
            if i > 0 && s.run == 0 {
                return Err(Error::Consistency(format!("interior run {i} is empty")));
            }
            if i + 1 < k && s.parts.is_empty() {
                return Err(Error::Consistency(format!("interior composition {i} is empty")));
            }
        }
        Ok(CPrimeStructure { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// `n = sum of all runs and parts`.
    pub fn size(&self) -> usize {
        self.segments
            .iter()
            .map(|s| s.run + s.parts.iter().sum::<usize>())
            .sum()
    }
}

impl fmt::Display for CPrimeStructure {
    /// `((0),(1),(1),())` style.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let parts: Vec<String> = s.parts.iter().map(usize::to_string).collect();
            write!(f, "({}),({})", s.run, parts.join(","))?;
        }
        f.write_str(")")
    }
}

/// Compositions of `m` with the first part descending: `(m), ..., (1, ..., 1)`.
fn compositions_of(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=m).rev() {
        for mut rest in compositions_of(m - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weak compositions of `n` into `len` parts where parts `1..len-1`
/// (0-based interior) are at least 1, in lexicographic order.
fn interior_positive_weak_compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(pos: usize, len: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == len - 1 {
            // the last part takes the remainder; it is interior only if len == 1
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        let min = usize::from(pos > 0);
        // leave room for the interior parts still to come
        let reserve = (len - 2).saturating_sub(pos);
        for v in min..=left.saturating_sub(reserve) {
            if v + reserve > left {
                break;
            }
            cur.push(v);
            rec(pos + 1, len, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, n, &mut Vec::new(), &mut out);
    out
}

/// `E_n`: weak compositions of `n` with an even number of parts whose
/// interior parts are positive.
pub fn even_weak_compositions(n: usize) -> Vec<Vec<usize>> {
    (1..=n / 2 + 1)
        .flat_map(|k| interior_positive_weak_compositions(n, 2 * k))
        .collect()
}

/// All of `C'_n`, by `k`, then by `sigma in E_n` lexicographically, then by
/// the product of the even-slot composition lists.
pub fn cprime_structures(n: usize) -> Result<Vec<CPrimeStructure>> {
    if n > MAX_CPRIME_N {
        return Err(Error::CapExceeded {
            what: "size for C' structure enumeration",
            cap: MAX_CPRIME_N,
            got: n,
        });
    }
    let mut out = Vec::new();
    for sigma in even_weak_compositions(n) {
        let mut partial: Vec<Vec<Segment>> = vec![Vec::new()];
        for pair in sigma.chunks(2) {
            let choices = compositions_of(pair[1]);
            partial = partial
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |parts| {
                        let mut p = prefix.clone();
                        p.push(Segment {
                            run: pair[0],
                            parts: parts.clone(),
                        });
                        p
                    })
                })
                .collect();
        }
        out.extend(partial.into_iter().map(|segments| CPrimeStructure { segments }));
    }
    Ok(out)
}

/// `chi_{F_l}(t) = t(t-1)(t-2)^{l-1}` for `l >= 1`, and `t` for `l = 0`.
pub fn fan_chromatic(l: usize) -> IntPoly {
    if l == 0 {
        return IntPoly::from_i64s(&[0, 1]);
    }
    IntPoly::from_i64s(&[0, -1, 1]) * IntPoly::from_i64s(&[-2, 1]).pow(l - 1)
}

fn q_of(q: &[IntPoly], a: usize) -> &IntPoly {
    q.get(a).expect("Q sequence too short for the structure")
}

/// `w(A) = prod_i (-1)^{l_i} t^{l_i+1} Q_{F_{a_{2i-1}}}(t) chi_{F_{l_i}}(1/t)`,
/// with `t^{l+1} chi_{F_l}(1/t)` taken as the reversal of `chi_{F_l}` at
/// degree `l+1`. `q[a]` must hold `Q_{F_a}`.
pub fn weight_w(a: &CPrimeStructure, q: &[IntPoly]) -> IntPoly {
    a.segments.iter().fold(IntPoly::one(), |acc, s| {
        let l = s.parts.len();
        let rev = fan_chromatic(l)
            .reverse(l + 1)
            .expect("chi_{F_l} has degree l+1");
        let factor = q_of(q, s.run) * &rev;
        let factor = if l % 2 == 0 { factor } else { -factor };
        acc * factor
    })
}

/// `w~(A) = prod_i 2^{l_i-1} t^{l_i} Q_{F_{a_{2i-1}}}(t)`, where an empty
/// even slot contributes `1` instead of `2^{-1}`.
pub fn weight_w_tilde(a: &CPrimeStructure, q: &[IntPoly]) -> IntPoly {
    a.segments.iter().fold(IntPoly::one(), |acc, s| {
        let l = s.parts.len();
        let factor = if l == 0 {
            q_of(q, s.run).clone()
        } else {
            q_of(q, s.run).scale(&pow2(l - 1)).shift(l)
        };
        acc * factor
    })
}

/// `(sum_{A in C'_n} w(A), sum_{A in C'_n} w~(A))` using closed-form `Q`.
pub fn weight_sums(n: usize) -> Result<(IntPoly, IntPoly)> {
    let structures = cprime_structures(n)?;
    let q = (0..=n).map(q_fan_closed).collect::<Result<Vec<_>>>()?;
    let w = structures
        .iter()
        .fold(IntPoly::zero(), |acc, a| acc + weight_w(a, &q));
    let wt = structures
        .iter()
        .fold(IntPoly::zero(), |acc, a| acc + weight_w_tilde(a, &q));
    Ok((w, wt))
}

/// Coefficient signs are all positive and consecutive from `t^0`.
pub fn all_coefficients_positive(p: &IntPoly) -> bool {
    !p.is_zero() && p.coeffs().iter().all(Signed::is_positive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn seg(run: usize, parts: &[usize]) -> Segment {
        Segment {
            run,
            parts: parts.to_vec(),
        }
    }

    fn st(segs: &[(usize, &[usize])]) -> CPrimeStructure {
        CPrimeStructure::new(segs.iter().map(|&(r, p)| seg(r, p)).collect()).unwrap()
    }

    #[test]
    fn q_closed_examples() {
        assert_eq!(q_fan_closed(0).unwrap(), ip(&[1]));
        assert_eq!(q_fan_closed(2).unwrap(), ip(&[2]));
        assert_eq!(q_fan_closed(5).unwrap(), ip(&[16, 12, 2]));
        assert_eq!(q_fan_closed(6).unwrap(), ip(&[32, 32, 10]));
    }

    #[test]
    fn q_recurrence_examples() {
        let q = q_fan_recurrence(6).unwrap();
        assert_eq!(&q[..3], &[ip(&[1]), ip(&[1]), ip(&[2])]);
        assert_eq!(q[3], ip(&[4, 1]));
        assert_eq!(q[4], ip(&[8, 4]));
        assert_eq!(q[6], ip(&[32, 32, 10]));
        assert_eq!(q_fan_recurrence(1).unwrap().len(), 2);
        assert_eq!(q_fan_recurrence(0).unwrap(), vec![ip(&[1])]);
    }

    #[test]
    fn q_deletion_examples() {
        let q = q_fan_deletion(5);
        assert_eq!(q[2], ip(&[2]));
        assert_eq!(q[3], ip(&[4, 1]));
        assert_eq!(q[5], ip(&[16, 12, 2]));
        assert_eq!(q_fan_deletion(0), vec![ip(&[1])]);
    }

    #[test]
    fn y_deletion_examples() {
        let y = y_fan_deletion(3);
        assert_eq!(y[0], ip(&[1]));
        assert_eq!(y[1], ip(&[1, 1]));
        assert_eq!(y[2], ip(&[2, 3, 2]));
        assert_eq!(y[3], ip(&[4, 9, 9, 4]));
    }

    #[test]
    fn y_closed_examples() {
        assert_eq!(y_fan_closed(0).unwrap(), ip(&[1]));
        assert_eq!(y_fan_closed(1).unwrap(), ip(&[1, 1]));
        assert_eq!(y_fan_closed(2).unwrap(), ip(&[2, 3, 2]));
        assert_eq!(y_fan_closed(3).unwrap(), ip(&[4, 9, 9, 4]));
    }

    #[test]
    fn b_examples() {
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(b_coefficients(1).unwrap(), v(&[1]));
        assert_eq!(b_coefficients(2).unwrap(), v(&[2, -1]));
        assert_eq!(b_coefficients(3).unwrap(), v(&[4, -3]));
        assert_eq!(y_fan_from_b_expansion(3).unwrap(), ip(&[4, 9, 9, 4]));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_fan(1), BigInt::from(1));
        assert_eq!(tau_fan(2), BigInt::from(0));
        assert_eq!(tau_fan(7), BigInt::from(5));
        assert_eq!(tau_fan(0), BigInt::from(0));
    }

    #[test]
    fn a_identity_examples() {
        // n = 3, k = 0: 4 + 4 = 8 = 2 * 4
        assert_eq!(a_extended(3, 0), BigRational::from_integer(4.into()));
        assert_eq!(a_extended(3, 1), BigRational::from_integer(1.into()));
        assert_eq!(a_extended(4, 1), BigRational::from_integer(4.into()));
        // the zero-extended form is false on the boundary row n = 2k+1 ...
        assert_ne!(
            a_extended(1, 0) + a_extended(1, 1) * BigRational::from_integer(4.into()),
            a_extended(2, 1) * BigRational::from_integer(2.into())
        );
        // ... where the formula values satisfy it
        assert_eq!(
            a_formula(1, 0) + a_formula(1, 1) * BigRational::from_integer(4.into()),
            a_formula(2, 1) * BigRational::from_integer(2.into())
        );
        assert!(a_identity_check(50));
    }

    #[test]
    fn a_matches_closed_form_coefficients() {
        for n in 1..30 {
            let q = q_fan_closed(n).unwrap();
            for k in 0..=n as i64 {
                assert_eq!(
                    a_extended(n, k),
                    BigRational::from_integer(q.coeff(k as usize)),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn even_weak_compositions_small() {
        assert_eq!(even_weak_compositions(0), vec![vec![0, 0]]);
        assert_eq!(even_weak_compositions(1), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            even_weak_compositions(2),
            vec![vec![0, 2], vec![1, 1], vec![2, 0], vec![0, 1, 1, 0]]
        );
    }

    #[test]
    fn cprime_examples() {
        let c0 = cprime_structures(0).unwrap();
        assert_eq!(c0, vec![st(&[(0, &[])])]);
        let c1 = cprime_structures(1).unwrap();
        assert_eq!(c1, vec![st(&[(0, &[1])]), st(&[(1, &[])])]);
        let c2: Vec<String> = cprime_structures(2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            c2,
            ["((0),(2))", "((0),(1,1))", "((1),(1))", "((2),())", "((0),(1),(1),())"]
        );
        assert!(matches!(cprime_structures(11), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn cprime_structures_are_valid_and_distinct() {
        for n in 0..=7 {
            let all = cprime_structures(n).unwrap();
            let set: std::collections::HashSet<_> = all.iter().collect();
            assert_eq!(set.len(), all.len());
            for a in &all {
                assert_eq!(a.size(), n);
                assert!(CPrimeStructure::new(a.segments().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn cprime_counts_match_fan_compositions() {
        for n in 1..=7 {
            assert_eq!(
                cprime_structures(n).unwrap().len(),
                Multigraph::fan(n).compositions().unwrap().len(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn structure_validation() {
        assert!(CPrimeStructure::new(vec![seg(0, &[1]), seg(0, &[])]).is_err());
        assert!(CPrimeStructure::new(vec![seg(1, &[]), seg(1, &[])]).is_err());
        assert!(CPrimeStructure::new(vec![seg(1, &[0])]).is_err());
        assert!(CPrimeStructure::new(vec![]).is_err());
    }

    #[test]
    fn weight_examples() {
        let q: Vec<IntPoly> = (0..=3).map(|n| q_fan_closed(n).unwrap()).collect();
        assert_eq!(weight_w(&st(&[(1, &[])]), &q), ip(&[1]));
        assert_eq!(weight_w(&st(&[(0, &[1])]), &q), ip(&[-1, 1]));
        assert_eq!(weight_w_tilde(&st(&[(1, &[])]), &q), ip(&[1]));
        assert_eq!(weight_w_tilde(&st(&[(0, &[1])]), &q), ip(&[0, 1]));
        let (w, wt) = weight_sums(1).unwrap();
        assert_eq!(w, ip(&[0, 1]));
        assert_eq!(wt, ip(&[1, 1]));
    }

    #[test]
    fn fan_chromatic_matches_graph_module() {
        for l in 1..=8 {
            assert_eq!(fan_chromatic(l), Multigraph::fan(l).chromatic_polynomial().unwrap());
        }
    }

    #[test]
    fn positivity_helper() {
        assert!(all_coefficients_positive(&ip(&[1, 2])));
        assert!(!all_coefficients_positive(&ip(&[0, 2])));
        assert!(!all_coefficients_positive(&IntPoly::zero()));
    }
}
