//! Dense univariate polynomials over exact coefficient rings.
//!
//! [`IntPoly`] holds integer coefficients and is the type of every public
//! invariant (`Q`, `Y`, chromatic and characteristic polynomials).
//! [`RatPoly`] is used for intermediate values that only become integral
//! after summation, and for Sturm chains.
//!
//! The zero polynomial is the empty coefficient vector. Every constructor
//! trims trailing zeros, so the last stored coefficient is always nonzero.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
}

impl Coeff for BigInt {}
impl Coeff for BigRational {}

/// Dense polynomial in `t`; index `i` holds the coefficient of `t^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let mut a = a.clone();
                    a *= c;
                    a
                })
                .collect(),
        )
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `t^d * p(1/t)`; requires `deg p <= d`.
    pub fn reverse(&self, d: usize) -> Result<Self> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::DegreeExceedsBound { degree: deg, bound: d });
            }
        }
        let mut coeffs = vec![T::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn is_palindromic(&self, d: usize) -> Result<bool> {
        Ok(self.reverse(d)? == *self)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` coefficientwise and re-trims.
    pub fn map<U: Coeff>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Log-concave coefficients (`a_i^2 >= a_{i-1} a_{i+1}` at every
    /// interior index) with no zero strictly between two nonzero
    /// coefficients. The zero polynomial passes.
    pub fn is_log_concave_no_internal_zeros(&self) -> bool {
        let a = &self.coeffs;
        let log_concave = a
            .windows(3)
            .all(|w| &w[1] * &w[1] >= &w[0] * &w[2]);
        let Some(first) = a.iter().position(|c| !c.is_zero()) else {
            return true;
        };
        // `a` is trimmed, so the last entry is the last nonzero one.
        let no_internal_zeros = a[first..].iter().all(|c| !c.is_zero());
        log_concave && no_internal_zeros
    }

    /// Hadamard product with `(1+t)^s`, `s = deg p`.
    pub fn hadamard_normalize(&self) -> Result<IntPoly> {
        let s = self.degree().ok_or(Error::ZeroPolynomial)?;
        let row = binomial_row(s);
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(row.iter())
                .map(|(c, b)| c * b)
                .collect(),
        ))
    }

    /// Whether every complex root of `p` is real, decided by an exact
    /// Sturm chain of the square-free part.
    pub fn sturm_real_rooted(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = self.to_rat();
        let g = p.gcd(&p.derivative());
        let (sqfree, rem) = p.div_rem(&g);
        debug_assert!(rem.is_zero());
        let n = sqfree.degree().expect("square-free part of a nonzero polynomial");
        Ok(sqfree.count_real_roots() == n)
    }
}

impl RatPoly {
    pub fn from_int(p: &IntPoly) -> Self {
        p.to_rat()
    }

    /// Succeeds iff every denominator is 1.
    pub fn to_int(&self) -> Result<IntPoly> {
        self.try_to_int().ok_or_else(|| Error::NotIntegral {
            context: format!("{self}"),
        })
    }

    pub fn try_to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    pub fn derivative(&self) -> RatPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (RatPoly::zero(), RatPoly::zero());
        };
        if nd < dd {
            return (RatPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let prod = &q * d;
                rem[k + j] -= &prod;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    pub fn monic(&self) -> RatPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => RatPoly::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Standard Sturm chain `p, p', -rem(p, p'), ...`.
    pub fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = Vec::new();
        if self.is_zero() {
            return chain;
        }
        chain.push(self.clone());
        let d = self.derivative();
        if d.is_zero() {
            return chain;
        }
        chain.push(d);
        loop {
            let k = chain.len();
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            // Positive rescaling keeps signs and shrinks the numbers.
            let r = -r.scale(&r.leading_coeff().unwrap().abs().recip());
            chain.push(r);
        }
        chain
    }

    /// Number of distinct real roots, from sign variations of the Sturm
    /// chain at `-inf` and `+inf`.
    pub fn count_real_roots(&self) -> usize {
        let chain = self.sturm_chain();
        let signs_at = |neg_inf: bool| -> Vec<bool> {
            chain
                .iter()
                .map(|p| {
                    let positive = p.leading_coeff().unwrap().is_positive();
                    let odd = p.degree().unwrap() % 2 == 1;
                    positive ^ (neg_inf && odd)
                })
                .collect()
        };
        let variations = |s: Vec<bool>| s.windows(2).filter(|w| w[0] != w[1]).count();
        variations(signs_at(true)) - variations(signs_at(false))
    }
}

/// `x(x-1)...(x-j+1)/j!`.
pub fn generalized_binomial(x: &BigRational, j: usize) -> BigRational {
    generalized_binomials(x, j).pop().unwrap()
}

/// `[binom(x, 0), ..., binom(x, jmax)]`.
pub fn generalized_binomials(x: &BigRational, jmax: usize) -> Vec<BigRational> {
    let mut row = Vec::with_capacity(jmax + 1);
    let mut cur = BigRational::one();
    row.push(cur.clone());
    for j in 0..jmax {
        let jr = BigRational::from_integer(BigInt::from(j));
        cur = cur * (x - &jr) / BigRational::from_integer(BigInt::from(j + 1));
        row.push(cur.clone());
    }
    row
}

/// `[binom(n, 0), ..., binom(n, n)]`.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut cur = BigInt::one();
    row.push(cur.clone());
    for k in 0..n {
        cur = cur * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(cur.clone());
    }
    row
}

/// `binom(n, k)` for integers, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Exact quotient, or `None` if `d` does not divide `n`.
pub fn exact_div(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = n.div_rem(d);
    r.is_zero().then_some(q)
}

impl<T: Coeff> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{self}")
    }
}

/// Ascending coefficient list, e.g. `[16,12,2]`.
impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl<T: Coeff> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(short.coeffs.iter()) {
            *a += b;
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            // Skipping zeros makes sparse-in-practice operands (monomials) cheap.
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let mut prod = a.clone();
                prod *= b;
                coeffs[i + j] += &prod;
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().cloned().map(Neg::neg).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl<T: Coeff> $imp<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Coeff> $imp<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Coeff> $imp<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(ip(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(ip(&[0, 0]).is_zero());
        assert_eq!(ip(&[0]).degree(), None);
        assert_eq!(IntPoly::monomial(BigInt::zero(), 4), IntPoly::zero());
    }

    #[test]
    fn ring_ops() {
        let one_plus_t = ip(&[1, 1]);
        assert_eq!(&one_plus_t * &one_plus_t, ip(&[1, 2, 1]));
        assert_eq!(&ip(&[3, 4]) * &IntPoly::zero(), IntPoly::zero());
        assert_eq!((ip(&[4, 1]) + ip(&[8, 4])).shift(1), ip(&[0, 12, 5]));
        assert_eq!(ip(&[1, 2]) - ip(&[1, 2]), IntPoly::zero());
        assert_eq!(ip(&[1, 2, 3]).scale(&BigInt::from(-2)), ip(&[-2, -4, -6]));
        assert_eq!(ip(&[1, 1]).pow(3), ip(&[1, 3, 3, 1]));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(ip(&[2]).reverse(2).unwrap(), ip(&[0, 0, 2]));
        assert_eq!(ip(&[4, 1]).reverse(3).unwrap(), ip(&[0, 0, 1, 4]));
        assert_eq!(ip(&[16, 12, 2]).reverse(5).unwrap(), ip(&[0, 0, 0, 2, 12, 16]));
        assert_eq!(
            ip(&[1, 2, 3]).reverse(1),
            Err(Error::DegreeExceedsBound { degree: 2, bound: 1 })
        );
    }

    #[test]
    fn palindromic_examples() {
        assert!(ip(&[2, 3, 2]).is_palindromic(2).unwrap());
        assert!(ip(&[1]).is_palindromic(0).unwrap());
        assert!(!ip(&[4, 1]).is_palindromic(1).unwrap());
        // a palindrome of degree 3 is not a palindrome "of degree 4"
        assert!(!ip(&[1, 3, 3, 1]).is_palindromic(4).unwrap());
        assert!(ip(&[1, 2]).is_palindromic(0).is_err());
    }

    #[test]
    fn log_concavity_examples() {
        assert!(ip(&[16, 12, 2]).is_log_concave_no_internal_zeros());
        assert!(!ip(&[1, 0, 1]).is_log_concave_no_internal_zeros());
        assert!(ip(&[1, 3, 1]).is_log_concave_no_internal_zeros());
        assert!(!ip(&[1, 1, 3]).is_log_concave_no_internal_zeros());
        assert!(IntPoly::zero().is_log_concave_no_internal_zeros());
        assert!(ip(&[5, -7]).is_log_concave_no_internal_zeros());
        // zeros below the lowest nonzero coefficient are not internal
        assert!(ip(&[0, 0, 1, 1]).is_log_concave_no_internal_zeros());
    }

    #[test]
    fn hadamard_examples() {
        assert_eq!(ip(&[16, 12, 2]).hadamard_normalize().unwrap(), ip(&[16, 24, 2]));
        assert_eq!(ip(&[7]).hadamard_normalize().unwrap(), ip(&[7]));
        assert_eq!(ip(&[4, 1]).hadamard_normalize().unwrap(), ip(&[4, 1]));
        assert_eq!(IntPoly::zero().hadamard_normalize(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sturm_examples() {
        assert!(ip(&[1, 2, 1]).sturm_real_rooted().unwrap());
        assert!(!ip(&[1, 0, 1]).sturm_real_rooted().unwrap());
        assert!(ip(&[16, 24, 2]).sturm_real_rooted().unwrap());
        assert!(ip(&[5]).sturm_real_rooted().unwrap());
        assert_eq!(IntPoly::zero().sturm_real_rooted(), Err(Error::ZeroPolynomial));
        // (t-1)^2 (t^2+1): repeated real root plus a complex pair
        let p = ip(&[1, -2, 1]) * ip(&[1, 0, 1]);
        assert!(!p.sturm_real_rooted().unwrap());
        // (t-1)^3 (t+2)^2 t
        let p = ip(&[-1, 1]).pow(3) * ip(&[2, 1]).pow(2) * ip(&[0, 1]);
        assert!(p.sturm_real_rooted().unwrap());
        assert_eq!(p.to_rat().gcd(&p.to_rat().derivative()).degree(), Some(3));
    }

    #[test]
    fn count_real_roots_distinct() {
        // t^3 - t has three distinct roots; t^3 + t has one
        assert_eq!(ip(&[0, -1, 0, 1]).to_rat().count_real_roots(), 3);
        assert_eq!(ip(&[0, 1, 0, 1]).to_rat().count_real_roots(), 1);
        assert_eq!(ip(&[-2, 0, 1]).to_rat().count_real_roots(), 2);
    }

    #[test]
    fn generalized_binomial_examples() {
        assert_eq!(generalized_binomial(&rat(1, 2), 1), rat(1, 2));
        assert_eq!(generalized_binomial(&rat(-1, 2), 2), rat(3, 8));
        assert_eq!(generalized_binomial(&rat(3, 1), 2), rat(3, 1));
        assert_eq!(generalized_binomial(&rat(3, 1), 5), rat(0, 1));
        assert_eq!(generalized_binomial(&rat(-7, 3), 0), rat(1, 1));
    }

    #[test]
    fn rational_to_int() {
        let p = RatPoly::new(vec![rat(4, 2), rat(-3, 1)]);
        assert_eq!(p.to_int().unwrap(), ip(&[2, -3]));
        let q = RatPoly::new(vec![rat(1, 2)]);
        assert!(matches!(q.to_int(), Err(Error::NotIntegral { .. })));
    }

    #[test]
    fn division() {
        let a = ip(&[-1, 0, 0, 1]).to_rat();
        let b = ip(&[-1, 1]).to_rat();
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, ip(&[1, 1, 1]).to_rat());
        assert!(r.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(ip(&[16, 12, 2]).to_string(), "[16,12,2]");
        assert_eq!(ip(&[0, 2, -3, 1]).to_string(), "[0,2,-3,1]");
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|v| IntPoly::from_i64s(&v))
    }

    proptest! {
        #[test]
        fn reverse_is_involutive(p in arb_poly(), extra in 0usize..4) {
            let d = p.degree().unwrap_or(0) + extra;
            let r = p.reverse(d).unwrap();
            prop_assert_eq!(r.reverse(d).unwrap(), p.clone());
            prop_assert_eq!(p.is_palindromic(d).unwrap(), r == p);
        }

        #[test]
        fn generalized_binomial_matches_integer_binomial(m in 0i64..40, j in 0usize..45) {
            let x = BigRational::from_integer(m.into());
            prop_assert_eq!(
                generalized_binomial(&x, j),
                BigRational::from_integer(binomial(m, j as i64))
            );
        }

        #[test]
        fn product_degree_adds(p in arb_poly(), q in arb_poly()) {
            let pq = &p * &q;
            match (p.degree(), q.degree()) {
                (Some(a), Some(b)) => prop_assert_eq!(pq.degree(), Some(a + b)),
                _ => prop_assert!(pq.is_zero()),
            }
        }

        #[test]
        fn products_of_linear_factors_are_real_rooted(
            roots in prop::collection::vec(-6i64..6, 1..6),
            lead in 1i64..5,
        ) {
            let p = roots
                .iter()
                .fold(ip(&[lead]), |acc, &r| acc * ip(&[-r, 1]));
            prop_assert!(p.sturm_real_rooted().unwrap());
            let with_pair = p * ip(&[1, 1, 1]);
            prop_assert!(!with_pair.sturm_real_rooted().unwrap());
        }
    }
}
