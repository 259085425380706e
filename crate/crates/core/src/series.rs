//! Truncated power series in `u` whose coefficients are polynomials in `t`.
//!
//! The fan generating functions are algebraic in `u`. Rather than dividing
//! radicals, the sequences are read off by forward substitution: for a
//! factor `f` with a unit constant term and a right-hand side `r`, the
//! unknown `S` with `S * f = r` satisfies
//! `S_n = (r_n - sum_{k>=1} f_k S_{n-k}) / f_0`.
//!
//! All binary operations require equal truncation orders and panic
//! otherwise; mixing orders is a programming error.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};

/// `sum_{n=0}^{order} coeffs[n] u^n + O(u^{order+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<RatPoly>,
}

impl USeries {
    pub fn zero(order: usize) -> Self {
        USeries {
            coeffs: vec![RatPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatPoly::one();
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<RatPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, RatPoly::zero());
        USeries { coeffs }
    }

    /// `p * u^k`, truncated.
    pub fn monomial(p: RatPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = p;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &RatPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        USeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    fn check_order(&self, other: &USeries) {
        assert_eq!(
            self.order(),
            other.order(),
            "truncation orders differ: {} vs {}",
            self.order(),
            other.order()
        );
    }

    /// The unique `S` with `S * self = rhs` up to the common order.
    ///
    /// Requires the constant coefficient of `self` to be a nonzero
    /// rational constant.
    pub fn solve(&self, rhs: &USeries) -> Result<USeries> {
        self.check_order(rhs);
        let f0 = match self.coeffs[0].coeffs() {
            [c] => c.clone(),
            _ => return Err(Error::NotInvertible),
        };
        let inv_f0 = f0.recip();
        let n_max = self.order();
        let mut out: Vec<RatPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = rhs.coeffs[n].clone();
            for k in 1..=n {
                let fk = &self.coeffs[k];
                if fk.is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc = acc - fk * &out[n - k];
            }
            out.push(acc.scale(&inv_f0));
        }
        Ok(USeries { coeffs: out })
    }

    pub fn inverse(&self) -> Result<USeries> {
        self.solve(&USeries::one(self.order()))
    }
}

impl Add for &USeries {
    type Output = USeries;
    fn add(self, rhs: &USeries) -> USeries {
        self.check_order(rhs);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &USeries {
    type Output = USeries;
    fn sub(self, rhs: &USeries) -> USeries {
        self.check_order(rhs);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &USeries {
    type Output = USeries;
    fn mul(self, rhs: &USeries) -> USeries {
        self.check_order(rhs);
        let n_max = self.order();
        let mut coeffs = vec![RatPoly::zero(); n_max + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n_max - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        USeries { coeffs }
    }
}

impl Neg for &USeries {
    type Output = USeries;
    fn neg(self) -> USeries {
        USeries {
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

/// The `i`-th Catalan number `binom(2i, i) / (i + 1)`.
pub fn catalan(i: usize) -> BigInt {
    catalan_numbers(i).pop().unwrap()
}

/// `[C_0, ..., C_m]`.
pub fn catalan_numbers(m: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(m + 1);
    let mut c = BigInt::one();
    out.push(c.clone());
    for i in 0..m {
        // C_{i+1} = C_i * 2(2i+1) / (i+2), always exact
        c = c * BigInt::from(2 * (2 * i + 1)) / BigInt::from(i + 2);
        out.push(c.clone());
    }
    out
}

/// `sqrt(1 - 4 t u^2) = 1 - 2 sum_{i>=1} C_{i-1} t^i u^{2i}`, truncated at `u^order`.
pub fn sqrt_one_minus_4tu2(order: usize) -> USeries {
    let cat = catalan_numbers(order / 2);
    let mut s = USeries::one(order);
    for i in 1..=order / 2 {
        let c = BigRational::from_integer(-BigInt::from(2) * &cat[i - 1]);
        s.coeffs[2 * i] = RatPoly::monomial(c, i);
    }
    s
}

fn t_poly(c: &[i64]) -> RatPoly {
    IntPoly::from_i64s(c).to_rat()
}

fn integral_sequence(s: &USeries, what: &str) -> Result<Vec<IntPoly>> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(n, p)| {
            p.try_to_int().ok_or_else(|| Error::NotIntegral {
                context: format!("{what} at n = {n}: {p}"),
            })
        })
        .collect()
}

/// `Q_{F_0}, ..., Q_{F_{n_max}}` from the Catalan form of the generating
/// function:
/// `(sum_{n>=1} Q_n u^n) * (1 - 2u - sum_{i>=1} C_{i-1} t^i u^{2i}) = u`.
pub fn q_fan_from_gf(n_max: usize) -> Result<Vec<IntPoly>> {
    let order = n_max;
    let sq = sqrt_one_minus_4tu2(order);
    // (1 - 4u + sqrt(1 - 4tu^2)) / 2
    let linear = USeries::from_coeffs(vec![t_poly(&[1]), t_poly(&[-4])], order);
    let factor = (&linear + &sq).scale(&BigRational::new(1.into(), 2.into()));
    let rhs = USeries::monomial(RatPoly::one(), 1, order);
    let tail = factor.solve(&rhs)?;
    let mut out = integral_sequence(&tail, "Q generating function")?;
    out[0] = IntPoly::one();
    Ok(out)
}

/// `Y_{F_0}, ..., Y_{F_{n_max}}` from
/// `Psi_Y * (1 - 2(t+1)u + sum_{j>=0} C_j t^{j+1} u^{2j+2}) = 1 - (t+1)u`.
pub fn y_fan_from_gf(n_max: usize) -> Result<Vec<IntPoly>> {
    let order = n_max;
    let sq = sqrt_one_minus_4tu2(order);
    // (-3 + 4(1+t)u + sqrt(1 - 4tu^2)) / (-2)
    let linear = USeries::from_coeffs(vec![t_poly(&[-3]), t_poly(&[4, 4])], order);
    let factor = (&linear + &sq).scale(&BigRational::new((-1).into(), 2.into()));
    let rhs = USeries::from_coeffs(vec![t_poly(&[1]), t_poly(&[-1, -1])], order);
    let psi = factor.solve(&rhs)?;
    integral_sequence(&psi, "Y generating function")
}
