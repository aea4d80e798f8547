//! Rational functions in one variable over the rationals, kept in a
//! canonical reduced form so that equality is plain coefficient equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// A reduced ratio of polynomials.
///
/// Invariants:
///   1. The denominator is nonzero and `gcd(num, den) = 1`.
///   2. The lowest-order nonzero coefficient of the denominator is `+1`.
///   3. Zero is represented as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den);
        let (num, r1) = num.div_rem(&g);
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r1.is_zero() && r2.is_zero());
        let (_, low) = den.lowest_nonzero().expect("denominator is nonzero");
        let inv = low.recip();
        Ok(Self {
            num: num.scaled(&inv),
            den: den.scaled(&inv),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Self::new(num, den).expect("product of nonzero denominators is nonzero")
    }

    /// Multiplies by a rational constant; canonical form is preserved.
    pub fn scaled(&self, factor: &BigRational) -> Self {
        if factor.is_zero() || self.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scaled(factor),
            den: self.den.clone(),
        }
    }

    /// `deg(num) - deg(den)`; the zero function has no degree.
    pub fn degree(&self) -> Result<i64> {
        let num_deg = self.num.degree().ok_or(Error::ZeroRationalFunction)?;
        let den_deg = self.den.degree().expect("denominator is nonzero");
        Ok(num_deg as i64 - den_deg as i64)
    }

    /// First `cutoff + 1` power-series coefficients by exact long division.
    pub fn expand(&self, cutoff: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let den_deg = self.den.degree().expect("denominator is nonzero");
        let mut out: Vec<BigRational> = Vec::with_capacity(cutoff + 1);
        for k in 0..=cutoff {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(den_deg) {
                acc -= self.den.coeff(j) * &out[k - j];
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// The same value as a pair of primitive integer coefficient arrays,
    /// lowest degree first: denominators are cleared and the common integer
    /// content is divided out, leaving the denominator's lowest-order
    /// coefficient positive.
    pub fn integer_coefficient_arrays(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut lcm = BigInt::one();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            lcm = lcm.lcm(c.denom());
        }
        let scale_up = |p: &Poly| -> Vec<BigInt> {
            p.coeffs()
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        };
        let mut num = scale_up(&self.num);
        let mut den = scale_up(&self.den);
        let mut content = BigInt::zero();
        for c in num.iter().chain(den.iter()) {
            content = content.gcd(c);
        }
        if !content.is_zero() && !content.is_one() {
            for c in num.iter_mut().chain(den.iter_mut()) {
                *c /= &content;
            }
        }
        debug_assert!(den.iter().find(|c| !c.is_zero()).unwrap().is_positive());
        (num, den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
