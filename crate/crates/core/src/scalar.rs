//! Gaussian rationals: `re + im*i` with arbitrary-precision rational parts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::pauli::Phase;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::integer(1)
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn integer(n: i64) -> Self {
        Scalar::new(rat(n, 1), BigRational::zero())
    }

    /// `num/den`, real. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(rat(num, den), BigRational::zero())
    }

    /// `(re_num + im_num*i)/den`. Panics if `den == 0`.
    pub fn complex(re_num: i64, im_num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(rat(re_num, den), rat(im_num, den))
    }

    pub fn from_phase(phase: Phase) -> Self {
        match phase.exponent() {
            0 => Scalar::integer(1),
            1 => Scalar::i(),
            2 => Scalar::integer(-1),
            _ => -Scalar::i(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for negative reals and for negative multiples of `i`.
    pub fn is_negative_real_or_imaginary(&self) -> bool {
        (self.im.is_zero() && self.re.is_negative()) || (self.re.is_zero() && self.im.is_negative())
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|^2`, always real.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn mul_phase(&self, phase: Phase) -> Self {
        match phase.exponent() {
            0 => self.clone(),
            1 => Scalar::new(-self.im.clone(), self.re.clone()),
            2 => -self.clone(),
            _ => Scalar::new(self.im.clone(), -self.re.clone()),
        }
    }

    /// Lossy conversion for the numerical cross-check.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

/// Formats as an expression the element parser accepts back, e.g. `-1/2`,
/// `i`, `3/4*i`, `(1 - 1/2*i)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigRational| {
            if v.is_one() {
                f.write_str("i")
            } else {
                write!(f, "{v}*i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_negative() {
                    f.write_str("-")?;
                }
                imag(f, &self.im.abs())
            }
            (false, false) => {
                write!(f, "({} {} ", self.re, if self.im.is_negative() { "-" } else { "+" })?;
                imag(f, &self.im.abs())?;
                f.write_str(")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::integer(-1));
        assert_eq!(Scalar::ratio(1, 2) + Scalar::ratio(1, 3), Scalar::ratio(5, 6));
        assert_eq!(Scalar::one().div(&i).unwrap(), -Scalar::i());
        assert_eq!(Scalar::zero().inv(), Err(AlgebraError::DivisionByZero));
        let z = Scalar::complex(3, -4, 5);
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
        assert_eq!(z.norm_sqr(), BigRational::one());
    }

    #[test]
    fn phase_multiplication() {
        let z = Scalar::complex(1, 2, 1);
        for e in 0..4 {
            let p = Phase::from_exponent(e);
            assert_eq!(z.mul_phase(p), &z * &Scalar::from_phase(p));
        }
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::complex(0, 3, 4).to_string(), "3/4*i");
        assert_eq!(Scalar::complex(2, -1, 2).to_string(), "(1 - 1/2*i)");
    }
}
