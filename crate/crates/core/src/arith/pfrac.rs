use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

use super::{PPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PFracError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero fraction")]
    DivisionByZero,
}

/// Reduced fraction of polynomials in `p`.
///
/// The denominator is monic and coprime to the numerator, so two fractions
/// are equal exactly when their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PFrac {
    num: PPoly,
    den: PPoly,
}

impl PFrac {
    pub fn new(num: PPoly, den: PPoly) -> Result<Self, PFracError> {
        if den.is_zero() {
            return Err(PFracError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(PPoly::zero()));
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lead = den.leading_coeff().expect("non-zero denominator").clone();
        let inv = Rational::from_integer(1.into()) / lead;
        Ok(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(num: PPoly) -> Self {
        Self {
            num,
            den: PPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(PPoly::one())
    }

    pub fn numer(&self) -> &PPoly {
        &self.num
    }

    pub fn denom(&self) -> &PPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this fraction equals, when the denominator is one.
    pub fn as_poly(&self) -> Option<&PPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self, PFracError> {
        if self.num.is_zero() {
            return Err(PFracError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Value at a rational point; `None` if the denominator vanishes there.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        if d == Rational::from_integer(0.into()) {
            return None;
        }
        Some(self.num.eval(at) / d)
    }
}

impl fmt::Display for PFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &PPoly| {
            if p.is_single_term() && p.has_integer_coeffs() {
                p.to_string()
            } else {
                format!("({p})")
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for PFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PFrac({self})")
    }
}

impl From<PPoly> for PFrac {
    fn from(p: PPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a PFrac> for &'a PFrac {
    type Output = PFrac;
    fn add(self, rhs: &'a PFrac) -> PFrac {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        PFrac::new(num, &self.den * &rhs.den).expect("denominators are non-zero")
    }
}

impl<'a> Sub<&'a PFrac> for &'a PFrac {
    type Output = PFrac;
    fn sub(self, rhs: &'a PFrac) -> PFrac {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a PFrac> for &'a PFrac {
    type Output = PFrac;
    fn mul(self, rhs: &'a PFrac) -> PFrac {
        PFrac::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominators are non-zero")
    }
}

impl<'a> Div<&'a PFrac> for &'a PFrac {
    type Output = Result<PFrac, PFracError>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &'a PFrac) -> Result<PFrac, PFracError> {
        Ok(self * &rhs.recip()?)
    }
}

impl Neg for &PFrac {
    type Output = PFrac;
    fn neg(self) -> PFrac {
        PFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn normalizes_common_factors() {
        let f = PPoly::from_ints(&[-1, 0, 1]);
        let g = PPoly::from_ints(&[2, 2]);
        let q = PFrac::new(f, g).unwrap();
        assert_eq!(q.numer(), &PPoly::from_ints(&[-1, 1]).scale(&rat(1, 2)));
        assert!(q.denom().is_one());
        assert_eq!(q.as_poly().unwrap().to_string(), "(p-1)/2");
    }

    #[test]
    fn denominator_is_monic_and_sign_sits_upstairs() {
        let q = PFrac::new(PPoly::from_int(3), PPoly::from_ints(&[1, -2])).unwrap();
        assert_eq!(q.denom().leading_coeff(), Some(&rat(1, 1)));
        assert_eq!(q.numer(), &PPoly::constant(rat(-3, 2)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            PFrac::new(PPoly::one(), PPoly::zero()),
            Err(PFracError::ZeroDenominator)
        );
    }
}
