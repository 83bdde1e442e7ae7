use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Rational};

/// Polynomial in the indeterminate `p` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl PPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The indeterminate `p`.
    pub fn p() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(exp: u32, c: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from integer coefficients in ascending order of
    /// the exponent: `[c0, c1, c2]` is `c0 + c1 p + c2 p^2`.
    pub fn from_ints(ascending: &[i64]) -> Self {
        let mut out = Self::zero();
        for (e, &c) in ascending.iter().enumerate() {
            out.add_term(e as u32, Rational::from_integer(BigInt::from(c)));
        }
        out
    }

    /// `p^k + sign`, a shape that appears in most class formulas.
    pub fn p_pow_plus(k: u32, sign: i64) -> Self {
        let mut out = Self::monomial(k, Rational::one());
        out.add_term(0, Rational::from_integer(BigInt::from(sign)));
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rational {
        self.coeffs
            .get(&exp)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// Terms in ascending order of the exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        // Horner from the top exponent down.
        let Some(top) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for e in (0..=top).rev() {
            acc = acc * at + self.coeff(e);
        }
        acc
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &PPoly) -> (PPoly, PPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff().expect("non-zero divisor").clone();
        let mut quotient = PPoly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.coeff(rd) / &lead;
            let shift = rd - dd;
            quotient.add_term(shift, factor.clone());
            for (e, c) in divisor.terms() {
                rem.add_term(e + shift, -(c * &factor));
            }
        }
        (quotient, rem)
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &PPoly) -> Option<PPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Scales to leading coefficient one. The zero polynomial stays zero.
    pub fn monic(&self) -> PPoly {
        match self.leading_coeff() {
            Some(lead) => self.scale(&(Rational::one() / lead)),
            None => PPoly::zero(),
        }
    }

    /// Monic greatest common divisor over the rationals.
    pub fn gcd(&self, other: &PPoly) -> PPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.denom().is_one())
    }

    fn fmt_integer_poly(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            let mag_s = fmt_rational(&mag);
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag_s}")?,
                (1, true) => write!(f, "p")?,
                (1, false) => write!(f, "{mag_s}*p")?,
                (_, true) => write!(f, "p^{e}")?,
                (_, false) => write!(f, "{mag_s}*p^{e}")?,
            }
        }
        Ok(())
    }

    /// True when the rendering is a single signed term, so it needs no
    /// parentheses when used as a factor.
    pub fn is_single_term(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl fmt::Display for PPoly {
    /// Descending powers of `p`. Non-integral polynomials are printed with
    /// the common denominator pulled out, e.g. `(p-1)/24`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let den = self.denominator_lcm();
        if den.is_one() {
            return self.fmt_integer_poly(f);
        }
        let scaled = self.scale(&Rational::from_integer(den.clone()));
        if scaled.is_single_term() {
            write!(f, "{scaled}/{den}")
        } else {
            write!(f, "(")?;
            scaled.fmt_integer_poly(f)?;
            write!(f, ")/{den}")
        }
    }
}

impl fmt::Debug for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PPoly({self})")
    }
}

impl From<Rational> for PPoly {
    fn from(c: Rational) -> Self {
        PPoly::constant(c)
    }
}

impl<'a> Add<&'a PPoly> for &'a PPoly {
    type Output = PPoly;
    fn add(self, rhs: &'a PPoly) -> PPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a PPoly> for &'a PPoly {
    type Output = PPoly;
    fn sub(self, rhs: &'a PPoly) -> PPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a PPoly> for &'a PPoly {
    type Output = PPoly;
    fn mul(self, rhs: &'a PPoly) -> PPoly {
        let mut out = PPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &PPoly {
    type Output = PPoly;
    fn neg(self) -> PPoly {
        PPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for PPoly {
    type Output = PPoly;
    fn neg(self) -> PPoly {
        -&self
    }
}

impl AddAssign<&PPoly> for PPoly {
    fn add_assign(&mut self, rhs: &PPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&PPoly> for PPoly {
    fn sub_assign(&mut self, rhs: &PPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<PPoly> for PPoly {
            type Output = PPoly;
            fn $m(self, rhs: PPoly) -> PPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a PPoly> for PPoly {
            type Output = PPoly;
            fn $m(self, rhs: &'a PPoly) -> PPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for PPoly {
    fn product<I: Iterator<Item = PPoly>>(iter: I) -> PPoly {
        iter.fold(PPoly::one(), |acc, x| &acc * &x)
    }
}

impl std::iter::Sum for PPoly {
    fn sum<I: Iterator<Item = PPoly>>(iter: I) -> PPoly {
        iter.fold(PPoly::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn renders_descending() {
        assert_eq!(PPoly::from_ints(&[1, -2, 1]).to_string(), "p^2-2*p+1");
        assert_eq!(
            PPoly::from_ints(&[-1, 1]).scale(&rat(1, 24)).to_string(),
            "(p-1)/24"
        );
        assert_eq!(PPoly::from_int(-3).to_string(), "-3");
        assert_eq!(PPoly::constant(rat(1, 24)).to_string(), "1/24");
        assert_eq!(PPoly::zero().to_string(), "0");
        assert_eq!(PPoly::from_ints(&[0, -1]).to_string(), "-p");
    }

    #[test]
    fn division_and_gcd() {
        let a = PPoly::from_ints(&[-1, 0, 1]); // p^2 - 1
        let b = PPoly::from_ints(&[-1, 1]); // p - 1
        assert_eq!(a.exact_div(&b), Some(PPoly::from_ints(&[1, 1])));
        assert_eq!(a.gcd(&b), b);
        let c = PPoly::from_ints(&[1, 0, 1]);
        assert!(a.exact_div(&c).is_none());
        assert!(a.gcd(&c).is_one());
    }

    #[test]
    fn evaluation() {
        let f = PPoly::from_ints(&[-1, 1]).scale(&rat(1, 24));
        assert_eq!(f.eval(&int(101)), rat(25, 6));
        assert_eq!(f.eval(&int(2)), rat(1, 24));
    }
}
