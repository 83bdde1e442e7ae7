//! Exact scalar arithmetic: rationals, polynomials and rational functions in
//! the characteristic `p`, Bernoulli numbers and zeta values, and the integer
//! torsion bounds for the top Hodge class.

mod linalg;
mod pfrac;
mod ppoly;
mod torsion;

pub use linalg::{determinant, rank, solve_rref, Rref};
pub use pfrac::{PFrac, PFracError};
pub use ppoly::PPoly;
pub use torsion::{
    factorial_prime_parts, is_prime, next_prime, ng, ng_with, ppart_factorial, torsion_bound,
    NgConfig, TorsionError,
};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` as a [`Rational`]. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `num/den`, or `num` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational as `num/den` unconditionally (wire format).
pub fn fmt_rational_wire(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// All Bernoulli numbers `B_0..=B_n` from the recurrence
/// `sum_{k=0}^{m} C(m+1, k) B_k = 0`, so `B_1 = -1/2`.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(n + 1);
    table.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            let c = binomial(BigInt::from(m + 1), BigInt::from(k));
            acc += b * Rational::from_integer(c);
        }
        table.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    table
}

pub fn bernoulli(n: usize) -> Rational {
    bernoulli_table(n).pop().expect("table is never empty")
}

/// `zeta(1 - 2k) = -B_{2k} / (2k)` for `k >= 1`.
pub fn zeta_neg_odd(k: usize) -> Rational {
    assert!(k >= 1, "zeta_neg_odd needs k >= 1");
    let b = bernoulli(2 * k);
    -b / int(2 * k as i64)
}

/// `(-1)^G prod_{j=1}^{g} zeta(1 - 2j) / 2` with `G = g(g+1)/2`.
///
/// This is the degree of `lambda_1 ... lambda_g` on the compactified moduli
/// space, and `p(0) = 1`.
pub fn proportionality_factor(g: usize) -> Rational {
    let table = bernoulli_table(2 * g);
    let mut acc = Rational::one();
    for j in 1..=g {
        let zeta = -&table[2 * j] / int(2 * j as i64);
        acc *= zeta / int(2);
    }
    if (g * (g + 1) / 2) % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// Double factorial `(2k-1)!!` for `k >= 1`, and `1` for `k = 0`.
pub fn odd_double_factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Sign helper: `(-1)^n` as a rational.
pub fn sign_pow(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_indices_vanish() {
        let table = bernoulli_table(31);
        for n in (3..=31).step_by(2) {
            assert!(table[n].is_zero(), "B_{n} = {}", table[n]);
        }
    }

    #[test]
    fn zeta_at_negative_odd_integers() {
        assert_eq!(zeta_neg_odd(1), rat(-1, 12));
        assert_eq!(zeta_neg_odd(2), rat(1, 120));
        assert_eq!(zeta_neg_odd(3), rat(-1, 252));
        assert_eq!(zeta_neg_odd(4), rat(1, 240));
    }

    #[test]
    fn proportionality_factors() {
        assert_eq!(proportionality_factor(0), int(1));
        assert_eq!(proportionality_factor(1), rat(1, 24));
        assert_eq!(proportionality_factor(2), rat(1, 5760));
        assert_eq!(proportionality_factor(3), rat(1, 2903040));
    }

    #[test]
    fn rational_parse_and_format() {
        assert_eq!(parse_rational("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(fmt_rational(&rat(4, 2)), "2");
        assert_eq!(fmt_rational_wire(&rat(4, 2)), "2/1");
        assert_eq!(fmt_rational(&rat(-1, 24)), "-1/24");
    }

    #[test]
    fn double_factorials() {
        assert_eq!(odd_double_factorial(0), BigInt::from(1));
        assert_eq!(odd_double_factorial(3), BigInt::from(15));
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
