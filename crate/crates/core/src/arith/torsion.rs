//! Integers bounding the order of the torsion class `lambda_g`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorsionError {
    #[error("gcd for n_{g} did not stabilize within {budget} primes")]
    NoStabilization { g: usize, budget: usize },
    #[error("n_{g} = {ng} does not divide the prime-power product {rhs}")]
    CrossCheck { g: usize, ng: BigUint, rhs: BigUint },
    #[error("genus must be positive")]
    ZeroGenus,
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        r
    };
    'outer: for &a in &BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Knobs for the gcd accumulation behind [`ng`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NgConfig {
    /// Consecutive primes that must leave the gcd unchanged.
    pub window: usize,
    /// Hard cap on the number of primes consumed.
    pub budget: usize,
}

impl Default for NgConfig {
    fn default() -> Self {
        Self {
            window: 25,
            budget: 10_000,
        }
    }
}

/// `n_g`: gcd of `p^{2g} - 1` over all primes `p > 2g + 1`.
pub fn ng(g: usize) -> Result<BigUint, TorsionError> {
    ng_with(g, NgConfig::default())
}

pub fn ng_with(g: usize, config: NgConfig) -> Result<BigUint, TorsionError> {
    if g == 0 {
        return Err(TorsionError::ZeroGenus);
    }
    let exp = BigUint::from(2 * g as u64);
    let mut p = next_prime(2 * g as u64 + 1);
    let mut acc = BigUint::from(p).pow(2 * g as u32) - BigUint::one();
    let mut unchanged = 0;
    let mut used = 1;
    while unchanged < config.window {
        if used >= config.budget {
            return Err(TorsionError::NoStabilization {
                g,
                budget: config.budget,
            });
        }
        p = next_prime(p);
        used += 1;
        // p^{2g} - 1 mod acc, without materializing the power.
        let r = BigUint::from(p).modpow(&exp, &acc);
        let r = (r + &acc - BigUint::one()) % &acc;
        let next = acc.gcd(&r);
        if next == acc {
            unchanged += 1;
        } else {
            unchanged = 0;
            acc = next;
        }
    }
    let rhs = factorial_prime_parts(g);
    if !(&rhs % &acc).is_zero() {
        return Err(TorsionError::CrossCheck { g, ng: acc, rhs });
    }
    Ok(acc)
}

/// The `q`-part of `m!`, i.e. `q^{v_q(m!)}` by Legendre's formula.
pub fn ppart_factorial(m: u64, q: u64) -> BigUint {
    let mut v = 0u32;
    let mut power = q;
    while power <= m {
        v += (m / power) as u32;
        match power.checked_mul(q) {
            Some(next) => power = next,
            None => break,
        }
    }
    BigUint::from(q).pow(v)
}

/// `prod_q ([2gq/(q-1)]!)_q` over primes `q`.
///
/// Only primes `q <= 2g + 1` contribute: beyond that the floor is below `q`.
pub fn factorial_prime_parts(g: usize) -> BigUint {
    let g = g as u64;
    let mut acc = BigUint::one();
    let mut q = 2;
    while q <= 2 * g + 1 {
        let m = (2 * g * q) / (q - 1);
        acc *= ppart_factorial(m, q);
        q = next_prime(q);
    }
    acc
}

/// `(g-1)! * prod_{i=1}^{g} n_i`, an annihilator of `lambda_g` on the open
/// moduli space.
pub fn torsion_bound(g: usize) -> Result<BigUint, TorsionError> {
    if g == 0 {
        return Err(TorsionError::ZeroGenus);
    }
    let mut acc: BigUint = (1..g as u64).map(BigUint::from).product();
    for i in 1..=g {
        acc *= ng(i)?;
    }
    Ok(acc)
}
