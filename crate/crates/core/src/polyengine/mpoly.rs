use std::cmp::Ordering;
use std::fmt;

use rustc_hash::FxHashMap;

use super::PolyError;
use crate::algebra::{Coeff, RingValue};

/// Variables per alphabet.
pub const ALPHABET: usize = 8;
const SLOTS: usize = 3 * ALPHABET;

/// A variable `x_i`, `y_i` or `l_i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
    L(usize),
}

impl Var {
    fn slot(self) -> usize {
        let (base, i) = match self {
            Var::X(i) => (0, i),
            Var::Y(i) => (ALPHABET, i),
            Var::L(i) => (2 * ALPHABET, i),
        };
        assert!(
            (1..=ALPHABET).contains(&i),
            "variable index {i} out of range"
        );
        base + i - 1
    }

    fn from_slot(s: usize) -> Self {
        let i = s % ALPHABET + 1;
        match s / ALPHABET {
            0 => Var::X(i),
            1 => Var::Y(i),
            _ => Var::L(i),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::L(i) => write!(f, "l{i}"),
        }
    }
}

/// Exponent vector over the fixed alphabet `x_1..x_8, y_1..y_8, l_1..l_8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u8; SLOTS]);

impl Monomial {
    pub const ONE: Self = Self([0; SLOTS]);

    pub fn var(v: Var) -> Self {
        let mut m = Self::ONE;
        m.0[v.slot()] = 1;
        m
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.slot()] as u32
    }

    pub fn with_exponent(mut self, v: Var, e: u32) -> Self {
        self.0[v.slot()] = u8::try_from(e).expect("exponent overflow");
        self
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        out
    }

    /// Nonzero exponents as `(variable, exponent)` pairs.
    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(s, &e)| (Var::from_slot(s), e as u32))
    }

    fn swap(mut self, a: Var, b: Var) -> Self {
        self.0.swap(a.slot(), b.slot());
        self
    }

    /// Graded lexicographic order with `x_1 > x_2 > ... > y_1 > ... > l_8`.
    pub fn grlex_cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors()
            .map(|(v, e)| {
                if e == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

/// Sparse polynomial in the `x`, `y`, `l` alphabets.
#[derive(Clone, PartialEq)]
pub struct MPoly<C: Coeff> {
    terms: FxHashMap<Monomial, C>,
}

impl<C: Coeff> Default for MPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> MPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: FxHashMap::default(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &c);
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign_ref(c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in an unspecified order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms in descending graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, C)> {
        let mut v: Vec<(Monomial, C)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| b.0.grlex_cmp(&a.0));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &c.mul_ref(k));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        acc.reserve(small.len() * large.len() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let c = ca.mul_ref(cb);
                acc.entry(ma.mul(mb))
                    .and_modify(|slot| slot.add_assign_ref(&c))
                    .or_insert(c);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Self { terms: acc }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap(a, b), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `-v` for `v`.
    pub fn negate_var(&self, v: Var) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.exponent(v) % 2 == 1 {
                        c.neg_ref()
                    } else {
                        c.clone()
                    };
                    (*m, c)
                })
                .collect(),
        }
    }

    /// `(F - F|_{a <-> b}) / (a - b)`, term by term:
    /// `(a^m b^n - a^n b^m)/(a - b) = a^n b^n h_{m-n-1}(a, b)` for `m > n`.
    pub fn swap_difference(&self, a: Var, b: Var) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let (m, n) = (mono.exponent(a), mono.exponent(b));
            if m == n {
                continue;
            }
            let (hi, lo, c) = if m > n {
                (m, n, c.clone())
            } else {
                (n, m, c.neg_ref())
            };
            for k in 0..hi - lo {
                let t = mono
                    .with_exponent(a, lo + k)
                    .with_exponent(b, lo + (hi - lo - 1 - k));
                out.add_term(t, &c);
            }
        }
        out
    }

    /// `(F - F|_{v -> -v}) / (2v)`: odd powers `v^m` drop to `v^{m-1}`, even
    /// powers vanish.
    pub fn sign_difference(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let m = mono.exponent(v);
            if m % 2 == 1 {
                out.add_term(mono.with_exponent(v, m - 1), c);
            }
        }
        out
    }

    /// Type-`C_g` divided difference on the `x` alphabet: `∂_i` swaps
    /// `x_i, x_{i+1}` for `i < g`, and `∂_g` negates `x_g`.
    pub fn divided_difference(&self, g: usize, i: usize) -> Result<Self, PolyError> {
        if i == 0 || i > g || g > ALPHABET {
            return Err(PolyError::BadOperator { i, g });
        }
        Ok(if i < g {
            self.swap_difference(Var::X(i), Var::X(i + 1))
        } else {
            self.sign_difference(Var::X(g))
        })
    }

    /// Type-`A` divided difference on the `l` alphabet.
    pub fn divided_difference_l(&self, i: usize) -> Result<Self, PolyError> {
        if i == 0 || i >= ALPHABET {
            return Err(PolyError::BadOperator { i, g: ALPHABET });
        }
        Ok(self.swap_difference(Var::L(i), Var::L(i + 1)))
    }

    /// Exact quotient by `a - b`, failing if there is a remainder.
    pub fn div_by_difference(&self, a: Var, b: Var) -> Result<Self, PolyError> {
        // Group by the monomial with a and b removed and by the joint degree
        // d, then divide each binary form sum c_k a^k b^{d-k} by (a - b).
        let mut groups: FxHashMap<(Monomial, u32), Vec<C>> = FxHashMap::default();
        for (mono, c) in &self.terms {
            let (ea, eb) = (mono.exponent(a), mono.exponent(b));
            let rest = mono.with_exponent(a, 0).with_exponent(b, 0);
            let d = ea + eb;
            let slot = groups
                .entry((rest, d))
                .or_insert_with(|| vec![C::zero(); d as usize + 1]);
            slot[ea as usize] = c.clone();
        }
        let mut out = Self::zero();
        for ((rest, d), cs) in groups {
            // c_k = q_{k-1} - q_k with q_{-1} = q_d = 0.
            let mut q_prev = C::zero();
            for k in 0..d {
                let mut q = q_prev.clone();
                q.add_assign_ref(&cs[k as usize].neg_ref());
                let t = rest.with_exponent(a, k).with_exponent(b, d - 1 - k);
                out.add_term(t, &q);
                q_prev = q;
            }
            if q_prev != cs[d as usize] {
                return Err(PolyError::InexactDivision);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }

    /// Invariance under every transposition of `l_1..l_n`.
    pub fn is_symmetric_in_l(&self, n: usize) -> bool {
        (1..n).all(|i| self.swap_vars(Var::L(i), Var::L(i + 1)) == *self)
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.iter().enumerate() {
            let cs = c.to_string();
            let simple = !cs[1..].contains(['+', '-']) && !cs.contains('/');
            let body = match (m == &Monomial::ONE, cs.as_str()) {
                (true, _) => cs.clone(),
                (false, "1") => m.to_string(),
                (false, "-1") => format!("-{m}"),
                (false, _) if simple => format!("{cs}*{m}"),
                (false, _) => format!("({cs})*{m}"),
            };
            match (k, body.strip_prefix('-')) {
                (0, _) => write!(f, "{body}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<C: Coeff> RingValue for MPoly<C> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, k: i64) -> Self {
        self.scale(&C::from_i64(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<i128>;

    fn x(i: usize) -> P {
        P::var(Var::X(i))
    }

    fn l(i: usize) -> P {
        P::var(Var::L(i))
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(x(1).divided_difference(2, 1).unwrap(), P::one());
        assert!(x(3).pow(2).divided_difference(3, 3).unwrap().is_zero());
        assert_eq!(x(3).divided_difference(3, 3).unwrap(), P::one());
        assert_eq!(l(1).divided_difference_l(1).unwrap(), P::one());
        assert!(l(1).mul(&l(2)).divided_difference_l(1).unwrap().is_zero());
        assert_eq!(
            l(1).pow(2).divided_difference_l(1).unwrap(),
            l(1).add(&l(2))
        );
        assert!(x(1).divided_difference(2, 3).is_err());
    }

    #[test]
    fn closed_forms_match_numerator_division() {
        let f = x(1)
            .pow(3)
            .mul(&x(2))
            .add(&x(2).pow(2).scale(&5))
            .sub(&x(1).mul(&x(3)));
        let swapped = f.swap_vars(Var::X(1), Var::X(2));
        let via_div = f
            .sub(&swapped)
            .div_by_difference(Var::X(1), Var::X(2))
            .unwrap();
        assert_eq!(f.divided_difference(3, 1).unwrap(), via_div);
    }

    #[test]
    fn inexact_division_is_reported() {
        assert_eq!(
            x(1).div_by_difference(Var::X(1), Var::X(2)),
            Err(PolyError::InexactDivision)
        );
    }

    #[test]
    fn rendering_is_graded_lex() {
        let f = x(2)
            .add(&x(1).pow(2).scale(&3))
            .sub(&P::one())
            .add(&x(1).mul(&l(2)));
        assert_eq!(f.to_string(), "3*x1^2 + x1*l2 + x2 - 1");
    }
}
