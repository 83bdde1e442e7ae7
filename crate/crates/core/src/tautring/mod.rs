//! The tautological ring `R_g = Q[u_1..u_g] / ((1 + u_1 + ... + u_g)(1 - u_1 + ... ± u_g) - 1)`.
//!
//! Classes are stored on the square-free basis `lambda_S = prod_{i in S} lambda_i`.
//! Products are normalized by the square rewrite
//! `lambda_k^2 = 2 sum_{j=1}^{k} (-1)^{j-1} lambda_{k+j} lambda_{k-j}`
//! (with `lambda_0 = 1` and `lambda_m = 0` for `m > g`), which is the
//! degree `2k` part of the defining relation.

mod monomial;
pub mod oracle;
mod reduce;

pub use monomial::LambdaMonomial;
pub use reduce::{
    reduce_monomial, reduce_monomial_with_budget, ReductionStats, DEFAULT_STEP_BUDGET,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::RingValue;
use crate::arith::{factorial, odd_double_factorial, proportionality_factor, PPoly, Rational};
use reduce::ring_for;

/// Largest genus the ring (and its packed exponent keys) supports.
pub const MAX_GENUS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("ring mode mismatch")]
    ModeMismatch,
    #[error("genus {0} is outside 1..={MAX_GENUS}")]
    GenusOutOfRange(usize),
    #[error("lambda index {index} is outside 1..={g}")]
    IndexOutOfRange { index: usize, g: usize },
    #[error("class is not homogeneous")]
    Inhomogeneous,
    #[error("class has degree {found}, expected top degree {expected}")]
    NotTopDegree { found: usize, expected: usize },
    #[error("degrees are only defined on the compact ring")]
    OpenModeDegree,
    #[error("reduction exceeded the step budget of {0}")]
    StepBudgetExceeded(usize),
    #[error("coefficient is not divisible by {0}")]
    NotDivisible(String),
}

/// Which ring a class lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingMode {
    /// `R_g`, the tautological ring of a toroidal compactification.
    Compact,
    /// `R_g / (lambda_g) = R_{g-1}`, the tautological ring of `A_g` itself.
    Open,
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingMode::Compact => write!(f, "compact"),
            RingMode::Open => write!(f, "open"),
        }
    }
}

/// `G = g(g+1)/2`, the top degree of `R_g`.
pub fn top_degree(g: usize) -> usize {
    g * (g + 1) / 2
}

fn check_genus(g: usize) -> Result<(), RingError> {
    if g == 0 || g > MAX_GENUS {
        Err(RingError::GenusOutOfRange(g))
    } else {
        Ok(())
    }
}

/// Element of the tautological ring with coefficients in `Q[p]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TautClass {
    g: usize,
    mode: RingMode,
    terms: BTreeMap<LambdaMonomial, PPoly>,
}

impl TautClass {
    pub fn zero(g: usize, mode: RingMode) -> Self {
        assert!((1..=MAX_GENUS).contains(&g), "genus {g} out of range");
        Self {
            g,
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(g: usize, mode: RingMode) -> Self {
        Self::zero(g, mode).with_term(LambdaMonomial::EMPTY, PPoly::one())
    }

    /// `lambda_i` (zero for `i = g` in open mode).
    pub fn lambda(g: usize, mode: RingMode, i: usize) -> Result<Self, RingError> {
        Self::monomial(g, mode, &[i])
    }

    /// The reduced product `prod lambda_i` over `indices` (repeats allowed).
    pub fn monomial(g: usize, mode: RingMode, indices: &[usize]) -> Result<Self, RingError> {
        check_genus(g)?;
        let reduced = reduce_monomial(g, indices)?;
        Ok(reduced.into_mode(mode))
    }

    /// A single basis term `c * lambda_S`.
    pub fn basis_term(g: usize, mode: RingMode, mono: LambdaMonomial, c: PPoly) -> Self {
        Self::zero(g, mode).with_term(mono, c)
    }

    pub fn scalar(g: usize, mode: RingMode, c: PPoly) -> Self {
        Self::basis_term(g, mode, LambdaMonomial::EMPTY, c)
    }

    fn with_term(mut self, mono: LambdaMonomial, c: PPoly) -> Self {
        self.add_term(mono, &c);
        self
    }

    pub(crate) fn add_term(&mut self, mono: LambdaMonomial, c: &PPoly) {
        if c.is_zero() {
            return;
        }
        if self.mode == RingMode::Open && mono.contains(self.g) {
            return;
        }
        debug_assert!(mono.max_index().unwrap_or(0) <= self.g);
        let slot = self.terms.entry(mono).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn mode(&self) -> RingMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: by degree, then lexicographically by the
    /// sorted index list.
    pub fn terms(&self) -> impl Iterator<Item = (LambdaMonomial, &PPoly)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mono: LambdaMonomial) -> PPoly {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The common degree of all terms; `None` for the zero class or a mixed
    /// class.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Reinterprets the class in another mode. Going to open mode kills
    /// `lambda_g`; going to compact mode lifts along the square-free basis.
    pub fn into_mode(self, mode: RingMode) -> Self {
        if mode == self.mode {
            return self;
        }
        let mut out = Self::zero(self.g, mode);
        for (m, c) in &self.terms {
            out.add_term(*m, c);
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<(), RingError> {
        if self.g != other.g {
            return Err(RingError::GenusMismatch(self.g, other.g));
        }
        if self.mode != other.mode {
            return Err(RingError::ModeMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            g: self.g,
            mode: self.mode,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &PPoly) -> Self {
        let mut out = Self::zero(self.g, self.mode);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.add_term(*m, &(v * c));
        }
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.scale(&PPoly::constant(c.clone()))
    }

    /// Ring product, reduced to the square-free basis. In open mode every
    /// term containing `lambda_g` is dropped.
    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_compatible(other)?;
        let ring = ring_for(self.g)?;
        let mut out = Self::zero(self.g, self.mode);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let cab = ca * cb;
                let nf = ring.product(*ma, *mb)?;
                for (m, r) in nf.iter() {
                    out.add_term(*m, &cab.scale(r));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self, RingError> {
        let mut acc = Self::one(self.g, self.mode);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_div(&self, d: &PPoly) -> Result<Self, RingError> {
        let mut out = Self::zero(self.g, self.mode);
        for (m, c) in &self.terms {
            let q = c
                .exact_div(d)
                .ok_or_else(|| RingError::NotDivisible(d.to_string()))?;
            out.add_term(*m, &q);
        }
        Ok(out)
    }

    /// Substitutes a value for `p` in every coefficient.
    pub fn eval_p(&self, at: &Rational) -> Self {
        let mut out = Self::zero(self.g, self.mode);
        for (m, c) in &self.terms {
            out.add_term(*m, &PPoly::constant(c.eval(at)));
        }
        out
    }
}

impl fmt::Display for TautClass {
    /// Canonical text form: terms by degree then lexicographic index list,
    /// each as `c*l1*l3`, joined by ` + ` / ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let term = render_term(*m, c);
            match (k, term.strip_prefix('-')) {
                (0, _) => write!(f, "{term}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {term}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TautClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TautClass[g={}, {}]({self})", self.g, self.mode)
    }
}

fn render_term(m: LambdaMonomial, c: &PPoly) -> String {
    if m.is_empty() {
        return c.to_string();
    }
    let mono = m.to_string();
    if c.is_one() {
        return mono;
    }
    if (-c).is_one() {
        return format!("-{mono}");
    }
    let cs = c.to_string();
    if c.is_single_term() && !cs.contains('/') {
        format!("{cs}*{mono}")
    } else {
        format!("({cs})*{mono}")
    }
}

impl RingValue for TautClass {
    fn zero_like(&self) -> Self {
        Self::zero(self.g, self.mode)
    }
    fn one_like(&self) -> Self {
        Self::one(self.g, self.mode)
    }
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("operands share a ring")
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("operands share a ring")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn scaled(&self, k: i64) -> Self {
        self.scale(&PPoly::from_int(k))
    }
}

/// The square-free basis of the ring, ordered by the bitmask
/// `eps_1 + 2 eps_2 + 4 eps_3 + ...` of the exponent vector.
pub fn basis(g: usize, mode: RingMode) -> Vec<LambdaMonomial> {
    let n = match mode {
        RingMode::Compact => g,
        RingMode::Open => g.saturating_sub(1),
    };
    (0u32..(1 << n)).map(LambdaMonomial::from_bits).collect()
}

/// Degree on the Lagrangian Grassmannian, normalized by
/// `deg(lambda_1 lambda_2 ... lambda_g) = 1`.
pub fn degree_yg(c: &TautClass) -> Result<PPoly, RingError> {
    if c.mode != RingMode::Compact {
        return Err(RingError::OpenModeDegree);
    }
    if c.is_zero() {
        return Ok(PPoly::zero());
    }
    let expected = top_degree(c.g);
    match c.homogeneous_degree() {
        None => Err(RingError::Inhomogeneous),
        Some(d) if d != expected => Err(RingError::NotTopDegree { found: d, expected }),
        Some(_) => Ok(c.coeff(LambdaMonomial::full(c.g))),
    }
}

/// Degree on the compactified moduli space: the Y_g degree times
/// `(-1)^G 2^{-g} prod_{k=1}^{g} zeta(1-2k)`.
pub fn degree_ag_tilde(c: &TautClass) -> Result<PPoly, RingError> {
    let on_yg = degree_yg(c)?;
    Ok(on_yg.scale(&proportionality_factor(c.g)))
}

/// `deg lambda_1^G` from the closed form `p(g) G! prod_k 1/(2k-1)!!`.
pub fn lambda1_power_degree(g: usize) -> Rational {
    let big_g = top_degree(g);
    let mut acc = proportionality_factor(g) * Rational::from_integer(factorial(big_g));
    for k in 1..=g {
        acc /= Rational::from_integer(odd_double_factorial(k));
    }
    acc
}

/// Convenience: the class `lambda_1^n` in the given ring.
pub fn lambda1_power(g: usize, mode: RingMode, n: u32) -> Result<TautClass, RingError> {
    TautClass::lambda(g, mode, 1)?.pow(n)
}
