//! Degeneracy-locus classes on the flag bundle and their push-forward to the
//! moduli space.

use std::collections::HashMap;
use std::fmt;

use super::CycleError;
use crate::arith::{int, PPoly, Rational};
use crate::polyengine::{double_schubert_with, to_elementary, MPoly, Monomial, Var};
use crate::tautring::{RingMode, TautClass};
use crate::weyl::{reduced_word, AdmissiblePartition};

/// Sign inside the linear factors `x_i -/+ y_j` of the top class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductSign {
    Minus,
    Plus,
}

/// Order in which the stripping word `a_1 ... a_l` is turned into operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordOrder {
    /// `∂_{a_1} ... ∂_{a_l}` as an operator product, so `∂_{a_l}` acts first.
    Verbatim,
    /// `∂_{a_1}` acts first.
    Reversed,
}

/// Constant term of the sequence `c_i = sigma_i(x) + sigma_i(y)` feeding the
/// staircase determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaConstant {
    /// `c_0 = sigma_0(x) + sigma_0(y) = 2`.
    Literal,
    /// `c_0 = 1`.
    Unit,
}

/// The three choices that turn the degeneracy formula into a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Conventions {
    pub product_sign: ProductSign,
    pub word_order: WordOrder,
    pub delta_constant: DeltaConstant,
}

impl Conventions {
    /// The choices pinned by the genus three push-forward table.
    pub const FROZEN: Self = Self {
        product_sign: ProductSign::Minus,
        word_order: WordOrder::Verbatim,
        delta_constant: DeltaConstant::Literal,
    };

    /// The frozen conventions with exactly one switch flipped, one entry per
    /// switch.
    pub fn single_flips() -> Vec<(&'static str, Self)> {
        let f = Self::FROZEN;
        vec![
            (
                "product_sign",
                Self {
                    product_sign: ProductSign::Plus,
                    ..f
                },
            ),
            (
                "word_order",
                Self {
                    word_order: WordOrder::Reversed,
                    ..f
                },
            ),
            (
                "delta_constant",
                Self {
                    delta_constant: DeltaConstant::Unit,
                    ..f
                },
            ),
        ]
    }

    /// All eight combinations.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        for product_sign in [ProductSign::Minus, ProductSign::Plus] {
            for word_order in [WordOrder::Verbatim, WordOrder::Reversed] {
                for delta_constant in [DeltaConstant::Literal, DeltaConstant::Unit] {
                    out.push(Self {
                        product_sign,
                        word_order,
                        delta_constant,
                    });
                }
            }
        }
        out
    }
}

impl Default for Conventions {
    fn default() -> Self {
        Self::FROZEN
    }
}

impl fmt::Display for Conventions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.product_sign {
            ProductSign::Minus => "prod_{i+j<=g} (x_i - y_j)",
            ProductSign::Plus => "prod_{i+j<=g} (x_i + y_j)",
        };
        let order = match self.word_order {
            WordOrder::Verbatim => "last letter of the stripping word acts first",
            WordOrder::Reversed => "first letter of the stripping word acts first",
        };
        let c0 = match self.delta_constant {
            DeltaConstant::Literal => "c_0 = 2",
            DeltaConstant::Unit => "c_0 = 1",
        };
        write!(
            f,
            "product: {sign}; operators: {order}; staircase determinant: {c0}"
        )
    }
}

/// `prod_{i+j<=g} (x_i -/+ y_j) * Delta(x, y)` with integer coefficients.
pub fn top_class(g: usize, conv: Conventions) -> MPoly<i128> {
    let mut prod = MPoly::<i128>::one();
    for i in 1..=g {
        for j in 1..=g - i {
            let y = match conv.product_sign {
                ProductSign::Minus => MPoly::var(Var::Y(j)).neg(),
                ProductSign::Plus => MPoly::var(Var::Y(j)),
            };
            prod = prod.mul(&MPoly::var(Var::X(i)).add(&y));
        }
    }
    let c0 = match conv.delta_constant {
        DeltaConstant::Literal => 2,
        DeltaConstant::Unit => 1,
    };
    prod.mul(&double_schubert_with(g, c0))
}

/// Substitutes `x_i = p l_i` and `y_i = -l_i`.
pub fn specialize(f: &MPoly<i128>, g: usize) -> MPoly<PPoly> {
    let mut out = MPoly::zero();
    let mut p_pow: HashMap<u32, PPoly> = HashMap::new();
    for (m, c) in f.terms() {
        let mut l = Monomial::ONE;
        let (mut px, mut sy) = (0u32, 0u32);
        for i in 1..=g {
            let (a, b) = (m.exponent(Var::X(i)), m.exponent(Var::Y(i)));
            px += a;
            sy += b;
            l = l.with_exponent(Var::L(i), a + b + m.exponent(Var::L(i)));
        }
        let c = if sy % 2 == 1 { -c } else { *c };
        let base = p_pow
            .entry(px)
            .or_insert_with(|| PPoly::monomial(px, int(1)));
        out.add_term(l, &base.scale(&Rational::from_integer(c.into())));
    }
    out
}

/// Operators in the order they act, for the stratum of `mu`.
pub fn operator_sequence(mu: &AdmissiblePartition, conv: Conventions) -> Vec<usize> {
    let mut word = reduced_word(mu);
    if conv.word_order == WordOrder::Verbatim {
        word.reverse();
    }
    word
}

/// Class of the degeneracy locus of `mu` on the flag bundle, as a polynomial
/// in the Chern roots `l_1..l_g`.
pub fn fulton_class(
    mu: &AdmissiblePartition,
    conv: Conventions,
) -> Result<MPoly<PPoly>, CycleError> {
    let g = mu.genus();
    let mut f = top_class(g, conv);
    for i in operator_sequence(mu, conv) {
        f = f.divided_difference(g, i)?;
    }
    Ok(specialize(&f, g))
}

/// Computes classes for many strata at once, sharing the partial operator
/// applications they have in common.
pub struct FultonEngine {
    g: usize,
    conv: Conventions,
    cache: HashMap<Vec<usize>, MPoly<i128>>,
}

impl FultonEngine {
    pub fn new(g: usize, conv: Conventions) -> Self {
        let mut cache = HashMap::new();
        cache.insert(Vec::new(), top_class(g, conv));
        Self { g, conv, cache }
    }

    pub fn class(&mut self, mu: &AdmissiblePartition) -> Result<MPoly<PPoly>, CycleError> {
        if mu.genus() != self.g {
            return Err(CycleError::GenusMismatch(mu.genus(), self.g));
        }
        let ops = operator_sequence(mu, self.conv);
        let start = (0..=ops.len())
            .rev()
            .find(|&k| self.cache.contains_key(&ops[..k]))
            .expect("empty prefix is cached");
        let mut f = self.cache[&ops[..start]].clone();
        for k in start..ops.len() {
            f = f.divided_difference(self.g, ops[k])?;
            self.cache.insert(ops[..=k].to_vec(), f.clone());
        }
        Ok(specialize(&f, self.g))
    }
}

/// `[1..n-1, 1..n-2, ..., 1]`, a reduced word for the longest permutation.
pub fn longest_word(n: usize) -> Vec<usize> {
    (1..n).rev().flat_map(|k| 1..=k).collect()
}

/// [`longest_word`] under the diagram flip `s_i -> s_{n-i}`, which fixes the
/// longest permutation; a different reduced word for `n >= 3`.
pub fn alternate_longest_word(n: usize) -> Vec<usize> {
    longest_word(n).into_iter().map(|i| n - i).collect()
}

/// Push-forward along the full flag bundle of a rank `g` bundle with Chern
/// roots `l_1..l_g`, normalized so that `l_1^{g-1} l_2^{g-2} ... l_{g-1}`
/// maps to one.
pub fn pushforward_to_ag(f: &MPoly<PPoly>, g: usize) -> Result<TautClass, CycleError> {
    pushforward_with_word(f, g, &longest_word(g))
}

/// Push-forward through the divided differences of `word` (last letter acts
/// first), then `sigma_i(l) -> lambda_i`.
pub fn pushforward_with_word(
    f: &MPoly<PPoly>,
    g: usize,
    word: &[usize],
) -> Result<TautClass, CycleError> {
    let mut h = f.clone();
    for &i in word.iter().rev() {
        h = h.divided_difference_l(i)?;
    }
    if !h.is_symmetric_in_l(g) {
        return Err(CycleError::NotSymmetric);
    }
    let expansion = to_elementary(&h, g)?;
    let mut out = TautClass::zero(g, RingMode::Compact);
    for (ks, c) in expansion {
        let indices: Vec<usize> = ks
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i + 1, k as usize))
            .collect();
        let term = TautClass::monomial(g, RingMode::Compact, &indices)?.scale(&c);
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Push-forward of the degeneracy class of `mu`.
pub fn stratum_pushforward(
    mu: &AdmissiblePartition,
    conv: Conventions,
) -> Result<TautClass, CycleError> {
    pushforward_to_ag(&fulton_class(mu, conv)?, mu.genus())
}
