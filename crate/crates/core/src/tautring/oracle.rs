//! Brute-force model of the tautological ring by linear algebra.
//!
//! Each graded piece of `Q[lambda_1..lambda_g]` is cut down by the span of
//! `r_k * m`, where `r_k = sum_{i+j=2k} (-1)^i lambda_i lambda_j` and `m`
//! runs over monomials. Nothing here uses the square rewrite, so it serves as
//! an independent check on [`super::reduce_monomial`].

use std::collections::HashMap;

use num_traits::Zero;

use super::{check_genus, top_degree, LambdaMonomial, RingError, RingMode, TautClass};
use crate::arith::{int, solve_rref, PPoly, Rational};

type Exps = Vec<usize>;

struct Piece {
    index: HashMap<Exps, usize>,
    monomials: Vec<Exps>,
    /// Row with pivot column `c`, for every dependent monomial `c`.
    pivot_rows: HashMap<usize, Vec<Rational>>,
}

pub struct OracleRing {
    g: usize,
    pieces: Vec<Piece>,
}

/// Exponent vectors (indexed by `i - 1`) of weighted degree `d`.
fn monomials_of_degree(g: usize, d: usize) -> Vec<Exps> {
    fn go(i: usize, left: usize, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left / i {
            cur[i - 1] = e;
            go(i - 1, left - e * i, cur, out);
        }
        cur[i - 1] = 0;
    }
    let mut out = Vec::new();
    go(g, d, &mut vec![0; g], &mut out);
    out.sort();
    out
}

fn is_square_free(e: &Exps) -> bool {
    e.iter().all(|&x| x <= 1)
}

impl OracleRing {
    pub fn new(g: usize) -> Result<Self, RingError> {
        check_genus(g)?;
        // One degree past the top so the vanishing there is also modeled.
        let pieces = (0..=top_degree(g) + 1).map(|d| Self::piece(g, d)).collect();
        Ok(Self { g, pieces })
    }

    fn piece(g: usize, d: usize) -> Piece {
        let monomials = monomials_of_degree(g, d);
        let index: HashMap<Exps, usize> = monomials
            .iter()
            .enumerate()
            .map(|(k, e)| (e.clone(), k))
            .collect();
        let mut rows = Vec::new();
        for k in 1..=g {
            if 2 * k > d {
                break;
            }
            for m in monomials_of_degree(g, d - 2 * k) {
                let mut row = vec![Rational::zero(); monomials.len()];
                for i in 0..=2 * k {
                    let j = 2 * k - i;
                    if i > g || j > g {
                        continue;
                    }
                    let mut e = m.clone();
                    if i > 0 {
                        e[i - 1] += 1;
                    }
                    if j > 0 {
                        e[j - 1] += 1;
                    }
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    row[index[&e]] += int(sign);
                }
                rows.push(row);
            }
        }
        // Prefer pivots on monomials with a repeated factor so the
        // square-free ones stay free whenever possible.
        let mut order: Vec<usize> = (0..monomials.len()).collect();
        order.sort_by_key(|&c| is_square_free(&monomials[c]));
        let pivot_rows = if rows.is_empty() {
            HashMap::new()
        } else {
            let rref = solve_rref(rows, &order);
            rref.pivots.into_iter().zip(rref.rows).collect()
        };
        Piece {
            index,
            monomials,
            pivot_rows,
        }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    /// Dimension of the degree-`d` piece of the quotient.
    pub fn dimension(&self, d: usize) -> usize {
        match self.pieces.get(d) {
            Some(p) => p.monomials.len() - p.pivot_rows.len(),
            None => 0,
        }
    }

    /// True when the square-free monomials of every degree form a basis.
    pub fn square_free_basis(&self) -> bool {
        self.pieces.iter().all(|p| {
            let free: Vec<usize> = (0..p.monomials.len())
                .filter(|c| !p.pivot_rows.contains_key(c))
                .collect();
            free.iter().all(|&c| is_square_free(&p.monomials[c]))
                && p.monomials
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| is_square_free(e))
                    .all(|(c, _)| !p.pivot_rows.contains_key(&c))
        })
    }

    /// Normal form of `prod lambda_i` over `indices`, written on the free
    /// monomials of its degree.
    pub fn reduce(&self, indices: &[usize]) -> Result<TautClass, RingError> {
        let mut e = vec![0; self.g];
        for &i in indices {
            if i == 0 || i > self.g {
                return Err(RingError::IndexOutOfRange {
                    index: i,
                    g: self.g,
                });
            }
            e[i - 1] += 1;
        }
        let d: usize = indices.iter().sum();
        let mut out = TautClass::zero(self.g, RingMode::Compact);
        let Some(piece) = self.pieces.get(d) else {
            return Ok(out);
        };
        let col = piece.index[&e];
        let to_mono = |e: &Exps| {
            let bits = e
                .iter()
                .enumerate()
                .fold(0u32, |b, (i, &x)| if x == 1 { b | (1 << i) } else { b });
            LambdaMonomial::from_bits(bits)
        };
        match piece.pivot_rows.get(&col) {
            None => out.add_term(to_mono(&e), &PPoly::one()),
            Some(row) => {
                for (c, v) in row.iter().enumerate() {
                    if c == col || v.is_zero() {
                        continue;
                    }
                    out.add_term(to_mono(&piece.monomials[c]), &PPoly::constant(-v));
                }
            }
        }
        Ok(out)
    }

    /// All exponent vectors of degree `d`, for exhaustive comparisons.
    pub fn monomials(&self, d: usize) -> Vec<Vec<usize>> {
        self.pieces
            .get(d)
            .map(|p| p.monomials.clone())
            .unwrap_or_default()
    }
}

/// Turns an exponent vector into a flat list of lambda indices.
pub fn exponents_to_indices(e: &[usize]) -> Vec<usize> {
    e.iter()
        .enumerate()
        .flat_map(|(i, &x)| std::iter::repeat_n(i + 1, x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tautring::reduce_monomial;

    #[test]
    fn graded_dimensions_count_subsets() {
        for g in 1..=4 {
            let ring = OracleRing::new(g).unwrap();
            assert!(ring.square_free_basis(), "g={g}");
            for d in 0..=top_degree(g) + 1 {
                let subsets = (0u32..1 << g)
                    .filter(|&b| LambdaMonomial::from_bits(b).degree() == d)
                    .count();
                assert_eq!(ring.dimension(d), subsets, "g={g} d={d}");
            }
        }
    }

    #[test]
    fn rewriting_agrees_with_linear_algebra() {
        for g in 1..=4 {
            let ring = OracleRing::new(g).unwrap();
            for d in 0..=top_degree(g) + 1 {
                for e in ring.monomials(d) {
                    let idx = exponents_to_indices(&e);
                    assert_eq!(
                        reduce_monomial(g, &idx).unwrap(),
                        ring.reduce(&idx).unwrap(),
                        "g={g} {idx:?}"
                    );
                }
            }
        }
    }
}
