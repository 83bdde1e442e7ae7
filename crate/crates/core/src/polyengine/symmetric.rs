use std::collections::BTreeMap;

use super::{MPoly, Monomial, PolyError, Var};
use crate::algebra::Coeff;

/// `sigma_i` of the given variables.
pub fn elementary_symmetric<C: Coeff>(i: usize, vars: &[Var]) -> MPoly<C> {
    fn go<C: Coeff>(i: usize, vars: &[Var], acc: Monomial, out: &mut MPoly<C>) {
        if i == 0 {
            out.add_term(acc, &C::one());
            return;
        }
        for k in 0..vars.len() {
            if vars.len() - k < i {
                break;
            }
            go(i - 1, &vars[k + 1..], acc.mul(&Monomial::var(vars[k])), out);
        }
    }
    let mut out = MPoly::zero();
    if i <= vars.len() {
        go(i, vars, Monomial::ONE, &mut out);
    }
    out
}

pub fn x_vars(g: usize) -> Vec<Var> {
    (1..=g).map(Var::X).collect()
}

pub fn y_vars(g: usize) -> Vec<Var> {
    (1..=g).map(Var::Y).collect()
}

pub fn l_vars(g: usize) -> Vec<Var> {
    (1..=g).map(Var::L).collect()
}

/// Writes a polynomial symmetric in `l_1..l_n` (and free of `x`, `y`) as a
/// polynomial in `e_1..e_n`. Keys are exponent vectors `[k_1, ..., k_n]` of
/// `e_1^{k_1} ... e_n^{k_n}`.
pub fn to_elementary<C: Coeff>(f: &MPoly<C>, n: usize) -> Result<BTreeMap<Vec<u32>, C>, PolyError> {
    let vars = l_vars(n);
    let e: Vec<MPoly<C>> = (1..=n).map(|i| elementary_symmetric(i, &vars)).collect();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    // Peel off the lexicographically largest monomial each round.
    while let Some((lead, c)) = rest
        .terms()
        .max_by(|a, b| lex_l(a.0, b.0, n))
        .map(|(m, c)| (*m, c.clone()))
    {
        let a: Vec<u32> = (1..=n).map(|i| lead.exponent(Var::L(i))).collect();
        if lead.degree() != a.iter().sum::<u32>() || a.windows(2).any(|w| w[0] < w[1]) {
            return Err(PolyError::NotSymmetric);
        }
        let ks: Vec<u32> = (0..n)
            .map(|i| a[i] - a.get(i + 1).copied().unwrap_or(0))
            .collect();
        let mut prod = MPoly::constant(c.clone());
        for (i, &k) in ks.iter().enumerate() {
            if k > 0 {
                prod = prod.mul(&e[i].pow(k));
            }
        }
        rest = rest.sub(&prod);
        out.insert(ks, c);
    }
    Ok(out)
}

fn lex_l(a: &Monomial, b: &Monomial, n: usize) -> std::cmp::Ordering {
    (1..=n)
        .map(|i| a.exponent(Var::L(i)).cmp(&b.exponent(Var::L(i))))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
        .then_with(|| a.grlex_cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = MPoly<i128>;

    #[test]
    fn small_elementary_polynomials() {
        let xs = x_vars(3);
        assert_eq!(elementary_symmetric::<i128>(0, &xs[..2]), P::one());
        assert_eq!(
            elementary_symmetric::<i128>(1, &xs[..2]),
            P::var(Var::X(1)).add(&P::var(Var::X(2)))
        );
        assert_eq!(
            elementary_symmetric::<i128>(2, &xs).to_string(),
            "x1*x2 + x1*x3 + x2*x3"
        );
        assert!(elementary_symmetric::<i128>(4, &xs).is_zero());
    }

    #[test]
    fn power_sums_in_elementary_terms() {
        let ls = l_vars(3);
        let p2 = (1..=3).fold(P::zero(), |acc, i| acc.add(&P::var(Var::L(i)).pow(2)));
        // p_2 = e_1^2 - 2 e_2
        let got = to_elementary(&p2, 3).unwrap();
        let want: BTreeMap<Vec<u32>, i128> = [(vec![2, 0, 0], 1), (vec![0, 1, 0], -2)]
            .into_iter()
            .collect();
        assert_eq!(got, want);
        assert!(to_elementary(&P::var(ls[0]), 3).is_err());
    }
}
