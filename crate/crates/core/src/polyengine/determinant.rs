use rustc_hash::FxHashMap;

use super::symmetric::{elementary_symmetric, x_vars, y_vars};
use super::{MPoly, PolyError};
use crate::algebra::RingValue;

/// Chern classes `c_0, c_1, ..., c_N`; indices outside `0..=N` read as zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernSequence<R: RingValue> {
    values: Vec<R>,
}

impl<R: RingValue> ChernSequence<R> {
    /// A genuine total Chern class: requires `c_0 = 1`.
    pub fn new(values: Vec<R>) -> Result<Self, PolyError> {
        match values.first() {
            Some(c0) if *c0 == c0.one_like() => Ok(Self { values }),
            _ => Err(PolyError::BadChernSequence),
        }
    }

    /// Any non-empty sequence, with no constraint on the constant term.
    pub fn raw(values: Vec<R>) -> Result<Self, PolyError> {
        if values.is_empty() {
            return Err(PolyError::BadChernSequence);
        }
        Ok(Self { values })
    }

    pub fn get(&self, k: isize) -> R {
        if k < 0 {
            return self.zero();
        }
        self.values
            .get(k as usize)
            .cloned()
            .unwrap_or_else(|| self.zero())
    }

    pub fn rank(&self) -> usize {
        self.values.len() - 1
    }

    pub fn zero(&self) -> R {
        self.values[0].zero_like()
    }

    pub fn one(&self) -> R {
        self.values[0].one_like()
    }
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still free. Division-free, so it works over any ring.
pub fn determinant<R: RingValue>(m: &[Vec<R>], one: &R) -> R {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(n <= 20, "matrix too large for subset expansion");
    fn go<R: RingValue>(
        m: &[Vec<R>],
        row: usize,
        used: u32,
        one: &R,
        memo: &mut FxHashMap<u32, R>,
    ) -> R {
        if row == m.len() {
            return one.clone();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = one.zero_like();
        let mut sign_odd = false;
        for col in 0..m.len() {
            if used & (1 << col) != 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero_value() {
                let minor = go(m, row + 1, used | (1 << col), one, memo);
                let term = entry.times(&minor);
                acc = if sign_odd {
                    acc.minus(&term)
                } else {
                    acc.plus(&term)
                };
            }
            sign_odd = !sign_odd;
        }
        memo.insert(used, acc.clone());
        acc
    }
    go(m, 0, 0, one, &mut FxHashMap::default())
}

/// `det(c_{mu_i + j - i})` over the parts of `mu`.
pub fn schur_determinant<R: RingValue>(mu: &[usize], c: &ChernSequence<R>) -> R {
    let r = mu.len();
    let m: Vec<Vec<R>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| c.get(mu[i] as isize + j as isize - i as isize))
                .collect()
        })
        .collect();
    determinant(&m, &c.one())
}

/// Staircase Schur determinant of the sequence with `c_0 = c0` and
/// `c_i = sigma_i(x) + sigma_i(y)` for `i >= 1`.
pub fn double_schubert_with(g: usize, c0: i64) -> MPoly<i128> {
    let xs = x_vars(g);
    let ys = y_vars(g);
    let mut values = vec![MPoly::constant(c0 as i128)];
    for i in 1..=g {
        values.push(elementary_symmetric(i, &xs).add(&elementary_symmetric(i, &ys)));
    }
    let c = ChernSequence::raw(values).expect("non-empty");
    let staircase: Vec<usize> = (1..=g).rev().collect();
    schur_determinant(&staircase, &c)
}

/// `Delta(x, y)` with `c_i = sigma_i(x) + sigma_i(y)` for all `i`, so
/// `c_0 = 2`.
pub fn double_schubert(g: usize) -> MPoly<i128> {
    double_schubert_with(g, 2)
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian<R: RingValue>(m: &[Vec<R>]) -> Result<R, PolyError> {
    let n = m.len();
    if n == 0 {
        return Err(PolyError::EmptyPfaffian);
    }
    if n % 2 == 1 || m.iter().any(|r| r.len() != n) {
        return Err(PolyError::NotAntisymmetric);
    }
    for i in 0..n {
        if !m[i][i].is_zero_value() {
            return Err(PolyError::NotAntisymmetric);
        }
        for j in i + 1..n {
            if m[i][j] != m[j][i].negated() {
                return Err(PolyError::NotAntisymmetric);
            }
        }
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(pf_rec(m, &idx))
}

fn pf_rec<R: RingValue>(m: &[Vec<R>], idx: &[usize]) -> R {
    if idx.len() == 2 {
        return m[idx[0]][idx[1]].clone();
    }
    let first = idx[0];
    let mut acc = m[first][first].zero_like();
    for k in 1..idx.len() {
        let entry = &m[first][idx[k]];
        if entry.is_zero_value() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&j| j != idx[k]).collect();
        let term = entry.times(&pf_rec(m, &rest));
        // Position k (0-based) corresponds to column k+1 in 1-based terms.
        acc = if k % 2 == 1 {
            acc.plus(&term)
        } else {
            acc.minus(&term)
        };
    }
    acc
}

/// `Q_{ij} = a_i a_j + 2 sum_{k=1}^{j} (-1)^k a_{i+k} a_{j-k}` for `i > j`.
pub fn q_class<R: RingValue>(i: usize, j: usize, a: &ChernSequence<R>) -> Result<R, PolyError> {
    if i <= j {
        return Err(PolyError::BadQIndices { i, j });
    }
    let at = |k: usize| a.get(k as isize);
    let mut acc = at(i).times(&at(j));
    for k in 1..=j {
        let t = at(i + k).times(&at(j - k)).scaled(2);
        acc = if k % 2 == 1 {
            acc.minus(&t)
        } else {
            acc.plus(&t)
        };
    }
    Ok(acc)
}

/// `Q_beta`: Pfaffian of `(Q_{beta_i, beta_j})`, with `beta` padded by a
/// zero part when it has odd length.
pub fn q_beta<R: RingValue>(beta: &[usize], a: &ChernSequence<R>) -> Result<R, PolyError> {
    if beta.is_empty() {
        return Ok(a.one());
    }
    let mut parts = beta.to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let n = parts.len();
    let mut m = vec![vec![a.zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let q = q_class(parts[i], parts[j], a)?;
            m[j][i] = q.negated();
            m[i][j] = q;
        }
    }
    pfaffian(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyengine::Var;

    type P = MPoly<i128>;

    fn seq(n: usize) -> ChernSequence<P> {
        let mut v = vec![P::one()];
        v.extend((1..=n).map(|i| P::var(Var::L(i))));
        ChernSequence::new(v).unwrap()
    }

    fn a(i: usize) -> P {
        if i == 0 {
            P::one()
        } else {
            P::var(Var::L(i))
        }
    }

    #[test]
    fn schur_examples() {
        let c = seq(5);
        assert_eq!(schur_determinant(&[1], &c), a(1));
        assert_eq!(schur_determinant(&[2, 1], &c), a(2).mul(&a(1)).sub(&a(3)));
        assert_eq!(schur_determinant(&[1, 1], &c), a(1).mul(&a(1)).sub(&a(2)));
        assert_eq!(schur_determinant(&[4], &c), a(4));
        assert_eq!(schur_determinant(&[], &c), P::one());
    }

    #[test]
    fn double_schubert_small_genus() {
        let xy = |i| P::var(Var::X(i)).add(&P::var(Var::Y(i)));
        assert_eq!(double_schubert(1), xy(1));
        let s1 = P::var(Var::X(1))
            .add(&P::var(Var::X(2)))
            .add(&P::var(Var::Y(1)))
            .add(&P::var(Var::Y(2)));
        let s2 = P::var(Var::X(1))
            .mul(&P::var(Var::X(2)))
            .add(&P::var(Var::Y(1)).mul(&P::var(Var::Y(2))));
        assert_eq!(double_schubert(2), s2.mul(&s1));
        for g in 1..=3 {
            let d = double_schubert(g);
            assert!(d.is_homogeneous());
            assert_eq!(d.total_degree(), Some((g * (g + 1) / 2) as u32));
        }
    }

    #[test]
    fn pfaffian_examples() {
        let m = |i: usize, j: usize| P::var(Var::L(i)).mul(&P::var(Var::X(j)));
        let mut mat = vec![vec![P::zero(); 4]; 4];
        for i in 0..4 {
            for j in i + 1..4 {
                mat[i][j] = m(i + 1, j + 1);
                mat[j][i] = m(i + 1, j + 1).neg();
            }
        }
        let want = m(1, 2)
            .mul(&m(3, 4))
            .sub(&m(1, 3).mul(&m(2, 4)))
            .add(&m(1, 4).mul(&m(2, 3)));
        assert_eq!(pfaffian(&mat).unwrap(), want);
        assert_eq!(
            pfaffian(&mat[..2].iter().map(|r| r[..2].to_vec()).collect::<Vec<_>>()).unwrap(),
            m(1, 2)
        );
        assert_eq!(
            pfaffian(&vec![vec![0i128; 3]; 3]),
            Err(PolyError::NotAntisymmetric)
        );
        assert_eq!(
            pfaffian(&[vec![0i128, 1], vec![1, 0]]),
            Err(PolyError::NotAntisymmetric)
        );
    }

    #[test]
    fn q_class_examples() {
        let c = seq(6);
        assert_eq!(q_class(1, 0, &c).unwrap(), a(1));
        assert_eq!(
            q_class(2, 1, &c).unwrap(),
            a(2).mul(&a(1)).sub(&a(3).scale(&2))
        );
        assert_eq!(
            q_class(3, 2, &c).unwrap(),
            a(3).mul(&a(2))
                .sub(&a(4).mul(&a(1)).scale(&2))
                .add(&a(5).scale(&2))
        );
        assert_eq!(
            q_class(1, 1, &c),
            Err(PolyError::BadQIndices { i: 1, j: 1 })
        );
        assert_eq!(q_beta(&[1], &c).unwrap(), a(1));
        assert_eq!(q_beta(&[2, 1], &c).unwrap(), q_class(2, 1, &c).unwrap());
        assert_eq!(q_beta(&[], &c).unwrap(), P::one());
    }

    #[test]
    fn chern_sequence_requires_unit() {
        assert!(ChernSequence::new(vec![2i128, 1]).is_err());
        assert!(ChernSequence::raw(vec![2i128, 1]).is_ok());
        let c = ChernSequence::new(vec![1i128, 5]).unwrap();
        assert_eq!((c.get(-1), c.get(1), c.get(7)), (0, 5, 0));
    }
}
