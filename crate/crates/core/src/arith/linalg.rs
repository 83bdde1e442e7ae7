//! Dense Gaussian elimination over the rationals, sized for the small
//! graded pieces of the tautological ring.

use num_traits::{One, Zero};

use super::Rational;

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

/// Row-reduces `matrix`, choosing pivot columns in the order given by
/// `column_order` (every column index must appear exactly once).
pub fn solve_rref(mut matrix: Vec<Vec<Rational>>, column_order: &[usize]) -> Rref {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for &col in column_order {
        if next_row >= matrix.len() {
            break;
        }
        let Some(found) = (next_row..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(next_row, found);
        let inv = Rational::one() / &matrix[next_row][col];
        for v in matrix[next_row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = matrix[next_row].clone();
        for (r, row) in matrix.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    matrix.truncate(next_row);
    Rref {
        rows: matrix,
        pivots,
    }
}

pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let Some(width) = matrix.first().map(Vec::len) else {
        return 0;
    };
    let order: Vec<usize> = (0..width).collect();
    solve_rref(matrix.to_vec(), &order).pivots.len()
}

/// Determinant of a square matrix by Gaussian elimination over Q.
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let lead = m[col][col].clone();
        det *= &lead;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &lead;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn determinant_and_rank() {
        let m = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(determinant(&m), int(18));
        assert_eq!(rank(&m), 3);
        let singular = mat(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(&singular), int(0));
        assert_eq!(rank(&singular), 1);
    }

    #[test]
    fn rref_respects_column_preference() {
        let m = mat(&[&[1, 1]]);
        let r = solve_rref(m, &[1, 0]);
        assert_eq!(r.pivots, vec![1]);
        assert_eq!(r.rows[0], vec![int(1), int(1)]);
    }
}
