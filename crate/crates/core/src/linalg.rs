//! Dense exact linear algebra over `QScalar`.

use alloc::vec::Vec;

use crate::qscalar::QScalar;

pub type Matrix = Vec<Vec<QScalar>>;

/// Row-reduce in place; returns the pivot columns.
fn eliminate(rows: &mut Matrix) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for k in c..ncols {
                if !rows[r][k].is_zero() {
                    let t = &rows[r][k] * &f;
                    rows[i][k] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mut rows: Matrix) -> usize {
    eliminate(&mut rows).len()
}

/// Determinant by Gaussian elimination.
pub fn determinant(a: &Matrix) -> QScalar {
    let n = a.len();
    let mut m = a.clone();
    let mut det = QScalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return QScalar::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].inv().unwrap();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for k in c..n {
                if !m[c][k].is_zero() {
                    let t = &m[c][k] * &f;
                    m[i][k] -= &t;
                }
            }
        }
    }
    det
}

/// Solve `A x = b`. Returns `None` if `A` is singular.
pub fn solve(a: &Matrix, b: &[QScalar]) -> Option<Vec<QScalar>> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut aug);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(k: i64) -> QScalar {
        QScalar::q_pow(k)
    }

    #[test]
    fn two_by_two() {
        let a = vec![vec![q(1), QScalar::one()], vec![QScalar::one(), q(-1)]];
        assert!(determinant(&a).is_zero());
        assert_eq!(rank(a.clone()), 1);
        assert!(solve(&a, &[QScalar::one(), QScalar::zero()]).is_none());
        let b = vec![vec![q(1), QScalar::zero()], vec![QScalar::one(), q(2)]];
        assert_eq!(determinant(&b), q(3));
        let x = solve(&b, &[q(1), QScalar::one()]).unwrap();
        assert_eq!(x, vec![QScalar::one(), QScalar::zero()]);
    }
}
