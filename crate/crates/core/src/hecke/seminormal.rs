use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{HeckeElt, Perm};
use crate::combinat::{Partition, StandardTableau};
use crate::qscalar::{qint, QScalar};

pub type Matrix = Vec<Vec<QScalar>>;

/// Young's seminormal form of the irreducible `H_r`-module `V^lambda`,
/// written without square roots.
///
/// With `d = c_{i+1}(T) - c_i(T)`, `T_i v_T = q^d/[d] v_T + a v_{s_i T}`,
/// where `a = 1` when `i + 1` sits in a lower row than `i` in `T`, and
/// `a = [d+1][d-1]/[d]^2` otherwise. Only the product of the two
/// off-diagonal entries is fixed by the quadratic relation, so the diagonal
/// and all traces agree with the orthogonal form.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    lambda: Partition,
    tableaux: Vec<StandardTableau>,
    index: BTreeMap<StandardTableau, usize>,
    gens: Vec<Matrix>,
}

/// `q^d / [d]_q`.
pub fn diagonal_entry(d: i64) -> QScalar {
    &QScalar::q_pow(d) / &qint(d)
}

impl SeminormalRep {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = StandardTableau::all(lambda);
        let index: BTreeMap<_, _> = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let r = lambda.size();
        let dim = tableaux.len();
        let mut gens = Vec::with_capacity(r.saturating_sub(1));
        for i in 1..r {
            let mut m = vec![vec![QScalar::zero(); dim]; dim];
            for (col, t) in tableaux.iter().enumerate() {
                let d = t.axial_distance(i);
                m[col][col] = diagonal_entry(d);
                if let Some(s) = t.swap(i) {
                    let row = index[&s];
                    let lower = t.position(i + 1).0 > t.position(i).0;
                    m[row][col] = if lower {
                        QScalar::one()
                    } else {
                        let dd = qint(d);
                        &(&qint(d + 1) * &qint(d - 1)) / &(&dd * &dd)
                    };
                }
            }
            gens.push(m);
        }
        SeminormalRep {
            lambda: lambda.clone(),
            tableaux,
            index,
            gens,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Matrix of `T_i` (column `T` holds the image of `v_T`).
    pub fn generator(&self, i: usize) -> &Matrix {
        &self.gens[i - 1]
    }

    pub fn matrix_of_perm(&self, p: &Perm) -> Matrix {
        let mut acc = identity(self.dim());
        for i in p.reduced_word() {
            acc = mat_mul(&acc, self.generator(i));
        }
        acc
    }

    pub fn matrix_of(&self, h: &HeckeElt) -> Matrix {
        let n = self.dim();
        let mut out = vec![vec![QScalar::zero(); n]; n];
        for (p, c) in h.terms() {
            let m = self.matrix_of_perm(p);
            for (orow, mrow) in out.iter_mut().zip(&m) {
                for (o, v) in orow.iter_mut().zip(mrow) {
                    if !v.is_zero() {
                        *o += &(v * c);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self, h: &HeckeElt) -> QScalar {
        let m = self.matrix_of(h);
        (0..self.dim()).map(|i| m[i][i].clone()).sum()
    }
}

pub fn identity(n: usize) -> Matrix {
    let mut m = vec![vec![QScalar::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = QScalar::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let p = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![QScalar::zero(); p]; n];
    for i in 0..n {
        for t in 0..k {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..p {
                if !b[t][j].is_zero() {
                    out[i][j] += &(&a[i][t] * &b[t][j]);
                }
            }
        }
    }
    out
}

/// Trace of the seminormal matrix of `T_sigma` on `V^lambda`.
pub fn character(lambda: &Partition, sigma: &Perm) -> QScalar {
    let rep = SeminormalRep::new(lambda);
    let m = rep.matrix_of_perm(sigma);
    (0..rep.dim()).map(|i| m[i][i].clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q() -> QScalar {
        QScalar::q_pow(1)
    }

    fn scalar(n: usize, c: &QScalar) -> Matrix {
        let mut m = vec![vec![QScalar::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = c.clone();
        }
        m
    }

    fn sub(a: &Matrix, b: &Matrix) -> Matrix {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u - v).collect())
            .collect()
    }

    #[test]
    fn relations_hold_for_all_small_shapes() {
        for r in 2..=5 {
            for lam in Partition::all(r) {
                let rep = SeminormalRep::new(&lam);
                let n = rep.dim();
                for i in 1..r {
                    let t = rep.generator(i);
                    let a = sub(t, &scalar(n, &q()));
                    let b = sub(t, &scalar(n, &-QScalar::q_pow(-1)));
                    assert!(
                        mat_mul(&a, &b).iter().flatten().all(QScalar::is_zero),
                        "quadratic {lam} i={i}"
                    );
                    if i + 1 < r {
                        let u = rep.generator(i + 1);
                        assert_eq!(
                            mat_mul(&mat_mul(t, u), t),
                            mat_mul(&mat_mul(u, t), u),
                            "braid {lam} i={i}"
                        );
                    }
                    for j in i + 2..r {
                        let u = rep.generator(j);
                        assert_eq!(mat_mul(t, u), mat_mul(u, t), "commute {lam} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn one_dimensional_modules() {
        let row = SeminormalRep::new(&Partition::new(&[2]));
        assert_eq!(row.generator(1)[0][0], q());
        let col = SeminormalRep::new(&Partition::new(&[1, 1]));
        assert_eq!(col.generator(1)[0][0], -QScalar::q_pow(-1));
    }

    #[test]
    fn character_values() {
        let s1 = Perm::simple(1, 2);
        assert_eq!(character(&Partition::new(&[2]), &s1), q());
        assert_eq!(character(&Partition::new(&[1, 1]), &s1), -QScalar::q_pow(-1));
        let lam = Partition::new(&[2, 1]);
        assert_eq!(character(&lam, &Perm::simple(1, 3)), &q() - &QScalar::q_pow(-1));
        for r in 1..=4 {
            for lam in Partition::all(r) {
                let n = StandardTableau::all(&lam).len() as i64;
                assert_eq!(character(&lam, &Perm::identity(r)), QScalar::from_int(n));
            }
        }
    }

    #[test]
    fn characters_specialize_to_symmetric_group_at_q_one() {
        use crate::combinat::sn_character;
        use num_bigint::BigInt;
        for r in 1..=4 {
            for lam in Partition::all(r) {
                for p in Perm::all(r) {
                    let v = character(&lam, &p);
                    let (num, den) = v.eval_at(&BigInt::from(1), &BigInt::from(1)).unwrap();
                    let rho = Partition::new(&p.cycle_type());
                    assert_eq!(den, BigInt::from(1));
                    assert_eq!(num, BigInt::from(sn_character(&lam, &rho).unwrap()));
                }
            }
        }
    }
}
