use alloc::vec;
use alloc::vec::Vec;

use super::{SuperOp, SuperSpaceCfg};
use crate::hecke::q_minus_qinv;
use crate::qscalar::QScalar;

/// A tensor product of matrix units, `None` standing for the identity.
pub type ElementaryTerm = (Vec<Option<(usize, usize)>>, QScalar);

/// Build `sum c * (A_1 ⊗ ... ⊗ A_r)` with each `A_a` a matrix unit `e_ij`
/// (or the identity), using `(A ⊗ B)(v ⊗ w) = (-1)^{|B||v|} Av ⊗ Bw`.
pub fn elementary_op(cfg: SuperSpaceCfg, r: usize, terms: &[ElementaryTerm]) -> SuperOp {
    let mut op = SuperOp::zero(cfg, r);
    for ket in 0..cfg.basis_size(r) {
        let v = cfg.decode(ket, r);
        'term: for (factors, c) in terms {
            debug_assert_eq!(factors.len(), r);
            let mut out = v.clone();
            let mut sign = false;
            let mut seen_odd = false;
            for (a, f) in factors.iter().enumerate() {
                if let Some((i, j)) = *f {
                    if v[a] != j {
                        continue 'term;
                    }
                    out[a] = i;
                    if cfg.parity(i) != cfg.parity(j) && seen_odd {
                        sign = !sign;
                    }
                }
                if cfg.parity(v[a]) {
                    seen_odd = !seen_odd;
                }
            }
            let val = if sign { -c } else { c.clone() };
            op.add_entry(cfg.encode(&out), ket, &val);
        }
    }
    op
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RKind {
    R,
    RPlus,
    RMinus,
    P,
    RCheck,
    PQ,
}

fn q_i(cfg: SuperSpaceCfg, i: usize) -> QScalar {
    QScalar::q_pow(if cfg.parity(i) { -1 } else { 1 })
}

fn sgn(cfg: SuperSpaceCfg, i: usize) -> QScalar {
    QScalar::from_int(cfg.sign(i))
}

/// Two-site terms `(e_x ⊗ e_y, coefficient)` of the displayed formulas.
pub(crate) fn two_site_terms(cfg: SuperSpaceCfg, kind: RKind) -> Vec<((usize, usize), (usize, usize), QScalar)> {
    let d = cfg.dim();
    let z = q_minus_qinv();
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            let sj = sgn(cfg, j);
            match kind {
                RKind::R | RKind::RPlus | RKind::RMinus => {
                    if i == j {
                        let qi = q_i(cfg, i);
                        let c = if kind == RKind::RMinus { qi.inv().unwrap() } else { qi };
                        out.push(((i, i), (i, i), c));
                        continue;
                    }
                    out.push(((i, i), (j, j), QScalar::one()));
                    let active = match kind {
                        RKind::RPlus => i > j,
                        _ => i < j,
                    };
                    if active {
                        let c = &z * &sj;
                        let c = if kind == RKind::RMinus { -c } else { c };
                        out.push(((i, j), (j, i), c));
                    }
                }
                RKind::P => out.push(((i, j), (j, i), sj)),
                RKind::RCheck => {
                    if i == j {
                        out.push(((i, i), (i, i), &sgn(cfg, i) * &q_i(cfg, i)));
                    } else {
                        out.push(((i, j), (j, i), sj));
                        if i > j {
                            out.push(((i, i), (j, j), z.clone()));
                        }
                    }
                }
                RKind::PQ => {
                    let e = (i as i64 - j as i64).signum();
                    out.push(((i, j), (j, i), &QScalar::q_pow(e) * &sj));
                }
            }
        }
    }
    out
}

/// The operator of `kind` acting on tensor positions `a` and `b` (1-based,
/// `a != b`) of `(C^{m|n})^{⊗r}`; the first tensorand of the formula goes to `a`.
pub(crate) fn embedded(cfg: SuperSpaceCfg, kind: RKind, a: usize, b: usize, r: usize) -> SuperOp {
    let terms: Vec<ElementaryTerm> = two_site_terms(cfg, kind)
        .into_iter()
        .map(|(x, y, c)| {
            let mut f = vec![None; r];
            f[a - 1] = Some(x);
            f[b - 1] = Some(y);
            (f, c)
        })
        .collect();
    elementary_op(cfg, r, &terms)
}

/// `R_{ab}` on `(C^{m|n})^{⊗r}`.
pub fn r_matrix_at(cfg: SuperSpaceCfg, a: usize, b: usize, r: usize) -> SuperOp {
    embedded(cfg, RKind::R, a, b, r)
}

/// `Ř_k = P_{k,k+1} R_{k,k+1}` on `(C^{m|n})^{⊗r}`.
pub fn rcheck_at(cfg: SuperSpaceCfg, k: usize, r: usize) -> SuperOp {
    embedded(cfg, RKind::RCheck, k, k + 1, r)
}

#[derive(Clone, Debug)]
pub struct RMatrices {
    pub r: SuperOp,
    pub r_plus: SuperOp,
    pub r_minus: SuperOp,
    pub p: SuperOp,
    pub rcheck: SuperOp,
    pub pq: SuperOp,
}

pub fn build_r_matrices(cfg: SuperSpaceCfg) -> RMatrices {
    let two = |k| embedded(cfg, k, 1, 2, 2);
    RMatrices {
        r: two(RKind::R),
        r_plus: two(RKind::RPlus),
        r_minus: two(RKind::RMinus),
        p: two(RKind::P),
        rcheck: two(RKind::RCheck),
        pq: two(RKind::PQ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinear::TensorVector;

    const CONFIGS: [(usize, usize); 5] = [(1, 1), (2, 1), (1, 2), (2, 2), (2, 0)];

    #[test]
    fn derived_matrices_agree_with_definitions() {
        for (m, n) in CONFIGS {
            let cfg = SuperSpaceCfg::new(m, n);
            let rm = build_r_matrices(cfg);
            let id = SuperOp::identity(cfg, 2);
            assert_eq!(rm.p.compose(&rm.p), id, "P^2 = 1 ({m}|{n})");
            assert_eq!(rm.p.compose(&rm.r), rm.rcheck, "Ř = PR ({m}|{n})");
            assert_eq!(rm.p.compose(&rm.r).compose(&rm.p), rm.r_plus, "R+ = PRP ({m}|{n})");
            assert_eq!(rm.r.compose(&rm.r_minus), id, "R R- = 1 ({m}|{n})");
            assert_eq!(rm.r_minus.compose(&rm.r), id);
        }
    }

    #[test]
    fn yang_baxter() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let r12 = r_matrix_at(cfg, 1, 2, 3);
            let r13 = r_matrix_at(cfg, 1, 3, 3);
            let r23 = r_matrix_at(cfg, 2, 3, 3);
            assert_eq!(
                r12.compose(&r13).compose(&r23),
                r23.compose(&r13).compose(&r12),
                "({m}|{n})"
            );
        }
    }

    #[test]
    fn hecke_quotient_relations() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let a = rcheck_at(cfg, 1, 3);
            let b = rcheck_at(cfg, 2, 3);
            assert_eq!(a.compose(&b).compose(&a), b.compose(&a).compose(&b));
            let id = SuperOp::identity(cfg, 3);
            let x = a.sub(&id.scale(&QScalar::q_pow(1)));
            let y = a.add(&id.scale(&QScalar::q_pow(-1)));
            assert!(x.compose(&y).is_zero());
        }
    }

    #[test]
    fn rcheck_examples() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let rc = build_r_matrices(cfg).rcheck;
        let v = rc.apply(&TensorVector::basis(cfg.encode(&[1, 2])));
        assert_eq!(v, TensorVector::basis(cfg.encode(&[2, 1])));
        let v = rc.apply(&TensorVector::basis(cfg.encode(&[2, 2])));
        assert_eq!(v, TensorVector::basis(cfg.encode(&[2, 2])).scale(&-QScalar::q_pow(-1)));
        // the super permutation picks up a sign on two odd vectors
        let p = build_r_matrices(SuperSpaceCfg::new(1, 2)).p;
        let cfg = SuperSpaceCfg::new(1, 2);
        let v = p.apply(&TensorVector::basis(cfg.encode(&[2, 3])));
        assert_eq!(
            v,
            TensorVector::basis(cfg.encode(&[3, 2])).scale(&QScalar::from_int(-1))
        );
    }

    #[test]
    fn partial_supertrace_of_pq() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let pq = build_r_matrices(cfg).pq;
        // only the i = j terms survive, each contributing e_ii
        assert_eq!(pq.partial_supertrace(&[1]), SuperOp::identity(cfg, 1));
        assert_eq!(pq.partial_supertrace(&[2]), SuperOp::identity(cfg, 1));
    }
}
