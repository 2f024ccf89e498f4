use alloc::vec::Vec;

use super::{SuperOp, SuperSpaceCfg};
use crate::qscalar::QScalar;

/// Generators of `U_q(gl_{m|n})` acting on tensor space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UqGen {
    /// `E_k`, `1 <= k < m + n`.
    E(usize),
    /// `F_k`, `1 <= k < m + n`.
    F(usize),
    /// `q^h` with `h = sum h_i eps_i`, given by its coordinates.
    QPow(Vec<i64>),
    /// `k_i = q_i^{H_i}`.
    K(usize),
}

/// Which iterated coproduct defines the tensor-space action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Coproduct {
    /// `E -> E ⊗ 1 + k ⊗ E`, `F -> F ⊗ k^-1 + 1 ⊗ F`.
    Standard,
    /// The flipped coproduct `E -> 1 ⊗ E + E ⊗ k`, `F -> k^-1 ⊗ F + F ⊗ 1`.
    /// This is the one whose tensor action commutes with `Ř_k`.
    #[default]
    Opposite,
}

impl UqGen {
    pub fn is_odd(&self, cfg: SuperSpaceCfg) -> bool {
        match self {
            UqGen::E(k) | UqGen::F(k) => *k == cfg.m,
            _ => false,
        }
    }
}

/// `<H_i, eps_j>` with `H_i = eps_i - eps_{i+1}` (`i != m`) and
/// `H_m = eps_m + eps_{m+1}`.
fn h_pairing(cfg: SuperSpaceCfg, i: usize, j: usize) -> i64 {
    let plus = if i == cfg.m { 1 } else { -1 };
    if j == i {
        1
    } else if j == i + 1 {
        plus
    } else {
        0
    }
}

/// Exponent `e` with `k_i e_j = q^e e_j`.
fn k_exponent(cfg: SuperSpaceCfg, i: usize, j: usize) -> i64 {
    let s = if cfg.parity(i) { -1 } else { 1 };
    s * h_pairing(cfg, i, j)
}

/// `rho_r(gen)` on `(C^{m|n})^{⊗r}` via the chosen iterated coproduct and
/// the Koszul rule `(a ⊗ b)(v ⊗ w) = (-1)^{|b||v|} av ⊗ bw`.
pub fn uq_action(gen: &UqGen, cfg: SuperSpaceCfg, r: usize, coproduct: Coproduct) -> SuperOp {
    let d = cfg.dim();
    let mut op = SuperOp::zero(cfg, r);
    match gen {
        UqGen::QPow(h) => {
            assert_eq!(h.len(), d, "weight has wrong length");
            for ket in 0..cfg.basis_size(r) {
                let e: i64 = cfg.decode(ket, r).iter().map(|&i| h[i - 1]).sum();
                op.add_entry(ket, ket, &QScalar::q_pow(e));
            }
        }
        UqGen::K(i) => {
            assert!(*i >= 1 && *i < d, "generator index out of range");
            for ket in 0..cfg.basis_size(r) {
                let e: i64 = cfg.decode(ket, r).iter().map(|&j| k_exponent(cfg, *i, j)).sum();
                op.add_entry(ket, ket, &QScalar::q_pow(e));
            }
        }
        UqGen::E(i) | UqGen::F(i) => {
            let i = *i;
            assert!(i >= 1 && i < d, "generator index out of range");
            let raising = matches!(gen, UqGen::E(_));
            let (from, to) = if raising { (i + 1, i) } else { (i, i + 1) };
            let odd = gen.is_odd(cfg);
            // sign of the k-exponent carried by the spectator positions on
            // each side of the acting factor
            let (before, after) = match (coproduct, raising) {
                (Coproduct::Standard, true) => (1, 0),
                (Coproduct::Standard, false) => (0, -1),
                (Coproduct::Opposite, true) => (0, 1),
                (Coproduct::Opposite, false) => (-1, 0),
            };
            for ket in 0..cfg.basis_size(r) {
                let v = cfg.decode(ket, r);
                for a in 0..r {
                    if v[a] != from {
                        continue;
                    }
                    let mut e = 0;
                    let mut odd_before = false;
                    for (b, &j) in v.iter().enumerate() {
                        if b < a {
                            e += before * k_exponent(cfg, i, j);
                            odd_before ^= cfg.parity(j);
                        } else if b > a {
                            e += after * k_exponent(cfg, i, j);
                        }
                    }
                    let mut w = v.clone();
                    w[a] = to;
                    let mut c = QScalar::q_pow(e);
                    if odd && odd_before {
                        c = -c;
                    }
                    op.add_entry(cfg.encode(&w), ket, &c);
                }
            }
        }
    }
    op
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeElt;
    use crate::qscalar::qint;
    use crate::superlinear::{hecke_action, TensorVector};

    fn all_gens(cfg: SuperSpaceCfg) -> Vec<UqGen> {
        let d = cfg.dim();
        let mut g = Vec::new();
        for k in 1..d {
            g.push(UqGen::E(k));
            g.push(UqGen::F(k));
            g.push(UqGen::K(k));
        }
        for k in 0..d {
            let mut h = alloc::vec![0; d];
            h[k] = 1;
            g.push(UqGen::QPow(h));
        }
        g
    }

    fn commutes_with_hecke(cfg: SuperSpaceCfg, r: usize, cp: Coproduct) -> bool {
        for k in 1..r {
            let t = hecke_action(&HeckeElt::generator(k, r), cfg, r);
            for g in all_gens(cfg) {
                let u = uq_action(&g, cfg, r, cp);
                if u.compose(&t) != t.compose(&u) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn schur_weyl_commutation() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let cfg = SuperSpaceCfg::new(m, n);
            for r in 2..=3 {
                assert!(commutes_with_hecke(cfg, r, Coproduct::Opposite), "({m}|{n}) r={r}");
            }
        }
    }

    #[test]
    fn unflipped_coproduct_does_not_commute_with_rcheck() {
        // even gl_2 already shows it: the action of E_1 through E ⊗ 1 + k ⊗ E
        // fails to commute with Ř on two tensor factors
        assert!(!commutes_with_hecke(SuperSpaceCfg::new(2, 0), 2, Coproduct::Standard));
        assert!(!commutes_with_hecke(SuperSpaceCfg::new(1, 1), 2, Coproduct::Standard));
    }

    #[test]
    fn weight_generators_are_diagonal() {
        let cfg = SuperSpaceCfg::new(2, 1);
        let op = uq_action(&UqGen::QPow(alloc::vec![1, 0, 0]), cfg, 3, Coproduct::Opposite);
        let ket = cfg.encode(&[1, 3, 1]);
        assert_eq!(
            op.apply(&TensorVector::basis(ket)),
            TensorVector::basis(ket).scale(&QScalar::q_pow(2))
        );
    }

    #[test]
    fn raising_on_two_factors() {
        // under 1 ⊗ E + E ⊗ k: E_1(e_2 ⊗ e_2) = e_2 ⊗ e_1 + q^-1 e_1 ⊗ e_2
        let cfg = SuperSpaceCfg::new(2, 0);
        let e = uq_action(&UqGen::E(1), cfg, 2, Coproduct::Opposite);
        let v = e.apply(&TensorVector::basis(cfg.encode(&[2, 2])));
        let mut want = TensorVector::basis(cfg.encode(&[2, 1]));
        want.add_term(cfg.encode(&[1, 2]), &QScalar::q_pow(-1));
        assert_eq!(v, want);
    }

    fn comm(a: &SuperOp, b: &SuperOp, odd: bool) -> SuperOp {
        let ab = a.compose(b);
        let ba = b.compose(a);
        if odd {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    fn check_relations(cfg: SuperSpaceCfg, r: usize) {
        let cp = Coproduct::Opposite;
        let d = cfg.dim();
        let act = |g: UqGen| uq_action(&g, cfg, r, cp);
        let z = QScalar::laurent(-1, &[-1, 0, 1]);
        for i in 1..d {
            let ei = act(UqGen::E(i));
            let fi = act(UqGen::F(i));
            let oi = i == cfg.m;
            // q^h E_i q^-h = q^{<h, alpha_i>} E_i
            for k in 1..=d {
                let mut h = alloc::vec![0; d];
                h[k - 1] = 1;
                let mut hm = alloc::vec![0; d];
                hm[k - 1] = -1;
                let lhs = act(UqGen::QPow(h)).compose(&ei).compose(&act(UqGen::QPow(hm)));
                let pair = i64::from(k == i) - i64::from(k == i + 1);
                assert_eq!(lhs, ei.scale(&QScalar::q_pow(pair)));
            }
            for j in 1..d {
                let fj = act(UqGen::F(j));
                let oj = j == cfg.m;
                let lhs = comm(&ei, &fj, oi && oj);
                if i == j {
                    let mut h = alloc::vec![0; d];
                    h[i - 1] = 1;
                    h[i] = if oi { 1 } else { -1 };
                    let hn: Vec<i64> = h.iter().map(|x| -x).collect();
                    let rhs = act(UqGen::QPow(h)).sub(&act(UqGen::QPow(hn))).scale(&z.inv().unwrap());
                    assert_eq!(lhs, rhs, "[E{i},F{i}] r={r}");
                } else {
                    assert!(lhs.is_zero(), "[E{i},F{j}]");
                }
                let ej = act(UqGen::E(j));
                if i.abs_diff(j) >= 2 {
                    assert!(comm(&ei, &ej, oi && oj).is_zero());
                    assert!(comm(&fi, &fj, oi && oj).is_zero());
                }
                if i.abs_diff(j) == 1 && !oi {
                    let c = qint(2);
                    for (x, y) in [(&ei, &ej), (&fi, &fj)] {
                        let t = x
                            .compose(x)
                            .compose(y)
                            .sub(&x.compose(y).compose(x).scale(&c))
                            .add(&y.compose(x).compose(x));
                        assert!(t.is_zero(), "Serre {i} {j}");
                    }
                }
            }
            if oi {
                assert!(ei.compose(&ei).is_zero());
                assert!(fi.compose(&fi).is_zero());
            }
        }
        let m = cfg.m;
        if m >= 2 && m + 1 < d {
            let c = qint(2);
            for g in [UqGen::E as fn(usize) -> UqGen, UqGen::F] {
                let (a, b, c2) = (act(g(m)), act(g(m - 1)), act(g(m + 1)));
                let t = a
                    .compose(&b)
                    .compose(&a)
                    .compose(&c2)
                    .add(&a.compose(&c2).compose(&a).compose(&b))
                    .add(&b.compose(&a).compose(&c2).compose(&a))
                    .add(&c2.compose(&a).compose(&b).compose(&a))
                    .sub(&a.compose(&b).compose(&c2).compose(&a).scale(&c));
                assert!(t.is_zero(), "quartic Serre");
            }
        }
    }

    #[test]
    fn defining_relations_on_tensor_space() {
        for r in 1..=3 {
            check_relations(SuperSpaceCfg::new(1, 1), r);
            check_relations(SuperSpaceCfg::new(2, 1), r);
        }
        check_relations(SuperSpaceCfg::new(2, 2), 2);
    }

    #[test]
    fn odd_generator_squares_to_zero() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let e = uq_action(&UqGen::E(1), cfg, 3, Coproduct::Opposite);
        assert!(e.compose(&e).is_zero());
    }

    #[test]
    fn hecke_part_of_contravariance_holds() {
        use crate::hecke::Perm;
        for (m, n) in [(1, 1), (2, 1)] {
            let cfg = SuperSpaceCfg::new(m, n);
            for r in 2..=3 {
                for p in Perm::all(r) {
                    let a = hecke_action(&HeckeElt::basis(p.clone()), cfg, r);
                    let b = hecke_action(&HeckeElt::basis(p.inverse()), cfg, r);
                    assert_eq!(a.transpose(), b);
                }
            }
        }
    }

    #[test]
    fn raising_lowering_contravariance_fails() {
        // <E u, v> = <u, F v> breaks on (C^{1|1})^{⊗2}:
        // <E e2e2, e1e2> = q while <e2e2, F e1e2> = 1
        let cfg = SuperSpaceCfg::new(1, 1);
        let e = uq_action(&UqGen::E(1), cfg, 2, Coproduct::Opposite);
        let f = uq_action(&UqGen::F(1), cfg, 2, Coproduct::Opposite);
        let (u, v) = (cfg.encode(&[2, 2]), cfg.encode(&[1, 2]));
        assert_eq!(e.get(v, u), QScalar::q_pow(1));
        assert_eq!(f.get(u, v), QScalar::one());
        assert_ne!(e.transpose(), f);
    }
}
