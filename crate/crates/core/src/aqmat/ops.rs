use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{AqAlgebra, NCPoly};
use crate::superlinear::{build_r_matrices, SuperOp, SuperSpaceCfg};

/// Sign convention for the bra-ket table of `X_1 ... X_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CoactionSign {
    /// `(-1)^{sum_{a<b} j_b (i_a + j_a)}`. With the defining relations and
    /// `Ř` as given, this is the sign for which `Ř X_1 X_2 = X_1 X_2 Ř`.
    #[default]
    RttCompatible,
    /// `(-1)^{sum_{a<b} i_b (i_a + j_a)}`, the comodule formula as displayed.
    /// Kept for comparison; it breaks the RTT identity once odd indices occur.
    Displayed,
}

fn coaction_sign(cfg: SuperSpaceCfg, bra: &[usize], ket: &[usize], conv: CoactionSign) -> bool {
    let mut s = false;
    let mut acc = false;
    for (&i, &j) in bra.iter().zip(ket) {
        let lead = match conv {
            CoactionSign::RttCompatible => cfg.parity(j),
            CoactionSign::Displayed => cfg.parity(i),
        };
        if lead && acc {
            s = !s;
        }
        acc ^= cfg.parity(i) ^ cfg.parity(j);
    }
    s
}

/// Entry `<I| X_1 ... X_r |J>` of the coaction operator.
pub fn x_entry(alg: &AqAlgebra, bra: &[usize], ket: &[usize]) -> NCPoly {
    x_entry_with(alg, bra, ket, CoactionSign::default())
}

pub fn x_entry_with(alg: &AqAlgebra, bra: &[usize], ket: &[usize], conv: CoactionSign) -> NCPoly {
    let cfg = alg.cfg();
    let pairs: Vec<(usize, usize)> = bra.iter().copied().zip(ket.iter().copied()).collect();
    let p = alg.monomial(&pairs);
    if coaction_sign(cfg, bra, ket, conv) {
        p.neg()
    } else {
        p
    }
}

/// An operator on `(C^{m|n})^{⊗r}` with entries in `A_q(Mat_{m|n})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AqOp {
    cfg: SuperSpaceCfg,
    r: usize,
    entries: BTreeMap<(u32, u32), NCPoly>,
}

/// `X_1 ... X_r` as a full table.
pub fn x_operator(alg: &AqAlgebra, r: usize) -> AqOp {
    x_operator_with(alg, r, CoactionSign::default())
}

pub fn x_operator_with(alg: &AqAlgebra, r: usize, conv: CoactionSign) -> AqOp {
    let cfg = alg.cfg();
    let mut op = AqOp::zero(cfg, r);
    for b in 0..cfg.basis_size(r) {
        let bra = cfg.decode(b, r);
        for k in 0..cfg.basis_size(r) {
            let ket = cfg.decode(k, r);
            op.insert(b, k, x_entry_with(alg, &bra, &ket, conv));
        }
    }
    op
}

impl AqOp {
    pub fn zero(cfg: SuperSpaceCfg, r: usize) -> Self {
        AqOp {
            cfg,
            r,
            entries: BTreeMap::new(),
        }
    }

    pub fn cfg(&self) -> SuperSpaceCfg {
        self.cfg
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    fn insert(&mut self, bra: u32, ket: u32, p: NCPoly) {
        if p.is_zero() {
            self.entries.remove(&(bra, ket));
        } else {
            self.entries.insert((bra, ket), p);
        }
    }

    fn accumulate(&mut self, bra: u32, ket: u32, p: &NCPoly) {
        let cur = self.get(bra, ket);
        self.insert(bra, ket, cur.add(p));
    }

    pub fn get(&self, bra: u32, ket: u32) -> NCPoly {
        self.entries
            .get(&(bra, ket))
            .cloned()
            .unwrap_or_else(|| NCPoly::zero(self.cfg))
    }

    pub fn entry(&self, bra: &[usize], ket: &[usize]) -> NCPoly {
        self.get(self.cfg.encode(bra), self.cfg.encode(ket))
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &NCPoly)> + '_ {
        self.entries.iter().map(|(&(b, k), p)| (b, k, p))
    }

    /// `s ∘ self`.
    pub fn compose_left(&self, s: &SuperOp) -> AqOp {
        assert_eq!(s.degree(), self.r, "degree mismatch");
        let mut out = AqOp::zero(self.cfg, self.r);
        for (&(k, j), p) in &self.entries {
            for (i, c) in s.column(k).coeffs() {
                out.accumulate(*i, j, &p.scale(c));
            }
        }
        out
    }

    /// `self ∘ s`.
    pub fn compose_right(&self, s: &SuperOp) -> AqOp {
        assert_eq!(s.degree(), self.r, "degree mismatch");
        let mut by_ket: BTreeMap<u32, Vec<(u32, &NCPoly)>> = BTreeMap::new();
        for (&(i, k), p) in &self.entries {
            by_ket.entry(k).or_default().push((i, p));
        }
        let mut out = AqOp::zero(self.cfg, self.r);
        for (k, j, c) in s.entries() {
            if let Some(col) = by_ket.get(&k) {
                for (i, p) in col {
                    out.accumulate(*i, j, &p.scale(c));
                }
            }
        }
        out
    }

    /// `sum_I (-1)^{I-bar} <I|A|I>`.
    pub fn supertrace(&self) -> NCPoly {
        let mut s = NCPoly::zero(self.cfg);
        for (&(b, k), p) in &self.entries {
            if b != k {
                continue;
            }
            if self.cfg.index_parity(&self.cfg.decode(b, self.r)) {
                s = s.sub(p);
            } else {
                s = s.add(p);
            }
        }
        s
    }
}

/// A square matrix over `A_q(Mat_{m|n})`, indexed 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AqMatrix {
    cfg: SuperSpaceCfg,
    rows: Vec<Vec<NCPoly>>,
}

impl AqMatrix {
    pub fn from_fn(cfg: SuperSpaceCfg, mut f: impl FnMut(usize, usize) -> NCPoly) -> Self {
        let d = cfg.dim();
        AqMatrix {
            cfg,
            rows: (1..=d).map(|i| (1..=d).map(|j| f(i, j)).collect()).collect(),
        }
    }

    /// The generator matrix `X = (x_ij)`.
    pub fn x(cfg: SuperSpaceCfg) -> Self {
        AqMatrix::from_fn(cfg, |i, j| NCPoly::gen(i, j, cfg))
    }

    pub fn identity(cfg: SuperSpaceCfg) -> Self {
        AqMatrix::from_fn(cfg, |i, j| if i == j { NCPoly::one(cfg) } else { NCPoly::zero(cfg) })
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.rows[i - 1][j - 1]
    }

    /// `sum_i (-1)^{i-bar} a_ii`.
    pub fn supertrace(&self) -> NCPoly {
        let mut s = NCPoly::zero(self.cfg);
        for i in 1..=self.cfg.dim() {
            if self.cfg.parity(i) {
                s = s.sub(self.get(i, i));
            } else {
                s = s.add(self.get(i, i));
            }
        }
        s
    }
}

/// `Y * Z = str_1 P^q Y_1 Z_2` with `Y = sum y_ij (x) e_ij`. Reading `P^q` through its
/// matrix coefficients `c` of `e_{i1 j1} (x) e_{i2 j2}`, the entry `(i2, d)` collects
/// `(-1)^{i1 + (j1+i1)(j2+d) + (i2+j2)(j1+i1)} c y_{j1 i1} z_{j2 d}`.
/// For `X * X` this is `sum_i q^{sgn(i-j)} (-1)^{(i+j)(i+d)} x_ji x_id`.
pub fn star_product(alg: &AqAlgebra, y: &AqMatrix, z: &AqMatrix) -> AqMatrix {
    let cfg = alg.cfg();
    let pq = build_r_matrices(cfg).pq;
    let p = |k: usize| cfg.parity(k);
    let mut terms = Vec::new();
    for (b, k, _) in pq.entries() {
        let bra = cfg.decode(b, 2);
        let ket = cfg.decode(k, 2);
        let c = pq.coefficient(&bra, &ket);
        if !c.is_zero() {
            terms.push((bra[0], bra[1], ket[0], ket[1], c));
        }
    }
    AqMatrix::from_fn(cfg, |row, d| {
        let mut acc = NCPoly::zero(cfg);
        for (i1, i2, j1, j2, c) in &terms {
            let (i1, i2, j1, j2) = (*i1, *i2, *j1, *j2);
            if i2 != row {
                continue;
            }
            let a = p(j1) ^ p(i1);
            let neg = p(i1) ^ (a & (p(j2) ^ p(d))) ^ (a & (p(i2) ^ p(j2)));
            let term = alg.mul(y.get(j1, i1), z.get(j2, d));
            let c = if neg { -c.clone() } else { c.clone() };
            acc = acc.add(&term.scale(&c));
        }
        acc
    })
}

/// `X^{[k]}` with `X^{[0]} = 1` and `X^{[k]} = X^{[k-1]} * X`.
pub fn x_power(alg: &AqAlgebra, k: u32) -> AqMatrix {
    let cfg = alg.cfg();
    let x = AqMatrix::x(cfg);
    let mut acc = AqMatrix::identity(cfg);
    for _ in 0..k {
        acc = star_product(alg, &acc, &x);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::HeckeElt;
    use crate::qscalar::QScalar;
    use crate::superlinear::{hecke_action, weight_projector};

    #[test]
    fn sign_examples() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let alg = AqAlgebra::new(cfg);
        let x = x_operator(&alg, 1);
        assert_eq!(x.entry(&[1], &[2]), alg.gen(1, 2));
        let x2 = x_operator(&alg, 2);
        assert_eq!(x2.entry(&[2, 2], &[2, 2]), alg.monomial(&[(2, 2), (2, 2)]));
        assert_eq!(x2.entry(&[1, 2], &[2, 1]), alg.monomial(&[(1, 2), (2, 1)]));
        assert_eq!(x2.entry(&[2, 1], &[1, 2]), alg.monomial(&[(2, 1), (1, 2)]).neg());
        let shown = x_operator_with(&alg, 2, CoactionSign::Displayed);
        assert_eq!(shown.entry(&[1, 2], &[2, 1]), alg.monomial(&[(1, 2), (2, 1)]).neg());
        // both conventions agree on the diagonal
        for k in 0..cfg.basis_size(2) {
            assert_eq!(shown.get(k, k), x2.get(k, k));
        }
    }

    #[test]
    fn displayed_coaction_sign_breaks_rtt() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let alg = AqAlgebra::new(cfg);
        let x = x_operator_with(&alg, 2, CoactionSign::Displayed);
        let rc = build_r_matrices(cfg).rcheck;
        let (l, r) = (x.compose_left(&rc), x.compose_right(&rc));
        let (i, j) = (cfg.encode(&[1, 2]), cfg.encode(&[2, 1]));
        // x22 x11 on one side, x11 x22 - (q - q^-1) x12 x21 on the other
        assert_eq!(l.get(i, j), alg.monomial(&[(2, 2), (1, 1)]));
        assert_ne!(l.get(i, j), r.get(i, j));
    }

    #[test]
    fn rtt_relation() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let alg = AqAlgebra::new(cfg);
            let x = x_operator(&alg, 2);
            let rc = build_r_matrices(cfg).rcheck;
            assert_eq!(x.compose_left(&rc), x.compose_right(&rc), "({m}|{n})");
        }
    }

    #[test]
    fn hecke_images_commute_with_x() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let alg = AqAlgebra::new(cfg);
        let x = x_operator(&alg, 3);
        for k in 1..3 {
            let t = hecke_action(&HeckeElt::generator(k, 3), cfg, 3);
            assert_eq!(x.compose_left(&t), x.compose_right(&t));
        }
    }

    #[test]
    fn composition_basics() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let alg = AqAlgebra::new(cfg);
        let x = x_operator(&alg, 2);
        assert_eq!(x.compose_left(&SuperOp::identity(cfg, 2)), x);
        let p = weight_projector(&[2, 0], cfg, 2).unwrap();
        let y = x.compose_left(&p);
        let keep = cfg.encode(&[1, 1]);
        assert!(y.entries().all(|(b, _, _)| b == keep));
        assert_eq!(y.entries().count(), 4 - 1); // x12 x12 = 0 kills one entry
    }

    #[test]
    fn coaction_sign_is_additive() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let alg = AqAlgebra::new(cfg);
        let x1 = x_operator(&alg, 1);
        let x3 = x_operator(&alg, 3);
        for b in 0..cfg.basis_size(3) {
            for k in 0..cfg.basis_size(3) {
                let (bra, ket) = (cfg.decode(b, 3), cfg.decode(k, 3));
                let mut acc = NCPoly::one(cfg);
                let mut odd = false;
                let mut sgn = false;
                for a in 0..3 {
                    if cfg.parity(ket[a]) && odd {
                        sgn = !sgn;
                    }
                    odd ^= cfg.parity(bra[a]) ^ cfg.parity(ket[a]);
                    acc = alg.mul(&acc, &x1.entry(&[bra[a]], &[ket[a]]));
                }
                let want = if sgn { acc.neg() } else { acc };
                assert_eq!(x3.get(b, k), want);
            }
        }
    }

    #[test]
    fn star_product_is_weighted_matrix_product() {
        // (X*X)_jd = sum_i q^{sgn(i-j)} (-1)^{(i+j)(i+d)} x_ji x_id
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let alg = AqAlgebra::new(cfg);
            let x = AqMatrix::x(cfg);
            let s = star_product(&alg, &x, &x);
            let d = cfg.dim();
            let p = |k: usize| cfg.parity(k);
            for j in 1..=d {
                for e in 1..=d {
                    let mut want = NCPoly::zero(cfg);
                    for i in 1..=d {
                        let mut c = QScalar::q_pow((i as i64 - j as i64).signum());
                        if (p(i) ^ p(j)) & (p(i) ^ p(e)) {
                            c = -c;
                        }
                        want = want.add(&alg.monomial(&[(j, i), (i, e)]).scale(&c));
                    }
                    assert_eq!(s.get(j, e), &want);
                }
            }
            assert_eq!(x_power(&alg, 1), x);
            assert_eq!(x_power(&alg, 0), AqMatrix::identity(cfg));
        }
        let cfg = SuperSpaceCfg::new(1, 1);
        let g1 = x_power(&AqAlgebra::new(cfg), 1).supertrace();
        assert_eq!(g1, NCPoly::gen(1, 1, cfg).sub(&NCPoly::gen(2, 2, cfg)));
    }
}
