//! The super vector space `C^{m|n}`, its tensor powers, R-matrices, the
//! Hecke and `U_q(gl_{m|n})` actions, supertraces and weight projectors.
//!
//! Operators are stored as bra-ket tables `<I|A|J>` keyed by encoded
//! multi-indices; column `J` holds the image of `|J>`.

mod hecke_action;
mod rmatrix;
mod uq;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

pub use hecke_action::{hecke_action, hecke_apply, rcheck_apply, HeckeActionCache};
pub use rmatrix::{build_r_matrices, elementary_op, r_matrix_at, rcheck_at, ElementaryTerm, RMatrices};
pub use uq::{uq_action, Coproduct, UqGen};

use crate::combinat::multiplicities;
use crate::qscalar::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperSpaceCfg {
    pub m: usize,
    pub n: usize,
}

impl SuperSpaceCfg {
    pub fn new(m: usize, n: usize) -> Self {
        assert!(m + n >= 1, "m + n must be positive");
        SuperSpaceCfg { m, n }
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Parity of the 1-based basis index `i`.
    pub fn parity(&self, i: usize) -> bool {
        i > self.m
    }

    /// `(-1)^{i-bar}` as an integer.
    pub fn sign(&self, i: usize) -> i64 {
        if self.parity(i) {
            -1
        } else {
            1
        }
    }

    /// `I-bar = sum of parities`.
    pub fn index_parity(&self, idx: &[usize]) -> bool {
        idx.iter().filter(|&&i| self.parity(i)).count() % 2 == 1
    }

    /// Encode a multi-index (1-based entries, first position most
    /// significant) as a base-`m+n` integer.
    pub fn encode(&self, idx: &[usize]) -> u32 {
        let d = self.dim() as u32;
        idx.iter().fold(0, |acc, &i| acc * d + (i as u32 - 1))
    }

    pub fn decode(&self, mut code: u32, r: usize) -> Vec<usize> {
        let d = self.dim() as u32;
        let mut out = alloc::vec![0; r];
        for slot in out.iter_mut().rev() {
            *slot = (code % d) as usize + 1;
            code /= d;
        }
        out
    }

    pub fn basis_size(&self, r: usize) -> u32 {
        (self.dim() as u32).pow(r as u32)
    }

    /// `gamma(I, J) = sum_a i_a(j_a + 1) + sum_{a<b} j_b(i_a + j_a)` mod 2,
    /// the sign relating bra-ket values to matrix coefficients.
    pub fn gamma(&self, i: &[usize], j: &[usize]) -> bool {
        let p = |k: usize| usize::from(self.parity(k));
        let mut s = 0;
        for a in 0..i.len() {
            s += p(i[a]) * (p(j[a]) + 1);
            for b in a + 1..i.len() {
                s += p(j[b]) * (p(i[a]) + p(j[a]));
            }
        }
        s % 2 == 1
    }

    /// `I-bar_sigma = sum_{k<t, sigma(k) > sigma(t)} i_k i_t` mod 2.
    pub fn inversion_parity(&self, idx: &[usize], sigma: &crate::hecke::Perm) -> bool {
        let mut s = 0;
        for k in 1..=idx.len() {
            for t in k + 1..=idx.len() {
                if sigma.apply(k) > sigma.apply(t) && self.parity(idx[k - 1]) && self.parity(idx[t - 1]) {
                    s += 1;
                }
            }
        }
        s % 2 == 1
    }
}

/// A vector in `(C^{m|n})^{⊗r}`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorVector {
    pub(crate) coeffs: BTreeMap<u32, QScalar>,
}

impl TensorVector {
    pub fn zero() -> Self {
        TensorVector::default()
    }

    pub fn basis(code: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(code, QScalar::one());
        TensorVector { coeffs }
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, QScalar> {
        &self.coeffs
    }

    pub fn get(&self, code: u32) -> QScalar {
        self.coeffs.get(&code).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, code: u32, c: &QScalar) {
        add_into(&mut self.coeffs, code, c);
    }

    pub fn add(&self, other: &TensorVector) -> TensorVector {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> TensorVector {
        if c.is_zero() {
            return TensorVector::zero();
        }
        TensorVector {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// The symmetric bilinear form `<e_I, e_J> = delta_{IJ}`.
    pub fn dot(&self, other: &TensorVector) -> QScalar {
        let mut s = QScalar::zero();
        for (k, v) in &self.coeffs {
            if let Some(w) = other.coeffs.get(k) {
                s += &(v * w);
            }
        }
        s
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.coeffs.iter().map(|(k, v)| (k, alloc::format!("{v}"))))
            .finish()
    }
}

pub(crate) fn add_into(map: &mut BTreeMap<u32, QScalar>, key: u32, c: &QScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get() + c;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

/// Operator on `(C^{m|n})^{⊗r}` as a sparse bra-ket table.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperOp {
    cfg: SuperSpaceCfg,
    r: usize,
    /// ket -> (bra -> value)
    cols: BTreeMap<u32, BTreeMap<u32, QScalar>>,
}

impl SuperOp {
    pub fn zero(cfg: SuperSpaceCfg, r: usize) -> Self {
        SuperOp {
            cfg,
            r,
            cols: BTreeMap::new(),
        }
    }

    pub fn identity(cfg: SuperSpaceCfg, r: usize) -> Self {
        let mut op = SuperOp::zero(cfg, r);
        for k in 0..cfg.basis_size(r) {
            op.add_entry(k, k, &QScalar::one());
        }
        op
    }

    pub fn cfg(&self) -> SuperSpaceCfg {
        self.cfg
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn add_entry(&mut self, bra: u32, ket: u32, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let col = self.cols.entry(ket).or_default();
        add_into(col, bra, c);
        if col.is_empty() {
            self.cols.remove(&ket);
        }
    }

    /// `<I|A|J>` for encoded indices.
    pub fn get(&self, bra: u32, ket: u32) -> QScalar {
        self.cols
            .get(&ket)
            .and_then(|c| c.get(&bra))
            .cloned()
            .unwrap_or_default()
    }

    /// `<I|A|J>` for explicit multi-indices.
    pub fn entry(&self, bra: &[usize], ket: &[usize]) -> QScalar {
        self.get(self.cfg.encode(bra), self.cfg.encode(ket))
    }

    /// Matrix coefficient `A^I_J = (-1)^{gamma(I,J)} <I|A|J>`.
    pub fn coefficient(&self, bra: &[usize], ket: &[usize]) -> QScalar {
        let v = self.entry(bra, ket);
        if self.cfg.gamma(bra, ket) {
            -v
        } else {
            v
        }
    }

    /// Iterate `(bra, ket, value)` in ket-major order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &QScalar)> + '_ {
        self.cols
            .iter()
            .flat_map(|(k, col)| col.iter().map(move |(b, v)| (*b, *k, v)))
    }

    pub fn column(&self, ket: u32) -> TensorVector {
        TensorVector {
            coeffs: self.cols.get(&ket).cloned().unwrap_or_default(),
        }
    }

    pub fn set_column(&mut self, ket: u32, v: TensorVector) {
        if v.is_zero() {
            self.cols.remove(&ket);
        } else {
            self.cols.insert(ket, v.coeffs);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn apply(&self, v: &TensorVector) -> TensorVector {
        let mut out = TensorVector::zero();
        for (k, c) in &v.coeffs {
            if let Some(col) = self.cols.get(k) {
                for (b, a) in col {
                    out.add_term(*b, &(a * c));
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SuperOp) -> SuperOp {
        assert_eq!(self.r, other.r, "degree mismatch");
        let mut out = SuperOp::zero(self.cfg, self.r);
        for (k, col) in &other.cols {
            let v = self.apply(&TensorVector { coeffs: col.clone() });
            out.set_column(*k, v);
        }
        out
    }

    pub fn add(&self, other: &SuperOp) -> SuperOp {
        let mut out = self.clone();
        for (b, k, v) in other.entries() {
            out.add_entry(b, k, v);
        }
        out
    }

    pub fn sub(&self, other: &SuperOp) -> SuperOp {
        let mut out = self.clone();
        for (b, k, v) in other.entries() {
            out.add_entry(b, k, &-v);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> SuperOp {
        let mut out = SuperOp::zero(self.cfg, self.r);
        for (b, k, v) in self.entries() {
            out.add_entry(b, k, &(v * c));
        }
        out
    }

    pub fn transpose(&self) -> SuperOp {
        let mut out = SuperOp::zero(self.cfg, self.r);
        for (b, k, v) in self.entries() {
            out.add_entry(k, b, v);
        }
        out
    }

    /// Rank over `Q(q)` by fraction-free Gaussian elimination.
    pub fn rank(&self) -> usize {
        let n = self.cfg.basis_size(self.r) as usize;
        let mut rows: Vec<Vec<QScalar>> = alloc::vec![alloc::vec![QScalar::zero(); n]; n];
        for (b, k, v) in self.entries() {
            rows[b as usize][k as usize] = v.clone();
        }
        crate::linalg::rank(rows)
    }

    /// Full supertrace `sum_I (-1)^{I-bar} <I|A|I>`.
    pub fn supertrace(&self) -> QScalar {
        let mut s = QScalar::zero();
        for (k, col) in &self.cols {
            if let Some(v) = col.get(k) {
                let idx = self.cfg.decode(*k, self.r);
                if self.cfg.index_parity(&idx) {
                    s -= v;
                } else {
                    s += v;
                }
            }
        }
        s
    }

    /// Partial supertrace over the 1-based tensor positions in `positions`,
    /// `sum (-1)^{parity of traced indices} <I|A|J>` with `I, J` agreeing on
    /// the traced slots. Exact for parity-even operators.
    pub fn partial_supertrace(&self, positions: &[usize]) -> SuperOp {
        let keep: Vec<usize> = (1..=self.r).filter(|p| !positions.contains(p)).collect();
        let mut out = SuperOp::zero(self.cfg, keep.len());
        for (b, k, v) in self.entries() {
            let bi = self.cfg.decode(b, self.r);
            let ki = self.cfg.decode(k, self.r);
            if positions.iter().any(|&p| bi[p - 1] != ki[p - 1]) {
                continue;
            }
            let traced: Vec<usize> = positions.iter().map(|&p| bi[p - 1]).collect();
            let nb: Vec<usize> = keep.iter().map(|&p| bi[p - 1]).collect();
            let nk: Vec<usize> = keep.iter().map(|&p| ki[p - 1]).collect();
            let val = if self.cfg.index_parity(&traced) { -v } else { v.clone() };
            out.add_entry(self.cfg.encode(&nb), self.cfg.encode(&nk), &val);
        }
        out
    }
}

impl fmt::Debug for SuperOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SuperOp(r={}) {{", self.r)?;
        for (b, k, v) in self.entries() {
            writeln!(
                f,
                "  <{:?}|A|{:?}> = {}",
                self.cfg.decode(b, self.r),
                self.cfg.decode(k, self.r),
                v
            )?;
        }
        f.write_str("}")
    }
}

/// Diagonal projector onto the kets of weight `mu` (`mu_i` copies of `i`).
/// `None` when `sum mu != r` or `mu` has the wrong length.
pub fn weight_projector(mu: &[usize], cfg: SuperSpaceCfg, r: usize) -> Option<SuperOp> {
    if mu.len() != cfg.dim() || mu.iter().sum::<usize>() != r {
        return None;
    }
    let mut op = SuperOp::zero(cfg, r);
    for k in 0..cfg.basis_size(r) {
        if multiplicities(&cfg.decode(k, r), cfg.dim()) == mu {
            op.add_entry(k, k, &QScalar::one());
        }
    }
    Some(op)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_round_trip() {
        let cfg = SuperSpaceCfg::new(2, 1);
        for k in 0..cfg.basis_size(3) {
            assert_eq!(cfg.encode(&cfg.decode(k, 3)), k);
        }
        assert_eq!(cfg.encode(&[1, 1, 2]), 1);
        assert_eq!(cfg.encode(&[2, 1, 1]), 9);
    }

    #[test]
    fn supertrace_of_identity() {
        assert!(SuperOp::identity(SuperSpaceCfg::new(1, 1), 1).supertrace().is_zero());
        assert!(SuperOp::identity(SuperSpaceCfg::new(2, 1), 1).supertrace().is_one());
        // str over (C^{m|n})^{⊗r} of the identity is (m - n)^r
        let cfg = SuperSpaceCfg::new(2, 1);
        assert!(SuperOp::identity(cfg, 3).supertrace().is_one());
    }

    #[test]
    fn weight_projectors() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let p = weight_projector(&[2, 0], cfg, 2).unwrap();
        assert_eq!(p.entries().count(), 1);
        assert_eq!(p.entry(&[1, 1], &[1, 1]), QScalar::one());
        assert!(weight_projector(&[1, 0], cfg, 2).is_none());
        let p = weight_projector(&[1, 1], cfg, 2).unwrap();
        assert_eq!(p.compose(&p), p);
    }

    #[test]
    fn gamma_sign_examples() {
        let cfg = SuperSpaceCfg::new(1, 1);
        // diagonal entries carry no sign
        for k in 0..cfg.basis_size(2) {
            let idx = cfg.decode(k, 2);
            assert!(!cfg.gamma(&idx, &idx));
        }
        assert!(cfg.gamma(&[2], &[1]));
        assert!(!cfg.gamma(&[1], &[2]));
    }
}
