use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use core::cell::RefCell;

use super::{SuperOp, SuperSpaceCfg, TensorVector};
use crate::hecke::{q_minus_qinv, HeckeElt, Perm};
use crate::qscalar::QScalar;

/// `Ř_k v` on `(C^{m|n})^{⊗r}` without building the operator:
/// `Ř(e_a ⊗ e_a) = (-1)^a q_a e_a ⊗ e_a` and, for `a != b`,
/// `Ř(e_a ⊗ e_b) = (-1)^{ab} e_b ⊗ e_a + [a > b](q - q^-1) e_a ⊗ e_b`.
pub fn rcheck_apply(cfg: SuperSpaceCfg, k: usize, r: usize, v: &TensorVector) -> TensorVector {
    let d = cfg.dim() as u32;
    let hi = d.pow((r - k) as u32);
    let lo = d.pow((r - k - 1) as u32);
    let z = q_minus_qinv();
    let q = QScalar::q_pow(1);
    let mq = -QScalar::q_pow(-1);
    let mut out = TensorVector::zero();
    for (&code, c) in &v.coeffs {
        let a = (code / hi) % d + 1;
        let b = (code / lo) % d + 1;
        let (pa, pb) = (cfg.parity(a as usize), cfg.parity(b as usize));
        if a == b {
            out.add_term(code, &(c * if pa { &mq } else { &q }));
            continue;
        }
        let swapped = code - (a - 1) * hi - (b - 1) * lo + (b - 1) * hi + (a - 1) * lo;
        out.add_term(swapped, &if pa && pb { -c } else { c.clone() });
        if a > b {
            out.add_term(code, &(c * &z));
        }
    }
    out
}

/// `rho(T_sigma) v` for every `sigma` in `S_r`, walking the weak order.
fn orbit(cfg: SuperSpaceCfg, r: usize, v: &TensorVector) -> BTreeMap<Perm, TensorVector> {
    let mut out = BTreeMap::new();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let id = Perm::identity(r);
    seen.insert(id.clone());
    out.insert(id.clone(), v.clone());
    queue.push_back(id);
    while let Some(p) = queue.pop_front() {
        for i in 1..r {
            if !p.left_ascent(i) {
                continue;
            }
            let s = p.left_mul_simple(i);
            if !seen.insert(s.clone()) {
                continue;
            }
            let w = rcheck_apply(cfg, i, r, &out[&p]);
            out.insert(s.clone(), w);
            queue.push_back(s);
        }
    }
    out
}

/// `rho(h) v` under `T_k -> Ř_{k,k+1}`.
pub fn hecke_apply(h: &HeckeElt, cfg: SuperSpaceCfg, v: &TensorVector) -> TensorVector {
    HeckeActionCache::new(cfg, h.degree()).apply(h, v)
}

/// The operator `rho(h)` on `(C^{m|n})^{⊗r}`.
pub fn hecke_action(h: &HeckeElt, cfg: SuperSpaceCfg, r: usize) -> SuperOp {
    assert_eq!(h.degree(), r, "Hecke degree must match the tensor degree");
    HeckeActionCache::new(cfg, r).operator(h)
}

/// Caches the orbits `{rho(T_sigma) e_J}` of basis kets so that many Hecke
/// elements can be applied cheaply. Single-threaded by design.
pub struct HeckeActionCache {
    cfg: SuperSpaceCfg,
    r: usize,
    orbits: RefCell<BTreeMap<u32, BTreeMap<Perm, TensorVector>>>,
}

impl HeckeActionCache {
    pub fn new(cfg: SuperSpaceCfg, r: usize) -> Self {
        HeckeActionCache {
            cfg,
            r,
            orbits: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn cfg(&self) -> SuperSpaceCfg {
        self.cfg
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    /// `rho(h) e_J`.
    pub fn apply_basis(&self, h: &HeckeElt, ket: u32) -> TensorVector {
        let mut orbits = self.orbits.borrow_mut();
        let orb = orbits
            .entry(ket)
            .or_insert_with(|| orbit(self.cfg, self.r, &TensorVector::basis(ket)));
        let mut out = TensorVector::zero();
        for (p, c) in h.terms() {
            for (k, v) in &orb[p].coeffs {
                out.add_term(*k, &(v * c));
            }
        }
        out
    }

    pub fn apply(&self, h: &HeckeElt, v: &TensorVector) -> TensorVector {
        let mut out = TensorVector::zero();
        for (k, c) in &v.coeffs {
            out = out.add(&self.apply_basis(h, *k).scale(c));
        }
        out
    }

    pub fn operator(&self, h: &HeckeElt) -> SuperOp {
        let mut op = SuperOp::zero(self.cfg, self.r);
        for ket in 0..self.cfg.basis_size(self.r) {
            op.set_column(ket, self.apply_basis(h, ket));
        }
        op
    }
}
