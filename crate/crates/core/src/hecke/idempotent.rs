use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::cell::RefCell;

use super::{q_minus_qinv, HeckeElt, Perm, SeminormalRep};
use crate::combinat::{Partition, StandardTableau};
use crate::qscalar::QScalar;

/// The Jucys–Murphy element
/// `y_k = 1 + (q - q^-1)(T_{(1,k)} + ... + T_{(k-1,k)})` in `H_r`.
pub fn jucys_murphy(k: usize, r: usize) -> HeckeElt {
    let d = q_minus_qinv();
    let mut y = HeckeElt::one(r);
    for j in 1..k {
        y = y.add(&HeckeElt::basis(Perm::transposition(j, k, r)).scale(&d));
    }
    y
}

/// Primitive idempotent `E_T` by the Jucys–Murphy recurrence
/// `E_T = E_{T^-} prod_a (y_r - q^{2a}) / (q^{2c} - q^{2a})`, the product
/// running over the addable contents `a` of `shape(T^-)` other than the
/// content `c` of the box holding `r`.
pub fn primitive_idempotent(t: &StandardTableau) -> HeckeElt {
    HeckeCache::new().idempotent(t)
}

/// `sum_sigma T_sigma x T_{sigma^-1}`, walking the weak order so each step
/// is one left and one right multiplication by a generator.
pub fn symmetrize(x: &HeckeElt) -> HeckeElt {
    let r = x.degree();
    let mut total = x.clone();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(Perm::identity(r));
    queue.push_back((Perm::identity(r), x.clone()));
    while let Some((p, xp)) = queue.pop_front() {
        for i in 1..r {
            if !p.left_ascent(i) {
                continue;
            }
            let s = p.left_mul_simple(i);
            if !seen.insert(s.clone()) {
                continue;
            }
            let xs = xp.left_mul_generator(i).right_mul_generator(i);
            total = total.add(&xs);
            queue.push_back((s, xs));
        }
    }
    total
}

/// `chi_q^lambda = sum_sigma T_sigma E_T T_{sigma^-1}` with `T` the
/// row-reading tableau of `lambda`.
pub fn character_element(lambda: &Partition) -> HeckeElt {
    HeckeCache::new().character_element(lambda)
}

/// `sum_w chi^lambda(T_{w^-1}) T_w`, from seminormal traces.
pub fn character_element_via_traces(lambda: &Partition) -> HeckeElt {
    let rep = SeminormalRep::new(lambda);
    let r = lambda.size();
    let mut out = HeckeElt::zero(r);
    for w in Perm::all(r) {
        let c = rep.trace(&HeckeElt::basis(w.inverse()));
        out = out.add(&HeckeElt::basis(w).scale(&c));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedKind {
    /// Induced from the sign character of the parabolic subalgebra.
    Sign,
    /// Induced from the trivial character.
    Trivial,
}

/// Induced character `psi_q^mu` (sign) or `phi_q^mu` (trivial):
/// `sum_sigma T_sigma (prod_i E^{block_i}) T_{sigma^-1}` with one column
/// (sign) or row (trivial) idempotent per part of `mu`.
pub fn induced_character(mu: &Partition, kind: InducedKind) -> HeckeElt {
    HeckeCache::new().induced_character(mu, kind)
}

/// Memo tables for idempotents and characters. Not shared across threads;
/// each worker owns its own cache.
#[derive(Default)]
pub struct HeckeCache {
    idempotents: RefCell<BTreeMap<StandardTableau, HeckeElt>>,
    characters: RefCell<BTreeMap<Partition, HeckeElt>>,
    reps: RefCell<BTreeMap<Partition, SeminormalRep>>,
}

impl HeckeCache {
    pub fn new() -> Self {
        HeckeCache::default()
    }

    pub fn idempotent(&self, t: &StandardTableau) -> HeckeElt {
        if let Some(e) = self.idempotents.borrow().get(t) {
            return e.clone();
        }
        let r = t.size();
        let e = if r <= 1 {
            HeckeElt::one(r)
        } else {
            let (smaller, c) = t.remove_max();
            let mut e = self.idempotent(&smaller).embed(0, r);
            let y = jucys_murphy(r, r);
            let qc = QScalar::q_pow(2 * c);
            for a in smaller.shape().addable_contents() {
                if a == c {
                    continue;
                }
                let qa = QScalar::q_pow(2 * a);
                let factor = y.sub(&HeckeElt::scalar(qa.clone(), r));
                e = e.mul(&factor).scale(&(&qc - &qa).inv().unwrap());
            }
            e
        };
        self.idempotents.borrow_mut().insert(t.clone(), e.clone());
        e
    }

    pub fn character_element(&self, lambda: &Partition) -> HeckeElt {
        if let Some(x) = self.characters.borrow().get(lambda) {
            return x.clone();
        }
        let e = self.idempotent(&StandardTableau::row_reading(lambda));
        let x = symmetrize(&e);
        self.characters.borrow_mut().insert(lambda.clone(), x.clone());
        x
    }

    pub fn induced_character(&self, mu: &Partition, kind: InducedKind) -> HeckeElt {
        let r = mu.size();
        let mut x = HeckeElt::one(r);
        let mut offset = 0;
        for &k in mu.parts() {
            let block = match kind {
                InducedKind::Sign => Partition::new(&alloc::vec![1; k]),
                InducedKind::Trivial => Partition::new(&[k]),
            };
            let e = self.idempotent(&StandardTableau::row_reading(&block)).embed(offset, r);
            x = x.mul(&e);
            offset += k;
        }
        symmetrize(&x)
    }

    pub fn seminormal(&self, lambda: &Partition) -> SeminormalRep {
        if let Some(rep) = self.reps.borrow().get(lambda) {
            return rep.clone();
        }
        let rep = SeminormalRep::new(lambda);
        self.reps.borrow_mut().insert(lambda.clone(), rep.clone());
        rep
    }

    /// All `(T, E_T)` for `T` in `SYT(lambda)`.
    pub fn idempotents_of_shape(&self, lambda: &Partition) -> Vec<(StandardTableau, HeckeElt)> {
        StandardTableau::all(lambda)
            .into_iter()
            .map(|t| {
                let e = self.idempotent(&t);
                (t, e)
            })
            .collect()
    }
}
