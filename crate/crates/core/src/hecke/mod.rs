//! The Iwahori–Hecke algebra `H_r` of type A with quadratic relation
//! `(T_i - q)(T_i + q^-1) = 0`, in the `T_sigma` basis.

mod idempotent;
mod perm;
mod seminormal;

use alloc::collections::BTreeMap;
use core::fmt;

pub use idempotent::{
    character_element, character_element_via_traces, induced_character, jucys_murphy, primitive_idempotent, symmetrize,
    HeckeCache, InducedKind,
};
pub use perm::Perm;
pub use seminormal::{character, diagonal_entry, identity as identity_matrix, mat_mul, Matrix, SeminormalRep};

use crate::qscalar::QScalar;

/// `q - q^-1`.
pub(crate) fn q_minus_qinv() -> QScalar {
    QScalar::laurent(-1, &[-1, 0, 1])
}

#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    r: usize,
    terms: BTreeMap<Perm, QScalar>,
}

impl HeckeElt {
    pub fn zero(r: usize) -> Self {
        HeckeElt {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize) -> Self {
        HeckeElt::basis(Perm::identity(r))
    }

    pub fn basis(p: Perm) -> Self {
        let r = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, QScalar::one());
        HeckeElt { r, terms }
    }

    /// The generator `T_i`.
    pub fn generator(i: usize, r: usize) -> Self {
        HeckeElt::basis(Perm::simple(i, r))
    }

    pub fn scalar(c: QScalar, r: usize) -> Self {
        HeckeElt::one(r).scale(&c)
    }

    pub fn from_terms(r: usize, terms: impl IntoIterator<Item = (Perm, QScalar)>) -> Self {
        let mut out = HeckeElt::zero(r);
        for (p, c) in terms {
            assert_eq!(p.degree(), r, "permutation degree must match");
            out.add_term(p, &c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &BTreeMap<Perm, QScalar> {
        &self.terms
    }

    pub fn coeff(&self, p: &Perm) -> QScalar {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, p: Perm, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
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

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> HeckeElt {
        if c.is_zero() {
            return HeckeElt::zero(self.r);
        }
        HeckeElt {
            r: self.r,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// `T_i * self`.
    pub fn left_mul_generator(&self, i: usize) -> HeckeElt {
        let d = q_minus_qinv();
        let mut out = HeckeElt::zero(self.r);
        for (p, c) in &self.terms {
            out.add_term(p.left_mul_simple(i), c);
            if !p.left_ascent(i) {
                out.add_term(p.clone(), &(c * &d));
            }
        }
        out
    }

    /// `self * T_i`.
    pub fn right_mul_generator(&self, i: usize) -> HeckeElt {
        let d = q_minus_qinv();
        let mut out = HeckeElt::zero(self.r);
        for (p, c) in &self.terms {
            out.add_term(p.right_mul_simple(i), c);
            if !p.right_ascent(i) {
                out.add_term(p.clone(), &(c * &d));
            }
        }
        out
    }

    pub fn mul(&self, other: &HeckeElt) -> HeckeElt {
        assert_eq!(self.r, other.r, "Hecke degrees must match");
        let mut out = HeckeElt::zero(self.r);
        for (p, c) in &other.terms {
            let mut acc = self.clone();
            for i in p.reduced_word() {
                acc = acc.right_mul_generator(i);
            }
            for (s, v) in &acc.terms {
                out.add_term(s.clone(), &(v * c));
            }
        }
        out
    }

    /// The anti-involution `T_sigma -> T_{sigma^-1}`.
    pub fn star(&self) -> HeckeElt {
        HeckeElt {
            r: self.r,
            terms: self.terms.iter().map(|(p, c)| (p.inverse(), c.clone())).collect(),
        }
    }

    /// The symmetrizing trace: coefficient of `T_1`.
    pub fn trace_form(&self) -> QScalar {
        self.coeff(&Perm::identity(self.r))
    }

    /// Image under `H_k -> H_r`, `T_i -> T_{i + offset}`.
    pub fn embed(&self, offset: usize, r: usize) -> HeckeElt {
        HeckeElt {
            r,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.embed(offset, r), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*T{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElt({self})")
    }
}
