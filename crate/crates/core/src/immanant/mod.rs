//! Quantum super immanants `Imm_chi(X^I_J)` and their normalized sums.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::aqmat::{x_entry, AqAlgebra, NCPoly};
use crate::combinat::{alpha_factors, in_hmn, multisets, rearrangements, words, Partition, StandardTableau};
use crate::hecke::{HeckeCache, HeckeElt, Perm};
use crate::qscalar::QScalar;
use crate::superlinear::{HeckeActionCache, SuperSpaceCfg};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImmanantError {
    /// `|lambda|`, `|I|` and `|J|` disagree.
    SizeMismatch,
    /// An index outside `[m + n]`.
    IndexOutOfRange(usize),
}

impl fmt::Display for ImmanantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImmanantError::SizeMismatch => f.write_str("character degree and index lengths differ"),
            ImmanantError::IndexOutOfRange(i) => write!(f, "index {i} out of range"),
        }
    }
}

/// Which Hecke character an immanant is taken against.
#[derive(Clone, Debug)]
pub enum Character {
    /// `chi_q^lambda`.
    Irreducible(Partition),
    /// Any central element, e.g. an induced character.
    Element(HeckeElt),
}

/// `Imm_chi(X^I_J)` with `I = bra`, `J = ket`.
#[derive(Clone, Debug)]
pub struct ImmanantQuery {
    pub chi: Character,
    pub bra: Vec<usize>,
    pub ket: Vec<usize>,
}

impl ImmanantQuery {
    pub fn principal(lambda: &Partition, index: &[usize]) -> Self {
        ImmanantQuery {
            chi: Character::Irreducible(lambda.clone()),
            bra: index.to_vec(),
            ket: index.to_vec(),
        }
    }
}

/// Owns the algebra and the Hecke memo tables so that families of
/// immanants share work. Single-threaded; give each worker its own.
pub struct ImmanantEngine {
    alg: AqAlgebra,
    hecke: HeckeCache,
    actions: RefCell<BTreeMap<usize, HeckeActionCache>>,
}

impl ImmanantEngine {
    pub fn new(cfg: SuperSpaceCfg) -> Self {
        ImmanantEngine {
            alg: AqAlgebra::new(cfg),
            hecke: HeckeCache::new(),
            actions: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn cfg(&self) -> SuperSpaceCfg {
        self.alg.cfg()
    }

    pub fn algebra(&self) -> &AqAlgebra {
        &self.alg
    }

    pub fn hecke(&self) -> &HeckeCache {
        &self.hecke
    }

    fn check(&self, index: &[usize]) -> Result<(), ImmanantError> {
        let d = self.cfg().dim();
        match index.iter().find(|&&i| i == 0 || i > d) {
            Some(&i) => Err(ImmanantError::IndexOutOfRange(i)),
            None => Ok(()),
        }
    }

    fn character(&self, chi: &Character) -> HeckeElt {
        match chi {
            Character::Irreducible(lam) => self.hecke.character_element(lam),
            Character::Element(h) => h.clone(),
        }
    }

    /// `<I| rho(h) X_1 ... X_r |J>`, summing over the weight class of `I`
    /// since `rho(h)` preserves weights.
    pub fn matrix_coefficient(&self, h: &HeckeElt, bra: &[usize], ket: &[usize]) -> NCPoly {
        let cfg = self.cfg();
        let r = bra.len();
        let mut actions = self.actions.borrow_mut();
        let act = actions.entry(r).or_insert_with(|| HeckeActionCache::new(cfg, r));
        let row = cfg.encode(bra);
        let mut out = NCPoly::zero(cfg);
        for k in rearrangements(bra) {
            let c = act.apply_basis(h, cfg.encode(&k)).get(row);
            if !c.is_zero() {
                out = out.add(&x_entry(&self.alg, &k, ket).scale(&c));
            }
        }
        out
    }

    /// `(-1)^{sum_k i_k j_k} <I| chi X_1 ... X_r |J>`.
    pub fn immanant(&self, query: &ImmanantQuery) -> Result<NCPoly, ImmanantError> {
        let h = self.character(&query.chi);
        let r = h.degree();
        if query.bra.len() != r || query.ket.len() != r {
            return Err(ImmanantError::SizeMismatch);
        }
        self.check(&query.bra)?;
        self.check(&query.ket)?;
        let cfg = self.cfg();
        let odd = query
            .bra
            .iter()
            .zip(&query.ket)
            .filter(|(&i, &j)| cfg.parity(i) && cfg.parity(j))
            .count()
            % 2
            == 1;
        let v = self.matrix_coefficient(&h, &query.bra, &query.ket);
        Ok(if odd { v.neg() } else { v })
    }

    /// `Imm_{chi_q^lambda}(X_I)` for a principal minor.
    pub fn principal(&self, lambda: &Partition, index: &[usize]) -> Result<NCPoly, ImmanantError> {
        self.immanant(&ImmanantQuery::principal(lambda, index))
    }

    /// The same principal immanant through the idempotent of `t`:
    /// `alpha_{q^2}(I) (-1)^I / alpha(I) * sum_sigma <I_sigma| E_T X |I_sigma>`.
    pub fn via_idempotent(&self, t: &StandardTableau, index: &[usize]) -> Result<NCPoly, ImmanantError> {
        let r = t.size();
        if index.len() != r {
            return Err(ImmanantError::SizeMismatch);
        }
        self.check(index)?;
        let cfg = self.cfg();
        let mut sorted = index.to_vec();
        sorted.sort_unstable();
        let e = self.hecke.idempotent(t);
        let mut total = NCPoly::zero(cfg);
        for sigma in Perm::all(r) {
            let permuted: Vec<usize> = (1..=r).map(|k| sorted[sigma.apply(k) - 1]).collect();
            total = total.add(&self.matrix_coefficient(&e, &permuted, &permuted));
        }
        let (plain, quantum) = alpha_factors(&sorted, cfg.m, cfg.n);
        let mut c = &quantum / &QScalar::from_bigint(plain);
        if cfg.index_parity(&sorted) {
            c = -c;
        }
        Ok(total.scale(&c))
    }

    /// `sum_I Imm_{chi_q^lambda}(X_I) / alpha_{q^2}(I)` over sorted `I`.
    pub fn immanant_sum(&self, lambda: &Partition) -> NCPoly {
        self.normalized_sum(&Character::Irreducible(lambda.clone()), lambda.size())
    }

    /// `sum_I Imm_chi(X_I) / alpha_{q^2}(I)` for any character.
    pub fn normalized_sum(&self, chi: &Character, r: usize) -> NCPoly {
        let cfg = self.cfg();
        let mut out = NCPoly::zero(cfg);
        for index in multisets(cfg.dim(), r) {
            let query = ImmanantQuery {
                chi: chi.clone(),
                bra: index.clone(),
                ket: index.clone(),
            };
            let v = self.immanant(&query).expect("sizes agree by construction");
            let (_, aq) = alpha_factors(&index, cfg.m, cfg.n);
            out = out.add(&v.scale(&aq.inv().expect("q-factorials are nonzero")));
        }
        out
    }

    /// `str_{1..r}(E_T X_1 ... X_r)`.
    pub fn supertrace_of_idempotent(&self, t: &StandardTableau) -> NCPoly {
        let e = self.hecke.idempotent(t);
        self.supertrace_of(&e)
    }

    /// `str_{1..r}(rho(h) X_1 ... X_r)`.
    pub fn supertrace_of(&self, h: &HeckeElt) -> NCPoly {
        let cfg = self.cfg();
        let mut out = NCPoly::zero(cfg);
        for w in words(cfg.dim(), h.degree()) {
            let v = self.matrix_coefficient(h, &w, &w);
            out = if cfg.index_parity(&w) { out.sub(&v) } else { out.add(&v) };
        }
        out
    }
}

/// `Imm_chi(X^I_J)` with a throwaway engine.
pub fn immanant(cfg: SuperSpaceCfg, query: &ImmanantQuery) -> Result<NCPoly, ImmanantError> {
    ImmanantEngine::new(cfg).immanant(query)
}

/// Whether `Imm_{chi_q^lambda}(X_I) = 0` for every `I`: exactly when lambda
/// is outside the (m, n)-hook.
pub fn vanishes(lambda: &Partition, cfg: SuperSpaceCfg) -> bool {
    !in_hmn(lambda, cfg.m, cfg.n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(p: &[usize]) -> Partition {
        Partition::new(p)
    }

    #[test]
    fn small_examples() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        let alg = eng.algebra();
        assert_eq!(eng.principal(&lam(&[1]), &[1]).unwrap(), alg.gen(1, 1));
        assert_eq!(eng.principal(&lam(&[1]), &[2]).unwrap(), alg.gen(2, 2).neg());
        assert_eq!(eng.immanant_sum(&lam(&[1])), alg.gen(1, 1).sub(&alg.gen(2, 2)));
        assert_eq!(eng.principal(&lam(&[1, 1]), &[1]), Err(ImmanantError::SizeMismatch));
        assert_eq!(eng.principal(&lam(&[1]), &[3]), Err(ImmanantError::IndexOutOfRange(3)));
    }

    #[test]
    fn off_diagonal_minor() {
        // r = 1: Imm(X^1_2) = x12, Imm(X^2_1) = x21
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        let q = ImmanantQuery {
            chi: Character::Irreducible(lam(&[1])),
            bra: alloc::vec![1],
            ket: alloc::vec![2],
        };
        assert_eq!(eng.immanant(&q).unwrap(), eng.algebra().gen(1, 2));
    }

    #[test]
    fn two_paths_agree_for_11() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        for r in 1..=3 {
            for l in Partition::all(r) {
                let t = StandardTableau::row_reading(&l);
                for index in multisets(2, r) {
                    assert_eq!(
                        eng.principal(&l, &index).unwrap(),
                        eng.via_idempotent(&t, &index).unwrap(),
                        "{l} {index:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn two_paths_agree_for_21() {
        let cfg = SuperSpaceCfg::new(2, 1);
        let eng = ImmanantEngine::new(cfg);
        for r in 1..=3 {
            for l in Partition::all(r) {
                let t = StandardTableau::column_reading(&l);
                for index in multisets(3, r) {
                    assert_eq!(
                        eng.principal(&l, &index).unwrap(),
                        eng.via_idempotent(&t, &index).unwrap(),
                        "{l} {index:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn sum_equals_supertrace() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        for r in 1..=3 {
            for l in Partition::all(r) {
                let s = eng.immanant_sum(&l);
                for t in StandardTableau::all(&l) {
                    assert_eq!(eng.supertrace_of_idempotent(&t), s, "{l} {t}");
                }
            }
        }
    }

    #[test]
    fn vanishing_outside_hook() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        let l = lam(&[2, 2]);
        assert!(vanishes(&l, cfg));
        for index in multisets(2, 4) {
            assert!(eng.principal(&l, &index).unwrap().is_zero(), "{index:?}");
        }
        assert!(eng.immanant_sum(&l).is_zero());
    }
}
