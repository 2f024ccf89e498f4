//! The quantum coordinate superalgebra `A_q(Mat_{m|n})`: normal-ordered
//! noncommutative polynomials in the `x_ij`, the rewriting system given by
//! the defining relations, operator tables over it, and the `*` product.

mod ops;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt::{self, Write};

pub use ops::{
    star_product, x_entry, x_entry_with, x_operator, x_operator_with, x_power, AqMatrix, AqOp, CoactionSign,
};

use crate::hecke::q_minus_qinv;
use crate::qscalar::QScalar;
use crate::superlinear::SuperSpaceCfg;

/// A word in the generators; generator `x_ij` is encoded as
/// `(i - 1)(m + n) + (j - 1)`, so normal order is lexicographic in `(i, j)`.
pub type Word = Vec<u8>;

#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    cfg: SuperSpaceCfg,
    terms: BTreeMap<Word, QScalar>,
}

impl NCPoly {
    pub fn zero(cfg: SuperSpaceCfg) -> Self {
        NCPoly {
            cfg,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: QScalar, cfg: SuperSpaceCfg) -> Self {
        let mut p = NCPoly::zero(cfg);
        p.add_term(Word::new(), &c);
        p
    }

    pub fn one(cfg: SuperSpaceCfg) -> Self {
        NCPoly::constant(QScalar::one(), cfg)
    }

    /// The generator `x_ij` (1-based).
    pub fn gen(i: usize, j: usize, cfg: SuperSpaceCfg) -> Self {
        let mut p = NCPoly::zero(cfg);
        p.add_term(alloc::vec![encode(cfg, i, j)], &QScalar::one());
        p
    }

    pub fn cfg(&self) -> SuperSpaceCfg {
        self.cfg
    }

    pub fn terms(&self) -> &BTreeMap<Word, QScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[u8]) -> QScalar {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Coefficient of the word given as index pairs.
    pub fn coeff_of(&self, pairs: &[(usize, usize)]) -> QScalar {
        let w: Word = pairs.iter().map(|&(i, j)| encode(self.cfg, i, j)).collect();
        self.coeff(&w)
    }

    /// Parity of a homogeneous polynomial; `None` for mixed parity, and
    /// `Some(false)` for zero.
    pub fn parity(&self) -> Option<bool> {
        let mut seen = None;
        for w in self.terms.keys() {
            let p = word_parity(self.cfg, w);
            match seen {
                None => seen = Some(p),
                Some(s) if s != p => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(false))
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> NCPoly {
        let mut out = NCPoly::zero(self.cfg);
        if c.is_zero() {
            return out;
        }
        for (w, v) in &self.terms {
            out.terms.insert(w.clone(), v * c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&QScalar::from_int(-1))
    }

    /// Words as lists of 1-based index pairs.
    pub fn pair_terms(&self) -> impl Iterator<Item = (Vec<(usize, usize)>, &QScalar)> + '_ {
        self.terms
            .iter()
            .map(move |(w, c)| (w.iter().map(|&g| decode(self.cfg, g)).collect(), c))
    }

    fn gen_name(&self, g: u8, latex: bool) -> String {
        let (i, j) = decode(self.cfg, g);
        let wide = self.cfg.dim() > 9;
        match (latex, wide) {
            (false, false) => alloc::format!("x{i}{j}"),
            (false, true) => alloc::format!("x{i}_{j}"),
            (true, false) => alloc::format!("x_{{{i}{j}}}"),
            (true, true) => alloc::format!("x_{{{i},{j}}}"),
        }
    }

    /// LaTeX form, e.g. `x_{11}x_{22} + (q^2-1)/(q) x_{12}x_{21}`.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let mono: String = w.iter().map(|&g| self.gen_name(g, true)).collect();
            if mono.is_empty() {
                let _ = write!(s, "{}", c.to_latex());
            } else if c.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "\\left({}\\right){mono}", c.to_latex());
            }
        }
        s
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let names: Vec<String> = w.iter().map(|&g| self.gen_name(g, false)).collect();
            let mono = names.join("*");
            match (mono.is_empty(), c.is_one()) {
                (true, true) => f.write_str("1")?,
                (true, false) => write!(f, "({c})")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "({c})*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

/// Generator code of `x_ij`.
pub fn encode(cfg: SuperSpaceCfg, i: usize, j: usize) -> u8 {
    let d = cfg.dim();
    assert!(i >= 1 && i <= d && j >= 1 && j <= d, "generator index out of range");
    ((i - 1) * d + (j - 1)) as u8
}

pub(crate) fn decode(cfg: SuperSpaceCfg, g: u8) -> (usize, usize) {
    let d = cfg.dim();
    (g as usize / d + 1, g as usize % d + 1)
}

fn gen_parity(cfg: SuperSpaceCfg, g: u8) -> bool {
    let (i, j) = decode(cfg, g);
    cfg.parity(i) ^ cfg.parity(j)
}

fn word_parity(cfg: SuperSpaceCfg, w: &[u8]) -> bool {
    w.iter().fold(false, |acc, &g| acc ^ gen_parity(cfg, g))
}

/// `(-1)^{e}` as a scalar.
fn sign(e: bool) -> QScalar {
    QScalar::from_int(if e { -1 } else { 1 })
}

/// Rewrite `x_a x_b` for a descent `a > b`, or for `a == b` odd, as a sum
/// of `c * x_u x_v` with `u <= v`. Relations, for `i < j` and `k < l`:
///
/// * `x_il x_ik = (-1)^{(i+l)(i+k)} q_i x_ik x_il`
/// * `x_jk x_ik = (-1)^{(i+k)(j+k)} q_k x_ik x_jk`
/// * `x_jk x_il = (-1)^{(j+k)(i+l)} x_il x_jk`
/// * `x_jl x_ik = (-1)^{(j+l)(i+k)} x_ik x_jl + (q - q^-1)(-1)^{j(i+k)+ik} x_il x_jk`
/// * `x_ik^2 = 0` for odd `x_ik`.
pub(crate) fn rewrite_pair(cfg: SuperSpaceCfg, a: u8, b: u8) -> Vec<(QScalar, u8, u8)> {
    let p = |k: usize| cfg.parity(k);
    let qi = |k: usize| QScalar::q_pow(if p(k) { -1 } else { 1 });
    let (ra, ca) = decode(cfg, a);
    let (rb, cb) = decode(cfg, b);
    if a == b {
        debug_assert!(gen_parity(cfg, a));
        return Vec::new();
    }
    debug_assert!(a > b);
    if ra == rb {
        let (i, l, k) = (ra, ca, cb);
        let s = (p(i) ^ p(l)) & (p(i) ^ p(k));
        return alloc::vec![(&sign(s) * &qi(i), b, a)];
    }
    let (j, i) = (ra, rb);
    if ca == cb {
        let k = ca;
        let s = (p(i) ^ p(k)) & (p(j) ^ p(k));
        return alloc::vec![(&sign(s) * &qi(k), b, a)];
    }
    if ca < cb {
        let (k, l) = (ca, cb);
        let s = (p(j) ^ p(k)) & (p(i) ^ p(l));
        return alloc::vec![(sign(s), b, a)];
    }
    let (l, k) = (ca, cb);
    let s1 = (p(j) ^ p(l)) & (p(i) ^ p(k));
    let s2 = (p(j) & (p(i) ^ p(k))) ^ (p(i) & p(k));
    alloc::vec![
        (sign(s1), b, a),
        (&q_minus_qinv() * &sign(s2), encode(cfg, i, l), encode(cfg, j, k)),
    ]
}

/// Which descent a rewriting step resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Terms = BTreeMap<Word, QScalar>;

fn add_into(map: &mut Terms, w: Word, c: &QScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
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

/// Multiplication context for `A_q(Mat_{m|n})`, memoizing the insertion of
/// a generator into a normal-ordered word. Not shared across threads.
pub struct AqAlgebra {
    cfg: SuperSpaceCfg,
    insert_memo: RefCell<BTreeMap<(Word, u8), Terms>>,
}

impl AqAlgebra {
    pub fn new(cfg: SuperSpaceCfg) -> Self {
        AqAlgebra {
            cfg,
            insert_memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn cfg(&self) -> SuperSpaceCfg {
        self.cfg
    }

    pub fn gen(&self, i: usize, j: usize) -> NCPoly {
        NCPoly::gen(i, j, self.cfg)
    }

    fn is_reducible(&self, a: u8, b: u8) -> bool {
        a > b || (a == b && gen_parity(self.cfg, a))
    }

    /// Normal form of `word * x_g` for a normal-ordered `word`.
    fn insert(&self, word: &[u8], g: u8) -> Terms {
        let Some(&last) = word.last() else {
            let mut t = Terms::new();
            t.insert(alloc::vec![g], QScalar::one());
            return t;
        };
        if !self.is_reducible(last, g) {
            let mut w = word.to_vec();
            w.push(g);
            let mut t = Terms::new();
            t.insert(w, QScalar::one());
            return t;
        }
        let key = (word.to_vec(), g);
        if let Some(t) = self.insert_memo.borrow().get(&key) {
            return t.clone();
        }
        let prefix = &word[..word.len() - 1];
        let mut out = Terms::new();
        for (c, u, v) in rewrite_pair(self.cfg, last, g) {
            for (w1, c1) in self.insert(prefix, u) {
                for (w2, c2) in self.insert(&w1, v) {
                    add_into(&mut out, w2, &(&(&c * &c1) * &c2));
                }
            }
        }
        self.insert_memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// Normal form of a product of generators given as index pairs.
    pub fn monomial(&self, pairs: &[(usize, usize)]) -> NCPoly {
        let mut acc = Terms::new();
        acc.insert(Word::new(), QScalar::one());
        for &(i, j) in pairs {
            let g = encode(self.cfg, i, j);
            let mut next = Terms::new();
            for (w, c) in &acc {
                for (w2, c2) in self.insert(w, g) {
                    add_into(&mut next, w2, &(c * &c2));
                }
            }
            acc = next;
        }
        NCPoly {
            cfg: self.cfg,
            terms: acc,
        }
    }

    pub fn mul(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        assert_eq!(a.cfg, b.cfg, "operands live in different algebras");
        let mut out = Terms::new();
        for (wa, ca) in &a.terms {
            let mut acc = Terms::new();
            acc.insert(wa.clone(), ca.clone());
            // a normal word times a normal word: insert letters one by one
            for (wb, cb) in &b.terms {
                let mut cur = acc.clone();
                for &g in wb {
                    let mut next = Terms::new();
                    for (w, c) in &cur {
                        for (w2, c2) in self.insert(w, g) {
                            add_into(&mut next, w2, &(c * &c2));
                        }
                    }
                    cur = next;
                }
                for (w, c) in cur {
                    add_into(&mut out, w, &(&c * cb));
                }
            }
        }
        NCPoly { cfg: a.cfg, terms: out }
    }

    pub fn pow(&self, a: &NCPoly, k: u32) -> NCPoly {
        let mut out = NCPoly::one(self.cfg);
        for _ in 0..k {
            out = self.mul(&out, a);
        }
        out
    }

    /// Normal form of an arbitrary word by repeatedly resolving the
    /// leftmost or rightmost reducible adjacent pair. Independent of the
    /// insertion memo; used to probe confluence.
    pub fn rewrite_with(&self, word: &[u8], strategy: Strategy) -> NCPoly {
        let mut memo = BTreeMap::new();
        NCPoly {
            cfg: self.cfg,
            terms: self.rewrite_rec(word, strategy, &mut memo),
        }
    }

    fn rewrite_rec(&self, word: &[u8], strategy: Strategy, memo: &mut BTreeMap<Word, Terms>) -> Terms {
        if let Some(t) = memo.get(word) {
            return t.clone();
        }
        let positions = 0..word.len().saturating_sub(1);
        let pos = match strategy {
            Strategy::Leftmost => positions.clone().find(|&p| self.is_reducible(word[p], word[p + 1])),
            Strategy::Rightmost => positions.rev().find(|&p| self.is_reducible(word[p], word[p + 1])),
        };
        let out = match pos {
            None => {
                let mut t = Terms::new();
                t.insert(word.to_vec(), QScalar::one());
                t
            }
            Some(p) => {
                let mut out = Terms::new();
                for (c, u, v) in rewrite_pair(self.cfg, word[p], word[p + 1]) {
                    let mut w = word.to_vec();
                    w[p] = u;
                    w[p + 1] = v;
                    for (w2, c2) in self.rewrite_rec(&w, strategy, memo) {
                        add_into(&mut out, w2, &(&c * &c2));
                    }
                }
                out
            }
        };
        memo.insert(word.to_vec(), out.clone());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg11() -> SuperSpaceCfg {
        SuperSpaceCfg::new(1, 1)
    }

    #[test]
    fn relation_examples() {
        let alg = AqAlgebra::new(cfg11());
        let x = |i, j| alg.gen(i, j);
        assert!(alg.mul(&x(1, 2), &x(1, 2)).is_zero());
        assert_eq!(
            alg.mul(&x(1, 2), &x(1, 1)),
            alg.monomial(&[(1, 1), (1, 2)]).scale(&QScalar::q_pow(1))
        );
        let want = alg
            .monomial(&[(1, 1), (2, 2)])
            .add(&alg.monomial(&[(1, 2), (2, 1)]).scale(&q_minus_qinv()));
        assert_eq!(alg.mul(&x(2, 2), &x(1, 1)), want);
        assert_eq!(want.to_string(), "x11*x22 + ((q^2-1)/(q))*x12*x21");
    }

    #[test]
    fn odd_generators_square_to_zero() {
        let alg = AqAlgebra::new(SuperSpaceCfg::new(2, 1));
        for i in 1..=3 {
            for j in 1..=3 {
                let g = alg.gen(i, j);
                let sq = alg.mul(&g, &g);
                let odd = (i > 2) != (j > 2);
                assert_eq!(sq.is_zero(), odd, "x{i}{j}^2");
            }
        }
    }

    fn random_word(rng: &mut ChaCha8Rng, d: usize) -> Word {
        let len = rng.gen_range(2..=5);
        (0..len).map(|_| rng.gen_range(0..(d * d) as u8)).collect()
    }

    #[test]
    fn rewriting_is_confluent_on_random_words() {
        for (m, n) in [(1, 1), (2, 1)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let alg = AqAlgebra::new(cfg);
            let mut rng = ChaCha8Rng::seed_from_u64(7 + m as u64);
            for _ in 0..200 {
                let w = random_word(&mut rng, cfg.dim());
                let left = alg.rewrite_with(&w, Strategy::Leftmost);
                let right = alg.rewrite_with(&w, Strategy::Rightmost);
                let pairs: Vec<_> = w.iter().map(|&g| decode(cfg, g)).collect();
                let ins = alg.monomial(&pairs);
                assert_eq!(left, right, "word {pairs:?}");
                assert_eq!(left, ins, "word {pairs:?}");
            }
        }
    }

    #[test]
    fn multiplication_is_associative_and_graded() {
        let cfg = SuperSpaceCfg::new(2, 1);
        let alg = AqAlgebra::new(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let mut poly = || {
                let w = random_word(&mut rng, 3);
                let pairs: Vec<_> = w[..2].iter().map(|&g| decode(cfg, g)).collect();
                alg.monomial(&pairs)
            };
            let (a, b, c) = (poly(), poly(), poly());
            assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
            if let (Some(pa), Some(pb)) = (a.parity(), b.parity()) {
                let ab = alg.mul(&a, &b);
                if !ab.is_zero() {
                    assert_eq!(ab.parity(), Some(pa ^ pb));
                }
            }
        }
    }
}
