//! Commutative polynomials and rational functions over `QScalar` in
//! `x_1..x_m, y_1..y_n`, supersymmetric Schur polynomials, and the
//! specialization of diagonal generators.

mod phi;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};

pub use phi::phi_specialize;

use crate::combinat::{ssyt, Partition};
use crate::qscalar::QScalar;

/// Exponent vector ordered graded-lexicographically with
/// `x_1 > ... > x_m > y_1 > ... > y_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SPoly {
    m: usize,
    n: usize,
    terms: BTreeMap<Monomial, QScalar>,
}

impl SPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        SPoly {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: QScalar, m: usize, n: usize) -> Self {
        let mut p = SPoly::zero(m, n);
        p.add_term(Monomial(alloc::vec![0; m + n]), &c);
        p
    }

    pub fn one(m: usize, n: usize) -> Self {
        SPoly::constant(QScalar::one(), m, n)
    }

    /// The variable with 0-based index `v` (`x_{v+1}` for `v < m`, else
    /// `y_{v-m+1}`).
    pub fn var(v: usize, m: usize, n: usize) -> Self {
        let mut e = alloc::vec![0; m + n];
        e[v] = 1;
        let mut p = SPoly::zero(m, n);
        p.add_term(Monomial(e), &QScalar::one());
        p
    }

    /// `x_i`, 1-based.
    pub fn x(i: usize, m: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= m);
        SPoly::var(i - 1, m, n)
    }

    /// `y_j`, 1-based.
    pub fn y(j: usize, m: usize, n: usize) -> Self {
        assert!(j >= 1 && j <= n);
        SPoly::var(m + j - 1, m, n)
    }

    pub fn from_terms(m: usize, n: usize, terms: impl IntoIterator<Item = (Vec<u16>, QScalar)>) -> Self {
        let mut p = SPoly::zero(m, n);
        for (e, c) in terms {
            assert_eq!(e.len(), m + n, "exponent vector has wrong length");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn nvars(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &QScalar)> {
        self.terms.iter().map(|(k, v)| (k.0.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u16]) -> QScalar {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// The constant value if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => {
                let (k, v) = self.terms.iter().next().unwrap();
                (k.degree() == 0).then(|| v.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, mono: Monomial, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    fn leading(&self) -> Option<(&Monomial, &QScalar)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), &-v);
        }
        out
    }

    pub fn neg(&self) -> SPoly {
        self.scale(&QScalar::from_int(-1))
    }

    pub fn scale(&self, c: &QScalar) -> SPoly {
        let mut out = SPoly::zero(self.m, self.n);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &SPoly) -> SPoly {
        let mut out = SPoly::zero(self.m, self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.0.iter().zip(&b.0).map(|(s, t)| s + t).collect();
                out.add_term(Monomial(e), &(x * y));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SPoly {
        let mut out = SPoly::one(self.m, self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &SPoly) -> Option<SPoly> {
        let (lm, lc) = d.leading()?;
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quo = SPoly::zero(self.m, self.n);
        while let Some((rm, rc)) = rem.leading() {
            if !lm.divides(rm) {
                return None;
            }
            let e: Vec<u16> = rm.0.iter().zip(&lm.0).map(|(a, b)| a - b).collect();
            let c = rc * &lc_inv;
            let t = SPoly::from_terms(self.m, self.n, [(e, c)]);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Some(quo)
    }

    /// Replace the variable with 0-based index `v` by the polynomial `p`.
    pub fn substitute(&self, v: usize, p: &SPoly) -> SPoly {
        let mut out = SPoly::zero(self.m, self.n);
        let mut powers: Vec<SPoly> = alloc::vec![SPoly::one(self.m, self.n)];
        for (k, c) in &self.terms {
            let e = k.0[v] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(p);
                powers.push(next);
            }
            let mut rest = k.0.clone();
            rest[v] = 0;
            let t = SPoly::from_terms(self.m, self.n, [(rest, c.clone())]);
            out = out.add(&t.mul(&powers[e]));
        }
        out
    }

    /// Swap two variables (0-based indices).
    pub fn swap_vars(&self, a: usize, b: usize) -> SPoly {
        let mut out = SPoly::zero(self.m, self.n);
        for (k, c) in &self.terms {
            let mut e = k.0.clone();
            e.swap(a, b);
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// True when no monomial involves variable `v`.
    pub fn is_free_of(&self, v: usize) -> bool {
        self.terms.keys().all(|k| k.0[v] == 0)
    }

    fn var_name(&self, v: usize) -> String {
        if v < self.m {
            alloc::format!("x{}", v + 1)
        } else {
            alloc::format!("y{}", v - self.m + 1)
        }
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut mono = String::new();
            for (v, &e) in k.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&self.var_name(v));
                if e > 1 {
                    let _ = write!(mono, "^{e}");
                }
            }
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

impl fmt::Debug for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SPoly({self})")
    }
}

/// `y_j -> -y_j` for every `j`.
pub fn substitute_neg_y(p: &SPoly) -> SPoly {
    let mut out = SPoly::zero(p.m, p.n);
    for (k, c) in &p.terms {
        let odd = k.0[p.m..].iter().map(|&e| u32::from(e)).sum::<u32>() % 2 == 1;
        out.add_term(k.clone(), &if odd { -c } else { c.clone() });
    }
    out
}

/// The supersymmetric Schur polynomial: sum over super semistandard
/// tableaux of shape `lambda`, entry `i <= m` contributing `x_i` and entry
/// `m + j` contributing `y_j`. Zero outside the `(m, n)`-hook.
pub fn super_schur(lambda: &Partition, m: usize, n: usize) -> SPoly {
    let mut out = SPoly::zero(m, n);
    for t in ssyt(lambda, m, n) {
        let e: Vec<u16> = t.weight(m + n).into_iter().map(|w| w as u16).collect();
        out.add_term(Monomial(e), &QScalar::one());
    }
    out
}

/// A fraction of two `SPoly`s.
#[derive(Clone)]
pub struct SRat {
    num: SPoly,
    den: SPoly,
}

impl SRat {
    pub fn new(num: SPoly, den: SPoly) -> Option<SRat> {
        if den.is_zero() {
            return None;
        }
        Some(SRat { num, den }.normalized())
    }

    pub fn from_poly(p: SPoly) -> SRat {
        let den = SPoly::one(p.m, p.n);
        SRat { num: p, den }
    }

    pub fn numer(&self) -> &SPoly {
        &self.num
    }

    pub fn denom(&self) -> &SPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<SPoly> {
        self.num.div_exact(&self.den)
    }

    fn normalized(self) -> SRat {
        let (m, n) = (self.num.m, self.num.n);
        if self.num.is_zero() {
            return SRat {
                num: self.num,
                den: SPoly::one(m, n),
            };
        }
        if let Some(p) = self.num.div_exact(&self.den) {
            return SRat::from_poly(p);
        }
        // make the denominator monic
        let lc = self.den.leading().unwrap().1.inv().unwrap();
        SRat {
            num: self.num.scale(&lc),
            den: self.den.scale(&lc),
        }
    }

    pub fn add(&self, other: &SRat) -> SRat {
        if self.den == other.den {
            return SRat {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            }
            .normalized();
        }
        SRat {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn neg(&self) -> SRat {
        SRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &SRat) -> SRat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &SRat) -> SRat {
        SRat {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn div(&self, other: &SRat) -> Option<SRat> {
        if other.is_zero() {
            return None;
        }
        Some(
            SRat {
                num: self.num.mul(&other.den),
                den: self.den.mul(&other.num),
            }
            .normalized(),
        )
    }
}

impl PartialEq for SRat {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for SRat {}

impl fmt::Display for SRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for SRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SRat({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveError {
    NotSquare,
    Singular,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NotSquare => f.write_str("system is not square"),
            SolveError::Singular => f.write_str("matrix is singular"),
        }
    }
}

/// Solve `A x = b` over the fraction field. Rows are cleared of
/// denominators, reduced by fraction-free (Bareiss) elimination, and the
/// triangular system is back-substituted.
pub fn solve_linear(a: &[Vec<SRat>], b: &[SRat]) -> Result<Vec<SRat>, SolveError> {
    let size = a.len();
    if b.len() != size || a.iter().any(|row| row.len() != size) {
        return Err(SolveError::NotSquare);
    }
    if size == 0 {
        return Ok(Vec::new());
    }
    let (m, n) = (b[0].num.m, b[0].num.n);
    // clear denominators row by row
    let mut rows: Vec<Vec<SPoly>> = Vec::with_capacity(size);
    for (row, rhs) in a.iter().zip(b) {
        let mut common = SPoly::one(m, n);
        for x in row.iter().chain([rhs]) {
            if common.div_exact(&x.den).is_none() {
                common = common.mul(&x.den);
            }
        }
        rows.push(
            row.iter()
                .chain([rhs])
                .map(|x| x.num.mul(&common.div_exact(&x.den).unwrap()))
                .collect(),
        );
    }
    let mut prev = SPoly::one(m, n);
    for k in 0..size {
        let p = (k..size).find(|&i| !rows[i][k].is_zero()).ok_or(SolveError::Singular)?;
        rows.swap(k, p);
        for i in k + 1..size {
            for j in k + 1..=size {
                let t = rows[k][k].mul(&rows[i][j]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            rows[i][k] = SPoly::zero(m, n);
        }
        prev = rows[k][k].clone();
    }
    let mut x: Vec<SRat> = alloc::vec![SRat::from_poly(SPoly::zero(m, n)); size];
    for k in (0..size).rev() {
        let mut acc = SRat::from_poly(rows[k][size].clone());
        for j in k + 1..size {
            acc = acc.sub(&SRat::from_poly(rows[k][j].clone()).mul(&x[j]));
        }
        x[k] = acc
            .div(&SRat::from_poly(rows[k][k].clone()))
            .ok_or(SolveError::Singular)?;
    }
    Ok(x)
}

/// Determinant of a square matrix of polynomials (fraction-free).
pub fn determinant(a: &[Vec<SPoly>], m: usize, n: usize) -> SPoly {
    let size = a.len();
    if size == 0 {
        return SPoly::one(m, n);
    }
    let mut rows = a.to_vec();
    let mut prev = SPoly::one(m, n);
    let mut sign = false;
    for k in 0..size {
        let Some(p) = (k..size).find(|&i| !rows[i][k].is_zero()) else {
            return SPoly::zero(m, n);
        };
        if p != k {
            rows.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = rows[k][k].mul(&rows[i][j]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = rows[k][k].clone();
    }
    if sign {
        prev.neg()
    } else {
        prev
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn schur_examples() {
        let (x, y) = (SPoly::x(1, 1, 1), SPoly::y(1, 1, 1));
        assert_eq!(super_schur(&p(&[1]), 1, 1), x.add(&y));
        assert!(super_schur(&p(&[2, 2]), 1, 1).is_zero());
        assert_eq!(super_schur(&p(&[2]), 1, 1), x.mul(&x).add(&x.mul(&y)));
        assert_eq!(super_schur(&p(&[2]), 1, 1).to_string(), "x1^2 + x1*y1");
    }

    #[test]
    fn neg_y_substitution() {
        let (x, y) = (SPoly::x(1, 1, 1), SPoly::y(1, 1, 1));
        assert_eq!(substitute_neg_y(&x.add(&y)), x.sub(&y));
        assert_eq!(substitute_neg_y(&x.mul(&y)), x.mul(&y).neg());
        assert_eq!(substitute_neg_y(&SPoly::one(1, 1)), SPoly::one(1, 1));
    }

    #[test]
    fn supersymmetry_and_cancellation() {
        let (m, n) = (2, 2);
        for r in 1..=4 {
            for lam in Partition::all(r) {
                let s = super_schur(&lam, m, n);
                assert_eq!(s.swap_vars(0, 1), s, "x-symmetry {lam}");
                assert_eq!(s.swap_vars(2, 3), s, "y-symmetry {lam}");
                // x_m = t, y_n = -t: the result no longer depends on t
                let c = s.substitute(m - 1, &SPoly::var(m + n - 1, m, n).neg());
                assert!(c.is_free_of(m + n - 1), "cancellation {lam}");
            }
        }
    }

    #[test]
    fn dual_jacobi_trudi() {
        let (m, n) = (2, 1);
        let e = |k: i64| -> SPoly {
            if k < 0 {
                SPoly::zero(m, n)
            } else {
                super_schur(&Partition::new(&vec![1; k as usize]), m, n)
            }
        };
        for r in 1..=4 {
            for lam in Partition::all(r) {
                let c = lam.conjugate();
                let l = c.len();
                let mat: Vec<Vec<SPoly>> = (0..l)
                    .map(|i| (0..l).map(|j| e(c.parts()[i] as i64 - i as i64 + j as i64)).collect())
                    .collect();
                assert_eq!(determinant(&mat, m, n), super_schur(&lam, m, n), "{lam}");
            }
        }
    }

    #[test]
    fn exact_division() {
        let (x, y) = (SPoly::x(1, 1, 1), SPoly::y(1, 1, 1));
        let a = x.add(&y);
        let b = x.sub(&y.scale(&QScalar::q_pow(1)));
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn solve_small_systems() {
        let (m, n) = (1, 1);
        let x = SRat::from_poly(SPoly::x(1, m, n));
        let y = SRat::from_poly(SPoly::y(1, m, n));
        let one = SRat::from_poly(SPoly::one(m, n));
        let zero = SRat::from_poly(SPoly::zero(m, n));
        let sol = solve_linear(&[vec![x.clone()]], core::slice::from_ref(&y)).unwrap();
        assert_eq!(sol[0], y.div(&x).unwrap());
        let id = vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]];
        assert_eq!(
            solve_linear(&id, &[x.clone(), y.clone()]).unwrap(),
            vec![x.clone(), y.clone()]
        );
        let sing = vec![vec![x.clone(), y.clone()], vec![x.clone(), y.clone()]];
        assert_eq!(
            solve_linear(&sing, &[one.clone(), one.clone()]),
            Err(SolveError::Singular)
        );
        // generic 2x2 against Cramer's rule
        let a = vec![vec![x.clone(), y.clone()], vec![one.clone(), x.clone()]];
        let sol = solve_linear(&a, &[one.clone(), y.clone()]).unwrap();
        let det = x.mul(&x).sub(&y);
        assert_eq!(sol[0], x.sub(&y.mul(&y)).div(&det).unwrap());
        assert_eq!(sol[1], x.mul(&y).sub(&one).div(&det).unwrap());
    }
}
