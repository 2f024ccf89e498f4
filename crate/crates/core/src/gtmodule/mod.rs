//! Covariant modules of `U_q(gl_{m|n})` in the Gelfand-Tsetlin basis, and
//! their realisation inside tensor space through Hecke idempotents.

mod action;
mod schur_weyl;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combinat::{in_hmn, ssyt, Partition, Tableau};
use crate::qscalar::QScalar;

pub use action::{adjudicate_brackets, gt_action, relation_report, Bracket, GtModule};
pub use schur_weyl::{
    kostant_supertrace_check, schur_weyl_basis, schur_weyl_check, schur_weyl_completeness, SchurWeylVector,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GtError {
    /// The partition does not fit in the `(m, n)`-hook.
    NotInHook,
    /// `m = 0` has no even band to anchor the patterns.
    NoEvenPart,
    /// A coefficient had a vanishing denominator.
    Singular { gen: String, pattern: String },
    /// The multi-index is not a weakly increasing word over `[m+n]`.
    BadIndex,
}

impl fmt::Display for GtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GtError::NotInHook => write!(f, "partition is not in the (m,n)-hook"),
            GtError::NoEvenPart => write!(f, "covariant modules need m >= 1"),
            GtError::Singular { gen, pattern } => write!(f, "{gen} has a zero denominator on {pattern}"),
            GtError::BadIndex => write!(f, "index must be a weakly increasing word over [m+n]"),
        }
    }
}

/// Highest weight `(lambda_1, ..., lambda_m | max(0, lambda'_1 - m), ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovariantWeight {
    pub m: usize,
    pub n: usize,
    pub parts: Vec<i64>,
}

pub fn covariant_weight(lambda: &Partition, m: usize, n: usize) -> Result<CovariantWeight, GtError> {
    if !in_hmn(lambda, m, n) {
        return Err(GtError::NotInHook);
    }
    let conj = lambda.conjugate();
    let mut parts: Vec<i64> = (1..=m).map(|i| lambda.part(i) as i64).collect();
    parts.extend((1..=n).map(|j| conj.part(j).saturating_sub(m) as i64));
    Ok(CovariantWeight { m, n, parts })
}

impl fmt::Display for CovariantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k == self.m {
                write!(f, " | ")?;
            } else if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        if self.m == self.parts.len() {
            write!(f, " |")?;
        }
        write!(f, ")")
    }
}

/// Triangular array `(lambda_{ki})`, `1 <= i <= k <= m+n`; `rows[k-1]` is row `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Option<Self> {
        rows.iter()
            .enumerate()
            .all(|(k, r)| r.len() == k + 1)
            .then_some(GtPattern { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// `lambda_{ki}`, 1-based.
    pub fn get(&self, k: usize, i: usize) -> i64 {
        self.rows[k - 1][i - 1]
    }

    fn shifted(&self, k: usize, i: usize, by: i64) -> GtPattern {
        let mut p = self.clone();
        p.rows[k - 1][i - 1] += by;
        p
    }

    /// `theta_{ki} = lambda_{k+1,i} - lambda_{ki}`.
    pub fn theta(&self, k: usize, i: usize) -> i64 {
        self.get(k + 1, i) - self.get(k, i)
    }

    /// `l_{ki}`: `lambda_{ki} - i + 1` on the even columns, `-lambda_{ki} + i - 2m` on the odd ones.
    pub fn l(&self, k: usize, i: usize, m: usize) -> i64 {
        if i <= m {
            self.get(k, i) - i as i64 + 1
        } else {
            -self.get(k, i) + i as i64 - 2 * m as i64
        }
    }

    /// Row-sum differences, i.e. the `q^{eps_k}` exponents.
    pub fn weight(&self) -> Vec<i64> {
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        (0..sums.len())
            .map(|k| sums[k] - if k == 0 { 0 } else { sums[k - 1] })
            .collect()
    }

    /// The pattern conditions below the top row.
    pub fn is_valid(&self, m: usize, n: usize) -> bool {
        let big = m + n;
        if self.height() != big || m == 0 {
            return false;
        }
        if self.rows.iter().flatten().any(|&v| v < 0) {
            return false;
        }
        for p in m + 1..=big {
            for i in 1..=m {
                if !(0..=1).contains(&self.theta(p - 1, i)) {
                    return false;
                }
            }
            let odd_positive = (m + 1..=p).filter(|&i| self.get(p, i) > 0).count() as i64;
            if self.get(p, m) < odd_positive {
                return false;
            }
        }
        if n > 0 && self.get(m + 1, m) == 0 && self.theta(m, m) != 0 {
            return false;
        }
        for p in m + 1..big {
            for i in 1..m {
                if self.get(p, i) < self.get(p, i + 1) {
                    return false;
                }
            }
        }
        let interlaces =
            |i: usize, j: usize| self.get(i, j) >= self.get(i - 1, j) && self.get(i - 1, j) >= self.get(i, j + 1);
        for i in 2..=m {
            if !(1..i).all(|j| interlaces(i, j)) {
                return false;
            }
        }
        for i in m + 2..=big {
            if !(m + 1..i).all(|j| interlaces(i, j)) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, row) in self.rows.iter().enumerate().rev() {
            if k + 1 < self.rows.len() {
                write!(f, "; ")?;
            }
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

/// All patterns with top row `top`, sorted.
pub fn enumerate_patterns(top: &CovariantWeight) -> Vec<GtPattern> {
    let (m, n) = (top.m, top.n);
    if m == 0 {
        return Vec::new();
    }
    let big = m + n;
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = vec![Vec::new(); big];
    rows[big - 1] = top.parts.clone();
    fn below(upper: &[i64], len: usize, m: usize) -> Vec<Vec<i64>> {
        // candidate ranges column by column, then their product
        let ranges: Vec<(i64, i64)> = (0..len)
            .map(|c| {
                if upper.len() > m && c < m {
                    ((upper[c] - 1).max(0), upper[c])
                } else {
                    (upper[c + 1].max(0), upper[c])
                }
            })
            .collect();
        let mut acc: Vec<Vec<i64>> = vec![Vec::new()];
        for (lo, hi) in ranges {
            let mut next = Vec::new();
            for a in &acc {
                for v in lo..=hi {
                    let mut b = a.clone();
                    b.push(v);
                    next.push(b);
                }
            }
            acc = next;
        }
        acc
    }
    fn rec(k: usize, m: usize, n: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
        if k == 0 {
            let p = GtPattern { rows: rows.clone() };
            if p.is_valid(m, n) {
                out.push(p);
            }
            return;
        }
        for cand in below(&rows[k], k, m) {
            rows[k - 1] = cand;
            rec(k - 1, m, n, rows, out);
        }
    }
    rec(big - 1, m, n, &mut rows, &mut out);
    out.sort();
    out
}

/// Patterns of the covariant module attached to `lambda`; empty outside the hook.
pub fn patterns_for_shape(lambda: &Partition, m: usize, n: usize) -> Vec<GtPattern> {
    match covariant_weight(lambda, m, n) {
        Ok(w) => enumerate_patterns(&w),
        Err(_) => Vec::new(),
    }
}

/// Branching reading of a semistandard supertableau: row `k` is the
/// covariant weight of the subtableau of entries `<= k`.
pub fn pattern_of_tableau(t: &Tableau, m: usize, n: usize) -> GtPattern {
    let rows = (1..=m + n)
        .map(|k| {
            let sub: Vec<usize> = t
                .rows()
                .iter()
                .map(|r| r.iter().filter(|&&e| e <= k).count())
                .filter(|&c| c > 0)
                .collect();
            let nu = Partition::new(&sub);
            if k <= m {
                (1..=k).map(|i| nu.part(i) as i64).collect()
            } else {
                covariant_weight(&nu, m, k - m).expect("subtableau fits the hook").parts
            }
        })
        .collect();
    GtPattern { rows }
}

/// `|SSYT(lambda)|` patterns, matched against the tableau side.
pub fn ssyt_bijection(lambda: &Partition, m: usize, n: usize) -> BTreeMap<GtPattern, Tableau> {
    ssyt(lambda, m, n)
        .into_iter()
        .map(|t| (pattern_of_tableau(&t, m, n), t))
        .collect()
}

/// Finite combination of basis symbols `zeta_Lambda`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GtVector {
    terms: BTreeMap<GtPattern, QScalar>,
}

impl GtVector {
    pub fn zero() -> Self {
        GtVector::default()
    }

    pub fn basis(p: GtPattern) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, QScalar::one());
        GtVector { terms }
    }

    pub fn terms(&self) -> &BTreeMap<GtPattern, QScalar> {
        &self.terms
    }

    pub fn get(&self, p: &GtPattern) -> QScalar {
        self.terms.get(p).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: GtPattern, c: &QScalar) {
        let v = &self.get(&p) + c;
        if v.is_zero() {
            self.terms.remove(&p);
        } else {
            self.terms.insert(p, v);
        }
    }

    pub fn add(&self, other: &GtVector) -> GtVector {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> GtVector {
        let mut out = GtVector::zero();
        for (p, v) in &self.terms {
            out.add_term(p.clone(), &(v * c));
        }
        out
    }

    pub fn sub(&self, other: &GtVector) -> GtVector {
        self.add(&other.scale(&-QScalar::one()))
    }
}

impl fmt::Display for GtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) z{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    #[test]
    fn covariant_weights() {
        let w = covariant_weight(&Partition::new(&[2, 1]), 1, 1).unwrap();
        assert_eq!(w.parts, vec![2, 1]);
        let w = covariant_weight(&Partition::new(&[1, 1, 1]), 1, 1).unwrap();
        assert_eq!(w.parts, vec![1, 2]);
        let w = covariant_weight(&Partition::new(&[1]), 3, 2).unwrap();
        assert_eq!(w.parts, vec![1, 0, 0, 0, 0]);
        assert_eq!(
            covariant_weight(&Partition::new(&[2, 2]), 1, 1),
            Err(GtError::NotInHook)
        );
    }

    #[test]
    fn small_pattern_counts() {
        assert_eq!(patterns_for_shape(&Partition::new(&[1]), 1, 1).len(), 2);
        assert_eq!(patterns_for_shape(&Partition::new(&[2, 2]), 1, 1).len(), 0);
        let two = patterns_for_shape(&Partition::new(&[2]), 1, 1);
        let bottoms: Vec<i64> = two.iter().map(|p| p.get(1, 1)).collect();
        assert_eq!(bottoms, vec![1, 2]);
    }

    #[test]
    fn counts_and_weights_match_tableaux() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 0)] {
            for r in 1..=4 {
                for lam in Partition::all(r) {
                    let pats = patterns_for_shape(&lam, m, n);
                    let tabs = ssyt(&lam, m, n);
                    assert_eq!(pats.len(), tabs.len(), "{lam} ({m}|{n})");
                    let mut a: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
                    for p in &pats {
                        *a.entry(p.weight()).or_default() += 1;
                    }
                    let mut b: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
                    for t in &tabs {
                        *b.entry(t.weight(m + n).iter().map(|&x| x as i64).collect())
                            .or_default() += 1;
                    }
                    assert_eq!(a, b, "{lam} ({m}|{n})");
                }
            }
        }
    }

    #[test]
    fn branching_reading_is_a_bijection() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            for r in 1..=4 {
                for lam in Partition::all(r) {
                    let map = ssyt_bijection(&lam, m, n);
                    let pats = patterns_for_shape(&lam, m, n);
                    assert_eq!(map.len(), pats.len());
                    for (p, t) in &map {
                        assert!(p.is_valid(m, n), "{t:?} -> {p}");
                        let w: Vec<i64> = t.weight(m + n).iter().map(|&x| x as i64).collect();
                        assert_eq!(p.weight(), w);
                    }
                }
            }
        }
    }
}
