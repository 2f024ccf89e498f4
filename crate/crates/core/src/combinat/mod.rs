//! Partitions, tableaux and the classical symmetric-group combinatorics the
//! rest of the crate is indexed by.

mod characters;
mod kostka;
mod lr;
mod tableau;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

pub use characters::sn_character;
pub use kostka::{inverse_kostka, kostka_number};
pub use lr::lr_coefficient;
pub use tableau::{ssyt, theta_map, StandardTableau, Tableau};

use crate::qscalar::{qfact_base, QScalar};

/// Operand sizes disagree (e.g. `|mu| + |nu| != |lambda|`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeMismatch;

impl fmt::Display for SizeMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("partition sizes do not match")
    }
}

/// An integer partition, stored without trailing zeros. Indexing past the
/// last part returns zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics unless `parts` is weakly decreasing; zeros are dropped.
    pub fn new(parts: &[usize]) -> Self {
        Partition::try_new(parts).expect("parts must be weakly decreasing")
    }

    pub fn try_new(parts: &[usize]) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition {
            parts: parts.iter().copied().filter(|&p| p > 0).collect(),
        })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `lambda_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        let parts = (1..=w)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Cells as 0-based `(row, col)` pairs in reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// Hook length of the 0-based cell `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..].iter().filter(|&&p| p > col).count();
        arm + leg + 1
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn num_syt(&self) -> BigInt {
        let mut n: BigInt = (1..=self.size()).map(BigInt::from).product();
        for (i, j) in self.cells() {
            n /= self.hook(i, j);
        }
        n
    }

    /// Contents of the addable cells, i.e. `col - row` of each outer corner.
    pub fn addable_contents(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let here = self.part(i + 1);
            if i == 0 || self.part(i) > here {
                out.push(here as i64 - i as i64);
            }
        }
        out
    }

    pub fn is_hook(&self) -> bool {
        self.part(2) <= 1
    }

    /// All partitions of `r`, in reverse lexicographic order starting at `(r)`.
    pub fn all(r: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(r, r, &mut cur, &mut out);
        out
    }

    /// Sort arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(parts: &[usize]) -> Partition {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: v }
    }

    /// Dominance order `self >= other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl core::str::FromStr for Partition {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok.trim().parse().map_err(|_| alloc::format!("bad part {tok:?}"))?;
            parts.push(p);
        }
        Partition::try_new(&parts).ok_or_else(|| String::from("parts must be weakly decreasing"))
    }
}

/// `lambda_{m+1} <= n`, i.e. the partition fits in the (m, n)-hook.
pub fn in_hmn(lambda: &Partition, m: usize, n: usize) -> bool {
    lambda.part(m + 1) <= n
}

/// Parity of the basis index `i` (1-based) of `C^{m|n}`.
pub fn parity(i: usize, m: usize) -> bool {
    i > m
}

/// Multiplicities `(alpha_1, ..., alpha_N)` of a multiset over `[N]`.
pub fn multiplicities(index: &[usize], dim: usize) -> Vec<usize> {
    let mut a = vec![0; dim];
    for &i in index {
        a[i - 1] += 1;
    }
    a
}

/// `alpha(I) = prod alpha_i!` and `alpha_{q^2}(I) = prod (alpha_i)_{q_i^2}!`
/// where `q_i^2 = q^2` for even and `q^-2` for odd indices.
pub fn alpha_factors(index: &[usize], m: usize, n: usize) -> (BigInt, QScalar) {
    let mut plain = BigInt::one();
    let mut quantum = QScalar::one();
    for (k, &a) in multiplicities(index, m + n).iter().enumerate() {
        for j in 2..=a {
            plain *= j;
        }
        let e = if parity(k + 1, m) { -2 } else { 2 };
        quantum = &quantum * &qfact_base(a as u32, e);
    }
    (plain, quantum)
}

/// Non-decreasing multisets of size `r` over `[dim]`, lexicographic.
pub fn multisets(dim: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(lo: usize, dim: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in lo..=dim {
            cur.push(i);
            rec(i, dim, r, cur, out);
            cur.pop();
        }
    }
    rec(1, dim, r, &mut cur, &mut out);
    out
}

/// All words of length `r` over `[dim]`, lexicographic.
pub fn words(dim: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        let mut next = Vec::with_capacity(out.len() * dim);
        for w in &out {
            for i in 1..=dim {
                let mut v = w.clone();
                v.push(i);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Weak compositions of `r` into `parts` parts.
pub fn weak_compositions(r: usize, parts: usize) -> Vec<Vec<usize>> {
    multisets(parts, r)
        .into_iter()
        .map(|ms| multiplicities(&ms, parts))
        .collect()
}

/// The sorted multiset `(1^{mu_1}, 2^{mu_2}, ...)` of a weak composition.
pub fn composition_to_multiset(mu: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &a) in mu.iter().enumerate() {
        out.extend(core::iter::repeat_n(i + 1, a));
    }
    out
}

/// Distinct rearrangements of a multiset, lexicographic.
pub fn rearrangements(index: &[usize]) -> Vec<Vec<usize>> {
    let mut v = index.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    loop {
        let n = v.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
    out
}
