use alloc::vec::Vec;
use core::fmt;

/// A permutation of `{1, ..., r}` in one-line notation, stored 0-based.
/// Composition is `(s * t)(k) = s(t(k))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    w: Vec<u8>,
}

impl Perm {
    pub fn identity(r: usize) -> Self {
        Perm {
            w: (0..r as u8).collect(),
        }
    }

    /// From 1-based one-line notation; `None` unless it is a permutation.
    pub fn from_one_line(images: &[usize]) -> Option<Self> {
        let r = images.len();
        let mut seen = alloc::vec![false; r];
        for &v in images {
            if v == 0 || v > r || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
        }
        Some(Perm {
            w: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.w.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.w.len()
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.w[k - 1] as usize + 1
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn simple(i: usize, r: usize) -> Self {
        let mut p = Perm::identity(r);
        p.w.swap(i - 1, i);
        p
    }

    /// The transposition `(j, k)`.
    pub fn transposition(j: usize, k: usize, r: usize) -> Self {
        let mut p = Perm::identity(r);
        p.w.swap(j - 1, k - 1);
        p
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            w: other.w.iter().map(|&k| self.w[k as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut w = alloc::vec![0u8; self.w.len()];
        for (i, &v) in self.w.iter().enumerate() {
            w[v as usize] = i as u8;
        }
        Perm { w }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let n = self.w.len();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.w[i] > self.w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `s_i * self`: swap the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Perm {
        let mut w = self.w.clone();
        for v in w.iter_mut() {
            if *v as usize == i - 1 {
                *v = i as u8;
            } else if *v as usize == i {
                *v = (i - 1) as u8;
            }
        }
        Perm { w }
    }

    /// `self * s_i`: swap the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Perm {
        let mut w = self.w.clone();
        w.swap(i - 1, i);
        Perm { w }
    }

    /// True when `l(s_i * self) > l(self)`, i.e. `i` appears before `i+1`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let a = self.w.iter().position(|&v| v as usize == i - 1).unwrap();
        let b = self.w.iter().position(|&v| v as usize == i).unwrap();
        a < b
    }

    /// True when `l(self * s_i) > l(self)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.w[i - 1] < self.w[i]
    }

    /// A reduced word `[i_1, ..., i_l]` with `self = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut p = self.clone();
        'outer: loop {
            for i in 1..p.w.len() {
                if !p.right_ascent(i) {
                    word.push(i);
                    p = p.right_mul_simple(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// All permutations of degree `r` in lexicographic order.
    pub fn all(r: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..r as u8).collect();
        out.push(Perm { w: cur.clone() });
        loop {
            let n = cur.len();
            if n < 2 {
                break;
            }
            let mut i = n - 1;
            while i > 0 && cur[i - 1] >= cur[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = n - 1;
            while cur[j] <= cur[i - 1] {
                j -= 1;
            }
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Perm { w: cur.clone() });
        }
        out
    }

    /// Shift into degree `r` acting on the points `offset+1 ..= offset+degree`.
    pub fn embed(&self, offset: usize, r: usize) -> Perm {
        let mut w: Vec<u8> = (0..r as u8).collect();
        for (i, &v) in self.w.iter().enumerate() {
            w[offset + i] = (offset as u8) + v;
        }
        Perm { w }
    }

    /// Cycle type as a sorted list of cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.w.len();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = self.w[k] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.w.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", *v as usize + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_words_multiply_back() {
        for r in 1..=5 {
            for p in Perm::all(r) {
                let word = p.reduced_word();
                assert_eq!(word.len(), p.length());
                let mut acc = Perm::identity(r);
                for &i in &word {
                    acc = acc.compose(&Perm::simple(i, r));
                }
                assert_eq!(acc, p);
            }
        }
    }

    #[test]
    fn ascents_match_lengths() {
        for p in Perm::all(4) {
            for i in 1..4 {
                assert_eq!(p.left_ascent(i), p.left_mul_simple(i).length() > p.length());
                assert_eq!(p.right_ascent(i), p.right_mul_simple(i).length() > p.length());
                assert_eq!(p.left_mul_simple(i), Perm::simple(i, 4).compose(&p));
            }
        }
    }

    #[test]
    fn inverse_and_cycles() {
        let p = Perm::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Perm::identity(3));
        assert_eq!(p.cycle_type(), [3]);
        assert_eq!(Perm::all(4).len(), 24);
        assert!(Perm::from_one_line(&[1, 1]).is_none());
    }
}
