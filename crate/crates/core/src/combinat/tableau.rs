use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::Partition;

/// A filling of a Young diagram by positive integers, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(&self.rows.iter().map(Vec::len).collect::<Vec<_>>())
    }

    /// `mu_i` = number of entries equal to `i`, for `i` in `1..=dim`.
    pub fn weight(&self, dim: usize) -> Vec<usize> {
        let mut w = vec![0; dim];
        for row in &self.rows {
            for &e in row {
                w[e - 1] += 1;
            }
        }
        w
    }

    /// Semistandard supertableau conditions for `C^{m|n}`: weak increase
    /// along rows and columns, even entries (`<= m`) strictly increasing
    /// down columns, odd entries strictly increasing along rows.
    pub fn is_super_semistandard(&self, m: usize) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if j > 0 {
                    let left = row[j - 1];
                    if left > e || (left == e && e > m) {
                        return false;
                    }
                }
                if i > 0 {
                    let up = self.rows[i - 1][j];
                    if up > e || (up == e && e <= m) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<usize>]) -> fmt::Result {
    f.write_str("[")?;
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str("[")?;
        for (j, e) in row.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")?;
    }
    f.write_str("]")
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>, String> {
    let s = s.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| String::from("expected [[...],...]"))?;
    let mut rows = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('[').ok_or_else(|| String::from("expected '['"))?;
        let end = body.find(']').ok_or_else(|| String::from("unclosed row"))?;
        let row: Result<Vec<usize>, _> = body[..end]
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>())
            .collect();
        rows.push(row.map_err(|_| String::from("bad entry"))?);
        rest = body[end + 1..].trim_start().trim_start_matches(',').trim_start();
    }
    Ok(rows)
}

impl core::str::FromStr for Tableau {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let rows = parse_rows(s)?;
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(String::from("rows must weakly shorten"));
        }
        Ok(Tableau { rows })
    }
}

/// A standard Young tableau on `1..=r`, with cached positions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let r: usize = rows.iter().map(Vec::len).sum();
        let mut pos = vec![(usize::MAX, usize::MAX); r];
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() || (i > 0 && rows[i - 1].len() < row.len()) {
                return None;
            }
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e > r || pos[e - 1].0 != usize::MAX {
                    return None;
                }
                pos[e - 1] = (i, j);
                if j > 0 && row[j - 1] > e {
                    return None;
                }
                if i > 0 && rows[i - 1][j] > e {
                    return None;
                }
            }
        }
        Some(StandardTableau { rows, pos })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.pos.len()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(&self.rows.iter().map(Vec::len).collect::<Vec<_>>())
    }

    /// 0-based `(row, col)` of entry `k` (1-based).
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.pos[k - 1]
    }

    /// Content `col - row` of the cell holding `k`.
    pub fn content(&self, k: usize) -> i64 {
        let (i, j) = self.pos[k - 1];
        j as i64 - i as i64
    }

    /// `d_i = c_{i+1} - c_i`.
    pub fn axial_distance(&self, i: usize) -> i64 {
        self.content(i + 1) - self.content(i)
    }

    /// The tableau with `i` and `i+1` exchanged, if still standard.
    pub fn swap(&self, i: usize) -> Option<StandardTableau> {
        let (a, b) = (self.pos[i - 1], self.pos[i]);
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.0][a.1] = i + 1;
        rows[b.0][b.1] = i;
        StandardTableau::from_rows(rows)
    }

    /// Remove the cell holding `r`, returning the smaller tableau and the
    /// content of the removed cell.
    pub fn remove_max(&self) -> (StandardTableau, i64) {
        let r = self.size();
        let c = self.content(r);
        let (i, _) = self.pos[r - 1];
        let mut rows = self.rows.clone();
        rows[i].pop();
        if rows[i].is_empty() {
            rows.pop();
        }
        let mut pos = self.pos.clone();
        pos.pop();
        (StandardTableau { rows, pos }, c)
    }

    /// Fill rows top to bottom, left to right.
    pub fn row_reading(shape: &Partition) -> StandardTableau {
        let mut k = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&p| {
                (0..p)
                    .map(|_| {
                        k += 1;
                        k
                    })
                    .collect()
            })
            .collect();
        StandardTableau::from_rows(rows).unwrap()
    }

    /// Fill columns left to right, top to bottom.
    pub fn column_reading(shape: &Partition) -> StandardTableau {
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        let mut k = 0;
        for (j, &h) in conj.parts().iter().enumerate() {
            for row in rows.iter_mut().take(h) {
                k += 1;
                row[j] = k;
            }
        }
        StandardTableau::from_rows(rows).unwrap()
    }

    /// All standard tableaux of the given shape, sorted by row words.
    pub fn all(shape: &Partition) -> Vec<StandardTableau> {
        let r = shape.size();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|_| Vec::new()).collect();
        fn rec(k: usize, r: usize, shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
            if k > r {
                out.push(StandardTableau::from_rows(rows.clone()).unwrap());
                return;
            }
            for i in 0..shape.len() {
                let len = rows[i].len();
                if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                    rows[i].push(k);
                    rec(k + 1, r, shape, rows, out);
                    rows[i].pop();
                }
            }
        }
        rec(1, r, shape.parts(), &mut rows, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl core::str::FromStr for StandardTableau {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        StandardTableau::from_rows(parse_rows(s)?).ok_or_else(|| String::from("not a standard tableau"))
    }
}

/// Semistandard supertableaux of shape `lambda` over `[m+n]`.
pub fn ssyt(lambda: &Partition, m: usize, n: usize) -> Vec<Tableau> {
    let dim = m + n;
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        m: usize,
        dim: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        for e in 1..=dim {
            if j > 0 {
                let left = rows[i][j - 1];
                if left > e || (left == e && e > m) {
                    continue;
                }
            }
            if i > 0 {
                let up = rows[i - 1][j];
                if up > e || (up == e && e <= m) {
                    continue;
                }
            }
            rows[i][j] = e;
            rec(k + 1, cells, m, dim, rows, out);
        }
        rows[i][j] = 0;
    }
    rec(0, &cells, m, dim, &mut rows, &mut out);
    out
}

/// Replace each entry `k` of `t` by the `k`-th element of the sorted
/// multiset of `mu`. Returns the relabelled tableau and whether it is a
/// semistandard supertableau for `C^{m|n}`.
pub fn theta_map(t: &StandardTableau, mu: &[usize], m: usize) -> (Tableau, bool) {
    let index = super::composition_to_multiset(mu);
    assert_eq!(index.len(), t.size(), "composition size must match the tableau");
    let rows = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&k| index[k - 1]).collect())
        .collect();
    let tab = Tableau { rows };
    let ok = tab.is_super_semistandard(m);
    (tab, ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    #[test]
    fn syt_counts_match_hook_formula() {
        for r in 0..=6 {
            for lam in Partition::all(r) {
                let n = StandardTableau::all(&lam).len();
                assert_eq!(BigInt::from(n), lam.num_syt(), "{lam}");
            }
        }
    }

    #[test]
    fn reading_tableaux() {
        let lam = Partition::new(&[3, 1]);
        assert_eq!(StandardTableau::row_reading(&lam).to_string(), "[[1,2,3],[4]]");
        assert_eq!(StandardTableau::column_reading(&lam).to_string(), "[[1,3,4],[2]]");
    }

    #[test]
    fn swaps_and_contents() {
        let t: StandardTableau = "[[1,2],[3]]".parse().unwrap();
        assert_eq!(t.content(3), -1);
        assert_eq!(t.axial_distance(2), -2);
        assert!(t.swap(1).is_none());
        assert_eq!(t.swap(2).unwrap().to_string(), "[[1,3],[2]]");
        let (s, c) = t.remove_max();
        assert_eq!((s.to_string(), c), ("[[1,2]]".to_string(), -1));
    }

    #[test]
    fn theta_examples() {
        let row = StandardTableau::row_reading(&Partition::new(&[2]));
        let col = StandardTableau::row_reading(&Partition::new(&[1, 1]));
        let (t, ok) = theta_map(&row, &[2, 0], 1);
        assert_eq!((t.to_string(), ok), ("[[1,1]]".to_string(), true));
        let (t, ok) = theta_map(&row, &[0, 2], 1);
        assert_eq!((t.to_string(), ok), ("[[2,2]]".to_string(), false));
        let (t, ok) = theta_map(&col, &[0, 2], 1);
        assert_eq!((t.to_string(), ok), ("[[2],[2]]".to_string(), true));
    }

    #[test]
    fn hook_shapes_are_exactly_the_11_supported_shapes() {
        for r in 1..=6 {
            for lam in Partition::all(r) {
                let nonempty = !ssyt(&lam, 1, 1).is_empty();
                assert_eq!(nonempty, lam.is_hook(), "{lam}");
                assert_eq!(nonempty, super::super::in_hmn(&lam, 1, 1));
            }
        }
    }

    #[test]
    fn ssyt_of_two_by_one() {
        let all = ssyt(&Partition::new(&[2]), 1, 1);
        let s: Vec<_> = all.iter().map(|t| t.to_string()).collect();
        assert_eq!(s, ["[[1,1]]", "[[1,2]]"]);
    }

    #[test]
    fn tableau_round_trip() {
        let t: Tableau = "[[1,1,2],[2]]".parse().unwrap();
        assert_eq!(t.to_string(), "[[1,1,2],[2]]");
        assert_eq!(t.weight(2), [2, 2]);
    }
}
