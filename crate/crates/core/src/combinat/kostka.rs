use alloc::vec::Vec;

use super::{Partition, SizeMismatch};

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
pub fn kostka_number(lambda: &Partition, mu: &[usize]) -> u64 {
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    // Fill letter by letter: each letter adds a horizontal strip.
    fn rec(cur: &[usize], target: &Partition, mu: &[usize]) -> u64 {
        let Some((&k, rest)) = mu.split_first() else {
            return u64::from(cur.iter().zip(target.parts()).all(|(a, b)| a == b));
        };
        let mut total = 0;
        let mut next = cur.to_vec();
        strips(cur, target, k, 0, &mut next, &mut |shape| {
            total += rec(shape, target, rest)
        });
        total
    }
    // Horizontal strips of size `k` added to `cur` inside `target`.
    fn strips(
        cur: &[usize],
        target: &Partition,
        k: usize,
        row: usize,
        next: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if k == 0 {
            f(next);
            return;
        }
        if row >= cur.len() {
            return;
        }
        let cap_target = target.part(row + 1) - cur[row];
        // a horizontal strip may not extend past the row above's old length
        let cap_strip = if row == 0 { usize::MAX } else { cur[row - 1] - cur[row] };
        let cap = cap_target.min(cap_strip).min(k);
        for add in (0..=cap).rev() {
            next[row] = cur[row] + add;
            strips(cur, target, k - add, row + 1, next, f);
        }
        next[row] = cur[row];
    }
    let start = alloc::vec![0; lambda.len()];
    rec(&start, lambda, mu)
}

/// Coefficient of `h_mu` in the expansion of the Schur function `s_lambda`
/// in complete homogeneous functions (an entry of the inverse Kostka
/// matrix), from the Jacobi–Trudi determinant `s_lambda = det(h_{lambda_i - i + j})`.
pub fn inverse_kostka(lambda: &Partition, mu: &Partition) -> Result<i64, SizeMismatch> {
    if lambda.size() != mu.size() {
        return Err(SizeMismatch);
    }
    let l = lambda.len();
    let mut total = 0;
    let mut perm: Vec<usize> = (0..l).collect();
    let mut sign = 1i64;
    // Heap's algorithm with sign tracking.
    let mut c = alloc::vec![0usize; l];
    let mut visit = |perm: &[usize], sign: i64| {
        let mut parts = Vec::with_capacity(l);
        for (i, &j) in perm.iter().enumerate() {
            let v = lambda.parts()[i] as i64 - i as i64 + j as i64;
            if v < 0 {
                return;
            }
            parts.push(v as usize);
        }
        if Partition::from_unsorted(&parts) == *mu {
            total += sign;
        }
    };
    visit(&perm, sign);
    let mut i = 0;
    while i < l {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn spec_examples() {
        assert_eq!(inverse_kostka(&p(&[2]), &p(&[2])), Ok(1));
        assert_eq!(inverse_kostka(&p(&[1, 1]), &p(&[2])), Ok(-1));
        assert_eq!(inverse_kostka(&p(&[2]), &p(&[1, 1])), Ok(0));
        assert_eq!(inverse_kostka(&p(&[2]), &p(&[1])), Err(SizeMismatch));
    }

    #[test]
    fn kostka_numbers() {
        assert_eq!(kostka_number(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka_number(&p(&[3, 2]), &[2, 2, 1]), 2);
        assert_eq!(kostka_number(&p(&[2, 2]), &[3, 1]), 0);
        assert_eq!(kostka_number(&p(&[3, 1]), &[1, 2, 1]), 2);
    }

    /// Invert the Kostka matrix K[lambda][mu] by back substitution (it is
    /// unitriangular in dominance order) and compare: the coefficient of
    /// h_mu in s_lambda is (K^{-1})[mu][lambda].
    #[test]
    fn matches_inverted_kostka_matrix() {
        for r in 1..=5 {
            let parts = Partition::all(r); // reverse lex refines dominance
            let n = parts.len();
            let k: Vec<Vec<i64>> = parts
                .iter()
                .map(|l| parts.iter().map(|m| kostka_number(l, m.parts()) as i64).collect())
                .collect();
            // Solve K * Kinv = I with K upper unitriangular.
            let mut inv = alloc::vec![alloc::vec![0i64; n]; n];
            for col in 0..n {
                for row in (0..n).rev() {
                    let mut v = i64::from(row == col);
                    for t in row + 1..n {
                        v -= k[row][t] * inv[t][col];
                    }
                    assert_eq!(k[row][row], 1);
                    inv[row][col] = v;
                }
            }
            for (a, lam) in parts.iter().enumerate() {
                for (b, mu) in parts.iter().enumerate() {
                    assert_eq!(inverse_kostka(lam, mu).unwrap(), inv[b][a], "lambda={lam} mu={mu}");
                }
            }
            // K * Kinv = I
            for a in 0..n {
                for b in 0..n {
                    let s: i64 = (0..n).map(|t| k[a][t] * inv[t][b]).sum();
                    assert_eq!(s, i64::from(a == b));
                }
            }
        }
    }
}
