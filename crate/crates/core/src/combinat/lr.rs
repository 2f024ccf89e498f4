use alloc::vec;
use alloc::vec::Vec;

use super::{Partition, SizeMismatch};

/// Littlewood–Richardson coefficient `c^lambda_{mu nu}`: the number of
/// semistandard fillings of `lambda / mu` with content `nu` whose reverse
/// reading word is a lattice word.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64, SizeMismatch> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(SizeMismatch);
    }
    if (1..=lambda.len().max(mu.len())).any(|i| mu.part(i) > lambda.part(i)) {
        return Ok(0);
    }
    // Cells of the skew shape in reading order: rows top to bottom, each row
    // right to left.
    let mut cells = Vec::new();
    for i in 0..lambda.len() {
        for j in (mu.part(i + 1)..lambda.part(i + 1)).rev() {
            cells.push((i, j));
        }
    }
    let mut fill: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut counts = vec![0usize; nu.len() + 1];
    Ok(search(0, &cells, mu, nu, &mut fill, &mut counts))
}

fn search(
    k: usize,
    cells: &[(usize, usize)],
    mu: &Partition,
    nu: &Partition,
    fill: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (i, j) = cells[k];
    let mut total = 0;
    for e in 1..=nu.len() {
        if counts[e] >= nu.part(e) {
            continue;
        }
        if e > 1 && counts[e] + 1 > counts[e - 1] {
            continue;
        }
        // row weakly increasing: right neighbour already placed
        if j + 1 < fill[i].len() && fill[i][j + 1] < e {
            continue;
        }
        // column strictly increasing: cell above is either in mu or smaller
        if i > 0 && j >= mu.part(i) && fill[i - 1][j] >= e {
            continue;
        }
        fill[i][j] = e;
        counts[e] += 1;
        total += search(k + 1, cells, mu, nu, fill, counts);
        counts[e] -= 1;
        fill[i][j] = 0;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::ssyt;
    use alloc::collections::BTreeMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts)
    }

    #[test]
    fn spec_examples() {
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 1])), Ok(1));
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), Ok(1));
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[3, 2])), Err(SizeMismatch));
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[3, 1])), Ok(1));
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), Ok(2));
    }

    type Poly = BTreeMap<Vec<usize>, i64>;

    /// Monomial expansion of s_lambda in `nvars` commuting variables.
    fn schur_poly(lambda: &Partition, nvars: usize) -> Poly {
        let mut out = Poly::new();
        for t in ssyt(lambda, nvars, 0) {
            *out.entry(t.weight(nvars)).or_insert(0) += 1;
        }
        out
    }

    fn mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Expand s_mu * s_nu and peel off Schur functions by their leading
    /// (lexicographically largest) monomial.
    fn oracle(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, i64> {
        let nvars = mu.size() + nu.size();
        let mut f = mul(&schur_poly(mu, nvars), &schur_poly(nu, nvars));
        let mut out = BTreeMap::new();
        while let Some((lead, &c)) = f.iter().next_back() {
            let lam = Partition::new(lead);
            out.insert(lam.clone(), c);
            for (e, v) in schur_poly(&lam, nvars) {
                let slot = f.entry(e).or_insert(0);
                *slot -= c * v;
            }
            f.retain(|_, v| *v != 0);
        }
        out
    }

    #[test]
    fn agrees_with_polynomial_expansion() {
        for total in 2..=5 {
            for a in 1..total {
                for mu in Partition::all(a) {
                    for nu in Partition::all(total - a) {
                        let expansion = oracle(&mu, &nu);
                        for lam in Partition::all(total) {
                            let want = expansion.get(&lam).copied().unwrap_or(0);
                            let got = lr_coefficient(&mu, &nu, &lam).unwrap() as i64;
                            assert_eq!(got, want, "mu={mu} nu={nu} lambda={lam}");
                        }
                    }
                }
            }
        }
    }
}
