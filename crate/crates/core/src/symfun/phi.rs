use alloc::vec::Vec;

use super::{Monomial, SPoly};
use crate::aqmat::NCPoly;

/// The homomorphism sending off-diagonal generators to 0, `x_ii -> x_i`
/// for `i <= m` and `x_{m+j,m+j} -> -y_j`.
pub fn phi_specialize(p: &NCPoly, m: usize, n: usize) -> SPoly {
    let cfg = p.cfg();
    assert_eq!((cfg.m, cfg.n), (m, n), "configuration mismatch");
    let mut out = SPoly::zero(m, n);
    'words: for (pairs, c) in p.pair_terms() {
        let mut e: Vec<u16> = alloc::vec![0; m + n];
        let mut neg = false;
        for (i, j) in pairs {
            if i != j {
                continue 'words;
            }
            e[i - 1] += 1;
            if i > m {
                neg = !neg;
            }
        }
        out.add_term(Monomial(e), &if neg { -c } else { c.clone() });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aqmat::AqAlgebra;
    use crate::superlinear::SuperSpaceCfg;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn examples() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let alg = AqAlgebra::new(cfg);
        let (x, y) = (SPoly::x(1, 1, 1), SPoly::y(1, 1, 1));
        let d = alg.gen(1, 1).sub(&alg.gen(2, 2));
        assert_eq!(phi_specialize(&d, 1, 1), x.add(&y));
        assert!(phi_specialize(&alg.monomial(&[(1, 2), (2, 1)]), 1, 1).is_zero());
        assert_eq!(phi_specialize(&alg.monomial(&[(1, 1), (2, 2)]), 1, 1), x.mul(&y).neg());
    }

    #[test]
    fn is_multiplicative() {
        for (m, n) in [(1, 1), (2, 1)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let alg = AqAlgebra::new(cfg);
            let d = cfg.dim();
            let mut rng = ChaCha8Rng::seed_from_u64(3);
            for _ in 0..30 {
                let mut rand_poly = || {
                    let mut p = crate::aqmat::NCPoly::zero(cfg);
                    for _ in 0..3 {
                        let len = rng.gen_range(0..=3);
                        let pairs: Vec<_> = (0..len).map(|_| (rng.gen_range(1..=d), rng.gen_range(1..=d))).collect();
                        let c = crate::qscalar::QScalar::from_int(rng.gen_range(-3..=3));
                        p = p.add(&alg.monomial(&pairs).scale(&c));
                    }
                    p
                };
                let (a, b) = (rand_poly(), rand_poly());
                let lhs = phi_specialize(&alg.mul(&a, &b), m, n);
                let rhs = phi_specialize(&a, m, n).mul(&phi_specialize(&b, m, n));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
