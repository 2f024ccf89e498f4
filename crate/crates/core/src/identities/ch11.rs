use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use super::BKGenerators;
use crate::aqmat::{star_product, x_power, AqAlgebra, AqMatrix, NCPoly};
use crate::qscalar::QScalar;
use crate::report::Report;
use crate::superlinear::SuperSpaceCfg;

/// An element `sum_k a_k D^{-k}` of `A_q(Mat_{1|1})[D^{-1}]`, where
/// `D = x11 - x22`. The representation is not unique; compare with
/// [`LocalizedAlgebra::equal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localized11 {
    terms: BTreeMap<u32, NCPoly>,
}

impl Localized11 {
    pub fn from_poly(p: NCPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(0, p);
        }
        Localized11 { terms }
    }

    pub fn zero() -> Self {
        Localized11 { terms: BTreeMap::new() }
    }

    /// `a D^{-k}`.
    pub fn with_inverse_power(a: NCPoly, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !a.is_zero() {
            terms.insert(k, a);
        }
        Localized11 { terms }
    }

    pub fn terms(&self) -> &BTreeMap<u32, NCPoly> {
        &self.terms
    }

    fn add_term(&mut self, k: u32, a: &NCPoly) {
        let next = match self.terms.get(&k) {
            Some(b) => b.add(a),
            None => a.clone(),
        };
        if next.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, next);
        }
    }

    pub fn add(&self, other: &Localized11) -> Localized11 {
        let mut out = self.clone();
        for (k, a) in &other.terms {
            out.add_term(*k, a);
        }
        out
    }

    pub fn neg(&self) -> Localized11 {
        Localized11 {
            terms: self.terms.iter().map(|(k, a)| (*k, a.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Localized11) -> Localized11 {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QScalar) -> Localized11 {
        let mut out = Localized11::zero();
        for (k, a) in &self.terms {
            out.add_term(*k, &a.scale(c));
        }
        out
    }
}

impl fmt::Display for Localized11 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})*(x11 - x22)^-1")?,
                _ => write!(f, "({a})*(x11 - x22)^-{k}")?,
            }
        }
        Ok(())
    }
}

/// Rule `D^{-1} g = c g D^{-1} + D^{-1} rho D^{-1}` for a generator `g`,
/// read off from `g D = c D g + rho`.
#[derive(Clone, Debug)]
struct PushRule {
    c: QScalar,
    rho: NCPoly,
}

/// Arithmetic in the localization at `D = x11 - x22`. Every product
/// `D^{-1} a` is rewritten into right fractions; since `(x12 x21)^2 = 0`
/// the corrections terminate.
pub struct LocalizedAlgebra<'a> {
    alg: &'a AqAlgebra,
    d: NCPoly,
    rules: BTreeMap<(usize, usize), PushRule>,
    memo: RefCell<BTreeMap<Vec<(usize, usize)>, Localized11>>,
}

fn has_both_off_diagonal(pairs: &[(usize, usize)]) -> bool {
    pairs.contains(&(1, 2)) && pairs.contains(&(2, 1))
}

impl<'a> LocalizedAlgebra<'a> {
    pub fn new(alg: &'a AqAlgebra) -> Self {
        let cfg = alg.cfg();
        assert_eq!((cfg.m, cfg.n), (1, 1), "the localization is built for A_q(Mat_{{1|1}})");
        let d = alg.gen(1, 1).sub(&alg.gen(2, 2));
        let mut rules = BTreeMap::new();
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let g = alg.gen(i, j);
            let dg = alg.mul(&d, &g);
            let gd = alg.mul(&g, &d);
            // match on a monomial outside the ideal generated by x12 x21
            let (pairs, c_dg) = dg
                .pair_terms()
                .find(|(p, _)| !has_both_off_diagonal(p))
                .map(|(p, c)| (p, c.clone()))
                .expect("D g has a term outside the nilpotent ideal");
            let c = &gd.coeff_of(&pairs) / &c_dg;
            let rho = gd.sub(&dg.scale(&c));
            assert!(
                rho.pair_terms().all(|(p, _)| has_both_off_diagonal(&p)),
                "g D - c D g must lie in the ideal of x12 x21"
            );
            rules.insert((i, j), PushRule { c, rho });
        }
        LocalizedAlgebra {
            alg,
            d,
            rules,
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn d(&self) -> &NCPoly {
        &self.d
    }

    pub fn poly(&self, p: &NCPoly) -> Localized11 {
        Localized11::from_poly(p.clone())
    }

    /// `a * y` for a polynomial `a`.
    fn poly_times(&self, a: &NCPoly, y: &Localized11) -> Localized11 {
        let mut out = Localized11::zero();
        for (k, b) in &y.terms {
            out.add_term(*k, &self.alg.mul(a, b));
        }
        out
    }

    /// `D^{-1} g_1 ... g_s` as right fractions.
    fn push_word(&self, pairs: &[(usize, usize)]) -> Localized11 {
        if let Some(v) = self.memo.borrow().get(pairs) {
            return v.clone();
        }
        let out = match pairs.split_first() {
            None => Localized11::with_inverse_power(NCPoly::one(self.alg.cfg()), 1),
            Some((&g, rest)) => {
                let rule = &self.rules[&g];
                let tail = self.push_word(rest);
                let gen = self.alg.gen(g.0, g.1);
                let main = self.poly_times(&gen, &tail).scale(&rule.c);
                // D^{-1} rho D^{-1} rest = D^{-1} (rho * (D^{-1} rest))
                let mut corr = Localized11::zero();
                if !rule.rho.is_zero() {
                    corr = self.inv_left(&self.poly_times(&rule.rho, &tail));
                }
                main.add(&corr)
            }
        };
        self.memo.borrow_mut().insert(pairs.to_vec(), out.clone());
        out
    }

    /// `D^{-1} y`.
    pub fn inv_left(&self, y: &Localized11) -> Localized11 {
        let mut out = Localized11::zero();
        for (k, a) in &y.terms {
            for (pairs, c) in a.pair_terms() {
                let pushed = self.push_word(&pairs);
                for (j, b) in &pushed.terms {
                    out.add_term(k + j, &b.scale(c));
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &Localized11, y: &Localized11) -> Localized11 {
        let mut out = Localized11::zero();
        for (k, a) in &x.terms {
            for (l, b) in &y.terms {
                let mut moved = Localized11::from_poly(b.clone());
                for _ in 0..*k {
                    moved = self.inv_left(&moved);
                }
                for (j, c) in &moved.terms {
                    out.add_term(j + l, &self.alg.mul(a, c));
                }
            }
        }
        out
    }

    /// `x D^K` for the largest exponent `K` present, a polynomial.
    pub fn clear(&self, x: &Localized11) -> NCPoly {
        let top = x.terms.keys().copied().max().unwrap_or(0);
        let mut out = NCPoly::zero(self.alg.cfg());
        for (k, a) in &x.terms {
            out = out.add(&self.alg.mul(a, &self.alg.pow(&self.d, top - k)));
        }
        out
    }

    /// Equality in the localization: `x - y` vanishes after clearing.
    pub fn equal(&self, x: &Localized11, y: &Localized11) -> bool {
        self.clear(&x.sub(y)).is_zero()
    }

    /// `D^{-1} D` and `D D^{-1}` both reduce to one.
    pub fn inverse_checks(&self) -> bool {
        let inv = Localized11::with_inverse_power(NCPoly::one(self.alg.cfg()), 1);
        let d = self.poly(&self.d);
        let one = self.poly(&NCPoly::one(self.alg.cfg()));
        self.equal(&self.mul(&inv, &d), &one) && self.equal(&self.mul(&d, &inv), &one)
    }
}

type LocMatrix = Vec<Vec<Localized11>>;

/// `(Y*Z)_{ij} = sum_k q^{sgn(k-i)} y_ik z_kj`. The parity signs of the
/// defining formula cancel for supermatrices of even total degree.
fn star(loc: &LocalizedAlgebra<'_>, y: &LocMatrix, z: &LocMatrix) -> LocMatrix {
    (0..2)
        .map(|i| {
            (0..2)
                .map(|j| {
                    let mut acc = Localized11::zero();
                    for k in 0..2 {
                        let mut w = QScalar::q_pow((k as i64 - i as i64).signum());
                        // index 1 is the odd one
                        if (k != i) && (k != j) {
                            w = -w;
                        }
                        acc = acc.add(&loc.mul(&y[i][k], &z[k][j]).scale(&w));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn from_aq(m: &AqMatrix) -> LocMatrix {
    (1..=2)
        .map(|i| (1..=2).map(|j| Localized11::from_poly(m.get(i, j).clone())).collect())
        .collect()
}

fn scalar_matrix(c: &Localized11) -> LocMatrix {
    (0..2)
        .map(|i| {
            (0..2)
                .map(|j| if i == j { c.clone() } else { Localized11::zero() })
                .collect()
        })
        .collect()
}

fn mat_sub(a: &LocMatrix, b: &LocMatrix) -> LocMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.sub(y)).collect())
        .collect()
}

fn mat_add(a: &LocMatrix, b: &LocMatrix) -> LocMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(y)).collect())
        .collect()
}

fn left_scale(loc: &LocalizedAlgebra<'_>, c: &Localized11, m: &LocMatrix) -> LocMatrix {
    m.iter()
        .map(|row| row.iter().map(|x| loc.mul(c, x)).collect())
        .collect()
}

/// The roots of the `(1|1)` characteristic function in the localization:
/// `omega_1 = alpha_1 - alpha_1^{-1} alpha_2` and `varpi_1 = -alpha_1^{-1} alpha_2`.
pub fn roots_11(loc: &LocalizedAlgebra<'_>, bk: &BKGenerators) -> (Localized11, Localized11) {
    let ratio = loc.inv_left(&loc.poly(&bk.alpha[2]));
    let omega = loc.poly(&bk.alpha[1]).sub(&ratio);
    (omega, ratio.neg())
}

/// `(X - omega_1 I) * (X - varpi_1 I) = X^{[2]} - omega_1 X - X * varpi_1 I + omega_1 varpi_1 = 0`
/// in `A_q(Mat_{1|1})[(x11 - x22)^{-1}]`, together with the closed forms
/// of the two roots.
pub fn verify_cayley_hamilton_11(bk: &BKGenerators, alg: &AqAlgebra) -> Report {
    let mut rep = Report::new("cayley-hamilton").param("cfg", "(1|1)");
    let cfg = alg.cfg();
    assert_eq!(cfg, SuperSpaceCfg::new(1, 1), "only the (1|1) case is implemented");
    let loc = LocalizedAlgebra::new(alg);
    rep.check(loc.inverse_checks(), || {
        String::from("D^{-1} is not a two-sided inverse")
    });
    rep.expect_eq("alpha_1 = x11 - x22", &bk.alpha[1], loc.d());
    let (omega, varpi) = roots_11(&loc, bk);
    let n = alg.monomial(&[(1, 2), (2, 1)]).scale(&QScalar::q_pow(1));
    let tail = Localized11::with_inverse_power(n, 1);
    let omega_closed = loc.poly(&alg.gen(1, 1)).sub(&tail);
    let varpi_closed = loc.poly(&alg.gen(2, 2)).sub(&tail);
    rep.check(loc.equal(&omega, &omega_closed), || {
        format!("omega_1 = {omega}, expected {omega_closed}")
    });
    rep.check(loc.equal(&varpi, &varpi_closed), || {
        format!("varpi_1 = {varpi}, expected {varpi_closed}")
    });
    rep.note(format!("omega_1 = {omega_closed}"));
    rep.note(format!("varpi_1 = {varpi_closed}"));

    let x = from_aq(&AqMatrix::x(cfg));
    let x2 = from_aq(&x_power(alg, 2));
    rep.check(
        from_aq(&star_product(alg, &AqMatrix::x(cfg), &AqMatrix::x(cfg))) == star(&loc, &x, &x),
        || String::from("localized star product disagrees with the polynomial one"),
    );
    let expanded = mat_add(
        &mat_sub(
            &mat_sub(&x2, &left_scale(&loc, &omega, &x)),
            &star(&loc, &x, &scalar_matrix(&varpi)),
        ),
        &scalar_matrix(&loc.mul(&omega, &varpi)),
    );
    let factored = star(
        &loc,
        &mat_sub(&x, &scalar_matrix(&omega)),
        &mat_sub(&x, &scalar_matrix(&varpi)),
    );
    for i in 0..2 {
        for j in 0..2 {
            let e = &expanded[i][j];
            rep.check(loc.clear(e).is_zero(), || {
                format!("expanded form, entry ({}, {}) = {e}", i + 1, j + 1)
            });
            let f = &factored[i][j];
            rep.check(loc.equal(f, e), || {
                format!("factored form, entry ({}, {}) = {f}", i + 1, j + 1)
            });
        }
    }
    rep
}

/// The candidate identity
/// `sum_{i,j} (-1)^{i+j} e_i(omega) X^{[3-i-j]} * e_j(varpi) I` for `(2|1)`,
/// multiplied by `alpha_2` on both sides so that every term is polynomial
/// (`varpi` enters through `ebar_1 = -alpha_3 alpha_2^{-1}`). Returns the
/// residual matrix; nothing is asserted.
pub fn cayley_hamilton_21_residual(bk: &BKGenerators, alg: &AqAlgebra) -> AqMatrix {
    let cfg = alg.cfg();
    assert_eq!(cfg, SuperSpaceCfg::new(2, 1), "residual is defined for (2|1)");
    let (a1, a2, a3) = (&bk.alpha[1], &bk.alpha[2], &bk.alpha[3]);
    // alpha_2 e_i(omega) and e_j(varpi) alpha_2, using that the alphas commute
    let left = [
        a2.clone(),
        alg.mul(a2, a1).sub(a3),
        alg.mul(a2, a2).sub(&alg.mul(a1, a3)),
    ];
    let right = [a2.clone(), a3.neg()];
    let mut total = AqMatrix::from_fn(cfg, |_, _| NCPoly::zero(cfg));
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            let power = x_power(alg, (3 - i - j) as u32);
            let scalar = AqMatrix::from_fn(cfg, |a, b| if a == b { r.clone() } else { NCPoly::zero(cfg) });
            let prod = star_product(alg, &power, &scalar);
            let sign = (i + j) % 2 == 1;
            total = AqMatrix::from_fn(cfg, |a, b| {
                let t = alg.mul(l, prod.get(a, b));
                if sign {
                    total.get(a, b).sub(&t)
                } else {
                    total.get(a, b).add(&t)
                }
            });
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::super::alpha_beta_gamma;
    use super::*;
    use crate::immanant::ImmanantEngine;

    #[test]
    fn inverse_commutes_as_expected() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let alg = AqAlgebra::new(cfg);
        let loc = LocalizedAlgebra::new(&alg);
        assert!(loc.inverse_checks());
        // x12 D = q D x12, so D^{-1} x12 = q x12 D^{-1}
        let got = loc.inv_left(&loc.poly(&alg.gen(1, 2)));
        let want = Localized11::with_inverse_power(alg.gen(1, 2).scale(&QScalar::q_pow(1)), 1);
        assert!(loc.equal(&got, &want));
    }

    #[test]
    fn two_root_identity() {
        let eng = ImmanantEngine::new(SuperSpaceCfg::new(1, 1));
        let bk = alpha_beta_gamma(&eng, 2);
        let rep = verify_cayley_hamilton_11(&bk, eng.algebra());
        assert!(rep.passed(), "{rep}");
    }
}
