//! Generating series in the commutative subalgebra spanned by the
//! normalized immanant sums, and the identities they satisfy.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aqmat::{x_power, AqAlgebra, NCPoly};
use crate::combinat::{Partition, StandardTableau};
use crate::immanant::ImmanantEngine;
use crate::qscalar::QScalar;
use crate::report::Report;
use crate::symfun::{phi_specialize, SPoly};

mod ch11;
mod gj;
mod littlewood;
mod roots;

pub use ch11::{cayley_hamilton_21_residual, roots_11, verify_cayley_hamilton_11, Localized11, LocalizedAlgebra};
pub use gj::{goulden_jackson, hessenberg_check, verify_basis};
pub use littlewood::{verify_littlewood_product, verify_lmw};
pub use roots::{berezinian_roots, schur_at_roots, verify_berezinian_roots, verify_littlewood_three, BerezinianRoots};

/// A power series in `t` truncated after `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<NCPoly>,
}

impl Series {
    /// Coefficients of `t^0 .. t^order`; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<NCPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &NCPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[NCPoly] {
        &self.coeffs
    }

    /// `f(-t)`.
    pub fn neg_t(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        Series { coeffs }
    }

    /// `d/dt`, losing one order.
    pub fn derivative(&self) -> Series {
        let cfg = self.coeffs[0].cfg();
        let mut coeffs: Vec<NCPoly> = (1..self.coeffs.len())
            .map(|k| self.coeffs[k].scale(&QScalar::from_int(k as i64)))
            .collect();
        if coeffs.is_empty() {
            coeffs.push(NCPoly::zero(cfg));
        }
        Series { coeffs }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(NCPoly::neg).collect(),
        }
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Cauchy product, truncated at the smaller order. Factors keep their
    /// left/right position since coefficients need not commute.
    pub fn mul(&self, alg: &AqAlgebra, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| {
                let mut acc = NCPoly::zero(alg.cfg());
                for i in 0..=k {
                    acc = acc.add(&alg.mul(&self.coeffs[i], &other.coeffs[k - i]));
                }
                acc
            })
            .collect();
        Series { coeffs }
    }
}

/// `alpha_k`, `beta_k` and `gamma_k = str X^{[k]}` for `k <= kmax`.
/// Index 0 holds `alpha_0 = beta_0 = 1` and `gamma_0 = str 1 = m - n`.
#[derive(Clone, Debug)]
pub struct BKGenerators {
    pub alpha: Vec<NCPoly>,
    pub beta: Vec<NCPoly>,
    pub gamma: Vec<NCPoly>,
}

impl BKGenerators {
    pub fn kmax(&self) -> usize {
        self.alpha.len() - 1
    }

    /// `alpha_k`, zero for negative `k`.
    pub fn a(&self, k: i64) -> NCPoly {
        at(&self.alpha, k)
    }

    pub fn b(&self, k: i64) -> NCPoly {
        at(&self.beta, k)
    }

    /// `lambda(t) = sum t^k alpha_k`.
    pub fn lambda_series(&self) -> Series {
        Series::new(self.alpha.clone())
    }

    /// `sigma(t) = sum t^k beta_k`.
    pub fn sigma_series(&self) -> Series {
        Series::new(self.beta.clone())
    }

    /// `psi(t) = sum t^k gamma_{k+1}`.
    pub fn psi_series(&self) -> Series {
        Series::new(self.gamma[1..].to_vec())
    }

    /// Images under the specialization to supersymmetric polynomials.
    pub fn phi_alpha(&self) -> Vec<SPoly> {
        let cfg = self.alpha[0].cfg();
        self.alpha.iter().map(|a| phi_specialize(a, cfg.m, cfg.n)).collect()
    }
}

fn at(v: &[NCPoly], k: i64) -> NCPoly {
    let cfg = v[0].cfg();
    if k < 0 {
        return NCPoly::zero(cfg);
    }
    v.get(k as usize)
        .cloned()
        .unwrap_or_else(|| panic!("generator index {k} beyond the computed range"))
}

/// `alpha_k = str E^{(1^k)} X_1...X_k`, `beta_k = str E^{(k)} X_1...X_k` and
/// `gamma_k = str X^{[k]}` for `1 <= k <= kmax`.
pub fn alpha_beta_gamma(eng: &ImmanantEngine, kmax: usize) -> BKGenerators {
    assert!(kmax >= 1, "kmax must be at least 1");
    let cfg = eng.cfg();
    let alg = eng.algebra();
    let one = NCPoly::one(cfg);
    let mut alpha = alloc::vec![one.clone()];
    let mut beta = alloc::vec![one];
    let mut gamma = alloc::vec![NCPoly::constant(QScalar::from_int(cfg.m as i64 - cfg.n as i64), cfg)];
    for k in 1..=kmax {
        let col = StandardTableau::row_reading(&Partition::new(&alloc::vec![1; k]));
        let row = StandardTableau::row_reading(&Partition::new(&[k]));
        alpha.push(eng.supertrace_of_idempotent(&col));
        beta.push(eng.supertrace_of_idempotent(&row));
        gamma.push(x_power(alg, k as u32).supertrace());
    }
    BKGenerators { alpha, beta, gamma }
}

fn cfg_label(alg: &AqAlgebra) -> String {
    let cfg = alg.cfg();
    format!("({}|{})", cfg.m, cfg.n)
}

/// `lambda(-t) sigma(t) = 1` through `t^order`.
pub fn verify_macmahon(alg: &AqAlgebra, bk: &BKGenerators, order: usize) -> Report {
    let mut rep = Report::new("macmahon")
        .param("cfg", cfg_label(alg))
        .param("order", order);
    let prod = bk
        .lambda_series()
        .truncate(order)
        .neg_t()
        .mul(alg, &bk.sigma_series().truncate(order));
    for k in 0..=order {
        let want = if k == 0 {
            NCPoly::one(alg.cfg())
        } else {
            NCPoly::zero(alg.cfg())
        };
        rep.expect_eq(&format!("coefficient of t^{k}"), prod.coeff(k), &want);
    }
    rep
}

/// `d/dt lambda(-t) = -lambda(-t) psi(t)` and `d/dt sigma(t) = psi(t) sigma(t)`
/// through `t^order`, plus the low-order corollaries.
pub fn verify_newton(alg: &AqAlgebra, bk: &BKGenerators, order: usize) -> Report {
    let mut rep = Report::new("newton").param("cfg", cfg_label(alg)).param("order", order);
    let lam = bk.lambda_series().truncate(order + 1).neg_t();
    let sig = bk.sigma_series().truncate(order + 1);
    let psi = bk.psi_series().truncate(order);
    let lhs1 = lam.derivative();
    let rhs1 = lam.truncate(order).mul(alg, &psi).neg();
    let lhs2 = sig.derivative();
    let rhs2 = psi.mul(alg, &sig.truncate(order));
    for k in 0..=order {
        rep.expect_eq(&format!("elementary side, t^{k}"), lhs1.coeff(k), rhs1.coeff(k));
        rep.expect_eq(&format!("complete side, t^{k}"), lhs2.coeff(k), rhs2.coeff(k));
    }
    rep.expect_eq("gamma_1 = alpha_1", &bk.gamma[1], &bk.alpha[1]);
    if bk.kmax() >= 2 {
        let a1 = &bk.alpha[1];
        let want = alg.mul(a1, a1).sub(&bk.alpha[2].scale(&QScalar::from_int(2)));
        rep.expect_eq("gamma_2 = alpha_1^2 - 2 alpha_2", &bk.gamma[2], &want);
    }
    rep
}

/// Pairwise commutativity of the `alpha`s, the `beta`s and the `gamma`s.
pub fn verify_commutativity(alg: &AqAlgebra, bk: &BKGenerators) -> Report {
    let mut rep = Report::new("commutativity")
        .param("cfg", cfg_label(alg))
        .param("kmax", bk.kmax());
    for (name, v) in [("alpha", &bk.alpha), ("beta", &bk.beta), ("gamma", &bk.gamma)] {
        for i in 1..v.len() {
            for j in i + 1..v.len() {
                let (ab, ba) = (alg.mul(&v[i], &v[j]), alg.mul(&v[j], &v[i]));
                rep.expect_eq(&format!("{name}_{i} {name}_{j}"), &ab, &ba);
            }
        }
    }
    for i in 1..bk.alpha.len() {
        for j in 1..bk.beta.len() {
            let (ab, ba) = (alg.mul(&bk.alpha[i], &bk.beta[j]), alg.mul(&bk.beta[j], &bk.alpha[i]));
            rep.expect_eq(&format!("alpha_{i} beta_{j}"), &ab, &ba);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinear::SuperSpaceCfg;
    use crate::symfun::super_schur;

    #[test]
    fn low_generators() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        let bk = alpha_beta_gamma(&eng, 2);
        let alg = eng.algebra();
        let str_x = alg.gen(1, 1).sub(&alg.gen(2, 2));
        assert_eq!(bk.alpha[1], str_x);
        assert_eq!(bk.beta[1], str_x);
        assert_eq!(bk.gamma[1], str_x);
        assert_eq!(bk.alpha[2], eng.immanant_sum(&Partition::new(&[1, 1])));
        let phi = bk.phi_alpha();
        // the specialization sends x22 to -y1, so alpha_k lands on S_{(1^k)}(x, y)
        for k in 1..=2 {
            assert_eq!(phi[k], super_schur(&Partition::new(&alloc::vec![1; k]), 1, 1));
        }
    }

    #[test]
    fn macmahon_and_newton_small() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        let bk = alpha_beta_gamma(&eng, 3);
        let alg = eng.algebra();
        assert!(verify_macmahon(alg, &bk, 0).passed());
        let r = verify_macmahon(alg, &bk, 3);
        assert!(r.passed(), "{r}");
        let r = verify_newton(alg, &bk, 2);
        assert!(r.passed(), "{r}");
        let r = verify_commutativity(alg, &bk);
        assert!(r.passed(), "{r}");
    }
}
