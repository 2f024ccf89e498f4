use alloc::format;
use alloc::vec::Vec;

use super::{cfg_label, BKGenerators};
use crate::combinat::Partition;
use crate::hecke::Perm;
use crate::immanant::ImmanantEngine;
use crate::report::Report;
use crate::symfun::{
    determinant, phi_specialize, solve_linear, substitute_neg_y, super_schur, SPoly, SRat, SolveError,
};

/// Elementary symmetric data of the roots of `Gamma(t)`, in the
/// specialized fraction field: `e[k] = e_k(omega)`, `ebar[k] = e_k(varpi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BerezinianRoots {
    pub e: Vec<SRat>,
    pub ebar: Vec<SRat>,
}

fn alpha_rat(alpha: &[SPoly], k: i64, m: usize, n: usize) -> SRat {
    if k < 0 {
        return SRat::from_poly(SPoly::zero(m, n));
    }
    SRat::from_poly(alpha.get(k as usize).cloned().expect("alpha beyond the computed range"))
}

/// Solve `sum_{j=0}^n alpha_{s-j} ebar_j = 0` for `s = m+1..m+n`, then read
/// off `e_s = sum_j alpha_{s-j} ebar_j` for `s <= m`.
pub fn berezinian_roots(bk: &BKGenerators) -> Result<BerezinianRoots, SolveError> {
    let cfg = bk.alpha[0].cfg();
    let (m, n) = (cfg.m, cfg.n);
    assert!(bk.kmax() >= m + n, "need alpha_k up to m + n");
    let alpha = bk.phi_alpha();
    let a = |k: i64| alpha_rat(&alpha, k, m, n);
    let one = SRat::from_poly(SPoly::one(m, n));
    let mut ebar = alloc::vec![one.clone()];
    if n > 0 {
        let rows: Vec<Vec<SRat>> = (m + 1..=m + n)
            .map(|s| (1..=n).map(|j| a(s as i64 - j as i64)).collect())
            .collect();
        let rhs: Vec<SRat> = (m + 1..=m + n).map(|s| a(s as i64).neg()).collect();
        ebar.extend(solve_linear(&rows, &rhs)?);
    }
    let mut e = alloc::vec![one];
    for s in 1..=m {
        e.push(convolve(&a, &ebar, s));
    }
    Ok(BerezinianRoots { e, ebar })
}

/// `sum_{j=0}^n alpha_{s-j} ebar_j`.
fn convolve(a: &impl Fn(i64) -> SRat, ebar: &[SRat], s: usize) -> SRat {
    let mut acc = a(s as i64);
    for (j, eb) in ebar.iter().enumerate().skip(1) {
        acc = acc.add(&a(s as i64 - j as i64).mul(eb));
    }
    acc
}

/// Solves the root system, checks every coefficient of
/// `Gamma(t) prod (t - varpi_j) = prod (t - omega_i)` up to `t^{m - kmax}`, and
/// that the extended `(n+1) x (n+1)` Hankel determinant vanishes.
pub fn verify_berezinian_roots(eng: &ImmanantEngine, bk: &BKGenerators) -> (Report, Option<BerezinianRoots>) {
    let alg = eng.algebra();
    let cfg = alg.cfg();
    let (m, n) = (cfg.m, cfg.n);
    let mut rep = Report::new("berezinian-roots")
        .param("cfg", cfg_label(alg))
        .param("kmax", bk.kmax());
    let roots = match berezinian_roots(bk) {
        Ok(r) => r,
        Err(err) => {
            rep.check(false, || format!("root system: {err}"));
            return (rep, None);
        }
    };
    let alpha = bk.phi_alpha();
    let a = |k: i64| alpha_rat(&alpha, k, m, n);
    let zero = SRat::from_poly(SPoly::zero(m, n));
    for s in 1..=bk.kmax() {
        let lhs = convolve(&a, &roots.ebar, s);
        let rhs = if s <= m { roots.e[s].clone() } else { zero.clone() };
        rep.expect_eq(&format!("coefficient of t^{}", m as i64 - s as i64), &lhs, &rhs);
    }
    // omega_i -> x_i and varpi_j -> -y_j after specializing
    let xs: Vec<SPoly> = (1..=m).map(|i| SPoly::x(i, m, n)).collect();
    let ys: Vec<SPoly> = (1..=n).map(|j| SPoly::y(j, m, n).neg()).collect();
    for k in 1..=m {
        rep.expect_eq(
            &format!("e_{k}(omega)"),
            &roots.e[k],
            &SRat::from_poly(elementary(&xs, k, m, n)),
        );
    }
    for k in 1..=n {
        rep.expect_eq(
            &format!("e_{k}(varpi)"),
            &roots.ebar[k],
            &SRat::from_poly(elementary(&ys, k, m, n)),
        );
    }
    if bk.kmax() > m + n {
        let ext: Vec<Vec<SPoly>> = (1..=n + 1)
            .map(|i| {
                (1..=n + 1)
                    .map(|j| alpha_at(&alpha, m as i64 + 1 - i as i64 + j as i64, m, n))
                    .collect()
            })
            .collect();
        let det = determinant(&ext, m, n);
        rep.check(det.is_zero(), || format!("extended determinant = {det}"));
        let shape = Partition::new(&alloc::vec![n + 1; m + 1]);
        if shape.size() <= 4 {
            let sum = phi_specialize(&eng.immanant_sum(&shape), m, n);
            rep.expect_eq(
                &format!("extended determinant = specialized sum for {shape}"),
                &det,
                &sum,
            );
        }
    } else {
        rep.note("extended determinant skipped: needs alpha_{m+n+1}");
    }
    (rep, Some(roots))
}

fn alpha_at(alpha: &[SPoly], k: i64, m: usize, n: usize) -> SPoly {
    if k < 0 {
        SPoly::zero(m, n)
    } else {
        alpha[k as usize].clone()
    }
}

fn elementary(vars: &[SPoly], k: usize, m: usize, n: usize) -> SPoly {
    // e_k by the recursion over the last variable
    let mut e = alloc::vec![SPoly::zero(m, n); k + 1];
    e[0] = SPoly::one(m, n);
    for v in vars {
        for j in (1..=k).rev() {
            e[j] = e[j].add(&e[j - 1].mul(v));
        }
    }
    e[k].clone()
}

fn rat_determinant(a: &[Vec<SRat>], m: usize, n: usize) -> SRat {
    let size = a.len();
    let mut out = SRat::from_poly(SPoly::zero(m, n));
    for sigma in Perm::all(size) {
        let mut term = SRat::from_poly(SPoly::one(m, n));
        for i in 1..=size {
            term = term.mul(&a[i - 1][sigma.apply(i) - 1]);
        }
        out = if sigma.length() % 2 == 1 {
            out.sub(&term)
        } else {
            out.add(&term)
        };
    }
    out
}

/// `S_lambda(omega, -varpi)` from the root data: dual Jacobi–Trudi in
/// `E_k = sum_i e_i(omega) (-1)^{k-i} h_{k-i}(varpi)`.
pub fn schur_at_roots(roots: &BerezinianRoots, lambda: &Partition, m: usize, n: usize) -> SRat {
    let r = lambda.size();
    let zero = SRat::from_poly(SPoly::zero(m, n));
    let mut h = alloc::vec![SRat::from_poly(SPoly::one(m, n))];
    for j in 1..=r {
        let mut acc = zero.clone();
        for i in 1..=j.min(n) {
            let t = roots.ebar[i].mul(&h[j - i]);
            acc = if i % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        h.push(acc);
    }
    let big_e = |k: i64| -> SRat {
        if k < 0 {
            return zero.clone();
        }
        let k = k as usize;
        let mut acc = zero.clone();
        for i in 0..=k.min(m) {
            let t = roots.e[i].mul(&h[k - i]);
            acc = if (k - i) % 2 == 1 { acc.sub(&t) } else { acc.add(&t) };
        }
        acc
    };
    let conj = lambda.conjugate();
    let size = lambda.part(1);
    let mat: Vec<Vec<SRat>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| big_e(conj.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    rat_determinant(&mat, m, n)
}

/// `Phi(sum_I Imm(X_I) / alpha_{q^2}(I)) = S_lambda(omega, -varpi)`, with the
/// right side built only from the root data, and also compared with the
/// tableau-sum super Schur polynomial in the specialized variables.
pub fn verify_littlewood_three(eng: &ImmanantEngine, roots: &BerezinianRoots, lambda: &Partition) -> Report {
    let alg = eng.algebra();
    let cfg = alg.cfg();
    let (m, n) = (cfg.m, cfg.n);
    let mut rep = Report::new("littlewood-iii")
        .param("cfg", cfg_label(alg))
        .param("lambda", lambda);
    let lhs = phi_specialize(&eng.immanant_sum(lambda), m, n);
    let at_roots = schur_at_roots(roots, lambda, m, n);
    rep.expect_eq(
        "specialized sum = S_lambda(omega, -varpi)",
        &SRat::from_poly(lhs.clone()),
        &at_roots,
    );
    let schur = super_schur(lambda, m, n);
    rep.expect_eq("specialized sum = tableau super Schur", &lhs, &schur);
    if n > 0 && !schur.is_zero() && lhs != substitute_neg_y(&schur) {
        rep.note("specialized sum differs from S_lambda(x, -y): the specialization already sends varpi to -y");
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::super::alpha_beta_gamma;
    use super::*;
    use crate::superlinear::SuperSpaceCfg;

    #[test]
    fn one_one_roots() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        let bk = alpha_beta_gamma(&eng, 3);
        let roots = berezinian_roots(&bk).unwrap();
        let alpha = bk.phi_alpha();
        let (a1, a2) = (SRat::from_poly(alpha[1].clone()), SRat::from_poly(alpha[2].clone()));
        let ratio = a2.div(&a1).unwrap();
        assert_eq!(roots.ebar[1], ratio.neg());
        assert_eq!(roots.e[1], a1.sub(&ratio));
        let (rep, _) = verify_berezinian_roots(&eng, &bk);
        assert!(rep.passed(), "{rep}");
        for r in 1..=3 {
            for l in Partition::all(r) {
                let rep = verify_littlewood_three(&eng, &roots, &l);
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn even_only_root() {
        let cfg = SuperSpaceCfg::new(1, 0);
        let eng = ImmanantEngine::new(cfg);
        let bk = alpha_beta_gamma(&eng, 2);
        let roots = berezinian_roots(&bk).unwrap();
        assert_eq!(roots.e[1], SRat::from_poly(bk.phi_alpha()[1].clone()));
        assert_eq!(roots.ebar.len(), 1);
    }
}
