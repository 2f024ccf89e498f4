use alloc::format;
use alloc::vec::Vec;

use super::{cfg_label, BKGenerators};
use crate::aqmat::{AqAlgebra, NCPoly};
use crate::combinat::{in_hmn, inverse_kostka, sn_character, Partition, StandardTableau};
use crate::hecke::Perm;
use crate::immanant::ImmanantEngine;
use crate::linalg;
use crate::qscalar::QScalar;
use crate::report::Report;
use crate::symfun::{determinant, phi_specialize, SPoly};

/// Leibniz expansion of a determinant over `A_q`, multiplying each term's
/// factors in row order.
fn nc_determinant(alg: &AqAlgebra, a: &[Vec<NCPoly>]) -> NCPoly {
    let size = a.len();
    let mut out = NCPoly::one(alg.cfg());
    if size == 0 {
        return out;
    }
    out = NCPoly::zero(alg.cfg());
    for sigma in Perm::all(size) {
        let mut term = NCPoly::one(alg.cfg());
        for i in 1..=size {
            term = alg.mul(&term, &a[i - 1][sigma.apply(i) - 1]);
        }
        out = if sigma.length() % 2 == 1 {
            out.sub(&term)
        } else {
            out.add(&term)
        };
    }
    out
}

/// `(g_{shape_i - i + j})`, square of size `shape.len()`.
fn jt_matrix(shape: &Partition, size: usize, g: impl Fn(i64) -> NCPoly) -> Vec<Vec<NCPoly>> {
    (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| g(shape.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect()
}

/// `sum_mu K^{-1}_{shape, mu} g_{mu_1} g_{mu_2} ...`.
fn kostka_expansion(alg: &AqAlgebra, shape: &Partition, g: impl Fn(i64) -> NCPoly) -> NCPoly {
    let mut out = NCPoly::zero(alg.cfg());
    for mu in Partition::all(shape.size()) {
        let c = inverse_kostka(shape, &mu).expect("sizes agree");
        if c == 0 {
            continue;
        }
        let mut term = NCPoly::one(alg.cfg());
        for &p in mu.parts() {
            term = alg.mul(&term, &g(p as i64));
        }
        out = out.add(&term.scale(&QScalar::from_int(c)));
    }
    out
}

/// `det(A) = det(B) = str(E_T X_1...X_r) = sum_I Imm(X_I) / alpha_{q^2}(I)`,
/// with `A = (alpha_{lambda^T_i - i + j})`, `B = (beta_{lambda_i - i + j})`.
/// Determinants are expanded in `A_q` and, separately, after specializing.
pub fn goulden_jackson(eng: &ImmanantEngine, bk: &BKGenerators, lambda: &Partition) -> Report {
    let alg = eng.algebra();
    let cfg = alg.cfg();
    let mut rep = Report::new("goulden-jackson")
        .param("cfg", cfg_label(alg))
        .param("lambda", lambda);
    let conj = lambda.conjugate();
    let a = jt_matrix(&conj, lambda.part(1), |k| bk.a(k));
    let b = jt_matrix(lambda, conj.part(1), |k| bk.b(k));
    let det_a = nc_determinant(alg, &a);
    let det_b = nc_determinant(alg, &b);
    let sum = eng.immanant_sum(lambda);
    let trace = eng.supertrace_of_idempotent(&StandardTableau::row_reading(lambda));
    rep.expect_eq("det(A) = sum of immanants", &det_a, &sum);
    rep.expect_eq("det(B) = sum of immanants", &det_b, &sum);
    rep.expect_eq("supertrace = sum of immanants", &trace, &sum);
    rep.expect_eq(
        "det(A) by inverse Kostka",
        &kostka_expansion(alg, &conj, |k| bk.a(k)),
        &det_a,
    );
    rep.expect_eq(
        "det(B) by inverse Kostka",
        &kostka_expansion(alg, lambda, |k| bk.b(k)),
        &det_b,
    );
    let phi = |p: &NCPoly| phi_specialize(p, cfg.m, cfg.n);
    let phi_mat =
        |mat: &[Vec<NCPoly>]| -> Vec<Vec<SPoly>> { mat.iter().map(|row| row.iter().map(phi).collect()).collect() };
    let phi_sum = phi(&sum);
    rep.expect_eq(
        "det of specialized A",
        &determinant(&phi_mat(&a), cfg.m, cfg.n),
        &phi_sum,
    );
    rep.expect_eq(
        "det of specialized B",
        &determinant(&phi_mat(&b), cfg.m, cfg.n),
        &phi_sum,
    );
    if !in_hmn(lambda, cfg.m, cfg.n) {
        rep.check(sum.is_zero(), || {
            format!("{lambda} lies outside the hook but the sum is {sum}")
        });
    }
    rep
}

/// The lower Hessenberg matrix with `gamma_{i-j+1}` on and below the
/// diagonal and `1, 2, ..., r-1` above it, over the specialized `gamma`s.
fn hessenberg(gamma: &[SPoly], r: usize, m: usize, n: usize) -> Vec<Vec<SPoly>> {
    (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| {
                    if j <= i {
                        gamma[i - j + 1].clone()
                    } else if j == i + 1 {
                        SPoly::constant(QScalar::from_int(i as i64), m, n)
                    } else {
                        SPoly::zero(m, n)
                    }
                })
                .collect()
        })
        .collect()
}

/// `sum_I Imm(X_I) / alpha_{q^2}(I) = Imm_{chi^lambda}(Gamma_r) / r!` with the
/// classical immanant of the specialized Hessenberg matrix.
pub fn hessenberg_check(eng: &ImmanantEngine, bk: &BKGenerators, lambda: &Partition) -> Report {
    let alg = eng.algebra();
    let cfg = alg.cfg();
    let r = lambda.size();
    let mut rep = Report::new("hessenberg")
        .param("cfg", cfg_label(alg))
        .param("lambda", lambda);
    let gamma: Vec<SPoly> = bk.gamma.iter().map(|g| phi_specialize(g, cfg.m, cfg.n)).collect();
    let h = hessenberg(&gamma, r, cfg.m, cfg.n);
    let mut imm = SPoly::zero(cfg.m, cfg.n);
    for sigma in Perm::all(r) {
        let chi = sn_character(lambda, &Partition::new(&sigma.cycle_type())).expect("sizes agree");
        if chi == 0 {
            continue;
        }
        let mut term = SPoly::constant(QScalar::from_int(chi), cfg.m, cfg.n);
        for i in 1..=r {
            term = term.mul(&h[i - 1][sigma.apply(i) - 1]);
        }
        imm = imm.add(&term);
    }
    let fact: i64 = (1..=r as i64).product();
    let lhs = imm.scale(&QScalar::from_int(fact).inv().expect("nonzero"));
    let rhs = phi_specialize(&eng.immanant_sum(lambda), cfg.m, cfg.n);
    rep.expect_eq("Imm(Gamma_r)/r! = specialized immanant sum", &lhs, &rhs);
    if lambda.parts().iter().all(|&p| p == 1) {
        let det = determinant(&h, cfg.m, cfg.n).scale(&QScalar::from_int(fact).inv().expect("nonzero"));
        rep.expect_eq(
            "det(Gamma_r)/r! = alpha_r",
            &det,
            &phi_specialize(&bk.alpha[r], cfg.m, cfg.n),
        );
    }
    rep
}

/// Linear independence of the specialized sums over the hook shapes of
/// each size up to `rmax`.
pub fn verify_basis(eng: &ImmanantEngine, rmax: usize) -> Report {
    let alg = eng.algebra();
    let cfg = alg.cfg();
    let mut rep = Report::new("basis").param("cfg", cfg_label(alg)).param("rmax", rmax);
    for r in 1..=rmax {
        let shapes: Vec<Partition> = Partition::all(r)
            .into_iter()
            .filter(|l| in_hmn(l, cfg.m, cfg.n))
            .collect();
        let images: Vec<SPoly> = shapes
            .iter()
            .map(|l| phi_specialize(&eng.immanant_sum(l), cfg.m, cfg.n))
            .collect();
        let mut monomials: Vec<Vec<u16>> = images.iter().flat_map(|p| p.terms().map(|(e, _)| e.to_vec())).collect();
        monomials.sort();
        monomials.dedup();
        let rows: linalg::Matrix = images
            .iter()
            .map(|p| monomials.iter().map(|e| p.coeff(e)).collect())
            .collect();
        let rank = linalg::rank(rows);
        rep.check(rank == shapes.len(), || {
            format!("degree {r}: rank {rank} for {} shapes", shapes.len())
        });
    }
    rep
}
