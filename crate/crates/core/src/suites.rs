//! Named verification suites: each runs a family of exact checks and returns
//! one report per identity instance. The command line and the acceptance
//! tests both go through here.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aqmat::{x_operator, AqAlgebra, Strategy};
use crate::combinat::{
    composition_to_multiset, in_hmn, multisets, ssyt, weak_compositions, Partition, StandardTableau,
};
use crate::gtmodule::{
    adjudicate_brackets, kostant_supertrace_check, pattern_of_tableau, patterns_for_shape, relation_report,
    schur_weyl_check, schur_weyl_completeness, Bracket, GtModule,
};
use crate::hecke::{diagonal_entry, jucys_murphy, HeckeCache, HeckeElt};
use crate::identities::{
    alpha_beta_gamma, cayley_hamilton_21_residual, goulden_jackson, hessenberg_check, verify_basis,
    verify_berezinian_roots, verify_cayley_hamilton_11, verify_commutativity, verify_littlewood_product,
    verify_littlewood_three, verify_lmw, verify_macmahon, verify_newton,
};
use crate::immanant::ImmanantEngine;
use crate::qscalar::QScalar;
use crate::report::Report;
use crate::superlinear::{build_r_matrices, r_matrix_at, rcheck_at, SuperOp, SuperSpaceCfg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Ybe,
    Hecke,
    Rtt,
    Macmahon,
    Newton,
    Gj,
    Littlewood1,
    Littlewood2,
    Littlewood3,
    Lmw,
    Hessenberg,
    Ch11,
    Kostant,
    Gt,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Ybe,
        Suite::Hecke,
        Suite::Rtt,
        Suite::Macmahon,
        Suite::Newton,
        Suite::Gj,
        Suite::Littlewood1,
        Suite::Littlewood2,
        Suite::Littlewood3,
        Suite::Lmw,
        Suite::Hessenberg,
        Suite::Ch11,
        Suite::Kostant,
        Suite::Gt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ybe => "ybe",
            Suite::Hecke => "hecke",
            Suite::Rtt => "rtt",
            Suite::Macmahon => "macmahon",
            Suite::Newton => "newton",
            Suite::Gj => "gj",
            Suite::Littlewood1 => "littlewood1",
            Suite::Littlewood2 => "littlewood2",
            Suite::Littlewood3 => "littlewood3",
            Suite::Lmw => "lmw",
            Suite::Hessenberg => "hessenberg",
            Suite::Ch11 => "ch11",
            Suite::Kostant => "kostant",
            Suite::Gt => "gt",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name() == s)
    }
}

/// Sizes for a suite run. `None` picks the suite's default for `(m|n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub m: usize,
    pub n: usize,
    pub rmax: Option<usize>,
    pub order: Option<usize>,
}

impl SuiteConfig {
    pub fn new(m: usize, n: usize) -> Self {
        SuiteConfig {
            m,
            n,
            rmax: None,
            order: None,
        }
    }

    pub fn cfg(&self) -> SuperSpaceCfg {
        SuperSpaceCfg::new(self.m, self.n)
    }

    fn small(&self) -> bool {
        self.m + self.n <= 2
    }

    fn rmax_or(&self, default: usize) -> usize {
        self.rmax.unwrap_or(default)
    }
}

pub fn run_suite(suite: Suite, sc: &SuiteConfig) -> Vec<Report> {
    let cfg = sc.cfg();
    match suite {
        Suite::Ybe => alloc::vec![yang_baxter_report(cfg)],
        Suite::Hecke => alloc::vec![hecke_quotient_report(cfg, 3), idempotent_report(sc.rmax_or(4))],
        Suite::Rtt => alloc::vec![rtt_report(cfg, 2)],
        Suite::Macmahon => {
            let order = sc.order.unwrap_or(4);
            let eng = ImmanantEngine::new(cfg);
            let bk = alpha_beta_gamma(&eng, order);
            alloc::vec![
                verify_macmahon(eng.algebra(), &bk, order),
                verify_commutativity(eng.algebra(), &bk)
            ]
        }
        Suite::Newton => {
            let order = sc.order.unwrap_or(3);
            let eng = ImmanantEngine::new(cfg);
            let bk = alpha_beta_gamma(&eng, order + 1);
            alloc::vec![verify_newton(eng.algebra(), &bk, order)]
        }
        Suite::Gj => {
            let rmax = sc.rmax_or(if sc.small() { 4 } else { 3 });
            let eng = ImmanantEngine::new(cfg);
            let bk = alpha_beta_gamma(&eng, rmax);
            let mut out: Vec<Report> = partitions_upto(rmax)
                .iter()
                .map(|l| goulden_jackson(&eng, &bk, l))
                .collect();
            out.push(verify_basis(&eng, rmax.min(3)));
            out
        }
        Suite::Littlewood1 | Suite::Littlewood2 => {
            let rmax = sc.rmax_or(if sc.small() { 4 } else { 3 });
            let eng = ImmanantEngine::new(cfg);
            let distinct_only = suite == Suite::Littlewood1;
            let mut out = Vec::new();
            for total in 2..=rmax {
                for a in 1..total {
                    for mu in Partition::all(a) {
                        for nu in Partition::all(total - a) {
                            for index in multisets(cfg.dim(), total) {
                                if distinct_only && index.windows(2).any(|w| w[0] == w[1]) {
                                    continue;
                                }
                                out.push(verify_littlewood_product(&eng, &mu, &nu, &index));
                            }
                        }
                    }
                }
            }
            out
        }
        Suite::Lmw => {
            let eng = ImmanantEngine::new(cfg);
            let mut out = Vec::new();
            for lam in partitions_upto(sc.rmax_or(3)) {
                for index in multisets(cfg.dim(), lam.size()) {
                    out.push(verify_lmw(&eng, &lam, &index));
                }
            }
            out
        }
        Suite::Littlewood3 => {
            let rmax = sc.rmax_or(if cfg.dim() <= 3 { 4 } else { 3 });
            let eng = ImmanantEngine::new(cfg);
            let bk = alpha_beta_gamma(&eng, rmax.max(cfg.dim() + 1));
            let (rep, roots) = verify_berezinian_roots(&eng, &bk);
            let mut out = alloc::vec![rep];
            if let Some(roots) = roots {
                out.extend(
                    partitions_upto(rmax)
                        .iter()
                        .map(|l| verify_littlewood_three(&eng, &roots, l)),
                );
            }
            out
        }
        Suite::Hessenberg => {
            let rmax = sc.rmax_or(4);
            let eng = ImmanantEngine::new(cfg);
            let bk = alpha_beta_gamma(&eng, rmax);
            partitions_upto(rmax)
                .iter()
                .map(|l| hessenberg_check(&eng, &bk, l))
                .collect()
        }
        Suite::Ch11 => {
            let cfg = SuperSpaceCfg::new(1, 1);
            let eng = ImmanantEngine::new(cfg);
            let bk = alpha_beta_gamma(&eng, 3);
            alloc::vec![verify_cayley_hamilton_11(&bk, eng.algebra())]
        }
        Suite::Kostant => {
            let eng = ImmanantEngine::new(cfg);
            let mut out = Vec::new();
            for lam in partitions_upto(sc.rmax_or(3)) {
                if !in_hmn(&lam, cfg.m, cfg.n) {
                    continue;
                }
                for mu in weak_compositions(lam.size(), cfg.dim()) {
                    out.push(kostant_supertrace_check(&lam, &mu, &eng));
                }
            }
            out
        }
        Suite::Gt => gt_reports(cfg, sc.rmax_or(3)),
    }
}

/// `lambda |- r` for `1 <= r <= rmax`.
pub fn partitions_upto(rmax: usize) -> Vec<Partition> {
    (1..=rmax).flat_map(Partition::all).collect()
}

fn cfg_label(cfg: SuperSpaceCfg) -> String {
    format!("({}|{})", cfg.m, cfg.n)
}

/// `R_12 R_13 R_23 = R_23 R_13 R_12` on three tensor factors.
pub fn yang_baxter_report(cfg: SuperSpaceCfg) -> Report {
    let mut rep = Report::new("yang-baxter").param("cfg", cfg_label(cfg));
    let (r12, r13, r23) = (
        r_matrix_at(cfg, 1, 2, 3),
        r_matrix_at(cfg, 1, 3, 3),
        r_matrix_at(cfg, 2, 3, 3),
    );
    let lhs = r12.compose(&r13).compose(&r23);
    let rhs = r23.compose(&r13).compose(&r12);
    compare_ops(&mut rep, "R12 R13 R23 vs R23 R13 R12", &lhs, &rhs);
    rep
}

fn compare_ops(rep: &mut Report, label: &str, lhs: &SuperOp, rhs: &SuperOp) {
    let cfg = lhs.cfg();
    let r = lhs.degree();
    let diff = lhs.sub(rhs);
    let witness = diff.entries().next().map(|(b, k, c)| (b, k, c.clone()));
    rep.check(diff.is_zero(), || match witness {
        Some((b, k, c)) => format!(
            "{label}: entry <{:?}|.|{:?}> differs by {c}",
            cfg.decode(b, r),
            cfg.decode(k, r)
        ),
        None => String::from(label),
    });
}

/// `Ř_k` satisfy the braid relations and `(Ř - q)(Ř + q^-1) = 0` on `r` factors.
pub fn hecke_quotient_report(cfg: SuperSpaceCfg, r: usize) -> Report {
    let mut rep = Report::new("hecke-quotient").param("cfg", cfg_label(cfg)).param("r", r);
    let id = SuperOp::identity(cfg, r);
    let gens: Vec<SuperOp> = (1..r).map(|k| rcheck_at(cfg, k, r)).collect();
    for (k, a) in gens.iter().enumerate() {
        let x = a.sub(&id.scale(&QScalar::q_pow(1)));
        let y = a.add(&id.scale(&QScalar::q_pow(-1)));
        compare_ops(
            &mut rep,
            &format!("(R{} - q)(R{} + 1/q)", k + 1, k + 1),
            &x.compose(&y),
            &SuperOp::zero(cfg, r),
        );
        if let Some(b) = gens.get(k + 1) {
            compare_ops(
                &mut rep,
                &format!("braid at {}", k + 1),
                &a.compose(b).compose(a),
                &b.compose(a).compose(b),
            );
        }
        for (l, b) in gens.iter().enumerate().skip(k + 2) {
            compare_ops(
                &mut rep,
                &format!("R{} R{} commute", k + 1, l + 1),
                &a.compose(b),
                &b.compose(a),
            );
        }
    }
    rep
}

/// Primitive idempotents for every `lambda |- r <= rmax`: `E^2 = E`,
/// orthogonality, completeness, Jucys-Murphy eigenvalues, and the
/// `E_T (T_a - q^d/[d]) = E_T T_a E_{s_a T}` relation.
pub fn idempotent_report(rmax: usize) -> Report {
    let mut rep = Report::new("idempotent-calculus").param("rmax", rmax);
    let cache = HeckeCache::new();
    for r in 1..=rmax {
        let all: Vec<(StandardTableau, HeckeElt)> = Partition::all(r)
            .iter()
            .flat_map(StandardTableau::all)
            .map(|t| {
                let e = cache.idempotent(&t);
                (t, e)
            })
            .collect();
        let mut total = HeckeElt::zero(r);
        for (t, e) in &all {
            total = total.add(e);
            rep.check(&e.mul(e) == e, || format!("E_T^2 != E_T for T = {t}"));
            for (s, f) in &all {
                if s != t {
                    rep.check(e.mul(f).is_zero(), || format!("E_T E_S != 0 for T = {t}, S = {s}"));
                }
            }
            for k in 1..=r {
                let y = jucys_murphy(k, r);
                let want = e.scale(&QScalar::q_pow(2 * t.content(k)));
                rep.check(y.mul(e) == want && e.mul(&y) == want, || {
                    format!("y_{k} E_T != q^(2c) E_T for T = {t}")
                });
            }
            for a in 1..r {
                let ta = HeckeElt::generator(a, r);
                let lhs = e.mul(&ta.sub(&HeckeElt::scalar(diagonal_entry(t.axial_distance(a)), r)));
                let rhs = match t.swap(a) {
                    Some(s) => e.mul(&ta).mul(&cache.idempotent(&s)),
                    None => HeckeElt::zero(r),
                };
                rep.check(lhs == rhs, || {
                    format!("idempotent intertwining fails for T = {t}, a = {a}")
                });
            }
        }
        rep.check(total == HeckeElt::one(r), || {
            format!("sum of idempotents is not 1 for r = {r}")
        });
    }
    rep
}

/// `Ř X_1 X_2 = X_1 X_2 Ř` entrywise in normal form.
pub fn rtt_report(cfg: SuperSpaceCfg, r: usize) -> Report {
    let mut rep = Report::new("rtt").param("cfg", cfg_label(cfg)).param("r", r);
    let alg = AqAlgebra::new(cfg);
    let x = x_operator(&alg, r);
    for k in 1..r {
        let rc = rcheck_at(cfg, k, r);
        let (lhs, rhs) = (x.compose_left(&rc), x.compose_right(&rc));
        for b in 0..cfg.basis_size(r) {
            for j in 0..cfg.basis_size(r) {
                let (l, rr) = (lhs.get(b, j), rhs.get(b, j));
                rep.check(l == rr, || {
                    format!(
                        "<{:?}|R{k} X|{:?}>: lhs = {l}, rhs = {rr}",
                        cfg.decode(b, r),
                        cfg.decode(j, r)
                    )
                });
            }
        }
    }
    if r == 2 {
        // the defining table itself
        let rm = build_r_matrices(cfg);
        let id = SuperOp::identity(cfg, 2);
        compare_ops(&mut rep, "R R^- = 1", &rm.r.compose(&rm.r_minus), &id);
    }
    rep
}

/// Two expansions of every immanant: the character formula and the
/// idempotent formula, for each tableau of the shape; plus vanishing
/// outside the hook up to `rmax_vanish`.
pub fn immanant_paths_report(cfg: SuperSpaceCfg, rmax: usize, rmax_vanish: usize) -> Report {
    let mut rep = Report::new("immanant-paths")
        .param("cfg", cfg_label(cfg))
        .param("rmax", rmax);
    let eng = ImmanantEngine::new(cfg);
    for lam in partitions_upto(rmax) {
        for index in multisets(cfg.dim(), lam.size()) {
            let direct = eng.principal(&lam, &index).expect("sizes match");
            for t in StandardTableau::all(&lam) {
                let via = eng.via_idempotent(&t, &index).expect("sizes match");
                rep.check(via == direct, || {
                    format!("lambda = {lam}, I = {index:?}, T = {t}: {direct} vs {via}")
                });
            }
        }
    }
    for lam in partitions_upto(rmax_vanish) {
        if in_hmn(&lam, cfg.m, cfg.n) {
            continue;
        }
        for index in multisets(cfg.dim(), lam.size()) {
            let v = eng.principal(&lam, &index).expect("sizes match");
            rep.check(v.is_zero(), || {
                format!("lambda = {lam} outside the hook, I = {index:?}: {v}")
            });
        }
    }
    rep
}

/// Leftmost and rightmost reduction of each word agree with each other and
/// with the insertion normal form. Words are lists of generator positions.
pub fn confluence_report(cfg: SuperSpaceCfg, words: &[Vec<(usize, usize)>]) -> Report {
    let mut rep = Report::new("confluence")
        .param("cfg", cfg_label(cfg))
        .param("words", words.len());
    let alg = AqAlgebra::new(cfg);
    for w in words {
        let codes: Vec<u8> = w.iter().map(|&(i, j)| crate::aqmat::encode(cfg, i, j)).collect();
        let left = alg.rewrite_with(&codes, Strategy::Leftmost);
        let right = alg.rewrite_with(&codes, Strategy::Rightmost);
        let ins = alg.monomial(w);
        rep.check(left == right && left == ins, || {
            format!("word {w:?}: leftmost {left}, rightmost {right}, insertion {ins}")
        });
    }
    rep
}

/// Pattern enumeration against tableaux: counts, weight multisets and the
/// branching bijection, for every shape up to `rmax`.
pub fn gt_pattern_report(cfg: SuperSpaceCfg, rmax: usize) -> Report {
    let (m, n) = (cfg.m, cfg.n);
    let mut rep = Report::new("gt-patterns")
        .param("cfg", cfg_label(cfg))
        .param("rmax", rmax);
    for lam in partitions_upto(rmax) {
        let pats = patterns_for_shape(&lam, m, n);
        let tabs = ssyt(&lam, m, n);
        rep.check(pats.len() == tabs.len(), || {
            format!("lambda = {lam}: {} patterns, {} tableaux", pats.len(), tabs.len())
        });
        let mut a: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for p in &pats {
            *a.entry(p.weight()).or_default() += 1;
        }
        let mut b: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for t in &tabs {
            *b.entry(t.weight(m + n).iter().map(|&x| x as i64).collect())
                .or_default() += 1;
        }
        rep.check(a == b, || format!("lambda = {lam}: weight multisets differ"));
        let images: Vec<_> = tabs.iter().map(|t| pattern_of_tableau(t, m, n)).collect();
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        rep.check(sorted == pats, || {
            format!("lambda = {lam}: branching reading is not a bijection onto patterns")
        });
    }
    rep
}

fn gt_reports(cfg: SuperSpaceCfg, rmax: usize) -> Vec<Report> {
    let (m, n) = (cfg.m, cfg.n);
    let mut out = alloc::vec![gt_pattern_report(cfg, rmax)];
    if m == 0 {
        let mut rep = Report::new("gt-relations").param("cfg", cfg_label(cfg));
        rep.note("no even block: the pattern basis needs m >= 1");
        out.push(rep);
        return out;
    }
    let (adj, chosen) = adjudicate_brackets(m, n, rmax);
    out.push(adj);
    let bracket = chosen.unwrap_or(Bracket::QInteger);
    for lam in partitions_upto(rmax) {
        if let Ok(module) = GtModule::new(&lam, m, n, bracket) {
            out.push(relation_report(&module));
        }
    }
    let eng = ImmanantEngine::new(cfg);
    for lam in partitions_upto(rmax) {
        if !in_hmn(&lam, m, n) {
            continue;
        }
        let mut rep = Report::new("schur-weyl-basis")
            .param("cfg", cfg_label(cfg))
            .param("lambda", &lam);
        for mu in weak_compositions(lam.size(), cfg.dim()) {
            rep.absorb(&schur_weyl_check(&lam, &composition_to_multiset(&mu), cfg, &eng));
        }
        out.push(rep);
    }
    for r in 1..=rmax {
        out.push(schur_weyl_completeness(cfg, r, &eng));
    }
    out
}

/// The candidate `(2|1)` Cayley-Hamilton identity. The residual is reported
/// entry by entry and never asserted, so the status is always pass.
pub fn cayley_hamilton_21_report() -> Report {
    let cfg = SuperSpaceCfg::new(2, 1);
    let eng = ImmanantEngine::new(cfg);
    let bk = alpha_beta_gamma(&eng, 3);
    let res = cayley_hamilton_21_residual(&bk, eng.algebra());
    let mut rep = Report::new("cayley-hamilton-21-residual").param("cfg", cfg_label(cfg));
    rep.note("experimental: candidate identity evaluated, residual reported, not asserted");
    let mut nonzero = 0;
    for i in 1..=cfg.dim() {
        for j in 1..=cfg.dim() {
            let e = res.get(i, j);
            if !e.is_zero() {
                nonzero += 1;
                rep.note(format!("residual ({i},{j}) has {} terms", e.len()));
            }
        }
    }
    rep.note(format!(
        "{nonzero} of {} residual entries are nonzero",
        cfg.dim() * cfg.dim()
    ));
    rep
}
