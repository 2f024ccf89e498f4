use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{patterns_for_shape, GtError};
use crate::aqmat::{x_entry, NCPoly};
use crate::combinat::{
    alpha_factors, composition_to_multiset, in_hmn, multiplicities, rearrangements, ssyt, theta_map,
};
use crate::combinat::{Partition, StandardTableau, Tableau};
use crate::hecke::{diagonal_entry, HeckeElt};
use crate::immanant::ImmanantEngine;
use crate::qscalar::{schur_element, QScalar};
use crate::report::Report;
use crate::superlinear::{uq_action, Coproduct, HeckeActionCache, SuperSpaceCfg, TensorVector, UqGen};

/// `E_T . e_I` for one standard tableau, with the data of the correspondence
/// with the GT basis. Square roots are never taken: `norm` is the squared
/// length `c_lambda / alpha_{q^2}(I) * <e_I, E_T e_I>`.
#[derive(Clone, Debug)]
pub struct SchurWeylVector {
    pub tableau: StandardTableau,
    pub vector: TensorVector,
    pub theta: Tableau,
    pub semistandard: bool,
    pub norm: QScalar,
}

fn check_index(index: &[usize], cfg: SuperSpaceCfg) -> Result<(), GtError> {
    let sorted = index.windows(2).all(|w| w[0] <= w[1]);
    let in_range = index.iter().all(|&i| (1..=cfg.dim()).contains(&i));
    if sorted && in_range {
        Ok(())
    } else {
        Err(GtError::BadIndex)
    }
}

pub fn schur_weyl_basis(
    lambda: &Partition,
    index: &[usize],
    cfg: SuperSpaceCfg,
    eng: &ImmanantEngine,
) -> Result<Vec<SchurWeylVector>, GtError> {
    check_index(index, cfg)?;
    if index.len() != lambda.size() {
        return Err(GtError::BadIndex);
    }
    if !in_hmn(lambda, cfg.m, cfg.n) {
        return Err(GtError::NotInHook);
    }
    let r = index.len();
    let act = HeckeActionCache::new(cfg, r);
    let code = cfg.encode(index);
    let mu = multiplicities(index, cfg.dim());
    let (_, aq) = alpha_factors(index, cfg.m, cfg.n);
    let scale = &schur_element(lambda) / &aq;
    Ok(StandardTableau::all(lambda)
        .into_iter()
        .map(|t| {
            let vector = act.apply_basis(&eng.hecke().idempotent(&t), code);
            let (theta, semistandard) = theta_map(&t, &mu, cfg.m);
            let norm = &scale * &vector.get(code);
            SchurWeylVector {
                tableau: t,
                vector,
                theta,
                semistandard,
                norm,
            }
        })
        .collect())
}

/// The testable content of the tableau/GT correspondence for one `(lambda, I)`.
pub fn schur_weyl_check(lambda: &Partition, index: &[usize], cfg: SuperSpaceCfg, eng: &ImmanantEngine) -> Report {
    let mut rep = Report::new("schur-weyl-basis")
        .param("m", cfg.m)
        .param("n", cfg.n)
        .param("lambda", lambda)
        .param("I", format!("{index:?}"));
    let basis = match schur_weyl_basis(lambda, index, cfg, eng) {
        Ok(b) => b,
        Err(e) => {
            rep.check(false, || format!("{e}"));
            return rep;
        }
    };
    let r = index.len();
    let act = HeckeActionCache::new(cfg, r);
    let e_i = TensorVector::basis(cfg.encode(index));
    let mu = multiplicities(index, cfg.dim());
    let mut groups: BTreeMap<Tableau, QScalar> = BTreeMap::new();
    for b in &basis {
        let t = &b.tableau;
        rep.check(b.semistandard != b.vector.is_zero(), || {
            format!(
                "T = {t}: theta semistandard = {}, vector zero = {}",
                b.semistandard,
                b.vector.is_zero()
            )
        });
        if b.semistandard {
            let acc = groups.entry(b.theta.clone()).or_insert_with(QScalar::zero);
            *acc = &*acc + &b.norm;
        }
        for (k, &mk) in mu.iter().enumerate() {
            let mut h = vec![0i64; cfg.dim()];
            h[k] = 1;
            let op = uq_action(&UqGen::QPow(h), cfg, r, Coproduct::default());
            let lhs = op.apply(&b.vector);
            let rhs = b.vector.scale(&QScalar::q_pow(mk as i64));
            rep.check(lhs == rhs, || {
                format!("T = {t}: E_T e_I is not a weight vector for eps_{}", k + 1)
            });
        }
        let e = eng.hecke().idempotent(t);
        for a in 1..r {
            let ta = HeckeElt::generator(a, r);
            let lhs = e.mul(&ta.sub(&HeckeElt::scalar(diagonal_entry(t.axial_distance(a)), r)));
            let rhs = match t.swap(a) {
                Some(s) => e.mul(&ta).mul(&eng.hecke().idempotent(&s)),
                None => HeckeElt::zero(r),
            };
            let (lv, rv) = (act.apply(&lhs, &e_i), act.apply(&rhs, &e_i));
            rep.check(lv == rv, || {
                format!("T = {t}, a = {a}: idempotent covariance fails on e_I")
            });
        }
    }
    for (theta, total) in &groups {
        rep.check(total.is_one(), || {
            format!("theta = {theta:?}: squared lengths sum to {total}")
        });
    }
    // the semistandard images are exactly the tableaux of weight mu
    let want: BTreeSet<Tableau> = ssyt(lambda, cfg.m, cfg.n)
        .into_iter()
        .filter(|t| t.weight(cfg.dim()) == mu)
        .collect();
    let got: BTreeSet<Tableau> = groups.keys().cloned().collect();
    rep.check(want == got, || {
        format!(
            "{} semistandard images, {} tableaux of weight {mu:?}",
            got.len(),
            want.len()
        )
    });
    rep
}

/// `rank rho(E_T) = #patterns(lambda)`, and the ranks add up to `(m+n)^r`.
pub fn schur_weyl_completeness(cfg: SuperSpaceCfg, r: usize, eng: &ImmanantEngine) -> Report {
    let mut rep = Report::new("schur-weyl-completeness")
        .param("m", cfg.m)
        .param("n", cfg.n)
        .param("r", r);
    let act = HeckeActionCache::new(cfg, r);
    let mut total = 0usize;
    for lam in Partition::all(r) {
        let want = patterns_for_shape(&lam, cfg.m, cfg.n).len();
        for t in StandardTableau::all(&lam) {
            let rank = act.operator(&eng.hecke().idempotent(&t)).rank();
            rep.check(rank == want, || format!("T = {t}: rank {rank}, patterns {want}"));
            total += rank;
        }
    }
    let dim = cfg.basis_size(r) as usize;
    rep.check(total == dim, || {
        format!("ranks sum to {total}, tensor space has dimension {dim}")
    });
    rep
}

/// Weight-space form of the immanant: `Imm(X_I) / alpha_{q^2}(I)` against
/// `(-1)^I c_lambda / alpha_{q^2}(I) sum_T <(P_mu ⊗ 1) Pi_r (E_T e_I), E_T e_I>`.
pub fn kostant_supertrace_check(lambda: &Partition, mu: &[usize], eng: &ImmanantEngine) -> Report {
    let cfg = eng.cfg();
    let mut rep = Report::new("kostant-supertrace")
        .param("m", cfg.m)
        .param("n", cfg.n)
        .param("lambda", lambda)
        .param("mu", format!("{mu:?}"));
    let index = composition_to_multiset(mu);
    if index.len() != lambda.size() || mu.len() != cfg.dim() {
        rep.check(false, || "weight does not match the shape".into());
        return rep;
    }
    let (_, aq) = alpha_factors(&index, cfg.m, cfg.n);
    let inv = QScalar::one().checked_div(&aq).expect("alpha_q is nonzero");
    let lhs = match eng.principal(lambda, &index) {
        Ok(p) => p.scale(&inv),
        Err(e) => {
            rep.check(false, || format!("{e:?}"));
            return rep;
        }
    };
    let rhs = if in_hmn(lambda, cfg.m, cfg.n) {
        let basis = schur_weyl_basis(lambda, &index, cfg, eng).expect("checked above");
        let weight_space: Vec<u32> = rearrangements(&index).iter().map(|k| cfg.encode(k)).collect();
        let alg = eng.algebra();
        let mut acc = NCPoly::zero(cfg);
        for b in basis.iter().filter(|b| !b.vector.is_zero()) {
            let w = &b.vector;
            for &kc in &weight_space {
                let wk = w.get(kc);
                if wk.is_zero() {
                    continue;
                }
                let k = cfg.decode(kc, index.len());
                for (jc, wj) in w.coeffs() {
                    let j = cfg.decode(*jc, index.len());
                    acc = acc.add(&x_entry(alg, &k, &j).scale(&(&wk * wj)));
                }
            }
        }
        let mut c = &schur_element(lambda) * &inv;
        if cfg.index_parity(&index) {
            c = -c;
        }
        acc.scale(&c)
    } else {
        rep.note("lambda is outside the hook: the module is zero");
        NCPoly::zero(cfg)
    };
    rep.expect_eq("Imm/alpha vs weight-space supertrace", &lhs, &rhs);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::weak_compositions;

    #[test]
    fn unit_norm_for_distinct_letters() {
        let cfg = SuperSpaceCfg::new(2, 1);
        let eng = ImmanantEngine::new(cfg);
        for lam in Partition::all(3) {
            if !in_hmn(&lam, 2, 1) {
                continue;
            }
            for b in schur_weyl_basis(&lam, &[1, 2, 3], cfg, &eng).unwrap() {
                assert!(b.norm.is_one(), "{lam} {}", b.tableau);
                assert!(b.semistandard);
            }
        }
    }

    #[test]
    fn correspondence_small() {
        for (m, n) in [(1, 1), (2, 1)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let eng = ImmanantEngine::new(cfg);
            for r in 1..=3 {
                for lam in Partition::all(r) {
                    if !in_hmn(&lam, m, n) {
                        continue;
                    }
                    for mu in weak_compositions(r, m + n) {
                        let rep = schur_weyl_check(&lam, &composition_to_multiset(&mu), cfg, &eng);
                        assert!(rep.passed(), "{rep}");
                    }
                }
            }
        }
    }

    #[test]
    fn completeness_small() {
        for (m, n) in [(1, 1), (2, 1)] {
            let cfg = SuperSpaceCfg::new(m, n);
            let eng = ImmanantEngine::new(cfg);
            for r in 1..=3 {
                let rep = schur_weyl_completeness(cfg, r, &eng);
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn kostant_small() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let eng = ImmanantEngine::new(cfg);
        for r in 1..=3 {
            for lam in Partition::all(r) {
                for mu in weak_compositions(r, 2) {
                    let rep = kostant_supertrace_check(&lam, &mu, &eng);
                    assert!(rep.passed(), "{rep}");
                }
            }
        }
    }
}
