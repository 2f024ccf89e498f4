use alloc::format;
use alloc::vec::Vec;

use super::cfg_label;
use crate::aqmat::NCPoly;
use crate::combinat::{alpha_factors, composition_to_multiset, lr_coefficient, multiplicities, Partition};
use crate::hecke::InducedKind;
use crate::immanant::{Character, ImmanantEngine, ImmanantQuery};
use crate::qscalar::QScalar;
use crate::report::Report;

/// Ordered splittings `(I_1, ..., I_l)` of the sorted multiset `index` into
/// sorted sub-multisets of the given sizes.
pub fn splittings(index: &[usize], dim: usize, sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(left: &[usize], sizes: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&k, rest)) = sizes.split_first() else {
            if left.iter().all(|&a| a == 0) {
                out.push(cur.clone());
            }
            return;
        };
        let mut take = alloc::vec![0; left.len()];
        pick(left, k, 0, &mut take, &mut |t| {
            let remaining: Vec<usize> = left.iter().zip(t).map(|(a, b)| a - b).collect();
            cur.push(composition_to_multiset(t));
            rec(&remaining, rest, cur, out);
            cur.pop();
        });
    }
    fn pick(left: &[usize], k: usize, pos: usize, take: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if pos == left.len() {
            if k == 0 {
                f(take);
            }
            return;
        }
        for b in 0..=left[pos].min(k) {
            take[pos] = b;
            pick(left, k - b, pos + 1, take, f);
        }
        take[pos] = 0;
    }
    let mut out = Vec::new();
    rec(&multiplicities(index, dim), sizes, &mut Vec::new(), &mut out);
    out
}

fn inv_alpha_q(eng: &ImmanantEngine, index: &[usize]) -> QScalar {
    let cfg = eng.cfg();
    alpha_factors(index, cfg.m, cfg.n)
        .1
        .inv()
        .expect("q-factorials are nonzero")
}

/// `sum_{(I_1, ..., I_l)} prod_j Imm_{chi_j}(X_{I_j}) / alpha_{q^2}(I_j)`,
/// the factors multiplied in block order.
fn split_product(eng: &ImmanantEngine, index: &[usize], blocks: &[Partition]) -> NCPoly {
    let cfg = eng.cfg();
    let alg = eng.algebra();
    let sizes: Vec<usize> = blocks.iter().map(Partition::size).collect();
    let mut out = NCPoly::zero(cfg);
    for split in splittings(index, cfg.dim(), &sizes) {
        let mut term = NCPoly::one(cfg);
        for (part, block) in split.iter().zip(blocks) {
            let v = eng
                .principal(block, part)
                .expect("sizes agree")
                .scale(&inv_alpha_q(eng, part));
            term = alg.mul(&term, &v);
        }
        out = out.add(&term);
    }
    out
}

/// The product rule for normalized principal immanants:
/// `sum_{(I_1,I_2)} Imm_mu(X_{I_1}) Imm_nu(X_{I_2}) / (alpha(I_1) alpha(I_2))
///  = sum_lambda c^lambda_{mu nu} Imm_lambda(X_I) / alpha(I)`
/// with `alpha = alpha_{q^2}`. With distinct entries in `I` this is the
/// complementary-minor form.
pub fn verify_littlewood_product(eng: &ImmanantEngine, mu: &Partition, nu: &Partition, index: &[usize]) -> Report {
    let alg = eng.algebra();
    let cfg = alg.cfg();
    let mut sorted = index.to_vec();
    sorted.sort_unstable();
    let distinct = sorted.windows(2).all(|w| w[0] < w[1]);
    let name = if distinct {
        "littlewood-complementary"
    } else {
        "littlewood-product"
    };
    let mut rep = Report::new(name)
        .param("cfg", cfg_label(alg))
        .param("mu", mu)
        .param("nu", nu)
        .param("I", format!("{sorted:?}"));
    if mu.size() + nu.size() != sorted.len() {
        rep.check(false, || {
            format!("|mu| + |nu| = {} but |I| = {}", mu.size() + nu.size(), sorted.len())
        });
        return rep;
    }
    let lhs = split_product(eng, &sorted, &[mu.clone(), nu.clone()]);
    let mut rhs = NCPoly::zero(cfg);
    for lam in Partition::all(sorted.len()) {
        let c = lr_coefficient(mu, nu, &lam).expect("sizes agree");
        if c == 0 {
            continue;
        }
        let v = eng.principal(&lam, &sorted).expect("sizes agree");
        rhs = rhs.add(&v.scale(&(&QScalar::from_int(c as i64) * &inv_alpha_q(eng, &sorted))));
    }
    rep.expect_eq("product expansion", &lhs, &rhs);
    rep
}

/// Both induced-character identities for `lambda = (lambda_1, ..., lambda_l)`:
/// `Imm_{psi^lambda}(X_I) / alpha(I) = sum prod_j Imm_{(1^{lambda_j})}(X_{I_j}) / alpha(I_j)`
/// and the same with `phi^lambda` and the one-row shapes `(lambda_j)`.
pub fn verify_lmw(eng: &ImmanantEngine, lambda: &Partition, index: &[usize]) -> Report {
    let alg = eng.algebra();
    let mut sorted = index.to_vec();
    sorted.sort_unstable();
    let mut rep = Report::new("lmw")
        .param("cfg", cfg_label(alg))
        .param("lambda", lambda)
        .param("I", format!("{sorted:?}"));
    if lambda.size() != sorted.len() {
        rep.check(false, || {
            format!("|lambda| = {} but |I| = {}", lambda.size(), sorted.len())
        });
        return rep;
    }
    for (kind, label) in [
        (InducedKind::Sign, "sign-induced"),
        (InducedKind::Trivial, "trivially induced"),
    ] {
        let blocks: Vec<Partition> = lambda
            .parts()
            .iter()
            .map(|&k| match kind {
                InducedKind::Sign => Partition::new(&alloc::vec![1; k]),
                InducedKind::Trivial => Partition::new(&[k]),
            })
            .collect();
        let chi = eng.hecke().induced_character(lambda, kind);
        let query = ImmanantQuery {
            chi: Character::Element(chi),
            bra: sorted.clone(),
            ket: sorted.clone(),
        };
        let lhs = eng
            .immanant(&query)
            .expect("sizes agree")
            .scale(&inv_alpha_q(eng, &sorted));
        let rhs = split_product(eng, &sorted, &blocks);
        rep.expect_eq(label, &lhs, &rhs);
    }
    rep
}
