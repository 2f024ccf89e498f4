//! Text, LaTeX and JSON renderings of polynomials, optionally with `q`
//! specialized to a rational number.

use num_bigint::BigInt;
use qsl_core::aqmat::NCPoly;
use qsl_core::qscalar::QScalar;
use qsl_core::symfun::SPoly;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// A rational value `p/s` for `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSpec {
    pub num: BigInt,
    pub den: BigInt,
}

impl std::str::FromStr for QSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once('/').unwrap_or((s, "1"));
        let num: BigInt = a.trim().parse().map_err(|_| format!("bad numerator {a:?}"))?;
        let den: BigInt = b.trim().parse().map_err(|_| format!("bad denominator {b:?}"))?;
        if den == BigInt::from(0) || num == BigInt::from(0) {
            return Err("q must be a nonzero rational".into());
        }
        Ok(QSpec { num, den })
    }
}

/// One coefficient ready for printing.
struct Coef {
    neg: bool,
    unit: bool,
    atomic: bool,
    body: String,
}

fn coef_of(c: &QScalar, latex: bool, q: Option<&QSpec>) -> Result<Option<Coef>, CliError> {
    if let Some(q) = q {
        let (n, d) = c
            .eval_at(&q.num, &q.den)
            .ok_or_else(|| CliError::Usage(format!("q = {}/{} is a pole of the coefficient {c}", q.num, q.den)))?;
        if n == BigInt::from(0) {
            return Ok(None);
        }
        let neg = n < BigInt::from(0);
        let a = if neg { -n } else { n };
        let one = BigInt::from(1);
        let body = match (d == one, latex) {
            (true, _) => a.to_string(),
            (false, false) => format!("{a}/{d}"),
            (false, true) => format!("\\frac{{{a}}}{{{d}}}"),
        };
        return Ok(Some(Coef {
            neg,
            unit: a == one && d == one,
            atomic: true,
            body,
        }));
    }
    let neg = c.is_negative() && (c.is_atomic() || laurent_terms(c).is_some_and(|t| t.len() == 1));
    let abs = if neg { -c } else { c.clone() };
    let (body, atomic) = match laurent_terms(&abs) {
        Some(t) => (laurent_string(&t, latex), t.len() == 1),
        None if latex => (abs.to_latex(), abs.is_atomic()),
        None => (abs.to_string(), abs.is_atomic()),
    };
    Ok(Some(Coef {
        neg,
        unit: abs.is_one(),
        atomic,
        body,
    }))
}

/// `(coefficient, exponent)` pairs, highest exponent first, when `c` is a
/// Laurent polynomial in `q`.
fn laurent_terms(c: &QScalar) -> Option<Vec<(BigInt, i64)>> {
    if !c.is_laurent() {
        return None;
    }
    let shift = c.denom().degree().unwrap_or(0) as i64;
    let mut out: Vec<(BigInt, i64)> = c
        .numer()
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| **a != BigInt::from(0))
        .map(|(k, a)| (a.clone(), k as i64 - shift))
        .collect();
    out.reverse();
    Some(out)
}

fn laurent_string(terms: &[(BigInt, i64)], latex: bool) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let one = BigInt::from(1);
    let mut s = String::new();
    for (k, (a, e)) in terms.iter().enumerate() {
        let neg = *a < BigInt::from(0);
        let abs = if neg { -a.clone() } else { a.clone() };
        match (k == 0, neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let power = match (*e, latex) {
            (0, _) => String::new(),
            (1, _) => "q".into(),
            (_, false) => format!("q^{e}"),
            (_, true) => format!("q^{{{e}}}"),
        };
        if power.is_empty() {
            s.push_str(&abs.to_string());
        } else if abs == one {
            s.push_str(&power);
        } else {
            s.push_str(&format!("{abs}{power}"));
        }
    }
    s
}

fn join(terms: Vec<(Coef, String)>, latex: bool) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (c, mono)) in terms.into_iter().enumerate() {
        match (k == 0, c.neg) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let body = if c.atomic {
            c.body
        } else if latex {
            format!("\\left({}\\right)", c.body)
        } else {
            format!("({})", c.body)
        };
        match (mono.is_empty(), c.unit) {
            (true, true) => s.push('1'),
            (true, false) => s.push_str(&body),
            (false, true) => s.push_str(&mono),
            (false, false) => {
                s.push_str(&body);
                s.push(' ');
                s.push_str(&mono);
            }
        }
    }
    s
}

fn gen_name(i: usize, j: usize, wide: bool) -> String {
    if wide {
        format!("x_{{{i},{j}}}")
    } else {
        format!("x_{{{i}{j}}}")
    }
}

/// Consecutive equal generators are written as powers.
fn word_string(word: &[(usize, usize)], wide: bool, latex: bool) -> String {
    let mut s = String::new();
    let mut k = 0;
    while k < word.len() {
        let mut run = 1;
        while k + run < word.len() && word[k + run] == word[k] {
            run += 1;
        }
        s.push_str(&gen_name(word[k].0, word[k].1, wide));
        match (run, latex) {
            (1, _) => {}
            (_, false) => s.push_str(&format!("^{run}")),
            (_, true) => s.push_str(&format!("^{{{run}}}")),
        }
        k += run;
    }
    s
}

/// `x_{11}x_{22} - q x_{12}x_{21}`; the same shape is used for LaTeX.
pub fn ncpoly_string(p: &NCPoly, latex: bool, q: Option<&QSpec>) -> Result<String, CliError> {
    let wide = p.cfg().dim() > 9;
    let mut terms = Vec::new();
    for (word, c) in p.pair_terms() {
        if let Some(c) = coef_of(c, latex, q)? {
            terms.push((c, word_string(&word, wide, latex)));
        }
    }
    Ok(join(terms, latex))
}

fn var_name(v: usize, m: usize, latex: bool) -> String {
    let (x, k) = if v < m { ('x', v + 1) } else { ('y', v - m + 1) };
    if latex {
        format!("{x}_{{{k}}}")
    } else {
        format!("{x}{k}")
    }
}

/// `x1^2*y1 + q^2 x1`, highest monomial first.
pub fn spoly_string(p: &SPoly, m: usize, latex: bool, q: Option<&QSpec>) -> Result<String, CliError> {
    let mut rows: Vec<(&[u16], &QScalar)> = p.terms().collect();
    rows.reverse();
    let mut terms = Vec::new();
    for (exps, c) in rows {
        let Some(c) = coef_of(c, latex, q)? else { continue };
        let mut vars = Vec::new();
        for (v, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = var_name(v, m, latex);
            vars.push(match (e, latex) {
                (1, _) => name,
                (_, false) => format!("{name}^{e}"),
                (_, true) => format!("{name}^{{{e}}}"),
            });
        }
        terms.push((c, vars.join(if latex { "" } else { "*" })));
    }
    Ok(join(terms, latex))
}

#[derive(Serialize)]
struct NcTerm {
    word: Vec<[usize; 2]>,
    coeff: String,
}

#[derive(Serialize)]
struct NcJson {
    m: usize,
    n: usize,
    terms: Vec<NcTerm>,
}

#[derive(Serialize)]
struct STerm {
    exponents: Vec<u16>,
    coeff: String,
}

#[derive(Serialize)]
struct SJson {
    m: usize,
    n: usize,
    terms: Vec<STerm>,
}

fn coeff_json(c: &QScalar, q: Option<&QSpec>) -> Result<Option<String>, CliError> {
    Ok(match q {
        None => Some(c.to_text()),
        Some(_) => coef_of(c, false, q)?.map(|k| format!("{}{}", if k.neg { "-" } else { "" }, k.body)),
    })
}

pub fn ncpoly_json(p: &NCPoly, q: Option<&QSpec>) -> Result<String, CliError> {
    let cfg = p.cfg();
    let mut terms = Vec::new();
    for (word, c) in p.pair_terms() {
        if let Some(coeff) = coeff_json(c, q)? {
            terms.push(NcTerm {
                word: word.iter().map(|&(i, j)| [i, j]).collect(),
                coeff,
            });
        }
    }
    Ok(to_json(&NcJson {
        m: cfg.m,
        n: cfg.n,
        terms,
    }))
}

pub fn spoly_json(p: &SPoly, m: usize, n: usize, q: Option<&QSpec>) -> Result<String, CliError> {
    let mut terms = Vec::new();
    for (exps, c) in p.terms() {
        if let Some(coeff) = coeff_json(c, q)? {
            terms.push(STerm {
                exponents: exps.to_vec(),
                coeff,
            });
        }
    }
    Ok(to_json(&SJson { m, n, terms }))
}

pub(crate) fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

pub fn ncpoly(p: &NCPoly, fmt: Format, q: Option<&QSpec>) -> Result<String, CliError> {
    match fmt {
        Format::Text => ncpoly_string(p, false, q),
        Format::Latex => ncpoly_string(p, true, q),
        Format::Json => ncpoly_json(p, q),
    }
}

pub fn spoly(p: &SPoly, m: usize, n: usize, fmt: Format, q: Option<&QSpec>) -> Result<String, CliError> {
    match fmt {
        Format::Text => spoly_string(p, m, false, q),
        Format::Latex => spoly_string(p, m, true, q),
        Format::Json => spoly_json(p, m, n, q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsl_core::superlinear::SuperSpaceCfg;

    #[test]
    fn signs_and_units() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let p = NCPoly::gen(1, 1, cfg).sub(&NCPoly::gen(2, 2, cfg));
        assert_eq!(ncpoly_string(&p, false, None).unwrap(), "x_{11} - x_{22}");
        assert_eq!(ncpoly_string(&p.neg(), false, None).unwrap(), "-x_{11} + x_{22}");
        assert_eq!(ncpoly_string(&NCPoly::zero(cfg), false, None).unwrap(), "0");
        let c = NCPoly::gen(1, 2, cfg).scale(&QScalar::monomial(-3, 2));
        let text = ncpoly_string(&c, false, None).unwrap();
        assert_eq!(text, "-3q^2 x_{12}");
        let d = NCPoly::gen(2, 1, cfg).scale(&QScalar::laurent(-1, &[1, 0, -1]));
        assert_eq!(ncpoly_string(&d, false, None).unwrap(), "(-q + q^-1) x_{21}");
        assert_eq!(
            ncpoly_string(&d, true, None).unwrap(),
            "\\left(-q + q^{-1}\\right) x_{21}"
        );
        let sq = NCPoly::gen(2, 2, cfg).scale(&QScalar::q_pow(-1));
        let alg = qsl_core::aqmat::AqAlgebra::new(cfg);
        assert_eq!(
            ncpoly_string(&alg.mul(&sq, &NCPoly::gen(2, 2, cfg)), false, None).unwrap(),
            "q^-1 x_{22}^2"
        );
    }

    #[test]
    fn specialization() {
        let cfg = SuperSpaceCfg::new(1, 1);
        let q: QSpec = "2".parse().unwrap();
        let p = NCPoly::gen(1, 1, cfg).scale(&QScalar::q_pow(-1));
        assert_eq!(ncpoly_string(&p, false, Some(&q)).unwrap(), "1/2 x_{11}");
        let half: QSpec = "1/2".parse().unwrap();
        assert_eq!(ncpoly_string(&p, false, Some(&half)).unwrap(), "2 x_{11}");
        assert!("0".parse::<QSpec>().is_err());
    }
}
