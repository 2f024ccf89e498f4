//! Exact arithmetic in the field `Q(q)` of rational functions in the formal
//! parameter `q`, together with the q-number helpers used by the rest of the
//! crate.
//!
//! A [`QScalar`] is kept in canonical form: numerator and denominator are
//! integer polynomials in `q` (negative powers of `q` are moved into the
//! denominator), they are coprime over `Z[q]`, and the denominator has a
//! positive leading coefficient. Equality is therefore structural.

mod parse;
pub mod poly;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use parse::ParseQScalarError;
pub use poly::Poly;

use crate::combinat::Partition;

/// Division by the zero element of `Q(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("division by zero in Q(q)")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: Poly,
    den: Poly,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        QScalar::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        QScalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        QScalar::monomial(1, k)
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        if c == 0 {
            return QScalar::zero();
        }
        if k >= 0 {
            QScalar {
                num: Poly::monomial(BigInt::from(c), k as usize),
                den: Poly::one(),
            }
        } else {
            QScalar {
                num: Poly::constant(BigInt::from(c)),
                den: Poly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    /// The Laurent polynomial `sum_i coeffs[i] * q^(low + i)`.
    pub fn laurent(low: i64, coeffs: &[i64]) -> Self {
        let p = Poly::from_i64s(coeffs);
        QScalar::from_laurent_poly(low, p)
    }

    fn from_laurent_poly(low: i64, p: Poly) -> Self {
        if low >= 0 {
            QScalar {
                num: p.shift_up(low as usize),
                den: Poly::one(),
            }
        } else {
            QScalar::from_parts(p, Poly::monomial(BigInt::one(), (-low) as usize)).expect("nonzero denominator")
        }
    }

    /// Build `num / den` and bring it to canonical form.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Self, DivisionByZero> {
        if den.is_zero() {
            return Err(DivisionByZero);
        }
        if num.is_zero() {
            return Ok(QScalar::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(QScalar { num, den })
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial (denominator is a power of q).
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial() && self.den.lead().is_some_and(|l| l.is_one())
    }

    /// Sign of the leading numerator coefficient, used for printing.
    pub fn is_negative(&self) -> bool {
        self.num.lead().is_some_and(|l| l.is_negative())
    }

    pub fn inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(QScalar { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, DivisionByZero> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("negative power of zero").pow(-k);
        }
        let mut acc = QScalar::one();
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The substitution `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return QScalar::zero();
        }
        // p(1/q) = rev(p) / q^deg p.
        let dn = self.num.degree().unwrap() as i64;
        let dd = self.den.degree().unwrap() as i64;
        let num = self.num.reversed();
        let den = self.den.reversed();
        // p(1/q)/r(1/q) = rev(p) q^(dd - dn) / rev(r)
        let shift = dd - dn;
        let (num, den) = if shift >= 0 {
            (num.shift_up(shift as usize), den)
        } else {
            (num, den.shift_up((-shift) as usize))
        };
        QScalar::from_parts(num, den).expect("nonzero denominator")
    }

    /// Evaluate at the rational point `q = p/s`. Returns the reduced pair
    /// `(numerator, denominator)` with positive denominator, or `None` when
    /// the point is a pole.
    pub fn eval_at(&self, p: &BigInt, s: &BigInt) -> Option<(BigInt, BigInt)> {
        let (a, b) = self.num.eval_frac(p, s);
        let (c, d) = self.den.eval_frac(p, s);
        if c.is_zero() {
            return None;
        }
        let mut n = a * d;
        let mut m = b * c;
        let g = n.gcd(&m);
        if !g.is_zero() {
            n /= &g;
            m /= &g;
        }
        if m.is_negative() {
            n = -n;
            m = -m;
        }
        Some((n, m))
    }

    /// Deterministic total order (used for sorting printed output only).
    pub fn cmp_canonical(&self, other: &Self) -> core::cmp::Ordering {
        self.den.cmp_lex(&other.den).then_with(|| self.num.cmp_lex(&other.num))
    }

    pub fn parse(s: &str) -> Result<Self, ParseQScalarError> {
        parse::parse(s)
    }

    /// Text without the surrounding parentheses a single polynomial would get
    /// in a product context.
    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }

    /// LaTeX form, `\\frac{q^{2}-1}{q}` for a proper fraction.
    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            return latex_poly(&self.num);
        }
        alloc::format!("\\frac{{{}}}{{{}}}", latex_poly(&self.num), latex_poly(&self.den))
    }

    /// True when printing needs parentheses as a coefficient prefix.
    pub fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

fn add_frac(a: &QScalar, b: &QScalar, negate_b: bool) -> QScalar {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let bn = if negate_b { b.num.neg() } else { b.num.clone() };
    if a.den == b.den {
        let num = a.num.add(&bn);
        if a.den.is_one() {
            return QScalar { num, den: Poly::one() };
        }
        return QScalar::from_parts(num, a.den.clone()).unwrap();
    }
    // Laurent fast path: both denominators are powers of q.
    if a.is_laurent() && b.is_laurent() {
        let ka = a.den.degree().unwrap();
        let kb = b.den.degree().unwrap();
        let k = ka.max(kb);
        let num = a.num.shift_up(k - ka).add(&bn.shift_up(k - kb));
        if num.is_zero() {
            return QScalar::zero();
        }
        let v = num.valuation().unwrap().min(k);
        return QScalar {
            num: num.shift_down(v),
            den: Poly::monomial(BigInt::one(), k - v),
        };
    }
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        let num = a.num.mul(&b.den).add(&bn.mul(&a.den));
        let den = a.den.mul(&b.den);
        return QScalar::from_parts(num, den).unwrap();
    }
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    let num = a.num.mul(&bd).add(&bn.mul(&ad));
    if num.is_zero() {
        return QScalar::zero();
    }
    // gcd(num, ad*bd) = 1 already; only the shared factor g can cancel.
    let h = num.gcd(&g);
    let (num, g) = if h.is_one() {
        (num, g)
    } else {
        (num.div_exact(&h).unwrap(), g.div_exact(&h).unwrap())
    };
    let den = g.mul(&ad).mul(&bd);
    let (num, den) = if den.lead().is_some_and(|l| l.is_negative()) {
        (num.neg(), den.neg())
    } else {
        (num, den)
    };
    QScalar { num, den }
}

fn mul_frac(a: &QScalar, b: &QScalar) -> QScalar {
    if a.is_zero() || b.is_zero() {
        return QScalar::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return QScalar {
            num: a.num.mul(&b.num),
            den: Poly::one(),
        };
    }
    // Cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den).
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let (an, bd) = if g1.is_one() {
        (a.num.clone(), b.den.clone())
    } else {
        (a.num.div_exact(&g1).unwrap(), b.den.div_exact(&g1).unwrap())
    };
    let (bn, ad) = if g2.is_one() {
        (b.num.clone(), a.den.clone())
    } else {
        (b.num.div_exact(&g2).unwrap(), a.den.div_exact(&g2).unwrap())
    };
    let mut num = an.mul(&bn);
    let mut den = ad.mul(&bd);
    if den.lead().is_some_and(|l| l.is_negative()) {
        num = num.neg();
        den = den.neg();
    }
    QScalar { num, den }
}

impl Default for QScalar {
    fn default() -> Self {
        QScalar::zero()
    }
}

impl From<i64> for QScalar {
    fn from(c: i64) -> Self {
        QScalar::from_int(c)
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        add_frac(self, rhs, false)
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        add_frac(self, rhs, true)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        mul_frac(self, rhs)
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    /// Panics on division by zero; use [`QScalar::checked_div`] otherwise.
    fn div(self, rhs: &QScalar) -> QScalar {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

impl AddAssign<&QScalar> for QScalar {
    fn add_assign(&mut self, rhs: &QScalar) {
        *self = add_frac(self, rhs, false);
    }
}

impl SubAssign<&QScalar> for QScalar {
    fn sub_assign(&mut self, rhs: &QScalar) {
        *self = add_frac(self, rhs, true);
    }
}

impl MulAssign<&QScalar> for QScalar {
    fn mul_assign(&mut self, rhs: &QScalar) {
        *self = mul_frac(self, rhs);
    }
}

impl core::iter::Sum for QScalar {
    fn sum<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::zero(), |acc, x| acc + x)
    }
}

impl core::iter::Product for QScalar {
    fn product<I: Iterator<Item = QScalar>>(iter: I) -> Self {
        iter.fold(QScalar::one(), |acc, x| acc * x)
    }
}

fn latex_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if k == 0 || !abs.is_one() {
            out.push_str(&alloc::format!("{abs}"));
        }
        match k {
            0 => {}
            1 => out.push('q'),
            _ => out.push_str(&alloc::format!("q^{{{k}}}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn fmt_poly(p: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { "-" } else { "+" })?;
        }
        first = false;
        match k {
            0 => write!(f, "{abs}")?,
            _ => {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                if k == 1 {
                    f.write_str("q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return fmt_poly(&self.num, f);
        }
        f.write_str("(")?;
        fmt_poly(&self.num, f)?;
        f.write_str(")/(")?;
        fmt_poly(&self.den, f)?;
        f.write_str(")")
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

/// The quantum integer `[n]_q = (q^n - q^-n)/(q - q^-1)`, extended to
/// negative `n` by `[-n]_q = -[n]_q`.
pub fn qint(n: i64) -> QScalar {
    if n == 0 {
        return QScalar::zero();
    }
    let k = n.unsigned_abs() as usize;
    // q^(1-k) + q^(3-k) + ... + q^(k-1)
    let mut coeffs = alloc::vec![0i64; 2 * k - 1];
    for i in (0..2 * k - 1).step_by(2) {
        coeffs[i] = 1;
    }
    let v = QScalar::laurent(1 - k as i64, &coeffs);
    if n < 0 {
        -v
    } else {
        v
    }
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfact(n: u32) -> QScalar {
    (1..=n as i64).map(qint).product()
}

/// `(z)_b = (b^z - 1)/(b - 1) = 1 + b + ... + b^(z-1)` with `b = q^base_exp`.
pub fn qnum_base(z: u32, base_exp: i64) -> QScalar {
    (0..z as i64).map(|i| QScalar::q_pow(base_exp * i)).sum()
}

/// `(z)_b! = (1)_b (2)_b ... (z)_b` with `b = q^base_exp`.
pub fn qfact_base(z: u32, base_exp: i64) -> QScalar {
    (1..=z).map(|k| qnum_base(k, base_exp)).product()
}

/// Exponent `e` with `q_i = q^e`, i.e. `1 - 2 * parity`.
pub fn q_i_exponent(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// Schur element of the Hecke algebra by Steinberg's product over the cells
/// of `lambda`: `prod q^content * [hook]_q`.
pub fn schur_element(lambda: &Partition) -> QScalar {
    let mut content_sum = 0i64;
    let mut acc = QScalar::one();
    for (row, col) in lambda.cells() {
        content_sum += col as i64 - row as i64;
        acc = &acc * &qint(lambda.hook(row, col) as i64);
    }
    &acc * &QScalar::q_pow(content_sum)
}

/// Helper for tests and printing: build from coefficient list of a plain
/// polynomial (lowest degree first) over a plain polynomial.
pub fn ratio(num: &[i64], den: &[i64]) -> QScalar {
    QScalar::from_parts(Poly::from_i64s(num), Poly::from_i64s(den)).expect("nonzero denominator")
}

/// Collect into a vector of `BigInt` the numerator coefficients; exposed for
/// serialization front ends.
pub fn numer_coeffs(x: &QScalar) -> Vec<BigInt> {
    x.numer().coeffs().to_vec()
}

#[doc(hidden)]
pub fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

impl QScalar {
    pub fn is_integer(&self) -> bool {
        self.den.is_one() && self.num.degree().unwrap_or(0) == 0
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(BigInt::zero))
        } else {
            None
        }
    }
}
