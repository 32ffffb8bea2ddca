//! Exact arithmetic: rationals, univariate polynomials and the rational
//! function field Q(v) that serves as coefficient field for everything else.
//!
//! All values are kept in a canonical form so that equality is syntactic:
//! rationals are reduced with positive denominator, polynomials carry no
//! trailing zero coefficients, and rational functions have a monic
//! denominator coprime to the numerator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// An exact rational number (arbitrary precision, always reduced).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(BigRational);

impl Q {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Q(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Q(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Q(BigRational::zero())
    }

    pub fn one() -> Self {
        Q(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Q(self.0.abs())
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }
}

impl Default for Q {
    fn default() -> Self {
        Q::zero()
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parses `p`, `-p` or `p/q`.
impl FromStr for Q {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |_| format!("invalid rational `{s}`");
        match s.trim().split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(bad)?;
                let d = BigInt::from_str(d.trim()).map_err(bad)?;
                if d.is_zero() {
                    return Err(format!("invalid rational `{s}`: zero denominator"));
                }
                Ok(Q(BigRational::new(n, d)))
            }
            None => {
                let n = BigInt::from_str(s.trim()).map_err(bad)?;
                Ok(Q(BigRational::from_integer(n)))
            }
        }
    }
}

macro_rules! impl_q_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Q {
            type Output = Q;
            fn $method(self, rhs: Q) -> Q {
                Q((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Q> for &Q {
            type Output = Q;
            fn $method(self, rhs: &Q) -> Q {
                Q((&self.0).$method(&rhs.0))
            }
        }
    };
}

impl_q_binop!(Add, add);
impl_q_binop!(Sub, sub);
impl_q_binop!(Mul, mul);

impl Div for Q {
    type Output = Q;
    fn div(self, rhs: Q) -> Q {
        assert!(!rhs.is_zero(), "division by zero");
        Q(self.0 / rhs.0)
    }
}

impl Div<&Q> for &Q {
    type Output = Q;
    fn div(self, rhs: &Q) -> Q {
        assert!(!rhs.is_zero(), "division by zero");
        Q(&self.0 / &rhs.0)
    }
}

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl Neg for &Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-&self.0)
    }
}

/// A univariate polynomial over `Q`, stored by ascending degree with a
/// nonzero leading coefficient (the zero polynomial stores nothing).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Q>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn variable() -> Self {
        Polynomial::from_coeffs(vec![Q::zero(), Q::one()])
    }

    /// Coefficients by ascending degree; trailing zeros are dropped.
    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from integer coefficients, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| Q::from_int(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Q::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn divrem(&self, divisor: &Polynomial) -> Option<(Polynomial, Polynomial)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut new = rem.coeffs.clone();
            for (k, c) in divisor.coeffs.iter().enumerate() {
                new[k + shift] = &new[k + shift] - &(c * &factor);
            }
            rem = Polynomial::from_coeffs(new);
        }
        Some((Polynomial::from_coeffs(quot), rem))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        match other.divrem(self) {
            Some((_, rem)) => rem.is_zero(),
            None => false,
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&l.recip().unwrap()),
        }
    }

    /// Splits `self = c * prim` with `prim` having coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn scalar_primitive(&self) -> (Q, Polynomial) {
        if self.is_zero() {
            return (Q::zero(), Polynomial::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut num_gcd = BigInt::zero();
        for n in &ints {
            num_gcd = num_gcd.gcd(n);
        }
        if ints.last().unwrap().is_negative() {
            num_gcd = -num_gcd;
        }
        let prim = Polynomial::from_coeffs(
            ints.iter().map(|n| Q::from_big(n / &num_gcd, BigInt::one())).collect(),
        );
        (Q::from_big(num_gcd, den_lcm), prim)
    }

    fn fmt_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        var: &str,
        mul_sep: &str,
        power: fn(&str, usize) -> String,
    ) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", power(var, k))?;
            } else {
                write!(f, "{}{}{}", mag, mul_sep, power(var, k))?;
            }
        }
        Ok(())
    }

    pub fn to_latex(&self) -> String {
        format!("{}", LatexPoly(self))
    }
}

struct LatexPoly<'a>(&'a Polynomial);

impl fmt::Display for LatexPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "\\nu", "", |v, k| {
            if k == 1 {
                v.to_string()
            } else {
                format!("{v}^{{{k}}}")
            }
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "v", "*", |v, k| {
            if k == 1 {
                v.to_string()
            } else {
                format!("{v}^{k}")
            }
        })
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Evaluation failed because the denominator vanishes at the point.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("pole at v = {at}")]
pub struct PoleError {
    pub at: Q,
}

/// An element of the field Q(v): `num/den` with `den` monic and
/// `gcd(num, den) = 1`. Zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduced(num, den))
    }

    fn reduced(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.divrem(&g).unwrap().0;
        let den = den.divrem(&g).unwrap().0;
        let lead = den.leading().unwrap().recip().unwrap();
        RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        RationalFunction::constant(Q::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        RationalFunction::constant(Q::new(n, d))
    }

    /// The indeterminate `v` as a field element.
    pub fn variable() -> Self {
        RationalFunction::from_polynomial(Polynomial::variable())
    }

    pub fn zero() -> Self {
        RationalFunction::constant(Q::zero())
    }

    pub fn one() -> Self {
        RationalFunction::constant(Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `Some(c)` when the element is a constant.
    pub fn as_constant(&self) -> Option<Q> {
        if self.den.is_one() && self.num.degree().map_or(true, |d| d == 0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduced(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.recip().map(|r| self * &r)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction::reduced(self.num.pow(e), self.den.pow(e))
    }

    /// Exact evaluation at `x`; fails on a pole.
    pub fn eval(&self, x: &Q) -> Result<Q, PoleError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(PoleError { at: x.clone() });
        }
        Ok(&self.num.eval(x) / &d)
    }

    fn fmt_parts(&self) -> (String, Option<String>) {
        if self.is_zero() {
            return ("0".to_string(), None);
        }
        let (c, prim) = self.num.scalar_primitive();
        let a = Q::from_big(c.numer().clone(), BigInt::one());
        let b = c.denom().clone();
        let num_str = if prim.is_one() {
            format!("{a}")
        } else if a.is_one() {
            format!("{prim}")
        } else if (-&a).is_one() {
            format!("-({prim})")
        } else {
            format!("{a}*({prim})")
        };
        let den_poly = !self.den.is_one();
        let den_str = if !den_poly && b.is_one() {
            None
        } else if !den_poly {
            Some(format!("{b}"))
        } else if b.is_one() {
            Some(format!("({})", self.den))
        } else {
            Some(format!("({}*({}))", b, self.den))
        };
        (num_str, den_str)
    }

    /// Rendering suitable as a multiplicative factor: wrapped in parens
    /// whenever the expression is a sum or a quotient.
    pub fn factor_string(&self) -> String {
        let (num, den) = self.fmt_parts();
        match den {
            None => {
                if num.contains(" + ") || num.contains(" - ") {
                    format!("({num})")
                } else {
                    num
                }
            }
            Some(d) => {
                let n = if num.contains(" + ") || num.contains(" - ") {
                    format!("({num})")
                } else {
                    num
                };
                format!("{n}/{d}")
            }
        }
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }

    /// Splits into an overall sign and the factor string of the magnitude,
    /// so callers can join terms with `+`/`-`.
    pub fn signed_factor(&self) -> (bool, String) {
        if self.is_zero() {
            return (false, "0".to_string());
        }
        let (c, _) = self.num.scalar_primitive();
        if c.is_negative() {
            (true, (-self).factor_string())
        } else {
            (false, self.factor_string())
        }
    }

    /// LaTeX of the magnitude (numerator sign stripped).
    pub fn abs_latex(&self) -> String {
        let (c, _) = self.num.scalar_primitive();
        if c.is_negative() {
            (-self).to_latex()
        } else {
            self.to_latex()
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.fmt_parts();
        match den {
            None => write!(f, "{num}"),
            Some(d) => {
                if num.contains(" + ") || num.contains(" - ") {
                    write!(f, "({num})/{d}")
                } else {
                    write!(f, "{num}/{d}")
                }
            }
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! impl_rf_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_rf_value_binop!(Add, add);
impl_rf_value_binop!(Sub, sub);
impl_rf_value_binop!(Mul, mul);
impl_rf_value_binop!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

/// Rational roots of a polynomial, multiplicity stripped, plus the cofactor
/// that remains after removing them (primitive integer form, or 1 if the
/// polynomial splits over Q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootAnalysis {
    pub rational: Vec<Q>,
    pub residual: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("zero polynomial has no well-defined root set")]
pub struct ZeroPolynomial;

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            small.push(i.clone());
            large.push(&n / &i);
        }
        i += 1;
    }
    if small.last() == large.last() {
        large.pop();
    }
    small.extend(large.into_iter().rev());
    small
}

/// All rational roots by the rational root theorem on the primitive integer
/// form, with deflation to expose the non-rational cofactor.
pub fn rational_roots(p: &Polynomial) -> Result<RootAnalysis, ZeroPolynomial> {
    if p.is_zero() {
        return Err(ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let (_, mut work) = p.scalar_primitive();
    if work.coeff(0).is_zero() {
        roots.push(Q::zero());
        while work.coeff(0).is_zero() && work.degree() > Some(0) {
            work = work.divrem(&Polynomial::variable()).unwrap().0;
        }
    }
    if work.degree() > Some(0) {
        let trailing = work.coeff(0);
        let leading = work.leading().unwrap().clone();
        'candidates: for num in positive_divisors(trailing.numer()) {
            for den in positive_divisors(leading.numer()) {
                for sign in [1i64, -1] {
                    let cand = Q::from_big(&num * BigInt::from(sign), den.clone());
                    if work.eval(&cand).is_zero() {
                        roots.push(cand.clone());
                        let lin = Polynomial::from_coeffs(vec![-&cand, Q::one()]);
                        while work.eval(&cand).is_zero() && work.degree() > Some(0) {
                            work = work.divrem(&lin).unwrap().0;
                        }
                        if work.degree() == Some(0) {
                            break 'candidates;
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    let residual = if work.degree() > Some(0) {
        work.scalar_primitive().1
    } else {
        Polynomial::one()
    };
    Ok(RootAnalysis { rational: roots, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> RationalFunction {
        RationalFunction::variable()
    }

    #[test]
    fn q_parsing_and_display() {
        assert_eq!("1/2".parse::<Q>().unwrap(), Q::new(1, 2));
        assert_eq!("-3/6".parse::<Q>().unwrap(), Q::new(-1, 2));
        assert_eq!("7".parse::<Q>().unwrap(), Q::from_int(7));
        assert!("1/0".parse::<Q>().is_err());
        assert_eq!(Q::new(-1, 2).to_string(), "-1/2");
        assert_eq!(Q::from_int(4).to_string(), "4");
    }

    #[test]
    fn field_ops_examples() {
        // (v - 1) + 1 = v
        let lhs = &(&v() - &RationalFunction::one()) + &RationalFunction::one();
        assert_eq!(lhs, v());

        // (v^2 - 1)/(v - 1) = v + 1
        let num = RationalFunction::from_polynomial(Polynomial::from_ints(&[-1, 0, 1]));
        let den = RationalFunction::from_polynomial(Polynomial::from_ints(&[-1, 1]));
        let quot = &num / &den;
        assert_eq!(quot, &v() + &RationalFunction::one());
    }

    #[test]
    fn determinant_of_printed_columns() {
        // (1/81)*[(4-2v)^2 - (-2+4v)^2] = (4/27)(1-v)(1+v)
        let a = RationalFunction::from_polynomial(Polynomial::from_ints(&[4, -2]));
        let b = RationalFunction::from_polynomial(Polynomial::from_ints(&[-2, 4]));
        let det = &(&(&a * &a) - &(&b * &b)) * &RationalFunction::from_ratio(1, 81);
        let expected = &(&RationalFunction::from_polynomial(Polynomial::from_ints(&[1, -1]))
            * &RationalFunction::from_polynomial(Polynomial::from_ints(&[1, 1])))
            * &RationalFunction::from_ratio(4, 27);
        assert_eq!(det, expected);
    }

    #[test]
    fn evaluation_and_poles() {
        // (2v - 1)/(v - 1) at v = 2 -> 3
        let f = RationalFunction::new(Polynomial::from_ints(&[-1, 2]), Polynomial::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f.eval(&Q::from_int(2)).unwrap(), Q::from_int(3));
        assert_eq!(f.eval(&Q::one()), Err(PoleError { at: Q::one() }));

        // (-1 + 2v)/(12(-1 + v)) at v = 2 -> 1/4
        let g = RationalFunction::new(Polynomial::from_ints(&[-1, 2]), Polynomial::from_ints(&[-12, 12])).unwrap();
        assert_eq!(g.eval(&Q::from_int(2)).unwrap(), Q::new(1, 4));
    }

    #[test]
    fn cancellation_is_automatic() {
        let f = RationalFunction::new(Polynomial::from_ints(&[-1, 0, 1]), Polynomial::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f.den(), &Polynomial::one());
        assert_eq!(f.num(), &Polynomial::from_ints(&[1, 1]));
    }

    #[test]
    fn rational_roots_examples() {
        // 1 - 4v + 4v^2 -> {1/2}
        let r = rational_roots(&Polynomial::from_ints(&[1, -4, 4])).unwrap();
        assert_eq!(r.rational, vec![Q::new(1, 2)]);
        assert_eq!(r.residual, Polynomial::one());

        // (1 - v)(1 + v) -> {-1, 1}
        let p = &Polynomial::from_ints(&[1, -1]) * &Polynomial::from_ints(&[1, 1]);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r.rational, vec![Q::from_int(-1), Q::from_int(1)]);

        // -2 + 5v - 2v^2 -> {1/2, 2}
        let r = rational_roots(&Polynomial::from_ints(&[-2, 5, -2])).unwrap();
        assert_eq!(r.rational, vec![Q::new(1, 2), Q::from_int(2)]);

        assert_eq!(rational_roots(&Polynomial::zero()), Err(ZeroPolynomial));
    }

    #[test]
    fn rational_roots_verified_by_substitution() {
        let polys = [
            Polynomial::from_ints(&[1, -4, 4]),
            Polynomial::from_ints(&[-2, 5, -2]),
            Polynomial::from_ints(&[0, 1, 1]),
            Polynomial::from_ints(&[1, -1, 1]), // no rational roots
            Polynomial::from_ints(&[6, -5, 1]),
        ];
        for p in &polys {
            let r = rational_roots(p).unwrap();
            for root in &r.rational {
                assert!(p.eval(root).is_zero(), "{p} at {root}");
            }
            for probe in [Q::from_int(3), Q::new(7, 5), Q::from_int(-4)] {
                if !r.rational.contains(&probe) {
                    assert!(!p.eval(&probe).is_zero(), "{p} at {probe}");
                }
            }
        }
    }

    #[test]
    fn irreducible_residual_reported() {
        // (v - 2)(v^2 - v + 1): the quadratic has no rational roots
        let p = &Polynomial::from_ints(&[-2, 1]) * &Polynomial::from_ints(&[1, -1, 1]);
        let r = rational_roots(&p).unwrap();
        assert_eq!(r.rational, vec![Q::from_int(2)]);
        assert_eq!(r.residual, Polynomial::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn display_matches_expected_layout() {
        let g = RationalFunction::new(Polynomial::from_ints(&[-1, 2]), Polynomial::from_ints(&[-12, 12])).unwrap();
        assert_eq!(g.to_string(), "(-1 + 2*v)/(12*(-1 + v))");
        let third = RationalFunction::from_ratio(1, 3);
        assert_eq!(third.to_string(), "1/3");
        let vth = &v() * &RationalFunction::from_ratio(1, 3);
        assert_eq!(vth.to_string(), "v/3");
        assert_eq!(RationalFunction::zero().to_string(), "0");
        let poly = RationalFunction::from_polynomial(Polynomial::from_ints(&[4, -2]));
        assert_eq!(poly.to_string(), "-2*(-2 + v)");
    }

    #[test]
    fn latex_rendering() {
        let g = RationalFunction::new(Polynomial::from_ints(&[-1, 2]), Polynomial::from_ints(&[-1, 1])).unwrap();
        assert_eq!(g.to_latex(), "\\frac{-1 + 2\\nu}{-1 + \\nu}");
    }

    #[test]
    fn normalization_is_idempotent() {
        let f = RationalFunction::new(Polynomial::from_ints(&[2, 2]), Polynomial::from_ints(&[4])).unwrap();
        let g = RationalFunction::new(f.num().clone(), f.den().clone()).unwrap();
        assert_eq!(f, g);
        assert!(f.den().is_one());
    }
}
