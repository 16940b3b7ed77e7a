//! Exact coefficient algebra: rationals, dense polynomials in the degeneracy
//! parameter λ, and quotients of such polynomials.
//!
//! Every number family in this crate is a polynomial in λ with rational
//! coefficients. [`LambdaPoly`] stores those polynomials densely in ascending
//! order and keeps them canonical (no trailing zeros), so structural equality
//! is mathematical equality.
//!
//! Text formats used on the command line:
//!
//! * a [`Rational`] prints as `p/q`, or `p` when the denominator is 1;
//! * a [`LambdaPoly`] prints as a bracketed ascending coefficient list,
//!   `[3/2,-1/2]` for (3 − λ)/2 and `[]` for zero.
//!
//! ```
//! use degen::exactmath::{LambdaPoly, parse_rational};
//!
//! let p: LambdaPoly = "[3/2, -1/2]".parse().unwrap();
//! assert_eq!(p.to_string(), "[3/2,-1/2]");
//! assert_eq!(p.eval(&parse_rational("0").unwrap()).to_string(), "3/2");
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Integer as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses the `p/q` text format. The sign goes on the numerator; the
/// denominator may be omitted. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let is_int = |t: &str, signed: bool| {
        let digits = if signed {
            t.strip_prefix(['-', '+']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num, true) {
        return Err(err());
    }
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = match den {
        Some(d) if is_int(d, false) => d.parse().map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Generalized binomial coefficient binom(n, k) for any integer `n`;
/// zero when `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for j in 0..k {
        num *= n - j;
    }
    num / factorial(k as u64)
}

/// Ordinary falling factorial (m)_j = m(m−1)⋯(m−j+1) of an integer.
pub fn int_falling_factorial(m: i64, j: u64) -> BigInt {
    (0..j as i64).fold(BigInt::one(), |acc, i| acc * (m - i))
}

/// (−1)^e as a [`Rational`].
pub fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Degree of a [`LambdaPoly`]. The zero polynomial has degree
/// [`Degree::MinusInfinity`], which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

/// Dense polynomial in λ with rational coefficients, ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LambdaPoly {
    coeffs: Vec<Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of λ^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    pub fn scale_int(&self, by: &BigInt) -> Self {
        self.scale(&Rational::from_integer(by.clone()))
    }

    /// Exact division by λ. Returns `None` when the constant term is nonzero.
    pub fn div_lambda(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(Self {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => None,
        }
    }

    /// Multiplication by λ.
    pub fn mul_lambda(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `self += a * b` without materializing the product separately.
    pub fn add_mul(&mut self, a: &LambdaPoly, b: &LambdaPoly) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, Rational::zero());
        }
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    self.coeffs[i + j] += x * y;
                }
            }
        }
        self.trim();
    }

    /// `self += c * a`.
    pub fn add_scaled(&mut self, a: &LambdaPoly, c: &Rational) {
        if c.is_zero() || a.is_zero() {
            return;
        }
        if self.coeffs.len() < a.coeffs.len() {
            self.coeffs.resize(a.coeffs.len(), Rational::zero());
        }
        for (dst, x) in self.coeffs.iter_mut().zip(&a.coeffs) {
            *dst += x * c;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl From<Rational> for LambdaPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LambdaPoly {
    fn from(c: i64) -> Self {
        Self::constant(rat(c))
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (dst, x) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *dst += x;
        }
        self.trim();
    }
}

impl SubAssign<&LambdaPoly> for LambdaPoly {
    fn sub_assign(&mut self, rhs: &LambdaPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (dst, x) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *dst -= x;
        }
        self.trim();
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $m(self, rhs: LambdaPoly) -> LambdaPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LambdaPoly> for LambdaPoly {
            type Output = LambdaPoly;
            fn $m(self, rhs: &LambdaPoly) -> LambdaPoly { (&self).$m(rhs) }
        }
        impl $tr<LambdaPoly> for &LambdaPoly {
            type Output = LambdaPoly;
            fn $m(self, rhs: LambdaPoly) -> LambdaPoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for LambdaPoly {
    type Err = Error;

    /// Accepts the bracketed list with arbitrary whitespace; trailing zero
    /// coefficients are trimmed.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParsePoly(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Ok(Self::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|c| parse_rational(c).map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

/// Ordinary falling factorial (x)_n = x(x−1)⋯(x−n+1); 1 for n = 0.
pub fn falling_factorial(x: &LambdaPoly, n: usize) -> LambdaPoly {
    (0..n).fold(LambdaPoly::one(), |acc, j| {
        let shifted = x - &LambdaPoly::from(j as i64);
        acc * shifted
    })
}

/// Degenerate falling factorial (x)_{n,λ} = x(x−λ)⋯(x−(n−1)λ); 1 for n = 0.
pub fn deg_falling_factorial(x: &LambdaPoly, n: usize) -> LambdaPoly {
    let lambda = LambdaPoly::lambda();
    (0..n).fold(LambdaPoly::one(), |acc, j| {
        let shifted = x - &lambda.scale(&rat(j as i64));
        acc * shifted
    })
}

/// binom(λ, k) = (λ)_k / k! as a polynomial in λ.
pub fn lambda_binom(k: usize) -> LambdaPoly {
    let inv = Rational::new(BigInt::one(), factorial(k as u64));
    falling_factorial(&LambdaPoly::lambda(), k).scale(&inv)
}

/// (1/λ)·binom(λ, k) = (λ−1)(λ−2)⋯(λ−k+1)/k! for k ≥ 1.
///
/// binom(λ, k) has zero constant term for k ≥ 1, so the division is an exact
/// coefficient shift.
pub fn lambda_binom_over_lambda(k: usize) -> LambdaPoly {
    assert!(k >= 1, "binom(λ, 0)/λ is not a polynomial");
    lambda_binom(k)
        .div_lambda()
        .expect("binom(λ, k) vanishes at λ = 0 for k ≥ 1")
}

/// Quotient of two polynomials in λ. Not reduced; equality is by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct LambdaRat {
    num: LambdaPoly,
    den: LambdaPoly,
}

impl LambdaRat {
    pub fn new(num: LambdaPoly, den: LambdaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn num(&self) -> &LambdaPoly {
        &self.num
    }

    pub fn den(&self) -> &LambdaPoly {
        &self.den
    }

    /// Evaluates at a rational point; `None` where the denominator vanishes.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }
}

impl From<LambdaPoly> for LambdaRat {
    fn from(num: LambdaPoly) -> Self {
        Self {
            num,
            den: LambdaPoly::one(),
        }
    }
}

impl PartialEq for LambdaRat {
    fn eq(&self, other: &Self) -> bool {
        rf_eq(self, other)
    }
}

impl Eq for LambdaRat {}

impl fmt::Display for LambdaRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// a/b = c/d iff a·d = c·b.
pub fn rf_eq(a: &LambdaRat, b: &LambdaRat) -> bool {
    &a.num * &b.den == &b.num * &a.den
}

/// Sign helper used by the number families: (−1)^e · p.
pub(crate) fn signed(p: &LambdaPoly, e: i64) -> LambdaPoly {
    if e.rem_euclid(2) == 0 {
        p.clone()
    } else {
        -p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LambdaPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            LambdaPoly::from_ints(&[-1, 1]) + LambdaPoly::from_ints(&[1, 1]),
            LambdaPoly::from_ints(&[0, 2])
        );
        assert_eq!(
            LambdaPoly::from_ints(&[-1, 1]) * LambdaPoly::from_ints(&[-2, 1]),
            LambdaPoly::from_ints(&[2, -3, 1])
        );
        let q = p("[1/3, 7, -2]");
        assert!((&q * &LambdaPoly::zero()).is_zero());
        assert_eq!((&q * &LambdaPoly::zero()).coeffs().len(), 0);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(LambdaPoly::zero().degree(), Degree::MinusInfinity);
        assert_eq!(LambdaPoly::one().degree(), Degree::Finite(0));
        assert!(Degree::MinusInfinity < Degree::Finite(0));
        let a = p("[1,2,3]");
        let b = p("[0,1]");
        assert_eq!((&a * &b).degree(), Degree::Finite(3));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(LambdaPoly::from_ints(&[2, -3, 1]).eval(&rat(0)), rat(2));
        assert_eq!(p("[3/2, -1/2]").eval(&rat(0)), ratio(3, 2));
        assert_eq!(LambdaPoly::from_ints(&[-1, 1]).eval(&rat(1)), rat(0));
    }

    #[test]
    fn falling_factorial_examples() {
        let lam = LambdaPoly::lambda();
        assert_eq!(falling_factorial(&lam, 0), LambdaPoly::one());
        let lm1 = &lam - &LambdaPoly::one();
        assert_eq!(
            falling_factorial(&lm1, 2),
            LambdaPoly::from_ints(&[2, -3, 1])
        );
        assert_eq!(falling_factorial(&lam, 3).eval(&rat(3)), rat(6));
    }

    #[test]
    fn deg_falling_factorial_examples() {
        assert_eq!(
            deg_falling_factorial(&LambdaPoly::one(), 2),
            LambdaPoly::from_ints(&[1, -1])
        );
        // (λ−N)_{2,λ} with N = 1
        let x = &LambdaPoly::lambda() - &LambdaPoly::one();
        assert_eq!(
            deg_falling_factorial(&x, 2),
            LambdaPoly::from_ints(&[1, -1])
        );
        for n in 0..6 {
            let x0 = ratio(-5, 3);
            let v = deg_falling_factorial(&LambdaPoly::constant(x0.clone()), n).eval(&rat(0));
            assert_eq!(v, num_traits::pow(x0, n));
        }
    }

    #[test]
    fn binom_over_lambda_examples() {
        assert_eq!(lambda_binom_over_lambda(1), LambdaPoly::one());
        assert_eq!(lambda_binom_over_lambda(2), p("[-1/2, 1/2]"));
        assert_eq!(lambda_binom_over_lambda(3), p("[1/3, -1/2, 1/6]"));
    }

    #[test]
    fn binom_over_lambda_times_lambda() {
        for k in 1..=20 {
            let lhs = lambda_binom_over_lambda(k).mul_lambda();
            let rhs = falling_factorial(&LambdaPoly::lambda(), k)
                .scale(&Rational::new(BigInt::one(), factorial(k as u64)));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn rational_function_equality() {
        let lam = LambdaPoly::lambda();
        let a = LambdaRat::new(lam.clone(), lam.scale(&rat(2))).unwrap();
        let b = LambdaRat::new(LambdaPoly::one(), LambdaPoly::from(2)).unwrap();
        assert!(rf_eq(&a, &b));
        let c = LambdaRat::from(LambdaPoly::from_ints(&[-1, 1]));
        let d = LambdaRat::from(LambdaPoly::from_ints(&[-2, 1]));
        assert!(!rf_eq(&c, &d));
        let e = LambdaRat::new(lambda_binom(3), lambda_binom(1)).unwrap();
        let f = LambdaRat::from(LambdaPoly::from_ints(&[2, -3, 1]).scale(&ratio(1, 6)));
        assert!(rf_eq(&e, &f));
        assert_eq!(
            LambdaRat::new(LambdaPoly::one(), LambdaPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn text_formats() {
        assert_eq!(ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(rat(7).to_string(), "7");
        assert_eq!(parse_rational("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("+4/6").unwrap(), ratio(2, 3));
        for bad in ["", "1.5", "1/0", "a", "3/-2", "/2", "1/"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
        assert_eq!(LambdaPoly::zero().to_string(), "[]");
        assert_eq!(p("[ ]"), LambdaPoly::zero());
        assert_eq!(p("[3/2, -1/2]").to_string(), "[3/2,-1/2]");
        assert!("3/2".parse::<LambdaPoly>().is_err());
        assert!("[1,,2]".parse::<LambdaPoly>().is_err());
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(4, -1), BigInt::from(0));
    }
}
