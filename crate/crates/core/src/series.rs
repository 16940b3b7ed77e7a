//! Truncated formal power series in t with [`LambdaPoly`] coefficients.
//!
//! A [`TruncSeries`] of order T keeps the coefficients of t^0 … t^{T−1}.
//! Coefficients are always stored against t^n, never t^n/n!; exponential
//! generating functions are rescaled by n! where they are compared.
//! Binary operations between series of different orders truncate to the
//! smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, deg_falling_factorial, factorial, lambda_binom_over_lambda, rat, LambdaPoly, Rational,
};

/// Sign in front of t, used to build f(t) or f(−t).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// sign^n as ±1.
    pub fn pow(self, n: usize) -> i64 {
        match self {
            Sign::Minus if n % 2 == 1 => -1,
            _ => 1,
        }
    }
}

/// Base of a binomial power series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinomialBase {
    /// (1 + t)^e
    OnePlusT,
    /// (1 − t)^e
    OneMinusT,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<LambdaPoly>,
}

impl TruncSeries {
    /// Series from ascending coefficients; the order is `coeffs.len()`.
    pub fn from_coeffs(coeffs: Vec<LambdaPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::OrderTooSmall { min: 1, got: 0 });
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "series order must be positive");
        Self {
            coeffs: vec![LambdaPoly::zero(); order],
        }
    }

    pub fn constant(c: LambdaPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(LambdaPoly::one(), order)
    }

    /// The series t.
    pub fn t(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 1 {
            s.coeffs[1] = LambdaPoly::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Coefficient of t^n.
    pub fn coeff(&self, n: usize) -> Result<&LambdaPoly> {
        self.coeffs.get(n).ok_or(Error::CoeffOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1 && order <= self.order());
        Self {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn scale(&self, by: &LambdaPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// f(t) ↦ f(−t).
    pub fn negate_arg(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Division by t. The constant term must vanish; the order drops by one.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidComposition);
        }
        if self.order() < 2 {
            return Err(Error::OrderTooSmall {
                min: 2,
                got: self.order(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplication by t, keeping the order.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order());
        coeffs.push(LambdaPoly::zero());
        coeffs.extend(self.coeffs[..self.order() - 1].iter().cloned());
        Self { coeffs }
    }

    /// Truncated power self^e.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// outer(inner(t)), truncated to the smaller order. `inner` must have a
    /// zero constant term.
    pub fn compose(&self, inner: &TruncSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InvalidComposition);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Σ_j outer_j·inner^j, with inner^j vanishing below t^j
        let mut acc = Self::constant(self.coeffs[0].clone(), order);
        let mut power = inner.clone();
        for j in 1..order {
            let c = &self.coeffs[j];
            if !c.is_zero() {
                for m in j..order {
                    acc.coeffs[m].add_mul(c, &power.coeffs[m]);
                }
            }
            if j + 1 < order {
                power = &power * &inner;
            }
        }
        Ok(acc)
    }

    /// N-fold termwise derivative. The result has order `order − n`.
    pub fn derive(&self, n: usize) -> Result<Self> {
        if n >= self.order() {
            return Err(Error::EmptyDerivative {
                n,
                order: self.order(),
            });
        }
        let coeffs = (0..self.order() - n)
            .map(|m| {
                // d^n/dt^n t^{m+n} = (m+n)!/m! t^m
                let f = factorial((m + n) as u64) / factorial(m as u64);
                self.coeffs[m + n].scale_int(&f)
            })
            .collect();
        Ok(Self { coeffs })
    }

    /// Termwise antiderivative with zero constant term; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(LambdaPoly::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(BigInt::one(), BigInt::from(n + 1))));
        }
        Self { coeffs }
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Mul<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;

    /// Truncated Cauchy product.
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LambdaPoly::zero(); order];
        for (i, a) in self.coeffs[..order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..order - i].iter().enumerate() {
                coeffs[i + j].add_mul(a, b);
            }
        }
        TruncSeries { coeffs }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {c}")?;
        }
        Ok(())
    }
}

/// log_λ(1 + sign·t) = ((1 + sign·t)^λ − 1)/λ to order T.
///
/// The coefficient of t^k is sign^k·(λ−1)(λ−2)⋯(λ−k+1)/k!, i.e.
/// sign^k·binom(λ, k)/λ.
pub fn make_deg_log(sign: Sign, order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    for k in 1..order {
        s.coeffs[k] = lambda_binom_over_lambda(k).scale(&rat(sign.pow(k)));
    }
    s
}

/// e_λ^x(sign·t) = Σ (x)_{n,λ} sign^n t^n/n! to order T.
pub fn make_deg_exp(x: &LambdaPoly, sign: Sign, order: usize) -> TruncSeries {
    assert!(order >= 1, "series order must be positive");
    let coeffs = (0..order)
        .map(|n| {
            let c = Rational::new(BigInt::from(sign.pow(n)), factorial(n as u64));
            deg_falling_factorial(x, n).scale(&c)
        })
        .collect();
    TruncSeries { coeffs }
}

/// (1 ± t)^e for any integer exponent, to order T. Coefficient of t^k is
/// binom(e, k)·(±1)^k, so (1 − t)^{−r} yields binom(k+r−1, k).
pub fn make_binomial_power(base: BinomialBase, exponent: i64, order: usize) -> TruncSeries {
    assert!(order >= 1, "series order must be positive");
    let sign = match base {
        BinomialBase::OnePlusT => Sign::Plus,
        BinomialBase::OneMinusT => Sign::Minus,
    };
    let coeffs = (0..order)
        .map(|k| {
            let c = binomial(exponent, k as i64) * sign.pow(k);
            LambdaPoly::constant(Rational::from_integer(c))
        })
        .collect();
    TruncSeries { coeffs }
}

/// Coefficient extraction with a range check.
pub fn series_coeff(a: &TruncSeries, n: usize) -> Result<LambdaPoly> {
    a.coeff(n).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{ratio, LambdaPoly};
    use num_traits::Zero;

    fn ints(order: usize, c: &[i64]) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        for (i, &v) in c.iter().enumerate().take(order) {
            s.coeffs[i] = LambdaPoly::from(v);
        }
        s
    }

    #[test]
    fn product_examples() {
        let a = ints(3, &[1, 1]);
        let b = ints(3, &[1, -1]);
        assert_eq!(&a * &b, ints(3, &[1, 0, -1]));
        let c = ints(5, &[2, 3, 0, 7]);
        assert_eq!(&c * &TruncSeries::one(5), c);
        // mixed orders truncate
        assert_eq!((&c * &TruncSeries::one(3)).order(), 3);
        assert_eq!((&c + &ints(2, &[1])).order(), 2);
    }

    #[test]
    fn compose_examples() {
        let outer = ints(6, &[3, 1, 4, 1, 5, 9]);
        assert_eq!(outer.compose(&TruncSeries::zero(6)).unwrap(), ints(6, &[3]));
        assert_eq!(outer.compose(&TruncSeries::t(6)).unwrap(), outer);
        assert_eq!(
            outer.compose(&TruncSeries::one(6)).unwrap_err(),
            Error::InvalidComposition
        );
        // 1/(1−u) with u = t + t² gives Fibonacci numbers
        let geo = make_binomial_power(BinomialBase::OneMinusT, -1, 8);
        let got = geo.compose(&ints(8, &[0, 1, 1])).unwrap();
        assert_eq!(got, ints(8, &[1, 1, 2, 3, 5, 8, 13, 21]));
    }

    #[test]
    fn exp_of_log_is_one_plus_t() {
        for order in [2, 5, 10] {
            let e = make_deg_exp(&LambdaPoly::one(), Sign::Plus, order);
            let l = make_deg_log(Sign::Plus, order);
            assert_eq!(e.compose(&l).unwrap(), ints(order, &[1, 1]));
        }
    }

    #[test]
    fn derive_examples() {
        assert_eq!(ints(3, &[1, 1, 1]).derive(1).unwrap(), ints(2, &[1, 2]));
        assert_eq!(ints(4, &[5]).derive(1).unwrap(), TruncSeries::zero(3));
        assert_eq!(
            ints(3, &[1, 1, 1]).derive(3).unwrap_err(),
            Error::EmptyDerivative { n: 3, order: 3 }
        );
        assert_eq!(ints(5, &[0, 0, 0, 1]).derive(2).unwrap(), ints(3, &[0, 6]));
    }

    #[test]
    fn deg_log_examples() {
        let y = make_deg_log(Sign::Plus, 8);
        assert!(y.coeff(0).unwrap().is_zero());
        assert_eq!(*y.coeff(1).unwrap(), LambdaPoly::one());
        assert_eq!(
            series_coeff(&y, 2).unwrap(),
            "[-1/2,1/2]".parse::<LambdaPoly>().unwrap()
        );
        for k in 1..8 {
            let classical = ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            assert_eq!(y.coeff(k).unwrap().eval(&Rational::zero()), classical);
        }
        assert_eq!(
            series_coeff(&y, 8).unwrap_err(),
            Error::CoeffOutOfRange { index: 8, order: 8 }
        );
    }

    /// The stored log coefficient against the literal λ^{k−1}(1)_{k,1/λ}/k!
    /// evaluated at many nonzero rational λ.
    #[test]
    fn deg_log_matches_literal_form() {
        let y = make_deg_log(Sign::Plus, 13);
        for k in 1..13usize {
            for (p, q) in [(1, 1), (-2, 3), (5, 7), (7, 2), (-9, 4), (11, 5)] {
                let lam = ratio(p, q);
                let inv = Rational::one() / &lam;
                let mut prod = Rational::one();
                for j in 0..k {
                    prod *= Rational::one() - rat(j as i64) * &inv;
                }
                let literal = num_traits::pow(lam.clone(), k - 1) * prod
                    / Rational::from_integer(factorial(k as u64));
                assert_eq!(y.coeff(k).unwrap().eval(&lam), literal, "k = {k}");
            }
        }
    }

    #[test]
    fn deg_exp_examples() {
        let e = make_deg_exp(&LambdaPoly::one(), Sign::Minus, 4);
        assert_eq!(*e.coeff(0).unwrap(), LambdaPoly::one());
        assert_eq!(*e.coeff(1).unwrap(), LambdaPoly::from(-1));
        assert_eq!(
            *e.coeff(2).unwrap(),
            "[1/2,-1/2]".parse::<LambdaPoly>().unwrap()
        );
        for n in 0..4 {
            let c = e.coeff(n).unwrap().eval(&Rational::zero());
            assert_eq!(
                c,
                Rational::new(BigInt::from(Sign::Minus.pow(n)), factorial(n as u64))
            );
        }
        let x = "[2/3,5]".parse::<LambdaPoly>().unwrap();
        assert_eq!(
            *make_deg_exp(&x, Sign::Plus, 3).coeff(0).unwrap(),
            LambdaPoly::one()
        );
    }

    #[test]
    fn binomial_power_examples() {
        assert_eq!(
            make_binomial_power(BinomialBase::OneMinusT, -1, 5),
            ints(5, &[1, 1, 1, 1, 1])
        );
        assert_eq!(
            make_binomial_power(BinomialBase::OneMinusT, -2, 5),
            ints(5, &[1, 2, 3, 4, 5])
        );
        assert_eq!(
            make_binomial_power(BinomialBase::OnePlusT, 2, 5),
            ints(5, &[1, 2, 1])
        );
        let a = make_binomial_power(BinomialBase::OneMinusT, 3, 8);
        let b = make_binomial_power(BinomialBase::OneMinusT, -3, 8);
        assert_eq!(&a * &b, TruncSeries::one(8));
    }

    #[test]
    fn harmonic_gf_spot_check() {
        let f = -&make_deg_log(Sign::Minus, 6);
        let g = &f * &make_binomial_power(BinomialBase::OneMinusT, -1, 6);
        assert_eq!(
            *g.coeff(2).unwrap(),
            "[3/2,-1/2]".parse::<LambdaPoly>().unwrap()
        );
    }

    #[test]
    fn display_lines() {
        let s = ints(3, &[1, 0, -2]);
        assert_eq!(s.to_string(), "0: [1]\n1: []\n2: [-2]\n");
    }
}
