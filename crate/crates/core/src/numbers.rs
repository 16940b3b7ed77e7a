//! The degenerate number families as polynomials in λ, together with their
//! classical (λ = 0) counterparts.
//!
//! Families with more than one construction expose each route separately so
//! that [`crate::identities`] can compare them:
//!
//! | family | routes |
//! |---|---|
//! | H_{n,λ} | partial sums of (1/λ)binom(λ,k)(−1)^{k−1} |
//! | H^{(r)}_{n,λ} | iterated partial sums, binomial closed form, coefficients of −log_λ(1−t)/(1−t)^r |
//! | D_{n,λ} | (λ−1)_n/(n+1) |
//! | D^{(r)}_{n,λ} | n!·[t^n](log_λ(1+t)/t)^r |
//! | S_{1,λ}(n,k) | triangle recurrence, checked against the basis change |
//! | d_{n,λ} | finite sum, coefficients of e_λ(−t)/(1−t) |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, deg_falling_factorial, factorial, falling_factorial, lambda_binom_over_lambda, rat,
    signed, LambdaPoly, Rational,
};
use crate::series::{make_binomial_power, make_deg_exp, make_deg_log, BinomialBase, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    DegHarmonic,
    DegHyperharmonic,
    DegDaehee,
    DegDaeheeOrder,
    DegStirling1,
    DegDerangement,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::DegHarmonic,
        Family::DegHyperharmonic,
        Family::DegDaehee,
        Family::DegDaeheeOrder,
        Family::DegStirling1,
        Family::DegDerangement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DegHarmonic => "deg-harmonic",
            Family::DegHyperharmonic => "deg-hyperharmonic",
            Family::DegDaehee => "deg-daehee",
            Family::DegDaeheeOrder => "deg-daehee-order",
            Family::DegStirling1 => "deg-stirling1",
            Family::DegDerangement => "deg-derangement",
        }
    }

    /// Parameter names in the order they appear in a parameter tuple.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::DegHarmonic | Family::DegDaehee | Family::DegDerangement => &["n"],
            Family::DegHyperharmonic | Family::DegDaeheeOrder => &["n", "r"],
            Family::DegStirling1 => &["n", "k"],
        }
    }

    /// Rejects parameter tuples outside the family's domain.
    pub fn check_params(self, params: &[i64]) -> Result<()> {
        let names = self.param_names();
        if params.len() != names.len() {
            return Err(Error::OutOfTriangle(format!(
                "{} takes parameters ({})",
                self.name(),
                names.join(", ")
            )));
        }
        let bad = |what: &str| Err(Error::OutOfTriangle(format!("{what} for {}", self.name())));
        if params.iter().any(|&p| p < 0) {
            return bad("negative parameter");
        }
        match self {
            Family::DegDaeheeOrder if params[1] < 1 => bad("r must be at least 1"),
            Family::DegStirling1 if params[1] > params[0] => bad("k must satisfy 0 ≤ k ≤ n"),
            _ => Ok(()),
        }
    }

    /// Symbolic value at a parameter tuple.
    pub fn value(self, params: &[i64]) -> Result<LambdaPoly> {
        self.check_params(params)?;
        let p = |i: usize| params[i] as usize;
        Ok(match self {
            Family::DegHarmonic => deg_harmonic(p(0)),
            Family::DegHyperharmonic => {
                deg_hyperharmonic(p(0), p(1), HyperharmonicRoute::Recurrence)
            }
            Family::DegDaehee => deg_daehee(p(0)),
            Family::DegDaeheeOrder => deg_daehee_order(p(0), p(1)),
            Family::DegStirling1 => deg_stirling1(p(0), p(1)),
            Family::DegDerangement => deg_derangement(p(0)),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// A computed value tagged with its family and parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyValue {
    pub family: Family,
    pub params: Vec<i64>,
    pub value: LambdaPoly,
}

impl FamilyValue {
    pub fn compute(family: Family, params: Vec<i64>) -> Result<Self> {
        let value = family.value(&params)?;
        Ok(Self {
            family,
            params,
            value,
        })
    }
}

/// H^{(0)}_{n,λ} = (1/λ)binom(λ,n)(−1)^{n−1}, and 0 at n = 0.
pub fn deg_hyperharmonic_base(n: usize) -> LambdaPoly {
    if n == 0 {
        return LambdaPoly::zero();
    }
    signed(&lambda_binom_over_lambda(n), n as i64 - 1)
}

/// Degenerate harmonic number H_{n,λ}.
pub fn deg_harmonic(n: usize) -> LambdaPoly {
    (1..=n).fold(LambdaPoly::zero(), |mut acc, k| {
        acc += &deg_hyperharmonic_base(k);
        acc
    })
}

/// H_{0,λ} … H_{n_max,λ}.
pub fn deg_harmonic_row(n_max: usize) -> Vec<LambdaPoly> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut acc = LambdaPoly::zero();
    out.push(acc.clone());
    for k in 1..=n_max {
        acc += &deg_hyperharmonic_base(k);
        out.push(acc.clone());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperharmonicRoute {
    /// Iterated partial sums filled as an (n, r) table.
    Recurrence,
    /// Σ_l (1/λ)binom(λ,l)(−1)^{l−1} binom(n−l+r−1, r−1).
    ClosedForm,
    /// Coefficient of t^n in −log_λ(1−t)/(1−t)^r.
    GeneratingFunction,
}

/// Degenerate hyperharmonic numbers H^{(r)}_{n,λ} for 0 ≤ n ≤ n_max and
/// 0 ≤ r ≤ r_max, filled by H^{(r)}_n = H^{(r)}_{n−1} + H^{(r−1)}_n.
#[derive(Debug, Clone)]
pub struct HyperharmonicTable {
    n_max: usize,
    r_max: usize,
    grid: Vec<Vec<LambdaPoly>>,
}

impl HyperharmonicTable {
    pub fn new(n_max: usize, r_max: usize) -> Self {
        let mut grid = vec![vec![LambdaPoly::zero(); r_max + 1]; n_max + 1];
        for n in 1..=n_max {
            grid[n][0] = deg_hyperharmonic_base(n);
            for r in 1..=r_max {
                grid[n][r] = &grid[n - 1][r] + &grid[n][r - 1];
            }
        }
        Self { n_max, r_max, grid }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    /// Panics outside the table.
    pub fn get(&self, n: usize, r: usize) -> &LambdaPoly {
        &self.grid[n][r]
    }

    /// Rows indexed by n, columns by r.
    pub fn rows(&self) -> &[Vec<LambdaPoly>] {
        &self.grid
    }
}

/// Binomial closed form (see THM1_A); r = 0 falls back to the base case.
fn hyperharmonic_closed_form(n: usize, r: usize) -> LambdaPoly {
    if r == 0 {
        return deg_hyperharmonic_base(n);
    }
    let mut acc = LambdaPoly::zero();
    for l in 1..=n {
        let c = binomial((n - l + r - 1) as i64, (r - 1) as i64);
        acc.add_scaled(&deg_hyperharmonic_base(l), &Rational::from_integer(c));
    }
    acc
}

/// Series −log_λ(1−t)/(1−t)^r to the given order.
pub fn hyperharmonic_gf(r: usize, order: usize) -> crate::series::TruncSeries {
    let f = -&make_deg_log(Sign::Minus, order);
    &f * &make_binomial_power(BinomialBase::OneMinusT, -(r as i64), order)
}

pub fn deg_hyperharmonic(n: usize, r: usize, route: HyperharmonicRoute) -> LambdaPoly {
    match route {
        HyperharmonicRoute::Recurrence => HyperharmonicTable::new(n, r).get(n, r).clone(),
        HyperharmonicRoute::ClosedForm => hyperharmonic_closed_form(n, r),
        HyperharmonicRoute::GeneratingFunction => hyperharmonic_gf(r, n + 1)
            .coeff(n)
            .expect("order n+1 holds t^n")
            .clone(),
    }
}

/// Degenerate Daehee number D_{n,λ} = (λ−1)_n/(n+1).
pub fn deg_daehee(n: usize) -> LambdaPoly {
    let x = &LambdaPoly::lambda() - &LambdaPoly::one();
    falling_factorial(&x, n).scale(&Rational::new(BigInt::one(), BigInt::from(n + 1)))
}

/// D^{(r)}_{0,λ} … D^{(r)}_{n_max,λ} from one truncated power of
/// log_λ(1+t)/t. `r = 0` gives the trivial power 1, 0, 0, ….
pub fn deg_daehee_order_row(r: usize, n_max: usize) -> Vec<LambdaPoly> {
    let shifted = make_deg_log(Sign::Plus, n_max + 2)
        .div_t()
        .expect("log_λ(1+t) has zero constant term");
    let power = shifted.pow(r);
    power
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale_int(&factorial(n as u64)))
        .collect()
}

/// Degenerate Daehee number of order r, D^{(r)}_{n,λ}.
pub fn deg_daehee_order(n: usize, r: usize) -> LambdaPoly {
    deg_daehee_order_row(r, n).swap_remove(n)
}

/// S_{1,λ}(n, k) for 0 ≤ k ≤ n ≤ n_max.
///
/// Expanding (x)_{n+1} = (x)_n (x−n) with
/// (x)_{k,λ}(x−n) = (x)_{k+1,λ} + (kλ−n)(x)_{k,λ} gives
/// S(n+1,k) = S(n,k−1) + (kλ−n)S(n,k), with S(0,0) = 1.
#[derive(Debug, Clone)]
pub struct Stirling1Triangle {
    rows: Vec<Vec<LambdaPoly>>,
}

impl Stirling1Triangle {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<LambdaPoly>> = vec![vec![LambdaPoly::one()]];
        for n in 0..n_max {
            let prev = &rows[n];
            let mut next = vec![LambdaPoly::zero(); n + 2];
            for (k, slot) in next.iter_mut().enumerate() {
                if k >= 1 {
                    *slot += &prev[k - 1];
                }
                if k <= n {
                    let step = LambdaPoly::from_coeffs(vec![rat(-(n as i64)), rat(k as i64)]);
                    slot.add_mul(&step, &prev[k]);
                }
            }
            rows.push(next);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Zero outside 0 ≤ k ≤ n. Panics if n exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> LambdaPoly {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn rows(&self) -> &[Vec<LambdaPoly>] {
        &self.rows
    }
}

/// Degenerate Stirling number of the first kind; zero for k > n.
pub fn deg_stirling1(n: usize, k: usize) -> LambdaPoly {
    if k > n {
        return LambdaPoly::zero();
    }
    Stirling1Triangle::new(n).get(n, k)
}

/// Checks (x)_n = Σ_k S_{1,λ}(n,k)(x)_{k,λ} at x = 0, 1, …, n. Both sides
/// are degree-n polynomials in x, so n+1 points decide the identity.
pub fn validate_stirling_basis(n: usize) -> bool {
    let tri = Stirling1Triangle::new(n);
    (0..=n).all(|x0| {
        let x = LambdaPoly::from(x0 as i64);
        let lhs = falling_factorial(&x, n);
        let mut rhs = LambdaPoly::zero();
        for k in 0..=n {
            rhs.add_mul(&tri.get(n, k), &deg_falling_factorial(&x, k));
        }
        lhs == rhs
    })
}

/// Degenerate derangement number d_{n,λ} = n! Σ_k (1)_{k,λ}(−1)^k/k!.
pub fn deg_derangement(n: usize) -> LambdaPoly {
    let one = LambdaPoly::one();
    let mut acc = LambdaPoly::zero();
    for k in 0..=n {
        let c = Rational::from_integer(factorial(n as u64) / factorial(k as u64));
        acc.add_scaled(&signed(&deg_falling_factorial(&one, k), k as i64), &c);
    }
    acc
}

/// d_{n,λ} as n!·[t^n] e_λ(−t)/(1−t).
pub fn deg_derangement_gf(n: usize) -> LambdaPoly {
    let s = &make_binomial_power(BinomialBase::OneMinusT, -1, n + 1)
        * &make_deg_exp(&LambdaPoly::one(), Sign::Minus, n + 1);
    s.coeffs()[n].scale_int(&factorial(n as u64))
}

/// Classical harmonic number H_n = 1 + 1/2 + ⋯ + 1/n.
pub fn classical_harmonic(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::zero(), |acc, k| {
        acc + Rational::new(BigInt::one(), BigInt::from(k))
    })
}

/// Classical hyperharmonic number by iterated partial sums.
pub fn classical_hyperharmonic_recurrence(n: usize, r: usize) -> Rational {
    // row[m] = H^{(order)}_m
    let mut row: Vec<Rational> = (0..=n)
        .map(|m| {
            if m == 0 {
                Rational::zero()
            } else {
                Rational::new(BigInt::one(), BigInt::from(m))
            }
        })
        .collect();
    for _ in 0..r {
        let mut acc = Rational::zero();
        for v in row.iter_mut() {
            acc += &*v;
            *v = acc.clone();
        }
    }
    row[n].clone()
}

/// Conway–Guy closed form binom(n+r−1, n)(H_{n+r−1} − H_{r−1}), r ≥ 1.
pub fn classical_hyperharmonic_closed(n: usize, r: usize) -> Rational {
    assert!(r >= 1, "closed form needs r >= 1");
    let b = Rational::from_integer(binomial((n + r - 1) as i64, n as i64));
    b * (classical_harmonic(n + r - 1) - classical_harmonic(r - 1))
}

/// Classical Daehee number (−1)^n n!/(n+1).
pub fn classical_daehee(n: usize) -> Rational {
    let v = Rational::new(factorial(n as u64), BigInt::from(n + 1));
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Signed Stirling number of the first kind s(n,k): the coefficient of x^k
/// in x(x−1)⋯(x−n+1).
pub fn classical_stirling1(n: usize, k: usize) -> Rational {
    falling_factorial(&LambdaPoly::lambda(), n).coeff(k)
}

/// Classical Daehee number of order r, s(n+r, r)/binom(n+r, r), from
/// (log(1+t))^r/r! = Σ s(m, r) t^m/m!.
pub fn classical_daehee_order(n: usize, r: usize) -> Rational {
    classical_stirling1(n + r, r) / Rational::from_integer(binomial((n + r) as i64, r as i64))
}

/// Classical derangements via d_n = n·d_{n−1} + (−1)^n.
pub fn classical_derangement(n: usize) -> Rational {
    let mut d = BigInt::one();
    for m in 1..=n {
        d = d * m + if m % 2 == 0 { 1 } else { -1 };
    }
    Rational::from_integer(d)
}

/// λ-free value of a family at a parameter tuple.
pub fn classical_oracle(family: Family, params: &[i64]) -> Result<Rational> {
    family.check_params(params)?;
    let p = |i: usize| params[i] as usize;
    Ok(match family {
        Family::DegHarmonic => classical_harmonic(p(0)),
        Family::DegHyperharmonic => classical_hyperharmonic_recurrence(p(0), p(1)),
        Family::DegDaehee => classical_daehee(p(0)),
        Family::DegDaeheeOrder => classical_daehee_order(p(0), p(1)),
        Family::DegStirling1 => classical_stirling1(p(0), p(1)),
        Family::DegDerangement => classical_derangement(p(0)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{ratio, Degree};

    fn p(s: &str) -> LambdaPoly {
        s.parse().unwrap()
    }

    const ROUTES: [HyperharmonicRoute; 3] = [
        HyperharmonicRoute::Recurrence,
        HyperharmonicRoute::ClosedForm,
        HyperharmonicRoute::GeneratingFunction,
    ];

    #[test]
    fn harmonic_examples() {
        assert!(deg_harmonic(0).is_zero());
        assert_eq!(deg_harmonic(2), p("[3/2,-1/2]"));
        assert_eq!(deg_harmonic(3), p("[11/6,-1,1/6]"));
        assert_eq!(deg_harmonic(3).eval(&rat(0)), ratio(11, 6));
        assert_eq!(deg_harmonic_row(5)[4], deg_harmonic(4));
    }

    #[test]
    fn hyperharmonic_examples() {
        for route in ROUTES {
            for r in 0..4 {
                assert!(deg_hyperharmonic(0, r, route).is_zero());
            }
            for r in 1..5 {
                assert_eq!(deg_hyperharmonic(1, r, route), LambdaPoly::one());
            }
            assert_eq!(deg_hyperharmonic(2, 2, route), p("[5/2,-1/2]"));
        }
    }

    #[test]
    fn hyperharmonic_table_shape() {
        let t = HyperharmonicTable::new(6, 4);
        for r in 0..=4 {
            assert!(t.get(0, r).is_zero());
        }
        for n in 1..=6 {
            assert_eq!(*t.get(n, 0), deg_hyperharmonic_base(n));
            assert_eq!(*t.get(n, 1), deg_harmonic(n));
        }
    }

    #[test]
    fn daehee_examples() {
        assert_eq!(deg_daehee(0), LambdaPoly::one());
        assert_eq!(deg_daehee(1), p("[-1/2,1/2]"));
        assert_eq!(deg_daehee(2).eval(&rat(0)), ratio(2, 3));
        assert_eq!(deg_daehee(5).degree(), Degree::Finite(5));
    }

    #[test]
    fn daehee_order_examples() {
        for r in 1..5 {
            assert_eq!(deg_daehee_order(0, r), LambdaPoly::one());
        }
        assert_eq!(deg_daehee_order(1, 2), LambdaPoly::from_ints(&[-1, 1]));
        let row = deg_daehee_order_row(1, 10);
        for (n, v) in row.iter().enumerate().take(11) {
            assert_eq!(*v, deg_daehee(n), "n = {n}");
        }
        let trivial = deg_daehee_order_row(0, 4);
        assert_eq!(trivial[0], LambdaPoly::one());
        assert!(trivial[1..].iter().all(LambdaPoly::is_zero));
    }

    #[test]
    fn stirling_examples() {
        for n in 0..=10 {
            assert_eq!(deg_stirling1(n, n), LambdaPoly::one());
        }
        assert_eq!(deg_stirling1(2, 1), LambdaPoly::from_ints(&[-1, 1]));
        assert_eq!(deg_stirling1(3, 1).eval(&rat(0)), rat(2));
        assert!(deg_stirling1(2, 3).is_zero());
        let tri = Stirling1Triangle::new(2);
        assert_eq!(
            tri.rows()[2],
            vec![LambdaPoly::zero(), p("[-1,1]"), LambdaPoly::one()]
        );
    }

    #[test]
    fn stirling_basis_gate() {
        for n in 0..=12 {
            assert!(validate_stirling_basis(n), "n = {n}");
        }
    }

    #[test]
    fn derangement_examples() {
        assert_eq!(deg_derangement(0), LambdaPoly::one());
        assert!(deg_derangement(1).is_zero());
        assert_eq!(deg_derangement(2), LambdaPoly::from_ints(&[1, -1]));
        for n in 0..10 {
            assert_eq!(deg_derangement(n), deg_derangement_gf(n));
        }
    }

    #[test]
    fn classical_examples() {
        assert_eq!(
            classical_oracle(Family::DegHarmonic, &[3]).unwrap(),
            ratio(11, 6)
        );
        assert_eq!(
            classical_oracle(Family::DegHyperharmonic, &[2, 2]).unwrap(),
            ratio(5, 2)
        );
        assert_eq!(classical_hyperharmonic_closed(2, 2), ratio(5, 2));
        assert_eq!(
            classical_oracle(Family::DegDerangement, &[4]).unwrap(),
            rat(9)
        );
        assert_eq!(classical_daehee_order(3, 1), classical_daehee(3));
        assert_eq!(classical_stirling1(3, 2), rat(-3));
        assert!(classical_oracle(Family::DegStirling1, &[2, 3]).is_err());
        assert!(classical_oracle(Family::DegDaeheeOrder, &[2, 0]).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("deg-bernoulli".parse::<Family>().is_err());
    }
}
