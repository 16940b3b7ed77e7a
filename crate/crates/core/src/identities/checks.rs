//! Left and right sides of each identity at a single grid point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::tables::Tables;
use super::{IdentityId, Mutation, ParamGrid, Point};
use crate::exactmath::{
    binomial, deg_falling_factorial, factorial, falling_factorial, int_falling_factorial,
    lambda_binom, lambda_binom_over_lambda, rat, sign_pow, signed, LambdaPoly, LambdaRat, Rational,
};
use crate::numbers::{
    classical_daehee, classical_daehee_order, classical_derangement, classical_harmonic,
    classical_hyperharmonic_closed, classical_hyperharmonic_recurrence, classical_stirling1,
    deg_hyperharmonic, HyperharmonicRoute,
};
use crate::series::{
    make_binomial_power, make_deg_exp, make_deg_log, BinomialBase, Sign, TruncSeries,
};

pub(crate) struct Ctx<'a> {
    pub tables: &'a Tables,
    pub order: usize,
    pub grid: &'a ParamGrid,
    pub mutation: Option<Mutation>,
}

pub(crate) struct Comparison {
    pub params: Point,
    pub detail: &'static str,
    pub lhs: LambdaPoly,
    pub rhs: LambdaPoly,
}

fn one(pt: &Point, lhs: LambdaPoly, rhs: LambdaPoly) -> Vec<Comparison> {
    vec![Comparison {
        params: pt.clone(),
        detail: "",
        lhs,
        rhs,
    }]
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

fn inv_fact(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n as u64))
}

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn constant(r: Rational) -> LambdaPoly {
    LambdaPoly::constant(r)
}

/// Σ_{k=0}^n (λ−N)_{k,λ} S_{1,λ}(n,k).
fn stirling_sum(t: &Tables, n: usize, big_n: usize) -> LambdaPoly {
    let x = &LambdaPoly::lambda() - &LambdaPoly::from(big_n as i64);
    let mut acc = LambdaPoly::zero();
    for k in 0..=n {
        acc.add_mul(&t.stirling(n, k), &deg_falling_factorial(&x, k));
    }
    acc
}

/// (1/λ)binom(λ,N)·Σ_k (λ−N)_{k,λ} S_{1,λ}(n,k): n!/N! times the t^n
/// coefficient of (d/dt)^N log_λ(1+t).
fn stirling_side(t: &Tables, n: usize, big_n: usize) -> LambdaPoly {
    &lambda_binom_over_lambda(big_n) * &stirling_sum(t, n, big_n)
}

/// binom(n+N, N)(H_{n+N,λ} − H_{n+N−1,λ}): 1/N! times the t^n coefficient
/// of (d/dt)^N (−log_λ(1−t)).
fn harmonic_difference_side(t: &Tables, n: usize, big_n: usize) -> LambdaPoly {
    let m = n + big_n;
    (t.harmonic(m) - t.harmonic(m - 1)).scale(&binom(m as i64, big_n as i64))
}

/// Left side of the Stirling/harmonic identity:
/// (1/n!)(1/λ)binom(λ,N) Σ_k (−1)^{n−N−1}(λ−N)_{k,λ} S_{1,λ}(n,k).
fn thm9_lhs(t: &Tables, n: usize, big_n: usize) -> LambdaPoly {
    let v = stirling_side(t, n, big_n).scale(&inv_fact(n));
    signed(&v, n as i64 - big_n as i64 - 1)
}

/// Compares the coefficients of two series of equal order.
fn series_eq(
    base: &Point,
    detail: &'static str,
    lhs: &TruncSeries,
    rhs: &TruncSeries,
) -> Vec<Comparison> {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .map(|(n, (a, b))| Comparison {
            params: base.with("n", n as i64),
            detail,
            lhs: a.clone(),
            rhs: b.clone(),
        })
        .collect()
}

fn series_from(coeffs: Vec<LambdaPoly>) -> TruncSeries {
    TruncSeries::from_coeffs(coeffs).expect("nonempty series")
}

pub(crate) fn check(id: IdentityId, ctx: &Ctx<'_>, pt: &Point) -> Vec<Comparison> {
    use IdentityId::*;
    let t = ctx.tables;
    let get = |name: &str| pt.get(name) as usize;
    match id {
        Eq8Closed => {
            let (n, r) = (get("n"), get("r"));
            let lm1 = &LambdaPoly::lambda() - &LambdaPoly::one();
            let lhs = &falling_factorial(&lm1, r - 1).scale(&inv_fact(r - 1)) * t.hyper(n, r);
            let diff = t.harmonic(n + r - 1) - t.harmonic(r - 1);
            let rhs = signed(
                &diff.scale(&binom((n + r - 1) as i64, n as i64)),
                r as i64 - 1,
            );
            one(pt, lhs, rhs)
        }
        Eq14Recurrence => {
            // generating-function values, so the check is independent of the
            // table recurrence
            let (n, r) = (get("n"), get("r"));
            let lhs = t.hyper_gf(n, r).clone();
            let rhs = t.hyper_gf(n - 1, r) + t.hyper_gf(n, r - 1);
            one(pt, lhs, rhs)
        }
        Thm1A => {
            let (n, r, s) = (get("n"), get("r"), get("s"));
            let mut rhs = LambdaPoly::zero();
            for l in 1..=n {
                rhs.add_scaled(
                    t.hyper(l, r - s),
                    &binom((n - l + s - 1) as i64, (s - 1) as i64),
                );
            }
            one(pt, t.hyper(n, r).clone(), rhs)
        }
        Thm1B => {
            let (n, r) = (get("n"), get("r"));
            let mut rhs = LambdaPoly::zero();
            for l in 1..=n {
                let term = signed(&lambda_binom_over_lambda(l), l as i64 - 1);
                rhs.add_scaled(&term, &binom((n - l + r - 1) as i64, (r - 1) as i64));
            }
            one(pt, t.hyper(n, r).clone(), rhs)
        }
        Thm2 => {
            let n = get("n");
            let rhs = if n == 0 {
                LambdaPoly::one()
            } else {
                let e = match ctx.mutation {
                    Some(Mutation::Thm2SignFlip) => n as i64 + 1,
                    None => n as i64,
                };
                let diff = t.harmonic(n + 1) - t.harmonic(n);
                signed(&diff.scale(&fact(n)), e)
            };
            one(pt, t.daehee(n).clone(), rhs)
        }
        Thm3 => {
            let (n, r) = (get("n"), get("r"));
            let mut rhs = LambdaPoly::zero();
            for k in 0..=n {
                let c = binom(r as i64, (n - k) as i64) * sign_pow(k as i64);
                rhs.add_scaled(t.hyper(k + 1, r), &c);
            }
            one(pt, t.daehee(n).clone(), rhs.scale(&fact(n)))
        }
        Thm4 => {
            let (n, r) = (get("n"), get("r"));
            let mut rhs = LambdaPoly::zero();
            for l in 0..n {
                for k in 0..=l {
                    let c = binom(r as i64, (l - k) as i64) * sign_pow((k + l) as i64);
                    rhs.add_scaled(t.hyper(k + 1, r), &c);
                }
            }
            one(pt, t.harmonic(n).clone(), rhs)
        }
        Thm5 => {
            let (n, r, k) = (get("n"), get("r"), get("k"));
            let mut rhs = LambdaPoly::zero();
            for i in 0..=n {
                let m = n - i;
                let mut inner = LambdaPoly::zero();
                for j in 0..=m {
                    let c = Rational::from_integer(
                        binomial(m as i64, j as i64)
                            * int_falling_factorial(k as i64, (m - j) as u64),
                    );
                    inner.add_scaled(t.daehee_order(j, r - 1), &c);
                }
                let inner = signed(&inner.scale(&inv_fact(m)), i as i64);
                rhs.add_mul(&inner, t.hyper(i + 1, k));
            }
            one(pt, t.daehee_order(n, r).clone(), rhs.scale(&fact(n)))
        }
        Thm6A => {
            let n = get("n");
            let mut rhs = LambdaPoly::zero();
            for l in 0..n {
                rhs.add_scaled(t.daehee(l), &(inv_fact(l) * sign_pow(l as i64)));
            }
            one(pt, t.harmonic(n).clone(), rhs)
        }
        Thm6B => {
            let (n, r) = (get("n"), get("r"));
            let mut rhs = LambdaPoly::zero();
            for m in 1..=n {
                let c = binom((r + m - 2) as i64, (r - 1) as i64)
                    * inv_fact(n - m)
                    * sign_pow((n - m) as i64);
                rhs.add_scaled(t.daehee(n - m), &c);
            }
            one(pt, t.hyper(n, r).clone(), rhs)
        }
        Thm7 => {
            let (n, r) = (get("n"), get("r"));
            let mut lhs = LambdaPoly::zero();
            let mut rhs = LambdaPoly::zero();
            for l in 1..=n {
                let w = signed(
                    &t.one_falling(n - l).scale(&inv_fact(n - l)),
                    (n - l) as i64,
                );
                lhs.add_mul(t.hyper(l, r), &w);
                let d = t.derangement(n - l).scale(&inv_fact(n - l));
                rhs.add_mul(t.hyper(l, r - 1), &d);
            }
            one(pt, lhs, rhs)
        }
        Thm8 => {
            let (n, big_n) = (get("n"), get("N"));
            let c = fact(big_n) / rat(n as i64 + 1);
            let rhs = stirling_side(t, n + 1 - big_n, big_n).scale(&c);
            one(pt, t.daehee(n).clone(), rhs)
        }
        Thm9 => {
            let (n, big_n) = (get("n"), get("N"));
            one(
                pt,
                thm9_lhs(t, n, big_n),
                harmonic_difference_side(t, n, big_n),
            )
        }
        Cor10 => {
            let (n, big_n) = (get("n"), get("N"));
            let lhs = stirling_sum(t, n, big_n).scale(&inv_fact(n));
            let rhs_num = lambda_binom(n + big_n).scale(&binom((n + big_n) as i64, big_n as i64));
            let den = lambda_binom(big_n);
            let rhs = LambdaRat::new(rhs_num.clone(), den.clone()).expect("binom(λ,N) ≠ 0");
            let cleared = &lhs * &den;
            debug_assert_eq!(LambdaRat::from(lhs) == rhs, cleared == rhs_num);
            one(pt, cleared, rhs_num)
        }
        Remark11 => {
            let (n, big_n) = (get("n"), get("N") as i64);
            let lhs = sign_pow(n as i64) * rat(big_n) / rat(n as i64 + big_n)
                * binom(n as i64 + big_n, big_n);
            let mut rhs = Rational::zero();
            let mut pow = Rational::one();
            for k in 0..=n {
                rhs += &pow * classical_stirling1(n, k);
                pow *= rat(-big_n);
            }
            one(pt, constant(lhs), constant(rhs * inv_fact(n)))
        }
        Gf11 => {
            let order = ctx.order;
            let gf = &-&make_deg_log(Sign::Minus, order)
                * &make_binomial_power(BinomialBase::OneMinusT, -1, order);
            let expected = series_from((0..order).map(|n| t.harmonic(n).clone()).collect());
            series_eq(pt, "", &gf, &expected)
        }
        Gf12 => {
            let (order, r) = (ctx.order, get("r"));
            let gf = &-&make_deg_log(Sign::Minus, order)
                * &make_binomial_power(BinomialBase::OneMinusT, -(r as i64), order);
            let recurrence = series_from((0..order).map(|n| t.hyper(n, r).clone()).collect());
            let closed = series_from(
                (0..order)
                    .map(|n| deg_hyperharmonic(n, r, HyperharmonicRoute::ClosedForm))
                    .collect(),
            );
            let mut out = series_eq(pt, "recurrence", &gf, &recurrence);
            out.extend(series_eq(pt, "closed form", &gf, &closed));
            out
        }
        Gf29 => {
            let order = ctx.order;
            let gf = &make_binomial_power(BinomialBase::OneMinusT, -1, order)
                * &make_deg_exp(&LambdaPoly::one(), Sign::Minus, order);
            let scaled = series_from(
                gf.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(n, c)| c.scale(&fact(n)))
                    .collect(),
            );
            let expected = series_from((0..order).map(|n| t.derangement(n).clone()).collect());
            series_eq(pt, "", &scaled, &expected)
        }
        Eq33_34Deriv => {
            let (order, big_n) = (ctx.order, get("N"));
            let y = make_deg_log(Sign::Plus, order);
            let mut out = Vec::new();
            if Some(big_n as i64) == ctx.grid.big_n.map(|r| r.lo) {
                // Y itself: n!·[t^n]Y = n·D_{n−1,λ}
                let egf = series_from((0..order).map(|n| y.coeffs()[n].scale(&fact(n))).collect());
                let expected = series_from(
                    (0..order)
                        .map(|n| match n {
                            0 => LambdaPoly::zero(),
                            _ => t.daehee(n - 1).scale(&rat(n as i64)),
                        })
                        .collect(),
                );
                out.extend(series_eq(&Point(vec![("N", 0)]), "Y", &egf, &expected));
            }
            let dy = y.derive(big_n).expect("N < T");
            let len = dy.order();
            let egf = series_from((0..len).map(|n| dy.coeffs()[n].scale(&fact(n))).collect());
            let daehee_side = series_from(
                (0..len)
                    .map(|n| t.daehee(n + big_n - 1).scale(&rat((n + big_n) as i64)))
                    .collect(),
            );
            let stirling = series_from(
                (0..len)
                    .map(|n| stirling_side(t, n, big_n).scale(&fact(big_n)))
                    .collect(),
            );
            out.extend(series_eq(pt, "Daehee form", &egf, &daehee_side));
            out.extend(series_eq(pt, "Stirling form", &egf, &stirling));
            out
        }
        Eq36_37Deriv => {
            let (order, big_n) = (ctx.order, get("N"));
            let f = -&make_deg_log(Sign::Minus, order);
            let mut out = Vec::new();
            if Some(big_n as i64) == ctx.grid.big_n.map(|r| r.lo) {
                // F itself: [t^n]F = H_{n,λ} − H_{n−1,λ}
                let expected = series_from(
                    (0..order)
                        .map(|n| match n {
                            0 => LambdaPoly::zero(),
                            _ => t.harmonic(n) - t.harmonic(n - 1),
                        })
                        .collect(),
                );
                out.extend(series_eq(&Point(vec![("N", 0)]), "F", &f, &expected));
            }
            let df = f.derive(big_n).expect("N < T");
            let len = df.order();
            let nf = fact(big_n);
            let harmonic_side = series_from(
                (0..len)
                    .map(|n| harmonic_difference_side(t, n, big_n).scale(&nf))
                    .collect(),
            );
            let stirling =
                series_from((0..len).map(|n| thm9_lhs(t, n, big_n).scale(&nf)).collect());
            out.extend(series_eq(pt, "harmonic form", &df, &harmonic_side));
            out.extend(series_eq(pt, "Stirling form", &df, &stirling));
            out
        }
        ExpLogInverse => {
            let order = ctx.order;
            let e = make_deg_exp(&LambdaPoly::one(), Sign::Plus, order);
            let log = make_deg_log(Sign::Plus, order);
            let one_plus_t = &TruncSeries::one(order) + &TruncSeries::t(order);
            let e_minus_one = &e - &TruncSeries::one(order);
            let mut out = series_eq(
                pt,
                "exp of log",
                &e.compose(&log).expect("log has zero constant term"),
                &one_plus_t,
            );
            out.extend(series_eq(
                pt,
                "log of exp",
                &log.compose(&e_minus_one).expect("zero constant term"),
                &TruncSeries::t(order),
            ));
            out
        }
        ClassicalLimits => classical_limits(ctx, pt),
    }
}

fn classical_limits(ctx: &Ctx<'_>, pt: &Point) -> Vec<Comparison> {
    let t = ctx.tables;
    let n = pt.get("n") as usize;
    let r_range = ctx.grid.r.expect("validated");
    let zero = Rational::zero();
    let at0 = |p: &LambdaPoly| constant(p.eval(&zero));
    let base = Point(vec![("n", n as i64)]);
    let mut out = Vec::new();
    let mut push = |params: Point, detail, lhs, rhs| {
        out.push(Comparison {
            params,
            detail,
            lhs,
            rhs,
        })
    };

    push(
        base.clone(),
        "harmonic",
        at0(t.harmonic(n)),
        constant(classical_harmonic(n)),
    );
    for r in r_range.iter() {
        let pr = base.with("r", r);
        let r = r as usize;
        let iterated = classical_hyperharmonic_recurrence(n, r);
        push(
            pr.clone(),
            "hyperharmonic",
            at0(t.hyper(n, r)),
            constant(iterated.clone()),
        );
        if r >= 1 {
            push(
                pr.clone(),
                "hyperharmonic oracles",
                constant(iterated),
                constant(classical_hyperharmonic_closed(n, r)),
            );
            push(
                pr,
                "daehee order",
                at0(t.daehee_order(n, r)),
                constant(classical_daehee_order(n, r)),
            );
        }
    }
    push(
        base.clone(),
        "daehee",
        at0(t.daehee(n)),
        constant(classical_daehee(n)),
    );
    for k in 0..=n {
        push(
            base.with("k", k as i64),
            "stirling1",
            at0(&t.stirling(n, k)),
            constant(classical_stirling1(n, k)),
        );
    }
    push(
        base,
        "derangement",
        at0(t.derangement(n)),
        constant(classical_derangement(n)),
    );
    out
}
