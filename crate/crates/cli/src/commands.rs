use std::error::Error;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use degen::exactmath::{parse_rational, Rational};
use degen::identities::{verify_with, IdentityId, IntRange, Mutation, ParamGrid, Profile};
use degen::numbers::{Family, HyperharmonicTable, Stirling1Triangle};
use degen::series::{make_deg_exp, make_deg_log, Sign};
use degen::LambdaPoly;

use crate::output::{self, ComputeRecord, Params};
use crate::{Format, SeriesKind, TableKind};

type Res = Result<ExitCode, Box<dyn Error>>;

fn usage(msg: String) -> Box<dyn Error> {
    msg.into()
}

fn nonneg(name: &str, r: IntRange) -> Result<std::ops::RangeInclusive<i64>, Box<dyn Error>> {
    if r.is_empty() {
        return Err(usage(format!("empty range {name}={r}")));
    }
    if r.lo < 0 {
        return Err(usage(format!("{name} must be nonnegative, got {r}")));
    }
    Ok(r.lo..=r.hi)
}

pub fn compute(
    out: &mut dyn Write,
    family: Family,
    n: IntRange,
    r: Option<IntRange>,
    k: Option<IntRange>,
    lambda: &str,
    format: Format,
) -> Res {
    let at: Option<Rational> = match lambda {
        "sym" => None,
        other => Some(parse_rational(other)?),
    };
    let names = family.param_names();
    let mut points: Vec<Vec<i64>> = Vec::new();
    for nv in nonneg("n", n)? {
        match names.get(1).copied() {
            None => points.push(vec![nv]),
            Some("r") => {
                let r = r.ok_or_else(|| usage(format!("{family} requires --r")))?;
                for rv in nonneg("r", r)? {
                    points.push(vec![nv, rv]);
                }
            }
            Some(_) => {
                let ks = match k {
                    Some(k) => nonneg("k", k)?,
                    None => 0..=nv,
                };
                for kv in ks {
                    points.push(vec![nv, kv]);
                }
            }
        }
    }

    let mut records = Vec::with_capacity(points.len());
    for params in points {
        let value = family.value(&params)?;
        let named: Vec<(&str, i64)> = names.iter().copied().zip(params.iter().copied()).collect();
        records.push(ComputeRecord {
            family: family.name().to_string(),
            params: Params::from_named(&named),
            lambda: at.as_ref().map(ToString::to_string),
            value: match &at {
                Some(x) => value.eval(x).to_string(),
                None => value.to_string(),
            },
        });
    }
    output::write_compute(out, &records, format)?;
    Ok(ExitCode::SUCCESS)
}

/// Grid flags given on the command line; each replaces the profile's range.
#[derive(Debug, Default)]
pub struct GridOverrides {
    pub n: Option<IntRange>,
    pub r: Option<IntRange>,
    pub s: Option<IntRange>,
    pub k: Option<IntRange>,
    pub big_n: Option<IntRange>,
    pub order: Option<usize>,
}

impl GridOverrides {
    fn apply(&self, mut grid: ParamGrid) -> ParamGrid {
        for (name, range) in [
            ("n", self.n),
            ("r", self.r),
            ("s", self.s),
            ("k", self.k),
            ("N", self.big_n),
        ] {
            if let Some(range) = range {
                grid.set_range(name, range);
            }
        }
        if self.order.is_some() {
            grid.order = self.order;
        }
        grid
    }
}

pub fn verify(
    out: &mut dyn Write,
    ids: &[IdentityId],
    profile: Profile,
    overrides: &GridOverrides,
    mutation: Option<Mutation>,
    format: Format,
) -> Res {
    let mut reports = Vec::with_capacity(ids.len());
    for &id in ids {
        let grid = overrides.apply(profile.grid(id));
        let report = verify_with(id, &grid, mutation)?;
        eprintln!(
            "{}: {} points, {} failures, {:.3}s",
            id,
            report.points_checked,
            report.failures.len(),
            report.elapsed.as_secs_f64()
        );
        reports.push(report);
    }
    output::write_verify(out, profile.name(), &reports, format)?;
    if reports.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

pub fn table(
    out: &mut dyn Write,
    kind: TableKind,
    n_max: usize,
    order_max: usize,
    format: Format,
) -> Res {
    let started = Instant::now();
    let text = |row: &[LambdaPoly]| row.iter().map(ToString::to_string).collect::<Vec<_>>();
    let res = match kind {
        TableKind::Hyperharmonic => {
            let t = HyperharmonicTable::new(n_max, order_max);
            let rows: Vec<_> = t.rows().iter().map(|r| text(r)).collect();
            output::write_table(
                out,
                "hyperharmonic",
                "r",
                n_max,
                Some(order_max),
                &rows,
                format,
            )
        }
        TableKind::Stirling1 => {
            let t = Stirling1Triangle::new(n_max);
            let rows: Vec<_> = t.rows().iter().map(|r| text(r)).collect();
            output::write_table(out, "stirling1", "k", n_max, None, &rows, format)
        }
    };
    res?;
    eprintln!("table built in {:.3}s", started.elapsed().as_secs_f64());
    Ok(ExitCode::SUCCESS)
}

pub fn series(out: &mut dyn Write, kind: SeriesKind, order: usize, r: usize) -> Res {
    if order == 0 {
        return Err(usage("series order must be positive".to_string()));
    }
    let s = match kind {
        SeriesKind::DegLog => make_deg_log(Sign::Plus, order),
        SeriesKind::NegDegLogMinus => -&make_deg_log(Sign::Minus, order),
        SeriesKind::DegExp => make_deg_exp(&LambdaPoly::one(), Sign::Plus, order),
        SeriesKind::Hyperharmonic => degen::numbers::hyperharmonic_gf(r, order),
    };
    write!(out, "{s}")?;
    Ok(ExitCode::SUCCESS)
}
