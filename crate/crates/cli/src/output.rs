//! Serialized shapes of the CLI output. The JSON documents are described by
//! `schema/degen-output.schema.json` at the repository root.

use std::io::Write;

use degen::identities::{Failure, IdentityReport, ParamGrid, Point};
use serde::Serialize;

use crate::Format;

#[derive(Debug, Default, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub big_n: Option<i64>,
}

impl Params {
    pub fn from_named(pairs: &[(&str, i64)]) -> Self {
        let mut out = Params::default();
        for &(name, v) in pairs {
            match name {
                "n" => out.n = Some(v),
                "r" => out.r = Some(v),
                "s" => out.s = Some(v),
                "k" => out.k = Some(v),
                "N" => out.big_n = Some(v),
                _ => unreachable!("unknown parameter {name}"),
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ComputeRecord {
    pub family: String,
    pub params: Params,
    /// Evaluation point, absent in symbolic mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    /// A polynomial `[c0,c1,...]` in symbolic mode, a rational otherwise.
    pub value: String,
}

#[derive(Debug, Serialize)]
struct ComputeDoc<'a> {
    command: &'static str,
    records: &'a [ComputeRecord],
}

#[derive(Debug, Serialize)]
struct GridOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<String>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    big_n: Option<String>,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
}

impl From<&ParamGrid> for GridOut {
    fn from(g: &ParamGrid) -> Self {
        let s = |r: Option<degen::identities::IntRange>| r.map(|r| r.to_string());
        GridOut {
            n: s(g.n),
            r: s(g.r),
            s: s(g.s),
            k: s(g.k),
            big_n: s(g.big_n),
            order: g.order,
        }
    }
}

#[derive(Debug, Serialize)]
struct FailureOut {
    params: Params,
    #[serde(skip_serializing_if = "str::is_empty")]
    detail: &'static str,
    lhs: String,
    rhs: String,
}

impl From<&Failure> for FailureOut {
    fn from(f: &Failure) -> Self {
        FailureOut {
            params: Params::from_named(&f.params.0),
            detail: f.detail,
            lhs: f.lhs.to_string(),
            rhs: f.rhs.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
struct ReportOut {
    id: &'static str,
    grid: GridOut,
    points_checked: usize,
    passed: bool,
    failures: Vec<FailureOut>,
}

#[derive(Debug, Serialize)]
struct VerifyDoc {
    command: &'static str,
    profile: &'static str,
    passed: bool,
    reports: Vec<ReportOut>,
}

#[derive(Debug, Serialize)]
struct TableDoc<'a> {
    command: &'static str,
    kind: &'static str,
    n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    order_max: Option<usize>,
    rows: &'a [Vec<String>],
}

type Res = Result<(), Box<dyn std::error::Error>>;

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Res {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn write_compute(out: &mut dyn Write, records: &[ComputeRecord], format: Format) -> Res {
    match format {
        Format::Json => json_line(
            out,
            &ComputeDoc {
                command: "compute",
                records,
            },
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["family", "n", "r", "k", "lambda", "value"])?;
            let opt = |v: Option<i64>| v.map(|v| v.to_string()).unwrap_or_default();
            for rec in records {
                w.write_record([
                    rec.family.clone(),
                    opt(rec.params.n),
                    opt(rec.params.r),
                    opt(rec.params.k),
                    rec.lambda.clone().unwrap_or_else(|| "sym".to_string()),
                    rec.value.clone(),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

pub fn write_verify(
    out: &mut dyn Write,
    profile: &'static str,
    reports: &[IdentityReport],
    format: Format,
) -> Res {
    match format {
        Format::Json => {
            let doc = VerifyDoc {
                command: "verify",
                profile,
                passed: reports.iter().all(IdentityReport::passed),
                reports: reports
                    .iter()
                    .map(|r| ReportOut {
                        id: r.id.name(),
                        grid: GridOut::from(&r.grid),
                        points_checked: r.points_checked,
                        passed: r.passed(),
                        failures: r.failures.iter().map(FailureOut::from).collect(),
                    })
                    .collect(),
            };
            json_line(out, &doc)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "record",
                "id",
                "points_checked",
                "failures",
                "params",
                "detail",
                "lhs",
                "rhs",
            ])?;
            for r in reports {
                w.write_record([
                    "report",
                    r.id.name(),
                    &r.points_checked.to_string(),
                    &r.failures.len().to_string(),
                    "",
                    "",
                    "",
                    "",
                ])?;
                for f in &r.failures {
                    w.write_record([
                        "failure",
                        r.id.name(),
                        "",
                        "",
                        &point_text(&f.params),
                        f.detail,
                        &f.lhs.to_string(),
                        &f.rhs.to_string(),
                    ])?;
                }
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn point_text(p: &Point) -> String {
    p.0.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn write_table(
    out: &mut dyn Write,
    kind: &'static str,
    column: &'static str,
    n_max: usize,
    order_max: Option<usize>,
    rows: &[Vec<String>],
    format: Format,
) -> Res {
    match format {
        Format::Json => json_line(
            out,
            &TableDoc {
                command: "table",
                kind,
                n_max,
                order_max,
                rows,
            },
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", column, "value"])?;
            for (n, row) in rows.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    w.write_record([n.to_string(), c.to_string(), v.clone()])?;
                }
            }
            w.flush()?;
            Ok(())
        }
    }
}
