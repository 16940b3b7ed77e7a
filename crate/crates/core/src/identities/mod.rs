//! Executable catalog of the identities relating the degenerate number
//! families.
//!
//! Every identity is checked by exact equality of polynomials in λ (or of
//! rationals, for the λ-free ones) at each point of a [`ParamGrid`]. There is
//! no tolerance anywhere in this module. A [`IdentityReport`] records how many
//! comparisons were made and the full value of both sides at every failing
//! point.
//!
//! ```
//! use degen::identities::{verify, IdentityId, IntRange, ParamGrid};
//!
//! let grid = ParamGrid {
//!     n: Some(IntRange::new(0, 10)),
//!     ..ParamGrid::default()
//! };
//! let report = verify(IdentityId::Thm2, &grid).unwrap();
//! assert_eq!(report.points_checked, 11);
//! assert!(report.passed());
//! ```

mod checks;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::LambdaPoly;

use self::tables::Tables;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Eq8Closed,
    Eq14Recurrence,
    Thm1A,
    Thm1B,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6A,
    Thm6B,
    Thm7,
    Thm8,
    Thm9,
    Cor10,
    Remark11,
    Gf11,
    Gf12,
    Gf29,
    Eq33_34Deriv,
    Eq36_37Deriv,
    ExpLogInverse,
    ClassicalLimits,
}

/// Keeps a point given the truncation order.
type JointFilter = fn(&Point, usize) -> bool;

/// How one grid parameter is constrained on its own.
struct ParamSpec {
    name: &'static str,
    min: i64,
}

const fn p(name: &'static str, min: i64) -> ParamSpec {
    ParamSpec { name, min }
}

impl IdentityId {
    pub const ALL: [IdentityId; 22] = [
        IdentityId::Eq8Closed,
        IdentityId::Eq14Recurrence,
        IdentityId::Thm1A,
        IdentityId::Thm1B,
        IdentityId::Thm2,
        IdentityId::Thm3,
        IdentityId::Thm4,
        IdentityId::Thm5,
        IdentityId::Thm6A,
        IdentityId::Thm6B,
        IdentityId::Thm7,
        IdentityId::Thm8,
        IdentityId::Thm9,
        IdentityId::Cor10,
        IdentityId::Remark11,
        IdentityId::Gf11,
        IdentityId::Gf12,
        IdentityId::Gf29,
        IdentityId::Eq33_34Deriv,
        IdentityId::Eq36_37Deriv,
        IdentityId::ExpLogInverse,
        IdentityId::ClassicalLimits,
    ];

    pub fn name(self) -> &'static str {
        use IdentityId::*;
        match self {
            Eq8Closed => "EQ8_CLOSED",
            Eq14Recurrence => "EQ14_RECURRENCE",
            Thm1A => "THM1_A",
            Thm1B => "THM1_B",
            Thm2 => "THM2",
            Thm3 => "THM3",
            Thm4 => "THM4",
            Thm5 => "THM5",
            Thm6A => "THM6_A",
            Thm6B => "THM6_B",
            Thm7 => "THM7",
            Thm8 => "THM8",
            Thm9 => "THM9",
            Cor10 => "COR10",
            Remark11 => "REMARK11",
            Gf11 => "GF11",
            Gf12 => "GF12",
            Gf29 => "GF29",
            Eq33_34Deriv => "EQ33_34_DERIV",
            Eq36_37Deriv => "EQ36_37_DERIV",
            ExpLogInverse => "EXP_LOG_INVERSE",
            ClassicalLimits => "CLASSICAL_LIMITS",
        }
    }

    /// True for the checks driven by a truncation order rather than an n range.
    pub fn is_series_check(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            Gf11 | Gf12 | Gf29 | Eq33_34Deriv | Eq36_37Deriv | ExpLogInverse
        )
    }

    fn params(self) -> &'static [ParamSpec] {
        use IdentityId::*;
        const N0: ParamSpec = p("n", 0);
        const N1: ParamSpec = p("n", 1);
        const R0: ParamSpec = p("r", 0);
        const R1: ParamSpec = p("r", 1);
        const BIG_N1: ParamSpec = p("N", 1);
        const S1: ParamSpec = p("s", 1);
        const K0: ParamSpec = p("k", 0);
        match self {
            Eq8Closed | Eq14Recurrence | Thm4 | Thm6B | Thm7 => &[N1, R1],
            Thm1A => &[N0, R1, S1],
            Thm1B | Thm3 => &[N0, R1],
            Thm2 => &[N0],
            Thm5 => &[N0, R1, K0],
            Thm6A => &[N1],
            Thm8 | Thm9 | Cor10 | Remark11 => &[N0, BIG_N1],
            Gf11 | Gf29 | ExpLogInverse => &[],
            Gf12 => &[R0],
            Eq33_34Deriv | Eq36_37Deriv => &[BIG_N1],
            ClassicalLimits => &[N0, R0],
        }
    }

    /// Constraint tying several parameters together; points violating it are
    /// dropped from the grid.
    fn joint(self) -> Option<(&'static str, JointFilter)> {
        use IdentityId::*;
        match self {
            Thm1A => Some(("1 ≤ s ≤ r", |pt, _| pt.get("s") <= pt.get("r"))),
            Thm8 => Some(("n ≥ N−1", |pt, _| pt.get("n") >= pt.get("N") - 1)),
            Eq33_34Deriv | Eq36_37Deriv => {
                Some(("N < T", |pt, order| (pt.get("N") as usize) < order))
            }
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let upper = s.to_ascii_uppercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == upper)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

/// Inclusive integer interval, written `a..b` (or `a` for a single value).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        Self { lo: v, hi: v }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for IntRange {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("invalid range {s:?}, expected a..b");
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(Self::new(parse(a)?, parse(b)?))
            }
            None => Ok(Self::single(parse(s)?)),
        }
    }
}

/// Parameter ranges for one verification run. Unused fields are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParamGrid {
    pub n: Option<IntRange>,
    pub r: Option<IntRange>,
    pub s: Option<IntRange>,
    pub k: Option<IntRange>,
    pub big_n: Option<IntRange>,
    /// Truncation order T of the series checks.
    pub order: Option<usize>,
}

impl ParamGrid {
    pub fn range(&self, name: &str) -> Option<IntRange> {
        match name {
            "n" => self.n,
            "r" => self.r,
            "s" => self.s,
            "k" => self.k,
            "N" => self.big_n,
            _ => None,
        }
    }

    pub fn set_range(&mut self, name: &str, range: IntRange) {
        match name {
            "n" => self.n = Some(range),
            "r" => self.r = Some(range),
            "s" => self.s = Some(range),
            "k" => self.k = Some(range),
            "N" => self.big_n = Some(range),
            _ => panic!("unknown grid parameter {name}"),
        }
    }

    /// Only the fields the identity reads.
    fn restricted_to(&self, id: IdentityId) -> ParamGrid {
        let mut out = ParamGrid::default();
        for spec in id.params() {
            if let Some(r) = self.range(spec.name) {
                out.set_range(spec.name, r);
            }
        }
        if id.is_series_check() {
            out.order = self.order;
        }
        out
    }
}

/// Named parameter tuple of one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point(pub Vec<(&'static str, i64)>);

impl Point {
    pub fn get(&self, name: &str) -> i64 {
        self.0
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
            .unwrap_or_else(|| panic!("point has no parameter {name}"))
    }

    fn with(&self, name: &'static str, v: i64) -> Point {
        let mut out = self.clone();
        out.0.push((name, v));
        out
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// One exact comparison that did not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub params: Point,
    /// Which comparison failed when a point carries several.
    pub detail: &'static str,
    pub lhs: LambdaPoly,
    pub rhs: LambdaPoly,
}

#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub grid: ParamGrid,
    pub points_checked: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Deliberate defects for checking that the verifier can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Uses (−1)^{n+1} instead of (−1)^n on the right side of THM2.
    Thm2SignFlip,
}

impl FromStr for Mutation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "thm2-sign" => Ok(Mutation::Thm2SignFlip),
            _ => Err(format!("unknown mutation {s:?}")),
        }
    }
}

/// Grid profiles for [`run_all`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    /// n ≤ 8, r, s, k, N ≤ 3, T = 12
    Smoke,
    /// n ≤ 20, r, s, k, N ≤ 6, T = 32
    Full,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Smoke => "smoke",
            Profile::Full => "full",
        }
    }

    fn caps(self) -> (i64, i64, usize) {
        match self {
            Profile::Smoke => (8, 3, 12),
            Profile::Full => (20, 6, 32),
        }
    }

    /// The profile's grid for one identity, clipped to its domain.
    pub fn grid(self, id: IdentityId) -> ParamGrid {
        let (n_max, o_max, order) = self.caps();
        let mut grid = ParamGrid::default();
        for spec in id.params() {
            let hi = match spec.name {
                "n" => n_max,
                "N" if id.is_series_check() => o_max.min(order as i64 - 1),
                _ => o_max,
            };
            grid.set_range(spec.name, IntRange::new(spec.min, hi));
        }
        if id.is_series_check() {
            grid.order = Some(order);
        }
        grid
    }
}

impl FromStr for Profile {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "smoke" => Ok(Profile::Smoke),
            "full" => Ok(Profile::Full),
            _ => Err(format!("unknown profile {s:?}")),
        }
    }
}

/// Validates `grid` against the identity's domain and expands it into
/// points, in lexicographic order of the declared parameters.
fn expand(id: IdentityId, grid: &ParamGrid) -> Result<(Vec<Point>, usize)> {
    let precondition = |constraint: String| Error::Precondition {
        id: id.name().to_string(),
        constraint,
    };
    let order = if id.is_series_check() {
        let t = grid
            .order
            .ok_or_else(|| precondition("a truncation order T".into()))?;
        if t < 2 {
            return Err(precondition("T ≥ 2".into()));
        }
        t
    } else {
        0
    };
    let mut points = vec![Point(Vec::new())];
    for spec in id.params() {
        let range = grid
            .range(spec.name)
            .ok_or_else(|| precondition(format!("a range for {}", spec.name)))?;
        if range.is_empty() {
            return Err(precondition(format!("a nonempty range for {}", spec.name)));
        }
        if range.lo < spec.min {
            return Err(precondition(format!("{} ≥ {}", spec.name, spec.min)));
        }
        points = points
            .iter()
            .flat_map(|pt| range.iter().map(move |v| pt.with(spec.name, v)))
            .collect();
    }
    if let Some((constraint, keep)) = id.joint() {
        points.retain(|pt| keep(pt, order));
        if points.is_empty() {
            return Err(precondition(constraint.to_string()));
        }
    }
    Ok((points, order))
}

/// Largest value a grid parameter takes, or 0.
fn cap(grid: &ParamGrid, name: &str) -> usize {
    grid.range(name).map_or(0, |r| r.hi.max(0) as usize)
}

/// Verifies one identity over a grid.
pub fn verify(id: IdentityId, grid: &ParamGrid) -> Result<IdentityReport> {
    verify_with(id, grid, None)
}

/// [`verify`] with an optional injected defect.
pub fn verify_with(
    id: IdentityId,
    grid: &ParamGrid,
    mutation: Option<Mutation>,
) -> Result<IdentityReport> {
    let start = Instant::now();
    let grid = grid.restricted_to(id);
    let (points, order) = expand(id, &grid)?;

    let o_cap = cap(&grid, "r").max(cap(&grid, "k")).max(cap(&grid, "s")) + 1;
    let n_cap = cap(&grid, "n").max(order) + cap(&grid, "N").max(o_cap) + 2;
    let tables = Tables::new(n_cap, o_cap);
    let ctx = checks::Ctx {
        tables: &tables,
        order,
        grid: &grid,
        mutation,
    };

    let results: Vec<Vec<checks::Comparison>> = points
        .par_iter()
        .map(|pt| checks::check(id, &ctx, pt))
        .collect();

    let points_checked = results.iter().map(Vec::len).sum();
    let failures = results
        .into_iter()
        .flatten()
        .filter(|c| c.lhs != c.rhs)
        .map(|c| Failure {
            params: c.params,
            detail: c.detail,
            lhs: c.lhs,
            rhs: c.rhs,
        })
        .collect();
    Ok(IdentityReport {
        id,
        grid,
        points_checked,
        failures,
        elapsed: start.elapsed(),
    })
}

/// Series check at a single truncation order and, where the identity takes
/// one, a single hyperharmonic order r (GF12) or derivative order N.
pub fn verify_gf(id: IdentityId, order: usize, r_or_n: Option<i64>) -> Result<IdentityReport> {
    if !id.is_series_check() {
        return Err(Error::Precondition {
            id: id.name().to_string(),
            constraint: "a series identity".to_string(),
        });
    }
    let mut grid = ParamGrid {
        order: Some(order),
        ..ParamGrid::default()
    };
    if let (Some(spec), Some(v)) = (id.params().first(), r_or_n) {
        grid.set_range(spec.name, IntRange::single(v));
    }
    verify(id, &grid)
}

/// λ → 0 regression of every family against its classical oracle for
/// n ≤ n_max and orders r ≤ order_max.
pub fn verify_limits(n_max: usize, order_max: usize) -> Result<IdentityReport> {
    if n_max < 1 {
        return Err(Error::Precondition {
            id: IdentityId::ClassicalLimits.name().to_string(),
            constraint: "n_max ≥ 1".to_string(),
        });
    }
    let grid = ParamGrid {
        n: Some(IntRange::new(0, n_max as i64)),
        r: Some(IntRange::new(0, order_max as i64)),
        ..ParamGrid::default()
    };
    verify(IdentityId::ClassicalLimits, &grid)
}

/// Every identity under a profile, in catalog order.
pub fn run_all(profile: Profile) -> Vec<IdentityReport> {
    run_all_with(profile, None)
}

pub fn run_all_with(profile: Profile, mutation: Option<Mutation>) -> Vec<IdentityReport> {
    IdentityId::ALL
        .iter()
        .map(|&id| {
            verify_with(id, &profile.grid(id), mutation)
                .expect("profile grids respect every domain")
        })
        .collect()
}
