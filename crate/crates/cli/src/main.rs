mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use degen::identities::{IdentityId, IntRange, Mutation, Profile};
use degen::numbers::Family;

/// Exact degenerate harmonic, hyperharmonic, Daehee, Stirling and
/// derangement numbers, and verification of the identities between them.
#[derive(Debug, Parser)]
#[command(name = "degen", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Hyperharmonic,
    Stirling1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// log_λ(1+t)
    DegLog,
    /// −log_λ(1−t)
    NegDegLogMinus,
    /// e_λ(t)
    DegExp,
    /// −log_λ(1−t)/(1−t)^r
    Hyperharmonic,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Values of one number family over a parameter range.
    Compute {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        n: IntRange,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        r: Option<IntRange>,
        /// Stirling column; defaults to every 0 <= k <= n.
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        k: Option<IntRange>,
        /// `sym` for polynomials in λ, or an exact rational `p/q`.
        #[arg(long, default_value = "sym", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check identities over a parameter grid; exit status 1 on any failure.
    Verify {
        /// Identity id such as THM2 (or pass --id).
        #[arg(value_parser = parse_id, conflicts_with_all = ["all", "id"])]
        identity: Option<IdentityId>,
        #[arg(long, value_parser = parse_id, conflicts_with = "all")]
        id: Option<IdentityId>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_parser = parse_profile, env = "DEGEN_PROFILE", default_value = "smoke")]
        profile: Profile,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        n: Option<IntRange>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        r: Option<IntRange>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        s: Option<IntRange>,
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        k: Option<IntRange>,
        #[arg(long = "N", value_parser = parse_range, allow_hyphen_values = true)]
        big_n: Option<IntRange>,
        /// Truncation order T for the series checks.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Inject a known defect (testing the verifier itself).
        #[arg(long, value_parser = parse_mutation, hide = true)]
        mutate: Option<Mutation>,
    },
    /// Emit a dynamic-programming table row-major.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Largest order r (hyperharmonic only).
        #[arg(long, alias = "r-max", default_value_t = 3)]
        order_max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print a generating function, one `n: <coefficient>` line per term.
    #[command(hide = true)]
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 32)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
}

fn parse_range(s: &str) -> Result<IntRange, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_id(s: &str) -> Result<IdentityId, String> {
    s.parse()
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    s.parse()
}

fn parse_mutation(s: &str) -> Result<Mutation, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let result = match cli.command {
        Command::Compute {
            family,
            n,
            r,
            k,
            lambda,
            format,
        } => commands::compute(&mut stdout, family, n, r, k, &lambda, format),
        Command::Verify {
            identity,
            id,
            all,
            profile,
            n,
            r,
            s,
            k,
            big_n,
            order,
            format,
            mutate,
        } => {
            let ids = match identity.or(id) {
                Some(id) => vec![id],
                None if all => IdentityId::ALL.to_vec(),
                None => {
                    eprintln!("error: name an identity or pass --all");
                    return ExitCode::from(2);
                }
            };
            let overrides = commands::GridOverrides {
                n,
                r,
                s,
                k,
                big_n,
                order,
            };
            commands::verify(&mut stdout, &ids, profile, &overrides, mutate, format)
        }
        Command::Table {
            kind,
            n_max,
            order_max,
            format,
        } => commands::table(&mut stdout, kind, n_max, order_max, format),
        Command::Series { kind, order, r } => commands::series(&mut stdout, kind, order, r),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
