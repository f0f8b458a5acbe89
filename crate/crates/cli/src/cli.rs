//! Argument parsing and verb dispatch.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand};
use revtour_core::enumeration::{EnumFilter, EnumKind, EnumSpec};
use revtour_core::pairings::Classification;
use revtour_core::theorems::TheoremId;
use revtour_core::{Pairing, QuasiPairing, Tournament};

use crate::records::{count_table_json, family_json, report_json, verdict_json, FamilyRecord};
use crate::{drive, format, CliError};

/// Tournaments obtained from total orders by reversing pairings and
/// quasi-pairings.
#[derive(Debug, Parser)]
#[command(name = "revtour", version)]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Raise the enumeration size guard (requires --unsafe).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Allow --max-n.
    #[arg(long = "unsafe", global = true)]
    allow_unsafe: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a tournament in text format.
    #[command(subcommand)]
    Gen(Gen),
    /// Print a JSON verdict.
    #[command(subcommand)]
    Check(Check),
    /// Print one JSON line per family.
    Enumerate(EnumerateArgs),
    /// Print a JSON count table.
    #[command(subcommand)]
    Count(Count),
    /// Check a statement exhaustively over a size range.
    Verify(VerifyArgs),
    /// Print one JSON line per family with an indecomposable reversal.
    Census(CensusArgs),
    #[command(subcommand)]
    Export(Export),
}

#[derive(Debug, Subcommand)]
enum Gen {
    /// The total order on 0..N.
    Transitive { n: usize },
    /// The total order on 0..N with the given pairs reversed.
    Inv {
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        pairs: String,
    },
}

#[derive(Debug, Args)]
struct Input {
    /// Read the tournament from a file instead of standard input.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Check {
    Indecomposable(Input),
    Module {
        #[arg(long)]
        set: String,
        #[command(flatten)]
        input: Input,
    },
    /// Irreducibility of a pairing or quasi-pairing.
    Irreducible {
        #[arg(long, allow_hyphen_values = true)]
        pairs: String,
        /// Ambient size; defaults to one more than the largest vertex.
        #[arg(long)]
        n: Option<usize>,
    },
}

fn kind_parser() -> impl TypedValueParser<Value = EnumKind> {
    PossibleValuesParser::new(EnumKind::ALL.map(EnumKind::name))
        .map(|s| s.parse::<EnumKind>().expect("listed names parse"))
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = kind_parser())]
    kind: EnumKind,
    #[arg(long, conflicts_with = "indecomposable_only")]
    irreducible_only: bool,
    /// Keep families whose reversal is indecomposable.
    #[arg(long)]
    indecomposable_only: bool,
    #[arg(long)]
    include_empty: bool,
}

#[derive(Debug, Subcommand)]
enum Count {
    /// Irreducible pairings of 0..m for even m in the range.
    IrreduciblePairings {
        #[arg(long, value_parser = parse_range)]
        m_range: (usize, usize),
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("statement").required(true).args(["theorem", "corollary"])))]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    theorem: Option<u8>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    corollary: Option<u8>,
    #[arg(long, value_parser = parse_range)]
    n_range: (usize, usize),
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = kind_parser())]
    kind: EnumKind,
    #[arg(long)]
    include_empty: bool,
}

#[derive(Debug, Subcommand)]
enum Export {
    /// Graphviz DOT of a tournament.
    Dot(Input),
}

/// `a..b`, inclusive, or a single `a`.
fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range endpoint '{t}'"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => (num(s)?, num(s)?),
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// Parses `args` (program name first), runs the verb and returns the exit
/// status: 0 on success, 2 when a verification finds violations, 1 on any
/// input error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match dispatch(cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn read_tournament(input: &Input, stdin: &mut dyn Read) -> Result<Tournament, CliError> {
    let text = match &input.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    format::parse_tournament(&text)
}

fn with_max_n(spec: EnumSpec, max_n: Option<usize>) -> EnumSpec {
    match max_n {
        Some(m) => spec.max_n(m),
        None => spec,
    }
}

fn dispatch(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<u8, CliError> {
    if cli.max_n.is_some() && !cli.allow_unsafe {
        return Err(CliError::input("--max-n is only accepted together with --unsafe"));
    }
    let (jobs, max_n) = (cli.jobs, cli.max_n);
    match cli.command {
        Command::Gen(Gen::Transitive { n }) => {
            out.write_all(format::write_tournament(&Tournament::try_transitive(n)?).as_bytes())?;
        }
        Command::Gen(Gen::Inv { n, pairs }) => {
            let family = format::parse_pair_family(&pairs, Some(n))?;
            let t = Tournament::try_transitive(n)?.reverse_pairs(&family)?;
            out.write_all(format::write_tournament(&t).as_bytes())?;
        }
        Command::Check(Check::Indecomposable(input)) => {
            let t = read_tournament(&input, stdin)?;
            let line = match t.nontrivial_module() {
                None => verdict_json("indecomposable", true, &[]),
                Some(m) => verdict_json("indecomposable", false, &[("witness", m.to_string())]),
            };
            writeln!(out, "{line}")?;
        }
        Command::Check(Check::Module { set, input }) => {
            let t = read_tournament(&input, stdin)?;
            let m = format::parse_vertex_set(&set, t.order())?;
            writeln!(out, "{}", verdict_json("module", t.is_module(m), &[]))?;
        }
        Command::Check(Check::Irreducible { pairs, n }) => {
            let family = format::parse_pair_family(&pairs, n)?;
            let (kind, irreducible) = match family.classify() {
                Classification::Pairing => ("pairing", Pairing::try_from(family)?.is_irreducible()),
                Classification::QuasiPairing => {
                    ("quasi-pairing", QuasiPairing::try_from(family)?.is_irreducible())
                }
                Classification::Neither => {
                    return Err(CliError::input(format!(
                        "family {family} is neither a pairing nor a quasi-pairing"
                    )))
                }
            };
            writeln!(out, "{}", verdict_json("irreducible", irreducible, &[("kind", kind.into())]))?;
        }
        Command::Enumerate(a) => {
            let filter = if a.irreducible_only {
                EnumFilter::IrreducibleOnly
            } else if a.indecomposable_only {
                EnumFilter::IndecomposableInvOnly
            } else {
                EnumFilter::All
            };
            let spec = with_max_n(
                EnumSpec::new(a.n, a.kind).filter(filter).include_empty(a.include_empty),
                max_n,
            );
            let records = drive::with_jobs(jobs, || {
                drive::map_families(&spec, |f| {
                    Ok(spec.accepts(&f).then(|| FamilyRecord::evaluate(spec.n, spec.kind, &f)))
                })
            })??;
            for r in &records {
                writeln!(out, "{}", family_json(r))?;
            }
        }
        Command::Count(Count::IrreduciblePairings { m_range: (a, b) }) => {
            for m in [a, b] {
                if m % 2 == 1 {
                    return Err(CliError::Core(revtour_core::Error::OddCount(m)));
                }
            }
            let specs: Vec<EnumSpec> = (a..=b)
                .step_by(2)
                .map(|m| {
                    with_max_n(
                        EnumSpec::new(m, EnumKind::Pairing)
                            .filter(EnumFilter::IrreducibleOnly)
                            .include_empty(true),
                        max_n,
                    )
                })
                .collect();
            for s in &specs {
                s.check()?;
            }
            let rows = drive::with_jobs(jobs, || {
                specs
                    .iter()
                    .map(|s| Ok((s.n, drive::enumerate(s)?.len())))
                    .collect::<Result<Vec<_>, CliError>>()
            })??;
            writeln!(out, "{}", count_table_json(&rows))?;
        }
        Command::Verify(a) => {
            let theorem = match (a.theorem, a.corollary) {
                (Some(1), _) => TheoremId::Theorem1,
                (Some(2), _) => TheoremId::Theorem2,
                (Some(_), _) => TheoremId::Theorem3,
                (_, Some(1)) => TheoremId::Corollary1,
                (_, Some(2)) => TheoremId::Corollary2,
                _ => TheoremId::Corollary3,
            };
            let (lo, hi) = a.n_range;
            let report = drive::with_jobs(jobs, || drive::verify_range(theorem, lo, hi, max_n))??;
            writeln!(out, "{}", report_json(&report))?;
            if !report.passed() {
                return Ok(2);
            }
        }
        Command::Census(a) => {
            let spec = with_max_n(EnumSpec::new(a.n, a.kind).include_empty(a.include_empty), max_n);
            let census = drive::with_jobs(jobs, || drive::census(&spec))??;
            for e in &census.entries {
                writeln!(out, "{}", family_json(&FamilyRecord::from_census(a.n, a.kind, e)))?;
            }
        }
        Command::Export(Export::Dot(input)) => {
            let t = read_tournament(&input, stdin)?;
            out.write_all(format::to_dot(&t).as_bytes())?;
        }
    }
    out.flush()?;
    Ok(0)
}
