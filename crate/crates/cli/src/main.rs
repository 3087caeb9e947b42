//! `heckegroup`: JSON reports for the heckegroup toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails,
//! 2 for usage errors (bad flags, refused sizes), 3 for computation errors.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heckegroup::coxeter::CoxeterType;
use heckegroup::hecke::MonoidVariant;
use heckegroup::nd::CommutantVariant;
use heckegroup::tower::TowerKind;
use heckegroup::Rational;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "heckegroup", version, about = "Exact computations in Hecke group algebras and their relatives")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Print the matrix payload as CSV instead of the JSON report.
    #[arg(long, global = true)]
    csv: bool,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Lift the desk-scale size limits.
    #[arg(long, global = true)]
    force: bool,
    /// Add `wall_time_ms` to the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// dim HW by pair count, operator closure and the sandwich equations.
    Dims {
        #[arg(long, value_parser = parse_group)]
        group: CoxeterType,
        /// Skip closure and sandwich.
        #[arg(long)]
        count_only: bool,
    },
    /// Multiplication table of 1, s1, pi1 for a rank-one group.
    Table {
        #[arg(long, value_parser = parse_group, default_value = "A1")]
        group: CoxeterType,
    },
    /// Cartan matrices.
    Cartan {
        #[arg(long, value_parser = parse_group, group = "target")]
        group: Option<CoxeterType>,
        #[arg(long, group = "target", value_name = "N")]
        ndfa: Option<usize>,
        #[arg(long, group = "target", value_name = "N")]
        ndpfa: Option<usize>,
    },
    /// The basis B or the v_sigma basis with module dimensions.
    Basis {
        #[arg(long, value_parser = parse_group)]
        group: CoxeterType,
        #[arg(long, value_enum)]
        kind: BasisKind,
    },
    /// Operator identities and structural checks.
    Verify {
        #[arg(value_enum)]
        what: VerifyKind,
        #[arg(long)]
        n: usize,
        /// Values of q for the generic quadratic relation (relations only).
        #[arg(long, value_delimiter = ',', value_parser = commands::parse_q, default_value = "2,-1,1/3", allow_hyphen_values = true)]
        q: Vec<Rational>,
    },
    /// Sizes of the monoids generated by s, pi or by pi, pibar on kS_n.
    Monoid {
        #[arg(long, value_enum)]
        which: WhichMonoid,
        #[arg(long)]
        n: usize,
    },
    /// Counts of nondecreasing and parking functions.
    Count {
        #[arg(long, value_name = "N")]
        ndf: Option<usize>,
        #[arg(long, value_name = "N")]
        ndpf: Option<usize>,
    },
    /// Induction and restriction certificates for a tower of algebras.
    Tower {
        /// H0, HS, HS*, NDFA or NDPFA.
        #[arg(long, value_parser = parse_tower)]
        which: TowerKind,
        #[arg(long, requires = "n", conflicts_with = "up_to")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        /// Every (m, n) with m, n >= 1 and m + n <= this bound.
        #[arg(long, value_name = "BOUND", required_unless_present = "m")]
        up_to: Option<usize>,
    },
    /// Transition matrices and characters in the Grothendieck rings.
    Grothendieck {
        #[arg(long, value_enum)]
        which: WhichGrothendieck,
        #[arg(long)]
        n: usize,
    },
    /// Evaluation-preserving commutant of nondecreasing maps acting on words.
    Commutant {
        #[arg(long)]
        n: usize,
        #[arg(long, group = "space", value_name = "SIZE")]
        alphabet: Option<usize>,
        #[arg(long, group = "space")]
        parking: bool,
        #[arg(long, group = "space")]
        initial: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BasisKind {
    #[value(name = "B", alias = "b")]
    B,
    Vsigma,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VerifyKind {
    Relations,
    Sandwich,
    Tl,
    Idempotents,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum WhichMonoid {
    SPi,
    PiPibar,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum WhichGrothendieck {
    #[value(name = "ndpfa-G", alias = "ndpfa-g")]
    NdpfaG,
    HsCharacters,
}

fn parse_group(s: &str) -> Result<CoxeterType, String> {
    s.parse().map_err(|e: heckegroup::Error| e.to_string())
}

fn parse_tower(s: &str) -> Result<TowerKind, String> {
    s.parse().map_err(|e: heckegroup::Error| e.to_string())
}

fn run(cmd: &Command, force: bool) -> commands::Run {
    use commands as c;
    match cmd {
        Command::Dims { group, count_only } => c::dims(*group, *count_only, force),
        Command::Table { group } => c::table(*group),
        Command::Cartan { group, ndfa, ndpfa } => match (group, ndfa, ndpfa) {
            (Some(g), _, _) => c::cartan_group(*g, force),
            (_, Some(n), _) => c::cartan_ndfa(*n, force),
            (_, _, Some(n)) => c::cartan_ndpfa(*n, force),
            _ => Err(Failure::Usage("cartan needs --group, --ndfa or --ndpfa".into())),
        },
        Command::Basis { group, kind: BasisKind::B } => c::basis_b(*group, force),
        Command::Basis { group, kind: BasisKind::Vsigma } => c::basis_vsigma(*group, force),
        Command::Verify { what, n, q } => match what {
            VerifyKind::Relations => c::verify_relations(*n, q, force),
            VerifyKind::Sandwich => c::verify_sandwich(*n, force),
            VerifyKind::Tl => c::verify_tl(*n, force),
            VerifyKind::Idempotents => c::verify_idempotents(*n, force),
        },
        Command::Monoid { which, n } => {
            let v = match which {
                WhichMonoid::SPi => MonoidVariant::SPi,
                WhichMonoid::PiPibar => MonoidVariant::PiPibar,
            };
            c::monoid(v, *n, force)
        }
        Command::Count { ndf, ndpf } => c::count(*ndf, *ndpf, force),
        Command::Tower { which, m, n, up_to } => {
            let pairs = match (m, n, up_to) {
                (Some(m), Some(n), _) => vec![(*m, *n)],
                (_, _, Some(b)) => (2..=*b).flat_map(|s| (1..s).map(move |m| (m, s - m))).collect(),
                _ => return Err(Failure::Usage("tower needs --m and --n, or --up-to".into())),
            };
            c::tower(*which, &pairs, force)
        }
        Command::Grothendieck { which: WhichGrothendieck::NdpfaG, n } => c::grothendieck_g(*n, force),
        Command::Grothendieck { which: WhichGrothendieck::HsCharacters, n } => c::grothendieck_characters(*n, force),
        Command::Commutant { n, alphabet, parking, initial } => {
            let v = match (alphabet, parking, initial) {
                (Some(a), false, false) => CommutantVariant::Words { alphabet: *a },
                (None, true, false) => CommutantVariant::Parking,
                (None, false, true) => CommutantVariant::Initial,
                _ => return Err(Failure::Usage("commutant needs one of --alphabet, --parking, --initial".into())),
            };
            c::commutant(*n, v, force)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let start = Instant::now();
    let outcome = match run(&cli.command, cli.common.force) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("heckegroup: {f}");
            return ExitCode::from(match f {
                Failure::Usage(_) => 2,
                Failure::Compute(_) => 3,
            });
        }
    };
    let elapsed = cli.common.timing.then(|| start.elapsed().as_millis());
    let pass = outcome.pass();
    let text = if cli.common.csv {
        match &outcome.table {
            Some(t) => t.to_csv(),
            None => {
                eprintln!("heckegroup: this command has no matrix payload for --csv");
                return ExitCode::from(2);
            }
        }
    } else {
        let report = outcome.into_report(&command, elapsed);
        if let Err(e) = report::validate(&report) {
            eprintln!("heckegroup: malformed report: {e}");
            return ExitCode::from(3);
        }
        let mut s = serde_json::to_string_pretty(&report).expect("serializable");
        s.push('\n');
        s
    };
    if let Err(e) = emit(&text, cli.common.out.as_ref()) {
        eprintln!("heckegroup: cannot write output: {e}");
        return ExitCode::from(3);
    }
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
