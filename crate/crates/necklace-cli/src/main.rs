//! `necklace` — exact counting, cross-verification, and enumeration of
//! necklaces and bracelets from the command line.
//!
//! Exit codes: 0 success, 1 verification mismatch (or internal invariant
//! failure), 2 usage or parse error, 3 resource limit exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use necklace::cycleindex::{
    cycle_index_cyclic_bounded, cycle_index_dihedral_bounded, extract_count, DEFAULT_TERM_LIMIT,
};
use necklace::orbits::{count_orbits_bounded, representatives_bounded, DEFAULT_WORD_LIMIT};
use necklace::{
    classify_dihedral_case, count_cyclic, count_dihedral, ColorMultiplicities, CountValue, Error,
    Mode, SymmetryGroup,
};

mod harness;
mod report;

use report::{CountReport, CSV_HEADER};

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

const WORD_LIMIT_ENV: &str = "NECKLACE_LIMIT_WORDS";

#[derive(Parser)]
#[command(
    name = "necklace",
    version,
    about = "Exact necklace and bracelet counting with prescribed per-color bead counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count colorings for one tuple of per-color bead counts.
    Count {
        /// Comma-separated bead counts per color, e.g. 3,6
        #[arg(long, value_delimiter = ',', required = true, value_name = "N1,N2,...")]
        counts: Vec<u64>,
        #[arg(long, value_enum)]
        group: GroupChoice,
        #[arg(long, value_enum, default_value_t = ModeChoice::Corrected)]
        mode: ModeChoice,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
        /// Which computation path produces the value.
        #[arg(long, value_enum, default_value_t = MethodChoice::ClosedForm)]
        method: MethodChoice,
        /// Term budget for --method cycle-index.
        #[arg(long)]
        limit_terms: Option<u64>,
        /// Word budget for --method brute-force.
        #[arg(long)]
        limit_words: Option<u64>,
    },
    /// Cross-check closed form, cycle index, and brute force on every
    /// composition up to the given size; nonzero exit on any mismatch.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,
        /// Largest number of colors to sweep.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        colors: u64,
        #[arg(long, value_enum, default_value_t = ModeChoice::Corrected)]
        mode: ModeChoice,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
        #[arg(long)]
        limit_terms: Option<u64>,
        #[arg(long)]
        limit_words: Option<u64>,
    },
    /// List one canonical representative per orbit, then a total line.
    Enumerate {
        #[arg(long, value_delimiter = ',', required = true, value_name = "N1,N2,...")]
        counts: Vec<u64>,
        #[arg(long, value_enum)]
        group: GroupOne,
        #[arg(long)]
        limit_words: Option<u64>,
    },
    /// Count every m-part composition of N, with a grand total.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_enum, default_value_t = GroupOne::Cyclic)]
        group: GroupOne,
        #[arg(long, value_enum, default_value_t = ModeChoice::Corrected)]
        mode: ModeChoice,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
        /// Collapse rows that are color permutations of one another.
        #[arg(long)]
        partitions: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupChoice {
    Cyclic,
    Dihedral,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupOne {
    Cyclic,
    Dihedral,
}

impl GroupOne {
    fn symmetry(self) -> SymmetryGroup {
        match self {
            GroupOne::Cyclic => SymmetryGroup::Cyclic,
            GroupOne::Dihedral => SymmetryGroup::Dihedral,
        }
    }

    fn name(self) -> &'static str {
        match self {
            GroupOne::Cyclic => "cyclic",
            GroupOne::Dihedral => "dihedral",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeChoice {
    Corrected,
    PaperLiteral,
}

impl ModeChoice {
    fn mode(self) -> Mode {
        match self {
            ModeChoice::Corrected => Mode::Corrected,
            ModeChoice::PaperLiteral => Mode::PaperLiteral,
        }
    }

    fn name(self) -> &'static str {
        match self {
            ModeChoice::Corrected => "corrected",
            ModeChoice::PaperLiteral => "paper_literal",
        }
    }

    fn diagnostic(self) -> bool {
        self == ModeChoice::PaperLiteral
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodChoice {
    ClosedForm,
    CycleIndex,
    BruteForce,
}

impl MethodChoice {
    fn name(self) -> &'static str {
        match self {
            MethodChoice::ClosedForm => "closed_form",
            MethodChoice::CycleIndex => "cycle_index",
            MethodChoice::BruteForce => "brute_force",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Count {
            counts,
            group,
            mode,
            format,
            method,
            limit_terms,
            limit_words,
        } => run_count(
            &counts,
            group,
            mode,
            format,
            method,
            limit_terms,
            limit_words,
        ),
        Command::Verify {
            max_n,
            colors,
            mode,
            format,
            limit_terms,
            limit_words,
        } => run_verify(
            max_n,
            colors as usize,
            mode,
            format,
            limit_terms,
            limit_words,
        ),
        Command::Enumerate {
            counts,
            group,
            limit_words,
        } => run_enumerate(&counts, group, limit_words),
        Command::Sweep {
            n,
            m,
            group,
            mode,
            format,
            partitions,
        } => run_sweep(n, m as usize, group, mode, format, partitions),
    };
    ExitCode::from(code)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::TermLimit { .. } | Error::WordLimit { .. } => EXIT_RESOURCE,
        Error::AllZero | Error::Zero { .. } | Error::Overflow | Error::NotADivisor { .. } => {
            EXIT_USAGE
        }
        Error::VariableMismatch { .. } | Error::NonIntegral { .. } => EXIT_MISMATCH,
    }
}

fn fail(err: &Error) -> u8 {
    eprintln!("error: {err}");
    exit_code_for(err)
}

/// Flag value, else the `NECKLACE_LIMIT_WORDS` environment variable, else
/// the library default.
fn resolve_word_limit(flag: Option<u64>) -> Result<u64, u8> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(WORD_LIMIT_ENV) {
        Ok(raw) => raw.parse().map_err(|_| {
            eprintln!("error: {WORD_LIMIT_ENV} must be an unsigned integer, got {raw:?}");
            EXIT_USAGE
        }),
        Err(_) => Ok(DEFAULT_WORD_LIMIT),
    }
}

fn parse_tuple(counts: &[u64]) -> Result<ColorMultiplicities, u8> {
    ColorMultiplicities::new(counts).map_err(|err| {
        eprintln!("error: {err}");
        EXIT_USAGE
    })
}

#[allow(clippy::too_many_arguments)]
fn run_count(
    counts: &[u64],
    group: GroupChoice,
    mode: ModeChoice,
    format: FormatChoice,
    method: MethodChoice,
    limit_terms: Option<u64>,
    limit_words: Option<u64>,
) -> u8 {
    if mode == ModeChoice::PaperLiteral && method != MethodChoice::ClosedForm {
        eprintln!("error: --mode paper-literal is only defined for --method closed-form");
        return EXIT_USAGE;
    }
    let tuple = match parse_tuple(counts) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let word_limit = match resolve_word_limit(limit_words) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let term_limit = limit_terms.unwrap_or(DEFAULT_TERM_LIMIT);

    let groups: &[GroupOne] = match group {
        GroupChoice::Cyclic => &[GroupOne::Cyclic],
        GroupChoice::Dihedral => &[GroupOne::Dihedral],
        GroupChoice::Both => &[GroupOne::Cyclic, GroupOne::Dihedral],
    };

    let mut reports = Vec::new();
    for &g in groups {
        let value = match count_one(
            counts,
            &tuple,
            g,
            mode.mode(),
            method,
            term_limit,
            word_limit,
        ) {
            Ok(v) => v,
            Err(err) => return fail(&err),
        };
        reports.push(CountReport {
            counts: counts.to_vec(),
            n: tuple.total(),
            group: g.name(),
            mode: mode.name(),
            case: (g == GroupOne::Dihedral).then(|| classify_dihedral_case(&tuple).name()),
            method: method.name(),
            value: value.to_string(),
            diagnostic: mode.diagnostic(),
        });
    }

    match format {
        FormatChoice::Text => {
            for r in &reports {
                println!("{}", r.text_line());
            }
        }
        FormatChoice::Json => {
            let json = if reports.len() == 1 {
                serde_json::to_string(&reports[0])
            } else {
                serde_json::to_string(&reports)
            };
            println!("{}", json.expect("report serialization cannot fail"));
        }
        FormatChoice::Csv => {
            println!("{CSV_HEADER}");
            for r in &reports {
                println!("{}", r.csv_row());
            }
        }
    }
    EXIT_OK
}

/// The requested count along one computation path. The cycle-index path
/// works on the raw tuple (zeros allowed); the others use the validated one.
fn count_one(
    raw_counts: &[u64],
    tuple: &ColorMultiplicities,
    group: GroupOne,
    mode: Mode,
    method: MethodChoice,
    term_limit: u64,
    word_limit: u64,
) -> Result<CountValue, Error> {
    match (method, group) {
        (MethodChoice::ClosedForm, GroupOne::Cyclic) => {
            count_cyclic(tuple).map(CountValue::Integer)
        }
        (MethodChoice::ClosedForm, GroupOne::Dihedral) => count_dihedral(tuple, mode),
        (MethodChoice::CycleIndex, _) => {
            let total: u64 = raw_counts.iter().sum();
            let index = match group {
                GroupOne::Cyclic => {
                    cycle_index_cyclic_bounded(total, raw_counts.len(), term_limit)?
                }
                GroupOne::Dihedral => {
                    cycle_index_dihedral_bounded(total, raw_counts.len(), term_limit)?
                }
            };
            extract_count(&index, raw_counts).map(CountValue::Integer)
        }
        (MethodChoice::BruteForce, _) => {
            count_orbits_bounded(tuple, group.symmetry(), word_limit).map(CountValue::Integer)
        }
    }
}

fn run_verify(
    max_n: u64,
    max_colors: usize,
    mode: ModeChoice,
    format: FormatChoice,
    limit_terms: Option<u64>,
    limit_words: Option<u64>,
) -> u8 {
    let word_limit = match resolve_word_limit(limit_words) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let term_limit = limit_terms.unwrap_or(DEFAULT_TERM_LIMIT);
    let report = match harness::run_verify(
        max_n,
        max_colors,
        mode.mode(),
        mode.name(),
        term_limit,
        word_limit,
    ) {
        Ok(r) => r,
        Err(err) => return fail(&err),
    };
    match format {
        FormatChoice::Json => println!(
            "{}",
            serde_json::to_string(&report).expect("report serialization cannot fail")
        ),
        _ => print!("{}", harness::render_text(&report)),
    }
    if report.ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

fn run_enumerate(counts: &[u64], group: GroupOne, limit_words: Option<u64>) -> u8 {
    let tuple = match parse_tuple(counts) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let word_limit = match resolve_word_limit(limit_words) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let reps = match representatives_bounded(&tuple, group.symmetry(), word_limit) {
        Ok(r) => r,
        Err(err) => return fail(&err),
    };
    for word in &reps {
        println!("{word}");
    }
    println!("total={}", reps.len());
    EXIT_OK
}

fn run_sweep(
    total: u64,
    parts: usize,
    group: GroupOne,
    mode: ModeChoice,
    format: FormatChoice,
    partitions: bool,
) -> u8 {
    let mut rows = Vec::new();
    let mut grand_total = BigRational::zero();
    let mut seen_partitions = std::collections::BTreeSet::new();

    for comp in necklace::numtheory::compositions(total, parts) {
        let tuple = match ColorMultiplicities::new(&comp) {
            Ok(t) => t,
            Err(err) => return fail(&err),
        };
        let value = match group {
            GroupOne::Cyclic => match count_cyclic(&tuple) {
                Ok(c) => CountValue::Integer(c),
                Err(err) => return fail(&err),
            },
            GroupOne::Dihedral => match count_dihedral(&tuple, mode.mode()) {
                Ok(v) => v,
                Err(err) => return fail(&err),
            },
        };
        grand_total += match &value {
            CountValue::Integer(c) => BigRational::from_integer(BigInt::from(c.clone())),
            CountValue::Ratio(r) => r.clone(),
        };

        // the grand total always covers every composition; --partitions only
        // collapses the displayed rows
        if partitions {
            let mut key = comp.clone();
            key.sort_unstable();
            if !seen_partitions.insert(key) {
                continue;
            }
        }
        rows.push(CountReport {
            counts: comp.clone(),
            n: total,
            group: group.name(),
            mode: mode.name(),
            case: (group == GroupOne::Dihedral).then(|| classify_dihedral_case(&tuple).name()),
            method: "closed_form",
            value: value.to_string(),
            diagnostic: mode.diagnostic(),
        });
    }

    let total_value = CountValue::Ratio(grand_total).to_string();
    match format {
        FormatChoice::Text => {
            for r in &rows {
                println!("{}", r.text_line());
            }
            println!("total={total_value}");
        }
        FormatChoice::Json => {
            let doc = serde_json::json!({
                "n": total,
                "m": parts,
                "group": group.name(),
                "mode": mode.name(),
                "partitions": partitions,
                "rows": rows,
                "total": total_value,
            });
            println!("{doc}");
        }
        FormatChoice::Csv => {
            println!("{CSV_HEADER}");
            for r in &rows {
                println!("{}", r.csv_row());
            }
            println!(
                "total,{},{},{},,closed_form,{}",
                total,
                group.name(),
                mode.name(),
                total_value
            );
        }
    }
    EXIT_OK
}
