//! Command-line front end: parse a permutation group and a list of field
//! characteristics, run the full invariant-ring report, and emit it as
//! text or JSON.
//!
//! Exit codes: 0 success, 2 input errors, 3 size caps exceeded, 4 internal
//! cross-check failures.

mod render;

use clap::{Parser, ValueEnum};

use perminv_core::{
    build_report, generate_group_capped, parse_cycles, Error, FieldChar, Permutation,
};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact homological invariants of the invariant ring of a permutation
/// group: Hilbert series, local cohomology Hilbert functions, a-invariant,
/// canonical module, quasi-Gorenstein and splitting verdicts.
#[derive(Parser)]
#[command(name = "perminv", version)]
struct Cli {
    /// Number of permuted variables.
    #[arg(long)]
    n: usize,

    /// Semicolon-separated generators in cycle notation, e.g.
    /// "(1 2)(3 4);(1 2 3)". Empty means the trivial group.
    #[arg(long, default_value = "")]
    gens: String,

    /// Comma-separated field characteristics; each entry is 0 or a prime.
    #[arg(long, default_value = "0,2,3")]
    chars: String,

    /// How many degrees below its top each cohomology window extends.
    #[arg(long, default_value_t = 10)]
    depth: usize,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Abort if the generated group grows beyond this many elements.
    #[arg(long, default_value_t = 1_000_000)]
    max_order: usize,
}

enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Usage(_) => 2,
        CliError::Core(err) => match err {
            Error::MalformedCycles { .. }
            | Error::IndexOutOfRange { .. }
            | Error::RepeatedIndex { .. }
            | Error::InvalidPermutation(_)
            | Error::ArityMismatch { .. }
            | Error::ArityTooLarge { .. }
            | Error::InvalidCharacteristic(_) => 2,
            Error::OrderCapExceeded { .. } | Error::MonomialCapExceeded { .. } => 3,
            _ => 4,
        },
    }
}

fn parse_generators(text: &str, n: usize) -> Result<Vec<Permutation>, CliError> {
    let mut gens = Vec::new();
    for part in text.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        gens.push(parse_cycles(part, n)?);
    }
    Ok(gens)
}

fn parse_characteristics(text: &str) -> Result<Vec<FieldChar>, CliError> {
    let mut chars = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let p: u32 = part
            .parse()
            .map_err(|_| CliError::Usage(format!("characteristic '{part}' is not a number")))?;
        chars.push(FieldChar::new(p)?);
    }
    if chars.is_empty() {
        return Err(CliError::Usage(
            "at least one characteristic is required".into(),
        ));
    }
    Ok(chars)
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if cli.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let gens = parse_generators(&cli.gens, cli.n)?;
    let chars = parse_characteristics(&cli.chars)?;
    let group = generate_group_capped(&gens, cli.n, cli.max_order)?;
    let report = build_report(&group, &chars, cli.depth)?;
    Ok(match cli.format {
        Format::Json => render::to_json(&report),
        Format::Text => render::to_text(&report),
    })
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => print!("{output}"),
        Err(e) => {
            match &e {
                CliError::Usage(msg) => eprintln!("error: {msg}"),
                CliError::Core(err) => eprintln!("error: {err}"),
            }
            std::process::exit(exit_code(&e));
        }
    }
}
