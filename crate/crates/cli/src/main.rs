//! Command-line front end: generate trajectories, run the built-in checks,
//! and export length/ratio tables.
//!
//! Exit codes: 0 when every requested check met expectations, 1 when a
//! verification failed or a computation left the supported regime, 2 on
//! usage or input errors. Output is deterministic: identical flags give
//! byte-identical bytes.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lookandsay::{
    audit_digits, check_shared_prefix, generate, length_sequence, ratio_series,
    verify_commutation_exhaustive, verify_conjugacy, AnalysisError, Digit, GenerateError,
    MorphismError, MorphismFactor, RatioSeries, RepeatFactor, Word, WordError,
};

#[derive(Parser)]
#[command(
    name = "lookandsay",
    about = "Generate look-and-say sequences, their repeat-k variants, and run the built-in checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first n terms of a trajectory.
    Generate {
        /// Seed digit string, e.g. 1 or 4411.
        #[arg(long)]
        seed: String,
        /// Repeat factor: 1 classical, 2 doubled, 3 tripled, 4 demonstrably
        /// unstable.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=4))]
        k: u8,
        /// Number of terms, including the seed.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Print every term as a full digit string regardless of size.
        #[arg(long)]
        raw: bool,
        /// Digit length beyond which terms print in run-length form.
        #[arg(long, default_value_t = 10_000)]
        rle_threshold: u64,
    },
    /// Run one of the built-in checks.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Print the digit length of each term from a single-digit seed.
    Lengths {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=9))]
        seed: u8,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=4))]
        k: u8,
        #[arg(long, default_value_t = 21, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print consecutive-length ratios for up to three seeds.
    Ratios {
        /// Comma-separated seed digit strings, e.g. 1,2,5.
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<String>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=4))]
        k: u8,
        #[arg(long, default_value_t = 51, value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Digit/count closure of the doubled trajectory from a seed digit.
    Digits {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=9))]
        seed: u8,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
    },
    /// Stripped of their trailing seed pairs, trajectories of seeds outside
    /// {1,2} coincide; checked pairwise over the given seeds.
    Corollary {
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u8).range(0..=9))]
        seeds: Vec<u8>,
        #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
    },
    /// The piece square: relabel-then-read equals read-then-relabel over the
    /// nine pieces with digit and count in 1..=3. Factor 4 is expected to
    /// break.
    Commute {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        k: u8,
    },
    /// Relabelling carries the classical trajectory onto the repeat-k one.
    Conjugacy {
        #[arg(long)]
        seed: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        k: u8,
        #[arg(long, default_value_t = 31, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    /// Whitespace table with header `i r1 r2 r3`; ratios only, three seeds.
    Dat,
}

enum CliError {
    Usage(String),
    Word(WordError),
    Generate(GenerateError),
    Morphism(MorphismError),
    Analysis(AnalysisError),
    Io(io::Error),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Word(_) | CliError::Analysis(_) => ExitCode::from(2),
            CliError::Generate(err) => match err {
                GenerateError::Step { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            },
            CliError::Morphism(err) => match err {
                MorphismError::Generate(GenerateError::Step { .. }) => ExitCode::from(1),
                _ => ExitCode::from(2),
            },
            CliError::Io(_) => ExitCode::from(1),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Word(err) => write!(f, "{err}"),
            CliError::Generate(err) => write!(f, "{err}"),
            CliError::Morphism(err) => write!(f, "{err}"),
            CliError::Analysis(err) => write!(f, "{err}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<WordError> for CliError {
    fn from(err: WordError) -> Self {
        CliError::Word(err)
    }
}

impl From<GenerateError> for CliError {
    fn from(err: GenerateError) -> Self {
        CliError::Generate(err)
    }
}

impl From<MorphismError> for CliError {
    fn from(err: MorphismError) -> Self {
        CliError::Morphism(err)
    }
}

impl From<AnalysisError> for CliError {
    fn from(err: AnalysisError) -> Self {
        CliError::Analysis(err)
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    let mut out = io::BufWriter::new(stdout);
    let result = run(cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        // a downstream reader hanging up is a normal way to stop
        Err(CliError::Io(err)) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Generate {
            seed,
            k,
            n,
            format,
            raw,
            rle_threshold,
        } => cmd_generate(out, &seed, k, n as usize, format, raw, rle_threshold),
        Command::Verify { check } => cmd_verify(out, check),
        Command::Lengths { seed, k, n, format } => cmd_lengths(out, seed, k, n as usize, format),
        Command::Ratios {
            seeds,
            k,
            n,
            format,
        } => cmd_ratios(out, &seeds, k, n as usize, format),
    }
}

fn repeat_factor(k: u8) -> RepeatFactor {
    RepeatFactor::new(k).expect("clap keeps k in range")
}

fn digit(value: u8) -> Digit {
    Digit::new(value).expect("clap keeps seeds in range")
}

fn cmd_generate(
    out: &mut impl Write,
    seed: &str,
    k: u8,
    n: usize,
    format: Format,
    raw: bool,
    rle_threshold: u64,
) -> Result<ExitCode, CliError> {
    if format == Format::Dat {
        return Err(CliError::Usage(
            "dat output is only available for ratios".into(),
        ));
    }
    let seed = Word::encode(seed)?;
    let trajectory = generate(&seed, repeat_factor(k), n)?;
    let render = |term: &Word| {
        if raw || term.digit_len() <= rle_threshold {
            term.decode()
        } else {
            term.to_string()
        }
    };
    match format {
        Format::Plain => {
            for term in trajectory.terms() {
                writeln!(out, "{}", render(term))?;
            }
        }
        Format::Csv => {
            writeln!(out, "i,term")?;
            for (i, term) in trajectory.terms().iter().enumerate() {
                writeln!(out, "{i},{}", render(term))?;
            }
        }
        Format::Dat => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(out: &mut impl Write, check: Check) -> Result<ExitCode, CliError> {
    match check {
        Check::Digits { seed, n } => {
            let audit = audit_digits(digit(seed), n as usize);
            writeln!(out, "{audit}")?;
            Ok(exit_for(audit.passed()))
        }
        Check::Corollary { seeds, n } => {
            if seeds.len() < 2 {
                return Err(CliError::Usage(
                    "the corollary check needs at least two seeds".into(),
                ));
            }
            let mut all_passed = true;
            for (i, &a) in seeds.iter().enumerate() {
                for &b in &seeds[i + 1..] {
                    let report = check_shared_prefix(digit(a), digit(b), n as usize)?;
                    writeln!(out, "{report}")?;
                    all_passed &= report.passed();
                }
            }
            Ok(exit_for(all_passed))
        }
        Check::Commute { k } => {
            let report = verify_commutation_exhaustive(repeat_factor(k));
            writeln!(out, "{report}")?;
            if k == 4 {
                // factor 4 is expected to fail; finding the failure is the pass
                if report.passed() {
                    writeln!(out, "expected a breakdown at factor 4, found none")?;
                    Ok(ExitCode::from(1))
                } else {
                    writeln!(
                        out,
                        "breakdown confirmed: the piece square does not commute at factor 4"
                    )?;
                    Ok(ExitCode::SUCCESS)
                }
            } else {
                Ok(exit_for(report.passed()))
            }
        }
        Check::Conjugacy { seed, k, n } => {
            let seed = Word::encode(&seed)?;
            let factor = MorphismFactor::new(k).expect("clap keeps k in range");
            let report = verify_conjugacy(&seed, factor, n as usize)?;
            writeln!(out, "{report}")?;
            Ok(exit_for(report.passed()))
        }
    }
}

fn exit_for(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_lengths(
    out: &mut impl Write,
    seed: u8,
    k: u8,
    n: usize,
    format: Format,
) -> Result<ExitCode, CliError> {
    if format == Format::Dat {
        return Err(CliError::Usage(
            "dat output is only available for ratios".into(),
        ));
    }
    let lengths = length_sequence(digit(seed), repeat_factor(k), n)?;
    match format {
        Format::Plain => {
            for len in &lengths {
                writeln!(out, "{len}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "i,value")?;
            for (i, len) in lengths.iter().enumerate() {
                writeln!(out, "{i},{len}")?;
            }
        }
        Format::Dat => unreachable!("rejected above"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ratios(
    out: &mut impl Write,
    seeds: &[String],
    k: u8,
    n: usize,
    format: Format,
) -> Result<ExitCode, CliError> {
    if seeds.is_empty() || seeds.len() > 3 {
        return Err(CliError::Usage(
            "ratios takes between one and three seeds".into(),
        ));
    }
    if format == Format::Dat && seeds.len() != 3 {
        return Err(CliError::Usage(
            "dat output needs exactly three seeds to fill columns r1 r2 r3".into(),
        ));
    }
    let mut series: Vec<RatioSeries> = Vec::with_capacity(seeds.len());
    for seed in seeds {
        series.push(ratio_series(&Word::encode(seed)?, repeat_factor(k), n)?);
    }
    let rows = n - 1;
    match format {
        Format::Dat => {
            writeln!(out, "i r1 r2 r3")?;
            for i in 0..rows {
                write!(out, "{}", i + 1)?;
                for s in &series {
                    write!(out, " {:.6}", s.ratios()[i])?;
                }
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let header: Vec<String> = seeds.iter().map(|s| format!("r{s}")).collect();
            writeln!(out, "i,{}", header.join(","))?;
            for i in 0..rows {
                let row: Vec<String> = series
                    .iter()
                    .map(|s| format!("{:.6}", s.ratios()[i]))
                    .collect();
                writeln!(out, "{},{}", i + 1, row.join(","))?;
            }
        }
        Format::Plain => {
            for i in 0..rows {
                write!(out, "{}", i + 1)?;
                for s in &series {
                    write!(out, " {:.6}", s.ratios()[i])?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
