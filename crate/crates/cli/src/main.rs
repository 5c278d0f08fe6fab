use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use eword::enumeration::e_word_with_stats;
use eword::stepper::{self, ESequence};
use eword::word::RenderedWord;
use eword::{farey, verify, Alphabet, ExtRational, TerminationMode};

/// Traces longer than this are refused rather than printed.
const MAX_TRACE_STEPS: u64 = 100_000;

#[derive(Parser)]
#[command(
    name = "eword",
    version,
    about = "E-words of rationals, E-sequence traces, and exhaustive checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the E-word of a rational (`p/q`, an integer, or `inf`).
    Compute {
        #[arg(allow_hyphen_values = true)]
        rational: String,
        #[arg(long, value_enum, default_value_t = Mode::Orphan)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ab)]
        alphabet: AlphabetArg,
    },
    /// Run an E-sequence such as `[5;4,3]` from `(a, b)` and print every step.
    Trace {
        sequence: String,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ab)]
        alphabet: AlphabetArg,
    },
    /// Print the lower and upper parents of a rational.
    Parents {
        #[arg(allow_hyphen_values = true)]
        rational: String,
    },
    /// Print the canonical continued fraction of a nonnegative rational.
    Cf {
        #[arg(allow_hyphen_values = true)]
        rational: String,
    },
    /// Print the Farey level of a nonnegative rational.
    Level {
        #[arg(allow_hyphen_values = true)]
        rational: String,
    },
    /// Check every property over indices with |p| + q <= bound.
    Verify {
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(2..))]
        bound: u64,
    },
    /// Compare |{p : 0 < |p| < n, gcd(p, n) = 1}| with the number of E-words of length n.
    Count {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Orphan,
    Shortcut,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    #[value(name = "ab")]
    Ab,
    #[value(name = "AB")]
    Upper,
}

impl From<AlphabetArg> for Alphabet {
    fn from(a: AlphabetArg) -> Self {
        match a {
            AlphabetArg::Ab => Alphabet::Ab,
            AlphabetArg::Upper => Alphabet::AB,
        }
    }
}

impl From<Mode> for TerminationMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Orphan => TerminationMode::Orphan,
            Mode::Shortcut => TerminationMode::Shortcut,
        }
    }
}

/// A failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_rational(text: &str) -> Result<ExtRational, UsageError> {
    Ok(text.trim().parse::<ExtRational>()?)
}

fn print_json(value: serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("json value")
    );
}

fn compute(text: &str, mode: Mode, alphabet: Alphabet, format: Format) -> Result<(), UsageError> {
    let x = parse_rational(text)?;
    let eval = e_word_with_stats(&x, mode.into())?;
    let word = &eval.word;
    let negative = word.has_negative_exponent();
    match format {
        Format::Plain => {
            println!("{}", word.format(alphabet));
            if negative {
                eprintln!("note: E({x}) has negative exponents over {{a, b}}");
            }
        }
        Format::Json => print_json(json!({
            "index": x.to_string(),
            "mode": match mode { Mode::Orphan => "orphan", Mode::Shortcut => "shortcut" },
            "alphabet": match alphabet { Alphabet::Ab => "ab", Alphabet::AB => "AB" },
            "word": RenderedWord(word, alphabet),
            "text": word.format(alphabet),
            "length": word.len(),
            "palindrome": word.is_palindrome(),
            "negative_exponents": negative,
            "evaluations": eval.evaluations,
        })),
    }
    Ok(())
}

fn trace(text: &str, alphabet: Alphabet, format: Format) -> Result<(), UsageError> {
    let seq: ESequence = text.trim().parse()?;
    if seq.total_steps() > MAX_TRACE_STEPS {
        return Err(UsageError(format!(
            "{seq} takes {} steps; traces are limited to {MAX_TRACE_STEPS}",
            seq.total_steps()
        )));
    }
    let trace = stepper::run_esequence(&seq);
    match format {
        Format::Plain => {
            for line in trace.lines(alphabet) {
                println!("{line}");
            }
            let report = trace.report(alphabet);
            let fin = trace.final_pair();
            println!("final indices: {}, {}", fin.left_index(), fin.right_index());
            println!("p_i/q_i: {}", report.p_q.join(" "));
            println!("r_i/s_i: {}", report.r_s.join(" "));
            println!(
                "last changed: {} = E({})",
                report.last_changed, report.last_changed_index
            );
            println!(
                "exponent sums: a {}, b {}",
                report.exponent_sums.a, report.exponent_sums.b
            );
        }
        Format::Json => print_json(serde_json::to_value(trace.report(alphabet))?),
    }
    Ok(())
}

fn parents(text: &str, format: Format) -> Result<(), UsageError> {
    let x = parse_rational(text)?;
    let (lower, upper) = farey::parents(&x)?;
    match format {
        Format::Plain => println!("{lower} {upper}"),
        Format::Json => print_json(json!({
            "index": x.to_string(),
            "lower": lower.to_string(),
            "upper": upper.to_string(),
        })),
    }
    Ok(())
}

fn continued_fraction(text: &str, format: Format) -> Result<(), UsageError> {
    let x = parse_rational(text)?;
    let cf = farey::to_continued_fraction(&x)?;
    match format {
        Format::Plain => println!("{cf}"),
        Format::Json => print_json(json!({
            "index": x.to_string(),
            "continued_fraction": cf.to_string(),
            "entries": cf.entries().iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        })),
    }
    Ok(())
}

fn level(text: &str, format: Format) -> Result<(), UsageError> {
    let x = parse_rational(text)?;
    let level = farey::farey_level(&x)?;
    match format {
        Format::Plain => println!("{level}"),
        Format::Json => print_json(json!({
            "index": x.to_string(),
            "level": level.to_string(),
        })),
    }
    Ok(())
}

fn run_verify(bound: u64, format: Format) -> ExitCode {
    let start = Instant::now();
    let report = verify::sweep(bound);
    match format {
        Format::Plain => {
            println!("{}", report.table());
            println!("elapsed {:.2?}", start.elapsed());
        }
        Format::Json => println!("{}", report.to_json()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn count(n: u64, format: Format) {
    let (phi, words) = verify::count_ewords_of_length(n);
    match format {
        Format::Plain => {
            println!("n {n}: |phi| {phi}, E-words of length n {words}");
            if n == 1 {
                println!("note: length 1 holds only the orphan words a and b");
            }
        }
        Format::Json => print_json(json!({
            "n": n,
            "phi": phi,
            "ewords": words,
            "equal": phi == words,
        })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = match cli.command {
        Command::Compute {
            rational,
            mode,
            alphabet,
        } => compute(&rational, mode, alphabet.into(), format),
        Command::Trace { sequence, alphabet } => trace(&sequence, alphabet.into(), format),
        Command::Parents { rational } => parents(&rational, format),
        Command::Cf { rational } => continued_fraction(&rational, format),
        Command::Level { rational } => level(&rational, format),
        Command::Verify { bound } => return run_verify(bound, format),
        Command::Count { n } => {
            count(n, format);
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
