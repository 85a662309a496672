//! Command-line front end. The `helberg` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 on success, 1 when decoding or verification fails, 2 for
//! usage and parameter errors.

use std::fs::File;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::json;

use crate::channel::{self, all_patterns, DeletionPattern};
use crate::codebook::{self, Budget, SizeSearchResult, DEFAULT_BUDGET};
use crate::decoder::{self, Algorithm};
use crate::error::Error;
use crate::oracle;
use crate::params::{weight_sequence, CodeParams};
use crate::word::{self, format_word, Codeword, ReceivedWord};

#[derive(Debug, Parser)]
#[command(name = "helberg", version, about = "q-ary Helberg insertion/deletion codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,

    /// Maximum number of words an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the weights w_1..w_count.
    Weights {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        count: usize,
    },
    /// Report the moment and residue of a word and whether it is a codeword.
    Check {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
    },
    /// Largest codebook size and the residues attaining it, per length.
    Sizes {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
        /// Length or inclusive range, e.g. `7` or `1..16`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Include the full residue histogram (json only).
        #[arg(long)]
        histogram: bool,
    },
    /// Delete symbols from a word.
    Corrupt {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
        /// Comma-separated 1-based positions, e.g. `3,5`.
        #[arg(long, conflicts_with = "random")]
        pattern: Option<String>,
        /// Delete this many uniformly random positions.
        #[arg(long, requires = "seed")]
        random: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Recover the transmitted codeword from a received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Auto)]
        algorithm: AlgorithmArg,
        /// Print the decoder trace.
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustively confirm that codebooks correct up to d deletions.
    Verify {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: usize,
        /// Length or inclusive range.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Residue; when omitted every largest-codebook residue is checked.
        #[arg(long)]
        r: Option<BigUint>,
        #[arg(long)]
        m: Option<BigUint>,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: BigUint,
    /// Modulus; defaults to w_(n+1).
    #[arg(long)]
    pub m: Option<BigUint>,
}

impl CodeArgs {
    fn params(&self) -> Result<CodeParams, Error> {
        CodeParams::new(self.q, self.d, self.n, self.r.clone(), self.m.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Auto,
    D1,
    D2,
    Dm,
    Oracle,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let n: usize = s.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}

/// Failure of a CLI invocation, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Decoding or verification failed (exit 1).
    Failed(String),
    /// Bad arguments or parameters (exit 2).
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Undecodable(_)
            | Error::CorruptedSameLength
            | Error::BeyondCapacity { .. }
            | Error::WrongDeletionCount { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `std::env::args` and runs the command.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.out {
        Some(path) => File::create(path)
            .map_err(CliError::from)
            .and_then(|f| execute(&cli, &mut io::BufWriter::new(f))),
        None => execute(&cli, &mut io::stdout().lock()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Failed(msg) | CliError::Usage(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(e.code())
        }
    }
}

/// Runs a parsed command, writing its output to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let budget = Budget(cli.budget);
    match &cli.command {
        Command::Weights { q, d, count } => weights(*q, *d, *count, cli.format, out),
        Command::Check { code, word } => check(code, word, cli.format, out),
        Command::Sizes {
            q,
            d,
            n,
            histogram,
        } => sizes(*q, *d, n.clone(), *histogram, budget, cli.format, out),
        Command::Corrupt {
            code,
            word,
            pattern,
            random,
            seed,
        } => corrupt(code, word, pattern.as_deref(), *random, *seed, cli.format, out),
        Command::Decode {
            code,
            word,
            algorithm,
            trace,
        } => decode(code, word, *algorithm, *trace, cli.format, out),
        Command::Verify { q, d, n, r, m } => verify(*q, *d, n.clone(), r, m, budget, cli.format, out),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn csv_unsupported(cmd: &str) -> CliError {
    CliError::Usage(format!("{cmd} does not support --format csv"))
}

fn weights(q: u32, d: usize, count: usize, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    if q < 2 {
        return Err(Error::AlphabetTooSmall(q).into());
    }
    if d < 1 {
        return Err(Error::InvalidCapacity(d).into());
    }
    let w = weight_sequence(q, d, count);
    match format {
        Format::Text => {
            for (i, wi) in w.iter().enumerate().skip(1) {
                writeln!(out, "{i} {wi}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "i,w")?;
            for (i, wi) in w.iter().enumerate().skip(1) {
                writeln!(out, "{i},{wi}")?;
            }
        }
        Format::Json => {
            let list: Vec<String> = w.iter().skip(1).map(|x| x.to_string()).collect();
            write_json(out, &json!({ "q": q, "d": d, "weights": list }))?;
        }
    }
    Ok(())
}

fn check(code: &CodeArgs, text: &str, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let params = code.params()?;
    let symbols = word::parse_word(text, params.q())?;
    let member = codebook::contains(&params, &symbols)?;
    let moment = word::moment(&params, &symbols)?;
    let residue = &moment % params.m();
    match format {
        Format::Text => {
            let verdict = if member { "member" } else { "non-member" };
            writeln!(out, "{verdict}, M={moment}, residue={residue}")?;
        }
        Format::Json => write_json(
            out,
            &json!({
                "word": format_word(&symbols, params.q()),
                "member": member,
                "moment": moment.to_string(),
                "residue": residue.to_string(),
            }),
        )?,
        Format::Csv => return Err(csv_unsupported("check")),
    }
    Ok(())
}

/// Text rendering of one size-search row: `n<TAB>N_n<TAB>R_n`.
pub fn size_row_text(res: &SizeSearchResult) -> String {
    format!("{}\t{}\t{}", res.n, res.max_size, res.residues_joined(", "))
}

fn sizes(
    q: u32,
    d: usize,
    range: RangeInclusive<usize>,
    histogram: bool,
    budget: Budget,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let results = range
        .map(|n| codebook::max_size_search(q, d, n, budget, histogram && format == Format::Json))
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Text => {
            writeln!(out, "n\tN_n\tR_n")?;
            for res in &results {
                writeln!(out, "{}", size_row_text(res))?;
            }
        }
        Format::Csv => codebook::write_csv(&results, &mut *out)?,
        Format::Json => write_json(out, &results)?,
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn corrupt(
    code: &CodeArgs,
    text: &str,
    pattern: Option<&str>,
    random: Option<usize>,
    seed: Option<u64>,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let params = code.params()?;
    let symbols = word::parse_word(text, params.q())?;
    let x = Codeword::new(&params, symbols)?;
    let (received, pattern) = match (pattern, random) {
        (_, Some(count)) => channel::random_deletions(&x, count, seed.unwrap_or(0))?,
        (Some(p), None) => {
            let pattern: DeletionPattern = p.parse()?;
            (channel::delete_at(&x, &pattern)?, pattern)
        }
        (None, None) => (x.to_vec(), DeletionPattern::empty()),
    };
    let rendered = format_word(&received, params.q());
    match format {
        Format::Text => {
            writeln!(out, "{rendered}")?;
            if random.is_some() {
                writeln!(out, "pattern: {pattern}")?;
            }
        }
        Format::Json => write_json(
            out,
            &json!({ "received": rendered, "pattern": pattern.positions() }),
        )?,
        Format::Csv => return Err(csv_unsupported("corrupt")),
    }
    Ok(())
}

fn decode(
    code: &CodeArgs,
    text: &str,
    algorithm: AlgorithmArg,
    show_trace: bool,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let params = code.params()?;
    let received = ReceivedWord::new(&params, word::parse_word(text, params.q())?)?;
    let (decoded, trace) = if algorithm == AlgorithmArg::Oracle {
        let found = oracle::brute_decode_deletions(&params, &received)?;
        let mut found = found.into_iter();
        match (found.next(), found.next()) {
            (Some(x), None) => (x, None),
            (None, _) => return Err(CliError::Failed("no codeword matches the received word".into())),
            (Some(_), Some(_)) => {
                return Err(CliError::Failed("several codewords match the received word".into()))
            }
        }
    } else {
        let alg = match algorithm {
            AlgorithmArg::D1 => Algorithm::One,
            AlgorithmArg::D2 => Algorithm::TwoBinary,
            AlgorithmArg::Dm => Algorithm::Multi,
            _ => Algorithm::Auto,
        };
        let d = decoder::decode_with(&params, &received, alg)?;
        (d.codeword, Some(d.trace))
    };
    let rendered = format_word(&decoded, params.q());
    match format {
        Format::Text => {
            writeln!(out, "{rendered}")?;
            if let (true, Some(trace)) = (show_trace, &trace) {
                write!(out, "{}", trace.to_text())?;
            }
        }
        Format::Json => {
            let mut value = json!({ "received": format_word(&received, params.q()), "decoded": rendered });
            if let (true, Some(trace)) = (show_trace, &trace) {
                value["trace"] = serde_json::to_value(trace).map_err(|e| CliError::Usage(e.to_string()))?;
            }
            write_json(out, &value)?;
        }
        Format::Csv => return Err(csv_unsupported("decode")),
    }
    Ok(())
}

/// Decoding roundtrip over every codeword and every deletion pattern.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RoundtripSummary {
    pub decodes: usize,
    pub failures: usize,
}

/// Decodes every deleted word of every codeword and counts mismatches.
pub fn roundtrip(params: &CodeParams, budget: Budget) -> Result<RoundtripSummary, Error> {
    let mut summary = RoundtripSummary::default();
    if params.d() < 2 {
        return Ok(summary);
    }
    for x in codebook::enumerate(params, budget)? {
        for k in 1..=params.d().min(params.n()) {
            for pattern in all_patterns(params.n(), k) {
                let received = ReceivedWord::new(params, channel::delete_at(&x, &pattern)?)?;
                summary.decodes += 1;
                match decoder::decode(params, &received) {
                    Ok(out) if out.codeword == x => {}
                    _ => summary.failures += 1,
                }
            }
        }
    }
    Ok(summary)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    q: u32,
    d: usize,
    range: RangeInclusive<usize>,
    r: &Option<BigUint>,
    m: &Option<BigUint>,
    budget: Budget,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut entries = Vec::new();
    for n in range {
        let residues = match r {
            Some(r) => vec![r.clone()],
            None => codebook::max_size_search(q, d, n, budget, false)?.argmax_residues,
        };
        for r in residues {
            let params = CodeParams::new(q, d, n, r, m.clone())?;
            let report = oracle::verify_code(&params, budget)?;
            let trip = roundtrip(&params, budget)?;
            entries.push((report, trip));
        }
    }
    let all_pass = entries.iter().all(|(rep, trip)| rep.pass && trip.failures == 0);
    match format {
        Format::Text => {
            for (rep, trip) in &entries {
                let p = &rep.params;
                writeln!(
                    out,
                    "{} q={} d={} n={} m={} r={} codewords={} counterexamples={} decodes={} decode_failures={}",
                    if rep.pass && trip.failures == 0 { "pass" } else { "FAIL" },
                    p.q,
                    p.d,
                    p.n,
                    p.m,
                    p.r,
                    rep.codewords,
                    rep.counterexamples.len(),
                    trip.decodes,
                    trip.failures
                )?;
            }
        }
        Format::Json => {
            let list: Vec<_> = entries
                .iter()
                .map(|(rep, trip)| json!({ "report": rep, "roundtrip": trip }))
                .collect();
            write_json(out, &json!({ "pass": all_pass, "codebooks": list }))?;
        }
        Format::Csv => return Err(csv_unsupported("verify")),
    }
    if all_pass {
        Ok(())
    } else {
        Err(CliError::Failed("verification found counterexamples".into()))
    }
}
