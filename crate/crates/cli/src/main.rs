use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use repeatscan::census::{census, CensusReport};
use repeatscan::oracle::{oracle_factorize, oracle_gapped, oracle_runs, oracle_subreps};
use repeatscan::random::random_word;
use repeatscan::subreps::principal_verdicts;
use repeatscan::{
    classify, find_maximal_gapped_repeats, find_runs, find_subrepetitions, is_principal_direct, s_factorize, Error,
    Rational, RepeatClass, Word,
};

#[derive(Parser)]
#[command(name = "repeatscan", version, about = "Runs, gapped repeats and subrepetitions in words")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    /// Strip one trailing newline from the input.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal repetitions.
    Runs(InputArg),
    /// Maximal alpha-gapped repeats.
    Repeats {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Rational,
        #[command(flatten)]
        input: InputArg,
    },
    /// Maximal delta-subrepetitions.
    Subreps {
        #[arg(long, value_parser = parse_delta)]
        delta: Rational,
        #[command(flatten)]
        input: InputArg,
    },
    /// Non-overlapping s-factorization.
    Factorize(InputArg),
    /// Counts and ratios for one input or a range of random words.
    Census {
        #[arg(long, value_parser = parse_alpha)]
        alpha: Rational,
        #[arg(long, value_parser = parse_delta)]
        delta: Option<Rational>,
        #[command(flatten)]
        source: Source,
    },
    /// Compare every algorithm against the brute-force oracles.
    Verify {
        /// Alphas to check, comma separated.
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', default_value = "3/2,2,3,4")]
        alpha: Vec<Rational>,
        /// Deltas to check, comma separated.
        #[arg(long, value_parser = parse_delta, value_delimiter = ',', default_value = "1/4,1/3,1/2")]
        delta: Vec<Rational>,
        /// Check every word of length up to N over the --sigma alphabet.
        #[arg(long, value_name = "N", conflicts_with_all = ["random", "input"])]
        exhaustive: Option<usize>,
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Args)]
struct InputArg {
    /// Input file; standard input when absent or `-`.
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Source {
    /// Input file; standard input when absent or `-`.
    #[arg(conflicts_with = "random")]
    input: Option<PathBuf>,
    /// Generate random words of this length instead of reading input.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    /// Alphabet size for generated words.
    #[arg(long, default_value_t = 2)]
    sigma: usize,
    /// Seed range for generated words, `A..B` inclusive or a single seed.
    #[arg(long, value_parser = parse_seeds, default_value = "0")]
    seeds: RangeInclusive<u64>,
}

fn parse_alpha(s: &str) -> Result<Rational, String> {
    let r: Rational = s.parse().map_err(|e: Error| e.to_string())?;
    if !r.is_greater_than_one() {
        return Err(format!("alpha must be greater than 1, got {r}"));
    }
    Ok(r)
}

fn parse_delta(s: &str) -> Result<Rational, String> {
    let r: Rational = s.parse().map_err(|e: Error| e.to_string())?;
    if !r.is_less_than_one() {
        return Err(format!("delta must lie in (0,1), got {r}"));
    }
    Ok(r)
}

fn parse_seeds(s: &str) -> Result<RangeInclusive<u64>, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("bad seed {t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty seed range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

enum Failure {
    Usage(String),
    Fault(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LogicFault(_) => Failure::Fault(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_input(path: Option<&PathBuf>, strip: bool) -> Result<Word, Failure> {
    let mut bytes = match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut buf = Vec::new();
            io::stdin().lock().read_to_end(&mut buf)?;
            buf
        }
    };
    if strip && bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
    Ok(Word::from(bytes))
}

#[derive(Serialize)]
struct RunRec {
    start: usize,
    end: usize,
    period: usize,
    exponent: String,
}

#[derive(Serialize)]
struct RepeatRec {
    left_start: usize,
    left_end: usize,
    right_start: usize,
    right_end: usize,
    period: usize,
    copy_len: usize,
    class: &'static str,
}

#[derive(Serialize)]
struct SubrepRec {
    start: usize,
    end: usize,
    period: usize,
    exponent: String,
}

#[derive(Serialize)]
struct FactorRec {
    index: usize,
    start: usize,
    len: usize,
    delta: Option<usize>,
}

#[derive(Serialize)]
struct CensusRec {
    seed: Option<u64>,
    n: usize,
    alphabet_size: usize,
    alpha: String,
    delta: Option<String>,
    run_count: usize,
    sum_exponents: String,
    repeat_count: usize,
    periodic: usize,
    prefix_semiperiodic: usize,
    suffix_semiperiodic: usize,
    ordinary: usize,
    subrep_count: Option<usize>,
    ratio_alpha_n: f64,
    ratio_alpha_sq_n: f64,
}

impl CensusRec {
    fn new(seed: Option<u64>, r: &CensusReport) -> Self {
        Self {
            seed,
            n: r.n,
            alphabet_size: r.alphabet_size,
            alpha: r.alpha.to_string(),
            delta: r.delta.map(|d| d.to_string()),
            run_count: r.run_count,
            sum_exponents: r.sum_exponents.to_string(),
            repeat_count: r.repeat_count,
            periodic: r.class_count(RepeatClass::Periodic),
            prefix_semiperiodic: r.class_count(RepeatClass::PrefixSemiperiodic),
            suffix_semiperiodic: r.class_count(RepeatClass::SuffixSemiperiodic),
            ordinary: r.class_count(RepeatClass::Ordinary),
            subrep_count: r.subrep_count,
            ratio_alpha_n: r.ratio_alpha_n,
            ratio_alpha_sq_n: r.ratio_alpha_sq_n,
        }
    }

    fn tsv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        format!(
            "CENSUS\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.6}\t{:.6}",
            opt(self.seed.map(|s| s.to_string())),
            self.n,
            self.alphabet_size,
            self.alpha,
            opt(self.delta.clone()),
            self.run_count,
            self.sum_exponents,
            self.repeat_count,
            self.periodic,
            self.prefix_semiperiodic,
            self.suffix_semiperiodic,
            self.ordinary,
            opt(self.subrep_count.map(|c| c.to_string())),
            self.ratio_alpha_n,
            self.ratio_alpha_sq_n,
        )
    }
}

fn emit<T: Serialize>(format: Format, key: &str, recs: &[T], tsv: impl Fn(&T) -> String) -> Result<(), Failure> {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            for r in recs {
                out.push_str(&tsv(r));
                out.push('\n');
            }
        }
        Format::Json => {
            let obj = serde_json::json!({ key: recs });
            writeln!(out, "{obj}").unwrap();
        }
    }
    let mut stdout = io::stdout().lock();
    match stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn words(source: &Source, strip: bool) -> Result<Vec<(Option<u64>, Word)>, Failure> {
    match source.random {
        Some(n) => source
            .seeds
            .clone()
            .into_par_iter()
            .map(|s| Ok((Some(s), random_word(n, source.sigma, s)?)))
            .collect(),
        None => Ok(vec![(None, read_input(source.input.as_ref(), strip)?)]),
    }
}

/// First disagreement between the fast algorithms and the oracles.
fn check_word(w: &Word, alphas: &[Rational], deltas: &[Rational]) -> Result<Option<String>, Error> {
    if find_runs(w) != oracle_runs(w) {
        return Ok(Some("runs".into()));
    }
    if !w.is_empty() && s_factorize(w) != oracle_factorize(w) {
        return Ok(Some("factorize".into()));
    }
    for &a in alphas {
        if find_maximal_gapped_repeats(w, a)?.to_sorted_vec() != oracle_gapped(w, a)? {
            return Ok(Some(format!("repeats alpha={a}")));
        }
    }
    for &d in deltas {
        if find_subrepetitions(w, d)? != oracle_subreps(w, d)? {
            return Ok(Some(format!("subreps delta={d}")));
        }
        for (g, principal) in principal_verdicts(w, d)? {
            if principal != is_principal_direct(w, &g) {
                return Ok(Some(format!("principal delta={d} repeat {g}")));
            }
        }
    }
    Ok(None)
}

fn all_words(max_len: usize, sigma: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(move |n| {
        let total = (sigma as u64).checked_pow(n as u32).expect("exhaustive range too large");
        (0..total).map(move |mut code| {
            let mut bytes = vec![b'a'; n];
            for b in bytes.iter_mut() {
                *b += (code % sigma as u64) as u8;
                code /= sigma as u64;
            }
            Word::from(bytes)
        })
    })
}

fn verify(
    alphas: &[Rational],
    deltas: &[Rational],
    exhaustive: Option<usize>,
    source: &Source,
    strip: bool,
) -> Result<(), Failure> {
    let ws: Vec<Word> = match exhaustive {
        Some(n) => {
            if !(2..=26).contains(&source.sigma) {
                return Err(Failure::Usage(format!("alphabet size must be in 2..=26, got {}", source.sigma)));
            }
            all_words(n, source.sigma).collect()
        }
        None => words(source, strip)?.into_iter().map(|(_, w)| w).collect(),
    };
    let verdicts: Vec<Result<Option<String>, Error>> = ws.par_iter().map(|w| check_word(w, alphas, deltas)).collect();
    for (w, v) in ws.iter().zip(verdicts) {
        match v {
            Ok(None) => {}
            Ok(Some(what)) => {
                println!("MISMATCH\t{what}\t{w}");
                return Err(Failure::Fault(format!("oracle disagreement on {what}")));
            }
            Err(e) => {
                println!("MISMATCH\terror\t{w}");
                return Err(e.into());
            }
        }
    }
    println!("VERIFIED\t{}", ws.len());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let strip = cli.text;
    let format = cli.format;
    match cli.command {
        Command::Runs(i) => {
            let w = read_input(i.input.as_ref(), strip)?;
            let recs: Vec<RunRec> = find_runs(&w)
                .into_iter()
                .map(|r| RunRec { start: r.start, end: r.end, period: r.period, exponent: format!("{}/{}", r.len(), r.period) })
                .collect();
            emit(format, "runs", &recs, |r| format!("RUN\t{}\t{}\t{}\t{}", r.start, r.end, r.period, r.exponent))
        }
        Command::Repeats { alpha, input } => {
            let w = read_input(input.input.as_ref(), strip)?;
            let recs: Vec<RepeatRec> = find_maximal_gapped_repeats(&w, alpha)?
                .to_sorted_vec()
                .into_iter()
                .map(|g| RepeatRec {
                    left_start: g.left_start,
                    left_end: g.left_end(),
                    right_start: g.right_start(),
                    right_end: g.right_end(),
                    period: g.period,
                    copy_len: g.copy_len,
                    class: classify(&w, &g).as_str(),
                })
                .collect();
            emit(format, "repeats", &recs, |r| {
                format!(
                    "GREP\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.left_start, r.left_end, r.right_start, r.right_end, r.period, r.copy_len, r.class
                )
            })
        }
        Command::Subreps { delta, input } => {
            let w = read_input(input.input.as_ref(), strip)?;
            let recs: Vec<SubrepRec> = find_subrepetitions(&w, delta)?
                .into_iter()
                .map(|s| SubrepRec { start: s.start, end: s.end, period: s.period, exponent: format!("{}/{}", s.len(), s.period) })
                .collect();
            emit(format, "subreps", &recs, |s| format!("SUBREP\t{}\t{}\t{}\t{}", s.start, s.end, s.period, s.exponent))
        }
        Command::Factorize(i) => {
            let w = read_input(i.input.as_ref(), strip)?;
            let recs: Vec<FactorRec> = s_factorize(&w)
                .into_iter()
                .map(|f| FactorRec { index: f.index, start: f.start, len: f.len, delta: f.delta })
                .collect();
            emit(format, "factors", &recs, |f| {
                let d = f.delta.map_or_else(|| "-".to_string(), |d| d.to_string());
                format!("FACTOR\t{}\t{}\t{}\t{d}", f.index, f.start, f.len)
            })
        }
        Command::Census { alpha, delta, source } => {
            let ws = words(&source, strip)?;
            let recs: Vec<CensusRec> = ws
                .par_iter()
                .map(|(seed, w)| census(w, alpha, delta).map(|r| CensusRec::new(*seed, &r)))
                .collect::<Result<_, Error>>()?;
            emit(format, "census", &recs, CensusRec::tsv)
        }
        Command::Verify { alpha, delta, exhaustive, source } => verify(&alpha, &delta, exhaustive, &source, strip),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("repeatscan: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Fault(msg)) => {
            eprintln!("repeatscan: {msg}");
            ExitCode::from(1)
        }
    }
}
