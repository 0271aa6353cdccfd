//! The `bsub` command line.
//!
//! Exit codes: 0 for a YES answer or plain success, 1 for a NO answer, 2 for
//! usage errors, malformed input, exceeded budgets and violated
//! preconditions.

mod input;

use std::ffi::OsString;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use bounded_subseq::reductions::{self, Cnf, MatchInstance, PartialWordSet, SizeCheck};
use bounded_subseq::{
    analysis, best_iterated_circular_match, circular_match, is_p_absent, is_psas_with,
    iterated_circular_match, iterated_circular_match_from, kp_non_equivalent, kp_non_universal,
    minimal_representation, oracles, p_subsequence_match, pmas_scan, universality_index, KpGadget,
    MatcherState, OvInstance, PartialWord, Payload, ReductionKind, SearchConfig, SearchOutcome,
    Source, SymbolTable, Word,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Deserialize;
use serde_json::{json, Map, Value};

pub use input::AlphabetMode;
use input::{render_with, word_line, Reader};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] bounded_subseq::Error),
    #[error("{0}")]
    Input(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(
    name = "bsub",
    version,
    about = "Subsequences inside sliding windows of words"
)]
struct Cli {
    /// How word files are read.
    #[arg(long, value_enum, global = true, default_value = "ascii")]
    alphabet: AlphabetMode,
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for brute-force searches and `bestitmatch`.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Candidate-word budget for brute-force searches.
    #[arg(long, global = true, default_value_t = analysis::DEFAULT_CANDIDATE_BUDGET)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PairArgs {
    /// Pattern word file.
    pattern: PathBuf,
    /// Text word file.
    text: PathBuf,
    /// Window size.
    #[arg(long)]
    p: usize,
}

#[derive(Args, Debug)]
struct CircArgs {
    pattern: PathBuf,
    text: PathBuf,
    /// Decide whether this many traversals suffice.
    #[arg(long)]
    ell: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is the pattern a p-subsequence of the text?
    Match {
        pattern: PathBuf,
        /// Text word file; read from standard input with --stream.
        text: Option<PathBuf>,
        #[arg(long)]
        p: usize,
        /// Read the text from standard input and report every window.
        #[arg(long)]
        stream: bool,
    },
    /// Is the pattern a minimal absent p-subsequence?
    Pmas(PairArgs),
    /// Is the pattern absent from every window?
    Pabsent(PairArgs),
    /// Is the pattern a shortest absent p-subsequence?
    Psas(PairArgs),
    /// Is some word of length k missing from every window?
    Nonuniv {
        text: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
    },
    /// Do the length-k p-subsequence sets of two words differ?
    Nonequiv {
        text: PathBuf,
        other: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: usize,
    },
    /// Universality index of a word.
    Universality { text: PathBuf },
    /// Minimal representation of a circular word.
    Minrep { text: PathBuf },
    /// Is the pattern a subsequence of some conjugate of the text?
    Circmatch { pattern: PathBuf, text: PathBuf },
    /// Traversals of the minimal rotation needed to read the pattern.
    Itmatch {
        #[command(flatten)]
        args: CircArgs,
        /// Start from this 1-based rotation offset instead.
        #[arg(long)]
        offset: Option<usize>,
    },
    /// Fewest traversals over all starting offsets.
    Bestitmatch(CircArgs),
    /// Build a reduction instance from a JSON source.
    Reduce {
        #[arg(value_enum)]
        kind: KindArg,
        source: PathBuf,
        /// Write manifest.json and word files here instead of printing.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "sound")]
        gadget: GadgetArg,
    },
    /// Brute-force reference deciders.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Timing runs, CSV on standard output.
    Bench {
        #[command(subcommand)]
        op: BenchOp,
    },
}

#[derive(Subcommand, Debug)]
enum OracleOp {
    PMatch(PairArgs),
    Pmas(PairArgs),
    Ov { source: PathBuf },
    PartialWords { source: PathBuf },
    Minrep { text: PathBuf },
}

#[derive(Subcommand, Debug)]
enum BenchOp {
    Match {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Window size; defaults to max(m, n/2).
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 4)]
        sigma: u32,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    OvToMatch,
    Sat3ToPw,
    PwToKpNonUniv,
    KpNonUnivToKpNonEquiv,
    PwToPsas,
    MatchToPmas,
    MatchToPmasStream,
}

impl From<KindArg> for ReductionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::OvToMatch => ReductionKind::OvToMatch,
            KindArg::Sat3ToPw => ReductionKind::Sat3ToPw,
            KindArg::PwToKpNonUniv => ReductionKind::PwToKpNonUniv,
            KindArg::KpNonUnivToKpNonEquiv => ReductionKind::KpNonUnivToKpNonEquiv,
            KindArg::PwToPsas => ReductionKind::PwToPsas,
            KindArg::MatchToPmas => ReductionKind::MatchToPmas,
            KindArg::MatchToPmasStream => ReductionKind::MatchToPmasStream,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GadgetArg {
    Sound,
    Literal,
}

/// A finished command: its report and, for decision problems, the answer.
/// Commands that write their own output carry a null report.
struct Outcome {
    report: Value,
    answer: Option<bool>,
}

impl Outcome {
    fn decision(answer: bool, mut report: Map<String, Value>) -> Self {
        report.insert("answer".into(), json!(answer));
        Outcome {
            report: Value::Object(report),
            answer: Some(answer),
        }
    }

    fn info(report: Value) -> Self {
        Outcome {
            report,
            answer: None,
        }
    }

    fn silent(answer: Option<bool>) -> Self {
        Outcome {
            report: Value::Null,
            answer,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli, stdin, stdout) {
        Ok(outcome) => {
            let written = if outcome.report.is_null() {
                Ok(())
            } else if cli.json {
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&outcome.report).expect("json")
                )
            } else {
                write_text(stdout, &outcome.report)
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
            match outcome.answer {
                Some(false) => 1,
                _ => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn write_text(out: &mut dyn Write, report: &Value) -> std::io::Result<()> {
    if let Some(answer) = report.get("answer").and_then(Value::as_bool) {
        writeln!(out, "{}", if answer { "YES" } else { "NO" })?;
    }
    if let Value::Object(map) = report {
        for (k, v) in map {
            if k == "answer" {
                continue;
            }
            match v {
                Value::String(s) => writeln!(out, "{k}: {s}")?,
                other => writeln!(out, "{k}: {other}")?,
            }
        }
    }
    Ok(())
}

fn config(cli: &Cli) -> SearchConfig {
    SearchConfig {
        budget: cli.budget,
        threads: cli.threads,
    }
}

/// Reads the listed word files under one shared alphabet.
fn read_words(mode: AlphabetMode, paths: &[&Path]) -> Result<(Reader, Vec<Word>), CliError> {
    let mut reader = Reader::new(mode);
    let handles = paths
        .iter()
        .map(|p| reader.push_file(p))
        .collect::<Result<Vec<_>, _>>()?;
    let words = handles.into_iter().map(|h| reader.word(h)).collect();
    Ok((reader, words))
}

fn with_mapping(reader: &Reader, mut map: Map<String, Value>) -> Map<String, Value> {
    if let Some(m) = reader.mapping() {
        map.insert("alphabet".into(), m);
    }
    map
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("reports are objects"),
    }
}

fn search_report(reader: &Reader, out: &SearchOutcome) -> Map<String, Value> {
    with_mapping(
        reader,
        object(json!({
            "witness": out.witness.as_ref().map(|w| reader.render(w)),
            "candidates_checked": out.candidates_checked,
            "budget": out.budget.to_string(),
            "shortcut": out.shortcut,
        })),
    )
}

fn execute(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    let mode = cli.alphabet;
    let outcome = match &cli.command {
        Command::Match {
            pattern,
            text,
            p,
            stream,
        } => {
            if *stream {
                let any = stream_match(cli, pattern, *p, stdin, stdout)?;
                return Ok(Outcome::silent(Some(any)));
            }
            let text = text.as_ref().ok_or_else(|| {
                CliError::Input("match needs a text file unless --stream is given".into())
            })?;
            let (reader, w) = read_words(mode, &[pattern, text])?;
            let r = p_subsequence_match(&w[0], &w[1], *p);
            Outcome::decision(
                r.found,
                with_mapping(
                    &reader,
                    object(json!({
                        "found": r.found,
                        "first_hit": r.first_hit,
                        "window": r.window,
                        "windows": r.per_window.len(),
                    })),
                ),
            )
        }
        Command::Pmas(a) => {
            let (reader, w) = read_words(mode, &[&a.pattern, &a.text])?;
            let scan = pmas_scan(&w[0], &w[1], a.p, true);
            Outcome::decision(
                scan.is_pmas,
                with_mapping(
                    &reader,
                    object(json!({
                        "is_pmas": scan.is_pmas,
                        "occurrence_end": scan.occurrence,
                    })),
                ),
            )
        }
        Command::Pabsent(a) => {
            let (reader, w) = read_words(mode, &[&a.pattern, &a.text])?;
            let absent = is_p_absent(&w[0], &w[1], a.p);
            Outcome::decision(
                absent,
                with_mapping(&reader, object(json!({ "is_p_absent": absent }))),
            )
        }
        Command::Psas(a) => {
            let (reader, w) = read_words(mode, &[&a.pattern, &a.text])?;
            let psas = is_psas_with(&w[0], &w[1], a.p, &config(cli))?;
            Outcome::decision(
                psas,
                with_mapping(
                    &reader,
                    object(json!({ "is_psas": psas, "budget": cli.budget.to_string() })),
                ),
            )
        }
        Command::Nonuniv { text, k, p } => {
            let (reader, w) = read_words(mode, &[text])?;
            let out = kp_non_universal(&w[0], *k, *p, &config(cli))?;
            Outcome::decision(out.answer(), search_report(&reader, &out))
        }
        Command::Nonequiv { text, other, k, p } => {
            let (reader, w) = read_words(mode, &[text, other])?;
            let out = kp_non_equivalent(&w[0], &w[1], *k, *p, &config(cli))?;
            Outcome::decision(out.answer(), search_report(&reader, &out))
        }
        Command::Universality { text } => {
            let (reader, w) = read_words(mode, &[text])?;
            let iota = universality_index(&w[0])?;
            Outcome::info(Value::Object(with_mapping(
                &reader,
                object(json!({ "universality_index": iota })),
            )))
        }
        Command::Minrep { text } => {
            let (reader, w) = read_words(mode, &[text])?;
            let r = minimal_representation(&w[0])?;
            Outcome::info(Value::Object(with_mapping(
                &reader,
                object(json!({
                    "root": reader.render(&r.root),
                    "n": r.total_len,
                    "rotation_offset": r.rotation_offset,
                })),
            )))
        }
        Command::Circmatch { pattern, text } => {
            let (reader, w) = read_words(mode, &[pattern, text])?;
            let found = circular_match(&w[0], &w[1]);
            Outcome::decision(
                found,
                with_mapping(&reader, object(json!({ "found": found }))),
            )
        }
        Command::Itmatch { args, offset } => {
            let (reader, w) = read_words(mode, &[&args.pattern, &args.text])?;
            let (ell, start) = match offset {
                Some(o) => (iterated_circular_match_from(&w[0], &w[1], *o)?, Some(*o)),
                None => {
                    let ell = iterated_circular_match(&w[0], &w[1])?;
                    let start = if w[1].is_empty() {
                        None
                    } else {
                        Some(minimal_representation(&w[1])?.rotation_offset)
                    };
                    (ell, start)
                }
            };
            traversal_outcome(&reader, ell, start, args.ell)
        }
        Command::Bestitmatch(args) => {
            let (reader, w) = read_words(mode, &[&args.pattern, &args.text])?;
            let best = best_iterated_circular_match(&w[0], &w[1], cli.threads)?;
            traversal_outcome(&reader, best.map(|b| b.0), best.map(|b| b.1), args.ell)
        }
        Command::Reduce {
            kind,
            source,
            out_dir,
            gadget,
        } => {
            let gadget = match gadget {
                GadgetArg::Sound => KpGadget::Sound,
                GadgetArg::Literal => KpGadget::Literal,
            };
            reduce_command(
                mode,
                (*kind).into(),
                source,
                out_dir.as_deref(),
                gadget,
                stdout,
            )?;
            Outcome::silent(None)
        }
        Command::Oracle { op } => oracle_command(mode, op)?,
        Command::Bench { op } => {
            let BenchOp::Match {
                n,
                m,
                p,
                sigma,
                runs,
                seed,
            } = op;
            bench_match(*n, *m, *p, *sigma, *runs, *seed, stdout)?;
            Outcome::silent(None)
        }
    };
    Ok(outcome)
}

fn traversal_outcome(
    reader: &Reader,
    ell: Option<usize>,
    start: Option<usize>,
    bound: Option<usize>,
) -> Outcome {
    let answer = match (ell, bound) {
        (Some(l), Some(b)) => l <= b,
        (Some(_), None) => true,
        (None, _) => false,
    };
    Outcome::decision(
        answer,
        with_mapping(
            reader,
            object(json!({
                "ell": ell,
                "rotation_offset": start,
                "ell_bound": bound,
            })),
        ),
    )
}

fn stream_match(
    cli: &Cli,
    pattern: &Path,
    p: usize,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<bool, CliError> {
    let mut reader = Reader::new(cli.alphabet);
    let h = reader.push_file(pattern)?;
    let u = reader.word(h);
    let mut state = MatcherState::new(&u, p)?;
    let mut t = 0usize;
    let mut any = false;
    let mut out = std::io::BufWriter::new(stdout);
    let emit =
        |state: &mut MatcherState, c, t: usize, out: &mut dyn Write| -> std::io::Result<bool> {
            let hit = state.step(c);
            if t >= p {
                if cli.json {
                    writeln!(out, "{}", json!({ "t": t, "found": hit }))?;
                } else {
                    writeln!(out, "{t}\t{}", if hit { "YES" } else { "NO" })?;
                }
                return Ok(hit);
            }
            Ok(false)
        };
    let input = BufReader::new(stdin);
    match cli.alphabet {
        AlphabetMode::Ascii => {
            let mut table: SymbolTable = reader.table().clone();
            for b in input.bytes() {
                let b = b?;
                if b == b'\n' || b == b'\r' {
                    continue;
                }
                t += 1;
                any |= emit(&mut state, table.intern(b), t, &mut out)?;
            }
        }
        AlphabetMode::Ints => {
            for line in input.lines() {
                for tok in line?.split_whitespace() {
                    let c: u32 = tok
                        .parse()
                        .ok()
                        .filter(|&c| c >= 1)
                        .ok_or_else(|| CliError::Input(format!("invalid symbol id {tok:?}")))?;
                    t += 1;
                    any |= emit(&mut state, c, t, &mut out)?;
                }
            }
        }
    }
    out.flush()?;
    Ok(any)
}

#[derive(Deserialize)]
struct OvSource {
    set_a: Vec<Vec<u8>>,
    set_b: Vec<Vec<u8>>,
}

impl OvSource {
    fn into_instance(self) -> Result<OvInstance, CliError> {
        let conv = |set: Vec<Vec<u8>>| -> Result<Vec<Vec<bool>>, CliError> {
            set.into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|x| match x {
                            0 => Ok(false),
                            1 => Ok(true),
                            _ => Err(CliError::Input(format!("vector entry {x} is not 0 or 1"))),
                        })
                        .collect()
                })
                .collect()
        };
        Ok(OvInstance::new(conv(self.set_a)?, conv(self.set_b)?)?)
    }
}

#[derive(Deserialize)]
struct PwSource {
    len: Option<usize>,
    words: Vec<String>,
}

impl PwSource {
    fn into_set(self) -> Result<PartialWordSet, CliError> {
        let words = self
            .words
            .iter()
            .map(|s| s.parse::<PartialWord>())
            .collect::<Result<Vec<_>, _>>()?;
        let len = self
            .len
            .or_else(|| words.first().map(PartialWord::len))
            .ok_or_else(|| CliError::Input("empty partial-word set needs \"len\"".into()))?;
        Ok(PartialWordSet::new(len, words)?)
    }
}

#[derive(Deserialize)]
struct MatchSource {
    pattern: Value,
    text: Value,
    window: usize,
}

fn source_line(v: &Value) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Array(items) => items
            .iter()
            .map(|x| x.as_u64().map(|x| x.to_string()))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.join(" "))
            .ok_or_else(|| CliError::Input("word arrays must hold symbol ids".into())),
        _ => Err(CliError::Input(
            "a word is a string or an array of ids".into(),
        )),
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<(T, Value), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let parsed = serde_json::from_value(value.clone())
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((parsed, value))
}

/// Letters for rendering target words: the source alphabet, plus `$`.
fn target_table(kind: ReductionKind, reader: &Reader) -> (AlphabetMode, SymbolTable) {
    match kind {
        ReductionKind::MatchToPmas | ReductionKind::MatchToPmasStream => {
            let mut table = reader.table().clone();
            if reader.mode() == AlphabetMode::Ascii && table.len() as u32 == reader.sigma() {
                if let Some(&b) = b"$%&@~^!".iter().find(|&&b| table.get(b).is_none()) {
                    table.intern(b);
                }
            }
            (reader.mode(), table)
        }
        _ => {
            let mut table = SymbolTable::new();
            table.intern_all(b"01#[]");
            (reader.mode(), table)
        }
    }
}

fn reduce_command(
    mode: AlphabetMode,
    kind: ReductionKind,
    path: &Path,
    out_dir: Option<&Path>,
    gadget: KpGadget,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let mut reader = Reader::new(mode);
    let (source, raw) = match kind {
        ReductionKind::OvToMatch => {
            let (src, raw) = parse_json::<OvSource>(path)?;
            (Source::Ov(src.into_instance()?), raw)
        }
        ReductionKind::Sat3ToPw => {
            let (src, raw) = parse_json::<Cnf>(path)?;
            (Source::Cnf(src), raw)
        }
        ReductionKind::PwToKpNonUniv
        | ReductionKind::KpNonUnivToKpNonEquiv
        | ReductionKind::PwToPsas => {
            let (src, raw) = parse_json::<PwSource>(path)?;
            (Source::PartialWords(src.into_set()?), raw)
        }
        ReductionKind::MatchToPmas | ReductionKind::MatchToPmasStream => {
            let (src, raw) = parse_json::<MatchSource>(path)?;
            let hu = reader.push_line(&source_line(&src.pattern)?)?;
            let hw = reader.push_line(&source_line(&src.text)?)?;
            let mi = MatchInstance {
                pattern: reader.word(hu),
                text: reader.word(hw),
                window: src.window,
            };
            (Source::Match(mi), raw)
        }
    };
    let inst = reductions::reduce(kind, &source, gadget)?;
    let (tmode, table) = target_table(kind, &reader);
    let render = |w: &Word| render_with(tmode, &table, w);

    // (file name, word) for every payload word
    let mut files: Vec<(&str, &Word)> = Vec::new();
    let payload = match &inst.payload {
        Payload::Match(mi) => {
            files.extend([("pattern.txt", &mi.pattern), ("text.txt", &mi.text)]);
            json!({ "type": "match", "pattern": render(&mi.pattern), "text": render(&mi.text), "window": mi.window })
        }
        Payload::PartialWords(s) => json!({
            "type": "partial_words",
            "len": s.len,
            "words": s.words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        }),
        Payload::NonUniv { text, k, p } => {
            files.push(("text.txt", text));
            json!({ "type": "non_univ", "text": render(text), "k": k, "p": p })
        }
        Payload::NonEquiv { text, other, k, p } => {
            files.extend([("text.txt", text), ("other.txt", other)]);
            json!({ "type": "non_equiv", "text": render(text), "other": render(other), "k": k, "p": p })
        }
        Payload::Psas { pattern, text, p } => {
            files.extend([("pattern.txt", pattern), ("text.txt", text)]);
            json!({ "type": "psas", "pattern": render(pattern), "text": render(text), "p": p })
        }
        Payload::Pmas { pattern, text, p } => {
            files.extend([("pattern.txt", pattern), ("text.txt", text)]);
            json!({ "type": "pmas", "pattern": render(pattern), "text": render(text), "p": p })
        }
    };
    let mut manifest = json!({
        "kind": kind.name(),
        "gadget": match gadget { KpGadget::Sound => "sound", KpGadget::Literal => "literal" },
        "source": raw,
        "payload": payload,
        "size_checks": inst.size_checks.iter().map(size_json).collect::<Vec<_>>(),
    });
    if tmode == AlphabetMode::Ascii {
        manifest["alphabet"] = json!(table
            .bytes()
            .iter()
            .map(|&b| (b as char).to_string())
            .collect::<Vec<_>>());
    }
    if let Payload::PartialWords(s) = &inst.payload {
        let lines: Vec<String> = s.words.iter().map(|w| w.to_string()).collect();
        if let Some(dir) = out_dir {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join("partial_words.txt"), lines.join("\n") + "\n")?;
        }
    }
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            for (name, w) in &files {
                std::fs::write(dir.join(name), word_line(tmode, &table, w) + "\n")?;
            }
            let text = serde_json::to_string_pretty(&manifest).expect("json");
            std::fs::write(dir.join("manifest.json"), text + "\n")?;
        }
        None => writeln!(
            stdout,
            "{}",
            serde_json::to_string_pretty(&manifest).expect("json")
        )?,
    }
    Ok(())
}

fn size_json(c: &SizeCheck) -> Value {
    json!({
        "quantity": c.quantity,
        "formula": c.formula,
        "expected": c.expected,
        "actual": c.actual,
        "holds": c.holds(),
    })
}

fn oracle_command(mode: AlphabetMode, op: &OracleOp) -> Result<Outcome, CliError> {
    Ok(match op {
        OracleOp::PMatch(a) => {
            let (reader, w) = read_words(mode, &[&a.pattern, &a.text])?;
            let r = oracles::oracle_p_match(&w[0], &w[1], a.p)?;
            Outcome::decision(
                r.found,
                with_mapping(
                    &reader,
                    object(json!({ "found": r.found, "first_hit": r.first_hit })),
                ),
            )
        }
        OracleOp::Pmas(a) => {
            let (reader, w) = read_words(mode, &[&a.pattern, &a.text])?;
            let ans = oracles::oracle_pmas(&w[0], &w[1], a.p);
            Outcome::decision(
                ans,
                with_mapping(&reader, object(json!({ "is_pmas": ans }))),
            )
        }
        OracleOp::Ov { source } => {
            let (src, _) = parse_json::<OvSource>(source)?;
            let ans = oracles::oracle_ov(&src.into_instance()?);
            Outcome::decision(ans, object(json!({ "orthogonal_pair": ans })))
        }
        OracleOp::PartialWords { source } => {
            let (src, _) = parse_json::<PwSource>(source)?;
            let set = src.into_set()?;
            let witness = oracles::oracle_partial_words(
                &set.words,
                set.len,
                analysis::DEFAULT_CANDIDATE_BUDGET,
            )?;
            let rendered = witness.as_ref().map(|x| {
                x.iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect::<String>()
            });
            Outcome::decision(witness.is_some(), object(json!({ "witness": rendered })))
        }
        OracleOp::Minrep { text } => {
            let (reader, w) = read_words(mode, &[text])?;
            let r = oracles::oracle_min_rep(&w[0])?;
            Outcome::info(Value::Object(with_mapping(
                &reader,
                object(json!({
                    "root": reader.render(&r.root),
                    "n": r.total_len,
                    "rotation_offset": r.rotation_offset,
                })),
            )))
        }
    })
}

fn bench_match(
    n: usize,
    m: usize,
    p: Option<usize>,
    sigma: u32,
    runs: usize,
    seed: u64,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    if sigma == 0 {
        return Err(bounded_subseq::Error::EmptyAlphabet.into());
    }
    let p = p.unwrap_or((n / 2).max(m));
    let mut rng = StdRng::seed_from_u64(seed);
    let mut random =
        |len: usize| Word::new((0..len).map(|_| rng.gen_range(1..=sigma)).collect(), sigma);
    let u = random(m)?;
    let w = random(n)?;
    writeln!(stdout, "n,m,p,wall_ns")?;
    for _ in 0..runs {
        let start = Instant::now();
        let r = p_subsequence_match(&u, &w, p);
        let ns = start.elapsed().as_nanos();
        std::hint::black_box(r);
        writeln!(stdout, "{n},{m},{p},{ns}")?;
    }
    Ok(())
}
