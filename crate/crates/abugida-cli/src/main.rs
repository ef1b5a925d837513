//! `abugida` — batch command-line surface over abugida-core.
//!
//! Subcommands: normalize, parse, stats, attack, bench, roots.
//! Exit codes: 0 success, 2 usage error, 1 data error.

mod stream;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use abugida_core::attack::{attack_word_at_index, AttackConfig};
use abugida_core::corpus::{self, corpus_stats, run_bench, BenchMode};
use abugida_core::normalize::{FixEntry, NormalizationReport, NormalizerOptions};
use abugida_core::parse::ParseResult;
use abugida_core::roots::possible_roots;
use abugida_core::script::{bundled_spec, ScriptSpec};

/// Lines processed per batch; bounds memory while keeping batches large
/// enough to parallelize.
const CHUNK_LINES: usize = 4096;

#[derive(Parser)]
#[command(
    name = "abugida",
    version,
    about = "Unicode normalization and grapheme parsing for Indic Abugida scripts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScriptCode {
    Bn,
    Deva,
    Guru,
    Gu,
    Or,
    Ta,
    Ml,
}

impl ScriptCode {
    fn as_str(self) -> &'static str {
        match self {
            ScriptCode::Bn => "bn",
            ScriptCode::Deva => "deva",
            ScriptCode::Guru => "guru",
            ScriptCode::Gu => "gu",
            ScriptCode::Or => "or",
            ScriptCode::Ta => "ta",
            ScriptCode::Ml => "ml",
        }
    }

    fn spec(self) -> &'static ScriptSpec {
        bundled_spec(self.as_str()).expect("bundled script")
    }
}

#[derive(Args)]
struct IoArgs {
    /// Script of the input text
    #[arg(long, value_enum)]
    script: ScriptCode,
    /// Input path, or - for stdin
    #[arg(long, default_value = "-")]
    input: String,
    /// Output path, or - for stdout
    #[arg(long, default_value = "-")]
    output: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Parse,
    Normalize,
}

fn probability(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(format!("{value} is not a probability in [0, 1]"))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Normalize whitespace-separated words; the whitespace skeleton is
    /// preserved byte-for-byte
    Normalize {
        #[command(flatten)]
        io: IoArgs,
        /// Write one record per changed word to this path
        #[arg(long)]
        report: Option<String>,
        /// Map legacy codepoints to their visually similar counterparts
        #[arg(long)]
        map_legacy: bool,
        /// Disable the Bangla-specific rules
        #[arg(long)]
        no_bangla_extensions: bool,
    },
    /// Segment normalized words into graphemes (one output line per word)
    Parse {
        #[command(flatten)]
        io: IoArgs,
        /// Emit per-grapheme root:vowel-diacritic:consonant-diacritics fields
        #[arg(long)]
        components: bool,
        /// Normalize each word before parsing
        #[arg(long)]
        auto_normalize: bool,
    },
    /// Corpus statistics: unique words affected by normalization
    Stats {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Inject reproducible encoding noise into words
    Attack {
        #[command(flatten)]
        io: IoArgs,
        /// Probability of inserting a connector or non-glyph codepoint
        #[arg(long, value_parser = probability, default_value = "0.3")]
        p_connector: f64,
        /// Probability of decomposing a precomposed nukta letter
        #[arg(long, value_parser = probability, default_value = "0.5")]
        p_nukta: f64,
        /// Probability of decomposing a composed vowel diacritic
        #[arg(long, value_parser = probability, default_value = "0.5")]
        p_diacritic: f64,
        /// Probability of adding a vowel diacritic after a vowel
        #[arg(long, value_parser = probability, default_value = "0.5")]
        p_vowel: f64,
        /// Protocol passes per word
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), default_value_t = 1)]
        intensity: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Inject only at sites normalization provably repairs
        #[arg(long)]
        strict: bool,
    },
    /// Time parsing or normalization over seeded synthetic words,
    /// single-threaded
    Bench {
        /// Script to benchmark
        #[arg(long, value_enum)]
        script: ScriptCode,
        /// Number of synthetic words
        #[arg(long, default_value_t = 1_000_000)]
        words: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Parse)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Possible grapheme-root count for a consonant inventory of size N_C
    Roots {
        #[arg(value_parser = clap::value_parser!(u64).range(3..))]
        n_c: u64,
    },
}

fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    if path == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        let file = File::open(path).with_context(|| format!("cannot open input {path}"))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

fn open_output(path: &str) -> Result<Box<dyn Write>> {
    if path == "-" {
        Ok(Box::new(BufWriter::new(io::stdout())))
    } else {
        let file = File::create(path).with_context(|| format!("cannot create output {path}"))?;
        Ok(Box::new(BufWriter::new(file)))
    }
}

/// Reads up to `CHUNK_LINES` lines, keeping terminators.
fn read_chunk(reader: &mut dyn BufRead) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for _ in 0..CHUNK_LINES {
        let mut line = String::new();
        let n = reader.read_line(&mut line)?;
        if n == 0 {
            break;
        }
        lines.push(line);
    }
    Ok(lines)
}

fn hex_seq(chars: &[char]) -> String {
    chars
        .iter()
        .map(|&c| format!("{:04X}", c as u32))
        .collect::<Vec<_>>()
        .join("+")
}

fn format_fix(entry: &FixEntry) -> String {
    format!(
        "{}:{}:{}:{}",
        entry.kind,
        entry.position,
        hex_seq(&entry.removed),
        hex_seq(&entry.inserted)
    )
}

/// Report record: original word, normalized word, then the fix list.
fn format_report_record(word: &str, normalized: &str, report: &NormalizationReport) -> String {
    let fixes: Vec<String> = report.entries.iter().map(format_fix).collect();
    format!("{word}\t{normalized}\t{}", fixes.join(";"))
}

fn cmd_normalize(
    io_args: IoArgs,
    report_path: Option<String>,
    map_legacy: bool,
    no_bangla_extensions: bool,
) -> Result<()> {
    let spec = io_args.script.spec();
    let mut options = NormalizerOptions::for_script(spec);
    options.map_legacy = map_legacy;
    if no_bangla_extensions {
        options.bangla_extensions = false;
    }

    let mut reader = open_input(&io_args.input)?;
    let mut writer = open_output(&io_args.output)?;
    let mut report_writer = report_path.as_deref().map(open_output).transpose()?;

    loop {
        let lines = read_chunk(reader.as_mut())?;
        if lines.is_empty() {
            break;
        }
        let runs_per_line: Vec<Vec<(bool, &str)>> =
            lines.iter().map(|l| stream::split_runs(l)).collect();
        let words: Vec<String> = runs_per_line
            .iter()
            .flatten()
            .filter(|(is_word, _)| *is_word)
            .map(|(_, w)| w.to_string())
            .collect();
        let results = corpus::normalize_batch(spec, &words, &options);

        let mut normalized = Vec::with_capacity(results.len());
        for (word, result) in words.iter().zip(results) {
            let (out, report) = result?;
            if let Some(w) = report_writer.as_mut() {
                if out != *word || !report.is_empty() {
                    writeln!(w, "{}", format_report_record(word, &out, &report))?;
                }
            }
            normalized.push(out);
        }
        let mut replacement = normalized.iter().map(String::as_str);
        for runs in &runs_per_line {
            writer.write_all(stream::rebuild(runs, &mut replacement).as_bytes())?;
        }
    }
    writer.flush()?;
    if let Some(mut w) = report_writer {
        w.flush()?;
    }
    Ok(())
}

fn render_segmentation(result: &ParseResult) -> String {
    result
        .graphemes
        .iter()
        .map(|g| g.serialize())
        .collect::<Vec<_>>()
        .join("|")
}

fn render_components(result: &ParseResult) -> String {
    result
        .graphemes
        .iter()
        .map(|g| {
            let root: String = g.root.iter().collect();
            let vd: String = g.vowel_diacritic.iter().collect();
            let cds: String = g.consonant_diacritics.iter().collect();
            format!("{root}:{vd}:{cds}")
        })
        .collect::<Vec<_>>()
        .join("|")
}

fn cmd_parse(io_args: IoArgs, components: bool, auto_normalize: bool) -> Result<()> {
    let spec = io_args.script.spec();
    let options = NormalizerOptions::for_script(spec);
    let mut reader = open_input(&io_args.input)?;
    let mut writer = open_output(&io_args.output)?;
    let mut line_no = 0usize;
    let mut failures = 0usize;

    loop {
        let lines = read_chunk(reader.as_mut())?;
        if lines.is_empty() {
            break;
        }
        // (line number, word) per token
        let mut tokens: Vec<(usize, String)> = Vec::new();
        for line in &lines {
            line_no += 1;
            for token in line.split_whitespace() {
                tokens.push((line_no, token.to_string()));
            }
        }
        let words: Vec<String> = if auto_normalize {
            let raw: Vec<String> = tokens.iter().map(|(_, t)| t.clone()).collect();
            corpus::normalize_batch(spec, &raw, &options)
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .map(|(w, _)| w)
                .collect()
        } else {
            tokens.iter().map(|(_, t)| t.clone()).collect()
        };
        for ((line, _), (word, parsed)) in tokens
            .iter()
            .zip(words.iter().zip(corpus::parse_batch(spec, &words)))
        {
            match parsed {
                Ok(result) => {
                    if components {
                        writeln!(
                            writer,
                            "{word}\t{}\t{}",
                            render_segmentation(&result),
                            render_components(&result)
                        )?;
                    } else {
                        writeln!(writer, "{word}\t{}", render_segmentation(&result))?;
                    }
                }
                Err(e) => {
                    eprintln!("line {line}: {word}: {e}");
                    failures += 1;
                }
            }
        }
    }
    writer.flush()?;
    if failures > 0 {
        bail!("{failures} word(s) failed to parse");
    }
    Ok(())
}

fn cmd_stats(io_args: IoArgs) -> Result<()> {
    let spec = io_args.script.spec();
    let options = NormalizerOptions::for_script(spec);
    let mut reader = open_input(&io_args.input)?;
    let mut tokens: Vec<String> = Vec::new();
    loop {
        let lines = read_chunk(reader.as_mut())?;
        if lines.is_empty() {
            break;
        }
        for line in &lines {
            tokens.extend(line.split_whitespace().map(|t| t.to_string()));
        }
    }
    let stats = corpus_stats(spec, tokens, &options)?;
    let mut writer = open_output(&io_args.output)?;
    writeln!(
        writer,
        "script\ttotal_unique_words\taffected_words\taffected_percent"
    )?;
    writeln!(
        writer,
        "{}\t{}\t{}\t{:.2}",
        io_args.script.as_str(),
        stats.total_unique_words,
        stats.affected_words,
        stats.affected_percent
    )?;
    for (kind, count) in &stats.fix_histogram {
        writeln!(writer, "fix\t{kind}\t{count}")?;
    }
    writer.flush()?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_attack(
    io_args: IoArgs,
    p_connector: f64,
    p_nukta: f64,
    p_diacritic: f64,
    p_vowel: f64,
    intensity: u32,
    seed: u64,
    strict: bool,
) -> Result<()> {
    let spec = io_args.script.spec();
    let cfg = AttackConfig {
        p_connector_nonglyph: p_connector,
        p_break_nukta: p_nukta,
        p_break_diacritic: p_diacritic,
        p_vowel_vd: p_vowel,
        intensity,
        seed,
        strict,
    };
    cfg.validate().map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut reader = open_input(&io_args.input)?;
    let mut writer = open_output(&io_args.output)?;
    // global word index keeps per-word seeds independent of chunking
    let mut index = 0u64;
    loop {
        let lines = read_chunk(reader.as_mut())?;
        if lines.is_empty() {
            break;
        }
        for line in &lines {
            let runs = stream::split_runs(line);
            let mut out = String::with_capacity(line.len());
            for (is_word, text) in runs {
                if is_word {
                    out.push_str(&attack_word_at_index(spec, text, &cfg, index));
                    index += 1;
                } else {
                    out.push_str(text);
                }
            }
            writer.write_all(out.as_bytes())?;
        }
    }
    writer.flush()?;
    Ok(())
}

fn cmd_bench(script: ScriptCode, words: u64, mode: ModeArg, seed: u64) -> Result<()> {
    let mode = match mode {
        ModeArg::Parse => BenchMode::Parse,
        ModeArg::Normalize => BenchMode::Normalize,
    };
    let report = run_bench(script.spec(), words, mode, seed);
    println!("words_processed\twall_time_s\twords_per_second");
    println!(
        "{}\t{:.4}\t{:.1}",
        report.words_processed, report.wall_time, report.words_per_second
    );
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Normalize {
            io,
            report,
            map_legacy,
            no_bangla_extensions,
        } => cmd_normalize(io, report, map_legacy, no_bangla_extensions),
        Command::Parse {
            io,
            components,
            auto_normalize,
        } => cmd_parse(io, components, auto_normalize),
        Command::Stats { io } => cmd_stats(io),
        Command::Attack {
            io,
            p_connector,
            p_nukta,
            p_diacritic,
            p_vowel,
            intensity,
            seed,
            strict,
        } => cmd_attack(
            io,
            p_connector,
            p_nukta,
            p_diacritic,
            p_vowel,
            intensity,
            seed,
            strict,
        ),
        Command::Bench {
            script,
            words,
            mode,
            seed,
        } => cmd_bench(script, words, mode, seed),
        Command::Roots { n_c } => {
            println!(
                "{}",
                possible_roots(n_c).map_err(|e| anyhow::anyhow!("{e}"))?
            );
            Ok(())
        }
    }
}
