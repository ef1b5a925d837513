//! Batch processing over word lists: parallel with the default `parallel`
//! feature (rayon), sequential otherwise. The `*_seq` variants are always
//! available so the two paths can be compared directly.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use crate::normalize::{
    normalize_word, FixKind, NormalizationReport, NormalizeError, NormalizerOptions,
};
use crate::parse::{parse_word, ParseError, ParseResult};
use crate::script::ScriptSpec;
use crate::synth;

/// Normalizes a batch sequentially.
pub fn normalize_batch_seq(
    spec: &ScriptSpec,
    words: &[String],
    options: &NormalizerOptions,
) -> Vec<Result<(String, NormalizationReport), NormalizeError>> {
    words
        .iter()
        .map(|w| normalize_word(spec, w, options))
        .collect()
}

/// Normalizes a batch, in parallel when the `parallel` feature is enabled.
/// Output order matches input order regardless of worker count.
pub fn normalize_batch(
    spec: &ScriptSpec,
    words: &[String],
    options: &NormalizerOptions,
) -> Vec<Result<(String, NormalizationReport), NormalizeError>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        words
            .par_iter()
            .map(|w| normalize_word(spec, w, options))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        normalize_batch_seq(spec, words, options)
    }
}

/// Parses a batch sequentially.
pub fn parse_batch_seq(
    spec: &ScriptSpec,
    words: &[String],
) -> Vec<Result<ParseResult, ParseError>> {
    words.iter().map(|w| parse_word(spec, w)).collect()
}

/// Parses a batch, in parallel when the `parallel` feature is enabled.
pub fn parse_batch(spec: &ScriptSpec, words: &[String]) -> Vec<Result<ParseResult, ParseError>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        words.par_iter().map(|w| parse_word(spec, w)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        parse_batch_seq(spec, words)
    }
}

/// Word-level corpus summary: how many unique words normalization changed.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusStats {
    pub total_unique_words: u64,
    pub affected_words: u64,
    /// `100 * affected / total`; render with two decimal places.
    pub affected_percent: f64,
    pub fix_histogram: BTreeMap<FixKind, u64>,
}

/// Deduplicates whitespace tokens, normalizes each unique word once, and
/// counts the changed ones.
pub fn corpus_stats<I, S>(
    spec: &ScriptSpec,
    tokens: I,
    options: &NormalizerOptions,
) -> Result<CorpusStats, NormalizeError>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut seen: HashSet<String> = HashSet::new();
    let mut unique: Vec<String> = Vec::new();
    for token in tokens {
        let token = token.as_ref();
        if token.is_empty() {
            continue;
        }
        if !seen.contains(token) {
            seen.insert(token.to_string());
            unique.push(token.to_string());
        }
    }
    drop(seen);

    let results = normalize_batch(spec, &unique, options);
    let mut affected = 0u64;
    let mut histogram: BTreeMap<FixKind, u64> = BTreeMap::new();
    for (word, result) in unique.iter().zip(results) {
        let (normalized, report) = result?;
        if &normalized != word {
            affected += 1;
        }
        for entry in &report.entries {
            *histogram.entry(entry.kind).or_insert(0) += 1;
        }
    }
    let total = unique.len() as u64;
    let affected_percent = if total == 0 {
        0.0
    } else {
        100.0 * affected as f64 / total as f64
    };
    Ok(CorpusStats {
        total_unique_words: total,
        affected_words: affected,
        affected_percent,
        fix_histogram: histogram,
    })
}

/// What a benchmark run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMode {
    Parse,
    Normalize,
}

/// Single-threaded throughput measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub words_processed: u64,
    /// Seconds.
    pub wall_time: f64,
    pub words_per_second: f64,
}

/// Generates `n` seeded synthetic normalized words and times the selected
/// operation over them, single-threaded.
pub fn run_bench(spec: &ScriptSpec, n: u64, mode: BenchMode, seed: u64) -> BenchReport {
    let words = synth::normalized_words(spec, n as usize, seed);
    let options = NormalizerOptions::for_script(spec);
    let start = Instant::now();
    let mut checksum = 0usize;
    match mode {
        BenchMode::Parse => {
            for word in &words {
                let result = parse_word(spec, word).expect("synthetic word parses");
                checksum += result.graphemes.len();
            }
        }
        BenchMode::Normalize => {
            for word in &words {
                let (out, _) = normalize_word(spec, word, &options).expect("synthetic word");
                checksum += out.len();
            }
        }
    }
    let wall_time = start.elapsed().as_secs_f64();
    std::hint::black_box(checksum);
    let words_per_second = if wall_time > 0.0 {
        n as f64 / wall_time
    } else {
        f64::INFINITY
    };
    BenchReport {
        words_processed: n,
        wall_time,
        words_per_second,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::bundled_spec;

    #[test]
    fn stats_count_affected_words() {
        let spec = bundled_spec("bn").unwrap();
        let options = NormalizerOptions::for_script(spec);
        // three unique words (one duplicated), one of them malformed
        let tokens = ["কলম", "আমার\u{09CD}", "কলম", "সংবাদ"];
        let stats = corpus_stats(spec, tokens, &options).unwrap();
        assert_eq!(stats.total_unique_words, 3);
        assert_eq!(stats.affected_words, 1);
        assert!((stats.affected_percent - 100.0 / 3.0).abs() < 1e-9);
        assert_eq!(stats.fix_histogram[&FixKind::InvalidConnector], 1);
    }

    #[test]
    fn stats_on_empty_corpus() {
        let spec = bundled_spec("bn").unwrap();
        let options = NormalizerOptions::for_script(spec);
        let stats = corpus_stats(spec, Vec::<String>::new(), &options).unwrap();
        assert_eq!(stats.total_unique_words, 0);
        assert_eq!(stats.affected_words, 0);
        assert_eq!(stats.affected_percent, 0.0);
    }

    #[test]
    fn parallel_and_sequential_batches_agree() {
        let spec = bundled_spec("bn").unwrap();
        let options = NormalizerOptions::for_script(spec);
        let words = synth::raw_words(spec, 300, 11, 0.05);
        let par: Vec<_> = normalize_batch(spec, &words, &options);
        let seq: Vec<_> = normalize_batch_seq(spec, &words, &options);
        assert_eq!(par, seq);
        let normalized: Vec<String> = par
            .into_iter()
            .map(|r| r.unwrap().0)
            .filter(|w| !w.is_empty())
            .collect();
        assert_eq!(
            parse_batch(spec, &normalized),
            parse_batch_seq(spec, &normalized)
        );
    }

    #[test]
    fn bench_reports_consistent_rate() {
        let spec = bundled_spec("bn").unwrap();
        let report = run_bench(spec, 100, BenchMode::Parse, 5);
        assert_eq!(report.words_processed, 100);
        assert!(report.wall_time >= 0.0);
        assert!(report.words_per_second > 0.0);
        let report = run_bench(spec, 1, BenchMode::Normalize, 5);
        assert_eq!(report.words_processed, 1);
    }
}
