//! # abugida-core
//!
//! Script-configurable Unicode normalization and orthographic-syllable
//! (grapheme) parsing for Indic Abugida scripts.
//!
//! The crate is organized around an immutable [`ScriptSpec`] that carries a
//! script's codepoint classes and rewrite maps. Everything else is a pure
//! function over that spec:
//!
//! - [`normalize`] repairs malformed words (broken diacritics, broken nukta,
//!   invalid connectors, ...) and reports every fix it applied.
//! - [`parse`] segments a normalized word into visually sequential graphemes
//!   and their root/diacritic constituents.
//! - [`attack`] injects reproducible encoding noise into normalized words for
//!   robustness testing.
//! - [`corpus`] provides batch processing (rayon-parallel with the default
//!   `parallel` feature, sequential otherwise), corpus statistics, and a
//!   throughput benchmark runner.
//! - [`synth`] generates seeded synthetic words for fuzzing and benchmarks.

pub mod attack;
pub mod corpus;
pub mod normalize;
pub mod parse;
mod rng;
pub mod roots;
pub mod script;
pub mod synth;

pub use attack::{attack_corpus, attack_word, AttackConfig};
pub use corpus::{corpus_stats, run_bench, BenchMode, BenchReport, CorpusStats};
pub use normalize::{
    normalize_word, FixEntry, FixKind, NormalizationReport, NormalizeError, NormalizerOptions,
};
pub use parse::{parse_word, reconstruct, Grapheme, ParseError, ParseResult};
pub use roots::possible_roots;
pub use script::{load_script_spec, validate_spec, CodepointClass, ScriptSpec, SpecError};
