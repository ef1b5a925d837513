//! Grapheme (orthographic syllable) parsing of normalized words.
//!
//! The parser locates connector positions, merges overlapping connector
//! triplets into conjunct spans, collapses each span into one root unit, and
//! then attaches diacritic units to the grapheme opened by the preceding
//! root. Concatenating the serialized graphemes always reproduces the input.
//!
//! [`oracle_segment`] is an independent brute-force check of the same
//! segmentation: it enumerates every way to cut a short word into substrings
//! and accepts exactly those where each piece matches the grapheme grammar.
//! It shares no code with the parser path on purpose.

use std::fmt;

use thiserror::Error;

use crate::script::{CodepointClass, ScriptSpec};

/// One orthographic syllable: a root plus its diacritics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grapheme {
    /// One vowel, one consonant, or a connector-joined conjunct. A single
    /// digit/symbol codepoint when `other` is set.
    pub root: Vec<char>,
    /// At most one vowel diacritic per grapheme.
    pub vowel_diacritic: Option<char>,
    pub consonant_diacritics: Vec<char>,
    /// Set for digit/symbol/legacy singletons that stand outside the
    /// root-plus-diacritics grammar.
    pub other: bool,
}

impl Grapheme {
    fn root_only(root: Vec<char>) -> Self {
        Grapheme {
            root,
            vowel_diacritic: None,
            consonant_diacritics: Vec::new(),
            other: false,
        }
    }

    fn write_to(&self, out: &mut String) {
        out.extend(self.root.iter());
        out.extend(self.vowel_diacritic.iter());
        out.extend(self.consonant_diacritics.iter());
    }

    /// Serialization order: root, vowel diacritic, consonant diacritics.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        self.write_to(&mut out);
        out
    }
}

impl fmt::Display for Grapheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// A parsed word: graphemes in visual order plus the exact source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseResult {
    pub graphemes: Vec<Grapheme>,
    pub source: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    /// The word violates the normalized-word grammar; run normalization
    /// first.
    #[error("not normalized: {reason} at index {index}")]
    NotNormalized { index: usize, reason: &'static str },
    /// A diacritic unit appeared before any root unit. Cannot occur on
    /// normalized input.
    #[error("dangling diacritic at unit {index}")]
    DanglingDiacritic { index: usize },
}

/// Indices of connectors, ascending. Every connector must sit strictly
/// inside the word with consonants on both sides.
pub fn connector_positions(spec: &ScriptSpec, word: &[char]) -> Result<Vec<usize>, ParseError> {
    let mut positions = Vec::new();
    for (i, &c) in word.iter().enumerate() {
        if spec.classify(c) == CodepointClass::Connector {
            let valid = i > 0
                && i + 1 < word.len()
                && spec.is_consonant(word[i - 1])
                && spec.is_consonant(word[i + 1]);
            if !valid {
                return Err(ParseError::NotNormalized {
                    index: i,
                    reason: "connector without consonant neighbors",
                });
            }
            positions.push(i);
        }
    }
    Ok(positions)
}

/// Merges connector triplets `(i-1, i, i+1)` into disjoint spans.
///
/// Two triplets merge exactly when they share an endpoint, i.e. the
/// connectors sit two apart; the resulting inclusive spans cover runs of
/// consecutive indices with odd length >= 3.
pub fn merge_connector_spans(positions: &[usize]) -> Vec<(usize, usize)> {
    let mut spans: Vec<(usize, usize)> = Vec::new();
    for &i in positions {
        match spans.last_mut() {
            Some((_, end)) if *end + 1 == i => *end = i + 1,
            _ => spans.push((i - 1, i + 1)),
        }
    }
    spans
}

/// One segmentation unit of a normalized word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unit {
    /// Grapheme root: a vowel, a consonant, or a merged conjunct span.
    Root(Vec<char>),
    VowelDiacritic(char),
    ConsonantDiacritic(char),
    /// Digit, symbol, or legacy singleton.
    Other(char),
}

/// Collapses conjunct spans into root units and tags every remaining
/// codepoint by class.
pub fn segment_units(
    spec: &ScriptSpec,
    word: &[char],
    spans: &[(usize, usize)],
) -> Result<Vec<Unit>, ParseError> {
    let mut units = Vec::new();
    let mut next_span = 0;
    let mut i = 0;
    while i < word.len() {
        if next_span < spans.len() && spans[next_span].0 == i {
            let (start, end) = spans[next_span];
            units.push(Unit::Root(word[start..=end].to_vec()));
            next_span += 1;
            i = end + 1;
            continue;
        }
        let c = word[i];
        match spec.classify(c) {
            CodepointClass::Vowel | CodepointClass::Consonant => units.push(Unit::Root(vec![c])),
            CodepointClass::VowelDiacritic => units.push(Unit::VowelDiacritic(c)),
            CodepointClass::ConsonantDiacritic => units.push(Unit::ConsonantDiacritic(c)),
            CodepointClass::Digit | CodepointClass::Symbol | CodepointClass::Legacy => {
                units.push(Unit::Other(c))
            }
            CodepointClass::Connector => {
                return Err(ParseError::NotNormalized {
                    index: i,
                    reason: "connector outside any conjunct span",
                })
            }
            CodepointClass::Nukta => {
                return Err(ParseError::NotNormalized {
                    index: i,
                    reason: "nukta codepoint present",
                })
            }
            CodepointClass::Foreign => {
                return Err(ParseError::NotNormalized {
                    index: i,
                    reason: "foreign codepoint present",
                })
            }
        }
        i += 1;
    }
    Ok(units)
}

/// Opens a grapheme at every root/other unit and attaches the following
/// diacritic units to it.
pub fn assemble_graphemes(units: &[Unit]) -> Result<Vec<Grapheme>, ParseError> {
    let mut graphemes: Vec<Grapheme> = Vec::new();
    for (index, unit) in units.iter().enumerate() {
        match unit {
            Unit::Root(root) => graphemes.push(Grapheme::root_only(root.clone())),
            Unit::Other(c) => {
                let mut g = Grapheme::root_only(vec![*c]);
                g.other = true;
                graphemes.push(g);
            }
            Unit::VowelDiacritic(c) => {
                let grapheme = graphemes
                    .last_mut()
                    .ok_or(ParseError::DanglingDiacritic { index })?;
                if grapheme.vowel_diacritic.is_some() {
                    return Err(ParseError::NotNormalized {
                        index,
                        reason: "second vowel diacritic in one grapheme",
                    });
                }
                if !grapheme.consonant_diacritics.is_empty() {
                    return Err(ParseError::NotNormalized {
                        index,
                        reason: "vowel diacritic after consonant diacritic",
                    });
                }
                grapheme.vowel_diacritic = Some(*c);
            }
            Unit::ConsonantDiacritic(c) => {
                let grapheme = graphemes
                    .last_mut()
                    .ok_or(ParseError::DanglingDiacritic { index })?;
                grapheme.consonant_diacritics.push(*c);
            }
        }
    }
    Ok(graphemes)
}

/// Parses a normalized word into graphemes. Rejects non-normalized input
/// with [`ParseError::NotNormalized`] instead of mis-segmenting it.
pub fn parse_word(spec: &ScriptSpec, word: &str) -> Result<ParseResult, ParseError> {
    let chars: Vec<char> = word.chars().collect();
    let positions = connector_positions(spec, &chars)?;
    let spans = merge_connector_spans(&positions);
    let units = segment_units(spec, &chars, &spans)?;
    let graphemes = assemble_graphemes(&units)?;
    Ok(ParseResult {
        graphemes,
        source: word.to_string(),
    })
}

/// Concatenates the grapheme serializations; equals `result.source` for any
/// successful parse.
pub fn reconstruct(result: &ParseResult) -> String {
    let mut out = String::with_capacity(result.source.len());
    for grapheme in &result.graphemes {
        grapheme.write_to(&mut out);
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// Exhaustive enumeration is bounded to short words.
    #[error("word of {len} codepoints exceeds the oracle bound of 12")]
    WordTooLong { len: usize },
    /// No segmentation satisfies the grapheme grammar: the word is not
    /// normalized.
    #[error("no accepting segmentation")]
    NoSegmentation,
    /// More than one segmentation matched; signals a grammar bug.
    #[error("{count} accepting segmentations")]
    AmbiguousSegmentation { count: usize },
}

/// Matches one candidate segment against the grapheme grammar:
/// root = Vowel | Consonant (Connector Consonant)*, followed by an optional
/// vowel diacritic (consonant roots only) and any consonant diacritics.
fn match_grapheme(spec: &ScriptSpec, segment: &[char]) -> Option<Grapheme> {
    let first = *segment.first()?;
    let n = segment.len();
    let (root_end, vowel_root) = match spec.classify(first) {
        CodepointClass::Vowel => (1, true),
        CodepointClass::Consonant => {
            let mut j = 1;
            while j + 1 < n
                && spec.classify(segment[j]) == CodepointClass::Connector
                && spec.is_consonant(segment[j + 1])
            {
                j += 2;
            }
            (j, false)
        }
        _ => return None,
    };
    let mut i = root_end;
    let mut vowel_diacritic = None;
    if !vowel_root && i < n && spec.classify(segment[i]) == CodepointClass::VowelDiacritic {
        vowel_diacritic = Some(segment[i]);
        i += 1;
    }
    let mut consonant_diacritics = Vec::new();
    while i < n && spec.classify(segment[i]) == CodepointClass::ConsonantDiacritic {
        consonant_diacritics.push(segment[i]);
        i += 1;
    }
    if i != n {
        return None;
    }
    Some(Grapheme {
        root: segment[..root_end].to_vec(),
        vowel_diacritic,
        consonant_diacritics,
        other: false,
    })
}

/// Brute-force segmentation oracle: enumerates all `2^(n-1)` ways to cut the
/// word and returns the unique grammar-accepting segmentation.
///
/// Test support for validating [`parse_word`]; independent of the parser
/// implementation.
pub fn oracle_segment(spec: &ScriptSpec, word: &str) -> Result<Vec<Grapheme>, OracleError> {
    let chars: Vec<char> = word.chars().collect();
    let n = chars.len();
    if n > 12 {
        return Err(OracleError::WordTooLong { len: n });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut accepted: Vec<Vec<Grapheme>> = Vec::new();
    for mask in 0u32..(1u32 << (n - 1)) {
        let mut graphemes = Vec::new();
        let mut start = 0;
        let mut ok = true;
        for i in 0..n {
            let cut_here = i == n - 1 || mask & (1 << i) != 0;
            if cut_here {
                match match_grapheme(spec, &chars[start..=i]) {
                    Some(g) => graphemes.push(g),
                    None => {
                        ok = false;
                        break;
                    }
                }
                start = i + 1;
            }
        }
        if ok {
            accepted.push(graphemes);
        }
    }
    match accepted.len() {
        0 => Err(OracleError::NoSegmentation),
        1 => Ok(accepted.pop().unwrap()),
        count => Err(OracleError::AmbiguousSegmentation { count }),
    }
}
