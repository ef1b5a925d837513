//! Word normalization: repairs the recurring Unicode encoding defects of
//! Abugida scripts.
//!
//! Seven general rules (legacy symbols, broken vowel diacritics, broken
//! nukta, invalid Unicode, invalid connectors, diacritic form correction,
//! vowel + vowel-diacritic removal) plus four Bangla-specific rules
//! (unwanted doubles, complex-root reduction, Assamese lookalike
//! replacement, khanda-ta normalization).
//!
//! [`normalize_word`] runs the full pipeline to a fixpoint and reports every
//! fix it applied; the individual `fix_*` functions expose each rule on its
//! own. All operations are pure functions of `(spec, word, options)` and are
//! safe to call concurrently over a shared spec.
//!
//! Termination: every rule either strictly shortens the word or strictly
//! reduces the number of out-of-order diacritic pairs without growing the
//! word, so the pipeline reaches a fixpoint in a small number of passes
//! (empirically <= 4; `max_passes` guards the theoretical bound).

use std::fmt;

use thiserror::Error;

use crate::script::{CodepointClass, ScriptSpec};

/// Bangla letter TA, whose dead form is khanda ta.
pub(crate) const TA: char = '\u{09A4}';
/// Bangla letter KHANDA TA.
pub(crate) const KHANDA_TA: char = '\u{09CE}';
/// Zero-width non-joiner, referenced by khanda-ta handling.
pub(crate) const ZWNJ: char = '\u{200C}';

/// The kind of defect a fix repaired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixKind {
    Legacy,
    BrokenDiacritic,
    BrokenNukta,
    InvalidUnicode,
    InvalidConnector,
    DiacriticForm,
    VowelVowelDiacritic,
    UnwantedDouble,
    ComplexRoot,
    AssameseReplacement,
    ToHosonto,
}

impl FixKind {
    /// Short code used in reports and histograms.
    pub fn code(self) -> &'static str {
        match self {
            FixKind::Legacy => "LEG",
            FixKind::BrokenDiacritic => "BD",
            FixKind::BrokenNukta => "BN",
            FixKind::InvalidUnicode => "IU",
            FixKind::InvalidConnector => "IC",
            FixKind::DiacriticForm => "FD",
            FixKind::VowelVowelDiacritic => "VDV",
            FixKind::UnwantedDouble => "UD",
            FixKind::ComplexRoot => "CRN",
            FixKind::AssameseReplacement => "AR",
            FixKind::ToHosonto => "THN",
        }
    }

    pub const ALL: [FixKind; 11] = [
        FixKind::Legacy,
        FixKind::BrokenDiacritic,
        FixKind::BrokenNukta,
        FixKind::InvalidUnicode,
        FixKind::InvalidConnector,
        FixKind::DiacriticForm,
        FixKind::VowelVowelDiacritic,
        FixKind::UnwantedDouble,
        FixKind::ComplexRoot,
        FixKind::AssameseReplacement,
        FixKind::ToHosonto,
    ];
}

impl fmt::Display for FixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One applied fix: at `position` in the word as it stood just before this
/// fix, `removed` was replaced by `inserted`.
///
/// Entries with `removed == inserted` are advisory flags (e.g. a legacy
/// codepoint with no mapping) and change nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixEntry {
    pub kind: FixKind,
    pub position: usize,
    pub removed: Vec<char>,
    pub inserted: Vec<char>,
}

/// Ordered record of every fix applied to a word.
///
/// Replaying the entries over the original input reproduces the normalized
/// output exactly; see [`NormalizationReport::replay`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizationReport {
    pub entries: Vec<FixEntry>,
}

impl NormalizationReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Applies the recorded fixes to `input` in order. Returns `None` if an
    /// entry does not match, which means the report does not belong to this
    /// input.
    pub fn replay(&self, input: &str) -> Option<String> {
        let mut chars: Vec<char> = input.chars().collect();
        for entry in &self.entries {
            let end = entry.position.checked_add(entry.removed.len())?;
            if end > chars.len() || chars[entry.position..end] != entry.removed[..] {
                return None;
            }
            chars.splice(entry.position..end, entry.inserted.iter().copied());
        }
        Some(chars.into_iter().collect())
    }

    /// Counts entries of each kind.
    pub fn count(&self, kind: FixKind) -> usize {
        self.entries.iter().filter(|e| e.kind == kind).count()
    }
}

/// Pipeline configuration.
#[derive(Debug, Clone)]
pub struct NormalizerOptions {
    /// Map legacy codepoints to their visually similar counterparts
    /// (off by default).
    pub map_legacy: bool,
    /// Enable the four Bangla-specific rules. Only effective when the
    /// script is `bn`; ignored elsewhere.
    pub bangla_extensions: bool,
    /// Upper bound on fixpoint iterations.
    pub max_passes: usize,
}

impl NormalizerOptions {
    /// Defaults for a script: legacy mapping off, Bangla extensions on for
    /// `bn`, eight passes.
    pub fn for_script(spec: &ScriptSpec) -> Self {
        NormalizerOptions {
            map_legacy: false,
            bangla_extensions: spec.script_code() == "bn",
            max_passes: 8,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizeError {
    /// Input is empty or contains whitespace; normalization operates on
    /// single words.
    #[error("input is not a single word")]
    NotAWord,
    /// No fixpoint within `max_passes`; signals a rule-interaction bug.
    #[error("no fixpoint within {max_passes} passes")]
    PassLimitExceeded { max_passes: usize },
}

// ---------------------------------------------------------------------------
// Individual rules. Each returns Some(new_word) when it changed something and
// pushes report entries positioned against the evolving sequence, so that
// sequential replay of all entries reproduces the final output.
// ---------------------------------------------------------------------------

fn rule_legacy(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
    flag_unmapped: bool,
) -> Option<Vec<char>> {
    if !word
        .iter()
        .any(|&c| spec.classify(c) == CodepointClass::Legacy)
    {
        return None;
    }
    let mut out = Vec::with_capacity(word.len());
    let mut changed = false;
    for &c in word {
        if spec.classify(c) == CodepointClass::Legacy {
            if let Some(replacement) = spec.legacy_replacement(c) {
                entries.push(FixEntry {
                    kind: FixKind::Legacy,
                    position: out.len(),
                    removed: vec![c],
                    inserted: vec![replacement],
                });
                out.push(replacement);
                changed = true;
                continue;
            }
            if flag_unmapped {
                // unmapped legacy codepoint: left as-is, flagged
                entries.push(FixEntry {
                    kind: FixKind::Legacy,
                    position: out.len(),
                    removed: vec![c],
                    inserted: vec![c],
                });
            }
        }
        out.push(c);
    }
    changed.then_some(out)
}

fn rule_assamese(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
) -> Option<Vec<char>> {
    if !word.iter().any(|&c| spec.assamese_replacement(c).is_some()) {
        return None;
    }
    let mut out = Vec::with_capacity(word.len());
    for &c in word {
        if let Some(replacement) = spec.assamese_replacement(c) {
            entries.push(FixEntry {
                kind: FixKind::AssameseReplacement,
                position: out.len(),
                removed: vec![c],
                inserted: vec![replacement],
            });
            out.push(replacement);
        } else {
            out.push(c);
        }
    }
    Some(out)
}

fn rule_broken_diacritics(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
) -> Option<Vec<char>> {
    if spec.diacritic_compositions().is_empty()
        || !word
            .windows(2)
            .any(|w| spec.diacritic_composition(w[0], w[1]).is_some())
    {
        return None;
    }
    let mut out: Vec<char> = Vec::with_capacity(word.len());
    for &c in word {
        out.push(c);
        // compose as long as the last two codepoints form a key, so chains
        // like a+b -> c, x+c -> y resolve in one application
        while out.len() >= 2 {
            let b = out[out.len() - 1];
            let a = out[out.len() - 2];
            match spec.diacritic_composition(a, b) {
                Some(composed) => {
                    out.truncate(out.len() - 2);
                    entries.push(FixEntry {
                        kind: FixKind::BrokenDiacritic,
                        position: out.len(),
                        removed: vec![a, b],
                        inserted: vec![composed],
                    });
                    out.push(composed);
                }
                None => break,
            }
        }
    }
    Some(out)
}

fn rule_nukta(spec: &ScriptSpec, word: &[char], entries: &mut Vec<FixEntry>) -> Option<Vec<char>> {
    if !word
        .iter()
        .any(|&c| spec.classify(c) == CodepointClass::Nukta)
    {
        return None;
    }
    let mut out = Vec::with_capacity(word.len());
    for &c in word {
        if spec.classify(c) == CodepointClass::Nukta {
            if Some(c) == spec.nukta() {
                if let Some(&base) = out.last() {
                    if let Some(composed) = spec.nukta_composition(base) {
                        out.pop();
                        entries.push(FixEntry {
                            kind: FixKind::BrokenNukta,
                            position: out.len(),
                            removed: vec![base, c],
                            inserted: vec![composed],
                        });
                        out.push(composed);
                        continue;
                    }
                }
            }
            // orphan nukta: no composable base, dropped
            entries.push(FixEntry {
                kind: FixKind::BrokenNukta,
                position: out.len(),
                removed: vec![c],
                inserted: vec![],
            });
            continue;
        }
        out.push(c);
    }
    Some(out)
}

fn rule_khanda_ta(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
) -> Option<Vec<char>> {
    if !word.contains(&TA) {
        return None;
    }
    let connector = spec.connector();
    let mut out = Vec::with_capacity(word.len());
    let mut changed = false;
    let mut i = 0;
    while i < word.len() {
        if word[i] == TA && i + 1 < word.len() && word[i + 1] == connector {
            let third = word.get(i + 2).copied();
            if third == Some(ZWNJ) {
                entries.push(FixEntry {
                    kind: FixKind::ToHosonto,
                    position: out.len(),
                    removed: vec![TA, connector, ZWNJ],
                    inserted: vec![KHANDA_TA],
                });
                out.push(KHANDA_TA);
                i += 3;
                changed = true;
                continue;
            }
            let followed_by_consonant = third.is_some_and(|c| spec.is_consonant(c));
            if !followed_by_consonant {
                entries.push(FixEntry {
                    kind: FixKind::ToHosonto,
                    position: out.len(),
                    removed: vec![TA, connector],
                    inserted: vec![KHANDA_TA],
                });
                out.push(KHANDA_TA);
                i += 2;
                changed = true;
                continue;
            }
        }
        out.push(word[i]);
        i += 1;
    }
    changed.then_some(out)
}

fn rule_invalid_unicode(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
    preserve_rule_referenced: bool,
) -> Option<Vec<char>> {
    let is_target = |c: char| {
        spec.classify(c) == CodepointClass::Foreign
            && !(preserve_rule_referenced && spec.is_rule_referenced(c))
    };
    if !word.iter().any(|&c| is_target(c)) {
        return None;
    }
    let mut out = Vec::with_capacity(word.len());
    for &c in word {
        if is_target(c) {
            entries.push(FixEntry {
                kind: FixKind::InvalidUnicode,
                position: out.len(),
                removed: vec![c],
                inserted: vec![],
            });
        } else {
            out.push(c);
        }
    }
    Some(out)
}

fn rule_unwanted_doubles(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
) -> Option<Vec<char>> {
    let connector = spec.connector();
    let mut out: Vec<char> = Vec::with_capacity(word.len());
    let mut changed = false;
    for &c in word {
        if out.last() == Some(&c)
            && (c == connector || spec.classify(c) == CodepointClass::VowelDiacritic)
        {
            entries.push(FixEntry {
                kind: FixKind::UnwantedDouble,
                position: out.len(),
                removed: vec![c],
                inserted: vec![],
            });
            changed = true;
            continue;
        }
        out.push(c);
    }
    changed.then_some(out)
}

fn rule_invalid_connectors(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
    khanda_ta_aware: bool,
) -> Option<Vec<char>> {
    let connector = spec.connector();
    if !word.contains(&connector) {
        return None;
    }
    let mut out: Vec<char> = Vec::with_capacity(word.len());
    let mut changed = false;
    for (i, &c) in word.iter().enumerate() {
        if c == connector {
            // predecessor is taken from the already-fixed prefix, so of two
            // stacked connectors the survivor can still bind its consonants
            let prev_ok = out.last().is_some_and(|&p| spec.is_consonant(p));
            let next_ok = word.get(i + 1).is_some_and(|&n| spec.is_consonant(n));
            if prev_ok && next_ok {
                out.push(c);
                continue;
            }
            // word-final [ta, connector] is khanda-ta material, not noise
            if khanda_ta_aware && i == word.len() - 1 && out.last() == Some(&TA) {
                out.push(c);
                continue;
            }
            entries.push(FixEntry {
                kind: FixKind::InvalidConnector,
                position: out.len(),
                removed: vec![c],
                inserted: vec![],
            });
            changed = true;
            continue;
        }
        out.push(c);
    }
    changed.then_some(out)
}

fn rule_complex_roots(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
    khanda_ta_aware: bool,
) -> Option<Vec<char>> {
    let connector = spec.connector();
    if !word.contains(&connector) {
        return None;
    }
    let mut out: Vec<char> = Vec::with_capacity(word.len());
    let mut changed = false;
    let n = word.len();
    let mut i = 0;
    while i < n {
        let c = word[i];
        if spec.is_consonant(c) {
            // gather the maximal connector-joined consonant run
            let mut run = vec![c];
            let mut j = i + 1;
            while j + 1 < n && word[j] == connector && spec.is_consonant(word[j + 1]) {
                run.push(word[j + 1]);
                j += 2;
            }
            if run.len() == 1 {
                out.push(c);
                i = j;
                continue;
            }
            // left-to-right: keep the longest whitelisted prefix as a
            // conjunct, sever the connector that would extend past it
            let mut k = 0;
            while k < run.len() {
                let max_len = (run.len() - k).min(4);
                let mut kept = 0;
                for len in (2..=max_len).rev() {
                    if spec.whitelisted(&run[k..k + len]) {
                        kept = len;
                        break;
                    }
                }
                if kept >= 2 {
                    out.push(run[k]);
                    for t in 1..kept {
                        out.push(connector);
                        out.push(run[k + t]);
                    }
                } else {
                    kept = 1;
                    out.push(run[k]);
                }
                if k + kept < run.len() {
                    entries.push(FixEntry {
                        kind: FixKind::ComplexRoot,
                        position: out.len(),
                        removed: vec![connector],
                        inserted: vec![],
                    });
                    changed = true;
                }
                k += kept;
            }
            i = j;
            continue;
        }
        if c == connector {
            // connector outside any consonant run
            if khanda_ta_aware && i == n - 1 && out.last() == Some(&TA) {
                out.push(c);
            } else {
                entries.push(FixEntry {
                    kind: FixKind::ComplexRoot,
                    position: out.len(),
                    removed: vec![c],
                    inserted: vec![],
                });
                changed = true;
            }
            i += 1;
            continue;
        }
        out.push(c);
        i += 1;
    }
    changed.then_some(out)
}

fn is_diacritic(class: CodepointClass) -> bool {
    matches!(
        class,
        CodepointClass::VowelDiacritic | CodepointClass::ConsonantDiacritic
    )
}

fn rule_diacritic_forms(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
) -> Option<Vec<char>> {
    let mut current: Option<Vec<char>> = None;
    let mut changed = false;

    // (a) runs of vowel diacritics with no composable pair: keep the first
    let input: &[char] = word;
    {
        let mut out: Vec<char> = Vec::with_capacity(input.len());
        let mut step_changed = false;
        let mut i = 0;
        while i < input.len() {
            let c = input[i];
            out.push(c);
            if spec.classify(c) == CodepointClass::VowelDiacritic {
                let mut j = i + 1;
                while j < input.len() && spec.classify(input[j]) == CodepointClass::VowelDiacritic {
                    j += 1;
                }
                if j - i >= 2 {
                    let run = &input[i..j];
                    let composable = run
                        .windows(2)
                        .any(|w| spec.diacritic_composition(w[0], w[1]).is_some());
                    if composable {
                        // a composition pair: left for the broken-diacritic rule
                        out.extend_from_slice(&run[1..]);
                    } else {
                        entries.push(FixEntry {
                            kind: FixKind::DiacriticForm,
                            position: out.len(),
                            removed: run[1..].to_vec(),
                            inserted: vec![],
                        });
                        step_changed = true;
                    }
                    i = j;
                    continue;
                }
            }
            i += 1;
        }
        if step_changed {
            changed = true;
            current = Some(out);
        }
    }

    // (b) reorder each mixed diacritic run: vowel diacritics before consonant
    // diacritics (stable). This is the fixpoint of swapping adjacent
    // (consonant diacritic, vowel diacritic) pairs, reached in one step.
    {
        let input: &[char] = current.as_deref().unwrap_or(word);
        let mut out: Vec<char> = Vec::with_capacity(input.len());
        let mut step_changed = false;
        let mut i = 0;
        while i < input.len() {
            if is_diacritic(spec.classify(input[i])) {
                let mut j = i + 1;
                while j < input.len() && is_diacritic(spec.classify(input[j])) {
                    j += 1;
                }
                let run = &input[i..j];
                let mut reordered: Vec<char> = run
                    .iter()
                    .copied()
                    .filter(|&c| spec.classify(c) == CodepointClass::VowelDiacritic)
                    .collect();
                reordered.extend(
                    run.iter()
                        .copied()
                        .filter(|&c| spec.classify(c) == CodepointClass::ConsonantDiacritic),
                );
                if reordered[..] != run[..] {
                    entries.push(FixEntry {
                        kind: FixKind::DiacriticForm,
                        position: out.len(),
                        removed: run.to_vec(),
                        inserted: reordered.clone(),
                    });
                    step_changed = true;
                }
                out.extend_from_slice(&reordered);
                i = j;
                continue;
            }
            out.push(input[i]);
            i += 1;
        }
        if step_changed {
            changed = true;
            current = Some(out);
        }
    }

    // (c) diacritics with no legal host: following digits or symbols, or at
    // the start of the word
    {
        let input: &[char] = current.as_deref().unwrap_or(word);
        let mut out: Vec<char> = Vec::with_capacity(input.len());
        let mut step_changed = false;
        for &c in input {
            if is_diacritic(spec.classify(c)) {
                let hosted = match out.last() {
                    None => false,
                    Some(&p) => !matches!(
                        spec.classify(p),
                        CodepointClass::Digit | CodepointClass::Symbol
                    ),
                };
                if !hosted {
                    entries.push(FixEntry {
                        kind: FixKind::DiacriticForm,
                        position: out.len(),
                        removed: vec![c],
                        inserted: vec![],
                    });
                    step_changed = true;
                    continue;
                }
            }
            out.push(c);
        }
        if step_changed {
            changed = true;
            current = Some(out);
        }
    }

    if changed {
        current
    } else {
        None
    }
}

fn rule_vowel_vowel_diacritic(
    spec: &ScriptSpec,
    word: &[char],
    entries: &mut Vec<FixEntry>,
) -> Option<Vec<char>> {
    let mut out: Vec<char> = Vec::with_capacity(word.len());
    let mut changed = false;
    for &c in word {
        if spec.classify(c) == CodepointClass::VowelDiacritic
            && out.last().is_some_and(|&p| spec.is_vowel(p))
        {
            entries.push(FixEntry {
                kind: FixKind::VowelVowelDiacritic,
                position: out.len(),
                removed: vec![c],
                inserted: vec![],
            });
            changed = true;
            continue;
        }
        out.push(c);
    }
    changed.then_some(out)
}

// ---------------------------------------------------------------------------
// Public single-rule operations.
// ---------------------------------------------------------------------------

fn run_single<F>(word: &str, rule: F) -> String
where
    F: FnOnce(&[char], &mut Vec<FixEntry>) -> Option<Vec<char>>,
{
    let chars: Vec<char> = word.chars().collect();
    let mut entries = Vec::new();
    match rule(&chars, &mut entries) {
        Some(out) => out.into_iter().collect(),
        None => word.to_string(),
    }
}

/// Maps legacy codepoints to their configured counterparts.
pub fn fix_legacy(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_legacy(spec, w, e, true))
}

/// Replaces Assamese lookalike codepoints (Bangla).
pub fn replace_assamese(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_assamese(spec, w, e))
}

/// Composes adjacent vowel-diacritic pairs into their single-codepoint form.
pub fn fix_broken_diacritics(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_broken_diacritics(spec, w, e))
}

/// Composes (base, nukta) pairs into precomposed letters; orphan nukta signs
/// are dropped.
pub fn fix_nukta(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_nukta(spec, w, e))
}

/// Rewrites dead-ta sequences to khanda ta (Bangla).
pub fn normalize_khanda_ta(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_khanda_ta(spec, w, e))
}

/// Removes Foreign codepoints. Rule-referenced codepoints (e.g. ZWNJ for
/// Bangla) survive this standalone form; the pipeline removes them after
/// khanda-ta processing.
pub fn remove_invalid_unicode(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_invalid_unicode(spec, w, e, true))
}

/// Collapses immediately repeated connectors and identical vowel diacritics
/// (Bangla).
pub fn dedup_unwanted_doubles(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_unwanted_doubles(spec, w, e))
}

/// Removes connectors that do not sit between two consonants.
pub fn fix_invalid_connectors(spec: &ScriptSpec, word: &str) -> String {
    let khanda_ta_aware = spec.script_code() == "bn";
    run_single(word, |w, e| {
        rule_invalid_connectors(spec, w, e, khanda_ta_aware)
    })
}

/// Reduces connector-joined consonant runs to whitelisted conjuncts (Bangla).
pub fn normalize_complex_roots(spec: &ScriptSpec, word: &str) -> String {
    let khanda_ta_aware = spec.script_code() == "bn";
    run_single(word, |w, e| rule_complex_roots(spec, w, e, khanda_ta_aware))
}

/// Cleans consecutive vowel diacritics, reorders consonant-diacritic /
/// vowel-diacritic pairs, and drops diacritics without a legal host.
pub fn fix_diacritic_forms(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_diacritic_forms(spec, w, e))
}

/// Removes vowel diacritics that immediately follow a vowel.
pub fn remove_vowel_vowel_diacritic(spec: &ScriptSpec, word: &str) -> String {
    run_single(word, |w, e| rule_vowel_vowel_diacritic(spec, w, e))
}

// ---------------------------------------------------------------------------
// Pipeline.
// ---------------------------------------------------------------------------

/// Normalizes one word to a fixpoint and reports every applied fix.
///
/// Rule order within a pass: legacy (if enabled), Assamese replacement,
/// broken diacritics, broken nukta, khanda ta, invalid Unicode, unwanted
/// doubles, invalid connectors, complex roots, diacritic forms,
/// vowel + vowel diacritic. Structural rewrites run before deletion rules so
/// the invalid-Unicode cleaner cannot destroy the ZWNJ that khanda-ta
/// handling needs.
pub fn normalize_word(
    spec: &ScriptSpec,
    word: &str,
    options: &NormalizerOptions,
) -> Result<(String, NormalizationReport), NormalizeError> {
    if word.is_empty() || word.chars().any(char::is_whitespace) {
        return Err(NormalizeError::NotAWord);
    }
    let bangla = options.bangla_extensions && spec.script_code() == "bn";
    let complex_roots = bangla && spec.has_conjunct_whitelist();

    let mut chars: Vec<char> = word.chars().collect();
    let mut entries: Vec<FixEntry> = Vec::new();
    let mut pass = 0;
    loop {
        if pass >= options.max_passes {
            return Err(NormalizeError::PassLimitExceeded {
                max_passes: options.max_passes,
            });
        }
        let mut pass_entries: Vec<FixEntry> = Vec::new();
        let mut changed = false;
        {
            let mut apply = |result: Option<Vec<char>>, chars: &mut Vec<char>| {
                if let Some(next) = result {
                    *chars = next;
                    changed = true;
                }
            };
            if options.map_legacy {
                let r = rule_legacy(spec, &chars, &mut pass_entries, true);
                apply(r, &mut chars);
            }
            if bangla {
                let r = rule_assamese(spec, &chars, &mut pass_entries);
                apply(r, &mut chars);
            }
            let r = rule_broken_diacritics(spec, &chars, &mut pass_entries);
            apply(r, &mut chars);
            let r = rule_nukta(spec, &chars, &mut pass_entries);
            apply(r, &mut chars);
            if bangla {
                let r = rule_khanda_ta(spec, &chars, &mut pass_entries);
                apply(r, &mut chars);
            }
            let r = rule_invalid_unicode(spec, &chars, &mut pass_entries, false);
            apply(r, &mut chars);
            if bangla {
                let r = rule_unwanted_doubles(spec, &chars, &mut pass_entries);
                apply(r, &mut chars);
            }
            let r = rule_invalid_connectors(spec, &chars, &mut pass_entries, bangla);
            apply(r, &mut chars);
            if complex_roots {
                let r = rule_complex_roots(spec, &chars, &mut pass_entries, bangla);
                apply(r, &mut chars);
            }
            let r = rule_diacritic_forms(spec, &chars, &mut pass_entries);
            apply(r, &mut chars);
            let r = rule_vowel_vowel_diacritic(spec, &chars, &mut pass_entries);
            apply(r, &mut chars);
        }
        if pass > 0 {
            // advisory flags were already recorded on the first pass
            pass_entries.retain(|e| e.removed != e.inserted);
        }
        entries.extend(pass_entries);
        pass += 1;
        if !changed {
            break;
        }
    }
    Ok((chars.into_iter().collect(), NormalizationReport { entries }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::bundled_spec;

    fn bn() -> &'static ScriptSpec {
        bundled_spec("bn").unwrap()
    }

    fn deva() -> &'static ScriptSpec {
        bundled_spec("deva").unwrap()
    }

    fn norm(spec: &ScriptSpec, word: &str) -> (String, NormalizationReport) {
        normalize_word(spec, word, &NormalizerOptions::for_script(spec)).unwrap()
    }

    #[test]
    fn legacy_vocalic_l_maps_to_digit_nine() {
        assert_eq!(fix_legacy(bn(), "\u{098C}"), "\u{09EF}");
        assert_eq!(fix_legacy(bn(), "কলম"), "কলম");
    }

    #[test]
    fn legacy_gurmukhi_sign_maps_per_spec_data() {
        let guru = bundled_spec("guru").unwrap();
        let word = "\u{0A72}ਕ";
        let expected: String = ['\u{0A07}', 'ਕ'].iter().collect();
        assert_eq!(fix_legacy(guru, word), expected);
    }

    #[test]
    fn legacy_unmapped_codepoint_is_flagged_not_changed() {
        // synthetic spec: one legacy codepoint, empty legacy_map
        let source = r#"
script_code = "xx"
connector = "U+09CD"
nukta = ""
rule_referenced = []
conjunct_whitelist = []
[classes]
vowel = []
consonant = ["U+0995"]
vowel_diacritic = []
consonant_diacritic = []
connector = ["U+09CD"]
nukta = []
digit = []
symbol = []
legacy = ["U+098C"]
[nukta_compositions]
[diacritic_compositions]
[legacy_map]
[assamese_map]
"#;
        let spec = crate::script::load_script_spec(source).unwrap();
        let opts = NormalizerOptions {
            map_legacy: true,
            bangla_extensions: false,
            max_passes: 8,
        };
        let (out, report) = normalize_word(&spec, "\u{098C}", &opts).unwrap();
        assert_eq!(out, "\u{098C}");
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].kind, FixKind::Legacy);
        assert_eq!(report.entries[0].removed, report.entries[0].inserted);
    }

    #[test]
    fn broken_diacritics_compose() {
        assert_eq!(fix_broken_diacritics(bn(), "\u{09C7}\u{09BE}"), "\u{09CB}");
        assert_eq!(
            fix_broken_diacritics(deva(), "\u{093E}\u{0947}"),
            "\u{094B}"
        );
        assert_eq!(fix_broken_diacritics(bn(), "ক\u{09CB}"), "ক\u{09CB}");
    }

    #[test]
    fn nukta_composes_or_drops() {
        assert_eq!(fix_nukta(bn(), "\u{09AF}\u{09BC}"), "\u{09DF}");
        assert_eq!(fix_nukta(deva(), "\u{091C}\u{093C}"), "\u{095B}");
        assert_eq!(fix_nukta(bn(), "কলম"), "কলম");
        // orphan: no composable base
        assert_eq!(fix_nukta(bn(), "অ\u{09BC}"), "অ");
    }

    #[test]
    fn invalid_unicode_removed() {
        assert_eq!(remove_invalid_unicode(bn(), "অ\u{200B}জ"), "অজ");
        // a word of only foreign codepoints collapses to nothing
        assert_eq!(remove_invalid_unicode(bn(), "ab\u{200B}"), "");
        assert_eq!(remove_invalid_unicode(bn(), "কলম"), "কলম");
        // rule-referenced ZWNJ survives the standalone operation
        assert_eq!(
            remove_invalid_unicode(bn(), "ত\u{09CD}\u{200C}"),
            "ত\u{09CD}\u{200C}"
        );
    }

    #[test]
    fn invalid_connectors_removed() {
        // trailing
        assert_eq!(fix_invalid_connectors(bn(), "আমার\u{09CD}"), "আমার");
        // middle, after a vowel diacritic
        assert_eq!(
            fix_invalid_connectors(bn(), "চ\u{09C1}\u{09CD}ক\u{09CD}ত\u{09BF}"),
            "চ\u{09C1}ক\u{09CD}ত\u{09BF}"
        );
        // legitimately between two consonants
        assert_eq!(fix_invalid_connectors(bn(), "ক\u{09CD}ষ"), "ক\u{09CD}ষ");
    }

    #[test]
    fn diacritic_forms_fixed() {
        // consecutive identical vowel diacritics (non-composable): keep first
        assert_eq!(
            fix_diacritic_forms(bn(), "দ\u{09C1}\u{09C1}ই"),
            "দ\u{09C1}ই"
        );
        // consonant diacritic before vowel diacritic: reorder
        assert_eq!(
            fix_diacritic_forms(bn(), "ক\u{0981}\u{09BE}"),
            "ক\u{09BE}\u{0981}"
        );
        // diacritic after a digit: drop
        assert_eq!(fix_diacritic_forms(bn(), "১\u{09BE}"), "১");
        // diacritic at word start: drop
        assert_eq!(fix_diacritic_forms(bn(), "\u{09BF}ক"), "ক");
    }

    #[test]
    fn vowel_vowel_diacritic_removed() {
        assert_eq!(remove_vowel_vowel_diacritic(bn(), "এ\u{09C7}"), "এ");
        assert_eq!(remove_vowel_vowel_diacritic(bn(), "ক\u{09C7}"), "ক\u{09C7}");
        assert_eq!(
            remove_vowel_vowel_diacritic(bn(), "এক\u{09C7}"),
            "এক\u{09C7}"
        );
    }

    #[test]
    fn unwanted_doubles_collapse() {
        assert_eq!(
            dedup_unwanted_doubles(bn(), "য\u{09C1}দ\u{09CD}\u{09CD}ধ"),
            "য\u{09C1}দ\u{09CD}ধ"
        );
        assert_eq!(
            dedup_unwanted_doubles(bn(), "ক\u{09BE}\u{09BE}"),
            "ক\u{09BE}"
        );
        assert_eq!(dedup_unwanted_doubles(bn(), "কলম"), "কলম");
    }

    #[test]
    fn complex_roots_reduced_to_whitelist() {
        // randomized connectors collapse onto the whitelisted conjunct
        assert_eq!(
            normalize_complex_roots(bn(), "ব\u{09BF}\u{09CD}ষ\u{09CD}প\u{09CD}দ"),
            "ব\u{09BF}ষ\u{09CD}পদ"
        );
        // longest whitelisted prefix wins, scan resumes after it
        assert_eq!(
            normalize_complex_roots(bn(), "ক\u{09CD}ক\u{09CD}ক"),
            "ক\u{09CD}কক"
        );
        assert_eq!(normalize_complex_roots(bn(), "ক\u{09CD}ষ"), "ক\u{09CD}ষ");
    }

    #[test]
    fn assamese_lookalikes_replaced() {
        assert_eq!(replace_assamese(bn(), "\u{09F0}"), "\u{09B0}");
        assert_eq!(replace_assamese(bn(), "\u{09F1}"), "\u{09AC}");
        assert_eq!(replace_assamese(bn(), "কলম"), "কলম");
    }

    #[test]
    fn khanda_ta_normalized() {
        assert_eq!(normalize_khanda_ta(bn(), "ত\u{09CD}\u{200C}"), "\u{09CE}");
        assert_eq!(normalize_khanda_ta(bn(), "উত\u{09CD}"), "উ\u{09CE}");
        // legitimate conjunct double-ta is untouched
        assert_eq!(normalize_khanda_ta(bn(), "ত\u{09CD}ত"), "ত\u{09CD}ত");
    }

    #[test]
    fn pipeline_trailing_connector_report() {
        let (out, report) = norm(bn(), "আমার\u{09CD}");
        assert_eq!(out, "আমার");
        assert_eq!(
            report.entries,
            vec![FixEntry {
                kind: FixKind::InvalidConnector,
                position: 4,
                removed: vec!['\u{09CD}'],
                inserted: vec![],
            }]
        );
    }

    #[test]
    fn pipeline_identity_on_normalized_word() {
        let (out, report) = norm(bn(), "কলম");
        assert_eq!(out, "কলম");
        assert!(report.is_empty());
    }

    #[test]
    fn pipeline_double_connector_reports_unwanted_double() {
        let (out, report) = norm(bn(), "য\u{09C1}দ\u{09CD}\u{09CD}ধ");
        assert_eq!(out, "য\u{09C1}দ\u{09CD}ধ");
        assert!(report.count(FixKind::UnwantedDouble) > 0);
    }

    #[test]
    fn pipeline_rejects_non_words() {
        let opts = NormalizerOptions::for_script(bn());
        assert_eq!(
            normalize_word(bn(), "", &opts).unwrap_err(),
            NormalizeError::NotAWord
        );
        assert_eq!(
            normalize_word(bn(), "দুই শব্দ", &opts).unwrap_err(),
            NormalizeError::NotAWord
        );
    }

    #[test]
    fn report_replay_reproduces_output() {
        let words = [
            "আমার\u{09CD}",
            "চ\u{09C1}\u{09CD}ক\u{09CD}ত\u{09BF}",
            "য\u{09C1}দ\u{09CD}\u{09CD}ধ",
            "ব\u{09BF}\u{09CD}ষ\u{09CD}প\u{09CD}দ",
            "উত\u{09CD}স\u{200B}",
            "এ\u{09C7}",
            "১\u{09BE}",
        ];
        for word in words {
            let (out, report) = norm(bn(), word);
            assert_eq!(
                report.replay(word).as_deref(),
                Some(out.as_str()),
                "{word:?}"
            );
        }
    }

    #[test]
    fn report_replay_rejects_mismatched_input() {
        let (_, report) = norm(bn(), "আমার\u{09CD}");
        assert_eq!(report.replay("কলম"), None);
    }
}
