//! Seeded synthetic word generation for fuzzing and benchmarks.
//!
//! Two generators:
//! - [`normalized_words`] builds words grapheme-by-grapheme from the
//!   normalized-word grammar, so they are fixpoints of normalization.
//! - [`raw_words`] draws codepoints uniformly from the script's Unicode
//!   block (including unassigned slots) plus a slice of foreign noise, for
//!   exercising the normalizer itself.

use crate::rng::{derive_seed, mix, SplitMix64};
use crate::script::ScriptSpec;

/// Foreign codepoints mixed into raw fuzz words.
const FOREIGN_POOL: [char; 10] = [
    'a', 'z', 'A', '.', ',', '\u{200B}', '\u{200C}', '\u{200D}', '\u{0391}', '\u{0374}',
];

/// Consonants eligible as generated roots: the script's consonants minus any
/// that normalization rewrites (Assamese lookalikes).
fn root_consonants(spec: &ScriptSpec) -> Vec<char> {
    spec.consonants()
        .iter()
        .copied()
        .filter(|&c| spec.assamese_replacement(c).is_none())
        .collect()
}

/// Generates `count` already-normalized words. Deterministic in `seed`.
pub fn normalized_words(spec: &ScriptSpec, count: usize, seed: u64) -> Vec<String> {
    let consonants = root_consonants(spec);
    let conjuncts: Vec<Vec<char>> = {
        let mut v: Vec<Vec<char>> = spec.conjunct_whitelist().iter().cloned().collect();
        v.sort_unstable();
        v
    };
    (0..count)
        .map(|i| {
            let mut rng = SplitMix64::new(derive_seed(seed, i as u64));
            normalized_word(spec, &consonants, &conjuncts, &mut rng)
        })
        .collect()
}

fn normalized_word(
    spec: &ScriptSpec,
    consonants: &[char],
    conjuncts: &[Vec<char>],
    rng: &mut SplitMix64,
) -> String {
    let connector = spec.connector();
    let graphemes = 1 + rng.next_below(4);
    let mut word = Vec::new();
    for _ in 0..graphemes {
        let roll = rng.next_below(100);
        if roll < 60 {
            // consonant root, optionally with a conjunct
            let take_conjunct = roll < 15 && !conjuncts.is_empty();
            if take_conjunct {
                let conjunct = rng.choose(conjuncts);
                for (k, &c) in conjunct.iter().enumerate() {
                    if k > 0 {
                        word.push(connector);
                    }
                    word.push(c);
                }
            } else {
                word.push(*rng.choose(consonants));
            }
            // at most one vowel diacritic, then consonant diacritics
            if rng.next_below(100) < 45 && !spec.vowel_diacritics().is_empty() {
                word.push(*rng.choose(spec.vowel_diacritics()));
            }
            if rng.next_below(100) < 12 && !spec.consonant_diacritics().is_empty() {
                word.push(*rng.choose(spec.consonant_diacritics()));
            }
        } else if roll < 90 {
            // vowel root, optionally a consonant diacritic
            word.push(*rng.choose(spec.vowels()));
            if rng.next_below(100) < 10 && !spec.consonant_diacritics().is_empty() {
                word.push(*rng.choose(spec.consonant_diacritics()));
            }
        } else if roll < 95 && !conjuncts.is_empty() {
            let conjunct = rng.choose(conjuncts);
            for (k, &c) in conjunct.iter().enumerate() {
                if k > 0 {
                    word.push(connector);
                }
                word.push(c);
            }
            if rng.next_below(100) < 45 && !spec.vowel_diacritics().is_empty() {
                word.push(*rng.choose(spec.vowel_diacritics()));
            }
        } else {
            // bare consonant pair joined by a connector for scripts without a
            // whitelist; plain consonant otherwise
            if conjuncts.is_empty() {
                word.push(*rng.choose(consonants));
                word.push(connector);
                word.push(*rng.choose(consonants));
            } else {
                word.push(*rng.choose(consonants));
            }
        }
    }
    word.into_iter().collect()
}

/// Generates `count` raw fuzz words: block codepoints with `foreign_ratio`
/// foreign noise. Deterministic in `seed`.
pub fn raw_words(spec: &ScriptSpec, count: usize, seed: u64, foreign_ratio: f64) -> Vec<String> {
    let block = spec.block_range();
    let (start, end) = (*block.start(), *block.end());
    (0..count)
        .map(|i| {
            let mut rng = SplitMix64::new(mix(derive_seed(seed, i as u64)));
            let len = 1 + rng.next_below(14);
            (0..len)
                .map(|_| {
                    if rng.bernoulli(foreign_ratio) {
                        *rng.choose(&FOREIGN_POOL)
                    } else {
                        // Indic blocks contain no surrogates, so every draw
                        // is a valid scalar value
                        char::from_u32(start + rng.next_below((end - start + 1) as usize) as u32)
                            .unwrap()
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize::{normalize_word, NormalizerOptions};
    use crate::script::{bundled_spec, BUNDLED_SCRIPTS};

    #[test]
    fn normalized_words_are_fixpoints() {
        for code in BUNDLED_SCRIPTS {
            let spec = bundled_spec(code).unwrap();
            let opts = NormalizerOptions::for_script(spec);
            for word in normalized_words(spec, 500, 42) {
                let (out, report) = normalize_word(spec, &word, &opts).unwrap();
                assert_eq!(out, word, "{code}: {word:?} not a fixpoint");
                assert!(report.is_empty(), "{code}: {word:?} reported fixes");
            }
        }
    }

    #[test]
    fn generators_are_seed_deterministic() {
        let spec = bundled_spec("bn").unwrap();
        assert_eq!(normalized_words(spec, 50, 7), normalized_words(spec, 50, 7));
        assert_ne!(normalized_words(spec, 50, 7), normalized_words(spec, 50, 8));
        assert_eq!(raw_words(spec, 50, 7, 0.05), raw_words(spec, 50, 7, 0.05));
    }

    #[test]
    fn raw_words_stay_in_block_plus_noise() {
        let spec = bundled_spec("deva").unwrap();
        let block = spec.block_range();
        for word in raw_words(spec, 200, 3, 0.05) {
            for c in word.chars() {
                assert!(
                    block.contains(&(c as u32)) || FOREIGN_POOL.contains(&c),
                    "unexpected codepoint {c:?}"
                );
            }
        }
    }
}
