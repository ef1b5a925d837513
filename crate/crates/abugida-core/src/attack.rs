//! Reproducible noise injection ("attacks") for robustness evaluation.
//!
//! One protocol pass fires four independent sub-operations, each with its own
//! probability: inserting a connector or non-glyph codepoint, breaking a
//! precomposed nukta letter, breaking a composed vowel diacritic, and adding
//! a vowel diacritic after a vowel. The pass is repeated `intensity` times.
//!
//! Everything is driven by a counter-based seeded RNG, so the output is a
//! pure function of `(spec, word, config)` and corpora can be attacked in
//! parallel without losing reproducibility.

use thiserror::Error;

use crate::normalize::TA;
use crate::rng::{derive_seed, mix, SplitMix64};
use crate::script::{CodepointClass, ScriptSpec};

/// Non-glyph codepoints used by the insertion sub-operation, next to the
/// script connector: zero-width space, zero-width non-joiner, a Latin letter.
const NON_GLYPH_POOL: [char; 3] = ['\u{200B}', '\u{200C}', 'z'];

/// Error-injection protocol configuration.
#[derive(Debug, Clone)]
pub struct AttackConfig {
    /// Probability of inserting the connector or a non-glyph codepoint.
    pub p_connector_nonglyph: f64,
    /// Probability of decomposing one precomposed nukta letter.
    pub p_break_nukta: f64,
    /// Probability of decomposing one composed vowel diacritic.
    pub p_break_diacritic: f64,
    /// Probability of inserting a vowel diacritic after a vowel.
    pub p_vowel_vd: f64,
    /// Number of protocol passes per word (attack-x°).
    pub intensity: u32,
    pub seed: u64,
    /// Restrict injections to sites the normalizer provably repairs, so the
    /// attack-then-normalize round trip recovers the input exactly.
    pub strict: bool,
}

impl AttackConfig {
    /// Default probabilities at intensity 1.
    pub fn new(seed: u64) -> Self {
        AttackConfig {
            p_connector_nonglyph: 0.3,
            p_break_nukta: 0.5,
            p_break_diacritic: 0.5,
            p_vowel_vd: 0.5,
            intensity: 1,
            seed,
            strict: false,
        }
    }

    pub fn validate(&self) -> Result<(), AttackConfigError> {
        for (name, value) in [
            ("p_connector_nonglyph", self.p_connector_nonglyph),
            ("p_break_nukta", self.p_break_nukta),
            ("p_break_diacritic", self.p_break_diacritic),
            ("p_vowel_vd", self.p_vowel_vd),
        ] {
            if !(0.0..=1.0).contains(&value) || value.is_nan() {
                return Err(AttackConfigError::InvalidProbability { name, value });
            }
        }
        if self.intensity < 1 {
            return Err(AttackConfigError::InvalidIntensity {
                value: self.intensity,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum AttackConfigError {
    #[error("{name} = {value} is not a probability")]
    InvalidProbability { name: &'static str, value: f64 },
    #[error("intensity must be >= 1, got {value}")]
    InvalidIntensity { value: u32 },
}

/// How many times each sub-operation fired on a word (instrumentation for
/// coverage checks).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AttackTrace {
    pub connector_nonglyph: u32,
    pub break_nukta: u32,
    pub break_diacritic: u32,
    pub vowel_vd: u32,
}

/// Injects noise into one normalized word. Deterministic in
/// `(word, cfg.seed)`.
pub fn attack_word(spec: &ScriptSpec, word: &str, cfg: &AttackConfig) -> String {
    attack_word_seeded(spec, word, cfg, cfg.seed).0
}

/// [`attack_word`] plus a per-sub-operation fire count.
pub fn attack_word_with_trace(
    spec: &ScriptSpec,
    word: &str,
    cfg: &AttackConfig,
) -> (String, AttackTrace) {
    attack_word_seeded(spec, word, cfg, cfg.seed)
}

fn attack_word_seeded(
    spec: &ScriptSpec,
    word: &str,
    cfg: &AttackConfig,
    seed: u64,
) -> (String, AttackTrace) {
    let mut rng = SplitMix64::new(mix(seed));
    let mut chars: Vec<char> = word.chars().collect();
    let mut trace = AttackTrace::default();
    for _ in 0..cfg.intensity {
        protocol_pass(spec, &mut chars, cfg, &mut rng, &mut trace);
    }
    (chars.into_iter().collect(), trace)
}

fn protocol_pass(
    spec: &ScriptSpec,
    chars: &mut Vec<char>,
    cfg: &AttackConfig,
    rng: &mut SplitMix64,
    trace: &mut AttackTrace,
) {
    // (1) insert the connector or a non-glyph codepoint at a random position
    if rng.bernoulli(cfg.p_connector_nonglyph) {
        let mut pool = Vec::with_capacity(4);
        pool.push(spec.connector());
        pool.extend_from_slice(&NON_GLYPH_POOL);
        let ch = *rng.choose(&pool);
        let positions: Vec<usize> = (0..=chars.len())
            .filter(|&p| !cfg.strict || strict_insert_ok(spec, chars, p, ch))
            .collect();
        if !positions.is_empty() {
            let p = positions[rng.next_below(positions.len())];
            chars.insert(p, ch);
            trace.connector_nonglyph += 1;
        }
    }

    // (2) replace one precomposed nukta letter with its (base, nukta) pair
    if rng.bernoulli(cfg.p_break_nukta) {
        if let Some(nukta) = spec.nukta() {
            let sites: Vec<usize> = chars
                .iter()
                .enumerate()
                .filter(|&(_, &c)| spec.nukta_decomposition(c).is_some())
                .map(|(i, _)| i)
                .collect();
            if !sites.is_empty() {
                let i = sites[rng.next_below(sites.len())];
                let base = spec.nukta_decomposition(chars[i]).unwrap();
                chars.splice(i..=i, [base, nukta]);
                trace.break_nukta += 1;
            }
        }
    }

    // (3) replace one composed vowel diacritic with its decomposed pair
    if rng.bernoulli(cfg.p_break_diacritic) {
        let sites: Vec<usize> = chars
            .iter()
            .enumerate()
            .filter(|&(_, &c)| spec.diacritic_decomposition(c).is_some())
            .map(|(i, _)| i)
            .collect();
        if !sites.is_empty() {
            let i = sites[rng.next_below(sites.len())];
            let (first, second) = spec.diacritic_decomposition(chars[i]).unwrap();
            chars.splice(i..=i, [first, second]);
            trace.break_diacritic += 1;
        }
    }

    // (4) insert a random vowel diacritic right after a random vowel
    if rng.bernoulli(cfg.p_vowel_vd) && !spec.vowel_diacritics().is_empty() {
        let sites: Vec<usize> = chars
            .iter()
            .enumerate()
            .filter(|&(_, &c)| spec.is_vowel(c))
            .map(|(i, _)| i)
            .collect();
        if !sites.is_empty() {
            let i = sites[rng.next_below(sites.len())];
            let vd = *rng.choose(spec.vowel_diacritics());
            chars.insert(i + 1, vd);
            trace.vowel_vd += 1;
        }
    }
}

/// Strict mode: positions where inserting `ch` is provably repaired by
/// normalization.
fn strict_insert_ok(spec: &ScriptSpec, word: &[char], p: usize, ch: char) -> bool {
    let bangla = spec.script_code() == "bn";
    let prev = p.checked_sub(1).map(|i| word[i]);
    let next = word.get(p).copied();
    // splitting a (base, nukta) pair would orphan the nukta
    if next.is_some_and(|n| spec.classify(n) == CodepointClass::Nukta) {
        return false;
    }
    // any pool codepoint is a non-consonant: placed right after [TA,
    // connector] it completes a dead-ta pattern that rewrites to khanda ta
    if bangla && prev == Some(spec.connector()) && p >= 2 && word[p - 2] == TA {
        return false;
    }
    if ch == spec.connector() {
        // The connector must land at an illegal position even after
        // invalid-Unicode cleanup deletes foreign codepoints, so judge its
        // neighbors skipping over Foreign (e.g. previously injected
        // zero-width characters).
        let eff_prev = word[..p]
            .iter()
            .rev()
            .copied()
            .find(|&c| spec.classify(c) != CodepointClass::Foreign);
        let eff_next = word[p..]
            .iter()
            .copied()
            .find(|&c| spec.classify(c) != CodepointClass::Foreign);
        let prev_cons = eff_prev.is_some_and(|c| spec.is_consonant(c));
        let next_cons = eff_next.is_some_and(|c| spec.is_consonant(c));
        if prev_cons && next_cons {
            return false;
        }
        // a connector effectively after TA legitimately rewrites to khanda ta
        if bangla && eff_prev == Some(TA) {
            return false;
        }
    }
    true
}

/// Attacks the word at a given corpus index: the per-word seed is derived
/// from `(cfg.seed, index)`, so streaming callers get the same output as
/// [`attack_corpus`] regardless of chunking.
pub fn attack_word_at_index(
    spec: &ScriptSpec,
    word: &str,
    cfg: &AttackConfig,
    index: u64,
) -> String {
    attack_word_seeded(spec, word, cfg, derive_seed(cfg.seed, index)).0
}

/// Attacks a word list element-wise. Per-word seeding keeps results
/// order-stable and identical whether or not the `parallel` feature is
/// enabled.
pub fn attack_corpus(spec: &ScriptSpec, words: &[String], cfg: &AttackConfig) -> Vec<String> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        words
            .par_iter()
            .enumerate()
            .map(|(i, w)| attack_word_at_index(spec, w, cfg, i as u64))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        words
            .iter()
            .enumerate()
            .map(|(i, w)| attack_word_at_index(spec, w, cfg, i as u64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalize::{normalize_word, NormalizerOptions};
    use crate::script::bundled_spec;

    fn bn() -> &'static ScriptSpec {
        bundled_spec("bn").unwrap()
    }

    #[test]
    fn zero_probabilities_leave_word_unchanged() {
        let cfg = AttackConfig {
            p_connector_nonglyph: 0.0,
            p_break_nukta: 0.0,
            p_break_diacritic: 0.0,
            p_vowel_vd: 0.0,
            intensity: 5,
            seed: 1,
            strict: false,
        };
        assert_eq!(attack_word(bn(), "কলম", &cfg), "কলম");
    }

    #[test]
    fn break_nukta_inverts_composition() {
        let cfg = AttackConfig {
            p_connector_nonglyph: 0.0,
            p_break_nukta: 1.0,
            p_break_diacritic: 0.0,
            p_vowel_vd: 0.0,
            intensity: 1,
            seed: 9,
            strict: false,
        };
        assert_eq!(attack_word(bn(), "\u{09DF}", &cfg), "\u{09AF}\u{09BC}");
    }

    #[test]
    fn break_diacritic_inverts_composition() {
        let cfg = AttackConfig {
            p_connector_nonglyph: 0.0,
            p_break_nukta: 0.0,
            p_break_diacritic: 1.0,
            p_vowel_vd: 0.0,
            intensity: 1,
            seed: 9,
            strict: false,
        };
        assert_eq!(attack_word(bn(), "ক\u{09CB}", &cfg), "ক\u{09C7}\u{09BE}");
    }

    #[test]
    fn same_word_and_seed_is_deterministic() {
        let cfg = AttackConfig::new(1234);
        let a = attack_word(bn(), "সংবাদ", &cfg);
        let b = attack_word(bn(), "সংবাদ", &cfg);
        assert_eq!(a, b);
    }

    #[test]
    fn corpus_attack_is_deterministic_and_order_stable() {
        let words: Vec<String> = ["কলম", "সংবাদ", "ক\u{09CD}ষ"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let cfg = AttackConfig::new(7);
        let a = attack_corpus(bn(), &words, &cfg);
        let b = attack_corpus(bn(), &words, &cfg);
        assert_eq!(a, b);
        assert_eq!(attack_corpus(bn(), &[], &cfg), Vec::<String>::new());
    }

    #[test]
    fn strict_attack_round_trips_through_normalization() {
        let words = [
            "কলম",
            "সংবাদ",
            "ক\u{09CD}ষ\u{09C3}",
            "উ\u{09CE}স",
            "য\u{09BC}",
        ];
        let opts = NormalizerOptions::for_script(bn());
        for intensity in [1, 2, 5] {
            for (i, word) in words.iter().enumerate() {
                let (normalized, _) = normalize_word(bn(), word, &opts).unwrap();
                let cfg = AttackConfig {
                    intensity,
                    strict: true,
                    ..AttackConfig::new(100 + i as u64)
                };
                let noisy = attack_word(bn(), &normalized, &cfg);
                let (recovered, _) = normalize_word(bn(), &noisy, &opts).unwrap();
                assert_eq!(
                    recovered, normalized,
                    "intensity {intensity}, word {word:?}"
                );
            }
        }
    }

    #[test]
    fn config_validation() {
        let mut cfg = AttackConfig::new(0);
        assert!(cfg.validate().is_ok());
        cfg.p_break_nukta = 1.5;
        assert!(matches!(
            cfg.validate(),
            Err(AttackConfigError::InvalidProbability { .. })
        ));
        cfg.p_break_nukta = 0.5;
        cfg.intensity = 0;
        assert!(matches!(
            cfg.validate(),
            Err(AttackConfigError::InvalidIntensity { value: 0 })
        ));
    }
}
