//! Regenerates the bundled sample corpora under `corpora/`.
//!
//! Each corpus holds 10,000 synthetic words for one script, ten per line;
//! roughly a third are run through the non-strict noise injector so the
//! files contain a realistic share of malformed words. Everything is seeded,
//! so reruns are byte-identical.
//!
//! Usage: cargo run -p abugida-core --example make_sample_corpora

use std::fs;
use std::path::PathBuf;

use abugida_core::attack::{attack_word_at_index, AttackConfig};
use abugida_core::script::{bundled_spec, BUNDLED_SCRIPTS};
use abugida_core::synth;

const WORDS_PER_CORPUS: usize = 10_000;
const WORDS_PER_LINE: usize = 10;

fn main() {
    let out_dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpora"]
        .iter()
        .collect();
    fs::create_dir_all(&out_dir).expect("create corpora dir");

    for (script_index, code) in BUNDLED_SCRIPTS.iter().enumerate() {
        let spec = bundled_spec(code).unwrap();
        let seed = 0x5EED_0000 + script_index as u64;
        let words = synth::normalized_words(spec, WORDS_PER_CORPUS, seed);
        let cfg = AttackConfig {
            intensity: 1 + (script_index as u32 % 2),
            ..AttackConfig::new(seed ^ 0xA77A)
        };
        let mut out = String::new();
        for (i, word) in words.iter().enumerate() {
            let emitted = if i % 10 < 3 {
                attack_word_at_index(spec, word, &cfg, i as u64)
            } else {
                word.clone()
            };
            out.push_str(&emitted);
            if (i + 1) % WORDS_PER_LINE == 0 {
                out.push('\n');
            } else {
                out.push(' ');
            }
        }
        let path = out_dir.join(format!("{code}_sample.txt"));
        fs::write(&path, out).expect("write corpus");
        println!("wrote {}", path.display());
    }
}
