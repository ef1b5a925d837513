//! Per-script configuration: codepoint classes and rewrite maps.
//!
//! A [`ScriptSpec`] is loaded from a TOML document, validated once, and then
//! shared immutably by every other module. Character inventories are kept in
//! data files (one per script, see the crate's `data/` directory) so the
//! engine itself stays script-agnostic; users can review and override them.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use serde::Deserialize;
use thiserror::Error;

/// Classification of one codepoint within a script.
///
/// Classes are mutually exclusive: a codepoint maps to exactly one class, and
/// anything the spec does not list is `Foreign`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CodepointClass {
    Vowel,
    Consonant,
    VowelDiacritic,
    ConsonantDiacritic,
    Connector,
    Nukta,
    Digit,
    Symbol,
    Legacy,
    Foreign,
}

impl fmt::Display for CodepointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CodepointClass::Vowel => "vowel",
            CodepointClass::Consonant => "consonant",
            CodepointClass::VowelDiacritic => "vowel_diacritic",
            CodepointClass::ConsonantDiacritic => "consonant_diacritic",
            CodepointClass::Connector => "connector",
            CodepointClass::Nukta => "nukta",
            CodepointClass::Digit => "digit",
            CodepointClass::Symbol => "symbol",
            CodepointClass::Legacy => "legacy",
            CodepointClass::Foreign => "foreign",
        };
        f.write_str(name)
    }
}

/// Immutable per-script character inventory and rewrite maps.
#[derive(Debug, Clone)]
pub struct ScriptSpec {
    script_code: String,
    classes: HashMap<char, CodepointClass>,
    connector: char,
    nukta: Option<char>,
    /// base consonant -> precomposed (base + script nukta) letter
    nukta_compositions: HashMap<char, char>,
    /// adjacent vowel-diacritic pair -> single composed vowel diacritic
    diacritic_compositions: HashMap<(char, char), char>,
    /// kept in declaration order so decomposition (the inverse map) is stable
    diacritic_composition_list: Vec<((char, char), char)>,
    legacy_map: HashMap<char, char>,
    conjunct_whitelist: HashSet<Vec<char>>,
    assamese_map: HashMap<char, char>,
    /// Foreign codepoints referenced by name in normalization rules (e.g.
    /// U+200C in Bangla khanda-ta handling); standalone invalid-Unicode
    /// cleanup must not delete these.
    rule_referenced: HashSet<char>,
    /// cached per-class inventories, sorted
    vowels: Vec<char>,
    consonants: Vec<char>,
    vowel_diacritics: Vec<char>,
    consonant_diacritics: Vec<char>,
}

impl ScriptSpec {
    pub fn script_code(&self) -> &str {
        &self.script_code
    }

    pub fn connector(&self) -> char {
        self.connector
    }

    pub fn nukta(&self) -> Option<char> {
        self.nukta
    }

    /// Class of `cp` in this script; `Foreign` for anything unlisted.
    /// Total function: never fails.
    #[inline]
    pub fn classify(&self, cp: char) -> CodepointClass {
        self.classes
            .get(&cp)
            .copied()
            .unwrap_or(CodepointClass::Foreign)
    }

    #[inline]
    pub fn is_consonant(&self, cp: char) -> bool {
        self.classify(cp) == CodepointClass::Consonant
    }

    #[inline]
    pub fn is_vowel(&self, cp: char) -> bool {
        self.classify(cp) == CodepointClass::Vowel
    }

    pub fn nukta_composition(&self, base: char) -> Option<char> {
        self.nukta_compositions.get(&base).copied()
    }

    pub fn diacritic_composition(&self, first: char, second: char) -> Option<char> {
        self.diacritic_compositions.get(&(first, second)).copied()
    }

    /// Composition pairs in declaration order (used to invert the map).
    pub fn diacritic_compositions(&self) -> &[((char, char), char)] {
        &self.diacritic_composition_list
    }

    pub fn nukta_compositions(&self) -> &HashMap<char, char> {
        &self.nukta_compositions
    }

    /// Base consonant whose (base, nukta) pair composes to `composed`.
    pub fn nukta_decomposition(&self, composed: char) -> Option<char> {
        self.nukta_compositions
            .iter()
            .find(|&(_, &c)| c == composed)
            .map(|(&base, _)| base)
    }

    /// First declared vowel-diacritic pair composing to `composed`.
    pub fn diacritic_decomposition(&self, composed: char) -> Option<(char, char)> {
        self.diacritic_composition_list
            .iter()
            .find(|&&(_, c)| c == composed)
            .map(|&(pair, _)| pair)
    }

    pub fn legacy_replacement(&self, cp: char) -> Option<char> {
        self.legacy_map.get(&cp).copied()
    }

    pub fn assamese_replacement(&self, cp: char) -> Option<char> {
        self.assamese_map.get(&cp).copied()
    }

    pub fn has_conjunct_whitelist(&self) -> bool {
        !self.conjunct_whitelist.is_empty()
    }

    pub fn whitelisted(&self, consonants: &[char]) -> bool {
        self.conjunct_whitelist.contains(consonants)
    }

    pub fn is_rule_referenced(&self, cp: char) -> bool {
        self.rule_referenced.contains(&cp)
    }

    pub fn vowels(&self) -> &[char] {
        &self.vowels
    }

    pub fn consonants(&self) -> &[char] {
        &self.consonants
    }

    pub fn vowel_diacritics(&self) -> &[char] {
        &self.vowel_diacritics
    }

    pub fn consonant_diacritics(&self) -> &[char] {
        &self.consonant_diacritics
    }

    pub fn conjunct_whitelist(&self) -> &HashSet<Vec<char>> {
        &self.conjunct_whitelist
    }

    /// The script's 128-codepoint Unicode block, derived from the consonant
    /// inventory (consonants always live in the script's own block).
    pub fn block_range(&self) -> RangeInclusive<u32> {
        let base = self.consonants.first().map(|c| *c as u32).unwrap_or(0) & !0x7F;
        base..=base + 0x7F
    }

    /// Assembles a spec from already-parsed parts without validating.
    ///
    /// [`load_script_spec`] runs [`validate_spec`] on the result and refuses
    /// invalid specs; this constructor is public so tooling and tests can
    /// build deliberately broken specs.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        script_code: String,
        classes: HashMap<char, CodepointClass>,
        connector: char,
        nukta: Option<char>,
        nukta_compositions: HashMap<char, char>,
        diacritic_composition_list: Vec<((char, char), char)>,
        legacy_map: HashMap<char, char>,
        conjunct_whitelist: HashSet<Vec<char>>,
        assamese_map: HashMap<char, char>,
        rule_referenced: HashSet<char>,
    ) -> Self {
        let mut by_class: HashMap<CodepointClass, Vec<char>> = HashMap::new();
        for (&cp, &class) in &classes {
            by_class.entry(class).or_default().push(cp);
        }
        let mut sorted = |class: CodepointClass| -> Vec<char> {
            let mut v = by_class.remove(&class).unwrap_or_default();
            v.sort_unstable();
            v
        };
        let vowels = sorted(CodepointClass::Vowel);
        let consonants = sorted(CodepointClass::Consonant);
        let vowel_diacritics = sorted(CodepointClass::VowelDiacritic);
        let consonant_diacritics = sorted(CodepointClass::ConsonantDiacritic);
        let diacritic_compositions = diacritic_composition_list.iter().copied().collect();
        ScriptSpec {
            script_code,
            classes,
            connector,
            nukta,
            nukta_compositions,
            diacritic_compositions,
            diacritic_composition_list,
            legacy_map,
            conjunct_whitelist,
            assamese_map,
            rule_referenced,
            vowels,
            consonants,
            vowel_diacritics,
            consonant_diacritics,
        }
    }
}

/// Errors raised while loading a script configuration.
#[derive(Debug, Error)]
pub enum SpecError {
    /// The document does not match the schema (missing field, bad syntax,
    /// malformed codepoint literal).
    #[error("schema error: {0}")]
    Schema(String),
    /// A codepoint is listed under two classes.
    #[error("class conflict: U+{cp:04X} listed as both {first} and {second}", cp = *.cp as u32)]
    ClassConflict {
        cp: char,
        first: CodepointClass,
        second: CodepointClass,
    },
    /// The declared connector is absent from the class lists.
    #[error("unknown connector: U+{cp:04X} not present in classes", cp = *.cp as u32)]
    UnknownConnector { cp: char },
    /// The assembled spec violates structural invariants.
    #[error("invalid spec: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

/// One structural invariant violation, naming the codepoint and the rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// More than one codepoint carries class Connector.
    MultipleConnectors { extra: char },
    /// The declared connector's class is not Connector.
    ConnectorClassMismatch { cp: char, class: CodepointClass },
    /// The declared nukta's class is not Nukta.
    NuktaClassMismatch { cp: char, class: CodepointClass },
    /// A conjunct-whitelist entry contains a non-consonant codepoint.
    WhitelistNonConsonant { cp: char, class: CodepointClass },
    /// A conjunct-whitelist entry is shorter than 2 or longer than 4.
    WhitelistLength { len: usize },
    /// A diacritic-composition key or value is not a vowel diacritic.
    CompositionNotVowelDiacritic { cp: char, class: CodepointClass },
    /// A map codepoint is neither classified nor explicitly rule-referenced.
    UnclassifiedMapCodepoint { cp: char, map: &'static str },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MultipleConnectors { extra } => {
                write!(
                    f,
                    "U+{:04X}: more than one Connector-class codepoint",
                    *extra as u32
                )
            }
            Violation::ConnectorClassMismatch { cp, class } => {
                write!(
                    f,
                    "U+{:04X}: connector classed {class}, expected connector",
                    *cp as u32
                )
            }
            Violation::NuktaClassMismatch { cp, class } => {
                write!(
                    f,
                    "U+{:04X}: nukta classed {class}, expected nukta",
                    *cp as u32
                )
            }
            Violation::WhitelistNonConsonant { cp, class } => {
                write!(
                    f,
                    "U+{:04X}: whitelist entry contains {class} codepoint",
                    *cp as u32
                )
            }
            Violation::WhitelistLength { len } => {
                write!(f, "whitelist entry of length {len}, expected 2..=4")
            }
            Violation::CompositionNotVowelDiacritic { cp, class } => {
                write!(
                    f,
                    "U+{:04X}: diacritic composition references {class} codepoint",
                    *cp as u32
                )
            }
            Violation::UnclassifiedMapCodepoint { cp, map } => {
                write!(
                    f,
                    "U+{:04X}: {map} references unclassified codepoint",
                    *cp as u32
                )
            }
        }
    }
}

#[derive(Deserialize)]
struct RawSpec {
    script_code: String,
    classes: RawClasses,
    connector: String,
    /// empty string when the script has no nukta sign (ta, ml)
    nukta: String,
    nukta_compositions: BTreeMap<String, String>,
    diacritic_compositions: BTreeMap<String, String>,
    legacy_map: BTreeMap<String, String>,
    conjunct_whitelist: Vec<String>,
    assamese_map: BTreeMap<String, String>,
    #[serde(default)]
    rule_referenced: Vec<String>,
}

#[derive(Deserialize)]
struct RawClasses {
    vowel: Vec<String>,
    consonant: Vec<String>,
    vowel_diacritic: Vec<String>,
    consonant_diacritic: Vec<String>,
    connector: Vec<String>,
    nukta: Vec<String>,
    digit: Vec<String>,
    symbol: Vec<String>,
    legacy: Vec<String>,
}

/// Parses a codepoint literal: either `U+XXXX` hex notation or a single
/// literal character.
fn parse_codepoint(s: &str) -> Result<char, SpecError> {
    let s = s.trim();
    if let Some(hex) = s.strip_prefix("U+").or_else(|| s.strip_prefix("u+")) {
        let value = u32::from_str_radix(hex, 16)
            .map_err(|_| SpecError::Schema(format!("bad codepoint literal {s:?}")))?;
        return char::from_u32(value)
            .ok_or_else(|| SpecError::Schema(format!("{s:?} is not a Unicode scalar value")));
    }
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(SpecError::Schema(format!(
            "expected one codepoint (literal or U+XXXX), got {s:?}"
        ))),
    }
}

/// Parses a whitespace-separated codepoint sequence.
fn parse_codepoint_seq(s: &str) -> Result<Vec<char>, SpecError> {
    s.split_whitespace().map(parse_codepoint).collect()
}

/// Loads and validates a script configuration from its TOML source text.
///
/// The returned spec satisfies every structural invariant; see
/// [`validate_spec`] for the list.
pub fn load_script_spec(source: &str) -> Result<ScriptSpec, SpecError> {
    let raw: RawSpec = toml::from_str(source).map_err(|e| SpecError::Schema(e.to_string()))?;

    let mut classes: HashMap<char, CodepointClass> = HashMap::new();
    let mut insert_all = |list: &[String], class: CodepointClass| -> Result<(), SpecError> {
        for item in list {
            let cp = parse_codepoint(item)?;
            if let Some(&existing) = classes.get(&cp) {
                if existing != class {
                    return Err(SpecError::ClassConflict {
                        cp,
                        first: existing,
                        second: class,
                    });
                }
            }
            classes.insert(cp, class);
        }
        Ok(())
    };
    insert_all(&raw.classes.vowel, CodepointClass::Vowel)?;
    insert_all(&raw.classes.consonant, CodepointClass::Consonant)?;
    insert_all(&raw.classes.vowel_diacritic, CodepointClass::VowelDiacritic)?;
    insert_all(
        &raw.classes.consonant_diacritic,
        CodepointClass::ConsonantDiacritic,
    )?;
    insert_all(&raw.classes.connector, CodepointClass::Connector)?;
    insert_all(&raw.classes.nukta, CodepointClass::Nukta)?;
    insert_all(&raw.classes.digit, CodepointClass::Digit)?;
    insert_all(&raw.classes.symbol, CodepointClass::Symbol)?;
    insert_all(&raw.classes.legacy, CodepointClass::Legacy)?;

    let connector = parse_codepoint(&raw.connector)?;
    if !classes.contains_key(&connector) {
        return Err(SpecError::UnknownConnector { cp: connector });
    }
    let nukta = if raw.nukta.trim().is_empty() {
        None
    } else {
        Some(parse_codepoint(&raw.nukta)?)
    };

    let mut nukta_compositions = HashMap::new();
    for (base, composed) in &raw.nukta_compositions {
        nukta_compositions.insert(parse_codepoint(base)?, parse_codepoint(composed)?);
    }

    let mut diacritic_composition_list = Vec::new();
    for (pair, composed) in &raw.diacritic_compositions {
        let key = parse_codepoint_seq(pair)?;
        if key.len() != 2 {
            return Err(SpecError::Schema(format!(
                "diacritic composition key {pair:?} must name exactly two codepoints"
            )));
        }
        diacritic_composition_list.push(((key[0], key[1]), parse_codepoint(composed)?));
    }

    let mut legacy_map = HashMap::new();
    for (from, to) in &raw.legacy_map {
        legacy_map.insert(parse_codepoint(from)?, parse_codepoint(to)?);
    }

    let mut conjunct_whitelist = HashSet::new();
    for entry in &raw.conjunct_whitelist {
        conjunct_whitelist.insert(parse_codepoint_seq(entry)?);
    }

    let mut assamese_map = HashMap::new();
    for (from, to) in &raw.assamese_map {
        assamese_map.insert(parse_codepoint(from)?, parse_codepoint(to)?);
    }

    let mut rule_referenced = HashSet::new();
    for item in &raw.rule_referenced {
        rule_referenced.insert(parse_codepoint(item)?);
    }

    let spec = ScriptSpec::from_parts(
        raw.script_code,
        classes,
        connector,
        nukta,
        nukta_compositions,
        diacritic_composition_list,
        legacy_map,
        conjunct_whitelist,
        assamese_map,
        rule_referenced,
    );

    let violations = validate_spec(&spec);
    if violations.is_empty() {
        Ok(spec)
    } else {
        Err(SpecError::Invalid(violations))
    }
}

/// Checks every structural invariant of a spec; returns one violation per
/// breach, empty when the spec is sound.
pub fn validate_spec(spec: &ScriptSpec) -> Vec<Violation> {
    let mut violations = Vec::new();

    let mut connectors = spec
        .classes
        .iter()
        .filter(|(_, &class)| class == CodepointClass::Connector)
        .map(|(&cp, _)| cp)
        .collect::<Vec<_>>();
    connectors.sort_unstable();
    for &extra in connectors.iter().skip(1) {
        violations.push(Violation::MultipleConnectors { extra });
    }

    let connector_class = spec.classify(spec.connector);
    if connector_class != CodepointClass::Connector {
        violations.push(Violation::ConnectorClassMismatch {
            cp: spec.connector,
            class: connector_class,
        });
    }
    if let Some(nukta) = spec.nukta {
        let class = spec.classify(nukta);
        if class != CodepointClass::Nukta {
            violations.push(Violation::NuktaClassMismatch { cp: nukta, class });
        }
    }

    let mut whitelist: Vec<&Vec<char>> = spec.conjunct_whitelist.iter().collect();
    whitelist.sort_unstable();
    for entry in whitelist {
        if !(2..=4).contains(&entry.len()) {
            violations.push(Violation::WhitelistLength { len: entry.len() });
        }
        for &cp in entry {
            if spec.classify(cp) != CodepointClass::Consonant {
                violations.push(Violation::WhitelistNonConsonant {
                    cp,
                    class: spec.classify(cp),
                });
            }
        }
    }

    for &((first, second), composed) in &spec.diacritic_composition_list {
        for cp in [first, second, composed] {
            if spec.classify(cp) != CodepointClass::VowelDiacritic {
                violations.push(Violation::CompositionNotVowelDiacritic {
                    cp,
                    class: spec.classify(cp),
                });
            }
        }
    }

    let mut check_classified = |cp: char, map: &'static str| {
        if !spec.classes.contains_key(&cp) && !spec.rule_referenced.contains(&cp) {
            violations.push(Violation::UnclassifiedMapCodepoint { cp, map });
        }
    };
    let mut nukta_pairs: Vec<(char, char)> = spec
        .nukta_compositions
        .iter()
        .map(|(&b, &c)| (b, c))
        .collect();
    nukta_pairs.sort_unstable();
    for (base, composed) in nukta_pairs {
        check_classified(base, "nukta_compositions");
        check_classified(composed, "nukta_compositions");
    }
    let mut legacy_pairs: Vec<(char, char)> =
        spec.legacy_map.iter().map(|(&f, &t)| (f, t)).collect();
    legacy_pairs.sort_unstable();
    for (from, to) in legacy_pairs {
        check_classified(from, "legacy_map");
        check_classified(to, "legacy_map");
    }
    let mut assamese_pairs: Vec<(char, char)> =
        spec.assamese_map.iter().map(|(&f, &t)| (f, t)).collect();
    assamese_pairs.sort_unstable();
    for (from, to) in assamese_pairs {
        check_classified(from, "assamese_map");
        check_classified(to, "assamese_map");
    }

    violations
}

/// Script codes with bundled configuration files.
pub const BUNDLED_SCRIPTS: [&str; 7] = ["bn", "deva", "guru", "gu", "or", "ta", "ml"];

macro_rules! bundled_source {
    ($code:literal) => {
        ($code, include_str!(concat!("../data/", $code, ".toml")))
    };
}

const BUNDLED_SOURCES: [(&str, &str); 7] = [
    bundled_source!("bn"),
    bundled_source!("deva"),
    bundled_source!("guru"),
    bundled_source!("gu"),
    bundled_source!("or"),
    bundled_source!("ta"),
    bundled_source!("ml"),
];

/// Returns the bundled, validated spec for one of [`BUNDLED_SCRIPTS`].
pub fn bundled_spec(code: &str) -> Option<&'static ScriptSpec> {
    static SPECS: OnceLock<HashMap<&'static str, ScriptSpec>> = OnceLock::new();
    let specs = SPECS.get_or_init(|| {
        BUNDLED_SOURCES
            .iter()
            .map(|&(code, source)| {
                let spec = load_script_spec(source)
                    .unwrap_or_else(|e| panic!("bundled {code} spec invalid: {e}"));
                (code, spec)
            })
            .collect()
    });
    specs.get(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_specs_load_and_validate() {
        for code in BUNDLED_SCRIPTS {
            let spec = bundled_spec(code).expect("bundled spec");
            assert_eq!(spec.script_code(), code);
            assert_eq!(validate_spec(spec), Vec::new(), "{code} has violations");
        }
    }

    #[test]
    fn bundled_connectors_match_expected_codepoints() {
        let expected = [
            ("bn", 2509),
            ("deva", 2381),
            ("guru", 2637),
            ("gu", 2765),
            ("or", 2893),
            ("ta", 3021),
            ("ml", 3405),
        ];
        for (code, connector) in expected {
            let spec = bundled_spec(code).unwrap();
            assert_eq!(spec.connector() as u32, connector, "{code} connector");
        }
    }

    #[test]
    fn classify_is_total_and_partitions() {
        let spec = bundled_spec("bn").unwrap();
        assert_eq!(spec.classify('\u{09CD}'), CodepointClass::Connector);
        assert_eq!(spec.classify('A'), CodepointClass::Foreign);
        assert_eq!(spec.classify('\u{09BC}'), CodepointClass::Nukta);
        // every block codepoint gets exactly one class
        for cp in 0x0980..=0x09FF_u32 {
            if let Some(c) = char::from_u32(cp) {
                let _ = spec.classify(c);
            }
        }
    }

    #[test]
    fn class_conflict_is_rejected() {
        let source = r#"
script_code = "xx"
connector = "U+09CD"
nukta = "U+09BC"
nukta_compositions = {}
diacritic_compositions = {}
legacy_map = {}
conjunct_whitelist = []
assamese_map = {}

[classes]
vowel = ["U+0995"]
consonant = ["U+0995"]
vowel_diacritic = []
consonant_diacritic = []
connector = ["U+09CD"]
nukta = ["U+09BC"]
digit = []
symbol = []
legacy = []
"#;
        match load_script_spec(source) {
            Err(SpecError::ClassConflict { cp, .. }) => assert_eq!(cp, '\u{0995}'),
            other => panic!("expected ClassConflict, got {other:?}"),
        }
    }

    #[test]
    fn missing_field_is_schema_error() {
        let source = r#"script_code = "xx""#;
        assert!(matches!(
            load_script_spec(source),
            Err(SpecError::Schema(_))
        ));
    }

    #[test]
    fn connector_missing_from_classes_is_rejected() {
        let source = r#"
script_code = "xx"
connector = "U+09CD"
nukta = ""
nukta_compositions = {}
diacritic_compositions = {}
legacy_map = {}
conjunct_whitelist = []
assamese_map = {}

[classes]
vowel = []
consonant = ["U+0995"]
vowel_diacritic = []
consonant_diacritic = []
connector = []
nukta = []
digit = []
symbol = []
legacy = []
"#;
        assert!(matches!(
            load_script_spec(source),
            Err(SpecError::UnknownConnector { cp: '\u{09CD}' })
        ));
    }

    #[test]
    fn whitelist_non_consonant_is_reported() {
        let spec = bundled_spec("bn").unwrap();
        let mut broken = spec.clone();
        let mut whitelist = broken.conjunct_whitelist.clone();
        whitelist.insert(vec!['\u{0995}', '\u{09BE}']); // aa-sign is a vowel diacritic
        broken.conjunct_whitelist = whitelist;
        let violations = validate_spec(&broken);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::WhitelistNonConsonant { cp: '\u{09BE}', .. })));
    }

    #[test]
    fn two_connectors_are_reported() {
        let spec = bundled_spec("bn").unwrap();
        let mut broken = spec.clone();
        broken.classes.insert('\u{0964}', CodepointClass::Connector);
        let violations = validate_spec(&broken);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::MultipleConnectors { .. })));
    }

    #[test]
    fn hex_notation_roundtrip() {
        assert_eq!(parse_codepoint("U+09CD").unwrap(), '\u{09CD}');
        assert_eq!(parse_codepoint("ক").unwrap(), '\u{0995}');
        assert!(parse_codepoint("U+ZZZZ").is_err());
        assert!(parse_codepoint("dozen").is_err());
    }

    #[test]
    fn block_range_derived_from_consonants() {
        let spec = bundled_spec("bn").unwrap();
        assert_eq!(spec.block_range(), 0x0980..=0x09FF);
        let spec = bundled_spec("ml").unwrap();
        assert_eq!(spec.block_range(), 0x0D00..=0x0D7F);
    }
}
