//! Tokenization, sentence splitting, and the small linguistic detectors the
//! feature extractors rely on.
//!
//! Tokens are lowercased and split on non-alphanumeric boundaries, except
//! that dots joining two alphanumeric characters are kept so dotted
//! identifiers like `java.util.Iterator` survive as single tokens.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::corpus::{ApiName, Fragment};

const STOPWORDS: &str = include_str!("../resources/stopwords.txt");
const VERBS: &str = include_str!("../resources/verbs.txt");

/// Words that keep a trailing period from ending a sentence.
const ABBREVIATIONS: &[&str] = &["e.g", "i.e", "etc", "vs", "cf", "fig", "al"];

/// Tokenized text: a flat lowercase token list plus sentence boundaries.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TextBlock {
    pub raw: String,
    tokens: Vec<String>,
    /// End index (exclusive) of each sentence within `tokens`.
    sentence_ends: Vec<usize>,
}

impl TextBlock {
    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn sentences(&self) -> impl Iterator<Item = &[String]> {
        let mut start = 0;
        self.sentence_ends.iter().map(move |&end| {
            let s = &self.tokens[start..end];
            start = end;
            s
        })
    }

    pub fn sentence_count(&self) -> usize {
        self.sentence_ends.len()
    }

    /// Builds a block from pre-tokenized sentences. Tokens are taken as-is.
    pub fn from_sentences(sentences: Vec<Vec<String>>) -> Self {
        let mut tokens = Vec::new();
        let mut sentence_ends = Vec::new();
        for sent in sentences {
            tokens.extend(sent);
            if *sentence_ends.last().unwrap_or(&0) < tokens.len() {
                sentence_ends.push(tokens.len());
            }
        }
        TextBlock {
            raw: String::new(),
            tokens,
            sentence_ends,
        }
    }

    /// Concatenates two blocks, keeping sentence boundaries from both.
    pub fn concat(&self, other: &TextBlock) -> TextBlock {
        let mut tokens = self.tokens.clone();
        let mut sentence_ends = self.sentence_ends.clone();
        let offset = tokens.len();
        tokens.extend(other.tokens.iter().cloned());
        sentence_ends.extend(other.sentence_ends.iter().map(|e| e + offset));
        TextBlock {
            raw: format!("{} {}", self.raw, other.raw),
            tokens,
            sentence_ends,
        }
    }
}

/// Stopword list and stemming switch for term normalization.
///
/// The list is fixed per experiment run and hashed into reports.
#[derive(Debug, Clone)]
pub struct NormalizationConfig {
    pub stopwords: HashSet<String>,
    pub stemming_enabled: bool,
}

impl Default for NormalizationConfig {
    fn default() -> Self {
        NormalizationConfig {
            stopwords: STOPWORDS.lines().map(|w| w.trim().to_string()).collect(),
            stemming_enabled: true,
        }
    }
}

impl NormalizationConfig {
    /// The embedded stopword list, verbatim, for hashing into run metadata.
    pub fn stopword_source() -> &'static str {
        STOPWORDS
    }

    pub fn verb_source() -> &'static str {
        VERBS
    }

    pub fn is_stopword(&self, token: &str) -> bool {
        self.stopwords.contains(token)
    }

    /// Stopword removal plus (optionally) light suffix stemming.
    ///
    /// Dotted identifiers are never stemmed so API tokens match exactly.
    pub fn normalize_terms<'a, I>(&self, tokens: I) -> Vec<String>
    where
        I: IntoIterator<Item = &'a String>,
    {
        tokens
            .into_iter()
            .filter(|t| !self.is_stopword(t))
            .map(|t| {
                if self.stemming_enabled && !t.contains('.') {
                    light_stem(t)
                } else {
                    t.clone()
                }
            })
            .collect()
    }
}

/// Strips one of `ing`/`ed`/`es`/`s` when enough of a stem remains.
pub fn light_stem(token: &str) -> String {
    for suffix in ["ing", "ed", "es", "s"] {
        if token.len() > suffix.len() + 2 && token.ends_with(suffix) {
            return token[..token.len() - suffix.len()].to_string();
        }
    }
    token.to_string()
}

/// Splits `text` into lowercase tokens and sentences.
///
/// Sentences end at `.`, `!` or `?` followed by whitespace (or end of input),
/// unless the preceding token is a known abbreviation.
pub fn tokenize(text: &str) -> TextBlock {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens: Vec<String> = Vec::new();
    let mut sentence_ends: Vec<usize> = Vec::new();
    let mut current = String::new();
    let mut sentence_start = 0usize;

    let mut flush = |current: &mut String, tokens: &mut Vec<String>| {
        if !current.is_empty() {
            tokens.push(current.to_lowercase());
            current.clear();
        }
    };

    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_alphanumeric() {
            current.push(c);
        } else if c == '.' {
            let prev_alnum = chars.get(i.wrapping_sub(1)).is_some_and(|p| p.is_alphanumeric());
            let next_alnum = chars.get(i + 1).is_some_and(|n| n.is_alphanumeric());
            if prev_alnum && next_alnum && !current.is_empty() {
                // internal dot of an identifier
                current.push('.');
            } else {
                flush(&mut current, &mut tokens);
                let next_ws = chars.get(i + 1).is_none_or(|n| n.is_whitespace());
                let guarded = tokens
                    .last()
                    .is_some_and(|t| ABBREVIATIONS.contains(&t.as_str()));
                if next_ws && !guarded && tokens.len() > sentence_start {
                    sentence_ends.push(tokens.len());
                    sentence_start = tokens.len();
                }
            }
        } else if c == '!' || c == '?' {
            flush(&mut current, &mut tokens);
            let next_ws = chars.get(i + 1).is_none_or(|n| n.is_whitespace());
            if next_ws && tokens.len() > sentence_start {
                sentence_ends.push(tokens.len());
                sentence_start = tokens.len();
            }
        } else {
            flush(&mut current, &mut tokens);
        }
        i += 1;
    }
    flush(&mut current, &mut tokens);
    if tokens.len() > sentence_start {
        sentence_ends.push(tokens.len());
    }

    TextBlock {
        raw: text.to_string(),
        tokens,
        sentence_ends,
    }
}

/// Splits a CamelCase identifier into lowercase component words.
///
/// Boundaries sit at lower-to-upper transitions and letter/digit
/// transitions; an uppercase run ends before its last letter when a
/// lowercase letter follows, so `HTTPServer` gives `http`, `server`.
pub fn split_camel_case(identifier: &str) -> Vec<String> {
    #[derive(PartialEq, Clone, Copy)]
    enum Kind {
        Upper,
        Lower,
        Digit,
        Other,
    }
    fn kind(c: char) -> Kind {
        if c.is_uppercase() {
            Kind::Upper
        } else if c.is_lowercase() {
            Kind::Lower
        } else if c.is_numeric() {
            Kind::Digit
        } else {
            Kind::Other
        }
    }

    let chars: Vec<char> = identifier.chars().collect();
    let mut words: Vec<String> = Vec::new();
    let mut current = String::new();
    for i in 0..chars.len() {
        let c = chars[i];
        let k = kind(c);
        if k == Kind::Other {
            if !current.is_empty() {
                words.push(current.to_lowercase());
                current.clear();
            }
            continue;
        }
        if !current.is_empty() {
            let prev = kind(*current.chars().next_back().as_ref().unwrap());
            let boundary = match (prev, k) {
                (Kind::Lower, Kind::Upper) => true,
                (Kind::Digit, Kind::Upper) | (Kind::Digit, Kind::Lower) => true,
                (Kind::Upper, Kind::Digit) | (Kind::Lower, Kind::Digit) => true,
                // acronym run ends when the next char starts a lowercase word
                (Kind::Upper, Kind::Upper) => {
                    chars.get(i + 1).is_some_and(|n| kind(*n) == Kind::Lower)
                }
                _ => false,
            };
            if boundary {
                words.push(current.to_lowercase());
                current.clear();
            }
        }
        current.push(c);
    }
    if !current.is_empty() {
        words.push(current.to_lowercase());
    }
    words
}

/// True when the sentence carries one of the example/condition cues.
pub fn is_condition_sentence(sentence: &[String]) -> bool {
    const CUES: &[&[&str]] = &[
        &["for", "example"],
        &["such", "as"],
        &["for", "instance"],
        &["e.g"],
        &["like", "the", "following"],
    ];
    CUES.iter().any(|cue| contains_phrase(sentence, cue))
}

fn contains_phrase(tokens: &[String], phrase: &[&str]) -> bool {
    if phrase.len() > tokens.len() {
        return false;
    }
    tokens
        .windows(phrase.len())
        .any(|w| w.iter().zip(phrase).all(|(t, p)| t == p))
}

fn verb_lexicon() -> &'static HashSet<&'static str> {
    use std::sync::OnceLock;
    static LEXICON: OnceLock<HashSet<&'static str>> = OnceLock::new();
    LEXICON.get_or_init(|| VERBS.lines().map(str::trim).filter(|w| !w.is_empty()).collect())
}

/// Heuristic subject test: the API is mentioned before the first verb.
///
/// Stands in for a dependency parse; verbs come from a fixed lexicon of
/// common documentation verbs. A sentence without any lexicon verb never
/// matches.
pub fn subject_mentions(sentence: &[String], api: &ApiName) -> bool {
    let verbs = verb_lexicon();
    let verb_idx = sentence.iter().position(|t| verbs.contains(t.as_str()));
    let mention_idx = sentence
        .iter()
        .position(|t| api.matches_token(t));
    match (mention_idx, verb_idx) {
        (Some(m), Some(v)) => m < v,
        _ => false,
    }
}

/// The fragment's ten most frequent non-stopword prose tokens.
///
/// Frequencies are counted over title and paragraph text; ties break
/// alphabetically. Fewer than ten distinct tokens returns all of them.
pub fn clue_words(fragment: &Fragment, config: &NormalizationConfig) -> BTreeSet<String> {
    let mut counts: HashMap<String, usize> = HashMap::new();
    let title = tokenize(&fragment.title);
    for tok in title.tokens() {
        if !config.is_stopword(tok) {
            *counts.entry(tok.clone()).or_insert(0) += 1;
        }
    }
    for para in &fragment.paragraphs {
        for tok in tokenize(para).tokens() {
            if !config.is_stopword(tok) {
                *counts.entry(tok.clone()).or_insert(0) += 1;
            }
        }
    }
    let mut ranked: Vec<(String, usize)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    ranked.into_iter().take(10).map(|(w, _)| w).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_empty() {
        let block = tokenize("");
        assert_eq!(block.tokens().len(), 0);
        assert_eq!(block.sentence_count(), 0);
    }

    #[test]
    fn tokenize_keeps_dotted_identifier() {
        // Hand tokenization: ["use","java.util.iterator"] + ["it","iterates"]
        let block = tokenize("Use java.util.Iterator. It iterates.");
        assert_eq!(block.sentence_count(), 2);
        let sentences: Vec<&[String]> = block.sentences().collect();
        assert_eq!(sentences[0], &["use".to_string(), "java.util.iterator".to_string()][..]);
        assert_eq!(sentences[1], &["it".to_string(), "iterates".to_string()][..]);
    }

    #[test]
    fn tokenize_abbreviation_guard() {
        let block = tokenize("e.g. lists");
        assert_eq!(block.sentence_count(), 1);
        assert_eq!(block.tokens(), &["e.g".to_string(), "lists".to_string()][..]);
    }

    #[test]
    fn tokenize_splits_punctuation() {
        let block = tokenize("What? Yes! Done.");
        assert_eq!(block.sentence_count(), 3);
        assert_eq!(block.tokens().len(), 3);
    }

    #[test]
    fn tokenize_version_number_stays_single_sentence() {
        // dots between digits are internal, not sentence ends
        let block = tokenize("version 1.2.3 works");
        assert_eq!(block.sentence_count(), 1);
        assert!(block.tokens().contains(&"1.2.3".to_string()));
    }

    #[test]
    fn camel_case_single_word() {
        assert_eq!(split_camel_case("Iterator"), vec!["iterator"]);
    }

    #[test]
    fn camel_case_two_words() {
        assert_eq!(split_camel_case("JodaTime"), vec!["joda", "time"]);
    }

    #[test]
    fn camel_case_acronym_run() {
        // hand application of the acronym rule
        assert_eq!(split_camel_case("HTTPServer"), vec!["http", "server"]);
    }

    #[test]
    fn camel_case_digits() {
        assert_eq!(split_camel_case("Utf8Decoder"), vec!["utf", "8", "decoder"]);
    }

    #[test]
    fn camel_case_concat_is_lowercased_identifier() {
        for ident in ["Iterator", "JodaTime", "HTTPServer", "SimpleDateFormat", "Vec3d"] {
            let joined: String = split_camel_case(ident).concat();
            assert_eq!(joined, ident.to_lowercase());
        }
    }

    fn toks(s: &str) -> Vec<String> {
        tokenize(s).tokens().to_vec()
    }

    #[test]
    fn condition_sentence_cues() {
        assert!(is_condition_sentence(&toks("APIs such as Iterator exist")));
        assert!(is_condition_sentence(&toks("for instance, use View")));
        assert!(is_condition_sentence(&toks("e.g. this one")));
        assert!(!is_condition_sentence(&toks("Iterator traverses collections")));
    }

    #[test]
    fn subject_before_verb() {
        let api = ApiName::parse("java.util.Iterator").unwrap();
        assert!(subject_mentions(&toks("Iterator provides traversal"), &api));
        assert!(!subject_mentions(&toks("You can use Iterator"), &api));
        assert!(!subject_mentions(&toks("nothing relevant here"), &api));
        // no lexicon verb at all -> no subject position to speak of
        assert!(!subject_mentions(&toks("Iterator overview"), &api));
    }

    #[test]
    fn clue_words_frequency_and_ties() {
        let fragment = Fragment {
            id: "f1".into(),
            title: "widgets".into(),
            heading_level: 2,
            paragraphs: vec![
                "widgets render render render panels panels".into(),
                "buttons panels alpha beta".into(),
            ],
            code_blocks: vec![],
            word_count: 0,
        };
        let config = NormalizationConfig::default();
        let words = clue_words(&fragment, &config);
        // render x3, panels x3, widgets x2, then alpha/beta/buttons x1
        assert!(words.contains("render"));
        assert!(words.contains("panels"));
        assert!(words.contains("widgets"));
        assert_eq!(words.len(), 6);
    }

    #[test]
    fn clue_words_only_stopwords() {
        let fragment = Fragment {
            id: "f1".into(),
            title: String::new(),
            heading_level: 1,
            paragraphs: vec!["the of and is".into()],
            code_blocks: vec![],
            word_count: 0,
        };
        let config = NormalizationConfig::default();
        assert!(clue_words(&fragment, &config).is_empty());
    }

    #[test]
    fn clue_words_caps_at_ten() {
        let paragraphs = vec![(0..25).map(|i| format!("word{i}")).collect::<Vec<_>>().join(" ")];
        let fragment = Fragment {
            id: "f1".into(),
            title: String::new(),
            heading_level: 1,
            paragraphs,
            code_blocks: vec![],
            word_count: 0,
        };
        let words = clue_words(&fragment, &NormalizationConfig::default());
        assert_eq!(words.len(), 10);
        // all tied at one occurrence: alphabetically first ten win
        assert!(words.contains("word0"));
        assert!(!words.contains("word9")); // word9 sorts after word10..word19
    }

    #[test]
    fn light_stem_examples() {
        assert_eq!(light_stem("classes"), "class");
        assert_eq!(light_stem("lists"), "list");
        assert_eq!(light_stem("indexed"), "index");
        assert_eq!(light_stem("rendering"), "render");
        assert_eq!(light_stem("is"), "is");
        assert_eq!(light_stem("uses"), "use");
    }
}
