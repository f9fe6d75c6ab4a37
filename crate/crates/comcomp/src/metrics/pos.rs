//! Lexicon-plus-suffix part-of-speech tagger over the 12-category
//! universal tagset. Sentinels and code-ish identifiers map to X.

use serde::{Deserialize, Serialize};

use crate::token::{classify, TokenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PosTag {
    Noun,
    Verb,
    Adj,
    Adv,
    Pron,
    Det,
    Adp,
    Num,
    Conj,
    Prt,
    Punct,
    X,
}

impl PosTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            PosTag::Noun => "NOUN",
            PosTag::Verb => "VERB",
            PosTag::Adj => "ADJ",
            PosTag::Adv => "ADV",
            PosTag::Pron => "PRON",
            PosTag::Det => "DET",
            PosTag::Adp => "ADP",
            PosTag::Num => "NUM",
            PosTag::Conj => "CONJ",
            PosTag::Prt => "PRT",
            PosTag::Punct => "PUNCT",
            PosTag::X => "X",
        }
    }
}

const DETERMINERS: &[&str] = &[
    "the", "a", "an", "this", "that", "these", "those", "each", "every", "either", "neither",
    "some", "any", "all", "both", "no", "another", "such",
];

const PRONOUNS: &[&str] = &[
    "it", "he", "she", "they", "we", "you", "i", "them", "him", "her", "us", "me", "its", "his",
    "their", "our", "your", "my", "itself", "himself", "herself", "themselves", "who", "which",
    "what", "whose", "something", "nothing", "anything", "everything", "one",
];

const ADPOSITIONS: &[&str] = &[
    "of", "in", "on", "at", "by", "for", "with", "from", "into", "onto", "over", "under",
    "between", "through", "during", "against", "about", "within", "without", "after", "before",
    "above", "below", "across", "via", "per", "upon", "until", "among", "inside", "outside",
];

const CONJUNCTIONS: &[&str] = &[
    "and", "or", "but", "nor", "so", "yet", "if", "because", "while", "although", "unless",
    "since", "whether", "than", "when", "where", "as", "once", "though",
];

const PARTICLES: &[&str] = &["not", "to", "up", "out", "off", "down", "away"];

const NUMBER_WORDS: &[&str] = &[
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
    "hundred", "thousand", "million",
];

const VERBS: &[&str] = &[
    "be", "is", "are", "was", "were", "been", "being", "am", "has", "have", "had", "do", "does",
    "did", "can", "may", "must", "should", "will", "shall", "might", "could", "would", "return",
    "get", "set", "create", "check", "compute", "add", "remove", "throw", "use", "call",
    "determine", "indicate", "contain", "specify", "perform", "initialize", "update", "find",
    "build", "parse", "convert", "validate", "load", "save", "write", "read", "sort", "insert",
    "delete", "append", "close", "open", "run", "start", "stop", "send", "receive", "handle",
    "process", "apply", "make", "take", "give", "hold", "store", "fetch", "copy", "clear",
    "reset", "ensure", "verify", "test", "represent", "describe", "denote", "provide", "accept",
    "reject", "produce", "generate", "yield", "map", "filter", "reduce", "merge", "split",
    "join", "replace", "mark", "see", "note",
];

const ADJECTIVES: &[&str] = &[
    "new", "empty", "valid", "invalid", "current", "given", "specified", "default", "maximum",
    "minimum", "last", "next", "previous", "same", "different", "available", "first", "final",
    "static", "null", "true", "false", "good", "bad", "safe", "unsafe", "full", "partial",
    "internal", "external", "public", "private", "raw", "whole", "single", "multiple", "lower",
    "upper", "high", "low", "big", "small", "large", "short", "long", "old", "total", "extra",
];

const ADVERBS: &[&str] = &[
    "never", "always", "only", "also", "very", "too", "more", "most", "then", "here", "there",
    "now", "otherwise", "instead", "again", "already", "still", "just", "often", "sometimes",
    "first", "twice", "once", "soon", "later", "back", "forward", "yet",
];

// NB: a few words appear in more than one list; lookup order below
// decides (closed classes win, matching the universal tagset's mapping
// for the dominant sense in comment text).

fn is_identifierish(word: &str) -> bool {
    let has_digit = word.bytes().any(|b| b.is_ascii_digit());
    let has_alpha = word.bytes().any(|b| b.is_ascii_alphabetic());
    if has_digit && has_alpha {
        return true;
    }
    // camelCase / mixedCase beyond a leading capital
    word.chars().skip(1).any(|c| c.is_ascii_uppercase())
}

fn tag_word(word: &str) -> PosTag {
    if word.bytes().all(|b| b.is_ascii_digit()) {
        return PosTag::Num;
    }
    if is_identifierish(word) {
        return PosTag::X;
    }
    let lower = word.to_ascii_lowercase();
    let w = lower.as_str();
    if DETERMINERS.contains(&w) {
        return PosTag::Det;
    }
    if PRONOUNS.contains(&w) {
        return PosTag::Pron;
    }
    if ADPOSITIONS.contains(&w) {
        return PosTag::Adp;
    }
    if CONJUNCTIONS.contains(&w) {
        return PosTag::Conj;
    }
    if PARTICLES.contains(&w) {
        return PosTag::Prt;
    }
    if NUMBER_WORDS.contains(&w) {
        return PosTag::Num;
    }
    if VERBS.contains(&w) {
        return PosTag::Verb;
    }
    if w.len() > 2 && w.ends_with('s') && VERBS.contains(&&w[..w.len() - 1]) {
        return PosTag::Verb;
    }
    if ADVERBS.contains(&w) {
        return PosTag::Adv;
    }
    if ADJECTIVES.contains(&w) {
        return PosTag::Adj;
    }
    if w.len() > 3 && w.ends_with("ly") {
        return PosTag::Adv;
    }
    if w.len() > 4 && (w.ends_with("ing") || w.ends_with("ed")) {
        return PosTag::Verb;
    }
    for suffix in ["ous", "ful", "less", "able", "ible", "ive"] {
        if w.len() > suffix.len() + 2 && w.ends_with(suffix) {
            return PosTag::Adj;
        }
    }
    PosTag::Noun
}

/// Tag each token with one of the 12 universal categories.
pub fn pos_tag(tokens: &[String]) -> Vec<PosTag> {
    tokens
        .iter()
        .map(|t| match classify(t) {
            TokenKind::Sentinel => PosTag::X,
            TokenKind::Punctuation => PosTag::Punct,
            TokenKind::Word => tag_word(t),
        })
        .collect()
}

/// Reporting category: ADJ, ADV, DET, PRN, NOUN, VERB individually;
/// adposition, number, conjunction, particle, X and punctuation fold
/// into OTH.
pub fn report_category(tag: PosTag) -> &'static str {
    match tag {
        PosTag::Adj => "ADJ",
        PosTag::Adv => "ADV",
        PosTag::Det => "DET",
        PosTag::Pron => "PRN",
        PosTag::Noun => "NOUN",
        PosTag::Verb => "VERB",
        _ => "OTH",
    }
}
