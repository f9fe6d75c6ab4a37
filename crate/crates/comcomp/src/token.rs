//! Word/punctuation tokenization shared by every stage of the pipeline.
//!
//! The same deterministic rule is applied to method code and to comment
//! text so that model training, prediction exchange and metrics all agree
//! on token boundaries: sentinel tokens are preserved whole, maximal runs
//! of ASCII letters and digits form word tokens, and every other
//! non-whitespace character becomes a single punctuation token.

use serde::{Deserialize, Serialize};

/// Separator between context and comment in serialized instances.
pub const SEP: &str = "<sep>";
/// Replacement for URLs found in comments.
pub const LINK: &str = "_LINK_";
/// Replacement for dates found in comments.
pub const NUM: &str = "_NUM_";
/// Replacement for `{@link ...}` references in Javadoc comments.
pub const REF: &str = "_REF_";
/// Start-of-sequence padding used by the n-gram model.
pub const START: &str = "<s>";

const FIXED_SENTINELS: [&str; 5] = [SEP, LINK, NUM, REF, START];

/// Sentinel used by pre-training instances to mark the `i`-th masked slot.
pub fn mask_sentinel(index: usize) -> String {
    format!("<mask_{index}>")
}

fn is_mask_sentinel(text: &str) -> bool {
    text.strip_prefix("<mask_")
        .and_then(|rest| rest.strip_suffix('>'))
        .is_some_and(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
}

/// True if `text` belongs to the fixed sentinel vocabulary.
pub fn is_sentinel(text: &str) -> bool {
    FIXED_SENTINELS.contains(&text) || is_mask_sentinel(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Word,
    Punctuation,
    Sentinel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
}

impl Token {
    pub fn new(text: impl Into<String>) -> Self {
        let text = text.into();
        let kind = classify(&text);
        Token { text, kind }
    }
}

/// Kind of an already-formed token text.
pub fn classify(text: &str) -> TokenKind {
    if is_sentinel(text) {
        TokenKind::Sentinel
    } else if text.chars().all(|c| c.is_ascii_alphanumeric()) {
        TokenKind::Word
    } else {
        TokenKind::Punctuation
    }
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric()
}

/// Try to match a sentinel starting at byte offset `pos`.
fn sentinel_at(text: &str, pos: usize) -> Option<usize> {
    let rest = &text[pos..];
    for s in FIXED_SENTINELS {
        if rest.starts_with(s) {
            return Some(s.len());
        }
    }
    if rest.starts_with("<mask_") {
        if let Some(end) = rest.find('>') {
            if is_mask_sentinel(&rest[..=end]) {
                return Some(end + 1);
            }
        }
    }
    None
}

/// Split `text` into tokens. Whitespace-only input yields an empty list.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = text[pos..].chars().next().unwrap();
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        if let Some(len) = sentinel_at(text, pos) {
            tokens.push(Token {
                text: text[pos..pos + len].to_string(),
                kind: TokenKind::Sentinel,
            });
            pos += len;
            continue;
        }
        if is_word_char(c) {
            let start = pos;
            while pos < bytes.len() {
                let c = text[pos..].chars().next().unwrap();
                if !is_word_char(c) {
                    break;
                }
                pos += c.len_utf8();
            }
            tokens.push(Token {
                text: text[start..pos].to_string(),
                kind: TokenKind::Word,
            });
            continue;
        }
        tokens.push(Token {
            text: c.to_string(),
            kind: TokenKind::Punctuation,
        });
        pos += c.len_utf8();
    }
    tokens
}

/// Tokenize and keep only the token texts.
pub fn tokenize_texts(text: &str) -> Vec<String> {
    tokenize(text).into_iter().map(|t| t.text).collect()
}

/// Number of word-kind tokens in `text`.
pub fn word_token_count(text: &str) -> usize {
    tokenize(text)
        .iter()
        .filter(|t| t.kind == TokenKind::Word)
        .count()
}
