//! Filtering and normalization pipeline producing the cleaned study
//! corpus, with a per-filter attrition report.
//!
//! Filter order is fixed: token budget, ASCII/length, SATD,
//! commented-code, normalization, orphan removal, inline merging, dedupe.

use std::collections::HashSet;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::corpus::{merge_adjacent_inline_comments, MethodInstance};
use crate::token::{self, TokenKind, LINK, NUM, REF};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreprocessConfig {
    pub token_budget: usize,
    pub satd_filter: bool,
    pub commented_code_filter: bool,
    pub normalize: bool,
    pub orphan_filter: bool,
    pub merge_inline: bool,
    pub dedupe: bool,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            token_budget: 256,
            satd_filter: true,
            commented_code_filter: true,
            normalize: true,
            orphan_filter: true,
            merge_inline: true,
            dedupe: true,
        }
    }
}

/// Attrition counters. Instance-level counters reconcile with the
/// input/output totals; orphan and merge counters are comment-level.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterReport {
    pub input: usize,
    pub removed_token_budget: usize,
    pub removed_non_ascii: usize,
    pub removed_short_comment: usize,
    pub removed_satd: usize,
    pub removed_commented_code: usize,
    pub removed_orphan_comments: usize,
    pub merged_inline_comments: usize,
    pub removed_duplicate: usize,
    pub output: usize,
}

impl FilterReport {
    /// input = output + sum of instance-level removals.
    pub fn reconciles(&self) -> bool {
        self.input
            == self.output
                + self.removed_token_budget
                + self.removed_non_ascii
                + self.removed_short_comment
                + self.removed_satd
                + self.removed_commented_code
                + self.removed_duplicate
    }
}

/// Keep iff tokens(methodCode) + tokens(all comments) < limit.
pub fn token_budget_keep(instance: &MethodInstance, limit: usize) -> bool {
    let mut total = token::tokenize(&instance.method_code).len();
    for text in instance.comment_texts() {
        total += token::tokenize(text).len();
    }
    total < limit
}

fn has_non_ascii(instance: &MethodInstance) -> bool {
    let field_bad = |s: &str| !s.is_ascii();
    field_bad(&instance.method_code)
        || instance.javadoc.as_deref().is_some_and(field_bad)
        || instance.inner_comments.iter().any(|c| field_bad(&c.text))
}

/// Keep iff the comment has at least three word tokens.
pub fn comment_length_keep(comment: &str) -> bool {
    token::word_token_count(comment) >= 3
}

const SATD_MARKERS: [&str; 3] = ["TODO", "TOFIX", "FIXME"];

/// Drop iff the first word token, uppercased, is a SATD marker.
pub fn satd_keep(comment: &str) -> bool {
    let first_word = token::tokenize(comment)
        .into_iter()
        .find(|t| t.kind == TokenKind::Word);
    match first_word {
        Some(t) => !SATD_MARKERS.contains(&t.text.to_ascii_uppercase().as_str()),
        None => true,
    }
}

const CODE_KEYWORDS: [&str; 26] = [
    "if", "for", "while", "return", "int", "long", "double", "float", "boolean", "char", "byte",
    "short", "void", "new", "this", "try", "catch", "switch", "case", "break", "continue",
    "throw", "import", "package", "else", "do",
];

static RE_TIGHT_ASSIGN: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"\S=\S").expect("static regex"));

/// Keep iff the comment does not look like a commented-out code statement.
pub fn commented_code_keep(comment: &str) -> bool {
    let trimmed = comment.trim();
    if trimmed.is_empty() {
        return true;
    }
    if trimmed.ends_with(';') || trimmed.ends_with('{') || trimmed.ends_with('}') {
        return false;
    }
    for kw in CODE_KEYWORDS {
        if let Some(rest) = trimmed.strip_prefix(kw) {
            if rest
                .chars()
                .next()
                .is_some_and(|c| !c.is_ascii_alphanumeric())
            {
                return false;
            }
        }
    }
    if RE_TIGHT_ASSIGN.is_match(trimmed) && trimmed.ends_with(';') {
        return false;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommentKind {
    Javadoc,
    Inner,
}

static RE_JAVADOC_LINK: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"\{@link[^{}]*\}").expect("static regex"));
static RE_HTML_TAG: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"</?[A-Za-z][A-Za-z0-9]*(?:\s[^<>]*)?/?>").expect("static regex"));
static RE_URL: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"(?:https?|ftp)://\S+|\bwww\.\S+").expect("static regex"));
static RE_DATE: LazyLock<Regex> = LazyLock::new(|| {
    Regex::new(
        r"(?x)
        \b\d{4}-\d{2}-\d{2}\b
        | \b\d{1,4}/\d{1,2}/\d{1,4}\b
        | \b(?:January|February|March|April|May|June|July|August|September|October|November
            |December|Jan|Feb|Mar|Apr|Jun|Jul|Aug|Sept?|Oct|Nov|Dec)\.?\s+\d{1,2}\s*,\s*\d{4}\b",
    )
    .expect("static regex")
});
static RE_SPACE: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"\s+").expect("static regex"));

/// URLs to `_LINK_`, dates to `_NUM_`, Javadoc `{@link X}` to `_REF_`,
/// HTML/XML tags removed, whitespace collapsed.
pub fn normalize_comment(comment: &str, kind: CommentKind) -> String {
    let mut text = comment.to_string();
    if kind == CommentKind::Javadoc {
        text = RE_JAVADOC_LINK.replace_all(&text, REF).into_owned();
    }
    text = RE_HTML_TAG.replace_all(&text, " ").into_owned();
    text = RE_URL.replace_all(&text, LINK).into_owned();
    text = RE_DATE.replace_all(&text, NUM).into_owned();
    RE_SPACE.replace_all(&text, " ").trim().to_string()
}

fn line_is_blank(lines: &[&str], line_no: usize) -> bool {
    match line_no.checked_sub(1).and_then(|i| lines.get(i)) {
        Some(l) => l.trim().is_empty(),
        None => false, // outside the method: treated as non-blank
    }
}

/// Remove inner comments whose preceding and following lines are both
/// blank. Returns the number of comments removed.
pub fn orphan_prune(instance: &mut MethodInstance) -> usize {
    let lines: Vec<&str> = instance.method_code.lines().collect();
    let before = instance.inner_comments.len();
    instance.inner_comments.retain(|c| {
        let above_blank = c.start_line > 1 && line_is_blank(&lines, c.start_line - 1);
        let below_blank = line_is_blank(&lines, c.end_line + 1);
        !(above_blank && below_blank)
    });
    before - instance.inner_comments.len()
}

fn dedupe_key(instance: &MethodInstance) -> String {
    let mut key = instance.method_code.clone();
    key.push('\u{0}');
    if let Some(jd) = &instance.javadoc {
        key.push_str("J:");
        key.push_str(jd);
    }
    for c in &instance.inner_comments {
        key.push('\u{0}');
        key.push_str("I:");
        key.push_str(&c.text);
    }
    key
}

/// Run the full pipeline in its fixed order.
pub fn run_pipeline(
    corpus: Vec<MethodInstance>,
    config: &PreprocessConfig,
) -> (Vec<MethodInstance>, FilterReport) {
    let mut report = FilterReport {
        input: corpus.len(),
        ..FilterReport::default()
    };
    let mut out: Vec<MethodInstance> = Vec::new();

    for mut inst in corpus {
        if !token_budget_keep(&inst, config.token_budget) {
            report.removed_token_budget += 1;
            continue;
        }
        if has_non_ascii(&inst) {
            report.removed_non_ascii += 1;
            continue;
        }
        if inst.javadoc.as_deref().is_some_and(|jd| !comment_length_keep(jd)) {
            inst.javadoc = None;
        }
        inst.inner_comments.retain(|c| comment_length_keep(&c.text));
        if !inst.has_comments() {
            report.removed_short_comment += 1;
            continue;
        }
        if config.satd_filter {
            if inst.javadoc.as_deref().is_some_and(|jd| !satd_keep(jd)) {
                inst.javadoc = None;
            }
            inst.inner_comments.retain(|c| satd_keep(&c.text));
            if !inst.has_comments() {
                report.removed_satd += 1;
                continue;
            }
        }
        if config.commented_code_filter {
            if inst
                .javadoc
                .as_deref()
                .is_some_and(|jd| !commented_code_keep(jd))
            {
                inst.javadoc = None;
            }
            inst.inner_comments.retain(|c| commented_code_keep(&c.text));
            if !inst.has_comments() {
                report.removed_commented_code += 1;
                continue;
            }
        }
        if config.normalize {
            if let Some(jd) = &inst.javadoc {
                inst.javadoc = Some(normalize_comment(jd, CommentKind::Javadoc));
            }
            for c in &mut inst.inner_comments {
                c.text = normalize_comment(&c.text, CommentKind::Inner);
            }
        }
        if config.orphan_filter {
            report.removed_orphan_comments += orphan_prune(&mut inst);
        }
        if config.merge_inline {
            let before = inst.inner_comments.len();
            inst.inner_comments = merge_adjacent_inline_comments(
                std::mem::take(&mut inst.inner_comments),
                &inst.method_code,
            );
            report.merged_inline_comments += before - inst.inner_comments.len();
        }
        out.push(inst);
    }

    if config.dedupe {
        let mut seen: HashSet<String> = HashSet::new();
        out.retain(|inst| {
            if seen.insert(dedupe_key(inst)) {
                true
            } else {
                report.removed_duplicate += 1;
                false
            }
        });
    }

    report.output = out.len();
    debug_assert!(report.reconciles());
    (out, report)
}
