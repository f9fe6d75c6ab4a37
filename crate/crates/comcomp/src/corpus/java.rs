//! Character-level scanning of Java source: comment extraction with line
//! positions, and method extraction from whole files.
//!
//! The scanner is string/char-literal aware but is not a Java parser;
//! brace matching over literal-masked text is enough to delimit methods.

use crate::corpus::{CommentStyle, InnerComment};
use crate::error::{Error, Result};

/// Replace comment and string/char literal contents with spaces, keeping
/// newlines and the literal delimiters, so that the result has identical
/// length and line structure to the input.
fn mask_literals_and_comments(source: &str) -> Result<String> {
    // One space per byte keeps byte offsets aligned with the source.
    fn blank(out: &mut String, c: char) {
        for _ in 0..c.len_utf8() {
            out.push(' ');
        }
    }
    let mut out = String::with_capacity(source.len());
    let chars: Vec<char> = source.chars().collect();
    let mut i = 0;
    let mut line = 1;

    #[derive(PartialEq)]
    enum State {
        Code,
        LineComment,
        BlockComment { start_line: usize },
        Str,
        Chr,
    }
    let mut state = State::Code;

    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        match state {
            State::Code => match c {
                '/' if next == Some('/') => {
                    state = State::LineComment;
                    out.push(' ');
                    out.push(' ');
                    i += 2;
                    continue;
                }
                '/' if next == Some('*') => {
                    state = State::BlockComment { start_line: line };
                    out.push(' ');
                    out.push(' ');
                    i += 2;
                    continue;
                }
                '"' => {
                    state = State::Str;
                    out.push('"');
                }
                '\'' => {
                    state = State::Chr;
                    out.push('\'');
                }
                _ => out.push(c),
            },
            State::LineComment => {
                if c == '\n' {
                    state = State::Code;
                    out.push('\n');
                } else {
                    blank(&mut out, c);
                }
            }
            State::BlockComment { .. } => {
                if c == '*' && next == Some('/') {
                    state = State::Code;
                    out.push(' ');
                    out.push(' ');
                    i += 2;
                    continue;
                }
                if c == '\n' {
                    out.push('\n');
                } else {
                    blank(&mut out, c);
                }
            }
            State::Str => match c {
                '\\' => {
                    out.push(' ');
                    if let Some(n) = next {
                        blank(&mut out, n);
                        i += 2;
                        if n == '\n' {
                            line += 1;
                        }
                        continue;
                    }
                }
                '"' => {
                    state = State::Code;
                    out.push('"');
                }
                _ => {
                    if c == '\n' {
                        out.push('\n');
                    } else {
                        blank(&mut out, c);
                    }
                }
            },
            State::Chr => match c {
                '\\' => {
                    out.push(' ');
                    if let Some(n) = next {
                        blank(&mut out, n);
                        i += 2;
                        continue;
                    }
                }
                '\'' => {
                    state = State::Code;
                    out.push('\'');
                }
                _ => blank(&mut out, c),
            },
        }
        if c == '\n' {
            line += 1;
        }
        i += 1;
    }

    if let State::BlockComment { start_line } = state {
        return Err(Error::Input(format!(
            "unterminated block comment starting at line {start_line}"
        )));
    }
    Ok(out)
}

fn strip_block_comment_body(body: &str) -> String {
    let lines: Vec<String> = body
        .lines()
        .map(|l| {
            let l = l.trim();
            let l = l.strip_prefix('*').unwrap_or(l);
            l.trim().to_string()
        })
        .collect();
    lines
        .join("\n")
        .trim_matches('\n')
        .trim()
        .to_string()
}

/// Extract every `//` and `/* */` region outside string/char literals.
/// Delimiters are stripped and 1-based line spans recorded.
pub fn extract_inner_comments(method_code: &str) -> Result<Vec<InnerComment>> {
    let chars: Vec<char> = method_code.chars().collect();
    let mut comments = Vec::new();
    let mut i = 0;
    let mut line = 1;

    enum State {
        Code,
        LineComment { start_line: usize, text: String },
        BlockComment { start_line: usize, text: String },
        Str,
        Chr,
    }
    let mut state = State::Code;

    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        match &mut state {
            State::Code => match c {
                '/' if next == Some('/') => {
                    state = State::LineComment {
                        start_line: line,
                        text: String::new(),
                    };
                    i += 2;
                    continue;
                }
                '/' if next == Some('*') => {
                    state = State::BlockComment {
                        start_line: line,
                        text: String::new(),
                    };
                    i += 2;
                    continue;
                }
                '"' => state = State::Str,
                '\'' => state = State::Chr,
                _ => {}
            },
            State::LineComment { start_line, text } => {
                if c == '\n' {
                    comments.push(InnerComment {
                        text: text.trim().to_string(),
                        start_line: *start_line,
                        end_line: line,
                        style: CommentStyle::Line,
                    });
                    state = State::Code;
                } else {
                    text.push(c);
                }
            }
            State::BlockComment { start_line, text } => {
                if c == '*' && next == Some('/') {
                    comments.push(InnerComment {
                        text: strip_block_comment_body(text),
                        start_line: *start_line,
                        end_line: line,
                        style: CommentStyle::Block,
                    });
                    state = State::Code;
                    i += 2;
                    continue;
                }
                text.push(c);
            }
            State::Str => match c {
                '\\' if next.is_some() => {
                    i += 2;
                    if next == Some('\n') {
                        line += 1;
                    }
                    continue;
                }
                '"' => state = State::Code,
                _ => {}
            },
            State::Chr => match c {
                '\\' if next.is_some() => {
                    i += 2;
                    continue;
                }
                '\'' => state = State::Code,
                _ => {}
            },
        }
        if c == '\n' {
            line += 1;
        }
        i += 1;
    }

    match state {
        State::LineComment { start_line, text } => {
            comments.push(InnerComment {
                text: text.trim().to_string(),
                start_line,
                end_line: line,
                style: CommentStyle::Line,
            });
        }
        State::BlockComment { start_line, .. } => {
            return Err(Error::Input(format!(
                "unterminated block comment starting at line {start_line}"
            )));
        }
        _ => {}
    }
    Ok(comments)
}

const NON_METHOD_KEYWORDS: [&str; 13] = [
    "class",
    "interface",
    "enum",
    "record",
    "new",
    "if",
    "for",
    "while",
    "switch",
    "catch",
    "do",
    "else",
    "return",
];

fn looks_like_method_header(header: &str) -> bool {
    if !header.contains('(') || !header.contains(')') || header.contains('=') {
        return false;
    }
    // The argument list must come from a declarator, not a control keyword.
    for word in header.split(|c: char| !c.is_ascii_alphanumeric() && c != '_') {
        if NON_METHOD_KEYWORDS.contains(&word) {
            return false;
        }
    }
    // Identifier directly before the '(' is required.
    let before = &header[..header.find('(').unwrap()];
    before
        .trim_end()
        .chars()
        .next_back()
        .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A method found in a Java file: dedented source and optional Javadoc.
pub struct ExtractedMethod {
    pub code: String,
    pub javadoc: Option<String>,
    /// 1-based line of the signature in the original file.
    pub file_line: usize,
}

fn dedent(text: &str) -> String {
    let indent = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.len() - l.trim_start().len())
        .min()
        .unwrap_or(0);
    text.lines()
        .map(|l| if l.len() >= indent { &l[indent..] } else { l.trim_start() })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Javadoc block immediately above `start` (annotation lines in between
/// are skipped), or None.
fn javadoc_above(source: &str, start: usize) -> Option<String> {
    let mut end = start;
    loop {
        let head = source[..end].trim_end();
        if head.is_empty() {
            return None;
        }
        let line_start = head.rfind('\n').map_or(0, |p| p + 1);
        let last_line = head[line_start..].trim_start();
        if last_line.starts_with('@') {
            end = line_start;
            continue;
        }
        if !head.ends_with("*/") {
            return None;
        }
        let open = head.rfind("/**")?;
        // Reject plain block comments; only /** ... */ is Javadoc.
        if head[open..].starts_with("/**") {
            let body = &head[open + 3..head.len() - 2];
            let text = strip_block_comment_body(body);
            return if text.is_empty() { None } else { Some(text) };
        }
        return None;
    }
}

/// Extract method-level units from a Java source file: every brace block
/// opened at class-body depth whose header looks like a declarator.
pub fn extract_methods(source: &str) -> Result<Vec<ExtractedMethod>> {
    let masked = mask_literals_and_comments(source)?;
    let bytes = masked.as_bytes();
    let mut methods = Vec::new();
    let mut depth: i32 = 0;
    let mut boundary = 0usize; // byte offset after the last { } or ;
    let mut i = 0usize;

    while i < bytes.len() {
        match bytes[i] as char {
            '{' => {
                let header = masked[boundary..i].trim();
                if depth == 1 && looks_like_method_header(header) {
                    // Find the matching closing brace.
                    let mut d = 1;
                    let mut j = i + 1;
                    while j < bytes.len() && d > 0 {
                        match bytes[j] as char {
                            '{' => d += 1,
                            '}' => d -= 1,
                            _ => {}
                        }
                        j += 1;
                    }
                    let header_start = boundary
                        + (masked[boundary..i].len()
                            - masked[boundary..i].trim_start().len());
                    let code = dedent(&source[header_start..j]);
                    let file_line = source[..header_start].matches('\n').count() + 1;
                    methods.push(ExtractedMethod {
                        code,
                        javadoc: javadoc_above(source, header_start),
                        file_line,
                    });
                    i = j;
                    boundary = j;
                    continue;
                }
                depth += 1;
                boundary = i + 1;
            }
            '}' => {
                depth -= 1;
                boundary = i + 1;
            }
            ';' => boundary = i + 1,
            _ => {}
        }
        i += 1;
    }
    Ok(methods)
}
