//! Corpus ingestion: method-level records (CodeSearchNet-style JSONL) or
//! raw Java files, normalized into [`MethodInstance`] values and stored as
//! one JSON record per line.

mod java;

pub use java::{extract_inner_comments, extract_methods};

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommentStyle {
    Line,
    Block,
}

/// A comment inside a method body, with its 1-based line span.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerComment {
    pub text: String,
    pub start_line: usize,
    pub end_line: usize,
    pub style: CommentStyle,
}

/// One Java method with its raw Javadoc and positioned inner comments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodInstance {
    pub id: String,
    pub source: String,
    pub method_code: String,
    pub javadoc: Option<String>,
    pub inner_comments: Vec<InnerComment>,
    #[serde(default = "default_language")]
    pub language: String,
}

fn default_language() -> String {
    "java".to_string()
}

impl MethodInstance {
    /// All comment texts of this instance (javadoc first, then inner).
    pub fn comment_texts(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        if let Some(jd) = &self.javadoc {
            out.push(jd);
        }
        out.extend(self.inner_comments.iter().map(|c| c.text.as_str()));
        out
    }

    pub fn has_comments(&self) -> bool {
        self.javadoc.is_some() || !self.inner_comments.is_empty()
    }
}

/// Result of loading a corpus: instances plus the count of skipped
/// malformed records.
#[derive(Debug)]
pub struct LoadOutcome {
    pub instances: Vec<MethodInstance>,
    pub skipped: usize,
}

/// CodeSearchNet-style record: `function` holds the method body,
/// `docstring` the Javadoc (may be absent).
#[derive(Deserialize)]
struct CsnRecord {
    #[serde(default)]
    id: Option<String>,
    #[serde(default)]
    sha: Option<String>,
    #[serde(default)]
    function: Option<String>,
    #[serde(default)]
    docstring: Option<String>,
}

/// Load a corpus from either a directory of `.java` files or a JSONL
/// record stream. Malformed records are skipped and counted, not fatal.
pub fn load_corpus(source: &Path) -> Result<LoadOutcome> {
    if source.is_dir() {
        load_from_directory(source)
    } else if source.is_file() {
        load_from_records(source)
    } else {
        Err(Error::Input(format!(
            "corpus source {} is neither a file nor a directory",
            source.display()
        )))
    }
}

fn load_from_directory(dir: &Path) -> Result<LoadOutcome> {
    let mut files: Vec<std::path::PathBuf> = Vec::new();
    collect_java_files(dir, &mut files)?;
    files.sort();

    let mut instances = Vec::new();
    let mut skipped = 0;
    for file in &files {
        let text = fs::read_to_string(file).map_err(|e| Error::io(file, e))?;
        let rel = file
            .strip_prefix(dir)
            .unwrap_or(file)
            .to_string_lossy()
            .replace('\\', "/");
        match extract_methods(&text) {
            Ok(methods) => {
                for (ordinal, m) in methods.into_iter().enumerate() {
                    let inner = match extract_inner_comments(&m.code) {
                        Ok(inner) => inner,
                        Err(_) => {
                            skipped += 1;
                            continue;
                        }
                    };
                    instances.push(MethodInstance {
                        id: format!("{rel}#m{ordinal}"),
                        source: format!("{rel}:{}", m.file_line),
                        method_code: m.code,
                        javadoc: m.javadoc,
                        inner_comments: inner,
                        language: default_language(),
                    });
                }
            }
            Err(e) => {
                return Err(Error::Parse {
                    path: file.clone(),
                    line: 0,
                    message: e.to_string(),
                })
            }
        }
    }
    Ok(LoadOutcome { instances, skipped })
}

fn collect_java_files(dir: &Path, out: &mut Vec<std::path::PathBuf>) -> Result<()> {
    for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let entry = entry.map_err(|e| Error::io(dir, e))?;
        let path = entry.path();
        if path.is_dir() {
            collect_java_files(&path, out)?;
        } else if path.extension().is_some_and(|e| e == "java") {
            out.push(path);
        }
    }
    Ok(())
}

fn load_from_records(path: &Path) -> Result<LoadOutcome> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let reader = BufReader::new(file);
    let mut instances = Vec::new();
    let mut skipped = 0;
    for (num, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CsnRecord = match serde_json::from_str(&line) {
            Ok(r) => r,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let function = match record.function {
            Some(f) if !f.trim().is_empty() => f,
            _ => {
                skipped += 1;
                continue;
            }
        };
        let inner = match extract_inner_comments(&function) {
            Ok(inner) => inner,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        let id = record
            .id
            .or(record.sha)
            .unwrap_or_else(|| format!("rec{num:06}"));
        instances.push(MethodInstance {
            id,
            source: format!("{}#{num}", path.display()),
            method_code: function,
            javadoc: record
                .docstring
                .filter(|d| !d.trim().is_empty())
                .map(|d| d.trim().to_string()),
            inner_comments: inner,
            language: default_language(),
        });
    }
    Ok(LoadOutcome { instances, skipped })
}

/// True when the line holds nothing but the given line-comment, i.e. no
/// code precedes the `//`.
fn line_is_comment_only(lines: &[&str], line_no: usize) -> bool {
    lines
        .get(line_no - 1)
        .is_some_and(|l| l.trim_start().starts_with("//"))
}

/// Merge consecutive line-comments on adjacent comment-only lines into a
/// single comment whose text joins the parts with one space.
pub fn merge_adjacent_inline_comments(
    comments: Vec<InnerComment>,
    method_code: &str,
) -> Vec<InnerComment> {
    let lines: Vec<&str> = method_code.lines().collect();
    let mut merged: Vec<InnerComment> = Vec::new();
    for c in comments {
        if let Some(prev) = merged.last_mut() {
            let adjacent = prev.style == CommentStyle::Line
                && c.style == CommentStyle::Line
                && c.start_line == prev.end_line + 1
                && line_is_comment_only(&lines, prev.end_line)
                && line_is_comment_only(&lines, c.start_line);
            if adjacent {
                if !c.text.is_empty() {
                    if !prev.text.is_empty() {
                        prev.text.push(' ');
                    }
                    prev.text.push_str(&c.text);
                }
                prev.end_line = c.end_line;
                continue;
            }
        }
        merged.push(c);
    }
    merged
}

/// Write one JSON record per line, UTF-8, LF endings.
pub fn write_corpus(path: &Path, instances: &[MethodInstance]) -> Result<()> {
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    for inst in instances {
        let line = serde_json::to_string(inst)
            .map_err(|e| Error::Internal(format!("serialize instance {}: {e}", inst.id)))?;
        file.write_all(line.as_bytes())
            .and_then(|_| file.write_all(b"\n"))
            .map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}

/// Read a corpus file written by [`write_corpus`].
pub fn read_corpus(path: &Path) -> Result<Vec<MethodInstance>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let reader = BufReader::new(file);
    let mut instances = Vec::new();
    for (num, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let inst: MethodInstance = serde_json::from_str(&line).map_err(|e| Error::Schema {
            path: path.to_path_buf(),
            record: num + 1,
            message: e.to_string(),
        })?;
        instances.push(inst);
    }
    Ok(instances)
}
