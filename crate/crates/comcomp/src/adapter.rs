//! Exchange boundary with external models: completion tasks go out as
//! prediction requests, model outputs come back in as [`Prediction`]s.
//! These files are the sole integration contract for neural models.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::datasetgen::CompletionTask;
use crate::error::{Error, Result};
use crate::ngram::Prediction;
use crate::token::SEP;

/// One exported prediction request. The input string reproduces the
/// model-input shape (context, separator, visible comment, separator)
/// with the target elided.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskExport {
    pub task_id: String,
    pub input: String,
    pub expected_length: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExportManifest {
    pub count: usize,
    pub corpus_fingerprint: String,
    /// Tokenization contract external models must detokenize to:
    /// whole sentinels, ASCII alphanumeric word runs, single-character
    /// punctuation.
    pub tokenizer: String,
}

pub const TOKENIZER_VERSION: &str = "word-punct-v1";

pub fn export_record(task: &CompletionTask) -> TaskExport {
    let mut visible: Vec<&str> = Vec::new();
    visible.extend(task.preceding.iter().map(|s| s.as_str()));
    visible.extend(task.prefix.iter().map(|s| s.as_str()));
    let input = format!(
        "{} {SEP} {} {SEP}",
        task.context.join(" "),
        visible.join(" ")
    );
    TaskExport {
        task_id: task.id.clone(),
        input,
        expected_length: task.target.len(),
    }
}

/// Write one export record per task, order-stable by task id, plus a
/// manifest sidecar (`<dest>.manifest.json`).
pub fn export_tasks(tasks: &[CompletionTask], fingerprint: &str, dest: &Path) -> Result<usize> {
    let mut sorted: Vec<&CompletionTask> = tasks.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));

    let mut file = fs::File::create(dest).map_err(|e| Error::io(dest, e))?;
    for task in &sorted {
        let record = export_record(task);
        let line =
            serde_json::to_string(&record).map_err(|e| Error::Internal(e.to_string()))?;
        file.write_all(line.as_bytes())
            .and_then(|_| file.write_all(b"\n"))
            .map_err(|e| Error::io(dest, e))?;
    }

    let manifest = ExportManifest {
        count: sorted.len(),
        corpus_fingerprint: fingerprint.to_string(),
        tokenizer: TOKENIZER_VERSION.to_string(),
    };
    let manifest_path = dest.with_extension("manifest.json");
    let text =
        serde_json::to_string_pretty(&manifest).map_err(|e| Error::Internal(e.to_string()))?;
    fs::write(&manifest_path, text + "\n").map_err(|e| Error::io(&manifest_path, e))?;
    Ok(sorted.len())
}

/// Incoming prediction record from an external model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PredictionRecord {
    pub task_id: String,
    pub tokens: Vec<String>,
    pub confidence: f64,
    pub model: String,
}

#[derive(Debug, Clone, Default)]
pub struct ImportStats {
    pub imported: usize,
    pub missing: usize,
    pub clamped: usize,
    pub skipped_malformed: usize,
}

/// Import model outputs for a split. The result is total over the
/// split: tasks without a record become no-prediction entries so paired
/// statistics stay defined. Confidence is clamped to [0,1] with a
/// warning counter; a duplicate task id is an error.
pub fn import_predictions(
    source: &Path,
    tasks: &[CompletionTask],
) -> Result<(Vec<Prediction>, ImportStats)> {
    let reader =
        BufReader::new(fs::File::open(source).map_err(|e| Error::io(source, e))?);
    let task_ids: std::collections::BTreeSet<&str> =
        tasks.iter().map(|t| t.id.as_str()).collect();

    let mut stats = ImportStats::default();
    let mut by_id: BTreeMap<String, Prediction> = BTreeMap::new();
    let mut model_label: Option<String> = None;

    for (num, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(source, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: PredictionRecord = match serde_json::from_str(&line) {
            Ok(r) => r,
            Err(_) => {
                stats.skipped_malformed += 1;
                continue;
            }
        };
        if !task_ids.contains(record.task_id.as_str()) {
            return Err(Error::Schema {
                path: source.to_path_buf(),
                record: num + 1,
                message: format!("prediction for unknown task id '{}'", record.task_id),
            });
        }
        if by_id.contains_key(&record.task_id) {
            return Err(Error::Schema {
                path: source.to_path_buf(),
                record: num + 1,
                message: format!("duplicate task id '{}' (ambiguous pairing)", record.task_id),
            });
        }
        let mut confidence = record.confidence;
        if !(0.0..=1.0).contains(&confidence) || confidence.is_nan() {
            confidence = if confidence.is_nan() {
                0.0
            } else {
                confidence.clamp(0.0, 1.0)
            };
            stats.clamped += 1;
        }
        model_label.get_or_insert_with(|| record.model.clone());
        let status = if record.tokens.is_empty() {
            crate::ngram::PredictionStatus::NoPrediction
        } else {
            crate::ngram::PredictionStatus::Ok
        };
        by_id.insert(
            record.task_id.clone(),
            Prediction {
                task_id: record.task_id,
                tokens: record.tokens,
                confidence: if status == crate::ngram::PredictionStatus::NoPrediction {
                    0.0
                } else {
                    confidence
                },
                model: record.model,
                status,
            },
        );
        stats.imported += 1;
    }

    let label = model_label.unwrap_or_else(|| "external".to_string());
    let mut predictions = Vec::with_capacity(tasks.len());
    for task in tasks {
        match by_id.remove(&task.id) {
            Some(p) => predictions.push(p),
            None => {
                stats.missing += 1;
                predictions.push(Prediction::none(&task.id, &label));
            }
        }
    }
    Ok((predictions, stats))
}
