//! Order-n count models over comment text, with greedy chained
//! multi-token completion.
//!
//! There is no smoothing or backoff: a history never observed in
//! training is a first-class no-prediction outcome. Confidence is the
//! geometric mean of the per-step probabilities.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::token::START;

/// Join history tokens into a map key. Tokens never contain whitespace,
/// so a single space is unambiguous.
fn history_key(history: &[String]) -> String {
    history.join(" ")
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingMeta {
    pub corpus_fingerprint: String,
    pub sequence_count: usize,
    pub token_count: usize,
}

/// Count tables mapping each (n-1)-token history to its next-token
/// occurrence counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NgramModel {
    pub order: usize,
    counts: BTreeMap<String, BTreeMap<String, u64>>,
    pub meta: TrainingMeta,
}

/// A model's completion for one task.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub task_id: String,
    pub tokens: Vec<String>,
    pub confidence: f64,
    pub model: String,
    pub status: PredictionStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredictionStatus {
    Ok,
    NoPrediction,
}

impl Prediction {
    pub fn none(task_id: impl Into<String>, model: impl Into<String>) -> Self {
        Prediction {
            task_id: task_id.into(),
            tokens: Vec::new(),
            confidence: 0.0,
            model: model.into(),
            status: PredictionStatus::NoPrediction,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == PredictionStatus::Ok
    }
}

/// Left-pad with start sentinels and keep the last n-1 tokens.
fn padded_history(history: &[String], order: usize) -> Vec<String> {
    let need = order - 1;
    if history.len() >= need {
        history[history.len() - need..].to_vec()
    } else {
        let mut padded = vec![START.to_string(); need - history.len()];
        padded.extend(history.iter().cloned());
        padded
    }
}

impl NgramModel {
    /// Count every n-gram occurrence across the training sequences, each
    /// prepended with n-1 start sentinels.
    pub fn train(
        sequences: &[Vec<String>],
        order: usize,
        fingerprint: impl Into<String>,
    ) -> Result<Self> {
        if order < 2 {
            return Err(Error::Input(format!("n-gram order must be >= 2, got {order}")));
        }
        if sequences.iter().all(|s| s.is_empty()) {
            return Err(Error::Input("cannot train on an empty corpus".into()));
        }
        let mut counts: BTreeMap<String, BTreeMap<String, u64>> = BTreeMap::new();
        let mut token_count = 0;
        for seq in sequences {
            if seq.is_empty() {
                continue;
            }
            token_count += seq.len();
            let mut padded = vec![START.to_string(); order - 1];
            padded.extend(seq.iter().cloned());
            for window in padded.windows(order) {
                let key = history_key(&window[..order - 1]);
                *counts
                    .entry(key)
                    .or_default()
                    .entry(window[order - 1].clone())
                    .or_insert(0) += 1;
            }
        }
        Ok(NgramModel {
            order,
            counts,
            meta: TrainingMeta {
                corpus_fingerprint: fingerprint.into(),
                sequence_count: sequences.iter().filter(|s| !s.is_empty()).count(),
                token_count,
            },
        })
    }

    pub fn vocabulary_size(&self) -> usize {
        let mut vocab: std::collections::BTreeSet<&str> = std::collections::BTreeSet::new();
        for nexts in self.counts.values() {
            vocab.extend(nexts.keys().map(|s| s.as_str()));
        }
        vocab.len()
    }

    pub fn history_count(&self) -> usize {
        self.counts.len()
    }

    /// Argmax next token for the last n-1 history tokens, with its
    /// conditional probability. Ties break lexicographically; an unseen
    /// history yields None.
    pub fn predict_next(&self, history: &[String]) -> Option<(String, f64)> {
        let key = history_key(&padded_history(history, self.order));
        let nexts = self.counts.get(&key)?;
        let total: u64 = nexts.values().sum();
        // BTreeMap iteration is lexicographic, so the first maximum is
        // the lexicographically smallest among ties.
        let (token, count) = nexts
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))?;
        Some((token.clone(), *count as f64 / total as f64))
    }

    /// Greedy chained completion: each predicted token is appended to
    /// the history before the next step. Any unseen step aborts the
    /// whole task.
    pub fn predict_sequence(
        &self,
        task_id: &str,
        prefix: &[String],
        length: usize,
        label: &str,
    ) -> Prediction {
        let mut history = prefix.to_vec();
        let mut tokens = Vec::with_capacity(length);
        let mut log_prob_sum = 0.0;
        for _ in 0..length {
            match self.predict_next(&history) {
                Some((token, prob)) => {
                    log_prob_sum += prob.ln();
                    history.push(token.clone());
                    tokens.push(token);
                }
                None => return Prediction::none(task_id, label),
            }
        }
        Prediction {
            task_id: task_id.to_string(),
            tokens,
            confidence: (log_prob_sum / length as f64).exp(),
            model: label.to_string(),
            status: PredictionStatus::Ok,
        }
    }

    /// Conditional distribution for a history, for oracle checks.
    pub fn distribution(&self, history: &[String]) -> Option<&BTreeMap<String, u64>> {
        self.counts
            .get(&history_key(&padded_history(history, self.order)))
    }

    /// All stored histories (split back into tokens).
    pub fn histories(&self) -> impl Iterator<Item = Vec<String>> + '_ {
        self.counts
            .keys()
            .map(|k| k.split(' ').map(String::from).collect())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let header = serde_json::json!({
            "format": "comcomp-ngram",
            "version": 1,
            "order": self.order,
            "vocab_size": self.vocabulary_size(),
            "history_count": self.history_count(),
            "meta": self.meta,
        });
        let body = serde_json::json!({ "header": header, "counts": self.counts });
        let text = serde_json::to_string(&body).map_err(|e| Error::Internal(e.to_string()))?;
        fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Schema {
            path: path.to_path_buf(),
            record: 0,
            message: e.to_string(),
        })?;
        let header = &value["header"];
        if header["format"] != "comcomp-ngram" {
            return Err(Error::Schema {
                path: path.to_path_buf(),
                record: 0,
                message: "not a comcomp n-gram model file".into(),
            });
        }
        let order = header["order"].as_u64().ok_or_else(|| Error::Schema {
            path: path.to_path_buf(),
            record: 0,
            message: "missing order".into(),
        })? as usize;
        let meta: TrainingMeta = serde_json::from_value(header["meta"].clone())
            .map_err(|e| Error::Schema {
                path: path.to_path_buf(),
                record: 0,
                message: e.to_string(),
            })?;
        let counts: BTreeMap<String, BTreeMap<String, u64>> =
            serde_json::from_value(value["counts"].clone()).map_err(|e| Error::Schema {
                path: path.to_path_buf(),
                record: 0,
                message: e.to_string(),
            })?;
        Ok(NgramModel { order, counts, meta })
    }
}

/// Result of evaluating one order in a sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepRow {
    pub order: usize,
    pub evaluated: usize,
    pub perfect: usize,
    pub perfect_rate: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub best_order: usize,
}

/// A (history, target) evaluation pair for order sweeps: predict
/// |target| tokens after `prefix` and compare to `target`.
pub struct SweepTask {
    pub prefix: Vec<String>,
    pub target: Vec<String>,
}

/// Train one model per order on `train_sequences`, score full-sequence
/// perfect predictions on `eval_tasks`, and pick the best order (ties
/// go to the smallest n).
pub fn sweep_orders(
    train_sequences: &[Vec<String>],
    eval_tasks: &[SweepTask],
    orders: &[usize],
    fingerprint: &str,
) -> Result<SweepResult> {
    let mut rows = Vec::new();
    for &order in orders {
        let model = NgramModel::train(train_sequences, order, fingerprint)?;
        let mut perfect = 0;
        for task in eval_tasks {
            let pred = model.predict_sequence("sweep", &task.prefix, task.target.len(), "ngram");
            if pred.is_ok() && pred.tokens == task.target {
                perfect += 1;
            }
        }
        rows.push(SweepRow {
            order,
            evaluated: eval_tasks.len(),
            perfect,
            perfect_rate: if eval_tasks.is_empty() {
                0.0
            } else {
                perfect as f64 / eval_tasks.len() as f64
            },
        });
    }
    let best_order = rows
        .iter()
        .max_by(|a, b| {
            a.perfect_rate
                .partial_cmp(&b.perfect_rate)
                .unwrap()
                .then(b.order.cmp(&a.order))
        })
        .map(|r| r.order)
        .ok_or_else(|| Error::Input("sweep needs at least one order".into()))?;
    Ok(SweepResult { rows, best_order })
}
