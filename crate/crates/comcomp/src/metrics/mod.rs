//! Evaluation metrics over (task, prediction) pairs: perfect predictions
//! at k, the BLEU family, word-level Levenshtein distance, overlap
//! metrics, McNemar's test with odds ratios, confidence analysis and POS
//! analysis, aggregated into the three-panel report layout
//! (javadoc / inner / overall, k = 1..10 and >10).

pub mod pos;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::datasetgen::{CompletionTask, TaskKind};
use crate::error::{Error, Result};
use crate::ngram::Prediction;

/// Perfect prediction at k: first k predicted tokens equal the first k
/// target tokens. None when the target is shorter than k.
pub fn perfect_at_k(target: &[String], prediction: &Prediction, k: usize) -> Option<bool> {
    if target.len() < k {
        return None;
    }
    if !prediction.is_ok() || prediction.tokens.len() < k {
        return Some(false);
    }
    Some(prediction.tokens[..k] == target[..k])
}

fn ngram_counts(tokens: &[String], n: usize) -> HashMap<&[String], usize> {
    let mut counts: HashMap<&[String], usize> = HashMap::new();
    if tokens.len() >= n {
        for gram in tokens.windows(n) {
            *counts.entry(gram).or_insert(0) += 1;
        }
    }
    counts
}

/// BLEU-n with a single reference: clipped modified n-gram precision
/// times the brevity penalty exp(min(0, 1 - |ref|/|cand|)).
pub fn bleu_n(candidate: &[String], reference: &[String], n: usize) -> f64 {
    if candidate.len() < n || candidate.is_empty() {
        return 0.0;
    }
    let cand_counts = ngram_counts(candidate, n);
    let ref_counts = ngram_counts(reference, n);
    let total: usize = cand_counts.values().sum();
    let matched: usize = cand_counts
        .iter()
        .map(|(gram, &c)| c.min(ref_counts.get(gram).copied().unwrap_or(0)))
        .sum();
    if matched == 0 {
        return 0.0;
    }
    let precision = matched as f64 / total as f64;
    let brevity = (1.0 - reference.len() as f64 / candidate.len() as f64).min(0.0).exp();
    precision * brevity
}

/// Geometric mean of BLEU-1..4; None when the reference has fewer than
/// four tokens, 0 when any component is 0.
pub fn bleu_a(candidate: &[String], reference: &[String]) -> Option<f64> {
    if reference.len() < 4 {
        return None;
    }
    let components: Vec<f64> = (1..=4).map(|n| bleu_n(candidate, reference, n)).collect();
    if components.iter().any(|&b| b == 0.0) {
        return Some(0.0);
    }
    Some(components.iter().map(|b| b.ln()).sum::<f64>().exp().powf(0.25))
}

/// Unit-cost edit distance over word tokens.
pub fn levenshtein_words(candidate: &[String], reference: &[String]) -> usize {
    let (m, n) = (candidate.len(), reference.len());
    if m == 0 {
        return n;
    }
    if n == 0 {
        return m;
    }
    let mut prev: Vec<usize> = (0..=n).collect();
    let mut curr = vec![0usize; n + 1];
    for i in 1..=m {
        curr[0] = i;
        for j in 1..=n {
            let cost = usize::from(candidate[i - 1] != reference[j - 1]);
            curr[j] = (prev[j] + 1).min(curr[j - 1] + 1).min(prev[j - 1] + cost);
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[n]
}

/// Shared / only-A / only-B fractions over the union of two perfect
/// prediction sets. None when both sets are empty.
pub fn overlap_metrics(
    set_a: &BTreeSet<String>,
    set_b: &BTreeSet<String>,
) -> Option<(f64, f64, f64)> {
    let union = set_a.union(set_b).count();
    if union == 0 {
        return None;
    }
    let shared = set_a.intersection(set_b).count() as f64 / union as f64;
    let only_a = set_a.difference(set_b).count() as f64 / union as f64;
    let only_b = set_b.difference(set_a).count() as f64 / union as f64;
    Some((shared, only_a, only_b))
}

/// McNemar chi-square (continuity-corrected) and odds ratio (Haldane
/// correction when a discordant cell is zero) over paired outcomes.
/// Returns (chi_square, odds_ratio, b, c); the statistics are None when
/// undefined (b + c = 0).
pub fn mcnemar_and_or(paired: &[(bool, bool)]) -> (Option<f64>, Option<f64>, usize, usize) {
    let b = paired.iter().filter(|&&(a, bb)| a && !bb).count();
    let c = paired.iter().filter(|&&(a, bb)| !a && bb).count();
    if b + c == 0 {
        return (None, None, b, c);
    }
    let chi = {
        let diff = (b as f64 - c as f64).abs() - 1.0;
        diff * diff / (b + c) as f64
    };
    let odds = if b == 0 || c == 0 {
        (b as f64 + 0.5) / (c as f64 + 0.5)
    } else {
        b as f64 / c as f64
    };
    (Some(chi), Some(odds), b, c)
}

/// The eleven report buckets: k = 1..10 and the ">10" bucket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KBucket {
    K(usize),
    GreaterThan10,
}

impl KBucket {
    pub fn all() -> Vec<KBucket> {
        let mut buckets: Vec<KBucket> = (1..=10).map(KBucket::K).collect();
        buckets.push(KBucket::GreaterThan10);
        buckets
    }

    pub fn label(&self) -> String {
        match self {
            KBucket::K(k) => k.to_string(),
            KBucket::GreaterThan10 => ">10".to_string(),
        }
    }

    pub fn applicable(&self, target_len: usize) -> bool {
        match self {
            KBucket::K(k) => target_len >= *k,
            KBucket::GreaterThan10 => target_len > 10,
        }
    }

    /// Candidate/reference slices evaluated in this bucket.
    fn slices<'a>(
        &self,
        target: &'a [String],
        prediction: &'a Prediction,
    ) -> (&'a [String], &'a [String]) {
        let k = match self {
            KBucket::K(k) => *k,
            KBucket::GreaterThan10 => target.len(),
        };
        let cand = if prediction.is_ok() {
            &prediction.tokens[..k.min(prediction.tokens.len())]
        } else {
            &[][..]
        };
        (cand, &target[..k])
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CellRow {
    pub k: String,
    pub count: usize,
    pub perfect: usize,
    pub perfect_rate: Option<f64>,
    pub bleu_a_count: usize,
    pub bleu_a_mean: Option<f64>,
    pub levenshtein_mean: Option<f64>,
    pub no_prediction: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Panel {
    pub rows: Vec<CellRow>,
    pub total_tasks: usize,
    /// Full-sequence perfect predictions (k = |target|).
    pub perfect_full: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfidenceRow {
    pub k: String,
    pub perfect_count: usize,
    pub perfect_mean_confidence: Option<f64>,
    pub wrong_count: usize,
    pub wrong_mean_confidence: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosRow {
    pub category: String,
    pub positions: usize,
    pub correct: usize,
    pub rate: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelEval {
    pub model: String,
    pub javadoc: Panel,
    pub inner: Panel,
    pub overall: Panel,
    pub confidence: Vec<ConfidenceRow>,
    pub pos: Vec<PosRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairedComparison {
    pub model_a: String,
    pub model_b: String,
    pub union_size: usize,
    pub shared: Option<f64>,
    pub only_a: Option<f64>,
    pub only_b: Option<f64>,
    pub discordant_b: usize,
    pub discordant_c: usize,
    pub mcnemar_chi_square: Option<f64>,
    pub odds_ratio: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComparisonBlock {
    pub scope: String,
    pub stats: PairedComparison,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvalReport {
    pub corpus_fingerprint: String,
    pub split: String,
    pub models: Vec<ModelEval>,
    pub comparisons: Vec<ComparisonBlock>,
}

/// One (task, prediction) pair, aligned by task id.
struct Pair<'a> {
    task: &'a CompletionTask,
    prediction: &'a Prediction,
}

fn align<'a>(
    tasks: &'a [CompletionTask],
    predictions: &'a [Prediction],
) -> Result<Vec<Pair<'a>>> {
    let by_id: HashMap<&str, &Prediction> = predictions
        .iter()
        .map(|p| (p.task_id.as_str(), p))
        .collect();
    tasks
        .iter()
        .map(|task| {
            by_id
                .get(task.id.as_str())
                .map(|prediction| Pair {
                    task,
                    prediction,
                })
                .ok_or_else(|| {
                    Error::Input(format!("no prediction for task '{}'", task.id))
                })
        })
        .collect()
}

fn full_perfect(pair: &Pair) -> bool {
    pair.prediction.is_ok() && pair.prediction.tokens == pair.task.target
}

fn build_panel(pairs: &[&Pair]) -> Panel {
    let rows = KBucket::all()
        .into_iter()
        .map(|bucket| {
            let mut count = 0;
            let mut perfect = 0;
            let mut no_prediction = 0;
            let mut bleu_sum = 0.0;
            let mut bleu_count = 0;
            let mut lev_sum = 0usize;
            for pair in pairs {
                if !bucket.applicable(pair.task.target.len()) {
                    continue;
                }
                count += 1;
                if !pair.prediction.is_ok() {
                    no_prediction += 1;
                }
                let (cand, reference) = bucket.slices(&pair.task.target, pair.prediction);
                let is_perfect = match bucket {
                    KBucket::GreaterThan10 => full_perfect(pair),
                    KBucket::K(_) => cand == reference,
                };
                if is_perfect {
                    perfect += 1;
                }
                if let Some(b) = bleu_a(cand, reference) {
                    bleu_sum += b;
                    bleu_count += 1;
                }
                lev_sum += levenshtein_words(cand, reference);
            }
            CellRow {
                k: bucket.label(),
                count,
                perfect,
                perfect_rate: (count > 0).then(|| perfect as f64 / count as f64),
                bleu_a_count: bleu_count,
                bleu_a_mean: (bleu_count > 0).then(|| bleu_sum / bleu_count as f64),
                levenshtein_mean: (count > 0).then(|| lev_sum as f64 / count as f64),
                no_prediction,
            }
        })
        .collect();

    Panel {
        rows,
        total_tasks: pairs.len(),
        perfect_full: pairs.iter().filter(|p| full_perfect(p)).count(),
    }
}

/// Per-k mean confidence for perfect vs wrong predictions.
fn confidence_report(pairs: &[&Pair]) -> Vec<ConfidenceRow> {
    KBucket::all()
        .into_iter()
        .map(|bucket| {
            let mut perfect = (0usize, 0.0f64);
            let mut wrong = (0usize, 0.0f64);
            for pair in pairs {
                if !bucket.applicable(pair.task.target.len()) {
                    continue;
                }
                let is_perfect = match bucket {
                    KBucket::GreaterThan10 => full_perfect(pair),
                    KBucket::K(k) => {
                        perfect_at_k(&pair.task.target, pair.prediction, k) == Some(true)
                    }
                };
                let slot = if is_perfect { &mut perfect } else { &mut wrong };
                slot.0 += 1;
                slot.1 += pair.prediction.confidence;
            }
            ConfidenceRow {
                k: bucket.label(),
                perfect_count: perfect.0,
                perfect_mean_confidence: (perfect.0 > 0).then(|| perfect.1 / perfect.0 as f64),
                wrong_count: wrong.0,
                wrong_mean_confidence: (wrong.0 > 0).then(|| wrong.1 / wrong.0 as f64),
            }
        })
        .collect()
}

const POS_REPORT_ORDER: [&str; 7] = ["ADJ", "ADV", "DET", "PRN", "NOUN", "VERB", "OTH"];

/// Per-POS-category fraction of target positions predicted exactly.
fn pos_accuracy(pairs: &[&Pair]) -> Vec<PosRow> {
    let mut attempts: BTreeMap<&str, usize> = BTreeMap::new();
    let mut correct: BTreeMap<&str, usize> = BTreeMap::new();
    for pair in pairs {
        let tags = pos::pos_tag(&pair.task.target);
        for (position, tag) in tags.iter().enumerate() {
            let category = pos::report_category(*tag);
            *attempts.entry(category).or_insert(0) += 1;
            let hit = pair.prediction.is_ok()
                && pair
                    .prediction
                    .tokens
                    .get(position)
                    .is_some_and(|t| *t == pair.task.target[position]);
            if hit {
                *correct.entry(category).or_insert(0) += 1;
            }
        }
    }
    POS_REPORT_ORDER
        .iter()
        .map(|&category| {
            let positions = attempts.get(category).copied().unwrap_or(0);
            let hits = correct.get(category).copied().unwrap_or(0);
            PosRow {
                category: category.to_string(),
                positions,
                correct: hits,
                rate: (positions > 0).then(|| hits as f64 / positions as f64),
            }
        })
        .collect()
}

fn eval_model(label: &str, pairs: &[Pair]) -> ModelEval {
    let all: Vec<&Pair> = pairs.iter().collect();
    let javadoc: Vec<&Pair> = pairs
        .iter()
        .filter(|p| p.task.task_kind == TaskKind::Javadoc)
        .collect();
    let inner: Vec<&Pair> = pairs
        .iter()
        .filter(|p| p.task.task_kind == TaskKind::Inner)
        .collect();
    ModelEval {
        model: label.to_string(),
        javadoc: build_panel(&javadoc),
        inner: build_panel(&inner),
        overall: build_panel(&all),
        confidence: confidence_report(&all),
        pos: pos_accuracy(&all),
    }
}

fn compare_scope(
    scope: &str,
    label_a: &str,
    label_b: &str,
    pairs_a: &[&Pair],
    pairs_b: &[&Pair],
) -> ComparisonBlock {
    let perfect_ids = |pairs: &[&Pair]| -> BTreeSet<String> {
        pairs
            .iter()
            .filter(|p| full_perfect(p))
            .map(|p| p.task.id.clone())
            .collect()
    };
    let set_a = perfect_ids(pairs_a);
    let set_b = perfect_ids(pairs_b);
    let overlap = overlap_metrics(&set_a, &set_b);
    let union_size = set_a.union(&set_b).count();

    let outcomes_b: HashMap<&str, bool> = pairs_b
        .iter()
        .map(|p| (p.task.id.as_str(), full_perfect(p)))
        .collect();
    let paired: Vec<(bool, bool)> = pairs_a
        .iter()
        .filter_map(|p| {
            outcomes_b
                .get(p.task.id.as_str())
                .map(|&b| (full_perfect(p), b))
        })
        .collect();
    let (chi, odds, b, c) = mcnemar_and_or(&paired);

    ComparisonBlock {
        scope: scope.to_string(),
        stats: PairedComparison {
            model_a: label_a.to_string(),
            model_b: label_b.to_string(),
            union_size,
            shared: overlap.map(|o| o.0),
            only_a: overlap.map(|o| o.1),
            only_b: overlap.map(|o| o.2),
            discordant_b: b,
            discordant_c: c,
            mcnemar_chi_square: chi,
            odds_ratio: odds,
        },
    }
}

/// Build the report for one or two models over a split. Predictions
/// must be total over the split; model labels must be distinct.
pub fn build_report(
    tasks: &[CompletionTask],
    models: &[(String, Vec<Prediction>)],
    split: &str,
    corpus_fingerprint: &str,
) -> Result<EvalReport> {
    let labels: BTreeSet<&str> = models.iter().map(|(l, _)| l.as_str()).collect();
    if labels.len() != models.len() {
        return Err(Error::Input("model label collision in report".into()));
    }

    let mut evals = Vec::new();
    let mut aligned: Vec<Vec<Pair>> = Vec::new();
    for (label, predictions) in models {
        let pairs = align(tasks, predictions)?;
        evals.push(eval_model(label, &pairs));
        aligned.push(pairs);
    }

    let mut comparisons = Vec::new();
    if models.len() == 2 {
        fn filter<'a, 'b>(pairs: &'a [Pair<'b>], kind: Option<TaskKind>) -> Vec<&'a Pair<'b>> {
            pairs
                .iter()
                .filter(|p| kind.is_none_or(|k| p.task.task_kind == k))
                .collect()
        }
        for (scope, kind) in [
            ("javadoc", Some(TaskKind::Javadoc)),
            ("inner", Some(TaskKind::Inner)),
            ("overall", None),
        ] {
            comparisons.push(compare_scope(
                scope,
                &models[0].0,
                &models[1].0,
                &filter(&aligned[0], kind),
                &filter(&aligned[1], kind),
            ));
        }
    }

    Ok(EvalReport {
        corpus_fingerprint: corpus_fingerprint.to_string(),
        split: split.to_string(),
        models: evals,
        comparisons,
    })
}

fn fmt_opt(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.4}"),
        None => "-".to_string(),
    }
}

/// Aligned plain-text rendering of the report.
pub fn render_text(report: &EvalReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "split: {}   corpus: {}\n",
        report.split, report.corpus_fingerprint
    ));
    for eval in &report.models {
        out.push_str(&format!("\n=== model: {} ===\n", eval.model));
        for (name, panel) in [
            ("overall", &eval.overall),
            ("javadoc", &eval.javadoc),
            ("inner", &eval.inner),
        ] {
            out.push_str(&format!(
                "\n-- {name} ({} tasks, {} perfect full) --\n",
                panel.total_tasks, panel.perfect_full
            ));
            out.push_str(&format!(
                "{:>4} {:>7} {:>9} {:>9} {:>9} {:>7}\n",
                "k", "count", "perfect", "bleu-a", "lev", "nopred"
            ));
            for row in &panel.rows {
                out.push_str(&format!(
                    "{:>4} {:>7} {:>9} {:>9} {:>9} {:>7}\n",
                    row.k,
                    row.count,
                    fmt_opt(row.perfect_rate),
                    fmt_opt(row.bleu_a_mean),
                    fmt_opt(row.levenshtein_mean),
                    row.no_prediction
                ));
            }
        }
        out.push_str("\n-- confidence (perfect vs wrong) --\n");
        out.push_str(&format!(
            "{:>4} {:>9} {:>9} {:>9} {:>9}\n",
            "k", "perf-n", "perf-conf", "wrong-n", "wrong-conf"
        ));
        for row in &eval.confidence {
            out.push_str(&format!(
                "{:>4} {:>9} {:>9} {:>9} {:>9}\n",
                row.k,
                row.perfect_count,
                fmt_opt(row.perfect_mean_confidence),
                row.wrong_count,
                fmt_opt(row.wrong_mean_confidence)
            ));
        }
        out.push_str("\n-- POS accuracy --\n");
        for row in &eval.pos {
            out.push_str(&format!(
                "{:>5} {:>9} {:>9} {:>9}\n",
                row.category,
                row.positions,
                row.correct,
                fmt_opt(row.rate)
            ));
        }
    }
    for block in &report.comparisons {
        let s = &block.stats;
        out.push_str(&format!(
            "\n== comparison [{}] {} vs {} ==\n",
            block.scope, s.model_a, s.model_b
        ));
        out.push_str(&format!(
            "shared={} onlyA={} onlyB={} (union {})\n",
            fmt_opt(s.shared),
            fmt_opt(s.only_a),
            fmt_opt(s.only_b),
            s.union_size
        ));
        out.push_str(&format!(
            "McNemar chi2={} OR={} (b={}, c={})\n",
            fmt_opt(s.mcnemar_chi_square),
            fmt_opt(s.odds_ratio),
            s.discordant_b,
            s.discordant_c
        ));
    }
    out
}
