//! Dataset generation: links comments to code context, splits comments
//! into sentences, emits masked pre-training instances and fine-tuning
//! completion tasks, and assigns origin-level corpus splits.
//!
//! All randomness is drawn from ChaCha8 streams derived from the run
//! seed, with a per-origin stream so output does not depend on
//! processing order.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::corpus::{extract_inner_comments, MethodInstance};
use crate::error::{Error, Result};
use crate::token::{self, mask_sentinel, SEP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TaskKind {
    Javadoc,
    Inner,
}

impl TaskKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TaskKind::Javadoc => "javadoc",
            TaskKind::Inner => "inner",
        }
    }
}

/// One completion unit: context tokens plus a visible comment prefix and
/// a masked target suffix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionTask {
    pub id: String,
    pub task_kind: TaskKind,
    pub context: Vec<String>,
    pub preceding: Vec<String>,
    pub prefix: Vec<String>,
    pub target: Vec<String>,
    pub sentence_index: usize,
    pub variant_index: usize,
    pub origin: String,
}

/// Pre-training instance: comment positions replaced by distinct mask
/// sentinels, paired with the masked-out tokens.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PretrainInstance {
    pub input: Vec<String>,
    pub target: Vec<String>,
    pub origin: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitLabel {
    #[serde(rename = "pretrain")]
    Pretrain,
    #[serde(rename = "finetune-train")]
    FinetuneTrain,
    #[serde(rename = "finetune-eval")]
    FinetuneEval,
    #[serde(rename = "finetune-test")]
    FinetuneTest,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitRatios {
    /// Fraction of origins reserved for pre-training.
    pub pretrain: f64,
    pub train: f64,
    pub eval: f64,
    pub test: f64,
}

impl Default for SplitRatios {
    fn default() -> Self {
        SplitRatios {
            pretrain: 2.0 / 3.0,
            train: 0.8,
            eval: 0.1,
            test: 0.1,
        }
    }
}

/// Origin id to split label; every origin gets exactly one label.
pub type SplitAssignment = BTreeMap<String, SplitLabel>;

/// ChaCha8 stream derived from (seed, origin, purpose) so per-origin
/// output is independent of scheduling order.
fn origin_rng(seed: u64, origin: &str, purpose: &str) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update(purpose.as_bytes());
    hasher.update(origin.as_bytes());
    let digest = hasher.finalize();
    let sub = u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"));
    ChaCha8Rng::seed_from_u64(sub)
}

/// Largest-remainder apportionment of `n` items over `ratios`;
/// ties broken by ratio position.
fn largest_remainder(n: usize, ratios: &[f64]) -> Vec<usize> {
    let quotas: Vec<f64> = ratios.iter().map(|r| r * n as f64).collect();
    let mut counts: Vec<usize> = quotas.iter().map(|q| q.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..ratios.len()).collect();
    order.sort_by(|&a, &b| {
        let fa = quotas[a] - quotas[a].floor();
        let fb = quotas[b] - quotas[b].floor();
        fb.partial_cmp(&fa).unwrap().then(a.cmp(&b))
    });
    for i in 0..n - assigned {
        counts[order[i % ratios.len()]] += 1;
    }
    counts
}

/// Seeded shuffle of origin ids, contiguous slicing by ratio. All tasks
/// derived from one origin share its label.
pub fn split_corpus(origin_ids: &[String], ratios: &SplitRatios, seed: u64) -> SplitAssignment {
    let mut ids: Vec<&String> = origin_ids.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ids.shuffle(&mut rng);

    let outer = largest_remainder(ids.len(), &[ratios.pretrain, 1.0 - ratios.pretrain]);
    let (pre_ids, fine_ids) = ids.split_at(outer[0]);
    let inner = largest_remainder(fine_ids.len(), &[ratios.train, ratios.eval, ratios.test]);

    let mut assignment = SplitAssignment::new();
    for id in pre_ids {
        assignment.insert((*id).clone(), SplitLabel::Pretrain);
    }
    let mut rest = fine_ids.iter();
    for (count, label) in [
        (inner[0], SplitLabel::FinetuneTrain),
        (inner[1], SplitLabel::FinetuneEval),
        (inner[2], SplitLabel::FinetuneTest),
    ] {
        for id in rest.by_ref().take(count) {
            assignment.insert((*id).clone(), label);
        }
    }
    assignment
}

/// Context and comment tokens for a Javadoc instance, or None when the
/// instance has no Javadoc. Serialized order is context, <sep>, comment,
/// <sep>.
pub fn link_javadoc_context(instance: &MethodInstance) -> Option<(Vec<String>, Vec<String>)> {
    let javadoc = instance.javadoc.as_deref()?;
    Some((
        token::tokenize_texts(&instance.method_code),
        token::tokenize_texts(javadoc),
    ))
}

/// Code context for an inner comment: lines expanded above and below the
/// comment until a blank line, a closing-brace line, or another comment;
/// the boundary line is excluded and expansion never leaves the method.
pub fn link_inner_context(instance: &MethodInstance, comment_index: usize) -> Vec<String> {
    let comment = &instance.inner_comments[comment_index];
    let lines: Vec<&str> = instance.method_code.lines().collect();
    // Raw comment spans mark "another comment" boundaries, including
    // comments that were filtered out of the instance.
    let raw_spans: Vec<(usize, usize)> = extract_inner_comments(&instance.method_code)
        .map(|cs| cs.iter().map(|c| (c.start_line, c.end_line)).collect())
        .unwrap_or_default();
    let in_subject = |l: usize| l >= comment.start_line && l <= comment.end_line;
    let is_boundary = |l: usize| {
        let text = lines[l - 1];
        text.trim().is_empty()
            || text.trim_start().starts_with('}')
            || raw_spans
                .iter()
                .any(|&(s, e)| l >= s && l <= e && !in_subject(l))
    };

    let mut included: Vec<usize> = Vec::new();
    let mut l = comment.start_line;
    while l > 1 {
        l -= 1;
        if is_boundary(l) {
            break;
        }
        included.push(l);
    }
    included.reverse();
    let mut l = comment.end_line;
    while l < lines.len() {
        l += 1;
        if is_boundary(l) {
            break;
        }
        included.push(l);
    }

    let mut tokens = Vec::new();
    for l in included {
        tokens.extend(token::tokenize_texts(lines[l - 1]));
    }
    tokens
}

const ABBREVIATIONS: [&str; 5] = ["etc", "al", "vs", "eg", "ie"];

fn is_abbreviation(word: &str) -> bool {
    word.len() == 1 && word.chars().all(|c| c.is_ascii_alphabetic())
        || ABBREVIATIONS.contains(&word.to_ascii_lowercase().as_str())
}

/// Rule-based sentence splitting over a comment's tokens: a sentence
/// ends at '.', '!' or '?' followed by a capitalized word (or the end of
/// the comment); a Javadoc tag ('@' then a word) begins a new sentence;
/// single-letter and common abbreviations do not end a sentence.
pub fn split_sentences(comment: &[String]) -> Vec<Vec<String>> {
    let mut sentences: Vec<Vec<String>> = Vec::new();
    let mut current: Vec<String> = Vec::new();
    let mut last_word: Option<String> = None;

    for (i, tok) in comment.iter().enumerate() {
        let next = comment.get(i + 1);
        if tok == "@" && !current.is_empty() {
            if next.is_some_and(|n| n.chars().all(|c| c.is_ascii_alphanumeric())) {
                sentences.push(std::mem::take(&mut current));
                last_word = None;
            }
        }
        current.push(tok.clone());
        if tok.chars().all(|c| c.is_ascii_alphanumeric()) {
            last_word = Some(tok.clone());
        }
        if matches!(tok.as_str(), "." | "!" | "?") {
            let guard = last_word.as_deref().is_some_and(is_abbreviation);
            let capital_next = next
                .and_then(|n| n.chars().next())
                .is_some_and(|c| c.is_ascii_uppercase());
            if !guard && (next.is_none() || capital_next) {
                sentences.push(std::mem::take(&mut current));
                last_word = None;
            }
        }
    }
    if !current.is_empty() {
        sentences.push(current);
    }
    sentences
}

/// Emit min(5, n-1) completion tasks for sentence `sentence_index`, with
/// distinct visible-prefix lengths drawn uniformly without replacement
/// from [1, n-1]. Later sentences never appear in the task.
#[allow(clippy::too_many_arguments)]
pub fn generate_masked_variants(
    sentences: &[Vec<String>],
    sentence_index: usize,
    context: &[String],
    task_kind: TaskKind,
    origin: &str,
    rng: &mut ChaCha8Rng,
) -> Vec<CompletionTask> {
    let sentence = &sentences[sentence_index];
    let n = sentence.len();
    if n < 2 {
        return Vec::new();
    }
    let count = 5.min(n - 1);
    let mut cut_points: Vec<usize> = (1..n).collect();
    cut_points.shuffle(rng);
    cut_points.truncate(count);
    cut_points.sort_unstable();

    let preceding: Vec<String> = sentences[..sentence_index]
        .iter()
        .flat_map(|s| s.iter().cloned())
        .collect();

    cut_points
        .into_iter()
        .enumerate()
        .map(|(variant_index, m)| CompletionTask {
            id: format!(
                "{origin}|{}|s{sentence_index}|v{variant_index}",
                task_kind.as_str()
            ),
            task_kind,
            context: context.to_vec(),
            preceding: preceding.clone(),
            prefix: sentence[..m].to_vec(),
            target: sentence[m..].to_vec(),
            sentence_index,
            variant_index,
            origin: origin.to_string(),
        })
        .collect()
}

/// Round-half-up share of `len` at `rate`, minimum 1 for non-empty input.
fn masked_count(len: usize, rate: f64) -> usize {
    if len == 0 {
        return 0;
    }
    let rounded = (rate * len as f64 + 0.5).floor() as usize;
    rounded.max(1)
}

/// Build the masked pre-training instance for one method: code tokens
/// untouched, each comment masked independently at `mask_rate`.
pub fn generate_pretrain_instance(
    instance: &MethodInstance,
    mask_rate: f64,
    rng: &mut ChaCha8Rng,
) -> Option<PretrainInstance> {
    if !instance.has_comments() {
        return None;
    }
    let mut input = token::tokenize_texts(&instance.method_code);
    input.push(SEP.to_string());
    let mut target = Vec::new();
    let mut mask_index = 0;

    for text in instance.comment_texts() {
        let tokens = token::tokenize_texts(text);
        let k = masked_count(tokens.len(), mask_rate);
        let mut positions: Vec<usize> = (0..tokens.len()).collect();
        positions.shuffle(rng);
        positions.truncate(k);
        positions.sort_unstable();

        let mut next_masked = positions.iter().peekable();
        for (pos, tok) in tokens.iter().enumerate() {
            if next_masked.peek() == Some(&&pos) {
                next_masked.next();
                let sentinel = mask_sentinel(mask_index);
                mask_index += 1;
                input.push(sentinel.clone());
                target.push(sentinel);
                target.push(tok.clone());
            } else {
                input.push(tok.clone());
            }
        }
        input.push(SEP.to_string());
    }

    Some(PretrainInstance {
        input,
        target,
        origin: instance.id.clone(),
    })
}

/// Per-kind per-split task counts for the dataset metadata sidecar.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitCounts {
    pub train: usize,
    pub eval: usize,
    pub test: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatasetMetadata {
    pub seed: u64,
    pub ratios: SplitRatios,
    pub corpus_fingerprint: String,
    pub pretrain_instances: usize,
    pub counts: BTreeMap<String, SplitCounts>,
    pub totals: SplitCounts,
}

/// A fully generated dataset, ready to serialize.
pub struct Dataset {
    pub assignment: SplitAssignment,
    pub pretrain: Vec<PretrainInstance>,
    pub train: Vec<CompletionTask>,
    pub eval: Vec<CompletionTask>,
    pub test: Vec<CompletionTask>,
    pub metadata: DatasetMetadata,
}

/// Generate every completion task for one instance: one Javadoc task
/// stream plus one inner stream with a running sentence index across the
/// instance's inner comments.
pub fn generate_tasks(instance: &MethodInstance, seed: u64) -> Vec<CompletionTask> {
    let mut rng = origin_rng(seed, &instance.id, "mask");
    let mut tasks = Vec::new();

    if let Some((context, comment)) = link_javadoc_context(instance) {
        let sentences = split_sentences(&comment);
        for i in 0..sentences.len() {
            tasks.extend(generate_masked_variants(
                &sentences,
                i,
                &context,
                TaskKind::Javadoc,
                &instance.id,
                &mut rng,
            ));
        }
    }

    let mut inner_sentences: Vec<Vec<String>> = Vec::new();
    let mut contexts: Vec<Vec<String>> = Vec::new();
    for (ci, comment) in instance.inner_comments.iter().enumerate() {
        let context = link_inner_context(instance, ci);
        let tokens = token::tokenize_texts(&comment.text);
        for sentence in split_sentences(&tokens) {
            inner_sentences.push(sentence);
            contexts.push(context.clone());
        }
    }
    for i in 0..inner_sentences.len() {
        tasks.extend(generate_masked_variants(
            &inner_sentences,
            i,
            &contexts[i],
            TaskKind::Inner,
            &instance.id,
            &mut rng,
        ));
    }
    tasks
}

/// Build the full dataset: origin-level splits, pre-training instances
/// for the pretrain partition, completion tasks for the fine-tune
/// partitions.
pub fn build_dataset(
    corpus: &[MethodInstance],
    seed: u64,
    ratios: &SplitRatios,
    corpus_fingerprint: String,
) -> Dataset {
    let ids: Vec<String> = corpus.iter().map(|i| i.id.clone()).collect();
    let assignment = split_corpus(&ids, ratios, seed);

    let mut pretrain = Vec::new();
    let mut train = Vec::new();
    let mut eval = Vec::new();
    let mut test = Vec::new();

    for instance in corpus {
        match assignment[&instance.id] {
            SplitLabel::Pretrain => {
                let mut rng = origin_rng(seed, &instance.id, "pretrain");
                pretrain.extend(generate_pretrain_instance(instance, 0.15, &mut rng));
            }
            label => {
                let bucket = match label {
                    SplitLabel::FinetuneTrain => &mut train,
                    SplitLabel::FinetuneEval => &mut eval,
                    SplitLabel::FinetuneTest => &mut test,
                    SplitLabel::Pretrain => unreachable!(),
                };
                bucket.extend(generate_tasks(instance, seed));
            }
        }
    }

    let mut counts: BTreeMap<String, SplitCounts> = BTreeMap::new();
    for kind in [TaskKind::Javadoc, TaskKind::Inner] {
        counts.insert(
            kind.as_str().to_string(),
            SplitCounts {
                train: train.iter().filter(|t| t.task_kind == kind).count(),
                eval: eval.iter().filter(|t| t.task_kind == kind).count(),
                test: test.iter().filter(|t| t.task_kind == kind).count(),
            },
        );
    }
    let metadata = DatasetMetadata {
        seed,
        ratios: *ratios,
        corpus_fingerprint,
        pretrain_instances: pretrain.len(),
        totals: SplitCounts {
            train: train.len(),
            eval: eval.len(),
            test: test.len(),
        },
        counts,
    };

    Dataset {
        assignment,
        pretrain,
        train,
        eval,
        test,
        metadata,
    }
}

fn write_jsonl<T: Serialize>(path: &Path, items: &[T]) -> Result<()> {
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    for item in items {
        let line = serde_json::to_string(item)
            .map_err(|e| Error::Internal(format!("serialize record: {e}")))?;
        file.write_all(line.as_bytes())
            .and_then(|_| file.write_all(b"\n"))
            .map_err(|e| Error::io(path, e))?;
    }
    Ok(())
}

impl Dataset {
    pub fn write(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        write_jsonl(&dir.join("pretrain.jsonl"), &self.pretrain)?;
        write_jsonl(&dir.join("tasks-train.jsonl"), &self.train)?;
        write_jsonl(&dir.join("tasks-eval.jsonl"), &self.eval)?;
        write_jsonl(&dir.join("tasks-test.jsonl"), &self.test)?;
        let splits = serde_json::to_string_pretty(&self.assignment)
            .map_err(|e| Error::Internal(e.to_string()))?;
        fs::write(dir.join("splits.json"), splits + "\n")
            .map_err(|e| Error::io(dir.join("splits.json"), e))?;
        let meta = serde_json::to_string_pretty(&self.metadata)
            .map_err(|e| Error::Internal(e.to_string()))?;
        fs::write(dir.join("metadata.json"), meta + "\n")
            .map_err(|e| Error::io(dir.join("metadata.json"), e))?;
        Ok(())
    }
}

/// Known fine-tune split names accepted by the CLI.
pub fn split_file(split: &str) -> Option<&'static str> {
    match split {
        "train" => Some("tasks-train.jsonl"),
        "eval" => Some("tasks-eval.jsonl"),
        "test" => Some("tasks-test.jsonl"),
        _ => None,
    }
}

/// Read one fine-tune split of a dataset directory.
pub fn read_tasks(dir: &Path, split: &str) -> Result<Vec<CompletionTask>> {
    let file = split_file(split)
        .ok_or_else(|| Error::Input(format!("unknown split '{split}' (train|eval|test)")))?;
    let path = dir.join(file);
    let reader = BufReader::new(fs::File::open(&path).map_err(|e| Error::io(&path, e))?);
    let mut tasks = Vec::new();
    for (num, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(&path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let task: CompletionTask = serde_json::from_str(&line).map_err(|e| Error::Schema {
            path: path.clone(),
            record: num + 1,
            message: e.to_string(),
        })?;
        tasks.push(task);
    }
    Ok(tasks)
}

pub fn read_metadata(dir: &Path) -> Result<DatasetMetadata> {
    let path = dir.join("metadata.json");
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Schema {
        path,
        record: 0,
        message: e.to_string(),
    })
}

/// Unmasked training sequences for the n-gram model: one sequence per
/// (origin, kind, sentence) with its preceding sentences, variants
/// deduplicated.
pub fn training_sequences(tasks: &[CompletionTask]) -> Vec<Vec<String>> {
    let mut seen: BTreeMap<(String, TaskKind, usize), Vec<String>> = BTreeMap::new();
    for task in tasks {
        seen.entry((task.origin.clone(), task.task_kind, task.sentence_index))
            .or_insert_with(|| {
                let mut seq = task.preceding.clone();
                seq.extend(task.prefix.iter().cloned());
                seq.extend(task.target.iter().cloned());
                seq
            });
    }
    seen.into_values().collect()
}
