//! Pipeline CLI: ingest → preprocess → build-dataset → train/sweep →
//! predict/export/import → evaluate/compare, plus an interactive
//! completion demo. Files are the only inter-stage state; all
//! randomness flows from --seed.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use comcomp::adapter;
use comcomp::corpus;
use comcomp::datasetgen::{self, SplitRatios};
use comcomp::error::{Error, Result};
use comcomp::metrics;
use comcomp::ngram::{self, NgramModel, Prediction, SweepTask};
use comcomp::preprocess::{self, PreprocessConfig};
use comcomp::token;

#[derive(Parser)]
#[command(name = "comcomp", version, about = "Comment completion study pipeline")]
struct Cli {
    /// Seed for every random choice in the pipeline.
    #[arg(long, global = true, env = "COMCOMP_SEED", default_value_t = 42)]
    seed: u64,

    /// Output format for report-style commands.
    #[arg(long, global = true, env = "COMCOMP_FORMAT", default_value = "text",
          value_parser = ["text", "machine"])]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SplitArg {
    /// Fine-tune split to operate on.
    #[arg(long, env = "COMCOMP_SPLIT", default_value = "test",
          value_parser = ["train", "eval", "test"])]
    split: String,
}

#[derive(Subcommand)]
enum Command {
    /// Load raw methods (a directory of .java files or a JSONL export)
    /// into a corpus file.
    Ingest { source: PathBuf, out: PathBuf },

    /// Filter and normalize a corpus; writes the surviving instances
    /// plus an attrition report sidecar.
    Preprocess {
        input: PathBuf,
        out: PathBuf,
        /// Maximum method length in tokens.
        #[arg(long, env = "COMCOMP_TOKEN_BUDGET", default_value_t = 256)]
        token_budget: usize,
    },

    /// Generate masked completion tasks and pretraining instances with
    /// origin-level splits.
    BuildDataset { corpus: PathBuf, out_dir: PathBuf },

    /// Train an n-gram model on the fine-tune train split.
    Train {
        dataset_dir: PathBuf,
        out: PathBuf,
        #[arg(long, env = "COMCOMP_ORDER", default_value_t = 5)]
        order: usize,
    },

    /// Train one model per order and rank them by full-sequence perfect
    /// predictions on the eval split.
    Sweep {
        dataset_dir: PathBuf,
        #[arg(long, env = "COMCOMP_ORDERS", default_value = "3,5,7", value_delimiter = ',')]
        orders: Vec<usize>,
        /// Optional JSON output for the sweep table.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Run a trained model over a split and write its predictions.
    Predict {
        model: PathBuf,
        dataset_dir: PathBuf,
        out: PathBuf,
        #[command(flatten)]
        split: SplitArg,
    },

    /// Export a split as prediction requests for an external model.
    ExportTasks {
        dataset_dir: PathBuf,
        out: PathBuf,
        #[command(flatten)]
        split: SplitArg,
    },

    /// Import external model outputs for a split, normalizing them into
    /// the local prediction format (total over the split).
    ImportPredictions {
        input: PathBuf,
        dataset_dir: PathBuf,
        out: PathBuf,
        #[command(flatten)]
        split: SplitArg,
    },

    /// Score one or two prediction files against a split.
    Evaluate {
        dataset_dir: PathBuf,
        /// One or two prediction files (with manifest sidecars).
        #[arg(required = true, num_args = 1..=2)]
        predictions: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        split: SplitArg,
    },

    /// Paired comparison of two prediction files (overlap, McNemar,
    /// odds ratio) plus their individual scores.
    Compare {
        dataset_dir: PathBuf,
        preds_a: PathBuf,
        preds_b: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        split: SplitArg,
    },

    /// Interactive demo: read comment prefixes from stdin and print the
    /// greedy continuation.
    Complete {
        model: PathBuf,
        /// Maximum number of tokens to predict per prefix.
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
}

/// Fingerprint sidecar written next to every predictions file.
#[derive(Serialize, Deserialize)]
struct PredictionManifest {
    count: usize,
    corpus_fingerprint: String,
    model: String,
    seed: u64,
}

fn manifest_path(predictions: &Path) -> PathBuf {
    predictions.with_extension("manifest.json")
}

fn write_json_pretty<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| Error::io(path, e))
}

fn write_predictions(
    path: &Path,
    predictions: &[Prediction],
    fingerprint: &str,
    label: &str,
    seed: u64,
) -> Result<()> {
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    for p in predictions {
        let line = serde_json::to_string(p).map_err(|e| Error::Internal(e.to_string()))?;
        file.write_all(line.as_bytes())
            .and_then(|_| file.write_all(b"\n"))
            .map_err(|e| Error::io(path, e))?;
    }
    write_json_pretty(
        &manifest_path(path),
        &PredictionManifest {
            count: predictions.len(),
            corpus_fingerprint: fingerprint.to_string(),
            model: label.to_string(),
            seed,
        },
    )
}

fn read_predictions(path: &Path) -> Result<(Vec<Prediction>, PredictionManifest)> {
    let reader = BufReader::new(fs::File::open(path).map_err(|e| Error::io(path, e))?);
    let mut predictions = Vec::new();
    for (num, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let p: Prediction = serde_json::from_str(&line).map_err(|e| Error::Schema {
            path: path.to_path_buf(),
            record: num + 1,
            message: e.to_string(),
        })?;
        predictions.push(p);
    }
    let mpath = manifest_path(path);
    let text = fs::read_to_string(&mpath).map_err(|e| Error::io(&mpath, e))?;
    let manifest: PredictionManifest = serde_json::from_str(&text).map_err(|e| Error::Schema {
        path: mpath,
        record: 0,
        message: e.to_string(),
    })?;
    Ok((predictions, manifest))
}

/// History the n-gram conditions on: earlier sentences plus the visible
/// prefix (the code context is ignored by design).
fn ngram_history(task: &datasetgen::CompletionTask) -> Vec<String> {
    let mut history = task.preceding.clone();
    history.extend(task.prefix.iter().cloned());
    history
}

fn run(cli: Cli) -> Result<()> {
    let Cli {
        seed,
        format,
        command,
    } = cli;
    match command {
        Command::Ingest { source, out } => {
            let outcome = corpus::load_corpus(&source)?;
            corpus::write_corpus(&out, &outcome.instances)?;
            println!(
                "ingested {} instances ({} records skipped) -> {}",
                outcome.instances.len(),
                outcome.skipped,
                out.display()
            );
        }

        Command::Preprocess {
            input,
            out,
            token_budget,
        } => {
            let instances = corpus::read_corpus(&input)?;
            let config = PreprocessConfig {
                token_budget,
                ..PreprocessConfig::default()
            };
            let (kept, report) = preprocess::run_pipeline(instances, &config);
            corpus::write_corpus(&out, &kept)?;
            let report_path = out.with_extension("report.json");
            write_json_pretty(&report_path, &report)?;
            println!(
                "kept {} of {} instances -> {} (report: {})",
                report.output,
                report.input,
                out.display(),
                report_path.display()
            );
        }

        Command::BuildDataset { corpus: path, out_dir } => {
            let instances = corpus::read_corpus(&path)?;
            let fingerprint = comcomp::file_fingerprint(&path)?;
            let dataset =
                datasetgen::build_dataset(&instances, seed, &SplitRatios::default(), fingerprint);
            dataset.write(&out_dir)?;
            println!(
                "dataset: {} pretrain, {} train / {} eval / {} test tasks -> {}",
                dataset.pretrain.len(),
                dataset.train.len(),
                dataset.eval.len(),
                dataset.test.len(),
                out_dir.display()
            );
        }

        Command::Train {
            dataset_dir,
            out,
            order,
        } => {
            let tasks = datasetgen::read_tasks(&dataset_dir, "train")?;
            let metadata = datasetgen::read_metadata(&dataset_dir)?;
            let sequences = datasetgen::training_sequences(&tasks);
            let model = NgramModel::train(&sequences, order, metadata.corpus_fingerprint)?;
            model.save(&out)?;
            println!(
                "trained {order}-gram on {} sequences ({} histories) -> {}",
                sequences.len(),
                model.history_count(),
                out.display()
            );
        }

        Command::Sweep {
            dataset_dir,
            orders,
            out,
        } => {
            let train = datasetgen::read_tasks(&dataset_dir, "train")?;
            let eval = datasetgen::read_tasks(&dataset_dir, "eval")?;
            let metadata = datasetgen::read_metadata(&dataset_dir)?;
            let sequences = datasetgen::training_sequences(&train);
            let eval_tasks: Vec<SweepTask> = eval
                .iter()
                .map(|t| SweepTask {
                    prefix: ngram_history(t),
                    target: t.target.clone(),
                })
                .collect();
            let result = ngram::sweep_orders(
                &sequences,
                &eval_tasks,
                &orders,
                &metadata.corpus_fingerprint,
            )?;
            println!("{:>6} {:>9} {:>9} {:>9}", "order", "evaluated", "perfect", "rate");
            for row in &result.rows {
                println!(
                    "{:>6} {:>9} {:>9} {:>9.4}",
                    row.order, row.evaluated, row.perfect, row.perfect_rate
                );
            }
            println!("chosen order: {}", result.best_order);
            if let Some(path) = out {
                write_json_pretty(&path, &result)?;
            }
        }

        Command::Predict {
            model,
            dataset_dir,
            out,
            split,
        } => {
            let model = NgramModel::load(&model)?;
            let metadata = datasetgen::read_metadata(&dataset_dir)?;
            if model.meta.corpus_fingerprint != metadata.corpus_fingerprint {
                return Err(Error::Input(format!(
                    "model was trained on a different corpus (model {}, dataset {})",
                    model.meta.corpus_fingerprint, metadata.corpus_fingerprint
                )));
            }
            let tasks = datasetgen::read_tasks(&dataset_dir, &split.split)?;
            let label = format!("{}-gram", model.order);
            let predictions: Vec<Prediction> = tasks
                .iter()
                .map(|t| model.predict_sequence(&t.id, &ngram_history(t), t.target.len(), &label))
                .collect();
            let abstained = predictions.iter().filter(|p| !p.is_ok()).count();
            write_predictions(&out, &predictions, &metadata.corpus_fingerprint, &label, seed)?;
            println!(
                "predicted {} tasks ({} no-prediction) -> {}",
                predictions.len(),
                abstained,
                out.display()
            );
        }

        Command::ExportTasks {
            dataset_dir,
            out,
            split,
        } => {
            let tasks = datasetgen::read_tasks(&dataset_dir, &split.split)?;
            let metadata = datasetgen::read_metadata(&dataset_dir)?;
            let n = adapter::export_tasks(&tasks, &metadata.corpus_fingerprint, &out)?;
            println!("exported {n} tasks -> {}", out.display());
        }

        Command::ImportPredictions {
            input,
            dataset_dir,
            out,
            split,
        } => {
            let tasks = datasetgen::read_tasks(&dataset_dir, &split.split)?;
            let metadata = datasetgen::read_metadata(&dataset_dir)?;
            let (predictions, stats) = adapter::import_predictions(&input, &tasks)?;
            let label = predictions
                .first()
                .map(|p| p.model.clone())
                .unwrap_or_else(|| "external".to_string());
            write_predictions(&out, &predictions, &metadata.corpus_fingerprint, &label, seed)?;
            println!(
                "imported {} predictions ({} missing, {} clamped, {} malformed skipped) -> {}",
                stats.imported,
                stats.missing,
                stats.clamped,
                stats.skipped_malformed,
                out.display()
            );
        }

        Command::Evaluate {
            dataset_dir,
            predictions,
            out,
            split,
        } => {
            evaluate(&format, &dataset_dir, &predictions, &out, &split.split)?;
        }

        Command::Compare {
            dataset_dir,
            preds_a,
            preds_b,
            out,
            split,
        } => {
            evaluate(&format, &dataset_dir, &[preds_a, preds_b], &out, &split.split)?;
        }

        Command::Complete { model, k } => {
            let model = NgramModel::load(&model)?;
            complete_loop(&model, k, &mut std::io::stdin().lock(), &mut std::io::stdout())?;
        }
    }
    Ok(())
}

fn evaluate(
    format: &str,
    dataset_dir: &Path,
    prediction_paths: &[PathBuf],
    out: &Path,
    split: &str,
) -> Result<()> {
    let tasks = datasetgen::read_tasks(dataset_dir, split)?;
    let metadata = datasetgen::read_metadata(dataset_dir)?;
    let mut models = Vec::new();
    for path in prediction_paths {
        let (predictions, manifest) = read_predictions(path)?;
        if manifest.corpus_fingerprint != metadata.corpus_fingerprint {
            return Err(Error::Input(format!(
                "predictions '{}' come from a different corpus (predictions {}, dataset {})",
                path.display(),
                manifest.corpus_fingerprint,
                metadata.corpus_fingerprint
            )));
        }
        models.push((manifest.model, predictions));
    }
    let report = metrics::build_report(&tasks, &models, split, &metadata.corpus_fingerprint)?;
    write_json_pretty(out, &report)?;
    if format == "machine" {
        println!(
            "{}",
            serde_json::to_string(&report).map_err(|e| Error::Internal(e.to_string()))?
        );
    } else {
        print!("{}", metrics::render_text(&report));
    }
    Ok(())
}

fn complete_loop(
    model: &NgramModel,
    k: usize,
    input: &mut impl BufRead,
    output: &mut impl Write,
) -> Result<()> {
    let write = |output: &mut dyn Write, text: &str| -> Result<()> {
        output
            .write_all(text.as_bytes())
            .and_then(|_| output.flush())
            .map_err(|e| Error::Internal(e.to_string()))
    };
    loop {
        write(output, "comment> ")?;
        let mut line = String::new();
        if input
            .read_line(&mut line)
            .map_err(|e| Error::Internal(e.to_string()))?
            == 0
        {
            write(output, "\n")?;
            return Ok(());
        }
        let prefix = token::tokenize(line.trim());
        if prefix.is_empty() {
            continue;
        }
        let mut history: Vec<String> = prefix.iter().map(|t| t.text.clone()).collect();
        let mut predicted = Vec::new();
        let mut log_prob_sum = 0.0;
        for _ in 0..k {
            match model.predict_next(&history) {
                Some((tok, prob)) => {
                    log_prob_sum += prob.ln();
                    history.push(tok.clone());
                    predicted.push(tok);
                }
                None => break,
            }
        }
        if predicted.is_empty() {
            write(output, "<no-prediction>\n")?;
        } else {
            let confidence = (log_prob_sum / predicted.len() as f64).exp();
            write(
                output,
                &format!("{}  (confidence {confidence:.4})\n", predicted.join(" ")),
            )?;
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code: u8 = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
