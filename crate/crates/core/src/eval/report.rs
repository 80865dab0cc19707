use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use super::metrics::{precision_at_n, recall_at_n, spearman_top_n};
use super::truth::GroundTruthSet;
use crate::error::{Error, Result};
use crate::ingest::TimeWindow;
use crate::solver::RankingTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Spearman,
    Recall,
    Precision,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Spearman => "spearman",
            Metric::Recall => "recall",
            Metric::Precision => "precision",
        })
    }
}

impl std::str::FromStr for Metric {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "spearman" => Ok(Metric::Spearman),
            "recall" => Ok(Metric::Recall),
            "precision" => Ok(Metric::Precision),
            other => Err(format!("unknown metric {other:?}")),
        }
    }
}

/// One (metric, subject, reference, N) cell. `reference` is the second
/// ranking for Spearman and the truth-set label otherwise. Cells that could
/// not be computed carry `error` instead of `value`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub metric: Metric,
    pub n: usize,
    pub subject: String,
    pub reference: String,
    pub value: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct EvalReport {
    pub window: Option<TimeWindow>,
    pub methods: Vec<String>,
    pub n_values: Vec<usize>,
    pub rows: Vec<EvalRow>,
}

/// Label used for a ranking inside reports: `Method/class`, suffixed with
/// its position when the same label occurs twice.
pub fn ranking_labels(rankings: &[RankingTable]) -> Vec<String> {
    let base: Vec<String> = rankings.iter().map(|r| format!("{}/{}", r.method, r.class)).collect();
    base.iter()
        .enumerate()
        .map(|(i, b)| {
            if base.iter().filter(|x| *x == b).count() > 1 {
                format!("{b}#{}", i + 1)
            } else {
                b.clone()
            }
        })
        .collect()
}

/// Every requested metric over every applicable pairing and cutoff:
/// Spearman for each ordered pair `(i, j)` with `i < j` (the earlier table
/// anchors the top-N), recall and precision for each ranking/truth pair.
pub fn compare_report(
    rankings: &[RankingTable],
    truths: &[GroundTruthSet],
    metrics: &[Metric],
    n_values: &[usize],
) -> Result<EvalReport> {
    if n_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingCutoffs);
    }
    let labels = ranking_labels(rankings);
    let mut report = EvalReport {
        window: None,
        methods: labels.clone(),
        n_values: n_values.to_vec(),
        rows: Vec::new(),
    };
    let mut push = |metric, n, subject: &str, reference: &str, value: Result<f64>| {
        let (value, error) = match value {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(e.to_string())),
        };
        report.rows.push(EvalRow {
            metric,
            n,
            subject: subject.to_string(),
            reference: reference.to_string(),
            value,
            error,
        });
    };

    for &metric in metrics {
        match metric {
            Metric::Spearman => {
                for i in 0..rankings.len() {
                    for j in i + 1..rankings.len() {
                        for &n in n_values {
                            push(metric, n, &labels[i], &labels[j], spearman_top_n(&rankings[i], &rankings[j], n));
                        }
                    }
                }
            }
            Metric::Recall | Metric::Precision => {
                for (i, ranking) in rankings.iter().enumerate() {
                    for truth in truths {
                        for &n in n_values {
                            let v = if metric == Metric::Recall {
                                recall_at_n(ranking, truth, n)
                            } else {
                                precision_at_n(ranking, truth, n)
                            };
                            push(metric, n, &labels[i], &truth.label, v);
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

impl EvalReport {
    pub fn errors(&self) -> impl Iterator<Item = &EvalRow> {
        self.rows.iter().filter(|r| r.error.is_some())
    }

    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "metric\tn\tsubject\treference\tvalue\terror")?;
        for r in &self.rows {
            let value = r.value.map(|v| format!("{v:.6}")).unwrap_or_else(|| "NA".into());
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.metric,
                r.n,
                r.subject,
                r.reference,
                value,
                r.error.as_deref().unwrap_or("")
            )?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Recall and precision cells as plot-ready CSV, one point per row.
    pub fn write_curves_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["metric", "method", "truth", "n", "value"]).map_err(csv_err)?;
        for r in self.rows.iter().filter(|r| r.metric != Metric::Spearman) {
            let Some(v) = r.value else { continue };
            w.write_record([
                r.metric.to_string(),
                r.subject.clone(),
                r.reference.clone(),
                r.n.to_string(),
                format!("{v:.6}"),
            ])
            .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}
