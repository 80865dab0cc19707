use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::config::SolverConfig;
use super::scores::{EntityClass, EntityScores};
use crate::error::{Error, Result};
use crate::ingest::TimeWindow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    /// PageRank on the heterogeneous paper/institution graph.
    IPRank,
    /// PageRank on the paper citation graph.
    PageRank,
    /// PageRank on the institution-to-institution projection.
    IRank,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::IPRank => "IPRank",
            Method::PageRank => "PageRank",
            Method::IRank => "IRank",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "iprank" => Ok(Method::IPRank),
            "pagerank" => Ok(Method::PageRank),
            "irank" => Ok(Method::IRank),
            other => Err(format!("unknown method {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankRow {
    pub rank: usize,
    pub id: String,
    pub score: f64,
}

/// Entities of one class ordered by descending score; ties broken by
/// ascending identifier. Ranks run 1..=n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingTable {
    pub class: EntityClass,
    pub method: Method,
    pub rows: Vec<RankRow>,
}

/// Provenance embedded in JSON exports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingMetadata {
    pub solver: SolverConfig,
    pub window: Option<TimeWindow>,
    pub iterations_used: usize,
    pub final_residual: f64,
    pub graph_nodes: usize,
    pub graph_edges: usize,
}

#[derive(Serialize)]
struct JsonExport<'a> {
    method: Method,
    class: EntityClass,
    metadata: &'a RankingMetadata,
    rows: &'a [RankRow],
}

pub fn rank(scores: &EntityScores, method: Method) -> RankingTable {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores.scores[b]
            .total_cmp(&scores.scores[a])
            .then_with(|| scores.ids[a].cmp(&scores.ids[b]))
    });
    RankingTable {
        class: scores.class,
        method,
        rows: order
            .into_iter()
            .enumerate()
            .map(|(k, i)| RankRow {
                rank: k + 1,
                id: scores.ids[i].clone(),
                score: scores.scores[i],
            })
            .collect(),
    }
}

impl RankingTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn top(&self, n: usize) -> &[RankRow] {
        &self.rows[..n.min(self.rows.len())]
    }

    pub fn rank_of(&self, id: &str) -> Option<usize> {
        self.rows.iter().find(|r| r.id == id).map(|r| r.rank)
    }

    pub fn rank_index(&self) -> HashMap<&str, usize> {
        self.rows.iter().map(|r| (r.id.as_str(), r.rank)).collect()
    }

    /// `#method=..<TAB>class=..` line, then `rank<TAB>id<TAB>score` rows with
    /// scores at 12 significant digits.
    pub fn write_tsv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "#method={}\tclass={}", self.method, self.class)?;
        for row in &self.rows {
            writeln!(out, "{}\t{}\t{:.11e}", row.rank, row.id, row.score)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_tsv<R: BufRead>(input: R) -> Result<Self> {
        let bad = |line: usize, message: String| Error::RankingTable { line, message };
        let mut method = None;
        let mut class = None;
        let mut rows = Vec::new();
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            let ln = i + 1;
            if let Some(meta) = line.strip_prefix('#') {
                for kv in meta.split('\t') {
                    match kv.split_once('=') {
                        Some(("method", v)) => method = Some(v.parse().map_err(|e| bad(ln, e))?),
                        Some(("class", v)) => class = Some(v.parse().map_err(|e| bad(ln, e))?),
                        _ => {}
                    }
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 3 {
                return Err(bad(ln, format!("expected rank<TAB>id<TAB>score, found {} fields", f.len())));
            }
            rows.push(RankRow {
                rank: f[0].parse().map_err(|e| bad(ln, format!("bad rank {:?}: {e}", f[0])))?,
                id: f[1].to_string(),
                score: f[2].parse().map_err(|e| bad(ln, format!("bad score {:?}: {e}", f[2])))?,
            });
        }
        Ok(Self {
            class: class.ok_or_else(|| bad(1, "missing class= metadata".into()))?,
            method: method.ok_or_else(|| bad(1, "missing method= metadata".into()))?,
            rows,
        })
    }

    pub fn to_json(&self, metadata: &RankingMetadata) -> Result<String> {
        Ok(serde_json::to_string_pretty(&JsonExport {
            method: self.method,
            class: self.class,
            metadata,
            rows: &self.rows,
        })?)
    }
}
