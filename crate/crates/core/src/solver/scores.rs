use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use super::power::ScoreVector;
use crate::error::{Error, Result};
use crate::network::{CitationGraph, HeteroGraph, InstitutionGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntityClass {
    Paper,
    Institution,
}

impl fmt::Display for EntityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntityClass::Paper => "paper",
            EntityClass::Institution => "institution",
        })
    }
}

impl std::str::FromStr for EntityClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "paper" | "papers" => Ok(EntityClass::Paper),
            "institution" | "institutions" => Ok(EntityClass::Institution),
            other => Err(format!("unknown entity class {other:?}")),
        }
    }
}

/// Scores of one entity class, keyed by entity identifier (paper id or
/// canonical institution name).
#[derive(Debug, Clone, PartialEq)]
pub struct EntityScores {
    pub class: EntityClass,
    pub ids: Vec<String>,
    pub scores: Vec<f64>,
}

impl EntityScores {
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.scores.iter().sum()
    }

    pub fn get(&self, id: &str) -> Option<f64> {
        self.ids.iter().position(|x| x == id).map(|k| self.scores[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.ids.iter().map(String::as_str).zip(self.scores.iter().copied())
    }
}

/// Splits joint scores into paper and institution views by index range.
/// Scores stay on the joint scale.
pub fn split_scores(pr: &ScoreVector, graph: &HeteroGraph) -> Result<(EntityScores, EntityScores)> {
    if pr.len() != graph.node_count() {
        return Err(Error::LengthMismatch {
            expected: graph.node_count(),
            actual: pr.len(),
        });
    }
    let (papers, institutions) = pr.scores.split_at(graph.n_papers());
    Ok((
        EntityScores {
            class: EntityClass::Paper,
            ids: graph.paper_ids().to_vec(),
            scores: papers.to_vec(),
        },
        EntityScores {
            class: EntityClass::Institution,
            ids: graph.institution_names().to_vec(),
            scores: institutions.to_vec(),
        },
    ))
}

pub fn citation_scores(pr: &ScoreVector, graph: &CitationGraph) -> Result<EntityScores> {
    if pr.len() != graph.node_count() {
        return Err(Error::LengthMismatch {
            expected: graph.node_count(),
            actual: pr.len(),
        });
    }
    Ok(EntityScores {
        class: EntityClass::Paper,
        ids: graph.paper_ids().to_vec(),
        scores: pr.scores.clone(),
    })
}

pub fn institution_scores(pr: &ScoreVector, graph: &InstitutionGraph) -> Result<EntityScores> {
    if pr.len() != graph.node_count() {
        return Err(Error::LengthMismatch {
            expected: graph.node_count(),
            actual: pr.len(),
        });
    }
    Ok(EntityScores {
        class: EntityClass::Institution,
        ids: graph.names().to_vec(),
        scores: pr.scores.clone(),
    })
}

/// Source institution -> target institution. Unmapped names are identity.
/// Must be idempotent: no target may itself be remapped elsewhere.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MergeMap {
    map: BTreeMap<String, String>,
}

impl MergeMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, source: impl Into<String>, target: impl Into<String>) {
        self.map.insert(source.into(), target.into());
    }

    pub fn target<'a>(&'a self, source: &'a str) -> &'a str {
        self.map.get(source).map(String::as_str).unwrap_or(source)
    }

    pub fn validate(&self) -> Result<()> {
        for (source, target) in &self.map {
            if let Some(next) = self.map.get(target) {
                if next != target {
                    return Err(Error::ChainedMerge(format!(
                        "{source:?} -> {target:?} -> {next:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Reads `source<TAB>target` lines; `#` comments and blank lines skipped.
    pub fn from_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut m = Self::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (s, t) = line.split_once('\t').ok_or_else(|| Error::AliasTable {
                line: i + 1,
                message: "expected source<TAB>target".into(),
            })?;
            m.insert(s.trim(), t.trim());
        }
        m.validate()?;
        Ok(m)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Sums the scores of all institutions mapped onto the same target. Output
/// order is the first appearance of each target; total mass is preserved.
pub fn merge_institution_scores(scores: &EntityScores, merge: &MergeMap) -> Result<EntityScores> {
    merge.validate()?;
    let mut out = EntityScores {
        class: scores.class,
        ids: Vec::new(),
        scores: Vec::new(),
    };
    let mut slot: HashMap<&str, usize> = HashMap::new();
    for (id, s) in scores.iter() {
        let target = merge.target(id);
        match slot.get(target) {
            Some(&k) => out.scores[k] += s,
            None => {
                slot.insert(target, out.ids.len());
                out.ids.push(target.to_string());
                out.scores.push(s);
            }
        }
    }
    Ok(out)
}
