use std::collections::HashSet;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::solver::{EntityClass, RankingTable};

/// A labelled set of entities considered "relevant", e.g. prize-winning
/// papers. Members keep file order; duplicates are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruthSet {
    pub class: EntityClass,
    pub label: String,
    members: Vec<String>,
}

impl GroundTruthSet {
    pub fn new<I, S>(class: EntityClass, label: impl Into<String>, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut seen = HashSet::new();
        let members: Vec<String> = members
            .into_iter()
            .map(Into::into)
            .filter(|m| seen.insert(m.clone()))
            .collect();
        if members.is_empty() {
            return Err(Error::EmptyTruth);
        }
        Ok(Self {
            class,
            label: label.into(),
            members,
        })
    }

    /// One identifier per line; `#` lines are comments. A `# class: paper`
    /// or `# class: institution` comment overrides `default_class`.
    pub fn from_reader<R: BufRead>(reader: R, default_class: EntityClass, label: impl Into<String>) -> Result<Self> {
        let mut class = default_class;
        let mut members = Vec::new();
        for line in reader.lines() {
            let line = line?;
            let line = line.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((key, value)) = comment.split_once([':', '=']) {
                    if key.trim() == "class" {
                        if let Ok(c) = value.parse() {
                            class = c;
                        }
                    }
                }
                continue;
            }
            if !line.is_empty() {
                members.push(line.to_string());
            }
        }
        Self::new(class, label, members)
    }

    pub fn members(&self) -> &[String] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members that do not appear in `ranking`.
    pub fn missing_from(&self, ranking: &RankingTable) -> Vec<&str> {
        let index = ranking.rank_index();
        self.members
            .iter()
            .filter(|m| !index.contains_key(m.as_str()))
            .map(String::as_str)
            .collect()
    }

    /// Copy without the members absent from `ranking`, for a denominator
    /// that only counts resolvable entities.
    pub fn restricted_to(&self, ranking: &RankingTable) -> Result<Self> {
        let index = ranking.rank_index();
        Self::new(
            self.class,
            self.label.clone(),
            self.members.iter().filter(|m| index.contains_key(m.as_str())).cloned(),
        )
    }
}
