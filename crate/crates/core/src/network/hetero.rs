use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::csr::Csr;
use super::edgelist::{EdgeList, ListedEdge};
use super::operator::{StochasticOperator, WeightedAdjacency};
use crate::error::{Error, Result};
use crate::ingest::CorpusSlice;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Citation,
    Affiliation,
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeClass::Citation => "citation",
            EdgeClass::Affiliation => "affiliation",
        })
    }
}

impl std::str::FromStr for EdgeClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "citation" => Ok(EdgeClass::Citation),
            "affiliation" => Ok(EdgeClass::Affiliation),
            other => Err(format!("unknown edge class {other:?}")),
        }
    }
}

/// Relative weight of the two edge classes when a paper's walk probability
/// is split between its references and its institutions. The default gives
/// every out-edge the same weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassWeights {
    pub citation: f64,
    pub affiliation: f64,
}

impl Default for ClassWeights {
    fn default() -> Self {
        Self {
            citation: 1.0,
            affiliation: 1.0,
        }
    }
}

impl ClassWeights {
    pub fn weight(&self, class: EdgeClass) -> f64 {
        match class {
            EdgeClass::Citation => self.citation,
            EdgeClass::Affiliation => self.affiliation,
        }
    }
}

/// Paper/institution graph. Node indices are papers `[0, n_papers)` then
/// institutions `[n_papers, n_papers + n_institutions)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeteroGraph {
    n_papers: usize,
    n_institutions: usize,
    adj: Csr<EdgeClass>,
    paper_ids: Vec<String>,
    institution_names: Vec<String>,
    institution_canonical_ids: Vec<u32>,
    paper_index: HashMap<String, u32>,
    institution_index: HashMap<u32, u32>,
}

pub fn build_hetero_graph(slice: &CorpusSlice) -> Result<HeteroGraph> {
    let np = slice.n_papers();
    let ni = slice.n_institutions();
    let mut edges = Vec::with_capacity(slice.citation_edges.len() + 2 * slice.affiliation_edges.len());
    for &(p, q) in &slice.citation_edges {
        if p as usize >= np || q as usize >= np {
            return Err(Error::GraphInvariant(format!("citation edge ({p}, {q}) out of range")));
        }
        edges.push((p, q, EdgeClass::Citation));
    }
    let mut paper_has_inst = vec![false; np];
    let mut inst_has_paper = vec![false; ni];
    for &(p, i) in &slice.affiliation_edges {
        if p as usize >= np || i as usize >= ni {
            return Err(Error::GraphInvariant(format!("affiliation edge ({p}, {i}) out of range")));
        }
        paper_has_inst[p as usize] = true;
        inst_has_paper[i as usize] = true;
        let inode = (np + i as usize) as u32;
        edges.push((p, inode, EdgeClass::Affiliation));
        edges.push((inode, p, EdgeClass::Affiliation));
    }
    if let Some(p) = paper_has_inst.iter().position(|&b| !b) {
        return Err(Error::UnaffiliatedPaper(slice.paper_ids[p].clone()));
    }
    if let Some(i) = inst_has_paper.iter().position(|&b| !b) {
        return Err(Error::GraphInvariant(format!(
            "institution {:?} has no paper",
            slice.institutions[i].name
        )));
    }

    let graph = HeteroGraph {
        n_papers: np,
        n_institutions: ni,
        adj: Csr::from_edges(np + ni, &edges),
        paper_ids: slice.paper_ids.clone(),
        institution_names: slice.institutions.iter().map(|i| i.name.clone()).collect(),
        institution_canonical_ids: slice.institutions.iter().map(|i| i.canonical_id).collect(),
        paper_index: slice
            .paper_ids
            .iter()
            .enumerate()
            .map(|(k, id)| (id.clone(), k as u32))
            .collect(),
        institution_index: slice
            .institutions
            .iter()
            .enumerate()
            .map(|(k, i)| (i.canonical_id, (np + k) as u32))
            .collect(),
    };
    graph.check_invariants()?;
    Ok(graph)
}

impl HeteroGraph {
    pub fn n_papers(&self) -> usize {
        self.n_papers
    }

    pub fn n_institutions(&self) -> usize {
        self.n_institutions
    }

    pub fn node_count(&self) -> usize {
        self.n_papers + self.n_institutions
    }

    pub fn edge_count(&self) -> usize {
        self.adj.edge_count()
    }

    pub fn is_paper(&self, node: usize) -> bool {
        node < self.n_papers
    }

    pub fn paper_ids(&self) -> &[String] {
        &self.paper_ids
    }

    pub fn institution_names(&self) -> &[String] {
        &self.institution_names
    }

    pub fn institution_canonical_ids(&self) -> &[u32] {
        &self.institution_canonical_ids
    }

    pub fn paper_node(&self, paper_id: &str) -> Option<usize> {
        self.paper_index.get(paper_id).map(|&u| u as usize)
    }

    pub fn institution_node(&self, canonical_id: u32) -> Option<usize> {
        self.institution_index.get(&canonical_id).map(|&u| u as usize)
    }

    /// Display label of a node: paper id or institution name.
    pub fn label(&self, node: usize) -> &str {
        if self.is_paper(node) {
            &self.paper_ids[node]
        } else {
            &self.institution_names[node - self.n_papers]
        }
    }

    pub fn out_neighbors(&self, node: usize) -> &[u32] {
        self.adj.targets(node)
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, EdgeClass)> + '_ {
        self.adj.edges().map(|(u, v, &c)| (u, v, c))
    }

    pub fn count_edges(&self, class: EdgeClass) -> usize {
        self.edges().filter(|e| e.2 == class).count()
    }

    /// Checks block purity, affiliation symmetry and the absence of
    /// dangling nodes.
    pub fn check_invariants(&self) -> Result<()> {
        let np = self.n_papers as u32;
        for (u, v, class) in self.edges() {
            let ok = match class {
                EdgeClass::Citation => u < np && v < np,
                EdgeClass::Affiliation => (u < np) != (v < np),
            };
            if !ok {
                return Err(Error::GraphInvariant(format!("{class} edge {u}->{v} crosses blocks")));
            }
            if class == EdgeClass::Affiliation && !self.adj.has_edge(v as usize, u) {
                return Err(Error::GraphInvariant(format!("affiliation edge {u}->{v} has no reverse")));
            }
        }
        if let Some(u) = (0..self.node_count()).find(|&u| self.adj.degree(u) == 0) {
            return Err(Error::GraphInvariant(format!("node {u} is dangling")));
        }
        Ok(())
    }

    /// Uniform transition over all out-edges of each node.
    pub fn transition_operator(&self) -> StochasticOperator {
        StochasticOperator::from_adjacency(self)
    }

    pub fn transition_operator_weighted(&self, weights: ClassWeights) -> StochasticOperator {
        StochasticOperator::from_adjacency(&Weighted {
            graph: self,
            weights,
        })
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n_papers: self.n_papers,
            n_institutions: self.n_institutions,
            edges: self
                .edges()
                .map(|(src, dst, class)| ListedEdge {
                    src,
                    dst,
                    class,
                    weight: 1.0,
                })
                .collect(),
        }
    }
}

impl WeightedAdjacency for HeteroGraph {
    fn node_count(&self) -> usize {
        HeteroGraph::node_count(self)
    }

    fn out_edges(&self, u: usize) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.adj.targets(u).iter().map(|&v| (v, 1.0))
    }
}

struct Weighted<'a> {
    graph: &'a HeteroGraph,
    weights: ClassWeights,
}

impl WeightedAdjacency for Weighted<'_> {
    fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    fn out_edges(&self, u: usize) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.graph.adj.row(u).map(|(v, &c)| (v, self.weights.weight(c)))
    }
}
