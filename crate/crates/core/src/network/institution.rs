use std::collections::HashMap;

use super::csr::Csr;
use super::edgelist::{EdgeList, ListedEdge};
use super::hetero::EdgeClass;
use super::operator::{StochasticOperator, WeightedAdjacency};
use crate::ingest::CorpusSlice;

/// Institution-to-institution citation graph. The weight of `u -> v` is the
/// number of citing/cited paper pairs signed by `u` and `v` respectively;
/// self-edges are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct InstitutionGraph {
    adj: Csr<u64>,
    names: Vec<String>,
    canonical_ids: Vec<u32>,
    index: HashMap<u32, u32>,
}

pub fn project_institution_graph(slice: &CorpusSlice) -> InstitutionGraph {
    let by_paper = slice.institutions_by_paper();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for &(p, q) in &slice.citation_edges {
        for &u in &by_paper[p as usize] {
            for &v in &by_paper[q as usize] {
                pairs.push((u, v));
            }
        }
    }
    pairs.sort_unstable();
    let mut edges: Vec<(u32, u32, u64)> = Vec::new();
    for (u, v) in pairs {
        match edges.last_mut() {
            Some(last) if last.0 == u && last.1 == v => last.2 += 1,
            _ => edges.push((u, v, 1)),
        }
    }
    InstitutionGraph {
        adj: Csr::from_edges(slice.n_institutions(), &edges),
        names: slice.institutions.iter().map(|i| i.name.clone()).collect(),
        canonical_ids: slice.institutions.iter().map(|i| i.canonical_id).collect(),
        index: slice
            .institutions
            .iter()
            .enumerate()
            .map(|(k, i)| (i.canonical_id, k as u32))
            .collect(),
    }
}

impl InstitutionGraph {
    pub fn node_count(&self) -> usize {
        self.adj.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.edge_count()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn canonical_ids(&self) -> &[u32] {
        &self.canonical_ids
    }

    pub fn node(&self, canonical_id: u32) -> Option<usize> {
        self.index.get(&canonical_id).map(|&u| u as usize)
    }

    pub fn weight(&self, u: usize, v: usize) -> u64 {
        let t = self.adj.targets(u);
        t.binary_search(&(v as u32)).map(|k| self.adj.data(u)[k]).unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.adj.edges().map(|(u, v, &w)| (u, v, w))
    }

    pub fn total_weight(&self) -> u64 {
        self.edges().map(|e| e.2).sum()
    }

    pub fn transition_operator(&self) -> StochasticOperator {
        StochasticOperator::from_adjacency(self)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n_papers: 0,
            n_institutions: self.node_count(),
            edges: self
                .edges()
                .map(|(src, dst, w)| ListedEdge {
                    src,
                    dst,
                    class: EdgeClass::Citation,
                    weight: w as f64,
                })
                .collect(),
        }
    }
}

impl WeightedAdjacency for InstitutionGraph {
    fn node_count(&self) -> usize {
        InstitutionGraph::node_count(self)
    }

    fn out_edges(&self, u: usize) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.adj.row(u).map(|(v, &w)| (v, w as f64))
    }
}
