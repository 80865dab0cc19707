use std::collections::HashMap;

use super::csr::Csr;
use super::edgelist::{EdgeList, ListedEdge};
use super::hetero::EdgeClass;
use super::operator::{StochasticOperator, WeightedAdjacency};
use crate::ingest::CorpusSlice;

/// Unweighted paper-to-paper citation graph (the plain PageRank baseline).
#[derive(Debug, Clone, PartialEq)]
pub struct CitationGraph {
    adj: Csr<()>,
    paper_ids: Vec<String>,
    paper_index: HashMap<String, u32>,
}

pub fn build_citation_graph(slice: &CorpusSlice) -> CitationGraph {
    let edges: Vec<(u32, u32, ())> = slice.citation_edges.iter().map(|&(p, q)| (p, q, ())).collect();
    CitationGraph {
        adj: Csr::from_edges(slice.n_papers(), &edges),
        paper_ids: slice.paper_ids.clone(),
        paper_index: slice
            .paper_ids
            .iter()
            .enumerate()
            .map(|(k, id)| (id.clone(), k as u32))
            .collect(),
    }
}

impl CitationGraph {
    pub fn node_count(&self) -> usize {
        self.adj.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.edge_count()
    }

    pub fn paper_ids(&self) -> &[String] {
        &self.paper_ids
    }

    pub fn paper_node(&self, paper_id: &str) -> Option<usize> {
        self.paper_index.get(paper_id).map(|&u| u as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.edges().map(|(u, v, _)| (u, v))
    }

    pub fn transition_operator(&self) -> StochasticOperator {
        StochasticOperator::from_adjacency(self)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n_papers: self.node_count(),
            n_institutions: 0,
            edges: self
                .edges()
                .map(|(src, dst)| ListedEdge {
                    src,
                    dst,
                    class: EdgeClass::Citation,
                    weight: 1.0,
                })
                .collect(),
        }
    }
}

impl WeightedAdjacency for CitationGraph {
    fn node_count(&self) -> usize {
        CitationGraph::node_count(self)
    }

    fn out_edges(&self, u: usize) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.adj.targets(u).iter().map(|&v| (v, 1.0))
    }
}
