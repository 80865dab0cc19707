//! Graph construction: the heterogeneous paper/institution graph, the two
//! baseline graphs, and row-stochastic transition operators.

mod citation;
mod csr;
mod edgelist;
mod hetero;
mod institution;
mod operator;

pub use citation::{build_citation_graph, CitationGraph};
pub use csr::Csr;
pub use edgelist::{EdgeList, ListedEdge};
pub use hetero::{build_hetero_graph, ClassWeights, EdgeClass, HeteroGraph};
pub use institution::{project_institution_graph, InstitutionGraph};
pub use operator::{StochasticOperator, WeightedAdjacency};

/// Row-normalized transition operator of any supported graph.
pub fn transition_operator<G: WeightedAdjacency + ?Sized>(graph: &G) -> StochasticOperator {
    StochasticOperator::from_adjacency(graph)
}
