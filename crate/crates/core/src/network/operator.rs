use super::csr::Csr;

/// Anything that exposes weighted out-edges per node.
pub trait WeightedAdjacency {
    fn node_count(&self) -> usize;

    /// Out-edges of `u` as (target, positive weight).
    fn out_edges(&self, u: usize) -> impl Iterator<Item = (u32, f64)> + '_;
}

/// Row-stochastic transition operator. Each non-dangling row is its
/// adjacency row divided by the row's total weight.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticOperator {
    rows: Csr<f64>,
    out_weight: Vec<f64>,
    dangling: Vec<u32>,
}

impl StochasticOperator {
    pub fn from_adjacency<G: WeightedAdjacency + ?Sized>(graph: &G) -> Self {
        let n = graph.node_count();
        let mut edges = Vec::new();
        let mut out_weight = Vec::with_capacity(n);
        let mut dangling = Vec::new();
        for u in 0..n {
            let start = edges.len();
            let mut total = 0.0;
            for (v, w) in graph.out_edges(u) {
                debug_assert!(w > 0.0 && w.is_finite());
                edges.push((u as u32, v, w));
                total += w;
            }
            out_weight.push(total);
            if edges.len() == start {
                dangling.push(u as u32);
                continue;
            }
            for e in &mut edges[start..] {
                e.2 /= total;
            }
        }
        Self {
            rows: Csr::from_edges(n, &edges),
            out_weight,
            dangling,
        }
    }

    pub fn node_count(&self) -> usize {
        self.rows.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.edge_count()
    }

    /// Transition probabilities out of `u` as (targets, probabilities).
    pub fn row(&self, u: usize) -> (&[u32], &[f64]) {
        (self.rows.targets(u), self.rows.data(u))
    }

    pub fn probability(&self, u: usize, v: u32) -> f64 {
        let (t, p) = self.row(u);
        t.binary_search(&v).map(|k| p[k]).unwrap_or(0.0)
    }

    pub fn row_sum(&self, u: usize) -> f64 {
        self.rows.data(u).iter().sum()
    }

    /// Total out-degree (unweighted graphs) or out-weight of each node.
    pub fn out_weight(&self, u: usize) -> f64 {
        self.out_weight[u]
    }

    pub fn dangling(&self) -> &[u32] {
        &self.dangling
    }

    pub fn is_dangling(&self, u: usize) -> bool {
        self.rows.degree(u) == 0
    }

    /// Column view: for each node, its in-neighbors with the transition
    /// probability of the edge into it.
    pub fn transpose(&self) -> Csr<f64> {
        let edges: Vec<(u32, u32, f64)> = self.rows.edges().map(|(u, v, &p)| (v, u, p)).collect();
        Csr::from_edges(self.node_count(), &edges)
    }
}
