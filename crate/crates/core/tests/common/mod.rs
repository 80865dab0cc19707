#![allow(dead_code)]

use iprank::ingest::{ingest_records, AliasTable, Corpus, CorpusSlice, SliceInstitution, TimeWindow};
use iprank::network::{EdgeList, HeteroGraph, ListedEdge, EdgeClass};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The three-paper, four-institution example: P1 (I1, I2) cites P2 (I2, I3)
/// and P3 (I4).
pub const TOY_RECORDS: &str = "P1\t2010-03-01\tI1|I2\tP2,P3\n\
                               P2\t2009-06-15\tI2|I3\t\n\
                               P3\t2008-11-30\tI4\t\n";

pub fn toy_corpus() -> Corpus {
    let f = ingest_records(TOY_RECORDS.as_bytes(), &AliasTable::new()).unwrap();
    Corpus::new(f.records, f.registry)
}

pub fn toy_slice() -> CorpusSlice {
    let c = toy_corpus();
    c.slice(c.year_range().unwrap())
}

/// Random small slice: every paper has at least one institution and every
/// institution at least one paper. `n_papers + n_institutions <= 8`.
pub fn random_slice(rng: &mut ChaCha8Rng) -> CorpusSlice {
    let np = rng.gen_range(1..=5);
    let ni = rng.gen_range(1..=(8 - np).min(3));
    let mut affiliation = Vec::new();
    for p in 0..np {
        let own = rng.gen_range(0..ni);
        affiliation.push((p as u32, own as u32));
        for i in 0..ni {
            if i != own && rng.gen_bool(0.3) {
                affiliation.push((p as u32, i as u32));
            }
        }
    }
    for i in 0..ni as u32 {
        if !affiliation.iter().any(|&(_, j)| j == i) {
            affiliation.push((rng.gen_range(0..np) as u32, i));
        }
    }
    let mut citations = Vec::new();
    for p in 0..np as u32 {
        for q in 0..np as u32 {
            if p != q && rng.gen_bool(0.35) {
                citations.push((p, q));
            }
        }
    }
    CorpusSlice {
        window: Some(TimeWindow::new(2000, 2000).unwrap()),
        paper_ids: (0..np).map(|p| format!("P{p}")).collect(),
        n_in_window: np,
        institutions: (0..ni)
            .map(|i| SliceInstitution {
                canonical_id: i as u32,
                name: format!("I{i}"),
            })
            .collect(),
        citation_edges: citations,
        affiliation_edges: affiliation,
        unresolved_references: 0,
        unresolved_reference_ids: 0,
    }
}

/// Random digraph of up to 8 nodes with weights in {1, 2, 3}; dangling
/// nodes allowed.
pub fn random_edge_list(rng: &mut ChaCha8Rng) -> EdgeList {
    let n = rng.gen_range(1..=8);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in 0..n as u32 {
            if rng.gen_bool(0.3) {
                edges.push(ListedEdge {
                    src: u,
                    dst: v,
                    class: EdgeClass::Citation,
                    weight: rng.gen_range(1..=3) as f64,
                });
            }
        }
    }
    EdgeList {
        n_papers: n,
        n_institutions: 0,
        edges,
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Dense weighted adjacency from raw (src, dst, weight) triples.
pub fn dense_adjacency(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(n, n);
    for (u, v, w) in edges {
        a[(u, v)] = w;
    }
    a
}

pub fn hetero_adjacency(g: &HeteroGraph) -> DMatrix<f64> {
    dense_adjacency(g.node_count(), g.edges().map(|(u, v, _)| (u as usize, v as usize, 1.0)))
}

/// Stationary vector by direct linear solve.
///
/// G[i][j] = A[j][i] / rowsum(A, j) for non-dangling j and 1/N for dangling
/// j; solves (I - alpha G) x = (1 - alpha)/N.
pub fn dense_pagerank(adjacency: &DMatrix<f64>, alpha: f64) -> Vec<f64> {
    let n = adjacency.nrows();
    let nf = n as f64;
    let mut g = DMatrix::zeros(n, n);
    for j in 0..n {
        let total: f64 = adjacency.row(j).sum();
        for i in 0..n {
            g[(i, j)] = if total > 0.0 { adjacency[(j, i)] / total } else { 1.0 / nf };
        }
    }
    let lhs = DMatrix::identity(n, n) - g * alpha;
    let rhs = DVector::from_element(n, (1.0 - alpha) / nf);
    let x = lhs.lu().solve(&rhs).expect("nonsingular for alpha < 1");
    x.iter().copied().collect()
}

/// Spearman correlation from the textbook definition: ranks counted
/// explicitly (ties get 1 + #smaller + (#equal - 1)/2), then Pearson.
pub fn brute_spearman(x: &[f64], y: &[f64]) -> f64 {
    let ranks = |v: &[f64]| -> Vec<f64> {
        v.iter()
            .map(|a| {
                let less = v.iter().filter(|b| *b < a).count() as f64;
                let equal = v.iter().filter(|b| *b == a).count() as f64;
                1.0 + less + (equal - 1.0) / 2.0
            })
            .collect()
    };
    let (rx, ry) = (ranks(x), ranks(y));
    let n = x.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = rx.iter().map(|a| (a - mx).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - my).powi(2)).sum();
    cov / (vx * vy).sqrt()
}
