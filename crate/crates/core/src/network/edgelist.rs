//! Sparse edge-list exchange format.
//!
//! ```text
//! nodes <TAB> n_papers <TAB> n_institutions
//! src <TAB> dst <TAB> citation|affiliation <TAB> weight
//! ```
//!
//! Node indices follow the paper-then-institution layout. Weights are
//! written in shortest round-trip form, so write/read/write is byte-exact.

use std::io::{BufRead, Write};

use super::csr::Csr;
use super::hetero::EdgeClass;
use super::operator::{StochasticOperator, WeightedAdjacency};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ListedEdge {
    pub src: u32,
    pub dst: u32,
    pub class: EdgeClass,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EdgeList {
    pub n_papers: usize,
    pub n_institutions: usize,
    pub edges: Vec<ListedEdge>,
}

impl EdgeList {
    pub fn node_count(&self) -> usize {
        self.n_papers + self.n_institutions
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "nodes\t{}\t{}", self.n_papers, self.n_institutions)?;
        for e in &self.edges {
            writeln!(out, "{}\t{}\t{}\t{}", e.src, e.dst, e.class, e.weight)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_from<R: BufRead>(input: R) -> Result<Self> {
        let bad = |line: usize, message: String| Error::EdgeList { line, message };
        let mut lines = input.lines();
        let header = lines.next().ok_or_else(|| bad(1, "missing header".into()))??;
        let h: Vec<&str> = header.split('\t').collect();
        if h.len() != 3 || h[0] != "nodes" {
            return Err(bad(1, format!("bad header {header:?}")));
        }
        let count = |s: &str| s.parse::<usize>().map_err(|e| bad(1, format!("bad node count {s:?}: {e}")));
        let mut list = EdgeList {
            n_papers: count(h[1])?,
            n_institutions: count(h[2])?,
            edges: Vec::new(),
        };
        let n = list.node_count();
        for (i, line) in lines.enumerate() {
            let line = line?;
            let ln = i + 2;
            if line.is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split('\t').collect();
            if f.len() != 4 {
                return Err(bad(ln, format!("expected 4 fields, found {}", f.len())));
            }
            let node = |s: &str| -> Result<u32> {
                let v: u32 = s.parse().map_err(|e| bad(ln, format!("bad node {s:?}: {e}")))?;
                if v as usize >= n {
                    return Err(bad(ln, format!("node {v} out of range (n = {n})")));
                }
                Ok(v)
            };
            let weight: f64 = f[3].parse().map_err(|e| bad(ln, format!("bad weight {:?}: {e}", f[3])))?;
            if !(weight.is_finite() && weight > 0.0) {
                return Err(bad(ln, format!("weight must be positive, got {weight}")));
            }
            list.edges.push(ListedEdge {
                src: node(f[0])?,
                dst: node(f[1])?,
                class: f[2].parse().map_err(|e| bad(ln, e))?,
                weight,
            });
        }
        Ok(list)
    }

    /// Weighted adjacency for solving an imported graph directly.
    pub fn to_csr(&self) -> Csr<f64> {
        let edges: Vec<(u32, u32, f64)> = self.edges.iter().map(|e| (e.src, e.dst, e.weight)).collect();
        Csr::from_edges(self.node_count(), &edges)
    }

    pub fn transition_operator(&self) -> StochasticOperator {
        StochasticOperator::from_adjacency(&CsrAdjacency(self.to_csr()))
    }
}

struct CsrAdjacency(Csr<f64>);

impl WeightedAdjacency for CsrAdjacency {
    fn node_count(&self) -> usize {
        self.0.node_count()
    }

    fn out_edges(&self, u: usize) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.0.row(u).map(|(v, &w)| (v, w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(EdgeList::read_from("".as_bytes()).is_err());
        assert!(EdgeList::read_from("nodes\t1\n".as_bytes()).is_err());
        assert!(EdgeList::read_from("nodes\t1\t1\n0\t2\tcitation\t1\n".as_bytes()).is_err());
        assert!(EdgeList::read_from("nodes\t1\t1\n0\t1\tfoo\t1\n".as_bytes()).is_err());
        assert!(EdgeList::read_from("nodes\t1\t1\n0\t1\taffiliation\t-1\n".as_bytes()).is_err());
    }

    #[test]
    fn fractional_weights_round_trip() {
        let list = EdgeList {
            n_papers: 2,
            n_institutions: 0,
            edges: vec![ListedEdge {
                src: 0,
                dst: 1,
                class: EdgeClass::Citation,
                weight: 0.1 + 0.2,
            }],
        };
        let mut buf = Vec::new();
        list.write_to(&mut buf).unwrap();
        let back = EdgeList::read_from(&buf[..]).unwrap();
        assert_eq!(back.edges[0].weight.to_bits(), (0.1f64 + 0.2).to_bits());
    }
}
