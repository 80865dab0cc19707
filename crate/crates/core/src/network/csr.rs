//! Compressed sparse row adjacency.

/// Row-compressed adjacency with per-edge payload `E`.
///
/// Rows are sorted by target and hold no duplicate targets.
#[derive(Debug, Clone, PartialEq)]
pub struct Csr<E> {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    data: Vec<E>,
}

impl<E: Copy> Csr<E> {
    /// Builds from an unordered edge list. When the same (source, target)
    /// pair occurs more than once, the first occurrence wins.
    pub fn from_edges(n_nodes: usize, edges: &[(u32, u32, E)]) -> Self {
        let mut offsets = vec![0usize; n_nodes + 1];
        for &(s, _, _) in edges {
            offsets[s as usize + 1] += 1;
        }
        for i in 0..n_nodes {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut order = vec![0usize; edges.len()];
        for (k, &(s, _, _)) in edges.iter().enumerate() {
            order[cursor[s as usize]] = k;
            cursor[s as usize] += 1;
        }

        let mut new_offsets = Vec::with_capacity(n_nodes + 1);
        let mut targets = Vec::with_capacity(edges.len());
        let mut data = Vec::with_capacity(edges.len());
        new_offsets.push(0);
        for u in 0..n_nodes {
            let row = &mut order[offsets[u]..offsets[u + 1]];
            // Stable, so the first occurrence of a duplicate stays first.
            row.sort_by_key(|&k| edges[k].1);
            let mut last = None;
            for &k in row.iter() {
                let (_, t, e) = edges[k];
                if last == Some(t) {
                    continue;
                }
                last = Some(t);
                targets.push(t);
                data.push(e);
            }
            new_offsets.push(targets.len());
        }
        Self {
            offsets: new_offsets,
            targets,
            data,
        }
    }
}

impl<E> Csr<E> {
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn targets(&self, u: usize) -> &[u32] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn data(&self, u: usize) -> &[E] {
        &self.data[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = (u32, &E)> + '_ {
        self.targets(u).iter().copied().zip(self.data(u))
    }

    /// All edges as (source, target, payload) in row order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, &E)> + '_ {
        (0..self.node_count()).flat_map(move |u| self.row(u).map(move |(t, e)| (u as u32, t, e)))
    }

    pub fn has_edge(&self, u: usize, v: u32) -> bool {
        self.targets(u).binary_search(&v).is_ok()
    }
}

impl<E> Default for Csr<E> {
    fn default() -> Self {
        Self {
            offsets: vec![0],
            targets: Vec::new(),
            data: Vec::new(),
        }
    }
}
