//! Simple undirected graphs on a fixed vertex set `0..n`.
//!
//! Graphs are immutable after construction and store one adjacency bitset
//! per vertex, which keeps neighborhood intersections cheap for the
//! branch-and-bound searches elsewhere in the crate.

use fixedbitset::FixedBitSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<FixedBitSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are ignored;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        let mut m = 0;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !rows[u].contains(v) {
                rows[u].insert(v);
                rows[v].insert(u);
                m += 1;
            }
        }
        Ok(Graph { n, rows, m })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (v, row) in rows.iter_mut().enumerate() {
            row.set_range(.., true);
            row.set(v, false);
        }
        Graph {
            n,
            rows,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    /// Cycle `0 - 1 - … - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    /// Adjacency row of `v` as a bitset.
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `verts` (sorted and deduplicated first), plus the
    /// map from new vertex ids back to the originals.
    pub fn induced(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut keep: Vec<usize> = verts.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let k = keep.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        let mut m = 0;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                    m += 1;
                }
            }
        }
        Ok((Graph { n: k, rows, m }, keep))
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.rows[v].clone();
            row.toggle_range(..);
            row.set(v, false);
            rows.push(row);
        }
        let m = self.n * self.n.saturating_sub(1) / 2 - self.m;
        Graph { n: self.n, rows, m }
    }

    /// Mycielski construction: each vertex `v` gains a shadow `v + n` joined
    /// to the neighbors of `v`, and a new apex `2n` is joined to every
    /// shadow. Preserves triangle-freeness while raising the chromatic
    /// number by one.
    pub fn mycielskian(&self) -> Graph {
        let n = self.n;
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        for (u, v) in self.edges().collect::<Vec<_>>() {
            edges.push((u + n, v));
            edges.push((u, v + n));
        }
        for v in 0..n {
            edges.push((v + n, 2 * n));
        }
        Graph::from_edge_list(2 * n + 1, &edges).unwrap()
    }

    /// True when every pair in `verts` is adjacent.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True when no pair in `verts` is adjacent.
    pub fn is_stable_set(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// First adjacent pair within `verts` (scanning lexicographically), if any.
    pub fn first_edge_within(&self, verts: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// First adjacent pair with one endpoint in `xs` and one in `ys`.
    pub fn first_edge_between(&self, xs: &[usize], ys: &[usize]) -> Option<(usize, usize)> {
        for &u in xs {
            for &v in ys {
                if self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// First nonadjacent pair with one endpoint in `xs` and one in `ys`.
    pub fn first_nonedge_between(&self, xs: &[usize], ys: &[usize]) -> Option<(usize, usize)> {
        for &u in xs {
            for &v in ys {
                if u != v && !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = vec![s];
            seen[s] = true;
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n, self.m)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut verts: Vec<usize>) -> Self {
        verts.sort_unstable();
        verts.dedup();
        VertexSet(verts)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl std::ops::Deref for VertexSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
