//! Simple undirected graphs over vertices `0..n` and the structural
//! predicates used throughout the crate.

mod blocks;
mod canon;
mod edgelist;
mod graph6;

pub use blocks::{blocks, is_cactus, Block, BlockDecomposition};
pub use canon::{
    are_isomorphic, canonical_form, canonical_graph, canonical_labeling, CanonicalForm, CANON_CAP,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{invalid, Error, Result};

/// A simple undirected graph. Immutable once built: edges are stored
/// normalized (`u < v`) and sorted lexicographically, and adjacency lists
/// are sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            let (u, v) = w[0];
            return Err(invalid(format!("duplicate edge ({u}, {v})")));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted_unique(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Star `K_{1,n-1}` with center 0.
    pub fn star(n: usize) -> Self {
        Self::from_sorted_unique(n, (1..n).map(|v| (0, v)).collect())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted_unique(n, edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(invalid(format!("vertex {v} out of range 0..{}", self.n)));
        }
        Ok(self.adj[v].len())
    }

    /// Degrees indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Minimum degree; `None` for the graph with no vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// True iff the graph has at most one connected component, so the
    /// empty graph and `K_1` both count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Cyclomatic number `m - n + 1` of a connected graph.
    pub fn cycle_count(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(invalid("cycle count is defined for connected graphs only"));
        }
        // connected ⇒ m ≥ n - 1
        Ok((self.edges.len() + 1).saturating_sub(self.n))
    }

    pub fn pendant_vertices(&self) -> BTreeSet<usize> {
        (0..self.n).filter(|&v| self.adj[v].len() == 1).collect()
    }

    /// Vertices adjacent to at least one pendant vertex.
    pub fn support_vertices(&self) -> BTreeSet<usize> {
        self.pendant_vertices()
            .into_iter()
            .map(|p| self.adj[p][0])
            .collect()
    }

    /// New graph with vertex `n` attached to `v` by a pendant edge.
    pub fn with_pendant(&self, v: usize) -> Result<Self> {
        self.degree(v)?;
        let mut edges = self.edges.clone();
        edges.push((v, self.n));
        Ok(Self::from_sorted_unique(self.n + 1, edges))
    }

    /// New graph with a `k`-cycle through `v` whose other `k - 1` vertices
    /// are fresh (`n..n+k-1`).
    pub fn with_cycle_at(&self, v: usize, k: usize) -> Result<Self> {
        self.degree(v)?;
        if k < 3 {
            return Err(invalid(format!(
                "a cycle needs at least 3 vertices, got {k}"
            )));
        }
        let n = self.n;
        let mut edges = self.edges.clone();
        edges.push((v, n));
        for i in 0..k - 2 {
            edges.push((n + i, n + i + 1));
        }
        edges.push((v, n + k - 2));
        edges.sort_unstable();
        Ok(Self::from_sorted_unique(n + k - 1, edges))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(invalid(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(invalid("relabeling is not a permutation"));
            }
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Ok(Self::from_sorted_unique(self.n, edges))
    }

    /// Sorted multiset of `(min, max)` endpoint degree pairs, one per edge.
    /// Two graphs with equal multisets have equal degree-based indices
    /// exactly.
    pub fn degree_pair_multiset(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.adj[u].len(), self.adj[v].len());
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl TryFrom<&str> for Graph {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        decode_graph6(s)
    }
}
