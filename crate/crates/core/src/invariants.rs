//! Degree-based indices and exact maximum matching.

use std::collections::{BTreeSet, HashMap};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// `√(du² + dv²)`, the Sombor contribution of one edge.
pub fn edge_term(du: usize, dv: usize) -> Result<f64> {
    if du == 0 || dv == 0 {
        return Err(invalid(format!(
            "edge endpoints have degree ≥ 1, got ({du}, {dv})"
        )));
    }
    Ok((du as f64).hypot(dv as f64))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexValue {
    pub value: f64,
    pub term_count: usize,
}

/// Sums `weight(d_u, d_v)` over the edges in lexicographic order.
pub fn degree_pair_index(g: &Graph, weight: impl Fn(usize, usize) -> f64) -> IndexValue {
    let deg = g.degrees();
    let value = g.edges().iter().map(|&(u, v)| weight(deg[u], deg[v])).sum();
    IndexValue {
        value,
        term_count: g.size(),
    }
}

pub fn sombor_index(g: &Graph) -> IndexValue {
    // endpoints of an edge always have degree ≥ 1
    degree_pair_index(g, |a, b| (a as f64).hypot(b as f64))
}

/// Sombor index from a degree-pair multiset, summed in multiset order.
pub fn sombor_from_degree_pairs(pairs: &[(usize, usize)]) -> f64 {
    pairs.iter().map(|&(a, b)| (a as f64).hypot(b as f64)).sum()
}

/// Largest order accepted by [`maximum_matching`].
pub const MATCHING_CAP: usize = 24;

/// Pairwise vertex-disjoint edges of a host graph, stored `(u, v)` with
/// `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: BTreeSet<(usize, usize)>,
}

impl Matching {
    /// Validates that `pairs` are edges of `g` and pairwise disjoint.
    pub fn new(g: &Graph, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut covered = vec![false; g.order()];
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(invalid(format!("({u}, {v}) is not an edge")));
            }
            for w in [u, v] {
                if std::mem::replace(&mut covered[w], true) {
                    return Err(invalid(format!("vertex {w} is matched twice")));
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Matching { pairs: set })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        2 * self.pairs.len() == g.order()
    }
}

struct MatchingSearch<'a> {
    adj: &'a [u32],
    memo: HashMap<u32, u8>,
}

impl MatchingSearch<'_> {
    /// Maximum matching size within the vertex set `free`.
    fn best(&mut self, free: u32) -> u8 {
        if free.count_ones() < 2 {
            return 0;
        }
        if let Some(&v) = self.memo.get(&free) {
            return v;
        }
        let v = free.trailing_zeros();
        let rest = free & !(1 << v);
        let mut best = self.best(rest);
        let mut cand = self.adj[v as usize] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            best = best.max(1 + self.best(rest & !(1 << u)));
        }
        self.memo.insert(free, best);
        best
    }
}

/// A maximum-cardinality matching by memoized search over the set of
/// still-unmatched vertices.
pub fn maximum_matching(g: &Graph) -> Result<Matching> {
    let n = g.order();
    if n > MATCHING_CAP {
        return Err(Error::UnsupportedSize {
            what: "vertex count for exact matching",
            n,
            cap: MATCHING_CAP,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
        .collect();
    let mut search = MatchingSearch {
        adj: &adj,
        memo: HashMap::new(),
    };
    let mut free: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut pairs = Vec::new();
    let mut target = search.best(free);
    while target > 0 {
        let v = free.trailing_zeros();
        let rest = free & !(1 << v);
        if search.best(rest) == target {
            free = rest;
            continue;
        }
        let mut cand = adj[v as usize] & rest;
        loop {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            let after = rest & !(1 << u);
            if 1 + search.best(after) == target {
                pairs.push((v as usize, u as usize));
                free = after;
                target -= 1;
                break;
            }
        }
    }
    Matching::new(g, pairs)
}

pub fn has_perfect_matching(g: &Graph) -> Result<bool> {
    if g.order() > MATCHING_CAP {
        return Err(Error::UnsupportedSize {
            what: "vertex count for exact matching",
            n: g.order(),
            cap: MATCHING_CAP,
        });
    }
    if g.order() % 2 == 1 {
        return Ok(false);
    }
    Ok(maximum_matching(g)?.is_perfect_for(g))
}
