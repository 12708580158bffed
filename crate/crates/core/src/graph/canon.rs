//! Canonical labeling for small graphs.
//!
//! The canonical labeling is the vertex ordering minimizing the upper
//! triangle of the adjacency matrix (read column by column, as graph6
//! does) among the leaves of an individualization/refinement search tree.
//! Refinement starts from the degree partition and splits cells by
//! neighbor counts until the partition is equitable. Branches that differ
//! by swapping two twins (vertices with the same neighborhood apart from
//! each other) are explored once, since that swap is an automorphism fixing
//! every previously individualized vertex.

use std::fmt;

use super::{encode_graph6, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_CAP: usize = 12;

/// Isomorphism-class key: the graph6 encoding of the canonically labeled
/// graph. Ordering is byte-lexicographic, so graphs sort by order first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        // graph6 output is printable ASCII
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({:?})", self.as_str())
    }
}

type Cells = Vec<Vec<usize>>;

struct Search {
    n: usize,
    adj: Vec<u32>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search {
    fn code(&self, order: &[usize]) -> u128 {
        let mut code = 0u128;
        for j in 1..self.n {
            let row = self.adj[order[j]];
            for &vi in &order[..j] {
                code = (code << 1) | u128::from((row >> vi) & 1);
            }
        }
        code
    }

    fn refine(&self, mut cells: Cells) -> Cells {
        'outer: loop {
            for s in 0..cells.len() {
                let mask = cells[s].iter().fold(0u32, |m, &v| m | (1 << v));
                let mut next: Cells = Vec::with_capacity(cells.len() + 1);
                for cell in &cells {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cell
                        .iter()
                        .map(|&v| ((self.adj[v] & mask).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                }
                if next.len() != cells.len() {
                    cells = next;
                    continue 'outer;
                }
            }
            return cells;
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (self.adj[u] & !(1 << v)) == (self.adj[v] & !(1 << u))
    }

    fn descend(&mut self, cells: Cells) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let code = self.code(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            let child = self.refine(child);
            self.descend(child);
        }
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.order() > CANON_CAP {
        return Err(Error::UnsupportedSize {
            what: "vertex count for canonical form",
            n: g.order(),
            cap: CANON_CAP,
        });
    }
    Ok(())
}

/// Canonical relabeling: `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_cap(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let mut search = Search { n, adj, best: None };
    let degrees = g.degrees();
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let initial: Cells = (0..=max_deg)
        .map(|d| (0..n).filter(|&v| degrees[v] == d).collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .collect();
    let start = search.refine(initial);
    search.descend(start);
    let (_, order) = search.best.expect("search tree has at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// The canonically relabeled copy of `g` together with its key.
pub fn canonical_graph(g: &Graph) -> Result<(CanonicalForm, Graph)> {
    let perm = canonical_labeling(g)?;
    let h = g.relabel(&perm)?;
    let key = CanonicalForm(encode_graph6(&h)?.into_bytes());
    Ok((key, h))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_graph(g).map(|(k, _)| k)
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    let (a, b) = (canonical_form(g1)?, canonical_form(g2)?);
    Ok(g1.order() == g2.order() && g1.size() == g2.size() && a == b)
}
