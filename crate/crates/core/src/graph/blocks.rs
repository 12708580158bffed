use std::collections::BTreeSet;

use super::Graph;

/// A biconnected component, or a bridge edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// Sorted normalized edges.
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A 2-connected block is a cycle iff it has as many edges as vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks ordered by their edge lists.
    pub blocks: Vec<Block>,
    pub articulation_vertices: BTreeSet<usize>,
}

impl BlockDecomposition {
    pub fn cycle_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| b.is_cycle()).count()
    }
}

/// Biconnected components via Tarjan's edge-stack algorithm, run
/// iteratively so deep paths don't exhaust the call stack.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut found: Vec<Vec<(usize, usize)>> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, UNSEEN, 0usize)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = *frame;
            if let Some(&w) = g.neighbors(v).get(idx) {
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut comp = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        comp.push(e);
                        if e == (p, v) {
                            break;
                        }
                    }
                    found.push(comp);
                }
            }
        }
    }

    let mut membership = vec![0usize; n];
    let mut blocks: Vec<Block> = found
        .into_iter()
        .map(|comp| {
            let mut edges: Vec<_> = comp
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            edges.sort_unstable();
            let vertices: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            for &v in &vertices {
                membership[v] += 1;
            }
            Block {
                vertices: vertices.into_iter().collect(),
                edges,
            }
        })
        .collect();
    blocks.sort_by(|a, b| a.edges.cmp(&b.edges));
    let articulation_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    BlockDecomposition {
        blocks,
        articulation_vertices,
    }
}

/// Connected, and every block is a bridge or a cycle.
pub fn is_cactus(g: &Graph) -> bool {
    g.is_connected()
        && blocks(g)
            .blocks
            .iter()
            .all(|b| b.is_bridge() || b.is_cycle())
}
