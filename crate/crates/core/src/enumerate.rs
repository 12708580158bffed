//! Exhaustive generation of non-isomorphic cacti.
//!
//! Every cactus on `n ≥ 2` vertices has an end block: a pendant edge, or a
//! cycle all of whose vertices but one have degree 2. Removing it leaves a
//! smaller cactus, so the class with `(n, t)` is reached by attaching a
//! pendant vertex to every vertex of each `(n−1, t)` cactus and a `k`-cycle
//! to every vertex of each `(n−k+1, t−1)` cactus. Each level is
//! deduplicated by canonical form and memoized.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Error, Result};
use crate::graph::{canonical_form, canonical_graph, is_cactus, CanonicalForm, Graph, CANON_CAP};
use crate::invariants::has_perfect_matching;

/// Default largest `n` for [`enumerate_cacti`].
pub const ENUMERATION_CAP: usize = 10;
/// Largest `n` for [`labeled_oracle`].
pub const ORACLE_CAP: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub n: usize,
    pub t: usize,
    pub require_perfect_matching: bool,
}

impl EnumerationQuery {
    pub fn new(n: usize, t: usize, require_perfect_matching: bool) -> Result<Self> {
        if n == 0 {
            return Err(invalid("a cactus has at least one vertex"));
        }
        if require_perfect_matching && n % 2 == 1 {
            return Err(invalid(format!(
                "a perfect matching needs an even vertex count, got n={n}"
            )));
        }
        Ok(EnumerationQuery {
            n,
            t,
            require_perfect_matching,
        })
    }

    pub fn cacti(n: usize, t: usize) -> Result<Self> {
        Self::new(n, t, false)
    }

    /// Cacti on `2β` vertices with `t` cycles and a perfect matching.
    pub fn pm_cacti(beta: usize, t: usize) -> Result<Self> {
        Self::new(2 * beta, t, true)
    }

    /// A cactus with `t ≥ 1` cycles needs at least `2t + 1` vertices.
    pub fn is_feasible(&self) -> bool {
        self.n > 2 * self.t
    }
}

/// One isomorphism class, represented by its canonically labeled graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cactus {
    pub key: CanonicalForm,
    pub graph: Graph,
}

/// Memoized generator; reuse one instance across queries to share levels.
#[derive(Debug, Clone)]
pub struct CactusEnumerator {
    cap: usize,
    levels: BTreeMap<(usize, usize), Vec<Cactus>>,
}

impl Default for CactusEnumerator {
    fn default() -> Self {
        Self::new()
    }
}

impl CactusEnumerator {
    pub fn new() -> Self {
        CactusEnumerator {
            cap: ENUMERATION_CAP,
            levels: BTreeMap::new(),
        }
    }

    /// Raises or lowers the order cap, up to the canonical-form cap.
    pub fn with_cap(cap: usize) -> Result<Self> {
        if cap > CANON_CAP {
            return Err(Error::UnsupportedSize {
                what: "enumeration cap",
                n: cap,
                cap: CANON_CAP,
            });
        }
        Ok(CactusEnumerator {
            cap,
            levels: BTreeMap::new(),
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn level(&mut self, n: usize, t: usize) -> &[Cactus] {
        if !self.levels.contains_key(&(n, t)) {
            let built = self.build_level(n, t);
            self.levels.insert((n, t), built);
        }
        &self.levels[&(n, t)]
    }

    fn build_level(&mut self, n: usize, t: usize) -> Vec<Cactus> {
        if n == 0 || n < 2 * t + 1 {
            return Vec::new();
        }
        if n == 1 {
            return vec![Cactus {
                key: canonical_form(&Graph::empty(1)).expect("within cap"),
                graph: Graph::empty(1),
            }];
        }
        let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        let mut admit = |g: Graph| {
            let (key, canon) = canonical_graph(&g).expect("within cap");
            seen.entry(key).or_insert(canon);
        };
        let smaller: Vec<Graph> = self
            .level(n - 1, t)
            .iter()
            .map(|c| c.graph.clone())
            .collect();
        for g in &smaller {
            for v in 0..g.order() {
                admit(g.with_pendant(v).expect("vertex in range"));
            }
        }
        if t >= 1 {
            for k in 3..=n {
                let base: Vec<Graph> = self
                    .level(n - k + 1, t - 1)
                    .iter()
                    .map(|c| c.graph.clone())
                    .collect();
                for g in &base {
                    for v in 0..g.order() {
                        admit(g.with_cycle_at(v, k).expect("vertex in range"));
                    }
                }
            }
        }
        seen.into_iter()
            .map(|(key, graph)| Cactus { key, graph })
            .collect()
    }

    /// All cacti matching `q`, one per isomorphism class, in ascending
    /// canonical-form order.
    pub fn enumerate(&mut self, q: &EnumerationQuery) -> Result<Vec<Cactus>> {
        if q.n > self.cap {
            return Err(Error::UnsupportedSize {
                what: "vertex count for enumeration",
                n: q.n,
                cap: self.cap,
            });
        }
        let all = self.level(q.n, q.t);
        if !q.require_perfect_matching {
            return Ok(all.to_vec());
        }
        let mut kept = Vec::new();
        for c in all {
            if has_perfect_matching(&c.graph)? {
                kept.push(c.clone());
            }
        }
        Ok(kept)
    }
}

/// One-shot enumeration with the default cap.
pub fn enumerate_cacti(q: &EnumerationQuery) -> Result<Vec<Cactus>> {
    CactusEnumerator::new().enumerate(q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub count: usize,
    pub forms: BTreeSet<CanonicalForm>,
}

/// Brute force over every labeled graph with `n − 1 + t` edges, keeping
/// cacti (and perfectly matchable ones when asked) up to isomorphism.
pub fn labeled_oracle(q: &EnumerationQuery) -> Result<OracleResult> {
    let n = q.n;
    if n > ORACLE_CAP {
        return Err(Error::UnsupportedSize {
            what: "vertex count for the labeled oracle",
            n,
            cap: ORACLE_CAP,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = n - 1 + q.t;
    let mut forms = BTreeSet::new();
    if m <= pairs.len() {
        let limit = 1u32 << pairs.len();
        let mut mask: u32 = (1u32 << m) - 1;
        loop {
            let edges = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i]);
            let g = Graph::from_edges(n, edges)?;
            if is_cactus(&g) && (!q.require_perfect_matching || has_perfect_matching(&g)?) {
                forms.insert(canonical_form(&g)?);
            }
            if mask == 0 {
                break;
            }
            // next subset of the same size (Gosper's hack)
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
            if mask >= limit {
                break;
            }
        }
    }
    Ok(OracleResult {
        count: forms.len(),
        forms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    fn contains(list: &[Cactus], g: &Graph) -> bool {
        list.iter().any(|c| are_isomorphic(&c.graph, g).unwrap())
    }

    #[test]
    fn triangle_is_the_only_unicyclic_3_cactus() {
        let got = enumerate_cacti(&EnumerationQuery::cacti(3, 1).unwrap()).unwrap();
        assert_eq!(got.len(), 1);
        assert!(are_isomorphic(&got[0].graph, &Graph::cycle(3).unwrap()).unwrap());
    }

    #[test]
    fn order_four() {
        let trees = enumerate_cacti(&EnumerationQuery::cacti(4, 0).unwrap()).unwrap();
        assert_eq!(trees.len(), 2);
        assert!(contains(&trees, &Graph::path(4)));
        assert!(contains(&trees, &Graph::star(4)));

        let uni = enumerate_cacti(&EnumerationQuery::cacti(4, 1).unwrap()).unwrap();
        assert_eq!(uni.len(), 2);
        assert!(contains(&uni, &Graph::cycle(4).unwrap()));
        assert!(contains(&uni, &paw()));

        let pm = enumerate_cacti(&EnumerationQuery::new(4, 1, true).unwrap()).unwrap();
        assert_eq!(pm, uni);
    }

    #[test]
    fn infeasible_queries_are_empty() {
        assert!(enumerate_cacti(&EnumerationQuery::cacti(3, 2).unwrap())
            .unwrap()
            .is_empty());
        assert!(enumerate_cacti(&EnumerationQuery::cacti(6, 3).unwrap())
            .unwrap()
            .is_empty());
        assert!(!EnumerationQuery::cacti(4, 2).unwrap().is_feasible());
    }

    #[test]
    fn query_validation_and_caps() {
        assert!(EnumerationQuery::cacti(0, 0).is_err());
        assert!(EnumerationQuery::new(5, 1, true).is_err());
        assert!(matches!(
            enumerate_cacti(&EnumerationQuery::cacti(11, 0).unwrap()),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(CactusEnumerator::with_cap(13).is_err());
        assert!(matches!(
            labeled_oracle(&EnumerationQuery::cacti(8, 0).unwrap()),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn stream_is_strictly_increasing() {
        let mut e = CactusEnumerator::new();
        for t in 0..=3 {
            let got = e
                .enumerate(&EnumerationQuery::cacti(7, t).unwrap())
                .unwrap();
            assert!(got.windows(2).all(|w| w[0].key < w[1].key));
        }
    }

    #[test]
    fn oracle_small_cases() {
        let r = labeled_oracle(&EnumerationQuery::cacti(4, 0).unwrap()).unwrap();
        assert_eq!(r.count, 2);
        let bf = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let r = labeled_oracle(&EnumerationQuery::cacti(5, 2).unwrap()).unwrap();
        assert!(r.forms.contains(&canonical_form(&bf).unwrap()));
        let r = labeled_oracle(&EnumerationQuery::cacti(1, 0).unwrap()).unwrap();
        assert_eq!(r.count, 1);
    }
}
