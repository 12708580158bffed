//! The extremal cacti `H(n,t)` and `H*(2β,t)`, their closed-form Sombor
//! values `Q(n,t)` and `Φ(β,t)`, and the auxiliary real functions whose
//! monotonicity the extremal arguments rely on.

mod functions;

pub use functions::{
    monotonicity_scan, second_difference_scan, CurvatureReport, Direction, Grid, LemmaFunction,
    ScanReport, Witness, INCONCLUSIVE_REL,
};

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::invariants::Matching;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// Cacti on `n` vertices with `t` cycles.
    Q,
    /// Cacti on `2β` vertices with `t` cycles and a perfect matching.
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremalBound {
    pub family: Family,
    /// `(n, t)` for [`Family::Q`], `(β, t)` for [`Family::Phi`].
    pub params: (usize, usize),
    #[serde(serialize_with = "crate::numfmt::as_sig12::serialize")]
    pub value: f64,
}

fn check_h(n: usize, t: usize) -> Result<()> {
    if n < 2 * t + 1 {
        return Err(invalid(format!(
            "H(n,t) requires n ≥ 2t+1, got n={n}, t={t}"
        )));
    }
    Ok(())
}

fn check_hstar(beta: usize, t: usize) -> Result<()> {
    if beta < t + 1 {
        return Err(invalid(format!(
            "H*(2β,t) requires β ≥ t+1, got β={beta}, t={t}"
        )));
    }
    Ok(())
}

/// `H(n,t)`: the star with center 0 and leaves `1..n`, plus the `t`
/// disjoint leaf edges `(2i+1, 2i+2)`.
pub fn build_h(n: usize, t: usize) -> Result<Graph> {
    check_h(n, t)?;
    let spokes = (1..n).map(|v| (0, v));
    let chords = (0..t).map(|i| (2 * i + 1, 2 * i + 2));
    Graph::from_edges(n, spokes.chain(chords))
}

/// `H*(2β,t)`: center 0 with pendant vertex 1, triangles `0-(2+2i)-(3+2i)`
/// for `i < t`, and `β-t-1` pendant paths `0-a-(a+1)` on the remaining
/// vertices.
pub fn build_hstar(beta: usize, t: usize) -> Result<Graph> {
    check_hstar(beta, t)?;
    let n = 2 * beta;
    let mut edges = vec![(0, 1)];
    for i in 0..t {
        let (a, b) = (2 + 2 * i, 3 + 2 * i);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    for j in 0..beta - t - 1 {
        let a = 2 + 2 * t + 2 * j;
        edges.extend([(0, a), (a, a + 1)]);
    }
    Graph::from_edges(n, edges)
}

/// The perfect matching of `H*(2β,t)` as laid out by [`build_hstar`]:
/// center with its pendant, then each triangle's or path's vertex pair.
pub fn hstar_perfect_matching(beta: usize, t: usize) -> Result<Matching> {
    let g = build_hstar(beta, t)?;
    Matching::new(&g, (0..beta).map(|i| (2 * i, 2 * i + 1)))
}

/// `Q(n,t) = (n−2t−1)√((n−1)²+1) + 2t√((n−1)²+4) + 2√2·t`.
pub fn bound_q(n: usize, t: usize) -> Result<ExtremalBound> {
    check_h(n, t)?;
    let (nf, tf) = (n as f64, t as f64);
    let hub = nf - 1.0;
    let value =
        (nf - 2.0 * tf - 1.0) * hub.hypot(1.0) + 2.0 * tf * hub.hypot(2.0) + 2.0 * 2f64.sqrt() * tf;
    Ok(ExtremalBound {
        family: Family::Q,
        params: (n, t),
        value,
    })
}

/// `Φ(β,t) = (β+t−1)√((β+t)²+4) + √((β+t)²+1) + √5(β−t−1) + 2√2·t`.
pub fn bound_phi(beta: usize, t: usize) -> Result<ExtremalBound> {
    check_hstar(beta, t)?;
    let (b, tf) = (beta as f64, t as f64);
    let hub = b + tf;
    let value = (hub - 1.0) * hub.hypot(2.0)
        + hub.hypot(1.0)
        + 5f64.sqrt() * (b - tf - 1.0)
        + 2.0 * 2f64.sqrt() * tf;
    Ok(ExtremalBound {
        family: Family::Phi,
        params: (beta, t),
        value,
    })
}

/// A published alternative closed form for the tree case (`t = 0`) under a
/// perfect matching. Kept only to document that it disagrees with
/// exhaustive search; [`bound_phi`] is the value that holds.
pub fn variant_tree_pm_formula(beta: usize) -> f64 {
    let b = beta as f64;
    2.0 * (2.0 * b - 1.0) * b.hypot(1.0) + (2.0 * b).hypot(1.0) + 5f64.sqrt() * (2.0 * b - 1.0)
}

/// Alternative closed form for the unicyclic case (`t = 1`) under a
/// perfect matching; see [`variant_tree_pm_formula`].
pub fn variant_unicyclic_pm_formula(beta: usize) -> f64 {
    let b = beta as f64;
    let k = 2.0 * b + 1.0;
    2.0 * b * k.hypot(2.0) + k.hypot(1.0) + 2.0 * 5f64.sqrt() * (b - 1.0) + 2.0 * 2f64.sqrt()
}
