//! Real functions used to compare a cactus against the extremal value
//! after deleting a pendant vertex, a pendant path or a cycle, and
//! grid scanners that classify their empirical monotonicity.

use serde::Serialize;

use crate::error::{invalid, Result};

/// Consecutive differences with `|Δ| < INCONCLUSIVE_REL · max(1, |y|)`
/// are too small to call either way.
pub const INCONCLUSIVE_REL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum LemmaFunction {
    /// `√(x²+d²) − √(x²+(d−r)²)`, for `x > 0`, `d > 0`, `0 < r ≤ d`.
    F1 { d: f64, r: f64 },
    /// `r√(x²+1) + (x−r)√(x²+4) + (x−r)√((x−r)²+4)`, for `x ≥ r ≥ 0`.
    F2 { r: f64 },
    /// `x√(x²+4) − (x−2)√((x−2)²+4)`, for `x ≥ 2`.
    F3,
    /// `(x−1)√(x²+4) + √(x²+1)`, for `x ≥ 1`.
    F,
    /// `f(x) − f(x+1)`, for `x ≥ 1`.
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    StrictlyIncreasing,
    StrictlyDecreasing,
    NonMonotone,
    Inconclusive,
}

fn f_aux(x: f64) -> f64 {
    (x - 1.0) * x.hypot(2.0) + x.hypot(1.0)
}

impl LemmaFunction {
    pub fn name(&self) -> String {
        match *self {
            LemmaFunction::F1 { d, r } => format!("f1(x; d={d}, r={r})"),
            LemmaFunction::F2 { r } => format!("f2(x; r={r})"),
            LemmaFunction::F3 => "f3(x)".into(),
            LemmaFunction::F => "f(x)".into(),
            LemmaFunction::G => "g(x)".into(),
        }
    }

    /// Smallest admissible `x`, and whether it is itself admissible.
    fn domain_min(&self) -> (f64, bool) {
        match *self {
            LemmaFunction::F1 { .. } => (0.0, false),
            LemmaFunction::F2 { r } => (r, true),
            LemmaFunction::F3 => (2.0, true),
            LemmaFunction::F | LemmaFunction::G => (1.0, true),
        }
    }

    fn check_params(&self) -> Result<()> {
        match *self {
            LemmaFunction::F1 { d, r }
                if d.is_nan() || r.is_nan() || d <= 0.0 || r <= 0.0 || r > d =>
            {
                Err(invalid(format!(
                    "f1 needs d > 0 and 0 < r ≤ d, got d={d}, r={r}"
                )))
            }
            LemmaFunction::F2 { r } if r.is_nan() || r < 0.0 => {
                Err(invalid(format!("f2 needs r ≥ 0, got r={r}")))
            }
            _ => Ok(()),
        }
    }

    /// Direction asserted for this function in the extremal argument, if
    /// one is asserted at all.
    pub fn claimed_direction(&self) -> Option<Direction> {
        match self {
            LemmaFunction::F1 { .. } => Some(Direction::StrictlyDecreasing),
            LemmaFunction::F2 { .. } | LemmaFunction::F3 | LemmaFunction::G => {
                Some(Direction::StrictlyIncreasing)
            }
            LemmaFunction::F => None,
        }
    }

    /// Default scan start: the domain minimum, or 0.5 for open domains.
    pub fn default_start(&self) -> f64 {
        match self.domain_min() {
            (lo, true) => lo,
            (lo, false) => lo + 0.5,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        self.check_params()?;
        let (lo, closed) = self.domain_min();
        let inside = x.is_finite() && if closed { x >= lo } else { x > lo };
        if !inside {
            let op = if closed { "≥" } else { ">" };
            return Err(invalid(format!(
                "{} is defined for x {op} {lo}, got x={x}",
                self.name()
            )));
        }
        Ok(match *self {
            LemmaFunction::F1 { d, r } => x.hypot(d) - x.hypot(d - r),
            LemmaFunction::F2 { r } => {
                r * x.hypot(1.0) + (x - r) * x.hypot(2.0) + (x - r) * (x - r).hypot(2.0)
            }
            LemmaFunction::F3 => x * x.hypot(2.0) - (x - 2.0) * (x - 2.0).hypot(2.0),
            LemmaFunction::F => f_aux(x),
            LemmaFunction::G => f_aux(x) - f_aux(x + 1.0),
        })
    }
}

/// Evenly spaced points `start, start+step, …` not exceeding `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn new(start: f64, stop: f64, step: f64) -> Self {
        Grid { start, stop, step }
    }

    pub fn points(&self) -> Result<Vec<f64>> {
        if self.step.is_nan()
            || self.step <= 0.0
            || !self.start.is_finite()
            || !self.stop.is_finite()
        {
            return Err(invalid(format!("bad grid {self:?}")));
        }
        let count = ((self.stop - self.start) / self.step + 1e-9).floor();
        if count < 2.0 {
            return Err(invalid(format!("grid {self:?} has fewer than 3 points")));
        }
        Ok((0..=count as usize)
            .map(|i| self.start + i as f64 * self.step)
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "crate::numfmt::as_sig12::serialize")]
    pub x0: f64,
    #[serde(serialize_with = "crate::numfmt::as_sig12::serialize")]
    pub x1: f64,
    #[serde(serialize_with = "crate::numfmt::as_sig12::serialize")]
    pub y0: f64,
    #[serde(serialize_with = "crate::numfmt::as_sig12::serialize")]
    pub y1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub function: LemmaFunction,
    pub name: String,
    pub grid: Grid,
    pub points: usize,
    pub claimed: Option<Direction>,
    pub observed: Direction,
    /// First adjacent pair contradicting the claimed direction (or, with no
    /// claim, the first pair breaking the initial trend).
    pub witness: Option<Witness>,
}

impl ScanReport {
    pub fn claim_holds(&self) -> Option<bool> {
        self.claimed.map(|c| c == self.observed)
    }
}

fn sign(dy: f64, scale: f64) -> i8 {
    if dy.abs() < INCONCLUSIVE_REL * scale {
        0
    } else if dy > 0.0 {
        1
    } else {
        -1
    }
}

/// Classifies the direction of `func` over `grid` from consecutive
/// differences, all required strict.
pub fn monotonicity_scan(func: LemmaFunction, grid: Grid) -> Result<ScanReport> {
    let xs = grid.points()?;
    let ys = xs
        .iter()
        .map(|&x| func.eval(x))
        .collect::<Result<Vec<_>>>()?;
    let signs: Vec<i8> = ys
        .windows(2)
        .map(|w| sign(w[1] - w[0], 1f64.max(w[0].abs()).max(w[1].abs())))
        .collect();
    let (pos, neg, zero) = signs.iter().fold((0, 0, 0), |(p, n, z), &s| match s {
        1 => (p + 1, n, z),
        -1 => (p, n + 1, z),
        _ => (p, n, z + 1),
    });
    let observed = if pos > 0 && neg > 0 {
        Direction::NonMonotone
    } else if zero > 0 {
        Direction::Inconclusive
    } else if pos > 0 {
        Direction::StrictlyIncreasing
    } else {
        Direction::StrictlyDecreasing
    };
    let claimed = func.claimed_direction();
    let wanted = match claimed {
        Some(Direction::StrictlyIncreasing) => Some(1),
        Some(Direction::StrictlyDecreasing) => Some(-1),
        _ => None,
    };
    let bad = match wanted {
        Some(w) => signs.iter().position(|&s| s != w),
        None => signs.iter().position(|&s| s != signs[0]),
    };
    let witness = bad.map(|i| Witness {
        x0: xs[i],
        x1: xs[i + 1],
        y0: ys[i],
        y1: ys[i + 1],
    });
    Ok(ScanReport {
        name: func.name(),
        function: func,
        grid,
        points: xs.len(),
        claimed,
        observed,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureReport {
    pub function: LemmaFunction,
    pub name: String,
    pub grid: Grid,
    /// Smallest `(y[i+1] − 2y[i] + y[i−1]) / h²` over interior points.
    #[serde(serialize_with = "crate::numfmt::as_sig12::serialize")]
    pub min_second_difference: f64,
    pub all_positive: bool,
    /// First interior point where the second difference is not clearly
    /// positive.
    #[serde(serialize_with = "crate::numfmt::as_sig12::option::serialize")]
    pub witness: Option<f64>,
}

/// Central second differences of `func` at the interior grid points.
pub fn second_difference_scan(func: LemmaFunction, grid: Grid) -> Result<CurvatureReport> {
    let xs = grid.points()?;
    let ys = xs
        .iter()
        .map(|&x| func.eval(x))
        .collect::<Result<Vec<_>>>()?;
    let h2 = grid.step * grid.step;
    let mut min = f64::INFINITY;
    let mut witness = None;
    for i in 1..xs.len() - 1 {
        let dd = ys[i + 1] - 2.0 * ys[i] + ys[i - 1];
        let scale = 1f64.max(ys[i].abs());
        min = min.min(dd / h2);
        if witness.is_none() && sign(dd, scale) != 1 {
            witness = Some(xs[i]);
        }
    }
    Ok(CurvatureReport {
        name: func.name(),
        function: func,
        grid,
        min_second_difference: min,
        all_positive: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn f1_values() {
        let f = LemmaFunction::F1 { d: 3.0, r: 1.0 };
        assert!(close(f.eval(1.0).unwrap(), 10f64.sqrt() - 5f64.sqrt()));
        assert!(close(f.eval(1.0).unwrap(), 0.9262096826685897));
        assert!(close(f.eval(2.0).unwrap(), 13f64.sqrt() - 8f64.sqrt()));
        assert!(close(f.eval(2.0).unwrap(), 0.7771241507177988));
        let full = LemmaFunction::F1 { d: 3.0, r: 3.0 };
        assert!(close(full.eval(4.0).unwrap(), 5.0 - 4.0));
        assert!(f.eval(0.0).is_err());
        assert!(LemmaFunction::F1 { d: 2.0, r: 3.0 }.eval(1.0).is_err());
        assert!(LemmaFunction::F1 { d: 2.0, r: 0.0 }.eval(1.0).is_err());
    }

    #[test]
    fn f2_values() {
        let f = LemmaFunction::F2 { r: 1.0 };
        assert!(close(f.eval(2.0).unwrap(), 2.0 * 5f64.sqrt() + 8f64.sqrt()));
        assert!(close(f.eval(2.0).unwrap(), 7.3005630797457695));
        assert!(close(
            f.eval(3.0).unwrap(),
            10f64.sqrt() + 2.0 * 13f64.sqrt() + 2.0 * 8f64.sqrt()
        ));
        assert!(close(f.eval(3.0).unwrap(), 16.030234460588737));
        let g = LemmaFunction::F2 { r: 4.0 };
        assert!(close(g.eval(4.0).unwrap(), 4.0 * 17f64.sqrt()));
        assert!(f.eval(0.5).is_err());
    }

    #[test]
    fn f3_values() {
        let f = LemmaFunction::F3;
        assert!(close(f.eval(2.0).unwrap(), 2.0 * 8f64.sqrt()));
        assert!(close(
            f.eval(3.0).unwrap(),
            3.0 * 13f64.sqrt() - 5f64.sqrt()
        ));
        assert!(close(f.eval(3.0).unwrap(), 8.580585848892177));
        assert!(close(
            f.eval(4.0).unwrap(),
            4.0 * 20f64.sqrt() - 2.0 * 8f64.sqrt()
        ));
        assert!(close(f.eval(4.0).unwrap(), 12.231689570505939));
        assert!(f.eval(1.9).is_err());
    }

    #[test]
    fn f_and_g_values() {
        assert!(close(
            LemmaFunction::F.eval(2.0).unwrap(),
            8f64.sqrt() + 5f64.sqrt()
        ));
        assert!(close(LemmaFunction::F.eval(2.0).unwrap(), 5.06449510224598));
        let g2 = (8f64.sqrt() + 5f64.sqrt()) - (2.0 * 13f64.sqrt() + 10f64.sqrt());
        assert!(close(LemmaFunction::G.eval(2.0).unwrap(), g2));
        assert!(close(g2, -5.308885108850378));
        assert!(close(
            LemmaFunction::G.eval(3.0).unwrap(),
            -7.166133279520043
        ));
        assert!(LemmaFunction::G.eval(0.5).is_err());
    }

    #[test]
    fn scans_match_expected_directions() {
        let grid = |lo| Grid::new(lo, 50.0, 0.5);
        let s = monotonicity_scan(LemmaFunction::F3, grid(2.0)).unwrap();
        assert_eq!(s.observed, Direction::StrictlyIncreasing);
        assert_eq!(s.claim_holds(), Some(true));
        assert_eq!(s.points, 97);

        let s = monotonicity_scan(LemmaFunction::F1 { d: 3.0, r: 1.0 }, grid(0.5)).unwrap();
        assert_eq!(s.observed, Direction::StrictlyDecreasing);
        assert!(s.witness.is_none());

        let s = monotonicity_scan(LemmaFunction::G, grid(2.0)).unwrap();
        assert_eq!(s.observed, Direction::StrictlyDecreasing);
        assert_eq!(s.claim_holds(), Some(false));
        let w = s.witness.unwrap();
        assert_eq!((w.x0, w.x1), (2.0, 2.5));
    }

    #[test]
    fn scan_detects_non_monotone_and_flat() {
        let s = monotonicity_scan(LemmaFunction::F2 { r: 0.0 }, Grid::new(0.0, 5.0, 0.5)).unwrap();
        assert_eq!(s.observed, Direction::StrictlyIncreasing);
        // no claim is made for f, so there is nothing to contradict
        let s = monotonicity_scan(LemmaFunction::F, Grid::new(1.0, 10.0, 1.0)).unwrap();
        assert_eq!(s.claimed, None);
        assert_eq!(s.observed, Direction::StrictlyIncreasing);
        assert!(s.witness.is_none());
        // A step far below the guard makes differences inconclusive.
        let s = monotonicity_scan(LemmaFunction::F3, Grid::new(2.0, 2.0 + 2.5e-14, 1e-14)).unwrap();
        assert_eq!(s.observed, Direction::Inconclusive);
    }

    #[test]
    fn scan_rejects_bad_grids() {
        assert!(monotonicity_scan(LemmaFunction::F3, Grid::new(1.0, 50.0, 0.5)).is_err());
        assert!(monotonicity_scan(LemmaFunction::F3, Grid::new(2.0, 2.5, 0.5)).is_err());
        assert!(monotonicity_scan(LemmaFunction::F3, Grid::new(2.0, 5.0, 0.0)).is_err());
        let err = monotonicity_scan(
            LemmaFunction::F1 { d: 2.0, r: 1.0 },
            Grid::new(0.0, 5.0, 0.5),
        )
        .unwrap_err();
        assert!(err.to_string().contains("x=0"), "{err}");
    }

    #[test]
    fn f_is_convex() {
        let c = second_difference_scan(LemmaFunction::F, Grid::new(2.0, 50.0, 0.5)).unwrap();
        assert!(c.all_positive);
        assert!(c.min_second_difference > 0.0);
    }
}
