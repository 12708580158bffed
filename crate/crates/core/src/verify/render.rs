//! Aligned text tables for human-readable output.

use super::{PartitionReport, ScanCheck, Status, SweepReport, VerificationReport};
use crate::numfmt::sig12;

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".into(), sig12)
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn status(s: Status) -> String {
    serde_json::to_value(s)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn cell_row(c: &VerificationReport) -> Vec<String> {
    let params = match c.beta {
        Some(b) => format!("β={b} t={}", c.t),
        None => format!("n={} t={}", c.n, c.t),
    };
    vec![
        params,
        c.enumerated_count.to_string(),
        opt(c.max_value),
        opt(c.bound_value),
        yes(c.matches_bound),
        yes(c.argmax_is_extremal),
        yes(c.argmax_unique),
        status(c.status),
    ]
}

pub fn render_sweep_table(r: &SweepReport) -> String {
    let rows: Vec<_> = r.cells.iter().map(cell_row).collect();
    let mut out = table(
        &[
            "cell", "count", "max", "bound", "matches", "extremal", "unique", "status",
        ],
        &rows,
    );
    let s = &r.summary;
    out += &format!(
        "cells {}: pass {}, fail {}, vacuous {}, informative {}, error {}\n",
        s.cells, s.pass, s.fail, s.vacuous, s.informative, s.error
    );
    for c in &r.cells {
        if let Some(v) = c.variant_formula {
            out += &format!(
                "β={} t={}: alternative closed form {} {} the enumerated maximum\n",
                c.beta.unwrap_or(0),
                c.t,
                sig12(v.value),
                if v.agrees_with_max {
                    "matches"
                } else {
                    "does not match"
                }
            );
        }
        if let Some(note) = &c.note {
            out += &format!("n={} t={}: {note}\n", c.n, c.t);
        }
    }
    out
}

pub fn render_partition_table(r: &PartitionReport) -> String {
    let rows: Vec<_> = r
        .cases
        .iter()
        .map(|c| {
            vec![
                status_case(c.case),
                c.count.to_string(),
                opt(c.max_value),
                opt(c.min_gap),
                c.at_bound.join(" "),
                yes(c.ok),
            ]
        })
        .collect();
    let mut out = format!(
        "β={} t={} count {} bound {}\n",
        r.beta,
        r.t,
        r.enumerated_count,
        opt(r.bound_value)
    );
    out += &table(
        &["case", "count", "max", "min-gap", "at-bound", "ok"],
        &rows,
    );
    out += &format!(
        "uncovered {}, overlapping {}, status {}\n",
        r.uncovered.len(),
        r.overlapping.len(),
        status(r.status)
    );
    if let Some(note) = &r.note {
        out += note;
        out.push('\n');
    }
    out
}

fn status_case(c: super::PartitionCase) -> String {
    serde_json::to_value(c)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

fn dir(d: Option<super::Direction>) -> String {
    d.and_then(|d| serde_json::to_value(d).ok())
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_else(|| "-".into())
}

pub fn render_scan_table(scans: &[ScanCheck]) -> String {
    let rows: Vec<_> = scans
        .iter()
        .map(|s| {
            vec![
                s.scan.name.clone(),
                format!(
                    "[{}, {}] step {}",
                    s.scan.grid.start, s.scan.grid.stop, s.scan.grid.step
                ),
                dir(s.scan.claimed),
                dir(Some(s.scan.observed)),
                if s.known_discrepancy {
                    "known discrepancy"
                } else {
                    ""
                }
                .into(),
                yes(s.pass),
            ]
        })
        .collect();
    table(
        &["function", "grid", "claimed", "observed", "note", "pass"],
        &rows,
    )
}
