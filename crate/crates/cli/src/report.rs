//! Report builders. Each report carries its canonical JSON, a human-readable
//! rendering and the exit status it implies.

use std::fmt::Write as _;

use klein_core::catalog::{FamilyRow, ORD_DISCREPANCY_NOTE};
use klein_core::jetfilt::{CandidateOutcome, Filtration, JetSearchResult};
use klein_core::klein::{PairAnalysis, Provenance, StabilizerChoice, StiffeningReport};
use klein_core::liealg::{Subject, Violation};
use klein_core::{Subspace, ValidationReport, Vector};
use serde_json::{json, Value};

use crate::error::ExitStatus;
use crate::formats::{basis_json, render, vector_json};

pub struct Report {
    pub json: Value,
    pub pretty: String,
    pub status: ExitStatus,
}

impl Report {
    pub fn text(&self, pretty: bool) -> String {
        if pretty {
            self.pretty.clone()
        } else {
            render(&self.json)
        }
    }
}

/// Aligned `key  value` lines.
#[derive(Default)]
struct Table {
    rows: Vec<(String, String)>,
}

impl Table {
    fn row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    fn finish(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

/// Columns right-aligned to their widest cell.
fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        padded.join("  ").trim_end().to_owned()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

fn vector_text(v: &Vector) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn dims_text(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn subject_name(s: Subject) -> &'static str {
    match s {
        Subject::Algebra => "lie_algebra",
        Subject::Representation => "representation",
    }
}

fn violation_json(v: &Violation) -> Value {
    json!({"identity": v.identity.name(), "indices": v.indices, "discrepancy": vector_json(&v.discrepancy)})
}

pub fn validation_json(r: &ValidationReport) -> Value {
    json!({
        "subject": subject_name(r.subject),
        "passed": r.passed,
        "violations": r.violations.iter().map(violation_json).collect::<Vec<_>>(),
    })
}

fn validation_lines(out: &mut String, r: &ValidationReport) {
    let _ = writeln!(out, "{}: {}", subject_name(r.subject), if r.passed { "passed" } else { "FAILED" });
    for v in &r.violations {
        let _ = writeln!(out, "  {} at {:?}: {}", v.identity.name(), v.indices, vector_text(&v.discrepancy));
    }
}

/// `validate`: the algebra report, then the representation report if any.
pub fn validation(reports: &[ValidationReport], dims: (usize, Option<usize>)) -> Report {
    let passed = reports.iter().all(|r| r.passed);
    let json = json!({
        "kind": if dims.1.is_some() { "representation" } else { "lie_algebra" },
        "algebra_dim": dims.0,
        "space_dim": dims.1,
        "passed": passed,
        "reports": reports.iter().map(validation_json).collect::<Vec<_>>(),
    });
    let mut pretty = String::new();
    for r in reports {
        validation_lines(&mut pretty, r);
    }
    Report { json, pretty, status: ExitStatus::from_check(passed) }
}

pub struct FiltrationSummary<'a> {
    pub filtration: &'a Filtration,
    pub valid: bool,
    pub maximally_refined: bool,
    pub stalled: bool,
}

pub fn filtration(s: &FiltrationSummary<'_>) -> Report {
    let f = s.filtration;
    let json = json!({
        "direction": f.direction().name(),
        "ambient_dim": f.ambient_dim(),
        "subspaces": f.subspaces().iter().map(basis_json).collect::<Vec<_>>(),
        "length": f.len(),
        "valid": s.valid,
        "maximally_refined": s.maximally_refined,
        "stalled": s.stalled,
    });
    let mut t = Table::default();
    t.row("direction", f.direction().name())
        .row("ambient dim", f.ambient_dim())
        .row("length", f.len())
        .row("dims", dims_text(&f.dims()))
        .row("valid", yes_no(s.valid))
        .row("maximally refined", yes_no(s.maximally_refined))
        .row("stalled", yes_no(s.stalled));
    Report { json, pretty: t.finish(), status: ExitStatus::from_check(s.valid && !s.stalled) }
}

fn candidate_json(c: &CandidateOutcome) -> Value {
    json!({"candidate": vector_json(&c.candidate), "length": c.length, "stalled": c.stalled})
}

pub fn jet_order(strategy: Value, space_dim: usize, r: &JetSearchResult) -> Report {
    let json = json!({
        "strategy": strategy,
        "space_dim": space_dim,
        "best_length": r.best_length,
        "certified_maximal": r.certified_maximal,
        "witness": vector_json(&r.witness),
        "candidates": r.per_candidate.iter().map(candidate_json).collect::<Vec<_>>(),
    });
    let mut t = Table::default();
    t.row("space dim", space_dim)
        .row("best length", r.best_length)
        .row("certified maximal", yes_no(r.certified_maximal))
        .row("witness", vector_text(&r.witness))
        .row("candidates", r.per_candidate.len());
    let rows: Vec<Vec<String>> = r
        .per_candidate
        .iter()
        .map(|c| vec![vector_text(&c.candidate), c.length.to_string(), yes_no(c.stalled).to_owned()])
        .collect();
    let pretty = format!("{}\n{}", t.finish(), grid(&["candidate", "length", "stalled"], &rows));
    Report { json, pretty, status: ExitStatus::Success }
}

fn stabilizer_json(choice: &StabilizerChoice) -> Value {
    match choice {
        StabilizerChoice::Abelian => json!({"kind": "abelian"}),
        StabilizerChoice::Subalgebra(r) => json!({"kind": "subalgebra", "r_basis": basis_json(r)}),
    }
}

pub fn provenance_json(p: &Provenance, start: Option<&Vector>) -> Value {
    json!({
        "source": "representation",
        "g_dim": p.semidirect.base().dim(),
        "space_dim": p.semidirect.rep().space_dim(),
        "start_vector": start.map(vector_json),
        "filtration_dims": p.filtration.dims(),
        "stabilizer": stabilizer_json(&p.stabilizer),
        "v0_basis": basis_json(&p.v0),
    })
}

pub fn algebra_provenance_json(h0: &Subspace) -> Value {
    json!({"source": "algebra", "h0_basis": basis_json(h0)})
}

/// Asserted checks: effectiveness and every half-tail clause.
pub fn klein(a: &PairAnalysis, provenance: Value) -> Report {
    let w = &a.weissfeiler;
    let json = json!({
        "h_dim": a.h_dim,
        "h0_dim": a.h0_dim,
        "h0_abelian": a.h0_abelian,
        "h0_solvable": a.h0_solvable,
        "weissfeiler_dims": w.dims(),
        "m": w.m,
        "ord": w.ord,
        "effective": a.effective,
        "largest_ideal_dim": w.stabilized_at.dim(),
        "routes_agree": a.consistent(),
        "half_tail": {
            "graded": a.half_tail.graded,
            "abelian_tail": a.half_tail.abelian_tail,
            "tail_ideals": a.half_tail.tail_ideals,
        },
        "provenance": provenance,
    });
    let mut t = Table::default();
    t.row("dim h", a.h_dim)
        .row("dim h0", a.h0_dim)
        .row("h0 abelian", yes_no(a.h0_abelian))
        .row("h0 solvable", yes_no(a.h0_solvable))
        .row("weissfeiler dims", dims_text(&w.dims()))
        .row("m", w.m)
        .row("ord", w.ord)
        .row("effective", yes_no(a.effective))
        .row("largest ideal dim", w.stabilized_at.dim())
        .row("routes agree", yes_no(a.consistent()))
        .row("half-tail graded", yes_no(a.half_tail.graded))
        .row("half-tail abelian", yes_no(a.half_tail.abelian_tail))
        .row("half-tail ideals", yes_no(a.half_tail.tail_ideals));
    let passed = a.effective && a.consistent() && a.half_tail.passed();
    Report { json, pretty: t.finish(), status: ExitStatus::from_check(passed) }
}

pub fn stiffening(r: &StiffeningReport, dims: [usize; 4]) -> Report {
    let json = json!({
        "sum_is_full": r.sum_is_full,
        "intersection_matches": r.intersection_matches,
        "holds": r.holds,
        "dim_identity": r.dim_identity,
        "dims": {"g_prime": dims[0], "h_prime": dims[1], "g": dims[2], "h": dims[3]},
    });
    let mut t = Table::default();
    t.row("g + h' = g'", yes_no(r.sum_is_full))
        .row("g ∩ h' = h", yes_no(r.intersection_matches))
        .row("stiffening", yes_no(r.holds))
        .row("dim identity", r.dim_identity.map_or("n/a", yes_no))
        .row("dims (g', h', g, h)", dims_text(&dims));
    Report { json, pretty: t.finish(), status: ExitStatus::from_check(r.holds) }
}

fn row_json(r: &FamilyRow) -> Value {
    json!({
        "k": r.k,
        "jet_length": r.jet_length,
        "certified": r.certified,
        "witness_index": r.witness_index,
        "ord_abelian": r.ord_abelian,
        "ord_stabilizer": r.ord_stabilizer,
        "ord_stated": r.ord_stated,
        "weissfeiler_dims_abelian": r.weissfeiler_dims_abelian,
        "weissfeiler_dims_stabilizer": r.weissfeiler_dims_stabilizer,
        "effective": r.effective(),
        "effective_abelian": r.effective_abelian,
        "effective_stabilizer": r.effective_stabilizer,
        "routes_agree": r.routes_agree,
        "half_tail": r.half_tail(),
        "half_tail_abelian": r.half_tail_abelian,
        "half_tail_stabilizer": r.half_tail_stabilizer,
    })
}

/// `failure` is `(k, reason)` for the row that stopped the run; that row is
/// the last one in `rows`.
pub fn family(k_max: usize, rows: &[FamilyRow], failure: Option<(usize, &str)>) -> Report {
    let json = json!({
        "family": "sl2-sympower",
        "k_max": k_max,
        "passed": failure.is_none(),
        "failure": failure.map(|(k, reason)| json!({"k": k, "reason": reason})),
        "rows": rows.iter().map(row_json).collect::<Vec<_>>(),
        "prop5_discrepancy_note": ORD_DISCREPANCY_NOTE,
    });
    let header = ["k", "jet", "cert", "ord_ab", "ord_stab", "ord_stated", "effective", "half_tail"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.k.to_string(),
                r.jet_length.to_string(),
                yes_no(r.certified).to_owned(),
                r.ord_abelian.to_string(),
                r.ord_stabilizer.to_string(),
                r.ord_stated.to_string(),
                yes_no(r.effective()).to_owned(),
                yes_no(r.half_tail()).to_owned(),
            ]
        })
        .collect();
    let mut pretty = grid(&header, &cells);
    if let Some((k, reason)) = failure {
        let _ = writeln!(pretty, "\nFAILED at k = {k}: {reason}");
    }
    let _ = writeln!(pretty, "\nnote: {ORD_DISCREPANCY_NOTE}");
    Report { json, pretty, status: ExitStatus::from_check(failure.is_none()) }
}

/// Output of `catalog`: the object itself, or a short receipt when written
/// to a file.
pub fn catalog(object: Value, written: Option<&str>, summary: Value) -> Report {
    match written {
        None => Report { pretty: render(&object), json: object, status: ExitStatus::Success },
        Some(path) => {
            let json = json!({"written": path, "object": summary});
            let pretty = format!("wrote {path}\n");
            Report { json, pretty, status: ExitStatus::Success }
        }
    }
}

pub fn error(message: &str, violations: Option<&ValidationReport>) -> Value {
    json!({"error": message, "violations": violations.map(validation_json)})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_aligns_keys() {
        let mut t = Table::default();
        t.row("a", 1).row("long key", "x");
        assert_eq!(t.finish(), "a         1\nlong key  x\n");
    }

    #[test]
    fn grid_right_aligns() {
        let g = grid(&["k", "value"], &[vec!["10".into(), "1".into()]]);
        assert_eq!(g, " k  value\n10      1\n");
    }
}
