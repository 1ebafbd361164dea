use std::io::{self, Write};

use serde_json::json;
use trispec::analysis::Analysis;
use trispec::bounds::{BoundVerdict, Outcome, TheoremId};
use trispec::graph::Graph;
use trispec::patterns::{forbidden_scan, recognize, StructuralFlags};
use trispec::sweep::{format_sig, SweepReport};

/// Proven statements followed by the conjectures for r = 2, 3, 4 and ELW.
pub fn all_verdicts(a: &Analysis) -> Vec<BoundVerdict> {
    TheoremId::parse_list("all,conjectures")
        .expect("static list")
        .into_iter()
        .map(|id| a.verdict(id))
        .collect()
}

fn exception_name(id: TheoremId) -> &'static str {
    match id {
        TheoremId::BnSize | TheoremId::CountingSize | TheoremId::Nikiforov => "complete bipartite",
        TheoremId::CountingOrder => "T(n,2)",
        TheoremId::NonBipartite => "C5",
        TheoremId::Sk2Threshold => "SK(2,(m-1)/2)",
        _ => "exception",
    }
}

fn outcome_text(v: &BoundVerdict) -> String {
    if v.outcome == Outcome::Holds && v.exception_matched {
        format!("holds (exception: {})", exception_name(v.theorem))
    } else {
        v.outcome.to_string()
    }
}

fn flags_text(f: &StructuralFlags) -> String {
    format!(
        "complete_bipartite_plus_isolated={} turan_2={} c5_plus_isolated={} sk2_plus_isolated={}",
        f.is_complete_bipartite_plus_isolated, f.is_turan_2, f.is_c5_plus_isolated, f.is_sk2_plus_isolated
    )
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("serialises")
}

pub fn analysis_text(out: &mut impl Write, a: &Analysis, verdicts: &[BoundVerdict]) -> io::Result<()> {
    let r = a.record();
    let s = a.spectrum();
    let lambda2 = if s.len() >= 2 { format_sig(s.lambda(2)) } else { "-".into() };
    writeln!(out, "graph6    {}", a.graph())?;
    writeln!(out, "n {}  m {}  t {}", r.n, r.m, r.t)?;
    writeln!(
        out,
        "lambda1 {}  lambda2 {lambda2}  lambda_n {}",
        format_sig(s.lambda(1)),
        format_sig(s.smallest())
    )?;
    writeln!(out, "omega {}  n_plus {}  tol {}", r.omega, r.n_plus, format_sig(a.tol()))?;
    writeln!(out, "flags     {}", flags_text(a.flags()))?;
    writeln!(out)?;
    writeln!(
        out,
        "{:<20} {:<10} {:>14} {:>14} {:>14}  outcome",
        "theorem", "hypothesis", "bound", "actual", "slack"
    )?;
    for v in verdicts {
        writeln!(
            out,
            "{:<20} {:<10} {:>14} {:>14} {:>14}  {}",
            v.theorem.to_string(),
            v.hypothesis.to_string(),
            format_sig(v.bound_value),
            format_sig(v.actual_value),
            format_sig(v.slack),
            outcome_text(v)
        )?;
    }
    Ok(())
}

pub fn analysis_json(out: &mut impl Write, a: &Analysis, verdicts: &[BoundVerdict]) -> io::Result<()> {
    let value = json!({
        "graph6": a.graph().to_string(),
        "record": a.record(),
        "flags": a.flags(),
        "verdicts": verdicts,
    });
    writeln!(out, "{}", pretty(&value))
}

pub fn detect(out: &mut impl Write, g: &Graph, json: bool) -> io::Result<()> {
    let flags = recognize(g);
    let forbidden = forbidden_scan(g);
    if json {
        let value = json!({ "graph6": g.to_string(), "flags": flags, "forbidden_induced": forbidden });
        return writeln!(out, "{}", pretty(&value));
    }
    writeln!(out, "graph6    {g}")?;
    writeln!(out, "flags     {}", flags_text(&flags))?;
    let list: Vec<String> = forbidden.iter().map(|i| format!("G{i}")).collect();
    let list = if list.is_empty() { "none".to_string() } else { list.join(" ") };
    writeln!(out, "forbidden {list}")
}

pub fn sweep_summary(out: &mut impl Write, report: &SweepReport) -> io::Result<()> {
    for (id, c) in &report.per_theorem {
        writeln!(
            out,
            "{:<20} holds {} violated {} boundary {} hypothesis_not_met {}",
            id.to_string(),
            c.holds,
            c.violated,
            c.boundary,
            c.hypothesis_not_met
        )?;
    }
    for c in &report.counterexamples {
        eprintln!("VIOLATION {} {} slack {}", c.theorem, c.graph6, format_sig(c.slack));
    }
    writeln!(out, "{}", report.summary_line())
}
