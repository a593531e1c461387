//! Report serialization: check verdicts as text or JSON, invariant atlases
//! as CSV, cross-check summaries. All formats are byte-stable.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::harness::corpus::{AtlasRow, CrosscheckReport};
use crate::harness::{CheckResult, Verdict};

/// (pass, fail, not applicable)
pub fn tally(results: &[CheckResult]) -> (usize, usize, usize) {
    let mut t = (0, 0, 0);
    for r in results {
        match r.verdict {
            Verdict::Pass => t.0 += 1,
            Verdict::Fail => t.1 += 1,
            Verdict::NotApplicable => t.2 += 1,
        }
    }
    t
}

pub fn checks_json(results: &[CheckResult]) -> Result<String> {
    let mut text =
        serde_json::to_string_pretty(results).map_err(|e| Error::Serialize(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn verdict_tag(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "[pass]",
        Verdict::Fail => "[fail]",
        Verdict::NotApplicable => "[n/a ]",
    }
}

/// One line per check, witnesses indented below failures.
pub fn checks_text(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{} {} {} (order {}): {}\n",
            verdict_tag(r.verdict),
            r.check,
            r.ring,
            r.order,
            r.detail
        ));
        if let (Verdict::Fail, Some(w)) = (r.verdict, &r.witness) {
            out.push_str(&format!("       witness: {w}\n"));
        }
    }
    let (p, f, n) = tally(results);
    out.push_str(&format!("passed {p}, failed {f}, not applicable {n}\n"));
    out
}

/// One summary line per ring, then full detail for any failures.
pub fn corpus_text(results: &[CheckResult]) -> String {
    let mut per_ring: BTreeMap<(usize, &str), (usize, usize, usize)> = BTreeMap::new();
    for r in results {
        let t = per_ring.entry((r.order, r.ring.as_str())).or_default();
        match r.verdict {
            Verdict::Pass => t.0 += 1,
            Verdict::Fail => t.1 += 1,
            Verdict::NotApplicable => t.2 += 1,
        }
    }
    let mut out = String::new();
    for ((order, ring), (p, f, n)) in &per_ring {
        out.push_str(&format!(
            "{ring} (order {order}): {p} pass, {f} fail, {n} n/a\n"
        ));
    }
    let failures: Vec<&CheckResult> = results
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .collect();
    if !failures.is_empty() {
        out.push_str("failures:\n");
        for r in failures {
            out.push_str(&format!(
                "{} {} {} (order {}): {}\n       witness: {}\n",
                verdict_tag(r.verdict),
                r.check,
                r.ring,
                r.order,
                r.detail,
                r.witness.as_deref().unwrap_or("")
            ));
        }
    }
    let (p, f, n) = tally(results);
    out.push_str(&format!(
        "total: {} rings, {p} pass, {f} fail, {n} n/a\n",
        per_ring.len()
    ));
    out
}

pub fn atlas_csv(rows: &[AtlasRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "ring",
        "order",
        "vertex_count",
        "edge_count",
        "diameter",
        "girth",
        "is_complete",
        "is_star",
    ])
    .map_err(|e| Error::Serialize(e.to_string()))?;
    for r in rows {
        w.write_record([
            r.ring.as_str(),
            &r.order.to_string(),
            &r.vertex_count.to_string(),
            &r.edge_count.to_string(),
            &r.diameter.to_string(),
            &r.girth.to_string(),
            &r.is_complete.to_string(),
            &r.is_star.to_string(),
        ])
        .map_err(|e| Error::Serialize(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialize(e.to_string()))
}

pub fn atlas_json(rows: &[AtlasRow]) -> Result<String> {
    let mut text =
        serde_json::to_string_pretty(rows).map_err(|e| Error::Serialize(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn crosscheck_text(report: &CrosscheckReport) -> String {
    let mut out = format!("{}/{} agree\n", report.agree, report.total);
    for d in &report.discrepancies {
        out.push_str(&format!("mismatch: {d}\n"));
    }
    out
}

pub fn crosscheck_json(report: &CrosscheckReport) -> Result<String> {
    #[derive(serde::Serialize)]
    struct Doc<'a> {
        total: usize,
        agree: usize,
        discrepancies: &'a [String],
    }
    let mut text = serde_json::to_string_pretty(&Doc {
        total: report.total,
        agree: report.agree,
        discrepancies: &report.discrepancies,
    })
    .map_err(|e| Error::Serialize(e.to_string()))?;
    text.push('\n');
    Ok(text)
}
