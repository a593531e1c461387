//! Ring corpora: families of finite rings the checks sweep over, plus the
//! divisor-vs-table backend cross-validation.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::Result;
use crate::graph::build_ag_graph;
use crate::harness::{run_check, CheckId, CheckResult, RingCtx, ALL_CHECKS};
use crate::ideal::enumerate_ideals;
use crate::ring::{build_ring_with, zn_table, BackendChoice, FiniteRing, Limits, RingSpec};

pub enum Family {
    ZnRange {
        min: u64,
        max: u64,
        backend: BackendChoice,
    },
    /// Products Z_{q1} × ... × Z_{qk} over non-decreasing prime-power
    /// tuples (k ≥ 2) with product at most max_order.
    PrimePowerProducts { max_order: u64 },
    ExplicitList(Vec<RingSpec>),
}

pub fn corpus_rings(family: &Family, limits: Limits) -> Result<Vec<Arc<FiniteRing>>> {
    let mut rings = Vec::new();
    match family {
        Family::ZnRange { min, max, backend } => {
            for n in *min..=*max {
                rings.push(Arc::new(build_ring_with(&RingSpec::Zn(n), *backend, limits)?));
            }
        }
        Family::PrimePowerProducts { max_order } => {
            for tuple in prime_power_tuples(*max_order) {
                let spec = RingSpec::Product(tuple.into_iter().map(RingSpec::Zn).collect());
                rings.push(Arc::new(build_ring_with(&spec, BackendChoice::Table, limits)?));
            }
        }
        Family::ExplicitList(specs) => {
            for spec in specs {
                rings.push(Arc::new(build_ring_with(spec, BackendChoice::Auto, limits)?));
            }
        }
    }
    sort_rings(&mut rings);
    Ok(rings)
}

fn sort_rings(rings: &mut [Arc<FiniteRing>]) {
    rings.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.name().cmp(b.name()))
    });
}

fn prime_powers_up_to(cap: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in 2..=cap {
        if !crate::arith::is_prime(p) {
            continue;
        }
        let mut q = p;
        while q <= cap {
            out.push(q);
            q = match q.checked_mul(p) {
                Some(v) => v,
                None => break,
            };
        }
    }
    out.sort_unstable();
    out
}

fn prime_power_tuples(max_order: u64) -> Vec<Vec<u64>> {
    let base = prime_powers_up_to(max_order / 2);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn dfs(base: &[u64], from: usize, room: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        for (i, &q) in base.iter().enumerate().skip(from) {
            if q > room {
                break;
            }
            cur.push(q);
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            dfs(base, i, room / q, cur, out);
            cur.pop();
        }
    }
    dfs(&base, 0, max_order, &mut cur, &mut out);
    out
}

/// The everything-on-the-table-backend corpus: Z_n for 2..=max as explicit
/// tables, all prime-power products up to max, and a few polynomial
/// quotients exercising the non-cyclic code paths.
pub fn standard_table_corpus(max: u64, limits: Limits) -> Result<Vec<Arc<FiniteRing>>> {
    use crate::ring::parse_ring_spec;
    let mut rings = corpus_rings(
        &Family::ZnRange {
            min: 2,
            max,
            backend: BackendChoice::Table,
        },
        limits,
    )?;
    rings.extend(corpus_rings(&Family::PrimePowerProducts { max_order: max }, limits)?);
    let quotients = [
        "Z2[x]/(x^2)",
        "Z2[x]/(x^2 + x + 1)",
        "Z4[x]/(x^2, 2x)",
    ];
    for spec in quotients {
        rings.push(Arc::new(build_ring_with(
            &parse_ring_spec(spec)?,
            BackendChoice::Table,
            limits,
        )?));
    }
    sort_rings(&mut rings);
    Ok(rings)
}

/// Selected checks in catalog order on every ring, ring-major. Rings are
/// processed in parallel; the result order is restored afterwards.
pub fn run_checks(
    rings: &[Arc<FiniteRing>],
    checks: &[CheckId],
    limits: Limits,
) -> Result<Vec<CheckResult>> {
    let ordered: Vec<CheckId> = ALL_CHECKS
        .iter()
        .copied()
        .filter(|id| checks.contains(id))
        .collect();
    let per_ring: Vec<Vec<CheckResult>> = rings
        .par_iter()
        .map(|ring| {
            let ctx = RingCtx::new(Arc::clone(ring), limits);
            ordered.iter().map(|&id| run_check(&ctx, id)).collect()
        })
        .collect::<Result<_>>()?;
    Ok(per_ring.into_iter().flatten().collect())
}

#[derive(serde::Serialize)]
pub struct AtlasRow {
    pub ring: String,
    pub order: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub diameter: crate::graph::Diameter,
    pub girth: crate::graph::Girth,
    pub is_complete: bool,
    pub is_star: bool,
}

pub fn atlas_rows(rings: &[Arc<FiniteRing>], limits: Limits) -> Result<Vec<AtlasRow>> {
    rings
        .par_iter()
        .map(|ring| {
            let ctx = RingCtx::new(Arc::clone(ring), limits);
            let inv = ctx.ag_inv()?;
            Ok(AtlasRow {
                ring: ring.name().to_string(),
                order: ring.order(),
                vertex_count: inv.vertex_count,
                edge_count: inv.edge_count,
                diameter: inv.diameter,
                girth: inv.girth,
                is_complete: inv.is_complete,
                is_star: inv.is_star,
            })
        })
        .collect()
}

pub struct CrosscheckReport {
    pub total: usize,
    pub agree: usize,
    pub discrepancies: Vec<String>,
}

/// Builds Z_n on both backends for every n up to max_n and compares the
/// lattices and graphs item by item. Moduli are compared in parallel;
/// discrepancies come back in modulus order.
pub fn crosscheck_zn(max_n: u64, limits: Limits) -> Result<CrosscheckReport> {
    let per_n: Vec<Vec<String>> = (1..=max_n)
        .into_par_iter()
        .map(|n| crosscheck_one(n, limits))
        .collect::<Result<_>>()?;
    let mut report = CrosscheckReport {
        total: max_n as usize,
        agree: 0,
        discrepancies: Vec::new(),
    };
    for bad in per_n {
        if bad.is_empty() {
            report.agree += 1;
        } else {
            report.discrepancies.extend(bad);
        }
    }
    Ok(report)
}

fn crosscheck_one(n: u64, limits: Limits) -> Result<Vec<String>> {
    let fast = Arc::new(build_ring_with(
        &RingSpec::Zn(n),
        BackendChoice::ZnFast,
        limits,
    )?);
    let slow = Arc::new(zn_table(n, limits)?);
    let lf = enumerate_ideals(&fast, limits)?;
    let ls = enumerate_ideals(&slow, limits)?;
    let mut bad = Vec::new();
    if lf.count() != ls.count() {
        bad.push(format!(
            "Z{n}: ideal counts differ ({} divisor vs {} table)",
            lf.count(),
            ls.count()
        ));
    } else {
        for id in 0..lf.count() {
            if lf.elements(id) != ls.elements(id) {
                bad.push(format!("Z{n}: ideal {id} element sets differ"));
            }
            if lf.label(id) != ls.label(id) {
                bad.push(format!(
                    "Z{n}: ideal {id} labels differ ({} vs {})",
                    lf.label(id),
                    ls.label(id)
                ));
            }
            if lf.classify_ideal(id) != ls.classify_ideal(id) {
                bad.push(format!("Z{n}: ideal {id} flags differ"));
            }
        }
        let gf = build_ag_graph(&lf);
        let gs = build_ag_graph(&ls);
        if gf.ids != gs.ids {
            bad.push(format!("Z{n}: vertex sets differ"));
        }
        if gf.graph.edges() != gs.graph.edges() {
            bad.push(format!("Z{n}: edge sets differ"));
        }
        if gf.graph.invariants() != gs.graph.invariants() {
            bad.push(format!("Z{n}: invariants differ"));
        }
    }
    Ok(bad)
}
