//! Lowering ring specs to concrete rings, plus coset quotients.

use super::spec::{Poly, RingSpec};
use super::{Backend, FiniteRing};
use crate::error::{Error, Result};

/// Resource ceilings for construction and enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Largest order for which operation tables are materialized.
    pub order_cap: usize,
    /// Largest ideal count the lattice enumeration may produce.
    pub ideal_cap: usize,
    /// Orders up to this bound get the cubic associativity and
    /// distributivity scan at build time; larger tables get the
    /// quadratic identity and inverse scan only.
    pub axiom_scan_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 4096,
            ideal_cap: 100_000,
            axiom_scan_cap: 64,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendChoice {
    /// Residue backend for plain Zn, tables for everything else.
    Auto,
    /// Force materialized tables, including for plain Zn.
    Table,
    /// Residue backend only; rejects specs that are not plain Zn.
    ZnFast,
}

pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing> {
    build_ring_with(spec, BackendChoice::Auto, Limits::default())
}

pub fn build_ring_with(
    spec: &RingSpec,
    choice: BackendChoice,
    limits: Limits,
) -> Result<FiniteRing> {
    match choice {
        BackendChoice::ZnFast => match spec {
            RingSpec::Zn(n) => Ok(zn_fast(*n)),
            _ => Err(Error::Unsupported(format!(
                "the divisor backend only supports plain Zn rings, got {spec}"
            ))),
        },
        BackendChoice::Auto => match spec {
            RingSpec::Zn(n) => Ok(zn_fast(*n)),
            _ => build_table(spec, limits),
        },
        BackendChoice::Table => build_table(spec, limits),
    }
}

/// Table-backed Z_n with residue labels.
pub fn zn_table(n: u64, limits: Limits) -> Result<FiniteRing> {
    check_order(n as u128, limits)?;
    let m = n as usize;
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    let mut neg = vec![0u32; m];
    for a in 0..m {
        neg[a] = ((n - a as u64) % n) as u32;
        for b in 0..m {
            add[a * m + b] = ((a as u64 + b as u64) % n) as u32;
            mul[a * m + b] = ((a as u64 * b as u64) % n) as u32;
        }
    }
    let labels = (0..m).map(|i| i.to_string()).collect();
    finalize_table(format!("Z{n}"), m, add, mul, neg, labels, limits)
}

/// The coset ring R/I. I must be a proper ideal given as element indices.
pub fn quotient_ring(ring: &FiniteRing, ideal: &[usize]) -> Result<FiniteRing> {
    quotient_ring_with(ring, ideal, Limits::default())
}

pub fn quotient_ring_with(
    ring: &FiniteRing,
    ideal: &[usize],
    limits: Limits,
) -> Result<FiniteRing> {
    check_order(ring.order() as u128, limits)?;
    if ideal.iter().any(|&x| x >= ring.order()) {
        return Err(Error::BadIdeal(format!(
            "element index out of range for {}",
            ring.name()
        )));
    }
    let mut elems: Vec<usize> = ideal.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if !crate::ideal::is_ideal(ring, &elems) {
        return Err(Error::BadIdeal(format!(
            "the given set is not an ideal of {}",
            ring.name()
        )));
    }
    if elems.len() == ring.order() {
        return Err(Error::BadIdeal(format!(
            "cannot quotient {} by the unit ideal",
            ring.name()
        )));
    }
    let labels: Vec<String> = elems.iter().map(|&x| ring.label(x)).collect();
    let name = format!("{}/{{{}}}", ring.name(), labels.join(", "));
    coset_quotient(ring, &elems, name, limits)
}

/// Coset construction shared by quotient_ring and the relator lowering.
/// Accepts the unit ideal (the result is the one-element ring).
fn coset_quotient(
    ring: &FiniteRing,
    ideal: &[usize],
    name: String,
    limits: Limits,
) -> Result<FiniteRing> {
    let m = ring.order();
    let mut class = vec![usize::MAX; m];
    let mut reps: Vec<usize> = Vec::new();
    // ascending scan: the first unassigned element is the least of its coset
    for x in 0..m {
        if class[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &i in ideal {
            class[ring.add(x, i)] = id;
        }
    }
    let q = reps.len();
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    let mut neg = vec![0u32; q];
    for (ci, &ri) in reps.iter().enumerate() {
        neg[ci] = class[ring.neg(ri)] as u32;
        for (cj, &rj) in reps.iter().enumerate() {
            add[ci * q + cj] = class[ring.add(ri, rj)] as u32;
            mul[ci * q + cj] = class[ring.mul(ri, rj)] as u32;
        }
    }
    let labels = reps.iter().map(|&r| ring.label(r)).collect();
    let out = finalize_table(name, q, add, mul, neg, labels, limits)?;
    debug_assert_eq!(out.one, class[ring.one()]);
    Ok(out)
}

fn zn_fast(n: u64) -> FiniteRing {
    FiniteRing {
        name: format!("Z{n}"),
        order: n as usize,
        one: if n == 1 { 0 } else { 1 },
        backend: Backend::ZnFast { n },
    }
}

fn build_table(spec: &RingSpec, limits: Limits) -> Result<FiniteRing> {
    check_order(spec_order(spec)?, limits)?;
    match spec {
        RingSpec::Zn(n) => zn_table(*n, limits),
        RingSpec::Product(factors) => product_table(spec, factors, limits),
        RingSpec::QuotientPoly { modulus, relators } => {
            quotient_table(*modulus, relators, &spec.to_string(), limits)
        }
    }
}

/// Element count a ring spec describes, saturating far past any cap.
fn spec_order(spec: &RingSpec) -> Result<u128> {
    Ok(match spec {
        RingSpec::Zn(n) => *n as u128,
        RingSpec::Product(factors) => {
            let mut total: u128 = 1;
            for f in factors {
                total = total.saturating_mul(spec_order(f)?);
            }
            total
        }
        RingSpec::QuotientPoly { modulus, relators } => {
            let f = first_monic(relators)?;
            let d = f.degree().expect("monic relators have positive degree");
            let mut total: u128 = 1;
            for _ in 0..d {
                total = total.saturating_mul(*modulus as u128);
            }
            total
        }
    })
}

fn check_order(order: u128, limits: Limits) -> Result<()> {
    if order > limits.order_cap as u128 {
        return Err(Error::CapExceeded {
            what: "ring order",
            needed: order.min(usize::MAX as u128) as usize,
            cap: limits.order_cap,
        });
    }
    Ok(())
}

fn first_monic(relators: &[Poly]) -> Result<&Poly> {
    relators
        .iter()
        .find(|r| r.is_monic())
        .ok_or_else(|| Error::Unsupported("the quotient needs a monic relator".to_string()))
}

fn product_table(spec: &RingSpec, factors: &[RingSpec], limits: Limits) -> Result<FiniteRing> {
    let rings: Vec<FiniteRing> = factors
        .iter()
        .map(|f| build_ring_with(f, BackendChoice::Auto, limits))
        .collect::<Result<_>>()?;
    let sizes: Vec<usize> = rings.iter().map(|r| r.order()).collect();
    let m: usize = sizes.iter().product();
    // mixed radix, first factor varies fastest
    let decode = |mut i: usize| -> Vec<usize> {
        sizes
            .iter()
            .map(|&s| {
                let c = i % s;
                i /= s;
                c
            })
            .collect()
    };
    let encode = |comps: &[usize]| -> usize {
        comps
            .iter()
            .zip(&sizes)
            .rev()
            .fold(0, |acc, (&c, &s)| acc * s + c)
    };
    let parts: Vec<Vec<usize>> = (0..m).map(decode).collect();
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    let mut neg = vec![0u32; m];
    let mut acc = vec![0usize; rings.len()];
    for a in 0..m {
        for (k, r) in rings.iter().enumerate() {
            acc[k] = r.neg(parts[a][k]);
        }
        neg[a] = encode(&acc) as u32;
        for b in 0..m {
            for (k, r) in rings.iter().enumerate() {
                acc[k] = r.add(parts[a][k], parts[b][k]);
            }
            add[a * m + b] = encode(&acc) as u32;
            for (k, r) in rings.iter().enumerate() {
                acc[k] = r.mul(parts[a][k], parts[b][k]);
            }
            mul[a * m + b] = encode(&acc) as u32;
        }
    }
    let labels = (0..m)
        .map(|i| {
            let inner: Vec<String> = parts[i]
                .iter()
                .zip(&rings)
                .map(|(&c, r)| r.label(c))
                .collect();
            format!("({})", inner.join(","))
        })
        .collect();
    finalize_table(spec.to_string(), m, add, mul, neg, labels, limits)
}

/// Two-stage lowering: reduce polynomials by the first monic relator, then
/// quotient that table ring by the ideal the remaining relators generate.
fn quotient_table(n: u64, relators: &[Poly], name: &str, limits: Limits) -> Result<FiniteRing> {
    let monic_at = relators
        .iter()
        .position(|r| r.is_monic())
        .ok_or_else(|| Error::Unsupported("the quotient needs a monic relator".to_string()))?;
    let f = &relators[monic_at];
    let d = f.degree().expect("monic relators have positive degree");
    let stage1 = monic_quotient_table(n, f, name, limits)?;
    let rest: Vec<&Poly> = relators
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != monic_at)
        .map(|(_, r)| r)
        .collect();
    if rest.is_empty() {
        return Ok(stage1);
    }
    // the residue class of x: for degree 1 the relator pins x to a constant
    let x_elem = if d >= 2 {
        n as usize
    } else {
        ((n - f.coeff(0) as u64) % n) as usize
    };
    let mut gens = Vec::new();
    for g in rest {
        let mut val = 0usize;
        for k in (0..g.coeffs().len()).rev() {
            val = stage1.add(stage1.mul(val, x_elem), g.coeff(k) as usize);
        }
        if val != 0 {
            gens.push(val);
        }
    }
    if gens.is_empty() {
        return Ok(stage1);
    }
    let ideal = crate::ideal::ideal_closure(&stage1, &gens);
    coset_quotient(&stage1, &ideal, name.to_string(), limits)
}

/// Z_n[x] modulo one monic relator of degree d: n^d elements, index
/// c₀ + c₁n + … + c_{d-1}n^{d-1}, polynomial labels.
fn monic_quotient_table(n: u64, f: &Poly, name: &str, limits: Limits) -> Result<FiniteRing> {
    let d = f.degree().expect("monic relators have positive degree");
    let mut order: u128 = 1;
    for _ in 0..d {
        order = order.saturating_mul(n as u128);
    }
    check_order(order, limits)?;
    let m = order as usize;
    let nn = n as usize;
    let fc: Vec<u64> = (0..d).map(|k| f.coeff(k) as u64).collect();
    let decode = |mut i: usize| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let c = (i % nn) as u64;
                i /= nn;
                c
            })
            .collect()
    };
    let encode = |c: &[u64]| -> usize { c.iter().rev().fold(0usize, |acc, &ck| acc * nn + ck as usize) };
    let coeffs: Vec<Vec<u64>> = (0..m).map(decode).collect();
    let mut add = vec![0u32; m * m];
    let mut mul = vec![0u32; m * m];
    let mut neg = vec![0u32; m];
    let mut buf = vec![0u64; 2 * d - 1];
    for a in 0..m {
        let pa = &coeffs[a];
        let nega: Vec<u64> = pa.iter().map(|&c| (n - c) % n).collect();
        neg[a] = encode(&nega) as u32;
        for b in 0..m {
            let pb = &coeffs[b];
            let sum: Vec<u64> = pa.iter().zip(pb).map(|(&x, &y)| (x + y) % n).collect();
            add[a * m + b] = encode(&sum) as u32;
            buf.iter_mut().for_each(|c| *c = 0);
            for (i, &x) in pa.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in pb.iter().enumerate() {
                    buf[i + j] = (buf[i + j] + x * y) % n;
                }
            }
            // x^d ≡ -(f₀ + f₁x + … + f_{d-1}x^{d-1})
            for k in (d..buf.len()).rev() {
                let q = buf[k];
                if q == 0 {
                    continue;
                }
                buf[k] = 0;
                for j in 0..d {
                    buf[k - d + j] = (buf[k - d + j] + (n - q * fc[j] % n)) % n;
                }
            }
            mul[a * m + b] = encode(&buf[..d]) as u32;
        }
    }
    let labels = (0..m).map(|i| poly_label(&coeffs[i])).collect();
    finalize_table(name.to_string(), m, add, mul, neg, labels, limits)
}

/// Ascending-power polynomial string: "0", "2+x", "3x^2".
fn poly_label(coeffs: &[u64]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        terms.push(match (c, k) {
            (_, 0) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, _) => format!("x^{k}"),
            (_, 1) => format!("{c}x"),
            _ => format!("{c}x^{k}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Assemble a table ring, discover the identity, and run the axiom scan.
/// Any violation is an internal construction bug, reported as such.
fn finalize_table(
    name: String,
    m: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    labels: Vec<String>,
    limits: Limits,
) -> Result<FiniteRing> {
    assert_eq!(add.len(), m * m);
    assert_eq!(mul.len(), m * m);
    assert_eq!(neg.len(), m);
    assert_eq!(labels.len(), m);
    let bad = |what: String| Err(Error::AxiomCheck(format!("{name}: {what}")));
    if add.iter().chain(&mul).chain(&neg).any(|&v| v as usize >= m) {
        return bad("table entry out of range".to_string());
    }
    for a in 0..m {
        if add[a] as usize != a {
            return bad(format!("0 + {a} != {a}"));
        }
        if add[a * m + neg[a] as usize] != 0 {
            return bad(format!("{a} + (-{a}) != 0"));
        }
        for b in 0..a {
            if add[a * m + b] != add[b * m + a] {
                return bad(format!("addition not commutative at ({a},{b})"));
            }
            if mul[a * m + b] != mul[b * m + a] {
                return bad(format!("multiplication not commutative at ({a},{b})"));
            }
        }
    }
    let one = (0..m)
        .find(|&e| (0..m).all(|a| mul[e * m + a] as usize == a))
        .ok_or_else(|| Error::AxiomCheck(format!("{name}: no multiplicative identity")))?;
    if m <= limits.axiom_scan_cap {
        for a in 0..m {
            for b in 0..m {
                let ab = add[a * m + b] as usize;
                let mab = mul[a * m + b] as usize;
                for c in 0..m {
                    if add[ab * m + c] != add[a * m + add[b * m + c] as usize] {
                        return bad(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if mul[mab * m + c] != mul[a * m + mul[b * m + c] as usize] {
                        return bad(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    let lhs = mul[a * m + add[b * m + c] as usize];
                    let rhs = add[mab * m + mul[a * m + c] as usize];
                    if lhs != rhs {
                        return bad(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
    }
    Ok(FiniteRing {
        name,
        order: m,
        one,
        backend: Backend::Table {
            add,
            mul,
            neg,
            labels,
        },
    })
}
