//! JSON and DOT serialization. Output is byte-stable for a fixed input:
//! key order follows the struct declarations and every list is emitted in
//! canonical vertex order.

use serde::Serialize;

use super::{ElementGraph, GraphInvariants, IdealGraph};
use crate::error::{Error, Result};
use crate::ideal::IdealLattice;
use crate::ring::FiniteRing;

#[derive(Serialize)]
struct GraphDoc<'a> {
    ring: &'a str,
    order: usize,
    graph: &'static str,
    vertices: Vec<VertexDoc>,
    edges: &'a [(usize, usize)],
    invariants: GraphInvariants,
}

#[derive(Serialize)]
struct VertexDoc {
    id: usize,
    label: String,
    elements: Vec<usize>,
    is_prime: bool,
    is_maximal: bool,
    is_minimal: bool,
}

fn pretty(doc: &GraphDoc) -> Result<String> {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| Error::Serialize(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

pub fn ag_json(lat: &IdealLattice, ag: &IdealGraph) -> Result<String> {
    let vertices = ag
        .ids
        .iter()
        .enumerate()
        .map(|(pos, &id)| {
            let flags = lat.classify_ideal(id);
            VertexDoc {
                id: pos,
                label: lat.label(id),
                elements: lat.elements(id),
                is_prime: flags.is_prime,
                is_maximal: flags.is_maximal,
                is_minimal: flags.is_minimal,
            }
        })
        .collect();
    pretty(&GraphDoc {
        ring: lat.ring().name(),
        order: lat.ring().order(),
        graph: "AG",
        vertices,
        edges: ag.graph.edges(),
        invariants: ag.graph.invariants(),
    })
}

/// Element vertices carry the flags of the principal ideal they generate.
pub fn gamma_json(lat: &IdealLattice, gamma: &ElementGraph) -> Result<String> {
    let ring = lat.ring();
    let vertices = gamma
        .elems
        .iter()
        .enumerate()
        .map(|(pos, &x)| {
            let flags = lat.classify_ideal(lat.principal_id(x));
            VertexDoc {
                id: pos,
                label: ring.label(x),
                elements: vec![x],
                is_prime: flags.is_prime,
                is_maximal: flags.is_maximal,
                is_minimal: flags.is_minimal,
            }
        })
        .collect();
    pretty(&GraphDoc {
        ring: ring.name(),
        order: ring.order(),
        graph: "Gamma",
        vertices,
        edges: gamma.graph.edges(),
        invariants: gamma.graph.invariants(),
    })
}

pub fn invariants_json(inv: &GraphInvariants) -> Result<String> {
    let mut text =
        serde_json::to_string_pretty(inv).map_err(|e| Error::Serialize(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

fn dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = format!("graph {name} {{\n");
    for label in labels {
        out.push_str(&format!("  \"{label}\";\n"));
    }
    for &(u, v) in edges {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", labels[u], labels[v]));
    }
    out.push_str("}\n");
    out
}

pub fn ag_dot(lat: &IdealLattice, ag: &IdealGraph) -> String {
    let labels: Vec<String> = ag.ids.iter().map(|&id| lat.label(id)).collect();
    dot("ag", &labels, ag.graph.edges())
}

pub fn gamma_dot(ring: &FiniteRing, gamma: &ElementGraph) -> String {
    let labels: Vec<String> = gamma.elems.iter().map(|&x| ring.label(x)).collect();
    dot("gamma", &labels, gamma.graph.edges())
}
