//! Undirected simple graphs with exact invariants, plus the two graph
//! constructions this crate exists for.

pub mod export;

use std::collections::VecDeque;

use serde::ser::{Serialize, Serializer};

use crate::ideal::IdealLattice;
use crate::ring::FiniteRing;

/// Dense undirected graph over vertex positions 0..n.
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Infinite,
    /// No vertices, so eccentricity has no meaning.
    Undefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u32(*d),
            Diameter::Infinite => s.serialize_str("inf"),
            Diameter::Undefined => s.serialize_none(),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u32(*g),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
            Diameter::Undefined => write!(f, "undef"),
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub is_connected: bool,
    pub diameter: Diameter,
    pub girth: Girth,
    pub is_complete: bool,
    pub is_star: bool,
    pub universal_vertices: Vec<usize>,
    #[serde(skip)]
    pub degree_sequence: Vec<usize>,
}

impl Graph {
    /// Graph on n vertices with edges decided by a predicate over pairs
    /// i < j. Edge list comes out sorted.
    pub fn build(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut adj = vec![false; n * n];
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if adjacent(i, j) {
                    adj[i * n + j] = true;
                    adj[j * n + i] = true;
                    edges.push((i, j));
                }
            }
        }
        Graph { n, adj, edges }
    }

    pub fn from_edges(n: usize, list: &[(usize, usize)]) -> Graph {
        let mut adj = vec![false; n * n];
        for &(u, v) in list {
            assert!(u != v && u < n && v < n, "bad edge ({u}, {v})");
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if adj[i * n + j] {
                    edges.push((i, j));
                }
            }
        }
        Graph { n, adj, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter().enumerate().filter(|(_, &a)| a).map(|(v, _)| v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        count
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Undefined;
        }
        let mut best = 0u32;
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.fill(u32::MAX);
            dist[root] = 0;
            queue.push_back(root);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        best = best.max(dist[v]);
                        reached += 1;
                        queue.push_back(v);
                    }
                }
            }
            if reached < self.n {
                return Diameter::Infinite;
            }
        }
        Diameter::Finite(best)
    }

    /// Shortest cycle length. BFS from every root; a non-tree edge (u, v)
    /// seen from root r witnesses a closed walk of length d(u) + d(v) + 1,
    /// always ≥ girth, with equality for some root on a shortest cycle.
    pub fn girth(&self) -> Girth {
        let mut best = u32::MAX;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.fill(u32::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == u32::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&u| self.degree(u) == self.n - 1).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// One center adjacent to everything, no other edges. K₁ and K₂ count.
    pub fn is_star(&self) -> bool {
        self.n >= 1
            && self.edges.len() == self.n - 1
            && !self.universal_vertices().is_empty()
    }

    pub fn invariants(&self) -> GraphInvariants {
        GraphInvariants {
            vertex_count: self.n,
            edge_count: self.edges.len(),
            is_connected: self.is_connected(),
            diameter: self.diameter(),
            girth: self.girth(),
            is_complete: self.is_complete(),
            is_star: self.is_star(),
            universal_vertices: self.universal_vertices(),
            degree_sequence: self.degree_sequence(),
        }
    }
}

/// Annihilating-ideal graph: vertices are the nonzero ideals with nonzero
/// annihilator, in canonical lattice order; I and J distinct are adjacent
/// exactly when IJ = (0).
pub struct IdealGraph {
    pub graph: Graph,
    /// ids[p] = lattice id of the ideal at vertex position p.
    pub ids: Vec<usize>,
}

pub fn build_ag_graph(lat: &IdealLattice) -> IdealGraph {
    let ids = lat.annihilating_ideal_set();
    let zero = lat.zero_id();
    let graph = Graph::build(ids.len(), |i, j| lat.product(ids[i], ids[j]) == zero);
    IdealGraph { graph, ids }
}

/// Zero-divisor graph: vertices are the nonzero zero-divisors in ascending
/// element order; x and y distinct are adjacent exactly when xy = 0.
pub struct ElementGraph {
    pub graph: Graph,
    /// elems[p] = ring element at vertex position p.
    pub elems: Vec<usize>,
}

pub fn build_zero_divisor_graph(ring: &FiniteRing) -> ElementGraph {
    let elems: Vec<usize> = ring
        .zero_divisors()
        .into_iter()
        .filter(|&x| x != ring.zero())
        .collect();
    let graph = Graph::build(elems.len(), |i, j| ring.mul(elems[i], elems[j]) == ring.zero());
    ElementGraph { graph, elems }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_ideals;
    use crate::ring::{build_ring, parse_ring_spec, Limits};
    use std::sync::Arc;

    fn lat(spec: &str) -> IdealLattice {
        let ring = Arc::new(build_ring(&parse_ring_spec(spec).unwrap()).unwrap());
        enumerate_ideals(&ring, Limits::default()).unwrap()
    }

    #[test]
    fn invariants_of_small_hand_graphs() {
        let empty = Graph::build(0, |_, _| false);
        assert!(empty.is_connected());
        assert_eq!(empty.component_count(), 0);
        assert_eq!(empty.diameter(), Diameter::Undefined);
        assert_eq!(empty.girth(), Girth::Infinite);
        assert!(empty.is_complete());
        assert!(!empty.is_star());

        let k1 = Graph::build(1, |_, _| false);
        assert_eq!(k1.diameter(), Diameter::Finite(0));
        assert!(k1.is_complete() && k1.is_star());
        assert_eq!(k1.universal_vertices(), vec![0]);

        let k2 = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(k2.diameter(), Diameter::Finite(1));
        assert!(k2.is_complete() && k2.is_star());
        assert_eq!(k2.universal_vertices(), vec![0, 1]);

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.diameter(), Diameter::Finite(2));
        assert_eq!(p3.girth(), Girth::Infinite);
        assert!(!p3.is_complete() && p3.is_star());
        assert_eq!(p3.universal_vertices(), vec![1]);
        assert_eq!(p3.degree_sequence(), vec![2, 1, 1]);

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(c4.girth(), Girth::Finite(4));
        assert_eq!(c4.diameter(), Diameter::Finite(2));
        assert!(!c4.is_star());

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(c5.girth(), Girth::Finite(5));

        let k4 = Graph::build(4, |_, _| true);
        assert_eq!(k4.girth(), Girth::Finite(3));
        assert_eq!(k4.diameter(), Diameter::Finite(1));
        assert!(k4.is_complete());
        assert_eq!(k4.edge_count(), 6);

        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert!(!split.is_connected());
        assert_eq!(split.component_count(), 2);
        assert_eq!(split.diameter(), Diameter::Infinite);

        let isolated = Graph::from_edges(3, &[(0, 1)]);
        assert!(!isolated.is_connected());
        assert_eq!(isolated.diameter(), Diameter::Infinite);
    }

    #[test]
    fn ag_of_z6_is_an_edge() {
        let lat = lat("Z6");
        let ag = build_ag_graph(&lat);
        assert_eq!(ag.ids, vec![1, 2]);
        assert_eq!(ag.graph.edges(), &[(0, 1)]);
        let inv = ag.graph.invariants();
        assert!(inv.is_complete && inv.is_star && inv.is_connected);
        assert_eq!(inv.diameter, Diameter::Finite(1));
        assert_eq!(inv.girth, Girth::Infinite);
    }

    #[test]
    fn ag_of_z16_is_a_star_with_center_8() {
        let lat = lat("Z16");
        let ag = build_ag_graph(&lat);
        let labels: Vec<String> = ag.ids.iter().map(|&id| lat.label(id)).collect();
        assert_eq!(labels, vec!["(8)", "(4)", "(2)"]);
        assert_eq!(ag.graph.edges(), &[(0, 1), (0, 2)]);
        let inv = ag.graph.invariants();
        assert!(inv.is_star && !inv.is_complete);
        assert_eq!(inv.universal_vertices, vec![0]);
        assert_eq!(inv.girth, Girth::Infinite);
        assert_eq!(inv.diameter, Diameter::Finite(2));
    }

    #[test]
    fn ag_of_z2_x_z4_is_a_path_of_diameter_3() {
        let lat = lat("Z2 x Z4");
        let ag = build_ag_graph(&lat);
        assert_eq!(ag.graph.vertex_count(), 4);
        assert_eq!(ag.graph.edges(), &[(0, 1), (0, 3), (1, 2)]);
        assert_eq!(ag.graph.diameter(), Diameter::Finite(3));
        assert_eq!(ag.graph.girth(), Girth::Infinite);
    }

    #[test]
    fn ag_of_z2_cubed_has_girth_3() {
        let lat = lat("Z2 x Z2 x Z2");
        let ag = build_ag_graph(&lat);
        assert_eq!(ag.graph.vertex_count(), 6);
        assert_eq!(ag.graph.girth(), Girth::Finite(3));
        assert!(ag.graph.is_connected());
    }

    #[test]
    fn ag_of_a_field_is_empty() {
        let lat = lat("Z7");
        let ag = build_ag_graph(&lat);
        assert_eq!(ag.graph.vertex_count(), 0);
        assert_eq!(ag.graph.diameter(), Diameter::Undefined);
        assert!(ag.graph.is_connected());
    }

    #[test]
    fn gamma_of_z8_is_a_path() {
        let ring = build_ring(&parse_ring_spec("Z8").unwrap()).unwrap();
        let gamma = build_zero_divisor_graph(&ring);
        assert_eq!(gamma.elems, vec![2, 4, 6]);
        assert_eq!(gamma.graph.edges(), &[(0, 1), (1, 2)]);
        assert!(gamma.graph.is_star());
        assert_eq!(gamma.graph.universal_vertices(), vec![1]);
    }

    #[test]
    fn gamma_of_z2_x_z2_is_complete() {
        let ring = build_ring(&parse_ring_spec("Z2 x Z2").unwrap()).unwrap();
        let gamma = build_zero_divisor_graph(&ring);
        assert_eq!(gamma.elems, vec![1, 2]);
        assert!(gamma.graph.is_complete());
        assert_eq!(gamma.graph.edge_count(), 1);
    }

    #[test]
    fn gamma_of_a_field_is_empty() {
        let ring = build_ring(&parse_ring_spec("Z5").unwrap()).unwrap();
        let gamma = build_zero_divisor_graph(&ring);
        assert_eq!(gamma.graph.vertex_count(), 0);
    }
}
