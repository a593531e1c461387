//! Brute-force reference implementations. Slow on purpose: these exist so
//! the production algorithms have something independent to disagree with.

use std::collections::VecDeque;

use crate::graph::{Diameter, Girth, Graph};
use crate::ring::FiniteRing;

/// Every ideal, found by testing all carrier subsets containing 0.
/// Exponential; callers keep order ≤ 20.
pub fn ideals_by_subset_scan(ring: &FiniteRing) -> Vec<Vec<usize>> {
    let m = ring.order();
    assert!(m <= 20, "subset scan is exponential; got order {m}");
    let mut found = Vec::new();
    for mask in (1u32..(1 << m)).step_by(2) {
        let elems: Vec<usize> = (0..m).filter(|&x| mask & (1 << x) != 0).collect();
        let closed = elems.iter().all(|&a| {
            elems
                .iter()
                .all(|&b| mask & (1 << ring.add(a, b)) != 0)
                && (0..m).all(|r| mask & (1 << ring.mul(r, a)) != 0)
        });
        if closed {
            found.push(elems);
        }
    }
    found.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
}

pub fn diameter_by_floyd_warshall(g: &Graph) -> Diameter {
    let n = g.vertex_count();
    if n == 0 {
        return Diameter::Undefined;
    }
    const INF: u32 = u32::MAX / 2;
    let mut dist = vec![INF; n * n];
    for v in 0..n {
        dist[v * n + v] = 0;
    }
    for &(u, v) in g.edges() {
        dist[u * n + v] = 1;
        dist[v * n + u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i * n + k] + dist[k * n + j];
                if via < dist[i * n + j] {
                    dist[i * n + j] = via;
                }
            }
        }
    }
    let worst = *dist.iter().max().unwrap();
    if worst >= INF {
        Diameter::Infinite
    } else {
        Diameter::Finite(worst)
    }
}

/// Shortest cycle by deleting each edge and measuring the detour between
/// its endpoints.
pub fn girth_by_edge_removal(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = u32::MAX;
    for &(s, t) in g.edges() {
        // BFS from s to t without using the edge (s, t)
        let mut dist = vec![u32::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if (u, v) == (s, t) || (v, u) == (s, t) {
                    continue;
                }
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if dist[t] != u32::MAX {
            best = best.min(dist[t] + 1);
        }
    }
    if best == u32::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}
