//! Ideal arithmetic on element-indexed rings.
//!
//! An ideal is represented as a strictly increasing `Vec<usize>` of element
//! indices that contains 0. Every function here returns that form.

pub mod lattice;

pub use lattice::{
    enumerate_ideals, FieldProduct, IdealFlags, IdealLattice, RingClassification,
};

use crate::ring::FiniteRing;

/// Contains 0, closed under addition, absorbs multiplication by the ring.
/// Negation closure follows from additive closure at finite order.
pub fn is_ideal(ring: &FiniteRing, elems: &[usize]) -> bool {
    let m = ring.order();
    let mut member = vec![false; m];
    for &x in elems {
        if x >= m {
            return false;
        }
        member[x] = true;
    }
    if !member[0] {
        return false;
    }
    for &a in elems {
        for &b in elems {
            if !member[ring.add(a, b)] {
                return false;
            }
        }
        for r in 0..m {
            if !member[ring.mul(r, a)] {
                return false;
            }
        }
    }
    true
}

/// Smallest ideal containing `gens`; the empty generating set gives {0}.
pub fn ideal_closure(ring: &FiniteRing, gens: &[usize]) -> Vec<usize> {
    let m = ring.order();
    let mut member = vec![false; m];
    member[0] = true;
    let mut elems = vec![0usize];
    let mut queue: Vec<usize> = Vec::new();
    for &g in gens {
        if !member[g] {
            member[g] = true;
            elems.push(g);
            queue.push(g);
        }
    }
    while let Some(g) = queue.pop() {
        for r in 0..m {
            let p = ring.mul(r, g);
            if !member[p] {
                member[p] = true;
                elems.push(p);
                queue.push(p);
            }
        }
        let mut k = 0;
        while k < elems.len() {
            let s = ring.add(g, elems[k]);
            if !member[s] {
                member[s] = true;
                elems.push(s);
                queue.push(s);
            }
            k += 1;
        }
    }
    elems.sort_unstable();
    elems
}

/// Rx = {rx : r ∈ R}; already an ideal, no closure needed.
pub fn principal_ideal(ring: &FiniteRing, x: usize) -> Vec<usize> {
    let mut member = vec![false; ring.order()];
    let mut elems = Vec::new();
    for r in 0..ring.order() {
        let p = ring.mul(r, x);
        if !member[p] {
            member[p] = true;
            elems.push(p);
        }
    }
    elems.sort_unstable();
    elems
}

/// I + J = {a + b}; exact for ideals, no closure needed.
pub fn ideal_sum(ring: &FiniteRing, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut member = vec![false; ring.order()];
    let mut elems = Vec::new();
    for &x in a {
        for &y in b {
            let s = ring.add(x, y);
            if !member[s] {
                member[s] = true;
                elems.push(s);
            }
        }
    }
    elems.sort_unstable();
    elems
}

/// IJ = the ideal generated by pairwise products.
pub fn ideal_product(ring: &FiniteRing, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut member = vec![false; ring.order()];
    let mut gens = Vec::new();
    for &x in a {
        for &y in b {
            let p = ring.mul(x, y);
            if !member[p] {
                member[p] = true;
                gens.push(p);
            }
        }
    }
    ideal_closure(ring, &gens)
}

/// Set intersection of two sorted ideals; always an ideal.
pub fn ideal_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Ann(I) = {r : rI = (0)}; always an ideal.
pub fn annihilator(ring: &FiniteRing, elems: &[usize]) -> Vec<usize> {
    (0..ring.order())
        .filter(|&r| elems.iter().all(|&x| ring.mul(r, x) == 0))
        .collect()
}

/// Ann(x) = {r : rx = 0}; equals the annihilator of Rx.
pub fn element_annihilator(ring: &FiniteRing, x: usize) -> Vec<usize> {
    (0..ring.order()).filter(|&r| ring.mul(r, x) == 0).collect()
}

/// "(0)" and "R" for the trivial ideals, otherwise a greedily chosen
/// generator list like "(2)" or "(2,x)".
pub fn ideal_label(ring: &FiniteRing, elems: &[usize]) -> String {
    if elems.len() == 1 {
        return "(0)".to_string();
    }
    if elems.len() == ring.order() {
        return "R".to_string();
    }
    let mut gens: Vec<usize> = Vec::new();
    let mut covered = vec![0usize];
    while covered.len() < elems.len() {
        let next = elems
            .iter()
            .copied()
            .find(|x| covered.binary_search(x).is_err())
            .expect("target ideal strictly contains the span so far");
        gens.push(next);
        covered = ideal_closure(ring, &gens);
    }
    let names: Vec<String> = gens.iter().map(|&g| ring.label(g)).collect();
    format!("({})", names.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, parse_ring_spec};

    fn ring(s: &str) -> FiniteRing {
        build_ring(&parse_ring_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn closure_from_generators() {
        let z6 = ring("Z6");
        assert_eq!(ideal_closure(&z6, &[2]), vec![0, 2, 4]);
        assert_eq!(ideal_closure(&z6, &[]), vec![0]);
        assert_eq!(ideal_closure(&z6, &[1]), vec![0, 1, 2, 3, 4, 5]);
        let prod = ring("Z2 x Z4");
        // (1,0) generates Z2×0 = {0, 1}
        assert_eq!(ideal_closure(&prod, &[1]), vec![0, 1]);
    }

    #[test]
    fn principal_matches_closure() {
        for spec in ["Z6", "Z8", "Z2 x Z4", "Z4[x]/(x^2, 2x)"] {
            let r = ring(spec);
            for x in 0..r.order() {
                assert_eq!(principal_ideal(&r, x), ideal_closure(&r, &[x]), "{spec} x={x}");
            }
        }
    }

    #[test]
    fn ideal_predicate() {
        let z6 = ring("Z6");
        assert!(is_ideal(&z6, &[0, 3]));
        assert!(is_ideal(&z6, &[0, 2, 4]));
        assert!(!is_ideal(&z6, &[0, 1]));
        assert!(!is_ideal(&z6, &[2, 4]));
        assert!(!is_ideal(&z6, &[0, 3, 9]));
    }

    #[test]
    fn sum_product_intersection() {
        let z6 = ring("Z6");
        let i = vec![0, 3];
        let j = vec![0, 2, 4];
        assert_eq!(ideal_sum(&z6, &i, &j), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(ideal_product(&z6, &i, &j), vec![0]);
        assert_eq!(ideal_intersection(&i, &j), vec![0]);
        let z8 = ring("Z8");
        let two = principal_ideal(&z8, 2);
        assert_eq!(ideal_product(&z8, &two, &two), vec![0, 4]);
        let full: Vec<usize> = (0..8).collect();
        assert_eq!(ideal_product(&z8, &two, &full), two);
    }

    #[test]
    fn annihilators() {
        let z8 = ring("Z8");
        assert_eq!(annihilator(&z8, &[0, 2, 4, 6]), vec![0, 4]);
        assert_eq!(annihilator(&z8, &(0..8).collect::<Vec<_>>()), vec![0]);
        assert_eq!(annihilator(&z8, &[0]), (0..8).collect::<Vec<_>>());
        assert_eq!(element_annihilator(&z8, 2), vec![0, 4]);
        assert_eq!(element_annihilator(&z8, 2), annihilator(&z8, &principal_ideal(&z8, 2)));
    }

    #[test]
    fn labels_use_greedy_generators() {
        let z6 = ring("Z6");
        assert_eq!(ideal_label(&z6, &[0]), "(0)");
        assert_eq!(ideal_label(&z6, &[0, 3]), "(3)");
        assert_eq!(ideal_label(&z6, &[0, 2, 4]), "(2)");
        assert_eq!(ideal_label(&z6, &(0..6).collect::<Vec<_>>()), "R");
        let q = ring("Z4[x]/(x^2, 2x)");
        // {0, 2, x, 2+x} needs two generators
        assert_eq!(ideal_label(&q, &[0, 2, 4, 6]), "(2,x)");
        assert_eq!(ideal_label(&q, &[0, 4]), "(x)");
    }
}
