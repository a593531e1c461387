//! Complete ideal enumeration with lattice-level arithmetic and flags.
//!
//! Two interchangeable backends: Explicit stores every ideal as its element
//! set (any table ring); Divisor keys the ideals of a residue ring Z_n by
//! the divisors of n (dZ_n ↔ d) so corpora can scale far past table range.
//! Ideal ids are positions in a canonical order: ascending cardinality,
//! ties broken lexicographically by element list.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, Limits};

use super::{
    annihilator, element_annihilator, ideal_intersection, ideal_label, ideal_product, ideal_sum,
    principal_ideal,
};

pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    data: BackendData,
    prime: Vec<bool>,
    maximal: Vec<bool>,
    minimal: Vec<bool>,
    principal: Vec<bool>,
}

enum BackendData {
    Divisor {
        n: u64,
        divisors: Vec<u64>,
        index_of: HashMap<u64, usize>,
    },
    Explicit {
        sets: Vec<Vec<usize>>,
        index_of: HashMap<Vec<usize>, usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealFlags {
    pub is_prime: bool,
    pub is_maximal: bool,
    pub is_minimal: bool,
    pub is_principal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingClassification {
    pub is_field: bool,
    pub is_domain: bool,
    pub is_local: bool,
    pub local_maximal: Option<usize>,
}

/// A decomposition R ≅ F₁ × F₂ into two fields, witnessed by an idempotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldProduct {
    pub e: usize,
    pub complement: usize,
    pub ideal_e: usize,
    pub ideal_complement: usize,
}

/// Every ideal of the ring. Residue rings on the fast backend get the
/// divisor lattice; everything else is enumerated from principal-ideal
/// seeds closed under pairwise sums.
pub fn enumerate_ideals(ring: &Arc<FiniteRing>, limits: Limits) -> Result<IdealLattice> {
    match ring.zn_modulus() {
        Some(n) => Ok(divisor_lattice(ring, n)),
        None => explicit_lattice(ring, limits),
    }
}

fn divisor_lattice(ring: &Arc<FiniteRing>, n: u64) -> IdealLattice {
    // descending divisor = ascending cardinality n/d
    let divisors = arith::divisors_desc(n);
    let index_of = divisors.iter().enumerate().map(|(i, &d)| (d, i)).collect();
    let mut prime = Vec::with_capacity(divisors.len());
    let mut maximal = Vec::with_capacity(divisors.len());
    let mut minimal = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        // Z_n/dZ_n ≅ Z_d, a field exactly when d is prime; finite quotients
        // that are domains are fields, so prime and maximal coincide
        let max = arith::is_prime(d);
        prime.push(max);
        maximal.push(max);
        minimal.push(d != 1 && d != n && arith::is_prime(n / d));
    }
    let principal = vec![true; divisors.len()];
    IdealLattice {
        ring: Arc::clone(ring),
        data: BackendData::Divisor {
            n,
            divisors,
            index_of,
        },
        prime,
        maximal,
        minimal,
        principal,
    }
}

fn explicit_lattice(ring: &Arc<FiniteRing>, limits: Limits) -> Result<IdealLattice> {
    let m = ring.order();
    let mut sets: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for x in 0..m {
        let p = principal_ideal(ring, x);
        if !seen.contains_key(&p) {
            if sets.len() >= limits.ideal_cap {
                return Err(Error::CapExceeded {
                    what: "ideal count",
                    needed: sets.len() + 1,
                    cap: limits.ideal_cap,
                });
            }
            seen.insert(p.clone(), sets.len());
            sets.push(p);
        }
    }
    let principal_count = sets.len();
    // every ideal is a finite sum of principal ideals, so pairwise-sum
    // closure over the seeds reaches all of them
    let mut i = 0;
    while i < sets.len() {
        for j in 0..i {
            let s = ideal_sum(ring, &sets[i], &sets[j]);
            if !seen.contains_key(&s) {
                if sets.len() >= limits.ideal_cap {
                    return Err(Error::CapExceeded {
                        what: "ideal count",
                        needed: sets.len() + 1,
                        cap: limits.ideal_cap,
                    });
                }
                seen.insert(s.clone(), sets.len());
                sets.push(s);
            }
        }
        i += 1;
    }
    let principal_sets: Vec<Vec<usize>> = sets[..principal_count].to_vec();
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index_of: HashMap<Vec<usize>, usize> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let principal: Vec<bool> = sets
        .iter()
        .map(|s| principal_sets.iter().any(|p| p == s))
        .collect();

    let count = sets.len();
    let zero = 0;
    let unit = count - 1;
    let subset = |a: &[usize], b: &[usize]| ideal_intersection(a, b).len() == a.len();
    let mut maximal = vec![false; count];
    let mut minimal = vec![false; count];
    for i in 0..count {
        if i != unit {
            maximal[i] = (0..count)
                .all(|j| j == i || j == unit || !(sets[i].len() < sets[j].len() && subset(&sets[i], &sets[j])));
        }
        if i != zero && i != unit {
            minimal[i] = (0..count)
                .all(|j| j == i || j == zero || !(sets[j].len() < sets[i].len() && subset(&sets[j], &sets[i])));
        }
    }
    let mut prime = vec![false; count];
    for (i, set) in sets.iter().enumerate() {
        if i == unit {
            continue;
        }
        let mut member = vec![false; m];
        for &x in set {
            member[x] = true;
        }
        // prime ⟺ the complement is closed under multiplication
        let outside: Vec<usize> = (0..m).filter(|&x| !member[x]).collect();
        prime[i] = outside
            .iter()
            .all(|&a| outside.iter().all(|&b| b < a || !member[ring.mul(a, b)]));
    }
    for i in 0..count {
        // finite quotients that are domains are fields
        debug_assert_eq!(prime[i], maximal[i], "ideal {i} of {}", ring.name());
    }
    Ok(IdealLattice {
        ring: Arc::clone(ring),
        data: BackendData::Explicit { sets, index_of },
        prime,
        maximal,
        minimal,
        principal,
    })
}

impl IdealLattice {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn count(&self) -> usize {
        match &self.data {
            BackendData::Divisor { divisors, .. } => divisors.len(),
            BackendData::Explicit { sets, .. } => sets.len(),
        }
    }

    pub fn zero_id(&self) -> usize {
        0
    }

    pub fn unit_id(&self) -> usize {
        self.count() - 1
    }

    pub fn size(&self, id: usize) -> usize {
        match &self.data {
            BackendData::Divisor { n, divisors, .. } => (n / divisors[id]) as usize,
            BackendData::Explicit { sets, .. } => sets[id].len(),
        }
    }

    pub fn elements(&self, id: usize) -> Vec<usize> {
        match &self.data {
            BackendData::Divisor { n, divisors, .. } => {
                (0..*n).step_by(divisors[id] as usize).map(|x| x as usize).collect()
            }
            BackendData::Explicit { sets, .. } => sets[id].clone(),
        }
    }

    pub fn label(&self, id: usize) -> String {
        match &self.data {
            BackendData::Divisor { n, divisors, .. } => {
                let d = divisors[id];
                if d == *n {
                    "(0)".to_string()
                } else if d == 1 {
                    "R".to_string()
                } else {
                    format!("({d})")
                }
            }
            BackendData::Explicit { sets, .. } => ideal_label(&self.ring, &sets[id]),
        }
    }

    pub fn classify_ideal(&self, id: usize) -> IdealFlags {
        IdealFlags {
            is_prime: self.prime[id],
            is_maximal: self.maximal[id],
            is_minimal: self.minimal[id],
            is_principal: self.principal[id],
        }
    }

    /// a ⊆ b as subsets of the carrier.
    pub fn is_contained(&self, a: usize, b: usize) -> bool {
        match &self.data {
            BackendData::Divisor { divisors, .. } => divisors[a] % divisors[b] == 0,
            BackendData::Explicit { sets, .. } => {
                ideal_intersection(&sets[a], &sets[b]).len() == sets[a].len()
            }
        }
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        match &self.data {
            BackendData::Divisor {
                n,
                divisors,
                index_of,
            } => {
                let y = (divisors[a] as u128 * divisors[b] as u128 % *n as u128) as u64;
                index_of[&arith::gcd(y, *n)]
            }
            BackendData::Explicit { sets, index_of } => {
                index_of[ideal_product(&self.ring, &sets[a], &sets[b]).as_slice()]
            }
        }
    }

    pub fn sum(&self, a: usize, b: usize) -> usize {
        match &self.data {
            BackendData::Divisor {
                divisors, index_of, ..
            } => index_of[&arith::gcd(divisors[a], divisors[b])],
            BackendData::Explicit { sets, index_of } => {
                index_of[ideal_sum(&self.ring, &sets[a], &sets[b]).as_slice()]
            }
        }
    }

    pub fn intersect(&self, a: usize, b: usize) -> usize {
        match &self.data {
            BackendData::Divisor {
                divisors, index_of, ..
            } => index_of[&arith::lcm(divisors[a], divisors[b])],
            BackendData::Explicit { sets, index_of } => {
                index_of[ideal_intersection(&sets[a], &sets[b]).as_slice()]
            }
        }
    }

    pub fn annihilator_id(&self, id: usize) -> usize {
        match &self.data {
            BackendData::Divisor {
                n,
                divisors,
                index_of,
            } => index_of[&(n / divisors[id])],
            BackendData::Explicit { sets, index_of } => {
                index_of[annihilator(&self.ring, &sets[id]).as_slice()]
            }
        }
    }

    /// The lattice id of a sorted element set, if it is an ideal.
    pub fn find_by_elements(&self, elems: &[usize]) -> Option<usize> {
        match &self.data {
            BackendData::Divisor { n, index_of, .. } => {
                if elems.is_empty() {
                    return None;
                }
                let g = elems.iter().fold(*n, |acc, &x| arith::gcd(acc, x as u64));
                if elems.len() as u64 != n / g {
                    return None;
                }
                index_of.get(&g).copied()
            }
            BackendData::Explicit { index_of, .. } => index_of.get(elems).copied(),
        }
    }

    pub fn principal_id(&self, x: usize) -> usize {
        match &self.data {
            BackendData::Divisor { n, index_of, .. } => index_of[&arith::gcd(x as u64, *n)],
            BackendData::Explicit { index_of, .. } => {
                index_of[principal_ideal(&self.ring, x).as_slice()]
            }
        }
    }

    pub fn element_annihilator_id(&self, x: usize) -> usize {
        match &self.data {
            BackendData::Divisor { n, index_of, .. } => index_of[&(n / arith::gcd(x as u64, *n))],
            BackendData::Explicit { index_of, .. } => {
                index_of[element_annihilator(&self.ring, x).as_slice()]
            }
        }
    }

    /// Some nonzero x with Ann(x) equal to the given ideal, if one exists.
    pub fn element_with_annihilator(&self, id: usize) -> Option<usize> {
        match &self.data {
            BackendData::Divisor { n, divisors, .. } => {
                let d = divisors[id];
                if d == 1 {
                    None // Ann(x) = R forces x = 0
                } else {
                    Some((n / d) as usize)
                }
            }
            BackendData::Explicit { sets, .. } => (1..self.ring.order())
                .find(|&x| element_annihilator(&self.ring, x) == sets[id]),
        }
    }

    /// A(R)*: nonzero ideals with nonzero annihilator, i.e. the vertex set
    /// of the annihilating-ideal graph, in canonical order.
    pub fn annihilating_ideal_set(&self) -> Vec<usize> {
        (0..self.count())
            .filter(|&id| id != self.zero_id() && self.annihilator_id(id) != self.zero_id())
            .collect()
    }

    pub fn nonzero_proper_ids(&self) -> Vec<usize> {
        (0..self.count())
            .filter(|&id| id != self.zero_id() && id != self.unit_id())
            .collect()
    }

    pub fn minimal_ids(&self) -> Vec<usize> {
        (0..self.count()).filter(|&id| self.minimal[id]).collect()
    }

    pub fn maximal_ids(&self) -> Vec<usize> {
        (0..self.count()).filter(|&id| self.maximal[id]).collect()
    }

    /// (sum of all minimal ideals, intersection of all maximal ideals).
    pub fn socle_and_radical(&self) -> (usize, usize) {
        let socle = self
            .minimal_ids()
            .into_iter()
            .fold(self.zero_id(), |acc, id| self.sum(acc, id));
        let radical = self
            .maximal_ids()
            .into_iter()
            .fold(self.unit_id(), |acc, id| self.intersect(acc, id));
        (socle, radical)
    }

    /// Least k ≥ 1 with I^k = (0), or None when the powers stabilize at a
    /// nonzero ideal.
    pub fn nilpotency_index(&self, id: usize) -> Option<u32> {
        let mut cur = id;
        let mut k = 1u32;
        loop {
            if cur == self.zero_id() {
                return Some(k);
            }
            let next = self.product(cur, id);
            if next == cur {
                return None;
            }
            cur = next;
            k += 1;
        }
    }

    pub fn ring_classification(&self) -> RingClassification {
        let is_field = self.count() == 2;
        // at finite order a ring without nonzero zero-divisors is a field
        debug_assert_eq!(is_field, self.ring.zero_divisors() == [0]);
        let maximals = self.maximal_ids();
        RingClassification {
            is_field,
            is_domain: is_field,
            is_local: maximals.len() == 1,
            local_maximal: if maximals.len() == 1 {
                Some(maximals[0])
            } else {
                None
            },
        }
    }

    /// Decides R ≅ F₁ × F₂ by searching for an idempotent e ∉ {0,1} whose
    /// ideal Re and complement R(1−e) are both minimal (minimal summands
    /// of a unital decomposition are fields). Returns the least such e.
    pub fn detect_field_product(&self) -> Option<FieldProduct> {
        if let BackendData::Divisor { n, .. } = &self.data {
            let n = *n;
            let facs = arith::factorize(n);
            if !(facs.len() == 2 && facs[0].1 == 1 && facs[1].1 == 1) {
                return None;
            }
            let (p, q) = (facs[0].0, facs[1].0);
            // e ≡ 1 mod p, 0 mod q by the Chinese remainder theorem
            let e1 = (q as u128 * arith::mod_inv(q, p).expect("distinct primes") as u128
                % n as u128) as u64;
            let e2 = (1 + n - e1) % n;
            let e = e1.min(e2) as usize;
            let complement = e1.max(e2) as usize;
            return Some(FieldProduct {
                e,
                complement,
                ideal_e: self.principal_id(e),
                ideal_complement: self.principal_id(complement),
            });
        }
        let ring = &self.ring;
        for e in ring.idempotents() {
            if e == 0 || e == ring.one() {
                continue;
            }
            let complement = ring.sub(ring.one(), e);
            let ideal_e = self.principal_id(e);
            let ideal_complement = self.principal_id(complement);
            if self.minimal[ideal_e] && self.minimal[ideal_complement] {
                return Some(FieldProduct {
                    e,
                    complement,
                    ideal_e,
                    ideal_complement,
                });
            }
        }
        None
    }
}
