//! Element-indexed finite commutative rings.
//!
//! Elements are the indices `0..order`, with index 0 the additive identity.
//! Arithmetic either computes residues directly (`ZnFast`) or reads
//! materialized operation tables (`Table`).

pub mod build;
pub mod parse;
pub mod spec;

pub use build::{build_ring, build_ring_with, quotient_ring, zn_table, BackendChoice, Limits};
pub use parse::parse_ring_spec;
pub use spec::{Poly, RingSpec, MAX_MODULUS};

use crate::arith;

#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    order: usize,
    one: usize,
    backend: Backend,
}

#[derive(Clone)]
enum Backend {
    ZnFast {
        n: u64,
    },
    // row-major m×m tables; neg is a single row
    Table {
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        labels: Vec<String>,
    },
}

impl FiniteRing {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The modulus when this ring computes residues directly, else None.
    /// Table-backed rings built from a Zn spec return None on purpose: the
    /// answer decides which ideal-lattice backend applies.
    pub fn zn_modulus(&self) -> Option<u64> {
        match &self.backend {
            Backend::ZnFast { n } => Some(*n),
            Backend::Table { .. } => None,
        }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.backend {
            Backend::ZnFast { n } => ((a as u64 + b as u64) % n) as usize,
            Backend::Table { add, .. } => add[a * self.order + b] as usize,
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.order && b < self.order);
        match &self.backend {
            Backend::ZnFast { n } => ((a as u64 * b as u64) % n) as usize,
            Backend::Table { mul, .. } => mul[a * self.order + b] as usize,
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        debug_assert!(a < self.order);
        match &self.backend {
            Backend::ZnFast { n } => ((n - a as u64) % n) as usize,
            Backend::Table { neg, .. } => neg[a] as usize,
        }
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, a: usize) -> String {
        debug_assert!(a < self.order);
        match &self.backend {
            Backend::ZnFast { .. } => a.to_string(),
            Backend::Table { labels, .. } => labels[a].clone(),
        }
    }

    /// Z(R) = {x : xy = 0 for some y ≠ 0}, ascending. Contains 0 whenever
    /// the ring has a nonzero element.
    pub fn zero_divisors(&self) -> Vec<usize> {
        match &self.backend {
            Backend::ZnFast { n } => (0..*n)
                .filter(|x| arith::gcd(*x, *n) != 1)
                .map(|x| x as usize)
                .collect(),
            Backend::Table { .. } => (0..self.order)
                .filter(|&x| (1..self.order).any(|y| self.mul(x, y) == 0))
                .collect(),
        }
    }

    /// {x : xy = 1 for some y}, ascending. Complements zero_divisors.
    pub fn units(&self) -> Vec<usize> {
        match &self.backend {
            Backend::ZnFast { n } => (0..*n)
                .filter(|x| arith::gcd(*x, *n) == 1)
                .map(|x| x as usize)
                .collect(),
            Backend::Table { .. } => (0..self.order)
                .filter(|&x| (0..self.order).any(|y| self.mul(x, y) == self.one))
                .collect(),
        }
    }

    /// {e : e² = e}, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul(e, e) == e).collect()
    }

    /// True when no nonzero element is nilpotent.
    pub fn is_reduced(&self) -> bool {
        if let Backend::ZnFast { n } = &self.backend {
            return arith::is_squarefree(*n);
        }
        // x nilpotent ⟺ x^(2^k) = 0 once 2^k ≥ order
        let steps = usize::BITS - self.order.leading_zeros();
        for x in 1..self.order {
            let mut y = x;
            for _ in 0..=steps {
                if y == 0 {
                    return false;
                }
                y = self.mul(y, y);
            }
            if y == 0 {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.name, self.order)
    }
}
