//! Exact computation on finite commutative rings: ideal lattices, the
//! annihilating-ideal graph AG(R), the zero-divisor graph Γ(R), their
//! invariants, and a harness of decidable structure checks.

pub mod arith;
pub mod error;
pub mod graph;
pub mod harness;
pub mod ideal;
pub mod naive;
pub mod ring;

pub use error::{Error, Result};
