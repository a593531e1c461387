//! Abstract syntax for ring descriptions.

use std::fmt;

/// Largest accepted modulus for `Zn`. Keeps modular arithmetic within
/// `u64` products and element indices within `usize`.
pub const MAX_MODULUS: u64 = 1 << 32;

/// Polynomial in one variable `x` with integer coefficients.
/// `coeffs[k]` is the coefficient of `x^k`; the leading entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<i64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients reduced to `0..n`, leading zeros trimmed.
    pub fn reduced_mod(&self, n: u64) -> Poly {
        debug_assert!((1..=MAX_MODULUS).contains(&n));
        Poly::new(
            self.coeffs
                .iter()
                .map(|&c| c.rem_euclid(n as i64))
                .collect(),
        )
    }

    /// Monic of positive degree: leading coefficient exactly 1.
    /// Callers reduce mod n first when that is the relevant notion.
    pub fn is_monic(&self) -> bool {
        self.coeffs.len() >= 2 && self.coeffs.last() == Some(&1)
    }
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `x^2+x+1`, `2x`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            let a = c.unsigned_abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                if a != 1 {
                    write!(f, "{a}")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        if first {
            // all coefficients cancelled to zero but the vector was untrimmed
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A ring description. `Product` is positional (factors are not reordered)
/// and has at least two factors. `QuotientPoly` keeps its relators reduced
/// mod the base modulus and always contains a monic relator of positive
/// degree, which bounds the quotient's order by `modulus^degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zn(u64),
    Product(Vec<RingSpec>),
    QuotientPoly { modulus: u64, relators: Vec<Poly> },
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::Product(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            RingSpec::QuotientPoly { modulus, relators } => {
                write!(f, "Z{modulus}[x]/(")?;
                for (i, r) in relators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, ")")
            }
        }
    }
}
