//! Terms as exponent vectors.

use std::fmt;

/// A term (power product of the ring variables), stored as its exponent
/// vector. The term 1 is the all-zeros vector.
///
/// The derived `Ord` is plain lexicographic on the exponent vector and is
/// used only for canonical storage; ranking terms by a monomial ordering
/// goes through [`crate::order::TermOrdering`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    exps: Vec<u32>,
}

impl Term {
    pub fn new(exps: Vec<u32>) -> Self {
        Term { exps }
    }

    /// The term 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Term { exps: vec![0; n] }
    }

    /// Single variable `x_i` (0-based) raised to `e`.
    pub fn var_pow(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Term { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Degree under an integer weight vector.
    pub fn weighted_degree(&self, weight: &[i64]) -> i64 {
        assert_eq!(weight.len(), self.exps.len(), "weight dimension mismatch");
        self.exps
            .iter()
            .zip(weight)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn properly_divides(&self, other: &Term) -> bool {
        self != other && self.divides(other)
    }

    pub fn mul(&self, other: &Term) -> Term {
        assert_eq!(self.exps.len(), other.exps.len(), "term dimension mismatch");
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Term) -> Option<Term> {
        if !other.divides(self) {
            return None;
        }
        Some(Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Term) -> Term {
        assert_eq!(self.exps.len(), other.exps.len(), "term dimension mismatch");
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Term) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Appends one variable with exponent `e`.
    pub fn extended(&self, e: u32) -> Term {
        let mut exps = self.exps.clone();
        exps.push(e);
        Term { exps }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
