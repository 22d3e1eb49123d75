//! Orbifold type data: the weight triple `A = (a1, a2, a3)` together with its
//! derived invariants.
//!
//! Every other module hangs off an [`OrbifoldType`]. The two derived
//! quantities are
//!
//! * `mu_A = 2 + (a1-1) + (a2-1) + (a3-1)`, the rank of everything downstream
//!   (Picard collections, Milnor algebras, lattices), and
//! * `chi_A = 1/a1 + 1/a2 + 1/a3 - 1`, which must be positive for the whole
//!   toolkit to apply. Construction rejects non-positive `chi_A`.

use num::rational::Rational64;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("weights must be positive, got ({0}, {1}, {2})")]
    NonPositiveWeight(i64, i64, i64),
    #[error("orbifold Euler characteristic {chi} of ({a1}, {a2}, {a3}) is not positive")]
    NonPositiveEuler {
        a1: i64,
        a2: i64,
        a3: i64,
        chi: Rational64,
    },
}

/// The triple `A` with its derived rank and Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbifoldType {
    a: [i64; 3],
    mu: usize,
    chi: Rational64,
}

impl OrbifoldType {
    /// Build the orbifold data for `(a1, a2, a3)`, checking `chi_A > 0`.
    pub fn new(a1: i64, a2: i64, a3: i64) -> Result<Self, OrbifoldError> {
        if a1 < 1 || a2 < 1 || a3 < 1 {
            return Err(OrbifoldError::NonPositiveWeight(a1, a2, a3));
        }
        let chi = Rational64::new(1, a1) + Rational64::new(1, a2) + Rational64::new(1, a3)
            - Rational64::from_integer(1);
        if chi <= Rational64::from_integer(0) {
            return Err(OrbifoldError::NonPositiveEuler { a1, a2, a3, chi });
        }
        let mu = (2 + (a1 - 1) + (a2 - 1) + (a3 - 1)) as usize;
        Ok(OrbifoldType { a: [a1, a2, a3], mu, chi })
    }

    pub fn weights(&self) -> [i64; 3] {
        self.a
    }

    pub fn weight(&self, arm: usize) -> i64 {
        self.a[arm]
    }

    /// Rank `mu_A` of the Picard collection / Milnor algebra / lattice.
    pub fn mu(&self) -> usize {
        self.mu
    }

    /// The orbifold Euler characteristic `chi_A`, exact.
    pub fn chi(&self) -> Rational64 {
        self.chi
    }

    /// `chi_A` as a float, for the numerical modules.
    pub fn chi_f64(&self) -> f64 {
        *self.chi.numer() as f64 / *self.chi.denom() as f64
    }

    /// Returns a copy with the weights permuted so that `a1 = 1`, if some
    /// weight is 1, together with the permutation applied (as images of arm
    /// indices 0,1,2).
    pub fn unit_first(&self) -> Option<(OrbifoldType, [usize; 3])> {
        let pos = self.a.iter().position(|&w| w == 1)?;
        let mut perm = [0usize, 1, 2];
        perm.swap(0, pos);
        let a = [self.a[perm[0]], self.a[perm[1]], self.a[perm[2]]];
        Some((
            OrbifoldType { a, mu: self.mu, chi: self.chi },
            perm,
        ))
    }
}

impl fmt::Display for OrbifoldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a[0], self.a[1], self.a[2])
    }
}
