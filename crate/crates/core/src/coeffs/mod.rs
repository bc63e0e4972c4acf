//! Descent coefficients `b(i, j, k)`.
//!
//! `ch_j` of the `i`-th member of a chain (all later degrees equal to 1) is
//! `-i/j! c_1^j` plus a `b(i, j, k)`-weighted sum of the descended `ch_k` of
//! the starting manifold. The coefficients are defined by
//!
//! ```text
//! b(1, j, k) = (-1)^(j+1-k) B_(j+1-k) / (j+1-k)!
//! b(i, j, k) = sum_{m=0}^{min(j, i+j-k)} (-1)^m B_m / m! * b(i-1, j+1-m, k)   (i >= 2)
//! ```
//!
//! for `1 <= k <= i + j`. This module computes them from the recursion
//! ([`CoeffTable`]) and independently from composition sums
//! ([`closed`]) and generating polynomials ([`falling_product_poly`]);
//! [`verify_identities`] ties the three together.
//!
//! Only `j = 1, 2` have closed forms. Values for `j >= 3` come from the
//! recursion alone; the only independent check on them is the agreement of
//! direct and iterated descent in [`crate::descent`].

pub mod closed;
mod identities;
mod poly;

pub use self::identities::{
    composition_sum_checks, verify_identities, IdentityCheck, IdentityKind, IdentityReport,
    Location,
};
pub use self::poly::{falling_product_poly, Polynomial};

use alloc::vec::Vec;

use num_traits::Zero;

use crate::exact::{factorial, sign, BernoulliTable, Rational};
use crate::Error;

/// Frozen table of `b(i, j, k)` for `1 <= i <= max_i`, `1 <= j <= max_j`.
///
/// Built eagerly level by level; read-only afterwards, so a single table can
/// be shared across threads.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    max_i: usize,
    max_j: usize,
    // levels[i-1][j-1][k-1]; level i stores j up to max_j + max_i - i,
    // which is what level i+1 consumes.
    levels: Vec<Vec<Vec<Rational>>>,
    bernoulli: BernoulliTable,
}

impl CoeffTable {
    /// Builds the table with Bernoulli numbers in the standard convention.
    pub fn new(max_i: usize, max_j: usize) -> Self {
        let needed = max_i.max(1) + max_j.max(1);
        Self::with_bernoulli(max_i, max_j, BernoulliTable::new(needed))
    }

    /// Builds the table from a caller-supplied Bernoulli table, which must
    /// reach index `max_i + max_j - 1`.
    ///
    /// Panics when the Bernoulli table is too short.
    pub fn with_bernoulli(max_i: usize, max_j: usize, bernoulli: BernoulliTable) -> Self {
        let max_i = max_i.max(1);
        let max_j = max_j.max(1);
        assert!(
            bernoulli.max_m() + 1 >= max_i + max_j,
            "Bernoulli table too short for b coefficients"
        );
        // (-1)^m B_m / m!
        let weights: Vec<Rational> = (0..max_i + max_j)
            .map(|m| sign(m) * bernoulli.get(m).unwrap() / factorial(m))
            .collect();

        let top_j = |i: usize| max_j + max_i - i;
        let mut levels: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(max_i);

        let base: Vec<Vec<Rational>> = (1..=top_j(1))
            .map(|j| (1..=j + 1).map(|k| weights[j + 1 - k].clone()).collect())
            .collect();
        levels.push(base);

        for i in 2..=max_i {
            let prev = &levels[i - 2];
            let level: Vec<Vec<Rational>> = (1..=top_j(i))
                .map(|j| {
                    (1..=i + j)
                        .map(|k| {
                            let mut acc = Rational::zero();
                            for (m, w) in weights.iter().enumerate().take(j.min(i + j - k) + 1) {
                                if !w.is_zero() {
                                    acc += w * &prev[j - m][k - 1];
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            levels.push(level);
        }

        CoeffTable {
            max_i,
            max_j,
            levels,
            bernoulli,
        }
    }

    pub fn max_i(&self) -> usize {
        self.max_i
    }

    pub fn max_j(&self) -> usize {
        self.max_j
    }

    pub fn bernoulli(&self) -> &BernoulliTable {
        &self.bernoulli
    }

    /// `b(i, j, k)`.
    ///
    /// Lookups with `j` up to `max_j + max_i - i` succeed, since the lower
    /// levels are stored that far for the recursion.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Result<&Rational, Error> {
        if i == 0 || j == 0 || k == 0 || k > i + j {
            return Err(Error::CoeffIndex {
                i,
                j,
                k,
                bound: i + j,
            });
        }
        self.levels
            .get(i - 1)
            .and_then(|level| level.get(j - 1))
            .map(|row| &row[k - 1])
            .ok_or(Error::OutsideTable { i, j })
    }

    /// `b(i, j, k)` for `k = 1 ..= i + j`.
    pub fn row(&self, i: usize, j: usize) -> Result<&[Rational], Error> {
        if i == 0 || j == 0 {
            return Err(Error::CoeffIndex {
                i,
                j,
                k: 0,
                bound: i + j,
            });
        }
        self.levels
            .get(i - 1)
            .and_then(|level| level.get(j - 1))
            .map(|row| row.as_slice())
            .ok_or(Error::OutsideTable { i, j })
    }
}

/// One-off `b(i, j, k)` from the recursion.
pub fn b_recursive(i: usize, j: usize, k: usize) -> Result<Rational, Error> {
    if i == 0 || j == 0 || k == 0 || k > i + j {
        return Err(Error::CoeffIndex {
            i,
            j,
            k,
            bound: i + j,
        });
    }
    CoeffTable::new(i, j).get(i, j, k).cloned()
}
