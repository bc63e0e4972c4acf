use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::closed::{b_closed_j1, b_closed_j2, composition_sum, composition_sum_symmetric};
use super::{falling_product_poly, CoeffTable, Polynomial};
use crate::exact::{factorial, int, pow, ratio, Rational};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityKind {
    /// recursion = composition closed form
    ClosedForm,
    /// `b(i,j,k)/k!` = coefficient of `t^k` in the generating polynomial
    GeneratingPolynomial,
    /// `b(i,j,k) > 0`
    Positivity,
    /// `sum_k b(i,j,k)/k!` equals `1` (j = 1) or `1/2` (j = 2)
    SumOverFactorials,
    /// `sum_k b(i,j,k) 2^k/k!` equals `i+2` (j = 1) or `(i+4)/2` (j = 2)
    SumWithPowersOfTwo,
    /// `b(i,j,i+j) = 1`
    TopCoefficient,
    /// composition sum = `k!/n! e_(n-k)(1..n-1)`
    CompositionSum,
}

impl IdentityKind {
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::ClosedForm => "closed_form",
            IdentityKind::GeneratingPolynomial => "generating_polynomial",
            IdentityKind::Positivity => "positivity",
            IdentityKind::SumOverFactorials => "sum_over_factorials",
            IdentityKind::SumWithPowersOfTwo => "sum_with_powers_of_two",
            IdentityKind::TopCoefficient => "top_coefficient",
            IdentityKind::CompositionSum => "composition_sum",
        }
    }
}

/// Where a check applies. Composition-sum checks are indexed by `(k, n)`,
/// everything else by the coefficient it inspects (`k = 0` for checks over a
/// whole row).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Location {
    Coeff { i: usize, j: usize, k: usize },
    Row { i: usize, j: usize },
    Composition { k: usize, n: usize },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Location::Coeff { i, j, k } => write!(f, "(i,j,k)=({i},{j},{k})"),
            Location::Row { i, j } => write!(f, "(i,j)=({i},{j})"),
            Location::Composition { k, n } => write!(f, "(k,n)=({k},{n})"),
        }
    }
}

/// One exact comparison. For equalities `passed` means `lhs == rhs`; for
/// positivity it means `lhs > rhs` with `rhs = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub kind: IdentityKind,
    pub location: Location,
    pub lhs: Rational,
    pub rhs: Rational,
    pub passed: bool,
}

impl IdentityCheck {
    fn equality(kind: IdentityKind, location: Location, lhs: Rational, rhs: Rational) -> Self {
        let passed = lhs == rhs;
        IdentityCheck {
            kind,
            location,
            lhs,
            rhs,
            passed,
        }
    }

    fn positive(location: Location, value: Rational) -> Self {
        let passed = value > Rational::zero();
        IdentityCheck {
            kind: IdentityKind::Positivity,
            location,
            lhs: value,
            rhs: Rational::zero(),
            passed,
        }
    }

    /// `lhs - rhs`.
    pub fn discrepancy(&self) -> Rational {
        &self.lhs - &self.rhs
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.failures().next()
    }

    pub fn extend(&mut self, other: IdentityReport) {
        self.checks.extend(other.checks);
    }
}

/// Checks every identity tying `b(i, 1, ·)` and `b(i, 2, ·)` to their closed
/// forms and generating polynomials, plus the composition-sum identity for
/// all `1 <= k <= n <= i + 2`. Failures are recorded, not raised; the only
/// error is a table too small for level `i`.
pub fn verify_identities(table: &CoeffTable, i: usize) -> Result<IdentityReport, Error> {
    if i == 0 {
        return Err(Error::Zero { what: "i" });
    }
    let mut checks = Vec::new();
    for j in 1..=2usize {
        let row = table.row(i, j)?;
        let top = i + j;
        for (idx, b) in row.iter().enumerate() {
            let k = idx + 1;
            let loc = Location::Coeff { i, j, k };
            let closed = if j == 1 {
                b_closed_j1(i, k)?
            } else {
                b_closed_j2(i, k)?
            };
            checks.push(IdentityCheck::equality(
                IdentityKind::ClosedForm,
                loc,
                b.clone(),
                closed,
            ));
            checks.push(IdentityCheck::positive(loc, b.clone()));
        }

        // Compare whole polynomials, then report per coefficient so a
        // failure points at a specific k.
        let generating = Polynomial::new(
            core::iter::once(Rational::zero())
                .chain(
                    row.iter()
                        .enumerate()
                        .map(|(idx, b)| b / factorial(idx + 1)),
                )
                .collect(),
        );
        let expected = falling_product_poly(i, j)?;
        for k in 0..=top {
            checks.push(IdentityCheck::equality(
                IdentityKind::GeneratingPolynomial,
                Location::Coeff { i, j, k },
                generating.coeff(k),
                expected.coeff(k),
            ));
        }
        debug_assert_eq!(
            generating == expected,
            checks.iter().rev().take(top + 1).all(|c| c.passed)
        );

        let row_loc = Location::Row { i, j };
        let sum: Rational = row
            .iter()
            .enumerate()
            .map(|(idx, b)| b / factorial(idx + 1))
            .sum();
        let sum_2k: Rational = row
            .iter()
            .enumerate()
            .map(|(idx, b)| b * pow(&int(2), idx + 1) / factorial(idx + 1))
            .sum();
        let (want_sum, want_2k) = if j == 1 {
            (Rational::one(), int(i as i64 + 2))
        } else {
            (ratio(1, 2), ratio(i as i64 + 4, 2))
        };
        checks.push(IdentityCheck::equality(
            IdentityKind::SumOverFactorials,
            row_loc,
            sum,
            want_sum,
        ));
        checks.push(IdentityCheck::equality(
            IdentityKind::SumWithPowersOfTwo,
            row_loc,
            sum_2k,
            want_2k,
        ));
        checks.push(IdentityCheck::equality(
            IdentityKind::TopCoefficient,
            Location::Coeff { i, j, k: top },
            row[top - 1].clone(),
            Rational::one(),
        ));
    }
    checks.extend(composition_sum_checks(i + 2)?.checks);
    Ok(IdentityReport { checks })
}

/// Reciprocal-product composition sums against `k!/n! e_(n-k)(1..n-1)` for
/// all `1 <= k <= n <= max_n`.
pub fn composition_sum_checks(max_n: usize) -> Result<IdentityReport, Error> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            checks.push(IdentityCheck::equality(
                IdentityKind::CompositionSum,
                Location::Composition { k, n },
                composition_sum(k, n)?,
                composition_sum_symmetric(k, n)?,
            ));
        }
    }
    Ok(IdentityReport { checks })
}
