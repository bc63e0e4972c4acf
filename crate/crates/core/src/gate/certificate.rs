use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::hypothesis::{check, Assumptions, Theorem};
use crate::coeffs::CoeffTable;
use crate::descent::SplitChernVector;
use crate::exact::{factorial, int, ratio, Rational};
use crate::Error;

/// Quantities bounded at each level `i = 1 ..= m-1` of the proofs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    /// Lower bound for `dim H_i`.
    DimensionBound,
    /// Lower bound for the coefficient of `c_1(L_i)` in `c_1(H_i)`.
    FirstChernMargin,
    /// Lower bound for `T^2 ch_2(H_(i-1))`, with `a_(i+1) = 1`.
    SecondChernBound,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::DimensionBound => "dim_bound",
            Quantity::FirstChernMargin => "c1_margin",
            Quantity::SecondChernBound => "t2_ch2_bound",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Greater,
    AtLeast,
    /// The proof does not need this bound at this level.
    NotRequired,
}

impl Comparison {
    fn holds(self, value: &Rational, threshold: &Rational) -> bool {
        match self {
            Comparison::Greater => value > threshold,
            Comparison::AtLeast => value >= threshold,
            Comparison::NotRequired => true,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Comparison::Greater => ">",
            Comparison::AtLeast => ">=",
            Comparison::NotRequired => "n/a",
        }
    }
}

/// Which values stand in for `T^k ch_k(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceMode {
    /// The hypothesis thresholds, the worst case the proofs substitute.
    Threshold,
    /// The manifold's own scalars (first degree taken as 1). Only the
    /// coefficient-sum route applies.
    Actual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub quantity: Quantity,
    /// Value from the full `b`-coefficient sum.
    pub b_sum: Rational,
    /// Value from the simplified closed expression; threshold mode only.
    pub closed: Option<Rational>,
    pub threshold: Rational,
    pub comparison: Comparison,
}

impl Bound {
    pub fn holds(&self) -> bool {
        self.comparison.holds(&self.b_sum, &self.threshold)
    }

    pub fn routes_agree(&self) -> bool {
        self.closed.as_ref().is_none_or(|c| *c == self.b_sum)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateLevel {
    pub i: usize,
    pub bounds: Vec<Bound>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub theorem: Theorem,
    pub m: usize,
    pub mode: TraceMode,
    pub levels: Vec<CertificateLevel>,
    /// Every bound holds and both evaluation routes agree.
    pub all_positive: bool,
}

impl Certificate {
    /// First level and bound that fails, if any.
    pub fn first_failure(&self) -> Option<(usize, &Bound)> {
        self.levels.iter().find_map(|level| {
            level
                .bounds
                .iter()
                .find(|b| !b.holds() || !b.routes_agree())
                .map(|b| (level.i, b))
        })
    }
}

// b(level, j, k), with level 0 meaning the starting manifold itself:
// ch_j(X) = sum_k delta_jk ch_k(X) in the same normalisation.
fn coeff(table: &CoeffTable, level: usize, j: usize, k: usize) -> Result<Rational, Error> {
    if level == 0 {
        return Ok(if j == k {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    table.get(level, j, k).cloned()
}

fn weighted_sum(
    table: &CoeffTable,
    level: usize,
    j: usize,
    top_k: usize,
    inputs: &[Rational],
) -> Result<Rational, Error> {
    let mut acc = Rational::zero();
    for k in 1..=top_k {
        acc += coeff(table, level, j, k)? * &inputs[k - 1];
    }
    Ok(acc)
}

/// Replays the inequality chain of the proof for `theorem` at order `m`.
///
/// Requires the scalar hypothesis to hold. Bounds that fail are recorded in
/// the certificate (see [`Certificate::first_failure`]) rather than raised.
pub fn build_certificate(
    table: &CoeffTable,
    v: &SplitChernVector,
    theorem: Theorem,
    m: usize,
    mode: TraceMode,
) -> Result<Certificate, Error> {
    let report = check(theorem, v, m, Assumptions::default())?;
    if let Some(fail) = report.first_failure() {
        return Err(Error::HypothesisFailed {
            first_k: fail.k,
            margin: fail.margin.clone(),
        });
    }
    let inputs: Vec<Rational> = match mode {
        TraceMode::Threshold => report
            .per_k
            .iter()
            .map(|row| row.threshold.clone())
            .collect(),
        TraceMode::Actual => report.per_k.iter().map(|row| row.actual.clone()).collect(),
    };

    let mut levels = Vec::new();
    for i in 1..m {
        let il = i as i64;
        let ml = m as i64;
        let prev = i - 1;
        let dim_sum = -int(il - 1) + weighted_sum(table, prev, 1, i, &inputs)? - int(2);
        let t2_sum = -ratio(il - 1, 2) + weighted_sum(table, prev, 2, i + 1, &inputs)?;

        let (c1_top, closed, t2_rule) = match theorem {
            Theorem::Thm4 => {
                let c1_closed =
                    -int(il) + (Rational::one() - Rational::one() / factorial(i + 1)) * int(ml + 1);
                (
                    i,
                    [int(ml - il), c1_closed, ratio(ml - il + 2, 2)],
                    (Comparison::Greater, int(1)),
                )
            }
            Theorem::Thm5 | Theorem::Thm5Strong => {
                let c = if theorem == Theorem::Thm5 {
                    2 * ml + 1
                } else {
                    2 * ml + 2
                };
                let rule = if theorem == Theorem::Thm5Strong {
                    (Comparison::AtLeast, int(1))
                } else if i + 1 < m {
                    (Comparison::Greater, int(1))
                } else {
                    (Comparison::NotRequired, int(1))
                };
                (
                    i + 1,
                    [
                        -int(il - 1) + int(c) - int(il + 1) - int(2),
                        -int(il) + int(c) - int(il + 2),
                        -ratio(il - 1, 2) + ratio(c, 2) - ratio(il + 3, 2),
                    ],
                    rule,
                )
            }
        };
        let c1_sum = -int(il) + weighted_sum(table, i, 1, c1_top, &inputs)?;

        let closed = |idx: usize| match mode {
            TraceMode::Threshold => Some(closed[idx].clone()),
            TraceMode::Actual => None,
        };
        let bounds = alloc::vec![
            Bound {
                quantity: Quantity::DimensionBound,
                b_sum: dim_sum,
                closed: closed(0),
                threshold: Rational::zero(),
                comparison: Comparison::Greater,
            },
            Bound {
                quantity: Quantity::FirstChernMargin,
                b_sum: c1_sum,
                closed: closed(1),
                threshold: Rational::zero(),
                comparison: Comparison::Greater,
            },
            Bound {
                quantity: Quantity::SecondChernBound,
                b_sum: t2_sum,
                closed: closed(2),
                threshold: t2_rule.1,
                comparison: t2_rule.0,
            },
        ];
        levels.push(CertificateLevel { i, bounds });
    }

    let mut cert = Certificate {
        theorem,
        m,
        mode,
        levels,
        all_positive: true,
    };
    cert.all_positive = cert.first_failure().is_none();
    Ok(cert)
}

fn strict(cert: Certificate) -> Result<Certificate, Error> {
    if let Some((level, bound)) = cert.first_failure() {
        let detail = if bound.routes_agree() {
            format!(
                "{} is not {} {}",
                bound.b_sum,
                bound.comparison.symbol(),
                bound.threshold
            )
        } else {
            format!(
                "coefficient sum {} disagrees with closed value {}",
                bound.b_sum,
                bound.closed.as_ref().unwrap()
            )
        };
        return Err(Error::CertificateFailure {
            level,
            quantity: bound.quantity.name(),
            detail,
        });
    }
    Ok(cert)
}

/// Threshold-mode certificate for the first theorem; any failed bound or
/// route mismatch is an error naming the level and quantity.
pub fn proof_trace_thm4(
    table: &CoeffTable,
    v: &SplitChernVector,
    m: usize,
) -> Result<Certificate, Error> {
    strict(build_certificate(
        table,
        v,
        Theorem::Thm4,
        m,
        TraceMode::Threshold,
    )?)
}

/// Threshold-mode certificate for the second theorem (or its strong form).
pub fn proof_trace_thm5(
    table: &CoeffTable,
    v: &SplitChernVector,
    m: usize,
    strong: bool,
) -> Result<Certificate, Error> {
    let theorem = if strong {
        Theorem::Thm5Strong
    } else {
        Theorem::Thm5
    };
    strict(build_certificate(
        table,
        v,
        theorem,
        m,
        TraceMode::Threshold,
    )?)
}
