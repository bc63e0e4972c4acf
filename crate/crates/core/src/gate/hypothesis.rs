use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::descent::SplitChernVector;
use crate::exact::{factorial, int, Rational};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// `ch_k >= (m+1)/k!` for `1 <= k <= m`.
    Thm4,
    /// `ch_k >= (2m+1-2^k)/k! c_1(L)^k` for `1 <= k <= m`.
    Thm5,
    /// `ch_k >= (2m+2-2^k)/k! c_1(L)^k` for `1 <= k <= m`.
    Thm5Strong,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::Thm4 => "thm4",
            Theorem::Thm5 => "thm5",
            Theorem::Thm5Strong => "thm5-strong",
        }
    }
}

/// Caller-asserted geometric side conditions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assumptions {
    /// `X` is covered by rational curves of degree 1 with respect to the
    /// polarization the scalars are expressed in.
    pub degree_one_cover: bool,
    /// Every minimal family parametrizes curves of degree 1.
    pub every_family_degree_one: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conclusion {
    NLowerGeM,
    NUpperGeM,
    CoveredByRationalMFolds,
    CoveredByProjectiveMMinus1,
    CoveredByProjectiveM,
}

impl Conclusion {
    pub fn name(self) -> &'static str {
        match self {
            Conclusion::NLowerGeM => "N_lower_ge_m",
            Conclusion::NUpperGeM => "N_upper_ge_m",
            Conclusion::CoveredByRationalMFolds => "covered_by_rational_m_folds",
            Conclusion::CoveredByProjectiveMMinus1 => "covered_by_projective_m_minus_1",
            Conclusion::CoveredByProjectiveM => "covered_by_projective_m",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMargin {
    pub k: usize,
    pub threshold: Rational,
    pub actual: Rational,
    /// `actual - threshold`
    pub margin: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub theorem: Theorem,
    pub m: usize,
    pub per_k: Vec<KMargin>,
    /// Every margin is non-negative.
    pub passed: bool,
    /// Empty unless `passed`.
    pub conclusions: BTreeSet<Conclusion>,
}

impl HypothesisReport {
    pub fn first_failure(&self) -> Option<&KMargin> {
        self.per_k.iter().find(|row| row.margin < Rational::zero())
    }
}

/// Lower bound the theorem imposes on `r_k`.
pub fn threshold(theorem: Theorem, m: usize, k: usize) -> Rational {
    let m = m as i64;
    let numerator = match theorem {
        Theorem::Thm4 => int(m + 1),
        Theorem::Thm5 | Theorem::Thm5Strong => {
            let base = if theorem == Theorem::Thm5 {
                2 * m + 1
            } else {
                2 * m + 2
            };
            int(base) - Rational::from_integer(BigInt::from(1) << k)
        }
    };
    numerator / factorial(k)
}

fn margins(theorem: Theorem, v: &SplitChernVector, m: usize) -> Result<Vec<KMargin>, Error> {
    if m == 0 {
        return Err(Error::Zero { what: "m" });
    }
    if m > v.dim() {
        return Err(Error::OrderExceedsDimension { m, dim: v.dim() });
    }
    Ok((1..=m)
        .map(|k| {
            let threshold = threshold(theorem, m, k);
            let actual = v.r(k).cloned().unwrap_or_default();
            let margin = &actual - &threshold;
            KMargin {
                k,
                threshold,
                actual,
                margin,
            }
        })
        .collect())
}

/// Runs the scalar hypothesis of `theorem` at order `m`.
pub fn check(
    theorem: Theorem,
    v: &SplitChernVector,
    m: usize,
    assumptions: Assumptions,
) -> Result<HypothesisReport, Error> {
    let per_k = margins(theorem, v, m)?;
    let passed = per_k.iter().all(|row| row.margin >= Rational::zero());
    let mut conclusions = BTreeSet::new();
    if passed {
        match theorem {
            Theorem::Thm4 => {
                conclusions.insert(Conclusion::NLowerGeM);
                conclusions.insert(Conclusion::CoveredByRationalMFolds);
                if assumptions.degree_one_cover {
                    conclusions.insert(Conclusion::CoveredByProjectiveM);
                }
            }
            // The degree-1 cover is part of the hypothesis here.
            Theorem::Thm5 | Theorem::Thm5Strong if assumptions.degree_one_cover => {
                conclusions.insert(Conclusion::NUpperGeM);
                conclusions.insert(Conclusion::CoveredByRationalMFolds);
                conclusions.insert(Conclusion::CoveredByProjectiveMMinus1);
                if assumptions.every_family_degree_one {
                    conclusions.insert(Conclusion::NLowerGeM);
                }
                if theorem == Theorem::Thm5Strong {
                    conclusions.insert(Conclusion::CoveredByProjectiveM);
                }
            }
            Theorem::Thm5 | Theorem::Thm5Strong => {}
        }
    }
    Ok(HypothesisReport {
        theorem,
        m,
        per_k,
        passed,
        conclusions,
    })
}

pub fn check_thm4(
    v: &SplitChernVector,
    m: usize,
    assumptions: Assumptions,
) -> Result<HypothesisReport, Error> {
    check(Theorem::Thm4, v, m, assumptions)
}

pub fn check_thm5(
    v: &SplitChernVector,
    m: usize,
    strong: bool,
    assumptions: Assumptions,
) -> Result<HypothesisReport, Error> {
    let theorem = if strong {
        Theorem::Thm5Strong
    } else {
        Theorem::Thm5
    };
    check(theorem, v, m, assumptions)
}

/// Largest `m <= dim` whose scalar hypothesis holds, or 0.
///
/// Thresholds decrease pointwise in `m`, so the first hit scanning down is
/// the maximum.
pub fn max_m(v: &SplitChernVector, theorem: Theorem) -> usize {
    (1..=v.dim())
        .rev()
        .find(|&m| {
            margins(theorem, v, m)
                .map(|rows| rows.iter().all(|row| row.margin >= Rational::zero()))
                .unwrap_or(false)
        })
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{catalogue, ModelFamily};
    use crate::exact::ratio;

    fn projective(n: usize) -> SplitChernVector {
        catalogue(ModelFamily::ProjectiveSpace(n))
            .unwrap()
            .vector()
            .unwrap()
            .clone()
    }

    fn quadric(n: usize) -> SplitChernVector {
        catalogue(ModelFamily::Quadric(n))
            .unwrap()
            .vector()
            .unwrap()
            .clone()
    }

    const LINES: Assumptions = Assumptions {
        degree_one_cover: true,
        every_family_degree_one: true,
    };

    #[test]
    fn projective_space_is_tight_for_thm4() {
        for n in 1..=8 {
            let report = check_thm4(&projective(n), n, Assumptions::default()).unwrap();
            assert!(report.passed);
            assert!(report.per_k.iter().all(|row| row.margin.is_zero()));
            assert_eq!(
                report.conclusions.iter().copied().collect::<Vec<_>>(),
                [Conclusion::NLowerGeM, Conclusion::CoveredByRationalMFolds]
            );
            for m in 1..n {
                assert!(check_thm4(&projective(n), m, LINES).unwrap().passed);
            }
        }
        let with_lines = check_thm4(&projective(3), 3, LINES).unwrap();
        assert!(with_lines
            .conclusions
            .contains(&Conclusion::CoveredByProjectiveM));
    }

    #[test]
    fn quadric_six_fails_thm4_at_three() {
        let report = check_thm4(&quadric(6), 3, LINES).unwrap();
        assert!(!report.passed);
        assert!(report.conclusions.is_empty());
        let fail = report.first_failure().unwrap();
        assert_eq!(fail.k, 3);
        assert_eq!(fail.actual, ratio(0, 1));
        assert_eq!(fail.threshold, ratio(2, 3));
    }

    #[test]
    fn quadrics_and_thm5() {
        for n in 1..=10usize {
            let m = n.div_ceil(2);
            let report = check_thm5(&quadric(n), m, false, LINES).unwrap();
            assert!(report.passed, "Q^{n}");
            assert_eq!(
                report.per_k[0].margin,
                int((n as i64 + 2) - (2 * m as i64 + 1))
            );
            let strong = n / 2;
            if strong >= 1 {
                assert!(check_thm5(&quadric(n), strong, true, LINES).unwrap().passed);
            }
            if strong < n {
                assert!(
                    !check_thm5(&quadric(n), strong + 1, true, LINES)
                        .unwrap()
                        .passed
                );
            }
        }
        let p = check_thm5(&projective(5), 3, true, LINES).unwrap();
        assert!(p.passed);
    }

    #[test]
    fn thm5_conclusions_need_the_cover() {
        let bare = check_thm5(&quadric(6), 3, false, Assumptions::default()).unwrap();
        assert!(bare.passed);
        assert!(bare.conclusions.is_empty());

        let cover = Assumptions {
            degree_one_cover: true,
            every_family_degree_one: false,
        };
        let flagged = check_thm5(&quadric(6), 3, false, cover).unwrap();
        assert_eq!(
            flagged.conclusions.iter().copied().collect::<Vec<_>>(),
            [
                Conclusion::NUpperGeM,
                Conclusion::CoveredByRationalMFolds,
                Conclusion::CoveredByProjectiveMMinus1
            ]
        );
        let strong = check_thm5(&quadric(6), 3, true, LINES).unwrap();
        assert!(strong
            .conclusions
            .contains(&Conclusion::CoveredByProjectiveM));
        assert!(strong.conclusions.contains(&Conclusion::NLowerGeM));
    }

    #[test]
    fn order_beyond_dimension_is_rejected() {
        assert_eq!(
            check_thm4(&projective(3), 4, LINES),
            Err(Error::OrderExceedsDimension { m: 4, dim: 3 })
        );
        assert_eq!(
            check_thm4(&projective(3), 0, LINES),
            Err(Error::Zero { what: "m" })
        );
    }

    #[test]
    fn max_m_values() {
        for n in 1..=12usize {
            assert_eq!(max_m(&projective(n), Theorem::Thm4), n);
            assert_eq!(max_m(&quadric(n), Theorem::Thm5), n.div_ceil(2));
            assert_eq!(max_m(&quadric(n), Theorem::Thm5Strong), n / 2);
        }
        let not_fano = SplitChernVector::new(2, alloc::vec![int(-1), int(0)]).unwrap();
        assert_eq!(max_m(&not_fano, Theorem::Thm4), 0);
    }

    #[test]
    fn quadric_seven_strong_four() {
        let report = check_thm5(&quadric(7), 4, true, LINES).unwrap();
        let fail = report.first_failure().unwrap();
        assert_eq!(fail.k, 1);
        assert_eq!(fail.margin, int(-1));
    }
}
