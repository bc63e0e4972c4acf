use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::coeffs::CoeffTable;
use crate::exact::{factorial, int, pow, Rational};
use crate::Error;

/// Numerical model of a polarized manifold whose Chern characters are
/// `ch_k = r_k c_1(L)^k` for `k = 1 ..= dim`.
///
/// A class `r c_1(L)^k` is nef (positive) exactly when `r >= 0` (`r > 0`), so
/// the manifold is Fano iff `r_1 > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitChernVector {
    scalars: Vec<Rational>,
    label: Option<String>,
}

impl SplitChernVector {
    /// `scalars[k-1] = r_k`; there must be exactly `dim` of them.
    pub fn new(dim: usize, scalars: Vec<Rational>) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::Zero { what: "dimension" });
        }
        if scalars.len() != dim {
            return Err(Error::DimensionMismatch {
                dim,
                scalars: scalars.len(),
            });
        }
        Ok(SplitChernVector {
            scalars,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.scalars.len()
    }

    pub fn scalars(&self) -> &[Rational] {
        &self.scalars
    }

    /// `r_k` for `1 <= k <= dim`.
    pub fn r(&self, k: usize) -> Option<&Rational> {
        k.checked_sub(1).and_then(|idx| self.scalars.get(idx))
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn is_fano(&self) -> bool {
        self.scalars[0] > Rational::zero()
    }
}

/// One step `X |- H` of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentStep {
    /// `L`-degree `a` of the curves parametrized by the family.
    pub degree: u32,
    /// `dim H = r_1 a - 2`.
    pub family_dim: i64,
    /// Chern scalars of `H` against its own polarization, stored up to
    /// degree `dim H`. `None` when `dim H <= 0`.
    pub descended: Option<SplitChernVector>,
}

/// `r_1 a - 2`, the dimension of a family of `L`-degree-`a` curves.
pub fn t_family_dim(v: &SplitChernVector, a: u32) -> Result<i64, Error> {
    if a == 0 {
        return Err(Error::Zero { what: "degree" });
    }
    Ok(integral(&(&v.scalars[0] * int(a as i64)))? - 2)
}

fn integral(value: &Rational) -> Result<i64, Error> {
    if !value.is_integer() {
        return Err(Error::NonIntegralDimension {
            value: value.clone(),
        });
    }
    value
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonIntegralDimension {
            value: value.clone(),
        })
}

/// Single descent step:
/// `s_j = -1/j! + sum_{k=1}^{j+1} b(1, j, k) r_k a^k` for `j = 1 ..= dim H`.
///
/// Fails with [`Error::InsufficientData`] when `dim H >= dim X`, since `s_j`
/// for `j = dim H` consumes `r_(dim H + 1)`.
pub fn descend(table: &CoeffTable, v: &SplitChernVector, a: u32) -> Result<DescentStep, Error> {
    let family_dim = t_family_dim(v, a)?;
    if family_dim <= 0 {
        return Ok(DescentStep {
            degree: a,
            family_dim,
            descended: None,
        });
    }
    let d = family_dim as usize;
    if v.dim() < d + 1 {
        return Err(Error::InsufficientData {
            needed: d + 1,
            available: v.dim(),
        });
    }
    let powers = degree_powers(a, d + 1);
    let mut scalars = Vec::with_capacity(d);
    for j in 1..=d {
        let row = table.row(1, j)?;
        let mut s = -(Rational::from_integer(BigInt::from(1)) / factorial(j));
        for (idx, b) in row.iter().enumerate() {
            s += b * &v.scalars[idx] * &powers[idx];
        }
        scalars.push(s);
    }
    Ok(DescentStep {
        degree: a,
        family_dim,
        descended: Some(SplitChernVector {
            scalars,
            label: None,
        }),
    })
}

// a^1 ..= a^count
fn degree_powers(a: u32, count: usize) -> Vec<Rational> {
    let a = int(a as i64);
    (1..=count).map(|k| pow(&a, k)).collect()
}

/// Chern scalars of the `i`-th member of the chain, computed in one shot
/// from the coefficients `b(i, j, k)`, for a chain whose first step has
/// degree `a1` and every later step degree 1:
///
/// `s_j = -i/j! + sum_{k=1}^{i+j} b(i, j, k) r_k a1^k`.
///
/// The intermediate dimensions are tracked with the same formula at `j = 1`
/// and must satisfy the same bookkeeping as iterated [`descend`]: integral,
/// strictly decreasing, and positive before level `i`.
pub fn descend_direct(
    table: &CoeffTable,
    v: &SplitChernVector,
    i: usize,
    a1: u32,
) -> Result<DescentStep, Error> {
    if i == 0 {
        return Err(Error::Zero { what: "level" });
    }
    let powers = degree_powers(a1, v.dim());
    // sum_{k=1}^{level+j} b(level, j, k) r_k a1^k, or InsufficientData.
    let weighted = |level: usize, j: usize| -> Result<Rational, Error> {
        let row = table.row(level, j)?;
        if row.len() > v.dim() {
            return Err(Error::InsufficientData {
                needed: row.len(),
                available: v.dim(),
            });
        }
        Ok(row
            .iter()
            .zip(v.scalars.iter().zip(&powers))
            .map(|(b, (r, p))| b * r * p)
            .sum())
    };

    let mut prev_dim = v.dim() as i64;
    let mut family_dim = t_family_dim(v, a1)?;
    for level in 1..=i {
        if family_dim >= prev_dim {
            return Err(Error::InsufficientData {
                needed: family_dim as usize + 1,
                available: prev_dim as usize,
            });
        }
        if level == i {
            break;
        }
        if family_dim <= 0 {
            return Err(Error::ChainTerminated { level, family_dim });
        }
        let c1 = weighted(level, 1)? - int(level as i64);
        prev_dim = family_dim;
        family_dim = integral(&c1)? - 2;
    }

    if family_dim <= 0 {
        return Ok(DescentStep {
            degree: if i == 1 { a1 } else { 1 },
            family_dim,
            descended: None,
        });
    }
    let d = family_dim as usize;
    let mut scalars = Vec::with_capacity(d);
    for j in 1..=d {
        scalars.push(weighted(i, j)? - int(i as i64) / factorial(j));
    }
    Ok(DescentStep {
        degree: if i == 1 { a1 } else { 1 },
        family_dim,
        descended: Some(SplitChernVector {
            scalars,
            label: None,
        }),
    })
}
