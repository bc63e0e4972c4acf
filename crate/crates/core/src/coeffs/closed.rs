//! Closed forms for `b(i, 1, k)` and `b(i, 2, k)` as sums over integer
//! compositions, evaluated by direct enumeration.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{elementary_symmetric, factorial, int, Compositions, Rational};
use crate::Error;

/// `sum over (l_1..l_k) in P(k, n) of 1 / (l_1 ... l_k)`.
pub fn composition_sum(k: usize, n: usize) -> Result<Rational, Error> {
    if k == 0 {
        return Err(Error::Zero { what: "k" });
    }
    if k > n {
        return Err(Error::CoeffIndex {
            i: 0,
            j: n,
            k,
            bound: n,
        });
    }
    Ok(reciprocal_sum(k, n))
}

// Same sum, but zero on the empty set instead of an error.
fn reciprocal_sum(k: usize, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for parts in Compositions::new(k, n) {
        let denom: BigInt = parts.iter().map(|&l| BigInt::from(l)).product();
        acc += Rational::new(BigInt::one(), denom);
    }
    acc
}

/// `b(i, 1, k)` as the reciprocal-product sum over `P(k, i + 1)`.
pub fn b_closed_j1(i: usize, k: usize) -> Result<Rational, Error> {
    if i == 0 || k == 0 || k > i + 1 {
        return Err(Error::CoeffIndex {
            i,
            j: 1,
            k,
            bound: i + 1,
        });
    }
    Ok(reciprocal_sum(k, i + 1))
}

/// `b(i, 2, k)` as the sum over `P(k, i + 2)` minus half the sum over
/// `P(k, i + 1)` (empty when `k = i + 2`).
pub fn b_closed_j2(i: usize, k: usize) -> Result<Rational, Error> {
    if i == 0 || k == 0 || k > i + 2 {
        return Err(Error::CoeffIndex {
            i,
            j: 2,
            k,
            bound: i + 2,
        });
    }
    Ok(reciprocal_sum(k, i + 2) - reciprocal_sum(k, i + 1) / int(2))
}

/// `k! / n! * e_(n-k)(1, 2, ..., n-1)`, the symmetric-function evaluation
/// of [`composition_sum`].
pub fn composition_sum_symmetric(k: usize, n: usize) -> Result<Rational, Error> {
    if k == 0 {
        return Err(Error::Zero { what: "k" });
    }
    if k > n {
        return Err(Error::CoeffIndex {
            i: 0,
            j: n,
            k,
            bound: n,
        });
    }
    let values: Vec<Rational> = (1..n as i64).map(int).collect();
    Ok(factorial(k) / factorial(n) * elementary_symmetric(n - k, &values)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn composition_sum_examples() {
        for n in 1..8 {
            assert_eq!(composition_sum(1, n).unwrap(), ratio(1, n as i64));
        }
        assert_eq!(composition_sum(2, 3).unwrap(), ratio(1, 1));
        assert_eq!(composition_sum(2, 4).unwrap(), ratio(11, 12));
        assert!(composition_sum(3, 2).is_err());
        assert!(composition_sum(0, 2).is_err());
    }

    #[test]
    fn closed_j1_examples() {
        assert_eq!(b_closed_j1(1, 1).unwrap(), ratio(1, 2));
        assert_eq!(b_closed_j1(2, 2).unwrap(), ratio(1, 1));
        for i in 1..=8 {
            assert_eq!(b_closed_j1(i, i + 1).unwrap(), ratio(1, 1));
        }
        assert!(b_closed_j1(2, 4).is_err());
    }

    #[test]
    fn closed_j2_examples() {
        assert_eq!(b_closed_j2(1, 2).unwrap(), ratio(1, 2));
        assert_eq!(b_closed_j2(1, 1).unwrap(), ratio(1, 12));
        for i in 1..=8 {
            assert_eq!(b_closed_j2(i, i + 2).unwrap(), ratio(1, 1));
        }
        assert!(b_closed_j2(1, 4).is_err());
    }

    #[test]
    fn symmetric_route_small() {
        // 2!/4! * e_2(1,2,3) = 11/12
        assert_eq!(composition_sum_symmetric(2, 4).unwrap(), ratio(11, 12));
        assert_eq!(composition_sum_symmetric(4, 4).unwrap(), ratio(1, 1));
    }
}
