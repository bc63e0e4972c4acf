//! Exact rational arithmetic and the combinatorial primitives everything
//! else is built from.

mod bernoulli;
mod combinatorics;

pub use self::bernoulli::BernoulliTable;
pub use self::combinatorics::{compositions, elementary_symmetric, Compositions};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `p / q` as a [`Rational`]. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for f in 2..=n {
        acc *= BigInt::from(f);
    }
    Rational::from_integer(acc)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for step in 0..k {
        // acc = C(n, step) here; the product stays integral after the division.
        acc = acc * BigInt::from(n - step) / BigInt::from(step + 1);
    }
    Rational::from_integer(acc)
}

/// `(-1)^e` as a rational.
pub(crate) fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Integer power of a rational.
pub(crate) fn pow(base: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 0), int(1));
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 7), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(30, 15), int(155_117_520));
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in 1..25 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(6), int(720));
    }

    #[test]
    fn ratio_is_canonical() {
        let r = ratio(6, -4);
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
    }
}
