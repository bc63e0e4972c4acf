use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{binomial, Rational};

/// Bernoulli numbers `B_0 ..= B_max` in the convention fixed by
/// `t / (e^t - 1) = sum B_m t^m / m!`.
///
/// That generating function forces `B_1 = -1/2`. The `B_1 = +1/2`
/// convention (from `t / (1 - e^-t)`) is not supported: every descent
/// coefficient `b(1, j, k)` with `j = k` picks up `B_1`, so a sign slip
/// here silently corrupts everything downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Computes `B_0 ..= B_max_m` from `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
    pub fn new(max_m: usize) -> Self {
        let mut values: Vec<Rational> = Vec::with_capacity(max_m + 1);
        values.push(Rational::one());
        for m in 1..=max_m {
            let mut acc = Rational::zero();
            for (j, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += binomial(m + 1, j) * b;
                }
            }
            values.push(-acc / binomial(m + 1, m));
        }
        BernoulliTable { values }
    }

    /// Test hook: the same table with the sign of `B_1` flipped to `+1/2`.
    ///
    /// Used to check that identity failures are caught and reported.
    #[doc(hidden)]
    pub fn with_flipped_b1(max_m: usize) -> Self {
        let mut table = Self::new(max_m);
        if let Some(b1) = table.values.get_mut(1) {
            *b1 = -b1.clone();
        }
        table
    }

    pub fn max_m(&self) -> usize {
        self.values.len() - 1
    }

    /// `B_m`, or `None` past the end of the table.
    pub fn get(&self, m: usize) -> Option<&Rational> {
        self.values.get(m)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn leading_values() {
        let t = BernoulliTable::new(0);
        assert_eq!(t.values(), &[ratio(1, 1)]);

        let t = BernoulliTable::new(12);
        assert_eq!(t.get(1), Some(&ratio(-1, 2)));
        assert_eq!(t.get(2), Some(&ratio(1, 6)));
        assert_eq!(t.get(3), Some(&ratio(0, 1)));
        assert_eq!(t.get(4), Some(&ratio(-1, 30)));
        assert_eq!(t.get(12), Some(&ratio(-691, 2730)));
        assert_eq!(t.get(13), None);
    }

    #[test]
    fn odd_values_vanish() {
        let t = BernoulliTable::new(30);
        for m in (3..=30).step_by(2) {
            assert!(t.get(m).unwrap().is_zero(), "B_{m} should vanish");
        }
    }

    #[test]
    fn flipped_hook_only_touches_b1() {
        let good = BernoulliTable::new(8);
        let bad = BernoulliTable::with_flipped_b1(8);
        assert_eq!(bad.get(1), Some(&ratio(1, 2)));
        assert_eq!(good.values()[2..], bad.values()[2..]);
    }
}
