use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::Rational;
use crate::Error;

/// Iterator over the compositions of `n` into exactly `k` positive parts,
/// in lexicographic order.
#[derive(Clone, Debug)]
pub struct Compositions {
    current: Option<Vec<usize>>,
}

impl Compositions {
    pub fn new(k: usize, n: usize) -> Self {
        let current = if k == 0 || k > n {
            None
        } else {
            let mut first = vec![1; k];
            first[k - 1] = n - (k - 1);
            Some(first)
        };
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        // Rightmost non-final part that can still grow: the tail after it
        // must keep at least one unit per remaining slot.
        let mut next = out.clone();
        let mut tail = next[k - 1];
        for p in (0..k.saturating_sub(1)).rev() {
            let slots = k - 1 - p;
            if tail > slots {
                next[p] += 1;
                let remainder = tail - 1;
                for slot in next.iter_mut().take(k - 1).skip(p + 1) {
                    *slot = 1;
                }
                next[k - 1] = remainder - (slots - 1);
                self.current = Some(next);
                break;
            }
            tail += next[p];
        }
        Some(out)
    }
}

/// All `k`-tuples of positive integers summing to `n`, lexicographically.
/// Empty when `k > n`.
pub fn compositions(k: usize, n: usize) -> Vec<Vec<usize>> {
    Compositions::new(k, n).collect()
}

/// `e_l(values)` by the one-pass recurrence on the running products.
pub fn elementary_symmetric(l: usize, values: &[Rational]) -> Result<Rational, Error> {
    if l > values.len() {
        return Err(Error::SymmetricDegree {
            degree: l,
            len: values.len(),
        });
    }
    let mut e = vec![Rational::zero(); l + 1];
    e[0] = Rational::one();
    for (seen, v) in values.iter().enumerate() {
        for d in (1..=l.min(seen + 1)).rev() {
            let add = &e[d - 1] * v;
            e[d] += add;
        }
    }
    Ok(e.swap_remove(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, int};

    #[test]
    fn small_compositions() {
        assert_eq!(compositions(1, 3), vec![vec![3]]);
        assert_eq!(compositions(2, 3), vec![vec![1, 2], vec![2, 1]]);
        assert!(compositions(3, 2).is_empty());
        assert!(compositions(0, 2).is_empty());
        assert_eq!(
            compositions(3, 5),
            vec![
                vec![1, 1, 3],
                vec![1, 2, 2],
                vec![1, 3, 1],
                vec![2, 1, 2],
                vec![2, 2, 1],
                vec![3, 1, 1],
            ]
        );
    }

    #[test]
    fn composition_counts_and_order() {
        for n in 1..=12 {
            for k in 1..=n {
                let all = compositions(k, n);
                assert_eq!(int(all.len() as i64), binomial(n - 1, k - 1), "k={k} n={n}");
                for c in &all {
                    assert_eq!(c.len(), k);
                    assert!(c.iter().all(|&l| l >= 1));
                    assert_eq!(c.iter().sum::<usize>(), n);
                }
                assert!(
                    all.windows(2).all(|w| w[0] < w[1]),
                    "not strictly lexicographic"
                );
            }
        }
    }

    #[test]
    fn symmetric_examples() {
        let v = [int(1), int(2), int(3)];
        assert_eq!(elementary_symmetric(0, &v).unwrap(), int(1));
        assert_eq!(elementary_symmetric(1, &v).unwrap(), int(6));
        assert_eq!(elementary_symmetric(2, &v).unwrap(), int(11));
        assert_eq!(elementary_symmetric(3, &v).unwrap(), int(6));
        assert_eq!(elementary_symmetric(0, &[]).unwrap(), int(1));
        assert_eq!(
            elementary_symmetric(4, &v),
            Err(Error::SymmetricDegree { degree: 4, len: 3 })
        );
    }
}
