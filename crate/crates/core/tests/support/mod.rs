//! Shared test fixtures: a generator of split vectors whose first few
//! descent steps are all defined.

#![allow(dead_code)]

use chern_descent_core::coeffs::closed::b_closed_j1;
use chern_descent_core::exact::{int, ratio, Rational};
use chern_descent_core::SplitChernVector;
use rand::seq::SliceRandom;
use rand::Rng;

/// Free entries are drawn from here.
pub fn pool() -> Vec<Rational> {
    [
        (-2, 1),
        (-1, 1),
        (-1, 2),
        (-1, 3),
        (0, 1),
        (1, 6),
        (1, 4),
        (1, 2),
        (2, 3),
        (1, 1),
        (3, 2),
        (2, 1),
        (5, 2),
        (3, 1),
    ]
    .iter()
    .map(|&(p, q)| ratio(p, q))
    .collect()
}

/// A split vector `v`, a depth `i` and a first degree `a` such that every
/// step of `X |- H_1 |- ... |- H_i` (degrees `a, 1, 1, ...`) is defined and
/// `H_i` is positive-dimensional.
///
/// Family dimensions `n > d_1 > ... > d_i >= 1` are chosen first; `r_1` and
/// then each `r_(l+1)` are solved so that `c_1(H_l) = d_(l+1) + 2`, using the
/// composition closed form for `b(l, 1, k)`. The remaining entries come from
/// [`pool`].
pub struct DefinedChain {
    pub vector: SplitChernVector,
    pub depth: usize,
    pub first_degree: u32,
    pub dims: Vec<usize>,
}

pub fn defined_chain<R: Rng>(rng: &mut R, max_dim: usize, max_depth: usize) -> DefinedChain {
    let n = rng.gen_range(2..=max_dim);
    let depth = rng.gen_range(1..=max_depth.min(n - 1));
    let a: u32 = rng.gen_range(1..=2);
    let mut candidates: Vec<usize> = (1..n).collect();
    candidates.shuffle(rng);
    let mut dims: Vec<usize> = candidates[..depth].to_vec();
    dims.sort_unstable_by(|x, y| y.cmp(x));

    let pool = pool();
    let mut r: Vec<Rational> = (0..n)
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect();
    let a_r = int(a as i64);
    let a_pow = |k: usize| (0..k).fold(int(1), |acc, _| acc * &a_r);

    r[0] = int(dims[0] as i64 + 2) / &a_r;
    for level in 1..depth {
        // c_1(H_level) = -level + sum_{k=1}^{level+1} b(level,1,k) r_k a^k, top b = 1
        let target = int(dims[level] as i64 + 2);
        let mut partial = -int(level as i64);
        for k in 1..=level {
            partial += b_closed_j1(level, k).unwrap() * &r[k - 1] * a_pow(k);
        }
        r[level] = (target - partial) / a_pow(level + 1);
    }
    DefinedChain {
        vector: SplitChernVector::new(n, r).unwrap(),
        depth,
        first_degree: a,
        dims,
    }
}

/// One frozen coefficient table per test binary.
pub fn shared_table() -> &'static chern_descent_core::CoeffTable {
    static TABLE: std::sync::OnceLock<chern_descent_core::CoeffTable> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| chern_descent_core::CoeffTable::new(12, 12))
}
