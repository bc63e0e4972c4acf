//! Descent of Chern characters along minimal families in the split model.
//!
//! A model manifold is a [`SplitChernVector`]: `ch_k(X) = r_k c_1(L)^k` for a
//! fixed polarization `L`. If the curves of the minimal family have
//! `L`-degree `a`, the descent map sends `c_1(L)^m` to `a^m c_1(L_1)^(m-1)`,
//! so every class stays a scalar multiple of a power of the new
//! polarization and the whole chain can be followed exactly on scalars.

mod catalogue;
mod chain;
mod split;

pub use self::catalogue::{catalogue, identify, CatalogueEntry, ModelFamily, ModelShape};
pub use self::chain::{descend_chain, ChainReport, Terminal};
pub use self::split::{descend, descend_direct, t_family_dim, DescentStep, SplitChernVector};
