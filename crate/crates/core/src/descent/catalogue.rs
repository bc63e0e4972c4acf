use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::split::SplitChernVector;
use crate::exact::{factorial, int, Rational};
use crate::Error;

/// Model manifolds with known chains of minimal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelFamily {
    ProjectiveSpace(usize),
    Quadric(usize),
    Grassmannian { k: usize, m: usize },
}

impl ModelFamily {
    pub fn label(self) -> String {
        match self {
            ModelFamily::ProjectiveSpace(n) => projective_label(n),
            ModelFamily::Quadric(n) => quadric_label(n),
            ModelFamily::Grassmannian { k, m } => format!("G({k},{m})"),
        }
    }
}

fn projective_label(n: usize) -> String {
    if n == 0 {
        String::from("pt")
    } else {
        format!("P^{n}")
    }
}

fn quadric_label(n: usize) -> String {
    if n == 0 {
        String::from("pt")
    } else {
        format!("Q^{n}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelShape {
    /// The model lives in the split Chern model and can be descended.
    Split {
        vector: SplitChernVector,
        /// Degree of each step of the known chain.
        degrees: Vec<u32>,
        /// Labels `X, H_1, ..., pt`.
        expected_chain: Vec<String>,
    },
    /// Only the chain shape is known; the first family is a product of
    /// projective spaces, outside the split model.
    NonSplit {
        /// Shared head, then one branch per factor.
        head: Vec<String>,
        branches: Vec<Vec<String>>,
        n_lower: usize,
        n_upper: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub family: ModelFamily,
    pub shape: ModelShape,
}

impl CatalogueEntry {
    pub fn vector(&self) -> Option<&SplitChernVector> {
        match &self.shape {
            ModelShape::Split { vector, .. } => Some(vector),
            ModelShape::NonSplit { .. } => None,
        }
    }

    pub fn degrees(&self) -> Option<&[u32]> {
        match &self.shape {
            ModelShape::Split { degrees, .. } => Some(degrees),
            ModelShape::NonSplit { .. } => None,
        }
    }

    /// `(N_lower, N_upper)` as known for the model.
    pub fn n_invariants(&self) -> (usize, usize) {
        match (&self.shape, self.family) {
            (
                ModelShape::NonSplit {
                    n_lower, n_upper, ..
                },
                _,
            ) => (*n_lower, *n_upper),
            (_, ModelFamily::ProjectiveSpace(n)) => (n, n),
            (_, ModelFamily::Quadric(n)) => (n.div_ceil(2), n.div_ceil(2)),
            (_, ModelFamily::Grassmannian { .. }) => unreachable!("grassmannians are non-split"),
        }
    }
}

/// `ch_k(P^n) = (n+1)/k!`.
pub fn projective_scalars(n: usize) -> Vec<Rational> {
    (1..=n).map(|k| int(n as i64 + 1) / factorial(k)).collect()
}

/// `ch_k(Q^n) = (n + 2 - 2^k)/k!`.
pub fn quadric_scalars(n: usize) -> Vec<Rational> {
    (1..=n)
        .map(|k| {
            let two_k = Rational::from_integer(num_bigint::BigInt::from(1) << k);
            (int(n as i64 + 2) - two_k) / factorial(k)
        })
        .collect()
}

/// Looks up a catalogue model.
///
/// Quadric chains drop by two dimensions per step with lines, except that
/// the minimal curves on `Q^1` are conics, so an odd quadric's last step has
/// degree 2. Grassmannians `G(k, m)` need `2 <= k <= m - 2`; at `k = 1` or
/// `k = m - 1` they are projective spaces.
pub fn catalogue(family: ModelFamily) -> Result<CatalogueEntry, Error> {
    let shape = match family {
        ModelFamily::ProjectiveSpace(n) => {
            if n == 0 {
                return Err(Error::InvalidParameters(String::from(
                    "projective space needs n >= 1",
                )));
            }
            ModelShape::Split {
                vector: SplitChernVector::new(n, projective_scalars(n))?
                    .with_label(projective_label(n)),
                degrees: vec![1; n],
                expected_chain: (0..=n).rev().map(projective_label).collect(),
            }
        }
        ModelFamily::Quadric(n) => {
            if n == 0 {
                return Err(Error::InvalidParameters(String::from(
                    "quadric needs n >= 1",
                )));
            }
            let mut chain: Vec<String> = (0..=n / 2).map(|s| quadric_label(n - 2 * s)).collect();
            if n % 2 == 1 {
                chain.push(String::from("pt"));
            }
            let steps = chain.len() - 1;
            let mut degrees = vec![1; steps];
            if n % 2 == 1 {
                degrees[steps - 1] = 2;
            }
            ModelShape::Split {
                vector: SplitChernVector::new(n, quadric_scalars(n))?.with_label(quadric_label(n)),
                degrees,
                expected_chain: chain,
            }
        }
        ModelFamily::Grassmannian { k, m } => {
            if k < 2 || k + 2 > m {
                return Err(Error::InvalidParameters(format!(
                    "G({k},{m}) needs 2 <= k <= m - 2 (k = 1 or m - 1 is a projective space)"
                )));
            }
            let head = vec![
                family.label(),
                format!(
                    "{} x {}",
                    projective_label(k - 1),
                    projective_label(m - k - 1)
                ),
            ];
            let branch =
                |top: usize| -> Vec<String> { (0..=top).rev().map(projective_label).collect() };
            ModelShape::NonSplit {
                head,
                branches: vec![branch(k - 2), branch(m - k - 2)],
                n_lower: k.min(m - k),
                n_upper: k.max(m - k),
            }
        }
    };
    Ok(CatalogueEntry { family, shape })
}

/// Recognises `P^d` and `Q^d` by their Chern scalars.
pub fn identify(v: &SplitChernVector) -> Option<String> {
    let d = v.dim();
    if v.scalars() == projective_scalars(d).as_slice() {
        Some(projective_label(d))
    } else if v.scalars() == quadric_scalars(d).as_slice() {
        Some(quadric_label(d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn projective_four() {
        let entry = catalogue(ModelFamily::ProjectiveSpace(4)).unwrap();
        let v = entry.vector().unwrap();
        assert_eq!(
            v.scalars(),
            &[ratio(5, 1), ratio(5, 2), ratio(5, 6), ratio(5, 24)]
        );
        let ModelShape::Split {
            expected_chain,
            degrees,
            ..
        } = &entry.shape
        else {
            panic!()
        };
        assert_eq!(expected_chain, &["P^4", "P^3", "P^2", "P^1", "pt"]);
        assert_eq!(degrees, &[1, 1, 1, 1]);
    }

    #[test]
    fn quadric_six_entries() {
        let entry = catalogue(ModelFamily::Quadric(6)).unwrap();
        let want: Vec<Rational> = [(6, 1), (2, 1), (0, 1), (-1, 3), (-1, 5), (-7, 90)]
            .iter()
            .map(|&(p, q)| ratio(p, q))
            .collect();
        assert_eq!(entry.vector().unwrap().scalars(), want.as_slice());
        let ModelShape::Split {
            expected_chain,
            degrees,
            ..
        } = &entry.shape
        else {
            panic!()
        };
        assert_eq!(expected_chain, &["Q^6", "Q^4", "Q^2", "pt"]);
        assert_eq!(degrees, &[1, 1, 1]);
    }

    #[test]
    fn odd_quadric_chain() {
        let entry = catalogue(ModelFamily::Quadric(5)).unwrap();
        let ModelShape::Split {
            expected_chain,
            degrees,
            ..
        } = &entry.shape
        else {
            panic!()
        };
        assert_eq!(expected_chain, &["Q^5", "Q^3", "Q^1", "pt"]);
        assert_eq!(degrees, &[1, 1, 2]);
        let q1 = catalogue(ModelFamily::Quadric(1)).unwrap();
        assert_eq!(q1.degrees(), Some(&[2u32][..]));
    }

    #[test]
    fn grassmannian_shape() {
        let entry = catalogue(ModelFamily::Grassmannian { k: 2, m: 5 }).unwrap();
        assert!(entry.vector().is_none());
        assert_eq!(entry.n_invariants(), (2, 3));
        let ModelShape::NonSplit { head, branches, .. } = &entry.shape else {
            panic!()
        };
        assert_eq!(head, &["G(2,5)", "P^1 x P^2"]);
        assert_eq!(branches[0], ["pt"]);
        assert_eq!(branches[1], ["P^1", "pt"]);
    }

    #[test]
    fn invalid_parameters() {
        assert!(catalogue(ModelFamily::ProjectiveSpace(0)).is_err());
        assert!(catalogue(ModelFamily::Quadric(0)).is_err());
        assert!(catalogue(ModelFamily::Grassmannian { k: 1, m: 5 }).is_err());
        assert!(catalogue(ModelFamily::Grassmannian { k: 3, m: 3 }).is_err());
        assert!(catalogue(ModelFamily::Grassmannian { k: 4, m: 5 }).is_err());
    }

    #[test]
    fn identification() {
        let p = SplitChernVector::new(3, projective_scalars(3)).unwrap();
        assert_eq!(identify(&p).as_deref(), Some("P^3"));
        let q = SplitChernVector::new(3, quadric_scalars(3)).unwrap();
        assert_eq!(identify(&q).as_deref(), Some("Q^3"));
        let other = SplitChernVector::new(1, vec![ratio(7, 1)]).unwrap();
        assert_eq!(identify(&other), None);
    }
}
