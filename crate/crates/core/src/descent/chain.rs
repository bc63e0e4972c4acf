use alloc::vec::Vec;

use num_traits::Zero;

use super::catalogue::identify;
use super::split::{descend, t_family_dim, DescentStep, SplitChernVector};
use crate::coeffs::CoeffTable;
use crate::Error;

/// Why a chain walk stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Terminal {
    /// The last family is a point.
    DimensionZero,
    /// The last family has `c_1 <= 0`.
    NotFano,
    /// The next family would need Chern data beyond the stored degrees.
    InsufficientData,
    /// No family of the requested degree exists (`r_1 a - 2 < 0`).
    NegativeDimension,
}

impl Terminal {
    pub fn name(self) -> &'static str {
        match self {
            Terminal::DimensionZero => "dimension_zero",
            Terminal::NotFano => "not_fano",
            Terminal::InsufficientData => "insufficient_data",
            Terminal::NegativeDimension => "negative_dimension",
        }
    }
}

/// Record of a walk `X |- H_1 |- H_2 |- ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub source: SplitChernVector,
    pub steps: Vec<DescentStep>,
    /// Degrees actually used, one per recorded step.
    pub degree_sequence: Vec<u32>,
    pub terminal: Terminal,
    /// Index of the first member that is not Fano (a point counts), when
    /// the walk reached one.
    pub n_invariant: Option<usize>,
}

impl ChainReport {
    /// Dimensions `dim X, dim H_1, ...`.
    pub fn dims(&self) -> Vec<i64> {
        core::iter::once(self.source.dim() as i64)
            .chain(self.steps.iter().map(|s| s.family_dim))
            .collect()
    }
}

/// Walks the chain by repeated [`descend`]. Step `i` uses `degrees[i-1]`,
/// or degree 1 once `degrees` is exhausted or absent.
///
/// A walk into a negative-dimensional family or past the stored Chern data
/// ends the chain without recording that step. Descended members that match
/// a catalogue model are labelled accordingly.
pub fn descend_chain(
    table: &CoeffTable,
    v: &SplitChernVector,
    degrees: Option<&[u32]>,
) -> Result<ChainReport, Error> {
    if !v.is_fano() {
        return Err(Error::NotFano);
    }
    let degrees = degrees.unwrap_or(&[]);
    let mut steps: Vec<DescentStep> = Vec::new();
    let mut current = v.clone();

    let terminal = loop {
        let a = degrees.get(steps.len()).copied().unwrap_or(1);
        let family_dim = t_family_dim(&current, a)?;
        if family_dim < 0 {
            break Terminal::NegativeDimension;
        }
        let mut step = match descend(table, &current, a) {
            Ok(step) => step,
            Err(Error::InsufficientData { .. }) => break Terminal::InsufficientData,
            Err(e) => return Err(e),
        };
        let Some(next) = step.descended.take() else {
            steps.push(step);
            break Terminal::DimensionZero;
        };
        let next = match identify(&next) {
            Some(label) => next.with_label(label),
            None => next,
        };
        let fano = next.scalars()[0] > Zero::zero();
        step.descended = Some(next.clone());
        steps.push(step);
        if !fano {
            break Terminal::NotFano;
        }
        current = next;
    };

    let n_invariant = match terminal {
        Terminal::DimensionZero | Terminal::NotFano => Some(steps.len()),
        Terminal::InsufficientData | Terminal::NegativeDimension => None,
    };
    Ok(ChainReport {
        source: v.clone(),
        degree_sequence: steps.iter().map(|s| s.degree).collect(),
        steps,
        terminal,
        n_invariant,
    })
}
