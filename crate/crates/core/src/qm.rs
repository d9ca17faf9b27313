//! The probability rule for measurements given by spanning sets of dual
//! covectors, with exact rational results.
//!
//! For a state `psi` and a measurement `{<y|}` the probability of outcome `x`
//! is `|<x|psi>|^2 / sum_y |<y|psi>|^2`. The absolute value sends every
//! nonzero field element to 1, so each outcome with a nonzero bracket gets
//! equal weight.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::projective::{bracket_abs, rank, DualCovector, FieldVector};

/// Exact probabilities, expectation values and outcome labels.
pub type Rational = Rational64;

/// A measurement: one covector per outcome, together spanning the dual space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measurement {
    covectors: Vec<DualCovector>,
    outcomes: Vec<Rational>,
}

impl Measurement {
    pub fn new(covectors: Vec<DualCovector>, outcomes: Vec<Rational>) -> Result<Self> {
        if covectors.len() != outcomes.len() {
            return Err(Error::OutcomeCountMismatch {
                covectors: covectors.len(),
                outcomes: outcomes.len(),
            });
        }
        let first = covectors.first().ok_or(Error::EmptyVector)?;
        let (field, dim) = (first.field(), first.dim());
        for x in &covectors {
            if x.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: x.dim() });
            }
            field.zero().same_field(&x.coords()[0])?;
        }
        let rows: Vec<Vec<FieldElement>> = covectors.iter().map(|x| x.coords().to_vec()).collect();
        let rank = rank(&rows);
        if rank < dim {
            return Err(Error::NotSpanning { rank, dim });
        }
        Ok(Measurement { covectors, outcomes })
    }

    pub fn covectors(&self) -> &[DualCovector] {
        &self.covectors
    }

    pub fn outcomes(&self) -> &[Rational] {
        &self.outcomes
    }

    pub fn dim(&self) -> usize {
        self.covectors[0].dim()
    }

    /// Probability of each covector, in covector order, without merging
    /// repeated outcome labels.
    pub fn covector_probabilities(&self, psi: &FieldVector) -> Result<Vec<Rational>> {
        if psi.is_zero() {
            return Err(Error::ZeroVector);
        }
        let weights = self
            .covectors
            .iter()
            .map(|x| bracket_abs(x, psi).map(|a| (a * a) as i64))
            .collect::<Result<Vec<_>>>()?;
        let total: i64 = weights.iter().sum();
        if total == 0 {
            return Err(Error::InternalViolation(
                "spanning measurement annihilates a nonzero state",
            ));
        }
        Ok(weights.into_iter().map(|w| Rational::new(w, total)).collect())
    }
}

/// Outcome labels paired with their probabilities, in order of first
/// appearance in the measurement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutcomeDistribution {
    entries: Vec<(Rational, Rational)>,
}

impl OutcomeDistribution {
    pub fn entries(&self) -> &[(Rational, Rational)] {
        &self.entries
    }

    pub fn probability_of(&self, outcome: Rational) -> Rational {
        self.entries
            .iter()
            .find(|(label, _)| *label == outcome)
            .map_or_else(Rational::zero, |&(_, p)| p)
    }

    pub fn total(&self) -> Rational {
        self.entries.iter().map(|&(_, p)| p).sum()
    }

    pub fn expectation(&self) -> Rational {
        self.entries.iter().map(|&(label, p)| label * p).sum()
    }
}

impl fmt::Display for OutcomeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(label, p)| format!("({label}, {p})"))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn probability(m: &Measurement, psi: &FieldVector) -> Result<OutcomeDistribution> {
    let per_covector = m.covector_probabilities(psi)?;
    let mut entries: Vec<(Rational, Rational)> = Vec::new();
    for (&label, p) in m.outcomes.iter().zip(per_covector) {
        match entries.iter_mut().find(|(l, _)| *l == label) {
            Some((_, acc)) => *acc += p,
            None => entries.push((label, p)),
        }
    }
    let dist = OutcomeDistribution { entries };
    if !dist.total().is_one() {
        return Err(Error::InternalViolation("distribution does not sum to 1"));
    }
    Ok(dist)
}

pub fn expectation(m: &Measurement, psi: &FieldVector) -> Result<Rational> {
    Ok(probability(m, psi)?.expectation())
}

fn kronecker(u: &[FieldElement], v: &[FieldElement]) -> Result<Vec<FieldElement>> {
    u.iter()
        .flat_map(|&a| v.iter().map(move |&b| a.checked_mul(b)))
        .collect()
}

/// `u ⊗ v` with component `i * dim(v) + j` equal to `u_i v_j`.
pub fn tensor_state(u: &FieldVector, v: &FieldVector) -> Result<FieldVector> {
    FieldVector::new(u.field(), kronecker(u.coords(), v.coords())?)
}

pub fn tensor_covector(x: &DualCovector, y: &DualCovector) -> Result<DualCovector> {
    DualCovector::new(x.field(), kronecker(x.coords(), y.coords())?)
}

/// Whether rescaling `psi` by the nonzero scalar `c` leaves every outcome
/// probability unchanged.
pub fn scale_invariance_check(m: &Measurement, psi: &FieldVector, c: FieldElement) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::DivisionByZero(c.field().order()));
    }
    Ok(probability(m, &psi.scale(c)?)? == probability(m, psi)?)
}
