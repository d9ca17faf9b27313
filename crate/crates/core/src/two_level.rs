//! The two-level ("spin") system on GF(q)^2.
//!
//! States are labelled `0..=q`: `|0> = (1, 0)`, `|1> = (0, 1)` and
//! `|r> = (a^(r-1), 1)` for `r >= 2`, where `a` is the field generator. The
//! matching outcome covectors are `<0bar| = [0, -1]`, `<1bar| = [1, 0]` and
//! `<rbar| = [1, -a^(r-1)]`, chosen so that `<rbar|s> = 0` exactly when
//! `r == s`.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::projective::{DualCovector, FieldVector};
use crate::qm::{self, Measurement, OutcomeDistribution, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinLabel(u32);

impl SpinLabel {
    pub fn new(field: Field, r: u32) -> Result<Self> {
        check_label(field, r)?;
        Ok(SpinLabel(r))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for SpinLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩", self.0)
    }
}

fn check_label(field: Field, r: u32) -> Result<()> {
    if r > field.order() {
        Err(Error::LabelOutOfRange { label: r, max: field.order() })
    } else {
        Ok(())
    }
}

/// All `q + 1` labels.
pub fn spin_labels(field: Field) -> Vec<SpinLabel> {
    (0..=field.order()).map(SpinLabel).collect()
}

pub fn state_vector(field: Field, r: SpinLabel) -> Result<FieldVector> {
    check_label(field, r.0)?;
    let coords = match r.0 {
        0 => vec![field.one(), field.zero()],
        1 => vec![field.zero(), field.one()],
        k => vec![field.generator_power(k as i64 - 1), field.one()],
    };
    FieldVector::new(field, coords)
}

pub fn dual_covector(field: Field, r: SpinLabel) -> Result<DualCovector> {
    check_label(field, r.0)?;
    let coords = match r.0 {
        0 => vec![field.zero(), -field.one()],
        1 => vec![field.one(), field.zero()],
        k => vec![field.one(), -field.generator_power(k as i64 - 1)],
    };
    DualCovector::new(field, coords)
}

/// `A_rs`: outcome +1 on `<rbar|`, outcome -1 on `<sbar|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinObservable {
    first: SpinLabel,
    second: SpinLabel,
}

impl SpinObservable {
    pub fn new(first: SpinLabel, second: SpinLabel) -> Result<Self> {
        if first == second {
            return Err(Error::IdenticalLabels(first.0));
        }
        Ok(SpinObservable { first, second })
    }

    /// Shorthand for `A_rs` from raw labels.
    pub fn from_indices(field: Field, r: u32, s: u32) -> Result<Self> {
        Self::new(SpinLabel::new(field, r)?, SpinLabel::new(field, s)?)
    }

    pub fn first(&self) -> SpinLabel {
        self.first
    }

    pub fn second(&self) -> SpinLabel {
        self.second
    }

    /// `-A_rs = A_sr`.
    pub fn negated(&self) -> Self {
        SpinObservable { first: self.second, second: self.first }
    }

    pub fn is_increasing(&self) -> bool {
        self.first < self.second
    }

    pub fn measurement(&self, field: Field) -> Result<Measurement> {
        Measurement::new(
            vec![dual_covector(field, self.first)?, dual_covector(field, self.second)?],
            vec![Rational::one(), -Rational::one()],
        )
    }

    pub fn shares_index_with(&self, other: &SpinObservable) -> usize {
        let mine = [self.first, self.second];
        [other.first, other.second]
            .iter()
            .filter(|l| mine.contains(l))
            .count()
    }
}

impl fmt::Display for SpinObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{{{},{}}}", self.first.0, self.second.0)
    }
}

/// Observables `A_rs` with `r < s`, ordered lexicographically by `(r, s)`.
pub fn spin_observables(field: Field) -> Vec<SpinObservable> {
    let labels = spin_labels(field);
    labels
        .iter()
        .flat_map(|&r| {
            labels
                .iter()
                .filter(move |&&s| r < s)
                .map(move |&s| SpinObservable { first: r, second: s })
        })
        .collect()
}

/// All ordered pairs `r != s`.
pub fn all_spin_observables(field: Field) -> Vec<SpinObservable> {
    let labels = spin_labels(field);
    labels
        .iter()
        .flat_map(|&r| {
            labels
                .iter()
                .filter(move |&&s| r != s)
                .map(move |&s| SpinObservable { first: r, second: s })
        })
        .collect()
}

/// Distribution over `{+1, -1}` for measuring `obs` on the state `|t>`.
pub fn spin_probability(
    field: Field,
    obs: &SpinObservable,
    state: SpinLabel,
) -> Result<OutcomeDistribution> {
    qm::probability(&obs.measurement(field)?, &state_vector(field, state)?)
}

pub fn spin_expectation(field: Field, obs: &SpinObservable, state: SpinLabel) -> Result<Rational> {
    Ok(spin_probability(field, obs, state)?.expectation())
}
