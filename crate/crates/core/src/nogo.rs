//! Deterministic hidden-variable test for the singlet correlations.
//!
//! Each particle carries two settings `X` and `Y`. A local hidden-variable
//! model is a mixture of deterministic assignments of ±1 to `X1, Y1, X2, Y2`.
//! An event with quantum probability zero must be excluded by every
//! assignment in the mixture, so an event with positive quantum probability
//! that no surviving assignment produces cannot be reproduced.

use std::fmt;

use num_traits::Zero;

use crate::entanglement::{standard_singlet, JointOutcome, ProductObservable, Sign, TwoSpinState};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::qm::Rational;
use crate::two_level::SpinObservable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Setting {
    X,
    Y,
}

/// Setting measured on particle 1 and on particle 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SettingPair {
    pub first: Setting,
    pub second: Setting,
}

impl SettingPair {
    /// `X1X2, Y1Y2, X1Y2, Y1X2`.
    pub const ALL: [SettingPair; 4] = [
        SettingPair { first: Setting::X, second: Setting::X },
        SettingPair { first: Setting::Y, second: Setting::Y },
        SettingPair { first: Setting::X, second: Setting::Y },
        SettingPair { first: Setting::Y, second: Setting::X },
    ];
}

impl fmt::Display for SettingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}1{:?}2", self.first, self.second)
    }
}

/// A joint outcome of one setting pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JointEvent {
    pub pair: SettingPair,
    pub outcome: JointOutcome,
}

impl fmt::Display for JointEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})={}", self.pair, self.outcome)
    }
}

/// A joint event asserted to have probability zero.
pub type ZeroConstraint = JointEvent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeterministicAssignment {
    pub x1: Sign,
    pub y1: Sign,
    pub x2: Sign,
    pub y2: Sign,
}

impl DeterministicAssignment {
    /// All 16 assignments, `+` before `-`, `x1` varying slowest.
    pub fn all() -> Vec<DeterministicAssignment> {
        let signs = [Sign::Plus, Sign::Minus];
        let mut out = Vec::with_capacity(16);
        for x1 in signs {
            for y1 in signs {
                for x2 in signs {
                    for y2 in signs {
                        out.push(DeterministicAssignment { x1, y1, x2, y2 });
                    }
                }
            }
        }
        out
    }

    pub fn outcome(&self, pair: SettingPair) -> JointOutcome {
        let first = match pair.first {
            Setting::X => self.x1,
            Setting::Y => self.y1,
        };
        let second = match pair.second {
            Setting::X => self.x2,
            Setting::Y => self.y2,
        };
        JointOutcome { first, second }
    }

    pub fn realizes(&self, event: &JointEvent) -> bool {
        self.outcome(event.pair) == event.outcome
    }
}

impl fmt::Display for DeterministicAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X1={}1 Y1={}1 X2={}1 Y2={}1", self.x1, self.y1, self.x2, self.y2)
    }
}

fn setting_observable(setting: Setting, x: SpinObservable, y: SpinObservable) -> SpinObservable {
    match setting {
        Setting::X => x,
        Setting::Y => y,
    }
}

/// Zero-probability joint events of `state` for the four setting pairs built
/// from `x` and `y`, read off the exact product-observable distributions.
pub fn extract_zero_constraints(
    field: Field,
    state: &TwoSpinState,
    x: SpinObservable,
    y: SpinObservable,
) -> Result<Vec<ZeroConstraint>> {
    if x.shares_index_with(&y) != 1 {
        return Err(Error::NoSharedIndex(x.to_string(), y.to_string()));
    }
    let mut constraints = Vec::new();
    for pair in SettingPair::ALL {
        let obs = ProductObservable::new(
            setting_observable(pair.first, x, y),
            setting_observable(pair.second, x, y),
        );
        let probs = obs.probabilities(field, state)?;
        for outcome in JointOutcome::ALL {
            if probs[outcome.index()].is_zero() {
                constraints.push(JointEvent { pair, outcome });
            }
        }
    }
    Ok(constraints)
}

/// Quantum probability of a joint event.
pub fn event_probability(
    field: Field,
    state: &TwoSpinState,
    x: SpinObservable,
    y: SpinObservable,
    event: &JointEvent,
) -> Result<Rational> {
    let obs = ProductObservable::new(
        setting_observable(event.pair.first, x, y),
        setting_observable(event.pair.second, x, y),
    );
    Ok(obs.probabilities(field, state)?[event.outcome.index()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Feasible,
    Infeasible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Feasible => "FEASIBLE",
            Verdict::Infeasible => "INFEASIBLE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityReport {
    /// Assignments violating no zero constraint.
    pub survivors: Vec<DeterministicAssignment>,
    /// Each required event with the first survivor realizing it, if any.
    pub witnesses: Vec<(JointEvent, Option<DeterministicAssignment>)>,
    pub verdict: Verdict,
}

/// A mixture of deterministic assignments can honour every zero constraint
/// and still give each required event positive probability only if every
/// required event is realized by some surviving assignment.
pub fn hidden_variable_feasible(
    constraints: &[ZeroConstraint],
    required_positive: &[JointEvent],
) -> FeasibilityReport {
    let survivors: Vec<DeterministicAssignment> = DeterministicAssignment::all()
        .into_iter()
        .filter(|a| !constraints.iter().any(|c| a.realizes(c)))
        .collect();
    let witnesses: Vec<_> = required_positive
        .iter()
        .map(|event| (*event, survivors.iter().find(|a| a.realizes(event)).copied()))
        .collect();
    let verdict = if witnesses.iter().all(|(_, w)| w.is_some()) {
        Verdict::Feasible
    } else {
        Verdict::Infeasible
    };
    FeasibilityReport { survivors, witnesses, verdict }
}

/// The full argument on the singlet with `X = A_01`, `Y = A_02`.
#[derive(Clone, Debug)]
pub struct SingletArgument {
    pub x: SpinObservable,
    pub y: SpinObservable,
    pub constraints: Vec<ZeroConstraint>,
    /// Required events with their quantum probabilities.
    pub targets: Vec<(JointEvent, Rational)>,
    pub report: FeasibilityReport,
}

pub fn singlet_argument(field: Field) -> Result<SingletArgument> {
    let x = SpinObservable::from_indices(field, 0, 1)?;
    let y = SpinObservable::from_indices(field, 0, 2)?;
    let state = standard_singlet(field);
    let constraints = extract_zero_constraints(field, &state, x, y)?;
    let minus_minus = JointOutcome { first: Sign::Minus, second: Sign::Minus };
    let events = [
        JointEvent { pair: SettingPair { first: Setting::X, second: Setting::Y }, outcome: minus_minus },
        JointEvent { pair: SettingPair { first: Setting::Y, second: Setting::X }, outcome: minus_minus },
    ];
    let targets = events
        .iter()
        .map(|e| Ok((*e, event_probability(field, &state, x, y, e)?)))
        .collect::<Result<Vec<_>>>()?;
    let report = hidden_variable_feasible(&constraints, &events);
    Ok(SingletArgument { x, y, constraints, targets, report })
}
