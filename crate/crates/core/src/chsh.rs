//! The CHSH combination `<A B> + <A b> + <a B> - <a b>` and its exhaustive
//! maximization over spin observables and two-spin states.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::Signed;

use crate::entanglement::{all_states, entangled_states, standard_singlet, ProductObservable, TwoSpinState};
use crate::error::Result;
use crate::field::Field;
use crate::qm::Rational;
use crate::two_level::{all_spin_observables, spin_labels, spin_observables, SpinObservable};

/// `<A, a; B, b>`: `A, a` act on particle 1, `B, b` on particle 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChshQuadruple {
    pub big_a: SpinObservable,
    pub small_a: SpinObservable,
    pub big_b: SpinObservable,
    pub small_b: SpinObservable,
}

impl ChshQuadruple {
    pub fn new(
        big_a: SpinObservable,
        small_a: SpinObservable,
        big_b: SpinObservable,
        small_b: SpinObservable,
    ) -> Self {
        ChshQuadruple { big_a, small_a, big_b, small_b }
    }

    pub fn is_increasing(&self) -> bool {
        [self.big_a, self.small_a, self.big_b, self.small_b]
            .iter()
            .all(SpinObservable::is_increasing)
    }
}

impl fmt::Display for ChshQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}; {}, {}⟩", self.big_a, self.small_a, self.big_b, self.small_b)
    }
}

pub fn chsh_correlator(field: Field, quad: &ChshQuadruple, state: &TwoSpinState) -> Result<Rational> {
    let corr = |x: SpinObservable, y: SpinObservable| ProductObservable::new(x, y).expectation(field, state);
    Ok(corr(quad.big_a, quad.big_b)? + corr(quad.big_a, quad.small_b)?
        + corr(quad.small_a, quad.big_b)?
        - corr(quad.small_a, quad.small_b)?)
}

/// Correlations `<x y>` on one state for every pair from a fixed observable
/// list, so that a quadruple scan needs only table lookups.
struct CorrelationMatrix {
    size: usize,
    values: Vec<Rational>,
}

impl CorrelationMatrix {
    fn build(field: Field, observables: &[SpinObservable], state: &TwoSpinState) -> Result<Self> {
        let size = observables.len();
        let mut values = Vec::with_capacity(size * size);
        for &x in observables {
            for &y in observables {
                values.push(ProductObservable::new(x, y).expectation(field, state)?);
            }
        }
        Ok(CorrelationMatrix { size, values })
    }

    fn get(&self, i: usize, j: usize) -> Rational {
        self.values[i * self.size + j]
    }

    fn chsh(&self, a1: usize, a2: usize, b1: usize, b2: usize) -> Rational {
        self.get(a1, b1) + self.get(a1, b2) + self.get(a2, b1) - self.get(a2, b2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateSet {
    Singlet,
    Entangled,
    /// Every state, product states included.
    All,
}

impl StateSet {
    pub fn states(self, field: Field) -> Vec<TwoSpinState> {
        match self {
            StateSet::Singlet => vec![standard_singlet(field)],
            StateSet::Entangled => entangled_states(field),
            StateSet::All => all_states(field),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObservableSet {
    /// `A_rs` with `r < s`.
    Increasing,
    /// Every `A_rs` with `r != s`.
    Unrestricted,
}

impl ObservableSet {
    pub fn observables(self, field: Field) -> Vec<SpinObservable> {
        match self {
            ObservableSet::Increasing => spin_observables(field),
            ObservableSet::Unrestricted => all_spin_observables(field),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChshResult {
    pub value: Rational,
    pub quadruple: ChshQuadruple,
    pub state: TwoSpinState,
}

#[derive(Clone, Debug)]
pub struct ChshScan {
    /// Maximizer of `|value|`; ties go to the smallest
    /// (quadruple indices, state index).
    pub best: ChshResult,
    pub max_abs: Rational,
    /// Every value the correlator takes over the scan.
    pub attained: BTreeSet<Rational>,
    pub quadruples: usize,
    pub states: usize,
}

pub fn maximize_chsh(field: Field, states: StateSet, observables: ObservableSet) -> Result<ChshScan> {
    let obs = observables.observables(field);
    let states = states.states(field);
    let n = obs.len();

    let mut attained = BTreeSet::new();
    let mut best: Option<(Rational, [usize; 5], Rational)> = None;
    for (si, state) in states.iter().enumerate() {
        let table = CorrelationMatrix::build(field, &obs, state)?;
        for a1 in 0..n {
            for a2 in 0..n {
                for b1 in 0..n {
                    for b2 in 0..n {
                        let value = table.chsh(a1, a2, b1, b2);
                        attained.insert(value);
                        let abs = value.abs();
                        let key = [a1, a2, b1, b2, si];
                        let better = match &best {
                            None => true,
                            Some((best_abs, best_key, _)) => {
                                abs > *best_abs || (abs == *best_abs && key < *best_key)
                            }
                        };
                        if better {
                            best = Some((abs, key, value));
                        }
                    }
                }
            }
        }
    }

    let (max_abs, [a1, a2, b1, b2, si], value) = best.expect("at least one observable and state");
    Ok(ChshScan {
        best: ChshResult {
            value,
            quadruple: ChshQuadruple::new(obs[a1], obs[a2], obs[b1], obs[b2]),
            state: states[si].clone(),
        },
        max_abs,
        attained,
        quadruples: n.pow(4),
        states: states.len(),
    })
}

/// `A B + A b + a B - a b` for ±1 values.
pub fn classical_chsh_value(big_a: i64, small_a: i64, big_b: i64, small_b: i64) -> i64 {
    big_a * big_b + big_a * small_b + small_a * big_b - small_a * small_b
}

/// Largest `|A B + A b + a B - a b|` over the 16 deterministic assignments.
pub fn classical_chsh_bound() -> i64 {
    let signs = [1, -1];
    let mut best = 0;
    for big_a in signs {
        for small_a in signs {
            for big_b in signs {
                for small_b in signs {
                    best = best.max(classical_chsh_value(big_a, small_a, big_b, small_b).abs());
                }
            }
        }
    }
    best
}

/// Checks, for every quadruple of observables (both index orders) on every
/// state of `states`, the relabelling identities
/// `<A,a;B,b> = <A,-a;b,B> = -<-A,a;b,B> = <a,A;B,-b> = -<a,A;-B,b>`.
pub fn sign_symmetry_check(field: Field, states: StateSet) -> Result<bool> {
    let obs = all_spin_observables(field);
    let index: HashMap<SpinObservable, usize> = obs.iter().enumerate().map(|(i, &o)| (o, i)).collect();
    let neg: Vec<usize> = obs.iter().map(|o| index[&o.negated()]).collect();
    let n = obs.len();
    for state in states.states(field) {
        let t = CorrelationMatrix::build(field, &obs, &state)?;
        for a1 in 0..n {
            for a2 in 0..n {
                for b1 in 0..n {
                    for b2 in 0..n {
                        let v = t.chsh(a1, a2, b1, b2);
                        let holds = v == t.chsh(a1, neg[a2], b2, b1)
                            && v == -t.chsh(neg[a1], a2, b2, b1)
                            && v == t.chsh(a2, a1, b1, neg[b2])
                            && v == -t.chsh(a2, a1, neg[b1], b2);
                        if !holds {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The two extremal families `<A_rs, A_tu; A_tu, A_rs>` (`r < s`, `t < u`)
/// and `<A_rs, A_st; A_rt, A_rs>` (`r < s < t`).
pub fn extremal_families(field: Field) -> (Vec<ChshQuadruple>, Vec<ChshQuadruple>) {
    let obs = spin_observables(field);
    let swapped = obs
        .iter()
        .flat_map(|&x| obs.iter().map(move |&y| ChshQuadruple::new(x, y, y, x)))
        .collect();
    let labels = spin_labels(field);
    let mut chained = Vec::new();
    for &r in &labels {
        for &s in labels.iter().filter(|&&s| s > r) {
            for &t in labels.iter().filter(|&&t| t > s) {
                let a = |x, y| SpinObservable::new(x, y).expect("distinct labels");
                chained.push(ChshQuadruple::new(a(r, s), a(s, t), a(r, t), a(r, s)));
            }
        }
    }
    (swapped, chained)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn classical_examples() {
        assert_eq!(classical_chsh_value(1, 1, 1, 1), 2);
        // A(B + b) + a(B - b): one bracket vanishes, the other is ±2.
        assert_eq!(classical_chsh_value(1, -1, 1, 1), 2);
        assert_eq!(classical_chsh_value(1, 1, -1, 1), -2);
        assert_eq!(classical_chsh_bound(), 2);
    }

    #[test]
    fn collapsed_quadruple_is_twice_the_correlation() {
        let f = make_field(3, 1).unwrap();
        let s = standard_singlet(f);
        let a = SpinObservable::from_indices(f, 0, 2).unwrap();
        let b = SpinObservable::from_indices(f, 1, 3).unwrap();
        let value = chsh_correlator(f, &ChshQuadruple::new(a, a, b, b), &s).unwrap();
        let corr = ProductObservable::new(a, b).expectation(f, &s).unwrap();
        assert_eq!(value, corr * 2);
    }

    #[test]
    fn table_lookup_agrees_with_direct_correlator() {
        let f = make_field(3, 1).unwrap();
        let obs = spin_observables(f);
        let s = standard_singlet(f);
        let table = CorrelationMatrix::build(f, &obs, &s).unwrap();
        for (i, j, k, l) in [(0, 1, 2, 3), (5, 4, 3, 2), (1, 1, 0, 5)] {
            let quad = ChshQuadruple::new(obs[i], obs[j], obs[k], obs[l]);
            assert_eq!(table.chsh(i, j, k, l), chsh_correlator(f, &quad, &s).unwrap());
        }
    }

    #[test]
    fn singlet_scan_at_q2() {
        let f = make_field(2, 1).unwrap();
        let scan = maximize_chsh(f, StateSet::Singlet, ObservableSet::Increasing).unwrap();
        assert_eq!(scan.max_abs, Rational::from_integer(2));
        assert_eq!(scan.quadruples, 81);
        assert_eq!(scan.best.value.abs(), scan.max_abs);
        assert_eq!(chsh_correlator(f, &scan.best.quadruple, &scan.best.state).unwrap(), scan.best.value);
    }

    #[test]
    fn family_sizes() {
        let (swapped, chained) = extremal_families(make_field(3, 1).unwrap());
        assert_eq!(swapped.len(), 36);
        assert_eq!(chained.len(), 4);
        assert!(swapped.iter().chain(&chained).all(ChshQuadruple::is_increasing));
    }
}
