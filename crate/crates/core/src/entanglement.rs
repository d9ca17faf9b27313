//! Two-spin states in GF(q)^2 ⊗ GF(q)^2 = GF(q)^4.
//!
//! A state `(v0, v1, v2, v3)` is viewed as the 2×2 coefficient array
//! `[[v0, v1], [v2, v3]]`; it is a product state exactly when that array is
//! singular. Local basis changes `L ⊗ R` act as `V -> L V R^T`, so they
//! multiply the determinant by `det L · det R` and never change the class.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::projective::{
    bracket, canonicalize, enumerate_projective_points, DualCovector, FieldVector,
    ProjectivePoint,
};
use crate::qm::{self, tensor_covector, tensor_state, Measurement, Rational};
use crate::two_level::{dual_covector, spin_labels, state_vector, SpinLabel, SpinObservable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Outcome of a product observable: the sign seen by each particle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JointOutcome {
    pub first: Sign,
    pub second: Sign,
}

impl JointOutcome {
    pub const ALL: [JointOutcome; 4] = [
        JointOutcome { first: Sign::Plus, second: Sign::Plus },
        JointOutcome { first: Sign::Plus, second: Sign::Minus },
        JointOutcome { first: Sign::Minus, second: Sign::Plus },
        JointOutcome { first: Sign::Minus, second: Sign::Minus },
    ];

    /// Position in `++, +-, -+, --`.
    pub fn index(self) -> usize {
        usize::from(self.first == Sign::Minus) * 2 + usize::from(self.second == Sign::Minus)
    }

    pub fn product(self) -> i64 {
        self.first.value() * self.second.value()
    }
}

impl fmt::Display for JointOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first, self.second)
    }
}

/// 2×2 matrix over GF(q), row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    entries: [[FieldElement; 2]; 2],
}

impl Mat2 {
    pub fn new(entries: [[FieldElement; 2]; 2]) -> Self {
        Mat2 { entries }
    }

    pub fn identity(field: Field) -> Self {
        Mat2::diag(field.one(), field.one())
    }

    pub fn diag(a: FieldElement, d: FieldElement) -> Self {
        let zero = a.field().zero();
        Mat2::new([[a, zero], [zero, d]])
    }

    pub fn entries(&self) -> [[FieldElement; 2]; 2] {
        self.entries
    }

    pub fn field(&self) -> Field {
        self.entries[0][0].field()
    }

    pub fn det(&self) -> FieldElement {
        let [[a, b], [c, d]] = self.entries;
        a * d - b * c
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let (x, y) = (self.entries, other.entries);
        let cell = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
        Mat2::new([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }

    pub fn transpose(&self) -> Mat2 {
        let [[a, b], [c, d]] = self.entries;
        Mat2::new([[a, c], [b, d]])
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let inv = det.inv()?;
        let [[a, b], [c, d]] = self.entries;
        Ok(Mat2::new([[d * inv, -b * inv], [-c * inv, a * inv]]))
    }

    fn flatten(&self) -> FieldVector {
        let [[a, b], [c, d]] = self.entries;
        FieldVector::new(self.field(), vec![a, b, c, d]).expect("entries share a field")
    }

    fn from_flat(v: &FieldVector) -> Mat2 {
        let c = v.coords();
        Mat2::new([[c[0], c[1]], [c[2], c[3]]])
    }

    /// Representative of the class of `self` modulo nonzero scalars: the
    /// last nonzero entry in row-major order is 1.
    pub fn projective_class(&self) -> Result<Mat2> {
        Ok(Mat2::from_flat(canonicalize(&self.flatten())?.rep()))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Product,
    Entangled,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Product => "product",
            Classification::Entangled => "entangled",
        })
    }
}

/// A canonical point of PG(3, q).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSpinState {
    point: ProjectivePoint,
}

impl TwoSpinState {
    pub fn new(v: &FieldVector) -> Result<Self> {
        if v.dim() != 4 {
            return Err(Error::DimensionMismatch { expected: 4, found: v.dim() });
        }
        Ok(TwoSpinState { point: canonicalize(v)? })
    }

    pub fn product(left: &FieldVector, right: &FieldVector) -> Result<Self> {
        TwoSpinState::new(&tensor_state(left, right)?)
    }

    pub fn vector(&self) -> &FieldVector {
        self.point.rep()
    }

    pub fn point(&self) -> &ProjectivePoint {
        &self.point
    }

    pub fn coefficient_matrix(&self) -> Mat2 {
        Mat2::from_flat(self.vector())
    }

    pub fn classify(&self) -> Classification {
        if self.coefficient_matrix().is_invertible() {
            Classification::Entangled
        } else {
            Classification::Product
        }
    }
}

impl fmt::Display for TwoSpinState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.point)
    }
}

impl fmt::Debug for TwoSpinState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoSpinState{}", self.point)
    }
}

pub fn classify(state: &TwoSpinState) -> Classification {
    state.classify()
}

/// Every point of PG(3, q) in enumeration order.
pub fn all_states(field: Field) -> Vec<TwoSpinState> {
    enumerate_projective_points(field, 4)
        .into_iter()
        .map(|point| TwoSpinState { point })
        .collect()
}

pub fn entangled_states(field: Field) -> Vec<TwoSpinState> {
    all_states(field)
        .into_iter()
        .filter(|s| s.classify() == Classification::Entangled)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateCounts {
    pub total: usize,
    pub product: usize,
    pub entangled: usize,
}

pub fn count_states(field: Field) -> StateCounts {
    let states = all_states(field);
    let entangled = states
        .iter()
        .filter(|s| s.classify() == Classification::Entangled)
        .count();
    StateCounts { total: states.len(), product: states.len() - entangled, entangled }
}

/// `|r>⊗|s> - |s>⊗|r>` (a sum in characteristic 2), canonicalized.
pub fn singlet(field: Field, r: SpinLabel, s: SpinLabel) -> Result<TwoSpinState> {
    if r == s {
        return Err(Error::IdenticalLabels(r.index()));
    }
    let (vr, vs) = (state_vector(field, r)?, state_vector(field, s)?);
    let v = tensor_state(&vr, &vs)?.checked_sub(&tensor_state(&vs, &vr)?)?;
    TwoSpinState::new(&v)
}

/// The singlet built from `|0>` and `|1>`.
pub fn standard_singlet(field: Field) -> TwoSpinState {
    singlet(field, SpinLabel::new(field, 0).unwrap(), SpinLabel::new(field, 1).unwrap())
        .expect("labels 0 and 1 exist in every field")
}

/// `A_rs A_tu` with outcomes `++, +-, -+, --` on the covectors
/// `<rbar|⊗<tbar|, <rbar|⊗<ubar|, <sbar|⊗<tbar|, <sbar|⊗<ubar|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductObservable {
    pub left: SpinObservable,
    pub right: SpinObservable,
}

impl ProductObservable {
    pub fn new(left: SpinObservable, right: SpinObservable) -> Self {
        ProductObservable { left, right }
    }

    pub fn covectors(&self, field: Field) -> Result<Vec<DualCovector>> {
        let left = [self.left.first(), self.left.second()];
        let right = [self.right.first(), self.right.second()];
        let mut out = Vec::with_capacity(4);
        for &l in &left {
            for &r in &right {
                out.push(tensor_covector(&dual_covector(field, l)?, &dual_covector(field, r)?)?);
            }
        }
        Ok(out)
    }

    /// The joint measurement labelled by the product of the two signs.
    pub fn measurement(&self, field: Field) -> Result<Measurement> {
        let outcomes = JointOutcome::ALL
            .iter()
            .map(|o| Rational::from_integer(o.product()))
            .collect();
        Measurement::new(self.covectors(field)?, outcomes)
    }

    /// Probabilities of `++, +-, -+, --`.
    pub fn probabilities(&self, field: Field, state: &TwoSpinState) -> Result<[Rational; 4]> {
        let per = self.measurement(field)?.covector_probabilities(state.vector())?;
        Ok([per[0], per[1], per[2], per[3]])
    }

    /// The correlation `<A_rs A_tu>`.
    pub fn expectation(&self, field: Field, state: &TwoSpinState) -> Result<Rational> {
        qm::expectation(&self.measurement(field)?, state.vector())
    }
}

impl fmt::Display for ProductObservable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.left, self.right)
    }
}

/// Index-sharing patterns of product observables, with `r, s, t, u` distinct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TablePattern {
    /// `A_rs A_rs`
    Same,
    /// `A_rs A_rt`
    SharedFirst,
    /// `A_rs A_st`
    Chained,
    /// `A_rs A_tu`
    Disjoint,
}

impl TablePattern {
    pub const ALL: [TablePattern; 4] = [
        TablePattern::Same,
        TablePattern::SharedFirst,
        TablePattern::Chained,
        TablePattern::Disjoint,
    ];

    pub fn distinct_labels(self) -> usize {
        match self {
            TablePattern::Same => 2,
            TablePattern::SharedFirst | TablePattern::Chained => 3,
            TablePattern::Disjoint => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TablePattern::Same => "A_rs A_rs",
            TablePattern::SharedFirst => "A_rs A_rt",
            TablePattern::Chained => "A_rs A_st",
            TablePattern::Disjoint => "A_rs A_tu",
        }
    }

    /// Instantiates the pattern with concrete labels `[r, s, t, u]`; labels
    /// beyond `distinct_labels()` are ignored.
    pub fn observable(self, labels: [SpinLabel; 4]) -> Result<ProductObservable> {
        let [r, s, t, u] = labels;
        let (left, right) = match self {
            TablePattern::Same => ((r, s), (r, s)),
            TablePattern::SharedFirst => ((r, s), (r, t)),
            TablePattern::Chained => ((r, s), (s, t)),
            TablePattern::Disjoint => ((r, s), (t, u)),
        };
        Ok(ProductObservable::new(
            SpinObservable::new(left.0, left.1)?,
            SpinObservable::new(right.0, right.1)?,
        ))
    }
}

impl fmt::Display for TablePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationRow {
    pub pattern: TablePattern,
    pub observable: ProductObservable,
    /// Probabilities of `++, +-, -+, --`.
    pub probabilities: [Rational; 4],
    pub expectation: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationTable {
    pub rows: Vec<CorrelationRow>,
    /// Patterns needing more distinct labels than the field provides.
    pub not_applicable: Vec<TablePattern>,
}

pub fn correlation_row(
    field: Field,
    state: &TwoSpinState,
    pattern: TablePattern,
    labels: [SpinLabel; 4],
) -> Result<CorrelationRow> {
    let observable = pattern.observable(labels)?;
    let probabilities = observable.probabilities(field, state)?;
    let expectation = observable.expectation(field, state)?;
    Ok(CorrelationRow { pattern, observable, probabilities, expectation })
}

/// One row per index pattern, using labels `r, s, t, u = 0, 1, 2, 3`.
pub fn correlation_table(field: Field, state: &TwoSpinState) -> Result<CorrelationTable> {
    let labels = spin_labels(field);
    let mut rows = Vec::new();
    let mut not_applicable = Vec::new();
    for pattern in TablePattern::ALL {
        if labels.len() < pattern.distinct_labels() {
            not_applicable.push(pattern);
            continue;
        }
        // Slots past the pattern's needs are never read; fill them with label 0.
        let pick = |i: usize| labels.get(i).copied().unwrap_or(labels[0]);
        rows.push(correlation_row(field, state, pattern, [pick(0), pick(1), pick(2), pick(3)])?);
    }
    Ok(CorrelationTable { rows, not_applicable })
}

/// Checks `|(<rbar|⊗<sbar|)|S>| = 1 - δ_rs` for all labels `r, s`.
pub fn singlet_bracket_property(field: Field) -> Result<bool> {
    let s = standard_singlet(field);
    let labels = spin_labels(field);
    for &a in &labels {
        for &b in &labels {
            let x = tensor_covector(&dual_covector(field, a)?, &dual_covector(field, b)?)?;
            if bracket(&x, s.vector())?.abs_value() != u32::from(a != b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `L ⊗ R` with both factors invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalTransformation {
    left: Mat2,
    right: Mat2,
}

impl LocalTransformation {
    pub fn new(left: Mat2, right: Mat2) -> Result<Self> {
        if !left.is_invertible() || !right.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(LocalTransformation { left, right })
    }

    pub fn left(&self) -> Mat2 {
        self.left
    }

    pub fn right(&self) -> Mat2 {
        self.right
    }

    pub fn apply(&self, state: &TwoSpinState) -> TwoSpinState {
        let v = self
            .left
            .mul(&state.coefficient_matrix())
            .mul(&self.right.transpose());
        TwoSpinState::new(&v.flatten()).expect("invertible maps keep states nonzero")
    }
}

/// Which particles the local transformations may act on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sides {
    /// Only the first particle.
    One,
    /// Both particles.
    Both,
}

/// Generators of GL(2, q): all elementary transvections and the two
/// diagonal generator scalings, placed on one or both factors.
pub fn local_generators(field: Field, sides: Sides) -> Vec<LocalTransformation> {
    let (zero, one, a) = (field.zero(), field.one(), field.generator());
    let mut gl2 = vec![Mat2::diag(a, one), Mat2::diag(one, a)];
    for c in field.nonzero_elements() {
        gl2.push(Mat2::new([[one, c], [zero, one]]));
        gl2.push(Mat2::new([[one, zero], [c, one]]));
    }
    let id = Mat2::identity(field);
    let mut out: Vec<LocalTransformation> = gl2
        .iter()
        .map(|&m| LocalTransformation { left: m, right: id })
        .collect();
    if sides == Sides::Both {
        out.extend(gl2.iter().map(|&m| LocalTransformation { left: id, right: m }));
    }
    out
}

/// Breadth-first closure of `seed` under the local generators.
pub fn local_orbit(field: Field, seed: &TwoSpinState, sides: Sides) -> Result<BTreeSet<TwoSpinState>> {
    if seed.classify() == Classification::Product {
        return Err(Error::ProductSeed);
    }
    let generators = local_generators(field, sides);
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(state) = queue.pop_front() {
        for g in &generators {
            let next = g.apply(&state);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// Orbit of `seed` under every `L ⊗ R` with `L, R` in GL(2, q).
pub fn full_local_orbit(field: Field, seed: &TwoSpinState) -> Result<BTreeSet<TwoSpinState>> {
    if seed.classify() == Classification::Product {
        return Err(Error::ProductSeed);
    }
    let group = gl2_elements(field);
    let mut orbit = BTreeSet::new();
    for &l in &group {
        for &r in &group {
            orbit.insert(LocalTransformation { left: l, right: r }.apply(seed));
        }
    }
    Ok(orbit)
}

pub fn gl2_elements(field: Field) -> Vec<Mat2> {
    let elems = field.elements_by_coeffs();
    let mut out = Vec::new();
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                for &d in &elems {
                    let m = Mat2::new([[a, b], [c, d]]);
                    if m.is_invertible() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// PGL(2, q): invertible matrices modulo nonzero scalars, one canonical
/// representative per class, in enumeration order.
pub fn pgl2_elements(field: Field) -> Vec<Mat2> {
    let mut seen = HashSet::new();
    gl2_elements(field)
        .into_iter()
        .map(|m| m.projective_class().expect("invertible matrices are nonzero"))
        .filter(|m| seen.insert(*m))
        .collect()
}

pub fn group_order_pgl2(field: Field) -> usize {
    pgl2_elements(field).len()
}

/// Number of conjugacy classes of PGL(2, q), by brute force.
pub fn pgl2_conjugacy_class_count(field: Field) -> usize {
    let group = pgl2_elements(field);
    let inverses: Vec<Mat2> = group.iter().map(|h| h.inverse().expect("invertible")).collect();
    let mut assigned: HashSet<Mat2> = HashSet::new();
    let mut classes = 0;
    for g in &group {
        if assigned.contains(g) {
            continue;
        }
        classes += 1;
        for (h, h_inv) in group.iter().zip(&inverses) {
            let conj = h.mul(g).mul(h_inv).projective_class().expect("invertible");
            assigned.insert(conj);
        }
    }
    classes
}

/// The PGL(2, q) element given by the coefficient array of an entangled state.
pub fn as_pgl2_element(state: &TwoSpinState) -> Option<Mat2> {
    let m = state.coefficient_matrix();
    m.is_invertible().then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{field_of_order, make_field};

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn classify_examples() {
        let f = make_field(3, 1).unwrap();
        let product = TwoSpinState::new(&FieldVector::from_ints(f, &[0, 1, 0, 0]).unwrap()).unwrap();
        assert_eq!(product.classify(), Classification::Product);
        assert_eq!(standard_singlet(f).classify(), Classification::Entangled);
    }

    #[test]
    fn counts_for_small_fields() {
        let counts = |q| count_states(field_of_order(q).unwrap());
        assert_eq!(counts(2), StateCounts { total: 15, product: 9, entangled: 6 });
        assert_eq!(counts(3), StateCounts { total: 40, product: 16, entangled: 24 });
        assert_eq!(counts(4), StateCounts { total: 85, product: 25, entangled: 60 });
    }

    #[test]
    fn singlet_examples() {
        let f = make_field(2, 1).unwrap();
        let expected = TwoSpinState::new(&FieldVector::from_ints(f, &[0, 1, 1, 0]).unwrap()).unwrap();
        assert_eq!(standard_singlet(f), expected);

        let g = make_field(3, 1).unwrap();
        assert_eq!(standard_singlet(g).vector(), &FieldVector::from_ints(g, &[0, 2, 1, 0]).unwrap());

        let l0 = SpinLabel::new(g, 0).unwrap();
        assert_eq!(singlet(g, l0, l0).unwrap_err(), Error::IdenticalLabels(0));
    }

    #[test]
    fn singlet_is_independent_of_labels() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = field_of_order(q).unwrap();
            let reference = standard_singlet(f);
            for &a in &spin_labels(f) {
                for &b in &spin_labels(f) {
                    if a != b {
                        assert_eq!(singlet(f, a, b).unwrap(), reference, "q={q} r={a} s={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn table_rows_on_singlet() {
        let f = make_field(5, 1).unwrap();
        let table = correlation_table(f, &standard_singlet(f)).unwrap();
        assert!(table.not_applicable.is_empty());
        let row = |p: TablePattern| table.rows.iter().find(|row| row.pattern == p).unwrap();
        assert_eq!(row(TablePattern::Same).probabilities, [r(0, 1), r(1, 2), r(1, 2), r(0, 1)]);
        assert_eq!(row(TablePattern::Same).expectation, r(-1, 1));
        assert_eq!(row(TablePattern::SharedFirst).expectation, r(-1, 3));
        assert_eq!(row(TablePattern::Disjoint).probabilities, [r(1, 4); 4]);

        let g = make_field(2, 1).unwrap();
        let table = correlation_table(g, &standard_singlet(g)).unwrap();
        assert_eq!(table.rows.len(), 3);
        assert_eq!(table.not_applicable, vec![TablePattern::Disjoint]);
    }

    #[test]
    fn bracket_property_holds() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            assert!(singlet_bracket_property(field_of_order(q).unwrap()).unwrap());
        }
    }

    #[test]
    fn pgl2_orders() {
        for (q, order) in [(2, 6), (3, 24), (4, 60)] {
            assert_eq!(group_order_pgl2(field_of_order(q).unwrap()), order);
        }
    }

    #[test]
    fn conjugacy_class_counts() {
        // PGL(2,2) ≅ S3 and PGL(2,3) ≅ S4.
        assert_eq!(pgl2_conjugacy_class_count(make_field(2, 1).unwrap()), 3);
        assert_eq!(pgl2_conjugacy_class_count(make_field(3, 1).unwrap()), 5);
    }

    #[test]
    fn orbit_rejects_product_seed() {
        let f = make_field(2, 1).unwrap();
        let product = TwoSpinState::new(&FieldVector::from_ints(f, &[1, 0, 0, 0]).unwrap()).unwrap();
        assert_eq!(local_orbit(f, &product, Sides::Both).unwrap_err(), Error::ProductSeed);
    }

    #[test]
    fn orbit_sizes() {
        let f = make_field(2, 1).unwrap();
        assert_eq!(local_orbit(f, &standard_singlet(f), Sides::One).unwrap().len(), 6);
        let g = make_field(3, 1).unwrap();
        assert_eq!(local_orbit(g, &standard_singlet(g), Sides::Both).unwrap().len(), 24);
    }

    #[test]
    fn one_sided_closure_reaches_every_entangled_state() {
        for q in [4, 5, 7, 8, 9] {
            let f = crate::field::field_of_order(q).unwrap();
            let orbit = local_orbit(f, &standard_singlet(f), Sides::One).unwrap();
            assert_eq!(orbit, entangled_states(f).into_iter().collect(), "q={q}");
        }
    }

    #[test]
    fn singular_local_factor_is_rejected() {
        let f = make_field(3, 1).unwrap();
        let zero = Mat2::new([[f.zero(); 2]; 2]);
        assert_eq!(
            LocalTransformation::new(zero, Mat2::identity(f)).unwrap_err(),
            Error::SingularMatrix
        );
    }

    #[test]
    fn joint_outcome_indexing() {
        for (i, o) in JointOutcome::ALL.iter().enumerate() {
            assert_eq!(o.index(), i);
        }
        assert_eq!(JointOutcome::ALL[1].to_string(), "+-");
    }
}
