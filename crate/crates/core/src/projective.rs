//! State vectors, outcome covectors and the projective space PG(N-1, q).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{coefficient_tuples, Field, FieldElement};

fn check_coords(field: Field, coords: &[FieldElement]) -> Result<()> {
    if coords.is_empty() {
        return Err(Error::EmptyVector);
    }
    for c in coords {
        field.zero().same_field(c)?;
    }
    Ok(())
}

fn render(coords: &[FieldElement]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    parts.join(", ")
}

/// A column vector in GF(q)^N.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldVector {
    coords: Vec<FieldElement>,
}

impl FieldVector {
    pub fn new(field: Field, coords: Vec<FieldElement>) -> Result<Self> {
        check_coords(field, &coords)?;
        Ok(FieldVector { coords })
    }

    /// Builds a vector from prime-subfield integers.
    pub fn from_ints(field: Field, values: &[i64]) -> Result<Self> {
        Self::new(field, values.iter().map(|&v| field.from_int(v)).collect())
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(FieldElement::is_zero)
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|&x| c.checked_mul(x))
            .collect::<Result<_>>()?;
        Ok(FieldVector { coords })
    }

    pub fn checked_add(&self, other: &FieldVector) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a.checked_add(b))
            .collect::<Result<_>>()?;
        Ok(FieldVector { coords })
    }

    pub fn checked_sub(&self, other: &FieldVector) -> Result<Self> {
        self.checked_add(&other.scale(-other.field().one())?)
    }
}

impl fmt::Display for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", render(&self.coords))
    }
}

impl fmt::Debug for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldVector{self}")
    }
}

/// A row vector in the dual space; kept apart from [`FieldVector`] because
/// covectors stand for measurement outcomes, vectors for states.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualCovector {
    coords: Vec<FieldElement>,
}

impl DualCovector {
    pub fn new(field: Field, coords: Vec<FieldElement>) -> Result<Self> {
        check_coords(field, &coords)?;
        Ok(DualCovector { coords })
    }

    pub fn from_ints(field: Field, values: &[i64]) -> Result<Self> {
        Self::new(field, values.iter().map(|&v| field.from_int(v)).collect())
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn scale(&self, c: FieldElement) -> Result<Self> {
        let coords = self
            .coords
            .iter()
            .map(|&x| c.checked_mul(x))
            .collect::<Result<_>>()?;
        Ok(DualCovector { coords })
    }
}

impl fmt::Display for DualCovector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", render(&self.coords))
    }
}

impl fmt::Debug for DualCovector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualCovector{self}")
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// The pairing `<x|v> = sum_i x_i v_i` in GF(q).
pub fn bracket(x: &DualCovector, v: &FieldVector) -> Result<FieldElement> {
    check_dims(x.dim(), v.dim())?;
    x.coords
        .iter()
        .zip(&v.coords)
        .try_fold(x.field().zero(), |acc, (&a, &b)| acc.checked_add(a.checked_mul(b)?))
}

/// `|<x|v>|`, which is 0 or 1.
pub fn bracket_abs(x: &DualCovector, v: &FieldVector) -> Result<u32> {
    Ok(bracket(x, v)?.abs_value())
}

/// A point of PG(N-1, q), stored as the representative whose last nonzero
/// coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    rep: FieldVector,
}

impl ProjectivePoint {
    pub fn rep(&self) -> &FieldVector {
        &self.rep
    }

    pub fn into_rep(self) -> FieldVector {
        self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjectivePoint{}", self.rep)
    }
}

pub fn canonicalize(v: &FieldVector) -> Result<ProjectivePoint> {
    let last = v
        .coords
        .iter()
        .rev()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroVector)?;
    Ok(ProjectivePoint { rep: v.scale(last.inv()?)? })
}

/// All `(q^N - 1)/(q - 1)` points of PG(N-1, q), ordered lexicographically by
/// the coefficient sequences of their canonical coordinates.
pub fn enumerate_projective_points(field: Field, dim: usize) -> Vec<ProjectivePoint> {
    let elements = field.elements_by_coeffs();
    coefficient_tuples(field.order(), dim as u32)
        .filter_map(|idx| {
            let coords: Vec<FieldElement> = idx.iter().map(|&i| elements[i as usize]).collect();
            let last = coords.iter().rev().find(|c| !c.is_zero())?;
            last.is_one().then_some(ProjectivePoint { rep: FieldVector { coords } })
        })
        .collect()
}

/// Rank over GF(q) of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<FieldElement>]) -> usize {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("pivot is nonzero");
        let pivot_row: Vec<FieldElement> = m[rank].iter().map(|&x| x * inv).collect();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col];
            if factor.is_zero() {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = *x - factor * y;
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}
