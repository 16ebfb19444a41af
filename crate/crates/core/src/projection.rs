//! Shortened-code projections: for an axis j, the sets A_i^{(j)} of
//! (n-1)-tuples left after deleting coordinate j from the columns whose
//! j-th coordinate is i, plus the doubly-indexed variant for axes (1, 2).

use std::collections::BTreeMap;

use crate::code::Code;
use crate::error::CodeError;

/// Single-axis projection of a code. Tuples are stored sorted, so each
/// value's set supports ordered merges and deterministic reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    axis: usize,
    sets: BTreeMap<u32, Vec<Vec<u32>>>,
}

impl Projection {
    /// Axis j, 1-based.
    pub fn axis(&self) -> usize {
        self.axis
    }

    /// The shortened set for value `i`; empty slice if no column carries it.
    pub fn set(&self, i: u32) -> &[Vec<u32>] {
        self.sets.get(&i).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Values with nonempty shortened sets, ascending.
    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.sets.keys().copied()
    }

    /// Σ_i |A_i^{(j)}|, which always equals M.
    pub fn total(&self) -> usize {
        self.sets.values().map(Vec::len).sum()
    }
}

/// Computes the axis-j projection (j is 1-based, 1..=n).
pub fn axis_projection(code: &Code, axis: usize) -> Result<Projection, CodeError> {
    if axis == 0 || axis > code.n() {
        return Err(CodeError::InvalidAxis { axis, n: code.n() });
    }
    let mut sets: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    for col in code.columns() {
        let key = col[axis - 1];
        let tuple: Vec<u32> = col
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != axis - 1)
            .map(|(_, &v)| v)
            .collect();
        sets.entry(key).or_default().push(tuple);
    }
    for tuples in sets.values_mut() {
        tuples.sort_unstable();
    }
    Ok(Projection { axis, sets })
}

/// The doubly-indexed sets A^{(1,2)}_{i,k} of a length-3 code: third
/// coordinates of columns starting (i, k, ·). Keys with empty sets are
/// absent from the map.
pub fn pair_projection(code: &Code) -> Result<BTreeMap<(u32, u32), Vec<u32>>, CodeError> {
    if code.n() != 3 {
        return Err(CodeError::WrongLength {
            expected: 3,
            got: code.n(),
        });
    }
    let mut sets: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
    for col in code.columns() {
        sets.entry((col[0], col[1])).or_default().push(col[2]);
    }
    for thirds in sets.values_mut() {
        thirds.sort_unstable();
    }
    Ok(sets)
}
