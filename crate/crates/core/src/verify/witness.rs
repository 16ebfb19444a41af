//! Violation certificates. Every witness re-validates against the code it
//! was issued for through a pure predicate that re-applies the defining
//! condition, so stale or fabricated witnesses are detectable.

use serde::{Deserialize, Serialize};

use crate::code::Code;

/// A violation certificate for one of the verified properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// Two distinct subsets of columns with equal descendant codes.
    #[serde(rename = "SC_PAIR")]
    ScPair {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// A coalition whose descendant code captures an outside codeword.
    #[serde(rename = "FPC_TRIPLE")]
    FpcTriple {
        coalition: Vec<usize>,
        outsider: usize,
    },
    /// Four columns matching the Δ₁ pattern (shared pair in row 2).
    #[serde(rename = "DELTA1")]
    Delta1 {
        columns: [usize; 4],
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
        f: u32,
        g: u32,
    },
    /// Four columns matching the Δ₂ pattern (shared pair in row 3).
    #[serde(rename = "DELTA2")]
    Delta2 {
        columns: [usize; 4],
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
        f: u32,
        g: u32,
    },
    /// Four columns matching the Δ₃ pattern (shared pair in row 1).
    #[serde(rename = "DELTA3")]
    Delta3 {
        columns: [usize; 4],
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
        f: u32,
        g: u32,
    },
    /// Six columns forming a ∇ pattern: three base columns pairwise
    /// distinct in every coordinate plus their three cyclic mixtures.
    #[serde(rename = "NABLA")]
    Nabla { columns: [usize; 6] },
    /// A set of columns no row separates.
    #[serde(rename = "PHF_SET")]
    PhfSet { columns: Vec<usize> },
    /// Same-axis shortened sets overlapping too much: either two shared
    /// tuples, or one shared tuple with a non-singleton side.
    #[serde(rename = "PROJ_OVERLAP")]
    ProjOverlap {
        axis: usize,
        value_a: u32,
        value_b: u32,
        shared: Vec<Vec<u32>>,
        size_a: usize,
        size_b: usize,
    },
}

impl Witness {
    /// Checks the witness against `code` by re-applying the defining
    /// condition from scratch.
    pub fn revalidate(&self, code: &Code) -> bool {
        match self {
            Witness::ScPair { first, second } => {
                if !valid_subset(code, first) || !valid_subset(code, second) || first == second {
                    return false;
                }
                match (code.descendant_key(first), code.descendant_key(second)) {
                    (Ok(ka), Ok(kb)) => ka == kb,
                    _ => false,
                }
            }
            Witness::FpcTriple {
                coalition,
                outsider,
            } => {
                if !valid_subset(code, coalition)
                    || *outsider >= code.len()
                    || coalition.contains(outsider)
                {
                    return false;
                }
                (0..code.n()).all(|row| {
                    let v = code.entry(row, *outsider);
                    coalition.iter().any(|&j| code.entry(row, j) == v)
                })
            }
            Witness::Delta1 {
                columns,
                a,
                b,
                c,
                d,
                e,
                f,
                g,
            } => revalidate_delta(
                code,
                columns,
                [*a, *e, *c],
                [*a, *f, *d],
                [*b, *g, *c],
                [*b, *e, *d],
                (*a, *b, *c, *d, *e, *f, *g),
            ),
            Witness::Delta2 {
                columns,
                a,
                b,
                c,
                d,
                e,
                f,
                g,
            } => revalidate_delta(
                code,
                columns,
                [*a, *c, *e],
                [*a, *d, *f],
                [*b, *c, *g],
                [*b, *d, *e],
                (*a, *b, *c, *d, *e, *f, *g),
            ),
            Witness::Delta3 {
                columns,
                a,
                b,
                c,
                d,
                e,
                f,
                g,
            } => revalidate_delta(
                code,
                columns,
                [*e, *a, *c],
                [*f, *a, *d],
                [*g, *b, *c],
                [*e, *b, *d],
                (*a, *b, *c, *d, *e, *f, *g),
            ),
            Witness::Nabla { columns } => revalidate_nabla(code, columns),
            Witness::PhfSet { columns } => {
                if !valid_subset(code, columns) {
                    return false;
                }
                crate::verify::separating_row(code, columns).is_none()
            }
            Witness::ProjOverlap {
                axis,
                value_a,
                value_b,
                shared,
                size_a,
                size_b,
            } => revalidate_proj_overlap(code, *axis, *value_a, *value_b, shared, *size_a, *size_b),
        }
    }
}

fn valid_subset(code: &Code, subset: &[usize]) -> bool {
    !subset.is_empty()
        && subset.windows(2).all(|w| w[0] < w[1])
        && subset.iter().all(|&j| j < code.len())
}

fn revalidate_delta(
    code: &Code,
    columns: &[usize; 4],
    c1: [u32; 3],
    c2: [u32; 3],
    c3: [u32; 3],
    c4: [u32; 3],
    (a, b, c, d, e, f, g): (u32, u32, u32, u32, u32, u32, u32),
) -> bool {
    if code.n() != 3 || columns.iter().any(|&j| j >= code.len()) {
        return false;
    }
    let mut sorted = *columns;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    // Degeneracy constraints: distinct shared values on the two
    // non-shared rows, and the repeated value never among the free ones.
    if a == b || c == d || e == f || e == g {
        return false;
    }
    let expect = [c1, c2, c3, c4];
    columns
        .iter()
        .zip(expect.iter())
        .all(|(&j, pat)| code.column(j) == pat)
}

fn revalidate_nabla(code: &Code, columns: &[usize; 6]) -> bool {
    if code.n() != 3 || columns.iter().any(|&j| j >= code.len()) {
        return false;
    }
    let mut sorted = *columns;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let col = |k: usize| code.column(columns[k]);
    let (a, b, c) = (col(0), col(1), col(2));
    // Each row holds three distinct values.
    for i in 0..3 {
        if a[i] == b[i] || a[i] == c[i] || b[i] == c[i] {
            return false;
        }
    }
    col(3) == [a[0], b[1], c[2]] && col(4) == [b[0], c[1], a[2]] && col(5) == [c[0], a[1], b[2]]
}

fn revalidate_proj_overlap(
    code: &Code,
    axis: usize,
    value_a: u32,
    value_b: u32,
    shared: &[Vec<u32>],
    size_a: usize,
    size_b: usize,
) -> bool {
    if axis == 0 || axis > code.n() || shared.is_empty() {
        return false;
    }
    let Ok(proj) = crate::projection::axis_projection(code, axis) else {
        return false;
    };
    let sa = proj.set(value_a);
    let sb = proj.set(value_b);
    if sa.len() != size_a || sb.len() != size_b {
        return false;
    }
    let present = |s: &[Vec<u32>], tup: &Vec<u32>| s.binary_search(tup).is_ok();
    if !shared.iter().all(|t| present(sa, t) && present(sb, t)) {
        return false;
    }
    shared.len() >= 2 || size_a > 1 || size_b > 1
}
