//! Construction families: the single-weight block code, the cube code
//! derived from a perfect hash family, its extension filling extra blocks
//! of the array, and the translated difference-family codes with their
//! admissibility criterion and search.

mod df;

pub use df::{
    df_code, df_criterion, df_search, df_violation_holds, DfCriterionResult, DfSearchSpec,
    DfViolation, EpsSelection, ExponentSet, SPattern, SearchRecord,
};

use crate::code::Code;
use crate::error::ConstructError;

/// Caps keep accidental huge parameters from exhausting memory.
const MAX_CUBE_SIDE: u32 = 1024;
const MAX_BLOCK_Q: u32 = 1 << 20;

/// The n×n(q-1) code whose block i carries symbols 1..q-1 in row i and 0
/// elsewhere. An optimal frameproof code whenever n ≤ t, hence an optimal
/// t̄-separable code for n < t.
pub fn trivial_fpc(n: usize, q: u32) -> Result<Code, ConstructError> {
    if n < 2 {
        return Err(ConstructError::LengthTooShort(n));
    }
    if q < 2 {
        return Err(ConstructError::AlphabetTooSmall(q));
    }
    if q > MAX_BLOCK_Q {
        return Err(ConstructError::ParamTooLarge {
            name: "q",
            value: q as u64,
            cap: MAX_BLOCK_Q as u64,
        });
    }
    let mut columns = Vec::with_capacity(n * (q as usize - 1));
    for block in 0..n {
        for s in 1..q {
            let mut col = vec![0u32; n];
            col[block] = s;
            columns.push(col);
        }
    }
    Ok(Code::new(n, q, columns)?)
}

/// The cube code over q = r²: codewords (ar+b, ar+c, br+c) for a, b, c in
/// 0..r. Its array view is block-diagonal with each block the row-major
/// 0..r² square; the code is 3̄-separable with r³ codewords.
pub fn phf_cube(r: u32) -> Result<Code, ConstructError> {
    if r < 2 {
        return Err(ConstructError::SideTooSmall(r));
    }
    if r > MAX_CUBE_SIDE {
        return Err(ConstructError::ParamTooLarge {
            name: "r",
            value: r as u64,
            cap: MAX_CUBE_SIDE as u64,
        });
    }
    let q = r * r;
    let mut columns = Vec::with_capacity((r as usize).pow(3));
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                columns.push(vec![a * r + b, a * r + c, b * r + c]);
            }
        }
    }
    Ok(Code::new(3, q, columns)?)
}

/// The three parts of the extended construction for even k with r = k²:
/// the cube code plus two off-diagonal families of kr²/2 codewords each.
/// Exposed separately so the disjointness properties can be checked.
pub fn phf_extended_parts(k: u32) -> Result<(Code, Code, Code), ConstructError> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(ConstructError::KNotEven(k));
    }
    let r = k * k;
    if r > MAX_CUBE_SIDE {
        return Err(ConstructError::ParamTooLarge {
            name: "k",
            value: k as u64,
            cap: 32,
        });
    }
    let q = r * r;
    let c1 = phf_cube(r)?;

    let qm = q as u64;
    let reduce = |v: u64| (v % qm) as u32;
    // g(x, y) = r - (x+1)k + y, always within 0..r.
    let g = |x: u32, y: u32| r - (x + 1) * k + y;

    let mut c2_cols = Vec::with_capacity((k as usize).pow(3) * (r as usize) / 2);
    let mut c3_cols = Vec::with_capacity((k as usize).pow(3) * (r as usize) / 2);
    for h in 0..r {
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let g1 = reduce((x * k + y) as u64 + (h as u64) * (r as u64));
                    if h % 2 == 0 {
                        let g2 = reduce((x * k + z) as u64 + ((h + 1) as u64) * (r as u64));
                        let g3 = reduce((g(x, y) as u64) * (r as u64) + g(x, z) as u64);
                        c2_cols.push(vec![g1, g2, g3]);
                    } else {
                        let g2p = reduce(g(x, z) as u64 + ((h + 1) as u64) * (r as u64));
                        let g3p = reduce((g(x, y) as u64) * (r as u64) + (x * k + z) as u64);
                        c3_cols.push(vec![g1, g2p, g3p]);
                    }
                }
            }
        }
    }
    let c2 = Code::new(3, q, c2_cols)?;
    let c3 = Code::new(3, q, c3_cols)?;
    Ok((c1, c2, c3))
}

/// The union of the three parts: a 3̄-separable code with r³ + kr²
/// codewords over r² symbols, where r = k².
pub fn phf_extended(k: u32) -> Result<Code, ConstructError> {
    let (c1, c2, c3) = phf_extended_parts(k)?;
    let q = c1.q();
    let columns: Vec<Vec<u32>> = c1
        .columns()
        .chain(c2.columns())
        .chain(c3.columns())
        .map(|c| c.to_vec())
        .collect();
    Ok(Code::new(3, q, columns)?)
}
