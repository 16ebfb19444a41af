//! Golden-data fixtures: small codes and arrays with known properties,
//! used throughout the test suites and handy as CLI demo inputs.

use crate::code::Code;
use crate::pls::PartialLatinSquare;

/// The optimal 12-codeword code of length 3 over a 4-letter alphabet whose
/// array view has exactly one empty cell per row and column.
pub fn c4() -> Code {
    let rows = [
        [0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3],
        [0, 1, 2, 0, 2, 3, 0, 1, 3, 1, 2, 3],
        [0, 1, 2, 1, 3, 2, 3, 2, 0, 3, 0, 1],
    ];
    let columns: Vec<Vec<u32>> = (0..12)
        .map(|j| vec![rows[0][j], rows[1][j], rows[2][j]])
        .collect();
    Code::new(3, 4, columns).expect("fixture is valid")
}

/// The array view of [`c4`].
pub fn b4() -> PartialLatinSquare {
    let x = None;
    #[rustfmt::skip]
    let cells = vec![
        Some(0), Some(1), Some(2), x,
        Some(1), x,       Some(3), Some(2),
        Some(3), Some(2), x,       Some(0),
        x,       Some(3), Some(0), Some(1),
    ];
    PartialLatinSquare::new(4, cells).expect("fixture is valid")
}

/// The optimal 3-codeword binary code of length 3: the identity columns.
pub fn identity3() -> Code {
    Code::new(3, 2, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).expect("fixture is valid")
}

/// Four columns forming a Δ₁ pattern: two size-3 subsets share their
/// descendant code, so the code is not 3̄-separable.
pub fn delta1() -> Code {
    Code::new(
        3,
        3,
        vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 2, 0], vec![1, 0, 1]],
    )
    .expect("fixture is valid")
}

/// [`delta1`] with the second and third rows swapped: a Δ₂ pattern.
pub fn delta2() -> Code {
    Code::new(
        3,
        3,
        vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 2], vec![1, 1, 0]],
    )
    .expect("fixture is valid")
}

/// Six columns forming a ∇ pattern over a 3-letter alphabet: three base
/// columns distinct in every coordinate plus their three cyclic mixtures.
/// Every 3 columns are separated by some row, yet the code is not
/// 3̄-separable.
pub fn nabla() -> Code {
    Code::new(
        3,
        3,
        vec![
            vec![0, 0, 0],
            vec![1, 1, 1],
            vec![2, 2, 2],
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ],
    )
    .expect("fixture is valid")
}

/// A two-codeword code violating the frameproof property at coalition
/// size 2: (0,1,0) lies in the descendant code of the other two columns.
pub fn fpc2_violator() -> Code {
    Code::new(3, 2, vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 0]]).expect("fixture is valid")
}
