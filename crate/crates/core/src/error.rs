//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by finite-field construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds 2^32")]
    OrderTooLarge { p: u64, m: u32 },
    #[error("no irreducible polynomial of degree {m} over GF({p}) found")]
    NoIrreducible { p: u64, m: u32 },
    #[error("primitive element rank {rank} out of range: GF({q}) has {count} primitive elements")]
    PrimitiveRankOutOfRange { rank: u32, count: u32, q: u32 },
    #[error("{value} is not an element of GF({q})")]
    NotAnElement { value: u32, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no discrete logarithm")]
    ZeroDlog,
    #[error("field order {q} is not congruent to 1 mod 6")]
    NotSixTPlusOne { q: u32 },
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u64 },
}

/// Errors raised by code construction, validation and serialization.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("code length must be at least 1")]
    EmptyLength,
    #[error("code must contain at least one codeword")]
    NoCodewords,
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("codeword {index} has length {got}, expected {expected}")]
    LengthMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("entry {value} at (row {row}, column {col}) is outside the alphabet 0..{q}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: u32,
        q: u32,
    },
    #[error("columns {first} and {second} are identical")]
    DuplicateColumns { first: usize, second: usize },
    #[error("declared size {declared} does not match {actual} columns")]
    SizeMismatch { declared: usize, actual: usize },
    #[error("subset of column indices must be nonempty")]
    EmptySubset,
    #[error("column index {index} out of range for {len} columns")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("axis {axis} invalid for length-{n} code (axes are 1..={n})")]
    InvalidAxis { axis: usize, n: usize },
    #[error("operation requires code length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("malformed {format} input: {detail}")]
    Malformed {
        format: &'static str,
        detail: String,
    },
}

/// Errors raised by partial-Latin-square handling.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlsError {
    #[error("order {order} too large to materialize a {order}x{order} array (cap is {cap})")]
    OrderTooLarge { order: u32, cap: u32 },
    #[error("cell ({row}, {col}) holds multiple symbols {values:?}; the code has no partial-Latin-square view")]
    CellNotSingleton {
        row: u32,
        col: u32,
        values: Vec<u32>,
    },
    #[error("not a partial Latin square: symbol {symbol} repeats in row {row} at columns {col_a} and {col_b}")]
    RowConflict {
        row: u32,
        symbol: u32,
        col_a: u32,
        col_b: u32,
    },
    #[error("not a partial Latin square: symbol {symbol} repeats in column {col} at rows {row_a} and {row_b}")]
    ColConflict {
        col: u32,
        symbol: u32,
        row_a: u32,
        row_b: u32,
    },
    #[error("symbol {symbol} at ({row}, {col}) is outside 0..{order}")]
    SymbolOutOfRange {
        row: u32,
        col: u32,
        symbol: u32,
        order: u32,
    },
    #[error("square has no filled cell")]
    Empty,
    #[error("malformed partial-Latin-square text: {0}")]
    Malformed(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Errors raised by verification procedures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("subset size bound t={t} must satisfy 1 <= t <= {m}")]
    InvalidT { t: usize, m: usize },
    #[error("enumeration budget exceeded: {required} subsets required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Errors raised by bound computations and optimality certification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("bound requires t >= 3 and n >= 2, got t={t}, n={n}")]
    OutOfDomain { n: usize, t: usize },
    #[error("bound requires 2 <= n < t, got n={n}, t={t}")]
    NotShortLength { n: usize, t: usize },
    #[error("bound requires q >= {min}, got q={q}")]
    AlphabetTooSmall { q: u32, min: u32 },
    #[error("bound value overflows u64")]
    Overflow,
    #[error("certification requires a passing report, but the report shows a violation")]
    ReportNotHolding,
    #[error("report property {property:?} does not certify a {expected} code")]
    PropertyMismatch { property: String, expected: String },
}

/// Errors raised by the construction families and the exponent-set search.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("construction requires n >= 2, got {0}")]
    LengthTooShort(usize),
    #[error("construction requires q >= 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("construction requires r >= 2, got {0}")]
    SideTooSmall(u32),
    #[error("parameter {name}={value} too large (cap is {cap})")]
    ParamTooLarge {
        name: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("k must be even and at least 2, got {0}")]
    KNotEven(u32),
    #[error("exponent set is empty")]
    EmptySet,
    #[error("exponent {value} outside 0..{t}")]
    ExponentOutOfRange { value: u32, t: u32 },
    #[error("exponent set was built for t={set_t}, field has t={field_t}")]
    TMismatch { set_t: u32, field_t: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}
