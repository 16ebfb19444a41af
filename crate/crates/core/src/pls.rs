//! The partial-Latin-square view of a length-3 code.
//!
//! A length-3 code whose (first, second)-indexed shortened sets are all
//! singletons or empty is equivalent to a q×q array with entry s in cell
//! (i, j) iff (i, j, s) is a codeword; the code is a partial Latin square
//! exactly when no symbol repeats in a row or column.

use crate::code::Code;
use crate::error::PlsError;

/// Orders above this would materialize arrays too large to be useful.
const MAX_ORDER: u32 = 4096;

const EMPTY: u32 = u32::MAX;

/// A q×q array, each cell empty or holding a symbol in 0..q, with every
/// symbol occurring at most once per row and per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialLatinSquare {
    order: u32,
    cells: Vec<u32>,
}

impl PartialLatinSquare {
    /// Builds a square from optional cell contents (row-major), validating
    /// symbol range and row/column uniqueness.
    pub fn new(order: u32, cells: Vec<Option<u32>>) -> Result<Self, PlsError> {
        if order > MAX_ORDER {
            return Err(PlsError::OrderTooLarge {
                order,
                cap: MAX_ORDER,
            });
        }
        assert_eq!(
            cells.len(),
            (order * order) as usize,
            "cell vector must be order^2 long"
        );
        let raw: Vec<u32> = cells.into_iter().map(|c| c.unwrap_or(EMPTY)).collect();
        let pls = Self { order, cells: raw };
        pls.validate()?;
        Ok(pls)
    }

    fn validate(&self) -> Result<(), PlsError> {
        let q = self.order;
        for r in 0..q {
            for c in 0..q {
                if let Some(s) = self.cell(r, c) {
                    if s >= q {
                        return Err(PlsError::SymbolOutOfRange {
                            row: r,
                            col: c,
                            symbol: s,
                            order: q,
                        });
                    }
                }
            }
        }
        // seen[s] = last column (row pass) / row (column pass) holding s.
        let mut seen = vec![EMPTY; q as usize];
        for r in 0..q {
            seen.fill(EMPTY);
            for c in 0..q {
                if let Some(s) = self.cell(r, c) {
                    if seen[s as usize] != EMPTY {
                        return Err(PlsError::RowConflict {
                            row: r,
                            symbol: s,
                            col_a: seen[s as usize],
                            col_b: c,
                        });
                    }
                    seen[s as usize] = c;
                }
            }
        }
        for c in 0..q {
            seen.fill(EMPTY);
            for r in 0..q {
                if let Some(s) = self.cell(r, c) {
                    if seen[s as usize] != EMPTY {
                        return Err(PlsError::ColConflict {
                            col: c,
                            symbol: s,
                            row_a: seen[s as usize],
                            row_b: r,
                        });
                    }
                    seen[s as usize] = r;
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn cell(&self, row: u32, col: u32) -> Option<u32> {
        let v = self.cells[(row * self.order + col) as usize];
        (v != EMPTY).then_some(v)
    }

    /// Filled cells as (row, col, symbol), row-major.
    pub fn filled(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        let q = self.order;
        (0..q).flat_map(move |r| (0..q).filter_map(move |c| self.cell(r, c).map(|s| (r, c, s))))
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|&&v| v != EMPTY).count()
    }

    /// Text form: q lines of q tokens, `x` marking empty cells.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in 0..self.order {
            let line: Vec<String> = (0..self.order)
                .map(|c| match self.cell(r, c) {
                    Some(s) => s.to_string(),
                    None => "x".to_string(),
                })
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, PlsError> {
        let rows: Vec<Vec<&str>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().collect())
            .collect();
        let order = rows.len() as u32;
        if order == 0 {
            return Err(PlsError::Malformed("no rows".into()));
        }
        let mut cells = Vec::with_capacity((order * order) as usize);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order as usize {
                return Err(PlsError::Malformed(format!(
                    "row {r} has {} tokens, expected {order}",
                    row.len()
                )));
            }
            for tok in row {
                if tok.eq_ignore_ascii_case("x") {
                    cells.push(None);
                } else {
                    let s: u32 = tok
                        .parse()
                        .map_err(|e| PlsError::Malformed(format!("bad token {tok:?}: {e}")))?;
                    cells.push(Some(s));
                }
            }
        }
        Self::new(order, cells)
    }
}

/// The q×q array of a length-3 code. Fails if some (first, second) pair
/// indexes more than one codeword, or if the resulting array repeats a
/// symbol in a row or column.
pub fn to_pls(code: &Code) -> Result<PartialLatinSquare, PlsError> {
    if code.n() != 3 {
        return Err(crate::error::CodeError::WrongLength {
            expected: 3,
            got: code.n(),
        }
        .into());
    }
    let q = code.q();
    if q > MAX_ORDER {
        return Err(PlsError::OrderTooLarge {
            order: q,
            cap: MAX_ORDER,
        });
    }
    let mut cells = vec![EMPTY; (q * q) as usize];
    for j in 0..code.len() {
        let col = code.column(j);
        let (i, k, s) = (col[0], col[1], col[2]);
        let idx = (i * q + k) as usize;
        if cells[idx] != EMPTY {
            let mut values = vec![cells[idx], s];
            values.sort_unstable();
            return Err(PlsError::CellNotSingleton {
                row: i,
                col: k,
                values,
            });
        }
        cells[idx] = s;
    }
    let pls = PartialLatinSquare { order: q, cells };
    pls.validate()?;
    Ok(pls)
}

/// The code associated to a partial Latin square: one codeword (i, j, s)
/// per filled cell, in row-major cell order.
pub fn from_pls(pls: &PartialLatinSquare) -> Result<Code, PlsError> {
    let columns: Vec<Vec<u32>> = pls.filled().map(|(r, c, s)| vec![r, c, s]).collect();
    if columns.is_empty() {
        return Err(PlsError::Empty);
    }
    Ok(Code::new(3, pls.order(), columns)?)
}
