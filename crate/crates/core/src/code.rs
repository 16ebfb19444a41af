//! Codes as n×M matrices over {0,…,q-1}, descendant keys, and the two
//! serialization formats.
//!
//! A code is a *set* of codewords: columns are pairwise distinct. Column
//! order is preserved by serialization; set-semantic comparisons sort
//! columns first.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::CodeError;

/// An (n, M, q) code stored column-major: column `j` occupies
/// `data[j*n .. (j+1)*n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code {
    n: usize,
    q: u32,
    data: Vec<u32>,
}

/// The tuple of coordinate-value sets (C₀(1), …, C₀(n)) identifying the
/// descendant code of a subset of columns. Two subsets have equal
/// descendant codes iff their keys are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescendantKey {
    sets: Vec<Vec<u32>>,
}

impl DescendantKey {
    /// The sorted, duplicate-free set of i-th coordinates (0-based axis).
    pub fn coord_set(&self, i: usize) -> &[u32] {
        &self.sets[i]
    }

    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }
}

/// Serialization formats for codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeFormat {
    /// `{"n":…, "q":…, "m":…, "columns":[[…],…]}`
    Json,
    /// First line `n q M`, then n rows of M space-separated entries.
    Text,
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    n: usize,
    q: u32,
    m: usize,
    columns: Vec<Vec<u32>>,
}

impl Code {
    /// Builds a code from explicit columns, validating every invariant.
    pub fn new(n: usize, q: u32, columns: Vec<Vec<u32>>) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::EmptyLength);
        }
        if q == 0 {
            return Err(CodeError::EmptyAlphabet);
        }
        if columns.is_empty() {
            return Err(CodeError::NoCodewords);
        }
        let mut data = Vec::with_capacity(n * columns.len());
        for (col, word) in columns.iter().enumerate() {
            if word.len() != n {
                return Err(CodeError::LengthMismatch {
                    index: col,
                    got: word.len(),
                    expected: n,
                });
            }
            for (row, &v) in word.iter().enumerate() {
                if v >= q {
                    return Err(CodeError::EntryOutOfRange {
                        row,
                        col,
                        value: v,
                        q,
                    });
                }
                data.push(v);
            }
        }
        let code = Self { n, q, data };
        code.check_distinct()?;
        Ok(code)
    }

    fn check_distinct(&self) -> Result<(), CodeError> {
        let mut seen: HashMap<&[u32], usize> = HashMap::with_capacity(self.len());
        for j in 0..self.len() {
            if let Some(&first) = seen.get(self.column(j)) {
                return Err(CodeError::DuplicateColumns { first, second: j });
            }
            seen.insert(self.column(j), j);
        }
        Ok(())
    }

    /// Code length n (number of rows).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Alphabet size q.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of codewords M.
    pub fn len(&self) -> usize {
        self.data.len() / self.n
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn column(&self, j: usize) -> &[u32] {
        &self.data[j * self.n..(j + 1) * self.n]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks_exact(self.n)
    }

    /// Entry at (row, col), rows and columns 0-based.
    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.data[col * self.n + row]
    }

    /// Equality as a set of codewords, ignoring column order.
    pub fn eq_as_set(&self, other: &Code) -> bool {
        if self.n != other.n || self.q != other.q || self.len() != other.len() {
            return false;
        }
        let mut a: Vec<&[u32]> = self.columns().collect();
        let mut b: Vec<&[u32]> = other.columns().collect();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// The descendant key of a nonempty subset of columns.
    pub fn descendant_key(&self, subset: &[usize]) -> Result<DescendantKey, CodeError> {
        if subset.is_empty() {
            return Err(CodeError::EmptySubset);
        }
        let mut sets = vec![Vec::with_capacity(subset.len()); self.n];
        for &j in subset {
            if j >= self.len() {
                return Err(CodeError::IndexOutOfRange {
                    index: j,
                    len: self.len(),
                });
            }
            for (i, &v) in self.column(j).iter().enumerate() {
                sets[i].push(v);
            }
        }
        for s in sets.iter_mut() {
            s.sort_unstable();
            s.dedup();
        }
        Ok(DescendantKey { sets })
    }

    pub fn to_bytes(&self, format: CodeFormat) -> Vec<u8> {
        match format {
            CodeFormat::Json => serde_json::to_vec(&CodeJson {
                n: self.n,
                q: self.q,
                m: self.len(),
                columns: self.columns().map(|c| c.to_vec()).collect(),
            })
            .expect("code serialization cannot fail"),
            CodeFormat::Text => {
                let mut out = String::new();
                let _ = writeln!(out, "{} {} {}", self.n, self.q, self.len());
                for row in 0..self.n {
                    let line: Vec<String> = (0..self.len())
                        .map(|col| self.entry(row, col).to_string())
                        .collect();
                    let _ = writeln!(out, "{}", line.join(" "));
                }
                out.into_bytes()
            }
        }
    }

    pub fn from_bytes(bytes: &[u8], format: CodeFormat) -> Result<Self, CodeError> {
        match format {
            CodeFormat::Json => {
                let wire: CodeJson =
                    serde_json::from_slice(bytes).map_err(|e| CodeError::Malformed {
                        format: "json",
                        detail: e.to_string(),
                    })?;
                if wire.m != wire.columns.len() {
                    return Err(CodeError::SizeMismatch {
                        declared: wire.m,
                        actual: wire.columns.len(),
                    });
                }
                Code::new(wire.n, wire.q, wire.columns)
            }
            CodeFormat::Text => {
                let text = std::str::from_utf8(bytes).map_err(|e| CodeError::Malformed {
                    format: "text",
                    detail: e.to_string(),
                })?;
                let mut lines = text.lines().filter(|l| !l.trim().is_empty());
                let header = lines.next().ok_or(CodeError::Malformed {
                    format: "text",
                    detail: "missing header line".into(),
                })?;
                let head: Vec<usize> = header
                    .split_whitespace()
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| CodeError::Malformed {
                        format: "text",
                        detail: format!("bad header: {e}"),
                    })?;
                if head.len() != 3 {
                    return Err(CodeError::Malformed {
                        format: "text",
                        detail: "header must be `n q M`".into(),
                    });
                }
                let (n, q, m) = (head[0], head[1] as u32, head[2]);
                let mut columns = vec![Vec::with_capacity(n); m];
                for row in 0..n {
                    let line = lines.next().ok_or(CodeError::Malformed {
                        format: "text",
                        detail: format!("missing row {row}"),
                    })?;
                    let entries: Vec<u32> = line
                        .split_whitespace()
                        .map(|t| t.parse::<u32>())
                        .collect::<Result<_, _>>()
                        .map_err(|e| CodeError::Malformed {
                            format: "text",
                            detail: format!("bad entry in row {row}: {e}"),
                        })?;
                    if entries.len() != m {
                        return Err(CodeError::Malformed {
                            format: "text",
                            detail: format!(
                                "row {row} has {} entries, expected {m}",
                                entries.len()
                            ),
                        });
                    }
                    for (col, &v) in entries.iter().enumerate() {
                        columns[col].push(v);
                    }
                }
                Code::new(n, q, columns)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Code {
        crate::fixtures::c4()
    }

    #[test]
    fn descendant_key_full_product() {
        let c = Code::new(3, 2, vec![vec![0, 0, 0], vec![1, 1, 1]]).unwrap();
        let k = c.descendant_key(&[0, 1]).unwrap();
        assert_eq!(k.sets(), &[vec![0, 1], vec![0, 1], vec![0, 1]]);
    }

    #[test]
    fn descendant_key_singleton() {
        let c = c4();
        let k = c.descendant_key(&[5]).unwrap();
        assert_eq!(k.sets(), &[vec![1], vec![3], vec![2]]);
    }

    #[test]
    fn descendant_key_c4_triple() {
        // Columns (0,0,0), (0,1,1), (1,0,1) of C4 are indices 0, 1, 3.
        let c = c4();
        assert_eq!(c.column(3), &[1, 0, 1]);
        let k = c.descendant_key(&[0, 1, 3]).unwrap();
        assert_eq!(k.sets(), &[vec![0, 1], vec![0, 1], vec![0, 1]]);
    }

    #[test]
    fn descendant_key_errors() {
        let c = c4();
        assert_eq!(c.descendant_key(&[]), Err(CodeError::EmptySubset));
        assert!(matches!(
            c.descendant_key(&[99]),
            Err(CodeError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn descendant_key_monotone() {
        let c = c4();
        let small = c.descendant_key(&[0, 2]).unwrap();
        let big = c.descendant_key(&[0, 2, 7]).unwrap();
        for i in 0..3 {
            for v in small.coord_set(i) {
                assert!(big.coord_set(i).contains(v));
            }
        }
    }

    #[test]
    fn rejects_duplicates_and_bad_entries() {
        let err = Code::new(2, 3, vec![vec![0, 1], vec![2, 2], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            CodeError::DuplicateColumns {
                first: 0,
                second: 2
            }
        );
        let err = Code::new(2, 3, vec![vec![0, 3]]).unwrap_err();
        assert!(matches!(err, CodeError::EntryOutOfRange { value: 3, .. }));
    }

    #[test]
    fn json_round_trip_and_shape() {
        let c = c4();
        let bytes = c.to_bytes(CodeFormat::Json);
        let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["q"], 4);
        assert_eq!(v["m"], 12);
        let back = Code::from_bytes(&bytes, CodeFormat::Json).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn text_round_trip() {
        let c = c4();
        let bytes = c.to_bytes(CodeFormat::Text);
        let back = Code::from_bytes(&bytes, CodeFormat::Text).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn load_rejects_duplicate_columns() {
        let json = br#"{"n":2,"q":2,"m":2,"columns":[[0,1],[0,1]]}"#;
        let err = Code::from_bytes(json, CodeFormat::Json).unwrap_err();
        assert_eq!(
            err,
            CodeError::DuplicateColumns {
                first: 0,
                second: 1
            }
        );
    }

    #[test]
    fn load_rejects_size_mismatch() {
        let json = br#"{"n":2,"q":2,"m":3,"columns":[[0,1],[1,0]]}"#;
        let err = Code::from_bytes(json, CodeFormat::Json).unwrap_err();
        assert_eq!(
            err,
            CodeError::SizeMismatch {
                declared: 3,
                actual: 2
            }
        );
    }
}
