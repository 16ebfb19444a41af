//! Lexicographic k-subset enumeration, ranking and unranking.
//!
//! Subsets of column indices are enumerated by size, then lexicographically
//! within each size, and identified by a global ordinal. All collision
//! reporting is phrased in terms of these ordinals, which is what makes
//! parallel enumeration produce bit-identical reports.

/// C(n, k), saturating at `u128::MAX` on overflow (any such value exceeds
/// every practical budget anyway).
pub fn comb(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = match out.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    out
}

/// Advances `indices` to the next k-subset of 0..m in lexicographic order.
/// Returns false when `indices` was the last subset.
pub fn next_combination(indices: &mut [usize], m: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < m - (k - i) {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The `rank`-th k-subset of 0..m in lexicographic order.
pub fn unrank_lex(m: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut x = 0usize;
    for pos in 0..k {
        loop {
            let block = comb(m - 1 - x, k - 1 - pos);
            if rank < block {
                out.push(x);
                x += 1;
                break;
            }
            rank -= block;
            x += 1;
        }
    }
    out
}

/// Size classes enumerated by an oracle run, with their ordinal offsets.
#[derive(Debug, Clone)]
pub struct SizeLayout {
    pub sizes: Vec<usize>,
    /// offsets[i] = ordinal of the first size `sizes[i]` subset.
    pub offsets: Vec<u128>,
    pub total: u128,
}

impl SizeLayout {
    pub fn new(m: usize, sizes: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc: u128 = 0;
        for &s in &sizes {
            offsets.push(acc);
            acc = acc.saturating_add(comb(m, s));
        }
        Self {
            sizes,
            offsets,
            total: acc,
        }
    }

    /// Splits a global ordinal into (size index, rank within size).
    pub fn locate(&self, ordinal: u128) -> (usize, u128) {
        let mut idx = self.offsets.len() - 1;
        while self.offsets[idx] > ordinal {
            idx -= 1;
        }
        (idx, ordinal - self.offsets[idx])
    }

    /// The subset of 0..m at a global ordinal.
    pub fn subset_at(&self, m: usize, ordinal: u128) -> Vec<usize> {
        let (idx, rank) = self.locate(ordinal);
        unrank_lex(m, self.sizes[idx], rank)
    }
}
