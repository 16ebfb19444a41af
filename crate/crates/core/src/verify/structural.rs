//! Structural verification: frameproof checks, projection overlap
//! characterizations, forbidden-configuration detectors, and the composite
//! separability check for length-3 codes.
//!
//! A length-3 code is 3̄-separable exactly when it is 2-frameproof and
//! contains neither a Δ pattern (four columns, one shared-value row) nor a
//! ∇ pattern (three mutually everywhere-distinct columns plus their three
//! cyclic mixtures). The composite check runs those three tests in order
//! and forwards the first witness found.

use rustc_hash::FxHashMap;
use std::collections::BTreeMap;
use std::time::Instant;

use super::subset::{comb, next_combination};
use super::{Method, VerifyOptions, VerifyReport, Witness};
use crate::code::Code;
use crate::error::{CodeError, VerifyError};

/// Checks the frameproof property: no coalition of at most t columns has
/// an outside codeword inside its descendant code.
pub fn check_fpc(code: &Code, t: usize, opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    let start = Instant::now();
    let m = code.len();
    if t == 0 {
        return Err(VerifyError::InvalidT { t, m });
    }
    // A violating coalition of size s < t extends to one of size
    // min(t, M-1) avoiding the outsider, so only that size needs scanning.
    let s_star = t.min(m.saturating_sub(1));
    let (holds, witness, examined) = if s_star == 0 {
        (true, None, 0)
    } else if code.n() == 3 && s_star == 2 {
        fpc2_pair_scan(code)
    } else {
        let required = comb(m, s_star).saturating_mul((m - s_star) as u128);
        if required > opts.budget as u128 {
            return Err(VerifyError::BudgetExceeded {
                required,
                budget: opts.budget,
            });
        }
        fpc_subset_scan(code, s_star)
    };
    Ok(VerifyReport {
        property: format!("fpc(t={t})"),
        holds,
        method: Method::Oracle,
        witness,
        examined,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Direct-definition scan specialized to length 3, coalition size 2: an
/// outsider captured by a pair must take at least two coordinates from one
/// partner, so scanning (outsider, partner) pairs with an indexed probe
/// for the third column covers every violation in O(M²).
fn fpc2_pair_scan(code: &Code) -> (bool, Option<Witness>, u64) {
    let m = code.len();
    let mut by_value: [FxHashMap<u32, Vec<usize>>; 3] = [
        FxHashMap::default(),
        FxHashMap::default(),
        FxHashMap::default(),
    ];
    for j in 0..m {
        for (row, index) in by_value.iter_mut().enumerate() {
            index.entry(code.entry(row, j)).or_default().push(j);
        }
    }
    for outsider in 0..m {
        let ow = code.column(outsider);
        for partner in 0..m {
            if partner == outsider {
                continue;
            }
            let pw = code.column(partner);
            let mut disagree = usize::MAX;
            let mut agree = 0;
            for row in 0..3 {
                if ow[row] == pw[row] {
                    agree += 1;
                } else {
                    disagree = row;
                }
            }
            if agree != 2 {
                continue;
            }
            if let Some(cands) = by_value[disagree].get(&ow[disagree]) {
                if let Some(&third) = cands.iter().find(|&&b| b != outsider) {
                    let mut coalition = vec![partner, third];
                    coalition.sort_unstable();
                    return (
                        false,
                        Some(Witness::FpcTriple {
                            coalition,
                            outsider,
                        }),
                        (m * m) as u64,
                    );
                }
            }
        }
    }
    (true, None, (m * m) as u64)
}

fn fpc_subset_scan(code: &Code, s: usize) -> (bool, Option<Witness>, u64) {
    let m = code.len();
    let n = code.n();
    let mut indices: Vec<usize> = (0..s).collect();
    let mut examined = 0u64;
    loop {
        for outsider in 0..m {
            if indices.contains(&outsider) {
                continue;
            }
            examined += 1;
            let captured = (0..n).all(|row| {
                let v = code.entry(row, outsider);
                indices.iter().any(|&j| code.entry(row, j) == v)
            });
            if captured {
                return (
                    false,
                    Some(Witness::FpcTriple {
                        coalition: indices.clone(),
                        outsider,
                    }),
                    examined,
                );
            }
        }
        if !next_combination(&mut indices, m) {
            return (true, None, examined);
        }
    }
}

/// Shortened sets per axis value, tuples sorted for ordered merging.
fn axis_sets(code: &Code, axis0: usize) -> BTreeMap<u32, Vec<Vec<u32>>> {
    let mut sets: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    for col in code.columns() {
        let tuple: Vec<u32> = col
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != axis0)
            .map(|(_, &v)| v)
            .collect();
        sets.entry(col[axis0]).or_default().push(tuple);
    }
    for tuples in sets.values_mut() {
        tuples.sort_unstable();
    }
    sets
}

/// Walks two sorted tuple lists, returning the overlap count and up to
/// `cap` of the shared tuples.
fn intersection_sample(a: &[Vec<u32>], b: &[Vec<u32>], cap: usize) -> (usize, Vec<Vec<u32>>) {
    let (mut i, mut j) = (0, 0);
    let mut count = 0;
    let mut sample = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                if sample.len() < cap {
                    sample.push(a[i].clone());
                }
                i += 1;
                j += 1;
            }
        }
    }
    (count, sample)
}

/// The projection characterization of the 2-frameproof property for
/// length-3 codes: same-axis shortened sets may share at most one tuple,
/// and sharing one forces both sets to be singletons.
pub fn check_fpc2_projection(
    code: &Code,
    _opts: &VerifyOptions,
) -> Result<VerifyReport, VerifyError> {
    let start = Instant::now();
    require_length(code, 3)?;
    let mut examined = 0u64;
    let mut witness = None;
    'outer: for axis0 in 0..3 {
        let sets = axis_sets(code, axis0);
        let values: Vec<u32> = sets.keys().copied().collect();
        for (ai, &va) in values.iter().enumerate() {
            for &vb in &values[ai + 1..] {
                examined += 1;
                let sa = &sets[&va];
                let sb = &sets[&vb];
                let (count, sample) = intersection_sample(sa, sb, 2);
                if count >= 2 || (count == 1 && (sa.len() > 1 || sb.len() > 1)) {
                    witness = Some(Witness::ProjOverlap {
                        axis: axis0 + 1,
                        value_a: va,
                        value_b: vb,
                        shared: sample,
                        size_a: sa.len(),
                        size_b: sb.len(),
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(VerifyReport {
        property: "fpc2-projection".to_string(),
        holds: witness.is_none(),
        method: Method::Structural,
        witness,
        examined,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Necessary condition for t̄-separability on any length: same-axis
/// shortened sets intersect in at most one tuple.
pub fn check_projection_intersections(
    code: &Code,
    t: usize,
    _opts: &VerifyOptions,
) -> Result<VerifyReport, VerifyError> {
    let start = Instant::now();
    if code.n() < 2 {
        return Err(CodeError::WrongLength {
            expected: 2,
            got: code.n(),
        }
        .into());
    }
    let mut examined = 0u64;
    let mut witness = None;
    'outer: for axis0 in 0..code.n() {
        let sets = axis_sets(code, axis0);
        let values: Vec<u32> = sets.keys().copied().collect();
        for (ai, &va) in values.iter().enumerate() {
            for &vb in &values[ai + 1..] {
                examined += 1;
                let sa = &sets[&va];
                let sb = &sets[&vb];
                let (count, sample) = intersection_sample(sa, sb, 2);
                if count >= 2 {
                    witness = Some(Witness::ProjOverlap {
                        axis: axis0 + 1,
                        value_a: va,
                        value_b: vb,
                        shared: sample,
                        size_a: sa.len(),
                        size_b: sb.len(),
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(VerifyReport {
        property: format!("proj-intersections(t={t})"),
        holds: witness.is_none(),
        method: Method::Structural,
        witness,
        examined,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Column lookups for the pattern detectors: every pair of coordinate
/// positions maps (value, value) to the columns matching it.
struct PairIndex {
    map12: FxHashMap<(u32, u32), Vec<usize>>,
    map13: FxHashMap<(u32, u32), Vec<usize>>,
    map23: FxHashMap<(u32, u32), Vec<usize>>,
    full: FxHashMap<(u32, u32, u32), usize>,
}

impl PairIndex {
    fn build(code: &Code) -> Self {
        let mut idx = Self {
            map12: FxHashMap::default(),
            map13: FxHashMap::default(),
            map23: FxHashMap::default(),
            full: FxHashMap::default(),
        };
        for j in 0..code.len() {
            let c = code.column(j);
            idx.map12.entry((c[0], c[1])).or_default().push(j);
            idx.map13.entry((c[0], c[2])).or_default().push(j);
            idx.map23.entry((c[1], c[2])).or_default().push(j);
            idx.full.insert((c[0], c[1], c[2]), j);
        }
        idx
    }

    /// The probe map for the two axes other than `alpha0`.
    fn probe(&self, alpha0: usize) -> &FxHashMap<(u32, u32), Vec<usize>> {
        match alpha0 {
            0 => &self.map23,
            1 => &self.map13,
            _ => &self.map12,
        }
    }
}

/// Searches for a Δ pattern: columns (a,e,c), (a,f,d), (b,g,c), (b,e,d)
/// up to moving the shared-value row. Scans column pairs sharing one
/// coordinate and probes an index for the two partners.
pub fn detect_delta(code: &Code) -> Result<Option<Witness>, VerifyError> {
    require_length(code, 3)?;
    let idx = PairIndex::build(code);
    Ok(detect_delta_with(code, &idx))
}

fn detect_delta_with(code: &Code, idx: &PairIndex) -> Option<Witness> {
    let m = code.len();
    // Shared-value row 2 first, then 3, then 1, matching the pattern
    // numbering.
    for alpha0 in [1usize, 2, 0] {
        let (beta, gamma) = match alpha0 {
            1 => (0, 2),
            2 => (0, 1),
            _ => (1, 2),
        };
        let probe = idx.probe(alpha0);
        for i in 0..m {
            let u = code.column(i);
            for j in i + 1..m {
                let v = code.column(j);
                if u[alpha0] != v[alpha0] || u[beta] == v[beta] || u[gamma] == v[gamma] {
                    continue;
                }
                let e = u[alpha0];
                let w = probe
                    .get(&(u[beta], v[gamma]))
                    .and_then(|c| c.iter().find(|&&k| code.entry(alpha0, k) != e))
                    .copied();
                let x = probe
                    .get(&(v[beta], u[gamma]))
                    .and_then(|c| c.iter().find(|&&k| code.entry(alpha0, k) != e))
                    .copied();
                if let (Some(w), Some(x)) = (w, x) {
                    let columns = [i, w, x, j];
                    let (a, b, c, d) = (u[beta], v[beta], u[gamma], v[gamma]);
                    let (f, g) = (code.entry(alpha0, w), code.entry(alpha0, x));
                    return Some(match alpha0 {
                        1 => Witness::Delta1 {
                            columns,
                            a,
                            b,
                            c,
                            d,
                            e,
                            f,
                            g,
                        },
                        2 => Witness::Delta2 {
                            columns,
                            a,
                            b,
                            c,
                            d,
                            e,
                            f,
                            g,
                        },
                        _ => Witness::Delta3 {
                            columns,
                            a,
                            b,
                            c,
                            d,
                            e,
                            f,
                            g,
                        },
                    });
                }
            }
        }
    }
    None
}

/// Searches for a ∇ pattern by scanning ordered pairs of columns distinct
/// in every coordinate and resolving the remaining four columns through
/// indexed lookups.
pub fn detect_nabla(code: &Code) -> Result<Option<Witness>, VerifyError> {
    require_length(code, 3)?;
    let idx = PairIndex::build(code);
    Ok(detect_nabla_with(code, &idx))
}

fn detect_nabla_with(code: &Code, idx: &PairIndex) -> Option<Witness> {
    let m = code.len();
    let empty: Vec<usize> = Vec::new();
    for ia in 0..m {
        let a = code.column(ia);
        for ib in 0..m {
            if ib == ia {
                continue;
            }
            let b = code.column(ib);
            if a[0] == b[0] || a[1] == b[1] || a[2] == b[2] {
                continue;
            }
            // D = (a1, b2, c3) binds the third base value on row 3.
            for &id in idx.map12.get(&(a[0], b[1])).unwrap_or(&empty) {
                let c3 = code.entry(2, id);
                if c3 == a[2] || c3 == b[2] {
                    continue;
                }
                // E = (b1, c2, a3) binds row 2.
                for &ie in idx.map13.get(&(b[0], a[2])).unwrap_or(&empty) {
                    let c2 = code.entry(1, ie);
                    if c2 == a[1] || c2 == b[1] {
                        continue;
                    }
                    // F = (c1, a2, b3) binds row 1.
                    for &ifx in idx.map23.get(&(a[1], b[2])).unwrap_or(&empty) {
                        let c1 = code.entry(0, ifx);
                        if c1 == a[0] || c1 == b[0] {
                            continue;
                        }
                        if let Some(&ic) = idx.full.get(&(c1, c2, c3)) {
                            return Some(Witness::Nabla {
                                columns: [ia, ib, ic, id, ie, ifx],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// The composite structural separability check for length-3 codes:
/// 2-frameproof, no Δ, no ∇. Equivalent to the exhaustive oracle at t = 3;
/// the two are cross-validated in the acceptance suite.
pub fn check_sc3bar_structural(
    code: &Code,
    opts: &VerifyOptions,
) -> Result<VerifyReport, VerifyError> {
    let start = Instant::now();
    require_length(code, 3)?;
    let _ = opts;
    let (fpc_holds, fpc_witness, mut examined) = fpc2_pair_scan(code);
    let witness = if !fpc_holds {
        fpc_witness
    } else {
        let idx = PairIndex::build(code);
        examined += (code.len() * code.len()) as u64;
        match detect_delta_with(code, &idx) {
            Some(w) => Some(w),
            None => {
                examined += (code.len() * code.len()) as u64;
                detect_nabla_with(code, &idx)
            }
        }
    };
    Ok(VerifyReport {
        property: "sc3bar-structural".to_string(),
        holds: witness.is_none(),
        method: Method::Structural,
        witness,
        examined,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Returns a row on which the given columns carry pairwise distinct
/// values, if any.
pub fn separating_row(code: &Code, subset: &[usize]) -> Option<usize> {
    (0..code.n()).find(|&row| {
        let mut vals: Vec<u32> = subset.iter().map(|&j| code.entry(row, j)).collect();
        vals.sort_unstable();
        vals.windows(2).all(|w| w[0] != w[1])
    })
}

/// Checks the perfect-hash-family property: every t-subset of columns is
/// separated by at least one row.
pub fn check_phf(code: &Code, t: usize, opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    let start = Instant::now();
    let m = code.len();
    if t == 0 || t > m {
        return Err(VerifyError::InvalidT { t, m });
    }
    let total = comb(m, t);
    if total > opts.budget as u128 {
        return Err(VerifyError::BudgetExceeded {
            required: total,
            budget: opts.budget,
        });
    }
    let mut indices: Vec<usize> = (0..t).collect();
    let mut examined = 0u64;
    let mut witness = None;
    loop {
        examined += 1;
        if separating_row(code, &indices).is_none() {
            witness = Some(Witness::PhfSet {
                columns: indices.clone(),
            });
            break;
        }
        if !next_combination(&mut indices, m) {
            break;
        }
    }
    Ok(VerifyReport {
        property: format!("phf(t={t})"),
        holds: witness.is_none(),
        method: Method::Oracle,
        witness,
        examined,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn require_length(code: &Code, expected: usize) -> Result<(), VerifyError> {
    if code.n() != expected {
        return Err(CodeError::WrongLength {
            expected,
            got: code.n(),
        }
        .into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Code;
    use crate::fixtures;

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn block_code_is_fpc_for_t2_and_t3() {
        // Columns (1,0), (2,0), (0,1), (0,2) over a 3-letter alphabet.
        let code = crate::construct::trivial_fpc(2, 3).unwrap();
        for t in [2, 3] {
            let r = check_fpc(&code, t, &opts()).unwrap();
            assert!(r.holds, "t={t}");
        }
    }

    #[test]
    fn captured_outsider_detected() {
        let code = fixtures::fpc2_violator();
        let r = check_fpc(&code, 2, &opts()).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(w.revalidate(&code));
        assert_eq!(
            w,
            Witness::FpcTriple {
                coalition: vec![0, 1],
                outsider: 2
            }
        );
    }

    #[test]
    fn cube_code_r2_is_2fpc() {
        let code = crate::construct::phf_cube(2).unwrap();
        assert_eq!(code.len(), 8);
        let r = check_fpc(&code, 2, &opts()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn projection_check_agrees_on_examples() {
        // C4 holds.
        let r = check_fpc2_projection(&fixtures::c4(), &opts()).unwrap();
        assert!(r.holds);
        // Two columns sharing a first coordinate: only one nonempty set on
        // that axis, so no pair violates.
        let c = Code::new(3, 2, vec![vec![0, 0, 0], vec![0, 0, 1]]).unwrap();
        assert!(check_fpc2_projection(&c, &opts()).unwrap().holds);
        // Shared singleton with a fat side fails.
        let c = Code::new(3, 2, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 1]]).unwrap();
        let r = check_fpc2_projection(&c, &opts()).unwrap();
        assert!(!r.holds);
        assert!(r.witness.unwrap().revalidate(&c));
        // And the direct definition agrees.
        assert!(!check_fpc(&c, 2, &opts()).unwrap().holds);
    }

    #[test]
    fn pairwise_intersections_check() {
        let r = check_projection_intersections(&fixtures::c4(), 3, &opts()).unwrap();
        assert!(r.holds);
        let c = Code::new(3, 2, vec![vec![0, 0, 0], vec![1, 0, 0]]).unwrap();
        assert!(
            check_projection_intersections(&c, 3, &opts())
                .unwrap()
                .holds
        );
        let c = Code::new(
            3,
            2,
            vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 0], vec![1, 1, 1]],
        )
        .unwrap();
        let r = check_projection_intersections(&c, 3, &opts()).unwrap();
        assert!(!r.holds);
        assert!(r.witness.unwrap().revalidate(&c));
    }

    #[test]
    fn delta1_detected_with_expected_letters() {
        let code = fixtures::delta1();
        let w = detect_delta(&code).unwrap().unwrap();
        assert!(w.revalidate(&code));
        assert_eq!(
            w,
            Witness::Delta1 {
                columns: [0, 1, 2, 3],
                a: 0,
                b: 1,
                c: 0,
                d: 1,
                e: 0,
                f: 1,
                g: 2
            }
        );
    }

    #[test]
    fn swapped_rows_give_delta2() {
        let code = fixtures::delta2();
        let w = detect_delta(&code).unwrap().unwrap();
        assert!(w.revalidate(&code));
        assert!(matches!(w, Witness::Delta2 { .. }));
    }

    #[test]
    fn c4_has_no_delta() {
        assert_eq!(detect_delta(&fixtures::c4()).unwrap(), None);
    }

    #[test]
    fn nabla_fixture_detected() {
        let code = fixtures::nabla();
        let w = detect_nabla(&code).unwrap().unwrap();
        assert!(w.revalidate(&code));
        assert_eq!(
            w,
            Witness::Nabla {
                columns: [0, 1, 2, 3, 4, 5]
            }
        );
    }

    #[test]
    fn cube_code_r3_has_no_nabla() {
        let code = crate::construct::phf_cube(3).unwrap();
        assert_eq!(detect_nabla(&code).unwrap(), None);
    }

    /// Brute-force pattern search: every 6-subset, every ordered base
    /// triple.
    fn nabla_exists_brute(code: &Code) -> bool {
        let m = code.len();
        if m < 6 {
            return false;
        }
        let cols: Vec<&[u32]> = code.columns().collect();
        let mut subset: Vec<usize> = (0..6).collect();
        loop {
            for i in 0..6 {
                for j in 0..6 {
                    for k in 0..6 {
                        if i == j || i == k || j == k {
                            continue;
                        }
                        let (a, b, c) = (cols[subset[i]], cols[subset[j]], cols[subset[k]]);
                        if (0..3).any(|r| a[r] == b[r] || a[r] == c[r] || b[r] == c[r]) {
                            continue;
                        }
                        let mut mixed = [
                            vec![a[0], b[1], c[2]],
                            vec![b[0], c[1], a[2]],
                            vec![c[0], a[1], b[2]],
                        ];
                        mixed.sort();
                        let mut rest: Vec<Vec<u32>> = (0..6)
                            .filter(|&p| p != i && p != j && p != k)
                            .map(|p| cols[subset[p]].to_vec())
                            .collect();
                        rest.sort();
                        if mixed.to_vec() == rest {
                            return true;
                        }
                    }
                }
            }
            if !next_combination(&mut subset, m) {
                return false;
            }
        }
    }

    #[test]
    fn nabla_detector_matches_exhaustive_scan() {
        // Exhaustive 6-subset scan over the 27-codeword cube code agrees
        // with the indexed detector, as it does on the named fixtures.
        let cube = crate::construct::phf_cube(3).unwrap();
        assert!(!nabla_exists_brute(&cube));
        assert_eq!(detect_nabla(&cube).unwrap(), None);

        let nabla = fixtures::nabla();
        assert!(nabla_exists_brute(&nabla));
        assert!(detect_nabla(&nabla).unwrap().is_some());

        for code in [fixtures::c4(), fixtures::delta1(), fixtures::delta2()] {
            assert_eq!(
                nabla_exists_brute(&code),
                detect_nabla(&code).unwrap().is_some()
            );
        }
    }

    #[test]
    fn structural_check_matches_fixtures() {
        assert!(
            check_sc3bar_structural(&fixtures::c4(), &opts())
                .unwrap()
                .holds
        );
        let r = check_sc3bar_structural(&fixtures::delta1(), &opts()).unwrap();
        assert!(!r.holds);
        assert!(matches!(r.witness, Some(Witness::Delta1 { .. })));
        let r = check_sc3bar_structural(&fixtures::nabla(), &opts()).unwrap();
        assert!(!r.holds);
        assert!(matches!(r.witness, Some(Witness::Nabla { .. })));
    }

    #[test]
    fn phf_check_on_fixtures() {
        // The cube code at r=2 is a perfect hash family for triples.
        let code = crate::construct::phf_cube(2).unwrap();
        let r = check_phf(&code, 3, &opts()).unwrap();
        assert!(r.holds);
        assert_eq!(r.examined, 56);
        // The pattern fixture is a perfect hash family yet not separable.
        let r = check_phf(&fixtures::nabla(), 3, &opts()).unwrap();
        assert!(r.holds);
        // A three-column code with no separating row fails.
        let c = Code::new(3, 2, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]).unwrap();
        let r = check_phf(&c, 3, &opts()).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(w.revalidate(&c));
        assert_eq!(
            w,
            Witness::PhfSet {
                columns: vec![0, 1, 2]
            }
        );
    }

    #[test]
    fn wrong_length_rejected() {
        let c = Code::new(2, 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(check_sc3bar_structural(&c, &opts()).is_err());
        assert!(detect_delta(&c).is_err());
        assert!(detect_nabla(&c).is_err());
        assert!(check_fpc2_projection(&c, &opts()).is_err());
    }
}
