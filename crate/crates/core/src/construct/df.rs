//! Translated difference-family codes over GF(q) with q = 6t+1, the
//! algebraic admissibility criterion deciding their separability, and the
//! search over primitive elements and exponent-set patterns.
//!
//! For an exponent set S ⊆ {0,…,t-1} the code consists of the q translates
//! of the base columns (ε^i, ξε^i, ξ²ε^i), i ∈ S. Its array view is always
//! a partial Latin square, so the code is 2-frameproof; it is 3̄-separable
//! exactly when two small systems of equations over the field have no
//! solution with all exponents in S:
//!
//!   (A)  ε^w + ε^x·ξ + ε^z·ξ² = 0   and   ε^x + ε^w·ξ + ε^y·ξ² = 0
//!        with x, y, z, w pairwise distinct
//!        (a solution plants a Δ pattern),
//!
//!   (B)  ε^x + ε^y·ξ² + ε^z·ξ = 0,  ε^u + ε^v·ξ + ε^w·ξ² = 0,
//!        ε^x·ξ + ε^u = ε^z + ε^w·ξ
//!        with either x=y=z and u,v,w distinct avoiding x, the symmetric
//!        case, or all six distinct
//!        (a solution plants a ∇ pattern).
//!
//! Both solvers run in O(|S|²) probes: two exponents determine the third
//! through the discrete-log table, and system (B) joins its two equation
//! families on the value of the linking equation.

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::ConstructError;
use crate::field::{prime_power_split, CubeRoot, FieldDescriptor, FiniteField};

/// The named exponent-set patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SPattern {
    /// {0, …, t-1}
    All,
    /// {i < t : i mod 3 ≠ 0}
    Mod3Nonzero,
    /// {i < t : i even}
    Even,
    /// {i < t : i mod 3 = 0}
    Mod3Zero,
}

impl SPattern {
    pub const ALL_PATTERNS: [SPattern; 4] = [
        SPattern::All,
        SPattern::Mod3Nonzero,
        SPattern::Even,
        SPattern::Mod3Zero,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SPattern::All => "all",
            SPattern::Mod3Nonzero => "mod3-nonzero",
            SPattern::Even => "even",
            SPattern::Mod3Zero => "mod3-zero",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "all" => Some(SPattern::All),
            "mod3-nonzero" => Some(SPattern::Mod3Nonzero),
            "even" => Some(SPattern::Even),
            "mod3-zero" => Some(SPattern::Mod3Zero),
            _ => None,
        }
    }

    fn members(&self, t: u32) -> Vec<u32> {
        (0..t)
            .filter(|i| match self {
                SPattern::All => true,
                SPattern::Mod3Nonzero => i % 3 != 0,
                SPattern::Even => i % 2 == 0,
                SPattern::Mod3Zero => i % 3 == 0,
            })
            .collect()
    }

    /// Divisor d of the nominal size ⌊q(q-1)/d⌋ associated with the
    /// pattern. The constructed size q·|S| can differ from the nominal
    /// value when t is odd or not divisible by 3; search records report
    /// both.
    pub fn nominal_divisor(&self) -> u64 {
        match self {
            SPattern::All => 6,
            SPattern::Mod3Nonzero => 9,
            SPattern::Even => 12,
            SPattern::Mod3Zero => 18,
        }
    }
}

/// A sorted subset of {0,…,t-1} selecting which base columns the code
/// uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentSet {
    t: u32,
    indices: Vec<u32>,
    pattern: Option<SPattern>,
}

impl ExponentSet {
    pub fn from_pattern(pattern: SPattern, t: u32) -> Result<Self, ConstructError> {
        let indices = pattern.members(t);
        if indices.is_empty() {
            return Err(ConstructError::EmptySet);
        }
        Ok(Self {
            t,
            indices,
            pattern: Some(pattern),
        })
    }

    pub fn custom(mut indices: Vec<u32>, t: u32) -> Result<Self, ConstructError> {
        if indices.is_empty() {
            return Err(ConstructError::EmptySet);
        }
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= t) {
            return Err(ConstructError::ExponentOutOfRange { value: bad, t });
        }
        Ok(Self {
            t,
            indices,
            pattern: None,
        })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn pattern(&self) -> Option<SPattern> {
        self.pattern
    }

    pub fn pattern_name(&self) -> &'static str {
        self.pattern.map_or("custom", |p| p.name())
    }
}

/// A solution to one of the two systems, i.e. a planted forbidden
/// pattern. Exponents are discrete logs base ε.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "system")]
pub enum DfViolation {
    /// Solution of system (A); plants a Δ pattern.
    #[serde(rename = "delta")]
    Delta { x: u32, y: u32, z: u32, w: u32 },
    /// Solution of system (B); plants a ∇ pattern.
    #[serde(rename = "nabla")]
    Nabla {
        x: u32,
        y: u32,
        z: u32,
        u: u32,
        v: u32,
        w: u32,
    },
}

/// Outcome of the admissibility criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DfCriterionResult {
    pub admissible: bool,
    pub violation: Option<DfViolation>,
}

/// The (3, q|S|, q) code of all translates of the base difference-family
/// columns selected by S.
pub fn df_code(field: &FiniteField, s: &ExponentSet) -> Result<Code, ConstructError> {
    let root = field.cube_root()?;
    check_t(s, &root)?;
    let q = field.q();
    let xi = root.xi;
    let xi2 = field.mul_raw(xi, xi);
    let mut columns = Vec::with_capacity(s.len() * q as usize);
    for &i in s.indices() {
        let d1 = field.exp(i as i64);
        let d2 = field.mul_raw(xi, d1);
        let d3 = field.mul_raw(xi2, d1);
        for g in 0..q {
            columns.push(vec![
                field.add_raw(d1, g),
                field.add_raw(d2, g),
                field.add_raw(d3, g),
            ]);
        }
    }
    Ok(Code::new(3, q, columns)?)
}

fn check_t(s: &ExponentSet, root: &CubeRoot) -> Result<(), ConstructError> {
    if s.t() != root.t {
        return Err(ConstructError::TMismatch {
            set_t: s.t(),
            field_t: root.t,
        });
    }
    Ok(())
}

/// Shared precomputation for the two solvers.
struct Solver<'a> {
    field: &'a FiniteField,
    xi: u32,
    xi2: u32,
    in_s: Vec<bool>,
}

impl<'a> Solver<'a> {
    fn new(field: &'a FiniteField, s: &ExponentSet, root: &CubeRoot) -> Self {
        let xi = root.xi;
        let mut in_s = vec![false; root.t as usize];
        for &i in s.indices() {
            in_s[i as usize] = true;
        }
        Self {
            field,
            xi,
            xi2: field.mul_raw(xi, xi),
            in_s,
        }
    }

    /// dlog if the value is nonzero and its exponent lies in S.
    fn dlog_in_s(&self, value: u32) -> Option<u32> {
        if value == 0 {
            return None;
        }
        let e = self.field.dlog(value).expect("nonzero");
        ((e as usize) < self.in_s.len() && self.in_s[e as usize]).then_some(e)
    }

    /// System (A): for each (x, w) the two equations are linear in ε^z and
    /// ε^y.
    fn solve_delta(&self, s: &ExponentSet) -> Option<DfViolation> {
        let f = self.field;
        for &x in s.indices() {
            let ex = f.exp(x as i64);
            let ex_xi = f.mul_raw(ex, self.xi);
            for &w in s.indices() {
                if w == x {
                    continue;
                }
                let ew = f.exp(w as i64);
                // ε^z = -(ε^w + ε^x ξ) ξ
                let z_val = f.mul_raw(f.neg_raw(f.add_raw(ew, ex_xi)), self.xi);
                let Some(z) = self.dlog_in_s(z_val) else {
                    continue;
                };
                // ε^y = -(ε^x + ε^w ξ) ξ
                let y_val = f.mul_raw(f.neg_raw(f.add_raw(ex, f.mul_raw(ew, self.xi))), self.xi);
                let Some(y) = self.dlog_in_s(y_val) else {
                    continue;
                };
                if distinct4(x, y, z, w) {
                    return Some(DfViolation::Delta { x, y, z, w });
                }
            }
        }
        None
    }

    /// Solutions (x, y, z) of ε^x + ε^y ξ² + ε^z ξ = 0 with x, y, z ∈ S,
    /// tagged with the linking value ε^x ξ - ε^z.
    fn first_equation_solutions(&self, s: &ExponentSet) -> Vec<(u32, u32, u32, u32)> {
        let f = self.field;
        let mut out = Vec::new();
        for &x in s.indices() {
            let ex = f.exp(x as i64);
            for &y in s.indices() {
                let ey = f.exp(y as i64);
                // ε^z = -(ε^x + ε^y ξ²) ξ²
                let z_val = f.mul_raw(f.neg_raw(f.add_raw(ex, f.mul_raw(ey, self.xi2))), self.xi2);
                if let Some(z) = self.dlog_in_s(z_val) {
                    let link = f.add_raw(f.mul_raw(ex, self.xi), f.neg_raw(z_val));
                    out.push((x, y, z, link));
                }
            }
        }
        out
    }

    /// Solutions (u, v, w) of ε^u + ε^v ξ + ε^w ξ² = 0 with u, v, w ∈ S,
    /// tagged with the linking value ε^w ξ - ε^u.
    fn second_equation_solutions(&self, s: &ExponentSet) -> Vec<(u32, u32, u32, u32)> {
        let f = self.field;
        let mut out = Vec::new();
        for &u in s.indices() {
            let eu = f.exp(u as i64);
            for &v in s.indices() {
                let ev = f.exp(v as i64);
                // ε^w = -(ε^u + ε^v ξ) ξ
                let w_val = f.mul_raw(f.neg_raw(f.add_raw(eu, f.mul_raw(ev, self.xi))), self.xi);
                if let Some(w) = self.dlog_in_s(w_val) {
                    let link = f.add_raw(f.mul_raw(w_val, self.xi), f.neg_raw(eu));
                    out.push((u, v, w, link));
                }
            }
        }
        out
    }

    /// System (B), all three admissible shapes.
    fn solve_nabla(&self, s: &ExponentSet) -> Option<DfViolation> {
        let f = self.field;
        let t1 = self.first_equation_solutions(s);
        let t2 = self.second_equation_solutions(s);

        // All six distinct: join the two families on the linking value.
        let mut by_link: FxHashMap<u32, Vec<usize>> = FxHashMap::default();
        for (idx, &(_, _, _, link)) in t2.iter().enumerate() {
            by_link.entry(link).or_default().push(idx);
        }
        for &(x, y, z, link) in &t1 {
            if let Some(cands) = by_link.get(&link) {
                for &idx in cands {
                    let (u, v, w, _) = t2[idx];
                    if distinct6(x, y, z, u, v, w) {
                        return Some(DfViolation::Nabla { x, y, z, u, v, w });
                    }
                }
            }
        }

        // x = y = z: the first equation is vacuous and the linking
        // equation pins ε^x to (ε^w ξ - ε^u)/(ξ - 1).
        let inv_xim1 = f
            .inv(f.add_raw(self.xi, f.neg_raw(1)))
            .expect("xi differs from 1");
        for &(u, v, w, _) in &t2 {
            if u == v || u == w || v == w {
                continue;
            }
            let x_val = f.mul_raw(
                f.add_raw(
                    f.mul_raw(f.exp(w as i64), self.xi),
                    f.neg_raw(f.exp(u as i64)),
                ),
                inv_xim1,
            );
            if let Some(x) = self.dlog_in_s(x_val) {
                if x != u && x != v && x != w {
                    return Some(DfViolation::Nabla {
                        x,
                        y: x,
                        z: x,
                        u,
                        v,
                        w,
                    });
                }
            }
        }

        // u = v = w: symmetric, ε^u = (ε^x ξ - ε^z)/(ξ - 1).
        for &(x, y, z, _) in &t1 {
            if x == y || x == z || y == z {
                continue;
            }
            let u_val = f.mul_raw(
                f.add_raw(
                    f.mul_raw(f.exp(x as i64), self.xi),
                    f.neg_raw(f.exp(z as i64)),
                ),
                inv_xim1,
            );
            if let Some(u) = self.dlog_in_s(u_val) {
                if u != x && u != y && u != z {
                    return Some(DfViolation::Nabla {
                        x,
                        y,
                        z,
                        u,
                        v: u,
                        w: u,
                    });
                }
            }
        }
        None
    }
}

fn distinct4(a: u32, b: u32, c: u32, d: u32) -> bool {
    a != b && a != c && a != d && b != c && b != d && c != d
}

fn distinct6(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> bool {
    let mut v = [a, b, c, d, e, f];
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// Decides whether S is admissible: neither system has a solution inside
/// S. Inadmissible sets come with the first solution found in a fixed
/// scan order (system (A) by (x, w), then system (B) shapes in the order
/// all-distinct, x=y=z, u=v=w).
pub fn df_criterion(
    field: &FiniteField,
    s: &ExponentSet,
) -> Result<DfCriterionResult, ConstructError> {
    let root = field.cube_root()?;
    check_t(s, &root)?;
    let solver = Solver::new(field, s, &root);
    let violation = solver.solve_delta(s).or_else(|| solver.solve_nabla(s));
    Ok(DfCriterionResult {
        admissible: violation.is_none(),
        violation,
    })
}

/// Re-substitutes a reported solution into its system, checking the
/// equations, the shape condition, and membership in S. Independent of
/// the solver's algebra: everything is evaluated directly in the field.
pub fn df_violation_holds(field: &FiniteField, s: &ExponentSet, v: &DfViolation) -> bool {
    let Ok(root) = field.cube_root() else {
        return false;
    };
    if check_t(s, &root).is_err() {
        return false;
    }
    let xi = root.xi;
    let xi2 = field.mul_raw(xi, xi);
    let in_s = |e: u32| s.indices().contains(&e);
    let ex = |e: u32| field.exp(e as i64);
    match *v {
        DfViolation::Delta { x, y, z, w } => {
            in_s(x)
                && in_s(y)
                && in_s(z)
                && in_s(w)
                && distinct4(x, y, z, w)
                && field.add_raw(
                    ex(w),
                    field.add_raw(field.mul_raw(ex(x), xi), field.mul_raw(ex(z), xi2)),
                ) == 0
                && field.add_raw(
                    ex(x),
                    field.add_raw(field.mul_raw(ex(w), xi), field.mul_raw(ex(y), xi2)),
                ) == 0
        }
        DfViolation::Nabla { x, y, z, u, v, w } => {
            let members = [x, y, z, u, v, w].iter().all(|&e| in_s(e));
            let eq1 = field.add_raw(
                ex(x),
                field.add_raw(field.mul_raw(ex(y), xi2), field.mul_raw(ex(z), xi)),
            ) == 0;
            let eq2 = field.add_raw(
                ex(u),
                field.add_raw(field.mul_raw(ex(v), xi), field.mul_raw(ex(w), xi2)),
            ) == 0;
            let link = field.add_raw(field.mul_raw(ex(x), xi), ex(u))
                == field.add_raw(ex(z), field.mul_raw(ex(w), xi));
            let shape = if x == y && y == z {
                distinct4(x, u, v, w)
            } else if u == v && v == w {
                distinct4(u, x, y, z)
            } else {
                distinct6(x, y, z, u, v, w)
            };
            members && eq1 && eq2 && link && shape
        }
    }
}

/// Which primitive elements a search covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsSelection {
    /// Scan ranks in order, keep the first admissible hit per pattern.
    First,
    /// Evaluate every rank and report the full admissibility table.
    All,
    /// A single rank.
    Rank(u32),
}

/// Search request: one field order, a primitive-element range, and a list
/// of patterns.
#[derive(Debug, Clone)]
pub struct DfSearchSpec {
    pub q: u64,
    pub eps: EpsSelection,
    pub patterns: Vec<SPattern>,
}

/// One evaluated (ε, S) cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub q: u32,
    pub p: u32,
    pub m: u32,
    pub eps_rank: u32,
    pub field: FieldDescriptor,
    pub pattern: String,
    #[serde(rename = "S")]
    pub s: Vec<u32>,
    /// q·|S|, the size of the constructed code.
    pub code_size: u64,
    /// ⌊q(q-1)/d⌋ for the pattern's divisor d.
    pub nominal_size: u64,
    pub nominal_expr: String,
    pub size_matches_nominal: bool,
    pub admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<DfViolation>,
}

/// Runs the criterion over the requested (ε, pattern) grid. Records are
/// ordered by ε rank, then by the given pattern order; `First` keeps only
/// the lowest admissible rank per pattern.
pub fn df_search(spec: &DfSearchSpec, workers: usize) -> Result<Vec<SearchRecord>, ConstructError> {
    let (p, m) = prime_power_split(spec.q)?;
    if spec.q % 6 != 1 {
        return Err(crate::error::FieldError::NotSixTPlusOne { q: spec.q as u32 }.into());
    }
    if spec.patterns.is_empty() {
        return Err(ConstructError::EmptySet);
    }
    let base = FiniteField::new(p, m)?;
    let count = base.primitive_count();
    let ranks: Vec<u32> = match spec.eps {
        EpsSelection::Rank(r) => {
            if r >= count {
                return Err(crate::error::FieldError::PrimitiveRankOutOfRange {
                    rank: r,
                    count,
                    q: base.q(),
                }
                .into());
            }
            vec![r]
        }
        _ => (0..count).collect(),
    };

    let eval_rank = |&rank: &u32| -> Result<Vec<SearchRecord>, ConstructError> {
        let field = if rank == 0 {
            base.clone()
        } else {
            FiniteField::with_primitive_rank(p, m, rank)?
        };
        let root = field.cube_root()?;
        let mut records = Vec::new();
        for &pattern in &spec.patterns {
            let Ok(s) = ExponentSet::from_pattern(pattern, root.t) else {
                continue; // pattern empty at this t
            };
            let result = df_criterion(&field, &s)?;
            let q64 = field.q() as u64;
            let code_size = q64 * s.len() as u64;
            let d = pattern.nominal_divisor();
            let nominal_size = q64 * (q64 - 1) / d;
            records.push(SearchRecord {
                q: field.q(),
                p,
                m,
                eps_rank: rank,
                field: field.descriptor(),
                pattern: pattern.name().to_string(),
                s: s.indices().to_vec(),
                code_size,
                nominal_size,
                nominal_expr: format!("q(q-1)/{d}"),
                size_matches_nominal: code_size == nominal_size,
                admissible: result.admissible,
                violation: result.violation,
            });
        }
        Ok(records)
    };

    let per_rank: Vec<Vec<SearchRecord>> = if workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| ranks.par_iter().map(eval_rank).collect::<Result<_, _>>())?
    } else {
        ranks.iter().map(eval_rank).collect::<Result<_, _>>()?
    };
    let all: Vec<SearchRecord> = per_rank.into_iter().flatten().collect();

    Ok(match spec.eps {
        EpsSelection::First => {
            let mut out = Vec::new();
            for pattern in &spec.patterns {
                if let Some(rec) = all
                    .iter()
                    .find(|r| r.admissible && r.pattern == pattern.name())
                {
                    out.push(rec.clone());
                }
            }
            out
        }
        _ => all,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{oracle_sc_bar, VerifyOptions};

    #[test]
    fn gf7_base_block_and_translates() {
        let f = FiniteField::new(7, 1).unwrap();
        let s = ExponentSet::from_pattern(SPattern::All, 1).unwrap();
        let code = df_code(&f, &s).unwrap();
        assert_eq!(code.len(), 7);
        // ξ = 2, so the base column is (1, 2, 4).
        assert_eq!(code.column(0), &[1, 2, 4]);
        let r = oracle_sc_bar(&code, 3, &VerifyOptions::default()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn translate_invariance() {
        let f = FiniteField::new(13, 1).unwrap();
        let s = ExponentSet::from_pattern(SPattern::All, 2).unwrap();
        let code = df_code(&f, &s).unwrap();
        assert_eq!(code.len(), 26);
        for g in 1..13 {
            let shifted: Vec<Vec<u32>> = code
                .columns()
                .map(|c| c.iter().map(|&v| f.add_raw(v, g)).collect())
                .collect();
            let shifted = Code::new(3, 13, shifted).unwrap();
            assert!(shifted.eq_as_set(&code), "g={g}");
        }
    }

    #[test]
    fn pls_cell_count_is_q_times_s() {
        let f = FiniteField::new(13, 1).unwrap();
        let s = ExponentSet::from_pattern(SPattern::All, 2).unwrap();
        let code = df_code(&f, &s).unwrap();
        let pls = crate::pls::to_pls(&code).unwrap();
        assert_eq!(pls.filled_count(), 26);
    }

    #[test]
    fn singleton_set_is_vacuously_admissible() {
        for q in [7u32, 13, 19] {
            let f = FiniteField::new(q, 1).unwrap();
            let t = (q - 1) / 6;
            let s = ExponentSet::custom(vec![0], t).unwrap();
            let r = df_criterion(&f, &s).unwrap();
            assert!(r.admissible, "q={q}");
        }
    }

    #[test]
    fn inadmissible_set_resubstitutes_and_fails_oracle() {
        // The full exponent set over GF(37) with the 9th primitive element
        // is inadmissible; the reported solution must re-substitute
        // exactly and the constructed code must fail the exhaustive
        // oracle.
        let f = FiniteField::with_primitive_rank(37, 1, 8).unwrap();
        let s = ExponentSet::from_pattern(SPattern::All, 6).unwrap();
        let r = df_criterion(&f, &s).unwrap();
        assert!(!r.admissible);
        let v = r.violation.unwrap();
        assert!(df_violation_holds(&f, &s, &v), "{v:?}");
        let code = df_code(&f, &s).unwrap();
        let oracle = oracle_sc_bar(&code, 3, &VerifyOptions::default()).unwrap();
        assert!(!oracle.holds);
    }

    #[test]
    fn extension_field_violation_resubstitutes() {
        // GF(49) with the first primitive element: the full set admits a
        // solution of the first system.
        let f = FiniteField::new(7, 2).unwrap();
        let s = ExponentSet::from_pattern(SPattern::All, 8).unwrap();
        let r = df_criterion(&f, &s).unwrap();
        assert!(!r.admissible);
        let v = r.violation.unwrap();
        assert!(matches!(v, DfViolation::Delta { .. }));
        assert!(df_violation_holds(&f, &s, &v));
    }

    #[test]
    fn pattern_members() {
        assert_eq!(SPattern::All.members(4), vec![0, 1, 2, 3]);
        assert_eq!(SPattern::Mod3Nonzero.members(6), vec![1, 2, 4, 5]);
        assert_eq!(SPattern::Even.members(5), vec![0, 2, 4]);
        assert_eq!(SPattern::Mod3Zero.members(7), vec![0, 3, 6]);
        assert!(ExponentSet::from_pattern(SPattern::Mod3Nonzero, 1).is_err());
    }

    #[test]
    fn custom_set_validation() {
        assert!(ExponentSet::custom(vec![], 5).is_err());
        assert!(matches!(
            ExponentSet::custom(vec![5], 5),
            Err(ConstructError::ExponentOutOfRange { value: 5, t: 5 })
        ));
        let s = ExponentSet::custom(vec![3, 1, 1], 5).unwrap();
        assert_eq!(s.indices(), &[1, 3]);
        assert_eq!(s.pattern_name(), "custom");
    }

    #[test]
    fn t_mismatch_rejected() {
        let f = FiniteField::new(13, 1).unwrap();
        let s = ExponentSet::from_pattern(SPattern::All, 3).unwrap();
        assert!(matches!(
            df_code(&f, &s),
            Err(ConstructError::TMismatch {
                set_t: 3,
                field_t: 2
            })
        ));
    }

    #[test]
    fn search_rejects_bad_orders() {
        let spec = DfSearchSpec {
            q: 8,
            eps: EpsSelection::First,
            patterns: vec![SPattern::All],
        };
        assert!(df_search(&spec, 1).is_err());
        let spec = DfSearchSpec {
            q: 12,
            eps: EpsSelection::First,
            patterns: vec![SPattern::All],
        };
        assert!(df_search(&spec, 1).is_err());
    }

    #[test]
    fn search_small_field_all_eps() {
        let spec = DfSearchSpec {
            q: 13,
            eps: EpsSelection::All,
            patterns: vec![SPattern::All],
        };
        let records = df_search(&spec, 1).unwrap();
        // GF(13) has φ(12) = 4 primitive elements.
        assert_eq!(records.len(), 4);
        for (i, r) in records.iter().enumerate() {
            assert_eq!(r.eps_rank as usize, i);
            assert_eq!(r.code_size, 26);
        }
        // Parallel execution returns the identical table.
        let par = df_search(&spec, 4).unwrap();
        assert_eq!(records, par);
    }
}
