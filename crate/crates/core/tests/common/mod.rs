//! Shared corpus builders for the integration suites. Everything is
//! seeded, so every run sees the same codes.
#![allow(dead_code)] // each test binary uses a different subset

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use sepcode::code::Code;
use sepcode::construct::{self, df_code, ExponentSet, SPattern};
use sepcode::field::FiniteField;
use sepcode::fixtures;
use sepcode::pls::{from_pls, PartialLatinSquare};

/// A uniform random length-3 code with distinct columns.
pub fn random_code(rng: &mut ChaCha8Rng, q: u32, m: usize) -> Code {
    let mut seen = HashSet::new();
    let mut columns = Vec::with_capacity(m);
    while columns.len() < m {
        let col: Vec<u32> = (0..3).map(|_| rng.gen_range(0..q)).collect();
        if seen.insert(col.clone()) {
            columns.push(col);
        }
    }
    Code::new(3, q, columns).expect("random code is valid")
}

/// A random partial Latin square built by greedy filling: shuffled cells,
/// random admissible symbol, stop at `fills` filled cells.
pub fn random_pls(rng: &mut ChaCha8Rng, order: u32, fills: usize) -> PartialLatinSquare {
    let q = order as usize;
    let mut cells: Vec<(u32, u32)> = (0..order)
        .flat_map(|r| (0..order).map(move |c| (r, c)))
        .collect();
    cells.shuffle(rng);
    let mut grid = vec![None; q * q];
    let mut row_used = vec![vec![false; q]; q];
    let mut col_used = vec![vec![false; q]; q];
    let mut filled = 0;
    for (r, c) in cells {
        if filled == fills {
            break;
        }
        let mut symbols: Vec<u32> = (0..order).collect();
        symbols.shuffle(rng);
        for s in symbols {
            if !row_used[r as usize][s as usize] && !col_used[c as usize][s as usize] {
                grid[(r * order + c) as usize] = Some(s);
                row_used[r as usize][s as usize] = true;
                col_used[c as usize][s as usize] = true;
                filled += 1;
                break;
            }
        }
    }
    PartialLatinSquare::new(order, grid).expect("greedy fill preserves the Latin property")
}

/// The randomized agreement corpus: at least 10⁴ length-3 codes with
/// M ≤ 30 over alphabets of at most 8 letters, mixing uniform random
/// codes, partial-Latin-square codes (which are always 2-frameproof, so
/// they exercise the pattern detectors), and random subcodes of known
/// separable codes.
pub fn corpus() -> Vec<Code> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5E9A_C0DE);
    let mut out = Vec::with_capacity(10_500);
    for _ in 0..5000 {
        let q = rng.gen_range(2..=8);
        let max_m = (30usize).min((q as usize).pow(3));
        let m = rng.gen_range(3..=max_m.max(3));
        out.push(random_code(&mut rng, q, m));
    }
    for _ in 0..4000 {
        let order = rng.gen_range(4..=8u32);
        let cap = (order * order) as usize;
        let fills = rng.gen_range(3..=cap.min(30));
        let pls = random_pls(&mut rng, order, fills);
        if pls.filled_count() >= 3 {
            out.push(from_pls(&pls).unwrap());
        }
    }
    let donors = [
        fixtures::c4(),
        construct::phf_cube(2).unwrap(),
        df_small(7, 1, &[0]),
    ];
    for _ in 0..1200 {
        let donor = &donors[rng.gen_range(0..donors.len())];
        let m = rng.gen_range(3..=donor.len());
        let mut picks: Vec<usize> = (0..donor.len()).collect();
        picks.shuffle(&mut rng);
        picks.truncate(m);
        let columns: Vec<Vec<u32>> = picks.iter().map(|&j| donor.column(j).to_vec()).collect();
        out.push(Code::new(3, donor.q(), columns).unwrap());
    }
    out
}

pub fn df_small(q: u32, t: u32, indices: &[u32]) -> Code {
    let field = FiniteField::new(q, 1).unwrap();
    let s = ExponentSet::custom(indices.to_vec(), t).unwrap();
    df_code(&field, &s).unwrap()
}

/// Every named fixture plus one instance of each construction family.
pub fn fixture_codes() -> Vec<Code> {
    let f13 = FiniteField::new(13, 1).unwrap();
    let f37 = FiniteField::with_primitive_rank(37, 1, 8).unwrap();
    vec![
        fixtures::c4(),
        fixtures::identity3(),
        fixtures::delta1(),
        fixtures::delta2(),
        fixtures::nabla(),
        fixtures::fpc2_violator(),
        from_pls(&fixtures::b4()).unwrap(),
        construct::phf_cube(2).unwrap(),
        construct::phf_cube(3).unwrap(),
        construct::phf_cube(4).unwrap(),
        construct::phf_extended(2).unwrap(),
        construct::trivial_fpc(3, 2).unwrap(),
        construct::trivial_fpc(3, 3).unwrap(),
        construct::trivial_fpc(3, 4).unwrap(),
        df_small(7, 1, &[0]),
        df_code(&f13, &ExponentSet::from_pattern(SPattern::All, 2).unwrap()).unwrap(),
        df_code(&f37, &ExponentSet::from_pattern(SPattern::All, 6).unwrap()).unwrap(),
    ]
}
