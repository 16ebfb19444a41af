//! Property tests for the structural invariants: serialization
//! round-trips, descendant monotonicity, array-view round-trips, the
//! frameproof property of array-derived codes, and discrete-log laws.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sepcode::code::{Code, CodeFormat};
use sepcode::field::FiniteField;
use sepcode::pls::{from_pls, to_pls};
use sepcode::projection::axis_projection;
use sepcode::verify::{check_fpc, check_sc3bar_structural, oracle_sc_bar, VerifyOptions};

/// Strategy: a valid random code via a seed, so shrinking walks seeds.
fn arb_code() -> impl Strategy<Value = Code> {
    (2u32..=9, 3usize..=24, any::<u64>()).prop_map(|(q, m, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = m.min((q as usize).pow(3));
        common::random_code(&mut rng, q, m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn json_round_trip(code in arb_code()) {
        let bytes = code.to_bytes(CodeFormat::Json);
        let back = Code::from_bytes(&bytes, CodeFormat::Json).unwrap();
        prop_assert_eq!(code, back);
    }

    #[test]
    fn text_round_trip(code in arb_code()) {
        let bytes = code.to_bytes(CodeFormat::Text);
        let back = Code::from_bytes(&bytes, CodeFormat::Text).unwrap();
        prop_assert_eq!(code, back);
    }

    #[test]
    fn descendant_key_is_monotone(code in arb_code(), pick in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(pick);
        let m = code.len();
        let big: Vec<usize> = (0..m).filter(|_| rand::Rng::gen_bool(&mut rng, 0.5)).collect();
        prop_assume!(big.len() >= 2);
        let small: Vec<usize> = big.iter().copied().step_by(2).collect();
        let k_small = code.descendant_key(&small).unwrap();
        let k_big = code.descendant_key(&big).unwrap();
        for i in 0..code.n() {
            for v in k_small.coord_set(i) {
                prop_assert!(k_big.coord_set(i).contains(v));
            }
        }
    }

    #[test]
    fn projection_partitions_the_code(code in arb_code()) {
        for axis in 1..=code.n() {
            prop_assert_eq!(axis_projection(&code, axis).unwrap().total(), code.len());
        }
    }

    #[test]
    fn array_round_trips(order in 3u32..=9, fills in 3usize..=20, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pls = common::random_pls(&mut rng, order, fills.min((order * order) as usize));
        prop_assume!(pls.filled_count() >= 1);
        // Square -> code -> square is the identity.
        let code = from_pls(&pls).unwrap();
        prop_assert_eq!(to_pls(&code).unwrap(), pls);
        // Code -> square -> code preserves the codeword set.
        let back = from_pls(&to_pls(&code).unwrap()).unwrap();
        prop_assert!(back.eq_as_set(&code));
    }

    #[test]
    fn array_codes_are_2_frameproof(order in 3u32..=9, fills in 3usize..=24, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pls = common::random_pls(&mut rng, order, fills.min((order * order) as usize));
        prop_assume!(pls.filled_count() >= 1);
        let code = from_pls(&pls).unwrap();
        let report = check_fpc(&code, 2, &VerifyOptions::default()).unwrap();
        prop_assert!(report.holds);
    }

    #[test]
    fn frameproof_implies_separable_same_t(code in arb_code()) {
        // Frameproof at t implies separability over subsets of size at
        // most t; checked for t = 2 and t = 3.
        for t in [2usize, 3] {
            if t <= code.len() {
                let fpc = check_fpc(&code, t, &VerifyOptions::default()).unwrap();
                if fpc.holds {
                    let sc = oracle_sc_bar(&code, t, &VerifyOptions::default()).unwrap();
                    prop_assert!(sc.holds, "t={}", t);
                }
            }
        }
    }

    #[test]
    fn oracle_and_structural_agree(code in arb_code()) {
        let o = oracle_sc_bar(&code, 3.min(code.len()), &VerifyOptions::default()).unwrap();
        if code.len() >= 3 {
            let s = check_sc3bar_structural(&code, &VerifyOptions::default()).unwrap();
            prop_assert_eq!(o.holds, s.holds);
        }
    }

    #[test]
    fn dlog_respects_multiplication(pm in prop::sample::select(vec![(5u32, 1u32), (7, 1), (13, 1), (3, 2), (11, 2)]), x in 1u32..100, y in 1u32..100) {
        let f = FiniteField::new(pm.0, pm.1).unwrap();
        let q = f.q();
        let x = 1 + x % (q - 1);
        let y = 1 + y % (q - 1);
        let lhs = f.dlog(f.mul(x, y).unwrap()).unwrap();
        let rhs = (f.dlog(x).unwrap() + f.dlog(y).unwrap()) % (q - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn witnesses_revalidate(code in arb_code()) {
        let o = oracle_sc_bar(&code, 3.min(code.len()), &VerifyOptions::default()).unwrap();
        if let Some(w) = &o.witness {
            prop_assert!(w.revalidate(&code));
        }
        if code.n() == 3 {
            let s = check_sc3bar_structural(&code, &VerifyOptions::default()).unwrap();
            if let Some(w) = &s.witness {
                prop_assert!(w.revalidate(&code));
            }
        }
    }
}
