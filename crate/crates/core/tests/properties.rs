mod common;

use dmc_core::lie::{validate, LInfinityStructure};
use dmc_core::matrix::SparseMatrix;
use dmc_core::phi::{quasi_iso_report, PhiMap};
use dmc_core::scalar::{fmt_q, parse_q, Q};
use dmc_core::simplicial::module::random_family;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..3, c), r))
}

fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|x| Q::from_integer((*x).into())).collect()).collect()
}

fn structure(name: &str, ones: usize, twos: usize, brackets: &[(Vec<usize>, Vec<i64>)]) -> LInfinityStructure {
    let mut gens: Vec<String> = (0..ones).map(|i| format!(r#"{{"name": "x{i}", "degree": 1}}"#)).collect();
    gens.extend((0..twos).map(|i| format!(r#"{{"name": "y{i}", "degree": 2}}"#)));
    let br: Vec<String> = brackets
        .iter()
        .map(|(args, coefs)| {
            let args: Vec<String> = args.iter().map(|a| format!("\"x{a}\"")).collect();
            let value: Vec<String> =
                coefs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| format!(r#"{{"gen": "y{i}", "coef": "{c}"}}"#)).collect();
            format!(r#"{{"args": [{}], "value": [{}]}}"#, args.join(", "), value.join(", "))
        })
        .collect();
    let json = format!(r#"{{"name": "{name}", "generators": [{}], "brackets": [{}], "max_arity": 2}}"#, gens.join(", "), br.join(", "));
    LInfinityStructure::from_json(&json).unwrap()
}

/// Degree-one generators with a random differential into degree two.
fn abelian_with_differential() -> impl Strategy<Value = LInfinityStructure> {
    (1usize..3, 1usize..3).prop_flat_map(|(a, b)| {
        prop::collection::vec(prop::collection::vec(-2i64..3, b), a)
            .prop_map(move |rows| structure("random-abelian", a, b, &rows.into_iter().enumerate().map(|(i, r)| (vec![i], r)).collect::<Vec<_>>()))
    })
}

/// Two-step nilpotent: random symmetric brackets of degree-one generators.
fn two_step() -> impl Strategy<Value = LInfinityStructure> {
    (1usize..3, 1usize..3).prop_flat_map(|(a, b)| {
        let pairs: Vec<Vec<usize>> = (0..a).flat_map(|i| (i..a).map(move |j| vec![i, j])).collect();
        prop::collection::vec(prop::collection::vec(-2i64..3, b), pairs.len())
            .prop_map(move |vals| structure("random-two-step", a, b, &pairs.iter().cloned().zip(vals).collect::<Vec<_>>()))
    })
}

fn check_structure(l: &LInfinityStructure) -> Result<(), TestCaseError> {
    prop_assert!(validate(l).pass());
    let phi = PhiMap::new(l, 3, 3).unwrap();
    prop_assert_eq!(phi.chain_map_check(), Ok(()));
    let r = quasi_iso_report(l, &phi, 2).unwrap();
    prop_assert!(r.all_iso(), "{:?}", r.total);
    prop_assert_eq!(r.h0_by_weight, common::h0_by_weight(l, 3));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rank_agrees_with_dense_elimination(rows in matrix()) {
        let cols = rows[0].len();
        let m = SparseMatrix::from_dense(&to_q(&rows), cols);
        prop_assert_eq!(m.rank(), common::dense_rank(to_q(&rows)));
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let k = m.kernel();
        prop_assert_eq!(k.basis.len() + m.rank(), cols);
        for v in &k.basis {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..50) {
        let x = Q::new(n.into(), d.into());
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }

    #[test]
    fn normalizations_agree_on_random_families(seed in any::<u64>()) {
        let m = random_family(seed, 3);
        prop_assert!(m.check_identities().is_ok());
        for (n, iso) in m.kernel_to_quotient().unwrap().iter().enumerate() {
            prop_assert_eq!(iso.rank(), m.normalize_kernel().unwrap().complex.dim(-(n as i32)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn phi_is_a_quasi_isomorphism_for_abelian_structures(l in abelian_with_differential()) {
        check_structure(&l)?;
    }

    #[test]
    fn phi_is_a_quasi_isomorphism_for_two_step_structures(l in two_step()) {
        check_structure(&l)?;
    }
}
