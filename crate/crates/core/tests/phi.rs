mod common;

use dmc_core::fixtures;
use dmc_core::lie::CeOptions;
use dmc_core::phi::oracle::{d_phi_oracle, product_formula_oracle};
use dmc_core::phi::{abelian_dold_kan_check, freeness_hilbert, graded_independence_check, quasi_iso_report, PhiMap, ProductChoice};

#[test]
fn chain_map_on_every_fixture_up_to_degree_minus_four() {
    for name in fixtures::NAMES {
        let phi = PhiMap::new(&fixtures::load_positive(name).unwrap(), 4, 4).unwrap();
        assert_eq!(phi.chain_map_check(), Ok(()), "{name}");
        assert!(phi.normalized_membership().is_empty(), "{name}");
    }
}

#[test]
fn flipped_binary_sign_breaks_the_chain_map() {
    for name in ["odd-square", "heis", "koszul-x2", "harrison-d2"] {
        let l = fixtures::load_positive(name).unwrap();
        let phi = PhiMap::with_options(&l, 2, 3, CeOptions { flip_binary_sign: true }).unwrap();
        let w = phi.chain_map_check().unwrap_err();
        assert_eq!((w.degree, w.defect_weight), (-1, Some(2)), "{name}");
    }
    // no binary bracket, nothing to flip
    let l = fixtures::load_positive("abelian2").unwrap();
    assert!(PhiMap::with_options(&l, 2, 3, CeOptions { flip_binary_sign: true }).unwrap().chain_map_check().is_ok());
}

#[test]
fn level_two_generators_map_correctly() {
    let l = fixtures::three_step();
    let phi = PhiMap::new(&l, 3, 3).unwrap();
    assert_eq!(phi.chain_map_check(), Ok(()));
    assert!(phi.generators.iter().any(|g| g.level == 2));
    let report = quasi_iso_report(&l, &phi, 2).unwrap();
    assert!(report.all_iso());
}

#[test]
fn quasi_isomorphism_matches_dense_oracle() {
    for name in fixtures::NAMES {
        let l = fixtures::load_positive(name).unwrap();
        let phi = PhiMap::new(&l, 4, 3).unwrap();
        let r = quasi_iso_report(&l, &phi, 3).unwrap();
        assert!(r.all_iso(), "{name}: {:?}", r.total);
        assert_eq!(r.h0_by_weight, common::h0_by_weight(&l, 3), "{name}");
        let h0 = r.total.iter().find(|row| row.degree == 0).unwrap();
        assert_eq!(h0.dim_source, r.h0_by_weight.values().sum::<usize>());
    }
}

#[test]
fn heis_degree_zero_dims() {
    let l = fixtures::load_positive("heis").unwrap();
    let phi = PhiMap::new(&l, 3, 3).unwrap();
    let r = quasi_iso_report(&l, &phi, 2).unwrap();
    // ℚ[a1, a2]/(a1 a2) below weight 3: 1; a1, a2; a1^2, a2^2
    assert_eq!(r.h0_by_weight.into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 2)]);
}

#[test]
fn closed_forms_for_phi() {
    for name in fixtures::NAMES {
        let phi = PhiMap::new(&fixtures::load_positive(name).unwrap(), 3, 3).unwrap();
        assert!(product_formula_oracle(&phi).agrees(), "{name}");
        let d = d_phi_oracle(&phi);
        assert!(d.informational && d.agrees(), "{name}");
    }
    let phi = PhiMap::new(&fixtures::three_step(), 3, 3).unwrap();
    assert!(product_formula_oracle(&phi).agrees());
    assert!(!d_phi_oracle(&phi).agrees());
}

#[test]
fn abelian_dold_kan() {
    let v = abelian_dold_kan_check(&fixtures::load_positive("abelian2").unwrap(), 4).unwrap();
    assert!(v.pass(), "{v:?}");
    assert_eq!(v.dims, (1..=5).map(|k| (k, k)).collect::<Vec<_>>());
    assert!(abelian_dold_kan_check(&fixtures::load_positive("heis").unwrap(), 2).is_err());
}

#[test]
fn graded_data_is_bracket_independent() {
    for name in fixtures::NAMES {
        let v = graded_independence_check(&fixtures::load_positive(name).unwrap(), 3, 4).unwrap();
        assert!(v.identical, "{name}: {:?}", v.first_difference);
    }
}

#[test]
fn normalized_functions_are_free() {
    for name in fixtures::NAMES {
        let phi = PhiMap::new(&fixtures::load_positive(name).unwrap(), 3, 3).unwrap();
        let free = freeness_hilbert(&phi.shuffle, 3, 3, ProductChoice::Shuffle);
        assert!(free.matches, "{name}: {:?} vs {:?}", free.dims, free.free_dims);
        assert!(!freeness_hilbert(&phi.shuffle, 3, 3, ProductChoice::Zero).matches, "{name}");
    }
}
