use dmc_core::fixtures;
use dmc_core::lie::LInfinityStructure;
use dmc_core::mc::classical::{classical_locus, matching_check};
use dmc_core::mc::oracle::{epsilon_oracle, explicit_formula_oracle, level_one_formulas};
use dmc_core::mc::McLocus;
use dmc_core::simplicial::simplex::all_maps;
use dmc_core::simplicial::SimplexMap;

fn positive(name: &str) -> LInfinityStructure {
    fixtures::load_positive(name).unwrap()
}

/// Coordinates of `MC^n`: one block per subset `S ⊂ {0..n-1}` of dimension `dim L^{|S|+1}`.
fn coordinate_count(l: &LInfinityStructure, n: usize) -> usize {
    (0u32..1 << n).map(|mask| l.dim_in_degree(mask.count_ones() as i32 + 1)).sum()
}

#[test]
fn coordinate_inventory_matches_subset_count() {
    let l = positive("heis");
    let locus = McLocus::new(&l, 2).unwrap();
    let inv = locus.coordinates(2).inventory();
    assert_eq!(inv, vec![(vec![], 2), (vec![0], 1), (vec![1], 1)]);
    for name in fixtures::NAMES {
        let l = positive(name);
        let locus = McLocus::new(&l, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(locus.coordinates(n).len(), coordinate_count(&l, n), "{name} level {n}");
        }
    }
}

#[test]
fn graph_embedding_is_maurer_cartan() {
    for name in fixtures::NAMES {
        let locus = McLocus::new(&positive(name), 4).unwrap();
        for n in 0..=4 {
            assert!(locus.mc_residual(n).unwrap().is_zero(), "{name} level {n}");
        }
    }
}

#[test]
fn cosimplicial_identities_up_to_level_four() {
    let (d, s) = (SimplexMap::coface, SimplexMap::codegeneracy);
    for name in fixtures::NAMES {
        let locus = McLocus::new(&positive(name), 4).unwrap();
        for n in 1..4 {
            for i in 0..=n + 1 {
                for j in 0..i {
                    assert!(locus.functorial_on(&d(n, j), &d(n + 1, i)).unwrap(), "{name}: d^{i} d^{j}, level {n}");
                }
            }
            for i in 0..n {
                for j in i..n {
                    assert!(locus.functorial_on(&s(n, i), &s(n - 1, j)).unwrap(), "{name}: s^{j} s^{i}, level {n}");
                }
            }
        }
        for n in 1..=4 {
            for i in 0..=n {
                for j in 0..n {
                    assert!(locus.functorial_on(&d(n, i), &s(n - 1, j)).unwrap(), "{name}: s^{j} d^{i}, level {n}");
                }
            }
        }
    }
}

#[test]
fn all_maps_are_functorial_and_land_on_the_graph() {
    let locus = McLocus::new(&positive("heis"), 2).unwrap();
    for m in 0..=2 {
        for n in 0..=2 {
            for phi in all_maps(m, n) {
                assert!(locus.lands_on_graph(&phi).unwrap(), "{phi:?}");
                for p in 0..=2 {
                    for psi in all_maps(n, p) {
                        assert!(locus.functorial_on(&phi, &psi).unwrap(), "{phi:?} {psi:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn closed_forms_on_abelian_fixture() {
    let locus = McLocus::new(&positive("abelian2"), 3).unwrap();
    for v in explicit_formula_oracle(&locus, 3).unwrap() {
        assert!(v.agrees() || v.informational, "{}: {:?}", v.map, v.mismatches);
        if !v.map.starts_with("d^0") {
            assert!(!v.informational);
        }
    }
    for v in level_one_formulas(&locus).unwrap() {
        assert!(v.agrees(), "{}: {:?}", v.map, v.mismatches);
    }
}

#[test]
fn grouplike_and_face_closed_forms_hold_on_every_fixture() {
    for name in fixtures::NAMES {
        let locus = McLocus::new(&positive(name), 3).unwrap();
        let verdicts = explicit_formula_oracle(&locus, 3).unwrap();
        assert!(verdicts.iter().filter(|v| !v.informational).all(|v| v.agrees()), "{name}");
        assert!(verdicts.iter().any(|v| v.map.starts_with("s^")) && verdicts.iter().any(|v| v.map.starts_with("d^1")));
    }
}

#[test]
fn d0_closed_form_is_reported_not_enforced() {
    let locus = McLocus::new(&positive("odd-square"), 2).unwrap();
    let d0: Vec<_> = explicit_formula_oracle(&locus, 2).unwrap().into_iter().filter(|v| v.map.starts_with("d^0")).collect();
    assert_eq!(d0.len(), 2);
    assert!(d0.iter().all(|v| v.informational));
    assert!(d0.iter().any(|v| !v.agrees()));
    let eps = epsilon_oracle(&locus, 2).unwrap();
    assert!(eps.iter().all(|v| v.informational));
}

#[test]
fn level_one_maps_of_odd_square() {
    let locus = McLocus::new(&positive("odd-square"), 1).unwrap();
    for v in level_one_formulas(&locus).unwrap() {
        assert!(v.agrees(), "{}: {:?}", v.map, v.mismatches);
    }
}

#[test]
fn classical_locus_recovers_the_curvature_ideal() {
    let expected = [("abelian2", vec!["x[]"]), ("odd-square", vec!["1/2*x[]^2"]), ("heis", vec!["x1[]*x2[]"]), ("koszul-x2", vec!["x[]^2"])];
    for (name, curvature) in expected {
        let c = classical_locus(&McLocus::new(&positive(name), 1).unwrap()).unwrap();
        assert_eq!(c.curvature, curvature, "{name}");
        assert!(c.agree, "{name}");
    }
    let h = classical_locus(&McLocus::new(&positive("harrison-d2"), 1).unwrap()).unwrap();
    assert!(h.agree);
    assert_eq!(h.curvature.len(), 4);
}

#[test]
fn matching_maps_are_surjective() {
    for name in fixtures::NAMES {
        let l = positive(name);
        let locus = McLocus::new(&l, 3).unwrap();
        for n in 1..=3 {
            let v = matching_check(&locus, n).unwrap();
            assert!(v.surjective, "{name} level {n}: {v:?}");
            assert_eq!(v.dim_source, coordinate_count(&l, n));
        }
    }
}
