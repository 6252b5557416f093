use dmc_core::fixtures;
use dmc_core::lie::ce::{ce_algebra, ce_algebra_with, CeOptions};
use dmc_core::lie::harrison::{gerstenhaber, harrison_cochains, harrison_coordinates, harrison_fixture};
use dmc_core::lie::identities::jacobiator;
use dmc_core::lie::koszul::koszul_from_polynomial;
use dmc_core::lie::structure::{BasisElement, LInfinityStructure};
use dmc_core::lie::{bianchi_check, validate};
use dmc_core::matrix::SparseVec;
use dmc_core::poly::Poly;
use dmc_core::scalar::{q, qf, Q};
use dmc_core::Error;

fn el(names: &[(&str, i32)]) -> Vec<BasisElement> {
    names.iter().map(|(n, d)| BasisElement { name: n.to_string(), degree: *d, filtration: None }).collect()
}

#[test]
fn every_fixture_validates() {
    for name in fixtures::NAMES {
        let l = fixtures::load(name).unwrap();
        let r = validate(&l);
        assert!(r.pass(), "{name}: {:?}", r.residuals);
        assert!(validate(&l.truncate_positive()).pass());
    }
}

#[test]
fn jacobi_failure_is_reported() {
    let basis = el(&[("a", 0), ("b", 0), ("c", 0)]);
    let entries = vec![
        (vec![0, 1], SparseVec::unit(2)),
        (vec![0, 2], SparseVec::unit(0)),
    ];
    let l = LInfinityStructure::new("bad", basis, entries, 2).unwrap();
    let r = validate(&l);
    assert!(!r.pass());
    assert_eq!(r.residuals[0].args, vec!["a", "b", "c"]);
}

/// Jacobi and Leibniz in the DGLA form, written out by hand.
#[test]
fn dgla_identities_agree_with_textbook_forms() {
    let l = fixtures::load("harrison-d2").unwrap();
    let d = |x: usize| l.bracket(&[x]);
    let br = |x: &SparseVec, y: &SparseVec| l.bracket_elements(&[x, y]);
    for x in 0..l.dim() {
        for y in 0..l.dim() {
            for z in 0..l.dim() {
                let (ex, ey, ez) = (SparseVec::unit(x), SparseVec::unit(y), SparseVec::unit(z));
                let (dx, dy) = (l.degree(x), l.degree(y));
                let lhs = br(&ex, &br(&ey, &ez));
                let rhs = br(&br(&ex, &ey), &ez)
                    .add_scaled(&if (dx * dy) % 2 == 0 { q(1) } else { q(-1) }, &br(&ey, &br(&ex, &ez)));
                assert_eq!(lhs, rhs);
                let mut args = vec![x, y, z];
                args.sort();
                assert!(jacobiator(&l, &args).is_zero());
            }
            assert!(d(x).is_zero());
        }
    }
}

#[test]
fn malformed_definitions_are_rejected() {
    let bad_degree = r#"{"name":"b","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],
        "brackets":[{"args":["x","y"],"value":[{"gen":"y","coef":"1"}]}],"max_arity":2}"#;
    assert!(matches!(LInfinityStructure::from_json(bad_degree), Err(Error::BracketDegree { .. })));
    let unknown = r#"{"name":"b","generators":[{"name":"x","degree":1}],
        "brackets":[{"args":["z"],"value":[]}],"max_arity":2}"#;
    assert!(matches!(LInfinityStructure::from_json(unknown), Err(Error::UnknownGenerator(_))));
    let even_square = r#"{"name":"b","generators":[{"name":"x","degree":0}],
        "brackets":[{"args":["x","x"],"value":[{"gen":"x","coef":"1"}]}],"max_arity":2}"#;
    assert!(LInfinityStructure::from_json(even_square).is_err());
    let twice = r#"{"name":"b","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],
        "brackets":[{"args":["x","x"],"value":[{"gen":"y","coef":"1"}]},
                    {"args":["x","x"],"value":[{"gen":"y","coef":"2"}]}],"max_arity":2}"#;
    assert!(LInfinityStructure::from_json(twice).is_err());
    assert!(LInfinityStructure::from_json("{").is_err());
    let bad_coef = r#"{"name":"b","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],
        "brackets":[{"args":["x"],"value":[{"gen":"y","coef":"1/0"}]}],"max_arity":2}"#;
    assert!(matches!(LInfinityStructure::from_json(bad_coef), Err(Error::Parse { .. })));
}

#[test]
fn argument_order_follows_koszul_rule() {
    // x odd (degree 1), z even (degree 2): [z, x] = -(-1)^{2} [x, z]
    let basis = el(&[("x", 1), ("z", 2), ("w", 3)]);
    let l = LInfinityStructure::new("k", basis, vec![(vec![1, 0], SparseVec::unit(2))], 2).unwrap();
    assert_eq!(l.bracket(&[0, 1]), SparseVec::unit(2).scaled(&q(-1)));
    assert_eq!(l.bracket(&[1, 0]), SparseVec::unit(2));
}

#[test]
fn roundtrip_through_json() {
    for name in fixtures::NAMES {
        let l = fixtures::load(name).unwrap();
        assert_eq!(LInfinityStructure::from_json(&l.to_json()).unwrap(), l);
    }
}

#[test]
fn bianchi_holds_for_dgla_fixtures() {
    for name in fixtures::NAMES {
        assert!(bianchi_check(&fixtures::load_positive(name).unwrap()).unwrap(), "{name}");
    }
}

#[test]
fn ce_differentials_of_small_fixtures() {
    let cases = [("abelian2", "x'", q(1), 1u32), ("odd-square", "x'^2", qf(1, 2), 2), ("koszul-x2", "x'^2", q(1), 2)];
    for (name, expect, coef, w) in cases {
        let ce = ce_algebra(&fixtures::load(name).unwrap()).unwrap();
        let db = ce.d(&ce.dual_generator("y").unwrap(), None);
        assert_eq!(db.terms.len(), 1, "{name}");
        let (m, c) = db.terms.iter().next().unwrap();
        assert_eq!(ce.ring.monomial_to_string(m), expect);
        assert_eq!(*c, coef);
        assert_eq!(m.weight(), w);
        assert!(ce.d(&ce.dual_generator("x").unwrap(), None).is_zero());
    }
}

#[test]
fn ce_differential_squares_to_zero() {
    for name in fixtures::NAMES {
        let ce = ce_algebra(&fixtures::load_positive(name).unwrap()).unwrap();
        assert!(ce.d_squared_on_generators().is_empty(), "{name}");
        let c = ce.complex(-5, 5);
        assert!(c.check_differential().is_ok(), "{name}");
    }
}

#[test]
fn ce_cohomology_in_degree_zero() {
    let h0 = |name: &str, w: u32| {
        let ce = ce_algebra(&fixtures::load(name).unwrap()).unwrap();
        ce.complex(-3, w).cohomology_dim(0).unwrap()
    };
    assert_eq!(h0("abelian2", 3), 1);
    assert_eq!(h0("odd-square", 3), 2);
    assert_eq!(h0("koszul-x2", 3), 2);
}

#[test]
fn ce_requires_positive_degrees() {
    assert!(ce_algebra(&fixtures::load("harrison-d2").unwrap()).is_err());
}

#[test]
fn flipped_sign_breaks_nothing_in_ce_itself() {
    // the flipped table is still a valid CE algebra; it is the comparison map that breaks
    let ce = ce_algebra_with(&fixtures::load("odd-square").unwrap(), CeOptions { flip_binary_sign: true }).unwrap();
    let db = ce.d(&ce.dual_generator("y").unwrap(), None);
    assert_eq!(db.terms.values().next().unwrap(), &qf(-1, 2));
}

#[test]
fn koszul_brackets_reproduce_polynomial() {
    let x2 = koszul_from_polynomial("k", &["x"], &["y"], &[vec![(vec![2], q(1))]]).unwrap();
    let fx = fixtures::load("koszul-x2").unwrap();
    assert_eq!(x2.stored_brackets(), fx.stored_brackets());
    assert_eq!(x2.basis(), fx.basis());
    let xy = koszul_from_polynomial("k", &["x1", "x2"], &["y"], &[vec![(vec![1, 1], q(1))]]).unwrap();
    assert_eq!(xy.bracket(&[0, 1]), SparseVec::unit(2));
    let cubic = koszul_from_polynomial("c", &["x"], &["y"], &[vec![(vec![3], q(1))]]).unwrap();
    assert_eq!(cubic.bracket(&[0, 0, 0]), SparseVec::unit(1).scaled(&q(6)));
    assert!(validate(&cubic).pass());
    let ce = ce_algebra(&cubic).unwrap();
    let db = ce.d(&ce.dual_generator("y").unwrap(), None);
    assert_eq!(ce.ring.poly_to_string(&db), "x'^3");
    assert!(koszul_from_polynomial("c", &["x"], &["y"], &[vec![(vec![0], q(1))]]).is_err());
}

#[test]
fn harrison_dimensions() {
    let dims: Vec<usize> = (0..4).map(|k| harrison_cochains(2, k).dim()).collect();
    assert_eq!(dims, vec![4, 6, 4, 6]);
    let dims1: Vec<usize> = (0..3).map(|k| harrison_cochains(1, k).dim()).collect();
    assert_eq!(dims1, vec![1, 1, 0]);
}

fn product(d: usize, table: impl Fn(usize, usize) -> Vec<(usize, i64)>) -> Vec<Q> {
    let mut c = vec![q(0); d * d * d];
    for a in 0..d {
        for b in 0..d {
            for (o, x) in table(a, b) {
                c[(a * d + b) * d + o] = q(x);
            }
        }
    }
    c
}

#[test]
fn associative_products_are_maurer_cartan() {
    let mu = product(2, |a, b| if a == b { vec![(a, 1)] } else { vec![] });
    assert!(gerstenhaber(2, &mu, 1, &mu, 1).iter().all(|x| *x == q(0)));
    let coords = harrison_coordinates(2, 1, &mu).expect("commutative product is Harrison");
    let l = fixtures::load("harrison-d2").unwrap();
    let offset = l.basis_in_degree(1)[0];
    let v = coords.shifted(offset);
    assert!(l.bracket_elements(&[&v, &v]).is_zero());
    // e0 e0 = e1 and everything else zero is associative too; e0 e0 = e0 + e1 is not
    let nilp = product(2, |a, b| if a == 0 && b == 0 { vec![(1, 1)] } else { vec![] });
    assert!(gerstenhaber(2, &nilp, 1, &nilp, 1).iter().all(|x| *x == q(0)));
    let bad = product(2, |a, b| match (a, b) {
        (0, 0) => vec![(0, 1), (1, 1)],
        (0, 1) | (1, 0) => vec![(1, 1)],
        _ => vec![(0, 1)],
    });
    assert!(gerstenhaber(2, &bad, 1, &bad, 1).iter().any(|x| *x != q(0)));
}

#[test]
fn harrison_bracket_is_antisymmetric() {
    let l = fixtures::load("harrison-d2").unwrap();
    for a in 0..l.dim() {
        for b in 0..l.dim() {
            let s = if (l.degree(a) * l.degree(b)) % 2 == 0 { q(-1) } else { q(1) };
            assert_eq!(l.bracket(&[a, b]), l.bracket(&[b, a]).scaled(&s));
        }
    }
    assert_eq!(harrison_fixture(2, 2).unwrap(), l);
}

#[test]
fn sharp_keeps_differential_only() {
    let l = fixtures::load("abelian2").unwrap();
    assert_eq!(l.sharp().stored_brackets(), l.stored_brackets());
    let h = fixtures::load("heis").unwrap();
    assert!(h.sharp().stored_brackets().is_empty());
    assert!(Poly::zero().is_zero());
}
