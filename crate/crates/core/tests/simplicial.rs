use dmc_core::fixtures;
use dmc_core::matrix::SparseMatrix;
use dmc_core::mc::{FunctionsAlgebra, McLocus};
use dmc_core::scalar::q;
use dmc_core::simplicial::ez::{symmetric_algebra, ExternalProduct, ShuffleProduct};
use dmc_core::simplicial::kfunctor::{coconnective, KFunctor};
use dmc_core::simplicial::module::{random_family, standard_simplex};
use dmc_core::simplicial::simplex::all_maps;
use dmc_core::simplicial::surjection::duality_report;
use dmc_core::simplicial::{Lambda, SimplexMap, SurjectionComplex, ZeroSlot};

/// Number of strictly increasing `len`-tuples in `0..=n`, by enumeration.
fn increasing(n: usize, len: usize) -> usize {
    fn rec(start: usize, n: usize, left: usize) -> usize {
        if left == 0 {
            return 1;
        }
        (start..=n).map(|v| rec(v + 1, n, left - 1)).sum()
    }
    rec(0, n, len)
}

/// Number of ways to write `total` as an ordered sum of `parts` non-negative parts.
fn weak_compositions(total: usize, parts: usize) -> usize {
    if parts == 0 {
        return usize::from(total == 0);
    }
    (0..=total).map(|first| weak_compositions(total - first, parts - 1)).sum()
}

#[test]
fn surjection_levels_count_maps() {
    for n in 0..=5 {
        let s = SurjectionComplex::new(n);
        for k in 0..=n + 1 {
            // level k holds all monotone maps [n] -> [k], recorded by fibre sizes
            assert_eq!(s.level(k).len(), weak_compositions(n + 1, k + 1), "n {n}, k {k}");
            assert_eq!(s.dim(k), increasing(n, k), "n {n}, k {k}");
        }
    }
}

#[test]
fn pairing_is_perfect_up_to_five() {
    for n in 1..=5 {
        let r = duality_report(n);
        assert!(r.nondegenerate.iter().all(|b| *b), "n {n}");
        assert!(r.matches_determinant.iter().all(|b| *b), "n {n}");
        assert!(r.unitriangular_degree_one, "n {n}");
        assert!(r.differential_compatible, "n {n}");
        assert!(r.append_pairing_degenerate, "n {n}");
    }
}

/// `⟨φ^* f, λ⟩ = ⟨f, φ_* λ⟩` for `φ: [m] -> [n]`.
#[test]
fn pairing_is_equivariant() {
    for m in 0..=3 {
        for n in 0..=3 {
            let (sm, sn) = (SurjectionComplex::new(m), SurjectionComplex::new(n));
            let (lm, ln) = (Lambda::new(m), Lambda::new(n));
            for phi in all_maps(m, n) {
                for k in 0..=m.min(n) + 1 {
                    let pull = sn.pullback(&phi, k, &sm);
                    let lhs = pull.transpose().mul(&sm.pairing(k)).unwrap();
                    let mut trip = Vec::new();
                    for (c, j) in lm.basis(k).iter().enumerate() {
                        if let Some(img) = Lambda::map(&phi, j) {
                            trip.push((ln.index(&img).unwrap(), c, q(1)));
                        }
                    }
                    let push = SparseMatrix::from_triplets(ln.basis(k).len(), lm.basis(k).len(), trip).unwrap();
                    let rhs = sn.pairing(k).mul(&push).unwrap();
                    assert_eq!(lhs, rhs, "{phi:?} in degree {k}");
                }
            }
        }
    }
}

#[test]
fn coproduct_is_dual_to_the_exterior_product() {
    for n in 1..=3 {
        let s = SurjectionComplex::new(n);
        for p in 0..=2 {
            for qq in 0..=2 - p {
                assert_eq!(s.coproduct_duality(p, qq), None, "n {n}, ({p}, {qq})");
            }
        }
    }
}

#[test]
fn conventions_differ_by_an_isomorphism() {
    for n in 1..=3 {
        let s = SurjectionComplex::new(n);
        for k in 0..=n + 1 {
            let iso = s.convention_iso(k);
            assert_eq!(iso.rank(), s.dim(k));
            if k < n + 1 {
                let a = s.differential(k, ZeroSlot::Append).mul(&iso).unwrap();
                let b = s.convention_iso(k + 1).mul(&s.differential(k, ZeroSlot::Prepend)).unwrap();
                assert_eq!(a, b, "n {n}, k {k}");
            }
        }
    }
}

#[test]
fn simplex_maps_count_and_compose() {
    for m in 0..=3 {
        for n in 0..=3 {
            assert_eq!(all_maps(m, n).len(), weak_compositions(m + 1, n + 1));
            for phi in all_maps(m, n) {
                let (degens, faces) = phi.factor();
                assert_eq!(SimplexMap::from_factors(m, &degens, &faces).unwrap(), phi);
            }
        }
    }
}

#[test]
fn standard_simplex_normalizes_to_nondegenerate_simplices() {
    for n in 0..=3 {
        let s = standard_simplex(n, 4);
        assert!(s.check_identities().is_ok());
        let norm = s.normalize_kernel().unwrap();
        for k in 0..=4 {
            assert_eq!(norm.complex.dim(-(k as i32)), increasing(n, k + 1), "Δ^{n} level {k}");
        }
    }
}

#[test]
fn kernel_and_quotient_forms_agree_on_random_families() {
    for seed in 0..20 {
        let m = random_family(seed, 3);
        assert!(m.check_identities().is_ok(), "seed {seed}");
        let (k, qt) = (m.normalize_kernel().unwrap(), m.normalize_quotient().unwrap());
        let iso = m.kernel_to_quotient().unwrap();
        for n in 0..=3 {
            let d = -(n as i32);
            assert_eq!(k.complex.dim(d), qt.complex.dim(d), "seed {seed}");
            assert_eq!(iso[n].rank(), k.complex.dim(d), "seed {seed} level {n}");
        }
        let dims: Vec<i64> = (0..=3).map(|n| k.complex.dim(-n) as i64).collect();
        assert_eq!(dims, m.dold_kan_dims(), "seed {seed}");
    }
}

fn sample_complex() -> dmc_core::complexes::TruncatedComplex {
    let d0 = SparseMatrix::from_triplets(2, 2, [(0, 0, q(1))]).unwrap();
    coconnective(&[2, 2, 1], &[d0, SparseMatrix::zeros(1, 2)]).unwrap()
}

#[test]
fn k_functor_realizations_and_naturality() {
    let k = KFunctor::new(&sample_complex(), 3).unwrap();
    for n in 0..=3 {
        assert_eq!(k.maps(n).dim(), k.expected_dim(n));
        assert!(k.verify_iso(n));
    }
    for m in 0..=2 {
        for n in 0..=2 {
            for phi in all_maps(m, n) {
                assert!(k.natural(&phi), "{phi:?}");
            }
        }
    }
}

#[test]
fn eilenberg_zilber_on_k_functor_duals() {
    let dual = KFunctor::new(&sample_complex(), 3).unwrap().dual_simplicial(3).unwrap();
    assert_eq!(ExternalProduct::new(&dual, &dual).unwrap().verify(3), Ok(()));
    assert_eq!(ExternalProduct::new(&dual, &random_family(3, 3)).unwrap().verify(3), Ok(()));
}

#[test]
fn eilenberg_zilber_on_functions_of_mc() {
    let l = fixtures::load_positive("odd-square").unwrap();
    let f = FunctionsAlgebra::new(&McLocus::new(&l, 3).unwrap(), 3, 2).unwrap();
    assert_eq!(ExternalProduct::new(f.module(), f.module()).unwrap().verify(3), Ok(()));
    let sp = ShuffleProduct::new(&f.algebra).unwrap();
    assert_eq!(sp.verify(3), Ok(()));
}

#[test]
fn shuffle_product_on_heis_functions() {
    let l = fixtures::load_positive("heis").unwrap();
    let f = FunctionsAlgebra::new(&McLocus::new(&l, 3).unwrap(), 3, 3).unwrap();
    assert!(f.algebra.check_multiplicative());
    assert_eq!(ShuffleProduct::new(&f.algebra).unwrap().verify(3), Ok(()));
}

#[test]
fn symmetric_algebras_are_bialgebras() {
    for seed in [1, 5] {
        let (alg, comult) = symmetric_algebra(&random_family(seed, 2), 3).unwrap();
        let sp = ShuffleProduct::new(&alg).unwrap();
        assert_eq!(sp.verify(2), Ok(()), "seed {seed}");
        assert_eq!(sp.bialgebra_check(&comult, 2, 3), Ok(()), "seed {seed}");
    }
}
