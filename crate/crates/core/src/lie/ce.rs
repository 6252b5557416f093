//! Chevalley-Eilenberg cochains `O(L) = Sym((L_+[1])^∨)` with the differential
//! read off from the curvature of the universal element.

use std::collections::BTreeMap;

use super::structure::LInfinityStructure;
use super::tensor::{curvature, TensorElement};
use crate::complexes::{BasisLabel, TruncatedComplex};
use crate::error::{Error, Result};
use crate::matrix::{SparseMatrix, SparseVec};
use crate::poly::{monomials_of_weight, Derivation, Generator, Monomial, Poly, PolyRing};
use crate::scalar::Q;

/// The dual generator of a basis element `x` is written `x'`.
pub fn dual_name(name: &str) -> String {
    format!("{name}'")
}

#[derive(Clone, Debug)]
pub struct CeAlgebra {
    pub lie: LInfinityStructure,
    pub ring: PolyRing,
    /// Ring id of the dual generator of each basis element.
    pub generator_of: Vec<usize>,
    /// `d` on each ring generator.
    pub images: Vec<Poly>,
}

/// Options for deliberately broken variants used as negative controls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CeOptions {
    pub flip_binary_sign: bool,
}

/// `d(c') = coefficient of c in F(Σ_b b' ⊗ b)`.
pub fn ce_algebra(l: &LInfinityStructure) -> Result<CeAlgebra> {
    ce_algebra_with(l, CeOptions::default())
}

pub fn ce_algebra_with(l: &LInfinityStructure, opts: CeOptions) -> Result<CeAlgebra> {
    if let Some(b) = l.basis().iter().find(|b| b.degree < 1) {
        return Err(Error::Malformed(format!(
            "generator `{}` has degree {}; restrict to positive degrees first",
            b.name, b.degree
        )));
    }
    let gens: Vec<Generator> = l.basis().iter().map(|b| Generator::new(dual_name(&b.name), 1 - b.degree)).collect();
    let ring = PolyRing::new(gens)?;
    let generator_of: Vec<usize> =
        l.basis().iter().map(|b| ring.id(&dual_name(&b.name))).collect::<Result<_>>()?;
    let mut xi = TensorElement::default();
    for (b, g) in generator_of.iter().enumerate() {
        xi.coeffs.insert(b, Poly::var(*g));
    }
    let lie = if opts.flip_binary_sign { flip_binary(l) } else { l.clone() };
    let f = curvature(&ring, &lie, &xi, None, None);
    let mut images = vec![Poly::zero(); ring.ngens()];
    for (b, g) in generator_of.iter().enumerate() {
        images[*g] = f.coeff(b);
    }
    Derivation::new(&ring, images.clone(), 1)?;
    Ok(CeAlgebra { lie: l.clone(), ring, generator_of, images })
}

fn flip_binary(l: &LInfinityStructure) -> LInfinityStructure {
    let entries = l
        .stored_brackets()
        .iter()
        .map(|(a, v)| (a.clone(), if a.len() == 2 { v.scaled(&-Q::from_integer(1.into())) } else { v.clone() }))
        .collect();
    LInfinityStructure::new(l.name.clone(), l.basis().to_vec(), entries, l.max_arity).expect("same shape")
}

impl CeAlgebra {
    pub fn derivation(&self) -> Derivation<'_> {
        Derivation::new(&self.ring, self.images.clone(), 1).expect("checked at construction")
    }

    pub fn d(&self, p: &Poly, bound: Option<u32>) -> Poly {
        self.derivation().apply(p, bound)
    }

    /// `d^2` on generators; `d^2` is a derivation, so this decides `d^2 = 0`.
    pub fn d_squared_on_generators(&self) -> Vec<(String, Poly)> {
        let der = self.derivation();
        let mut bad = Vec::new();
        for g in 0..self.ring.ngens() {
            let dd = der.apply(&self.images[g], None);
            if !dd.is_zero() {
                bad.push((self.ring.generators()[g].name.clone(), dd));
            }
        }
        bad
    }

    pub fn dual_generator(&self, name: &str) -> Result<Poly> {
        Ok(Poly::var(self.generator_of[self.lie.index(name)?]))
    }

    /// Monomials of weight below `bound`, bucketed by degree, in `[min_degree, 0]`.
    pub fn monomial_basis(&self, min_degree: i32, bound: u32) -> BTreeMap<i32, Vec<Monomial>> {
        let mut out: BTreeMap<i32, Vec<Monomial>> = (min_degree..=0).map(|n| (n, Vec::new())).collect();
        for w in 0..bound {
            for m in monomials_of_weight(&self.ring, w) {
                let n = self.ring.degree(&m);
                if n >= min_degree && n <= 0 {
                    out.get_mut(&n).unwrap().push(m);
                }
            }
        }
        out
    }

    /// Truncated complex in degrees `[min_degree, 0]`, weights below `bound`.
    pub fn complex(&self, min_degree: i32, bound: u32) -> TruncatedComplex {
        let basis = self.monomial_basis(min_degree, bound);
        let index: BTreeMap<i32, BTreeMap<&Monomial, usize>> = basis
            .iter()
            .map(|(n, ms)| (*n, ms.iter().enumerate().map(|(i, m)| (m, i)).collect()))
            .collect();
        let der = self.derivation();
        let mut diffs = BTreeMap::new();
        for (n, ms) in &basis {
            let Some(target) = index.get(&(n + 1)) else { continue };
            let cols: Vec<SparseVec> = ms
                .iter()
                .map(|m| {
                    let dm = der.apply_monomial(m, Some(bound));
                    SparseVec::from_pairs(dm.terms.iter().map(|(t, c)| (target[t], c.clone())))
                })
                .collect();
            diffs.insert(*n, SparseMatrix::from_columns(target.len(), cols).expect("indices from target basis"));
        }
        let comps = basis
            .iter()
            .map(|(n, ms)| {
                (*n, ms.iter().map(|m| BasisLabel::new(m.weight(), self.ring.monomial_to_string(m))).collect())
            })
            .collect();
        TruncatedComplex::new(comps, diffs).expect("d preserves degree bookkeeping")
    }
}
