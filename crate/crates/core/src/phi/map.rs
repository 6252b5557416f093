//! `Φ: O(MC(L)) -> N(O(MC^•(L)))`, from Chevalley-Eilenberg cochains to normalized
//! functions, built on generators and extended by the shuffle product.

use std::collections::BTreeMap;


use crate::complexes::{ChainMap, TruncatedComplex, Witness};
use crate::error::{Error, Result};
use crate::lie::{ce_algebra_with, CeAlgebra, CeOptions, LInfinityStructure};
use crate::matrix::{SparseMatrix, SparseVec};
use crate::mc::{FunctionsAlgebra, McLocus};
use crate::poly::{Monomial, Poly};
use crate::scalar::sign;
use crate::simplicial::ez::ShuffleProduct;

/// Image of one dual basis element.
#[derive(Clone, Debug)]
pub struct PhiGenerator {
    /// Basis element `b ∈ L^{n+1}` whose dual is mapped.
    pub basis: usize,
    pub level: usize,
    /// `(-1)^n x_{0..n-1, b}` as a function on `MC^n`; without the sign `Φ d = -∂ Φ`.
    pub function: SparseVec,
    /// Its class in `N_n`.
    pub class: SparseVec,
}

#[derive(Debug)]
pub struct PhiMap {
    pub top: usize,
    pub weight_bound: u32,
    pub ce: CeAlgebra,
    pub locus: McLocus,
    pub functions: FunctionsAlgebra,
    pub shuffle: ShuffleProduct,
    pub source: TruncatedComplex,
    pub generators: Vec<PhiGenerator>,
    pub map: ChainMap,
    /// Ring generator of `O(MC(L))` to entry of `generators`.
    by_ring_id: BTreeMap<usize, usize>,
}

impl PhiMap {
    /// Levels `0..=top`, CE degrees `>= -top`, weights `< weight_bound`.
    pub fn new(l: &LInfinityStructure, top: usize, weight_bound: u32) -> Result<Self> {
        Self::with_options(l, top, weight_bound, CeOptions::default())
    }

    /// `opts` alters only the source differential; the target is always built from `l`.
    pub fn with_options(l: &LInfinityStructure, top: usize, weight_bound: u32, opts: CeOptions) -> Result<Self> {
        if weight_bound == 0 {
            return Err(Error::Range("the weight bound must be at least 1".into()));
        }
        let ce = ce_algebra_with(l, opts)?;
        let locus = McLocus::new(l, top)?;
        let functions = FunctionsAlgebra::new(&locus, top, weight_bound)?;
        let shuffle = ShuffleProduct::new(&functions.algebra)?;
        let source = ce.complex(-(top as i32), weight_bound);
        let mut generators = Vec::new();
        let mut by_ring_id = BTreeMap::new();
        for b in 0..l.dim() {
            let n = l.degree(b) as usize - 1;
            if n > top {
                continue;
            }
            let subset: Vec<usize> = (0..n).collect();
            let g = locus.coordinates(n).generator(&subset, b).expect("top block exists");
            let function = functions.vector(n, &Poly::var(g));
            let function = function.scaled(&sign(n % 2 == 1));
            let class = shuffle.chains().proj[n].apply(&function);
            by_ring_id.insert(ce.generator_of[b], generators.len());
            generators.push(PhiGenerator { basis: b, level: n, function, class });
        }
        let mut this = Self {
            top,
            weight_bound,
            ce,
            locus,
            functions,
            shuffle,
            source,
            generators,
            map: ChainMap { maps: BTreeMap::new() },
            by_ring_id,
        };
        let basis = this.ce.monomial_basis(-(top as i32), weight_bound);
        let mut maps = BTreeMap::new();
        for (deg, monos) in &basis {
            let cols = monos.iter().map(|m| this.apply_monomial(m).1).collect();
            maps.insert(*deg, SparseMatrix::from_columns(this.target().dim(*deg), cols)?);
        }
        this.map = ChainMap { maps };
        Ok(this)
    }

    pub fn target(&self) -> &TruncatedComplex {
        &self.shuffle.chains().normalized.complex
    }

    pub fn generator_of_basis(&self, b: usize) -> Option<&PhiGenerator> {
        self.by_ring_id.get(&self.ce.generator_of[b]).map(|i| &self.generators[*i])
    }

    /// `Φ` of a CE monomial: the ordered shuffle product of generator images.
    pub fn apply_monomial(&self, m: &Monomial) -> (usize, SparseVec) {
        let mut level = 0;
        let mut acc = self.shuffle.unit().clone();
        for (id, e) in &m.0 {
            let g = &self.generators[self.by_ring_id[&(*id as usize)]];
            for _ in 0..*e {
                acc = self.shuffle.multiply(level, &acc, g.level, &g.class);
                level += g.level;
            }
        }
        (level, acc)
    }

    /// Generators whose function is not killed by some `∂_i`, `i >= 1`, as `(basis, i)`.
    pub fn normalized_membership(&self) -> Vec<(usize, usize)> {
        let m = self.functions.module();
        let mut out = Vec::new();
        for g in &self.generators {
            for i in 1..=g.level {
                if !m.face(g.level, i).apply(&g.function).is_zero() {
                    out.push((g.basis, i));
                }
            }
        }
        out
    }

    /// `Φ ∘ d = ∂ ∘ Φ` on every stored block.
    pub fn chain_map_check(&self) -> std::result::Result<(), Witness> {
        self.map.check(&self.source, self.target(), -(self.top as i32)..0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chain_map_with_a_level_two_generator() {
        let l = fixtures::three_step();
        assert!(crate::lie::validate(&l).pass());
        let phi = PhiMap::new(&l, 3, 3).unwrap();
        assert!(phi.normalized_membership().is_empty());
        assert_eq!(phi.chain_map_check(), Ok(()));
    }

    #[test]
    fn flipped_binary_sign_is_detected() {
        let l = fixtures::load_positive("odd-square").unwrap();
        let phi = PhiMap::with_options(&l, 2, 3, CeOptions { flip_binary_sign: true }).unwrap();
        let w = phi.chain_map_check().unwrap_err();
        assert_eq!((w.degree, w.defect_weight), (-1, Some(2)));
    }

    #[test]
    fn chain_map_on_fixtures() {
        for name in fixtures::NAMES {
            let l = fixtures::load_positive(name).unwrap();
            let phi = PhiMap::new(&l, 3, 3).unwrap();
            assert!(phi.normalized_membership().is_empty(), "{name}");
            assert_eq!(phi.chain_map_check(), Ok(()), "{name}");
        }
    }
}
