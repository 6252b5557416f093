//! Coordinates on `MC^n(L)` and polynomial maps between them.
//!
//! A point of `MC^n(L)` is determined by its `e_0`-free part
//! `ξ = Σ_S e_{S+1} x_S`, `S ⊆ {0..n-1}`, `x_S ∈ L^{|S|+1}`, where
//! `e_{S+1} = e_{s_1+1} .. e_{s_k+1} = d^0(e_S)` spans the image of `d^0`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::LInfinityStructure;
use crate::matrix::{SparseMatrix, SparseVec};
use crate::poly::{Generator, Monomial, Poly, PolyRing, Substitution};
use crate::simplicial::simplex::subsets;
use crate::simplicial::Lambda;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Block {
    pub subset: Vec<usize>,
    /// Indices into the basis of `L`, all of degree `|subset| + 1`.
    pub basis: Vec<usize>,
    /// Generator id of the first coordinate of the block.
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct McCoordinates {
    pub level: usize,
    pub blocks: Vec<Block>,
    /// `ℚ[x_{S,b}]`, all generators in degree 0, in block order.
    pub ring: PolyRing,
}

pub fn subset_name(s: &[usize]) -> String {
    s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl McCoordinates {
    /// Blocks ordered by size of `S`, then lexicographically; `|S| + 1` runs up to the top
    /// degree of `L`.
    pub fn new(l: &LInfinityStructure, level: usize) -> Result<Self> {
        if l.min_degree().is_some_and(|d| d < 1) {
            return Err(Error::Malformed("coordinates need a structure in positive degrees".into()));
        }
        let top = l.max_degree().unwrap_or(0).max(0) as usize;
        let mut blocks = Vec::new();
        let mut gens = Vec::new();
        for k in 0..=level {
            if k + 1 > top {
                break;
            }
            for s in subsets(level, k) {
                let basis = l.basis_in_degree(k as i32 + 1);
                let offset = gens.len();
                for b in &basis {
                    gens.push(Generator::new(format!("{}[{}]", l.basis_name(*b), subset_name(&s)), 0));
                }
                blocks.push(Block { subset: s, basis, offset });
            }
        }
        Ok(Self { level, blocks, ring: PolyRing::new(gens)? })
    }

    pub fn len(&self) -> usize {
        self.ring.ngens()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn block(&self, subset: &[usize]) -> Option<&Block> {
        self.blocks.iter().find(|b| b.subset == subset)
    }

    /// Generator id of `x_{S,b}`.
    pub fn generator(&self, subset: &[usize], b: usize) -> Option<usize> {
        let blk = self.block(subset)?;
        blk.basis.iter().position(|x| *x == b).map(|p| blk.offset + p)
    }

    /// `(S, b)` of a generator id.
    pub fn locate(&self, g: usize) -> (&Block, usize) {
        let blk = self.blocks.iter().rev().find(|b| b.offset <= g).expect("generator in range");
        (blk, blk.basis[g - blk.offset])
    }

    /// Linear change to the coordinates of the expansion `ξ ≡ Σ_S ε_S x^ε_S` modulo `e_0`:
    /// returns the maps taking `ε`-coordinates to vertex coordinates and back.
    pub fn epsilon_change(&self) -> Result<(PolynomialMap, PolynomialMap)> {
        let n = self.len();
        let mut trip = Vec::new();
        for blk in &self.blocks {
            // ε_S mod e_0 = Σ_T c_{S,T} e_{T+1}, so x^v_T = Σ_S c_{S,T} x^ε_S
            for (u, c) in Lambda::epsilon_monomial(&blk.subset) {
                if u.contains(&0) {
                    continue;
                }
                let t: Vec<usize> = u.iter().map(|i| i - 1).collect();
                let tb = self.block(&t).expect("same size block");
                for p in 0..blk.basis.len() {
                    trip.push((tb.offset + p, blk.offset + p, c.clone()));
                }
            }
        }
        let v = SparseMatrix::from_triplets(n, n, trip)?;
        let inv = v.inverse()?;
        Ok((PolynomialMap::from_linear(self.level, self.level, &v), PolynomialMap::from_linear(self.level, self.level, &inv)))
    }

    /// Block dimensions keyed by subset.
    pub fn inventory(&self) -> Vec<(Vec<usize>, usize)> {
        self.blocks.iter().map(|b| (b.subset.clone(), b.basis.len())).collect()
    }
}

/// Map `MC^m -> MC^n`, given by one polynomial in the source coordinates per target
/// coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialMap {
    pub source: usize,
    pub target: usize,
    pub images: Vec<Poly>,
}

impl PolynomialMap {
    pub fn identity(c: &McCoordinates) -> Self {
        Self { source: c.level, target: c.level, images: (0..c.len()).map(Poly::var).collect() }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &PolynomialMap, source: &McCoordinates, middle: &McCoordinates) -> Result<PolynomialMap> {
        if next.source != self.target {
            return Err(Error::Dimension(format!("cannot follow a map into level {} by one out of level {}", self.target, next.source)));
        }
        let sub = Substitution::new(&middle.ring, &source.ring, self.images.clone())?;
        Ok(PolynomialMap { source: self.source, target: next.target, images: next.images.iter().map(|p| sub.apply(p, None)).collect() })
    }

    /// The pullback `O(MC^n) -> O(MC^m)` on a polynomial, truncated at weight `< bound`.
    pub fn pull_back(&self, p: &Poly, source: &McCoordinates, target: &McCoordinates, bound: Option<u32>) -> Poly {
        Substitution::new(&target.ring, &source.ring, self.images.clone()).expect("degree 0 images").apply(p, bound)
    }

    pub fn is_linear(&self) -> bool {
        self.images.iter().all(|p| p.terms.keys().all(|m| m.weight() == 1))
    }

    /// Linear part as a matrix (target coordinates by source coordinates).
    pub fn linear_part(&self, source_dim: usize) -> SparseMatrix {
        let cols: Vec<SparseVec> = self
            .images
            .iter()
            .map(|p| SparseVec::from_pairs(p.terms.iter().filter(|(m, _)| m.weight() == 1).map(|(m, c)| (m.0[0].0 as usize, c.clone()))))
            .collect();
        SparseMatrix::from_columns(source_dim, cols).expect("in range").transpose()
    }

    /// Builds a linear map from a matrix (target by source).
    pub fn from_linear(source: usize, target: usize, m: &SparseMatrix) -> Self {
        let t = m.transpose();
        let images = (0..m.rows())
            .map(|r| {
                let mut p = Poly::zero();
                for (c, x) in t.column(r).iter() {
                    p.add_term(Monomial::var(c), x.clone());
                }
                p
            })
            .collect();
        Self { source, target, images }
    }

    pub fn describe(&self, source: &McCoordinates, target: &McCoordinates) -> BTreeMap<String, String> {
        target
            .ring
            .generators()
            .iter()
            .zip(&self.images)
            .map(|(g, p)| (g.name.clone(), source.ring.poly_to_string(p)))
            .collect()
    }
}
