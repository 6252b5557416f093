//! The exterior algebra `Λ^n` on `e_0, .., e_n` (degree -1) with `δ e_i = 1`.
//!
//! Basis monomials are increasing index sets `J`, standing for `e_{j_1} .. e_{j_k}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::simplex::{subsets, SimplexMap};
use crate::error::Result;
use crate::matrix::{SparseMatrix, SparseVec};
use crate::poly::{Generator, PolyRing};
use crate::scalar::{sign, Q};

/// Element of `Λ^n` as a map from index sets to coefficients.
pub type LambdaElement = BTreeMap<Vec<usize>, Q>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lambda {
    pub n: usize,
}

impl Lambda {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    /// Basis of `(Λ^n)^{-k}`.
    pub fn basis(&self, k: usize) -> Vec<Vec<usize>> {
        subsets(self.n + 1, k)
    }

    pub fn index(&self, j: &[usize]) -> Option<usize> {
        self.basis(j.len()).iter().position(|b| b == j)
    }

    /// `e_I e_J = ± e_{I ∪ J}`, or `None` when they share an index.
    pub fn mul(i: &[usize], j: &[usize]) -> Option<(bool, Vec<usize>)> {
        if i.iter().any(|x| j.contains(x)) {
            return None;
        }
        let inversions: usize = i.iter().map(|a| j.iter().filter(|b| *b < a).count()).sum();
        let mut u: Vec<usize> = i.iter().chain(j).copied().collect();
        u.sort_unstable();
        Some((inversions % 2 == 1, u))
    }

    pub fn mul_elements(a: &LambdaElement, b: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::new();
        for (i, x) in a {
            for (j, y) in b {
                if let Some((neg, u)) = Self::mul(i, j) {
                    *out.entry(u).or_insert_with(Q::zero) += sign(neg) * x * y;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `δ(e_{j_1} .. e_{j_k}) = Σ_r (-1)^r e_{J \ j_r}`.
    pub fn delta(j: &[usize]) -> LambdaElement {
        let mut out = LambdaElement::new();
        for r in 0..j.len() {
            let mut rest = j.to_vec();
            rest.remove(r);
            out.insert(rest, sign(r % 2 == 1));
        }
        out
    }

    pub fn delta_element(a: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::new();
        for (j, c) in a {
            for (r, s) in Self::delta(j) {
                *out.entry(r).or_insert_with(Q::zero) += c * s;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `φ(e_J) = e_{φ(j_1)} .. e_{φ(j_k)}`; monotone `φ` never reorders, so only
    /// collisions matter.
    pub fn map(phi: &SimplexMap, j: &[usize]) -> Option<Vec<usize>> {
        let img: Vec<usize> = j.iter().map(|x| phi.apply(*x)).collect();
        if img.windows(2).any(|w| w[0] == w[1]) {
            None
        } else {
            Some(img)
        }
    }

    pub fn map_element(phi: &SimplexMap, a: &LambdaElement) -> LambdaElement {
        let mut out = LambdaElement::new();
        for (j, c) in a {
            if let Some(img) = Self::map(phi, j) {
                *out.entry(img).or_insert_with(Q::zero) += c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Matrix of `δ: (Λ^n)^{-k} -> (Λ^n)^{-k+1}` in the subset bases.
    pub fn delta_matrix(&self, k: usize) -> SparseMatrix {
        let src = self.basis(k);
        let tgt = if k == 0 { Vec::new() } else { self.basis(k - 1) };
        let cols = src
            .iter()
            .map(|j| {
                let d = Self::delta(j);
                SparseVec::from_pairs(d.into_iter().map(|(r, c)| (tgt.iter().position(|t| *t == r).unwrap(), c)))
            })
            .collect();
        SparseMatrix::from_columns(tgt.len(), cols).expect("in range")
    }

    /// `ε_i = e_{i+1} - e_i`, `0 <= i < n`.
    pub fn epsilon(i: usize) -> LambdaElement {
        LambdaElement::from([(vec![i + 1], Q::one()), (vec![i], -Q::one())])
    }

    /// `ε_{s_1} .. ε_{s_k}` for increasing `S`.
    pub fn epsilon_monomial(s: &[usize]) -> LambdaElement {
        s.iter().fold(LambdaElement::from([(vec![], Q::one())]), |acc, i| Self::mul_elements(&acc, &Self::epsilon(*i)))
    }

    /// `e_{s_1+1} .. e_{s_k+1}`, the image of `e_S` under `d^0`.
    pub fn vertex_monomial(s: &[usize]) -> Vec<usize> {
        s.iter().map(|i| i + 1).collect()
    }

    /// Polynomial ring with `e_0, .., e_n` followed by `extra` generators.
    pub fn ring_with(&self, extra: Vec<Generator>) -> Result<PolyRing> {
        let mut gens: Vec<Generator> = (0..=self.n).map(|i| Generator::new(format!("e{i}"), -1)).collect();
        gens.extend(extra);
        PolyRing::new(gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn delta_and_maps() {
        assert_eq!(Lambda::delta(&[0, 1]), LambdaElement::from([(vec![1], q(1)), (vec![0], q(-1))]));
        let s0 = SimplexMap::codegeneracy(0, 0);
        assert_eq!(Lambda::map(&s0, &[0]), Some(vec![0]));
        assert_eq!(Lambda::map(&s0, &[1]), Some(vec![0]));
        assert_eq!(Lambda::map(&s0, &[0, 1]), None);
        assert_eq!(Lambda::map(&SimplexMap::coface(1, 0), &[0]), Some(vec![1]));
        assert_eq!(Lambda::mul(&[1], &[0]), Some((true, vec![0, 1])));
    }

    #[test]
    fn delta_is_a_differential_and_a_derivation() {
        let l = Lambda::new(3);
        for k in 2..=4 {
            assert!(l.delta_matrix(k - 1).mul(&l.delta_matrix(k)).unwrap().nnz() == 0);
        }
        for a in l.basis(2) {
            for b in l.basis(1) {
                let ea = LambdaElement::from([(a.clone(), q(1))]);
                let eb = LambdaElement::from([(b.clone(), q(1))]);
                let lhs = Lambda::delta_element(&Lambda::mul_elements(&ea, &eb));
                let mut rhs = Lambda::mul_elements(&Lambda::delta_element(&ea), &eb);
                for (j, c) in Lambda::mul_elements(&ea, &Lambda::delta_element(&eb)) {
                    *rhs.entry(j).or_insert_with(Q::zero) += c;
                }
                rhs.retain(|_, c| !c.is_zero());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn epsilon_monomials_reduce_to_vertex_monomials_mod_e0() {
        let s = [0, 2];
        let eps = Lambda::epsilon_monomial(&s);
        let free: LambdaElement = eps.into_iter().filter(|(j, _)| !j.contains(&0)).collect();
        // ε_0 ε_2 ≡ e_1 (e_3 - e_2) mod e_0
        assert_eq!(free, LambdaElement::from([(vec![1, 3], q(1)), (vec![1, 2], q(-1))]));
        assert_eq!(Lambda::vertex_monomial(&s), vec![1, 3]);
    }
}
