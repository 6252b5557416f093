//! The simplicial commutative algebra `O(MC^•(L))`, truncated at polynomial weight `< W`.

use std::collections::BTreeMap;

use num_traits::One;

use super::coordinates::{McCoordinates, PolynomialMap};
use super::locus::McLocus;
use crate::complexes::BasisLabel;
use crate::error::Result;
use crate::matrix::{SparseMatrix, SparseVec};
use crate::poly::{monomials_of_weight, Monomial, Poly};
use crate::scalar::Q;
use crate::simplicial::ez::SimplicialAlgebra;
use crate::simplicial::module::SimplicialModule;

#[derive(Clone, Debug)]
pub struct FunctionsAlgebra {
    pub weight_bound: u32,
    /// Monomial basis per level, by weight then monomial order.
    pub bases: Vec<Vec<Monomial>>,
    pub algebra: SimplicialAlgebra,
    index: Vec<BTreeMap<Monomial, usize>>,
}

impl FunctionsAlgebra {
    /// Levels `0..=top`; faces are `(d^i)^*`, degeneracies `(s^i)^*`.
    pub fn new(locus: &McLocus, top: usize, weight_bound: u32) -> Result<Self> {
        let bases: Vec<Vec<Monomial>> = (0..=top)
            .map(|n| (0..weight_bound).flat_map(|w| monomials_of_weight(&locus.coordinates(n).ring, w)).collect())
            .collect();
        let index: Vec<BTreeMap<Monomial, usize>> =
            bases.iter().map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect()).collect();
        let pull = |f: &PolynomialMap, src: usize, tgt: usize| -> SparseMatrix {
            // f: MC^src -> MC^tgt, pulled back as O(MC^tgt) -> O(MC^src)
            let (cs, ct) = (locus.coordinates(src), locus.coordinates(tgt));
            let cols = bases[tgt]
                .iter()
                .map(|m| {
                    let p = f.pull_back(&Poly::monomial(m.clone(), Q::one()), cs, ct, Some(weight_bound));
                    SparseVec::from_pairs(p.terms.into_iter().map(|(mm, c)| (index[src][&mm], c)))
                })
                .collect();
            SparseMatrix::from_columns(bases[src].len(), cols).expect("in range")
        };
        let mut faces = Vec::new();
        let mut degens = Vec::new();
        for n in 0..=top {
            faces.push(if n == 0 { vec![] } else { (0..=n).map(|i| Ok(pull(&locus.coface(n, i)?, n - 1, n))).collect::<Result<Vec<_>>>()? });
            degens.push(if n == top { vec![] } else { (0..=n).map(|i| Ok(pull(&locus.codegeneracy(n, i)?, n + 1, n))).collect::<Result<Vec<_>>>()? });
        }
        let labels = (0..=top)
            .map(|n| {
                let ring = &locus.coordinates(n).ring;
                bases[n].iter().map(|m| BasisLabel::new(m.weight(), ring.monomial_to_string(m))).collect()
            })
            .collect();
        let module = SimplicialModule::new(labels, faces, degens)?;
        let mut mult = Vec::new();
        let mut unit = Vec::new();
        for n in 0..=top {
            let ring = &locus.coordinates(n).ring;
            let d = bases[n].len();
            let mut trip = Vec::new();
            for (i, a) in bases[n].iter().enumerate() {
                for (j, b) in bases[n].iter().enumerate() {
                    if a.weight() + b.weight() >= weight_bound {
                        continue;
                    }
                    if let Some((neg, m)) = ring.mono_mul(a, b) {
                        trip.push((index[n][&m], i * d + j, crate::scalar::sign(neg)));
                    }
                }
            }
            mult.push(SparseMatrix::from_triplets(d, d * d, trip)?);
            unit.push(SparseVec::unit(index[n][&Monomial::one()]));
        }
        let algebra = SimplicialAlgebra::new(module, mult, unit)?;
        Ok(Self { weight_bound, bases, algebra, index })
    }

    pub fn module(&self) -> &SimplicialModule {
        &self.algebra.module
    }

    pub fn index_of(&self, n: usize, m: &Monomial) -> Option<usize> {
        self.index[n].get(m).copied()
    }

    /// Coordinates of a polynomial on `MC^n` in the monomial basis, truncated.
    pub fn vector(&self, n: usize, p: &Poly) -> SparseVec {
        SparseVec::from_pairs(p.terms.iter().filter_map(|(m, c)| self.index_of(n, m).map(|i| (i, c.clone()))))
    }

    pub fn coordinates<'a>(&self, locus: &'a McLocus, n: usize) -> &'a McCoordinates {
        locus.coordinates(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn simplicial_identities_and_linear_part() {
        let l = McLocus::new(&fixtures::load_positive("heis").unwrap(), 3).unwrap();
        let f = FunctionsAlgebra::new(&l, 3, 3).unwrap();
        assert!(f.module().check_identities().is_ok());
        assert!(f.algebra.check_multiplicative());
        // weight-one part is spanned by the coordinates
        for n in 0..=3 {
            let lin = f.module().labels[n].iter().filter(|b| b.weight == 1).count();
            assert_eq!(lin, l.coordinates(n).len());
        }
        assert_eq!(f.module().dim(0), 1 + 2 + 3);
    }
}
