//! For abelian `L`, `MC^•(L)` is the cosimplicial vector space `K^•(L_+[1])`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::LInfinityStructure;
use crate::matrix::{SparseMatrix, SparseVec};
use crate::mc::McLocus;
use crate::scalar::binomial;
use crate::simplicial::kfunctor::{coconnective, KFunctor};
use crate::simplicial::lambda::Lambda;
use crate::simplicial::simplex::SimplexMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoldKanVerdict {
    /// `(dim MC^n, dim K^n)` per level.
    pub dims: Vec<(usize, usize)>,
    pub isomorphic: bool,
    /// First structure map that fails to commute, as `("d" | "s", level, index)`.
    pub failure: Option<(String, usize, usize)>,
}

impl DoldKanVerdict {
    pub fn pass(&self) -> bool {
        self.isomorphic && self.failure.is_none()
    }
}

/// `Z^k = L^{k+1}` with the differential of `L`.
fn shifted_complex(l: &LInfinityStructure) -> Result<crate::complexes::TruncatedComplex> {
    let top = l.max_degree().unwrap_or(1).max(1) as usize;
    let bases: Vec<Vec<usize>> = (0..top).map(|k| l.basis_in_degree(k as i32 + 1)).collect();
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let d = (0..top.saturating_sub(1))
        .map(|k| {
            let cols = bases[k]
                .iter()
                .map(|b| {
                    let img = l.bracket(&[*b]);
                    SparseVec::from_pairs(img.iter().map(|(c, x)| (bases[k + 1].iter().position(|t| *t == c).expect("degree one up"), x.clone())))
                })
                .collect();
            SparseMatrix::from_columns(dims[k + 1], cols)
        })
        .collect::<Result<Vec<_>>>()?;
    coconnective(&dims, &d)
}

/// `x ↦ ξ - e_0 F(ξ)` read as an element of `Λ^n ⊗ L_+[1]` in degree 0.
fn embedding_matrix(locus: &McLocus, kf: &KFunctor, n: usize) -> Result<SparseMatrix> {
    let l = &locus.lie;
    let lam = Lambda::new(n);
    let mut off = vec![0];
    for k in 0..=kf.top_degree() {
        off.push(off[k] + binomial(n + 1, k) * l.dim_in_degree(k as i32 + 1));
    }
    let (w, eta) = locus.graph_embedding(n)?;
    let ncoords = locus.coordinates(n).len();
    let mut trip = Vec::new();
    for (b, poly) in &eta.coeffs {
        let k = l.degree(*b) as usize - 1;
        let z = l.basis_in_degree(k as i32 + 1).iter().position(|x| x == b).expect("own degree");
        for (set, coeff) in w.split(poly) {
            let j = lam.index(&set).expect("subset of 0..=n");
            for (m, c) in &coeff.terms {
                if m.weight() != 1 {
                    return Err(Error::Malformed("the embedding is not linear; is the structure abelian?".into()));
                }
                trip.push((off[k] + j * l.dim_in_degree(k as i32 + 1) + z, m.0[0].0 as usize, c.clone()));
            }
        }
    }
    SparseMatrix::from_triplets(off[kf.top_degree() + 1], ncoords, trip)
}

pub fn abelian_dold_kan_check(l: &LInfinityStructure, top: usize) -> Result<DoldKanVerdict> {
    if !l.is_abelian() {
        return Err(Error::Malformed(format!("`{}` has brackets of arity >= 2", l.name)));
    }
    let locus = McLocus::new(l, top)?;
    let kf = KFunctor::new(&shifted_complex(l)?, top)?;
    let mut dims = Vec::new();
    let mut embeddings = Vec::new();
    let mut isomorphic = true;
    for n in 0..=top {
        let t = embedding_matrix(&locus, &kf, n)?;
        let cocycles = kf.cocycles(n);
        let in_cocycles = t.columns().iter().all(|v| cocycles.try_coordinates(v).is_some());
        let nc = locus.coordinates(n).len();
        dims.push((nc, cocycles.dim()));
        isomorphic &= in_cocycles && nc == cocycles.dim() && nc == kf.expected_dim(n) && t.rank() == nc;
        embeddings.push(t);
    }
    let mut failure = None;
    'outer: for n in 1..=top {
        let maps = (0..=n)
            .map(|i| ("d", n, i, SimplexMap::coface(n, i)))
            .chain((0..n).map(|i| ("s", n - 1, i, SimplexMap::codegeneracy(n - 1, i))));
        for (kind, lvl, i, phi) in maps {
            let f = locus.structure_map(&phi)?;
            let lin = f.linear_part(locus.coordinates(phi.source()).len());
            let lhs = embeddings[phi.target()].mul(&lin)?;
            let rhs = kf.structure_cocycles(&phi).mul(&embeddings[phi.source()])?;
            if !f.is_linear() || lhs != rhs {
                failure = Some((kind.to_string(), lvl, i));
                break 'outer;
            }
        }
    }
    Ok(DoldKanVerdict { dims, isomorphic, failure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn abelian_fixture() {
        let v = abelian_dold_kan_check(&fixtures::load_positive("abelian2").unwrap(), 3).unwrap();
        assert!(v.pass(), "{v:?}");
        assert_eq!(v.dims, vec![(1, 1), (2, 2), (3, 3), (4, 4)]);
    }

    #[test]
    fn brackets_are_rejected() {
        assert!(abelian_dold_kan_check(&fixtures::load_positive("heis").unwrap(), 2).is_err());
    }
}
