//! The classical locus `π^0` and the matching maps `MC^n -> M^n(MC)`.

use std::collections::BTreeMap;

use super::locus::McLocus;
use crate::error::{Error, Result};
use crate::matrix::{SparseMatrix, SparseVec, Subspace};
use crate::poly::{Monomial, Poly};

#[derive(Clone, Debug, serde::Serialize)]
pub struct ClassicalLocus {
    /// Nonzero components of `F` on `MC^0 = L^1`.
    pub curvature: Vec<String>,
    /// Nonzero `(d^0)^* g - (d^1)^* g` over the coordinates `g` of `MC^1`.
    pub equalizer: Vec<String>,
    /// The two lists span the same space of polynomials, hence the same ideal.
    pub agree: bool,
}

fn span_equal(a: &[Poly], b: &[Poly]) -> bool {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in a.iter().chain(b) {
        for m in p.terms.keys() {
            let k = index.len();
            index.entry(m.clone()).or_insert(k);
        }
    }
    let vec = |p: &Poly| SparseVec::from_pairs(p.terms.iter().map(|(m, c)| (index[m], c.clone())));
    let sa = Subspace::spanned_by(index.len(), a.iter().map(vec).collect::<Vec<_>>().iter());
    let sb = Subspace::spanned_by(index.len(), b.iter().map(vec).collect::<Vec<_>>().iter());
    sa.dim() == sb.dim() && a.iter().all(|p| sb.contains(&vec(p)))
}

pub fn classical_locus(locus: &McLocus) -> Result<ClassicalLocus> {
    let c0 = locus.coordinates(0);
    let curv: Vec<Poly> = locus.curvature_coordinates(0)?.into_iter().map(|x| x.2).filter(|p| !p.is_zero()).collect();
    let (d0, d1) = (locus.coface(1, 0)?, locus.coface(1, 1)?);
    let eq: Vec<Poly> = d0.images.iter().zip(&d1.images).map(|(a, b)| a.sub(b)).filter(|p| !p.is_zero()).collect();
    Ok(ClassicalLocus {
        curvature: curv.iter().map(|p| c0.ring.poly_to_string(p)).collect(),
        equalizer: eq.iter().map(|p| c0.ring.poly_to_string(p)).collect(),
        agree: span_equal(&curv, &eq),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MatchingVerdict {
    pub level: usize,
    pub dim_source: usize,
    pub dim_matching: usize,
    pub rank: usize,
    pub surjective: bool,
}

fn linear(locus: &McLocus, n: usize, i: usize) -> Result<SparseMatrix> {
    let s = locus.codegeneracy(n, i)?;
    if !s.is_linear() {
        return Err(Error::Malformed(format!("s^{i} out of MC^{} is not linear", n + 1)));
    }
    Ok(s.linear_part(locus.coordinates(n + 1).len()))
}

/// `M^n` is the equalizer of `(x^i) ↦ (s^i x^j)` and `(x^i) ↦ (s^{j-1} x^i)` over
/// `i < j < n`; codegeneracies are linear, so it is a subspace and surjectivity of
/// `x ↦ (s^i x)_i` is a rank comparison.
pub fn matching_check(locus: &McLocus, n: usize) -> Result<MatchingVerdict> {
    let dn = locus.coordinates(n).len();
    if n == 0 {
        return Ok(MatchingVerdict { level: 0, dim_source: dn, dim_matching: 0, rank: 0, surjective: true });
    }
    let d1 = locus.coordinates(n - 1).len();
    let width = n * d1;
    // constraints s^i x^j - s^{j-1} x^i = 0 for i < j < n
    let mut rows: Vec<SparseVec> = Vec::new();
    if n >= 2 {
        let d2 = locus.coordinates(n - 2).len();
        let s: Vec<SparseMatrix> = (0..n - 1).map(|i| linear(locus, n - 2, i)).collect::<Result<_>>()?;
        for i in 0..n {
            for j in i + 1..n {
                let a = &s[i];
                let b = &s[j - 1];
                for r in 0..d2 {
                    let mut e = Vec::new();
                    for c in 0..d1 {
                        let (x, y) = (a.get(r, c), b.get(r, c));
                        if !num_traits::Zero::is_zero(&x) {
                            e.push((j * d1 + c, x));
                        }
                        if !num_traits::Zero::is_zero(&y) {
                            e.push((i * d1 + c, -y));
                        }
                    }
                    rows.push(SparseVec::from_pairs(e));
                }
            }
        }
    }
    let dim_matching = if rows.is_empty() { width } else { SparseMatrix::from_columns(width, rows)?.transpose().kernel().dim() };
    let blocks: Vec<SparseMatrix> = (0..n).map(|i| linear(locus, n - 1, i)).collect::<Result<_>>()?;
    let stacked = SparseMatrix::vstack(&blocks.iter().collect::<Vec<_>>())?;
    let rank = stacked.rank();
    Ok(MatchingVerdict { level: n, dim_source: dn, dim_matching, rank, surjective: rank == dim_matching })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn classical_loci() {
        let l = McLocus::new(&fixtures::load_positive("heis").unwrap(), 1).unwrap();
        let c = classical_locus(&l).unwrap();
        assert!(c.agree);
        assert_eq!(c.curvature, vec!["x1[]*x2[]".to_string()]);
    }

    #[test]
    fn matching_maps_are_onto() {
        let l = McLocus::new(&fixtures::load_positive("odd-square").unwrap(), 3).unwrap();
        for n in 0..=3 {
            let v = matching_check(&l, n).unwrap();
            assert!(v.surjective, "{v:?}");
        }
    }
}
