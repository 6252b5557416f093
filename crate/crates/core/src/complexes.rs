//! Finite cochain complexes bigraded by cohomological degree and weight.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Kernel, SparseMatrix, SparseVec, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisLabel {
    pub weight: u32,
    pub name: String,
}

impl BasisLabel {
    pub fn new(weight: u32, name: impl Into<String>) -> Self {
        Self { weight, name: name.into() }
    }
}

/// Where a check failed: the source basis element and the weight of the defect.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub degree: i32,
    pub weight: u32,
    pub element: String,
    pub defect_weight: Option<u32>,
}

/// Cochain complex with finitely many nonzero degrees; `d(n)` maps degree `n` to `n + 1`.
///
/// The differential never lowers weight, so dropping weights `>= W` gives a quotient
/// complex and keeping a single weight gives the associated graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedComplex {
    components: BTreeMap<i32, Vec<BasisLabel>>,
    differential: BTreeMap<i32, SparseMatrix>,
}

impl TruncatedComplex {
    pub fn new(components: BTreeMap<i32, Vec<BasisLabel>>, differential: BTreeMap<i32, SparseMatrix>) -> Result<Self> {
        for (n, d) in &differential {
            let src = components.get(n).map(|c| c.len()).unwrap_or(0);
            let tgt = components.get(&(n + 1)).map(|c| c.len()).unwrap_or(0);
            if d.cols() != src || d.rows() != tgt {
                return Err(Error::Dimension(format!(
                    "differential at degree {n} is {}x{}, expected {tgt}x{src}",
                    d.rows(),
                    d.cols()
                )));
            }
            for (c, col) in d.columns().iter().enumerate() {
                for (r, _) in col.iter() {
                    if components[&(n + 1)][r].weight < components[n][c].weight {
                        return Err(Error::Malformed(format!("differential lowers weight at degree {n}")));
                    }
                }
            }
        }
        Ok(Self { components, differential })
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.components.keys().copied().collect()
    }

    pub fn basis(&self, n: i32) -> &[BasisLabel] {
        self.components.get(&n).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn dim(&self, n: i32) -> usize {
        self.basis(n).len()
    }

    pub fn d(&self, n: i32) -> SparseMatrix {
        match self.differential.get(&n) {
            Some(m) => m.clone(),
            None => SparseMatrix::zeros(self.dim(n + 1), self.dim(n)),
        }
    }

    pub fn check_differential(&self) -> std::result::Result<(), Witness> {
        for n in self.degrees() {
            let dd = self.d(n + 1).mul(&self.d(n)).expect("composable by construction");
            for (c, col) in dd.columns().iter().enumerate() {
                if let Some((r, _)) = col.iter().next() {
                    let b = &self.basis(n)[c];
                    return Err(Witness {
                        degree: n,
                        weight: b.weight,
                        element: b.name.clone(),
                        defect_weight: Some(self.basis(n + 2)[r].weight),
                    });
                }
            }
        }
        Ok(())
    }

    fn restrict(&self, keep: impl Fn(u32) -> bool) -> TruncatedComplex {
        let idx: BTreeMap<i32, Vec<usize>> = self
            .components
            .iter()
            .map(|(n, b)| (*n, (0..b.len()).filter(|i| keep(b[*i].weight)).collect()))
            .collect();
        let components = self
            .components
            .iter()
            .map(|(n, b)| (*n, idx[n].iter().map(|i| b[*i].clone()).collect()))
            .collect();
        let empty = Vec::new();
        let differential = self
            .differential
            .iter()
            .map(|(n, d)| (*n, d.restrict(idx.get(&(n + 1)).unwrap_or(&empty), &idx[n])))
            .collect();
        TruncatedComplex { components, differential }
    }

    /// Quotient by the subcomplex of weights `>= bound`.
    pub fn quotient_by_weight(&self, bound: u32) -> TruncatedComplex {
        self.restrict(|w| w < bound)
    }

    /// Associated graded piece of weight `w` for the weight filtration.
    pub fn graded_piece(&self, w: u32) -> TruncatedComplex {
        self.restrict(|x| x == w)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.components.values().flatten().map(|b| b.weight).max()
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.differential.iter().all(|(n, d)| {
            d.columns()
                .iter()
                .enumerate()
                .all(|(c, col)| col.iter().all(|(r, _)| self.basis(n + 1)[r].weight == self.basis(*n)[c].weight))
        })
    }

    pub fn cocycles(&self, n: i32) -> Kernel {
        self.d(n).kernel()
    }

    pub fn coboundaries(&self, n: i32) -> Vec<SparseVec> {
        self.d(n - 1).columns().to_vec()
    }

    fn require_complex(&self) -> Result<()> {
        self.check_differential().map_err(|w| Error::NotAComplex {
            degree: w.degree,
            weight: w.weight,
            detail: format!("d^2 of {} is nonzero", w.element),
        })
    }

    pub fn cohomology_dim(&self, n: i32) -> Result<usize> {
        self.require_complex()?;
        Ok(self.cocycles(n).dim() - self.d(n - 1).rank())
    }

    pub fn cohomology_dims(&self, degrees: impl IntoIterator<Item = i32>) -> Result<BTreeMap<i32, usize>> {
        self.require_complex()?;
        Ok(degrees.into_iter().map(|n| (n, self.cocycles(n).dim() - self.d(n - 1).rank())).collect())
    }

    /// Dimensions of `F^w H / F^(w+1) H` for the filtration induced on cohomology.
    pub fn filtered_cohomology_dims(&self, n: i32) -> Result<BTreeMap<u32, usize>> {
        self.require_complex()?;
        let z = self.cocycles(n);
        let b = self.coboundaries(n);
        let basis = self.basis(n);
        let max_w = basis.iter().map(|l| l.weight).max().unwrap_or(0);
        let base = Subspace::spanned_by(basis.len(), &b).dim();
        let mut above: Vec<usize> = Vec::new();
        for w in 0..=max_w + 1 {
            let mut s = Subspace::spanned_by(basis.len(), &b);
            for v in &z_high_span(&z, basis, w) {
                s.insert(v);
            }
            above.push(s.dim() - base);
        }
        Ok((0..=max_w).map(|w| (w, above[w as usize] - above[w as usize + 1])).filter(|(_, d)| *d > 0).collect())
    }
}

/// Basis of the cocycles supported in weights `>= w`.
fn z_high_span(z: &Kernel, basis: &[BasisLabel], w: u32) -> Vec<SparseVec> {
    let low: Vec<usize> = (0..basis.len()).filter(|i| basis[*i].weight < w).collect();
    if low.is_empty() {
        return z.basis.clone();
    }
    let m = SparseMatrix::from_columns(basis.len(), z.basis.clone()).expect("kernel vectors fit");
    let restricted = m.restrict(&low, &(0..z.dim()).collect::<Vec<_>>());
    let k = restricted.kernel();
    k.basis.iter().map(|c| z.combine(c)).collect()
}

/// Degree-wise linear maps between two truncated complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub maps: BTreeMap<i32, SparseMatrix>,
}

impl ChainMap {
    pub fn map(&self, n: i32, src: &TruncatedComplex, tgt: &TruncatedComplex) -> SparseMatrix {
        self.maps.get(&n).cloned().unwrap_or_else(|| SparseMatrix::zeros(tgt.dim(n), src.dim(n)))
    }

    /// First basis element where `d f != f d`, checked on the given source degrees.
    pub fn check(
        &self,
        src: &TruncatedComplex,
        tgt: &TruncatedComplex,
        degrees: impl IntoIterator<Item = i32>,
    ) -> std::result::Result<(), Witness> {
        for n in degrees {
            let lhs = tgt.d(n).mul(&self.map(n, src, tgt)).expect("composable");
            let rhs = self.map(n + 1, src, tgt).mul(&src.d(n)).expect("composable");
            let diff = lhs.sub(&rhs).expect("same shape");
            for (c, col) in diff.columns().iter().enumerate() {
                if let Some((r, _)) = col.iter().next() {
                    let b = &src.basis(n)[c];
                    return Err(Witness {
                        degree: n,
                        weight: b.weight,
                        element: b.name.clone(),
                        defect_weight: Some(tgt.basis(n + 1)[r].weight),
                    });
                }
            }
        }
        Ok(())
    }

    fn restrict(&self, src: &TruncatedComplex, tgt: &TruncatedComplex, keep: impl Fn(u32) -> bool) -> ChainMap {
        let maps = self
            .maps
            .iter()
            .map(|(n, m)| {
                let cols: Vec<usize> = (0..src.dim(*n)).filter(|i| keep(src.basis(*n)[*i].weight)).collect();
                let rows: Vec<usize> = (0..tgt.dim(*n)).filter(|i| keep(tgt.basis(*n)[*i].weight)).collect();
                (*n, m.restrict(&rows, &cols))
            })
            .collect();
        ChainMap { maps }
    }

    pub fn quotient_by_weight(&self, src: &TruncatedComplex, tgt: &TruncatedComplex, bound: u32) -> ChainMap {
        self.restrict(src, tgt, |w| w < bound)
    }

    pub fn graded_piece(&self, src: &TruncatedComplex, tgt: &TruncatedComplex, w: u32) -> ChainMap {
        self.restrict(src, tgt, |x| x == w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedMap {
    pub degree: i32,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
}

impl InducedMap {
    pub fn injective(&self) -> bool {
        self.rank == self.dim_source
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.dim_target
    }

    pub fn is_iso(&self) -> bool {
        self.injective() && self.surjective()
    }
}

/// Rank of `H^n(f)`, computed as `dim(f(Z_src) + B_tgt) - dim B_tgt`.
pub fn induced_cohomology_map(
    src: &TruncatedComplex,
    tgt: &TruncatedComplex,
    f: &ChainMap,
    n: i32,
) -> Result<InducedMap> {
    let dim_source = src.cohomology_dim(n)?;
    let dim_target = tgt.cohomology_dim(n)?;
    let fm = f.map(n, src, tgt);
    let b = tgt.coboundaries(n);
    let mut s = Subspace::spanned_by(tgt.dim(n), &b);
    let base = s.dim();
    for z in &src.cocycles(n).basis {
        s.insert(&fm.apply(z));
    }
    Ok(InducedMap { degree: n, dim_source, dim_target, rank: s.dim() - base })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn labels(ws: &[u32]) -> Vec<BasisLabel> {
        ws.iter().enumerate().map(|(i, w)| BasisLabel::new(*w, format!("v{i}"))).collect()
    }

    /// ℚ --1--> ℚ in degrees 0, 1 plus a lone class in degree 1.
    fn small() -> TruncatedComplex {
        let comps = BTreeMap::from([(0, labels(&[0])), (1, labels(&[0, 1]))]);
        let d = SparseMatrix::from_triplets(2, 1, [(0, 0, q(1))]).unwrap();
        TruncatedComplex::new(comps, BTreeMap::from([(0, d)])).unwrap()
    }

    #[test]
    fn cohomology_of_small_complex() {
        let c = small();
        assert_eq!(c.cohomology_dims([0, 1]).unwrap(), BTreeMap::from([(0, 0), (1, 1)]));
    }

    #[test]
    fn broken_differential_is_reported() {
        let comps = BTreeMap::from([(0, labels(&[0])), (1, labels(&[0])), (2, labels(&[0]))]);
        let one = SparseMatrix::from_triplets(1, 1, [(0, 0, q(1))]).unwrap();
        let c = TruncatedComplex::new(comps, BTreeMap::from([(0, one.clone()), (1, one)])).unwrap();
        let w = c.check_differential().unwrap_err();
        assert_eq!(w.degree, 0);
        assert!(matches!(c.cohomology_dims([0]), Err(Error::NotAComplex { .. })));
    }

    #[test]
    fn identity_induces_iso() {
        let c = small();
        let f = ChainMap {
            maps: BTreeMap::from([(0, SparseMatrix::identity(1)), (1, SparseMatrix::identity(2))]),
        };
        assert!(f.check(&c, &c, [0, 1]).is_ok());
        assert!(induced_cohomology_map(&c, &c, &f, 1).unwrap().is_iso());
    }

    #[test]
    fn filtration_on_cohomology() {
        // degree 0: a (w0), b (w1); d a = c (w1), d b = c
        let comps = BTreeMap::from([(0, labels(&[0, 1])), (1, labels(&[1]))]);
        let d = SparseMatrix::from_triplets(1, 2, [(0, 0, q(1)), (0, 1, q(1))]).unwrap();
        let c = TruncatedComplex::new(comps, BTreeMap::from([(0, d)])).unwrap();
        // H^0 spanned by a - b, whose lowest weight is 0
        assert_eq!(c.filtered_cohomology_dims(0).unwrap(), BTreeMap::from([(0, 1)]));
    }
}
