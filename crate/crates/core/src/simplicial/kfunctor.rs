//! The inverse Dold-Kan functor `K^•` for coconnective cochain complexes, realized two ways:
//!
//! * (A) chain maps `N^*(ℤΔ_n) -> Z^*`;
//! * (B) degree-0 cocycles of `Λ^n ⊗ Z`, with `d(λ ⊗ z) = δλ ⊗ z + (-1)^{|λ|} λ ⊗ d z`.
//!
//! A chain map `h` corresponds to `Σ_k (-1)^k Σ_f f^∨ ⊗ h(f)`, where `f^∨` is the dual
//! basis of `Λ^n` under the pairing.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::lambda::Lambda;
use super::module::SimplicialModule;
use super::simplex::SimplexMap;
use super::surjection::SurjectionComplex;
use crate::complexes::{BasisLabel, TruncatedComplex};
use crate::error::{Error, Result};
use crate::matrix::{Kernel, SparseMatrix, SparseVec};
use crate::scalar::{binomial, sign, Q};

/// Cochain complex concentrated in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct KFunctor {
    dims: Vec<usize>,
    d: Vec<SparseMatrix>,
    labels: Vec<Vec<BasisLabel>>,
    surj: Vec<SurjectionComplex>,
    duals: Vec<Vec<SparseMatrix>>,
    /// Sign `ε_k` in front of the degree-`k` part of the isomorphism (A) -> (B).
    pub iso_sign: fn(usize) -> Q,
}

/// `ε_k = (-1)^k`, the sign that makes (A) -> (B) land in cocycles.
pub fn standard_sign(k: usize) -> Q {
    sign(k % 2 == 1)
}

impl KFunctor {
    /// `z` must live in degrees `>= 0`; levels up to `max_level` are prepared.
    pub fn new(z: &TruncatedComplex, max_level: usize) -> Result<Self> {
        if z.degrees().iter().any(|n| *n < 0) {
            return Err(Error::Range("K needs a complex in nonnegative degrees".into()));
        }
        let top = z.degrees().iter().copied().max().unwrap_or(0).max(0) as usize;
        let dims = (0..=top).map(|k| z.dim(k as i32)).collect();
        let d = (0..=top).map(|k| z.d(k as i32)).collect();
        let labels = (0..=top).map(|k| z.basis(k as i32).to_vec()).collect();
        let surj: Vec<SurjectionComplex> = (0..=max_level).map(SurjectionComplex::new).collect();
        // f^∨ is column f of P^{-1}, with P the pairing (rows N^k, columns Λ^{-k})
        let duals = surj
            .iter()
            .map(|s| {
                (0..=top)
                    .map(|k| {
                        if k > s.top() {
                            SparseMatrix::zeros(0, 0)
                        } else {
                            s.pairing(k).inverse().expect("pairing is nondegenerate")
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { dims, d, labels, surj, duals, iso_sign: standard_sign })
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn max_level(&self) -> usize {
        self.surj.len() - 1
    }

    fn n_dim(&self, n: usize, k: usize) -> usize {
        if k > self.surj[n].top() {
            0
        } else {
            self.surj[n].dim(k)
        }
    }

    fn a_offsets(&self, n: usize) -> Vec<usize> {
        let mut o = vec![0];
        for k in 0..=self.top_degree() {
            o.push(o[k] + self.n_dim(n, k) * self.dims[k]);
        }
        o
    }

    fn b_offsets(&self, n: usize) -> Vec<usize> {
        let mut o = vec![0];
        for k in 0..=self.top_degree() {
            o.push(o[k] + binomial(n + 1, k) * self.dims[k]);
        }
        o
    }

    /// Realization (A): the kernel of `h ↦ d_Z h - h d` in `⊕_k Hom(N^k, Z^k)`, with
    /// `h_k` stored column-major at `offset_k + f * dim Z^k + z`.
    pub fn maps(&self, n: usize) -> Kernel {
        let top = self.top_degree();
        let off = self.a_offsets(n);
        let width = off[top + 1];
        let mut rows = Vec::new();
        for k in 0..top {
            let (nk, nk1) = (self.n_dim(n, k), self.n_dim(n, k + 1));
            let dn = if nk1 == 0 { SparseMatrix::zeros(0, nk) } else { self.surj[n].differential(k, super::ZeroSlot::Prepend) };
            // equation for each (f in N^k, z' in Z^{k+1})
            for f in 0..nk {
                for zt in 0..self.dims[k + 1] {
                    let mut e = Vec::new();
                    for zs in 0..self.dims[k] {
                        let c = self.d[k].get(zt, zs);
                        if !c.is_zero() {
                            e.push((off[k] + f * self.dims[k] + zs, c));
                        }
                    }
                    for (g, c) in dn.column(f).iter() {
                        e.push((off[k + 1] + g * self.dims[k + 1] + zt, -c.clone()));
                    }
                    let v = SparseVec::from_pairs(e);
                    if !v.is_zero() {
                        rows.push(v);
                    }
                }
            }
        }
        if rows.is_empty() {
            return Kernel::full(width);
        }
        SparseMatrix::from_columns(width, rows).expect("in range").transpose().kernel()
    }

    /// Realization (B): degree-0 cocycles in `⊕_k (Λ^n)^{-k} ⊗ Z^k`, stored at
    /// `offset_k + j * dim Z^k + z` for the `j`-th subset of size `k`.
    pub fn cocycles(&self, n: usize) -> Kernel {
        let top = self.top_degree();
        let off = self.b_offsets(n);
        let width = off[top + 1];
        let lam = Lambda::new(n);
        // target: ⊕_k (Λ^n)^{-k} ⊗ Z^{k+1}
        let mut toff = vec![0];
        for k in 0..=top {
            let zk1 = if k < top { self.dims[k + 1] } else { 0 };
            toff.push(toff[k] + binomial(n + 1, k) * zk1);
        }
        let mut cols = Vec::with_capacity(width);
        for k in 0..=top {
            let basis = lam.basis(k);
            let lower = if k > 0 { lam.basis(k - 1) } else { vec![] };
            for j in &basis {
                for z in 0..self.dims[k] {
                    let mut e = Vec::new();
                    if k > 0 {
                        for (r, c) in Lambda::delta(j) {
                            let jr = lower.iter().position(|b| *b == r).unwrap();
                            e.push((toff[k - 1] + jr * self.dims[k] + z, c));
                        }
                    }
                    if k < top {
                        let jj = basis.iter().position(|b| b == j).unwrap();
                        let s = sign(k % 2 == 1);
                        for (zt, c) in self.d[k].column(z).iter() {
                            e.push((toff[k] + jj * self.dims[k + 1] + zt, &s * c));
                        }
                    }
                    cols.push(SparseVec::from_pairs(e));
                }
            }
        }
        SparseMatrix::from_columns(toff[top + 1], cols).expect("in range").kernel()
    }

    /// The linear map (A) -> (B) on ambient coordinates.
    pub fn iso(&self, n: usize) -> SparseMatrix {
        let top = self.top_degree();
        let (ao, bo) = (self.a_offsets(n), self.b_offsets(n));
        let mut trip = Vec::new();
        for k in 0..=top {
            let nk = self.n_dim(n, k);
            let eps = (self.iso_sign)(k);
            for f in 0..nk {
                for (j, c) in self.duals[n][k].column(f).iter() {
                    for z in 0..self.dims[k] {
                        trip.push((bo[k] + j * self.dims[k] + z, ao[k] + f * self.dims[k] + z, &eps * c));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(bo[top + 1], ao[top + 1], trip).expect("in range")
    }

    /// Checks that (A) -> (B) maps the chain maps isomorphically onto the cocycles.
    pub fn verify_iso(&self, n: usize) -> bool {
        let a = self.maps(n);
        let b = self.cocycles(n);
        let m = self.iso(n);
        if a.dim() != b.dim() {
            return false;
        }
        let images: Vec<SparseVec> = a.basis.iter().map(|v| m.apply(v)).collect();
        images.iter().all(|v| b.try_coordinates(v).is_some())
            && SparseMatrix::from_columns(m.rows(), images).map(|x| x.rank() == a.dim()).unwrap_or(false)
    }

    /// `Σ_k C(n, k) dim Z^k`.
    pub fn expected_dim(&self, n: usize) -> usize {
        (0..=self.top_degree()).map(|k| binomial(n, k) * self.dims[k]).sum()
    }

    /// `φ_*: K^m -> K^n` for `φ: [m] -> [n]` in realization (A), on ambient coordinates:
    /// `h ↦ h ∘ φ^*`.
    pub fn structure_maps(&self, phi: &SimplexMap) -> SparseMatrix {
        let (m, n) = (phi.source(), phi.target());
        let top = self.top_degree();
        let (src, tgt) = (self.a_offsets(m), self.a_offsets(n));
        let mut trip = Vec::new();
        for k in 0..=top {
            if self.n_dim(n, k) == 0 || self.n_dim(m, k) == 0 {
                continue;
            }
            let pb = self.surj[n].pullback(phi, k, &self.surj[m]);
            for f in 0..self.n_dim(n, k) {
                for (g, c) in pb.column(f).iter() {
                    for z in 0..self.dims[k] {
                        trip.push((tgt[k] + f * self.dims[k] + z, src[k] + g * self.dims[k] + z, c.clone()));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(tgt[top + 1], src[top + 1], trip).expect("in range")
    }

    /// `φ_* ⊗ 1` on `Λ^m ⊗ Z -> Λ^n ⊗ Z` in realization (B).
    pub fn structure_cocycles(&self, phi: &SimplexMap) -> SparseMatrix {
        let (m, n) = (phi.source(), phi.target());
        let top = self.top_degree();
        let (src, tgt) = (self.b_offsets(m), self.b_offsets(n));
        let (lm, ln) = (Lambda::new(m), Lambda::new(n));
        let mut trip = Vec::new();
        for k in 0..=top {
            let tb = ln.basis(k);
            for (j, set) in lm.basis(k).iter().enumerate() {
                if let Some(img) = Lambda::map(phi, set) {
                    let t = tb.iter().position(|b| *b == img).unwrap();
                    for z in 0..self.dims[k] {
                        trip.push((tgt[k] + t * self.dims[k] + z, src[k] + j * self.dims[k] + z, Q::from_integer(1.into())));
                    }
                }
            }
        }
        SparseMatrix::from_triplets(tgt[top + 1], src[top + 1], trip).expect("in range")
    }

    /// `iso_n ∘ φ_*^{(A)} = φ_*^{(B)} ∘ iso_m` on the chain maps at level `m`.
    pub fn natural(&self, phi: &SimplexMap) -> bool {
        let (m, n) = (phi.source(), phi.target());
        let a = self.maps(m);
        let l = self.iso(n).mul(&self.structure_maps(phi)).expect("shapes");
        let r = self.structure_cocycles(phi).mul(&self.iso(m)).expect("shapes");
        a.basis.iter().all(|v| l.apply(v) == r.apply(v))
    }

    /// The cosimplicial vector space `K^•(Z)` in realization (B), dualized to a simplicial
    /// module: level `n` has the dual basis of the cocycle basis, faces are transposes
    /// of cofaces. Labels record the degree of `Z` as weight `0`.
    pub fn dual_simplicial(&self, top: usize) -> Result<SimplicialModule> {
        if top > self.max_level() {
            return Err(Error::Range(format!("levels up to {} prepared, {top} requested", self.max_level())));
        }
        let kers: Vec<Kernel> = (0..=top).map(|n| self.cocycles(n)).collect();
        let coords = |phi: &SimplexMap| -> SparseMatrix {
            let (m, n) = (phi.source(), phi.target());
            let s = self.structure_cocycles(phi);
            let cols = kers[m].basis.iter().map(|v| kers[n].try_coordinates(&s.apply(v)).expect("cocycles map to cocycles")).collect();
            SparseMatrix::from_columns(kers[n].dim(), cols).expect("in range")
        };
        let labels = kers
            .iter()
            .enumerate()
            .map(|(n, k)| (0..k.dim()).map(|i| BasisLabel::new(0, format!("K{n}[{i}]"))).collect())
            .collect();
        let faces = (0..=top)
            .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| coords(&SimplexMap::coface(n, i)).transpose()).collect() })
            .collect();
        let degens = (0..=top)
            .map(|n| if n == top { vec![] } else { (0..=n).map(|i| coords(&SimplexMap::codegeneracy(n, i)).transpose()).collect() })
            .collect();
        SimplicialModule::new(labels, faces, degens)
    }

    pub fn labels(&self, k: usize) -> &[BasisLabel] {
        &self.labels[k]
    }
}

/// A coconnective complex from dimensions and differentials `d_k: Z^k -> Z^{k+1}`.
pub fn coconnective(dims: &[usize], d: &[SparseMatrix]) -> Result<TruncatedComplex> {
    let comps: BTreeMap<i32, Vec<BasisLabel>> =
        dims.iter().enumerate().map(|(k, n)| (k as i32, (0..*n).map(|i| BasisLabel::new(0, format!("z{k}_{i}"))).collect())).collect();
    let diffs = d.iter().enumerate().map(|(k, m)| (k as i32, m.clone())).collect();
    TruncatedComplex::new(comps, diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::simplicial::simplex::all_maps;

    /// `Z^0 -> Z^1` of rank one, plus `Z^2` with zero differential.
    fn sample() -> TruncatedComplex {
        let d0 = SparseMatrix::from_triplets(2, 2, [(0, 0, q(1))]).unwrap();
        let d1 = SparseMatrix::zeros(1, 2);
        coconnective(&[2, 2, 1], &[d0, d1]).unwrap()
    }

    #[test]
    fn realizations_agree() {
        let k = KFunctor::new(&sample(), 3).unwrap();
        for n in 0..=3 {
            assert_eq!(k.maps(n).dim(), k.expected_dim(n), "level {n}");
            assert_eq!(k.cocycles(n).dim(), k.expected_dim(n), "level {n}");
            assert!(k.verify_iso(n), "level {n}");
        }
    }

    #[test]
    fn wrong_sign_breaks_the_iso() {
        let mut k = KFunctor::new(&sample(), 2).unwrap();
        k.iso_sign = |_| q(1);
        assert!(!k.verify_iso(2));
    }

    #[test]
    fn naturality() {
        let k = KFunctor::new(&sample(), 2).unwrap();
        for m in 0..=2 {
            for n in 0..=2 {
                for phi in all_maps(m, n) {
                    assert!(k.natural(&phi), "{phi:?}");
                }
            }
        }
        let s = k.dual_simplicial(2).unwrap();
        assert!(s.check_identities().is_ok());
    }
}
