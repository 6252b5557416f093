//! The cosimplicial abelian group `ℤΔ_n^•` and its normalized cochains `N^*(ℤΔ_n)`.
//!
//! Level `k` is spanned by the monotone maps `f: [n] -> [k]`, written by their fibre
//! sizes `(n_0, .., n_k)`. Cofaces insert a zero, codegeneracies merge neighbours.
//!
//! Two normalizations are exposed. The kernel form is `∩_i ker s^i` with the
//! alternating coface differential. The quotient form divides by `Σ_{i∈I} im d^i`:
//! with [`ZeroSlot::Prepend`] the index set is `i >= 1` and a zero may only sit in
//! slot 0, with [`ZeroSlot::Append`] it is `i <= k` and a zero may only sit in the
//! last slot.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::lambda::Lambda;
use super::simplex::{compositions, shuffles, SimplexMap};
use crate::matrix::{Kernel, SparseMatrix, SparseVec};
use crate::scalar::{sign, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroSlot {
    Prepend,
    Append,
}

/// An element of a tensor power `N^{a_1} ⊗ .. ⊗ N^{a_r}`, keyed by basis indices.
pub type TensorVec = BTreeMap<Vec<usize>, Q>;

#[derive(Clone, Debug)]
pub struct SurjectionComplex {
    n: usize,
    /// Cache of kernel forms and lifts per degree.
    lifts: Vec<SparseMatrix>,
    kernels: Vec<Kernel>,
}

fn index_of(tuples: &[Vec<usize>]) -> HashMap<&[usize], usize> {
    tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect()
}

impl SurjectionComplex {
    /// Precomputes normalizations in degrees `0..=n+1`.
    pub fn new(n: usize) -> Self {
        let mut s = Self { n, lifts: Vec::new(), kernels: Vec::new() };
        for k in 0..=n + 1 {
            let ker = s.kernel_form(k);
            let p = s.projection(k, ZeroSlot::Prepend).mul(&ker.inclusion()).expect("shapes");
            let inv = p.inverse().expect("kernel form maps isomorphically onto the quotient");
            s.lifts.push(ker.inclusion().mul(&inv).expect("shapes"));
            s.kernels.push(ker);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Top degree with a nonzero normalized group.
    pub fn top(&self) -> usize {
        self.n + 1
    }

    /// All maps `[n] -> [k]`.
    pub fn level(&self, k: usize) -> Vec<Vec<usize>> {
        compositions(self.n + 1, k + 1)
    }

    /// Normalized basis tuples in degree `k`.
    pub fn basis(&self, k: usize, conv: ZeroSlot) -> Vec<Vec<usize>> {
        self.level(k)
            .into_iter()
            .filter(|t| match conv {
                ZeroSlot::Prepend => t[1..].iter().all(|x| *x > 0),
                ZeroSlot::Append => t[..k].iter().all(|x| *x > 0),
            })
            .collect()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.basis(k, ZeroSlot::Prepend).len()
    }

    pub fn coface(&self, k: usize, i: usize) -> SparseMatrix {
        let src = self.level(k);
        let tgt = self.level(k + 1);
        let idx = index_of(&tgt);
        let cols = src
            .iter()
            .map(|t| {
                let mut u = t.clone();
                u.insert(i, 0);
                SparseVec::unit(idx[u.as_slice()])
            })
            .collect();
        SparseMatrix::from_columns(tgt.len(), cols).expect("in range")
    }

    pub fn codegeneracy(&self, k: usize, i: usize) -> SparseMatrix {
        let src = self.level(k);
        let tgt = self.level(k - 1);
        let idx = index_of(&tgt);
        let cols = src
            .iter()
            .map(|t| {
                let mut u = t.clone();
                let merged = u[i] + u[i + 1];
                u[i] = merged;
                u.remove(i + 1);
                SparseVec::unit(idx[u.as_slice()])
            })
            .collect();
        SparseMatrix::from_columns(tgt.len(), cols).expect("in range")
    }

    /// `Σ_i (-1)^i d^i` from level `k` to level `k + 1`.
    pub fn alternating_coface(&self, k: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.level(k + 1).len(), self.level(k).len());
        for i in 0..=k + 1 {
            m = m.add_scaled(&sign(i % 2 == 1), &self.coface(k, i)).expect("same shape");
        }
        m
    }

    /// `∩_{0<=i<k} ker s^i` inside level `k`.
    pub fn kernel_form(&self, k: usize) -> Kernel {
        if k == 0 {
            return Kernel::full(self.level(0).len());
        }
        let blocks: Vec<SparseMatrix> = (0..k).map(|i| self.codegeneracy(k, i)).collect();
        SparseMatrix::vstack(&blocks.iter().collect::<Vec<_>>()).expect("same width").kernel()
    }

    /// Quotient map from level `k` onto the normalized basis.
    pub fn projection(&self, k: usize, conv: ZeroSlot) -> SparseMatrix {
        let basis = self.basis(k, conv);
        let idx = index_of(&basis);
        let cols = self
            .level(k)
            .iter()
            .map(|t| match idx.get(t.as_slice()) {
                Some(i) => SparseVec::unit(*i),
                None => SparseVec::new(),
            })
            .collect();
        SparseMatrix::from_columns(basis.len(), cols).expect("in range")
    }

    /// Inverse of the projection restricted to the kernel form: prepend basis -> level `k`.
    pub fn lift(&self, k: usize) -> &SparseMatrix {
        &self.lifts[k]
    }

    pub fn kernel(&self, k: usize) -> &Kernel {
        &self.kernels[k]
    }

    /// Differential on the normalized basis: prepend or append a zero.
    pub fn differential(&self, k: usize, conv: ZeroSlot) -> SparseMatrix {
        let src = self.basis(k, conv);
        let tgt = self.basis(k + 1, conv);
        let idx = index_of(&tgt);
        let cols = src
            .iter()
            .map(|t| {
                let mut u = t.clone();
                let (slot, s) = match conv {
                    ZeroSlot::Prepend => (0, Q::one()),
                    ZeroSlot::Append => (k + 1, sign((k + 1) % 2 == 1)),
                };
                u.insert(slot, 0);
                match idx.get(u.as_slice()) {
                    Some(i) => SparseVec::from_pairs([(*i, s)]),
                    None => SparseVec::new(),
                }
            })
            .collect();
        SparseMatrix::from_columns(tgt.len(), cols).expect("in range")
    }

    /// The differential induced on the quotient by the alternating coface sum,
    /// computed through the kernel form.
    pub fn induced_differential(&self, k: usize, conv: ZeroSlot) -> SparseMatrix {
        let lift = self.lift_to(k, conv);
        self.projection(k + 1, conv).mul(&self.alternating_coface(k)).and_then(|m| m.mul(&lift)).expect("shapes")
    }

    fn lift_to(&self, k: usize, conv: ZeroSlot) -> SparseMatrix {
        match conv {
            ZeroSlot::Prepend => self.lifts[k].clone(),
            ZeroSlot::Append => {
                let incl = self.kernels[k].inclusion();
                let p = self.projection(k, conv).mul(&incl).expect("shapes");
                incl.mul(&p.inverse().expect("append quotient is also a complement")).expect("shapes")
            }
        }
    }

    /// Change of basis from the prepend quotient to the append quotient.
    pub fn convention_iso(&self, k: usize) -> SparseMatrix {
        self.projection(k, ZeroSlot::Append).mul(&self.lifts[k]).expect("shapes")
    }

    /// `φ^*: ℤΔ_n^k -> ℤΔ_m^k`, `f ↦ f ∘ φ`, for `φ: [m] -> [n]`.
    pub fn pullback_level(&self, phi: &SimplexMap, k: usize, source: &SurjectionComplex) -> SparseMatrix {
        assert_eq!(phi.target(), self.n);
        assert_eq!(phi.source(), source.n);
        let tgt = source.level(k);
        let idx = index_of(&tgt);
        let cols = self
            .level(k)
            .iter()
            .map(|t| {
                let f = SimplexMap::from_fibre_sizes(t).expect("valid tuple");
                let g = phi.then(&f).expect("composable");
                SparseVec::unit(idx[g.fibre_sizes().as_slice()])
            })
            .collect();
        SparseMatrix::from_columns(tgt.len(), cols).expect("in range")
    }

    /// `φ^*` on prepend-normalized cochains.
    pub fn pullback(&self, phi: &SimplexMap, k: usize, source: &SurjectionComplex) -> SparseMatrix {
        source
            .projection(k, ZeroSlot::Prepend)
            .mul(&self.pullback_level(phi, k, source))
            .and_then(|m| m.mul(&self.lifts[k]))
            .expect("shapes")
    }

    /// Shuffle coproduct on the unnormalized level `p + q`:
    /// `f ↦ Σ_{(I,J)} ± (s^J f) ⊗ (s^I f)` with `s^J = s^{j_1} .. s^{j_q}`.
    fn coproduct_level(&self, p: usize, q: usize) -> Vec<Vec<(usize, usize, Q)>> {
        let left = index_of_owned(self.level(p));
        let right = index_of_owned(self.level(q));
        let sh = shuffles(p, q);
        self.level(p + q)
            .iter()
            .map(|t| {
                sh.iter()
                    .map(|(i, j, neg)| {
                        let a = merge(t, j);
                        let b = merge(t, i);
                        (left[&a], right[&b], sign(*neg))
                    })
                    .collect()
            })
            .collect()
    }

    /// `c_{p,q}: N^{p+q} -> N^p ⊗ N^q` on prepend bases; the tensor index is `a * dim N^q + b`.
    pub fn coproduct(&self, p: usize, q: usize) -> SparseMatrix {
        let lp = self.projection(p, ZeroSlot::Prepend);
        let lq = self.projection(q, ZeroSlot::Prepend);
        let raw = self.coproduct_level(p, q);
        let lift = &self.lifts[p + q];
        let dq = lq.rows();
        let cols = lift
            .columns()
            .iter()
            .map(|col| {
                let mut out = SparseVec::new();
                for (t, c) in col.iter() {
                    for (a, b, s) in &raw[t] {
                        let (Some((pa, _)), Some((pb, _))) = (lp.column(*a).iter().next(), lq.column(*b).iter().next())
                        else {
                            continue;
                        };
                        out = out.add_scaled(&(c * s), &SparseVec::unit(pa * dq + pb));
                    }
                }
                out
            })
            .collect();
        SparseMatrix::from_columns(lp.rows() * dq, cols).expect("in range")
    }

    /// `c^{(k)}` followed by projection to `(N^1)^{⊗k}`, on the basis element `f` of `N^k`.
    pub fn iterated_coproduct(&self, k: usize, f: usize) -> TensorVec {
        let mut cur: BTreeMap<(Vec<usize>, usize), Q> = BTreeMap::from([((vec![], f), Q::one())]);
        for r in (2..=k).rev() {
            let c = self.coproduct(1, r - 1);
            let dq = self.dim(r - 1);
            let mut next = BTreeMap::new();
            for ((prefix, x), v) in cur {
                for (idx, w) in c.column(x).iter() {
                    let mut p = prefix.clone();
                    p.push(idx / dq);
                    *next.entry((p, idx % dq)).or_insert_with(Q::zero) += &v * w;
                }
            }
            next.retain(|_, c: &mut Q| !c.is_zero());
            cur = next;
        }
        let mut out = TensorVec::new();
        for ((mut prefix, last), v) in cur {
            if k > 0 {
                prefix.push(last);
            }
            *out.entry(prefix).or_insert_with(Q::zero) += v;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `⟨[f_{i,n-i+1}], e_j⟩ = [i <= j]` on the prepend basis of `N^1`.
    pub fn degree_one_pairing(&self, f: usize, j: usize) -> Q {
        let t = &self.basis(1, ZeroSlot::Prepend)[f];
        if t[0] <= j {
            Q::one()
        } else {
            Q::zero()
        }
    }

    /// Degree-`k` pairing matrix: rows are the prepend basis of `N^k`, columns the
    /// subsets of `{0..n}` of size `k`. Computed from the iterated coproduct with the
    /// Koszul rule `⟨a_1 ⊗ .. ⊗ a_k, u_1 ⊗ .. ⊗ u_k⟩ = (-1)^{k(k-1)/2} Π ⟨a_r, u_r⟩`.
    pub fn pairing(&self, k: usize) -> SparseMatrix {
        let lam = Lambda::new(self.n).basis(k);
        let koszul = sign((k * k.saturating_sub(1) / 2) % 2 == 1);
        let rows: Vec<SparseVec> = (0..self.dim(k))
            .map(|f| {
                let tv = self.iterated_coproduct(k, f);
                SparseVec::from_pairs(lam.iter().enumerate().map(|(col, j)| {
                    let mut v = Q::zero();
                    for (a, c) in &tv {
                        if a.iter().zip(j).all(|(ar, jr)| !self.degree_one_pairing(*ar, *jr).is_zero()) {
                            v += c;
                        }
                    }
                    (col, v * &koszul)
                }))
            })
            .collect();
        SparseMatrix::from_columns(lam.len(), rows).expect("in range").transpose()
    }

    /// `(-1)^{k(k-1)/2} det([m_r <= j_i])` with `m_r = n_0 + .. + n_{r-1}`: the
    /// antisymmetrized product of degree-one pairings, with the same Koszul sign.
    pub fn pairing_by_determinant(&self, k: usize) -> SparseMatrix {
        let lam = Lambda::new(self.n).basis(k);
        let koszul = sign((k * k.saturating_sub(1) / 2) % 2 == 1);
        let basis = self.basis(k, ZeroSlot::Prepend);
        let mut m = SparseMatrix::zeros(basis.len(), lam.len());
        let mut trip = Vec::new();
        for (r, t) in basis.iter().enumerate() {
            let starts: Vec<usize> = (1..=k).map(|r| t[..r].iter().sum()).collect();
            for (c, j) in lam.iter().enumerate() {
                let d = det01(&starts, j) * &koszul;
                if !d.is_zero() {
                    trip.push((r, c, d));
                }
            }
        }
        if !trip.is_empty() {
            m = SparseMatrix::from_triplets(basis.len(), lam.len(), trip).expect("in range");
        }
        m
    }

    /// `⟨x, u v⟩` versus `⟨c_{p,q} x, u ⊗ v⟩`, Koszul rule `(-1)^{pq}` for the crossing.
    /// Returns the first failing `(x, I, J)`.
    pub fn coproduct_duality(&self, p: usize, q: usize) -> Option<(usize, Vec<usize>, Vec<usize>)> {
        let lam = Lambda::new(self.n);
        let (bp, bq, bk) = (lam.basis(p), lam.basis(q), lam.basis(p + q));
        let (pp, pq, pk) = (self.pairing(p), self.pairing(q), self.pairing(p + q));
        let c = self.coproduct(p, q);
        let dq = self.dim(q);
        let cross = sign((p * q) % 2 == 1);
        for x in 0..self.dim(p + q) {
            for (iu, u) in bp.iter().enumerate() {
                for (iv, v) in bq.iter().enumerate() {
                    let rhs = match Lambda::mul(u, v) {
                        Some((neg, w)) => sign(neg) * pk.get(x, bk.iter().position(|b| *b == w).unwrap()),
                        None => Q::zero(),
                    };
                    let mut lhs = Q::zero();
                    for (idx, val) in c.column(x).iter() {
                        lhs += val * pp.get(idx / dq, iu) * pq.get(idx % dq, iv);
                    }
                    if lhs * &cross != rhs {
                        return Some((x, u.clone(), v.clone()));
                    }
                }
            }
        }
        None
    }
}

fn index_of_owned(tuples: Vec<Vec<usize>>) -> HashMap<Vec<usize>, usize> {
    tuples.into_iter().enumerate().map(|(i, t)| (t, i)).collect()
}

/// Applies `s^{j_1} .. s^{j_r}` (largest index first) to a fibre tuple.
fn merge(t: &[usize], js: &[usize]) -> Vec<usize> {
    let mut u = t.to_vec();
    for j in js.iter().rev() {
        let v = u[*j] + u[*j + 1];
        u[*j] = v;
        u.remove(*j + 1);
    }
    u
}

/// Determinant of the 0/1 matrix `[starts[r] <= js[i]]` by Laplace expansion.
fn det01(starts: &[usize], js: &[usize]) -> Q {
    let k = starts.len();
    if k == 0 {
        return Q::one();
    }
    let mut total = Q::zero();
    for (i, j) in js.iter().enumerate() {
        if starts[0] <= *j {
            let rest: Vec<usize> = js.iter().enumerate().filter(|(x, _)| *x != i).map(|(_, v)| *v).collect();
            let minor = det01(&starts[1..], &rest);
            total += sign(i % 2 == 1) * minor;
        }
    }
    total
}

/// Result of a full duality check for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DualityReport {
    pub n: usize,
    pub dims: Vec<usize>,
    pub nondegenerate: Vec<bool>,
    pub matches_determinant: Vec<bool>,
    pub unitriangular_degree_one: bool,
    /// `⟨d f, λ⟩ = (-1)^k ⟨f, δ λ⟩` for `f` of degree `k`.
    pub differential_compatible: bool,
    pub append_pairing_degenerate: bool,
}

pub fn duality_report(n: usize) -> DualityReport {
    let s = SurjectionComplex::new(n);
    let top = s.top();
    let dims = (0..=top).map(|k| s.dim(k)).collect();
    let pairings: Vec<SparseMatrix> = (0..=top).map(|k| s.pairing(k)).collect();
    let nondegenerate = pairings.iter().map(|m| m.rows() == m.cols() && m.rank() == m.rows()).collect();
    let matches_determinant = (0..=top).map(|k| pairings[k] == s.pairing_by_determinant(k)).collect();
    let p1 = &pairings[1];
    let unitriangular_degree_one = (0..p1.rows()).all(|r| {
        (0..p1.cols()).all(|c| {
            let t = &s.basis(1, ZeroSlot::Prepend)[r];
            let expect = if t[0] <= c { Q::one() } else { Q::zero() };
            p1.get(r, c) == expect
        })
    }) && p1.rank() == p1.rows();
    // the same formula read on the append basis, where i = n_0 ranges over 1..=n+1
    let append = s.basis(1, ZeroSlot::Append);
    let trip: Vec<(usize, usize, Q)> = append
        .iter()
        .enumerate()
        .flat_map(|(r, t)| (0..=n).filter(move |j| t[0] <= *j).map(move |j| (r, j, Q::one())))
        .collect();
    let am = SparseMatrix::from_triplets(append.len(), n + 1, trip).expect("in range");
    let lam = Lambda::new(n);
    let differential_compatible = (0..top).all(|k| {
        let lhs = s.differential(k, ZeroSlot::Prepend).transpose().mul(&pairings[k + 1]).expect("shapes");
        let rhs = pairings[k].mul(&lam.delta_matrix(k + 1)).expect("shapes");
        lhs == rhs.scaled(&sign(k % 2 == 1))
    });
    DualityReport {
        n,
        differential_compatible,
        dims,
        nondegenerate,
        matches_determinant,
        unitriangular_degree_one,
        append_pairing_degenerate: am.rank() < n + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::binomial;

    #[test]
    fn dimensions_are_binomial() {
        for n in 0..4 {
            let s = SurjectionComplex::new(n);
            for k in 0..=n + 2 {
                assert_eq!(s.dim(k), binomial(n + 1, k));
                assert_eq!(s.kernel(k.min(n + 1)).dim(), s.dim(k.min(n + 1)));
            }
        }
    }

    #[test]
    fn differential_matches_induced_one() {
        let s = SurjectionComplex::new(2);
        for k in 0..=2 {
            for conv in [ZeroSlot::Prepend, ZeroSlot::Append] {
                assert_eq!(s.differential(k, conv), s.induced_differential(k, conv), "{k} {conv:?}");
            }
        }
    }

    #[test]
    fn merge_applies_codegeneracies() {
        assert_eq!(merge(&[1, 1, 1, 1], &[0, 2]), vec![2, 2]);
        assert_eq!(merge(&[1, 2, 3], &[]), vec![1, 2, 3]);
    }
}
