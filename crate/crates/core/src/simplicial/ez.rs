//! Alexander-Whitney and shuffle maps for external products `A ⊠ B`, and the shuffle
//! product on the normalized chains of a simplicial commutative algebra.
//!
//! Chains are homological here: `N_k` is the quotient of level `k` by degeneracies,
//! with `∂ = Σ (-1)^i ∂_i`. `Tot_k = ⊕_{p+q=k} N_p(A) ⊗ N_q(B)` with
//! `∂ = ∂^{(1)} + (-1)^p ∂^{(2)}`.

use std::sync::OnceLock;

use num_traits::One;

use super::module::{Normalized, SimplicialModule};
use super::simplex::shuffles;
use crate::error::{Error, Result};
use crate::matrix::{SparseMatrix, SparseVec};
use crate::scalar::{sign, Q};

/// Normalized chains with explicit projection and section matrices per level.
#[derive(Clone, Debug)]
pub struct Chains {
    pub module: SimplicialModule,
    pub normalized: Normalized,
    /// `A_k -> N_k`.
    pub proj: Vec<SparseMatrix>,
    /// `N_k -> A_k`, standard representatives.
    pub sect: Vec<SparseMatrix>,
}

impl Chains {
    pub fn new(module: SimplicialModule) -> Result<Self> {
        let normalized = module.normalize_quotient()?;
        let mut proj = Vec::new();
        for k in 0..=module.top() {
            let cols = (0..module.dim(k)).map(|i| normalized.project(k, &SparseVec::unit(i))).collect();
            proj.push(SparseMatrix::from_columns(normalized.complex.dim(-(k as i32)), cols)?);
        }
        let sect = normalized.embeddings.clone();
        Ok(Self { module, normalized, proj, sect })
    }

    pub fn top(&self) -> usize {
        self.module.top()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.proj[k].rows()
    }

    /// `∂: N_k -> N_{k-1}`.
    pub fn d(&self, k: usize) -> SparseMatrix {
        if k == 0 {
            return SparseMatrix::zeros(0, self.dim(0));
        }
        self.normalized.complex.d(-(k as i32))
    }

    /// `∂_{p+1} .. ∂_k: A_k -> A_p`, the front face.
    pub fn front(&self, k: usize, p: usize) -> SparseMatrix {
        let mut m = SparseMatrix::identity(self.module.dim(k));
        for l in (p + 1..=k).rev() {
            m = self.module.face(l, l).mul(&m).expect("shapes");
        }
        m
    }

    /// `∂_0 .. ∂_{p-1} = ∂_0^p: A_k -> A_{k-p}`, the back face.
    pub fn back(&self, k: usize, p: usize) -> SparseMatrix {
        let mut m = SparseMatrix::identity(self.module.dim(k));
        for j in (0..p).rev() {
            m = self.module.face(k - (p - 1 - j), j).mul(&m).expect("shapes");
        }
        m
    }

    /// `σ_{j_q} .. σ_{j_1}: A_p -> A_{p+q}` for increasing `J`.
    pub fn degeneracies(&self, p: usize, j: &[usize]) -> SparseMatrix {
        let mut m = SparseMatrix::identity(self.module.dim(p));
        for (r, idx) in j.iter().enumerate() {
            m = self.module.degen(p + r, *idx).mul(&m).expect("shapes");
        }
        m
    }
}

/// `A ⊠ B`: level `(p, q)` is `A_p ⊗ B_q`; horizontal maps act on `A`, vertical on `B`.
#[derive(Clone, Debug)]
pub struct ExternalProduct {
    pub a: Chains,
    pub b: Chains,
    pub diagonal: Chains,
}

impl ExternalProduct {
    pub fn new(a: &SimplicialModule, b: &SimplicialModule) -> Result<Self> {
        Ok(Self { a: Chains::new(a.clone())?, b: Chains::new(b.clone())?, diagonal: Chains::new(a.tensor(b)?)? })
    }

    pub fn top(&self) -> usize {
        self.diagonal.top()
    }

    fn tot_offsets(&self, k: usize) -> Vec<usize> {
        let mut o = vec![0];
        for p in 0..=k {
            o.push(o[p] + self.a.dim(p) * self.b.dim(k - p));
        }
        o
    }

    pub fn tot_dim(&self, k: usize) -> usize {
        self.tot_offsets(k)[k + 1]
    }

    /// `∂^{(1)} + (-1)^p ∂^{(2)}` on `Tot_k`.
    pub fn tot_d(&self, k: usize) -> SparseMatrix {
        if k == 0 {
            return SparseMatrix::zeros(0, self.tot_dim(0));
        }
        let (src, tgt) = (self.tot_offsets(k), self.tot_offsets(k - 1));
        let mut trip = Vec::new();
        for p in 0..=k {
            let q = k - p;
            if p > 0 {
                let h = self.a.d(p).kron(&SparseMatrix::identity(self.b.dim(q)));
                push_block(&mut trip, &h, tgt[p - 1], src[p], &Q::one());
            }
            if q > 0 {
                let v = SparseMatrix::identity(self.a.dim(p)).kron(&self.b.d(q));
                push_block(&mut trip, &v, tgt[p], src[p], &sign(p % 2 == 1));
            }
        }
        SparseMatrix::from_triplets(tgt[k], src[k + 1], trip).expect("in range")
    }

    /// `f: N(Diag)_k -> Tot_k`, `f = Σ_p ∂^{(1)}_{p+1} .. ∂^{(1)}_k ∂^{(2)}_0 .. ∂^{(2)}_{p-1}`.
    pub fn alexander_whitney(&self, k: usize) -> SparseMatrix {
        let off = self.tot_offsets(k);
        let mut trip = Vec::new();
        for p in 0..=k {
            let raw = self.a.front(k, p).kron(&self.b.back(k, p));
            let m = self.a.proj[p]
                .kron(&self.b.proj[k - p])
                .mul(&raw)
                .and_then(|x| x.mul(&self.diagonal.sect[k]))
                .expect("shapes");
            push_block(&mut trip, &m, off[p], 0, &Q::one());
        }
        SparseMatrix::from_triplets(off[k + 1], self.diagonal.dim(k), trip).expect("in range")
    }

    /// Unnormalized `g_{p,q} = Σ ± σ^{(1)}_J σ^{(2)}_I: A_p ⊗ B_q -> A_{p+q} ⊗ B_{p+q}`,
    /// summed over shuffles `(I, J)` with `|I| = p`.
    pub fn shuffle_raw(&self, p: usize, q: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.a.module.dim(p + q) * self.b.module.dim(p + q), self.a.module.dim(p) * self.b.module.dim(q));
        for (i, j, neg) in shuffles(p, q) {
            let t = self.a.degeneracies(p, &j).kron(&self.b.degeneracies(q, &i));
            m = m.add_scaled(&sign(neg), &t).expect("same shape");
        }
        m
    }

    /// `g: Tot_k -> N(Diag)_k`.
    pub fn shuffle(&self, k: usize) -> SparseMatrix {
        let off = self.tot_offsets(k);
        let mut trip = Vec::new();
        for p in 0..=k {
            let m = self.diagonal.proj[k]
                .mul(&self.shuffle_raw(p, k - p))
                .and_then(|x| x.mul(&self.a.sect[p].kron(&self.b.sect[k - p])))
                .expect("shapes");
            push_block(&mut trip, &m, 0, off[p], &Q::one());
        }
        SparseMatrix::from_triplets(self.diagonal.dim(k), off[k + 1], trip).expect("in range")
    }

    /// First failing check, if any, among `fg = id`, `∂f = f∂`, `∂g = g∂` up to degree `top`.
    pub fn verify(&self, top: usize) -> std::result::Result<(), EzFailure> {
        for k in 0..=top.min(self.top()) {
            let (f, g) = (self.alexander_whitney(k), self.shuffle(k));
            if f.mul(&g).expect("shapes") != SparseMatrix::identity(self.tot_dim(k)) {
                return Err(EzFailure { degree: k, check: "fg = id" });
            }
            if k > 0 {
                let (fl, gl) = (self.alexander_whitney(k - 1), self.shuffle(k - 1));
                if self.tot_d(k).mul(&f).unwrap() != fl.mul(&self.diagonal.d(k)).unwrap() {
                    return Err(EzFailure { degree: k, check: "f is a chain map" });
                }
                if self.diagonal.d(k).mul(&g).unwrap() != gl.mul(&self.tot_d(k)).unwrap() {
                    return Err(EzFailure { degree: k, check: "g is a chain map" });
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EzFailure {
    pub degree: usize,
    pub check: &'static str,
}

fn cells<T>(top: usize) -> Vec<Vec<OnceLock<T>>> {
    (0..=top).map(|p| (0..=top - p).map(|_| OnceLock::new()).collect()).collect()
}

fn push_block(trip: &mut Vec<(usize, usize, Q)>, m: &SparseMatrix, r0: usize, c0: usize, s: &Q) {
    for (c, col) in m.columns().iter().enumerate() {
        for (r, x) in col.iter() {
            trip.push((r0 + r, c0 + c, s * x));
        }
    }
}

/// A simplicial commutative algebra: `mult[n]: A_n ⊗ A_n -> A_n` (index `a * dim + b`)
/// and units `unit[n] ∈ A_n`.
#[derive(Clone, Debug)]
pub struct SimplicialAlgebra {
    pub module: SimplicialModule,
    pub mult: Vec<SparseMatrix>,
    pub unit: Vec<SparseVec>,
}

impl SimplicialAlgebra {
    pub fn new(module: SimplicialModule, mult: Vec<SparseMatrix>, unit: Vec<SparseVec>) -> Result<Self> {
        if mult.len() != module.top() + 1 || unit.len() != module.top() + 1 {
            return Err(Error::Dimension("one product and unit per level".into()));
        }
        for (n, m) in mult.iter().enumerate() {
            let d = module.dim(n);
            if m.rows() != d || m.cols() != d * d {
                return Err(Error::Dimension(format!("product at level {n} has the wrong shape")));
            }
        }
        Ok(Self { module, mult, unit })
    }

    /// Faces and degeneracies are algebra maps.
    pub fn check_multiplicative(&self) -> bool {
        let m = &self.module;
        let hom = |f: &SparseMatrix, src: usize, tgt: usize| {
            f.mul(&self.mult[src]).unwrap() == self.mult[tgt].mul(&f.kron(f)).unwrap() && f.apply(&self.unit[src]) == self.unit[tgt]
        };
        (1..=m.top()).all(|n| (0..=n).all(|i| hom(m.face(n, i), n, n - 1)))
            && (0..m.top()).all(|n| (0..=n).all(|i| hom(m.degen(n, i), n, n + 1)))
    }
}

/// Shuffle product `N_p ⊗ N_q -> N_{p+q}` on the quotient normalization.
#[derive(Clone, Debug)]
pub struct ShuffleProduct {
    chains: Chains,
    mult: Vec<SparseMatrix>,
    unit: SparseVec,
    /// `(σ_J, σ_I, sign)` per shuffle, for each `(p, q)`.
    degens: Vec<Vec<OnceLock<Vec<(SparseMatrix, SparseMatrix, bool)>>>>,
    tables: Vec<Vec<OnceLock<SparseMatrix>>>,
}

impl ShuffleProduct {
    pub fn new(alg: &SimplicialAlgebra) -> Result<Self> {
        let chains = Chains::new(alg.module.clone())?;
        let unit = chains.proj[0].apply(&alg.unit[0]);
        let top = chains.top();
        Ok(Self { chains, mult: alg.mult.clone(), unit, degens: cells(top), tables: cells(top) })
    }

    pub fn chains(&self) -> &Chains {
        &self.chains
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    fn shuffle_degeneracies(&self, p: usize, q: usize) -> &[(SparseMatrix, SparseMatrix, bool)] {
        self.degens[p][q].get_or_init(|| {
            shuffles(p, q).into_iter().map(|(i, j, neg)| (self.chains.degeneracies(p, &j), self.chains.degeneracies(q, &i), neg)).collect()
        })
    }

    fn mult_vectors(&self, n: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let d = self.chains.module.dim(n);
        let m = &self.mult[n];
        let mut acc = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                acc = acc.add_scaled(&(a * b), m.column(i * d + j));
            }
        }
        acc
    }

    /// `Σ ± σ_J(x) σ_I(y)` for `x ∈ A_p`, `y ∈ A_q`, before normalizing.
    pub fn product_in_levels(&self, p: usize, x: &SparseVec, q: usize, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (sa, sb, neg) in self.shuffle_degeneracies(p, q) {
            acc = acc.add_scaled(&sign(*neg), &self.mult_vectors(p + q, &sa.apply(x), &sb.apply(y)));
        }
        acc
    }

    /// The product as a matrix `N_p ⊗ N_q -> N_{p+q}`, cached.
    pub fn table(&self, p: usize, q: usize) -> SparseMatrix {
        self.tables[p][q]
            .get_or_init(|| {
                let c = &self.chains;
                let mut cols = Vec::with_capacity(c.dim(p) * c.dim(q));
                for i in 0..c.dim(p) {
                    for j in 0..c.dim(q) {
                        let raw = self.product_in_levels(p, c.sect[p].column(i), q, c.sect[q].column(j));
                        cols.push(c.proj[p + q].apply(&raw));
                    }
                }
                SparseMatrix::from_columns(c.dim(p + q), cols).expect("in range")
            })
            .clone()
    }

    pub fn multiply(&self, p: usize, x: &SparseVec, q: usize, y: &SparseVec) -> SparseVec {
        let c = &self.chains;
        let raw = self.product_in_levels(p, &c.sect[p].apply(x), q, &c.sect[q].apply(y));
        c.proj[p + q].apply(&raw)
    }

    /// Associativity, unit and `xy = (-1)^{pq} yx` on basis elements with degrees
    /// summing to at most `top`.
    pub fn verify(&self, top: usize) -> std::result::Result<(), EzFailure> {
        let c = &self.chains;
        let top = top.min(c.top());
        for p in 0..=top {
            for i in 0..c.dim(p) {
                let x = SparseVec::unit(i);
                if self.multiply(0, &self.unit, p, &x) != x || self.multiply(p, &x, 0, &self.unit) != x {
                    return Err(EzFailure { degree: p, check: "unit" });
                }
                for q in 0..=top - p {
                    let tab = self.table(p, q);
                    let tab_rev = self.table(q, p);
                    let s = sign((p * q) % 2 == 1);
                    for j in 0..c.dim(q) {
                        let y = SparseVec::unit(j);
                        let xy = tab.apply(&SparseVec::unit(i * c.dim(q) + j));
                        let yx = tab_rev.apply(&SparseVec::unit(j * c.dim(p) + i));
                        if xy != yx.scaled(&s) {
                            return Err(EzFailure { degree: p + q, check: "graded commutativity" });
                        }
                        for r in 0..=top - p - q {
                            for l in 0..c.dim(r) {
                                let z = SparseVec::unit(l);
                                let lhs = self.multiply(p + q, &xy, r, &z);
                                let rhs = self.multiply(p, &x, q + r, &self.multiply(q, &y, r, &z));
                                if lhs != rhs {
                                    return Err(EzFailure { degree: p + q + r, check: "associativity" });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Alexander-Whitney coproduct of `v ∈ N_k` through `comult`, as blocks
    /// `N_p ⊗ N_{k-p}` for `p = 0..=k`.
    pub fn coproduct(&self, comult: &[SparseMatrix], k: usize, v: &SparseVec) -> Vec<SparseVec> {
        let c = &self.chains;
        let cv = comult[k].apply(&c.sect[k].apply(v));
        (0..=k)
            .map(|p| {
                let m = c.proj[p].mul(&c.front(k, p)).unwrap().kron(&c.proj[k - p].mul(&c.back(k, p)).unwrap());
                m.apply(&cv)
            })
            .collect()
    }

    /// `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd` on blocks of total degrees `k1`, `k2`.
    pub fn tensor_multiply(&self, k1: usize, x: &[SparseVec], k2: usize, y: &[SparseVec]) -> Vec<SparseVec> {
        let c = &self.chains;
        let mut out = vec![SparseVec::new(); k1 + k2 + 1];
        for (p1, xb) in x.iter().enumerate() {
            let q1 = k1 - p1;
            for (p2, yb) in y.iter().enumerate() {
                let q2 = k2 - p2;
                let s = sign((q1 * p2) % 2 == 1);
                let (left, right) = (self.table(p1, p2), self.table(q1, q2));
                let dq = c.dim(q1 + q2);
                for (i, a) in xb.iter() {
                    let (xa, xb2) = (i / c.dim(q1), i % c.dim(q1));
                    for (j, b) in yb.iter() {
                        let (ya, yb2) = (j / c.dim(q2), j % c.dim(q2));
                        let l = left.apply(&SparseVec::unit(xa * c.dim(p2) + ya));
                        let r = right.apply(&SparseVec::unit(xb2 * c.dim(q2) + yb2));
                        let coef = &s * a * b;
                        out[p1 + p2] = out[p1 + p2].add(&outer(&l, &r, dq).scaled(&coef));
                    }
                }
            }
        }
        out
    }

    /// `Δ(xy) = Δ(x)Δ(y)` on basis elements of total degree `<= top` whose weights sum
    /// to less than `weight_bound`.
    pub fn bialgebra_check(&self, comult: &[SparseMatrix], top: usize, weight_bound: u32) -> std::result::Result<(), EzFailure> {
        let c = &self.chains;
        let top = top.min(c.top());
        let weight = |k: usize, i: usize| c.normalized.complex.basis(-(k as i32))[i].weight;
        for p in 0..=top {
            for q in 0..=top - p {
                for i in 0..c.dim(p) {
                    for j in 0..c.dim(q) {
                        if weight(p, i) + weight(q, j) >= weight_bound {
                            continue;
                        }
                        let (x, y) = (SparseVec::unit(i), SparseVec::unit(j));
                        let lhs = self.coproduct(comult, p + q, &self.multiply(p, &x, q, &y));
                        let rhs = self.tensor_multiply(p, &self.coproduct(comult, p, &x), q, &self.coproduct(comult, q, &y));
                        if lhs != rhs {
                            return Err(EzFailure { degree: p + q, check: "bialgebra" });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn outer(a: &SparseVec, b: &SparseVec, db: usize) -> SparseVec {
    let mut t = Vec::new();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            t.push((i * db + j, x * y));
        }
    }
    SparseVec::from_pairs(t)
}

type Monomial = Vec<usize>;

fn monomials(gens: usize, weight_bound: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Monomial> = vec![vec![]];
    for _ in 1..weight_bound {
        let mut next = Vec::new();
        for m in &frontier {
            let lo = m.last().copied().unwrap_or(0);
            for g in lo..gens {
                let mut n = m.clone();
                n.push(g);
                next.push(n);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `Sym(M)` truncated at polynomial weight `< weight_bound`, with `M` in degree 0.
/// Returns the algebra and the comultiplication making `M` primitive.
pub fn symmetric_algebra(m: &SimplicialModule, weight_bound: u32) -> Result<(SimplicialAlgebra, Vec<SparseMatrix>)> {
    use std::collections::BTreeMap;
    let top = m.top();
    let bases: Vec<Vec<Monomial>> = (0..=top).map(|n| monomials(m.dim(n), weight_bound)).collect();
    let index: Vec<BTreeMap<Monomial, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect()).collect();
    let induced = |f: &SparseMatrix, src: usize, tgt: usize| -> SparseMatrix {
        let cols = bases[src]
            .iter()
            .map(|mono| {
                let mut acc: BTreeMap<Monomial, Q> = BTreeMap::from([(vec![], Q::one())]);
                for g in mono {
                    let mut next = BTreeMap::new();
                    for (a, c) in &acc {
                        for (h, x) in f.column(*g).iter() {
                            let mut b = a.clone();
                            b.push(h);
                            b.sort_unstable();
                            *next.entry(b).or_insert_with(num_traits::Zero::zero) += c * x;
                        }
                    }
                    acc = next;
                }
                SparseVec::from_pairs(acc.into_iter().map(|(b, c)| (index[tgt][&b], c)))
            })
            .collect();
        SparseMatrix::from_columns(bases[tgt].len(), cols).expect("in range")
    };
    let labels = bases
        .iter()
        .enumerate()
        .map(|(n, b)| {
            b.iter()
                .map(|mono| {
                    let name = if mono.is_empty() { "1".to_string() } else { mono.iter().map(|g| m.labels[n][*g].name.clone()).collect::<Vec<_>>().join("·") };
                    crate::complexes::BasisLabel::new(mono.len() as u32, name)
                })
                .collect()
        })
        .collect();
    let faces = (0..=top).map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| induced(m.face(n, i), n, n - 1)).collect() }).collect();
    let degens = (0..=top).map(|n| if n == top { vec![] } else { (0..=n).map(|i| induced(m.degen(n, i), n, n + 1)).collect() }).collect();
    let module = SimplicialModule::new(labels, faces, degens)?;
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut unit = Vec::new();
    for n in 0..=top {
        let b = &bases[n];
        let d = b.len();
        let mut trip = Vec::new();
        for (i, x) in b.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let mut z: Monomial = x.iter().chain(y).copied().collect();
                z.sort_unstable();
                if let Some(k) = index[n].get(&z) {
                    trip.push((*k, i * d + j, Q::one()));
                }
            }
        }
        mult.push(SparseMatrix::from_triplets(d, d * d, trip)?);
        let cols = b
            .iter()
            .map(|x| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for mask in 0..(1usize << x.len()) {
                    let (l, r): (Vec<_>, Vec<_>) = (0..x.len()).partition(|t| mask >> t & 1 == 1);
                    let l: Monomial = l.iter().map(|t| x[*t]).collect();
                    let r: Monomial = r.iter().map(|t| x[*t]).collect();
                    *acc.entry(index[n][&l] * d + index[n][&r]).or_insert_with(num_traits::Zero::zero) += Q::one();
                }
                SparseVec::from_pairs(acc)
            })
            .collect();
        comult.push(SparseMatrix::from_columns(d * d, cols)?);
        unit.push(SparseVec::unit(0));
    }
    Ok((SimplicialAlgebra::new(module, mult, unit)?, comult))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::module::{random_family, standard_simplex};

    #[test]
    fn shuffle_map_in_bidegree_one_one() {
        let s = shuffles(1, 1);
        // (I, J) = ({0}, {1}) carries σ^{(1)}_1 σ^{(2)}_0 with sign +
        assert_eq!((s[0].0.as_slice(), s[0].1.as_slice(), s[0].2), (&[0][..], &[1][..], false));
        assert_eq!((s[1].0.as_slice(), s[1].1.as_slice(), s[1].2), (&[1][..], &[0][..], true));
    }

    #[test]
    fn eilenberg_zilber_on_small_families() {
        let a = standard_simplex(1, 3);
        let b = random_family(7, 3);
        let ez = ExternalProduct::new(&a, &b).unwrap();
        assert_eq!(ez.verify(3), Ok(()));
    }

    #[test]
    fn symmetric_algebra_is_a_bialgebra() {
        let (alg, comult) = symmetric_algebra(&standard_simplex(1, 2), 3).unwrap();
        assert!(alg.module.check_identities().is_ok());
        assert!(alg.check_multiplicative());
        let sp = ShuffleProduct::new(&alg).unwrap();
        assert_eq!(sp.verify(2), Ok(()));
        assert_eq!(sp.bialgebra_check(&comult, 2, 3), Ok(()));
    }
}
