//! Harrison cochains of `R = ℚ^d` with zero product, with the Gerstenhaber bracket.
//!
//! A degree-`k` cochain is a multilinear map `R^{⊗(k+1)} -> R`, stored densely with index
//! `((i_0 d + i_1) d + .. + i_k) d + out`. Harrison cochains vanish on signed shuffle
//! products `(a_0 .. a_{p-1}) ш (a_p .. a_k)` for `0 < p < k + 1`.

use num_traits::Zero;

use super::structure::{BasisElement, LInfinityStructure};
use crate::error::{Error, Result};
use crate::matrix::{Kernel, SparseMatrix, SparseVec};
use crate::scalar::{sign, Q};

pub type Cochain = Vec<Q>;

fn index(d: usize, inputs: &[usize], out: usize) -> usize {
    inputs.iter().fold(0, |acc, i| acc * d + i) * d + out
}

fn tuples(d: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Positions `I` (sorted) with `|I| = p` among `0..m`, with the sign of the shuffle.
fn shuffles(m: usize, p: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let ipos: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let inv: usize = ipos.iter().enumerate().map(|(l, i)| i - l).sum();
        out.push((ipos, inv % 2 == 1));
    }
    out
}

/// Basis of degree-`k` Harrison cochains, as a kernel in the space of all cochains.
pub fn harrison_cochains(d: usize, k: usize) -> Kernel {
    let m = k + 1;
    let width = d.pow(m as u32 + 1);
    let mut rows: Vec<SparseVec> = Vec::new();
    for p in 1..m {
        let sh = shuffles(m, p);
        for a in tuples(d, m) {
            for out in 0..d {
                let mut entries = Vec::new();
                for (ipos, neg) in &sh {
                    let mut w = vec![0; m];
                    let (mut x, mut y) = (0, p);
                    for (slot, wv) in w.iter_mut().enumerate() {
                        if ipos.contains(&slot) {
                            *wv = a[x];
                            x += 1;
                        } else {
                            *wv = a[y];
                            y += 1;
                        }
                    }
                    entries.push((index(d, &w, out), sign(*neg)));
                }
                let row = SparseVec::from_pairs(entries);
                if !row.is_zero() {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Kernel::full(width);
    }
    let cols = SparseMatrix::from_columns(width, rows).expect("indices in range");
    cols.transpose().kernel()
}

/// `(c1 ∘_i c2)(r_0, ..) = c1(r_0, .., r_{i-1}, c2(r_i, .., r_{i+k2}), ..)`.
pub fn compose(d: usize, c1: &Cochain, k1: usize, c2: &Cochain, k2: usize, i: usize) -> Cochain {
    let m = k1 + k2 + 1;
    let mut out = vec![Q::zero(); d.pow(m as u32 + 1)];
    for a in tuples(d, m) {
        for mid in 0..d {
            let inner = &c2[index(d, &a[i..i + k2 + 1], mid)];
            if inner.is_zero() {
                continue;
            }
            let mut outer_args: Vec<usize> = a[..i].to_vec();
            outer_args.push(mid);
            outer_args.extend_from_slice(&a[i + k2 + 1..]);
            for o in 0..d {
                let v = &c1[index(d, &outer_args, o)];
                if !v.is_zero() {
                    out[index(d, &a, o)] += inner * v;
                }
            }
        }
    }
    out
}

/// Gerstenhaber bracket of cochains of degrees `k1`, `k2`.
pub fn gerstenhaber(d: usize, c1: &Cochain, k1: usize, c2: &Cochain, k2: usize) -> Cochain {
    let mut out = vec![Q::zero(); d.pow((k1 + k2 + 2) as u32)];
    for i in 0..=k1 {
        let t = compose(d, c1, k1, c2, k2, i);
        let s = sign((i * k2) % 2 == 1);
        for (o, x) in out.iter_mut().zip(&t) {
            *o += &s * x;
        }
    }
    for i in 0..=k2 {
        let t = compose(d, c2, k2, c1, k1, i);
        let s = -sign((k1 * k2 + i * k1) % 2 == 1);
        for (o, x) in out.iter_mut().zip(&t) {
            *o += &s * x;
        }
    }
    out
}

/// Harrison cochains of degrees `0..=bound` as a DGLA with zero differential;
/// brackets landing above `bound` are dropped.
pub fn harrison_fixture(d: usize, bound: usize) -> Result<LInfinityStructure> {
    if d == 0 {
        return Err(Error::Malformed("dimension of R must be positive".into()));
    }
    let kernels: Vec<Kernel> = (0..=bound).map(|k| harrison_cochains(d, k)).collect();
    let mut basis = Vec::new();
    let mut owner = Vec::new();
    for (k, ker) in kernels.iter().enumerate() {
        for j in 0..ker.dim() {
            basis.push(BasisElement { name: format!("h{k}_{j}"), degree: k as i32, filtration: None });
            owner.push((k, j));
        }
    }
    let offset: Vec<usize> = kernels
        .iter()
        .scan(0, |acc, k| {
            let o = *acc;
            *acc += k.dim();
            Some(o)
        })
        .collect();
    let dense = |k: usize, j: usize| kernels[k].basis[j].to_dense(kernels[k].width);
    let mut entries = Vec::new();
    for a in 0..basis.len() {
        for b in a..basis.len() {
            let ((ka, ja), (kb, jb)) = (owner[a], owner[b]);
            if ka + kb > bound {
                continue;
            }
            let br = gerstenhaber(d, &dense(ka, ja), ka, &dense(kb, jb), kb);
            let v = SparseVec::from_dense(&br);
            let ker = &kernels[ka + kb];
            let coords = ker.try_coordinates(&v).ok_or_else(|| {
                Error::Malformed(format!("bracket of {} and {} is not a Harrison cochain", basis[a].name, basis[b].name))
            })?;
            if !coords.is_zero() {
                entries.push((vec![a, b], coords.shifted(offset[ka + kb])));
            }
        }
    }
    LInfinityStructure::new(format!("harrison-d{d}"), basis, entries, 2)
}

/// Coordinates of a dense degree-`k` cochain in the Harrison basis, if it is Harrison.
pub fn harrison_coordinates(d: usize, k: usize, c: &Cochain) -> Option<SparseVec> {
    harrison_cochains(d, k).try_coordinates(&SparseVec::from_dense(c))
}
