//! Dense oracle for `H^0` of the weight-truncated cochains: `ℚ[a]_{<W}` modulo the
//! ideal of curvature components, read straight from the bracket table.

#![allow(dead_code)]

use std::collections::BTreeMap;

use dmc_core::lie::LInfinityStructure;
use dmc_core::scalar::Q;
use num_traits::{One, Zero};

type Poly = BTreeMap<Vec<u32>, Q>;

fn monomials(vars: usize, below: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..vars {
        out = out
            .into_iter()
            .flat_map(|m: Vec<u32>| {
                let used: u32 = m.iter().sum();
                (0..below - used).map(move |e| [m.clone(), vec![e]].concat())
            })
            .collect();
    }
    out.sort_by_key(|m| (m.iter().sum::<u32>(), std::cmp::Reverse(m.clone())));
    out
}

fn mul(a: &Poly, b: &Poly, below: u32) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            if m.iter().sum::<u32>() < below {
                *out.entry(m).or_insert_with(Q::zero) += ca * cb;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `F_b(a) = Σ_k 1/k! l_k(a, .., a)` for `a = Σ t_i x_i` over degree-one `x_i`; the
/// coefficient of each degree-two `b`, as a polynomial in the `t_i`.
fn curvature(l: &LInfinityStructure, below: u32) -> Vec<Poly> {
    let ones = l.basis_in_degree(1);
    let twos = l.basis_in_degree(2);
    let mut out = vec![Poly::new(); twos.len()];
    for k in 1..=l.max_bracket_arity() as u32 {
        if k >= below {
            break;
        }
        for m in monomials(ones.len(), k + 1).into_iter().filter(|m| m.iter().sum::<u32>() == k) {
            let args: Vec<usize> = m.iter().enumerate().flat_map(|(i, e)| std::iter::repeat_n(ones[i], *e as usize)).collect();
            // degree-one inputs are symmetric: k!/Π m_i! orderings, each weighted 1/k!
            let weight = m.iter().fold(Q::one(), |acc, e| acc / (1..=*e).fold(Q::one(), |f, j| f * Q::from_integer(j.into())));
            for (i, c) in l.bracket(&args).iter() {
                if let Some(pos) = twos.iter().position(|t| *t == i) {
                    *out[pos].entry(m.clone()).or_insert_with(Q::zero) += c * &weight;
                }
            }
        }
    }
    for p in &mut out {
        p.retain(|_, c| !c.is_zero());
    }
    out
}

pub fn dense_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|r| !rows[*r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot;
                for j in c..cols {
                    let v = &rows[rank][j] * &f;
                    rows[r][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Weight-graded dimensions of `H^0`, from the induced filtration by polynomial degree.
pub fn h0_by_weight(l: &LInfinityStructure, below: u32) -> BTreeMap<u32, usize> {
    let l = l.truncate_positive();
    let vars = l.dim_in_degree(1);
    let basis = monomials(vars, below);
    let index: BTreeMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dense = |p: &Poly| {
        let mut v = vec![Q::zero(); basis.len()];
        for (m, c) in p {
            v[index[m]] = c.clone();
        }
        v
    };
    let mut ideal = Vec::new();
    for f in curvature(&l, below) {
        for m in &basis {
            let p = mul(&f, &Poly::from([(m.clone(), Q::one())]), below);
            if !p.is_empty() {
                ideal.push(dense(&p));
            }
        }
    }
    let r_ideal = dense_rank(ideal.clone());
    let filtered = |w: u32| {
        let mut rows = ideal.clone();
        rows.extend(basis.iter().filter(|m| m.iter().sum::<u32>() >= w).map(|m| dense(&Poly::from([(m.clone(), Q::one())]))));
        dense_rank(rows) - r_ideal
    };
    (0..below).map(|w| (w, filtered(w) - filtered(w + 1))).filter(|(_, d)| *d > 0).collect()
}
