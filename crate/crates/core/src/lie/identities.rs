//! Generalized Jacobi identities and the Bianchi identity.

use serde::Serialize;

use super::structure::LInfinityStructure;
use super::tensor::{curvature, TensorElement};
use crate::error::{Error, Result};
use crate::matrix::SparseVec;
use crate::poly::{Generator, Poly, PolyRing};
use crate::scalar::sign;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiResidual {
    pub arity: usize,
    pub args: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub name: String,
    pub dimension: usize,
    pub checked_tuples: usize,
    pub residuals: Vec<JacobiResidual>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// `sum over unshuffles (I, J), |I| = k, of (-1)^(e + sum(j_i - i)) l(l(x_I), x_J)`
/// for the given ordered inputs.
pub fn jacobiator(l: &LInfinityStructure, xs: &[usize]) -> SparseVec {
    let n = xs.len();
    let deg = |i: usize| l.degree(xs[i]);
    let mut acc = SparseVec::new();
    for k in 1..=n {
        let outer = n - k + 1;
        if k > l.max_arity || outer > l.max_arity || l.ordered_terms(k).is_empty() || l.ordered_terms(outer).is_empty() {
            continue;
        }
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let inside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let outside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
            let mut neg = false;
            for &a in &inside {
                for &b in &outside {
                    if b < a && (deg(a) * deg(b)).rem_euclid(2) == 1 {
                        neg = !neg;
                    }
                }
            }
            let shift: usize = outside.iter().enumerate().map(|(i, j)| j - i).sum();
            if shift % 2 == 1 {
                neg = !neg;
            }
            let inner = l.bracket(&inside.iter().map(|i| xs[*i]).collect::<Vec<_>>());
            if inner.is_zero() {
                continue;
            }
            for (c, x) in inner.iter() {
                let mut args = vec![c];
                args.extend(outside.iter().map(|i| xs[*i]));
                acc = acc.add_scaled(&(x * sign(neg)), &l.bracket(&args));
            }
        }
    }
    acc
}

fn multisets(dim: usize, n: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for i in start..dim {
        cur.push(i);
        multisets(dim, n, out, cur, i);
        cur.pop();
    }
}

/// Checks every generalized Jacobi identity on basis multisets.
pub fn validate(l: &LInfinityStructure) -> ValidationReport {
    let mut residuals = Vec::new();
    let mut checked = 0;
    let top = 2 * l.max_bracket_arity().max(1) - 1;
    for n in 1..=top {
        let mut all = Vec::new();
        multisets(l.dim(), n, &mut all, &mut Vec::new(), 0);
        for xs in all {
            let even_repeat = xs.windows(2).any(|w| w[0] == w[1] && l.degree(w[0]).rem_euclid(2) == 0);
            let target = xs.iter().map(|x| l.degree(*x)).sum::<i32>() + 3 - n as i32;
            if even_repeat || l.dim_in_degree(target) == 0 {
                continue;
            }
            checked += 1;
            let r = jacobiator(l, &xs);
            if !r.is_zero() {
                residuals.push(JacobiResidual {
                    arity: n,
                    args: xs.iter().map(|x| l.basis_name(*x).to_string()).collect(),
                    residual: l.format_element(&r),
                });
            }
        }
    }
    ValidationReport { name: l.name.clone(), dimension: l.dim(), checked_tuples: checked, residuals }
}

/// For a DGLA, `d F(x) + [x, F(x)] = 0` for the generic degree-one element `x`.
pub fn bianchi_check(l: &LInfinityStructure) -> Result<bool> {
    if l.max_bracket_arity() > 2 {
        return Err(Error::Malformed("Bianchi identity needs brackets of arity at most two".into()));
    }
    let ones = l.basis_in_degree(1);
    let ring = PolyRing::new(ones.iter().map(|i| Generator::new(format!("t_{}", l.basis_name(*i)), 0)).collect())?;
    let mut x = TensorElement::default();
    for (k, i) in ones.iter().enumerate() {
        x.coeffs.insert(*i, Poly::var(k));
    }
    let f = curvature(&ring, l, &x, None, None);
    let df = super::tensor::bracket_in_tensor(&ring, l, &[&f], None);
    let xf = super::tensor::bracket_in_tensor(&ring, l, &[&x, &f], None);
    Ok(df.add(&xf).is_zero())
}
