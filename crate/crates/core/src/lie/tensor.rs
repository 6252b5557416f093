//! Brackets on `A ⊗ L` for a graded-commutative coefficient ring `A` acting on the left.
//!
//! For homogeneous `a_i` and `x_i`,
//! `l_k(a_1 x_1, .., a_k x_k) = (-1)^(k Σ|a_i| + Σ_{i<j} |x_i||a_j|) a_1..a_k l_k(x_1, .., x_k)`.

use std::collections::BTreeMap;

use num_traits::One;

use super::structure::LInfinityStructure;
use crate::poly::{Derivation, Poly, PolyRing};
use crate::scalar::{factorial, sign, Q};

/// Element `Σ_b P_b ⊗ b` of `A ⊗ L`, keyed by basis index of `L`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    pub coeffs: BTreeMap<usize, Poly>,
}

impl TensorElement {
    pub fn coeff(&self, b: usize) -> Poly {
        self.coeffs.get(&b).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, b: usize, c: &Q, p: &Poly) {
        let e = self.coeffs.entry(b).or_default();
        e.add_scaled(c, p);
        if e.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        for (b, p) in &other.coeffs {
            r.add_term(*b, &Q::one(), p);
        }
        r
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut r = self.clone();
        for (b, p) in &other.coeffs {
            r.add_term(*b, &-Q::one(), p);
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|p| p.is_zero())
    }

    /// Left multiplication by a coefficient.
    pub fn left_mul(&self, ring: &PolyRing, a: &Poly, bound: Option<u32>) -> TensorElement {
        let mut r = TensorElement::default();
        for (b, p) in &self.coeffs {
            r.add_term(*b, &Q::one(), &ring.mul_trunc(a, p, bound));
        }
        r
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> TensorElement {
        let mut r = TensorElement::default();
        for (b, p) in &self.coeffs {
            r.add_term(*b, &Q::one(), &f(p));
        }
        r
    }
}

fn split_by_degree(ring: &PolyRing, p: &Poly) -> BTreeMap<i32, Poly> {
    let mut out: BTreeMap<i32, Poly> = BTreeMap::new();
    for (m, c) in &p.terms {
        out.entry(ring.degree(m)).or_default().add_term(m.clone(), c.clone());
    }
    out
}

/// `l_k(args)` on `A ⊗ L`; the `A`-differential is not included.
pub fn bracket_in_tensor(ring: &PolyRing, l: &LInfinityStructure, args: &[&TensorElement], bound: Option<u32>) -> TensorElement {
    let k = args.len();
    let mut out = TensorElement::default();
    let split: Vec<BTreeMap<usize, BTreeMap<i32, Poly>>> = args
        .iter()
        .map(|t| t.coeffs.iter().map(|(b, p)| (*b, split_by_degree(ring, p))).collect())
        .collect();
    for (tuple, value) in l.ordered_terms(k) {
        let parts: Option<Vec<&BTreeMap<i32, Poly>>> = tuple.iter().zip(&split).map(|(b, s)| s.get(b)).collect();
        let Some(parts) = parts else { continue };
        let mut choice = vec![0usize; k];
        let pieces: Vec<Vec<(&i32, &Poly)>> = parts.iter().map(|m| m.iter().collect()).collect();
        loop {
            let degs: Vec<i32> = (0..k).map(|i| *pieces[i][choice[i]].0).collect();
            let mut e: i64 = k as i64 * degs.iter().map(|d| *d as i64).sum::<i64>();
            for i in 0..k {
                for j in i + 1..k {
                    e += (l.degree(tuple[i]) * degs[j]) as i64;
                }
            }
            let mut prod = Poly::one();
            for i in 0..k {
                prod = ring.mul_trunc(&prod, pieces[i][choice[i]].1, bound);
            }
            if !prod.is_zero() {
                let s = sign(e.rem_euclid(2) == 1);
                for (c, x) in value.iter() {
                    out.add_term(c, &(&s * x), &prod);
                }
            }
            let mut i = 0;
            while i < k {
                choice[i] += 1;
                if choice[i] < pieces[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    }
    out
}

/// `F(x) = d_A x + Σ_k l_k(x, .., x) / k!`.
pub fn curvature(
    ring: &PolyRing,
    l: &LInfinityStructure,
    x: &TensorElement,
    coefficient_differential: Option<&Derivation>,
    bound: Option<u32>,
) -> TensorElement {
    let mut f = TensorElement::default();
    if let Some(d) = coefficient_differential {
        for (b, p) in &x.coeffs {
            f.add_term(*b, &Q::one(), &d.apply(p, bound));
        }
    }
    for k in 1..=l.max_arity {
        if l.ordered_terms(k).is_empty() {
            continue;
        }
        let args = vec![x; k];
        let term = bracket_in_tensor(ring, l, &args, bound);
        let inv = Q::one() / factorial(k);
        for (b, p) in &term.coeffs {
            f.add_term(*b, &inv, p);
        }
    }
    f
}
