//! Freeness of `N(O(MC^•))` as a graded commutative algebra, tested through Hilbert
//! series inside a window closed under products.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::matrix::{SparseVec, Subspace};
use crate::simplicial::ez::ShuffleProduct;

/// Which product to use on `N`; `Zero` is the square-zero negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductChoice {
    Shuffle,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    /// `(level, weight) -> dim N`.
    pub dims: BTreeMap<(usize, u32), usize>,
    /// `(level, weight) -> dim` of the indecomposables.
    pub generators: BTreeMap<(usize, u32), usize>,
    /// `(level, weight) -> dim` of the free algebra on the indecomposables.
    pub free_dims: BTreeMap<(usize, u32), usize>,
    pub matches: bool,
}

/// Levels `<= top` and weights `< weight_bound`; products never leave the window since
/// both gradings add.
pub fn freeness_hilbert(sp: &ShuffleProduct, top: usize, weight_bound: u32, product: ProductChoice) -> FreenessReport {
    let c = sp.chains();
    let top = top.min(c.top());
    let weight = |n: usize, i: usize| c.normalized.complex.basis(-(n as i32))[i].weight;
    let mut dims = BTreeMap::new();
    for n in 0..=top {
        for w in 0..weight_bound {
            dims.insert((n, w), (0..c.dim(n)).filter(|i| weight(n, *i) == w).count());
        }
    }
    let mut generators = BTreeMap::new();
    for n in 0..=top {
        for w in 1..weight_bound {
            let cols: Vec<usize> = (0..c.dim(n)).filter(|i| weight(n, *i) == w).collect();
            let mut decomposable = Subspace::new(cols.len());
            if product == ProductChoice::Shuffle {
                for p in 0..=n {
                    let q = n - p;
                    let tab = sp.table(p, q);
                    for i in (0..c.dim(p)).filter(|i| weight(p, *i) >= 1) {
                        for j in (0..c.dim(q)).filter(|j| weight(q, *j) >= 1 && weight(p, i) + weight(q, *j) == w) {
                            let v = tab.column(i * c.dim(q) + j);
                            decomposable.insert(&SparseVec::from_pairs(
                                cols.iter().enumerate().map(|(k, col)| (k, v.get(*col))),
                            ));
                        }
                    }
                }
            }
            generators.insert((n, w), cols.len() - decomposable.dim());
        }
    }
    let free_dims = free_hilbert(&generators, top, weight_bound);
    let matches = dims == free_dims;
    FreenessReport { dims, generators, free_dims, matches }
}

/// Hilbert function of the free graded commutative algebra, generators at level `n`
/// being exterior for odd `n`.
pub fn free_hilbert(generators: &BTreeMap<(usize, u32), usize>, top: usize, weight_bound: u32) -> BTreeMap<(usize, u32), usize> {
    let mut h: BTreeMap<(usize, u32), usize> = BTreeMap::new();
    for n in 0..=top {
        for w in 0..weight_bound {
            h.insert((n, w), usize::from(n == 0 && w == 0));
        }
    }
    for (&(gn, gw), &mult) in generators {
        for _ in 0..mult {
            let mut next = BTreeMap::new();
            for &(n, w) in h.keys() {
                // coefficient of t^n s^w after multiplying by (1 + u) or 1 / (1 - u), u = t^gn s^gw
                let mut total = 0;
                let mut k = 0usize;
                while k * gn <= n && (k as u32) * gw <= w {
                    if gn % 2 == 1 && k > 1 {
                        break;
                    }
                    total += h[&(n - k * gn, w - k as u32 * gw)];
                    k += 1;
                }
                next.insert((n, w), total);
            }
            h = next;
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_counts() {
        // one even generator of weight 1 and one odd generator at level 1, weight 1
        let g = BTreeMap::from([((0, 1), 1), ((1, 1), 1)]);
        let h = free_hilbert(&g, 2, 4);
        assert_eq!(h[&(0, 3)], 1);
        assert_eq!(h[&(1, 3)], 1);
        assert_eq!(h[&(2, 2)], 0);
    }
}
