//! Morphisms of the simplex category: monotone maps `[m] -> [n]`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexMap {
    values: Vec<usize>,
    target: usize,
}

impl SimplexMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Malformed("a simplex map needs a nonempty source".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Malformed(format!("{values:?} is not monotone")));
        }
        if values.iter().any(|v| *v > target) {
            return Err(Error::Range(format!("{values:?} leaves [{target}]")));
        }
        Ok(Self { values, target })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (0..=n).collect(), target: n }
    }

    /// `d^i: [n-1] -> [n]`, skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "coface d^{i} into [{n}]");
        Self { values: (0..n).map(|j| if j < i { j } else { j + 1 }).collect(), target: n }
    }

    /// `s^i: [n+1] -> [n]`, hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "codegeneracy s^{i} onto [{n}]");
        Self { values: (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect(), target: n }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, j: usize) -> usize {
        self.values[j]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplexMap) -> Result<SimplexMap> {
        if other.source() != self.target {
            return Err(Error::Dimension(format!(
                "cannot compose [{}] -> [{}] with a map out of [{}]",
                self.source(),
                self.target,
                other.source()
            )));
        }
        Ok(SimplexMap { values: self.values.iter().map(|v| other.values[*v]).collect(), target: other.target })
    }

    /// Sizes of the fibres over `0..=target`.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.target + 1];
        for v in &self.values {
            out[*v] += 1;
        }
        out
    }

    /// The map whose fibre over `j` has `sizes[j]` elements.
    pub fn from_fibre_sizes(sizes: &[usize]) -> Result<Self> {
        let values: Vec<usize> = sizes.iter().enumerate().flat_map(|(j, s)| std::iter::repeat_n(j, *s)).collect();
        Self::new(values, sizes.len().saturating_sub(1))
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.fibre_sizes().iter().all(|s| *s > 0)
    }

    /// Epi-mono factorization as `d^{a_r} .. d^{a_1} s^{b_1} .. s^{b_t}`: returns the
    /// codegeneracy indices in order of application, then the coface indices likewise.
    pub fn factor(&self) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut degens = Vec::new();
        let mut level = self.source();
        // repeated values, highest first so earlier indices stay valid
        for j in (0..self.source()).rev() {
            if self.values[j] == self.values[j + 1] {
                level -= 1;
                degens.push((level, j));
            }
        }
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let mut faces = Vec::new();
        let mut cur = image.len() - 1;
        for v in 0..=self.target {
            if !image.contains(&v) {
                cur += 1;
                faces.push((cur, v));
            }
        }
        (degens, faces)
    }

    /// Rebuilds a map from the output of [`SimplexMap::factor`].
    pub fn from_factors(source: usize, degens: &[(usize, usize)], faces: &[(usize, usize)]) -> Result<Self> {
        let mut m = SimplexMap::identity(source);
        for (level, j) in degens {
            m = m.then(&SimplexMap::codegeneracy(*level, *j))?;
        }
        for (level, i) in faces {
            m = m.then(&SimplexMap::coface(*level, *i))?;
        }
        Ok(m)
    }
}

/// All monotone maps `[m] -> [n]`, in lexicographic order of values.
pub fn all_maps(m: usize, n: usize) -> Vec<SimplexMap> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; m + 1];
    fn rec(pos: usize, lo: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<SimplexMap>) {
        if pos == cur.len() {
            out.push(SimplexMap { values: cur.clone(), target: n });
            return;
        }
        for v in lo..=n {
            cur[pos] = v;
            rec(pos + 1, v, n, cur, out);
        }
    }
    rec(0, 0, n, &mut cur, &mut out);
    out
}

/// Compositions of `total` into `parts` nonnegative parts, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Increasing `k`-subsets of `0..n`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Pairs `(I, sign)` with `I` a `p`-subset of `0..p+q` and `sign` the parity of
/// `Σ_ℓ (i_ℓ - ℓ + 1)` (one-based `ℓ`), i.e. of the shuffle permutation.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    subsets(p + q, p)
        .into_iter()
        .map(|i| {
            let j: Vec<usize> = (0..p + q).filter(|x| !i.contains(x)).collect();
            let e: usize = i.iter().enumerate().map(|(l, v)| v - l).sum();
            (i, j, e % 2 == 1)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosimplicial_identities() {
        for n in 1..5 {
            for i in 0..=n + 1 {
                for j in 0..i {
                    // d^i d^j = d^j d^{i-1} for j < i
                    let l = SimplexMap::coface(n, j).then(&SimplexMap::coface(n + 1, i)).unwrap();
                    let r = SimplexMap::coface(n, i - 1).then(&SimplexMap::coface(n + 1, j)).unwrap();
                    assert_eq!(l, r);
                }
            }
            for i in 0..n {
                for j in i..n {
                    // s^j s^i = s^i s^{j+1} for i <= j
                    let l = SimplexMap::codegeneracy(n, i).then(&SimplexMap::codegeneracy(n - 1, j)).unwrap();
                    let r = SimplexMap::codegeneracy(n, j + 1).then(&SimplexMap::codegeneracy(n - 1, i)).unwrap();
                    assert_eq!(l, r);
                }
            }
            for j in 0..n {
                assert_eq!(
                    SimplexMap::coface(n, j).then(&SimplexMap::codegeneracy(n - 1, j)).unwrap(),
                    SimplexMap::identity(n - 1)
                );
            }
        }
    }

    #[test]
    fn factorization_round_trips() {
        for m in 0..4 {
            for n in 0..4 {
                for f in all_maps(m, n) {
                    let (s, d) = f.factor();
                    assert_eq!(SimplexMap::from_factors(m, &s, &d).unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn counting() {
        assert_eq!(all_maps(2, 3).len(), 20);
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(subsets(4, 2).len(), 6);
        assert!(SimplexMap::new(vec![1, 0], 1).is_err());
        assert_eq!(SimplexMap::from_fibre_sizes(&[0, 2, 1]).unwrap().values(), &[1, 1, 2]);
        assert_eq!(SimplexMap::codegeneracy(1, 0).values(), &[0, 0, 1]);
    }

    #[test]
    fn shuffle_signs() {
        let s = shuffles(1, 1);
        assert_eq!(s, vec![(vec![0], vec![1], false), (vec![1], vec![0], true)]);
    }
}
