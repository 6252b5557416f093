//! Finite simplicial vector spaces, stored up to a top level, and their normalizations.

use std::collections::BTreeMap;

use rand::Rng;

use super::simplex::SimplexMap;
use crate::complexes::{BasisLabel, TruncatedComplex};
use crate::error::{Error, Result};
use crate::matrix::{Kernel, Quotient, SparseMatrix, SparseVec, Subspace};
use crate::scalar::{binomial, sign};

/// Levels `0..=top`; `faces[n][i]: A_n -> A_{n-1}` for `n >= 1` and
/// `degens[n][i]: A_n -> A_{n+1}` for `n < top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialModule {
    pub labels: Vec<Vec<BasisLabel>>,
    pub faces: Vec<Vec<SparseMatrix>>,
    pub degens: Vec<Vec<SparseMatrix>>,
}

/// A failed simplicial identity, named as an equation.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdentityFailure {
    pub level: usize,
    pub identity: String,
}

/// A normalization together with how each degree sits in the module.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub complex: TruncatedComplex,
    /// Kernel form: basis vectors in `A_n`. Quotient form: representatives.
    pub embeddings: Vec<SparseMatrix>,
    pub quotients: Vec<Option<Quotient>>,
}

impl Normalized {
    /// Class in the quotient form of a vector in `A_n`.
    pub fn project(&self, n: usize, v: &SparseVec) -> SparseVec {
        self.quotients[n].as_ref().expect("quotient form").project(v)
    }
}

impl SimplicialModule {
    pub fn new(labels: Vec<Vec<BasisLabel>>, faces: Vec<Vec<SparseMatrix>>, degens: Vec<Vec<SparseMatrix>>) -> Result<Self> {
        let top = labels.len().checked_sub(1).ok_or_else(|| Error::Malformed("no levels".into()))?;
        if faces.len() != top + 1 || degens.len() != top + 1 {
            return Err(Error::Dimension("one list of faces and degeneracies per level".into()));
        }
        for n in 0..=top {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            let want_degens = if n == top { 0 } else { n + 1 };
            if faces[n].len() != want_faces || degens[n].len() != want_degens {
                return Err(Error::Dimension(format!("wrong number of structure maps at level {n}")));
            }
            for f in &faces[n] {
                if f.cols() != labels[n].len() || f.rows() != labels[n - 1].len() {
                    return Err(Error::Dimension(format!("face at level {n} has the wrong shape")));
                }
            }
            for s in &degens[n] {
                if s.cols() != labels[n].len() || s.rows() != labels[n + 1].len() {
                    return Err(Error::Dimension(format!("degeneracy at level {n} has the wrong shape")));
                }
            }
        }
        Ok(Self { labels, faces, degens })
    }

    pub fn top(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    pub fn face(&self, n: usize, i: usize) -> &SparseMatrix {
        &self.faces[n][i]
    }

    pub fn degen(&self, n: usize, i: usize) -> &SparseMatrix {
        &self.degens[n][i]
    }

    /// The same vector space at every level with identity structure maps.
    pub fn constant(labels: Vec<BasisLabel>, top: usize) -> Self {
        let d = labels.len();
        let id = SparseMatrix::identity(d);
        Self {
            labels: vec![labels; top + 1],
            faces: (0..=top).map(|n| if n == 0 { vec![] } else { vec![id.clone(); n + 1] }).collect(),
            degens: (0..=top).map(|n| if n == top { vec![] } else { vec![id.clone(); n + 1] }).collect(),
        }
    }

    /// Action of a simplex map `φ: [m] -> [n]` as `A_n -> A_m`, via its factorization.
    pub fn act(&self, phi: &SimplexMap) -> SparseMatrix {
        let (degens, faces) = phi.factor();
        // φ = d .. d s .. s, so φ^* = s^* .. s^* d^* .. d^*, last coface applied first
        let mut m = SparseMatrix::identity(self.dim(phi.target()));
        for (level, i) in faces.iter().rev() {
            m = self.faces[*level][*i].mul(&m).expect("shapes");
        }
        for (level, j) in degens.iter().rev() {
            m = self.degens[*level][*j].mul(&m).expect("shapes");
        }
        m
    }

    pub fn check_identities(&self) -> std::result::Result<(), IdentityFailure> {
        let fail = |level, identity: String| Err(IdentityFailure { level, identity });
        let top = self.top();
        for n in 2..=top {
            for j in 1..=n {
                for i in 0..j {
                    let l = self.faces[n - 1][i].mul(&self.faces[n][j]).unwrap();
                    let r = self.faces[n - 1][j - 1].mul(&self.faces[n][i]).unwrap();
                    if l != r {
                        return fail(n, format!("∂{i}∂{j} = ∂{}∂{i}", j - 1));
                    }
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let l = self.degens[n + 1][i].mul(&self.degens[n][j]).unwrap();
                    let r = self.degens[n + 1][j + 1].mul(&self.degens[n][i]).unwrap();
                    if l != r {
                        return fail(n, format!("σ{i}σ{j} = σ{}σ{i}", j + 1));
                    }
                }
            }
        }
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let l = self.faces[n + 1][i].mul(&self.degens[n][j]).unwrap();
                    let r = if i < j {
                        self.degens[n - 1][j - 1].mul(&self.faces[n][i]).unwrap()
                    } else if i == j || i == j + 1 {
                        SparseMatrix::identity(self.dim(n))
                    } else {
                        self.degens[n - 1][j].mul(&self.faces[n][i - 1]).unwrap()
                    };
                    if l != r {
                        return fail(n, format!("∂{i}σ{j}"));
                    }
                }
            }
        }
        Ok(())
    }

    fn weights(&self, n: usize) -> Vec<u32> {
        let mut w: Vec<u32> = self.labels[n].iter().map(|l| l.weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    fn columns_of_weight(&self, n: usize, w: u32) -> Vec<usize> {
        (0..self.dim(n)).filter(|i| self.labels[n][*i].weight == w).collect()
    }

    fn preserves_weight(&self, m: &SparseMatrix, src: usize, tgt: usize) -> bool {
        m.columns()
            .iter()
            .enumerate()
            .all(|(c, col)| col.iter().all(|(r, _)| self.labels[tgt][r].weight == self.labels[src][c].weight))
    }

    /// `∩_{i>=1} ker ∂_i` with differential `∂_0`, in cohomological degree `-n`.
    pub fn normalize_kernel(&self) -> Result<Normalized> {
        let top = self.top();
        // (weight, vector, free column): each vector is 1 at its free column and the
        // others vanish there
        let mut kernels: Vec<Vec<(u32, SparseVec, usize)>> = Vec::new();
        for n in 0..=top {
            if n == 0 {
                kernels.push((0..self.dim(0)).map(|i| (self.labels[0][i].weight, SparseVec::unit(i), i)).collect());
                continue;
            }
            for i in 1..=n {
                if !self.preserves_weight(&self.faces[n][i], n, n - 1) {
                    return Err(Error::Malformed(format!("face ∂{i} at level {n} does not preserve weight")));
                }
            }
            let mut vs = Vec::new();
            for w in self.weights(n) {
                let cols = self.columns_of_weight(n, w);
                let blocks: Vec<SparseMatrix> =
                    (1..=n).map(|i| self.faces[n][i].restrict(&(0..self.dim(n - 1)).collect::<Vec<_>>(), &cols)).collect();
                let k: Kernel = SparseMatrix::vstack(&blocks.iter().collect::<Vec<_>>())?.kernel();
                for (v, f) in k.basis.iter().zip(&k.free) {
                    vs.push((w, v.map_indices(|c| cols[c]), cols[*f]));
                }
            }
            kernels.push(vs);
        }
        let mut comps = BTreeMap::new();
        let mut embeddings = Vec::new();
        for (n, vs) in kernels.iter().enumerate() {
            let labels =
                vs.iter().enumerate().map(|(k, (w, v, _))| BasisLabel::new(*w, format!("N{n}[{k}]{}", self.describe(n, v)))).collect();
            comps.insert(-(n as i32), labels);
            embeddings.push(SparseMatrix::from_columns(self.dim(n), vs.iter().map(|(_, v, _)| v.clone()).collect())?);
        }
        let mut diffs = BTreeMap::new();
        for n in 1..=top {
            let target = &kernels[n - 1];
            let cols = kernels[n]
                .iter()
                .map(|(w, v, _)| {
                    let img = self.faces[n][0].apply(v);
                    let coords = SparseVec::from_pairs(target.iter().enumerate().map(|(k, (_, _, f))| (k, img.get(*f))));
                    let mut back = SparseVec::new();
                    for (k, x) in coords.iter() {
                        back = back.add_scaled(x, &target[k].1);
                    }
                    if back == img {
                        Ok(coords)
                    } else {
                        Err(Error::NotAComplex {
                            degree: -(n as i32),
                            weight: *w,
                            detail: "∂0 leaves the normalized subspace".into(),
                        })
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            diffs.insert(-(n as i32), SparseMatrix::from_columns(target.len(), cols)?);
        }
        Ok(Normalized { complex: TruncatedComplex::new(comps, diffs)?, embeddings, quotients: vec![None; top + 1] })
    }

    fn describe(&self, n: usize, v: &SparseVec) -> String {
        let mut parts: Vec<String> = v.iter().take(3).map(|(i, _)| self.labels[n][i].name.clone()).collect();
        if v.nnz() > 3 {
            parts.push("..".into());
        }
        format!("({})", parts.join("+"))
    }

    /// `A_n / Σ im σ_i` with the alternating face differential.
    pub fn normalize_quotient(&self) -> Result<Normalized> {
        let top = self.top();
        let mut quotients = Vec::new();
        for n in 0..=top {
            let mut sub = Subspace::new(self.dim(n));
            if n > 0 {
                for s in &self.degens[n - 1] {
                    for col in s.columns() {
                        sub.insert(col);
                    }
                }
            }
            quotients.push(Quotient::new(sub));
        }
        let mut comps = BTreeMap::new();
        let mut embeddings = Vec::new();
        for (n, q) in quotients.iter().enumerate() {
            let labels = q.basis_columns.iter().map(|c| self.labels[n][*c].clone()).collect();
            comps.insert(-(n as i32), labels);
            embeddings.push(SparseMatrix::from_columns(self.dim(n), (0..q.dim()).map(|k| q.representative(k)).collect())?);
        }
        let mut diffs = BTreeMap::new();
        for n in 1..=top {
            let alt = self.alternating_face(n);
            let cols = (0..quotients[n].dim()).map(|k| quotients[n - 1].project(&alt.apply(&quotients[n].representative(k)))).collect();
            diffs.insert(-(n as i32), SparseMatrix::from_columns(quotients[n - 1].dim(), cols)?);
        }
        let quotients = quotients.into_iter().map(Some).collect();
        Ok(Normalized { complex: TruncatedComplex::new(comps, diffs)?, embeddings, quotients })
    }

    pub fn alternating_face(&self, n: usize) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim(n - 1), self.dim(n));
        for i in 0..=n {
            m = m.add_scaled(&sign(i % 2 == 1), &self.faces[n][i]).expect("same shape");
        }
        m
    }

    /// The projection from the kernel form to the quotient form, degree by degree,
    /// checked to be invertible and to intertwine `∂_0` with `Σ (-1)^i ∂_i`.
    pub fn kernel_to_quotient(&self) -> Result<Vec<SparseMatrix>> {
        let k = self.normalize_kernel()?;
        let q = self.normalize_quotient()?;
        let mut isos = Vec::new();
        for n in 0..=self.top() {
            let cols = k.embeddings[n].columns().iter().map(|v| q.project(n, v)).collect();
            let m = SparseMatrix::from_columns(q.complex.dim(-(n as i32)), cols)?;
            if m.rows() != m.cols() || m.rank() != m.rows() {
                return Err(Error::NotAComplex {
                    degree: -(n as i32),
                    weight: 0,
                    detail: format!("kernel form ({}) and quotient form ({}) differ", m.cols(), m.rows()),
                });
            }
            isos.push(m);
        }
        for n in 1..=self.top() {
            let deg = -(n as i32);
            let l = q.complex.d(deg).mul(&isos[n])?;
            let r = isos[n - 1].mul(&k.complex.d(deg))?;
            if l != r {
                return Err(Error::NotAComplex { degree: deg, weight: 0, detail: "projection is not a chain map".into() });
            }
        }
        Ok(isos)
    }

    /// `dim N_n = Σ_k (-1)^{n-k} C(n, k) dim A_k`, from `A_n = ⊕_{[n]↠[k]} N_k`.
    pub fn dold_kan_dims(&self) -> Vec<i64> {
        (0..=self.top())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        let t = (binomial(n, k) * self.dim(k)) as i64;
                        if (n - k) % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum()
            })
            .collect()
    }

    /// Levelwise tensor product `(A ⊗ B)_n = A_n ⊗ B_n`, index `a * dim B_n + b`.
    pub fn tensor(&self, other: &SimplicialModule) -> Result<SimplicialModule> {
        let top = self.top().min(other.top());
        let labels = (0..=top)
            .map(|n| {
                self.labels[n]
                    .iter()
                    .flat_map(|a| {
                        other.labels[n].iter().map(move |b| BasisLabel::new(a.weight + b.weight, format!("{}⊗{}", a.name, b.name)))
                    })
                    .collect()
            })
            .collect();
        let faces = (0..=top).map(|n| self.faces[n].iter().zip(&other.faces[n]).map(|(a, b)| a.kron(b)).collect()).collect();
        let degens = (0..=top)
            .map(|n| if n == top { vec![] } else { self.degens[n].iter().zip(&other.degens[n]).map(|(a, b)| a.kron(b)).collect() })
            .collect();
        SimplicialModule::new(labels, faces, degens)
    }
}

/// `ℚ` applied to the nerve of a finite poset, levels `0..=top`. Level `n` is the set
/// of chains `x_0 <= .. <= x_n`.
pub fn poset_nerve(leq: &[Vec<bool>], top: usize) -> SimplicialModule {
    let m = leq.len();
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..m).map(|x| vec![x]).collect()];
    for n in 1..=top {
        let next = levels[n - 1]
            .iter()
            .flat_map(|c| {
                let last = *c.last().unwrap();
                (0..m).filter(move |y| leq[last][*y]).map(move |y| {
                    let mut d = c.clone();
                    d.push(y);
                    d
                })
            })
            .collect();
        levels.push(next);
    }
    let index: Vec<BTreeMap<&Vec<usize>, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(i, c)| (c, i)).collect()).collect();
    let map = |n: usize, tgt: usize, f: &dyn Fn(&Vec<usize>) -> Vec<usize>| {
        let cols = levels[n].iter().map(|c| SparseVec::unit(index[tgt][&f(c)])).collect();
        SparseMatrix::from_columns(levels[tgt].len(), cols).expect("in range")
    };
    let faces = (0..=top)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    map(n, n - 1, &|c: &Vec<usize>| {
                        let mut d = c.clone();
                        d.remove(i);
                        d
                    })
                })
                .collect()
        })
        .collect();
    let degens = (0..=top)
        .map(|n| {
            if n == top {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    map(n, n + 1, &|c: &Vec<usize>| {
                        let mut d = c.clone();
                        d.insert(i, c[i]);
                        d
                    })
                })
                .collect()
        })
        .collect();
    let labels = levels
        .iter()
        .map(|l| l.iter().map(|c| BasisLabel::new(0, c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))).collect())
        .collect();
    SimplicialModule::new(labels, faces, degens).expect("nerve shapes")
}

/// The simplex `Δ^n` as the nerve of `[n]`.
pub fn standard_simplex(n: usize, top: usize) -> SimplicialModule {
    let leq: Vec<Vec<bool>> = (0..=n).map(|a| (0..=n).map(|b| a <= b).collect()).collect();
    poset_nerve(&leq, top)
}

/// A random partial order on `m` points: a random relation below the diagonal,
/// transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, m: usize, density: f64) -> Vec<Vec<bool>> {
    let mut leq: Vec<Vec<bool>> = (0..m).map(|a| (0..m).map(|b| a == b).collect()).collect();
    for a in 0..m {
        for b in a + 1..m {
            if rng.gen_bool(density) {
                leq[a][b] = true;
            }
        }
    }
    for k in 0..m {
        for a in 0..m {
            for b in 0..m {
                if leq[a][k] && leq[k][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    leq
}

/// A random simplicial module with a weight grading: the nerve of a random poset,
/// tensored with a second one to mix levels.
pub fn random_family(seed: u64, top: usize) -> SimplicialModule {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(2..=4);
    let a = poset_nerve(&random_poset(&mut rng, m, 0.5), top);
    if rng.gen_bool(0.5) {
        let b = poset_nerve(&random_poset(&mut rng, 2, 0.5), top);
        a.tensor(&b).expect("same top")
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_has_binomial_normalization() {
        let s = standard_simplex(2, 3);
        assert!(s.check_identities().is_ok());
        let k = s.normalize_kernel().unwrap();
        let dims: Vec<usize> = (0..=3).map(|n| k.complex.dim(-n)).collect();
        assert_eq!(dims, vec![3, 3, 1, 0]);
    }

    #[test]
    fn constant_module_is_concentrated_in_degree_zero() {
        let c = SimplicialModule::constant(vec![BasisLabel::new(0, "a"), BasisLabel::new(1, "b")], 3);
        assert!(c.check_identities().is_ok());
        let k = c.normalize_kernel().unwrap();
        assert_eq!((0..=3).map(|n| k.complex.dim(-n)).collect::<Vec<_>>(), vec![2, 0, 0, 0]);
    }

    #[test]
    fn broken_face_is_caught() {
        let mut s = standard_simplex(1, 2);
        s.faces[2][0] = s.faces[2][1].clone();
        assert!(s.check_identities().is_err());
    }

    #[test]
    fn action_of_composites() {
        let s = standard_simplex(2, 3);
        let d = SimplexMap::coface(2, 1);
        assert_eq!(s.act(&d), s.faces[2][1]);
        let sd = SimplexMap::codegeneracy(1, 0).then(&SimplexMap::coface(2, 2)).unwrap();
        assert_eq!(s.act(&sd), s.degens[1][0].mul(&s.faces[2][2]).unwrap());
    }
}
