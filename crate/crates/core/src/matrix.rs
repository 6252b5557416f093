use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Q;

/// Sparse vector with strictly increasing indices and no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, Q::one())] }
    }

    /// Sums repeated indices and drops zeros.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, x) in pairs {
            *map.entry(i).or_insert_with(Q::zero) += x;
        }
        Self { entries: map.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn from_dense(v: &[Q]) -> Self {
        Self {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); len];
        for (i, x) in &self.entries {
            v[*i] = x.clone();
        }
        v
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Q, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0).unwrap_or(usize::MAX);
            let ib = other.entries.get(b).map(|e| e.0).unwrap_or(usize::MAX);
            if ia < ib {
                out.push(self.entries[a].clone());
                a += 1;
            } else if ib < ia {
                out.push((ib, c * &other.entries[b].1));
                b += 1;
            } else {
                let s = &self.entries[a].1 + c * &other.entries[b].1;
                if !s.is_zero() {
                    out.push((ia, s));
                }
                a += 1;
                b += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Q::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&-Q::one(), other)
    }

    pub fn scaled(&self, c: &Q) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn dot(&self, other: &SparseVec) -> Q {
        let mut s = Q::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            match self.entries[a].0.cmp(&other.entries[b].0) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    s += &self.entries[a].1 * &other.entries[b].1;
                    a += 1;
                    b += 1;
                }
            }
        }
        s
    }

    /// Keeps the entries at the given sorted positions, renumbered.
    pub fn select(&self, positions: &[usize]) -> SparseVec {
        let mut out = Vec::new();
        for (new, old) in positions.iter().enumerate() {
            let x = self.get(*old);
            if !x.is_zero() {
                out.push((new, x));
            }
        }
        SparseVec { entries: out }
    }

    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (i + offset, x.clone())).collect() }
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, x)| (f(*i), x.clone())))
    }
}

/// Column-major sparse matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: n, columns: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Result<Self> {
        for c in &columns {
            if let Some(m) = c.max_index() {
                if m >= rows {
                    return Err(Error::Dimension(format!("row index {m} in a matrix with {rows} rows")));
                }
            }
        }
        Ok(Self { rows, cols: columns.len(), columns })
    }

    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, Q)>>(
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Result<Self> {
        let mut per_col: Vec<Vec<(usize, Q)>> = vec![Vec::new(); cols];
        for (r, c, x) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Dimension(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
            per_col[c].push((r, x));
        }
        Ok(Self { rows, cols, columns: per_col.into_iter().map(SparseVec::from_pairs).collect() })
    }

    pub fn from_dense(d: &[Vec<Q>], cols: usize) -> Self {
        let rows = d.len();
        let trip = d
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, x)| (r, c, x.clone())));
        Self::from_triplets(rows, cols, trip).expect("dense rows have consistent width")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.columns[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col.iter() {
                d[r][c] = x.clone();
            }
        }
        d
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (c, x) in v.iter() {
            for (r, y) in self.columns[c].iter() {
                *acc.entry(r).or_insert_with(Q::zero) += x * y;
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// `self * other`
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&Q::one(), other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&-Q::one(), other)
    }

    pub fn add_scaled(&self, c: &Q, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a.add_scaled(c, b)).collect(),
        })
    }

    pub fn scaled(&self, c: &Q) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut per_row: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col.iter() {
                per_row[r].push((c, x.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: per_row.into_iter().map(|e| SparseVec { entries: e }).collect(),
        }
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().columns
    }

    /// Stacks matrices with a common column count on top of each other.
    pub fn vstack(blocks: &[&SparseMatrix]) -> Result<SparseMatrix> {
        let cols = blocks.first().map(|b| b.cols).unwrap_or(0);
        let mut columns = vec![Vec::new(); cols];
        let mut offset = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Dimension("vstack with differing column counts".into()));
            }
            for (c, col) in b.columns.iter().enumerate() {
                columns[c].extend(col.iter().map(|(r, x)| (r + offset, x.clone())));
            }
            offset += b.rows;
        }
        Ok(SparseMatrix {
            rows: offset,
            cols,
            columns: columns.into_iter().map(|e| SparseVec { entries: e }).collect(),
        })
    }

    /// Kronecker product; index of `(i, j)` is `i * other.dim + j`.
    pub fn kron(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut columns = Vec::with_capacity(self.cols * other.cols);
        for a in &self.columns {
            for b in &other.columns {
                let mut e = Vec::with_capacity(a.nnz() * b.nnz());
                for (i, x) in a.iter() {
                    for (j, y) in b.iter() {
                        e.push((i * other.rows + j, x * y));
                    }
                }
                columns.push(SparseVec { entries: e });
            }
        }
        SparseMatrix { rows: self.rows * other.rows, cols: self.cols * other.cols, columns }
    }

    /// Keeps the listed rows and columns (both sorted), renumbered.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> SparseMatrix {
        SparseMatrix {
            rows: rows.len(),
            cols: cols.len(),
            columns: cols.iter().map(|c| self.columns[*c].select(rows)).collect(),
        }
    }

    /// Inverse of a square matrix, or an error if it is singular.
    pub fn inverse(&self) -> Result<SparseMatrix> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::Dimension(format!("inverse of a {}x{} matrix", self.rows, self.cols)));
        }
        let mut e = Echelon::new(2 * n);
        for (r, row) in self.row_vectors().into_iter().enumerate() {
            let mut entries: Vec<(usize, Q)> = row.iter().map(|(c, x)| (c, x.clone())).collect();
            entries.push((n + r, Q::one()));
            e.insert(&SparseVec::from_pairs(entries));
        }
        let rref = e.rref();
        if e.rank() < n || e.pivot_columns().iter().any(|c| *c >= n) {
            return Err(Error::Dimension("matrix is singular".into()));
        }
        let rows: Vec<SparseVec> = rref.iter().map(|r| SparseVec::from_pairs(r.iter().filter(|(c, _)| *c >= n).map(|(c, x)| (c - n, x.clone())))).collect();
        Ok(SparseMatrix::from_columns(n, rows)?.transpose())
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in self.row_vectors() {
            e.insert(&r);
        }
        e.rank()
    }

    pub fn kernel(&self) -> Kernel {
        let mut e = Echelon::new(self.cols);
        for r in self.row_vectors() {
            e.insert(&r);
        }
        Kernel::from_echelon(e)
    }

    pub fn rank_kernel(&self) -> (usize, Kernel) {
        let k = self.kernel();
        (self.cols - k.dim(), k)
    }
}

type IntRow = Vec<(usize, BigInt)>;

fn content_normalize(row: &mut IntRow) -> BigInt {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if let Some((_, lead)) = row.first() {
        if lead.is_negative() {
            g = -g;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    g
}

fn to_int_row(v: &SparseVec) -> (IntRow, Q) {
    let mut l = BigInt::one();
    for (_, x) in v.iter() {
        l = l.lcm(x.denom());
    }
    let lq = Q::from_integer(l.clone());
    let row = v.iter().map(|(i, x)| (i, (x * &lq).to_integer())).collect();
    (row, Q::one() / lq)
}

/// `p * row - a * piv`, where `p` is the lead of `piv` and `a` the entry of `row` at that column.
fn eliminate(row: &IntRow, piv: &IntRow, col: usize) -> (IntRow, BigInt) {
    let p = &piv[0].1;
    let a = &row[row.binary_search_by_key(&col, |e| e.0).expect("column present")].1;
    let g = p.gcd(a);
    let pm = p / &g;
    let am = a / &g;
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = piv.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, &pm * &row[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&am * &piv[j].1)));
            j += 1;
        } else {
            let s = &pm * &row[i].1 - &am * &piv[j].1;
            if !s.is_zero() {
                out.push((ci, s));
            }
            i += 1;
            j += 1;
        }
    }
    (out, pm)
}

/// Incremental row echelon form using fraction-free integer elimination.
///
/// Rows are kept primitive (content divided out). Pivots are taken in order of
/// insertion, so results are deterministic.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<IntRow>,
    lead: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new(), lead: BTreeMap::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.lead.keys().copied().collect()
    }

    /// Adds a vector; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let (mut row, _) = to_int_row(v);
        while let Some((c, _)) = row.first() {
            let c = *c;
            match self.lead.get(&c) {
                Some(&r) => {
                    let (next, _) = eliminate(&row, &self.rows[r], c);
                    row = next;
                    content_normalize(&mut row);
                }
                None => break,
            }
        }
        if row.is_empty() {
            return false;
        }
        content_normalize(&mut row);
        self.lead.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let (mut row, mut scale) = to_int_row(v);
        let mut cursor = 0usize;
        loop {
            let hit = row.iter().map(|e| e.0).find(|c| *c >= cursor && self.lead.contains_key(c));
            let Some(c) = hit else { break };
            let (mut next, pm) = eliminate(&row, &self.rows[self.lead[&c]], c);
            let g = content_normalize(&mut next);
            scale = scale * Q::from_integer(if g.is_zero() { BigInt::one() } else { g }) / Q::from_integer(pm);
            row = next;
            cursor = c + 1;
        }
        SparseVec { entries: row.into_iter().map(|(i, x)| (i, Q::from_integer(x) * &scale)).collect() }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Reduced row echelon rows with unit leads, ordered by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = self
            .lead
            .values()
            .map(|&r| {
                let lead = Q::from_integer(self.rows[r][0].1.clone());
                SparseVec {
                    entries: self.rows[r].iter().map(|(i, x)| (*i, Q::from_integer(x.clone()) / &lead)).collect(),
                }
            })
            .collect();
        let pivots: Vec<usize> = self.lead.keys().copied().collect();
        for k in (0..rows.len()).rev() {
            let pc = pivots[k];
            for j in 0..k {
                let x = rows[j].get(pc);
                if !x.is_zero() {
                    rows[j] = rows[j].add_scaled(&-x, &rows[k]);
                }
            }
        }
        rows
    }
}

/// Kernel basis in reduced form: one vector per free column, equal to 1 there and
/// 0 at every other free column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub width: usize,
    pub free: Vec<usize>,
    pub basis: Vec<SparseVec>,
}

impl Kernel {
    pub fn from_echelon(e: Echelon) -> Kernel {
        let width = e.width();
        let rref = e.rref();
        let pivots: Vec<usize> = e.pivot_columns();
        let is_pivot: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..width).filter(|c| !is_pivot.contains(c)).collect();
        let slot: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        let mut parts: Vec<Vec<(usize, Q)>> = free.iter().map(|c| vec![(*c, Q::one())]).collect();
        for (row, pc) in rref.iter().zip(&pivots) {
            for (c, x) in row.iter() {
                if c != *pc {
                    parts[slot[&c]].push((*pc, -x.clone()));
                }
            }
        }
        let basis = parts.into_iter().map(SparseVec::from_pairs).collect();
        Kernel { width, free, basis }
    }

    pub fn full(width: usize) -> Kernel {
        Kernel { width, free: (0..width).collect(), basis: (0..width).map(SparseVec::unit).collect() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a vector assumed to lie in the kernel.
    pub fn coordinates(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(self.free.iter().enumerate().map(|(k, c)| (k, v.get(*c))))
    }

    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (k, x) in coords.iter() {
            acc = acc.add_scaled(x, &self.basis[k]);
        }
        acc
    }

    /// Coordinates of `v` if it lies in the span, checked exactly.
    pub fn try_coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let c = self.coordinates(v);
        if self.combine(&c) == *v {
            Some(c)
        } else {
            None
        }
    }

    /// Inclusion of the kernel as a `width x dim` matrix.
    pub fn inclusion(&self) -> SparseMatrix {
        SparseMatrix { rows: self.width, cols: self.basis.len(), columns: self.basis.clone() }
    }
}

/// Subspace spanned by some vectors, with reduction modulo the span.
#[derive(Clone, Debug)]
pub struct Subspace {
    ech: Echelon,
}

impl Subspace {
    pub fn new(width: usize) -> Self {
        Self { ech: Echelon::new(width) }
    }

    pub fn spanned_by<'a, I: IntoIterator<Item = &'a SparseVec>>(width: usize, vs: I) -> Self {
        let mut s = Self::new(width);
        for v in vs {
            s.ech.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.ech.insert(v)
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.ech.contains(v)
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.ech.reduce(v)
    }

    /// Columns outside the pivots; they index a basis of the quotient.
    pub fn complement_columns(&self) -> Vec<usize> {
        let piv: std::collections::HashSet<usize> = self.ech.pivot_columns().into_iter().collect();
        (0..self.ech.width()).filter(|c| !piv.contains(c)).collect()
    }
}

/// Quotient `V / D` with basis the classes of the standard vectors at non-pivot columns.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub: Subspace,
    pub basis_columns: Vec<usize>,
    position: BTreeMap<usize, usize>,
}

impl Quotient {
    pub fn new(sub: Subspace) -> Self {
        let basis_columns = sub.complement_columns();
        let position = basis_columns.iter().enumerate().map(|(k, c)| (*c, k)).collect();
        Self { sub, basis_columns, position }
    }

    pub fn dim(&self) -> usize {
        self.basis_columns.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ech.width()
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.sub.reduce(v);
        SparseVec::from_pairs(r.iter().map(|(c, x)| (self.position[&c], x.clone())))
    }

    pub fn representative(&self, k: usize) -> SparseVec {
        SparseVec::unit(self.basis_columns[k])
    }

    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        let cols = rows[0].len();
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|x| q(*x)).collect()).collect::<Vec<_>>(), cols)
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]).rank(), 2);
        assert_eq!(SparseMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn kernel_is_reduced_and_annihilated() {
        let a = m(&[&[1, 1, 0, 2], &[0, 0, 1, 3]]);
        let k = a.kernel();
        assert_eq!(k.free, vec![1, 3]);
        for v in &k.basis {
            assert!(a.apply(v).is_zero());
        }
        assert_eq!(k.basis[0], SparseVec::from_pairs([(0, q(-1)), (1, q(1))]));
    }

    #[test]
    fn reduce_gives_exact_remainder() {
        let s = Subspace::spanned_by(3, &[SparseVec::from_pairs([(0, q(2)), (1, q(1))])]);
        let r = s.reduce(&SparseVec::from_pairs([(0, q(1)), (2, q(5))]));
        assert_eq!(r, SparseVec::from_pairs([(1, qf(-1, 2)), (2, q(5))]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), SparseMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
        assert_eq!(SparseMatrix::zeros(0, 0).inverse().unwrap().rows(), 0);
    }

    #[test]
    fn kron_indexing() {
        let a = m(&[&[1, 2]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 2);
        assert_eq!(k.cols(), 4);
        assert_eq!(k.get(0, 3), q(2));
        assert_eq!(k.get(1, 0), q(1));
        assert_eq!(k.get(1, 2), q(2));
    }
}
