use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SparseVec;
use crate::scalar::{fmt_q, parse_q, sign, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDef {
    pub name: String,
    pub degree: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDef {
    pub gen: String,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDef {
    pub args: Vec<String>,
    pub value: Vec<TermDef>,
}

/// On-disk description of a finite-dimensional L-infinity algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDef {
    pub name: String,
    pub generators: Vec<GeneratorDef>,
    pub brackets: Vec<BracketDef>,
    pub max_arity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: i32,
    pub filtration: Option<u32>,
}

/// Graded vector space with graded antisymmetric brackets `l_k` of degree `2 - k`.
///
/// One bracket is stored per sorted argument multiset; other orders follow by the
/// Koszul sign rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LInfinityStructure {
    pub name: String,
    basis: Vec<BasisElement>,
    brackets: BTreeMap<Vec<usize>, SparseVec>,
    pub max_arity: usize,
    ordered: BTreeMap<usize, Vec<(Vec<usize>, SparseVec)>>,
}

/// Sign taking the bracket of `args` (in this order) to the bracket of the sorted args.
pub fn sort_sign(args: &[usize], degree: impl Fn(usize) -> i32) -> (bool, Vec<usize>) {
    let mut v = args.to_vec();
    let mut neg = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                let (a, b) = (degree(v[j]), degree(v[j + 1]));
                // graded antisymmetry: swapping x, y costs -(-1)^{|x||y|}
                if (a * b).rem_euclid(2) == 0 {
                    neg = !neg;
                }
                v.swap(j, j + 1);
            }
        }
    }
    (neg, v)
}

fn distinct_permutations(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

impl LInfinityStructure {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<BasisElement>,
        entries: Vec<(Vec<usize>, SparseVec)>,
        max_arity: usize,
    ) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            if seen.insert(b.name.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate generator `{}`", b.name)));
            }
        }
        let mut brackets: BTreeMap<Vec<usize>, SparseVec> = BTreeMap::new();
        for (args, value) in entries {
            let k = args.len();
            if k == 0 || k > max_arity {
                return Err(Error::Malformed(format!("bracket of arity {k} with max_arity {max_arity}")));
            }
            if let Some(&bad) = args.iter().find(|a| **a >= basis.len()) {
                return Err(Error::Malformed(format!("bracket argument #{bad} out of range")));
            }
            let names: Vec<&str> = args.iter().map(|a| basis[*a].name.as_str()).collect();
            let target = args.iter().map(|a| basis[*a].degree).sum::<i32>() + 2 - k as i32;
            for (i, _) in value.iter() {
                if i >= basis.len() {
                    return Err(Error::Malformed(format!("bracket value index #{i} out of range")));
                }
                if basis[i].degree != target {
                    return Err(Error::BracketDegree {
                        bracket: format!("{names:?}"),
                        value: basis[i].name.clone(),
                        degree: basis[i].degree,
                        expected: target,
                    });
                }
            }
            let (neg, sorted) = sort_sign(&args, |a| basis[a].degree);
            if value.is_zero() {
                continue;
            }
            for w in sorted.windows(2) {
                if w[0] == w[1] && basis[w[0]].degree.rem_euclid(2) == 0 {
                    return Err(Error::Malformed(format!(
                        "bracket {names:?} repeats the even element `{}` but is nonzero",
                        basis[w[0]].name
                    )));
                }
            }
            if brackets.contains_key(&sorted) {
                return Err(Error::Malformed(format!("bracket {names:?} declared twice")));
            }
            brackets.insert(sorted, value.scaled(&sign(neg)));
        }
        let mut s = Self { name: name.into(), basis, brackets, max_arity, ordered: BTreeMap::new() };
        s.ordered = s.build_ordered();
        Ok(s)
    }

    fn build_ordered(&self) -> BTreeMap<usize, Vec<(Vec<usize>, SparseVec)>> {
        let mut out: BTreeMap<usize, Vec<(Vec<usize>, SparseVec)>> = BTreeMap::new();
        for (args, v) in &self.brackets {
            for perm in distinct_permutations(args) {
                let (neg, _) = sort_sign(&perm, |a| self.basis[a].degree);
                out.entry(args.len()).or_default().push((perm, v.scaled(&sign(neg))));
            }
        }
        out
    }

    pub fn from_def(def: &AlgebraDef) -> Result<Self> {
        let basis: Vec<BasisElement> = def
            .generators
            .iter()
            .map(|g| BasisElement { name: g.name.clone(), degree: g.degree, filtration: g.filtration })
            .collect();
        let index: HashMap<&str, usize> = basis.iter().enumerate().map(|(i, b)| (b.name.as_str(), i)).collect();
        let lookup = |n: &str| index.get(n).copied().ok_or_else(|| Error::UnknownGenerator(n.to_string()));
        let mut entries = Vec::new();
        for b in &def.brackets {
            let args = b.args.iter().map(|a| lookup(a)).collect::<Result<Vec<_>>>()?;
            let mut pairs = Vec::new();
            for t in &b.value {
                pairs.push((lookup(&t.gen)?, parse_q(&t.coef)?));
            }
            entries.push((args, SparseVec::from_pairs(pairs)));
        }
        let s = Self::new(def.name.clone(), basis, entries, def.max_arity)?;
        s.check_filtration()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let def: AlgebraDef = serde_json::from_str(text)?;
        Self::from_def(&def)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_def(&self) -> AlgebraDef {
        AlgebraDef {
            name: self.name.clone(),
            generators: self
                .basis
                .iter()
                .map(|b| GeneratorDef { name: b.name.clone(), degree: b.degree, filtration: b.filtration })
                .collect(),
            brackets: self
                .brackets
                .iter()
                .map(|(args, v)| BracketDef {
                    args: args.iter().map(|a| self.basis[*a].name.clone()).collect(),
                    value: v.iter().map(|(i, c)| TermDef { gen: self.basis[i].name.clone(), coef: fmt_q(c) }).collect(),
                })
                .collect(),
            max_arity: self.max_arity,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_def()).expect("def serializes")
    }

    /// Filtration data, when given, must satisfy `l_k(F_a, ..) ⊂ F_(a + .. + 1)`.
    fn check_filtration(&self) -> Result<()> {
        if self.basis.iter().all(|b| b.filtration.is_none()) {
            return Ok(());
        }
        if self.basis.iter().any(|b| b.filtration.is_none()) {
            return Err(Error::Malformed("filtration must be given for every generator or none".into()));
        }
        for (args, v) in &self.brackets {
            let need: u32 = args.iter().map(|a| self.basis[*a].filtration.unwrap()).sum::<u32>() + 1;
            for (i, _) in v.iter() {
                if self.basis[i].filtration.unwrap() < need {
                    return Err(Error::Malformed(format!(
                        "bracket of {:?} leaves filtration level {need}",
                        args.iter().map(|a| &self.basis[*a].name).collect::<Vec<_>>()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.basis[i].degree
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.basis.iter().position(|b| b.name == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn dim_in_degree(&self, d: i32) -> usize {
        self.basis.iter().filter(|b| b.degree == d).count()
    }

    pub fn basis_in_degree(&self, d: i32) -> Vec<usize> {
        (0..self.basis.len()).filter(|i| self.basis[*i].degree == d).collect()
    }

    pub fn stored_brackets(&self) -> &BTreeMap<Vec<usize>, SparseVec> {
        &self.brackets
    }

    /// Every ordering of every stored multiset of arity `k`, with its signed value.
    pub fn ordered_terms(&self, k: usize) -> &[(Vec<usize>, SparseVec)] {
        self.ordered.get(&k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn bracket(&self, args: &[usize]) -> SparseVec {
        let (neg, sorted) = sort_sign(args, |a| self.basis[a].degree);
        match self.brackets.get(&sorted) {
            Some(v) => v.scaled(&sign(neg)),
            None => SparseVec::new(),
        }
    }

    /// Multilinear extension to arbitrary elements; each argument must be homogeneous.
    pub fn bracket_elements(&self, args: &[&SparseVec]) -> SparseVec {
        fn rec(s: &LInfinityStructure, args: &[&SparseVec], pos: usize, cur: &mut Vec<usize>, c: Q, acc: &mut SparseVec) {
            if pos == args.len() {
                *acc = acc.add_scaled(&c, &s.bracket(cur));
                return;
            }
            for (i, x) in args[pos].iter() {
                cur.push(i);
                rec(s, args, pos + 1, cur, &c * x, acc);
                cur.pop();
            }
        }
        let mut acc = SparseVec::new();
        rec(self, args, 0, &mut Vec::new(), Q::from_integer(1.into()), &mut acc);
        acc
    }

    pub fn max_bracket_arity(&self) -> usize {
        self.brackets.keys().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.keys().all(|a| a.len() == 1)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.basis.iter().map(|b| b.degree).min()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.basis.iter().map(|b| b.degree).max()
    }

    fn restricted(&self, name: String, keep: &[usize]) -> LInfinityStructure {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(n, o)| (*o, n)).collect();
        let basis = keep.iter().map(|i| self.basis[*i].clone()).collect();
        let entries = self
            .brackets
            .iter()
            .filter(|(args, _)| args.iter().all(|a| pos.contains_key(a)))
            .map(|(args, v)| {
                let value = SparseVec::from_pairs(v.iter().filter_map(|(i, c)| pos.get(&i).map(|n| (*n, c.clone()))));
                (args.iter().map(|a| pos[a]).collect(), value)
            })
            .collect();
        LInfinityStructure::new(name, basis, entries, self.max_arity).expect("restriction of a valid structure")
    }

    /// The sub-algebra of positive degrees.
    pub fn truncate_positive(&self) -> LInfinityStructure {
        let keep: Vec<usize> = (0..self.dim()).filter(|i| self.basis[*i].degree >= 1).collect();
        self.restricted(self.name.clone(), &keep)
    }

    /// Quotient by the elements of degree above `bound`.
    pub fn truncate_above(&self, bound: i32) -> LInfinityStructure {
        let keep: Vec<usize> = (0..self.dim()).filter(|i| self.basis[*i].degree <= bound).collect();
        self.restricted(self.name.clone(), &keep)
    }

    /// Same graded space and differential, all higher brackets removed.
    pub fn sharp(&self) -> LInfinityStructure {
        let entries = self.brackets.iter().filter(|(a, _)| a.len() == 1).map(|(a, v)| (a.clone(), v.clone())).collect();
        LInfinityStructure::new(format!("{}#", self.name), self.basis.clone(), entries, self.max_arity)
            .expect("sub-table of a valid structure")
    }

    pub fn basis_name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn format_element(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".into();
        }
        v.iter().map(|(i, c)| format!("{}*{}", fmt_q(c), self.basis[i].name)).collect::<Vec<_>>().join(" + ")
    }
}
