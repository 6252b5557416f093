use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_q, is_neg, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: i32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: i32) -> Self {
        Self { name: name.into(), degree }
    }

    pub fn is_odd(&self) -> bool {
        self.degree.rem_euclid(2) == 1
    }
}

/// Sorted list of `(generator id, exponent)`; odd generators have exponent one.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(id: usize) -> Self {
        Monomial(vec![(id as u32, 1)])
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|e| e.1).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

/// Free graded-commutative polynomial ring.
///
/// Generators are ordered by `(degree, declaration index)`; that order is the
/// canonical order of factors in a monomial. The weight of a monomial is its
/// polynomial degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    gens: Vec<Generator>,
    by_name: HashMap<String, usize>,
}

impl PolyRing {
    /// Generators end up sorted by degree; ties keep declaration order.
    pub fn new(mut gens: Vec<Generator>) -> Result<Self> {
        gens.sort_by_key(|g| g.degree);
        let mut by_name = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if by_name.insert(g.name.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate generator `{}`", g.name)));
            }
        }
        Ok(Self { gens, by_name })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn id(&self, name: &str) -> Result<usize> {
        self.by_name.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn is_odd(&self, id: usize) -> bool {
        self.gens[id].is_odd()
    }

    pub fn degree(&self, m: &Monomial) -> i32 {
        m.0.iter().map(|(g, e)| self.gens[*g as usize].degree * *e as i32).sum()
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        Ok(Poly::monomial(Monomial::var(self.id(name)?), Q::one()))
    }

    /// Sorts an ordered product of generators into canonical order.
    ///
    /// Returns `None` when an odd generator repeats, otherwise the Koszul sign
    /// (`true` for minus) and the monomial.
    pub fn canonical_monomial(&self, factors: &[(usize, u32)]) -> Result<Option<(bool, Monomial)>> {
        let mut seq: Vec<usize> = Vec::new();
        for (g, e) in factors {
            if *g >= self.gens.len() {
                return Err(Error::UnknownGenerator(format!("#{g}")));
            }
            for _ in 0..*e {
                seq.push(*g);
            }
        }
        let mut neg = false;
        for i in 0..seq.len() {
            if !self.is_odd(seq[i]) {
                continue;
            }
            for j in i + 1..seq.len() {
                if self.is_odd(seq[j]) && seq[j] < seq[i] {
                    neg = !neg;
                }
            }
        }
        let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
        for g in seq {
            *counts.entry(g).or_default() += 1;
        }
        if counts.iter().any(|(g, e)| *e > 1 && self.is_odd(*g)) {
            return Ok(None);
        }
        Ok(Some((neg, Monomial(counts.into_iter().map(|(g, e)| (g as u32, e)).collect()))))
    }

    pub fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        let mut out = Vec::with_capacity(a.0.len() + b.0.len());
        let mut neg = false;
        // odd factors of `a` not yet passed; each odd factor of `b` moves across them
        let mut odd_left: usize = a.0.iter().filter(|(g, _)| self.is_odd(*g as usize)).count();
        let (mut i, mut j) = (0, 0);
        while i < a.0.len() || j < b.0.len() {
            let ga = a.0.get(i).map(|e| e.0).unwrap_or(u32::MAX);
            let gb = b.0.get(j).map(|e| e.0).unwrap_or(u32::MAX);
            if ga < gb {
                if self.is_odd(ga as usize) {
                    odd_left -= 1;
                }
                out.push(a.0[i]);
                i += 1;
            } else if gb < ga {
                if self.is_odd(gb as usize) && odd_left % 2 == 1 {
                    neg = !neg;
                }
                out.push(b.0[j]);
                j += 1;
            } else {
                if self.is_odd(ga as usize) {
                    return None;
                }
                out.push((ga, a.0[i].1 + b.0[j].1));
                i += 1;
                j += 1;
            }
        }
        Some((neg, Monomial(out)))
    }

    /// Product keeping only monomials of weight below `bound`.
    pub fn mul_trunc(&self, p: &Poly, q: &Poly, bound: Option<u32>) -> Poly {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (ma, ca) in &p.terms {
            let wa = ma.weight();
            if bound.is_some_and(|b| wa >= b) {
                continue;
            }
            for (mb, cb) in &q.terms {
                if bound.is_some_and(|b| wa + mb.weight() >= b) {
                    continue;
                }
                if let Some((neg, m)) = self.mono_mul(ma, mb) {
                    let c = ca * cb;
                    let e = acc.entry(m).or_insert_with(Q::zero);
                    if neg {
                        *e -= c;
                    } else {
                        *e += c;
                    }
                }
            }
        }
        Poly::from_map(acc)
    }

    pub fn mul(&self, p: &Poly, q: &Poly) -> Poly {
        self.mul_trunc(p, q, None)
    }

    pub fn pow_trunc(&self, p: &Poly, e: u32, bound: Option<u32>) -> Poly {
        let mut r = Poly::one();
        for _ in 0..e {
            r = self.mul_trunc(&r, p, bound);
        }
        r
    }

    pub fn is_homogeneous_of_degree(&self, p: &Poly, d: i32) -> bool {
        p.terms.keys().all(|m| self.degree(m) == d)
    }

    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        for (k, (g, e)) in m.0.iter().enumerate() {
            if k > 0 {
                s.push('*');
            }
            s.push_str(&self.gens[*g as usize].name);
            if *e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    pub fn poly_to_string(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in p.sorted_terms().into_iter().enumerate() {
            let neg = is_neg(c);
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&fmt_q(&a));
            } else if a.is_one() {
                s.push_str(&self.monomial_to_string(m));
            } else {
                let _ = write!(s, "{}*{}", fmt_q(&a), self.monomial_to_string(m));
            }
        }
        s
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    pub terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(id: usize) -> Self {
        Self::monomial(Monomial::var(id), Q::one())
    }

    pub fn from_map(mut terms: BTreeMap<Monomial, Q>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, c: &Q, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
            *e += c * x;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled(&Q::one(), other);
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled(&-Q::one(), other);
        r
    }

    pub fn scaled(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> Poly {
        self.scaled(&-Q::one())
    }

    pub fn truncate(&self, bound: Option<u32>) -> Poly {
        match bound {
            None => self.clone(),
            Some(b) => Poly {
                terms: self.terms.iter().filter(|(m, _)| m.weight() < b).map(|(m, c)| (m.clone(), c.clone())).collect(),
            },
        }
    }

    pub fn weight_part(&self, w: u32) -> Poly {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| m.weight() == w).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight()).min()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.weight()).max()
    }

    pub fn constant_term(&self) -> Q {
        self.coefficient(&Monomial::one())
    }

    /// Terms ordered by weight, then monomial.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Q)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.weight().cmp(&b.0.weight()).then(a.0.cmp(b.0)));
        v
    }
}

/// Algebra map determined by images of generators.
#[derive(Clone, Debug)]
pub struct Substitution<'a> {
    source: &'a PolyRing,
    target: &'a PolyRing,
    images: Vec<Poly>,
}

impl<'a> Substitution<'a> {
    /// Images must be homogeneous of the degree of the generator they replace.
    pub fn new(source: &'a PolyRing, target: &'a PolyRing, images: Vec<Poly>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Dimension(format!(
                "{} images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        for (g, im) in source.gens.iter().zip(&images) {
            if !target.is_homogeneous_of_degree(im, g.degree) {
                return Err(Error::Inhomogeneous(g.name.clone()));
            }
        }
        Ok(Self { source, target, images })
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn apply_monomial(&self, m: &Monomial, bound: Option<u32>) -> Poly {
        let mut r = Poly::one();
        for (g, e) in &m.0 {
            let im = &self.images[*g as usize];
            for _ in 0..*e {
                r = self.target.mul_trunc(&r, im, bound);
                if r.is_zero() {
                    return r;
                }
            }
        }
        r
    }

    pub fn apply(&self, p: &Poly, bound: Option<u32>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            out.add_scaled(c, &self.apply_monomial(m, bound));
        }
        out
    }

    pub fn source(&self) -> &PolyRing {
        self.source
    }
}

/// Graded derivation of a fixed degree determined by images of generators.
#[derive(Clone, Debug)]
pub struct Derivation<'a> {
    ring: &'a PolyRing,
    images: Vec<Poly>,
    degree: i32,
}

impl<'a> Derivation<'a> {
    pub fn new(ring: &'a PolyRing, images: Vec<Poly>, degree: i32) -> Result<Self> {
        if images.len() != ring.ngens() {
            return Err(Error::Dimension(format!("{} images for {} generators", images.len(), ring.ngens())));
        }
        for (g, im) in ring.gens.iter().zip(&images) {
            if !ring.is_homogeneous_of_degree(im, g.degree + degree) {
                return Err(Error::Inhomogeneous(g.name.clone()));
            }
        }
        Ok(Self { ring, images, degree })
    }

    pub fn apply_monomial(&self, m: &Monomial, bound: Option<u32>) -> Poly {
        let mut out = Poly::zero();
        let mut prefix_degree = 0i32;
        for (k, (g, e)) in m.0.iter().enumerate() {
            let g = *g as usize;
            let dg = &self.images[g];
            if !dg.is_zero() {
                let before = Monomial(m.0[..k].to_vec());
                let after = Monomial(m.0[k + 1..].to_vec());
                let mut mid = Poly::monomial(
                    if *e > 1 { Monomial(vec![(g as u32, e - 1)]) } else { Monomial::one() },
                    Q::from_integer((*e).into()),
                );
                mid = self.ring.mul_trunc(&mid, dg, bound);
                let mut t = self.ring.mul_trunc(&Poly::monomial(before, Q::one()), &mid, bound);
                t = self.ring.mul_trunc(&t, &Poly::monomial(after, Q::one()), bound);
                let neg = (self.degree * prefix_degree).rem_euclid(2) == 1;
                out.add_scaled(&crate::scalar::sign(neg), &t);
            }
            prefix_degree += self.ring.gens[g].degree * *e as i32;
        }
        out
    }

    pub fn apply(&self, p: &Poly, bound: Option<u32>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &p.terms {
            out.add_scaled(c, &self.apply_monomial(m, bound));
        }
        out
    }
}

/// All monomials of the given weight, in increasing order.
pub fn monomials_of_weight(ring: &PolyRing, w: u32) -> Vec<Monomial> {
    let n = ring.ngens();
    let mut out = Vec::new();
    let mut cur: Vec<(u32, u32)> = Vec::new();
    fn rec(ring: &PolyRing, start: usize, n: usize, left: u32, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial(cur.clone()));
            return;
        }
        for g in start..n {
            let maxe = if ring.is_odd(g) { 1 } else { left };
            for e in (1..=maxe).rev() {
                cur.push((g as u32, e));
                rec(ring, g + 1, n, left - e, cur, out);
                cur.pop();
            }
        }
    }
    rec(ring, 0, n, w, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn ring() -> PolyRing {
        PolyRing::new(vec![Generator::new("a", 0), Generator::new("b", -1), Generator::new("c", -1)]).unwrap()
    }

    #[test]
    fn generators_sorted_by_degree() {
        let r = ring();
        assert_eq!(r.id("b").unwrap(), 0);
        assert_eq!(r.id("c").unwrap(), 1);
        assert_eq!(r.id("a").unwrap(), 2);
    }

    #[test]
    fn koszul_sign_on_sorting() {
        let r = ring();
        let (b, c) = (r.id("b").unwrap(), r.id("c").unwrap());
        let (neg, m) = r.canonical_monomial(&[(c, 1), (b, 1)]).unwrap().unwrap();
        assert!(neg);
        assert_eq!(m, Monomial(vec![(b as u32, 1), (c as u32, 1)]));
        assert!(r.canonical_monomial(&[(b, 1), (b, 1)]).unwrap().is_none());
        assert!(r.canonical_monomial(&[(9, 1)]).is_err());
    }

    #[test]
    fn mono_mul_matches_canonical() {
        let r = ring();
        let (b, c, a) = (0usize, 1usize, 2usize);
        let cm = Monomial(vec![(c as u32, 1), (a as u32, 2)]);
        let bm = Monomial(vec![(b as u32, 1), (a as u32, 1)]);
        let (neg, m) = r.mono_mul(&cm, &bm).unwrap();
        let (neg2, m2) = r.canonical_monomial(&[(c, 1), (a, 2), (b, 1), (a, 1)]).unwrap().unwrap();
        assert_eq!((neg, m), (neg2, m2));
    }

    #[test]
    fn derivation_leibniz() {
        let r = ring();
        // odd derivation sending b -> a, c -> 0, a -> 0
        let d = Derivation::new(&r, vec![r.var("a").unwrap(), Poly::zero(), Poly::zero()], 1).unwrap();
        let bc = r.mul(&r.var("b").unwrap(), &r.var("c").unwrap());
        let ac = r.mul(&r.var("a").unwrap(), &r.var("c").unwrap());
        assert_eq!(d.apply(&bc, None), ac);
        let cb = r.mul(&r.var("c").unwrap(), &r.var("b").unwrap());
        assert_eq!(d.apply(&cb, None), ac.neg());
    }

    #[test]
    fn inhomogeneous_substitution_rejected() {
        let r = ring();
        let bad = vec![r.var("a").unwrap(), Poly::zero(), Poly::zero()];
        assert!(matches!(Substitution::new(&r, &r, bad), Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn monomial_enumeration_counts() {
        let r = ring();
        // weight 2: a^2, a*b, a*c, b*c
        assert_eq!(monomials_of_weight(&r, 2).len(), 4);
        let p = r.pow_trunc(&r.var("a").unwrap().add(&Poly::one()), 3, Some(2));
        assert_eq!(p.coefficient(&Monomial::var(2)), q(3));
        assert_eq!(p.max_weight(), Some(1));
    }
}
