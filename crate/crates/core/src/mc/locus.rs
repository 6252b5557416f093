//! The cosimplicial scheme `MC^•(L)`: the graph embedding `ξ ↦ ξ - e_0 F(ξ)` and structure
//! maps computed by pushing Maurer-Cartan elements through `Λ^m -> Λ^n`.

use num_traits::One;

use super::coordinates::{McCoordinates, PolynomialMap};
use crate::error::{Error, Result};
use crate::lie::tensor::{curvature, TensorElement};
use crate::lie::LInfinityStructure;
use crate::poly::{Derivation, Monomial, Poly, PolyRing, Substitution};
use crate::scalar::Q;
use crate::simplicial::{Lambda, SimplexMap};

/// `L` in positive degrees with coordinates prepared for levels `0..=max_level`.
#[derive(Clone, Debug)]
pub struct McLocus {
    pub lie: LInfinityStructure,
    levels: Vec<McCoordinates>,
}

/// `Λ^n ⊗ O(MC^m)`: ids `0..=n` are `e_0..e_n`, id `n + 1 + g` is coordinate `g`.
#[derive(Clone, Debug)]
pub struct WorkingRing {
    pub lambda_level: usize,
    pub ring: PolyRing,
}

impl WorkingRing {
    pub fn new(lambda_level: usize, coords: &McCoordinates) -> Result<Self> {
        Ok(Self { lambda_level, ring: Lambda::new(lambda_level).ring_with(coords.ring.generators().to_vec())? })
    }

    pub fn coordinate(&self, g: usize) -> usize {
        self.lambda_level + 1 + g
    }

    /// `δ e_i = 1`, zero on coordinates.
    pub fn delta(&self) -> Derivation<'_> {
        let images = (0..self.ring.ngens()).map(|g| if g <= self.lambda_level { Poly::one() } else { Poly::zero() }).collect();
        Derivation::new(&self.ring, images, 1).expect("degree -1 generators map to constants")
    }

    /// `e_{t_1} .. e_{t_k}` for increasing `t`.
    pub fn e_monomial(t: &[usize]) -> Monomial {
        Monomial(t.iter().map(|i| (*i as u32, 1)).collect())
    }

    /// Splits `p` by its `e`-part; coefficient polynomials live in the coordinate ring.
    pub fn split(&self, p: &Poly) -> std::collections::BTreeMap<Vec<usize>, Poly> {
        let mut out: std::collections::BTreeMap<Vec<usize>, Poly> = std::collections::BTreeMap::new();
        for (m, c) in &p.terms {
            let (e, x): (Vec<_>, Vec<_>) = m.0.iter().partition(|(g, _)| (*g as usize) <= self.lambda_level);
            let key = e.iter().map(|(g, _)| *g as usize).collect();
            let rest = Monomial(x.iter().map(|(g, k)| (*g - (self.lambda_level as u32 + 1), *k)).collect());
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }
}

impl McLocus {
    pub fn new(l: &LInfinityStructure, max_level: usize) -> Result<Self> {
        if l.min_degree().is_some_and(|d| d < 1) {
            return Err(Error::Malformed(format!("`{}` has elements of degree < 1; truncate it first", l.name)));
        }
        let levels = (0..=max_level).map(|n| McCoordinates::new(l, n)).collect::<Result<_>>()?;
        Ok(Self { lie: l.clone(), levels })
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn coordinates(&self, n: usize) -> &McCoordinates {
        &self.levels[n]
    }

    /// The universal `ξ = Σ e_{S+1} x_S` over `Λ^n ⊗ O(MC^n)`.
    pub fn xi(&self, n: usize) -> Result<(WorkingRing, TensorElement)> {
        let c = &self.levels[n];
        let w = WorkingRing::new(n, c)?;
        let mut xi = TensorElement::default();
        for blk in &c.blocks {
            let e: Vec<usize> = Lambda::vertex_monomial(&blk.subset);
            for (j, b) in blk.basis.iter().enumerate() {
                let mut m = WorkingRing::e_monomial(&e);
                m.0.push((w.coordinate(blk.offset + j) as u32, 1));
                xi.add_term(*b, &Q::one(), &Poly::monomial(m, Q::one()));
            }
        }
        Ok((w, xi))
    }

    /// `F(x) = δx + Σ_k l_k(x, .., x)/k!` over a working ring.
    pub fn curvature(&self, w: &WorkingRing, x: &TensorElement) -> TensorElement {
        curvature(&w.ring, &self.lie, x, Some(&w.delta()), None)
    }

    /// `ξ - e_0 F(ξ)`, the Maurer-Cartan element with `e_0`-free part `ξ`.
    pub fn graph_embedding(&self, n: usize) -> Result<(WorkingRing, TensorElement)> {
        let (w, xi) = self.xi(n)?;
        let f = self.curvature(&w, &xi);
        let e0f = f.left_mul(&w.ring, &Poly::var(0), None);
        Ok((w, xi.sub(&e0f)))
    }

    /// `F(ξ - e_0 F(ξ))`; zero exactly when the embedding lands in the Maurer-Cartan locus.
    pub fn mc_residual(&self, n: usize) -> Result<TensorElement> {
        let (w, eta) = self.graph_embedding(n)?;
        Ok(self.curvature(&w, &eta))
    }

    /// Components of `F(ξ)` in the coordinates of level `n`: the coefficient of
    /// `e_{T+1} ⊗ c` for each block `T` of level `n` whose degree matches.
    pub fn curvature_coordinates(&self, n: usize) -> Result<Vec<(Vec<usize>, usize, Poly)>> {
        let (w, xi) = self.xi(n)?;
        let f = self.curvature(&w, &xi);
        let mut out = Vec::new();
        let top = self.lie.max_degree().unwrap_or(0);
        for k in 0..=n {
            if k as i32 + 2 > top {
                break;
            }
            for t in crate::simplicial::simplex::subsets(n, k) {
                let key = Lambda::vertex_monomial(&t);
                for c in self.lie.basis_in_degree(k as i32 + 2) {
                    let p = w.split(&f.coeff(c)).remove(&key).unwrap_or_default();
                    out.push((t.clone(), c, p));
                }
            }
        }
        Ok(out)
    }

    /// `φ: MC^m -> MC^n` for `φ: [m] -> [n]`: push `ξ - e_0 F(ξ)` through `Λ^m -> Λ^n`
    /// and read off the `e_0`-free part.
    pub fn structure_map(&self, phi: &SimplexMap) -> Result<PolynomialMap> {
        let (m, n) = (phi.source(), phi.target());
        if n > self.max_level() {
            return Err(Error::Range(format!("level {n} not prepared")));
        }
        let (src, eta) = self.graph_embedding(m)?;
        let tgt = WorkingRing::new(n, &self.levels[m])?;
        let images: Vec<Poly> = (0..src.ring.ngens())
            .map(|g| if g <= m { Poly::var(phi.apply(g)) } else { Poly::var(tgt.coordinate(g - m - 1)) })
            .collect();
        let sub = Substitution::new(&src.ring, &tgt.ring, images)?;
        let pushed = eta.map_coeffs(|p| sub.apply(p, None));
        let target = &self.levels[n];
        let mut out = vec![Poly::zero(); target.len()];
        for blk in &target.blocks {
            let key = Lambda::vertex_monomial(&blk.subset);
            for (j, b) in blk.basis.iter().enumerate() {
                out[blk.offset + j] = tgt.split(&pushed.coeff(*b)).remove(&key).unwrap_or_default();
            }
        }
        Ok(PolynomialMap { source: m, target: n, images: out })
    }

    /// `d^i: MC^{n-1} -> MC^n`.
    pub fn coface(&self, n: usize, i: usize) -> Result<PolynomialMap> {
        self.structure_map(&SimplexMap::coface(n, i))
    }

    /// `s^i: MC^{n+1} -> MC^n`.
    pub fn codegeneracy(&self, n: usize, i: usize) -> Result<PolynomialMap> {
        self.structure_map(&SimplexMap::codegeneracy(n, i))
    }

    /// `ψ∘φ` computed directly agrees with the composite of the computed maps.
    pub fn functorial_on(&self, phi: &SimplexMap, psi: &SimplexMap) -> Result<bool> {
        let direct = self.structure_map(&phi.then(psi)?)?;
        let composite = self.structure_map(phi)?.then(&self.structure_map(psi)?, &self.levels[phi.source()], &self.levels[phi.target()])?;
        Ok(direct == composite)
    }

    /// After pushing forward, the result is again on the graph: the pushed element equals
    /// the embedding of its own `e_0`-free part.
    pub fn lands_on_graph(&self, phi: &SimplexMap) -> Result<bool> {
        let (m, n) = (phi.source(), phi.target());
        let (src, eta) = self.graph_embedding(m)?;
        let tgt = WorkingRing::new(n, &self.levels[m])?;
        let images: Vec<Poly> = (0..src.ring.ngens())
            .map(|g| if g <= m { Poly::var(phi.apply(g)) } else { Poly::var(tgt.coordinate(g - m - 1)) })
            .collect();
        let pushed = eta.map_coeffs(|p| Substitution::new(&src.ring, &tgt.ring, images.clone()).unwrap().apply(p, None));
        // embedding at level n, with coordinates replaced by the structure map images
        let f = self.structure_map(phi)?;
        let (wn, eta_n) = self.graph_embedding(n)?;
        let images_n: Vec<Poly> = (0..wn.ring.ngens())
            .map(|g| {
                if g <= n {
                    Poly::var(g)
                } else {
                    let p = &f.images[g - n - 1];
                    let mut q = Poly::zero();
                    for (mono, c) in &p.terms {
                        q.add_term(Monomial(mono.0.iter().map(|(x, e)| (*x + n as u32 + 1, *e)).collect()), c.clone());
                    }
                    q
                }
            })
            .collect();
        let sub = Substitution::new(&wn.ring, &tgt.ring, images_n)?;
        Ok(eta_n.map_coeffs(|p| sub.apply(p, None)) == pushed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::simplicial::simplex::all_maps;

    fn locus(name: &str, top: usize) -> McLocus {
        McLocus::new(&fixtures::load_positive(name).unwrap(), top).unwrap()
    }

    #[test]
    fn low_level_maps_of_odd_square() {
        let l = locus("odd-square", 1);
        let (c0, c1) = (l.coordinates(0), l.coordinates(1));
        let d = |p: &PolynomialMap, c: &McCoordinates| p.describe(c, c1).into_iter().collect::<Vec<_>>();
        // d^0 x = (x, -F(x)) with F(ax) = a^2/2 y; d^1 x = (x, 0)
        assert_eq!(d(&l.coface(1, 0).unwrap(), c0), vec![("x[]".into(), "x[]".into()), ("y[0]".into(), "-1/2*x[]^2".into())]);
        assert_eq!(d(&l.coface(1, 1).unwrap(), c0), vec![("x[]".into(), "x[]".into()), ("y[0]".into(), "0".into())]);
        let s0 = l.codegeneracy(0, 0).unwrap();
        assert_eq!(s0.describe(c1, c0).into_iter().collect::<Vec<_>>(), vec![("x[]".to_string(), "x[]".to_string())]);
    }

    #[test]
    fn embedding_is_maurer_cartan() {
        for name in ["odd-square", "heis", "abelian2"] {
            let l = locus(name, 3);
            for n in 0..=3 {
                assert!(l.mc_residual(n).unwrap().is_zero(), "{name} level {n}");
            }
        }
    }

    #[test]
    fn functoriality_and_graph() {
        let l = locus("odd-square", 2);
        for m in 0..=2 {
            for n in 0..=2 {
                for phi in all_maps(m, n) {
                    assert!(l.lands_on_graph(&phi).unwrap(), "{phi:?}");
                    for p in 0..=2 {
                        for psi in all_maps(n, p) {
                            assert!(l.functorial_on(&phi, &psi).unwrap(), "{phi:?} {psi:?}");
                        }
                    }
                }
            }
        }
    }
}
