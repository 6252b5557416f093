//! Closed forms for `Φ(β)Φ(γ)` and `dΦ(α)`, compared with the computed map.
//! Both use the unsigned coordinate `α(x_{0..n-1})`.

use num_traits::One;

use super::map::PhiMap;
use crate::matrix::SparseVec;
use crate::mc::oracle::{Mismatch, OracleVerdict};
use crate::poly::Poly;
use crate::scalar::{sign, Q};
use crate::simplicial::simplex::{shuffles, subsets};

fn coordinate(phi: &PhiMap, level: usize, subset: &[usize], b: usize) -> Poly {
    phi.locus.coordinates(level).generator(subset, b).map(Poly::var).unwrap_or_default()
}

fn describe(phi: &PhiMap, level: usize, v: &SparseVec) -> String {
    let labels = phi.target().basis(-(level as i32));
    let parts: Vec<String> = v.iter().map(|(i, c)| format!("{}*[{}]", crate::scalar::fmt_q(c), labels[i].name)).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn describe_poly(phi: &PhiMap, level: usize, v: &SparseVec) -> String {
    let ring = &phi.locus.coordinates(level).ring;
    let mut p = Poly::zero();
    for (i, c) in v.iter() {
        p.add_term(phi.functions.bases[level][i].clone(), c.clone());
    }
    ring.poly_to_string(&p)
}

/// `Φ(β)Φ(γ) = Σ_{I ⊔ J} (-1)^{Σ (i_l - l + 1)} β(x_I) γ(x_J)` in `N_{p+q}`.
pub fn product_formula_oracle(phi: &PhiMap) -> OracleVerdict {
    let mut mismatches = Vec::new();
    if phi.weight_bound > 2 {
        for b in &phi.generators {
            for c in &phi.generators {
                let (p, q) = (b.level, c.level);
                if p + q > phi.top {
                    continue;
                }
                let n = p + q;
                let ring = &phi.locus.coordinates(n).ring;
                let mut closed = Poly::zero();
                for (i, j, neg) in shuffles(p, q) {
                    let term = ring.mul(&coordinate(phi, n, &i, b.basis), &coordinate(phi, n, &j, c.basis));
                    closed.add_scaled(&sign(neg), &term);
                }
                let closed = phi.shuffle.chains().proj[n].apply(&phi.functions.vector(n, &closed));
                let unsigned = |g: &super::map::PhiGenerator| g.class.scaled(&sign(g.level % 2 == 1));
                let computed = phi.shuffle.multiply(p, &unsigned(b), q, &unsigned(c));
                if closed != computed {
                    let l = &phi.locus.lie;
                    mismatches.push(Mismatch {
                        coordinate: format!("{}' * {}'", l.basis_name(b.basis), l.basis_name(c.basis)),
                        closed_form: describe(phi, n, &closed),
                        computed: describe(phi, n, &computed),
                    });
                }
            }
        }
    }
    OracleVerdict { map: "Φ(β)Φ(γ)".into(), informational: false, mismatches }
}

/// `dΦ(α)(x) = -α(δ x_{0..n-2}) - ½ Σ_{I ⊔ J = {0..n-2}} (-1)^{Σ (i_l - l + 1)} α([x_I, x_J])`
/// against `∂_0 α(x_{0..n-1})`, as polynomials on `MC^{n-1}`. Informational: it holds for
/// generators at level 1, while at level 2 the sign of the `δ` term and the bracket sum
/// disagree with the computed face.
pub fn d_phi_oracle(phi: &PhiMap) -> OracleVerdict {
    let l = &phi.locus.lie;
    let half = Q::one() / Q::from_integer(2.into());
    let mut mismatches = Vec::new();
    for g in phi.generators.iter().filter(|g| g.level >= 1) {
        let n = g.level;
        let ring = &phi.locus.coordinates(n - 1).ring;
        let mut closed = Poly::zero();
        let front: Vec<usize> = (0..n - 1).collect();
        for c in l.basis_in_degree(n as i32) {
            let coef = l.bracket(&[c]).get(g.basis);
            closed.add_scaled(&-coef, &coordinate(phi, n - 1, &front, c));
        }
        for k in 0..n {
            for i in subsets(n - 1, k) {
                let j: Vec<usize> = front.iter().copied().filter(|x| !i.contains(x)).collect();
                let e: usize = i.iter().enumerate().map(|(pos, v)| v - pos).sum();
                for b in l.basis_in_degree(k as i32 + 1) {
                    for c in l.basis_in_degree((n - 1 - k) as i32 + 1) {
                        let coef = l.bracket(&[b, c]).get(g.basis);
                        if num_traits::Zero::is_zero(&coef) {
                            continue;
                        }
                        let term = ring.mul(&coordinate(phi, n - 1, &i, b), &coordinate(phi, n - 1, &j, c));
                        closed.add_scaled(&(-&half * sign(e % 2 == 1) * coef), &term);
                    }
                }
            }
        }
        let closed = phi.functions.vector(n - 1, &closed);
        let unsigned = g.function.scaled(&sign(n % 2 == 1));
        let computed = phi.functions.module().face(n, 0).apply(&unsigned);
        if closed != computed {
            mismatches.push(Mismatch {
                coordinate: format!("{}'", l.basis_name(g.basis)),
                closed_form: describe_poly(phi, n - 1, &closed),
                computed: describe_poly(phi, n - 1, &computed),
            });
        }
    }
    OracleVerdict { map: "dΦ(α)".into(), informational: true, mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn closed_forms_agree_or_are_reported() {
        for name in fixtures::NAMES {
            let phi = PhiMap::new(&fixtures::load_positive(name).unwrap(), 3, 3).unwrap();
            assert!(product_formula_oracle(&phi).agrees(), "{name}");
            assert!(d_phi_oracle(&phi).agrees(), "{name}");
        }
        let phi = PhiMap::new(&fixtures::three_step(), 3, 3).unwrap();
        assert!(product_formula_oracle(&phi).agrees());
        let d = d_phi_oracle(&phi);
        assert_eq!(d.mismatches.len(), 1);
        assert_eq!((d.mismatches[0].closed_form.as_str(), d.mismatches[0].computed.as_str()), ("-b[0]", "b[0] + a[]*b[0]"));
    }
}
