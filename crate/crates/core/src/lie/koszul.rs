//! The L-infinity algebra `L = V ⊕ W[-1]` attached to a polynomial map `F: V -> W`
//! with `F(0) = 0`, so that Maurer-Cartan elements are the zeros of `F`.

use std::collections::BTreeMap;

use super::structure::{BasisElement, LInfinityStructure};
use crate::error::{Error, Result};
use crate::matrix::SparseVec;
use crate::scalar::{factorial, Q};

/// One component of `F`: a list of `(exponent vector over V, coefficient)`.
pub type PolynomialComponent = Vec<(Vec<u32>, Q)>;

/// Brackets on `V` (degree 1) with values in `W` (degree 2), normalized so that
/// `Σ_k l_k(x, .., x) / k! = F(x)`.
pub fn koszul_from_polynomial(
    name: &str,
    v_names: &[&str],
    w_names: &[&str],
    f: &[PolynomialComponent],
) -> Result<LInfinityStructure> {
    if f.len() != w_names.len() {
        return Err(Error::Dimension(format!("{} components for {} target coordinates", f.len(), w_names.len())));
    }
    let mut basis: Vec<BasisElement> = v_names
        .iter()
        .map(|n| BasisElement { name: n.to_string(), degree: 1, filtration: None })
        .collect();
    basis.extend(w_names.iter().map(|n| BasisElement { name: n.to_string(), degree: 2, filtration: None }));
    let nv = v_names.len();
    let mut table: BTreeMap<Vec<usize>, Vec<(usize, Q)>> = BTreeMap::new();
    let mut max_arity = 1;
    for (w, comp) in f.iter().enumerate() {
        for (exps, c) in comp {
            if exps.len() != nv {
                return Err(Error::Dimension(format!("exponent vector of length {}, expected {nv}", exps.len())));
            }
            let k: u32 = exps.iter().sum();
            if k == 0 {
                return Err(Error::Malformed("F must vanish at the origin".into()));
            }
            max_arity = max_arity.max(k as usize);
            let mut args = Vec::new();
            let mut mult = Q::from_integer(1.into());
            for (i, e) in exps.iter().enumerate() {
                args.extend(std::iter::repeat_n(i, *e as usize));
                mult *= factorial(*e as usize);
            }
            table.entry(args).or_default().push((nv + w, c * mult));
        }
    }
    let entries = table.into_iter().map(|(a, v)| (a, SparseVec::from_pairs(v))).collect();
    LInfinityStructure::new(name, basis, entries, max_arity)
}
