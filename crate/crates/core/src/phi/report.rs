//! Cohomology comparison for `Φ` and the bracket-independence checks.

use std::collections::BTreeMap;

use serde::Serialize;

use super::map::PhiMap;
use crate::complexes::{induced_cohomology_map, TruncatedComplex};
use crate::error::Result;
use crate::lie::LInfinityStructure;
use crate::mc::{FunctionsAlgebra, McLocus};
use crate::simplicial::ez::ShuffleProduct;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyRow {
    pub degree: i32,
    /// `None` for the whole truncated complex, `Some(w)` for `gr^w`.
    pub weight: Option<u32>,
    pub dim_source: usize,
    pub dim_target: usize,
    pub rank: usize,
    pub induced: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiIsoReport {
    /// `gr^w Φ` coincides with `Φ` built from the bracket-stripped structure.
    pub graded_matches_sharp: bool,
    pub graded: Vec<CohomologyRow>,
    pub total: Vec<CohomologyRow>,
    /// Weight-graded dimensions of `H^0` of the source, from the induced filtration.
    pub h0_by_weight: BTreeMap<u32, usize>,
}

impl QuasiIsoReport {
    pub fn all_iso(&self) -> bool {
        self.graded_matches_sharp && self.graded.iter().chain(&self.total).all(|r| r.induced == "iso")
    }
}

fn rows(src: &TruncatedComplex, tgt: &TruncatedComplex, f: &crate::complexes::ChainMap, depth: usize, weight: Option<u32>) -> Result<Vec<CohomologyRow>> {
    (-(depth as i32)..=0)
        .map(|n| {
            let m = induced_cohomology_map(src, tgt, f, n)?;
            Ok(CohomologyRow {
                degree: n,
                weight,
                dim_source: m.dim_source,
                dim_target: m.dim_target,
                rank: m.rank,
                induced: if m.is_iso() { "iso" } else if m.injective() { "injective" } else if m.surjective() { "surjective" } else { "neither" },
            })
        })
        .collect()
}

fn same_complex(a: &TruncatedComplex, b: &TruncatedComplex) -> bool {
    a.degrees() == b.degrees() && a.degrees().iter().all(|n| a.basis(*n) == b.basis(*n) && a.d(*n) == b.d(*n))
}

/// Degrees `>= -depth`; `depth` should stay below `phi.top` so the lowest degree
/// compared still has its incoming differential.
pub fn quasi_iso_report(l: &LInfinityStructure, phi: &PhiMap, depth: usize) -> Result<QuasiIsoReport> {
    let sharp = PhiMap::new(&l.sharp(), phi.top, phi.weight_bound)?;
    let (src, tgt) = (&phi.source, phi.target());
    let mut graded_matches_sharp = true;
    let mut graded = Vec::new();
    for w in 0..phi.weight_bound {
        let (gs, gt) = (src.graded_piece(w), tgt.graded_piece(w));
        let gf = phi.map.graded_piece(src, tgt, w);
        let (ss, st) = (sharp.source.graded_piece(w), sharp.target().graded_piece(w));
        let sf = sharp.map.graded_piece(&sharp.source, sharp.target(), w);
        graded_matches_sharp &= same_complex(&gs, &ss) && same_complex(&gt, &st) && gf == sf;
        graded.extend(rows(&gs, &gt, &gf, depth, Some(w))?);
    }
    let total = rows(src, tgt, &phi.map, depth, None)?;
    Ok(QuasiIsoReport { graded_matches_sharp, graded, total, h0_by_weight: src.filtered_cohomology_dims(0)? })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceVerdict {
    pub identical: bool,
    pub first_difference: Option<String>,
}

/// Faces `∂_i` (`i >= 1`), degeneracies, the normalized modules and their shuffle
/// products agree for `L` and its bracket-stripped complex.
pub fn graded_independence_check(l: &LInfinityStructure, top: usize, weight_bound: u32) -> Result<IndependenceVerdict> {
    let build = |x: &LInfinityStructure| -> Result<(FunctionsAlgebra, ShuffleProduct)> {
        let f = FunctionsAlgebra::new(&McLocus::new(x, top)?, top, weight_bound)?;
        let s = ShuffleProduct::new(&f.algebra)?;
        Ok((f, s))
    };
    let (fa, sa) = build(l)?;
    let (fb, sb) = build(&l.sharp())?;
    let (ma, mb) = (fa.module(), fb.module());
    let differ = |what: String| Ok(IndependenceVerdict { identical: false, first_difference: Some(what) });
    for n in 0..=top {
        if ma.labels[n] != mb.labels[n] {
            return differ(format!("bases at level {n}"));
        }
        for i in 1..=n {
            if ma.face(n, i) != mb.face(n, i) {
                return differ(format!("face ∂{i} at level {n}"));
            }
        }
        if n < top {
            for i in 0..=n {
                if ma.degen(n, i) != mb.degen(n, i) {
                    return differ(format!("degeneracy σ{i} at level {n}"));
                }
            }
        }
    }
    let (ka, kb) = (ma.normalize_kernel()?, mb.normalize_kernel()?);
    for n in 0..=top {
        if ka.embeddings[n] != kb.embeddings[n] || sa.chains().sect[n] != sb.chains().sect[n] {
            return differ(format!("normalized module at level {n}"));
        }
    }
    for p in 0..=top {
        for q in 0..=top - p {
            if sa.table(p, q) != sb.table(p, q) {
                return differ(format!("shuffle product N{p} ⊗ N{q}"));
            }
        }
    }
    Ok(IndependenceVerdict { identical: true, first_difference: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn odd_square_quotients() {
        let l = fixtures::load_positive("odd-square").unwrap();
        let phi = PhiMap::new(&l, 3, 3).unwrap();
        let r = quasi_iso_report(&l, &phi, 2).unwrap();
        assert!(r.all_iso(), "{r:?}");
        let h0 = r.total.iter().find(|x| x.degree == 0).unwrap();
        assert_eq!((h0.dim_source, h0.dim_target), (2, 2));
    }

    #[test]
    fn independence_for_heis() {
        let l = fixtures::load_positive("heis").unwrap();
        assert!(graded_independence_check(&l, 2, 3).unwrap().identical);
    }
}
