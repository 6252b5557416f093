//! Text rendering of reports, and the `mc-locus` summary.

use std::collections::BTreeMap;
use std::io::Write;

use dmc_core::lie::LInfinityStructure;
use dmc_core::mc::classical::{classical_locus, ClassicalLocus};
use dmc_core::mc::oracle::{epsilon_oracle, explicit_formula_oracle, level_one_formulas};
use dmc_core::mc::coordinates::subset_name;
use dmc_core::mc::McLocus;
use dmc_core::pipeline::{CheckResult, OracleSummary, Report, Status};
use dmc_core::Error;
use serde::Serialize;

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

fn checks(out: &mut impl Write, results: &[CheckResult]) {
    for c in results {
        let _ = writeln!(out, "{:<4} {}", status(c.status), c.name);
        for d in &c.detail {
            let _ = writeln!(out, "       {d}");
        }
    }
}

fn oracle_lines(out: &mut impl Write, oracles: &[OracleSummary]) {
    let agree = oracles.iter().filter(|o| o.agrees).count();
    let _ = writeln!(out, "closed forms: {agree} of {} agree", oracles.len());
    for o in oracles.iter().filter(|o| !o.agrees) {
        let kind = if o.informational { "informational" } else { "FATAL" };
        let _ = writeln!(out, "  {kind}: {}", o.map);
        for m in o.mismatches.iter().take(3) {
            let _ = writeln!(out, "    {}: closed form {} vs computed {}", m.coordinate, m.closed_form, m.computed);
        }
        if o.mismatches.len() > 3 {
            let _ = writeln!(out, "    ({} more)", o.mismatches.len() - 3);
        }
    }
}

pub fn report(out: &mut impl Write, r: &Report) {
    let b = r.bounds;
    let _ = writeln!(out, "== {} (levels {}, weight < {}, degrees >= -{})", r.fixture, b.levels, b.weight, b.depth);
    checks(out, &r.checks);
    if let Some(c) = &r.chain_map {
        match &c.witness {
            None => {
                let _ = writeln!(out, "chain map: pass");
            }
            Some(w) => {
                let _ = writeln!(
                    out,
                    "chain map: FAIL at degree {}, weight {}, element {}, defect weight {}",
                    w.degree,
                    w.weight,
                    w.element,
                    w.defect_weight.map_or("-".to_string(), |d| d.to_string())
                );
            }
        }
    }
    if !r.cohomology.is_empty() {
        let _ = writeln!(out, "cohomology (source -> target):");
        for row in r.cohomology.iter().filter(|row| row.weight.is_none()) {
            let _ = writeln!(out, "  H^{:<3} {} -> {} {}", row.degree, row.dim_source, row.dim_target, row.induced);
        }
        let graded: Vec<_> = r.cohomology.iter().filter(|row| row.weight.is_some()).collect();
        let iso = graded.iter().filter(|row| row.induced == "iso").count();
        let _ = writeln!(out, "  weight-graded pieces: {iso} of {} iso", graded.len());
        let _ = writeln!(out, "  H^0 by weight: {:?}", r.h0_by_weight);
    }
    if let Some(f) = &r.freeness {
        let _ = writeln!(out, "freeness: {} (square-zero control matches: {})", if f.matches { "free" } else { "NOT free" }, f.square_zero_matches);
    }
    if !r.oracles.is_empty() {
        oracle_lines(out, &r.oracles);
    }
    let _ = writeln!(out, "result: {}", if r.pass() { "PASS" } else { "FAIL" });
}

pub fn structural(out: &mut impl Write, results: &[CheckResult]) {
    let _ = writeln!(out, "== selftest");
    checks(out, results);
    let ok = results.iter().all(|c| c.status != Status::Fail);
    let _ = writeln!(out, "result: {}", if ok { "PASS" } else { "FAIL" });
}

#[derive(Serialize)]
pub struct LevelCoordinates {
    pub level: usize,
    /// `(S, number of coordinates)` per block.
    pub blocks: Vec<(String, usize)>,
    pub names: Vec<String>,
}

#[derive(Serialize)]
pub struct StructureMap {
    pub map: String,
    pub images: BTreeMap<String, String>,
}

#[derive(Serialize)]
pub struct McSummary {
    pub fixture: String,
    pub levels: usize,
    pub coordinates: Vec<LevelCoordinates>,
    pub structure_maps: Vec<StructureMap>,
    pub oracles: Vec<OracleSummary>,
    pub classical: ClassicalLocus,
}

impl McSummary {
    pub fn build(l: &LInfinityStructure, levels: usize) -> Result<Self, Error> {
        let locus = McLocus::new(l, levels)?;
        let coordinates = (0..=levels)
            .map(|n| {
                let c = locus.coordinates(n);
                LevelCoordinates {
                    level: n,
                    blocks: c.inventory().into_iter().map(|(s, k)| (format!("{{{}}}", subset_name(&s)), k)).collect(),
                    names: c.ring.generators().iter().map(|g| g.name.clone()).collect(),
                }
            })
            .collect();
        let mut structure_maps = Vec::new();
        for n in 0..levels {
            for j in 0..=n {
                let f = locus.codegeneracy(n, j)?;
                let images = f.describe(locus.coordinates(n + 1), locus.coordinates(n));
                structure_maps.push(StructureMap { map: format!("s^{j}: MC^{} -> MC^{n}", n + 1), images });
            }
        }
        for n in 1..=levels {
            for j in 0..=n {
                let f = locus.coface(n, j)?;
                let images = f.describe(locus.coordinates(n - 1), locus.coordinates(n));
                structure_maps.push(StructureMap { map: format!("d^{j}: MC^{} -> MC^{n}", n - 1), images });
            }
        }
        let top = levels.min(3);
        let mut verdicts = explicit_formula_oracle(&locus, top)?;
        verdicts.extend(level_one_formulas(&locus)?);
        verdicts.extend(epsilon_oracle(&locus, top.min(2))?);
        Ok(Self {
            fixture: l.name.clone(),
            levels,
            coordinates,
            structure_maps,
            oracles: verdicts.into_iter().map(Into::into).collect(),
            classical: classical_locus(&locus)?,
        })
    }

    pub fn pass(&self) -> bool {
        self.classical.agree && self.oracles.iter().all(|o| o.informational || o.agrees)
    }
}

pub fn mc_summary(out: &mut impl Write, s: &McSummary) {
    let _ = writeln!(out, "== {} (levels 0..={})", s.fixture, s.levels);
    for c in &s.coordinates {
        let blocks: Vec<String> = c.blocks.iter().map(|(b, k)| format!("{b}:{k}")).collect();
        let _ = writeln!(out, "MC^{}: {} coordinates, blocks {}", c.level, c.names.len(), blocks.join(" "));
        let _ = writeln!(out, "  {}", c.names.join(" "));
    }
    for m in &s.structure_maps {
        let _ = writeln!(out, "{}", m.map);
        for (g, p) in &m.images {
            let _ = writeln!(out, "  {g} <- {p}");
        }
    }
    oracle_lines(out, &s.oracles);
    let _ = writeln!(out, "classical locus, curvature: {}", s.classical.curvature.join(", "));
    let _ = writeln!(out, "classical locus, equalizer: {}", s.classical.equalizer.join(", "));
    let _ = writeln!(out, "same ideal: {}", s.classical.agree);
    let _ = writeln!(out, "result: {}", if s.pass() { "PASS" } else { "FAIL" });
}
