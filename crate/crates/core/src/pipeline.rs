//! Named checks run on one structure (or on built-in families), collected into a
//! deterministic report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::complexes::Witness;
use crate::error::{Error, Result};
use crate::lie::{bianchi_check, ce_algebra_with, validate, CeOptions, LInfinityStructure};
use crate::matrix::SparseMatrix;
use crate::mc::classical::{classical_locus, matching_check};
use crate::mc::oracle::{epsilon_oracle, explicit_formula_oracle, level_one_formulas, Mismatch, OracleVerdict};
use crate::mc::{FunctionsAlgebra, McLocus};
use crate::phi::oracle::{d_phi_oracle, product_formula_oracle};
use crate::phi::report::CohomologyRow;
use crate::phi::{abelian_dold_kan_check, freeness_hilbert, graded_independence_check, quasi_iso_report, FreenessReport, PhiMap, ProductChoice};
use crate::scalar::q;
use crate::simplicial::ez::{ExternalProduct, ShuffleProduct};
use crate::simplicial::kfunctor::{coconnective, KFunctor};
use crate::simplicial::module::{random_family, standard_simplex};
use crate::simplicial::simplex::SimplexMap;
use crate::simplicial::surjection::{duality_report, SurjectionComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Validate,
    Ce,
    Mc,
    Normalize,
    Phi,
    QuasiIso,
    EzSelftest,
    DoldKan,
    Pairing,
    Matching,
    Freeness,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Validate,
        Check::Ce,
        Check::Mc,
        Check::Normalize,
        Check::Phi,
        Check::QuasiIso,
        Check::EzSelftest,
        Check::DoldKan,
        Check::Pairing,
        Check::Matching,
        Check::Freeness,
    ];

    /// What `verify` runs when no checks are named.
    pub const PIPELINE: [Check; 6] = [Check::Validate, Check::Ce, Check::Mc, Check::Normalize, Check::Phi, Check::QuasiIso];

    pub fn name(self) -> &'static str {
        match self {
            Check::Validate => "validate",
            Check::Ce => "ce",
            Check::Mc => "mc",
            Check::Normalize => "normalize",
            Check::Phi => "phi",
            Check::QuasiIso => "quasi-iso",
            Check::EzSelftest => "ez-selftest",
            Check::DoldKan => "dold-kan",
            Check::Pairing => "pairing",
            Check::Matching => "matching",
            Check::Freeness => "freeness",
        }
    }

    /// Checks that do not look at the input structure.
    pub fn is_structural(self) -> bool {
        matches!(self, Check::EzSelftest | Check::Pairing)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse { what: "check name", input: s.to_string() })
    }
}

/// Comma-separated check names, duplicates dropped, order kept.
pub fn parse_checks(s: &str) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let c: Check = part.parse()?;
        if !out.contains(&c) {
            out.push(c);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse { what: "check list", input: s.to_string() });
    }
    Ok(out)
}

/// `levels`: simplicial levels `0..=levels`; `weight`: weights `< weight`; cohomology
/// compared in degrees `>= -depth`. One extra level is built when `depth >= levels` so
/// the lowest compared degree keeps its incoming differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub levels: usize,
    pub weight: u32,
    pub depth: usize,
}

impl Bounds {
    pub fn new(levels: usize, weight: u32, depth: usize) -> Result<Self> {
        if levels == 0 || weight == 0 || depth == 0 {
            return Err(Error::Range(format!("bounds must be at least 1 (levels {levels}, weight {weight}, depth {depth})")));
        }
        Ok(Self { levels, weight, depth })
    }

    pub fn built_levels(&self) -> usize {
        self.levels.max(self.depth + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: Vec<String>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, ok: bool, detail: Vec<String>) -> Self {
        Self { name: name.into(), status: Status::from_bool(ok), detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainMapResult {
    pub pass: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleSummary {
    pub map: String,
    pub informational: bool,
    pub agrees: bool,
    pub mismatches: Vec<Mismatch>,
}

impl From<OracleVerdict> for OracleSummary {
    fn from(v: OracleVerdict) -> Self {
        Self { agrees: v.agrees(), map: v.map, informational: v.informational, mismatches: v.mismatches }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessRow {
    pub level: usize,
    pub weight: u32,
    pub dim: usize,
    pub generators: usize,
    pub free_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FreenessSummary {
    pub matches: bool,
    /// The same count with the square-zero product; it should not match.
    pub square_zero_matches: bool,
    pub rows: Vec<FreenessRow>,
}

impl FreenessSummary {
    fn new(r: &FreenessReport, control: &FreenessReport) -> Self {
        let rows = r
            .dims
            .iter()
            .map(|(&(level, weight), &dim)| FreenessRow {
                level,
                weight,
                dim,
                generators: r.generators.get(&(level, weight)).copied().unwrap_or(0),
                free_dim: r.free_dims.get(&(level, weight)).copied().unwrap_or(0),
            })
            .collect();
        Self { matches: r.matches, square_zero_matches: control.matches, rows }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub fixture: String,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
    pub chain_map: Option<ChainMapResult>,
    pub cohomology: Vec<CohomologyRow>,
    pub h0_by_weight: BTreeMap<u32, usize>,
    pub freeness: Option<FreenessSummary>,
    pub oracles: Vec<OracleSummary>,
}

impl Report {
    pub fn new(fixture: impl Into<String>, bounds: Bounds) -> Self {
        Self {
            fixture: fixture.into(),
            bounds,
            checks: Vec::new(),
            chain_map: None,
            cohomology: Vec::new(),
            h0_by_weight: BTreeMap::new(),
            freeness: None,
            oracles: Vec::new(),
        }
    }

    /// Informational oracle mismatches never count; everything else does.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn fatal_oracles(&self) -> impl Iterator<Item = &OracleSummary> {
        self.oracles.iter().filter(|o| !o.informational && !o.agrees)
    }

    pub fn informational_mismatches(&self) -> impl Iterator<Item = &OracleSummary> {
        self.oracles.iter().filter(|o| o.informational && !o.agrees)
    }
}

/// Objects shared by several checks, built on first use.
struct Context<'a> {
    full: &'a LInfinityStructure,
    positive: LInfinityStructure,
    bounds: Bounds,
    opts: CeOptions,
    locus: Option<McLocus>,
    phi: Option<PhiMap>,
}

impl Context<'_> {
    fn top(&self) -> usize {
        self.bounds.built_levels()
    }

    fn locus(&mut self) -> Result<&McLocus> {
        if self.locus.is_none() {
            self.locus = Some(McLocus::new(&self.positive, self.top())?);
        }
        Ok(self.locus.as_ref().expect("just built"))
    }

    fn phi(&mut self) -> Result<&PhiMap> {
        if self.phi.is_none() {
            self.phi = Some(PhiMap::with_options(&self.positive, self.top(), self.bounds.weight, self.opts)?);
        }
        Ok(self.phi.as_ref().expect("just built"))
    }
}

/// Runs the per-structure checks in order. Structural checks in the list are ignored
/// here; see [`run_structural`].
pub fn run_checks(l: &LInfinityStructure, bounds: Bounds, checks: &[Check]) -> Result<Report> {
    run_checks_with(l, bounds, checks, CeOptions::default())
}

/// As [`run_checks`], with the Chevalley-Eilenberg side altered by `opts`.
pub fn run_checks_with(l: &LInfinityStructure, bounds: Bounds, checks: &[Check], opts: CeOptions) -> Result<Report> {
    let mut report = Report::new(l.name.clone(), bounds);
    let mut ctx = Context { full: l, positive: l.truncate_positive(), bounds, opts, locus: None, phi: None };
    for c in checks.iter().filter(|c| !c.is_structural()) {
        let r = match c {
            Check::Validate => check_validate(&ctx)?,
            Check::Ce => check_ce(&ctx)?,
            Check::Mc => check_mc(&mut ctx, &mut report)?,
            Check::Normalize => check_normalize(&mut ctx)?,
            Check::Phi => check_phi(&mut ctx, &mut report)?,
            Check::QuasiIso => check_quasi_iso(&mut ctx, &mut report)?,
            Check::DoldKan => check_dold_kan(&ctx)?,
            Check::Matching => check_matching(&mut ctx)?,
            Check::Freeness => check_freeness(&mut ctx, &mut report)?,
            Check::EzSelftest | Check::Pairing => unreachable!("filtered"),
        };
        report.checks.push(r);
    }
    Ok(report)
}

fn check_validate(ctx: &Context) -> Result<CheckResult> {
    let v = validate(ctx.full);
    let mut detail = vec![format!("{} generalized Jacobi tuples checked", v.checked_tuples)];
    detail.extend(v.residuals.iter().map(|r| format!("Jacobi fails on ({}): {}", r.args.join(", "), r.residual)));
    let mut ok = v.pass();
    if ctx.full.max_bracket_arity() <= 2 {
        let b = bianchi_check(ctx.full)?;
        detail.push(format!("Bianchi identity {}", if b { "holds" } else { "fails" }));
        ok &= b;
    }
    Ok(CheckResult::new("validate", ok, detail))
}

fn check_ce(ctx: &Context) -> Result<CheckResult> {
    let ce = ce_algebra_with(&ctx.positive, ctx.opts)?;
    let mut detail = Vec::new();
    let bad = ce.d_squared_on_generators();
    detail.extend(bad.iter().map(|(g, p)| format!("d^2 {g} = {}", ce.ring.poly_to_string(p))));
    let complex = ce.complex(-(ctx.top() as i32), ctx.bounds.weight);
    let squared = complex.check_differential();
    if let Err(w) = &squared {
        detail.push(format!("d^2 != 0 at degree {}, weight {}: {}", w.degree, w.weight, w.element));
    }
    detail.push(format!(
        "dims by degree: {}",
        complex.degrees().iter().map(|n| format!("{n}:{}", complex.dim(*n))).collect::<Vec<_>>().join(" ")
    ));
    Ok(CheckResult::new("ce", bad.is_empty() && squared.is_ok(), detail))
}

fn cosimplicial_identities(locus: &McLocus, top: usize) -> Result<Vec<String>> {
    let d = SimplexMap::coface;
    let s = SimplexMap::codegeneracy;
    let mut failed = Vec::new();
    let mut check = |name: String, a: SimplexMap, b: SimplexMap| -> Result<()> {
        if !locus.functorial_on(&a, &b)? {
            failed.push(name);
        }
        Ok(())
    };
    for n in 1..top {
        for i in 0..=n + 1 {
            for j in 0..i {
                check(format!("d^{i} d^{j} into level {}", n + 1), d(n, j), d(n + 1, i))?;
            }
        }
        for i in 0..n {
            for j in i..n {
                check(format!("s^{j} s^{i} out of level {}", n + 1), s(n, i), s(n - 1, j))?;
            }
        }
    }
    for n in 1..=top {
        for i in 0..=n {
            for j in 0..n {
                check(format!("s^{j} d^{i} at level {n}"), d(n, i), s(n - 1, j))?;
            }
        }
    }
    Ok(failed)
}

fn check_mc(ctx: &mut Context, report: &mut Report) -> Result<CheckResult> {
    let top = ctx.top();
    let oracle_top = top.min(3);
    let locus = ctx.locus()?;
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 0..=top {
        if !locus.mc_residual(n)?.is_zero() {
            ok = false;
            detail.push(format!("graph embedding is not Maurer-Cartan at level {n}"));
        }
    }
    let failed = cosimplicial_identities(locus, top)?;
    ok &= failed.is_empty();
    detail.extend(failed.into_iter().map(|f| format!("cosimplicial identity fails: {f}")));
    for n in 0..=top.min(2) {
        for m in 0..=top.min(2) {
            for phi in crate::simplicial::simplex::all_maps(m, n) {
                if !locus.lands_on_graph(&phi)? {
                    ok = false;
                    detail.push(format!("{:?} leaves the graph", phi.values()));
                }
            }
        }
    }
    let classical = classical_locus(locus)?;
    ok &= classical.agree;
    detail.push(format!(
        "classical locus: curvature [{}], equalizer [{}], same ideal: {}",
        classical.curvature.join(", "),
        classical.equalizer.join(", "),
        classical.agree
    ));
    let mut verdicts = explicit_formula_oracle(locus, oracle_top)?;
    verdicts.extend(level_one_formulas(locus)?);
    verdicts.extend(epsilon_oracle(locus, oracle_top.min(2))?);
    for v in verdicts {
        ok &= v.informational || v.agrees();
        report.oracles.push(v.into());
    }
    detail.push(format!("levels 0..={top}, coordinate counts {:?}", (0..=top).map(|n| locus.coordinates(n).len()).collect::<Vec<_>>()));
    Ok(CheckResult::new("mc", ok, detail))
}

fn check_normalize(ctx: &mut Context) -> Result<CheckResult> {
    let (top, w) = (ctx.top(), ctx.bounds.weight);
    let functions = FunctionsAlgebra::new(ctx.locus()?, top, w)?;
    let module = functions.module();
    let mut detail = Vec::new();
    let identities = module.check_identities();
    if let Err(f) = &identities {
        detail.push(format!("simplicial identity {} fails at level {}", f.identity, f.level));
    }
    let multiplicative = functions.algebra.check_multiplicative();
    if !multiplicative {
        detail.push("structure maps are not multiplicative".into());
    }
    let iso = kernel_quotient_iso(module.kernel_to_quotient()?);
    if !iso {
        detail.push("kernel and quotient normalizations are not isomorphic".into());
    }
    let dk = module.dold_kan_dims();
    let norm = module.normalize_kernel()?;
    let dims: Vec<i64> = (0..=top).map(|n| norm.complex.dim(-(n as i32)) as i64).collect();
    let dk_ok = dk == dims;
    detail.push(format!("normalized dims by level {dims:?}, alternating binomial sums {dk:?}"));
    Ok(CheckResult::new("normalize", identities.is_ok() && multiplicative && iso && dk_ok, detail))
}

fn kernel_quotient_iso(maps: Vec<SparseMatrix>) -> bool {
    maps.iter().all(|m| m.rows() == m.cols() && m.rank() == m.rows())
}

fn check_phi(ctx: &mut Context, report: &mut Report) -> Result<CheckResult> {
    let phi = ctx.phi()?;
    let mut detail = Vec::new();
    let outside = phi.normalized_membership();
    detail.extend(outside.iter().map(|(b, n)| format!("generator image of basis #{b} is not normalized at level {n}")));
    let check = phi.chain_map_check();
    let witness = check.clone().err();
    if let Some(w) = &witness {
        detail.push(format!(
            "Φd != ∂Φ at degree {}, weight {} on {} (defect weight {:?})",
            w.degree, w.weight, w.element, w.defect_weight
        ));
    }
    let product = product_formula_oracle(phi);
    let d_phi = d_phi_oracle(phi);
    let ok = outside.is_empty() && check.is_ok() && product.agrees();
    report.chain_map = Some(ChainMapResult { pass: check.is_ok(), witness });
    report.oracles.push(product.into());
    report.oracles.push(d_phi.into());
    detail.push(format!("{} generators mapped", phi.generators.len()));
    Ok(CheckResult::new("phi", ok, detail))
}

fn check_quasi_iso(ctx: &mut Context, report: &mut Report) -> Result<CheckResult> {
    let depth = ctx.bounds.depth;
    let (top, w) = (ctx.top(), ctx.bounds.weight);
    let positive = ctx.positive.clone();
    let phi = ctx.phi()?;
    let q = quasi_iso_report(&positive, phi, depth)?;
    let independence = graded_independence_check(&positive, top, w)?;
    let mut detail = Vec::new();
    if !q.graded_matches_sharp {
        detail.push("gr Φ differs from Φ of the bracket-stripped structure".into());
    }
    if let Some(d) = &independence.first_difference {
        detail.push(format!("graded data depends on the brackets: {d}"));
    }
    for r in q.graded.iter().chain(&q.total).filter(|r| r.induced != "iso") {
        detail.push(format!("H^{} (weight {:?}): {} -> {} is {}", r.degree, r.weight, r.dim_source, r.dim_target, r.induced));
    }
    detail.push(format!("H^0 by weight {:?}", q.h0_by_weight));
    let ok = q.all_iso() && independence.identical;
    report.cohomology = q.total.into_iter().chain(q.graded).collect();
    report.h0_by_weight = q.h0_by_weight;
    Ok(CheckResult::new("quasi-iso", ok, detail))
}

fn check_dold_kan(ctx: &Context) -> Result<CheckResult> {
    if !ctx.positive.is_abelian() {
        return Ok(CheckResult { name: "dold-kan".into(), status: Status::Skipped, detail: vec!["structure has brackets".into()] });
    }
    let v = abelian_dold_kan_check(&ctx.positive, ctx.top())?;
    let mut detail = vec![format!("(MC^n, K^n) dims {:?}", v.dims)];
    if let Some((what, m, n)) = &v.failure {
        detail.push(format!("{what} fails for [{m}] -> [{n}]"));
    }
    Ok(CheckResult::new("dold-kan", v.pass(), detail))
}

fn check_matching(ctx: &mut Context) -> Result<CheckResult> {
    let top = ctx.top();
    let locus = ctx.locus()?;
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 1..=top {
        let v = matching_check(locus, n)?;
        ok &= v.surjective;
        detail.push(format!("level {n}: dim {} -> matching {} (rank {})", v.dim_source, v.dim_matching, v.rank));
    }
    Ok(CheckResult::new("matching", ok, detail))
}

fn check_freeness(ctx: &mut Context, report: &mut Report) -> Result<CheckResult> {
    let (top, w) = (ctx.top(), ctx.bounds.weight);
    let phi = ctx.phi()?;
    let r = freeness_hilbert(&phi.shuffle, top, w, ProductChoice::Shuffle);
    let control = freeness_hilbert(&phi.shuffle, top, w, ProductChoice::Zero);
    let summary = FreenessSummary::new(&r, &control);
    let mut detail = Vec::new();
    for row in summary.rows.iter().filter(|r| r.dim != r.free_dim) {
        detail.push(format!("level {}, weight {}: dim {} but free count {}", row.level, row.weight, row.dim, row.free_dim));
    }
    detail.push(format!("square-zero control {}", if control.matches { "also matches" } else { "fails as expected" }));
    let ok = r.matches;
    report.freeness = Some(summary);
    Ok(CheckResult::new("freeness", ok, detail))
}

/// Structure-independent checks: Eilenberg-Zilber on random families and K-functor
/// duals, the surjection pairing for `n <= 5`, kernel versus quotient normalization on
/// random families and the simplex identities.
pub fn run_structural(bounds: Bounds, checks: &[Check], seed: u64) -> Result<Vec<CheckResult>> {
    let top = bounds.levels.min(3);
    let mut out = Vec::new();
    for c in checks {
        match c {
            Check::EzSelftest => out.push(ez_selftest(top, seed)?),
            Check::Pairing => out.push(pairing_selftest()),
            Check::Normalize => out.push(normalize_selftest(top, seed)?),
            _ => {}
        }
    }
    if checks.contains(&Check::EzSelftest) {
        out.push(simplex_identities(bounds.levels.max(4)));
    }
    Ok(out)
}

/// The checks `selftest` runs.
pub const SELFTEST: [Check; 3] = [Check::EzSelftest, Check::Pairing, Check::Normalize];

fn ez_selftest(top: usize, seed: u64) -> Result<CheckResult> {
    let mut detail = Vec::new();
    let mut ok = true;
    let mut record = |name: String, r: std::result::Result<(), crate::simplicial::ez::EzFailure>| {
        if let Err(f) = r {
            ok = false;
            detail.push(format!("{name}: {} fails in degree {}", f.check, f.degree));
        }
    };
    for s in seed..seed + 5 {
        let a = random_family(s, top);
        let b = random_family(s.wrapping_add(1000), top);
        record(format!("random families {s}"), ExternalProduct::new(&a, &b)?.verify(top));
    }
    let d0 = SparseMatrix::from_triplets(2, 2, [(0, 0, q(1))])?;
    let z = coconnective(&[2, 2, 1], &[d0, SparseMatrix::zeros(1, 2)])?;
    let dual = KFunctor::new(&z, top)?.dual_simplicial(top)?;
    record("K-functor dual with itself".into(), ExternalProduct::new(&dual, &dual)?.verify(top));
    record("K-functor dual with Δ^1".into(), ExternalProduct::new(&dual, &standard_simplex(1, top))?.verify(top));
    let positive = crate::fixtures::load_positive("odd-square")?;
    let functions = FunctionsAlgebra::new(&McLocus::new(&positive, top)?, top, 2)?;
    record("O(MC) of odd-square with itself".into(), ExternalProduct::new(functions.module(), functions.module())?.verify(top));
    record("shuffle product on O(MC) of odd-square".into(), ShuffleProduct::new(&functions.algebra)?.verify(top));
    detail.push(format!("levels up to {top}, seeds {seed}..{}", seed + 5));
    Ok(CheckResult::new("ez-selftest", ok, detail))
}

fn pairing_selftest() -> CheckResult {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 1..=5 {
        let r = duality_report(n);
        let good = r.nondegenerate.iter().all(|b| *b)
            && r.matches_determinant.iter().all(|b| *b)
            && r.unitriangular_degree_one
            && r.differential_compatible
            && r.append_pairing_degenerate;
        ok &= good;
        detail.push(format!("n = {n}: dims {:?}, {}", r.dims, if good { "perfect" } else { "FAILS" }));
    }
    for n in 1..=3 {
        let s = SurjectionComplex::new(n);
        for p in 0..=s.top() {
            for qq in 0..=s.top() - p {
                if let Some((x, u, v)) = s.coproduct_duality(p, qq) {
                    ok = false;
                    detail.push(format!("coproduct duality fails for n = {n}, x #{x}, {u:?} ⊗ {v:?}"));
                }
            }
        }
    }
    CheckResult::new("pairing", ok, detail)
}

fn normalize_selftest(top: usize, seed: u64) -> Result<CheckResult> {
    let mut ok = true;
    let mut detail = Vec::new();
    for s in seed..seed + 20 {
        let m = random_family(s, top + 1);
        let iso = kernel_quotient_iso(m.kernel_to_quotient()?);
        let norm = m.normalize_kernel()?;
        let dims: Vec<i64> = (0..=top + 1).map(|n| norm.complex.dim(-(n as i32)) as i64).collect();
        if !iso || dims != m.dold_kan_dims() {
            ok = false;
            detail.push(format!("seed {s}: iso {iso}, dims {dims:?} vs {:?}", m.dold_kan_dims()));
        }
    }
    detail.push(format!("20 random families, levels 0..={}", top + 1));
    Ok(CheckResult::new("normalize", ok, detail))
}

fn simplex_identities(top: usize) -> CheckResult {
    let (d, s) = (SimplexMap::coface, SimplexMap::codegeneracy);
    let mut failed = Vec::new();
    let mut eq = |name: String, a: Result<SimplexMap>, b: Result<SimplexMap>| {
        if a.ok() != b.ok() {
            failed.push(name);
        }
    };
    for n in 1..top {
        for i in 0..=n + 1 {
            for j in 0..i {
                eq(format!("d^{i} d^{j}, n = {n}"), d(n, j).then(&d(n + 1, i)), d(n, i - 1).then(&d(n + 1, j)));
            }
        }
        for i in 0..n {
            for j in i..n {
                eq(format!("s^{j} s^{i}, n = {n}"), s(n, i).then(&s(n - 1, j)), s(n, j + 1).then(&s(n - 1, i)));
            }
        }
        for j in 0..n {
            eq(format!("s^{j} d^{j}, n = {n}"), d(n, j).then(&s(n - 1, j)), Ok(SimplexMap::identity(n - 1)));
            eq(format!("s^{j} d^{}, n = {n}", j + 1), d(n, j + 1).then(&s(n - 1, j)), Ok(SimplexMap::identity(n - 1)));
        }
    }
    let mut detail: Vec<String> = failed.iter().map(|f| format!("fails: {f}")).collect();
    detail.push(format!("levels up to {top}"));
    CheckResult::new("simplex-identities", failed.is_empty(), detail)
}
