//! Machine checks of the game's bounds and identities over exhaustive and
//! seeded-random instance sets.
//!
//! Every check produces a [`CheckReport`]. A report with no violations means
//! the property held on every instance tested; reports are deterministic for
//! a fixed seed regardless of the rayon thread count.

pub mod instances;
pub mod report;

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::enumerate::enumerate_connected;
use crate::error::{Error, Result};
use crate::family::{all_trees, make_family, path, star, FamilySpec, H_ATTACH};
use crate::graph::{Graph, VertexSet};
use crate::graph6::encode;
use crate::oracle::isolation_number;
use crate::rules::{close_marks, initial_closure, ForbiddenFamily};
use crate::solver::{Mover, Solver, SolverConfig, DEFAULT_MEMO_CAP};

pub use report::{CheckKind, CheckReport, Extremal, InstanceRow, Violation};

use instances::{forest_key, random_forest, random_subset};

/// Where a check draws its graphs from, for the kinds that take graphs.
#[derive(Debug, Clone, Default)]
pub enum GraphSource {
    /// The check's own instance set.
    #[default]
    Default,
    /// All connected graphs of order `1..=max_order`.
    Connected {
        max_order: usize,
    },
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone)]
pub struct CheckParams {
    pub seed: u64,
    /// Random instances per order, for the randomized checks.
    pub trials: Option<usize>,
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
    /// Families to test; empty means the check's default.
    pub families: Vec<ForbiddenFamily>,
    pub memo_cap: usize,
    /// Record wall time in the report.
    pub timed: bool,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            seed: 0,
            trials: None,
            n_min: None,
            n_max: None,
            families: Vec::new(),
            memo_cap: DEFAULT_MEMO_CAP,
            timed: false,
        }
    }
}

impl CheckParams {
    fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            memo_cap: self.memo_cap,
            prune: false,
        }
    }

    fn families_or(&self, default: &[ForbiddenFamily]) -> Vec<ForbiddenFamily> {
        if self.families.is_empty() {
            default.to_vec()
        } else {
            self.families.clone()
        }
    }
}

fn params_map(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn marks_text(s: VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Attaches the instance to a solver error so the failure can be replayed.
fn with_instance(err: Error, g: &Graph, what: &str) -> Error {
    match err {
        Error::StateSpaceBudgetExceeded { cap } => {
            Error::BudgetExceeded(format!("memo cap {cap} exceeded on {} ({what})", encode(g)))
        }
        other => other,
    }
}

/// D-start and S-start values from the closure of `marks`.
fn both_values(
    g: &Graph,
    fam: &ForbiddenFamily,
    marks: VertexSet,
    params: &CheckParams,
) -> Result<(usize, usize)> {
    let start = initial_closure(g, fam, marks);
    let mut solver = Solver::with_config(g, fam, params.solver_config());
    let d = solver.value(&start, Mover::Dominator);
    let s = solver.value(&start, Mover::Staller);
    match (d, s) {
        (Ok(d), Ok(s)) => Ok((d, s)),
        (Err(e), _) | (_, Err(e)) => Err(with_instance(e, g, fam.tag())),
    }
}

fn d_value(g: &Graph, fam: &ForbiddenFamily, params: &CheckParams) -> Result<usize> {
    let start = initial_closure(g, fam, VertexSet::EMPTY);
    Solver::with_config(g, fam, params.solver_config())
        .value(&start, Mover::Dominator)
        .map_err(|e| with_instance(e, g, fam.tag()))
}

fn connected_up_to(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate_connected(n)?);
    }
    Ok(out)
}

fn source_graphs(
    source: &GraphSource,
    default_max: usize,
    params: &CheckParams,
) -> Result<Vec<Graph>> {
    match source {
        GraphSource::Default => connected_up_to(params.n_max.unwrap_or(default_max)),
        GraphSource::Connected { max_order } => connected_up_to(*max_order),
        GraphSource::Graphs(gs) => Ok(gs.clone()),
    }
}

fn row(g: &Graph, fam: &str, d: usize, s: usize) -> InstanceRow {
    InstanceRow {
        graph6: encode(g),
        n: g.order(),
        family: fam.to_string(),
        d_value: d,
        s_value: s,
        lower: None,
        upper: None,
        exact: None,
    }
}

/// Runs one named check.
pub fn run_check(
    kind: CheckKind,
    source: &GraphSource,
    params: &CheckParams,
) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = match kind {
        CheckKind::DiffAtMostOne => diff_at_most_one(source, params)?,
        CheckKind::ContinuationPrinciple => continuation_principle(source, params)?,
        CheckKind::Sandwich => sandwich(source, params)?,
        CheckKind::FamilyMonotone => family_monotone(source, params)?,
        CheckKind::HalfBound => half_bound(source, params)?,
        CheckKind::SpanningGap => spanning_gap(params)?,
        CheckKind::ForestMonotone => forest_monotone(params)?,
        CheckKind::PathBounds => path_check(CheckKind::PathBounds, params)?,
        CheckKind::PathExact => path_check(CheckKind::PathExact, params)?,
        CheckKind::StarAddition => star_addition(params)?,
        CheckKind::FamilyValues => family_values(params)?,
        CheckKind::ConjectureSweep => conjecture_sweep_with(params.n_max.unwrap_or(8), params)?,
    };
    report.normalize();
    if params.timed {
        report.wall_time_ms = Some(started.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn diff_at_most_one(source: &GraphSource, params: &CheckParams) -> Result<CheckReport> {
    let graphs = source_graphs(source, 6, params)?;
    let fams = params.families_or(&[ForbiddenFamily::k1(), ForbiddenFamily::k2()]);
    let mut report = CheckReport::new(CheckKind::DiffAtMostOne);
    for fam in &fams {
        let values = graphs
            .par_iter()
            .map(|g| both_values(g, fam, VertexSet::EMPTY, params))
            .collect::<Result<Vec<_>>>()?;
        for (g, (d, s)) in graphs.iter().zip(values) {
            report.instances += 1;
            if d.abs_diff(s) > 1 {
                report.violations.push(Violation {
                    graph6: encode(g),
                    parameters: params_map(&[("family", fam.tag().into())]),
                    observed: format!("D={d} S={s}"),
                    expected: "|D-S| <= 1".into(),
                });
            }
            report.rows.push(row(g, fam.tag(), d, s));
        }
    }
    Ok(report)
}

fn sandwich(source: &GraphSource, params: &CheckParams) -> Result<CheckReport> {
    let graphs = source_graphs(source, 6, params)?;
    let fams = params.families_or(&[ForbiddenFamily::k1(), ForbiddenFamily::k2()]);
    let mut report = CheckReport::new(CheckKind::Sandwich);
    report
        .notes
        .push("when i = 0 the game is over before it starts, so both values are 0".into());
    for fam in &fams {
        let values = graphs
            .par_iter()
            .map(|g| {
                let iota = isolation_number(g, fam)?.size;
                let (d, s) = both_values(g, fam, VertexSet::EMPTY, params)?;
                Ok((iota, d, s))
            })
            .collect::<Result<Vec<_>>>()?;
        for (g, (iota, d, s)) in graphs.iter().zip(values) {
            report.instances += 1;
            let d_upper = (2 * iota).saturating_sub(1);
            let ok = iota <= d && d <= d_upper && iota <= s && s <= 2 * iota;
            if !ok {
                report.violations.push(Violation {
                    graph6: encode(g),
                    parameters: params_map(&[("family", fam.tag().into())]),
                    observed: format!("i={iota} D={d} S={s}"),
                    expected: format!("{iota} <= D <= {d_upper}, {iota} <= S <= {}", 2 * iota),
                });
            }
            let mut r = row(g, fam.tag(), d, s);
            r.lower = Some(iota);
            r.upper = Some(d_upper);
            report.rows.push(r);
        }
    }
    Ok(report)
}

fn family_monotone(source: &GraphSource, params: &CheckParams) -> Result<CheckReport> {
    let graphs = source_graphs(source, 6, params)?;
    let pairs: Vec<(ForbiddenFamily, ForbiddenFamily)> = match params.families.as_slice() {
        [f, f2] => vec![(f.clone(), f2.clone())],
        _ => vec![
            (ForbiddenFamily::k1(), ForbiddenFamily::k2()),
            (ForbiddenFamily::k2(), ForbiddenFamily::p3()),
        ],
    };
    let mut report = CheckReport::new(CheckKind::FamilyMonotone);
    report
        .notes
        .push("the (K1, K2) pair is the bound ig(G) <= gamma_g(G)".into());
    for (small, large) in &pairs {
        let values = graphs
            .par_iter()
            .map(|g| Ok((d_value(g, small, params)?, d_value(g, large, params)?)))
            .collect::<Result<Vec<_>>>()?;
        for (g, (v_small, v_large)) in graphs.iter().zip(values) {
            report.instances += 1;
            if v_large > v_small {
                report.violations.push(Violation {
                    graph6: encode(g),
                    parameters: params_map(&[
                        ("family", small.tag().into()),
                        ("larger_family", large.tag().into()),
                    ]),
                    observed: format!(
                        "ig(G,{})={v_large} ig(G,{})={v_small}",
                        large.tag(),
                        small.tag()
                    ),
                    expected: format!("ig(G,{}) <= ig(G,{})", large.tag(), small.tag()),
                });
            }
        }
    }
    Ok(report)
}

fn half_bound(source: &GraphSource, params: &CheckParams) -> Result<CheckReport> {
    let graphs = source_graphs(source, 6, params)?;
    let fam = ForbiddenFamily::k2();
    let mut report = CheckReport::new(CheckKind::HalfBound);
    let values = graphs
        .par_iter()
        .map(|g| d_value(g, &fam, params))
        .collect::<Result<Vec<_>>>()?;
    for (g, d) in graphs.iter().zip(values) {
        report.instances += 1;
        let n = g.order();
        if 2 * d > n {
            report.violations.push(Violation {
                graph6: encode(g),
                parameters: params_map(&[("family", "K2".into())]),
                observed: format!("ig={d}"),
                expected: format!("ig <= {n}/2"),
            });
        } else if 2 * d == n {
            report.extremal.push(Extremal {
                description: "ig = n/2".into(),
                graph6: encode(g),
                parameters: params_map(&[("n", n.to_string())]),
                observed: format!("ig={d}"),
            });
        }
        let mut r = row(g, "K2", d, 0);
        r.s_value = 0;
        r.upper = Some(n / 2);
        report.rows.push(r);
    }
    Ok(report)
}

fn spanning_gap(params: &CheckParams) -> Result<CheckReport> {
    let fam = ForbiddenFamily::k2();
    let mut report = CheckReport::new(CheckKind::SpanningGap);
    let lo = params.n_min.unwrap_or(3);
    let hi = params.n_max.unwrap_or(4);
    let mut cases: Vec<(FamilySpec, Option<usize>)> = Vec::new();
    for n in lo..=hi {
        cases.push((FamilySpec::GTriangles(n), Some(n)));
        for k in 1..n {
            cases.push((FamilySpec::FTriangles(n, k), Some(n - k)));
        }
        cases.push((FamilySpec::FTriangles(n, n), (n % 2 == 1).then_some(1)));
    }
    let graphs = cases
        .iter()
        .map(|(spec, _)| make_family(spec))
        .collect::<Result<Vec<_>>>()?;
    let values = graphs
        .par_iter()
        .map(|g| d_value(g, &fam, params))
        .collect::<Result<Vec<_>>>()?;
    for ((spec, expected), (g, d)) in cases.iter().zip(graphs.iter().zip(values)) {
        match expected {
            Some(want) => {
                report.instances += 1;
                if d != *want {
                    report.violations.push(Violation {
                        graph6: encode(g),
                        parameters: params_map(&[("family_spec", spec.to_string())]),
                        observed: format!("ig={d}"),
                        expected: format!("ig={want}"),
                    });
                }
            }
            None => report
                .notes
                .push(format!("{spec}: ig={d} (no value asserted for even n)")),
        }
        report.rows.push(row(g, "K2", d, 0));
    }
    Ok(report)
}

fn forest_monotone(params: &CheckParams) -> Result<CheckReport> {
    let fam = ForbiddenFamily::k2();
    let max_n = params.n_max.unwrap_or(9);
    let trials = params.trials.unwrap_or(100);
    let mut report = CheckReport::new(CheckKind::ForestMonotone);

    // All labeled trees; isomorphic trees share a value, so each class is
    // solved once and the result applies to every labeled copy.
    let mut classes: HashMap<Vec<u8>, (Graph, usize)> = HashMap::new();
    let mut labeled = 0usize;
    for n in 1..=max_n {
        for t in all_trees(n) {
            labeled += 1;
            classes
                .entry(forest_key(&t))
                .and_modify(|e| e.1 += 1)
                .or_insert((t, 1));
        }
    }
    let mut reps: Vec<(Vec<u8>, Graph, usize)> =
        classes.into_iter().map(|(k, (g, c))| (k, g, c)).collect();
    reps.sort_by(|a, b| (a.1.order(), &a.0).cmp(&(b.1.order(), &b.0)));
    let values = reps
        .par_iter()
        .map(|(_, g, _)| both_values(g, &fam, VertexSet::EMPTY, params))
        .collect::<Result<Vec<_>>>()?;
    for ((_, g, copies), (d, s)) in reps.iter().zip(values) {
        report.instances += copies;
        if d > s {
            report.violations.push(Violation {
                graph6: encode(g),
                parameters: params_map(&[("labeled_copies", copies.to_string())]),
                observed: format!("D={d} S={s}"),
                expected: "D <= S".into(),
            });
        }
        report.rows.push(row(g, "K2", d, s));
    }
    report.notes.push(format!(
        "{labeled} labeled trees of order 1..={max_n} in {} isomorphism classes",
        reps.len()
    ));

    // Partially marked random forests.
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let lo = max_n.saturating_sub(3).max(1);
    let mut forests = Vec::new();
    for n in lo..=max_n {
        for trial in 0..trials {
            let f = random_forest(&mut rng, n, 0.3);
            let marks = random_subset(&mut rng, f.vertices(), 0.3);
            forests.push((f, marks, trial));
        }
    }
    let values = forests
        .par_iter()
        .map(|(f, marks, _)| both_values(f, &fam, *marks, params))
        .collect::<Result<Vec<_>>>()?;
    for ((f, marks, trial), (d, s)) in forests.iter().zip(values) {
        report.instances += 1;
        if d > s {
            report.violations.push(Violation {
                graph6: encode(f),
                parameters: params_map(&[
                    ("marks", marks_text(*marks)),
                    ("seed", params.seed.to_string()),
                    ("trial", trial.to_string()),
                ]),
                observed: format!("D={d} S={s}"),
                expected: "D <= S".into(),
            });
        }
    }
    report.notes.push(format!(
        "{} random partially marked forests of order {lo}..={max_n}, seed {}",
        forests.len(),
        params.seed
    ));
    Ok(report)
}

/// `ceil(2n/5) - 1`.
pub fn path_lower(n: usize) -> usize {
    (2 * n).div_ceil(5) - 1
}

/// `floor((2n+2)/5)`.
pub fn path_upper(n: usize) -> usize {
    (2 * n + 2) / 5
}

pub fn path_exact_residue(n: usize) -> bool {
    matches!(n % 5, 1..=3)
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PathRow {
    pub n: usize,
    pub lower: usize,
    pub d_value: usize,
    pub s_value: usize,
    pub upper: usize,
    /// `d_value == s_value == upper`.
    pub exact: bool,
}

pub const PATH_TABLE_MIN: usize = 6;
pub const PATH_TABLE_MAX: usize = 23;

/// Solver values and bound columns for `P_n`, `n_min..=n_max`.
pub fn path_table(n_min: usize, n_max: usize) -> Result<Vec<PathRow>> {
    path_table_with(n_min, n_max, &CheckParams::default())
}

fn path_table_with(n_min: usize, n_max: usize, params: &CheckParams) -> Result<Vec<PathRow>> {
    if n_min < PATH_TABLE_MIN || n_min > n_max {
        return Err(Error::Usage(format!(
            "path table needs {PATH_TABLE_MIN} <= n_min <= n_max, got {n_min}..={n_max}"
        )));
    }
    if n_max > PATH_TABLE_MAX {
        return Err(Error::BudgetExceeded(format!(
            "path table supports n <= {PATH_TABLE_MAX}, got {n_max}"
        )));
    }
    let fam = ForbiddenFamily::k2();
    let ns: Vec<usize> = (n_min..=n_max).collect();
    ns.par_iter()
        .map(|&n| {
            let (d, s) = both_values(&path(n), &fam, VertexSet::EMPTY, params)?;
            let upper = path_upper(n);
            Ok(PathRow {
                n,
                lower: path_lower(n),
                d_value: d,
                s_value: s,
                upper,
                exact: d == upper && s == upper,
            })
        })
        .collect()
}

fn path_check(kind: CheckKind, params: &CheckParams) -> Result<CheckReport> {
    let n_min = params.n_min.unwrap_or(PATH_TABLE_MIN);
    let n_max = params.n_max.unwrap_or(PATH_TABLE_MAX);
    let rows = path_table_with(n_min, n_max, params)?;
    let mut report = CheckReport::new(kind);
    for r in &rows {
        let g = path(r.n);
        let parameters = params_map(&[("n", r.n.to_string())]);
        let observed = format!("D={} S={}", r.d_value, r.s_value);
        match kind {
            CheckKind::PathBounds => {
                report.instances += 1;
                if !(r.lower <= r.d_value && r.d_value <= r.s_value && r.s_value <= r.upper) {
                    report.violations.push(Violation {
                        graph6: encode(&g),
                        parameters,
                        observed,
                        expected: format!("{} <= D <= S <= {}", r.lower, r.upper),
                    });
                }
            }
            _ => {
                if path_exact_residue(r.n) {
                    report.instances += 1;
                    if !r.exact {
                        report.violations.push(Violation {
                            graph6: encode(&g),
                            parameters,
                            observed,
                            expected: format!("D = S = {}", r.upper),
                        });
                    }
                }
            }
        }
        report.rows.push(InstanceRow {
            graph6: encode(&g),
            n: r.n,
            family: "K2".into(),
            d_value: r.d_value,
            s_value: r.s_value,
            lower: Some(r.lower),
            upper: Some(r.upper),
            exact: Some(r.exact),
        });
    }
    Ok(report)
}

fn star_addition(params: &CheckParams) -> Result<CheckReport> {
    let fam = ForbiddenFamily::k2();
    let max_n = params.n_max.unwrap_or(8);
    let trials = params.trials.unwrap_or(30);
    let mut report = CheckReport::new(CheckKind::StarAddition);

    let mut bases: Vec<(Graph, VertexSet)> = Vec::new();
    for n in 1..=max_n.min(6) {
        bases.extend(all_trees(n).map(|t| (t, VertexSet::EMPTY)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for n in 1..=max_n {
        for _ in 0..trials {
            let f = random_forest(&mut rng, n, 0.3);
            let marks = random_subset(&mut rng, f.vertices(), 0.3);
            bases.push((f, marks));
        }
    }
    let outcomes = bases
        .par_iter()
        .map(|(g, marks)| {
            let base = both_values(g, &fam, *marks, params)?;
            if base.0 > 4 {
                return Ok(None);
            }
            let mut grown = Vec::new();
            for r in 1..=3 {
                let h = g.disjoint_union(&star(r))?;
                grown.push((r, both_values(&h, &fam, *marks, params)?));
            }
            Ok(Some((base, grown)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut skipped = 0;
    for ((g, marks), outcome) in bases.iter().zip(outcomes) {
        let Some(((d, s), grown)) = outcome else {
            skipped += 1;
            continue;
        };
        for (r, (d2, s2)) in grown {
            report.instances += 1;
            if !(d2 > d && s2 > s) {
                report.violations.push(Violation {
                    graph6: encode(g),
                    parameters: params_map(&[("marks", marks_text(*marks)), ("r", r.to_string())]),
                    observed: format!("G: D={d} S={s}; G+K1,{r}: D={d2} S={s2}"),
                    expected: "both values strictly increase".into(),
                });
            }
        }
    }
    report.notes.push(format!(
        "{} base forests (all trees up to order {}, {trials} random marked forests per order up to {max_n}, seed {}); {skipped} skipped with ig > 4",
        bases.len(),
        max_n.min(6),
        params.seed
    ));
    Ok(report)
}

fn family_values(params: &CheckParams) -> Result<CheckReport> {
    let fam = ForbiddenFamily::k2();
    let mut report = CheckReport::new(CheckKind::FamilyValues);
    let h_marks = VertexSet::singleton(H_ATTACH);
    type Expected = fn(usize) -> usize;
    let cases: Vec<(FamilySpec, VertexSet, Expected)> = vec![
        (
            FamilySpec::GStar(Box::new(FamilySpec::Complete(1))),
            VertexSet::EMPTY,
            |n| 3 * n / 7,
        ),
        (
            FamilySpec::GStar(Box::new(FamilySpec::Complete(2))),
            VertexSet::EMPTY,
            |n| 3 * n / 7,
        ),
        (FamilySpec::GH(1), VertexSet::EMPTY, |n| 5 * n / 12),
        (FamilySpec::HGraph, h_marks, |_| 5),
    ];
    for (spec, marks, expected) in &cases {
        let g = make_family(spec)?;
        let (d, s) = both_values(&g, &fam, *marks, params)?;
        let want = expected(g.order());
        report.instances += 1;
        let mut parameters = params_map(&[("family_spec", spec.to_string())]);
        if !marks.is_empty() {
            parameters.insert("marks".into(), marks_text(*marks));
        }
        if d != want || s != want {
            report.violations.push(Violation {
                graph6: encode(&g),
                parameters,
                observed: format!("D={d} S={s}"),
                expected: format!("D = S = {want}"),
            });
        }
        report.rows.push(row(&g, "K2", d, s));
    }
    report.notes.push(
        "gh:n for n >= 2 (24+ vertices) is beyond exhaustive search and is not verified".into(),
    );
    report
        .notes
        .push("the gh family uses the path P_n as its base graph".into());
    Ok(report)
}

/// `ceil(3n/7)`.
pub fn conjecture_bound(n: usize) -> usize {
    (3 * n).div_ceil(7)
}

/// Records `ig` and `ig'` on every connected graph of order `1..=n_max`
/// (`K_2` itself excluded) against `ceil(3n/7)`.
pub fn conjecture_sweep(n_max: usize) -> Result<CheckReport> {
    conjecture_sweep_with(n_max, &CheckParams::default())
}

fn conjecture_sweep_with(n_max: usize, params: &CheckParams) -> Result<CheckReport> {
    if n_max > 8 {
        return Err(Error::BudgetExceeded(format!(
            "conjecture sweep supports n_max <= 8, got {n_max}"
        )));
    }
    let fam = ForbiddenFamily::k2();
    let mut report = CheckReport::new(CheckKind::ConjectureSweep);
    report
        .notes
        .push("K_2 is excluded: it is itself a K_2 component".into());
    let mut best: Option<(usize, usize)> = None;
    for n in 1..=n_max {
        if n == 2 {
            continue;
        }
        let graphs: Vec<Graph> = enumerate_connected(n)?.collect();
        let values = graphs
            .par_iter()
            .map(|g| both_values(g, &fam, VertexSet::EMPTY, params))
            .collect::<Result<Vec<_>>>()?;
        let bound = conjecture_bound(n);
        for (g, (d, s)) in graphs.iter().zip(values) {
            report.instances += 1;
            let top = d.max(s);
            if best.is_none_or(|(bt, bb)| top * bb > bt * bound) {
                best = Some((top, bound));
            }
            let g6 = encode(g);
            if top > bound {
                report.violations.push(Violation {
                    graph6: g6.clone(),
                    parameters: params_map(&[("n", n.to_string())]),
                    observed: format!("D={d} S={s}"),
                    expected: format!("D, S <= {bound}"),
                });
            } else if top == bound {
                let which = match (d == bound, s == bound) {
                    (true, true) => "D and S",
                    (true, false) => "D",
                    _ => "S",
                };
                report.extremal.push(Extremal {
                    description: format!("{which} = ceil(3n/7)"),
                    graph6: g6.clone(),
                    parameters: params_map(&[("n", n.to_string())]),
                    observed: format!("D={d} S={s}"),
                });
            }
            let mut r = row(g, "K2", d, s);
            r.upper = Some(bound);
            report.rows.push(r);
        }
    }
    if let Some((top, bound)) = best {
        report
            .notes
            .push(format!("max ratio max(D,S)/ceil(3n/7) = {top}/{bound}"));
    }
    Ok(report)
}

/// Seeded nested `(A, B)` marking pairs with `B ⊆ A`, both closed, on
/// random connected graphs of each order in `orders`.
pub fn continuation_instances(
    seed: u64,
    orders: std::ops::RangeInclusive<usize>,
    per_order: usize,
    families: &[ForbiddenFamily],
) -> Result<Vec<(Graph, ForbiddenFamily, VertexSet, VertexSet)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in orders {
        let pool: Vec<Graph> = enumerate_connected(n)?.collect();
        for _ in 0..per_order {
            let g = pool.choose(&mut rng).unwrap().clone();
            let fam = families[rng.gen_range(0..families.len())].clone();
            let played: VertexSet = (0..rng.gen_range(0..=2))
                .map(|_| rng.gen_range(0..n))
                .collect();
            let extra = random_subset(&mut rng, g.vertices(), 0.2);
            let a = close_marks(&g, &fam, g.closed_neighborhood(played).union(extra));
            let b = close_marks(&g, &fam, random_subset(&mut rng, a, 0.5));
            debug_assert!(b.is_subset(a));
            out.push((g, fam, a, b));
        }
    }
    Ok(out)
}

fn continuation_principle(source: &GraphSource, params: &CheckParams) -> Result<CheckReport> {
    let per_order = params.trials.unwrap_or(200);
    let lo = params.n_min.unwrap_or(4);
    let hi = params.n_max.unwrap_or(7);
    let fams = params.families_or(&[
        ForbiddenFamily::k1(),
        ForbiddenFamily::k2(),
        ForbiddenFamily::p3(),
    ]);
    let mut report = CheckReport::new(CheckKind::ContinuationPrinciple);
    let cases = match source {
        GraphSource::Default => continuation_instances(params.seed, lo..=hi, per_order, &fams)?,
        _ => {
            let graphs = source_graphs(source, hi, params)?;
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            let mut out = Vec::new();
            for g in &graphs {
                for fam in &fams {
                    for _ in 0..per_order {
                        let a0 = random_subset(&mut rng, g.vertices(), 0.4);
                        let a = close_marks(g, fam, a0);
                        let b = close_marks(g, fam, random_subset(&mut rng, a, 0.5));
                        out.push((g.clone(), fam.clone(), a, b));
                    }
                }
            }
            out
        }
    };
    let values = cases
        .par_iter()
        .map(|(g, fam, a, b)| {
            Ok((
                both_values(g, fam, *a, params)?,
                both_values(g, fam, *b, params)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    for ((g, fam, a, b), ((da, sa), (db, sb))) in cases.iter().zip(values) {
        report.instances += 1;
        if da > db || sa > sb {
            report.violations.push(Violation {
                graph6: encode(g),
                parameters: params_map(&[
                    ("family", fam.tag().into()),
                    ("A", marks_text(*a)),
                    ("B", marks_text(*b)),
                    ("seed", params.seed.to_string()),
                ]),
                observed: format!("D(A)={da} D(B)={db} S(A)={sa} S(B)={sb}"),
                expected: "D(A) <= D(B) and S(A) <= S(B)".into(),
            });
        }
    }
    Ok(report)
}
