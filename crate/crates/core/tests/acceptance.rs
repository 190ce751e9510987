//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use isogame::enumerate::{canonical_code, enumerate_connected};
use isogame::family::{cycle, h_graph, make_family, path, FamilySpec};
use isogame::graph::{Graph, VertexSet};
use isogame::graph6::{encode, parse_graph6};
use isogame::harness::{
    conjecture_sweep, path_table, run_check, CheckKind, CheckParams, CheckReport, GraphSource,
};
use isogame::oracle::{isolation_number, naive_game_value};
use isogame::rules::{apply_move, initial_closure, playable, ForbiddenFamily};
use isogame::solver::{game_number, Mover, Solver};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);
/// name, graph, family, initial marks, expected D value, expected S value
type PaperCase<'a> = (
    &'a str,
    Graph,
    &'a ForbiddenFamily,
    VertexSet,
    Option<usize>,
    Option<usize>,
);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn values(g: &Graph, fam: &ForbiddenFamily, marks: VertexSet) -> (usize, usize) {
    let start = initial_closure(g, fam, marks);
    let mut s = Solver::new(g, fam);
    (
        s.value(&start, Mover::Dominator).unwrap(),
        s.value(&start, Mover::Staller).unwrap(),
    )
}

fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| enumerate_connected(k).unwrap())
        .collect()
}

fn report_ok(r: &CheckReport, instances: Option<usize>) -> Result<(), String> {
    ensure(r.passed(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations.first()
        )
    })?;
    if let Some(want) = instances {
        ensure(r.instances == want, || {
            format!("{} instances, expected {want}", r.instances)
        })?;
    }
    Ok(())
}

fn paper_values() -> Outcome {
    let k1 = ForbiddenFamily::k1();
    let k2 = ForbiddenFamily::k2();
    let spec = |s: &str| make_family(&s.parse::<FamilySpec>().unwrap()).unwrap();
    let none = VertexSet::EMPTY;
    let cases: Vec<PaperCase> = vec![
        ("C6", cycle(6), &k2, none, Some(3), Some(2)),
        ("P4", path(4), &k2, none, None, Some(2)),
        ("H", h_graph(), &k2, none, Some(5), Some(5)),
        (
            "H|{v4}",
            h_graph(),
            &k2,
            VertexSet::singleton(3),
            Some(5),
            Some(5),
        ),
        ("P7", path(7), &k2, none, Some(3), None),
        ("G3", spec("gtriangles:3"), &k2, none, Some(3), None),
        (
            "F_1 (n=3)",
            spec("ftriangles:3:1"),
            &k2,
            none,
            Some(2),
            None,
        ),
        (
            "F_2 (n=3)",
            spec("ftriangles:3:2"),
            &k2,
            none,
            Some(1),
            None,
        ),
        (
            "F_3 (n=3)",
            spec("ftriangles:3:3"),
            &k2,
            none,
            Some(1),
            None,
        ),
        (
            "gamma_g(F3)",
            spec("ftriangles:3:3"),
            &k1,
            none,
            Some(4),
            None,
        ),
    ];
    for (name, g, fam, marks, d, s) in &cases {
        let (dv, sv) = values(g, fam, *marks);
        ensure(d.is_none_or(|d| d == dv), || {
            format!("{name}: D={dv}, expected {d:?}")
        })?;
        ensure(s.is_none_or(|s| s == sv), || {
            format!("{name}: S={sv}, expected {s:?}")
        })?;
    }
    Ok(format!("{} values", cases.len()))
}

fn path_bounds() -> Outcome {
    let rows = path_table(6, 23).map_err(|e| e.to_string())?;
    ensure(rows.len() == 18, || format!("{} rows", rows.len()))?;
    let mut exact = 0;
    for r in &rows {
        let n = r.n;
        let lower = (2 * n).div_ceil(5) - 1;
        let upper = (2 * n + 2) / 5;
        let p = path(n);
        let (d, s) = values(&p, &ForbiddenFamily::k2(), VertexSet::EMPTY);
        ensure(d == r.d_value && s == r.s_value, || {
            format!("P{n}: table disagrees with solver")
        })?;
        ensure(lower <= d && d <= s && s <= upper, || {
            format!("P{n}: {lower} <= {d} <= {s} <= {upper} fails")
        })?;
        if matches!(n % 5, 1..=3) {
            exact += 1;
            ensure(d == upper && s == upper, || {
                format!("P{n}: D={d} S={s}, expected both {upper}")
            })?;
        }
    }
    // residues 1, 2, 3 mod 5 in 6..=23: 6-8, 11-13, 16-18, 21-23
    ensure(exact == 12, || format!("{exact} exact rows"))?;
    Ok(format!("n = 6..23, {exact} exact"))
}

fn gstar() -> Outcome {
    let k2 = ForbiddenFamily::k2();
    let g1 = make_family(&"gstar:complete:1".parse().unwrap()).unwrap();
    ensure(g1 == path(7), || "gstar(K1) is not P7".into())?;
    let d1 = game_number(&g1, &k2, Mover::Dominator).unwrap();
    ensure(d1 == 3, || format!("gstar(K1): {d1}"))?;
    let g2 = make_family(&"gstar:complete:2".parse().unwrap()).unwrap();
    ensure(g2.order() == 14, || "gstar(K2) order".into())?;
    let (d, s) = values(&g2, &k2, VertexSet::EMPTY);
    ensure(d == 6 && s == 6, || format!("gstar(K2): D={d} S={s}"))?;
    Ok("3 and 6/6".into())
}

fn theorem_suite() -> Outcome {
    let graphs = connected_up_to(6);
    ensure(graphs.len() == 143, || format!("{} graphs", graphs.len()))?;
    let (k1, k2, p3) = (
        ForbiddenFamily::k1(),
        ForbiddenFamily::k2(),
        ForbiddenFamily::p3(),
    );
    let mut checked = 0;
    for g in &graphs {
        let n = g.order();
        let g6 = encode(g);
        let mut d_by_fam = Vec::new();
        for fam in [&k1, &k2] {
            let (d, s) = values(g, fam, VertexSet::EMPTY);
            let iota = isolation_number(g, fam).unwrap().size;
            ensure(d.abs_diff(s) <= 1, || {
                format!("{g6} {}: D={d} S={s}", fam.tag())
            })?;
            ensure(
                iota <= d && d <= (2 * iota).saturating_sub(1).max(iota),
                || format!("{g6} {}: i={iota} D={d}", fam.tag()),
            )?;
            ensure(iota <= s && s <= 2 * iota, || {
                format!("{g6} {}: i={iota} S={s}", fam.tag())
            })?;
            d_by_fam.push(d);
            checked += 1;
        }
        let (gamma_g, ig) = (d_by_fam[0], d_by_fam[1]);
        ensure(ig <= gamma_g, || {
            format!("{g6}: ig={ig} > gamma_g={gamma_g}")
        })?;
        ensure(2 * ig <= n, || format!("{g6}: ig={ig} > n/2"))?;
        let (dp3, _) = values(g, &p3, VertexSet::EMPTY);
        ensure(dp3 <= ig, || format!("{g6}: ig(P3)={dp3} > ig(K2)={ig}"))?;
    }
    for kind in [
        CheckKind::DiffAtMostOne,
        CheckKind::Sandwich,
        CheckKind::FamilyMonotone,
    ] {
        let r = run_check(kind, &GraphSource::Default, &CheckParams::default())
            .map_err(|e| e.to_string())?;
        report_ok(&r, Some(286))?;
    }
    let r = run_check(
        CheckKind::HalfBound,
        &GraphSource::Default,
        &CheckParams::default(),
    )
    .map_err(|e| e.to_string())?;
    report_ok(&r, Some(143))?;
    Ok(format!("143 graphs, {checked} graph-family pairs"))
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for g in connected_up_to(6) {
        for fam in [
            ForbiddenFamily::k1(),
            ForbiddenFamily::k2(),
            ForbiddenFamily::p3(),
        ] {
            let start = initial_closure(&g, &fam, VertexSet::EMPTY);
            let mut solver = Solver::new(&g, &fam);
            for mover in [Mover::Dominator, Mover::Staller] {
                let fast = solver.value(&start, mover).unwrap();
                let slow = naive_game_value(&g, &fam, &start, mover).unwrap();
                ensure(fast == slow, || {
                    format!("{} {} {mover}: {fast} vs {slow}", encode(&g), fam.tag())
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} comparisons"))
}

fn order_independence() -> Outcome {
    let mut pairs = 0;
    for g in connected_up_to(5) {
        for fam in [
            ForbiddenFamily::k1(),
            ForbiddenFamily::k2(),
            ForbiddenFamily::p3(),
        ] {
            let start = initial_closure(&g, &fam, VertexSet::EMPTY);
            let first = playable(&g, &start);
            for x in first.iter() {
                let after_x = apply_move(&g, &start, &fam, x).unwrap();
                for y in playable(&g, &after_x).iter() {
                    let xy = apply_move(&g, &after_x, &fam, y).unwrap();
                    let direct = initial_closure(
                        &g,
                        &fam,
                        g.closed_neighborhood([x, y].into_iter().collect()),
                    );
                    ensure(xy.marked() == direct.marked(), || {
                        format!("{}: ({x},{y}) vs direct", encode(&g))
                    })?;
                    if first.contains(y) {
                        let after_y = apply_move(&g, &start, &fam, y).unwrap();
                        if playable(&g, &after_y).contains(x) {
                            let yx = apply_move(&g, &after_y, &fam, x).unwrap();
                            ensure(xy.marked() == yx.marked(), || {
                                format!("{}: ({x},{y}) vs ({y},{x})", encode(&g))
                            })?;
                            pairs += 1;
                        }
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let pool: Vec<Graph> = (1..=7)
        .flat_map(|n| enumerate_connected(n).unwrap())
        .collect();
    let fams = [
        ForbiddenFamily::k1(),
        ForbiddenFamily::k2(),
        ForbiddenFamily::p3(),
    ];
    for _ in 0..1000 {
        let g = pool.choose(&mut rng).unwrap();
        let fam = fams.choose(&mut rng).unwrap();
        let mut state = initial_closure(g, fam, VertexSet::EMPTY);
        let steps = rng.gen_range(0..=g.order());
        for _ in 0..steps {
            let Some(&x) = playable(g, &state).to_vec().choose(&mut rng) else {
                break;
            };
            state = apply_move(g, &state, fam, x).unwrap();
        }
        let again = initial_closure(g, fam, state.marked());
        ensure(
            again.marked() == state.marked() && again.absorbed().is_empty(),
            || {
                format!(
                    "{} {}: closure not stable at {:?}",
                    encode(g),
                    fam.tag(),
                    state.marked()
                )
            },
        )?;
    }
    Ok(format!(
        "{pairs} commuting prefix pairs, 1000 stable states"
    ))
}

fn forest_monotone() -> Outcome {
    let r = run_check(
        CheckKind::ForestMonotone,
        &GraphSource::Default,
        &CheckParams::default(),
    )
    .map_err(|e| e.to_string())?;
    report_ok(&r, None)?;
    ensure(r.notes.iter().any(|n| n.contains("400 random")), || {
        "missing random forests".into()
    })?;
    Ok(format!("{} instances", r.instances))
}

fn continuation() -> Outcome {
    let r = run_check(
        CheckKind::ContinuationPrinciple,
        &GraphSource::Default,
        &CheckParams::default(),
    )
    .map_err(|e| e.to_string())?;
    report_ok(&r, Some(800))?;
    Ok("800 instances".into())
}

fn sweep() -> Outcome {
    let r = conjecture_sweep(8).map_err(|e| e.to_string())?;
    report_ok(&r, None)?;
    let witness_codes: Vec<u64> = r
        .extremal
        .iter()
        .map(|e| canonical_code(&parse_graph6(&e.graph6).unwrap()))
        .collect();
    for (name, g) in [("C6", cycle(6)), ("P7", path(7))] {
        ensure(witness_codes.contains(&canonical_code(&g)), || {
            format!("{name} missing from witnesses")
        })?;
    }
    Ok(format!(
        "{} graphs, {} equality witnesses",
        r.instances,
        r.extremal.len()
    ))
}

fn round_trip() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for g in enumerate_connected(n).unwrap() {
            let back = parse_graph6(&encode(&g)).map_err(|e| e.to_string())?;
            ensure(back == g, || {
                format!("round trip failed for {}", encode(&g))
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} graphs"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("paper values", paper_values, Some(Duration::from_secs(10))),
        ("path table", path_bounds, Some(Duration::from_secs(300))),
        ("G* family", gstar, Some(Duration::from_secs(60))),
        (
            "theorem suite n<=6",
            theorem_suite,
            Some(Duration::from_secs(300)),
        ),
        ("oracle equivalence", oracle_equivalence, None),
        ("marking order-independence", order_independence, None),
        ("forest monotonicity", forest_monotone, None),
        ("continuation principle", continuation, None),
        (
            "conjecture sweep n<=8",
            sweep,
            Some(Duration::from_secs(7200)),
        ),
        ("graph6 round trip", round_trip, None),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > *b => Err(format!("took {elapsed:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}; {elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
