use isogame::enumerate::enumerate_connected;
use isogame::family::{cycle, path};
use isogame::graph::{Graph, VertexSet};
use isogame::oracle::{is_isolating, naive_game_value};
use isogame::rules::{apply_move, initial_closure, playable, ForbiddenFamily, MarkState};
use isogame::solver::{game_number, Mover, Solver, SolverConfig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

fn families() -> [ForbiddenFamily; 3] {
    [
        ForbiddenFamily::k1(),
        ForbiddenFamily::k2(),
        ForbiddenFamily::p3(),
    ]
}

fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| enumerate_connected(k).unwrap())
        .collect()
}

fn random_playout(
    g: &Graph,
    fam: &ForbiddenFamily,
    rng: &mut ChaCha8Rng,
) -> (Vec<usize>, MarkState) {
    let mut state = initial_closure(g, fam, VertexSet::EMPTY);
    let mut played = Vec::new();
    loop {
        let moves = playable(g, &state).to_vec();
        let Some(&x) = moves.choose(rng) else { break };
        played.push(x);
        state = apply_move(g, &state, fam, x).unwrap();
    }
    (played, state)
}

#[test]
fn playable_and_termination() {
    for g in connected_up_to(5) {
        for fam in families() {
            let mut rng = ChaCha8Rng::seed_from_u64(g.edge_count() as u64);
            let mut state = initial_closure(&g, &fam, VertexSet::EMPTY);
            loop {
                let p = playable(&g, &state);
                for v in g.vertices().iter() {
                    assert_eq!(
                        p.contains(v),
                        !g.closed_neighbors(v).is_subset(state.marked())
                    );
                }
                assert!(g.vertices().difference(state.marked()).is_subset(p));
                assert_eq!(p.is_empty(), state.marked() == g.vertices());
                let Some(&x) = p.to_vec().choose(&mut rng) else {
                    break;
                };
                let next = apply_move(&g, &state, &fam, x).unwrap();
                assert!(next.marked().len() > state.marked().len());
                state = next;
            }
        }
    }
}

#[test]
fn illegal_moves_rejected() {
    let g = path(4);
    let fam = ForbiddenFamily::k2();
    let s = initial_closure(&g, &fam, VertexSet::EMPTY);
    let s = apply_move(&g, &s, &fam, 1).unwrap();
    assert_eq!(s.marked(), g.vertices());
    assert!(apply_move(&g, &s, &fam, 2).is_err());
}

#[test]
fn marking_is_order_independent_on_permuted_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in connected_up_to(6) {
        for fam in families() {
            for _ in 0..3 {
                let (played, end) = random_playout(&g, &fam, &mut rng);
                let direct: VertexSet = g.closed_neighborhood(played.iter().copied().collect());
                assert_eq!(end.marked(), initial_closure(&g, &fam, direct).marked());
                // replay in shuffled orders while every move stays legal
                for _ in 0..4 {
                    let mut order = played.clone();
                    order.shuffle(&mut rng);
                    let mut s = initial_closure(&g, &fam, VertexSet::EMPTY);
                    let mut prefix = VertexSet::EMPTY;
                    for &x in &order {
                        if !playable(&g, &s).contains(x) {
                            break;
                        }
                        s = apply_move(&g, &s, &fam, x).unwrap();
                        prefix.insert(x);
                        let want = initial_closure(&g, &fam, g.closed_neighborhood(prefix));
                        assert_eq!(s.marked(), want.marked());
                    }
                }
            }
        }
    }
}

#[test]
fn closure_is_stable_and_games_end_isolated() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in connected_up_to(6) {
        for fam in families() {
            let (played, end) = random_playout(&g, &fam, &mut rng);
            assert!(is_isolating(&g, &fam, played.iter().copied().collect()));
            assert_eq!(
                initial_closure(&g, &fam, end.marked()).marked(),
                end.marked()
            );
        }
    }
}

#[test]
fn empty_family_marks_everything() {
    let g = cycle(5);
    let fam = ForbiddenFamily::none();
    assert_eq!(
        initial_closure(&g, &fam, VertexSet::EMPTY).marked(),
        g.vertices()
    );
    assert_eq!(game_number(&g, &fam, Mover::Dominator).unwrap(), 0);
}

#[test]
fn solver_matches_naive_oracle() {
    for g in connected_up_to(6) {
        for fam in families() {
            let start = initial_closure(&g, &fam, VertexSet::EMPTY);
            let mut solver = Solver::new(&g, &fam);
            for mover in [Mover::Dominator, Mover::Staller] {
                let fast = solver.value(&start, mover).unwrap();
                let slow = naive_game_value(&g, &fam, &start, mover).unwrap();
                assert_eq!(fast, slow);
            }
        }
    }
}

/// Every reachable state with its stored value must equal one plus the
/// best successor, re-expanded with a fresh solver.
#[test]
fn recurrence_fidelity_and_state_sufficiency() {
    for g in connected_up_to(6) {
        for fam in [ForbiddenFamily::k1(), ForbiddenFamily::k2()] {
            let mut solver = Solver::new(&g, &fam);
            let mut check = Solver::new(&g, &fam);
            let mut seen: FxHashMap<(u64, bool), usize> = FxHashMap::default();
            let mut stack = vec![(
                initial_closure(&g, &fam, VertexSet::EMPTY),
                Mover::Dominator,
            )];
            while let Some((state, mover)) = stack.pop() {
                let key = (state.marked().bits(), mover == Mover::Staller);
                let v = solver.value(&state, mover).unwrap();
                if let Some(&prev) = seen.get(&key) {
                    assert_eq!(prev, v);
                    continue;
                }
                seen.insert(key, v);
                let moves = playable(&g, &state);
                if moves.is_empty() {
                    assert_eq!(v, 0);
                    continue;
                }
                let succ: Vec<usize> = moves
                    .iter()
                    .map(|x| {
                        let next = apply_move(&g, &state, &fam, x).unwrap();
                        let value = check.value(&next, mover.other()).unwrap();
                        stack.push((next, mover.other()));
                        value
                    })
                    .collect();
                let best = match mover {
                    Mover::Dominator => *succ.iter().min().unwrap(),
                    Mover::Staller => *succ.iter().max().unwrap(),
                };
                assert_eq!(v, 1 + best);
            }
        }
    }
}

#[test]
fn principal_line_is_legal_and_pruning_is_value_neutral() {
    for g in connected_up_to(6) {
        for fam in families() {
            let start = initial_closure(&g, &fam, VertexSet::EMPTY);
            for mover in [Mover::Dominator, Mover::Staller] {
                let r = Solver::new(&g, &fam).game_value(&start, mover).unwrap();
                assert_eq!(r.principal_line.len(), r.value);
                assert_eq!(r.best_move, r.principal_line.first().copied());
                let mut s = start;
                for &x in &r.principal_line {
                    assert!(playable(&g, &s).contains(x));
                    s = apply_move(&g, &s, &fam, x).unwrap();
                }
                assert_eq!(s.marked(), g.vertices());
                let config = SolverConfig {
                    prune: true,
                    ..SolverConfig::default()
                };
                let pruned = Solver::with_config(&g, &fam, config)
                    .value(&start, mover)
                    .unwrap();
                assert_eq!(pruned, r.value);
            }
        }
    }
}

/// Domination game with no closure at all: a vertex is playable when it
/// dominates something new, the game ends when everything is dominated.
fn domination_game(
    g: &Graph,
    dominated: u64,
    dominator: bool,
    memo: &mut FxHashMap<(u64, bool), usize>,
) -> usize {
    let full = g.vertices().bits();
    if dominated == full {
        return 0;
    }
    if let Some(&v) = memo.get(&(dominated, dominator)) {
        return v;
    }
    let vals = (0..g.order()).filter_map(|x| {
        let nx = g.closed_neighbors(x).bits();
        (nx & !dominated != 0).then(|| 1 + domination_game(g, dominated | nx, !dominator, memo))
    });
    let v = if dominator {
        vals.min().unwrap()
    } else {
        vals.max().unwrap()
    };
    memo.insert((dominated, dominator), v);
    v
}

#[test]
fn k1_game_is_the_domination_game() {
    let k1 = ForbiddenFamily::k1();
    let mut graphs = connected_up_to(7);
    graphs.push(cycle(9));
    graphs.push(path(11));
    for g in graphs {
        for (mover, d) in [(Mover::Dominator, true), (Mover::Staller, false)] {
            let mut memo = FxHashMap::default();
            assert_eq!(
                game_number(&g, &k1, mover).unwrap(),
                domination_game(&g, 0, d, &mut memo)
            );
        }
    }
}

#[test]
fn start_player_gap_and_random_marks() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in connected_up_to(6) {
        for fam in families() {
            let marks = VertexSet::from_bits(rng.gen::<u64>()).intersection(g.vertices());
            let start = initial_closure(&g, &fam, marks);
            let mut solver = Solver::new(&g, &fam);
            let d = solver.value(&start, Mover::Dominator).unwrap();
            let s = solver.value(&start, Mover::Staller).unwrap();
            assert!(d.abs_diff(s) <= 1, "D={d} S={s}");
        }
    }
}

#[test]
fn memo_cap_is_enforced() {
    let g = path(14);
    let fam = ForbiddenFamily::k2();
    let start = initial_closure(&g, &fam, VertexSet::EMPTY);
    let config = SolverConfig {
        memo_cap: 10,
        ..SolverConfig::default()
    };
    let err = Solver::with_config(&g, &fam, config)
        .value(&start, Mover::Dominator)
        .unwrap_err();
    assert!(matches!(
        err,
        isogame::Error::StateSpaceBudgetExceeded { cap: 10 }
    ));
}
