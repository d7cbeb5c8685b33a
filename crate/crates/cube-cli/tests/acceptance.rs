//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Tolerances and time limits are pinned below.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cube_core::{scramble, Axis, CubeState, Dims, Face, Move, MoveTable, Turn};
use hardness::{
    accepted_projections, decide_ideal, decide_ideal_with, gadget_before, gadget_between, ideal_moves, nae_brute,
    reduce_nae, small_formulas, verify_solution, Event, Line, DEFAULT_DECIDE_CAP,
};
use num_bigint::BigUint;
use optimal_cxc::{eulerian_tour, long_config_graph, optimal_solve, LongConfig, Oracle, DEFAULT_ORACLE_CAP};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solver_n1::{classify_cluster, cluster_solution, lower_bound_n1, naive_solve_n1, solve_n1, N1Cluster, N1ClusterState};
use solver_n3::perm::{generator_frame, generator_perm};
use solver_n3::solve::cluster_colorings;
use solver_n3::{cluster_positions, lower_bound_n3, solve_n3, Chirality, ClusterColoring, Perm};

/// Mean of grouped length * log2(n) / n^2 on the first full run, and the
/// allowed relative deviation per n.
const GROUPED_CONSTANT: f64 = 3.9;
const GROUPED_BAND: f64 = 0.30;
const SAMPLED_2X2X3: usize = 10_000;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn flat(n: usize) -> Dims {
    Dims::new(n, n, 1).unwrap()
}

fn row(y: usize) -> Move {
    Move::new(Axis::Y, y, Turn::Half)
}

fn col(x: usize) -> Move {
    Move::new(Axis::X, x, Turn::Half)
}

/// Flips the cubie at `(x, y)` of an n x n x 1 puzzle by swapping its top
/// and bottom stickers.
fn flip(s: &mut CubeState, x: usize, y: usize) {
    let (top, bottom) = (s.get(Face::U, y, x), s.get(Face::D, y, x));
    s.set(Face::U, y, x, bottom);
    s.set(Face::D, y, x, top);
}

/// Flipped positions and the figure's solving sequence for each state.
fn figure_state(cfg: N1ClusterState, x: usize, y: usize, n: usize) -> (Vec<(usize, usize)>, Vec<Move>) {
    let (x2, y2) = (n - 1 - x, n - 1 - y);
    let (v1, v2, h1, h2) = (col(x), col(x2), row(y), row(y2));
    match cfg {
        N1ClusterState::Solved => (vec![], vec![]),
        N1ClusterState::BlueLeft => (vec![(x, y), (x, y2)], vec![v1, h1, v1, h1]),
        N1ClusterState::BlueRight => (vec![(x2, y), (x2, y2)], vec![v2, h1, v2, h1]),
        N1ClusterState::BlueUp => (vec![(x, y), (x2, y)], vec![h1, v1, h1, v1]),
        N1ClusterState::BlueDown => (vec![(x, y2), (x2, y2)], vec![h2, v1, h2, v1]),
        N1ClusterState::AllBlue => (vec![(x, y), (x, y2), (x2, y), (x2, y2)], vec![h1, h2, v1, h1, h2, v1]),
    }
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut cases = 0;
    for n in 5..=12 {
        let inner: Vec<usize> = (1..n / 2).collect();
        for &x in &inner {
            for &y in &inner {
                for cfg in N1ClusterState::ALL {
                    let mut background = CubeState::solved(flat(n));
                    for &bx in &inner {
                        for &by in &inner {
                            if (bx, by) != (x, y) {
                                let other = *N1ClusterState::ALL.choose(&mut rng).unwrap();
                                for (px, py) in figure_state(other, bx, by, n).0 {
                                    flip(&mut background, px, py);
                                }
                            }
                        }
                    }
                    let (blue, seq) = figure_state(cfg, x, y, n);
                    let mut s = background.clone();
                    for (px, py) in blue {
                        flip(&mut s, px, py);
                    }
                    let c = N1Cluster::new(n, x, y);
                    ensure(classify_cluster(&s, c).ok() == Some(cfg), || format!("{cfg:?} at ({x},{y}) n={n} misread"))?;
                    ensure(cluster_solution(cfg, c) == seq, || format!("{cfg:?} solution differs from the figure"))?;
                    let after = s.apply_sequence(&seq).unwrap();
                    ensure(after.stickers() == background.stickers(), || {
                        format!("{cfg:?} at ({x},{y}) n={n}: not solved or other clusters disturbed")
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cluster/state cases"))
}

fn criterion_2() -> Check {
    let mut notes = Vec::new();
    for n in [8, 16, 32, 64, 128] {
        let (mut grouped_total, mut worse) = (0usize, 0usize);
        for seed in 0..100 {
            let (s, _) = scramble(flat(n), seed, 10 * n);
            let g = solve_n1(&s).map_err(|e| e.to_string())?;
            let v = naive_solve_n1(&s).map_err(|e| e.to_string())?;
            ensure(s.apply_sequence(&g).unwrap().is_solved(), || format!("grouped failed n={n} seed={seed}"))?;
            ensure(s.apply_sequence(&v).unwrap().is_solved(), || format!("naive failed n={n} seed={seed}"))?;
            if n >= 32 && g.len() >= v.len() {
                worse += 1;
            }
            grouped_total += g.len();
        }
        ensure(worse == 0, || format!("grouped not shorter on {worse} scrambles at n={n}"))?;
        let nf = n as f64;
        let c = grouped_total as f64 / 100.0 * nf.log2() / (nf * nf);
        ensure((c / GROUPED_CONSTANT - 1.0).abs() <= GROUPED_BAND, || {
            format!("n={n}: grouped*log2(n)/n^2 = {c:.3} outside {GROUPED_CONSTANT} +-{GROUPED_BAND}")
        })?;
        notes.push(format!("n={n}: {c:.2}"));
    }
    Ok(notes.join(", "))
}

/// Table entries of the 24 cluster 3-cycles, 1-based, row by row.
const TABLE: [[usize; 3]; 24] = [
    [1, 2, 12], [4, 3, 10], [2, 4, 11], [3, 1, 9], [5, 12, 8], [20, 13, 19],
    [12, 20, 24], [13, 5, 4], [6, 11, 5], [19, 14, 18], [11, 19, 22], [14, 6, 3],
    [7, 10, 6], [18, 15, 17], [10, 18, 21], [15, 7, 1], [8, 9, 7], [17, 16, 20],
    [9, 17, 23], [16, 8, 2], [21, 22, 13], [24, 23, 15], [22, 24, 16], [23, 21, 14],
];

fn table_perm(g: usize) -> Perm {
    let [a, b, c] = TABLE[g];
    Perm::three_cycle(24, [a - 1, b - 1, c - 1])
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let frames: BTreeSet<String> = (0..24).map(|g| format!("{:?}", generator_frame(g))).collect();
    ensure(frames.len() == 24, || "generator frames are not distinct".into())?;
    for g in 0..24 {
        ensure(generator_perm(g) == table_perm(g), || format!("generator {g} differs from the table"))?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(6..=24);
        let x = rng.gen_range(1..n / 2);
        let y = loop {
            let y = rng.gen_range(1..n / 2);
            if y != x {
                break y;
            }
        };
        let table = MoveTable::new(Dims::cube(n));
        let idx: Vec<usize> =
            cluster_positions(x, y, n).unwrap().iter().map(|p| p.index(table.layout())).collect();
        for g in 0..24 {
            let seq = generator_frame(g).sequence(x, y, n);
            let mut data: Vec<usize> = (0..table.layout().len()).collect();
            table.apply_sequence(&seq, &mut data);
            let changed: Vec<usize> = (0..data.len()).filter(|&i| data[i] != i).collect();
            ensure(changed.len() == 3 && changed.iter().all(|i| idx.contains(i)), || {
                format!("frame {g} at ({x},{y}) n={n} moves {} stickers", changed.len())
            })?;
            let mut images: Vec<usize> = (0..24).collect();
            for (b, &to) in idx.iter().enumerate() {
                let a = idx.iter().position(|&q| q == data[to]).unwrap();
                images[a] = b;
            }
            ensure(Perm::from_images(images).unwrap() == table_perm(g), || format!("frame {g} wrong cycle"))?;
            let thrice: Vec<Move> = seq.iter().chain(&seq).chain(&seq).copied().collect();
            let mut data: Vec<usize> = (0..table.layout().len()).collect();
            table.apply_sequence(&thrice, &mut data);
            ensure(data.iter().enumerate().all(|(i, &j)| i == j), || format!("frame {g}: S^3 is not the identity"))?;
        }
    }
    Ok("24 frames x 50 clusters".into())
}

fn criterion_4() -> Check {
    let gens: Vec<Perm> = (0..24).map(table_perm).collect();
    let start = [0usize, 1, 2];
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for g in &gens {
            let next = t.map(|p| g.image(p));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    ensure(seen.len() == 24 * 23 * 22, || format!("orbit has {} triples", seen.len()))?;
    Ok(format!("{} ordered triples", seen.len()))
}

fn criterion_5() -> Check {
    let n = 16;
    let table = MoveTable::new(Dims::cube(n));
    let layout = table.layout();
    let solved = ClusterColoring::solved(&cluster_positions(1, 2, n).unwrap(), &Face::ALL);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let identity_on = |seq: &[Move]| {
        let mut data: Vec<usize> = (0..layout.len()).collect();
        table.apply_sequence(seq, &mut data);
        data.iter().enumerate().all(|(i, &j)| i == j)
    };
    for case in 0..100 {
        let x = rng.gen_range(1..n / 2);
        let y = loop {
            let y = rng.gen_range(1..n / 2);
            if y != x {
                break y;
            }
        };
        let p = loop {
            let mut v: Vec<usize> = (0..24).collect();
            v.shuffle(&mut rng);
            let p = Perm::from_images(v).unwrap();
            if !p.is_odd() {
                break p;
            }
        };
        let idx: Vec<usize> = cluster_positions(x, y, n).unwrap().iter().map(|q| q.index(layout)).collect();
        let mut s = CubeState::solved(Dims::cube(n));
        let before: Vec<Face> = idx.iter().map(|&i| s.stickers()[i]).collect();
        for (a, &c) in before.iter().enumerate() {
            s.stickers_mut()[idx[p.image(a)]] = c;
        }
        let d = ClusterColoring::read(&s, &cluster_positions(x, y, n).unwrap());
        let cms = solver_n3::cluster_solution(&d, &solved, Chirality::of(x, y).unwrap()).map_err(|e| e.to_string())?;
        let seq = cms.instantiate(x, y, n);
        ensure(s.apply_sequence(&seq).unwrap().is_solved(), || format!("case {case}: cluster not solved"))?;
        let mut data: Vec<usize> = (0..layout.len()).collect();
        table.apply_sequence(&seq, &mut data);
        let mirror: Vec<usize> = cluster_positions(y, x, n).unwrap().iter().map(|q| q.index(layout)).collect();
        ensure(mirror.iter().all(|&i| data[i] == i), || format!("case {case}: mirror cluster moved"))?;
        ensure(identity_on(&cms.project_a(n)), || format!("case {case}: face projection moves stickers"))?;
        ensure(identity_on(&cms.project_b(x, n)), || format!("case {case}: column projection moves stickers"))?;
        ensure(identity_on(&cms.project_c(y, n)), || format!("case {case}: row projection moves stickers"))?;
    }
    Ok("100 even permutations on n=16".into())
}

fn criterion_6() -> Check {
    let sizes: Vec<usize> = (4..=16).chain([24, 32]).collect();
    for &n in &sizes {
        for seed in 0..10 {
            let (s, _) = scramble(Dims::cube(n), seed, 10 * n);
            let seq = solve_n3(&s).map_err(|e| format!("n={n} seed={seed}: {e}"))?;
            ensure(s.apply_sequence(&seq).unwrap().is_solved(), || format!("n={n} seed={seed} unsolved"))?;
        }
    }
    Ok(format!("{} sizes x 10 seeds", sizes.len()))
}

fn criterion_7() -> Check {
    let check = |oracle: &Oracle, s: &CubeState, d: u32| -> Result<(), String> {
        let seq = optimal_solve(s).map_err(|e| e.to_string())?;
        ensure(seq.len() as u32 == d, || format!("{}: length {} vs distance {d}", s.dims(), seq.len()))?;
        ensure(s.apply_sequence(&seq).unwrap().is_solved(), || "solution does not solve".into())?;
        ensure(oracle.distance(s) == Some(d), || "oracle lookup mismatch".into())
    };
    let small = Oracle::build(Dims::new(1, 2, 3).unwrap(), DEFAULT_ORACLE_CAP).map_err(|e| e.to_string())?;
    for (s, d) in small.states() {
        check(&small, &s, d)?;
    }
    let big = Oracle::build(Dims::new(2, 2, 3).unwrap(), DEFAULT_ORACLE_CAP).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut picks: Vec<usize> = (0..SAMPLED_2X2X3).map(|_| rng.gen_range(0..big.len())).collect();
    picks.sort_unstable();
    let mut next = 0;
    for (i, (s, d)) in big.states().enumerate() {
        while next < picks.len() && picks[next] == i {
            check(&big, &s, d)?;
            next += 1;
        }
    }
    ensure(next == SAMPLED_2X2X3, || "sampling fell short".into())?;
    Ok(format!("{} states of 1x2x3, {SAMPLED_2X2X3} of {} states of 2x2x3", small.len(), big.len()))
}

fn criterion_8() -> Check {
    let mut graphs = 0;
    for c1 in 1..=4 {
        for c2 in 1..=4 / c1 {
            let g = long_config_graph(c1, c2).map_err(|e| e.to_string())?;
            let tour = eulerian_tour(&g);
            let id = LongConfig::identity(c1, c2);
            ensure(id.apply_sequence(&tour, c1, c2) == id, || format!("{c1}x{c2}: tour is not closed"))?;
            let suffixes: BTreeSet<LongConfig> = (0..=tour.len()).map(|i| id.apply_sequence(&tour[i..], c1, c2)).collect();
            let nodes: BTreeSet<LongConfig> = g.nodes.iter().cloned().collect();
            ensure(suffixes == nodes, || format!("{c1}x{c2}: suffixes miss nodes"))?;
            graphs += 1;
        }
    }
    Ok(format!("{graphs} graphs"))
}

fn criterion_9() -> Check {
    let fs = small_formulas(3, 2);
    let mut yes = 0;
    for f in &fs {
        let inst = reduce_nae(f).map_err(|e| e.to_string())?;
        let cert = decide_ideal(&inst).map_err(|e| format!("{f:?}: {e}"))?;
        ensure(cert.is_some() == nae_brute(f).unwrap(), || format!("{f:?}: decider disagrees"))?;
        if let Some(c) = cert {
            ensure(verify_solution(&inst, &c.moves(), ideal_moves(&inst)).unwrap(), || format!("{f:?}: bad certificate"))?;
            yes += 1;
        }
    }
    Ok(format!("{} formulas, {yes} satisfiable", fs.len()))
}

fn all_orders(lines: &[Line]) -> Vec<Vec<Event>> {
    fn go(lines: &[Line], used: &mut Vec<u8>, cur: &mut Vec<Event>, out: &mut Vec<Vec<Event>>) {
        if cur.len() == 2 * lines.len() {
            out.push(cur.clone());
        }
        for i in 0..lines.len() {
            if used[i] < 2 {
                cur.push(Event { line: lines[i], second: used[i] == 1 });
                used[i] += 1;
                go(lines, used, cur, out);
                used[i] -= 1;
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(lines, &mut vec![0; lines.len()], &mut Vec::new(), &mut out);
    out
}

fn criterion_10() -> Check {
    let c = Line::Col;
    let at = |o: &[Event], e: Event| o.iter().position(|&x| x == e).unwrap();
    let cap = DEFAULT_DECIDE_CAP;
    let mut accepted = 0;
    for (x1s, x2s) in [(vec![1], vec![2]), (vec![1, 2], vec![3]), (vec![1], vec![2, 3])] {
        let inst = gadget_before(&x1s, &x2s).map_err(|e| e.to_string())?.build();
        let cert = decide_ideal(&inst).map_err(|e| e.to_string())?.ok_or("before gadget has no ideal solution")?;
        ensure(verify_solution(&inst, &cert.moves(), ideal_moves(&inst)).unwrap(), || "bad certificate".into())?;
        let lines: Vec<Line> = (1..=3).filter(|x| x1s.contains(x) || x2s.contains(x)).map(c).collect();
        let got = accepted_projections(&inst, &lines, cap).map_err(|e| e.to_string())?;
        for o in all_orders(&lines) {
            let i1 = |x| at(&o, Event::first(c(x)));
            let i2 = |x| at(&o, Event::second(c(x)));
            let side = |s: &[usize]| s.iter().map(|&x| i1(x)).max() < s.iter().map(|&x| i2(x)).min();
            let holds = side(&x1s) && side(&x2s) && x1s.iter().all(|&a| x2s.iter().all(|&b| i2(a) < i2(b)));
            ensure(got.contains(&o) == holds, || format!("{x1s:?} before {x2s:?}: order {o:?}"))?;
        }
        accepted += got.len();
    }
    let inst = gadget_between(1, 2, 3).map_err(|e| e.to_string())?.build();
    let cert = decide_ideal(&inst).map_err(|e| e.to_string())?.ok_or("between gadget has no ideal solution")?;
    ensure(verify_solution(&inst, &cert.moves(), ideal_moves(&inst)).unwrap(), || "bad certificate".into())?;
    ensure(ideal_moves(&inst) == 22, || format!("between gadget needs {} moves", ideal_moves(&inst)))?;
    let lines = [c(1), c(2), c(3)];
    let got = accepted_projections(&inst, &lines, cap).map_err(|e| e.to_string())?;
    ensure(got.len() == 4, || format!("{} accepted orders, expected 4", got.len()))?;
    for o in &got {
        let i1 = |x| at(o, Event::first(c(x)));
        let i2 = |x| at(o, Event::second(c(x)));
        let between = (i1(1) < i1(2) && i1(2) < i1(3)) || (i1(3) < i1(2) && i1(2) < i1(1));
        let firsts_first = [1, 2, 3].iter().map(|&x| i1(x)).max() < [1, 2, 3].iter().map(|&x| i2(x)).min();
        ensure(between && firsts_first && i2(2) < i2(1) && i2(2) < i2(3), || format!("accepted {o:?}"))?;
    }
    let f = |x| Event::first(c(x));
    for bad in [[(f(2), f(1)), (f(2), f(3))], [(f(1), f(2)), (f(3), f(2))]] {
        ensure(decide_ideal_with(&inst, &bad, cap).map_err(|e| e.to_string())?.is_none(), || {
            "an outer position was accepted".into()
        })?;
    }
    Ok(format!("{} accepted projections checked", accepted + got.len()))
}

fn factorial(k: u32) -> BigUint {
    (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// One less than the least `c` with `moves^c >= per^clusters`.
fn bound_by_powers(per: &BigUint, clusters: u32, moves: u64) -> u64 {
    let target = per.pow(clusters);
    let (mut c, mut p) = (0u64, BigUint::from(1u32));
    while p < target {
        p *= moves;
        c += 1;
    }
    c.saturating_sub(1)
}

fn criterion_11() -> Check {
    ensure(lower_bound_n1(4) == 0, || format!("lower_bound_n1(4) = {}", lower_bound_n1(4)))?;
    let colorings = factorial(24) / factorial(4).pow(6);
    ensure(cluster_colorings() == colorings, || "coloring count differs".into())?;
    for n in [4usize, 5, 8, 17, 18, 40] {
        let k = (n / 2 - 1) as u32;
        let want = bound_by_powers(&BigUint::from(6u32), k * k, 2 * n as u64);
        ensure(lower_bound_n1(n) == want, || format!("lower_bound_n1({n}) = {} vs {want}", lower_bound_n1(n)))?;
    }
    for n in [4usize, 6, 9] {
        let k = (n / 2 - 1) as u32;
        let want = bound_by_powers(&colorings, k * k, 6 * n as u64);
        ensure(lower_bound_n3(n) == want, || format!("lower_bound_n3({n}) = {} vs {want}", lower_bound_n3(n)))?;
    }
    let mut notes = Vec::new();
    for n in [64, 128, 256] {
        let (s, _) = scramble(flat(n), 0, 10 * n);
        let len = solve_n1(&s).map_err(|e| e.to_string())?.len() as u64;
        let lb = lower_bound_n1(n);
        ensure(lb <= len, || format!("n={n}: bound {lb} above solution {len}"))?;
        notes.push(format!("n={n}: {lb} <= {len}"));
    }
    Ok(notes.join(", "))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Check); 11] = [
        ("n x n x 1 cluster table", 10, criterion_1),
        ("n x n x 1 solvers", 300, criterion_2),
        ("3-cycle commutators", 30, criterion_3),
        ("ordered-triple orbit", 5, criterion_4),
        ("cluster move solutions", 120, criterion_5),
        ("n x n x n solver", 600, criterion_6),
        ("optimal solver exactness", 600, criterion_7),
        ("Eulerian tours", 10, criterion_8),
        ("reduction correctness", 900, criterion_9),
        ("gadget semantics", 300, criterion_10),
        ("lower bounds", 5, criterion_11),
    ];
    let only: Option<usize> = std::env::var("ACCEPTANCE_ONLY").ok().and_then(|v| v.parse().ok());
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let id = i + 1;
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        let line = match result {
            Ok(detail) if start.elapsed() <= Duration::from_secs(limit) => {
                format!("PASS ({detail}; {secs:.1}s of {limit}s)")
            }
            Ok(detail) => format!("FAIL (over time: {secs:.1}s of {limit}s; {detail})"),
            Err(e) => format!("FAIL ({e}; {secs:.1}s)"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("criterion {id:>2} {name}: {line}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
