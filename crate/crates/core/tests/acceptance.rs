//! Acceptance suite: one PASS/FAIL line per criterion, exact tolerance.
//!
//! Run with `cargo test -p cyclepack --test acceptance`. The process exits
//! non-zero if any criterion fails, unless the failure is a documented
//! out-of-range statement whose violations all match the expected shape.

use std::process::ExitCode;
use std::time::Instant;

use cyclepack::enumerate::enumerate_labeled;
use cyclepack::exchange::{grow_packing_with_vertex, rotate_along_path, ExchangeState, Growth};
use cyclepack::families;
use cyclepack::io::parse_graph6;
use cyclepack::reduce::{find_with_reduction, Mode};
use cyclepack::solvers::{find_disjoint_cycles, is_sk5, max_disjoint_cycles, max_triangle_packing_containing, triangle_packing_number};
use cyclepack::theorems::{check_theorem, kky_clauses, search_open, KkyClauses, OpenQuestion, Report, ScanOptions, TheoremPredicate};
use cyclepack::{Graph, Result, TrianglePacking, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass,
    Fail,
    /// Failed, but every violation is of the documented kind.
    KnownFail,
}

struct Criterion {
    id: &'static str,
    outcome: Outcome,
    detail: Vec<String>,
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn opts() -> ScanOptions {
    ScanOptions { jobs: jobs(), ..ScanOptions::default() }
}

fn labeled(ns: impl IntoIterator<Item = usize>) -> impl Iterator<Item = Result<Graph>> {
    ns.into_iter().flat_map(|n| enumerate_labeled(n).expect("n <= 7").map(Ok))
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, edges.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

/// Random bipartite graph: triangle-free by construction.
fn bipartite(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let edges: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, edges.into_iter().filter(|&(u, v)| side[u] != side[v] && rng.gen_bool(p))).unwrap()
}

/// Triangle-free samples beyond the exhaustive range, where the lemmas stop being vacuous.
fn bipartite_samples(seed: u64, ns: std::ops::RangeInclusive<usize>, count: usize) -> Vec<Result<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(ns.clone());
            let p = rng.gen_range(0.4..=0.9);
            Ok(bipartite(&mut rng, n, p))
        })
        .collect()
}

fn theorem(p: TheoremPredicate, k: usize, ns: std::ops::RangeInclusive<usize>, o: &ScanOptions) -> Report {
    check_theorem(p, k, labeled(ns), o).expect("scan succeeds")
}

fn line(r: &Report) -> String {
    let mut s = format!("{} ({:.1}s)", r.summary(), r.wall_time_s);
    if !r.violations.is_empty() {
        let shown: Vec<&str> = r.violations.iter().take(5).map(String::as_str).collect();
        s.push_str(&format!(" e.g. {}", shown.join(" ")));
    }
    s
}

fn all_pass(reports: &[Report]) -> Outcome {
    if reports.iter().all(Report::passed) {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn a1() -> Criterion {
    let reports = [theorem(TheoremPredicate::Main, 2, 6..=6, &opts()), theorem(TheoremPredicate::Main, 2, 7..=7, &opts())];
    Criterion { id: "A1", outcome: all_pass(&reports), detail: reports.iter().map(line).collect() }
}

fn a2() -> Criterion {
    let r = theorem(TheoremPredicate::Ch, 2, 6..=6, &opts());
    let outcome = if r.passed() && r.hits > 0 { Outcome::Pass } else { Outcome::Fail };
    Criterion { id: "A2", outcome, detail: vec![line(&r)] }
}

/// A violation of the one-triangle statement at `k = 2` is expected exactly
/// when the 2-core is too small for the base-case lemma or is `SK_5`.
fn outside_base_case(g6: &str) -> bool {
    let (core, _) = parse_graph6(g6).unwrap().two_core();
    core.order() < 6 || is_sk5(&core)
}

fn a3() -> Criterion {
    let mut reports = vec![
        theorem(TheoremPredicate::CorT1, 2, 0..=7, &opts()),
        theorem(TheoremPredicate::Cor3k, 2, 0..=7, &opts()),
        theorem(TheoremPredicate::Planar, 2, 0..=7, &opts()),
    ];
    let mut detail: Vec<String> = reports.iter().map(line).collect();
    let main_ok = all_pass(&reports);

    let forced = ScanOptions { force_k: true, ..opts() };
    let one_tri = theorem(TheoremPredicate::OneTri, 2, 0..=7, &forced);
    detail.push(format!("{} [statement requires k >= 3]", line(&one_tri)));
    let explained = one_tri.violations.iter().all(|g| outside_base_case(g));
    let sk5_seen = one_tri.violations.iter().any(|g| is_sk5(&parse_graph6(g).unwrap()));
    if !one_tri.passed() {
        detail.push(format!(
            "one-tri k=2: all {} violations have a 2-core on < 6 vertices or isomorphic to SK_5: {explained}; SK_5 among them: {sk5_seen}",
            one_tri.violations.len()
        ));
    }
    reports.push(one_tri.clone());

    let outcome = match main_ok {
        Outcome::Pass if one_tri.passed() => Outcome::Pass,
        Outcome::Pass if explained => Outcome::KnownFail,
        _ => Outcome::Fail,
    };
    Criterion { id: "A3", outcome, detail }
}

fn a4() -> Criterion {
    let reports = [
        theorem(TheoremPredicate::L31, 2, 0..=7, &opts()),
        theorem(TheoremPredicate::L32, 2, 0..=7, &opts()),
        theorem(TheoremPredicate::L33, 2, 0..=7, &opts()),
        check_theorem(TheoremPredicate::L31, 2, bipartite_samples(0xA4, 8..=14, 20_000), &opts()).unwrap(),
    ];
    Criterion { id: "A4", outcome: all_pass(&reports), detail: reports.iter().map(line).collect() }
}

fn a5() -> Criterion {
    let r = theorem(TheoremPredicate::Kky, 2, 6..=7, &opts());
    let g = families::kky_exception(3).unwrap();
    let hyp = TheoremPredicate::Kky.hypothesis(&g, 3).unwrap();
    let clauses = kky_clauses(&g, 3).unwrap();
    let exact = hyp && clauses == KkyClauses { alpha: false, exception: true, wheel: false };
    let outcome = if r.passed() && exact { Outcome::Pass } else { Outcome::Fail };
    let detail = vec![line(&r), format!("2K_3 v K3-bar at k=3: hypothesis={hyp} clauses={clauses:?}")];
    Criterion { id: "A5", outcome, detail }
}

fn a6() -> Criterion {
    let reports = [
        theorem(TheoremPredicate::TfLemma, 1, 0..=7, &opts()),
        theorem(TheoremPredicate::TfLemma, 2, 0..=7, &opts()),
        check_theorem(TheoremPredicate::TfLemma, 2, bipartite_samples(0xA6, 10..=16, 20_000), &opts()).unwrap(),
    ];
    Criterion { id: "A6", outcome: all_pass(&reports), detail: reports.iter().map(line).collect() }
}

fn a7() -> Criterion {
    let started = Instant::now();
    let mut detail = Vec::new();
    let mut ok = true;
    let mut check = |name: String, cond: bool| {
        if !cond {
            ok = false;
            detail.push(format!("FAILED {name}"));
        } else {
            detail.push(format!("ok {name}"));
        }
    };
    for k in [2usize, 3] {
        let k_i = k as i64;
        let t_of = |g: &Graph| triangle_packing_number(g).unwrap() as i64;
        let cycles = |g: &Graph| max_disjoint_cycles(g).unwrap().len();

        let sk = families::sk(3 * k - 1).unwrap();
        check(
            format!("SK_{} k={k}: h-l = 2k+t-1 and < k cycles", 3 * k - 1),
            sk.degree_classes(k).surplus() == 2 * k_i + t_of(&sk) - 1 && cycles(&sk) < k,
        );

        let kc = families::complete(3 * k - 1);
        check(
            format!("K_{} k={k}: h-l = 2k+t and < k cycles", 3 * k - 1),
            kc.degree_classes(k).surplus() == 2 * k_i + t_of(&kc) && cycles(&kc) < k,
        );

        let n = (3 * k + 1) | 1;
        let de = families::de_matching(n, k).unwrap();
        check(
            format!("matching construction n={n} k={k}: h-l = 2k-1 and <= k-1 cycles"),
            de.degree_classes(k).surplus() == 2 * k_i - 1 && cycles(&de) < k,
        );

        let r8 = families::remark8(k).unwrap();
        check(
            format!("4k-vertex construction k={k}: h-l = 2k, |G| = 4k, < k cycles"),
            r8.degree_classes(k).surplus() == 2 * k_i && r8.order() == 4 * k && cycles(&r8) < k,
        );

        for n in [3 * k, 3 * k + 1] {
            let g = families::gnk(n, k).unwrap();
            check(format!("G_({n},{k}): exactly k-1 disjoint cycles"), cycles(&g) == k - 1);
        }
    }
    detail.push(format!("({:.1}s)", started.elapsed().as_secs_f64()));
    Criterion { id: "A7", outcome: if ok { Outcome::Pass } else { Outcome::Fail }, detail }
}

fn a8() -> Criterion {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA8);
    let ps = [0.15, 0.25, 0.4];
    let mut violations = Vec::new();
    let (mut positive, mut lifted) = (0, 0);
    for i in 0..1000 {
        let g = gnp(&mut rng, 12, ps[i % 3]);
        for k in [2, 3] {
            let direct = find_disjoint_cycles(&g, k).unwrap();
            let reduced = find_with_reduction(&g, k, Mode::Exact).unwrap();
            if direct.is_some() != reduced.is_some() {
                violations.push(format!("graph {i} k={k}: direct={} reduced={}", direct.is_some(), reduced.is_some()));
            }
            for p in direct.iter().chain(reduced.iter()) {
                positive += 1;
                if !p.verify(&g, k) {
                    violations.push(format!("graph {i} k={k}: certificate fails to verify"));
                }
            }
            lifted += reduced.is_some() as usize;
        }
    }
    let mut detail = vec![format!(
        "2000 instances, {positive} certificates verified ({lifted} lifted), violations={} ({:.1}s)",
        violations.len(),
        started.elapsed().as_secs_f64()
    )];
    detail.extend(violations.iter().take(5).cloned());
    Criterion { id: "A8", outcome: if violations.is_empty() { Outcome::Pass } else { Outcome::Fail }, detail }
}

fn b_brute(g: &Graph, p: &TrianglePacking, t0: usize) -> Vec<Vertex> {
    let covered = p.vertices();
    (0..g.order()).filter(|v| !covered.contains(v) && p.triangles[t0].iter().all(|&u| g.has_edge(*v, u))).collect()
}

/// Checks every rotation available from `s`; returns the number checked.
fn check_rotations(g: &Graph, s: &ExchangeState, violations: &mut Vec<String>) -> usize {
    let covered = s.packing.vertices();
    let mut checked = 0;
    for v in (0..g.order()).filter(|v| !covered.contains(v) && !s.b.contains(v)) {
        for &t in &s.reach {
            if !s.packing.triangles[t].iter().all(|&u| g.has_edge(v, u)) {
                continue;
            }
            let path = s.digraph.path_to(t, s.t0).unwrap();
            checked += 1;
            let r = match rotate_along_path(g, &s.packing, &path, v) {
                Ok(r) => r,
                Err(e) => {
                    violations.push(format!("rotation refused: {e}"));
                    continue;
                }
            };
            let last = path[path.len() - 2];
            let mut b_grown = s.b.clone();
            b_grown.push(r.released);
            b_grown.sort_unstable();
            let ok = r.packing.verify(g)
                && r.packing.len() == s.packing.len()
                && r.packing.triangles[s.t0] == s.packing.triangles[s.t0]
                && s.packing.triangles[last].contains(&r.released)
                && b_brute(g, &r.packing, s.t0) == b_grown;
            if !ok {
                violations.push(format!("rotation postcondition failed on path {path:?} with v={v}"));
            }
        }
    }
    checked
}

/// A random maximal packing of disjoint triangles, one of which contains `x`.
fn greedy_packing(rng: &mut ChaCha8Rng, g: &Graph, x: Vertex) -> TrianglePacking {
    let mut tris = g.triangles();
    for i in (1..tris.len()).rev() {
        tris.swap(i, rng.gen_range(0..=i));
    }
    let first = *tris.iter().find(|t| t.contains(&x)).expect("x lies in a triangle");
    let mut chosen = vec![first];
    for t in tris {
        if chosen.iter().all(|c| t.iter().all(|v| !c.contains(v))) {
            chosen.push(t);
        }
    }
    TrianglePacking::new(chosen)
}

/// Runs rotations and re-roots to a fixpoint, checking every available
/// rotation along the way.
fn exhaust(g: &Graph, mut state: ExchangeState, violations: &mut Vec<String>) -> (ExchangeState, usize) {
    let mut checked = 0;
    loop {
        checked += check_rotations(g, &state, violations);
        if let Some((path, v)) = state.rotation_opportunity() {
            state = state.rotate(&path, v).unwrap().0;
        } else if let Some(next) = state.reroot_opportunity() {
            state = next;
        } else {
            return (state, checked);
        }
    }
}

fn a9() -> Criterion {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA9);
    let mut violations = Vec::new();
    let (mut applied, mut rotations, mut attempts) = (0, 0, 0);
    while applied < 500 {
        attempts += 1;
        let n = rng.gen_range(6..=15);
        let p = rng.gen_range(0.25..0.75);
        let g = gnp(&mut rng, n, p);
        let x = rng.gen_range(0..n);
        let Growth::Grown(grown) = grow_packing_with_vertex(&g, x).unwrap() else { continue };
        applied += 1;

        // a non-maximum start offers many more rotations than a maximum one
        let greedy = ExchangeState::new(&g, greedy_packing(&mut rng, &g, x), x).unwrap();
        rotations += exhaust(&g, greedy, &mut violations).1;

        let start = ExchangeState::new(&g, max_triangle_packing_containing(&g, x).unwrap().unwrap(), x).unwrap();
        let (state, checked) = exhaust(&g, start, &mut violations);
        rotations += checked;
        if state != *grown {
            violations.push(format!("attempt {attempts}: replayed maximization differs from grow"));
        }
        if grown.clone().maximize_b() != *grown || grown.rotation_opportunity().is_some() || !grown.is_consistent() {
            violations.push(format!("attempt {attempts}: B-maximization not idempotent"));
        }
    }
    let mut detail = vec![format!(
        "{applied} graphs, {rotations} rotations checked, violations={} ({:.1}s)",
        violations.len(),
        started.elapsed().as_secs_f64()
    )];
    detail.extend(violations.iter().take(5).cloned());
    let outcome = if violations.is_empty() && rotations > 0 { Outcome::Pass } else { Outcome::Fail };
    Criterion { id: "A9", outcome, detail }
}

fn a10() -> Criterion {
    let o = opts();
    let r1_exhaustive = search_open(OpenQuestion::Remark1, 2, labeled(7..=7), &o).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA10);
    let random = (0..100_000).map(|_| {
        let n = rng.gen_range(9..=12);
        let p = rng.gen_range(0.2..=0.8);
        Ok(gnp(&mut rng, n, p))
    });
    let r1_random = search_open(OpenQuestion::Remark1, 2, random.collect::<Vec<_>>(), &o).unwrap();
    let r2 = search_open(OpenQuestion::Remark2, 2, labeled(0..=7), &o).unwrap();
    let reports = [r1_exhaustive, r1_random, r2];
    Criterion { id: "A10", outcome: all_pass(&reports), detail: reports.iter().map(line).collect() }
}

fn main() -> ExitCode {
    let runs: [fn() -> Criterion; 10] = [a1, a2, a3, a4, a5, a6, a7, a8, a9, a10];
    let mut failed = false;
    for run in runs {
        let c = run();
        let verdict = match c.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => {
                failed = true;
                "FAIL"
            }
            Outcome::KnownFail => "FAIL (expected: statement false at this k)",
        };
        println!("{} {verdict}", c.id);
        for d in &c.detail {
            println!("    {d}");
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
