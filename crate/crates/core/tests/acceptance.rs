//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use quadham::alpha;
use quadham::e4::{classify, TriColouring};
use quadham::oracle::{
    check_invariant_i, dual_bound, enumerate_cover_pairs, enumerate_hamilton_cycles, hamilton_lower_bound,
    required_count, verify_theorem11, verify_theorem12, BoundReport, HAMILTON_CAP,
};
use quadham::planar::vertex_connectivity_at_least;
use quadham::stein::{cover_to_dual_cycle, cycle_to_cover, DualCycle};
use quadham::tree_pair::{
    build_auxiliary_j, extend_cover, greedy_chromatic_independent_set, seed_pair_thm13, seed_pair_thm14,
    thm13_choice_count, thm13_choice_vector, ClosedPair, TreePairError,
};
use quadham::{dual_graph, PlanarGraph};

struct Outcome {
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn fuzz_corpus() -> Vec<(u64, usize)> {
    (0..100u64).map(|seed| (seed, 1 + (seed % 17) as usize)).collect()
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let (g, c) = alpha::octahedron();
    let (p, _) = dual_graph(&g).unwrap();
    let j = build_auxiliary_j(&g, &c).unwrap();
    let k = greedy_chromatic_independent_set(&j).unwrap();
    if j.vertex_count() != 4 || j.edge_count() != 6 {
        problems.push(format!("J has {} vertices, {} edges", j.vertex_count(), j.edge_count()));
    }
    if k.members.len() != 1 {
        problems.push(format!("|K| = {}", k.members.len()));
    }
    let report = verify_theorem11(&p, HAMILTON_CAP).unwrap();
    if report.choice_vectors != 3 || report.constructive != 3 {
        problems.push(format!(
            "{} covers, {} distinct cycles",
            report.choice_vectors, report.constructive
        ));
    }
    let bound = hamilton_lower_bound(&p);
    if (bound - 2.2795).abs() > 1e-4 || required_count(bound) != 3 {
        problems.push(format!("bound {bound}"));
    }
    let cycles = enumerate_hamilton_cycles(&p, HAMILTON_CAP).unwrap().len();
    let tree_pairs = enumerate_cover_pairs(&g, false).unwrap().tree_pairs;
    if cycles != 6 || tree_pairs != 6 {
        problems.push(format!("oracle {cycles} cycles, {tree_pairs} tree pairs"));
    }
    if !report.pass {
        problems.push("report failed".into());
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        problems.push(format!("took {elapsed:?}"));
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!("J=K4, |K|=1, 3 covers, 3 distinct cycles >= ceil({bound:.4})=3, oracle 6 cycles = 6 tree pairs")
        } else {
            problems.join("; ")
        },
        elapsed,
    }
}

struct FuzzRun {
    outcome: Outcome,
    reports: Vec<(u64, usize, BoundReport)>,
}

fn criterion2() -> FuzzRun {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut reports = Vec::new();
    let mut oracle_runs = 0;
    for (seed, ops) in fuzz_corpus() {
        let tag = format!("seed {seed} ops {ops}");
        let (g, c, _) = alpha::random_instance(ops, seed);
        if !classify(&g).is_e4 {
            problems.push(format!("{tag}: not E(4)"));
        }
        if !vertex_connectivity_at_least(&g, 4) {
            problems.push(format!("{tag}: not 4-connected"));
        }
        if !check_invariant_i(&g, &c) {
            problems.push(format!("{tag}: |B u W| <= |G|/2"));
        }
        let delta = g.max_degree();
        match build_auxiliary_j(&g, &c).and_then(|j| greedy_chromatic_independent_set(&j)) {
            Ok(k) if 4 * k.colours_used <= delta * delta => {}
            Ok(k) => problems.push(format!("{tag}: {} colours > {delta}^2/4", k.colours_used)),
            Err(e) => problems.push(format!("{tag}: {e}")),
        }
        let (p, _) = dual_graph(&g).unwrap();
        match verify_theorem11(&p, HAMILTON_CAP) {
            Ok(r) => {
                if !r.pass {
                    problems.push(format!("{tag}: {} cycles < {}", r.constructive, r.required));
                }
                if (dual_bound(&g) - r.bound).abs() > 1e-9 {
                    problems.push(format!("{tag}: bound differs between G and P"));
                }
                oracle_runs += usize::from(r.oracle.is_some());
                reports.push((seed, ops, r));
            }
            Err(e) => problems.push(format!("{tag}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        problems.push(format!("took {elapsed:?}"));
    }
    let worst = reports
        .iter()
        .map(|(_, _, r)| r.constructive as f64 / r.required.max(1) as f64)
        .fold(f64::INFINITY, f64::min);
    FuzzRun {
        outcome: Outcome {
            pass: problems.is_empty(),
            detail: if problems.is_empty() {
                format!(
                    "100 instances, |G| 8..40: E(4), 4-connected, fact (i), greedy bound, bound met \
                     (min constructive/required = {worst:.1}); oracle containment on {oracle_runs}"
                )
            } else {
                format!("{} problems, first: {}", problems.len(), problems[0])
            },
            elapsed,
        },
        reports,
    }
}

fn criterion3() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut instances: Vec<(String, PlanarGraph)> = vec![("octahedron".into(), alpha::octahedron().0)];
    for seed in 0..40u64 {
        let ops = 1 + (seed % 3) as usize;
        instances.push((format!("seed {seed} ops {ops}"), alpha::random_instance(ops, seed).0));
    }
    let mut cycles_checked = 0;
    for (tag, g) in &instances {
        let (p, corr) = dual_graph(g).unwrap();
        let all = enumerate_hamilton_cycles(&p, HAMILTON_CAP).unwrap();
        let tree_pairs = enumerate_cover_pairs(g, false).unwrap().tree_pairs;
        if tree_pairs != all.len() {
            problems.push(format!("{tag}: {tree_pairs} tree pairs vs {} cycles", all.len()));
        }
        let report = verify_theorem11(&p, HAMILTON_CAP).unwrap();
        if let Some(h) = report.cycles.iter().find(|h| all.binary_search(h).is_err()) {
            problems.push(format!("{tag}: constructive cycle missing from oracle set:\n{h}"));
        }
        for h in &all {
            let back = cycle_to_cover(g, &p, h, &corr).and_then(|cover| cover_to_dual_cycle(g, &p, &cover, &corr));
            match back {
                Ok(DualCycle::Hamilton(h2)) if &h2 == h => {}
                _ => problems.push(format!("{tag}: round trip failed")),
            }
            cycles_checked += 1;
        }
    }
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{} instances with |G| <= 12: containment, tree pairs = cycles, {cycles_checked} round trips",
                instances.len()
            )
        } else {
            format!("{} problems, first: {}", problems.len(), problems[0])
        },
        elapsed: start.elapsed(),
    }
}

fn check_extension(g: &PlanarGraph, c: &TriColouring, pair: &ClosedPair) -> Result<(), String> {
    let cover = extend_cover(g, c, pair).map_err(|e| match e {
        TreePairError::ExtensionFailure { .. } => format!("ExtensionFailure: {e}"),
        other => other.to_string(),
    })?;
    let n = g.vertex_count();
    let mut seen = vec![0u8; n];
    for &v in cover.x.iter().chain(&cover.y) {
        seen[v] += 1;
    }
    if seen.iter().any(|&k| k != 1) {
        return Err("not an exact partition".into());
    }
    let xm = cover.x_mask(n);
    let ym: Vec<bool> = xm.iter().map(|b| !b).collect();
    if !g.induces_forest(&xm) || !g.induces_forest(&ym) {
        return Err("a side has a cycle".into());
    }
    if pair.c.iter().any(|&v| !xm[v]) || pair.d.iter().any(|&v| !ym[v]) {
        return Err("seed not contained".into());
    }
    Ok(())
}

fn criterion4() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut pairs = 0usize;
    for (seed, ops) in fuzz_corpus() {
        let (g, c, _) = alpha::random_instance(ops, seed);
        let k = greedy_chromatic_independent_set(&build_auxiliary_j(&g, &c).unwrap())
            .unwrap()
            .members;
        let mut seeds = vec![ClosedPair::default()];
        for i in 0..thm13_choice_count(&g, &c, &k) {
            seeds.push(seed_pair_thm13(&g, &c, &k, &thm13_choice_vector(&g, &c, &k, i)).unwrap());
        }
        for v in g.vertices() {
            for nv in g.neighbors(v) {
                if let Ok(pair) = seed_pair_thm14(&g, &c, &[(v, nv)]) {
                    seeds.push(pair);
                }
            }
        }
        for pair in &seeds {
            pairs += 1;
            if let Err(e) = check_extension(&g, &c, pair) {
                problems.push(format!("seed {seed} ops {ops} pair {pair:?}: {e}"));
            }
        }
    }
    let failures = problems.iter().filter(|p| p.contains("ExtensionFailure")).count();
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{pairs} closed pairs extended: exact partitions, acyclic sides, seeds contained, 0 ExtensionFailure"
            )
        } else {
            format!(
                "{} problems ({failures} ExtensionFailure), first: {}",
                problems.len(),
                problems[0]
            )
        },
        elapsed: start.elapsed(),
    }
}

/// First pair of degree-4 vertices at distance at least 5, preferring colour
/// combinations not yet covered.
fn far_pair(g: &PlanarGraph, c: &TriColouring, seen: &BTreeMap<(char, char), usize>) -> Option<(usize, usize)> {
    let quads: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 4).collect();
    let mut candidates = Vec::new();
    for (i, &a) in quads.iter().enumerate() {
        let dist = g.distances_from(a);
        for &b in &quads[i + 1..] {
            if dist[b] >= 5 {
                candidates.push((a, b));
            }
        }
    }
    let combo = |&(a, b): &(usize, usize)| {
        let (x, y) = (c.colour(a).letter(), c.colour(b).letter());
        (x.min(y), x.max(y))
    };
    candidates
        .iter()
        .min_by_key(|p| seen.get(&combo(p)).copied().unwrap_or(0))
        .copied()
}

fn criterion5() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut seen: BTreeMap<(char, char), usize> = BTreeMap::new();
    let mut target_colours: BTreeMap<char, usize> = BTreeMap::new();
    let (mut instances, mut runs) = (0, 0);
    let mut seed = 0u64;
    while instances < 12 && seed < 500 {
        let ops = 15 + (seed % 11) as usize;
        let (g, c, _) = alpha::random_instance(ops, seed);
        seed += 1;
        let Some((a, b)) = far_pair(&g, &c, &seen) else {
            continue;
        };
        let pc = (c.colour(a).letter(), c.colour(b).letter());
        *seen.entry((pc.0.min(pc.1), pc.0.max(pc.1))).or_default() += 1;
        instances += 1;
        let (p, corr_gp) = dual_graph(&g).unwrap();
        let corr_pg = corr_gp.flipped(&g, &p);
        let (fa, fb) = (corr_pg.primal_face(a), corr_pg.primal_face(b));
        for na in g.neighbors(a) {
            for nb in g.neighbors(b) {
                let ea = corr_gp.dual_edge(g.edge_id(a, na).unwrap());
                let eb = corr_gp.dual_edge(g.edge_id(b, nb).unwrap());
                runs += 1;
                match verify_theorem12(&p, &[fa, fb], &[ea, eb]) {
                    Ok(r) if r.pass => {
                        for col in r.target_colours {
                            *target_colours.entry(col.letter()).or_default() += 1;
                        }
                    }
                    Ok(r) => problems.push(format!("seed {} ops {ops} faces {fa},{fb}:\n{r}", seed - 1)),
                    Err(e) => problems.push(format!("seed {} ops {ops}: {e}", seed - 1)),
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if instances < 10 {
        problems.push(format!("only {instances} instances with two far quadrilateral faces"));
    }
    if elapsed > Duration::from_secs(120) {
        problems.push(format!("took {elapsed:?}"));
    }
    let colours: Vec<String> = target_colours.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            format!(
                "{instances} instances, {runs} chosen-edge combinations: Hamilton cycle keeps all other \
                 boundary edges, placement as prescribed (target colours {})",
                colours.join(" ")
            )
        } else {
            format!("{} problems, first: {}", problems.len(), problems[0])
        },
        elapsed,
    }
}

fn criterion6(reports: &[(u64, usize, BoundReport)]) -> Outcome {
    let start = Instant::now();
    let vectors: usize = reports.iter().map(|(_, _, r)| r.choice_vectors).sum();
    let collisions: Vec<String> = reports
        .iter()
        .flat_map(|(seed, ops, r)| {
            r.collisions
                .iter()
                .map(move |(a, b)| format!("seed {seed} ops {ops}: {a} | {b}"))
        })
        .collect();
    let split: usize = reports.iter().map(|(_, _, r)| r.non_hamiltonian).sum();
    let pass = collisions.is_empty() && split == 0 && reports.len() == 100;
    Outcome {
        pass,
        detail: if pass {
            format!(
                "{vectors} choice vectors over {} instances map to pairwise distinct Hamilton cycles",
                reports.len()
            )
        } else {
            format!(
                "{} collisions, {split} non-Hamiltonian cuts over {} reports; first collision: {}",
                collisions.len(),
                reports.len(),
                collisions.first().map_or("-", String::as_str)
            )
        },
        elapsed: start.elapsed(),
    }
}

fn main() -> ExitCode {
    let fuzz = criterion2();
    let outcomes = [
        ("1 octahedron/cube walk-through", criterion1()),
        ("2 generator fuzz", fuzz.outcome),
        ("3 oracle equivalence", criterion3()),
        ("4 extension properties", criterion4()),
        ("5 prescribed face edges", criterion5()),
        ("6 distinctness", criterion6(&fuzz.reports)),
    ];
    let mut all = true;
    for (name, o) in &outcomes {
        all &= o.pass;
        println!(
            "criterion {name}: {} ({:.2}s) {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.elapsed.as_secs_f64(),
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
