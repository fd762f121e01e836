//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use c4free::coloring::{
    color_blowup, exact_chromatic_with_limit, exact_clique_number, verify_coloring,
};
use c4free::decompose::{find_clique_cutset, find_homogeneous_clique, BlowupCertificate};
use c4free::generate::{connected_graphs, random_blowup, random_graph};
use c4free::graph::named;
use c4free::harness::{coloring_suite, run_sweep, Check, Source, SweepConfig, SweepReport};
use c4free::patterns::find_induced;
use c4free::{Graph, OracleBudget, Pattern, Variant, VertexSet};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

fn tally_line(r: &SweepReport, names: &[&str]) -> String {
    names
        .iter()
        .map(|n| {
            let t = r.tallies.get(*n).cloned().unwrap_or_default();
            format!(
                "{n}: {} run, {} non-vacuous, {} passed",
                t.run, t.hypothesis_held, t.passed
            )
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn failures_of(r: &SweepReport, names: &[&str]) -> usize {
    r.failures
        .iter()
        .filter(|f| names.contains(&f.check.as_str()))
        .count()
}

/// Criteria 1 and 2 share one sweep over all connected graphs on 4..=9
/// vertices.
fn structural_sweep() -> SweepReport {
    let mut cfg = SweepConfig::new(
        Source::Generated { min_n: 4, max_n: 9 },
        vec![
            Check::HammerStructure,
            Check::BullStructure,
            Check::CentredHole,
            Check::HomogeneousClique,
            Check::ConsecutiveNeighbours,
        ],
    );
    cfg.connected_only = true;
    run_sweep(&cfg, None).expect("sweep runs")
}

fn criterion_1(r: &SweepReport) -> Outcome {
    let names = ["structure-hammer", "structure-bull"];
    let counts: Vec<usize> = (4..=9).map(|n| connected_graphs(n).len()).collect();
    let expected_counts = [6, 21, 112, 853, 11117, 261080];
    let fails = failures_of(r, &names);
    Outcome::new(
        fails == 0
            && counts == expected_counts
            && r.checked == expected_counts.iter().sum::<usize>(),
        format!(
            "{} graphs, {fails} failures; {}",
            r.checked,
            tally_line(r, &names)
        ),
    )
}

fn criterion_2(r: &SweepReport) -> Outcome {
    let names = [
        "centred-hole-bull",
        "centred-hole-hammer",
        "homogeneous-clique",
        "consecutive-neighbours",
    ];
    let fails = failures_of(r, &names);
    let all_ran = names
        .iter()
        .all(|n| r.tallies.get(*n).is_some_and(|t| t.run == r.checked));
    Outcome::new(
        fails == 0 && all_ran,
        format!("{fails} failures; {}", tally_line(r, &names)),
    )
}

fn criterion_3() -> Outcome {
    let budget = OracleBudget::new(3).unwrap().with_exact_limit(32);
    let mut cases: Vec<(String, Graph, BlowupCertificate)> = Vec::new();
    for t in 1..=3 {
        for (name, base) in [("C5", named::cycle(5)), ("Petersen", named::petersen())] {
            let (g, cert) = BlowupCertificate::blow_up(&base, &vec![t; base.n()]).unwrap();
            cases.push((format!("{t}-blowup of {name}"), g, cert));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..100 {
        let base = if i % 2 == 0 {
            named::cycle(5)
        } else {
            named::petersen()
        };
        let (g, cert) = random_blowup(&base, 1, 3, &mut rng).unwrap();
        cases.push((format!("random blowup #{i}"), g, cert));
    }
    let mut bad = Vec::new();
    for (name, g, cert) in &cases {
        let bound = (3 * exact_clique_number(g)).div_ceil(2);
        match color_blowup(g, cert, budget) {
            Ok(c) if verify_coloring(g, &c).unwrap() && c.used <= bound => {}
            other => bad.push(format!("{name}: {other:?}")),
        }
    }
    let mut chis = Vec::new();
    for t in 1..=3usize {
        let (g, _) = BlowupCertificate::blow_up(&named::cycle(5), &[t; 5]).unwrap();
        let (chi, _) = exact_chromatic_with_limit(&g, 16).unwrap();
        if chi != (5 * t).div_ceil(2) {
            bad.push(format!("chi of {t}-blowup of C5 is {chi}"));
        }
        chis.push(chi);
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} blowups coloured, chi(C5 t-blowups) = {chis:?}; {}",
            cases.len(),
            bad.join(", ")
        ),
    )
}

type BoundFn<'a> = &'a dyn Fn(usize) -> usize;

fn criterion_4() -> Outcome {
    // (suite, claimed bound as a function of omega)
    let ceil_three_halves = |w: usize| (3 * w).div_ceil(2);
    let plus_one = |w: usize| w + 1;
    let double = |w: usize| 2 * w;
    let suites: Vec<(&str, Vec<BoundFn>)> = vec![
        ("P6-hammer", vec![&plus_one]),
        ("P6-bull", vec![&ceil_three_halves]),
        ("P8-hammer", vec![&plus_one]),
        ("P8-bull", vec![&ceil_three_halves]),
        ("T1-hammer", vec![&plus_one]),
        ("T1-bull", vec![&ceil_three_halves]),
        ("T2-hammer", vec![&plus_one]),
        ("T2-bull", vec![&ceil_three_halves]),
        ("T3-hammer", vec![&plus_one]),
        ("T3-bull", vec![&ceil_three_halves]),
        ("tree-P4-hammer", vec![&plus_one]),
        ("tree-P4-bull", vec![&double, &ceil_three_halves]),
    ];
    let mut bad = Vec::new();
    let mut total = 0;
    for (name, bounds) in &suites {
        let mut lines = Vec::new();
        let r = coloring_suite(name, 8, 0, Some(&mut lines)).unwrap();
        if !r.success() || r.budget_rejections > 0 || r.max_colors_over_bound > 0 {
            bad.push(format!(
                "{name}: {} failures, {} rejections",
                r.failures.len(),
                r.budget_rejections
            ));
        }
        for line in String::from_utf8(lines).unwrap().lines() {
            let e: Value = serde_json::from_str(line).unwrap();
            let w = &e["witness"];
            let g = Graph::from_graph6(e["g6"].as_str().unwrap()).unwrap();
            let omega = exact_clique_number(&g);
            assert_eq!(w["omega"].as_u64(), Some(omega as u64));
            let colors: Vec<usize> =
                serde_json::from_value(w["coloring"]["colors"].clone()).unwrap();
            let proper = g.edges().all(|(u, v)| colors[u] != colors[v]);
            let mut distinct = colors.clone();
            distinct.sort_unstable();
            distinct.dedup();
            if !proper || bounds.iter().any(|b| distinct.len() > b(omega)) {
                bad.push(format!("{name}: {}", e["g6"]));
            }
            total += 1;
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} suites, {total} colourings checked; {}",
            suites.len(),
            bad.join(", ")
        ),
    )
}

fn brute_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    fn go(g: &Graph, h: &Graph, tuple: &mut Vec<usize>) -> bool {
        if tuple.len() == h.n() {
            return (0..h.n())
                .all(|i| (0..i).all(|j| h.has_edge(i, j) == g.has_edge(tuple[i], tuple[j])));
        }
        for v in 0..g.n() {
            if !tuple.contains(&v) {
                tuple.push(v);
                if go(g, h, tuple) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }
    let mut tuple = Vec::new();
    go(g, h, &mut tuple).then_some(tuple)
}

fn subsets_by_size(n: usize) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = (0u64..1 << n).map(VertexSet::from_bits).collect();
    all.sort_by_key(|s| (s.len(), s.to_vec()));
    all
}

fn brute_cutset(g: &Graph) -> Option<VertexSet> {
    let all = g.vertices();
    subsets_by_size(g.n()).into_iter().find(|&q| {
        let rest = all - q;
        !q.is_empty()
            && g.is_clique(q)
            && rest
                .first()
                .is_some_and(|v| g.component_within(v, rest) != rest)
    })
}

fn is_homogeneous_clique(g: &Graph, s: VertexSet) -> bool {
    s.len() >= 2
        && s.len() < g.n()
        && g.is_clique(s)
        && (g.vertices() - s).iter().all(|v| {
            let hit = g.adj(v) & s;
            hit.is_empty() || hit == s
        })
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut graphs: Vec<Graph> = (0..1000)
        .map(|i| random_graph(1 + i % 9, [0.3, 0.5, 0.7][i % 3], &mut rng))
        .collect();
    for n in 1..=7 {
        graphs.extend(connected_graphs(n).iter().cloned());
    }
    let patterns = [
        Pattern::Cycle(4),
        Pattern::Path(4),
        Pattern::Complete(3),
        Pattern::Bull,
        Pattern::Hammer,
        Pattern::Path(5),
    ];
    let mut bad = Vec::new();
    for g in &graphs {
        for p in patterns {
            if find_induced(g, p) != brute_induced(g, &p.realization()) {
                bad.push(format!("find_induced {p} on {}", g.to_graph6()));
            }
        }
        if g.is_connected() && g.n() > 0 {
            let got = find_clique_cutset(g).unwrap().map(|c| c.clique);
            let want = if g.is_complete() {
                None
            } else {
                brute_cutset(g)
            };
            if got != want {
                bad.push(format!("cutset on {}: {got:?} vs {want:?}", g.to_graph6()));
            }
        } else if g.n() > 0 && find_clique_cutset(g).is_ok() {
            bad.push(format!("cutset accepted disconnected {}", g.to_graph6()));
        }
        if g.n() >= 3 {
            let got = find_homogeneous_clique(g).unwrap();
            let exists =
                (0u64..1 << g.n()).any(|m| is_homogeneous_clique(g, VertexSet::from_bits(m)));
            if got.is_some() != exists || got.is_some_and(|s| !is_homogeneous_clique(g, s)) {
                bad.push(format!("homogeneous clique on {}", g.to_graph6()));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{} graphs; {}", graphs.len(), bad.join(", ")),
    )
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut stream = Vec::new();
    for n in 0..=9 {
        for g in connected_graphs(n).iter() {
            let code = g.to_graph6();
            match Graph::from_graph6(&code) {
                Ok(back) if back == *g && back.to_graph6() == code => {}
                _ => bad.push(code.clone()),
            }
            if n <= 7 {
                stream.push(code);
            }
        }
    }
    // Malformed lines and a too-small colour budget give the failure list
    // something to hold.
    stream.insert(100, "D~".to_string());
    stream.push("not graph6".to_string());
    let trials: Vec<SweepConfig> = [1, 0, 1]
        .into_iter()
        .map(|jobs| SweepConfig {
            source: Source::Lines(stream.clone()),
            filters: vec![],
            checks: vec![
                Check::BullStructure,
                Check::ConsecutiveNeighbours,
                Check::Color(Variant::Hammer),
            ],
            k: Some(2),
            connected_only: true,
            jobs,
        })
        .collect();
    let runs: Vec<(SweepReport, Vec<u8>)> = trials
        .iter()
        .map(|cfg| {
            let mut out = Vec::new();
            let r = run_sweep(cfg, Some(&mut out)).unwrap();
            (r, out)
        })
        .collect();
    let identical = runs.windows(2).all(|w| w[0] == w[1]);
    let failures = serde_json::to_string(&runs[0].0.failures).unwrap();
    Outcome::new(
        bad.is_empty() && identical && runs[0].0.malformed == 2,
        format!(
            "round-trip mismatches: {}; {} failure records identical across reruns and job counts: {identical} ({} bytes)",
            bad.len(),
            runs[0].0.failures.len(),
            failures.len()
        ),
    )
}

type Criterion<'a> = Box<dyn FnOnce() -> Outcome + 'a>;

fn main() -> ExitCode {
    let start = Instant::now();
    let sweep = structural_sweep();
    let sweep_time = start.elapsed();
    let criteria: Vec<(&str, Criterion)> = vec![
        (
            "1 prime-graph structure, connected n=4..9",
            Box::new(|| criterion_1(&sweep)),
        ),
        (
            "2 hole and clique checks, connected n=4..9",
            Box::new(|| criterion_2(&sweep)),
        ),
        ("3 blowup colouring bound", Box::new(criterion_3)),
        ("4 colouring suites, n<=8", Box::new(criterion_4)),
        ("5 oracle equivalence", Box::new(criterion_5)),
        (
            "6 graph6 round-trip and sweep determinism",
            Box::new(criterion_6),
        ),
    ];
    println!("structural sweep over n=4..9 took {sweep_time:.1?}");
    let mut all_ok = true;
    for (name, run) in criteria {
        let t = Instant::now();
        let o = run();
        all_ok &= o.ok;
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {name} ({:.1?}): {}",
            t.elapsed(),
            o.detail
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
