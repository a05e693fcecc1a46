//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Every limit below is exact unless it names a duration.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pfactor::conditions::check_odd_lemma;
use pfactor::experiment::{run_validation, Family, Mode, TrialConfig};
use pfactor::extremal::{apex_clique_count, build_apex_extremal, build_bipartite_extremal};
use pfactor::generate::{connected_catalog, generate, labeled_graphs, petersen, Model, Probability};
use pfactor::matching::{brute_force_matching, maximum_matching};
use pfactor::parity::{brute_force_factor, certificate_search, eta, ParitySpec};
use pfactor::{find_parity_factor, Graph, VertexSet};

const SPEC_GRID: [(usize, usize); 6] = [(1, 1), (1, 3), (1, 5), (2, 2), (2, 4), (3, 3)];
const SHARPNESS_GRID: [(usize, usize); 5] = [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3)];
const ORACLE_MAX_N: usize = 6;
const PARITY_MAX_N: usize = 5;
const BRUTE_MAX_EDGES: usize = 15;
const CERT_MAX_N: usize = 13;
const MIN_PASSING_TRIALS: usize = 10_000;
const TRIALS_PER_PAIR: usize = 8_000;
const FINDER_LIMIT: Duration = Duration::from_secs(1);
const TIMED_INSTANCES: usize = 300;
const TIMED_N: usize = 56;
const BIPARTITE_MAX_N: usize = 20;
const APEX_MAX_N: usize = 25;
const RANDOM_MATCHING_GRAPHS: usize = 1_000;
const RANDOM_MATCHING_MAX_N: usize = 8;
const MONOTONE_PAIRS: usize = 1_000;
const SEED: u64 = 0x5eed_2024;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: String) -> Verdict {
    Verdict { ok, detail }
}

fn uniform(graph: &Graph, a: usize, b: usize) -> ParitySpec {
    ParitySpec::uniform(graph.vertex_count(), a, b).unwrap()
}

fn has_factor(graph: &Graph, spec: &ParitySpec) -> bool {
    find_parity_factor(graph, spec, false, 0).unwrap().has_factor()
}

fn probabilities(list: &[&str]) -> Vec<Probability> {
    list.iter().map(|p| p.parse().unwrap()).collect()
}

fn triple_oracle() -> Verdict {
    let (mut instances, mut with_factor, mut disagreements) = (0, 0, Vec::new());
    for n in 1..=ORACLE_MAX_N {
        for graph in connected_catalog(n).unwrap() {
            for (a, b) in SPEC_GRID {
                let spec = uniform(&graph, a, b);
                let brute = brute_force_factor(&graph, &spec, BRUTE_MAX_EDGES).unwrap().is_some();
                let lovasz = certificate_search(&graph, &spec, ORACLE_MAX_N).unwrap().is_none();
                let finder = has_factor(&graph, &spec);
                instances += 1;
                with_factor += usize::from(brute);
                if brute != lovasz || brute != finder {
                    disagreements.push(format!("{:?} ({a},{b})", graph.edges()));
                }
            }
        }
    }
    verdict(
        disagreements.is_empty(),
        format!("{instances} instances, {with_factor} with factor, disagreements {disagreements:?}"),
    )
}

fn subsets(n: usize) -> impl Iterator<Item = (VertexSet, VertexSet)> {
    // Base-3 digits: 0 outside, 1 in S, 2 in T.
    (0..3usize.pow(n as u32)).map(move |mut code| {
        let (mut s, mut t) = (Vec::new(), Vec::new());
        for v in 0..n {
            match code % 3 {
                1 => s.push(v),
                2 => t.push(v),
                _ => {}
            }
            code /= 3;
        }
        (VertexSet::new(s), VertexSet::new(t))
    })
}

fn eta_parity() -> Verdict {
    let (mut checked, mut violations) = (0usize, 0usize);
    for n in 0..=PARITY_MAX_N {
        let pairs: Vec<_> = subsets(n).collect();
        for graph in labeled_graphs(n) {
            for (a, b) in SPEC_GRID {
                let spec = uniform(&graph, a, b);
                let parity = (spec.lower_sum() % 2) as i64;
                for (s, t) in &pairs {
                    checked += 1;
                    if eta(&graph, &spec, s, t).unwrap().rem_euclid(2) != parity {
                        violations += 1;
                    }
                }
            }
        }
    }
    verdict(violations == 0, format!("{checked} (G, spec, S, T) checked, {violations} violations"))
}

fn odd_lemma_exhaustive() -> Verdict {
    let (mut graphs, mut passing, mut counterexamples) = (0, 0, 0);
    for n in [4, 6] {
        for graph in connected_catalog(n).unwrap() {
            for k in [3, 5] {
                graphs += 1;
                if !check_odd_lemma(&graph, k).unwrap().overall {
                    continue;
                }
                passing += 1;
                let spec = uniform(&graph, 1, k);
                let brute = brute_force_factor(&graph, &spec, BRUTE_MAX_EDGES).unwrap().is_some();
                if !has_factor(&graph, &spec) || !brute {
                    counterexamples += 1;
                }
            }
        }
    }
    verdict(
        counterexamples == 0 && passing > 0,
        format!("{graphs} (graph, k) pairs, {passing} pass the hypothesis, {counterexamples} counterexamples"),
    )
}

fn main_theorem_random() -> Verdict {
    let ps = probabilities(&["1/2", "3/4", "9/10"]);
    let mut passing = 0;
    let mut counterexamples = 0;
    for (a, b, n_min, n_max, seed) in [(2, 2, 12, 20, SEED), (2, 4, 48, 56, SEED + 1)] {
        let config = TrialConfig::main(a, b, n_min, n_max, ps.clone(), TRIALS_PER_PAIR, seed);
        let report = run_validation(&config).unwrap();
        passing += report.trials_passing_hypothesis;
        counterexamples += report.counterexamples.len();
    }

    let spec = ParitySpec::uniform(TIMED_N, 2, 4).unwrap();
    let mut slowest = Duration::ZERO;
    for i in 0..TIMED_INSTANCES {
        let p = ps[i % ps.len()];
        let graph = generate(Model::Gnp { n: TIMED_N, p }, SEED ^ i as u64).unwrap();
        let start = Instant::now();
        find_parity_factor(&graph, &spec, false, 0).unwrap();
        slowest = slowest.max(start.elapsed());
    }
    verdict(
        counterexamples == 0 && passing >= MIN_PASSING_TRIALS && slowest < FINDER_LIMIT,
        format!(
            "{passing} hypothesis-passing trials (need {MIN_PASSING_TRIALS}), {counterexamples} counterexamples, \
             slowest n={TIMED_N} finder run {:.1} ms over {TIMED_INSTANCES} (limit {FINDER_LIMIT:?})",
            slowest.as_secs_f64() * 1e3
        ),
    )
}

fn sharpness() -> Verdict {
    let mut failures = Vec::new();
    let (mut bipartite, mut apex) = (0, 0);
    for (a, b) in SHARPNESS_GRID {
        for m in 1.. {
            let n = m * (a + b) + 1;
            if n > BIPARTITE_MAX_N {
                break;
            }
            let graph = build_bipartite_extremal(a, b, m).unwrap();
            let spec = uniform(&graph, a, b);
            let delta = graph.min_degree().unwrap();
            let factor_free = !has_factor(&graph, &spec)
                && (n > CERT_MAX_N || certificate_search(&graph, &spec, CERT_MAX_N).unwrap().is_some());
            let bounds = (a + b) * delta < a * n && a * n < (a + b) * (delta + 1);
            bipartite += 1;
            if !(factor_free && bounds) {
                failures.push(format!("K_{{{},{}}}", m * a, m * b + 1));
            }
        }
        let q = apex_clique_count(a, b);
        if q == 0 {
            continue;
        }
        for m in (2..).step_by(2) {
            if q * m + 1 > APEX_MAX_N {
                break;
            }
            let graph = match build_apex_extremal(a, b, m) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let n = graph.vertex_count();
            let spec = uniform(&graph, a, b);
            let apex_set = VertexSet::new([n - 1]);
            let deficiency = eta(&graph, &spec, &VertexSet::empty(), &apex_set).unwrap();
            let exhaustive = n > CERT_MAX_N || certificate_search(&graph, &spec, CERT_MAX_N).unwrap().is_some();
            apex += 1;
            if has_factor(&graph, &spec) || !exhaustive || graph.min_degree().unwrap() != q || deficiency != -(a as i64) {
                failures.push(format!("apex ({a},{b}) m={m}"));
            }
        }
    }
    let report = run_validation(&TrialConfig {
        mode: Mode::Sharpness { family: Family::Bipartite, m_min: 1, m_max: 3 },
        ..TrialConfig::main(2, 4, 0, 0, Vec::new(), 1, 0)
    })
    .unwrap();
    let summary = report.sharpness.unwrap();
    if summary.passed != summary.run {
        failures.push("validate sharpness (2,4) m=1..3".into());
    }
    verdict(
        failures.is_empty() && bipartite > 0 && apex > 0,
        format!("{bipartite} bipartite and {apex} apex graphs, failures {failures:?}"),
    )
}

fn matching_engine() -> Verdict {
    let mut failures = 0;
    let mut checked = 0;
    let mut check = |graph: &Graph| {
        let m = maximum_matching(graph);
        checked += 1;
        if !m.is_valid_for(graph) || m.len() != brute_force_matching(graph, RANDOM_MATCHING_MAX_N).unwrap() {
            failures += 1;
        }
    };
    for n in 0..=6 {
        labeled_graphs(n).for_each(|g| check(&g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_MATCHING_GRAPHS {
        let n = rng.gen_range(1..=RANDOM_MATCHING_MAX_N);
        let p = Probability::new(rng.gen_range(0..=10), 10).unwrap();
        check(&generate(Model::Gnp { n, p }, rng.gen()).unwrap());
    }
    let petersen = maximum_matching(&petersen()).len();
    verdict(
        failures == 0 && petersen == 5,
        format!("{checked} graphs, {failures} mismatches, Petersen {petersen}"),
    )
}

fn monotone_and_deterministic() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let (mut pairs, mut premise, mut violations) = (0, 0, 0);
    while pairs < MONOTONE_PAIRS {
        let n = rng.gen_range(4..=16);
        let p = Probability::new(rng.gen_range(3..=9), 10).unwrap();
        let graph = generate(Model::Gnp { n, p }, rng.gen()).unwrap();
        let missing = graph.nonadjacent_pairs();
        if missing.is_empty() {
            continue;
        }
        let (u, v) = missing[rng.gen_range(0..missing.len())];
        let (a, b) = SPEC_GRID[rng.gen_range(0..SPEC_GRID.len())];
        let spec = uniform(&graph, a, b);
        pairs += 1;
        if has_factor(&graph, &spec) {
            premise += 1;
            if !has_factor(&graph.with_edge(u, v).unwrap(), &spec) {
                violations += 1;
            }
        }
    }
    let config = TrialConfig::main(2, 4, 48, 50, probabilities(&["3/4", "9/10"]), 60, SEED);
    let first = run_validation(&config).unwrap().to_json();
    let second = run_validation(&config).unwrap().to_json();
    verdict(
        violations == 0 && premise > 0 && first == second,
        format!(
            "{pairs} (G, e) pairs, {premise} with a factor, {violations} violations; reports identical: {}",
            first == second
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("triple-oracle agreement", triple_oracle),
        ("deficiency parity", eta_parity),
        ("odd-factor lemma, exhaustive", odd_lemma_exhaustive),
        ("main theorem, randomized", main_theorem_random),
        ("sharpness families", sharpness),
        ("matching engine", matching_engine),
        ("monotonicity and determinism", monotone_and_deterministic),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        println!(
            "{} [{}] {name}: {} ({:.1}s)",
            if v.ok { "PASS" } else { "FAIL" },
            i + 1,
            v.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!v.ok);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
