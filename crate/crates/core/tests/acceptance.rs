//! Acceptance gate. Each test checks one criterion at its pinned tolerance
//! and prints a single PASS/FAIL line.
//!
//! Run with `cargo test -p edgecount --test acceptance -- --nocapture`.

use std::time::Instant;

use edgecount::estimator::exact::{bucket_partition, exact_d_h, full_information_mass};
use edgecount::estimator::{build_sample_plan, count_collisions, BucketConfig, EstimatorParams};
use edgecount::experiments::{
    run_accuracy_trials, run_distinguishing_experiment, run_ph_bound_check, GraphSource,
    TrialConfig,
};
use edgecount::graph::{gen_gnm, gen_named, Graph, GraphSpec, Shape};
use edgecount::oracle::{
    answer_plan, audit_nonadaptive, Answer, PlanProvenance, QueryPlan, QuerySpec,
};
use edgecount::seed;
use edgecount::{full_non_adaptive_edge, Branch};
use rand::Rng;

const N: usize = 10_000;
const EPS: f64 = 0.25;
const TRIALS: usize = 100;

fn verdict(id: u32, name: &str, pass: bool, detail: String) -> bool {
    println!(
        "[{}] criterion {id}: {name} :: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

fn trials_on(spec: &str, master_seed: u64) -> edgecount::experiments::TrialStats {
    let spec: GraphSpec = spec.parse().unwrap();
    run_accuracy_trials(&TrialConfig::new(
        GraphSource::Generator(spec),
        EPS,
        TRIALS,
        master_seed,
    ))
    .unwrap()
}

#[test]
fn criterion_1_dense_regime_accuracy() {
    let start = Instant::now();
    let stats = trials_on("gnm:10000,100000", 1);
    let elapsed = start.elapsed().as_secs_f64();
    let successes = stats.records.iter().filter(|r| r.success).count();
    assert_eq!(stats.summary.m, 100_000);
    let pass = successes >= 90 && elapsed <= 60.0;
    assert!(verdict(
        1,
        "gnm(1e4,1e5) eps=0.25 within eps*m",
        pass,
        format!(
            "{successes}/100 successes (need >= 90), max rel err {:.4}, {elapsed:.1}s (need <= 60s)",
            stats.summary.max_rel_error.unwrap()
        ),
    ));
}

#[test]
fn criterion_2_sparse_regime_accuracy() {
    let stats = trials_on("path:10000", 2);
    let collision = stats.summary.branches.collision;
    let successes = stats.records.iter().filter(|r| r.success).count();
    let pass = collision >= 95 && successes >= 90;
    assert!(verdict(
        2,
        "path(1e4) collision branch and accuracy",
        pass,
        format!(
            "{collision}/100 collision branch (need >= 95), {successes}/100 successes (need >= 90)"
        ),
    ));
}

#[test]
fn criterion_3_is_collision_separation() {
    let sparse = trials_on("path:10000", 3);
    let dense = trials_on("clique_plus_isolated:10000,500", 3);
    assert!(dense.summary.m >= 8 * N);
    let ones = sparse.records.iter().filter(|r| r.k == 1).count();
    let zeros = dense.records.iter().filter(|r| r.k == 0).count();
    let pass = ones >= 95 && zeros >= 95;
    assert!(verdict(
        3,
        "IsCollision separates m<=n from m>=8n",
        pass,
        format!("path k=1 in {ones}/100, clique(500) k=0 in {zeros}/100 (need >= 95 each)"),
    ));
}

/// Plan size straight from the closed forms with the default constants.
fn formula_sizes(n: usize, eps: f64) -> (u64, u64) {
    let nf = n as f64;
    let ln = nf.ln();
    let s_deg = (2.0 * nf.sqrt() * ln / eps.powf(2.5)).ceil() as u64;
    let t = (2.0 * (eps * nf).sqrt() * ln).ceil() as u64;
    let r = (5.0 * ln).ceil() as u64;
    let t_col = (2.0 * nf).sqrt().ceil() as u64;
    let s = (2.0 * nf.sqrt() * ln / eps).ceil() as u64;
    (s_deg, t + r * t_col + s)
}

#[test]
fn criterion_4_query_budget_exactness() {
    let mut ok = true;
    let mut details = Vec::new();
    for n in [1_000, 10_000, 100_000] {
        let graph = gen_named(Shape::Path, n, 0).unwrap();
        let mut deg_counts = Vec::new();
        for eps in [0.5, 0.25] {
            let params = EstimatorParams::new(eps).unwrap().with_seed(n as u64);
            let rep = full_non_adaptive_edge(&graph, &params).unwrap();
            let (deg, rand_edge) = formula_sizes(n, eps);
            let exact = rep.queries.deg == deg
                && rep.queries.rand_edge == rand_edge
                && rep.queries.nbr == 0
                && rep.queries.pair == 0
                && rep.queries.total() == deg + rand_edge;
            ok &= exact;
            details.push(format!(
                "n={n} eps={eps}: {} (formula {})",
                rep.queries.total(),
                deg + rand_edge
            ));
            deg_counts.push(rep.queries.deg as f64);
        }
        let growth = deg_counts[1] / deg_counts[0];
        let target = 2f64.powf(2.5);
        let within = (growth / target - 1.0).abs() <= 0.10;
        ok &= within;
        details.push(format!("n={n} deg growth {growth:.4} vs {target:.4}"));
    }
    assert!(verdict(
        4,
        "ledger equals |S|+|T|+R*t_col+s",
        ok,
        details.join("; ")
    ));
}

#[test]
fn criterion_5_non_adaptivity_audit() {
    let graphs = vec![
        gen_named(Shape::Path, N, 0).unwrap(),
        gen_gnm(N, 100_000, 5).unwrap(),
        gen_named(Shape::CliquePlusIsolated { k: 500 }, N, 0).unwrap(),
    ];
    let plan_fn = |g: &Graph, eps: f64, seed: u64| {
        build_sample_plan(g.n(), &EstimatorParams::new(eps).unwrap().with_seed(seed))
    };
    let identical = audit_nonadaptive(plan_fn, &graphs, EPS, 11);
    let direct = graphs
        .iter()
        .map(|g| plan_fn(g, EPS, 11))
        .collect::<Vec<_>>()
        .windows(2)
        .all(|w| w[0].queries() == w[1].queries());
    // Negative control: a plan that looks at the graph must be caught.
    let adaptive = |g: &Graph, eps: f64, seed: u64| {
        let mut plan = plan_fn(g, eps, seed);
        let argmax = (0..g.n())
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        plan.push(QuerySpec::Deg(argmax));
        plan
    };
    let caught = !audit_nonadaptive(adaptive, &graphs, EPS, 11);
    assert!(verdict(
        5,
        "plans identical across path/gnm/clique",
        identical && direct && caught,
        format!(
            "audit={identical}, pairwise equality={direct}, adaptive control rejected={caught}"
        ),
    ));
}

/// Graph with exactly `m` disjoint edges.
fn matching(m: usize) -> Graph {
    edgecount::build_graph(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1))).unwrap()
}

#[test]
fn criterion_6_collision_moments() {
    const BATCHES: usize = 100_000;
    let mut ok = true;
    let mut details = Vec::new();
    for m in [5, 10] {
        let graph = matching(m);
        for s in [4usize, 6] {
            let plan = QueryPlan::with_queries(
                PlanProvenance {
                    n: graph.n(),
                    epsilon: 0.0,
                    seed: 0,
                },
                vec![QuerySpec::RandEdge; s * BATCHES],
            );
            let t = answer_plan(
                &graph,
                plan,
                seed::derive_seed(6, "moments", (m * 10 + s) as u64),
            )
            .unwrap();
            let edges: Vec<_> = t
                .answers()
                .iter()
                .map(|a| match a {
                    Answer::Edge(e) => *e,
                    _ => unreachable!(),
                })
                .collect();
            let xs: Vec<f64> = edges
                .chunks(s)
                .map(|c| count_collisions(c) as f64)
                .collect();
            let mean = xs.iter().sum::<f64>() / xs.len() as f64;
            let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
            let expected = (s * (s - 1) / 2) as f64 / m as f64;
            let mean_ok = (mean / expected - 1.0).abs() <= 0.05;
            let var_ok = var <= 1.1 * mean;
            ok &= mean_ok && var_ok;
            details.push(format!(
                "m={m} s={s}: mean {mean:.4} vs {expected:.4}, var {var:.4}"
            ));
        }
    }
    assert!(verdict(
        6,
        "E[X]=C(s,2)/m and Var(X)<=E[X]",
        ok,
        details.join("; ")
    ));
}

#[test]
fn criterion_7_p_h_lower_bound() {
    let graph = gen_gnm(N, 100_000, 7).unwrap();
    let params = EstimatorParams::new(EPS).unwrap();
    // exact_d_h asserts both decomposition identities on every trial.
    let res = run_ph_bound_check(&graph, &params, TRIALS, 7).unwrap();
    let passing = res.p_h.iter().filter(|&&p| p >= 0.5 - EPS / 8.0).count();
    let min = res.p_h.iter().copied().fold(f64::INFINITY, f64::min);
    assert!(verdict(
        7,
        "p_H >= 1/2 - eps/8 for sampled I_H",
        passing >= 95,
        format!("{passing}/100 trials (need >= 95), min p_H {min:.5}"),
    ));
}

#[test]
fn criterion_8_full_information_identity() {
    let mut rng = seed::stream(8, "identity-graphs", 0);
    let mut checked = 0;
    let mut violations = 0;
    for g_idx in 0..20u64 {
        let n = rng.gen_range(10..=500);
        let max = n * (n - 1) / 2;
        let m = rng.gen_range(0..=max.min(6 * n));
        let graph = gen_gnm(n, m, g_idx).unwrap();
        let eps = [0.1, 0.25, 0.5, 0.8][g_idx as usize % 4];
        let config = BucketConfig::new(n, eps / 10.0).unwrap();
        let part = bucket_partition(&graph, &config);
        let occupied: Vec<usize> = (0..config.t()).filter(|&i| part.sizes[i] > 0).collect();
        let mut heavy_sets = vec![
            Vec::new(),
            (0..config.t()).collect::<Vec<_>>(),
            occupied.clone(),
        ];
        for _ in 0..5 {
            heavy_sets.push(
                occupied
                    .iter()
                    .copied()
                    .filter(|_| rng.gen_bool(0.5))
                    .collect(),
            );
        }
        for heavy in heavy_sets {
            let mass = full_information_mass(&part, &heavy, &config);
            let d_h = exact_d_h(&graph, &heavy, &config).d_h as f64;
            checked += 1;
            if !(d_h <= mass && mass <= (1.0 + config.gamma()) * d_h) {
                violations += 1;
            }
        }
    }
    assert!(verdict(
        8,
        "d_H <= sum |B_i|(1+g)^i <= (1+g) d_H",
        violations == 0,
        format!("{checked} (graph, I_H) pairs on 20 graphs, {violations} violations"),
    ));
}

#[test]
fn criterion_9a_indistinguishable_at_small_budget() {
    let low = run_distinguishing_experiment(N, 10, 500, 9).unwrap();
    assert!(verdict(
        9,
        "(a) q=10 best-threshold accuracy",
        low.best_threshold_accuracy <= 0.60,
        format!(
            "best cutoff X >= {} accuracy {:.3} over 500 trials (need <= 0.60), midpoint rule {:.3}, mean collisions A {:.4} B {:.4}",
            low.best_cutoff, low.best_threshold_accuracy, low.accuracy, low.mean_collisions_a, low.mean_collisions_b
        ),
    ));
}

#[test]
fn criterion_9b_separable_at_sqrt_budget() {
    let high = run_distinguishing_experiment(N, 300, 500, 9).unwrap();
    let ratio = high.collision_ratio.unwrap();
    assert!(verdict(
        9,
        "(b) q=300 mean collision ratio B/A",
        (ratio - 2.0).abs() <= 0.4,
        format!(
            "ratio {ratio:.3} (need 2.0 +- 0.4), accuracy {:.3}",
            high.accuracy
        ),
    ));
}

#[test]
fn criterion_9c_local_probes_miss_planted_set() {
    let low = run_distinguishing_experiment(N, 10, 500, 9).unwrap();
    // Probes that miss must see identical answers on both graphs.
    assert!(low.blind_when_missed);
    assert!(verdict(
        9,
        "(c) size-10 local probe sets miss the planted set",
        low.probe_miss_rate >= 0.95,
        format!(
            "missed in {:.3} of 500 placements (need >= 0.95; union bound 1 - q|S|/n = {:.3})",
            low.probe_miss_rate, low.probe_miss_bound
        ),
    ));
}

#[test]
fn zero_edge_graph_is_reported_not_failed() {
    let params = EstimatorParams::new(EPS).unwrap();
    let rep = full_non_adaptive_edge(&Graph::empty(N), &params).unwrap();
    assert_eq!(rep.branch, Branch::ZeroEdges);
    assert_eq!(rep.m_hat, Some(0.0));
}
