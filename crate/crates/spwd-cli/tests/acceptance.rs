//! Acceptance gate. One test per end-to-end guarantee; each prints a single
//! PASS or FAIL line (run with --nocapture to see them) and fails loudly on
//! any violation.

use std::fs;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spwd::decompose::{assign_weights, distribute_deadline, plan, vertex_weight, SizeSpec};
use spwd::generate;
use spwd::model::{make_instance, DeadlineSpec, Machine, Task, Workflow};
use spwd::pipeline::schedule_with;
use spwd::solver::{
    brute_force, build_model_for_workflow, export_lp, solve_exact, SolveError, SolverChoice,
    DEFAULT_NODE_BUDGET,
};
use spwd::ttsp::{
    map_to_ttsp, normalize_two_terminal, recognize_and_build_tree, Edge, SpNodeKind, TtspGraph,
    VertexKind, DEFAULT_PATH_CAP,
};

fn report(name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("acceptance {name}: PASS");
    } else {
        println!("acceptance {name}: FAIL ({} violations)", failures.len());
        for f in failures.iter().take(5) {
            println!("  {f}");
        }
        panic!("{name}: {} violations", failures.len());
    }
}

fn single_machine() -> Vec<Machine> {
    vec![Machine {
        id: 0,
        name: "m".into(),
        speed_ghz: 1.0,
        price_per_second: 1.0,
        core_count: 1,
    }]
}

/// 500 random models, at most 8 tasks and 3 machines, runtimes in [1, 10),
/// deadline drawn between 0.55x and 1.5x the critical path so that it is
/// sometimes tight and sometimes infeasible. The branch-and-bound cost must
/// match the exhaustive oracle within 1e-9, with matching feasibility.
#[test]
fn oracle_exactness_on_small_models() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut infeasible = 0usize;
    for case in 0..500 {
        let tasks = rng.gen_range(1..=8);
        let machines = rng.gen_range(1..=3);
        let pool: Vec<Machine> = (0..machines)
            .map(|m| {
                let speed: f64 = rng.gen_range(1.0..2.0);
                Machine {
                    id: m,
                    name: format!("machine_{}", m + 1),
                    speed_ghz: speed,
                    price_per_second: speed * speed,
                    core_count: 5,
                }
            })
            .collect();
        let extra = rng.gen_range(0..=tasks);
        let wf = generate::random_dag(tasks, extra, rng.gen(), 1_000);
        let probe =
            make_instance(wf.clone(), pool.clone(), 1.0, DeadlineSpec::CriticalPath).unwrap();
        let factor: f64 = rng.gen_range(0.55..1.5);
        let inst =
            make_instance(wf, pool, 1.0, DeadlineSpec::Seconds(probe.deadline * factor)).unwrap();
        let model = build_model_for_workflow(&inst, 10_000).unwrap();
        let oracle = brute_force(&model);
        let exact = solve_exact(&model, DEFAULT_NODE_BUDGET);
        match (oracle, exact) {
            (Ok(a), Ok(b)) => {
                if !b.proven {
                    failures.push(format!("case {case}: search did not close"));
                } else if (a.cost - b.schedule.cost).abs() > 1e-9 {
                    failures.push(format!(
                        "case {case}: oracle {} vs exact {}",
                        a.cost, b.schedule.cost
                    ));
                }
            }
            (Err(SolveError::Infeasible), Err(SolveError::Infeasible)) => infeasible += 1,
            (a, b) => failures.push(format!("case {case}: outcome mismatch {a:?} vs {b:?}")),
        }
    }
    let secs = started.elapsed().as_secs_f64();
    if secs >= 10.0 {
        failures.push(format!("took {secs:.1}s, limit 10s"));
    }
    assert!(infeasible > 0, "deadline draw never produced an infeasible case");
    report("oracle_exactness_on_small_models", &failures);
}

/// 200 random DAGs of at most 60 tasks, default machine pool, deadline at
/// the critical path, divided at every size in {75, 50, 25, 10, 5} percent.
/// Whenever all subproblems solve, the merged schedule must pass validation
/// with slack no worse than -1e-9 on every path.
#[test]
fn merged_schedules_always_validate() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut merged_runs = 0usize;
    let mut skipped = 0usize;
    for case in 0..200 {
        let tasks = rng.gen_range(2..=60);
        let extra = rng.gen_range(0..=tasks / 2);
        // Alternate between graphs that map onto series-parallel form via
        // synchronization vertices and graphs already in that form.
        let wf = if case % 2 == 0 {
            generate::random_dag(tasks, extra, rng.gen(), 10_000)
        } else {
            generate::random_sp_workflow(tasks, rng.gen(), 10_000)
        };
        let inst =
            make_instance(wf, Machine::default_pool(), 1.0, DeadlineSpec::CriticalPath).unwrap();
        for pct in [75.0, 50.0, 25.0, 10.0, 5.0] {
            let p = match plan(&inst, SizeSpec::Percent(pct)) {
                Ok(p) => p,
                Err(e) => {
                    failures.push(format!("case {case} s={pct}%: plan failed: {e}"));
                    continue;
                }
            };
            match schedule_with(
                &inst,
                &p,
                SolverChoice::Greedy,
                1,
                DEFAULT_NODE_BUDGET,
                DEFAULT_PATH_CAP,
            ) {
                Ok(report) => {
                    merged_runs += 1;
                    let v = &report.merge.validation;
                    if !v.feasible || v.min_slack < -1e-9 {
                        failures.push(format!(
                            "case {case} s={pct}%: merged schedule violates the deadline \
                             (min slack {})",
                            v.min_slack
                        ));
                    }
                }
                // The guarantee is conditional on the subproblems solving.
                Err(spwd::pipeline::PipelineError::Subproblem {
                    source: SolveError::Infeasible,
                    ..
                }) => skipped += 1,
                Err(e) => failures.push(format!("case {case} s={pct}%: pipeline failed: {e}")),
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    if secs >= 60.0 {
        failures.push(format!("took {secs:.1}s, limit 60s"));
    }
    assert!(merged_runs >= 700, "only {merged_runs} of 1000 runs merged ({skipped} skipped)");
    report("merged_schedules_always_validate", &failures);
}

/// 200 random two-terminal DAGs of up to 200 vertices. The series-parallel
/// mapping must stay within t' <= 2t vertices and e' <= 2(t' - 2) edges and
/// its output must be accepted by the recognizer.
#[test]
fn mapping_stays_within_size_bounds() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for case in 0..200 {
        let tasks = rng.gen_range(2..=200);
        let extra = rng.gen_range(0..=tasks);
        let wf = generate::random_dag(tasks, extra, rng.gen(), 100_000);
        let graph = normalize_two_terminal(&wf).unwrap();
        let t = graph.vertex_count();
        let mapped = map_to_ttsp(&graph);
        let tp = mapped.vertex_count();
        let ep = mapped.edge_count();
        if tp > 2 * t {
            failures.push(format!("case {case}: {tp} vertices from {t}"));
        }
        if tp >= 3 && ep > 2 * (tp - 2) {
            failures.push(format!("case {case}: {ep} edges on {tp} vertices"));
        }
        if recognize_and_build_tree(&mapped).is_err() {
            failures.push(format!("case {case}: mapped graph not recognized"));
        }
    }
    report("mapping_stays_within_size_bounds", &failures);
}

/// 100 random series-parallel graphs of up to 60 vertices: the decomposition
/// tree's root weight must equal the exhaustive maximum path weight.
#[test]
fn root_weight_matches_heaviest_path() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for case in 0..100 {
        let tasks = rng.gen_range(2..=60);
        let wf = generate::random_sp_workflow(tasks, rng.gen(), 50_000);
        let inst =
            make_instance(wf, Machine::default_pool(), 1.0, DeadlineSpec::CriticalPath).unwrap();
        let graph = normalize_two_terminal(&inst.workflow).unwrap();
        let mut tree = recognize_and_build_tree(&graph).unwrap();
        assign_weights(&mut tree, &graph, &inst);
        let root_weight = tree.node(tree.root()).weight;
        let heaviest = graph
            .enumerate_paths(1_000_000)
            .unwrap()
            .iter()
            .map(|p| p.iter().map(|&v| vertex_weight(&graph, v, &inst)).sum::<f64>())
            .fold(f64::NEG_INFINITY, f64::max);
        if (root_weight - heaviest).abs() > 1e-9 {
            failures.push(format!("case {case}: root {root_weight} vs enumerated {heaviest}"));
        }
    }
    report("root_weight_matches_heaviest_path", &failures);
}

/// The two deadline-distribution fixtures. A three-task chain with deadline 3
/// splits 1.5/1.5 around the middle task; when the middle task has zero
/// runtime the weights are 1/1 and deadline 2 splits 1.0/1.0.
#[test]
fn deadline_distribution_fixtures() {
    let mut failures = Vec::new();

    let tasks: Vec<Task> =
        (0..3).map(|i| Task { id: i, name: format!("t{i}"), base_runtime: 1.0 }).collect();
    let wf = Workflow::new(tasks, vec![(0, 1), (1, 2)]).unwrap();
    let inst = make_instance(wf, single_machine(), 1.0, DeadlineSpec::Seconds(3.0)).unwrap();
    let graph = normalize_two_terminal(&inst.workflow).unwrap();
    let mut tree = recognize_and_build_tree(&graph).unwrap();
    assign_weights(&mut tree, &graph, &inst);
    distribute_deadline(&mut tree, 3.0);
    let (l, r) = tree.children(tree.root()).unwrap();
    if tree.node(l).deadline != Some(1.5) || tree.node(r).deadline != Some(1.5) {
        failures.push(format!(
            "equal-weight chain split {:?}/{:?}, expected 1.5/1.5",
            tree.node(l).deadline,
            tree.node(r).deadline
        ));
    }

    let tasks = vec![
        Task { id: 0, name: "a".into(), base_runtime: 1.0 },
        Task { id: 1, name: "v".into(), base_runtime: 0.0 },
        Task { id: 2, name: "c".into(), base_runtime: 1.0 },
    ];
    let wf = Workflow::new(tasks, vec![(0, 1), (1, 2)]).unwrap();
    let inst = make_instance(wf, single_machine(), 1.0, DeadlineSpec::Seconds(2.0)).unwrap();
    let graph = normalize_two_terminal(&inst.workflow).unwrap();
    let mut tree = recognize_and_build_tree(&graph).unwrap();
    assign_weights(&mut tree, &graph, &inst);
    distribute_deadline(&mut tree, 2.0);
    let (l, r) = tree.children(tree.root()).unwrap();
    if tree.node(l).deadline != Some(1.0) || tree.node(r).deadline != Some(1.0) {
        failures.push(format!(
            "zero-weight connector split {:?}/{:?}, expected 1.0/1.0",
            tree.node(l).deadline,
            tree.node(r).deadline
        ));
    }

    report("deadline_distribution_fixtures", &failures);
}

/// Six tasks on five machines with four root-to-leaf paths make a model of
/// 30 variables and 10 constraints, and the exported LP agrees line for line.
#[test]
fn problem_size_arithmetic() {
    let mut failures = Vec::new();
    let wf = generate::montage_like(1);
    let inst = make_instance(wf, Machine::default_pool(), 1.0, DeadlineSpec::CriticalPath).unwrap();
    let model = build_model_for_workflow(&inst, 1_000).unwrap();
    if model.problem_size() != (30, 10) {
        failures.push(format!("problem size {:?}, expected (30, 10)", model.problem_size()));
    }
    let lp = export_lp(&model);
    let assignment_rows = lp.lines().filter(|l| l.starts_with(" t_")).count();
    let path_rows = lp.lines().filter(|l| l.starts_with(" p_")).count();
    let binaries = lp.lines().filter(|l| l.starts_with(" x_")).count();
    if assignment_rows != 6 || path_rows != 4 || binaries != 30 {
        failures.push(format!(
            "LP rows: {assignment_rows} assignment + {path_rows} path, {binaries} binaries; \
             expected 6 + 4, 30"
        ));
    }
    report("problem_size_arithmetic", &failures);
}

/// Eighty tasks in eight parallel chains of ten, default pool, deadline at
/// the critical path. Dividing more aggressively may only raise the cost:
/// the ratio against the undivided exact solve stays at most 1.20 at the
/// 1 percent size and never decreases by more than 0.02 as the size shrinks
/// through 50, 10, and 1 percent.
#[test]
fn cost_degradation_stays_bounded_and_monotone() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    let chains = 8usize;
    let length = 10usize;
    let mut tasks = Vec::new();
    let mut edges = Vec::new();
    for c in 0..chains {
        for i in 0..length {
            let id = c * length + i;
            tasks.push(Task {
                id,
                name: format!("t{id}"),
                base_runtime: rng.gen_range(1.0..10.0),
            });
            if i > 0 {
                edges.push((id - 1, id));
            }
        }
    }
    let wf = Workflow::new(tasks, edges).unwrap();
    let inst = make_instance(wf, Machine::default_pool(), 1.0, DeadlineSpec::CriticalPath).unwrap();

    let baseline_model = build_model_for_workflow(&inst, DEFAULT_PATH_CAP).unwrap();
    let baseline = solve_exact(&baseline_model, DEFAULT_NODE_BUDGET).unwrap();
    if !baseline.proven {
        failures.push("undivided baseline did not close".into());
    }

    let mut ratios = Vec::new();
    for pct in [50.0, 10.0, 1.0] {
        let p = plan(&inst, SizeSpec::Percent(pct)).unwrap();
        let report = schedule_with(
            &inst,
            &p,
            SolverChoice::Exact,
            1,
            DEFAULT_NODE_BUDGET,
            DEFAULT_PATH_CAP,
        )
        .unwrap();
        if !report.merge.validation.feasible {
            failures.push(format!("s={pct}%: merged schedule infeasible"));
        }
        ratios.push(report.schedule.cost / baseline.schedule.cost);
    }
    if ratios[2] > 1.20 {
        failures.push(format!("ratio {} at 1%, limit 1.20", ratios[2]));
    }
    for w in ratios.windows(2) {
        if w[1] < w[0] - 0.02 {
            failures.push(format!("ratio dropped from {} to {} as sizes shrank", w[0], w[1]));
        }
    }
    let secs = started.elapsed().as_secs_f64();
    if secs >= 120.0 {
        failures.push(format!("took {secs:.1}s, limit 120s"));
    }
    report("cost_degradation_stays_bounded_and_monotone", &failures);
}

/// The four-vertex diamond built edge by edge as a, b, c, d reduces to
/// exactly P(S(a, b), S(c, d)).
#[test]
fn reduction_order_on_the_diamond_fixture() {
    let mut failures = Vec::new();
    let kinds = vec![
        VertexKind::Task(0),
        VertexKind::Task(1),
        VertexKind::Task(2),
        VertexKind::Task(3),
    ];
    let edges = vec![
        Edge { from: 0, to: 1 }, // a
        Edge { from: 1, to: 3 }, // b
        Edge { from: 0, to: 2 }, // c
        Edge { from: 2, to: 3 }, // d
    ];
    let graph = TtspGraph::new(kinds, edges, 0, 3);
    let tree = recognize_and_build_tree(&graph).unwrap();
    let root = tree.node(tree.root());
    match root.kind {
        SpNodeKind::Parallel { left, right } => {
            let is_series = |n: usize| matches!(tree.node(n).kind, SpNodeKind::Series { .. });
            if !is_series(left) || !is_series(right) {
                failures.push("parallel children are not both series".into());
            }
            if tree.subtree_edges(left) != vec![0, 1] {
                failures.push(format!(
                    "left branch edges {:?}, expected [0, 1] (a, b)",
                    tree.subtree_edges(left)
                ));
            }
            if tree.subtree_edges(right) != vec![2, 3] {
                failures.push(format!(
                    "right branch edges {:?}, expected [2, 3] (c, d)",
                    tree.subtree_edges(right)
                ));
            }
        }
        ref k => failures.push(format!("root is {k:?}, expected a parallel node")),
    }
    report("reduction_order_on_the_diamond_fixture", &failures);
}

/// Running `schedule` twice with identical inputs writes byte-identical
/// schedule CSVs, plan artifacts, and LP exports.
#[test]
fn cli_byte_determinism() {
    let mut failures = Vec::new();
    let bin = env!("CARGO_BIN_EXE_spwd");
    let dir = tempfile::tempdir().unwrap();
    let wf = dir.path().join("wf.json");

    let run = |args: &[&str]| {
        let out = Command::new(bin).args(args).output().unwrap();
        assert!(
            out.status.success(),
            "spwd {:?} failed: {}",
            args,
            String::from_utf8_lossy(&out.stderr)
        );
    };
    run(&[
        "generate",
        "--shape",
        "random-sp",
        "--tasks",
        "30",
        "--seed",
        "9",
        "--out",
        wf.to_str().unwrap(),
    ]);

    let schedule_to = |sub: &str| {
        let out = dir.path().join(sub);
        run(&[
            "schedule",
            "--workflow",
            wf.to_str().unwrap(),
            "--max-subgraph-size",
            "25%",
            "--out",
            out.to_str().unwrap(),
        ]);
        out
    };
    let a = schedule_to("a");
    let b = schedule_to("b");
    for file in ["schedule.csv", "plan.csv", "plan.txt", "tree.txt", "mapped.edges"] {
        if fs::read(a.join(file)).unwrap() != fs::read(b.join(file)).unwrap() {
            failures.push(format!("{file} differs between identical runs"));
        }
    }

    let export_to = |sub: &str| {
        let out = dir.path().join(sub);
        run(&[
            "schedule",
            "--workflow",
            wf.to_str().unwrap(),
            "--max-subgraph-size",
            "25%",
            "--solver",
            "lp-export",
            "--out",
            out.to_str().unwrap(),
        ]);
        out
    };
    let la = export_to("la");
    let lb = export_to("lb");
    let mut lp_files: Vec<String> = fs::read_dir(&la)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".lp"))
        .collect();
    lp_files.sort();
    assert!(!lp_files.is_empty(), "lp-export wrote no .lp files");
    for file in &lp_files {
        if fs::read(la.join(file)).unwrap() != fs::read(lb.join(file)).unwrap() {
            failures.push(format!("{file} differs between identical exports"));
        }
    }
    report("cli_byte_determinism", &failures);
}
