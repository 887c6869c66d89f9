//! Deterministic workflow generators for benchmarks and tests.
//!
//! Every generator is a pure function of its arguments: the same seed
//! always produces the same workflow. Generators that can multiply paths
//! take a path cap and refuse structural growth that would cross it, so
//! generated instances stay enumerable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{Task, Workflow};

const RUNTIME_RANGE: std::ops::Range<f64> = 1.0..10.0;

fn tasks_with_runtimes(n: usize, rng: &mut ChaCha8Rng) -> Vec<Task> {
    (0..n)
        .map(|i| Task { id: i, name: format!("t{i}"), base_runtime: rng.gen_range(RUNTIME_RANGE) })
        .collect()
}

/// True when the root-to-leaf path count stays within `cap`.
fn within_path_cap(n: usize, edges: &[(usize, usize)], cap: u64) -> bool {
    let mut succ = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(a, b) in edges {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let roots: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut queue = roots.clone();
    let mut order = Vec::with_capacity(n);
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        order.push(v);
        for &s in &succ[v] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                queue.push(s);
            }
        }
    }
    debug_assert_eq!(order.len(), n, "generators only build DAGs");
    let mut counts = vec![0u64; n];
    for &v in order.iter().rev() {
        counts[v] = if succ[v].is_empty() {
            1
        } else {
            succ[v].iter().fold(0u64, |acc, &s| acc.saturating_add(counts[s]))
        };
    }
    let total = roots.iter().fold(0u64, |acc, &v| acc.saturating_add(counts[v]));
    total <= cap
}

fn build(mut tasks: Vec<Task>, mut edges: Vec<(usize, usize)>) -> Workflow {
    edges.sort_unstable();
    tasks.sort_by_key(|t| t.id);
    Workflow::new(tasks, edges).expect("generators only build valid workflows")
}

/// A linear chain of `n` tasks.
pub fn chain(n: usize, seed: u64) -> Workflow {
    assert!(n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (1..n).map(|v| (v - 1, v)).collect();
    build(tasks_with_runtimes(n, &mut rng), edges)
}

/// One source, `width` independent tasks, one sink.
pub fn fork_join(width: usize, seed: u64) -> Workflow {
    assert!(width >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = width + 2;
    let mut edges = Vec::with_capacity(2 * width);
    for w in 1..=width {
        edges.push((0, w));
        edges.push((w, width + 1));
    }
    build(tasks_with_runtimes(n, &mut rng), edges)
}

/// Consecutive layers fully connected. Path count is the product of the
/// layer widths, so keep widths small.
pub fn layered(widths: &[usize], seed: u64) -> Workflow {
    assert!(!widths.is_empty() && widths.iter().all(|&w| w >= 1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = widths.iter().sum();
    let mut edges = Vec::new();
    let mut offset = 0;
    for pair in widths.windows(2) {
        for a in 0..pair[0] {
            for b in 0..pair[1] {
                edges.push((offset + a, offset + pair[0] + b));
            }
        }
        offset += pair[0];
    }
    build(tasks_with_runtimes(n, &mut rng), edges)
}

/// A two-terminal series-parallel DAG grown by random series splits and
/// parallel bypasses, starting from a single edge. A bypass that would push
/// the path count past `max_paths` degrades to a split, which never adds
/// paths. The result always normalizes to itself and is recognized as
/// series-parallel.
pub fn random_sp_workflow(tasks: usize, seed: u64, max_paths: u64) -> Workflow {
    assert!(tasks >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 2;
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    while n < tasks {
        let e = rng.gen_range(0..edges.len());
        let (u, v) = edges[e];
        let mut placed = false;
        if rng.gen_bool(0.5) {
            edges.push((u, n));
            edges.push((n, v));
            if within_path_cap(n + 1, &edges, max_paths) {
                placed = true;
            } else {
                edges.truncate(edges.len() - 2);
            }
        }
        if !placed {
            // Series split of the chosen edge; never adds a path.
            edges[e] = (u, n);
            edges.push((n, v));
        }
        n += 1;
    }
    build(tasks_with_runtimes(n, &mut rng), edges)
}

/// A random single-root DAG: a random parent tree plus extra forward edges.
/// Extra edges that would duplicate an existing edge or push the path count
/// past `max_paths` are skipped.
pub fn random_dag(tasks: usize, extra_edges: usize, seed: u64, max_paths: u64) -> Workflow {
    assert!(tasks >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (1..tasks).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut have: std::collections::BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    for _ in 0..extra_edges {
        if tasks < 2 {
            break;
        }
        let u = rng.gen_range(0..tasks - 1);
        let v = rng.gen_range(u + 1..tasks);
        if !have.insert((u, v)) {
            continue;
        }
        edges.push((u, v));
        if !within_path_cap(tasks, &edges, max_paths) {
            edges.pop();
            have.remove(&(u, v));
        }
    }
    build(tasks_with_runtimes(tasks, &mut rng), edges)
}

/// A six-task astronomy-style mosaic workflow: two projections feed a
/// difference fit, one consolidation step, and two background corrections.
/// It has exactly four root-to-leaf paths.
pub fn montage_like(seed: u64) -> Workflow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = ["project_1", "project_2", "diff_fit", "concat_fit", "background_1", "background_2"];
    let tasks = names
        .iter()
        .enumerate()
        .map(|(i, name)| Task {
            id: i,
            name: (*name).to_string(),
            base_runtime: rng.gen_range(RUNTIME_RANGE),
        })
        .collect();
    build(tasks, vec![(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
}
