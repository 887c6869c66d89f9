//! Subproblem solvers: an exact branch-and-bound search, a cost-lowering
//! greedy, an exhaustive oracle for tests, and an LP export.
//!
//! A model has one binary variable per (task, machine) pair and two
//! constraint families: each task runs on exactly one machine, and each
//! source-to-sink path finishes within the deadline. Synthetic and
//! substitute vertices, and tasks with zero execution time, generate no
//! variables: they contribute nothing to any path time or to the objective.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::decompose::SubProblem;
use crate::model::{MachineId, TaskId, WspInstance, EPS};
use crate::ttsp::TtspError;

/// Node budget for [`solve_exact`]. Exhausting it returns the incumbent
/// unproven instead of failing.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Assignment space guard for [`brute_force`].
pub const BRUTE_FORCE_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverChoice {
    Exact,
    Greedy,
}

#[derive(Debug, Error)]
pub enum SolveError {
    /// Even the all-fastest assignment misses a deadline.
    #[error("infeasible: fastest possible completion misses the deadline")]
    Infeasible,
    #[error("node budget exhausted after {nodes} nodes with no feasible incumbent")]
    Timeout { nodes: u64 },
    #[error("assignment space {assignments} exceeds the exhaustive cap {cap}")]
    SpaceTooLarge { assignments: u64, cap: u64 },
    #[error(transparent)]
    PathExplosion(#[from] TtspError),
}

/// Scheduling model over the tasks that carry workload.
#[derive(Clone, Debug)]
pub struct Model {
    /// Original task id per variable row.
    pub tasks: Vec<TaskId>,
    /// times[row][machine]: execution time, seconds.
    pub times: Vec<Vec<f64>>,
    /// costs[row][machine]: execution cost.
    pub costs: Vec<Vec<f64>>,
    /// Deadline rows: variable rows on each source-to-sink path.
    pub paths: Vec<Vec<usize>>,
    pub deadline: f64,
    pub machine_count: usize,
}

/// Machine choice per task, with the canonical cost and feasibility flag.
#[derive(Clone, Debug, PartialEq)]
pub struct Schedule {
    pub assignment: BTreeMap<TaskId, MachineId>,
    pub cost: f64,
    pub feasible: bool,
}

impl Schedule {
    pub fn empty() -> Self {
        Schedule { assignment: BTreeMap::new(), cost: 0.0, feasible: true }
    }
}

#[derive(Clone, Debug)]
pub struct ExactSolution {
    pub schedule: Schedule,
    /// True when the search space was exhausted, so the schedule is optimal.
    pub proven: bool,
    pub nodes: u64,
}

impl Model {
    pub fn variable_count(&self) -> usize {
        self.tasks.len() * self.machine_count
    }

    /// Constraint count: one one-hot row per task plus one row per path.
    pub fn constraint_count(&self) -> usize {
        self.tasks.len() + self.paths.len()
    }

    /// (variables, constraints), the numbers a MILP solver would see.
    pub fn problem_size(&self) -> (usize, usize) {
        (self.variable_count(), self.constraint_count())
    }

    fn path_time(&self, path: &[usize], choice: &[usize]) -> f64 {
        path.iter().map(|&row| self.times[row][choice[row]]).sum()
    }

    fn is_feasible(&self, choice: &[usize]) -> bool {
        self.paths.iter().all(|p| self.path_time(p, choice) <= self.deadline + EPS)
    }

    /// Canonical cost: summed in ascending task id order.
    fn choice_cost(&self, choice: &[usize]) -> f64 {
        let mut rows: Vec<usize> = (0..self.tasks.len()).collect();
        rows.sort_by_key(|&r| self.tasks[r]);
        rows.iter().map(|&r| self.costs[r][choice[r]]).sum()
    }

    fn to_schedule(&self, choice: &[usize]) -> Schedule {
        Schedule {
            assignment: (0..self.tasks.len()).map(|r| (self.tasks[r], choice[r])).collect(),
            cost: self.choice_cost(choice),
            feasible: self.is_feasible(choice),
        }
    }
}

/// Builds the model for one subproblem from its tree's path set.
pub fn build_model(
    sp: &SubProblem,
    instance: &WspInstance,
    path_cap: u64,
) -> Result<Model, SolveError> {
    let paths = sp.tree.node_paths(sp.tree.root(), &sp.subgraph, path_cap)?;
    let mut tasks = Vec::new();
    let mut row_of_local = vec![usize::MAX; sp.subgraph.vertex_count()];
    for (local, kind) in sp.subgraph.kinds().iter().enumerate() {
        if let crate::ttsp::VertexKind::Task(t) = *kind {
            if instance.mean_time(t) > 0.0 {
                row_of_local[local] = tasks.len();
                tasks.push(t);
            }
        }
    }
    let rows = paths
        .iter()
        .map(|p| {
            p.iter()
                .filter_map(|&v| {
                    let r = row_of_local[v];
                    (r != usize::MAX).then_some(r)
                })
                .collect::<Vec<usize>>()
        })
        .collect();
    Ok(finish_model(tasks, rows, sp.deadline, instance))
}

/// Builds the whole-instance model by enumerating root-to-leaf paths of the
/// raw workflow. Errors with the path count when it exceeds the cap.
pub fn build_model_for_workflow(
    instance: &WspInstance,
    path_cap: u64,
) -> Result<Model, SolveError> {
    let wf = &instance.workflow;
    let (total, saturated) = wf.count_root_leaf_paths();
    if saturated || total > path_cap {
        return Err(SolveError::PathExplosion(TtspError::PathExplosion {
            count: total,
            cap: path_cap,
            saturated,
        }));
    }

    let mut tasks = Vec::new();
    let mut row_of_task = vec![usize::MAX; wf.task_count()];
    for (t, row) in row_of_task.iter_mut().enumerate() {
        if instance.mean_time(t) > 0.0 {
            *row = tasks.len();
            tasks.push(t);
        }
    }
    let mut rows = Vec::new();
    let mut stack: Vec<(TaskId, bool)> = wf.roots().iter().rev().map(|&r| (r, false)).collect();
    let mut current: Vec<TaskId> = Vec::new();
    while let Some((t, done)) = stack.pop() {
        if done {
            current.pop();
            continue;
        }
        current.push(t);
        stack.push((t, true));
        let succ = wf.successors(t);
        if succ.is_empty() {
            rows.push(
                current
                    .iter()
                    .filter_map(|&v| {
                        let r = row_of_task[v];
                        (r != usize::MAX).then_some(r)
                    })
                    .collect(),
            );
        } else {
            for &s in succ.iter().rev() {
                stack.push((s, false));
            }
        }
    }
    Ok(finish_model(tasks, rows, instance.deadline, instance))
}

fn finish_model(
    tasks: Vec<TaskId>,
    rows: Vec<Vec<usize>>,
    deadline: f64,
    instance: &WspInstance,
) -> Model {
    let times = tasks.iter().map(|&t| instance.time[t].clone()).collect();
    let costs = tasks.iter().map(|&t| instance.cost[t].clone()).collect();
    // Duplicate rows add nothing; empty rows are trivially satisfied.
    let mut seen = BTreeSet::new();
    let mut paths = Vec::new();
    for row in rows {
        if row.is_empty() {
            continue;
        }
        let mut key = row.clone();
        key.sort_unstable();
        if seen.insert(key) {
            paths.push(row);
        }
    }
    let machine_count = instance.machines.len();
    Model { tasks, times, costs, paths, deadline, machine_count }
}

/// Index of the machine with the smallest execution time for `row`, ties to
/// the lower id. With a uniform reference speed this is the fastest machine
/// for every row.
fn fastest_machine(model: &Model, row: usize) -> usize {
    let mut best = 0;
    for m in 1..model.machine_count {
        if model.times[row][m] < model.times[row][best] {
            best = m;
        }
    }
    best
}

/// Greedy: start with every task on its fastest machine, then repeatedly
/// apply the move with the best cost-saving per unit of path time added,
/// while every path stays within the deadline. The starting point minimizes
/// every path time, so if it misses a deadline the model is infeasible.
pub fn solve_greedy(model: &Model) -> Result<Schedule, SolveError> {
    if model.tasks.is_empty() {
        return Ok(Schedule::empty());
    }
    let mut choice: Vec<usize> = (0..model.tasks.len()).map(|r| fastest_machine(model, r)).collect();
    if !model.is_feasible(&choice) {
        return Err(SolveError::Infeasible);
    }
    let rows_on_path: Vec<Vec<usize>> = {
        let mut by_row = vec![Vec::new(); model.tasks.len()];
        for (pi, p) in model.paths.iter().enumerate() {
            for &r in p {
                by_row[r].push(pi);
            }
        }
        by_row
    };
    let mut path_time: Vec<f64> = model.paths.iter().map(|p| model.path_time(p, &choice)).collect();
    loop {
        let mut best: Option<(f64, usize, usize)> = None;
        for r in 0..model.tasks.len() {
            let cur = choice[r];
            for m in 0..model.machine_count {
                if m == cur {
                    continue;
                }
                let saving = model.costs[r][cur] - model.costs[r][m];
                if saving <= EPS {
                    continue;
                }
                let dt = model.times[r][m] - model.times[r][cur];
                let fits = rows_on_path[r]
                    .iter()
                    .all(|&pi| path_time[pi] + dt <= model.deadline + EPS);
                if !fits {
                    continue;
                }
                let ratio = saving / dt.max(EPS);
                let better = match best {
                    None => true,
                    Some((b, br, bm)) => {
                        ratio > b + EPS
                            || ((ratio - b).abs() <= EPS && (r, m) < (br, bm))
                    }
                };
                if better {
                    best = Some((ratio, r, m));
                }
            }
        }
        let Some((_, r, m)) = best else { break };
        let dt = model.times[r][m] - model.times[r][choice[r]];
        for &pi in &rows_on_path[r] {
            path_time[pi] += dt;
        }
        choice[r] = m;
    }
    Ok(model.to_schedule(&choice))
}

/// Convex lower envelope of one row's (time, cost) options. `segments` lists
/// (cost saved per unit time, time span) pairs in descending slope order;
/// walking them greedily yields the row's continuous cost-vs-time tradeoff.
struct RowHull {
    total_savings: f64,
    segments: Vec<(f64, f64)>,
}

impl RowHull {
    fn build(times: &[f64], costs: &[f64]) -> RowHull {
        let mut pts: Vec<(f64, f64)> =
            times.iter().cloned().zip(costs.iter().cloned()).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut hull: Vec<(f64, f64)> = Vec::new();
        for p in pts {
            if let Some(last) = hull.last() {
                if p.1 >= last.1 {
                    continue;
                }
            }
            while hull.len() >= 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                // Pop when the slope into b is no steeper than the slope out.
                if (b.1 - a.1) * (p.0 - b.0) >= (p.1 - b.1) * (b.0 - a.0) {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let total_savings = hull.first().unwrap().1 - hull.last().unwrap().1;
        let segments = hull
            .windows(2)
            .map(|w| ((w[0].1 - w[1].1) / (w[1].0 - w[0].0), w[1].0 - w[0].0))
            .collect();
        RowHull { total_savings, segments }
    }
}

/// One path used for completion bounds, carrying the hull segments of the
/// rows it owns, merged and sorted by descending savings slope. Each row is
/// owned by at most one path, so the per-path bounds add up.
struct LpPath {
    path_index: usize,
    segments: Vec<(f64, usize, f64)>,
}

/// Rows grouped by shared path constraints: rows on a common path land in
/// the same group. Groups are ordered by their smallest row.
fn row_groups(model: &Model) -> Vec<Vec<usize>> {
    let n = model.tasks.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for p in &model.paths {
        for w in p.windows(2) {
            let a = find(&mut parent, w[0]);
            let b = find(&mut parent, w[1]);
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for r in 0..n {
        let root = find(&mut parent, r);
        by_root.entry(root).or_default().push(r);
    }
    by_root.into_values().collect()
}

impl Model {
    /// Sub-model over a row subset. Every path must lie entirely inside or
    /// outside the subset.
    fn restrict(&self, rows: &[usize]) -> Model {
        let mut index = vec![usize::MAX; self.tasks.len()];
        for (i, &r) in rows.iter().enumerate() {
            index[r] = i;
        }
        let paths = self
            .paths
            .iter()
            .filter(|p| index[p[0]] != usize::MAX)
            .map(|p| p.iter().map(|&r| index[r]).collect())
            .collect();
        Model {
            tasks: rows.iter().map(|&r| self.tasks[r]).collect(),
            times: rows.iter().map(|&r| self.times[r].clone()).collect(),
            costs: rows.iter().map(|&r| self.costs[r].clone()).collect(),
            paths,
            deadline: self.deadline,
            machine_count: self.machine_count,
        }
    }
}

/// Exact solve. Rows that never share a path constraint are independent, so
/// the model splits into its path-connected groups, each solved by branch and
/// bound; costs add and the budget is shared across groups.
pub fn solve_exact(model: &Model, node_budget: u64) -> Result<ExactSolution, SolveError> {
    let groups = row_groups(model);
    if groups.len() <= 1 {
        return solve_exact_connected(model, node_budget);
    }
    let mut schedule = Schedule::empty();
    let mut proven = true;
    let mut nodes = 0u64;
    for rows in &groups {
        let sub = model.restrict(rows);
        let part = solve_exact_connected(&sub, node_budget.saturating_sub(nodes))?;
        schedule.assignment.extend(part.schedule.assignment);
        schedule.cost += part.schedule.cost;
        schedule.feasible &= part.schedule.feasible;
        proven &= part.proven;
        nodes += part.nodes;
    }
    Ok(ExactSolution { schedule, proven, nodes })
}

/// Branch and bound over one path-connected group. Tasks are ordered by
/// descending mean time and machines per task by ascending cost; partial
/// assignments are pruned on cost against the incumbent and on a per-path
/// completion-time lower bound. Each node is also bounded by the relaxed
/// completion cost per path: every unassigned row starts at its fastest hull
/// point and the path's remaining slack buys back cost along the merged hull
/// segments of the rows the path owns. Seeded with the greedy schedule, so a
/// feasible model always yields an incumbent. Exhausting the node budget
/// returns the incumbent unproven.
fn solve_exact_connected(model: &Model, node_budget: u64) -> Result<ExactSolution, SolveError> {
    if model.tasks.is_empty() {
        return Ok(ExactSolution { schedule: Schedule::empty(), proven: true, nodes: 0 });
    }
    let seed = solve_greedy(model)?;

    let n = model.tasks.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let ma: f64 = model.times[a].iter().sum();
        let mb: f64 = model.times[b].iter().sum();
        mb.partial_cmp(&ma).unwrap().then(model.tasks[a].cmp(&model.tasks[b]))
    });
    let machine_order: Vec<Vec<usize>> = (0..n)
        .map(|r| {
            let mut ms: Vec<usize> = (0..model.machine_count).collect();
            ms.sort_by(|&x, &y| {
                model.costs[r][x].partial_cmp(&model.costs[r][y]).unwrap().then(x.cmp(&y))
            });
            ms
        })
        .collect();
    let min_cost: Vec<f64> = (0..n)
        .map(|r| model.costs[r].iter().cloned().fold(f64::INFINITY, f64::min))
        .collect();
    let min_time: Vec<f64> = (0..n)
        .map(|r| model.times[r].iter().cloned().fold(f64::INFINITY, f64::min))
        .collect();
    // Remaining lower bounds over the order suffix.
    let mut cost_suffix = vec![0.0; n + 1];
    for i in (0..n).rev() {
        cost_suffix[i] = cost_suffix[i + 1] + min_cost[order[i]];
    }
    // Per path: minimal completion time of rows not yet assigned.
    let mut path_floor: Vec<f64> =
        model.paths.iter().map(|p| p.iter().map(|&r| min_time[r]).sum()).collect();
    let rows_on_path: Vec<Vec<usize>> = {
        let mut by_row = vec![Vec::new(); n];
        for (pi, p) in model.paths.iter().enumerate() {
            for &r in p {
                by_row[r].push(pi);
            }
        }
        by_row
    };

    let hulls: Vec<RowHull> =
        (0..n).map(|r| RowHull::build(&model.times[r], &model.costs[r])).collect();
    let row_savings: Vec<f64> = hulls.iter().map(|h| h.total_savings).collect();
    // Each path claims the rows no earlier path owns; a path's bound walks
    // only its owned rows, so the per-path bounds add up.
    let mut lp_paths: Vec<LpPath> = Vec::new();
    let mut row_lp: Vec<Option<usize>> = vec![None; n];
    let mut unassigned_savings: Vec<f64> = Vec::new();
    for (pi, p) in model.paths.iter().enumerate() {
        let li = lp_paths.len();
        let mut segments: Vec<(f64, usize, f64)> = Vec::new();
        let mut owned_savings = 0.0;
        for &r in p {
            if row_lp[r].is_some() {
                continue;
            }
            row_lp[r] = Some(li);
            owned_savings += row_savings[r];
            for &(slope, dt) in &hulls[r].segments {
                segments.push((slope, r, dt));
            }
        }
        if segments.is_empty() {
            for &r in p {
                if row_lp[r] == Some(li) {
                    row_lp[r] = None;
                }
            }
            continue;
        }
        segments.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
        lp_paths.push(LpPath { path_index: pi, segments });
        unassigned_savings.push(owned_savings);
    }

    struct Search<'a> {
        model: &'a Model,
        order: &'a [usize],
        machine_order: &'a [Vec<usize>],
        cost_suffix: &'a [f64],
        rows_on_path: &'a [Vec<usize>],
        min_time: &'a [f64],
        lp_paths: &'a [LpPath],
        row_lp: &'a [Option<usize>],
        row_savings: &'a [f64],
        unassigned_savings: Vec<f64>,
        assigned: Vec<bool>,
        path_floor: Vec<f64>,
        choice: Vec<usize>,
        best_choice: Vec<usize>,
        best_cost: f64,
        nodes: u64,
        budget: u64,
        exhausted: bool,
    }

    impl Search<'_> {
        /// Lower bound on what the unassigned rows of one bound path must
        /// cost beyond their individual cost floors.
        fn lp_extra(&self, li: usize) -> f64 {
            let lp = &self.lp_paths[li];
            let mut left = self.model.deadline - self.path_floor[lp.path_index];
            let mut savings = 0.0;
            if left > 0.0 {
                for &(slope, row, dt) in &lp.segments {
                    if self.assigned[row] {
                        continue;
                    }
                    let take = dt.min(left);
                    savings += take * slope;
                    left -= take;
                    if left <= 0.0 {
                        break;
                    }
                }
            }
            (self.unassigned_savings[li] - savings).max(0.0)
        }

        fn dfs(&mut self, depth: usize, cost: f64) {
            self.nodes += 1;
            if self.nodes >= self.budget {
                self.exhausted = true;
                return;
            }
            if depth == self.order.len() {
                if cost < self.best_cost - EPS {
                    self.best_cost = cost;
                    self.best_choice = self.choice.clone();
                }
                return;
            }
            let mut bound = cost + self.cost_suffix[depth];
            for li in 0..self.lp_paths.len() {
                if self.unassigned_savings[li] <= EPS {
                    continue;
                }
                bound += self.lp_extra(li);
                if bound >= self.best_cost - EPS {
                    return;
                }
            }
            let r = self.order[depth];
            for &m in &self.machine_order[r] {
                let next_cost = cost + self.model.costs[r][m];
                if next_cost + self.cost_suffix[depth + 1] >= self.best_cost - EPS {
                    // Machines are cost-ascending, so later ones prune too.
                    break;
                }
                let dt = self.model.times[r][m] - self.min_time[r];
                let fits = self.rows_on_path[r]
                    .iter()
                    .all(|&pi| self.path_floor[pi] + dt <= self.model.deadline + EPS);
                if !fits {
                    continue;
                }
                for &pi in &self.rows_on_path[r] {
                    self.path_floor[pi] += dt;
                }
                self.choice[r] = m;
                self.assigned[r] = true;
                if let Some(li) = self.row_lp[r] {
                    self.unassigned_savings[li] -= self.row_savings[r];
                }
                self.dfs(depth + 1, next_cost);
                if let Some(li) = self.row_lp[r] {
                    self.unassigned_savings[li] += self.row_savings[r];
                }
                self.assigned[r] = false;
                for &pi in &self.rows_on_path[r] {
                    self.path_floor[pi] -= dt;
                }
                if self.exhausted {
                    return;
                }
            }
        }
    }

    let seed_choice: Vec<usize> = (0..n).map(|r| seed.assignment[&model.tasks[r]]).collect();
    let mut search = Search {
        model,
        order: &order,
        machine_order: &machine_order,
        cost_suffix: &cost_suffix,
        rows_on_path: &rows_on_path,
        min_time: &min_time,
        lp_paths: &lp_paths,
        row_lp: &row_lp,
        row_savings: &row_savings,
        unassigned_savings,
        assigned: vec![false; n],
        path_floor: std::mem::take(&mut path_floor),
        choice: vec![0; n],
        best_choice: seed_choice,
        best_cost: seed.cost,
        nodes: 0,
        budget: node_budget,
        exhausted: false,
    };
    search.dfs(0, 0.0);
    let schedule = model.to_schedule(&search.best_choice);
    debug_assert!(schedule.feasible);
    Ok(ExactSolution { schedule, proven: !search.exhausted, nodes: search.nodes })
}

/// Exhaustive oracle: tries every assignment. Guarded by [`BRUTE_FORCE_CAP`]
/// on the assignment count. Returns the cheapest feasible schedule, or
/// `Infeasible` when none exists.
pub fn brute_force(model: &Model) -> Result<Schedule, SolveError> {
    if model.tasks.is_empty() {
        return Ok(Schedule::empty());
    }
    let n = model.tasks.len() as u32;
    let assignments = (model.machine_count as u64).checked_pow(n);
    match assignments {
        Some(a) if a <= BRUTE_FORCE_CAP => {}
        _ => {
            return Err(SolveError::SpaceTooLarge {
                assignments: assignments.unwrap_or(u64::MAX),
                cap: BRUTE_FORCE_CAP,
            })
        }
    }
    let mut choice = vec![0usize; model.tasks.len()];
    let mut best: Option<(f64, Vec<usize>)> = None;
    loop {
        if model.is_feasible(&choice) {
            let cost = model.choice_cost(&choice);
            if best.as_ref().is_none_or(|(b, _)| cost < b - EPS) {
                best = Some((cost, choice.clone()));
            }
        }
        // Odometer step.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return match best {
                    Some((_, c)) => Ok(model.to_schedule(&c)),
                    None => Err(SolveError::Infeasible),
                };
            }
            choice[i] += 1;
            if choice[i] < model.machine_count {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Serializes the model in LP format. Variables are `x_t<task>_m<machine>`,
/// one-hot rows `t_<task>`, deadline rows `p_<index>`. The output is
/// byte-deterministic for a given model.
pub fn export_lp(model: &Model) -> String {
    use std::fmt::Write;
    let var = |r: usize, m: usize| format!("x_t{}_m{}", model.tasks[r], m);
    let mut s = String::from("Minimize\n obj:");
    let mut first = true;
    for r in 0..model.tasks.len() {
        for m in 0..model.machine_count {
            let sep = if first { " " } else { " + " };
            first = false;
            let _ = write!(s, "{sep}{} {}", model.costs[r][m], var(r, m));
        }
    }
    s.push_str("\nSubject To\n");
    for r in 0..model.tasks.len() {
        let terms: Vec<String> = (0..model.machine_count).map(|m| var(r, m)).collect();
        let _ = writeln!(s, " t_{}: {} = 1", model.tasks[r], terms.join(" + "));
    }
    for (pi, p) in model.paths.iter().enumerate() {
        let mut sorted = p.clone();
        sorted.sort_unstable();
        let terms: Vec<String> = sorted
            .iter()
            .flat_map(|&r| {
                (0..model.machine_count).map(move |m| format!("{} {}", model.times[r][m], var(r, m)))
            })
            .collect();
        let _ = writeln!(s, " p_{pi}: {} <= {}", terms.join(" + "), model.deadline);
    }
    s.push_str("Binary\n");
    for r in 0..model.tasks.len() {
        for m in 0..model.machine_count {
            let _ = writeln!(s, " {}", var(r, m));
        }
    }
    s.push_str("End\n");
    s
}
