//! Workflow instances: tasks, machines, and the derived time/cost matrices.
//!
//! A [`Workflow`] is a DAG of tasks with per-task base runtimes measured on a
//! reference machine. Pairing it with a machine pool yields a [`WspInstance`]
//! whose matrices hold the execution time and cost of every (task, machine)
//! combination. All times are seconds, speeds are GHz, prices are per second.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Comparison tolerance for deadline and cost arithmetic, used everywhere a
/// feasibility or equality check touches floating-point sums.
pub const EPS: f64 = 1e-9;

pub type TaskId = usize;
pub type MachineId = usize;

#[derive(Clone, Debug, PartialEq)]
pub struct Task {
    pub id: TaskId,
    pub name: String,
    /// Runtime in seconds on a machine running at the reference speed.
    pub base_runtime: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Machine {
    #[serde(skip, default)]
    pub id: MachineId,
    pub name: String,
    pub speed_ghz: f64,
    pub price_per_second: f64,
    pub core_count: u32,
}

impl Machine {
    /// Five-machine reference pool: speeds 1.0 to 2.0 GHz in 0.25 steps, price
    /// equal to the square of the speed, five cores each.
    pub fn default_pool() -> Vec<Machine> {
        let speeds = [1.0, 1.25, 1.5, 1.75, 2.0];
        speeds
            .iter()
            .enumerate()
            .map(|(id, &speed_ghz)| Machine {
                id,
                name: format!("machine_{}", id + 1),
                speed_ghz,
                price_per_second: speed_ghz * speed_ghz,
                core_count: 5,
            })
            .collect()
    }
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("malformed workflow document: {0}")]
    Malformed(String),
    #[error("task {referent:?} references unknown task {unknown:?}")]
    UnknownTask { referent: String, unknown: String },
    #[error("duplicate task name {0:?}")]
    DuplicateTask(String),
    #[error("task {0:?} has negative runtime")]
    NegativeRuntime(String),
    #[error("workflow contains a cycle")]
    Cycle,
    #[error("invalid workflow: {0}")]
    InvalidWorkflow(String),
    #[error("machine pool is empty")]
    EmptyMachinePool,
    #[error("machine {0:?} must have positive speed")]
    NonPositiveSpeed(String),
    #[error("machine {0:?} must have non-negative price")]
    NegativePrice(String),
    #[error("reference speed must be positive, got {0}")]
    NonPositiveReferenceSpeed(f64),
    #[error("deadline must be positive, got {0}")]
    NonPositiveDeadline(f64),
}

/// Immutable task DAG. Task ids are dense indices into `tasks`; adjacency is
/// kept in both directions since normalization and validation need roots as
/// well as leaves.
#[derive(Clone, Debug)]
pub struct Workflow {
    tasks: Vec<Task>,
    edges: Vec<(TaskId, TaskId)>,
    succ: Vec<Vec<TaskId>>,
    pred: Vec<Vec<TaskId>>,
}

impl Workflow {
    /// Builds a workflow, enforcing dense ids, edge validity, no self-loops,
    /// no duplicate edges, and acyclicity.
    pub fn new(tasks: Vec<Task>, mut edges: Vec<(TaskId, TaskId)>) -> Result<Self, ModelError> {
        for (i, t) in tasks.iter().enumerate() {
            if t.id != i {
                return Err(ModelError::InvalidWorkflow(format!(
                    "task {:?} has id {} at position {}",
                    t.name, t.id, i
                )));
            }
            if t.base_runtime < 0.0 || !t.base_runtime.is_finite() {
                return Err(ModelError::NegativeRuntime(t.name.clone()));
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(ModelError::InvalidWorkflow(format!(
                    "duplicate edge {} -> {}",
                    w[0].0, w[0].1
                )));
            }
        }
        let n = tasks.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(ModelError::InvalidWorkflow(format!(
                    "edge {} -> {} references a task id out of range",
                    a, b
                )));
            }
            if a == b {
                return Err(ModelError::InvalidWorkflow(format!("self-loop on task {}", a)));
            }
            succ[a].push(b);
            pred[b].push(a);
        }
        let wf = Workflow { tasks, edges, succ, pred };
        if wf.topological_order().is_none() {
            return Err(ModelError::Cycle);
        }
        Ok(wf)
    }

    pub fn task_count(&self) -> usize {
        self.tasks.len()
    }

    pub fn tasks(&self) -> &[Task] {
        &self.tasks
    }

    pub fn task(&self, id: TaskId) -> &Task {
        &self.tasks[id]
    }

    pub fn edges(&self) -> &[(TaskId, TaskId)] {
        &self.edges
    }

    pub fn successors(&self, id: TaskId) -> &[TaskId] {
        &self.succ[id]
    }

    pub fn predecessors(&self, id: TaskId) -> &[TaskId] {
        &self.pred[id]
    }

    /// Tasks with no predecessors, ascending.
    pub fn roots(&self) -> Vec<TaskId> {
        (0..self.tasks.len()).filter(|&t| self.pred[t].is_empty()).collect()
    }

    /// Tasks with no successors, ascending.
    pub fn leaves(&self) -> Vec<TaskId> {
        (0..self.tasks.len()).filter(|&t| self.succ[t].is_empty()).collect()
    }

    /// Kahn order; `None` if a cycle prevents one.
    pub fn topological_order(&self) -> Option<Vec<TaskId>> {
        let n = self.tasks.len();
        let mut indeg: Vec<usize> = (0..n).map(|t| self.pred[t].len()).collect();
        let mut queue: Vec<TaskId> = (0..n).filter(|&t| indeg[t] == 0).collect();
        let mut order = Vec::with_capacity(n);
        let mut head = 0;
        while head < queue.len() {
            let t = queue[head];
            head += 1;
            order.push(t);
            for &s in &self.succ[t] {
                indeg[s] -= 1;
                if indeg[s] == 0 {
                    queue.push(s);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Root-to-leaf path count, saturating. The flag reports saturation.
    pub fn count_root_leaf_paths(&self) -> (u64, bool) {
        let order = self.topological_order().expect("constructed workflows are acyclic");
        let mut counts = vec![0u64; self.tasks.len()];
        let mut saturated = false;
        for &t in order.iter().rev() {
            counts[t] = if self.succ[t].is_empty() {
                1
            } else {
                self.succ[t].iter().fold(0u64, |acc, &s| {
                    let (sum, over) = acc.overflowing_add(counts[s]);
                    saturated |= over;
                    if over { u64::MAX } else { sum }
                })
            };
        }
        let mut total = 0u64;
        for t in self.roots() {
            let (sum, over) = total.overflowing_add(counts[t]);
            saturated |= over;
            total = if over { u64::MAX } else { sum };
        }
        (total, saturated)
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            task_count: self.tasks.len(),
            edge_count: self.edges.len(),
            roots: self.roots(),
            leaves: self.leaves(),
            findings: Vec::new(),
        }
    }
}

/// Diagnostics for a parsed or hand-built workflow. `findings` is empty for a
/// structurally valid DAG; [`validate_parts`] fills it for raw inputs that
/// `Workflow::new` would reject.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub task_count: usize,
    pub edge_count: usize,
    pub roots: Vec<TaskId>,
    pub leaves: Vec<TaskId>,
    pub findings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }
}

/// Validates raw parts without constructing a [`Workflow`], so mistakes like
/// an edge to a nonexistent id are reported rather than rejected opaquely.
pub fn validate_parts(tasks: &[Task], edges: &[(TaskId, TaskId)]) -> ValidationReport {
    let mut findings = Vec::new();
    for (i, t) in tasks.iter().enumerate() {
        if t.id != i {
            findings.push(format!("task {:?} has id {} at position {}", t.name, t.id, i));
        }
        if t.base_runtime < 0.0 {
            findings.push(format!("task {:?} has negative runtime", t.name));
        }
    }
    let n = tasks.len();
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            findings.push(format!("duplicate edge {} -> {}", w[0].0, w[0].1));
        }
    }
    for &(a, b) in edges {
        if a >= n || b >= n {
            findings.push(format!("edge {} -> {} references a task id out of range", a, b));
        } else if a == b {
            findings.push(format!("self-loop on task {}", a));
        }
    }
    let (roots, leaves, acyclic) = if findings.is_empty() {
        let wf = Workflow::new(tasks.to_vec(), edges.to_vec());
        match wf {
            Ok(wf) => (wf.roots(), wf.leaves(), true),
            Err(ModelError::Cycle) => (Vec::new(), Vec::new(), false),
            Err(e) => {
                findings.push(e.to_string());
                (Vec::new(), Vec::new(), true)
            }
        }
    } else {
        (Vec::new(), Vec::new(), true)
    };
    if !acyclic {
        findings.push("workflow contains a cycle".to_string());
    }
    ValidationReport {
        task_count: tasks.len(),
        edge_count: edges.len(),
        roots,
        leaves,
        findings,
    }
}

/// How the instance deadline is chosen.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DeadlineSpec {
    /// Explicit deadline in seconds.
    Seconds(f64),
    /// Critical-path value: the longest root-to-leaf path where each task
    /// contributes its mean execution time across the machine pool.
    CriticalPath,
}

/// A scheduling problem: workflow, machine pool, derived matrices, deadline.
#[derive(Clone, Debug)]
pub struct WspInstance {
    pub workflow: Workflow,
    pub machines: Vec<Machine>,
    /// `time[t][m]`: seconds task `t` runs on machine `m`.
    pub time: Vec<Vec<f64>>,
    /// `cost[t][m] = time[t][m] * price(m)`.
    pub cost: Vec<Vec<f64>>,
    pub deadline: f64,
    pub reference_speed: f64,
}

impl WspInstance {
    /// Mean execution time of a task across the pool, in machine-id order.
    pub fn mean_time(&self, t: TaskId) -> f64 {
        let row = &self.time[t];
        row.iter().sum::<f64>() / row.len() as f64
    }
}

/// Builds an instance from a workflow and machine pool. Execution time scales
/// inversely with machine speed: `time = base_runtime * reference_speed / speed`.
pub fn make_instance(
    workflow: Workflow,
    mut machines: Vec<Machine>,
    reference_speed: f64,
    deadline: DeadlineSpec,
) -> Result<WspInstance, ModelError> {
    if machines.is_empty() {
        return Err(ModelError::EmptyMachinePool);
    }
    if reference_speed <= 0.0 || !reference_speed.is_finite() {
        return Err(ModelError::NonPositiveReferenceSpeed(reference_speed));
    }
    for (i, m) in machines.iter_mut().enumerate() {
        m.id = i;
        if m.speed_ghz <= 0.0 || !m.speed_ghz.is_finite() {
            return Err(ModelError::NonPositiveSpeed(m.name.clone()));
        }
        if m.price_per_second < 0.0 || !m.price_per_second.is_finite() {
            return Err(ModelError::NegativePrice(m.name.clone()));
        }
    }
    let time: Vec<Vec<f64>> = workflow
        .tasks()
        .iter()
        .map(|t| {
            machines
                .iter()
                .map(|m| t.base_runtime * reference_speed / m.speed_ghz)
                .collect()
        })
        .collect();
    let cost: Vec<Vec<f64>> = time
        .iter()
        .map(|row| row.iter().zip(&machines).map(|(&tt, m)| tt * m.price_per_second).collect())
        .collect();
    let mut instance = WspInstance {
        workflow,
        machines,
        time,
        cost,
        deadline: f64::NAN,
        reference_speed,
    };
    let deadline = match deadline {
        DeadlineSpec::Seconds(d) => d,
        DeadlineSpec::CriticalPath => default_deadline(&instance),
    };
    if deadline <= 0.0 || !deadline.is_finite() {
        return Err(ModelError::NonPositiveDeadline(deadline));
    }
    instance.deadline = deadline;
    Ok(instance)
}

/// Critical-path value of the instance: the maximum over root-to-leaf paths of
/// the summed per-task mean execution times. Longest-path DP over the DAG.
pub fn default_deadline(instance: &WspInstance) -> f64 {
    let wf = &instance.workflow;
    let order = wf.topological_order().expect("workflow is acyclic by construction");
    let mut dp = vec![0.0f64; wf.task_count()];
    for &t in order.iter().rev() {
        let tail = wf
            .successors(t)
            .iter()
            .map(|&s| dp[s])
            .fold(0.0f64, f64::max);
        dp[t] = instance.mean_time(t) + tail;
    }
    wf.roots().into_iter().map(|r| dp[r]).fold(0.0f64, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn task(id: usize, name: &str, rt: f64) -> Task {
        Task { id, name: name.to_string(), base_runtime: rt }
    }

    /// A -> {B, C} -> D with runtimes 2, 4, 3, 2.
    pub(crate) fn diamond() -> Workflow {
        Workflow::new(
            vec![task(0, "A", 2.0), task(1, "B", 4.0), task(2, "C", 3.0), task(3, "D", 2.0)],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    fn two_machine_pool() -> Vec<Machine> {
        vec![
            Machine { id: 0, name: "m1".into(), speed_ghz: 1.0, price_per_second: 1.0, core_count: 5 },
            Machine { id: 1, name: "m2".into(), speed_ghz: 2.0, price_per_second: 4.0, core_count: 5 },
        ]
    }

    #[test]
    fn matrices_scale_with_speed_and_price() {
        let inst =
            make_instance(diamond(), two_machine_pool(), 1.0, DeadlineSpec::Seconds(10.0)).unwrap();
        for t in 0..4 {
            for m in 0..2 {
                let base = inst.workflow.task(t).base_runtime;
                let expect_t = base * 1.0 / inst.machines[m].speed_ghz;
                assert_eq!(inst.time[t][m], expect_t);
                assert_eq!(inst.cost[t][m], expect_t * inst.machines[m].price_per_second);
            }
        }
    }

    #[test]
    fn critical_path_deadline_matches_hand_enumeration() {
        // Mean time factor over speeds {1, 2} is (1 + 0.5) / 2 = 0.75 per
        // base second. Heaviest path A -> B -> D sums 8 base seconds.
        let inst = make_instance(diamond(), two_machine_pool(), 1.0, DeadlineSpec::CriticalPath)
            .unwrap();
        assert!((inst.deadline - 6.0).abs() < EPS);
    }

    #[test]
    fn critical_path_on_single_task_is_its_mean_time() {
        let wf = Workflow::new(vec![task(0, "only", 7.0)], vec![]).unwrap();
        let machines = vec![Machine {
            id: 0,
            name: "m".into(),
            speed_ghz: 1.0,
            price_per_second: 1.0,
            core_count: 1,
        }];
        let inst = make_instance(wf, machines, 1.0, DeadlineSpec::CriticalPath).unwrap();
        assert_eq!(inst.deadline, 7.0);
    }

    #[test]
    fn critical_path_on_chain_sums_all_means() {
        let tasks: Vec<Task> = (0..5).map(|i| task(i, &format!("t{i}"), 2.0)).collect();
        let edges = (0..4).map(|i| (i, i + 1)).collect();
        let wf = Workflow::new(tasks, edges).unwrap();
        let inst = make_instance(wf, two_machine_pool(), 1.0, DeadlineSpec::CriticalPath).unwrap();
        assert!((inst.deadline - 5.0 * 2.0 * 0.75).abs() < EPS);
    }

    #[test]
    fn rejects_cycles_and_bad_edges() {
        let tasks = vec![task(0, "A", 1.0), task(1, "B", 1.0)];
        assert!(matches!(
            Workflow::new(tasks.clone(), vec![(0, 1), (1, 0)]),
            Err(ModelError::Cycle)
        ));
        assert!(Workflow::new(tasks.clone(), vec![(0, 5)]).is_err());
        assert!(Workflow::new(tasks.clone(), vec![(0, 0)]).is_err());
        assert!(Workflow::new(tasks, vec![(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn validate_parts_reports_out_of_range_edge() {
        let tasks = vec![task(0, "A", 1.0)];
        let report = validate_parts(&tasks, &[(0, 3)]);
        assert!(!report.is_valid());
        assert!(report.findings[0].contains("out of range"));
    }

    #[test]
    fn empty_machine_pool_is_an_error() {
        assert!(matches!(
            make_instance(diamond(), vec![], 1.0, DeadlineSpec::Seconds(1.0)),
            Err(ModelError::EmptyMachinePool)
        ));
    }

    #[test]
    fn non_positive_deadline_is_an_error() {
        assert!(matches!(
            make_instance(diamond(), two_machine_pool(), 1.0, DeadlineSpec::Seconds(0.0)),
            Err(ModelError::NonPositiveDeadline(_))
        ));
    }

    #[test]
    fn default_pool_prices_are_speed_squared() {
        let pool = Machine::default_pool();
        assert_eq!(pool.len(), 5);
        let speeds: Vec<f64> = pool.iter().map(|m| m.speed_ghz).collect();
        assert_eq!(speeds, vec![1.0, 1.25, 1.5, 1.75, 2.0]);
        let prices: Vec<f64> = pool.iter().map(|m| m.price_per_second).collect();
        assert_eq!(prices, vec![1.0, 1.5625, 2.25, 3.0625, 4.0]);
        assert!(pool.iter().all(|m| m.core_count == 5));
    }
}
