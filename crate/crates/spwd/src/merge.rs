//! Merging subproblem schedules into one global schedule, and validating a
//! schedule against the original workflow.
//!
//! Boundary vertices are solved in every subproblem that contains them. A
//! disagreement is resolved toward the fastest machine (ties toward the
//! cheaper, then the lower id), which can only shorten paths, so merged
//! schedules inherit feasibility from their parts. Tasks that never received
//! a variable (zero execution time) default to the machine that minimizes
//! the same key.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::decompose::DecompositionPlan;
use crate::model::{MachineId, TaskId, WspInstance, EPS};
use crate::solver::Schedule;

#[derive(Debug, Error)]
pub enum MergeError {
    #[error("expected {expected} subschedules, got {got}")]
    SubscheduleCount { expected: usize, got: usize },
    #[error("task {task} assigned to unknown machine {machine}")]
    UnknownMachine { task: TaskId, machine: MachineId },
}

/// A task assigned differently by overlapping subproblems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collision {
    pub task: TaskId,
    /// All machines proposed for the task, ascending.
    pub proposals: Vec<MachineId>,
    pub chosen: MachineId,
}

#[derive(Clone, Debug)]
pub struct ScheduleValidation {
    /// Root-to-leaf path count of the original workflow (saturating).
    pub path_count: u64,
    pub path_count_saturated: bool,
    /// True when every path was checked individually; false when the count
    /// exceeded the cap and a longest-path bound was used instead.
    pub enumerated: bool,
    pub min_slack: f64,
    /// Paths past the deadline. Under the longest-path bound this is 1 when
    /// the critical path overruns, else 0.
    pub violations: u64,
    pub feasible: bool,
    /// Tightest path, only available when enumerated.
    pub worst_path: Option<Vec<TaskId>>,
}

#[derive(Clone, Debug)]
pub struct MergeReport {
    pub schedule: Schedule,
    pub collisions: Vec<Collision>,
    /// Substitute vertices folded back onto their original task's machine.
    pub substitute_resolutions: usize,
    /// Tasks with no variable in any subproblem, given the default machine.
    pub defaulted: Vec<TaskId>,
    pub validation: ScheduleValidation,
}

/// Machine minimizing (time, cost, id) for the task.
fn preferred_machine(instance: &WspInstance, task: TaskId) -> MachineId {
    let mut best = 0;
    for m in 1..instance.machines.len() {
        let key = (instance.time[task][m], instance.cost[task][m], m);
        let cur = (instance.time[task][best], instance.cost[task][best], best);
        if key < cur {
            best = m;
        }
    }
    best
}

pub fn merge(
    plan: &DecompositionPlan,
    subschedules: &[Schedule],
    instance: &WspInstance,
    path_cap: u64,
) -> Result<MergeReport, MergeError> {
    if subschedules.len() != plan.subproblems.len() {
        return Err(MergeError::SubscheduleCount {
            expected: plan.subproblems.len(),
            got: subschedules.len(),
        });
    }
    let mut proposals: BTreeMap<TaskId, BTreeSet<MachineId>> = BTreeMap::new();
    for s in subschedules {
        for (&t, &m) in &s.assignment {
            if m >= instance.machines.len() {
                return Err(MergeError::UnknownMachine { task: t, machine: m });
            }
            proposals.entry(t).or_default().insert(m);
        }
    }

    let mut assignment = BTreeMap::new();
    let mut collisions = Vec::new();
    let mut defaulted = Vec::new();
    for t in 0..instance.workflow.task_count() {
        let m = match proposals.get(&t) {
            Some(set) if set.len() == 1 => *set.iter().next().unwrap(),
            Some(set) => {
                let chosen = *set
                    .iter()
                    .min_by(|&&a, &&b| {
                        (instance.time[t][a], instance.cost[t][a], a)
                            .partial_cmp(&(instance.time[t][b], instance.cost[t][b], b))
                            .unwrap()
                    })
                    .unwrap();
                collisions.push(Collision {
                    task: t,
                    proposals: set.iter().copied().collect(),
                    chosen,
                });
                chosen
            }
            None => {
                defaulted.push(t);
                preferred_machine(instance, t)
            }
        };
        assignment.insert(t, m);
    }

    let cost = (0..instance.workflow.task_count())
        .map(|t| instance.cost[t][assignment[&t]])
        .sum();
    let validation = validate_schedule(&assignment, instance, path_cap);
    let schedule = Schedule { assignment, cost, feasible: validation.feasible };
    Ok(MergeReport {
        schedule,
        collisions,
        substitute_resolutions: plan.substitutes.len(),
        defaulted,
        validation,
    })
}

/// Checks every root-to-leaf path of the original workflow against the
/// deadline. When the path count exceeds `path_cap` the check falls back to
/// a longest-completion-time bound, which is exact for the minimum slack but
/// cannot count violating paths or name the worst one.
pub fn validate_schedule(
    assignment: &BTreeMap<TaskId, MachineId>,
    instance: &WspInstance,
    path_cap: u64,
) -> ScheduleValidation {
    let wf = &instance.workflow;
    let time = |t: TaskId| instance.time[t][assignment[&t]];
    let (path_count, saturated) = wf.count_root_leaf_paths();

    if !saturated && path_count <= path_cap {
        let mut min_slack = f64::INFINITY;
        let mut violations = 0u64;
        let mut worst: Option<Vec<TaskId>> = None;
        let mut stack: Vec<(TaskId, bool)> =
            wf.roots().iter().rev().map(|&r| (r, false)).collect();
        let mut current: Vec<TaskId> = Vec::new();
        let mut running: Vec<f64> = Vec::new();
        while let Some((t, done)) = stack.pop() {
            if done {
                current.pop();
                running.pop();
                continue;
            }
            let total = running.last().copied().unwrap_or(0.0) + time(t);
            current.push(t);
            running.push(total);
            stack.push((t, true));
            let succ = wf.successors(t);
            if succ.is_empty() {
                let slack = instance.deadline - total;
                if slack < min_slack {
                    min_slack = slack;
                    worst = Some(current.clone());
                }
                if slack < -EPS {
                    violations += 1;
                }
            } else {
                for &s in succ.iter().rev() {
                    stack.push((s, false));
                }
            }
        }
        ScheduleValidation {
            path_count,
            path_count_saturated: false,
            enumerated: true,
            min_slack,
            violations,
            feasible: min_slack >= -EPS,
            worst_path: worst,
        }
    } else {
        // L(t) = time(t) + max over successors, leaves up.
        let order = wf.topological_order().expect("constructed workflows are acyclic");
        let mut longest = vec![0.0f64; wf.task_count()];
        for &t in order.iter().rev() {
            let tail = wf
                .successors(t)
                .iter()
                .map(|&s| longest[s])
                .fold(0.0f64, f64::max);
            longest[t] = time(t) + tail;
        }
        let critical = wf.roots().iter().map(|&r| longest[r]).fold(0.0f64, f64::max);
        let min_slack = instance.deadline - critical;
        ScheduleValidation {
            path_count,
            path_count_saturated: saturated,
            enumerated: false,
            min_slack,
            violations: u64::from(min_slack < -EPS),
            feasible: min_slack >= -EPS,
            worst_path: None,
        }
    }
}

impl MergeReport {
    /// Human-readable merge summary.
    pub fn text_report(&self, instance: &WspInstance) -> String {
        use std::fmt::Write;
        let v = &self.validation;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "merged schedule: cost {} feasible {} collisions {} substitutes {} defaulted {}",
            self.schedule.cost,
            self.schedule.feasible,
            self.collisions.len(),
            self.substitute_resolutions,
            self.defaulted.len(),
        );
        for c in &self.collisions {
            let props: Vec<String> = c
                .proposals
                .iter()
                .map(|&m| instance.machines[m].name.clone())
                .collect();
            let _ = writeln!(
                s,
                "collision: task {} proposals [{}] chosen {}",
                instance.workflow.task(c.task).name,
                props.join(", "),
                instance.machines[c.chosen].name,
            );
        }
        let checked = if v.enumerated {
            format!("all {} paths enumerated", v.path_count)
        } else {
            format!(
                "{}{} paths, longest-path bound",
                v.path_count,
                if v.path_count_saturated { "+" } else { "" }
            )
        };
        let _ = writeln!(
            s,
            "validation: {} min slack {} violations {}",
            checked, v.min_slack, v.violations
        );
        if let Some(worst) = &v.worst_path {
            let names: Vec<String> =
                worst.iter().map(|&t| instance.workflow.task(t).name.clone()).collect();
            let _ = writeln!(s, "tightest path: {}", names.join(" -> "));
        }
        s
    }
}
