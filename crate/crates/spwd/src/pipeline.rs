//! End-to-end driver: solve every subproblem of a plan and merge the
//! results into one validated schedule.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use thiserror::Error;

use crate::decompose::DecompositionPlan;
use crate::merge::{merge, MergeError, MergeReport};
use crate::model::WspInstance;
use crate::solver::{
    build_model, solve_exact, solve_greedy, Schedule, SolveError, SolverChoice,
    DEFAULT_NODE_BUDGET,
};
use crate::ttsp::DEFAULT_PATH_CAP;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("subproblem {index}: {source}")]
    Subproblem {
        index: usize,
        #[source]
        source: SolveError,
    },
    #[error(transparent)]
    Merge(#[from] MergeError),
}

/// Per-subproblem solve statistics.
#[derive(Clone, Debug)]
pub struct SubReport {
    pub task_count: usize,
    pub variables: usize,
    pub constraints: usize,
    pub cost: f64,
    /// Branch-and-bound nodes; zero for the greedy solver.
    pub nodes: u64,
    /// False when the node budget cut the search short.
    pub proven: bool,
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub schedule: Schedule,
    pub merge: MergeReport,
    pub subreports: Vec<SubReport>,
    /// True when every subproblem was solved to proven optimality.
    pub proven: bool,
}

type SolvedSub = Result<(Schedule, SubReport), PipelineError>;

/// Solves with default caps on one thread.
pub fn schedule(
    instance: &WspInstance,
    plan: &DecompositionPlan,
    choice: SolverChoice,
) -> Result<PipelineReport, PipelineError> {
    schedule_with(instance, plan, choice, 1, DEFAULT_NODE_BUDGET, DEFAULT_PATH_CAP)
}

/// Solves the subproblems (optionally across `jobs` threads) and merges.
/// The result is identical for any thread count: workers pull indexed items
/// from a shared queue and write into their own slot.
pub fn schedule_with(
    instance: &WspInstance,
    plan: &DecompositionPlan,
    choice: SolverChoice,
    jobs: usize,
    node_budget: u64,
    path_cap: u64,
) -> Result<PipelineReport, PipelineError> {
    let n = plan.subproblems.len();
    let jobs = jobs.max(1).min(n.max(1));
    let slots: Mutex<Vec<Option<SolvedSub>>> = Mutex::new((0..n).map(|_| None).collect());
    let next = AtomicUsize::new(0);

    let solve_one = |index: usize| -> SolvedSub {
        let sp = &plan.subproblems[index];
        let wrap = |e: SolveError| PipelineError::Subproblem { index, source: e };
        let model = build_model(sp, instance, path_cap).map_err(wrap)?;
        let (schedule, nodes, proven) = match choice {
            SolverChoice::Exact => {
                let s = solve_exact(&model, node_budget).map_err(wrap)?;
                (s.schedule, s.nodes, s.proven)
            }
            SolverChoice::Greedy => (solve_greedy(&model).map_err(wrap)?, 0, false),
        };
        let (variables, constraints) = model.problem_size();
        let report = SubReport {
            task_count: model.tasks.len(),
            variables,
            constraints,
            cost: schedule.cost,
            nodes,
            proven,
        };
        Ok((schedule, report))
    };

    if jobs <= 1 {
        let mut slots = slots.lock().unwrap();
        for i in 0..n {
            slots[i] = Some(solve_one(i));
        }
    } else {
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= n {
                        break;
                    }
                    let result = solve_one(i);
                    slots.lock().unwrap()[i] = Some(result);
                });
            }
        });
    }

    let mut schedules = Vec::with_capacity(n);
    let mut subreports = Vec::with_capacity(n);
    for slot in slots.into_inner().unwrap() {
        let (s, r) = slot.expect("every index was visited")?;
        schedules.push(s);
        subreports.push(r);
    }
    let merged = merge(plan, &schedules, instance, path_cap)?;
    let proven = subreports.iter().all(|r| r.proven);
    Ok(PipelineReport { schedule: merged.schedule.clone(), merge: merged, subreports, proven })
}
