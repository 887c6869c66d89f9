//! Deadline-constrained workflow scheduling by series-parallel decomposition.
//!
//! The pipeline: parse a workflow instance, normalize it to a two-terminal
//! DAG, map it onto series-parallel form, build the binary decomposition
//! tree, assign workload weights and split the deadline across the tree,
//! divide it into bounded-size subproblems, solve each one, and merge the
//! subschedules into one feasible, cost-minimized schedule.
//!
//! ```
//! use spwd::model::{make_instance, DeadlineSpec, Machine, Task, Workflow};
//!
//! let tasks = vec![
//!     Task { id: 0, name: "prepare".into(), base_runtime: 2.0 },
//!     Task { id: 1, name: "analyze".into(), base_runtime: 4.0 },
//!     Task { id: 2, name: "report".into(), base_runtime: 2.0 },
//! ];
//! let workflow = Workflow::new(tasks, vec![(0, 1), (1, 2)]).unwrap();
//! let instance = make_instance(
//!     workflow,
//!     Machine::default_pool(),
//!     1.0,
//!     DeadlineSpec::CriticalPath,
//! ).unwrap();
//!
//! let plan = spwd::decompose::plan(&instance, spwd::decompose::SizeSpec::Percent(50.0)).unwrap();
//! let report = spwd::pipeline::schedule(&instance, &plan, spwd::solver::SolverChoice::Exact).unwrap();
//! assert!(report.schedule.feasible);
//! ```

pub mod decompose;
pub mod generate;
pub mod merge;
pub mod model;
pub mod pipeline;
pub mod solver;
pub mod ttsp;
pub mod wfcommons;
