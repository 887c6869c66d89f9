//! WfCommons instance I/O.
//!
//! Accepts both common layouts: the older one with the task list directly
//! under `workflow.tasks`, and the newer one under
//! `workflow.specification.tasks`. Tasks carry `runtimeInSeconds` (or
//! `runtime`) plus `children`/`parents` name lists; unknown fields are
//! ignored. The serializer emits the `specification` layout and round-trips
//! task count, edge set, and runtimes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::model::{Machine, ModelError, Task, TaskId, Workflow};

#[derive(Deserialize)]
struct Document {
    workflow: WorkflowSection,
}

#[derive(Deserialize)]
struct WorkflowSection {
    #[serde(default)]
    specification: Option<SpecificationSection>,
    #[serde(default)]
    tasks: Option<Vec<TaskEntry>>,
}

#[derive(Deserialize)]
struct SpecificationSection {
    tasks: Vec<TaskEntry>,
}

#[derive(Deserialize)]
struct TaskEntry {
    name: String,
    #[serde(rename = "runtimeInSeconds", alias = "runtime")]
    runtime_in_seconds: Option<f64>,
    #[serde(default)]
    children: Vec<String>,
    #[serde(default)]
    parents: Vec<String>,
}

/// Parses a WfCommons JSON document into a [`Workflow`]. Tasks are indexed in
/// first-seen order; edges come from both `children` and `parents` relations,
/// deduplicated.
pub fn parse_wfcommons(bytes: &[u8]) -> Result<Workflow, ModelError> {
    let doc: Document = serde_json::from_slice(bytes)
        .map_err(|e| ModelError::Malformed(e.to_string()))?;
    let entries = match (doc.workflow.specification, doc.workflow.tasks) {
        (Some(spec), _) => spec.tasks,
        (None, Some(tasks)) => tasks,
        (None, None) => {
            return Err(ModelError::Malformed(
                "no task list under workflow.specification.tasks or workflow.tasks".into(),
            ))
        }
    };
    if entries.is_empty() {
        return Err(ModelError::Malformed("task list is empty".into()));
    }

    let mut index: HashMap<&str, TaskId> = HashMap::with_capacity(entries.len());
    for (i, e) in entries.iter().enumerate() {
        if index.insert(e.name.as_str(), i).is_some() {
            return Err(ModelError::DuplicateTask(e.name.clone()));
        }
    }
    let mut tasks = Vec::with_capacity(entries.len());
    let mut edges = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        let runtime = e.runtime_in_seconds.ok_or_else(|| {
            ModelError::Malformed(format!("task {:?} has no runtimeInSeconds/runtime", e.name))
        })?;
        if runtime < 0.0 || !runtime.is_finite() {
            return Err(ModelError::NegativeRuntime(e.name.clone()));
        }
        tasks.push(Task { id: i, name: e.name.clone(), base_runtime: runtime });
        let resolve = |other: &str| {
            index.get(other).copied().ok_or_else(|| ModelError::UnknownTask {
                referent: e.name.clone(),
                unknown: other.to_string(),
            })
        };
        for child in &e.children {
            edges.push((i, resolve(child)?));
        }
        for parent in &e.parents {
            edges.push((resolve(parent)?, i));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Workflow::new(tasks, edges)
}

/// Serializes a workflow back to WfCommons JSON (specification layout).
pub fn serialize_wfcommons(workflow: &Workflow, name: &str) -> String {
    let tasks: Vec<serde_json::Value> = workflow
        .tasks()
        .iter()
        .map(|t| {
            let children: Vec<&str> =
                workflow.successors(t.id).iter().map(|&s| workflow.task(s).name.as_str()).collect();
            let parents: Vec<&str> =
                workflow.predecessors(t.id).iter().map(|&p| workflow.task(p).name.as_str()).collect();
            json!({
                "name": t.name,
                "runtimeInSeconds": t.base_runtime,
                "children": children,
                "parents": parents,
            })
        })
        .collect();
    let doc = json!({
        "name": name,
        "schemaVersion": "1.5",
        "workflow": { "specification": { "tasks": tasks } }
    });
    serde_json::to_string_pretty(&doc).expect("json value serializes")
}

#[derive(Serialize, Deserialize)]
struct MachinePoolFile {
    machines: Vec<Machine>,
}

/// Parses a machine pool: either `{"machines": [...]}` or a bare array of
/// machine objects with `name`, `speed_ghz`, `price_per_second`, `core_count`.
pub fn parse_machine_pool(bytes: &[u8]) -> Result<Vec<Machine>, ModelError> {
    let mut machines = serde_json::from_slice::<MachinePoolFile>(bytes)
        .map(|f| f.machines)
        .or_else(|_| serde_json::from_slice::<Vec<Machine>>(bytes))
        .map_err(|e| ModelError::Malformed(e.to_string()))?;
    if machines.is_empty() {
        return Err(ModelError::EmptyMachinePool);
    }
    for (i, m) in machines.iter_mut().enumerate() {
        m.id = i;
    }
    Ok(machines)
}

/// Serializes a machine pool to the `{"machines": [...]}` layout.
pub fn serialize_machine_pool(machines: &[Machine]) -> String {
    serde_json::to_string_pretty(&MachinePoolFile { machines: machines.to_vec() })
        .expect("machine pool serializes")
}
