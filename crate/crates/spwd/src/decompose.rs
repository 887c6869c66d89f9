//! Tree weighting, deadline distribution, and division into subproblems.
//!
//! Weights summarize workload: a vertex weighs its mean execution time across
//! the machine pool (zero for synthetic and substitute vertices), an edge
//! weighs the sum of its endpoints, and internal nodes combine children so
//! that the root weight equals the heaviest source-to-sink path. Series nodes
//! subtract the connector's weight so shared work is counted once; parallel
//! nodes take the max.
//!
//! The deadline flows top-down: series children split their parent's
//! deadline proportionally to weight, parallel children inherit it. Before
//! distribution, every series node above the division frontier whose
//! connector carries real workload is rewritten with a substitute vertex so
//! the connector's execution time is budgeted on exactly one side of the
//! split.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::model::{TaskId, WspInstance};
use crate::ttsp::{
    map_to_ttsp, normalize_two_terminal, recognize_and_build_tree, NodeId, SpNode, SpNodeKind,
    SpTree, TtspError, TtspGraph, VertexId, VertexKind,
};

/// Subproblem size limit: an absolute vertex count or a percentage of the
/// mapped graph's vertex count (ceiling, floor of two).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SizeSpec {
    Absolute(usize),
    Percent(f64),
}

impl SizeSpec {
    pub fn resolve(self, mapped_vertices: usize) -> Result<usize, DecomposeError> {
        match self {
            SizeSpec::Absolute(s) => {
                if s < 2 {
                    return Err(DecomposeError::InvalidSubgraphSize(format!(
                        "size limit must be at least 2 vertices, got {s}"
                    )));
                }
                Ok(s)
            }
            SizeSpec::Percent(p) => {
                if !(p > 0.0 && p <= 100.0) {
                    return Err(DecomposeError::InvalidSubgraphSize(format!(
                        "percentage must be in (0, 100], got {p}"
                    )));
                }
                Ok(((p / 100.0 * mapped_vertices as f64).ceil() as usize).max(2))
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error(transparent)]
    Ttsp(#[from] TtspError),
    #[error("invalid subgraph size: {0}")]
    InvalidSubgraphSize(String),
}

/// One bounded piece of the decomposition. The subgraph and tree use local
/// dense ids; `global_vertices[local]` maps back to the plan graph, and task
/// ids inside [`VertexKind`] always refer to the original workflow.
#[derive(Clone, Debug)]
pub struct SubProblem {
    /// Frontier node in the plan's tree.
    pub node: NodeId,
    pub subgraph: TtspGraph,
    pub tree: SpTree,
    pub deadline: f64,
    pub weight: f64,
    /// Global vertex ids shared with at least one other subproblem.
    pub boundary: Vec<VertexId>,
    pub global_vertices: Vec<VertexId>,
}

#[derive(Clone, Debug)]
pub struct DecompositionPlan {
    /// Mapped graph, including substitute vertices added during modification.
    pub graph: TtspGraph,
    pub tree: SpTree,
    pub frontier: Vec<NodeId>,
    pub subproblems: Vec<SubProblem>,
    /// Substitute vertex id paired with the task it stands in for.
    pub substitutes: Vec<(VertexId, TaskId)>,
    /// Resolved absolute size limit.
    pub size_limit: usize,
}

/// Mean execution time for task vertices, zero for synthetic and substitute
/// vertices.
pub fn vertex_weight(graph: &TtspGraph, v: VertexId, instance: &WspInstance) -> f64 {
    match graph.kind(v) {
        VertexKind::Task(t) => instance.mean_time(t),
        VertexKind::Synthetic | VertexKind::Substitute(_) => 0.0,
    }
}

/// Bottom-up weight pass. Leaf weight is the sum of its endpoints' weights;
/// series subtracts the connector; parallel takes the max. The root weight
/// equals the maximum path weight of the graph.
pub fn assign_weights(tree: &mut SpTree, graph: &TtspGraph, instance: &WspInstance) {
    for id in tree.post_order() {
        let weight = match tree.node(id).kind {
            SpNodeKind::Leaf { edge } => {
                let e = graph.edge(edge);
                vertex_weight(graph, e.from, instance) + vertex_weight(graph, e.to, instance)
            }
            SpNodeKind::Series { left, right, connector } => {
                tree.node(left).weight + tree.node(right).weight
                    - vertex_weight(graph, connector, instance)
            }
            SpNodeKind::Parallel { left, right } => {
                tree.node(left).weight.max(tree.node(right).weight)
            }
        };
        tree.node_mut(id).weight = weight;
    }
}

/// Top-down frontier scan: a node small enough to fit the limit joins the
/// frontier and its subtree is cut. Leaves cover two vertices, so with a
/// limit of at least two the scan always terminates on or above them.
pub fn divide(tree: &SpTree, size_limit: usize) -> Vec<NodeId> {
    debug_assert!(size_limit >= 2);
    let mut frontier = Vec::new();
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        if tree.node(id).vertex_count() <= size_limit {
            frontier.push(id);
            continue;
        }
        let (l, r) = tree
            .children(id)
            .expect("a leaf covers two vertices and the limit is at least two");
        stack.push(r);
        stack.push(l);
    }
    frontier
}

/// Rewrites every series node strictly above the frontier whose connector
/// carries real workload: the connector `v` keeps its incoming edges and the
/// left side; a zero-weight substitute `v'` takes over `v`'s outgoing edges
/// and every reference to `v` in the right subtree; a bridge edge `v -> v'`
/// keeps the precedence. After this, series deadline splits above the
/// frontier never budget a shared vertex twice. Returns the substitute map.
///
/// Weights and derived tree data are stale afterwards; the caller recomputes
/// them.
pub fn modify_series_nodes(
    tree: &mut SpTree,
    graph: &mut TtspGraph,
    frontier: &[NodeId],
    instance: &WspInstance,
) -> Vec<(VertexId, TaskId)> {
    let is_frontier: Vec<bool> = {
        let mut f = vec![false; tree.len()];
        for &id in frontier {
            f[id] = true;
        }
        f
    };
    let mut substitutes = Vec::new();
    // Parents before children: an ancestor's rename can touch a descendant's
    // terminals, never its connector.
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        if is_frontier[id] {
            continue;
        }
        if let SpNodeKind::Series { right, connector: v, .. } = tree.node(id).kind {
            if vertex_weight(graph, v, instance) > 0.0 {
                let task = graph
                    .kind(v)
                    .task_id()
                    .expect("only task vertices carry weight");
                let sub = graph.add_vertex(VertexKind::Substitute(task));
                for ge in tree.subtree_edges(right) {
                    if graph.edge(ge).from == v {
                        graph.edge_mut(ge).from = sub;
                    }
                }
                debug_assert!(
                    graph.edges().iter().all(|e| e.from != v),
                    "a series connector's outgoing edges all lie in the right subtree"
                );
                graph.add_edge(v, sub);
                for nid in tree.subtree_nodes(right) {
                    let n = tree.node_mut(nid);
                    if n.source == v {
                        n.source = sub;
                    }
                    if n.sink == v {
                        n.sink = sub;
                    }
                    if let SpNodeKind::Series { connector, .. } = &mut n.kind {
                        debug_assert_ne!(*connector, v, "v has no incoming edges on the right");
                        if *connector == v {
                            *connector = sub;
                        }
                    }
                }
                if let SpNodeKind::Series { connector, .. } = &mut tree.node_mut(id).kind {
                    *connector = sub;
                }
                substitutes.push((sub, task));
            }
        }
        if let Some((l, r)) = tree.children(id) {
            stack.push(r);
            stack.push(l);
        }
    }
    substitutes
}

/// Top-down deadline split. Series children receive shares proportional to
/// their weights (half each when both weigh zero); parallel children inherit
/// the parent's deadline unchanged.
pub fn distribute_deadline(tree: &mut SpTree, deadline: f64) {
    tree.node_mut(tree.root()).deadline = Some(deadline);
    for id in tree.pre_order() {
        let d = tree.node(id).deadline.expect("parents are visited first");
        match tree.node(id).kind {
            SpNodeKind::Leaf { .. } => {}
            SpNodeKind::Series { left, right, .. } => {
                let wl = tree.node(left).weight;
                let wr = tree.node(right).weight;
                let (dl, dr) = if wl + wr > 0.0 {
                    (d * wl / (wl + wr), d * wr / (wl + wr))
                } else {
                    (d / 2.0, d / 2.0)
                };
                tree.node_mut(left).deadline = Some(dl);
                tree.node_mut(right).deadline = Some(dr);
            }
            SpNodeKind::Parallel { left, right } => {
                tree.node_mut(left).deadline = Some(d);
                tree.node_mut(right).deadline = Some(d);
            }
        }
    }
}

/// Full decomposition: normalize, map, recognize, weight, divide, modify,
/// re-weight, distribute the deadline, and extract the subproblems.
pub fn plan(instance: &WspInstance, size: SizeSpec) -> Result<DecompositionPlan, DecomposeError> {
    let normalized = normalize_two_terminal(&instance.workflow)?;
    let mut graph = map_to_ttsp(&normalized);
    let mut tree = recognize_and_build_tree(&graph)?;
    let size_limit = size.resolve(graph.vertex_count())?;
    log::info!(
        "decomposing: {} vertices, {} edges, size limit {}",
        graph.vertex_count(),
        graph.edge_count(),
        size_limit
    );

    assign_weights(&mut tree, &graph, instance);
    let frontier = divide(&tree, size_limit);
    let substitutes = modify_series_nodes(&mut tree, &mut graph, &frontier, instance);
    tree.refresh_derived(&graph);
    assign_weights(&mut tree, &graph, instance);
    distribute_deadline(&mut tree, instance.deadline);

    let subproblems = extract_subproblems(&tree, &graph, &frontier);
    log::info!("{} subproblems, {} substitutes", subproblems.len(), substitutes.len());
    Ok(DecompositionPlan { graph, tree, frontier, subproblems, substitutes, size_limit })
}

fn extract_subproblems(tree: &SpTree, graph: &TtspGraph, frontier: &[NodeId]) -> Vec<SubProblem> {
    let mut occurrences: BTreeMap<VertexId, usize> = BTreeMap::new();
    for &f in frontier {
        for &v in &tree.node(f).vertices {
            *occurrences.entry(v).or_insert(0) += 1;
        }
    }
    debug_assert_eq!(occurrences.len(), graph.vertex_count(), "frontier covers every vertex");

    frontier
        .iter()
        .map(|&f| {
            let node = tree.node(f);
            let globals = node.vertices.clone();
            let vmap: BTreeMap<VertexId, VertexId> =
                globals.iter().enumerate().map(|(local, &g)| (g, local)).collect();
            let kinds: Vec<VertexKind> = globals.iter().map(|&g| graph.kind(g)).collect();
            let global_edges = tree.subtree_edges(f);
            let edge_map: BTreeMap<usize, usize> =
                global_edges.iter().enumerate().map(|(local, &g)| (g, local)).collect();
            let edges = global_edges
                .iter()
                .map(|&ge| {
                    let e = graph.edge(ge);
                    crate::ttsp::Edge { from: vmap[&e.from], to: vmap[&e.to] }
                })
                .collect();
            let subgraph =
                TtspGraph::new(kinds, edges, vmap[&node.source], vmap[&node.sink]);
            let mut arena: Vec<SpNode> = Vec::new();
            let root = copy_subtree(tree, f, &vmap, &edge_map, &mut arena);
            let mut sub_tree = SpTree::from_arena(arena, root);
            sub_tree.refresh_derived(&subgraph);
            let deadline = node.deadline.expect("deadlines reach the frontier");
            debug_assert!(
                node.weight <= 0.0 || deadline > 0.0,
                "a frontier node with workload receives a positive share"
            );
            SubProblem {
                node: f,
                subgraph,
                tree: sub_tree,
                deadline,
                weight: node.weight,
                boundary: globals.iter().copied().filter(|v| occurrences[v] > 1).collect(),
                global_vertices: globals,
            }
        })
        .collect()
}

fn copy_subtree(
    tree: &SpTree,
    id: NodeId,
    vmap: &BTreeMap<VertexId, VertexId>,
    edge_map: &BTreeMap<usize, usize>,
    arena: &mut Vec<SpNode>,
) -> NodeId {
    let n = tree.node(id);
    let kind = match n.kind {
        SpNodeKind::Leaf { edge } => SpNodeKind::Leaf { edge: edge_map[&edge] },
        SpNodeKind::Series { left, right, connector } => {
            let l = copy_subtree(tree, left, vmap, edge_map, arena);
            let r = copy_subtree(tree, right, vmap, edge_map, arena);
            SpNodeKind::Series { left: l, right: r, connector: vmap[&connector] }
        }
        SpNodeKind::Parallel { left, right } => {
            let l = copy_subtree(tree, left, vmap, edge_map, arena);
            let r = copy_subtree(tree, right, vmap, edge_map, arena);
            SpNodeKind::Parallel { left: l, right: r }
        }
    };
    arena.push(SpNode {
        kind,
        source: vmap[&n.source],
        sink: vmap[&n.sink],
        weight: n.weight,
        deadline: n.deadline,
        vertices: Vec::new(),
        path_count: 0,
        path_count_saturated: false,
    });
    arena.len() - 1
}

impl DecompositionPlan {
    /// Human-readable frontier report.
    pub fn text_report(&self, instance: &WspInstance) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "decomposition: {} vertices, {} edges, size limit {}, {} subproblems, {} substitutes",
            self.graph.vertex_count(),
            self.graph.edge_count(),
            self.size_limit,
            self.subproblems.len(),
            self.substitutes.len(),
        );
        for (i, sp) in self.subproblems.iter().enumerate() {
            let boundary: Vec<String> = sp
                .boundary
                .iter()
                .map(|&v| match self.graph.kind(v) {
                    VertexKind::Task(t) => instance.workflow.task(t).name.clone(),
                    VertexKind::Synthetic => format!("synthetic:{v}"),
                    VertexKind::Substitute(t) => {
                        format!("substitute:{}", instance.workflow.task(t).name)
                    }
                })
                .collect();
            let _ = writeln!(
                s,
                "subproblem {i}: node {} vertices {} weight {} deadline {} boundary [{}]",
                sp.node,
                sp.global_vertices.len(),
                sp.weight,
                sp.deadline,
                boundary.join(", "),
            );
        }
        s
    }

    /// Machine-readable frontier report.
    pub fn csv_report(&self) -> String {
        use std::fmt::Write;
        let mut s = String::from("subproblem_id,vertex_count,weight_s,deadline_s,boundary_size\n");
        for (i, sp) in self.subproblems.iter().enumerate() {
            let _ = writeln!(
                s,
                "{i},{},{},{},{}",
                sp.global_vertices.len(),
                sp.weight,
                sp.deadline,
                sp.boundary.len()
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{make_instance, DeadlineSpec, Machine, Task, Workflow};

    fn pool_1_2() -> Vec<Machine> {
        vec![
            Machine { id: 0, name: "m1".into(), speed_ghz: 1.0, price_per_second: 1.0, core_count: 5 },
            Machine { id: 1, name: "m2".into(), speed_ghz: 2.0, price_per_second: 4.0, core_count: 5 },
        ]
    }

    fn instance(runtimes: &[f64], edges: &[(usize, usize)], deadline: DeadlineSpec) -> WspInstance {
        let tasks = runtimes
            .iter()
            .enumerate()
            .map(|(i, &r)| Task { id: i, name: format!("t{i}"), base_runtime: r })
            .collect();
        let wf = Workflow::new(tasks, edges.to_vec()).unwrap();
        make_instance(wf, pool_1_2(), 1.0, deadline).unwrap()
    }

    // Runtimes 2,4,4,2 at mean speed factor 0.75 give vertex weights
    // 1.5, 3, 3, 1.5.
    fn diamond() -> WspInstance {
        instance(
            &[2.0, 4.0, 4.0, 2.0],
            &[(0, 1), (1, 3), (0, 2), (2, 3)],
            DeadlineSpec::CriticalPath,
        )
    }

    #[test]
    fn diamond_weights_match_hand_computation() {
        let inst = diamond();
        let graph = normalize_two_terminal(&inst.workflow).unwrap();
        let mut tree = recognize_and_build_tree(&graph).unwrap();
        assign_weights(&mut tree, &graph, &inst);
        let root = tree.node(tree.root());
        assert!((root.weight - 6.0).abs() < 1e-12);
        let (l, r) = tree.children(tree.root()).unwrap();
        assert!((tree.node(l).weight - 6.0).abs() < 1e-12);
        assert!((tree.node(r).weight - 6.0).abs() < 1e-12);
        let (ll, _) = tree.children(l).unwrap();
        assert!((tree.node(ll).weight - 4.5).abs() < 1e-12);
    }

    #[test]
    fn series_split_is_weight_proportional() {
        // Chain of three unit-weight tasks on a single 1 GHz machine: leaf
        // weights 2 and 2 around a weight-1 connector, node weight 3.
        let tasks = (0..3)
            .map(|i| Task { id: i, name: format!("t{i}"), base_runtime: 1.0 })
            .collect();
        let wf = Workflow::new(tasks, vec![(0, 1), (1, 2)]).unwrap();
        let pool = vec![Machine {
            id: 0,
            name: "m".into(),
            speed_ghz: 1.0,
            price_per_second: 1.0,
            core_count: 1,
        }];
        let inst = make_instance(wf, pool, 1.0, DeadlineSpec::Seconds(3.0)).unwrap();
        let graph = normalize_two_terminal(&inst.workflow).unwrap();
        let mut tree = recognize_and_build_tree(&graph).unwrap();
        assign_weights(&mut tree, &graph, &inst);
        assert_eq!(tree.node(tree.root()).weight, 3.0);
        distribute_deadline(&mut tree, 3.0);
        let (l, r) = tree.children(tree.root()).unwrap();
        assert_eq!(tree.node(l).deadline, Some(1.5));
        assert_eq!(tree.node(r).deadline, Some(1.5));
    }

    #[test]
    fn zero_weight_connector_splits_evenly_by_weight() {
        // Middle task has zero runtime: leaf weights 1 and 1, node weight 2.
        let tasks = vec![
            Task { id: 0, name: "a".into(), base_runtime: 1.0 },
            Task { id: 1, name: "v".into(), base_runtime: 0.0 },
            Task { id: 2, name: "c".into(), base_runtime: 1.0 },
        ];
        let wf = Workflow::new(tasks, vec![(0, 1), (1, 2)]).unwrap();
        let pool = vec![Machine {
            id: 0,
            name: "m".into(),
            speed_ghz: 1.0,
            price_per_second: 1.0,
            core_count: 1,
        }];
        let inst = make_instance(wf, pool, 1.0, DeadlineSpec::Seconds(2.0)).unwrap();
        let graph = normalize_two_terminal(&inst.workflow).unwrap();
        let mut tree = recognize_and_build_tree(&graph).unwrap();
        assign_weights(&mut tree, &graph, &inst);
        assert_eq!(tree.node(tree.root()).weight, 2.0);
        distribute_deadline(&mut tree, 2.0);
        let (l, r) = tree.children(tree.root()).unwrap();
        assert_eq!(tree.node(l).deadline, Some(1.0));
        assert_eq!(tree.node(r).deadline, Some(1.0));
    }

    #[test]
    fn parallel_children_inherit_the_deadline() {
        let inst = diamond();
        let plan = plan(&inst, SizeSpec::Absolute(3)).unwrap();
        assert_eq!(plan.subproblems.len(), 2);
        for sp in &plan.subproblems {
            assert!((sp.deadline - inst.deadline).abs() < 1e-12);
        }
    }

    #[test]
    fn diamond_divides_into_two_series_branches() {
        let inst = diamond();
        let p = plan(&inst, SizeSpec::Absolute(3)).unwrap();
        assert_eq!(p.frontier.len(), 2);
        assert_eq!(p.subproblems[0].global_vertices, vec![0, 1, 3]);
        assert_eq!(p.subproblems[1].global_vertices, vec![0, 2, 3]);
        assert_eq!(p.subproblems[0].boundary, vec![0, 3]);
        assert_eq!(p.subproblems[1].boundary, vec![0, 3]);
        assert!(p.substitutes.is_empty());
    }

    #[test]
    fn diamond_at_size_four_is_a_single_subproblem() {
        let inst = diamond();
        let p = plan(&inst, SizeSpec::Absolute(4)).unwrap();
        assert_eq!(p.frontier, vec![p.tree.root()]);
        assert_eq!(p.subproblems.len(), 1);
        assert!(p.subproblems[0].boundary.is_empty());
    }

    #[test]
    fn chain_at_size_two_splits_into_every_edge() {
        let runtimes = vec![1.0; 9];
        let edges: Vec<(usize, usize)> = (0..8).map(|i| (i, i + 1)).collect();
        let inst = instance(&runtimes, &edges, DeadlineSpec::CriticalPath);
        let p = plan(&inst, SizeSpec::Absolute(2)).unwrap();
        assert_eq!(p.subproblems.len(), 8);
        // Every interior connector gains a substitute.
        assert_eq!(p.substitutes.len(), 7);
        // Substitution separates the pieces: bridge edges cross between
        // subproblems, so no vertex is shared.
        for sp in &p.subproblems {
            assert!(sp.boundary.is_empty());
        }
    }

    #[test]
    fn substitution_moves_outgoing_edges_and_keeps_root_weight() {
        let tasks = (0..3)
            .map(|i| Task { id: i, name: format!("t{i}"), base_runtime: 2.0 })
            .collect();
        let wf = Workflow::new(tasks, vec![(0, 1), (1, 2)]).unwrap();
        let inst = make_instance(wf, pool_1_2(), 1.0, DeadlineSpec::Seconds(10.0)).unwrap();
        let graph = normalize_two_terminal(&inst.workflow).unwrap();
        let mut tree = recognize_and_build_tree(&graph).unwrap();
        let mut graph = graph;
        assign_weights(&mut tree, &graph, &inst);
        let before = tree.node(tree.root()).weight;

        let frontier = divide(&tree, 2);
        let subs = modify_series_nodes(&mut tree, &mut graph, &frontier, &inst);
        tree.refresh_derived(&graph);
        assign_weights(&mut tree, &graph, &inst);

        assert_eq!(subs.len(), 1);
        let (sub, task) = subs[0];
        assert_eq!(task, 1);
        assert_eq!(graph.kind(sub), VertexKind::Substitute(1));
        // Edge (1, 2) now leaves the substitute; bridge edge 1 -> sub added.
        assert_eq!(graph.edge(1).from, sub);
        assert_eq!(graph.edge(2), crate::ttsp::Edge { from: 1, to: sub });
        assert_eq!(tree.node(tree.root()).weight, before);
        // The modified node's connector is now the substitute, weight zero.
        let SpNodeKind::Series { connector, .. } = tree.node(tree.root()).kind else {
            panic!("root is a series node");
        };
        assert_eq!(connector, sub);
    }

    #[test]
    fn percent_sizes_use_ceiling_with_floor_two() {
        assert_eq!(SizeSpec::Percent(75.0).resolve(4).unwrap(), 3);
        assert_eq!(SizeSpec::Percent(1.0).resolve(4).unwrap(), 2);
        assert_eq!(SizeSpec::Percent(100.0).resolve(7).unwrap(), 7);
        assert!(SizeSpec::Percent(0.0).resolve(4).is_err());
        assert!(SizeSpec::Percent(101.0).resolve(4).is_err());
        assert!(SizeSpec::Absolute(1).resolve(4).is_err());
    }

    #[test]
    fn frontier_count_is_monotone_in_size() {
        let inst = diamond();
        let mut last = usize::MAX;
        for s in 2..=4 {
            let p = plan(&inst, SizeSpec::Absolute(s)).unwrap();
            assert!(p.subproblems.len() <= last);
            last = p.subproblems.len();
        }
    }
}
