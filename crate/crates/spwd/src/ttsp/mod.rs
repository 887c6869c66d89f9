//! Two-terminal graphs, series-parallel recognition, and decomposition trees.
//!
//! A [`TtspGraph`] is a DAG with a unique source and sink. Workflows are
//! normalized into this shape, mapped onto two-terminal series-parallel form
//! if they are not already, and reduced into a binary [`SpTree`] that records
//! the series/parallel composition history. Later stages hang weights and
//! deadlines off that tree.

mod map;
mod reduce;

pub use map::map_to_ttsp;

use thiserror::Error;

use crate::model::{TaskId, Workflow};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type NodeId = usize;

/// Path counts saturate here; the flag on the node records that the true
/// value is larger.
pub const MAX_PATH_COUNT: u64 = 1_000_000_000_000_000_000;

/// Default ceiling for materializing paths.
pub const DEFAULT_PATH_CAP: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexKind {
    /// Carries the original task id.
    Task(TaskId),
    /// Zero-workload vertex added by normalization or mapping.
    Synthetic,
    /// Zero-workload stand-in for a task, added during series modification.
    Substitute(TaskId),
}

impl VertexKind {
    pub fn task_id(&self) -> Option<TaskId> {
        match *self {
            VertexKind::Task(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
}

/// Two-terminal multidigraph. Vertex and edge ids are dense and stable:
/// mutation only appends vertices/edges or rewrites edge endpoints.
#[derive(Clone, Debug)]
pub struct TtspGraph {
    kinds: Vec<VertexKind>,
    edges: Vec<Edge>,
    source: VertexId,
    sink: VertexId,
}

#[derive(Debug, Error)]
pub enum TtspError {
    #[error("workflow has no tasks")]
    EmptyWorkflow,
    #[error("graph is not two-terminal series-parallel")]
    NotSeriesParallel,
    #[error("path count {count} exceeds cap {cap} (count saturated: {saturated})")]
    PathExplosion { count: u64, cap: u64, saturated: bool },
}

impl TtspGraph {
    pub fn new(kinds: Vec<VertexKind>, edges: Vec<Edge>, source: VertexId, sink: VertexId) -> Self {
        debug_assert!(source < kinds.len() && sink < kinds.len());
        TtspGraph { kinds, edges, source, sink }
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kinds[v]
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub(crate) fn edge_mut(&mut self, e: EdgeId) -> &mut Edge {
        &mut self.edges[e]
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn sink(&self) -> VertexId {
        self.sink
    }

    pub fn add_vertex(&mut self, kind: VertexKind) -> VertexId {
        self.kinds.push(kind);
        self.kinds.len() - 1
    }

    pub fn add_edge(&mut self, from: VertexId, to: VertexId) -> EdgeId {
        debug_assert!(from < self.kinds.len() && to < self.kinds.len() && from != to);
        self.edges.push(Edge { from, to });
        self.edges.len() - 1
    }

    /// Out-edge ids per vertex, each list sorted by (head, edge id).
    pub fn out_adjacency(&self) -> Vec<Vec<EdgeId>> {
        let mut out = vec![Vec::new(); self.kinds.len()];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.from].push(i);
        }
        for list in &mut out {
            list.sort_by_key(|&i| (self.edges[i].to, i));
        }
        out
    }

    /// In-edge ids per vertex, each list sorted by (tail, edge id).
    pub fn in_adjacency(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.kinds.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.to].push(i);
        }
        for list in &mut inc {
            list.sort_by_key(|&i| (self.edges[i].from, i));
        }
        inc
    }

    /// Kahn order over vertices; `None` if the edge set has a cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let n = self.kinds.len();
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            indeg[e.to] += 1;
        }
        let out = self.out_adjacency();
        let mut queue: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            order.push(v);
            for &e in &out[v] {
                let w = self.edges[e].to;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Saturating count of source-to-sink edge paths via topological DP.
    /// Returns (count, saturated).
    pub fn dp_count_paths(&self) -> (u64, bool) {
        let order = match self.topological_order() {
            Some(o) => o,
            None => return (0, false),
        };
        let out = self.out_adjacency();
        let mut dp = vec![0u64; self.kinds.len()];
        let mut sat = vec![false; self.kinds.len()];
        dp[self.sink] = 1;
        for &v in order.iter().rev() {
            if v == self.sink {
                continue;
            }
            let mut total = 0u64;
            let mut s = false;
            for &e in &out[v] {
                let w = self.edges[e].to;
                s |= sat[w];
                total = total.saturating_add(dp[w]);
            }
            if total > MAX_PATH_COUNT {
                total = MAX_PATH_COUNT;
                s = true;
            }
            dp[v] = total;
            sat[v] = s;
        }
        (dp[self.source], sat[self.source])
    }

    /// All source-to-sink paths as vertex sequences, lexicographic by vertex
    /// id, erroring when the count exceeds `cap`. Multi-edges yield one path
    /// per edge choice.
    pub fn enumerate_paths(&self, cap: u64) -> Result<Vec<Vec<VertexId>>, TtspError> {
        let (count, saturated) = self.dp_count_paths();
        if saturated || count > cap {
            return Err(TtspError::PathExplosion { count, cap, saturated });
        }
        let out = self.out_adjacency();
        let mut paths = Vec::with_capacity(count as usize);
        let mut current = vec![self.source];
        self.walk_paths(self.source, &out, &mut current, &mut paths);
        Ok(paths)
    }

    fn walk_paths(
        &self,
        v: VertexId,
        out: &[Vec<EdgeId>],
        current: &mut Vec<VertexId>,
        paths: &mut Vec<Vec<VertexId>>,
    ) {
        if v == self.sink {
            paths.push(current.clone());
            return;
        }
        for &e in &out[v] {
            let w = self.edges[e].to;
            current.push(w);
            self.walk_paths(w, out, current, paths);
            current.pop();
        }
    }

    /// Plain-text dump, one edge per line.
    pub fn edge_list_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "# vertices {} source {} sink {}", self.kinds.len(), self.source, self.sink);
        for (v, kind) in self.kinds.iter().enumerate() {
            match kind {
                VertexKind::Task(t) => {
                    let _ = writeln!(s, "# vertex {v} task {t}");
                }
                VertexKind::Synthetic => {
                    let _ = writeln!(s, "# vertex {v} synthetic");
                }
                VertexKind::Substitute(t) => {
                    let _ = writeln!(s, "# vertex {v} substitute-for {t}");
                }
            }
        }
        for e in &self.edges {
            let _ = writeln!(s, "{} {}", e.from, e.to);
        }
        s
    }
}

/// Wraps a workflow DAG into a two-terminal graph. Vertices 0..t mirror the
/// task ids; a synthetic super-source/super-sink is appended when the
/// workflow has several roots or leaves (or a single task that is both).
pub fn normalize_two_terminal(workflow: &Workflow) -> Result<TtspGraph, TtspError> {
    if workflow.task_count() == 0 {
        return Err(TtspError::EmptyWorkflow);
    }
    let mut kinds: Vec<VertexKind> = (0..workflow.task_count()).map(VertexKind::Task).collect();
    let mut edges: Vec<Edge> =
        workflow.edges().iter().map(|&(a, b)| Edge { from: a, to: b }).collect();
    let roots = workflow.roots();
    let leaves = workflow.leaves();

    let source = if roots.len() == 1 && roots != leaves {
        roots[0]
    } else {
        kinds.push(VertexKind::Synthetic);
        let s = kinds.len() - 1;
        for &r in &roots {
            edges.push(Edge { from: s, to: r });
        }
        s
    };
    let sink = if leaves.len() == 1 {
        leaves[0]
    } else {
        kinds.push(VertexKind::Synthetic);
        let t = kinds.len() - 1;
        for &l in &leaves {
            edges.push(Edge { from: l, to: t });
        }
        t
    };
    Ok(TtspGraph::new(kinds, edges, source, sink))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpNodeKind {
    /// One graph edge.
    Leaf { edge: EdgeId },
    /// Children joined at `connector` (left's sink, right's source). After
    /// series modification the connector is the substitute vertex and the
    /// children are bridged by the `connector`'s incoming edge instead of a
    /// shared vertex.
    Series { left: NodeId, right: NodeId, connector: VertexId },
    /// Children sharing both terminals.
    Parallel { left: NodeId, right: NodeId },
}

#[derive(Clone, Debug)]
pub struct SpNode {
    pub kind: SpNodeKind,
    pub source: VertexId,
    pub sink: VertexId,
    /// Max-path workload of the subgraph; assigned by the decompose stage.
    pub weight: f64,
    /// Deadline share; assigned by the decompose stage.
    pub deadline: Option<f64>,
    /// Sorted vertex ids covered by this subtree.
    pub vertices: Vec<VertexId>,
    pub path_count: u64,
    pub path_count_saturated: bool,
}

impl SpNode {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Binary decomposition tree over a [`TtspGraph`]. Leaves map one-to-one onto
/// the edges of the recognized graph; internal nodes record the composition
/// steps in reduction order.
#[derive(Clone, Debug)]
pub struct SpTree {
    nodes: Vec<SpNode>,
    root: NodeId,
}

impl SpTree {
    pub(crate) fn from_arena(nodes: Vec<SpNode>, root: NodeId) -> Self {
        SpTree { nodes, root }
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &SpNode {
        &self.nodes[id]
    }

    pub(crate) fn node_mut(&mut self, id: NodeId) -> &mut SpNode {
        &mut self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn children(&self, id: NodeId) -> Option<(NodeId, NodeId)> {
        match self.nodes[id].kind {
            SpNodeKind::Leaf { .. } => None,
            SpNodeKind::Series { left, right, .. } | SpNodeKind::Parallel { left, right } => {
                Some((left, right))
            }
        }
    }

    /// Children-before-parents order, left subtree before right.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((n, expanded)) = stack.pop() {
            if expanded {
                order.push(n);
                continue;
            }
            stack.push((n, true));
            if let Some((l, r)) = self.children(n) {
                stack.push((r, false));
                stack.push((l, false));
            }
        }
        order
    }

    /// Parents-before-children order, left subtree before right.
    pub fn pre_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(n) = stack.pop() {
            order.push(n);
            if let Some((l, r)) = self.children(n) {
                stack.push(r);
                stack.push(l);
            }
        }
        order
    }

    /// Recomputes per-node vertex sets and saturating path counts bottom-up.
    pub(crate) fn refresh_derived(&mut self, graph: &TtspGraph) {
        for id in self.post_order() {
            let (vertices, count, sat) = match self.nodes[id].kind {
                SpNodeKind::Leaf { edge } => {
                    let e = graph.edge(edge);
                    let mut vs = vec![e.from, e.to];
                    vs.sort_unstable();
                    (vs, 1u64, false)
                }
                SpNodeKind::Series { left, right, .. } => {
                    let vs = merge_sorted(&self.nodes[left].vertices, &self.nodes[right].vertices);
                    let count = self.nodes[left].path_count.saturating_mul(self.nodes[right].path_count);
                    let sat = self.nodes[left].path_count_saturated
                        || self.nodes[right].path_count_saturated
                        || count > MAX_PATH_COUNT;
                    (vs, count.min(MAX_PATH_COUNT), sat)
                }
                SpNodeKind::Parallel { left, right } => {
                    let vs = merge_sorted(&self.nodes[left].vertices, &self.nodes[right].vertices);
                    let count = self.nodes[left].path_count.saturating_add(self.nodes[right].path_count);
                    let sat = self.nodes[left].path_count_saturated
                        || self.nodes[right].path_count_saturated
                        || count > MAX_PATH_COUNT;
                    (vs, count.min(MAX_PATH_COUNT), sat)
                }
            };
            let n = &mut self.nodes[id];
            n.vertices = vertices;
            n.path_count = count;
            n.path_count_saturated = sat;
        }
    }

    /// Source-to-sink path count of the whole tree (root node).
    pub fn count_paths(&self) -> (u64, bool) {
        let r = &self.nodes[self.root];
        (r.path_count, r.path_count_saturated)
    }

    /// Vertex paths through `node`'s subgraph, left-to-right deterministic.
    /// Series children are joined at the shared connector, or concatenated
    /// whole when a substitution bridged them.
    pub fn node_paths(
        &self,
        node: NodeId,
        graph: &TtspGraph,
        cap: u64,
    ) -> Result<Vec<Vec<VertexId>>, TtspError> {
        let n = &self.nodes[node];
        if n.path_count_saturated || n.path_count > cap {
            return Err(TtspError::PathExplosion {
                count: n.path_count,
                cap,
                saturated: n.path_count_saturated,
            });
        }
        Ok(self.collect_paths(node, graph))
    }

    fn collect_paths(&self, node: NodeId, graph: &TtspGraph) -> Vec<Vec<VertexId>> {
        match self.nodes[node].kind {
            SpNodeKind::Leaf { edge } => {
                let e = graph.edge(edge);
                vec![vec![e.from, e.to]]
            }
            SpNodeKind::Series { left, right, .. } => {
                let lp = self.collect_paths(left, graph);
                let rp = self.collect_paths(right, graph);
                let mut out = Vec::with_capacity(lp.len() * rp.len());
                for l in &lp {
                    for r in &rp {
                        let mut path = l.clone();
                        let joined = *l.last().expect("paths are non-empty") == r[0];
                        path.extend_from_slice(if joined { &r[1..] } else { r });
                        out.push(path);
                    }
                }
                out
            }
            SpNodeKind::Parallel { left, right } => {
                let mut out = self.collect_paths(left, graph);
                out.extend(self.collect_paths(right, graph));
                out
            }
        }
    }

    /// Leaf edge ids of `node`'s subtree in left-to-right order.
    pub fn subtree_edges(&self, node: NodeId) -> Vec<EdgeId> {
        let mut edges = Vec::new();
        let mut stack = vec![node];
        while let Some(id) = stack.pop() {
            match self.nodes[id].kind {
                SpNodeKind::Leaf { edge } => edges.push(edge),
                SpNodeKind::Series { left, right, .. } | SpNodeKind::Parallel { left, right } => {
                    stack.push(right);
                    stack.push(left);
                }
            }
        }
        edges
    }

    /// Nodes of `node`'s subtree, preorder.
    pub fn subtree_nodes(&self, node: NodeId) -> Vec<NodeId> {
        let mut nodes = Vec::new();
        let mut stack = vec![node];
        while let Some(id) = stack.pop() {
            nodes.push(id);
            if let Some((l, r)) = self.children(id) {
                stack.push(r);
                stack.push(l);
            }
        }
        nodes
    }

    /// Indented text outline of the tree for diagnostics.
    pub fn outline(&self, graph: &TtspGraph) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        let mut stack = vec![(self.root, 0usize)];
        while let Some((id, depth)) = stack.pop() {
            let n = &self.nodes[id];
            let pad = "  ".repeat(depth);
            let deadline = match n.deadline {
                Some(d) => format!(" deadline={d}"),
                None => String::new(),
            };
            match n.kind {
                SpNodeKind::Leaf { edge } => {
                    let e = graph.edge(edge);
                    let _ = writeln!(
                        s,
                        "{pad}leaf edge {} ({} -> {}) weight={}{deadline}",
                        edge, e.from, e.to, n.weight
                    );
                }
                SpNodeKind::Series { connector, left, right } => {
                    let _ = writeln!(
                        s,
                        "{pad}series connector={} vertices={} weight={}{deadline}",
                        connector,
                        n.vertices.len(),
                        n.weight
                    );
                    stack.push((right, depth + 1));
                    stack.push((left, depth + 1));
                }
                SpNodeKind::Parallel { left, right } => {
                    let _ = writeln!(
                        s,
                        "{pad}parallel terminals=({}, {}) vertices={} weight={}{deadline}",
                        n.source,
                        n.sink,
                        n.vertices.len(),
                        n.weight
                    );
                    stack.push((right, depth + 1));
                    stack.push((left, depth + 1));
                }
            }
        }
        s
    }
}

fn merge_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Reduces a two-terminal graph to a single edge by repeated series and
/// parallel reductions, recording each step in a binary tree. Vertices are
/// processed in ascending id order, series before parallel at a site, so the
/// result is deterministic.
pub fn recognize_and_build_tree(graph: &TtspGraph) -> Result<SpTree, TtspError> {
    match reduce::reduce(graph) {
        Ok(mut tree) => {
            tree.refresh_derived(graph);
            Ok(tree)
        }
        Err(_) => Err(TtspError::NotSeriesParallel),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Task;

    pub(crate) fn wf(n: usize, edges: &[(usize, usize)]) -> Workflow {
        let tasks = (0..n)
            .map(|i| Task { id: i, name: format!("t{i}"), base_runtime: 1.0 })
            .collect();
        Workflow::new(tasks, edges.to_vec()).unwrap()
    }

    #[test]
    fn single_root_and_leaf_pass_through() {
        let g = normalize_two_terminal(&wf(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.source(), 0);
        assert_eq!(g.sink(), 3);
    }

    #[test]
    fn two_disjoint_chains_gain_synthetic_terminals() {
        let g = normalize_two_terminal(&wf(4, &[(0, 1), (2, 3)])).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.kind(4), VertexKind::Synthetic);
        assert_eq!(g.kind(5), VertexKind::Synthetic);
        assert_eq!(g.source(), 4);
        assert_eq!(g.sink(), 5);
        let indeg = g.in_adjacency();
        assert!(indeg[0].len() == 1 && indeg[2].len() == 1);
    }

    #[test]
    fn single_task_workflow_becomes_one_edge() {
        let g = normalize_two_terminal(&wf(1, &[])).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.kind(1), VertexKind::Synthetic);
        assert_eq!(g.source(), 1);
        assert_eq!(g.sink(), 0);
        assert!(recognize_and_build_tree(&g).is_ok());
    }

    #[test]
    fn empty_workflow_is_an_error() {
        let workflow = Workflow::new(vec![], vec![]).unwrap();
        assert!(matches!(normalize_two_terminal(&workflow), Err(TtspError::EmptyWorkflow)));
    }

    #[test]
    fn diamond_reduces_to_parallel_of_series() {
        // Workflow edges are stored sorted: (0,1), (0,2), (1,3), (2,3).
        let g = normalize_two_terminal(&wf(4, &[(0, 1), (1, 3), (0, 2), (2, 3)])).unwrap();
        let tree = recognize_and_build_tree(&g).unwrap();
        let root = tree.node(tree.root());
        let SpNodeKind::Parallel { left, right } = root.kind else {
            panic!("root should be parallel, got {:?}", root.kind);
        };
        let SpNodeKind::Series { left: ll, right: lr, connector: lc } = tree.node(left).kind else {
            panic!("left child should be series");
        };
        let SpNodeKind::Series { left: rl, right: rr, connector: rc } = tree.node(right).kind
        else {
            panic!("right child should be series");
        };
        assert_eq!(lc, 1);
        assert_eq!(rc, 2);
        assert_eq!(tree.node(ll).kind, SpNodeKind::Leaf { edge: 0 });
        assert_eq!(tree.node(lr).kind, SpNodeKind::Leaf { edge: 2 });
        assert_eq!(tree.node(rl).kind, SpNodeKind::Leaf { edge: 1 });
        assert_eq!(tree.node(rr).kind, SpNodeKind::Leaf { edge: 3 });
        assert_eq!(tree.count_paths(), (2, false));
    }

    #[test]
    fn n_graph_is_rejected() {
        // S=0, A=1, B=2, C=3, D=4, T=5.
        let g = normalize_two_terminal(&wf(
            6,
            &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)],
        ))
        .unwrap();
        assert!(matches!(
            recognize_and_build_tree(&g),
            Err(TtspError::NotSeriesParallel)
        ));
    }

    #[test]
    fn two_diamonds_in_series_have_four_paths() {
        let g = normalize_two_terminal(&wf(
            7,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)],
        ))
        .unwrap();
        let tree = recognize_and_build_tree(&g).unwrap();
        assert_eq!(tree.count_paths(), (4, false));
        let paths = g.enumerate_paths(DEFAULT_PATH_CAP).unwrap();
        assert_eq!(paths.len(), 4);
        assert_eq!(paths[0], vec![0, 1, 3, 4, 6]);
        assert_eq!(paths[3], vec![0, 2, 3, 5, 6]);
    }

    #[test]
    fn tree_leaves_match_graph_edges_one_to_one() {
        let g = normalize_two_terminal(&wf(
            7,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)],
        ))
        .unwrap();
        let tree = recognize_and_build_tree(&g).unwrap();
        let mut leaves = tree.subtree_edges(tree.root());
        leaves.sort_unstable();
        assert_eq!(leaves, (0..g.edge_count()).collect::<Vec<_>>());
        assert_eq!(tree.len(), 2 * g.edge_count() - 1);
        assert_eq!(tree.node(tree.root()).vertices, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn enumerate_paths_respects_cap() {
        let g = normalize_two_terminal(&wf(4, &[(0, 1), (1, 3), (0, 2), (2, 3)])).unwrap();
        assert!(matches!(
            g.enumerate_paths(1),
            Err(TtspError::PathExplosion { count: 2, cap: 1, .. })
        ));
    }

    #[test]
    fn recognizer_is_deterministic() {
        let g = normalize_two_terminal(&wf(
            7,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)],
        ))
        .unwrap();
        let a = recognize_and_build_tree(&g).unwrap();
        let b = recognize_and_build_tree(&g).unwrap();
        assert_eq!(a.outline(&g), b.outline(&g));
    }
}
