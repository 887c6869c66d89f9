//! Series-parallel reduction engine.
//!
//! Repeatedly removes interior vertices with in-degree and out-degree one
//! (series reduction) and merges duplicate edges between the same vertex pair
//! (parallel reduction) until a single source-to-sink edge remains. Each
//! reduction allocates the corresponding tree node, so a fully reduced graph
//! leaves behind its complete composition history.

use std::collections::BTreeMap;

use super::{Edge, EdgeId, SpNode, SpNodeKind, SpTree, TtspGraph, VertexId};

/// One unreduced composite edge of a stalled graph. `terminal_edges` are the
/// original graph edges that enter `to` inside this composite; the mapper
/// reroutes exactly those when it cuts a stalled region.
#[derive(Clone, Debug)]
pub(crate) struct StallEdge {
    pub from: VertexId,
    pub to: VertexId,
    pub terminal_edges: Vec<EdgeId>,
}

struct Scratch {
    from: VertexId,
    to: VertexId,
    node: usize,
    terminal_edges: Vec<EdgeId>,
}

pub(crate) fn reduce(graph: &TtspGraph) -> Result<SpTree, Vec<StallEdge>> {
    let n = graph.vertex_count();
    let mut nodes: Vec<SpNode> = Vec::with_capacity(2 * graph.edge_count());
    let mut scratch: Vec<Option<Scratch>> = Vec::with_capacity(2 * graph.edge_count());
    // Incident live scratch indices per vertex, kept sorted.
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];

    for (id, &Edge { from, to }) in graph.edges().iter().enumerate() {
        nodes.push(SpNode {
            kind: SpNodeKind::Leaf { edge: id },
            source: from,
            sink: to,
            weight: 0.0,
            deadline: None,
            vertices: Vec::new(),
            path_count: 0,
            path_count_saturated: false,
        });
        scratch.push(Some(Scratch { from, to, node: id, terminal_edges: vec![id] }));
        out[from].push(id);
        inc[to].push(id);
    }
    let mut live = scratch.len();

    let detach = |list: &mut Vec<usize>, idx: usize| {
        let pos = list.iter().position(|&i| i == idx).expect("edge is incident");
        list.remove(pos);
    };

    loop {
        let mut changed = false;

        // Series pass: ascending vertex order, immediate rewiring.
        for v in 0..n {
            if v == graph.source() || v == graph.sink() {
                continue;
            }
            if inc[v].len() != 1 || out[v].len() != 1 {
                continue;
            }
            let e_in = inc[v][0];
            let e_out = out[v][0];
            let (a, left_node) = {
                let s = scratch[e_in].as_ref().expect("live edge");
                (s.from, s.node)
            };
            let (b, right_node, terminals) = {
                let s = scratch[e_out].as_ref().expect("live edge");
                (s.to, s.node, s.terminal_edges.clone())
            };
            nodes.push(SpNode {
                kind: SpNodeKind::Series { left: left_node, right: right_node, connector: v },
                source: a,
                sink: b,
                weight: 0.0,
                deadline: None,
                vertices: Vec::new(),
                path_count: 0,
                path_count_saturated: false,
            });
            let new_node = nodes.len() - 1;
            detach(&mut out[a], e_in);
            detach(&mut inc[v], e_in);
            detach(&mut out[v], e_out);
            detach(&mut inc[b], e_out);
            scratch[e_in] = None;
            scratch[e_out] = None;
            let idx = scratch.len();
            scratch.push(Some(Scratch { from: a, to: b, node: new_node, terminal_edges: terminals }));
            out[a].push(idx);
            inc[b].push(idx);
            live -= 1;
            changed = true;
        }

        // Parallel pass: group each vertex's out-edges by head, merging
        // duplicates pairwise in creation order (oldest becomes the left
        // child).
        for (v, out_v) in out.iter_mut().enumerate() {
            if out_v.len() < 2 {
                continue;
            }
            let mut by_head: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
            for &idx in out_v.iter() {
                by_head.entry(scratch[idx].as_ref().expect("live edge").to).or_default().push(idx);
            }
            for (head, mut group) in by_head {
                if group.len() < 2 {
                    continue;
                }
                group.sort_unstable();
                while group.len() > 1 {
                    let e1 = group.remove(0);
                    let e2 = group.remove(0);
                    let (left_node, mut terminals) = {
                        let s = scratch[e1].as_ref().expect("live edge");
                        (s.node, s.terminal_edges.clone())
                    };
                    let right = scratch[e2].as_ref().expect("live edge");
                    terminals.extend_from_slice(&right.terminal_edges);
                    terminals.sort_unstable();
                    terminals.dedup();
                    nodes.push(SpNode {
                        kind: SpNodeKind::Parallel { left: left_node, right: right.node },
                        source: v,
                        sink: head,
                        weight: 0.0,
                        deadline: None,
                        vertices: Vec::new(),
                        path_count: 0,
                        path_count_saturated: false,
                    });
                    let new_node = nodes.len() - 1;
                    detach(out_v, e1);
                    detach(&mut inc[head], e1);
                    detach(out_v, e2);
                    detach(&mut inc[head], e2);
                    scratch[e1] = None;
                    scratch[e2] = None;
                    let idx = scratch.len();
                    scratch.push(Some(Scratch {
                        from: v,
                        to: head,
                        node: new_node,
                        terminal_edges: terminals,
                    }));
                    out_v.push(idx);
                    inc[head].push(idx);
                    group.push(idx);
                    live -= 1;
                    changed = true;
                }
            }
        }

        if live == 1 {
            let last = scratch
                .iter()
                .rev()
                .flatten()
                .next()
                .expect("one live edge remains");
            if last.from == graph.source() && last.to == graph.sink() {
                return Ok(SpTree::from_arena(nodes, last.node));
            }
        }
        if !changed {
            let mut stalled: Vec<StallEdge> = scratch
                .iter()
                .flatten()
                .map(|s| StallEdge {
                    from: s.from,
                    to: s.to,
                    terminal_edges: s.terminal_edges.clone(),
                })
                .collect();
            stalled.sort_by(|a, b| {
                (a.from, a.to, a.terminal_edges.first()).cmp(&(b.from, b.to, b.terminal_edges.first()))
            });
            return Err(stalled);
        }
    }
}
