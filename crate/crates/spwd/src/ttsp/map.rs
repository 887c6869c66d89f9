//! Mapping arbitrary two-terminal DAGs onto series-parallel form.
//!
//! Recognition stalls exactly when the graph contains an entangled fork/join
//! region. The stalled core is itself a DAG over surviving original vertices,
//! with each of its edges standing for an already-series-parallel composite
//! subgraph. The mapper picks a longest-path layer boundary of that core
//! where at least two composites with distinct tails and distinct heads
//! cross, and funnels the crossing composites through one synthetic
//! zero-workload synchronization vertex: each composite's final edges are
//! rerouted into the sync vertex, which then feeds the original heads. That
//! preserves every original precedence (adding false dependencies, never
//! removing real ones) and strictly synchronizes the region, so recognition
//! gets further on the next attempt.
//!
//! The output never grows past the documented size bounds: t' <= 2t and,
//! for graphs with at least three vertices, e' <= 2(t' - 2). If local
//! resolution cannot finish within those bounds the mapper falls back to the
//! layered-barrier construction (a synchronization vertex between adjacent
//! longest-path layers, original edges dropped), which satisfies the bounds
//! by construction.

use std::collections::BTreeMap;

use super::reduce::{reduce, StallEdge};
use super::{TtspGraph, VertexId, VertexKind};

/// Maps a two-terminal DAG to series-parallel form. Inputs that are already
/// series-parallel and within the size bounds are returned unchanged; a dense
/// series-parallel input (more than `2(t-2)` edges) gets a single synthetic
/// subdivision, which is enough to restore the bound for simple graphs.
pub fn map_to_ttsp(graph: &TtspGraph) -> TtspGraph {
    if reduce(graph).is_ok() {
        if bounds_hold(graph.vertex_count(), graph) {
            return graph.clone();
        }
        return subdivide_once(graph);
    }

    let t_orig = graph.vertex_count();
    let mut work = graph.clone();
    let mut inserted = 0usize;
    loop {
        let stall = match reduce(&work) {
            Ok(_) => break,
            Err(stall) => stall,
        };
        if inserted >= t_orig || !insert_sync_cut(&mut work, &stall) {
            log::debug!("local resolution gave up after {inserted} insertions; using barriers");
            return barrier_map(graph);
        }
        inserted += 1;
    }
    if work.vertex_count() > 2 * t_orig || !bounds_hold(t_orig, &work) {
        log::debug!("local resolution exceeded size bounds; using barriers");
        return barrier_map(graph);
    }
    log::debug!("mapped with {inserted} synchronization vertices");
    work
}

fn bounds_hold(t_orig: usize, mapped: &TtspGraph) -> bool {
    let t = mapped.vertex_count();
    let e = mapped.edge_count();
    t <= 2 * t_orig && (t < 3 || e <= 2 * (t - 2))
}

/// Splits one edge with a synthetic vertex. Subdividing preserves both
/// series-parallel shape and precedence.
fn subdivide_once(graph: &TtspGraph) -> TtspGraph {
    let mut out = graph.clone();
    let x = out.add_vertex(VertexKind::Synthetic);
    let head = out.edge(0).to;
    out.edge_mut(0).to = x;
    out.add_edge(x, head);
    debug_assert!(reduce(&out).is_ok());
    out
}

/// Longest-path layer per vertex of the stalled core.
fn stall_layers(stall: &[StallEdge]) -> BTreeMap<VertexId, usize> {
    let mut indeg: BTreeMap<VertexId, usize> = BTreeMap::new();
    for e in stall {
        indeg.entry(e.from).or_insert(0);
        *indeg.entry(e.to).or_insert(0) += 1;
    }
    let mut layer: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut queue: Vec<VertexId> =
        indeg.iter().filter(|&(_, &d)| d == 0).map(|(&v, _)| v).collect();
    for &v in &queue {
        layer.insert(v, 0);
    }
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let lv = layer[&v];
        for e in stall.iter().filter(|e| e.from == v) {
            let entry = layer.entry(e.to).or_insert(0);
            *entry = (*entry).max(lv + 1);
            let d = indeg.get_mut(&e.to).expect("head has an in-degree");
            *d -= 1;
            if *d == 0 {
                queue.push(e.to);
            }
        }
    }
    layer
}

/// Chooses the boundary with the fewest crossing composites among those with
/// at least two distinct tails and two distinct heads, and merges those
/// crossings through a fresh sync vertex. Returns false when no boundary
/// qualifies.
fn insert_sync_cut(work: &mut TtspGraph, stall: &[StallEdge]) -> bool {
    let layer = stall_layers(stall);
    let max_layer = layer.values().copied().max().unwrap_or(0);
    let mut best: Option<(usize, usize)> = None; // (crossings, boundary)
    for k in 1..=max_layer {
        let crossing: Vec<&StallEdge> =
            stall.iter().filter(|e| layer[&e.from] < k && k <= layer[&e.to]).collect();
        if crossing.len() < 2 {
            continue;
        }
        let mut tails: Vec<_> = crossing.iter().map(|e| e.from).collect();
        tails.sort_unstable();
        tails.dedup();
        let mut heads: Vec<_> = crossing.iter().map(|e| e.to).collect();
        heads.sort_unstable();
        heads.dedup();
        if tails.len() < 2 || heads.len() < 2 {
            continue;
        }
        if best.is_none_or(|(c, _)| crossing.len() < c) {
            best = Some((crossing.len(), k));
        }
    }
    let Some((_, k)) = best else { return false };

    let sync = work.add_vertex(VertexKind::Synthetic);
    let mut heads: Vec<VertexId> = Vec::new();
    for e in stall.iter().filter(|e| layer[&e.from] < k && k <= layer[&e.to]) {
        for &ge in &e.terminal_edges {
            debug_assert_eq!(work.edge(ge).to, e.to);
            work.edge_mut(ge).to = sync;
        }
        heads.push(e.to);
    }
    heads.sort_unstable();
    heads.dedup();
    for h in heads {
        work.add_edge(sync, h);
    }
    true
}

/// Full synchronization barriers between adjacent longest-path layers. The
/// original edges are replaced wholesale: every vertex feeds the barrier
/// after its layer and is fed by the one before it. Reachability only grows,
/// and the result is a series chain of parallel bundles.
pub(crate) fn barrier_map(graph: &TtspGraph) -> TtspGraph {
    let order = graph.topological_order().expect("input graph is acyclic");
    let n = graph.vertex_count();
    let inc = graph.in_adjacency();
    let mut layer = vec![0usize; n];
    for &v in &order {
        for &e in &inc[v] {
            layer[v] = layer[v].max(layer[graph.edge(e).from] + 1);
        }
    }
    let levels = layer[graph.sink()];
    debug_assert!(levels >= 1);

    let mut kinds = graph.kinds().to_vec();
    let barrier_base = kinds.len();
    for _ in 0..levels {
        kinds.push(VertexKind::Synthetic);
    }
    let mut out = TtspGraph::new(kinds, Vec::new(), graph.source(), graph.sink());
    for k in 1..=levels {
        let b = barrier_base + k - 1;
        for v in (0..n).filter(|&v| layer[v] == k - 1) {
            out.add_edge(v, b);
        }
        for v in (0..n).filter(|&v| layer[v] == k) {
            out.add_edge(b, v);
        }
    }
    debug_assert!(reduce(&out).is_ok());
    out
}
