//! Biconnected decomposition of plane graphs.
//!
//! Components keep their induced embedding: each node's rotation is the
//! global rotation filtered to component edges. Every component inherits
//! an external face chosen so that its attachment cut vertex (or the
//! designated root) lies on it, facing the rest of the graph.

use crate::graph::{ContourView, Dart, Node, PlaneGraph};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Component {
    pub graph: PlaneGraph,
    /// Local node id -> id in the parent graph.
    pub to_parent: Vec<Node>,
    /// Parent-graph id -> local id (only valid for member nodes).
    pub from_parent: std::collections::HashMap<Node, Node>,
    /// Cut vertex (parent id) through which this component attaches
    /// toward the decomposition root; `None` for components containing it.
    pub attach: Option<Node>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub components: Vec<Component>,
    /// Articulation flags over parent-graph nodes.
    pub is_cut: Vec<bool>,
}

/// Standard biconnected decomposition, rooted at `root` so that the
/// component containing `root` comes first and every other component
/// knows its cut vertex toward `root`.
pub fn biconnected_components(g: &PlaneGraph, root: Node) -> Result<Decomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let m_darts = g.dart_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut edge_used = vec![false; m_darts / 2];
    let mut edge_stack: Vec<Dart> = Vec::new();
    let mut comps_edges: Vec<Vec<Dart>> = Vec::new();

    struct Frame {
        u: Node,
        parent_edge: usize, // edge id, or usize::MAX
        cur: Option<Dart>,
        start: Dart,
    }
    let mut timer = 0usize;
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    let mut stack: Vec<Frame> = Vec::new();
    if let Some(d0) = g.darts_at(root).next() {
        stack.push(Frame { u: root, parent_edge: usize::MAX, cur: Some(d0), start: d0 });
    }
    while let Some(fr) = stack.last_mut() {
        let u = fr.u;
        match fr.cur {
            None => {
                let parent_edge = fr.parent_edge;
                stack.pop();
                if let Some(pf) = stack.last() {
                    let pu = pf.u;
                    if low[u] < low[pu] {
                        low[pu] = low[u];
                    }
                    if low[u] >= disc[pu] {
                        // pu separates u's subtree: pop one component.
                        let mut comp = Vec::new();
                        while let Some(top) = edge_stack.pop() {
                            comp.push(top);
                            if top >> 1 == parent_edge {
                                break;
                            }
                        }
                        comps_edges.push(comp);
                    }
                }
                continue;
            }
            Some(d) => {
                let nd = g.rot_next(d);
                fr.cur = if nd == fr.start { None } else { Some(nd) };
                let eid = d >> 1;
                if eid == fr.parent_edge || edge_used[eid] {
                    continue;
                }
                let v = g.head(d);
                if disc[v] == usize::MAX {
                    edge_used[eid] = true;
                    edge_stack.push(d);
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    let start = g.darts_at(v).next().unwrap();
                    stack.push(Frame { u: v, parent_edge: eid, cur: Some(start), start });
                } else if disc[v] < disc[u] {
                    edge_used[eid] = true;
                    edge_stack.push(d);
                    if disc[v] < low[u] {
                        low[u] = disc[v];
                    }
                }
            }
        }
    }
    if !edge_stack.is_empty() {
        comps_edges.push(std::mem::take(&mut edge_stack));
    }
    // A node is a cut vertex iff it belongs to at least two components.
    let mut membership = vec![0u32; n];
    for edges in &comps_edges {
        let mut seen: Vec<Node> = edges.iter().flat_map(|&d| [g.origin(d), g.head(d)]).collect();
        seen.sort_unstable();
        seen.dedup();
        for v in seen {
            membership[v] += 1;
        }
    }
    let is_cut = membership.iter().map(|&c| c >= 2).collect();
    build_decomposition(g, root, comps_edges, disc, is_cut)
}

fn build_decomposition(
    g: &PlaneGraph,
    root: Node,
    mut comps_edges: Vec<Vec<Dart>>,
    disc: Vec<usize>,
    is_cut: Vec<bool>,
) -> Result<Decomposition> {
    // Order components by the discovery time of their shallowest node so
    // the component containing `root` comes first.
    comps_edges.sort_by_key(|edges| {
        edges
            .iter()
            .flat_map(|&d| [g.origin(d), g.head(d)])
            .map(|v| disc[v])
            .min()
            .unwrap_or(usize::MAX)
    });
    let mut comp_of_edge = vec![usize::MAX; g.dart_count() / 2];
    for (ci, edges) in comps_edges.iter().enumerate() {
        for &d in edges {
            comp_of_edge[d >> 1] = ci;
        }
    }
    // Darts of the global external face, for outer inheritance.
    let mut on_outer = vec![false; g.dart_count()];
    if g.m() > 0 {
        for d in g.face_walk(g.outer_dart()) {
            on_outer[d] = true;
        }
    }
    let mut components = Vec::with_capacity(comps_edges.len());
    for (ci, edges) in comps_edges.iter().enumerate() {
        let mut nodes: Vec<Node> = Vec::new();
        let mut mark = std::collections::HashMap::new();
        for &d in edges {
            for v in [g.origin(d), g.head(d)] {
                mark.entry(v).or_insert_with(|| {
                    nodes.push(v);
                    nodes.len() - 1
                });
            }
        }
        nodes.sort_unstable();
        let mut from_parent = std::collections::HashMap::new();
        for (i, &v) in nodes.iter().enumerate() {
            from_parent.insert(v, i);
        }
        // Induced rotations, preserving cyclic order.
        let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for (&v, &lv) in from_parent.iter() {
            for d in g.darts_at(v) {
                if comp_of_edge[d >> 1] == ci {
                    rotations[lv].push(from_parent[&g.head(d)]);
                }
            }
        }
        // Attachment cut: the shallowest node (by DFS discovery).
        let shallow = *nodes.iter().min_by_key(|&&v| disc[v]).unwrap();
        let attach = if shallow == root { None } else { Some(shallow) };
        let anchor = attach.unwrap_or(root);
        // Pick the outer dart: prefer the corner at `anchor` facing the
        // rest of the graph; otherwise inherit the global outer walk.
        let mut outer_pair: Option<(usize, usize)> = None;
        if nodes.len() >= 2 {
            if mark.contains_key(&anchor) {
                let mut best: Option<Dart> = None;
                for d in g.darts_at(anchor) {
                    if comp_of_edge[d >> 1] == ci {
                        let mut nd = g.rot_next(d);
                        // Foreign gap right after d?
                        if comp_of_edge[nd >> 1] != ci {
                            best = Some(d);
                            break;
                        }
                        let _ = &mut nd;
                        if best.is_none() && on_outer[d] {
                            best = Some(d);
                        }
                    }
                }
                let b = best.unwrap_or_else(|| {
                    g.darts_at(anchor).find(|&d| comp_of_edge[d >> 1] == ci).unwrap()
                });
                outer_pair = Some((from_parent[&g.origin(b)], from_parent[&g.head(b)]));
            }
            if outer_pair.is_none() {
                let d = edges
                    .iter()
                    .copied()
                    .flat_map(|d| [d & !1, d | 1])
                    .find(|&d| on_outer[d])
                    .unwrap_or(edges[0]);
                outer_pair = Some((from_parent[&g.origin(d)], from_parent[&g.head(d)]));
            }
        }
        let graph = PlaneGraph::from_rotations(&rotations, outer_pair.unwrap_or((0, 0)))?;
        components.push(Component { graph, to_parent: nodes, from_parent, attach });
    }
    Ok(Decomposition { components, is_cut })
}

/// The components of a graph shaped like the working graph of the
/// orderly-pair recursion, listed in the order they are first touched by
/// the external contour segment from `from` to `to` (counterclockwise).
pub fn partial_biconnected(g: &PlaneGraph, from: Node, to: Node) -> Result<Vec<Component>> {
    let dec = biconnected_components(g, from)?;
    // First-touch order along the CCW contour from `from` to `to`.
    let c = ContourView::new(g);
    if !c.contains(from) || !c.contains(to) {
        return Err(Error::NotExternal(if c.contains(from) { to + 1 } else { from + 1 }));
    }
    let seg = c.k1(from, to);
    let mut order: Vec<usize> = Vec::new();
    let mut seen = vec![false; dec.components.len()];
    for &v in &seg {
        for (ci, comp) in dec.components.iter().enumerate() {
            if !seen[ci] && comp.from_parent.contains_key(&v) {
                seen[ci] = true;
                order.push(ci);
            }
        }
    }
    for ci in 0..dec.components.len() {
        if !seen[ci] {
            order.push(ci);
        }
    }
    let mut comps = dec.components;
    let mut out = Vec::with_capacity(comps.len());
    for ci in order {
        out.push(std::mem::replace(
            &mut comps[ci],
            Component {
                graph: PlaneGraph::from_rotations(&[], (0, 0)).unwrap_or_else(|_| placeholder()),
                to_parent: Vec::new(),
                from_parent: Default::default(),
                attach: None,
            },
        ));
    }
    Ok(out)
}

fn placeholder() -> PlaneGraph {
    PlaneGraph::parse("1 0\n1:\n").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biconnected_graph_is_single_component() {
        let g = PlaneGraph::parse("3 3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 2 1\n").unwrap();
        let dec = biconnected_components(&g, 0).unwrap();
        assert_eq!(dec.components.len(), 1);
        assert_eq!(dec.components[0].graph.m(), 3);
        assert!(!dec.is_cut.iter().any(|&c| c));
    }

    #[test]
    fn path_splits_into_two_edges() {
        let g = PlaneGraph::parse("3 2\n1: 2\n2: 1 3\n3: 2\nouter: 1 2\n").unwrap();
        let dec = biconnected_components(&g, 0).unwrap();
        assert_eq!(dec.components.len(), 2);
        assert!(dec.is_cut[1]);
        assert!(!dec.is_cut[0] && !dec.is_cut[2]);
        // Both components are single edges sharing node 2.
        for comp in &dec.components {
            assert_eq!(comp.graph.m(), 1);
            assert!(comp.to_parent.contains(&1));
        }
    }

    /// Brute-force articulation oracle: v is a cut iff removing it
    /// disconnects the rest.
    pub fn articulation_oracle(g: &PlaneGraph) -> Vec<bool> {
        let n = g.n();
        let mut out = vec![false; n];
        for v in 0..n {
            if n <= 2 {
                break;
            }
            let mut seen = vec![false; n];
            seen[v] = true;
            let start = (0..n).find(|&x| x != v).unwrap();
            let mut stack = vec![start];
            seen[start] = true;
            let mut cnt = 1;
            while let Some(u) = stack.pop() {
                for d in g.darts_at(u) {
                    let w = g.head(d);
                    if !seen[w] {
                        seen[w] = true;
                        cnt += 1;
                        stack.push(w);
                    }
                }
            }
            out[v] = cnt < n - 1;
        }
        out
    }

    #[test]
    fn matches_articulation_oracle_on_random_graphs() {
        use crate::gen::{random_connected_planar, GenKind};
        for seed in 0..30 {
            let g = random_connected_planar(50, seed, GenKind::ConnectedPlanar);
            let dec = biconnected_components(&g, 0).unwrap();
            let oracle = articulation_oracle(&g);
            assert_eq!(dec.is_cut, oracle, "seed {}", seed);
            // Components partition the edge set.
            let total: usize = dec.components.iter().map(|c| c.graph.m()).sum();
            assert_eq!(total, g.m());
            // Each component's embedding is valid.
            for comp in &dec.components {
                comp.graph.check_euler().unwrap();
            }
        }
    }
}
