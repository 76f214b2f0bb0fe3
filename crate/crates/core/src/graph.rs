//! Plane graphs as rotation systems of darts (half-edges).
//!
//! A [`PlaneGraph`] stores each edge as a pair of darts `d` and `d ^ 1`.
//! Every node keeps its incident darts in a circular doubly-linked list in
//! counterclockwise order. Faces are not materialized; they are traced
//! with [`PlaneGraph::next_face`], which walks the face lying to the
//! *left* of a dart. With counterclockwise rotations this traces internal
//! faces counterclockwise and the external face clockwise.

use crate::{Error, Result};
use std::collections::HashMap;

pub type Node = usize;
pub type Dart = usize;

const NIL: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    n: usize,
    /// Origin node of each dart. Twin of `d` is `d ^ 1`.
    origin: Vec<usize>,
    /// Next dart counterclockwise around the origin.
    rot_next: Vec<usize>,
    /// Previous dart counterclockwise around the origin.
    rot_prev: Vec<usize>,
    /// Some incident dart per node, or `NIL` for isolated nodes.
    entry: Vec<usize>,
    /// Dead darts (removed edges) are skipped everywhere.
    alive: Vec<bool>,
    live_edges: usize,
    /// A dart whose left face walk is the external face.
    outer: usize,
}

impl PlaneGraph {
    /// Builds a plane graph from per-node counterclockwise neighbor lists.
    ///
    /// Parallel edges are permitted: the k-th occurrence of `v` in `u`'s
    /// list pairs with the k-th occurrence of `u` in `v`'s list. The
    /// `outer` pair names a dart `u -> v` on the external face.
    pub fn from_rotations(rotations: &[Vec<usize>], outer: (usize, usize)) -> Result<Self> {
        let n = rotations.len();
        let mut deg_sum = 0usize;
        for (u, rot) in rotations.iter().enumerate() {
            for &v in rot {
                if v >= n {
                    return Err(Error::Parse { line: 0, msg: format!("node id {} out of range", v + 1) });
                }
                if v == u {
                    return Err(Error::SelfLoop(u + 1));
                }
            }
            deg_sum += rot.len();
        }
        if deg_sum % 2 != 0 {
            return Err(Error::Parse { line: 0, msg: "odd number of dart slots".into() });
        }
        let m = deg_sum / 2;

        // Pair the k-th occurrence of v in u's list with the k-th
        // occurrence of u in v's list.
        let mut darts_at: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut occ: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut origin = vec![0usize; 2 * m];
        let mut slot = 0usize;
        for (u, rot) in rotations.iter().enumerate() {
            for &v in rot {
                let dart = slot;
                slot += 1;
                origin[dart] = u;
                darts_at[u].push(dart);
                occ.entry((u, v)).or_default().push(dart);
            }
        }
        // `slot` assignment above is positional; re-map so twins are d/d^1.
        // We instead build an explicit twin table first, then renumber.
        let mut twin = vec![NIL; 2 * m];
        for ((u, v), du) in occ.iter() {
            if u < v {
                let dv = match occ.get(&(*v, *u)) {
                    Some(list) => list,
                    None => {
                        return Err(Error::InconsistentRotation { u: u + 1, v: v + 1, cu: du.len(), cv: 0 })
                    }
                };
                if du.len() != dv.len() {
                    return Err(Error::InconsistentRotation { u: u + 1, v: v + 1, cu: du.len(), cv: dv.len() });
                }
                for (a, b) in du.iter().zip(dv.iter()) {
                    twin[*a] = *b;
                    twin[*b] = *a;
                }
            }
        }
        // Renumber darts so that twins are adjacent (2e, 2e+1).
        let mut remap = vec![NIL; 2 * m];
        let mut next_id = 0usize;
        for d in 0..2 * m {
            if remap[d] == NIL {
                let t = twin[d];
                if t == NIL {
                    // Unmatched occurrence (neighbor list asymmetry).
                    let u = origin[d];
                    return Err(Error::InconsistentRotation { u: u + 1, v: 0, cu: 1, cv: 0 });
                }
                remap[d] = next_id;
                remap[t] = next_id + 1;
                next_id += 2;
            }
        }
        let mut g = PlaneGraph {
            n,
            origin: vec![0; 2 * m],
            rot_next: vec![NIL; 2 * m],
            rot_prev: vec![NIL; 2 * m],
            entry: vec![NIL; n],
            alive: vec![true; 2 * m],
            live_edges: m,
            outer: NIL,
        };
        for u in 0..n {
            let list = &darts_at[u];
            for (i, &old) in list.iter().enumerate() {
                let d = remap[old];
                g.origin[d] = u;
                let nxt = remap[list[(i + 1) % list.len()]];
                let prv = remap[list[(i + list.len() - 1) % list.len()]];
                g.rot_next[d] = nxt;
                g.rot_prev[d] = prv;
            }
            if !list.is_empty() {
                g.entry[u] = remap[list[0]];
            }
        }
        // Resolve the outer dart.
        if m > 0 {
            let (u, v) = outer;
            let d = g
                .dart_between(u, v)
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("outer dart {} {} is not an edge", u + 1, v + 1) })?;
            g.outer = d;
        }
        g.check_euler()?;
        Ok(g)
    }

    /// Parses the on-disk graph format.
    ///
    /// Line 1 is `n m`; the next `n` lines are `<id>: <ccw neighbors>`;
    /// the final line is `outer: <u> <v>`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(Error::Parse { line: ln + 1, msg: "bad node count".into() })?;
        let m: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(Error::Parse { line: ln + 1, msg: "bad edge count".into() })?;
        if n == 0 {
            return Err(Error::Parse { line: ln + 1, msg: "graph needs at least one node".into() });
        }
        let mut rotations: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        for _ in 0..n {
            let (ln, line) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing node line".into() })?;
            let (head, rest) = line
                .split_once(':')
                .ok_or(Error::Parse { line: ln + 1, msg: "expected `<id>: ...`".into() })?;
            let id: usize = head
                .trim()
                .parse()
                .map_err(|_| Error::Parse { line: ln + 1, msg: "bad node id".into() })?;
            if id == 0 || id > n {
                return Err(Error::Parse { line: ln + 1, msg: format!("node id {} out of range 1..{}", id, n) });
            }
            if seen[id - 1] {
                return Err(Error::Parse { line: ln + 1, msg: format!("duplicate node {}", id) });
            }
            seen[id - 1] = true;
            for tok in rest.split_whitespace() {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse { line: ln + 1, msg: format!("bad neighbor `{}`", tok) })?;
                if v == 0 || v > n {
                    return Err(Error::Parse { line: ln + 1, msg: format!("neighbor {} out of range", v) });
                }
                rotations[id - 1].push(v - 1);
            }
        }
        let outer = if m == 0 {
            (0, 0)
        } else {
            let (ln, line) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing outer line".into() })?;
            let rest = line
                .trim()
                .strip_prefix("outer:")
                .ok_or(Error::Parse { line: ln + 1, msg: "expected `outer: u v`".into() })?;
            let mut it = rest.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(Error::Parse { line: ln + 1, msg: "bad outer node".into() })?;
            let v: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or(Error::Parse { line: ln + 1, msg: "bad outer node".into() })?;
            if u == 0 || u > n || v == 0 || v > n {
                return Err(Error::Parse { line: ln + 1, msg: "outer node out of range".into() });
            }
            (u - 1, v - 1)
        };
        let total: usize = rotations.iter().map(|r| r.len()).sum();
        if total != 2 * m {
            return Err(Error::Parse { line: 0, msg: format!("degree sum {} does not match 2m={}", total, 2 * m) });
        }
        Self::from_rotations(&rotations, outer)
    }

    /// Renders the graph in the on-disk format with live edges only.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.n, self.live_edges));
        for u in 0..self.n {
            out.push_str(&format!("{}:", u + 1));
            for d in self.darts_at(u) {
                out.push_str(&format!(" {}", self.head(d) + 1));
            }
            out.push('\n');
        }
        if self.live_edges > 0 {
            out.push_str(&format!("outer: {} {}\n", self.origin(self.outer) + 1, self.head(self.outer) + 1));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.live_edges
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer
    }

    pub fn set_outer_dart(&mut self, d: Dart) {
        debug_assert!(self.alive[d]);
        self.outer = d;
    }

    #[inline]
    pub fn twin(&self, d: Dart) -> Dart {
        d ^ 1
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> Node {
        self.origin[d]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> Node {
        self.origin[d ^ 1]
    }

    #[inline]
    pub fn rot_next(&self, d: Dart) -> Dart {
        self.rot_next[d]
    }

    #[inline]
    pub fn rot_prev(&self, d: Dart) -> Dart {
        self.rot_prev[d]
    }

    #[inline]
    pub fn is_alive(&self, d: Dart) -> bool {
        self.alive[d]
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    /// Next dart of the face lying to the left of `d`.
    #[inline]
    pub fn next_face(&self, d: Dart) -> Dart {
        self.rot_prev[d ^ 1]
    }

    /// Previous dart of the face lying to the left of `d`.
    #[inline]
    pub fn prev_face(&self, d: Dart) -> Dart {
        self.rot_next[d] ^ 1
    }

    /// Counterclockwise darts around `u`, starting at the entry dart.
    pub fn darts_at(&self, u: Node) -> RotationIter<'_> {
        RotationIter { g: self, start: self.entry[u], cur: self.entry[u], done: self.entry[u] == NIL }
    }

    /// Counterclockwise darts around `u`, starting at dart `d`.
    pub fn darts_from(&self, d: Dart) -> RotationIter<'_> {
        RotationIter { g: self, start: d, cur: d, done: false }
    }

    pub fn degree(&self, u: Node) -> usize {
        self.darts_at(u).count()
    }

    /// CCW neighbor list of `u` (with multiplicities).
    pub fn neighbors(&self, u: Node) -> Vec<Node> {
        self.darts_at(u).map(|d| self.head(d)).collect()
    }

    /// Some dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: Node, v: Node) -> Option<Dart> {
        self.darts_at(u).find(|&d| self.head(d) == v)
    }

    /// The full walk of the face to the left of `d`.
    pub fn face_walk(&self, d: Dart) -> Vec<Dart> {
        let mut walk = vec![d];
        let mut cur = self.next_face(d);
        while cur != d {
            walk.push(cur);
            cur = self.next_face(cur);
        }
        walk
    }

    /// All face walks, each starting at its lowest dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.origin.len()];
        let mut faces = Vec::new();
        for d in 0..self.origin.len() {
            if !self.alive[d] || seen[d] {
                continue;
            }
            let walk = self.face_walk(d);
            for &x in &walk {
                seen[x] = true;
            }
            faces.push(walk);
        }
        faces
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Checks Euler's formula for the connected case and basic invariants.
    pub fn check_euler(&self) -> Result<()> {
        if self.live_edges == 0 {
            return if self.n == 1 { Ok(()) } else { Err(Error::Disconnected) };
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let f = self.face_count();
        if self.n + f != self.live_edges + 2 {
            return Err(Error::EulerCheck { n: self.n, m: self.live_edges, f });
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(u) = stack.pop() {
            for d in self.darts_at(u) {
                let v = self.head(d);
                if !seen[v] {
                    seen[v] = true;
                    cnt += 1;
                    stack.push(v);
                }
            }
        }
        cnt == self.n
    }

    pub fn is_simple(&self) -> bool {
        for u in 0..self.n {
            let mut prev = NIL;
            let mut seen: Vec<usize> = self.neighbors(u);
            seen.sort_unstable();
            for &v in &seen {
                if v == prev {
                    return false;
                }
                prev = v;
            }
        }
        true
    }

    /// Removes the edge of dart `d` by splicing both darts out of their
    /// rotations. The two incident faces merge. If the outer dart dies it
    /// is re-anchored onto the merged face.
    pub fn remove_edge(&mut self, d: Dart) {
        debug_assert!(self.alive[d]);
        let e0 = d & !1;
        if self.outer == e0 || self.outer == e0 + 1 {
            if self.live_edges == 1 {
                self.outer = NIL;
            } else {
                // Walk away from the dying darts along the external face.
                let mut repl = self.next_face(self.outer);
                let mut guard = 0usize;
                while repl & !1 == e0 {
                    repl = self.next_face(repl);
                    guard += 1;
                    if guard > self.origin.len() {
                        repl = (0..self.origin.len()).find(|&x| self.alive[x] && x & !1 != e0).unwrap_or(NIL);
                        break;
                    }
                }
                self.outer = repl;
            }
        }
        for x in [e0, e0 + 1] {
            let u = self.origin[x];
            let nxt = self.rot_next[x];
            if nxt == x {
                self.entry[u] = NIL;
            } else {
                let prv = self.rot_prev[x];
                self.rot_next[prv] = nxt;
                self.rot_prev[nxt] = prv;
                if self.entry[u] == x {
                    self.entry[u] = nxt;
                }
            }
            self.alive[x] = false;
        }
        self.live_edges -= 1;
    }

    /// Inserts `new` immediately before `at` in the rotation of their
    /// common origin node.
    pub(crate) fn insert_dart_before(&mut self, at: Dart, new: Dart) {
        let prv = self.rot_prev[at];
        self.rot_next[prv] = new;
        self.rot_prev[new] = prv;
        self.rot_next[new] = at;
        self.rot_prev[at] = new;
    }

    /// Inserts `new` immediately after `at` in the rotation of their
    /// common origin node.
    pub(crate) fn insert_dart_after(&mut self, at: Dart, new: Dart) {
        let nxt = self.rot_next[at];
        self.insert_dart_before(nxt, new);
    }

    fn alloc_edge(&mut self, u: Node, v: Node) -> Dart {
        let d = self.origin.len();
        self.origin.push(u);
        self.origin.push(v);
        self.rot_next.push(NIL);
        self.rot_next.push(NIL);
        self.rot_prev.push(NIL);
        self.rot_prev.push(NIL);
        self.alive.push(true);
        self.alive.push(true);
        self.live_edges += 1;
        d
    }

    /// Adds a chord inside the face to the left of both walk darts `a` and
    /// `b`. The new edge runs from `origin(a)` to `origin(b)`; the new dart
    /// from `origin(a)` is returned. `a` and `b` must lie on the same face
    /// walk. The face splits into `face_left(new)` (continuing with `b`)
    /// and `face_left(twin(new))` (continuing with `a`).
    pub fn add_chord(&mut self, a: Dart, b: Dart) -> Dart {
        let u = self.origin[a];
        let v = self.origin[b];
        debug_assert_ne!(u, v, "chord endpoints must differ");
        let d = self.alloc_edge(u, v);
        self.insert_dart_after(a, d);
        self.insert_dart_after(b, d ^ 1);
        d
    }

    /// Moves edge `e` so it becomes a chord of the face identified by
    /// `face`: the walk of that face must visit both endpoints of `e`, and
    /// `e` itself must not lie on it. Rotations elsewhere are untouched;
    /// the whole operation is O(|face|).
    pub fn flip_edge_into_face(&mut self, e: Dart, face: Dart) -> Result<()> {
        let u = self.origin(e);
        let v = self.head(e);
        let walk = self.face_walk(face);
        let mut at_u = NIL;
        let mut at_v = NIL;
        for &d in &walk {
            if d & !1 == e & !1 {
                return Err(Error::Internal("edge already lies on the target face".into()));
            }
            if at_u == NIL && self.origin[d] == u {
                at_u = d;
            }
            if at_v == NIL && self.origin[d] == v {
                at_v = d;
            }
        }
        if at_u == NIL || at_v == NIL {
            return Err(Error::Internal("flip target face does not contain both endpoints".into()));
        }
        self.remove_edge(e);
        let e0 = e & !1;
        // Revive and re-link the same dart pair at its new corners.
        for x in [e0, e0 + 1] {
            self.alive[x] = true;
        }
        self.live_edges += 1;
        let (du, dv) = if self.origin[e0] == u { (e0, e0 + 1) } else { (e0 + 1, e0) };
        self.insert_dart_after(at_u, du);
        self.insert_dart_after(at_v, dv);
        Ok(())
    }

    /// Degree-preserving sanity check of the doubly linked rotations.
    pub fn debug_validate_rotations(&self) {
        for u in 0..self.n {
            let e = self.entry[u];
            if e == NIL {
                continue;
            }
            let mut d = e;
            loop {
                assert!(self.alive[d]);
                assert_eq!(self.origin[d], u);
                assert_eq!(self.rot_prev[self.rot_next[d]], d);
                d = self.rot_next[d];
                if d == e {
                    break;
                }
            }
        }
    }
}

pub struct RotationIter<'a> {
    g: &'a PlaneGraph,
    start: usize,
    cur: usize,
    done: bool,
}

impl<'a> Iterator for RotationIter<'a> {
    type Item = Dart;

    fn next(&mut self) -> Option<Dart> {
        if self.done {
            return None;
        }
        let d = self.cur;
        self.cur = self.g.rot_next[d];
        if self.cur == self.start {
            self.done = true;
        }
        Some(d)
    }
}

/// The external-face boundary of a connected plane graph, as the sequence
/// of external nodes in counterclockwise order starting at the
/// lowest-labeled one.
#[derive(Clone, Debug)]
pub struct ContourView {
    /// CCW node sequence; for 2-connected graphs a simple cycle.
    pub order: Vec<Node>,
    /// Position of each node's first occurrence, or `NIL`.
    pos: Vec<usize>,
    simple: bool,
}

impl ContourView {
    pub fn new(g: &PlaneGraph) -> ContourView {
        if g.m() == 0 {
            return ContourView { order: vec![0], pos: vec![0], simple: true };
        }
        // The external face walk is clockwise; reverse for CCW.
        let walk = g.face_walk(g.outer_dart());
        let mut order: Vec<Node> = walk.iter().map(|&d| g.origin(d)).collect();
        order.reverse();
        let lowest = order.iter().copied().min().unwrap();
        let at = order.iter().position(|&x| x == lowest).unwrap();
        order.rotate_left(at);
        let mut pos = vec![NIL; g.n()];
        let mut simple = true;
        for (i, &v) in order.iter().enumerate() {
            if pos[v] == NIL {
                pos[v] = i;
            } else {
                simple = false;
            }
        }
        ContourView { order, pos, simple }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Whether every external node appears exactly once.
    pub fn is_simple_cycle(&self) -> bool {
        self.simple
    }

    pub fn contains(&self, v: Node) -> bool {
        v < self.pos.len() && self.pos[v] != NIL
    }

    pub fn position(&self, v: Node) -> Option<usize> {
        if self.contains(v) {
            Some(self.pos[v])
        } else {
            None
        }
    }

    /// External node immediately after `v` counterclockwise.
    pub fn next(&self, v: Node) -> Node {
        let i = self.pos[v];
        self.order[(i + 1) % self.order.len()]
    }

    /// External node immediately before `v` counterclockwise.
    pub fn prev(&self, v: Node) -> Node {
        let i = self.pos[v];
        self.order[(i + self.order.len() - 1) % self.order.len()]
    }

    /// External nodes from `r` to `v` counterclockwise, inclusive.
    pub fn k1(&self, r: Node, v: Node) -> Vec<Node> {
        let mut out = Vec::new();
        let len = self.order.len();
        let mut i = self.pos[r];
        loop {
            out.push(self.order[i]);
            if self.order[i] == v {
                break;
            }
            i = (i + 1) % len;
        }
        out
    }

    /// External nodes from `r` to `v` clockwise, inclusive.
    pub fn k2(&self, r: Node, v: Node) -> Vec<Node> {
        let mut out = Vec::new();
        let len = self.order.len();
        let mut i = self.pos[r];
        loop {
            out.push(self.order[i]);
            if self.order[i] == v {
                break;
            }
            i = (i + len - 1) % len;
        }
        out
    }

    /// The full contour sequence `K(H, r)` from `r` back around to
    /// `prev(r)`.
    pub fn k(&self, r: Node) -> Vec<Node> {
        self.k1(r, self.prev(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn fig3b_text() -> &'static str {
        "6 9\n1: 2 3 4 5\n2: 3 1 6 5\n3: 1 2\n4: 5 1\n5: 1 4 2 6\n6: 2 5\nouter: 1 5\n"
    }

    #[test]
    fn single_edge_parses() {
        let g = PlaneGraph::parse("2 1\n1: 2\n2: 1\nouter: 1 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(g.face_count(), 1);
    }

    #[test]
    fn fig3b_contour_matches() {
        let g = PlaneGraph::parse(fig3b_text()).unwrap();
        let c = ContourView::new(&g);
        assert_eq!(c.order, vec![0, 1, 5, 4]); // K(H,1) = (1,2,6,5)
        assert_eq!(c.next(1), 5); // next(H,2) = 6
        assert_eq!(c.prev(1), 0); // prev(H,2) = 1
        assert_eq!(c.k1(0, 5), vec![0, 1, 5]); // K1(H,1,6) = (1,2,6)
        assert_eq!(c.k2(0, 5), vec![0, 4, 5]); // K2(H,1,6) = (1,5,6)
    }

    #[test]
    fn inconsistent_rotation_is_rejected() {
        let r = PlaneGraph::parse("2 1\n1: 2\n2:\nouter: 1 2\n");
        assert!(r.is_err());
    }

    #[test]
    fn self_loop_rejected() {
        let r = PlaneGraph::parse("2 2\n1: 1 1\n2: 1 1\nouter: 1 2\n");
        assert!(matches!(r, Err(Error::SelfLoop(_))));
    }

    #[test]
    fn triangle_contour_has_three_nodes() {
        let g = PlaneGraph::parse("3 3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 2 1\n").unwrap();
        let c = ContourView::new(&g);
        assert_eq!(c.k(0).len(), 3);
    }

    #[test]
    fn parallel_edges_pair_positionally() {
        // Two nodes joined by a double edge: a digon.
        let g = PlaneGraph::parse("2 2\n1: 2 2\n2: 1 1\nouter: 1 2\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.face_count(), 2);
    }

    #[test]
    fn flip_moves_edge_between_faces() {
        // Figure 3(a) -> flipping (2,5) into the hexagonal face gives 3(b).
        let fig3a = "6 9\n1: 2 3 4 5\n2: 5 6 3 1\n3: 1 2\n4: 5 1\n5: 1 4 6 2\n6: 2 5\nouter: 1 5\n";
        let mut g = PlaneGraph::parse(fig3a).unwrap();
        let e = g.dart_between(1, 4).unwrap(); // edge (2,5)
        // Hexagon face (3,2,6,5,4,1): left of dart 3->2.
        let d32 = g.dart_between(2, 1).unwrap();
        let hex = g.face_walk(d32);
        assert_eq!(hex.len(), 6);
        g.flip_edge_into_face(e, d32).unwrap();
        g.check_euler().unwrap();
        let c = ContourView::new(&g);
        assert_eq!(c.order, vec![0, 1, 5, 4]);
        let want = PlaneGraph::parse(fig3b_text()).unwrap();
        for u in 0..6 {
            let a = cyclic_canon(g.neighbors(u));
            let b = cyclic_canon(want.neighbors(u));
            assert_eq!(a, b, "rotation at node {} differs", u + 1);
        }
    }

    fn cyclic_canon(mut rot: Vec<usize>) -> Vec<usize> {
        if rot.is_empty() {
            return rot;
        }
        let min = *rot.iter().min().unwrap();
        let at = rot.iter().position(|&x| x == min).unwrap();
        rot.rotate_left(at);
        rot
    }
}
