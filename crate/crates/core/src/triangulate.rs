//! Triangulation of simple connected plane graphs by chord insertion.
//!
//! Every face, the external one included, is split into triangles. Chords
//! that would duplicate an existing edge (or join a node to itself, which
//! happens on faces that revisit a cut vertex) are skipped, trying other
//! boundary pairs instead. Inputs where some face admits no chord at all
//! are rejected rather than guessed at.

use crate::graph::{Dart, Node, PlaneGraph};
use crate::{Error, Result};
use std::collections::HashSet;

/// Triangulates `g` in place, returning the list of added edges as
/// `(u, v)` node pairs so drawings can attribute corridors to original
/// edges.
pub fn triangulate(g: &mut PlaneGraph) -> Result<Vec<(Node, Node)>> {
    if g.n() < 3 {
        return Err(Error::TooSmall(3));
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    g.check_euler()?;
    let mut existing: HashSet<(Node, Node)> = HashSet::new();
    for d in 0..g.dart_count() {
        if g.is_alive(d) {
            let (u, v) = (g.origin(d), g.head(d));
            existing.insert((u.min(v), u.max(v)));
        }
    }
    let mut added = Vec::new();
    let mut faces: Vec<Vec<Dart>> = g.faces();
    while let Some(walk) = faces.pop() {
        if walk.len() <= 3 {
            continue;
        }
        let k = walk.len();
        let mut chosen: Option<(usize, usize)> = None;
        'search: for span in 2..=(k / 2) {
            for i in 0..k {
                let j = (i + span) % k;
                if span == k - span && j < i {
                    continue; // avoid testing the same diagonal twice
                }
                let u = g.origin(walk[i]);
                let v = g.origin(walk[j]);
                if u == v {
                    continue;
                }
                let key = (u.min(v), u.max(v));
                if existing.contains(&key) {
                    continue;
                }
                chosen = Some((i, j));
                existing.insert(key);
                break 'search;
            }
        }
        let (i, j) = chosen.ok_or(Error::Untriangulatable)?;
        let (i, j) = (i.min(j), i.max(j));
        let c = g.add_chord(walk[i], walk[j]);
        added.push((g.origin(c), g.head(c)));
        // face_left(c) continues with walk[j]; face_left(twin c) with walk[i].
        let mut fa: Vec<Dart> = vec![c];
        fa.extend_from_slice(&walk[j..]);
        fa.extend_from_slice(&walk[..i]);
        let mut fb: Vec<Dart> = vec![c ^ 1];
        fb.extend_from_slice(&walk[i..j]);
        faces.push(fa);
        faces.push(fb);
    }
    debug_assert!(g.faces().iter().all(|f| f.len() == 3));
    Ok(added)
}

/// Checks that `g` is a plane triangulation: simple, n >= 3, every face a
/// triangle.
pub fn is_triangulation(g: &PlaneGraph) -> bool {
    g.n() >= 3 && g.is_simple() && g.m() == 3 * g.n() - 6 && g.faces().iter().all(|f| f.len() == 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_unchanged() {
        let mut g = PlaneGraph::parse("3 3\n1: 2 3\n2: 3 1\n3: 1 2\nouter: 2 1\n").unwrap();
        let added = triangulate(&mut g).unwrap();
        assert!(added.is_empty());
        assert!(is_triangulation(&g));
    }

    #[test]
    fn square_gets_diagonals_on_both_sides() {
        // Both quadrilateral faces (internal and external) get one chord:
        // Euler forces m = 3n - 6 = 6 and 4 faces total.
        let mut g = PlaneGraph::parse("4 4\n1: 2 4\n2: 3 1\n3: 4 2\n4: 1 3\nouter: 2 1\n").unwrap();
        let added = triangulate(&mut g).unwrap();
        assert_eq!(added.len(), 2);
        assert_eq!(g.face_count(), 4);
        assert!(is_triangulation(&g));
    }

    #[test]
    fn path_triangulates_to_triangle() {
        let mut g = PlaneGraph::parse("3 2\n1: 2\n2: 1 3\n3: 2\nouter: 1 2\n").unwrap();
        triangulate(&mut g).unwrap();
        assert!(is_triangulation(&g));
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn random_graphs_reach_full_size() {
        use crate::gen::{random_connected_planar, GenKind};
        for seed in 0..25 {
            let mut g = random_connected_planar(50, seed, GenKind::ConnectedPlanar);
            triangulate(&mut g).unwrap();
            assert_eq!(g.m(), 3 * g.n() - 6, "seed {}", seed);
            assert!(is_triangulation(&g));
        }
    }
}
