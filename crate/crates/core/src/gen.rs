//! Seeded random plane-graph generators for tests and benchmarks.
//!
//! Triangulations grow by repeated vertex insertion into a random
//! internal face; sparser graphs are produced by deleting random edges
//! from a triangulation while preserving the requested connectivity.

use crate::graph::{Node, PlaneGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Triangulation,
    ConnectedPlanar,
    Biconnected,
}

impl std::str::FromStr for GenKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "triangulation" => Ok(GenKind::Triangulation),
            "connected-planar" => Ok(GenKind::ConnectedPlanar),
            "biconnected" => Ok(GenKind::Biconnected),
            other => Err(format!("unknown kind `{}`", other)),
        }
    }
}

/// Deterministic random plane graph with `n >= 3` nodes.
pub fn random_connected_planar(n: usize, seed: u64, kind: GenKind) -> PlaneGraph {
    assert!(n >= 3, "generator needs n >= 3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rotations: Vec<Vec<Node>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Internal faces as CCW corner triples.
    let mut faces: Vec<[Node; 3]> = vec![[0, 1, 2]];
    for v in 3..n {
        let fi = rng.gen_range(0..faces.len());
        let [x, y, z] = faces.swap_remove(fi);
        rotations.push(vec![x, y, z]);
        insert_between(&mut rotations[x], y, v);
        insert_between(&mut rotations[y], z, v);
        insert_between(&mut rotations[z], x, v);
        faces.push([x, y, v]);
        faces.push([y, z, v]);
        faces.push([z, x, v]);
    }
    let mut g = PlaneGraph::from_rotations(&rotations, (1, 0)).expect("generated triangulation is valid");
    match kind {
        GenKind::Triangulation => g,
        GenKind::ConnectedPlanar => {
            thin_out(&mut g, &mut rng, false);
            g
        }
        GenKind::Biconnected => {
            thin_out(&mut g, &mut rng, true);
            g
        }
    }
}

/// Inserts `v` into the rotation right after `after` (CCW).
fn insert_between(rot: &mut Vec<Node>, after: Node, v: Node) {
    let i = rot.iter().position(|&x| x == after).expect("corner neighbor present");
    rot.insert(i + 1, v);
}

fn thin_out(g: &mut PlaneGraph, rng: &mut ChaCha8Rng, keep_biconnected: bool) {
    let mut edges: Vec<usize> = (0..g.dart_count() / 2).collect();
    edges.shuffle(rng);
    for e in edges {
        if !g.is_alive(2 * e) {
            continue;
        }
        if !rng.gen_bool(0.4) {
            continue;
        }
        let mut probe = g.clone();
        probe.remove_edge(2 * e);
        let ok = if keep_biconnected {
            is_biconnected(&probe)
        } else {
            probe.is_connected()
        };
        if ok {
            g.remove_edge(2 * e);
        }
    }
}

fn is_biconnected(g: &PlaneGraph) -> bool {
    if !g.is_connected() || g.n() < 3 {
        return false;
    }
    crate::bicon::biconnected_components(g, 0)
        .map(|dec| dec.components.len() == 1)
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulate::is_triangulation;

    #[test]
    fn triangulation_has_full_edge_count() {
        let g = random_connected_planar(200, 1, GenKind::Triangulation);
        assert_eq!(g.m(), 594); // 3n - 6
        assert!(is_triangulation(&g));
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_connected_planar(50, 7, GenKind::ConnectedPlanar);
        let b = random_connected_planar(50, 7, GenKind::ConnectedPlanar);
        assert_eq!(a.to_text(), b.to_text());
    }

    #[test]
    fn smallest_triangulation_is_k3() {
        let g = random_connected_planar(3, 99, GenKind::Triangulation);
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn biconnected_kind_stays_biconnected() {
        for seed in 0..10 {
            let g = random_connected_planar(40, seed, GenKind::Biconnected);
            assert!(super::is_biconnected(&g), "seed {}", seed);
        }
    }
}
