//! Plane-graph corpora built with the library's generators and planarity
//! test; every embedding is re-checked by the callers.

use std::collections::BTreeSet;

use k5edge::minor::{is_planar, random_planar_triangulation};
use k5edge::{Graph, PlaneEmbedding};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::trace_faces;

/// Random plane embedding: a stacked triangulation, embedded, with edges
/// removed while it stays connected.
pub fn random_embedding(rng: &mut ChaCha8Rng) -> PlaneEmbedding {
    let n = rng.gen_range(4..=30);
    let (g, _) = random_planar_triangulation(n, rng.gen_range(0.0..0.5), rng);
    let emb = is_planar(&g).embedding.expect("triangulations are planar");
    let mut rotation = emb.rotation().to_vec();
    let mut edges = g.edges().to_vec();
    edges.shuffle(rng);
    let drop = rng.gen_range(0..=edges.len() / 2);
    let mut kept: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    for &(u, v) in edges.iter().take(drop) {
        kept.remove(&(u, v));
        let h = Graph::new(n, &kept.iter().copied().collect::<Vec<_>>()).unwrap();
        if h.is_connected() {
            rotation[u].retain(|&w| w != v);
            rotation[v].retain(|&w| w != u);
        } else {
            kept.insert((u, v));
        }
    }
    let h = Graph::new(n, &kept.into_iter().collect::<Vec<_>>()).unwrap();
    PlaneEmbedding::new(h, rotation).expect("deleting edges keeps a plane embedding")
}

pub fn icosahedron() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        let (u, u2, l, l2) = (1 + i, 1 + (i + 1) % 5, 6 + i, 6 + (i + 1) % 5);
        e.extend([
            (0, u),
            (u.min(u2), u.max(u2)),
            (l.min(l2), l.max(l2)),
            (l, 11),
            (u, l),
            (u, l2),
        ]);
    }
    Graph::new(12, &e).unwrap()
}

/// Icosahedra with a 3-vertex stacked into each face of a set covering every
/// vertex exactly twice (all original vertices end at degree 7), and the
/// same with one stacked vertex left out. These satisfy the hypotheses.
pub fn stacked_icosahedra() -> Vec<PlaneEmbedding> {
    let ico = icosahedron();
    let rotation = is_planar(&ico).embedding.unwrap().rotation().to_vec();
    let faces = trace_faces(&rotation);
    assert_eq!(faces.len(), 20);
    let mut covers: Vec<Vec<usize>> = Vec::new();
    fn search(
        faces: &[Vec<usize>],
        next: usize,
        chosen: &mut Vec<usize>,
        load: &mut [u8; 12],
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == 8 {
            if load.iter().all(|&c| c == 2) {
                out.push(chosen.clone());
            }
            return;
        }
        for f in next..faces.len() {
            if faces[f].iter().all(|&v| load[v] < 2) {
                faces[f].iter().for_each(|&v| load[v] += 1);
                chosen.push(f);
                search(faces, f + 1, chosen, load, out);
                chosen.pop();
                faces[f].iter().for_each(|&v| load[v] -= 1);
            }
        }
    }
    search(&faces, 0, &mut Vec::new(), &mut [0; 12], &mut covers);
    assert!(!covers.is_empty());
    let stack = |set: &[usize]| -> PlaneEmbedding {
        let mut e = ico.edges().to_vec();
        for (k, &f) in set.iter().enumerate() {
            e.extend(faces[f].iter().map(|&v| (v, 12 + k)));
        }
        let g = Graph::new(12 + set.len(), &e).unwrap();
        is_planar(&g).embedding.unwrap()
    };
    let mut out = Vec::new();
    for c in &covers {
        out.push(stack(c));
        for skip in 0..c.len() {
            let partial: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &f)| f)
                .collect();
            out.push(stack(&partial));
        }
    }
    out
}
