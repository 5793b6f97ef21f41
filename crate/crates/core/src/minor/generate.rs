//! Random K5-minor-free graphs built as clique-sums of planar
//! triangulations and Wagner graphs.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a seed
//! fully determines the output.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::wagner_graph;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleParams {
    pub n_target: usize,
    pub parts: usize,
    pub wagner_probability: f64,
    pub delete_fraction: f64,
    /// Probability that a triangulation grows at a face touching its
    /// current maximum-degree vertex instead of a uniform face.
    pub hub_bias: f64,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams {
            n_target: 24,
            parts: 4,
            wagner_probability: 0.25,
            delete_fraction: 0.1,
            hub_bias: 0.0,
        }
    }
}

/// Planar triangulation on `n >= 4` vertices grown from K4 by stacking a
/// vertex into a chosen face. Returns the graph and its face triangles.
pub fn random_planar_triangulation<R: Rng>(
    n: usize,
    hub_bias: f64,
    rng: &mut R,
) -> (Graph, Vec<[usize; 3]>) {
    assert!(n >= 4);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut degree = vec![3usize; 4];
    for v in 4..n {
        let fi = if hub_bias > 0.0 && rng.gen_bool(hub_bias.min(1.0)) {
            let hub = (0..degree.len())
                .max_by_key(|&u| (degree[u], std::cmp::Reverse(u)))
                .expect("nonempty");
            let touching: Vec<usize> = (0..faces.len())
                .filter(|&f| faces[f].contains(&hub))
                .collect();
            *touching.choose(rng).expect("hub lies on a face")
        } else {
            rng.gen_range(0..faces.len())
        };
        let [a, b, c] = faces[fi];
        faces[fi] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
        edges.extend_from_slice(&[(a, v), (b, v), (c, v)]);
        degree.push(3);
        for u in [a, b, c] {
            degree[u] += 1;
        }
    }
    (Graph::new(n, &edges).expect("valid"), faces)
}

#[derive(Clone, Copy, PartialEq)]
enum Part {
    Triangulation,
    Wagner,
}

/// Sample a K5-minor-free graph. The vertex count equals `n_target` whenever
/// at least one part is a triangulation; Wagner parts that do not fit the
/// budget are replaced by triangulations.
pub fn sample_k5_free(params: &SampleParams, seed: u64) -> Result<Graph> {
    let SampleParams {
        n_target,
        parts,
        wagner_probability,
        delete_fraction,
        hub_bias,
    } = *params;
    if n_target < 4 {
        return Err(Error::Unsatisfiable("n_target must be at least 4".into()));
    }
    if parts == 0 {
        return Err(Error::Unsatisfiable("at least one part is required".into()));
    }
    if !(0.0..=1.0).contains(&wagner_probability) {
        return Err(Error::Unsatisfiable(
            "wagner_probability must lie in [0, 1]".into(),
        ));
    }
    if !(0.0..1.0).contains(&delete_fraction) {
        return Err(Error::Unsatisfiable(
            "delete_fraction must lie in [0, 1)".into(),
        ));
    }
    if !(0.0..=1.0).contains(&hub_bias) {
        return Err(Error::Unsatisfiable("hub_bias must lie in [0, 1]".into()));
    }
    // smallest triangulation parts: K4 first, then one new vertex per part
    if n_target < 4 + (parts - 1) {
        return Err(Error::Unsatisfiable(format!(
            "{} parts need at least {} vertices",
            parts,
            4 + (parts - 1)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kinds: Vec<Part> = (0..parts)
        .map(|_| {
            if rng.gen_bool(wagner_probability) {
                Part::Wagner
            } else {
                Part::Triangulation
            }
        })
        .collect();

    // minimum new vertices per part given gluing order
    let min_new = |kinds: &[Part]| -> Vec<usize> {
        let mut seen_triangle = false;
        kinds
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let m = match (k, i) {
                    (Part::Wagner, 0) => 8,
                    (Part::Wagner, _) => 6,
                    (Part::Triangulation, 0) => 4,
                    (Part::Triangulation, _) if seen_triangle => 1,
                    (Part::Triangulation, _) => 2,
                };
                if k == Part::Triangulation {
                    seen_triangle = true;
                }
                m
            })
            .collect()
    };
    let all_wagner = |kinds: &[Part]| kinds.iter().all(|&k| k == Part::Wagner);
    while !all_wagner(&kinds) && min_new(&kinds).iter().sum::<usize>() > n_target
        || all_wagner(&kinds) && 8 + 6 * (parts - 1) > n_target
    {
        let last = kinds
            .iter()
            .rposition(|&k| k == Part::Wagner)
            .expect("a Wagner part exists");
        kinds[last] = Part::Triangulation;
    }
    let mut new_counts = min_new(&kinds);
    if !all_wagner(&kinds) {
        let tri: Vec<usize> = (0..parts)
            .filter(|&i| kinds[i] == Part::Triangulation)
            .collect();
        let extra = n_target - new_counts.iter().sum::<usize>();
        for _ in 0..extra {
            new_counts[*tri.choose(&mut rng).expect("nonempty")] += 1;
        }
    }

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut n = 0usize;
    for (i, &kind) in kinds.iter().enumerate() {
        let (part, part_triangles): (Graph, Vec<[usize; 3]>) = match kind {
            Part::Wagner => (wagner_graph(), Vec::new()),
            Part::Triangulation => {
                let size = if i == 0 {
                    new_counts[i]
                } else if triangles.is_empty() {
                    new_counts[i] + 2
                } else {
                    new_counts[i] + 3
                };
                random_planar_triangulation(size, hub_bias, &mut rng)
            }
        };
        let mut map = vec![usize::MAX; part.n()];
        if i > 0 {
            let glue_triangle = kind == Part::Triangulation && !triangles.is_empty();
            if glue_triangle {
                let host = *triangles.choose(&mut rng).expect("nonempty");
                let mut local = part_triangles[rng.gen_range(0..part_triangles.len())];
                local.shuffle(&mut rng);
                for k in 0..3 {
                    map[local[k]] = host[k];
                }
            } else {
                let host = edges[rng.gen_range(0..edges.len())];
                let local = part.edges()[rng.gen_range(0..part.m())];
                let flip = rng.gen_bool(0.5);
                let (a, b) = if flip { (local.1, local.0) } else { local };
                map[a] = host.0;
                map[b] = host.1;
            }
        }
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = n;
                n += 1;
            }
        }
        for &(a, b) in part.edges() {
            edges.push((map[a], map[b]));
        }
        for t in &part_triangles {
            triangles.push([map[t[0]], map[t[1]], map[t[2]]]);
        }
        // glued edges may now be duplicated
        edges = Graph::new(n, &edges).expect("valid").edges().to_vec();
    }

    let mut g = Graph::new(n, &edges)?;
    let remove = (delete_fraction * g.m() as f64).floor() as usize;
    if remove > 0 {
        let mut order: Vec<(usize, usize)> = g.edges().to_vec();
        order.shuffle(&mut rng);
        let keep: Vec<(usize, usize)> = order[remove..].to_vec();
        g = Graph::new(n, &keep)?;
    }
    Ok(g)
}

/// Retry [`sample_k5_free`] on derived seeds, raising the hub bias as
/// attempts fail, until the maximum degree reaches `min_delta`.
pub fn sample_k5_free_min_delta(
    params: &SampleParams,
    seed: u64,
    min_delta: usize,
) -> Result<Graph> {
    const ATTEMPTS: u64 = 256;
    for attempt in 0..ATTEMPTS {
        let mut p = *params;
        p.hub_bias = (params.hub_bias + attempt as f64 / 64.0).min(1.0);
        let derived = seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(attempt);
        let g = sample_k5_free(&p, if attempt == 0 { seed } else { derived })?;
        if g.max_degree() >= min_delta {
            return Ok(g);
        }
    }
    Err(Error::Unsatisfiable(format!(
        "no sample reached maximum degree {} in {} attempts",
        min_delta, ATTEMPTS
    )))
}
