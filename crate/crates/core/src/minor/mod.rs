//! K5-minor testing and the structure theory of K5-minor-free graphs.

mod decompose;
mod generate;
mod planarity;

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge_key, Graph};

pub use decompose::{tree_decompose_3simple, DecompositionReport, PartKind, TreeDecomposition};
pub use generate::{
    random_planar_triangulation, sample_k5_free, sample_k5_free_min_delta, SampleParams,
};
pub use planarity::{is_planar, PlanarityResult};

/// The Wagner graph: the 8-cycle `0..7` plus the chords `{i, i + 4}`.
pub fn wagner_graph() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.extend((0..4).map(|i| (i, i + 4)));
    Graph::new(8, &e).expect("valid")
}

/// Exact isomorphism test against the canonical Wagner graph.
pub fn is_wagner(g: &Graph) -> bool {
    if g.n() != 8 || g.m() != 12 || g.degrees().iter().any(|&d| d != 3) {
        return false;
    }
    let w = wagner_graph();
    let mut map = [usize::MAX; 8];
    let mut used = [false; 8];
    fn extend(g: &Graph, w: &Graph, map: &mut [usize; 8], used: &mut [bool; 8], v: usize) -> bool {
        if v == 8 {
            return true;
        }
        for img in 0..8 {
            if used[img] {
                continue;
            }
            let ok = (0..v).all(|u| g.has_edge(u, v) == w.has_edge(map[u], img));
            if ok {
                map[v] = img;
                used[img] = true;
                if extend(g, w, map, used, v + 1) {
                    return true;
                }
                used[img] = false;
            }
        }
        false
    }
    extend(g, &w, &mut map, &mut used, 0)
}

/// Five disjoint connected branch sets, pairwise joined by an edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchDecompositionWitness {
    pub branch_sets: Vec<Vec<usize>>,
    /// One witnessing edge per pair `(i, j)` with `i < j`, in pair order.
    pub certificate: Vec<(usize, usize)>,
}

impl BranchDecompositionWitness {
    /// Re-check every witness condition against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.branch_sets.len() != 5 || self.certificate.len() != 10 {
            return false;
        }
        let mut owner = vec![usize::MAX; g.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set {
                if v >= g.n() || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
            let (sub, _) = g.induced(set);
            if !sub.is_connected() {
                return false;
            }
        }
        let mut k = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                let (a, b) = self.certificate[k];
                k += 1;
                if !g.has_edge(a, b) {
                    return false;
                }
                let pair = (owner[a], owner[b]);
                if pair != (i, j) && pair != (j, i) {
                    return false;
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorResult {
    pub has_minor: bool,
    pub witness: Option<BranchDecompositionWitness>,
}

/// Decide whether `g` has a K5 minor; a witness accompanies every positive
/// answer.
pub fn has_k5_minor(g: &Graph) -> MinorResult {
    let state = MinorState {
        graph: g.clone(),
        sets: (0..g.n()).map(|v| vec![v]).collect(),
    };
    let mut search = Search {
        failed: HashSet::new(),
    };
    match search.run(state) {
        Some(sets) => {
            let witness = build_witness(g, sets);
            debug_assert!(witness.verify(g));
            MinorResult {
                has_minor: true,
                witness: Some(witness),
            }
        }
        None => MinorResult {
            has_minor: false,
            witness: None,
        },
    }
}

fn build_witness(g: &Graph, mut sets: Vec<Vec<usize>>) -> BranchDecompositionWitness {
    for s in &mut sets {
        s.sort_unstable();
    }
    sets.sort();
    let mut owner = vec![usize::MAX; g.n()];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            owner[v] = i;
        }
    }
    let mut certificate = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            let e = g
                .edges()
                .iter()
                .copied()
                .find(|&(a, b)| {
                    (owner[a] == i && owner[b] == j) || (owner[a] == j && owner[b] == i)
                })
                .expect("branch sets are adjacent");
            certificate.push(e);
        }
    }
    BranchDecompositionWitness {
        branch_sets: sets,
        certificate,
    }
}

/// Current minor together with the original vertices merged into each
/// current vertex.
#[derive(Clone)]
struct MinorState {
    graph: Graph,
    sets: Vec<Vec<usize>>,
}

impl MinorState {
    fn contract(&self, u: usize, v: usize) -> MinorState {
        let (keep, gone) = edge_key(u, v);
        let graph = self.graph.contract_edge(keep, gone).expect("edge present");
        let mut sets = self.sets.clone();
        let moved = sets.remove(gone);
        sets[keep].extend(moved);
        MinorState { graph, sets }
    }

    fn delete_vertex(&self, v: usize) -> MinorState {
        let (graph, old) = self.graph.remove_vertices(&[v]);
        let sets = old.iter().map(|&o| self.sets[o].clone()).collect();
        MinorState { graph, sets }
    }

    /// Keep only `keep`, then contract `path` (a walk through kept vertices
    /// starting at a kept vertex) into its first vertex.
    fn restrict(&self, keep: &[usize], path: &[usize]) -> MinorState {
        let (graph, old) = self.graph.induced(keep);
        let mut new_id = vec![usize::MAX; self.graph.n()];
        for (i, &o) in old.iter().enumerate() {
            new_id[o] = i;
        }
        let mut state = MinorState {
            graph,
            sets: old.iter().map(|&o| self.sets[o].clone()).collect(),
        };
        let mut ids: Vec<usize> = path.iter().map(|&v| new_id[v]).collect();
        for i in 1..ids.len() {
            let (keep_id, gone) = edge_key(ids[0], ids[i]);
            state = state.contract(keep_id, gone);
            for x in ids.iter_mut() {
                if *x == gone {
                    *x = keep_id;
                } else if *x > gone {
                    *x -= 1;
                }
            }
        }
        state
    }

    /// Edges keyed by the smallest original vertex of each endpoint set, so
    /// that the same labelled minor reached along different branches maps
    /// to the same key.
    fn key(&self) -> Vec<(u32, u32)> {
        let rep: Vec<u32> = self
            .sets
            .iter()
            .map(|s| *s.iter().min().expect("nonempty") as u32)
            .collect();
        let mut k: Vec<(u32, u32)> = self
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (rep[a], rep[b]);
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        k.sort_unstable();
        k
    }

    /// Remove vertices of degree at most 1 and suppress vertices of degree 2.
    /// Neither step changes whether a K5 minor exists.
    fn reduce(mut self) -> MinorState {
        loop {
            let g = &self.graph;
            let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 2) else {
                return self;
            };
            if g.degree(v) == 2 {
                let (a, b) = (g.neighbors(v)[0], g.neighbors(v)[1]);
                self = if g.has_edge(a, b) {
                    self.delete_vertex(v)
                } else {
                    self.contract(v, a)
                };
            } else {
                self = self.delete_vertex(v);
            }
        }
    }
}

struct Search {
    failed: HashSet<Vec<(u32, u32)>>,
}

impl Search {
    fn run(&mut self, state: MinorState) -> Option<Vec<Vec<usize>>> {
        let state = state.reduce();
        let g = &state.graph;
        if g.n() < 5 {
            return None;
        }
        let key = state.key();
        if self.failed.contains(&key) {
            return None;
        }
        if let Some(clique) = find_k5_subgraph(g) {
            return Some(clique.iter().map(|&v| state.sets[v].clone()).collect());
        }
        let dense = g.m() > 3 * g.n() - 6;
        if !dense && is_planar(g).planar {
            self.failed.insert(key);
            return None;
        }
        // A K5 minor of a clique-sum lives in one summand.
        if let Some(pieces) = split_pieces(&state) {
            for piece in pieces {
                if let Some(found) = self.run(piece) {
                    return Some(found);
                }
            }
            self.failed.insert(key);
            return None;
        }
        // Some branch set of any model holds an edge, so trying every
        // contraction is complete.
        let mut order: Vec<(usize, usize)> = g.edges().to_vec();
        order.sort_by_key(|&(a, b)| (std::cmp::Reverse(g.degree(a) + g.degree(b)), a, b));
        for (u, v) in order {
            if let Some(found) = self.run(state.contract(u, v)) {
                return Some(found);
            }
        }
        self.failed.insert(key);
        None
    }
}

/// Pieces of a split along a clique separator (at most 4 vertices) or along a
/// non-adjacent 2-separator `{a, b}`, where each piece gets the virtual edge
/// `ab` realised by contracting a path through another component.
fn split_pieces(state: &MinorState) -> Option<Vec<MinorState>> {
    let g = &state.graph;
    let n = g.n();
    let comps = g.components();
    if comps.len() > 1 {
        return Some(comps.iter().map(|c| state.restrict(c, &[])).collect());
    }
    let separated = |sep: &[usize]| -> Option<Vec<Vec<usize>>> {
        let (rest, ids) = g.remove_vertices(sep);
        let comps = rest.components();
        (comps.len() >= 2).then(|| {
            comps
                .into_iter()
                .map(|c| c.into_iter().map(|v| ids[v]).collect())
                .collect()
        })
    };
    let clique_pieces = |sep: &[usize], comps: Vec<Vec<usize>>| -> Vec<MinorState> {
        comps
            .into_iter()
            .map(|mut c| {
                c.extend_from_slice(sep);
                state.restrict(&c, &[])
            })
            .collect()
    };
    for a in 0..n {
        if let Some(c) = separated(&[a]) {
            return Some(clique_pieces(&[a], c));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let Some(comps) = separated(&[a, b]) else {
                continue;
            };
            if g.has_edge(a, b) {
                return Some(clique_pieces(&[a, b], comps));
            }
            // 2-connected, so every component sees both a and b
            let pieces = (0..comps.len())
                .map(|i| {
                    let other = &comps[if i == 0 { 1 } else { 0 }];
                    let path = interior_path(g, a, b, other);
                    let mut keep = comps[i].clone();
                    keep.extend_from_slice(&[a, b]);
                    keep.extend_from_slice(&path);
                    let mut walk = vec![a];
                    walk.extend_from_slice(&path);
                    state.restrict(&keep, &walk)
                })
                .collect();
            return Some(pieces);
        }
    }
    for &(a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c <= b || !g.has_edge(a, c) {
                continue;
            }
            if let Some(comps) = separated(&[a, b, c]) {
                return Some(clique_pieces(&[a, b, c], comps));
            }
            for &d in g.neighbors(c) {
                if d > c && g.has_edge(a, d) && g.has_edge(b, d) {
                    if let Some(comps) = separated(&[a, b, c, d]) {
                        return Some(clique_pieces(&[a, b, c, d], comps));
                    }
                }
            }
        }
    }
    None
}

/// Interior vertices of a shortest `a`-`b` path whose interior lies in `inside`.
fn interior_path(g: &Graph, a: usize, b: usize, inside: &[usize]) -> Vec<usize> {
    let mut allowed = vec![false; g.n()];
    for &v in inside {
        allowed[v] = true;
    }
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::new();
    for &v in g.neighbors(a) {
        if allowed[v] && parent[v] == usize::MAX {
            parent[v] = v;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        if g.has_edge(v, b) {
            let mut path = vec![v];
            let mut x = v;
            while parent[x] != x {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return path;
        }
        for &w in g.neighbors(v) {
            if allowed[w] && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("component touches both separator vertices")
}

fn find_k5_subgraph(g: &Graph) -> Option<Vec<usize>> {
    fn grow(g: &Graph, clique: &mut Vec<usize>, cand: &[usize]) -> bool {
        if clique.len() == 5 {
            return true;
        }
        for (i, &v) in cand.iter().enumerate() {
            if clique.len() + cand.len() - i < 5 {
                return false;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            clique.push(v);
            if grow(g, clique, &next) {
                return true;
            }
            clique.pop();
        }
        false
    }
    let cand: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    let mut clique = Vec::new();
    grow(g, &mut clique, &cand).then_some(clique)
}

/// Add non-edges in ascending order whenever the graph stays K5-minor-free.
/// One pass suffices: a rejected edge stays rejected in every supergraph.
pub fn maximalize_k5_free(g: &Graph) -> Result<Graph> {
    if has_k5_minor(g).has_minor {
        return Err(Error::HasK5Minor);
    }
    let mut cur = g.clone();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if cur.has_edge(u, v) {
                continue;
            }
            let cand = cur.with_edges(&[(u, v)])?;
            if !has_k5_minor(&cand).has_minor {
                cur = cand;
            }
        }
    }
    Ok(cur)
}

/// Non-edge whose addition keeps `g` K5-minor-free, if any.
pub fn find_addable_edge(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                let cand = g.with_edges(&[(u, v)]).expect("valid");
                if !has_k5_minor(&cand).has_minor {
                    return Some((u, v));
                }
            }
        }
    }
    None
}
