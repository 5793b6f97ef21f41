//! Independent oracles and graph enumerators shared by the integration
//! tests. Nothing in this file calls into the algorithms under test.
#![allow(dead_code)]

pub mod corpus;

use std::collections::HashMap;

use k5edge::Graph;
use petgraph::graph::UnGraph;
use rand::Rng;

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::<(), ()>::with_capacity(g.n(), g.m());
    let nodes: Vec<_> = (0..g.n()).map(|_| p.add_node(())).collect();
    for &(u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.m() == b.m()
        && petgraph::algo::is_isomorphic(&to_petgraph(a), &to_petgraph(b))
}

/// Isomorphism invariant: per vertex (degree, sorted neighbour degrees), sorted.
fn invariant(g: &Graph) -> (usize, usize, Vec<(usize, Vec<usize>)>) {
    let mut profile: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    profile.sort();
    (g.n(), g.m(), profile)
}

/// Keeps one representative per isomorphism class.
#[derive(Default)]
pub struct IsoSet {
    buckets: HashMap<(usize, usize, Vec<(usize, Vec<usize>)>), Vec<usize>>,
    pub graphs: Vec<Graph>,
}

impl IsoSet {
    pub fn insert(&mut self, g: Graph) -> bool {
        let bucket = self.buckets.entry(invariant(&g)).or_default();
        if bucket.iter().any(|&i| isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }
}

/// All graphs on exactly `n` vertices, one per isomorphism class, built by
/// attaching a new vertex to every subset of a smaller graph.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 0..n {
        let mut next = IsoSet::default();
        for g in &level {
            for mask in 0u32..(1 << k) {
                let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                edges.extend((0..k).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k)));
                next.insert(Graph::new(k + 1, &edges).unwrap());
            }
        }
        level = next.graphs;
    }
    level
}

pub fn connected_graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(all_graphs)
        .filter(|g| g.is_connected())
        .collect()
}

/// Connected graphs with exactly `m` edges for every `m` in `1..=m_max`,
/// grown by adding an edge or a pendant vertex.
pub fn connected_graphs_by_edges(m_max: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::new(2, &[(0, 1)]).unwrap()]];
    for _ in 1..m_max {
        let mut next = IsoSet::default();
        for g in levels.last().unwrap() {
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if !g.has_edge(u, v) {
                        next.insert(g.with_edges(&[(u, v)]).unwrap());
                    }
                }
                let mut edges = g.edges().to_vec();
                edges.push((u, g.n()));
                next.insert(Graph::new(g.n() + 1, &edges).unwrap());
            }
        }
        levels.push(next.graphs);
    }
    levels
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Properness check written from the definition.
pub fn is_proper_edge_coloring(g: &Graph, colors: &[usize], k: usize) -> bool {
    if colors.len() != g.m() || colors.iter().any(|&c| c == 0 || c > k) {
        return false;
    }
    let mut seen = vec![vec![false; k + 1]; g.n()];
    for (&(u, v), &c) in g.edges().iter().zip(colors) {
        if seen[u][c] || seen[v][c] {
            return false;
        }
        seen[u][c] = true;
        seen[v][c] = true;
    }
    true
}

/// Does a proper `k`-edge-coloring exist? Plain depth-first enumeration
/// in edge order, with colors introduced in first-use order.
pub fn naive_colorable(g: &Graph, k: usize) -> bool {
    fn go(
        g: &Graph,
        i: usize,
        k: usize,
        used_max: usize,
        color: &mut Vec<usize>,
        at: &mut Vec<u64>,
    ) -> bool {
        if i == g.m() {
            return true;
        }
        let (u, v) = g.edges()[i];
        for c in 1..=k.min(used_max + 1) {
            let bit = 1u64 << c;
            if at[u] & bit != 0 || at[v] & bit != 0 {
                continue;
            }
            at[u] |= bit;
            at[v] |= bit;
            color[i] = c;
            if go(g, i + 1, k, used_max.max(c), color, at) {
                return true;
            }
            at[u] &= !bit;
            at[v] &= !bit;
        }
        false
    }
    let mut color = vec![0; g.m()];
    let mut at = vec![0u64; g.n()];
    go(g, 0, k, 0, &mut color, &mut at)
}

pub fn naive_chromatic_index(g: &Graph) -> usize {
    (g.max_degree()..).find(|&k| naive_colorable(g, k)).unwrap()
}

/// K5 minor by brute force: some partition of the vertices into connected
/// blocks has five pairwise adjacent blocks. Vertices outside the five
/// branch sets are singleton blocks. Needs `n <= 16`.
pub fn brute_has_k5_minor(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 16);
    if n < 5 {
        return false;
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &w| a | 1 << w))
        .collect();
    let connected = |block: u32| -> bool {
        let start = block & block.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & block & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == block
    };
    let touches = |a: u32, b: u32| -> bool {
        let mut x = a;
        while x != 0 {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            if adj[v] & b != 0 {
                return true;
            }
        }
        false
    };
    // label each vertex 0..=5; label 5 is "not in a branch set", labels 0..5
    // appear in first-use order
    fn assign(
        v: usize,
        n: usize,
        used: usize,
        sets: &mut [u32; 5],
        check: &dyn Fn(&[u32; 5]) -> bool,
    ) -> bool {
        if v == n {
            return used == 5 && check(sets);
        }
        // not enough vertices left to open the missing sets
        if 5 - used > n - v {
            return false;
        }
        if assign(v + 1, n, used, sets, check) {
            return true;
        }
        for s in 0..(used + 1).min(5) {
            sets[s] |= 1 << v;
            let ok = assign(v + 1, n, used.max(s + 1), sets, check);
            sets[s] &= !(1 << v);
            if ok {
                return true;
            }
        }
        false
    }
    let check = |sets: &[u32; 5]| -> bool {
        sets.iter().all(|&b| connected(b))
            && (0..5).all(|i| (i + 1..5).all(|j| touches(sets[i], sets[j])))
    };
    let mut sets = [0u32; 5];
    assign(0, n, 0, &mut sets, &check)
}

/// Face boundaries of a rotation system (rotation[v] clockwise); from dart
/// u→v the walk continues to v→w where w follows u in the rotation at v.
pub fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: std::collections::HashSet<(usize, usize)> = Default::default();
    let mut faces = Vec::new();
    for u in 0..rotation.len() {
        for &v in &rotation[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                walk.push(a);
                let r = &rotation[b];
                let i = r.iter().position(|&x| x == a).unwrap();
                let next = r[(i + 1) % r.len()];
                a = b;
                b = next;
            }
            faces.push(walk);
        }
    }
    faces
}

pub fn wagner() -> Graph {
    let mut e: Vec<(usize, usize)> = (0..8)
        .map(|i| (i, (i + 1) % 8))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    e.extend((0..4).map(|i| (i, i + 4)));
    Graph::new(8, &e).unwrap()
}

/// Five disjoint non-empty connected sets, pairwise joined by an edge.
pub fn is_k5_model(g: &Graph, sets: &[Vec<usize>]) -> bool {
    if sets.len() != 5 {
        return false;
    }
    let mut owner = vec![None; g.n()];
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return false;
        }
        for &v in s {
            if v >= g.n() || owner[v].is_some() {
                return false;
            }
            owner[v] = Some(i);
        }
        let mut seen = vec![s[0]];
        let mut stack = vec![s[0]];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if owner[w] == Some(i) && !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        if seen.len() != s.len() {
            return false;
        }
    }
    (0..5).all(|i| {
        (i + 1..5).all(|j| {
            g.edges().iter().any(|&(u, v)| {
                let (a, b) = (owner[u], owner[v]);
                (a, b) == (Some(i), Some(j)) || (a, b) == (Some(j), Some(i))
            })
        })
    })
}
