//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! Adjacency lists are kept sorted ascending; every iteration order in the
//! crate derives from that.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Normalize an edge so the smaller endpoint comes first.
#[inline]
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Build a simple graph; duplicate pairs are merged.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edge_list {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert(edge_key(u, v));
        }
        Ok(Self::from_sorted_set(n, set))
    }

    fn from_sorted_set(n: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let edges: Vec<_> = set.into_iter().collect();
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).expect("valid")
    }

    /// K_{1,k} with the center at vertex 0.
    pub fn star(k: usize) -> Self {
        let e: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::new(k + 1, &e).expect("valid")
    }

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, i + 5));
        }
        Graph::new(10, &e).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&edge_key(u, v)).ok()
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Contract `{u, v}`: the merged vertex keeps id `min(u, v)`, the larger
    /// id is removed and every id above it shifts down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u, v));
        }
        let (keep, gone) = edge_key(u, v);
        let relabel = |w: usize| -> usize {
            let w = if w == gone { keep } else { w };
            if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut set = BTreeSet::new();
        for &(a, b) in &self.edges {
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                set.insert(edge_key(a, b));
            }
        }
        Ok(Self::from_sorted_set(self.n - 1, set))
    }

    /// `N_G(X)`: union of neighborhoods of `X`, minus `X` itself.
    pub fn neighborhood_of_set(&self, x: &[usize]) -> Result<BTreeSet<usize>> {
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let inside: BTreeSet<usize> = x.iter().copied().collect();
        let mut out = BTreeSet::new();
        for &u in &inside {
            if u >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    n: self.n,
                });
            }
            for &w in &self.adj[u] {
                if !inside.contains(&w) {
                    out.insert(w);
                }
            }
        }
        Ok(out)
    }

    /// Subgraph induced by `keep` (in ascending order), relabelled densely.
    /// Returns the graph and the map new id -> old id.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut old_ids: Vec<usize> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut set = BTreeSet::new();
        for &(a, b) in &self.edges {
            if new_id[a] != usize::MAX && new_id[b] != usize::MAX {
                set.insert((new_id[a], new_id[b]));
            }
        }
        (Self::from_sorted_set(old_ids.len(), set), old_ids)
    }

    pub fn remove_vertices(&self, gone: &[usize]) -> (Graph, Vec<usize>) {
        let drop: BTreeSet<usize> = gone.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n).filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut all = self.edges.clone();
        all.extend_from_slice(extra);
        Graph::new(self.n, &all)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let key = edge_key(u, v);
        let idx = self
            .edges
            .binary_search(&key)
            .map_err(|_| Error::MissingEdge(u, v))?;
        let mut set: BTreeSet<_> = self.edges.iter().copied().collect();
        set.remove(&self.edges[idx]);
        Ok(Self::from_sorted_set(self.n, set))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Connected and no cut vertex; requires at least 3 vertices.
    pub fn is_biconnected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for v in 0..self.n {
            let (rest, _) = self.remove_vertices(&[v]);
            let before = self.components().len();
            let after = rest.components().len();
            // a vertex is a cut vertex when its removal splits its component
            if after > before - usize::from(self.degree(v) == 0) {
                out.push(v);
            }
        }
        out
    }

    /// Parse the edge-list interchange format: a header line `n m`, then
    /// `m` lines `u v`. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two integers, found {:?}", line),
                });
            }
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("not a non-negative integer: {:?}", s),
                })
            };
            let (a, b) = (parse(parts[0])?, parse(parts[1])?);
            match header {
                None => header = Some((a, b)),
                Some((n, _)) => {
                    for w in [a, b] {
                        if w >= n {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!("vertex {} out of range for n = {}", w, n),
                            });
                        }
                    }
                    if a == b {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("self-loop at vertex {}", a),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: 0,
                message: format!("header declares {} edges, found {}", m, edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{} {}", u, v);
        }
        s
    }

    /// Girth, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}
