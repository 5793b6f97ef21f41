//! Planarity testing by path addition (Demoucron, Malgrange and Pertuiset),
//! run per biconnected block. Block rotations are concatenated at cut
//! vertices, which keeps the combined rotation system planar.

use std::collections::{HashSet, VecDeque};

use crate::graph::{edge_key, Graph};
use crate::plane::PlaneEmbedding;

#[derive(Debug, Clone)]
pub struct PlanarityResult {
    pub planar: bool,
    /// Present when the graph is planar, connected and has an edge.
    pub embedding: Option<PlaneEmbedding>,
}

pub fn is_planar(g: &Graph) -> PlanarityResult {
    // quick reject from the edge bound
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return PlanarityResult {
            planar: false,
            embedding: None,
        };
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).expect("in block");
        let local_edges: Vec<(usize, usize)> =
            block.iter().map(|&(u, v)| (local(u), local(v))).collect();
        let bg = Graph::new(verts.len(), &local_edges).expect("valid block");
        match embed_biconnected(&bg) {
            Some(rot) => {
                for (lv, list) in rot.into_iter().enumerate() {
                    rotation[verts[lv]].extend(list.into_iter().map(|u| verts[u]));
                }
            }
            None => {
                return PlanarityResult {
                    planar: false,
                    embedding: None,
                }
            }
        }
    }
    let embedding = if g.m() > 0 && g.is_connected() {
        let emb = PlaneEmbedding::new(g.clone(), rotation)
            .expect("path addition yields a planar rotation system");
        Some(emb)
    } else {
        None
    };
    PlanarityResult {
        planar: true,
        embedding,
    }
}

/// Edge sets of the biconnected blocks, in discovery order.
pub(crate) fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(edge_key(e.0, e.1));
                            if e == (parent, u) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Path-addition embedding of a biconnected graph with at least 3 vertices.
/// Returns the clockwise rotation at each vertex.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut emb_vertex = vec![false; n];
    let mut emb_edges: HashSet<(usize, usize)> = HashSet::new();
    let cycle = find_cycle(g)?;
    for i in 0..cycle.len() {
        emb_vertex[cycle[i]] = true;
        emb_edges.insert(edge_key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, rev];

    while emb_edges.len() < g.m() {
        let fragments = fragments(g, &emb_vertex, &emb_edges);
        let mut choice: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_id) = choice.expect("at least one fragment remains");
        let path = fragment_path(g, &fragments[fi], &emb_vertex);
        for w in path.windows(2) {
            emb_edges.insert(edge_key(w[0], w[1]));
        }
        for &v in &path {
            emb_vertex[v] = true;
        }
        let face = faces[face_id].clone();
        let (a, b) = (path[0], *path.last().expect("nonempty"));
        let i = face
            .iter()
            .position(|&x| x == a)
            .expect("attachment on face");
        let j = face
            .iter()
            .position(|&x| x == b)
            .expect("attachment on face");
        let len = face.len();
        let interior = &path[1..path.len() - 1];
        let mut first = Vec::new();
        let mut k = i;
        loop {
            first.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        first.extend(interior.iter().rev());
        let mut second = Vec::new();
        let mut k = j;
        loop {
            second.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        second.extend(interior.iter());
        faces[face_id] = first;
        faces.push(second);
    }

    // successor maps: arriving at v from u, the face continues to succ[v][u]
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for face in &faces {
        let len = face.len();
        for k in 0..len {
            let prev = face[(k + len - 1) % len];
            let cur = face[k];
            let next = face[(k + 1) % len];
            succ[cur].push((prev, next));
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        let map = &succ[v];
        let start = g.neighbors(v)[0];
        let mut cur = start;
        loop {
            rotation[v].push(cur);
            cur = map.iter().find(|&&(p, _)| p == cur).map(|&(_, nx)| nx)?;
            if cur == start {
                break;
            }
            if rotation[v].len() > g.degree(v) {
                return None;
            }
        }
        if rotation[v].len() != g.degree(v) {
            return None;
        }
    }
    Some(rotation)
}

fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    // shortest path from 0 to its first neighbor avoiding their edge
    let target = *g.neighbors(0).first()?;
    let mut parent = vec![usize::MAX; g.n()];
    parent[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if u == 0 && w == target {
                continue;
            }
            if parent[w] == usize::MAX {
                parent[w] = u;
                if w == target {
                    let mut path = vec![target];
                    let mut x = target;
                    while x != 0 {
                        x = parent[x];
                        path.push(x);
                    }
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

struct Fragment {
    attachments: Vec<usize>,
    /// Unembedded vertices; empty for a chord.
    inner: Vec<usize>,
}

fn fragments(g: &Graph, emb_vertex: &[bool], emb_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        if emb_vertex[u] && emb_vertex[v] && !emb_edges.contains(&(u, v)) {
            out.push(Fragment {
                attachments: vec![u, v],
                inner: Vec::new(),
            });
        }
    }
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if emb_vertex[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = vec![s];
        let mut att = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if emb_vertex[w] {
                    att.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    inner.push(w);
                    queue.push_back(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        inner.sort_unstable();
        out.push(Fragment {
            attachments: att,
            inner,
        });
    }
    out
}

/// A path between two distinct attachments through the fragment.
fn fragment_path(g: &Graph, frag: &Fragment, emb_vertex: &[bool]) -> Vec<usize> {
    if frag.inner.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let b = frag.attachments[1];
    let inner: HashSet<usize> = frag.inner.iter().copied().collect();
    let mut parent = std::collections::HashMap::new();
    let mut queue = VecDeque::new();
    for &w in g.neighbors(a) {
        if inner.contains(&w) && !emb_vertex[w] {
            parent.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        if g.has_edge(u, b) {
            let mut path = vec![b, u];
            let mut x = u;
            while let Some(&p) = parent.get(&x) {
                path.push(p);
                if p == a {
                    break;
                }
                x = p;
            }
            path.reverse();
            return path;
        }
        for &w in g.neighbors(u) {
            if inner.contains(&w) && !parent.contains_key(&w) {
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment is connected and has two attachments")
}
