use crate::error::{Error, Result};
use crate::graph::Graph;

/// Suppress every 2-vertex of the input: remove it and join its two
/// neighbours, dropping duplicate edges. Vertices are processed in ascending
/// id with degrees recomputed after each step.
pub fn contract_2_vertices(g: &Graph) -> Result<Graph> {
    Ok(contract_2_vertices_mapped(g)?.0)
}

/// As [`contract_2_vertices`], also returning the original id of each
/// surviving vertex.
pub fn contract_2_vertices_mapped(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 2) {
        return Err(Error::Precondition(format!(
            "vertex {} has degree {}; only minimum degree 2 is supported",
            v,
            g.degree(v)
        )));
    }
    let twos: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 2).collect();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = (0..g.n())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    for &u in &twos {
        if adj[u].len() != 2 {
            return Err(Error::Precondition(format!(
                "2-vertex {} has degree {} after earlier contractions",
                u,
                adj[u].len()
            )));
        }
        let mut it = adj[u].iter().copied();
        let (a, b) = (it.next().expect("two"), it.next().expect("two"));
        adj[a].remove(&u);
        adj[b].remove(&u);
        adj[u].clear();
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let keep: Vec<usize> = (0..g.n())
        .filter(|v| twos.binary_search(v).is_err())
        .collect();
    let mut new_id = vec![usize::MAX; g.n()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let edges: Vec<(usize, usize)> = keep
        .iter()
        .flat_map(|&v| adj[v].iter().filter(move |&&w| w > v).map(move |&w| (v, w)))
        .map(|(v, w)| (new_id[v], new_id[w]))
        .collect();
    Ok((Graph::new(keep.len(), &edges)?, keep))
}

/// Delete two degree-3 vertices `u`, `w` with the same independent
/// neighbourhood `S` and put a triangle on `S`. Surviving vertices keep
/// their relative order.
pub fn lemma3_reduction(g: &Graph, u: usize, w: usize, s: [usize; 3]) -> Result<Graph> {
    for v in [u, w].iter().chain(&s) {
        if *v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: *v,
                n: g.n(),
            });
        }
    }
    let mut sorted = s;
    sorted.sort_unstable();
    if u == w || sorted[0] == sorted[1] || sorted[1] == sorted[2] {
        return Err(Error::Precondition("u, w and S must be distinct".into()));
    }
    for x in [u, w] {
        if g.neighbors(x) != sorted {
            return Err(Error::Precondition(format!("N({}) is not {:?}", x, sorted)));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if g.has_edge(sorted[i], sorted[j]) {
                return Err(Error::Precondition(format!(
                    "S is not independent: ({}, {}) is an edge",
                    sorted[i], sorted[j]
                )));
            }
        }
    }
    let with_triangle = g.with_edges(&[(s[0], s[1]), (s[1], s[2]), (s[0], s[2])])?;
    Ok(with_triangle.remove_vertices(&[u, w]).0)
}
