use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ConfigKind {
    C1,
    C2,
    C3,
}

/// A vertex `x` with neighbours meeting one of three degree/triangle
/// patterns (degrees taken in `G`, neighbours taken in `H`):
///
/// - `C1 (x, y, z)`: `d(z) < 16 - d(x) - d(y)` and `xz` lies in at least
///   `d(x) + d(y) - 9` triangles avoiding `y`;
/// - `C2 (x, v, w, y, z)`: `d(w) <= 5`, `d(y) = d(z) = 5`, and `vwx`, `xyz`
///   are triangles;
/// - `C3 (x, v, w, y, z)`: `d(v), d(w) < 7`, `d(y) = d(z) = 5`, and `xyz`
///   is a triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibleConfiguration {
    pub kind: ConfigKind,
    pub vertices: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
}

/// First configuration in `G` itself.
pub fn find_configuration(g: &Graph) -> Option<ReducibleConfiguration> {
    find_configuration_in(g, &[])
}

/// First configuration in `H = G - Y`, scanning kinds in order and witness
/// tuples lexicographically within a kind.
pub fn find_configuration_in(g: &Graph, y: &[usize]) -> Option<ReducibleConfiguration> {
    let mut in_h = vec![true; g.n()];
    for &v in y {
        in_h[v] = false;
    }
    let nh: Vec<Vec<usize>> = (0..g.n())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| in_h[u])
                .collect()
        })
        .collect();
    let xs: Vec<usize> = (0..g.n()).filter(|&v| in_h[v]).collect();
    let d = |v: usize| g.degree(v) as i64;

    for &x in &xs {
        for &yv in &nh[x] {
            for &z in &nh[x] {
                if z == yv || d(z) >= 16 - d(x) - d(yv) {
                    continue;
                }
                let tris = triangles_avoiding(g, x, z, yv);
                if tris.len() as i64 >= d(x) + d(yv) - 9 {
                    return Some(ReducibleConfiguration {
                        kind: ConfigKind::C1,
                        vertices: vec![x, yv, z],
                        triangles: tris,
                    });
                }
            }
        }
    }
    for &x in &xs {
        let n = &nh[x];
        for &v in n {
            for &w in n
                .iter()
                .filter(|&&w| w != v && d(w) <= 5 && g.has_edge(v, w))
            {
                for &yv in n.iter().filter(|&&u| u != v && u != w && d(u) == 5) {
                    for &z in n
                        .iter()
                        .filter(|&&u| u != v && u != w && u != yv && d(u) == 5 && g.has_edge(yv, u))
                    {
                        return Some(ReducibleConfiguration {
                            kind: ConfigKind::C2,
                            vertices: vec![x, v, w, yv, z],
                            triangles: vec![[v, w, x], [x, yv, z]],
                        });
                    }
                }
            }
        }
    }
    for &x in &xs {
        let n = &nh[x];
        for &v in n.iter().filter(|&&u| d(u) < 7) {
            for &w in n.iter().filter(|&&u| u != v && d(u) < 7) {
                for &yv in n.iter().filter(|&&u| u != v && u != w && d(u) == 5) {
                    for &z in n
                        .iter()
                        .filter(|&&u| u != v && u != w && u != yv && d(u) == 5 && g.has_edge(yv, u))
                    {
                        return Some(ReducibleConfiguration {
                            kind: ConfigKind::C3,
                            vertices: vec![x, v, w, yv, z],
                            triangles: vec![[x, yv, z]],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Triangles of `G` through the edge `xz` whose third vertex is not `avoid`.
fn triangles_avoiding(g: &Graph, x: usize, z: usize, avoid: usize) -> Vec<[usize; 3]> {
    g.common_neighbors(x, z)
        .into_iter()
        .filter(|&t| t != avoid)
        .map(|t| [x, z, t])
        .collect()
}

/// Re-check a witness against the literal conditions.
pub fn verify_configuration(g: &Graph, y: &[usize], c: &ReducibleConfiguration) -> bool {
    let in_h = |v: usize| v < g.n() && !y.contains(&v);
    if !c.vertices.iter().all(|&v| in_h(v)) {
        return false;
    }
    let mut distinct = c.vertices.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != c.vertices.len() {
        return false;
    }
    let d = |v: usize| g.degree(v) as i64;
    let x = c.vertices[0];
    if !c.vertices[1..].iter().all(|&u| g.has_edge(x, u)) {
        return false;
    }
    match (c.kind, c.vertices.as_slice()) {
        (ConfigKind::C1, &[x, yv, z]) => {
            d(z) < 16 - d(x) - d(yv)
                && triangles_avoiding(g, x, z, yv).len() as i64 >= d(x) + d(yv) - 9
        }
        (ConfigKind::C2, &[_, v, w, yv, z]) => {
            d(w) <= 5 && d(yv) == 5 && d(z) == 5 && g.has_edge(v, w) && g.has_edge(yv, z)
        }
        (ConfigKind::C3, &[_, v, w, yv, z]) => {
            d(v) < 7 && d(w) < 7 && d(yv) == 5 && d(z) == 5 && g.has_edge(yv, z)
        }
        _ => false,
    }
}
