//! Tree decompositions of edge-maximal K5-minor-free graphs along clique
//! separators of size at most 3.

use serde::Serialize;

use super::{find_addable_edge, has_k5_minor, is_planar, is_wagner};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartKind {
    PlanarTriangulation,
    Wagner,
    /// Bags with at most 4 vertices; always planar.
    Degenerate,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    /// Bag intersection for each tree edge, aligned with `tree_edges`.
    pub separators: Vec<Vec<usize>>,
    pub parts: Vec<PartKind>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub is_tree: bool,
    pub covers_vertices: bool,
    pub covers_edges: bool,
    pub running_intersection: bool,
    pub separators_are_small_cliques: bool,
    pub parts_valid: bool,
    pub degenerate_parts: usize,
}

impl DecompositionReport {
    pub fn ok(&self) -> bool {
        self.is_tree
            && self.covers_vertices
            && self.covers_edges
            && self.running_intersection
            && self.separators_are_small_cliques
            && self.parts_valid
    }
}

pub fn classify_part(g: &Graph, bag: &[usize]) -> PartKind {
    let (sub, _) = g.induced(bag);
    if sub.n() <= 4 {
        PartKind::Degenerate
    } else if sub.m() == 3 * sub.n() - 6 && is_planar(&sub).planar {
        PartKind::PlanarTriangulation
    } else if is_wagner(&sub) {
        PartKind::Wagner
    } else {
        PartKind::Other
    }
}

impl TreeDecomposition {
    /// Check the tree-decomposition axioms, 3-simplicity and part shapes.
    pub fn validate(&self, g: &Graph) -> DecompositionReport {
        let k = self.bags.len();
        let mut tree_adj = vec![Vec::new(); k];
        for &(a, b) in &self.tree_edges {
            tree_adj[a].push(b);
            tree_adj[b].push(a);
        }
        let tree = Graph::new(k, &self.tree_edges).ok();
        let is_tree = k >= 1
            && self.tree_edges.len() == k - 1
            && tree.as_ref().is_some_and(|t| t.is_connected());

        let mut covered = vec![false; g.n()];
        for bag in &self.bags {
            for &v in bag {
                if v < g.n() {
                    covered[v] = true;
                }
            }
        }
        let covers_vertices = covered.iter().all(|&c| c);
        let covers_edges = g
            .edges()
            .iter()
            .all(|&(u, v)| self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)));

        // running intersection: bags containing each vertex form a subtree
        let mut running_intersection = is_tree;
        if is_tree {
            for v in 0..g.n() {
                let holders: Vec<usize> = (0..k).filter(|&t| self.bags[t].contains(&v)).collect();
                if holders.is_empty() {
                    continue;
                }
                let mut seen = vec![false; k];
                seen[holders[0]] = true;
                let mut stack = vec![holders[0]];
                let mut count = 1;
                while let Some(t) = stack.pop() {
                    for &s in &tree_adj[t] {
                        if !seen[s] && self.bags[s].contains(&v) {
                            seen[s] = true;
                            count += 1;
                            stack.push(s);
                        }
                    }
                }
                if count != holders.len() {
                    running_intersection = false;
                }
            }
        }

        let separators_are_small_cliques =
            self.tree_edges
                .iter()
                .zip(&self.separators)
                .all(|(&(a, b), sep)| {
                    let mut inter: Vec<usize> = self.bags[a]
                        .iter()
                        .copied()
                        .filter(|v| self.bags[b].contains(v))
                        .collect();
                    inter.sort_unstable();
                    let mut s = sep.clone();
                    s.sort_unstable();
                    inter == s
                        && s.len() <= 3
                        && s.iter()
                            .enumerate()
                            .all(|(i, &x)| s[i + 1..].iter().all(|&y| g.has_edge(x, y)))
                });
        let parts_valid = self
            .bags
            .iter()
            .zip(&self.parts)
            .all(|(bag, &kind)| kind != PartKind::Other && classify_part(g, bag) == kind);
        let degenerate_parts = self
            .parts
            .iter()
            .filter(|&&p| p == PartKind::Degenerate)
            .count();
        DecompositionReport {
            is_tree,
            covers_vertices,
            covers_edges,
            running_intersection,
            separators_are_small_cliques,
            parts_valid,
            degenerate_parts,
        }
    }
}

/// Split recursively on clique separators of size at most 3, smallest size
/// first and lexicographically smallest within a size.
pub fn tree_decompose_3simple(g: &Graph) -> Result<TreeDecomposition> {
    if g.n() < 4 {
        return Err(Error::Precondition(
            "graph has fewer than 4 vertices".into(),
        ));
    }
    if has_k5_minor(g).has_minor {
        return Err(Error::Precondition("graph has a K5 minor".into()));
    }
    if let Some((u, v)) = find_addable_edge(g) {
        return Err(Error::Precondition(format!(
            "graph is not edge-maximal: adding ({}, {}) keeps it K5-minor-free",
            u, v
        )));
    }
    Ok(decompose_unchecked(g))
}

pub(crate) fn decompose_unchecked(g: &Graph) -> TreeDecomposition {
    let mut td = TreeDecomposition {
        bags: Vec::new(),
        tree_edges: Vec::new(),
        separators: Vec::new(),
        parts: Vec::new(),
    };
    let all: Vec<usize> = (0..g.n()).collect();
    split(g, &all, &mut td);
    td.parts = td.bags.iter().map(|b| classify_part(g, b)).collect();
    td
}

/// Decompose the piece induced by `piece`, appending its bags and tree edges.
fn split(g: &Graph, piece: &[usize], td: &mut TreeDecomposition) {
    let (sub, ids) = g.induced(piece);
    let Some((sep, comps)) = first_clique_separator(&sub) else {
        td.bags.push(ids);
        return;
    };
    let sep_global: Vec<usize> = sep.iter().map(|&v| ids[v]).collect();
    let mut anchor: Option<usize> = None;
    for comp in comps {
        let mut child: Vec<usize> = comp.iter().chain(sep.iter()).map(|&v| ids[v]).collect();
        child.sort_unstable();
        let first = td.bags.len();
        split(g, &child, td);
        let holder = (first..td.bags.len())
            .find(|&t| sep_global.iter().all(|v| td.bags[t].contains(v)))
            .expect("a clique lies inside some bag");
        match anchor {
            None => anchor = Some(holder),
            Some(a) => {
                td.tree_edges.push((a, holder));
                td.separators.push(sep_global.clone());
            }
        }
    }
}

fn first_clique_separator(g: &Graph) -> Option<(Vec<usize>, Vec<Vec<usize>>)> {
    let n = g.n();
    let try_sep = |sep: &[usize]| -> Option<Vec<Vec<usize>>> {
        let (rest, ids) = g.remove_vertices(sep);
        let comps = rest.components();
        (comps.len() >= 2).then(|| {
            comps
                .into_iter()
                .map(|c| c.into_iter().map(|v| ids[v]).collect())
                .collect()
        })
    };
    for a in 0..n {
        if let Some(c) = try_sep(&[a]) {
            return Some((vec![a], c));
        }
    }
    for &(a, b) in g.edges() {
        if let Some(c) = try_sep(&[a, b]) {
            return Some((vec![a, b], c));
        }
    }
    for &(a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.has_edge(a, c) {
                if let Some(comps) = try_sep(&[a, b, c]) {
                    return Some((vec![a, b, c], comps));
                }
            }
        }
    }
    None
}
