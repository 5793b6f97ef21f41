use std::collections::BTreeSet;

use serde::Serialize;

use super::{set_neighborhood, AuditFinding, LemmaId};
use crate::graph::Graph;
use crate::minor::has_k5_minor;
use crate::par::{map_indexed, Execution};

fn per_vertex<F>(g: &Graph, f: F) -> Vec<AuditFinding>
where
    F: Fn(usize) -> Vec<AuditFinding> + Sync + Send,
{
    let mut out: Vec<AuditFinding> = map_indexed(Execution::default(), g.n(), f)
        .into_iter()
        .flatten()
        .collect();
    out.sort();
    out
}

/// Vizing's adjacency conditions and the corollaries drawn from them.
///
/// - VAL-a: for `uv` with `d(v) = k < Δ`, `u` has at least `Δ − k + 1`
///   neighbours of degree Δ;
/// - VAL-b: for `uv` with `d(v) = Δ`, `u` has at least two Δ-neighbours;
/// - COR-a: `δ ≥ 2`;
/// - COR-b: at least two Δ-neighbours everywhere, and, when `Δ ≥ 3`, at
///   most one neighbour of degree 2 (the 5-cycle is 2-critical and breaks
///   that clause at `Δ = 2`);
/// - COR-c: `d(u) + d(v) ≥ Δ + 2` on every edge;
/// - COR-d: if `d(u) + d(v) = Δ + 2` then all of `N({u, v})` has degree Δ.
pub fn audit_adjacency(g: &Graph) -> Vec<AuditFinding> {
    let delta = g.max_degree();
    per_vertex(g, |u| {
        let d = |v: usize| g.degree(v);
        let mut out = Vec::new();
        let big = g.neighbors(u).iter().filter(|&&w| d(w) == delta).count();
        for &v in g.neighbors(u) {
            let k = d(v);
            if k < delta && big < delta - k + 1 {
                out.push(AuditFinding::violation(
                    LemmaId::ValA,
                    vec![u, v],
                    format!(
                        "{} has {} Δ-neighbours, needs {} next to {}-vertex {}",
                        u,
                        big,
                        delta - k + 1,
                        k,
                        v
                    ),
                ));
            }
            if k == delta && big < 2 {
                out.push(AuditFinding::violation(
                    LemmaId::ValB,
                    vec![u, v],
                    format!("{} has {} Δ-neighbours next to Δ-vertex {}", u, big, v),
                ));
            }
        }
        if d(u) < 2 {
            out.push(AuditFinding::violation(
                LemmaId::CorA,
                vec![u],
                format!("vertex {} has degree {}", u, d(u)),
            ));
        }
        let twos: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| d(w) == 2)
            .collect();
        if delta >= 3 && twos.len() > 1 {
            let mut w = vec![u];
            w.extend(&twos);
            out.push(AuditFinding::violation(
                LemmaId::CorB,
                w,
                format!("{} has {} neighbours of degree 2", u, twos.len()),
            ));
        }
        if big < 2 {
            out.push(AuditFinding::violation(
                LemmaId::CorB,
                vec![u],
                format!("{} has {} Δ-neighbours", u, big),
            ));
        }
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            if d(u) + d(v) < delta + 2 {
                out.push(AuditFinding::violation(
                    LemmaId::CorC,
                    vec![u, v],
                    format!("d({}) + d({}) = {} < Δ + 2", u, v, d(u) + d(v)),
                ));
            } else if d(u) + d(v) == delta + 2 {
                let s: BTreeSet<usize> = [u, v].into_iter().collect();
                if let Some(&w) = set_neighborhood(g, &s).iter().find(|&&w| d(w) != delta) {
                    out.push(AuditFinding::violation(
                        LemmaId::CorD,
                        vec![u, v, w],
                        format!(
                            "{} next to tight edge ({}, {}) has degree {}",
                            w,
                            u,
                            v,
                            d(w)
                        ),
                    ));
                }
            }
        }
        out
    })
}

/// Second-neighbourhood conditions around tight edges (`d(u) + d(v) = Δ + 2`),
/// with `N(S)` the neighbours of `S` outside `S`:
///
/// - ZHANG-a: all of `N(N({u, v})) − {u, v}` has degree at least Δ − 1;
/// - ZHANG-b: if also `d(u), d(v) < Δ`, all of it has degree Δ.
pub fn audit_neighborhood(g: &Graph) -> Vec<AuditFinding> {
    let delta = g.max_degree();
    per_vertex(g, |u| {
        let d = |v: usize| g.degree(v);
        let mut out = Vec::new();
        for &v in g
            .neighbors(u)
            .iter()
            .filter(|&&v| v > u && d(u) + d(v) == delta + 2)
        {
            let s: BTreeSet<usize> = [u, v].into_iter().collect();
            let second = set_neighborhood(g, &set_neighborhood(g, &s));
            let far: Vec<usize> = second.into_iter().filter(|&w| w != u && w != v).collect();
            if let Some(&w) = far.iter().find(|&&w| d(w) + 1 < delta) {
                out.push(AuditFinding::violation(
                    LemmaId::ZhangA,
                    vec![u, v, w],
                    format!(
                        "{} near tight edge ({}, {}) has degree {} < Δ − 1",
                        w,
                        u,
                        v,
                        d(w)
                    ),
                ));
            }
            if d(u) < delta && d(v) < delta {
                if let Some(&w) = far.iter().find(|&&w| d(w) != delta) {
                    out.push(AuditFinding::violation(
                        LemmaId::ZhangB,
                        vec![u, v, w],
                        format!(
                            "{} near tight edge ({}, {}) has degree {} ≠ Δ",
                            w,
                            u,
                            v,
                            d(w)
                        ),
                    ));
                }
            }
        }
        out
    })
}

/// Forbidden configurations, reported as the lexicographically first
/// witness per anchor vertex (`x` for SZ-1, the shared vertex `z` otherwise).
///
/// - SZ-1 `(x, y, z)`: `x ~ y`, `x ~ z`, `d(z) < 2Δ − d(x) − d(y) + 2`, and
///   `xz` lies in at least `d(x) + d(y) − Δ − 2` triangles avoiding `y`;
/// - SZ-2 `(v, w, x, y, z)`: `d(w) ≤ Δ − 2`, `d(x) + d(y) ≤ Δ + 3`,
///   `d(x), d(y) ≥ 5`, and `vwz`, `xyz` are triangles;
/// - SZ-3 `(v, w, x, y, z)`: `d(v), d(w) ≤ Δ − 1`, `d(x) + d(y) ≤ Δ + 3`,
///   `d(x), d(y) ≥ 4`, `xyz` is a triangle and `z ~ v`, `z ~ w`.
pub fn detect_sz_configs(g: &Graph) -> Vec<AuditFinding> {
    let delta = g.max_degree() as i64;
    per_vertex(g, |a| {
        let d = |v: usize| g.degree(v) as i64;
        let nb = g.neighbors(a);
        let mut out = Vec::new();
        // SZ-1 anchored at x = a
        'sz1: for &y in nb {
            for &z in nb {
                if z == y || d(z) >= 2 * delta - d(a) - d(y) + 2 {
                    continue;
                }
                let tris = g
                    .common_neighbors(a, z)
                    .into_iter()
                    .filter(|&t| t != y)
                    .count() as i64;
                if tris >= d(a) + d(y) - delta - 2 {
                    out.push(AuditFinding::violation(
                        LemmaId::Sz1,
                        vec![a, y, z],
                        format!(
                            "xz in {} triangles avoiding y, needs {}",
                            tris,
                            d(a) + d(y) - delta - 2
                        ),
                    ));
                    break 'sz1;
                }
            }
        }
        // SZ-2 anchored at z = a: triangles vwz and xyz
        'sz2: for &v in nb {
            for &w in nb
                .iter()
                .filter(|&&w| w != v && d(w) <= delta - 2 && g.has_edge(v, w))
            {
                for &x in nb.iter().filter(|&&x| x != v && x != w && d(x) >= 5) {
                    for &y in nb.iter().filter(|&&y| {
                        y != v
                            && y != w
                            && y != x
                            && d(y) >= 5
                            && d(x) + d(y) <= delta + 3
                            && g.has_edge(x, y)
                    }) {
                        out.push(AuditFinding::violation(
                            LemmaId::Sz2,
                            vec![v, w, x, y, a],
                            "vwz and xyz are triangles".into(),
                        ));
                        break 'sz2;
                    }
                }
            }
        }
        // SZ-3 anchored at z = a: triangle xyz plus neighbours v, w of z
        'sz3: for &v in nb.iter().filter(|&&v| d(v) <= delta - 1) {
            for &w in nb.iter().filter(|&&w| w != v && d(w) <= delta - 1) {
                for &x in nb.iter().filter(|&&x| x != v && x != w && d(x) >= 4) {
                    for &y in nb.iter().filter(|&&y| {
                        y != v
                            && y != w
                            && y != x
                            && d(y) >= 4
                            && d(x) + d(y) <= delta + 3
                            && g.has_edge(x, y)
                    }) {
                        out.push(AuditFinding::violation(
                            LemmaId::Sz3,
                            vec![v, w, x, y, a],
                            "xyz is a triangle and z sees v and w".into(),
                        ));
                        break 'sz3;
                    }
                }
            }
        }
        out
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeBoundReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    /// `3(n + Δ − 8)`, the minimum edge count of a Δ-critical graph with `Δ ≥ 8`.
    pub miao_required: Option<usize>,
    pub miao_violated: bool,
    pub k5_minor_free: bool,
    /// `3n − 6`, defined for `n ≥ 3`.
    pub mader_bound: Option<usize>,
    pub mader_holds: bool,
    /// A K5-minor-free graph with `Δ ≥ 8` meets both bounds only if
    /// `3n − 6 ≥ 3(n + Δ − 8)`, which never happens.
    pub bounds_incompatible: bool,
    pub findings: Vec<AuditFinding>,
}

/// Edge-count bounds: the lower bound for Δ-critical graphs with `Δ ≥ 8`
/// (EDGE-MIAO, certifies non-criticality) and the upper bound `3n − 6` for
/// K5-minor-free graphs (EDGE-MADER, informational).
pub fn edge_bound_checks(g: &Graph) -> EdgeBoundReport {
    let (n, m, delta) = (g.n(), g.m(), g.max_degree());
    let miao_required = (delta >= 8).then(|| 3 * (n + delta - 8));
    let miao_violated = miao_required.is_some_and(|r| m < r);
    let k5_minor_free = !has_k5_minor(g).has_minor;
    let mader_bound = (n >= 3).then(|| 3 * n - 6);
    let mader_holds = !k5_minor_free || mader_bound.map_or(true, |b| m <= b);
    let mut findings = Vec::new();
    if let Some(r) = miao_required.filter(|_| miao_violated) {
        findings.push(AuditFinding::violation(
            LemmaId::EdgeMiao,
            Vec::new(),
            format!("m = {} < 3(n + Δ − 8) = {}", m, r),
        ));
    }
    if !mader_holds {
        findings.push(AuditFinding {
            lemma: LemmaId::EdgeMader,
            vertices: Vec::new(),
            detail: format!(
                "K5-minor-free graph with m = {} > 3n − 6 = {}",
                m,
                mader_bound.unwrap_or(0)
            ),
            certifies_not_critical: false,
        });
    }
    EdgeBoundReport {
        n,
        m,
        delta,
        miao_required,
        miao_violated,
        k5_minor_free,
        mader_bound,
        mader_holds,
        bounds_incompatible: k5_minor_free && delta >= 8 && n >= 3,
        findings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::wagner_graph;

    #[test]
    fn star_fails_val_a() {
        let f = audit_adjacency(&Graph::star(3));
        assert!(f
            .iter()
            .any(|x| x.lemma == LemmaId::ValA && x.vertices[0] == 0));
    }

    #[test]
    fn five_cycle_is_clean() {
        let c5 = Graph::cycle(5);
        assert!(audit_adjacency(&c5).is_empty());
        assert!(audit_neighborhood(&c5).is_empty());
        assert!(detect_sz_configs(&c5).is_empty());
        assert!(edge_bound_checks(&c5).findings.is_empty());
    }

    #[test]
    fn tight_edge_sum_is_flagged() {
        // Δ = 3 at vertex 1; edge (0, 1) has d sum 1 + 3 = 4 < Δ + 2
        let g = Graph::new(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(audit_adjacency(&g)
            .iter()
            .any(|f| f.lemma == LemmaId::CorC && f.vertices == vec![0, 1]));
    }

    #[test]
    fn mader_and_miao_arithmetic() {
        let r = edge_bound_checks(&wagner_graph());
        assert_eq!(r.mader_bound, Some(18));
        assert!(r.mader_holds && r.k5_minor_free);
        // star K1,8 plus nothing: n = 9, Δ = 8, m = 8 < 27
        let r = edge_bound_checks(&Graph::star(8));
        assert_eq!(r.miao_required, Some(27));
        assert!(r.miao_violated && r.bounds_incompatible);
    }
}
