use std::collections::BTreeSet;

use serde::Serialize;

use super::DischargingContext;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Plane graph with a non-empty `Y`; condition (c) looks inside `H = G - Y`.
    PlanarLemma1,
    /// `Y` is empty and condition (c) looks inside `G`.
    K5Lemma3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub passed: bool,
    pub vertex: Option<usize>,
    /// Offending edge, oriented as `(x, y)` in the condition's wording.
    pub edge: Option<(usize, usize)>,
    pub detail: Option<String>,
}

impl ConditionResult {
    fn pass() -> Self {
        ConditionResult {
            passed: true,
            vertex: None,
            edge: None,
            detail: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub mode: Mode,
    /// Every degree is at most 7.
    pub max_degree_ok: bool,
    pub a: ConditionResult,
    pub b: ConditionResult,
    pub c: ConditionResult,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.max_degree_ok && self.a.passed && self.b.passed && self.c.passed
    }
}

pub fn check_context_hypotheses(ctx: &DischargingContext) -> HypothesisReport {
    evaluate(ctx.embedding().graph(), ctx.y(), Mode::PlanarLemma1)
}

/// Check conditions (a)-(c). Degrees are always taken in `G`.
///
/// - (a) every vertex of `H` has degree at least 3;
/// - (b) for every edge `xy` of `H`, in both orientations, `x` has at least
///   `8 - d(y) - |N_Y(x)|` neighbours of degree 7 outside `{y} ∪ Y`;
/// - (c) for every edge `xy` of `H` with `d(x), d(y) < 7` and
///   `d(x) + d(y) = 9`, every vertex of `N(N({x, y})) - {x, y}` has degree 7,
///   where `N(S)` is the union of the neighbourhoods of `S` minus `S`.
pub fn check_hypotheses(g: &Graph, y: &[usize], mode: Mode) -> Result<HypothesisReport> {
    if let Some(&v) = y.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    match mode {
        Mode::K5Lemma3 if !y.is_empty() => {
            return Err(Error::Precondition(
                "Y must be empty in k5-lemma3 mode".into(),
            ));
        }
        Mode::PlanarLemma1 => {
            if y.is_empty() || y.len() > 3 {
                return Err(Error::Precondition(format!(
                    "Y must have 1 to 3 vertices, got {}",
                    y.len()
                )));
            }
            for (i, &a) in y.iter().enumerate() {
                if let Some(&b) = y[i + 1..].iter().find(|&&b| g.has_edge(a, b) || a == b) {
                    return Err(Error::Precondition(format!(
                        "Y is not independent at ({}, {})",
                        a, b
                    )));
                }
            }
            if !g
                .edges()
                .iter()
                .any(|(a, b)| !y.contains(a) && !y.contains(b))
            {
                return Err(Error::Precondition("H = G - Y has no edge".into()));
            }
        }
        _ => {}
    }
    Ok(evaluate(g, y, mode))
}

fn evaluate(g: &Graph, y: &[usize], mode: Mode) -> HypothesisReport {
    let mut in_y = vec![false; g.n()];
    for &v in y {
        in_y[v] = true;
    }
    let d = |v: usize| g.degree(v);
    let h_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(a, b)| !in_y[a] && !in_y[b])
        .collect();

    let a = match (0..g.n()).find(|&v| !in_y[v] && d(v) < 3) {
        Some(v) => ConditionResult {
            passed: false,
            vertex: Some(v),
            edge: None,
            detail: Some(format!("vertex {} has degree {}", v, d(v))),
        },
        None => ConditionResult::pass(),
    };

    let mut b = ConditionResult::pass();
    'b: for &(p, q) in &h_edges {
        for (x, yy) in [(p, q), (q, p)] {
            let ny = g.neighbors(x).iter().filter(|&&w| in_y[w]).count() as i64;
            let sevens = g
                .neighbors(x)
                .iter()
                .filter(|&&w| w != yy && !in_y[w] && d(w) == 7)
                .count() as i64;
            let need = 8 - d(yy) as i64 - ny;
            if sevens < need {
                b = ConditionResult {
                    passed: false,
                    vertex: Some(x),
                    edge: Some((x, yy)),
                    detail: Some(format!(
                        "{} has {} qualifying 7-neighbours, needs {}",
                        x, sevens, need
                    )),
                };
                break 'b;
            }
        }
    }

    // (c) looks in H for the planar lemma and in G for the K5 lemma
    let in_scope = |v: usize| mode == Mode::K5Lemma3 || !in_y[v];
    let nbhd = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
        set.iter()
            .flat_map(|&u| g.neighbors(u).iter().copied())
            .filter(|&w| in_scope(w) && !set.contains(&w))
            .collect()
    };
    let mut c = ConditionResult::pass();
    'c: for &(p, q) in &h_edges {
        if d(p) < 7 && d(q) < 7 && d(p) + d(q) == 9 {
            let s: BTreeSet<usize> = [p, q].into_iter().collect();
            let second = nbhd(&nbhd(&s));
            if let Some(&w) = second.iter().find(|&&w| w != p && w != q && d(w) != 7) {
                c = ConditionResult {
                    passed: false,
                    vertex: Some(w),
                    edge: Some((p, q)),
                    detail: Some(format!(
                        "vertex {} near ({}, {}) has degree {}",
                        w,
                        p,
                        q,
                        d(w)
                    )),
                };
                break 'c;
            }
        }
    }

    HypothesisReport {
        mode,
        max_degree_ok: g.max_degree() <= 7,
        a,
        b,
        c,
    }
}
