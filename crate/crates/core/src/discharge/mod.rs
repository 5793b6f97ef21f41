//! Discharging on plane graphs with a designated outer face `f0` and a small
//! independent set `Y` on it.
//!
//! Vertices start with `d(v) - 6`, faces other than `f0` with `2d(f) - 6`
//! and `f0` with `2d(f0) + 6`; by Euler's formula the total is zero. The
//! rules move charge in one shot: every transfer is computed from the
//! initial structure, never from partially updated charges.

mod charge;
mod config;
mod hypotheses;
mod rules;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plane::PlaneEmbedding;

pub use charge::{Charge, DENOM};
pub use config::{
    find_configuration, find_configuration_in, verify_configuration, ConfigKind,
    ReducibleConfiguration,
};
pub use hypotheses::{
    check_context_hypotheses, check_hypotheses, ConditionResult, HypothesisReport, Mode,
};
pub use rules::{apply_rules, apply_rules_with, Rule, Transfer};

/// An embedding plus the vertex set `Y`; `X` is everything else and
/// `H = G - Y`.
#[derive(Debug, Clone)]
pub struct DischargingContext {
    embedding: PlaneEmbedding,
    y: Vec<usize>,
    in_y: Vec<bool>,
    two_connected: bool,
}

impl DischargingContext {
    /// `Y` must hold 1 to 3 pairwise non-adjacent vertices of the outer face,
    /// and `G - Y` must keep at least one edge.
    pub fn new(embedding: PlaneEmbedding, y: &[usize]) -> Result<Self> {
        let g = embedding.graph();
        let mut ys = y.to_vec();
        ys.sort_unstable();
        ys.dedup();
        if ys.len() != y.len() {
            return Err(Error::Precondition("Y lists a vertex twice".into()));
        }
        if ys.is_empty() || ys.len() > 3 {
            return Err(Error::Precondition(format!(
                "Y must have 1 to 3 vertices, got {}",
                ys.len()
            )));
        }
        if let Some(&v) = ys.iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        for (i, &a) in ys.iter().enumerate() {
            if let Some(&b) = ys[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
                return Err(Error::Precondition(format!(
                    "Y is not independent: ({}, {}) is an edge",
                    a, b
                )));
            }
        }
        let f0 = embedding.outer_face();
        if let Some(&v) = ys.iter().find(|&&v| !embedding.is_incident(v, f0)) {
            return Err(Error::Precondition(format!(
                "Y vertex {} is not on the outer face {}",
                v, f0
            )));
        }
        let mut in_y = vec![false; g.n()];
        for &v in &ys {
            in_y[v] = true;
        }
        if !g.edges().iter().any(|&(a, b)| !in_y[a] && !in_y[b]) {
            return Err(Error::Precondition("G - Y has no edges".into()));
        }
        let two_connected = g.is_biconnected();
        Ok(DischargingContext {
            embedding,
            y: ys,
            in_y,
            two_connected,
        })
    }

    pub fn embedding(&self) -> &PlaneEmbedding {
        &self.embedding
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn in_y(&self, v: usize) -> bool {
        self.in_y[v]
    }

    pub fn in_x(&self, v: usize) -> bool {
        !self.in_y[v]
    }

    /// A 7-vertex of `X` or any vertex of `Y`.
    pub fn is_hi(&self, v: usize) -> bool {
        self.in_y[v] || self.embedding.graph().degree(v) == 7
    }

    pub fn neighbors_x(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.embedding
            .graph()
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !self.in_y[u])
    }

    pub fn neighbors_y(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.embedding
            .graph()
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.in_y[u])
    }

    pub fn is_two_connected(&self) -> bool {
        self.two_connected
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "id")]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

/// Charges on every vertex and face, before and after the transfers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub initial_vertex: Vec<Charge>,
    pub initial_face: Vec<Charge>,
    pub vertex: Vec<Charge>,
    pub face: Vec<Charge>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn get(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.vertex[v],
            Element::Face(f) => self.face[f],
        }
    }

    pub fn initial(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.initial_vertex[v],
            Element::Face(f) => self.initial_face[f],
        }
    }

    pub fn total(&self) -> Charge {
        self.vertex.iter().chain(&self.face).sum()
    }

    pub fn initial_total(&self) -> Charge {
        self.initial_vertex.iter().chain(&self.initial_face).sum()
    }

    /// Charges obtained by replaying the transfer log on the initial charges.
    pub fn replay(&self) -> (Vec<Charge>, Vec<Charge>) {
        let mut vertex = self.initial_vertex.clone();
        let mut face = self.initial_face.clone();
        let mut slot = |e: Element, delta: Charge| match e {
            Element::Vertex(v) => vertex[v] += delta,
            Element::Face(f) => face[f] += delta,
        };
        for t in &self.transfers {
            slot(t.source, -t.amount);
            slot(t.sink, t.amount);
        }
        (vertex, face)
    }
}

/// Initial charges; the ledger has no transfers yet.
pub fn initial_charges(ctx: &DischargingContext) -> ChargeLedger {
    let emb = ctx.embedding();
    let g = emb.graph();
    let vertex: Vec<Charge> = (0..g.n())
        .map(|v| Charge::integer(g.degree(v) as i64 - 6))
        .collect();
    let face: Vec<Charge> = (0..emb.face_count())
        .map(|f| {
            let d = emb.face_degree(f) as i64;
            if f == emb.outer_face() {
                Charge::integer(2 * d + 6)
            } else {
                Charge::integer(2 * d - 6)
            }
        })
        .collect();
    ChargeLedger {
        initial_vertex: vertex.clone(),
        initial_face: face.clone(),
        vertex,
        face,
        transfers: Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutcomeReport {
    pub initial_total: Charge,
    pub final_total: Charge,
    /// Both totals are zero and replaying the log reproduces the ledger.
    pub conserved: bool,
    pub replay_matches: bool,
    pub negative: Vec<(Element, Charge)>,
}

pub fn verify_outcome(ledger: &ChargeLedger) -> OutcomeReport {
    let initial_total = ledger.initial_total();
    let final_total = ledger.total();
    let (vertex, face) = ledger.replay();
    let replay_matches = vertex == ledger.vertex && face == ledger.face;
    let negative = (0..ledger.vertex.len())
        .map(Element::Vertex)
        .chain((0..ledger.face.len()).map(Element::Face))
        .filter_map(|e| {
            let c = ledger.get(e);
            c.is_negative().then_some((e, c))
        })
        .collect();
    OutcomeReport {
        initial_total,
        final_total,
        conserved: initial_total == Charge::ZERO && final_total == Charge::ZERO && replay_matches,
        replay_matches,
        negative,
    }
}

/// Everything a single discharging run produces.
#[derive(Debug, Clone, Serialize)]
pub struct DischargeReport {
    pub outer_face: usize,
    pub y: Vec<usize>,
    pub two_connected: bool,
    pub ledger: ChargeLedger,
    pub outcome: OutcomeReport,
    pub hypotheses: HypothesisReport,
    pub configuration: Option<ReducibleConfiguration>,
}

pub fn discharge(ctx: &DischargingContext) -> DischargeReport {
    let ledger = apply_rules(ctx, &initial_charges(ctx));
    let outcome = verify_outcome(&ledger);
    DischargeReport {
        outer_face: ctx.embedding().outer_face(),
        y: ctx.y().to_vec(),
        two_connected: ctx.is_two_connected(),
        outcome,
        hypotheses: check_context_hypotheses(ctx),
        configuration: find_configuration_in(ctx.embedding().graph(), ctx.y()),
        ledger,
    }
}
