//! Necessary conditions for Δ-critical graphs, run as detectors.
//!
//! A finding that certifies non-criticality is a proof that the graph is not
//! Δ-critical; the absence of findings proves nothing.

mod detectors;
mod reduce;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::color::{chromatic_index_exact, ExactResult, SolveBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use detectors::{
    audit_adjacency, audit_neighborhood, detect_sz_configs, edge_bound_checks, EdgeBoundReport,
};
pub use reduce::{contract_2_vertices, contract_2_vertices_mapped, lemma3_reduction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LemmaId {
    #[serde(rename = "VAL-a")]
    ValA,
    #[serde(rename = "VAL-b")]
    ValB,
    #[serde(rename = "COR-a")]
    CorA,
    #[serde(rename = "COR-b")]
    CorB,
    #[serde(rename = "COR-c")]
    CorC,
    #[serde(rename = "COR-d")]
    CorD,
    #[serde(rename = "ZHANG-a")]
    ZhangA,
    #[serde(rename = "ZHANG-b")]
    ZhangB,
    #[serde(rename = "SZ-1")]
    Sz1,
    #[serde(rename = "SZ-2")]
    Sz2,
    #[serde(rename = "SZ-3")]
    Sz3,
    #[serde(rename = "EDGE-MADER")]
    EdgeMader,
    #[serde(rename = "EDGE-MIAO")]
    EdgeMiao,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct AuditFinding {
    pub lemma: LemmaId,
    pub vertices: Vec<usize>,
    pub detail: String,
    /// False only for findings that are informational.
    pub certifies_not_critical: bool,
}

impl AuditFinding {
    pub(crate) fn violation(lemma: LemmaId, vertices: Vec<usize>, detail: String) -> Self {
        AuditFinding {
            lemma,
            vertices,
            detail,
            certifies_not_critical: true,
        }
    }
}

/// `N(S)`: neighbours of the set minus the set itself.
pub(crate) fn set_neighborhood(g: &Graph, s: &BTreeSet<usize>) -> BTreeSet<usize> {
    s.iter()
        .flat_map(|&u| g.neighbors(u).iter().copied())
        .filter(|w| !s.contains(w))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criticality {
    Critical,
    NotCritical,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityCertificate {
    pub delta: usize,
    pub chromatic_index: Option<usize>,
    /// `None` when the budget ran out.
    pub is_class2: Option<bool>,
    /// `χ′(G − e)` for every edge, filled in only for class-2 graphs.
    pub per_edge: Vec<((usize, usize), Option<usize>)>,
    pub conclusion: Criticality,
}

/// Decide Δ-criticality exactly: class 2, and removing any edge lowers
/// the chromatic index.
pub fn is_delta_critical_oracle(g: &Graph, budget: SolveBudget) -> Result<CriticalityCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() < 2 {
        return Err(Error::Precondition(
            "criticality needs at least two edges".into(),
        ));
    }
    let delta = g.max_degree();
    let chi = chromatic_index_exact(g, budget)?.k();
    let mut cert = CriticalityCertificate {
        delta,
        chromatic_index: chi,
        is_class2: chi.map(|k| k > delta),
        per_edge: Vec::new(),
        conclusion: Criticality::Unknown,
    };
    match chi {
        None => return Ok(cert),
        Some(k) if k == delta => {
            cert.conclusion = Criticality::NotCritical;
            return Ok(cert);
        }
        Some(_) => {}
    }
    let mut all_drop = true;
    let mut unknown = false;
    for &(u, v) in g.edges() {
        let h = g.without_edge(u, v)?;
        let k = match chromatic_index_exact(&h, budget)? {
            ExactResult::Solved { k, .. } => Some(k),
            ExactResult::Exhausted { .. } => None,
        };
        match k {
            Some(k) if k > delta => all_drop = false,
            Some(_) => {}
            None => unknown = true,
        }
        cert.per_edge.push(((u, v), k));
    }
    cert.conclusion = if !all_drop {
        Criticality::NotCritical
    } else if unknown {
        Criticality::Unknown
    } else {
        Criticality::Critical
    };
    Ok(cert)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedNotCritical,
    Inconclusive,
    Critical,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub delta: usize,
    pub findings: Vec<AuditFinding>,
    pub edge_bounds: EdgeBoundReport,
    pub oracle: Option<CriticalityCertificate>,
    pub verdict: Verdict,
}

/// Run every detector, optionally followed by the exact oracle.
pub fn audit(g: &Graph, oracle: Option<SolveBudget>) -> Result<AuditReport> {
    let mut findings = audit_adjacency(g);
    findings.extend(audit_neighborhood(g));
    findings.extend(detect_sz_configs(g));
    let edge_bounds = edge_bound_checks(g);
    findings.extend(edge_bounds.findings.iter().cloned());
    let certified = findings.iter().any(|f| f.certifies_not_critical);
    let oracle = match oracle {
        Some(b) if g.is_connected() && g.m() >= 2 => Some(is_delta_critical_oracle(g, b)?),
        _ => None,
    };
    let verdict = match oracle.as_ref().map(|c| c.conclusion) {
        Some(Criticality::Critical) => Verdict::Critical,
        Some(Criticality::NotCritical) => Verdict::CertifiedNotCritical,
        _ if certified => Verdict::CertifiedNotCritical,
        _ => Verdict::Inconclusive,
    };
    Ok(AuditReport {
        delta: g.max_degree(),
        findings,
        edge_bounds,
        oracle,
        verdict,
    })
}
