//! Batch runs: the Δ ≥ 7 class-1 suite and the single-graph pipeline.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::audit::{audit, AuditReport};
use crate::color::{chromatic_index_exact, vizing_color, EdgeClass, ExactResult, SolveBudget};
use crate::discharge::{discharge, DischargeReport, DischargingContext};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::{
    has_k5_minor, is_planar, maximalize_k5_free, sample_k5_free_min_delta, tree_decompose_3simple,
    DecompositionReport, MinorResult, SampleParams, TreeDecomposition,
};
use crate::par::{map_indexed, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Theorem1Params {
    pub count: usize,
    pub n_max: usize,
    pub seed: u64,
    pub min_delta: usize,
}

impl Default for Theorem1Params {
    fn default() -> Self {
        Theorem1Params {
            count: 100,
            n_max: 24,
            seed: 1,
            min_delta: 7,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Row {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub chromatic_index: Option<usize>,
    pub class: EdgeClass,
    pub k5_minor_free: bool,
    pub nodes: u64,
    /// Wall-clock time; left out of reports that must be reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<f64>,
    /// Edge list of any instance that is not class 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Report {
    pub params: Theorem1Params,
    pub rows: Vec<Theorem1Row>,
    pub all_class1: bool,
    pub class2: usize,
    pub unknown: usize,
}

impl Theorem1Report {
    pub fn median_millis(&self) -> Option<f64> {
        let mut t: Vec<f64> = self.rows.iter().filter_map(|r| r.millis).collect();
        if t.is_empty() {
            return None;
        }
        t.sort_by(|a, b| a.total_cmp(b));
        Some(t[t.len() / 2])
    }
}

/// Per-instance generator parameters and seed, drawn from the suite seed.
fn instance_params(params: &Theorem1Params) -> Vec<(SampleParams, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let lo = 12.min(params.n_max);
    (0..params.count)
        .map(|_| {
            let n = rng.gen_range(lo..=params.n_max);
            let parts = rng.gen_range(1..=4usize).min(n - 3);
            let p = SampleParams {
                n_target: n,
                parts,
                wagner_probability: 0.3,
                delete_fraction: 0.1,
                hub_bias: 0.0,
            };
            (p, rng.gen())
        })
        .collect()
}

/// The suite's graphs with their generator seeds, in row order.
pub fn theorem1_instances(params: &Theorem1Params) -> Result<Vec<(Graph, u64)>> {
    instances_with(params, Execution::default())
}

fn instances_with(params: &Theorem1Params, exec: Execution) -> Result<Vec<(Graph, u64)>> {
    if params.count > 0 && params.n_max < params.min_delta + 1 {
        return Err(Error::Unsatisfiable(format!(
            "n_max = {} cannot reach maximum degree {}",
            params.n_max, params.min_delta
        )));
    }
    let drawn = instance_params(params);
    map_indexed(exec, drawn.len(), |i| {
        let (p, s) = drawn[i];
        Ok((sample_k5_free_min_delta(&p, s, params.min_delta)?, s))
    })
    .into_iter()
    .collect()
}

/// Generate K5-minor-free graphs with `Δ ≥ min_delta` and compute each
/// chromatic index exactly.
pub fn run_theorem1_suite(
    params: &Theorem1Params,
    budget: SolveBudget,
    exec: Execution,
    record_time: bool,
) -> Result<Theorem1Report> {
    let graphs = instances_with(params, exec)?;
    let rows: Vec<Theorem1Row> = map_indexed(exec, graphs.len(), |i| {
        let (g, seed) = &graphs[i];
        let started = Instant::now();
        let result = chromatic_index_exact(g, budget).expect("Δ is small");
        let elapsed = started.elapsed().as_secs_f64() * 1000.0;
        let (chi, nodes) = match &result {
            ExactResult::Solved { k, nodes, .. } => (Some(*k), *nodes),
            ExactResult::Exhausted { nodes, .. } => (None, *nodes),
        };
        let class = match chi {
            Some(k) if k == g.max_degree() => EdgeClass::Class1,
            Some(_) => EdgeClass::Class2,
            None => EdgeClass::Unknown,
        };
        Theorem1Row {
            index: i,
            seed: *seed,
            n: g.n(),
            m: g.m(),
            delta: g.max_degree(),
            chromatic_index: chi,
            class,
            k5_minor_free: !has_k5_minor(g).has_minor,
            nodes,
            millis: record_time.then_some(elapsed),
            instance: (class != EdgeClass::Class1).then(|| g.to_edge_list()),
        }
    });
    let class2 = rows
        .iter()
        .filter(|r| r.class == EdgeClass::Class2 || !r.k5_minor_free)
        .count();
    let unknown = rows
        .iter()
        .filter(|r| r.class == EdgeClass::Unknown)
        .count();
    Ok(Theorem1Report {
        params: *params,
        all_class1: class2 == 0 && unknown == 0,
        class2,
        unknown,
        rows,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionSection {
    pub added_edges: Vec<(usize, usize)>,
    pub decomposition: TreeDecomposition,
    pub validation: DecompositionReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringSection {
    pub vizing_colors: usize,
    pub chromatic_index: Option<usize>,
    pub class: Option<EdgeClass>,
    pub nodes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub minor: MinorResult,
    pub decomposition: Option<DecompositionSection>,
    pub coloring: ColoringSection,
    pub audit: AuditReport,
    pub planar: bool,
    pub discharge: Option<DischargeReport>,
    pub notes: Vec<String>,
    pub budget_exhausted: bool,
}

/// Minor test, then (if K5-minor-free) maximalize and decompose, color,
/// audit, and (if planar) discharge with `Y` the smallest vertex of the
/// outer face.
pub fn run_pipeline(g: &Graph, budget: SolveBudget) -> Result<PipelineReport> {
    let mut notes = Vec::new();
    let minor = has_k5_minor(g);
    let decomposition = if minor.has_minor {
        notes.push("K5 minor found; decomposition skipped".into());
        None
    } else if g.n() < 4 {
        notes.push("fewer than 4 vertices; decomposition skipped".into());
        None
    } else {
        let maximal = maximalize_k5_free(g)?;
        let added_edges: Vec<(usize, usize)> = maximal
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        let decomposition = tree_decompose_3simple(&maximal)?;
        let validation = decomposition.validate(&maximal);
        Some(DecompositionSection {
            added_edges,
            decomposition,
            validation,
        })
    };

    let vizing_colors = vizing_color(g).k();
    let (coloring, exhausted) = if g.m() == 0 {
        (
            ColoringSection {
                vizing_colors,
                chromatic_index: Some(0),
                class: None,
                nodes: 0,
            },
            false,
        )
    } else {
        match chromatic_index_exact(g, budget)? {
            ExactResult::Solved { k, nodes, .. } => {
                let class = if k == g.max_degree() {
                    EdgeClass::Class1
                } else {
                    EdgeClass::Class2
                };
                (
                    ColoringSection {
                        vizing_colors,
                        chromatic_index: Some(k),
                        class: Some(class),
                        nodes,
                    },
                    false,
                )
            }
            ExactResult::Exhausted { nodes, .. } => (
                ColoringSection {
                    vizing_colors,
                    chromatic_index: None,
                    class: Some(EdgeClass::Unknown),
                    nodes,
                },
                true,
            ),
        }
    };
    let audit = audit(g, None)?;

    let planarity = is_planar(g);
    let discharge = match planarity.embedding {
        Some(emb) => {
            let y = emb.face_vertices(emb.outer_face())[0];
            match DischargingContext::new(emb, &[y]) {
                Ok(ctx) => Some(discharge(&ctx)),
                Err(e) => {
                    notes.push(format!("discharging skipped: {}", e));
                    None
                }
            }
        }
        None if planarity.planar => {
            notes.push("discharging skipped: graph is disconnected or edgeless".into());
            None
        }
        None => None,
    };

    Ok(PipelineReport {
        n: g.n(),
        m: g.m(),
        delta: g.max_degree(),
        minor,
        decomposition,
        coloring,
        audit,
        planar: planarity.planar,
        discharge,
        notes,
        budget_exhausted: exhausted,
    })
}
