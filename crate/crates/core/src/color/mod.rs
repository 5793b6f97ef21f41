//! Edge colorings: Vizing's Δ+1 construction, validation and the exact
//! chromatic index.

mod exact;
mod vizing;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use exact::{chromatic_index_exact, ExactResult, SolveBudget};
pub use vizing::vizing_color;

/// Colors `1..=k`, aligned with `Graph::edges()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    /// Palette size is the largest color present.
    pub fn from_colors(colors: Vec<usize>) -> Self {
        EdgeColoring {
            k: colors.iter().copied().max().unwrap_or(0),
            colors,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, edge_index: usize) -> Option<usize> {
        self.colors.get(edge_index).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub proper: bool,
    /// Lexicographically first pair of adjacent edges sharing a color.
    pub conflict: Option<((usize, usize), (usize, usize))>,
}

/// Check properness. Every edge must carry a color in `1..`.
pub fn validate_coloring(g: &Graph, c: &EdgeColoring) -> Result<Validation> {
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if c.color(i).map_or(true, |col| col == 0) {
            return Err(Error::Uncolored(u, v));
        }
    }
    let edges = g.edges();
    for (i, &(u, v)) in edges.iter().enumerate() {
        let ci = c.colors[i];
        let clash = [u, v]
            .iter()
            .flat_map(|&x| {
                g.neighbors(x)
                    .iter()
                    .map(move |&w| g.edge_index(x, w).expect("edge"))
            })
            .filter(|&j| j > i && c.colors[j] == ci)
            .min();
        if let Some(j) = clash {
            return Ok(Validation {
                proper: false,
                conflict: Some(((u, v), edges[j])),
            });
        }
    }
    Ok(Validation {
        proper: true,
        conflict: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeClass {
    Class1,
    Class2,
    Unknown,
}

pub fn classify(g: &Graph, budget: SolveBudget) -> Result<EdgeClass> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(match chromatic_index_exact(g, budget)? {
        ExactResult::Solved { k, .. } if k == g.max_degree() => EdgeClass::Class1,
        ExactResult::Solved { .. } => EdgeClass::Class2,
        ExactResult::Exhausted { .. } => EdgeClass::Unknown,
    })
}
