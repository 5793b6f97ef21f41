use std::time::{Duration, Instant};

use serde::Serialize;

use super::{vizing_color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Limits for the exact search; both must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolveBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl SolveBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Result<Self> {
        if node_limit == 0 || time_limit.is_zero() {
            return Err(Error::Precondition("solve budget must be positive".into()));
        }
        Ok(SolveBudget {
            node_limit,
            time_limit,
        })
    }

    pub fn from_millis(ms: u64) -> Result<Self> {
        Self::new(u64::MAX, Duration::from_millis(ms))
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget {
            node_limit: u64::MAX,
            time_limit: Duration::from_secs(60),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum ExactResult {
    Solved {
        k: usize,
        coloring: EdgeColoring,
        nodes: u64,
    },
    /// The budget ran out before Δ-colorability was decided.
    Exhausted {
        lower: usize,
        upper: usize,
        nodes: u64,
    },
}

impl ExactResult {
    pub fn k(&self) -> Option<usize> {
        match self {
            ExactResult::Solved { k, .. } => Some(*k),
            ExactResult::Exhausted { .. } => None,
        }
    }
}

/// Exact chromatic index: Δ when a Δ-coloring exists, otherwise Δ+1 (the
/// Vizing coloring is the witness).
pub fn chromatic_index_exact(g: &Graph, budget: SolveBudget) -> Result<ExactResult> {
    let delta = g.max_degree();
    if g.m() == 0 {
        return Ok(ExactResult::Solved {
            k: 0,
            coloring: EdgeColoring::from_colors(Vec::new()),
            nodes: 0,
        });
    }
    if delta >= 64 {
        return Err(Error::Precondition(format!(
            "exact solver supports Δ ≤ 63, got {}",
            delta
        )));
    }
    let upper = vizing_color(g);
    if upper.k() == delta {
        return Ok(ExactResult::Solved {
            k: delta,
            coloring: upper,
            nodes: 0,
        });
    }
    // a color class is a matching, so more than Δ·⌊n/2⌋ edges cannot fit
    if g.m() > delta * (g.n() / 2) {
        return Ok(ExactResult::Solved {
            k: delta + 1,
            coloring: upper,
            nodes: 0,
        });
    }
    let mut search = Search::new(g, delta, budget);
    match search.run() {
        Outcome::Found => {
            let colors = search.color.iter().map(|&c| c as usize + 1).collect();
            Ok(ExactResult::Solved {
                k: delta,
                coloring: EdgeColoring::from_colors(colors),
                nodes: search.nodes,
            })
        }
        Outcome::Impossible => Ok(ExactResult::Solved {
            k: delta + 1,
            coloring: upper,
            nodes: search.nodes,
        }),
        Outcome::OutOfBudget => Ok(ExactResult::Exhausted {
            lower: delta,
            upper: delta + 1,
            nodes: search.nodes,
        }),
    }
}

enum Outcome {
    Found,
    Impossible,
    OutOfBudget,
}

const UNSET: u8 = u8::MAX;

struct Search<'a> {
    g: &'a Graph,
    full: u64,
    /// Colors already used at each vertex.
    used: Vec<u64>,
    color: Vec<u8>,
    /// Edges in search order.
    order: Vec<usize>,
    /// Edge indices incident to each vertex.
    incident: Vec<Vec<usize>>,
    nodes: u64,
    budget: SolveBudget,
    started: Instant,
    out_of_budget: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: usize, budget: SolveBudget) -> Self {
        let m = g.m();
        let mut incident = vec![Vec::new(); g.n()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut s = Search {
            g,
            full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
            used: vec![0; g.n()],
            color: vec![UNSET; m],
            order: Vec::new(),
            incident,
            nodes: 0,
            budget,
            started: Instant::now(),
            out_of_budget: false,
        };
        // every color appears at a Δ-vertex, so its edges can be fixed
        let hub = (0..g.n())
            .find(|&v| g.degree(v) == k)
            .expect("Δ-vertex exists");
        for (c, &e) in s.incident[hub].clone().iter().enumerate() {
            s.assign(e, c as u8);
        }
        let mut rest: Vec<usize> = (0..m).filter(|&e| s.color[e] == UNSET).collect();
        rest.sort_by_key(|&e| {
            let (u, v) = g.edges()[e];
            (std::cmp::Reverse(g.degree(u) + g.degree(v)), e)
        });
        s.order = rest;
        s
    }

    fn assign(&mut self, e: usize, c: u8) {
        let (u, v) = self.g.edges()[e];
        self.color[e] = c;
        self.used[u] |= 1 << c;
        self.used[v] |= 1 << c;
    }

    fn clear(&mut self, e: usize) {
        let (u, v) = self.g.edges()[e];
        let c = self.color[e];
        self.color[e] = UNSET;
        self.used[u] &= !(1 << c);
        self.used[v] &= !(1 << c);
    }

    fn available(&self, e: usize) -> u64 {
        let (u, v) = self.g.edges()[e];
        self.full & !(self.used[u] | self.used[v])
    }

    /// Every uncolored edge next to `e` still has some color left.
    fn forward_ok(&self, e: usize) -> bool {
        let (u, v) = self.g.edges()[e];
        [u, v]
            .iter()
            .flat_map(|&x| self.incident[x].iter())
            .all(|&f| self.color[f] != UNSET || self.available(f) != 0)
    }

    fn run(&mut self) -> Outcome {
        if self.order.iter().any(|&e| self.available(e) == 0) {
            return Outcome::Impossible;
        }
        if self.descend(0) {
            Outcome::Found
        } else if self.out_of_budget {
            Outcome::OutOfBudget
        } else {
            Outcome::Impossible
        }
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        self.nodes += 1;
        if self.nodes >= self.budget.node_limit
            || (self.nodes % 1024 == 0 && self.started.elapsed() >= self.budget.time_limit)
        {
            self.out_of_budget = true;
        }
        if self.out_of_budget {
            return false;
        }
        let e = self.order[depth];
        let mut avail = self.available(e);
        while avail != 0 {
            let c = avail.trailing_zeros() as u8;
            avail &= avail - 1;
            self.assign(e, c);
            if self.forward_ok(e) && self.descend(depth + 1) {
                return true;
            }
            self.clear(e);
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}
