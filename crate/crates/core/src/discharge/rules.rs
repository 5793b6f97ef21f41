use serde::Serialize;

use super::{Charge, ChargeLedger, DischargingContext, Element};
use crate::par::{map_indexed, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "R1.1")]
    R1_1,
    /// A 4⁺-face other than `f0` pays each incident vertex.
    #[serde(rename = "R1.2a")]
    R1_2Face,
    /// A hi-vertex pays a low `X`-neighbour across an edge of a 4⁺-face.
    #[serde(rename = "R1.2b")]
    R1_2Hi,
    #[serde(rename = "R2.1")]
    R2_1,
    #[serde(rename = "R2.2")]
    R2_2,
    #[serde(rename = "R2.3")]
    R2_3,
    #[serde(rename = "R2.4")]
    R2_4,
    #[serde(rename = "R2.5")]
    R2_5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Transfer {
    pub rule: Rule,
    pub source: Element,
    pub sink: Element,
    /// Face whose boundary edge triggered an `R1.2b` transfer.
    pub via: Option<usize>,
    pub amount: Charge,
}

fn frac(p: i64, q: i64) -> Charge {
    Charge::ratio(p, q).expect("denominator divides 60")
}

pub fn apply_rules(ctx: &DischargingContext, ledger: &ChargeLedger) -> ChargeLedger {
    apply_rules_with(Execution::default(), ctx, ledger)
}

/// Apply every rule once and return the ledger with the transfers added.
/// The log is sorted by (rule, source, sink, face), whatever the execution
/// mode.
pub fn apply_rules_with(
    exec: Execution,
    ctx: &DischargingContext,
    ledger: &ChargeLedger,
) -> ChargeLedger {
    let emb = ctx.embedding();
    let g = emb.graph();
    let by_face = map_indexed(exec, emb.face_count(), |f| face_transfers(ctx, f));
    let by_vertex = map_indexed(exec, g.n(), |x| vertex_transfers(ctx, x));
    let mut transfers: Vec<Transfer> = by_face.into_iter().chain(by_vertex).flatten().collect();
    transfers.sort();
    let mut out = ledger.clone();
    for t in &transfers {
        match t.source {
            Element::Vertex(v) => out.vertex[v] -= t.amount,
            Element::Face(f) => out.face[f] -= t.amount,
        }
        match t.sink {
            Element::Vertex(v) => out.vertex[v] += t.amount,
            Element::Face(f) => out.face[f] += t.amount,
        }
    }
    out.transfers.extend(transfers);
    out.transfers.sort();
    out
}

/// R1.1 and R1.2 for one face.
fn face_transfers(ctx: &DischargingContext, f: usize) -> Vec<Transfer> {
    let emb = ctx.embedding();
    let g = emb.graph();
    let mut out = Vec::new();
    let send = |out: &mut Vec<Transfer>, rule, source, sink, via, amount| {
        out.push(Transfer {
            rule,
            source,
            sink,
            via,
            amount,
        });
    };
    if f == emb.outer_face() {
        for x in emb.face_vertices(f) {
            let amount = if ctx.in_y(x) {
                Charge::integer(6)
            } else {
                // Z: neighbours of x on f0; only those outside Y count
                let z = g
                    .neighbors(x)
                    .iter()
                    .filter(|&&u| emb.is_incident(u, f) && ctx.in_x(u))
                    .count();
                match z {
                    1 => Charge::integer(1),
                    2 => Charge::integer(2),
                    _ => continue,
                }
            };
            send(
                &mut out,
                Rule::R1_1,
                Element::Face(f),
                Element::Vertex(x),
                None,
                amount,
            );
        }
        return out;
    }
    if emb.face_degree(f) < 4 {
        return out;
    }
    for x in emb.face_vertices(f) {
        send(
            &mut out,
            Rule::R1_2Face,
            Element::Face(f),
            Element::Vertex(x),
            None,
            frac(1, 2),
        );
    }
    // each boundary edge once, even when the walk traverses it twice
    let walk = emb.face_walk(f);
    let mut edges: Vec<(usize, usize)> = (0..walk.len())
        .map(|i| crate::graph::edge_key(walk[i], walk[(i + 1) % walk.len()]))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    for (a, b) in edges {
        for (hi, u) in [(a, b), (b, a)] {
            if ctx.is_hi(hi) && ctx.in_x(u) && g.degree(u) <= 6 {
                send(
                    &mut out,
                    Rule::R1_2Hi,
                    Element::Vertex(hi),
                    Element::Vertex(u),
                    Some(f),
                    frac(1, 4),
                );
            }
        }
    }
    out
}

/// R2.1 to R2.5 for the receiving vertex `x`.
fn vertex_transfers(ctx: &DischargingContext, x: usize) -> Vec<Transfer> {
    let emb = ctx.embedding();
    let g = emb.graph();
    let mut out = Vec::new();
    if ctx.in_y(x) {
        return out;
    }
    let mut send = |rule, y: usize, amount| {
        out.push(Transfer {
            rule,
            source: Element::Vertex(y),
            sink: Element::Vertex(x),
            via: None,
            amount,
        });
    };
    for y in ctx.neighbors_y(x) {
        send(Rule::R2_1, y, Charge::integer(1));
    }
    let d = |v: usize| g.degree(v);
    let nx: Vec<usize> = ctx.neighbors_x(x).collect();
    let two_triangles = |y: usize| -> Option<(usize, usize)> {
        let (f1, f2) = emb.faces_of_edge(x, y).expect("adjacent");
        (f1 != f2 && emb.face_degree(f1) == 3 && emb.face_degree(f2) == 3).then_some((f1, f2))
    };
    match d(x) {
        3 => {
            for &y in &nx {
                match d(y) {
                    6 => send(Rule::R2_2, y, Charge::integer(1)),
                    7 if two_triangles(y).is_some() => send(Rule::R2_2, y, Charge::integer(1)),
                    7 => send(Rule::R2_2, y, frac(1, 2)),
                    _ => {}
                }
            }
        }
        4 => {
            if nx.iter().any(|&z| d(z) == 5) {
                for &y in nx.iter().filter(|&&y| d(y) == 7) {
                    send(Rule::R2_3, y, frac(2, 3));
                }
            } else {
                for &y in &nx {
                    match d(y) {
                        6 => send(Rule::R2_3, y, frac(2, 5)),
                        7 if two_triangles(y).is_some() => send(Rule::R2_3, y, frac(3, 5)),
                        7 => send(Rule::R2_3, y, frac(1, 5)),
                        _ => {}
                    }
                }
            }
        }
        5 => {
            if nx.iter().any(|&z| d(z) == 4) {
                for &y in nx.iter().filter(|&&y| d(y) == 7) {
                    send(Rule::R2_4, y, frac(1, 3));
                }
            } else {
                for &y in nx.iter().filter(|&&y| d(y) >= 6) {
                    if let Some((f1, f2)) = two_triangles(y) {
                        let hits = [f1, f2]
                            .iter()
                            .filter(|&&f| emb.is_face_of_type(f, [5, 5, 7]))
                            .count();
                        send(
                            Rule::R2_4,
                            y,
                            if hits == 1 { frac(2, 5) } else { frac(1, 5) },
                        );
                    }
                }
            }
        }
        6 => {
            // with several 3-neighbours the smallest id is used
            if let Some(&z) = nx.iter().find(|&&z| d(z) == 3) {
                for &y in nx.iter().filter(|&&y| d(y) == 7 && !g.has_edge(y, z)) {
                    send(Rule::R2_5, y, frac(1, 3));
                }
            } else {
                for &y in nx.iter().filter(|&&y| d(y) == 7) {
                    if let Some((f1, f2)) = two_triangles(y) {
                        let both = emb.is_face_of_type(f1, [6, 7, 7])
                            && emb.is_face_of_type(f2, [6, 7, 7]);
                        if !both {
                            send(Rule::R2_5, y, frac(1, 5));
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}
