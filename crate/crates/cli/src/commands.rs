use std::path::{Path, PathBuf};

use k5edge::audit::{audit, Verdict};
use k5edge::color::{
    chromatic_index_exact, validate_coloring, vizing_color, EdgeClass, ExactResult, SolveBudget,
};
use k5edge::discharge::{
    check_hypotheses, discharge, find_configuration, verify_configuration, DischargingContext, Mode,
};
use k5edge::minor::{
    has_k5_minor, is_planar, maximalize_k5_free, sample_k5_free, sample_k5_free_min_delta,
    tree_decompose_3simple, SampleParams,
};
use k5edge::par::Execution;
use k5edge::plane::parse_rotation;
use k5edge::suite::{run_pipeline, run_theorem1_suite, Theorem1Params};
use k5edge::{Graph, PlaneEmbedding};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{
    render, Cli, Command, DischargeArgs, Format, GenArgs, ModeArg, Outcome, Status, Theorem1Args,
};

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    Graph::parse_edge_list(&read(path)?).map_err(|e| CliError::file(path, e))
}

fn render(format: Format, v: &Value) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("report serializes") + "\n",
        Format::Text => render::to_text(v),
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = SolveBudget::from_millis(cli.budget_ms)?;
    let (value, status, inputs): (Value, Status, Vec<PathBuf>) = match &cli.command {
        Command::Gen(a) => return gen(cli, a),
        Command::Color { graph, exact } => {
            let (v, s) = color(&load_graph(graph)?, *exact, budget)?;
            (v, s, vec![graph.clone()])
        }
        Command::Minor { graph } => {
            let (v, s) = minor(&load_graph(graph)?);
            (v, s, vec![graph.clone()])
        }
        Command::Decompose { graph, maximalize } => {
            let (v, s) = decompose(&load_graph(graph)?, *maximalize)?;
            (v, s, vec![graph.clone()])
        }
        Command::Discharge(a) => discharge_cmd(a)?,
        Command::Audit { graph, oracle } => {
            let g = load_graph(graph)?;
            let r = audit(&g, oracle.then_some(budget))?;
            let exhausted = r
                .oracle
                .as_ref()
                .is_some_and(|c| c.chromatic_index.is_none())
                || r.oracle
                    .as_ref()
                    .is_some_and(|c| c.per_edge.iter().any(|(_, k)| k.is_none()));
            let s = if exhausted && r.verdict == Verdict::Inconclusive {
                Status::BudgetExhausted
            } else {
                Status::Success
            };
            (to_value(&r), s, vec![graph.clone()])
        }
        Command::Theorem1(a) => {
            let (v, s) = theorem1(cli, a, budget)?;
            (v, s, Vec::new())
        }
        Command::Pipeline { graph } => {
            let g = load_graph(graph)?;
            let r = run_pipeline(&g, budget)?;
            let mut s = Status::Success;
            let decomposition_ok = r.decomposition.as_ref().map_or(true, |d| d.validation.ok());
            let witness_ok = r.minor.witness.as_ref().map_or(true, |w| w.verify(&g));
            let discharge_ok = r.discharge.as_ref().map_or(true, |d| d.outcome.conserved);
            if !(decomposition_ok && witness_ok && discharge_ok) {
                s = Status::AssertionFailed;
            } else if r.budget_exhausted {
                s = Status::BudgetExhausted;
            }
            (to_value(&r), s, vec![graph.clone()])
        }
        Command::Replay { .. } => unreachable!("handled by the caller"),
    };
    Ok(Outcome {
        report: render(cli.format, &value),
        status,
        inputs,
    })
}

fn gen(cli: &Cli, a: &GenArgs) -> Result<Outcome, CliError> {
    let p = SampleParams {
        n_target: a.n,
        parts: a.parts,
        wagner_probability: a.wagner_prob,
        delete_fraction: a.delete,
        hub_bias: a.hub_bias,
    };
    let g = match a.min_delta {
        Some(d) => sample_k5_free_min_delta(&p, cli.seed, d)?,
        None => sample_k5_free(&p, cli.seed)?,
    };
    let report = match cli.format {
        Format::Text => g.to_edge_list(),
        Format::Json => render(
            Format::Json,
            &json!({ "n": g.n(), "m": g.m(), "edges": g.edges() }),
        ),
    };
    Ok(Outcome {
        report,
        status: Status::Success,
        inputs: Vec::new(),
    })
}

fn color(g: &Graph, exact: bool, budget: SolveBudget) -> Result<(Value, Status), CliError> {
    let delta = g.max_degree();
    let (method, coloring, class, nodes, status) = if exact {
        match chromatic_index_exact(g, budget)? {
            ExactResult::Solved { k, coloring, nodes } => {
                let class = if g.m() == 0 {
                    None
                } else if k == delta {
                    Some(EdgeClass::Class1)
                } else {
                    Some(EdgeClass::Class2)
                };
                ("exact", coloring, class, Some(nodes), Status::Success)
            }
            ExactResult::Exhausted { nodes, .. } => (
                "vizing",
                vizing_color(g),
                Some(EdgeClass::Unknown),
                Some(nodes),
                Status::BudgetExhausted,
            ),
        }
    } else {
        let c = vizing_color(g);
        let class = if g.m() == 0 {
            None
        } else if c.k() == delta {
            Some(EdgeClass::Class1)
        } else {
            Some(EdgeClass::Unknown)
        };
        ("vizing", c, class, None, Status::Success)
    };
    let validation = validate_coloring(g, &coloring)?;
    let status = if !validation.proper || coloring.k() > delta + 1 {
        Status::AssertionFailed
    } else {
        status
    };
    let edges: Vec<Value> = g
        .edges()
        .iter()
        .zip(coloring.colors())
        .map(|(&(u, v), &c)| json!({ "u": u, "v": v, "color": c }))
        .collect();
    let v = json!({
        "n": g.n(),
        "m": g.m(),
        "delta": delta,
        "method": method,
        "k": coloring.k(),
        "class": class,
        "nodes": nodes,
        "validation": validation,
        "edges": edges,
    });
    Ok((v, status))
}

fn minor(g: &Graph) -> (Value, Status) {
    let r = has_k5_minor(g);
    let witness_valid = r.witness.as_ref().map(|w| w.verify(g));
    let status = if witness_valid == Some(false) {
        Status::AssertionFailed
    } else {
        Status::Success
    };
    let v = json!({
        "n": g.n(),
        "m": g.m(),
        "planar": is_planar(g).planar,
        "has_minor": r.has_minor,
        "witness_valid": witness_valid,
        "witness": r.witness,
    });
    (v, status)
}

fn decompose(g: &Graph, maximalize: bool) -> Result<(Value, Status), CliError> {
    let target = if maximalize {
        maximalize_k5_free(g)?
    } else {
        g.clone()
    };
    let added: Vec<(usize, usize)> = target
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let td = tree_decompose_3simple(&target)?;
    let validation = td.validate(&target);
    let status = if validation.ok() {
        Status::Success
    } else {
        Status::AssertionFailed
    };
    let v = json!({
        "n": target.n(),
        "m": target.m(),
        "added_edges": added,
        "mader_bound_holds": target.n() < 3 || target.m() + 6 <= 3 * target.n(),
        "decomposition": td,
        "validation": validation,
    });
    Ok((v, status))
}

fn discharge_cmd(a: &DischargeArgs) -> Result<(Value, Status, Vec<PathBuf>), CliError> {
    let g = load_graph(&a.graph)?;
    let mut inputs = vec![a.graph.clone()];
    if a.mode == ModeArg::K5Lemma3 {
        if !a.y.is_empty() {
            return Err(CliError::Input(
                "--Y must be empty in k5-lemma3 mode".into(),
            ));
        }
        let hypotheses = check_hypotheses(&g, &[], Mode::K5Lemma3)?;
        let configuration = find_configuration(&g);
        let status = if hypotheses.passed() && configuration.is_none() {
            Status::AssertionFailed
        } else {
            Status::Success
        };
        let v = json!({ "mode": Mode::K5Lemma3, "hypotheses": hypotheses, "configuration": configuration });
        return Ok((v, status, inputs));
    }
    let rot_path = a
        .rotation
        .as_ref()
        .ok_or_else(|| CliError::Input("--rotation is required in planar-lemma1 mode".into()))?;
    inputs.push(rot_path.clone());
    let rotation =
        parse_rotation(&read(rot_path)?, g.n()).map_err(|e| CliError::file(rot_path, e))?;
    let emb = PlaneEmbedding::new(g, rotation).map_err(|e| CliError::file(rot_path, e))?;
    let face = match (&a.outer_face, &a.outer_vertices) {
        (Some(f), _) => *f,
        (None, Some(vs)) => emb
            .face_containing(vs)
            .ok_or_else(|| CliError::Input(format!("no face contains all of {:?}", vs)))?,
        (None, None) => 0,
    };
    let emb = emb.designate_outer(face)?;
    let ctx = DischargingContext::new(emb, &a.y)?;
    let report = discharge(&ctx);
    let witness_ok = report.configuration.as_ref().map_or(true, |c| {
        verify_configuration(ctx.embedding().graph(), ctx.y(), c)
    });
    let lemma_ok = !report.hypotheses.passed() || report.configuration.is_some();
    let status = if report.outcome.conserved && witness_ok && lemma_ok {
        Status::Success
    } else {
        Status::AssertionFailed
    };
    Ok((to_value(&report), status, inputs))
}

fn theorem1(cli: &Cli, a: &Theorem1Args, budget: SolveBudget) -> Result<(Value, Status), CliError> {
    let params = Theorem1Params {
        count: a.count,
        n_max: a.n_max,
        seed: cli.seed,
        min_delta: a.min_delta,
    };
    let exec = if a.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let r = run_theorem1_suite(&params, budget, exec, a.timing)?;
    for row in r.rows.iter().filter(|r| r.instance.is_some()) {
        eprintln!(
            "instance {} (seed {}) is {:?}; edge list follows\n{}",
            row.index,
            row.seed,
            row.class,
            row.instance.as_deref().unwrap_or_default()
        );
    }
    let status = if r.class2 > 0 {
        Status::AssertionFailed
    } else if r.unknown > 0 {
        Status::BudgetExhausted
    } else {
        Status::Success
    };
    let mut v = to_value(&r);
    if let Some(t) = r.median_millis() {
        v["median_millis"] = json!(t);
    }
    Ok((v, status))
}
