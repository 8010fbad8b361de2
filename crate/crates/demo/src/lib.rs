//! Browser demo bindings: generate an instance, color it, and cross-check
//! small instances with the exhaustive oracle. Everything crosses the wasm
//! boundary as JSON strings; the page in `www/` renders the result on a
//! canvas. The functions are plain `&str -> String`, so the same code runs
//! natively in tests.

use choosable::checking::{solve_exact, verify_coloring, ExactResult};
use choosable::chooser::{list_color, TraceCounters};
use choosable::coloring::{Color, ListAssignment, Outcome};
use choosable::graph::Graph;
use choosable::instances::{
    gen_lists, gen_named, gen_random_connected, gen_random_regular, NamedKind,
};
use serde::Deserialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

#[derive(Deserialize)]
struct GenerateParams {
    kind: String,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    d: Option<usize>,
    #[serde(default)]
    dmax: Option<usize>,
    #[serde(default)]
    seed: u64,
    lists: ListParams,
}

#[derive(Deserialize)]
struct ListParams {
    mode: String,
    /// Defaults to the graph's maximum degree (at least 2).
    #[serde(default)]
    size: Option<usize>,
    /// Defaults to twice the list size.
    #[serde(default)]
    palette: Option<usize>,
    #[serde(default)]
    seed: u64,
}

#[derive(Deserialize)]
struct Instance {
    n: usize,
    edges: Vec<(usize, usize)>,
    lists: Vec<Vec<Color>>,
}

fn err(message: impl std::fmt::Display) -> String {
    json!({ "ok": false, "error": message.to_string() }).to_string()
}

/// Builds a graph plus list assignment from the parameter JSON and returns
/// it with a deterministic layout.
#[wasm_bindgen]
pub fn generate(params_json: &str) -> String {
    let params: GenerateParams = match serde_json::from_str(params_json) {
        Ok(p) => p,
        Err(e) => return err(format_args!("bad parameters: {e}")),
    };
    let graph = match build_graph(&params) {
        Ok(g) => g,
        Err(msg) => return err(msg),
    };
    let size = params
        .lists
        .size
        .unwrap_or_else(|| graph.max_degree().max(2));
    let palette = params.lists.palette.unwrap_or(2 * size);
    let lists = match build_lists(&graph, &params.lists, size, palette) {
        Ok(l) => l,
        Err(msg) => return err(msg),
    };
    let layout = layout_for(&graph, &params.kind);
    let lists_out: Vec<&[Color]> = (0..graph.vertex_count()).map(|v| lists.list(v)).collect();
    json!({
        "ok": true,
        "n": graph.vertex_count(),
        "edges": graph.edges().collect::<Vec<_>>(),
        "lists": lists_out,
        "layout": layout,
        "maxDegree": graph.max_degree(),
    })
    .to_string()
}

fn build_graph(params: &GenerateParams) -> Result<Graph, String> {
    let need_n = || params.n.ok_or_else(|| format!("kind {} requires n", params.kind));
    match params.kind.as_str() {
        "cycle" => gen_named(NamedKind::Cycle(need_n()?)).map_err(|e| e.to_string()),
        "path" => gen_named(NamedKind::Path(need_n()?)).map_err(|e| e.to_string()),
        "complete" => gen_named(NamedKind::Complete(need_n()?)).map_err(|e| e.to_string()),
        "petersen" => gen_named(NamedKind::Petersen).map_err(|e| e.to_string()),
        "prism" => gen_named(NamedKind::Prism).map_err(|e| e.to_string()),
        "regular" => {
            let d = params.d.ok_or("kind regular requires d")?;
            gen_random_regular(need_n()?, d, params.seed).map_err(|e| e.to_string())
        }
        "connected" => {
            let dmax = params.dmax.ok_or("kind connected requires dmax")?;
            gen_random_connected(need_n()?, dmax, params.seed).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown kind `{other}`")),
    }
}

fn build_lists(
    graph: &Graph,
    params: &ListParams,
    size: usize,
    palette: usize,
) -> Result<ListAssignment, String> {
    let n = graph.vertex_count();
    match params.mode.as_str() {
        "uniform" => gen_lists(graph, size, palette, params.seed).map_err(|e| e.to_string()),
        "identical" => {
            let colors: Vec<Color> = (1..=size as Color).collect();
            Ok(ListAssignment::uniform(n, &colors))
        }
        "blocks" => {
            // two disjoint blocks of {1..2*size}; parity of a cheap seeded
            // hash picks the block per vertex
            let lists = (0..n)
                .map(|v| {
                    let pick = (params.seed ^ v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 63;
                    let base = if pick == 0 { 0 } else { size as Color };
                    (1..=size as Color).map(|c| base + c).collect()
                })
                .collect();
            ListAssignment::new(lists).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown list mode `{other}`")),
    }
}

/// Runs the chooser on an instance JSON (`{n, edges, lists}`); on success
/// the coloring comes back verifier-checked.
#[wasm_bindgen]
pub fn color_instance(instance_json: &str) -> String {
    let (graph, lists) = match parse_instance(instance_json) {
        Ok(pair) => pair,
        Err(msg) => return err(msg),
    };
    let (outcome, counters) = list_color(&graph, &lists);
    match outcome {
        Outcome::Success(f) => {
            let violations: Vec<String> = verify_coloring(&graph, &lists, &f)
                .iter()
                .map(|v| v.to_string())
                .collect();
            let coloring: Vec<Color> = (0..graph.vertex_count())
                .map(|v| f.get(v).expect("total"))
                .collect();
            json!({
                "ok": true,
                "outcome": "success",
                "coloring": coloring,
                "violations": violations,
                "counters": counters_json(&counters),
            })
            .to_string()
        }
        Outcome::Infeasible { witness } => json!({
            "ok": true,
            "outcome": "infeasible",
            "witness": witness.to_string(),
            "cycle": witness.cycle,
            "counters": counters_json(&counters),
        })
        .to_string(),
        Outcome::NotApplicable { reason, component } => json!({
            "ok": true,
            "outcome": "not-applicable",
            "reason": reason.to_string(),
            "component": component.ids(),
            "counters": counters_json(&counters),
        })
        .to_string(),
    }
}

/// Exhaustive check of an instance JSON within a node budget.
#[wasm_bindgen]
pub fn oracle_check(instance_json: &str, node_limit: u32) -> String {
    let (graph, lists) = match parse_instance(instance_json) {
        Ok(pair) => pair,
        Err(msg) => return err(msg),
    };
    match solve_exact(&graph, &lists, node_limit as u64) {
        ExactResult::Solved(f) => {
            let coloring: Vec<Color> = (0..graph.vertex_count())
                .map(|v| f.get(v).expect("total"))
                .collect();
            json!({ "ok": true, "result": "solved", "coloring": coloring }).to_string()
        }
        ExactResult::Unsatisfiable => {
            json!({ "ok": true, "result": "unsatisfiable" }).to_string()
        }
        ExactResult::LimitExceeded => {
            json!({ "ok": true, "result": "limit-exceeded" }).to_string()
        }
    }
}

fn parse_instance(text: &str) -> Result<(Graph, ListAssignment), String> {
    let inst: Instance = serde_json::from_str(text).map_err(|e| format!("bad instance: {e}"))?;
    let graph = Graph::build(inst.n, &inst.edges).map_err(|e| e.to_string())?;
    if inst.lists.len() != inst.n {
        return Err(format!(
            "expected {} lists, got {}",
            inst.n,
            inst.lists.len()
        ));
    }
    let lists = ListAssignment::new(inst.lists).map_err(|e| e.to_string())?;
    Ok((graph, lists))
}

fn counters_json(counters: &TraceCounters) -> Value {
    let mut map = serde_json::Map::new();
    for line in counters.lines() {
        let (name, value) = line.split_once('=').expect("name=value");
        map.insert(name.to_string(), json!(value.parse::<u64>().unwrap()));
    }
    Value::Object(map)
}

const TAU: f64 = std::f64::consts::TAU;

/// Unit-square positions: canonical shapes for the named kinds, a
/// deterministic force layout otherwise.
fn layout_for(g: &Graph, kind: &str) -> Vec<[f64; 2]> {
    let n = g.vertex_count();
    match kind {
        "petersen" => {
            let mut pos = vec![[0.5, 0.5]; 10];
            for i in 0..5 {
                let a = TAU * i as f64 / 5.0 - TAU / 4.0;
                pos[i] = [0.5 + 0.42 * a.cos(), 0.5 + 0.42 * a.sin()];
                pos[i + 5] = [0.5 + 0.2 * a.cos(), 0.5 + 0.2 * a.sin()];
            }
            pos
        }
        "prism" => {
            let mut pos = vec![[0.5, 0.5]; 6];
            for i in 0..3 {
                let a = TAU * i as f64 / 3.0 - TAU / 4.0;
                pos[i] = [0.5 + 0.42 * a.cos(), 0.5 + 0.42 * a.sin()];
                pos[i + 3] = [0.5 + 0.19 * a.cos(), 0.5 + 0.19 * a.sin()];
            }
            pos
        }
        "path" => (0..n)
            .map(|i| {
                let t = if n == 1 { 0.5 } else { i as f64 / (n - 1) as f64 };
                [0.06 + 0.88 * t, 0.5 + 0.18 * (TAU * t * 1.5).sin()]
            })
            .collect(),
        "cycle" | "complete" => circle_layout(n),
        _ => force_layout(g),
    }
}

fn circle_layout(n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let a = TAU * i as f64 / n.max(1) as f64 - TAU / 4.0;
            [0.5 + 0.42 * a.cos(), 0.5 + 0.42 * a.sin()]
        })
        .collect()
}

/// Fruchterman-Reingold with circle initialization and a fixed cooling
/// schedule; no randomness, so layouts are reproducible.
fn force_layout(g: &Graph) -> Vec<[f64; 2]> {
    let n = g.vertex_count();
    if n <= 2 {
        return circle_layout(n);
    }
    let mut pos = circle_layout(n);
    let k = 0.9 * (1.0 / n as f64).sqrt();
    let iterations = 250;
    for iter in 0..iterations {
        let temp = 0.12 * (1.0 - iter as f64 / iterations as f64) + 1e-3;
        let mut disp = vec![[0.0f64; 2]; n];
        for u in 0..n {
            for v in u + 1..n {
                let dx = pos[u][0] - pos[v][0];
                let dy = pos[u][1] - pos[v][1];
                let dist = (dx * dx + dy * dy).sqrt().max(1e-6);
                let repulse = k * k / dist;
                let (fx, fy) = (dx / dist * repulse, dy / dist * repulse);
                disp[u][0] += fx;
                disp[u][1] += fy;
                disp[v][0] -= fx;
                disp[v][1] -= fy;
            }
        }
        for (u, v) in g.edges() {
            let dx = pos[u][0] - pos[v][0];
            let dy = pos[u][1] - pos[v][1];
            let dist = (dx * dx + dy * dy).sqrt().max(1e-6);
            let attract = dist * dist / k;
            let (fx, fy) = (dx / dist * attract, dy / dist * attract);
            disp[u][0] -= fx;
            disp[u][1] -= fy;
            disp[v][0] += fx;
            disp[v][1] += fy;
        }
        for v in 0..n {
            let len = (disp[v][0] * disp[v][0] + disp[v][1] * disp[v][1])
                .sqrt()
                .max(1e-9);
            let step = len.min(temp);
            pos[v][0] = (pos[v][0] + disp[v][0] / len * step).clamp(0.04, 0.96);
            pos[v][1] = (pos[v][1] + disp[v][1] / len * step).clamp(0.04, 0.96);
        }
    }
    pos
}
