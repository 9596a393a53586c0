//! Browser bindings. Every export takes plain text or numbers and returns a
//! JSON document; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use domhg::completion::{minimal_completions, CompletionReport};
use domhg::format::parse_graph;
use domhg::recognition::realization_expansion;
use domhg::{GroundSet, SearchConfig};

/// Largest ground set the page offers; the sweep is exhaustive.
pub const MAX_DEMO_N: usize = 5;

fn render(result: Result<Value, domhg::Error>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": format!("{}: {e}", e.name()) }).to_string(),
    }
}

// Single-threaded: the browser build has no thread support.
fn config() -> SearchConfig {
    SearchConfig::default().with_workers(1)
}

pub fn dominating_sets_json(graph_text: &str) -> String {
    render(parse_graph(graph_text).map(|g| {
        json!({
            "graph": g,
            "dominating_sets": g.minimal_dominating_sets(),
            "neighborhoods": g.minimal_closed_neighborhoods(),
        })
    }))
}

pub fn minimal_completions_json(r: usize, n: usize) -> String {
    render((|| {
        if n > MAX_DEMO_N {
            return Err(domhg::Error::GroundTooLarge { n, cap: MAX_DEMO_N });
        }
        let ground = GroundSet::range(n)?;
        let report = CompletionReport::compute(r, &ground, &config())?;
        let row = report.table_row();
        let items: Vec<Value> = minimal_completions(r, &ground, &config())?
            .into_iter()
            .map(|(h, gs)| json!({ "hypergraph": h.to_string(), "witnesses": gs }))
            .collect();
        Ok(json!({
            "summary": row.to_string(),
            "decomposition_parameter": report.decomposition_parameter,
            "decomposition_witness": report
                .decomposition_witness
                .iter()
                .map(|h| h.to_string())
                .collect::<Vec<_>>(),
            "minimal_completions": items,
        }))
    })())
}

pub fn expand_realizations_json(graph_text: &str) -> String {
    render((|| {
        let g = parse_graph(graph_text)?;
        let all = realization_expansion(&g, &config())?;
        Ok(json!({
            "dominating_sets": g.minimal_dominating_sets().to_string(),
            "realizations": all,
        }))
    })())
}

#[wasm_bindgen(js_name = dominatingSets)]
pub fn dominating_sets(graph_text: &str) -> String {
    dominating_sets_json(graph_text)
}

#[wasm_bindgen(js_name = minimalCompletions)]
pub fn minimal_completions_export(r: usize, n: usize) -> String {
    minimal_completions_json(r, n)
}

#[wasm_bindgen(js_name = expandRealizations)]
pub fn expand_realizations(graph_text: &str) -> String {
    expand_realizations_json(graph_text)
}
