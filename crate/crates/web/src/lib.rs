//! Browser bindings. The plain functions return rendered text or an error
//! message; the `#[wasm_bindgen]` wrappers only convert the error type.

use inss::io::{render_report, render_table, SoftSetDocument};
use inss::soft_algebra::{and, complement, intersection, or, union};
use inss::{select_best, Error, Parameter, SoftSet};
use wasm_bindgen::prelude::*;

const SAMPLES: [(&str, &str); 3] = [
    ("blouse-choice", include_str!("../../../fixtures/blouse-choice.json")),
    ("blouses-f", include_str!("../../../fixtures/blouses-f.json")),
    ("blouses-g", include_str!("../../../fixtures/blouses-g.json")),
];

fn message(e: Error) -> String {
    format!("{}: {e}", e.name())
}

fn load(text: &str) -> Result<SoftSet, Error> {
    SoftSetDocument::from_json(text)?.to_soft_set()
}

/// Scores the objects on the comma-separated choice labels, or on every
/// parameter when `labels` is blank.
pub fn decide(document: &str, labels: &str) -> Result<String, String> {
    let set = load(document).map_err(message)?;
    let choice: Vec<Parameter> = if labels.trim().is_empty() {
        set.parameters().cloned().collect()
    } else {
        labels
            .split(',')
            .map(|l| {
                let l = l.trim();
                set.parameter_by_label(l)
                    .cloned()
                    .ok_or_else(|| message(Error::UnknownParameter(l.to_string())))
            })
            .collect::<Result<_, _>>()?
    };
    let sel = select_best(&set, &choice).map_err(message)?;
    let report = sel.report(None).map_err(message)?;
    Ok(render_report(&report))
}

/// Applies `op` (union, intersection, and, or) and renders the result.
pub fn combine(op: &str, left: &str, right: &str) -> Result<String, String> {
    let f = match op {
        "union" => union,
        "intersection" => intersection,
        "and" => and,
        "or" => or,
        other => return Err(format!("unknown operation `{other}`")),
    };
    let (a, b) = (load(left).map_err(message)?, load(right).map_err(message)?);
    f(&a, &b).map(|s| render_table(&s)).map_err(message)
}

pub fn complement_table(document: &str) -> Result<String, String> {
    load(document).map(|s| render_table(&complement(&s))).map_err(message)
}

pub fn sample(name: &str) -> Option<&'static str> {
    SAMPLES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[wasm_bindgen(js_name = decide)]
pub fn decide_js(document: &str, labels: &str) -> Result<String, JsError> {
    decide(document, labels).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = combine)]
pub fn combine_js(op: &str, left: &str, right: &str) -> Result<String, JsError> {
    combine(op, left, right).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = complement)]
pub fn complement_js(document: &str) -> Result<String, JsError> {
    complement_table(document).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = sample)]
pub fn sample_js(name: &str) -> Option<String> {
    sample(name).map(str::to_string)
}
