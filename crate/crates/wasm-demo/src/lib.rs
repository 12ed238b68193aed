//! Browser bindings. Every export takes plain values and returns a JSON
//! string; the `*_json` functions hold the logic so they can be tested
//! natively.

use gof_core::atlas::{self, AtlasRecord, SlopeWindow};
use gof_core::braid3::BraidWord;
use gof_core::lens::normalize;
use gof_core::mat2::rl_class;
use gof_core::verdict::{monodromy_class, AllIntegral, MonodromyClass};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest sweep the page may request; keeps the grid responsive.
pub const MAX_GRID_ALPHA: i64 = 120;

pub fn monodromy_json(braid: &str) -> Result<String, String> {
    let braid: BraidWord = braid.parse().map_err(|e| format!("{e}"))?;
    let m = braid.monodromy().map_err(|e| e.to_string())?;
    let class = monodromy_class(&m).map_err(|e| e.to_string())?;
    let rl = match class {
        MonodromyClass::Hyperbolic => {
            let c = rl_class(&m).map_err(|e| e.to_string())?;
            Some(format!("{}{}", if c.sign < 0 { "-" } else { "" }, c.word))
        }
        _ => None,
    };
    let value = json!({
        "braid": braid.free_reduce().map_err(|e| e.to_string())?,
        "matrix": m,
        "trace": m.trace().map_err(|e| e.to_string())?,
        "class": class,
        "rl_word": rl,
    });
    Ok(value.to_string())
}

pub fn classify_json(alpha: i64, beta: i64, lo: i64, hi: i64) -> Result<String, String> {
    let space = normalize(alpha, beta).map_err(|e| e.to_string())?;
    let record = AtlasRecord::new(space, SlopeWindow::new(lo, hi)).map_err(|e| e.to_string())?;
    serde_json::to_string(&record).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Cell {
    alpha: i64,
    beta: i64,
    knots: usize,
    /// Some knot has every integral surgery left-orderable.
    lo: bool,
    labels: Vec<String>,
}

/// One cell per canonical `L(alpha, beta)` with `alpha ≤ max_alpha`.
pub fn atlas_grid_json(max_alpha: i64) -> Result<String, String> {
    if !(0..=MAX_GRID_ALPHA).contains(&max_alpha) {
        return Err(format!("max alpha must lie in 0..={MAX_GRID_ALPHA}"));
    }
    let records = atlas::enumerate(max_alpha, SlopeWindow::empty()).map_err(|e| e.to_string())?;
    let cells: Vec<Cell> = records
        .iter()
        .map(|r| Cell {
            alpha: r.space.alpha(),
            beta: r.space.beta(),
            knots: r.knots.len(),
            lo: r.knots.iter().any(|k| k.all_integral_lo == AllIntegral::AllLo),
            labels: r.knots.iter().map(|k| k.knot.name()).collect(),
        })
        .collect();
    serde_json::to_string(&cells).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn monodromy(braid: &str) -> Result<String, JsError> {
    monodromy_json(braid).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn classify(alpha: i32, beta: i32, lo: i32, hi: i32) -> Result<String, JsError> {
    classify_json(alpha.into(), beta.into(), lo.into(), hi.into()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn atlas_grid(max_alpha: i32) -> Result<String, JsError> {
    atlas_grid_json(max_alpha.into()).map_err(|e| JsError::new(&e))
}
