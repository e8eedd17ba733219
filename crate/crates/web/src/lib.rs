//! WebAssembly bindings for the browser demo in `www/`. Every export
//! returns a JSON string; the work is done by the plain functions in
//! [`api`], which the native tests call directly.

use wasm_bindgen::prelude::*;

pub mod api {
    use std::sync::Arc;

    use qclrc::algebra::{factor_unity, Field};
    use qclrc::bounds::full_report;
    use qclrc::codes::DistanceBudget;
    use qclrc::construct::{scan, CodeDatabase, FamilySpec};
    use qclrc::examples::EXAMPLES;
    use qclrc::render::{factorization_text, report_text, scan_text, FactorizationSummary};
    use qclrc::spec::CodeSpec;
    use serde::Serialize;

    /// Longest family the page will scan in one call.
    pub const MAX_JMAX: usize = 64;

    #[derive(Serialize)]
    struct Rendered<T> {
        data: T,
        text: String,
    }

    #[derive(Serialize)]
    struct ExampleEntry {
        id: &'static str,
        title: &'static str,
        spec: &'static str,
        jmax: Option<usize>,
    }

    fn json<T: Serialize>(data: T, text: String) -> Result<String, String> {
        serde_json::to_string(&Rendered { data, text }).map_err(|e| e.to_string())
    }

    pub fn factor(m: u32, q: u32) -> Result<String, String> {
        let field = Field::galois(q as u64).map_err(|e| e.to_string())?;
        let fact = factor_unity(&field, m as u64).map_err(|e| e.to_string())?;
        let summary = FactorizationSummary::new(&fact);
        let text = factorization_text(&summary);
        json(summary, text)
    }

    pub fn analyze(spec: &str) -> Result<String, String> {
        let budget = DistanceBudget::default();
        let db = CodeDatabase::bundled();
        let dec = CodeSpec::parse(spec)
            .and_then(|s| s.to_decomposition(Some(&db), &budget))
            .map_err(|e| e.to_string())?;
        let report = full_report(&dec, &budget).map_err(|e| e.to_string())?;
        let text = report_text(&report);
        json(report, text)
    }

    pub fn scan_family(spec: &str, jmax: usize) -> Result<String, String> {
        if jmax > MAX_JMAX {
            return Err(format!("j_max is limited to {MAX_JMAX} here"));
        }
        let budget = DistanceBudget::default();
        let db = Arc::new(CodeDatabase::bundled());
        let base = CodeSpec::parse(spec)
            .and_then(|s| s.to_decomposition(Some(&db), &budget))
            .map_err(|e| e.to_string())?;
        let report = scan(&FamilySpec {
            base,
            jmax,
            budget,
            database: Some(db),
        })
        .map_err(|e| e.to_string())?;
        let text = scan_text(&report);
        json(report, text)
    }

    pub fn examples() -> String {
        let list: Vec<ExampleEntry> = EXAMPLES
            .iter()
            .map(|e| ExampleEntry {
                id: e.id,
                title: e.title,
                spec: e.spec,
                jmax: e.jmax,
            })
            .collect();
        serde_json::to_string(&list).expect("static data serializes")
    }
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// `{data: FactorizationSummary, text}` for `x^m - 1` over `F_q`.
#[wasm_bindgen]
pub fn factor(m: u32, q: u32) -> Result<String, JsValue> {
    js(api::factor(m, q))
}

/// `{data: BoundsReport, text}` for a code spec.
#[wasm_bindgen]
pub fn analyze(spec: &str) -> Result<String, JsValue> {
    js(api::analyze(spec))
}

/// `{data: ScanReport, text}` for the family of a code spec.
#[wasm_bindgen]
pub fn scan(spec: &str, jmax: usize) -> Result<String, JsValue> {
    js(api::scan_family(spec, jmax))
}

/// The built-in example specs as a JSON array.
#[wasm_bindgen]
pub fn examples() -> String {
    api::examples()
}
