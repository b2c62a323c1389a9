//! Browser bindings. Every function takes plain strings and returns a JSON string,
//! so the page needs no generated TypeScript types.

use std::time::Duration;

use coring_duality::catalog::instance;
use coring_duality::cli::{check_entries, cmd_list, parse_instance, run_entries, ErrorInfo, Report};
use coring_duality::{FieldSpec, Result};
use wasm_bindgen::prelude::*;

use coring_duality::catalog::InstanceDescriptor;

fn error_json(e: &coring_duality::Error) -> String {
    serde_json::json!({ "error": ErrorInfo::from(e) }).to_string()
}

/// A catalog name, or the full text of an instance file.
fn load(spec: &str, field: &str) -> Result<InstanceDescriptor> {
    if spec.trim_start().starts_with('{') {
        return parse_instance(spec);
    }
    instance(spec.trim(), field.parse::<FieldSpec>()?)
}

fn respond(r: Result<String>) -> String {
    r.unwrap_or_else(|e| error_json(&e))
}

/// Catalog instances over `field` ("q" or "gf:p").
#[wasm_bindgen]
pub fn list_instances(field: &str) -> String {
    respond((|| {
        let list = cmd_list(field.parse()?, true)?;
        Ok(serde_json::to_string(&list).expect("list serializes"))
    })())
}

/// Runs every axiom checker; `seed` drives the randomized lift check.
#[wasm_bindgen]
pub fn check_instance(spec: &str, field: &str, seed: u32) -> String {
    respond((|| {
        let inst = load(spec, field)?;
        let entries = check_entries(&inst, seed.into());
        Ok(Report::new("check", &inst.name, &inst.field.to_string(), None, entries, Duration::ZERO).to_json())
    })())
}

/// Runs one theorem suite (T1..T5, ULB).
#[wasm_bindgen]
pub fn run_suite(spec: &str, field: &str, suite: &str) -> String {
    respond((|| {
        let inst = load(spec, field)?;
        let entries = run_entries(&inst, suite, None)?;
        Ok(Report::new("run", &inst.name, &inst.field.to_string(), Some(suite), entries, Duration::ZERO).to_json())
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_and_run() {
        let v: serde_json::Value = serde_json::from_str(&list_instances("gf:5")).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 6);
        let r: serde_json::Value = serde_json::from_str(&run_suite("I1", "q", "T2")).unwrap();
        assert_eq!(r["exit_code"], 0);
        let r: serde_json::Value = serde_json::from_str(&run_suite("I4", "q", "T4")).unwrap();
        assert_eq!(r["exit_code"], 2);
    }

    #[test]
    fn pasted_instance_and_errors() {
        let text = coring_duality::cli::cmd_export(&instance("I1", FieldSpec::Rationals).unwrap());
        let r: serde_json::Value = serde_json::from_str(&check_instance(&text, "q", 3)).unwrap();
        assert_eq!(r["passed"], true);
        let e: serde_json::Value = serde_json::from_str(&run_suite("I1", "gf:4", "T2")).unwrap();
        assert_eq!(e["error"]["kind"], "parse");
        let e: serde_json::Value = serde_json::from_str(&run_suite("{ broken", "q", "T2")).unwrap();
        assert_eq!(e["error"]["kind"], "parse");
    }
}
