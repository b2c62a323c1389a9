//! Command implementations shared by the binary and the tests.

mod format;
mod report;

use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use format::{parse_instance, AlgebraFile, ComoduleFile, HopfFile, InstanceFile, ModuleFile, FORMAT_VERSION};
pub use report::{is_precondition, Entry, ErrorInfo, Report, Status};

use crate::catalog::{instance, instance_names, InstanceDescriptor};
use crate::coring::{coring_from_comodule, Coring};
use crate::duals::{left_dual, random_lift_shifts, right_dual};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hopf::AxiomReport;
use crate::theorems::{verify_t1, verify_t2, verify_t3, verify_t4, verify_t5, verify_ulb};

pub const SUITES: [&str; 6] = ["T1", "T2", "T3", "T4", "T5", "ULB"];

/// A catalog name, or a path to an instance file.
pub fn load_instance(spec: &str, field: FieldSpec) -> Result<InstanceDescriptor> {
    let path = Path::new(spec);
    if spec.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        return parse_instance(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{spec}: {m}")),
            other => other,
        });
    }
    instance(spec, field)
}

/// Resamples the lifts of `Δ` and compares both dual rings with the unperturbed ones.
pub fn lift_independence(c: &Coring, seed: u64, samples: usize) -> Result<Option<String>> {
    let left = left_dual(c)?;
    let right = right_dual(c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let shifted = c.with_shifted_lifts(&random_lift_shifts(c, &mut rng, 3));
        if left_dual(&shifted)?.algebra() != left.algebra() {
            return Ok(Some(format!("left dual product changed on sample {k}")));
        }
        if right_dual(&shifted)?.algebra() != right.algebra() {
            return Ok(Some(format!("right dual product changed on sample {k}")));
        }
    }
    Ok(None)
}

/// Every axiom checker that applies to the instance.
pub fn cmd_check(inst: &InstanceDescriptor, seed: u64) -> Report {
    let start = Instant::now();
    let entries = check_entries(inst, seed);
    Report::new("check", &inst.name, &inst.field.to_string(), None, entries, start.elapsed())
}

/// The entries of [`cmd_check`], without timing.
pub fn check_entries(inst: &InstanceDescriptor, seed: u64) -> Vec<Entry> {
    let mut entries = vec![
        Entry::from_checks("hopf", inst.hopf.check()),
        Entry::from_checks("comodule", inst.comodule.check()),
    ];
    for (name, m) in &inst.modules {
        entries.push(Entry::from_checks(format!("module {name}"), m.check()));
    }
    if entries.iter().all(|e| e.status == Status::Pass) {
        let g = coring_from_comodule(&inst.comodule);
        let mut checks = g.coring.check();
        checks.extend("grouplike", g.check());
        let lift = lift_independence(&g.coring, seed, 8).unwrap_or_else(|e| Some(e.to_string()));
        checks.push("lift_independence", lift);
        entries.push(Entry::from_checks("coring A⊗H", checks));
    }
    entries
}

/// Runs one suite. `module` restricts T4/T5 to one named relative Hopf module.
pub fn cmd_run(inst: &InstanceDescriptor, suite: &str, module: Option<&str>) -> Result<Report> {
    let start = Instant::now();
    let entries = run_entries(inst, suite, module)?;
    Ok(Report::new("run", &inst.name, &inst.field.to_string(), Some(suite), entries, start.elapsed()))
}

/// The entries of [`cmd_run`], without timing.
pub fn run_entries(inst: &InstanceDescriptor, suite: &str, module: Option<&str>) -> Result<Vec<Entry>> {
    let c = &inst.comodule;
    let modules: Vec<_> = inst
        .modules
        .iter()
        .filter(|(n, _)| module.is_none_or(|m| m == n))
        .collect();
    if module.is_some() && modules.is_empty() {
        return Err(Error::Parse(format!("instance has no module named {:?}", module.unwrap_or(""))));
    }
    let entries = match suite {
        "T1" => {
            let g = coring_from_comodule(c);
            vec![Entry::from_suite("C = A⊗H", verify_t1(&g.coring))]
        }
        "T2" => vec![Entry::from_suite("A⊗H", verify_t2(c).map(|(r, _)| r))],
        "T3" => vec![Entry::from_suite("A⊗H", verify_t3(c))],
        "T4" => {
            let g = coring_from_comodule(c);
            modules
                .iter()
                .map(|(n, m)| {
                    let acts = m.actions();
                    Entry::from_suite(format!("M = N = {n}"), verify_t4(&g, &acts, &acts))
                })
                .collect()
        }
        "T5" => modules
            .iter()
            .map(|(n, m)| Entry::from_suite(format!("M = {n}"), verify_t5(c, m)))
            .collect(),
        "ULB" => vec![Entry::from_suite("M = A⊗H", verify_ulb(c))],
        other => return Err(Error::Parse(format!("unknown suite {other:?}; expected one of {SUITES:?}"))),
    };
    Ok(entries)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ListedInstance {
    pub name: String,
    pub description: String,
    pub dim_a: usize,
    pub dim_h: usize,
}

pub fn cmd_list(field: FieldSpec, extended: bool) -> Result<Vec<ListedInstance>> {
    instance_names(extended)
        .into_iter()
        .map(|n| {
            let inst = instance(n, field)?;
            Ok(ListedInstance {
                name: n.to_string(),
                description: inst.description.clone(),
                dim_a: inst.comodule.dim_a(),
                dim_h: inst.comodule.dim_h(),
            })
        })
        .collect()
}

pub fn cmd_export(inst: &InstanceDescriptor) -> String {
    InstanceFile::from_instance(inst).to_json()
}

/// Axiom report of an instance, flattened, for callers that only want a verdict.
pub fn all_axioms(inst: &InstanceDescriptor) -> AxiomReport {
    let mut r = AxiomReport::default();
    r.extend("hopf", inst.hopf.check());
    r.extend("comodule", inst.comodule.check());
    for (name, m) in &inst.modules {
        r.extend(&format!("module {name}"), m.check());
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn run_reports_and_exit_codes() {
        let i1 = instance("I1", Q).unwrap();
        let r = cmd_run(&i1, "T2", None).unwrap();
        assert_eq!(r.exit_code, 0);
        assert!(r.to_text().contains("RESULT PASS"));
        let i4 = instance("I4", Q).unwrap();
        let r = cmd_run(&i4, "T4", None).unwrap();
        assert_eq!(r.exit_code, 2);
        assert!(r.to_json().contains("not_galois"));
        assert!(cmd_run(&i1, "T9", None).is_err());
        assert!(cmd_run(&i1, "T5", Some("nope")).is_err());
    }

    #[test]
    fn json_is_reproducible() {
        let i3 = instance("I3", Q).unwrap();
        let a = cmd_run(&i3, "T2", None).unwrap().to_json();
        let b = cmd_run(&i3, "T2", None).unwrap().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("elapsed"));
    }

    #[test]
    fn check_flags_tampered_antipode() {
        let mut file = InstanceFile::from_instance(&instance("I1", Q).unwrap());
        assert_eq!(cmd_check(&file.to_instance().unwrap(), 0).exit_code, 0);
        file.hopf.antipode[1][1] = "-1".into();
        let r = cmd_check(&file.to_instance().unwrap(), 0);
        assert_eq!(r.exit_code, 1);
        assert!(r.to_text().contains("antipode"));
    }

    #[test]
    fn lift_independence_holds() {
        let g = coring_from_comodule(&instance("I3", Q).unwrap().comodule);
        assert_eq!(lift_independence(&g.coring, 11, 4).unwrap(), None);
    }
}
