//! Acceptance gate: one PASS/FAIL line per criterion, with wall-clock timings.
//! Run with `cargo test --test acceptance`; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use coring_duality::catalog::{cyclic_group, group_algebra, instance, symmetric_group_s3, sweedler_h4, CORE_INSTANCES};
use coring_duality::cli::{cmd_run, lift_independence, SUITES};
use coring_duality::coring::{
    can_map, canonical_coring, canonical_coring_via, coinvariants, coring_from_comodule, hopf_can, hopf_galois_check,
    is_galois, tensor_over_a, Coring,
};
use coring_duality::duals::left_dual;
use coring_duality::exactlin::{Matrix, QuotientSpace};
use coring_duality::smash::RelativeHopfModule;
use coring_duality::theorems::{verify_t1, verify_t2, verify_t3, verify_t4, verify_t5, verify_ulb, SuiteReport};
use coring_duality::{Error, FieldSpec};

const Q: FieldSpec = FieldSpec::Rationals;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn dim_of(r: &SuiteReport, name: &str) -> Result<usize, String> {
    r.dimensions
        .iter()
        .find(|d| d.name == name)
        .map(|d| d.value)
        .ok_or_else(|| format!("{}: no dimension {name}", r.suite))
}

fn passed(label: &str, r: &SuiteReport) -> Result<(), String> {
    if !r.passed() {
        return Err(format!("{label}: {}", r.first_failure().unwrap_or_default()));
    }
    if !r.reverify() {
        return Err(format!("{label}: certificate does not reverify"));
    }
    Ok(())
}

fn has_check(r: &SuiteReport, name: &str) -> Result<(), String> {
    match r.checks.checks.iter().find(|c| c.name == name) {
        Some(c) if c.passed => Ok(()),
        Some(_) => Err(format!("{}: check {name} failed", r.suite)),
        None => Err(format!("{}: check {name} missing", r.suite)),
    }
}

fn within(label: &str, t: Duration, limit: f64) -> Result<(), String> {
    if t.as_secs_f64() < limit {
        Ok(())
    } else {
        Err(format!("{label} took {:.2} s (limit {limit} s)", t.as_secs_f64()))
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn err(label: &str) -> impl Fn(Error) -> String + '_ {
    move |e| format!("{label}: {e}")
}

fn axiom_gauntlet() -> Outcome {
    let mut slowest = Duration::ZERO;
    for f in [Q, FieldSpec::Prime(5), FieldSpec::Prime(7)] {
        let hopfs = [
            ("kC2", group_algebra(&cyclic_group(2), f)),
            ("kC3", group_algebra(&cyclic_group(3), f)),
            ("kS3", group_algebra(&symmetric_group_s3(), f)),
            ("H4", sweedler_h4(f)),
        ];
        for (name, h) in hopfs {
            let label = format!("{name} over {f}");
            let h = h.map_err(err(&label))?;
            let (report, t) = timed(|| h.check());
            if !report.passed() {
                return Err(format!("{label}: {}", report.first_failure().unwrap_or_default()));
            }
            within(&label, t, 1.0)?;
            slowest = slowest.max(t);
        }
    }
    match sweedler_h4(FieldSpec::Prime(2)) {
        Err(Error::BadCharacteristic(2)) => {}
        other => return Err(format!("H4 over GF(2) not rejected: {:?}", other.map(|h| h.dim()))),
    }
    Ok(format!("12 Hopf algebras, slowest {:.3} s; H4 over GF(2) rejected", slowest.as_secs_f64()))
}

fn suite_t2() -> Outcome {
    let mut out = Vec::new();
    for name in ["I1", "I2", "I3", "I5"] {
        let c = instance(name, Q).map_err(err(name))?.comodule;
        let (r, t) = timed(|| verify_t2(&c));
        let (r, _) = r.map_err(err(name))?;
        passed(name, &r)?;
        if r.certificates.len() != 4 {
            return Err(format!("{name}: {} certificates", r.certificates.len()));
        }
        let n = c.dim_a() * c.dim_h();
        for d in ["C", "*C", "C*", "#(H,A)", "A#H*"] {
            if dim_of(&r, d)? != n {
                return Err(format!("{name}: dim {d} = {} != {n}", dim_of(&r, d)?));
            }
        }
        within(name, t, 10.0)?;
        out.push(format!("{name} dim {n} in {:.2} s", t.as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn suite_t1() -> Outcome {
    let h4 = sweedler_h4(Q).map_err(err("H4"))?;
    let cases: Vec<(&str, Coring, usize, f64)> = vec![
        ("I1", coring_from_comodule(&instance("I1", Q).map_err(err("I1"))?.comodule).coring, 8, 60.0),
        ("I3", coring_from_comodule(&instance("I3", Q).map_err(err("I3"))?.comodule).coring, 64, 60.0),
        ("trivial coring on H4", Coring::trivial(h4.algebra()), 4, 60.0),
    ];
    let mut out = Vec::new();
    for (name, c, expect, limit) in cases {
        let (r, t) = timed(|| verify_t1(&c));
        let r = r.map_err(err(name))?;
        passed(name, &r)?;
        let (ds, end) = (dim_of(&r, "D*")?, dim_of(&r, "End(_A C)")?);
        if ds != expect || end != expect {
            return Err(format!("{name}: dim D* = {ds}, dim End(_A C) = {end}, expected {expect}"));
        }
        within(name, t, limit)?;
        out.push(format!("{name} dim {expect} in {:.2} s", t.as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn suite_t3() -> Outcome {
    let mut out = Vec::new();
    for name in ["I1", "I3", "I5"] {
        let c = instance(name, Q).map_err(err(name))?.comodule;
        let (r, t) = timed(|| verify_t3(&c));
        let r = r.map_err(err(name))?;
        passed(name, &r)?;
        has_check(&r, "diagram_commutes")?;
        let n = c.dim_h() * c.dim_h() * c.dim_a();
        let (s, e) = (dim_of(&r, "Hom(H*, *C)")?, dim_of(&r, "End((*C)_A)")?);
        if s != n || e != n {
            return Err(format!("{name}: dims {s}, {e}, expected {n}"));
        }
        within(name, t, 120.0)?;
        out.push(format!("{name} dim {n} in {:.2} s", t.as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn galois_discrimination() -> Outcome {
    let mut verdicts = Vec::new();
    for (name, expect) in [("I1", true), ("I2", true), ("I3", true), ("I4", false), ("I5", false)] {
        let c = instance(name, Q).map_err(err(name))?.comodule;
        let coring = is_galois(&coring_from_comodule(&c)).map_err(err(name))?.galois;
        let hopf = hopf_galois_check(&c).map_err(err(name))?.galois;
        if coring != expect || hopf != expect {
            return Err(format!("{name}: is_galois {coring}, hopf_galois_check {hopf}, expected {expect}"));
        }
        verdicts.push(format!("{name} {expect}"));
    }
    Ok(verdicts.join(", "))
}

fn suite_t4() -> Outcome {
    let mut out = Vec::new();
    for name in ["I1", "I3"] {
        let inst = instance(name, Q).map_err(err(name))?;
        let g = coring_from_comodule(&inst.comodule);
        for module in ["A", "A⊗H"] {
            let label = format!("{name}/{module}");
            let acts = inst.module(module).ok_or(format!("{label} missing"))?.actions();
            let r = verify_t4(&g, &acts, &acts).map_err(err(&label))?;
            passed(&label, &r)?;
            has_check(&r, "dimensions_agree")?;
            out.push(format!("{label} dim {}", dim_of(&r, "Hom_B(M, N)")?));
        }
    }
    let i4 = instance("I4", Q).map_err(err("I4"))?;
    let acts = i4.module("A").ok_or("I4/A missing")?.actions();
    match verify_t4(&coring_from_comodule(&i4.comodule), &acts, &acts) {
        Err(Error::NotGalois(_)) => out.push("I4 NotGalois".into()),
        other => return Err(format!("I4: expected NotGalois, got {:?}", other.map(|r| r.passed()))),
    }
    Ok(out.join(", "))
}

fn suite_t5() -> Outcome {
    let mut out = Vec::new();
    for (name, module, expect) in [("I1", "A", Some(4)), ("I3", "A", Some(16)), ("I1", "A⊗H", None), ("I3", "A⊗H", None)] {
        let label = format!("{name}/{module}");
        let inst = instance(name, Q).map_err(err(name))?;
        let m: &RelativeHopfModule = inst.module(module).ok_or(format!("{label} missing"))?;
        let r = verify_t5(&inst.comodule, m).map_err(err(&label))?;
        passed(&label, &r)?;
        has_check(&r, "chain_equals_direct_map")?;
        let (s, e) = (dim_of(&r, "End_A(M)#H*")?, dim_of(&r, "End_B(M)")?);
        if s != e || expect.is_some_and(|n| n != s) {
            return Err(format!("{label}: dims {s} and {e}, expected {expect:?}"));
        }
        out.push(format!("{label} {s} = {e}"));
    }
    Ok(out.join(", "))
}

fn suite_ulb() -> Outcome {
    let mut out = Vec::new();
    for name in ["I1", "I3"] {
        let c = instance(name, Q).map_err(err(name))?.comodule;
        let r = verify_ulb(&c).map_err(err(name))?;
        passed(name, &r)?;
        if r.certificates.len() < 2 {
            return Err(format!("{name}: {} certificates", r.certificates.len()));
        }
        let (e, s) = (dim_of(&r, "End^H_A(M)")?, dim_of(&r, "A#H*")?);
        if e != s {
            return Err(format!("{name}: dim End^H_A(M) = {e}, dim A#H* = {s}"));
        }
        out.push(format!("{name} dim {e}"));
    }
    Ok(out.join(", "))
}

fn quotient_ok(label: &str, q: &QuotientSpace) -> Result<(), String> {
    let f = q.field();
    if q.projection().mul(&q.section()) != Matrix::identity(f, q.dim()) {
        return Err(format!("{label}: projection∘section != id"));
    }
    Ok(())
}

fn lift_and_quotients() -> Outcome {
    let mut quotients = 0;
    for (k, name) in CORE_INSTANCES.iter().enumerate() {
        let inst = instance(name, Q).map_err(err(name))?;
        let g = coring_from_comodule(&inst.comodule);
        if let Some(msg) = lift_independence(&g.coring, 1000 + k as u64, 100).map_err(err(name))? {
            return Err(format!("{name}: {msg}"));
        }
        let f = inst.field;
        let b = coinvariants(&g);
        let a = inst.comodule.algebra();
        let mut qs = vec![
            ("C ⊗_A C", g.coring.tensor_quotient().clone()),
            ("A ⊗_B A", can_map(&g, &b).map_err(err(name))?.0),
            ("A ⊗_B A (Hopf)", hopf_can(&inst.comodule, &b).0),
            ("canonical coring", canonical_coring(a, &b).map_err(err(name))?.coring.tensor_quotient().clone()),
        ];
        for (_, m) in &inst.modules {
            qs.push(("M ⊗_A C", tensor_over_a(f, &m.actions(), g.coring.bimodule().left_actions())));
        }
        let r = left_dual(&g.coring).map_err(err(name))?;
        let images = r.embedding().columns();
        qs.push(("D = *C ⊗_A *C", canonical_coring_via(r.algebra(), &images).coring.tensor_quotient().clone()));
        for (label, q) in &qs {
            quotient_ok(&format!("{name} {label}"), q)?;
        }
        quotients += qs.len();
    }
    Ok(format!("100 perturbations on each of {} instances, {quotients} quotients", CORE_INSTANCES.len()))
}

fn full_pass() -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for name in CORE_INSTANCES {
        let inst = instance(name, Q).map_err(err(name))?;
        for suite in SUITES {
            out.push(cmd_run(&inst, suite, None).map_err(err(name))?.to_json());
        }
    }
    Ok(out)
}

fn determinism() -> Outcome {
    let (a, t) = timed(full_pass);
    let a = a?;
    let b = full_pass()?;
    if a != b {
        let i = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(0);
        return Err(format!("report {i} differs between runs"));
    }
    within("full corpus", t, 600.0)?;
    Ok(format!("{} reports identical, one pass {:.1} s", a.len(), t.as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("axiom gauntlet", axiom_gauntlet),
        ("T2 smash duals", suite_t2),
        ("T1 dual of the canonical coring", suite_t1),
        ("T3 endomorphism ring", suite_t3),
        ("Galois discrimination", galois_discrimination),
        ("T4 descent", suite_t4),
        ("T5 Schneider", suite_t5),
        ("Ulbrich", suite_ulb),
        ("lift independence and quotients", lift_and_quotients),
        ("determinism and corpus time", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (outcome, t) = timed(run);
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {}: {name} [{:.2} s] {detail}", i + 1, t.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
