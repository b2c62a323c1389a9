//! The Galois case of the two isomorphisms for the relative Hopf module `M = A ⊗ H`:
//! `End^H_A(M) ≅ A#H*` and `End^H_A(M) # H ≅ End_A(M)`.

use super::t4::not_galois;
use super::{MapKind, RingIsoCertificate, SuiteReport};
use crate::coring::{hopf_can, hopf_galois_check};
use crate::duals::{end_ring, EndRing};
use crate::error::{Error, Result};
use crate::exactlin::{kron_vec, module_homs, unit_vector, Matrix, Vector};
use crate::smash::{comodule_to_module, module_smash, smash_product, ComoduleAlgebra, ModuleAlgebra, RelativeHopfModule};

fn coords(ring: &EndRing, m: &Matrix, what: &str) -> Result<Vector> {
    ring.coords_of(m)
        .ok_or_else(|| Error::IllDefined(format!("{what} lands outside {}", ring.description())))
}

pub fn verify_ulb(c: &ComoduleAlgebra) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("ULB");
    report.require("hopf", c.hopf().check())?;
    report.require("comodule", c.check())?;
    let ev = hopf_galois_check(c)?;
    report.galois = Some(ev.clone());
    if !ev.galois {
        return Err(not_galois(&ev));
    }
    let f = c.field();
    let (da, dh) = (c.dim_a(), c.dim_h());
    let hopf = c.hopf();
    let m = RelativeHopfModule::canonical(c);
    report.require("M", m.check())?;
    let dm = m.dim();
    let a_acts = m.actions();
    let mut both = a_acts.clone();
    both.extend(comodule_to_module(&m));
    let end_h = end_ring(dm, module_homs(f, &both, &both), "End^H_A(M)")?;
    let end_a = end_ring(dm, module_homs(f, &a_acts, &a_acts), "End_A(M)")?;
    let smash = smash_product(c);
    report.dim("M", dm);
    report.dim("End^H_A(M)", end_h.dim());
    report.dim("A#H*", smash.dim());
    report.dim("End_A(M)", end_a.dim());

    // (ii) a#φ acts on A by x ↦ a(φ·x), extended to M ≅ A ⊗_B A through can
    let b = c.coinvariants();
    let (q, can) = hopf_can(c, &b);
    let can_inv = can.invert().map_err(|_| Error::NotGalois("can is not invertible".into()))?;
    let on_a = comodule_to_module(&RelativeHopfModule::regular(c));
    let mut cols = Vec::with_capacity(smash.dim());
    for i in 0..da {
        let left = c.algebra().left_mult(&unit_vector(f, da, i));
        for act in &on_a {
            let g = left.mul(act);
            let lifted: Vec<Vector> = q
                .representatives()
                .iter()
                .map(|&rep| {
                    let (u, v) = (rep / da, rep % da);
                    q.project(&kron_vec(&g.column(u), &unit_vector(f, da, v)))
                })
                .collect();
            let on_q = Matrix::from_columns(f, q.dim(), &lifted);
            cols.push(coords(&end_h, &can.mul(&on_q).mul(&can_inv), "extended map")?);
        }
    }
    report.certificates.push(RingIsoCertificate::certify(
        "A#H* → End^H_A(M)",
        &smash,
        end_h.algebra(),
        Matrix::from_columns(f, end_h.dim(), &cols),
        MapKind::Multiplicative,
    ));

    // (i) H acts on M through the H factor, and on End^H_A(M) by h·F = h₁ ∘ F ∘ S(h₂)
    let id_a = Matrix::identity(f, da);
    let lh: Vec<Matrix> = (0..dh)
        .map(|j| id_a.kron(&hopf.algebra().left_mult(&unit_vector(f, dh, j))))
        .collect();
    let lsh: Vec<Matrix> = (0..dh)
        .map(|j| id_a.kron(&hopf.algebra().left_mult(&hopf.antipode().column(j))))
        .collect();
    let basis: Vec<Matrix> = (0..end_h.dim()).map(|x| end_h.basis_matrix(x)).collect();
    let mut actions = Vec::with_capacity(dh);
    for j in 0..dh {
        let dlt = hopf.coalgebra().basis_coproduct(j);
        let mut acols = Vec::with_capacity(basis.len());
        for fb in &basis {
            let mut out = Matrix::zeros(f, dm, dm);
            for p in 0..dh {
                for qq in 0..dh {
                    let x = &dlt[p * dh + qq];
                    if !x.is_zero() {
                        out = out.add(&lh[p].mul(fb).mul(&lsh[qq]).scale(x));
                    }
                }
            }
            acols.push(coords(&end_h, &out, "h·F")?);
        }
        actions.push(Matrix::from_columns(f, end_h.dim(), &acols));
    }
    let module_alg = ModuleAlgebra::new(end_h.algebra().clone(), hopf.clone(), actions);
    report.require("End^H_A(M)", module_alg.check())?;
    let source = module_smash(&module_alg);
    let mut cols = Vec::with_capacity(source.dim());
    for fb in &basis {
        for l in &lh {
            cols.push(coords(&end_a, &fb.mul(l), "F ∘ (h·)")?);
        }
    }
    report.certificates.push(RingIsoCertificate::certify(
        "F#h ↦ F∘(h·)",
        &source,
        end_a.algebra(),
        Matrix::from_columns(f, end_a.dim(), &cols),
        MapKind::Multiplicative,
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instance;
    use crate::field::FieldSpec;

    #[test]
    fn ulb_on_galois_instances() {
        for (name, d) in [("I1", 4), ("I3", 16)] {
            let inst = instance(name, FieldSpec::Rationals).unwrap();
            let report = verify_ulb(&inst.comodule).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.first_failure());
            let e = report.dimensions.iter().find(|x| x.name == "End^H_A(M)").unwrap().value;
            assert_eq!(e, d);
        }
        let inst = instance("I4", FieldSpec::Rationals).unwrap();
        assert!(matches!(verify_ulb(&inst.comodule), Err(Error::NotGalois(_))));
    }
}
