//! `End_A(M) # H* ≅ End_B(M)` for a Hopf–Galois extension, directly and through the adjunction chain.

use super::t4::{chain, not_galois, restrict_actions};
use super::{LinearIsoCertificate, MapKind, RingIsoCertificate, SuiteReport};
use crate::coring::{coring_from_comodule, hopf_galois_check, induced_right_actions};
use crate::duals::end_ring;
use crate::error::{Error, Result};
use crate::exactlin::{hom_from_vector, module_homs, zero_vector, Matrix, SparseRow, Vector};
use crate::smash::{comodule_to_module, end_module_algebra, module_smash, ComoduleAlgebra, RelativeHopfModule};

/// Runs the suite; the returned matrix is the direct map `End_A(M)#H* → End_B(M)`.
pub(crate) fn schneider(c: &ComoduleAlgebra, m: &RelativeHopfModule) -> Result<(SuiteReport, RingIsoCertificate)> {
    let mut report = SuiteReport::new("T5");
    report.require("hopf", c.hopf().check())?;
    report.require("comodule", c.check())?;
    report.require("M", m.check())?;
    let ev = hopf_galois_check(c)?;
    report.galois = Some(ev.clone());
    if !ev.galois {
        return Err(not_galois(&ev));
    }
    let f = c.field();
    let (dh, dm) = (c.dim_h(), m.dim());
    let acts = m.actions();
    let b = c.coinvariants();
    let end_b = end_ring(dm, module_homs(f, &restrict_actions(f, &acts, &b), &restrict_actions(f, &acts, &b)), "End_B(M)")?;
    let (end_a, module_alg) = end_module_algebra(m)?;
    report.require("End_A(M)", module_alg.check())?;
    let smash = module_smash(&module_alg);
    report.dim("B", b.dim());
    report.dim("End_A(M)", end_a.dim());
    report.dim("End_A(M)#H*", smash.dim());
    report.dim("End_B(M)", end_b.dim());

    // f # φ ↦ f ∘ (φ·)
    let on_m = comodule_to_module(m);
    let mut cols = Vec::with_capacity(smash.dim());
    for i in 0..end_a.dim() {
        let fi = end_a.basis_matrix(i);
        for act in &on_m {
            cols.push(
                end_b
                    .coords_of(&fi.mul(act))
                    .ok_or_else(|| Error::IllDefined("f ∘ (φ·) is not B-linear".into()))?,
            );
        }
    }
    let direct = Matrix::from_columns(f, end_b.dim(), &cols);
    let cert = RingIsoCertificate::certify("f#φ ↦ f∘(φ·)", &smash, end_b.algebra(), direct, MapKind::Multiplicative);

    // the chain End_B(M) → Hom_A(M⊗_A C, M) → Hom(M⊗H, M) → Hom(H⊗M, M) → Hom(H, End(M)) → End_A(M)#H*
    let g = coring_from_comodule(c);
    let coring = &g.coring;
    let dc = coring.dim();
    let ch = chain(&g, &b, &acts);
    let on_mc = induced_right_actions(&ch.mc, dm, coring.bimodule().right_actions());
    let lhs = module_homs(f, &on_mc, &acts);
    let restrict_cols = lhs
        .basis()
        .iter()
        .map(|v| {
            let fm = hom_from_vector(f, ch.mc.dim(), dm, v)?;
            end_b
                .coords_of(&fm.mul(&ch.unit))
                .ok_or_else(|| Error::IllDefined("restricted map is not B-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let restrict = Matrix::from_columns(f, end_b.dim(), &restrict_cols);
    report
        .linear_certificates
        .push(LinearIsoCertificate::certify("F ↦ F(− ⊗ x)", "Hom_A(M ⊗_A C, M)", "End_B(M)", restrict.clone()));
    let expand = restrict.invert()?;

    // ι(m ⊗ h) = π(m ⊗ 1 ⊗ h)
    let unit_a = c.algebra().unit();
    let iota_cols: Vec<Vector> = (0..dm * dh)
        .map(|idx| {
            let (mi, h) = (idx / dh, idx % dh);
            let row: SparseRow = unit_a
                .iter()
                .enumerate()
                .filter(|(_, y)| !y.is_zero())
                .map(|(u, y)| (mi * dc + u * dh + h, y.clone()))
                .collect();
            ch.mc.project_sparse(&row)
        })
        .collect();
    let iota = Matrix::from_columns(f, ch.mc.dim(), &iota_cols);
    // τ(h ⊗ m) = m₀ ⊗ h m₁
    let ha = c.hopf().algebra();
    let mut tau = Matrix::zeros(f, dm * dh, dh * dm);
    for t in 0..dh {
        for mi in 0..dm {
            for r in 0..dm {
                for s in 0..dh {
                    let x = m.coaction().get(r * dh + s, mi);
                    if x.is_zero() {
                        continue;
                    }
                    for (u, y) in ha.basis_product(t, s).iter().enumerate() {
                        if !y.is_zero() {
                            tau.add_to(r * dh + u, t * dm + mi, &(x * y));
                        }
                    }
                }
            }
        }
    }
    let through = iota.mul(&tau);
    let sinv = c.hopf().antipode_inverse()?;
    let mut chain_cols = Vec::with_capacity(end_b.dim());
    for k in 0..end_b.dim() {
        let fcoords = expand.column(k);
        let fm = hom_from_vector(f, ch.mc.dim(), dm, &lhs.embed(&fcoords))?;
        let curried = fm.mul(&through);
        let mut out = zero_vector(f, smash.dim());
        for i in 0..dh {
            let cols: Vec<Vector> = (0..dm).map(|mi| curried.column(i * dm + mi)).collect();
            let gi = Matrix::from_columns(f, dm, &cols);
            let e = end_a
                .coords_of(&gi)
                .ok_or_else(|| Error::IllDefined("curried value is not A-linear".into()))?;
            for (ei, x) in e.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for tt in 0..dh {
                    let y = sinv.get(i, tt);
                    if !y.is_zero() {
                        let idx = ei * dh + tt;
                        out[idx] = &out[idx] + &(x * y);
                    }
                }
            }
        }
        chain_cols.push(out);
    }
    let chain_map = Matrix::from_columns(f, smash.dim(), &chain_cols);
    // the chain runs End_B(M) → End_A(M)#H*; its inverse must be the direct map entrywise
    let agrees = chain_map.invert().is_ok_and(|inv| inv == cert.map);
    report.check("chain_equals_direct_map", agrees, || {
        "the composed chain differs from f#φ ↦ f∘(φ·)".into()
    });
    report.certificates.push(cert.clone());
    Ok((report, cert))
}

pub fn verify_t5(c: &ComoduleAlgebra, m: &RelativeHopfModule) -> Result<SuiteReport> {
    schneider(c, m).map(|(r, _)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instance;
    use crate::field::FieldSpec;

    #[test]
    fn t5_on_galois_instances() {
        for (name, module, dims) in [("I1", "A", 4), ("I3", "A", 16), ("I1", "A⊗H", 16)] {
            let inst = instance(name, FieldSpec::Rationals).unwrap();
            let report = verify_t5(&inst.comodule, inst.module(module).unwrap()).unwrap();
            assert!(report.passed(), "{name}/{module}: {:?}", report.first_failure());
            let end_b = report.dimensions.iter().find(|d| d.name == "End_B(M)").unwrap().value;
            assert_eq!(end_b, dims);
        }
    }

    #[test]
    fn t5_on_i3_canonical_module() {
        let inst = instance("I3", FieldSpec::Rationals).unwrap();
        let report = verify_t5(&inst.comodule, inst.module("A⊗H").unwrap()).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn t5_rejects_non_galois() {
        let inst = instance("I4", FieldSpec::Rationals).unwrap();
        assert!(matches!(
            verify_t5(&inst.comodule, inst.module("A").unwrap()),
            Err(Error::NotGalois(_))
        ));
    }
}
