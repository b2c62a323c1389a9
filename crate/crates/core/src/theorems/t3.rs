//! `(A#H*)#H` against `End((A#H*)_A)`, through the transported coaction on `*C`.

use super::{verify_t2, MapKind, RingIsoCertificate, SuiteReport};
use crate::coring::canonical_quotient;
use crate::duals::{coaction_via, end_ring};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, module_homs, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::smash::{big_smash, iso_big_to_smash, ComoduleAlgebra};

pub fn verify_t3(c: &ComoduleAlgebra) -> Result<SuiteReport> {
    let (t2, duals) = verify_t2(c)?;
    let mut report = SuiteReport::new("T3");
    report.preconditions = t2.preconditions.clone();
    if !t2.passed() {
        return Err(Error::CertificateFailure(format!(
            "T2 prerequisite: {}",
            t2.first_failure().unwrap_or_default()
        )));
    }
    let f = c.field();
    let left = &duals.left;
    let ra = left.algebra();
    let dr = ra.dim();
    let rk = coaction_via(left, &duals.phi.map, c.hopf(), c.dim_a())?;
    report.require("transported_coaction", rk.check())?;
    let k = rk.hopf();
    let dk = k.dim();

    // Hom_k(H*, *C) with its smash structure, and the identification with *C # H**
    let source = big_smash(&rk);
    report.certificates.push(iso_big_to_smash(&rk));

    let i_images = left.embedding().columns();
    let right_by_a: Vec<Matrix> = i_images.iter().map(|x| ra.right_mult(x)).collect();
    let target = end_ring(dr, module_homs(f, &right_by_a, &right_by_a), "End((*C)_A)")?;
    report.dim("*C", dr);
    report.dim("Hom(H*, *C)", source.dim());
    report.dim("End((*C)_A)", target.dim());

    let b = rk.coinvariants();
    let a_span = Subspace::span(f, dr, &i_images);
    report.check("coinvariants_are_A", b.dim() == a_span.dim() && b.basis().iter().all(|v| a_span.contains(v)), || {
        format!("coinvariants of *C have dim {}, i(A) has dim {}", b.dim(), a_span.dim())
    });

    // the diagonal D(E_{r,j})(e_u) = Σ_v ρ[(v,j), u] e_r e_v
    let mut diag_full = Vec::with_capacity(source.dim());
    for r in 0..dr {
        for j in 0..dk {
            let cols: Vec<Vector> = (0..dr)
                .map(|u| {
                    let mut out = zero_vector(f, dr);
                    for v in 0..dr {
                        let x = rk.rho(v, j, u);
                        if !x.is_zero() {
                            axpy(&mut out, x, ra.basis_product(r, v));
                        }
                    }
                    out
                })
                .collect();
            diag_full.push(Matrix::from_columns(f, dr, &cols));
        }
    }
    let diag_cols = diag_full
        .iter()
        .map(|m| {
            target
                .coords_of(m)
                .ok_or_else(|| Error::IllDefined("diagonal image is not right A-linear".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let diag = Matrix::from_columns(f, target.dim(), &diag_cols);

    // can: *C ⊗_A *C → *C ⊗ H*, c ⊗ d ↦ c d₀ ⊗ d₁
    let q = canonical_quotient(ra, &i_images);
    let can_cols: Vec<Vector> = q
        .representatives()
        .iter()
        .map(|&rep| {
            let (u, v) = (rep / dr, rep % dr);
            let mut out = zero_vector(f, dr * dk);
            for w in 0..dr {
                let left_u = ra.basis_product(u, w);
                for s in 0..dk {
                    let x = rk.rho(w, s, v);
                    if x.is_zero() {
                        continue;
                    }
                    for (t, y) in left_u.iter().enumerate() {
                        if !y.is_zero() {
                            out[t * dk + s] = &out[t * dk + s] + &(x * y);
                        }
                    }
                }
            }
            out
        })
        .collect();
    let can = Matrix::from_columns(f, dr * dk, &can_cols);
    report.dim("*C ⊗_A *C", q.dim());
    report.check("can_bijective", can.is_square() && can.rank() == can.cols(), || {
        format!("can has rank {} on a {}-dimensional source", can.rank(), can.cols())
    });

    // π(e_u ⊗ 1)
    let with_one: Vec<Vector> = (0..dr)
        .map(|u| {
            let row: Vec<_> = ra
                .unit()
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(w, x)| (u * dr + w, x.clone()))
                .collect();
            q.project_sparse(&row)
        })
        .collect();
    let restrict = Matrix::from_columns(f, q.dim(), &with_one);
    let horizontal = can.mul(&restrict);

    // lower vertical F_f(x ⊗ k) = f(x₁ S(k)) x₀, then compare F_f ∘ can ∘ (− ⊗ 1) with D(f)
    let s_k = k.antipode();
    // kss[s][t] = k_s S(k_t)
    let kss: Vec<Vec<Vector>> = (0..dk)
        .map(|s| (0..dk).map(|t| k.algebra().product(&unit_vector(f, dk, s), &s_k.column(t))).collect())
        .collect();
    let mut commutes = true;
    'outer: for r in 0..dr {
        for j in 0..dk {
            let mut lower = Matrix::zeros(f, dr, dr * dk);
            for x in 0..dr {
                for t in 0..dk {
                    let mut out = zero_vector(f, dr);
                    for v in 0..dr {
                        for s in 0..dk {
                            let rho = rk.rho(v, s, x);
                            let coef = &kss[s][t][j];
                            if rho.is_zero() || coef.is_zero() {
                                continue;
                            }
                            axpy(&mut out, &(rho * coef), ra.basis_product(r, v));
                        }
                    }
                    for (row, y) in out.into_iter().enumerate() {
                        lower.set(row, x * dk + t, y);
                    }
                }
            }
            if lower.mul(&horizontal) != diag_full[r * dk + j] {
                commutes = false;
                break 'outer;
            }
        }
    }
    report.check("diagram_commutes", commutes, || "diagonal differs from the composite of the diagram maps".into());

    report.certificates.push(RingIsoCertificate::certify(
        "D: Hom(H*, *C) → End((*C)_A)",
        &source,
        target.algebra(),
        diag,
        MapKind::Multiplicative,
    ));
    Ok(report)
}
