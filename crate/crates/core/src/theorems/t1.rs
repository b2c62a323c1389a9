//! The right dual of the canonical coring `*C ⊗_A *C` against `End(_A C)`.

use super::{MapKind, RingIsoCertificate, SuiteReport};
use crate::coring::{canonical_coring_via, canonical_quotient, Coring};
use crate::duals::{dual_basis, end_ring, left_dual, right_dual, EndRing};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, module_homs, unit_vector, zero_vector, Matrix, Vector};

fn coords_in(ring: &EndRing, m: &Matrix, what: &str) -> Result<Vector> {
    ring.coords_of(m)
        .ok_or_else(|| Error::IllDefined(format!("{what} lands outside {}", ring.description())))
}

pub fn verify_t1(c: &Coring) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("T1");
    report.require("coring", c.check())?;
    let f = c.field();
    let a = c.base();
    let (da, dc) = (a.dim(), c.dim());
    let r = left_dual(c)?;
    let basis = dual_basis(c, &r)?;
    let ra = r.algebra();
    let dr = r.dim();
    let i_images = r.embedding().columns();

    // D = R ⊗_A R over i, and its right dual
    let q = canonical_quotient(ra, &i_images);
    let d = canonical_coring_via(ra, &i_images);
    report.require("canonical_coring", d.coring.check())?;
    let d_star = right_dual(&d.coring)?;

    let right_by_a: Vec<Matrix> = i_images.iter().map(|x| ra.right_mult(x)).collect();
    let end_r = end_ring(dr, module_homs(f, &right_by_a, &right_by_a), "End((*C)_A)")?;
    let left_c = c.bimodule().left_actions();
    let end_c = end_ring(dc, module_homs(f, left_c, left_c), "End(_A C)")?;
    report.dim("A", da);
    report.dim("C", dc);
    report.dim("*C", dr);
    report.dim("D", d.coring.dim());
    report.dim("D*", d_star.dim());
    report.dim("End((*C)_A)", end_r.dim());
    report.dim("End(_A C)", end_c.dim());
    report.check("dual_basis", !basis.elements.is_empty(), || "empty dual basis".into());

    let unit_r: Vec<(usize, crate::Scalar)> = ra
        .unit()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(w, x)| (w, x.clone()))
        .collect();
    // π(e_u ⊗ 1)
    let with_one: Vec<Vector> = (0..dr)
        .map(|u| {
            let row: Vec<_> = unit_r.iter().map(|(w, x)| (u * dr + w, x.clone())).collect();
            q.project_sparse(&row)
        })
        .collect();

    // α(φ)(c*) = φ(π(c* ⊗ 1))
    let mut alpha_cols = Vec::with_capacity(d_star.dim());
    for b in 0..d_star.dim() {
        let phi = d_star.basis_functional(b);
        let cols: Vec<Vector> = with_one.iter().map(|v| phi.apply(v)).collect();
        alpha_cols.push(coords_in(&end_r, &Matrix::from_columns(f, dr, &cols), "α(φ)")?);
    }
    let alpha = Matrix::from_columns(f, end_r.dim(), &alpha_cols);

    // β(ψ)(π(c* ⊗ d*)) = ψ(c*) d*, evaluated on the quotient representatives
    let mut beta_cols = Vec::with_capacity(end_r.dim());
    for b in 0..end_r.dim() {
        let psi = end_r.basis_matrix(b);
        let cols: Vec<Vector> = q
            .representatives()
            .iter()
            .map(|&rep| {
                let (u, v) = (rep / dr, rep % dr);
                ra.product(&psi.column(u), &unit_vector(f, dr, v))
            })
            .collect();
        let func = Matrix::from_columns(f, dr, &cols);
        beta_cols.push(
            d_star
                .coords_of(&func)
                .ok_or_else(|| Error::IllDefined("β(ψ) is not right *C-linear".into()))?,
        );
    }
    let beta = Matrix::from_columns(f, d_star.dim(), &beta_cols);

    // γ(ψ)(c) = Σ_i ψ(f_i)(c) c_i
    let mut gamma_cols = Vec::with_capacity(end_r.dim());
    for b in 0..end_r.dim() {
        let psi = end_r.basis_matrix(b);
        let images: Vec<Matrix> = basis.functionals.iter().map(|fi| r.functional(&psi.apply(fi))).collect();
        let cols: Vec<Vector> = (0..dc)
            .map(|col| {
                let mut out = zero_vector(f, dc);
                for (img, ci) in images.iter().zip(&basis.elements) {
                    axpy(&mut out, &f.one(), &c.bimodule().left_by(&img.column(col)).apply(ci));
                }
                out
            })
            .collect();
        gamma_cols.push(coords_in(&end_c, &Matrix::from_columns(f, dc, &cols), "γ(ψ)")?);
    }
    let gamma = Matrix::from_columns(f, end_c.dim(), &gamma_cols);

    // δ(ζ)(f) = f ∘ ζ
    let funcs: Vec<Matrix> = (0..dr).map(|u| r.basis_functional(u)).collect();
    let mut delta_cols = Vec::with_capacity(end_c.dim());
    for b in 0..end_c.dim() {
        let zeta = end_c.basis_matrix(b);
        let cols = funcs
            .iter()
            .map(|fu| {
                r.coords_of(&fu.mul(&zeta))
                    .ok_or_else(|| Error::IllDefined("f ∘ ζ is not left A-linear".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        delta_cols.push(coords_in(&end_r, &Matrix::from_columns(f, dr, &cols), "δ(ζ)")?);
    }
    let delta = Matrix::from_columns(f, end_r.dim(), &delta_cols);

    let square_id = |x: &Matrix, y: &Matrix| x.rows() == y.cols() && x.cols() == y.rows() && x.mul(y).is_identity() && y.mul(x).is_identity();
    report.check("beta_inverts_alpha", square_id(&beta, &alpha), || "β is not a two-sided inverse of α".into());
    report.check("delta_inverts_gamma", square_id(&delta, &gamma), || "δ is not a two-sided inverse of γ".into());

    let alpha_cert = RingIsoCertificate::certify("α: D* → End((*C)_A)", d_star.algebra(), end_r.algebra(), alpha, MapKind::Multiplicative);
    let gamma_cert = RingIsoCertificate::certify("γ: End((*C)_A) → End(_A C)", end_r.algebra(), end_c.algebra(), gamma, MapKind::AntiMultiplicative);
    let delta_cert = RingIsoCertificate::certify("δ: End(_A C) → End((*C)_A)", end_c.algebra(), end_r.algebra(), delta, MapKind::AntiMultiplicative);
    let composite = alpha_cert.then(&gamma_cert, "γ∘α: D* → End(_A C)")?;
    report.certificates.extend([alpha_cert, gamma_cert, delta_cert, composite]);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instance;
    use crate::coring::coring_from_comodule;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn dim(report: &SuiteReport, name: &str) -> usize {
        report.dimensions.iter().find(|d| d.name == name).unwrap().value
    }

    #[test]
    fn t1_on_i1_and_trivial() {
        let inst = instance("I1", Q).unwrap();
        let g = coring_from_comodule(&inst.comodule);
        let report = verify_t1(&g.coring).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert_eq!(dim(&report, "D*"), 8);
        assert_eq!(dim(&report, "End(_A C)"), 8);
        let last = report.certificates.last().unwrap();
        assert_eq!(last.kind, MapKind::AntiMultiplicative);

        let triv = Coring::trivial(instance("I3", Q).unwrap().comodule.algebra());
        let report = verify_t1(&triv).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert_eq!(dim(&report, "D*"), 4);
    }

    #[test]
    fn t1_on_i3() {
        let inst = instance("I3", Q).unwrap();
        let g = coring_from_comodule(&inst.comodule);
        let report = verify_t1(&g.coring).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert_eq!(dim(&report, "D*"), 64);
        assert_eq!(dim(&report, "End(_A C)"), 64);
        assert!(report.reverify());
    }
}
