//! `Hom_A(M ⊗_A C, N) ≅ Hom_B(M, N)` for a Galois coring.

use super::{LinearIsoCertificate, SuiteReport};
use crate::coring::{coinvariants, induced_right_actions, is_galois, tensor_over_a, GaloisEvidence, GrouplikeCoring};
use crate::error::{Error, Result};
use crate::exactlin::{hom_from_vector, hom_to_vector, module_homs, Matrix, QuotientSpace, SparseRow, Subspace, Vector};
use crate::field::FieldSpec;

/// `Σ_t b_t A_t` for each basis vector `b` of `B`.
pub(crate) fn restrict_actions(field: FieldSpec, actions: &[Matrix], b: &Subspace) -> Vec<Matrix> {
    let n = actions[0].rows();
    b.basis()
        .iter()
        .map(|v| {
            let mut out = Matrix::zeros(field, n, actions[0].cols());
            for (t, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out = out.add(&actions[t].scale(x));
                }
            }
            out
        })
        .collect()
}

pub(crate) fn not_galois(ev: &GaloisEvidence) -> Error {
    Error::NotGalois(format!(
        "can: A⊗_B A → C has rank {} (source {}, target {}, dim B = {})",
        ev.rank, ev.source_dim, ev.target_dim, ev.coinvariants_dim
    ))
}

/// The pieces of the adjunction chain, kept for reuse.
pub(crate) struct Chain {
    pub mc: QuotientSpace,
    /// `m ↦ π(m ⊗ x)`, `M → M ⊗_A C`.
    pub unit: Matrix,
    /// `θ: M ⊗_B A → M ⊗_A C`.
    pub theta: Matrix,
    pub mb: QuotientSpace,
}

pub(crate) fn chain(g: &GrouplikeCoring, b: &Subspace, m_actions: &[Matrix]) -> Chain {
    let c = &g.coring;
    let f = c.field();
    let a = c.base();
    let (da, dc) = (a.dim(), c.dim());
    let dm = m_actions[0].rows();
    let mc = tensor_over_a(f, m_actions, c.bimodule().left_actions());
    let b_on_m = restrict_actions(f, m_actions, b);
    let b_on_a: Vec<Matrix> = b.basis().iter().map(|v| a.left_mult(v)).collect();
    let mb = tensor_over_a(f, &b_on_m, &b_on_a);
    // θ(m ⊗ a) = π(m ⊗ x·a)
    let xa: Vec<Vector> = (0..da).map(|t| c.bimodule().right_actions()[t].apply(&g.x)).collect();
    let theta_cols: Vec<Vector> = mb
        .representatives()
        .iter()
        .map(|&rep| {
            let (m, t) = (rep / da, rep % da);
            let row: SparseRow = xa[t]
                .iter()
                .enumerate()
                .filter(|(_, y)| !y.is_zero())
                .map(|(k, y)| (m * dc + k, y.clone()))
                .collect();
            mc.project_sparse(&row)
        })
        .collect();
    let theta = Matrix::from_columns(f, mc.dim(), &theta_cols);
    let unit_cols: Vec<Vector> = (0..dm)
        .map(|m| {
            let row: SparseRow = g
                .x
                .iter()
                .enumerate()
                .filter(|(_, y)| !y.is_zero())
                .map(|(k, y)| (m * dc + k, y.clone()))
                .collect();
            mc.project_sparse(&row)
        })
        .collect();
    let unit = Matrix::from_columns(f, mc.dim(), &unit_cols);
    Chain { mc, unit, theta, mb }
}

/// `m_actions`, `n_actions`: right `A`-actions on `M` and `N`, one matrix per basis element of `A`.
pub fn verify_t4(g: &GrouplikeCoring, m_actions: &[Matrix], n_actions: &[Matrix]) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("T4");
    report.require("coring", g.check())?;
    let c = &g.coring;
    let f = c.field();
    let a = c.base();
    report.require("M", crate::smash::check_right_module(a, m_actions))?;
    report.require("N", crate::smash::check_right_module(a, n_actions))?;
    let ev = is_galois(g)?;
    report.galois = Some(ev.clone());
    if !ev.galois {
        return Err(not_galois(&ev));
    }
    let dn = n_actions[0].rows();
    let b = coinvariants(g);
    let ch = chain(g, &b, m_actions);
    let dm = m_actions[0].rows();

    let on_mc = induced_right_actions(&ch.mc, dm, c.bimodule().right_actions());
    let lhs = module_homs(f, &on_mc, n_actions);
    let rhs = module_homs(f, &restrict_actions(f, m_actions, &b), &restrict_actions(f, n_actions, &b));
    report.dim("B", b.dim());
    report.dim("M ⊗_A C", ch.mc.dim());
    report.dim("M ⊗_B A", ch.mb.dim());
    report.dim("Hom_A(M ⊗_A C, N)", lhs.dim());
    report.dim("Hom_B(M, N)", rhs.dim());
    report.check("dimensions_agree", lhs.dim() == rhs.dim(), || {
        format!("{} ≠ {}", lhs.dim(), rhs.dim())
    });
    report.linear_certificates.push(LinearIsoCertificate::certify(
        "θ: M ⊗_B A → M ⊗_A C",
        "M ⊗_B A",
        "M ⊗_A C",
        ch.theta.clone(),
    ));

    // F ↦ (m ↦ F(π(m ⊗ x)))
    let mut cols = Vec::with_capacity(lhs.dim());
    for v in lhs.basis() {
        let fmat = hom_from_vector(f, ch.mc.dim(), dn, v)?;
        let g_map = fmat.mul(&ch.unit);
        cols.push(
            rhs.coords(&hom_to_vector(&g_map))
                .ok_or_else(|| Error::IllDefined("restricted map is not B-linear".into()))?,
        );
    }
    report.linear_certificates.push(LinearIsoCertificate::certify(
        "F ↦ F(− ⊗ x)",
        "Hom_A(M ⊗_A C, N)",
        "Hom_B(M, N)",
        Matrix::from_columns(f, rhs.dim(), &cols),
    ));
    Ok(report)
}
