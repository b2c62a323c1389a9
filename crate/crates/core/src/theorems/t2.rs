//! Duals of `A ⊗ H` against the smash products.

use super::{MapKind, RingIsoCertificate, SuiteReport};
use crate::coring::{coring_from_comodule, GrouplikeCoring};
use crate::duals::{left_dual, right_dual, DualRing};
use crate::error::{Error, Result};
use crate::exactlin::{kron_vec, zero_vector, Matrix, Vector};
use crate::hopf::Algebra;
use crate::smash::{big_smash, smash_product, ComoduleAlgebra};

/// The rings and maps built by [`verify_t2`], reused by later suites.
#[derive(Clone, Debug)]
pub struct SmashDuals {
    pub coring: GrouplikeCoring,
    pub left: DualRing,
    pub right: DualRing,
    pub smash: Algebra,
    /// `Φ: *(A⊗H) → A#H*`.
    pub phi: RingIsoCertificate,
}

/// `ζ ∈ Hom_k(H, A)` read off a functional on `A ⊗ H` at `1 ⊗ g(h_s)`.
fn restrict_to_h(c: &ComoduleAlgebra, func: &Matrix, g: &Matrix) -> Vector {
    let (da, dh) = (c.dim_a(), c.dim_h());
    let mut out = zero_vector(c.field(), da * dh);
    for s in 0..dh {
        let arg = kron_vec(c.algebra().unit(), &g.column(s));
        for (a, v) in func.apply(&arg).into_iter().enumerate() {
            out[a * dh + s] = v;
        }
    }
    out
}

fn map_from_dual(c: &ComoduleAlgebra, dual: &DualRing, g: &Matrix) -> Matrix {
    let cols: Vec<Vector> = (0..dual.dim())
        .map(|b| restrict_to_h(c, &dual.basis_functional(b), g))
        .collect();
    Matrix::from_columns(c.field(), c.dim_a() * c.dim_h(), &cols)
}

/// `δ(ζ)(a⊗h) = ζ(a₁S(h))a₀` on the basis `E_{a,h}` of `#(H,A)`, as dual coordinates.
fn delta(c: &ComoduleAlgebra, right: &DualRing) -> Result<Matrix> {
    let f = c.field();
    let (da, dh) = (c.dim_a(), c.dim_h());
    let hopf = c.hopf();
    let s = hopf.antipode();
    let a = c.algebra();
    let mut cols = Vec::with_capacity(da * dh);
    for ea in 0..da {
        for h in 0..dh {
            let mut func = Matrix::zeros(f, da, da * dh);
            for i in 0..da {
                for t in 0..dh {
                    let mut value = zero_vector(f, da);
                    for r in 0..da {
                        for sv in 0..dh {
                            let rho = c.rho(r, sv, i);
                            if rho.is_zero() {
                                continue;
                            }
                            // f_h(h_sv S(h_t))
                            let mut coef = f.zero();
                            for u in 0..dh {
                                crate::field::add_product(&mut coef, s.get(u, t), &hopf.algebra().basis_product(sv, u)[h]);
                            }
                            if !coef.is_zero() {
                                crate::exactlin::axpy(&mut value, &(rho * &coef), a.basis_product(ea, r));
                            }
                        }
                    }
                    for (row, v) in value.into_iter().enumerate() {
                        func.set(row, i * dh + t, v);
                    }
                }
            }
            cols.push(
                right
                    .coords_of(&func)
                    .ok_or_else(|| Error::IllDefined("δ(ζ) is not right A-linear".into()))?,
            );
        }
    }
    Ok(Matrix::from_columns(f, right.dim(), &cols))
}

/// `a # h* ↦ h*₁(S⁻¹(a₁)) a₀ # h*₂∘S⁻¹`, from `A#H*` to `(A^op # H^{*cop})^op`.
fn twist_matrix(c: &ComoduleAlgebra) -> Result<Matrix> {
    let f = c.field();
    let (da, dh) = (c.dim_a(), c.dim_h());
    let sinv = c.hopf().antipode_inverse()?;
    let ha = c.hopf().algebra();
    let n = da * dh;
    let mut m = Matrix::zeros(f, n, n);
    for i in 0..da {
        for j in 0..dh {
            let col = i * dh + j;
            for r in 0..da {
                for s in 0..dh {
                    let rho = c.rho(r, s, i);
                    if rho.is_zero() {
                        continue;
                    }
                    for p in 0..dh {
                        let a1 = sinv.get(p, s);
                        if a1.is_zero() {
                            continue;
                        }
                        for q in 0..dh {
                            let dl = &ha.basis_product(p, q)[j];
                            if dl.is_zero() {
                                continue;
                            }
                            let coef = &(rho * a1) * dl;
                            for t in 0..dh {
                                let st = sinv.get(q, t);
                                if !st.is_zero() {
                                    m.add_to(r * dh + t, col, &(&coef * st));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Builds both duals of `A ⊗ H` and certifies the four isomorphisms.
pub fn verify_t2(c: &ComoduleAlgebra) -> Result<(SuiteReport, SmashDuals)> {
    let mut report = SuiteReport::new("T2");
    report.require("hopf", c.hopf().check())?;
    report.require("comodule", c.check())?;
    let f = c.field();
    let sinv = c.hopf().antipode_inverse()?;
    let g = coring_from_comodule(c);
    report.require("coring", g.coring.check())?;
    let left = left_dual(&g.coring)?;
    let right = right_dual(&g.coring)?;
    let op = c.opposite()?;
    let big = big_smash(c);
    let smash = smash_product(c);
    let big_op = big_smash(&op).opposite();
    let smash_op = smash_product(&op).opposite();
    report.dim("C", g.coring.dim());
    report.dim("*C", left.dim());
    report.dim("C*", right.dim());
    report.dim("#(H,A)", big.dim());
    report.dim("A#H*", smash.dim());

    // (i) γ(φ)(h) = φ(1 ⊗ S⁻¹h), inverse δ
    let gamma = map_from_dual(c, &right, &sinv);
    let d = delta(c, &right)?;
    let n = right.dim();
    report.check("delta_inverts_gamma", gamma.cols() == d.rows() && d.mul(&gamma).is_identity() && gamma.mul(&d).is_identity(), || {
        "δ is not a two-sided inverse of γ".into()
    });
    report.certificates.push(RingIsoCertificate::certify(
        "γ: (A⊗H)* → #(H,A)",
        right.algebra(),
        &big,
        gamma,
        MapKind::Multiplicative,
    ));

    // (ii) γ'(φ)(h) = φ(1 ⊗ h), inverse δ'(ζ)(a⊗h) = aζ(h)
    let id_h = Matrix::identity(f, c.dim_h());
    let gamma_p = map_from_dual(c, &left, &id_h);
    let mut dp_cols = Vec::with_capacity(n);
    for b in 0..big_op.dim() {
        let (ea, h) = (b / c.dim_h(), b % c.dim_h());
        let mut func = Matrix::zeros(f, c.dim_a(), g.coring.dim());
        for i in 0..c.dim_a() {
            let v = c.algebra().basis_product(i, ea);
            for (row, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    func.set(row, i * c.dim_h() + h, x.clone());
                }
            }
        }
        dp_cols.push(left.coords_of(&func).ok_or_else(|| Error::IllDefined("δ'(ζ) is not left A-linear".into()))?);
    }
    let dp = Matrix::from_columns(f, left.dim(), &dp_cols);
    report.check("delta_prime_inverts_gamma_prime", dp.mul(&gamma_p).is_identity() && gamma_p.mul(&dp).is_identity(), || {
        "δ' is not a two-sided inverse of γ'".into()
    });
    report.certificates.push(RingIsoCertificate::certify(
        "γ': *(A⊗H) → #(H^op,A^op)^op",
        left.algebra(),
        &big_op,
        gamma_p.clone(),
        MapKind::Multiplicative,
    ));

    // (iii) the twist
    let twist = twist_matrix(c)?;
    report.certificates.push(RingIsoCertificate::certify(
        "twist: A#H* → (A^op#H^{*cop})^op",
        &smash,
        &smash_op,
        twist.clone(),
        MapKind::Multiplicative,
    ));

    // (iv) Φ = twist⁻¹ ∘ (#(H^op,A^op)^op → (A^op#H^{*cop})^op) ∘ γ', the middle map being the identity matrix
    let phi_map = twist.invert()?.mul(&gamma_p);
    let phi = RingIsoCertificate::certify("Φ: *(A⊗H) → A#H*", left.algebra(), &smash, phi_map, MapKind::Multiplicative);
    report.certificates.push(phi.clone());
    let duals = SmashDuals {
        coring: g,
        left,
        right,
        smash,
        phi,
    };
    Ok((report, duals))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instance;
    use crate::field::FieldSpec;

    #[test]
    fn t2_passes_on_core_instances() {
        for name in ["I1", "I2", "I3", "I4", "I5"] {
            let inst = instance(name, FieldSpec::Rationals).unwrap();
            let (report, duals) = verify_t2(&inst.comodule).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.first_failure());
            assert!(report.reverify());
            let n = inst.comodule.dim_a() * inst.comodule.dim_h();
            assert!(report.dimensions.iter().all(|d| d.value == n));
            assert_eq!(duals.phi.map.rank(), n);
        }
    }

    #[test]
    fn t2_over_finite_field() {
        let inst = instance("I3", FieldSpec::prime(7).unwrap()).unwrap();
        let (report, _) = verify_t2(&inst.comodule).unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn wrong_kind_yields_witness() {
        let inst = instance("I3", FieldSpec::Rationals).unwrap();
        let (report, _) = verify_t2(&inst.comodule).unwrap();
        let phi = report.certificates.last().unwrap();
        let anti = RingIsoCertificate::certify("anti", &phi.source, &phi.target, phi.map.clone(), MapKind::AntiMultiplicative);
        assert!(!anti.passed());
        assert!(anti.witness.is_some());
    }
}
