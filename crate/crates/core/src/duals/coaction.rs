use super::DualRing;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::hopf::HopfAlgebra;
use crate::smash::ComoduleAlgebra;

/// `a # h* ↦ (a # h*₁) ⊗ h*₂` on `A#H*`, a right `H*`-coaction.
pub fn smash_coaction(h: &HopfAlgebra, dim_a: usize) -> Matrix {
    let f = h.field();
    let dh = h.dim();
    let n = dim_a * dh;
    let mut m = Matrix::zeros(f, n * dh, n);
    for i in 0..dim_a {
        for j in 0..dh {
            for p in 0..dh {
                for q in 0..dh {
                    let c = &h.algebra().basis_product(p, q)[j];
                    if !c.is_zero() {
                        m.set((i * dh + p) * dh + q, i * dh + j, c.clone());
                    }
                }
            }
        }
    }
    m
}

/// The coaction on `*C` pulled back along `phi: *C → A#H*`, as an `H*`-comodule algebra.
pub fn coaction_via(left: &DualRing, phi: &Matrix, h: &HopfAlgebra, dim_a: usize) -> Result<ComoduleAlgebra> {
    let k = h.dual();
    let inv = phi.invert()?;
    let lifted = inv.kron(&Matrix::identity(h.field(), h.dim()));
    let coaction = lifted.mul(&smash_coaction(h, dim_a)).mul(phi);
    Ok(ComoduleAlgebra::new(left.algebra().clone(), k, coaction))
}

/// `*(A⊗H)` as a right `H*`-comodule algebra, transported from `A#H*`.
pub fn comodule_on_left_dual(c: &ComoduleAlgebra) -> Result<ComoduleAlgebra> {
    let (_, duals) = crate::theorems::verify_t2(c)?;
    let phi = duals.phi.clone().into_result()?;
    let out = coaction_via(&duals.left, &phi.map, c.hopf(), c.dim_a())?;
    let report = out.check();
    match report.first_failure() {
        Some(f) => Err(Error::CertificateFailure(format!("transported coaction: {f}"))),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::instance;
    use crate::exactlin::{kron_vec, unit_vector};
    use crate::field::FieldSpec;

    #[test]
    fn transported_coaction_axioms() {
        for name in ["I1", "I3", "I4", "I5"] {
            let inst = instance(name, FieldSpec::Rationals).unwrap();
            let r = comodule_on_left_dual(&inst.comodule).unwrap();
            assert_eq!(r.dim_a(), inst.comodule.dim_a() * inst.comodule.dim_h());
            // counit law
            let k = r.hopf();
            for x in 0..r.dim_a() {
                let v = r.coact(&unit_vector(FieldSpec::Rationals, r.dim_a(), x));
                let mut back = vec![FieldSpec::Rationals.zero(); r.dim_a()];
                for (idx, c) in v.iter().enumerate() {
                    let e = k.coalgebra().counit()[idx % k.dim()].clone();
                    back[idx / k.dim()] = &back[idx / k.dim()] + &(c * &e);
                }
                assert_eq!(back, unit_vector(FieldSpec::Rationals, r.dim_a(), x));
            }
        }
    }

    #[test]
    fn over_the_ground_field_it_is_the_dual_comultiplication() {
        let inst = instance("I5", FieldSpec::Rationals).unwrap();
        let r = comodule_on_left_dual(&inst.comodule).unwrap();
        let (_, duals) = crate::theorems::verify_t2(&inst.comodule).unwrap();
        let k = inst.comodule.hopf().dual();
        // Φ identifies *C with H*, so Φ ⊗ id carries ρ to Δ_{H*}∘Φ
        let phi = &duals.phi.map;
        let lhs = phi.kron(&Matrix::identity(FieldSpec::Rationals, 4)).mul(r.coaction());
        let rhs = k.coalgebra().comul_map().mul(phi);
        assert_eq!(lhs, rhs);
        let one = kron_vec(&[FieldSpec::Rationals.one()], k.unit_vector());
        assert_eq!(phi.apply(r.algebra().unit()), one);
    }
}
