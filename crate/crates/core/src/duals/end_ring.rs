use crate::error::{Error, Result};
use crate::exactlin::{hom_from_vector, hom_to_vector, Matrix, Subspace, Vector};
use crate::field::FieldSpec;
use crate::hopf::Algebra;

/// A subalgebra of `End_k(V)` under composition `f·g = f ∘ g`, carried by a
/// subspace of `Hom_k(V, V)` in the row-major hom basis.
#[derive(Clone, Debug, PartialEq)]
pub struct EndRing {
    description: String,
    space_dim: usize,
    carrier: Subspace,
    algebra: Algebra,
}

impl EndRing {
    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.carrier.field()
    }

    /// The endomorphism with the given carrier coordinates.
    pub fn element(&self, coords: &[crate::Scalar]) -> Matrix {
        hom_from_vector(self.field(), self.space_dim, self.space_dim, &self.carrier.embed(coords))
            .expect("carrier lives in Hom_k(V, V)")
    }

    pub fn basis_matrix(&self, i: usize) -> Matrix {
        hom_from_vector(self.field(), self.space_dim, self.space_dim, &self.carrier.basis()[i])
            .expect("carrier lives in Hom_k(V, V)")
    }

    /// Carrier coordinates of an endomorphism, `None` if it is not in the ring.
    pub fn coords_of(&self, f: &Matrix) -> Option<Vector> {
        self.carrier.coords(&hom_to_vector(f))
    }
}

/// Builds the ring structure on `carrier ⊆ Hom_k(V, V)`, failing with `NotClosed`
/// if the carrier misses the identity or some composite of basis maps.
pub fn end_ring(space_dim: usize, carrier: Subspace, description: impl Into<String>) -> Result<EndRing> {
    let description = description.into();
    let field = carrier.field();
    assert_eq!(carrier.ambient_dim(), space_dim * space_dim, "carrier ambient dimension");
    let basis: Vec<Matrix> = carrier
        .basis()
        .iter()
        .map(|v| hom_from_vector(field, space_dim, space_dim, v))
        .collect::<Result<_>>()?;
    let n = basis.len();
    let unit = carrier
        .coords(&hom_to_vector(&Matrix::identity(field, space_dim)))
        .ok_or_else(|| Error::NotClosed(format!("{description}: identity map is missing")))?;
    let mut mul = Vec::with_capacity(n * n * n);
    for (i, f) in basis.iter().enumerate() {
        for (j, g) in basis.iter().enumerate() {
            let fg = hom_to_vector(&f.mul(g));
            let c = carrier.coords(&fg).ok_or_else(|| {
                Error::NotClosed(format!("{description}: basis maps {i} ∘ {j} leave the carrier"))
            })?;
            mul.extend(c);
        }
    }
    Ok(EndRing {
        description,
        space_dim,
        algebra: Algebra::new(field, n, mul, unit),
        carrier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic_group, group_algebra};
    use crate::exactlin::{module_homs, unit_vector, Subspace};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn end_of_free_rank_one_module_is_the_algebra() {
        let h = group_algebra(&cyclic_group(3), Q).unwrap();
        let a = h.algebra();
        let right: Vec<Matrix> = (0..3).map(|i| a.right_mult(&unit_vector(Q, 3, i))).collect();
        let carrier = module_homs(Q, &right, &right);
        let ring = end_ring(3, carrier, "End(A_A)").unwrap();
        assert_eq!(ring.dim(), 3);
        assert!(ring.algebra().check().passed());
        for i in 0..3 {
            let l = a.left_mult(&unit_vector(Q, 3, i));
            assert!(ring.coords_of(&l).is_some());
        }
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        // span of E_01 alone: no identity
        let v = hom_to_vector(&Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]));
        let carrier = Subspace::span(Q, 4, &[v]);
        assert!(matches!(end_ring(2, carrier, "x"), Err(Error::NotClosed(_))));
        // identity plus E_01 plus E_10 is not closed (E_01 E_10 = E_00)
        let vs: Vec<Vector> = [
            Matrix::identity(Q, 2),
            Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]),
            Matrix::from_i64(Q, &[&[0, 0], &[1, 0]]),
        ]
        .iter()
        .map(hom_to_vector)
        .collect();
        let carrier = Subspace::span(Q, 4, &vs);
        assert!(matches!(end_ring(2, carrier, "x"), Err(Error::NotClosed(_))));
    }
}
